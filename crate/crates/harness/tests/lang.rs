use gorenstein_harness::lang::ast::*;
use gorenstein_harness::lang::{parse_session, pretty, resolve};
use gorenstein_harness::{HarnessError, SHIPPED};
use proptest::prelude::*;

fn pos(line: usize, col: usize) -> Pos {
    Pos { line, col }
}

#[test]
fn parses_the_grammar() {
    let src = "# comment\nring R = GF(101)[x, y] / (x^2, x*y);\nmap f : R -> R = [x, 0];\n\
               module M over R = coker [[x, y], [0, x]] degrees [0, 1];\nprime_test E = matlis_trunc(R, 2);\n";
    let s = parse_session(src).unwrap();
    assert_eq!(s.statements.len(), 4);
    let Statement::Ring(r) = &s.statements[0].statement else { panic!("ring") };
    assert_eq!(r.field, FieldSpec::Prime(101));
    assert_eq!(r.vars, ["x", "y"]);
    assert_eq!(r.relations.iter().map(|e| e.text.as_str()).collect::<Vec<_>>(), ["x^2", "x*y"]);
    assert_eq!(s.statements[0].pos, pos(2, 1));
    let Statement::Module(m) = &s.statements[2].statement else { panic!("module") };
    assert_eq!(m.rows.len(), 2);
    assert_eq!(m.degrees, Some(vec![0, 1]));
    let Statement::PrimeTest(p) = &s.statements[3].statement else { panic!("prime test") };
    assert_eq!(p.t, 2);
}

#[test]
fn quotient_and_degrees_are_optional() {
    let s = parse_session("ring S = QQ[t]; module M over S = coker [[t]];").unwrap();
    let Statement::Ring(r) = &s.statements[0].statement else { panic!("ring") };
    assert!(r.relations.is_empty());
    let Statement::Module(m) = &s.statements[1].statement else { panic!("module") };
    assert_eq!(m.degrees, None);
}

#[test]
fn parses_expectations_and_localizations() {
    let src = "expect betti(N) = [1, 2, 2] derived \"hand\";\nexpect depth(phi, N) = -inf trivial \"zero\";\n\
               global X = p K + T;\nlocalize X at m = p K;";
    let s = parse_session(src).unwrap();
    let Statement::Expect(e) = &s.statements[0].statement else { panic!("expect") };
    assert_eq!(e.value, Value::List(vec![1, 2, 2]));
    assert_eq!(e.provenance, Provenance::Derived);
    let Statement::Expect(e) = &s.statements[1].statement else { panic!("expect") };
    assert_eq!(e.args, ["phi", "N"]);
    assert_eq!(e.value, Value::NegInf);
    let Statement::Global(g) = &s.statements[2].statement else { panic!("global") };
    assert_eq!(g.summands[0], Summand { map: Some("p".into()), module: "K".into() });
    assert_eq!(g.summands[1], Summand { map: None, module: "T".into() });
}

#[test]
fn errors_carry_positions() {
    let e = parse_session("ring R = GF(101)[x]\nmodule").unwrap_err();
    assert_eq!(e.pos, pos(2, 1));
    assert!(e.expected.iter().any(|x| x.contains(';')), "{e}");

    let e = parse_session("ring R = ZZ[x];").unwrap_err();
    assert_eq!(e.pos, pos(1, 10));

    let e = parse_session("module M over R = coker [[x, y];").unwrap_err();
    assert_eq!(e.pos.line, 1);
    assert!(e.pos.col > 25, "{e}");
}

#[test]
fn semantic_errors_carry_positions() {
    let s = parse_session("ring R = QQ[x];\nmodule M over S = coker [[x]];").unwrap();
    match resolve(&s, None) {
        Err(HarnessError::Semantic { pos: p, object, .. }) => {
            assert_eq!(p, pos(2, 1));
            assert_eq!(object, "M");
        }
        other => panic!("{other:?}"),
    }
    let s = parse_session("ring R = QQ[x, y] / (x^2 + y);").unwrap();
    assert!(matches!(resolve(&s, None), Err(HarnessError::Semantic { .. })));
    let s = parse_session("ring R = QQ[x];\nmodule M over R = coker [[x + z]];").unwrap();
    match resolve(&s, None) {
        Err(HarnessError::Semantic { pos: p, .. }) => assert_eq!(p.line, 2),
        other => panic!("{other:?}"),
    }
    let s = parse_session("ring R = QQ[x];\nring R = QQ[y];").unwrap();
    assert!(matches!(resolve(&s, None), Err(HarnessError::Semantic { .. })));
}

#[test]
fn shipped_fixtures_round_trip() {
    for (name, src) in SHIPPED {
        let s = parse_session(src).unwrap_or_else(|e| panic!("{name}: {e}"));
        let again = parse_session(&pretty::session(&s)).unwrap();
        assert_eq!(s, again, "{name}");
        assert_eq!(pretty::session(&again), pretty::session(&s));
    }
}

fn ident() -> impl Strategy<Value = String> {
    "[A-Za-z_][A-Za-z0-9_]{0,5}".prop_filter("keyword", |s| {
        !matches!(
            s.as_str(),
            "ring"
                | "map"
                | "module"
                | "prime_test"
                | "expect"
                | "global"
                | "localize"
                | "at"
                | "over"
                | "coker"
                | "degrees"
                | "matlis_trunc"
                | "QQ"
                | "GF"
                | "literature"
                | "derived"
                | "trivial"
                | "inf"
                | "unknown"
                | "true"
                | "false"
        )
    })
}

fn expr() -> impl Strategy<Value = Expr> {
    let atom = prop_oneof![
        "[a-z]".prop_map(String::from),
        (0u32..200).prop_map(|n| n.to_string()),
        ("[a-z]", 1u32..5).prop_map(|(v, e)| format!("{v}^{e}")),
    ];
    prop::collection::vec((atom, prop_oneof![Just("+"), Just("-"), Just("*")]), 1..4).prop_map(|parts| {
        let mut s = String::new();
        for (i, (a, op)) in parts.iter().enumerate() {
            if i > 0 {
                s.push_str(op);
            }
            s.push_str(a);
        }
        Expr::new(&s, Pos::default())
    })
}

fn value() -> impl Strategy<Value = Value> {
    prop_oneof![
        (-5i64..50).prop_map(Value::Int),
        Just(Value::NegInf),
        Just(Value::PosInf),
        Just(Value::Unknown),
        any::<bool>().prop_map(Value::Bool),
        prop::collection::vec(0i64..300, 0..6).prop_map(Value::List),
    ]
}

fn summand() -> impl Strategy<Value = Summand> {
    (prop::option::of(ident()), ident()).prop_map(|(map, module)| Summand { map, module })
}

fn statement() -> impl Strategy<Value = Statement> {
    let field = prop_oneof![Just(FieldSpec::Rationals), (2u32..1000).prop_map(FieldSpec::Prime)];
    prop_oneof![
        (ident(), field, prop::collection::vec(ident(), 1..4), prop::collection::vec(expr(), 0..3))
            .prop_map(|(name, field, vars, relations)| Statement::Ring(RingDecl { name, field, vars, relations })),
        (ident(), ident(), ident(), prop::collection::vec(expr(), 1..4))
            .prop_map(|(name, source, target, images)| Statement::Map(MapDecl { name, source, target, images })),
        (
            ident(),
            ident(),
            prop::collection::vec(prop::collection::vec(expr(), 1..3), 1..3),
            prop::option::of(prop::collection::vec(-4i32..5, 1..3))
        )
            .prop_map(|(name, ring, rows, degrees)| Statement::Module(ModuleDecl {
                name,
                ring,
                rows,
                degrees
            })),
        (ident(), ident(), 1u32..9).prop_map(|(name, ring, t)| Statement::PrimeTest(PrimeTestDecl { name, ring, t })),
        (
            ident(),
            prop::collection::vec(ident(), 0..3),
            value(),
            prop_oneof![Just(Provenance::Literature), Just(Provenance::Derived), Just(Provenance::Trivial)],
            "[a-zA-Z0-9 ,.()^*+=-]{0,20}"
        )
            .prop_map(|(key, args, value, provenance, oracle)| Statement::Expect(Expectation {
                key,
                args,
                value,
                provenance,
                oracle
            })),
        (ident(), prop::collection::vec(summand(), 1..4))
            .prop_map(|(name, summands)| Statement::Global(GlobalDecl { name, summands })),
        (ident(), ident(), summand()).prop_map(|(global, prime, summand)| Statement::Localize(LocalizeDecl {
            global,
            prime,
            summand
        })),
    ]
}

proptest! {
    #[test]
    fn parse_pretty_parse_is_identity(stmts in prop::collection::vec(statement(), 0..8)) {
        let session = Session {
            statements: stmts.into_iter().map(|statement| Located { pos: Pos::default(), statement }).collect(),
        };
        let text = pretty::session(&session);
        let parsed = parse_session(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(&parsed, &session);
        prop_assert_eq!(pretty::session(&parsed), text);
    }
}
