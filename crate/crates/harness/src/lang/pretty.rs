//! Canonical rendering of a session; parsing the output gives back the same session.

use std::fmt::Write;

use crate::lang::ast::*;

fn exprs(xs: &[Expr]) -> String {
    xs.iter().map(|e| e.text.as_str()).collect::<Vec<_>>().join(", ")
}

fn summand(s: &Summand) -> String {
    match &s.map {
        Some(m) => format!("{m} {}", s.module),
        None => s.module.clone(),
    }
}

pub fn statement(s: &Statement) -> String {
    match s {
        Statement::Ring(d) => {
            let field = match d.field {
                FieldSpec::Rationals => "QQ".to_string(),
                FieldSpec::Prime(p) => format!("GF({p})"),
            };
            let mut out = format!("ring {} = {field}[{}]", d.name, d.vars.join(", "));
            if !d.relations.is_empty() {
                write!(out, " / ({})", exprs(&d.relations)).unwrap();
            }
            out
        }
        Statement::Map(d) => format!("map {} : {} -> {} = [{}]", d.name, d.source, d.target, exprs(&d.images)),
        Statement::Module(d) => {
            let rows: Vec<String> = d.rows.iter().map(|r| format!("[{}]", exprs(r))).collect();
            let mut out = format!("module {} over {} = coker [{}]", d.name, d.ring, rows.join(", "));
            if let Some(degs) = &d.degrees {
                let degs: Vec<String> = degs.iter().map(i32::to_string).collect();
                write!(out, " degrees [{}]", degs.join(", ")).unwrap();
            }
            out
        }
        Statement::PrimeTest(d) => format!("prime_test {} = matlis_trunc({}, {})", d.name, d.ring, d.t),
        Statement::Expect(e) => {
            format!("expect {}({}) = {} {} \"{}\"", e.key, e.args.join(", "), e.value, e.provenance, e.oracle)
        }
        Statement::Global(g) => {
            let parts: Vec<String> = g.summands.iter().map(summand).collect();
            format!("global {} = {}", g.name, parts.join(" + "))
        }
        Statement::Localize(l) => format!("localize {} at {} = {}", l.global, l.prime, summand(&l.summand)),
    }
}

/// One statement per line.
pub fn session(s: &Session) -> String {
    s.statements.iter().map(|l| format!("{};\n", statement(&l.statement))).collect()
}
