//! Recursive-descent parser with positioned errors.

use std::fmt;

use crate::lang::ast::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: Pos,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, found {}", self.pos, self.expected.join(" or "), self.found)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

struct Cursor<'a> {
    src: &'a str,
    offset: usize,
    pos: Pos,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, offset: 0, pos: Pos { line: 1, col: 1 } }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.offset..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.offset += c.len_utf8();
        if c == '\n' {
            self.pos.line += 1;
            self.pos.col = 1;
        } else {
            self.pos.col += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn found(&self) -> String {
        match self.peek() {
            None => "end of input".into(),
            Some(_) if self.rest().starts_with(|c: char| is_ident_start(c)) => {
                let word: String = self.rest().chars().take_while(|&c| is_ident_char(c)).collect();
                format!("'{word}'")
            }
            Some(c) => format!("'{c}'"),
        }
    }

    fn error<T>(&self, expected: &[&str]) -> PResult<T> {
        Err(ParseError {
            pos: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.found(),
        })
    }

    fn at(&mut self, token: &str) -> bool {
        self.skip_trivia();
        if !self.rest().starts_with(token) {
            return false;
        }
        let word = token.chars().last().is_some_and(is_ident_char);
        let next = self.rest()[token.len()..].chars().next();
        !(word && next.is_some_and(is_ident_char))
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.at(token) {
            for _ in token.chars() {
                self.bump();
            }
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> PResult<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.error(&[&format!("'{token}'")])
        }
    }

    fn ident(&mut self) -> PResult<String> {
        self.skip_trivia();
        if !self.peek().is_some_and(is_ident_start) {
            return self.error(&["identifier"]);
        }
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|&c| is_ident_char(c)) {
            s.push(c);
            self.bump();
        }
        Ok(s)
    }

    fn uint(&mut self) -> PResult<u64> {
        self.skip_trivia();
        let start = self.pos;
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        if s.is_empty() {
            return self.error(&["integer"]);
        }
        s.parse().map_err(|_| ParseError { pos: start, expected: vec!["integer below 2^64".into()], found: s })
    }

    fn int(&mut self) -> PResult<i64> {
        let neg = self.eat("-");
        let start = self.pos;
        let n = self.uint()?;
        let n = i64::try_from(n).map_err(|_| ParseError {
            pos: start,
            expected: vec!["integer below 2^63".into()],
            found: n.to_string(),
        })?;
        Ok(if neg { -n } else { n })
    }

    fn string(&mut self) -> PResult<String> {
        self.skip_trivia();
        if self.peek() != Some('"') {
            return self.error(&["string"]);
        }
        self.bump();
        let mut s = String::new();
        loop {
            match self.bump() {
                Some('"') => return Ok(s),
                Some('\n') | None => return self.error(&["closing '\"'"]),
                Some(c) => s.push(c),
            }
        }
    }

    /// Raw expression text up to a `,`, `]`, `)` or `;` outside parentheses.
    fn expr(&mut self) -> PResult<Expr> {
        self.skip_trivia();
        let start = self.pos;
        let begin = self.offset;
        let mut depth = 0usize;
        while let Some(c) = self.peek() {
            match c {
                '(' => depth += 1,
                ')' if depth > 0 => depth -= 1,
                ',' | ']' | ')' | ';' if depth == 0 => break,
                '#' | '\n' => break,
                _ => {}
            }
            self.bump();
        }
        let text = &self.src[begin..self.offset];
        if text.trim().is_empty() {
            return self.error(&["polynomial"]);
        }
        if depth > 0 {
            return self.error(&["')'"]);
        }
        Ok(Expr::new(text, start))
    }

    /// `item (, item)*` up to `close`, which is consumed; may be empty.
    fn list<T>(&mut self, close: &str, mut item: impl FnMut(&mut Self) -> PResult<T>) -> PResult<Vec<T>> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(close) {
                return Ok(out);
            }
            if !self.eat(",") {
                return self.error(&["','", &format!("'{close}'")]);
            }
        }
    }
}

/// Parses a whole session.
pub fn parse_session(src: &str) -> PResult<Session> {
    let mut c = Cursor::new(src);
    let mut statements = Vec::new();
    loop {
        c.skip_trivia();
        if c.peek().is_none() {
            return Ok(Session { statements });
        }
        let pos = c.pos;
        let statement = statement(&mut c)?;
        c.expect(";")?;
        statements.push(Located { pos, statement });
    }
}

fn statement(c: &mut Cursor) -> PResult<Statement> {
    const KEYWORDS: [&str; 7] = ["ring", "map", "module", "prime_test", "expect", "global", "localize"];
    if c.eat("ring") {
        ring(c)
    } else if c.eat("map") {
        map(c)
    } else if c.eat("module") {
        module(c)
    } else if c.eat("prime_test") {
        prime_test(c)
    } else if c.eat("expect") {
        expect(c)
    } else if c.eat("global") {
        let name = c.ident()?;
        c.expect("=")?;
        let mut summands = vec![summand(c)?];
        while c.eat("+") {
            summands.push(summand(c)?);
        }
        Ok(Statement::Global(GlobalDecl { name, summands }))
    } else if c.eat("localize") {
        let global = c.ident()?;
        c.expect("at")?;
        let prime = c.ident()?;
        c.expect("=")?;
        let summand = summand(c)?;
        Ok(Statement::Localize(LocalizeDecl { global, prime, summand }))
    } else {
        c.error(&KEYWORDS)
    }
}

fn ring(c: &mut Cursor) -> PResult<Statement> {
    let name = c.ident()?;
    c.expect("=")?;
    let field = if c.eat("QQ") {
        FieldSpec::Rationals
    } else if c.eat("GF") {
        c.expect("(")?;
        c.skip_trivia();
        let start = c.pos;
        let p = c.uint()?;
        let p = u32::try_from(p).map_err(|_| ParseError {
            pos: start,
            expected: vec!["prime below 2^31".into()],
            found: p.to_string(),
        })?;
        c.expect(")")?;
        FieldSpec::Prime(p)
    } else {
        return c.error(&["'QQ'", "'GF'"]);
    };
    c.expect("[")?;
    let vars = c.list("]", |c| c.ident())?;
    let relations = if c.eat("/") {
        c.expect("(")?;
        c.list(")", |c| c.expr())?
    } else {
        Vec::new()
    };
    Ok(Statement::Ring(RingDecl { name, field, vars, relations }))
}

fn map(c: &mut Cursor) -> PResult<Statement> {
    let name = c.ident()?;
    c.expect(":")?;
    let source = c.ident()?;
    c.expect("->")?;
    let target = c.ident()?;
    c.expect("=")?;
    c.expect("[")?;
    let images = c.list("]", |c| c.expr())?;
    Ok(Statement::Map(MapDecl { name, source, target, images }))
}

fn module(c: &mut Cursor) -> PResult<Statement> {
    let name = c.ident()?;
    c.expect("over")?;
    let ring = c.ident()?;
    c.expect("=")?;
    c.expect("coker")?;
    c.expect("[")?;
    let rows = c.list("]", |c| {
        c.expect("[")?;
        c.list("]", |c| c.expr())
    })?;
    let degrees = if c.eat("degrees") {
        c.expect("[")?;
        Some(c.list("]", |c| c.int().map(|d| d as i32))?)
    } else {
        None
    };
    Ok(Statement::Module(ModuleDecl { name, ring, rows, degrees }))
}

fn prime_test(c: &mut Cursor) -> PResult<Statement> {
    let name = c.ident()?;
    c.expect("=")?;
    c.expect("matlis_trunc")?;
    c.expect("(")?;
    let ring = c.ident()?;
    c.expect(",")?;
    c.skip_trivia();
    let start = c.pos;
    let t = c.uint()?;
    let t = u32::try_from(t).map_err(|_| ParseError {
        pos: start,
        expected: vec!["small integer".into()],
        found: t.to_string(),
    })?;
    c.expect(")")?;
    Ok(Statement::PrimeTest(PrimeTestDecl { name, ring, t }))
}

fn expect(c: &mut Cursor) -> PResult<Statement> {
    let key = c.ident()?;
    c.expect("(")?;
    let args = c.list(")", |c| c.ident())?;
    c.expect("=")?;
    let value = value(c)?;
    let provenance = if c.eat("literature") {
        Provenance::Literature
    } else if c.eat("derived") {
        Provenance::Derived
    } else if c.eat("trivial") {
        Provenance::Trivial
    } else {
        return c.error(&["'literature'", "'derived'", "'trivial'"]);
    };
    let oracle = c.string()?;
    Ok(Statement::Expect(Expectation { key, args, value, provenance, oracle }))
}

fn value(c: &mut Cursor) -> PResult<Value> {
    if c.eat("-inf") {
        Ok(Value::NegInf)
    } else if c.eat("+inf") || c.eat("inf") {
        Ok(Value::PosInf)
    } else if c.eat("unknown") {
        Ok(Value::Unknown)
    } else if c.eat("true") {
        Ok(Value::Bool(true))
    } else if c.eat("false") {
        Ok(Value::Bool(false))
    } else if c.eat("[") {
        Ok(Value::List(c.list("]", |c| c.int())?))
    } else if c.at("-") || c.peek().is_some_and(|ch| ch.is_ascii_digit()) {
        Ok(Value::Int(c.int()?))
    } else {
        c.error(&["integer", "'-inf'", "'+inf'", "'unknown'", "'true'", "'false'", "'['"])
    }
}

fn summand(c: &mut Cursor) -> PResult<Summand> {
    let first = c.ident()?;
    c.skip_trivia();
    if c.peek().is_some_and(is_ident_start) {
        let module = c.ident()?;
        Ok(Summand { map: Some(first), module })
    } else {
        Ok(Summand { map: None, module: first })
    }
}
