//! Expression grammar, whitespace-insensitive:
//!
//! ```text
//! expr    := product ('#' product)*
//! product := primary ('x' primary)*
//! primary := 'S(' int ')' | 'Sg(' int ')' | 'T(' int ')' | 'RP3' | 'Heis' | 'KT' | '(' expr ')'
//! ```
//!
//! Error positions are 1-based character columns of the original text.

use std::str::FromStr;

use super::expr::{Atom, ManifoldExpr};
use crate::error::{Error, Result};

struct Parser {
    chars: Vec<(usize, char)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        let chars: Vec<(usize, char)> =
            text.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).map(|(i, c)| (i + 1, c)).collect();
        Parser { chars, at: 0, end: text.chars().count() + 1 }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.end, |&(p, _)| p)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            return Ok(());
        }
        match self.peek() {
            Some(found) => self.err(format!("expected '{c}', found '{found}'")),
            None => self.err(format!("expected '{c}', found end of input")),
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        let n = word.chars().count();
        let matches = self.chars.len() >= self.at + n
            && self.chars[self.at..self.at + n].iter().map(|&(_, c)| c).eq(word.chars());
        if matches {
            self.at += n;
        }
        matches
    }

    fn expr(&mut self) -> Result<ManifoldExpr> {
        let start = self.pos();
        let mut parts = vec![self.product()?];
        while self.eat('#') {
            let at = self.pos();
            let next = self.product()?;
            let (l, r) = (parts[0].dim(), next.dim());
            if l != r {
                return Err(Error::Syntax { pos: at, msg: Error::ConnSumDimension { left: l, right: r }.to_string() });
            }
            parts.push(next);
        }
        if parts.len() == 1 {
            return Ok(parts.pop().unwrap());
        }
        ManifoldExpr::conn_sum(parts).map_err(|e| Error::Syntax { pos: start, msg: e.to_string() })
    }

    fn product(&mut self) -> Result<ManifoldExpr> {
        let mut parts = vec![self.primary()?];
        while self.eat('x') {
            parts.push(self.primary()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { ManifoldExpr::Product(parts) })
    }

    fn primary(&mut self) -> Result<ManifoldExpr> {
        if self.eat('(') {
            let e = self.expr()?;
            self.expect(')')?;
            return Ok(e);
        }
        let start = self.pos();
        let atom = if self.keyword("Sg") {
            Atom::Surface(self.argument()?)
        } else if self.keyword("S") {
            Atom::Sphere(self.positive_argument(start, "sphere")?)
        } else if self.keyword("T") {
            Atom::Torus(self.positive_argument(start, "torus")?)
        } else if self.keyword("RP3") {
            Atom::RP3
        } else if self.keyword("Heis") {
            Atom::Heisenberg
        } else if self.keyword("KT") {
            Atom::KodairaThurston
        } else {
            return match self.peek() {
                Some(c) => self.err(format!("unexpected '{c}', expected an atom or '('")),
                None => self.err("unexpected end of input, expected an atom or '('"),
            };
        };
        Ok(atom.into())
    }

    fn argument(&mut self) -> Result<u32> {
        self.expect('(')?;
        let start = self.pos();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.at += 1;
        }
        if digits.is_empty() {
            return self.err("expected a non-negative integer");
        }
        let v = digits.parse().map_err(|_| Error::Syntax { pos: start, msg: format!("integer {digits} too large") })?;
        self.expect(')')?;
        Ok(v)
    }

    fn positive_argument(&mut self, start: usize, what: &str) -> Result<u32> {
        let v = self.argument()?;
        if v == 0 {
            return Err(Error::Syntax { pos: start, msg: format!("{what} dimension must be >= 1") });
        }
        Ok(v)
    }
}

pub fn parse_expr(text: &str) -> Result<ManifoldExpr> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return p.err(format!("unexpected '{c}' after expression"));
    }
    Ok(e)
}

impl FromStr for ManifoldExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            parse_expr("Sg(2) x S(1)").unwrap(),
            ManifoldExpr::Product(vec![ManifoldExpr::surface(2), ManifoldExpr::sphere(1)])
        );
        let e = parse_expr("T(2) x S(3) # T(3) x S(2)").unwrap();
        match &e {
            ManifoldExpr::ConnSum(c) => {
                assert_eq!(c.len(), 2);
                assert!(c.iter().all(|p| p.dim() == 5));
            }
            _ => panic!("expected a connected sum"),
        }
        let err = parse_expr("Sg(1) # S(1)").unwrap_err();
        assert!(err.to_string().contains("conn-sum dimension mismatch (2 vs 1)"), "{err}");
    }

    #[test]
    fn whitespace_and_parens() {
        assert_eq!(parse_expr(" ( S ( 1 ) x S(2) ) ").unwrap(), parse_expr("S(1)xS(2)").unwrap());
        assert_eq!(parse_expr("S(1 0)").unwrap(), ManifoldExpr::sphere(10));
        assert_eq!(parse_expr("Heis x S(1)").unwrap().dim(), 4);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_expr("S(1) x"), Err(Error::Syntax { pos: 7, msg: "unexpected end of input, expected an atom or '('".into() }));
        assert!(matches!(parse_expr("Q(1)"), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(parse_expr("S(0)"), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(parse_expr("(S(1)"), Err(Error::Syntax { pos: 6, .. })));
        assert!(matches!(parse_expr("S(1) S(1)"), Err(Error::Syntax { pos: 6, .. })));
        assert!(matches!(parse_expr("S(1) # S(1)"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn display_round_trip() {
        for s in ["(Sg(2) x S(1)) # (Sg(2) x S(1))", "Sg(2) x S(1) # T(3)", "(S(1) x S(1)) x S(1)", "RP3 # (RP3 # RP3)", "KT"] {
            let e = parse_expr(s).unwrap();
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e, "{s}");
        }
    }
}
