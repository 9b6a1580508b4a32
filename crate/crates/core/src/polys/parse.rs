//! Recursive-descent parser for the polynomial expression language.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{AssocPoly, LiePoly, Polynomial, Var};
use crate::scalar::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Lie,
    Assoc,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Expected(&'static str),
    UnknownGroupElement(String),
    Juxtaposition,
    Constant,
    ZeroDenominator,
    TrailingInput,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {position}: {}", describe(.kind))]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

fn describe(kind: &ParseErrorKind) -> String {
    match kind {
        ParseErrorKind::Expected(what) => alloc::format!("expected {}", what),
        ParseErrorKind::UnknownGroupElement(n) => alloc::format!("unknown group element '{}'", n),
        ParseErrorKind::Juxtaposition => "products of factors need associative mode".into(),
        ParseErrorKind::Constant => "constant terms need associative mode".into(),
        ParseErrorKind::ZeroDenominator => "zero denominator".into(),
        ParseErrorKind::TrailingInput => "unexpected trailing input".into(),
    }
}

enum Expr {
    Var(Var),
    Bracket(Vec<Expr>),
    /// coefficient times a product of factors; no factors means the unit
    Sum(Vec<(Rational, Vec<Expr>)>),
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    mode: Mode,
    names: &'a [String],
}

/// Parses `text`; decorations are resolved against `names`.
pub fn parse(text: &str, mode: Mode, names: &[String]) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
        mode,
        names,
    };
    let e = p.poly()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err(ParseErrorKind::TrailingInput));
    }
    Ok(match mode {
        Mode::Lie => Polynomial::Lie(lower_lie(&e)),
        Mode::Assoc => Polynomial::Assoc(lower_assoc(&e)),
    })
}

impl<'a> Parser<'a> {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { position: self.pos, kind }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        let mut negative = false;
        if self.eat(b'-') {
            negative = true;
        } else {
            self.eat(b'+');
        }
        loop {
            let (mut c, f) = self.term()?;
            if negative {
                c = -c;
            }
            terms.push((c, f));
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        Ok(Expr::Sum(terms))
    }

    fn term(&mut self) -> Result<(Rational, Vec<Expr>), ParseError> {
        let start = self.pos;
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.rational()?;
            Some(c)
        } else {
            None
        };
        let starred = coeff.is_some() && self.eat(b'*');
        let mut factors = Vec::new();
        while let Some(c) = self.peek() {
            if !matches!(c, b'x' | b'[' | b'(') {
                break;
            }
            if !factors.is_empty() && self.mode == Mode::Lie {
                return Err(self.err(ParseErrorKind::Juxtaposition));
            }
            factors.push(self.factor()?);
        }
        if factors.is_empty() {
            if coeff.is_none() || starred {
                return Err(self.err(ParseErrorKind::Expected("a variable, '[' or '('")));
            }
            if self.mode == Mode::Lie && !coeff.as_ref().is_some_and(|c| c.is_zero()) {
                return Err(ParseError {
                    position: start,
                    kind: ParseErrorKind::Constant,
                });
            }
        }
        Ok((coeff.unwrap_or_else(Rational::one), factors))
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(ParseErrorKind::Expected("an integer")));
        }
        let text = core::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num = self.integer()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.integer()?;
            if den.is_zero() {
                return Err(ParseError {
                    position: at,
                    kind: ParseErrorKind::ZeroDenominator,
                });
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let at = self.pos;
                let index: usize = self
                    .integer()?
                    .try_into()
                    .map_err(|_| ParseError {
                        position: at,
                        kind: ParseErrorKind::Expected("a variable index"),
                    })?;
                if index == 0 {
                    return Err(ParseError {
                        position: at,
                        kind: ParseErrorKind::Expected("a positive variable index"),
                    });
                }
                let mut deco = None;
                if self.s.get(self.pos) == Some(&b'^') {
                    self.pos += 1;
                    let start = self.pos;
                    while self.pos < self.s.len()
                        && (self.s[self.pos].is_ascii_alphanumeric() || matches!(self.s[self.pos], b'_' | b'^' | b'.'))
                    {
                        self.pos += 1;
                    }
                    if start == self.pos {
                        return Err(self.err(ParseErrorKind::Expected("a group element name")));
                    }
                    let name = core::str::from_utf8(&self.s[start..self.pos]).expect("ascii name");
                    match self.names.iter().position(|n| n == name) {
                        Some(g) => deco = Some(g),
                        None => {
                            return Err(ParseError {
                                position: start,
                                kind: ParseErrorKind::UnknownGroupElement(name.into()),
                            })
                        }
                    }
                }
                Ok(Expr::Var(Var::new(index, deco)))
            }
            Some(b'[') => {
                self.pos += 1;
                let mut args = alloc::vec![self.poly()?];
                while self.eat(b',') {
                    args.push(self.poly()?);
                }
                if args.len() < 2 {
                    return Err(self.err(ParseErrorKind::Expected("','")));
                }
                if !self.eat(b']') {
                    return Err(self.err(ParseErrorKind::Expected("']'")));
                }
                Ok(Expr::Bracket(args))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.poly()?;
                if !self.eat(b')') {
                    return Err(self.err(ParseErrorKind::Expected("')'")));
                }
                Ok(e)
            }
            _ => Err(self.err(ParseErrorKind::Expected("a variable, '[' or '('"))),
        }
    }
}

fn lower_lie(e: &Expr) -> LiePoly {
    match e {
        Expr::Var(v) => LiePoly::var(*v),
        Expr::Bracket(args) => {
            let mut acc = lower_lie(&args[0]);
            for a in &args[1..] {
                acc = acc.bracket(&lower_lie(a));
            }
            acc
        }
        Expr::Sum(terms) => {
            let mut acc = LiePoly::zero();
            for (c, f) in terms {
                // one factor, or none for a literal zero
                if let Some(x) = f.first() {
                    acc = acc.add(&lower_lie(x).scale(c));
                }
            }
            acc
        }
    }
}

fn lower_assoc(e: &Expr) -> AssocPoly {
    match e {
        Expr::Var(v) => AssocPoly::var(*v),
        Expr::Bracket(args) => {
            let mut acc = lower_assoc(&args[0]);
            for a in &args[1..] {
                acc = acc.commutator(&lower_assoc(a));
            }
            acc
        }
        Expr::Sum(terms) => {
            let mut acc = AssocPoly::zero();
            for (c, f) in terms {
                let mut prod = AssocPoly::unit();
                for x in f {
                    prod = prod.mul(&lower_assoc(x));
                }
                acc = acc.add(&prod.scale(c));
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::LieTree;
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn names() -> Vec<String> {
        vec!["0".to_string(), "1".to_string(), "psi".to_string(), "t^2".to_string()]
    }

    fn lie(text: &str) -> LiePoly {
        match parse(text, Mode::Lie, &names()).unwrap() {
            Polynomial::Lie(p) => p,
            _ => unreachable!(),
        }
    }

    #[test]
    fn decorated_bracket() {
        let p = lie("[x1^0, x2^0]");
        let t = LieTree::bracket(LieTree::Leaf(Var::new(1, Some(0))), LieTree::Leaf(Var::new(2, Some(0))));
        assert_eq!(p, LiePoly::monomial(t));
    }

    #[test]
    fn sums_inside_brackets_expand() {
        let p = lie("[x1 + x1^psi, x2 + x2^psi]");
        assert_eq!(p.len(), 4);
        assert_eq!(p.multilinear_degree(), Some(2));
    }

    #[test]
    fn long_brackets_are_left_normed() {
        let vars = [Var::plain(1), Var::plain(2), Var::plain(3)];
        assert_eq!(lie("[x1, x2, x3]"), LiePoly::monomial(LieTree::left_normed(&vars)));
        assert_eq!(lie("[x1, x2, x3]"), lie("[[x1, x2], x3]"));
    }

    #[test]
    fn coefficients_and_signs() {
        let p = lie("-1/2*[x1, x2] + 3*x1 - x2^t^2");
        let text = p.to_text(&names());
        assert_eq!(lie(&text), p);
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn associative_products_and_commutators() {
        let Polynomial::Assoc(p) = parse("[x1, x2]", Mode::Assoc, &names()).unwrap() else {
            unreachable!()
        };
        let Polynomial::Assoc(q) = parse("x1 x2 - x2 x1", Mode::Assoc, &names()).unwrap() else {
            unreachable!()
        };
        assert_eq!(p, q);
        let Polynomial::Assoc(r) = parse("2*(x1 + x2) x3", Mode::Assoc, &names()).unwrap() else {
            unreachable!()
        };
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("[x1, x2^phi]", Mode::Lie, &names()).unwrap_err();
        assert_eq!(e.position, 8);
        assert_eq!(e.kind, ParseErrorKind::UnknownGroupElement("phi".into()));
        let e = parse("x1 x2", Mode::Lie, &names()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Juxtaposition);
        let e = parse("[x1]", Mode::Lie, &names()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Expected("','"));
        let e = parse("[x1, x2] )", Mode::Lie, &names()).unwrap_err();
        assert_eq!(e, ParseError { position: 9, kind: ParseErrorKind::TrailingInput });
        assert_eq!(parse("2", Mode::Lie, &names()).unwrap_err().kind, ParseErrorKind::Constant);
        assert!(parse("1/0*x1", Mode::Lie, &names()).is_err());
    }
}
