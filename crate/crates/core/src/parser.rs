//! The ring expression language.
//!
//! ```text
//! expr := term { "x" term } ;
//! term := "Z" nat | "GF4" | "T" nat "(" expr ")" | "M" nat "(" expr ")" | "TE" "(" expr ")" | "P" nat "(" expr ")" | "(" expr ")" ;
//! nat := nonzero digit followed by digits.
//! ```
//!
//! Whitespace between tokens is ignored and `x` is left-associative.
//! `Pm(R)` is `R[x]/(x^m)`.

use std::fmt;

use thiserror::Error;

use crate::error::Error;
use crate::ring::{gf4, Caps, FiniteRing};

/// The grammar, as shown in the CLI help.
pub const GRAMMAR: &str = r#"expr := term { "x" term } ;
term := "Z" nat | "GF4" | "T" nat "(" expr ")" | "M" nat "(" expr ")" | "TE" "(" expr ")" | "P" nat "(" expr ")" | "(" expr ")" ;
nat := nonzero digit followed by digits.

Whitespace is insignificant and "x" is left-associative.
Pm(R) denotes R[x]/(x^m); TE(R) is the trivial extension R ⋉ R."#;

/// Largest integer literal accepted.
pub const MAX_NAT: usize = 1 << 20;

const MAX_DEPTH: usize = 200;

/// Byte range `start..end` of the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Zmod(usize),
    Gf4,
    Product(Box<RingExpr>, Box<RingExpr>),
    Triangular(usize, Box<RingExpr>),
    FullMatrix(usize, Box<RingExpr>),
    TrivialExt(Box<RingExpr>),
    TruncPoly(usize, Box<RingExpr>),
}

/// A parsed expression. Equality compares structure only, not spans.
#[derive(Debug, Clone, Eq)]
pub struct RingExpr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for RingExpr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl RingExpr {
    pub fn new(kind: ExprKind) -> Self {
        RingExpr {
            kind,
            span: Span::default(),
        }
    }

    pub fn zmod(n: usize) -> Self {
        Self::new(ExprKind::Zmod(n))
    }

    pub fn product(l: RingExpr, r: RingExpr) -> Self {
        Self::new(ExprKind::Product(Box::new(l), Box::new(r)))
    }

    pub fn triangular(n: usize, inner: RingExpr) -> Self {
        Self::new(ExprKind::Triangular(n, Box::new(inner)))
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Zmod(n) => write!(f, "Z{n}"),
            ExprKind::Gf4 => f.write_str("GF4"),
            ExprKind::Product(l, r) => {
                if matches!(r.kind, ExprKind::Product(..)) {
                    write!(f, "{l} x ({r})")
                } else {
                    write!(f, "{l} x {r}")
                }
            }
            ExprKind::Triangular(n, e) => write!(f, "T{n}({e})"),
            ExprKind::FullMatrix(n, e) => write!(f, "M{n}({e})"),
            ExprKind::TrivialExt(e) => write!(f, "TE({e})"),
            ExprKind::TruncPoly(m, e) => write!(f, "P{m}({e})"),
        }
    }
}

/// Canonical text of an expression.
pub fn format(expr: &RingExpr) -> String {
    expr.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {byte_offset}: expected {expected}, found {found}")]
pub struct ParseError {
    pub byte_offset: usize,
    pub expected: String,
    pub found: String,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            byte_offset: self.pos,
            expected: expected.to_string(),
            found: match self.peek() {
                Some(c) => format!("'{c}'"),
                None => "end of input".to_string(),
            },
        }
    }

    fn eat(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("'{c}'")))
        }
    }

    fn nat(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('1'..='9') => {}
            _ => return Err(self.error("nonzero digit")),
        }
        let digits = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        let text = &self.src[start..start + digits];
        match text.parse::<usize>() {
            Ok(n) if n <= MAX_NAT => {
                self.pos += digits;
                Ok(n)
            }
            _ => Err(ParseError {
                byte_offset: start,
                expected: format!("number at most {MAX_NAT}"),
                found: text.to_string(),
            }),
        }
    }

    fn parenthesized(&mut self) -> Result<Box<RingExpr>, ParseError> {
        self.eat('(')?;
        let e = self.expr()?;
        self.eat(')')?;
        Ok(Box::new(e))
    }

    fn term(&mut self) -> Result<RingExpr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let kind = match self.peek() {
            Some('Z') => {
                self.pos += 1;
                ExprKind::Zmod(self.nat()?)
            }
            Some('G') => {
                if !self.src[self.pos..].starts_with("GF4") {
                    return Err(self.error("\"GF4\""));
                }
                self.pos += 3;
                ExprKind::Gf4
            }
            Some('T') => {
                self.pos += 1;
                self.skip_ws();
                if self.peek() == Some('E') {
                    self.pos += 1;
                    ExprKind::TrivialExt(self.parenthesized()?)
                } else {
                    let n = self.nat()?;
                    ExprKind::Triangular(n, self.parenthesized()?)
                }
            }
            Some('M') => {
                self.pos += 1;
                let n = self.nat()?;
                ExprKind::FullMatrix(n, self.parenthesized()?)
            }
            Some('P') => {
                self.pos += 1;
                let m = self.nat()?;
                ExprKind::TruncPoly(m, self.parenthesized()?)
            }
            Some('(') => {
                let inner = self.parenthesized()?;
                return Ok(RingExpr {
                    kind: inner.kind,
                    span: Span {
                        start,
                        end: self.pos,
                    },
                });
            }
            _ => return Err(self.error("ring term")),
        };
        Ok(RingExpr {
            kind,
            span: Span {
                start,
                end: self.pos,
            },
        })
    }

    fn expr(&mut self) -> Result<RingExpr, ParseError> {
        if self.depth >= MAX_DEPTH {
            return Err(self.error("shallower nesting"));
        }
        self.depth += 1;
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            if self.peek() != Some('x') {
                break;
            }
            self.pos += 1;
            let rhs = self.term()?;
            let span = Span {
                start: acc.span.start,
                end: rhs.span.end,
            };
            acc = RingExpr {
                kind: ExprKind::Product(Box::new(acc), Box::new(rhs)),
                span,
            };
        }
        self.depth -= 1;
        Ok(acc)
    }
}

/// Parses a ring expression, reporting the first error.
pub fn parse_ring_expr(text: &str) -> Result<RingExpr, ParseError> {
    let mut p = Parser {
        src: text,
        pos: 0,
        depth: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("'x' or end of input"));
    }
    Ok(e)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot build ring at bytes {span}: {source}")]
pub struct BuildError {
    pub span: Span,
    pub source: Error,
}

/// Builds the ring an expression denotes.
pub fn build(expr: &RingExpr, caps: &Caps) -> Result<FiniteRing, BuildError> {
    let at = |source: Error| BuildError {
        span: expr.span,
        source,
    };
    match &expr.kind {
        ExprKind::Zmod(n) => caps.zmod(*n).map_err(at),
        ExprKind::Gf4 => {
            if caps.order < 4 {
                return Err(at(Error::OrderOverflow { cap: caps.order }));
            }
            Ok(gf4())
        }
        ExprKind::Product(l, r) => {
            let (l, r) = (build(l, caps)?, build(r, caps)?);
            caps.product(&l, &r).map_err(at)
        }
        ExprKind::Triangular(n, e) => caps.upper_triangular(&build(e, caps)?, *n).map_err(at),
        ExprKind::FullMatrix(n, e) => caps.full_matrix(&build(e, caps)?, *n).map_err(at),
        ExprKind::TrivialExt(e) => caps.trivial_extension(&build(e, caps)?).map_err(at),
        ExprKind::TruncPoly(m, e) => caps.truncated_poly(&build(e, caps)?, *m).map_err(at),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Build(#[from] BuildError),
}

/// Parses and builds in one step.
pub fn ring_from_str(text: &str, caps: &Caps) -> Result<FiniteRing, ExprError> {
    Ok(build(&parse_ring_expr(text)?, caps)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> RingExpr {
        RingExpr::zmod(n)
    }

    #[test]
    fn examples() {
        assert_eq!(
            parse_ring_expr("T3(Z2)").unwrap(),
            RingExpr::triangular(3, z(2))
        );
        assert_eq!(
            parse_ring_expr("Z2 x Z9 x GF4").unwrap(),
            RingExpr::product(RingExpr::product(z(2), z(9)), RingExpr::new(ExprKind::Gf4))
        );
        let e = parse_ring_expr("T0(Z2)").unwrap_err();
        assert_eq!(e.byte_offset, 1);
        assert_eq!(e.found, "'0'");
        assert_eq!(parse_ring_expr("Zx").unwrap_err().byte_offset, 1);
        assert_eq!(parse_ring_expr("").unwrap_err().found, "end of input");
        assert_eq!(parse_ring_expr("Z2 Z3").unwrap_err().byte_offset, 3);
        assert_eq!(parse_ring_expr("Z2x").unwrap_err().byte_offset, 3);
        assert_eq!(parse_ring_expr("Z1048577").unwrap_err().byte_offset, 1);
    }

    #[test]
    fn spans() {
        let e = parse_ring_expr(" Z2 x T2(Z3)").unwrap();
        assert_eq!(e.span, Span { start: 1, end: 12 });
        let ExprKind::Product(l, r) = &e.kind else {
            panic!()
        };
        assert_eq!(l.span, Span { start: 1, end: 3 });
        assert_eq!(r.span, Span { start: 6, end: 12 });
    }

    #[test]
    fn formatting() {
        let e = RingExpr::triangular(2, RingExpr::product(z(2), z(3)));
        assert_eq!(format(&e), "T2(Z2 x Z3)");
        assert_eq!(format(&parse_ring_expr("  Z2xZ3 ").unwrap()), "Z2 x Z3");
        let nested = parse_ring_expr("Z2 x (Z3 x Z5)").unwrap();
        assert_eq!(format(&nested), "Z2 x (Z3 x Z5)");
        assert_eq!(format(&parse_ring_expr("((Z2) x Z3)").unwrap()), "Z2 x Z3");
        assert_eq!(
            format(&parse_ring_expr("T E ( P 2 ( Z3 ) )").unwrap()),
            "TE(P2(Z3))"
        );
    }

    #[test]
    fn building() {
        let caps = Caps::default();
        let r = ring_from_str("P2(Z3)", &caps).unwrap();
        assert_eq!(r.order(), 9);
        assert_eq!(ring_from_str("T3(Z4)", &caps).unwrap().order(), 4096);
        assert_eq!(
            ring_from_str("Z2 x (Z3 x Z5)", &caps).unwrap().name(),
            "Z2 x (Z3 x Z5)"
        );
        // 4^9 = 2^18, so the cap has to sit just below it.
        let small = Caps::with_order_cap((1 << 18) - 1);
        let err = ring_from_str("M3(Z4)", &small).unwrap_err();
        let ExprError::Build(b) = err else { panic!() };
        assert_eq!(b.source, Error::OrderOverflow { cap: (1 << 18) - 1 });
        assert_eq!(b.span, Span { start: 0, end: 6 });
    }

    #[test]
    fn deep_nesting_is_an_error() {
        let text = format!("{}Z2{}", "(".repeat(5000), ")".repeat(5000));
        assert!(parse_ring_expr(&text).is_err());
    }
}
