//! Expressions in `x` and `y`.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' integer)?
//! primary := integer | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! `^` binds tighter than unary minus, so `-x^2` is `-(x^2)`. Juxtaposition
//! is rejected; every product needs an explicit `*`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::operator::OperatorField2;
use crate::poly::Poly;
use crate::ratfunc::RationalFunction2;
use crate::rational::ExactRational;

/// Largest exponent literal and largest total degree of any intermediate.
pub const MAX_DEGREE: u32 = 256;
/// Deepest permitted nesting of parentheses and unary minus.
pub const MAX_DEPTH: usize = 256;
/// Longest accepted input, in tokens.
pub const MAX_TOKENS: usize = 16_384;

/// Byte range `start..end` in the source text.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    fn join(self, other: Span) -> Span {
        Span {
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at {}..{}: expected {expected}", span.start, span.end)]
    Syntax { span: Span, expected: String },
    #[error("division at {}..{} does not give a polynomial", span.start, span.end)]
    NonPolynomialDivision { span: Span },
    #[error("division by zero at {}..{}", span.start, span.end)]
    ZeroDenominator { span: Span },
    #[error("degree exceeds {limit} at {}..{}", span.start, span.end)]
    DegreeTooLarge { span: Span, limit: u32 },
    #[error("nesting deeper than {limit} at {}..{}", span.start, span.end)]
    TooDeeplyNested { span: Span, limit: usize },
    #[error("input longer than {limit} tokens")]
    TooLong { span: Span, limit: usize },
}

impl ParseError {
    pub fn span(&self) -> Span {
        match self {
            ParseError::Syntax { span, .. }
            | ParseError::NonPolynomialDivision { span }
            | ParseError::ZeroDenominator { span }
            | ParseError::DegreeTooLarge { span, .. }
            | ParseError::TooDeeplyNested { span, .. }
            | ParseError::TooLong { span, .. } => *span,
        }
    }
}

/// Failure to parse one of the four operator entries (row-major index).
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("entry {entry}: {error}")]
pub struct OperatorParseError {
    pub entry: usize,
    pub error: ParseError,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExprKind {
    Constant(BigInt),
    X,
    Y,
    Add,
    Sub,
    Neg,
    Mul,
    Div,
    Pow(u32),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExprAst {
    pub kind: ExprKind,
    pub children: Vec<ExprAst>,
    pub span: Span,
}

impl ExprAst {
    fn leaf(kind: ExprKind, span: Span) -> Self {
        ExprAst {
            kind,
            children: Vec::new(),
            span,
        }
    }

    fn node(kind: ExprKind, children: Vec<ExprAst>) -> Self {
        let span = children
            .iter()
            .map(|c| c.span)
            .reduce(Span::join)
            .expect("operator node has children");
        ExprAst {
            kind,
            children,
            span,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    X,
    Y,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn syntax(span: Span, expected: &str) -> ParseError {
    ParseError::Syntax {
        span,
        expected: String::from(expected),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                let n = BigInt::parse_bytes(digits.as_bytes(), 10).expect("ascii digits");
                out.push((Tok::Int(n), Span { start, end: i }));
                continue;
            }
            b'x' => Tok::X,
            b'y' => Tok::Y,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let width = text[start..].chars().next().map_or(1, char::len_utf8);
                return Err(syntax(
                    Span {
                        start,
                        end: start + width,
                    },
                    "a number, 'x', 'y', an operator or a parenthesis",
                ));
            }
        };
        i += 1;
        out.push((tok, Span { start, end: i }));
    }
    if out.len() > MAX_TOKENS {
        let span = out[MAX_TOKENS].1;
        return Err(ParseError::TooLong {
            span: Span {
                start: span.start,
                end: text.len(),
            },
            limit: MAX_TOKENS,
        });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    len: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> Span {
        match self.toks.get(self.pos) {
            Some((_, s)) => *s,
            None => Span {
                start: self.len,
                end: self.len,
            },
        }
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        self.pos += 1;
        t
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::TooDeeplyNested {
                span: self.here(),
                limit: MAX_DEPTH,
            });
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let kind = match self.peek() {
                Some(Tok::Plus) => ExprKind::Add,
                Some(Tok::Minus) => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = ExprAst::node(kind, vec![lhs, rhs]);
        }
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let kind = match self.peek() {
                Some(Tok::Star) => ExprKind::Mul,
                Some(Tok::Slash) => ExprKind::Div,
                Some(Tok::Int(_) | Tok::X | Tok::Y | Tok::LParen) => {
                    return Err(syntax(
                        self.here(),
                        "'*' before this factor (implicit multiplication is not allowed)",
                    ))
                }
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = ExprAst::node(kind, vec![lhs, rhs]);
        }
    }

    fn unary(&mut self) -> Result<ExprAst, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            let (_, span) = self.bump();
            self.enter()?;
            let inner = self.unary()?;
            self.depth -= 1;
            let span = span.join(inner.span);
            return Ok(ExprAst {
                kind: ExprKind::Neg,
                children: vec![inner],
                span,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<ExprAst, ParseError> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let span = self.here();
        match self.peek() {
            Some(Tok::Int(n)) => {
                let exp = u32::try_from(n.clone())
                    .ok()
                    .filter(|&e| e <= MAX_DEGREE)
                    .ok_or(ParseError::DegreeTooLarge {
                        span,
                        limit: MAX_DEGREE,
                    })?;
                self.bump();
                let span = base.span.join(span);
                if self.peek() == Some(&Tok::Caret) {
                    return Err(syntax(self.here(), "no second '^' (use parentheses)"));
                }
                Ok(ExprAst {
                    kind: ExprKind::Pow(exp),
                    children: vec![base],
                    span,
                })
            }
            _ => Err(syntax(span, "a nonnegative integer exponent")),
        }
    }

    fn primary(&mut self) -> Result<ExprAst, ParseError> {
        let span = self.here();
        let Some(tok) = self.peek().cloned() else {
            return Err(syntax(span, "an expression"));
        };
        match tok {
            Tok::Int(n) => {
                self.bump();
                Ok(ExprAst::leaf(ExprKind::Constant(n), span))
            }
            Tok::X => {
                self.bump();
                Ok(ExprAst::leaf(ExprKind::X, span))
            }
            Tok::Y => {
                self.bump();
                Ok(ExprAst::leaf(ExprKind::Y, span))
            }
            Tok::LParen => {
                self.bump();
                self.enter()?;
                let inner = self.expr()?;
                self.depth -= 1;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(syntax(self.here(), "')'"));
                }
                let (_, close) = self.bump();
                Ok(ExprAst {
                    span: span.join(close),
                    ..inner
                })
            }
            _ => Err(syntax(span, "an expression")),
        }
    }
}

/// Parses `text` into a syntax tree.
pub fn parse_ast(text: &str) -> Result<ExprAst, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        len: text.len(),
        depth: 0,
    };
    let ast = p.expr()?;
    if p.pos < p.toks.len() {
        let expected = if p.peek() == Some(&Tok::RParen) {
            "end of input (unbalanced ')')"
        } else {
            "an operator or end of input"
        };
        return Err(syntax(p.here(), expected));
    }
    Ok(ast)
}

fn check_degree(p: Option<u32>, span: Span) -> Result<(), ParseError> {
    match p {
        Some(d) if d > MAX_DEGREE => Err(ParseError::DegreeTooLarge {
            span,
            limit: MAX_DEGREE,
        }),
        _ => Ok(()),
    }
}

fn degree_sum(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    Some(a? + b?)
}

fn is_binary(kind: &ExprKind) -> bool {
    matches!(
        kind,
        ExprKind::Add | ExprKind::Sub | ExprKind::Mul | ExprKind::Div
    )
}

/// Evaluates a left-associative chain without recursing down its spine.
fn fold_chain<T>(
    ast: &ExprAst,
    eval: fn(&ExprAst) -> Result<T, ParseError>,
    apply: fn(&ExprAst, T, T) -> Result<T, ParseError>,
) -> Result<T, ParseError> {
    let mut spine = Vec::new();
    let mut cur = ast;
    while is_binary(&cur.kind) {
        spine.push(cur);
        cur = &cur.children[0];
    }
    let mut acc = eval(cur)?;
    for node in spine.iter().rev() {
        let rhs = eval(&node.children[1])?;
        acc = apply(node, acc, rhs)?;
    }
    Ok(acc)
}

fn apply_poly(node: &ExprAst, a: Poly, b: Poly) -> Result<Poly, ParseError> {
    Ok(match node.kind {
        ExprKind::Add => &a + &b,
        ExprKind::Sub => &a - &b,
        ExprKind::Mul => {
            check_degree(degree_sum(a.degree(), b.degree()), node.span)?;
            &a * &b
        }
        _ => {
            if b.is_zero() {
                return Err(ParseError::ZeroDenominator { span: node.span });
            }
            a.exact_div(&b)
                .map_err(|_| ParseError::NonPolynomialDivision { span: node.span })?
        }
    })
}

fn eval_poly(ast: &ExprAst) -> Result<Poly, ParseError> {
    Ok(match &ast.kind {
        ExprKind::Constant(n) => Poly::constant(ExactRational::from_bigint(n.clone())),
        ExprKind::X => Poly::x(),
        ExprKind::Y => Poly::y(),
        ExprKind::Neg => -&eval_poly(&ast.children[0])?,
        ExprKind::Pow(e) => {
            let a = eval_poly(&ast.children[0])?;
            check_degree(a.degree().map(|d| d.saturating_mul(*e)), ast.span)?;
            a.pow(*e)
        }
        _ => fold_chain(ast, eval_poly, apply_poly)?,
    })
}

fn rational_degree(r: &RationalFunction2) -> Option<u32> {
    degree_sum(r.num().degree(), r.den().degree())
}

fn apply_rational(
    node: &ExprAst,
    a: RationalFunction2,
    b: RationalFunction2,
) -> Result<RationalFunction2, ParseError> {
    Ok(match node.kind {
        ExprKind::Add => &a + &b,
        ExprKind::Sub => &a - &b,
        ExprKind::Mul => {
            check_degree(degree_sum(rational_degree(&a), rational_degree(&b)), node.span)?;
            &a * &b
        }
        _ => {
            check_degree(degree_sum(rational_degree(&a), rational_degree(&b)), node.span)?;
            a.checked_div(&b)
                .ok_or(ParseError::ZeroDenominator { span: node.span })?
        }
    })
}

fn eval_rational(ast: &ExprAst) -> Result<RationalFunction2, ParseError> {
    Ok(match &ast.kind {
        ExprKind::Constant(_) | ExprKind::X | ExprKind::Y => {
            RationalFunction2::from_poly(eval_poly(ast)?)
        }
        ExprKind::Neg => -eval_rational(&ast.children[0])?,
        ExprKind::Pow(e) => {
            let a = eval_rational(&ast.children[0])?;
            check_degree(rational_degree(&a).map(|d| d.saturating_mul(*e)), ast.span)?;
            a.pow(*e)
        }
        _ => fold_chain(ast, eval_rational, apply_rational)?,
    })
}

/// Parses a polynomial; `/` must divide exactly.
pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    eval_poly(&parse_ast(text)?)
}

/// Parses a rational function, stored reduced.
pub fn parse_rational(text: &str) -> Result<RationalFunction2, ParseError> {
    eval_rational(&parse_ast(text)?)
}

/// Parses four row-major entries `[[a, b], [c, d]]`.
pub fn parse_operator(texts: [&str; 4]) -> Result<OperatorField2, OperatorParseError> {
    let mut entries: Vec<RationalFunction2> = Vec::with_capacity(4);
    for (entry, text) in texts.iter().enumerate() {
        entries.push(parse_rational(text).map_err(|error| OperatorParseError { entry, error })?);
    }
    let [a, b, c, d]: [RationalFunction2; 4] = entries.try_into().expect("four entries");
    Ok(OperatorField2::new(a, b, c, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::from_ratio(n, d).unwrap()
    }

    #[test]
    fn parses_documented_examples() {
        let p = parse_poly("y^3 + x^2/4").unwrap();
        assert_eq!(p.coeff(0, 3), q(1, 1));
        assert_eq!(p.coeff(2, 0), q(1, 4));
        assert_eq!(p.num_terms(), 2);
        assert!(parse_poly("0").unwrap().is_zero());
        let p = parse_poly("x^2*y - (1/2)*y").unwrap();
        assert_eq!(p.coeff(2, 1), q(1, 1));
        assert_eq!(p.coeff(0, 1), q(-1, 2));
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        assert_eq!(parse_poly("-x^2").unwrap(), -&Poly::x().pow(2));
        assert_eq!(parse_poly("(-x)^2").unwrap(), Poly::x().pow(2));
        assert_eq!(parse_poly("--x").unwrap(), Poly::x());
        assert_eq!(parse_poly("2-3-4").unwrap(), Poly::integer(-5));
        assert_eq!(parse_poly("12/2/3").unwrap(), Poly::integer(2));
    }

    #[test]
    fn rational_examples() {
        let r = parse_rational("y/(y^2)").unwrap();
        assert_eq!(r.to_string(), "(1)/(y)");
        let r = parse_rational("(x^2 - y^2)/(x - y)").unwrap();
        assert_eq!(r.as_poly(), Some(&(&Poly::x() + &Poly::y())));
        assert!(matches!(
            parse_rational("1/0"),
            Err(ParseError::ZeroDenominator { .. })
        ));
    }

    #[test]
    fn errors_carry_spans() {
        match parse_poly("2x") {
            Err(ParseError::Syntax { span, .. }) => assert_eq!(span, Span { start: 1, end: 2 }),
            other => panic!("unexpected {other:?}"),
        }
        match parse_poly("x/y") {
            Err(ParseError::NonPolynomialDivision { span }) => {
                assert_eq!(span, Span { start: 0, end: 3 })
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_poly("(x + 1") {
            Err(ParseError::Syntax { span, .. }) => assert_eq!(span, Span { start: 6, end: 6 }),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_poly("x ^ y"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("x^2^3"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("+x"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("z"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly(""), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("x)"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("x^1000"), Err(ParseError::DegreeTooLarge { .. })));
        assert!(matches!(
            parse_poly("(x^200)*(y^200)"),
            Err(ParseError::DegreeTooLarge { .. })
        ));
        let long = "x".to_string() + &" + x".repeat(8000);
        assert_eq!(parse_poly(&long).unwrap(), Poly::x().scale(&q(8001, 1)));
        let too_long = "x".to_string() + &" + x".repeat(9000);
        assert!(matches!(parse_poly(&too_long), Err(ParseError::TooLong { .. })));
        let deep = "(".repeat(1000) + "x" + &")".repeat(1000);
        assert!(matches!(parse_poly(&deep), Err(ParseError::TooDeeplyNested { .. })));
        assert!(matches!(parse_poly("é"), Err(ParseError::Syntax { span: Span { start: 0, end: 2 }, .. })));
    }

    #[test]
    fn operator_entries_report_their_index() {
        let op = parse_operator(["x", "2*y", "y/2", "0"]).unwrap();
        assert_eq!(op.c().to_string(), "1/2*y");
        let err = parse_operator(["x", "1", "y+", "0"]).unwrap_err();
        assert_eq!(err.entry, 2);
    }
}
