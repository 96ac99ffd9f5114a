//! Text format for polynomials and system files.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := expr ('+' | '-') term | term
//! term   := term '*' factor | factor
//! factor := '-' factor | base ['^' nat]
//! base   := int ['/' posint] | 'x' index | '(' expr ')'
//! ```
//!
//! Variables are `x1, x2, …`. Implicit multiplication is rejected.
//! A system file holds one polynomial per nonblank line; lines starting with
//! `#` are comments and the first directive line may be `nvars: k`.

use std::fmt::Write as _;

use num::{BigInt, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::{MaxSystem, Poly, Rational};

/// Largest exponent accepted by default, both for literal exponents and for
/// the degree of any subexpression.
pub const DEFAULT_EXPONENT_CAP: u32 = 1_000_000;

/// Variable indices beyond this are rejected.
const MAX_VARIABLE_INDEX: usize = u16::MAX as usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseOptions {
    pub exponent_cap: u32,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions { exponent_cap: DEFAULT_EXPONENT_CAP }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let pos = i;
        let simple = match b {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b'/' => Some(Tok::Slash),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, pos });
            i += 1;
            continue;
        }
        if b.is_ascii_whitespace() {
            i += 1;
        } else if b.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("ascii digits");
            out.push(Token { tok: Tok::Int(n), pos });
        } else if b == b'x' {
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let suffix = &text[start..i];
            let index = if !suffix.is_empty() && suffix.bytes().all(|c| c.is_ascii_digit()) {
                suffix.parse::<usize>().ok().filter(|k| (1..=MAX_VARIABLE_INDEX).contains(k))
            } else {
                None
            };
            match index {
                Some(k) => out.push(Token { tok: Tok::Var(k - 1), pos }),
                None => return Err(Error::BadVariableIndex { position: pos }),
            }
        } else {
            return Err(Error::SyntaxError { position: pos, expected: vec!["number, variable, operator or parenthesis".into()] });
        }
    }
    out.push(Token { tok: Tok::End, pos: text.len() });
    Ok(out)
}

#[derive(Debug)]
enum Expr {
    Lit(Rational),
    Var(usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32, usize),
}

struct Parser<'a> {
    toks: &'a [Token],
    at: usize,
    opts: ParseOptions,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn pos(&self) -> usize {
        self.toks[self.at].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::End {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T> {
        Err(Error::SyntaxError {
            position: self.pos(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    /// Failure after a complete operand; `'^'` is offered unless the operand
    /// already ended in an exponent, since powers do not chain.
    fn fail_after_operand<T>(&self, closer: &str) -> Result<T> {
        let after_power = self.at >= 2 && matches!(self.toks[self.at - 2].tok, Tok::Caret);
        let mut expected = vec!["'+'", "'-'", "'*'"];
        if !after_power {
            expected.push("'^'");
        }
        expected.push(closer);
        self.fail(&expected)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump().tok {
            Tok::Int(n) => {
                let cap = self.opts.exponent_cap;
                match n.to_u32().filter(|&k| k <= cap) {
                    Some(k) => Ok(Expr::Pow(Box::new(base), k, pos)),
                    None => Err(Error::ExponentOverflow { position: pos, exponent: n.to_string(), cap }),
                }
            }
            _ => Err(Error::SyntaxError { position: pos, expected: vec!["natural number".into()] }),
        }
    }

    fn base(&mut self) -> Result<Expr> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                if *self.peek() != Tok::Slash {
                    return Ok(Expr::Lit(Rational::from_integer(n)));
                }
                self.bump();
                let pos = self.pos();
                match self.bump().tok {
                    Tok::Int(d) if d.is_zero() => Err(Error::ZeroDenominator { position: pos }),
                    Tok::Int(d) => Ok(Expr::Lit(Rational::new(n, d))),
                    _ => Err(Error::SyntaxError { position: pos, expected: vec!["positive integer".into()] }),
                }
            }
            Tok::Var(k) => {
                self.bump();
                Ok(Expr::Var(k))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.fail_after_operand("')'");
                }
                self.bump();
                Ok(inner)
            }
            _ => self.fail(&["integer", "variable", "'('", "'-'"]),
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            Tok::End => Ok(()),
            _ => self.fail_after_operand("end of input"),
        }
    }
}

fn max_var(e: &Expr) -> Option<usize> {
    match e {
        Expr::Lit(_) => None,
        Expr::Var(k) => Some(*k),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => max_var(a).max(max_var(b)),
        Expr::Neg(a) | Expr::Pow(a, _, _) => max_var(a),
    }
}

/// Upper bound on the degree of a subexpression, checked against the cap.
fn degree_bound(e: &Expr, cap: u32) -> Result<u64> {
    Ok(match e {
        Expr::Lit(_) => 0,
        Expr::Var(_) => 1,
        Expr::Add(a, b) | Expr::Sub(a, b) => degree_bound(a, cap)?.max(degree_bound(b, cap)?),
        Expr::Mul(a, b) => degree_bound(a, cap)?.saturating_add(degree_bound(b, cap)?),
        Expr::Neg(a) => degree_bound(a, cap)?,
        Expr::Pow(a, k, pos) => {
            let d = degree_bound(a, cap)?.saturating_mul(u64::from(*k));
            if d > u64::from(cap) {
                return Err(Error::ExponentOverflow { position: *pos, exponent: d.to_string(), cap });
            }
            d
        }
    })
}

fn build(e: &Expr, nvars: usize) -> Poly {
    match e {
        Expr::Lit(q) => Poly::constant(nvars, q.clone()),
        Expr::Var(k) => Poly::var(nvars, *k),
        Expr::Add(a, b) => &build(a, nvars) + &build(b, nvars),
        Expr::Sub(a, b) => &build(a, nvars) - &build(b, nvars),
        Expr::Mul(a, b) => &build(a, nvars) * &build(b, nvars),
        Expr::Neg(a) => build(a, nvars).negate(),
        Expr::Pow(a, k, _) => build(a, nvars).pow(*k),
    }
}

/// Parse with the default exponent cap.
pub fn parse_poly(text: &str, nvars_hint: Option<usize>) -> Result<Poly> {
    parse_poly_with(text, nvars_hint, ParseOptions::default())
}

/// The result has `max(nvars_hint, largest variable index, 1)` variables.
pub fn parse_poly_with(text: &str, nvars_hint: Option<usize>, opts: ParseOptions) -> Result<Poly> {
    let toks = lex(text)?;
    let mut parser = Parser { toks: &toks, at: 0, opts };
    let expr = parser.expr()?;
    parser.finish()?;
    let degree = degree_bound(&expr, opts.exponent_cap)?;
    if degree > u64::from(opts.exponent_cap) {
        return Err(Error::ExponentOverflow { position: 0, exponent: degree.to_string(), cap: opts.exponent_cap });
    }
    let nvars = max_var(&expr).map_or(0, |k| k + 1).max(nvars_hint.unwrap_or(0)).max(1);
    Ok(build(&expr, nvars))
}

fn write_rational(out: &mut String, q: &Rational) {
    if q.denom().is_one() {
        write!(out, "{}", q.numer()).unwrap();
    } else {
        write!(out, "{}/{}", q.numer(), q.denom()).unwrap();
    }
}

/// Canonical text form: graded term order, exact coefficients; re-parseable.
pub fn print_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        let vars: Vec<String> = e
            .as_slice()
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(j, &k)| if k == 1 { format!("x{}", j + 1) } else { format!("x{}^{}", j + 1, k) })
            .collect();
        if vars.is_empty() {
            write_rational(&mut out, &mag);
        } else {
            if !mag.is_one() {
                write_rational(&mut out, &mag);
                out.push('*');
            }
            out.push_str(&vars.join("*"));
        }
    }
    out
}

/// Parse a system file into a max-system with a common variable count.
pub fn parse_system_file(text: &str) -> Result<MaxSystem<Rational>> {
    let mut declared: Option<usize> = None;
    let mut seen_content = false;
    let mut polys = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let line_start = offset;
        offset += raw.len();
        let line = raw.trim_end_matches(['\n', '\r']);
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let lead = line.len() - trimmed.len();
        if !seen_content {
            seen_content = true;
            if let Some(rest) = trimmed.strip_prefix("nvars:") {
                let value_at = line_start + lead + "nvars:".len();
                let k = rest.trim().parse::<usize>().ok().filter(|k| (1..=MAX_VARIABLE_INDEX).contains(k));
                match k {
                    Some(k) => declared = Some(k),
                    None => {
                        let ws = rest.len() - rest.trim_start().len();
                        return Err(Error::SyntaxError {
                            position: value_at + ws,
                            expected: vec!["positive integer".into()],
                        });
                    }
                }
                continue;
            }
        }
        let p = parse_poly(line, declared).map_err(|e| e.shift_position(line_start))?;
        polys.push(p);
    }
    if polys.is_empty() {
        return Err(Error::EmptySystem);
    }
    let nvars = polys.iter().map(Poly::nvars).max().unwrap_or(1).max(declared.unwrap_or(1));
    let polys = polys.iter().map(|p| p.with_nvars(nvars)).collect::<Result<Vec<_>>>()?;
    MaxSystem::new(polys)
}

/// System file text; the `nvars:` directive is emitted only when the members
/// do not already mention the last variable.
pub fn print_system(sys: &MaxSystem<Rational>) -> String {
    let used = sys.polys().iter().filter_map(Poly::max_var_used).max().map_or(0, |k| k + 1);
    let mut out = String::new();
    if used < sys.nvars() {
        writeln!(out, "nvars: {}", sys.nvars()).unwrap();
    }
    for p in sys.polys() {
        out.push_str(&print_poly(p));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ExpVec;
    use crate::scalar::{rat, rat_int};
    use proptest::prelude::*;

    fn poly(nvars: usize, terms: &[(&[u32], Rational)]) -> Poly {
        Poly::from_terms(nvars, terms.iter().map(|(e, c)| (ExpVec::new(e.to_vec()), c.clone()))).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_poly("x1 - x2^2", None).unwrap(),
            poly(2, &[(&[1, 0], rat_int(1)), (&[0, 2], rat_int(-1))])
        );
        assert!(parse_poly("(x1+1)^2 - x1^2 - 2*x1 - 1", None).unwrap().is_zero());
        assert_eq!(parse_poly("3/2*x1*x2^3", None).unwrap(), poly(2, &[(&[1, 3], rat(3, 2))]));
    }

    #[test]
    fn parse_details() {
        assert_eq!(parse_poly("5", None).unwrap().nvars(), 1);
        assert_eq!(parse_poly("x1", Some(4)).unwrap().nvars(), 4);
        assert_eq!(parse_poly("x3", Some(2)).unwrap().nvars(), 3);
        assert_eq!(parse_poly("-x1^2", None).unwrap(), poly(1, &[(&[2], rat_int(-1))]));
        assert_eq!(parse_poly("x1*-x1", None).unwrap(), poly(1, &[(&[2], rat_int(-1))]));
        assert_eq!(parse_poly("2/3^2", None).unwrap(), Poly::constant(1, rat(4, 9)));
        assert_eq!(parse_poly("  4/6 ", None).unwrap(), Poly::constant(1, rat(2, 3)));
        assert_eq!(parse_poly("--x1", None).unwrap(), Poly::var(1, 0));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let cases: &[(&str, &str, usize)] = &[
            ("x1 +", "SyntaxError", 4),
            ("2x1", "SyntaxError", 1),
            ("x0", "BadVariableIndex", 0),
            ("x1 + xa", "BadVariableIndex", 5),
            ("1/0", "ZeroDenominator", 2),
            ("x1^1000001", "ExponentOverflow", 3),
            ("(x1 + 1", "SyntaxError", 7),
            ("x1 ^ x2", "SyntaxError", 5),
            ("y1", "SyntaxError", 0),
        ];
        for (text, kind, pos) in cases {
            let err = parse_poly(text, None).unwrap_err();
            assert_eq!(err.kind(), *kind, "{text}");
            assert_eq!(err.position(), Some(*pos), "{text}");
        }
    }

    #[test]
    fn nested_powers_respect_the_cap() {
        let opts = ParseOptions { exponent_cap: 100 };
        assert!(parse_poly_with("(x1^10)^10", None, opts).is_ok());
        let err = parse_poly_with("(x1^10)^11", None, opts).unwrap_err();
        assert_eq!(err.kind(), "ExponentOverflow");
    }

    #[test]
    fn print_examples() {
        assert_eq!(print_poly(&poly(2, &[(&[1, 0], rat_int(1)), (&[0, 2], rat_int(-1))])), "x1 - x2^2");
        assert_eq!(print_poly(&Poly::zero(3)), "0");
        assert_eq!(print_poly(&poly(2, &[(&[1, 1], rat(5, 6))])), "5/6*x1*x2");
        assert_eq!(print_poly(&poly(1, &[(&[0], rat(-7, 2)), (&[3], rat_int(-1))])), "-7/2 - x1^3");
    }

    #[test]
    fn system_file_examples() {
        let sys = parse_system_file("# worst case\nx1^2\nx1 - x2^2").unwrap();
        let x1 = Poly::var(2, 0);
        let x2 = Poly::var(2, 1);
        assert_eq!(sys, MaxSystem::new(vec![x1.pow(2), &x1 - &x2.pow(2)]).unwrap());

        let padded = parse_system_file("nvars: 3\nx1").unwrap();
        assert_eq!(padded.nvars(), 3);
        assert_eq!(padded.len(), 1);
        assert_eq!(print_system(&padded), "nvars: 3\nx1\n");

        assert_eq!(parse_system_file(""), Err(Error::EmptySystem));
        assert_eq!(parse_system_file("# only\n\n   \n"), Err(Error::EmptySystem));
    }

    #[test]
    fn system_file_errors_are_file_offsets() {
        let err = parse_system_file("x1\nx2 +\n").unwrap_err();
        assert_eq!(err.position(), Some(7));
        let err = parse_system_file("nvars: zero\nx1").unwrap_err();
        assert_eq!(err.position(), Some(7));
    }

    #[test]
    fn unified_nvars_uses_largest_index() {
        let sys = parse_system_file("nvars: 2\nx1\nx4\n").unwrap();
        assert_eq!(sys.nvars(), 4);
        assert!(sys.polys().iter().all(|p| p.nvars() == 4));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn print_then_parse_round_trips(
            nvars in 1usize..=6,
            raw in prop::collection::vec(
                (prop::collection::vec(0u32..=8, 6), -50i64..=50, 1i64..=12),
                0..=20,
            ),
        ) {
            let terms = raw.into_iter().map(|(mut e, n, d)| {
                e.truncate(nvars);
                // keep total degree <= 8
                while e.iter().sum::<u32>() > 8 {
                    let j = e.iter().position(|&k| k > 0).unwrap();
                    e[j] -= 1;
                }
                (ExpVec::new(e), rat(n, d))
            });
            let p = Poly::from_terms(nvars, terms).unwrap();
            let text = print_poly(&p);
            prop_assert_eq!(parse_poly(&text, Some(nvars)).unwrap(), p);
        }
    }
}
