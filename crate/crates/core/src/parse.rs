//! Recursive-descent parser for the expression grammar used on the command
//! line and in the built-in worked examples.
//!
//! ```text
//! scalar := ['+'|'-'] sterm (('+'|'-') sterm)*
//! sterm  := sfactor (('*' | '/' | juxtaposition) sfactor)*
//! sfactor:= atom ['^' nat]
//! atom   := nat | var | '(' scalar ')'
//! form   := ['+'|'-'] fterm (('+'|'-') fterm)*
//! fterm  := [sterm] basis | sterm | '(' form ')'
//! basis  := dvar ('/\' dvar)*
//! var    := 'x' nat | 'x' | 'y' | 'z'   (x, y, z only in dimension 3)
//! ```
//!
//! `/\` is the wedge and `^` scalar exponentiation. Whitespace between
//! tokens never changes the meaning. Juxtaposition multiplies, so
//! `1/2 x^2` is `(1/2)*x^2`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::coeffs::{Polynomial, Rational, RationalFunction};
use crate::error::Error;
use crate::exterior::{DifferentialForm, IndexTuple};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(VarTok),
    Diff(VarTok),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Wedge,
    LParen,
    RParen,
}

#[derive(Clone, Debug, PartialEq)]
enum VarTok {
    X,
    Y,
    Z,
    Indexed(usize),
}

impl VarTok {
    fn display(&self) -> String {
        match self {
            VarTok::X => "x".into(),
            VarTok::Y => "y".into(),
            VarTok::Z => "z".into(),
            VarTok::Indexed(i) => format!("x{i}"),
        }
    }

    fn resolve(&self, dim: usize, line: usize, col: usize) -> Result<usize, Error> {
        let axis = match self {
            VarTok::X if dim == 3 => Some(0),
            VarTok::Y if dim == 3 => Some(1),
            VarTok::Z if dim == 3 => Some(2),
            VarTok::Indexed(i) if *i >= 1 && *i <= dim => Some(i - 1),
            _ => None,
        };
        axis.ok_or_else(|| {
            Error::parse(
                line,
                col,
                format!(
                    "unknown variable `{}` in dimension {dim} (use x1..x{dim}{})",
                    self.display(),
                    if dim == 3 { " or x, y, z" } else { "" }
                ),
            )
        })
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, Error> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        match c {
            c if c.is_whitespace() => {
                bump(&mut chars);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while matches!(chars.peek(), Some(d) if d.is_ascii_digit()) {
                    digits.push(bump(&mut chars));
                }
                let value: BigInt = digits.parse().expect("digit string");
                out.push(Spanned { tok: Tok::Int(value), line: tline, col: tcol });
            }
            '+' => {
                bump(&mut chars);
                out.push(Spanned { tok: Tok::Plus, line: tline, col: tcol });
            }
            '-' => {
                bump(&mut chars);
                out.push(Spanned { tok: Tok::Minus, line: tline, col: tcol });
            }
            '*' => {
                bump(&mut chars);
                out.push(Spanned { tok: Tok::Star, line: tline, col: tcol });
            }
            '^' => {
                bump(&mut chars);
                out.push(Spanned { tok: Tok::Caret, line: tline, col: tcol });
            }
            '(' => {
                bump(&mut chars);
                out.push(Spanned { tok: Tok::LParen, line: tline, col: tcol });
            }
            ')' => {
                bump(&mut chars);
                out.push(Spanned { tok: Tok::RParen, line: tline, col: tcol });
            }
            '/' => {
                bump(&mut chars);
                if chars.peek() == Some(&'\\') {
                    bump(&mut chars);
                    out.push(Spanned { tok: Tok::Wedge, line: tline, col: tcol });
                } else {
                    out.push(Spanned { tok: Tok::Slash, line: tline, col: tcol });
                }
            }
            'd' => {
                bump(&mut chars);
                let var = lex_var(&mut chars, &mut bump).ok_or_else(|| {
                    Error::parse(tline, tcol, "expected a variable after `d`")
                })?;
                out.push(Spanned { tok: Tok::Diff(var), line: tline, col: tcol });
            }
            'x' | 'y' | 'z' => {
                let var = lex_var(&mut chars, &mut bump).unwrap();
                out.push(Spanned { tok: Tok::Var(var), line: tline, col: tcol });
            }
            other => {
                return Err(Error::parse(
                    tline,
                    tcol,
                    format!("unexpected character `{other}`"),
                ));
            }
        }
    }
    Ok(out)
}

fn lex_var(
    chars: &mut std::iter::Peekable<std::str::Chars>,
    bump: &mut impl FnMut(&mut std::iter::Peekable<std::str::Chars>) -> char,
) -> Option<VarTok> {
    match chars.peek() {
        Some('x') => {
            bump(chars);
            let mut digits = String::new();
            while matches!(chars.peek(), Some(d) if d.is_ascii_digit()) {
                digits.push(bump(chars));
            }
            if digits.is_empty() {
                Some(VarTok::X)
            } else {
                Some(VarTok::Indexed(digits.parse().unwrap_or(usize::MAX)))
            }
        }
        Some('y') => {
            bump(chars);
            Some(VarTok::Y)
        }
        Some('z') => {
            bump(chars);
            Some(VarTok::Z)
        }
        _ => None,
    }
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    dim: usize,
    end: (usize, usize),
}

impl Parser {
    fn new(text: &str, dim: usize) -> Result<Self, Error> {
        let tokens = lex(text)?;
        let end_line = text.lines().count().max(1);
        let end_col = text.lines().last().map_or(1, |l| l.chars().count() + 1);
        Ok(Parser { tokens, pos: 0, dim, end: (end_line, end_col) })
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map(|s| (s.line, s.col))
            .unwrap_or(self.end)
    }

    fn err_here(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.here();
        Error::parse(line, col, msg)
    }

    fn advance(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), Error> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.err_here(format!("expected {what}")))
        }
    }

    // ----- scalar grammar -----

    fn scalar(&mut self) -> Result<RationalFunction, Error> {
        let mut negate = false;
        if self.eat(&Tok::Minus) {
            negate = true;
        } else {
            self.eat(&Tok::Plus);
        }
        let mut acc = self.sterm()?;
        if negate {
            acc = -&acc;
        }
        loop {
            if self.eat(&Tok::Plus) {
                let rhs = self.sterm()?;
                acc = &acc + &rhs;
            } else if self.eat(&Tok::Minus) {
                let rhs = self.sterm()?;
                acc = &acc - &rhs;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn sterm(&mut self) -> Result<RationalFunction, Error> {
        let mut acc = self.sfactor()?;
        loop {
            if self.eat(&Tok::Star) {
                let rhs = self.sfactor()?;
                acc = &acc * &rhs;
            } else if self.peek() == Some(&Tok::Slash) {
                let (line, col) = self.here();
                self.pos += 1;
                let rhs = self.sfactor()?;
                acc = acc
                    .checked_div(&rhs)
                    .map_err(|_| Error::parse(line, col, "division by zero".to_string()))?;
            } else if matches!(self.peek(), Some(Tok::Int(_) | Tok::Var(_) | Tok::LParen)) {
                // juxtaposition
                let rhs = self.sfactor()?;
                acc = &acc * &rhs;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn sfactor(&mut self) -> Result<RationalFunction, Error> {
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            let (line, col) = self.here();
            match self.advance().map(|s| s.tok) {
                Some(Tok::Int(n)) => {
                    let e = n
                        .to_u32()
                        .ok_or_else(|| Error::parse(line, col, "exponent too large"))?;
                    let num = base.numerator().pow(e);
                    let den = base.denominator().pow(e);
                    Ok(RationalFunction::new(num, den).expect("nonzero denominator power"))
                }
                _ => Err(Error::parse(line, col, "expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RationalFunction, Error> {
        let (line, col) = self.here();
        match self.advance().map(|s| s.tok) {
            Some(Tok::Int(n)) => Ok(RationalFunction::constant(
                self.dim,
                Rational::from_integer(n),
            )),
            Some(Tok::Var(v)) => {
                let axis = v.resolve(self.dim, line, col)?;
                Ok(RationalFunction::var(self.dim, axis))
            }
            Some(Tok::LParen) => {
                let inner = self.scalar()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(other) => Err(Error::parse(
                line,
                col,
                format!("expected a scalar, found {}", describe(&other)),
            )),
            None => Err(Error::parse(line, col, "expected a scalar, found end of input")),
        }
    }

    // ----- form grammar -----

    fn form(&mut self) -> Result<DifferentialForm, Error> {
        let mut negate = false;
        if self.eat(&Tok::Minus) {
            negate = true;
        } else {
            self.eat(&Tok::Plus);
        }
        let (line, col) = self.here();
        let first = self.fterm()?;
        let mut acc = if negate { -&first } else { first };
        let mut acc_pos = (line, col);
        loop {
            let negate = if self.eat(&Tok::Plus) {
                false
            } else if self.eat(&Tok::Minus) {
                true
            } else {
                break;
            };
            let (line, col) = self.here();
            let term = self.fterm()?;
            let term = if negate { -&term } else { term };
            if !acc.is_zero() && !term.is_zero() && acc.degree() != term.degree() {
                return Err(Error::parse(
                    line,
                    col,
                    format!(
                        "cannot add a degree-{} term to a degree-{} form (term at {}:{})",
                        term.degree(),
                        acc.degree(),
                        acc_pos.0,
                        acc_pos.1
                    ),
                ));
            }
            if acc.is_zero() && !term.is_zero() {
                acc_pos = (line, col);
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    fn fterm(&mut self) -> Result<DifferentialForm, Error> {
        if matches!(self.peek(), Some(Tok::Diff(_))) {
            return self.basis(RationalFunction::one(self.dim));
        }
        // try a scalar product; backtrack if that fails
        let save = self.pos;
        match self.sterm() {
            Ok(coeff) => {
                if matches!(self.peek(), Some(Tok::Diff(_))) {
                    self.basis(coeff)
                } else {
                    Ok(DifferentialForm::from_scalar(coeff))
                }
            }
            Err(scalar_err) => {
                self.pos = save;
                if self.peek() == Some(&Tok::LParen) {
                    self.pos += 1;
                    let inner = self.form()?;
                    self.expect(Tok::RParen, "`)`")?;
                    Ok(inner)
                } else {
                    Err(scalar_err)
                }
            }
        }
    }

    fn basis(&mut self, coeff: RationalFunction) -> Result<DifferentialForm, Error> {
        let mut axes = Vec::new();
        loop {
            let (line, col) = self.here();
            match self.advance().map(|s| s.tok) {
                Some(Tok::Diff(v)) => axes.push(v.resolve(self.dim, line, col)?),
                _ => return Err(Error::parse(line, col, "expected a basis element `d<var>`")),
            }
            if !self.eat(&Tok::Wedge) {
                break;
            }
        }
        let degree = axes.len();
        match IndexTuple::from_unsorted(&axes) {
            None => Ok(DifferentialForm::zero(self.dim, degree)),
            Some((sign, tuple)) => {
                let coeff = if sign < 0 { -&coeff } else { coeff };
                Ok(DifferentialForm::from_terms(self.dim, degree, [(tuple, coeff)]))
            }
        }
    }

    fn finish(&self) -> Result<(), Error> {
        if self.pos < self.tokens.len() {
            let s = &self.tokens[self.pos];
            return Err(Error::parse(
                s.line,
                s.col,
                format!("unexpected {}", describe(&s.tok)),
            ));
        }
        Ok(())
    }
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Int(n) => format!("number `{n}`"),
        Tok::Var(v) => format!("variable `{}`", v.display()),
        Tok::Diff(v) => format!("`d{}`", v.display()),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::Wedge => "`/\\`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
    }
}

/// Parse a scalar (polynomial or rational-function) expression.
pub fn parse_scalar(text: &str, dim: usize) -> Result<RationalFunction, Error> {
    let mut parser = Parser::new(text, dim)?;
    if parser.peek().is_none() {
        return Err(parser.err_here("empty expression"));
    }
    let value = parser.scalar()?;
    parser.finish()?;
    Ok(value)
}

/// Parse a scalar that must be a genuine polynomial.
pub fn parse_polynomial(text: &str, dim: usize) -> Result<Polynomial, Error> {
    let value = parse_scalar(text, dim)?;
    value.to_polynomial().ok_or_else(|| {
        Error::parse(1, 1, format!("expected a polynomial, got the fraction {value}"))
    })
}

/// Parse a differential-form expression (scalars parse as 0-forms).
pub fn parse_form(text: &str, dim: usize) -> Result<DifferentialForm, Error> {
    let mut parser = Parser::new(text, dim)?;
    if parser.peek().is_none() {
        return Err(parser.err_here("empty expression"));
    }
    let value = parser.form()?;
    parser.finish()?;
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{rat, ratio};

    fn x() -> Polynomial {
        Polynomial::var(3, 0)
    }
    fn y() -> Polynomial {
        Polynomial::var(3, 1)
    }
    fn z() -> Polynomial {
        Polynomial::var(3, 2)
    }

    #[test]
    fn parses_half_sum_of_squares() {
        let h = parse_scalar("1/2 x^2 + 1/2 y^2 + 1/2 z^2", 3).unwrap();
        let expected =
            (&(&x() * &x()) + &(&y() * &y()) + (&z() * &z())).scale(&ratio(1, 2));
        assert_eq!(h.to_polynomial().unwrap(), expected);
    }

    #[test]
    fn parses_example_two_form() {
        let text = "(x^2 - y^2) dx/\\dy - x*z dy/\\dz + y*z dz/\\dx";
        let parsed = parse_form(text, 3).unwrap();
        // equals dH ∧ dF for H = (x^2+y^2+z^2)/2, F = xy
        let dh = DifferentialForm::from_scalar(
            parse_scalar("1/2 x^2 + 1/2 y^2 + 1/2 z^2", 3).unwrap(),
        )
        .d();
        let df = DifferentialForm::from_scalar(parse_scalar("x*y", 3).unwrap()).d();
        assert_eq!(parsed, dh.wedge(&df));
    }

    #[test]
    fn zero_parses_to_zero_form() {
        let zero = parse_form("0", 3).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn wedge_reordering_sign() {
        let form = parse_form("dy/\\dx", 3).unwrap();
        assert_eq!(form.to_string(), "-dx/\\dy");
        let dup = parse_form("dx/\\dx", 3).unwrap();
        assert!(dup.is_zero());
    }

    #[test]
    fn rational_function_coefficients() {
        let theta = parse_form("(x/(x^2 + z^2)) dz - (z/(x^2 + z^2)) dx", 3).unwrap();
        assert_eq!(theta.degree(), 1);
        let back = parse_form(&theta.to_string(), 3).unwrap();
        assert_eq!(theta, back);
    }

    #[test]
    fn juxtaposition_binds_like_multiplication() {
        let a = parse_scalar("1/2x", 3).unwrap();
        let b = parse_scalar("1/2 * x", 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, RationalFunction::from(x().scale(&ratio(1, 2))));
    }

    #[test]
    fn indexed_variables_outside_dimension_three() {
        let p = parse_scalar("x1*x4 + x2^2", 4).unwrap();
        assert_eq!(p.eval(&[rat(1), rat(2), rat(0), rat(5)]).unwrap(), rat(9));
        assert!(parse_scalar("x", 4).is_err());
        assert!(parse_scalar("x5", 4).is_err());
    }

    #[test]
    fn error_positions() {
        let err = parse_scalar("x +", 3).unwrap_err();
        match err {
            Error::Parse { line: 1, col: 4, .. } => {}
            other => panic!("unexpected error {other:?}"),
        }
        let err = parse_form("x*w dx", 3).unwrap_err();
        match err {
            Error::Parse { line: 1, col: 3, .. } => {}
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn division_by_zero_reported() {
        let err = parse_scalar("1/(x - x)", 3).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn mixed_degree_sum_rejected() {
        assert!(parse_form("x + dx", 3).is_err());
        // zero scalars are degree-flexible
        assert!(parse_form("0 + dx", 3).is_ok());
    }

    #[test]
    fn parenthesized_forms() {
        let a = parse_form("(dx + dy) - dy", 3).unwrap();
        assert_eq!(a, parse_form("dx", 3).unwrap());
        let b = parse_form("-(2 dx/\\dy)", 3).unwrap();
        assert_eq!(b.to_string(), "-2 dx/\\dy");
    }

    #[test]
    fn power_of_form_is_an_error() {
        assert!(parse_form("dx^2", 3).is_err());
        assert!(parse_form("x /\\ dx", 3).is_err());
    }
}
