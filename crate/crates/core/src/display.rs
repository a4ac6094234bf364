//! Canonical, deterministic printing.
//!
//! Polynomials print in descending graded-lexicographic term order, forms by
//! increasing basis tuple. Everything printed here reparses to the same
//! value, and reprinting is byte-stable.

use std::fmt;

use num_traits::{One, Signed};

use crate::coeffs::{Monomial, Polynomial, Rational, RationalFunction};
use crate::dynamics::PhaseFlow;
use crate::exterior::{DifferentialForm, IndexTuple, MultiVector};

/// Variable name for an axis: `x`, `y`, `z` in dimension 3, `x1..xn`
/// otherwise.
pub fn var_name(dim: usize, axis: usize) -> String {
    if dim == 3 {
        ["x", "y", "z"][axis].to_string()
    } else {
        format!("x{}", axis + 1)
    }
}

fn write_monomial(out: &mut String, dim: usize, monomial: &Monomial) {
    let mut first = true;
    for (axis, &e) in monomial.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(&var_name(dim, axis));
        if e > 1 {
            out.push_str(&format!("^{e}"));
        }
    }
}

/// One printed term: its sign and the magnitude text (without sign).
fn term_text(dim: usize, monomial: &Monomial, coeff: &Rational) -> (bool, String) {
    let negative = coeff.is_negative();
    let magnitude = coeff.abs();
    let mut body = String::new();
    if monomial.is_constant() {
        body.push_str(&magnitude.to_string());
    } else {
        if !magnitude.is_one() {
            body.push_str(&magnitude.to_string());
            body.push('*');
        }
        write_monomial(&mut body, dim, monomial);
    }
    (negative, body)
}

fn poly_string(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let (negative, body) = term_text(p.dim(), m, c);
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

/// Whether a printed polynomial can stand unparenthesized as a denominator:
/// a single term that is one multiplicative token.
fn is_atomic_denominator(p: &Polynomial) -> bool {
    if p.num_terms() != 1 {
        return false;
    }
    let (m, c) = p.terms().next().unwrap();
    if m.is_constant() {
        return !c.is_negative();
    }
    // exactly one variable power with coefficient 1
    c.is_one() && m.exponents().iter().filter(|&&e| e > 0).count() == 1
}

fn ratfun_string(f: &RationalFunction) -> String {
    if f.denominator().is_one() {
        return poly_string(f.numerator());
    }
    let num = f.numerator();
    let num_str = if num.num_terms() <= 1 {
        poly_string(num)
    } else {
        format!("({})", poly_string(num))
    };
    let den = f.denominator();
    let den_str = if is_atomic_denominator(den) {
        poly_string(den)
    } else {
        format!("({})", poly_string(den))
    };
    format!("{num_str}/{den_str}")
}

/// Basis label like `dx/\dy`, shared with error messages.
pub(crate) fn basis_label(dim: usize, tuple: &IndexTuple) -> String {
    tuple
        .indices()
        .iter()
        .map(|&axis| format!("d{}", var_name(dim, axis)))
        .collect::<Vec<_>>()
        .join("/\\")
}

/// Coefficient in front of a basis element: sign, magnitude text (empty for
/// a plain 1), and whether it stands alone as one product.
fn coeff_prefix(coeff: &RationalFunction) -> (bool, String) {
    if coeff.denominator().is_one() && coeff.numerator().num_terms() == 1 {
        let p = coeff.numerator();
        let (m, c) = p.terms().next().unwrap();
        let (negative, body) = term_text(p.dim(), m, c);
        if m.is_constant() && c.abs().is_one() {
            return (negative, String::new());
        }
        return (negative, body);
    }
    if coeff.denominator().is_one() {
        (false, format!("({})", poly_string(coeff.numerator())))
    } else {
        (false, format!("({})", ratfun_string(coeff)))
    }
}

fn form_string(form: &DifferentialForm) -> String {
    if form.is_zero() {
        return "0".into();
    }
    if form.degree() == 0 {
        return ratfun_string(&form.as_scalar().unwrap());
    }
    let mut out = String::new();
    for (i, (tuple, coeff)) in form.terms().enumerate() {
        let (negative, prefix) = coeff_prefix(coeff);
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !prefix.is_empty() {
            out.push_str(&prefix);
            out.push(' ');
        }
        out.push_str(&basis_label(form.dim(), tuple));
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&poly_string(self))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&ratfun_string(self))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl fmt::Display for DifferentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&form_string(self))
    }
}

impl fmt::Debug for DifferentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DifferentialForm({self})")
    }
}

impl fmt::Display for MultiVector {
    /// Multivectors reuse the `d` basis syntax: read `dx_i` as `∂_i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let as_form = DifferentialForm::from_terms(
            self.dim(),
            self.degree(),
            self.terms().map(|(t, c)| (t.clone(), c.clone())),
        );
        f.write_str(&form_string(&as_form))
    }
}

impl fmt::Debug for MultiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiVector({self})")
    }
}

impl fmt::Display for PhaseFlow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, comp) in self.components().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{comp}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for PhaseFlow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PhaseFlow{self}")
    }
}
