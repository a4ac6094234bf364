use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Rational};

/// A sparse multivariate polynomial over Q with a fixed ambient dimension.
///
/// Terms are kept in a `BTreeMap` keyed by monomial in graded-lexicographic
/// order; stored coefficients are never zero, and the zero polynomial has an
/// empty term map. Binary operations require matching ambient dimensions and
/// panic otherwise.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::one())
    }

    pub fn constant(dim: usize, value: Rational) -> Self {
        let mut p = Self::zero(dim);
        p.add_term(Monomial::constant(dim), value);
        p
    }

    /// The coordinate polynomial `x_axis`.
    pub fn var(dim: usize, axis: usize) -> Self {
        let mut p = Self::zero(dim);
        p.add_term(Monomial::var(dim, axis), Rational::one());
        p
    }

    pub fn monomial(dim: usize, monomial: Monomial, coeff: Rational) -> Self {
        assert_eq!(monomial.dim(), dim, "monomial dimension mismatch");
        let mut p = Self::zero(dim);
        p.add_term(monomial, coeff);
        p
    }

    pub fn from_terms<I>(dim: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(dim);
        for (m, c) in terms {
            assert_eq!(m.dim(), dim, "monomial dimension mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lexicographic order (leading term first).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_constant() {
                return Some(c.clone());
            }
        }
        None
    }

    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Leading coefficient under graded-lex, `None` for the zero polynomial.
    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.leading().map(|(_, c)| c)
    }

    pub fn coefficient(&self, monomial: &Monomial) -> Rational {
        self.terms.get(monomial).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, monomial: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// Formal partial derivative along `axis`.
    pub fn partial(&self, axis: usize) -> Polynomial {
        assert!(axis < self.dim, "axis {axis} out of range");
        let mut out = Polynomial::zero(self.dim);
        for (m, c) in &self.terms {
            if let Some((e, lowered)) = m.partial(axis) {
                out.add_term(lowered, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Exact substitution of a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.dim, "point length mismatch");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            acc += c * m.eval(point);
        }
        acc
    }

    pub fn pow(&self, exponent: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.dim);
        for _ in 0..exponent {
            acc = &acc * self;
        }
        acc
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients. Defined as 1 for the zero polynomial.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rational::new(num_gcd, den_lcm)
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder. Division by the leading term under graded-lex terminates
    /// because the leading monomial strictly decreases.
    pub fn try_exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert_eq!(self.dim, divisor.dim, "ambient dimension mismatch");
        if divisor.is_zero() {
            return None;
        }
        let mut remainder = self.clone();
        let mut quotient = Polynomial::zero(self.dim);
        let (div_mono, div_coeff) = divisor.leading().map(|(m, c)| (m.clone(), c.clone()))?;
        while !remainder.is_zero() {
            let (lead_mono, lead_coeff) = {
                let (m, c) = remainder.leading().unwrap();
                (m.clone(), c.clone())
            };
            let mut exps = Vec::with_capacity(self.dim);
            for (le, de) in lead_mono.exponents().iter().zip(div_mono.exponents()) {
                if le < de {
                    return None;
                }
                exps.push(le - de);
            }
            let q_mono = Monomial::from_exponents(exps);
            let q_coeff = lead_coeff / &div_coeff;
            let piece = Polynomial::monomial(self.dim, q_mono, q_coeff);
            remainder = &remainder - &(&piece * divisor);
            quotient = &quotient + &piece;
        }
        Some(quotient)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.dim, rhs.dim, "ambient dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.dim, rhs.dim, "ambient dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.dim, rhs.dim, "ambient dimension mismatch");
        let mut out = Polynomial::zero(self.dim);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.dim, rhs.dim, "ambient dimension mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

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
    fn additive_inverse_cancels() {
        let p = &x() + &(-&x());
        assert!(p.is_zero());
    }

    #[test]
    fn add_merges_like_terms() {
        // (x^2 + y) + y = x^2 + 2y
        let p = &(&x() * &x()) + &y();
        let q = &p + &y();
        assert_eq!(q.coefficient(&Monomial::from_exponents(vec![0, 1, 0])), rat(2));
        assert_eq!(q.num_terms(), 2);
    }

    #[test]
    fn flow_component_sum() {
        // x^2 + (-y^2) = x^2 - y^2
        let p = &(&x() * &x()) + &(-&(&y() * &y()));
        assert_eq!(p.eval(&[rat(3), rat(2), rat(1)]), rat(5));
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&x() + &y()) * &(&x() - &y());
        let rhs = &(&x() * &x()) - &(&y() * &y());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn zero_absorbs() {
        let p = &Polynomial::zero(3) * &(&x() * &y());
        assert!(p.is_zero());
    }

    #[test]
    fn partial_of_half_sum_of_squares() {
        // d/dx (x^2+y^2+z^2)/2 = x
        let h = (&(&x() * &x()) + &(&y() * &y()) + (&z() * &z())).scale(&(rat(1) / rat(2)));
        assert_eq!(h.partial(0), x());
        assert_eq!((&x() * &y()).partial(2), Polynomial::zero(3));
    }

    #[test]
    fn partial_with_linear_term() {
        // d/dy (y - y^2/2) = 1 - y
        let p = &y() - &(&y() * &y()).scale(&(rat(1) / rat(2)));
        let expected = &Polynomial::one(3) - &y();
        assert_eq!(p.partial(1), expected);
    }

    #[test]
    fn eval_is_substitution() {
        let f = &x() * &y();
        assert_eq!(f.eval(&[rat(2), rat(3), rat(0)]), rat(6));
    }

    #[test]
    fn exact_division_round_trip() {
        let f = &(&x() + &y()) * &(&x() - &z());
        assert_eq!(f.try_exact_div(&(&x() + &y())), Some(&x() - &z()));
        assert_eq!(f.try_exact_div(&(&x() + &(&y() * &y()))), None);
    }

    #[test]
    fn content_normalizes_to_integers() {
        let p = (&x() + &y()).scale(&(rat(4) / rat(6)));
        assert_eq!(p.content(), rat(2) / rat(3));
    }
}
