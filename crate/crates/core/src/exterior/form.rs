use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use super::index_tuple::IndexTuple;
use super::{add_into, wedge_maps, TermMap};
use crate::coeffs::{Polynomial, Rational, RationalFunction};
use crate::error::Error;

/// A differential k-form over Q(x1..xn).
///
/// Terms map strictly increasing basis tuples to rational-function
/// coefficients; stored coefficients are never zero and the zero form has an
/// empty map. Degrees above the ambient dimension are representable (only as
/// zero), which keeps `wedge` and `d` total.
#[derive(Clone)]
pub struct DifferentialForm {
    dim: usize,
    degree: usize,
    terms: TermMap,
}

impl DifferentialForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        DifferentialForm {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// A scalar as a 0-form.
    pub fn from_scalar(value: RationalFunction) -> Self {
        let dim = value.dim();
        let mut form = Self::zero(dim, 0);
        form.add_term(IndexTuple::empty(), value);
        form
    }

    /// The basis element `dx_I` with coefficient 1.
    pub fn basis(dim: usize, tuple: IndexTuple) -> Self {
        let mut form = Self::zero(dim, tuple.len());
        form.add_term(tuple, RationalFunction::one(dim));
        form
    }

    pub fn from_terms<I>(dim: usize, degree: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (IndexTuple, RationalFunction)>,
    {
        let mut form = Self::zero(dim, degree);
        for (tuple, coeff) in terms {
            form.add_term(tuple, coeff);
        }
        form
    }

    pub(crate) fn from_map(dim: usize, degree: usize, terms: TermMap) -> Self {
        DifferentialForm { dim, degree, terms }
    }

    fn add_term(&mut self, tuple: IndexTuple, coeff: RationalFunction) {
        assert_eq!(tuple.len(), self.degree, "basis tuple length must equal the degree");
        assert!(
            tuple.max_index().is_none_or(|i| i < self.dim),
            "basis index out of range for ambient dimension {}",
            self.dim
        );
        assert_eq!(coeff.dim(), self.dim, "coefficient dimension mismatch");
        add_into(&mut self.terms, tuple, coeff);
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending basis-tuple order.
    pub fn terms(&self) -> impl Iterator<Item = (&IndexTuple, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, tuple: &IndexTuple) -> RationalFunction {
        self.terms
            .get(tuple)
            .cloned()
            .unwrap_or_else(|| RationalFunction::zero(self.dim))
    }

    /// The content of a 0-form; `None` for positive degree.
    pub fn as_scalar(&self) -> Option<RationalFunction> {
        if self.degree != 0 {
            return None;
        }
        Some(self.coefficient(&IndexTuple::empty()))
    }

    /// All coefficients as polynomials, or `None` if any is a genuine
    /// fraction.
    pub fn polynomial_coeffs(&self) -> Option<BTreeMap<IndexTuple, Polynomial>> {
        let mut out = BTreeMap::new();
        for (tuple, coeff) in &self.terms {
            out.insert(tuple.clone(), coeff.to_polynomial()?);
        }
        Some(out)
    }

    pub fn scale(&self, factor: &RationalFunction) -> Self {
        assert_eq!(factor.dim(), self.dim, "coefficient dimension mismatch");
        if factor.is_zero() {
            return Self::zero(self.dim, self.degree);
        }
        let mut terms = BTreeMap::new();
        for (tuple, coeff) in &self.terms {
            add_into(&mut terms, tuple.clone(), coeff * factor);
        }
        DifferentialForm {
            dim: self.dim,
            degree: self.degree,
            terms,
        }
    }

    /// Wedge product; bilinear, basis tuples sorted with the permutation
    /// sign. Degrees add; past the ambient dimension the result is the
    /// canonical zero form of that degree.
    pub fn wedge(&self, rhs: &DifferentialForm) -> DifferentialForm {
        assert_eq!(self.dim, rhs.dim, "ambient dimension mismatch");
        let degree = self.degree + rhs.degree;
        if degree > self.dim {
            return DifferentialForm::zero(self.dim, degree);
        }
        DifferentialForm {
            dim: self.dim,
            degree,
            terms: wedge_maps(&self.terms, &rhs.terms, self.dim),
        }
    }

    /// Exterior derivative `d(f dx_I) = Σ_i (∂_i f) dx_i ∧ dx_I`.
    pub fn d(&self) -> DifferentialForm {
        let mut out = DifferentialForm::zero(self.dim, self.degree + 1);
        for (tuple, coeff) in &self.terms {
            for axis in 0..self.dim {
                let derivative = coeff.partial(axis);
                if derivative.is_zero() {
                    continue;
                }
                if let Some((sign, extended)) = tuple.insert_axis(axis) {
                    let signed = if sign < 0 { -&derivative } else { derivative };
                    out.add_term(extended, signed);
                }
            }
        }
        out
    }

    /// Evaluate every coefficient at a rational point, producing a
    /// constant-coefficient form.
    pub fn eval(&self, point: &[Rational]) -> Result<DifferentialForm, Error> {
        let mut out = DifferentialForm::zero(self.dim, self.degree);
        for (tuple, coeff) in &self.terms {
            let value = coeff.eval(point)?;
            out.add_term(tuple.clone(), RationalFunction::constant(self.dim, value));
        }
        Ok(out)
    }
}

impl PartialEq for DifferentialForm {
    /// Zero forms of any degree compare equal; otherwise degrees and
    /// coefficients must match.
    fn eq(&self, other: &Self) -> bool {
        if self.dim != other.dim {
            return false;
        }
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.degree == other.degree && self.terms == other.terms
    }
}

impl Add for &DifferentialForm {
    type Output = DifferentialForm;
    fn add(self, rhs: &DifferentialForm) -> DifferentialForm {
        assert_eq!(self.dim, rhs.dim, "ambient dimension mismatch");
        if self.is_zero() && self.degree != rhs.degree {
            return rhs.clone();
        }
        if rhs.is_zero() && self.degree != rhs.degree {
            return self.clone();
        }
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        let mut out = self.clone();
        for (tuple, coeff) in &rhs.terms {
            out.add_term(tuple.clone(), coeff.clone());
        }
        out
    }
}

impl Sub for &DifferentialForm {
    type Output = DifferentialForm;
    fn sub(self, rhs: &DifferentialForm) -> DifferentialForm {
        self + &(-rhs)
    }
}

impl Neg for &DifferentialForm {
    type Output = DifferentialForm;
    fn neg(self) -> DifferentialForm {
        DifferentialForm {
            dim: self.dim,
            degree: self.degree,
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect(),
        }
    }
}

impl Add for DifferentialForm {
    type Output = DifferentialForm;
    fn add(self, rhs: DifferentialForm) -> DifferentialForm {
        &self + &rhs
    }
}

impl Sub for DifferentialForm {
    type Output = DifferentialForm;
    fn sub(self, rhs: DifferentialForm) -> DifferentialForm {
        &self - &rhs
    }
}

impl Neg for DifferentialForm {
    type Output = DifferentialForm;
    fn neg(self) -> DifferentialForm {
        -&self
    }
}
