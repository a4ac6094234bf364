use std::collections::BTreeMap;
use std::ops::{Add, Neg};

use super::form::DifferentialForm;
use super::index_tuple::IndexTuple;
use super::{add_into, wedge_maps, TermMap};
use crate::coeffs::{Polynomial, RationalFunction};
use crate::error::Error;

/// A p-vector field: the same graded sparse storage as a form, written on
/// the `∂_{i1} ∧ ... ∧ ∂_{ip}` basis. Degree-1 values are vector fields,
/// degree-2 values bivectors.
#[derive(Clone)]
pub struct MultiVector {
    dim: usize,
    degree: usize,
    terms: TermMap,
}

impl MultiVector {
    pub fn zero(dim: usize, degree: usize) -> Self {
        MultiVector {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// A vector field from its components.
    pub fn vector(components: &[Polynomial]) -> Self {
        let dim = components.len();
        let mut out = Self::zero(dim, 1);
        for (axis, comp) in components.iter().enumerate() {
            assert_eq!(comp.dim(), dim, "component dimension mismatch");
            out.add_term(
                IndexTuple::new(vec![axis]).unwrap(),
                RationalFunction::from(comp.clone()),
            );
        }
        out
    }

    pub fn from_terms<I>(dim: usize, degree: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (IndexTuple, RationalFunction)>,
    {
        let mut out = Self::zero(dim, degree);
        for (tuple, coeff) in terms {
            out.add_term(tuple, coeff);
        }
        out
    }

    /// Reinterpret a form's components on the `∂` basis (used by the CLI,
    /// whose expression grammar has only the `d` syntax).
    pub fn from_form_components(form: &DifferentialForm) -> Self {
        MultiVector {
            dim: form.dim(),
            degree: form.degree(),
            terms: form
                .terms()
                .map(|(t, c)| (t.clone(), c.clone()))
                .collect(),
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&IndexTuple, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, tuple: &IndexTuple) -> RationalFunction {
        self.terms
            .get(tuple)
            .cloned()
            .unwrap_or_else(|| RationalFunction::zero(self.dim))
    }

    pub fn scale(&self, factor: &RationalFunction) -> Self {
        if factor.is_zero() {
            return Self::zero(self.dim, self.degree);
        }
        let mut terms = BTreeMap::new();
        for (tuple, coeff) in &self.terms {
            add_into(&mut terms, tuple.clone(), coeff * factor);
        }
        MultiVector {
            dim: self.dim,
            degree: self.degree,
            terms,
        }
    }

    /// Exterior product of multivector fields.
    pub fn wedge(&self, rhs: &MultiVector) -> MultiVector {
        assert_eq!(self.dim, rhs.dim, "ambient dimension mismatch");
        let degree = self.degree + rhs.degree;
        if degree > self.dim {
            return MultiVector::zero(self.dim, degree);
        }
        MultiVector {
            dim: self.dim,
            degree,
            terms: wedge_maps(&self.terms, &rhs.terms, self.dim),
        }
    }

    /// Interior product (contraction) with a form.
    ///
    /// On decomposable multivectors `v1 ∧ ... ∧ vp` this is
    /// `ι_{vp} ∘ ... ∘ ι_{v1}` — the first factor contracts innermost — so
    /// the basis pairing is `⟨∂_I, dx_I⟩ = +1`. A single vector acts as the
    /// usual antiderivation.
    pub fn interior(&self, form: &DifferentialForm) -> Result<DifferentialForm, Error> {
        assert_eq!(self.dim, form.dim(), "ambient dimension mismatch");
        if self.degree > form.degree() {
            return Err(Error::ContractionDegree {
                vector: self.degree,
                form: form.degree(),
            });
        }
        let mut result_terms = BTreeMap::new();
        for (vector_tuple, vector_coeff) in &self.terms {
            for (form_tuple, form_coeff) in form.terms() {
                if let Some((sign, rest)) = contract_basis(vector_tuple, form_tuple) {
                    let mut coeff = vector_coeff * form_coeff;
                    if sign < 0 {
                        coeff = -&coeff;
                    }
                    add_into(&mut result_terms, rest, coeff);
                }
            }
        }
        Ok(DifferentialForm::from_map(
            self.dim,
            form.degree() - self.degree,
            result_terms,
        ))
    }
}

/// Contract `∂_J` against `dx_I`, innermost factor first.
fn contract_basis(vector: &IndexTuple, form: &IndexTuple) -> Option<(i8, IndexTuple)> {
    let mut sign = 1i8;
    let mut rest = form.clone();
    for &axis in vector.indices() {
        let (s, next) = rest.remove_axis(axis)?;
        sign *= s;
        rest = next;
    }
    Some((sign, rest))
}

impl Add for &MultiVector {
    type Output = MultiVector;
    fn add(self, rhs: &MultiVector) -> MultiVector {
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

impl Neg for &MultiVector {
    type Output = MultiVector;
    fn neg(self) -> MultiVector {
        MultiVector {
            dim: self.dim,
            degree: self.degree,
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect(),
        }
    }
}

impl PartialEq for MultiVector {
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
