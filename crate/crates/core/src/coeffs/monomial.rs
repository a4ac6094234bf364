use std::cmp::Ordering;

use num_traits::One;

use super::Rational;

/// A power product `x1^e1 * ... * xn^en`, stored as its exponent vector.
///
/// The vector length is the ambient dimension and is fixed for the life of
/// the value. Ordering is graded lexicographic: total degree first, then
/// the exponent vectors compared lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    /// The constant monomial `1` in `dim` variables.
    pub fn constant(dim: usize) -> Self {
        Monomial {
            exponents: vec![0; dim],
        }
    }

    /// The single variable `x_axis`.
    pub fn var(dim: usize, axis: usize) -> Self {
        assert!(axis < dim, "variable index {axis} out of range for dimension {dim}");
        let mut exponents = vec![0; dim];
        exponents[axis] = 1;
        Monomial { exponents }
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Product of two monomials: exponents add.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.dim(), other.dim(), "ambient dimension mismatch");
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Multiply by `x_axis`.
    pub fn times_var(&self, axis: usize) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents[axis] += 1;
        Monomial { exponents }
    }

    /// Formal derivative along `axis`: returns the dropped exponent and the
    /// lowered monomial, or `None` when the monomial is constant in `x_axis`.
    pub fn partial(&self, axis: usize) -> Option<(u32, Monomial)> {
        let e = self.exponents[axis];
        if e == 0 {
            return None;
        }
        let mut exponents = self.exponents.clone();
        exponents[axis] = e - 1;
        Some((e, Monomial { exponents }))
    }

    /// Exact value at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.dim(), "point length mismatch");
        let mut acc = Rational::one();
        for (value, &e) in point.iter().zip(&self.exponents) {
            for _ in 0..e {
                acc *= value;
            }
        }
        acc
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}
