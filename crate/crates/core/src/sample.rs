//! Seeded random generation of kernel values, shared by the verification
//! reports, the property suites and the benchmarks.

use rand::Rng;

use crate::coeffs::{rat, Monomial, Polynomial, Rational, RationalFunction};
use crate::exterior::{DifferentialForm, IndexTuple, MultiVector};

/// A small rational with numerator in `[-9, 9]` and denominator in `[1, 4]`.
pub fn rational(rng: &mut impl Rng) -> Rational {
    let num = rng.gen_range(-9i64..=9);
    let den = rng.gen_range(1i64..=4);
    rat(num) / rat(den)
}

pub fn nonzero_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let r = rational(rng);
        if !num_traits::Zero::is_zero(&r) {
            return r;
        }
    }
}

/// A random rational point in `dim` coordinates.
pub fn point(rng: &mut impl Rng, dim: usize) -> Vec<Rational> {
    (0..dim).map(|_| rational(rng)).collect()
}

/// A monomial with total degree at most `max_degree`.
pub fn monomial(rng: &mut impl Rng, dim: usize, max_degree: u32) -> Monomial {
    let mut budget = rng.gen_range(0..=max_degree);
    let mut exponents = vec![0u32; dim];
    while budget > 0 {
        let axis = rng.gen_range(0..dim);
        exponents[axis] += 1;
        budget -= 1;
    }
    Monomial::from_exponents(exponents)
}

/// A sparse polynomial with at most `max_terms` random terms.
pub fn polynomial(rng: &mut impl Rng, dim: usize, max_degree: u32, max_terms: usize) -> Polynomial {
    let count = rng.gen_range(0..=max_terms);
    Polynomial::from_terms(
        dim,
        (0..count).map(|_| (monomial(rng, dim, max_degree), rational(rng))),
    )
}

pub fn nonzero_polynomial(
    rng: &mut impl Rng,
    dim: usize,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial {
    loop {
        let p = polynomial(rng, dim, max_degree, max_terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A rational function with a nonzero random denominator.
pub fn rational_function(
    rng: &mut impl Rng,
    dim: usize,
    max_degree: u32,
    max_terms: usize,
) -> RationalFunction {
    let num = polynomial(rng, dim, max_degree, max_terms);
    let den = nonzero_polynomial(rng, dim, max_degree.min(2), max_terms.min(2));
    RationalFunction::new(num, den).expect("denominator is nonzero")
}

/// All strictly increasing index tuples of the given length — the full
/// basis of degree-`degree` forms in `dim` variables.
pub fn basis_tuples(dim: usize, degree: usize) -> Vec<IndexTuple> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    choose(0, dim, degree, &mut current, &mut out);
    out
}

fn choose(
    start: usize,
    dim: usize,
    remaining: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<IndexTuple>,
) {
    if remaining == 0 {
        out.push(IndexTuple::new(current.clone()).unwrap());
        return;
    }
    for axis in start..dim {
        if dim - axis < remaining {
            break;
        }
        current.push(axis);
        choose(axis + 1, dim, remaining - 1, current, out);
        current.pop();
    }
}

/// A degree-`degree` form with random polynomial coefficients.
pub fn poly_form(
    rng: &mut impl Rng,
    dim: usize,
    degree: usize,
    max_coeff_degree: u32,
    max_terms: usize,
) -> DifferentialForm {
    DifferentialForm::from_terms(
        dim,
        degree,
        basis_tuples(dim, degree).into_iter().filter_map(|tuple| {
            if rng.gen_bool(0.8) {
                let p = polynomial(rng, dim, max_coeff_degree, max_terms);
                Some((tuple, RationalFunction::from(p)))
            } else {
                None
            }
        }),
    )
}

/// A degree-`degree` form with random rational-function coefficients.
pub fn ratfun_form(
    rng: &mut impl Rng,
    dim: usize,
    degree: usize,
    max_coeff_degree: u32,
    max_terms: usize,
) -> DifferentialForm {
    DifferentialForm::from_terms(
        dim,
        degree,
        basis_tuples(dim, degree).into_iter().filter_map(|tuple| {
            if rng.gen_bool(0.8) {
                Some((tuple, rational_function(rng, dim, max_coeff_degree, max_terms)))
            } else {
                None
            }
        }),
    )
}

/// A degree-`degree` multivector with random polynomial coefficients.
pub fn multivector(
    rng: &mut impl Rng,
    dim: usize,
    degree: usize,
    max_coeff_degree: u32,
    max_terms: usize,
) -> MultiVector {
    MultiVector::from_terms(
        dim,
        degree,
        basis_tuples(dim, degree).into_iter().filter_map(|tuple| {
            if rng.gen_bool(0.8) {
                let p = polynomial(rng, dim, max_coeff_degree, max_terms);
                Some((tuple, RationalFunction::from(p)))
            } else {
                None
            }
        }),
    )
}
