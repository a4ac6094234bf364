//! Deterministic fixtures for the kernel benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use derham_core::sample;
use derham_core::{DifferentialForm, Polynomial};

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xBE7C4)
}

/// A pair of forms in the same ambient dimension, dense enough to exercise
/// the basis merge paths.
pub fn form_pair(dim: usize, a: usize, b: usize) -> (DifferentialForm, DifferentialForm) {
    let mut rng = rng();
    (
        sample::poly_form(&mut rng, dim, a, 4, 4),
        sample::poly_form(&mut rng, dim, b, 4, 4),
    )
}

pub fn form(dim: usize, degree: usize) -> DifferentialForm {
    sample::poly_form(&mut rng(), dim, degree, 4, 4)
}

pub fn cubic_triple() -> (Polynomial, Polynomial, Polynomial) {
    let mut rng = rng();
    (
        sample::nonzero_polynomial(&mut rng, 3, 3, 6),
        sample::nonzero_polynomial(&mut rng, 3, 3, 6),
        sample::nonzero_polynomial(&mut rng, 3, 3, 6),
    )
}
