//! Built-in worked examples: three divergence-free flows in R³ with their
//! Hamiltonian structure, embedded as parseable source constants so the
//! verification suites run with no external data.

use crate::coeffs::{Polynomial, RationalFunction};
use crate::dynamics::PhaseFlow;
use crate::exterior::{DifferentialForm, MultiVector};
use crate::parse::{parse_form, parse_polynomial, parse_scalar};

/// One worked example: a flow with its potentials and bracket data.
#[derive(Clone)]
pub struct WorkedExample {
    pub index: usize,
    pub flow: PhaseFlow,
    /// The vectorial Hamiltonian: a 1-form `h` with `dh = ι_X vol`.
    pub vector_hamiltonian: DifferentialForm,
    /// Scalar Hamiltonian `H`.
    pub hamiltonian: Polynomial,
    /// Second scalar Hamiltonian `F`, when the flow has one.
    pub second_hamiltonian: Option<Polynomial>,
    /// Bivector `X_H` with `ẋ_i = X_H ⌟ dF ∧ dx_i` (or `⌟ θ ∧ dx_i`).
    pub hamiltonian_bivector: MultiVector,
    /// Bivector `X_F` with `ẋ_i = -X_F ⌟ dH ∧ dx_i`, when present.
    pub second_bivector: Option<MultiVector>,
    /// Non-closed Pfaff form `θ` standing in for a second differential.
    pub prehamiltonian: Option<DifferentialForm>,
    /// The sign variant `-z dx - x dz = -d(xz)` of `θ`. Unlike
    /// `prehamiltonian` it is closed and satisfies `dh = dH ∧ variant`
    /// exactly; the example-3 suite reports the identities for both.
    pub prehamiltonian_variant: Option<DifferentialForm>,
    /// Integrating factor `g` with `d(g·θ) = 0`.
    pub integrating_factor: Option<RationalFunction>,
}

pub const EXAMPLE_INDICES: [usize; 3] = [1, 2, 3];

/// Look up a worked example by index (1, 2 or 3).
pub fn worked_example(index: usize) -> Option<WorkedExample> {
    match index {
        1 => Some(example_one()),
        2 => Some(example_two()),
        3 => Some(example_three()),
        _ => None,
    }
}

fn poly(text: &str) -> Polynomial {
    parse_polynomial(text, 3).expect("embedded constant parses")
}

fn form(text: &str) -> DifferentialForm {
    parse_form(text, 3).expect("embedded constant parses")
}

fn bivector(text: &str) -> MultiVector {
    MultiVector::from_form_components(&form(text))
}

fn flow(components: [&str; 3]) -> PhaseFlow {
    PhaseFlow::new(components.into_iter().map(poly).collect())
}

/// `ẋ = -xz, ẏ = yz, ż = x² - y²`: two scalar Hamiltonians, full Nambu
/// structure.
fn example_one() -> WorkedExample {
    WorkedExample {
        index: 1,
        flow: flow(["-x*z", "y*z", "x^2 - y^2"]),
        vector_hamiltonian: form(
            "(-x^2*y + y^3 + y*z^2)/4 dx + (x^3 - x*y^2 + x*z^2)/4 dy - 1/2 x*y*z dz",
        ),
        hamiltonian: poly("1/2 x^2 + 1/2 y^2 + 1/2 z^2"),
        second_hamiltonian: Some(poly("x*y")),
        hamiltonian_bivector: bivector("z dx/\\dy + x dy/\\dz + y dz/\\dx"),
        second_bivector: Some(bivector("y dy/\\dz + x dz/\\dx")),
        prehamiltonian: None,
        prehamiltonian_variant: None,
        integrating_factor: None,
    }
}

/// `ẋ = y - z, ẏ = -x + xz, ż = x - xy`: a divergence-free Lorenz-type
/// set with two scalar Hamiltonians.
fn example_two() -> WorkedExample {
    WorkedExample {
        index: 2,
        flow: flow(["y - z", "-x + x*z", "x - x*y"]),
        vector_hamiltonian: form(
            "(x/4 (z^2 + y^2) - x/3 (z + y)) dx \
             + (1/3 (x^2 - y*z + z^2) - 1/4 x^2*y) dy \
             + (1/3 (y^2 - z*y + x^2) - 1/4 x^2*z) dz",
        ),
        hamiltonian: poly("1/2 x^2 + 1/2 y^2 + 1/2 z^2"),
        second_hamiltonian: Some(poly("y - 1/2 y^2 + z - 1/2 z^2")),
        hamiltonian_bivector: bivector("z dx/\\dy + x dy/\\dz + y dz/\\dx"),
        second_bivector: Some(bivector("(1 - z) dx/\\dy + (1 - y) dz/\\dx")),
        prehamiltonian: None,
        prehamiltonian_variant: None,
        integrating_factor: None,
    }
}

/// `ẋ = xy, ẏ = x - z, ż = -zy`: one scalar Hamiltonian plus the
/// non-closed Pfaff form `θ = -z dx + x dz`, integrable through the factor
/// `1/(x²+z²)`. The polynomial `-xz` is a first integral, so
/// `dh = dH ∧ d(-xz)` splits `dh` even though `dh = dH ∧ θ` fails.
fn example_three() -> WorkedExample {
    WorkedExample {
        index: 3,
        flow: flow(["x*y", "x - z", "-z*y"]),
        vector_hamiltonian: form(
            "(z (3 y^2 + 4 x - 4 z))/12 dx - 1/2 x*y*z dy + (x (3 y^2 + 4 z - 4 x))/12 dz",
        ),
        hamiltonian: poly("x - 1/2 y^2 + z"),
        second_hamiltonian: None,
        hamiltonian_bivector: bivector("dx/\\dy + dy/\\dz - y dz/\\dx"),
        second_bivector: None,
        prehamiltonian: Some(form("-z dx + x dz")),
        prehamiltonian_variant: Some(form("-z dx - x dz")),
        integrating_factor: Some(parse_scalar("1/(x^2 + z^2)", 3).expect("embedded constant parses")),
    }
}
