//! Closedness, exactness witnesses via the radial homotopy operator, and
//! verification of wedge splittings of exact forms.
//!
//! The homotopy operator `K` integrates along rays from the origin and
//! satisfies `d(Kω) + K(dω) = ω` on polynomial forms of positive degree, so
//! `K` turns a closed form into an explicit potential. Splitting claims
//! `ω = dμ₁ ∧ ... ∧ dμ_r` are only ever certified against supplied
//! witnesses; refutations carry the exact difference form.

use std::collections::BTreeMap;

use crate::coeffs::{rat, Polynomial, RationalFunction};
use crate::display::basis_label;
use crate::error::Error;
use crate::exterior::{DifferentialForm, IndexTuple};
use crate::partitions::Partition;

/// Exact symbolic test for `dω = 0`.
pub fn is_closed(form: &DifferentialForm) -> bool {
    form.d().is_zero()
}

/// The radial homotopy operator `K` with base point the origin.
///
/// For a monomial term `c·x^α dx_{i1..ik}` with `m = |α|`, contributes
/// `Σ_a (-1)^(a-1) x_{i_a} · c·x^α/(m+k) · dx_{I∖i_a}`. Rejects
/// rational-function coefficients: the ray integral is ill-defined through a
/// pole at the origin.
pub fn homotopy(form: &DifferentialForm) -> Result<DifferentialForm, Error> {
    let k = form.degree();
    if k == 0 {
        return Err(Error::HomotopyDegree);
    }
    let dim = form.dim();
    let coeffs = form.polynomial_coeffs().ok_or_else(|| {
        let offending = form
            .terms()
            .find(|(_, c)| !c.is_polynomial())
            .map(|(t, _)| basis_label(dim, t))
            .unwrap_or_default();
        Error::NonPolynomialCoefficient(offending)
    })?;

    let mut acc: BTreeMap<IndexTuple, Polynomial> = BTreeMap::new();
    for (tuple, poly) in &coeffs {
        for (mono, c) in poly.terms() {
            let weight = rat(1) / rat(i64::from(mono.total_degree()) + k as i64);
            for (pos, &axis) in tuple.indices().iter().enumerate() {
                let (_, lowered) = tuple.remove_axis(axis).expect("axis is present");
                let sign = if pos % 2 == 0 { rat(1) } else { rat(-1) };
                let term = Polynomial::monomial(dim, mono.times_var(axis), c * &weight * sign);
                match acc.entry(lowered) {
                    std::collections::btree_map::Entry::Vacant(slot) => {
                        slot.insert(term);
                    }
                    std::collections::btree_map::Entry::Occupied(mut slot) => {
                        *slot.get_mut() = slot.get() + &term;
                    }
                }
            }
        }
    }
    Ok(DifferentialForm::from_terms(
        dim,
        k - 1,
        acc.into_iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|(t, p)| (t, RationalFunction::from(p))),
    ))
}

/// For closed polynomial `ω` of positive degree, a `ν` with `dν = ω`.
///
/// The identity `d(Kω) + K(dω) = ω` collapses to `d(Kω) = ω`; the result is
/// re-checked before returning.
pub fn exactness_witness(form: &DifferentialForm) -> Result<DifferentialForm, Error> {
    if !is_closed(form) {
        return Err(Error::NotClosed);
    }
    let witness = homotopy(form)?;
    assert!(
        witness.d() == *form,
        "homotopy identity violated on a closed form"
    );
    Ok(witness)
}

/// A verified (or refuted) claim `ω = d(μ₁) ∧ ... ∧ d(μ_r)`.
///
/// The factor degrees `deg(μ_i) + 1` form the partition of `deg(ω)` that
/// names the splitting class. `difference` is exactly
/// `ω − ⋀ᵢ d(μᵢ)`; it is zero iff `verified`.
#[derive(Clone, Debug)]
pub struct SplittingCertificate {
    pub omega: DifferentialForm,
    pub partition: Partition,
    pub witnesses: Vec<DifferentialForm>,
    pub verified: bool,
    pub difference: DifferentialForm,
}

/// Check `ω = ⋀ᵢ d(witness_i)` with witness degrees weakly decreasing.
pub fn verify_splitting(
    omega: &DifferentialForm,
    witnesses: &[DifferentialForm],
) -> Result<SplittingCertificate, Error> {
    let degree_sum: usize = witnesses.iter().map(|w| w.degree() + 1).sum();
    if witnesses.is_empty() || degree_sum != omega.degree() {
        return Err(Error::DegreeBookkeeping {
            expected: omega.degree(),
            found: degree_sum,
        });
    }
    if witnesses.windows(2).any(|w| w[0].degree() < w[1].degree()) {
        return Err(Error::WitnessOrder);
    }
    let parts: Vec<usize> = witnesses.iter().map(|w| w.degree() + 1).collect();
    let mut product = witnesses[0].d();
    for witness in &witnesses[1..] {
        product = product.wedge(&witness.d());
    }
    let difference = omega - &product;
    Ok(SplittingCertificate {
        omega: omega.clone(),
        partition: Partition::new(parts),
        witnesses: witnesses.to_vec(),
        verified: difference.is_zero(),
        difference,
    })
}

/// A verified (or refuted) claim `lhs = f₁ ∧ ... ∧ f_r` for arbitrary
/// factors (not required to be exact).
#[derive(Clone, Debug)]
pub struct WedgeIdentity {
    pub lhs: DifferentialForm,
    pub factors: Vec<DifferentialForm>,
    pub verified: bool,
    pub difference: DifferentialForm,
}

pub fn verify_wedge_identity(
    lhs: &DifferentialForm,
    factors: &[DifferentialForm],
) -> Result<WedgeIdentity, Error> {
    let degree_sum: usize = factors.iter().map(DifferentialForm::degree).sum();
    if factors.is_empty() || degree_sum != lhs.degree() {
        return Err(Error::DegreeBookkeeping {
            expected: lhs.degree(),
            found: degree_sum,
        });
    }
    let mut product = factors[0].clone();
    for factor in &factors[1..] {
        product = product.wedge(factor);
    }
    let difference = lhs - &product;
    Ok(WedgeIdentity {
        lhs: lhs.clone(),
        factors: factors.to_vec(),
        verified: difference.is_zero(),
        difference,
    })
}

/// `ω ∧ ω = 0`, necessary for a 2-form to be a wedge of two 1-forms.
///
/// Informative only in dimension ≥ 4: every 4-form in R³ vanishes.
pub fn decomposability_necessary(omega: &DifferentialForm) -> bool {
    assert_eq!(omega.degree(), 2, "decomposability test applies to 2-forms");
    omega.wedge(omega).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_form, parse_scalar};

    fn form(text: &str) -> DifferentialForm {
        parse_form(text, 3).unwrap()
    }
    fn scalar_form(text: &str) -> DifferentialForm {
        DifferentialForm::from_scalar(parse_scalar(text, 3).unwrap())
    }

    #[test]
    fn closedness_of_worked_forms() {
        let dh_df = scalar_form("1/2 x^2 + 1/2 y^2 + 1/2 z^2")
            .d()
            .wedge(&scalar_form("x*y").d());
        assert!(is_closed(&dh_df));
        assert!(!is_closed(&form("-z dx + x dz")));
        assert!(!is_closed(&scalar_form("x")));
    }

    #[test]
    fn homotopy_of_constant_one_form() {
        // K(dx) = x
        let k = homotopy(&form("dx")).unwrap();
        assert_eq!(k, scalar_form("x"));
    }

    #[test]
    fn homotopy_of_area_form() {
        // K(dx∧dy) = (x dy - y dx)/2, and d of it returns dx∧dy
        let k = homotopy(&form("dx/\\dy")).unwrap();
        assert_eq!(k, form("1/2 x dy - 1/2 y dx"));
        assert_eq!(k.d(), form("dx/\\dy"));
    }

    #[test]
    fn homotopy_rejects_fractions_and_scalars() {
        let theta = form("(x/(x^2 + z^2)) dz");
        assert!(matches!(
            homotopy(&theta),
            Err(Error::NonPolynomialCoefficient(_))
        ));
        assert_eq!(homotopy(&scalar_form("x")), Err(Error::HomotopyDegree));
    }

    #[test]
    fn witness_for_area_form() {
        let nu = exactness_witness(&form("dx/\\dy")).unwrap();
        assert_eq!(nu, form("1/2 x dy - 1/2 y dx"));
    }

    #[test]
    fn witness_requires_closedness() {
        assert_eq!(
            exactness_witness(&form("-z dx + x dz")),
            Err(Error::NotClosed)
        );
    }

    #[test]
    fn witness_for_hamiltonian_product() {
        // ν = K(dH∧dF) satisfies dν = dH∧dF and ν - h is closed for the
        // first worked example's potential h (here they even coincide).
        let omega = scalar_form("1/2 x^2 + 1/2 y^2 + 1/2 z^2")
            .d()
            .wedge(&scalar_form("x*y").d());
        let nu = exactness_witness(&omega).unwrap();
        assert_eq!(nu.d(), omega);
        let h = form("(-x^2*y + y^3 + y*z^2)/4 dx + (x^3 - x*y^2 + x*z^2)/4 dy - 1/2 x*y*z dz");
        assert!(is_closed(&(&nu - &h)));
    }

    #[test]
    fn splitting_of_hamiltonian_product() {
        let h_potential = scalar_form("1/2 x^2 + 1/2 y^2 + 1/2 z^2");
        let f_potential = scalar_form("x*y");
        let omega = h_potential.d().wedge(&f_potential.d());
        let cert = verify_splitting(&omega, &[h_potential, f_potential]).unwrap();
        assert!(cert.verified);
        assert!(cert.difference.is_zero());
        assert_eq!(cert.partition.parts(), &[1, 1]);
    }

    #[test]
    fn splitting_of_volume_form() {
        let cert = verify_splitting(
            &form("dx/\\dy/\\dz"),
            &[scalar_form("x"), scalar_form("y"), scalar_form("z")],
        )
        .unwrap();
        assert!(cert.verified);
        assert_eq!(cert.partition.parts(), &[1, 1, 1]);
    }

    #[test]
    fn splitting_bookkeeping_errors() {
        let omega = form("dx/\\dy");
        assert_eq!(
            verify_splitting(&omega, &[scalar_form("x")]).unwrap_err(),
            Error::DegreeBookkeeping { expected: 2, found: 1 }
        );
        let err = verify_splitting(&form("dx/\\dy/\\dz"), &[scalar_form("x"), form("y dz")]);
        assert_eq!(err.unwrap_err(), Error::WitnessOrder);
    }

    #[test]
    fn wedge_identity_difference_is_exact() {
        // The third worked example: dh vs dH ∧ Θ differ by
        // 2xy dy∧dz + 2x dz∧dx.
        let h = form("(z (3 y^2 + 4 x - 4 z))/12 dx - 1/2 x*y*z dy + (x (3 y^2 + 4 z - 4 x))/12 dz");
        let dh = h.d();
        let d_hamiltonian = scalar_form("x - 1/2 y^2 + z").d();
        let theta = form("-z dx + x dz");
        let report = verify_wedge_identity(&dh, &[d_hamiltonian.clone(), theta]).unwrap();
        assert!(!report.verified);
        assert_eq!(report.difference, form("2 x*y dy/\\dz + 2 x dz/\\dx"));

        // With the closed sign variant -z dx - x dz = -d(xz) the identity holds.
        let variant = form("-z dx - x dz");
        let report = verify_wedge_identity(&dh, &[d_hamiltonian, variant]).unwrap();
        assert!(report.verified);

        // ... which is the splitting dh = dH ∧ d(-xz).
        let cert = verify_splitting(
            &dh,
            &[scalar_form("x - 1/2 y^2 + z"), scalar_form("-x*z")],
        )
        .unwrap();
        assert!(cert.verified);
        assert_eq!(cert.partition.parts(), &[1, 1]);
    }

    #[test]
    fn wedge_identity_trivial_case() {
        let dh = scalar_form("1/2 x^2 + 1/2 y^2 + 1/2 z^2").d();
        let df = scalar_form("y - 1/2 y^2 + z - 1/2 z^2").d();
        let lhs = dh.wedge(&df);
        let report = verify_wedge_identity(&lhs, &[dh, df]).unwrap();
        assert!(report.verified);
    }

    #[test]
    fn decomposability_in_dimension_four() {
        let symplectic = parse_form("dx1/\\dx2 + dx3/\\dx4", 4).unwrap();
        assert!(!decomposability_necessary(&symplectic));
        // ω∧ω = 2 dx1∧dx2∧dx3∧dx4
        let square = symplectic.wedge(&symplectic);
        assert_eq!(
            square
                .coefficient(&IndexTuple::new(vec![0, 1, 2, 3]).unwrap())
                .as_constant()
                .unwrap(),
            rat(2)
        );

        let decomposable = form("(x^2 - y^2) dx/\\dy");
        assert!(decomposability_necessary(&decomposable));
        // invariant under scaling
        assert!(decomposability_necessary(
            &decomposable.scale(&parse_scalar("7/3", 3).unwrap())
        ));
    }
}
