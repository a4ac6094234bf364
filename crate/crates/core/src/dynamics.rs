//! Phase flows and their differential-form companions: the flux form
//! `ι_X vol`, divergence, vectorial Hamiltonians via the homotopy operator,
//! Nambu brackets, conservation checks and Pfaff integrability.

use crate::coeffs::{Polynomial, RationalFunction};
use crate::error::Error;
use crate::exterior::{DifferentialForm, IndexTuple, MultiVector};
use crate::poincare::exactness_witness;

/// An autonomous polynomial vector field: the right-hand side of
/// `ẋ_i = X_i(x)` with exactly one component per ambient axis.
#[derive(Clone, PartialEq)]
pub struct PhaseFlow {
    components: Vec<Polynomial>,
}

impl PhaseFlow {
    pub fn new(components: Vec<Polynomial>) -> Self {
        assert!(!components.is_empty(), "a flow needs at least one component");
        let dim = components.len();
        for c in &components {
            assert_eq!(c.dim(), dim, "component dimension must match the component count");
        }
        PhaseFlow { components }
    }

    pub fn zero(dim: usize) -> Self {
        PhaseFlow::new(vec![Polynomial::zero(dim); dim])
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, axis: usize) -> &Polynomial {
        &self.components[axis]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// The flow as a degree-1 multivector field.
    pub fn vector_field(&self) -> MultiVector {
        MultiVector::vector(&self.components)
    }
}

/// The volume form `dx1 ∧ ... ∧ dxn` with its coordinate orientation.
pub fn volume_form(dim: usize) -> DifferentialForm {
    DifferentialForm::basis(
        dim,
        IndexTuple::new((0..dim).collect()).expect("coordinate axes are increasing"),
    )
}

/// The flux (n-1)-form `ι_X vol`; in R³ this is
/// `ẋ dy∧dz + ẏ dz∧dx + ż dx∧dy`.
pub fn flow_to_form(flow: &PhaseFlow) -> DifferentialForm {
    flow.vector_field()
        .interior(&volume_form(flow.dim()))
        .expect("a vector contracts any positive-degree form")
}

/// `Σ_i ∂_i X_i`, the unique `f` with `d(ι_X vol) = f · vol`.
pub fn divergence(flow: &PhaseFlow) -> Polynomial {
    let mut out = Polynomial::zero(flow.dim());
    for (axis, comp) in flow.components().iter().enumerate() {
        out += &comp.partial(axis);
    }
    out
}

/// The vectorial Hamiltonian of a divergence-free flow: the homotopy
/// witness `h` with `dh = ι_X vol`.
pub fn vectorial_hamiltonian(flow: &PhaseFlow) -> Result<DifferentialForm, Error> {
    let div = divergence(flow);
    if !div.is_zero() {
        return Err(Error::NotDivergenceFree(div.to_string()));
    }
    exactness_witness(&flow_to_form(flow))
}

/// The Nambu bracket `{H,F,G}` in R³: the Jacobian determinant
/// `det ∂(H,F,G)/∂(x,y,z)`, equivalently the coefficient of
/// `dH∧dF∧dG` on the volume form.
pub fn nambu_bracket(
    h: &Polynomial,
    f: &Polynomial,
    g: &Polynomial,
) -> Result<Polynomial, Error> {
    if h.dim() != 3 || f.dim() != 3 || g.dim() != 3 {
        return Err(Error::AmbientNotThree(h.dim()));
    }
    let minor = |a: &Polynomial, b: &Polynomial, i: usize, j: usize| {
        &(&a.partial(i) * &b.partial(j)) - &(&a.partial(j) * &b.partial(i))
    };
    let det = &(&(&h.partial(0) * &minor(f, g, 1, 2)) - &(&h.partial(1) * &minor(f, g, 0, 2)))
        + &(&h.partial(2) * &minor(f, g, 0, 1));
    Ok(det)
}

/// The flow `ẋ_i = {H, F, x_i}` generated by two scalar Hamiltonians.
pub fn flow_from_hamiltonians(h: &Polynomial, f: &Polynomial) -> Result<PhaseFlow, Error> {
    if h.dim() != 3 || f.dim() != 3 {
        return Err(Error::AmbientNotThree(h.dim()));
    }
    let mut components = Vec::with_capacity(3);
    for axis in 0..3 {
        components.push(nambu_bracket(h, f, &Polynomial::var(3, axis))?);
    }
    Ok(PhaseFlow::new(components))
}

/// The derivative of `g` along the flow, `Σ_i X_i ∂_i g`.
pub fn derivative_along(flow: &PhaseFlow, g: &Polynomial) -> Polynomial {
    assert_eq!(flow.dim(), g.dim(), "ambient dimension mismatch");
    let mut out = Polynomial::zero(flow.dim());
    for (axis, comp) in flow.components().iter().enumerate() {
        out += &(comp * &g.partial(axis));
    }
    out
}

/// `g` is constant along the flow.
pub fn is_first_integral(flow: &PhaseFlow, g: &Polynomial) -> bool {
    derivative_along(flow, g).is_zero()
}

/// The flow `ẋ_i = B ⌟ (dF ∧ dx_i)` driven by a bivector in R³.
pub fn bivector_flow(bivector: &MultiVector, f: &Polynomial) -> Result<PhaseFlow, Error> {
    if bivector.dim() != 3 || f.dim() != 3 {
        return Err(Error::AmbientNotThree(bivector.dim()));
    }
    if bivector.degree() != 2 {
        return Err(Error::ContractionDegree {
            vector: bivector.degree(),
            form: 2,
        });
    }
    let df = DifferentialForm::from_scalar(RationalFunction::from(f.clone())).d();
    let mut components = Vec::with_capacity(3);
    for axis in 0..3 {
        let target = df.wedge(&DifferentialForm::basis(3, IndexTuple::new(vec![axis]).unwrap()));
        let contracted = bivector.interior(&target)?;
        let scalar = contracted
            .as_scalar()
            .expect("contracting a 2-vector with a 2-form yields a scalar");
        let poly = scalar.to_polynomial().ok_or_else(|| {
            Error::NonPolynomialCoefficient(format!("component {}", axis + 1))
        })?;
        components.push(poly);
    }
    Ok(PhaseFlow::new(components))
}

/// Frobenius condition `dθ ∧ θ = 0` for a 1-form.
pub fn pfaff_integrable(theta: &DifferentialForm) -> bool {
    assert_eq!(theta.degree(), 1, "Pfaff condition applies to 1-forms");
    theta.d().wedge(theta).is_zero()
}

///`d(g·θ) = 0`: the scalar `g` is an integrating factor for `θ`.
pub fn check_integrating_factor(theta: &DifferentialForm, g: &RationalFunction) -> bool {
    assert_eq!(theta.degree(), 1, "integrating factors apply to 1-forms");
    theta.scale(g).d().is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_form, parse_polynomial, parse_scalar};
    use crate::poincare::is_closed;

    fn poly(text: &str) -> Polynomial {
        parse_polynomial(text, 3).unwrap()
    }
    fn flow(xs: [&str; 3]) -> PhaseFlow {
        PhaseFlow::new(xs.into_iter().map(poly).collect())
    }

    fn flow1() -> PhaseFlow {
        flow(["-x*z", "y*z", "x^2 - y^2"])
    }
    fn flow2() -> PhaseFlow {
        flow(["y - z", "-x + x*z", "x - x*y"])
    }
    fn flow3() -> PhaseFlow {
        flow(["x*y", "x - z", "-z*y"])
    }

    #[test]
    fn flux_form_of_first_flow() {
        let form = flow_to_form(&flow1());
        assert_eq!(
            form,
            parse_form("-x*z dy/\\dz + y*z dz/\\dx + (x^2 - y^2) dx/\\dy", 3).unwrap()
        );
        assert!(flow_to_form(&PhaseFlow::zero(3)).is_zero());
    }

    #[test]
    fn flux_form_of_third_flow() {
        let form = flow_to_form(&flow3());
        assert_eq!(
            form,
            parse_form("x*y dy/\\dz + (x - z) dz/\\dx - z*y dx/\\dy", 3).unwrap()
        );
    }

    #[test]
    fn divergences() {
        assert!(divergence(&flow1()).is_zero());
        assert!(divergence(&flow2()).is_zero());
        assert!(divergence(&flow3()).is_zero());
        let radial = flow(["x", "y", "z"]);
        assert_eq!(divergence(&radial), poly("3"));
    }

    #[test]
    fn vectorial_hamiltonian_matches_flux() {
        for fl in [flow1(), flow2(), flow3()] {
            let h = vectorial_hamiltonian(&fl).unwrap();
            assert_eq!(h.d(), flow_to_form(&fl));
        }
        let radial = flow(["x", "y", "z"]);
        assert!(matches!(
            vectorial_hamiltonian(&radial),
            Err(Error::NotDivergenceFree(_))
        ));
    }

    #[test]
    fn nambu_bracket_examples() {
        let h = poly("1/2 x^2 + 1/2 y^2 + 1/2 z^2");
        let f = poly("x*y");
        assert_eq!(
            nambu_bracket(&h, &f, &Polynomial::var(3, 0)).unwrap(),
            poly("-x*z")
        );
        // {x,y,z} = 1
        assert_eq!(
            nambu_bracket(
                &Polynomial::var(3, 0),
                &Polynomial::var(3, 1),
                &Polynomial::var(3, 2)
            )
            .unwrap(),
            Polynomial::one(3)
        );
        // repeated argument vanishes
        assert!(nambu_bracket(&h, &f, &f).unwrap().is_zero());
        // wrong dimension is an error
        let p4 = Polynomial::var(4, 0);
        assert!(nambu_bracket(&p4, &p4, &p4).is_err());
    }

    #[test]
    fn hamiltonian_flows() {
        let h = poly("1/2 x^2 + 1/2 y^2 + 1/2 z^2");
        let f = poly("x*y");
        assert_eq!(flow_from_hamiltonians(&h, &f).unwrap(), flow1());

        let f2 = poly("y - 1/2 y^2 + z - 1/2 z^2");
        assert_eq!(flow_from_hamiltonians(&h, &f2).unwrap(), flow2());

        assert!(flow_from_hamiltonians(&h, &h).unwrap().is_zero());
    }

    #[test]
    fn first_integrals() {
        let h = poly("1/2 x^2 + 1/2 y^2 + 1/2 z^2");
        assert!(is_first_integral(&flow2(), &h));
        assert!(is_first_integral(&flow3(), &poly("-x*z")));
        assert!(!is_first_integral(&flow1(), &Polynomial::var(3, 0)));
    }

    #[test]
    fn bivector_flows_reproduce_the_hamiltonian_flow() {
        // X_H = z ∂x∧∂y + x ∂y∧∂z + y ∂z∧∂x, written in the d-syntax.
        let xh = MultiVector::from_form_components(
            &parse_form("z dx/\\dy + x dy/\\dz + y dz/\\dx", 3).unwrap(),
        );
        assert_eq!(bivector_flow(&xh, &poly("x*y")).unwrap(), flow1());

        // the dual construction: -X_F ⌟ dH ∧ dx_i gives the same flow
        let xf = MultiVector::from_form_components(
            &parse_form("y dy/\\dz + x dz/\\dx", 3).unwrap(),
        );
        let h = poly("1/2 x^2 + 1/2 y^2 + 1/2 z^2");
        let via_f = bivector_flow(&(-&xf), &h).unwrap();
        assert_eq!(via_f, flow1());

        let zero = MultiVector::zero(3, 2);
        assert!(bivector_flow(&zero, &poly("x*y")).unwrap().is_zero());
    }

    #[test]
    fn pfaff_condition() {
        let theta = parse_form("-z dx + x dz", 3).unwrap();
        assert!(!is_closed(&theta));
        assert!(pfaff_integrable(&theta));

        assert!(pfaff_integrable(&parse_form("y dx", 3).unwrap()));
        assert!(!pfaff_integrable(&parse_form("x dy + dz", 3).unwrap()));
    }

    #[test]
    fn integrating_factor() {
        let theta = parse_form("-z dx + x dz", 3).unwrap();
        let g = parse_scalar("1/(x^2 + z^2)", 3).unwrap();
        assert!(check_integrating_factor(&theta, &g));
        assert!(!check_integrating_factor(&theta, &RationalFunction::one(3)));
        let dx = parse_form("dx", 3).unwrap();
        assert!(check_integrating_factor(&dx, &RationalFunction::one(3)));
    }
}
