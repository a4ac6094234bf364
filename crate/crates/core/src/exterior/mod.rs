//! The graded exterior algebra over Q(x1..xn): differential forms,
//! multivector fields, wedge product, exterior derivative, interior product
//! and exact point evaluation.

mod form;
mod index_tuple;
mod multivector;

use std::collections::BTreeMap;

use crate::coeffs::RationalFunction;

pub use form::DifferentialForm;
pub use index_tuple::IndexTuple;
pub use multivector::MultiVector;

pub(crate) type TermMap = BTreeMap<IndexTuple, RationalFunction>;

/// Accumulate a term into a graded map, dropping exact zeros.
pub(crate) fn add_into(map: &mut TermMap, tuple: IndexTuple, coeff: RationalFunction) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(tuple) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            let sum = slot.get() + &coeff;
            if sum.is_zero() {
                slot.remove();
            } else {
                *slot.get_mut() = sum;
            }
        }
    }
}

/// Bilinear wedge of two graded term maps.
pub(crate) fn wedge_maps(lhs: &TermMap, rhs: &TermMap, _dim: usize) -> TermMap {
    let mut out = BTreeMap::new();
    for (ta, ca) in lhs {
        for (tb, cb) in rhs {
            if let Some((sign, merged)) = ta.merge(tb) {
                let mut coeff = ca * cb;
                if sign < 0 {
                    coeff = -&coeff;
                }
                add_into(&mut out, merged, coeff);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{rat, ratio, Polynomial, RationalFunction};

    fn x() -> Polynomial {
        Polynomial::var(3, 0)
    }
    fn y() -> Polynomial {
        Polynomial::var(3, 1)
    }
    fn z() -> Polynomial {
        Polynomial::var(3, 2)
    }
    fn tup(v: &[usize]) -> IndexTuple {
        IndexTuple::new(v.to_vec()).unwrap()
    }
    fn one_form(coeffs: [Polynomial; 3]) -> DifferentialForm {
        DifferentialForm::from_terms(
            3,
            1,
            coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| (tup(&[i]), RationalFunction::from(c))),
        )
    }

    /// dH for H = (x^2+y^2+z^2)/2.
    fn d_sphere() -> DifferentialForm {
        one_form([x(), y(), z()])
    }

    /// dF for F = xy.
    fn d_xy() -> DifferentialForm {
        one_form([y(), x(), Polynomial::zero(3)])
    }

    #[test]
    fn wedge_of_repeated_basis_vanishes() {
        let dx = DifferentialForm::basis(3, tup(&[0]));
        assert!(dx.wedge(&dx).is_zero());
    }

    #[test]
    fn wedge_of_hamiltonian_differentials() {
        // dH ∧ dF = (x^2-y^2) dx∧dy - yz dx∧dz - xz dy∧dz
        let w = d_sphere().wedge(&d_xy());
        assert_eq!(
            w.coefficient(&tup(&[0, 1])),
            RationalFunction::from(&(&x() * &x()) - &(&y() * &y()))
        );
        assert_eq!(w.coefficient(&tup(&[0, 2])), RationalFunction::from(-&(&y() * &z())));
        assert_eq!(w.coefficient(&tup(&[1, 2])), RationalFunction::from(-&(&x() * &z())));
        assert_eq!(w.num_terms(), 3);
    }

    #[test]
    fn wedge_with_pfaff_form() {
        // dH ∧ Θ for H = x - y^2/2 + z, Θ = -z dx + x dz:
        // -yz dx∧dy + (x+z) dx∧dz - xy dy∧dz
        let dh = one_form([Polynomial::one(3), -&y(), Polynomial::one(3)]);
        let theta = DifferentialForm::from_terms(
            3,
            1,
            [
                (tup(&[0]), RationalFunction::from(-&z())),
                (tup(&[2]), RationalFunction::from(x())),
            ],
        );
        let w = dh.wedge(&theta);
        assert_eq!(w.coefficient(&tup(&[0, 1])), RationalFunction::from(-&(&y() * &z())));
        assert_eq!(w.coefficient(&tup(&[0, 2])), RationalFunction::from(&x() + &z()));
        assert_eq!(w.coefficient(&tup(&[1, 2])), RationalFunction::from(-&(&x() * &y())));
    }

    #[test]
    fn exterior_derivative_single_term() {
        // d(xy dx) = -x dx∧dy
        let form = DifferentialForm::from_terms(
            3,
            1,
            [(tup(&[0]), RationalFunction::from(&x() * &y()))],
        );
        let d = form.d();
        assert_eq!(d.coefficient(&tup(&[0, 1])), RationalFunction::from(-&x()));
        assert_eq!(d.num_terms(), 1);
    }

    #[test]
    fn exterior_derivative_of_pfaff_form() {
        // d(-z dx + x dz) = 2 dx∧dz
        let theta = DifferentialForm::from_terms(
            3,
            1,
            [
                (tup(&[0]), RationalFunction::from(-&z())),
                (tup(&[2]), RationalFunction::from(x())),
            ],
        );
        let d = theta.d();
        assert_eq!(
            d.coefficient(&tup(&[0, 2])),
            RationalFunction::constant(3, rat(2))
        );
        assert_eq!(d.num_terms(), 1);
    }

    #[test]
    fn top_degree_derivative_is_zero() {
        let vol = DifferentialForm::from_terms(
            3,
            3,
            [(tup(&[0, 1, 2]), RationalFunction::from(&x() * &y()))],
        );
        let d = vol.d();
        assert!(d.is_zero());
        assert_eq!(d.degree(), 4);
    }

    #[test]
    fn interior_on_basis() {
        // ι_∂x (dx∧dy) = dy
        let v = MultiVector::vector(&[Polynomial::one(3), Polynomial::zero(3), Polynomial::zero(3)]);
        let w = DifferentialForm::basis(3, tup(&[0, 1]));
        assert_eq!(
            v.interior(&w).unwrap(),
            DifferentialForm::basis(3, tup(&[1]))
        );
    }

    #[test]
    fn flow_vector_contracts_coordinates() {
        // X ⌟ dx = -xz for X = (-xz, yz, x^2-y^2)
        let flow = MultiVector::vector(&[
            -&(&x() * &z()),
            &y() * &z(),
            &(&x() * &x()) - &(&y() * &y()),
        ]);
        let dx = DifferentialForm::basis(3, tup(&[0]));
        let contracted = flow.interior(&dx).unwrap();
        assert_eq!(
            contracted.as_scalar().unwrap(),
            RationalFunction::from(-&(&x() * &z()))
        );
    }

    #[test]
    fn bivector_contraction_sign_convention() {
        // X_H = z ∂x∧∂y + x ∂y∧∂z + y ∂z∧∂x; X_H ⌟ (dF ∧ dx) = -xz.
        let xh = MultiVector::from_terms(
            3,
            2,
            [
                (tup(&[0, 1]), RationalFunction::from(z())),
                (tup(&[1, 2]), RationalFunction::from(x())),
                (tup(&[0, 2]), RationalFunction::from(-&y())), // y ∂z∧∂x
            ],
        );
        let target = d_xy().wedge(&DifferentialForm::basis(3, tup(&[0])));
        let contracted = xh.interior(&target).unwrap();
        assert_eq!(
            contracted.as_scalar().unwrap(),
            RationalFunction::from(-&(&x() * &z()))
        );
    }

    #[test]
    fn contraction_degree_error() {
        let b = MultiVector::from_terms(3, 2, [(tup(&[0, 1]), RationalFunction::one(3))]);
        let dx = DifferentialForm::basis(3, tup(&[0]));
        assert!(b.interior(&dx).is_err());
    }

    #[test]
    fn eval_commutes_with_coefficients() {
        // eval((x^2-y^2) dx∧dy, (2,1,0)) = 3 dx∧dy
        let w = DifferentialForm::from_terms(
            3,
            2,
            [(
                tup(&[0, 1]),
                RationalFunction::from(&(&x() * &x()) - &(&y() * &y())),
            )],
        );
        let v = w.eval(&[rat(2), rat(1), rat(0)]).unwrap();
        assert_eq!(
            v.coefficient(&tup(&[0, 1])).as_constant().unwrap(),
            rat(3)
        );

        // eval(dH∧dF, (1,1,1)) = -dx∧dz - dy∧dz; the dx∧dy coefficient
        // x^2-y^2 vanishes there.
        let w = d_sphere().wedge(&d_xy());
        let v = w.eval(&[rat(1), rat(1), rat(1)]).unwrap();
        assert!(v.coefficient(&tup(&[0, 1])).is_zero());
        assert_eq!(v.coefficient(&tup(&[1, 2])).as_constant().unwrap(), rat(-1));
        assert_eq!(v.coefficient(&tup(&[0, 2])).as_constant().unwrap(), rat(-1));
    }

    #[test]
    fn scale_by_quarter() {
        let form = DifferentialForm::from_terms(
            3,
            1,
            [(tup(&[0]), RationalFunction::from(x().scale(&rat(4))))],
        );
        let scaled = form.scale(&RationalFunction::constant(3, ratio(1, 4)));
        assert_eq!(scaled.coefficient(&tup(&[0])), RationalFunction::from(x()));
    }

    #[test]
    fn zero_form_addition_is_degree_flexible() {
        let zero2 = DifferentialForm::zero(3, 2);
        let dx = DifferentialForm::basis(3, tup(&[0]));
        assert_eq!(&zero2 + &dx, dx);
        assert_eq!(&dx + &zero2, dx);
        assert_eq!(zero2, DifferentialForm::zero(3, 1));
    }
}
