use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Signed;

use super::{Polynomial, Rational};
use crate::error::Error;

/// A quotient of polynomials.
///
/// No polynomial gcd reduction is attempted: the representation is only
/// normalized up to a scalar (the denominator is kept with coprime integer
/// coefficients and positive leading coefficient), and equality is decided by
/// cross-multiplication. Zero is stored as `0/1`.
#[derive(Clone)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Build `num / den`, rejecting a zero denominator.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, Error> {
        assert_eq!(num.dim(), den.dim(), "ambient dimension mismatch");
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    /// Private constructor; `den` must be nonzero.
    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            let dim = num.dim();
            return RationalFunction {
                num,
                den: Polynomial::one(dim),
            };
        }
        let mut factor = den.content();
        if den.leading_coefficient().unwrap().is_negative() {
            factor = -factor;
        }
        let inv = factor.recip();
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn zero(dim: usize) -> Self {
        Polynomial::zero(dim).into()
    }

    pub fn one(dim: usize) -> Self {
        Polynomial::one(dim).into()
    }

    pub fn constant(dim: usize, value: Rational) -> Self {
        Polynomial::constant(dim, value).into()
    }

    pub fn var(dim: usize, axis: usize) -> Self {
        Polynomial::var(dim, axis).into()
    }

    pub fn dim(&self) -> usize {
        self.num.dim()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    /// Exact: with a nonzero denominator, the fraction vanishes iff the
    /// numerator does.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.to_polynomial().is_some()
    }

    /// The fraction as a polynomial when the denominator divides exactly.
    pub fn to_polynomial(&self) -> Option<Polynomial> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        self.num.try_exact_div(&self.den)
    }

    /// `Some(c)` when the value is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        let num = self.num.as_constant()?;
        let den = self.den.as_constant()?;
        Some(num / den)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(
            &self.num * &rhs.den,
            &self.den * &rhs.num,
        ))
    }

    pub fn recip(&self) -> Result<Self, Error> {
        Self::one(self.dim()).checked_div(self)
    }

    /// Quotient rule: `(f/g)' = (f'g - fg') / g^2`.
    pub fn partial(&self, axis: usize) -> Self {
        if self.den.is_one() {
            return self.num.partial(axis).into();
        }
        let num = &(&self.num.partial(axis) * &self.den) - &(&self.num * &self.den.partial(axis));
        let den = &self.den * &self.den;
        Self::normalized(num, den)
    }

    /// Exact substitution; fails when the denominator vanishes at the point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, Error> {
        let den = self.den.eval(point);
        if num_traits::Zero::is_zero(&den) {
            return Err(Error::PoleAtPoint);
        }
        Ok(self.num.eval(point) / den)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::normalized(self.num.scale(factor), self.den.clone())
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(num: Polynomial) -> Self {
        let dim = num.dim();
        RationalFunction {
            num,
            den: Polynomial::one(dim),
        }
    }
}

impl PartialEq for RationalFunction {
    /// Cross-multiplication: `a/b = c/d` iff `ad - cb = 0`.
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        (&self.num * &other.den) == (&other.num * &self.den)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        assert_eq!(self.dim(), rhs.dim(), "ambient dimension mismatch");
        if self.den == rhs.den {
            return RationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        assert_eq!(self.dim(), rhs.dim(), "ambient dimension mismatch");
        RationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}
