//! The small algebra interface shared by every cycle index evaluator.
//!
//! Exact series, multiprecision reals and Taylor jets all implement
//! [`CisRing`], so one set of formulas serves the exact tables, the
//! edge-marked tables and the numeric singularity analysis.

use rug::{Float, Rational};

use crate::error::{domain, Result};
use crate::series::{Coeff, Series, YPoly};

/// Values multiplying a ring element: the edge variable `y` lives here.
pub trait Scalar: Clone {
    fn mul_s(&self, o: &Self) -> Self;
    fn powu(&self, k: u32) -> Self {
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul_s(self);
        }
        acc
    }
}

impl Scalar for Rational {
    fn mul_s(&self, o: &Self) -> Self {
        Rational::from(self * o)
    }
}

impl Scalar for YPoly {
    fn mul_s(&self, o: &Self) -> Self {
        self.mul_ref(o)
    }
    fn powu(&self, k: u32) -> Self {
        if let (Some(1), Some(1)) = (self.degree(), self.low_degree()) {
            if self.coeff(1) == 1 {
                return YPoly::monomial(k as usize, Rational::from(1));
            }
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

impl Scalar for Float {
    fn mul_s(&self, o: &Self) -> Self {
        Float::with_val(self.prec(), self * o)
    }
    fn powu(&self, k: u32) -> Self {
        Float::with_val(self.prec(), rug::ops::Pow::pow(self, k))
    }
}

pub trait CisRing: Clone + Sized {
    type Scalar: Scalar;

    /// A constant of the same shape as `self`.
    fn lift(&self, c: &Self::Scalar) -> Self;
    fn int(&self, v: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, s: &Self::Scalar) -> Self;
    /// Multiply by `num/den`.
    fn ratio(&self, num: i64, den: u64) -> Self;
    fn div_scalar(&self, s: &Self::Scalar) -> Result<Self>;
    fn recip(&self) -> Result<Self>;
    fn sqrt(&self) -> Result<Self>;
    fn ln(&self) -> Result<Self>;
    fn exp(&self) -> Result<Self>;
    /// Equality for exact rings, agreement to working precision otherwise.
    fn close_to(&self, o: &Self) -> bool;

    fn sq(&self) -> Self {
        self.mul(self)
    }
    fn add_int(&self, v: i64) -> Self {
        self.add(&self.int(v))
    }
    fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.recip()?))
    }
}

impl<C: Coeff + Scalar> CisRing for Series<C> {
    type Scalar = C;

    fn lift(&self, c: &C) -> Self {
        Series::constant(self.order(), c.clone())
    }
    fn int(&self, v: i64) -> Self {
        Series::constant(self.order(), C::from_rational(Rational::from(v)))
    }
    fn add(&self, o: &Self) -> Self {
        self.add_t(o)
    }
    fn sub(&self, o: &Self) -> Self {
        self.sub_t(o)
    }
    fn mul(&self, o: &Self) -> Self {
        self.mul_t(o)
    }
    fn neg(&self) -> Self {
        self.negate()
    }
    fn scale(&self, s: &C) -> Self {
        self.scale_by(s)
    }
    fn ratio(&self, num: i64, den: u64) -> Self {
        self.scale_ratio(num, den)
    }
    fn div_scalar(&self, s: &C) -> Result<Self> {
        let c = self
            .coeffs()
            .iter()
            .map(|a| a.div_exact(s))
            .collect::<Option<Vec<C>>>();
        match c {
            Some(c) => Ok(Series::from_coeffs(c)),
            None => domain("inexact division of series coefficients"),
        }
    }
    fn recip(&self) -> Result<Self> {
        Series::recip(self)
    }
    fn sqrt(&self) -> Result<Self> {
        self.sqrt1()
    }
    fn ln(&self) -> Result<Self> {
        self.log1()
    }
    fn exp(&self) -> Result<Self> {
        self.exp0()
    }
    fn close_to(&self, o: &Self) -> bool {
        self == o
    }
}

/// Tolerance used by [`CisRing::close_to`] on multiprecision values:
/// agreement up to a few guard bits below the working precision.
pub(crate) fn float_close(a: &Float, b: &Float) -> bool {
    let prec = a.prec().min(b.prec());
    let diff = Float::with_val(prec, a - b).abs();
    let scale = Float::with_val(prec, a.abs_ref()).max(&Float::with_val(prec, 1));
    let tol = Float::with_val(prec, Float::i_exp(1, -(prec as i32 - 12)));
    diff <= Float::with_val(prec, &tol * &scale)
}

impl CisRing for Float {
    type Scalar = Float;

    fn lift(&self, c: &Float) -> Self {
        Float::with_val(self.prec(), c)
    }
    fn int(&self, v: i64) -> Self {
        Float::with_val(self.prec(), v)
    }
    fn add(&self, o: &Self) -> Self {
        Float::with_val(self.prec(), self + o)
    }
    fn sub(&self, o: &Self) -> Self {
        Float::with_val(self.prec(), self - o)
    }
    fn mul(&self, o: &Self) -> Self {
        Float::with_val(self.prec(), self * o)
    }
    fn neg(&self) -> Self {
        Float::with_val(self.prec(), -self)
    }
    fn scale(&self, s: &Float) -> Self {
        Float::with_val(self.prec(), self * s)
    }
    fn ratio(&self, num: i64, den: u64) -> Self {
        let t = Float::with_val(self.prec(), self * num);
        Float::with_val(self.prec(), t / den)
    }
    fn div_scalar(&self, s: &Float) -> Result<Self> {
        if s.is_zero() {
            return domain("division by zero");
        }
        Ok(Float::with_val(self.prec(), self / s))
    }
    fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return domain("reciprocal of zero");
        }
        Ok(Float::with_val(self.prec(), self.recip_ref()))
    }
    fn sqrt(&self) -> Result<Self> {
        if self.is_sign_negative() && !self.is_zero() {
            return domain("square root of a negative number");
        }
        Ok(Float::with_val(self.prec(), self.sqrt_ref()))
    }
    fn ln(&self) -> Result<Self> {
        if *self <= 0 {
            return domain("logarithm of a non-positive number");
        }
        Ok(Float::with_val(self.prec(), self.ln_ref()))
    }
    fn exp(&self) -> Result<Self> {
        Ok(Float::with_val(self.prec(), self.exp_ref()))
    }
    fn close_to(&self, o: &Self) -> bool {
        float_close(self, o)
    }
}
