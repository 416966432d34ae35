//! Multiprecision singularity analysis: the dominant singularity, singular
//! expansions, asymptotic constants and limit-law statistics.
//!
//! Working precision is always passed explicitly as a number of decimal
//! digits; results are `rug::Float` values at the matching binary precision.

pub mod edge_law;
pub mod expansion;
pub mod jet;
pub mod stats;
pub mod system;

use rug::Float;

use crate::error::{domain, usage, Result};
use crate::series::PowerSeries;

pub use edge_law::{edge_law_dissections, edge_law_outerplanar, EdgeLaw};
pub use expansion::{
    asymptotic_constants, singular_expansion_c_and_g, singular_expansion_chat, AsymptoticConstants,
    CgExpansion, ChatExpansion, SingularData,
};
pub use jet::{Jet, JetSpace};
pub use stats::{statistics, Statistics};
pub use system::{bipartite_growth, solve_rho_tau, solve_system, Family, RootSolution, Seed, SingularSystem};

pub const MIN_DIGITS: u32 = 30;
pub const DEFAULT_DIGITS: u32 = 80;
pub const DEFAULT_M: usize = 25;
/// Default finite-difference step for the edge law.
pub const DEFAULT_STEP: f64 = 1e-6;

/// Binary precision for `digits` decimal digits plus guard bits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 64
}

pub(crate) fn check_digits(digits: u32) -> Result<()> {
    if digits < MIN_DIGITS {
        return usage(format!("at least {MIN_DIGITS} digits are required, got {digits}"));
    }
    Ok(())
}

/// Solve tolerance `10^-(digits - 20)`.
pub fn tolerance(digits: u32) -> Float {
    let p = bits_for_digits(digits);
    let ten = Float::with_val(p, 10);
    Float::with_val(p, ten.pow_ref_i32(-(digits as i32 - 20)))
}

trait PowI32 {
    fn pow_ref_i32(&self, e: i32) -> Float;
}

impl PowI32 for Float {
    fn pow_ref_i32(&self, e: i32) -> Float {
        Float::with_val(self.prec(), rug::ops::Pow::pow(self, e))
    }
}

/// A truncated sum together with a geometric estimate of the omitted tail.
#[derive(Clone, Debug)]
pub struct SeriesValue {
    pub value: Float,
    pub tail: Float,
}

/// `sum_{n <= N} f_n p^n` plus the tail heuristic
/// `f_N p^N / (1 - p r)`, `r = f_N / f_{N-1}`.
pub fn eval_series(f: &PowerSeries, point: &Float) -> Result<SeriesValue> {
    if *point < 0 || *point >= 1 {
        return domain(format!("evaluation point {} is outside [0, 1)", point.to_f64()));
    }
    let p = point.prec();
    let coeffs: Vec<Float> = f.coeffs().iter().map(|c| Float::with_val(p, c)).collect();
    let mut value = Float::new(p);
    for c in coeffs.iter().rev() {
        value *= point;
        value += c;
    }
    let n = f.order();
    let mut tail = Float::new(p);
    if n >= 1 && !coeffs[n].is_zero() && !coeffs[n - 1].is_zero() {
        let ratio = Float::with_val(p, &coeffs[n] / &coeffs[n - 1]);
        let last = Float::with_val(p, &coeffs[n] * Float::with_val(p, rug::ops::Pow::pow(point, n as u32)));
        let den = Float::with_val(p, 1u32) - Float::with_val(p, point * &ratio);
        tail = if den > 0 { last / den } else { Float::with_val(p, rug::float::Special::Infinity) };
    }
    Ok(SeriesValue { value, tail })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_evaluation() {
        let x = PowerSeries::x(3);
        let half = Float::with_val(100, 0.5);
        assert_eq!(eval_series(&x, &half).unwrap().value, 0.5);
        assert!(eval_series(&x, &Float::with_val(100, 1)).is_err());
        let d = crate::composition::dissections_generic(20, rug::Rational::from(1), crate::dissections::Faces::All)
            .unwrap();
        let pt = Float::with_val(100, (3.0 - 2.0 * 2f64.sqrt()) * 0.9);
        let v = eval_series(&d, &pt).unwrap();
        assert!(v.value > 0 && v.value.is_finite() && v.tail.is_finite());
    }
}
