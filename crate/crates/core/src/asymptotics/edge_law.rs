//! Gaussian limit laws for the number of edges, from the movement of the
//! dominant singularity `x0(y)` with the edge weight `y`.

use rayon::prelude::*;
use rug::Float;

use super::jet::{Jet, JetSpace};
use super::system::{delta_at, solve_system, RootSolution, Seed, SingularSystem};
use super::{bits_for_digits, check_digits};
use crate::error::{usage, Error, Result};
use crate::ring::CisRing;

/// Mean `μ n` and variance `σ² n` of the edge count, with the derivatives
/// of the singularity they come from.
#[derive(Clone, Debug)]
pub struct EdgeLaw {
    pub mu: Float,
    pub sigma2: Float,
    pub x0_at_1: Float,
    pub x0_prime_1: Float,
    pub x0_doubleprime_1: Float,
}

impl EdgeLaw {
    pub fn from_derivatives(x0: Float, d1: Float, d2: Float) -> Result<Self> {
        let p = x0.prec();
        let r1 = Float::with_val(p, &d1 / &x0);
        let r2 = Float::with_val(p, &d2 / &x0);
        let mu = Float::with_val(p, -&r1);
        let sigma2 = Float::with_val(p, &r1 * &r1) - r2 - &r1;
        if sigma2 <= 0 {
            return Err(Error::Solver(format!("variance condition fails: σ² = {}", sigma2.to_f64())));
        }
        Ok(EdgeLaw { mu, sigma2, x0_at_1: x0, x0_prime_1: d1, x0_doubleprime_1: d2 })
    }

    /// Recomputes `(μ, σ²)` from the stored derivatives.
    pub fn recompute(&self) -> (Float, Float) {
        let p = self.x0_at_1.prec();
        let r1 = Float::with_val(p, &self.x0_prime_1 / &self.x0_at_1);
        let r2 = Float::with_val(p, &self.x0_doubleprime_1 / &self.x0_at_1);
        (Float::with_val(p, -&r1), Float::with_val(p, &r1 * &r1) - r2 - r1)
    }
}

/// Two-connected outerplanar graphs: `x0(y) = δ(y)`, differentiated
/// exactly on a jet.
pub fn edge_law_dissections(digits: u32) -> Result<EdgeLaw> {
    check_digits(digits)?;
    let p = bits_for_digits(digits);
    let sp = JetSpace::new(1, 2, p);
    let y = Jet::variable(&sp, 0, &Float::with_val(p, 1));
    let inv = y.recip()?;
    let delta = inv.add_int(2).sub(&inv.add_int(1).sqrt()?.ratio(2, 1));
    debug_assert!(crate::ring::float_close(delta.value(), &delta_at(&Float::with_val(p, 1))));
    let d2 = Float::with_val(p, delta.coeff(&[2]) * 2u32);
    EdgeLaw::from_derivatives(delta.value().clone(), delta.coeff(&[1]), d2)
}

/// Connected (and all) outerplanar graphs: `x0(y) = ρ(y)` from the edge
/// weighted system at `y = 1, 1 ± h, 1 ± 2h`, differentiated by central
/// differences with one Richardson step.
pub fn edge_law_outerplanar(m: usize, h: f64, digits: u32) -> Result<(EdgeLaw, RootSolution)> {
    check_digits(digits)?;
    if !(h > 0.0 && h < 0.01) {
        return usage("finite-difference step must lie in (0, 0.01)");
    }
    let p = bits_for_digits(digits);
    let chat = SingularSystem::edge_family(m)?;
    let one = Float::with_val(p, 1);
    let centre = SingularSystem::edge_weighted(&chat, &one, digits)?;
    let base = solve_system(&centre, &Seed::standard())?;
    let seed = Seed::Point(base.rho.clone(), base.tau.clone());
    let hf = Float::with_val(p, h);
    let offsets = [-2i32, -1, 1, 2];
    let rhos: Vec<Result<Float>> = offsets
        .par_iter()
        .map(|&o| {
            let y = Float::with_val(p, &one + Float::with_val(p, &hf * o));
            let sys = SingularSystem::edge_weighted(&chat, &y, digits)?;
            Ok(solve_system(&sys, &seed)?.rho)
        })
        .collect();
    let mut r = Vec::with_capacity(4);
    for v in rhos {
        r.push(v?);
    }
    let (m2, m1, p1, p2) = (&r[0], &r[1], &r[2], &r[3]);
    let r0 = &base.rho;
    let first = |a: &Float, b: &Float, step: &Float| Float::with_val(p, a - b) / Float::with_val(p, step * 2u32);
    let second = |a: &Float, b: &Float, step: &Float| {
        let s = Float::with_val(p, a + b) - Float::with_val(p, r0 * 2u32);
        s / Float::with_val(p, step * step)
    };
    let h2 = Float::with_val(p, &hf * 2u32);
    let richardson = |fine: Float, coarse: Float| (fine * 4u32 - coarse) / 3u32;
    let d1 = richardson(first(p1, m1, &hf), first(p2, m2, &h2));
    let d2 = richardson(second(p1, m1, &hf), second(p2, m2, &h2));
    Ok((EdgeLaw::from_derivatives(r0.clone(), d1, d2)?, base))
}
