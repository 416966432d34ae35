//! Limit-law constants for a random unlabeled outerplanar graph.

use rug::Float;

use super::expansion::{power, underflow_eps, SingularData};
use super::system::{Family, RootSolution, SingularSystem};
use crate::dissections::{Evaluator, Faces};
use crate::error::{Error, Result};
use crate::ring::CisRing;

#[derive(Clone, Debug)]
pub struct Statistics {
    /// `lim c_n / g_n = C3 / G3`.
    pub prob_connected: Float,
    /// `1 + sum_{r>=1} C(ρ^r)`.
    pub expected_components: Float,
    /// Mean `ρ/(1 - ρ)` of the isolated-vertex law.
    pub isolated_mean: Float,
    /// `P[k isolated vertices] = ρ^k (1 - ρ)` for `k = 0..isolated_law.len()`.
    pub isolated_law: Vec<Float>,
    /// `sum_k (ρ^k + D(ρ^k))`: components that are dissections, a single
    /// vertex counted as a (trivial) two-connected component.
    pub expected_two_connected: Float,
    /// `sum_k D(ρ^k)`: components with at least one edge that are dissections.
    pub expected_dissection_components: Float,
    /// `sum_k C_b(ρ^k)`.
    pub expected_bipartite: Float,
    pub rho_b: Float,
    /// `ρ / ρ_b`, below one.
    pub chromatic_ratio: Float,
}

/// Number of terms reported for the isolated-vertex law.
pub const ISOLATED_TERMS: usize = 10;

/// `C_A(x)` at a point for a family whose `Ĉ` values are supplied.
fn connected_value(
    s: &dyn Fn(usize) -> Float,
    faces: Faces,
    rho: &Float,
    k: usize,
    eps: &Float,
) -> Result<Float> {
    let fam = |d: usize| -> Option<Float> {
        let r = Float::with_val(rho.prec(), rug::ops::Pow::pow(rho, (k * d) as u32));
        (r >= *eps).then(|| s(k * d))
    };
    let s1 = s(k);
    let one = Float::with_val(rho.prec(), 1);
    let ev = Evaluator::new(s1.clone(), s(2 * k), one, faces, &fam)?;
    Ok(s1.add(&ev.dissection()?).sub(&ev.vertex_rooted()?))
}

/// `sum_{k>=1} f(k)` until `ρ^k` underflows the working precision.
fn power_sum(rho: &Float, mut f: impl FnMut(usize) -> Result<Float>) -> Result<Float> {
    let p = rho.prec();
    let eps = underflow_eps(p);
    let mut sum = Float::new(p);
    let mut k = 1;
    loop {
        let rk = Float::with_val(p, rug::ops::Pow::pow(rho, k as u32));
        if rk < eps {
            return Ok(sum);
        }
        sum += f(k)?;
        k += 1;
    }
}

/// Statistics from the singular data of the outerplanar system and the
/// solved bipartite system.
pub fn statistics(sd: &SingularData, bip: &SingularSystem, rho_b: &RootSolution) -> Result<Statistics> {
    if bip.family() != Family::Bipartite {
        return Err(Error::Usage("statistics need the bipartite system".into()));
    }
    let p = sd.prec();
    let rho = &sd.rho;
    let eps = underflow_eps(p);
    let one = Float::with_val(p, 1);
    let one_minus = Float::with_val(p, &one - rho);

    let prob_connected = Float::with_val(p, &sd.cg.c3 / &sd.cg.g3);
    let mut expected_components = one.clone();
    for v in &sd.cg.c_at_powers {
        expected_components += v;
    }
    let isolated_mean = Float::with_val(p, rho / &one_minus);
    let isolated_law = (0..ISOLATED_TERMS)
        .map(|k| Float::with_val(p, power(rho, k) * &one_minus))
        .collect();

    let plain = |j: usize| power(rho, j);
    let dissections = power_sum(rho, |k| {
        let fam = |d: usize| -> Option<Float> {
            let r = power(rho, k * d);
            (r >= eps).then_some(r)
        };
        let ev = Evaluator::new(plain(k), plain(2 * k), one.clone(), Faces::All, &fam)?;
        ev.dissection()
    })?;
    let vertices = power_sum(rho, |k| Ok(plain(k)))?;
    let expected_two_connected = Float::with_val(p, &dissections + &vertices);

    let chat_b1 = bip
        .solve_z(rho)
        .ok_or_else(|| Error::Solver("Ĉ_b(ρ) has no solution below ρ_b".into()))?;
    let chat_b = |j: usize| if j == 1 { chat_b1.clone() } else { bip.chat().eval(rho, j) };
    let expected_bipartite = power_sum(rho, |k| connected_value(&chat_b, Faces::Even, rho, k, &eps))?;

    let chromatic_ratio = Float::with_val(p, rho / &rho_b.rho);
    Ok(Statistics {
        prob_connected,
        expected_components,
        isolated_mean,
        isolated_law,
        expected_two_connected,
        expected_dissection_components: dissections,
        expected_bipartite,
        rho_b: Float::with_val(p, &rho_b.rho),
        chromatic_ratio,
    })
}
