//! Singular expansions in `X = sqrt(1 - x/ρ)` by undetermined coefficients
//! on Taylor jets, and the resulting asymptotic constants.

use rug::float::Constant;
use rug::Float;

use super::jet::{Jet, JetSpace};
use super::system::{pow_ring, solve_system, RootSolution, Seed, SingularSystem};
use super::tolerance;
use crate::dissections::Evaluator;
use crate::error::{Error, Result};
use crate::ring::CisRing;

/// `Ĉ(x) = τ + Ĉ1 X + Ĉ2 X^2 + Ĉ3 X^3 + O(X^4)`.
#[derive(Clone, Debug)]
pub struct ChatExpansion {
    pub chat1: Float,
    pub chat2: Float,
    pub chat3: Float,
    /// `∂H/∂x` at `(ρ, τ)`.
    pub hx: Float,
    /// `∂²H/∂z²` at `(ρ, τ)`.
    pub hzz: Float,
}

/// Expansions of `C` and `G` at `ρ`, plus `C(ρ^r)` for `r >= 1`.
#[derive(Clone, Debug)]
pub struct CgExpansion {
    pub c_at_rho: Float,
    pub c1: Float,
    pub c2: Float,
    pub c3: Float,
    pub g_at_rho: Float,
    pub g2: Float,
    pub g3: Float,
    /// `C(ρ^r)` for `r = 1, 2, ...` until `ρ^r` underflows.
    pub c_at_powers: Vec<Float>,
}

/// Everything known about the dominant singularity of the outerplanar
/// system for one truncation and precision.
#[derive(Clone, Debug)]
pub struct SingularData {
    pub rho: Float,
    pub tau: Float,
    pub residual: Float,
    pub m_trunc: usize,
    pub digits: u32,
    pub chat: ChatExpansion,
    pub cg: CgExpansion,
}

impl SingularData {
    pub fn compute(m: usize, digits: u32) -> Result<Self> {
        let sys = SingularSystem::outerplanar(m, digits)?;
        let root = solve_system(&sys, &Seed::standard())?;
        Self::from_root(&sys, root)
    }

    pub fn from_root(sys: &SingularSystem, root: RootSolution) -> Result<Self> {
        let chat = singular_expansion_chat(sys, &root)?;
        let cg = singular_expansion_c_and_g(sys, &root, &chat)?;
        Ok(SingularData {
            rho: root.rho,
            tau: root.tau,
            residual: root.residual,
            m_trunc: root.m,
            digits: root.digits,
            chat,
            cg,
        })
    }

    pub fn prec(&self) -> u32 {
        self.rho.prec()
    }
}

/// `sum_{i+j <= K} h_ij dx^i dz^j` over a univariate jet.
fn taylor_substitute(h: &Jet, dx: &Jet, dz: &Jet) -> Jet {
    let order = h.space().order();
    let mut dxp = vec![dx.int(1)];
    let mut dzp = vec![dz.int(1)];
    for k in 1..=order {
        dxp.push(dxp[k - 1].mul(dx));
        dzp.push(dzp[k - 1].mul(dz));
    }
    let mut acc = dx.int(0);
    for i in 0..=order {
        for j in 0..=order - i {
            let c = h.coeff(&[i, j]);
            if !c.is_zero() {
                acc = acc.add(&dxp[i].mul(&dzp[j]).scale(&c));
            }
        }
    }
    acc
}

fn x_jet(sp: &std::sync::Arc<JetSpace>, coeffs: &[&Float]) -> Jet {
    let terms: Vec<(Vec<usize>, Float)> =
        coeffs.iter().enumerate().map(|(k, c)| (vec![k], (*c).clone())).collect();
    Jet::from_terms(sp, &terms)
}

/// `Ĉ1, Ĉ2, Ĉ3` from the order-4 Taylor jet of `H` at `(ρ, τ)`, with
/// `x = ρ(1 - X^2)` and the `X^k` equations solved one unknown at a time.
pub fn singular_expansion_chat(sys: &SingularSystem, root: &RootSolution) -> Result<ChatExpansion> {
    let p = sys.prec();
    let (rho, tau) = (&root.rho, &root.tau);
    let h = sys.h_jet(rho, tau, 4)?;
    let hx = h.coeff(&[1, 0]);
    let hzz = Float::with_val(p, h.coeff(&[0, 2]) * 2u32);
    if hx <= 0 || hzz <= 0 {
        return Err(Error::Solver(format!(
            "degenerate singular point: H_x = {}, H_zz = {}",
            hx.to_f64(),
            hzz.to_f64()
        )));
    }
    let half_hzz = h.coeff(&[0, 2]);
    let y1 = -(Float::with_val(p, rho * &hx) / &half_hzz).sqrt();

    let sp = JetSpace::new(1, 4, p);
    let zero = Float::new(p);
    let neg_rho = Float::with_val(p, -rho);
    let dx = x_jet(&sp, &[&zero, &zero, &neg_rho]);
    let coeff_at = |y2: &Float, y3: &Float, k: usize| -> Float {
        let dz = x_jet(&sp, &[&zero, &y1, y2, y3]);
        taylor_substitute(&h, &dx, &dz).coeff(&[k])
    };
    // Each X^k equation is affine in the newest unknown.
    let one = Float::with_val(p, 1);
    let solve = |f: &dyn Fn(&Float) -> Float| -> Float {
        let f0 = f(&zero);
        let slope = Float::with_val(p, f(&one) - &f0);
        Float::with_val(p, -f0 / slope)
    };
    let y2 = solve(&|v| coeff_at(v, &zero, 3));
    let y3 = solve(&|v| coeff_at(&y2, v, 4));
    Ok(ChatExpansion { chat1: y1, chat2: y2, chat3: y3, hx, hzz })
}

/// `1/τ + τ/(τ^2 - 6τ + 1)^(3/2)`, the closed form of `∂²H/∂z²` at the
/// singular point of the outerplanar system.
pub fn hzz_closed_form(tau: &Float) -> Float {
    let p = tau.prec();
    let q = Float::with_val(p, tau * tau) - Float::with_val(p, tau * 6u32) + 1u32;
    let q32 = Float::with_val(p, &q * Float::with_val(p, q.sqrt_ref()));
    Float::with_val(p, tau.recip_ref()) + Float::with_val(p, tau / &q32)
}

/// `C(x^k)` as a jet in `X`, given `x` as a jet in `X`.
fn connected_at_power(sys: &SingularSystem, x: &Jet, k: usize, s1: Option<Jet>, eps: &Float) -> Result<Jet> {
    let rho = x.value().clone();
    let s1 = s1.unwrap_or_else(|| sys.chat().eval(x, k));
    let s2 = sys.chat().eval(x, 2 * k);
    let family = |d: usize| -> Option<Jet> {
        let r = Float::with_val(rho.prec(), rug::ops::Pow::pow(&rho, (k * d) as u32));
        (r >= *eps).then(|| sys.chat().eval(x, k * d))
    };
    let ev = Evaluator::new(s1.clone(), s2, sys.y().clone(), sys.family().faces(), &family)?;
    Ok(s1.add(&ev.dissection()?).sub(&ev.vertex_rooted()?))
}

pub(crate) fn underflow_eps(prec: u32) -> Float {
    Float::with_val(prec, Float::i_exp(1, -(prec as i32)))
}

/// Injects the expansion of `Ĉ` into `C = Ĉ + Z(D; Ĉ) - Z(V; Ĉ)` and
/// `G = exp(sum_k C(x^k)/k)`.
pub fn singular_expansion_c_and_g(
    sys: &SingularSystem,
    root: &RootSolution,
    chat: &ChatExpansion,
) -> Result<CgExpansion> {
    let p = sys.prec();
    let eps = underflow_eps(p);
    let sp = JetSpace::new(1, 4, p);
    let zero = Float::new(p);
    let neg_rho = Float::with_val(p, -&root.rho);
    let x = x_jet(&sp, &[&root.rho, &zero, &neg_rho]);
    let s1 = x_jet(&sp, &[&root.tau, &chat.chat1, &chat.chat2, &chat.chat3]);
    let c = connected_at_power(sys, &x, 1, Some(s1), &eps)?;
    let c1 = c.coeff(&[1]);
    let limit = Float::with_val(p, 1e-20);
    if Float::with_val(p, c1.abs_ref()) > limit {
        return Err(Error::Consistency(format!("C1 = {} does not vanish", c1.to_f64())));
    }
    let mut exponent = c.clone();
    let mut c_at_powers = vec![c.value().clone()];
    let mut k = 2;
    loop {
        let rk = Float::with_val(p, rug::ops::Pow::pow(&root.rho, k as u32));
        if rk < eps {
            break;
        }
        let ck = connected_at_power(sys, &x, k, None, &eps)?;
        c_at_powers.push(ck.value().clone());
        exponent = exponent.add(&ck.ratio(1, k as u64));
        k += 1;
    }
    let g = exponent.exp()?;
    let out = CgExpansion {
        c_at_rho: c.value().clone(),
        c1,
        c2: c.coeff(&[2]),
        c3: c.coeff(&[3]),
        g_at_rho: g.value().clone(),
        g2: g.coeff(&[2]),
        g3: g.coeff(&[3]),
        c_at_powers,
    };
    let expected = Float::with_val(p, &out.g_at_rho * &out.c3);
    let gap = Float::with_val(p, &expected - &out.g3).abs();
    if gap > Float::with_val(p, expected.abs_ref()) * tolerance(sys.digits()) {
        return Err(Error::Consistency("G3 differs from G(ρ) C3".into()));
    }
    Ok(out)
}

/// Constants of `a_n ~ const n^(-5/2) r^(-n)`.
#[derive(Clone, Debug)]
pub struct AsymptoticConstants {
    /// Dissections, `r = δ`.
    pub d: Float,
    /// Connected outerplanar graphs, `r = ρ`.
    pub c: Float,
    /// Outerplanar graphs, `r = ρ`.
    pub g: Float,
    /// `δ = 3 - 2 sqrt 2`.
    pub delta: Float,
    pub delta_inv: Float,
    pub rho_inv: Float,
}

pub fn asymptotic_constants(sd: &SingularData) -> AsymptoticConstants {
    let p = sd.prec();
    let pi = Float::with_val(p, Constant::Pi);
    let sqrt_pi = Float::with_val(p, pi.sqrt_ref());
    let sqrt2 = Float::with_val(p, 2u32).sqrt();
    let base = Float::with_val(p, &sqrt2 * 3u32) - 4u32;
    let num = Float::with_val(p, &base * Float::with_val(p, base.sqrt_ref()));
    let den = Float::with_val(p, &pi * 2u32).sqrt() * 8u32;
    let d = num / den;
    let scale = |v: &Float| Float::with_val(p, v * 3u32) / Float::with_val(p, &sqrt_pi * 4u32);
    let delta = Float::with_val(p, 3u32) - Float::with_val(p, &sqrt2 * 2u32);
    AsymptoticConstants {
        d,
        c: scale(&sd.cg.c3),
        g: scale(&sd.cg.g3),
        delta_inv: Float::with_val(p, 3u32) + Float::with_val(p, &sqrt2 * 2u32),
        delta,
        rho_inv: Float::with_val(p, sd.rho.recip_ref()),
    }
}

/// `x^k` for a value or jet; re-exported for the statistics code.
pub(crate) fn power<R: CisRing>(x: &R, k: usize) -> R {
    pow_ring(x, k)
}
