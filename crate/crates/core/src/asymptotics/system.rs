//! The implicit system `H(x, z) = 0`, `∂H/∂z = 0` whose solution is the
//! dominant singularity `ρ` and the value `τ = Ĉ(ρ)`.
//!
//! `H(x, z) = x exp(T(z, Ĉ(x^2); y) + sum_{k=2..m} T(Ĉ(x^k), Ĉ(x^2k); y^k) / k) - z`
//! with `T = Z(V) / s1` and `Ĉ` replaced by its truncation `Ĉ^[m]`.

use rug::ops::Pow;
use rug::Float;

use super::jet::{Jet, JetSpace};
use super::{bits_for_digits, check_digits, tolerance};
use crate::bipartite::bipartite_chat_series;
use crate::composition::{chat_series, chat_series_edge};
use crate::dissections::{Evaluator, Faces};
use crate::error::{usage, Error, Result};
use crate::ring::CisRing;
use crate::series::{EdgeSeries, PowerSeries, YPoly};

const MAX_NEWTON: usize = 200;
const MAX_HALVINGS: usize = 60;

/// `Ĉ^[m](x^k; y^k)` with the coefficients `ĉ_n(y^k)` evaluated once.
#[derive(Clone, Debug)]
pub struct TruncatedChat {
    m: usize,
    prec: u32,
    y: Float,
    base: Vec<YPoly>,
    by_power: Vec<Vec<Float>>,
}

impl TruncatedChat {
    fn new(base: Vec<YPoly>, y: &Float, prec: u32) -> Self {
        let m = base.len() - 1;
        let mut t = TruncatedChat { m, prec, y: Float::with_val(prec, y), base, by_power: Vec::new() };
        t.by_power = (1..=2 * m.max(1)).map(|k| t.coeffs_for(k)).collect();
        t
    }

    fn coeffs_for(&self, k: usize) -> Vec<Float> {
        let yk = Float::with_val(self.prec, (&self.y).pow(k as u32));
        self.base.iter().map(|c| eval_ypoly(c, &yk, self.prec)).collect()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `Ĉ^[m](x^k; y^k)`.
    pub fn eval<R: CisRing<Scalar = Float>>(&self, x: &R, k: usize) -> R {
        let owned;
        let c = match self.by_power.get(k - 1) {
            Some(c) => c,
            None => {
                owned = self.coeffs_for(k);
                &owned
            }
        };
        let xk = pow_ring(x, k);
        let mut acc = x.lift(&c[self.m]);
        for n in (1..self.m).rev() {
            acc = acc.mul(&xk).add(&x.lift(&c[n]));
        }
        acc.mul(&xk)
    }
}

fn eval_ypoly(p: &YPoly, y: &Float, prec: u32) -> Float {
    let mut acc = Float::new(prec);
    for q in p.coeffs().iter().rev() {
        acc *= y;
        acc += Float::with_val(prec, q);
    }
    acc
}

pub(crate) fn pow_ring<R: CisRing>(x: &R, k: usize) -> R {
    let mut result: Option<R> = None;
    let mut base = x.clone();
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            result = Some(match result {
                None => base.clone(),
                Some(r) => r.mul(&base),
            });
        }
        e >>= 1;
        if e > 0 {
            base = base.sq();
        }
    }
    result.unwrap_or_else(|| x.int(1))
}

/// Which class of graphs the system describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Outerplanar,
    Bipartite,
}

impl Family {
    pub fn faces(self) -> Faces {
        match self {
            Family::Outerplanar => Faces::All,
            Family::Bipartite => Faces::Even,
        }
    }
}

/// The truncated function `H^[m]` for one family and one edge weight `y`.
#[derive(Clone, Debug)]
pub struct SingularSystem {
    family: Family,
    digits: u32,
    prec: u32,
    y: Float,
    chat: TruncatedChat,
}

impl SingularSystem {
    pub fn outerplanar(m: usize, digits: u32) -> Result<Self> {
        check_args(m, digits)?;
        Self::from_series(Family::Outerplanar, &chat_series(m)?, digits)
    }

    pub fn bipartite(m: usize, digits: u32) -> Result<Self> {
        check_args(m, digits)?;
        Self::from_series(Family::Bipartite, &bipartite_chat_series(m)?, digits)
    }

    /// Edge-weighted system from `Ĉ(x, y)` truncated at its own order.
    pub fn edge_weighted(chat: &EdgeSeries, y: &Float, digits: u32) -> Result<Self> {
        check_args(chat.order(), digits)?;
        if *y <= 0 {
            return usage("edge weight must be positive");
        }
        let prec = bits_for_digits(digits);
        Ok(SingularSystem {
            family: Family::Outerplanar,
            digits,
            prec,
            y: Float::with_val(prec, y),
            chat: TruncatedChat::new(chat.coeffs().to_vec(), y, prec),
        })
    }

    fn from_series(family: Family, chat: &PowerSeries, digits: u32) -> Result<Self> {
        let prec = bits_for_digits(digits);
        let one = Float::with_val(prec, 1);
        let base = chat.to_edge().coeffs().to_vec();
        Ok(SingularSystem { family, digits, prec, y: one.clone(), chat: TruncatedChat::new(base, &one, prec) })
    }

    /// Shares the exact coefficients of `Ĉ(x, y)` across several weights.
    pub fn edge_family(m: usize) -> Result<EdgeSeries> {
        if m == 0 {
            return usage("truncation m must be at least 1");
        }
        chat_series_edge(m)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> usize {
        self.chat.m
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn y(&self) -> &Float {
        &self.y
    }

    pub fn chat(&self) -> &TruncatedChat {
        &self.chat
    }

    pub fn float(&self, v: impl Into<f64>) -> Float {
        Float::with_val(self.prec, v.into())
    }

    /// `Z(V; s1, s2; y) / s1` for this family.
    pub fn vertex_term<R: CisRing<Scalar = Float>>(&self, s1: &R, s2: &R, y: &Float) -> Result<R> {
        let none = |_: usize| None;
        Evaluator::new(s1.clone(), s2.clone(), y.clone(), self.family.faces(), &none)?.vertex_rooted_over_s1()
    }

    /// The `k >= 2` part of the exponent; it depends on `x` only.
    pub fn outer_sum<R: CisRing<Scalar = Float>>(&self, x: &R) -> Result<R> {
        let mut s = x.int(0);
        for k in 2..=self.chat.m {
            let yk = Float::with_val(self.prec, (&self.y).pow(k as u32));
            let a = self.chat.eval(x, k);
            let b = self.chat.eval(x, 2 * k);
            let t = self.vertex_term(&a, &b, &yk)?;
            s = s.add(&t.ratio(1, k as u64));
        }
        Ok(s)
    }

    pub fn h<R: CisRing<Scalar = Float>>(&self, x: &R, z: &R) -> Result<R> {
        let b = self.chat.eval(x, 2);
        let s = self.vertex_term(z, &b, &self.y)?.add(&self.outer_sum(x)?);
        Ok(x.mul(&s.exp()?).sub(z))
    }

    /// Bivariate Taylor jet of `H` at `(x, z)` up to total order `order`;
    /// variable 0 is `x`, variable 1 is `z`.
    pub fn h_jet(&self, x: &Float, z: &Float, order: usize) -> Result<Jet> {
        let sp = JetSpace::new(2, order, self.prec);
        self.h(&Jet::variable(&sp, 0, x), &Jet::variable(&sp, 1, z))
    }

    /// `∂H/∂z` from `(H + z) ∂(Z(V)/s1)/∂s1 - 1`, independent of the jet
    /// derivative of the whole of `H`.
    pub fn hz_closed_form(&self, x: &Float, z: &Float) -> Result<Float> {
        let h = self.h(x, z)?;
        let sp = JetSpace::new(1, 1, self.prec);
        let s1 = Jet::variable(&sp, 0, z);
        let b = Jet::constant(&sp, &self.chat.eval(x, 2));
        let t = self.vertex_term(&s1, &b, &self.y)?;
        let hz = Float::with_val(self.prec, &h + z) * t.coeff(&[1]);
        Ok(hz - 1u32)
    }

    /// Residual of the simplified condition
    /// `τ(1 + b(b - 3) - b^2 (τ - 3)/sqrt(τ^2 - 6τ + 1) - sqrt(b^2 - 6b + 1)) = 8 b^2`
    /// with `b = Ĉ(ρ^2)`; only meaningful for plain outerplanar graphs.
    pub fn hz_simplified_residual(&self, x: &Float, z: &Float) -> Float {
        let p = self.prec;
        let b: Float = self.chat.eval(x, 2);
        let qt = Float::with_val(p, z * z) - Float::with_val(p, z * 6u32) + 1u32;
        let qb = Float::with_val(p, &b * &b) - Float::with_val(p, &b * 6u32) + 1u32;
        let b2 = Float::with_val(p, &b * &b);
        let bm3 = Float::with_val(p, &b - 3u32);
        let zm3 = Float::with_val(p, z - 3u32);
        let inner = Float::with_val(p, 1u32) + Float::with_val(p, &b * &bm3)
            - Float::with_val(p, &b2 * &zm3) / qt.sqrt()
            - qb.sqrt();
        Float::with_val(p, z * &inner) - Float::with_val(p, &b2 * 8u32)
    }

    /// Dominant singularity of the dissection series at edge weight `y`,
    /// `δ(y) = 2 + 1/y - 2 sqrt(1 + 1/y)`.
    pub fn delta(&self) -> Float {
        delta_at(&self.y)
    }

    /// Solves `H(x, z) = 0` for the smallest `z >= 0` at fixed `x` by Newton
    /// iteration from `z = 0`; `None` once `x` is past the singularity.
    pub fn solve_z(&self, x: &Float) -> Option<Float> {
        let sp = JetSpace::new(1, 1, self.prec);
        let xj = Jet::constant(&sp, x);
        let mut z = Float::new(self.prec);
        let eps = Float::with_val(self.prec, Float::i_exp(1, 12 - self.prec as i32));
        for _ in 0..MAX_NEWTON {
            let h = self.h(&xj, &Jet::variable(&sp, 0, &z)).ok()?;
            let (f, fz) = (h.value().clone(), h.coeff(&[1]));
            if fz >= 0 {
                return None;
            }
            let dz = -Float::with_val(self.prec, &f / &fz);
            z += &dz;
            if z >= 1 || !z.is_finite() {
                return None;
            }
            if dz.abs() <= eps {
                return Some(z);
            }
        }
        None
    }
}

pub(crate) fn delta_at(y: &Float) -> Float {
    let p = y.prec();
    let inv = Float::with_val(p, y.recip_ref());
    let r = Float::with_val(p, &inv + 1u32).sqrt() * 2u32;
    Float::with_val(p, 2u32) + inv - r
}

fn check_args(m: usize, digits: u32) -> Result<()> {
    if m == 0 {
        return usage("truncation m must be at least 1");
    }
    check_digits(digits)
}

/// `(ρ, τ)` for one truncated system.
#[derive(Clone, Debug)]
pub struct RootSolution {
    pub rho: Float,
    pub tau: Float,
    /// `max(|H|, |∂H/∂z|)` at the root.
    pub residual: Float,
    pub iterations: usize,
    pub m: usize,
    pub digits: u32,
}

/// Where Newton's method starts.
#[derive(Clone, Debug)]
pub enum Seed {
    Point(Float, Float),
    /// Bisection on `x` using [`SingularSystem::solve_z`].
    Bracket,
}

impl Seed {
    /// The starting point used for the outerplanar system.
    pub fn standard() -> Self {
        Seed::Point(Float::with_val(64, 0.134), Float::with_val(64, 0.17))
    }
}

/// Solves the system for plain outerplanar graphs with truncation `m`.
pub fn solve_rho_tau(m: usize, digits: u32) -> Result<RootSolution> {
    let sys = SingularSystem::outerplanar(m, digits)?;
    solve_system(&sys, &Seed::standard())
}

struct Step {
    f: [Float; 2],
    j: [[Float; 2]; 2],
}

fn newton_step(sys: &SingularSystem, x: &Float, z: &Float) -> Result<Step> {
    let h = sys.h_jet(x, z, 2)?;
    let two = Float::with_val(sys.prec, 2);
    Ok(Step {
        f: [h.coeff(&[0, 0]), h.coeff(&[0, 1])],
        j: [[h.coeff(&[1, 0]), h.coeff(&[0, 1])], [h.coeff(&[1, 1]), h.coeff(&[0, 2]) * two]],
    })
}

fn norm(f: &[Float; 2]) -> Float {
    let a = Float::with_val(f[0].prec(), f[0].abs_ref());
    let b = Float::with_val(f[1].prec(), f[1].abs_ref());
    a.max(&b)
}

fn in_domain(sys: &SingularSystem, x: &Float, z: &Float) -> bool {
    *x > 0 && *x < 1 && *z > 0 && *z < 1
        && (sys.family == Family::Bipartite || *z < sys.delta())
}

fn bracket_seed(sys: &SingularSystem) -> Result<(Float, Float)> {
    let coarse = SingularSystem { prec: 128, ..sys.clone() };
    let coarse = SingularSystem { chat: TruncatedChat::new(sys.chat.base.clone(), &sys.y, 128), ..coarse };
    let mut lo = Float::with_val(128, 0.001);
    let mut lo_z = coarse
        .solve_z(&lo)
        .ok_or_else(|| Error::Solver("no fixed point near the origin".into()))?;
    let mut hi = None;
    for i in 1..20 {
        let x = Float::with_val(128, i as f64 * 0.05);
        match coarse.solve_z(&x) {
            Some(z) => {
                lo = x;
                lo_z = z;
            }
            None => {
                hi = Some(x);
                break;
            }
        }
    }
    let mut hi = hi.ok_or_else(|| Error::Solver("no singularity found in (0, 1)".into()))?;
    for _ in 0..60 {
        let mid = Float::with_val(128, &lo + &hi) / 2u32;
        match coarse.solve_z(&mid) {
            Some(z) => {
                lo = mid;
                lo_z = z;
            }
            None => hi = mid,
        }
    }
    Ok((lo, lo_z))
}

/// Damped two-dimensional Newton iteration on `(H, ∂H/∂z)`.
pub fn solve_system(sys: &SingularSystem, seed: &Seed) -> Result<RootSolution> {
    let p = sys.prec;
    let (mut x, mut z) = match seed {
        Seed::Point(x, z) => (Float::with_val(p, x), Float::with_val(p, z)),
        Seed::Bracket => {
            let (x, z) = bracket_seed(sys)?;
            (Float::with_val(p, x), Float::with_val(p, z))
        }
    };
    let tol = tolerance(sys.digits);
    let fine = Float::with_val(p, Float::i_exp(1, -(sys.digits as f64 * std::f64::consts::LOG2_10) as i32));
    let mut trace: Vec<String> = Vec::new();
    let fail = |trace: &[String], why: &str| {
        let tail: Vec<&str> = trace.iter().rev().take(6).rev().map(String::as_str).collect();
        Err(Error::Solver(format!("{why} (m = {}): {}", sys.m(), tail.join("; "))))
    };
    let mut step = match newton_step(sys, &x, &z) {
        Ok(s) => s,
        Err(e) => return fail(&trace, &format!("cannot evaluate H at the seed: {e}")),
    };
    let mut res = norm(&step.f);
    let mut iterations = 0;
    while res > fine && iterations < MAX_NEWTON {
        iterations += 1;
        trace.push(format!("it {iterations}: x={} z={} res={}", x.to_f64(), z.to_f64(), res.to_f64()));
        let [[a, b], [c, d]] = &step.j;
        let det = Float::with_val(p, a * d) - Float::with_val(p, b * c);
        if det.is_zero() {
            return fail(&trace, "singular Jacobian");
        }
        let dx = (Float::with_val(p, b * &step.f[1]) - Float::with_val(p, d * &step.f[0])) / &det;
        let dz = (Float::with_val(p, c * &step.f[0]) - Float::with_val(p, a * &step.f[1])) / &det;
        let mut lambda = Float::with_val(p, 1);
        let mut accepted = None;
        for _ in 0..MAX_HALVINGS {
            let tx = Float::with_val(p, &x + Float::with_val(p, &dx * &lambda));
            let tz = Float::with_val(p, &z + Float::with_val(p, &dz * &lambda));
            if in_domain(sys, &tx, &tz) {
                if let Ok(s) = newton_step(sys, &tx, &tz) {
                    let r = norm(&s.f);
                    if r < res {
                        accepted = Some((tx, tz, s, r));
                        break;
                    }
                }
            }
            lambda /= 2u32;
        }
        match accepted {
            Some((tx, tz, s, r)) => {
                x = tx;
                z = tz;
                step = s;
                res = r;
            }
            // At the rounding floor no step decreases the residual any more.
            None if res <= tol => break,
            None => return fail(&trace, "Newton iteration stalled"),
        }
    }
    if res > tol {
        return fail(&trace, "residual above tolerance");
    }
    if !in_domain(sys, &x, &z) {
        return fail(&trace, "root outside the admissible domain");
    }
    Ok(RootSolution { rho: x, tau: z, residual: res, iterations, m: sys.m(), digits: sys.digits })
}

/// Growth constant of bipartite outerplanar graphs: `ρ_b`.
pub fn bipartite_growth(m: usize, digits: u32) -> Result<RootSolution> {
    let sys = SingularSystem::bipartite(m, digits)?;
    solve_system(&sys, &Seed::Bracket)
}
