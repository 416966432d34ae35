use std::sync::OnceLock;

use rug::{Float, Rational};

use outerplanar::asymptotics::expansion::hzz_closed_form;
use outerplanar::asymptotics::{
    asymptotic_constants, edge_law_dissections, eval_series, solve_rho_tau, solve_system, EdgeLaw, Seed,
    SingularData, SingularSystem,
};
use outerplanar::composition::CensusTables;
use outerplanar::report::ConstantSet;
use outerplanar::series::PowerSeries;
use outerplanar::Error;

const DIGITS: u32 = 80;

fn data() -> &'static SingularData {
    static SD: OnceLock<SingularData> = OnceLock::new();
    SD.get_or_init(|| SingularData::compute(25, DIGITS).unwrap())
}

fn f(v: &Float) -> f64 {
    v.to_f64()
}

/// Number of agreeing decimal places.
fn agreeing_digits(a: &Float, b: &Float) -> f64 {
    -Float::with_val(a.prec(), a - b).abs().to_f64().log10()
}

#[test]
fn truncated_roots_converge_downwards() {
    let digits = 40;
    let rhos: Vec<Float> = [1, 4, 8, 16, 25].iter().map(|&m| solve_rho_tau(m, digits).unwrap().rho).collect();
    for w in rhos.windows(2) {
        assert!(w[0] > w[1], "ρ must decrease with m");
    }
    let limit = &rhos[4];
    assert!(agreeing_digits(&rhos[1], limit) >= 4.0);
    assert!(agreeing_digits(&rhos[2], limit) >= 9.0);
    assert!(agreeing_digits(&rhos[3], limit) >= 16.0);
    assert!((f(&rhos[0]) - 0.134618768861).abs() < 1e-12);
}

#[test]
fn root_satisfies_the_system() {
    let sd = data();
    let sys = SingularSystem::outerplanar(25, DIGITS).unwrap();
    let tol = Float::with_val(sd.prec(), Float::i_pow_u(10, DIGITS - 20)).recip();
    assert!(sd.residual < tol);
    let h = sys.h(&sd.rho, &sd.tau).unwrap();
    assert!(h.abs() < tol);
    assert!(sys.hz_closed_form(&sd.rho, &sd.tau).unwrap().abs() < tol);
    assert!(sys.hz_simplified_residual(&sd.rho, &sd.tau).abs() < tol);
    let closed = hzz_closed_form(&sd.tau);
    assert!(Float::with_val(sd.prec(), &sd.chat.hzz - &closed).abs() < tol);
    assert!(sd.tau < sys.delta());
    assert!((f(&sd.tau) - 0.1707560).abs() < 1e-7);
}

#[test]
fn expansion_signs_and_identities() {
    let sd = data();
    assert!(sd.chat.chat1 < 0);
    assert!(sd.cg.c3 > 0 && sd.cg.g3 > 0);
    assert!(sd.cg.c1.clone().abs() < 1e-20);
    let g3 = Float::with_val(sd.prec(), &sd.cg.g_at_rho * &sd.cg.c3);
    assert!(Float::with_val(sd.prec(), &g3 - &sd.cg.g3).abs() < 1e-60);
    let ac = asymptotic_constants(sd);
    let ratio = Float::with_val(sd.prec(), &ac.g / &ac.c);
    let want = Float::with_val(sd.prec(), &sd.cg.g3 / &sd.cg.c3);
    assert!(Float::with_val(sd.prec(), &ratio - &want).abs() < 1e-60);
    let two = Float::with_val(sd.prec(), 2);
    let delta_inv = Float::with_val(sd.prec(), two.sqrt_ref()) * 2u32 + 3u32;
    assert!(Float::with_val(sd.prec(), &ac.delta_inv - &delta_inv).abs() < 1e-70);
}

#[test]
fn constants_match_exact_counts_at_thirty() {
    let sd = data();
    let ac = asymptotic_constants(sd);
    let n = 30u32;
    let t = CensusTables::compute(n as usize, false).unwrap();
    let p = sd.prec();
    let scale = |k: &Float, inv: &Float| {
        let pow = Float::with_val(p, rug::ops::Pow::pow(inv, n));
        let nn = Float::with_val(p, (n as f64).powf(-2.5));
        Float::with_val(p, k * &pow) * nn
    };
    let checks = [
        (scale(&ac.d, &ac.delta_inv), &t.d),
        (scale(&ac.c, &ac.rho_inv), &t.c),
        (scale(&ac.g, &ac.rho_inv), &t.g),
    ];
    for (asym, exact) in checks {
        let ratio = f(&asym) / exact.coeff(n as usize).to_f64();
        assert!((0.75..=1.25).contains(&ratio), "ratio {ratio}");
    }
}

#[test]
fn doubling_precision_changes_nothing() {
    let lo = ConstantSet::compute(25, 80, 1e-6).unwrap();
    let hi = ConstantSet::compute(25, 160, 1e-6).unwrap();
    for (name, v) in &lo.values {
        let w = &hi.values[name];
        let diff = Float::with_val(w.prec(), w - v).abs();
        assert!(diff < 1e-30, "{name} moved by {}", diff.to_f64());
    }
}

#[test]
fn isolated_law_sums_to_one() {
    let set = ConstantSet::compute(25, 40, 1e-6).unwrap();
    let rho = set.get("rho").unwrap();
    let p = rho.prec();
    let mut sum = Float::with_val(p, rug::ops::Pow::pow(rho, set.isolated_law.len() as u32));
    for v in &set.isolated_law {
        sum += v;
    }
    assert!(Float::with_val(p, &sum - 1u32).abs() < 1e-30);
    let mean = Float::with_val(p, rho / Float::with_val(p, 1u32 - rho));
    assert!(Float::with_val(p, &mean - set.get("isolated_mean").unwrap()).abs() < 1e-30);
    assert!(set.get("chromatic_ratio").unwrap() < &1);
}

#[test]
fn dissection_edge_law_is_exact() {
    let law = edge_law_dissections(60).unwrap();
    let p = law.mu.prec();
    let r2 = Float::with_val(p, 2u32).sqrt();
    let mu = Float::with_val(p, &r2 / 2u32) + 1u32;
    let sigma2 = Float::with_val(p, &r2 / 8u32);
    assert!(Float::with_val(p, &law.mu - &mu).abs() < 1e-50);
    assert!(Float::with_val(p, &law.sigma2 - &sigma2).abs() < 1e-50);
    let delta = Float::with_val(p, 3u32) - Float::with_val(p, &r2 * 2u32);
    assert!(Float::with_val(p, &law.x0_at_1 - &delta).abs() < 1e-50);
}

#[test]
fn edge_law_identities() {
    let law = edge_law_dissections(50).unwrap();
    let (mu, sigma2) = law.recompute();
    assert!(Float::with_val(mu.prec(), &mu - &law.mu).abs() < 1e-40);
    assert!(Float::with_val(mu.prec(), &sigma2 - &law.sigma2).abs() < 1e-40);
    // x0(1) = 1, x0'(1) = -1, x0''(1) = 3 gives σ² = 1 - 3 + 1 < 0.
    let p = 64;
    let bad = EdgeLaw::from_derivatives(Float::with_val(p, 1), Float::with_val(p, -1), Float::with_val(p, 3));
    assert!(matches!(bad, Err(Error::Solver(_))));
}

#[test]
fn bipartite_root_is_above_rho() {
    let sys = SingularSystem::bipartite(12, 40).unwrap();
    let root = solve_system(&sys, &Seed::Bracket).unwrap();
    assert!((f(&root.rho) - 0.218475).abs() < 1e-6);
    assert!(root.rho > data().rho);
}

#[test]
fn precision_floor_is_enforced() {
    assert!(matches!(solve_rho_tau(25, 20), Err(Error::Usage(_))));
    assert!(solve_rho_tau(0, 40).is_err());
}

#[test]
fn series_evaluation_points() {
    let half = Float::with_val(64, 0.5);
    assert_eq!(eval_series(&PowerSeries::x(3), &half).unwrap().value, 0.5);
    assert!(matches!(eval_series(&PowerSeries::x(3), &Float::with_val(64, 1)), Err(Error::Domain(_))));
    let t = CensusTables::compute(40, false).unwrap();
    let point = Float::with_val(128, 3u32) - Float::with_val(128, 8u32).sqrt();
    let point = point * 0.9f64;
    let v = eval_series(&t.d, &point).unwrap();
    assert!(v.value.is_finite() && v.value > 0);
    assert!(v.tail.is_finite() && v.tail >= 0);
    // [x^1] D = 0 and [x^2] D = 1, so D(p) > p^2.
    assert!(v.value > Float::with_val(128, &point * &point));
    let q = Rational::from((1, 3));
    let x = PowerSeries::from_slice(2, &[Rational::new(), Rational::from(1), q]);
    let val = eval_series(&x, &half).unwrap().value;
    assert!((f(&val) - (0.5 + 0.25 / 3.0)).abs() < 1e-15);
}
