//! Exact component statistics for finite n: expected number of components
//! and the distribution of isolated vertices.

use outerplanar::composition::CensusTables;
use outerplanar::series::PowerSeries;

fn main() -> outerplanar::Result<()> {
    let n = 40;
    let t = CensusTables::compute(n, false)?;
    for k in [3, 5, 10, 20, 40] {
        let e = t.expected_components_exact(k)?;
        println!("n = {k:>2}: E[components] = {:.8} ({e})", e.to_f64());
    }

    // Single vertices form the subfamily A(x) = x.
    let a = PowerSeries::x(n);
    let n0 = 12;
    let dist = t.components_distribution_exact(&a, n0)?;
    let g = t.g.coeff(n0);
    println!("\nisolated vertices for n = {n0} (g_n = {g}):");
    for (k, c) in dist.iter().enumerate().take(6) {
        let p = rug::Rational::from((c.clone(), g.numer().clone()));
        println!("  k = {k}: {c:>12}  p = {:.6}", p.to_f64());
    }
    Ok(())
}
