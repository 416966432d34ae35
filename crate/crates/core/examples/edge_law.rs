//! Gaussian limit laws for the number of edges.

use outerplanar::asymptotics::{edge_law_dissections, edge_law_outerplanar, DEFAULT_STEP};

fn main() -> outerplanar::Result<()> {
    let d = edge_law_dissections(50)?;
    println!("two-connected: μ = {:.8} (1 + √2/2 = {:.8})", d.mu.to_f64(), 1.0 + 2f64.sqrt() / 2.0);
    println!("               σ² = {:.8} (√2/8 = {:.8})", d.sigma2.to_f64(), 2f64.sqrt() / 8.0);

    let (e, root) = edge_law_outerplanar(25, DEFAULT_STEP, 80)?;
    println!("outerplanar:   ρ(1) = {:.10}", root.rho.to_f64());
    println!("               ρ'(1) = {:.8}  ρ''(1) = {:.8}", e.x0_prime_1.to_f64(), e.x0_doubleprime_1.to_f64());
    println!("               μ = {:.8}  σ² = {:.8}", e.mu.to_f64(), e.sigma2.to_f64());
    Ok(())
}
