//! Bipartite outerplanar graphs: exact tables and the growth constant.

use outerplanar::asymptotics::{bipartite_growth, solve_rho_tau};
use outerplanar::bipartite::bipartite_tables;

fn main() -> outerplanar::Result<()> {
    let t = bipartite_tables(20)?;
    println!("{:>3} {:>10} {:>12} {:>12}", "n", "d_b", "c_b", "g_b");
    for n in 0..=20 {
        println!("{n:>3} {:>10} {:>12} {:>12}", t.d_b.coeff(n), t.c_b.coeff(n), t.g_b.coeff(n));
    }
    let rb = bipartite_growth(25, 40)?;
    let r = solve_rho_tau(25, 40)?;
    println!("\nρ_b = {:.10}, ρ_b^-1 = {:.8}", rb.rho.to_f64(), 1.0 / rb.rho.to_f64());
    println!("ρ/ρ_b = {:.8}", r.rho.to_f64() / rb.rho.to_f64());
    Ok(())
}
