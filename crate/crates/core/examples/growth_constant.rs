//! The dominant singularity `ρ` of the outerplanar series for increasing
//! truncations of the implicit system.

use outerplanar::asymptotics::{solve_rho_tau, SingularSystem};

fn main() -> outerplanar::Result<()> {
    let digits = 60;
    for m in [1, 2, 4, 8, 16, 25] {
        let r = solve_rho_tau(m, digits)?;
        println!(
            "m = {m:>2}: ρ = {}  τ = {}  residual {:.1e}",
            r.rho.to_string_radix(10, Some(22)),
            r.tau.to_string_radix(10, Some(12)),
            r.residual.to_f64()
        );
    }
    let sys = SingularSystem::outerplanar(25, digits)?;
    let r = solve_rho_tau(25, digits)?;
    println!("growth rate ρ^-1 = {:.8}", 1.0 / r.rho.to_f64());
    println!("simplified ∂H/∂z condition residual: {:.1e}", sys.hz_simplified_residual(&r.rho, &r.tau).to_f64());
    Ok(())
}
