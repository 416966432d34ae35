//! Limit-law constants for a random unlabeled outerplanar graph.

use outerplanar::asymptotics::{solve_system, statistics, Seed, SingularData, SingularSystem};

fn main() -> outerplanar::Result<()> {
    let (m, digits) = (25, 50);
    let sd = SingularData::compute(m, digits)?;
    let bip = SingularSystem::bipartite(m, digits)?;
    let rb = solve_system(&bip, &Seed::Bracket)?;
    let st = statistics(&sd, &bip, &rb)?;
    println!("P[connected]                  → {:.6}", st.prob_connected.to_f64());
    println!("E[components]                 → {:.6}", st.expected_components.to_f64());
    println!("E[isolated vertices]          → {:.6}", st.isolated_mean.to_f64());
    for (k, p) in st.isolated_law.iter().enumerate().take(4) {
        println!("  P[{k} isolated vertices]     → {:.6}", p.to_f64());
    }
    println!("E[two-connected components]   → {:.6}", st.expected_two_connected.to_f64());
    println!("  of which have an edge       → {:.6}", st.expected_dissection_components.to_f64());
    println!("E[bipartite components]       → {:.6}", st.expected_bipartite.to_f64());
    println!("ρ/ρ_b                         = {:.6}", st.chromatic_ratio.to_f64());
    Ok(())
}
