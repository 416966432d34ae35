//! Exact numbers of unlabeled outerplanar graphs: two-connected, vertex
//! rooted connected, connected and all, plus the table refined by edges.

use std::time::Instant;

use outerplanar::composition::CensusTables;

fn main() -> outerplanar::Result<()> {
    let n = 30;
    let start = Instant::now();
    let t = CensusTables::compute(n, false)?;
    println!("computed to n = {n} in {:?}", start.elapsed());
    println!("{:>3} {:>12} {:>24} {:>24} {:>24}", "n", "d_n", "ĉ_n", "c_n", "g_n");
    for k in 0..=n {
        println!("{k:>3} {:>12} {:>24} {:>24} {:>24}", t.d.coeff(k), t.chat.coeff(k), t.c.coeff(k), t.g.coeff(k));
    }

    let e = CensusTables::compute(8, true)?;
    let edges = e.edge.as_ref().expect("edge tables requested");
    println!("\nouterplanar graphs on 6 vertices by number of edges:");
    for (m, c) in edges.g.coeff(6).coeffs().iter().enumerate() {
        println!("  m = {m:>2}: {c}");
    }
    Ok(())
}
