//! Brute-force census of small outerplanar graphs compared with the
//! generating-function counts.

use outerplanar::bipartite::bipartite_tables;
use outerplanar::composition::CensusTables;
use outerplanar::oracle::{census, rooted_census};

fn main() -> outerplanar::Result<()> {
    let max = 6;
    let t = CensusTables::compute(max, false)?;
    let b = bipartite_tables(max)?;
    println!("{:>2} {:>6} {:>6} {:>6} {:>6} {:>6}", "n", "total", "conn", "2conn", "bip", "rooted");
    for n in 1..=max {
        let c = census(n, false)?;
        let r = rooted_census(n, false)?;
        println!(
            "{n:>2} {:>6} {:>6} {:>6} {:>6} {:>6}",
            c.total(),
            c.connected(),
            c.two_connected(),
            c.bipartite(),
            r.count_where(|k| k.connected)
        );
        assert_eq!(t.g.coeff(n), c.total());
        assert_eq!(t.c.coeff(n), c.connected());
        assert_eq!(b.g_b.coeff(n), c.bipartite());
    }
    println!("\n{}", census(4, false)?.to_csv());
    Ok(())
}
