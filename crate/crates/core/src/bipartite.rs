//! Bipartite outerplanar graphs. A dissection is bipartite exactly when
//! every inner face has an even number of vertices, so the pipeline is the
//! general one with all face sums restricted to even polygons.

use rug::Rational;

use crate::composition::{chat_generic, check_counts, connected_generic, dissections_generic};
use crate::dissections::Faces;
use crate::error::{usage, Result};
use crate::series::PowerSeries;

#[derive(Clone, Debug)]
pub struct BipartiteTables {
    pub trunc: usize,
    pub d_b: PowerSeries,
    pub chat_b: PowerSeries,
    pub c_b: PowerSeries,
    pub g_b: PowerSeries,
}

/// Unlabeled bipartite dissections (even inner faces, plus the single edge).
pub fn bipartite_dissection_series(n: usize) -> Result<PowerSeries> {
    if n < 2 {
        return usage("bipartite dissections need order at least 2");
    }
    let d = dissections_generic(n, Rational::from(1), Faces::Even)?;
    check_counts("d_b", &d)?;
    Ok(d)
}

/// Vertex rooted connected bipartite outerplanar graphs.
pub fn bipartite_chat_series(n: usize) -> Result<PowerSeries> {
    chat_generic(n, Rational::from(1), Faces::Even)
}

pub fn bipartite_tables(n: usize) -> Result<BipartiteTables> {
    let d_b = bipartite_dissection_series(n.max(2))?.truncate(n);
    let chat_b = bipartite_chat_series(n)?;
    let c_b = connected_generic(&chat_b, Rational::from(1), Faces::Even)?;
    let g_b = c_b.multiset_exp()?;
    for (name, s) in [("chat_b", &chat_b), ("c_b", &c_b), ("g_b", &g_b)] {
        check_counts(name, s)?;
    }
    Ok(BipartiteTables { trunc: n, d_b, chat_b, c_b, g_b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::CensusTables;

    #[test]
    fn initial_terms_and_domination() {
        let b = bipartite_tables(12).unwrap();
        let t = CensusTables::compute(12, false).unwrap();
        assert_eq!(b.d_b.coeff(2), 1);
        assert_eq!(b.d_b.coeff(3), 0);
        assert_eq!(b.d_b.coeff(4), 1);
        for k in 0..=12 {
            assert!(b.d_b.coeff(k) <= t.d.coeff(k));
            assert!(b.c_b.coeff(k) <= t.c.coeff(k));
            assert!(b.g_b.coeff(k) <= t.g.coeff(k));
        }
        assert_eq!(b.g_b, b.c_b.multiset_exp().unwrap());
        println!("d_b {:?}\nc_b {:?}\ng_b {:?}", b.d_b, b.c_b, b.g_b);
    }
}
