//! Cycle index sums of dissections evaluated at `s_d = x^d`: the rooted
//! classes, the unrooted dissections and their vertex rooted version, in the
//! plain and the edge-marked variant.

use outerplanar::dissections::{self, edge, CisArgs};
use outerplanar::series::EdgeSeries;

fn main() -> outerplanar::Result<()> {
    // The closed forms cancel denominators, so start a few orders higher.
    let order = 14;
    let args = CisArgs::counting(order + 10);
    let d = dissections::dissection_cis(&args)?.truncate(order);
    let assembled = dissections::assemble_dissection_via_dissimilarity(&args)?;
    assert_eq!(assembled.order(), order);
    println!("D(x)   = {:?}", d.to_integers().unwrap());
    println!("assembly agrees with the closed form: {}", d == assembled);
    println!("E_o^o  = {:?}", dissections::oed_oriented(&args)?.truncate(order).coeffs());
    let v = dissections::vertex_rooted_cis(args.s1(), args.s2())?.truncate(order);
    println!("V(x)   = {:?}", v.to_integers().unwrap());

    let eargs = CisArgs::powers_of(&EdgeSeries::x(10));
    let de = edge::dissection_cis(&eargs)?;
    for n in 2..=6 {
        println!("dissections on {n} vertices by edges: {:?}", de.coeff(n));
    }
    Ok(())
}
