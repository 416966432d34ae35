//! Truncated power series over the rationals: arithmetic, exact division,
//! square roots and the multiset construction.

use outerplanar::series::PowerSeries;
use rug::Rational;

fn main() -> outerplanar::Result<()> {
    let n = 8;
    let x = PowerSeries::x(n);
    let one_plus_x = x.add_constant(&Rational::from(1));
    let one_minus_x = x.negate().add_constant(&Rational::from(1));
    println!("(1+x)(1-x)        = {:?}", one_plus_x.checked_mul(&one_minus_x)?.coeffs());

    // sqrt(1 - 6x + x^2), the square root behind the Schröder numbers.
    let q = PowerSeries::from_ints(n, &[1, -6, 1]);
    println!("sqrt(1-6x+x^2)    = {:?}", q.sqrt1()?.coeffs());

    // Exact division keeps track of the valuation of the divisor.
    let x3 = PowerSeries::from_ints(n, &[0, 0, 0, 1, 1]);
    let q = x3.div_exact(&PowerSeries::from_ints(n, &[0, 0, 1]))?;
    println!("(x^3+x^4)/x^2     = {:?} (order {})", q.coeffs(), q.order());

    // Multisets of a single atom: 1/(1-x).
    println!("MSET(x)           = {:?}", x.multiset_exp()?.coeffs());
    Ok(())
}
