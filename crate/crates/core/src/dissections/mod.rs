//! Cycle index sums of dissections (two-connected outerplanar graphs)
//! evaluated at concrete series arguments.
//!
//! The functions at the top level evaluate the closed forms over rational
//! series. Every `1/s1^a s2^b` prefactor is removed with an exact division
//! that must cancel, so the result has a lower order than the arguments:
//! the order drops by the valuation of the cancelled denominator.
//! [`edge`] holds the edge-marked versions and [`generic`] the
//! division-free formulas behind them.

pub mod edge;
pub mod generic;

use rug::Rational;

use crate::error::{usage, Result};
use crate::ring::CisRing;
use crate::series::{Coeff, PowerSeries, Series};

pub use generic::{Evaluator, Faces};

type FamilyFn<'a, C> = Box<dyn Fn(usize) -> Series<C> + Send + Sync + 'a>;

/// Arguments substituted for the cycle index variables `s1, s2, ..., s_d`.
pub struct CisArgs<'a, C: Coeff> {
    s1: Series<C>,
    s2: Series<C>,
    family: FamilyFn<'a, C>,
}

impl<'a, C: Coeff + crate::ring::Scalar + 'a> CisArgs<'a, C> {
    /// `family(d)` is consulted for `d >= 3`; `s1` and `s2` serve `d = 1, 2`.
    pub fn new(
        s1: Series<C>,
        s2: Series<C>,
        family: impl Fn(usize) -> Series<C> + Send + Sync + 'a,
    ) -> Result<Self> {
        if s1.order() != s2.order() {
            return usage("s1 and s2 must have the same order");
        }
        if !s1.coeff(0).is_zero() || !s2.coeff(0).is_zero() {
            return usage("substituted series must have constant term 0");
        }
        Ok(CisArgs { s1, s2, family: Box::new(family) })
    }

    /// `s_d = x^d`: plain unlabeled counting.
    pub fn counting(order: usize) -> Self {
        Self::powers_of(&Series::x(order))
    }

    /// `s_d = f(x^d)` (and `y -> y^d` for edge series).
    pub fn powers_of(f: &Series<C>) -> Self {
        let g = f.clone();
        CisArgs {
            s1: f.clone(),
            s2: f.substitute_power(2),
            family: Box::new(move |d| g.substitute_power(d)),
        }
    }

    pub fn zero(order: usize) -> Self {
        CisArgs {
            s1: Series::zero(order),
            s2: Series::zero(order),
            family: Box::new(move |_| Series::zero(order)),
        }
    }

    pub fn order(&self) -> usize {
        self.s1.order()
    }

    pub fn s1(&self) -> &Series<C> {
        &self.s1
    }

    pub fn s2(&self) -> &Series<C> {
        &self.s2
    }

    /// `s_d`, or `None` once `d` exceeds the order (the term vanishes).
    pub fn family(&self, d: usize) -> Option<Series<C>> {
        match d {
            0 => None,
            _ if d > self.order() => None,
            1 => Some(self.s1.clone()),
            2 => Some(self.s2.clone()),
            _ => {
                let s = (self.family)(d);
                debug_assert!(s.coeff(0).is_zero(), "family({d}) must vanish at 0");
                Some(s)
            }
        }
    }

    /// The division-free evaluator at edge weight `y`.
    pub fn evaluator<'b>(
        &'b self,
        y: C,
        faces: Faces,
        family: &'b dyn Fn(usize) -> Option<Series<C>>,
    ) -> Result<Evaluator<'b, Series<C>>> {
        Evaluator::new(self.s1.clone(), self.s2.clone(), y, faces, family)
    }
}

/// Both halves of the reflective outer-edge rooted cycle index sum.
#[derive(Clone, Debug, PartialEq)]
pub struct Reflective<S> {
    /// Mappings fixing the root edge's end vertices.
    pub plus: S,
    /// Mappings swapping them.
    pub minus: S,
    /// `(plus + minus) / 2`
    pub total: S,
}

fn disc(u: &PowerSeries) -> PowerSeries {
    u.sq().sub(&u.ratio(6, 1)).add_int(1)
}

fn root(u: &PowerSeries) -> Result<PowerSeries> {
    disc(u).sqrt1()
}

/// `u^k`
fn pw(u: &PowerSeries, k: u32) -> PowerSeries {
    let mut acc = u.int(1);
    for _ in 0..k {
        acc = acc.mul(u);
    }
    acc
}

/// `Z(E_o^o; u) / u = (u + 1 - sqrt(u^2 - 6u + 1)) / 4`
fn eoo_over_u(u: &PowerSeries) -> Result<PowerSeries> {
    Ok(u.add_int(1).sub(&root(u)?).ratio(1, 4))
}

type Args<'a> = CisArgs<'a, Rational>;

/// Oriented outer-edge rooted dissections.
pub fn oed_oriented(args: &Args) -> Result<PowerSeries> {
    Ok(args.s1.mul(&eoo_over_u(&args.s1)?))
}

/// Reflective outer-edge rooted dissections; the result order drops by the
/// valuations of `s1` and `s2`.
pub fn oed_reflective(args: &Args) -> Result<Reflective<PowerSeries>> {
    let (s1, s2) = (&args.s1, &args.s2);
    let plus_num = s1
        .add_int(1)
        .sub(&s1.sq().ratio(3, 1))
        .add(&pw(s1, 3))
        .sub(&s1.add_int(1).mul(&pw(s1, 4).sub(&s1.sq().ratio(6, 1)).add_int(1).sqrt1()?));
    let minus_num = s2
        .sq()
        .sub(&s1.mul(s2).ratio(3, 1))
        .add(s2)
        .add(s1)
        .sub(&s2.add(s1).mul(&root(s2)?));
    let plus = plus_num.div_cancel(s1, "Z+ prefactor 1/s1")?.ratio(1, 4);
    let minus = minus_num.div_cancel(s2, "Z- prefactor 1/s2")?.ratio(1, 4);
    let n = plus.order().min(minus.order());
    let (plus, minus) = (plus.truncate(n), minus.truncate(n));
    let total = plus.add(&minus).ratio(1, 2);
    Ok(Reflective { plus, minus, total })
}

/// Inner-edge rooted dissections; the order drops by `valuation(s2)`.
pub fn inner_edge(args: &Args) -> Result<PowerSeries> {
    let (s1, s2) = (&args.s1, &args.s2);
    let rb = root(s2)?;
    let first = s1.ratio(3, 1).add_int(-1).add(&root(s1)?).sq().ratio(1, 64);
    let qn = s2.add_int(1).sub(&rb);
    let qd = s2.neg().add_int(1).add(&rb);
    let ratio = qn.mul(&qd.recip()?);
    let num = s1
        .add(s2)
        .sq()
        .mul(&ratio.sq())
        .sub(&s1.sq().add(s2).mul(&s2.ratio(3, 1).add_int(-1).add(&rb)));
    let rest = num.div_cancel(s2, "inner edge prefactor 1/s2")?.ratio(1, 16);
    Ok(first.truncate(rest.order()).add(&rest))
}

/// Symmetry-edge rooted dissections; the order drops by
/// `4 valuation(s1) + 3 valuation(s2)`.
pub fn symmetry_edge(args: &Args) -> Result<PowerSeries> {
    let (s1, s2) = (&args.s1, &args.s2);
    let a = s1.sq();
    let (a2, a3, a4) = (pw(s1, 4), pw(s1, 6), pw(s1, 8));
    let (b2, b3, b4) = (s2.sq(), pw(s2, 3), pw(s2, 4));
    let r_a4 = a4.sub(&a2.ratio(6, 1)).add_int(1).sqrt1()?;
    let r_b2 = b4.sub(&b2.ratio(6, 1)).add_int(1).sqrt1()?;
    let num = a3
        .sub(&a3.mul(&b2).ratio(2, 1))
        .add(&a2.mul(&b2))
        .sub(&a.mul(&b3))
        .sub(&b3)
        .add(&b3.mul(&a.add_int(1)).mul(&r_a4))
        .sub(&a2.mul(&b2.add(&a)).mul(&r_b2))
        .sub(&a2.mul(&b2).mul(&s2.add(&a)).mul(&root(s2)?));
    let den = a2.mul(&b3);
    let main = num.div_cancel(&den, "symmetry edge prefactor 1/(s1^4 s2^3)")?.ratio(1, 16);
    let r_a2 = a2.sub(&a.ratio(6, 1)).add_int(1).sqrt1()?;
    let rest = s2.add(&a).neg().add_int(1).ratio(3, 8).sub(&r_a2.ratio(1, 8));
    Ok(main.add(&rest.truncate(main.order())))
}

fn phi_log_sum(args: &Args, f: impl Fn(&PowerSeries) -> Result<PowerSeries>) -> Result<PowerSeries> {
    let mut sum = Series::zero(args.order());
    for d in 1.. {
        let Some(sd) = args.family(d) else { break };
        let phi = generic::euler_phi(d) as i64;
        sum = sum.add(&f(&sd)?.ln()?.ratio(phi, d as u64));
    }
    Ok(sum)
}

/// `-(1/2) sum_d phi(d)/d log(3/4 - s_d/4 + sqrt(s_d^2 - 6 s_d + 1)/4)`
fn dissection_log_sum(args: &Args) -> Result<PowerSeries> {
    Ok(phi_log_sum(args, |sd| Ok(sd.neg().add_int(3).add(&root(sd)?).ratio(1, 4)))?.ratio(-1, 2))
}

/// Face rooted dissections counted up to rotations only.
pub fn face_oriented(args: &Args) -> Result<PowerSeries> {
    let sum = phi_log_sum(args, |sd| Ok(eoo_over_u(sd)?.neg().add_int(1)))?;
    let e1 = eoo_over_u(&args.s1)?;
    let e2 = eoo_over_u(&args.s2)?;
    Ok(sum.neg().sub(&e1).sub(&e1.sq().add(&e2).ratio(1, 2)))
}

/// Face rooted dissections; the order drops by `2 valuation(s2)`.
///
/// Evaluated from the dihedral composition: half the rotation classes plus
/// the reflection classes built from reflective outer-edge rooted pieces.
pub fn face(args: &Args) -> Result<PowerSeries> {
    let (s1, s2) = (&args.s1, &args.s2);
    let rb = root(s2)?;
    let zm_num = s2
        .sq()
        .sub(&s1.mul(s2).ratio(3, 1))
        .add(s2)
        .add(s1)
        .sub(&s2.add(s1).mul(&rb));
    // Z^-(E_o^r) scaled by 4 so the cancellation stays integral.
    let zm4 = zm_num.div_cancel(s2, "face: Z- prefactor 1/s2")?;
    let n = zm4.order();
    let (s1t, s2t) = (s1.truncate(n), s2.truncate(n));
    let e2 = eoo_over_u(&s2t)?;
    let pairs = e2.mul(&e2.neg().add_int(1).recip()?);
    let inner = s1t
        .mul(&zm4)
        .ratio(1, 4)
        .add(&s1t.sq().mul(&e2).ratio(1, 2))
        .add(&zm4.sq().ratio(1, 32));
    let refl = inner.mul(&pairs).div_cancel(&s2t, "face: reflection prefactor 1/s2")?.ratio(1, 2);
    let half = face_oriented(args)?.ratio(1, 2);
    Ok(half.truncate(refl.order()).add(&refl))
}

/// Face rooted dissections whose root face meets a symmetry edge; the order
/// drops by `4 valuation(s1) + 3 valuation(s2)`.
pub fn face_symmetry(args: &Args) -> Result<PowerSeries> {
    let (s1, s2) = (&args.s1, &args.s2);
    let a = s1.sq();
    let (a2, a3, a4) = (pw(s1, 4), pw(s1, 6), pw(s1, 8));
    let (b2, b3, b4) = (s2.sq(), pw(s2, 3), pw(s2, 4));
    let r_a4 = a4.sub(&a2.ratio(6, 1)).add_int(1).sqrt1()?;
    let r_b2 = b4.sub(&b2.ratio(6, 1)).add_int(1).sqrt1()?;
    let num = a3
        .mul(&b2.ratio(-3, 1).sub(&b3.ratio(3, 1)).add_int(1))
        .add(&a2.mul(&b2.add(&b3.ratio(5, 1)).sub(&b4.ratio(3, 1))))
        .sub(&b3)
        .sub(&a.mul(&b3))
        .add(&b3.mul(&a.add_int(1)).mul(&r_a4))
        .sub(&a2.mul(&a.add(&b2)).mul(&r_b2));
    let main = num
        .div_cancel(&a2.mul(&b3), "face symmetry prefactor 1/(s1^4 s2^3)")?
        .ratio(1, 8);
    let r_a2 = a2.sub(&a.ratio(6, 1)).add_int(1).sqrt1()?;
    Ok(main.sub(&r_a2.ratio(1, 4).truncate(main.order())))
}

/// Unrooted dissections from the closed form; the order drops by
/// `2 valuation(s2)`.
pub fn dissection_cis(args: &Args) -> Result<PowerSeries> {
    let (s1, s2) = (&args.s1, &args.s2);
    let a = s1.sq();
    let b2 = s2.sq();
    let num = a
        .sub(&a.mul(s2).ratio(3, 1))
        .add(&s1.mul(s2).ratio(2, 1))
        .sub(&b2.add(&a).add(&s1.mul(s2).ratio(2, 1)).mul(&root(s2)?));
    let frac = num.div_cancel(&b2, "dissection prefactor 1/s2^2")?.ratio(1, 16);
    let rest = dissection_log_sum(args)?
        .add(&s2.add(&a).sub(&s1.ratio(4, 1)).add_int(-2).ratio(1, 16))
        .add(&s1.neg().add_int(3).mul(&root(s1)?).ratio(1, 16));
    Ok(rest.truncate(frac.order()).add(&frac))
}

/// Vertex rooted dissections; the order drops by `2 valuation(s2)`.
pub fn vertex_rooted_cis(s1: &PowerSeries, s2: &PowerSeries) -> Result<PowerSeries> {
    if s1.order() != s2.order() {
        return usage("s1 and s2 must have the same order");
    }
    let first = s1.mul(&s1.add_int(1).sub(&root(s1)?)).ratio(1, 8);
    let num = s1.mul(&s1.add(s2)).mul(&s2.ratio(-3, 1).add_int(1).sub(&root(s2)?));
    let frac = num.div_cancel(&s2.sq(), "vertex rooted prefactor 1/s2^2")?.ratio(1, 8);
    Ok(first.truncate(frac.order()).add(&frac))
}

/// Unrooted dissections assembled from face, edge and symmetry-edge rooted
/// classes; the order drops by `4 valuation(s1) + 3 valuation(s2)`.
pub fn assemble_dissection_via_dissimilarity(args: &Args) -> Result<PowerSeries> {
    let f = face(args)?;
    let fs = face_symmetry(args)?;
    let ei = inner_edge(args)?;
    let es = symmetry_edge(args)?;
    let n = [f.order(), fs.order(), ei.order(), es.order()].into_iter().min().unwrap_or(0);
    let edge = args.s1.sq().add(&args.s2).ratio(1, 2).truncate(n);
    Ok(edge
        .add(&f.truncate(n))
        .sub(&fs.truncate(n))
        .sub(&ei.truncate(n))
        .add(&es.truncate(n).ratio(2, 1)))
}

/// Family adapter for the division-free evaluator.
pub(crate) fn family_fn<'b, C: Coeff + crate::ring::Scalar>(
    args: &'b CisArgs<'_, C>,
) -> impl Fn(usize) -> Option<Series<C>> + 'b {
    move |d| args.family(d)
}

#[cfg(test)]
mod tests;
