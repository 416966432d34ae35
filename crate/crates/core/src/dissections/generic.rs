//! Cycle index sums of dissections written in terms of the reduced
//! outer-edge series `h(u; y) = Z(E_o^o; u; y) / u^2`.
//!
//! Written this way none of the formulas divide by a series of positive
//! valuation, so they evaluate unchanged over exact series, edge series,
//! multiprecision reals and Taylor jets. `Faces::Even` restricts every inner
//! face to an even number of vertices (bipartite dissections).

use std::cell::OnceCell;

use crate::error::{Error, Result};
use crate::ring::{CisRing, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Faces {
    All,
    Even,
}

pub(crate) fn euler_phi(mut n: usize) -> usize {
    let mut r = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if n > 1 {
        r -= r / n;
    }
    r
}

/// `h(u; y)`: oriented outer-edge rooted dissections divided by `u^2`.
pub fn eoo_reduced<R: CisRing>(u: &R, y: &R::Scalar, faces: Faces) -> Result<R> {
    match faces {
        Faces::All => {
            let uy = u.scale(y);
            let disc = uy.add_int(-1).sq().sub(&u.scale(&y.mul_s(y)).ratio(4, 1));
            let den = uy.add_int(1).add(&disc.sqrt()?);
            Ok(den.recip()?.scale(y).ratio(2, 1))
        }
        Faces::Even => even_eoo_reduced(u, y),
    }
}

/// Solves `h = y + y u^2 h^3 / (1 - u^2 h^2)` by Newton iteration.
fn even_eoo_reduced<R: CisRing>(u: &R, y: &R::Scalar) -> Result<R> {
    let u2 = u.sq();
    let mut h = u.lift(y);
    for _ in 0..200 {
        let w = u2.mul(&h.sq());
        let one_minus_w = w.neg().add_int(1);
        let inv = one_minus_w.recip()?;
        let f = h.sub(&u.lift(y)).sub(&h.mul(&w).mul(&inv).scale(y));
        let fp = w.mul(&w.neg().add_int(3)).mul(&inv.sq()).scale(y).neg().add_int(1);
        let next = h.sub(&f.mul(&fp.recip()?));
        if next.close_to(&h) {
            return Ok(next);
        }
        h = next;
    }
    Err(Error::Domain("even-face outer-edge series did not converge".into()))
}

/// `Z^-(E_o^r; a, b; y) / b`, the reflective outer-edge rooted series with
/// the root edge reversed, given `hb = h(b; y^2)`.
fn reflective_reduced<R: CisRing>(a: &R, b: &R, hb: &R, y: &R::Scalar, faces: Faces) -> Result<R> {
    let t = b.mul(hb);
    let den = t.neg().sub(&t.scale(y)).add_int(1);
    let num = match faces {
        Faces::All => a.sub(b).mul(hb).add_int(1),
        Faces::Even => t.neg().add_int(1),
    };
    Ok(num.mul(&den.recip()?).scale(y))
}

struct SymParts<R> {
    /// `h(s1^2; y^2)`
    g1: R,
    /// `Z^+(E_o^r; s1^2; y^2) / s1^4`
    mp: R,
    /// `Z^-(E_o^r; s1^2, s2^2; y^2) / s2^2`
    mq: R,
}

/// Substituted arguments plus the shared building blocks.
pub struct Evaluator<'a, R: CisRing> {
    s1: R,
    s2: R,
    y: R::Scalar,
    faces: Faces,
    family: &'a dyn Fn(usize) -> Option<R>,
    h1: R,
    h2: R,
    m: R,
    sym: OnceCell<SymParts<R>>,
}

impl<'a, R: CisRing> Evaluator<'a, R> {
    /// `family(d)` supplies `s_d` for the Euler-phi sums and returns `None`
    /// once the remaining terms vanish (exactly or to working precision).
    pub fn new(
        s1: R,
        s2: R,
        y: R::Scalar,
        faces: Faces,
        family: &'a dyn Fn(usize) -> Option<R>,
    ) -> Result<Self> {
        let y2 = y.mul_s(&y);
        let h1 = eoo_reduced(&s1, &y, faces)?;
        let h2 = eoo_reduced(&s2, &y2, faces)?;
        let m = reflective_reduced(&s1, &s2, &h2, &y, faces)?;
        Ok(Evaluator { s1, s2, y, faces, family, h1, h2, m, sym: OnceCell::new() })
    }

    fn sym(&self) -> Result<&SymParts<R>> {
        if let Some(p) = self.sym.get() {
            return Ok(p);
        }
        let y2 = self.y.mul_s(&self.y);
        let y4 = y2.mul_s(&y2);
        let a = self.s1.sq();
        let a2 = a.sq();
        let b2 = self.s2.sq();
        let g1 = eoo_reduced(&a, &y2, self.faces)?;
        let mp = reflective_reduced(&a, &a2, &eoo_reduced(&a2, &y4, self.faces)?, &y2, self.faces)?;
        let mq = reflective_reduced(&a, &b2, &eoo_reduced(&b2, &y4, self.faces)?, &y2, self.faces)?;
        Ok(self.sym.get_or_init(|| SymParts { g1, mp, mq }))
    }

    fn y_lift(&self) -> R {
        self.s1.lift(&self.y)
    }

    /// `s2 h2`, the weight of a pair of edges swapped by a reflection.
    fn pair(&self) -> R {
        self.s2.mul(&self.h2)
    }

    /// `S / (1 - S)` with `S = s2 h2`.
    fn pair_tail(&self) -> Result<R> {
        let s = self.pair();
        Ok(s.mul(&s.neg().add_int(1).recip()?))
    }

    pub fn oed_oriented(&self) -> R {
        self.s1.sq().mul(&self.h1)
    }

    /// `(Z^+, Z^-, (Z^+ + Z^-)/2)` for reflective outer-edge rooted dissections.
    pub fn oed_reflective(&self) -> Result<(R, R, R)> {
        let a = self.s1.sq();
        let plus = a.mul(&reflective_reduced(&self.s1, &a, &self.sym()?.g1, &self.y, self.faces)?);
        let minus = self.s2.mul(&self.m);
        let total = plus.add(&minus).ratio(1, 2);
        Ok((plus, minus, total))
    }

    pub fn inner_edge(&self) -> Result<R> {
        let y = self.y_lift();
        let y2 = self.s1.lift(&self.y.mul_s(&self.y));
        let a = self.s1.sq();
        let t1 = a.mul(&self.h1.sub(&y).sq());
        let t2 = a.add(&self.s2).mul(&self.h2.sub(&y2));
        let t3 = self.s2.mul(&self.m.sub(&y).sq());
        Ok(t1.add(&t2).add(&t3).div_scalar(&self.y)?.ratio(1, 4))
    }

    pub fn symmetry_edge(&self) -> Result<R> {
        let p = self.sym()?;
        let a = self.s1.sq();
        let a_s2 = a.add(&self.s2);
        let num = a
            .mul(&p.g1)
            .ratio(2, 1)
            .add(&a_s2.mul(&self.h2))
            .sub(&a.mul(&p.mp))
            .add(&self.s2.mul(&p.mq));
        Ok(num.div_scalar(&self.y)?.ratio(1, 4).sub(&a_s2.scale(&self.y).ratio(1, 2)))
    }

    pub fn face_oriented(&self) -> Result<R> {
        let mut sum = self.s1.int(0);
        for d in 1.. {
            let Some(sd) = (if d == 1 { Some(self.s1.clone()) } else { (self.family)(d) }) else {
                break;
            };
            let yd = self.y.powu(d as u32);
            let ed = sd.mul(&eoo_reduced(&sd, &yd, self.faces)?);
            let phi = euler_phi(d) as u64;
            let term = match self.faces {
                Faces::All => ed.neg().add_int(1).ln()?.ratio(phi as i64, d as u64),
                Faces::Even if d % 2 == 0 => ed.neg().add_int(1).ln()?.ratio(phi as i64, d as u64),
                Faces::Even => ed.sq().neg().add_int(1).ln()?.ratio(phi as i64, 2 * d as u64),
            };
            sum = sum.sub(&term);
        }
        let e1 = self.s1.mul(&self.h1);
        let pair_terms = e1.sq().add(&self.pair()).ratio(1, 2);
        Ok(match self.faces {
            Faces::All => sum.sub(&e1).sub(&pair_terms),
            Faces::Even => sum.sub(&pair_terms),
        })
    }

    pub fn face(&self) -> Result<R> {
        let tail = self.pair_tail()?;
        let a = self.s1.sq();
        let refl = match self.faces {
            Faces::All => self
                .s1
                .mul(&self.m)
                .add(&a.mul(&self.h2).ratio(1, 2))
                .add(&self.s2.mul(&self.m.sq()).ratio(1, 2))
                .ratio(1, 2),
            Faces::Even => a.mul(&self.h2).add(&self.s2.mul(&self.m.sq())).ratio(1, 4),
        };
        Ok(self.face_oriented()?.ratio(1, 2).add(&refl.mul(&tail)))
    }

    pub fn face_symmetry(&self) -> Result<R> {
        let p = self.sym()?;
        let a = self.s1.sq();
        let num = a
            .mul(&p.g1)
            .ratio(2, 1)
            .sub(&a.mul(&p.mp))
            .add(&self.s2.mul(&p.mq));
        Ok(num.div_scalar(&self.y)?.ratio(1, 2).sub(&a.add(&self.s2).scale(&self.y).ratio(1, 2)))
    }

    /// Unrooted dissections assembled from the rooted classes.
    pub fn dissection(&self) -> Result<R> {
        let edge = self.s1.sq().add(&self.s2).scale(&self.y).ratio(1, 2);
        Ok(edge
            .add(&self.face()?)
            .sub(&self.face_symmetry()?)
            .sub(&self.inner_edge()?)
            .add(&self.symmetry_edge()?.ratio(2, 1)))
    }

    /// `Z(V) / s1`: vertex rooted dissections with the root vertex removed.
    pub fn vertex_rooted_over_s1(&self) -> Result<R> {
        let y = self.y_lift();
        let y2 = self.s1.lift(&self.y.mul_s(&self.y));
        let tail = self.pair_tail()?;
        let s1h2 = self.s1.mul(&self.h2);
        let chain = match self.faces {
            Faces::All => self.m.add(&s1h2).mul(&tail),
            Faces::Even => s1h2.mul(&tail),
        };
        let r = self
            .s1
            .mul(&y)
            .add(&self.s1.mul(&self.h2.sub(&y2)).div_scalar(&self.y)?)
            .add(&chain);
        Ok(self.s1.mul(&self.h1).add(&r).ratio(1, 2))
    }

    pub fn vertex_rooted(&self) -> Result<R> {
        Ok(self.s1.mul(&self.vertex_rooted_over_s1()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        let v: Vec<usize> = (1..=12).map(euler_phi).collect();
        assert_eq!(v, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }
}
