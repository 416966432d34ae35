//! Truncated multivariate Taylor polynomials over multiprecision floats.
//!
//! A jet in `k` variables of order `K` stores the Taylor coefficients of a
//! function at a point for all monomials of total degree at most `K`.
//! Evaluating a formula on jets yields its partial derivatives at the point.

use std::collections::HashMap;
use std::sync::Arc;

use rug::Float;

use crate::error::{domain, Result};
use crate::ring::{float_close, CisRing};

/// Monomial layout shared by all jets of one shape.
#[derive(Debug)]
pub struct JetSpace {
    nvars: usize,
    order: usize,
    prec: u32,
    monomials: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    table: Vec<(usize, usize, usize)>,
}

impl JetSpace {
    pub fn new(nvars: usize, order: usize, prec: u32) -> Arc<Self> {
        let mut monomials: Vec<Vec<usize>> = Vec::new();
        for total in 0..=order {
            let mut cur = vec![0; nvars];
            gen(nvars, total, 0, &mut cur, &mut monomials);
        }
        let index: HashMap<Vec<usize>, usize> =
            monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut table = Vec::new();
        for (i, a) in monomials.iter().enumerate() {
            for (j, b) in monomials.iter().enumerate() {
                let s: Vec<usize> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                if let Some(&k) = index.get(&s) {
                    table.push((i, j, k));
                }
            }
        }
        Arc::new(JetSpace { nvars, order, prec, monomials, index, table })
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    fn len(&self) -> usize {
        self.monomials.len()
    }
}

fn gen(nvars: usize, left: usize, pos: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if pos + 1 == nvars {
        cur[pos] = left;
        out.push(cur.clone());
        return;
    }
    for e in (0..=left).rev() {
        cur[pos] = e;
        gen(nvars, left - e, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

#[derive(Clone, Debug)]
pub struct Jet {
    space: Arc<JetSpace>,
    c: Vec<Float>,
}

impl Jet {
    pub fn constant(space: &Arc<JetSpace>, v: &Float) -> Self {
        let mut c = vec![Float::new(space.prec); space.len()];
        c[0] = Float::with_val(space.prec, v);
        Jet { space: space.clone(), c }
    }

    /// The coordinate function `v + d_i` expanded at `v`.
    pub fn variable(space: &Arc<JetSpace>, i: usize, v: &Float) -> Self {
        let mut j = Self::constant(space, v);
        let mut e = vec![0; space.nvars];
        e[i] = 1;
        if let Some(&k) = space.index.get(&e) {
            j.c[k] = Float::with_val(space.prec, 1);
        }
        j
    }

    /// Builds a jet from explicit Taylor coefficients keyed by exponents.
    pub fn from_terms(space: &Arc<JetSpace>, terms: &[(Vec<usize>, Float)]) -> Self {
        let mut j = Self::constant(space, &Float::new(space.prec));
        for (e, v) in terms {
            if let Some(&k) = space.index.get(e) {
                j.c[k] = Float::with_val(space.prec, v);
            }
        }
        j
    }

    pub fn space(&self) -> &Arc<JetSpace> {
        &self.space
    }

    pub fn value(&self) -> &Float {
        &self.c[0]
    }

    /// Taylor coefficient of the monomial with the given exponents
    /// (`f^(a,b) / (a! b!)`).
    pub fn coeff(&self, exps: &[usize]) -> Float {
        match self.space.index.get(exps) {
            Some(&k) => self.c[k].clone(),
            None => Float::new(self.space.prec),
        }
    }

    /// Taylor coefficients in a single-variable jet, by degree.
    pub fn univariate_coeffs(&self) -> Vec<Float> {
        (0..=self.space.order).map(|k| self.coeff(&[k])).collect()
    }

    fn map(&self, f: impl Fn(&Float) -> Float) -> Self {
        Jet { space: self.space.clone(), c: self.c.iter().map(f).collect() }
    }

    fn zip(&self, o: &Self, f: impl Fn(&Float, &Float) -> Float) -> Self {
        Jet { space: self.space.clone(), c: self.c.iter().zip(&o.c).map(|(a, b)| f(a, b)).collect() }
    }

    /// `sum_k a[k] (self - self(0))^k`
    fn compose(&self, a: &[Float]) -> Self {
        let p = self.space.prec;
        let mut delta = self.clone();
        delta.c[0] = Float::new(p);
        let mut acc = Jet::constant(&self.space, &a[a.len() - 1]);
        for ak in a[..a.len() - 1].iter().rev() {
            acc = acc.mul(&delta);
            acc.c[0] += ak;
        }
        acc
    }

    fn taylor_len(&self) -> usize {
        self.space.order + 1
    }
}

impl CisRing for Jet {
    type Scalar = Float;

    fn lift(&self, c: &Float) -> Self {
        Jet::constant(&self.space, c)
    }
    fn int(&self, v: i64) -> Self {
        Jet::constant(&self.space, &Float::with_val(self.space.prec, v))
    }
    fn add(&self, o: &Self) -> Self {
        let p = self.space.prec;
        self.zip(o, |a, b| Float::with_val(p, a + b))
    }
    fn sub(&self, o: &Self) -> Self {
        let p = self.space.prec;
        self.zip(o, |a, b| Float::with_val(p, a - b))
    }
    fn mul(&self, o: &Self) -> Self {
        let p = self.space.prec;
        let mut c = vec![Float::new(p); self.c.len()];
        let mut t = Float::new(p);
        for &(i, j, k) in &self.space.table {
            if self.c[i].is_zero() || o.c[j].is_zero() {
                continue;
            }
            rug::Assign::assign(&mut t, &self.c[i] * &o.c[j]);
            c[k] += &t;
        }
        Jet { space: self.space.clone(), c }
    }
    fn neg(&self) -> Self {
        let p = self.space.prec;
        self.map(|a| Float::with_val(p, -a))
    }
    fn scale(&self, s: &Float) -> Self {
        let p = self.space.prec;
        self.map(|a| Float::with_val(p, a * s))
    }
    fn ratio(&self, num: i64, den: u64) -> Self {
        let p = self.space.prec;
        self.map(|a| {
            let t = Float::with_val(p, a * num);
            Float::with_val(p, t / den)
        })
    }
    fn div_scalar(&self, s: &Float) -> Result<Self> {
        if s.is_zero() {
            return domain("division by zero");
        }
        let p = self.space.prec;
        Ok(self.map(|a| Float::with_val(p, a / s)))
    }
    fn recip(&self) -> Result<Self> {
        let p = self.space.prec;
        let c = &self.c[0];
        if c.is_zero() {
            return domain("reciprocal of a jet with zero value");
        }
        let inv = Float::with_val(p, c.recip_ref());
        let neg_inv = Float::with_val(p, -&inv);
        let mut a = vec![inv];
        for k in 1..self.taylor_len() {
            let t = Float::with_val(p, &a[k - 1] * &neg_inv);
            a.push(t);
        }
        Ok(self.compose(&a))
    }
    fn sqrt(&self) -> Result<Self> {
        let p = self.space.prec;
        let c = &self.c[0];
        if *c <= 0 {
            return domain("square root of a jet with non-positive value");
        }
        let inv = Float::with_val(p, c.recip_ref());
        let mut a = vec![Float::with_val(p, c.sqrt_ref())];
        for k in 1..self.taylor_len() {
            // binom(1/2, k) / c^k from binom(1/2, k - 1) / c^(k - 1)
            let f = Float::with_val(p, 0.5 - (k as f64 - 1.0)) / k as u32;
            let t = Float::with_val(p, &a[k - 1] * &f);
            a.push(Float::with_val(p, &t * &inv));
        }
        Ok(self.compose(&a))
    }
    fn ln(&self) -> Result<Self> {
        let p = self.space.prec;
        let c = &self.c[0];
        if *c <= 0 {
            return domain("logarithm of a jet with non-positive value");
        }
        let inv = Float::with_val(p, c.recip_ref());
        let mut a = vec![Float::with_val(p, c.ln_ref())];
        let mut pw = Float::with_val(p, 1);
        for k in 1..self.taylor_len() {
            pw *= &inv;
            let mut t = Float::with_val(p, &pw / k as u32);
            if k % 2 == 0 {
                t = -t;
            }
            a.push(t);
        }
        Ok(self.compose(&a))
    }
    fn exp(&self) -> Result<Self> {
        let p = self.space.prec;
        let mut a = vec![Float::with_val(p, self.c[0].exp_ref())];
        for k in 1..self.taylor_len() {
            let t = Float::with_val(p, &a[k - 1] / k as u32);
            a.push(t);
        }
        Ok(self.compose(&a))
    }
    fn close_to(&self, o: &Self) -> bool {
        self.c.iter().zip(&o.c).all(|(a, b)| float_close(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivatives_of_elementary_functions() {
        let sp = JetSpace::new(2, 3, 128);
        let x = Jet::variable(&sp, 0, &Float::with_val(128, 2));
        let y = Jet::variable(&sp, 1, &Float::with_val(128, 3));
        // f = x^2 y: f_x = 12, f_xy / 1 = 4, coefficient of x y is 2x = 4
        let f = x.mul(&x).mul(&y);
        assert_eq!(f.coeff(&[0, 0]), 12);
        assert_eq!(f.coeff(&[1, 0]), 12);
        assert_eq!(f.coeff(&[1, 1]), 4);
        assert_eq!(f.coeff(&[2, 1]), 1);
        // sqrt(x)^2 = x, exp(ln x) = x, x * (1/x) = 1
        let s = x.sqrt().unwrap();
        assert!(s.mul(&s).close_to(&x));
        assert!(x.ln().unwrap().exp().unwrap().close_to(&x));
        assert!(x.mul(&x.recip().unwrap()).close_to(&x.int(1)));
    }
}
