//! Truncated formal power series in `x` with exact coefficients.
//!
//! [`PowerSeries`] has rational coefficients, [`EdgeSeries`] has coefficients
//! that are polynomials in the edge variable `y`. A series of order `N`
//! stores the coefficients of `x^0..=x^N` and every operation is exact
//! modulo `x^(N+1)`.

mod coeff;

use std::fmt;

use rug::{Integer, Rational};

pub use coeff::{Coeff, YPoly};

use crate::error::{domain, usage, Error, Result};

#[derive(Clone, PartialEq)]
pub struct Series<C> {
    c: Vec<C>,
}

pub type PowerSeries = Series<Rational>;
pub type EdgeSeries = Series<YPoly>;

impl<C: Coeff> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[O(x^{})]", self.order() + 1)?;
        f.debug_list().entries(&self.c).finish()
    }
}

fn q(num: i64, den: u64) -> Rational {
    Rational::from((Integer::from(num), Integer::from(den)))
}

impl<C: Coeff> Series<C> {
    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Series { c: coeffs }
    }

    /// Series of the given order from a (possibly shorter or longer) slice.
    pub fn from_slice(order: usize, coeffs: &[C]) -> Self {
        let mut c: Vec<C> = coeffs.iter().take(order + 1).cloned().collect();
        c.resize(order + 1, C::zero());
        Series { c }
    }

    pub fn zero(order: usize) -> Self {
        Series { c: vec![C::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, C::one())
    }

    pub fn constant(order: usize, v: C) -> Self {
        let mut s = Self::zero(order);
        s.c[0] = v;
        s
    }

    /// `v * x^k` (zero if `k > order`).
    pub fn monomial(order: usize, k: usize, v: C) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.c[k] = v;
        }
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(order, 1, C::one())
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.c
    }

    /// Coefficient of `x^k`, zero beyond the order.
    pub fn coeff(&self, k: usize) -> C {
        self.c.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn set_coeff(&mut self, k: usize, v: C) {
        self.c[k] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(C::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|v| !v.is_zero())
    }

    /// Drops coefficients above `order`; never raises the order.
    pub fn truncate(&self, order: usize) -> Self {
        Self::from_slice(order.min(self.order()), &self.c)
    }

    fn check_orders(&self, o: &Self, op: &str) -> Result<()> {
        if self.order() == o.order() {
            Ok(())
        } else {
            usage(format!("{op}: mismatched orders {} and {}", self.order(), o.order()))
        }
    }

    /// Sum; the orders must agree.
    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.check_orders(o, "add")?;
        Ok(self.add_t(o))
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.check_orders(o, "sub")?;
        Ok(self.sub_t(o))
    }

    /// Cauchy product; the orders must agree.
    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.check_orders(o, "mul")?;
        Ok(self.mul_t(o))
    }

    /// Sum truncated to the smaller order.
    pub fn add_t(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let mut c: Vec<C> = self.c[..=n].to_vec();
        for (a, b) in c.iter_mut().zip(&o.c) {
            a.add_assign_ref(b);
        }
        Series { c }
    }

    pub fn sub_t(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let mut c: Vec<C> = self.c[..=n].to_vec();
        for (a, b) in c.iter_mut().zip(&o.c) {
            a.sub_assign_ref(b);
        }
        Series { c }
    }

    /// Cauchy product truncated to the smaller order.
    /// Product truncated to the smaller order.
    pub fn mul_t(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let mut c = vec![C::zero(); n + 1];
        for (i, a) in self.c.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                c[i + j].add_mul_assign(a, b);
            }
        }
        Series { c }
    }

    pub fn negate(&self) -> Self {
        Series { c: self.c.iter().map(C::neg_ref).collect() }
    }

    pub fn scale_by(&self, v: &C) -> Self {
        Series { c: self.c.iter().map(|a| a.mul_ref(v)).collect() }
    }

    pub fn scale_q(&self, v: &Rational) -> Self {
        Series { c: self.c.iter().map(|a| a.scale_q(v)).collect() }
    }

    /// Multiply by `num/den`.
    pub fn scale_ratio(&self, num: i64, den: u64) -> Self {
        self.scale_q(&q(num, den))
    }

    pub fn add_constant(&self, v: &C) -> Self {
        let mut s = self.clone();
        s.c[0].add_assign_ref(v);
        s
    }

    /// Multiply by `x^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut c = vec![C::zero(); n + 1];
        if k <= n {
            c[k..].clone_from_slice(&self.c[..=n - k]);
        }
        Series { c }
    }

    /// Multiplicative inverse; the constant term must be a nonzero rational.
    pub fn recip(&self) -> Result<Self> {
        let Some(c0) = self.c[0].rational_unit() else {
            return domain("recip: constant term is not an invertible constant");
        };
        let inv = Rational::from(c0.recip_ref());
        let n = self.order();
        let mut b: Vec<C> = Vec::with_capacity(n + 1);
        b.push(C::from_rational(inv.clone()));
        let neg_inv = Rational::from(-&inv);
        for k in 1..=n {
            let mut acc = C::zero();
            for i in 1..=k {
                if self.c[i].is_zero() {
                    continue;
                }
                acc.add_mul_assign(&self.c[i], &b[k - i]);
            }
            b.push(acc.scale_q(&neg_inv));
        }
        Ok(Series { c: b })
    }

    /// Exact quotient `self / b`.
    ///
    /// The divisor may have positive valuation `v`; the result then has order
    /// `order - v` and every coefficient division must be exact. Fails when
    /// `b` is zero, `valuation(b) > valuation(self)` or a remainder survives.
    pub fn div_exact(&self, b: &Self) -> Result<Self> {
        self.check_orders(b, "div_exact")?;
        let Some(v) = b.valuation() else {
            return domain("div_exact: division by the zero series");
        };
        let n = self.order();
        if let Some(va) = self.valuation() {
            if va < v {
                return domain(format!(
                    "div_exact: divisor valuation {v} exceeds dividend valuation {va}"
                ));
            }
        }
        let out = n - v;
        let lead = &b.c[v];
        let mut qv: Vec<C> = Vec::with_capacity(out + 1);
        for k in 0..=out {
            let mut r = self.c[k + v].clone();
            for i in 0..k {
                let bj = &b.c[v + k - i];
                if bj.is_zero() || qv[i].is_zero() {
                    continue;
                }
                r.sub_assign_ref(&qv[i].mul_ref(bj));
            }
            match r.div_exact(lead) {
                Some(qk) => qv.push(qk),
                None => {
                    return domain(format!("div_exact: inexact coefficient division at x^{k}"))
                }
            }
        }
        Ok(Series { c: qv })
    }

    /// Like [`Series::div_exact`] but reports a failed cancellation as a
    /// consistency error, for divisors that must cancel by construction.
    pub fn div_cancel(&self, b: &Self, what: &str) -> Result<Self> {
        self.div_exact(b).map_err(|e| match e {
            Error::Domain(msg) => Error::Consistency(format!("{what}: {msg}")),
            other => other,
        })
    }

    /// Square root with constant term `+1`, by Newton iteration doubling the
    /// number of correct coefficients at each step.
    pub fn sqrt1(&self) -> Result<Self> {
        if self.c[0] != C::one() {
            return domain("sqrt1: constant term must be 1");
        }
        let n = self.order();
        let half = q(1, 2);
        let mut s = Series::one(0);
        let mut prec = 0;
        while prec < n {
            prec = (2 * prec + 1).min(n);
            let s_ext = Series::from_slice(prec, &s.c);
            let a = self.truncate(prec);
            // s <- (s + a/s) / 2
            let t = a.mul_t(&s_ext.recip()?);
            s = s_ext.add_t(&t).scale_q(&half);
        }
        Ok(s.truncate(n))
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut c = vec![C::zero(); n + 1];
        for k in 1..=n {
            c[k - 1] = self.c[k].scale_q(&Rational::from(k as u64));
        }
        Series { c }
    }

    /// Antiderivative with zero constant term, keeping the order.
    fn integral(&self) -> Self {
        let n = self.order();
        let mut c = vec![C::zero(); n + 1];
        for k in 1..=n {
            c[k] = self.c[k - 1].scale_q(&q(1, k as u64));
        }
        Series { c }
    }

    /// `log(a)` for a series with constant term 1.
    pub fn log1(&self) -> Result<Self> {
        if self.c[0] != C::one() {
            return domain("log1: constant term must be 1");
        }
        Ok(self.derivative().mul_t(&self.recip()?).integral())
    }

    /// `exp(a)` for a series with constant term 0, via `E' = a' E`.
    pub fn exp0(&self) -> Result<Self> {
        if !self.c[0].is_zero() {
            return domain("exp0: constant term must be 0");
        }
        let n = self.order();
        // k e_k = sum_{j=1..k} j a_j e_{k-j}
        let ja: Vec<C> =
            (0..=n).map(|j| self.c[j].scale_q(&Rational::from(j as u64))).collect();
        let mut e: Vec<C> = Vec::with_capacity(n + 1);
        e.push(C::one());
        for k in 1..=n {
            let mut acc = C::zero();
            for j in 1..=k {
                if ja[j].is_zero() {
                    continue;
                }
                acc.add_mul_assign(&ja[j], &e[k - j]);
            }
            e.push(acc.scale_q(&q(1, k as u64)));
        }
        Ok(Series { c: e })
    }

    /// `a(x^k, y^k)` truncated at the same order (`y` only for edge series).
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitute_power needs k >= 1");
        let n = self.order();
        let mut c = vec![C::zero(); n + 1];
        for i in 0..=n / k {
            c[i * k] = self.c[i].substitute_y_power(k);
        }
        Series { c }
    }

    /// `outer(inner(x))` by Horner evaluation; `inner` must vanish at 0.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        outer.check_orders(inner, "compose")?;
        if !inner.c[0].is_zero() {
            return domain("compose: inner series must have constant term 0");
        }
        let n = outer.order();
        let mut acc = Series::zero(n);
        for v in outer.c.iter().rev() {
            acc = acc.mul_t(inner).add_constant(v);
        }
        Ok(acc)
    }

    /// Multiset construction `exp(sum_{k>=1} f(x^k, y^k) / k)`.
    pub fn multiset_exp(&self) -> Result<Self> {
        if !self.c[0].is_zero() {
            return domain("multiset_exp: constant term must be 0");
        }
        let n = self.order();
        let mut sum = self.clone();
        for k in 2..=n {
            sum = sum.add_t(&self.substitute_power(k).scale_ratio(1, k as u64));
        }
        sum.exp0()
    }
}

impl PowerSeries {
    pub fn from_ints(order: usize, v: &[i64]) -> Self {
        let c: Vec<Rational> = v.iter().map(|&a| Rational::from(a)).collect();
        Self::from_slice(order, &c)
    }

    /// Coefficients as integers; `None` if some coefficient is not integral.
    pub fn to_integers(&self) -> Option<Vec<Integer>> {
        self.c
            .iter()
            .map(|v| (*v.denom() == 1).then(|| v.numer().clone()))
            .collect()
    }

    /// Lift to an edge series with constant `y`-polynomials.
    pub fn to_edge(&self) -> EdgeSeries {
        Series { c: self.c.iter().map(|v| YPoly::constant(v.clone())).collect() }
    }
}

impl EdgeSeries {
    /// Substitute `y = 1`.
    pub fn eval_y1(&self) -> PowerSeries {
        Series { c: self.c.iter().map(YPoly::eval_one).collect() }
    }

    /// Substitute a rational value for `y`.
    pub fn eval_y(&self, y: &Rational) -> PowerSeries {
        Series { c: self.c.iter().map(|p| p.eval(y)).collect() }
    }

    /// Checks the structural cap `deg_y [x^n] <= 2n`.
    pub fn within_y_cap(&self) -> bool {
        self.c.iter().enumerate().all(|(n, p)| p.degree().is_none_or(|d| d <= 2 * n))
    }

    /// Errors unless the `y`-degree cap holds.
    pub fn check_y_cap(&self) -> Result<()> {
        match self.c.iter().enumerate().find(|(n, p)| p.degree().is_some_and(|d| d > 2 * n)) {
            None => Ok(()),
            Some((n, p)) => Err(Error::Consistency(format!(
                "y-degree {} exceeds cap {} at x^{n}",
                p.degree().unwrap_or(0),
                2 * n
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(v: &[i64]) -> PowerSeries {
        PowerSeries::from_ints(v.len() - 1, v)
    }

    #[test]
    fn arithmetic_examples() {
        let x = PowerSeries::x(3);
        assert_eq!(x.checked_add(&ps(&[0, 0, 1, 0])).unwrap(), ps(&[0, 1, 1, 0]));
        assert_eq!(x.checked_mul(&x).unwrap(), ps(&[0, 0, 1, 0]));
        assert_eq!(ps(&[1, 1, 0, 0]).checked_mul(&ps(&[1, -1, 0, 0])).unwrap(), ps(&[1, 0, -1, 0]));
        let d = ps(&[0, 0, 1, 1, 2]);
        assert_eq!(d.checked_add(&d).unwrap(), ps(&[0, 0, 2, 2, 4]));
        let e = ps(&[0, 0, 1, 1, 3, 0, 0]);
        assert_eq!(e.checked_mul(&e).unwrap(), ps(&[0, 0, 0, 0, 1, 2, 7]));
        assert!(matches!(x.checked_add(&PowerSeries::x(4)), Err(Error::Usage(_))));
    }

    #[test]
    fn division_examples() {
        assert_eq!(ps(&[0, 0, 1, 0]).div_exact(&ps(&[0, 1, 0, 0])).unwrap(), ps(&[0, 1, 0]));
        assert_eq!(ps(&[0, 0, 1, 1]).div_exact(&ps(&[0, 1, 1, 0])).unwrap(), ps(&[0, 1, 0]));
        assert!(ps(&[0, 1, 0]).div_exact(&ps(&[0, 0, 1])).is_err());
        assert!(ps(&[0, 1, 0]).div_exact(&ps(&[0, 0, 0])).is_err());
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(ps(&[1, 0, 0]).sqrt1().unwrap(), ps(&[1, 0, 0]));
        assert_eq!(ps(&[1, -2, 1, 0, 0]).sqrt1().unwrap(), ps(&[1, -1, 0, 0, 0]));
        let s = ps(&[1, -6, 1, 0, 0, 0]).sqrt1().unwrap();
        assert_eq!(s, ps(&[1, -3, -4, -12, -44, -180]));
        assert!(ps(&[2, 1]).sqrt1().is_err());
    }

    #[test]
    fn exp_log_examples() {
        assert_eq!(ps(&[1, 0, 0]).log1().unwrap(), ps(&[0, 0, 0]));
        assert_eq!(ps(&[0, 0, 0]).exp0().unwrap(), ps(&[1, 0, 0]));
        let e = PowerSeries::x(3).exp0().unwrap();
        let want: Vec<Rational> = vec![q(1, 1), q(1, 1), q(1, 2), q(1, 6)];
        assert_eq!(e.coeffs(), &want[..]);
        let a = ps(&[1, 1, 3, 0, 0, 0]);
        assert_eq!(a.log1().unwrap().exp0().unwrap(), a);
    }

    #[test]
    fn substitution_and_composition() {
        assert_eq!(PowerSeries::x(3).substitute_power(2), ps(&[0, 0, 1, 0]));
        assert_eq!(ps(&[1, 1, 1, 0, 0, 0, 0]).substitute_power(3), ps(&[1, 0, 0, 1, 0, 0, 1]));
        let x2 = ps(&[0, 0, 1, 0, 0]);
        assert_eq!(PowerSeries::compose(&x2, &ps(&[0, 1, 1, 0, 0])).unwrap(), ps(&[0, 0, 1, 2, 1]));
        let geo = ps(&[1, 1, 1, 1, 1]);
        assert_eq!(PowerSeries::compose(&geo, &PowerSeries::x(4)).unwrap(), geo);
        assert!(PowerSeries::compose(&geo, &geo).is_err());
    }

    #[test]
    fn multiset_of_an_atom_is_geometric() {
        assert_eq!(PowerSeries::x(5).multiset_exp().unwrap(), ps(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(PowerSeries::zero(3).multiset_exp().unwrap(), PowerSeries::one(3));
    }

    #[test]
    fn edge_series_basics() {
        let y = YPoly::y();
        let one = YPoly::one();
        let s = EdgeSeries::from_coeffs(vec![YPoly::zero(), one.clone(), y.clone(), y.mul_ref(&y)]);
        assert_eq!(s.eval_y1(), ps(&[0, 1, 1, 1]));
        assert!(s.within_y_cap());
        let s2 = s.substitute_power(2);
        assert_eq!(s2.coeff(2), one);
        assert!(s2.within_y_cap());
        let p = YPoly::new(vec![Rational::from(1), Rational::from(2), Rational::from(1)]);
        assert_eq!(p.div_exact(&YPoly::new(vec![Rational::from(1), Rational::from(1)])).unwrap(),
                   YPoly::new(vec![Rational::from(1), Rational::from(1)]));
        assert!(p.div_exact(&y).is_none());
    }
}
