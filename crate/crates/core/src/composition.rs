//! Rooted connected, connected and general outerplanar graphs from the
//! block decomposition into dissections.
//!
//! `Ĉ = x MSET(Z(V; Ĉ(x), Ĉ(x^2)) / Ĉ(x))` is solved degree by degree,
//! `C = Ĉ + Z(D; Ĉ) - Z(V; Ĉ)` and `G = MSET(C)`.

use rug::{Integer, Rational};

use crate::dissections::{Evaluator, Faces};
use crate::error::{usage, Error, Result};
use crate::ring::Scalar;
use crate::series::{Coeff, EdgeSeries, PowerSeries, Series, YPoly};

/// Exact counting series up to a common truncation order.
#[derive(Clone, Debug)]
pub struct CensusTables {
    pub trunc: usize,
    /// Dissections (two-connected outerplanar graphs and the single edge).
    pub d: PowerSeries,
    /// Vertex rooted connected graphs.
    pub chat: PowerSeries,
    pub c: PowerSeries,
    pub g: PowerSeries,
    pub edge: Option<EdgeTables>,
}

/// Edge-marked counterparts: `[x^n y^m]` counts graphs with `n` vertices
/// and `m` edges.
#[derive(Clone, Debug)]
pub struct EdgeTables {
    pub d: EdgeSeries,
    pub chat: EdgeSeries,
    pub c: EdgeSeries,
    pub g: EdgeSeries,
}

fn no_family<C: Coeff>(_: usize) -> Option<Series<C>> {
    None
}

/// `Z(V; Ĉ, Ĉ(x^2); y) / Ĉ` at the order of `chat`.
fn vertex_term<C: Coeff + Scalar>(chat: &Series<C>, y: &C, faces: Faces) -> Result<Series<C>> {
    let ev = Evaluator::new(chat.clone(), chat.substitute_power(2), y.clone(), faces, &no_family)?;
    ev.vertex_rooted_over_s1()
}

/// Right-hand side `x MSET(T(Ĉ))` of the rooted fixed-point equation.
fn chat_rhs<C: Coeff + Scalar>(chat: &Series<C>, y: &C, faces: Faces) -> Result<Series<C>> {
    let t = vertex_term(chat, y, faces)?;
    Ok(t.multiset_exp()?.shift_up(1))
}

pub(crate) fn chat_generic<C: Coeff + Scalar>(order: usize, y: C, faces: Faces) -> Result<Series<C>> {
    if order == 0 {
        return usage("truncation order must be at least 1");
    }
    let mut chat = Series::<C>::x(order);
    for n in 2..=order {
        // [x^n] of the right side only involves coefficients below n.
        let rhs = chat_rhs(&chat.truncate(n), &y, faces)?;
        chat.set_coeff(n, rhs.coeff(n));
    }
    let residual = chat_rhs(&chat, &y, faces)?.sub_t(&chat);
    if !residual.is_zero() {
        return Err(Error::Consistency("rooted fixed-point residual is nonzero".into()));
    }
    Ok(chat)
}

pub(crate) fn connected_generic<C: Coeff + Scalar>(chat: &Series<C>, y: C, faces: Faces) -> Result<Series<C>> {
    let n = chat.order();
    let fam = |d: usize| (d <= n).then(|| chat.substitute_power(d));
    let ev = Evaluator::new(chat.clone(), chat.substitute_power(2), y, faces, &fam)?;
    Ok(chat.add_t(&ev.dissection()?).sub_t(&ev.vertex_rooted()?))
}

pub(crate) fn dissections_generic<C: Coeff + Scalar>(order: usize, y: C, faces: Faces) -> Result<Series<C>> {
    let x = Series::<C>::x(order);
    let fam = |d: usize| (d <= order).then(|| x.substitute_power(d));
    Evaluator::new(x.clone(), x.substitute_power(2), y, faces, &fam)?.dissection()
}

/// Vertex rooted connected outerplanar graphs `ĉ_n`, `n <= order`.
pub fn chat_series(order: usize) -> Result<PowerSeries> {
    chat_generic(order, Rational::from(1), Faces::All)
}

pub fn chat_series_edge(order: usize) -> Result<EdgeSeries> {
    let s = chat_generic(order, YPoly::y(), Faces::All)?;
    s.check_y_cap()?;
    Ok(s)
}

/// Connected outerplanar graphs from the rooted series.
pub fn c_series(chat: &PowerSeries) -> Result<PowerSeries> {
    connected_generic(chat, Rational::from(1), Faces::All)
}

pub fn c_series_edge(chat: &EdgeSeries) -> Result<EdgeSeries> {
    let s = connected_generic(chat, YPoly::y(), Faces::All)?;
    s.check_y_cap()?;
    Ok(s)
}

/// All outerplanar graphs, empty graph included.
pub fn g_series<C: Coeff>(c: &Series<C>) -> Result<Series<C>> {
    c.multiset_exp()
}

/// `exp(sum_k f(x^k)/k)`, multisets of the structures counted by `f`.
pub fn multiset_exp<C: Coeff>(f: &Series<C>) -> Result<Series<C>> {
    f.multiset_exp()
}

/// Checks that every coefficient is a nonnegative integer.
pub(crate) fn check_counts(name: &str, s: &PowerSeries) -> Result<()> {
    match s.coeffs().iter().position(|c| *c.denom() != 1 || c.cmp0().is_lt()) {
        None => Ok(()),
        Some(k) => Err(Error::Consistency(format!("{name}: [x^{k}] = {} is not a count", s.coeff(k)))),
    }
}

impl CensusTables {
    /// Computes all tables to order `n`; the edge-marked ones on request.
    pub fn compute(n: usize, edge_marked: bool) -> Result<Self> {
        let chat = chat_series(n)?;
        let c = c_series(&chat)?;
        let g = g_series(&c)?;
        let d = dissections_generic(n, Rational::from(1), Faces::All)?;
        for (name, s) in [("d", &d), ("chat", &chat), ("c", &c), ("g", &g)] {
            check_counts(name, s)?;
        }
        let edge = if edge_marked { Some(EdgeTables::compute(n)?) } else { None };
        Ok(CensusTables { trunc: n, d, chat, c, g, edge })
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if n == 0 || n > self.trunc {
            return usage(format!("n = {n} outside 1..={}", self.trunc));
        }
        Ok(())
    }

    /// Expected number of components of a uniform `n`-vertex outerplanar
    /// graph, `[x^n] G(x) sum_k C(x^k) / g_n`.
    pub fn expected_components_exact(&self, n: usize) -> Result<Rational> {
        self.check_n(n)?;
        let mut sum = Series::zero(self.trunc);
        for k in 1..=n {
            sum = sum.add_t(&self.c.substitute_power(k));
        }
        let num = self.g.mul_t(&sum).coeff(n);
        Ok(num / self.g.coeff(n))
    }

    /// Number of `n`-vertex outerplanar graphs with exactly `k` components
    /// from the connected subfamily `a`, for `k = 0..=n`.
    pub fn components_distribution_exact(&self, a: &PowerSeries, n: usize) -> Result<Vec<Integer>> {
        self.check_n(n)?;
        if a.order() < n {
            return usage("family series is shorter than n");
        }
        if !a.coeff(0).is_zero() {
            return usage("family series must have constant term 0");
        }
        for k in 1..=n {
            let ak = a.coeff(k);
            if ak.cmp0().is_lt() || ak > self.c.coeff(k) || *ak.denom() != 1 {
                return usage(format!("family coefficient at x^{k} is not a subfamily count"));
            }
        }
        let a = a.truncate(n);
        // u marks components from the family: G * exp(sum_k (u^k - 1)/k A(x^k)).
        let mut arg = EdgeSeries::zero(n);
        for k in 1..=n {
            let mut w = YPoly::monomial(k, Rational::from(1));
            w.sub_assign_ref(&YPoly::one());
            let w = w.scale_q(&Rational::from((1, k as u64)));
            arg = arg.add_t(&a.substitute_power(k).to_edge().scale_by(&w));
        }
        let gu = self.g.truncate(n).to_edge().mul_t(&arg.exp0()?);
        let p = gu.coeff(n);
        (0..=n)
            .map(|k| {
                let v = p.coeff(k);
                if *v.denom() != 1 {
                    return Err(Error::Consistency("non-integral component count".into()));
                }
                Ok(v.numer().clone())
            })
            .collect()
    }
}

impl EdgeTables {
    pub fn compute(n: usize) -> Result<Self> {
        let chat = chat_series_edge(n)?;
        let c = c_series_edge(&chat)?;
        let g = g_series(&c)?;
        g.check_y_cap()?;
        let d = dissections_generic(n, YPoly::y(), Faces::All)?;
        d.check_y_cap()?;
        Ok(EdgeTables { d, chat, c, g })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.to_integers().unwrap().iter().map(|v| v.to_i64().unwrap()).collect()
    }

    #[test]
    fn small_tables() {
        let t = CensusTables::compute(9, false).unwrap();
        assert_eq!(ints(&t.chat)[1..8], [1, 1, 3, 10, 40, 181, 918]);
        assert_eq!(ints(&t.c)[1..8], [1, 1, 2, 5, 13, 46, 172]);
        assert_eq!(ints(&t.g)[..8], [1, 1, 2, 4, 10, 25, 80, 277]);
        assert_eq!(ints(&t.d)[2..10], [1, 1, 2, 3, 9, 20, 75, 262]);
    }

    #[test]
    fn component_statistics() {
        let t = CensusTables::compute(10, false).unwrap();
        assert_eq!(t.expected_components_exact(1).unwrap(), 1);
        // empty, one edge, path, triangle: 3 + 2 + 1 + 1 components.
        assert_eq!(t.expected_components_exact(3).unwrap(), Rational::from((7, 4)));
        let e10 = t.expected_components_exact(10).unwrap();
        assert!(e10 > 1 && e10 < 2);
        let iso = t.components_distribution_exact(&PowerSeries::x(10), 2).unwrap();
        assert_eq!(iso, vec![Integer::from(1), Integer::from(0), Integer::from(1)]);
        let dist = t.components_distribution_exact(&t.c, 7).unwrap();
        let total: Integer = dist.iter().sum();
        assert_eq!(total, 277);
        let weighted: Integer = dist.iter().enumerate().map(|(k, v)| Integer::from(v * k as u64)).sum();
        assert_eq!(Rational::from((weighted, total)), t.expected_components_exact(7).unwrap());
        assert!(t.components_distribution_exact(&t.g.sub_t(&PowerSeries::one(10)), 5).is_err());
    }

    #[test]
    fn edge_tables_marginalize() {
        let t = CensusTables::compute(10, true).unwrap();
        let e = t.edge.as_ref().unwrap();
        assert_eq!(e.g.eval_y1(), t.g);
        assert_eq!(e.c.eval_y1(), t.c);
        assert_eq!(e.chat.eval_y1(), t.chat);
        assert_eq!(e.d.eval_y1(), t.d);
    }
}
