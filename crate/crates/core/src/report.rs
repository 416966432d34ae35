//! Serializable records for exact tables, the oracle census and the
//! asymptotic constants. Counts are decimal strings; numeric constants
//! carry the truncation and precision they were computed with.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use rug::{Float, Integer};
use serde::{Deserialize, Serialize};

use crate::asymptotics::{
    asymptotic_constants, edge_law_dissections, edge_law_outerplanar, solve_system, statistics, Seed,
    SingularData, SingularSystem,
};
use crate::bipartite::bipartite_tables;
use crate::composition::CensusTables;
use crate::error::{usage, Error, Result};
use crate::oracle::GraphCensus;
use crate::series::{EdgeSeries, PowerSeries};

pub const SCHEMA_VERSION: u32 = 1;
/// Largest `n` for plain count tables.
pub const MAX_COUNT_N: usize = 200;
/// Largest `n` for edge-refined count tables.
pub const MAX_EDGE_N: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandEcho {
    pub name: String,
    pub args: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord<T> {
    pub schema_version: u32,
    pub command: CommandEcho,
    pub payload: T,
}

impl<T> OutputRecord<T> {
    pub fn new(command: CommandEcho, payload: T) -> Self {
        OutputRecord { schema_version: SCHEMA_VERSION, command, payload }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountFamily {
    Dissections,
    Connected,
    General,
    BipartiteDissections,
    BipartiteConnected,
    BipartiteGeneral,
}

impl CountFamily {
    pub const ALL: [CountFamily; 6] = [
        CountFamily::Dissections,
        CountFamily::Connected,
        CountFamily::General,
        CountFamily::BipartiteDissections,
        CountFamily::BipartiteConnected,
        CountFamily::BipartiteGeneral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CountFamily::Dissections => "dissections",
            CountFamily::Connected => "connected",
            CountFamily::General => "general",
            CountFamily::BipartiteDissections => "bipartite-dissections",
            CountFamily::BipartiteConnected => "bipartite-connected",
            CountFamily::BipartiteGeneral => "bipartite-general",
        }
    }

    /// Smallest vertex count listed in a table.
    pub fn first_n(self) -> usize {
        match self {
            CountFamily::General | CountFamily::BipartiteGeneral => 0,
            CountFamily::Connected | CountFamily::BipartiteConnected => 1,
            CountFamily::Dissections | CountFamily::BipartiteDissections => 2,
        }
    }

    fn is_bipartite(self) -> bool {
        matches!(
            self,
            CountFamily::BipartiteDissections | CountFamily::BipartiteConnected | CountFamily::BipartiteGeneral
        )
    }
}

impl FromStr for CountFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CountFamily::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| {
            let names: Vec<&str> = CountFamily::ALL.iter().map(|f| f.name()).collect();
            Error::Usage(format!("unknown family '{s}', expected one of {}", names.join(", ")))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub count: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub family: String,
    pub edges: bool,
    pub rows: Vec<CountRow>,
}

impl CountTable {
    pub fn to_csv(&self) -> String {
        let mut s = String::from(if self.edges { "n,m,count\n" } else { "n,count\n" });
        for r in &self.rows {
            match r.m {
                Some(m) => writeln!(s, "{},{},{}", r.n, m, r.count),
                None => writeln!(s, "{},{}", r.n, r.count),
            }
            .expect("writing to a String");
        }
        s
    }

    /// Counts keyed by `(n, m)`; `m` is `None` for plain tables.
    pub fn counts(&self) -> Result<BTreeMap<(usize, Option<usize>), Integer>> {
        self.rows
            .iter()
            .map(|r| {
                let v = Integer::from_str(&r.count)
                    .map_err(|_| Error::Usage(format!("'{}' is not a decimal count", r.count)))?;
                Ok(((r.n, r.m), v))
            })
            .collect()
    }
}

fn plain_rows(s: &PowerSeries, first: usize, n_max: usize) -> Result<Vec<CountRow>> {
    let ints = s.to_integers().ok_or_else(|| Error::Consistency("non-integral count".into()))?;
    Ok((first..=n_max).map(|n| CountRow { n, m: None, count: ints[n].to_string() }).collect())
}

fn edge_rows(s: &EdgeSeries, first: usize, n_max: usize) -> Result<Vec<CountRow>> {
    let mut rows = Vec::new();
    for n in first..=n_max {
        let p = s.coeff(n);
        for (m, c) in p.coeffs().iter().enumerate() {
            if *c == 0 {
                continue;
            }
            if *c.denom() != 1 {
                return Err(Error::Consistency(format!("non-integral count at n = {n}, m = {m}")));
            }
            rows.push(CountRow { n, m: Some(m), count: c.numer().to_string() });
        }
    }
    Ok(rows)
}

/// `n -> count` (or `(n, m) -> count`) for `first_n <= n <= n_max`.
pub fn count_table(family: CountFamily, n_max: usize, edges: bool) -> Result<CountTable> {
    let limit = if edges { MAX_EDGE_N } else { MAX_COUNT_N };
    if n_max > limit {
        return usage(format!("n must be at most {limit}{}", if edges { " with edges" } else { "" }));
    }
    if edges && family.is_bipartite() {
        return usage("edge-refined tables are not available for bipartite families");
    }
    let first = family.first_n();
    let mut table = CountTable { family: family.name().into(), edges, rows: Vec::new() };
    if n_max < first {
        return Ok(table);
    }
    let order = n_max.max(2);
    table.rows = if family.is_bipartite() {
        let b = bipartite_tables(order)?;
        let s = match family {
            CountFamily::BipartiteDissections => &b.d_b,
            CountFamily::BipartiteConnected => &b.c_b,
            _ => &b.g_b,
        };
        plain_rows(s, first, n_max)?
    } else {
        let t = CensusTables::compute(order, edges)?;
        match (&t.edge, family) {
            (Some(e), CountFamily::Dissections) => edge_rows(&e.d, first, n_max)?,
            (Some(e), CountFamily::Connected) => edge_rows(&e.c, first, n_max)?,
            (Some(e), _) => edge_rows(&e.g, first, n_max)?,
            (None, CountFamily::Dissections) => plain_rows(&t.d, first, n_max)?,
            (None, CountFamily::Connected) => plain_rows(&t.c, first, n_max)?,
            (None, _) => plain_rows(&t.g, first, n_max)?,
        }
    };
    Ok(table)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub two_connected: bool,
    pub bipartite: bool,
    pub count: String,
}

pub fn census_rows(c: &GraphCensus) -> Vec<CensusRow> {
    c.entries
        .iter()
        .map(|(k, v)| CensusRow {
            n: c.n,
            m: k.edges,
            connected: k.connected,
            two_connected: k.two_connected,
            bipartite: k.bipartite,
            count: v.to_string(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Method {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub digits: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericValue {
    pub value: String,
    pub claimed_digits: u32,
    pub method: Method,
}

impl NumericValue {
    pub fn to_float(&self, prec: u32) -> Result<Float> {
        Float::parse(&self.value)
            .map(|v| Float::with_val(prec, v))
            .map_err(|_| Error::Usage(format!("'{}' is not a number", self.value)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantsReport {
    pub m: usize,
    pub digits: u32,
    pub h: String,
    pub constants: BTreeMap<String, NumericValue>,
    /// `P[k isolated vertices]` for `k = 0, 1, ...`.
    pub isolated_law: Vec<NumericValue>,
}

impl ConstantsReport {
    pub fn get(&self, name: &str) -> Option<&NumericValue> {
        self.constants.get(name)
    }
}

/// Digits printed beyond the claimed ones.
const EXTRA_DIGITS: u32 = 5;
/// Values are printed to at least this many digits (bounded by the solve
/// tolerance): the root of a truncated system is known that well even when
/// its distance to the limit is larger.
const MIN_SHOWN: u32 = 20;
/// Digits delivered by the finite-difference edge law.
const FD_DIGITS: u32 = 10;

/// `digits` significant digits, positional for magnitudes in `[1e-4, 1e6)`.
fn format_value(v: &Float, digits: u32) -> String {
    let sci = v.to_string_radix(10, Some(digits as usize));
    let Some((mant, exp)) = sci.split_once('e') else { return sci };
    let Ok(exp) = exp.parse::<i32>() else { return sci };
    if !(-4..6).contains(&exp) {
        return sci;
    }
    let (sign, mant) = mant.strip_prefix('-').map_or(("", mant), |m| ("-", m));
    let digs: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let point = exp + 1;
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digs)
    } else if point as usize >= digs.len() {
        format!("{}{}", digs, "0".repeat(point as usize - digs.len()))
    } else {
        format!("{}.{}", &digs[..point as usize], &digs[point as usize..])
    };
    format!("{sign}{body}")
}

/// Raw values of every constant with the number of digits claimed for each.
#[derive(Clone, Debug)]
pub struct ConstantSet {
    pub m: usize,
    pub digits: u32,
    pub h: f64,
    pub values: BTreeMap<String, Float>,
    pub claimed: BTreeMap<String, u32>,
    /// Names of the values that depend on the step `h`.
    pub step_dependent: Vec<String>,
    /// Names of the values that depend on the truncation `m`.
    pub truncated: Vec<String>,
    pub isolated_law: Vec<Float>,
}

impl ConstantSet {
    /// Every constant of the singularity analysis for truncation `m`,
    /// working precision `digits` and finite-difference step `h`.
    ///
    /// Truncation-limited values claim `min(m, digits - 25)` digits: the
    /// truncated systems for `m` and `2m` agree to roughly `m` digits.
    pub fn compute(m: usize, digits: u32, h: f64) -> Result<Self> {
        let sys = SingularSystem::outerplanar(m, digits)?;
        let root = solve_system(&sys, &Seed::standard())?;
        let residual = root.residual.clone();
        let sd = SingularData::from_root(&sys, root)?;
        let ac = asymptotic_constants(&sd);
        let bsys = SingularSystem::bipartite(m, digits)?;
        let broot = solve_system(&bsys, &Seed::Bracket)?;
        let st = statistics(&sd, &bsys, &broot)?;
        let dis = edge_law_dissections(digits)?;
        let (edge, _) = edge_law_outerplanar(m, h, digits)?;

        let p = sd.prec();
        let exact = digits - 20;
        let trunc = (m as u32).min(digits - 25);
        let fd = trunc.min(FD_DIGITS);
        let mut set = ConstantSet {
            m,
            digits,
            h,
            values: BTreeMap::new(),
            claimed: BTreeMap::new(),
            step_dependent: Vec::new(),
            truncated: Vec::new(),
            isolated_law: st.isolated_law.clone(),
        };
        set.put("rho", &sd.rho, trunc);
        set.put("tau", &sd.tau, trunc);
        set.put("residual", &residual, 0);
        set.put("rho_inv", &ac.rho_inv, trunc);
        set.put("chat1", &sd.chat.chat1, trunc);
        set.put("chat2", &sd.chat.chat2, trunc);
        set.put("chat3", &sd.chat.chat3, trunc);
        set.put("c_at_rho", &sd.cg.c_at_rho, trunc);
        set.put("c1", &sd.cg.c1, 0);
        set.put("c2", &sd.cg.c2, trunc);
        set.put("c3", &sd.cg.c3, trunc);
        set.put("g_at_rho", &sd.cg.g_at_rho, trunc);
        set.put("g2", &sd.cg.g2, trunc);
        set.put("g3", &sd.cg.g3, trunc);
        set.put("c", &ac.c, trunc);
        set.put("g", &ac.g, trunc);
        set.put("rho_b", &broot.rho, trunc);
        set.put("rho_b_inv", &Float::with_val(p, broot.rho.recip_ref()), trunc);
        set.put("prob_connected", &st.prob_connected, trunc);
        set.put("expected_components", &st.expected_components, trunc);
        set.put("isolated_mean", &st.isolated_mean, trunc);
        set.put("expected_two_connected", &st.expected_two_connected, trunc);
        set.put("expected_dissection_components", &st.expected_dissection_components, trunc);
        set.put("expected_bipartite", &st.expected_bipartite, trunc);
        set.put("chromatic_ratio", &st.chromatic_ratio, trunc);
        set.truncated = set.values.keys().cloned().collect();
        set.put("edge_rho_prime", &edge.x0_prime_1, fd);
        set.put("edge_rho_doubleprime", &edge.x0_doubleprime_1, fd);
        set.put("edge_mu", &edge.mu, fd);
        set.put("edge_sigma2", &edge.sigma2, fd);
        set.step_dependent = ["edge_rho_prime", "edge_rho_doubleprime", "edge_mu", "edge_sigma2"].map(String::from).into();
        set.truncated.extend(set.step_dependent.iter().cloned());
        set.put("delta", &ac.delta, exact);
        set.put("delta_inv", &ac.delta_inv, exact);
        set.put("d", &ac.d, exact);
        set.put("dissection_edge_mu", &dis.mu, exact);
        set.put("dissection_edge_sigma2", &dis.sigma2, exact);
        Ok(set)
    }

    fn put(&mut self, name: &str, v: &Float, claimed: u32) {
        self.values.insert(name.into(), v.clone());
        self.claimed.insert(name.into(), claimed.min(self.digits));
    }

    pub fn get(&self, name: &str) -> Option<&Float> {
        self.values.get(name)
    }

    pub fn report(&self) -> ConstantsReport {
        let method = |name: &str| Method {
            m: self.truncated.iter().any(|t| t == name).then_some(self.m),
            digits: self.digits,
            h: self.step_dependent.iter().any(|t| t == name).then(|| format!("{:e}", self.h)),
        };
        let shown = |claimed: u32| (claimed + EXTRA_DIGITS).max(MIN_SHOWN).min(self.digits - 20).max(claimed);
        let constants = self
            .values
            .iter()
            .map(|(name, v)| {
                let claimed = self.claimed[name];
                let nv = NumericValue { value: format_value(v, shown(claimed)), claimed_digits: claimed, method: method(name) };
                (name.clone(), nv)
            })
            .collect();
        let trunc = self.claimed["isolated_mean"];
        let isolated_law = self
            .isolated_law
            .iter()
            .map(|v| NumericValue { value: format_value(v, shown(trunc)), claimed_digits: trunc, method: method("isolated_mean") })
            .collect();
        ConstantsReport { m: self.m, digits: self.digits, h: format!("{:e}", self.h), constants, isolated_law }
    }
}

/// The constants of [`ConstantSet::compute`] as a serializable report.
pub fn constants_report(m: usize, digits: u32, h: f64) -> Result<ConstantsReport> {
    Ok(ConstantSet::compute(m, digits, h)?.report())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_formatting() {
        let f = |x: f64, d: u32| format_value(&Float::with_val(64, x), d);
        assert_eq!(f(0.1346187688, 6), "0.134619");
        assert_eq!(f(-0.0255905, 3), "-0.0256");
        assert_eq!(f(7.5035963, 4), "7.504");
        assert_eq!(f(1234.5, 6), "1234.50");
        assert_eq!(f(2e-30, 2), "2.0e-30");
        assert_eq!(f(0.00012, 2), "0.00012");
    }
}
