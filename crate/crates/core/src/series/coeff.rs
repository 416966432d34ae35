use std::fmt;

use rug::Rational;

/// Coefficient ring of a truncated series: exact rationals or polynomials in
/// the edge variable `y` over the rationals.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(q: Rational) -> Self;
    fn add_assign_ref(&mut self, o: &Self);
    fn sub_assign_ref(&mut self, o: &Self);
    /// `self += a * b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self);
    fn mul_ref(&self, o: &Self) -> Self;
    fn scale_q(&self, q: &Rational) -> Self;
    fn neg_ref(&self) -> Self;
    /// Exact quotient, `None` when `d` does not divide `self`.
    fn div_exact(&self, d: &Self) -> Option<Self>;
    /// The value as a rational when `self` is a nonzero constant.
    fn rational_unit(&self) -> Option<Rational>;
    /// `y -> y^k`; the identity on rationals.
    fn substitute_y_power(&self, k: usize) -> Self;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Rational::new()
    }
    fn one() -> Self {
        Rational::from(1)
    }
    fn is_zero(&self) -> bool {
        self.cmp0() == std::cmp::Ordering::Equal
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= o;
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self += Rational::from(a * b);
    }
    fn mul_ref(&self, o: &Self) -> Self {
        Rational::from(self * o)
    }
    fn scale_q(&self, q: &Rational) -> Self {
        Rational::from(self * q)
    }
    fn neg_ref(&self) -> Self {
        Rational::from(-self)
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            None
        } else {
            Some(Rational::from(self / d))
        }
    }
    fn rational_unit(&self) -> Option<Rational> {
        (!self.is_zero()).then(|| self.clone())
    }
    fn substitute_y_power(&self, _k: usize) -> Self {
        self.clone()
    }
}

/// Dense polynomial in `y` with rational coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct YPoly {
    c: Vec<Rational>,
}

impl YPoly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|v| v.is_zero()) {
            c.pop();
        }
        YPoly { c }
    }

    pub fn constant(q: Rational) -> Self {
        YPoly::new(vec![q])
    }

    /// `q * y^k`
    pub fn monomial(k: usize, q: Rational) -> Self {
        let mut c = vec![Rational::new(); k + 1];
        c[k] = q;
        YPoly::new(c)
    }

    pub fn y() -> Self {
        YPoly::monomial(1, Rational::from(1))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.c.get(k).cloned().unwrap_or_default()
    }

    /// Degree in `y`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Lowest power of `y` with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.c.iter().position(|v| !v.is_zero())
    }

    pub fn eval(&self, y: &Rational) -> Rational {
        let mut acc = Rational::new();
        for v in self.c.iter().rev() {
            acc *= y;
            acc += v;
        }
        acc
    }

    pub fn eval_one(&self) -> Rational {
        let mut acc = Rational::new();
        for v in &self.c {
            acc += v;
        }
        acc
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|v| v.is_zero()) {
            self.c.pop();
        }
    }
}

impl fmt::Debug for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, v) in self.c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{v}")?,
                1 => write!(f, "{v}*y")?,
                _ => write!(f, "{v}*y^{k}")?,
            }
        }
        Ok(())
    }
}

impl Coeff for YPoly {
    fn zero() -> Self {
        YPoly { c: Vec::new() }
    }
    fn one() -> Self {
        YPoly::constant(Rational::from(1))
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn from_rational(q: Rational) -> Self {
        YPoly::constant(q)
    }
    fn add_assign_ref(&mut self, o: &Self) {
        if self.c.len() < o.c.len() {
            self.c.resize(o.c.len(), Rational::new());
        }
        for (a, b) in self.c.iter_mut().zip(&o.c) {
            *a += b;
        }
        self.trim();
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        if self.c.len() < o.c.len() {
            self.c.resize(o.c.len(), Rational::new());
        }
        for (a, b) in self.c.iter_mut().zip(&o.c) {
            *a -= b;
        }
        self.trim();
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.c.is_empty() || b.c.is_empty() {
            return;
        }
        let len = a.c.len() + b.c.len() - 1;
        if self.c.len() < len {
            self.c.resize(len, Rational::new());
        }
        let mut t = Rational::new();
        for (i, ai) in a.c.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.c.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                t.assign_mul(ai, bj);
                self.c[i + j] += &t;
            }
        }
        self.trim();
    }
    fn mul_ref(&self, o: &Self) -> Self {
        let mut out = YPoly::zero();
        out.add_mul_assign(self, o);
        out
    }
    fn scale_q(&self, q: &Rational) -> Self {
        YPoly::new(self.c.iter().map(|v| Rational::from(v * q)).collect())
    }
    fn neg_ref(&self) -> Self {
        YPoly::new(self.c.iter().map(|v| Rational::from(-v)).collect())
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(YPoly::zero());
        }
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead_inv = Rational::from(d.c[dd].recip_ref());
        let mut rem = self.c.clone();
        let mut q = vec![Rational::new(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let f = Rational::from(&rem[k + dd] * &lead_inv);
            if f.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                rem[k + j] -= Rational::from(&f * dj);
            }
            q[k] = f;
        }
        rem.iter().all(|v| v.is_zero()).then(|| YPoly::new(q))
    }
    fn rational_unit(&self) -> Option<Rational> {
        (self.c.len() == 1).then(|| self.c[0].clone())
    }
    fn substitute_y_power(&self, k: usize) -> Self {
        if k == 1 || self.c.len() <= 1 {
            return self.clone();
        }
        let mut c = vec![Rational::new(); (self.c.len() - 1) * k + 1];
        for (i, v) in self.c.iter().enumerate() {
            c[i * k] = v.clone();
        }
        YPoly::new(c)
    }
}

/// Helper trait so `Rational::assign_mul` reads naturally above.
trait AssignMul {
    fn assign_mul(&mut self, a: &Rational, b: &Rational);
}

impl AssignMul for Rational {
    fn assign_mul(&mut self, a: &Rational, b: &Rational) {
        use rug::Assign;
        self.assign(a * b);
    }
}
