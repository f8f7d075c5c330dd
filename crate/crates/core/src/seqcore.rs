//! Exact scalars, combinatorial primitives, sequence prefixes and truncated
//! power-series reversion.
//!
//! Everything is exact rational arithmetic. `0^0 = 1` throughout, so a zero
//! parameter is always legal.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, kept in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

/// Integer-valued rational.
pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// The rational `num/den`, reduced. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` with the empty-product convention `0^0 = 1`.
pub fn pow(base: &Rat, exp: usize) -> Rat {
    let mut acc = Rat::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// Binomial coefficient with `C(n, k) = 0` whenever `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient as a rational.
pub fn binomial_rat(n: i64, k: i64) -> Rat {
    Rat::from_integer(binomial(n, k))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Catalan number `C_n = (2n)! / (n! (n+1)!)`.
pub fn catalan(n: usize) -> Rat {
    let n = n as i64;
    Rat::new(binomial(2 * n, n), BigInt::from(n + 1))
}

/// `beta^n C_n`.
pub fn scaled_catalan(beta: &Rat, n: usize) -> Rat {
    pow(beta, n) * catalan(n)
}

/// Parameters `(alpha, beta)` of `Q(x) = x / (1 + alpha x + beta x^2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Params {
    pub alpha: Rat,
    pub beta: Rat,
}

impl Params {
    pub fn new(alpha: Rat, beta: Rat) -> Self {
        Params { alpha, beta }
    }

    pub fn ints(alpha: i64, beta: i64) -> Self {
        Params::new(int(alpha), int(beta))
    }

    /// `alpha^2 - 4 beta`, the square of the radical in the closed forms.
    pub fn discriminant(&self) -> Rat {
        &self.alpha * &self.alpha - int(4) * &self.beta
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

/// A finite prefix `s_0, s_1, ...` of an infinite sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seq {
    pub values: Vec<Rat>,
    pub label: String,
}

impl Seq {
    pub fn new(values: Vec<Rat>, label: impl Into<String>) -> Self {
        Seq {
            values,
            label: label.into(),
        }
    }

    pub fn from_ints(values: &[i64], label: impl Into<String>) -> Self {
        Seq::new(values.iter().map(|&v| int(v)).collect(), label)
    }

    /// First `len` terms of `f(0), f(1), ...`.
    pub fn tabulate(len: usize, label: impl Into<String>, f: impl Fn(usize) -> Rat) -> Self {
        Seq::new((0..len).map(f).collect(), label)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Term `n`, or `InsufficientPrefix` when the prefix is too short.
    pub fn get(&self, n: usize) -> Result<&Rat> {
        self.values.get(n).ok_or(Error::InsufficientPrefix {
            needed: n + 1,
            available: self.values.len(),
        })
    }

    /// Fails unless at least `needed` terms are known.
    pub fn require(&self, needed: usize) -> Result<()> {
        if self.values.len() < needed {
            Err(Error::InsufficientPrefix {
                needed,
                available: self.values.len(),
            })
        } else {
            Ok(())
        }
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.values.iter()
    }
}

impl std::ops::Index<usize> for Seq {
    type Output = Rat;

    fn index(&self, n: usize) -> &Rat {
        &self.values[n]
    }
}

/// `C_0, ..., C_{len-1}`.
pub fn catalan_seq(len: usize) -> Seq {
    Seq::tabulate(len, "catalan", catalan)
}

/// `beta^0 C_0, ..., beta^{len-1} C_{len-1}`.
pub fn scaled_catalan_seq(beta: &Rat, len: usize) -> Seq {
    Seq::tabulate(len, format!("catalan scaled by {}", beta), |n| {
        scaled_catalan(beta, n)
    })
}

/// Drops the first `k` terms: `(s_k, s_{k+1}, ...)`.
pub fn shift(s: &Seq, k: usize) -> Result<Seq> {
    s.require(k)?;
    Ok(Seq::new(
        s.values[k..].to_vec(),
        format!("{} shifted by {}", s.label, k),
    ))
}

/// Power series truncated at `x^order` (exclusive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        PowerSeries { coeffs }
    }

    /// `x` truncated at `order`.
    pub fn identity(order: usize) -> Self {
        PowerSeries::new(
            (0..order)
                .map(|n| if n == 1 { Rat::one() } else { Rat::zero() })
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Rat {
        self.coeffs.get(n).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        PowerSeries::new((0..order).map(|n| self.coeff(n)).collect())
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let mut out = vec![Rat::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order - i) {
                out[i + j] += a * b;
            }
        }
        PowerSeries::new(out)
    }

    /// `self(inner(x))`; requires `inner(0) = 0`. Truncated at the smaller order.
    pub fn compose(&self, inner: &PowerSeries) -> PowerSeries {
        assert!(inner.coeff(0).is_zero(), "inner series must vanish at 0");
        let order = self.order().min(inner.order());
        let mut out = vec![Rat::zero(); order];
        let mut power = PowerSeries::new(
            (0..order)
                .map(|n| if n == 0 { Rat::one() } else { Rat::zero() })
                .collect(),
        );
        for k in 0..order {
            let fk = self.coeff(k);
            if !fk.is_zero() {
                for (n, c) in power.coeffs.iter().enumerate() {
                    out[n] += &fk * c;
                }
            }
            power = power.mul(&inner.truncate(order));
        }
        PowerSeries::new(out)
    }
}

/// Compositional inverse `g` of `f` with `f(g(x)) = g(f(x)) = x + O(x^order)`.
///
/// Coefficients are solved one order at a time: with `P[k][m] = [x^m] g^k`,
/// the coefficient of `x^n` in `f(g)` is `f_1 g_n + sum_{k>=2} f_k P[k][n]`,
/// and `P[k][n]` for `k >= 2` only involves `g_1 .. g_{n-1}`.
pub fn revert_series(f: &PowerSeries, order: usize) -> Result<PowerSeries> {
    if order > f.order() {
        return Err(Error::OrderTooLarge {
            requested: order,
            available: f.order(),
        });
    }
    if f.order() < 2 || !f.coeff(0).is_zero() || f.coeff(1).is_zero() {
        return Err(Error::NotRevertible);
    }
    let mut g = vec![Rat::zero(); order];
    if order < 2 {
        return Ok(PowerSeries::new(g));
    }
    let inv_f1 = f.coeff(1).recip();
    // powers[k][m] = [x^m] g^k for 1 <= k < order; row 0 unused.
    let mut powers = vec![vec![Rat::zero(); order]; order];
    g[1] = inv_f1.clone();
    powers[1][1] = inv_f1.clone();
    for n in 2..order {
        // Column n of every power k >= 2 from known g_1..g_{n-1}.
        for k in 2..=n {
            let mut acc = Rat::zero();
            for j in 1..=(n + 1 - k) {
                let lower = &powers[k - 1][n - j];
                if !lower.is_zero() && !g[j].is_zero() {
                    acc += &g[j] * lower;
                }
            }
            powers[k][n] = acc;
        }
        let mut rest = Rat::zero();
        for (k, row) in powers.iter().enumerate().take(n + 1).skip(2) {
            let fk = f.coeff(k);
            if !fk.is_zero() {
                rest += fk * &row[n];
            }
        }
        g[n] = -rest * &inv_f1;
        powers[1][n] = g[n].clone();
    }
    Ok(PowerSeries::new(g))
}

/// `Q(x) = x / (1 + alpha x + beta x^2)` expanded to `order` coefficients.
pub fn q_series(p: &Params, order: usize) -> PowerSeries {
    // 1/(1 + alpha x + beta x^2) = sum d_n x^n, d_n = -alpha d_{n-1} - beta d_{n-2}.
    let mut d: Vec<Rat> = Vec::with_capacity(order);
    for n in 0..order.saturating_sub(1) {
        let v = match n {
            0 => Rat::one(),
            1 => -p.alpha.clone(),
            _ => -(&p.alpha * &d[n - 1]) - &p.beta * &d[n - 2],
        };
        d.push(v);
    }
    let mut coeffs = vec![Rat::zero(); order];
    for (n, v) in d.into_iter().enumerate() {
        coeffs[n + 1] = v;
    }
    PowerSeries::new(coeffs)
}

/// `u_n = sum_k C(n-1, 2k) C_k alpha^{n-2k-1} beta^k`; `u_0 = 0`.
pub fn u_direct(p: &Params, n: usize) -> Rat {
    if n == 0 {
        return Rat::zero();
    }
    let m = (n - 1) as i64;
    let mut acc = Rat::zero();
    for k in 0..=((n - 1) / 2) {
        let term = binomial_rat(m, 2 * k as i64)
            * catalan(k)
            * pow(&p.alpha, n - 1 - 2 * k)
            * pow(&p.beta, k);
        acc += term;
    }
    acc
}

/// `u_0 .. u_{len-1}` of the reversion of `Q`, computed both by series
/// reversion and by the direct sum; the two must agree term by term.
pub fn u_sequence(p: &Params, len: usize) -> Result<Seq> {
    let reverted = revert_series(&q_series(p, len.max(2)), len.max(2))?;
    let mut values = Vec::with_capacity(len);
    for n in 0..len {
        let direct = u_direct(p, n);
        let via_series = reverted.coeff(n);
        if direct != via_series {
            return Err(Error::Mismatch {
                index: n,
                left: direct.to_string(),
                right: via_series.to_string(),
            });
        }
        values.push(direct);
    }
    Ok(Seq::new(values, format!("u at {}", p)))
}

/// Sign of a rational as -1, 0 or 1.
pub fn signum(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
