//! Hankel and Hankel-like determinants, and the sequence transforms that
//! interact with them: the falling binomial transform, aeration, alpha-aeration
//! and pointwise geometric scaling.

mod matrix;

pub use matrix::{det_exact, SquareMatrix};

use num::{One, Zero};

use crate::error::Result;
use crate::seqcore::{binomial_rat, pow, Rat, Seq};

/// Row offsets `(o_0, ..., o_{k-1})` of a Hankel-like matrix `[s_{o_i + j}]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OffsetList(Vec<usize>);

impl OffsetList {
    pub fn new(offsets: Vec<usize>) -> Self {
        OffsetList(offsets)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<usize>> for OffsetList {
    fn from(v: Vec<usize>) -> Self {
        OffsetList(v)
    }
}

/// The `(n+1) x (n+1)` Hankel matrix `[s_{i+j}]`.
pub fn hankel_matrix(s: &Seq, n: usize) -> Result<SquareMatrix> {
    s.require(2 * n + 1)?;
    Ok(SquareMatrix::from_fn(n + 1, |i, j| s[i + j].clone()))
}

/// `h_n = det [s_{i+j}]_{0<=i,j<=n}` for every `n` with `2n + 1 <= len(s)`.
pub fn hankel_transform(s: &Seq) -> Seq {
    let count = s.len().div_ceil(2);
    let values = (0..count)
        .map(|n| det_exact(&SquareMatrix::from_fn(n + 1, |i, j| s[i + j].clone())))
        .collect();
    Seq::new(values, format!("hankel transform of {}", s.label))
}

/// Falling binomial transform `b_n = sum_k C(n,k) alpha^{n-k} s_k`.
pub fn binomial_transform(s: &Seq, alpha: &Rat) -> Seq {
    let powers: Vec<Rat> = (0..s.len()).map(|e| pow(alpha, e)).collect();
    let values = (0..s.len())
        .map(|n| {
            (0..=n).fold(Rat::zero(), |acc, k| {
                if s[k].is_zero() || powers[n - k].is_zero() {
                    acc
                } else {
                    acc + binomial_rat(n as i64, k as i64) * &powers[n - k] * &s[k]
                }
            })
        })
        .collect();
    Seq::new(
        values,
        format!("binomial transform of {} by {}", s.label, alpha),
    )
}

/// Lower-triangular section `[C(n,k) alpha^{n-k}]_{0<=n,k<m}`.
pub fn binomial_matrix_section(alpha: &Rat, m: usize) -> SquareMatrix {
    SquareMatrix::from_fn(m, |n, k| {
        if k > n {
            Rat::zero()
        } else {
            binomial_rat(n as i64, k as i64) * pow(alpha, n - k)
        }
    })
}

/// `(s_0, 0, s_1, 0, ..., s_{L-1})`, length `2L - 1` (no trailing zero).
pub fn aerate(s: &Seq) -> Seq {
    let mut values = Vec::with_capacity((2 * s.len()).saturating_sub(1));
    for (k, v) in s.iter().enumerate() {
        if k > 0 {
            values.push(Rat::zero());
        }
        values.push(v.clone());
    }
    Seq::new(values, format!("aerated {}", s.label))
}

/// `(alpha s_0, s_1, alpha s_1, s_2, ..., alpha s_{L-1})`, length `2L - 1`.
///
/// Equivalently `a_n = alpha p_n + p_{n+1}` with `p = aerate(s)`.
pub fn aerate_alpha(s: &Seq, alpha: &Rat) -> Seq {
    let mut values = Vec::with_capacity((2 * s.len()).saturating_sub(1));
    for (k, v) in s.iter().enumerate() {
        if k > 0 {
            values.push(v.clone());
        }
        values.push(alpha * v);
    }
    Seq::new(values, format!("{}-aerated {}", alpha, s.label))
}

/// `(r^n s_n)`.
pub fn scale_pointwise(s: &Seq, r: &Rat) -> Seq {
    let mut factor = Rat::one();
    let mut values = Vec::with_capacity(s.len());
    for v in s.iter() {
        values.push(&factor * v);
        factor *= r;
    }
    Seq::new(values, format!("{} scaled by {}^n", s.label, r))
}

/// `det [s_{o_i + j}]_{0<=i,j<k}` with `k = rows.len()`.
pub fn hankel_like_det(s: &Seq, rows: &OffsetList) -> Result<Rat> {
    let k = rows.len();
    if k == 0 {
        return Ok(Rat::one());
    }
    let max = *rows.as_slice().iter().max().expect("nonempty");
    s.require(max + k)?;
    let offsets = rows.as_slice();
    Ok(det_exact(&SquareMatrix::from_fn(k, |i, j| {
        s[offsets[i] + j].clone()
    })))
}

/// Leading `(n+1) x (n+1)` section of the bordered matrix
/// `[[0, p^T], [p, H_a]]`.
pub fn bordered_hankel_det(p: &Seq, a: &Seq, n: usize) -> Result<Rat> {
    p.require(n)?;
    if n > 0 {
        a.require(2 * n - 1)?;
    }
    let m = SquareMatrix::from_fn(n + 1, |i, j| match (i, j) {
        (0, 0) => Rat::zero(),
        (0, j) => p[j - 1].clone(),
        (i, 0) => p[i - 1].clone(),
        (i, j) => a[i + j - 2].clone(),
    });
    Ok(det_exact(&m))
}

/// Checks `H_b = B H_a B^T` on `m x m` sections, `b = binomial_transform(a, alpha)`.
///
/// Truncating the infinite identity to leading sections is exact because
/// `B` is lower triangular; that is asserted here.
pub fn conjugate_identity_check(a: &Seq, alpha: &Rat, m: usize) -> Result<bool> {
    if m == 0 {
        return Ok(true);
    }
    a.require(2 * m - 1)?;
    let a = Seq::new(a.values[..2 * m - 1].to_vec(), a.label.clone());
    let b = binomial_transform(&a, alpha);
    let bm = binomial_matrix_section(alpha, m);
    assert!(bm.is_lower_triangular());
    let ha = hankel_matrix(&a, m - 1)?;
    let hb = hankel_matrix(&b, m - 1)?;
    Ok(hb == bm.mul(&ha).mul(&bm.transpose()))
}
