//! Hankel-like determinants of Catalan numbers: the product formula for
//! `det [C_{o_i + j}]` and the two one-row-skipped families built from it.

use num::{BigInt, One};

use crate::error::{Error, Result};
use crate::seqcore::{binomial_rat, factorial, pow, Rat, Seq};
use crate::transforms::{hankel_like_det, OffsetList};

fn fact(n: usize) -> Rat {
    Rat::from_integer(factorial(n))
}

/// The two factors of the product formula: the Vandermonde part
/// `prod_{i<j} (o_j - o_i)` and
/// `prod_i (i+k)! (2 o_i)! / ((2i)! o_i! (o_i + k)!)`.
pub(crate) fn krattenthaler_factors(rows: &OffsetList) -> (Rat, Rat) {
    let o = rows.as_slice();
    let k = o.len();
    let mut vandermonde = BigInt::one();
    for i in 0..k {
        for j in (i + 1)..k {
            vandermonde *= o[j] as i64 - o[i] as i64;
        }
    }
    let mut rest = Rat::one();
    for (i, &oi) in o.iter().enumerate() {
        rest *= fact(i + k) * fact(2 * oi) / (fact(2 * i) * fact(oi) * fact(oi + k));
    }
    (Rat::from_integer(vandermonde), rest)
}

/// `det [C_{o_i + j}]_{0<=i,j<k}` by the closed product. Repeated offsets
/// give 0, as does the singular matrix.
pub fn krattenthaler_det(rows: &OffsetList) -> Rat {
    let (v, rest) = krattenthaler_factors(rows);
    v * rest
}

/// Offsets `i + [i >= l] + extra` for `i = 0..k`.
pub fn chi_offsets(k: usize, l: usize, extra: usize) -> OffsetList {
    OffsetList::new((0..k).map(|i| i + usize::from(i >= l) + extra).collect())
}

fn check_skip(k: usize, l: usize) -> Result<()> {
    if k == 0 || l >= k {
        Err(Error::IndexOutOfRange {
            index: l,
            lo: 0,
            hi: k.saturating_sub(1),
        })
    } else {
        Ok(())
    }
}

/// `det [c_{i+j+[j>=l]+1}]_{0<=i,j<k} = beta^{k^2+k-l} C(l+k+1, 2l+1)`
/// for `c_n = beta^n C_n`.
pub fn lemma72_closed(beta: &Rat, k: usize, l: usize) -> Result<Rat> {
    check_skip(k, l)?;
    let count = binomial_rat((l + k + 1) as i64, (2 * l + 1) as i64);
    debug_assert_eq!(
        {
            let (a, b) = chi_factors_closed(k, l, 1);
            a * b
        },
        count
    );
    Ok(pow(beta, k * k + k - l) * count)
}

/// `det [c_{i+j+[j>=l]}]_{0<=i,j<k} = beta^{k^2-l} C(l+k, 2l)` for
/// `c_n = beta^n C_n`.
pub fn lemma73_closed(beta: &Rat, k: usize, l: usize) -> Result<Rat> {
    check_skip(k, l)?;
    let count = binomial_rat((l + k) as i64, (2 * l) as i64);
    debug_assert_eq!(
        {
            let (a, b) = chi_factors_closed(k, l, 0);
            a * b
        },
        count
    );
    Ok(pow(beta, k * k - l) * count)
}

/// Brute-force `det [s_{i+j+[j>=l]+extra}]_{0<=i,j<k}`, `extra` in `{0, 1}`.
///
/// The column-indexed skip is the transpose of the row offsets
/// `i + [i >= l] + extra`, so this is a Hankel-like determinant.
pub fn chi_shifted_det(s: &Seq, k: usize, l: usize, extra: usize) -> Result<Rat> {
    check_skip(k, l)?;
    assert!(extra <= 1, "extra must be 0 or 1");
    hankel_like_det(s, &chi_offsets(k, l, extra))
}

/// Closed forms of the two product factors for the skipped offsets.
pub(crate) fn chi_factors_closed(k: usize, l: usize, extra: usize) -> (Rat, Rat) {
    let superfactorial = |m: usize| (0..=m).fold(Rat::one(), |acc, j| acc * fact(j));
    let p1 = binomial_rat(k as i64, l as i64) * superfactorial(k.saturating_sub(1));
    let p2 = if extra == 1 {
        fact(k) * fact(l + 1) / superfactorial(k + 1)
            * Rat::from_integer(BigInt::from(2 * k + 2))
            * fact(l + k + 1)
            / fact(2 * l + 2)
    } else {
        fact(l) / superfactorial(k) * fact(l + k) / fact(2 * l)
    };
    (p1, p2)
}
