use crate::error::Result;
use crate::seqcore::{Rat, Seq};
use crate::transforms::{aerate_alpha, det_exact, hankel_matrix, SquareMatrix};

/// Both sides of the alpha-aerated Hankel split.
///
/// `left` is `det [a_{i+j}]_{0<=i,j<=n}` with `a = aerate_alpha(s, alpha)`.
/// `right` factors it through `s`:
///
/// * `n = 2k - 1`: `det [alpha^2 s_{i+j} - s_{i+j+1}]_k * det [s_{i+j+1}]_k`
/// * `n = 2k`: `alpha * det [alpha^2 s_{i+j+1} - s_{i+j+2}]_k * det [s_{i+j}]_{k+1}`
///
/// Both sides are polynomials in `alpha`, so `alpha = 0` is allowed. Needs
/// `n + 1` terms of `s`.
pub fn thm61_split(s: &Seq, alpha: &Rat, n: usize) -> Result<(Rat, Rat)> {
    split_with(s, alpha, n, 0)
}

/// `even_offset` selects the start index of the trailing Hankel factor in the
/// even case.
pub(crate) fn split_with(s: &Seq, alpha: &Rat, n: usize, even_offset: usize) -> Result<(Rat, Rat)> {
    s.require(n + 1 + even_offset)?;
    let a = aerate_alpha(s, alpha);
    let left = det_exact(&hankel_matrix(&a, n)?);

    let a2 = alpha * alpha;
    let combo = |k: usize, from: usize| {
        det_exact(&SquareMatrix::from_fn(k, |i, j| {
            &a2 * &s[i + j + from] - &s[i + j + from + 1]
        }))
    };
    let hankel_from = |k: usize, from: usize| {
        det_exact(&SquareMatrix::from_fn(k, |i, j| s[i + j + from].clone()))
    };

    let right = if n % 2 == 1 {
        let k = n.div_ceil(2);
        combo(k, 0) * hankel_from(k, 1)
    } else {
        let k = n / 2;
        alpha * combo(k, 1) * hankel_from(k + 1, even_offset)
    };
    Ok((left, right))
}
