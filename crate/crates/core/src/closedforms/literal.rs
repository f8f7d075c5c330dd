//! Variants with the constants and coefficients as they are commonly quoted
//! for these identities. Each one disagrees with the brute-force determinant;
//! they are kept so that the disagreement stays visible and tested.

use crate::error::Result;
use crate::seqcore::{int, Params, Rat, Seq};

use super::second_order;

/// `beta^{C(n+1,2)} ((a+s)^{n+2} - (a-s)^{n+2}) / (2^{n+1} s)`, which is
/// twice the determinant.
pub fn hstarstar_closed(p: &Params, n: usize) -> Rat {
    int(2) * super::hstarstar_closed(p, n)
}

/// `x_n = (alpha^2 - beta) x_{n-1} - beta^2 x_{n-2}`, `x_0 = alpha^2 - beta`,
/// `x_1 = alpha^4 - 3 alpha^2 beta + beta^2`. Correct for `n <= 1` only.
pub fn hhat_recurrence(p: &Params, n: usize) -> Rat {
    let (a2, b) = (&p.alpha * &p.alpha, &p.beta);
    let x0 = &a2 - b;
    let x1 = &a2 * &a2 - int(3) * &a2 * b + b * b;
    second_order(&(&a2 - b), &(-(b * b)), &x0, &x1, n)
}

/// `x_n = (alpha^2 - beta) x_{n-1} - beta^2 x_{n-2}`, `x_0 = alpha^2 - 2 beta`,
/// `x_1 = alpha^4 - 3 alpha^2 beta + 3 beta^2`. Correct for `n = 0` only
/// (and wherever `alpha^2 beta = 0`).
pub fn hcheck_recurrence(p: &Params, n: usize) -> Rat {
    let (a2, b) = (&p.alpha * &p.alpha, &p.beta);
    let x0 = &a2 - int(2) * b;
    let x1 = &a2 * &a2 - int(3) * &a2 * b + int(3) * b * b;
    second_order(&(&a2 - b), &(-(b * b)), &x0, &x1, n)
}

/// Even-order split with `det [c_{i+j+1}]_{0<=i,j<=k}` as the second factor.
/// Agrees with the Hankel determinant only when `H(c) = H(c shifted by 1)`.
pub fn thm61_split(s: &Seq, alpha: &Rat, n: usize) -> Result<(Rat, Rat)> {
    super::split::split_with(s, alpha, n, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedforms;
    use crate::seqcore::frac;

    #[test]
    fn doubled_normalization_fails_at_first_term() {
        let p = Params::ints(2, 1);
        assert_eq!(hstarstar_closed(&p, 0), int(4));
        assert_eq!(closedforms::hstarstar_closed(&p, 0), int(2));
    }

    #[test]
    fn hhat_recurrence_diverges_at_two() {
        let p = Params::ints(2, 1);
        for n in 0..=1 {
            assert_eq!(hhat_recurrence(&p, n), closedforms::hhat_closed(&p, n));
        }
        assert_eq!(hhat_recurrence(&p, 2), int(12));
        assert_eq!(closedforms::hhat_closed(&p, 2), int(7));
    }

    #[test]
    fn hcheck_recurrence_diverges_at_one() {
        let p = Params::ints(2, 1);
        assert_eq!(hcheck_recurrence(&p, 0), closedforms::hcheck_closed(&p, 0));
        assert_eq!(hcheck_recurrence(&p, 1), int(7));
        assert_eq!(closedforms::hcheck_closed(&p, 1), int(3));
        // Agrees when alpha = 0, where the two first-step coefficients coincide.
        let p = Params::new(int(0), frac(2, 3));
        assert_eq!(hcheck_recurrence(&p, 1), closedforms::hcheck_closed(&p, 1));
    }
}
