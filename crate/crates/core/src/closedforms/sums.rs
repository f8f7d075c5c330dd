//! Double-sum evaluations of the Hankel transform of `u`, obtained by
//! expanding the bordered determinant along its first row.

use num::Zero;

use crate::seqcore::{binomial_rat, catalan, pow, Params, Rat};

fn sign(e: usize) -> Rat {
    if e.is_multiple_of(2) {
        Rat::from_integer(1.into())
    } else {
        Rat::from_integer((-1).into())
    }
}

/// `h_{2k-1} = beta^{(k-1)(2k-1)} sum_h alpha^{2h} beta^{k-1-h}
/// sum_{l=h}^{k-1} (-1)^{k+l} C_{l-h} C(l+k, 2l+1)`, for `k >= 1`.
pub fn h_sum_odd(p: &Params, k: usize) -> Rat {
    assert!(k >= 1, "odd index 2k-1 needs k >= 1");
    pow(&p.beta, (k - 1) * (2 * k - 1)) * z_odd(p, k)
}

/// `h_{2k} = beta^{k(2k-1)} sum_h alpha^{2h+1} beta^{k-1-h}
/// sum_{l=h+1}^{k} (-1)^{k+l-1} C_{l-1-h} C(l+k, 2l)`, for `k >= 0`.
pub fn h_sum_even(p: &Params, k: usize) -> Rat {
    let mut acc = Rat::zero();
    for h in 0..k {
        let mut inner = Rat::zero();
        for l in (h + 1)..=k {
            inner +=
                sign(k + l - 1) * catalan(l - 1 - h) * binomial_rat((l + k) as i64, 2 * l as i64);
        }
        acc += pow(&p.alpha, 2 * h + 1) * pow(&p.beta, k - 1 - h) * inner;
    }
    pow(&p.beta, k * (2 * k).saturating_sub(1)) * acc
}

/// The odd-index sum without its `beta` power.
fn z_odd(p: &Params, k: usize) -> Rat {
    let mut acc = Rat::zero();
    for h in 0..k {
        let mut inner = Rat::zero();
        for l in h..k {
            inner +=
                sign(k + l) * catalan(l - h) * binomial_rat((l + k) as i64, (2 * l + 1) as i64);
        }
        acc += pow(&p.alpha, 2 * h) * pow(&p.beta, k - 1 - h) * inner;
    }
    acc
}

/// The even-index sum with the inner range shifted down by one.
fn z_even(p: &Params, k: usize) -> Rat {
    let mut acc = Rat::zero();
    for h in 0..k {
        let mut inner = Rat::zero();
        for l in h..k {
            inner +=
                sign(k + l) * catalan(l - h) * binomial_rat((l + k + 1) as i64, (2 * l + 2) as i64);
        }
        acc += pow(&p.alpha, 2 * h + 1) * pow(&p.beta, k - 1 - h) * inner;
    }
    acc
}

/// `z_n = beta^{-C(n,2)} h_n`, evaluated from the sums directly so that
/// `beta = 0` needs no division. `z_0 = 0`.
pub fn z_eval(p: &Params, n: usize) -> Rat {
    if n % 2 == 1 {
        z_odd(p, n.div_ceil(2))
    } else {
        z_even(p, n / 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedforms::{h_closed, lucas_u};
    use crate::seqcore::{frac, int};

    /// The odd sum before exchanging the order of summation.
    fn h_odd_rows(p: &Params, k: usize) -> Rat {
        let mut acc = Rat::zero();
        for l in 0..k {
            let mut inner = Rat::zero();
            for h in 0..=l {
                inner += pow(&p.alpha, 2 * h) * pow(&p.beta, k - 1 - h) * catalan(l - h);
            }
            acc += sign(k + l) * inner * binomial_rat((l + k) as i64, (2 * l + 1) as i64);
        }
        pow(&p.beta, (k - 1) * (2 * k - 1)) * acc
    }

    fn h_even_rows(p: &Params, k: usize) -> Rat {
        let mut acc = Rat::zero();
        for l in 1..=k {
            let mut inner = Rat::zero();
            for h in 0..l {
                inner += pow(&p.alpha, 2 * h + 1) * pow(&p.beta, k - 1 - h) * catalan(l - 1 - h);
            }
            acc += sign(k + l - 1) * inner * binomial_rat((l + k) as i64, 2 * l as i64);
        }
        pow(&p.beta, k * (2 * k).saturating_sub(1)) * acc
    }

    fn grid() -> Vec<Params> {
        vec![
            Params::ints(0, 1),
            Params::ints(2, 1),
            Params::ints(1, -1),
            Params::ints(3, 2),
            Params::new(frac(1, 2), frac(1, 3)),
            Params::ints(4, 4),
            Params::ints(0, 0),
        ]
    }

    #[test]
    fn odd_examples() {
        let p = Params::new(frac(7, 2), int(-3));
        assert_eq!(h_sum_odd(&p, 1), int(-1));
        assert_eq!(
            h_sum_odd(&p, 2),
            pow(&p.beta, 3) * (&p.beta - &p.alpha * &p.alpha)
        );
        assert_eq!(h_sum_odd(&Params::ints(2, 1), 3), int(-5));
    }

    #[test]
    fn even_examples() {
        let p = Params::new(frac(7, 2), int(-3));
        assert_eq!(h_sum_even(&p, 0), int(0));
        assert_eq!(h_sum_even(&p, 1), -(&p.alpha * &p.beta));
        assert_eq!(h_sum_even(&Params::ints(2, 1), 2), int(-4));
    }

    #[test]
    fn z_examples() {
        let p = Params::ints(5, 3);
        assert_eq!(z_eval(&p, 1), int(-1));
        assert_eq!(z_eval(&p, 2), int(-5));
        assert_eq!(z_eval(&Params::ints(1, -1), 6), int(-8));
        assert_eq!(z_eval(&p, 0), int(0));
    }

    #[test]
    fn sums_match_closed_form_and_row_order() {
        for p in grid() {
            for k in 1..=6 {
                assert_eq!(h_sum_odd(&p, k), h_closed(&p, 2 * k - 1), "{p} k={k}");
                assert_eq!(h_sum_odd(&p, k), h_odd_rows(&p, k));
            }
            for k in 0..=6 {
                assert_eq!(h_sum_even(&p, k), h_closed(&p, 2 * k), "{p} k={k}");
                assert_eq!(h_sum_even(&p, k), h_even_rows(&p, k));
            }
        }
    }

    #[test]
    fn z_recurrence() {
        for p in grid() {
            for n in 0..=10 {
                assert_eq!(z_eval(&p, n), -lucas_u(&p, n));
                let lhs =
                    z_eval(&p, n + 2) - &p.alpha * z_eval(&p, n + 1) + &p.beta * z_eval(&p, n);
                assert!(lhs.is_zero(), "{p} n={n}");
            }
        }
    }
}
