//! Closed-form Hankel evaluations.
//!
//! Every radical expression `((a + s)^m - (a - s)^m) / (2^m s)` with
//! `s^2 = a^2 - 4b` is the Lucas sequence `U_m(a, b)`, a polynomial in the
//! parameters. Evaluating through [`lucas_u`] keeps everything exact and
//! removes the apparent singularity at `a^2 = 4b`.

mod catalan_dets;
pub mod literal;
mod split;
mod sums;

pub use catalan_dets::{
    chi_offsets, chi_shifted_det, krattenthaler_det, lemma72_closed, lemma73_closed,
};
pub use split::thm61_split;
pub use sums::{h_sum_even, h_sum_odd, z_eval};

use num::{One, Zero};

use crate::seqcore::{int, pow, Params, Rat};

/// Lucas sequence `U_0 = 0, U_1 = 1, U_m = alpha U_{m-1} - beta U_{m-2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LucasKernel {
    pub p: Params,
}

impl LucasKernel {
    pub fn new(p: Params) -> Self {
        LucasKernel { p }
    }

    pub fn u(&self, m: usize) -> Rat {
        lucas_u(&self.p, m)
    }

    /// `U_0 .. U_{len-1}`.
    pub fn terms(&self, len: usize) -> Vec<Rat> {
        let mut out: Vec<Rat> = Vec::with_capacity(len);
        for m in 0..len {
            let v = match m {
                0 => Rat::zero(),
                1 => Rat::one(),
                _ => &self.p.alpha * &out[m - 1] - &self.p.beta * &out[m - 2],
            };
            out.push(v);
        }
        out
    }
}

/// `U_m(alpha, beta)`.
pub fn lucas_u(p: &Params, m: usize) -> Rat {
    if m == 0 {
        return Rat::zero();
    }
    let (mut prev, mut cur) = (Rat::zero(), Rat::one());
    for _ in 1..m {
        let next = &p.alpha * &cur - &p.beta * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Hankel transform of `(u_{n+1})`: `beta^{C(n+1, 2)}`.
pub fn hstar_closed(p: &Params, n: usize) -> Rat {
    pow(&p.beta, choose2(n + 1))
}

/// Hankel transform of `(u_{n+2})`: `beta^{C(n+1, 2)} U_{n+2}`.
///
/// The radical form of this identity is usually written with a `2^{n+1}`
/// denominator, which evaluates to `2 beta^{C(n+1,2)} U_{n+2}` and already
/// disagrees with the `1 x 1` determinant `u_2 = alpha`. The determinant
/// normalization is used here; the doubled form is
/// [`literal::hstarstar_closed`].
pub fn hstarstar_closed(p: &Params, n: usize) -> Rat {
    pow(&p.beta, choose2(n + 1)) * lucas_u(p, n + 2)
}

/// Hankel transform of `(u_n)`: `-beta^{C(n, 2)} U_n`.
pub fn h_closed(p: &Params, n: usize) -> Rat {
    -(pow(&p.beta, choose2(n)) * lucas_u(p, n))
}

/// `det [alpha^2 C_{i+j} - beta C_{i+j+1}]_{0<=i,j<=n} = U_{2n+3}`.
pub fn hhat_closed(p: &Params, n: usize) -> Rat {
    lucas_u(p, 2 * n + 3)
}

/// `det [alpha^2 C_{i+j+1} - beta C_{i+j+2}]_{0<=i,j<=n}`.
///
/// Computed from `h_n = (alpha^2 - 2 beta) h_{n-1} - beta^2 h_{n-2}` with
/// `h_0 = alpha^2 - 2 beta`, `h_1 = alpha^4 - 4 alpha^2 beta + 3 beta^2`,
/// which equals `U_{2n+4} / alpha` for `alpha != 0` and stays defined at
/// `alpha = 0`.
pub fn hcheck_closed(p: &Params, n: usize) -> Rat {
    let (a2, b) = (&p.alpha * &p.alpha, &p.beta);
    let h0 = &a2 - int(2) * b;
    let h1 = &a2 * &a2 - int(4) * &a2 * b + int(3) * b * b;
    second_order(&h0, &(-(b * b)), &h0, &h1, n)
}

/// Coefficient of the two-step recurrence shared by the `hhat` and `hcheck`
/// families: `x_n = (alpha^2 - 2 beta) x_{n-1} - beta^2 x_{n-2}`.
pub fn even_step_coefficient(p: &Params) -> Rat {
    &p.alpha * &p.alpha - int(2) * &p.beta
}

/// Term `n` of `x_k = c1 x_{k-1} + c2 x_{k-2}` started from `x_0`, `x_1`.
pub fn second_order(c1: &Rat, c2: &Rat, x0: &Rat, x1: &Rat, n: usize) -> Rat {
    if n == 0 {
        return x0.clone();
    }
    let (mut prev, mut cur) = (x0.clone(), x1.clone());
    for _ in 1..n {
        let next = c1 * &cur + c2 * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}
