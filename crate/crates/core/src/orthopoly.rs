//! Three-term recurrence coefficients of monic orthogonal polynomials and the
//! weight transformations that act on them.
//!
//! A weight is represented only by its coefficients `alpha_n` (`n >= 0`),
//! `beta_n` (`n >= 1`) and its zeroth moment `mu0`. Hankel determinants of
//! the moment sequence follow from the Heilermann product
//! `h_n = mu0^{n+1} beta_1^n beta_2^{n-1} ... beta_n`.
//!
//! The Chebyshev seeds have `mu0 = pi` (or a multiple of it). Those factors
//! always cancel against a later rescaling, so seeds carry `mu0 = None` and
//! the caller sets the rational moment directly once it is known.

use num::Zero;

use crate::error::{Error, Result};
use crate::seqcore::{frac, int, pow, Params, Rat};

/// Recurrence data `pi_{n+1} = (x - alpha_n) pi_n - beta_n pi_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeTerm {
    /// `alpha_0, alpha_1, ...`
    pub alpha_seq: Vec<Rat>,
    /// `beta_1, beta_2, ...` (`beta_seq[0]` is `beta_1`).
    pub beta_seq: Vec<Rat>,
    pub mu0: Option<Rat>,
}

impl ThreeTerm {
    pub fn new(alpha_seq: Vec<Rat>, beta_seq: Vec<Rat>, mu0: Option<Rat>) -> Self {
        ThreeTerm {
            alpha_seq,
            beta_seq,
            mu0,
        }
    }

    pub fn with_mu0(mut self, mu0: Rat) -> Self {
        self.mu0 = Some(mu0);
        self
    }

    pub fn alpha(&self, n: usize) -> Result<&Rat> {
        self.alpha_seq.get(n).ok_or(Error::InsufficientCoeffs {
            needed: n + 1,
            available: self.alpha_seq.len(),
        })
    }

    /// `beta_n` for `n >= 1`.
    pub fn beta(&self, n: usize) -> Result<&Rat> {
        assert!(n >= 1, "beta_0 is the moment mu0");
        self.beta_seq.get(n - 1).ok_or(Error::InsufficientCoeffs {
            needed: n,
            available: self.beta_seq.len(),
        })
    }
}

/// Auxiliary sequence of the linear multiplier transformation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RSeq {
    pub values: Vec<Rat>,
    pub c: Rat,
}

/// Which Chebyshev weight on `[-1, 1]` to start from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChebyshevKind {
    /// `sqrt((1 - x) / (1 + x))`: `alpha_0 = -1/2`, `alpha_n = 0`, `beta_n = 1/4`.
    Fourth,
    /// `sqrt(1 - x^2)`: `alpha_n = 0`, `beta_n = 1/4`.
    Second,
}

/// Monic Chebyshev coefficients, `len` alphas and `len` betas, `mu0` unset.
pub fn chebyshev_seed(kind: ChebyshevKind, len: usize) -> ThreeTerm {
    let alpha_seq = (0..len)
        .map(|n| match (kind, n) {
            (ChebyshevKind::Fourth, 0) => frac(-1, 2),
            _ => Rat::zero(),
        })
        .collect();
    ThreeTerm::new(alpha_seq, vec![frac(1, 4); len], None)
}

/// `h_n = mu0^{n+1} prod_{i=1}^{n} beta_i^{n+1-i}`.
pub fn heilermann(t: &ThreeTerm, n: usize) -> Result<Rat> {
    let mu0 = t.mu0.as_ref().ok_or(Error::Unset)?;
    let mut acc = pow(mu0, n + 1);
    for i in 1..=n {
        acc *= pow(t.beta(i)?, n + 1 - i);
    }
    Ok(acc)
}

/// Weight multiplied by a constant `C`: only `mu0` changes.
pub fn scale_weight(t: &ThreeTerm, c: &Rat) -> Result<ThreeTerm> {
    if c.is_zero() {
        return Err(Error::InvalidScale("weight scale must be nonzero".into()));
    }
    let mut out = t.clone();
    out.mu0 = t.mu0.as_ref().map(|m| m * c);
    Ok(out)
}

/// Weight `w(a x + b)` for `a > 0`: `alpha_n -> (alpha_n - b) / a`,
/// `beta_n -> beta_n / a^2`, `mu0 -> mu0 / a`.
pub fn affine_weight(t: &ThreeTerm, a: &Rat, b: &Rat) -> Result<ThreeTerm> {
    if *a <= Rat::zero() {
        return Err(Error::InvalidScale(format!(
            "affine scale must be positive, got {a}"
        )));
    }
    let a2 = a * a;
    Ok(ThreeTerm {
        alpha_seq: t.alpha_seq.iter().map(|x| (x - b) / a).collect(),
        beta_seq: t.beta_seq.iter().map(|x| x / &a2).collect(),
        mu0: t.mu0.as_ref().map(|m| m / a),
    })
}

/// `r_0 = c - alpha_0`, `r_n = c - alpha_n - beta_n / r_{n-1}` for `n < len`.
///
/// Fails with `DivisionByZeroR(n - 1)` when `r_{n-1} = 0` is needed as a
/// divisor; that marks a vanishing Hankel minor of the multiplied weight.
pub fn r_sequence(t: &ThreeTerm, c: &Rat, len: usize) -> Result<RSeq> {
    let mut values: Vec<Rat> = Vec::with_capacity(len);
    for n in 0..len {
        let base = c - t.alpha(n)?;
        let r = if n == 0 {
            base
        } else {
            let prev = &values[n - 1];
            if prev.is_zero() {
                return Err(Error::DivisionByZeroR(n - 1));
            }
            base - t.beta(n)? / prev
        };
        values.push(r);
    }
    Ok(RSeq {
        values,
        c: c.clone(),
    })
}

/// Weight multiplied by `(x - c)`.
///
/// `beta~_n = beta_n r_n / r_{n-1}`, `alpha~_n = alpha_{n+1} + r_{n+1} - r_n`.
/// The new zeroth moment is an integral of the weight, so the caller passes
/// it. Uses as many `r` terms as the coefficients allow; the result has one
/// fewer alpha than the input.
///
/// The classical precondition `c < inf supp(w)` is not visible at the
/// coefficient level; the operational condition checked here is that every
/// `r_n` used as a divisor is nonzero.
pub fn linear_multiplier(t: &ThreeTerm, c: &Rat, new_mu0: Rat) -> Result<ThreeTerm> {
    let len = t.alpha_seq.len().min(t.beta_seq.len() + 1);
    let r = r_sequence(t, c, len)?.values;
    let mut alpha_seq = Vec::with_capacity(len.saturating_sub(1));
    let mut beta_seq = Vec::with_capacity(len.saturating_sub(1));
    for n in 0..len.saturating_sub(1) {
        alpha_seq.push(t.alpha(n + 1)? + &r[n + 1] - &r[n]);
        if r[n].is_zero() {
            return Err(Error::DivisionByZeroR(n));
        }
        beta_seq.push(t.beta(n + 1)? * &r[n + 1] / &r[n]);
    }
    Ok(ThreeTerm::new(alpha_seq, beta_seq, Some(new_mu0)))
}

/// Which Catalan combination the pipeline targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// Moments `alpha^2 C_n - beta C_{n+1}`.
    Plain,
    /// Moments `alpha^2 C_{n+1} - beta C_{n+2}`.
    Shifted,
}

/// Coefficients of the weight whose moments are the chosen Catalan
/// combination, carried far enough for `heilermann(_, n)`.
///
/// Chain: Chebyshev seed (fourth kind for `Plain`, second kind for
/// `Shifted`) moved to `[0, 4]` by `x -> x/2 - 1`, rescaled so that
/// `mu0 = -beta`, then multiplied by `(x - alpha^2/beta)` with the first
/// moment of the target sequence as the new `mu0`.
pub fn catalan_combo_weight(p: &Params, variant: Variant, n: usize) -> Result<ThreeTerm> {
    if p.beta.is_zero() {
        return Err(Error::InvalidParams("beta must be nonzero".into()));
    }
    let kind = match variant {
        Variant::Plain => ChebyshevKind::Fourth,
        Variant::Shifted => ChebyshevKind::Second,
    };
    let seed = chebyshev_seed(kind, n + 1);
    let moved = affine_weight(&seed, &frac(1, 2), &int(-1))?;
    // Rescaling by -beta / mu0(moved) cancels the pi in the seed moment.
    let scaled = moved.with_mu0(-p.beta.clone());
    let a2 = &p.alpha * &p.alpha;
    let first_moment = match variant {
        Variant::Plain => &a2 - &p.beta,
        Variant::Shifted => &a2 - int(2) * &p.beta,
    };
    linear_multiplier(&scaled, &(&a2 / &p.beta), first_moment)
}

/// Hankel determinant of the Catalan combination via recurrence coefficients.
pub fn thm53_pipeline(p: &Params, variant: Variant, n: usize) -> Result<Rat> {
    heilermann(&catalan_combo_weight(p, variant, n)?, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedforms::{hcheck_closed, hhat_closed};
    use crate::seqcore::catalan_seq;
    use crate::transforms::{det_exact, SquareMatrix};

    fn consts(v: &Rat, len: usize) -> Vec<Rat> {
        vec![v.clone(); len]
    }

    fn combo_det(p: &Params, shift: usize, n: usize) -> Rat {
        let c = catalan_seq(2 * n + 4);
        let a2 = &p.alpha * &p.alpha;
        det_exact(&SquareMatrix::from_fn(n + 1, |i, j| {
            &a2 * &c[i + j + shift] - &p.beta * &c[i + j + shift + 1]
        }))
    }

    fn grid() -> Vec<Params> {
        vec![
            Params::ints(2, 1),
            Params::ints(1, -1),
            Params::ints(3, 2),
            Params::ints(0, 1),
            Params::new(frac(1, 2), frac(1, 3)),
            Params::ints(4, 4),
            Params::new(frac(-5, 2), frac(3, 7)),
        ]
    }

    #[test]
    fn heilermann_examples() {
        let t = ThreeTerm::new(vec![], consts(&int(1), 7), Some(int(1)));
        assert_eq!(heilermann(&t, 7).unwrap(), int(1));
        let t = ThreeTerm::new(vec![], vec![int(3)], Some(int(2)));
        assert_eq!(heilermann(&t, 1).unwrap(), int(12));
        assert_eq!(heilermann(&t, 0).unwrap(), int(2));
        let w = catalan_combo_weight(&Params::ints(2, 1), Variant::Plain, 1).unwrap();
        assert_eq!(heilermann(&w, 1).unwrap(), int(5));
    }

    #[test]
    fn heilermann_errors() {
        let t = ThreeTerm::new(vec![], vec![int(3)], None);
        assert_eq!(heilermann(&t, 1), Err(Error::Unset));
        let t = t.with_mu0(int(1));
        assert!(matches!(
            heilermann(&t, 2),
            Err(Error::InsufficientCoeffs { .. })
        ));
    }

    #[test]
    fn scale_weight_examples() {
        let t = ThreeTerm::new(vec![int(1)], vec![int(2)], Some(int(4)));
        let s = scale_weight(&t, &frac(1, 2)).unwrap();
        assert_eq!(s.mu0, Some(int(2)));
        assert_eq!(
            (s.alpha_seq.clone(), s.beta_seq.clone()),
            (t.alpha_seq.clone(), t.beta_seq.clone())
        );
        assert_eq!(scale_weight(&t, &int(1)).unwrap(), t);
        assert!(matches!(
            scale_weight(&t, &int(0)),
            Err(Error::InvalidScale(_))
        ));
        let unset = chebyshev_seed(ChebyshevKind::Second, 3);
        assert_eq!(scale_weight(&unset, &int(-3)).unwrap().mu0, None);
    }

    #[test]
    fn affine_weight_examples() {
        let moved = affine_weight(
            &chebyshev_seed(ChebyshevKind::Fourth, 4),
            &frac(1, 2),
            &int(-1),
        )
        .unwrap();
        assert_eq!(moved.alpha_seq, vec![int(1), int(2), int(2), int(2)]);
        assert_eq!(moved.beta_seq, consts(&int(1), 4));
        let moved = affine_weight(
            &chebyshev_seed(ChebyshevKind::Second, 3),
            &frac(1, 2),
            &int(-1),
        )
        .unwrap();
        assert_eq!(moved.alpha_seq, consts(&int(2), 3));
        assert_eq!(moved.beta_seq, consts(&int(1), 3));
        let t = ThreeTerm::new(vec![frac(3, 5)], vec![int(7)], Some(int(2)));
        assert_eq!(affine_weight(&t, &int(1), &int(0)).unwrap(), t);
        assert_eq!(
            affine_weight(&t, &int(2), &int(0)).unwrap().mu0,
            Some(int(1))
        );
        assert!(matches!(
            affine_weight(&t, &int(-1), &int(0)),
            Err(Error::InvalidScale(_))
        ));
        assert!(affine_weight(&t, &int(0), &int(0)).is_err());
    }

    #[test]
    fn seeds() {
        let f = chebyshev_seed(ChebyshevKind::Fourth, 3);
        assert_eq!(f.alpha_seq, vec![frac(-1, 2), int(0), int(0)]);
        assert_eq!(f.beta_seq, consts(&frac(1, 4), 3));
        assert_eq!(f.mu0, None);
        let s = chebyshev_seed(ChebyshevKind::Second, 3);
        assert_eq!(s.alpha_seq, consts(&int(0), 3));
        assert_eq!(s.mu0, None);
    }

    fn moved_fourth(len: usize) -> ThreeTerm {
        affine_weight(
            &chebyshev_seed(ChebyshevKind::Fourth, len),
            &frac(1, 2),
            &int(-1),
        )
        .unwrap()
    }

    #[test]
    fn r_sequence_examples() {
        let r = r_sequence(&moved_fourth(3), &int(4), 3).unwrap();
        assert_eq!(r.values, vec![int(3), frac(5, 3), frac(7, 5)]);
        assert_eq!(r.c, int(4));
        let r = r_sequence(&moved_fourth(2), &int(-1), 2).unwrap();
        assert_eq!(r.values, vec![int(-2), frac(-5, 2)]);
        let flat = ThreeTerm::new(vec![int(1), int(2), int(5)], consts(&int(0), 2), None);
        assert_eq!(
            r_sequence(&flat, &int(7), 3).unwrap().values,
            vec![int(6), int(5), int(2)]
        );
        // c = alpha_0 makes r_0 vanish.
        assert_eq!(
            r_sequence(&moved_fourth(3), &int(1), 3),
            Err(Error::DivisionByZeroR(0))
        );
    }

    #[test]
    fn linear_multiplier_examples() {
        let w2 = moved_fourth(3).with_mu0(int(-1));
        let m = linear_multiplier(&w2, &int(4), int(3)).unwrap();
        assert_eq!(m.beta_seq[0], frac(5, 9));
        assert_eq!(m.mu0, Some(int(3)));
        assert_eq!(m.alpha_seq.len(), 2);
        assert_eq!(heilermann(&m, 1).unwrap(), int(5));
        assert_eq!(
            heilermann(&m, 1).unwrap(),
            hhat_closed(&Params::ints(2, 1), 1)
        );
        assert!(matches!(
            linear_multiplier(&w2, &int(1), int(0)),
            Err(Error::DivisionByZeroR(0))
        ));
    }

    #[test]
    fn pipeline_examples() {
        let at = |p: Params, v| {
            (0..3)
                .map(|n| thm53_pipeline(&p, v, n).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(
            at(Params::ints(2, 1), Variant::Plain),
            vec![int(3), int(5), int(7)]
        );
        assert_eq!(
            at(Params::ints(1, -1), Variant::Plain),
            vec![int(2), int(5), int(13)]
        );
        assert_eq!(
            at(Params::ints(2, 1), Variant::Shifted),
            vec![int(2), int(3), int(4)]
        );
        assert!(matches!(
            thm53_pipeline(&Params::ints(1, 0), Variant::Plain, 1),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn pipeline_matches_determinants() {
        for p in grid() {
            for n in 0..=6 {
                let plain = thm53_pipeline(&p, Variant::Plain, n).unwrap();
                assert_eq!(plain, combo_det(&p, 0, n), "plain {p} n={n}");
                assert_eq!(plain, hhat_closed(&p, n));
                let shifted = thm53_pipeline(&p, Variant::Shifted, n).unwrap();
                assert_eq!(shifted, combo_det(&p, 1, n), "shifted {p} n={n}");
                assert_eq!(shifted, hcheck_closed(&p, n));
            }
        }
    }

    #[test]
    fn vanishing_minor_is_an_error() {
        // alpha^2 = beta makes the first plain determinant U_3 vanish, so r_0 = 0.
        let p = Params::ints(1, 1);
        assert_eq!(thm53_pipeline(&p, Variant::Plain, 0).unwrap(), int(0));
        assert_eq!(
            thm53_pipeline(&p, Variant::Plain, 1),
            Err(Error::DivisionByZeroR(0))
        );
        // alpha^2 = 2 beta does the same for the shifted family.
        let p = Params::ints(2, 2);
        assert_eq!(thm53_pipeline(&p, Variant::Shifted, 0).unwrap(), int(0));
        assert_eq!(
            thm53_pipeline(&p, Variant::Shifted, 1),
            Err(Error::DivisionByZeroR(0))
        );
    }

    #[test]
    fn ratio_law_and_r_recurrence() {
        for p in grid() {
            let c = &p.alpha * &p.alpha / &p.beta;
            let w = catalan_combo_weight(&p, Variant::Plain, 7).unwrap();
            let w2 = moved_fourth(8).with_mu0(-p.beta.clone());
            let r = r_sequence(&w2, &c, 8).unwrap().values;
            for n in 1..8 {
                assert_eq!(&r[n] * &r[n - 1], (&c - int(2)) * &r[n - 1] - int(1));
            }
            for n in 0..6 {
                let ratio = heilermann(&w, n + 1).unwrap() / heilermann(&w, n).unwrap();
                let prod =
                    (1..=n + 1).fold(w.mu0.clone().unwrap(), |acc, i| acc * w.beta(i).unwrap());
                assert_eq!(ratio, prod);
                assert_eq!(ratio, &p.beta * &r[n + 1]);
            }
        }
    }

    #[test]
    fn plain_sequence_satisfies_two_step_recurrence() {
        for p in grid() {
            let h: Vec<Rat> = (0..=6)
                .map(|n| thm53_pipeline(&p, Variant::Plain, n).unwrap())
                .collect();
            let c1 = &p.alpha * &p.alpha - int(2) * &p.beta;
            let c2 = -(&p.beta * &p.beta);
            for n in 2..=6 {
                assert_eq!(h[n], &c1 * &h[n - 1] + &c2 * &h[n - 2]);
            }
        }
    }
}
