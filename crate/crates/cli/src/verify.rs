//! Identity verification over parameter grids and a seeded random corpus.
//!
//! Each identity compares a closed form or structural claim against
//! brute-force determinants. Library errors become failure records so one
//! bad point never aborts the suite.

use hankel_core::closedforms::{
    chi_shifted_det, h_closed, h_sum_even, h_sum_odd, hcheck_closed, hhat_closed, hstar_closed,
    hstarstar_closed, krattenthaler_det, lemma72_closed, lemma73_closed, literal, lucas_u,
    thm61_split, z_eval,
};
use hankel_core::orthopoly::{thm53_pipeline, Variant};
use hankel_core::seqcore::{catalan_seq, frac, int, pow, scaled_catalan_seq, shift, u_sequence};
use hankel_core::transforms::{
    aerate, aerate_alpha, binomial_transform, bordered_hankel_det, conjugate_identity_check,
    hankel_like_det, hankel_matrix, scale_pointwise,
};
use hankel_core::{det_exact, Error, OffsetList, Params, Rat, Result as CoreResult, Seq};
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{RunConfig, CORPUS_SIZE};
use crate::error::CliError;

/// Every identity id, in report order.
pub const IDENTITY_IDS: [&str; 17] = [
    "eq20", "eq24", "eq28", "eq30", "lem31", "lem32", "lem72", "lem73", "prop42", "thm21", "thm22",
    "thm23", "thm41", "thm53a", "thm53b", "thm61", "thm71",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub params: String,
    pub index: usize,
    pub expected: String,
    pub actual: String,
}

/// A point outside an identity's domain, recorded instead of compared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exclusion {
    pub params: String,
    pub index: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub identity_id: String,
    pub points_tested: usize,
    pub failures: Vec<Failure>,
    pub excluded: Vec<Exclusion>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One summary line followed by one line per failure.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "{} {} points={} failures={} excluded={}\n",
            if self.passed() { "PASS" } else { "FAIL" },
            self.identity_id,
            self.points_tested,
            self.failures.len(),
            self.excluded.len()
        );
        for f in &self.failures {
            out.push_str(&format!(
                "  {} index={} expected={} actual={}\n",
                f.params, f.index, f.expected, f.actual
            ));
        }
        out
    }
}

/// 0 when every report passes, 1 otherwise.
pub fn exit_code(reports: &[VerifyReport]) -> i32 {
    if reports.iter().all(VerifyReport::passed) {
        0
    } else {
        1
    }
}

/// Deterministic JSON rendering of a report list.
pub fn reports_json(reports: &[VerifyReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize") + "\n"
}

/// `count` integer sequences of length `len` with entries in `[-9, 9]`,
/// drawn from ChaCha8 seeded with `seed`.
pub fn random_corpus(seed: u64, count: usize, len: usize) -> Vec<Seq> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let v: Vec<i64> = (0..len).map(|_| rng.gen_range(-9..=9)).collect();
            Seq::from_ints(&v, format!("random#{i}"))
        })
        .collect()
}

/// Runs the selected identities. Identities run in parallel; the result is
/// ordered by identity id, and within a report by grid order.
pub fn run_verify(cfg: &RunConfig) -> Result<Vec<VerifyReport>, CliError> {
    cfg.validate()?;
    let ids: Vec<&str> = match &cfg.only {
        None => IDENTITY_IDS.to_vec(),
        Some(only) => {
            for id in only {
                if !IDENTITY_IDS.contains(&id.as_str()) {
                    return Err(CliError::Config(format!("unknown identity id {id:?}")));
                }
            }
            IDENTITY_IDS
                .iter()
                .copied()
                .filter(|id| only.iter().any(|o| o == id))
                .collect()
        }
    };
    let ctx = Ctx::new(cfg);
    Ok(ids.par_iter().map(|id| ctx.run(id)).collect())
}

struct Acc {
    report: VerifyReport,
}

fn show(v: &CoreResult<Rat>) -> String {
    match v {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

impl Acc {
    fn new(id: &str) -> Self {
        Acc {
            report: VerifyReport {
                identity_id: id.to_string(),
                points_tested: 0,
                failures: Vec::new(),
                excluded: Vec::new(),
            },
        }
    }

    fn check(
        &mut self,
        params: &str,
        index: usize,
        expected: CoreResult<Rat>,
        actual: CoreResult<Rat>,
    ) {
        self.report.points_tested += 1;
        let ok = matches!((&expected, &actual), (Ok(e), Ok(a)) if e == a);
        if !ok {
            self.report.failures.push(Failure {
                params: params.to_string(),
                index,
                expected: show(&expected),
                actual: show(&actual),
            });
        }
    }

    fn check_bool(&mut self, params: &str, index: usize, holds: CoreResult<bool>) {
        let to_rat = |b: bool| int(i64::from(b));
        self.check(params, index, Ok(to_rat(true)), holds.map(to_rat));
    }

    fn exclude(&mut self, params: &str, index: usize, reason: String) {
        self.report.excluded.push(Exclusion {
            params: params.to_string(),
            index,
            reason,
        });
    }
}

struct Ctx<'a> {
    cfg: &'a RunConfig,
    corpus: Vec<Seq>,
    alphas: Vec<Rat>,
    betas: Vec<Rat>,
}

fn push_unique(v: &mut Vec<Rat>, x: Rat) {
    if !v.contains(&x) {
        v.push(x);
    }
}

fn hankel_det(s: &Seq, n: usize) -> CoreResult<Rat> {
    Ok(det_exact(&hankel_matrix(s, n)?))
}

/// `det [alpha^2 C_{i+j+from} - beta C_{i+j+from+1}]_{0<=i,j<=n}`.
fn combo_det(p: &Params, from: usize, n: usize) -> Rat {
    let c = catalan_seq(2 * n + from + 2);
    let a2 = &p.alpha * &p.alpha;
    det_exact(&hankel_core::SquareMatrix::from_fn(n + 1, |i, j| {
        &a2 * &c[i + j + from] - &p.beta * &c[i + j + from + 1]
    }))
}

impl<'a> Ctx<'a> {
    fn new(cfg: &'a RunConfig) -> Self {
        let mut alphas = Vec::new();
        for a in [int(-2), int(-1), int(0), int(1), int(3), frac(1, 2)] {
            push_unique(&mut alphas, a);
        }
        let mut betas = Vec::new();
        for b in [int(1), int(2), int(-1), frac(1, 2)] {
            push_unique(&mut betas, b);
        }
        for p in &cfg.grid {
            push_unique(&mut alphas, p.alpha.clone());
            push_unique(&mut betas, p.beta.clone());
        }
        Ctx {
            cfg,
            corpus: random_corpus(cfg.seed, CORPUS_SIZE, 2 * cfg.n_max + 2),
            alphas,
            betas,
        }
    }

    fn n_max(&self) -> usize {
        self.cfg.n_max
    }

    fn run(&self, id: &str) -> VerifyReport {
        let mut acc = Acc::new(id);
        match id {
            "thm21" | "thm22" | "thm23" => self.lucas_family(id, &mut acc),
            "eq20" => self.bordered(&mut acc),
            "eq24" | "eq28" => self.double_sums(id == "eq24", &mut acc),
            "eq30" => self.z_sequence(&mut acc),
            "lem31" => self.binomial_invariance(&mut acc),
            "lem32" => self.conjugate(&mut acc),
            "thm41" => self.aerated_product(&mut acc),
            "prop42" => self.scaling(&mut acc),
            "thm53a" => self.catalan_combo(Variant::Plain, &mut acc),
            "thm53b" => self.catalan_combo(Variant::Shifted, &mut acc),
            "thm61" => self.split(&mut acc),
            "thm71" => self.krattenthaler(&mut acc),
            "lem72" | "lem73" => self.skipped_rows(id == "lem72", &mut acc),
            _ => unreachable!("ids are validated"),
        }
        acc.report
    }

    /// Hankel transforms of `u`, `(u_{n+1})` and `(u_{n+2})`.
    fn lucas_family(&self, id: &str, acc: &mut Acc) {
        let n_max = self.n_max();
        for p in &self.cfg.grid {
            let label = p.to_string();
            let u = match u_sequence(p, 2 * n_max + 3) {
                Ok(u) => u,
                Err(e) => {
                    acc.check(&label, 0, Err(e.clone()), Err(e));
                    continue;
                }
            };
            for n in 0..=n_max {
                let (brute, closed) = match id {
                    "thm21" => (
                        shift(&u, 1).and_then(|s| hankel_det(&s, n)),
                        hstar_closed(p, n),
                    ),
                    "thm22" if self.cfg.thm22_printed_constant => (
                        shift(&u, 2).and_then(|s| hankel_det(&s, n)),
                        literal::hstarstar_closed(p, n),
                    ),
                    "thm22" => (
                        shift(&u, 2).and_then(|s| hankel_det(&s, n)),
                        hstarstar_closed(p, n),
                    ),
                    _ => (hankel_det(&u, n), h_closed(p, n)),
                };
                acc.check(&label, n, brute, Ok(closed));
            }
        }
    }

    fn u_hankel(p: &Params, n: usize) -> CoreResult<Rat> {
        hankel_det(&u_sequence(p, 2 * n + 1)?, n)
    }

    /// Bordered determinant of aerated scaled Catalan data against `h_n`.
    fn bordered(&self, acc: &mut Acc) {
        let n_max = self.n_max();
        for p in &self.cfg.grid {
            let c = scaled_catalan_seq(&p.beta, n_max + 2);
            let (pa, a) = (aerate(&c), aerate_alpha(&c, &p.alpha));
            for n in 0..=n_max {
                acc.check(
                    &p.to_string(),
                    n,
                    Self::u_hankel(p, n),
                    bordered_hankel_det(&pa, &a, n),
                );
            }
        }
    }

    /// `h_{2k-1}` (odd) or `h_{2k}` (even) from the double sums.
    fn double_sums(&self, odd: bool, acc: &mut Acc) {
        let n_max = self.n_max();
        for p in &self.cfg.grid {
            for n in 0..=n_max {
                if (n % 2 == 1) != odd {
                    continue;
                }
                let sum = if odd {
                    h_sum_odd(p, n.div_ceil(2))
                } else {
                    h_sum_even(p, n / 2)
                };
                acc.check(&p.to_string(), n, Self::u_hankel(p, n), Ok(sum));
            }
        }
    }

    /// `z_n = -U_n` and `z_{n+2} = alpha z_{n+1} - beta z_n`. No determinants,
    /// so the range is at least `n <= 10`.
    fn z_sequence(&self, acc: &mut Acc) {
        let top = self.n_max().max(10);
        for p in &self.cfg.grid {
            let label = p.to_string();
            let z: Vec<Rat> = (0..=top).map(|n| z_eval(p, n)).collect();
            for n in 0..=top {
                acc.check(&label, n, Ok(-lucas_u(p, n)), Ok(z[n].clone()));
                if n + 2 <= top {
                    let rec = &p.alpha * &z[n + 1] - &p.beta * &z[n];
                    acc.check(&label, n + 2, Ok(rec), Ok(z[n + 2].clone()));
                }
            }
        }
    }

    fn binomial_invariance(&self, acc: &mut Acc) {
        let n_max = self.n_max();
        for s in &self.corpus {
            for a in &self.alphas {
                let label = format!("{} alpha={a}", s.label);
                let b = binomial_transform(s, a);
                for n in 0..=n_max {
                    acc.check(&label, n, hankel_det(s, n), hankel_det(&b, n));
                }
            }
        }
    }

    fn conjugate(&self, acc: &mut Acc) {
        for s in &self.corpus {
            for a in &self.alphas {
                let label = format!("{} alpha={a}", s.label);
                for m in 1..=self.n_max().max(1) {
                    acc.check_bool(&label, m, conjugate_identity_check(s, a, m));
                }
            }
        }
    }

    fn aerated_product(&self, acc: &mut Acc) {
        for s in &self.corpus {
            let g = aerate(s);
            let s1 = match shift(s, 1) {
                Ok(s1) => s1,
                Err(e) => {
                    acc.check(&s.label, 0, Err(e.clone()), Err(e));
                    continue;
                }
            };
            for n in 0..=self.n_max() {
                let second = if n == 0 {
                    Ok(int(1))
                } else {
                    hankel_det(&s1, (n - 1) / 2)
                };
                let product = hankel_det(s, n / 2).and_then(|h| second.map(|h1| h * h1));
                acc.check(&s.label, n, hankel_det(&g, n), product);
            }
        }
    }

    fn scaling(&self, acc: &mut Acc) {
        for s in &self.corpus {
            for r in [int(-2), frac(1, 2), int(3)] {
                let label = format!("{} r={r}", s.label);
                let scaled = scale_pointwise(s, &r);
                for n in 0..=self.n_max() {
                    let expected = hankel_det(s, n).map(|h| pow(&r, n * (n + 1)) * h);
                    acc.check(&label, n, hankel_det(&scaled, n), expected);
                }
            }
        }
    }

    /// Determinant, closed form and recurrence-coefficient pipeline.
    ///
    /// Where a lower-order determinant of the family vanishes the pipeline
    /// divides by zero; that point is recorded as excluded once the
    /// vanishing determinant is confirmed, and as a failure otherwise.
    fn catalan_combo(&self, variant: Variant, acc: &mut Acc) {
        let (from, closed): (usize, fn(&Params, usize) -> Rat) = match variant {
            Variant::Plain => (0, hhat_closed),
            Variant::Shifted => (1, hcheck_closed),
        };
        for p in &self.cfg.grid {
            let label = p.to_string();
            for n in 0..=self.n_max() {
                let brute = combo_det(p, from, n);
                acc.check(&label, n, Ok(brute.clone()), Ok(closed(p, n)));
                match thm53_pipeline(p, variant, n) {
                    Err(Error::DivisionByZeroR(j)) if combo_det(p, from, j).is_zero() => {
                        acc.exclude(&label, n, format!("determinant of order {j} vanishes"))
                    }
                    Err(Error::InvalidParams(msg)) if p.beta.is_zero() => {
                        acc.exclude(&label, n, msg)
                    }
                    other => acc.check(&label, n, Ok(brute), other),
                }
            }
        }
    }

    fn split(&self, acc: &mut Acc) {
        let len = self.n_max() + 2;
        let mut seqs = vec![
            catalan_seq(len),
            scaled_catalan_seq(&int(2), len),
            scaled_catalan_seq(&int(-1), len),
        ];
        seqs.extend(self.corpus.iter().cloned());
        for s in &seqs {
            for a in &self.alphas {
                let label = format!("{} alpha={a}", s.label);
                for n in 0..=self.n_max() {
                    match thm61_split(s, a, n) {
                        Ok((left, right)) => acc.check(&label, n, Ok(left), Ok(right)),
                        Err(e) => acc.check(&label, n, Err(e.clone()), Err(e)),
                    }
                }
            }
        }
    }

    /// All strictly increasing offset lists in `0..=7` with `k <= 4`, plus
    /// repeated-offset lists where both sides vanish.
    fn krattenthaler(&self, acc: &mut Acc) {
        let c = catalan_seq(16);
        let mut lists: Vec<Vec<usize>> = (1u32..(1 << 8))
            .filter(|m| m.count_ones() <= 4)
            .map(|m| (0..8).filter(|b| m & (1 << b) != 0).collect())
            .collect();
        lists.extend([vec![0, 0], vec![1, 3, 3], vec![2, 2, 5, 7]]);
        for (index, rows) in lists.into_iter().enumerate() {
            let label = format!("rows={rows:?}");
            let rows = OffsetList::new(rows);
            acc.check(
                &label,
                index,
                hankel_like_det(&c, &rows),
                Ok(krattenthaler_det(&rows)),
            );
        }
    }

    /// One-row-skipped determinants of `beta^n C_n`, indexed by `k`.
    fn skipped_rows(&self, shifted: bool, acc: &mut Acc) {
        let extra = usize::from(shifted);
        for beta in &self.betas {
            let c = scaled_catalan_seq(beta, 2 * self.n_max() + 4);
            for k in 1..=self.n_max().max(1) {
                for l in 0..k {
                    let closed = if shifted {
                        lemma72_closed(beta, k, l)
                    } else {
                        lemma73_closed(beta, k, l)
                    };
                    let label = format!("beta={beta} l={l}");
                    acc.check(&label, k, chi_shifted_det(&c, k, l, extra), closed);
                }
            }
        }
    }
}
