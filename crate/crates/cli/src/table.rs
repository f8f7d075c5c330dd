//! Side-by-side tables of brute-force determinants and closed forms.

use hankel_core::closedforms::{
    h_closed, hcheck_closed, hhat_closed, hstar_closed, hstarstar_closed,
};
use hankel_core::seqcore::{catalan_seq, shift, u_sequence};
use hankel_core::transforms::hankel_matrix;
use hankel_core::{det_exact, Params, Rat, SquareMatrix};
use serde::Serialize;

use crate::config::RunConfig;
use crate::error::CliError;
use crate::io::Format;

/// Families with both a determinant and a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    /// Hankel transform of `u`.
    H,
    /// Hankel transform of `(u_{n+1})`.
    Hstar,
    /// Hankel transform of `(u_{n+2})`.
    Hstarstar,
    /// `det [alpha^2 C_{i+j} - beta C_{i+j+1}]`.
    Hhat,
    /// `det [alpha^2 C_{i+j+1} - beta C_{i+j+2}]`.
    Hcheck,
}

impl Target {
    pub fn closed(self, p: &Params, n: usize) -> Rat {
        match self {
            Target::H => h_closed(p, n),
            Target::Hstar => hstar_closed(p, n),
            Target::Hstarstar => hstarstar_closed(p, n),
            Target::Hhat => hhat_closed(p, n),
            Target::Hcheck => hcheck_closed(p, n),
        }
    }

    pub fn brute(self, p: &Params, n: usize) -> Result<Rat, CliError> {
        let lucas = |k: usize| -> Result<Rat, CliError> {
            let u = shift(&u_sequence(p, 2 * n + 1 + k)?, k)?;
            Ok(det_exact(&hankel_matrix(&u, n)?))
        };
        let combo = |from: usize| {
            let c = catalan_seq(2 * n + from + 2);
            let a2 = &p.alpha * &p.alpha;
            det_exact(&SquareMatrix::from_fn(n + 1, |i, j| {
                &a2 * &c[i + j + from] - &p.beta * &c[i + j + from + 1]
            }))
        };
        match self {
            Target::H => lucas(0),
            Target::Hstar => lucas(1),
            Target::Hstarstar => lucas(2),
            Target::Hhat => Ok(combo(0)),
            Target::Hcheck => Ok(combo(1)),
        }
    }
}

#[derive(Serialize)]
struct Row {
    n: usize,
    brute: String,
    closed: String,
    #[serde(rename = "match")]
    matches: bool,
}

/// Renders rows `n = 0..=n_max` as csv (`n,brute,closed,match`) or json.
pub fn run_table(cfg: &RunConfig, target: Target) -> Result<String, CliError> {
    cfg.validate()?;
    let p = cfg.params.as_ref().expect("validated");
    let mut rows = Vec::with_capacity(cfg.n_max + 1);
    for n in 0..=cfg.n_max {
        let brute = target.brute(p, n)?;
        let closed = target.closed(p, n);
        rows.push(Row {
            n,
            matches: brute == closed,
            brute: brute.to_string(),
            closed: closed.to_string(),
        });
    }
    Ok(match cfg.output_format {
        Format::Json => serde_json::to_string(&rows).expect("rows serialize"),
        _ => {
            let mut out = String::from("n,brute,closed,match\n");
            for r in &rows {
                out.push_str(&format!("{},{},{},{}\n", r.n, r.brute, r.closed, r.matches));
            }
            out
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::CommandKind;

    fn cfg(p: Params, n_max: usize, fmt: Format) -> RunConfig {
        let mut cfg = RunConfig::new(CommandKind::Table);
        cfg.params = Some(p);
        cfg.n_max = n_max;
        cfg.output_format = fmt;
        cfg
    }

    #[test]
    fn h_at_two_one() {
        let out = run_table(&cfg(Params::ints(2, 1), 3, Format::Csv), Target::H).unwrap();
        assert_eq!(
            out,
            "n,brute,closed,match\n0,0,0,true\n1,-1,-1,true\n2,-2,-2,true\n3,-3,-3,true\n"
        );
    }

    #[test]
    fn fibonacci_hhat_json() {
        let out = run_table(&cfg(Params::ints(1, -1), 2, Format::Json), Target::Hhat).unwrap();
        assert_eq!(
            out,
            r#"[{"n":0,"brute":"2","closed":"2","match":true},{"n":1,"brute":"5","closed":"5","match":true},{"n":2,"brute":"13","closed":"13","match":true}]"#
        );
    }

    #[test]
    fn every_target_matches() {
        for target in [
            Target::H,
            Target::Hstar,
            Target::Hstarstar,
            Target::Hhat,
            Target::Hcheck,
        ] {
            for p in [Params::ints(2, 1), Params::ints(4, 4), Params::ints(0, 1)] {
                let out = run_table(&cfg(p, 5, Format::Csv), target).unwrap();
                assert!(!out.contains("false"), "{target:?}\n{out}");
                assert_eq!(out.lines().count(), 7);
            }
        }
    }

    #[test]
    fn bfile_is_rejected() {
        let res = run_table(&cfg(Params::ints(2, 1), 3, Format::Bfile), Target::H);
        assert!(matches!(res, Err(CliError::Config(_))));
    }
}
