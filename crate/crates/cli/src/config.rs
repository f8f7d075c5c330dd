//! Run configuration shared by the `verify` and `table` commands.

use std::path::PathBuf;

use hankel_core::seqcore::{frac, int};
use hankel_core::Params;

use crate::error::CliError;
use crate::io::{parse_rat, Format};

/// Largest `n_max` accepted without `force`; determinant cost grows quickly.
pub const N_MAX_GUARD: usize = 8;

/// Default `n_max` for `verify`.
pub const DEFAULT_N_MAX: usize = 6;

/// Number of random sequences in the seeded corpus.
pub const CORPUS_SIZE: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Gen,
    Transform,
    Hankel,
    Closed,
    Verify,
    Table,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub params: Option<Params>,
    pub n_max: usize,
    pub input_path: Option<PathBuf>,
    pub output_format: Format,
    pub seed: u64,
    pub grid: Vec<Params>,
    /// Identity ids to run; `None` runs all of them.
    pub only: Option<Vec<String>>,
    /// Lifts the `n_max` cost guard.
    pub force: bool,
    /// Swaps the `thm22` closed form for the doubled printed constant.
    pub thm22_printed_constant: bool,
}

impl RunConfig {
    pub fn new(command: CommandKind) -> Self {
        RunConfig {
            command,
            params: None,
            n_max: DEFAULT_N_MAX,
            input_path: None,
            output_format: Format::Bfile,
            seed: 42,
            grid: Vec::new(),
            only: None,
            force: false,
            thm22_printed_constant: false,
        }
    }

    /// Checks the invariants the command relies on.
    pub fn validate(&self) -> Result<(), CliError> {
        match self.command {
            CommandKind::Verify => {
                if self.grid.is_empty() {
                    return Err(CliError::Config("verify needs a nonempty grid".into()));
                }
                if self.n_max > N_MAX_GUARD && !self.force {
                    return Err(CliError::Config(format!(
                        "n_max {} exceeds {N_MAX_GUARD}; pass --force to run anyway",
                        self.n_max
                    )));
                }
            }
            CommandKind::Table => {
                if self.params.is_none() {
                    return Err(CliError::Config("table needs --alpha and --beta".into()));
                }
                if self.output_format == Format::Bfile {
                    return Err(CliError::Config("table renders csv or json".into()));
                }
            }
            CommandKind::Transform | CommandKind::Hankel => {
                if self.input_path.is_none() {
                    return Err(CliError::Config("an input file is required".into()));
                }
            }
            CommandKind::Gen | CommandKind::Closed => {}
        }
        Ok(())
    }
}

/// Grid used by `verify --default-grid`.
///
/// Contains the degenerate points `(0, 1)`, a `beta = -1` point and two
/// points with `alpha^2 = 4 beta`, plus generic rational points. `(1, 1)` and
/// `(2, 2)` sit on the vanishing loci of the two Catalan-combination
/// families, where the recurrence-coefficient pipeline is undefined.
pub fn default_grid() -> Vec<Params> {
    vec![
        Params::ints(0, 1),
        Params::ints(2, 1),
        Params::ints(1, -1),
        Params::ints(3, 2),
        Params::new(frac(1, 2), frac(1, 3)),
        Params::ints(2, 2),
        Params::ints(4, 4),
        Params::new(frac(-3, 2), frac(-2, 5)),
        Params::ints(5, -3),
        Params::ints(1, 1),
        Params::new(int(-2), frac(7, 3)),
    ]
}

/// Reads `alpha beta` pairs, one per line, separated by whitespace or a
/// comma. `#` starts a comment.
pub fn parse_grid(text: &str) -> Result<Vec<Params>, CliError> {
    let mut grid = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| CliError::Parse {
            line: lineno + 1,
            msg,
        };
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        if fields.len() != 2 {
            return Err(err(format!("expected `alpha beta`, got {line:?}")));
        }
        grid.push(Params::new(
            parse_rat(fields[0]).map_err(err)?,
            parse_rat(fields[1]).map_err(err)?,
        ));
    }
    Ok(grid)
}
