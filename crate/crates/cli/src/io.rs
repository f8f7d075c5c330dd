//! Sequence file formats: OEIS b-files, CSV and JSON, all with exact rationals.

use std::fmt;
use std::str::FromStr;

use hankel_core::{Rat, Seq};
use num::BigInt;
use serde::Serialize;

use crate::error::CliError;

/// Output format for sequences and tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Bfile,
    Csv,
    Json,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Bfile => "bfile",
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// Parses `p`, `-p` or `p/q` into a canonical rational.
pub fn parse_rat(text: &str) -> Result<Rat, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| format!("not a rational: {text:?}"))?;
    let den = BigInt::from_str(den).map_err(|_| format!("not a rational: {text:?}"))?;
    if den == BigInt::from(0) {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(Rat::new(num, den))
}

/// Reads `index value` lines. `#` starts a comment; blank lines are ignored.
/// Indices must be contiguous and ascending; the result is re-indexed from 0
/// and the original first index is recorded in the label as `start=K`.
pub fn parse_bfile(text: &str) -> Result<Seq, CliError> {
    let mut values = Vec::new();
    let mut start: Option<i64> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |msg: String| CliError::Parse {
            line: lineno + 1,
            msg,
        };
        let mut fields = line.split_whitespace();
        let (idx, val) = match (fields.next(), fields.next(), fields.next()) {
            (Some(i), Some(v), None) => (i, v),
            _ => return Err(parse_err(format!("expected `index value`, got {line:?}"))),
        };
        let idx: i64 = idx
            .parse()
            .map_err(|_| parse_err(format!("bad index {idx:?}")))?;
        let val = parse_rat(val).map_err(parse_err)?;
        let first = *start.get_or_insert(idx);
        let expected = first + values.len() as i64;
        if idx != expected {
            return Err(CliError::Gap {
                line: lineno + 1,
                expected,
                found: idx,
            });
        }
        values.push(val);
    }
    Ok(Seq::new(values, format!("start={}", start.unwrap_or(0))))
}

#[derive(Serialize)]
struct Entry {
    n: usize,
    value: String,
}

/// Renders a sequence indexed from 0.
///
/// * `bfile`: `n value` lines.
/// * `csv`: header `n,value` then rows.
/// * `json`: `[{"n":0,"value":"p/q"},...]`, no trailing newline.
pub fn emit(s: &Seq, fmt: Format) -> String {
    match fmt {
        Format::Bfile => s
            .iter()
            .enumerate()
            .map(|(n, v)| format!("{n} {v}\n"))
            .collect(),
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (n, v) in s.iter().enumerate() {
                out.push_str(&format!("{n},{v}\n"));
            }
            out
        }
        Format::Json => {
            let entries: Vec<Entry> = s
                .iter()
                .enumerate()
                .map(|(n, v)| Entry {
                    n,
                    value: v.to_string(),
                })
                .collect();
            serde_json::to_string(&entries).expect("entries serialize")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hankel_core::seqcore::{frac, int};
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        let s = parse_bfile("0 1\n1 0\n2 1\n3 0\n4 2\n").unwrap();
        assert_eq!(s.values, Seq::from_ints(&[1, 0, 1, 0, 2], "").values);
        assert_eq!(s.label, "start=0");
        let s = parse_bfile("# comment\n1 1\n2 1\n").unwrap();
        assert_eq!(s.values, vec![int(1), int(1)]);
        assert_eq!(s.label, "start=1");
        assert!(matches!(
            parse_bfile("0 1\n2 5\n"),
            Err(CliError::Gap {
                expected: 1,
                found: 2,
                ..
            })
        ));
    }

    #[test]
    fn parse_errors_and_extras() {
        assert!(matches!(
            parse_bfile("0 1 2\n"),
            Err(CliError::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_bfile("0\n"), Err(CliError::Parse { .. })));
        assert!(matches!(parse_bfile("x 1\n"), Err(CliError::Parse { .. })));
        assert!(matches!(
            parse_bfile("0 1\n1 1/0\n"),
            Err(CliError::Parse { line: 2, .. })
        ));
        let s = parse_bfile("-2 5  # trailing\n\n-1 -3/6\n").unwrap();
        assert_eq!(s.values, vec![int(5), frac(-1, 2)]);
        assert_eq!(s.label, "start=-2");
        assert!(parse_bfile("").unwrap().is_empty());
        assert!(matches!(
            parse_bfile("3 1\n2 1\n"),
            Err(CliError::Gap { .. })
        ));
    }

    #[test]
    fn emit_examples() {
        assert_eq!(
            emit(&Seq::from_ints(&[1, 1, 2], ""), Format::Bfile),
            "0 1\n1 1\n2 2\n"
        );
        let s = Seq::new(vec![frac(1, 2), int(3)], "");
        assert_eq!(
            emit(&s, Format::Json),
            r#"[{"n":0,"value":"1/2"},{"n":1,"value":"3"}]"#
        );
        assert_eq!(emit(&Seq::new(vec![], ""), Format::Csv), "n,value\n");
        assert_eq!(emit(&s, Format::Csv), "n,value\n0,1/2\n1,3\n");
        assert_eq!(
            emit(&Seq::new(vec![frac(-4, 6)], ""), Format::Bfile),
            "0 -2/3\n"
        );
    }

    proptest! {
        #[test]
        fn bfile_round_trip(v in proptest::collection::vec((-1000i64..1000, 1i64..50), 0..40)) {
            let s = Seq::new(v.into_iter().map(|(n, d)| frac(n, d)).collect(), "start=0");
            prop_assert_eq!(parse_bfile(&emit(&s, Format::Bfile)).unwrap(), s);
        }
    }
}
