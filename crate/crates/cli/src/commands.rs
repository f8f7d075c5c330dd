//! Sequence-producing commands: `gen`, `transform`, `hankel` and `closed`.

use hankel_core::closedforms::{krattenthaler_det, lemma72_closed, lemma73_closed};
use hankel_core::seqcore::{catalan_seq, scaled_catalan_seq, shift, u_sequence};
use hankel_core::transforms::{
    aerate, aerate_alpha, binomial_transform, hankel_transform, scale_pointwise,
};
use hankel_core::{OffsetList, Params, Rat, Seq};

use crate::error::CliError;
use crate::table::Target;

/// Sequences `gen` can produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GenKind {
    /// Coefficients of the compositional inverse of `x / (1 + alpha x + beta x^2)`.
    U,
    /// Catalan numbers.
    Catalan,
    /// `beta^n C_n`.
    ScaledCatalan,
}

pub fn generate(kind: GenKind, p: &Params, len: usize) -> Result<Seq, CliError> {
    Ok(match kind {
        GenKind::U => u_sequence(p, len)?,
        GenKind::Catalan => catalan_seq(len),
        GenKind::ScaledCatalan => scaled_catalan_seq(&p.beta, len),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TransformOp {
    Binomial,
    Aerate,
    AerateAlpha,
    Scale,
    Shift,
}

/// Applies `op`; `alpha`, `r` and `k` are required by the ops that use them.
pub fn transform(
    s: &Seq,
    op: TransformOp,
    alpha: Option<&Rat>,
    r: Option<&Rat>,
    k: Option<usize>,
) -> Result<Seq, CliError> {
    let need = |name: &str| CliError::Config(format!("transform needs --{name}"));
    Ok(match op {
        TransformOp::Binomial => binomial_transform(s, alpha.ok_or_else(|| need("alpha"))?),
        TransformOp::Aerate => aerate(s),
        TransformOp::AerateAlpha => aerate_alpha(s, alpha.ok_or_else(|| need("alpha"))?),
        TransformOp::Scale => scale_pointwise(s, r.ok_or_else(|| need("r"))?),
        TransformOp::Shift => shift(s, k.ok_or_else(|| need("k"))?)?,
    })
}

pub fn hankel(s: &Seq) -> Seq {
    hankel_transform(s)
}

/// Targets of the `closed` command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ClosedTarget {
    H,
    Hstar,
    Hstarstar,
    Hhat,
    Hcheck,
    Krattenthaler,
    Lem72,
    Lem73,
}

/// Arguments for `closed`; each target reads the fields it needs.
#[derive(Debug, Clone, Default)]
pub struct ClosedArgs {
    pub params: Option<Params>,
    pub n_max: Option<usize>,
    pub rows: Option<Vec<usize>>,
    pub beta: Option<Rat>,
    pub k: Option<usize>,
}

/// Family targets give `n = 0..=n_max`; the others give a single value.
pub fn closed(target: ClosedTarget, args: &ClosedArgs) -> Result<Seq, CliError> {
    let need = |what: &str| CliError::Config(format!("--target {target:?} needs {what}"));
    let family = |t: Target| -> Result<Seq, CliError> {
        let p = args
            .params
            .as_ref()
            .ok_or_else(|| need("--alpha and --beta"))?;
        let n_max = args.n_max.ok_or_else(|| need("--nmax"))?;
        Ok(Seq::tabulate(n_max + 1, format!("{t:?} at {p}"), |n| {
            t.closed(p, n)
        }))
    };
    let skipped = |shifted: bool| -> Result<Seq, CliError> {
        let beta = args
            .beta
            .clone()
            .or_else(|| args.params.as_ref().map(|p| p.beta.clone()))
            .ok_or_else(|| need("--beta"))?;
        let k = args.k.filter(|&k| k > 0).ok_or_else(|| need("--k >= 1"))?;
        let values = (0..k)
            .map(|l| {
                if shifted {
                    lemma72_closed(&beta, k, l)
                } else {
                    lemma73_closed(&beta, k, l)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Seq::new(values, format!("skipped rows, k={k}, l=0..{k}")))
    };
    match target {
        ClosedTarget::H => family(Target::H),
        ClosedTarget::Hstar => family(Target::Hstar),
        ClosedTarget::Hstarstar => family(Target::Hstarstar),
        ClosedTarget::Hhat => family(Target::Hhat),
        ClosedTarget::Hcheck => family(Target::Hcheck),
        ClosedTarget::Krattenthaler => {
            let rows = args.rows.clone().ok_or_else(|| need("--rows"))?;
            let det = krattenthaler_det(&OffsetList::new(rows));
            Ok(Seq::new(vec![det], "krattenthaler"))
        }
        ClosedTarget::Lem72 => skipped(true),
        ClosedTarget::Lem73 => skipped(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hankel_core::seqcore::{frac, int};

    #[test]
    fn generate_examples() {
        let u = generate(GenKind::U, &Params::ints(2, 1), 5).unwrap();
        assert_eq!(u.values, Seq::from_ints(&[0, 1, 2, 5, 14], "").values);
        let c = generate(GenKind::Catalan, &Params::ints(0, 0), 4).unwrap();
        assert_eq!(c.values, Seq::from_ints(&[1, 1, 2, 5], "").values);
        let c = generate(GenKind::ScaledCatalan, &Params::ints(0, -1), 4).unwrap();
        assert_eq!(c.values, Seq::from_ints(&[1, -1, 2, -5], "").values);
    }

    #[test]
    fn transform_ops() {
        let s = Seq::from_ints(&[1, 1, 2], "c");
        let a = transform(&s, TransformOp::Aerate, None, None, None).unwrap();
        assert_eq!(a.values, Seq::from_ints(&[1, 0, 1, 0, 2], "").values);
        let b = transform(&s, TransformOp::Binomial, Some(&int(1)), None, None).unwrap();
        assert_eq!(b.values, Seq::from_ints(&[1, 2, 5], "").values);
        let sc = transform(&s, TransformOp::Scale, None, Some(&frac(1, 2)), None).unwrap();
        assert_eq!(sc.values, vec![int(1), frac(1, 2), frac(1, 2)]);
        let sh = transform(&s, TransformOp::Shift, None, None, Some(1)).unwrap();
        assert_eq!(sh.values, Seq::from_ints(&[1, 2], "").values);
        assert!(matches!(
            transform(&s, TransformOp::AerateAlpha, None, None, None),
            Err(CliError::Config(_))
        ));
    }

    #[test]
    fn closed_targets() {
        let args = ClosedArgs {
            params: Some(Params::ints(1, -1)),
            n_max: Some(2),
            ..Default::default()
        };
        assert_eq!(
            closed(ClosedTarget::Hhat, &args).unwrap().values,
            vec![int(2), int(5), int(13)]
        );
        let args = ClosedArgs {
            rows: Some(vec![0, 1, 2]),
            ..Default::default()
        };
        assert_eq!(
            closed(ClosedTarget::Krattenthaler, &args).unwrap().values,
            vec![int(1)]
        );
        let args = ClosedArgs {
            beta: Some(int(1)),
            k: Some(2),
            ..Default::default()
        };
        // l = 1 gives C(4, 3) = 4.
        assert_eq!(closed(ClosedTarget::Lem72, &args).unwrap()[1], int(4));
        assert!(closed(ClosedTarget::H, &ClosedArgs::default()).is_err());
    }
}
