//! Checkpointed experiments, one per empirical claim.

use seqforge_core::practical::{
    goldbach_exhaustive, lambda_estimates, practical_sieve_with, DEFAULT_SIEVE_CAP,
};
use seqforge_core::powersums::{completeness_window, counterexample_set, reciprocal_weight, PowerSet};
use seqforge_core::sumfree::{greedy_extend, SumFreePrefix};
use seqforge_core::{Exec, Result};

use crate::args::{ExperimentArgs, ExperimentId};
use crate::commands::{
    alpha_table, checkpoints_or_default, gk_table, joint_table, lambda_table,
    stats_table, DEFAULT_SCAN_CAP,
};
use crate::table::ResultTable;

/// Constant of the twin-count desk floor `x / exp(k sqrt(ln x))`.
pub const TWIN_FLOOR_K: f64 = 2.11;

/// A table, flagged partial when the requested limit exceeded a resource cap.
pub struct ExperimentResult {
    pub table: ResultTable,
}

fn clamp(limit: u64, cap: u64) -> (u64, bool) {
    if limit > cap {
        (cap, true)
    } else {
        (limit, false)
    }
}

pub fn run(args: &ExperimentArgs, exec: Exec) -> Result<ExperimentResult> {
    let mut partial = false;
    let mut capped = |limit: u64, cap: u64| {
        let (l, p) = clamp(limit, cap);
        partial |= p;
        l
    };
    let mut table = match args.id {
        ExperimentId::Lambda => {
            let limit = capped(args.limit.unwrap_or(10_000_000), DEFAULT_SIEVE_CAP - 2);
            let cps = checkpoints_or_default(&clip(&args.checkpoints, limit), 1000, limit)?;
            let t = practical_sieve_with(limit + 2, exec)?;
            lambda_table(&lambda_estimates(&t, &cps)?)
        }
        ExperimentId::ErdosRatio => {
            let limit = capped(args.limit.unwrap_or(1_000_000), DEFAULT_SIEVE_CAP / 2);
            let cps = checkpoints_or_default(&clip(&args.checkpoints, limit), 1000, limit)?;
            let t = practical_sieve_with(2 * limit, exec)?;
            let mut table = ResultTable::new(&["x", "P_x", "P_2x", "ratio"]);
            for x in cps {
                let (a, b) = (t.count_p(x)?, t.count_p(2 * x)?);
                table.push(vec![x.into(), a.into(), b.into(), (b as f64 / a as f64).into()]);
            }
            table
        }
        ExperimentId::GoldbachExhaustive => {
            let limit = capped(args.limit.unwrap_or(1_000_000), DEFAULT_SIEVE_CAP);
            let t = practical_sieve_with(limit, exec)?;
            let s = goldbach_exhaustive(&t, limit, exec)?;
            let mut table = ResultTable::new(&["max_n", "checked", "failures", "largest_m1", "at_n"]);
            table.push(vec![
                limit.into(),
                s.checked.into(),
                s.failures.len().into(),
                s.largest_witness.0.into(),
                s.largest_witness.1.into(),
            ]);
            table
        }
        ExperimentId::TwinCount => {
            let limit = capped(args.limit.unwrap_or(1_000_000), DEFAULT_SIEVE_CAP - 2);
            let cps = checkpoints_or_default(&clip(&args.checkpoints, limit), 1000, limit)?;
            let t = practical_sieve_with(limit + 2, exec)?;
            let mut table = ResultTable::new(&["x", "P2", "floor", "above_floor"]);
            for x in cps {
                let c = t.count_p2(x)?;
                let floor = twin_floor(x);
                table.push(vec![x.into(), c.into(), floor.into(), (c as f64 > floor).into()]);
            }
            table
        }
        ExperimentId::Counterexample => {
            let ps = counterexample_set(args.p, args.s, args.n)?;
            let r = completeness_window(&ps, args.bound)?;
            let mut table = ResultTable::new(&[
                "p", "N", "s", "bound", "reciprocal_weight", "covered_from", "density", "missing_count",
            ]);
            table.push(vec![
                args.p.into(),
                args.n.into(),
                args.s.into(),
                args.bound.into(),
                reciprocal_weight(ps.bases())?.into(),
                r.covered_from.into(),
                r.density.into(),
                r.missing_count.into(),
            ]);
            table
        }
        ExperimentId::Joint34 => joint_table(&PowerSet::new(vec![3, 4], 1)?, args.count)?,
        ExperimentId::Alpha => {
            let limit = capped(args.limit.unwrap_or(10_000_000), DEFAULT_SCAN_CAP);
            alpha_table(10_000, limit, exec)?
        }
        ExperimentId::Gk => {
            let limit = capped(args.limit.unwrap_or(10_000_000), DEFAULT_SCAN_CAP);
            let cps = checkpoints_or_default(&clip(&args.checkpoints, limit), 1000, limit)?;
            gk_table(args.k, &cps, exec)?
        }
        ExperimentId::SumfreeStats => {
            let limit = args.limit.unwrap_or(1_000_000);
            let seed = SumFreePrefix::new(args.seed.clone())?;
            let p = greedy_extend(&seed, limit)?;
            stats_table(&p, Some((&args.seed, limit)))
        }
    };
    table.partial = partial;
    Ok(ExperimentResult { table })
}

/// `x / exp(k sqrt(ln x))`.
pub fn twin_floor(x: u64) -> f64 {
    let x = x as f64;
    x / (TWIN_FLOOR_K * x.ln().sqrt()).exp()
}

fn clip(cps: &[u64], limit: u64) -> Vec<u64> {
    cps.iter().copied().filter(|&c| c <= limit).collect()
}

