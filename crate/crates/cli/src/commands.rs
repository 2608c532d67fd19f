//! Family verbs: thin adapters from parsed arguments to core calls.

use seqforge_core::digitpow::{
    self, bound_monitor, conjecture3_fit, conjecture4_ratio, count_klm_with, enumerate_klm_with,
    g_k, is_klm, multiplier_identity_check, KlmParams, MonitorConfig,
};
use seqforge_core::numkernel::{big_pow, digit_sum, divisors, factor, reachable_sums, sigma};
use seqforge_core::powersums::{
    completeness_window_with, conjecture1_hypotheses, counterexample_set, joint_power_sequence,
    pow_terms_with, reciprocal_weight, sigma_set_with, Multiplicity, PowerSet,
};
use seqforge_core::practical::{
    erdos_ratio, find_pattern_tuples, goldbach_decompose, is_practical_oracle,
    is_practical_stewart, lambda_estimates, practical_sieve_with, twin_from_pair,
    verify_product_corollary,
};
use seqforge_core::sumfree::{
    gap_statistic, greedy_extend, growth_exponent, is_sumfree, reciprocal_sum, SumFreePrefix,
    Verdict, MIN_GROWTH_TERMS,
};
use seqforge_core::{Error, Exec, Result};

use crate::args::{KlmArgs, KlmCmd, PowsumCmd, PracticalCmd, SetArgs, SumfreeCmd};
use crate::table::{format_float, Cell, ResultTable};

/// What a command produced.
pub enum Output {
    Lines(Vec<String>),
    Table(ResultTable),
}

/// Powers of ten from `from` up to `limit`, then `limit` itself.
pub fn default_checkpoints(from: u64, limit: u64) -> Vec<u64> {
    let mut cps: Vec<u64> = std::iter::successors(Some(from), |&c| c.checked_mul(10))
        .take_while(|&c| c <= limit)
        .collect();
    if cps.last() != Some(&limit) {
        cps.push(limit);
    }
    cps
}

pub fn checkpoints_or_default(given: &[u64], from: u64, limit: u64) -> Result<Vec<u64>> {
    if given.is_empty() {
        return Ok(default_checkpoints(from, limit));
    }
    if !given.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Argument("checkpoints must be strictly increasing".into()));
    }
    if given.iter().any(|&c| c == 0 || c > limit) {
        return Err(Error::Argument(format!("checkpoints must lie in 1..={limit}")));
    }
    Ok(given.to_vec())
}

pub fn practical(cmd: &PracticalCmd, exec: Exec) -> Result<Output> {
    Ok(match *cmd {
        PracticalCmd::Check { n, oracle } => {
            if n == 0 {
                return Err(Error::Argument("n must be >= 1".into()));
            }
            let yes = if oracle { is_practical_oracle(n)? } else { is_practical_stewart(n) };
            Output::Lines(vec![format!("{n} {}", if yes { "practical" } else { "not practical" })])
        }
        PracticalCmd::Factor { n } => {
            let f = factor(n)?;
            let mut lines = vec![format!("{n} = {f}"), format!("sigma = {}", sigma(&f)?)];
            match divisors(&f) {
                Ok(d) => lines.push(format!(
                    "divisors = {}",
                    d.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
                )),
                Err(Error::Resource { requested, .. }) => {
                    lines.push(format!("divisors = {requested} (not listed)"))
                }
                Err(e) => return Err(e),
            }
            Output::Lines(lines)
        }
        PracticalCmd::List { limit } => {
            let t = practical_sieve_with(limit, exec)?;
            let mut table = ResultTable::new(&["n"]);
            for m in t.iter() {
                table.push(vec![m.into()]);
            }
            Output::Table(table)
        }
        PracticalCmd::Count { limit, ref checkpoints } => {
            let cps = checkpoints_or_default(checkpoints, 10, limit)?;
            let t = practical_sieve_with(limit + 2, exec)?;
            let mut table = ResultTable::new(&["x", "P", "P2"]);
            for &x in &cps {
                table.push(vec![x.into(), t.count_p(x)?.into(), t.count_p2(x)?.into()]);
            }
            Output::Table(table)
        }
        PracticalCmd::Goldbach { n } => {
            let (a, b) = goldbach_decompose(n)?;
            Output::Lines(vec![format!("{n} = {a} + {b}")])
        }
        PracticalCmd::Product { m, n } => {
            let ok = verify_product_corollary(m, n)?;
            Output::Lines(vec![format!(
                "{m} * {n} = {} {}",
                m * n,
                if ok { "practical" } else { "NOT practical" }
            )])
        }
        PracticalCmd::Tuples { ref offsets, limit } => {
            let reach = offsets.iter().copied().max().unwrap_or(0).max(0) as u64;
            let t = practical_sieve_with(limit + reach, exec)?;
            let mut table = ResultTable::new(&["m"]);
            for m in find_pattern_tuples(&t, offsets, limit)? {
                table.push(vec![m.into()]);
            }
            Output::Table(table)
        }
        PracticalCmd::Twin { m1, m2 } => {
            let (r, s) = twin_from_pair(m1, m2)?;
            Output::Lines(vec![format!("r = {r}, s = {s}: {} and {} are twin practicals", m1 * r, m2 * s)])
        }
        PracticalCmd::Lambda { limit, ref checkpoints } => {
            let cps = checkpoints_or_default(checkpoints, 10, limit)?;
            let t = practical_sieve_with(limit + 2, exec)?;
            Output::Table(lambda_table(&lambda_estimates(&t, &cps)?))
        }
        PracticalCmd::Erdos { x } => {
            let t = practical_sieve_with(x.checked_mul(2).ok_or(Error::Overflow("erdos"))?, exec)?;
            let ratio = erdos_ratio(&t, x)?;
            Output::Lines(vec![format!("P({}) / P({x}) = {}", 2 * x, format_float(ratio))])
        }
    })
}

pub fn lambda_table(s: &seqforge_core::practical::LambdaSeries) -> ResultTable {
    let mut table = ResultTable::new(&["x", "P", "lambda1", "P2", "lambda2"]);
    for (a, b) in s.p.rows().iter().zip(s.p2.rows()) {
        table.push(vec![a.x.into(), a.count.into(), a.ratio.into(), b.count.into(), b.ratio.into()]);
    }
    table
}

pub fn sumfree(cmd: &SumfreeCmd) -> Result<Output> {
    Ok(match cmd {
        SumfreeCmd::Check { terms } => Output::Lines(vec![match is_sumfree(terms)? {
            Verdict::SumFree => "sum-free".to_string(),
            Verdict::Violation(k) => format!("violation at index {k} ({})", terms[k]),
        }]),
        SumfreeCmd::Greedy { seed, limit } => {
            let p = greedy_extend(&SumFreePrefix::new(seed.clone())?, *limit)?;
            let mut table = ResultTable::new(&["k", "n_k"]);
            for (i, &t) in p.terms().iter().enumerate() {
                table.push(vec![(i + 1).into(), t.into()]);
            }
            Output::Table(table)
        }
        SumfreeCmd::Stats { terms } => {
            let p = SumFreePrefix::new(terms.clone())?;
            Output::Table(stats_table(&p, None))
        }
        SumfreeCmd::Sums { terms, bound } => {
            let mut table = ResultTable::new(&["sum"]);
            for v in reachable_sums(terms, *bound).iter() {
                table.push(vec![v.into()]);
            }
            Output::Table(table)
        }
    })
}

pub fn stats_table(p: &SumFreePrefix, context: Option<(&[u64], u64)>) -> ResultTable {
    let mut table = ResultTable::new(&[
        "seed", "limit", "length", "last", "reciprocal_sum", "error_bound", "below_4", "gap", "growth_exponent",
    ]);
    let r = reciprocal_sum(p);
    let (seed, limit) = match context {
        Some((seed, limit)) => (
            Cell::Text(seed.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")),
            Cell::from(limit),
        ),
        None => (Cell::Empty, Cell::Empty),
    };
    table.push(vec![
        seed,
        limit,
        p.len().into(),
        p.terms().last().copied().into(),
        r.value.into(),
        r.error_bound.into(),
        r.certainly_below(4).into(),
        gap_statistic(p).ok().into(),
        if p.len() >= MIN_GROWTH_TERMS { growth_exponent(p).ok().into() } else { Cell::Empty },
    ]);
    table
}

fn power_set(args: &SetArgs) -> Result<(PowerSet, Multiplicity)> {
    let mult = if args.dedup { Multiplicity::Distinct } else { Multiplicity::Multiset };
    Ok((PowerSet::parse(&args.set, args.s)?, mult))
}

pub fn powsum(cmd: &PowsumCmd) -> Result<Output> {
    Ok(match cmd {
        PowsumCmd::Terms { set, bound } => {
            let (ps, mult) = power_set(set)?;
            let mut table = ResultTable::new(&["term"]);
            for t in pow_terms_with(&ps, *bound, mult) {
                table.push(vec![t.into()]);
            }
            Output::Table(table)
        }
        PowsumCmd::Sigma { set, bound } => {
            let (ps, mult) = power_set(set)?;
            let mut table = ResultTable::new(&["sum"]);
            for v in sigma_set_with(&ps, *bound, mult).iter().skip(1) {
                table.push(vec![v.into()]);
            }
            Output::Table(table)
        }
        PowsumCmd::Window { set, bound } => {
            let (ps, mult) = power_set(set)?;
            let r = completeness_window_with(&ps, *bound, mult)?;
            let mut table = ResultTable::new(&["bound", "covered_from", "density", "missing_count"]);
            table.push(vec![r.bound.into(), r.covered_from.into(), r.density.into(), r.missing_count.into()]);
            Output::Table(table)
        }
        PowsumCmd::Counterexample { p, s, n } => {
            let ps = counterexample_set(*p, *s, *n)?;
            let b = ps.bases();
            let head: Vec<String> = b.iter().take(8).map(u64::to_string).collect();
            Output::Lines(vec![
                format!("|A| = {}, s = {}", b.len(), ps.min_exponent()),
                format!("A = {{{}{}}}", head.join(","), if b.len() > 8 { ",..." } else { "" }),
                format!("reciprocal_weight = {}", format_float(reciprocal_weight(b)?)),
            ])
        }
        PowsumCmd::Weights { set } => {
            let bases = seqforge_core::powersums::parse_base_set(set)?;
            let h = conjecture1_hypotheses(&bases)?;
            let mut table = ResultTable::new(&[
                "reciprocal_weight", "log_weight", "log_weight_exceeds_ln2", "pairwise_coprime", "gcd_all_one",
            ]);
            table.push(vec![
                reciprocal_weight(&bases)?.into(),
                h.log_weight.into(),
                h.log_weight_exceeds_ln2.into(),
                h.pairwise_coprime.into(),
                h.gcd_all_one.into(),
            ]);
            Output::Table(table)
        }
        PowsumCmd::Joint { set, s, count } => {
            let ps = PowerSet::parse(set, *s)?;
            Output::Table(joint_table(&ps, *count)?)
        }
    })
}

pub fn joint_table(ps: &PowerSet, count: usize) -> Result<ResultTable> {
    let j = joint_power_sequence(ps, count)?;
    let mut table = ResultTable::new(&["count", "n_count", "exponent", "first_terms"]);
    let head: Vec<String> = j.terms.iter().take(8).map(u64::to_string).collect();
    table.push(vec![
        count.into(),
        j.terms.last().copied().into(),
        j.exponent.into(),
        Cell::Text(head.join(" ")),
    ]);
    Ok(table)
}

fn klm_params(a: &KlmArgs) -> Result<KlmParams> {
    KlmParams::new(a.k, a.l, a.m)
}

pub fn klm(cmd: &KlmCmd, exec: Exec) -> Result<Output> {
    Ok(match cmd {
        KlmCmd::Check { n, params } => {
            let p = klm_params(params)?;
            let yes = is_klm(*n, p);
            Output::Lines(vec![format!("{n} {}{p}-number", if yes { "is a " } else { "is not a " })])
        }
        KlmCmd::List { params, limit } => {
            let mut table = ResultTable::new(&["n"]);
            for n in enumerate_klm_with(*limit, klm_params(params)?, exec)? {
                table.push(vec![n.into()]);
            }
            Output::Table(table)
        }
        KlmCmd::Count { params, limit, checkpoints } => {
            let cps = checkpoints_or_default(checkpoints, 10, *limit)?;
            let series = count_klm_with(&cps, klm_params(params)?, exec)?;
            let mut table = ResultTable::new(&["n", "count"]);
            for r in series.rows() {
                table.push(vec![r.n.into(), r.count.into()]);
            }
            Output::Table(table)
        }
        KlmCmd::Digits { n, m, base } => {
            let x = big_pow(*n, *m)?;
            Output::Lines(vec![format!("{n}^{m} = {x}"), format!("digit_sum_base{base} = {}", digit_sum(&x, *base)?)])
        }
        KlmCmd::Identity { nu, n } => {
            let ok = multiplier_identity_check(*nu, *n)?;
            Output::Lines(vec![format!("B({n} * (2^{nu} - 1)) = {nu}: {ok}")])
        }
        KlmCmd::Fit { limit, from } => Output::Table(alpha_table(*from, *limit, exec)?),
        KlmCmd::Gk { k, limit } => Output::Table(gk_table(*k, &default_checkpoints(1000, *limit), exec)?),
        KlmCmd::Monitor { params, limit, desk_floor, upper_constant } => {
            let series = count_klm_with(&default_checkpoints(10, *limit), klm_params(params)?, exec)?;
            let config = MonitorConfig { desk_floor: *desk_floor, upper_constant: *upper_constant };
            let mut table = ResultTable::new(&["n", "count", "flag"]);
            for f in bound_monitor(&series, &config)? {
                table.push(vec![f.n.into(), f.count.into(), Cell::Text(format!("{:?}", f.kind))]);
            }
            Output::Table(table)
        }
    })
}

pub fn alpha_table(from: u64, limit: u64, exec: Exec) -> Result<ResultTable> {
    let cps = default_checkpoints(from, limit);
    let series = count_klm_with(&cps, KlmParams::new(2, 1, 2)?, exec)?;
    let fit = conjecture3_fit(&series)?;
    let mut table = ResultTable::new(&["from", "to", "checkpoints", "count_at_to", "slope", "alpha", "deviation"]);
    table.push(vec![
        from.into(),
        limit.into(),
        cps.len().into(),
        series.rows().last().map(|r| r.count).into(),
        fit.slope.into(),
        fit.alpha.into(),
        (fit.slope - fit.alpha).into(),
    ]);
    Ok(table)
}

pub fn gk_table(k: u32, checkpoints: &[u64], exec: Exec) -> Result<ResultTable> {
    let params = KlmParams::new(2, k as u64, k)?;
    let series = count_klm_with(checkpoints, params, exec)?;
    let ratios = conjecture4_ratio(&series, k)?;
    let mut table = ResultTable::new(&["n", "count", "ratio", "g_k"]);
    for (r, (_, ratio)) in series.rows().iter().zip(ratios) {
        table.push(vec![r.n.into(), r.count.into(), ratio.into(), g_k(k).into()]);
    }
    Ok(table)
}

pub use digitpow::DEFAULT_SCAN_CAP;
