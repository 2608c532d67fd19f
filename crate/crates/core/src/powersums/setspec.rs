//! Textual base-set specifications.
//!
//! ```text
//! spec   := part ('+' part)*
//! part   := '{' int (',' int)* '}'
//!         | 'Rp(p=' int ',N=' int ')'
//! ```
//!
//! `Rp(p=P,N=K)` is the family `{P*n^2 : 1 <= n <= K}`. Whitespace is
//! ignored; the union of all parts is sorted and deduplicated.

use crate::numkernel::is_prime;
use crate::{Error, Result};

pub fn parse_base_set(spec: &str) -> Result<Vec<u64>> {
    let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::arg("empty set specification"));
    }
    let mut out = Vec::new();
    for part in split_top_level(&compact)? {
        if let Some(body) = part.strip_prefix('{').and_then(|p| p.strip_suffix('}')) {
            for item in body.split(',') {
                out.push(parse_int(item, part)?);
            }
        } else if let Some(body) = part.strip_prefix("Rp(").and_then(|p| p.strip_suffix(')')) {
            let (p, n) = parse_family(body, part)?;
            out.extend(square_family(p, n)?);
        } else {
            return Err(Error::arg(format!("unrecognised set part {part:?}")));
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '{' | '(' => depth += 1,
            '}' | ')' => depth -= 1,
            '+' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::arg(format!("unbalanced brackets in {s:?}")));
        }
    }
    if depth != 0 {
        return Err(Error::arg(format!("unbalanced brackets in {s:?}")));
    }
    parts.push(&s[start..]);
    Ok(parts)
}

fn parse_int(item: &str, ctx: &str) -> Result<u64> {
    item.parse::<u64>()
        .map_err(|_| Error::arg(format!("bad integer {item:?} in {ctx:?}")))
}

fn parse_family(body: &str, ctx: &str) -> Result<(u64, u64)> {
    let mut p = None;
    let mut n = None;
    for kv in body.split(',') {
        match kv.split_once('=') {
            Some(("p", v)) => p = Some(parse_int(v, ctx)?),
            Some(("N", v)) => n = Some(parse_int(v, ctx)?),
            _ => return Err(Error::arg(format!("expected p=..,N=.. in {ctx:?}"))),
        }
    }
    match (p, n) {
        (Some(p), Some(n)) => Ok((p, n)),
        _ => Err(Error::arg(format!("family {ctx:?} needs both p and N"))),
    }
}

/// `{p*n^2 : 1 <= n <= count}` for an odd prime `p`.
pub(crate) fn square_family(p: u64, count: u64) -> Result<Vec<u64>> {
    if p < 3 || !is_prime(p) {
        return Err(Error::arg(format!("{p} is not an odd prime")));
    }
    if count == 0 {
        return Err(Error::arg("family truncation N must be >= 1"));
    }
    (1..=count)
        .map(|n| {
            n.checked_mul(n)
                .and_then(|sq| sq.checked_mul(p))
                .ok_or(Error::Overflow("square family"))
        })
        .collect()
}
