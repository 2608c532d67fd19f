//! Checkpointed counting series and log-log fits.

use crate::{Error, Result};

/// One checkpoint: `count` values up to `x`, and a derived ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CountingRow {
    pub x: u64,
    pub count: u64,
    pub ratio: f64,
}

/// Rows with strictly increasing `x` and non-decreasing `count`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CountingSeries {
    rows: Vec<CountingRow>,
}

impl CountingSeries {
    pub fn new(rows: Vec<CountingRow>) -> Result<Self> {
        for w in rows.windows(2) {
            if w[0].x >= w[1].x {
                return Err(Error::arg("checkpoints must be strictly increasing"));
            }
            if w[0].count > w[1].count {
                return Err(Error::arg("counts must be non-decreasing"));
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[CountingRow] {
        &self.rows
    }

    pub fn last(&self) -> Option<&CountingRow> {
        self.rows.last()
    }

    pub fn at(&self, x: u64) -> Option<&CountingRow> {
        self.rows.iter().find(|r| r.x == x)
    }
}

/// Ordinary least-squares slope of `ys` against `xs`.
pub fn ols_slope(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::arg("least squares needs at least two paired points"));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::arg("degenerate abscissae"));
    }
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    Ok(sxy / sxx)
}

/// Slope of `ln y` against `ln x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> Result<f64> {
    if points.iter().any(|&(x, y)| x <= 0.0 || y <= 0.0) {
        return Err(Error::arg("log-log fit needs positive coordinates"));
    }
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    ols_slope(&xs, &ys)
}

/// `10^a, 10^(a+1), ..., 10^b`.
pub fn decades(from_exp: u32, to_exp: u32) -> Vec<u64> {
    (from_exp..=to_exp).map(|e| 10u64.pow(e)).collect()
}
