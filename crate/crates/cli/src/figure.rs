//! Plot data for the node-pattern figure: oscillator eigenfunctions and the
//! unit-norm associated Legendre functions of each degree.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use legendre_ladder::{modified, oscillator_wavefunction};

use crate::number::sci;

pub const DEFAULT_SAMPLES: usize = 201;
/// Number of oscillator eigenfunctions in the oscillator panel.
pub const OSCILLATOR_STATES: u32 = 5;
/// Largest degree offered as a panel.
pub const MAX_MODE: u32 = 4;
/// Half-width of the dimensionless oscillator abscissa.
pub const OSCILLATOR_HALF_WIDTH: f64 = 5.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Panel {
    Oscillator,
    /// All unit-norm functions of one degree, orders `ell` down to 0.
    Mode(u32),
}

impl FromStr for Panel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "oscillator" {
            return Ok(Panel::Oscillator);
        }
        s.strip_prefix("mode-")
            .and_then(|d| d.parse::<u32>().ok())
            .filter(|&ell| ell <= MAX_MODE)
            .map(Panel::Mode)
            .ok_or_else(|| format!("unknown panel `{s}`; expected oscillator or mode-0 through mode-{MAX_MODE}"))
    }
}

impl fmt::Display for Panel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Panel::Oscillator => f.write_str("oscillator"),
            Panel::Mode(ell) => write!(f, "mode-{ell}"),
        }
    }
}

/// `n` equally spaced points from `lo` to `hi`, both included.
fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let last = (n - 1) as f64;
    (0..n)
        .map(|k| {
            if k + 1 == n {
                hi
            } else {
                lo + (hi - lo) * (k as f64 / last)
            }
        })
        .collect()
}

/// Column-major plot data: abscissa plus one column per function.
#[derive(Clone, Debug, PartialEq)]
pub struct FigureData {
    pub header: Vec<String>,
    pub abscissa: Vec<f64>,
    pub columns: Vec<Vec<f64>>,
}

impl FigureData {
    pub fn new(panel: Panel, samples: usize) -> Result<Self, String> {
        if samples < 2 {
            return Err(format!("at least 2 samples are required, got {samples}"));
        }
        match panel {
            Panel::Oscillator => {
                let xs = grid(-OSCILLATOR_HALF_WIDTH, OSCILLATOR_HALF_WIDTH, samples);
                let columns = (0..OSCILLATOR_STATES)
                    .map(|n| xs.iter().map(|&u| oscillator_wavefunction(n, u)).collect())
                    .collect();
                let mut header = vec!["u".to_string()];
                header.extend((0..OSCILLATOR_STATES).map(|n| format!("psi_{n}")));
                Ok(Self { header, abscissa: xs, columns })
            }
            Panel::Mode(ell) => {
                let xs = grid(-1.0, 1.0, samples);
                let mut header = vec!["x".to_string()];
                let mut columns = Vec::new();
                for m in (0..=ell).rev() {
                    let f = modified(ell, m).map_err(|e| e.to_string())?;
                    let col = xs
                        .iter()
                        .map(|&x| f.eval(x).map_err(|e| e.to_string()))
                        .collect::<Result<Vec<_>, _>>()?;
                    header.push(format!("F_{ell}^{m}"));
                    columns.push(col);
                }
                Ok(Self { header, abscissa: xs, columns })
            }
        }
    }

    pub fn csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for (i, x) in self.abscissa.iter().enumerate() {
            out.push_str(&sci(*x));
            for col in &self.columns {
                let _ = write!(out, ",{}", sci(col[i]));
            }
            out.push('\n');
        }
        out
    }
}

/// Sign changes along a sampled curve, skipping exact zeros.
pub fn sign_changes(values: &[f64]) -> usize {
    let mut count = 0;
    let mut prev: Option<bool> = None;
    for &v in values.iter().filter(|v| **v != 0.0) {
        let positive = v > 0.0;
        if prev.is_some_and(|p| p != positive) {
            count += 1;
        }
        prev = Some(positive);
    }
    count
}
