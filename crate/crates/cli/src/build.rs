//! Rendering of a single ladder-built function.

use std::fmt::Write as _;

use legendre_ladder::algebra::Polynomial;
use legendre_ladder::{build, LadderAlf};
use serde::Serialize;

use crate::CliError;

/// A ladder-built function in serializable form. Rationals are rendered as
/// `"p/q"` strings and coefficients are listed from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuildOutput {
    pub ell: u32,
    pub n_x: u32,
    pub order: u32,
    pub poly: String,
    pub coefficients: Vec<String>,
    pub half_power: u32,
    pub c_squared: String,
    pub constants: Vec<String>,
    pub normalized: Option<String>,
    pub normalized_coefficients: Option<Vec<String>>,
}

fn coefficient_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

impl BuildOutput {
    pub fn new(f: &LadderAlf) -> Self {
        let normalized = f.normalized();
        Self {
            ell: f.ell(),
            n_x: f.nodes(),
            order: f.order(),
            poly: f.g().poly.to_string(),
            coefficients: coefficient_strings(&f.g().poly),
            half_power: f.g().half_power,
            c_squared: f.c_squared().to_string(),
            constants: f.constants().iter().map(ToString::to_string).collect(),
            normalized: normalized.as_ref().map(|n| n.poly.to_string()),
            normalized_coefficients: normalized.as_ref().map(|n| coefficient_strings(&n.poly)),
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "ell: {}", self.ell);
        let _ = writeln!(out, "n_x: {}", self.n_x);
        let _ = writeln!(out, "m: {}", self.order);
        let _ = writeln!(out, "poly: {}", self.poly);
        let _ = writeln!(out, "half_power: {}", self.half_power);
        let _ = writeln!(out, "c_squared: {}", self.c_squared);
        let _ = writeln!(out, "constants: {}", self.constants.join(", "));
        match &self.normalized {
            Some(n) => {
                let _ = writeln!(out, "normalized: {n}");
            }
            None => {
                let _ = writeln!(out, "normalized: (c_squared is not a perfect square)");
            }
        }
        out
    }
}

pub fn run(ell: u32, n_x: i64) -> Result<BuildOutput, CliError> {
    Ok(BuildOutput::new(&build(ell, n_x)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dipole_member() {
        let out = run(1, 0).unwrap();
        assert_eq!(out.poly, "1");
        assert_eq!(out.half_power, 1);
        assert_eq!(out.c_squared, "1");
        assert_eq!(out.normalized.as_deref(), Some("1"));
    }

    #[test]
    fn top_member_normalizes_to_legendre() {
        let out = run(2, 2).unwrap();
        assert_eq!(out.half_power, 0);
        assert_eq!(out.normalized.as_deref(), Some("3/2x^2 - 1/2"));
        assert_eq!(
            out.normalized_coefficients.clone().unwrap(),
            vec!["-1/2".to_string(), "0".into(), "3/2".into()]
        );
        assert!(out.text().contains("normalized: 3/2x^2 - 1/2\n"));
    }

    #[test]
    fn bad_indices() {
        let err = run(1, 2).unwrap_err();
        assert!(err.to_string().contains("n_x exceeds ell"));
        assert!(run(1, -1).is_err());
    }
}
