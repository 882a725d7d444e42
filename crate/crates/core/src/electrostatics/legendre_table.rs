use crate::algebra::Polynomial;
use crate::classical::legendre_poly;
use crate::error::{Error, Result};
use crate::ladder::build;

use super::LMAX_CAP;

/// Where the Legendre factors come from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LegendreSource {
    /// `build(ell, ell)`: the ground function raised `ell` times.
    #[default]
    Ladder,
    /// The Rodrigues formula.
    Classical,
}

/// Exact Legendre polynomials `P_0 .. P_lmax` and their rounded coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct LegendreTable {
    source: LegendreSource,
    exact: Vec<Polynomial>,
    coeffs: Vec<Vec<f64>>,
}

impl LegendreTable {
    pub fn new(lmax: u32, source: LegendreSource) -> Result<Self> {
        if lmax > LMAX_CAP {
            return Err(Error::LmaxTooLarge(lmax));
        }
        let exact: Vec<Polynomial> = (0..=lmax)
            .map(|ell| match source {
                LegendreSource::Ladder => ladder_legendre(ell),
                LegendreSource::Classical => Ok(legendre_poly(ell)),
            })
            .collect::<Result<_>>()?;
        let coeffs = exact.iter().map(Polynomial::to_f64_coeffs).collect();
        Ok(Self { source, exact, coeffs })
    }

    pub fn source(&self) -> LegendreSource {
        self.source
    }

    pub fn lmax(&self) -> u32 {
        self.exact.len() as u32 - 1
    }

    pub fn exact(&self, ell: u32) -> &Polynomial {
        &self.exact[ell as usize]
    }

    /// `P_ell(x)` by Horner on the rounded coefficients.
    pub fn eval(&self, ell: u32, x: f64) -> f64 {
        self.coeffs[ell as usize]
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c)
    }

    /// `[P_0(x), ..., P_lmax(x)]`.
    pub fn eval_all(&self, lmax: u32, x: f64) -> Vec<f64> {
        (0..=lmax).map(|ell| self.eval(ell, x)).collect()
    }
}

fn ladder_legendre(ell: u32) -> Result<Polynomial> {
    let f = build(ell, i64::from(ell))?;
    f.normalized().map(|h| h.poly).ok_or_else(|| {
        Error::Geometry(format!(
            "normalization of the degree-{ell} ladder function is not a rational square"
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_and_classical_tables_agree_exactly() {
        let a = LegendreTable::new(12, LegendreSource::Ladder).unwrap();
        let b = LegendreTable::new(12, LegendreSource::Classical).unwrap();
        for ell in 0..=12 {
            assert_eq!(a.exact(ell), b.exact(ell));
            assert_eq!(a.eval(ell, 0.37).to_bits(), b.eval(ell, 0.37).to_bits());
        }
    }

    #[test]
    fn endpoint_values() {
        let t = LegendreTable::new(10, LegendreSource::Ladder).unwrap();
        for ell in 0..=10 {
            assert!((t.eval(ell, 1.0) - 1.0).abs() < 1e-12);
            let sign = if ell % 2 == 0 { 1.0 } else { -1.0 };
            assert!((t.eval(ell, -1.0) - sign).abs() < 1e-12);
        }
    }

    #[test]
    fn cap() {
        assert_eq!(
            LegendreTable::new(41, LegendreSource::Classical),
            Err(Error::LmaxTooLarge(41))
        );
    }
}
