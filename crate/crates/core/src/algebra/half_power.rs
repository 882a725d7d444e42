use std::fmt;

use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// The function `x -> poly(x) * (1 - x^2)^(half_power / 2)` on `[-1, 1]`.
///
/// No `(1 - x^2)` factor is ever moved between `poly` and `half_power`, so
/// two values compare equal only if they were built the same way.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HalfPowerFunction {
    pub poly: Polynomial,
    pub half_power: u32,
}

impl HalfPowerFunction {
    pub fn new(poly: Polynomial, half_power: u32) -> Self {
        Self { poly, half_power }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Floating-point value at `x`; the polynomial is evaluated by Horner and
    /// the half-power as `sqrt(1 - x^2)^s`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(-1.0..=1.0).contains(&x) {
            return Err(Error::Domain(x));
        }
        let root = (1.0 - x * x).sqrt();
        Ok(self.poly.eval_f64(x) * root.powi(self.half_power as i32))
    }
}

impl fmt::Display for HalfPowerFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.half_power {
            0 => write!(f, "{}", self.poly),
            s => write!(f, "({}) * (1 - x^2)^({s}/2)", self.poly),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation() {
        let f = HalfPowerFunction::new(Polynomial::one(), 2);
        assert_eq!(f.eval(0.0).unwrap(), 1.0);
        assert_eq!(f.eval(1.0).unwrap(), 0.0);
        assert_eq!(f.eval(-1.0).unwrap(), 0.0);
        let g = HalfPowerFunction::new(Polynomial::from_ints(&[0, 2]), 0);
        assert_eq!(g.eval(0.5).unwrap(), 1.0);
    }

    #[test]
    fn domain() {
        let f = HalfPowerFunction::new(Polynomial::one(), 1);
        assert_eq!(f.eval(1.5), Err(Error::Domain(1.5)));
        assert!(f.eval(f64::NAN).is_err());
    }
}
