//! Classical reference functions. Nothing here touches the ladder
//! construction; these are the oracles it is checked against.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use crate::algebra::{factorial, HalfPowerFunction, Polynomial, Rational};
use crate::error::{Error, Result};

/// `P(ell, m)` in half-power form, Condon-Shortley phase included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalAlf {
    pub ell: u32,
    pub m: u32,
    /// Polynomial factor times `(1 - x^2)^(m/2)`.
    pub form: HalfPowerFunction,
}

/// Rodrigues formula:
/// `P(ell, m) = (-1)^m (1 - x^2)^(m/2) d^(ell+m)/dx^(ell+m) (x^2 - 1)^ell / (2^ell ell!)`.
pub fn rodrigues_alf(ell: u32, m: u32) -> Result<ClassicalAlf> {
    if m > ell {
        return Err(Error::OrderOutOfRange { ell, m });
    }
    // (x^2 - 1)^ell = sum_k C(ell, k) (-1)^(ell - k) x^(2k)
    let mut coeffs = vec![Rational::from_integer(BigInt::from(0)); 2 * ell as usize + 1];
    for k in 0..=ell {
        let c = binomial(BigInt::from(ell), BigInt::from(k));
        let c = if (ell - k).is_multiple_of(2) { c } else { -c };
        coeffs[2 * k as usize] = Rational::from_integer(c);
    }
    let mut poly = Polynomial::new(coeffs);
    for _ in 0..ell + m {
        poly = poly.derivative();
    }
    let sign = if m.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let scale = Rational::new(sign, factorial(ell) << ell as usize);
    Ok(ClassicalAlf {
        ell,
        m,
        form: HalfPowerFunction::new(poly.scale(&scale), m),
    })
}

/// Legendre polynomial `P(ell) = P(ell, 0)`.
pub fn legendre_poly(ell: u32) -> Polynomial {
    rodrigues_alf(ell, 0).expect("m = 0 is always in range").form.poly
}

/// `P(ell, m)(x)` in floating point, Condon-Shortley phase included.
///
/// Climbs the diagonal `P(m, m)` first and then steps upward in degree with
/// the three-term recurrence.
pub fn alf_float(ell: u32, m: u32, x: f64) -> Result<f64> {
    if m > ell {
        return Err(Error::OrderOutOfRange { ell, m });
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(x));
    }
    let somx2 = ((1.0 - x) * (1.0 + x)).sqrt();
    let mut pmm = 1.0;
    let mut odd = 1.0;
    for _ in 0..m {
        pmm *= -odd * somx2;
        odd += 2.0;
    }
    if ell == m {
        return Ok(pmm);
    }
    let mf = f64::from(m);
    let mut prev = pmm;
    let mut cur = x * (2.0 * mf + 1.0) * pmm;
    for l in m + 2..=ell {
        let lf = f64::from(l);
        let next = (x * (2.0 * lf - 1.0) * cur - (lf + mf - 1.0) * prev) / (lf - mf);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Normalized harmonic-oscillator eigenfunction `psi_n(u)` in the
/// dimensionless coordinate `u = x sqrt(m omega / hbar)`.
pub fn oscillator_wavefunction(n: u32, u: f64) -> f64 {
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25) * (-0.5 * u * u).exp();
    for k in 1..=n {
        let kf = f64::from(k);
        let next = (2.0 / kf).sqrt() * u * cur - ((kf - 1.0) / kf).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};

    #[test]
    fn rodrigues_examples() {
        assert_eq!(rodrigues_alf(0, 0).unwrap().form.poly, Polynomial::one());
        assert_eq!(
            rodrigues_alf(2, 0).unwrap().form.poly,
            Polynomial::new(vec![rat(-1, 2), rat_int(0), rat(3, 2)])
        );
        let p21 = rodrigues_alf(2, 1).unwrap().form;
        assert_eq!(p21.poly, Polynomial::from_ints(&[0, -3]));
        assert_eq!(p21.half_power, 1);
        assert_eq!(
            rodrigues_alf(1, 2),
            Err(Error::OrderOutOfRange { ell: 1, m: 2 })
        );
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_poly(0), Polynomial::one());
        assert_eq!(legendre_poly(1), Polynomial::x());
        assert_eq!(
            legendre_poly(3),
            Polynomial::new(vec![rat_int(0), rat(-3, 2), rat_int(0), rat(5, 2)])
        );
    }

    #[test]
    fn float_examples() {
        assert_eq!(alf_float(2, 0, 1.0).unwrap(), 1.0);
        assert_eq!(alf_float(2, 1, 0.0).unwrap(), 0.0);
        let exact = rodrigues_alf(5, 3).unwrap().form.eval(0.3).unwrap();
        let approx = alf_float(5, 3, 0.3).unwrap();
        assert!(((approx - exact) / exact).abs() < 1e-12);
        assert!(alf_float(2, 3, 0.1).is_err());
        assert!(alf_float(2, 1, -1.01).is_err());
    }

    #[test]
    fn oscillator_examples() {
        for &u in &[-6.0, -1.0, 0.0, 0.5, 3.0] {
            assert!(oscillator_wavefunction(0, u) > 0.0);
        }
        assert_eq!(oscillator_wavefunction(1, 0.0), 0.0);
        assert!(oscillator_wavefunction(1, 0.1) > 0.0);
        assert!(oscillator_wavefunction(1, -0.1) < 0.0);
    }
}
