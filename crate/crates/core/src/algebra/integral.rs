use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::half_power::HalfPowerFunction;
use super::rational::{rat, Rational};
use crate::error::{Error, Result};

/// `M(a, s) = integral over [-1, 1] of x^(2a) (1 - x^2)^s dx`, exactly.
///
/// Uses `M(a, 0) = 2/(2a+1)` and `M(a, s) = 2s/(2a+2s+1) * M(a, s-1)`.
pub fn moment_integral(a: u32, s: u32) -> Rational {
    let a = u64::from(a);
    (1..=u64::from(s)).fold(rat(2, 2 * a + 1), |m, k| m * rat(2 * k, 2 * a + 2 * k + 1))
}

/// `[M(0, s), M(1, s), ..., M(amax, s)]`, stepping in `a` with
/// `M(a+1, s) = (2a+1)/(2a+2s+3) * M(a, s)`.
pub fn moments(amax: u32, s: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(amax as usize + 1);
    let mut m = moment_integral(0, s);
    let s = u64::from(s);
    for a in 0..=u64::from(amax) {
        out.push(m.clone());
        m *= rat(2 * a + 1, 2 * a + 2 * s + 3);
    }
    out
}

/// Exact `integral over [-1, 1] of f(x) g(x) dx`.
///
/// The combined half-power must be even so that the integrand is a polynomial
/// times an integer power of `1 - x^2`.
pub fn hp_inner_product(f: &HalfPowerFunction, g: &HalfPowerFunction) -> Result<Rational> {
    let total = f.half_power + g.half_power;
    if !total.is_multiple_of(2) {
        return Err(Error::OddHalfPower(total));
    }
    let product = &f.poly * &g.poly;
    let Some(deg) = product.degree() else {
        return Ok(Rational::zero());
    };
    Ok(even_moment_sum(
        product.coeffs().iter().step_by(2),
        deg as u32 / 2,
        total / 2,
    ))
}

/// `sum_a c_a M(a, s)` for `a = 0..=amax`.
///
/// Writing `M(a, s) = M(0, s) N_a / D` with
/// `N_a = prod_{j<a} (2j+1) * prod_{a<=j<amax} (2j+2s+3)` and
/// `D = prod_{j<amax} (2j+2s+3)` keeps the whole sum in integers; only the
/// final value is reduced.
fn even_moment_sum<'a>(coeffs: impl Iterator<Item = &'a Rational>, amax: u32, s: u32) -> Rational {
    let coeffs: Vec<&Rational> = coeffs.collect();
    let common_den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let (amax, s) = (u64::from(amax), u64::from(s));
    let mut suffix = vec![BigInt::one(); amax as usize + 1];
    for a in (0..amax).rev() {
        suffix[a as usize] = &suffix[a as usize + 1] * (2 * a + 2 * s + 3);
    }
    let mut prefix = BigInt::one();
    let mut total = BigInt::zero();
    for (a, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            let scaled = c.numer() * (&common_den / c.denom());
            total += scaled * &prefix * &suffix[a];
        }
        prefix *= 2 * a as u64 + 1;
    }
    moment_integral(0, s as u32) * Rational::new(total, common_den * &suffix[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::polynomial::Polynomial;
    use crate::algebra::rational::rat_int;

    #[test]
    fn moment_examples() {
        assert_eq!(moment_integral(0, 0), rat_int(2));
        assert_eq!(moment_integral(1, 0), rat(2, 3));
        assert_eq!(moment_integral(1, 1), rat(4, 15));
    }

    #[test]
    fn table_agrees_with_direct() {
        for s in 0..8 {
            let table = moments(10, s);
            for (a, m) in table.iter().enumerate() {
                assert_eq!(*m, moment_integral(a as u32, s), "a = {a}, s = {s}");
            }
        }
    }

    #[test]
    fn inner_product_examples() {
        let one = HalfPowerFunction::new(Polynomial::one(), 0);
        assert_eq!(hp_inner_product(&one, &one).unwrap(), rat_int(2));
        let x = HalfPowerFunction::new(Polynomial::x(), 0);
        assert_eq!(hp_inner_product(&x, &x).unwrap(), rat(2, 3));
        let p2 = HalfPowerFunction::new(
            Polynomial::new(vec![rat(-1, 2), rat_int(0), rat(3, 2)]),
            0,
        );
        assert_eq!(hp_inner_product(&p2, &p2).unwrap(), rat(2, 5));
    }

    #[test]
    fn odd_total_half_power_rejected() {
        let f = HalfPowerFunction::new(Polynomial::one(), 1);
        let g = HalfPowerFunction::new(Polynomial::one(), 0);
        assert_eq!(hp_inner_product(&f, &g), Err(Error::OddHalfPower(1)));
    }

    #[test]
    fn common_denominator_sum_matches_direct_sum() {
        let coeffs = [rat(1, 3), rat_int(0), rat(-7, 2), rat(5, 11)];
        for s in 0..6 {
            let direct: Rational = coeffs
                .iter()
                .enumerate()
                .map(|(a, c)| c * moment_integral(a as u32, s))
                .sum();
            assert_eq!(even_moment_sum(coeffs.iter(), 3, s), direct);
        }
    }

    #[test]
    fn zero_function_integrates_to_zero() {
        let f = HalfPowerFunction::new(Polynomial::zero(), 2);
        let g = HalfPowerFunction::new(Polynomial::one(), 0);
        assert_eq!(hp_inner_product(&f, &g).unwrap(), Rational::zero());
    }
}
