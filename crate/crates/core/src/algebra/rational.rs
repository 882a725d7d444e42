use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational. Always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat_int<T: Into<BigInt>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

/// `num / den`, reduced.
///
/// Panics if `den` is zero.
pub fn rat<T: Into<BigInt>>(num: T, den: T) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

// Ratio arithmetic always reduces through a gcd, which is slow for large
// integers even when one side is 1. Integer operands skip the reduction.

pub(crate) fn add(a: &Rational, b: &Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        Rational::from_integer(a.numer() + b.numer())
    } else {
        a + b
    }
}

pub(crate) fn sub(a: &Rational, b: &Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        Rational::from_integer(a.numer() - b.numer())
    } else {
        a - b
    }
}

pub(crate) fn mul(a: &Rational, b: &Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        Rational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

/// Exact square root of a non-negative rational, if it is the square of a rational.
pub fn exact_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Rational::zero());
    }
    let num = integer_sqrt(q.numer())?;
    let den = integer_sqrt(q.denom())?;
    Some(Rational::new(num, den))
}

fn integer_sqrt(n: &BigInt) -> Option<BigInt> {
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

/// Nearest `f64`. Values beyond the `f64` range saturate to infinity.
pub fn to_f64(q: &Rational) -> f64 {
    if let Some(v) = q.to_f64() {
        return v;
    }
    match q.numer().sign() {
        Sign::Minus => f64::NEG_INFINITY,
        _ => f64::INFINITY,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
    }

    #[test]
    fn perfect_squares() {
        assert_eq!(exact_sqrt(&rat(36, 1)), Some(rat_int(6)));
        assert_eq!(exact_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(exact_sqrt(&rat(2, 1)), None);
        assert_eq!(exact_sqrt(&rat(1, 8)), None);
        assert_eq!(exact_sqrt(&rat(-4, 1)), None);
        assert_eq!(exact_sqrt(&Rational::zero()), Some(Rational::zero()));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }

    #[test]
    fn float_conversion() {
        assert_eq!(to_f64(&rat(1, 4)), 0.25);
        let huge = Rational::from_integer(BigInt::from(10).pow(400));
        assert_eq!(to_f64(&huge), f64::INFINITY);
    }
}
