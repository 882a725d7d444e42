use num_traits::{Signed, Zero};

use super::polynomial::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Sturm chain `p, p', -rem(p, p'), ...` ending at the last nonzero remainder.
pub fn sturm_sequence(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.clone()];
    if p.is_zero() {
        return chain;
    }
    let mut next = p.derivative();
    while !next.is_zero() {
        let (_, rem) = chain.last().unwrap().div_rem(&next);
        chain.push(next);
        next = -&rem;
    }
    chain
}

fn sign_changes(chain: &[Polynomial], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in chain {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let s = if v.is_positive() { 1 } else { -1 };
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Removes every factor `(x - r)` from `p`.
fn deflate(p: Polynomial, r: &Rational) -> Polynomial {
    let linear = Polynomial::new(vec![-r.clone(), Rational::from_integer(1.into())]);
    let mut p = p;
    while !p.is_zero() && p.eval(r).is_zero() {
        p = p.div_rem(&linear).0;
    }
    p
}

/// Number of distinct real roots of `p` strictly inside `(lo, hi)`.
///
/// The polynomial is made square-free and any root sitting exactly on an
/// endpoint is divided out before the Sturm chain is evaluated, so the count
/// is exact for every rational interval.
pub fn count_roots_in_open_interval(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    let g = p.gcd(&p.derivative());
    let square_free = p.div_rem(&g).0;
    let reduced = deflate(deflate(square_free, lo), hi);
    if reduced.degree() == Some(0) {
        return Ok(0);
    }
    let chain = sturm_sequence(&reduced);
    Ok(sign_changes(&chain, lo) - sign_changes(&chain, hi))
}
