//! Ladder construction of the associated Legendre functions.
//!
//! Functions are labelled by the degree `ell` and the node count `n_x`,
//! related to the classical order by `m = ell - n_x`. The nodeless member of
//! each family is written down in closed form ([`ground`]); every other member
//! comes from repeated application of the raising operators
//!
//! ```text
//! A+(ell, n) = -sqrt(1 - x^2) d/dx + (ell + 1 - n) x / sqrt(1 - x^2)
//! ```
//!
//! each followed by division by the square root of a normalization constant.
//! Both operators map the half-power family `p(x) (1 - x^2)^(s/2)` into
//! itself, so the whole construction stays in exact rational arithmetic: the
//! square roots are carried as a squared accumulator.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::algebra::{
    count_roots_in_open_interval, exact_sqrt, factorial, hp_inner_product, rat_int, to_f64,
    HalfPowerFunction, Polynomial, Rational,
};
use crate::classical::rodrigues_alf;
use crate::error::{Error, Result};

/// One member of an `ell` family in unnormalized form: the represented
/// function is `g / sqrt(c_squared)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderAlf {
    ell: u32,
    nodes: u32,
    g: HalfPowerFunction,
    c_squared: Rational,
    constants: Vec<Rational>,
}

impl LadderAlf {
    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// Node count `n_x`.
    pub fn nodes(&self) -> u32 {
        self.nodes
    }

    /// Classical order `m = ell - n_x`, which is also the half-power of `g`.
    pub fn order(&self) -> u32 {
        self.ell - self.nodes
    }

    pub fn g(&self) -> &HalfPowerFunction {
        &self.g
    }

    /// Product of the normalization constants of every raising step so far
    /// (one for a ground function).
    pub fn c_squared(&self) -> &Rational {
        &self.c_squared
    }

    /// The per-step constants `C(ell, 1), ..., C(ell, n_x)`.
    pub fn constants(&self) -> &[Rational] {
        &self.constants
    }

    /// `g / sqrt(c_squared)` with exact coefficients, available whenever
    /// `c_squared` is the square of a rational.
    pub fn normalized(&self) -> Option<HalfPowerFunction> {
        let root = exact_sqrt(&self.c_squared)?;
        Some(HalfPowerFunction::new(
            self.g.poly.scale(&root.recip()),
            self.g.half_power,
        ))
    }

    /// Floating-point value of the represented function.
    pub fn eval(&self, x: f64) -> Result<f64> {
        match self.normalized() {
            Some(f) => f.eval(x),
            None => Ok(self.g.eval(x)? / to_f64(&self.c_squared).sqrt()),
        }
    }
}

/// The operator `A+(ell, step)`; valid for `1 <= step <= ell`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RaisingOperator {
    ell: u32,
    step: u32,
}

impl RaisingOperator {
    pub fn new(ell: u32, step: u32) -> Result<Self> {
        if step == 0 || step > ell {
            return Err(Error::StepOutOfRange { ell, step });
        }
        Ok(Self { ell, step })
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn step(&self) -> u32 {
        self.step
    }

    /// Coefficient of the `x / sqrt(1 - x^2)` term, `ell + 1 - step >= 1`.
    pub fn coefficient(&self) -> u32 {
        self.ell + 1 - self.step
    }

    /// Acts on `(p, s)` as `(-(1 - x^2) p' + (s + c) x p, s - 1)`.
    pub fn apply(&self, f: &HalfPowerFunction) -> Result<HalfPowerFunction> {
        let s = f.half_power.checked_sub(1).ok_or(Error::ZeroHalfPower)?;
        let p = &f.poly;
        let weight = rat_int(f.half_power + self.coefficient());
        let poly = &p.shift_up().scale(&weight) - &(&Polynomial::one_minus_x2() * &p.derivative());
        Ok(HalfPowerFunction::new(poly, s))
    }
}

/// The nodeless function of degree `ell`: `(2 ell)! / (2^ell ell!) (1 - x^2)^(ell/2)`.
pub fn ground(ell: u32) -> LadderAlf {
    let coefficient = factorial(2 * ell) / (factorial(ell) << ell as usize);
    LadderAlf {
        ell,
        nodes: 0,
        g: HalfPowerFunction::new(Polynomial::constant(Rational::from_integer(coefficient)), ell),
        c_squared: Rational::one(),
        constants: Vec::new(),
    }
}

/// Applies the annihilation operator `sqrt(1 - x^2) d/dx + ell x / sqrt(1 - x^2)`,
/// acting on `(p, s)` as `((1 - x^2) p' + (ell - s) x p, s - 1)`.
///
/// A half-power of zero is only accepted when the image is the zero function
/// (the constant ground function of degree zero); anything else would leave
/// the half-power family.
pub fn apply_lowering_ground(ell: u32, f: &HalfPowerFunction) -> Result<HalfPowerFunction> {
    let p = &f.poly;
    let weight = rat_int(i64::from(ell) - i64::from(f.half_power));
    let poly = &(&Polynomial::one_minus_x2() * &p.derivative()) + &p.shift_up().scale(&weight);
    match f.half_power.checked_sub(1) {
        Some(s) => Ok(HalfPowerFunction::new(poly, s)),
        None if poly.is_zero() => Ok(HalfPowerFunction::new(poly, 0)),
        None => Err(Error::ZeroHalfPower),
    }
}

/// Normalization constant of raising step `n`:
///
/// ```text
/// C(ell, n) = (2 ell + 1) n! / (2 (2 ell - n)!) * integral [A+(ell, n) P(ell, n - 1)]^2 dx
/// ```
///
/// `prev` must be the function with `n - 1` nodes. Its normalization enters as
/// a division by `prev.c_squared`.
pub fn norm_constant(ell: u32, n: u32, prev: &LadderAlf) -> Result<Rational> {
    let op = RaisingOperator::new(ell, n)?;
    if prev.ell != ell || prev.nodes + 1 != n {
        return Err(Error::StepOutOfRange { ell, step: n });
    }
    let raised = op.apply(&prev.g)?;
    let integral = hp_inner_product(&raised, &raised)?;
    Ok(norm_prefactor(ell, n) * integral / &prev.c_squared)
}

fn norm_prefactor(ell: u32, n: u32) -> Rational {
    Rational::new(
        BigInt::from(2 * ell + 1) * factorial(n),
        BigInt::from(2) * factorial(2 * ell - n),
    )
}

/// Builds the `n_x`-node function of degree `ell` from the ground function by
/// `n_x` successive raising steps. `n_x = 0` is the ground function itself.
pub fn build(ell: u32, nodes: i64) -> Result<LadderAlf> {
    if nodes < 0 {
        return Err(Error::NegativeNodes(nodes));
    }
    if nodes > i64::from(ell) {
        return Err(Error::NodesExceedEll { ell, nodes });
    }
    let mut f = ground(ell);
    for n in 1..=nodes as u32 {
        let c = norm_constant(ell, n, &f)?;
        let g = RaisingOperator::new(ell, n)?.apply(&f.g)?;
        f.c_squared *= &c;
        f.constants.push(c);
        f.g = g;
        f.nodes = n;
    }
    Ok(f)
}

/// Zeros of the represented function strictly inside `(-1, 1)`; the
/// half-power factor is positive there, so only the polynomial counts.
pub fn node_count(f: &LadderAlf) -> usize {
    count_roots_in_open_interval(&f.g.poly, &-Rational::one(), &Rational::one())
        .expect("ladder functions are never identically zero")
}

/// Reduced residual of the associated Legendre equation for `p (1 - x^2)^(m/2)`:
///
/// ```text
/// (1 - x^2) p'' - 2 (m + 1) x p' + [ell (ell + 1) - m (m + 1)] p
/// ```
///
/// with `m` the half-power. Zero iff the function solves the equation.
pub fn ode_residual_of(ell: u32, f: &HalfPowerFunction) -> Polynomial {
    let p = &f.poly;
    let m = i64::from(f.half_power);
    let ell = i64::from(ell);
    let dp = p.derivative();
    let d2p = dp.derivative();
    let terms = [
        &Polynomial::one_minus_x2() * &d2p,
        dp.shift_up().scale(&rat_int(-2 * (m + 1))),
        p.scale(&rat_int(ell * (ell + 1) - m * (m + 1))),
    ];
    terms.iter().fold(Polynomial::zero(), |acc, t| &acc + t)
}

pub fn ode_residual(f: &LadderAlf) -> Polynomial {
    ode_residual_of(f.ell, &f.g)
}

/// Left-hand side of the associated Legendre equation
///
/// ```text
/// -d/dx[(1 - x^2) y'] - [ell (ell + 1) - m^2 / (1 - x^2)] y
/// ```
///
/// at an interior point, for `y = f` rescaled to unit L2 norm on `[-1, 1]`.
///
/// Derivatives come from the unreduced product rule: with `w = 1 - x^2`,
/// `w y' = w^(m/2) q` where `q = w p' - m x p`, and
/// `d/dx[w y'] = w^(m/2 - 1) (w q' - m x q)`. Polynomial factors are evaluated
/// exactly at `x`, everything else in floating point.
pub fn ode_residual_at(ell: u32, f: &HalfPowerFunction, x: &Rational) -> Result<f64> {
    let xf = to_f64(x);
    if x.abs() >= Rational::one() {
        return Err(Error::Domain(xf));
    }
    let m = f.half_power;
    let norm_sq = hp_inner_product(f, f)?;
    let p = &f.poly;
    let w_poly = Polynomial::one_minus_x2();
    let m_rat = rat_int(m);
    let q = &(&w_poly * &p.derivative()) - &p.shift_up().scale(&m_rat);
    let flux_poly = &(&w_poly * &q.derivative()) - &q.shift_up().scale(&m_rat);

    let scale = to_f64(&norm_sq).sqrt();
    let w = to_f64(&w_poly.eval(x));
    let half = w.sqrt().powi(m as i32);
    let y = to_f64(&p.eval(x)) * half / scale;
    let flux_derivative = to_f64(&flux_poly.eval(x)) * half / w / scale;
    let ell = f64::from(ell);
    let m = f64::from(m);
    Ok(-flux_derivative - (ell * (ell + 1.0) - m * m / w) * y)
}

/// `F(ell, m) = sqrt((2 ell + 1)(ell - m)! / (2 (ell + m)!)) P(ell, m)`, the
/// unit-norm rescaling of the classical function, stored as `g / sqrt(c_squared)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModifiedAlf {
    pub ell: u32,
    pub m: u32,
    pub g: HalfPowerFunction,
    pub c_squared: Rational,
}

impl ModifiedAlf {
    pub fn eval(&self, x: f64) -> Result<f64> {
        Ok(self.g.eval(x)? / to_f64(&self.c_squared).sqrt())
    }
}

pub fn modified(ell: u32, m: u32) -> Result<ModifiedAlf> {
    let classical = rodrigues_alf(ell, m)?;
    let c_squared = Rational::new(
        BigInt::from(2) * factorial(ell + m),
        BigInt::from(2 * ell + 1) * factorial(ell - m),
    );
    Ok(ModifiedAlf {
        ell,
        m,
        g: classical.form,
        c_squared,
    })
}

/// Relation between a ladder-built function and the classical function of
/// the same degree and order `ell - n_x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalRelation {
    /// `g.poly = ratio * classical.poly`.
    pub ratio: Rational,
    pub c_squared: Rational,
    /// Sign of the overall factor between the two represented functions.
    pub sign: i8,
}

impl ClassicalRelation {
    /// Square of the overall factor `ratio / sqrt(c_squared)`; one when the
    /// ladder function equals the classical one up to sign.
    pub fn factor_squared(&self) -> Rational {
        &self.ratio * &self.ratio / &self.c_squared
    }
}

pub fn compare_with_classical(ell: u32, nodes: u32) -> Result<ClassicalRelation> {
    let f = build(ell, i64::from(nodes))?;
    let classical = rodrigues_alf(ell, ell - nodes)?;
    if f.g.half_power != classical.form.half_power {
        return Err(Error::NotProportional { ell, nodes });
    }
    let ratio = f
        .g
        .poly
        .ratio_to(&classical.form.poly)
        .ok_or(Error::NotProportional { ell, nodes })?;
    let sign = if ratio.is_negative() { -1 } else { 1 };
    Ok(ClassicalRelation {
        ratio,
        c_squared: f.c_squared,
        sign,
    })
}
