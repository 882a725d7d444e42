//! Exact arithmetic: rationals, univariate polynomials, the half-power
//! function family, integration on `[-1, 1]` and real root counting.

mod half_power;
mod integral;
mod polynomial;
mod rational;
mod sturm;

pub use half_power::HalfPowerFunction;
pub use integral::{hp_inner_product, moment_integral, moments};
pub use polynomial::Polynomial;
pub use rational::{exact_sqrt, factorial, rat, rat_int, to_f64, Rational};
pub use sturm::{count_roots_in_open_interval, sturm_sequence};
