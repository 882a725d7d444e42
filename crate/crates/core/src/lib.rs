//! Exact ladder-operator construction of the associated Legendre functions.
//!
//! Every associated Legendre function of degree `ell` is produced from the
//! nodeless ("ground") member of its family by repeated application of
//! first-order raising operators. All of that work happens in exact rational
//! arithmetic over the closed family `p(x) * (1 - x^2)^(s/2)`; square roots
//! of normalization constants are only taken when asked for.
//!
//! The crate is split into four layers:
//!
//! - [`algebra`]: rationals, polynomials, half-power functions, exact
//!   integration on `[-1, 1]` and Sturm root counting.
//! - [`ladder`]: ground functions, raising and annihilation operators,
//!   normalization constants, the product construction, node counts and the
//!   differential-equation residual.
//! - [`classical`]: independent oracles (Rodrigues formula, stable float
//!   recurrences, harmonic-oscillator wavefunctions).
//! - [`electrostatics`]: conducting sphere, scalar multipole expansion and
//!   current-loop vector potential, each paired with a direct oracle.

pub mod algebra;
pub mod classical;
pub mod electrostatics;
mod error;
pub mod ladder;

pub use algebra::{
    count_roots_in_open_interval, hp_inner_product, moment_integral, HalfPowerFunction,
    Polynomial, Rational,
};
pub use classical::{alf_float, legendre_poly, oscillator_wavefunction, rodrigues_alf, ClassicalAlf};
pub use error::{Error, Result};
pub use ladder::{
    apply_lowering_ground, build, compare_with_classical, ground, modified, node_count,
    norm_constant, ode_residual, LadderAlf, ModifiedAlf, RaisingOperator,
};
