use crate::error::{Error, Result};
use crate::ladder::build;

use super::{FieldPoint, Units};

/// Potential outside a conducting sphere of radius `radius` carrying charge
/// `q`, placed in a uniform field `e0` along `+z`:
///
/// `k_c q / r - e0 (r - R^3 / r^2) P(1, 1)(cos theta)`,
///
/// where the one-node degree-one ladder function `P(1, 1)(x) = x`.
pub fn sphere_potential(q: f64, radius: f64, e0: f64, p: &FieldPoint, units: Units) -> Result<f64> {
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::Geometry(format!("sphere radius must be positive, got {radius}")));
    }
    if p.r < radius {
        return Err(Error::InsideConductor { r: p.r, radius });
    }
    let dipole = build(1, 1)?.eval(p.theta.cos())?;
    let r = p.r;
    Ok(units.coulomb_constant() * q / r - e0 * (r - radius.powi(3) / (r * r)) * dipole)
}
