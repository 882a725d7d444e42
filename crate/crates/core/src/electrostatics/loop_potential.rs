use std::f64::consts::PI;

use crate::error::{Error, Result};

use super::{dot, norm, sub, CurrentLoop, Expansion, FieldPoint, Units, Vec3, MIN_QUAD_POINTS};

/// Truncated vector-potential expansion: per-order vector coefficients of
/// `r^-(ell+1)` and their sum at the field point.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorExpansion {
    pub value: Vec3,
    pub terms: Vec<Vec3>,
}

impl VectorExpansion {
    /// Component along the azimuthal unit vector at `p`.
    pub fn azimuthal(&self, p: &FieldPoint) -> f64 {
        dot(&self.value, &p.azimuthal_unit())
    }
}

/// Equally spaced points on the loop with their line elements `dl`.
fn contour(lp: &CurrentLoop, n: usize) -> impl Iterator<Item = (Vec3, Vec3)> + '_ {
    let step = 2.0 * PI / n as f64;
    (0..n).map(move |k| {
        let (s, c) = (step * k as f64).sin_cos();
        let a = lp.radius;
        ([a * c, a * s, 0.0], [-a * s * step, a * c * step, 0.0])
    })
}

fn check_quad(n: usize) -> Result<()> {
    if n < MIN_QUAD_POINTS {
        return Err(Error::TooFewQuadPoints(n));
    }
    Ok(())
}

impl Expansion {
    /// Truncated exterior expansion of the vector potential of a circular loop:
    ///
    /// `mu0 I / (4 pi) sum_ell r^-(ell+1) contour_integral dl' a^ell P_ell(cos theta')`,
    ///
    /// with the contour integral done by the trapezoidal rule on `quad_points`
    /// equally spaced loop parameters.
    pub fn vector_loop(
        &self,
        lp: &CurrentLoop,
        p: &FieldPoint,
        lmax: u32,
        quad_points: usize,
    ) -> Result<VectorExpansion> {
        self.check_lmax(lmax)?;
        check_quad(quad_points)?;
        if p.r <= lp.radius {
            return Err(Error::InteriorPoint { r: p.r, extent: lp.radius });
        }
        let unit = p.unit();
        let mut terms = vec![[0.0; 3]; lmax as usize + 1];
        for (pos, dl) in contour(lp, quad_points) {
            let cos = (dot(&unit, &pos) / lp.radius).clamp(-1.0, 1.0);
            for (ell, term) in terms.iter_mut().enumerate() {
                let w = self.table.eval(ell as u32, cos);
                for i in 0..3 {
                    term[i] += dl[i] * w;
                }
            }
        }
        let k = self.units.magnetic_constant() * lp.current;
        let mut radial = 1.0;
        for term in terms.iter_mut() {
            *term = term.map(|c| c * k * radial);
            radial *= lp.radius;
        }
        let mut value = [0.0; 3];
        let mut inv = 1.0 / p.r;
        for term in &terms {
            for i in 0..3 {
                value[i] += term[i] * inv;
            }
            inv /= p.r;
        }
        Ok(VectorExpansion { value, terms })
    }
}

/// `mu0 I / (4 pi) contour_integral dl' / |r - r'|` by the trapezoidal rule.
pub fn loop_reference(lp: &CurrentLoop, p: &FieldPoint, quad_points: usize, units: Units) -> Result<Vec3> {
    check_quad(quad_points)?;
    let at = p.cartesian();
    let rho = (at[0] * at[0] + at[1] * at[1]).sqrt();
    if ((rho - lp.radius).powi(2) + at[2] * at[2]).sqrt() <= 1e-12 * lp.radius {
        return Err(Error::Singular);
    }
    let k = units.magnetic_constant() * lp.current;
    let mut sum = [0.0; 3];
    for (pos, dl) in contour(lp, quad_points) {
        let inv = 1.0 / norm(&sub(&at, &pos));
        for i in 0..3 {
            sum[i] += dl[i] * inv;
        }
    }
    Ok(sum.map(|c| c * k))
}

/// Magnetic-dipole limit `A_phi = mu0 / (4 pi) I pi a^2 sin(theta) / r^2`.
pub fn loop_dipole_potential(lp: &CurrentLoop, p: &FieldPoint, units: Units) -> f64 {
    units.magnetic_constant() * lp.current * PI * lp.radius * lp.radius * p.theta.sin() / (p.r * p.r)
}
