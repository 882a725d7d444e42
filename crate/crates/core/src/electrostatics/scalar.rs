use crate::error::{Error, Result};

use super::{dot, norm, ChargeSystem, Expansion, FieldPoint, Units};

/// Coefficients `c_ell` of `r^-(ell+1)` in a truncated exterior expansion.
#[derive(Clone, Debug, PartialEq)]
pub struct MultipoleTable {
    pub terms: Vec<f64>,
}

impl MultipoleTable {
    pub fn lmax(&self) -> u32 {
        self.terms.len() as u32 - 1
    }

    /// `sum_ell c_ell / r^(ell+1)`.
    pub fn evaluate(&self, r: f64) -> f64 {
        let mut power = r;
        let mut sum = 0.0;
        for c in &self.terms {
            sum += c / power;
            power *= r;
        }
        sum
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScalarExpansion {
    pub value: f64,
    pub table: MultipoleTable,
}

impl Expansion {
    /// Truncated exterior expansion of the potential of a set of point charges:
    ///
    /// `k_c sum_ell r^-(ell+1) sum_i q_i |r_i|^ell P_ell(cos theta_i)`,
    ///
    /// with `theta_i` the angle between the field point and charge `i`.
    pub fn scalar(&self, sys: &ChargeSystem, p: &FieldPoint, lmax: u32) -> Result<ScalarExpansion> {
        self.check_lmax(lmax)?;
        if p.r <= sys.extent() {
            return Err(Error::InteriorPoint { r: p.r, extent: sys.extent() });
        }
        let unit = p.unit();
        let k = self.units.coulomb_constant();
        let mut terms = vec![0.0; lmax as usize + 1];
        for charge in sys.charges() {
            let dist = norm(&charge.position);
            let cos = if dist == 0.0 {
                1.0
            } else {
                (dot(&unit, &charge.position) / dist).clamp(-1.0, 1.0)
            };
            let mut radial = 1.0;
            for (ell, term) in terms.iter_mut().enumerate() {
                *term += k * charge.charge * radial * self.table.eval(ell as u32, cos);
                radial *= dist;
            }
        }
        let table = MultipoleTable { terms };
        Ok(ScalarExpansion {
            value: table.evaluate(p.r),
            table,
        })
    }
}

/// Coulomb superposition `sum_i k_c q_i / |r - r_i|`.
///
/// Distances come from `|r - r_i|^2 = r^2 + |r_i|^2 - 2 r (r_hat . r_i)`, which
/// is exact for a charge at the origin.
pub fn direct_coulomb(sys: &ChargeSystem, p: &FieldPoint, units: Units) -> Result<f64> {
    let unit = p.unit();
    let k = units.coulomb_constant();
    let mut sum = 0.0;
    for charge in sys.charges() {
        let pos = &charge.position;
        let d2 = p.r * p.r + dot(pos, pos) - 2.0 * p.r * dot(&unit, pos);
        let d = d2.max(0.0).sqrt();
        if d <= f64::EPSILON * p.r.max(norm(pos)) {
            return Err(Error::Singular);
        }
        sum += k * charge.charge / d;
    }
    Ok(sum)
}
