//! Potentials of source files and of the charged sphere in a uniform field.

use std::fmt::Write as _;

use legendre_ladder::electrostatics::{
    direct_coulomb, loop_reference, sphere_potential, Expansion, FieldPoint, SourceDescription,
    Units, Vec3,
};
use serde::Serialize;

use crate::number::{relative_error, sci, sci_vec, Sci};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PointOut {
    pub r: Sci,
    pub theta: Sci,
    pub phi: Sci,
}

impl From<&FieldPoint> for PointOut {
    fn from(p: &FieldPoint) -> Self {
        Self {
            r: Sci(p.r),
            theta: Sci(p.theta),
            phi: Sci(p.phi),
        }
    }
}

fn units_name(units: Units) -> &'static str {
    match units {
        Units::Si => "si",
        Units::Dimensionless => "dimensionless",
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScalarOut {
    pub value: Sci,
    pub oracle: Sci,
    pub relative_error: Sci,
    /// Coefficient of `r^-(ell+1)` for each order.
    pub table: Vec<Sci>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VectorOut {
    pub a_phi: Sci,
    pub oracle_a_phi: Sci,
    pub relative_error: Sci,
    pub value: [Sci; 3],
    pub oracle: [Sci; 3],
    /// Vector coefficient of `r^-(ell+1)` for each order.
    pub table: Vec<[Sci; 3]>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MultipoleOutput {
    pub units: &'static str,
    pub point: PointOut,
    pub lmax: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalar: Option<ScalarOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vector: Option<VectorOut>,
}

fn add(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn multipole(
    sources: &SourceDescription,
    p: &FieldPoint,
    lmax: u32,
    quad_points: usize,
    units: Units,
) -> Result<MultipoleOutput, CliError> {
    if sources.charges.is_empty() && sources.loops.is_empty() {
        return Err(CliError::Usage("source file contains no charges or loops".into()));
    }
    let expansion = Expansion::new(lmax, units)?;
    let scalar = match sources.charge_system() {
        Some(sys) => {
            let e = expansion.scalar(&sys, p, lmax)?;
            let oracle = direct_coulomb(&sys, p, units)?;
            Some(ScalarOut {
                value: Sci(e.value),
                oracle: Sci(oracle),
                relative_error: Sci(relative_error(e.value, oracle)),
                table: e.table.terms.iter().copied().map(Sci).collect(),
            })
        }
        None => None,
    };
    let vector = if sources.loops.is_empty() {
        None
    } else {
        let mut value = [0.0; 3];
        let mut oracle = [0.0; 3];
        let mut table = vec![[0.0; 3]; lmax as usize + 1];
        for lp in &sources.loops {
            let e = expansion.vector_loop(lp, p, lmax, quad_points)?;
            value = add(value, e.value);
            oracle = add(oracle, loop_reference(lp, p, quad_points, units)?);
            for (acc, term) in table.iter_mut().zip(&e.terms) {
                *acc = add(*acc, *term);
            }
        }
        let e_phi = p.azimuthal_unit();
        let along = |v: &Vec3| v[0] * e_phi[0] + v[1] * e_phi[1] + v[2] * e_phi[2];
        let (a_phi, oracle_a_phi) = (along(&value), along(&oracle));
        Some(VectorOut {
            a_phi: Sci(a_phi),
            oracle_a_phi: Sci(oracle_a_phi),
            relative_error: Sci(relative_error(a_phi, oracle_a_phi)),
            value: sci_vec(&value),
            oracle: sci_vec(&oracle),
            table: table.iter().map(sci_vec).collect(),
        })
    };
    Ok(MultipoleOutput {
        units: units_name(units),
        point: p.into(),
        lmax,
        scalar,
        vector,
    })
}

impl MultipoleOutput {
    pub fn text(&self) -> String {
        let mut out = String::new();
        if let Some(s) = &self.scalar {
            let _ = writeln!(out, "scalar potential: {}", sci(s.value.0));
            let _ = writeln!(out, "direct sum: {}", sci(s.oracle.0));
            let _ = writeln!(out, "relative error: {}", sci(s.relative_error.0));
            for (ell, c) in s.table.iter().enumerate() {
                let _ = writeln!(out, "  ell {ell}: {}", sci(c.0));
            }
        }
        if let Some(v) = &self.vector {
            let _ = writeln!(out, "azimuthal vector potential: {}", sci(v.a_phi.0));
            let _ = writeln!(out, "direct quadrature: {}", sci(v.oracle_a_phi.0));
            let _ = writeln!(out, "relative error: {}", sci(v.relative_error.0));
            for (ell, c) in v.table.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  ell {ell}: {} {} {}",
                    sci(c[0].0),
                    sci(c[1].0),
                    sci(c[2].0)
                );
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SphereOutput {
    pub units: &'static str,
    pub point: PointOut,
    pub potential: Sci,
}

impl SphereOutput {
    pub fn text(&self) -> String {
        format!("potential: {}\n", sci(self.potential.0))
    }
}

pub fn sphere(q: f64, radius: f64, e0: f64, p: &FieldPoint, units: Units) -> Result<SphereOutput, CliError> {
    Ok(SphereOutput {
        units: units_name(units),
        point: p.into(),
        potential: Sci(sphere_potential(q, radius, e0, p, units)?),
    })
}
