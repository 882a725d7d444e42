//! Exterior potentials of localized sources, expanded in Legendre
//! polynomials built by the ladder construction.
//!
//! Every expansion has a direct-evaluation counterpart ([`direct_coulomb`],
//! [`loop_reference`]) that never touches a Legendre polynomial.

mod legendre_table;
mod loop_potential;
mod scalar;
mod sources;
mod sphere;

pub use legendre_table::{LegendreSource, LegendreTable};
pub use loop_potential::{loop_dipole_potential, loop_reference, VectorExpansion};
pub use scalar::{direct_coulomb, MultipoleTable, ScalarExpansion};
pub use sources::{ChargeSystem, CurrentLoop, PointCharge, SourceDescription};
pub use sphere::sphere_potential;

use crate::error::{Error, Result};

/// Largest expansion order accepted. Monomial-basis evaluation of the
/// Legendre factors loses accuracy as the degree grows; orders up to 40 have
/// been checked against the direct oracles.
pub const LMAX_CAP: u32 = 40;
pub const MIN_QUAD_POINTS: usize = 64;
pub const DEFAULT_QUAD_POINTS: usize = 512;

pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// Vacuum magnetic permeability in N/A^2 (CODATA 2022).
pub const VACUUM_PERMEABILITY: f64 = 1.256_637_061_27e-6;
/// Vacuum electric permittivity in F/m, `1 / (mu0 c^2)`.
pub const VACUUM_PERMITTIVITY: f64 =
    1.0 / (VACUUM_PERMEABILITY * SPEED_OF_LIGHT * SPEED_OF_LIGHT);

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Units {
    #[default]
    Si,
    /// `1 / (4 pi eps0) = 1` and `mu0 / (4 pi) = 1`.
    Dimensionless,
}

impl Units {
    /// `k_c = 1 / (4 pi eps0)`.
    pub fn coulomb_constant(self) -> f64 {
        match self {
            Units::Si => 1.0 / (4.0 * std::f64::consts::PI * VACUUM_PERMITTIVITY),
            Units::Dimensionless => 1.0,
        }
    }

    /// `mu0 / (4 pi)`.
    pub fn magnetic_constant(self) -> f64 {
        match self {
            Units::Si => VACUUM_PERMEABILITY / (4.0 * std::f64::consts::PI),
            Units::Dimensionless => 1.0,
        }
    }
}

pub type Vec3 = [f64; 3];

pub(crate) fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn norm(a: &Vec3) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn sub(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Spherical field point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldPoint {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

impl FieldPoint {
    pub fn new(r: f64, theta: f64, phi: f64) -> Result<Self> {
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::Geometry(format!("radial distance must be positive, got {r}")));
        }
        if !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(Error::Geometry(format!("polar angle must lie in [0, pi], got {theta}")));
        }
        if !phi.is_finite() {
            return Err(Error::Geometry(format!("azimuth must be finite, got {phi}")));
        }
        Ok(Self { r, theta, phi })
    }

    pub fn unit(&self) -> Vec3 {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }

    pub fn cartesian(&self) -> Vec3 {
        self.unit().map(|c| c * self.r)
    }

    /// Unit vector along increasing azimuth.
    pub fn azimuthal_unit(&self) -> Vec3 {
        let (sp, cp) = self.phi.sin_cos();
        [-sp, cp, 0.0]
    }
}

/// Builds Legendre factors once and evaluates truncated expansions with them.
#[derive(Clone, Debug)]
pub struct Expansion {
    table: LegendreTable,
    units: Units,
}

impl Expansion {
    /// Factors up to `lmax` from the ladder construction.
    pub fn new(lmax: u32, units: Units) -> Result<Self> {
        Self::with_source(lmax, LegendreSource::Ladder, units)
    }

    pub fn with_source(lmax: u32, source: LegendreSource, units: Units) -> Result<Self> {
        Ok(Self {
            table: LegendreTable::new(lmax, source)?,
            units,
        })
    }

    pub fn table(&self) -> &LegendreTable {
        &self.table
    }

    pub fn units(&self) -> Units {
        self.units
    }

    fn check_lmax(&self, lmax: u32) -> Result<()> {
        if lmax > LMAX_CAP {
            return Err(Error::LmaxTooLarge(lmax));
        }
        if lmax > self.table.lmax() {
            return Err(Error::Geometry(format!(
                "expansion order {lmax} exceeds the prepared table order {}",
                self.table.lmax()
            )));
        }
        Ok(())
    }
}
