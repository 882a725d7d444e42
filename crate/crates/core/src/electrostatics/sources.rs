use std::str::FromStr;

use crate::error::{Error, Result};

use super::{norm, Vec3};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointCharge {
    /// Meters.
    pub position: Vec3,
    /// Coulombs.
    pub charge: f64,
}

impl PointCharge {
    pub fn new(charge: f64, position: Vec3) -> Result<Self> {
        if !charge.is_finite() || position.iter().any(|c| !c.is_finite()) {
            return Err(Error::Geometry("point charge with non-finite data".into()));
        }
        Ok(Self { position, charge })
    }
}

/// A nonempty set of point charges; `extent` is the largest distance of a
/// charge from the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct ChargeSystem {
    charges: Vec<PointCharge>,
    extent: f64,
}

impl ChargeSystem {
    pub fn new(charges: Vec<PointCharge>) -> Result<Self> {
        if charges.is_empty() {
            return Err(Error::Geometry("charge system is empty".into()));
        }
        let extent = charges
            .iter()
            .map(|c| norm(&c.position))
            .fold(0.0, f64::max);
        Ok(Self { charges, extent })
    }

    pub fn charges(&self) -> &[PointCharge] {
        &self.charges
    }

    pub fn extent(&self) -> f64 {
        self.extent
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut charges = self.charges.clone();
        charges.extend_from_slice(&other.charges);
        Self {
            charges,
            extent: self.extent.max(other.extent),
        }
    }
}

/// Circular loop of radius `radius` in the `z = 0` plane, centered at the
/// origin, carrying `current` counterclockwise seen from `+z`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurrentLoop {
    pub radius: f64,
    pub current: f64,
}

impl CurrentLoop {
    pub fn new(radius: f64, current: f64) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::Geometry(format!("loop radius must be positive, got {radius}")));
        }
        if !current.is_finite() {
            return Err(Error::Geometry("loop current must be finite".into()));
        }
        Ok(Self { radius, current })
    }
}

/// Parsed source file.
///
/// One record per line, whitespace separated, SI units:
///
/// ```text
/// # comment
/// charge <q> <x> <y> <z>
/// loop <a> <I>
/// ```
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SourceDescription {
    pub charges: Vec<PointCharge>,
    pub loops: Vec<CurrentLoop>,
}

impl SourceDescription {
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = Self::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let mut fields = content.split_whitespace();
            let Some(kind) = fields.next() else {
                continue;
            };
            let values = fields
                .map(|f| {
                    f.parse::<f64>().map_err(|_| Error::Parse {
                        line,
                        message: format!("`{f}` is not a number"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let arity = |n: usize| {
                if values.len() == n {
                    Ok(())
                } else {
                    Err(Error::Parse {
                        line,
                        message: format!("`{kind}` takes {n} fields, found {}", values.len()),
                    })
                }
            };
            let located = |e: Error| Error::Parse {
                line,
                message: e.to_string(),
            };
            match kind {
                "charge" => {
                    arity(4)?;
                    let c = PointCharge::new(values[0], [values[1], values[2], values[3]])
                        .map_err(located)?;
                    out.charges.push(c);
                }
                "loop" => {
                    arity(2)?;
                    out.loops
                        .push(CurrentLoop::new(values[0], values[1]).map_err(located)?);
                }
                other => {
                    return Err(Error::Parse {
                        line,
                        message: format!("unknown record `{other}`"),
                    })
                }
            }
        }
        Ok(out)
    }

    pub fn charge_system(&self) -> Option<ChargeSystem> {
        ChargeSystem::new(self.charges.clone()).ok()
    }
}

impl FromStr for SourceDescription {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}
