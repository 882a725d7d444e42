//! Fixed-width number formatting shared by every output format.

use serde::ser::Error as _;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// Scientific notation with 17 significant digits, enough to round-trip any
/// `f64`.
pub fn sci(x: f64) -> String {
    format!("{x:.16e}")
}

/// An `f64` that serializes as a JSON number in [`sci`] format, or `null`
/// when not finite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sci(pub f64);

impl Serialize for Sci {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return serializer.serialize_none();
        }
        let raw = RawValue::from_string(sci(self.0)).map_err(S::Error::custom)?;
        raw.serialize(serializer)
    }
}

pub fn sci_vec(v: &[f64; 3]) -> [Sci; 3] {
    v.map(Sci)
}

/// `|got - want| / |want|`, or the absolute difference when `want` is zero.
pub fn relative_error(got: f64, want: f64) -> f64 {
    let diff = (got - want).abs();
    if want == 0.0 {
        diff
    } else {
        diff / want.abs()
    }
}
