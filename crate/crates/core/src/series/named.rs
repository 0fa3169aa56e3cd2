//! Series addressable by name from the command line and the demo.

use super::{build_generating_jet, lambert_sum, pochhammer_inf, GenSpec, TruncatedSeries};
use crate::partition::ResidueSpec;
use crate::{Error, Result};

/// Names accepted by [`named_series`] besides [`GenSpec::NAMES`].
pub const EXTRA_NAMES: [&str; 3] = ["j2exp", "j2exp2", "j2exp3"];

/// `(1 − q²)·(−q;q²)_∞`.
pub fn j2exp(order: usize) -> TruncatedSeries {
    let mut s = pochhammer_inf(-1, 1, 2, order);
    s.mul_binomial(-1, 2);
    s
}

/// `q²/(1 − q⁴)`.
pub fn j2exp2(order: usize) -> TruncatedSeries {
    lambert_sum(2, order + 1, 1, 2, order)
}

/// `(1 − q²)·(−q;q²)_∞ · q²/(1 − q⁴)`.
pub fn j2exp3(order: usize) -> TruncatedSeries {
    &j2exp(order) * &j2exp2(order)
}

/// A generating function at `z = 1` by its [`GenSpec`] name, or one of
/// [`EXTRA_NAMES`].
pub fn named_series(name: &str, params: &ResidueSpec, order: usize) -> Result<TruncatedSeries> {
    match name.to_ascii_lowercase().as_str() {
        "j2exp" => Ok(j2exp(order)),
        "j2exp2" => Ok(j2exp2(order)),
        "j2exp3" => Ok(j2exp3(order)),
        _ => {
            let spec = GenSpec::from_name(name, params).map_err(|e| match e {
                Error::InvalidParameter(_) => Error::InvalidParameter(format!("unknown series `{name}`")),
                other => other,
            })?;
            Ok(build_generating_jet(&spec, order)?.value)
        }
    }
}
