//! The round reference metric on the cylinder: `h₀(t) = sech² t`, the
//! Kähler-Einstein metric of area 4π (unit sphere, Gaussian curvature 1).

use super::cylinder::CylinderMetric;
use crate::error::Result;
use crate::numerics::Grid1D;

/// `log h₀(t) = 2 log sech t`, computed without overflow for any t.
pub fn log_h0(t: f64) -> f64 {
    let a = t.abs();
    2.0 * (std::f64::consts::LN_2 - a - (-2.0 * a).exp().ln_1p())
}

pub fn h0(t: f64) -> f64 {
    log_h0(t).exp()
}

/// Samples of the round density on a grid.
pub fn h0_samples(grid: &Grid1D) -> Vec<f64> {
    grid.nodes().iter().map(|&t| h0(t)).collect()
}

/// The round metric as a validated [`CylinderMetric`].
pub fn round_cylinder(grid: &Grid1D) -> Result<CylinderMetric> {
    CylinderMetric::new(grid.clone(), h0_samples(grid))
}
