//! Surfaces of revolution via the arc-length profile `f(s)`.
//!
//! The surface revolves the graph with distance `f(s)` to the axis; the
//! metric is `ds² + f(s)² dθ²`, the area `2π ∫ f ds`, and the Gaussian
//! curvature `K = −f''/f`. Pole regularity (a smooth closed surface) is the
//! one-sided condition `f'(0) = 1`, `f'(L) = −1`.

use super::cylinder::TOTAL_AREA;
use crate::error::{Error, Result};
use crate::numerics::{calculus, Grid1D};

#[derive(Debug, Clone)]
pub struct ProfileMetric {
    sgrid: Grid1D,
    f: Vec<f64>,
    area: f64,
}

const POLE_SLOPE_TOL: f64 = 1e-3;

impl ProfileMetric {
    /// Validating constructor: endpoint zeros, interior positivity, pole
    /// slopes ±1, area 4π to relative 1e−8.
    pub fn new(sgrid: Grid1D, f: Vec<f64>) -> Result<Self> {
        let m = Self::build(sgrid, f)?;
        let rel = (m.area - TOTAL_AREA).abs() / TOTAL_AREA;
        if rel > 1e-8 {
            return Err(Error::validation(format!(
                "profile area {:.12e} deviates from 4π by relative {rel:.3e}",
                m.area
            )));
        }
        Ok(m)
    }

    /// Skips the area normalization check (diagnostics on spheres of other
    /// radii and intermediate constructions).
    pub fn unnormalized(sgrid: Grid1D, f: Vec<f64>) -> Result<Self> {
        Self::build(sgrid, f)
    }

    /// Rescale a raw profile by the similarity `s → cs, f → cf` so the
    /// discrete area is exactly 4π, then validate. Returns the metric and
    /// the applied scale factor. Pole slopes and the class membership are
    /// scale-invariant; the curvature scales by `1/c²`.
    pub fn rescaled_to_class(sgrid: Grid1D, f: Vec<f64>) -> Result<(Self, f64)> {
        let raw_area = 2.0 * std::f64::consts::PI * sgrid.integrate(&f)?;
        if !(raw_area > 0.0) {
            return Err(Error::validation("profile has non-positive area"));
        }
        let c = (TOTAL_AREA / raw_area).sqrt();
        let nodes: Vec<f64> = sgrid.nodes().iter().map(|s| c * s).collect();
        let scaled: Vec<f64> = f.iter().map(|v| c * v).collect();
        let grid = Grid1D::from_nodes(nodes)?;
        Ok((Self::new(grid, scaled)?, c))
    }

    fn build(sgrid: Grid1D, f: Vec<f64>) -> Result<Self> {
        if f.len() != sgrid.len() {
            return Err(Error::validation(format!(
                "profile: {} samples on {} nodes",
                f.len(),
                sgrid.len()
            )));
        }
        let m = f.len();
        if f[0] != 0.0 || f[m - 1] != 0.0 {
            return Err(Error::validation(format!(
                "profile must vanish at the poles: f(0)={}, f(L)={}",
                f[0],
                f[m - 1]
            )));
        }
        if let Some(i) = f[1..m - 1].iter().position(|&v| !(v > 0.0)) {
            return Err(Error::validation(format!(
                "profile not positive at interior node {} (s = {:.6})",
                i + 1,
                sgrid.node(i + 1)
            )));
        }
        let d = calculus::derivative(&sgrid, &f);
        if (d[0] - 1.0).abs() > POLE_SLOPE_TOL {
            return Err(Error::validation(format!(
                "pole regularity: f'(0) = {:.6}, expected 1",
                d[0]
            )));
        }
        if (d[m - 1] + 1.0).abs() > POLE_SLOPE_TOL {
            return Err(Error::validation(format!(
                "pole regularity: f'(L) = {:.6}, expected -1",
                d[m - 1]
            )));
        }
        let area = 2.0 * std::f64::consts::PI * sgrid.integrate(&f)?;
        Ok(ProfileMetric { sgrid, f, area })
    }

    pub fn sgrid(&self) -> &Grid1D {
        &self.sgrid
    }

    pub fn f(&self) -> &[f64] {
        &self.f
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    pub fn length(&self) -> f64 {
        self.sgrid.max()
    }

    /// Arc-length location of the median-area point (half the area on each
    /// side), by interpolation of the cumulative area.
    pub fn median_s(&self) -> f64 {
        let half = self.area / 2.0;
        let mut acc = 0.0;
        let f = &self.f;
        let s = self.sgrid.nodes();
        for i in 0..f.len() - 1 {
            let seg = std::f64::consts::PI * (f[i] + f[i + 1]) * (s[i + 1] - s[i]);
            if acc + seg >= half {
                let frac = (half - acc) / seg;
                return s[i] + frac * (s[i + 1] - s[i]);
            }
            acc += seg;
        }
        self.sgrid.max() / 2.0
    }

    /// Evaluate `f` by local 4-point Lagrange interpolation.
    pub fn f_at(&self, s: f64) -> f64 {
        let nodes = self.sgrid.nodes();
        let m = nodes.len();
        let s = s.clamp(nodes[0], nodes[m - 1]);
        let mut lo = 0usize;
        let mut hi = m - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if nodes[mid] <= s {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let i0 = lo.saturating_sub(1).min(m - 4);
        let ts = &nodes[i0..i0 + 4];
        let vs = &self.f[i0..i0 + 4];
        let mut acc = 0.0;
        for j in 0..4 {
            let mut lj = 1.0;
            for k in 0..4 {
                if k != j {
                    lj *= (s - ts[k]) / (ts[j] - ts[k]);
                }
            }
            acc += lj * vs[j];
        }
        acc
    }
}

/// Gaussian curvature `K = −f''/f`; the pole values use the regularized
/// limit (extrapolated from the adjacent interior nodes).
pub fn curvature_profile(m: &ProfileMetric) -> Result<Vec<f64>> {
    let n = m.f().len();
    if let Some(i) = m.f()[1..n - 1].iter().position(|&v| !(v > 0.0)) {
        return Err(Error::validation(format!(
            "curvature: profile not positive at interior node {}",
            i + 1
        )));
    }
    let d = calculus::derivative(m.sgrid(), m.f());
    let ddf = calculus::second_derivative(m.sgrid(), m.f(), d[0], d[n - 1]);
    let mut k = vec![0.0; n];
    for i in 1..n - 1 {
        k[i] = -ddf[i] / m.f()[i];
    }
    // regularized pole limit: linear extrapolation from the two neighbors
    k[0] = 2.0 * k[1] - k[2];
    k[n - 1] = 2.0 * k[n - 2] - k[n - 3];
    Ok(k)
}

/// Gauss–Bonnet integral `2π ∫ K f ds` in the profile representation.
pub fn gauss_bonnet_profile(m: &ProfileMetric) -> Result<f64> {
    let k = curvature_profile(m)?;
    let kf: Vec<f64> = k.iter().zip(m.f()).map(|(k, f)| k * f).collect();
    Ok(2.0 * std::f64::consts::PI * m.sgrid().integrate(&kf)?)
}

/// The round profile `f = sin s` on `[0, π]`, sampled through the distance
/// to the nearest pole (avoids cancellation noise in `sin` near π) and
/// rescaled so the discrete area is exactly 4π.
pub fn round_profile(n: usize) -> Result<ProfileMetric> {
    let g = Grid1D::uniform(0.0, std::f64::consts::PI, n)?;
    let l = std::f64::consts::PI;
    let f: Vec<f64> = g.nodes().iter().map(|&s| s.min(l - s).max(0.0).sin()).collect();
    Ok(ProfileMetric::rescaled_to_class(g, f)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_profile_valid() {
        let p = round_profile(4097).unwrap();
        assert!((p.area() - TOTAL_AREA).abs() < 1e-8 * TOTAL_AREA);
        assert!((p.median_s() - std::f64::consts::FRAC_PI_2).abs() < 1e-6);
    }

    #[test]
    fn curvature_of_round_profile() {
        let p = round_profile(4097).unwrap();
        let k = curvature_profile(&p).unwrap();
        let worst = k.iter().map(|v| (v - 1.0).abs()).fold(0.0f64, f64::max);
        assert!(worst < 1e-6, "sup |K-1| = {worst:.3e}");
    }

    #[test]
    fn curvature_of_scaled_sphere() {
        let rho = 0.37;
        let l = rho * std::f64::consts::PI;
        let g = Grid1D::uniform(0.0, l, 4097).unwrap();
        let f: Vec<f64> = g
            .nodes()
            .iter()
            .map(|&s| rho * (s.min(l - s).max(0.0) / rho).sin())
            .collect();
        let p = ProfileMetric::unnormalized(g, f).unwrap();
        let k = curvature_profile(&p).unwrap();
        let want = 1.0 / (rho * rho);
        let worst = k.iter().map(|v| (v - want).abs()).fold(0.0f64, f64::max);
        assert!(worst < 1e-6 * want, "sup |K-1/rho^2| = {worst:.3e}");
    }

    #[test]
    fn gauss_bonnet_profile_round() {
        let p = round_profile(8193).unwrap();
        let gb = gauss_bonnet_profile(&p).unwrap();
        assert!((gb - TOTAL_AREA).abs() < 1e-4, "GB = {gb}");
    }

    #[test]
    fn pole_regularity_enforced() {
        let g = Grid1D::uniform(0.0, 1.0, 257).unwrap();
        // parabola has f'(0) = 2, not a smooth closure
        let mut f: Vec<f64> = g.nodes().iter().map(|s| 2.0 * s * (1.0 - s)).collect();
        f[0] = 0.0;
        f[256] = 0.0;
        assert!(ProfileMetric::unnormalized(g, f).is_err());
    }
}
