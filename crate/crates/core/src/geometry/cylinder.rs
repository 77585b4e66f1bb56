//! S¹-invariant metrics as area densities on the conformal cylinder.
//!
//! `ω = h(t) dt ∧ dθ` with `t = log|z|`. Total area is `2π ∫ h dt` plus the
//! mass of the exponential tails `h ≈ C₋ e^{2t}` (left) and `h ≈ C₊ e^{−2t}`
//! (right) beyond the truncated grid. Every smooth metric on the sphere has
//! these tail rates in the cylinder coordinate, which is what the tail-fit
//! validation checks.

use crate::error::{Error, Result};
use crate::numerics::{calculus, Grid1D};

pub const TOTAL_AREA: f64 = 4.0 * std::f64::consts::PI;

/// Fitted tail model at one end: `log h ≈ log_amplitude + slope · t`.
#[derive(Debug, Clone, Copy)]
pub struct TailFit {
    pub log_amplitude: f64,
    pub slope: f64,
}

#[derive(Debug, Clone)]
pub struct CylinderMetric {
    grid: Grid1D,
    h: Vec<f64>,
    log_h: Vec<f64>,
    tail_left: TailFit,
    tail_right: TailFit,
    area: f64,
}

impl CylinderMetric {
    /// Validating constructor: positivity, tail decay within 10% of the
    /// rate 2 at both ends, and total area 4π to relative 1e−8.
    pub fn new(grid: Grid1D, h: Vec<f64>) -> Result<Self> {
        let m = Self::build(grid, h)?;
        m.check_tail_exponents()?;
        let rel = (m.area - TOTAL_AREA).abs() / TOTAL_AREA;
        if rel > 1e-8 {
            return Err(Error::validation(format!(
                "cylinder metric area {:.12e} deviates from 4π by relative {rel:.3e}",
                m.area
            )));
        }
        Ok(m)
    }

    /// Positivity and tail fitting only; for diagnostics on densities that
    /// do not represent a metric in the class (wrong area or decay).
    pub fn unnormalized(grid: Grid1D, h: Vec<f64>) -> Result<Self> {
        Self::build(grid, h)
    }

    fn build(grid: Grid1D, h: Vec<f64>) -> Result<Self> {
        if h.len() != grid.len() {
            return Err(Error::validation(format!(
                "cylinder metric: {} density samples on {} nodes",
                h.len(),
                grid.len()
            )));
        }
        if let Some(i) = h.iter().position(|&v| !(v > 0.0) || !v.is_finite()) {
            return Err(Error::validation(format!(
                "density not positive at node {} (t = {:.6}): {}",
                i,
                grid.node(i),
                h[i]
            )));
        }
        let log_h: Vec<f64> = h.iter().map(|v| v.ln()).collect();
        let tail_left = fit_tail(&grid, &log_h, Side::Left);
        let tail_right = fit_tail(&grid, &log_h, Side::Right);
        let interior = grid.integrate(&h)?;
        // tail mass under the rate-2 model anchored at the end samples:
        // ∫_{−∞}^{t₀} h(t₀)e^{2(t−t₀)} dt = h(t₀)/2, same on the right
        let tails = h[0] / 2.0 + h[h.len() - 1] / 2.0;
        let area = 2.0 * std::f64::consts::PI * (interior + tails);
        Ok(CylinderMetric { grid, h, log_h, tail_left, tail_right, area })
    }

    fn check_tail_exponents(&self) -> Result<()> {
        let sl = self.tail_left.slope;
        let sr = -self.tail_right.slope;
        if (sl - 2.0).abs() > 0.2 {
            return Err(Error::validation(format!(
                "left tail decay exponent {sl:.4} not within 10% of 2"
            )));
        }
        if (sr - 2.0).abs() > 0.2 {
            return Err(Error::validation(format!(
                "right tail decay exponent {sr:.4} not within 10% of 2"
            )));
        }
        Ok(())
    }

    pub fn grid(&self) -> &Grid1D {
        &self.grid
    }

    pub fn h(&self) -> &[f64] {
        &self.h
    }

    pub fn log_h(&self) -> &[f64] {
        &self.log_h
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    pub fn tails(&self) -> (TailFit, TailFit) {
        (self.tail_left, self.tail_right)
    }

    /// Slope-forced tail amplitudes `(C₋, C₊)` of `h ≈ C∓ e^{±2t}`.
    pub fn tail_amplitudes(&self) -> (f64, f64) {
        let t0 = self.grid.min();
        let t1 = self.grid.max();
        let c_minus = (self.log_h[0] - 2.0 * t0).exp();
        let c_plus = (self.log_h[self.h.len() - 1] + 2.0 * t1).exp();
        (c_minus, c_plus)
    }

    /// Area centroid `∫ t h dt / ∫ h dt` including tail mass.
    pub fn centroid(&self) -> f64 {
        let t0 = self.grid.min();
        let t1 = self.grid.max();
        let th: Vec<f64> = self
            .grid
            .nodes()
            .iter()
            .zip(&self.h)
            .map(|(t, h)| t * h)
            .collect();
        let mut num = self.grid.integrate(&th).expect("same grid");
        let mut den = self.grid.integrate(&self.h).expect("same grid");
        // tails: ∫ t C e^{∓2(t∓T)} over the unbounded side
        let hl = self.h[0];
        let hr = self.h[self.h.len() - 1];
        num += hl * (t0 / 2.0 - 0.25) + hr * (t1 / 2.0 + 0.25);
        den += hl / 2.0 + hr / 2.0;
        num / den
    }

    /// Evaluate `log h` anywhere: cubic interpolation on the grid, fitted
    /// tail model beyond it.
    pub fn log_h_at(&self, t: f64) -> f64 {
        let nodes = self.grid.nodes();
        let m = nodes.len();
        if t <= nodes[0] {
            // rate-2 tail anchored at the end sample
            return self.log_h[0] + 2.0 * (t - nodes[0]);
        }
        if t >= nodes[m - 1] {
            return self.log_h[m - 1] - 2.0 * (t - nodes[m - 1]);
        }
        // locate interval by binary search
        let mut lo = 0usize;
        let mut hi = m - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if nodes[mid] <= t {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        // 4-point Lagrange around the interval
        let i0 = lo.saturating_sub(1).min(m - 4);
        let ts = &nodes[i0..i0 + 4];
        let vs = &self.log_h[i0..i0 + 4];
        let mut acc = 0.0;
        for j in 0..4 {
            let mut lj = 1.0;
            for k in 0..4 {
                if k != j {
                    lj *= (t - ts[k]) / (ts[j] - ts[k]);
                }
            }
            acc += lj * vs[j];
        }
        acc
    }

    /// Translate the density so the area centroid sits at t = 0 (grid
    /// unchanged; samples shifted by interpolation, area re-matched).
    pub fn recentered(&self) -> Result<CylinderMetric> {
        let tau = self.centroid();
        if tau.abs() <= 1e-12 * self.grid.span() {
            return Ok(self.clone());
        }
        let h_new: Vec<f64> = self
            .grid
            .nodes()
            .iter()
            .map(|&t| self.log_h_at(t + tau).exp())
            .collect();
        let raw = CylinderMetric::build(self.grid.clone(), h_new)?;
        let scale = self.area / raw.area;
        let h_scaled: Vec<f64> = raw.h.iter().map(|v| v * scale).collect();
        CylinderMetric::new(self.grid.clone(), h_scaled)
    }

    /// Extend the grid by `extra` on both sides using the tail model
    /// (for truncation-consistency re-solves).
    pub fn extended(&self, extra: f64) -> Result<CylinderMetric> {
        let dt_l = self.grid.spacing()[0];
        let dt_r = *self.grid.spacing().last().unwrap();
        let n_l = (extra / dt_l).ceil() as usize;
        let n_r = (extra / dt_r).ceil() as usize;
        let mut nodes = Vec::with_capacity(self.grid.len() + n_l + n_r);
        for i in (1..=n_l).rev() {
            nodes.push(self.grid.min() - dt_l * i as f64);
        }
        nodes.extend_from_slice(self.grid.nodes());
        for i in 1..=n_r {
            nodes.push(self.grid.max() + dt_r * i as f64);
        }
        let grid = Grid1D::from_nodes(nodes)?;
        let h: Vec<f64> = grid.nodes().iter().map(|&t| self.log_h_at(t).exp()).collect();
        CylinderMetric::new(grid, h)
    }

    /// Resample onto another grid (tail model beyond the ends).
    pub fn resampled(&self, grid: &Grid1D) -> Result<CylinderMetric> {
        let h: Vec<f64> = grid.nodes().iter().map(|&t| self.log_h_at(t).exp()).collect();
        CylinderMetric::unnormalized(grid.clone(), h)
    }

    /// Boundary slopes of `log h` from one-sided second-order stencils;
    /// exponentially accurate at the truncation ends, where the curved part
    /// of `log h` has died out. Shared by the curvature and the
    /// Ricci-potential solve.
    pub fn boundary_log_slopes(&self) -> (f64, f64) {
        let d = calculus::derivative(&self.grid, &self.log_h);
        (d[0], d[d.len() - 1])
    }

    /// `D²(log h)` with one-sided boundary fluxes; the ingredient shared by
    /// the curvature and the Ricci-potential solve.
    pub fn log_h_second_derivative(&self) -> Vec<f64> {
        let (fl, fr) = self.boundary_log_slopes();
        calculus::second_derivative(&self.grid, &self.log_h, fl, fr)
    }

    /// Scale the density pointwise (diagnostic; breaks the class
    /// normalization on purpose).
    pub fn density_scaled(&self, factor: f64) -> Result<CylinderMetric> {
        let h: Vec<f64> = self.h.iter().map(|v| v * factor).collect();
        CylinderMetric::unnormalized(self.grid.clone(), h)
    }
}

enum Side {
    Left,
    Right,
}

/// Least-squares line through `log h` over the outermost window
/// (min(3, span/10) wide).
fn fit_tail(grid: &Grid1D, log_h: &[f64], side: Side) -> TailFit {
    let m = grid.len();
    let span = grid.span();
    let width = (span / 10.0).min(3.0);
    let idx: Vec<usize> = match side {
        Side::Left => {
            let cut = grid.min() + width;
            (0..m).take_while(|&i| grid.node(i) <= cut).collect()
        }
        Side::Right => {
            let cut = grid.max() - width;
            (0..m).rev().take_while(|&i| grid.node(i) >= cut).collect()
        }
    };
    let n = idx.len().max(2) as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &i in &idx {
        let x = grid.node(i);
        let y = log_h[i];
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let denom = n * sxx - sx * sx;
    let slope = if denom.abs() > 0.0 { (n * sxy - sx * sy) / denom } else { 0.0 };
    let intercept = (sy - slope * sx) / n;
    TailFit { log_amplitude: intercept, slope }
}

/// Flux-difference curvature samples `K = −(log h)'' / (2h)`; internally
/// consistent with the Ricci-potential solve (same operator, same boundary
/// fluxes), but only first-order accurate at the two boundary nodes.
pub(crate) fn curvature_cylinder_fv(c: &CylinderMetric) -> Vec<f64> {
    let ddl = c.log_h_second_derivative();
    ddl.iter().zip(c.h()).map(|(d, h)| -d / (2.0 * h)).collect()
}

/// Gaussian curvature `K = −(log h)'' / (2h)`; equals the scalar curvature
/// `tr_ω Ric(ω)` on a surface. The two boundary nodes are patched by linear
/// extrapolation: the flux-difference value there divides a tail-fit
/// mismatch by the exponentially small density.
pub fn curvature_cylinder(c: &CylinderMetric) -> Vec<f64> {
    let mut k = curvature_cylinder_fv(c);
    let n = k.len();
    k[0] = 2.0 * k[1] - k[2];
    k[n - 1] = 2.0 * k[n - 2] - k[n - 3];
    k
}

/// Gauss–Bonnet integral `2π ∫ K h dt` (should be 4π for a sphere). Uses
/// the flux-difference samples, whose weighted sum telescopes to the tail
/// slopes.
pub fn gauss_bonnet_cylinder(c: &CylinderMetric) -> f64 {
    let k = curvature_cylinder_fv(c);
    let kh: Vec<f64> = k.iter().zip(c.h()).map(|(k, h)| k * h).collect();
    2.0 * std::f64::consts::PI * c.grid().integrate(&kh).expect("same grid")
}

/// Equivalence constant `κ = max(sup h₁/h₂, sup h₂/h₁) ≥ 1`; for conformal
/// S¹-invariant metrics on a surface pointwise ordering of the forms is
/// ordering of the densities. Resamples the second metric when the grids
/// differ.
pub fn equivalence_ratio(c1: &CylinderMetric, c2: &CylinderMetric) -> Result<f64> {
    let same_grid = c1.grid().len() == c2.grid().len()
        && c1
            .grid()
            .nodes()
            .iter()
            .zip(c2.grid().nodes())
            .all(|(a, b)| (a - b).abs() <= 1e-12 * (1.0 + a.abs()));
    let resampled;
    let l2: &[f64] = if same_grid {
        c2.log_h()
    } else {
        resampled = c2.resampled(c1.grid())?;
        // hold the resampled metric's log densities
        return finish_ratio(c1.log_h(), resampled.log_h());
    };
    finish_ratio(c1.log_h(), l2)
}

fn finish_ratio(l1: &[f64], l2: &[f64]) -> Result<f64> {
    let sup = l1
        .iter()
        .zip(l2)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    Ok(sup.exp())
}
