//! Kähler potentials over the round base: `ω = ω₀ + i∂∂̄φ`, which on the
//! cylinder reads `h = h₀ + φ''/2` with `φ' → 0` at both ends.
//!
//! The potential solve and the density reconstruction use the same
//! flux-difference second derivative, so the two directions invert each
//! other exactly (up to rounding) and the reconstruction conserves area
//! exactly by telescoping.

use super::cylinder::{CylinderMetric, TOTAL_AREA};
use super::round;
use crate::error::{Error, Result};
use crate::numerics::{calculus, Grid1D};

#[derive(Debug, Clone)]
pub struct PotentialMetric {
    grid: Grid1D,
    phi: Vec<f64>,
    normalized: bool,
}

impl PotentialMetric {
    /// Validates the positivity `h₀ + φ''/2 > 0` at every node; when
    /// `normalized` is set, also `max φ = 0` to 1e−12.
    pub fn new(grid: Grid1D, phi: Vec<f64>, normalized: bool) -> Result<Self> {
        if phi.len() != grid.len() {
            return Err(Error::validation(format!(
                "potential: {} samples on {} nodes",
                phi.len(),
                grid.len()
            )));
        }
        let p = PotentialMetric { grid, phi, normalized };
        p.check_positivity()?;
        if normalized {
            let sup = p.phi.iter().fold(f64::NEG_INFINITY, |m, v| m.max(*v));
            if sup.abs() > 1e-12 {
                return Err(Error::validation(format!(
                    "potential flagged normalized but sup φ = {sup:.3e}"
                )));
            }
        }
        Ok(p)
    }

    fn check_positivity(&self) -> Result<()> {
        let h = self.density();
        if let Some(i) = h.iter().position(|&v| !(v > 0.0)) {
            return Err(Error::validation(format!(
                "ω₀ + i∂∂̄φ not positive at node {} (t = {:.6}): h = {:.6e}",
                i,
                self.grid.node(i),
                h[i]
            )));
        }
        Ok(())
    }

    pub fn grid(&self) -> &Grid1D {
        &self.grid
    }

    pub fn phi(&self) -> &[f64] {
        &self.phi
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// `h = h₀ + φ''/2`. The end fluxes come from one-sided derivatives of
    /// φ: hard zeros would dump the (exponentially small but nonzero)
    /// beyond-grid tail flux of φ' into the two boundary half-cells and
    /// kink the reconstructed density there.
    pub fn density(&self) -> Vec<f64> {
        let d = calculus::derivative(&self.grid, &self.phi);
        let m = self.grid.len();
        let ddphi = calculus::second_derivative(&self.grid, &self.phi, d[0], d[m - 1]);
        round::h0_samples(&self.grid)
            .iter()
            .zip(&ddphi)
            .map(|(h0, d)| h0 + d / 2.0)
            .collect()
    }

    /// Shift so `sup φ = 0` and set the flag.
    pub fn normalized(&self) -> PotentialMetric {
        let sup = self.phi.iter().fold(f64::NEG_INFINITY, |m, v| m.max(*v));
        let phi = self.phi.iter().map(|v| v - sup).collect();
        PotentialMetric { grid: self.grid.clone(), phi, normalized: true }
    }
}

/// Density reconstruction `h = h₀ + φ''/2`. Area is automatic: the second
/// derivative integrates to zero exactly against the grid weights.
pub fn potential_to_cylinder(p: &PotentialMetric) -> Result<CylinderMetric> {
    CylinderMetric::new(p.grid().clone(), p.density())
}

/// Extract the potential of a cylinder metric relative to the round base:
/// solve `φ'' = 2(h − h₀)` with decaying φ', in the area-centroid gauge,
/// then shift so `sup φ = 0`.
pub fn cylinder_to_potential(c: &CylinderMetric) -> Result<PotentialMetric> {
    let rel = (c.area() - TOTAL_AREA).abs() / TOTAL_AREA;
    if rel > 1e-6 {
        return Err(Error::validation(format!(
            "cylinder area off by relative {rel:.3e}: no potential with decaying φ' exists"
        )));
    }
    let centered = c.recentered()?;
    let h0 = round::h0_samples(centered.grid());
    let rhs: Vec<f64> = centered.h().iter().zip(&h0).map(|(h, h0)| 2.0 * (h - h0)).collect();
    // asymptotic fluxes of φ' under the rate-2 tail model:
    // φ'(−T) = ∫_{−∞}^{−T} 2(h−h₀) = (h−h₀)(−T), φ'(T) = −(h−h₀)(T)
    let m = centered.grid().len();
    let flux_l = centered.h()[0] - h0[0];
    let flux_r = -(centered.h()[m - 1] - h0[m - 1]);
    let (phi, _defect) =
        calculus::solve_second_derivative(centered.grid(), &rhs, flux_l, flux_r, 5e-6)?;
    let p = PotentialMetric { grid: centered.grid().clone(), phi, normalized: false };
    let p = p.normalized();
    p.check_positivity()?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::round::round_cylinder;

    fn grid() -> Grid1D {
        Grid1D::uniform(-12.0, 12.0, 2049).unwrap()
    }

    #[test]
    fn zero_potential_is_round() {
        let p = PotentialMetric::new(grid(), vec![0.0; 2049], true).unwrap();
        let c = potential_to_cylinder(&p).unwrap();
        let h0 = round::h0_samples(&grid());
        for (a, b) in c.h().iter().zip(&h0) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn round_gives_zero_potential() {
        let c = round_cylinder(&grid()).unwrap();
        let p = cylinder_to_potential(&c).unwrap();
        let sup = p.phi().iter().fold(0.0f64, |m, v| m.max(v.abs()));
        assert!(sup < 1e-9, "sup|φ| = {sup:.3e}");
    }

    #[test]
    fn smooth_bump_matches_double_quadrature_oracle() {
        // h = h₀ + (ψ'')/2 for a compactly-decaying ψ: the exact potential
        // is ψ itself up to gauge. Build h from an explicit ψ, extract φ,
        // and compare against the independent cumulative-quadrature oracle.
        let g = grid();
        let psi = |t: f64| 0.2 * (-t * t / 2.0).exp();
        let h: Vec<f64> = {
            let phi: Vec<f64> = g.nodes().iter().map(|&t| psi(t)).collect();
            let dd = calculus::second_derivative(&g, &phi, 0.0, 0.0);
            round::h0_samples(&g)
                .iter()
                .zip(&dd)
                .map(|(h0, d)| h0 + d / 2.0)
                .collect()
        };
        let c = CylinderMetric::new(g.clone(), h.clone()).unwrap();
        let p = cylinder_to_potential(&c).unwrap();

        // oracle: integrate twice with explicit constants (midpoint
        // cumulative fluxes), then sup-normalize
        let h0 = round::h0_samples(&g);
        let rhs: Vec<f64> = h.iter().zip(&h0).map(|(h, h0)| 2.0 * (h - h0)).collect();
        let w = g.weights();
        let dt = g.spacing();
        let mut oracle = vec![0.0; g.len()];
        let mut flux = w[0] * rhs[0];
        for i in 0..g.len() - 1 {
            oracle[i + 1] = oracle[i] + dt[i] * flux;
            if i + 1 < g.len() - 1 {
                flux += w[i + 1] * rhs[i + 1];
            }
        }
        let sup = oracle.iter().fold(f64::NEG_INFINITY, |m, v| m.max(*v));
        for v in &mut oracle {
            *v -= sup;
        }

        // the bump is even, so the centroid gauge is a no-op here
        for (a, b) in p.phi().iter().zip(&oracle) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
    }

    #[test]
    fn round_trip_potential_cylinder_potential() {
        let g = grid();
        let phi: Vec<f64> = g
            .nodes()
            .iter()
            .map(|&t| 0.15 * (-(t - 0.4) * (t - 0.4) / 3.0).exp())
            .collect();
        let p = PotentialMetric::new(g.clone(), phi, false).unwrap().normalized();
        let c = potential_to_cylinder(&p).unwrap();
        let back = cylinder_to_potential(&c).unwrap();
        let mut worst = 0.0f64;
        for (a, b) in back.phi().iter().zip(p.phi()) {
            worst = worst.max((a - b).abs());
        }
        assert!(worst < 1e-8, "round trip sup error {worst:.3e}");
    }

    #[test]
    fn area_mismatch_rejected() {
        let g = grid();
        let h: Vec<f64> = round::h0_samples(&g).iter().map(|v| v * 1.001).collect();
        let c = CylinderMetric::unnormalized(g, h).unwrap();
        assert!(cylinder_to_potential(&c).is_err());
    }

    #[test]
    fn positivity_violation_names_node() {
        let g = grid();
        // a wild potential that dips h below zero somewhere
        let phi: Vec<f64> = g.nodes().iter().map(|&t| 3.0 * (-t * t / 0.1).exp()).collect();
        let err = PotentialMetric::new(g, phi, false).unwrap_err();
        let msg = format!("{err}");
        assert!(msg.contains("not positive at node"), "{msg}");
    }
}
