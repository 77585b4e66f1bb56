//! Finite-volume calculus on a [`Grid1D`].
//!
//! The second derivative is the flux-difference operator
//! `(D²φ)ᵢ = (gᵢ₊₁/₂ − gᵢ₋₁/₂)/wᵢ` with interface fluxes
//! `gᵢ₊₁/₂ = (φᵢ₊₁ − φᵢ)/Δᵢ` and prescribed fluxes at the two ends. Summed
//! against the trapezoid weights it telescopes exactly to the boundary
//! fluxes, which is what makes area conservation and the Neumann solvability
//! conditions hold to rounding rather than to discretization error.

use super::grid::Grid1D;
use crate::error::{Error, Result};

/// Flux-difference second derivative with prescribed end fluxes
/// (`flux_left = φ'(t₀)`, `flux_right = φ'(t_{m−1})`).
pub fn second_derivative(grid: &Grid1D, values: &[f64], flux_left: f64, flux_right: f64) -> Vec<f64> {
    let m = grid.len();
    assert_eq!(values.len(), m);
    let dt = grid.spacing();
    let w = grid.weights();
    let mut out = vec![0.0; m];
    let mut g_prev = flux_left;
    for i in 0..m - 1 {
        let g_next = (values[i + 1] - values[i]) / dt[i];
        out[i] = (g_next - g_prev) / w[i];
        g_prev = g_next;
    }
    out[m - 1] = (flux_right - g_prev) / w[m - 1];
    out
}

/// Exact inverse of [`second_derivative`]: solves `D²φ = rhs` with the given
/// end fluxes by midpoint cumulative quadrature, normalized to `φ₀ = 0`.
///
/// Solvability requires `Σ wᵢ rhsᵢ = flux_right − flux_left`; the defect is
/// measured and, when below `defect_tol`, distributed uniformly before
/// solving (so the returned φ reproduces the corrected rhs exactly).
/// Returns the potential and the raw defect.
pub fn solve_second_derivative(
    grid: &Grid1D,
    rhs: &[f64],
    flux_left: f64,
    flux_right: f64,
    defect_tol: f64,
) -> Result<(Vec<f64>, f64)> {
    let m = grid.len();
    assert_eq!(rhs.len(), m);
    let w = grid.weights();
    let total: f64 = grid.integrate(rhs)?;
    let defect = total - (flux_right - flux_left);
    if defect.abs() > defect_tol {
        return Err(Error::validation(format!(
            "second-derivative problem not solvable: flux defect {defect:.3e} exceeds {defect_tol:.3e}"
        )));
    }
    let span: f64 = grid.span();
    let correction = defect / span;

    let dt = grid.spacing();
    let mut phi = vec![0.0; m];
    let mut g = flux_left + w[0] * (rhs[0] - correction);
    for i in 0..m - 1 {
        phi[i + 1] = phi[i] + dt[i] * g;
        if i + 1 < m - 1 {
            g += w[i + 1] * (rhs[i + 1] - correction);
        }
    }
    Ok((phi, defect))
}

/// Fourth-order flux-difference second derivative on a uniform grid:
/// interface fluxes from the four-point midpoint-derivative stencil,
/// degrading to the two-point flux at the first and last interfaces, with
/// prescribed fluxes at the two ends. Same telescoping property as
/// [`second_derivative`].
pub fn second_derivative_flux4(
    grid: &Grid1D,
    values: &[f64],
    flux_left: f64,
    flux_right: f64,
) -> Vec<f64> {
    let m = grid.len();
    assert_eq!(values.len(), m);
    if grid.kind() != super::grid::GridKind::Uniform || m < 6 {
        return second_derivative(grid, values, flux_left, flux_right);
    }
    let dt = grid.spacing()[0];
    let w = grid.weights();
    let flux_at = |i: usize| -> f64 {
        // interface between nodes i and i+1; whole-cell differences of this
        // flux reproduce the classical five-point fourth-order stencil
        if i == 0 || i + 2 >= m {
            (values[i + 1] - values[i]) / dt
        } else {
            (values[i - 1] - 15.0 * values[i] + 15.0 * values[i + 1] - values[i + 2]) / (12.0 * dt)
        }
    };
    let mut out = vec![0.0; m];
    let mut g_prev = flux_left;
    for i in 0..m - 1 {
        let g_next = flux_at(i);
        out[i] = (g_next - g_prev) / w[i];
        g_prev = g_next;
    }
    out[m - 1] = (flux_right - g_prev) / w[m - 1];
    out
}

/// Second-order first derivative: three-point central stencil in the
/// interior (nonuniform aware) and one-sided at the ends.
pub fn derivative(grid: &Grid1D, values: &[f64]) -> Vec<f64> {
    let m = grid.len();
    assert_eq!(values.len(), m);
    let t = grid.nodes();
    let mut out = vec![0.0; m];
    for i in 1..m - 1 {
        let hl = t[i] - t[i - 1];
        let hr = t[i + 1] - t[i];
        out[i] = (values[i + 1] * hl * hl - values[i - 1] * hr * hr
            + values[i] * (hr * hr - hl * hl))
            / (hl * hr * (hl + hr));
    }
    // one-sided second order at the ends
    let three_point = |t0: f64, t1: f64, t2: f64, v0: f64, v1: f64, v2: f64| {
        let h1 = t1 - t0;
        let h2 = t2 - t0;
        // derivative at t0 of the quadratic through the three points
        (-v0 * (h1 + h2) / (h1 * h2)) + v1 * h2 / (h1 * (h2 - h1)) - v2 * h1 / (h2 * (h2 - h1))
    };
    out[0] = three_point(t[0], t[1], t[2], values[0], values[1], values[2]);
    out[m - 1] = three_point(
        t[m - 1],
        t[m - 2],
        t[m - 3],
        values[m - 1],
        values[m - 2],
        values[m - 3],
    );
    out
}

/// P1 Dirichlet energy `∫ (φ')² dt` of the piecewise-linear interpolant:
/// `Σ (φᵢ₊₁ − φᵢ)²/Δᵢ`.
pub fn dirichlet_energy(grid: &Grid1D, values: &[f64]) -> f64 {
    let dt = grid.spacing();
    values
        .windows(2)
        .zip(dt)
        .map(|(v, d)| (v[1] - v[0]) * (v[1] - v[0]) / d)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_is_exact_inverse() {
        let g = Grid1D::uniform(-3.0, 3.0, 129).unwrap();
        // rhs integrating to zero with zero fluxes
        let rhs: Vec<f64> = g.nodes().iter().map(|t| t * (-t * t / 2.0).exp()).collect();
        let total = g.integrate(&rhs).unwrap();
        let w: Vec<f64> = g.weights().to_vec();
        let span: f64 = g.span();
        let rhs0: Vec<f64> = rhs.iter().map(|r| r - total / span).collect();
        let _ = w;

        let (phi, _defect) = solve_second_derivative(&g, &rhs0, 0.0, 0.0, 1e-12).unwrap();
        let back = second_derivative(&g, &phi, 0.0, 0.0);
        for (a, b) in back.iter().zip(&rhs0) {
            assert!((a - b).abs() < 1e-11, "{a} vs {b}");
        }
    }

    #[test]
    fn telescoping_sum_is_boundary_flux() {
        let g = Grid1D::uniform(0.0, 2.0, 65).unwrap();
        let v: Vec<f64> = g.nodes().iter().map(|t| (t * 1.3).sin() + t * t).collect();
        let lap = second_derivative(&g, &v, 0.25, -0.5);
        let total = g.integrate(&lap).unwrap();
        assert!((total - (-0.5 - 0.25)).abs() < 1e-13);
    }

    #[test]
    fn derivative_second_order() {
        let check = |n: usize| -> f64 {
            let g = Grid1D::uniform(0.0, 1.0, n).unwrap();
            let v: Vec<f64> = g.nodes().iter().map(|t| (2.0 * t).exp()).collect();
            let d = derivative(&g, &v);
            g.nodes()
                .iter()
                .zip(&d)
                .map(|(t, d)| (d - 2.0 * (2.0 * t).exp()).abs())
                .fold(0.0, f64::max)
        };
        let e1 = check(101);
        let e2 = check(201);
        assert!(e1 / e2 > 3.5, "ratio {}", e1 / e2);
    }

    #[test]
    fn dirichlet_energy_of_linear() {
        let g = Grid1D::uniform(0.0, 4.0, 33).unwrap();
        let v: Vec<f64> = g.nodes().iter().map(|t| 3.0 * t + 1.0).collect();
        assert!((dirichlet_energy(&g, &v) - 9.0 * 4.0).abs() < 1e-12);
    }
}
