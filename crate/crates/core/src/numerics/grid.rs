//! One-dimensional grids with trapezoid quadrature.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

pub const MIN_NODES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridKind {
    Uniform,
    Graded,
}

/// Strictly increasing nodes `t₀ < … < t_{m−1}` with per-interval spacings
/// and dual-cell (trapezoid) weights.
#[derive(Debug, Clone)]
pub struct Grid1D {
    nodes: Vec<f64>,
    spacing: Vec<f64>,
    weights: Vec<f64>,
    kind: GridKind,
}

impl Grid1D {
    pub fn uniform(min: f64, max: f64, n: usize) -> Result<Self> {
        if !(max > min) {
            return Err(Error::validation(format!("grid bounds not increasing: [{min}, {max}]")));
        }
        if n < MIN_NODES {
            return Err(Error::validation(format!("grid needs at least {MIN_NODES} nodes, got {n}")));
        }
        let dt = (max - min) / (n - 1) as f64;
        let nodes: Vec<f64> = (0..n).map(|i| min + dt * i as f64).collect();
        Self::build(nodes, GridKind::Uniform)
    }

    /// Build from explicit nodes; the kind is detected (uniform when all
    /// spacings agree to relative 1e−12).
    pub fn from_nodes(nodes: Vec<f64>) -> Result<Self> {
        let kind = if Self::spacings_uniform(&nodes) {
            GridKind::Uniform
        } else {
            GridKind::Graded
        };
        Self::build(nodes, kind)
    }

    fn spacings_uniform(nodes: &[f64]) -> bool {
        if nodes.len() < 2 {
            return true;
        }
        let d0 = nodes[1] - nodes[0];
        // relative 1e−12 plus the unavoidable rounding of the nodes themselves
        let scale = nodes.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let tol = 1e-12 * d0.abs() + 4.0 * f64::EPSILON * scale;
        nodes.windows(2).all(|w| ((w[1] - w[0]) - d0).abs() <= tol)
    }

    fn build(nodes: Vec<f64>, kind: GridKind) -> Result<Self> {
        if nodes.len() < MIN_NODES {
            return Err(Error::validation(format!(
                "grid needs at least {MIN_NODES} nodes, got {}",
                nodes.len()
            )));
        }
        if !nodes.windows(2).all(|w| w[1] > w[0]) {
            return Err(Error::validation("grid nodes not strictly increasing"));
        }
        if kind == GridKind::Uniform && !Self::spacings_uniform(&nodes) {
            return Err(Error::validation("grid declared uniform but spacings differ"));
        }
        let spacing: Vec<f64> = nodes.windows(2).map(|w| w[1] - w[0]).collect();
        let m = nodes.len();
        let mut weights = vec![0.0; m];
        weights[0] = spacing[0] / 2.0;
        weights[m - 1] = spacing[m - 2] / 2.0;
        for i in 1..m - 1 {
            weights[i] = (spacing[i - 1] + spacing[i]) / 2.0;
        }
        Ok(Grid1D { nodes, spacing, weights, kind })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> f64 {
        self.nodes[i]
    }

    /// Interval widths, length `len() − 1`.
    pub fn spacing(&self) -> &[f64] {
        &self.spacing
    }

    /// Dual-cell trapezoid weights, length `len()`.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn kind(&self) -> GridKind {
        self.kind
    }

    pub fn min(&self) -> f64 {
        self.nodes[0]
    }

    pub fn max(&self) -> f64 {
        *self.nodes.last().unwrap()
    }

    pub fn span(&self) -> f64 {
        self.max() - self.min()
    }

    /// Composite trapezoid rule; exact for piecewise-linear integrands.
    pub fn integrate(&self, values: &[f64]) -> Result<f64> {
        if values.len() != self.len() {
            return Err(Error::validation(format!(
                "integrate: {} values on a grid of {} nodes",
                values.len(),
                self.len()
            )));
        }
        Ok(self.weights.iter().zip(values).map(|(w, v)| w * v).sum())
    }

    /// Trapezoid rule for complex samples given as (re, im) pairs.
    pub fn integrate_complex(&self, values: &[(f64, f64)]) -> Result<(f64, f64)> {
        if values.len() != self.len() {
            return Err(Error::validation(format!(
                "integrate: {} values on a grid of {} nodes",
                values.len(),
                self.len()
            )));
        }
        let re = self.weights.iter().zip(values).map(|(w, v)| w * v.0).sum();
        let im = self.weights.iter().zip(values).map(|(w, v)| w * v.1).sum();
        Ok((re, im))
    }

    /// Translate all nodes by `shift`.
    pub fn translated(&self, shift: f64) -> Grid1D {
        let nodes = self.nodes.iter().map(|t| t + shift).collect();
        Grid1D {
            nodes,
            spacing: self.spacing.clone(),
            weights: self.weights.clone(),
            kind: self.kind,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrate_sin_on_0_pi() {
        let g = Grid1D::uniform(0.0, std::f64::consts::PI, 2049).unwrap();
        let v: Vec<f64> = g.nodes().iter().map(|t| t.sin()).collect();
        let got = g.integrate(&v).unwrap();
        assert!((got - 2.0).abs() < 1e-6, "got {got}");
    }

    #[test]
    fn integrate_sech2() {
        let g = Grid1D::uniform(-12.0, 12.0, 2049).unwrap();
        let v: Vec<f64> = g.nodes().iter().map(|t| 1.0 / t.cosh().powi(2)).collect();
        let got = g.integrate(&v).unwrap();
        let exact = 2.0 * 12.0_f64.tanh();
        assert!((got - exact).abs() < 1e-8, "got {got} want {exact}");
    }

    #[test]
    fn integrate_constant_exact() {
        let g = Grid1D::uniform(0.0, 1.0, 17).unwrap();
        let v = vec![1.0; 17];
        assert_eq!(g.integrate(&v).unwrap(), 1.0);
    }

    #[test]
    fn integrate_length_mismatch() {
        let g = Grid1D::uniform(0.0, 1.0, 17).unwrap();
        assert!(g.integrate(&[1.0; 5]).is_err());
    }

    #[test]
    fn quadrature_second_order() {
        // measured slope of the error under refinement must be >= 1.9
        let f = |t: f64| (3.0 * t).cos() * (-t).exp();
        let exact = {
            // antiderivative of cos(3t)e^{-t}: e^{-t}(3 sin 3t - cos 3t)/10
            let fi = |t: f64| (-t).exp() * (3.0 * (3.0 * t).sin() - (3.0 * t).cos()) / 10.0;
            fi(2.0) - fi(0.0)
        };
        let mut errs = Vec::new();
        let mut hs = Vec::new();
        for k in 0..4 {
            let n = 65 * (1 << k) + 1;
            let g = Grid1D::uniform(0.0, 2.0, n).unwrap();
            let v: Vec<f64> = g.nodes().iter().map(|&t| f(t)).collect();
            let e = (g.integrate(&v).unwrap() - exact).abs();
            errs.push(e.ln());
            hs.push((2.0 / (n - 1) as f64).ln());
        }
        // least-squares slope of ln(err) vs ln(h)
        let n = errs.len() as f64;
        let sx: f64 = hs.iter().sum();
        let sy: f64 = errs.iter().sum();
        let sxx: f64 = hs.iter().map(|x| x * x).sum();
        let sxy: f64 = hs.iter().zip(&errs).map(|(x, y)| x * y).sum();
        let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        assert!(slope >= 1.9, "quadrature order {slope}");
    }

    #[test]
    fn graded_grid_weights_sum_to_span() {
        let nodes: Vec<f64> = (0..40).map(|i| (i as f64 / 39.0).powi(2) * 5.0).collect();
        let g = Grid1D::from_nodes(nodes).unwrap();
        assert_eq!(g.kind(), GridKind::Graded);
        let total: f64 = g.weights().iter().sum();
        assert!((total - g.span()).abs() < 1e-12);
    }
}
