//! Change of coordinates from the arc-length profile to the conformal
//! cylinder: `t = ∫ ds/f`, `h(t) = f(s(t))²`, gauged so `t = 0` sits at the
//! median-area point.
//!
//! The conformal modulus of a long thin surface is enormous (a cigar of
//! plateau length `3N` spans `t`-length `3N/a ~ N²`), so the cylinder grid
//! is graded: fine where `log h` varies (the caps), coarse across the flat
//! plateau.

use super::cylinder::CylinderMetric;
use super::profile::ProfileMetric;
use crate::error::{Error, Result};
use crate::numerics::Grid1D;

#[derive(Debug, Clone, Copy)]
pub struct CylinderOptions {
    /// Node count for the uniform layout (compact metrics).
    pub n_grid: usize,
    /// Keep the grid until `h` has dropped to `sech²(cap_margin)` of its max.
    pub cap_margin: f64,
    /// Spacing in regions where `log h` varies.
    pub fine_dt: f64,
    /// Node budget for the slowly-varying middle of a graded layout.
    pub coarse_nodes: usize,
}

impl Default for CylinderOptions {
    fn default() -> Self {
        CylinderOptions { n_grid: 2049, cap_margin: 12.0, fine_dt: 0.012, coarse_nodes: 1200 }
    }
}

impl CylinderOptions {
    pub fn with_n_grid(n_grid: usize) -> Self {
        CylinderOptions { n_grid, ..Default::default() }
    }
}

pub fn profile_to_cylinder(m: &ProfileMetric, opts: &CylinderOptions) -> Result<CylinderMetric> {
    let s_med = m.median_s();
    let f_max = m.f().iter().fold(0.0f64, |a, &b| a.max(b));
    if !(f_max > 0.0) {
        return Err(Error::validation("profile has no positive samples"));
    }
    // stop once h = f² falls to f_max²·sech²(cap_margin)
    let f_cut = f_max * 2.0 * (-opts.cap_margin).exp() / (1.0 + (-2.0 * opts.cap_margin).exp());

    let (t_right, samples_r) = coarse_scan(m, s_med, 1.0, f_cut)?;
    let (t_left, samples_l) = coarse_scan(m, s_med, -1.0, f_cut)?;
    let t_max = t_right.min(t_left);
    if !(t_max.is_finite() && t_max > 0.0) {
        return Err(Error::validation(
            "profile has a non-integrable 1/f: conformal coordinate did not reach the cutoff",
        ));
    }

    let grid = if t_max <= 20.0 {
        Grid1D::uniform(-t_max, t_max, opts.n_grid)?
    } else {
        graded_grid(t_max, &samples_l, &samples_r, opts)?
    };

    // final pass: RK4 with substeps on the actual grid, center outwards
    let n = grid.len();
    let mut h = vec![0.0; n];
    let i0 = grid
        .nodes()
        .iter()
        .position(|&t| t >= 0.0)
        .unwrap_or(n / 2);
    let mut s = s_med;
    // t=0 may fall between nodes of a graded grid; step to the first node
    s = rk4_to(m, s, 0.0, grid.node(i0), 8);
    h[i0] = m.f_at(s).powi(2);
    let mut s_fwd = s;
    for i in i0..n - 1 {
        s_fwd = rk4_to(m, s_fwd, grid.node(i), grid.node(i + 1), 4);
        h[i + 1] = m.f_at(s_fwd).powi(2);
    }
    let mut s_bwd = s;
    for i in (1..=i0).rev() {
        s_bwd = rk4_to(m, s_bwd, grid.node(i), grid.node(i - 1), 4);
        h[i - 1] = m.f_at(s_bwd).powi(2);
    }
    if let Some(i) = h.iter().position(|&v| !(v > 0.0) || !v.is_finite()) {
        return Err(Error::validation(format!(
            "conversion produced a non-positive density at t = {:.4}",
            grid.node(i)
        )));
    }

    if m.area() > 0.0 && ((m.area() - super::cylinder::TOTAL_AREA).abs() < 1e-6) {
        CylinderMetric::new(grid, h)
    } else {
        CylinderMetric::unnormalized(grid, h)
    }
}

/// Integrate `ds/dt = f(s)` from `(t0, s0)` to `t1` with classical RK4 in
/// `substeps` pieces.
fn rk4_to(m: &ProfileMetric, s0: f64, t0: f64, t1: f64, substeps: usize) -> f64 {
    let dt = (t1 - t0) / substeps as f64;
    let mut s = s0;
    for _ in 0..substeps {
        let k1 = m.f_at(s);
        let k2 = m.f_at(s + 0.5 * dt * k1);
        let k3 = m.f_at(s + 0.5 * dt * k2);
        let k4 = m.f_at(s + dt * k3);
        s += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    s
}

/// Coarse outward scan recording `(t, log h)` until the cutoff; direction
/// ±1. Returns the stopping |t| and the samples.
fn coarse_scan(
    m: &ProfileMetric,
    s_med: f64,
    direction: f64,
    f_cut: f64,
) -> Result<(f64, Vec<(f64, f64)>)> {
    let dt = 0.25 * direction;
    let mut t = 0.0;
    let mut s = s_med;
    let mut out = vec![(0.0, 2.0 * m.f_at(s_med).ln())];
    for _ in 0..4_000_000 {
        let k1 = m.f_at(s);
        let k2 = m.f_at(s + 0.5 * dt * k1);
        let k3 = m.f_at(s + 0.5 * dt * k2);
        let k4 = m.f_at(s + dt * k3);
        s += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += dt;
        let f = m.f_at(s);
        if !(f > 0.0) {
            // overshot into the pole at coarse resolution; treat as arrived
            return Ok((t.abs(), out));
        }
        out.push((t, 2.0 * f.ln()));
        if f <= f_cut {
            return Ok((t.abs(), out));
        }
    }
    Err(Error::validation("conformal coordinate scan did not terminate"))
}

/// Symmetric graded layout: fine spacing wherever either coarse scan saw
/// `|d log h / dt| > 0.05` (padded by 4), coarse elsewhere.
fn graded_grid(
    t_max: f64,
    samples_l: &[(f64, f64)],
    samples_r: &[(f64, f64)],
    opts: &CylinderOptions,
) -> Result<Grid1D> {
    let mut marks: Vec<(f64, f64)> = Vec::new(); // fine intervals on [0, t_max]
    let mut scan = |samples: &[(f64, f64)]| {
        for w in samples.windows(2) {
            let dt = (w[1].0 - w[0].0).abs();
            if dt > 0.0 && ((w[1].1 - w[0].1) / dt).abs() > 0.05 {
                let a = w[0].0.abs().min(w[1].0.abs());
                let b = w[0].0.abs().max(w[1].0.abs());
                marks.push(((a - 4.0).max(0.0), (b + 4.0).min(t_max)));
            }
        }
    };
    scan(samples_l);
    scan(samples_r);
    marks.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut fine: Vec<(f64, f64)> = Vec::new();
    for m in marks {
        match fine.last_mut() {
            Some(last) if m.0 <= last.1 => last.1 = last.1.max(m.1),
            _ => fine.push(m),
        }
    }
    // half-grid on [0, t_max]: alternate coarse/fine segments
    let coarse_len: f64 =
        t_max - fine.iter().map(|(a, b)| b - a).sum::<f64>();
    let coarse_dt = (coarse_len / opts.coarse_nodes as f64).max(opts.fine_dt);

    let mut half = vec![0.0f64];
    let push_segment = |half: &mut Vec<f64>, from: f64, to: f64, dt: f64| {
        if to <= from {
            return;
        }
        let k = ((to - from) / dt).ceil() as usize;
        let step = (to - from) / k.max(1) as f64;
        for j in 1..=k.max(1) {
            half.push(from + step * j as f64);
        }
    };
    let mut cursor = 0.0;
    for (a, b) in &fine {
        if *a > cursor {
            push_segment(&mut half, cursor, *a, coarse_dt);
        }
        push_segment(&mut half, cursor.max(*a), *b, opts.fine_dt);
        cursor = *b;
    }
    if cursor < t_max {
        push_segment(&mut half, cursor, t_max, coarse_dt);
    }
    // mirror
    let mut nodes: Vec<f64> = half.iter().skip(1).map(|t| -t).collect();
    nodes.reverse();
    nodes.extend_from_slice(&half);
    Grid1D::from_nodes(nodes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::profile::round_profile;
    use crate::geometry::round::h0;

    #[test]
    fn round_profile_becomes_sech2() {
        let p = round_profile(16385).unwrap();
        let c = profile_to_cylinder(&p, &CylinderOptions::default()).unwrap();
        assert!((c.grid().max() - 12.0).abs() < 0.3, "T = {}", c.grid().max());
        let mut worst = 0.0f64;
        for (t, h) in c.grid().nodes().iter().zip(c.h()) {
            worst = worst.max((h - h0(*t)).abs());
        }
        assert!(worst < 1e-6, "sup |h - sech²| = {worst:.3e}");
    }

    #[test]
    fn area_preserved() {
        let p = round_profile(16385).unwrap();
        let c = profile_to_cylinder(&p, &CylinderOptions::default()).unwrap();
        let rel = (c.area() - p.area()).abs() / p.area();
        assert!(rel < 1e-8, "area relative error {rel:.3e}");
    }
}
