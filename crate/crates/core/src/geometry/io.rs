//! Metric JSON files.
//!
//! ```json
//! { "repr": "profile" | "cylinder" | "potential",
//!   "grid": { "min": -12.0, "max": 12.0, "n": 2049, "kind": "uniform" },
//!   "values": [ ... ],
//!   "meta": { "area": 12.566, "label": "round" } }
//! ```
//!
//! Graded grids carry the explicit `"nodes"` array. Readers validate all
//! metric invariants on load.

use super::cylinder::CylinderMetric;
use super::potential::PotentialMetric;
use super::profile::ProfileMetric;
use crate::error::{Error, Result};
use crate::numerics::{Grid1D, GridKind};
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Serialize, Deserialize)]
pub struct MetricFile {
    pub repr: String,
    pub grid: GridSpec,
    pub values: Vec<f64>,
    #[serde(default)]
    pub meta: Meta,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub n: usize,
    pub kind: GridKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodes: Option<Vec<f64>>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
pub struct Meta {
    #[serde(default)]
    pub area: f64,
    #[serde(default)]
    pub label: String,
}

/// A validated metric in any representation.
#[derive(Debug, Clone)]
pub enum Metric {
    Profile(ProfileMetric),
    Cylinder(CylinderMetric),
    Potential(PotentialMetric),
}

impl Metric {
    pub fn label_kind(&self) -> &'static str {
        match self {
            Metric::Profile(_) => "profile",
            Metric::Cylinder(_) => "cylinder",
            Metric::Potential(_) => "potential",
        }
    }

    /// Convert to the cylinder representation (the workhorse for all
    /// operators).
    pub fn to_cylinder(&self) -> Result<CylinderMetric> {
        match self {
            Metric::Profile(p) => {
                super::convert::profile_to_cylinder(p, &super::convert::CylinderOptions::default())
            }
            Metric::Cylinder(c) => Ok(c.clone()),
            Metric::Potential(p) => super::potential::potential_to_cylinder(p),
        }
    }
}

fn grid_from_spec(spec: &GridSpec) -> Result<Grid1D> {
    match spec.kind {
        GridKind::Uniform => Grid1D::uniform(spec.min, spec.max, spec.n),
        GridKind::Graded => {
            let nodes = spec
                .nodes
                .clone()
                .ok_or_else(|| Error::validation("graded grid requires explicit nodes"))?;
            if nodes.len() != spec.n {
                return Err(Error::validation(format!(
                    "grid spec declares n = {} but carries {} nodes",
                    spec.n,
                    nodes.len()
                )));
            }
            let g = Grid1D::from_nodes(nodes)?;
            if (g.min() - spec.min).abs() > 1e-9 || (g.max() - spec.max).abs() > 1e-9 {
                return Err(Error::validation("grid spec min/max inconsistent with nodes"));
            }
            Ok(g)
        }
    }
}

fn grid_to_spec(grid: &Grid1D) -> GridSpec {
    GridSpec {
        min: grid.min(),
        max: grid.max(),
        n: grid.len(),
        kind: grid.kind(),
        nodes: match grid.kind() {
            GridKind::Uniform => None,
            GridKind::Graded => Some(grid.nodes().to_vec()),
        },
    }
}

pub fn load_metric(path: &Path) -> Result<Metric> {
    let text = std::fs::read_to_string(path)?;
    let file: MetricFile = serde_json::from_str(&text)?;
    metric_from_file(&file)
}

pub fn metric_from_file(file: &MetricFile) -> Result<Metric> {
    let grid = grid_from_spec(&file.grid)?;
    match file.repr.as_str() {
        "profile" => Ok(Metric::Profile(ProfileMetric::new(grid, file.values.clone())?)),
        "cylinder" => Ok(Metric::Cylinder(CylinderMetric::new(grid, file.values.clone())?)),
        "potential" => {
            // sup-normalization is not required of files; re-normalize on load
            let p = PotentialMetric::new(grid, file.values.clone(), false)?;
            Ok(Metric::Potential(p.normalized()))
        }
        other => Err(Error::validation(format!("unknown metric repr {other:?}"))),
    }
}

pub fn save_metric(path: &Path, metric: &Metric, label: &str) -> Result<()> {
    let file = metric_to_file(metric, label)?;
    let text = serde_json::to_string(&file)?;
    std::fs::write(path, text)?;
    Ok(())
}

pub fn metric_to_file(metric: &Metric, label: &str) -> Result<MetricFile> {
    let (repr, grid, values, area) = match metric {
        Metric::Profile(p) => ("profile", grid_to_spec(p.sgrid()), p.f().to_vec(), p.area()),
        Metric::Cylinder(c) => ("cylinder", grid_to_spec(c.grid()), c.h().to_vec(), c.area()),
        Metric::Potential(p) => {
            let area = super::potential::potential_to_cylinder(p)?.area();
            ("potential", grid_to_spec(p.grid()), p.phi().to_vec(), area)
        }
    };
    Ok(MetricFile {
        repr: repr.to_string(),
        grid,
        values,
        meta: Meta { area, label: label.to_string() },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::round::round_cylinder;

    #[test]
    fn cylinder_roundtrip_through_json() {
        let g = Grid1D::uniform(-12.0, 12.0, 513).unwrap();
        let c = round_cylinder(&g).unwrap();
        let file = metric_to_file(&Metric::Cylinder(c.clone()), "round").unwrap();
        let text = serde_json::to_string(&file).unwrap();
        let parsed: MetricFile = serde_json::from_str(&text).unwrap();
        let m = metric_from_file(&parsed).unwrap();
        match m {
            Metric::Cylinder(c2) => {
                for (a, b) in c.h().iter().zip(c2.h()) {
                    assert_eq!(a, b);
                }
            }
            _ => panic!("wrong repr"),
        }
    }

    #[test]
    fn corrupted_file_rejected() {
        let g = Grid1D::uniform(-12.0, 12.0, 513).unwrap();
        let c = round_cylinder(&g).unwrap();
        let mut file = metric_to_file(&Metric::Cylinder(c), "bad").unwrap();
        file.values[100] = -0.5;
        let err = metric_from_file(&file).unwrap_err();
        assert!(format!("{err}").contains("not positive"));
    }
}
