//! Representations of S¹-invariant metrics on the sphere in the
//! anticanonical class (area 4π), curvature, and conversions between
//! representations.

pub mod convert;
pub mod cylinder;
pub mod io;
pub mod potential;
pub mod profile;
pub mod round;

pub use convert::{profile_to_cylinder, CylinderOptions};
pub use cylinder::{
    curvature_cylinder, equivalence_ratio, gauss_bonnet_cylinder, CylinderMetric, TailFit,
    TOTAL_AREA,
};
pub use io::{load_metric, metric_from_file, metric_to_file, save_metric, Metric, MetricFile};
pub use potential::{cylinder_to_potential, potential_to_cylinder, PotentialMetric};
pub use profile::{curvature_profile, gauss_bonnet_profile, round_profile, ProfileMetric};
