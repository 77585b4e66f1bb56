//! Numerical laboratory for eigenvalue gaps of rotation-invariant Kähler
//! metrics on the 2-sphere.
//!
//! A metric in the anticanonical class with an S¹ symmetry is stored as an
//! area density `h(t)` on the conformal cylinder (`t = log|z|`), as a profile
//! `f(s)` of a surface of revolution, or as a Kähler potential `φ` over the
//! round base `h₀ = sech²t`. On top of these representations the crate
//! computes:
//!
//! - `λ`: the lowest strictly positive eigenvalue of the Cauchy-Riemann
//!   operator on vector fields, over fields orthogonal to the 3-dimensional
//!   space of holomorphic fields (module [`spectral`]);
//! - `μ`: the smallest positive eigenvalue of the weighted operator
//!   `L f = -Δf + ∇u·∇̄f - f` built from the Ricci potential `u`
//!   (module [`spectral`]);
//! - the Ricci potential, its normalization, scalar curvature, and the
//!   Monge-Ampère identity residual including the constant `c_φ`
//!   (module [`potentials`]);
//! - K-energy and the Aubin-Yau I/J functionals, and bounded-geometry
//!   reports (module [`functionals`]);
//! - the cigar family of long thin surfaces of revolution whose λ decays
//!   like 1/N, its explicit test vector field, parameter sweeps, and the
//!   normalized Ricci flow with spectral tracing (module [`experiments`]).
//!
//! Everything is driven by 1D Fourier-mode reductions: each operator becomes
//! a family of symmetric tridiagonal pencils on the cylinder grid, solved by
//! Sturm bisection, with a dense LAPACK path for constrained problems and
//! cross-checks (module [`numerics`]).

pub mod cli;
pub mod error;
pub mod experiments;
pub mod functionals;
pub mod geometry;
pub mod numerics;
pub mod potentials;
pub mod spectral;

pub use error::{Error, Result};
