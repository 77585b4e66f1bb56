//! Symmetric-definite generalized eigenproblems `A x = ν B x`.
//!
//! Two routes behind one contract:
//!
//! - both forms tridiagonal → Sturm bisection ([`super::tridiag`]);
//! - otherwise a dense congruence. We factor `A + σB = R Rᵀ` instead of `B`
//!   itself: the transformed matrix `R⁻¹ B R⁻ᵀ` has norm at most `1/σ`, so
//!   the dense eigensolve keeps full absolute accuracy even when the mass
//!   weights span hundreds of orders of magnitude (exponentially decaying
//!   area densities do exactly that). Eigenvalues map back exactly via
//!   `ν = 1/τ − σ`.
//!
//! Orthogonality constraints are imposed by B-orthonormalizing the
//! constraint vectors and projecting the congruence-space pencil onto their
//! complement with Householder reflectors.

use super::lapack;
use super::tridiag::{self, SymTridiag};
use crate::error::{Error, Result};

/// Symmetric bilinear form with banded or dense storage.
#[derive(Debug, Clone)]
pub enum QuadraticForm {
    Tridiag(SymTridiag),
    Dense { n: usize, entries: Vec<f64> },
}

impl QuadraticForm {
    pub fn from_tridiag(t: SymTridiag) -> Self {
        QuadraticForm::Tridiag(t)
    }

    /// Dense constructor; validates symmetry to relative 1e−12 and then
    /// symmetrizes exactly.
    pub fn from_dense(n: usize, mut entries: Vec<f64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::validation(format!(
                "dense form needs {}x{} entries, got {}",
                n,
                n,
                entries.len()
            )));
        }
        let scale = entries.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1e-300);
        for i in 0..n {
            for j in 0..i {
                let x = entries[i * n + j];
                let y = entries[j * n + i];
                if (x - y).abs() > 1e-12 * scale.max(x.abs()).max(y.abs()) {
                    return Err(Error::validation(format!(
                        "form not symmetric at ({i},{j}): {x} vs {y}"
                    )));
                }
                let s = 0.5 * (x + y);
                entries[i * n + j] = s;
                entries[j * n + i] = s;
            }
        }
        Ok(QuadraticForm::Dense { n, entries })
    }

    pub fn identity(n: usize) -> Self {
        QuadraticForm::Tridiag(SymTridiag {
            diag: vec![1.0; n],
            off: vec![0.0; n.saturating_sub(1)],
        })
    }

    pub fn diagonal(d: Vec<f64>) -> Self {
        let n = d.len();
        QuadraticForm::Tridiag(SymTridiag { diag: d, off: vec![0.0; n.saturating_sub(1)] })
    }

    pub fn dim(&self) -> usize {
        match self {
            QuadraticForm::Tridiag(t) => t.len(),
            QuadraticForm::Dense { n, .. } => *n,
        }
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        match self {
            QuadraticForm::Tridiag(t) => t.apply(x),
            QuadraticForm::Dense { n, entries } => {
                let n = *n;
                let mut y = vec![0.0; n];
                for j in 0..n {
                    let xj = x[j];
                    if xj != 0.0 {
                        let col = &entries[j * n..(j + 1) * n];
                        for i in 0..n {
                            y[i] += col[i] * xj;
                        }
                    }
                }
                y
            }
        }
    }

    /// `xᵀ A x`.
    pub fn quad(&self, x: &[f64]) -> f64 {
        match self {
            QuadraticForm::Tridiag(t) => t.quad(x),
            QuadraticForm::Dense { .. } => {
                let y = self.apply(x);
                x.iter().zip(&y).map(|(a, b)| a * b).sum()
            }
        }
    }

    pub fn inner(&self, x: &[f64], y: &[f64]) -> f64 {
        let ay = self.apply(y);
        x.iter().zip(&ay).map(|(a, b)| a * b).sum()
    }

    pub fn to_dense_flat(&self) -> Vec<f64> {
        match self {
            QuadraticForm::Tridiag(t) => t.to_dense(),
            QuadraticForm::Dense { entries, .. } => entries.clone(),
        }
    }

    pub fn is_positive_definite(&self) -> bool {
        match self {
            QuadraticForm::Tridiag(t) => t.is_positive_definite(),
            QuadraticForm::Dense { n, entries } => {
                let mut a = entries.clone();
                lapack::cholesky_lower(&mut a, *n).is_ok()
            }
        }
    }
}

/// The `k` smallest eigenpairs of `A x = ν B x`, ascending, vectors
/// B-normalized. Residual `‖Ax − νBx‖/‖Bx‖ ≤ 1e−10` is enforced per pair.
pub fn sym_gen_eig(
    a: &QuadraticForm,
    b: &QuadraticForm,
    k: usize,
) -> Result<Vec<(f64, Vec<f64>)>> {
    let n = a.dim();
    if b.dim() != n {
        return Err(Error::validation(format!("dimension mismatch {} vs {}", n, b.dim())));
    }
    if k > n {
        return Err(Error::validation(format!("requested {k} eigenpairs of dimension {n}")));
    }
    if !b.is_positive_definite() {
        return Err(Error::NotPositiveDefinite("mass form in sym_gen_eig".into()));
    }

    let pairs = match (a, b) {
        (QuadraticForm::Tridiag(at), QuadraticForm::Tridiag(bt)) => {
            tridiag::smallest_eigenpairs(at, bt, k)?
        }
        _ => dense_constrained_smallest(a, b, k, &[])?,
    };

    for (nu, x) in &pairs {
        let r = pair_residual(a, b, *nu, x);
        if r > 1e-10 {
            return Err(Error::non_convergence(format!(
                "eigenpair residual {r:.3e} exceeds 1e-10 at eigenvalue {nu:.6e}"
            )));
        }
    }
    Ok(pairs)
}

/// Relative residual ‖Ax − νBx‖ / ‖Bx‖ of a candidate pair.
pub fn pair_residual(a: &QuadraticForm, b: &QuadraticForm, nu: f64, x: &[f64]) -> f64 {
    let ax = a.apply(x);
    let bx = b.apply(x);
    let num: f64 = ax.iter().zip(&bx).map(|(p, q)| (p - nu * q) * (p - nu * q)).sum();
    let den: f64 = bx.iter().map(|v| v * v).sum();
    (num / den.max(1e-300)).sqrt()
}

/// Smallest eigenpair of `A` restricted to the B-orthogonal complement of
/// the constraint span.
pub fn constrained_min_eig(
    a: &QuadraticForm,
    b: &QuadraticForm,
    constraints: &[Vec<f64>],
) -> Result<(f64, Vec<f64>)> {
    let n = a.dim();
    if b.dim() != n {
        return Err(Error::validation("dimension mismatch in constrained_min_eig"));
    }
    if constraints.is_empty() {
        return Ok(sym_gen_eig(a, b, 1)?.remove(0));
    }
    if constraints.len() >= n {
        return Err(Error::validation("constraints span the whole space"));
    }
    if !b.is_positive_definite() {
        return Err(Error::NotPositiveDefinite("mass form in constrained_min_eig".into()));
    }

    let ortho = b_orthonormalize(b, constraints)?;
    let pairs = dense_constrained_smallest(a, b, 1, &ortho)?;
    let (nu, x) = pairs.into_iter().next().expect("one pair requested");

    for (j, c) in ortho.iter().enumerate() {
        let ip = b.inner(c, &x);
        if ip.abs() > 1e-10 {
            return Err(Error::non_convergence(format!(
                "constrained eigenvector not B-orthogonal to constraint {j}: {ip:.3e}"
            )));
        }
    }
    Ok((nu, x))
}

/// Modified Gram-Schmidt in the B-inner product, with a linear-dependence
/// check.
pub fn b_orthonormalize(b: &QuadraticForm, vectors: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(vectors.len());
    for (idx, v) in vectors.iter().enumerate() {
        let mut w = v.clone();
        let initial = b.quad(&w).max(1e-300).sqrt();
        for _pass in 0..2 {
            for u in &out {
                let ip = b.inner(u, &w);
                for (wi, ui) in w.iter_mut().zip(u) {
                    *wi -= ip * ui;
                }
            }
        }
        let norm = b.quad(&w);
        if !(norm > 0.0) || norm.sqrt() <= 1e-12 * initial {
            return Err(Error::validation(format!(
                "constraint {idx} linearly dependent after B-orthonormalization"
            )));
        }
        let s = norm.sqrt();
        for wi in &mut w {
            *wi /= s;
        }
        out.push(w);
    }
    Ok(out)
}

/// Dense shifted-congruence solve; `ortho_constraints` must already be
/// B-orthonormal. Returns the `k` smallest eigenpairs on the constrained
/// subspace.
fn dense_constrained_smallest(
    a: &QuadraticForm,
    b: &QuadraticForm,
    k: usize,
    ortho_constraints: &[Vec<f64>],
) -> Result<Vec<(f64, Vec<f64>)>> {
    let n = a.dim();
    let c = ortho_constraints.len();
    if k + c > n {
        return Err(Error::validation(format!(
            "requested {k} pairs with {c} constraints in dimension {n}"
        )));
    }
    let a_flat = a.to_dense_flat();
    let b_flat = b.to_dense_flat();

    // shift: A + σB must be positive definite
    let ta: f64 = (0..n).map(|i| a_flat[i * n + i].abs()).sum();
    let tb: f64 = (0..n).map(|i| b_flat[i * n + i]).sum::<f64>().max(1e-300);
    let mut sigma = (ta / tb).max(1.0);
    let mut chol = Vec::new();
    let mut ok = false;
    for _ in 0..60 {
        chol = vec![0.0; n * n];
        for i in 0..n * n {
            chol[i] = a_flat[i] + sigma * b_flat[i];
        }
        if lapack::cholesky_lower(&mut chol, n).is_ok() {
            ok = true;
            break;
        }
        sigma *= 16.0;
    }
    if !ok {
        return Err(Error::NotPositiveDefinite(
            "could not find a definite shift A + sigma B".into(),
        ));
    }

    // C = R⁻¹ B R⁻ᵀ, with R = chol lower; ‖C‖ ≤ 1/σ
    let mut work = b_flat.clone();
    lapack::solve_lower(&chol, n, &mut work, n); // work = L⁻¹ B
    transpose_in_place(&mut work, n);
    lapack::solve_lower(&chol, n, &mut work, n); // work = L⁻¹ (L⁻¹B)ᵀ = L⁻¹ B L⁻ᵀ
    for i in 0..n {
        for j in 0..i {
            let s = 0.5 * (work[i * n + j] + work[j * n + i]);
            work[i * n + j] = s;
            work[j * n + i] = s;
        }
    }

    // constraints in congruence coordinates: q_j = L⁻¹ (B c_j)
    let mut reflectors: Vec<Vec<f64>> = Vec::with_capacity(c);
    if c > 0 {
        let mut q: Vec<Vec<f64>> = ortho_constraints
            .iter()
            .map(|cj| {
                let mut v = b.apply(cj);
                lapack::solve_lower(&chol, n, &mut v, 1);
                v
            })
            .collect();
        // Householder reduction of [q_0 … q_{c−1}] to upper-triangular form
        for j in 0..c {
            for r in &reflectors {
                apply_reflector_vec(r, &mut q[j]);
            }
            let v = make_reflector(&q[j], j);
            apply_reflector_sym(&v, &mut work, n);
            reflectors.push(v);
        }
    }

    // eigensolve on the complement block
    let m = n - c;
    let mut sub = vec![0.0; m * m];
    for j in 0..m {
        for i in 0..m {
            sub[j * m + i] = work[(j + c) * n + (i + c)];
        }
    }
    let taus = lapack::sym_eig(&mut sub, m)?;

    let mut out = Vec::with_capacity(k);
    for idx in 0..k {
        let col = m - 1 - idx; // largest τ first → smallest ν
        let tau = taus[col];
        if !(tau > 0.0) {
            return Err(Error::NotPositiveDefinite(format!(
                "transformed pencil produced non-positive tau {tau:.3e}"
            )));
        }
        let nu = 1.0 / tau - sigma;
        // embed, undo reflectors (reverse order), map back x = R⁻ᵀ y
        let mut y = vec![0.0; n];
        for i in 0..m {
            y[c + i] = sub[col * m + i];
        }
        for r in reflectors.iter().rev() {
            apply_reflector_vec(r, &mut y);
        }
        lapack::solve_lower_transposed(&chol, n, &mut y, 1);
        let q = b.quad(&y);
        if !(q > 0.0) {
            return Err(Error::NotPositiveDefinite("eigenvector with non-positive B-norm".into()));
        }
        let s = q.sqrt();
        for v in &mut y {
            *v /= s;
        }
        let mut imax = 0;
        for i in 1..n {
            if y[i].abs() > y[imax].abs() {
                imax = i;
            }
        }
        if y[imax] < 0.0 {
            for v in &mut y {
                *v = -*v;
            }
        }
        out.push((nu, y));
    }
    Ok(out)
}

fn transpose_in_place(a: &mut [f64], n: usize) {
    for i in 0..n {
        for j in 0..i {
            a.swap(i * n + j, j * n + i);
        }
    }
}

/// Householder vector zeroing entries of `x` below position `j`
/// (normalized so H = I − 2vvᵀ).
fn make_reflector(x: &[f64], j: usize) -> Vec<f64> {
    let n = x.len();
    let mut v = vec![0.0; n];
    let norm: f64 = x[j..].iter().map(|t| t * t).sum::<f64>().sqrt();
    if norm == 0.0 {
        return v; // zero reflector = identity
    }
    let alpha = if x[j] >= 0.0 { -norm } else { norm };
    v[j..].copy_from_slice(&x[j..]);
    v[j] -= alpha;
    let vnorm: f64 = v[j..].iter().map(|t| t * t).sum::<f64>().sqrt();
    if vnorm == 0.0 {
        return vec![0.0; n];
    }
    for t in &mut v[j..] {
        *t /= vnorm;
    }
    v
}

fn apply_reflector_vec(v: &[f64], x: &mut [f64]) {
    let ip: f64 = v.iter().zip(x.iter()).map(|(a, b)| a * b).sum();
    if ip != 0.0 {
        for (xi, vi) in x.iter_mut().zip(v) {
            *xi -= 2.0 * ip * vi;
        }
    }
}

/// Two-sided application `C ← H C H` with `H = I − 2vvᵀ`.
fn apply_reflector_sym(v: &[f64], cmat: &mut [f64], n: usize) {
    if v.iter().all(|&t| t == 0.0) {
        return;
    }
    // w = C v
    let mut w = vec![0.0; n];
    for j in 0..n {
        let vj = v[j];
        if vj != 0.0 {
            let col = &cmat[j * n..(j + 1) * n];
            for i in 0..n {
                w[i] += col[i] * vj;
            }
        }
    }
    let vcv: f64 = v.iter().zip(&w).map(|(a, b)| a * b).sum();
    // C ← C − 2vwᵀ − 2wvᵀ + 4(vᵀCv) vvᵀ
    for j in 0..n {
        for i in 0..n {
            cmat[j * n + i] +=
                -2.0 * v[i] * w[j] - 2.0 * w[i] * v[j] + 4.0 * vcv * v[i] * v[j];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_from_rows(rows: &[&[f64]]) -> QuadraticForm {
        let n = rows.len();
        let mut flat = vec![0.0; n * n];
        for (i, r) in rows.iter().enumerate() {
            for (j, v) in r.iter().enumerate() {
                flat[j * n + i] = *v;
            }
        }
        QuadraticForm::from_dense(n, flat).unwrap()
    }

    #[test]
    fn identity_pencil() {
        let a = QuadraticForm::identity(5);
        let b = QuadraticForm::identity(5);
        let pairs = sym_gen_eig(&a, &b, 5).unwrap();
        for (nu, _) in pairs {
            assert!((nu - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn diagonal_pencil() {
        let a = QuadraticForm::diagonal(vec![4.0, 0.0, 1.0]);
        let b = QuadraticForm::identity(3);
        let pairs = sym_gen_eig(&a, &b, 3).unwrap();
        let vals: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        assert!((vals[0] - 0.0).abs() < 1e-12);
        assert!((vals[1] - 1.0).abs() < 1e-12);
        assert!((vals[2] - 4.0).abs() < 1e-12);
    }

    #[test]
    fn dense_matches_tridiag_route() {
        // same pencil through both routes
        let n = 60;
        let t_a = SymTridiag {
            diag: (0..n).map(|i| 2.0 + (i as f64 * 0.1).sin().abs()).collect(),
            off: vec![-0.9; n - 1],
        };
        let t_b = SymTridiag {
            diag: (0..n).map(|i| 1.0 + 0.3 * (i as f64 * 0.2).cos()).collect(),
            off: vec![0.1; n - 1],
        };
        let a_tri = QuadraticForm::from_tridiag(t_a.clone());
        let b_tri = QuadraticForm::from_tridiag(t_b.clone());
        let a_dense = QuadraticForm::from_dense(n, t_a.to_dense()).unwrap();
        let b_dense = QuadraticForm::from_dense(n, t_b.to_dense()).unwrap();

        let p1 = sym_gen_eig(&a_tri, &b_tri, 4).unwrap();
        let p2 = sym_gen_eig(&a_dense, &b_dense, 4).unwrap();
        for ((v1, _), (v2, _)) in p1.iter().zip(&p2) {
            assert!((v1 - v2).abs() < 1e-10 * (1.0 + v1.abs()), "{v1} vs {v2}");
        }
    }

    #[test]
    fn not_pd_mass_rejected() {
        let a = QuadraticForm::identity(4);
        let b = QuadraticForm::diagonal(vec![1.0, -1.0, 1.0, 1.0]);
        assert!(matches!(sym_gen_eig(&a, &b, 1), Err(Error::NotPositiveDefinite(_))));
    }

    #[test]
    fn constrained_empty_is_unconstrained() {
        let a = QuadraticForm::diagonal(vec![3.0, 1.0, 7.0]);
        let b = QuadraticForm::identity(3);
        let (nu, _) = constrained_min_eig(&a, &b, &[]).unwrap();
        assert!((nu - 1.0).abs() < 1e-12);
    }

    #[test]
    fn constrained_by_ground_gives_second() {
        let a = dense_from_rows(&[
            &[2.0, -1.0, 0.0],
            &[-1.0, 2.0, -1.0],
            &[0.0, -1.0, 2.0],
        ]);
        let b = QuadraticForm::identity(3);
        let pairs = sym_gen_eig(&a, &b, 2).unwrap();
        let ground = pairs[0].1.clone();
        let (nu, x) = constrained_min_eig(&a, &b, &[ground]).unwrap();
        assert!((nu - pairs[1].0).abs() < 1e-10, "{nu} vs {}", pairs[1].0);
        let ip: f64 = b.inner(&pairs[0].1, &x);
        assert!(ip.abs() < 1e-10);
    }

    /// Brute-force oracle: build an explicit B-orthonormal basis of the
    /// constraint complement, project the pencil onto it densely, and solve.
    fn projected_oracle(
        a: &QuadraticForm,
        b: &QuadraticForm,
        constraints: &[Vec<f64>],
    ) -> f64 {
        let n = a.dim();
        let cons = b_orthonormalize(b, constraints).unwrap();
        let mut basis: Vec<Vec<f64>> = Vec::new();
        for i in 0..n {
            let mut v = vec![0.0; n];
            v[i] = 1.0;
            for u in cons.iter().chain(basis.iter()) {
                let ip = b.inner(u, &v);
                for (vi, ui) in v.iter_mut().zip(u) {
                    *vi -= ip * ui;
                }
            }
            let norm = b.quad(&v);
            if norm.sqrt() > 1e-8 {
                let s = norm.sqrt();
                for vi in &mut v {
                    *vi /= s;
                }
                basis.push(v);
            }
        }
        let m = basis.len();
        assert_eq!(m, n - constraints.len());
        let mut pa = vec![0.0; m * m];
        let mut pb = vec![0.0; m * m];
        for j in 0..m {
            for i in 0..m {
                pa[j * m + i] = a.inner(&basis[i], &basis[j]);
                pb[j * m + i] = b.inner(&basis[i], &basis[j]);
            }
        }
        let pa = QuadraticForm::from_dense(m, pa).unwrap();
        let pb = QuadraticForm::from_dense(m, pb).unwrap();
        sym_gen_eig(&pa, &pb, 1).unwrap()[0].0
    }

    #[test]
    fn constrained_random_matches_projection_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _case in 0..5 {
            let n = 8;
            let mut raw = vec![0.0; n * n];
            for v in raw.iter_mut() {
                *v = rng.gen_range(-1.0..1.0);
            }
            // A = RᵀR - 0.5 I  (symmetric, possibly indefinite)
            let mut a_flat = vec![0.0; n * n];
            for i in 0..n {
                for j in 0..n {
                    let mut s = 0.0;
                    for l in 0..n {
                        s += raw[l * n + i] * raw[l * n + j];
                    }
                    a_flat[j * n + i] = s - if i == j { 0.5 } else { 0.0 };
                }
            }
            // B = SᵀS + I (SPD)
            let mut raw_b = vec![0.0; n * n];
            for v in raw_b.iter_mut() {
                *v = rng.gen_range(-0.5..0.5);
            }
            let mut b_flat = vec![0.0; n * n];
            for i in 0..n {
                for j in 0..n {
                    let mut s = 0.0;
                    for l in 0..n {
                        s += raw_b[l * n + i] * raw_b[l * n + j];
                    }
                    b_flat[j * n + i] = s + if i == j { 1.0 } else { 0.0 };
                }
            }
            let a = QuadraticForm::from_dense(n, a_flat).unwrap();
            let b = QuadraticForm::from_dense(n, b_flat).unwrap();
            let c1: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let c2: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let constraints = vec![c1, c2];

            let (nu, _) = constrained_min_eig(&a, &b, &constraints).unwrap();
            let oracle = projected_oracle(&a, &b, &constraints);
            assert!((nu - oracle).abs() < 1e-10 * (1.0 + nu.abs()), "{nu} vs {oracle}");
        }
    }

    #[test]
    fn constrained_monotone_in_constraints() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let n = 10;
        let mut a_flat = vec![0.0; n * n];
        for i in 0..n {
            a_flat[i * n + i] = rng.gen_range(0.5..4.0);
            if i + 1 < n {
                let v = rng.gen_range(-0.4..0.4);
                a_flat[i * n + i + 1] = v;
                a_flat[(i + 1) * n + i] = v;
            }
        }
        let a = QuadraticForm::from_dense(n, a_flat).unwrap();
        let b = QuadraticForm::identity(n);
        let c1: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let c2: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();

        let (nu0, _) = constrained_min_eig(&a, &b, &[]).unwrap();
        let (nu1, _) = constrained_min_eig(&a, &b, &[c1.clone()]).unwrap();
        let (nu2, _) = constrained_min_eig(&a, &b, &[c1, c2]).unwrap();
        assert!(nu1 >= nu0 - 1e-12);
        assert!(nu2 >= nu1 - 1e-12);
    }

    #[test]
    fn constraints_spanning_space_rejected() {
        let a = QuadraticForm::identity(3);
        let b = QuadraticForm::identity(3);
        let cons = vec![
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
        ];
        assert!(constrained_min_eig(&a, &b, &cons).is_err());
    }

    #[test]
    fn congruence_scaling_invariance() {
        let n = 24;
        let t_a = SymTridiag {
            diag: (0..n).map(|i| 2.0 + (i as f64 * 0.3).sin()).collect(),
            off: vec![-0.7; n - 1],
        };
        let t_b = SymTridiag { diag: vec![1.0; n], off: vec![0.2; n - 1] };
        let scale = 3.7e-5;
        let a1 = QuadraticForm::from_tridiag(t_a.clone());
        let b1 = QuadraticForm::from_tridiag(t_b.clone());
        let a2 = QuadraticForm::from_tridiag(SymTridiag {
            diag: t_a.diag.iter().map(|v| v * scale).collect(),
            off: t_a.off.iter().map(|v| v * scale).collect(),
        });
        let b2 = QuadraticForm::from_tridiag(SymTridiag {
            diag: t_b.diag.iter().map(|v| v * scale).collect(),
            off: t_b.off.iter().map(|v| v * scale).collect(),
        });
        let p1 = sym_gen_eig(&a1, &b1, 3).unwrap();
        let p2 = sym_gen_eig(&a2, &b2, 3).unwrap();
        for ((v1, _), (v2, _)) in p1.iter().zip(&p2) {
            assert!((v1 - v2).abs() <= 1e-9 * v1.abs().max(1.0));
        }
    }
}
