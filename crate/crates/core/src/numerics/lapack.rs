//! Thin safe wrappers around the handful of LAPACK/BLAS routines we use.
//!
//! Matrices are column-major `n × n` buffers. We link the system OpenBLAS,
//! which bundles the LAPACK symbols.

use crate::error::{Error, Result};
use std::os::raw::c_char;

extern "C" {
    fn dsyevd_(
        jobz: *const c_char,
        uplo: *const c_char,
        n: *const i32,
        a: *mut f64,
        lda: *const i32,
        w: *mut f64,
        work: *mut f64,
        lwork: *const i32,
        iwork: *mut i32,
        liwork: *const i32,
        info: *mut i32,
    );

    fn dpotrf_(
        uplo: *const c_char,
        n: *const i32,
        a: *mut f64,
        lda: *const i32,
        info: *mut i32,
    );

    fn dtrsm_(
        side: *const c_char,
        uplo: *const c_char,
        transa: *const c_char,
        diag: *const c_char,
        m: *const i32,
        n: *const i32,
        alpha: *const f64,
        a: *const f64,
        lda: *const i32,
        b: *mut f64,
        ldb: *const i32,
    );

    fn dgesv_(
        n: *const i32,
        nrhs: *const i32,
        a: *mut f64,
        lda: *const i32,
        ipiv: *mut i32,
        b: *mut f64,
        ldb: *const i32,
        info: *mut i32,
    );
}

/// Eigendecomposition of a symmetric matrix (divide and conquer).
///
/// On return `a` holds the eigenvectors as columns and the returned vector
/// the eigenvalues in ascending order.
pub fn sym_eig(a: &mut [f64], n: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n);
    if n == 0 {
        return Ok(Vec::new());
    }
    let ni = n as i32;
    let mut w = vec![0.0; n];
    let mut info = 0i32;
    let jobz = b'V' as c_char;
    let uplo = b'L' as c_char;
    // workspace query
    let mut wkopt = 0.0f64;
    let mut iwkopt = 0i32;
    let m1 = -1i32;
    unsafe {
        dsyevd_(
            &jobz, &uplo, &ni, a.as_mut_ptr(), &ni, w.as_mut_ptr(),
            &mut wkopt, &m1, &mut iwkopt, &m1, &mut info,
        );
    }
    if info != 0 {
        return Err(Error::non_convergence(format!("dsyevd workspace query failed: info={info}")));
    }
    let lwork = wkopt as i32;
    let liwork = iwkopt.max(1);
    let mut work = vec![0.0f64; lwork.max(1) as usize];
    let mut iwork = vec![0i32; liwork as usize];
    unsafe {
        dsyevd_(
            &jobz, &uplo, &ni, a.as_mut_ptr(), &ni, w.as_mut_ptr(),
            work.as_mut_ptr(), &lwork, iwork.as_mut_ptr(), &liwork, &mut info,
        );
    }
    if info != 0 {
        return Err(Error::non_convergence(format!("dsyevd failed: info={info}")));
    }
    Ok(w)
}

/// Cholesky factorization `a = L Lᵀ` in place (lower triangle).
/// Returns Err if the matrix is not positive definite.
pub fn cholesky_lower(a: &mut [f64], n: usize) -> Result<()> {
    assert_eq!(a.len(), n * n);
    if n == 0 {
        return Ok(());
    }
    let ni = n as i32;
    let mut info = 0i32;
    let uplo = b'L' as c_char;
    unsafe {
        dpotrf_(&uplo, &ni, a.as_mut_ptr(), &ni, &mut info);
    }
    if info != 0 {
        return Err(Error::NotPositiveDefinite(format!(
            "dpotrf failed at leading minor {info}"
        )));
    }
    // zero the strict upper triangle so the buffer is a clean L
    for j in 1..n {
        for i in 0..j {
            a[j * n + i] = 0.0;
        }
    }
    Ok(())
}

/// Solve `L X = B` in place (`B` is n × m, column-major), L lower triangular.
pub fn solve_lower(l: &[f64], n: usize, b: &mut [f64], m: usize) {
    assert_eq!(l.len(), n * n);
    assert_eq!(b.len(), n * m);
    if n == 0 || m == 0 {
        return;
    }
    let (ni, mi) = (n as i32, m as i32);
    let one = 1.0f64;
    unsafe {
        dtrsm_(
            &(b'L' as c_char), &(b'L' as c_char), &(b'N' as c_char), &(b'N' as c_char),
            &ni, &mi, &one, l.as_ptr(), &ni, b.as_mut_ptr(), &ni,
        );
    }
}

/// Solve `Lᵀ X = B` in place (`B` is n × m, column-major), L lower triangular.
pub fn solve_lower_transposed(l: &[f64], n: usize, b: &mut [f64], m: usize) {
    assert_eq!(l.len(), n * n);
    assert_eq!(b.len(), n * m);
    if n == 0 || m == 0 {
        return;
    }
    let (ni, mi) = (n as i32, m as i32);
    let one = 1.0f64;
    unsafe {
        dtrsm_(
            &(b'L' as c_char), &(b'L' as c_char), &(b'T' as c_char), &(b'N' as c_char),
            &ni, &mi, &one, l.as_ptr(), &ni, b.as_mut_ptr(), &ni,
        );
    }
}

/// Solve the dense linear system `A x = b` (general, partial pivoting).
/// `a` is destroyed.
pub fn solve_dense(a: &mut [f64], n: usize, b: &mut [f64]) -> Result<()> {
    assert_eq!(a.len(), n * n);
    assert_eq!(b.len(), n);
    if n == 0 {
        return Ok(());
    }
    let ni = n as i32;
    let one = 1i32;
    let mut ipiv = vec![0i32; n];
    let mut info = 0i32;
    unsafe {
        dgesv_(&ni, &one, a.as_mut_ptr(), &ni, ipiv.as_mut_ptr(), b.as_mut_ptr(), &ni, &mut info);
    }
    if info != 0 {
        return Err(Error::non_convergence(format!("dgesv failed: info={info}")));
    }
    Ok(())
}
