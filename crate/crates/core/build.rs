fn main() {
    // System OpenBLAS ships the LAPACK symbols we need (dsyevd, dpotrf).
    println!("cargo:rustc-link-lib=dylib=openblas");
    println!("cargo:rerun-if-changed=build.rs");
}
