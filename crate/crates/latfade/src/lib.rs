//! Lattice codes for linear fading channels.
//!
//! This crate builds full-rank lattices in `C^k`, measures how well they pack
//! under channel fading (classical and reduced Hermite invariants, product
//! distances), constructs lattices from totally complex number fields via the
//! canonical embedding, carves finite power-constrained codebooks, and runs
//! Monte Carlo transmission experiments with maximum-likelihood decoding.
//!
//! The narrative guide lives in `book/`; its code snippets are compiled into
//! this crate as doc-tests (see [`guide`]), so the book cannot drift from the
//! API.

pub mod cvec;
pub mod lattice;

pub use num_complex::Complex64;

/// Shorthand for building a complex scalar, used throughout the guide.
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
