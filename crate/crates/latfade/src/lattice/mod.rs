//! Full-rank lattices in `C^k`, realified to `R^{2k}`.
//!
//! A lattice is the integer span of `2k` generators that are linearly
//! independent over `R`. The type caches the fundamental-parallelotope volume
//! and the Gram matrix, and precomputes a size-reduced basis used by the
//! point enumerator. Enumeration is exact for the requested ball: the tree
//! search is padded against floating-point pruning and every candidate is
//! re-checked against the true distance.

mod enumerate;
mod reduction;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cvec;

/// Relative tolerance below which the generator matrix counts as singular.
pub const RANK_TOL: f64 = 1e-10;

/// Default cap on the number of points an enumeration may return.
pub const MAX_POINTS_DEFAULT: usize = 10_000_000;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("expected {expected} generators of complex dimension {k}, got {got}")]
    DimensionMismatch { k: usize, expected: usize, got: usize },
    #[error("generators are not linearly independent over R (relative determinant below {RANK_TOL:e})")]
    RankDeficient,
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(f64),
    #[error("enumeration exceeded the cap of {cap} points; shrink the radius")]
    Overflow { cap: usize },
}

/// A point of a lattice: integer coordinates in the generator basis plus its
/// embedding in `R^{2k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticePoint {
    coeffs: Vec<i64>,
    real: DVector<f64>,
}

impl LatticePoint {
    /// Integer coordinates in the owning lattice's (original) generator basis.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Realified embedding in `R^{2k}`.
    pub fn real(&self) -> &DVector<f64> {
        &self.real
    }

    /// Embedding as a complex vector in `C^k`.
    pub fn complex(&self) -> Vec<Complex64> {
        cvec::to_complex(&self.real)
    }

    /// Squared Euclidean norm of the embedding.
    pub fn norm_sq(&self) -> f64 {
        self.real.norm_squared()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Full-rank lattice in `C^k`, stored as a real `2k x 2k` generator matrix
/// (one column per generator, coordinates interleaved re/im).
#[derive(Debug, Clone)]
pub struct Lattice {
    k: usize,
    /// Columns are the original generators.
    basis: DMatrix<f64>,
    volume: f64,
    gram: DMatrix<f64>,
    /// Size-reduced basis used for enumeration, `reduced = basis * transform`.
    reduced: DMatrix<f64>,
    /// Unimodular map from reduced coefficients to original coefficients.
    transform: DMatrix<i64>,
}

impl Lattice {
    /// Build a lattice from `2k` complex generators of dimension `k`.
    pub fn from_complex_generators(
        k: usize,
        generators: &[Vec<Complex64>],
    ) -> Result<Self, LatticeError> {
        if k == 0 || generators.len() != 2 * k || generators.iter().any(|g| g.len() != k) {
            return Err(LatticeError::DimensionMismatch {
                k,
                expected: 2 * k,
                got: generators.len(),
            });
        }
        let mut basis = DMatrix::zeros(2 * k, 2 * k);
        for (j, g) in generators.iter().enumerate() {
            basis.set_column(j, &cvec::to_real(g));
        }
        Self::from_real_basis(k, basis)
    }

    /// Build a lattice from a real `2k x 2k` generator matrix (columns are
    /// generators in interleaved re/im coordinates).
    pub fn from_real_basis(k: usize, basis: DMatrix<f64>) -> Result<Self, LatticeError> {
        let n = 2 * k;
        if basis.nrows() != n || basis.ncols() != n {
            return Err(LatticeError::DimensionMismatch {
                k,
                expected: n,
                got: basis.ncols(),
            });
        }
        let svd = basis.clone().svd(false, false);
        let smax = svd.singular_values.max();
        let smin = svd.singular_values.min();
        if !(smax > 0.0) || smin <= RANK_TOL * smax {
            return Err(LatticeError::RankDeficient);
        }
        let volume = basis.determinant().abs();
        let gram = basis.transpose() * &basis;
        let (reduced, transform) = reduction::lll_reduce(&basis, 0.99);
        Ok(Lattice {
            k,
            basis,
            volume,
            gram,
            reduced,
            transform,
        })
    }

    /// Complex ambient dimension `k` (real dimension is `2k`).
    pub fn k(&self) -> usize {
        self.k
    }

    /// Real dimension `2k`.
    pub fn dim(&self) -> usize {
        2 * self.k
    }

    /// Volume of the fundamental parallelotope (`2k`-dimensional).
    pub fn volume(&self) -> f64 {
        self.volume
    }

    /// Gram matrix of the original generators.
    pub fn gram(&self) -> &DMatrix<f64> {
        &self.gram
    }

    /// Original generator matrix (columns are generators).
    pub fn basis(&self) -> &DMatrix<f64> {
        &self.basis
    }

    /// Generator `j` as a complex vector.
    pub fn generator(&self, j: usize) -> Vec<Complex64> {
        cvec::to_complex(&self.basis.column(j).into_owned())
    }

    /// The lattice point with the given integer coefficients.
    pub fn point(&self, coeffs: &[i64]) -> LatticePoint {
        let u = DVector::from_iterator(coeffs.len(), coeffs.iter().map(|&c| c as f64));
        LatticePoint {
            coeffs: coeffs.to_vec(),
            real: &self.basis * u,
        }
    }

    /// Scale every generator by `c > 0`; the volume scales by `c^{2k}`.
    pub fn scale(&self, c: f64) -> Result<Self, LatticeError> {
        if !(c > 0.0) {
            return Err(LatticeError::NonPositiveScale(c));
        }
        Ok(Lattice {
            k: self.k,
            basis: &self.basis * c,
            volume: self.volume * c.powi(2 * self.k as i32),
            gram: &self.gram * (c * c),
            reduced: &self.reduced * c,
            transform: self.transform.clone(),
        })
    }

    /// Rescale to unit volume.
    pub fn normalized(&self) -> Self {
        let c = self.volume.powf(-1.0 / (2.0 * self.k as f64));
        self.scale(c).expect("volume is positive")
    }

    /// All lattice points within Euclidean distance `radius` of `center`
    /// (closed ball), in lexicographic order of their coefficients.
    ///
    /// Fails with [`LatticeError::Overflow`] if more than `max_points` points
    /// qualify.
    pub fn points_in_ball(
        &self,
        radius: f64,
        center: &[Complex64],
        max_points: usize,
    ) -> Result<Vec<LatticePoint>, LatticeError> {
        assert!(radius > 0.0, "radius must be positive");
        assert_eq!(center.len(), self.k, "center must live in C^k");
        let t = cvec::to_real(center);
        let raw = enumerate::enumerate_ball(&self.reduced, &t, radius, max_points)?;
        let mut points: Vec<LatticePoint> = raw
            .into_iter()
            .map(|u| {
                let coeffs: Vec<i64> = (0..self.dim())
                    .map(|i| (0..self.dim()).map(|j| self.transform[(i, j)] * u[j]).sum())
                    .collect();
                self.point(&coeffs)
            })
            .collect();
        points.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        Ok(points)
    }

    /// Minimal nonzero squared norm and one achiever.
    ///
    /// The search ball has the length of the shortest reduced generator, which
    /// always contains a nonzero point, so the result is exact.
    pub fn shortest_vector(&self) -> (f64, LatticePoint) {
        let radius = (0..self.dim())
            .map(|j| self.reduced.column(j).norm())
            .fold(f64::INFINITY, f64::min)
            * (1.0 + 1e-12);
        let center = vec![Complex64::new(0.0, 0.0); self.k];
        let points = self
            .points_in_ball(radius, &center, MAX_POINTS_DEFAULT)
            .expect("shortest-vector ball is bounded by a generator length");
        points
            .into_iter()
            .filter(|p| !p.is_zero())
            .map(|p| (p.norm_sq(), p))
            .min_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.coeffs.cmp(&b.1.coeffs)))
            .expect("a nonzero generator lies inside the search ball")
    }

    /// Classical Hermite invariant: shortest nonzero squared norm divided by
    /// `Vol^{1/k}`. Scale-invariant.
    pub fn hermite_invariant(&self) -> f64 {
        self.shortest_vector().0 / self.volume.powf(1.0 / self.k as f64)
    }
}

/// JSON wire form of a lattice: `k`, one row per generator (interleaved
/// re/im), and an optional certified floor for the coordinate-product form
/// carried along from number-field constructions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeFile {
    pub k: usize,
    pub generators: Vec<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product_floor: Option<f64>,
}

impl LatticeFile {
    pub fn from_lattice(l: &Lattice, product_floor: Option<f64>) -> Self {
        let generators = (0..l.dim())
            .map(|j| l.basis.column(j).iter().copied().collect())
            .collect();
        LatticeFile {
            k: l.k(),
            generators,
            product_floor,
        }
    }

    pub fn to_lattice(&self) -> Result<Lattice, LatticeError> {
        let n = 2 * self.k;
        if self.generators.len() != n || self.generators.iter().any(|g| g.len() != n) {
            return Err(LatticeError::DimensionMismatch {
                k: self.k,
                expected: n,
                got: self.generators.len(),
            });
        }
        let mut basis = DMatrix::zeros(n, n);
        for (j, g) in self.generators.iter().enumerate() {
            basis.set_column(j, &DVector::from_column_slice(g));
        }
        Lattice::from_real_basis(self.k, basis)
    }
}

#[cfg(test)]
mod tests;
