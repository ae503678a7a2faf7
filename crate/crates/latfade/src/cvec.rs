//! Conversions between vectors in `C^k` and their realifications in `R^{2k}`.
//!
//! All Euclidean geometry in this crate runs in real coordinates. A complex
//! vector `(x_1, ..., x_k)` maps to the interleaved real vector
//! `(re x_1, im x_1, ..., re x_k, im x_k)`, which preserves the norm.

use nalgebra::DVector;
use num_complex::Complex64;

/// Interleave a complex vector into `2k` real coordinates.
pub fn to_real(x: &[Complex64]) -> DVector<f64> {
    let mut out = DVector::zeros(2 * x.len());
    for (i, z) in x.iter().enumerate() {
        out[2 * i] = z.re;
        out[2 * i + 1] = z.im;
    }
    out
}

/// Inverse of [`to_real`]. Panics if the length is odd.
pub fn to_complex(r: &DVector<f64>) -> Vec<Complex64> {
    assert!(r.len() % 2 == 0, "realified vector must have even length");
    (0..r.len() / 2)
        .map(|i| Complex64::new(r[2 * i], r[2 * i + 1]))
        .collect()
}

/// Squared Euclidean norm of a complex vector.
pub fn norm_sq(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum()
}

/// Squared Euclidean distance between two complex vectors.
pub fn dist_sq(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum()
}

/// Elementwise difference `a - b`.
pub fn sub(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_preserves_norm() {
        let x = vec![Complex64::new(3.0, -4.0), Complex64::new(0.5, 2.0)];
        let r = to_real(&x);
        assert_eq!(r.len(), 4);
        assert!((r.norm_squared() - norm_sq(&x)).abs() < 1e-15);
        assert_eq!(to_complex(&r), x);
    }
}
