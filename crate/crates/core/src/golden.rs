//! Golden-ratio constants and the fifth root of unity used throughout.

use num_complex::Complex64;
use std::f64::consts::PI;

/// `p = (√5 − 1)/2` and its inverse `(√5 + 1)/2`, always derived from `√5`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenConstants {
    pub p: f64,
    pub p_inv: f64,
}

impl GoldenConstants {
    pub fn new() -> Self {
        Self::with_sqrt5(5f64.sqrt())
    }

    /// Constants built from a chosen square root of five. Passing `-√5` gives the
    /// Galois-conjugate pair `(-p⁻¹, -p)`.
    pub fn with_sqrt5(sqrt5: f64) -> Self {
        GoldenConstants {
            p: (sqrt5 - 1.0) / 2.0,
            p_inv: (sqrt5 + 1.0) / 2.0,
        }
    }
}

impl Default for GoldenConstants {
    fn default() -> Self {
        Self::new()
    }
}

pub fn sqrt5() -> f64 {
    5f64.sqrt()
}

/// `η = exp(−2πi/5)`, the eigenvalue of `T0` on the row μ = 1.
pub fn eta() -> Complex64 {
    Complex64::from_polar(1.0, -2.0 * PI / 5.0)
}

/// `η^k` with the exponent reduced mod 5 so that equal exponents give bit-equal values.
pub fn eta_pow(k: i32) -> Complex64 {
    let k = k.rem_euclid(5);
    Complex64::from_polar(1.0, -2.0 * PI * f64::from(k) / 5.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_identities() {
        let g = GoldenConstants::new();
        assert!((g.p * g.p_inv - 1.0).abs() < 1e-15);
        assert!((g.p + g.p_inv - sqrt5()).abs() < 1e-15);
        assert!((g.p_inv - g.p - 1.0).abs() < 1e-15);
    }

    #[test]
    fn p_is_eta_plus_inverse() {
        let g = GoldenConstants::new();
        let e = eta();
        assert!(((e + e.inv()).re - g.p).abs() < 1e-15);
        assert!(((1.0 + e + e.inv()).re - g.p_inv).abs() < 1e-15);
    }

    #[test]
    fn conjugate_constants() {
        let g = GoldenConstants::with_sqrt5(-sqrt5());
        let h = GoldenConstants::new();
        assert!((g.p + h.p_inv).abs() < 1e-15);
        assert!((g.p_inv + h.p).abs() < 1e-15);
    }
}
