//! Restriction of the SO(3) representations `D^ℓ`, ℓ ≤ 3, to **I**.
//!
//! `D^ℓ` is built from each element's rotation via the z-y-z Euler factorization
//! with Condon–Shortley phases and components ordered `m = ℓ, ℓ−1, …, −ℓ`.

use nalgebra::Matrix3;
use num_complex::Complex64;
use serde::Serialize;

use super::{IrrepLabel, IrrepSet};
use crate::error::{IcosaError, Result};
use crate::group::IcosahedralGroup;
use crate::linalg::{max_abs_diff, real, CMatrix};

/// Gate for the elementwise comparison.
pub const SUBDUCTION_TOLERANCE: f64 = 1e-8;

fn factorial(n: i64) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// `(α, β, γ)` with `R = Rz(α) Ry(β) Rz(γ)`.
pub fn euler_zyz(r: &Matrix3<f64>) -> (f64, f64, f64) {
    let beta = r[(2, 2)].clamp(-1.0, 1.0).acos();
    let sb = beta.sin();
    if sb > 1e-12 {
        let alpha = r[(1, 2)].atan2(r[(0, 2)]);
        let gamma = r[(2, 1)].atan2(-r[(2, 0)]);
        (alpha, beta, gamma)
    } else if r[(2, 2)] > 0.0 {
        (r[(1, 0)].atan2(r[(0, 0)]), 0.0, 0.0)
    } else {
        ((-r[(1, 0)]).atan2(-r[(0, 0)]), std::f64::consts::PI, 0.0)
    }
}

/// `d^ℓ_{m'm}(β) = ⟨ℓ m'| exp(−iβ J_y) |ℓ m⟩`, rows/columns ordered `ℓ..−ℓ`.
pub fn wigner_small_d(ell: usize, beta: f64) -> CMatrix {
    let j = ell as i64;
    let n = 2 * ell + 1;
    let (cb, sb) = ((beta / 2.0).cos(), (beta / 2.0).sin());
    CMatrix::from_fn(n, n, |row, col| {
        let mp = j - row as i64;
        let m = j - col as i64;
        let pref = (factorial(j + mp) * factorial(j - mp) * factorial(j + m) * factorial(j - m)).sqrt();
        let lo = 0.max(m - mp);
        let hi = (j + m).min(j - mp);
        let sum: f64 = (lo..=hi)
            .map(|s| {
                let sign = if (mp - m + s) % 2 == 0 { 1.0 } else { -1.0 };
                let den = factorial(j + m - s) * factorial(s) * factorial(mp - m + s) * factorial(j - mp - s);
                sign * cb.powi((2 * j + m - mp - 2 * s) as i32) * sb.powi((mp - m + 2 * s) as i32) / den
            })
            .sum();
        real(pref * sum)
    })
}

/// Wigner matrix `D^ℓ(R)` of an active rotation.
pub fn wigner_d(ell: usize, rotation: &Matrix3<f64>) -> CMatrix {
    let (alpha, beta, gamma) = euler_zyz(rotation);
    let j = ell as i64;
    let phase = |angle: f64| {
        CMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            2 * ell + 1,
            (0..=2 * j).map(|k| Complex64::from_polar(1.0, -((j - k) as f64) * angle)),
        ))
    };
    phase(alpha) * wigner_small_d(ell, beta) * phase(gamma)
}

/// Change of basis with `X⁻¹ D³(R) X = D^{T2}(R) ⊕ D^G(R)`.
pub fn subduction_x_matrix() -> CMatrix {
    let a = (2.0f64 / 5.0).sqrt();
    let b = (3.0f64 / 5.0).sqrt();
    #[rustfmt::skip]
    let rows = [
        0.0, 0.0, -a, 0.0, 0.0, 0.0, b,
        b, 0.0, 0.0, -a, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0,
        0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0,
        0.0, 0.0, b, 0.0, 0.0, 0.0, a,
        a, 0.0, 0.0, b, 0.0, 0.0, 0.0,
    ];
    CMatrix::from_row_iterator(7, 7, rows.into_iter().map(real))
}

#[derive(Debug, Clone, Serialize)]
pub struct SubductionReport {
    pub ell: usize,
    /// Irreps the restriction is compared against, in block order.
    pub targets: Vec<IrrepLabel>,
    /// Max over rotations of the entrywise deviation after the fixed basis change.
    pub max_deviation: f64,
    /// Max over rotations of `|tr D^ℓ(R) − Σ χ_target(R)|`.
    pub character_deviation: f64,
    /// Max deviation of the Wigner matrices from a homomorphism.
    pub homomorphism_deviation: f64,
}

fn direct_sum(blocks: &[&CMatrix]) -> CMatrix {
    let n: usize = blocks.iter().map(|b| b.nrows()).sum();
    let mut out = CMatrix::zeros(n, n);
    let mut at = 0;
    for b in blocks {
        let k = b.nrows();
        out.view_mut((at, at), (k, k)).copy_from(*b);
        at += k;
    }
    out
}

/// Compare `D^ℓ` restricted to **I** with the icosahedral irreps, ℓ ∈ 0..=3.
pub fn subduction_check(group: &IcosahedralGroup, irreps: &IrrepSet, ell: usize) -> Result<SubductionReport> {
    let targets = match ell {
        0 => vec![IrrepLabel::A],
        1 => vec![IrrepLabel::T1],
        2 => vec![IrrepLabel::H],
        3 => vec![IrrepLabel::T2, IrrepLabel::G],
        _ => {
            return Err(IcosaError::InvalidArgument(format!(
                "subduction is tabulated for ℓ ≤ 3, got {ell}"
            )))
        }
    };
    let x = if ell == 3 {
        Some(subduction_x_matrix())
    } else {
        None
    };
    let x_inv = x.as_ref().map(|m| m.adjoint());

    let wigner: Vec<CMatrix> = group
        .rotations()
        .iter()
        .map(|r| wigner_d(ell, &r.rotation.matrix()))
        .collect();

    let mut max_deviation = 0.0f64;
    let mut character_deviation = 0.0f64;
    for (id, w) in wigner.iter().enumerate() {
        let blocks: Vec<&CMatrix> = targets.iter().map(|&t| irreps.rep_matrix(t, id)).collect();
        let expected = direct_sum(&blocks);
        let aligned = match (&x, &x_inv) {
            (Some(x), Some(xi)) => xi * w * x,
            _ => w.clone(),
        };
        max_deviation = max_deviation.max(max_abs_diff(&aligned, &expected));
        character_deviation = character_deviation.max((w.trace() - expected.trace()).norm());
    }

    let mut homomorphism_deviation = 0.0f64;
    for x in 0..wigner.len() {
        for y in 0..wigner.len() {
            let xy = group.multiply(x, y);
            homomorphism_deviation =
                homomorphism_deviation.max(max_abs_diff(&wigner[xy], &(&wigner[x] * &wigner[y])));
        }
    }

    if max_deviation > SUBDUCTION_TOLERANCE {
        return Err(IcosaError::ConventionMismatch {
            ell,
            deviation: max_deviation,
        });
    }
    Ok(SubductionReport {
        ell,
        targets,
        max_deviation,
        character_deviation,
        homomorphism_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Rotation;
    use crate::golden::eta_pow;

    #[test]
    fn euler_round_trip() {
        let rot = Rotation::new(nalgebra::Vector3::new(0.3, -0.5, 0.8), 2.1).matrix();
        let (a, b, g) = euler_zyz(&rot);
        let rz = |t: f64| Rotation::new(nalgebra::Vector3::z(), t).matrix();
        let ry = Rotation::new(nalgebra::Vector3::y(), b).matrix();
        assert!((rz(a) * ry * rz(g) - rot).norm() < 1e-12);
    }

    #[test]
    fn small_d_ell_one() {
        let b = 0.7f64;
        let d = wigner_small_d(1, b);
        assert!((d[(0, 0)].re - (1.0 + b.cos()) / 2.0).abs() < 1e-14);
        assert!((d[(0, 1)].re + b.sin() / 2f64.sqrt()).abs() < 1e-14);
        assert!((d[(1, 1)].re - b.cos()).abs() < 1e-14);
    }

    #[test]
    fn x_is_orthogonal() {
        let x = subduction_x_matrix();
        assert!(max_abs_diff(&(x.adjoint() * &x), &CMatrix::identity(7, 7)) < 1e-15);
    }

    #[test]
    fn z_rotation_is_diagonal() {
        let g = IcosahedralGroup::new().unwrap();
        let t0 = g.element(g.lookup("T0").unwrap()).rotation.matrix();
        let d = wigner_d(2, &t0);
        for (k, mu) in [2, 1, 0, -1, -2].into_iter().enumerate() {
            assert!((d[(k, k)] - eta_pow(mu)).norm() < 1e-12);
        }
        assert!((d.norm_squared() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn ell_zero_is_trivial() {
        let g = IcosahedralGroup::new().unwrap();
        let r = IrrepSet::new(&g);
        let rep = subduction_check(&g, &r, 0).unwrap();
        assert_eq!(rep.max_deviation, 0.0);
        assert!(subduction_check(&g, &r, 4).is_err());
    }
}
