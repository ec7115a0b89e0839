#![allow(dead_code)]

use std::sync::OnceLock;

use icosa_core::group::ROTATION_COUNT;
use icosa_core::{AlgebraVector, Context, IcosahedralGroup, IrrepLabel};
use num_complex::Complex64;

pub fn ctx() -> &'static Context {
    static CTX: OnceLock<Context> = OnceLock::new();
    CTX.get_or_init(|| Context::new().expect("context builds"))
}

/// Rotation angle of a rotation id, read off the trace of its 3×3 matrix.
pub fn rotation_angle(g: &IcosahedralGroup, x: usize) -> f64 {
    let tr = g.element(x).rotation.matrix().trace();
    ((tr - 1.0) / 2.0).clamp(-1.0, 1.0).acos()
}

/// SO(3) character of spin `l` at angle `theta`.
pub fn so3_character(l: u32, theta: f64) -> f64 {
    if theta.abs() < 1e-12 {
        return (2 * l + 1) as f64;
    }
    let h = (l as f64 + 0.5) * theta;
    h.sin() / (theta / 2.0).sin()
}

/// Irrep characters from the branching `D^0 = A`, `D^1 = T1`, `D^2 = H`,
/// `D^3 = T2 + G`, `D^4 = G + H`.
pub fn geometric_character(g: &IcosahedralGroup, label: IrrepLabel, x: usize) -> f64 {
    let th = rotation_angle(g, x);
    let chi = |l| so3_character(l, th);
    match label {
        IrrepLabel::A => 1.0,
        IrrepLabel::T1 => chi(1),
        IrrepLabel::H => chi(2),
        IrrepLabel::G => chi(4) - chi(2),
        IrrepLabel::T2 => chi(3) - chi(4) + chi(2),
    }
}

/// `ψ^Γ_{μν} = (d/60)^{1/2} Σ_R D^Γ_{μν}(R)* R`.
pub fn closed_form_psi(ctx: &Context, label: IrrepLabel, mu: i32, nu: i32) -> AlgebraVector {
    let i = label.row_position(mu).expect("row");
    let j = label.row_position(nu).expect("column");
    let s = (label.dim() as f64 / ROTATION_COUNT as f64).sqrt();
    AlgebraVector::from_coeffs(
        (0..ROTATION_COUNT)
            .map(|r| ctx.irreps.rep_matrix(label, r)[(i, j)].conj() * s)
            .collect::<Vec<Complex64>>(),
    )
}

/// Multiplicity of `label` in a permutation action: `(1/60) Σ_x χ(x) fix(x)`.
pub fn permutation_multiplicity(
    g: &IcosahedralGroup,
    label: IrrepLabel,
    fixed_points: impl Fn(usize) -> usize,
) -> usize {
    let sum: f64 = (0..ROTATION_COUNT)
        .map(|x| geometric_character(g, label, x) * fixed_points(x) as f64)
        .sum();
    let m = sum / ROTATION_COUNT as f64;
    assert!((m - m.round()).abs() < 1e-9, "non-integral multiplicity {m}");
    m.round() as usize
}
