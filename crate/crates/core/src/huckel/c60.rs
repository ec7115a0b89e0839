use num_complex::Complex64;

use super::{block_decompose, build_c60, pairing_permutation, RowBases, TableComparison};
use crate::algebra::parity_basis;
use crate::context::Context;
use crate::error::Result;
use crate::group::ROTATION_COUNT;
use crate::irreps::{IrrepLabel, Parity, ParityIrrep};
use crate::linalg::{real, CMatrix};

/// Columns `ν` of the independent C60 bases for each **I**h irrep.
pub fn c60_columns(irrep: ParityIrrep) -> &'static [i32] {
    use IrrepLabel::*;
    use Parity::*;
    match (irrep.base, irrep.parity) {
        (A, Gerade) => &[0],
        (A, Ungerade) => &[],
        (T1, Gerade) => &[1],
        (T1, Ungerade) => &[1, 0],
        (T2, Gerade) => &[2],
        (T2, Ungerade) => &[2, 0],
        (G, _) => &[2, 1],
        (H, Gerade) => &[2, 1, 0],
        (H, Ungerade) => &[2, 1],
    }
}

/// `(E ± P)ψ^Γ_{μν}|E⟩`, normalized, over the listed columns.
pub fn c60_reference_basis(ctx: &Context, irrep: ParityIrrep) -> RowBases {
    let pairing = pairing_permutation(&ctx.group).expect("pairing table covers the group");
    let rows = irrep
        .base
        .rows()
        .iter()
        .map(|&mu| {
            c60_columns(irrep)
                .iter()
                .map(|&nu| {
                    let psi = parity_basis(ctx.bases.psi(irrep.base, mu, nu), irrep.parity);
                    let mut v = vec![Complex64::new(0.0, 0.0); ROTATION_COUNT];
                    for (x, &c) in psi.coeffs().iter().enumerate() {
                        let r = x % ROTATION_COUNT;
                        v[if x < ROTATION_COUNT { r } else { pairing[r] }] += c;
                    }
                    let n = crate::linalg::norm(&v);
                    v.iter().map(|z| z / n).collect()
                })
                .collect()
        })
        .collect();
    RowBases { irrep, rows }
}

fn matrix(n: usize, entries: &[f64]) -> CMatrix {
    CMatrix::from_row_iterator(n, n, entries.iter().map(|&x| real(x)))
}

/// The closed-form C60 blocks (`0×0` for `A_u`).
pub fn c60_closed_form_block(irrep: ParityIrrep, alpha: f64) -> CMatrix {
    use IrrepLabel::*;
    use Parity::*;
    let a = alpha;
    let s5 = 5f64.sqrt();
    let s3 = 3f64.sqrt();
    let k = 1.0 / (2.0 * s5);
    match (irrep.base, irrep.parity) {
        (A, Gerade) => matrix(1, &[-a - 2.0]),
        (A, Ungerade) => CMatrix::zeros(0, 0),
        (T1, Gerade) => matrix(1, &[-a * (s5 + 1.0) / 2.0 + 2.0]),
        (T2, Gerade) => matrix(1, &[a * (s5 - 1.0) / 2.0 + 2.0]),
        (T1, Ungerade) => matrix(
            2,
            &[
                k * (-a * (7.0 - s5) + 4.0),
                k * (-4.0 * (a - 2.0)),
                k * (-4.0 * (a - 2.0)),
                k * (-2.0 * a * (2.0 * s5 - 1.0) - 4.0),
            ],
        ),
        (T2, Ungerade) => matrix(
            2,
            &[
                k * (a * (7.0 + s5) - 4.0),
                k * 4.0 * (a - 2.0),
                k * 4.0 * (a - 2.0),
                k * (-2.0 * a * (2.0 * s5 + 1.0) + 4.0),
            ],
        ),
        (G, Gerade) => matrix(
            2,
            &[a * (s5 + 1.0) / 2.0, -(a - 2.0), -(a - 2.0), -a * (s5 - 1.0) / 2.0],
        ),
        (G, Ungerade) => matrix(
            2,
            &[
                k * (a * (s5 + 1.0) + 8.0),
                k * 2.0 * (a - 2.0),
                k * 2.0 * (a - 2.0),
                k * (a * (s5 - 1.0) - 8.0),
            ],
        ),
        (H, Ungerade) => matrix(
            2,
            &[
                k * (a * (7.0 + s5) - 4.0),
                k * 4.0 * (a - 2.0),
                k * 4.0 * (a - 2.0),
                k * (-a * (7.0 - s5) + 4.0),
            ],
        ),
        (H, Gerade) => {
            let b = a - 2.0;
            let m = matrix(
                3,
                &[
                    a * (5.0 * s5 + 11.0) - 12.0,
                    4.0 * b,
                    4.0 * s3 * b,
                    4.0 * b,
                    -a * (5.0 * s5 - 11.0) - 12.0,
                    -4.0 * s3 * b,
                    4.0 * s3 * b,
                    -4.0 * s3 * b,
                    -22.0 * a + 4.0,
                ],
            );
            m * real(0.1)
        }
    }
}

/// Real roots of `x³ + a2 x² + a1 x + a0`, ascending, by the trigonometric method.
pub fn cubic_real_roots(a2: f64, a1: f64, a0: f64) -> Vec<f64> {
    let shift = a2 / 3.0;
    let p = a1 - a2 * a2 / 3.0;
    let q = 2.0 * a2.powi(3) / 27.0 - a2 * a1 / 3.0 + a0;
    let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);
    let mut roots = if p.abs() < 1e-300 {
        vec![(-q).cbrt()]
    } else if disc > 1e-14 * (q * q + p.abs().powi(3)).max(1.0) {
        let s = disc.sqrt();
        vec![(-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt()]
    } else {
        let r = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * r)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        (0..3)
            .map(|k| r * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos())
            .collect()
    };
    for x in roots.iter_mut() {
        *x -= shift;
        // one Newton step to polish
        let f = ((*x + a2) * *x + a1) * *x + a0;
        let df = (3.0 * *x + 2.0 * a2) * *x + a1;
        if df.abs() > 1e-12 {
            *x -= f / df;
        }
    }
    roots.sort_by(f64::total_cmp);
    roots
}

/// Closed-form C60 levels of one irrep, ascending.
pub fn closed_form_spectrum_c60(irrep: ParityIrrep, alpha: f64) -> Vec<f64> {
    use IrrepLabel::*;
    use Parity::*;
    let a = alpha;
    let s5 = 5f64.sqrt();
    let pair = |center: f64, radicand: f64, scale: f64| {
        let r = scale * radicand.sqrt();
        vec![center - r, center + r]
    };
    match (irrep.base, irrep.parity) {
        (A, Gerade) => vec![-a - 2.0],
        (A, Ungerade) => vec![],
        (T1, Gerade) => vec![-a * (s5 + 1.0) / 2.0 + 2.0],
        (T2, Gerade) => vec![a * (s5 - 1.0) / 2.0 + 2.0],
        (T1, Ungerade) => pair(
            -a * (3.0 + s5) / 4.0,
            18.0 * a * a * (3.0 - s5) - 16.0 * a * (5.0 - s5) + 64.0,
            0.25,
        ),
        (T2, Ungerade) => pair(
            -a * (3.0 - s5) / 4.0,
            18.0 * a * a * (3.0 + s5) - 16.0 * a * (5.0 + s5) + 64.0,
            0.25,
        ),
        (G, Gerade) => pair(a / 2.0, 9.0 * a * a - 16.0 * a + 16.0, 0.5),
        (G, Ungerade) => pair(a / 2.0, a * a + 16.0, 0.5),
        (H, Ungerade) => pair(a / 2.0, 13.0 * a * a - 24.0 * a + 16.0, 0.5),
        (H, Gerade) => cubic_real_roots(
            2.0,
            -6.0 * a * a + 8.0 * a - 4.0,
            a.powi(3) - 12.0 * a * a + 16.0 * a - 8.0,
        ),
    }
}

/// Every C60 block in the printed bases next to its closed form.
pub fn c60_block_comparison(ctx: &Context, alpha: f64) -> Result<Vec<TableComparison>> {
    let model = build_c60(&ctx.group, alpha)?;
    ParityIrrep::all()
        .map(|irrep| {
            let block = block_decompose(&model, &c60_reference_basis(ctx, irrep))?;
            Ok(TableComparison::new(block, c60_closed_form_block(irrep, alpha), alpha, None))
        })
        .collect()
}
