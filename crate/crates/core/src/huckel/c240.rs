use num_complex::Complex64;

use super::{block_decompose, build_c240, place, Arrangement, RowBases, TableComparison, SIGMA};
use crate::context::Context;
use crate::error::Result;
use crate::golden::{eta_pow, GoldenConstants};
use crate::irreps::{IrrepLabel, Parity, ParityIrrep};
use crate::linalg::{real, CMatrix};

const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// `|ψ_{μν}, λ⟩` on the 240 sites.
fn ket(ctx: &Context, irrep: IrrepLabel, mu: i32, nu: i32, lambda: usize) -> Vec<Complex64> {
    place(ctx.bases.psi(irrep, mu, nu).coeffs(), lambda, 4)
}

fn sum(a: &[Complex64], b: &[Complex64], sign: f64) -> Vec<Complex64> {
    a.iter().zip(b).map(|(x, y)| (x + y * sign) * H).collect()
}

fn sigma(lambda: usize) -> usize {
    SIGMA[lambda - 1] + 1
}

/// `2^{−1/2}(|ψ_{μν}, λ⟩ + s|ψ_{μν̄}, σ(λ)⟩)` for `λ = 1..4`.
fn paired(ctx: &Context, irrep: IrrepLabel, mu: i32, nu: i32, s: f64) -> Vec<Vec<Complex64>> {
    (1..=4)
        .map(|l| sum(&ket(ctx, irrep, mu, nu, l), &ket(ctx, irrep, mu, -nu, sigma(l)), s))
        .collect()
}

/// The printed C240 SAB for one **I**h irrep, in the order of the block tables.
pub fn c240_reference_basis(ctx: &Context, irrep: ParityIrrep) -> RowBases {
    use IrrepLabel::*;
    let g = irrep.parity == Parity::Gerade;
    let s = irrep.parity.sign();
    let rows = irrep
        .base
        .rows()
        .iter()
        .map(|&m| {
            let k = |nu: i32, l: usize| ket(ctx, irrep.base, m, nu, l);
            let mid = |sign: f64| sum(&k(0, 3), &k(0, 4), sign);
            match irrep.base {
                A if g => vec![k(0, 1), k(0, 2), mid(1.0)],
                A => vec![mid(-1.0)],
                T1 | T2 => {
                    let n = if irrep.base == T1 { 1 } else { 2 };
                    let sg = if irrep.base == T1 { s } else { -s };
                    let mut b = paired(ctx, irrep.base, m, n, sg);
                    if g {
                        b.push(mid(-1.0));
                    } else {
                        b.extend([mid(1.0), k(0, 1), k(0, 2)]);
                    }
                    b
                }
                G => {
                    let mut b = paired(ctx, G, m, 2, s);
                    b.extend(paired(ctx, G, m, 1, s));
                    b
                }
                H => {
                    let mut b = paired(ctx, H, m, 2, s);
                    b.extend(paired(ctx, H, m, 1, -s));
                    b.push(mid(s));
                    if g {
                        b.extend([k(0, 1), k(0, 2)]);
                    }
                    b
                }
            }
        })
        .collect();
    RowBases { irrep, rows }
}

/// Hermitian matrix from 1-based upper-triangle entries.
fn hermitian(n: usize, entries: &[((usize, usize), Complex64)]) -> CMatrix {
    let mut m = CMatrix::zeros(n, n);
    for &((i, j), v) in entries {
        m[(i - 1, j - 1)] = v;
        if i != j {
            m[(j - 1, i - 1)] = v.conj();
        }
    }
    m
}

/// `T1` table with `√5 → r5` and `η^{−1} → e1`; the `T2` table is its conjugate.
fn t_table(alpha: f64, arrangement: Arrangement, parity: Parity, r5: f64, e1: Complex64) -> CMatrix {
    let a = alpha;
    let b = a - 2.0;
    let gc = GoldenConstants::with_sqrt5(r5);
    let (p, q) = (gc.p, gc.p_inv);
    let s = parity.sign();
    let is_a = arrangement == Arrangement::A;
    let pick = |x: f64, y: f64| real(if is_a { x } else { y });
    let r2 = 2f64.sqrt();
    let d33 = pick(a * p / r5, -b * p / r5) * s;
    let mut e = vec![
        ((2, 2), real(-a * p)),
        ((3, 3), d33),
        ((4, 4), d33),
        ((5, 5), pick(-b + a / r5, a - b / r5) * s),
        ((1, 2), real(b)),
        ((1, 3), real(-a)),
        ((1, 4), real(-a)),
        (
            (3, 4),
            if is_a {
                e1 * b + a * q / r5
            } else {
                -e1 * a - b * q / r5
            },
        ),
        ((3, 5), pick(a * r2 / r5, -b * r2 / r5) * (-s)),
        ((4, 5), pick(a * r2 / r5, -b * r2 / r5)),
    ];
    let n = if parity == Parity::Ungerade {
        e.extend([((7, 7), real(-2.0 * a)), ((6, 7), real(b)), ((5, 6), real(-a * r2))]);
        7
    } else {
        5
    };
    hermitian(n, &e)
}

fn g_table(alpha: f64, arrangement: Arrangement, parity: Parity) -> CMatrix {
    let a = alpha;
    let b = a - 2.0;
    let gc = GoldenConstants::new();
    let (p, q, r5) = (gc.p, gc.p_inv, 5f64.sqrt());
    let (e1, e2) = (eta_pow(-1), eta_pow(-2));
    let s = parity.sign();
    let is_a = arrangement == Arrangement::A;
    let pick = |x: f64, y: f64| real(if is_a { x } else { y });
    let d = pick(-a / r5, b / r5);
    let x37 = pick(a * q / r5, -b * q / r5) * s;
    let x38 = pick(a * p / r5, -b * p / r5);
    hermitian(
        8,
        &[
            ((2, 2), real(a * q)),
            ((6, 6), real(-a * p)),
            ((3, 3), d * s),
            ((4, 4), d * s),
            ((7, 7), -d * s),
            ((8, 8), -d * s),
            ((1, 2), real(b)),
            ((5, 6), real(b)),
            ((1, 3), real(-a)),
            ((1, 4), real(-a)),
            ((5, 7), real(-a)),
            ((5, 8), real(-a)),
            ((3, 4), if is_a { e2 * b + a / r5 } else { -e2 * a - b / r5 }),
            ((7, 8), if is_a { e1 * b - a / r5 } else { -e1 * a + b / r5 }),
            ((3, 7), x37),
            ((4, 8), x37),
            ((3, 8), x38),
            ((4, 7), x38),
        ],
    )
}

fn h_table(alpha: f64, arrangement: Arrangement, parity: Parity) -> CMatrix {
    let a = alpha;
    let b = a - 2.0;
    let gc = GoldenConstants::new();
    let (p, q) = (gc.p, gc.p_inv);
    let (e1, e2) = (eta_pow(-1), eta_pow(-2));
    let s = parity.sign();
    let is_a = arrangement == Arrangement::A;
    let pick = |x: f64, y: f64| real(if is_a { x } else { y });
    let c = pick(-a / 5.0, b / 5.0);
    let x = pick(-a * 6f64.sqrt() / 5.0, b * 6f64.sqrt() / 5.0);
    let x37 = pick(2.0 * a * p / 5.0, -2.0 * b * p / 5.0) * s;
    let x38 = pick(-2.0 * a * q / 5.0, 2.0 * b * q / 5.0);
    let mut e = vec![
        ((2, 2), real(a * q)),
        ((6, 6), real(-a * p)),
        ((3, 3), c * s * p * p),
        ((4, 4), c * s * p * p),
        ((7, 7), c * s * q * q),
        ((8, 8), c * s * q * q),
        ((9, 9), pick(b + a / 5.0, -a - b / 5.0) * s),
        ((1, 2), real(b)),
        ((5, 6), real(b)),
        ((1, 3), real(-a)),
        ((1, 4), real(-a)),
        ((5, 7), real(-a)),
        ((5, 8), real(-a)),
        (
            (3, 4),
            if is_a {
                e2 * b - a * q * q / 5.0
            } else {
                -e2 * a + b * q * q / 5.0
            },
        ),
        (
            (7, 8),
            if is_a {
                e1 * b - a * p * p / 5.0
            } else {
                -e1 * a + b * p * p / 5.0
            },
        ),
        ((3, 7), x37),
        ((4, 8), x37),
        ((3, 8), x38),
        ((4, 7), x38),
    ];
    let n = match parity {
        Parity::Gerade => {
            e.extend([
                ((3, 9), x),
                ((4, 9), x),
                ((7, 9), -x),
                ((8, 9), -x),
                ((11, 11), real(-2.0 * a)),
                ((10, 11), real(b)),
                ((9, 10), real(-a * 2f64.sqrt())),
            ]);
            11
        }
        Parity::Ungerade => {
            e.extend([((3, 9), -x), ((4, 9), x), ((7, 9), x), ((8, 9), -x)]);
            9
        }
    };
    hermitian(n, &e)
}

/// The printed C240 block of one irrep. `T2` is the `T1` table under
/// `√5 → −√5` together with `η → η²` on the phases.
pub fn c240_reference_block(irrep: ParityIrrep, arrangement: Arrangement, alpha: f64) -> CMatrix {
    let a = alpha;
    match irrep.base {
        IrrepLabel::A => match irrep.parity {
            Parity::Gerade => hermitian(
                3,
                &[
                    ((1, 2), real(a - 2.0)),
                    ((1, 3), real(-2f64.sqrt() * a)),
                    ((2, 2), real(-2.0 * a)),
                    ((3, 3), real(-2.0)),
                ],
            ),
            Parity::Ungerade => hermitian(1, &[((1, 1), real(2.0))]),
        },
        IrrepLabel::T1 => t_table(a, arrangement, irrep.parity, 5f64.sqrt(), eta_pow(-1)),
        IrrepLabel::T2 => t_table(a, arrangement, irrep.parity, -(5f64.sqrt()), eta_pow(-2)),
        IrrepLabel::G => g_table(a, arrangement, irrep.parity),
        IrrepLabel::H => h_table(a, arrangement, irrep.parity),
    }
}

/// Every C240 block in the printed bases next to its printed table.
pub fn c240_block_tables(ctx: &Context, arrangement: Arrangement, alpha: f64) -> Result<Vec<TableComparison>> {
    let model = build_c240(&ctx.group, arrangement, alpha)?;
    ParityIrrep::all()
        .map(|irrep| {
            let block = block_decompose(&model, &c240_reference_basis(ctx, irrep))?;
            Ok(TableComparison::new(
                block,
                c240_reference_block(irrep, arrangement, alpha),
                alpha,
                Some(arrangement),
            ))
        })
        .collect()
}
