mod common;

use icosa_core::huckel::{
    build_c240, build_c60, c240_block_tables, c240_reference_basis, c60_block_comparison, c60_closed_form_block,
    c60_reference_basis, closed_form_spectrum_c60, cubic_real_roots, decompose, parity_action, sab_basis, BasisChoice,
};
use icosa_core::linalg::{hermitian_eigenvalues, spectrum_deviation};
use icosa_core::sab::parity_of;
use icosa_core::{Arrangement, GoldenConstants, HuckelModel, IrrepLabel, Parity, ParityIrrep};

const ALPHAS: [f64; 3] = [0.0, 1.0, 2.5];

fn pi(label: &str) -> ParityIrrep {
    label.parse().unwrap()
}

fn models(alpha: f64) -> Vec<HuckelModel> {
    let g = &common::ctx().group;
    vec![
        build_c60(g, alpha).unwrap(),
        build_c240(g, Arrangement::A, alpha).unwrap(),
        build_c240(g, Arrangement::B, alpha).unwrap(),
    ]
}

#[test]
fn generators_commute_with_every_model() {
    let g = &common::ctx().group;
    for m in models(2.5) {
        for x in g.generator_ids() {
            assert!(m.conjugation_defect(&m.rotation_permutation(g, x)) <= 1e-12);
        }
        let p = parity_action(&m).unwrap();
        assert!(m.conjugation_defect(&p) <= 1e-12);
    }
}

#[test]
fn rows_hold_two_hp_and_one_hh_bond() {
    for alpha in ALPHAS {
        for m in models(alpha) {
            for i in 0..m.size() {
                let row = m.matrix.row(i);
                if alpha == 2.5 {
                    assert_eq!(row.iter().filter(|v| **v != 0.0).count(), 3);
                }
                let sum: f64 = row.iter().sum();
                assert!((sum - (-alpha - 2.0)).abs() < 1e-12, "row {i} sum {sum}");
            }
        }
    }
}

#[test]
fn c60_blocks_match_closed_forms() {
    let ctx = common::ctx();
    for alpha in ALPHAS {
        for cmp in c60_block_comparison(ctx, alpha).unwrap() {
            assert!(cmp.entry_deviation < 1e-9, "{} at {alpha}: {}", cmp.irrep, cmp.entry_deviation);
            let cf = closed_form_spectrum_c60(cmp.irrep, alpha);
            assert!(spectrum_deviation(&cmp.block.eigenvalues, &cf) < 1e-8);
            assert!(cmp.block.row_deviation < 1e-8);
            assert!(cmp.block.hermiticity_defect < 1e-9);
        }
    }
}

#[test]
fn c60_printed_values() {
    let ag = c60_closed_form_block(pi("A_g"), 1.0);
    assert_eq!(ag[(0, 0)].re, -3.0);
    let t1g = closed_form_spectrum_c60(pi("T1g"), 1.0);
    assert!((t1g[0] - (2.0 - (5f64.sqrt() + 1.0) / 2.0)).abs() < 1e-12);
    for x in cubic_real_roots(2.0, -2.0, -3.0) {
        assert!((x.powi(3) + 2.0 * x * x - 2.0 * x - 3.0).abs() < 1e-10);
    }
    for alpha in ALPHAS {
        let block = c60_closed_form_block(pi("Hg"), alpha);
        let roots = closed_form_spectrum_c60(pi("Hg"), alpha);
        assert_eq!(roots.len(), 3);
        assert!(spectrum_deviation(&hermitian_eigenvalues(&block), &roots) < 1e-8);
    }
}

#[test]
fn c60_dimension_tally() {
    let ctx = common::ctx();
    let total: usize = ParityIrrep::all()
        .map(|irrep| c60_reference_basis(ctx, irrep).dim() * irrep.dim())
        .sum();
    assert_eq!(total, 60);
}

#[test]
fn c60_reference_bases_carry_their_parity() {
    let ctx = common::ctx();
    let m = build_c60(&ctx.group, 1.0).unwrap();
    for irrep in ParityIrrep::all() {
        let basis = c60_reference_basis(ctx, irrep);
        assert!(basis.gram_defect() < 1e-10);
        for v in basis.rows.iter().flatten() {
            assert_eq!(parity_of(v, &m.parity, 1e-10), Some(irrep.parity), "{irrep}");
        }
    }
}

#[test]
fn generated_bases_reproduce_the_independent_columns() {
    let ctx = common::ctx();
    let m = build_c60(&ctx.group, 1.0).unwrap();
    let space = m.state_space(&ctx.group).unwrap();
    for irrep in ParityIrrep::all() {
        let generated = sab_basis(ctx, &m, &space, irrep).unwrap();
        assert_eq!(generated.dim(), c60_reference_basis(ctx, irrep).dim(), "{irrep}");
    }
}

#[test]
fn block_union_equals_dense_spectrum() {
    let ctx = common::ctx();
    for alpha in ALPHAS {
        for m in models(alpha) {
            for choice in [BasisChoice::Reference, BasisChoice::Generated] {
                let d = decompose(ctx, &m, choice).unwrap();
                assert_eq!(d.spectrum.block_union.len(), m.size());
                assert!(d.spectrum.max_deviation < 1e-8, "{:?} {choice:?} at {alpha}", m.molecule);
                assert!((d.spectrum.trace_block - d.spectrum.trace_dense).abs() < 1e-8);
                assert!(d.blocks.iter().all(|b| b.row_deviation < 1e-8));
            }
        }
    }
}

#[test]
fn c240_blocks_match_printed_tables() {
    let ctx = common::ctx();
    for alpha in ALPHAS {
        for arr in [Arrangement::A, Arrangement::B] {
            for cmp in c240_block_tables(ctx, arr, alpha).unwrap() {
                assert!(cmp.entry_deviation < 1e-9, "{} ({arr}) at {alpha}", cmp.irrep);
                assert!(cmp.spectrum_deviation < 1e-8);
            }
        }
    }
}

#[test]
fn c240_printed_entries() {
    let ctx = common::ctx();
    let alpha = 2.5;
    let m = build_c240(&ctx.group, Arrangement::A, alpha).unwrap();
    let block = |label: &str| {
        icosa_core::huckel::block_decompose(&m, &c240_reference_basis(ctx, pi(label))).unwrap().matrix
    };
    let gc = GoldenConstants::new();
    assert!((block("T1u")[(6, 6)].re + 2.0 * alpha).abs() < 1e-12);
    assert!((block("Gg")[(1, 1)].re - alpha * gc.p_inv).abs() < 1e-12);
    assert!((block("Hg")[(8, 9)].re + alpha * 2f64.sqrt()).abs() < 1e-12);
    let ag = block("Ag");
    assert!((ag[(0, 1)].re - (alpha - 2.0)).abs() < 1e-12);
    assert!((block("Au")[(0, 0)].re - 2.0).abs() < 1e-12);
}

#[test]
fn arrangements_differ_away_from_unit_alpha() {
    let g = &common::ctx().group;
    let a = build_c240(g, Arrangement::A, 2.5).unwrap().dense_spectrum();
    let b = build_c240(g, Arrangement::B, 2.5).unwrap().dense_spectrum();
    assert!(spectrum_deviation(&a, &b) > 1e-3);
}

#[test]
fn arrangements_coincide_at_unit_alpha() {
    // at α = 1 both bond weights equal −1
    let g = &common::ctx().group;
    let a = build_c240(g, Arrangement::A, 1.0).unwrap();
    let b = build_c240(g, Arrangement::B, 1.0).unwrap();
    assert_eq!(a.matrix, b.matrix);
}

#[test]
fn t1_and_t2_bases_have_equal_size() {
    let ctx = common::ctx();
    for parity in [Parity::Gerade, Parity::Ungerade] {
        let t1 = ParityIrrep::new(IrrepLabel::T1, parity);
        let t2 = ParityIrrep::new(IrrepLabel::T2, parity);
        assert_eq!(c240_reference_basis(ctx, t1).dim(), c240_reference_basis(ctx, t2).dim());
    }
}
