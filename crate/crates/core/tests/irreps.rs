mod common;

use icosa_core::group::ROTATION_COUNT;
use icosa_core::irreps::subduction_check;
use icosa_core::linalg::max_abs_diff;
use icosa_core::{GoldenConstants, IrrepLabel, ParityIrrep};
use proptest::prelude::*;

#[test]
fn characters_match_rotation_angles() {
    let ctx = common::ctx();
    for label in IrrepLabel::ALL {
        for x in 0..ROTATION_COUNT {
            let chi = ctx.irreps.rep_matrix(label, x).trace();
            let want = common::geometric_character(&ctx.group, label, x);
            assert!((chi.re - want).abs() < 1e-9 && chi.im.abs() < 1e-9, "{label:?} at {}", ctx.group.label(x));
        }
    }
}

#[test]
fn character_table_rows() {
    let ctx = common::ctx();
    let table = ctx.irreps.character_table(&ctx.group).unwrap();
    assert!(table[0].iter().all(|&c| (c - 1.0).abs() < 1e-12));
    let dims: Vec<f64> = table.iter().map(|row| row[0]).collect();
    assert_eq!(dims, vec![1.0, 3.0, 3.0, 4.0, 5.0]);
}

#[test]
fn class_operator_eigenvalues() {
    let ctx = common::ctx();
    let gc = GoldenConstants::new();
    let want = [12.0, 4.0 * gc.p_inv, -4.0 * gc.p, -3.0, 0.0];
    for (label, w) in IrrepLabel::ALL.into_iter().zip(want) {
        let v = ctx.irreps.class_operator_eigenvalue(&ctx.group, label).unwrap();
        assert!((v - w).abs() < 1e-9, "{label:?}: {v} vs {w}");
    }
}

#[test]
fn golden_identities() {
    let gc = GoldenConstants::new();
    assert!((gc.p * gc.p_inv - 1.0).abs() < 1e-15);
    assert!((gc.p_inv - gc.p - 1.0).abs() < 1e-15);
    let eta = icosa_core::eta();
    assert!(((eta + eta.inv()).re - gc.p).abs() < 1e-15);
}

#[test]
fn subduction_up_to_three() {
    let ctx = common::ctx();
    for ell in 0..=3 {
        let r = subduction_check(&ctx.group, &ctx.irreps, ell).unwrap();
        assert!(r.max_deviation < 1e-8, "l={ell}: {}", r.max_deviation);
        assert!(r.character_deviation < 1e-8);
    }
}

proptest! {
    #[test]
    fn homomorphism_on_random_pairs(x in 0..ROTATION_COUNT, y in 0..ROTATION_COUNT) {
        let ctx = common::ctx();
        for label in IrrepLabel::ALL {
            let lhs = ctx.irreps.rep_matrix(label, ctx.group.multiply(x, y));
            let rhs = ctx.irreps.rep_matrix(label, x) * ctx.irreps.rep_matrix(label, y);
            prop_assert!(max_abs_diff(lhs, &rhs) < 1e-9);
        }
    }

    #[test]
    fn parity_irreps_split_by_sign(x in 0..ROTATION_COUNT) {
        let ctx = common::ctx();
        let p = ctx.group.parity_op();
        for irrep in ParityIrrep::all() {
            let with_p = ctx.irreps.parity_rep_matrix(irrep, ctx.group.multiply(p, x));
            let plain = ctx.irreps.rep_matrix(irrep.base, x) * num_complex::Complex64::new(irrep.parity.sign(), 0.0);
            prop_assert!(max_abs_diff(&with_p, &plain) < 1e-12);
        }
    }
}
