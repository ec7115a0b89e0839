//! One-shot invariant suite over every module.

use serde::Serialize;

use crate::algebra::{phi_basis, AlgebraVector};
use crate::context::Context;
use crate::error::Result;
use crate::golden::{eta_pow, GoldenConstants};
use crate::group::{IcosahedralGroup, ELEMENT_COUNT, ROTATION_COUNT};
use crate::huckel::{
    build_c240, build_c60, c240_block_tables, c60_block_comparison, closed_form_spectrum_c60, decompose,
    parity_action, Arrangement, BasisChoice,
};
use crate::irreps::{subduction_check, IrrepLabel, ParityIrrep};
use crate::linalg::{self, max_abs_diff, real, CMatrix};
use crate::sab::{b12h12_action, b12h12_space, c60_parity_relations_check, independent_sets_report, QuantaState, SymmetryMode};

/// α values the Hückel checks sweep.
pub const ALPHA_SWEEP: [f64; 3] = [0.0, 1.0, 2.5];

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub module: &'static str,
    pub name: String,
    /// Measured deviation (or mismatch count).
    pub value: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub tolerance: f64,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Suite {
    tol: f64,
    checks: Vec<Check>,
}

impl Suite {
    fn value(&mut self, module: &'static str, name: impl Into<String>, value: f64) {
        self.checks.push(Check {
            module,
            name: name.into(),
            value,
            tolerance: self.tol,
            passed: value <= self.tol,
            detail: None,
        });
    }

    fn exact(&mut self, module: &'static str, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            module,
            name: name.into(),
            value: if ok { 0.0 } else { 1.0 },
            tolerance: 0.0,
            passed: ok,
            detail: Some(detail.into()).filter(|d: &String| !d.is_empty()),
        });
    }

    fn result<T>(&mut self, module: &'static str, name: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks.push(Check {
                    module,
                    name: name.to_string(),
                    value: f64::INFINITY,
                    tolerance: self.tol,
                    passed: false,
                    detail: Some(e.to_string()),
                });
                None
            }
        }
    }
}

/// The four vertex maps printed for `T0`, `S11`, `S5`, `S10` (images of `A0..A5`).
pub const DISPLAYED_MAPS: [(&str, [usize; 6]); 4] = [
    ("T0", [0, 2, 3, 4, 5, 1]),
    ("S11", [6, 10, 9, 8, 7, 11]),
    ("S5", [5, 4, 8, 9, 1, 0]),
    ("S10", [9, 5, 8, 6, 10, 1]),
];

fn group_checks(s: &mut Suite, g: &IcosahedralGroup) -> Result<()> {
    const M: &str = "icosa_group";
    let mismatches: Vec<&str> = DISPLAYED_MAPS
        .iter()
        .filter(|(label, images)| {
            let x = g.lookup(label).expect("displayed label exists");
            (0..6).any(|k| g.vertex_image(x, k) != images[k])
        })
        .map(|(l, _)| *l)
        .collect();
    s.exact(M, "displayed vertex maps T0 S11 S5 S10", mismatches.is_empty(), mismatches.join(","));

    let t0 = g.lookup("T0")?;
    let s1 = g.lookup("S1")?;
    let r6 = g.lookup("R6")?;
    let s12 = g.lookup("S12")?;
    s.exact(M, "T0^5 = E", g.power(t0, 5) == g.identity(), "");
    s.exact(M, "S1^2 = E", g.power(s1, 2) == g.identity(), "");
    let w1 = g.word(&[s1, g.power(t0, 2), s1, g.power(t0, 4)]);
    s.exact(M, "R6 = S1 T0^2 S1 T0^4", w1 == r6, g.label(w1));
    let w2 = g.word(&[g.power(r6, 2), s1, r6]);
    s.exact(M, "S12 = R6^2 S1 R6", w2 == s12, g.label(w2));
    let generated = g.generated_subgroup(&[t0, s1]).len();
    s.exact(M, "<T0, S1> has 60 elements", generated == ROTATION_COUNT, generated.to_string());

    let latin = (0..ROTATION_COUNT).all(|x| {
        let mut row: Vec<usize> = (0..ROTATION_COUNT).map(|y| g.multiply(x, y)).collect();
        let mut col: Vec<usize> = (0..ROTATION_COUNT).map(|y| g.multiply(y, x)).collect();
        row.sort_unstable();
        col.sort_unstable();
        row.iter().copied().eq(0..ROTATION_COUNT) && col.iter().copied().eq(0..ROTATION_COUNT)
    });
    s.exact(M, "rotation table is a Latin square", latin, "");
    let inverses = (0..ELEMENT_COUNT).all(|x| g.inverse(g.inverse(x)) == x && g.multiply(x, g.inverse(x)) == 0);
    s.exact(M, "inverse table", inverses, "");

    let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.members.len()).collect();
    sizes.sort_unstable();
    s.exact(M, "class sizes {1,12,12,15,20}", sizes == [1, 12, 12, 15, 20], format!("{sizes:?}"));

    let t_sub: Vec<usize> = ["E", "S8", "S12", "S1", "R6", "R6^2", "R2", "R2^2", "R4", "R4^2", "R10", "R10^2"]
        .iter()
        .map(|l| g.lookup(l))
        .collect::<Result<_>>()?;
    let closed = t_sub
        .iter()
        .all(|&x| t_sub.iter().all(|&y| t_sub.contains(&g.multiply(x, y))));
    s.exact(M, "tetrahedral subgroup closed", closed, "");

    let mut decs: Vec<_> = (0..ROTATION_COUNT)
        .map(|x| {
            let d = g.canonical_decomposition(x);
            (d.a, d.b, d.c, d.d)
        })
        .collect();
    let round_trip = (0..ROTATION_COUNT).all(|x| g.from_decomposition(g.canonical_decomposition(x)) == x);
    decs.sort_unstable();
    decs.dedup();
    s.exact(M, "60 distinct decompositions", decs.len() == ROTATION_COUNT && round_trip, "");

    let p = g.parity_op();
    let central = (0..ELEMENT_COUNT).all(|x| g.multiply(p, x) == g.multiply(x, p));
    s.exact(M, "P central and P^2 = E", central && g.multiply(p, p) == 0, "");

    let again = IcosahedralGroup::new()?;
    let same = (0..ELEMENT_COUNT).all(|x| {
        g.element(x).perm == again.element(x).perm
            && (0..ELEMENT_COUNT).all(|y| g.multiply(x, y) == again.multiply(x, y))
    });
    s.exact(M, "rebuild is identical", same, "");
    Ok(())
}

fn irrep_checks(s: &mut Suite, ctx: &Context) -> Result<()> {
    const M: &str = "irreps";
    let (g, r) = (&ctx.group, &ctx.irreps);
    let mut hom = 0.0f64;
    let mut unit = 0.0f64;
    for l in IrrepLabel::ALL {
        let d = l.dim();
        for x in 0..ROTATION_COUNT {
            let dx = r.rep_matrix(l, x);
            unit = unit.max(max_abs_diff(&(dx * dx.adjoint()), &CMatrix::identity(d, d)));
            for y in 0..ROTATION_COUNT {
                hom = hom.max(max_abs_diff(r.rep_matrix(l, g.multiply(x, y)), &(dx * r.rep_matrix(l, y))));
            }
        }
    }
    s.value(M, "homomorphism, 3600 pairs x 5 irreps", hom);
    s.value(M, "unitarity", unit);

    let mut ortho = 0.0f64;
    for a in IrrepLabel::ALL {
        for b in IrrepLabel::ALL {
            for i in 0..a.dim() * a.dim() {
                for j in 0..b.dim() * b.dim() {
                    let (mu, nu) = (i / a.dim(), i % a.dim());
                    let (mp, np) = (j / b.dim(), j % b.dim());
                    let sum: num_complex::Complex64 = (0..ROTATION_COUNT)
                        .map(|x| r.rep_matrix(a, x)[(mu, nu)].conj() * r.rep_matrix(b, x)[(mp, np)])
                        .sum();
                    let want = if a == b && i == j { 60.0 / a.dim() as f64 } else { 0.0 };
                    ortho = ortho.max((sum - real(want)).norm());
                }
            }
        }
    }
    s.value(M, "great orthogonality", ortho);

    let gc = GoldenConstants::new();
    let expected = [12.0, 4.0 * gc.p_inv, -4.0 * gc.p, -3.0, 0.0];
    let mut worst = 0.0f64;
    for (l, want) in IrrepLabel::ALL.into_iter().zip(expected) {
        if let Some(v) = s.result(M, "class operator is scalar", r.class_operator_eigenvalue(g, l)) {
            worst = worst.max((v - want).abs());
        }
    }
    s.value(M, "class operator eigenvalues {12, 4/p, -4p, -3, 0}", worst);

    let mut par = 0.0f64;
    for irrep in ParityIrrep::all() {
        for x in 0..ELEMENT_COUNT {
            let dx = r.parity_rep_matrix(irrep, x);
            for y in (0..ELEMENT_COUNT).step_by(7) {
                par = par.max(max_abs_diff(
                    &r.parity_rep_matrix(irrep, g.multiply(x, y)),
                    &(&dx * r.parity_rep_matrix(irrep, y)),
                ));
            }
        }
    }
    s.value(M, "parity irreps are homomorphisms", par);

    for ell in 0..=3 {
        if let Some(rep) = s.result(M, &format!("subduction l={ell}"), subduction_check(g, r, ell)) {
            s.value(M, format!("subduction l={ell} elementwise"), rep.max_deviation);
            s.value(M, format!("subduction l={ell} characters"), rep.character_deviation);
        }
    }
    Ok(())
}

fn algebra_checks(s: &mut Suite, ctx: &Context) -> Result<()> {
    const M: &str = "group_algebra";
    let (g, b) = (&ctx.group, &ctx.bases);
    s.value(M, "60 bases orthonormal", b.orthonormality_defect());
    let mut counts = [0usize; 5];
    for basis in b.iter() {
        counts[basis.irrep as usize] += 1;
    }
    s.exact(M, "multiplicities {1,9,9,16,25}", counts == [1, 9, 9, 16, 25], format!("{counts:?}"));
    let (left, right) = b.transformation_deviation(g, &ctx.irreps);
    s.value(M, "left transformation law (T0, S1)", left);
    s.value(M, "right transformation law (T0, S1)", right);

    let t0 = g.lookup("T0")?;
    let mut eig = 0.0f64;
    for basis in b.iter() {
        let v = &basis.vector;
        eig = eig.max(v.left_mul(g, t0).max_abs_diff(&v.scaled(eta_pow(basis.mu))));
        eig = eig.max(v.right_mul(g, t0).max_abs_diff(&v.scaled(eta_pow(basis.nu))));
    }
    s.value(M, "T0 eigenvectors", eig);

    let mut exact = true;
    for basis in b.iter() {
        exact &= basis.coefficients.reconstruct(g)? == basis.vector;
    }
    s.exact(M, "reconstruction is bit-identical", exact, "");

    let combo = |terms: &[(usize, i32, i32, num_complex::Complex64)], scale: f64| -> Result<AlgebraVector> {
        let mut v = AlgebraVector::zeros(ROTATION_COUNT);
        for &(i, mu, nu, c) in terms {
            v.add_scaled(&phi_basis(g, i, mu, nu)?, c * scale);
        }
        Ok(v)
    };
    let one = real(1.0);
    let t1_00 = combo(&[(1, 0, 0, one), (2, 0, 0, -one), (3, 0, 0, one), (4, 0, 0, -one)], 0.5)?;
    s.value(M, "psi^T1_00 = (Phi1 - Phi2 + Phi3 - Phi4)/2", t1_00.max_abs_diff(b.psi(IrrepLabel::T1, 0, 0)));
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let t1_10 = combo(&[(3, 1, 0, -eta_pow(1)), (4, 1, 0, eta_pow(-2))], h)?;
    s.value(M, "psi^T1_10 combination", t1_10.max_abs_diff(b.psi(IrrepLabel::T1, 1, 0)));
    Ok(())
}

fn sab_checks(s: &mut Suite, ctx: &Context) -> Result<()> {
    const M: &str = "sab";
    let g = &ctx.group;
    let seed = QuantaState([1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]);
    let shuffles: [(&str, [u32; 12]); 4] = [
        ("T0", [1, 6, 2, 3, 4, 5, 7, 12, 8, 9, 10, 11]),
        ("S11", [7, 11, 10, 9, 8, 12, 1, 5, 4, 3, 2, 6]),
        ("S5", [6, 5, 9, 10, 2, 1, 12, 11, 3, 4, 8, 7]),
        ("S10", [10, 6, 9, 7, 11, 2, 4, 12, 3, 1, 5, 8]),
    ];
    let bad: Vec<&str> = shuffles
        .iter()
        .filter(|(l, want)| b12h12_action(g, g.lookup(l).expect("label"), &seed).0 != *want)
        .map(|(l, _)| *l)
        .collect();
    s.exact(M, "B12H12 quanta shuffles", bad.is_empty(), bad.join(","));

    let space = b12h12_space(g, seed, SymmetryMode::Rotations)?;
    let (report, families) = independent_sets_report(&ctx.bases, &space, 0, SymmetryMode::Rotations)?;
    let regular = report.entries.iter().all(|e| e.sets == e.dim && e.svd_rank == e.sets);
    s.exact(
        M,
        "distinct quanta: 60 SAB in 16 sets",
        report.total_vectors == 60 && report.total_sets == 16 && regular,
        format!("{} SAB, {} sets", report.total_vectors, report.total_sets),
    );
    let gens = [g.lookup("T0")?, g.lookup("S1")?];
    let equiv = families
        .iter()
        .map(|f| f.equivariance_deviation(&ctx.irreps, &space, &gens))
        .fold(0.0, f64::max);
    s.value(M, "SAB equivariance", equiv);

    let flat = b12h12_space(g, QuantaState([2; 12]), SymmetryMode::Rotations)?;
    let (flat_report, _) = independent_sets_report(&ctx.bases, &flat, 0, SymmetryMode::Rotations)?;
    s.exact(
        M,
        "equal quanta: exactly one SAB",
        flat_report.total_vectors == 1,
        flat_report.total_vectors.to_string(),
    );
    let partial = b12h12_space(g, QuantaState([1, 1, 2, 2, 3, 3, 1, 1, 2, 2, 3, 3]), SymmetryMode::Rotations)?;
    let (partial_report, _) = independent_sets_report(&ctx.bases, &partial, 0, SymmetryMode::Rotations)?;
    s.exact(
        M,
        "completeness: sets x dim = orbit size",
        partial_report.is_complete(),
        format!("{} vs {}", partial_report.total_dimension, partial_report.orbit_size),
    );
    Ok(())
}

fn parity_checks(s: &mut Suite, ctx: &Context) -> Result<()> {
    const M: &str = "parity";
    let g = &ctx.group;
    let model = build_c60(g, 1.0)?;
    if let Some(p) = s.result(M, "pairing commutes with H", parity_action(&model)) {
        let s12 = g.lookup("S12")?;
        let right = (0..ROTATION_COUNT).all(|r| p[r] == g.multiply(r, s12));
        s.exact(M, "pairing is an involution commuting with H", (0..60).all(|r| p[p[r]] == r), "");
        s.exact(M, "pairing is right multiplication by S12", right, "");
        let rel = c60_parity_relations_check(g, &p)?;
        s.value(M, "P Phi relations on C60 states", rel.max_deviation);
    }
    for arr in [Arrangement::A, Arrangement::B] {
        let m = build_c240(g, arr, 2.5)?;
        s.result(M, &format!("C240({arr}) parity commutes with H"), parity_action(&m));
    }
    Ok(())
}

fn huckel_checks(s: &mut Suite, ctx: &Context) -> Result<()> {
    const M: &str = "huckel";
    for alpha in ALPHA_SWEEP {
        if let Some(cmp) = s.result(M, "C60 blocks", c60_block_comparison(ctx, alpha)) {
            let entry = cmp.iter().map(|c| c.entry_deviation).fold(0.0, f64::max);
            s.value(M, format!("C60 blocks match closed forms entrywise, alpha={alpha}"), entry);
            let mut cf = 0.0f64;
            for c in &cmp {
                let want = closed_form_spectrum_c60(c.irrep, alpha);
                cf = cf.max(linalg::spectrum_deviation(&c.block.eigenvalues, &want));
            }
            s.value(M, format!("C60 closed-form levels, alpha={alpha}"), cf);
        }
        let c60 = build_c60(&ctx.group, alpha)?;
        for choice in [BasisChoice::Reference, BasisChoice::Generated] {
            let name = format!("C60 block union = dense spectrum ({choice:?} bases), alpha={alpha}");
            if let Some(d) = s.result(M, &name, decompose(ctx, &c60, choice)) {
                s.value(M, name, d.spectrum.max_deviation);
            }
        }
        for arr in [Arrangement::A, Arrangement::B] {
            if let Some(t) = s.result(M, "C240 tables", c240_block_tables(ctx, arr, alpha)) {
                let entry = t.iter().map(|c| c.entry_deviation).fold(0.0, f64::max);
                s.value(M, format!("C240({arr}) blocks match printed tables, alpha={alpha}"), entry);
            }
            let m = build_c240(&ctx.group, arr, alpha)?;
            let name = format!("C240({arr}) block union = dense spectrum, alpha={alpha}");
            if let Some(d) = s.result(M, &name, decompose(ctx, &m, BasisChoice::Reference)) {
                s.value(M, name, d.spectrum.max_deviation);
                let trace = (d.spectrum.trace_block - d.spectrum.trace_dense).abs();
                s.value(M, format!("C240({arr}) trace conservation, alpha={alpha}"), trace);
            }
        }
    }
    Ok(())
}

/// Runs every check with tolerance `tol`; construction failures become failed checks.
pub fn run_all(tol: f64) -> VerificationReport {
    let mut s = Suite { tol, checks: Vec::new() };
    let Some(ctx) = s.result("context", "build group, irreps and bases", Context::new()) else {
        return VerificationReport { tolerance: tol, checks: s.checks };
    };
    type Section = fn(&mut Suite, &Context) -> Result<()>;
    let sections: [(&'static str, Section); 6] = [
        ("icosa_group", |s, c| group_checks(s, &c.group)),
        ("irreps", irrep_checks),
        ("group_algebra", algebra_checks),
        ("sab", sab_checks),
        ("parity", parity_checks),
        ("huckel", huckel_checks),
    ];
    for (module, f) in sections {
        let r = f(&mut s, &ctx);
        s.result(module, "section completed", r);
    }
    VerificationReport { tolerance: tol, checks: s.checks }
}
