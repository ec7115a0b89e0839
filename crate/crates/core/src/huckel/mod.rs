//! Hückel Hamiltonians of C60 and C240 as weighted Cayley graphs of **I**,
//! their parity action, and block diagonalization by symmetry-adapted bases.

mod c240;
mod c60;

pub use c240::{c240_block_tables, c240_reference_basis, c240_reference_block};
pub use c60::{
    c60_block_comparison, c60_closed_form_block, c60_reference_basis, closed_form_spectrum_c60, cubic_real_roots,
};

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::Serialize;

use crate::context::Context;
use crate::error::{IcosaError, Result};
use crate::group::{IcosahedralGroup, ROTATION_COUNT};
use crate::irreps::ParityIrrep;
use crate::linalg::{self, hermitian_eigen, CMatrix};
use crate::sab::{generate_sab, SabIrrep, StateSpace};

/// Entrywise gate for blocks of different rows `μ`.
pub const ROW_TOLERANCE: f64 = 1e-8;
/// Per-eigenvalue gate between block union and dense spectrum.
pub const SPECTRUM_TOLERANCE: f64 = 1e-8;
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;

/// The 30 pairs `R(R′)` with `P|R⟩ = |R′⟩`.
pub const PARITY_PAIRS: [(&str, &str); 30] = [
    ("E", "S12"),
    ("S1", "S8"),
    ("R5^2", "T4^2"),
    ("R1", "T3^3"),
    ("T5^4", "R9"),
    ("T2", "R7^2"),
    ("T0", "S15"),
    ("R1^2", "T4^3"),
    ("T1^4", "S9"),
    ("S2", "R8^2"),
    ("T3", "T5^2"),
    ("R2", "R10"),
    ("T0^2", "S13"),
    ("T2^4", "R9^2"),
    ("T4", "T5^3"),
    ("R2^2", "R6"),
    ("R3", "S10"),
    ("S3", "T1^2"),
    ("T0^3", "S11"),
    ("T5", "R7"),
    ("R4", "R10^2"),
    ("T3^4", "T2^2"),
    ("S4", "T1^3"),
    ("R3^2", "S6"),
    ("T0^4", "S14"),
    ("R5", "T3^2"),
    ("S5", "R8"),
    ("T1", "S7"),
    ("R4^2", "R6^2"),
    ("T4^4", "T2^3"),
];

/// `σ = (1)(2)(34)` on the sublabels, zero-based.
pub const SIGMA: [usize; 4] = [0, 1, 3, 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Arrangement {
    A,
    B,
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Arrangement::A => "a",
            Arrangement::B => "b",
        })
    }
}

impl FromStr for Arrangement {
    type Err = IcosaError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(Arrangement::A),
            "b" => Ok(Arrangement::B),
            other => Err(IcosaError::InvalidArgument(format!("unknown bond arrangement '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Molecule {
    C60,
    C240(Arrangement),
}

impl Molecule {
    pub fn sublabels(self) -> usize {
        match self {
            Molecule::C60 => 1,
            Molecule::C240(_) => 4,
        }
    }
}

impl fmt::Display for Molecule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Molecule::C60 => f.write_str("C60"),
            Molecule::C240(a) => write!(f, "C240({a})"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct HuckelModel {
    pub molecule: Molecule,
    pub alpha: f64,
    pub matrix: DMatrix<f64>,
    /// `parity[site]` is the site `P|site⟩`.
    pub parity: Vec<usize>,
    labels: Vec<String>,
}

impl HuckelModel {
    pub fn size(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Site index of `|R, λ⟩` (`λ` is 1-based; C60 ignores it).
    pub fn site(&self, element: usize, lambda: usize) -> usize {
        match self.molecule {
            Molecule::C60 => element,
            Molecule::C240(_) => 4 * element + (lambda - 1),
        }
    }

    fn site_of(&self, group: &IcosahedralGroup, label: &str, lambda: usize) -> Result<usize> {
        Ok(self.site(group.lookup(label)?, lambda))
    }

    /// Site permutation of a rotation `x`: `|R, λ⟩ → |xR, λ⟩`.
    pub fn rotation_permutation(&self, group: &IcosahedralGroup, x: usize) -> Vec<usize> {
        let k = self.molecule.sublabels();
        (0..self.size())
            .map(|site| k * group.multiply(x, site / k) + site % k)
            .collect()
    }

    /// Max `|H[π(i), π(j)] − H[i, j]|` over the permutation `pi`.
    pub fn conjugation_defect(&self, pi: &[usize]) -> f64 {
        let n = self.size();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                worst = worst.max((self.matrix[(pi[i], pi[j])] - self.matrix[(i, j)]).abs());
            }
        }
        worst
    }

    /// The model's states as a state space of **I**h.
    pub fn state_space(&self, group: &IcosahedralGroup) -> Result<StateSpace> {
        let mut action = Vec::with_capacity(2 * ROTATION_COUNT);
        for x in 0..ROTATION_COUNT {
            action.push(self.rotation_permutation(group, x));
        }
        for x in 0..ROTATION_COUNT {
            let rot = &action[x];
            action.push(rot.iter().map(|&s| self.parity[s]).collect());
        }
        StateSpace::new(group, self.labels.clone(), action)
    }

    /// Dense oracle: ascending eigenvalues of the full matrix.
    pub fn dense_spectrum(&self) -> Vec<f64> {
        linalg::sorted(SymmetricEigen::new(self.matrix.clone()).eigenvalues.iter().copied().collect())
    }

    pub fn complex_matrix(&self) -> CMatrix {
        self.matrix.map(|x| Complex64::new(x, 0.0))
    }
}

pub(crate) fn pairing_permutation(group: &IcosahedralGroup) -> Result<Vec<usize>> {
    let mut map = vec![usize::MAX; ROTATION_COUNT];
    for (r, rp) in PARITY_PAIRS {
        let (a, b) = (group.lookup(r)?, group.lookup(rp)?);
        for (x, y) in [(a, b), (b, a)] {
            if map[x] != usize::MAX {
                return Err(IcosaError::NotSymmetry { deviation: f64::INFINITY });
            }
            map[x] = y;
        }
    }
    if map.contains(&usize::MAX) {
        return Err(IcosaError::NotSymmetry { deviation: f64::INFINITY });
    }
    Ok(map)
}

/// `(element label, λ)` of a site.
type SiteRef<'a> = (&'a str, usize);

fn check_rows(model: &HuckelModel, group: &IcosahedralGroup, rows: &[(SiteRef, Vec<(SiteRef, f64)>)]) -> Result<()> {
    for ((label, lambda), entries) in rows {
        let row = model.site_of(group, label, *lambda)?;
        let mut want = vec![0.0; model.size()];
        for ((l, m), w) in entries {
            want[model.site_of(group, l, *m)?] += w;
        }
        for (col, &w) in want.iter().enumerate() {
            let got = model.matrix[(row, col)];
            if (got - w).abs() > SYMMETRY_TOLERANCE {
                return Err(IcosaError::RuleMismatch {
                    row: model.labels[row].clone(),
                    detail: format!("entry at {} is {got}, expected {w}", model.labels[col]),
                });
            }
        }
    }
    Ok(())
}

/// C60: `|R⟩—|RT0⟩`, `|R⟩—|RT0⁴⟩` with `−α` and `|R⟩—|RS1⟩` with `α−2`.
pub fn build_c60(group: &IcosahedralGroup, alpha: f64) -> Result<HuckelModel> {
    let t0 = group.lookup("T0")?;
    let t4 = group.lookup("T0^4")?;
    let s1 = group.lookup("S1")?;
    let mut matrix = DMatrix::zeros(ROTATION_COUNT, ROTATION_COUNT);
    for r in 0..ROTATION_COUNT {
        matrix[(r, group.multiply(r, t0))] += -alpha;
        matrix[(r, group.multiply(r, t4))] += -alpha;
        matrix[(r, group.multiply(r, s1))] += alpha - 2.0;
    }
    let model = HuckelModel {
        molecule: Molecule::C60,
        alpha,
        matrix,
        parity: pairing_permutation(group)?,
        labels: (0..ROTATION_COUNT).map(|r| group.label(r).to_string()).collect(),
    };
    let (a, b) = (-alpha, alpha - 2.0);
    check_rows(
        &model,
        group,
        &[
            (("E", 1), vec![(("T0", 1), a), (("T0^4", 1), a), (("S1", 1), b)]),
            (("T0", 1), vec![(("E", 1), a), (("T0^2", 1), a), (("R1^2", 1), b)]),
            (("T0^4", 1), vec![(("E", 1), a), (("T0^3", 1), a), (("R5", 1), b)]),
            (("S1", 1), vec![(("R1", 1), a), (("R5^2", 1), a), (("E", 1), b)]),
        ],
    )?;
    parity_action(&model)?;
    Ok(model)
}

/// C240: four sites per element of **I**, bonded per the chosen arrangement.
pub fn build_c240(group: &IcosahedralGroup, arrangement: Arrangement, alpha: f64) -> Result<HuckelModel> {
    let t0 = group.lookup("T0")?;
    let s1 = group.lookup("S1")?;
    let n = 4 * ROTATION_COUNT;
    let site = |r: usize, lambda: usize| 4 * r + lambda - 1;
    let mut matrix = DMatrix::zeros(n, n);
    let mut bond = |i: usize, j: usize, w: f64| {
        matrix[(i, j)] += w;
        matrix[(j, i)] += w;
    };
    let (hop, hh) = (-alpha, alpha - 2.0);
    let (w_s1, w_t0) = match arrangement {
        Arrangement::A => (hop, hh),
        Arrangement::B => (hh, hop),
    };
    for r in 0..ROTATION_COUNT {
        bond(site(r, 1), site(r, 3), hop);
        bond(site(r, 1), site(r, 4), hop);
        bond(site(r, 1), site(r, 2), hh);
        bond(site(r, 2), site(group.multiply(r, t0), 2), hop);
        bond(site(r, 3), site(group.multiply(r, s1), 4), w_s1);
        bond(site(r, 3), site(group.multiply(r, t0), 4), w_t0);
    }
    let pairing = pairing_permutation(group)?;
    let parity = (0..n).map(|s| site(pairing[s / 4], SIGMA[s % 4] + 1)).collect();
    let labels = (0..n)
        .map(|s| format!("{},{}", group.label(s / 4), s % 4 + 1))
        .collect();
    let model = HuckelModel {
        molecule: Molecule::C240(arrangement),
        alpha,
        matrix,
        parity,
        labels,
    };
    let rows = match arrangement {
        Arrangement::A => vec![
            (("E", 3), vec![(("E", 1), hop), (("S1", 4), hop), (("T0", 4), hh)]),
            (("E", 4), vec![(("E", 1), hop), (("S1", 3), hop), (("T0^4", 3), hh)]),
        ],
        Arrangement::B => vec![
            (("E", 3), vec![(("E", 1), hop), (("S1", 4), hh), (("T0", 4), hop)]),
            (("E", 4), vec![(("E", 1), hop), (("S1", 3), hh), (("T0^4", 3), hop)]),
        ],
    };
    let mut all = vec![
        (("E", 1), vec![(("E", 3), hop), (("E", 4), hop), (("E", 2), hh)]),
        (("E", 2), vec![(("T0", 2), hop), (("T0^4", 2), hop), (("E", 1), hh)]),
    ];
    all.extend(rows);
    check_rows(&model, group, &all)?;
    parity_action(&model)?;
    Ok(model)
}

/// The parity permutation of the model, validated as an involution commuting with `H`.
pub fn parity_action(model: &HuckelModel) -> Result<Vec<usize>> {
    let p = &model.parity;
    if (0..p.len()).any(|s| p[p[s]] != s) {
        return Err(IcosaError::NotSymmetry { deviation: f64::INFINITY });
    }
    let deviation = model.conjugation_defect(p);
    if deviation > SYMMETRY_TOLERANCE {
        return Err(IcosaError::NotSymmetry { deviation });
    }
    Ok(p.clone())
}

/// Orthonormal basis vectors of one irrep: `rows[row position][τ]`.
#[derive(Debug, Clone)]
pub struct RowBases {
    pub irrep: ParityIrrep,
    pub rows: Vec<Vec<Vec<Complex64>>>,
}

impl RowBases {
    pub fn dim(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Largest `|⟨v_a, v_b⟩ − δ_ab|` within any row.
    pub fn gram_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for row in &self.rows {
            for (a, x) in row.iter().enumerate() {
                for (b, y) in row.iter().enumerate() {
                    let want = if a == b { 1.0 } else { 0.0 };
                    worst = worst.max((linalg::inner(x, y) - want).norm());
                }
            }
        }
        worst
    }
}

/// The Hamiltonian restricted to one irrep of **I**h.
#[derive(Debug, Clone, Serialize)]
pub struct BlockReport {
    pub irrep: ParityIrrep,
    pub dim: usize,
    /// Block for the first row `μ`.
    #[serde(skip)]
    pub matrix: CMatrix,
    pub eigenvalues: Vec<f64>,
    /// Max entrywise difference between the blocks of different rows.
    pub row_deviation: f64,
    pub hermiticity_defect: f64,
    pub gram_defect: f64,
}

/// `H^Γ_{ττ′} = ⟨v_τ|H|v_τ′⟩` in every row; all rows must agree.
pub fn block_decompose(model: &HuckelModel, basis: &RowBases) -> Result<BlockReport> {
    let h = model.complex_matrix();
    let blocks: Vec<CMatrix> = basis
        .rows
        .iter()
        .map(|row| {
            let images: Vec<Vec<Complex64>> = row
                .iter()
                .map(|v| (&h * nalgebra::DVector::from_column_slice(v)).iter().copied().collect())
                .collect();
            CMatrix::from_fn(row.len(), row.len(), |a, b| linalg::inner(&row[a], &images[b]))
        })
        .collect();
    let matrix = blocks.first().cloned().unwrap_or_else(|| CMatrix::zeros(0, 0));
    let row_deviation = blocks
        .iter()
        .map(|b| linalg::max_abs_diff(b, &matrix))
        .fold(0.0, f64::max);
    if row_deviation > ROW_TOLERANCE {
        return Err(IcosaError::RowDependence {
            irrep: basis.irrep.to_string(),
            deviation: row_deviation,
        });
    }
    let hermiticity_defect = if matrix.is_empty() {
        0.0
    } else {
        linalg::hermiticity_defect(&matrix)
    };
    Ok(BlockReport {
        irrep: basis.irrep,
        dim: matrix.nrows(),
        eigenvalues: hermitian_eigen(&matrix).eigenvalues,
        matrix,
        row_deviation,
        hermiticity_defect,
        gram_defect: basis.gram_defect(),
    })
}

/// Sublabel seeds whose orbits cover every site.
fn orbit_seeds(model: &HuckelModel) -> Vec<usize> {
    match model.molecule {
        Molecule::C60 => vec![0],
        Molecule::C240(_) => vec![model.site(0, 1), model.site(0, 2), model.site(0, 3)],
    }
}

/// SAB from the seeds `|E⟩` (C60) or `|E,1⟩, |E,2⟩, |E,3⟩` (C240).
pub fn sab_basis(ctx: &Context, model: &HuckelModel, space: &StateSpace, irrep: ParityIrrep) -> Result<RowBases> {
    let d = irrep.dim();
    let mut rows = vec![Vec::new(); d];
    for seed in orbit_seeds(model) {
        let family = generate_sab(&ctx.bases, space, seed, SabIrrep::Parity(irrep))?;
        for (a, row) in family.vectors.into_iter().enumerate() {
            rows[a].extend(row.into_iter().map(|v| v.coeffs));
        }
    }
    Ok(RowBases { irrep, rows })
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub block_union: Vec<f64>,
    pub dense: Vec<f64>,
    pub max_deviation: f64,
    /// Irrep contributing the worst-matching eigenvalue.
    pub worst_irrep: Option<ParityIrrep>,
    pub trace_block: f64,
    pub trace_dense: f64,
    /// `Σ dim × d_Γ`.
    pub dimension_tally: usize,
}

/// Block eigenvalues, each repeated `d_Γ` times, against the dense oracle.
pub fn spectrum_check(model: &HuckelModel, blocks: &[BlockReport]) -> Result<SpectrumReport> {
    let mut tagged: Vec<(f64, ParityIrrep)> = Vec::new();
    let mut trace_block = 0.0;
    for b in blocks {
        for &e in &b.eigenvalues {
            for _ in 0..b.irrep.dim() {
                tagged.push((e, b.irrep));
            }
        }
        trace_block += b.irrep.dim() as f64 * b.matrix.trace().re;
    }
    tagged.sort_by(|x, y| x.0.total_cmp(&y.0));
    let dense = model.dense_spectrum();
    let dimension_tally = tagged.len();
    let trace_dense = model.matrix.trace();
    if dimension_tally != dense.len() {
        return Err(IcosaError::SpectrumMismatch {
            irrep: format!("dimension tally {dimension_tally} of {}", dense.len()),
            deviation: f64::INFINITY,
        });
    }
    let mut max_deviation = 0.0f64;
    let mut worst_irrep = None;
    for ((e, l), d) in tagged.iter().zip(&dense) {
        let dev = (e - d).abs();
        if dev > max_deviation {
            max_deviation = dev;
            worst_irrep = Some(*l);
        }
    }
    let report = SpectrumReport {
        block_union: tagged.iter().map(|t| t.0).collect(),
        dense,
        max_deviation,
        worst_irrep,
        trace_block,
        trace_dense,
        dimension_tally,
    };
    if max_deviation > SPECTRUM_TOLERANCE {
        return Err(IcosaError::SpectrumMismatch {
            irrep: worst_irrep.map_or_else(String::new, |l| l.to_string()),
            deviation: max_deviation,
        });
    }
    Ok(report)
}

/// All ten **I**h blocks of a model, in `A_g, A_u, T1g, …` order.
#[derive(Debug, Clone, Serialize)]
pub struct Decomposition {
    pub molecule: Molecule,
    pub alpha: f64,
    pub blocks: Vec<BlockReport>,
    pub spectrum: SpectrumReport,
}

/// Which SAB to use for the blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BasisChoice {
    /// Generated by [`generate_sab`] from the orbit seeds.
    Generated,
    /// The explicit combinations printed with the block tables.
    Reference,
}

pub fn decompose(ctx: &Context, model: &HuckelModel, choice: BasisChoice) -> Result<Decomposition> {
    let space = match choice {
        BasisChoice::Generated => Some(model.state_space(&ctx.group)?),
        BasisChoice::Reference => None,
    };
    let mut blocks = Vec::new();
    for irrep in ParityIrrep::all() {
        let basis = match (&space, model.molecule) {
            (Some(space), _) => sab_basis(ctx, model, space, irrep)?,
            (None, Molecule::C60) => c60_reference_basis(ctx, irrep),
            (None, Molecule::C240(_)) => c240_reference_basis(ctx, irrep),
        };
        blocks.push(block_decompose(model, &basis)?);
    }
    let spectrum = spectrum_check(model, &blocks)?;
    Ok(Decomposition {
        molecule: model.molecule,
        alpha: model.alpha,
        blocks,
        spectrum,
    })
}

impl Decomposition {
    pub fn block(&self, irrep: ParityIrrep) -> &BlockReport {
        self.blocks.iter().find(|b| b.irrep == irrep).expect("all ten irreps present")
    }
}

pub(crate) fn place(psi: &[Complex64], lambda: usize, sublabels: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); ROTATION_COUNT * sublabels];
    for (r, &c) in psi.iter().take(ROTATION_COUNT).enumerate() {
        out[sublabels * r + lambda - 1] = c;
    }
    out
}

/// A computed block next to its closed-form counterpart.
#[derive(Debug, Clone, Serialize)]
pub struct TableComparison {
    pub irrep: ParityIrrep,
    pub alpha: f64,
    pub arrangement: Option<Arrangement>,
    pub block: BlockReport,
    #[serde(skip)]
    pub closed_form: CMatrix,
    /// Max entrywise `|computed − closed form|`.
    pub entry_deviation: f64,
    /// Max deviation of the sorted eigenvalues.
    pub spectrum_deviation: f64,
}

impl TableComparison {
    pub(crate) fn new(block: BlockReport, closed_form: CMatrix, alpha: f64, arrangement: Option<Arrangement>) -> Self {
        let (entry_deviation, spectrum_deviation) = if block.dim == closed_form.nrows() {
            (
                if block.dim == 0 {
                    0.0
                } else {
                    linalg::max_abs_diff(&block.matrix, &closed_form)
                },
                linalg::spectrum_deviation(&block.eigenvalues, &hermitian_eigen(&closed_form).eigenvalues),
            )
        } else {
            (f64::INFINITY, f64::INFINITY)
        };
        TableComparison {
            irrep: block.irrep,
            alpha,
            arrangement,
            block,
            closed_form,
            entry_deviation,
            spectrum_deviation,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irreps::{IrrepLabel, Parity};

    #[test]
    fn c60_rows_and_regularity() {
        let g = IcosahedralGroup::new().unwrap();
        let m = build_c60(&g, 1.0).unwrap();
        for i in 0..60 {
            let nz = (0..60).filter(|&j| m.matrix[(i, j)] != 0.0).count();
            assert_eq!(nz, 3);
        }
        assert_eq!(m.matrix, m.matrix.transpose());
        let z = build_c60(&g, 0.0).unwrap();
        for i in 0..60 {
            let row: Vec<f64> = (0..60).map(|j| z.matrix[(i, j)]).filter(|&x| x != 0.0).collect();
            assert_eq!(row, vec![-2.0]);
        }
    }

    #[test]
    fn pairing_is_right_multiplication_by_s12() {
        let g = IcosahedralGroup::new().unwrap();
        let m = build_c60(&g, 1.0).unwrap();
        let s12 = g.lookup("S12").unwrap();
        for r in 0..60 {
            assert_eq!(m.parity[r], g.multiply(r, s12));
        }
        assert_eq!(m.parity[0], s12);
        assert_eq!(m.parity[g.lookup("T0").unwrap()], g.lookup("S15").unwrap());
        assert!(parity_action(&m).is_ok());
    }

    #[test]
    fn c240_is_cubic_and_symmetric() {
        let g = IcosahedralGroup::new().unwrap();
        for arr in [Arrangement::A, Arrangement::B] {
            let m = build_c240(&g, arr, 1.0).unwrap();
            assert_eq!(m.matrix, m.matrix.transpose());
            for i in 0..240 {
                assert_eq!((0..240).filter(|&j| m.matrix[(i, j)] != 0.0).count(), 3);
            }
            let t0 = g.lookup("T0").unwrap();
            assert_eq!(m.conjugation_defect(&m.rotation_permutation(&g, t0)), 0.0);
            assert!(parity_action(&m).is_ok());
        }
    }

    #[test]
    fn arrangement_parse() {
        assert_eq!("a".parse::<Arrangement>().unwrap(), Arrangement::A);
        assert_eq!("B".parse::<Arrangement>().unwrap(), Arrangement::B);
        assert!("c".parse::<Arrangement>().is_err());
    }

    #[test]
    fn broken_parity_is_rejected() {
        let g = IcosahedralGroup::new().unwrap();
        let mut m = build_c60(&g, 1.0).unwrap();
        m.parity.swap(0, 1);
        assert!(parity_action(&m).is_err());
    }

    #[test]
    fn c60_generated_blocks() {
        let ctx = Context::new().unwrap();
        let m = build_c60(&ctx.group, 1.0).unwrap();
        let d = decompose(&ctx, &m, BasisChoice::Generated).unwrap();
        let ag = d.block(ParityIrrep::new(IrrepLabel::A, Parity::Gerade));
        assert_eq!(ag.dim, 1);
        assert!((ag.matrix[(0, 0)].re + 3.0).abs() < 1e-12);
        assert_eq!(d.block(ParityIrrep::new(IrrepLabel::A, Parity::Ungerade)).dim, 0);
        assert!(d.spectrum.max_deviation < 1e-10);
    }
}
