//! Symmetry-adapted bases: irreducible bases of the group algebra applied to a
//! seed state of a permutation state space.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{parity_basis, phi_basis, AlgebraVector, IrreducibleBases};
use crate::error::{IcosaError, Result};
use crate::golden::eta_pow;
use crate::group::{IcosahedralGroup, ELEMENT_COUNT, ROTATION_COUNT};
use crate::irreps::{IrrepLabel, IrrepSet, Parity, ParityIrrep};
use crate::linalg::{self, real, CMatrix};

/// Relative pre-normalization norm (per orbit state) below which a raw SAB is zero.
pub const VANISHING_THRESHOLD: f64 = 1e-9;
/// Relative residual below which a candidate is dependent on the kept ones.
pub const DEPENDENCE_THRESHOLD: f64 = 1e-8;

/// Which group acts: **I** alone or **I**h.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SymmetryMode {
    Rotations,
    WithParity,
}

impl SymmetryMode {
    pub fn element_count(self) -> usize {
        match self {
            SymmetryMode::Rotations => ROTATION_COUNT,
            SymmetryMode::WithParity => ELEMENT_COUNT,
        }
    }

    pub fn irreps(self) -> Vec<SabIrrep> {
        match self {
            SymmetryMode::Rotations => IrrepLabel::ALL.into_iter().map(SabIrrep::Plain).collect(),
            SymmetryMode::WithParity => ParityIrrep::all().map(SabIrrep::Parity).collect(),
        }
    }
}

/// An irrep of **I** or of **I**h.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SabIrrep {
    Plain(IrrepLabel),
    Parity(ParityIrrep),
}

impl SabIrrep {
    pub fn base(self) -> IrrepLabel {
        match self {
            SabIrrep::Plain(l) => l,
            SabIrrep::Parity(p) => p.base,
        }
    }

    pub fn dim(self) -> usize {
        self.base().dim()
    }

    pub fn rows(self) -> &'static [i32] {
        self.base().rows()
    }

    pub fn rep_matrix(self, irreps: &IrrepSet, element: usize) -> CMatrix {
        match self {
            SabIrrep::Plain(l) => irreps.rep_matrix(l, element % ROTATION_COUNT).clone(),
            SabIrrep::Parity(p) => irreps.parity_rep_matrix(p, element),
        }
    }

    /// `ψ_{μν}` of this irrep as an algebra vector (120 entries for parity irreps).
    pub fn basis(self, bases: &IrreducibleBases, mu: i32, nu: i32) -> AlgebraVector {
        match self {
            SabIrrep::Plain(l) => bases.psi(l, mu, nu).clone(),
            SabIrrep::Parity(p) => parity_basis(bases.psi(p.base, mu, nu), p.parity),
        }
    }
}

impl fmt::Display for SabIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SabIrrep::Plain(l) => write!(f, "{l}"),
            SabIrrep::Parity(p) => write!(f, "{p}"),
        }
    }
}

/// A finite set of states with a permutation action of **I** or **I**h.
#[derive(Debug, Clone)]
pub struct StateSpace {
    labels: Vec<String>,
    /// `action[x][s]` is the state `x` sends `s` to.
    action: Vec<Vec<usize>>,
}

impl StateSpace {
    /// Validates bijectivity and `act(x, act(y, s)) = act(xy, s)`.
    pub fn new(group: &IcosahedralGroup, labels: Vec<String>, action: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if action.len() != ROTATION_COUNT && action.len() != ELEMENT_COUNT {
            return Err(IcosaError::ActionInconsistent(format!(
                "action table has {} rows, expected 60 or 120",
                action.len()
            )));
        }
        for (x, row) in action.iter().enumerate() {
            let mut seen = vec![false; n];
            if row.len() != n {
                return Err(IcosaError::ActionInconsistent(format!("row {x} has {} entries", row.len())));
            }
            for &s in row {
                if s >= n || std::mem::replace(&mut seen[s], true) {
                    return Err(IcosaError::ActionInconsistent(format!(
                        "{} does not act as a bijection",
                        group.label(x)
                    )));
                }
            }
        }
        for x in 0..action.len() {
            for y in 0..action.len() {
                let xy = group.multiply(x, y);
                for s in 0..n {
                    if action[x][action[y][s]] != action[xy][s] {
                        return Err(IcosaError::ActionInconsistent(format!(
                            "{}·({}·{}) differs from ({}·{})·{}",
                            group.label(x),
                            group.label(y),
                            labels[s],
                            group.label(x),
                            group.label(y),
                            labels[s]
                        )));
                    }
                }
            }
        }
        Ok(StateSpace { labels, action })
    }

    /// Orbit of `seed` under the first `mode.element_count()` elements, seed first.
    pub fn from_orbit<S, F, L>(group: &IcosahedralGroup, mode: SymmetryMode, seed: S, act: F, label: L) -> Result<Self>
    where
        S: Clone + Eq + Hash,
        F: Fn(usize, &S) -> S,
        L: Fn(&S) -> String,
    {
        let count = mode.element_count();
        let mut states = vec![seed.clone()];
        let mut index: HashMap<S, usize> = HashMap::from([(seed, 0)]);
        let mut next = 0;
        while next < states.len() {
            let s = states[next].clone();
            for x in 0..count {
                let t = act(x, &s);
                if !index.contains_key(&t) {
                    index.insert(t.clone(), states.len());
                    states.push(t);
                }
            }
            next += 1;
        }
        let action = (0..count)
            .map(|x| states.iter().map(|s| index[&act(x, s)]).collect())
            .collect();
        let labels = states.iter().map(label).collect();
        Self::new(group, labels, action)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn act(&self, x: usize, s: usize) -> usize {
        self.action[x][s]
    }

    pub fn mode(&self) -> SymmetryMode {
        if self.action.len() == ELEMENT_COUNT {
            SymmetryMode::WithParity
        } else {
            SymmetryMode::Rotations
        }
    }

    /// States reachable from `seed` under the elements of `mode`, ascending.
    pub fn orbit(&self, seed: usize, mode: SymmetryMode) -> Vec<usize> {
        let mut members: Vec<usize> = (0..mode.element_count()).map(|x| self.action[x][seed]).collect();
        members.sort_unstable();
        members.dedup();
        members
    }

    /// `(x·v)[act(x, s)] = v[s]`.
    pub fn act_on_vector(&self, x: usize, v: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
        for (s, &c) in v.iter().enumerate() {
            out[self.action[x][s]] = c;
        }
        out
    }

    /// `Σ_R c_R |act(R, seed)⟩`.
    pub fn apply(&self, psi: &AlgebraVector, seed: usize) -> Result<Vec<Complex64>> {
        if psi.len() > self.action.len() {
            return Err(IcosaError::InvalidArgument(
                "parity bases need a state space with a parity action".to_string(),
            ));
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.len()];
        for (x, &c) in psi.coeffs().iter().enumerate() {
            out[self.action[x][seed]] += c;
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SabVector {
    pub irrep: SabIrrep,
    pub mu: i32,
    /// Set index, dense from 1.
    pub tau: usize,
    /// Column `ν` of the irreducible basis that produced this set.
    pub nu: i32,
    pub coeffs: Vec<Complex64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Discard {
    Vanishing,
    Dependent,
}

/// All SAB of one irrep from one seed.
#[derive(Debug, Clone, Serialize)]
pub struct SabFamily {
    pub irrep: SabIrrep,
    /// `ν` of each kept set, in `τ` order.
    pub kept: Vec<i32>,
    pub discarded: Vec<(i32, Discard)>,
    /// Rank of the raw column vectors by singular values.
    pub svd_rank: usize,
    /// Row-major: `vectors[row position][τ − 1]`.
    pub vectors: Vec<Vec<SabVector>>,
}

impl SabFamily {
    pub fn set_count(&self) -> usize {
        self.kept.len()
    }

    pub fn row(&self, mu: i32) -> &[SabVector] {
        let pos = self.irrep.base().row_position(mu).expect("row of this irrep");
        &self.vectors[pos]
    }

    pub fn iter(&self) -> impl Iterator<Item = &SabVector> {
        self.vectors.iter().flatten()
    }

    /// Max over generators of `|x·v_{μτ} − Σ_ρ v_{ρτ} D_{ρμ}(x)|`.
    pub fn equivariance_deviation(&self, irreps: &IrrepSet, space: &StateSpace, elements: &[usize]) -> f64 {
        let mut worst = 0.0f64;
        let rows = self.irrep.rows();
        for &x in elements {
            let d = self.irrep.rep_matrix(irreps, x);
            for tau in 0..self.set_count() {
                for a in 0..rows.len() {
                    let moved = space.act_on_vector(x, &self.vectors[a][tau].coeffs);
                    let mut want = vec![Complex64::new(0.0, 0.0); moved.len()];
                    for (k, row) in self.vectors.iter().enumerate() {
                        for (w, c) in want.iter_mut().zip(&row[tau].coeffs) {
                            *w += c * d[(k, a)];
                        }
                    }
                    worst = worst.max(linalg::max_abs_diff_vec(&moved, &want));
                }
            }
        }
        worst
    }
}

fn svd_rank(columns: &[Vec<Complex64>]) -> usize {
    if columns.is_empty() {
        return 0;
    }
    let m = CMatrix::from_fn(columns[0].len(), columns.len(), |i, j| columns[j][i]);
    let sv = m.svd(false, false).singular_values;
    let top = sv.iter().cloned().fold(0.0, f64::max);
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > DEPENDENCE_THRESHOLD * top).count()
}

fn orthonormalize(v: &[Complex64], kept: &[Vec<Complex64>]) -> (Vec<Complex64>, f64) {
    let mut r = v.to_vec();
    for k in kept {
        let z = linalg::inner(k, &r);
        for (a, b) in r.iter_mut().zip(k) {
            *a -= b * z;
        }
    }
    let n = linalg::norm(&r);
    (r.iter().map(|z| z / n).collect(), n)
}

/// Applies every `ψ_{μν}` of `irrep` to `seed`, drops vanishing and dependent
/// `ν` columns (decided on the first row), and orthonormalizes within each row.
pub fn generate_sab(
    bases: &IrreducibleBases,
    space: &StateSpace,
    seed: usize,
    irrep: SabIrrep,
) -> Result<SabFamily> {
    let rows = irrep.rows();
    let orbit = space.orbit(seed, space.mode()).len() as f64;
    let raw: Vec<Vec<Vec<Complex64>>> = rows
        .iter()
        .map(|&mu| {
            rows.iter()
                .map(|&nu| space.apply(&irrep.basis(bases, mu, nu), seed))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let mut kept = Vec::new();
    let mut discarded = Vec::new();
    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    let mut nonzero = Vec::new();
    for (b, &nu) in rows.iter().enumerate() {
        let v = &raw[0][b];
        let n = linalg::norm(v);
        if n < VANISHING_THRESHOLD * orbit {
            discarded.push((nu, Discard::Vanishing));
            continue;
        }
        nonzero.push(v.clone());
        let (u, residual) = orthonormalize(v, &basis);
        if residual < DEPENDENCE_THRESHOLD * n {
            discarded.push((nu, Discard::Dependent));
            continue;
        }
        kept.push(b);
        basis.push(u);
    }

    let mut vectors = Vec::with_capacity(rows.len());
    for (a, &mu) in rows.iter().enumerate() {
        let mut row_basis: Vec<Vec<Complex64>> = Vec::new();
        let mut row = Vec::new();
        for (t, &b) in kept.iter().enumerate() {
            let (u, _) = orthonormalize(&raw[a][b], &row_basis);
            row_basis.push(u.clone());
            row.push(SabVector {
                irrep,
                mu,
                tau: t + 1,
                nu: rows[b],
                coeffs: u,
            });
        }
        vectors.push(row);
    }

    Ok(SabFamily {
        irrep,
        kept: kept.iter().map(|&b| rows[b]).collect(),
        discarded,
        svd_rank: svd_rank(&nonzero),
        vectors,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SetsEntry {
    pub irrep: SabIrrep,
    pub sets: usize,
    pub dim: usize,
    pub svd_rank: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SetsReport {
    pub mode: SymmetryMode,
    pub orbit_size: usize,
    pub entries: Vec<SetsEntry>,
    /// `Σ sets × d_Γ`.
    pub total_dimension: usize,
    pub total_sets: usize,
    pub total_vectors: usize,
}

impl SetsReport {
    pub fn sets(&self, irrep: SabIrrep) -> usize {
        self.entries.iter().find(|e| e.irrep == irrep).map_or(0, |e| e.sets)
    }

    pub fn is_complete(&self) -> bool {
        self.total_dimension == self.orbit_size
    }
}

/// Per-irrep count of independent SAB sets generated from `seed`.
pub fn independent_sets_report(
    bases: &IrreducibleBases,
    space: &StateSpace,
    seed: usize,
    mode: SymmetryMode,
) -> Result<(SetsReport, Vec<SabFamily>)> {
    if mode == SymmetryMode::WithParity && space.mode() != SymmetryMode::WithParity {
        return Err(IcosaError::InvalidArgument(
            "parity mode needs a state space with a parity action".to_string(),
        ));
    }
    let orbit_size = space.orbit(seed, mode).len();
    let mut families = Vec::new();
    let mut entries = Vec::new();
    for irrep in mode.irreps() {
        let family = generate_sab(bases, space, seed, irrep)?;
        entries.push(SetsEntry {
            irrep,
            sets: family.set_count(),
            dim: irrep.dim(),
            svd_rank: family.svd_rank,
        });
        families.push(family);
    }
    let total_dimension = entries.iter().map(|e| e.sets * e.dim).sum();
    let total_sets = entries.iter().map(|e| e.sets).sum();
    Ok((
        SetsReport {
            mode,
            orbit_size,
            entries,
            total_dimension,
            total_sets,
            total_vectors: total_dimension,
        },
        families,
    ))
}

/// Vibration quanta on the bonds `OA_0..OA_5`, `OB_0..OB_5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QuantaState(pub [u32; 12]);

impl QuantaState {
    pub fn n(&self) -> &[u32] {
        &self.0[..6]
    }

    pub fn m(&self) -> &[u32] {
        &self.0[6..]
    }
}

impl fmt::Display for QuantaState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[u32]| xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "|{};{}>", join(self.n()), join(self.m()))
    }
}

impl std::str::FromStr for QuantaState {
    type Err = IcosaError;

    /// Accepts `1,2,...,12` and the displayed `|n0,..,n5;m0,..,m5>` form.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('|').trim_end_matches('>');
        let values = body
            .split([',', ';'])
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| IcosaError::InvalidArgument(format!("quanta '{s}': {e}")))?;
        let arr: [u32; 12] = values
            .try_into()
            .map_err(|v: Vec<u32>| IcosaError::InvalidArgument(format!("expected 12 quanta, got {}", v.len())))?;
        Ok(QuantaState(arr))
    }
}

/// Quanta ride on their bonds: the quantum on bond `k` moves to bond `perm(k)`.
pub fn b12h12_action(group: &IcosahedralGroup, x: usize, s: &QuantaState) -> QuantaState {
    let mut out = [0u32; 12];
    for (k, &q) in s.0.iter().enumerate() {
        out[group.vertex_image(x, k)] = q;
    }
    QuantaState(out)
}

/// Orbit space of a B12H12 quanta state.
pub fn b12h12_space(group: &IcosahedralGroup, seed: QuantaState, mode: SymmetryMode) -> Result<StateSpace> {
    StateSpace::from_orbit(
        group,
        mode,
        seed,
        |x, s| b12h12_action(group, x, s),
        |s| s.to_string(),
    )
}

/// Result of checking `P|Φ^(1)_{μμ}⟩ = η^{2μ}|Φ^(2)_{μμ̄}⟩` and
/// `P|Φ^(3)_{μν}⟩ = η^{2μ−ν}|Φ^(4)_{μν̄}⟩` on the C60 states.
#[derive(Debug, Clone, Serialize)]
pub struct ParityRelationsReport {
    pub cases: usize,
    pub max_deviation: f64,
    pub max_norm_change: f64,
}

/// `parity[id(R)]` is the site `P|R⟩`.
pub fn c60_parity_relations_check(group: &IcosahedralGroup, parity: &[usize]) -> Result<ParityRelationsReport> {
    let state = |v: &AlgebraVector| v.coeffs()[..ROTATION_COUNT].to_vec();
    let apply_p = |v: &[Complex64]| {
        let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
        for (s, &c) in v.iter().enumerate() {
            out[parity[s]] = c;
        }
        out
    };
    let mut cases = 0;
    let mut max_deviation = 0.0f64;
    let mut max_norm_change = 0.0f64;
    let mut compare = |lhs: Vec<Complex64>, rhs: Vec<Complex64>, before: f64| {
        cases += 1;
        max_deviation = max_deviation.max(linalg::max_abs_diff_vec(&lhs, &rhs));
        max_norm_change = max_norm_change.max((linalg::norm(&lhs) - before).abs());
    };
    for mu in -2..=2 {
        let v = state(&phi_basis(group, 1, mu, mu)?);
        let w = state(&phi_basis(group, 2, mu, -mu)?);
        let rhs: Vec<Complex64> = w.iter().map(|z| z * eta_pow(2 * mu)).collect();
        compare(apply_p(&v), rhs, linalg::norm(&v));
        for nu in -2..=2 {
            let v = state(&phi_basis(group, 3, mu, nu)?);
            let w = state(&phi_basis(group, 4, mu, -nu)?);
            let rhs: Vec<Complex64> = w.iter().map(|z| z * eta_pow(2 * mu - nu)).collect();
            compare(apply_p(&v), rhs, linalg::norm(&v));
        }
    }
    Ok(ParityRelationsReport {
        cases,
        max_deviation,
        max_norm_change,
    })
}

/// Parity of a state-space vector under `parity`: `Some(g/u)` if `Pv = ±v`.
pub fn parity_of(v: &[Complex64], parity: &[usize], tol: f64) -> Option<Parity> {
    let mut pv = vec![real(0.0); v.len()];
    for (s, &c) in v.iter().enumerate() {
        pv[parity[s]] = c;
    }
    let plus = linalg::max_abs_diff_vec(&pv, v);
    let minus = pv.iter().zip(v).map(|(a, b)| (a + b).norm()).fold(0.0, f64::max);
    if plus < tol {
        Some(Parity::Gerade)
    } else if minus < tol {
        Some(Parity::Ungerade)
    } else {
        None
    }
}
