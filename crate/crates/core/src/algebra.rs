//! Group algebra of **I** (and **I**h): `T0`-projected bases `Φ^(i)_{μν}`, the
//! five-fold class operator `W` on each `(μ, ν)` sector, and the 60 irreducible
//! bases `ψ^Γ_{μν}` obtained by diagonalizing `W`.
//!
//! The bases satisfy, for every `R ∈ I`,
//! `R ψ_{μν} = Σ_ρ ψ_{ρν} D_{ρμ}(R)` and `ψ_{μν} R = Σ_ρ D_{νρ}(R) ψ_{μρ}`.

use num_complex::Complex64;
use serde::Serialize;
use std::collections::BTreeMap;

use crate::error::{IcosaError, Result};
use crate::golden::eta_pow;
use crate::group::{IcosahedralGroup, ELEMENT_COUNT, ROTATION_COUNT};
use crate::irreps::{IrrepLabel, IrrepSet, Parity, ParityIrrep};
use crate::linalg::{self, hermitian_eigen, real, CMatrix};

/// Eigenvalue-to-irrep matching tolerance; the `α_Γ` are O(1) apart.
pub const EIGENVALUE_MATCH_TOLERANCE: f64 = 1e-6;
pub const SECTOR_LEAK_TOLERANCE: f64 = 1e-9;

/// Reduce an index mod 5 into `-2..=2`.
pub fn wrap_index(mu: i32) -> i32 {
    (mu + 2).rem_euclid(5) - 2
}

/// Complex coefficients over group elements (60 for **I**, 120 for **I**h).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlgebraVector {
    coeffs: Vec<Complex64>,
}

impl AlgebraVector {
    pub fn zeros(len: usize) -> Self {
        assert!(len == ROTATION_COUNT || len == ELEMENT_COUNT);
        AlgebraVector {
            coeffs: vec![Complex64::new(0.0, 0.0); len],
        }
    }

    pub fn element(id: usize, len: usize) -> Self {
        let mut v = Self::zeros(len);
        v.coeffs[id] = real(1.0);
        v
    }

    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Self {
        assert!(coeffs.len() == ROTATION_COUNT || coeffs.len() == ELEMENT_COUNT);
        AlgebraVector { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, id: usize) -> Complex64 {
        self.coeffs[id]
    }

    pub fn norm(&self) -> f64 {
        linalg::norm(&self.coeffs)
    }

    pub fn inner(&self, other: &AlgebraVector) -> Complex64 {
        linalg::inner(&self.coeffs, &other.coeffs)
    }

    pub fn scaled(&self, factor: Complex64) -> AlgebraVector {
        AlgebraVector {
            coeffs: self.coeffs.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn normalized(&self) -> AlgebraVector {
        self.scaled(real(1.0 / self.norm()))
    }

    pub fn add_scaled(&mut self, other: &AlgebraVector, factor: Complex64) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * factor;
        }
    }

    pub fn max_abs_diff(&self, other: &AlgebraVector) -> f64 {
        linalg::max_abs_diff_vec(&self.coeffs, &other.coeffs)
    }

    /// `g · v`: the coefficient of `R` moves to `gR`.
    pub fn left_mul(&self, group: &IcosahedralGroup, g: usize) -> AlgebraVector {
        let mut out = Self::zeros(self.len().max(if g >= ROTATION_COUNT { ELEMENT_COUNT } else { 0 }));
        for (r, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[group.multiply(g, r)] += c;
        }
        out
    }

    /// `v · g`: the coefficient of `R` moves to `Rg`.
    pub fn right_mul(&self, group: &IcosahedralGroup, g: usize) -> AlgebraVector {
        let mut out = Self::zeros(self.len().max(if g >= ROTATION_COUNT { ELEMENT_COUNT } else { 0 }));
        for (r, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[group.multiply(r, g)] += c;
        }
        out
    }

    /// Left multiplication by a sum of elements.
    pub fn left_mul_sum(&self, group: &IcosahedralGroup, elements: &[usize]) -> AlgebraVector {
        let mut out = Self::zeros(self.len());
        for &g in elements {
            out.add_scaled(&self.left_mul(group, g), real(1.0));
        }
        out
    }

    pub fn right_mul_sum(&self, group: &IcosahedralGroup, elements: &[usize]) -> AlgebraVector {
        let mut out = Self::zeros(self.len());
        for &g in elements {
            out.add_scaled(&self.right_mul(group, g), real(1.0));
        }
        out
    }

    /// Embeds a vector over **I** into the **I**h algebra (zero on `P·R`).
    pub fn to_parity_space(&self) -> AlgebraVector {
        let mut out = Self::zeros(ELEMENT_COUNT);
        out.coeffs[..self.len()].copy_from_slice(&self.coeffs);
        out
    }
}

/// `P_μ = (1/5) Σ_{λ=−2..2} η^{−μλ} T0^λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Projector {
    pub mu: i32,
}

impl Projector {
    pub fn new(mu: i32) -> Self {
        Projector { mu: wrap_index(mu) }
    }

    fn terms(&self, group: &IcosahedralGroup) -> Vec<(usize, Complex64)> {
        let t0 = group.lookup("T0").expect("T0 is a table element");
        (-2..=2)
            .map(|lambda| (group.power(t0, lambda), eta_pow(-self.mu * lambda) * 0.2))
            .collect()
    }

    pub fn apply_left(&self, group: &IcosahedralGroup, v: &AlgebraVector) -> AlgebraVector {
        let mut out = AlgebraVector::zeros(v.len());
        for (g, w) in self.terms(group) {
            out.add_scaled(&v.left_mul(group, g), w);
        }
        out
    }

    pub fn apply_right(&self, group: &IcosahedralGroup, v: &AlgebraVector) -> AlgebraVector {
        let mut out = AlgebraVector::zeros(v.len());
        for (g, w) in self.terms(group) {
            out.add_scaled(&v.right_mul(group, g), w);
        }
        out
    }

    /// The projector itself as an algebra element.
    pub fn as_vector(&self, group: &IcosahedralGroup) -> AlgebraVector {
        let mut out = AlgebraVector::zeros(ROTATION_COUNT);
        for (g, w) in self.terms(group) {
            out.coeffs[g] += w;
        }
        out
    }
}

/// The four double-coset families `Φ^(i)`, seeded by `E`, `S11`, `S5`, `S10`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PhiFamily {
    pub index: usize,
    pub seed: &'static str,
}

impl PhiFamily {
    pub const ALL: [PhiFamily; 4] = [
        PhiFamily { index: 1, seed: "E" },
        PhiFamily { index: 2, seed: "S11" },
        PhiFamily { index: 3, seed: "S5" },
        PhiFamily { index: 4, seed: "S10" },
    ];

    pub fn get(index: usize) -> Option<PhiFamily> {
        Self::ALL.get(index.wrapping_sub(1)).copied()
    }

    /// Family 1 needs `ν = μ`, family 2 `ν = −μ`, families 3 and 4 take any pair.
    pub fn admits(&self, mu: i32, nu: i32) -> bool {
        let (mu, nu) = (wrap_index(mu), wrap_index(nu));
        match self.index {
            1 => mu == nu,
            2 => mu == wrap_index(-nu),
            _ => true,
        }
    }

    pub fn size(&self) -> usize {
        match self.index {
            1 | 2 => 5,
            _ => 25,
        }
    }
}

/// Normalized `c · P_μ · seed · P_ν` with the seed's coefficient real and positive.
pub fn phi_basis(group: &IcosahedralGroup, family: usize, mu: i32, nu: i32) -> Result<AlgebraVector> {
    let invalid = || IcosaError::IndexInvalid { family, mu, nu };
    let fam = PhiFamily::get(family).ok_or_else(invalid)?;
    if !fam.admits(mu, nu) {
        return Err(invalid());
    }
    let seed = group.lookup(fam.seed)?;
    let v = AlgebraVector::element(seed, ROTATION_COUNT);
    let v = Projector::new(mu).apply_left(group, &v);
    let v = Projector::new(nu).apply_right(group, &v);
    let s = v.coeff(seed);
    Ok(v.scaled(real(1.0 / v.norm()) * (s.conj() / s.norm())))
}

/// The class operator restricted to one `(μ, ν)` sector.
#[derive(Debug, Clone)]
pub struct Sector {
    pub mu: i32,
    pub nu: i32,
    /// Family indices spanning the sector, ascending.
    pub families: Vec<usize>,
    pub phis: Vec<AlgebraVector>,
    /// `⟨Φ_i | W Φ_j⟩` for left multiplication by `W`.
    pub left_matrix: CMatrix,
    /// Same for right multiplication.
    pub right_matrix: CMatrix,
}

fn operator_matrix(
    group: &IcosahedralGroup,
    phis: &[AlgebraVector],
    class: &[usize],
    left: bool,
    mu: i32,
    nu: i32,
) -> Result<CMatrix> {
    let n = phis.len();
    let mut m = CMatrix::zeros(n, n);
    for (j, phi) in phis.iter().enumerate() {
        let image = if left {
            phi.left_mul_sum(group, class)
        } else {
            phi.right_mul_sum(group, class)
        };
        let mut residual = image.clone();
        for (i, basis) in phis.iter().enumerate() {
            let z = basis.inner(&image);
            m[(i, j)] = z;
            residual.add_scaled(basis, -z);
        }
        let leak = residual.norm();
        if leak > SECTOR_LEAK_TOLERANCE {
            return Err(IcosaError::SectorLeak { mu, nu, leak });
        }
    }
    Ok(m)
}

pub fn class_operator_sector(group: &IcosahedralGroup, mu: i32, nu: i32) -> Result<Sector> {
    let (mu, nu) = (wrap_index(mu), wrap_index(nu));
    let families: Vec<usize> = PhiFamily::ALL
        .iter()
        .filter(|f| f.admits(mu, nu))
        .map(|f| f.index)
        .collect();
    let phis = families
        .iter()
        .map(|&i| phi_basis(group, i, mu, nu))
        .collect::<Result<Vec<_>>>()?;
    let class = group.five_fold_class();
    let left_matrix = operator_matrix(group, &phis, &class, true, mu, nu)?;
    let right_matrix = operator_matrix(group, &phis, &class, false, mu, nu)?;
    Ok(Sector {
        mu,
        nu,
        families,
        phis,
        left_matrix,
        right_matrix,
    })
}

/// `ψ^Γ_{μν} = N^{−1/2} Σ_i C_i Φ^(i)_{μν}`, with the first nonzero `|C_i| = 1`.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionCoefficients {
    pub irrep: IrrepLabel,
    pub mu: i32,
    pub nu: i32,
    pub normalization: f64,
    /// `(family index, C_i)` for every family spanning the sector.
    pub combination: Vec<(usize, Complex64)>,
}

impl ReductionCoefficients {
    fn from_overlaps(irrep: IrrepLabel, mu: i32, nu: i32, overlaps: &[(usize, Complex64)]) -> Self {
        let lead = overlaps
            .iter()
            .map(|(_, z)| z.norm())
            .find(|&m| m > 1e-12)
            .expect("a unit vector has a nonzero component");
        ReductionCoefficients {
            irrep,
            mu,
            nu,
            normalization: 1.0 / (lead * lead),
            combination: overlaps.iter().map(|&(i, z)| (i, z / lead)).collect(),
        }
    }

    /// Rebuilds `ψ` from the `Φ` family; this is the only path that produces `ψ`.
    pub fn reconstruct(&self, group: &IcosahedralGroup) -> Result<AlgebraVector> {
        let mut out = AlgebraVector::zeros(ROTATION_COUNT);
        let scale = 1.0 / self.normalization.sqrt();
        for &(family, c) in &self.combination {
            let phi = phi_basis(group, family, self.mu, self.nu)?;
            out.add_scaled(&phi, c * scale);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone)]
pub struct IrreducibleBasis {
    pub irrep: IrrepLabel,
    pub mu: i32,
    pub nu: i32,
    pub vector: AlgebraVector,
    pub coefficients: ReductionCoefficients,
    /// Eigenvalue of `W` found for this vector in its sector.
    pub class_eigenvalue: f64,
}

/// All 60 `ψ^Γ_{μν}`.
#[derive(Debug, Clone)]
pub struct IrreducibleBases {
    bases: BTreeMap<(IrrepLabel, i32, i32), IrreducibleBasis>,
}

impl IrreducibleBases {
    pub fn psi(&self, irrep: IrrepLabel, mu: i32, nu: i32) -> &AlgebraVector {
        &self.get(irrep, mu, nu).vector
    }

    pub fn get(&self, irrep: IrrepLabel, mu: i32, nu: i32) -> &IrreducibleBasis {
        self.bases
            .get(&(irrep, mu, nu))
            .unwrap_or_else(|| panic!("no basis psi^{irrep}_({mu},{nu})"))
    }

    pub fn try_get(&self, irrep: IrrepLabel, mu: i32, nu: i32) -> Option<&IrreducibleBasis> {
        self.bases.get(&(irrep, mu, nu))
    }

    /// Bases in (irrep, row order, column order) order.
    pub fn iter(&self) -> impl Iterator<Item = &IrreducibleBasis> {
        IrrepLabel::ALL.into_iter().flat_map(move |l| {
            l.rows()
                .iter()
                .flat_map(move |&mu| l.rows().iter().map(move |&nu| self.get(l, mu, nu)))
        })
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    /// `ψ^{Γg/u}_{μν} = (E ± P) ψ^Γ_{μν} / √2` over the 120-element algebra.
    pub fn parity_basis(&self, irrep: ParityIrrep, mu: i32, nu: i32) -> AlgebraVector {
        parity_basis(self.psi(irrep.base, mu, nu), irrep.parity)
    }

    /// Largest deviation from the left and right transformation laws under `T0` and `S1`.
    pub fn transformation_deviation(&self, group: &IcosahedralGroup, irreps: &IrrepSet) -> (f64, f64) {
        let generators = [group.lookup("T0").unwrap(), group.lookup("S1").unwrap()];
        self.transformation_deviation_for(group, irreps, &generators)
    }

    pub fn transformation_deviation_for(
        &self,
        group: &IcosahedralGroup,
        irreps: &IrrepSet,
        elements: &[usize],
    ) -> (f64, f64) {
        let mut left = 0.0f64;
        let mut right = 0.0f64;
        for l in IrrepLabel::ALL {
            let rows = l.rows();
            for &g in elements {
                let d = irreps.rep_matrix(l, g);
                for (a, &mu) in rows.iter().enumerate() {
                    for (b, &nu) in rows.iter().enumerate() {
                        let psi = self.psi(l, mu, nu);
                        let mut want_left = AlgebraVector::zeros(ROTATION_COUNT);
                        let mut want_right = AlgebraVector::zeros(ROTATION_COUNT);
                        for (k, &rho) in rows.iter().enumerate() {
                            want_left.add_scaled(self.psi(l, rho, nu), d[(k, a)]);
                            want_right.add_scaled(self.psi(l, mu, rho), d[(b, k)]);
                        }
                        left = left.max(psi.left_mul(group, g).max_abs_diff(&want_left));
                        right = right.max(psi.right_mul(group, g).max_abs_diff(&want_right));
                    }
                }
            }
        }
        (left, right)
    }

    /// Largest `|⟨ψ_a, ψ_b⟩ − δ_ab|` over all 60 bases.
    pub fn orthonormality_defect(&self) -> f64 {
        let all: Vec<&AlgebraVector> = self.iter().map(|b| &b.vector).collect();
        let mut worst = 0.0f64;
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((a.inner(b) - want).norm());
            }
        }
        worst
    }
}

pub fn parity_basis(psi: &AlgebraVector, parity: Parity) -> AlgebraVector {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut out = AlgebraVector::zeros(ELEMENT_COUNT);
    for r in 0..ROTATION_COUNT {
        let c = psi.coeff(r);
        out.coeffs[r] = c * s;
        out.coeffs[r + ROTATION_COUNT] = c * s * parity.sign();
    }
    out
}

/// Diagonalize `W` on every sector, label eigenvectors by `α_Γ`, and fix phases
/// so that `S1` acts through the tabulated `D^Γ(S1)`.
pub fn reduce_all(group: &IcosahedralGroup, irreps: &IrrepSet) -> Result<IrreducibleBases> {
    let mut raw: BTreeMap<(IrrepLabel, i32, i32), (AlgebraVector, f64)> = BTreeMap::new();
    for mu in -2..=2 {
        for nu in -2..=2 {
            let sector = class_operator_sector(group, mu, nu)?;
            let eig = hermitian_eigen(&sector.left_matrix);
            for (k, &value) in eig.eigenvalues.iter().enumerate() {
                let irrep = IrrepLabel::ALL
                    .into_iter()
                    .find(|l| (l.class_operator_value() - value).abs() < EIGENVALUE_MATCH_TOLERANCE)
                    .filter(|l| l.row_position(mu).is_some() && l.row_position(nu).is_some())
                    .ok_or(IcosaError::DegenerateAmbiguity { mu, nu, value })?;
                let mut v = AlgebraVector::zeros(ROTATION_COUNT);
                for (i, phi) in sector.phis.iter().enumerate() {
                    v.add_scaled(phi, eig.eigenvectors[(i, k)]);
                }
                if raw.insert((irrep, mu, nu), (v, value)).is_some() {
                    return Err(IcosaError::DegenerateAmbiguity { mu, nu, value });
                }
            }
        }
    }

    let s1 = group.lookup("S1")?;
    let mut fixed: BTreeMap<(IrrepLabel, i32, i32), (AlgebraVector, f64)> = BTreeMap::new();
    for l in IrrepLabel::ALL {
        let rows = l.rows();
        let d = irreps.rep_matrix(l, s1);
        let mu0 = rows[0];
        let take = |mu: i32, nu: i32| raw.get(&(l, mu, nu)).cloned().expect("every sector was reduced");

        // Reference: the identity's coefficient in ψ_{μ0 μ0} is real and positive.
        let (v, value) = take(mu0, mu0);
        let e = v.coeff(group.identity());
        if e.norm() < 1e-9 {
            return Err(IcosaError::PhaseUnresolved {
                irrep: l.to_string(),
                mu: mu0,
                nu: mu0,
                reason: "identity coefficient vanishes".to_string(),
            });
        }
        fixed.insert((l, mu0, mu0), (v.scaled(e.conj() / e.norm()), value));

        // Column μ0: S1 ψ_{μ0 μ0} = Σ_ρ ψ_{ρ μ0} D_{ρ μ0}(S1).
        let s1_ref = fixed[&(l, mu0, mu0)].0.left_mul(group, s1);
        for (a, &mu) in rows.iter().enumerate().skip(1) {
            let (u, value) = take(mu, mu0);
            let phase = phase_from_overlap(l, mu, mu0, u.inner(&s1_ref), d[(a, 0)])?;
            fixed.insert((l, mu, mu0), (u.scaled(phase), value));
        }
        // Remaining columns: ψ_{μ μ0} S1 = Σ_ρ D_{μ0 ρ}(S1) ψ_{μ ρ}.
        for &mu in rows {
            let right = fixed[&(l, mu, mu0)].0.right_mul(group, s1);
            for (b, &nu) in rows.iter().enumerate().skip(1) {
                let (u, value) = take(mu, nu);
                let phase = phase_from_overlap(l, mu, nu, u.inner(&right), d[(0, b)])?;
                fixed.insert((l, mu, nu), (u.scaled(phase), value));
            }
        }
    }

    let mut bases = BTreeMap::new();
    for ((l, mu, nu), (v, value)) in fixed {
        let sector_families: Vec<usize> = PhiFamily::ALL
            .iter()
            .filter(|f| f.admits(mu, nu))
            .map(|f| f.index)
            .collect();
        let overlaps = sector_families
            .iter()
            .map(|&i| Ok((i, phi_basis(group, i, mu, nu)?.inner(&v))))
            .collect::<Result<Vec<_>>>()?;
        let coefficients = ReductionCoefficients::from_overlaps(l, mu, nu, &overlaps);
        let vector = coefficients.reconstruct(group)?;
        bases.insert(
            (l, mu, nu),
            IrreducibleBasis {
                irrep: l,
                mu,
                nu,
                vector,
                coefficients,
                class_eigenvalue: value,
            },
        );
    }
    Ok(IrreducibleBases { bases })
}

/// Given `⟨u, target⟩ = D · e^{−iθ}` for `u = e^{iθ} ψ`, the factor `e^{−iθ}`.
fn phase_from_overlap(l: IrrepLabel, mu: i32, nu: i32, overlap: Complex64, d: Complex64) -> Result<Complex64> {
    if d.norm() < 1e-6 || overlap.norm() < 1e-6 {
        return Err(IcosaError::PhaseUnresolved {
            irrep: l.to_string(),
            mu,
            nu,
            reason: format!("S1 matrix element {d} / overlap {overlap} too small"),
        });
    }
    let z = overlap / d;
    Ok(z / z.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::GoldenConstants;

    fn group() -> IcosahedralGroup {
        IcosahedralGroup::new().unwrap()
    }

    #[test]
    fn projector_zero_averages_t0_powers() {
        let g = group();
        let e = AlgebraVector::element(0, ROTATION_COUNT);
        let v = Projector::new(0).apply_left(&g, &e);
        for k in 0..5 {
            let t = g.power(g.lookup("T0").unwrap(), k);
            assert!((v.coeff(t) - real(0.2)).norm() < 1e-15);
        }
        assert!((v.norm() - 1.0 / 5f64.sqrt()).abs() < 1e-15);
        let w = Projector::new(0).apply_right(&g, &e);
        assert!(v.max_abs_diff(&w) < 1e-15);
    }

    #[test]
    fn projectors_are_orthogonal_idempotents() {
        let g = group();
        let x = AlgebraVector::element(g.lookup("S5").unwrap(), ROTATION_COUNT);
        let mut total = AlgebraVector::zeros(ROTATION_COUNT);
        for mu in -2..=2 {
            let p = Projector::new(mu);
            let once = p.apply_left(&g, &x);
            let twice = p.apply_left(&g, &once);
            assert!(once.max_abs_diff(&twice) < 1e-15);
            for nu in -2..=2 {
                if nu != mu {
                    assert!(Projector::new(nu).apply_left(&g, &once).norm() < 1e-15);
                }
            }
            total.add_scaled(&once, real(1.0));
        }
        assert!(total.max_abs_diff(&x) < 1e-15);
    }

    #[test]
    fn phi_one_and_two() {
        let g = group();
        let phi = phi_basis(&g, 1, 0, 0).unwrap();
        let t0 = g.lookup("T0").unwrap();
        for k in 0..5 {
            assert!((phi.coeff(g.power(t0, k)) - real(1.0 / 5f64.sqrt())).norm() < 1e-15);
        }
        let s14 = g.lookup("S14").unwrap();
        for mu in -2..=2 {
            let phi = phi_basis(&g, 2, mu, -mu).unwrap();
            assert!((phi.coeff(s14) - eta_pow(-mu) / 5f64.sqrt()).norm() < 1e-15);
        }
    }

    #[test]
    fn phi_three_terms() {
        // Φ^(3)_{μν} ∋ η^{μ−ν}(S4 + η^{−μ} R4^2 + η^{−2μ} T5^4 + η^{2μ} T3 + η^{μ} R3)/5
        let g = group();
        for (mu, nu) in [(1, -2), (2, 2), (0, 1)] {
            let phi = phi_basis(&g, 3, mu, nu).unwrap();
            let base = eta_pow(mu - nu) * 0.2;
            for (label, k) in [("S4", 0), ("R4^2", -mu), ("T5^4", -2 * mu), ("T3", 2 * mu), ("R3", mu)] {
                let want = base * eta_pow(k);
                assert!((phi.coeff(g.lookup(label).unwrap()) - want).norm() < 1e-15, "{label}");
            }
        }
    }

    #[test]
    fn phi_eigen_property() {
        let g = group();
        let t0 = g.lookup("T0").unwrap();
        for (mu, nu) in [(1, 2), (-2, 0), (0, 0)] {
            let phi = phi_basis(&g, 3, mu, nu).unwrap();
            let left = phi.left_mul(&g, t0);
            let right = phi.right_mul(&g, t0);
            assert!(left.max_abs_diff(&phi.scaled(eta_pow(mu))) < 1e-14);
            assert!(right.max_abs_diff(&phi.scaled(eta_pow(nu))) < 1e-14);
        }
    }

    #[test]
    fn invalid_indices() {
        let g = group();
        assert!(matches!(phi_basis(&g, 1, 1, 2), Err(IcosaError::IndexInvalid { .. })));
        assert!(matches!(phi_basis(&g, 2, 1, 1), Err(IcosaError::IndexInvalid { .. })));
        assert!(matches!(phi_basis(&g, 5, 0, 0), Err(IcosaError::IndexInvalid { .. })));
        assert!(phi_basis(&g, 2, 0, 0).is_ok());
    }

    #[test]
    fn sector_dimensions_sum_to_sixty() {
        let g = group();
        let mut total = 0;
        for mu in -2..=2 {
            for nu in -2..=2 {
                let s = class_operator_sector(&g, mu, nu).unwrap();
                let want = if mu == 0 && nu == 0 {
                    4
                } else if mu == nu || mu == -nu {
                    3
                } else {
                    2
                };
                assert_eq!(s.phis.len(), want, "({mu},{nu})");
                assert!(linalg::max_abs_diff(&s.left_matrix, &s.right_matrix) < 1e-12);
                total += want;
            }
        }
        assert_eq!(total, 60);
    }

    #[test]
    fn sector_spectra() {
        let g = group();
        let gc = GoldenConstants::new();
        let ev = linalg::hermitian_eigenvalues(&class_operator_sector(&g, 0, 0).unwrap().left_matrix);
        let want = linalg::sorted(vec![12.0, 4.0 * gc.p_inv, -4.0 * gc.p, 0.0]);
        assert!(linalg::spectrum_deviation(&ev, &want) < 1e-12);
        let ev = linalg::hermitian_eigenvalues(&class_operator_sector(&g, 2, 1).unwrap().left_matrix);
        assert!(linalg::spectrum_deviation(&ev, &[-3.0, 0.0]) < 1e-12);
    }

    #[test]
    fn reduction_reproduces_t1_combination() {
        let g = group();
        let r = IrrepSet::new(&g);
        let b = reduce_all(&g, &r).unwrap();
        assert_eq!(b.len(), 60);
        let c = &b.get(IrrepLabel::T1, 0, 0).coefficients;
        assert!((c.normalization - 4.0).abs() < 1e-12);
        let signs: Vec<f64> = c.combination.iter().map(|(_, z)| z.re).collect();
        for (got, want) in signs.iter().zip([1.0, -1.0, 1.0, -1.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        let a = b.psi(IrrepLabel::A, 0, 0);
        for x in 0..ROTATION_COUNT {
            assert!((a.coeff(x) - real(1.0 / 60f64.sqrt())).norm() < 1e-12);
        }
    }

    #[test]
    fn reconstruction_is_exact() {
        let g = group();
        let r = IrrepSet::new(&g);
        let b = reduce_all(&g, &r).unwrap();
        for basis in b.iter() {
            let again = basis.coefficients.reconstruct(&g).unwrap();
            assert_eq!(again, basis.vector);
        }
    }

    #[test]
    fn parity_bases() {
        let g = group();
        let r = IrrepSet::new(&g);
        let b = reduce_all(&g, &r).unwrap();
        let gg = ParityIrrep::new(IrrepLabel::H, Parity::Gerade);
        let uu = ParityIrrep::new(IrrepLabel::H, Parity::Ungerade);
        let vg = b.parity_basis(gg, 1, 0);
        let vu = b.parity_basis(uu, 1, 0);
        for x in 0..ROTATION_COUNT {
            assert_eq!(vg.coeff(x + 60), vg.coeff(x));
            assert_eq!(vu.coeff(x + 60), -vu.coeff(x));
        }
        assert!(vg.inner(&vu).norm() < 1e-15);
        assert!(vg.inner(&b.parity_basis(uu, 2, 2)).norm() < 1e-15);
        assert!((vg.norm() - 1.0).abs() < 1e-12);
    }
}
