//! The five irreducible representations of **I** and the ten of **I**h.
//!
//! Rows are eigenvectors of `D(T0)` with eigenvalue `η^μ`; the `S1` matrices are
//! fixed so that every matrix is real-symmetric at `S1`. All other matrices
//! follow from `x = T0^a R6^b S1^c S12^d`.

mod subduction;

pub use subduction::{
    euler_zyz, subduction_check, subduction_x_matrix, wigner_d, wigner_small_d, SubductionReport,
};

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{IcosaError, Result};
use crate::golden::{eta_pow, GoldenConstants};
use crate::group::{IcosahedralGroup, ROTATION_COUNT};
use crate::linalg::{max_abs_diff, real, CMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IrrepLabel {
    A,
    T1,
    T2,
    G,
    H,
}

impl IrrepLabel {
    pub const ALL: [IrrepLabel; 5] = [
        IrrepLabel::A,
        IrrepLabel::T1,
        IrrepLabel::T2,
        IrrepLabel::G,
        IrrepLabel::H,
    ];

    /// Row indices μ in matrix order.
    pub fn rows(self) -> &'static [i32] {
        match self {
            IrrepLabel::A => &[0],
            IrrepLabel::T1 => &[1, 0, -1],
            IrrepLabel::T2 => &[2, 0, -2],
            IrrepLabel::G => &[2, 1, -1, -2],
            IrrepLabel::H => &[2, 1, 0, -1, -2],
        }
    }

    pub fn dim(self) -> usize {
        self.rows().len()
    }

    /// Matrix position of row μ, if the irrep has it.
    pub fn row_position(self, mu: i32) -> Option<usize> {
        self.rows().iter().position(|&r| r == mu)
    }

    /// Eigenvalue of the five-fold class sum `Σ_j (T_j + T_j^4)`.
    pub fn class_operator_value(self) -> f64 {
        let g = GoldenConstants::new();
        match self {
            IrrepLabel::A => 12.0,
            IrrepLabel::T1 => 4.0 * g.p_inv,
            IrrepLabel::T2 => -4.0 * g.p,
            IrrepLabel::G => -3.0,
            IrrepLabel::H => 0.0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            IrrepLabel::A => "A",
            IrrepLabel::T1 => "T1",
            IrrepLabel::T2 => "T2",
            IrrepLabel::G => "G",
            IrrepLabel::H => "H",
        }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IrrepLabel {
    type Err = IcosaError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "A1" => Ok(IrrepLabel::A),
            "T1" => Ok(IrrepLabel::T1),
            "T2" => Ok(IrrepLabel::T2),
            "G" => Ok(IrrepLabel::G),
            "H" => Ok(IrrepLabel::H),
            other => Err(IcosaError::UnknownIrrep(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Gerade,
    Ungerade,
}

impl Parity {
    pub fn sign(self) -> f64 {
        match self {
            Parity::Gerade => 1.0,
            Parity::Ungerade => -1.0,
        }
    }

    pub fn suffix(self) -> char {
        match self {
            Parity::Gerade => 'g',
            Parity::Ungerade => 'u',
        }
    }
}

impl FromStr for Parity {
    type Err = IcosaError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "g" | "G" | "+" | "even" => Ok(Parity::Gerade),
            "u" | "U" | "-" | "odd" => Ok(Parity::Ungerade),
            other => Err(IcosaError::InvalidArgument(format!("parity '{other}'"))),
        }
    }
}

/// An irrep of **I**h: `D^{Γg/u}(P·R) = ±D^Γ(R)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParityIrrep {
    pub base: IrrepLabel,
    pub parity: Parity,
}

impl ParityIrrep {
    pub fn new(base: IrrepLabel, parity: Parity) -> Self {
        ParityIrrep { base, parity }
    }

    /// `Ag, Au, T1g, T1u, …, Hg, Hu`.
    pub fn all() -> impl Iterator<Item = ParityIrrep> {
        IrrepLabel::ALL.into_iter().flat_map(|b| {
            [Parity::Gerade, Parity::Ungerade]
                .into_iter()
                .map(move |p| ParityIrrep::new(b, p))
        })
    }

    pub fn dim(self) -> usize {
        self.base.dim()
    }
}

impl fmt::Display for ParityIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.base, self.parity.suffix())
    }
}

/// Accepts `T1u`, `T1_u`, `Ag`, `A_g` and `A1g`.
impl FromStr for ParityIrrep {
    type Err = IcosaError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let unknown = || IcosaError::UnknownIrrep(t.to_string());
        let (head, last) = t.split_at(t.len().checked_sub(1).ok_or_else(unknown)?);
        let parity: Parity = last.parse().map_err(|_| unknown())?;
        let base = head.trim_end_matches('_');
        let base: IrrepLabel = base.parse().map_err(|_| unknown())?;
        Ok(ParityIrrep::new(base, parity))
    }
}

/// Generator matrices `(D(T0), D(S1))` for an irrep.
pub fn generator_matrices(label: IrrepLabel) -> (CMatrix, CMatrix) {
    let g = GoldenConstants::new();
    let (p, q) = (g.p, g.p_inv);
    let s5 = 5f64.sqrt();
    let r2 = 2f64.sqrt();
    let r6 = 6f64.sqrt();

    let t0 = CMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        label.dim(),
        label.rows().iter().map(|&mu| eta_pow(mu)),
    ));
    let (scale, entries): (f64, Vec<f64>) = match label {
        IrrepLabel::A => (1.0, vec![1.0]),
        IrrepLabel::T1 => (
            s5,
            vec![-q, -r2, -p, -r2, 1.0, r2, -p, r2, -q],
        ),
        IrrepLabel::T2 => (
            s5,
            vec![-p, r2, q, r2, -1.0, r2, q, r2, -p],
        ),
        IrrepLabel::G => (
            s5,
            vec![
                -1.0, -p, -q, 1.0, //
                -p, 1.0, -1.0, -q, //
                -q, -1.0, 1.0, -p, //
                1.0, -q, -p, -1.0,
            ],
        ),
        IrrepLabel::H => (
            5.0,
            vec![
                q * q, 2.0 * q, r6, 2.0 * p, p * p, //
                2.0 * q, p * p, -r6, -q * q, -2.0 * p, //
                r6, -r6, -1.0, r6, r6, //
                2.0 * p, -q * q, r6, p * p, -2.0 * q, //
                p * p, -2.0 * p, r6, -2.0 * q, q * q,
            ],
        ),
    };
    let d = label.dim();
    let s1 = CMatrix::from_row_iterator(d, d, entries.into_iter().map(|x| real(x / scale)));
    (t0, s1)
}

/// One irrep of **I**, with matrices cached for all 60 rotations.
#[derive(Debug, Clone)]
pub struct Irrep {
    pub label: IrrepLabel,
    matrices: Vec<CMatrix>,
}

impl Irrep {
    pub fn build(group: &IcosahedralGroup, label: IrrepLabel) -> Self {
        let (t0, s1) = generator_matrices(label);
        // R6 = S1 T0^2 S1 T0^4 and S12 = R6^2 S1 R6.
        let r6 = &s1 * t0.pow(2) * &s1 * t0.pow(4);
        let s12 = r6.pow(2) * &s1 * &r6;
        let matrices = group
            .rotations()
            .iter()
            .map(|x| {
                let dec = x.decomposition;
                t0.pow(u32::from(dec.a))
                    * r6.pow(u32::from(dec.b))
                    * s1.pow(u32::from(dec.c))
                    * s12.pow(u32::from(dec.d))
            })
            .collect();
        Irrep { label, matrices }
    }

    pub fn dim(&self) -> usize {
        self.label.dim()
    }

    /// `D^Γ(x)`; for `P·R` this is `D^Γ(R)` (the gerade extension).
    pub fn matrix(&self, element: usize) -> &CMatrix {
        &self.matrices[element % ROTATION_COUNT]
    }

    pub fn character(&self, element: usize) -> num_complex::Complex64 {
        self.matrix(element).trace()
    }
}

/// All five irreps of **I**, built eagerly.
#[derive(Debug, Clone)]
pub struct IrrepSet {
    irreps: Vec<Irrep>,
}

impl IrrepSet {
    pub fn new(group: &IcosahedralGroup) -> Self {
        IrrepSet {
            irreps: IrrepLabel::ALL
                .iter()
                .map(|&l| Irrep::build(group, l))
                .collect(),
        }
    }

    pub fn get(&self, label: IrrepLabel) -> &Irrep {
        &self.irreps[label as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Irrep> {
        self.irreps.iter()
    }

    pub fn rep_matrix(&self, label: IrrepLabel, element: usize) -> &CMatrix {
        self.get(label).matrix(element)
    }

    /// `D^{Γg/u}(x)` over all 120 elements.
    pub fn parity_rep_matrix(&self, irrep: ParityIrrep, element: usize) -> CMatrix {
        let m = self.rep_matrix(irrep.base, element).clone();
        if element >= ROTATION_COUNT && irrep.parity == Parity::Ungerade {
            -m
        } else {
            m
        }
    }

    /// Character of `Γ` on a class, after checking it is constant across the class.
    pub fn character(&self, group: &IcosahedralGroup, label: IrrepLabel, class: usize) -> Result<f64> {
        let members = &group.conjugacy_classes()[class].members;
        let irrep = self.get(label);
        let first = irrep.character(members[0]);
        let spread = members
            .iter()
            .map(|&m| (irrep.character(m) - first).norm())
            .fold(0.0, f64::max);
        if spread > 1e-10 || first.im.abs() > 1e-10 {
            return Err(IcosaError::NotScalar {
                irrep: label.to_string(),
                deviation: spread.max(first.im.abs()),
            });
        }
        Ok(first.re)
    }

    /// Character table: rows in [`IrrepLabel::ALL`] order, columns in class order.
    pub fn character_table(&self, group: &IcosahedralGroup) -> Result<Vec<Vec<f64>>> {
        IrrepLabel::ALL
            .iter()
            .map(|&l| {
                (0..group.conjugacy_classes().len())
                    .map(|c| self.character(group, l, c))
                    .collect()
            })
            .collect()
    }

    /// `α_Γ` with `Σ_j (D(T_j) + D(T_j^4)) = α_Γ · 1`.
    pub fn class_operator_eigenvalue(&self, group: &IcosahedralGroup, label: IrrepLabel) -> Result<f64> {
        let irrep = self.get(label);
        let d = irrep.dim();
        let sum = group
            .five_fold_class()
            .iter()
            .fold(CMatrix::zeros(d, d), |acc, &x| acc + irrep.matrix(x));
        let alpha = sum[(0, 0)];
        let deviation = max_abs_diff(&sum, &(CMatrix::identity(d, d) * alpha));
        if deviation > 1e-9 || alpha.im.abs() > 1e-9 {
            return Err(IcosaError::NotScalar {
                irrep: label.to_string(),
                deviation: deviation.max(alpha.im.abs()),
            });
        }
        Ok(alpha.re)
    }
}
