//! Icosahedral group **I** / **I**h toolkit: exact group tables, irreducible
//! representations, irreducible bases of the group algebra, symmetry-adapted
//! bases on arbitrary state spaces, and Hückel block diagonalization for the
//! C60 and C240 fullerenes.

pub mod algebra;
pub mod context;
pub mod error;
pub mod geometry;
pub mod golden;
pub mod huckel;
pub mod group;
pub mod irreps;
pub mod linalg;
pub mod sab;
pub mod verify;

pub use error::{IcosaError, Result};
pub use golden::{eta, eta_pow, GoldenConstants};
pub use group::{Decomposition, GroupElement, IcosahedralGroup};
pub use irreps::{IrrepLabel, IrrepSet, Parity, ParityIrrep};
pub use linalg::CMatrix;
pub use algebra::{AlgebraVector, IrreducibleBases};
pub use context::Context;
pub use huckel::{Arrangement, HuckelModel};
pub use sab::{QuantaState, SabIrrep, StateSpace, SymmetryMode};
