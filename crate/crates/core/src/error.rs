use thiserror::Error;

pub type Result<T> = std::result::Result<T, IcosaError>;

#[derive(Debug, Error)]
pub enum IcosaError {
    #[error("rotation {element} sends vertex {vertex} {distance:.3e} away from every vertex")]
    SnapFailure {
        element: String,
        vertex: String,
        distance: f64,
    },
    #[error("composition {left}*{right} is not a table element")]
    ClosureViolation { left: String, right: String },
    #[error("class sum in irrep {irrep} is not scalar (off-scalar part {deviation:.3e})")]
    NotScalar { irrep: String, deviation: f64 },
    #[error("Wigner D^{ell} cannot be aligned with the icosahedral irreps (best deviation {deviation:.3e})")]
    ConventionMismatch { ell: usize, deviation: f64 },
    #[error("({mu}, {nu}) is not a valid index pair for Phi family {family}")]
    IndexInvalid { family: usize, mu: i32, nu: i32 },
    #[error("class operator leaks out of sector ({mu}, {nu}) by {leak:.3e}")]
    SectorLeak { mu: i32, nu: i32, leak: f64 },
    #[error("sector ({mu}, {nu}) has eigenvalue {value} that is repeated or matches no irrep")]
    DegenerateAmbiguity { mu: i32, nu: i32, value: f64 },
    #[error("phase of psi^{irrep}_({mu},{nu}) cannot be fixed: {reason}")]
    PhaseUnresolved {
        irrep: String,
        mu: i32,
        nu: i32,
        reason: String,
    },
    #[error("group action on the state space is not a homomorphism: {0}")]
    ActionInconsistent(String),
    #[error("Hamiltonian row {row} disagrees with the reference rows: {detail}")]
    RuleMismatch { row: String, detail: String },
    #[error("parity permutation does not commute with the Hamiltonian (deviation {deviation:.3e})")]
    NotSymmetry { deviation: f64 },
    #[error("block for {irrep} depends on the row index (deviation {deviation:.3e})")]
    RowDependence { irrep: String, deviation: f64 },
    #[error("block spectrum disagrees with dense diagonalization by {deviation:.3e} (worst block {irrep})")]
    SpectrumMismatch { irrep: String, deviation: f64 },
    #[error("unknown irreducible representation '{0}'")]
    UnknownIrrep(String),
    #[error("unknown group element '{0}'")]
    UnknownElement(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
