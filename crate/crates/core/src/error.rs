use std::fmt;

use thiserror::Error;

use crate::algebra::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a polynomial fails to be Y-distinguished (`Y^n + a_1(X)Y^(n-1) + ... + a_n(X)`
/// with every `a_i(0) = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistinguishedFailure {
    /// The polynomial does not involve Y.
    ConstantInY,
    /// The coefficient of the top power of Y is not 1.
    NotMonic,
    /// `f(0, Y)` has a term other than `Y^n`.
    TermAtOrigin { y_power: u32 },
}

impl fmt::Display for DistinguishedFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistinguishedFailure::ConstantInY => f.write_str("polynomial does not involve Y"),
            DistinguishedFailure::NotMonic => {
                f.write_str("leading coefficient in Y is not 1 (divide it out or change coordinates)")
            }
            DistinguishedFailure::TermAtOrigin { y_power } => write!(
                f,
                "f(0,Y) contains Y^{y_power} besides the top power of Y \
                 (move the singular point to the origin or shear Y -> Y + p(X))"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is a unit (order 0)")]
    Unit,
    #[error("not Y-distinguished: {0}")]
    NotDistinguished(DistinguishedFailure),
    #[error("polynomial has a multiple factor")]
    NotSquarefree,
    #[error("resultant undefined: both operands are constant in Y")]
    ConstantOperands,
    #[error("shear polynomial must vanish at 0")]
    ShearConstantTerm,
    #[error("linear substitution is not invertible")]
    SingularSubstitution,
    #[error("degree in Y is {0}, need at least 2")]
    DegreeTooSmall(u32),
    #[error("curve is smooth (order {0}); a singular curve is required")]
    Smooth(u32),
    #[error("polynomial is degenerate on some face of its Newton diagram")]
    Degenerate,
    #[error("invalid Newton diagram: {0}")]
    InvalidDiagram(String),
    #[error("Newton diagram does not touch both axes")]
    NotConvenient,
    #[error("first vertex of the diagram is not on the vertical axis")]
    NotYRegular,
    #[error("invalid generator sequence: {0}")]
    InvalidSequence(String),
    #[error("a singular branch (h >= 1) is required")]
    SmoothBranch,
    #[error("invalid Puiseux truncation: {0}")]
    InvalidTruncation(String),
    #[error("contact between roots {i} and {j} is unresolved: they agree through order {beyond}")]
    UnresolvedContact { i: usize, j: usize, beyond: Rational },
    #[error("roots {i} and {j} coincide")]
    DuplicateRoot { i: usize, j: usize },
    #[error("invalid contact matrix: {0}")]
    InvalidContactMatrix(String),
    #[error("ultrametric inequality violated: O({i},{j}) < min(O({i},{k}), O({j},{k}))")]
    NotUltrametric { i: usize, j: usize, k: usize },
    #[error("ball is a singleton")]
    SingletonBall,
    #[error("polar invariant {q} with multiplicity {m} does not give a lattice diagram")]
    NonIntegralFace { q: Rational, m: u64 },
    #[error("invalid branch family: {0}")]
    InvalidFamily(String),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("argument must be positive")]
    NonPositive,
    #[error("at least two branches are required")]
    TooFewBranches,
    #[error("{0}")]
    Inconsistent(String),
}
