use alloc::string::String;
use core::fmt;

/// Errors raised by constructors, checks and searches in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A constructor was called outside its supported parameter range.
    InvalidParameter(String),
    /// A multiplication table failed a group axiom; the message names it.
    GroupAxiom(String),
    /// An operation was called on input violating its precondition.
    Precondition(String),
    /// The input graph is disconnected where connectivity is required.
    Disconnected,
    /// The subgroup is not normal.
    NotNormal,
    /// The group is not abelian.
    NotAbelian,
    /// The permutation does not preserve adjacency.
    NotAutomorphism,
    /// A search exceeded its size guard.
    SizeGuard(String),
    /// A search ran out of its time or step budget.
    BudgetExceeded,
    /// Malformed graph6 input.
    Graph6(String),
    /// Unknown catalog name.
    UnknownName(String),
    /// A catalog asset does not have its expected parameters.
    AssetInvalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(m) => write!(f, "invalid parameter: {m}"),
            Error::GroupAxiom(m) => write!(f, "group axiom failed: {m}"),
            Error::Precondition(m) => write!(f, "precondition violated: {m}"),
            Error::Disconnected => f.write_str("graph is disconnected"),
            Error::NotNormal => f.write_str("subgroup is not normal"),
            Error::NotAbelian => f.write_str("group is not abelian"),
            Error::NotAutomorphism => f.write_str("permutation is not an automorphism"),
            Error::SizeGuard(m) => write!(f, "size guard exceeded: {m}"),
            Error::BudgetExceeded => f.write_str("search budget exceeded"),
            Error::Graph6(m) => write!(f, "graph6: {m}"),
            Error::UnknownName(m) => write!(f, "unknown catalog name: {m}"),
            Error::AssetInvalid(m) => write!(f, "asset failed validation: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
