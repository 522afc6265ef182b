//! Engine-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller violated an operation's precondition (bad index, zero constant
    /// term where invertibility is required, inner series with nonzero constant
    /// term in a composition, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal cross-check failed: two independent routes disagreed, a
    /// residual that must vanish did not, or an enumerated count failed an
    /// exact identity.
    #[error("consistency failure: {0}")]
    Consistency(String),

    /// An enumeration was refused because its matching count exceeds the
    /// budget and `force` was not set.
    #[error("enumeration budget exceeded: {0}")]
    Budget(String),

    /// A resonant series coefficient is not determined by the linear recursion
    /// and no side input (built-in table, oracle run, user value) supplied it.
    #[error("unresolved resonant constant at genus {genus}, valence parameter {nu}, order {order}")]
    UnresolvedConstant { genus: usize, nu: usize, order: usize },

    /// A closed-form fit did not terminate into a stable rational function.
    #[error("closed-form reconstruction failed: {0}")]
    Reconstruction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
