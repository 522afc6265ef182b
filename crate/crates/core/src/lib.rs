//! Exact-arithmetic engine for the genus expansion of the even-valence
//! one-matrix model: truncated rational series, the equilibrium-measure
//! closed forms, the continuum Toda hierarchy for the interface values `z_g`,
//! the free-energy coefficients `e_g` with their map-counting Taylor
//! coefficients, closed-form reconstruction, and a brute-force permutation
//! census that independently counts the same maps.

pub mod eg;
pub mod equilibrium;
pub mod error;
pub mod graded;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod poly;
pub mod printed;
pub mod rational;
pub mod series;
pub mod toda;

pub use eg::{EgClosedForm, EgState, Resonance, ResonancePolicy, ResonanceSource};
pub use error::{Error, Result};
pub use graded::GradedExpansion;
pub use monomial::MonomialSeries;
pub use oracle::{MapCensus, OracleTask};
pub use poly::{Poly, RationalFunction};
pub use rational::Rational;
pub use series::Series;
pub use toda::{Bivariate, ForcingRoute, HierarchyState, PartitionV, Walk};
