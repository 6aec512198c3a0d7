//! Exact computation of quasisymmetric Schur Q-functions and peak Young
//! quasisymmetric Schur functions, with the tableau combinatorics behind them.

pub mod composition;
pub mod insertion;
pub mod qsym;
pub mod standardize;
pub mod tableau;
pub mod verify;

pub use composition::{Composition, CompositionError, IndexSet};
pub use insertion::{InsertionError, InsertionResult};
pub use qsym::{Basis, QSymElement, QSymError};
pub use standardize::StandardizeError;
pub use tableau::{Entry, Family, Tableau, TableauError};
