//! Exact computations in the Hopf pair of quasisymmetric (`QSym`) and
//! noncommutative symmetric (`NSym`) functions, centred on the dual immaculate
//! and row-strict dual immaculate bases.

pub mod compositions;
pub mod error;
mod json;
pub mod nsym;
pub mod operators;
pub mod perm;
pub mod poly;
pub mod qsym;
pub mod skewhook;
mod sparse;
pub mod symfun;
pub mod tableaux;
pub mod verify;

pub use compositions::{Composition, Partition, SubsetOfPrefix};
pub use error::{Error, Result};
