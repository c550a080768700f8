//! Finite-category kernel for the free symmetric monoidal, free cartesian and
//! linear-non-linear 2-monads on `Cat`, with law checkers for their algebras.

pub mod category;
pub mod cli;
pub mod colimit;
pub mod error;
pub mod fincat;
pub mod lnl;
pub mod monad;
pub mod report;
pub mod semialg;
pub mod seq;
pub mod structure;
pub mod terms;
pub mod util;

pub use category::{Category, Functor, NatTransform, Sweep};
pub use error::{Error, Result};
pub use fincat::FinCat;
pub use report::LawReport;
