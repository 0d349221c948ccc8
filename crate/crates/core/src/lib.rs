//! Exact Galois-orbit analysis of modular data.
//!
//! Modular data (S and T matrices) is stored over a cyclotomic field and every check is
//! decided exactly. See the `examples/` directory for one runnable program per capability.

pub mod arith;
pub mod cyclotomic;
pub mod error;
pub mod families;
pub mod galois;
pub mod modular_data;
pub mod pointed;
pub mod report;
pub mod spectra;
pub mod subcat;

pub use cyclotomic::CycNum;
pub use error::{Error, Result};
pub use modular_data::{FusionTable, ModularData};
