//! Frieze sequences of acyclic quivers.
//!
//! Exact integer frieze points, Coxeter transformations and their spectra,
//! linear recurrences in the tame cases and dimension certificates for
//! frieze varieties.

pub mod coxeter;
pub mod frieze;
pub mod linalg;
pub mod quiver;
pub mod recurrence;
pub mod report;
pub mod util;
pub mod variety;

pub use coxeter::{CoxeterData, CoxeterError};
pub use frieze::{frieze_points, FriezeError, FriezePoint, FriezeTrace};
pub use quiver::{parse_quiver, Diagram, Permutation, Quiver, QuiverError, ReprType};
pub use recurrence::{min_annihilator, Annihilator, RecurrenceError};
pub use variety::{estimate_dimension, DimensionReport, Verdict, VarietyError};
pub use report::{RunOptions, RunReport};
