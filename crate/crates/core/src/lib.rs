//! Exact decision procedures for the Hartogs extension phenomenon on
//! spherical varieties described by colored fans.
//!
//! The pipeline validates a colored fan, refines its valuation cone by the
//! hyperplane arrangement of the fan to locate the gap `V ∖ |Σ|`, and
//! compares the cone generated by the gap and the color points with the
//! whole space. Every verdict comes with a certificate checkable by direct
//! evaluation.

pub mod arrangement;
pub mod cli;
pub mod coloredfan;
pub mod cones;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod hartogs;
pub mod horospherical;
pub mod lp;

pub use coloredfan::{ColorTable, ColoredCone, ColoredFan};
pub use cones::Cone;
pub use error::{Error, Result};
pub use exactlin::{Rat, RatMat, RatVec};
pub use hartogs::{check_hartogs, verify_certificate, Certificate, HartogsReport, Options};
