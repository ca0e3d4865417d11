//! Exact certification of local longitudinal rigidity for two-bridge knots.

pub mod algebra;
pub mod certify;
pub mod cohomology;
pub mod family_checks;
pub mod family_forms;
pub mod rep;
pub mod twobridge;
pub mod word;
