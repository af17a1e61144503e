//! Edgepath systems for Montesinos knots.

pub mod enumerate;
pub mod knot;
pub mod path;
pub mod slope;

pub use enumerate::{
    basic_paths, basic_systems, enumerate_systems, farey_parents, seifert_system, system_twist, type_two_twist_formula,
    EdgepathSystem, SystemType,
};
pub use knot::{parse_reduced, Family, MontesinosKnot};
pub use path::Edgepath;
pub use slope::{boundary_slope, find_slope, reference_twist, slope_table, target_slope, SlopeRecord, SystemEntry};
