//! Boundary slopes and the per-knot slope table.

use std::collections::BTreeMap;

use serde::Serialize;

use super::enumerate::{enumerate_systems, seifert_system, EdgepathSystem, SystemType};
use super::knot::MontesinosKnot;
use crate::error::{Error, Result};
use crate::incompress::{classify_system, Classification};
use crate::rational::{int, Rational};

/// `t(sys) - t(reference)`.
pub fn boundary_slope(sys: &EdgepathSystem, reference_twist: i64) -> Rational {
    sys.twist() - int(reference_twist)
}

/// Twist of the Seifert-pattern system, or the supplied override.
pub fn reference_twist(knot: &MontesinosKnot, override_twist: Option<i64>) -> Result<i64> {
    match override_twist {
        Some(t) => Ok(t),
        None => seifert_system(knot)?.twist_number(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SystemEntry {
    pub system: EdgepathSystem,
    #[serde(serialize_with = "crate::rational::serialize_rational")]
    pub twist: Rational,
    pub classification: Classification,
}

#[derive(Clone, Debug, Serialize)]
pub struct SlopeRecord {
    #[serde(serialize_with = "crate::rational::serialize_rational")]
    pub slope: Rational,
    pub entries: Vec<SystemEntry>,
}

impl SlopeRecord {
    /// Entries whose verdict is not Compressible.
    pub fn non_compressible(&self) -> impl Iterator<Item = &SystemEntry> {
        self.entries.iter().filter(|e| e.classification.verdict.status != crate::incompress::Status::Compressible)
    }
}

/// One record per distinct slope over all enumerated systems, ascending.
pub fn slope_table(knot: &MontesinosKnot, reference: i64, bound: u64) -> Result<Vec<SlopeRecord>> {
    let mut by_slope: BTreeMap<Rational, Vec<SystemEntry>> = BTreeMap::new();
    for kind in [SystemType::I, SystemType::II, SystemType::III] {
        for system in enumerate_systems(knot, kind)? {
            let twist = system.twist();
            let slope = &twist - int(reference);
            let classification = classify_system(&system, knot, bound);
            by_slope.entry(slope).or_default().push(SystemEntry { system, twist, classification });
        }
    }
    Ok(by_slope.into_iter().map(|(slope, entries)| SlopeRecord { slope, entries }).collect())
}

pub fn find_slope<'a>(table: &'a [SlopeRecord], slope: &Rational) -> Option<&'a SlopeRecord> {
    table.iter().find(|r| &r.slope == slope)
}

/// Convenience: the record for `4(n + 4)` in a knot of either family.
pub fn target_slope(n: u32) -> Rational {
    int(4 * (n as i64 + 4))
}

pub fn require_reference(knot: &MontesinosKnot, override_twist: Option<i64>) -> Result<i64> {
    reference_twist(knot, override_twist).map_err(|e| match e {
        Error::ReferenceTwistRequired(m) => Error::ReferenceTwistRequired(format!("{m}; pass --reference-twist")),
        other => other,
    })
}
