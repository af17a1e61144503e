//! Final r-value cycles, complete reversibility, and the rule table of
//! compressibility judgments.

use std::fmt;

use serde::Serialize;

use crate::curve::{r_value, share_edge, Vertex};
use crate::edgepath::{Edgepath, EdgepathSystem, Family, MontesinosKnot, SystemType};
use crate::error::{Error, Result};
use num_traits::Signed;

use crate::rational::{int, Rational};

/// Denominator slack for triangle searches when no override is given.
pub const DEFAULT_TRIANGLE_BOUND: u64 = 2;

/// Signed integers defined up to cyclic rotation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RCycle(pub Vec<i64>);

impl RCycle {
    /// Equal up to rotation (not reflection).
    pub fn cyclic_eq(&self, other: &[i64]) -> bool {
        let a = &self.0;
        if a.len() != other.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..a.len()).any(|k| (0..a.len()).all(|i| a[(i + k) % a.len()] == other[i]))
    }
}

impl fmt::Display for RCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// r-value of each path's last non-horizontal edge.
pub fn final_r_cycle(sys: &EdgepathSystem) -> Result<RCycle> {
    sys.paths
        .iter()
        .map(|p| {
            let e = p.last_non_horizontal().ok_or(Error::NoFinalRValue)?;
            r_value(&e)
        })
        .collect::<Result<Vec<_>>>()
        .map(RCycle)
}

/// Outcome of the reversibility test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reversibility {
    /// Result of the triangle test.
    pub formal: bool,
    /// Verdict recorded in the fixture table, if the path is listed.
    pub fixture: Option<bool>,
    /// Disagreement between the two, if any.
    pub discrepancy: Option<String>,
}

impl Reversibility {
    /// The fixture wins when present.
    pub fn verdict(&self) -> bool {
        self.fixture.unwrap_or(self.formal)
    }
}

/// Paths `[∞, 0, 1/q]` are asserted reversible through the triangle
/// `[1/q, 0, 1]`, which is not a triangle of the diagram for `q > 2`.
fn fixture_verdict(path: &Edgepath) -> Option<bool> {
    let v = path.vertices();
    if v.len() == 3 && v[0] == Vertex::Infinity && v[1] == Vertex::integer(0) {
        if let Vertex::Tangle(x) = &v[2] {
            if x.numer() == &1.into() && x.denom() >= &2.into() {
                return Some(true);
            }
        }
    }
    None
}

/// Each pair of successive edges lies in triangles that share an edge.
pub fn formal_reversible(path: &Edgepath, bound: u64) -> bool {
    let tris = path.edge_triangles(bound);
    tris.windows(2).all(|w| w[0].iter().any(|s| w[1].iter().any(|t| share_edge(s, t))))
}

pub fn completely_reversible(path: &Edgepath, bound: u64) -> Reversibility {
    let formal = formal_reversible(path, bound);
    let fixture = fixture_verdict(path);
    let discrepancy = match fixture {
        Some(f) if f != formal => Some(format!("{path}: triangle test gives {formal}, fixture asserts {f}")),
        _ => None,
    };
    if let Some(d) = &discrepancy {
        log::debug!("{d}");
    }
    Reversibility { formal, fixture, discrepancy }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Compressible,
    IncompressibleExtendable,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    #[serde(rename = "R-A")]
    RA,
    #[serde(rename = "R-B")]
    RB,
    #[serde(rename = "R-C")]
    RC,
    #[serde(rename = "none")]
    None,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::RA => "R-A",
            Rule::RB => "R-B",
            Rule::RC => "R-C",
            Rule::None => "none",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub rule: Rule,
    pub notes: String,
}

impl Verdict {
    fn unknown(notes: impl Into<String>) -> Self {
        Verdict { status: Status::Unknown, rule: Rule::None, notes: notes.into() }
    }
}

/// Everything the rules look at, kept for reports.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub r_cycle: Option<RCycle>,
    pub reversibility: Vec<Reversibility>,
}

/// The cycle `(-4, 1, -2n, 1)` declared dead for the mutant's type II class.
pub fn dead_cycle(n: u32) -> Vec<i64> {
    vec![-4, 1, -2 * n as i64, 1]
}

/// The cycle `(1, -4, -2n, 1)` declared extendable for `K_n`.
pub fn live_cycle(n: u32) -> Vec<i64> {
    vec![1, -4, -2 * n as i64, 1]
}

/// Rule table:
/// R-A (type III) integer-vertex sum of absolute value 1 and two completely reversible
/// paths give Compressible; R-B (type II) a cycle matching `(-4, 1, -2n, 1)`
/// gives Compressible; R-C (type II) a cycle matching `(1, -4, -2n, 1)` with
/// all basic paths ending at `u = 0`, minimal, and positive final `v`-sum
/// gives IncompressibleExtendable. Everything else is Unknown.
pub fn classify_system(sys: &EdgepathSystem, knot: &MontesinosKnot, bound: u64) -> Classification {
    let r_cycle = final_r_cycle(sys).ok();
    let family = knot.family();
    match sys.kind {
        SystemType::III => {
            let rev: Vec<Reversibility> = sys.paths.iter().map(|p| completely_reversible(p, bound)).collect();
            let count = rev.iter().filter(|r| r.verdict()).count();
            let sum = sys.integer_vertex_sum().unwrap_or_default();
            let verdict = if sum.abs() == int(1) && count >= 2 {
                Verdict {
                    status: Status::Compressible,
                    rule: Rule::RA,
                    notes: format!("integer vertex sum {sum}, {count} completely reversible paths"),
                }
            } else {
                Verdict::unknown(format!("integer vertex sum {sum}, {count} completely reversible paths"))
            };
            Classification { verdict, r_cycle, reversibility: rev }
        }
        SystemType::II => {
            let verdict = match (&r_cycle, family) {
                (Some(c), Some(fam)) if c.cyclic_eq(&dead_cycle(fam.n())) => Verdict {
                    status: Status::Compressible,
                    rule: Rule::RB,
                    notes: format!("final r-values {c} match (-4, 1, -2n, 1) at n = {}", fam.n()),
                },
                (Some(c), Some(fam)) if c.cyclic_eq(&live_cycle(fam.n())) => rule_c(sys, c, fam),
                (Some(c), _) => Verdict::unknown(format!("final r-values {c} match no recorded pattern")),
                (None, _) => Verdict::unknown("a path has no non-horizontal edge"),
            };
            Classification { verdict, r_cycle, reversibility: vec![] }
        }
        SystemType::I => Classification {
            verdict: Verdict::unknown("no rule covers type I systems"),
            r_cycle,
            reversibility: vec![],
        },
    }
}

fn rule_c(sys: &EdgepathSystem, c: &RCycle, fam: Family) -> Verdict {
    let Some(basic) = &sys.basic else {
        return Verdict::unknown("no basic system recorded");
    };
    let on_left_edge = basic.iter().all(|p| p.endpoint().0 == Rational::default());
    let minimal = basic.iter().all(|p| p.is_minimal());
    let v_sum: Rational = basic.iter().map(|p| p.endpoint().1).sum();
    if on_left_edge && minimal && v_sum > Rational::default() {
        Verdict {
            status: Status::IncompressibleExtendable,
            rule: Rule::RC,
            notes: format!(
                "final r-values {c} match (1, -4, -2n, 1) at n = {}; basic paths minimal, end at u = 0, final v-sum {v_sum}",
                fam.n()
            ),
        }
    } else {
        Verdict::unknown(format!(
            "final r-values {c}; left edge {on_left_edge}, minimal {minimal}, final v-sum {v_sum}"
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Edgepath {
        Edgepath::parse(s).unwrap()
    }

    #[test]
    fn cyclic_matching() {
        let c = RCycle(vec![1, -4, -6, 1]);
        assert!(c.cyclic_eq(&[-4, -6, 1, 1]));
        assert!(!c.cyclic_eq(&[-4, 1, -6, 1]));
        assert!(!c.cyclic_eq(&[1, 1, -6, -4, 0]));
    }

    #[test]
    fn reversibility_fixtures() {
        let d0 = completely_reversible(&p("[inf, 0, 1/5]"), DEFAULT_TRIANGLE_BOUND);
        assert!(!d0.formal);
        assert_eq!(d0.fixture, Some(true));
        assert!(d0.discrepancy.is_some());
        let d3 = completely_reversible(&p("[inf, 0, 1/2]"), DEFAULT_TRIANGLE_BOUND);
        assert!(d3.formal && d3.verdict() && d3.discrepancy.is_none());
        let d1 = completely_reversible(&p("[inf, 1, 1/2, 1/3]"), DEFAULT_TRIANGLE_BOUND);
        assert!(d1.formal && d1.fixture.is_none());
        assert!(completely_reversible(&p("[0, 1/5]"), DEFAULT_TRIANGLE_BOUND).verdict());
    }

    #[test]
    fn constant_paths_have_no_cycle() {
        let sys = EdgepathSystem::new(
            SystemType::I,
            vec![Edgepath::constant(crate::rational::rat(1, 3), crate::rational::int(0)).unwrap()],
            None,
        );
        assert_eq!(final_r_cycle(&sys), Err(Error::NoFinalRValue));
    }
}
