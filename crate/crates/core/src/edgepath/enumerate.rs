//! Basic paths and admissible edgepath systems.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::knot::MontesinosKnot;
use super::path::Edgepath;
use crate::curve::{edge_kind, EdgeKind, Vertex};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SystemType {
    I,
    II,
    III,
}

impl fmt::Display for SystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// One path per tangle, in tangle order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EdgepathSystem {
    pub kind: SystemType,
    pub paths: Vec<Edgepath>,
    /// For type II and III systems, the basic paths the system was built from.
    pub basic: Option<Vec<Edgepath>>,
}

impl EdgepathSystem {
    pub fn new(kind: SystemType, paths: Vec<Edgepath>, basic: Option<Vec<Edgepath>>) -> Self {
        EdgepathSystem { kind, paths, basic }
    }

    /// Final points of the paths.
    pub fn endpoints(&self) -> Vec<(Rational, Rational)> {
        self.paths.iter().map(|p| p.endpoint()).collect()
    }

    /// (E3): a common final `u`-coordinate and final `v`-coordinates summing
    /// to zero.
    pub fn satisfies_e3(&self) -> bool {
        let ends = self.endpoints();
        let u0 = &ends[0].0;
        ends.iter().all(|(u, _)| u == u0) && ends.iter().map(|(_, v)| v).sum::<Rational>().is_zero()
    }

    /// (E1) with the tangle list: every path starts on its tangle's vertex,
    /// or is constant on its horizontal edge.
    pub fn satisfies_e1(&self, knot: &MontesinosKnot) -> bool {
        self.paths.len() == knot.len()
            && self.paths.iter().zip(knot.tangles()).all(|(p, t)| p.start() == &Vertex::Tangle(t.clone()))
    }

    /// Sum of per-path twist numbers, allowing fractional ends.
    pub fn twist(&self) -> Rational {
        self.paths.iter().map(|p| p.twist_fractional()).sum()
    }

    /// Integer twist when every path ends at a vertex.
    pub fn twist_number(&self) -> Result<i64> {
        self.paths.iter().map(|p| p.twist_number()).sum()
    }

    /// Sum of the integer vertices where the paths first reach `u = 0`;
    /// `None` if some path never does.
    pub fn integer_vertex_sum(&self) -> Option<Rational> {
        self.paths.iter().map(|p| p.vertices().iter().rev().find(|v| v.is_integer()).map(|v| v.v())).sum()
    }
}

impl fmt::Display for EdgepathSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.paths.iter().map(|p| p.to_string()).collect();
        write!(f, "type {}: ({})", self.kind, parts.join("; "))
    }
}

/// All minimal leftward paths from `<p/q>` to the first integer vertex,
/// moving through Farey parents and never along two sides of a triangle.
pub fn basic_paths(tangle: &Rational) -> Result<Vec<Edgepath>> {
    if tangle.is_integer() {
        return Err(Error::Input("basic paths need a non-integer tangle".into()));
    }
    let mut out = Vec::new();
    let mut stack = vec![vec![Vertex::Tangle(tangle.clone())]];
    while let Some(trail) = stack.pop() {
        let here = trail.last().unwrap().as_tangle().unwrap().clone();
        if here.is_integer() {
            let mut vs = trail.clone();
            vs.reverse();
            out.push(Edgepath::new(vs)?);
            continue;
        }
        for parent in farey_parents(&here) {
            let next = Vertex::Tangle(parent);
            if trail.len() >= 2 {
                let prev = &trail[trail.len() - 2];
                if prev == &next || triangle_side(prev, &next) {
                    continue;
                }
            }
            let mut t = trail.clone();
            t.push(next);
            stack.push(t);
        }
    }
    out.sort();
    Ok(out)
}

fn triangle_side(x: &Vertex, y: &Vertex) -> bool {
    matches!(edge_kind(x, y), Some(EdgeKind::NonHorizontal | EdgeKind::Vertical | EdgeKind::Infinity))
}

/// The two neighbours of `p/q` with smaller denominator.
pub fn farey_parents(x: &Rational) -> Vec<Rational> {
    let p = x.numer().clone();
    let q = x.denom().clone();
    // Solve p*s - q*r = ±1 with 0 < s < q via the extended gcd.
    use num_integer::Integer;
    let e = p.extended_gcd(&q);
    // p*e.x + q*e.y = 1, so r/s = -e.y/e.x up to the sign and shift.
    let mut s = e.x.mod_floor(&q);
    if s.is_zero() {
        s = q.clone();
    }
    let mut out = Vec::new();
    for s in [s.clone(), &q - &s] {
        if s.is_positive() && s < q {
            // r = (p*s ∓ 1)/q, whichever is integral.
            for d in [-1i64, 1] {
                let num = &p * &s + num_bigint::BigInt::from(d);
                if (&num % &q).is_zero() {
                    out.push(Rational::new(num / &q, s.clone()));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// `[∞, 1, 1/2, …, 1/q]` for every tangle; needs unit fractions.
pub fn seifert_system(knot: &MontesinosKnot) -> Result<EdgepathSystem> {
    if !knot.all_unit_fractions() {
        return Err(Error::ReferenceTwistRequired(format!("K({knot}) has a tangle that is not of the form 1/q")));
    }
    let paths = knot
        .tangles()
        .iter()
        .map(|t| {
            let q: i64 = num_traits::ToPrimitive::to_i64(t.denom())
                .ok_or_else(|| Error::Range("denominator too large".into()))?;
            let mut vs = vec![Vertex::Infinity];
            vs.extend((1..=q).map(|j| Vertex::tangle(1, j)));
            Edgepath::new(vs)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EdgepathSystem::new(SystemType::III, paths, None))
}

pub fn system_twist(sys: &EdgepathSystem) -> Rational {
    sys.twist()
}

fn cartesian<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![vec![]];
    for c in choices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                c.iter().map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x.clone());
                    p
                })
            })
            .collect();
    }
    out
}

/// Every combination of basic paths, one per tangle.
pub fn basic_systems(knot: &MontesinosKnot) -> Result<Vec<Vec<Edgepath>>> {
    let per: Vec<Vec<Edgepath>> = knot.tangles().iter().map(basic_paths).collect::<Result<_>>()?;
    Ok(cartesian(&per))
}

pub fn enumerate_systems(knot: &MontesinosKnot, kind: SystemType) -> Result<Vec<EdgepathSystem>> {
    let mut out = match kind {
        SystemType::III => basic_systems(knot)?
            .into_iter()
            .map(|basic| {
                let paths = basic.iter().map(|p| p.extend_left(Vertex::Infinity)).collect::<Result<Vec<_>>>()?;
                Ok(EdgepathSystem::new(SystemType::III, paths, Some(basic)))
            })
            .collect::<Result<Vec<_>>>()?,
        SystemType::II => basic_systems(knot)?
            .into_iter()
            .map(|basic| {
                let paths = basic.iter().map(|p| p.extend_vertically_to(0)).collect::<Result<Vec<_>>>()?;
                Ok(EdgepathSystem::new(SystemType::II, paths, Some(basic)))
            })
            .collect::<Result<Vec<_>>>()?,
        SystemType::I => type_one_systems(knot)?,
    };
    out.sort();
    out.dedup();
    Ok(out)
}

/// A piece of one tangle's candidate final positions: a horizontal edge or
/// one edge of a basic path, over a `u`-interval on which `v` is affine.
#[derive(Clone, Debug)]
struct Segment {
    lo: Rational,
    hi: Rational,
    /// `v = a + b u`.
    a: Rational,
    b: Rational,
    build: SegmentPath,
}

#[derive(Clone, Debug)]
enum SegmentPath {
    Horizontal { tangle: Rational },
    Edge { prefix: Edgepath, left: Vertex },
}

impl Segment {
    fn path_at(&self, u: &Rational) -> Result<Option<Edgepath>> {
        match &self.build {
            SegmentPath::Horizontal { tangle } => {
                let u0 = Vertex::Tangle(tangle.clone()).u();
                let s = (u - &u0) / (Rational::one() - &u0);
                Ok(Some(Edgepath::constant(tangle.clone(), s)?))
            }
            SegmentPath::Edge { prefix, left } => {
                let ur = prefix.end_vertex().u();
                let ul = left.u();
                let f = (&ur - u) / (&ur - &ul);
                if f.is_zero() {
                    // Already covered by the previous segment.
                    return Ok(None);
                }
                Ok(Some(prefix.extend_left(left.clone())?.with_final_fraction(f)?))
            }
        }
    }
}

fn segments_for(tangle: &Rational) -> Result<Vec<Segment>> {
    let tv = Vertex::Tangle(tangle.clone());
    let (u0, v0) = tv.uv();
    let mut segs = vec![Segment {
        lo: u0.clone(),
        hi: Rational::one(),
        a: v0,
        b: Rational::zero(),
        build: SegmentPath::Horizontal { tangle: tangle.clone() },
    }];
    let mut seen = BTreeSet::new();
    for path in basic_paths(tangle)? {
        let verts: Vec<Vertex> = path.vertices().iter().rev().cloned().collect();
        for j in 0..verts.len() - 1 {
            let prefix: Vec<Vertex> = verts[..=j].iter().rev().cloned().collect();
            let right = &verts[j];
            let left = &verts[j + 1];
            if !seen.insert((prefix.clone(), left.clone())) {
                continue;
            }
            let (ur, vr) = right.uv();
            let (ul, vl) = left.uv();
            let b = (&vr - &vl) / (&ur - &ul);
            let a = &vr - &b * &ur;
            segs.push(Segment {
                lo: ul,
                hi: ur,
                a,
                b,
                build: SegmentPath::Edge { prefix: Edgepath::new(prefix)?, left: left.clone() },
            });
        }
    }
    Ok(segs)
}

/// Type I systems: every choice of segment per tangle, solved for a common
/// `u` with `v`-sum zero. Flat families contribute their interval ends.
fn type_one_systems(knot: &MontesinosKnot) -> Result<Vec<EdgepathSystem>> {
    let per: Vec<Vec<Segment>> = knot.tangles().iter().map(segments_for).collect::<Result<_>>()?;
    let combos = cartesian(&per);
    let found: Vec<Result<Vec<EdgepathSystem>>> = combos
        .par_iter()
        .map(|combo| {
            let lo = combo.iter().map(|s| s.lo.clone()).max().unwrap();
            let hi = combo.iter().map(|s| s.hi.clone()).min().unwrap();
            if lo > hi {
                return Ok(vec![]);
            }
            let a: Rational = combo.iter().map(|s| &s.a).sum();
            let b: Rational = combo.iter().map(|s| &s.b).sum();
            let us: Vec<Rational> = if b.is_zero() {
                if a.is_zero() {
                    vec![lo, hi]
                } else {
                    vec![]
                }
            } else {
                let u = -a / b;
                if u >= lo && u <= hi {
                    vec![u]
                } else {
                    vec![]
                }
            };
            let mut out = Vec::new();
            'points: for u in us {
                let mut paths = Vec::with_capacity(combo.len());
                for s in combo {
                    match s.path_at(&u)? {
                        Some(p) => paths.push(p),
                        None => continue 'points,
                    }
                }
                let sys = EdgepathSystem::new(SystemType::I, paths, None);
                if sys.satisfies_e3() {
                    out.push(sys);
                }
            }
            Ok(out)
        })
        .collect();
    let mut out = Vec::new();
    for r in found {
        out.extend(r?);
    }
    Ok(out)
}

/// Twist of a type II class from its basic system:
/// `t(basic) + 2 Σ (final v of the basic paths)`.
pub fn type_two_twist_formula(basic: &[Edgepath]) -> Result<Rational> {
    let mut t = Rational::zero();
    for p in basic {
        t += int(p.twist_number()?) + int(2) * p.end_vertex().v();
    }
    Ok(t)
}
