//! Edgepaths in the diagram.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::curve::{edge_kind, triangles_containing, Edge, EdgeKind, Vertex};
use crate::error::{Error, Result};
use crate::rational::{fmt_rational, int, Rational};

/// A path written leftmost vertex first, `[v_n, ..., v_0]`, with `v_0` on the
/// tangle. Traversal runs from `v_0` to `v_n`.
///
/// A path may stop partway along its last edge (`final_fraction`), or be a
/// constant path sitting on the horizontal edge at `offset` (0 is the tangle
/// vertex, 1 the circle vertex).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edgepath {
    vertices: Vec<Vertex>,
    final_fraction: Option<Rational>,
    offset: Option<Rational>,
}

impl Edgepath {
    /// Builds a path from vertices written left to right; consecutive
    /// vertices must be joined by an edge.
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Input("empty edgepath".into()));
        }
        for w in vertices.windows(2) {
            if edge_kind(&w[0], &w[1]).is_none() {
                return Err(Error::Input(format!("no edge between {} and {}", w[0], w[1])));
            }
        }
        Ok(Edgepath { vertices, final_fraction: None, offset: None })
    }

    /// Parses `[inf, 1, 1/2]` or `inf,1,1/2`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let vs = s.split(',').map(|x| x.trim().parse()).collect::<Result<Vec<Vertex>>>()?;
        Edgepath::new(vs)
    }

    /// A constant path on the horizontal edge of `tangle`.
    pub fn constant(tangle: Rational, offset: Rational) -> Result<Self> {
        if offset < Rational::zero() || offset > Rational::one() {
            return Err(Error::Range("horizontal offset must lie in [0, 1]".into()));
        }
        Ok(Edgepath { vertices: vec![Vertex::Tangle(tangle)], final_fraction: None, offset: Some(offset) })
    }

    /// Stops the path at fraction `f` of its last edge.
    pub fn with_final_fraction(mut self, f: Rational) -> Result<Self> {
        if self.vertices.len() < 2 {
            return Err(Error::Input("a fractional end needs at least one edge".into()));
        }
        if f < Rational::zero() || f > Rational::one() {
            return Err(Error::Range("final fraction must lie in [0, 1]".into()));
        }
        self.final_fraction = if f.is_one() { None } else { Some(f) };
        Ok(self)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn final_fraction(&self) -> Option<&Rational> {
        self.final_fraction.as_ref()
    }

    pub fn offset(&self) -> Option<&Rational> {
        self.offset.as_ref()
    }

    pub fn is_constant(&self) -> bool {
        self.offset.is_some()
    }

    /// `v_0`.
    pub fn start(&self) -> &Vertex {
        self.vertices.last().expect("non-empty")
    }

    /// `v_n`, the last vertex reached (or aimed at, for a fractional end).
    pub fn end_vertex(&self) -> &Vertex {
        &self.vertices[0]
    }

    /// Edges in traversal order.
    pub fn edges(&self) -> Vec<Edge> {
        self.vertices
            .windows(2)
            .rev()
            .map(|w| Edge::new(w[1].clone(), w[0].clone()).expect("validated on construction"))
            .collect()
    }

    pub fn num_edges(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn has_vertical(&self) -> bool {
        self.edges().iter().any(|e| e.kind == EdgeKind::Vertical)
    }

    /// `uv` of the final point.
    pub fn endpoint(&self) -> (Rational, Rational) {
        if let Some(s) = &self.offset {
            let (u, v) = self.start().uv();
            let u = &u + s * (Rational::one() - &u);
            return (u, v);
        }
        match &self.final_fraction {
            None => self.end_vertex().uv(),
            Some(f) => {
                let (u0, v0) = self.vertices[1].uv();
                let (u1, v1) = self.vertices[0].uv();
                (&u0 + f * (u1 - &u0), &v0 + f * (v1 - &v0))
            }
        }
    }

    /// Appends a vertex on the left.
    pub fn extend_left(&self, v: Vertex) -> Result<Self> {
        if self.final_fraction.is_some() || self.offset.is_some() {
            return Err(Error::Input("cannot extend a path with a fractional end".into()));
        }
        let mut vs = Vec::with_capacity(self.vertices.len() + 1);
        vs.push(v);
        vs.extend(self.vertices.iter().cloned());
        Edgepath::new(vs)
    }

    /// Extends an integer end vertically down (or up) to `<target>`.
    pub fn extend_vertically_to(&self, target: i64) -> Result<Self> {
        let end = self
            .end_vertex()
            .as_tangle()
            .filter(|x| x.is_integer())
            .ok_or_else(|| Error::Input(format!("path {self} does not end at an integer")))?;
        let mut m = end.to_integer();
        let goal = num_bigint::BigInt::from(target);
        let mut p = self.clone();
        while m != goal {
            m += if m > goal { -1 } else { 1 };
            p = p.extend_left(Vertex::Tangle(Rational::from_integer(m.clone())))?;
        }
        Ok(p)
    }

    /// Counts of slope-increasing and slope-decreasing edges among the
    /// non-horizontal and vertical edges, whole edges only.
    pub fn edge_counts(&self) -> (i64, i64) {
        let edges = self.edges();
        let whole = if self.final_fraction.is_some() { edges.len() - 1 } else { edges.len() };
        let mut up = 0;
        let mut down = 0;
        for e in &edges[..whole] {
            if matches!(e.kind, EdgeKind::NonHorizontal | EdgeKind::Vertical) {
                match e.v_direction() {
                    1 => up += 1,
                    -1 => down += 1,
                    _ => {}
                }
            }
        }
        (up, down)
    }

    /// `2(e₋ − e₊)` for paths ending at a vertex.
    pub fn twist_number(&self) -> Result<i64> {
        if self.final_fraction.is_some() {
            return Err(Error::Input("path ends partway along an edge; use the fractional twist".into()));
        }
        let (up, down) = self.edge_counts();
        Ok(2 * (down - up))
    }

    /// Twist number allowing a fractional last edge, which contributes
    /// `±2f` by its direction.
    pub fn twist_fractional(&self) -> Rational {
        let (up, down) = self.edge_counts();
        let mut t = int(2 * (down - up));
        if let Some(f) = &self.final_fraction {
            let last = self.edges().pop().expect("fractional path has an edge");
            if matches!(last.kind, EdgeKind::NonHorizontal | EdgeKind::Vertical) {
                t -= f * int(2 * last.v_direction() as i64);
            }
        }
        t
    }

    /// (E2): no immediate backtracking, and no two successive edges that are
    /// sides of one triangle.
    pub fn is_minimal(&self) -> bool {
        self.vertices.windows(3).all(|w| {
            w[0] != w[2]
                && !matches!(
                    edge_kind(&w[0], &w[2]),
                    Some(EdgeKind::NonHorizontal | EdgeKind::Vertical | EdgeKind::Infinity)
                )
        })
    }

    /// Strictly leftward apart from vertical edges.
    pub fn is_monotone(&self) -> bool {
        self.edges().iter().all(|e| match e.kind {
            EdgeKind::Vertical => true,
            _ => e.to.u() < e.from.u(),
        })
    }

    /// The last non-horizontal edge in traversal order, if any.
    pub fn last_non_horizontal(&self) -> Option<Edge> {
        self.edges().into_iter().rev().find(|e| e.kind == EdgeKind::NonHorizontal)
    }

    /// Triangles through each edge, for the reversibility test.
    pub fn edge_triangles(&self, bound: u64) -> Vec<std::collections::BTreeSet<crate::curve::Triangle>> {
        self.edges().iter().map(|e| triangles_containing(&e.from, &e.to, bound)).collect()
    }
}

impl fmt::Display for Edgepath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = &self.offset {
            return write!(f, "[{} @ {}]", self.start(), fmt_rational(s));
        }
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))?;
        if let Some(x) = &self.final_fraction {
            write!(f, " @ {}", fmt_rational(x))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Edgepath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Edgepath {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(s: &str) -> Edgepath {
        Edgepath::parse(s).unwrap()
    }

    #[test]
    fn reference_twists() {
        assert_eq!(p("[inf, 1, 1/2, 1/3, 1/4, 1/5]").twist_number().unwrap(), -8);
        assert_eq!(p("[0, 1/5]").twist_number().unwrap(), 2);
        assert_eq!(p("[0, 1, 1/2, 1/3]").twist_number().unwrap(), -2);
        assert_eq!(p("[0, 1, 1/2]").twist_number().unwrap(), 0);
        assert_eq!(p("[inf, 0, 1/5]").twist_number().unwrap(), 2);
    }

    #[test]
    fn fractional_twists() {
        let base = p("[0, 1/5]");
        let half = base.clone().with_final_fraction(rat(1, 2)).unwrap();
        assert_eq!(half.twist_fractional(), int(1));
        let whole = base.clone().with_final_fraction(int(1)).unwrap();
        assert_eq!(whole.twist_fractional(), int(2));
        let none = base.with_final_fraction(int(0)).unwrap();
        assert_eq!(none.twist_fractional(), int(0));
        assert!(half.twist_number().is_err());
        assert_eq!(half.endpoint(), (rat(2, 5), rat(1, 10)));
    }

    #[test]
    fn minimality_and_extension() {
        assert!(p("[1, 1/2, 1/3]").is_minimal());
        assert!(!p("[0, 1/2, 1/3]").is_minimal());
        assert!(!p("[1/2, 1/3, 1/2]").is_minimal());
        let ext = p("[1, 1/2]").extend_vertically_to(0).unwrap();
        assert_eq!(ext, p("[0, 1, 1/2]"));
        assert!(ext.has_vertical());
        assert!(p("[0, 1/3]").extend_vertically_to(0).unwrap() == p("[0, 1/3]"));
        assert!(p("[1/2, 1/3]").extend_vertically_to(0).is_err());
        assert!(Edgepath::parse("[1/2, 1/4]").is_err());
    }

    #[test]
    fn constant_paths() {
        let c = Edgepath::constant(rat(1, 3), rat(1, 2)).unwrap();
        assert_eq!(c.endpoint(), (rat(5, 6), rat(1, 3)));
        assert_eq!(c.twist_fractional(), int(0));
        assert!(Edgepath::constant(rat(1, 3), int(2)).is_err());
    }
}
