//! Projective curve systems on the 4-punctured sphere and the diagram of
//! tangle, circle and infinity vertices.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{fmt_rational, int, parse_rational, Rational};

/// Train-track weights `[a, b, c]`, up to positive scaling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveCurveSystem {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl ProjectiveCurveSystem {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if a.is_negative() || b.is_negative() || c.is_negative() {
            return Err(Error::Input("curve system weights must be non-negative".into()));
        }
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(Error::Input("curve system weights are all zero".into()));
        }
        Ok(Self::canonical(a, b, c))
    }

    /// Coprime integer representative.
    fn canonical(a: Rational, b: Rational, c: Rational) -> Self {
        let l = a.denom().lcm(b.denom()).lcm(c.denom());
        let scale = Rational::from_integer(l);
        let (a, b, c) = (a * &scale, b * &scale, c * &scale);
        let g = a.numer().gcd(b.numer()).gcd(c.numer());
        let g = Rational::from_integer(g);
        ProjectiveCurveSystem { a: a / &g, b: b / &g, c: c / g }
    }

    pub fn weights(&self) -> (&Rational, &Rational, &Rational) {
        (&self.a, &self.b, &self.c)
    }

    /// `(b/(a+b), c/(a+b))`.
    pub fn uv(&self) -> Result<(Rational, Rational)> {
        let s = &self.a + &self.b;
        if s.is_zero() {
            return Err(Error::DegenerateCircle);
        }
        Ok((&self.b / &s, &self.c / &s))
    }
}

pub fn uv_of_projective(s: &ProjectiveCurveSystem) -> Result<(Rational, Rational)> {
    s.uv()
}

/// A vertex of the diagram.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Tangle(Rational),
    Circle(Rational),
    Infinity,
}

impl Vertex {
    pub fn tangle(p: i64, q: i64) -> Vertex {
        Vertex::Tangle(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn integer(n: i64) -> Vertex {
        Vertex::Tangle(int(n))
    }

    pub fn circle(p: i64, q: i64) -> Vertex {
        Vertex::Circle(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// `uv`-coordinates: tangle `p/q` at `((q-1)/q, p/q)`, circle at
    /// `(1, p/q)`, infinity at `(-1, 0)`.
    pub fn uv(&self) -> (Rational, Rational) {
        match self {
            Vertex::Tangle(x) => {
                let q = Rational::from_integer(x.denom().clone());
                ((&q - Rational::one()) / q, x.clone())
            }
            Vertex::Circle(x) => (Rational::one(), x.clone()),
            Vertex::Infinity => (-Rational::one(), Rational::zero()),
        }
    }

    pub fn u(&self) -> Rational {
        self.uv().0
    }

    pub fn v(&self) -> Rational {
        self.uv().1
    }

    pub fn as_tangle(&self) -> Option<&Rational> {
        match self {
            Vertex::Tangle(x) => Some(x),
            _ => None,
        }
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, Vertex::Tangle(x) if x.is_integer())
    }

    /// Denominator of a tangle or circle; infinity counts as 1.
    pub fn denom(&self) -> BigInt {
        match self {
            Vertex::Tangle(x) | Vertex::Circle(x) => x.denom().clone(),
            Vertex::Infinity => BigInt::one(),
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Tangle(x) => f.write_str(&fmt_rational(x)),
            Vertex::Circle(x) => write!(f, "{}*", fmt_rational(x)),
            Vertex::Infinity => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

impl FromStr for Vertex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Vertex> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Vertex::Infinity);
        }
        match s.strip_suffix('*') {
            Some(rest) => Ok(Vertex::Circle(parse_rational(rest)?)),
            None => Ok(Vertex::Tangle(parse_rational(s)?)),
        }
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EdgeKind {
    NonHorizontal,
    Horizontal,
    Vertical,
    Infinity,
}

/// `|ps - qr|` for two fractions.
fn farey_det(x: &Rational, y: &Rational) -> BigInt {
    (x.numer() * y.denom() - x.denom() * y.numer()).abs()
}

/// Edge type between two vertices, if any. Consecutive integers count as
/// vertical.
pub fn edge_kind(x: &Vertex, y: &Vertex) -> Option<EdgeKind> {
    match (x, y) {
        (Vertex::Tangle(p), Vertex::Tangle(r)) => {
            if p.is_integer() && r.is_integer() && (p - r).abs().is_one() {
                Some(EdgeKind::Vertical)
            } else if farey_det(p, r).is_one() {
                Some(EdgeKind::NonHorizontal)
            } else {
                None
            }
        }
        (Vertex::Circle(p), Vertex::Tangle(r)) | (Vertex::Tangle(r), Vertex::Circle(p)) => {
            (p == r).then_some(EdgeKind::Horizontal)
        }
        (Vertex::Tangle(p), Vertex::Infinity) | (Vertex::Infinity, Vertex::Tangle(p)) => {
            p.is_integer().then_some(EdgeKind::Infinity)
        }
        _ => None,
    }
}

/// True for the edges that bound triangles of the diagram.
fn is_triangle_edge(x: &Vertex, y: &Vertex) -> bool {
    matches!(edge_kind(x, y), Some(EdgeKind::NonHorizontal | EdgeKind::Vertical | EdgeKind::Infinity))
}

/// A directed edge; `from` is where traversal starts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: Vertex,
    pub to: Vertex,
    pub kind: EdgeKind,
}

impl Edge {
    pub fn new(from: Vertex, to: Vertex) -> Result<Edge> {
        let kind = edge_kind(&from, &to).ok_or_else(|| Error::Input(format!("no edge between {from} and {to}")))?;
        Ok(Edge { from, to, kind })
    }

    /// Sign of the change in `v` along the edge: +1 up, -1 down, 0 flat.
    pub fn v_direction(&self) -> i32 {
        match self.to.v().cmp(&self.from.v()) {
            std::cmp::Ordering::Greater => 1,
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => 0,
        }
    }

    pub fn max_denom(&self) -> BigInt {
        self.from.denom().max(self.to.denom())
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} -> {}]", self.from, self.to)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Signed denominator of the point where the edge's line meets `u = 1`;
/// positive when `v` increases along the direction of travel.
pub fn r_value(e: &Edge) -> Result<i64> {
    match e.kind {
        EdgeKind::NonHorizontal => {}
        EdgeKind::Horizontal => return Err(Error::RValueUndefined("horizontal")),
        EdgeKind::Vertical => return Err(Error::RValueUndefined("vertical")),
        EdgeKind::Infinity => return Err(Error::RValueUndefined("infinity")),
    }
    let (u1, v1) = e.from.uv();
    let (u2, v2) = e.to.uv();
    let slope = (&v2 - &v1) / (&u2 - &u1);
    let v_at_1 = &v1 + slope * (Rational::one() - &u1);
    let d = v_at_1.denom().to_i64().ok_or_else(|| Error::Range("r-value exceeds 64 bits".into()))?;
    Ok(if e.v_direction() > 0 { d } else { -d })
}

/// `(k/m)·x + ((m-k)/m)·y` for the two endpoints of an edge.
pub fn edge_point(x: &Vertex, y: &Vertex, k: i64, m: i64) -> Result<(Rational, Rational)> {
    if !(0 < k && k < m) {
        return Err(Error::Range(format!("subdivision index {k}/{m} must lie strictly inside (0, 1)")));
    }
    if edge_kind(x, y).is_none() {
        return Err(Error::Input(format!("no edge between {x} and {y}")));
    }
    let s = Rational::new(BigInt::from(k), BigInt::from(m));
    let t = Rational::one() - &s;
    let (ux, vx) = x.uv();
    let (uy, vy) = y.uv();
    Ok((&s * ux + &t * uy, s * vx + t * vy))
}

/// A triangle as a sorted vertex triple.
pub type Triangle = [Vertex; 3];

fn sorted_triangle(a: &Vertex, b: &Vertex, c: &Vertex) -> Triangle {
    let mut t = [a.clone(), b.clone(), c.clone()];
    t.sort();
    t
}

/// Candidate third vertices: infinity, plus all fractions with denominator
/// at most `max_denom` within one unit of the edge's finite endpoints.
fn candidate_vertices(x: &Vertex, y: &Vertex, max_denom: u64) -> Vec<Vertex> {
    let finite: Vec<Rational> = [x, y]
        .iter()
        .filter_map(|v| match v {
            Vertex::Tangle(r) | Vertex::Circle(r) => Some(r.clone()),
            Vertex::Infinity => None,
        })
        .collect();
    let lo = finite.iter().min().cloned().unwrap_or_else(Rational::zero).floor() - Rational::one();
    let hi = finite.iter().max().cloned().unwrap_or_else(Rational::zero).ceil() + Rational::one();
    let (lo, hi) = (lo.to_integer().to_i64().unwrap_or(0), hi.to_integer().to_i64().unwrap_or(0));
    let mut out = vec![Vertex::Infinity];
    for q in 1..=max_denom as i64 {
        for p in lo * q..=hi * q {
            if p.gcd(&q) == 1 {
                out.push(Vertex::tangle(p, q));
            }
        }
    }
    out
}

/// All 3-cliques of the triangle-edge relation containing the edge `{x, y}`,
/// with third vertices of denominator at most `max denom(x, y) + bound`.
pub fn triangles_containing(x: &Vertex, y: &Vertex, bound: u64) -> BTreeSet<Triangle> {
    let mut out = BTreeSet::new();
    if !is_triangle_edge(x, y) {
        return out;
    }
    let md = x.denom().max(y.denom()).to_u64().unwrap_or(u64::MAX / 2) + bound;
    for w in candidate_vertices(x, y, md) {
        if &w != x && &w != y && is_triangle_edge(x, &w) && is_triangle_edge(y, &w) {
            out.insert(sorted_triangle(x, y, &w));
        }
    }
    out
}

/// True if two triangles share two vertices joined by an edge.
pub fn share_edge(s: &Triangle, t: &Triangle) -> bool {
    let common: Vec<&Vertex> = s.iter().filter(|v| t.contains(v)).collect();
    common.len() >= 2 && common.iter().enumerate().any(|(i, a)| common[i + 1..].iter().any(|b| is_triangle_edge(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn t(p: i64, q: i64) -> Vertex {
        Vertex::tangle(p, q)
    }

    #[test]
    fn projective_coordinates() {
        let s = ProjectiveCurveSystem::new(int(1), int(2), int(1)).unwrap();
        assert_eq!(s.uv().unwrap(), (rat(2, 3), rat(1, 3)));
        let c = ProjectiveCurveSystem::new(int(0), int(2), int(1)).unwrap();
        assert_eq!(c.uv().unwrap(), (int(1), rat(1, 2)));
        assert_eq!(Vertex::circle(1, 2).uv(), (int(1), rat(1, 2)));
        let d = ProjectiveCurveSystem::new(int(0), int(0), int(1)).unwrap();
        assert_eq!(d.uv(), Err(Error::DegenerateCircle));
        let o = ProjectiveCurveSystem::new(int(1), int(0), int(0)).unwrap();
        assert_eq!(o.uv().unwrap(), (int(0), int(0)));
        let scaled = ProjectiveCurveSystem::new(rat(1, 2), int(1), rat(1, 2)).unwrap();
        assert_eq!(scaled.weights(), (&int(1), &int(2), &int(1)));
    }

    #[test]
    fn edge_kinds() {
        assert_eq!(edge_kind(&t(1, 1), &t(1, 2)), Some(EdgeKind::NonHorizontal));
        assert_eq!(edge_kind(&t(1, 2), &t(1, 4)), None);
        assert_eq!(edge_kind(&t(1, 1), &Vertex::Infinity), Some(EdgeKind::Infinity));
        assert_eq!(edge_kind(&t(0, 1), &t(1, 1)), Some(EdgeKind::Vertical));
        assert_eq!(edge_kind(&Vertex::circle(1, 3), &t(1, 3)), Some(EdgeKind::Horizontal));
        assert_eq!(edge_kind(&Vertex::circle(1, 3), &t(1, 2)), None);
        assert_eq!(edge_kind(&t(1, 2), &Vertex::Infinity), None);
    }

    #[test]
    fn r_values() {
        let r = |a: Vertex, b: Vertex| r_value(&Edge::new(a, b).unwrap());
        assert_eq!(r(t(1, 5), t(0, 1)).unwrap(), -4);
        assert_eq!(r(t(1, 2), t(1, 1)).unwrap(), 1);
        assert_eq!(r(t(1, 7), t(0, 1)).unwrap(), -6);
        assert_eq!(r(t(1, 2), t(0, 1)).unwrap(), -1);
        assert!(r(t(1, 1), t(0, 1)).is_err());
        assert!(r(t(0, 1), Vertex::Infinity).is_err());
    }

    #[test]
    fn subdivision_points() {
        assert_eq!(edge_point(&t(0, 1), &t(1, 2), 1, 2).unwrap(), (rat(1, 4), rat(1, 4)));
        assert_eq!(edge_point(&t(1, 1), &t(1, 2), 1, 3).unwrap(), (rat(1, 3), rat(2, 3)));
        assert!(edge_point(&t(0, 1), &t(1, 2), 0, 2).is_err());
    }

    #[test]
    fn triangles() {
        let tri = triangles_containing(&t(0, 1), &t(1, 5), 2);
        let want: BTreeSet<Triangle> =
            [sorted_triangle(&t(0, 1), &t(1, 5), &t(1, 4)), sorted_triangle(&t(0, 1), &t(1, 5), &t(1, 6))]
                .into_iter()
                .collect();
        assert_eq!(tri, want);
        let tri = triangles_containing(&t(0, 1), &Vertex::Infinity, 2);
        let want: BTreeSet<Triangle> = [
            sorted_triangle(&t(0, 1), &Vertex::Infinity, &t(1, 1)),
            sorted_triangle(&t(0, 1), &Vertex::Infinity, &t(-1, 1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(tri, want);
        assert!(triangles_containing(&Vertex::circle(0, 1), &t(0, 1), 2).is_empty());
    }

    #[test]
    fn vertex_text() {
        for s in ["1/3", "-2", "1/2*", "inf"] {
            assert_eq!(s.parse::<Vertex>().unwrap().to_string(), s);
        }
        assert!("2/0".parse::<Vertex>().is_err());
    }
}
