//! The Wirtinger relations used by the case analysis, and the two small
//! lemmas about upper-triangular and diagonal images.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::matrix::SymMat2;
use super::word::FreeWord;
use crate::cert::{forcing, Forcing, IdentityCheck};
use crate::error::{Error, Result};
use crate::poly::{poly, ratfun, RatFun, Var};

/// Generator name used for the formal matrix standing for `(ec)^n`.
pub const THETA: &str = "Th";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RelationId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub id: RelationId,
    pub lhs: FreeWord,
    pub rhs: FreeWord,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}", self.id, self.lhs, self.rhs)
    }
}

fn w(s: &str) -> FreeWord {
    FreeWord::parse(s).expect("static word")
}

pub fn relation(id: RelationId) -> Relation {
    let (lhs, rhs) = match id {
        RelationId::R1 => (w("a e"), w("e b")),
        RelationId::R2 => (w("d"), w("a b^-1 c")),
        RelationId::R3 => (w("f a f"), w("b f a")),
        RelationId::R4 => (w("d f d f d c"), w("f d f d f d")),
        RelationId::R5 => (w("Th^-1 c Th"), w("a e a^-1")),
        RelationId::R6 => (w("Th e c"), w("e c Th")),
    };
    Relation { id, lhs, rhs }
}

pub fn relation_set() -> Vec<Relation> {
    use RelationId::*;
    [R1, R2, R3, R4, R5, R6].into_iter().map(relation).collect()
}

/// Generator name to matrix.
pub type Assignment = BTreeMap<String, SymMat2>;

pub fn assignment(pairs: &[(&str, &SymMat2)]) -> Assignment {
    pairs.iter().map(|(k, v)| (k.to_string(), (*v).clone())).collect()
}

pub fn eval_word(word: &FreeWord, asg: &Assignment) -> Result<SymMat2> {
    let mut acc = SymMat2::identity();
    for (g, e) in word.syllables() {
        let m = asg.get(g).ok_or_else(|| Error::MissingGenerator(g.clone()))?;
        acc = &acc * &m.pow(*e)?;
    }
    Ok(acc)
}

/// `L · R⁻¹ − I`; the zero matrix exactly when the relation holds.
pub fn relation_residual(rel: &Relation, asg: &Assignment) -> Result<SymMat2> {
    let l = eval_word(&rel.lhs, asg)?;
    let r = eval_word(&rel.rhs, asg)?;
    Ok(&(&l * &r.inverse()?) - &SymMat2::identity())
}

/// `L − R`, the form in which relation entries are equated.
pub fn relation_difference(rel: &Relation, asg: &Assignment) -> Result<SymMat2> {
    let l = eval_word(&rel.lhs, asg)?;
    let r = eval_word(&rel.rhs, asg)?;
    Ok(&l - &r)
}

/// Outcome of one of the small lemmas.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub name: String,
    pub identities: Vec<IdentityCheck>,
    pub forcings: Vec<Forcing>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(|i| i.holds) && self.forcings.iter().all(|f| f.holds())
    }
}

/// The diagonal part of a product of upper-triangular unimodular matrices is
/// the product of the diagonal parts.
pub fn verify_diag_homomorphism() -> LemmaReport {
    let x = SymMat2::lit(["x", "y", "0", "1/x"]);
    let y = SymMat2::lit(["p", "q", "0", "1/p"]);
    let delta = |m: &SymMat2| SymMat2::new(m.get(0, 0).clone(), RatFun::zero(), RatFun::zero(), m.get(1, 1).clone());
    let lhs = delta(&(&x * &y));
    let rhs = &delta(&x) * &delta(&y);
    let residual = &lhs - &rhs;
    let mut identities: Vec<IdentityCheck> = residual
        .entries()
        .iter()
        .zip(["UL", "UR", "LL", "LR"])
        .map(|(v, e)| IdentityCheck::zero(format!("diagonal map of XY minus product, {e}"), v))
        .collect();
    identities.push(IdentityCheck::flag(
        "product of upper-triangular matrices is upper-triangular",
        (&x * &y).get(1, 0).to_string(),
        "0",
        (&x * &y).is_upper_triangular(),
    ));
    LemmaReport { name: "diagonal homomorphism".into(), identities, forcings: vec![] }
}

/// With `a = diag(α, 1/α)`, `b = a⁻¹` and generic `e`, the relation `ae = eb`
/// forces both diagonal entries of `e` to vanish, so `Tr e = 0`.
pub fn verify_trace_zero() -> LemmaReport {
    let a = SymMat2::diag(&RatFun::var(Var::A));
    let b = a.inverse().expect("diagonal is unimodular");
    let e = SymMat2::lit(["w", "x", "y", "z"]);
    let asg = assignment(&[("a", &a), ("b", &b), ("e", &e)]);
    let d = relation_difference(&relation(RelationId::R1), &asg).expect("generators assigned");
    let allowed = [poly("a")];
    let forcings = vec![
        forcing("upper-left entry of ae - eb", "UL", d.get(0, 0), &poly("(a^2 - 1)*w"), &allowed),
        forcing("lower-right entry of ae - eb", "LR", d.get(1, 1), &poly("(a^2 - 1)*z"), &allowed),
    ];
    let forced = e.substitute(Var::W, &RatFun::zero()).substitute(Var::Z, &RatFun::zero());
    let identities = vec![
        IdentityCheck::zero("off-diagonal entries of ae - eb", &(d.get(0, 1) + d.get(1, 0))),
        IdentityCheck::compare("trace of e once w = z = 0", &forced.trace(), &ratfun("0")),
    ];
    LemmaReport { name: "trace zero".into(), identities, forcings }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemmas_pass() {
        assert!(verify_diag_homomorphism().passed());
        let tz = verify_trace_zero();
        assert!(tz.passed(), "{tz:?}");
    }

    #[test]
    fn missing_generator_is_reported() {
        let a = SymMat2::identity();
        let asg = assignment(&[("a", &a)]);
        let err = relation_residual(&relation(RelationId::R1), &asg).unwrap_err();
        assert_eq!(err, Error::MissingGenerator("e".into()));
    }
}
