//! Elimination for Subcase B: the plane curve `Q(E, T) = 0` containing the
//! image of the quartic under `(a, z) -> (T, E)`, and the fibers of that map.

use std::sync::OnceLock;

use num_traits::Signed;

use serde::Serialize;

use super::formulas::{E_FORM, SUB_B_QUARTIC, T_FORM};
use crate::cert::IdentityCheck;
use crate::error::Result;
use crate::poly::{gcd, poly, ratfun, resultant, trace_power_poly, MultiPoly, RatFun, Var};
use crate::rational::{int, Rational};

/// Result of eliminating `a` and `z`.
#[derive(Clone, Debug, Serialize)]
pub struct Elimination {
    /// The quartic with `z = a^2 T/(2a^2 - E)` cleared, in `u = a^2`.
    pub quartic_in_u: String,
    pub biquadratic: String,
    /// The raw resultant in `u`.
    pub raw: String,
    /// Removed factors with whether each is nonzero on the image.
    pub removed: Vec<(String, bool)>,
    #[serde(serialize_with = "ser_poly")]
    pub q: MultiPoly,
    pub image_vanishes: bool,
}

fn ser_poly<S: serde::Serializer>(p: &MultiPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// `(T_num, T_den, E_num, E_den)` in `u = a^2` and `z`.
fn trace_parts() -> [MultiPoly; 4] {
    [poly("u^2*z^2 + u^2 - z^2"), poly("u^2*z"), poly("u^2*z^2 - u^2 + z^2"), poly("u*z^2")]
}

/// The quartic in `u = a^2` and `z`.
pub(crate) fn quartic_uz() -> MultiPoly {
    poly(SUB_B_QUARTIC).halve_exponents(Var::A, Var::U).expect("even in a")
}

/// Numerator of `g(E(u, z), T(u, z))`, homogenized with the given degrees.
fn on_curve(g: &MultiPoly) -> MultiPoly {
    let [tn, td, en, ed] = trace_parts();
    let de = g.degree_in(Var::E);
    let dt = g.degree_in(Var::T);
    let pows = |p: &MultiPoly, d: usize| {
        let mut v = vec![MultiPoly::one()];
        for i in 1..=d {
            v.push(&v[i - 1] * p);
        }
        v
    };
    let (tnp, tdp, enp, edp) = (pows(&tn, dt), pows(&td, dt), pows(&en, de), pows(&ed, de));
    let mut total = MultiPoly::zero();
    for (m, c) in g.terms() {
        let i = m.exp(Var::E) as usize;
        let j = m.exp(Var::T) as usize;
        let t = &(&(&enp[i] * &edp[de - i]) * &(&tnp[j] * &tdp[dt - j])).scale(c);
        total = &total + t;
    }
    total
}

/// True when `g(E, T)` vanishes identically on the quartic curve.
fn vanishes_on_image(g: &MultiPoly, quartic: &MultiPoly) -> bool {
    let v = on_curve(g);
    v.is_zero() || quartic.divides(&v)
}

fn compute() -> Elimination {
    let quartic = quartic_uz();
    let coeffs = quartic.coeffs_in(Var::Z);
    let (c0, c2, c4) = (&coeffs[0], &coeffs[2], &coeffs[4]);
    let u = MultiPoly::var(Var::U);
    let t = MultiPoly::var(Var::T);
    let s = &u.scale(&int(2)) - &MultiPoly::var(Var::E);
    // z^2 (2u - E)^2 = u^2 T^2
    let num = &(&(c4 * &u.pow(4)) * &t.pow(4)) + &(&(&(c2 * &u.pow(2)) * &t.pow(2)) * &s.pow(2)) + (c0 * &s.pow(4));
    let p = num.div_exact(&u.pow(3)).expect("u^3 divides the cleared quartic");
    let biq = poly("(T^2 - 4)*u^2 + (4*E - T^2*E)*u - E^2 + T^2");
    let raw = resultant(&p, &biq, Var::U).expect("positive degrees");
    let mut rest = raw.clone();
    let mut removed = Vec::new();
    for cand in ["T", "T - 2", "T + 2", "E", "E - 2", "E + 2"] {
        let g = poly(cand);
        let mut k = 0;
        while let Some(q) = rest.div_exact(&g) {
            rest = q;
            k += 1;
        }
        if k > 0 {
            removed.push((format!("({cand})^{k}"), !vanishes_on_image(&g, &quartic)));
        }
    }
    let q = rest.numeric_primitive();
    let image_vanishes = vanishes_on_image(&q, &quartic);
    Elimination {
        quartic_in_u: p.to_string(),
        biquadratic: biq.to_string(),
        raw: raw.to_string(),
        removed,
        q,
        image_vanishes,
    }
}

/// Computed once per process.
pub fn image_polynomial() -> &'static Elimination {
    static CELL: OnceLock<Elimination> = OnceLock::new();
    CELL.get_or_init(compute)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QDegreeProfile {
    /// `deg_E` of the coefficient of `T^(2i)`, `i = 0..=5`.
    pub e_degrees: Vec<usize>,
    pub even_in_t: bool,
    pub t_degree: usize,
}

impl QDegreeProfile {
    /// `deg p_i + 2 i n`, the degree of each summand after `T = P_n(E)`.
    pub fn summand_degrees(&self, n: i64) -> Vec<usize> {
        self.e_degrees.iter().enumerate().map(|(i, d)| d + 2 * i * n as usize).collect()
    }
}

pub fn q_degree_profile(q: &MultiPoly) -> QDegreeProfile {
    let coeffs = q.coeffs_in(Var::T);
    QDegreeProfile {
        e_degrees: coeffs.iter().step_by(2).map(|c| c.degree_in(Var::E)).collect(),
        even_in_t: q.is_even_in(Var::T),
        t_degree: q.degree_in(Var::T),
    }
}

/// `Q(E, P_n(E))`.
pub fn q_of_trace_poly(q: &MultiPoly, n: i64) -> Result<MultiPoly> {
    let pn = trace_power_poly(n, Var::E)?;
    Ok(q.substitute(Var::T, &pn))
}

/// `z = a^2 T/(2a^2 - E)` and the biquadratic in `a`, after substituting the
/// trace formulas.
pub fn fiber_identities() -> Vec<IdentityCheck> {
    let t = ratfun(T_FORM);
    let e = ratfun(E_FORM);
    let sub = |r: RatFun| r.substitute(Var::T, &t).substitute(Var::E, &e);
    vec![
        IdentityCheck::compare("z = a^2 T/(2a^2 - E)", &sub(ratfun("a^2*T/(2*a^2 - E)")), &RatFun::var(Var::Z)),
        IdentityCheck::zero(
            "(T^2 - 4)a^4 + (4E - T^2 E)a^2 - E^2 + T^2 = 0",
            &sub(ratfun("(T^2 - 4)*a^4 + (4*E - T^2*E)*a^2 - E^2 + T^2")),
        ),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct ExclusionPoint {
    pub t: i64,
    pub e: i64,
    /// gcd in `u` of the two resultants in `z`, with excluded factors removed.
    pub common: String,
    pub inconsistent: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExclusionCheck {
    pub points: Vec<ExclusionPoint>,
    /// Whether all four points `T = ±2, E = ±2` are off the image.
    pub literal_holds: bool,
    /// An exact point of the curve over one of them, if found.
    pub witness: Option<String>,
    /// `Res_z(quartic, E_num ∓ 2 E_den)`: nonzero polynomials in `u`, so each
    /// fiber over `E = ±2` is finite.
    #[serde(serialize_with = "ser_pairs")]
    pub repair: Vec<(String, MultiPoly)>,
}

fn ser_pairs<S: serde::Serializer>(v: &[(String, MultiPoly)], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (l, p) in v {
        seq.serialize_element(&(l, p.to_string()))?;
    }
    seq.end()
}

fn strip_excluded(p: &MultiPoly) -> MultiPoly {
    crate::cert::strip_factors(p, &[poly("u"), poly("u - 1"), poly("u + 1")]).numeric_primitive()
}

fn compute_exclusion() -> ExclusionCheck {
    let quartic = quartic_uz();
    let [tn, td, en, ed] = trace_parts();
    let mut points = Vec::new();
    let mut repair = Vec::new();
    for e in [2i64, -2] {
        let ge = &en - &ed.scale(&int(e));
        let re = strip_excluded(&resultant(&quartic, &ge, Var::Z).expect("positive degree"));
        repair.push((format!("fiber over E = {e}"), re.clone()));
        for t in [2i64, -2] {
            let gt = &tn - &td.scale(&int(t));
            let rt = strip_excluded(&resultant(&quartic, &gt, Var::Z).expect("positive degree"));
            let g = gcd(&re, &rt);
            points.push(ExclusionPoint { t, e, common: g.to_string(), inconsistent: g.is_constant() });
        }
    }
    let literal_holds = points.iter().all(|p| p.inconsistent);
    let witness = exact_witness(&quartic, &tn, &td, &en, &ed);
    ExclusionCheck { points, literal_holds, witness, repair }
}

/// Searches small rational `(u, z)` on the curve mapping to `T = ±2, E = ±2`.
fn exact_witness(
    quartic: &MultiPoly,
    tn: &MultiPoly,
    td: &MultiPoly,
    en: &MultiPoly,
    ed: &MultiPoly,
) -> Option<String> {
    let candidates: Vec<Rational> = (1..=4i64)
        .flat_map(|d| (-8..=8i64).map(move |n| Rational::new(n.into(), d.into())))
        .filter(|r| *r != Rational::from_integer(0.into()))
        .collect();
    for uu in &candidates {
        for zz in &candidates {
            let pt = [(Var::U, uu.clone()), (Var::Z, zz.clone())];
            if quartic.eval_all(&pt) != Rational::from_integer(0.into()) {
                continue;
            }
            let d = td.eval_all(&pt);
            let de = ed.eval_all(&pt);
            let tv = tn.eval_all(&pt) / d;
            let ev = en.eval_all(&pt) / de;
            if tv.abs() == int(2) && ev.abs() == int(2) {
                return Some(format!(
                    "a^2 = {}, z = {} lies on the quartic with T = {}, E = {}",
                    crate::rational::fmt_rational(uu),
                    crate::rational::fmt_rational(zz),
                    crate::rational::fmt_rational(&tv),
                    crate::rational::fmt_rational(&ev)
                ));
            }
        }
    }
    None
}

pub fn exclusion_certificate() -> &'static ExclusionCheck {
    static CELL: OnceLock<ExclusionCheck> = OnceLock::new();
    CELL.get_or_init(compute_exclusion)
}
