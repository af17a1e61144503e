//! Case 1: the image of the Conway sphere group is abelian.

use super::{base_units, difference_entry, entry_name, CaseReport, LambdaEntry};
use crate::cert::{forcing, IdentityCheck};
use crate::error::Result;
use crate::poly::{poly, resultant, MultiPoly, RatFun, Var};
use crate::sl2::{assignment, FreeWord, RelationId, SymMat2};

fn word(s: &str) -> FreeWord {
    FreeWord::parse(s).expect("static word")
}

pub fn verify_case1() -> Result<CaseReport> {
    let mut rep = CaseReport::new("Case 1");
    subcase_a(&mut rep);
    subcase_b(&mut rep)?;
    rep.conclusion = "Subcase A contradicts irreducibility; Subcase B contributes finitely many traces".into();
    Ok(rep)
}

/// With `b = a` and `d = c = a`, the relations give `af · afa = fa · afa`.
fn subcase_a(rep: &mut CaseReport) {
    let lhs = word("a f a f a");
    let rhs = word("f a f a f");
    rep.identity(IdentityCheck::flag(
        "A: afafa = (af)(afa) in the free group",
        lhs.to_string(),
        word("a f").mul(&word("a f a")).to_string(),
        lhs == word("a f").mul(&word("a f a")),
    ));
    rep.identity(IdentityCheck::flag(
        "A: fafaf = (fa)(faf) in the free group",
        rhs.to_string(),
        word("f a").mul(&word("f a f")).to_string(),
        rhs == word("f a").mul(&word("f a f")),
    ));
    // Replacing faf by afa and cancelling afa on the right leaves af = fa.
    let cancelled = word("f a").mul(&word("a f a")).mul(&word("a f a").inverse());
    rep.identity(IdentityCheck::flag(
        "A: (fa)(afa)(afa)^-1 reduces to fa",
        cancelled.to_string(),
        "f a",
        cancelled == word("f a"),
    ));
    let a = SymMat2::diag(&RatFun::var(Var::A));
    let f = SymMat2::lit(["p", "q", "s", "t"]);
    let comm = &(&a * &f) - &(&f * &a);
    let units = base_units();
    rep.forcings.push(forcing("A: af = fa forces q = 0", "upper-right", comm.get(0, 1), &poly("q"), &units));
    rep.forcings.push(forcing("A: af = fa forces s = 0", "lower-left", comm.get(1, 0), &poly("s"), &units));
}

fn subcase_b(rep: &mut CaseReport) -> Result<()> {
    let a = SymMat2::lit(["a", "1", "0", "1/a"]);
    let ainv = a.inverse()?;
    let units = base_units();

    // beta = alpha
    let f = SymMat2::lit(["a", "0", "r", "1/a"]);
    let asg = assignment(&[("a", &a), ("b", &a), ("c", &ainv), ("d", &ainv), ("f", &f)]);
    rep.identity(IdentityCheck::compare(
        "B: d = a b^-1 c gives d = c",
        &(&(&a * &a.inverse()?) * &ainv).get(0, 1).clone(),
        ainv.get(0, 1),
    ));
    let r3 = poly("a^4 + a^2*r - a^2 + 1");
    let r4 = poly("r^2 - 3*r + 1");
    let e3 = difference_entry(RelationId::R3, &asg, 0, 1)?;
    rep.forcings.push(forcing("B, beta = a: R3 forces a^2 + r + a^-2 = 1", entry_name(0, 1), &e3, &r3, &units));
    let e4 = difference_entry(RelationId::R4, &asg, 0, 0)?;
    rep.forcings.push(forcing(
        "B, beta = a: R4 forces r^2 - 3r + 1 = 0",
        entry_name(0, 0),
        &e4,
        &r4,
        &units_with(&units, &["r"]),
    ));
    let res = resultant(&r3, &r4, Var::R)?;
    let res = res.numeric_primitive();
    rep.identity(IdentityCheck::flag(
        "B, beta = a: resultant in r has degree at most 8",
        res.to_string(),
        format!("degree {}", res.degree_in(Var::A)),
        !res.is_zero() && res.degree_in(Var::A) <= 8,
    ));
    rep.finite("B, beta = a: resultant of the two forced equations", &res);
    rep.lambda.push(LambdaEntry::roots("Case 1B, beta = a", &res));

    // beta = 1/alpha
    let f = SymMat2::lit(["1/a", "0", "r", "a"]);
    let asg = assignment(&[("a", &a), ("b", &a), ("c", &ainv), ("d", &ainv), ("f", &f)]);
    let e3 = difference_entry(RelationId::R3, &asg, 0, 1)?;
    let mut fr = forcing("B, beta = 1/a: R3 forces r = -1", entry_name(0, 1), &e3, &poly("r + 1"), &units);
    let forced = f.substitute(Var::R, &RatFun::int(-1));
    let asg = assignment(&[("a", &a), ("b", &a), ("c", &ainv), ("d", &ainv), ("f", &forced)]);
    fr.vanishes_after = Some(difference_entry(RelationId::R3, &asg, 0, 1)?.is_zero());
    rep.forcings.push(fr);
    let octic = poly("a^8 + a^6 + a^4 + a^2 + 1");
    let e4 = difference_entry(RelationId::R4, &asg, 0, 1)?;
    rep.forcings.push(forcing("B, beta = 1/a: R4 at r = -1 forces the octic", entry_name(0, 1), &e4, &octic, &units));
    rep.finite("B, beta = 1/a: octic", &octic);
    rep.lambda.push(LambdaEntry::roots("Case 1B, beta = 1/a", &octic));
    Ok(())
}

pub(crate) fn units_with(base: &[MultiPoly], extra: &[&str]) -> Vec<MultiPoly> {
    base.iter().cloned().chain(extra.iter().map(|s| poly(s))).collect()
}
