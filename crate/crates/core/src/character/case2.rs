//! Case 2: the image of the tangle group on the far side is reducible.

use super::{base_units, check_n, difference_entry, entry_name, CaseReport, LambdaEntry};
use crate::cert::{forcing, IdentityCheck};
use crate::error::Result;
use crate::poly::{pn_sequence, poly, ratfun, RatFun, Var};
use crate::sl2::{assignment, RelationId, SymMat2};

pub fn verify_case2(n: i64) -> Result<CaseReport> {
    let mut rep = verify_case2_subcase_a(n)?;
    subcase_b(&mut rep)?;
    rep.conclusion = "Subcase A contributes finitely many traces; Subcase B has no representations".into();
    Ok(rep)
}

/// `(ec)^n e = c (ec)^n` with `e = diag(a, 1/a)` and `c = [[a, 1], [0, 1/a]]`.
pub fn verify_case2_subcase_a(n: i64) -> Result<CaseReport> {
    check_n(n)?;
    let mut rep = CaseReport::new("Case 2");
    let e = SymMat2::diag(&RatFun::var(Var::A));
    let c = SymMat2::lit(["a", "1", "0", "1/a"]);
    let ec_n = (&e * &c).pow(n)?;
    let seq = pn_sequence(n)?;
    let pn = seq.p.to_ratfun(Var::A);
    let a2n = RatFun::var(Var::A).pow(2 * n as i32);
    let expected = SymMat2::new(a2n.clone(), pn.clone(), RatFun::zero(), a2n.recip()?);
    rep.identity(IdentityCheck::flag(
        format!("A: (ec)^{n} = [[a^{}, p_{n}(a)], [0, a^-{}]]", 2 * n, 2 * n),
        ec_n.to_string(),
        expected.to_string(),
        ec_n == expected,
    ));
    let lhs = &ec_n * &e;
    let rhs = &c * &ec_n;
    let diff = (lhs.get(0, 1) - rhs.get(0, 1)).clone();
    let obstruction = seq.obstruction().to_poly(Var::A).expect("no negative exponents");
    rep.forcings.push(forcing(
        format!("A: upper-right entries of (ec)^{n} e and c (ec)^{n} force p_n(a) = 1/((1 - a^2) a^(2n-1))"),
        "upper-right",
        &diff,
        &obstruction,
        &base_units(),
    ));
    rep.identity(IdentityCheck::flag(
        format!("A: a^(2n-3) p_{n}(a) is a polynomial"),
        seq.cleared().to_string(),
        "polynomial",
        seq.cleared().min_exp().is_some_and(|e| e >= 0),
    ));
    let one = pn_sequence(1)?.obstruction().to_poly(Var::A).expect("polynomial");
    rep.identity(IdentityCheck::compare(
        "A: at n = 1 the equation is a^4 - a^2 + 1 = 0",
        &RatFun::from_poly(-one),
        &ratfun("a^4 - a^2 + 1"),
    ));
    rep.finite(&format!("A: p_{n}(a)(1 - a^2)a^(2n-1) - 1"), &obstruction);
    rep.lambda.push(LambdaEntry::roots("Case 2A", &obstruction));
    Ok(rep)
}

/// `b` shares its diagonal with `a` and has upper-right entry 1; `f` has
/// trace `a + 1/a` and nonzero lower-left entry `y`.
fn subcase_b(rep: &mut CaseReport) -> Result<()> {
    let a = SymMat2::diag(&RatFun::var(Var::A));
    let b = SymMat2::lit(["a", "1", "0", "1/a"]);
    let f = trace_form("x", "y");
    rep.identity(IdentityCheck::compare("B: det f = 1", &f.det(), &RatFun::one()));
    rep.identity(IdentityCheck::compare("B: Tr f = Tr a", &f.trace(), &a.trace()));
    let asg = assignment(&[("a", &a), ("b", &b), ("f", &f)]);
    let ll = difference_entry(RelationId::R3, &asg, 1, 0)?;
    let units = [poly("a"), poly("a - 1"), poly("a + 1"), poly("a^2 + 1"), poly("y")];
    let mut fx =
        forcing("B: R3 lower-left forces x = -1/(a(a^2 - 1))", entry_name(1, 0), &ll, &poly("a^3*x - a*x + 1"), &units);
    let x = ratfun("-1/(a^3 - a)");
    let forced = f.substitute(Var::X, &x);
    let asg = assignment(&[("a", &a), ("b", &b), ("f", &forced)]);
    fx.vanishes_after = Some(difference_entry(RelationId::R3, &asg, 1, 0)?.is_zero());
    rep.forcings.push(fx);
    let ul = difference_entry(RelationId::R3, &asg, 0, 0)?;
    rep.forcings.push(forcing("B: R3 upper-left then forces a y = 0", entry_name(0, 0), &ul, &poly("y"), &units));
    rep.identity(IdentityCheck::flag(
        "B: a y = 0 contradicts y != 0, so there are no such representations",
        ul.to_string(),
        "-a*y",
        ul == ratfun("-a*y"),
    ));
    Ok(())
}

/// `[[x, (-a x^2 + a^2 x + x - a)/(a y)], [y, (-a x + a^2 + 1)/a]]`.
pub(crate) fn trace_form(x: &str, y: &str) -> SymMat2 {
    SymMat2::lit([x, &format!("(-a*{x}^2 + a^2*{x} + {x} - a)/(a*{y})"), y, &format!("(-a*{x} + a^2 + 1)/a")])
}
