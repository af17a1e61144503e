use slopes_core::character::formulas::*;
use slopes_core::character::*;
use slopes_core::poly::{poly, ratfun, trace_power_poly, MultiPoly, Var};
use slopes_core::sl2::{assignment, relation, relation_residual, RelationId, SymMat2};

/// Q as computed independently with a general-purpose CAS.
const Q_ORACLE: &str =
    "E^12 + 4*E^11*T^2 - 20*E^11 + 4*E^10*T^4 - 57*E^10*T^2 + 148*E^10 - 35*E^9*T^4 + 270*E^9*T^2 - 440*E^9 \
    - E^8*T^6 + 92*E^8*T^4 - 338*E^8*T^2 + 24*E^8 + 2*E^7*T^8 - E^7*T^6 - 14*E^7*T^4 - 832*E^7*T^2 + 2464*E^7 \
    - 15*E^6*T^8 + 48*E^6*T^6 - 253*E^6*T^4 + 1960*E^6*T^2 - 3024*E^6 + 17*E^5*T^8 - 21*E^5*T^6 - 22*E^5*T^4 \
    + 992*E^5*T^2 - 4064*E^5 + 4*E^4*T^10 + 69*E^4*T^8 - 653*E^4*T^6 + 1805*E^4*T^4 - 4280*E^4*T^2 + 6992*E^4 \
    - 25*E^3*T^10 - 21*E^3*T^8 + 874*E^3*T^6 - 2308*E^3*T^4 + 1088*E^3*T^2 + 2496*E^3 + 17*E^2*T^10 \
    - 183*E^2*T^8 + 1019*E^2*T^6 - 2676*E^2*T^4 + 3984*E^2*T^2 - 4800*E^2 + 130*E*T^10 - 918*E*T^8 \
    + 1732*E*T^6 + 96*E*T^4 - 1472*E*T^2 - 512*E - 193*T^10 + 1804*T^8 - 6148*T^6 + 9120*T^4 - 5440*T^2 + 1024";

fn report_failures(c: &CaseReport) -> Vec<String> {
    let mut out: Vec<String> = c.identities.iter().filter(|i| !i.holds).map(|i| i.label.clone()).collect();
    out.extend(c.forcings.iter().filter(|f| !f.holds()).map(|f| f.label.clone()));
    out
}

#[test]
fn every_case_passes() {
    for n in [2, 3] {
        for c in [
            verify_case1().unwrap(),
            verify_case2(n).unwrap(),
            verify_case3_common().unwrap(),
            verify_case3_sub_a(n).unwrap(),
            verify_case3_sub_b(n).unwrap(),
        ] {
            assert!(c.passed(), "{} at n = {n}: {:?}", c.case, report_failures(&c));
        }
    }
}

#[test]
fn q_matches_independent_elimination() {
    let elim = image_polynomial();
    assert_eq!(elim.q, poly(Q_ORACLE));
    assert!(elim.image_vanishes);
    assert!(elim.removed.iter().all(|(_, off)| *off));
    let prof = q_degree_profile(&elim.q);
    assert_eq!(prof.e_degrees, vec![12, 11, 10, 8, 7, 4]);
    assert!(prof.even_in_t);
}

#[test]
fn q_degree_along_trace_polynomial() {
    let q = &image_polynomial().q;
    for n in 2..=6i64 {
        let qn = q_of_trace_poly(q, n).unwrap();
        assert_eq!(qn.degree_in(Var::E) as i64, 4 + 10 * n);
        // Only the T^10 summand reaches the top degree.
        let top = &q.coeffs_in(Var::T)[10] * &trace_power_poly(n, Var::E).unwrap().pow(10);
        let lead = |p: &MultiPoly| p.coeffs_in(Var::E).last().cloned().unwrap();
        assert_eq!(lead(&qn), lead(&top));
    }
}

#[test]
fn fibers() {
    assert!(fiber_identities().iter().all(|i| i.holds));
    let ex = exclusion_certificate();
    // The four points are not all off the image.
    assert!(!ex.literal_holds);
    let w = ex.witness.as_deref().unwrap();
    assert!(w.contains("a^2 = 2/3") && w.contains("T = 2, E = 2"), "{w}");
    assert_eq!(ex.repair.len(), 2);
    assert!(ex.repair.iter().all(|(_, p)| !p.is_constant()));
}

#[test]
fn reference_matrices() {
    let a = SymMat2::diag(&ratfun("a"));
    let b = SymMat2::lit(["1/a", "1", "0", "a"]);
    let c = SymMat2::lit(["1/a", R_VALUE, "0", "a"]);
    let e = SymMat2::lit(E_MATRIX);
    let th = SymMat2::lit(THETA_MATRIX);
    let asg = assignment(&[("a", &a), ("b", &b), ("c", &c), ("e", &e), ("Th", &th)]);
    for id in [RelationId::R1, RelationId::R5, RelationId::R6] {
        assert!(relation_residual(&relation(id), &asg).unwrap().is_zero(), "{id}");
    }
    assert_eq!((&e * &c).trace(), ratfun(E_FORM));
    assert_eq!(th.trace(), ratfun(T_FORM));
}

#[test]
fn subcase_a_traces() {
    let z2 = ratfun(SUB_A_Z2);
    let e = SymMat2::lit(E_MATRIX);
    let c = SymMat2::lit(["1/a", R_VALUE, "0", "a"]);
    let th = SymMat2::lit(THETA_MATRIX);
    let tr_ec = (&e * &c).trace().subst_square(Var::Z, &z2).unwrap();
    assert_eq!(tr_ec, ratfun(SUB_A_TR_EC));
    assert_ne!(tr_ec, ratfun(SUB_A_TR_EC_REFERENCE));
    assert_eq!(&tr_ec * &ratfun("1/a^2"), ratfun(SUB_A_TR_EC_REFERENCE));
    let tr2 = (&th * &th).trace().subst_square(Var::Z, &z2).unwrap();
    assert_eq!(tr2, ratfun(SUB_A_TR_THETA2));
}

#[test]
fn lambda_contents() {
    let cert = not_strongly_detected_report(2).unwrap();
    let l = &cert.lambda;
    for v in ["0", "2", "-2", "+-(2^(1/2) + 2^(-1/2))"] {
        assert!(l.contains_value(v), "{v}");
    }
    assert!(l.contains_polynomial(&poly("a^8 + a^6 + a^4 + a^2 + 1")));
    assert!(l.contains_polynomial(&poly("a^6 - a^4 - a^2 + 1")));
    assert!(l.contains_polynomial(&poly("6*a^8 - 17*a^6 + 13*a^4 + 2*a^2 - 4")));
    assert!(l.sources() >= 8, "{}", l.sources());
    assert!(l.all_finite());
    assert!(cert.discrepancies.len() >= 2);
}

#[test]
fn removing_an_identity_invalidates() {
    let mut cert = not_strongly_detected_report(2).unwrap();
    assert!(cert.recheck());
    let case = cert.cases.iter_mut().find(|c| c.case == "Case 3, Subcase B").unwrap();
    case.identities.retain(|i| !i.label.starts_with("deg Q"));
    assert!(!cert.recheck());
}

#[test]
fn case2_small_n() {
    assert!(verify_case2(1).is_err());
    let rep = verify_case2(4).unwrap();
    assert!(rep.passed());
    assert!(rep.identities.iter().any(|i| i.label.contains("no such representations")));
}

#[test]
fn case1_resultant_oracle() {
    let rep = verify_case1().unwrap();
    // Resultant in r of a^4 + a^2 r - a^2 + 1 and r^2 - 3r + 1, computed by hand:
    // a^4 (r0^2 - 3 r0 + 1) with r0 = -(a^4 - a^2 + 1)/a^2.
    let want = poly("a^8 + a^6 + a^4 + a^2 + 1");
    assert!(rep.finiteness.iter().any(|f| f.polynomial == want.to_string()));
}
