//! One line per acceptance criterion. Exits nonzero unless the failing set is
//! exactly `KNOWN_UNATTAINABLE`, whose analyses are printed alongside.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use slopes_core::character::formulas::*;
use slopes_core::character::{
    exclusion_certificate, fiber_identities, image_polynomial, q_degree_profile, q_of_trace_poly, verify_case3_common,
    verify_case3_sub_a, verify_case3_sub_b,
};
use slopes_core::edgepath::{
    basic_paths, enumerate_systems, seifert_system, slope_table, target_slope, Edgepath, MontesinosKnot, SystemType,
};
use slopes_core::incompress::{final_r_cycle, Rule, Status, DEFAULT_TRIANGLE_BOUND};
use slopes_core::poly::{pn_sequence, ratfun, trace_power_poly, RatFun, Var};
use slopes_core::rational::{int, rat, Rational};
use slopes_core::sl2::{twist_word_recurrence, twist_words, FreeWord, SymMat2};

/// Criteria that cannot pass as literally stated, with the reason.
const KNOWN_UNATTAINABLE: [(u32, &str); 2] = [
    (
        7,
        "the reference Tr(ec) has a^4 in its denominator; direct substitution of the reference z^2 into \
         Tr(ec) gives a^2 there (checked independently), while the reference Tr(Theta^2) matches exactly",
    ),
    (
        9,
        "the point a^2 = 2/3, z = -2 lies on the Subcase B quartic and has T = 2, E = 2, so the four points \
         T^2 = E^2 = 4 are not all off the image; the fibers over E = +-2 are still finite because \
         Res_z(quartic, E_num -+ 2 E_den) is a nonzero polynomial in a^2",
    ),
];

const PER_N_SEIFERT: Duration = Duration::from_secs(1);
const PER_N_DICHOTOMY: Duration = Duration::from_secs(5);
const POLY_TOTAL: Duration = Duration::from_secs(5);
const FORMULAS_TOTAL: Duration = Duration::from_secs(30);
const PER_N_DEGREE: Duration = Duration::from_secs(120);
const END_TO_END: Duration = Duration::from_secs(600);

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn secs(d: Duration) -> String {
    format!("{:.3} s", d.as_secs_f64())
}

fn reference(knot: &MontesinosKnot) -> i64 {
    seifert_system(knot).unwrap().twist_number().unwrap()
}

fn gamma(n: u32) -> Vec<Edgepath> {
    ["[1, 1/2, 1/3]".to_string(), "[0, 1/5]".into(), format!("[0, 1/{}]", 2 * n + 1), "[1, 1/2]".into()]
        .iter()
        .map(|s| Edgepath::parse(s).unwrap())
        .collect()
}

fn seifert_twists() -> Outcome {
    let mut slowest = Duration::ZERO;
    for n in 2..=10u32 {
        let start = Instant::now();
        let want = -(14 + 4 * n as i64);
        let (k, m) = (reference(&MontesinosKnot::k_n(n)), reference(&MontesinosKnot::mutant(n)));
        slowest = slowest.max(start.elapsed());
        if k != want || m != want {
            return outcome(false, format!("n = {n}: t(s) = {k}, t(s^tau) = {m}, want {want}"));
        }
    }
    outcome(slowest < PER_N_SEIFERT, format!("t(s) = t(s^tau) = -(14+4n) for n = 2..10; slowest n {}", secs(slowest)))
}

fn slope_dichotomy() -> Outcome {
    let mut slowest = Duration::ZERO;
    for n in 2..=10u32 {
        let start = Instant::now();
        let knot = MontesinosKnot::k_n(n);
        let table = slope_table(&knot, reference(&knot), DEFAULT_TRIANGLE_BOUND).unwrap();
        let Some(rec) = table.iter().find(|r| r.slope == target_slope(n)) else {
            return outcome(false, format!("n = {n}: K_n has no system of slope {}", 4 * (n + 4)));
        };
        let carried = rec.entries.iter().any(|e| {
            e.system.kind == SystemType::II
                && e.classification.verdict.status == Status::IncompressibleExtendable
                && e.system.basic.as_deref() == Some(&gamma(n)[..])
        });
        if !carried {
            return outcome(false, format!("n = {n}: no extendable gamma class at slope {}", 4 * (n + 4)));
        }
        let mutant = MontesinosKnot::mutant(n);
        let table = slope_table(&mutant, reference(&mutant), DEFAULT_TRIANGLE_BOUND).unwrap();
        let rec = table.iter().find(|r| r.slope == target_slope(n)).unwrap();
        let by_kind = |k: SystemType| -> Vec<Rule> {
            rec.entries.iter().filter(|e| e.system.kind == k).map(|e| e.classification.verdict.rule).collect()
        };
        let type_one = enumerate_systems(&mutant, SystemType::I).unwrap().iter().any(|s| s.twist() == int(2));
        let ok = !type_one
            && by_kind(SystemType::II) == vec![Rule::RB]
            && by_kind(SystemType::III) == vec![Rule::RA]
            && rec.non_compressible().next().is_none();
        slowest = slowest.max(start.elapsed());
        if !ok {
            return outcome(false, format!("n = {n}: mutant carrier found or rules differ"));
        }
    }
    outcome(
        slowest < PER_N_DICHOTOMY,
        format!("4(n+4) carried by gamma on K_n, compressible on K^tau_n, n = 2..10; slowest n {}", secs(slowest)),
    )
}

fn combinatorial_oracles() -> Outcome {
    for n in 2..=10i64 {
        let knot = MontesinosKnot::mutant(n as u32);
        let systems = enumerate_systems(&knot, SystemType::III).unwrap();
        let got: BTreeSet<i64> = systems.iter().map(|s| s.twist_number().unwrap()).collect();
        let want: BTreeSet<i64> =
            [-12, -8, -6, -2, 2, 4, 8, 6 - 4 * n, 2 - 4 * n, -4 * n, -4 - 4 * n, -8 - 4 * n, -10 - 4 * n, -14 - 4 * n]
                .into_iter()
                .collect();
        if got != want {
            return outcome(false, format!("n = {n}: type III twists {got:?}"));
        }
        let nu = n as u32;
        let k = MontesinosKnot::k_n(nu);
        let table = slope_table(&k, reference(&k), DEFAULT_TRIANGLE_BOUND).unwrap();
        let g = table
            .iter()
            .find(|r| r.slope == target_slope(nu))
            .and_then(|r| r.entries.iter().find(|e| e.system.kind == SystemType::II))
            .map(|e| final_r_cycle(&e.system).unwrap().0);
        let table = slope_table(&knot, reference(&knot), DEFAULT_TRIANGLE_BOUND).unwrap();
        let d = table
            .iter()
            .find(|r| r.slope == target_slope(nu))
            .and_then(|r| r.entries.iter().find(|e| e.system.kind == SystemType::II))
            .map(|e| final_r_cycle(&e.system).unwrap().0);
        if g != Some(vec![1, -4, -2 * n, 1]) || d != Some(vec![-4, 1, -2 * n, 1]) {
            return outcome(false, format!("n = {n}: r-cycles {g:?}, {d:?}"));
        }
    }
    outcome(true, "14 type III twists of K^tau_n and both r-cycles match for n = 2..10")
}

fn basic_path_completeness() -> Outcome {
    for q in 2..=40i64 {
        let got: BTreeSet<String> = basic_paths(&rat(1, q)).unwrap().iter().map(|p| p.to_string()).collect();
        let chain: Vec<String> = (2..=q).map(|k| format!("1/{k}")).collect();
        let want: BTreeSet<String> =
            [format!("[0, 1/{q}]"), format!("[1, {}]", chain.join(", "))].into_iter().collect();
        if got != want {
            return outcome(false, format!("q = {q}: {got:?}"));
        }
    }
    outcome(true, "exactly [0, 1/q] and [1, 1/2, ..., 1/q] for q = 2..40")
}

fn pn_polys() -> Outcome {
    let start = Instant::now();
    let x = RatFun::var(Var::X);
    let ab = &SymMat2::diag(&x) * &SymMat2::new(x.clone(), RatFun::one(), RatFun::zero(), x.recip().unwrap());
    let mut power = SymMat2::identity();
    for n in 1..=30i64 {
        power = &power * &ab;
        let seq = pn_sequence(n).unwrap();
        let corner = power.get(0, 1) == &seq.p.to_ratfun(Var::X);
        let polynomial = seq.cleared().min_exp().is_some_and(|e| e >= 0);
        if !corner || !polynomial || seq.obstruction().is_zero() {
            return outcome(false, format!("n = {n}: corner {corner}, polynomial {polynomial}"));
        }
    }
    let took = start.elapsed();
    outcome(
        took < POLY_TOTAL,
        format!("p_n recursion, corner of (AB)^n, and obstruction for n <= 30 in {}", secs(took)),
    )
}

fn trace_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut small = |nonzero: bool| loop {
        let r = rat(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        if !nonzero || r != Rational::default() {
            break r;
        }
    };
    for i in 0..50 {
        let (a, b, c) = (small(true), small(false), small(false));
        let d = (int(1) + &b * &c) / &a;
        let m = SymMat2::new(RatFun::constant(a), RatFun::constant(b), RatFun::constant(c), RatFun::constant(d));
        let tr = m.trace().constant_value().unwrap();
        let mut power = SymMat2::identity();
        for n in 1..=20i64 {
            power = &power * &m;
            let want = power.trace().constant_value().unwrap();
            if trace_power_poly(n, Var::X).unwrap().eval_all(&[(Var::X, tr.clone())]) != want {
                return outcome(false, format!("matrix {i} ({m}), n = {n}"));
            }
        }
    }
    outcome(true, "Tr(M^n) = P_n(Tr M) for 50 seeded unimodular matrices, n <= 20")
}

fn reference_formulas() -> Outcome {
    let start = Instant::now();
    let reports = [verify_case3_common().unwrap(), verify_case3_sub_a(2).unwrap(), verify_case3_sub_b(2).unwrap()];
    let failing: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.identities
                .iter()
                .filter(|i| !i.holds)
                .map(|i| i.label.clone())
                .chain(r.forcings.iter().filter(|f| !f.holds()).map(|f| f.label.clone()))
        })
        .collect();
    let e = SymMat2::lit(E_MATRIX);
    let c = SymMat2::lit(["1/a", R_VALUE, "0", "a"]);
    let th = SymMat2::lit(THETA_MATRIX);
    let z2 = ratfun(SUB_A_Z2);
    let tr_ec = (&e * &c).trace().subst_square(Var::Z, &z2).unwrap();
    let tr_th2 = (&th * &th).trace().subst_square(Var::Z, &z2).unwrap();
    let displays = (&e * &c).trace() == ratfun(E_FORM) && th.trace() == ratfun(T_FORM);
    let theta_ok = tr_th2 == ratfun(SUB_A_TR_THETA2);
    let ec_ok = tr_ec == ratfun(SUB_A_TR_EC_REFERENCE);
    let took = start.elapsed();
    let passed = failing.is_empty() && displays && theta_ok && ec_ok && took < FORMULAS_TOTAL;
    let detail = format!(
        "case identities failing: {}; T, E forms {displays}; Tr(Theta^2) {theta_ok}; reference Tr(ec) {ec_ok} \
         (derived {tr_ec}); {}",
        if failing.is_empty() { "none".into() } else { failing.join(", ") },
        secs(took)
    );
    outcome(passed, detail)
}

fn degree_theorem() -> Outcome {
    let start = Instant::now();
    let q = &image_polynomial().q;
    let setup = start.elapsed();
    let prof = q_degree_profile(q);
    if prof.e_degrees != vec![12, 11, 10, 8, 7, 4] || !prof.even_in_t || prof.t_degree > 10 {
        return outcome(
            false,
            format!("profile {:?}, even {}, T-degree {}", prof.e_degrees, prof.even_in_t, prof.t_degree),
        );
    }
    let mut slowest = Duration::ZERO;
    for n in 2..=6i64 {
        let t = Instant::now();
        let deg = q_of_trace_poly(q, n).unwrap().degree_in(Var::E) as i64;
        slowest = slowest.max(t.elapsed());
        if deg != 4 + 10 * n {
            return outcome(false, format!("n = {n}: deg Q(E, P_n(E)) = {deg}"));
        }
    }
    outcome(
        setup + slowest < PER_N_DEGREE,
        format!(
            "E-degrees (12, 11, 10, 8, 7, 4), even in T, deg Q(E, P_n) = 4+10n for n = 2..6; elimination {}, slowest n {}",
            secs(setup),
            secs(slowest)
        ),
    )
}

fn fiber_finiteness() -> Outcome {
    let ids = fiber_identities();
    let ids_ok = ids.iter().all(|i| i.holds);
    let ex = exclusion_certificate();
    let repair = ex.repair.iter().all(|(_, p)| !p.is_zero() && !p.is_constant());
    let detail = format!(
        "fiber identities {ids_ok}; exclusion of T^2 = E^2 = 4 {}; witness {}; repaired fibers finite {repair}",
        ex.literal_holds,
        ex.witness.as_deref().unwrap_or("none")
    );
    outcome(ids_ok && ex.literal_holds, detail)
}

fn twist_region_words() -> Outcome {
    let product = FreeWord::parse("w0 w1").unwrap();
    for k in 0..=40i64 {
        let (odd, even) = twist_words(k).unwrap();
        let j = 2 * k as usize + 1;
        if odd != twist_word_recurrence(j) || even != twist_word_recurrence(j + 1) || odd.mul(&even) != product {
            return outcome(false, format!("k = {k}"));
        }
    }
    outcome(true, "closed forms follow the conjugation recurrence and w_{2k+1} w_{2k+2} = w0 w1 for k <= 40")
}

fn lambda_ok(cert: &Value) -> Result<(), String> {
    let entries = cert["lambda"]["entries"].as_array().ok_or("no Lambda entries")?;
    let values: BTreeSet<&str> = entries.iter().filter_map(|e| e["value"].as_str()).collect();
    let polys: Vec<(&str, &str)> =
        entries.iter().filter_map(|e| Some((e["source"].as_str()?, e["polynomial"].as_str()?))).collect();
    for v in ["0", "2", "-2", "+-(2^(1/2) + 2^(-1/2))"] {
        if !values.contains(v) {
            return Err(format!("missing value {v}"));
        }
    }
    let case1b = polys.iter().filter(|(s, p)| s.starts_with("Case 1B") && *p == "a^8 + a^6 + a^4 + a^2 + 1").count();
    if case1b != 2 {
        return Err("missing a Case 1B polynomial".into());
    }
    if !polys.iter().any(|(_, p)| *p == "a^6 - a^4 - a^2 + 1") {
        return Err("missing a^6 - a^4 - a^2 + 1".into());
    }
    for case in cert["cases"].as_array().ok_or("no cases")? {
        let fin = case["finiteness"].as_array().ok_or("no finiteness list")?;
        if fin.is_empty() || !fin.iter().all(|f| f["nonzero"] == Value::Bool(true)) {
            return Err(format!("{} has no finiteness witness", case["case"]));
        }
    }
    Ok(())
}

fn end_to_end() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_slopes")).args(["paper", "--n-range", "2..5"]).output().unwrap();
    let took = start.elapsed();
    if out.status.code() != Some(0) {
        return outcome(false, format!("exit {:?}", out.status.code()));
    }
    let report: Value = match serde_json::from_slice(&out.stdout) {
        Ok(v) => v,
        Err(e) => return outcome(false, format!("bad JSON: {e}")),
    };
    let nested = report["nested"].as_array().cloned().unwrap_or_default();
    let certs: Vec<&Value> = nested.iter().map(|r| &r["certificate"]).filter(|c| !c.is_null()).collect();
    let ns: Vec<i64> = certs.iter().filter_map(|c| c["n"].as_i64()).collect();
    if ns != vec![2, 3, 4, 5] {
        return outcome(false, format!("certificates for n = {ns:?}"));
    }
    for c in certs {
        if let Err(e) = lambda_ok(c) {
            return outcome(false, format!("n = {}: {e}", c["n"]));
        }
    }
    outcome(took < END_TO_END, format!("exit 0, Lambda and finiteness witnesses for n = 2..5 in {}", secs(took)))
}

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "Seifert twists", seifert_twists),
        (2, "slope dichotomy", slope_dichotomy),
        (3, "combinatorial oracles", combinatorial_oracles),
        (4, "basic-path completeness", basic_path_completeness),
        (5, "p_n polynomial suite", pn_polys),
        (6, "trace identities", trace_identities),
        (7, "formula reproduction", reference_formulas),
        (8, "degree theorem", degree_theorem),
        (9, "fiber finiteness", fiber_finiteness),
        (10, "twist-region words", twist_region_words),
        (11, "end-to-end", end_to_end),
    ];
    // The degree theorem runs first so its timing includes the one-time elimination.
    let mut order: Vec<usize> = (0..criteria.len()).collect();
    order.sort_by_key(|&i| criteria[i].0 != 8);
    let mut outcomes: Vec<Option<Outcome>> = (0..criteria.len()).map(|_| None).collect();
    for i in order {
        outcomes[i] = Some((criteria[i].2)());
    }
    let mut failed = BTreeSet::new();
    for ((id, name, _), o) in criteria.iter().zip(outcomes) {
        let (id, o) = (*id, o.expect("every criterion ran"));
        println!("[{}] {id:>2} {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
        if !o.passed {
            failed.insert(id);
        }
    }
    let known: BTreeSet<u32> = KNOWN_UNATTAINABLE.iter().map(|(id, _)| *id).collect();
    for (id, why) in KNOWN_UNATTAINABLE {
        if failed.contains(&id) {
            println!("expected failure {id}: {why}");
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed.len(), criteria.len());
    if failed != known {
        println!("unexpected outcome: failing {failed:?}, documented {known:?}");
        std::process::exit(1);
    }
}
