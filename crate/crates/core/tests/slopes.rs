use slopes_core::edgepath::{
    enumerate_systems, seifert_system, slope_table, target_slope, Edgepath, MontesinosKnot, SystemType,
};
use slopes_core::incompress::{classify_system, final_r_cycle, Rule, Status, DEFAULT_TRIANGLE_BOUND};
use slopes_core::rational::int;

fn gamma(n: u32) -> Vec<Edgepath> {
    let q = 2 * n + 1;
    vec![
        Edgepath::parse("[1, 1/2, 1/3]").unwrap(),
        Edgepath::parse("[0, 1/5]").unwrap(),
        Edgepath::parse(&format!("[0, 1/{q}]")).unwrap(),
        Edgepath::parse("[1, 1/2]").unwrap(),
    ]
}

fn reference(knot: &MontesinosKnot) -> i64 {
    seifert_system(knot).unwrap().twist_number().unwrap()
}

#[test]
fn seifert_twists() {
    for n in 2..=10u32 {
        let want = -(14 + 4 * n as i64);
        assert_eq!(reference(&MontesinosKnot::k_n(n)), want);
        assert_eq!(reference(&MontesinosKnot::mutant(n)), want);
    }
}

#[test]
fn k_n_carries_target_slope_via_gamma() {
    for n in 2..=6u32 {
        let knot = MontesinosKnot::k_n(n);
        let table = slope_table(&knot, reference(&knot), DEFAULT_TRIANGLE_BOUND).unwrap();
        let rec = table.iter().find(|r| r.slope == target_slope(n)).expect("slope present");
        let kinds: Vec<_> = rec.entries.iter().map(|e| e.system.kind).collect();
        assert_eq!(kinds.len(), 2, "n = {n}: {kinds:?}");
        let ii = rec.entries.iter().find(|e| e.system.kind == SystemType::II).unwrap();
        assert_eq!(ii.system.basic.as_deref(), Some(&gamma(n)[..]));
        assert_eq!(ii.classification.verdict.status, Status::IncompressibleExtendable);
        assert_eq!(ii.classification.verdict.rule, Rule::RC);
        let iii = rec.entries.iter().find(|e| e.system.kind == SystemType::III).unwrap();
        assert_eq!(iii.classification.verdict.status, Status::Compressible);
        let cyc = final_r_cycle(&ii.system).unwrap();
        assert_eq!(cyc.0, vec![1, -4, -2 * n as i64, 1]);
    }
}

#[test]
fn mutant_has_no_carrier() {
    for n in 2..=6u32 {
        let knot = MontesinosKnot::mutant(n);
        let table = slope_table(&knot, reference(&knot), DEFAULT_TRIANGLE_BOUND).unwrap();
        let rec = table.iter().find(|r| r.slope == target_slope(n)).expect("slope present");
        for e in &rec.entries {
            assert_eq!(e.classification.verdict.status, Status::Compressible, "{}", e.system.kind);
        }
        let rules: Vec<_> = rec.entries.iter().map(|e| (e.system.kind, e.classification.verdict.rule)).collect();
        assert_eq!(rules, vec![(SystemType::II, Rule::RB), (SystemType::III, Rule::RA)]);
        let t1 = enumerate_systems(&knot, SystemType::I).unwrap();
        assert!(t1.iter().all(|s| s.twist() != int(2)));
    }
}

#[test]
fn mutant_type_three_twists() {
    for n in 2..=10i64 {
        let knot = MontesinosKnot::mutant(n as u32);
        let got: std::collections::BTreeSet<i64> =
            enumerate_systems(&knot, SystemType::III).unwrap().iter().map(|s| s.twist_number().unwrap()).collect();
        let want: std::collections::BTreeSet<i64> =
            [-12, -8, -6, -2, 2, 4, 8, 6 - 4 * n, 2 - 4 * n, -4 * n, -4 - 4 * n, -8 - 4 * n, -10 - 4 * n, -14 - 4 * n]
                .into_iter()
                .collect();
        assert_eq!(got, want, "n = {n}");
        let sys = enumerate_systems(&knot, SystemType::III).unwrap();
        let two: Vec<_> = sys.iter().filter(|s| s.twist() == int(2)).collect();
        assert_eq!(two.len(), 1);
        let c = classify_system(two[0], &knot, DEFAULT_TRIANGLE_BOUND);
        assert_eq!(c.verdict.rule, Rule::RA);
    }
}
