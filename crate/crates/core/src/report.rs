//! Reports for the command-line entry points: slope tables,
//! checklists, certificates, and their JSON and text renderings.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::character::{certificate_unchecked, Certificate};
use crate::edgepath::{
    enumerate_systems, find_slope, reference_twist, slope_table, target_slope, Edgepath, MontesinosKnot, SlopeRecord,
    SystemType,
};
use crate::error::{Error, Result};
use crate::incompress::{classify_system, dead_cycle, final_r_cycle, live_cycle, Rule, Status};
use crate::rational::{fmt_rational, int};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(Error::UnsupportedFormat(other.into())),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckItem {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckItem { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KnotTable {
    pub knot: String,
    pub reference_twist: i64,
    pub slopes: Vec<SlopeRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Input {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tangles: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_range: Option<(i64, i64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference_twist: Option<i64>,
    pub triangle_bound: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub input: Input,
    pub passed: bool,
    pub slope_tables: Vec<KnotTable>,
    pub checklist: Vec<CheckItem>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub nested: Vec<Report>,
    pub discrepancies: Vec<String>,
}

impl Report {
    fn new(input: Input) -> Self {
        Report {
            tool: "slopes".into(),
            version: VERSION.into(),
            input,
            passed: false,
            slope_tables: vec![],
            checklist: vec![],
            certificate: None,
            nested: vec![],
            discrepancies: vec![],
        }
    }

    fn finish(mut self) -> Self {
        self.passed = self.checklist.iter().all(|c| c.passed)
            && self.certificate.as_ref().is_none_or(|c| c.holds)
            && self.nested.iter().all(|r| r.passed);
        self
    }

    /// Process exit status: 0 when every check passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

/// Parses `a..b`, inclusive at both ends.
pub fn parse_n_range(s: &str) -> Result<(i64, i64)> {
    let bad = || Error::Parse(format!("malformed range `{s}`, expected a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a < 2 || b < a {
        return Err(Error::Range(format!("range {a}..{b} must satisfy 2 <= a <= b")));
    }
    Ok((a, b))
}

fn check_n(n: i64) -> Result<u32> {
    if !(2..=u32::MAX as i64).contains(&n) {
        return Err(Error::Range(format!("n must be at least 2, got {n}")));
    }
    Ok(n as u32)
}

fn table_for(knot: &MontesinosKnot, reference: i64, bound: u64) -> Result<KnotTable> {
    Ok(KnotTable { knot: knot.to_string(), reference_twist: reference, slopes: slope_table(knot, reference, bound)? })
}

fn reversibility_discrepancies(table: &KnotTable) -> Vec<String> {
    let set: BTreeSet<String> = table
        .slopes
        .iter()
        .flat_map(|r| r.entries.iter())
        .flat_map(|e| e.classification.reversibility.iter())
        .filter_map(|r| r.discrepancy.clone())
        .collect();
    set.into_iter().map(|d| format!("{}: {d}", table.knot)).collect()
}

pub fn cmd_knot(tangles: &str, reference: Option<i64>, bound: u64) -> Result<Report> {
    let knot: MontesinosKnot = tangles.parse()?;
    let reference = reference_twist(&knot, reference)?;
    let table = table_for(&knot, reference, bound)?;
    let mut rep = Report::new(Input {
        command: "knot".into(),
        tangles: Some(knot.to_string()),
        n: None,
        n_range: None,
        reference_twist: Some(reference),
        triangle_bound: bound,
    });
    let zero = find_slope(&table.slopes, &int(0));
    rep.checklist.push(CheckItem::new("reference system has slope 0", zero.is_some(), format!("t(s) = {reference}")));
    rep.discrepancies = reversibility_discrepancies(&table);
    rep.slope_tables.push(table);
    Ok(rep.finish())
}

fn basic_gamma(n: u32) -> Vec<Edgepath> {
    ["[1, 1/2, 1/3]".to_string(), "[0, 1/5]".into(), format!("[0, 1/{}]", 2 * n + 1), "[1, 1/2]".into()]
        .iter()
        .map(|s| Edgepath::parse(s).expect("static path"))
        .collect()
}

fn carriers(rec: Option<&SlopeRecord>, kind: SystemType) -> Vec<&crate::edgepath::SystemEntry> {
    rec.map(|r| r.entries.iter().filter(|e| e.system.kind == kind).collect()).unwrap_or_default()
}

pub fn cmd_verify_section2(n: i64, bound: u64) -> Result<Report> {
    let nu = check_n(n)?;
    let mut rep = Report::new(Input {
        command: "verify-section2".into(),
        tangles: None,
        n: Some(n),
        n_range: None,
        reference_twist: None,
        triangle_bound: bound,
    });
    let kn = MontesinosKnot::k_n(nu);
    let km = MontesinosKnot::mutant(nu);
    let want = -(14 + 4 * n);
    let t_kn = reference_twist(&kn, None)?;
    let t_km = reference_twist(&km, None)?;
    rep.checklist.push(CheckItem::new(
        "Seifert systems",
        t_kn == want && t_km == want,
        format!("t(s) = {t_kn}, t(s^tau) = {t_km}, expected {want}"),
    ));
    let slope = target_slope(nu);
    let two = int(2);

    // The mutant: every carrier of the target slope is compressible.
    let tm = table_for(&km, t_km, bound)?;
    let rec_m = find_slope(&tm.slopes, &slope);
    let t1 = enumerate_systems(&km, SystemType::I)?;
    let t1_twists: Vec<String> = t1.iter().map(|s| fmt_rational(&s.twist())).collect();
    let iii = carriers(rec_m, SystemType::III);
    rep.checklist.push(CheckItem::new(
        "type III systems of K^tau with t = 2",
        iii.len() == 1 && iii[0].classification.verdict.rule == Rule::RA,
        iii.first().map_or("none".into(), |e| {
            format!("{} ({}: {})", e.system, e.classification.verdict.rule, e.classification.verdict.notes)
        }),
    ));
    let ii = carriers(rec_m, SystemType::II);
    let ii_ok = ii.len() == 1
        && ii[0].classification.verdict.rule == Rule::RB
        && final_r_cycle(&ii[0].system).is_ok_and(|c| c.0 == dead_cycle(nu));
    rep.checklist.push(CheckItem::new(
        "type II classes of K^tau with t = 2",
        ii_ok,
        ii.first().map_or("none".into(), |e| {
            format!("{} ({}: {})", e.system, e.classification.verdict.rule, e.classification.verdict.notes)
        }),
    ));
    rep.checklist.push(CheckItem::new(
        "no type I system of K^tau has t = 2",
        t1.iter().all(|s| s.twist() != two),
        format!("twists {}", t1_twists.join(", ")),
    ));
    let non_compressible = rec_m.map_or(0, |r| r.non_compressible().count());
    rep.checklist.push(CheckItem::new(
        format!("K^tau has no incompressible carrier of slope {}", fmt_rational(&slope)),
        non_compressible == 0,
        format!("{non_compressible} carriers not ruled out"),
    ));
    let twists: BTreeSet<i64> =
        enumerate_systems(&km, SystemType::III)?.iter().map(|s| s.twist_number()).collect::<Result<_>>()?;
    let want_twists: BTreeSet<i64> =
        [-12, -8, -6, -2, 2, 4, 8, 6 - 4 * n, 2 - 4 * n, -4 * n, -4 - 4 * n, -8 - 4 * n, -10 - 4 * n, -14 - 4 * n]
            .into_iter()
            .collect();
    rep.checklist.push(CheckItem::new("type III twist values of K^tau", twists == want_twists, format!("{twists:?}")));

    // K_n: the target slope is carried by the vertical extensions of gamma.
    let tk = table_for(&kn, t_kn, bound)?;
    let rec_k = find_slope(&tk.slopes, &slope);
    let ii = carriers(rec_k, SystemType::II);
    let gamma = basic_gamma(nu);
    let gamma_entry = ii.iter().find(|e| e.system.basic.as_deref() == Some(&gamma[..]));
    let gamma_ok = gamma_entry.is_some_and(|e| {
        e.classification.verdict.status == Status::IncompressibleExtendable
            && final_r_cycle(&e.system).is_ok_and(|c| c.0 == live_cycle(nu))
    });
    rep.checklist.push(CheckItem::new(
        format!("K_n has slope {} carried by gamma", fmt_rational(&slope)),
        gamma_ok && ii.len() == 1,
        gamma_entry.map_or("gamma not found".into(), |e| {
            format!("{} ({}: {})", e.system, e.classification.verdict.rule, e.classification.verdict.notes)
        }),
    ));
    let others = rec_k.map_or(0, |r| r.entries.len()) - ii.len();
    let other_ok = rec_k.is_some_and(|r| {
        r.entries
            .iter()
            .filter(|e| e.system.kind != SystemType::II)
            .all(|e| e.classification.verdict.status == Status::Compressible)
    });
    rep.checklist.push(CheckItem::new(
        "other carriers of the slope in K_n are compressible",
        other_ok,
        format!("{others} other systems"),
    ));
    // The hand-built type III system of K^tau with t = 2.
    let delta = crate::edgepath::EdgepathSystem::new(
        SystemType::III,
        ["[inf, 0, 1/5]", "[inf, 1, 1/2, 1/3]", &format!("[inf, 0, 1/{}]", 2 * n + 1), "[inf, 0, 1/2]"]
            .iter()
            .map(|s| Edgepath::parse(s))
            .collect::<Result<_>>()?,
        None,
    );
    let c = classify_system(&delta, &km, bound);
    rep.checklist.push(CheckItem::new(
        "hand-built type III system of K^tau is compressible",
        c.verdict.status == Status::Compressible && delta.twist() == two,
        format!("{}: {}", c.verdict.rule, c.verdict.notes),
    ));
    rep.discrepancies = reversibility_discrepancies(&tm);
    rep.discrepancies.extend(reversibility_discrepancies(&tk));
    rep.slope_tables = vec![tk, tm];
    Ok(rep.finish())
}

pub fn cmd_verify_section3(n: i64) -> Result<Report> {
    check_n(n)?;
    let mut rep = Report::new(Input {
        command: "verify-section3".into(),
        tangles: None,
        n: Some(n),
        n_range: None,
        reference_twist: None,
        triangle_bound: 0,
    });
    let cert = certificate_unchecked(n)?;
    for c in &cert.cases {
        let detail = match c.first_failure() {
            Some(f) => format!("failed: {f}"),
            None => c.conclusion.clone(),
        };
        rep.checklist.push(CheckItem::new(c.case.clone(), c.passed(), detail));
    }
    let deg_ok = cert.cases.iter().flat_map(|c| c.identities.iter()).find(|i| i.label.starts_with("deg Q"));
    rep.checklist.push(CheckItem::new(
        "degree of Q along the trace polynomial",
        deg_ok.is_some_and(|i| i.holds),
        deg_ok.map_or("missing".into(), |i| i.lhs.clone()),
    ));
    rep.checklist.push(CheckItem::new(
        "Lambda is finite",
        cert.lambda.all_finite(),
        format!("{} sources beyond {{0, 2, -2}}", cert.lambda.sources()),
    ));
    rep.checklist.push(CheckItem::new("dependency list complete", cert.dependencies_hold(), cert.conclusion.clone()));
    rep.discrepancies = cert.discrepancies.clone();
    rep.certificate = Some(cert);
    Ok(rep.finish())
}

pub fn cmd_paper(range: (i64, i64), bound: u64) -> Result<Report> {
    let (a, b) = range;
    let per_n = (a..=b)
        .into_par_iter()
        .map(|n| -> Result<Vec<Report>> { Ok(vec![cmd_verify_section2(n, bound)?, cmd_verify_section3(n)?]) })
        .collect::<Result<Vec<_>>>()?;
    let mut rep = Report::new(Input {
        command: "paper".into(),
        tangles: None,
        n: None,
        n_range: Some(range),
        reference_twist: None,
        triangle_bound: bound,
    });
    for (n, pair) in (a..=b).zip(per_n) {
        let ok = pair.iter().all(|r| r.passed);
        rep.checklist.push(CheckItem::new(format!("n = {n}"), ok, "sections 2 and 3"));
        for r in &pair {
            rep.discrepancies.extend(r.discrepancies.iter().map(|d| format!("n = {n}: {d}")));
        }
        rep.nested.extend(pair);
    }
    Ok(rep.finish())
}

pub fn emit_report(report: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => serde_json::to_string_pretty(report)
            .map(|s| s + "\n")
            .map_err(|e| Error::VerificationFailed(format!("serialization: {e}"))),
        Format::Text => Ok(render_text(report)),
    }
}

fn render_text(r: &Report) -> String {
    let mut out = String::new();
    render_into(r, &mut out, 0);
    out
}

fn render_into(r: &Report, out: &mut String, depth: usize) {
    let pad = "  ".repeat(depth);
    let mark = |b: bool| if b { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "{pad}{} {} {}: {}", r.tool, r.version, r.input.command, mark(r.passed));
    if let Some(n) = r.input.n {
        let _ = writeln!(out, "{pad}n = {n}");
    }
    if let Some(t) = &r.input.tangles {
        let _ = writeln!(out, "{pad}knot K({t})");
    }
    for t in &r.slope_tables {
        let _ = writeln!(out, "{pad}slopes of K({}), reference twist {}", t.knot, t.reference_twist);
        for rec in &t.slopes {
            let kinds: Vec<String> = rec
                .entries
                .iter()
                .map(|e| format!("{}:{:?}", e.system.kind, e.classification.verdict.status))
                .collect();
            let _ = writeln!(out, "{pad}  {:>6}  {}", fmt_rational(&rec.slope), kinds.join(" "));
        }
    }
    for c in &r.checklist {
        let _ = writeln!(out, "{pad}[{}] {}: {}", mark(c.passed), c.name, c.detail);
    }
    if let Some(cert) = &r.certificate {
        let _ = writeln!(out, "{pad}Lambda:");
        for e in &cert.lambda.entries {
            match &e.value {
                Some(v) => {
                    let _ = writeln!(out, "{pad}  {v} ({})", e.source);
                }
                None => {
                    let _ = writeln!(out, "{pad}  a + 1/a, {} = 0 ({})", e.polynomial, e.source);
                }
            }
        }
    }
    for n in &r.nested {
        render_into(n, out, depth + 1);
    }
    if depth == 0 && !r.discrepancies.is_empty() {
        let _ = writeln!(out, "discrepancies:");
        for d in &r.discrepancies {
            let _ = writeln!(out, "  {d}");
        }
    }
}
