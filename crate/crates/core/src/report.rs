//! Exhaustive invariant suites and the report they produce.
//!
//! Each suite counts one check per element of the quantified domain it
//! covers (for example 120 checks for the unordered pairs of distinct
//! theta-characteristics). Suites run concurrently; the report lists them
//! in a fixed order.
//!
//! JSON layout:
//!
//! ```text
//! { "overall": "pass" | "fail",
//!   "suites": [ { "name": str, "checks": int,
//!                 "failures": [ { "suite": str, "inputs": str,
//!                                 "expected": str, "actual": str } ] } ] }
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::thread;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::f2geometry::{
    self, end0_pair_sums, klein_subgroups, pfaffian_intersection, phi_direction_map,
    quadratic_form, s_set, sym2_complement, ThetaCharacteristic, TwoTorsionPoint,
};
use crate::hilbert::{self, basis_value};
use crate::pipeline::{self, DegreeReport};
use crate::tables;
use crate::verlinde::{
    self, binomial, EvalOptions, VerlindeQuery, VerlindeResult, CERTIFICATION_BOUND,
};

/// Ranks, levels and genera covered by the Verlinde suites.
pub const ENVELOPE_RANKS: std::ops::RangeInclusive<u32> = 2..=5;
pub const ENVELOPE_LEVELS: std::ops::RangeInclusive<u32> = 0..=12;
pub const ENVELOPE_GENERA: std::ops::RangeInclusive<u32> = 1..=3;
pub const DETERMINISM_WORKERS: [usize; 3] = [1, 2, 8];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureRecord {
    pub suite: String,
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<FailureRecord>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub overall: Outcome,
    pub suites: Vec<SuiteResult>,
}

impl VerificationReport {
    pub fn from_suites(suites: Vec<SuiteResult>) -> Self {
        let overall = if suites.iter().all(SuiteResult::passed) {
            Outcome::Pass
        } else {
            Outcome::Fail
        };
        VerificationReport { overall, suites }
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }

    pub fn render_table(&self) -> String {
        let width = self.suites.iter().map(|s| s.name.len()).max().unwrap_or(5).max(5);
        let mut out = format!("{:<width$}  {:>6}  {:>8}  status\n", "suite", "checks", "failures");
        for s in &self.suites {
            out.push_str(&format!(
                "{:<width$}  {:>6}  {:>8}  {}\n",
                s.name,
                s.checks,
                s.failures.len(),
                if s.passed() { "pass" } else { "FAIL" }
            ));
        }
        for s in &self.suites {
            for f in &s.failures {
                out.push_str(&format!(
                    "failure in {}: inputs {} expected {} actual {}\n",
                    f.suite, f.inputs, f.expected, f.actual
                ));
            }
        }
        out.push_str(&format!("overall: {}\n", self.overall));
        out
    }
}

struct Suite {
    name: &'static str,
    checks: usize,
    failures: Vec<FailureRecord>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            checks: 0,
            failures: Vec::new(),
        }
    }

    /// Records one check; the detail closure only runs on failure and returns
    /// `(inputs, expected, actual)`.
    fn check(&mut self, ok: bool, detail: impl FnOnce() -> (String, String, String)) {
        self.checks += 1;
        if !ok {
            let (inputs, expected, actual) = detail();
            self.failures.push(FailureRecord {
                suite: self.name.to_string(),
                inputs,
                expected,
                actual,
            });
        }
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            name: self.name.to_string(),
            checks: self.checks,
            failures: self.failures,
        }
    }
}

fn show_set<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    tables::braced_list(items)
}

// ---------------------------------------------------------------------------
// f2geometry

pub fn suite_enumeration() -> SuiteResult {
    let mut s = Suite::new("enumeration");
    let (points, chars) = f2geometry::enumerate_all();
    let distinct_points: BTreeSet<_> = points.iter().map(|p| p.mask()).collect();
    for (i, p) in points.iter().enumerate() {
        let ok = p.mask() & 0x20 == 0
            && p.mask().count_ones() % 2 == 0
            && (i == 0 || points[i - 1] < *p)
            && distinct_points.len() == 16;
        s.check(ok, || (format!("point #{i} {{{p}}}"), "canonical, sorted, distinct".into(), format!("{points:?}")));
    }
    let distinct_chars: BTreeSet<_> = chars.iter().map(|k| k.mask()).collect();
    for (i, k) in chars.iter().enumerate() {
        let ok = k.mask() & 0x20 == 0
            && k.mask().count_ones() % 2 == 1
            && (i == 0 || chars[i - 1] < *k)
            && distinct_chars.len() == 16;
        s.check(ok, || (format!("characteristic #{i} {{{k}}}"), "canonical, sorted, distinct".into(), format!("{chars:?}")));
    }
    let odd = chars.iter().filter(|k| k.is_odd()).count();
    s.check(points.len() == 16 && chars.len() == 16 && odd == 6, || {
        (
            "counts".into(),
            "16 points, 16 characteristics, 6 odd".into(),
            format!("{} points, {} characteristics, {odd} odd", points.len(), chars.len()),
        )
    });
    s.finish()
}

pub fn suite_group_law() -> SuiteResult {
    let mut s = Suite::new("group-law");
    let all = TwoTorsionPoint::all();
    for &a in &all {
        for &b in &all {
            for &c in &all {
                let (l, r) = ((a + b) + c, a + (b + c));
                s.check(l == r, || (format!("({{{a}}}, {{{b}}}, {{{c}}})"), format!("{{{l}}}"), format!("{{{r}}}")));
            }
        }
    }
    for &a in &all {
        for &b in &all {
            s.check(a + b == b + a, || (format!("({{{a}}}, {{{b}}})"), format!("{{{}}}", a + b), format!("{{{}}}", b + a)));
        }
    }
    for &a in &all {
        let ok = (a + a).is_identity() && a + TwoTorsionPoint::IDENTITY == a;
        s.check(ok, || (format!("{{{a}}}"), "a + a = 0 and a + 0 = a".into(), format!("{{{}}}", a + a)));
    }
    // {1,2}, {2,3}, {3,4}, {4,5} generate all of J[2]
    let gens: Vec<TwoTorsionPoint> = ["1,2", "2,3", "3,4", "4,5"]
        .iter()
        .map(|g| g.parse().unwrap())
        .collect();
    let span: BTreeSet<TwoTorsionPoint> = (0u8..16)
        .map(|bits| {
            gens.iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &g)| g)
                .sum()
        })
        .collect();
    s.check(span.len() == 16, || ("generators {1,2},{2,3},{3,4},{4,5}".into(), "span of size 16".into(), span.len().to_string()));
    s.finish()
}

pub fn suite_weil_pairing() -> SuiteResult {
    let mut s = Suite::new("weil-pairing");
    let all = TwoTorsionPoint::all();
    for &a in &all {
        for &b in &all {
            for &c in &all {
                let l = (a + b).weil_pairing(c);
                let r = a.weil_pairing(c) ^ b.weil_pairing(c);
                s.check(l == r, || (format!("({{{a}}}, {{{b}}}, {{{c}}})"), r.to_string(), l.to_string()));
            }
        }
    }
    for &a in &all {
        s.check(a.weil_pairing(a) == 0, || (format!("{{{a}}}"), "0".into(), a.weil_pairing(a).to_string()));
    }
    for &a in all.iter().filter(|a| !a.is_identity()) {
        let ok = all.iter().any(|&b| a.weil_pairing(b) == 1);
        s.check(ok, || (format!("{{{a}}}"), "some b with <a,b> = 1".into(), "none".into()));
    }
    s.finish()
}

pub fn suite_torsor() -> SuiteResult {
    let mut s = Suite::new("torsor");
    let all = TwoTorsionPoint::all();
    for kappa in ThetaCharacteristic::all() {
        let image: BTreeSet<_> = all.iter().map(|&a| kappa.twist(a)).collect();
        let involutive = all.iter().all(|&a| kappa.twist(a).twist(a) == kappa);
        s.check(image.len() == 16 && involutive, || {
            (format!("{{{kappa}}}"), "bijective involutive twist".into(), format!("image of size {}", image.len()))
        });
    }
    s.finish()
}

pub fn suite_quadratic_form() -> SuiteResult {
    let mut s = Suite::new("quadratic-form");
    let all = TwoTorsionPoint::all();
    let chars = ThetaCharacteristic::all();
    for &kappa in &chars {
        let q = quadratic_form(kappa);
        for &a in &all {
            for &b in &all {
                let l = q.get(a + b);
                let r = q.get(a) ^ q.get(b) ^ a.weil_pairing(b);
                s.check(l == r, || (format!("kappa {{{kappa}}}, ({{{a}}}, {{{b}}})"), r.to_string(), l.to_string()));
            }
        }
    }
    for &kappa in &chars {
        let q = quadratic_form(kappa);
        let (zeros, arf) = (q.zeros(), q.arf());
        let expected = if kappa.is_odd() { (6, 1) } else { (10, 0) };
        let ok = (zeros, arf) == expected && q.get(TwoTorsionPoint::IDENTITY) == 0;
        s.check(ok, || (format!("kappa {{{kappa}}}"), format!("{expected:?}"), format!("{:?}", (zeros, arf))));
    }
    for &kappa in &chars {
        let q = quadratic_form(kappa);
        for &sigma in &all {
            let shifted = quadratic_form(kappa.twist(sigma));
            let bad = all
                .iter()
                .find(|&&a| shifted.get(a) != q.get(a) ^ sigma.weil_pairing(a));
            s.check(bad.is_none(), || {
                let a = bad.unwrap();
                (
                    format!("kappa {{{kappa}}}, sigma {{{sigma}}}, alpha {{{a}}}"),
                    (q.get(*a) ^ sigma.weil_pairing(*a)).to_string(),
                    shifted.get(*a).to_string(),
                )
            });
        }
    }
    s.finish()
}

pub fn suite_s_set() -> SuiteResult {
    let mut s = Suite::new("s-set");
    for kappa in ThetaCharacteristic::all() {
        let set = s_set(kappa);
        let complement = sym2_complement(kappa);
        let covers = complement.iter().all(|&a| !set.contains(a))
            && complement.len() + set.len() == 16;
        let ok = set.len() == 6
            && set.sum().is_identity()
            && set.contains(TwoTorsionPoint::IDENTITY) == kappa.is_odd()
            && complement.len() == 10
            && covers;
        s.check(ok, || {
            (
                format!("kappa {{{kappa}}}"),
                "6 elements, zero sum, identity iff odd, 10-element complement".into(),
                format!("{} sum {{{}}} complement {}", show_set(set.iter()), set.sum(), complement.len()),
            )
        });
    }
    s.finish()
}

pub fn suite_end0() -> SuiteResult {
    let mut s = Suite::new("end0");
    let nonzero: Vec<_> = TwoTorsionPoint::all()
        .into_iter()
        .filter(|a| !a.is_identity())
        .collect();
    for kappa in ThetaCharacteristic::all() {
        let mut sums = end0_pair_sums(kappa);
        sums.sort();
        s.check(sums == nonzero, || (format!("kappa {{{kappa}}}"), show_set(&nonzero), show_set(&sums)));
    }
    s.finish()
}

pub fn suite_pair_law() -> SuiteResult {
    let mut s = Suite::new("pair-law");
    let chars = ThetaCharacteristic::all();
    for (i, &k1) in chars.iter().enumerate() {
        for &k2 in &chars[i + 1..] {
            let a = s_set(k1);
            let b = s_set(k2);
            let common: Vec<_> = a.iter().filter(|&x| b.contains(x)).collect();
            let ok = match pfaffian_intersection(k1, k2) {
                Ok((g, d)) => {
                    common == [g, d] && k1.twist(g).twist(d) == k2
                }
                Err(_) => false,
            };
            s.check(ok, || (format!("({{{k1}}}, {{{k2}}})"), "|S∩S'| = 2 and κγδ = κ'".into(), show_set(&common)));
        }
    }
    s.finish()
}

pub fn suite_translation() -> SuiteResult {
    let mut s = Suite::new("translation");
    for kappa in ThetaCharacteristic::all() {
        let base = s_set(kappa);
        for sigma in TwoTorsionPoint::all() {
            let moved = s_set(kappa.twist(sigma)).elements;
            let mut shifted: Vec<_> = base.iter().map(|a| a + sigma).collect();
            shifted.sort();
            s.check(moved == shifted, || (format!("({{{kappa}}}, {{{sigma}}})"), show_set(&shifted), show_set(&moved)));
        }
    }
    s.finish()
}

fn is_subgroup(h: &[TwoTorsionPoint]) -> bool {
    h.contains(&TwoTorsionPoint::IDENTITY)
        && h.iter().all(|&a| h.iter().all(|&b| h.contains(&(a + b))))
}

pub fn suite_klein() -> SuiteResult {
    let mut s = Suite::new("klein");
    for kappa in ThetaCharacteristic::all().into_iter().filter(|k| !k.is_odd()) {
        let ok = match klein_subgroups(kappa) {
            Ok((h, hc)) => {
                let mut union: Vec<_> = h
                    .iter()
                    .chain(&hc)
                    .copied()
                    .filter(|a| !a.is_identity())
                    .collect();
                union.sort();
                union.dedup();
                let meet: Vec<_> = h.iter().filter(|a| hc.contains(a)).collect();
                h.len() == 4
                    && hc.len() == 4
                    && is_subgroup(&h)
                    && is_subgroup(&hc)
                    && union == s_set(kappa).elements
                    && meet == [&TwoTorsionPoint::IDENTITY]
            }
            Err(_) => false,
        };
        s.check(ok, || (format!("kappa {{{kappa}}}"), "two Klein groups covering S(κ)".into(), format!("{:?}", klein_subgroups(kappa))));
    }
    s.finish()
}

pub fn suite_phi_direction() -> SuiteResult {
    let mut s = Suite::new("phi-direction");
    let nonzero: BTreeSet<_> = TwoTorsionPoint::all()
        .into_iter()
        .filter(|a| !a.is_identity())
        .collect();
    for kappa in ThetaCharacteristic::all() {
        let map = phi_direction_map(kappa);
        let image: BTreeSet<_> = map.values().copied().collect();
        let consistent = map.iter().all(|(&k2, &beta)| kappa.twist(beta) == k2);
        let ok = map.len() == 15 && !map.contains_key(&kappa) && image == nonzero && consistent;
        s.check(ok, || (format!("kappa {{{kappa}}}"), "15 distinct nonzero directions".into(), show_set(&image)));
    }
    s.finish()
}

// ---------------------------------------------------------------------------
// verlinde

fn envelope() -> Vec<VerlindeQuery> {
    let mut out = Vec::new();
    for r in ENVELOPE_RANKS {
        for n in ENVELOPE_LEVELS {
            for g in ENVELOPE_GENERA {
                out.push(VerlindeQuery::new(r, n, g).expect("valid envelope query"));
            }
        }
    }
    out
}

fn value_of(q: VerlindeQuery, opts: &EvalOptions) -> Result<VerlindeResult, String> {
    verlinde::verlinde_number_with(q, opts).map_err(|e| e.to_string())
}

fn show_query(q: &VerlindeQuery) -> String {
    format!("(r={}, n={}, g={})", q.rank, q.level, q.genus)
}

pub fn suite_verlinde_table(report: &Result<DegreeReport, String>) -> SuiteResult {
    let mut s = Suite::new("verlinde-table");
    let golden = tables::parse_table(tables::GOLDEN_P_TABLE, tables::P_HEADER).unwrap_or_default();
    for (n, expected) in &golden {
        let actual = report.as_ref().ok().and_then(|r| {
            r.p_values
                .iter()
                .find(|lv| i64::from(lv.n) == *n)
                .map(|lv| BigInt::from(lv.value.clone()))
        });
        s.check(actual.as_ref() == Some(expected), || {
            (format!("(r=4, n={n}, g=2)"), expected.to_string(), format!("{actual:?}"))
        });
    }
    s.check(golden.len() == 8, || ("reference table".into(), "8 rows".into(), golden.len().to_string()));
    s.finish()
}

pub fn suite_verlinde_genus1() -> SuiteResult {
    let mut s = Suite::new("verlinde-genus1");
    for r in ENVELOPE_RANKS {
        for n in ENVELOPE_LEVELS {
            let q = VerlindeQuery::new(r, n, 1).unwrap();
            let expected = binomial((n + r - 1) as u64, (r - 1) as u64);
            let actual = value_of(q, &EvalOptions::default()).map(|v| v.value);
            s.check(actual.as_ref() == Ok(&expected), || (show_query(&q), expected.to_string(), format!("{actual:?}")));
        }
    }
    s.finish()
}

pub fn suite_verlinde_level0() -> SuiteResult {
    let mut s = Suite::new("verlinde-level0");
    for r in ENVELOPE_RANKS {
        for g in ENVELOPE_GENERA {
            let q = VerlindeQuery::new(r, 0, g).unwrap();
            let actual = value_of(q, &EvalOptions::default()).map(|v| v.value);
            s.check(actual.as_ref() == Ok(&BigUint::one()), || (show_query(&q), "1".into(), format!("{actual:?}")));
        }
    }
    s.finish()
}

pub fn suite_verlinde_sanity() -> SuiteResult {
    let mut s = Suite::new("verlinde-sanity");
    let q = VerlindeQuery::new(2, 1, 2).unwrap();
    let actual = value_of(q, &EvalOptions::default()).map(|v| v.value);
    s.check(actual.as_ref() == Ok(&BigUint::from(4u32)), || (show_query(&q), "4".into(), format!("{actual:?}")));
    s.finish()
}

pub fn suite_verlinde_integrality() -> SuiteResult {
    let mut s = Suite::new("verlinde-integrality");
    for q in envelope() {
        let res = value_of(q, &EvalOptions::default());
        let ok = matches!(&res, Ok(v) if v.error_bound < CERTIFICATION_BOUND);
        s.check(ok, || (show_query(&q), format!("bound < {CERTIFICATION_BOUND:e}"), format!("{res:?}")));
    }
    s.finish()
}

pub fn suite_verlinde_monotone(report: &Result<DegreeReport, String>) -> SuiteResult {
    let mut s = Suite::new("verlinde-monotone");
    let values: Vec<BigUint> = report
        .as_ref()
        .map(|r| r.p_values.iter().map(|lv| lv.value.clone()).collect())
        .unwrap_or_default();
    for n in 1..8usize {
        let pair = (values.get(n - 1), values.get(n));
        let ok = matches!(pair, (Some(a), Some(b)) if a < b);
        s.check(ok, || (format!("r=4, g=2, n={n}->{}", n + 1), "strictly increasing".into(), format!("{pair:?}")));
    }
    s.finish()
}

pub fn suite_verlinde_determinism() -> SuiteResult {
    let mut s = Suite::new("verlinde-determinism");
    for q in envelope() {
        let runs: Vec<_> = DETERMINISM_WORKERS
            .iter()
            .map(|&w| value_of(q, &EvalOptions::default().with_workers(w)))
            .collect();
        let ok = runs.iter().all(|r| r.is_ok() && r == &runs[0]);
        s.check(ok, || (format!("{} workers {DETERMINISM_WORKERS:?}", show_query(&q)), "identical results".into(), format!("{runs:?}")));
    }
    s.finish()
}

// ---------------------------------------------------------------------------
// hilbert

pub fn suite_hilbert_coefficients(report: &Result<DegreeReport, String>) -> SuiteResult {
    let mut s = Suite::new("hilbert-coefficients");
    let golden = tables::parse_table(tables::GOLDEN_ALPHA_TABLE, tables::ALPHA_HEADER).unwrap_or_default();
    let alpha: Vec<BigInt> = report
        .as_ref()
        .map(|r| r.coefficients.alpha.clone())
        .unwrap_or_default();
    for k in 0..=15usize {
        let expected = golden
            .iter()
            .find(|(kk, _)| *kk == k as i64)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(BigInt::zero);
        let actual = alpha.get(k);
        s.check(actual == Some(&expected), || (format!("k={k}"), expected.to_string(), format!("{actual:?}")));
    }
    s.finish()
}

pub fn suite_hilbert_roundtrip(report: &Result<DegreeReport, String>) -> SuiteResult {
    let mut s = Suite::new("hilbert-roundtrip");
    let Ok(r) = report else {
        s.check(false, || ("pipeline".into(), "success".into(), format!("{report:?}")));
        return s.finish();
    };
    let positive: Vec<BigInt> = r.p_values.iter().map(|lv| BigInt::from(lv.value.clone())).collect();
    match hilbert::assemble_input(&positive, r.shape.offset, r.shape.dimension) {
        Ok(input) => {
            for (n, v) in input.points() {
                let got = r.coefficients.evaluate_int(n);
                let want = BigRational::from_integer(v.clone());
                s.check(got == want, || (format!("n={n}"), want.to_string(), got.to_string()));
            }
        }
        Err(e) => s.check(false, || ("assemble".into(), "valid input".into(), e.to_string())),
    }
    s.finish()
}

pub fn suite_hilbert_basis() -> SuiteResult {
    let mut s = Suite::new("hilbert-basis");
    let offset = pipeline::HilbertShape::for_rank(pipeline::SUPPORTED_RANK).offset as i64;
    for k in 0..=15usize {
        for j in 0..=k as i64 {
            let x = BigRational::from_integer(BigInt::from(j - offset));
            let v = basis_value(k, &x, offset as usize);
            let expected = if j == k as i64 { BigRational::one() } else { BigRational::zero() };
            s.check(v == expected, || (format!("Q_{k}({})", j - offset), expected.to_string(), v.to_string()));
        }
    }
    s.finish()
}

/// The `D`-th forward difference of `P` over `D + 2` consecutive large
/// integers equals `c_top` (so `c_top / D!` is the leading coefficient), and
/// the `(D+1)`-th difference vanishes (so the degree is at most `D`).
pub fn suite_hilbert_leading(report: &Result<DegreeReport, String>) -> SuiteResult {
    let mut s = Suite::new("hilbert-leading");
    let Ok(r) = report else {
        s.check(false, || ("pipeline".into(), "success".into(), format!("{report:?}")));
        return s.finish();
    };
    let d = r.shape.dimension;
    let start = 1000i64;
    let mut row: Vec<BigRational> = (0..d as i64 + 2)
        .map(|i| r.coefficients.evaluate_int(start + i))
        .collect();
    for _ in 0..d {
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let top = BigRational::from_integer(r.coefficients.c_top.clone());
    s.check(row[0] == top && row[1] == top, || (format!("Δ^{d} P at {start}"), top.to_string(), format!("{row:?}")));
    let next = &row[1] - &row[0];
    s.check(next.is_zero(), || (format!("Δ^{} P at {start}", d + 1), "0".into(), next.to_string()));
    s.finish()
}

pub fn suite_degree(report: &Result<DegreeReport, String>) -> SuiteResult {
    let mut s = Suite::new("degree");
    let actual = report.as_ref().map(|r| (r.degree.clone(), r.base_locus_count));
    s.check(actual == Ok((BigInt::from(30), 16)), || ("rank 4".into(), "deg 30 with base locus 16".into(), format!("{actual:?}")));
    s.finish()
}

pub fn suite_golden_csv(report: &Result<DegreeReport, String>) -> SuiteResult {
    let mut s = Suite::new("golden-csv");
    let p = report.as_ref().map(|r| tables::p_table_csv(&r.p_values));
    s.check(p.as_deref() == Ok(tables::GOLDEN_P_TABLE), || ("P table".into(), tables::GOLDEN_P_TABLE.into(), format!("{p:?}")));
    let a = report.as_ref().map(|r| tables::alpha_table_csv(&r.coefficients));
    s.check(a.as_deref() == Ok(tables::GOLDEN_ALPHA_TABLE), || ("alpha table".into(), tables::GOLDEN_ALPHA_TABLE.into(), format!("{a:?}")));
    s.finish()
}

// ---------------------------------------------------------------------------

/// Runs every suite and assembles the report in a fixed order.
pub fn run_all() -> VerificationReport {
    let report = pipeline::degree_pipeline(pipeline::SUPPORTED_RANK).map_err(|e| e.to_string());
    let report = &report;
    let suites = thread::scope(|scope| {
        let mut handles = Vec::new();
        macro_rules! spawn {
            ($e:expr) => {
                handles.push(scope.spawn(move || $e))
            };
        }
        spawn!(suite_enumeration());
        spawn!(suite_group_law());
        spawn!(suite_weil_pairing());
        spawn!(suite_torsor());
        spawn!(suite_quadratic_form());
        spawn!(suite_s_set());
        spawn!(suite_end0());
        spawn!(suite_pair_law());
        spawn!(suite_translation());
        spawn!(suite_klein());
        spawn!(suite_phi_direction());
        spawn!(suite_verlinde_table(report));
        spawn!(suite_verlinde_genus1());
        spawn!(suite_verlinde_level0());
        spawn!(suite_verlinde_sanity());
        spawn!(suite_verlinde_integrality());
        spawn!(suite_verlinde_monotone(report));
        spawn!(suite_verlinde_determinism());
        spawn!(suite_hilbert_coefficients(report));
        spawn!(suite_hilbert_roundtrip(report));
        spawn!(suite_hilbert_basis());
        spawn!(suite_hilbert_leading(report));
        spawn!(suite_degree(report));
        spawn!(suite_golden_csv(report));
        handles
            .into_iter()
            .map(|h| h.join().expect("suite panicked"))
            .collect()
    });
    VerificationReport::from_suites(suites)
}
