//! Named verification suites over the whole library.
//!
//! Each suite reruns a family of mathematical checks and reports every
//! outcome as data: a failed identity produces a failing CheckResult, not a
//! panic, so callers can render or serialize the full picture. The same
//! suites back the command-line `verify` command and the acceptance tests.
//!
//! Suites and their default ranges:
//!   lengths   group orders (A to d=6, B to d=4) and BFS length agreement
//!   table     the eight (shape, J) rows for type B, d = 3
//!   hooks     standard-tableau counts against hook-formula values
//!   bijection row-standard tableaux onto D_J, with the order identity
//!   kl        bar-invariance, unitriangularity, Bruhat support, m p = 1
//!   action    quadratic and braid relations on every standard basis vector
//!   specht    Specht ranks equal standard counts; action equivariance
//!   crt       one Bruhat orientation covers all nonzero c-entries
//!   discovery the convention sweep ends with at least one surviving profile
//!   controls  corrupted inputs are caught, not silently certified

use crate::cob::{
    self, check_unitriangular, discover_conventions, ConventionProfile, Orientation,
};
use crate::error::Result;
use crate::heckemod::{kl_basis, KLSide, ModuleVector, ParabolicContext};
use crate::laurent::LaurentPoly;
use crate::shapes::{
    all_compositions, all_partitions, coset_rep_bijection, enumerate_row_standard,
    enumerate_standard, Composition, MapVariant,
};
use crate::specht::{c_matrix, specht_action, specht_rank, specht_vector};
use crate::weyl::{self, Family};
use serde::Serialize;
use std::time::Instant;

/// Narrowing knobs shared by all suites: restrict to one family or lower
/// the default maximum size.
#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteOptions {
    pub family: Option<Family>,
    pub max_d: Option<usize>,
}

impl SuiteOptions {
    fn runs(&self, family: Family) -> bool {
        self.family.map(|f| f == family).unwrap_or(true)
    }

    fn cap(&self, default: usize) -> usize {
        self.max_d.unwrap_or(default)
    }

    /// Golden comparisons only apply to the full default run.
    fn is_default(&self) -> bool {
        self.family.is_none() && self.max_d.is_none()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub pass: bool,
    pub elapsed_ms: u128,
    pub checks: Vec<CheckResult>,
}

impl CheckReport {
    fn new(suite: &str) -> Self {
        CheckReport {
            suite: suite.into(),
            pass: true,
            elapsed_ms: 0,
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.pass &= pass;
        self.checks.push(CheckResult {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// One line per check plus a verdict line.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {}: {}\n",
                if c.pass { "ok" } else { "FAIL" },
                c.name,
                c.detail
            ));
        }
        out.push_str(&format!(
            "suite {}: {} ({} checks, {} ms)\n",
            self.suite,
            if self.pass { "PASS" } else { "FAIL" },
            self.checks.len(),
            self.elapsed_ms
        ));
        out
    }
}

pub const SUITES: [&str; 10] = [
    "lengths",
    "table",
    "hooks",
    "bijection",
    "kl",
    "action",
    "specht",
    "crt",
    "discovery",
    "controls",
];

/// Runs one suite by name.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<CheckReport> {
    let start = Instant::now();
    let mut report = match name {
        "lengths" => suite_lengths(opts)?,
        "table" => suite_table()?,
        "hooks" => suite_hooks()?,
        "bijection" => suite_bijection(opts)?,
        "kl" => suite_kl(opts)?,
        "action" => suite_action(opts)?,
        "specht" => suite_specht(opts)?,
        "crt" => suite_crt(opts)?,
        "discovery" => suite_discovery(opts)?,
        "controls" => suite_controls()?,
        other => {
            return Err(crate::error::Error::Parse(format!(
                "unknown suite {other:?}; expected one of {SUITES:?}"
            )))
        }
    };
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

/// Runs every suite in order.
pub fn run_all(opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    SUITES.iter().map(|s| run_suite(s, opts)).collect()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn suite_lengths(opts: &SuiteOptions) -> Result<CheckReport> {
    let mut report = CheckReport::new("lengths");
    if opts.runs(Family::A) {
        for d in 1..=opts.cap(6) {
            let table = weyl::group_table(Family::A, d)?;
            let expected = factorial(d);
            report.check(
                format!("order A d={d}"),
                table.order() == expected,
                format!("|W| = {} expected {}", table.order(), expected),
            );
        }
    }
    if opts.runs(Family::B) {
        for d in 1..=opts.cap(4).min(4) {
            let table = weyl::group_table(Family::B, d)?;
            let expected = (1 << d) * factorial(d);
            report.check(
                format!("order B d={d}"),
                table.order() == expected,
                format!("|W| = {} expected {}", table.order(), expected),
            );
        }
        for d in 1..=opts.cap(3).min(3) {
            let table = weyl::group_table(Family::B, d)?;
            let dist = bfs_lengths(&table, Family::B, d);
            let agree = (0..table.order()).all(|k| dist[k] == Some(table.length_of(k)));
            report.check(
                format!("bfs B d={d}"),
                agree,
                format!("closed form equals BFS distance on {} elements", table.order()),
            );
        }
    }
    Ok(report)
}

/// Cayley-graph distance from the identity, right multiplication edges.
fn bfs_lengths(table: &weyl::GroupTable, family: Family, d: usize) -> Vec<Option<usize>> {
    let n = table.order();
    let mut dist = vec![None; n];
    let e = table
        .index(&weyl::SignedPerm::identity(family, d))
        .expect("identity present");
    dist[e] = Some(0);
    let mut queue = std::collections::VecDeque::from([e]);
    while let Some(k) = queue.pop_front() {
        let dk = dist[k].unwrap();
        for i in family.gen_indices(d) {
            let next = table.right_mul_idx(k, i);
            if dist[next].is_none() {
                dist[next] = Some(dk + 1);
                queue.push_back(next);
            }
        }
    }
    dist
}

fn suite_table() -> Result<CheckReport> {
    let mut report = CheckReport::new("table");
    let expected: &[(&[usize], &[usize])] = &[
        (&[7], &[0, 1, 2]),
        (&[1, 5, 1], &[0, 1]),
        (&[2, 3, 2], &[0, 2]),
        (&[3, 1, 3], &[1, 2]),
        (&[1, 1, 3, 1, 1], &[0]),
        (&[1, 2, 1, 2, 1], &[1]),
        (&[2, 1, 1, 1, 2], &[2]),
        (&[1, 1, 1, 1, 1, 1, 1], &[]),
    ];
    let all = all_compositions(Family::B, 3);
    report.check(
        "row count",
        all.len() == expected.len(),
        format!("{} shapes, expected {}", all.len(), expected.len()),
    );
    for (parts, j) in expected {
        let found = all.iter().find(|c| c.parts() == *parts);
        match found {
            None => report.check(
                format!("shape {parts:?}"),
                false,
                "missing from enumeration".to_string(),
            ),
            Some(c) => report.check(
                format!("shape {parts:?}"),
                c.to_j() == *j,
                format!("J = {:?} expected {:?}", c.to_j(), j),
            ),
        }
    }
    // Odd window sizes partition the shapes; nothing extra may appear.
    for c in &all {
        report.check(
            format!("expected {:?}", c.parts()),
            expected.iter().any(|(p, _)| c.parts() == *p),
            "present in the reference list".to_string(),
        );
    }
    Ok(report)
}

fn suite_hooks() -> Result<CheckReport> {
    let mut report = CheckReport::new("hooks");
    let two_rows = [(2usize, 2usize), (3, 5), (4, 14), (5, 42)];
    for (m, expected) in two_rows {
        let shape = Composition::new(Family::A, vec![m, m])?;
        let n = enumerate_standard(&shape)?.len();
        report.check(
            format!("|Std(({m},{m}))|"),
            n == expected,
            format!("{n} expected {expected}"),
        );
    }
    let three_rows = [(1usize, 1usize), (2, 5), (3, 42)];
    for (m, expected) in three_rows {
        let shape = Composition::new(Family::A, vec![m, m, m])?;
        let n = enumerate_standard(&shape)?.len();
        report.check(
            format!("|Std(({m},{m},{m}))|"),
            n == expected,
            format!("{n} expected {expected}"),
        );
    }
    Ok(report)
}

fn suite_bijection(opts: &SuiteOptions) -> Result<CheckReport> {
    let mut report = CheckReport::new("bijection");
    let mut shapes = Vec::new();
    if opts.runs(Family::A) {
        for d in 1..=opts.cap(5) {
            shapes.extend(all_partitions(Family::A, d));
        }
    }
    if opts.runs(Family::B) {
        let d = opts.cap(3).min(4);
        shapes.extend(all_partitions(Family::B, d));
    }
    for shape in shapes {
        let pairs = coset_rep_bijection(&shape, MapVariant::InverseTop);
        match pairs {
            Err(e) => report.check(format!("bijection {shape}"), false, e.to_string()),
            Ok(pairs) => {
                let group = shape
                    .family()
                    .group_order(shape.d())
                    .expect("order fits usize");
                let identity = pairs.len() * shape.young_subgroup_order() == group;
                report.check(
                    format!("bijection {shape}"),
                    true,
                    format!("{} tableaux onto D_J", pairs.len()),
                );
                report.check(
                    format!("order identity {shape}"),
                    identity,
                    format!(
                        "{} * {} = {} expected {}",
                        pairs.len(),
                        shape.young_subgroup_order(),
                        pairs.len() * shape.young_subgroup_order(),
                        group
                    ),
                );
            }
        }
    }
    Ok(report)
}

fn subsets(indices: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &i in indices {
        let mut more = Vec::new();
        for s in &out {
            let mut t = s.clone();
            t.push(i);
            more.push(t);
        }
        out.extend(more);
    }
    out.sort();
    out
}

fn kl_ranges(opts: &SuiteOptions) -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    if opts.runs(Family::A) {
        for d in 1..=opts.cap(4) {
            out.push((Family::A, d));
        }
    }
    if opts.runs(Family::B) {
        for d in 1..=opts.cap(3) {
            out.push((Family::B, d));
        }
    }
    out
}

fn suite_kl(opts: &SuiteOptions) -> Result<CheckReport> {
    let mut report = CheckReport::new("kl");
    for (family, d) in kl_ranges(opts) {
        let indices: Vec<usize> = family.gen_indices(d).collect();
        for j in subsets(&indices) {
            let ctx = ParabolicContext::new(family, d, &j)?;
            for side in KLSide::ALL {
                let kl = kl_basis(&ctx, side).with_p();
                let n = kl.n();
                let label = format!("{family:?} d={d} J={j:?} {side:?}");
                let mut bar_ok = true;
                let mut tri_ok = true;
                let mut support_ok = true;
                let mut prod_ok = true;
                for w in 0..n {
                    let v = kl.kl_vector(w);
                    if &v.bar() != v {
                        bar_ok = false;
                    }
                    for x in 0..n {
                        let m = kl.m(x, w);
                        let p = kl.p(x, w);
                        if x == w {
                            if !m.is_one() || !p.is_one() {
                                tri_ok = false;
                            }
                        } else {
                            if !side.is_strict(&m) || !side.is_strict(&p) {
                                tri_ok = false;
                            }
                            if !ctx.rep_bruhat_leq(x, w) && !(m.is_zero() && p.is_zero()) {
                                support_ok = false;
                            }
                        }
                    }
                }
                for x in 0..n {
                    for w in 0..n {
                        let mut acc = LaurentPoly::zero();
                        for y in 0..n {
                            acc = &acc + &(&kl.m(x, y) * &kl.p(y, w));
                        }
                        let expected = if x == w {
                            LaurentPoly::one()
                        } else {
                            LaurentPoly::zero()
                        };
                        if acc != expected {
                            prod_ok = false;
                        }
                    }
                }
                report.check(format!("bar {label}"), bar_ok, format!("{n} KL vectors"));
                report.check(
                    format!("unitriangular {label}"),
                    tri_ok,
                    "diagonal 1, off-diagonal strictly one-sided".to_string(),
                );
                report.check(
                    format!("support {label}"),
                    support_ok,
                    "m and p vanish off the Bruhat cone".to_string(),
                );
                report.check(format!("m*p {label}"), prod_ok, "identity matrix".to_string());
            }
        }
    }
    Ok(report)
}

fn suite_action(opts: &SuiteOptions) -> Result<CheckReport> {
    let mut report = CheckReport::new("action");
    for (family, d) in kl_ranges(opts) {
        let indices: Vec<usize> = family.gen_indices(d).collect();
        for j in subsets(&indices) {
            let ctx = ParabolicContext::new(family, d, &j)?;
            let label = format!("{family:?} d={d} J={j:?}");
            let quad_coeff = &LaurentPoly::monomial(-1, 1) - &LaurentPoly::monomial(1, 1);
            let mut quadratic_ok = true;
            let mut braid_ok = true;
            for k in 0..ctx.num_reps() {
                let v = ModuleVector::standard(&ctx, k);
                for &i in &indices {
                    let once = v.act_generator(i)?;
                    let twice = once.act_generator(i)?;
                    let rhs = once.scale(&quad_coeff).add(&v)?;
                    if twice != rhs {
                        quadratic_ok = false;
                    }
                }
                for a in 0..indices.len() {
                    for b in (a + 1)..indices.len() {
                        let (i, l) = (indices[a], indices[b]);
                        let order = braid_order(family, i, l);
                        let lhs = braid_apply(&v, i, l, order)?;
                        let rhs = braid_apply(&v, l, i, order)?;
                        if lhs != rhs {
                            braid_ok = false;
                        }
                    }
                }
            }
            report.check(
                format!("quadratic {label}"),
                quadratic_ok,
                format!("{} basis vectors", ctx.num_reps()),
            );
            report.check(
                format!("braid {label}"),
                braid_ok,
                "all generator pairs".to_string(),
            );
        }
    }
    Ok(report)
}

fn braid_order(family: Family, i: usize, j: usize) -> usize {
    let (lo, hi) = (i.min(j), i.max(j));
    if hi - lo >= 2 {
        2
    } else if family == Family::B && lo == 0 {
        4
    } else {
        3
    }
}

fn braid_apply(v: &ModuleVector, first: usize, second: usize, order: usize) -> Result<ModuleVector> {
    let mut out = v.clone();
    for step in 0..order {
        let i = if step % 2 == 0 { first } else { second };
        out = out.act_generator(i)?;
    }
    Ok(out)
}

fn suite_specht(opts: &SuiteOptions) -> Result<CheckReport> {
    let mut report = CheckReport::new("specht");
    let rank_max = opts.cap(5);
    for d in 1..=rank_max {
        for shape in all_partitions(Family::A, d) {
            let std_count = enumerate_standard(&shape)?.len();
            let rank = specht_rank(&shape)?;
            report.check(
                format!("rank {shape}"),
                rank == std_count,
                format!("rank {rank}, |Std| {std_count}"),
            );
        }
    }
    let equi_max = opts.cap(4).min(4);
    for d in 1..=equi_max {
        for shape in all_partitions(Family::A, d) {
            let mut ok = true;
            let mut count = 0usize;
            for t in enumerate_row_standard(&shape)? {
                for i in shape.family().gen_indices(d) {
                    let s = weyl::generator(shape.family(), d, i)?;
                    let lhs = specht_action(&specht_vector(&t)?, &s)?;
                    let rhs = specht_vector(&t.act_on_letters(&s)?)?;
                    if lhs != rhs {
                        ok = false;
                    }
                    count += 1;
                }
            }
            report.check(
                format!("equivariance {shape}"),
                ok,
                format!("{count} tableau-generator pairs"),
            );
        }
    }
    Ok(report)
}

/// Which orientations hold for one family across the given shapes, plus the
/// unit-diagonal check.
fn crt_family(
    report: &mut CheckReport,
    family: Family,
    shapes: &[Composition],
) -> Result<Option<Orientation>> {
    let mut as_printed_ok = true;
    let mut reversed_ok = true;
    for shape in shapes {
        let cm = c_matrix(shape)?;
        as_printed_ok &=
            cob::crt_violations(&cm, MapVariant::InverseTop, Orientation::AsPrinted)?.is_empty();
        reversed_ok &=
            cob::crt_violations(&cm, MapVariant::InverseTop, Orientation::Reversed)?.is_empty();
        let mut diag_ok = true;
        for (c, t) in cm.cols().iter().enumerate() {
            let r = cm.row_of(&t.to_tabloid());
            if r.map(|r| cm.entry(r, c)) != Some(1) {
                diag_ok = false;
            }
        }
        report.check(
            format!("unit diagonal {shape}"),
            diag_ok,
            "c(T,T) = 1 for standard T".to_string(),
        );
    }
    let certified = match (as_printed_ok, reversed_ok) {
        (_, true) => Some(Orientation::Reversed),
        (true, false) => Some(Orientation::AsPrinted),
        (false, false) => None,
    };
    report.check(
        format!("orientation {family:?}"),
        certified.is_some(),
        format!(
            "as_printed={as_printed_ok} reversed={reversed_ok} over {} shapes",
            shapes.len()
        ),
    );
    Ok(certified)
}

fn suite_crt(opts: &SuiteOptions) -> Result<CheckReport> {
    let mut report = CheckReport::new("crt");
    let mut certified: Vec<(Family, Option<Orientation>)> = Vec::new();
    if opts.runs(Family::A) {
        let mut shapes = Vec::new();
        for d in 1..=opts.cap(5) {
            shapes.extend(all_partitions(Family::A, d));
        }
        certified.push((Family::A, crt_family(&mut report, Family::A, &shapes)?));
    }
    if opts.runs(Family::B) {
        let shapes = all_partitions(Family::B, opts.cap(3).min(4));
        certified.push((Family::B, crt_family(&mut report, Family::B, &shapes)?));
    }
    if opts.is_default() {
        let golden: serde_json::Value =
            serde_json::from_str(include_str!("../golden/crt_orientations.json"))
                .expect("golden parses");
        let computed = serde_json::json!(certified
            .iter()
            .map(|(f, o)| serde_json::json!({
                "family": f,
                "map_variant": MapVariant::InverseTop,
                "orientation": o,
            }))
            .collect::<Vec<_>>());
        report.check(
            "golden orientations",
            computed == golden,
            format!("computed {computed}"),
        );
    }
    Ok(report)
}

/// The default discovery batch: type A partitions through d = 4 and every
/// type B shape through d = 2.
pub fn discovery_instances(opts: &SuiteOptions) -> Vec<Composition> {
    let mut instances = Vec::new();
    if opts.runs(Family::A) {
        for d in 1..=opts.cap(4) {
            instances.extend(all_partitions(Family::A, d));
        }
    }
    if opts.runs(Family::B) {
        for d in 1..=opts.cap(2) {
            instances.extend(all_compositions(Family::B, d));
        }
    }
    instances
}

fn suite_discovery(opts: &SuiteOptions) -> Result<CheckReport> {
    let mut report = CheckReport::new("discovery");
    let instances = discovery_instances(opts);
    let discovery = discover_conventions(&instances)?;
    report.check(
        "instances",
        discovery.instances.len() == instances.len(),
        format!("{} instances evaluated", discovery.instances.len()),
    );
    report.check(
        "survivors",
        !discovery.survivors.is_empty(),
        format!(
            "{} of {} profiles pass every instance",
            discovery.survivors.len(),
            discovery.profiles.len()
        ),
    );
    for p in &discovery.preferred {
        report.check(format!("preferred {p}"), true, "passes all instances".to_string());
    }
    let rerun = discover_conventions(&instances)?;
    report.check(
        "deterministic",
        discovery.to_json() == rerun.to_json(),
        "identical report on rerun".to_string(),
    );
    if opts.is_default() {
        let golden: serde_json::Value =
            serde_json::from_str(include_str!("../golden/discovery_survivors.json"))
                .expect("golden parses");
        let computed = serde_json::json!({
            "survivors": discovery.survivors,
            "preferred": discovery.preferred,
        });
        report.check(
            "golden survivors",
            computed == golden,
            if computed == golden {
                "matches the stored profile set".to_string()
            } else {
                format!("computed {computed}")
            },
        );
    }
    Ok(report)
}

fn suite_controls() -> Result<CheckReport> {
    let mut report = CheckReport::new("controls");

    // Corrupting any single m-entry must be caught. The certified p-table
    // is a two-sided inverse, so corrupted-m times p differing from the
    // identity catches every possible single change; entries off the
    // Bruhat support are additionally caught by the support check.
    let ctx = ParabolicContext::new(Family::A, 3, &[1])?;
    let kl = kl_basis(&ctx, KLSide::Positive).with_p();
    let n = kl.n();
    let mut all_caught = true;
    for cx in 0..n {
        for cw in 0..n {
            let mut caught = false;
            for x in 0..n {
                for w in 0..n {
                    let mut acc = LaurentPoly::zero();
                    for y in 0..n {
                        let mut m = kl.m(x, y);
                        if (x, y) == (cx, cw) {
                            m = &m + &LaurentPoly::monomial(1, 1);
                        }
                        acc = &acc + &(&m * &kl.p(y, w));
                    }
                    let expected = if x == w {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    };
                    if acc != expected {
                        caught = true;
                    }
                }
            }
            if !caught {
                all_caught = false;
            }
        }
    }
    report.check(
        "corrupted KL entry",
        all_caught,
        format!("all {} single-entry corruptions break m*p = 1", n * n),
    );

    // The remaining controls run the certified profile on a shape with two
    // standard tableaux and tamper with its inputs one at a time.
    let shape = Composition::new(Family::A, vec![2, 1])?;
    let profile = ConventionProfile {
        kl_side: KLSide::Negative,
        map_variant: MapVariant::InverseTop,
        a_variant: cob::AVariant::PVersion,
        sign_mode: cob::SignMode::UpToSign,
        orientation: Orientation::Reversed,
        leading: cob::Leading::SupportExtreme,
    };
    let a = cob::a_matrix(&shape, profile)?;
    let cm = c_matrix(&shape)?;
    let honest = check_unitriangular(&a);
    let honest_crt = cob::crt_violations(&cm, profile.map_variant, profile.orientation)?;
    report.check(
        "honest pipeline passes",
        honest.pass && honest_crt.is_empty(),
        format!(
            "{} cert violations, {} map-order violations",
            honest.violations.len(),
            honest_crt.len()
        ),
    );

    // A column shuffle leaves the content-based extremes intact, so it is
    // the label-reading comparability check that must catch the mismatch.
    let shuffled = cm.with_rotated_columns();
    let shuffled_crt = cob::crt_violations(&shuffled, profile.map_variant, profile.orientation)?;
    report.check(
        "shuffled columns fail",
        !shuffled_crt.is_empty(),
        format!("{} map-order violations", shuffled_crt.len()),
    );

    // And the corrupted-diagonal control on the same profile.
    let corrupted = check_unitriangular(&a.with_corrupted_diagonal());
    report.check(
        "corrupted diagonal fails",
        !corrupted.pass,
        format!("{} violations", corrupted.violations.len()),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_is_runnable_when_narrowed() {
        // Small ranges; the full defaults run in the acceptance tests.
        let opts = SuiteOptions {
            family: Some(Family::A),
            max_d: Some(3),
        };
        for name in SUITES {
            let report = run_suite(name, &opts).unwrap();
            assert!(report.pass, "{name}:\n{}", report.summary());
            assert!(!report.checks.is_empty(), "{name} ran no checks");
        }
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("nonsense", &SuiteOptions::default()).is_err());
    }

    #[test]
    fn narrowed_type_b_suites() {
        let opts = SuiteOptions {
            family: Some(Family::B),
            max_d: Some(2),
        };
        for name in ["lengths", "bijection", "kl", "action", "crt", "discovery"] {
            let report = run_suite(name, &opts).unwrap();
            assert!(report.pass, "{name}:\n{}", report.summary());
        }
    }

    #[test]
    fn report_serializes_with_status() {
        let opts = SuiteOptions {
            family: Some(Family::A),
            max_d: Some(2),
        };
        let report = run_suite("hooks", &opts).unwrap();
        let json = report.to_json();
        assert_eq!(json["suite"], "hooks");
        assert_eq!(json["pass"], true);
        assert!(json["checks"].as_array().unwrap().len() >= 7);
        assert!(report.summary().contains("PASS"));
    }
}
