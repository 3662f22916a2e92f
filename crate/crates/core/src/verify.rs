//! Cross-validation of the enumeration methods against each other and
//! against the closed-form tables.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::counts::{self, CountTable};
use crate::enumerate::{
    assert_same_braces, closure_oracle, gfe_search, structured_enumerate, EnumerationResult,
    SearchLimits,
};
use crate::error::{ErrorKind, Result};
use crate::groups::{Family, GroupCtx};
use crate::holomorph::DEFAULT_MAX_HOL_ORDER;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub p: u64,
    pub q: u64,
    pub checks: Vec<Check>,
}

impl Report {
    fn push(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status,
            detail: detail.into(),
        });
    }

    /// Record `r` as a pass, a skip (resource gate) or a failure.
    fn record<T>(
        &mut self,
        name: String,
        r: Result<T>,
        ok: impl FnOnce(&T) -> String,
    ) -> Option<T> {
        match r {
            Ok(v) => {
                self.push(name, Status::Pass, ok(&v));
                Some(v)
            }
            Err(e) if e.kind() == ErrorKind::ResourceLimit => {
                self.push(name, Status::Skipped, e.to_string());
                None
            }
            Err(e) => {
                self.push(name, Status::Fail, e.to_string());
                None
            }
        }
    }

    fn compare<T: PartialEq + fmt::Debug>(&mut self, name: String, found: T, expected: T) {
        if found == expected {
            self.push(name, Status::Pass, format!("{found:?}"));
        } else {
            self.push(
                name,
                Status::Fail,
                format!("found {found:?}, expected {expected:?}"),
            );
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            writeln!(f, "[{tag}] {}: {}", c.name, c.detail)?;
        }
        write!(
            f,
            "{} passed, {} failed, {} skipped",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        )
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub oracle_limit: usize,
    pub search: SearchLimits,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            oracle_limit: DEFAULT_MAX_HOL_ORDER,
            search: SearchLimits::default(),
        }
    }
}

fn type_counts(r: &EnumerationResult) -> BTreeMap<&'static str, u64> {
    r.counts()
        .into_iter()
        .map(|(t, c)| (t.name(), c as u64))
        .collect()
}

fn expected_counts(table: &CountTable, g: Family) -> BTreeMap<&'static str, u64> {
    table
        .families
        .iter()
        .map(|&gamma| (gamma.iso_type().name(), table.e_prime(gamma, g)))
        .filter(|&(_, c)| c > 0)
        .collect()
}

fn class_lists(r: &EnumerationResult) -> BTreeMap<&'static str, Vec<(u64, u64)>> {
    r.counts()
        .into_iter()
        .map(|(t, _)| {
            let cl = r
                .classes_of(t)
                .into_iter()
                .map(|(c, l)| (c as u64, l as u64));
            (t.name(), cl.collect())
        })
        .collect()
}

fn expected_classes(table: &CountTable, g: Family) -> BTreeMap<&'static str, Vec<(u64, u64)>> {
    table
        .families
        .iter()
        .map(|&gamma| (gamma.iso_type().name(), table.classes(gamma, g)))
        .filter(|(_, c)| !c.is_empty())
        .collect()
}

/// Enumerate every family in `families` by all methods that fit, checking
/// each result against `table`. Returns the computed `|Aut|` per family.
fn verify_families(
    report: &mut Report,
    table: &CountTable,
    opts: VerifyOptions,
    structured: bool,
) -> BTreeMap<Family, u64> {
    let mut aut_sizes = BTreeMap::new();
    for &family in &table.families {
        let name = family.name();
        let Some(ctx) = report.record(
            format!("{name}: automorphism group"),
            GroupCtx::new(family, table.p, table.q),
            |c| format!("|Aut(G)| = {}", c.aut.len()),
        ) else {
            continue;
        };
        aut_sizes.insert(family, ctx.aut.len() as u64);

        let search = report.record(
            format!("{name}: gfe-search"),
            gfe_search(&ctx, opts.search),
            |r| format!("{} braces", r.len()),
        );
        let base = if structured {
            report.record(
                format!("{name}: structured"),
                structured_enumerate(&ctx),
                |r| format!("{} braces", r.len()),
            )
        } else {
            None
        };
        if let (Some(s), Some(b)) = (&search, &base) {
            report.record(
                format!("{name}: gfe-search = structured"),
                assert_same_braces(s, b),
                |_| "identical brace sets".into(),
            );
        }
        let Some(reference) = base.or(search) else {
            continue;
        };
        let oracle = report.record(
            format!("{name}: closure-oracle"),
            closure_oracle(&ctx, opts.oracle_limit, Some(reference.len())),
            |r| format!("{} braces", r.len()),
        );
        if let Some(o) = oracle {
            report.record(
                format!("{name}: closure-oracle = {}", reference.method),
                assert_same_braces(&o, &reference),
                |_| "identical brace sets".into(),
            );
        }
        report.compare(
            format!("{name}: counts by circle type"),
            type_counts(&reference),
            expected_counts(table, family),
        );
        report.compare(
            format!("{name}: Aut(G)-classes"),
            class_lists(&reference),
            expected_classes(table, family),
        );
    }
    aut_sizes
}

/// The scaling identity between the two count tables, with `|Aut|` taken
/// from the computed automorphism groups.
fn verify_scaling(report: &mut Report, table: &CountTable, aut: &BTreeMap<Family, u64>) {
    for c in &table.cells {
        let (Some(&ag), Some(&ah)) = (aut.get(&c.gamma), aut.get(&c.g)) else {
            continue;
        };
        report.compare(
            format!(
                "scaling e = e' |Aut(Gamma)|/|Aut(G)| at ({}, {})",
                c.gamma.name(),
                c.g.name()
            ),
            counts::scale_by_aut(c.e_prime, ag, ah),
            Some(c.e),
        );
    }
}

/// Full cross-validation for the groups of order `p^2 q`.
pub fn verify(p: u64, q: u64, opts: VerifyOptions) -> Result<Report> {
    let table = counts::count_table(p, q)?;
    let mut report = Report {
        p,
        q,
        checks: Vec::new(),
    };
    let aut = verify_families(&mut report, &table, opts, true);
    verify_scaling(&mut report, &table, &aut);
    for &gamma in &table.families {
        let row: u64 = table.families.iter().map(|&g| table.e(gamma, g)).sum();
        report.compare(
            format!("{}: total Hopf-Galois structures", gamma.name()),
            table.total(gamma),
            row,
        );
    }
    Ok(report)
}

/// Cross-validation for the groups of order `pq`, `p > q`.
pub fn verify_pq(p: u64, q: u64, opts: VerifyOptions) -> Result<Report> {
    let table = counts::pq_tables(p, q)?;
    let mut report = Report {
        p,
        q,
        checks: Vec::new(),
    };
    let aut = verify_families(&mut report, &table, opts, false);
    verify_scaling(&mut report, &table, &aut);
    Ok(report)
}
