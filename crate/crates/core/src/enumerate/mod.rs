//! Three independent ways to list every skew brace on a group: explicit
//! constructions, a constraint-propagation search over gamma functions,
//! and a closure search for regular subgroups of the holomorph.

mod export;
mod oracle;
mod orbits;
mod search;
mod structured;

pub use export::{summary, to_jsonl, RecordJson, Summary};
pub use oracle::closure_oracle;
pub use orbits::{aut_orbits, Orbit};
pub use search::{gfe_search, SearchLimits};
pub use structured::structured_enumerate;

use std::fmt;

use serde::Serialize;

use crate::brace::{brace_from_gamma, GammaFunction, SkewBraceRecord};
use crate::error::{Error, Result};
use crate::groups::{Family, GroupCtx, GroupSpec, IsoType};
use crate::holomorph::DEFAULT_MAX_HOL_ORDER;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    #[serde(rename = "structured")]
    Structured,
    #[serde(rename = "gfe-search")]
    GfeSearch,
    #[serde(rename = "closure-oracle")]
    ClosureOracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Structured => "structured",
            Method::GfeSearch => "gfe-search",
            Method::ClosureOracle => "closure-oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// All skew braces on one group found by one method, sorted by gamma table.
#[derive(Debug, Clone)]
pub struct EnumerationResult {
    pub spec: GroupSpec,
    pub method: Method,
    pub braces: Vec<SkewBraceRecord>,
    pub orbits: Vec<Orbit>,
}

impl EnumerationResult {
    /// Sort and deduplicate `records`, then partition them into orbits.
    pub fn new(ctx: &GroupCtx, method: Method, mut records: Vec<SkewBraceRecord>) -> Result<Self> {
        records.sort_by(|x, y| x.gamma.cmp(&y.gamma));
        records.dedup_by(|x, y| x.gamma == y.gamma);
        let orbits = aut_orbits(ctx, &records)?;
        for o in &orbits {
            for &m in &o.members {
                records[m].orbit_id = o.id;
            }
        }
        Ok(EnumerationResult {
            spec: *ctx.spec(),
            method,
            braces: records,
            orbits,
        })
    }

    pub fn from_gammas(ctx: &GroupCtx, method: Method, gammas: Vec<GammaFunction>) -> Result<Self> {
        let records = gammas
            .into_iter()
            .map(|g| brace_from_gamma(ctx, g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ctx, method, records)
    }

    pub fn len(&self) -> usize {
        self.braces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.braces.is_empty()
    }

    /// Number of braces of each circle type, in type order.
    pub fn counts(&self) -> Vec<(IsoType, usize)> {
        let mut out: Vec<(IsoType, usize)> = Vec::new();
        for r in &self.braces {
            match out.iter_mut().find(|(t, _)| *t == r.circle_type) {
                Some((_, c)) => *c += 1,
                None => out.push((r.circle_type, 1)),
            }
        }
        out.sort_by_key(|(t, _)| t.rank());
        out
    }

    pub fn count_of(&self, t: IsoType) -> usize {
        self.braces.iter().filter(|r| r.circle_type == t).count()
    }

    /// `(count, length)` of orbits with circle type `t`, sorted by length.
    pub fn classes_of(&self, t: IsoType) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for o in self.orbits.iter().filter(|o| o.circle_type == t) {
            match out.iter_mut().find(|(_, l)| *l == o.length) {
                Some((c, _)) => *c += 1,
                None => out.push((1, o.length)),
            }
        }
        out.sort_by_key(|&(_, l)| l);
        out
    }

    pub fn gammas(&self) -> Vec<&GammaFunction> {
        self.braces.iter().map(|r| &r.gamma).collect()
    }
}

/// Check that two results contain exactly the same gamma functions.
pub fn assert_same_braces(x: &EnumerationResult, y: &EnumerationResult) -> Result<()> {
    if x.gammas() == y.gammas() {
        return Ok(());
    }
    let only_x = x
        .gammas()
        .iter()
        .filter(|g| !y.gammas().contains(g))
        .count();
    let only_y = y
        .gammas()
        .iter()
        .filter(|g| !x.gammas().contains(g))
        .count();
    Err(Error::MethodDisagreement {
        family: x.spec.family.name().to_string(),
        detail: format!(
            "{} finds {} braces ({only_x} not found by {}), {} finds {} ({only_y} not found by {})",
            x.method,
            x.len(),
            y.method,
            y.method,
            y.len(),
            x.method
        ),
    })
}

/// Search and oracle results for one order-`pq` family.
#[derive(Debug, Clone)]
pub struct PqRun {
    pub family: Family,
    pub search: EnumerationResult,
    pub oracle: EnumerationResult,
}

/// Run the gamma-function search and the holomorph oracle on both groups
/// of order `pq` (only the cyclic one when `q` does not divide `p - 1`),
/// requiring them to agree.
pub fn pq_enumerate(p: u64, q: u64) -> Result<Vec<PqRun>> {
    pq_enumerate_with(p, q, DEFAULT_MAX_HOL_ORDER)
}

pub fn pq_enumerate_with(p: u64, q: u64, max_hol_order: usize) -> Result<Vec<PqRun>> {
    let mut out = Vec::new();
    for family in Family::PQ {
        let ctx = match GroupCtx::new(family, p, q) {
            Ok(c) => c,
            Err(Error::FamilyNotApplicable { .. }) => continue,
            Err(e) => return Err(e),
        };
        let search = gfe_search(&ctx, SearchLimits::default())?;
        let oracle = closure_oracle(&ctx, max_hol_order, Some(search.len()))?;
        assert_same_braces(&search, &oracle)?;
        out.push(PqRun {
            family,
            search,
            oracle,
        });
    }
    Ok(out)
}
