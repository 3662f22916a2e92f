use std::collections::BTreeMap;

use serde::Serialize;

use super::EnumerationResult;
use crate::groups::{Family, IsoType};

#[derive(Debug, Clone, Serialize)]
pub struct GroupJson {
    pub family: Family,
    pub p: u64,
    pub q: u64,
    pub t: u64,
}

/// One line of the JSON-lines export.
#[derive(Debug, Clone, Serialize)]
pub struct RecordJson<'a> {
    pub group: GroupJson,
    pub gamma: &'a [u32],
    pub circle_type: IsoType,
    pub kernel_size: usize,
    pub orbit_id: usize,
}

pub fn to_jsonl(result: &EnumerationResult) -> String {
    let s = &result.spec;
    let mut out = String::new();
    for r in &result.braces {
        let rec = RecordJson {
            group: GroupJson {
                family: s.family,
                p: s.p,
                q: s.q,
                t: s.t,
            },
            gamma: r.gamma.table(),
            circle_type: r.circle_type,
            kernel_size: r.kernel.len(),
            orbit_id: r.orbit_id,
        };
        out.push_str(&serde_json::to_string(&rec).expect("records serialize"));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitClass {
    pub length: usize,
    pub circle_type: IsoType,
    /// Number of orbits with this circle type and length.
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub family: Family,
    pub p: u64,
    pub q: u64,
    pub method: super::Method,
    pub total: usize,
    pub counts: BTreeMap<String, usize>,
    pub orbits: Vec<OrbitClass>,
}

pub fn summary(result: &EnumerationResult) -> Summary {
    let counts = result
        .counts()
        .into_iter()
        .map(|(t, c)| (t.name().to_string(), c))
        .collect();
    let mut types: Vec<IsoType> = result.counts().into_iter().map(|(t, _)| t).collect();
    types.dedup();
    let orbits = types
        .into_iter()
        .flat_map(|t| {
            result
                .classes_of(t)
                .into_iter()
                .map(move |(size, length)| OrbitClass {
                    length,
                    circle_type: t,
                    size,
                })
        })
        .collect();
    Summary {
        family: result.spec.family,
        p: result.spec.p,
        q: result.spec.q,
        method: result.method,
        total: result.len(),
        counts,
        orbits,
    }
}
