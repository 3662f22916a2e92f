//! Closed-form counts of skew braces (regular subgroups of holomorphs) and
//! Hopf-Galois structures for groups of order `p^2 q` with cyclic Sylow
//! `p`-subgroups, and for groups of order `pq`.
//!
//! Rows are indexed by the circle group `Gamma`, columns by the additive
//! group `G`. `e_prime(Gamma, G)` counts regular subgroups of `Hol(G)`
//! isomorphic to `Gamma`; `e(Gamma, G)` counts Hopf-Galois structures of
//! type `G` on a Galois extension with group `Gamma`.

use serde::Serialize;

use crate::arith::{self, DivisibilityProfile, PDivides};
use crate::error::{Error, Result};
use crate::groups::Family;

/// `|Aut|` of each family.
pub fn aut_order(family: Family, p: u64, q: u64) -> u64 {
    match family {
        Family::Type1 => p * (p - 1) * (q - 1),
        Family::Type2 => p * q * (q - 1),
        Family::Type3 => q * (q - 1),
        Family::Type4 => p * p * p * (p - 1),
        Family::PqCyclic => (p - 1) * (q - 1),
        Family::PqMetacyclic => p * (p - 1),
    }
}

/// `|Aut(Gamma)| / |Aut(G)| * e_prime`, if the quotient is an integer.
pub fn scale_by_aut(e_prime: u64, aut_gamma: u64, aut_g: u64) -> Option<u64> {
    let num = e_prime * aut_gamma;
    (num % aut_g == 0).then_some(num / aut_g)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub gamma: Family,
    pub g: Family,
    pub e_prime: u64,
    pub e: u64,
    /// `(number of classes, class length)`, by increasing length.
    pub classes: Vec<(u64, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub p: u64,
    pub q: u64,
    pub families: Vec<Family>,
    /// Row-major over `families x families`.
    pub cells: Vec<Cell>,
    /// Total number of Hopf-Galois structures for each `Gamma`.
    pub totals: Vec<(Family, u64)>,
}

impl CountTable {
    pub fn cell(&self, gamma: Family, g: Family) -> Option<&Cell> {
        self.cells.iter().find(|c| c.gamma == gamma && c.g == g)
    }

    pub fn e_prime(&self, gamma: Family, g: Family) -> u64 {
        self.cell(gamma, g).map_or(0, |c| c.e_prime)
    }

    pub fn e(&self, gamma: Family, g: Family) -> u64 {
        self.cell(gamma, g).map_or(0, |c| c.e)
    }

    pub fn classes(&self, gamma: Family, g: Family) -> Vec<(u64, u64)> {
        self.cell(gamma, g)
            .map_or_else(Vec::new, |c| c.classes.clone())
    }

    pub fn total(&self, gamma: Family) -> u64 {
        self.totals
            .iter()
            .find(|(f, _)| *f == gamma)
            .map_or(0, |&(_, t)| t)
    }
}

fn p2q_families(prof: &DivisibilityProfile) -> Vec<Family> {
    prof.types
        .iter()
        .map(|&t| Family::from_type_number(t).expect("types are 1..=4"))
        .collect()
}

fn p2q_e_prime(p: u64, q: u64, gamma: u8, g: u8) -> u64 {
    match (gamma, g) {
        (1, 1) => p,
        (1, 2) => 2 * p * q,
        (1, 3) => 2 * q,
        (2, 1) => p * (p - 1),
        (2, 2) => 2 * p * (p * q - 2 * q + 1),
        (2, 3) => 2 * q * (p - 1),
        (3, 1) => p * p * (p - 1),
        (3, 2) => 2 * p * p * q * (p - 1),
        (3, 3) => 2 * (p * p * q - p * q - q + 1),
        (1, 4) => 2 * p * p * p,
        (4, 1) => q - 1,
        (4, 4) => 2 * (p * p * q - 2 * p * p + 1),
        _ => 0,
    }
}

fn p2q_e(p: u64, q: u64, gamma: u8, g: u8) -> u64 {
    match (gamma, g) {
        (1, 1) => p,
        (1, 2) | (1, 3) => 2 * p * (p - 1),
        (2, 1) | (3, 1) => p * q,
        (2, 2) => 2 * p * (p * q - 2 * q + 1),
        (2, 3) | (3, 2) => 2 * p * q * (p - 1),
        (3, 3) => 2 * (p * p * q - p * q - q + 1),
        (1, 4) => 2 * p * (q - 1),
        (4, 1) => p * p,
        (4, 4) => 2 * (p * p * q - 2 * p * p + 1),
        _ => 0,
    }
}

fn p2q_classes(p: u64, q: u64, gamma: u8, g: u8) -> Vec<(u64, u64)> {
    let v = match (g, gamma) {
        (1, 1) => vec![(1, 1), (1, p - 1)],
        (1, 2) => vec![(p, p - 1)],
        (1, 3) => vec![(p, p * (p - 1))],
        (1, 4) => vec![(1, q - 1)],
        (2, 1) => vec![(2 * p, q)],
        (2, 2) => vec![(2 * p, 1), (2 * p * (p - 2), q)],
        (2, 3) => vec![(2 * p * (p - 1), q * p)],
        (3, 1) => vec![(2, q)],
        (3, 2) => vec![(2 * (p - 1), q)],
        (3, 3) => vec![(2, 1), (2 * (p * p - p - 1), q)],
        (4, 1) => vec![(2, p * p), (2, p * p * (p - 1))],
        (4, 4) => vec![(2, 1), (2 * (q - 2), p * p)],
        _ => vec![],
    };
    normalize(v)
}

/// Drop empty entries, merge equal lengths, sort by length.
fn normalize(v: Vec<(u64, u64)>) -> Vec<(u64, u64)> {
    let mut out: Vec<(u64, u64)> = Vec::new();
    for (c, l) in v.into_iter().filter(|&(c, _)| c > 0) {
        match out.iter_mut().find(|(_, l2)| *l2 == l) {
            Some((c2, _)) => *c2 += c,
            None => out.push((c, l)),
        }
    }
    out.sort_by_key(|&(_, l)| l);
    out
}

/// Total Hopf-Galois structures on a `Gamma`-extension, `Gamma` of type `gamma`.
fn p2q_total(prof: &DivisibilityProfile, gamma: u8) -> u64 {
    let (p, q) = (prof.p, prof.q);
    if !prof.types.contains(&gamma) {
        return 0;
    }
    match gamma {
        1 if prof.q_divides_p_minus_1 => p * (2 * q - 1),
        1 => match prof.p_divides_q_minus_1 {
            PDivides::No => p,
            PDivides::Exactly => p * (2 * p - 1),
            PDivides::Squared => p * (4 * p - 3),
        },
        2 => match prof.p_divides_q_minus_1 {
            PDivides::Squared => p * (4 * p * q - 5 * q + 2),
            _ => p * (2 * p * q - 3 * q + 2),
        },
        3 => 4 * p * p * q - 3 * p * q - 2 * q + 2,
        4 => 2 * p * p * q - 3 * p * p + 2,
        _ => 0,
    }
}

/// `e'(Gamma, G)` for type numbers `gamma`, `g`; 0 unless both types exist
/// for `(p, q)` (in particular for types with non-cyclic Sylow `p`).
pub fn e_prime(p: u64, q: u64, gamma: u8, g: u8) -> Result<u64> {
    let prof = arith::divisibility_profile(p, q)?;
    let ok = prof.types.contains(&gamma) && prof.types.contains(&g);
    Ok(if ok { p2q_e_prime(p, q, gamma, g) } else { 0 })
}

pub fn e(p: u64, q: u64, gamma: u8, g: u8) -> Result<u64> {
    let prof = arith::divisibility_profile(p, q)?;
    let ok = prof.types.contains(&gamma) && prof.types.contains(&g);
    Ok(if ok { p2q_e(p, q, gamma, g) } else { 0 })
}

pub fn classes(p: u64, q: u64, gamma: u8, g: u8) -> Result<Vec<(u64, u64)>> {
    let prof = arith::divisibility_profile(p, q)?;
    let ok = prof.types.contains(&gamma) && prof.types.contains(&g);
    Ok(if ok {
        p2q_classes(p, q, gamma, g)
    } else {
        vec![]
    })
}

pub fn totals(p: u64, q: u64, gamma: u8) -> Result<u64> {
    Ok(p2q_total(&arith::divisibility_profile(p, q)?, gamma))
}

/// All cells for the applicable `p^2 q` types.
pub fn count_table(p: u64, q: u64) -> Result<CountTable> {
    let prof = arith::divisibility_profile(p, q)?;
    let families = p2q_families(&prof);
    let mut cells = Vec::new();
    for &gf in &families {
        for &g in &families {
            let (a, b) = (gf.type_number().unwrap(), g.type_number().unwrap());
            cells.push(Cell {
                gamma: gf,
                g,
                e_prime: p2q_e_prime(p, q, a, b),
                e: p2q_e(p, q, a, b),
                classes: p2q_classes(p, q, a, b),
            });
        }
    }
    let totals = families
        .iter()
        .map(|&f| (f, p2q_total(&prof, f.type_number().unwrap())))
        .collect();
    Ok(CountTable {
        p,
        q,
        families,
        cells,
        totals,
    })
}

/// The same tables for the groups of order `pq`, `p > q`.
pub fn pq_tables(p: u64, q: u64) -> Result<CountTable> {
    for x in [p, q] {
        if !arith::is_prime(x) {
            return Err(Error::NotPrime(x));
        }
    }
    if p <= q {
        return Err(Error::PqOrdering { p, q });
    }
    let meta = (p - 1) % q == 0;
    let families = if meta {
        vec![Family::PqCyclic, Family::PqMetacyclic]
    } else {
        vec![Family::PqCyclic]
    };
    use Family::{PqCyclic as C, PqMetacyclic as M};
    let mut cells = Vec::new();
    for &gf in &families {
        for &g in &families {
            let (e_prime, e, classes) = match (gf, g) {
                (C, C) => (1, 1, vec![(1, 1)]),
                (C, M) => (2 * p, 2 * (q - 1), vec![(2, p)]),
                (M, C) => (q - 1, p, vec![(1, q - 1)]),
                _ => (
                    2 * (p * q - 2 * p + 1),
                    2 * (p * q - 2 * p + 1),
                    vec![(2, 1), (2 * (q - 2), p)],
                ),
            };
            cells.push(Cell {
                gamma: gf,
                g,
                e_prime,
                e,
                classes: normalize(classes),
            });
        }
    }
    let totals = families
        .iter()
        .map(|&gf| {
            let t = cells.iter().filter(|c| c.gamma == gf).map(|c| c.e).sum();
            (gf, t)
        })
        .collect();
    Ok(CountTable {
        p,
        q,
        families,
        cells,
        totals,
    })
}

/// The `gamma_type` / `g_type` label of a family in the rendered tables.
pub fn type_label(f: Family) -> String {
    match f.type_number() {
        Some(t) => t.to_string(),
        None => match f {
            Family::PqCyclic => "cyclic".into(),
            _ => "metacyclic".into(),
        },
    }
}

fn classes_label(classes: &[(u64, u64)]) -> String {
    classes
        .iter()
        .map(|(c, l)| format!("{c}×{l}"))
        .collect::<Vec<_>>()
        .join(";")
}

#[derive(Serialize)]
struct Row {
    gamma_type: String,
    g_type: String,
    e_prime: u64,
    e: u64,
    classes: String,
}

fn rows(t: &CountTable) -> Vec<Row> {
    t.cells
        .iter()
        .map(|c| Row {
            gamma_type: type_label(c.gamma),
            g_type: type_label(c.g),
            e_prime: c.e_prime,
            e: c.e,
            classes: classes_label(&c.classes),
        })
        .collect()
}

/// CSV with header `gamma_type,g_type,e_prime,e,classes`.
pub fn render_csv(t: &CountTable) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows(t) {
        w.serialize(r).expect("in-memory csv write");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
}

pub fn render_json(t: &CountTable) -> String {
    #[derive(Serialize)]
    struct Total {
        gamma_type: String,
        total: u64,
    }
    #[derive(Serialize)]
    struct Doc {
        p: u64,
        q: u64,
        cells: Vec<Row>,
        totals: Vec<Total>,
    }
    let doc = Doc {
        p: t.p,
        q: t.q,
        cells: rows(t),
        totals: t
            .totals
            .iter()
            .map(|&(f, total)| Total {
                gamma_type: type_label(f),
                total,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("tables serialize")
}
