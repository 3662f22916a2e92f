use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// A multiplication table over `0..n`, as read from or written to JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyTable {
    pub n: usize,
    pub table: Vec<Vec<u32>>,
}

impl CayleyTable {
    pub fn flat(&self) -> Result<Vec<u32>> {
        if self.table.len() != self.n || self.table.iter().any(|r| r.len() != self.n) {
            return Err(Error::MalformedTable(format!(
                "expected a {0} x {0} matrix",
                self.n
            )));
        }
        Ok(self.table.concat())
    }
}

/// Invariants that separate the groups of order `p^2 q` and `pq` with
/// cyclic Sylow `p`-subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    pub p: u64,
    pub q: u64,
    pub abelian: bool,
    pub cyclic: bool,
    pub has_element_of_order_p2: bool,
    pub center_size: usize,
    pub normal_sylow_p: bool,
    pub normal_sylow_q: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsoType {
    Type1,
    Type2,
    Type3,
    Type4,
    PqCyclic,
    PqMetacyclic,
    Other(Fingerprint),
}

impl IsoType {
    pub fn name(&self) -> &'static str {
        match self {
            IsoType::Type1 => "type1",
            IsoType::Type2 => "type2",
            IsoType::Type3 => "type3",
            IsoType::Type4 => "type4",
            IsoType::PqCyclic => "pq-cyclic",
            IsoType::PqMetacyclic => "pq-metacyclic",
            IsoType::Other(_) => "other",
        }
    }

    /// 1..=4 for the `p^2 q` types.
    pub fn type_number(&self) -> Option<u8> {
        match self {
            IsoType::Type1 => Some(1),
            IsoType::Type2 => Some(2),
            IsoType::Type3 => Some(3),
            IsoType::Type4 => Some(4),
            _ => None,
        }
    }

    pub fn is_other(&self) -> bool {
        matches!(self, IsoType::Other(_))
    }

    /// Sort key: types in numeric order, then the order-`pq` types, then other.
    pub fn rank(&self) -> u8 {
        match self {
            IsoType::Type1 => 0,
            IsoType::Type2 => 1,
            IsoType::Type3 => 2,
            IsoType::Type4 => 3,
            IsoType::PqCyclic => 4,
            IsoType::PqMetacyclic => 5,
            IsoType::Other(_) => 6,
        }
    }
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoType::Other(fp) => write!(f, "other {}", serde_json::to_string(fp).unwrap()),
            t => f.write_str(t.name()),
        }
    }
}

impl Serialize for IsoType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `(p, q, is_p2q)` for orders `p^2 q` and `pq` (with `p > q` in the latter).
fn split_order(n: usize) -> Option<(u64, u64, bool)> {
    match factor(n as u64).as_slice() {
        [(r, 2), (s, 1)] => Some((*r, *s, true)),
        [(s, 1), (r, 2)] => Some((*r, *s, true)),
        [(s, 1), (r, 1)] => Some((*r, *s, false)),
        _ => None,
    }
}

/// Check that `t` is the table of a group, returning its identity.
fn validate(n: usize, t: &[u32]) -> Result<u32> {
    if n == 0 {
        return Err(Error::MalformedTable("empty table".into()));
    }
    if t.iter().any(|&x| x as usize >= n) {
        return Err(Error::MalformedTable("entry out of range".into()));
    }
    let mut seen = vec![0usize; n];
    for r in 0..n {
        for c in 0..n {
            let x = t[r * n + c] as usize;
            if seen[x] == r + 1 {
                return Err(Error::MalformedTable(format!("row {r} repeats an entry")));
            }
            seen[x] = r + 1;
        }
    }
    let mut seen = vec![0usize; n];
    for c in 0..n {
        for r in 0..n {
            let x = t[r * n + c] as usize;
            if seen[x] == c + 1 {
                return Err(Error::MalformedTable(format!(
                    "column {c} repeats an entry"
                )));
            }
            seen[x] = c + 1;
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|x| t[e * n + x] as usize == x && t[x * n + e] as usize == x))
        .ok_or_else(|| Error::MalformedTable("no identity element".into()))?;

    // Light's test: elements a with (xa)y = x(ay) for all x, y are closed
    // under products, so checking a generating set suffices.
    let m = |x: u32, y: u32| t[x as usize * n + y as usize];
    let mut inside = vec![false; n];
    inside[e] = true;
    let mut members = vec![e as u32];
    let mut gens: Vec<u32> = Vec::new();
    while members.len() < n {
        let g = (0..n as u32).find(|&x| !inside[x as usize]).unwrap();
        gens.push(g);
        inside[g as usize] = true;
        members.push(g);
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for j in 0..=i {
                let y = members[j];
                for z in [m(x, y), m(y, x)] {
                    if !inside[z as usize] {
                        inside[z as usize] = true;
                        members.push(z);
                    }
                }
            }
            i += 1;
        }
    }
    for &a in &gens {
        for x in 0..n as u32 {
            let xa = m(x, a);
            for y in 0..n as u32 {
                if m(xa, y) != m(x, m(a, y)) {
                    return Err(Error::MalformedTable(format!(
                        "not associative: ({x} {a}) {y} != {x} ({a} {y})"
                    )));
                }
            }
        }
    }
    Ok(e as u32)
}

fn is_power_of(mut x: u64, p: u64) -> bool {
    while x % p == 0 {
        x /= p;
    }
    x == 1
}

pub(crate) fn fingerprint_flat(n: usize, t: &[u32]) -> Result<Fingerprint> {
    let (p, q, p2q) = split_order(n)
        .ok_or_else(|| Error::MalformedTable(format!("order {n} is neither p^2 q nor pq")))?;
    let e = validate(n, t)?;
    let m = |x: u32, y: u32| t[x as usize * n + y as usize];
    let orders: Vec<u64> = (0..n as u32)
        .map(|x| {
            let mut k = 1;
            let mut y = x;
            while y != e {
                y = m(y, x);
                k += 1;
            }
            k
        })
        .collect();
    let commutes = |x: u32| (0..n as u32).all(|y| m(x, y) == m(y, x));
    let center_size = (0..n as u32).filter(|&x| commutes(x)).count();
    let sylow_p_order = if p2q { p * p } else { p };
    let p_elems = orders.iter().filter(|&&o| is_power_of(o, p)).count() as u64;
    let q_elems = orders.iter().filter(|&&o| is_power_of(o, q)).count() as u64;
    Ok(Fingerprint {
        order: n,
        p,
        q,
        abelian: center_size == n,
        cyclic: orders.contains(&(n as u64)),
        has_element_of_order_p2: orders.contains(&(p * p)),
        center_size,
        normal_sylow_p: p_elems == sylow_p_order,
        normal_sylow_q: q_elems == q,
    })
}

pub(crate) fn classify_fingerprint(fp: Fingerprint) -> IsoType {
    let p2q = fp.order as u64 == fp.p * fp.p * fp.q;
    if !p2q {
        return if fp.cyclic {
            IsoType::PqCyclic
        } else if !fp.abelian {
            IsoType::PqMetacyclic
        } else {
            IsoType::Other(fp)
        };
    }
    if !fp.has_element_of_order_p2 {
        return IsoType::Other(fp);
    }
    if fp.abelian {
        return IsoType::Type1;
    }
    match (fp.center_size as u64, fp.normal_sylow_p, fp.normal_sylow_q) {
        (c, _, true) if c == fp.p => IsoType::Type2,
        (1, _, true) => IsoType::Type3,
        (1, true, false) => IsoType::Type4,
        _ => IsoType::Other(fp),
    }
}

/// Validate a Cayley table and compute its invariants.
pub fn fingerprint(table: &CayleyTable) -> Result<Fingerprint> {
    fingerprint_flat(table.n, &table.flat()?)
}

/// Identify a group of order `p^2 q` or `pq` from its multiplication table.
pub fn classify_iso_type(table: &CayleyTable) -> Result<IsoType> {
    Ok(classify_fingerprint(fingerprint(table)?))
}
