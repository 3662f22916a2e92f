//! Metacyclic groups `<a, b | a^c = b^n = 1, a^-1 b a = b^t>` of order `p^2 q`
//! and `pq`, stored with elements in the normal form `a^v b^u`.

mod aut;
pub(crate) mod classify;

pub use aut::AutGroup;
pub use classify::{classify_iso_type, fingerprint, CayleyTable, Fingerprint, IsoType};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{self, PDivides};
use crate::error::{Error, Result};

/// Element indices are `v * n_mod + u` for `a^v b^u`.
pub type Idx = u32;

/// Above this order the multiplication table is not materialized.
const MUL_TABLE_LIMIT: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `C_{p^2} x C_q`.
    #[serde(rename = "P2Q-Type1")]
    Type1,
    /// `C_{p^2}` acting on `C_q` with kernel of order `p`.
    #[serde(rename = "P2Q-Type2")]
    Type2,
    /// `C_{p^2}` acting faithfully on `C_q`.
    #[serde(rename = "P2Q-Type3")]
    Type3,
    /// `C_q` acting faithfully on `C_{p^2}`.
    #[serde(rename = "P2Q-Type4")]
    Type4,
    #[serde(rename = "PQ-Cyclic")]
    PqCyclic,
    #[serde(rename = "PQ-Metacyclic")]
    PqMetacyclic,
}

impl Family {
    pub const P2Q: [Family; 4] = [Family::Type1, Family::Type2, Family::Type3, Family::Type4];
    pub const PQ: [Family; 2] = [Family::PqCyclic, Family::PqMetacyclic];

    pub fn name(self) -> &'static str {
        match self {
            Family::Type1 => "P2Q-Type1",
            Family::Type2 => "P2Q-Type2",
            Family::Type3 => "P2Q-Type3",
            Family::Type4 => "P2Q-Type4",
            Family::PqCyclic => "PQ-Cyclic",
            Family::PqMetacyclic => "PQ-Metacyclic",
        }
    }

    pub fn is_p2q(self) -> bool {
        matches!(
            self,
            Family::Type1 | Family::Type2 | Family::Type3 | Family::Type4
        )
    }

    /// 1..=4 for the `p^2 q` families.
    pub fn type_number(self) -> Option<u8> {
        match self {
            Family::Type1 => Some(1),
            Family::Type2 => Some(2),
            Family::Type3 => Some(3),
            Family::Type4 => Some(4),
            _ => None,
        }
    }

    pub fn from_type_number(t: u8) -> Option<Family> {
        Family::P2Q.get((t as usize).checked_sub(1)?).copied()
    }

    pub fn iso_type(self) -> IsoType {
        match self {
            Family::Type1 => IsoType::Type1,
            Family::Type2 => IsoType::Type2,
            Family::Type3 => IsoType::Type3,
            Family::Type4 => IsoType::Type4,
            Family::PqCyclic => IsoType::PqCyclic,
            Family::PqMetacyclic => IsoType::PqMetacyclic,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let lower = s.to_ascii_lowercase();
        let f = match lower.as_str() {
            "1" | "type1" | "p2q-type1" => Family::Type1,
            "2" | "type2" | "p2q-type2" => Family::Type2,
            "3" | "type3" | "p2q-type3" => Family::Type3,
            "4" | "type4" | "p2q-type4" => Family::Type4,
            "cyclic" | "pq-cyclic" => Family::PqCyclic,
            "metacyclic" | "pq-metacyclic" => Family::PqMetacyclic,
            _ => return Err(format!("unknown group family {s:?}")),
        };
        Ok(f)
    }
}

/// A concrete group: `a` of order `c_mod`, `b` of order `n_mod`, `a^-1 b a = b^t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: Family,
    pub p: u64,
    pub q: u64,
    pub n_mod: u64,
    pub c_mod: u64,
    pub t: u64,
}

impl GroupSpec {
    pub fn order(&self) -> usize {
        (self.n_mod * self.c_mod) as usize
    }

    /// `|Aut(G)|` as predicted from the structure of each family.
    pub fn expected_aut_order(&self) -> usize {
        let (p, q) = (self.p as usize, self.q as usize);
        match self.family {
            Family::Type1 => p * (p - 1) * (q - 1),
            Family::Type2 => p * q * (q - 1),
            Family::Type3 => q * (q - 1),
            Family::Type4 => p * p * p * (p - 1),
            Family::PqCyclic => (p - 1) * (q - 1),
            Family::PqMetacyclic => p * (p - 1),
        }
    }
}

fn not_applicable(family: Family, p: u64, q: u64, reason: &'static str) -> Error {
    Error::FamilyNotApplicable {
        family: family.name(),
        p,
        q,
        reason,
    }
}

/// Build the presentation of `family` for the primes `p`, `q`, choosing the
/// smallest admissible action exponent.
pub fn make_group(family: Family, p: u64, q: u64) -> Result<GroupSpec> {
    if family.is_p2q() {
        let prof = arith::divisibility_profile(p, q)?;
        let (n_mod, c_mod, order, m) = match family {
            Family::Type1 => (q, p * p, 1, q),
            Family::Type2 => {
                if prof.p_divides_q_minus_1 == PDivides::No {
                    return Err(not_applicable(family, p, q, "p does not divide q - 1"));
                }
                (q, p * p, p, q)
            }
            Family::Type3 => {
                if prof.p_divides_q_minus_1 != PDivides::Squared {
                    return Err(not_applicable(family, p, q, "p^2 does not divide q - 1"));
                }
                (q, p * p, p * p, q)
            }
            Family::Type4 => {
                if !prof.q_divides_p_minus_1 {
                    return Err(not_applicable(family, p, q, "q does not divide p - 1"));
                }
                (p * p, q, q, p * p)
            }
            _ => unreachable!(),
        };
        let t = arith::canonical_action_exponent(order, m)?;
        return Ok(GroupSpec {
            family,
            p,
            q,
            n_mod,
            c_mod,
            t,
        });
    }

    for x in [p, q] {
        if !arith::is_prime(x) {
            return Err(Error::NotPrime(x));
        }
    }
    if p <= q {
        return Err(Error::PqOrdering { p, q });
    }
    if p * q > 10_000 {
        return Err(Error::GroupTooLarge(p * q));
    }
    let t = match family {
        Family::PqCyclic => 1,
        _ => {
            if (p - 1) % q != 0 {
                return Err(not_applicable(family, p, q, "q does not divide p - 1"));
            }
            arith::canonical_action_exponent(q, p)?
        }
    };
    Ok(GroupSpec {
        family,
        p,
        q,
        n_mod: p,
        c_mod: q,
        t,
    })
}

/// An element `a^v b^u` in normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem {
    pub v: u64,
    pub u: u64,
}

/// Multiply two normal forms directly from the presentation.
pub fn mul_elems(spec: &GroupSpec, x: Elem, y: Elem) -> Elem {
    let tw = arith::mod_pow(spec.t as i64, y.v, spec.n_mod);
    Elem {
        v: (x.v + y.v) % spec.c_mod,
        u: (x.u * tw + y.u) % spec.n_mod,
    }
}

/// A group together with lookup tables for its operations.
#[derive(Debug, Clone)]
pub struct Group {
    spec: GroupSpec,
    n: usize,
    nm: usize,
    cm: usize,
    /// `t^v mod n_mod` for each `v`.
    tpow: Vec<u32>,
    table: Option<Vec<Idx>>,
    inv: Vec<Idx>,
    order: Vec<u32>,
}

impl Group {
    pub fn new(spec: GroupSpec) -> Self {
        let n = spec.order();
        let nm = spec.n_mod as usize;
        let cm = spec.c_mod as usize;
        let tpow = (0..cm)
            .map(|v| arith::mod_pow(spec.t as i64, v as u64, spec.n_mod) as u32)
            .collect();
        let mut g = Group {
            spec,
            n,
            nm,
            cm,
            tpow,
            table: None,
            inv: Vec::new(),
            order: Vec::new(),
        };
        if n <= MUL_TABLE_LIMIT {
            let mut table = Vec::with_capacity(n * n);
            for x in 0..n as Idx {
                for y in 0..n as Idx {
                    table.push(g.mul_formula(x, y));
                }
            }
            g.table = Some(table);
        }
        g.inv = (0..n as Idx)
            .map(|x| {
                let Elem { v, u } = g.elem(x);
                // (a^v b^u)^-1 = b^-u a^-v = a^-v b^(-u t^-v)
                let vi = (cm - v as usize) % cm;
                let ui = (nm - u as usize * g.tpow[vi] as usize % nm) % nm;
                g.idx(Elem {
                    v: vi as u64,
                    u: ui as u64,
                })
            })
            .collect();
        g.order = (0..n as Idx)
            .map(|x| {
                let mut k = 1;
                let mut y = x;
                while y != 0 {
                    y = g.mul(y, x);
                    k += 1;
                }
                k
            })
            .collect();
        g
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> Idx {
        0
    }

    /// The generator `a` of order `c_mod`.
    pub fn a(&self) -> Idx {
        self.nm as Idx
    }

    /// The normal generator `b` of order `n_mod`.
    pub fn b(&self) -> Idx {
        1
    }

    pub fn idx(&self, e: Elem) -> Idx {
        (e.v as usize % self.cm * self.nm + e.u as usize % self.nm) as Idx
    }

    pub fn elem(&self, x: Idx) -> Elem {
        let x = x as usize;
        Elem {
            v: (x / self.nm) as u64,
            u: (x % self.nm) as u64,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Idx> {
        0..self.n as Idx
    }

    fn mul_formula(&self, x: Idx, y: Idx) -> Idx {
        let (x, y) = (x as usize, y as usize);
        let (v1, u1) = (x / self.nm, x % self.nm);
        let (v2, u2) = (y / self.nm, y % self.nm);
        let v = (v1 + v2) % self.cm;
        let u = (u1 * self.tpow[v2] as usize + u2) % self.nm;
        (v * self.nm + u) as Idx
    }

    #[inline]
    pub fn mul(&self, x: Idx, y: Idx) -> Idx {
        match &self.table {
            Some(t) => t[x as usize * self.n + y as usize],
            None => self.mul_formula(x, y),
        }
    }

    #[inline]
    pub fn inv(&self, x: Idx) -> Idx {
        self.inv[x as usize]
    }

    #[inline]
    pub fn elem_order(&self, x: Idx) -> u32 {
        self.order[x as usize]
    }

    pub fn pow(&self, x: Idx, k: u64) -> Idx {
        let k = k % self.order[x as usize] as u64;
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    /// `g^-1 x g`.
    pub fn conj(&self, x: Idx, g: Idx) -> Idx {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// Powers `x^0, x^1, ...` up to the order of `x`.
    pub fn cyclic(&self, x: Idx) -> Vec<Idx> {
        let mut out = vec![0];
        let mut y = x;
        while y != 0 {
            out.push(y);
            y = self.mul(y, x);
        }
        out
    }

    /// The subgroup generated by `gens`, sorted.
    pub fn subgroup(&self, gens: &[Idx]) -> Vec<Idx> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    pub fn cayley_table(&self) -> CayleyTable {
        let table = (0..self.n as Idx)
            .map(|x| (0..self.n as Idx).map(|y| self.mul(x, y)).collect())
            .collect();
        CayleyTable { n: self.n, table }
    }
}

/// A group with its automorphism group.
#[derive(Debug, Clone)]
pub struct GroupCtx {
    pub group: Group,
    pub aut: AutGroup,
}

impl GroupCtx {
    pub fn new(family: Family, p: u64, q: u64) -> Result<Self> {
        Self::from_spec(make_group(family, p, q)?)
    }

    pub fn from_spec(spec: GroupSpec) -> Result<Self> {
        let group = Group::new(spec);
        let aut = AutGroup::compute(&group)?;
        Ok(GroupCtx { group, aut })
    }

    pub fn spec(&self) -> &GroupSpec {
        self.group.spec()
    }

    pub fn n(&self) -> usize {
        self.group.order()
    }

    /// Image `x^alpha`.
    #[inline]
    pub fn apply(&self, alpha: u32, x: Idx) -> Idx {
        self.aut.apply(alpha, x)
    }

    /// The inner automorphism `x -> g^-1 x g`.
    #[inline]
    pub fn iota(&self, g: Idx) -> u32 {
        self.aut.iota(g)
    }

    /// The automorphism of order `p` used by the type 2 and type 4
    /// constructions.
    ///
    /// Type 2: fixes `b` and sends `a_gen` to `a_gen^(1+p)`. Type 4: fixes
    /// `a_gen` and sends `b` to `b^(1+p)`.
    pub fn psi_for(&self, a_gen: Idx) -> Result<u32> {
        let g = &self.group;
        let p = self.spec().p;
        let b = g.b();
        let (x, y, ix, iy) = match self.spec().family {
            Family::Type2 => (a_gen, b, g.pow(a_gen, 1 + p), b),
            Family::Type4 => (a_gen, b, a_gen, g.pow(b, 1 + p)),
            _ => {
                return Err(Error::NotInAutGroup(
                    "psi is defined for types 2 and 4".into(),
                ))
            }
        };
        self.aut
            .find_by_images(g, (x, y), (ix, iy))
            .ok_or_else(|| Error::NotInAutGroup(format!("psi for generator {a_gen}")))
    }
}
