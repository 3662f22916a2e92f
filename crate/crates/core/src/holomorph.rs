//! The holomorph `Hol(G) = Aut(G) rho(G)` as permutations of `G`, and an
//! exhaustive search for its regular subgroups.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::groups::{GroupCtx, Idx};

pub const DEFAULT_MAX_HOL_ORDER: usize = 1200;

/// `(alpha, g)`, acting as `x -> x^alpha g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HolElement {
    pub alpha: u32,
    pub g: Idx,
}

impl HolElement {
    /// Position in the canonical order `alpha * |G| + g`.
    pub fn index(&self, ctx: &GroupCtx) -> u32 {
        self.alpha * ctx.n() as u32 + self.g
    }

    pub fn from_index(ctx: &GroupCtx, i: u32) -> Self {
        let n = ctx.n() as u32;
        HolElement {
            alpha: i / n,
            g: i % n,
        }
    }
}

pub fn hol_order(ctx: &GroupCtx) -> usize {
    ctx.aut.len() * ctx.n()
}

pub fn hol_identity(ctx: &GroupCtx) -> HolElement {
    HolElement {
        alpha: ctx.aut.identity(),
        g: 0,
    }
}

/// `(alpha, g)(beta, h) = (alpha beta, g^beta h)`.
pub fn hol_mul(ctx: &GroupCtx, x: HolElement, y: HolElement) -> HolElement {
    HolElement {
        alpha: ctx.aut.compose(x.alpha, y.alpha),
        g: ctx.group.mul(ctx.apply(y.alpha, x.g), y.g),
    }
}

pub fn hol_inv(ctx: &GroupCtx, x: HolElement) -> HolElement {
    let ai = ctx.aut.inverse(x.alpha);
    HolElement {
        alpha: ai,
        g: ctx.apply(ai, ctx.group.inv(x.g)),
    }
}

/// The image of `x` under the permutation `h`.
#[inline]
pub fn act(ctx: &GroupCtx, h: HolElement, x: Idx) -> Idx {
    ctx.group.mul(ctx.apply(h.alpha, x), h.g)
}

/// Right translation `x -> x g`.
pub fn rho(ctx: &GroupCtx, g: Idx) -> HolElement {
    HolElement {
        alpha: ctx.aut.identity(),
        g,
    }
}

/// Left translation `x -> g x`.
pub fn lambda_rep(ctx: &GroupCtx, g: Idx) -> HolElement {
    HolElement {
        alpha: ctx.iota(ctx.group.inv(g)),
        g,
    }
}

/// Conjugation by the inversion map `x -> x^-1`:
/// `(alpha, g) -> (alpha iota(g), g^-1)`.
pub fn conjugate_by_inv(ctx: &GroupCtx, h: HolElement) -> HolElement {
    HolElement {
        alpha: ctx.aut.compose(h.alpha, ctx.iota(h.g)),
        g: ctx.group.inv(h.g),
    }
}

/// Closed under products, of size `|G|`, and `h -> 1^h` bijective.
pub fn is_regular(ctx: &GroupCtx, members: &[HolElement]) -> bool {
    let n = ctx.n();
    if members.len() != n {
        return false;
    }
    let set: HashSet<HolElement> = members.iter().copied().collect();
    if set.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for h in members {
        let x = act(ctx, *h, 0) as usize;
        if hit[x] {
            return false;
        }
        hit[x] = true;
    }
    members
        .iter()
        .all(|&x| members.iter().all(|&y| set.contains(&hol_mul(ctx, x, y))))
}

/// True when every cycle of `h` on `G` has the same length, i.e. no
/// non-trivial power of `h` has a fixed point.
fn is_semiregular(ctx: &GroupCtx, h: HolElement, seen: &mut [u32], stamp: u32) -> bool {
    let n = ctx.n();
    let mut len = 0;
    for start in 0..n as Idx {
        if seen[start as usize] == stamp {
            continue;
        }
        let mut l = 0;
        let mut x = start;
        loop {
            seen[x as usize] = stamp;
            l += 1;
            x = act(ctx, h, x);
            if x == start {
                break;
            }
        }
        if len == 0 {
            len = l;
        } else if l != len {
            return false;
        }
    }
    true
}

/// A regular subgroup, as sorted Hol indices.
pub type SubgroupKey = Vec<u32>;

struct Searcher<'a> {
    ctx: &'a GroupCtx,
    n: usize,
    allowed: Vec<bool>,
    mark: Vec<u32>,
    stamp: u32,
    buf: Vec<u32>,
}

impl<'a> Searcher<'a> {
    fn mul_idx(&self, x: u32, y: u32) -> u32 {
        let n = self.n as u32;
        let (xa, xg) = (x / n, x % n);
        let (ya, yg) = (y / n, y % n);
        let a = self.ctx.aut.compose(xa, ya);
        let g = self.ctx.group.mul(self.ctx.apply(ya, xg), yg);
        a * n + g
    }

    /// Closure of `gens` by right multiplication, abandoned as soon as it
    /// leaves the semiregular elements or exceeds `|G|` elements. On
    /// success the members are left in `self.buf`.
    fn closure(&mut self, start: &[u32], gens: &[u32]) -> bool {
        self.stamp += 1;
        let stamp = self.stamp;
        self.buf.clear();
        for &s in start {
            if self.mark[s as usize] != stamp {
                self.mark[s as usize] = stamp;
                self.buf.push(s);
            }
        }
        let mut i = 0;
        while i < self.buf.len() {
            let x = self.buf[i];
            for &g in gens {
                let y = self.mul_idx(x, g);
                if self.mark[y as usize] == stamp {
                    continue;
                }
                if !self.allowed[y as usize] || self.buf.len() == self.n {
                    return false;
                }
                self.mark[y as usize] = stamp;
                self.buf.push(y);
            }
            i += 1;
        }
        true
    }
}

/// Every regular subgroup of `Hol(G)`, sorted by key.
///
/// Searches subgroups generated by two semiregular elements. When
/// `expected` is given and the pair search finds fewer subgroups, the
/// proper semiregular subgroups met along the way are extended by a third
/// generator.
pub fn closure_search_regular(
    ctx: &GroupCtx,
    max_hol_order: usize,
    expected: Option<usize>,
) -> Result<Vec<SubgroupKey>> {
    let total = hol_order(ctx);
    if total > max_hol_order {
        return Err(Error::OracleTooLarge {
            hol_order: total,
            limit: max_hol_order,
        });
    }
    let n = ctx.n();
    let id = hol_identity(ctx).index(ctx);

    let mut allowed = vec![false; total];
    let mut seen = vec![0u32; n];
    let mut candidates = Vec::new();
    for i in 0..total as u32 {
        let h = HolElement::from_index(ctx, i);
        if i == id || is_semiregular(ctx, h, &mut seen, i + 1) {
            allowed[i as usize] = true;
            if i != id {
                candidates.push(i);
            }
        }
    }

    let mut s = Searcher {
        ctx,
        n,
        allowed,
        mark: vec![0; total],
        stamp: 0,
        buf: Vec::with_capacity(n + 1),
    };
    let mut found: HashSet<SubgroupKey> = HashSet::new();
    // For each element, the found subgroups containing it.
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut members_of: Vec<Vec<u32>> = Vec::new();
    let mut covered = vec![0u32; total];
    let mut cover_stamp = 0u32;

    let record = |key: SubgroupKey,
                  found: &mut HashSet<SubgroupKey>,
                  containing: &mut Vec<Vec<usize>>,
                  members_of: &mut Vec<Vec<u32>>|
     -> Option<usize> {
        if found.contains(&key) {
            return None;
        }
        let id = members_of.len();
        for &m in &key {
            containing[m as usize].push(id);
        }
        members_of.push(key.clone());
        found.insert(key);
        Some(id)
    };

    for (ci, &g1) in candidates.iter().enumerate() {
        cover_stamp += 1;
        for &sid in &containing[g1 as usize] {
            for &m in &members_of[sid] {
                covered[m as usize] = cover_stamp;
            }
        }
        for &g2 in &candidates[ci..] {
            if covered[g2 as usize] == cover_stamp {
                continue;
            }
            let gens = [g1, g2];
            if s.closure(&[id], &gens) && s.buf.len() == n {
                let mut key = s.buf.clone();
                key.sort_unstable();
                if let Some(sid) = record(key, &mut found, &mut containing, &mut members_of) {
                    for &m in &members_of[sid] {
                        covered[m as usize] = cover_stamp;
                    }
                }
            }
        }
    }

    if expected.is_some_and(|e| found.len() < e) {
        let mut proper: HashSet<Vec<u32>> = HashSet::new();
        for (ci, &g1) in candidates.iter().enumerate() {
            for &g2 in &candidates[ci..] {
                if s.closure(&[id], &[g1, g2]) && s.buf.len() < n {
                    let mut key = s.buf.clone();
                    key.sort_unstable();
                    proper.insert(key);
                }
            }
        }
        let mut proper: Vec<Vec<u32>> = proper.into_iter().collect();
        proper.sort();
        for h in &proper {
            for &g3 in &candidates {
                if h.binary_search(&g3).is_ok() {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(g3);
                if s.closure(&[id], &gens) && s.buf.len() == n {
                    let mut key = s.buf.clone();
                    key.sort_unstable();
                    record(key, &mut found, &mut containing, &mut members_of);
                }
            }
        }
    }

    let mut out: Vec<SubgroupKey> = found.into_iter().collect();
    out.sort();
    Ok(out)
}

pub fn key_members(ctx: &GroupCtx, key: &[u32]) -> Vec<HolElement> {
    key.iter()
        .map(|&i| HolElement::from_index(ctx, i))
        .collect()
}
