use std::collections::HashMap;

use super::{Group, Idx};
use crate::error::{Error, Result};

const MAX_AUT: usize = 4096;
const MAX_PERM_ENTRIES: usize = 40_000_000;

/// `Aut(G)` as a table of permutations of the element indices.
///
/// Automorphisms act on the right: `x^(alpha beta) = (x^alpha)^beta`, and
/// `compose(alpha, beta)` is that product. Members are ordered by the
/// indices of their images of `(a, b)`.
#[derive(Debug, Clone)]
pub struct AutGroup {
    n: usize,
    perms: Vec<Idx>,
    images: Vec<(Idx, Idx)>,
    lookup: HashMap<(Idx, Idx), u32>,
    compose: Vec<u32>,
    inverse: Vec<u32>,
    identity: u32,
    iota: Vec<u32>,
}

impl AutGroup {
    /// Find every pair of generator images satisfying the defining relations
    /// and inducing a bijection, then check the count against the expected
    /// order.
    pub fn compute(g: &Group) -> Result<Self> {
        let spec = *g.spec();
        let n = g.order();
        let expected = spec.expected_aut_order();
        if expected > MAX_AUT || expected * n > MAX_PERM_ENTRIES {
            return Err(Error::AutTooLarge {
                aut_order: expected,
                order: n,
            });
        }
        let (cm, nm) = (spec.c_mod, spec.n_mod as u32);
        let xs: Vec<Idx> = g
            .elements()
            .filter(|&x| cm % g.elem_order(x) as u64 == 0)
            .collect();
        let ys: Vec<Idx> = g.elements().filter(|&y| g.elem_order(y) == nm).collect();

        let mut perms = Vec::new();
        let mut images = Vec::new();
        let mut seen = vec![0u32; n];
        let mut stamp = 0;
        for &x in &xs {
            let px = powers(g, x, cm as usize);
            for &y in &ys {
                if g.conj(y, x) != g.pow(y, spec.t) {
                    continue;
                }
                let py = powers(g, y, nm as usize);
                stamp += 1;
                let start = perms.len();
                let mut ok = true;
                for &gx in &px {
                    for &gy in &py {
                        let z = g.mul(gx, gy);
                        if seen[z as usize] == stamp {
                            ok = false;
                            break;
                        }
                        seen[z as usize] = stamp;
                        perms.push(z);
                    }
                    if !ok {
                        break;
                    }
                }
                if ok {
                    images.push((x, y));
                } else {
                    perms.truncate(start);
                }
            }
        }
        if images.len() != expected {
            return Err(Error::AutSizeMismatch {
                computed: images.len(),
                expected,
            });
        }

        let k = images.len();
        let lookup: HashMap<(Idx, Idx), u32> = images
            .iter()
            .enumerate()
            .map(|(i, &im)| (im, i as u32))
            .collect();
        let identity = lookup[&(g.a(), g.b())];
        let mut aut = AutGroup {
            n,
            perms,
            images,
            lookup,
            compose: Vec::with_capacity(k * k),
            inverse: vec![0; k],
            identity,
            iota: Vec::new(),
        };
        for i in 0..k as u32 {
            let (xa, xb) = aut.images[i as usize];
            for j in 0..k as u32 {
                let c = aut.lookup[&(aut.apply(j, xa), aut.apply(j, xb))];
                aut.compose.push(c);
                if c == identity {
                    aut.inverse[i as usize] = j;
                }
            }
        }
        aut.iota = g
            .elements()
            .map(|h| aut.lookup[&(g.conj(g.a(), h), g.conj(g.b(), h))])
            .collect();
        Ok(aut)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    #[inline]
    pub fn apply(&self, alpha: u32, x: Idx) -> Idx {
        self.perms[alpha as usize * self.n + x as usize]
    }

    pub fn perm(&self, alpha: u32) -> &[Idx] {
        let s = alpha as usize * self.n;
        &self.perms[s..s + self.n]
    }

    /// Images of the generators `a` and `b`.
    pub fn images(&self, alpha: u32) -> (Idx, Idx) {
        self.images[alpha as usize]
    }

    /// The automorphism sending `a` to `xa` and `b` to `xb`, if there is one.
    pub fn by_images(&self, xa: Idx, xb: Idx) -> Option<u32> {
        self.lookup.get(&(xa, xb)).copied()
    }

    /// First apply `alpha`, then `beta`.
    #[inline]
    pub fn compose(&self, alpha: u32, beta: u32) -> u32 {
        self.compose[alpha as usize * self.len() + beta as usize]
    }

    #[inline]
    pub fn inverse(&self, alpha: u32) -> u32 {
        self.inverse[alpha as usize]
    }

    #[inline]
    pub fn iota(&self, g: Idx) -> u32 {
        self.iota[g as usize]
    }

    pub fn pow(&self, alpha: u32, k: i64) -> u32 {
        let ord = self.order_of(alpha) as i64;
        let k = k.rem_euclid(ord);
        (0..k).fold(self.identity, |acc, _| self.compose(acc, alpha))
    }

    pub fn order_of(&self, alpha: u32) -> usize {
        let mut k = 1;
        let mut x = alpha;
        while x != self.identity {
            x = self.compose(x, alpha);
            k += 1;
        }
        k
    }

    /// The automorphism sending `x -> ix` and `y -> iy`, where `x`, `y`
    /// generate the group.
    pub fn find_by_images(
        &self,
        g: &Group,
        (x, y): (Idx, Idx),
        (ix, iy): (Idx, Idx),
    ) -> Option<u32> {
        if g.subgroup(&[x, y]).len() != g.order() {
            return None;
        }
        (0..self.len() as u32).find(|&al| self.apply(al, x) == ix && self.apply(al, y) == iy)
    }

    /// A small generating set, built greedily in index order.
    pub fn generators(&self) -> Vec<u32> {
        let k = self.len();
        let mut inside = vec![false; k];
        inside[self.identity as usize] = true;
        let mut members = vec![self.identity];
        let mut gens = Vec::new();
        while members.len() < k {
            let g = (0..k as u32).find(|&a| !inside[a as usize]).unwrap();
            gens.push(g);
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for &h in &gens {
                    let y = self.compose(x, h);
                    if !inside[y as usize] {
                        inside[y as usize] = true;
                        members.push(y);
                    }
                }
                i += 1;
            }
        }
        gens
    }
}

fn powers(g: &Group, x: Idx, len: usize) -> Vec<Idx> {
    let mut out = Vec::with_capacity(len);
    let mut y = 0;
    for _ in 0..len {
        out.push(y);
        y = g.mul(y, x);
    }
    out
}
