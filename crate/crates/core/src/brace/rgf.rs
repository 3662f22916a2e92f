use super::{check_gfe, GammaFunction};
use crate::arith::EsTable;
use crate::error::{Error, Result};
use crate::groups::{GroupCtx, Idx};

/// A gamma function defined on a cyclic subgroup `A = <a>` that is
/// invariant under its own values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rgf {
    pub generator: Idx,
    /// `a^0, a^1, ...`
    pub domain: Vec<Idx>,
    /// `values[k]` is the value at `a^k`.
    pub values: Vec<u32>,
    slot: Vec<u32>,
}

impl Rgf {
    pub fn get(&self, x: Idx) -> Option<u32> {
        match self.slot[x as usize] {
            u32::MAX => None,
            k => Some(self.values[k as usize]),
        }
    }
}

/// The unique gamma function on `A = <a>` with `gamma(a) = eta`, given by
/// `gamma(a^(e_s(k))) = eta^k` where `a^eta = a^s`.
pub fn rgf_from_generator(ctx: &GroupCtx, a: Idx, eta: u32) -> Result<Rgf> {
    let g = &ctx.group;
    let domain = g.cyclic(a);
    let m = domain.len();
    let mut slot = vec![u32::MAX; ctx.n()];
    for (k, &x) in domain.iter().enumerate() {
        slot[x as usize] = k as u32;
    }
    let image = ctx.apply(eta, a);
    let s = slot[image as usize];
    if s == u32::MAX {
        return Err(Error::NotInvariant);
    }
    let ord = ctx.aut.order_of(eta);
    if m % ord != 0 {
        return Err(Error::OrderTooBig {
            aut_order: ord,
            subgroup_order: m,
        });
    }
    let mut values = vec![ctx.aut.identity(); m];
    if m > 1 {
        let es = EsTable::new(s as i64, m as u64)?;
        let mut power = ctx.aut.identity();
        for k in 0..m as u64 {
            values[es.es(k) as usize] = power;
            power = ctx.aut.compose(power, eta);
        }
    }
    let rgf = Rgf {
        generator: a,
        domain,
        values,
        slot,
    };
    for (i, &x) in rgf.domain.iter().enumerate() {
        for (j, &y) in rgf.domain.iter().enumerate() {
            let gy = rgf.values[j];
            let z = g.mul(ctx.apply(gy, x), y);
            let lhs = rgf.get(z).ok_or(Error::NotInvariant)?;
            if lhs != ctx.aut.compose(rgf.values[i], gy) {
                return Err(Error::GfeViolation {
                    g: x as usize,
                    h: y as usize,
                });
            }
        }
    }
    Ok(rgf)
}

/// Extend `gamma'` on `A` to `G = A B` by `gamma(x y) = gamma'(x)`.
///
/// Requires `gamma'` trivial on `A ∩ B` and `B` invariant under every
/// `gamma'(x) iota(x)`.
pub fn lift_rgf(ctx: &GroupCtx, rgf: &Rgf, b: &[Idx]) -> Result<GammaFunction> {
    let g = &ctx.group;
    let n = ctx.n();
    let mut in_b = vec![false; n];
    for &y in b {
        in_b[y as usize] = true;
    }
    let id = ctx.aut.identity();
    let mut meet = 0;
    for (k, &x) in rgf.domain.iter().enumerate() {
        if in_b[x as usize] {
            meet += 1;
            if rgf.values[k] != id {
                return Err(Error::LiftPreconditionFailed(
                    "gamma' is not trivial on the intersection with B",
                ));
            }
        }
    }
    if rgf.domain.len() * b.len() != n * meet {
        return Err(Error::LiftPreconditionFailed("G is not the product A B"));
    }
    for (k, &x) in rgf.domain.iter().enumerate() {
        let beta = ctx.aut.compose(rgf.values[k], ctx.iota(x));
        if b.iter().any(|&y| !in_b[ctx.apply(beta, y) as usize]) {
            return Err(Error::LiftPreconditionFailed(
                "B is not invariant under gamma'(a) iota(a)",
            ));
        }
    }
    let mut table = vec![u32::MAX; n];
    for (k, &x) in rgf.domain.iter().enumerate() {
        for &y in b {
            let z = g.mul(x, y) as usize;
            if table[z] != u32::MAX && table[z] != rgf.values[k] {
                return Err(Error::LiftPreconditionFailed(
                    "gamma' is not constant on cosets of the intersection",
                ));
            }
            table[z] = rgf.values[k];
        }
    }
    let gamma = GammaFunction(table);
    check_gfe(ctx, &gamma)?;
    Ok(gamma)
}
