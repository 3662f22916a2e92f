//! Explicit parameterizations of all gamma functions on each `p^2 q`
//! family. Every constructed function is validated, and each family of
//! constructions is checked against the number of braces (and circle
//! types) it is known to produce.

use std::collections::HashSet;

use super::{EnumerationResult, Method};
use crate::brace::{
    brace_from_gamma, check_gfe, dual_gamma, kernel, lift_rgf, rgf_from_generator, GammaFunction,
    SkewBraceRecord,
};
use crate::error::{Error, Result};
use crate::groups::{Family, GroupCtx, Idx, IsoType};

struct Builder<'a> {
    ctx: &'a GroupCtx,
    records: Vec<SkewBraceRecord>,
}

impl<'a> Builder<'a> {
    fn new(ctx: &'a GroupCtx) -> Self {
        Builder {
            ctx,
            records: Vec::new(),
        }
    }

    /// Validate a branch: it must yield `expected` distinct braces, all of
    /// circle type `circle`.
    fn branch(
        &mut self,
        name: &str,
        gammas: Vec<Option<GammaFunction>>,
        expected: usize,
        circle: IsoType,
    ) -> Result<()> {
        let mut valid: Vec<GammaFunction> = gammas
            .into_iter()
            .flatten()
            .filter(|g| check_gfe(self.ctx, g).is_ok())
            .collect();
        valid.sort();
        valid.dedup();
        let mismatch = |found| Error::StructuredCountMismatch {
            branch: name.to_string(),
            expected,
            found,
        };
        if valid.len() != expected {
            return Err(mismatch(valid.len()));
        }
        let mut of_type = 0;
        for g in valid {
            let rec = brace_from_gamma(self.ctx, g)?;
            if rec.circle_type == circle {
                of_type += 1;
            }
            self.records.push(rec);
        }
        if of_type != expected {
            return Err(Error::StructuredCountMismatch {
                branch: format!("{name} (circle type {circle})"),
                expected,
                found: of_type,
            });
        }
        Ok(())
    }

    fn trivial(&mut self) -> Result<()> {
        let t = self.ctx.spec().family.iso_type();
        self.branch(
            "trivial",
            vec![Some(GammaFunction::trivial(self.ctx))],
            1,
            t,
        )
    }

    /// Add the duals of everything built so far, which must all be new.
    fn double_by_duality(&mut self) -> Result<()> {
        let have: HashSet<GammaFunction> = self.records.iter().map(|r| r.gamma.clone()).collect();
        let duals: Vec<GammaFunction> = self
            .records
            .iter()
            .map(|r| dual_gamma(self.ctx, &r.gamma))
            .collect();
        let clashes = duals.iter().filter(|d| have.contains(*d)).count();
        if clashes != 0 {
            return Err(Error::StructuredCountMismatch {
                branch: "duals outside the constructed set".into(),
                expected: 0,
                found: clashes,
            });
        }
        for d in duals {
            self.records.push(brace_from_gamma(self.ctx, d)?);
        }
        Ok(())
    }

    /// Lift the cyclic gamma function with `gamma(a) = eta` to `G` so that
    /// it is constant on cosets of `b`.
    fn lift(&self, a: Idx, eta: u32, b: &[Idx]) -> Option<GammaFunction> {
        let rgf = rgf_from_generator(self.ctx, a, eta).ok()?;
        lift_rgf(self.ctx, &rgf, b).ok()
    }
}

/// Conjugates `x^(b^j)` for `j` in `0..count`.
fn conjugates(ctx: &GroupCtx, x: Idx, count: u64) -> Vec<Idx> {
    let g = &ctx.group;
    (0..count).map(|j| g.conj(x, g.pow(g.b(), j))).collect()
}

/// The order of `alpha` restricted to the cyclic subgroup generated by `x`.
fn restricted_order(ctx: &GroupCtx, alpha: u32, x: Idx) -> usize {
    let mut k = 1;
    let mut y = ctx.apply(alpha, x);
    while y != x {
        y = ctx.apply(alpha, y);
        k += 1;
    }
    k
}

fn type1(ctx: &GroupCtx, b: &mut Builder) -> Result<()> {
    let g = &ctx.group;
    let (p, q) = (ctx.spec().p as usize, ctx.spec().q as usize);
    let bsub = g.cyclic(g.b());
    let asub = g.cyclic(g.a());

    // gamma(a) = eta of p-power order; classified by its order on <b>.
    let mut by_order: [Vec<Option<GammaFunction>>; 3] = Default::default();
    for eta in 0..ctx.aut.len() as u32 {
        if (p * p) % ctx.aut.order_of(eta) != 0 {
            continue;
        }
        let slot = match restricted_order(ctx, eta, g.b()) {
            1 => 0,
            o if o == p => 1,
            _ => 2,
        };
        by_order[slot].push(b.lift(g.a(), eta, &bsub));
    }
    let [o1, op, op2] = by_order;
    let pd = ((q - 1) % p == 0) as usize;
    let p2d = ((q - 1) % (p * p) == 0) as usize;
    b.branch("gamma(a) trivial on <b>", o1, p, IsoType::Type1)?;
    b.branch(
        "gamma(a) of order p on <b>",
        op,
        pd * p * (p - 1),
        IsoType::Type2,
    )?;
    b.branch(
        "gamma(a) of order p^2 on <b>",
        op2,
        p2d * p * p * (p - 1),
        IsoType::Type3,
    )?;

    if (p - 1) % q == 0 {
        let gs = (0..ctx.aut.len() as u32)
            .filter(|&eta| ctx.aut.order_of(eta) == q)
            .map(|eta| b.lift(g.b(), eta, &asub))
            .collect();
        b.branch(
            "gamma(b) of order q, <a> in the kernel",
            gs,
            q - 1,
            IsoType::Type4,
        )?;
    }
    Ok(())
}

fn type2(ctx: &GroupCtx, b: &mut Builder) -> Result<()> {
    let g = &ctx.group;
    let aut = &ctx.aut;
    let (p, q) = (ctx.spec().p as usize, ctx.spec().q as usize);
    let bsub = g.cyclic(g.b());
    let sylows = conjugates(ctx, g.a(), q as u64);
    let psi = ctx.psi_for(g.a())?;
    let psi_pow: Vec<u32> = (0..p).map(|t| aut.pow(psi, t as i64)).collect();
    // Automorphisms acting trivially on G/<b>.
    let h: Vec<u32> = (0..aut.len() as u32)
        .filter(|&al| g.elem(aut.images(al).0).v == 1)
        .collect();

    b.trivial()?;

    if (q - 1) % (p * p) == 0 {
        let mut gs = Vec::new();
        for &aj in &sylows {
            let ia = ctx.iota(aj);
            let inner: Vec<u32> = (1..p).map(|k| aut.pow(ia, k as i64)).collect();
            for &eta in &h {
                if aut.order_of(eta) != p * p || !inner.contains(&aut.pow(eta, p as i64)) {
                    continue;
                }
                for &pt in &psi_pow {
                    gs.push(b.lift(aj, aut.compose(eta, pt), &bsub));
                }
            }
        }
        b.branch(
            "image of order p^2",
            gs,
            q * p * p * (p - 1),
            IsoType::Type3,
        )?;
    }

    let gs = (1..p).map(|i| b.lift(g.a(), psi_pow[i], &bsub)).collect();
    b.branch("image generated by psi", gs, p - 1, IsoType::Type2)?;

    let mut s1 = Vec::new();
    let mut s_other = Vec::new();
    for &aj in &sylows {
        let ia = ctx.iota(aj);
        for s in 1..p {
            let base = aut.pow(ia, -(s as i64));
            for &pt in &psi_pow {
                let gm = b.lift(aj, aut.compose(base, pt), &bsub);
                if s == 1 {
                    s1.push(gm)
                } else {
                    s_other.push(gm)
                }
            }
        }
    }
    b.branch("gamma(a) = iota(a)^-1 psi^t", s1, q * p, IsoType::Type1)?;
    b.branch(
        "gamma(a) = iota(a)^-s psi^t, s > 1",
        s_other,
        q * p * (p - 2),
        IsoType::Type2,
    )?;

    b.double_by_duality()
}

fn type3(ctx: &GroupCtx, b: &mut Builder) -> Result<()> {
    let g = &ctx.group;
    let (p, q) = (ctx.spec().p as usize, ctx.spec().q as usize);
    let bsub = g.cyclic(g.b());
    let sylows = conjugates(ctx, g.a(), q as u64);

    b.trivial()?;
    let mut buckets: [Vec<Option<GammaFunction>>; 3] = Default::default();
    for &aj in &sylows {
        for s in 1..p * p {
            let eta = ctx.iota(g.pow(aj, (p * p - s) as u64));
            let slot = if s == 1 {
                0
            } else if s % p == 1 {
                1
            } else {
                2
            };
            buckets[slot].push(b.lift(aj, eta, &bsub));
        }
    }
    let [s1, sp, rest] = buckets;
    b.branch("gamma(a) = iota(a^-1)", s1, q, IsoType::Type1)?;
    b.branch(
        "gamma(a) = iota(a^-s), s = 1 mod p",
        sp,
        q * (p - 1),
        IsoType::Type2,
    )?;
    b.branch(
        "gamma(a) = iota(a^-s), s != 1 mod p",
        rest,
        q * (p * p - p - 1),
        IsoType::Type3,
    )?;
    b.double_by_duality()
}

fn type4(ctx: &GroupCtx, b: &mut Builder) -> Result<()> {
    let g = &ctx.group;
    let aut = &ctx.aut;
    let (p, q) = (ctx.spec().p as usize, ctx.spec().q as usize);
    let p2 = p * p;
    let bsub = g.cyclic(g.b());
    let sylows = conjugates(ctx, g.a(), p2 as u64);

    b.trivial()?;

    let mut inv = Vec::new();
    let mut other = Vec::new();
    for &aj in &sylows {
        let ia = ctx.iota(aj);
        for i in 1..q {
            let gm = b.lift(aj, aut.pow(ia, i as i64), &bsub);
            if i == q - 1 {
                inv.push(gm)
            } else {
                other.push(gm)
            }
        }
    }
    b.branch("kernel <b>, gamma(a) = iota(a)^-1", inv, p2, IsoType::Type1)?;
    b.branch(
        "kernel <b>, gamma(a) = iota(a)^i",
        other,
        p2 * (q - 2),
        IsoType::Type4,
    )?;

    let mut gs = Vec::new();
    for &aj in &sylows {
        let psi = ctx.psi_for(aj)?;
        for t in 1..p {
            let mut table = vec![0; ctx.n()];
            for i in 0..q {
                let ai = g.pow(aj, i as u64);
                let inner = ctx.iota(g.pow(aj, ((q - i) % q) as u64));
                for k in 0..p2 {
                    let x = g.mul(ai, g.pow(g.b(), k as u64));
                    table[x as usize] = aut.compose(inner, aut.pow(psi, (t * k) as i64));
                }
            }
            gs.push(Some(GammaFunction(table)));
        }
    }
    b.branch("kernel <b^p>", gs, p2 * (p - 1), IsoType::Type1)?;

    // No gamma function has a kernel of order pq. Such a kernel would be
    // <b^p, a_j> for some j, and gamma would be lifted from its values on
    // the characteristic subgroup <b>.
    let bp = g.pow(g.b(), p as u64);
    let mut found = 0;
    for &aj in &sylows {
        let k = g.subgroup(&[bp, aj]);
        for eta in 0..aut.len() as u32 {
            if p2 % aut.order_of(eta) != 0 {
                continue;
            }
            if let Some(gm) = b.lift(g.b(), eta, &k) {
                if kernel(ctx, &gm).len() == p * q {
                    found += 1;
                }
            }
        }
    }
    if found != 0 {
        return Err(Error::StructuredCountMismatch {
            branch: "kernel of order pq".into(),
            expected: 0,
            found,
        });
    }

    b.double_by_duality()
}

/// All skew braces on a `p^2 q` group, built from explicit formulas.
pub fn structured_enumerate(ctx: &GroupCtx) -> Result<EnumerationResult> {
    let mut b = Builder::new(ctx);
    match ctx.spec().family {
        Family::Type1 => type1(ctx, &mut b)?,
        Family::Type2 => type2(ctx, &mut b)?,
        Family::Type3 => type3(ctx, &mut b)?,
        Family::Type4 => type4(ctx, &mut b)?,
        f => return Err(Error::NotP2q(f.name())),
    }
    EnumerationResult::new(ctx, Method::Structured, b.records)
}
