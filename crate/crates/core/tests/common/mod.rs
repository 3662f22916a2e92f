#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use skewbrace::arith;
use skewbrace::brace::{
    check_gfe, circle, circle_inverse, circle_table_flat, dual_gamma, kernel, nu_subgroup,
    rgf_from_generator, GammaFunction,
};
use skewbrace::enumerate::{gfe_search, structured_enumerate, EnumerationResult, SearchLimits};
use skewbrace::groups::{Family, GroupCtx, Idx};
use skewbrace::holomorph::{conjugate_by_inv, HolElement};

/// Every applicable `p^2 q` family at `(p, q)`, with its structured braces.
pub fn p2q_cases(p: u64, q: u64) -> Vec<(GroupCtx, EnumerationResult)> {
    let prof = arith::divisibility_profile(p, q).unwrap();
    prof.types
        .iter()
        .map(|&t| {
            let ctx = GroupCtx::new(Family::from_type_number(t).unwrap(), p, q).unwrap();
            let r = structured_enumerate(&ctx).unwrap();
            (ctx, r)
        })
        .collect()
}

/// Both order-`pq` groups (when they exist), with searched braces.
pub fn pq_cases(p: u64, q: u64) -> Vec<(GroupCtx, EnumerationResult)> {
    Family::PQ
        .iter()
        .filter_map(|&f| GroupCtx::new(f, p, q).ok())
        .map(|ctx| {
            let r = gfe_search(&ctx, SearchLimits::default()).unwrap();
            (ctx, r)
        })
        .collect()
}

/// The small cases on which every brace is checked exhaustively.
pub fn small_cases() -> Vec<(GroupCtx, EnumerationResult)> {
    let mut out = Vec::new();
    for (p, q) in [(3, 2), (5, 2), (3, 7), (5, 3)] {
        out.extend(p2q_cases(p, q));
    }
    for (p, q) in [(3, 2), (5, 2), (7, 3), (5, 3), (11, 5)] {
        out.extend(pq_cases(p, q));
    }
    out
}

pub type Check = Result<(), String>;

fn fail(ctx: &GroupCtx, what: &str) -> String {
    let s = ctx.spec();
    format!("{} ({}, {}): {what}", s.family.name(), s.p, s.q)
}

/// The functional equation, and the brace axiom on all triples when
/// `|G| <= exhaustive_limit` (on a spread of `k` otherwise).
pub fn gfe_and_brace_axiom(
    ctx: &GroupCtx,
    r: &EnumerationResult,
    exhaustive_limit: usize,
) -> Check {
    let g = &ctx.group;
    let n = g.order();
    let ks: Vec<Idx> = if n <= exhaustive_limit {
        g.elements().collect()
    } else {
        g.elements().step_by(n / 12).collect()
    };
    for b in &r.braces {
        let gm = &b.gamma;
        check_gfe(ctx, gm).map_err(|e| fail(ctx, &e.to_string()))?;
        for &k in &ks {
            let ki = g.inv(k);
            for x in g.elements() {
                let xk = circle(ctx, gm, x, k);
                for y in g.elements() {
                    let lhs = circle(ctx, gm, g.mul(x, y), k);
                    if lhs != g.mul(g.mul(xk, ki), circle(ctx, gm, y, k)) {
                        return Err(fail(ctx, &format!("brace axiom at ({x}, {y}, {k})")));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The dual is an involution mapping the brace set onto itself, preserving
/// the circle type and orbit lengths, and matching conjugation by inversion
/// in the holomorph.
pub fn duality(ctx: &GroupCtx, r: &EnumerationResult) -> Check {
    let by_gamma: HashMap<&GammaFunction, usize> = r
        .braces
        .iter()
        .enumerate()
        .map(|(i, b)| (&b.gamma, i))
        .collect();
    for b in &r.braces {
        let d = dual_gamma(ctx, &b.gamma);
        if dual_gamma(ctx, &d) != b.gamma {
            return Err(fail(ctx, "dual is not an involution"));
        }
        let Some(&j) = by_gamma.get(&d) else {
            return Err(fail(ctx, "dual outside the brace set"));
        };
        let other = &r.braces[j];
        if other.circle_type != b.circle_type
            || r.orbits[other.orbit_id].length != r.orbits[b.orbit_id].length
        {
            return Err(fail(ctx, "dual changes circle type or orbit length"));
        }
        let conj: BTreeSet<HolElement> = nu_subgroup(ctx, &b.gamma)
            .into_iter()
            .map(|h| conjugate_by_inv(ctx, h))
            .collect();
        if conj != nu_subgroup(ctx, &d).into_iter().collect() {
            return Err(fail(ctx, "dual is not conjugation by inversion"));
        }
    }
    Ok(())
}

/// For the non-abelian `p^2 q` families, exactly one of `gamma` and its
/// dual has the designated subgroup (`<b>` for types 2 and 3, `<b^p>` for
/// type 4) in its kernel.
pub fn kernel_dichotomy(ctx: &GroupCtx, r: &EnumerationResult) -> Check {
    let g = &ctx.group;
    let c = match ctx.spec().family {
        Family::Type2 | Family::Type3 => g.cyclic(g.b()),
        Family::Type4 => g.cyclic(g.pow(g.b(), ctx.spec().p)),
        _ => return Ok(()),
    };
    let inside = |gm: &GammaFunction| {
        let k = kernel(ctx, gm);
        c.iter().all(|x| k.binary_search(x).is_ok())
    };
    for b in &r.braces {
        if inside(&b.gamma) == inside(&dual_gamma(ctx, &b.gamma)) {
            return Err(fail(ctx, "kernel dichotomy"));
        }
    }
    Ok(())
}

/// `(G, o)` has the same Sylow structure as `G`: never an unrecognized
/// group, and of order-`p^2 q` type exactly when `G` is.
pub fn circle_types(ctx: &GroupCtx, r: &EnumerationResult) -> Check {
    for b in &r.braces {
        if b.circle_type.is_other()
            || b.circle_type.type_number().is_some() != ctx.spec().family.is_p2q()
        {
            return Err(fail(ctx, &format!("circle type {}", b.circle_type)));
        }
    }
    Ok(())
}

/// The closed-form circle inverse agrees with the one read off the table.
pub fn circle_inverses(ctx: &GroupCtx, r: &EnumerationResult) -> Check {
    let n = ctx.n();
    for b in &r.braces {
        let t = circle_table_flat(ctx, &b.gamma);
        for x in 0..n {
            let row = &t[x * n..(x + 1) * n];
            let inv = row.iter().position(|&y| y == 0).unwrap() as Idx;
            if circle_inverse(ctx, &b.gamma, x as Idx) != inv {
                return Err(fail(ctx, &format!("circle inverse of {x}")));
            }
        }
    }
    Ok(())
}

/// For types 2 and 3, `nu(<b>)` is the right or the left regular copy of `<b>`.
pub fn nu_of_b(ctx: &GroupCtx, r: &EnumerationResult) -> Check {
    if !matches!(ctx.spec().family, Family::Type2 | Family::Type3) {
        return Ok(());
    }
    let g = &ctx.group;
    let bsub = g.cyclic(g.b());
    for br in &r.braces {
        let gm = &br.gamma;
        let right = bsub.iter().all(|&x| gm.at(x) == ctx.aut.identity());
        let left = bsub.iter().all(|&x| gm.at(x) == ctx.iota(g.inv(x)));
        if !(right || left) {
            return Err(fail(ctx, "nu(B) is neither rho(B) nor lambda(B)"));
        }
    }
    Ok(())
}

/// All maps `<a> -> Aut(G)` with `gamma(a) = eta` satisfying the functional
/// equation on `<a>`, by depth-first search over the powers of `a` with
/// every constraint between assigned powers checked at each step.
pub fn brute_force_rgfs(ctx: &GroupCtx, eta: u32) -> Vec<Vec<u32>> {
    struct Dfs<'a> {
        ctx: &'a GroupCtx,
        powers: Vec<Idx>,
        pos: HashMap<Idx, usize>,
        vals: Vec<u32>,
        out: Vec<Vec<u32>>,
    }
    const UNSET: u32 = u32::MAX;
    impl Dfs<'_> {
        fn consistent(&self) -> bool {
            let g = &self.ctx.group;
            for (i, &x) in self.powers.iter().enumerate() {
                for (j, &y) in self.powers.iter().enumerate() {
                    let (vx, vy) = (self.vals[i], self.vals[j]);
                    if vy == UNSET {
                        continue;
                    }
                    let Some(&t) = self.pos.get(&g.mul(self.ctx.apply(vy, x), y)) else {
                        return false;
                    };
                    if vx != UNSET
                        && self.vals[t] != UNSET
                        && self.vals[t] != self.ctx.aut.compose(vx, vy)
                    {
                        return false;
                    }
                }
            }
            true
        }

        fn go(&mut self, i: usize) {
            if !self.consistent() {
                return;
            }
            if i == self.vals.len() {
                self.out.push(self.vals.clone());
                return;
            }
            for alpha in 0..self.ctx.aut.len() as u32 {
                self.vals[i] = alpha;
                self.go(i + 1);
            }
            self.vals[i] = UNSET;
        }
    }

    let g = &ctx.group;
    let powers = g.cyclic(g.a());
    let pos = powers.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut vals = vec![UNSET; powers.len()];
    vals[0] = ctx.aut.identity();
    vals[1] = eta;
    let mut dfs = Dfs {
        ctx,
        powers,
        pos,
        vals,
        out: Vec::new(),
    };
    dfs.go(2);
    dfs.out
}

/// On type 1 at `(3, 2)`: for every `eta` leaving `<a>` invariant with order
/// dividing 9 there is exactly one gamma function on `<a>` with
/// `gamma(a) = eta`, and it is the one built from the power sums; for every
/// other `eta` there is none.
pub fn rgf_uniqueness() -> Check {
    let ctx = GroupCtx::new(Family::Type1, 3, 2).unwrap();
    let g = &ctx.group;
    let a = g.a();
    let powers = g.cyclic(a);
    let asub: BTreeSet<Idx> = powers.iter().copied().collect();
    let mut admissible = 0;
    for eta in 0..ctx.aut.len() as u32 {
        let found = brute_force_rgfs(&ctx, eta);
        let invariant = asub.iter().all(|&x| asub.contains(&ctx.apply(eta, x)));
        if !invariant || 9 % ctx.aut.order_of(eta) != 0 {
            if !found.is_empty() || rgf_from_generator(&ctx, a, eta).is_ok() {
                return Err(fail(&ctx, &format!("gamma(a) = {eta} should not extend")));
            }
            continue;
        }
        admissible += 1;
        if found.len() != 1 {
            return Err(fail(
                &ctx,
                &format!("{} extensions of gamma(a) = {eta}", found.len()),
            ));
        }
        let rgf = rgf_from_generator(&ctx, a, eta).map_err(|e| e.to_string())?;
        if powers
            .iter()
            .enumerate()
            .any(|(i, &x)| rgf.get(x) != Some(found[0][i]))
        {
            return Err(fail(&ctx, "constructed relative gamma function differs"));
        }
    }
    if admissible == 0 {
        return Err("no admissible eta".into());
    }
    Ok(())
}
