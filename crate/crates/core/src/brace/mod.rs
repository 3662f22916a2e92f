//! Gamma functions `gamma: G -> Aut(G)` satisfying
//! `gamma(g^gamma(h) h) = gamma(g) gamma(h)`, and the right skew braces
//! `g o h = g^gamma(h) h` they define.

mod rgf;

pub use rgf::{lift_rgf, rgf_from_generator, Rgf};

use crate::error::{Error, Result};
use crate::groups::classify::{classify_fingerprint, fingerprint_flat};
use crate::groups::{CayleyTable, GroupCtx, Idx, IsoType};
use crate::holomorph::HolElement;

/// Exhaustive brace-axiom checks up to this order; sampled above it.
const EXHAUSTIVE_AXIOM_LIMIT: usize = 63;

/// `table[g]` is the index of `gamma(g)` in `Aut(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaFunction(pub Vec<u32>);

impl GammaFunction {
    /// `gamma = 1`, whose circle operation is the group operation.
    pub fn trivial(ctx: &GroupCtx) -> Self {
        GammaFunction(vec![ctx.aut.identity(); ctx.n()])
    }

    /// `gamma(g) = iota(g^-1)`, whose circle operation is the opposite one.
    pub fn opposite(ctx: &GroupCtx) -> Self {
        GammaFunction(
            ctx.group
                .elements()
                .map(|g| ctx.iota(ctx.group.inv(g)))
                .collect(),
        )
    }

    #[inline]
    pub fn at(&self, g: Idx) -> u32 {
        self.0[g as usize]
    }

    pub fn table(&self) -> &[u32] {
        &self.0
    }
}

/// The first pair `(g, h)` violating the functional equation, if any.
pub fn gfe_counterexample(ctx: &GroupCtx, gamma: &GammaFunction) -> Option<(Idx, Idx)> {
    let g_ = &ctx.group;
    if gamma.at(0) != ctx.aut.identity() {
        return Some((0, 0));
    }
    for h in g_.elements() {
        let gh = gamma.at(h);
        for g in g_.elements() {
            let lhs = gamma.at(g_.mul(ctx.apply(gh, g), h));
            if lhs != ctx.aut.compose(gamma.at(g), gh) {
                return Some((g, h));
            }
        }
    }
    None
}

pub fn check_gfe(ctx: &GroupCtx, gamma: &GammaFunction) -> Result<()> {
    match gfe_counterexample(ctx, gamma) {
        None => Ok(()),
        Some((g, h)) => Err(Error::GfeViolation {
            g: g as usize,
            h: h as usize,
        }),
    }
}

/// `g o h = g^gamma(h) h`.
#[inline]
pub fn circle(ctx: &GroupCtx, gamma: &GammaFunction, g: Idx, h: Idx) -> Idx {
    ctx.group.mul(ctx.apply(gamma.at(h), g), h)
}

/// The inverse of `a` in `(G, o)`: `(a^-1)^(gamma(a)^-1)`.
pub fn circle_inverse(ctx: &GroupCtx, gamma: &GammaFunction, a: Idx) -> Idx {
    ctx.apply(ctx.aut.inverse(gamma.at(a)), ctx.group.inv(a))
}

pub fn circle_table_flat(ctx: &GroupCtx, gamma: &GammaFunction) -> Vec<Idx> {
    let n = ctx.n() as Idx;
    let mut out = Vec::with_capacity((n * n) as usize);
    for g in 0..n {
        for h in 0..n {
            out.push(circle(ctx, gamma, g, h));
        }
    }
    out
}

pub fn circle_table(ctx: &GroupCtx, gamma: &GammaFunction) -> CayleyTable {
    let n = ctx.n();
    let flat = circle_table_flat(ctx, gamma);
    CayleyTable {
        n,
        table: flat.chunks(n).map(|r| r.to_vec()).collect(),
    }
}

/// `{g : gamma(g) = 1}`, sorted.
pub fn kernel(ctx: &GroupCtx, gamma: &GammaFunction) -> Vec<Idx> {
    let id = ctx.aut.identity();
    ctx.group
        .elements()
        .filter(|&g| gamma.at(g) == id)
        .collect()
}

/// Whether `gamma(xy) = gamma(x) gamma(y)` for all `x`, `y`.
pub fn is_morphism(ctx: &GroupCtx, gamma: &GammaFunction) -> bool {
    let g = &ctx.group;
    g.elements().all(|x| {
        g.elements()
            .all(|y| gamma.at(g.mul(x, y)) == ctx.aut.compose(gamma.at(x), gamma.at(y)))
    })
}

/// The regular subgroup `{(gamma(g), g)}` of `Hol(G)`.
pub fn nu_subgroup(ctx: &GroupCtx, gamma: &GammaFunction) -> Vec<HolElement> {
    ctx.group
        .elements()
        .map(|g| HolElement {
            alpha: gamma.at(g),
            g,
        })
        .collect()
}

/// Read the gamma function off a regular subgroup: the member moving the
/// identity to `g` is `(gamma(g), g)`.
pub fn gamma_of_regular(ctx: &GroupCtx, members: &[HolElement]) -> GammaFunction {
    let mut t = vec![u32::MAX; ctx.n()];
    for h in members {
        t[h.g as usize] = h.alpha;
    }
    GammaFunction(t)
}

/// `x -> gamma(x^-1) iota(x^-1)`, the gamma function of the regular
/// subgroup conjugated by inversion.
pub fn dual_gamma(ctx: &GroupCtx, gamma: &GammaFunction) -> GammaFunction {
    GammaFunction(
        ctx.group
            .elements()
            .map(|x| {
                let xi = ctx.group.inv(x);
                ctx.aut.compose(gamma.at(xi), ctx.iota(xi))
            })
            .collect(),
    )
}

/// `g -> beta^-1 gamma(g^(beta^-1)) beta`, the gamma function of the
/// regular subgroup conjugated by `beta`.
pub fn conjugate_gamma(ctx: &GroupCtx, gamma: &GammaFunction, beta: u32) -> GammaFunction {
    let bi = ctx.aut.inverse(beta);
    GammaFunction(
        ctx.group
            .elements()
            .map(|g| {
                let inner = gamma.at(ctx.apply(bi, g));
                ctx.aut.compose(ctx.aut.compose(bi, inner), beta)
            })
            .collect(),
    )
}

/// The first triple violating `(gh) o k = (g o k) k^-1 (h o k)`.
///
/// All triples are tried for small groups; above that every pair `(g, h)`
/// is tried against a fixed spread of `k`.
pub fn brace_axiom_counterexample(
    ctx: &GroupCtx,
    gamma: &GammaFunction,
) -> Option<(Idx, Idx, Idx)> {
    let g_ = &ctx.group;
    let n = ctx.n();
    let ks: Vec<Idx> = if n <= EXHAUSTIVE_AXIOM_LIMIT {
        g_.elements().collect()
    } else {
        let step = (n / 16).max(1);
        (0..n).step_by(step).map(|k| k as Idx).collect()
    };
    for &k in &ks {
        let ki = g_.inv(k);
        for g in g_.elements() {
            let gk = circle(ctx, gamma, g, k);
            for h in g_.elements() {
                let lhs = circle(ctx, gamma, g_.mul(g, h), k);
                let rhs = g_.mul(g_.mul(gk, ki), circle(ctx, gamma, h, k));
                if lhs != rhs {
                    return Some((g, h, k));
                }
            }
        }
    }
    None
}

/// A gamma function with the invariants of its skew brace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewBraceRecord {
    pub gamma: GammaFunction,
    pub circle_type: IsoType,
    pub kernel: Vec<Idx>,
    /// Assigned once the Aut(G)-orbits of a collection are known.
    pub orbit_id: usize,
}

impl SkewBraceRecord {
    pub fn circle_table(&self, ctx: &GroupCtx) -> CayleyTable {
        circle_table(ctx, &self.gamma)
    }
}

/// Validate `gamma` and compute the isomorphism type of `(G, o)` and the
/// kernel, checking that the kernel is a subgroup of `(G, .)` and normal in
/// `(G, o)`.
pub fn brace_from_gamma(ctx: &GroupCtx, gamma: GammaFunction) -> Result<SkewBraceRecord> {
    check_gfe(ctx, &gamma)?;
    if let Some((g, h, k)) = brace_axiom_counterexample(ctx, &gamma) {
        return Err(Error::BraceAxiomViolation {
            g: g as usize,
            h: h as usize,
            k: k as usize,
        });
    }
    let n = ctx.n();
    let flat = circle_table_flat(ctx, &gamma);
    let circle_type = classify_fingerprint(fingerprint_flat(n, &flat)?);

    let ker = kernel(ctx, &gamma);
    let mut in_ker = vec![false; n];
    for &k in &ker {
        in_ker[k as usize] = true;
    }
    let g = &ctx.group;
    if ker
        .iter()
        .any(|&x| ker.iter().any(|&y| !in_ker[g.mul(x, y) as usize]))
    {
        return Err(Error::KernelViolation("a subgroup of (G, .)"));
    }
    for x in g.elements() {
        let xi = circle_inverse(ctx, &gamma, x);
        for &k in &ker {
            let c = flat[flat[xi as usize * n + k as usize] as usize * n + x as usize];
            if !in_ker[c as usize] {
                return Err(Error::KernelViolation("normal in (G, o)"));
            }
        }
    }
    Ok(SkewBraceRecord {
        gamma,
        circle_type,
        kernel: ker,
        orbit_id: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Family;
    use crate::holomorph::{conjugate_by_inv, is_regular, lambda_rep, rho};

    #[test]
    fn trivial_and_opposite() {
        let ctx = GroupCtx::new(Family::Type2, 3, 7).unwrap();
        let id = GammaFunction::trivial(&ctx);
        assert!(check_gfe(&ctx, &id).is_ok());
        let r = brace_from_gamma(&ctx, id.clone()).unwrap();
        assert_eq!(r.circle_type, IsoType::Type2);
        assert_eq!(r.kernel.len(), 63);
        let g = &ctx.group;
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(circle(&ctx, &id, x, y), g.mul(x, y));
            }
        }

        let op = GammaFunction::opposite(&ctx);
        assert!(check_gfe(&ctx, &op).is_ok());
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(circle(&ctx, &op, x, y), g.mul(y, x));
            }
        }
        assert_eq!(dual_gamma(&ctx, &id), op);
        assert_eq!(dual_gamma(&ctx, &op), id);
        let lam: Vec<_> = g.elements().map(|x| lambda_rep(&ctx, x)).collect();
        assert_eq!(nu_subgroup(&ctx, &op), lam);
        let rh: Vec<_> = g.elements().map(|x| rho(&ctx, x)).collect();
        assert_eq!(nu_subgroup(&ctx, &id), rh);
    }

    #[test]
    fn perturbed_gamma_fails_with_witness() {
        let ctx = GroupCtx::new(Family::Type2, 3, 7).unwrap();
        let mut op = GammaFunction::opposite(&ctx);
        op.0[5] = ctx.aut.compose(op.0[5], ctx.iota(1));
        assert!(matches!(
            check_gfe(&ctx, &op),
            Err(Error::GfeViolation { .. })
        ));
    }

    #[test]
    fn dual_and_conjugates_of_opposite() {
        let ctx = GroupCtx::new(Family::Type4, 3, 2).unwrap();
        let op = GammaFunction::opposite(&ctx);
        let nu = nu_subgroup(&ctx, &op);
        assert!(is_regular(&ctx, &nu));
        let conj: Vec<_> = nu.iter().map(|&h| conjugate_by_inv(&ctx, h)).collect();
        assert_eq!(gamma_of_regular(&ctx, &conj), dual_gamma(&ctx, &op));
        let id = GammaFunction::trivial(&ctx);
        for beta in 0..ctx.aut.len() as u32 {
            assert_eq!(conjugate_gamma(&ctx, &id, beta), id);
            let c = conjugate_gamma(&ctx, &op, beta);
            assert!(check_gfe(&ctx, &c).is_ok());
        }
        assert_eq!(conjugate_gamma(&ctx, &op, ctx.aut.identity()), op);
    }

    #[test]
    fn abelian_dual_is_precomposition_with_inverse() {
        let ctx = GroupCtx::new(Family::Type1, 3, 7).unwrap();
        let g = &ctx.group;
        let a = g.a();
        let eta = ctx
            .aut
            .by_images(g.pow(a, 4), g.b())
            .expect("a -> a^4 is an automorphism");
        let rgf = rgf_from_generator(&ctx, a, eta).unwrap();
        let gamma = lift_rgf(&ctx, &rgf, &g.cyclic(g.b())).unwrap();
        let dual = dual_gamma(&ctx, &gamma);
        for x in g.elements() {
            assert_eq!(dual.at(x), gamma.at(g.inv(x)));
        }
    }
}
