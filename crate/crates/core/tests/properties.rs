mod common;

use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;

use skewbrace::arith::{self, EsTable};
use skewbrace::brace::{
    circle, circle_table, gamma_of_regular, is_morphism, nu_subgroup, GammaFunction,
};
use skewbrace::counts;
use skewbrace::enumerate::{structured_enumerate, EnumerationResult};
use skewbrace::groups::{classify_iso_type, Family, GroupCtx, Idx};
use skewbrace::holomorph::{is_regular, HolElement};
use skewbrace::ErrorKind;

use common::small_cases;

/// Prime pairs with `p` odd, `p != q` and `p^2 q <= 500`.
fn p2q_primes() -> Vec<(u64, u64)> {
    let primes: Vec<u64> = (2..100).filter(|&x| arith::is_prime(x)).collect();
    let mut out = Vec::new();
    for &p in primes.iter().filter(|&&p| p > 2) {
        for &q in &primes {
            if p != q && p * p * q <= 500 {
                out.push((p, q));
            }
        }
    }
    out
}

fn naive_pow(b: u64, e: u64, m: u64) -> u64 {
    (0..e).fold(1, |acc, _| acc * b % m)
}

proptest! {
    #[test]
    fn mod_pow_agrees_with_repeated_product(b in 0u64..1000, e in 0u64..200, m in 2u64..1000) {
        prop_assert_eq!(arith::mod_pow(b as i64, e, m), naive_pow(b % m, e, m));
    }

    #[test]
    fn mult_order_is_least_period(x in 1u64..500, m in 2u64..500) {
        prop_assume!(arith::gcd(x, m) == 1);
        let k = arith::mult_order(x as i64, m).unwrap();
        prop_assert_eq!(naive_pow(x % m, k, m), 1 % m);
        for j in 1..k {
            prop_assert_ne!(naive_pow(x % m, j, m), 1 % m);
        }
    }

    /// `e_s(k + l) = e_s(k) + s^k e_s(l)`.
    #[test]
    fn es_cocycle(k in 0u64..200, l in 0u64..200, s in 1i64..100, m in 2u64..300) {
        let lhs = arith::es(k + l, s, m);
        let rhs = (arith::es(k, s, m) + arith::mod_pow(s, k, m) * arith::es(l, s, m)) % m;
        prop_assert_eq!(lhs, rhs);
    }

    /// For `s = 1 mod p`, `e_s` permutes the residues mod `p^n`, and `f_s`
    /// inverts it.
    #[test]
    fn es_table_is_a_bijection(pi in 0usize..4, n in 1u32..4, j in 0u64..50) {
        let p = [3u64, 5, 7, 11][pi];
        let m = p.pow(n);
        let s = (1 + j * p) as i64;
        let t = EsTable::new(s, m).unwrap();
        let image: BTreeSet<u64> = (0..m).map(|k| t.es(k)).collect();
        prop_assert_eq!(image.len() as u64, m);
        for r in 0..m {
            prop_assert_eq!(t.es(t.fs(r)), r);
        }
    }

    /// `(s - 1) e_s(k) = s^k - 1`.
    #[test]
    fn es_geometric_sum(k in 0u64..300, s in 1i64..200, m in 2u64..1000) {
        let lhs = ((s as u64 - 1) % m) * arith::es(k, s, m) % m;
        let rhs = (arith::mod_pow(s, k, m) + m - 1) % m;
        prop_assert_eq!(lhs, rhs);
    }
}

fn prime_pair() -> impl Strategy<Value = (u64, u64)> {
    prop::sample::select(p2q_primes())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn groups_satisfy_the_axioms(pq in prime_pair(), seed in any::<u64>()) {
        let (p, q) = pq;
        let prof = arith::divisibility_profile(p, q).unwrap();
        for &t in &prof.types {
            let ctx = match GroupCtx::new(Family::from_type_number(t).unwrap(), p, q) {
                Ok(c) => c,
                Err(e) if e.kind() == ErrorKind::ResourceLimit => continue,
                Err(e) => panic!("{e}"),
            };
            let g = &ctx.group;
            let n = g.order() as u64;
            prop_assert_eq!(n, p * p * q);
            let pick = |i: u64| ((seed.wrapping_mul(i + 1).rotate_left(17) ^ i) % n) as Idx;
            for i in 0..64 {
                let (x, y, z) = (pick(3 * i), pick(3 * i + 1), pick(3 * i + 2));
                prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                prop_assert_eq!(g.mul(x, 0), x);
                prop_assert_eq!(g.mul(x, g.inv(x)), 0);
            }
            // Automorphisms are bijective, fix the identity and preserve orders.
            for alpha in 0..ctx.aut.len() as u32 {
                let perm = ctx.aut.perm(alpha);
                prop_assert_eq!(perm[0], 0);
                prop_assert_eq!(perm.iter().collect::<HashSet<_>>().len() as u64, n);
                let x = pick(alpha as u64 + 1000);
                prop_assert_eq!(g.elem_order(ctx.apply(alpha, x)), g.elem_order(x));
                let y = pick(alpha as u64 + 2000);
                prop_assert_eq!(ctx.apply(alpha, g.mul(x, y)), g.mul(ctx.apply(alpha, x), ctx.apply(alpha, y)));
            }
        }
    }

    /// `e = e' |Aut(Gamma)| / |Aut(G)|`, class sizes sum to `e'`, class
    /// lengths divide `|Aut(G)|`, and totals are row sums of `e`.
    #[test]
    fn closed_forms_are_consistent(pq in prime_pair()) {
        let (p, q) = pq;
        let table = counts::count_table(p, q).unwrap();
        for c in &table.cells {
            let (ag, ah) = (counts::aut_order(c.gamma, p, q), counts::aut_order(c.g, p, q));
            prop_assert_eq!(counts::scale_by_aut(c.e_prime, ag, ah), Some(c.e));
            let sum: u64 = c.classes.iter().map(|&(k, l)| k * l).sum();
            prop_assert_eq!(sum, c.e_prime);
            for &(_, l) in &c.classes {
                prop_assert_eq!(ah % l, 0);
            }
        }
        for &gamma in &table.families {
            let row: u64 = table.families.iter().map(|&g| table.e(gamma, g)).sum();
            prop_assert_eq!(table.total(gamma), row);
        }
    }
}

fn for_all_small(check: fn(&GroupCtx, &EnumerationResult) -> common::Check) {
    for (ctx, r) in small_cases() {
        check(&ctx, &r).unwrap();
    }
}

#[test]
fn every_brace_satisfies_the_brace_axiom() {
    for_all_small(|ctx, r| common::gfe_and_brace_axiom(ctx, r, 63));
}

#[test]
fn gamma_round_trips_through_regular_subgroups() {
    for (ctx, r) in small_cases() {
        let mut seen = HashSet::new();
        for b in &r.braces {
            let nu = nu_subgroup(&ctx, &b.gamma);
            assert!(is_regular(&ctx, &nu));
            assert_eq!(gamma_of_regular(&ctx, &nu), b.gamma);
            let key: BTreeSet<HolElement> = nu.into_iter().collect();
            assert!(seen.insert(key), "two braces share a regular subgroup");
        }
    }
}

#[test]
fn circle_group_is_never_exotic() {
    for_all_small(common::circle_types);
    for (ctx, r) in small_cases() {
        for b in &r.braces {
            assert_eq!(
                classify_iso_type(&circle_table(&ctx, &b.gamma)).unwrap(),
                b.circle_type
            );
        }
    }
}

#[test]
fn circle_inverse_matches_the_table() {
    for_all_small(common::circle_inverses);
}

#[test]
fn duality_is_an_involution_on_each_brace_set() {
    for_all_small(common::duality);
}

#[test]
fn kernel_contains_the_designated_subgroup_for_exactly_one_of_a_dual_pair() {
    for_all_small(common::kernel_dichotomy);
}

#[test]
fn nu_of_b_is_right_or_left_translations() {
    for_all_small(common::nu_of_b);
}

#[test]
fn orbits_partition_the_braces() {
    for (ctx, r) in small_cases() {
        let total: usize = r.orbits.iter().map(|o| o.length).sum();
        assert_eq!(total, r.len());
        for o in &r.orbits {
            assert_eq!(ctx.aut.len() % o.length, 0);
            assert_eq!(o.members.len(), o.length);
        }
        let trivial = GammaFunction::trivial(&ctx);
        let t = r.braces.iter().find(|b| b.gamma == trivial).unwrap();
        assert_eq!(r.orbits[t.orbit_id].length, 1);
    }
}

/// Sylow subgroups that `gamma` leaves invariant are subgroups of `(G, o)`,
/// and cyclic invariant subgroups keep their generator's order.
#[test]
fn invariant_subgroups_are_circle_subgroups() {
    for (ctx, r) in small_cases() {
        let g = &ctx.group;
        let n = g.order() as u32;
        let cyclic_subgroups: BTreeSet<Vec<Idx>> = g
            .elements()
            .map(|x| {
                let mut c = g.cyclic(x);
                c.sort();
                c
            })
            .collect();
        let q = ctx.spec().q as u32;
        let sylows: Vec<&Vec<Idx>> = cyclic_subgroups
            .iter()
            .filter(|h| {
                let m = h.len() as u32;
                m > 1 && (m == n / q || m == q)
            })
            .collect();
        for b in &r.braces {
            let gm = &b.gamma;
            for h in &sylows {
                let invariant = h.iter().all(|&y| {
                    h.iter()
                        .all(|&x| h.binary_search(&ctx.apply(gm.at(y), x)).is_ok())
                });
                if !invariant {
                    continue;
                }
                for &x in h.iter() {
                    for &y in h.iter() {
                        assert!(h.binary_search(&circle(&ctx, gm, x, y)).is_ok());
                    }
                }
                let gen = *h
                    .iter()
                    .find(|&&x| g.elem_order(x) as usize == h.len())
                    .unwrap();
                let mut k = 1;
                let mut y = gen;
                while y != 0 {
                    y = circle(&ctx, gm, y, gen);
                    k += 1;
                }
                assert_eq!(k, h.len());
            }
        }
    }
}

/// A gamma function that is a morphism kills every `x^-1 x^gamma(y)`.
#[test]
fn morphism_gammas_kill_twisted_commutators() {
    let ctx = GroupCtx::new(Family::Type4, 3, 2).unwrap();
    let r = structured_enumerate(&ctx).unwrap();
    let g = &ctx.group;
    let mut morphisms = 0;
    for b in &r.braces {
        if !is_morphism(&ctx, &b.gamma) {
            continue;
        }
        morphisms += 1;
        for x in g.elements() {
            for y in g.elements() {
                let c = g.mul(g.inv(x), ctx.apply(b.gamma.at(y), x));
                assert_eq!(b.gamma.at(c), ctx.aut.identity());
            }
        }
    }
    assert!(morphisms > 0);
}

#[test]
fn relative_gamma_function_on_a_cyclic_subgroup_is_unique() {
    common::rgf_uniqueness().unwrap();
}
