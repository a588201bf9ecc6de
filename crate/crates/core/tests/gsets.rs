use std::sync::Arc;

use duplicial_core::gset::{
    check_braiding, crossed_witness, enumerate_crossed_structures, enumerate_equivariant_maps, orbits, s_product,
    t_product, yang_baxter_witness,
};
use duplicial_core::{standard_group, GSet, Group, GroupKind};
use proptest::prelude::*;

fn grp(k: GroupKind) -> Arc<Group> {
    Arc::new(standard_group(&k).unwrap())
}

fn small_groups() -> Vec<Arc<Group>> {
    vec![
        grp(GroupKind::Cyclic(2)),
        grp(GroupKind::Cyclic(3)),
        grp(GroupKind::Cyclic(4)),
        grp(GroupKind::Symmetric(3)),
    ]
}

fn small_gsets(g: &Arc<Group>) -> Vec<GSet> {
    vec![GSet::point(g), GSet::trivial(g, 2), GSet::regular(g), GSet::conj(g)]
}

/// Every function `X → Y`, filtered by the equivariance equation.
fn naive_equivariant(x: &GSet, y: &GSet) -> Vec<Vec<usize>> {
    let total = (y.size() as u64).pow(x.size() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let table: Vec<usize> = (0..x.size())
            .map(|_| {
                let v = (c % y.size() as u64) as usize;
                c /= y.size() as u64;
                v
            })
            .collect();
        let ok = x
            .group()
            .elements()
            .all(|g| x.points().all(|p| table[x.act(g, p)] == y.act(g, table[p])));
        if ok {
            out.push(table);
        }
    }
    out.sort();
    out
}

#[test]
fn equivariant_enumeration_matches_naive_filter() {
    for g in small_groups() {
        for x in small_gsets(&g) {
            for y in small_gsets(&g) {
                if (y.size() as f64).powi(x.size() as i32) > 200_000.0 {
                    continue;
                }
                let mut fast: Vec<Vec<usize>> =
                    enumerate_equivariant_maps(&x, &y).unwrap().iter().map(|m| m.table().to_vec()).collect();
                fast.sort();
                assert_eq!(fast, naive_equivariant(&x, &y), "{} -> {}", x.label(), y.label());
            }
        }
    }
}

#[test]
fn braiding_preserves_alpha_exactly_under_the_square_condition() {
    for g in small_groups() {
        let mut structures = Vec::new();
        for x in small_gsets(&g) {
            structures.extend(enumerate_crossed_structures(&x).into_iter().take(4));
        }
        for x in &structures {
            assert!(crossed_witness(x.base(), x.alpha_table()).is_none());
            for y in &structures {
                let rep = check_braiding(x, y).unwrap();
                assert!(rep.bijective && rep.equivariant);
                let predicted = x.base().points().all(|a| {
                    y.base().points().all(|b| {
                        let (p, q) = (x.alpha(a), y.alpha(b));
                        let q2 = g.mul(q, q);
                        g.mul(q2, p) == g.mul(p, q2)
                    })
                });
                assert_eq!(rep.crossed_morphism_witness.is_none(), predicted);
            }
        }
    }
}

#[test]
fn braiding_fails_to_preserve_alpha_on_conj_s3() {
    let g = grp(GroupKind::Symmetric(3));
    let c = GSet::conj(&g);
    let inv: Vec<usize> = c.points().map(|x| g.inv(x)).collect();
    let x = enumerate_crossed_structures(&c)
        .into_iter()
        .find(|s| s.alpha_table() == inv.as_slice())
        .unwrap();
    assert!(check_braiding(&x, &x).unwrap().crossed_morphism_witness.is_some());
}

#[test]
fn yang_baxter_holds_for_crossed_structures() {
    for g in small_groups() {
        let mut structures = Vec::new();
        for x in small_gsets(&g) {
            structures.extend(enumerate_crossed_structures(&x).into_iter().take(2));
        }
        structures.truncate(6);
        for x in &structures {
            for y in &structures {
                for z in &structures {
                    assert_eq!(yang_baxter_witness(x, y, z), None);
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn orbits_partition_points(gi in 0usize..4, xi in 0usize..4, li in 0usize..4) {
        let g = &small_groups()[gi];
        let x = s_product(&small_gsets(g)[li], &small_gsets(g)[xi]);
        let o = orbits(&x);
        let mut seen = vec![0usize; x.size()];
        for &r in o.representatives() {
            let members = o.members(r);
            prop_assert_eq!(members.len() * x.stabilizer(r).len(), g.order());
            for m in members {
                seen[m] += 1;
                prop_assert_eq!(o.rep(m), r);
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
    }

    #[test]
    fn products_are_actions(gi in 0usize..4, xi in 0usize..4, a in 0usize..24, b in 0usize..24) {
        let g = &small_groups()[gi];
        let (a, b) = (a % g.order(), b % g.order());
        for x in [t_product(&small_gsets(g)[xi]), s_product(&GSet::conj(g), &small_gsets(g)[xi])] {
            for p in x.points() {
                prop_assert_eq!(x.act(0, p), p);
                prop_assert_eq!(x.act(g.mul(a, b), p), x.act(a, x.act(b, p)));
            }
        }
    }
}
