use std::sync::Arc;

use duplicial_core::coeff::{
    check_backward, check_forward, correspondence_round_trips, enumerate_configs, lambda_at, translation_witness,
    CodomainAction,
};
use duplicial_core::comonad::{
    build_s, build_t, check_comonad_laws, check_distributive_law, check_inverse, chi_tilde_transform, chi_transform,
    default_universe, derive_law_components, Context,
};
use duplicial_core::emcat::{check_q_comonad, coalgebra_universe, enumerate_coalgebras, lax_colax_report, q_comonad};
use duplicial_core::triangle::{check_phi, constant_family, pi_theta, triangle_universe};
use duplicial_core::{standard_group, GSet, Group, GroupKind};

fn grp(k: GroupKind) -> Arc<Group> {
    Arc::new(standard_group(&k).unwrap())
}

fn ls(g: &Arc<Group>) -> Vec<GSet> {
    vec![GSet::regular(g), GSet::conj(g), GSet::trivial(g, 2)]
}

#[test]
fn comonad_and_distributive_laws_on_small_groups() {
    for k in [GroupKind::Cyclic(2), GroupKind::Cyclic(3), GroupKind::Symmetric(3)] {
        let g = grp(k);
        let u = default_universe(&g, 8).unwrap();
        assert!(check_comonad_laws(&build_t(&g), &u).all_pass());
        for l in ls(&g) {
            assert!(check_comonad_laws(&build_s(&l), &u).all_pass());
            let cu = coalgebra_universe(&l, &u.objects, 4, 2).unwrap();
            assert!(check_q_comonad(&q_comonad(&l), &cu).all_pass());
            let ctx = Context::new(&l);
            let chi_t = chi_tilde_transform(&ctx);
            assert!(check_distributive_law(&chi_t, &u).all_pass());
            assert!(check_inverse(&chi_transform(&ctx), &chi_t, &u).is_pass());
            for x in &u.objects {
                assert!(derive_law_components(&chi_t, x).verdict.is_pass());
            }
        }
    }
}

#[test]
fn lax_and_colax_hold_exactly_at_the_identity() {
    for k in [GroupKind::Cyclic(3), GroupKind::Symmetric(3)] {
        let g = grp(k);
        let u = default_universe(&g, 8).unwrap();
        for l in ls(&g) {
            let ctx = Context::new(&l);
            let cu = coalgebra_universe(&l, &u.objects, 4, 2).unwrap();
            for a in g.elements() {
                let rep = lax_colax_report(&ctx, a, &u, &cu).unwrap();
                assert!(rep.meta_satisfied(), "ā = {a}");
                if a != 0 {
                    assert!(rep.lax.verdict().counterexample().is_some());
                    assert!(rep.colax.verdict().counterexample().is_some());
                }
            }
        }
    }
}

#[test]
fn correspondence_round_trips_for_translation_h() {
    for k in [GroupKind::Cyclic(2), GroupKind::Cyclic(4), GroupKind::Symmetric(3)] {
        let g = grp(k);
        let u = default_universe(&g, 8).unwrap();
        let l = GSet::regular(&g);
        let cu = coalgebra_universe(&l, &u.objects, 4, 2).unwrap();
        let configs = enumerate_configs(&l, &l, &CodomainAction::Translation, 1 << 20).unwrap();
        assert_eq!(configs.len(), g.order() * g.order());
        for cfg in configs.iter().step_by(g.order()) {
            let h = cfg.h();
            assert!(translation_witness(cfg).is_none());
            let rt = correspondence_round_trips(h, cfg.action(), &l, &u.objects, &cu.objects).unwrap();
            assert!(rt.all_pass(), "{:?}", rt.verdict());
            for c in &cu.objects {
                assert!(check_forward(h, cfg.action(), c).unwrap().all_pass());
            }
            for n in &u.objects {
                assert!(check_backward(h, cfg.action(), &l, n).unwrap().all_pass());
            }
        }
    }
}

#[test]
fn lambda_needs_translation_equivariant_h() {
    let g = grp(GroupKind::Cyclic(3));
    let l = GSet::conj(&g);
    let n = GSet::point(&g);
    // any h on conj(C3) is conjugation-equivariant, none is translation-equivariant
    assert!(lambda_at(&l, &[1, 1, 1], &CodomainAction::Conjugation, &n).is_err());
}

#[test]
fn constant_families_are_comonad_morphisms() {
    let g = grp(GroupKind::Symmetric(3));
    let u = triangle_universe(&default_universe(&g, 4).unwrap());
    for l in ls(&g) {
        for l0 in l.points() {
            let list = check_phi(&l, &u, &constant_family(&u, l0));
            assert!(list.all_pass(), "l0 = {l0}: {:?}", list.verdict());
        }
    }
}

#[test]
fn free_forgetful_hom_counts_match() {
    for k in [GroupKind::Cyclic(2), GroupKind::Cyclic(3), GroupKind::Symmetric(3)] {
        let g = grp(k);
        for l in ls(&g) {
            for x in [GSet::point(&g), GSet::regular(&g), GSet::conj(&g)] {
                for c in enumerate_coalgebras(&x, &l).unwrap().iter().take(6) {
                    for l0 in l.points() {
                        for ny in 1..=3 {
                            let pt = pi_theta(&g, &vec![l0; ny], c, &vec![l0; x.size()], 1 << 16).unwrap();
                            assert!(pt.checks.all_pass(), "{:?}", pt.checks.verdict());
                            assert_eq!(pt.hom_count, (pt.equalizer.len() as u64).pow(ny as u32) as _);
                        }
                    }
                }
            }
        }
    }
}
