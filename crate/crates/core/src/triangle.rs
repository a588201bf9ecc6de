//! Comonad morphisms `φ : T ⇒ S`, the comparison functor `K` from sets to
//! S-coalgebras, the equalizer functor `D`, and the bijection
//! `Hom(K(Y), c) ≅ Map(Y, D(c))`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::comonad::{prefix_fmap, ProbeMorphism, ProbeUniverse};
use crate::emcat::{is_coalgebra_morphism, SCoalgebra};
use crate::fingroup::Group;
use crate::gset::{
    enumerate_equivariant_maps_bounded, s_product, t_product, GSet, GSetError,
};
use crate::verdict::{check_equivariant, compare_tables, compose, CheckList, Counterexample, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TriangleError {
    #[error("not a comonad morphism: {0}")]
    NotComonadMorphism(Counterexample),
    #[error("not a coalgebra morphism: {0}")]
    NotCoalgebraMorphism(Counterexample),
    #[error("family has wrong shape for the probe universe")]
    Malformed,
    #[error(transparent)]
    GSet(#[from] GSetError),
}

/// Base objects, their images under `T`, the base morphisms, `T` of each
/// base morphism, and the counits `ε̃_X : G×̃X → X`.
pub fn triangle_universe(base: &ProbeUniverse<GSet>) -> ProbeUniverse<GSet> {
    let k = base.objects.len();
    let mut objects = base.objects.clone();
    objects.extend(base.objects.iter().map(t_product));
    let mut morphisms = base.morphisms.clone();
    for m in &base.morphisms {
        let (a, b) = (&base.objects[m.src], &base.objects[m.dst]);
        let ng = a.group().order();
        morphisms.push(ProbeMorphism {
            src: m.src + k,
            dst: m.dst + k,
            table: prefix_fmap(ng, a.size(), b.size(), &m.table),
        });
    }
    for (i, x) in base.objects.iter().enumerate() {
        let n = x.size();
        let eps = (0..x.group().order() * n).map(|p| x.act(p / n, p % n)).collect();
        morphisms.push(ProbeMorphism {
            src: i + k,
            dst: i,
            table: eps,
        });
    }
    ProbeUniverse { objects, morphisms }
}

/// `f_X ≡ l₀` on every probe object.
pub fn constant_family(u: &ProbeUniverse<GSet>, l0: usize) -> Vec<Vec<usize>> {
    u.objects.iter().map(|x| vec![l0; x.size()]).collect()
}

/// `φ_X(g, x) = (g·f_X(x), gx)` as a table `G×̃X → L×X`.
pub fn phi_component(l: &GSet, x: &GSet, f: &[usize]) -> Vec<usize> {
    let n = x.size();
    (0..x.group().order() * n)
        .map(|p| {
            let (g, y) = (p / n, p % n);
            l.act(g, f[y]) * n + x.act(g, y)
        })
        .collect()
}

/// A comonad morphism `T ⇒ S`, stored as its family `f_X : X → L` over a
/// probe universe.
#[derive(Debug, Clone)]
pub struct ComonadMorphism {
    l: GSet,
    universe: ProbeUniverse<GSet>,
    family: Vec<Vec<usize>>,
}

impl ComonadMorphism {
    pub fn family(&self) -> &[Vec<usize>] {
        &self.family
    }

    pub fn component(&self, i: usize) -> Vec<usize> {
        phi_component(&self.l, &self.universe.objects[i], &self.family[i])
    }
}

/// Equivariance, the counit diagram, the comultiplication diagram at every
/// object whose `G×̃X` is also probed, and naturality along every probe
/// morphism.
pub fn check_phi(l: &GSet, u: &ProbeUniverse<GSet>, family: &[Vec<usize>]) -> CheckList {
    let mut out = CheckList::new();
    if family.len() != u.objects.len()
        || family
            .iter()
            .zip(&u.objects)
            .any(|(f, x)| f.len() != x.size() || f.iter().any(|&v| v >= l.size()))
    {
        out.push("shape", Verdict::fail("family shape", "", vec![], vec![], vec![]));
        return out;
    }
    let (mut equiv, mut counit, mut comult, mut nat) = (Verdict::Pass, Verdict::Pass, Verdict::Pass, Verdict::Pass);
    for (i, x) in u.objects.iter().enumerate() {
        let n = x.size();
        let ng = x.group().order();
        let tx = t_product(x);
        let sx = s_product(l, x);
        let phi = phi_component(l, x, &family[i]);
        if equiv.is_pass() {
            equiv = check_equivariant("φ equivariant", &tx, &sx, &phi);
        }
        if counit.is_pass() {
            let lhs: Vec<usize> = phi.iter().map(|&p| p % n).collect();
            let rhs: Vec<usize> = (0..ng * n).map(|p| x.act(p / n, p % n)).collect();
            counit = compare_tables("ε ∘ φ = ε̃", &tx, x, &lhs, &rhs);
        }
        if comult.is_pass() {
            if let Some(j) = u.objects.iter().position(|o| *o == tx) {
                // Δ ∘ φ = Sφ ∘ φT ∘ Δ̃
                let ssx = s_product(l, &sx);
                let lhs: Vec<usize> = phi.iter().map(|&p| (p / n) * l.size() * n + p).collect();
                let phi_t = phi_component(l, &tx, &family[j]);
                let delta_t: Vec<usize> = (0..ng * n).map(|p| (p / n) * ng * n + p % n).collect();
                let s_phi = prefix_fmap(l.size(), tx.size(), sx.size(), &phi);
                let rhs = compose(&s_phi, &compose(&phi_t, &delta_t));
                comult = compare_tables("Δ ∘ φ = Sφ ∘ φT ∘ Δ̃", &tx, &ssx, &lhs, &rhs);
            }
        }
    }
    for m in &u.morphisms {
        if !nat.is_pass() {
            break;
        }
        let (a, b) = (&u.objects[m.src], &u.objects[m.dst]);
        let ng = a.group().order();
        let tm = prefix_fmap(ng, a.size(), b.size(), &m.table);
        let sm = prefix_fmap(l.size(), a.size(), b.size(), &m.table);
        let lhs = compose(&phi_component(l, b, &family[m.dst]), &tm);
        let rhs = compose(&sm, &phi_component(l, a, &family[m.src]));
        nat = compare_tables("φ natural", &t_product(a), &s_product(l, b), &lhs, &rhs);
    }
    out.push("equivariance", equiv);
    out.push("counit", counit);
    out.push("comultiplication", comult);
    out.push("naturality", nat);
    out
}

pub fn phi_from_f(
    l: &GSet,
    u: &ProbeUniverse<GSet>,
    family: Vec<Vec<usize>>,
) -> Result<ComonadMorphism, TriangleError> {
    let checks = check_phi(l, u, &family);
    if checks.get("shape").is_some() {
        return Err(TriangleError::Malformed);
    }
    if let Verdict::Fail(c) = checks.verdict() {
        return Err(TriangleError::NotComonadMorphism(c));
    }
    Ok(ComonadMorphism {
        l: l.clone(),
        universe: u.clone(),
        family,
    })
}

/// Reads `f_X(x)` off the first coordinate of `candidate_X(1, x)` and
/// confirms the candidate has the forced form and is a comonad morphism.
pub fn classify_phi(
    l: &GSet,
    u: &ProbeUniverse<GSet>,
    candidates: &[Vec<usize>],
) -> Result<Vec<Vec<usize>>, TriangleError> {
    if candidates.len() != u.objects.len() {
        return Err(TriangleError::Malformed);
    }
    let mut family = Vec::with_capacity(candidates.len());
    for (x, cand) in u.objects.iter().zip(candidates) {
        let n = x.size();
        if cand.len() != x.group().order() * n {
            return Err(TriangleError::Malformed);
        }
        let f: Vec<usize> = x.points().map(|y| cand[y] / n).collect();
        let forced = phi_component(l, x, &f);
        if let Verdict::Fail(c) =
            compare_tables("candidate has the form (g·f(x), gx)", &t_product(x), &s_product(l, x), cand, &forced)
        {
            return Err(TriangleError::NotComonadMorphism(c));
        }
        family.push(f);
    }
    phi_from_f(l, u, family.clone())?;
    Ok(family)
}

/// All equivariant `G×̃X → L×X` satisfying the counit diagram at `X`.
pub fn enumerate_phi_components(l: &GSet, x: &GSet, bound: u128) -> Result<Vec<Vec<usize>>, TriangleError> {
    let tx = t_product(x);
    let sx = s_product(l, x);
    let n = x.size();
    let eps: Vec<usize> = tx.points().map(|p| x.act(p / n, p % n)).collect();
    Ok(enumerate_equivariant_maps_bounded(&tx, &sx, bound)?
        .into_iter()
        .map(|m| m.table().to_vec())
        .filter(|c| c.iter().map(|&p| p % n).eq(eps.iter().copied()))
        .collect())
}

/// `K(Y) = (G×̃Y, β₁(g, y) = g·f(y))` for a plain set `Y = {0, …, |f|-1}`,
/// with checks that its coaction is `φ_{G×̃Y} ∘ G×̃η` and that its
/// underlying G-set is the free one.
pub fn comparison_k(group: &Arc<Group>, l: &GSet, f: &[usize]) -> (SCoalgebra, CheckList) {
    let y = GSet::trivial(group, f.len()).with_label("Y");
    let fy = t_product(&y);
    let n = f.len();
    let beta1: Vec<usize> = fy.points().map(|p| l.act(p / n, f[p % n])).collect();
    let mut out = CheckList::new();
    let k = match crate::emcat::coalgebra_from_beta1(&fy, l, beta1) {
        Ok(k) => k,
        Err(_) => {
            out.push("β₁ equivariant", Verdict::fail("β₁ equivariant", "K(Y)", vec![], vec![], vec![]));
            let fallback = crate::emcat::cofree(&fy, l);
            return (fallback, out);
        }
    };
    out.push("β₁ equivariant", Verdict::Pass);
    // G×̃η : (g, y) ↦ (g, (1, y)); f on G×̃Y extended by f(a, y) = f(y)
    let ng = group.order();
    let eta: Vec<usize> = fy.points().map(|p| (p / n) * ng * n + p % n).collect();
    let f_ty: Vec<usize> = (0..ng * n).map(|p| f[p % n]).collect();
    let phi = phi_component(l, &fy, &f_ty);
    let via_phi = compose(&phi, &eta);
    out.push(
        "coaction = φ ∘ G×̃η",
        compare_tables("𝔲_Y = φ_{G×̃Y} ∘ G×̃η", &fy, &s_product(l, &fy), &k.coaction(), &via_phi),
    );
    out.push(
        "VK = F",
        if *k.base() == t_product(&y) {
            Verdict::Pass
        } else {
            Verdict::fail("VK(Y) = G×̃Y", "K(Y)", vec![], vec![], vec![])
        },
    );
    (k, out)
}

/// `D(c) = {x : f(x) = β₁(x)}`.
pub fn equalizer_d(c: &SCoalgebra, f: &[usize]) -> Vec<usize> {
    c.base().points().filter(|&x| f[x] == c.beta1(x)).collect()
}

/// Every point outside `d` has `f(x) != β₁(x)` and every point inside agrees.
pub fn check_equalizer(c: &SCoalgebra, f: &[usize], d: &[usize]) -> Verdict {
    for x in c.base().points() {
        let inside = d.contains(&x);
        if inside != (f[x] == c.beta1(x)) {
            return Verdict::fail("D is the equalizer", c.label(), vec![x], vec![f[x]], vec![c.beta1(x)]);
        }
    }
    Verdict::Pass
}

/// Summary of the `K ⊣ D` bijection at one `(Y, c)`.
#[derive(Debug, Clone)]
pub struct PiTheta {
    pub hom_count: u64,
    pub map_count: u64,
    pub equalizer: Vec<usize>,
    pub checks: CheckList,
}

fn odometer(choices: &[Vec<usize>], mut visit: impl FnMut(&[usize]) -> bool) {
    if choices.iter().any(|c| c.is_empty()) {
        return;
    }
    let mut idx = vec![0usize; choices.len()];
    let mut cur: Vec<usize> = choices.iter().map(|c| c[0]).collect();
    loop {
        if !visit(&cur) {
            return;
        }
        let mut k = choices.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                cur[k] = choices[k][idx[k]];
                break;
            }
            idx[k] = 0;
            cur[k] = choices[k][0];
        }
    }
}

/// `Π(h)(y) = h(1, y)` and `Θ(q)(g, y) = g·q(y)`, checked in both directions
/// over every coalgebra morphism `K(Y) → c` and every map `Y → D(c)`.
///
/// Morphisms out of the free `K(Y)` are enumerated orbit by orbit: the
/// image of `(1, y)` ranges over the points satisfying the coalgebra
/// condition there. When the full search space `|X|^|Y|` is at most
/// `brute_bound`, the count is also recomputed by filtering every
/// equivariant map.
pub fn pi_theta(
    group: &Arc<Group>,
    f_y: &[usize],
    c: &SCoalgebra,
    f_x: &[usize],
    brute_bound: u128,
) -> Result<PiTheta, TriangleError> {
    let l = c.l().clone();
    let (k, _) = comparison_k(group, &l, f_y);
    let x = c.base();
    let ny = f_y.len();
    let d = equalizer_d(c, f_x);
    let mut checks = CheckList::new();
    let per_orbit: Vec<Vec<usize>> = (0..ny)
        .map(|y| x.points().filter(|&t| c.beta1(t) == k.beta1(y)).collect())
        .collect();
    let theta = |q: &[usize]| -> Vec<usize> {
        k.base().points().map(|p| x.act(p / ny, q[p % ny])).collect()
    };
    let mut hom_count = 0u64;
    let mut hom_v = Verdict::Pass;
    odometer(&per_orbit, |imgs| {
        hom_count += 1;
        let h = theta(imgs);
        let v = is_coalgebra_morphism(&h, &k, c)
            .and_then(|| {
                let pi: Vec<usize> = (0..ny).map(|y| h[y]).collect();
                match pi.iter().position(|p| !d.contains(p)) {
                    None => Verdict::Pass,
                    Some(y) => Verdict::fail("Π(h) lands in D", c.label(), vec![y], vec![pi[y]], vec![]),
                }
            })
            .and_then(|| {
                let pi: Vec<usize> = (0..ny).map(|y| h[y]).collect();
                compare_tables("Θ(Π(h)) = h", k.base(), x, &theta(&pi), &h)
            });
        if !v.is_pass() {
            hom_v = v;
            return false;
        }
        true
    });
    let map_choices: Vec<Vec<usize>> = (0..ny).map(|_| d.clone()).collect();
    let mut map_count = 0u64;
    let mut map_v = Verdict::Pass;
    odometer(&map_choices, |q| {
        map_count += 1;
        let th = theta(q);
        let v = is_coalgebra_morphism(&th, &k, c).and_then(|| {
            let back: Vec<usize> = (0..ny).map(|y| th[y]).collect();
            if back == q {
                Verdict::Pass
            } else {
                Verdict::fail("Π(Θ(q)) = q", c.label(), q.to_vec(), back, q.to_vec())
            }
        });
        if !v.is_pass() {
            map_v = v;
            return false;
        }
        true
    });
    if ny == 0 {
        // the empty map on both sides
        hom_count = 1;
        map_count = 1;
    }
    checks.push("Θ ∘ Π = id", hom_v);
    checks.push("Π ∘ Θ = id", map_v);
    checks.push(
        "|Hom_coalg(K(Y), c)| = |D(c)|^|Y|",
        if hom_count == map_count {
            Verdict::Pass
        } else {
            Verdict::fail("hom counts", c.label(), vec![ny], vec![hom_count as usize], vec![map_count as usize])
        },
    );
    let space = (x.size() as u128).saturating_pow(ny as u32);
    if space <= brute_bound && ny > 0 {
        let brute = enumerate_equivariant_maps_bounded(k.base(), x, brute_bound)?
            .into_iter()
            .filter(|m| is_coalgebra_morphism(m.table(), &k, c).is_pass())
            .count() as u64;
        checks.push(
            "brute-force hom count",
            if brute == hom_count {
                Verdict::Pass
            } else {
                Verdict::fail("brute-force hom count", c.label(), vec![ny], vec![brute as usize], vec![hom_count as usize])
            },
        );
    }
    Ok(PiTheta {
        hom_count,
        map_count,
        equalizer: d,
        checks,
    })
}

/// Whether the unit `Y → D(K(Y))` and counit `K(D(c)) → c` of `K ⊣ D` are
/// bijective, for the constant family `l₀`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitCounitNote {
    pub unit_bijective: bool,
    pub counit_bijective: bool,
}

pub fn unit_counit_note(group: &Arc<Group>, l: &GSet, l0: usize, y_size: usize, c: &SCoalgebra) -> UnitCounitNote {
    let (k, _) = comparison_k(group, l, &vec![l0; y_size]);
    let dk = equalizer_d(&k, &vec![l0; k.base().size()]);
    // unit y ↦ (1, y), which is index y
    let unit_bijective = dk.len() == y_size && (0..y_size).all(|y| dk.contains(&y));
    let d = equalizer_d(c, &vec![l0; c.base().size()]);
    let x = c.base();
    let mut hit = vec![false; x.size()];
    let mut injective = true;
    for g in group.elements() {
        for &p in &d {
            let t = x.act(g, p);
            if hit[t] {
                injective = false;
            }
            hit[t] = true;
        }
    }
    UnitCounitNote {
        unit_bijective,
        counit_bijective: injective && hit.iter().all(|&h| h),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comonad::{default_universe, DEFAULT_PROBE_BOUND};
    use crate::emcat::{cofree, coalgebra_from_beta1};
    use crate::fingroup::{standard_group, GroupKind};

    fn grp(k: GroupKind) -> Arc<Group> {
        Arc::new(standard_group(&k).unwrap())
    }

    #[test]
    fn constant_families_are_comonad_morphisms() {
        let s3 = grp(GroupKind::Symmetric(3));
        let u = triangle_universe(&default_universe(&s3, DEFAULT_PROBE_BOUND).unwrap());
        for l in [GSet::conj(&s3), GSet::regular(&s3)] {
            for l0 in l.points() {
                let fam = constant_family(&u, l0);
                let phi = phi_from_f(&l, &u, fam.clone()).unwrap();
                let cands: Vec<Vec<usize>> = (0..u.objects.len()).map(|i| phi.component(i)).collect();
                assert_eq!(classify_phi(&l, &u, &cands).unwrap(), fam);
            }
        }
    }

    #[test]
    fn non_constant_family_fails_naturality() {
        let c2 = grp(GroupKind::Cyclic(2));
        let u = triangle_universe(&default_universe(&c2, DEFAULT_PROBE_BOUND).unwrap());
        let l = GSet::regular(&c2);
        let mut fam = constant_family(&u, 0);
        fam[0] = vec![0, 1];
        assert!(matches!(phi_from_f(&l, &u, fam), Err(TriangleError::NotComonadMorphism(_))));
    }

    #[test]
    fn wrong_second_coordinate_fails_counit() {
        let c2 = grp(GroupKind::Cyclic(2));
        let r = GSet::regular(&c2);
        let u = ProbeUniverse::new(vec![r.clone()], vec![], |x: &GSet| x.size()).unwrap();
        // φ₂(g, x) = x
        let bad: Vec<usize> = (0..4).map(|p| c2.mul(p / 2, 0) * 2 + p % 2).collect();
        let err = classify_phi(&r, &u, &[bad]);
        assert!(matches!(err, Err(TriangleError::NotComonadMorphism(_))));
    }

    #[test]
    fn brute_force_components_have_forced_form() {
        let c2 = grp(GroupKind::Cyclic(2));
        let l = GSet::regular(&c2);
        for x in [GSet::regular(&c2), GSet::point(&c2), GSet::conj(&c2)] {
            let found = enumerate_phi_components(&l, &x, 1 << 20).unwrap();
            assert_eq!(found.len(), l.size().pow(x.size() as u32));
            for c in found {
                let f: Vec<usize> = x.points().map(|y| c[y] / x.size()).collect();
                assert_eq!(c, phi_component(&l, &x, &f));
            }
        }
    }

    #[test]
    fn comparison_functor() {
        let c2 = grp(GroupKind::Cyclic(2));
        let l = GSet::regular(&c2);
        let (k, checks) = comparison_k(&c2, &l, &[0, 1]);
        assert!(checks.all_pass(), "{:?}", checks.verdict());
        assert!(k.base().is_free());
        assert_eq!(k.base().size(), 4);
        // 𝔲(a, y) = (a·f(y), a, y)
        assert_eq!(k.beta1(2), 1);
        assert_eq!(k.beta1(3), 0);
    }

    #[test]
    fn equalizer_examples() {
        let c2 = grp(GroupKind::Cyclic(2));
        let r = GSet::regular(&c2);
        let c = coalgebra_from_beta1(&r, &r, vec![0, 1]).unwrap();
        assert_eq!(equalizer_d(&c, &[0, 1]), vec![0, 1]);
        assert_eq!(equalizer_d(&c, &[0, 0]), vec![0]);
        assert_eq!(equalizer_d(&c, &[1, 0]), Vec::<usize>::new());
        assert!(check_equalizer(&c, &[0, 0], &[0]).is_pass());
        assert!(!check_equalizer(&c, &[0, 0], &[0, 1]).is_pass());
    }

    #[test]
    fn pi_theta_on_cofree_point() {
        let c2 = grp(GroupKind::Cyclic(2));
        for l in [GSet::regular(&c2), GSet::conj(&c2)] {
            let c = cofree(&GSet::point(&c2), &l);
            for l0 in l.points() {
                for ny in 0..=3 {
                    let pt = pi_theta(&c2, &vec![l0; ny], &c, &vec![l0; c.base().size()], 1 << 16).unwrap();
                    assert!(pt.checks.all_pass(), "{:?}", pt.checks.verdict());
                    assert_eq!(pt.hom_count, (pt.equalizer.len() as u64).pow(ny as u32));
                }
            }
        }
    }

    #[test]
    fn unit_and_counit_not_bijective() {
        let c2 = grp(GroupKind::Cyclic(2));
        let l = GSet::conj(&c2);
        let c = cofree(&GSet::point(&c2), &l);
        let note = unit_counit_note(&c2, &l, 0, 1, &c);
        assert!(!note.unit_bijective);
        assert!(!note.counit_bijective);
    }
}
