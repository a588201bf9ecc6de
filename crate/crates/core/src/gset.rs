//! Finite G-sets, equivariant maps, orbits, the two product constructions
//! behind the comonads, and crossed G-sets with their braiding.
//!
//! Points of a product are encoded row-major with the left factor major:
//! the pair `(a, b)` of `A × B` is the index `a·|B| + b`. Every module relies
//! on this encoding.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use alloc::format;
use core::fmt;

use crate::fingroup::Group;

/// Default bound on the size of the search space walked by
/// [`enumerate_equivariant_maps`].
pub const DEFAULT_SEARCH_BOUND: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GSetError {
    #[error("action table has wrong shape or out-of-range entries")]
    MalformedTable,
    #[error("not an action: identity moves point {x}")]
    IdentityMoves { x: usize },
    #[error("not an action: g({g})·(h({h})·x({x})) != (gh)·x")]
    NotAnAction { g: usize, h: usize, x: usize },
    #[error("G-sets live over different groups")]
    GroupMismatch,
    #[error("map table has wrong length or out-of-range entries")]
    MalformedMap,
    #[error("map is not equivariant at g={g}, x={x}")]
    NotEquivariant { g: usize, x: usize },
    #[error("alpha is not crossed at g={g}, x={x}")]
    NotCrossed { g: usize, x: usize },
    #[error("search space {needed} exceeds bound {bound}")]
    SizeBoundExceeded { needed: u128, bound: u128 },
}

/// A finite set with a left action of a [`Group`].
#[derive(Clone)]
pub struct GSet {
    group: Arc<Group>,
    size: usize,
    act: Arc<[usize]>,
    // flattened factor sizes, used only to decode points for display
    factors: Arc<[usize]>,
    label: Arc<str>,
}

impl PartialEq for GSet {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
            && (Arc::ptr_eq(&self.group, &other.group) || self.group == other.group)
            && self.act == other.act
    }
}
impl Eq for GSet {}

impl fmt::Debug for GSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GSet({}, {} points)", self.label, self.size)
    }
}

impl GSet {
    /// Validates an `order × size` action table, row `g` holding `g·x`.
    pub fn from_table(group: Arc<Group>, rows: &[Vec<usize>]) -> Result<GSet, GSetError> {
        let order = group.order();
        if rows.len() != order {
            return Err(GSetError::MalformedTable);
        }
        let size = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != size || r.iter().any(|&v| v >= size)) {
            return Err(GSetError::MalformedTable);
        }
        let act: Vec<usize> = rows.iter().flatten().copied().collect();
        let x = GSet::raw(group, size, act, vec![size], "table".into());
        x.validate()?;
        Ok(x)
    }

    fn raw(group: Arc<Group>, size: usize, act: Vec<usize>, factors: Vec<usize>, label: String) -> GSet {
        GSet {
            group,
            size,
            act: act.into(),
            factors: factors.into(),
            label: label.into(),
        }
    }

    fn from_fn(
        group: &Arc<Group>,
        size: usize,
        factors: Vec<usize>,
        label: String,
        f: impl Fn(usize, usize) -> usize,
    ) -> GSet {
        let mut act = Vec::with_capacity(group.order() * size);
        for g in group.elements() {
            for x in 0..size {
                act.push(f(g, x));
            }
        }
        GSet::raw(group.clone(), size, act, factors, label)
    }

    fn validate(&self) -> Result<(), GSetError> {
        for x in 0..self.size {
            if self.act(0, x) != x {
                return Err(GSetError::IdentityMoves { x });
            }
        }
        for g in self.group.elements() {
            for h in self.group.elements() {
                let gh = self.group.mul(g, h);
                for x in 0..self.size {
                    if self.act(g, self.act(h, x)) != self.act(gh, x) {
                        return Err(GSetError::NotAnAction { g, h, x });
                    }
                }
            }
        }
        Ok(())
    }

    /// `G` acting on itself by left translation.
    pub fn regular(group: &Arc<Group>) -> GSet {
        GSet::from_fn(group, group.order(), vec![group.order()], "regular".into(), |g, x| {
            group.mul(g, x)
        })
    }

    /// `G` acting on itself by conjugation.
    pub fn conj(group: &Arc<Group>) -> GSet {
        GSet::from_fn(group, group.order(), vec![group.order()], "conj".into(), |g, x| {
            group.conjugate(g, x)
        })
    }

    /// `k` points, all fixed.
    pub fn trivial(group: &Arc<Group>, k: usize) -> GSet {
        GSet::from_fn(group, k, vec![k], format!("trivial({k})"), |_, x| x)
    }

    /// The terminal G-set.
    pub fn point(group: &Arc<Group>) -> GSet {
        GSet::from_fn(group, 1, vec![1], "point".into(), |_, x| x)
    }

    pub fn with_label(mut self, label: &str) -> GSet {
        self.label = label.into();
        self
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn points(&self) -> core::ops::Range<usize> {
        0..self.size
    }

    /// `g·x`.
    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.act[g * self.size + x]
    }

    /// Action table as `order` rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        if self.size == 0 {
            return vec![Vec::new(); self.group.order()];
        }
        self.act.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    /// Decodes a point into its flattened product coordinates.
    pub fn decode(&self, mut p: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &radix) in out.iter_mut().zip(self.factors.iter()).rev() {
            *slot = p % radix.max(1);
            p /= radix.max(1);
        }
        out
    }

    pub fn same_group(&self, other: &GSet) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || self.group == other.group
    }

    /// `{g : gx = x}`.
    pub fn stabilizer(&self, x: usize) -> Vec<usize> {
        self.group.elements().filter(|&g| self.act(g, x) == x).collect()
    }

    /// `{x : gx = x for all g}`.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.points()
            .filter(|&x| self.group.elements().all(|g| self.act(g, x) == x))
            .collect()
    }

    pub fn is_free(&self) -> bool {
        self.points().all(|x| self.stabilizer(x).len() == 1)
    }
}

/// `L × X` with the diagonal action `g(l, x) = (gl, gx)`.
pub fn s_product(l: &GSet, x: &GSet) -> GSet {
    assert!(l.same_group(x), "s_product over different groups");
    let n = x.size;
    let factors = [&l.factors[..], &x.factors[..]].concat();
    GSet::from_fn(
        &l.group,
        l.size * n,
        factors,
        format!("{}×{}", l.label, x.label),
        |g, p| l.act(g, p / n) * n + x.act(g, p % n),
    )
}

/// `G ×̃ X` with `g(a, x) = (ga, x)`; the action of `X` is forgotten.
pub fn t_product(x: &GSet) -> GSet {
    let group = x.group.clone();
    let n = x.size;
    let factors = [&[group.order()][..], &x.factors[..]].concat();
    GSet::from_fn(
        &group,
        group.order() * n,
        factors,
        format!("G×̃{}", x.label),
        |g, p| group.mul(g, p / n) * n + p % n,
    )
}

/// A function between the point sets of two G-sets.
///
/// Values built with [`EquivariantMap::new`] are checked; `new_unchecked`
/// admits arbitrary tables so that candidates and faults can be examined with
/// [`EquivariantMap::equivariance_witness`].
#[derive(Clone, PartialEq, Eq)]
pub struct EquivariantMap {
    domain: GSet,
    codomain: GSet,
    table: Vec<usize>,
}

impl fmt::Debug for EquivariantMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?}: {:?}", self.domain, self.codomain, self.table)
    }
}

impl EquivariantMap {
    pub fn new(domain: GSet, codomain: GSet, table: Vec<usize>) -> Result<Self, GSetError> {
        if !domain.same_group(&codomain) {
            return Err(GSetError::GroupMismatch);
        }
        let m = Self::new_unchecked(domain, codomain, table)?;
        if let Some((g, x)) = m.equivariance_witness() {
            return Err(GSetError::NotEquivariant { g, x });
        }
        Ok(m)
    }

    /// Checks only the shape of the table.
    pub fn new_unchecked(domain: GSet, codomain: GSet, table: Vec<usize>) -> Result<Self, GSetError> {
        if table.len() != domain.size || table.iter().any(|&y| y >= codomain.size) {
            return Err(GSetError::MalformedMap);
        }
        Ok(EquivariantMap { domain, codomain, table })
    }

    pub fn from_fn(domain: &GSet, codomain: &GSet, f: impl Fn(usize) -> usize) -> Self {
        let table = domain.points().map(f).collect();
        EquivariantMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            table,
        }
    }

    pub fn identity(x: &GSet) -> Self {
        Self::from_fn(x, x, |p| p)
    }

    pub fn domain(&self) -> &GSet {
        &self.domain
    }

    pub fn codomain(&self) -> &GSet {
        &self.codomain
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &EquivariantMap) -> EquivariantMap {
        debug_assert_eq!(first.codomain.size, self.domain.size);
        EquivariantMap {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            table: first.table.iter().map(|&y| self.table[y]).collect(),
        }
    }

    /// First `(g, x)` with `f(gx) != g f(x)`.
    pub fn equivariance_witness(&self) -> Option<(usize, usize)> {
        let group = self.domain.group();
        for x in self.domain.points() {
            for g in group.elements() {
                if self.apply(self.domain.act(g, x)) != self.codomain.act(g, self.apply(x)) {
                    return Some((g, x));
                }
            }
        }
        None
    }

    pub fn is_equivariant(&self) -> bool {
        self.equivariance_witness().is_none()
    }

    pub fn is_bijective(&self) -> bool {
        if self.domain.size != self.codomain.size {
            return false;
        }
        let mut seen = vec![false; self.codomain.size];
        self.table.iter().all(|&y| !core::mem::replace(&mut seen[y], true))
    }

    /// First point where two maps with the same domain disagree.
    pub fn first_difference(&self, other: &EquivariantMap) -> Option<usize> {
        self.table.iter().zip(&other.table).position(|(a, b)| a != b)
    }
}

/// Orbit decomposition with the minimal point index as canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSet {
    rep: Vec<usize>,
    reps: Vec<usize>,
}

impl OrbitSet {
    /// Canonical representative of the orbit of `x`.
    pub fn rep(&self, x: usize) -> usize {
        self.rep[x]
    }

    /// Representatives in increasing order.
    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    pub fn orbit_count(&self) -> usize {
        self.reps.len()
    }

    /// Position of the orbit of `x` among the representatives.
    pub fn class_index(&self, x: usize) -> usize {
        self.reps.binary_search(&self.rep[x]).unwrap_or(0)
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.reps
            .iter()
            .map(|&r| self.rep.iter().filter(|&&s| s == r).count())
            .collect()
    }

    pub fn members(&self, representative: usize) -> Vec<usize> {
        (0..self.rep.len()).filter(|&x| self.rep[x] == representative).collect()
    }
}

pub fn orbits(x: &GSet) -> OrbitSet {
    let mut rep = vec![usize::MAX; x.size];
    let mut reps = Vec::new();
    for p in x.points() {
        if rep[p] != usize::MAX {
            continue;
        }
        reps.push(p);
        for g in x.group.elements() {
            rep[x.act(g, p)] = p;
        }
    }
    OrbitSet { rep, reps }
}

pub fn stabilizer(x: &GSet, p: usize) -> Vec<usize> {
    x.stabilizer(p)
}

pub fn is_equivariant(x: &GSet, y: &GSet, table: &[usize]) -> bool {
    x.points().all(|p| {
        x.group
            .elements()
            .all(|g| table[x.act(g, p)] == y.act(g, table[p]))
    })
}

/// `Hom(X, Y)` with the default search bound.
pub fn enumerate_equivariant_maps(x: &GSet, y: &GSet) -> Result<Vec<EquivariantMap>, GSetError> {
    enumerate_equivariant_maps_bounded(x, y, DEFAULT_SEARCH_BOUND)
}

/// All equivariant maps `X → Y`.
///
/// Each orbit representative `r` of `X` is sent to a point `y` with
/// `Stab(r) ⊆ Stab(y)`, and the choice is extended by `g·r ↦ g·y`.
pub fn enumerate_equivariant_maps_bounded(
    x: &GSet,
    y: &GSet,
    bound: u128,
) -> Result<Vec<EquivariantMap>, GSetError> {
    if !x.same_group(y) {
        return Err(GSetError::GroupMismatch);
    }
    let orb = orbits(x);
    let needed = (y.size as u128).saturating_pow(orb.orbit_count() as u32);
    if needed > bound {
        return Err(GSetError::SizeBoundExceeded { needed, bound });
    }
    let group = x.group();
    let candidates: Vec<Vec<usize>> = orb
        .representatives()
        .iter()
        .map(|&r| {
            let stab = x.stabilizer(r);
            y.points()
                .filter(|&t| stab.iter().all(|&s| y.act(s, t) == t))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(out);
    }
    let mut choice = vec![0usize; candidates.len()];
    loop {
        let mut table = vec![usize::MAX; x.size];
        for (k, &r) in orb.representatives().iter().enumerate() {
            let target = candidates[k][choice[k]];
            for g in group.elements() {
                table[x.act(g, r)] = y.act(g, target);
            }
        }
        let m = EquivariantMap::new(x.clone(), y.clone(), table)?;
        out.push(m);
        // odometer, last orbit fastest
        let mut k = candidates.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// A G-set with `α : X → G` satisfying `α(gx) = g α(x) g⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedGSet {
    base: GSet,
    alpha: Vec<usize>,
}

impl CrossedGSet {
    pub fn base(&self) -> &GSet {
        &self.base
    }

    pub fn alpha(&self, x: usize) -> usize {
        self.alpha[x]
    }

    pub fn alpha_table(&self) -> &[usize] {
        &self.alpha
    }
}

/// First `(g, x)` violating the crossed axiom.
pub fn crossed_witness(x: &GSet, alpha: &[usize]) -> Option<(usize, usize)> {
    let group = x.group();
    for p in x.points() {
        for g in group.elements() {
            if alpha[x.act(g, p)] != group.conjugate(g, alpha[p]) {
                return Some((g, p));
            }
        }
    }
    None
}

pub fn crossed_from(x: &GSet, alpha: Vec<usize>) -> Result<CrossedGSet, GSetError> {
    if alpha.len() != x.size || alpha.iter().any(|&a| a >= x.group.order()) {
        return Err(GSetError::MalformedMap);
    }
    if let Some((g, p)) = crossed_witness(x, &alpha) {
        return Err(GSetError::NotCrossed { g, x: p });
    }
    Ok(CrossedGSet { base: x.clone(), alpha })
}

/// Every crossed structure on `X`.
///
/// On each orbit representative `r` the value `α(r)` ranges over elements
/// centralised by `Stab(r)`; it is then extended by `α(gr) = g α(r) g⁻¹`.
pub fn enumerate_crossed_structures(x: &GSet) -> Vec<CrossedGSet> {
    let group = x.group().clone();
    let orb = orbits(x);
    let candidates: Vec<Vec<usize>> = orb
        .representatives()
        .iter()
        .map(|&r| {
            let stab = x.stabilizer(r);
            group
                .elements()
                .filter(|&c| stab.iter().all(|&s| group.conjugate(s, c) == c))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    if candidates.iter().any(|c| c.is_empty()) {
        return out;
    }
    let mut choice = vec![0usize; candidates.len()];
    loop {
        let mut alpha = vec![0; x.size];
        for (k, &r) in orb.representatives().iter().enumerate() {
            let c = candidates[k][choice[k]];
            for g in group.elements() {
                alpha[x.act(g, r)] = group.conjugate(g, c);
            }
        }
        if crossed_witness(x, &alpha).is_none() {
            out.push(CrossedGSet { base: x.clone(), alpha });
        }
        let mut k = candidates.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// The monoidal product `X × Y` with `α(x, y) = α(x) α(y)` together with the
/// braiding `σ(x, y) = (y, α(y)·x)`.
pub fn crossed_monoidal(
    x: &CrossedGSet,
    y: &CrossedGSet,
) -> Result<(CrossedGSet, EquivariantMap), GSetError> {
    if !x.base.same_group(&y.base) {
        return Err(GSetError::GroupMismatch);
    }
    let group = x.base.group().clone();
    let prod = s_product(&x.base, &y.base);
    let ny = y.base.size;
    let alpha: Vec<usize> = prod
        .points()
        .map(|p| group.mul(x.alpha[p / ny], y.alpha[p % ny]))
        .collect();
    let product = crossed_from(&prod, alpha)?;
    let swapped = s_product(&y.base, &x.base);
    let braiding = braiding_map(x, y, &prod, &swapped);
    Ok((product, braiding))
}

fn braiding_map(x: &CrossedGSet, y: &CrossedGSet, xy: &GSet, yx: &GSet) -> EquivariantMap {
    let nx = x.base.size;
    let ny = y.base.size;
    EquivariantMap::from_fn(xy, yx, |p| {
        let (a, b) = (p / ny, p % ny);
        b * nx + x.base.act(y.alpha[b], a)
    })
}

/// Result of checking the braiding `σ_{X,Y}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidingReport {
    pub bijective: bool,
    pub equivariant: bool,
    /// First `(x, y)` with `α^{Y×X}(σ(x, y)) != α^{X×Y}(x, y)`.
    pub crossed_morphism_witness: Option<(usize, usize)>,
}

pub fn check_braiding(x: &CrossedGSet, y: &CrossedGSet) -> Result<BraidingReport, GSetError> {
    let (prod, sigma) = crossed_monoidal(x, y)?;
    let (swapped, _) = crossed_monoidal(y, x)?;
    let ny = y.base.size;
    let witness = prod
        .base
        .points()
        .find(|&p| swapped.alpha[sigma.apply(p)] != prod.alpha[p])
        .map(|p| (p / ny, p % ny));
    Ok(BraidingReport {
        bijective: sigma.is_bijective(),
        equivariant: sigma.is_equivariant(),
        crossed_morphism_witness: witness,
    })
}

/// Yang–Baxter on `X × Y × Z`:
/// `(σ_{Y,Z}×1)(1×σ_{X,Z})(σ_{X,Y}×1) = (1×σ_{X,Y})(σ_{X,Z}×1)(1×σ_{Y,Z})`.
/// Returns the first `(x, y, z)` where the two sides differ.
pub fn yang_baxter_witness(
    x: &CrossedGSet,
    y: &CrossedGSet,
    z: &CrossedGSet,
) -> Option<([usize; 3], [usize; 3], [usize; 3])> {
    // σ on a pair of crossed sets, acting on raw coordinates
    let sigma = |a: &CrossedGSet, b: &CrossedGSet, u: usize, v: usize| -> (usize, usize) {
        (v, a.base.act(b.alpha[v], u))
    };
    for a in x.base.points() {
        for b in y.base.points() {
            for c in z.base.points() {
                // left: (x,y,z) -> (y,x,z) -> (y,z,x) -> (z,y,x)
                let (y1, x1) = sigma(x, y, a, b);
                let (z1, x2) = sigma(x, z, x1, c);
                let (z2, y2) = sigma(y, z, y1, z1);
                let lhs = [z2, y2, x2];
                // right: (x,y,z) -> (x,z,y) -> (z,x,y) -> (z,y,x)
                let (z3, y3) = sigma(y, z, b, c);
                let (z4, x3) = sigma(x, z, a, z3);
                let (y4, x4) = sigma(x, y, x3, y3);
                let rhs = [z4, y4, x4];
                if lhs != rhs {
                    return Some(([a, b, c], lhs, rhs));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{standard_group, symmetric_index, GroupKind};

    fn grp(k: GroupKind) -> Arc<Group> {
        Arc::new(standard_group(&k).unwrap())
    }

    fn naive_maps(x: &GSet, y: &GSet) -> Vec<Vec<usize>> {
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
            if is_equivariant(x, y, &table) {
                out.push(table);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn regular_and_conj_actions() {
        let c2 = grp(GroupKind::Cyclic(2));
        assert_eq!(GSet::regular(&c2).act(1, 0), 1);
        let s3 = grp(GroupKind::Symmetric(3));
        let t12 = symmetric_index(&[1, 0, 2]).unwrap();
        let c123 = symmetric_index(&[1, 2, 0]).unwrap();
        let c132 = symmetric_index(&[2, 0, 1]).unwrap();
        assert_eq!(GSet::conj(&s3).act(t12, c123), c132);
    }

    #[test]
    fn bad_action_tables() {
        let c2 = grp(GroupKind::Cyclic(2));
        assert_eq!(
            GSet::from_table(c2.clone(), &[vec![1, 0], vec![1, 0]]),
            Err(GSetError::IdentityMoves { x: 0 })
        );
        // a·(a·x) should be x
        assert!(matches!(
            GSet::from_table(c2.clone(), &[vec![0, 1, 2], vec![1, 2, 0]]),
            Err(GSetError::NotAnAction { .. })
        ));
        assert_eq!(
            GSet::from_table(c2, &[vec![0, 1]]),
            Err(GSetError::MalformedTable)
        );
    }

    #[test]
    fn hom_counts() {
        let s3 = grp(GroupKind::Symmetric(3));
        let maps = enumerate_equivariant_maps(&GSet::point(&s3), &GSet::conj(&s3)).unwrap();
        assert_eq!(maps.len(), 1);
        assert_eq!(maps[0].apply(0), 0);
        let c3 = grp(GroupKind::Cyclic(3));
        let r = GSet::regular(&c3);
        assert_eq!(enumerate_equivariant_maps(&r, &r).unwrap().len(), 3);
        let c2 = grp(GroupKind::Cyclic(2));
        assert_eq!(
            enumerate_equivariant_maps(&GSet::regular(&c2), &GSet::point(&c2))
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn enumeration_matches_naive_filter() {
        for k in [GroupKind::Cyclic(2), GroupKind::Cyclic(3), GroupKind::Symmetric(3)] {
            let g = grp(k);
            let objs = [
                GSet::regular(&g),
                GSet::conj(&g),
                GSet::trivial(&g, 2),
                GSet::point(&g),
            ];
            for x in &objs {
                for y in &objs {
                    if (y.size() as u64).pow(x.size() as u32) > 1_000_000 {
                        continue;
                    }
                    let mut fast: Vec<Vec<usize>> = enumerate_equivariant_maps(x, y)
                        .unwrap()
                        .iter()
                        .map(|m| m.table().to_vec())
                        .collect();
                    fast.sort();
                    assert_eq!(fast, naive_maps(x, y), "{x:?} -> {y:?}");
                }
            }
        }
    }

    #[test]
    fn search_bound() {
        let c2 = grp(GroupKind::Cyclic(2));
        let t = GSet::trivial(&c2, 10);
        assert!(matches!(
            enumerate_equivariant_maps_bounded(&t, &t, 1000),
            Err(GSetError::SizeBoundExceeded { .. })
        ));
    }

    #[test]
    fn orbit_structure() {
        let c2 = grp(GroupKind::Cyclic(2));
        assert_eq!(orbits(&GSet::regular(&c2)).orbit_count(), 1);
        assert_eq!(orbits(&GSet::trivial(&c2, 3)).orbit_count(), 3);
        let s3 = grp(GroupKind::Symmetric(3));
        let o = orbits(&GSet::conj(&s3));
        assert_eq!(o.orbit_count(), 3);
        let mut sizes = o.orbit_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        // identity orbit first, then the transposition orbit (index 1 = (23)), then 3-cycles
        assert_eq!(o.orbit_sizes(), vec![1, 3, 2]);
    }

    #[test]
    fn stabilizers() {
        let s3 = grp(GroupKind::Symmetric(3));
        for x in GSet::regular(&s3).points() {
            assert_eq!(stabilizer(&GSet::regular(&s3), x), vec![0]);
        }
        let c123 = symmetric_index(&[1, 2, 0]).unwrap();
        let c132 = symmetric_index(&[2, 0, 1]).unwrap();
        let mut st = stabilizer(&GSet::conj(&s3), c123);
        st.sort();
        let mut expect = vec![0, c123, c132];
        expect.sort();
        assert_eq!(st, expect);
        assert_eq!(stabilizer(&GSet::point(&s3), 0).len(), 6);
    }

    #[test]
    fn products() {
        let s3 = grp(GroupKind::Symmetric(3));
        let l = GSet::conj(&s3);
        let x = GSet::regular(&s3);
        let lx = s_product(&l, &x);
        assert_eq!(lx.size(), 36);
        for g in s3.elements() {
            for p in lx.points() {
                let (a, b) = (p / 6, p % 6);
                assert_eq!(lx.act(g, p), l.act(g, a) * 6 + x.act(g, b));
            }
        }
        let tx = t_product(&l);
        assert!(tx.is_free());
        assert_eq!(orbits(&tx).orbit_count(), 6);
        assert_eq!(tx.act(2, 6 + 4), s3.mul(2, 1) * 6 + 4);
        // regular × point is isomorphic to regular
        let c2 = grp(GroupKind::Cyclic(2));
        let rp = s_product(&GSet::regular(&c2), &GSet::point(&c2));
        let isos: Vec<_> = enumerate_equivariant_maps(&rp, &GSet::regular(&c2))
            .unwrap()
            .into_iter()
            .filter(|m| m.is_bijective())
            .collect();
        assert!(!isos.is_empty());
    }

    #[test]
    fn crossed_examples() {
        let s3 = grp(GroupKind::Symmetric(3));
        for x in [GSet::regular(&s3), GSet::conj(&s3), GSet::trivial(&s3, 2)] {
            assert!(crossed_from(&x, vec![0; x.size()]).is_ok());
        }
        let c = GSet::conj(&s3);
        assert!(crossed_from(&c, c.points().collect()).is_ok());
        let only = enumerate_crossed_structures(&GSet::point(&s3));
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].alpha(0), 0);
        // α = id on regular(S3) is not crossed
        let r = GSet::regular(&s3);
        assert!(matches!(
            crossed_from(&r, r.points().collect()),
            Err(GSetError::NotCrossed { .. })
        ));
    }

    #[test]
    fn braiding_formulas() {
        let c2 = grp(GroupKind::Cyclic(2));
        let cc = GSet::conj(&c2);
        let x = crossed_from(&cc, vec![0, 1]).unwrap();
        let (_, sigma) = crossed_monoidal(&x, &x).unwrap();
        for p in 0..4 {
            let (a, b) = (p / 2, p % 2);
            assert_eq!(sigma.apply(p), b * 2 + a);
        }
        let s3 = grp(GroupKind::Symmetric(3));
        let conj = GSet::conj(&s3);
        let y = crossed_from(&conj, conj.points().collect()).unwrap();
        let (_, sigma) = crossed_monoidal(&y, &y).unwrap();
        let t12 = symmetric_index(&[1, 0, 2]).unwrap();
        let c123 = symmetric_index(&[1, 2, 0]).unwrap();
        let c132 = symmetric_index(&[2, 0, 1]).unwrap();
        assert_eq!(sigma.apply(c123 * 6 + t12), t12 * 6 + c132);
        // trivial α gives the plain swap
        let t = crossed_from(&GSet::regular(&s3), vec![0; 6]).unwrap();
        let (_, swap) = crossed_monoidal(&y, &t).unwrap();
        for p in 0..36 {
            assert_eq!(swap.apply(p), (p % 6) * 6 + p / 6);
        }
    }
}
