//! The comonads `S = L × −` and `T = G ×̃ −` on finite G-sets, comonad-law
//! checking over a probe universe, the bijection between `T N → S N` maps and
//! plain maps, the distributive law `χ` and its inverse, and mates.
//!
//! Composite functors are words in `S` and `T`, outermost letter first. A
//! point of `W(X)` for a word `W = w₁…w_k` is the tuple `(c₁, …, c_k, x)`
//! encoded row-major, `c_i` ranging over `L` for `S` and over `G` for `T`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::fingroup::Group;
use crate::gset::{
    enumerate_equivariant_maps_bounded, s_product, t_product, EquivariantMap, GSet, GSetError,
};
use crate::verdict::{check_equivariant, compare_tables, compose, CheckList, Verdict};

/// Default cap on the number of probe morphisms kept per ordered object pair.
pub const DEFAULT_PROBE_BOUND: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComonadError {
    #[error("incompatible functors: expected {expected}, found {found}")]
    IncompatibleFunctors { expected: String, found: String },
    #[error("map is not equivariant at g={g}, x={x}")]
    NotEquivariant { g: usize, x: usize },
    #[error("probe universe is inconsistent: {0}")]
    InvalidUniverse(&'static str),
    #[error(transparent)]
    GSet(#[from] GSetError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    S,
    T,
}

/// A composite of `S` and `T`, outermost first; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FunctorWord(Vec<Letter>);

impl FunctorWord {
    pub fn new(letters: &[Letter]) -> Self {
        FunctorWord(letters.to_vec())
    }

    pub fn id() -> Self {
        FunctorWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` followed (inside) by `inner`.
    pub fn then(&self, inner: &FunctorWord) -> FunctorWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&inner.0);
        FunctorWord(v)
    }
}

impl fmt::Display for FunctorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "id");
        }
        for l in &self.0 {
            write!(f, "{}", if *l == Letter::S { "S" } else { "T" })?;
        }
        Ok(())
    }
}

/// The data the functors depend on: the group and the fixed G-set `L`.
#[derive(Debug, Clone)]
pub struct Context {
    group: Arc<Group>,
    l: GSet,
}

impl Context {
    pub fn new(l: &GSet) -> Arc<Context> {
        Arc::new(Context {
            group: l.group().clone(),
            l: l.clone(),
        })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn l(&self) -> &GSet {
        &self.l
    }

    /// `W(X)`.
    pub fn apply(&self, w: &FunctorWord, x: &GSet) -> GSet {
        let mut out = x.clone();
        for letter in w.0.iter().rev() {
            out = match letter {
                Letter::S => s_product(&self.l, &out),
                Letter::T => t_product(&out),
            };
        }
        out
    }

    pub fn radices(&self, w: &FunctorWord) -> Vec<usize> {
        w.0.iter()
            .map(|l| match l {
                Letter::S => self.l.size(),
                Letter::T => self.group.order(),
            })
            .collect()
    }

    fn prefix_count(&self, w: &FunctorWord) -> usize {
        self.radices(w).iter().product()
    }

    /// `W(m)` for `m : X → Y`, which is the identity on the prefix.
    pub fn fmap(&self, w: &FunctorWord, src_size: usize, dst_size: usize, m: &[usize]) -> Vec<usize> {
        prefix_fmap(self.prefix_count(w), src_size, dst_size, m)
    }
}

/// `id_P × m` on `P × X`, encoded row-major.
pub fn prefix_fmap(prefix: usize, src_size: usize, dst_size: usize, m: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(prefix * src_size);
    for p in 0..prefix {
        for &y in m.iter().take(src_size) {
            out.push(p * dst_size + y);
        }
    }
    out
}

fn decode_radix(mut v: usize, radices: &[usize], out: &mut Vec<usize>) {
    out.clear();
    out.resize(radices.len(), 0);
    for (slot, &r) in out.iter_mut().zip(radices).rev() {
        *slot = v % r;
        v /= r;
    }
}

fn encode_radix(coords: &[usize], radices: &[usize]) -> usize {
    coords.iter().zip(radices).fold(0, |acc, (&c, &r)| acc * r + c)
}

type Builder = dyn Fn(&GSet) -> Vec<usize> + Send + Sync;

/// A natural transformation between two words, given by its component at
/// any G-set.
#[derive(Clone)]
pub struct NatTransform {
    name: String,
    ctx: Arc<Context>,
    source: FunctorWord,
    target: FunctorWord,
    build: Arc<Builder>,
}

impl fmt::Debug for NatTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} => {}", self.name, self.source, self.target)
    }
}

impl NatTransform {
    /// A transformation from a table-valued builder.
    pub fn from_builder(
        ctx: &Arc<Context>,
        name: &str,
        source: FunctorWord,
        target: FunctorWord,
        build: impl Fn(&GSet) -> Vec<usize> + Send + Sync + 'static,
    ) -> Self {
        NatTransform {
            name: name.to_string(),
            ctx: ctx.clone(),
            source,
            target,
            build: Arc::new(build),
        }
    }

    /// A transformation given on decoded coordinates: `f(G, X, prefix, x)`
    /// returns the target prefix and the target `X`-point.
    pub fn pointwise(
        ctx: &Arc<Context>,
        name: &str,
        source: FunctorWord,
        target: FunctorWord,
        f: impl Fn(&Group, &GSet, &[usize], usize) -> (Vec<usize>, usize) + Send + Sync + 'static,
    ) -> Self {
        let src_rad = ctx.radices(&source);
        let dst_rad = ctx.radices(&target);
        let group = ctx.group.clone();
        let build = move |x: &GSet| {
            let n = x.size();
            let total = src_rad.iter().product::<usize>() * n;
            let mut prefix = Vec::with_capacity(src_rad.len());
            let mut out = Vec::with_capacity(total);
            for p in 0..total {
                decode_radix(p / n, &src_rad, &mut prefix);
                let (q, y) = f(&group, x, &prefix, p % n);
                out.push(encode_radix(&q, &dst_rad) * n + y);
            }
            out
        };
        Self::from_builder(ctx, name, source, target, build)
    }

    pub fn identity(ctx: &Arc<Context>, w: FunctorWord) -> Self {
        let count = ctx.prefix_count(&w);
        Self::from_builder(ctx, "id", w.clone(), w, move |x| (0..count * x.size()).collect())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn source(&self) -> &FunctorWord {
        &self.source
    }

    pub fn target(&self) -> &FunctorWord {
        &self.target
    }

    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    /// Component table `source(X) → target(X)`.
    pub fn component(&self, x: &GSet) -> Vec<usize> {
        (self.build)(x)
    }

    /// Component as a map of G-sets, not checked for equivariance.
    pub fn component_map(&self, x: &GSet) -> EquivariantMap {
        let dom = self.ctx.apply(&self.source, x);
        let cod = self.ctx.apply(&self.target, x);
        let table = self.component(x);
        EquivariantMap::from_fn(&dom, &cod, |p| table[p])
    }

    /// Vertical composite `next ∘ self`.
    pub fn then(&self, next: &NatTransform) -> Result<NatTransform, ComonadError> {
        if self.target != next.source {
            return Err(ComonadError::IncompatibleFunctors {
                expected: self.target.to_string(),
                found: next.source.to_string(),
            });
        }
        let (a, b) = (self.build.clone(), next.build.clone());
        Ok(NatTransform {
            name: format!("{} . {}", next.name, self.name),
            ctx: self.ctx.clone(),
            source: self.source.clone(),
            target: next.target.clone(),
            build: Arc::new(move |x| compose(&b(x), &a(x))),
        })
    }

    /// `η W` with component `η_{W X}`.
    pub fn whisker_right(&self, w: &FunctorWord) -> NatTransform {
        let ctx = self.ctx.clone();
        let inner = w.clone();
        let b = self.build.clone();
        NatTransform {
            name: format!("{}{}", self.name, w),
            ctx: self.ctx.clone(),
            source: self.source.then(w),
            target: self.target.then(w),
            build: Arc::new(move |x| b(&ctx.apply(&inner, x))),
        }
    }

    /// `W η` with component `W(η_X)`.
    pub fn whisker_left(&self, w: &FunctorWord) -> NatTransform {
        let ctx = self.ctx.clone();
        let (src, dst) = (self.source.clone(), self.target.clone());
        let count = self.ctx.prefix_count(w);
        let b = self.build.clone();
        NatTransform {
            name: format!("{}{}", w, self.name),
            ctx: self.ctx.clone(),
            source: w.then(&self.source),
            target: w.then(&self.target),
            build: Arc::new(move |x| {
                let inner = b(x);
                let src_size = ctx.prefix_count(&src) * x.size();
                let dst_size = ctx.prefix_count(&dst) * x.size();
                prefix_fmap(count, src_size, dst_size, &inner)
            }),
        }
    }
}

/// Composes a chain of transformations, first to last.
pub fn chain(steps: &[&NatTransform]) -> Result<NatTransform, ComonadError> {
    let (first, rest) = steps
        .split_first()
        .ok_or(ComonadError::InvalidUniverse("empty chain"))?;
    let mut acc = (*first).clone();
    for s in rest {
        acc = acc.then(s)?;
    }
    Ok(acc)
}

pub fn word(letters: &[Letter]) -> FunctorWord {
    FunctorWord::new(letters)
}

/// `Δ : S ⇒ SS`, `(l, n) ↦ (l, l, n)`.
pub fn delta_s(ctx: &Arc<Context>) -> NatTransform {
    NatTransform::pointwise(ctx, "Δ", word(&[Letter::S]), word(&[Letter::S, Letter::S]), |_, _, p, x| {
        (vec![p[0], p[0]], x)
    })
}

/// `ε : S ⇒ id`, `(l, n) ↦ n`.
pub fn eps_s(ctx: &Arc<Context>) -> NatTransform {
    NatTransform::pointwise(ctx, "ε", word(&[Letter::S]), FunctorWord::id(), |_, _, _, x| {
        (Vec::new(), x)
    })
}

/// `Δ̃ : T ⇒ TT`, `(g, n) ↦ (g, 1, n)`.
pub fn delta_t(ctx: &Arc<Context>) -> NatTransform {
    NatTransform::pointwise(ctx, "Δ̃", word(&[Letter::T]), word(&[Letter::T, Letter::T]), |_, _, p, x| {
        (vec![p[0], 0], x)
    })
}

/// `ε̃ : T ⇒ id`, `(g, n) ↦ gn`.
pub fn eps_t(ctx: &Arc<Context>) -> NatTransform {
    NatTransform::pointwise(ctx, "ε̃", word(&[Letter::T]), FunctorWord::id(), |_, x, p, n| {
        (Vec::new(), x.act(p[0], n))
    })
}

/// `χ : TS ⇒ ST`, `(g, l, x) ↦ (gl, g, x)`.
pub fn chi_transform(ctx: &Arc<Context>) -> NatTransform {
    let l = ctx.l.clone();
    NatTransform::pointwise(
        ctx,
        "χ",
        word(&[Letter::T, Letter::S]),
        word(&[Letter::S, Letter::T]),
        move |_, _, p, x| (vec![l.act(p[0], p[1]), p[0]], x),
    )
}

/// `χ̃ : ST ⇒ TS`, `(l, g, x) ↦ (g, g⁻¹l, x)`.
pub fn chi_tilde_transform(ctx: &Arc<Context>) -> NatTransform {
    let l = ctx.l.clone();
    NatTransform::pointwise(
        ctx,
        "χ̃",
        word(&[Letter::S, Letter::T]),
        word(&[Letter::T, Letter::S]),
        move |grp, _, p, x| (vec![p[1], l.act(grp.inv(p[1]), p[0])], x),
    )
}

/// The component `χ_X : G×̃(L×X) → L×(G×̃X)`.
pub fn chi(l: &GSet, x: &GSet) -> EquivariantMap {
    chi_transform(&Context::new(l)).component_map(x)
}

/// The component `χ̃_X : L×(G×̃X) → G×̃(L×X)`.
pub fn chi_inverse(l: &GSet, x: &GSet) -> EquivariantMap {
    chi_tilde_transform(&Context::new(l)).component_map(x)
}

/// Both components at `X`, verified equivariant and mutually inverse.
pub fn chi_pair(l: &GSet, x: &GSet) -> Result<(EquivariantMap, EquivariantMap), ComonadError> {
    let c = chi(l, x);
    let ci = chi_inverse(l, x);
    for m in [&c, &ci] {
        if let Some((g, p)) = m.equivariance_witness() {
            return Err(ComonadError::NotEquivariant { g, x: p });
        }
    }
    let round = ci.after(&c);
    let back = c.after(&ci);
    if !round.table().iter().enumerate().all(|(i, &v)| i == v)
        || !back.table().iter().enumerate().all(|(i, &v)| i == v)
    {
        return Err(ComonadError::InvalidUniverse("χ and χ̃ are not inverse"));
    }
    Ok((c, ci))
}

/// A morphism of a probe universe, referring to objects by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeMorphism {
    pub src: usize,
    pub dst: usize,
    pub table: Vec<usize>,
}

/// A finite family of objects and morphisms standing in for "all objects".
#[derive(Debug, Clone)]
pub struct ProbeUniverse<O = GSet> {
    pub objects: Vec<O>,
    pub morphisms: Vec<ProbeMorphism>,
}

impl<O> ProbeUniverse<O> {
    pub fn new(
        objects: Vec<O>,
        morphisms: Vec<ProbeMorphism>,
        size: impl Fn(&O) -> usize,
    ) -> Result<Self, ComonadError> {
        for m in &morphisms {
            if m.src >= objects.len() || m.dst >= objects.len() {
                return Err(ComonadError::InvalidUniverse("morphism endpoint out of range"));
            }
            let (s, d) = (size(&objects[m.src]), size(&objects[m.dst]));
            if m.table.len() != s || m.table.iter().any(|&y| y >= d) {
                return Err(ComonadError::InvalidUniverse("morphism table has wrong shape"));
            }
        }
        Ok(ProbeUniverse { objects, morphisms })
    }
}

impl ProbeUniverse<GSet> {
    /// Objects with every equivariant map between them, at most `bound` per
    /// ordered pair (first in enumeration order).
    pub fn with_all_maps(objects: Vec<GSet>, bound: usize) -> Result<Self, ComonadError> {
        let mut morphisms = Vec::new();
        for (i, a) in objects.iter().enumerate() {
            for (j, b) in objects.iter().enumerate() {
                let maps = enumerate_equivariant_maps_bounded(a, b, crate::gset::DEFAULT_SEARCH_BOUND)?;
                for m in maps.into_iter().take(bound) {
                    morphisms.push(ProbeMorphism {
                        src: i,
                        dst: j,
                        table: m.table().to_vec(),
                    });
                }
            }
        }
        Ok(ProbeUniverse { objects, morphisms })
    }
}

/// `regular`, `conj`, `trivial(2)` and `point`, with all equivariant maps
/// between them (capped per pair by `bound`).
pub fn default_universe(group: &Arc<Group>, bound: usize) -> Result<ProbeUniverse<GSet>, ComonadError> {
    let objects = vec![
        GSet::regular(group),
        GSet::conj(group),
        GSet::trivial(group, 2),
        GSet::point(group),
    ];
    ProbeUniverse::with_all_maps(objects, bound)
}

/// A comonad whose objects have an underlying G-set and whose functor acts
/// on morphisms as the identity on a prefix.
pub trait Comonad {
    type Object: Clone;

    fn name(&self) -> String;
    /// Underlying G-set of an object.
    fn carrier(&self, o: &Self::Object) -> GSet;
    fn apply(&self, o: &Self::Object) -> Self::Object;
    /// `Δ_o : C o → C C o`.
    fn delta(&self, o: &Self::Object) -> Vec<usize>;
    /// `ε_o : C o → o`.
    fn epsilon(&self, o: &Self::Object) -> Vec<usize>;
    /// `C m` for a morphism `m : src → dst`.
    fn fmap(&self, src: &Self::Object, dst: &Self::Object, m: &[usize]) -> Vec<usize>;
}

/// `S = L × −`.
#[derive(Debug, Clone)]
pub struct SComonad {
    l: GSet,
}

/// `T = G ×̃ −`.
#[derive(Debug, Clone)]
pub struct TComonad {
    group: Arc<Group>,
}

pub fn build_s(l: &GSet) -> SComonad {
    SComonad { l: l.clone() }
}

pub fn build_t(group: &Arc<Group>) -> TComonad {
    TComonad { group: group.clone() }
}

impl SComonad {
    pub fn l(&self) -> &GSet {
        &self.l
    }
}

impl Comonad for SComonad {
    type Object = GSet;

    fn name(&self) -> String {
        format!("S[{}]", self.l.label())
    }

    fn carrier(&self, o: &GSet) -> GSet {
        o.clone()
    }

    fn apply(&self, o: &GSet) -> GSet {
        s_product(&self.l, o)
    }

    fn delta(&self, o: &GSet) -> Vec<usize> {
        let (nl, n) = (self.l.size(), o.size());
        (0..nl * n).map(|p| (p / n) * nl * n + p).collect()
    }

    fn epsilon(&self, o: &GSet) -> Vec<usize> {
        let n = o.size();
        (0..self.l.size() * n).map(|p| p % n).collect()
    }

    fn fmap(&self, src: &GSet, dst: &GSet, m: &[usize]) -> Vec<usize> {
        prefix_fmap(self.l.size(), src.size(), dst.size(), m)
    }
}

impl Comonad for TComonad {
    type Object = GSet;

    fn name(&self) -> String {
        String::from("T")
    }

    fn carrier(&self, o: &GSet) -> GSet {
        o.clone()
    }

    fn apply(&self, o: &GSet) -> GSet {
        t_product(o)
    }

    fn delta(&self, o: &GSet) -> Vec<usize> {
        let (ng, n) = (self.group.order(), o.size());
        // (g, x) ↦ (g, 1, x)
        (0..ng * n).map(|p| (p / n) * ng * n + p % n).collect()
    }

    fn epsilon(&self, o: &GSet) -> Vec<usize> {
        let n = o.size();
        (0..self.group.order() * n).map(|p| o.act(p / n, p % n)).collect()
    }

    fn fmap(&self, src: &GSet, dst: &GSet, m: &[usize]) -> Vec<usize> {
        prefix_fmap(self.group.order(), src.size(), dst.size(), m)
    }
}

/// Coassociativity, both counit laws, equivariance of `Δ` and `ε`, and their
/// naturality along every probe morphism.
pub fn check_comonad_laws<C: Comonad>(c: &C, u: &ProbeUniverse<C::Object>) -> CheckList {
    let mut out = CheckList::new();
    let mut coassoc = Verdict::Pass;
    let mut counit_l = Verdict::Pass;
    let mut counit_r = Verdict::Pass;
    let mut equiv = Verdict::Pass;
    for o in &u.objects {
        let co = c.apply(o);
        let cco = c.apply(&co);
        let ccco = c.apply(&cco);
        let (x, cx, ccx, cccx) = (c.carrier(o), c.carrier(&co), c.carrier(&cco), c.carrier(&ccco));
        let d = c.delta(o);
        let e = c.epsilon(o);
        let dc = c.delta(&co);
        let ec = c.epsilon(&co);
        if equiv.is_pass() {
            equiv = check_equivariant("Δ equivariant", &cx, &ccx, &d)
                .and_then(|| check_equivariant("ε equivariant", &cx, &x, &e));
        }
        if coassoc.is_pass() {
            let lhs = compose(&c.fmap(&co, &cco, &d), &d);
            let rhs = compose(&dc, &d);
            coassoc = compare_tables("CΔ ∘ Δ = ΔC ∘ Δ", &cx, &cccx, &lhs, &rhs);
        }
        let id: Vec<usize> = cx.points().collect();
        if counit_l.is_pass() {
            counit_l = compare_tables("εC ∘ Δ = id", &cx, &cx, &compose(&ec, &d), &id);
        }
        if counit_r.is_pass() {
            counit_r = compare_tables("Cε ∘ Δ = id", &cx, &cx, &compose(&c.fmap(&co, o, &e), &d), &id);
        }
    }
    let mut nat_d = Verdict::Pass;
    let mut nat_e = Verdict::Pass;
    for m in &u.morphisms {
        let (a, b) = (&u.objects[m.src], &u.objects[m.dst]);
        let (ca, cb) = (c.apply(a), c.apply(b));
        let cm = c.fmap(a, b, &m.table);
        let ccm = c.fmap(&ca, &cb, &cm);
        let (cax, ccbx, bx) = (c.carrier(&ca), c.carrier(&c.apply(&cb)), c.carrier(b));
        if nat_d.is_pass() {
            nat_d = compare_tables(
                "Δ natural",
                &cax,
                &ccbx,
                &compose(&c.delta(b), &cm),
                &compose(&ccm, &c.delta(a)),
            );
        }
        if nat_e.is_pass() {
            nat_e = compare_tables(
                "ε natural",
                &cax,
                &bx,
                &compose(&c.epsilon(b), &cm),
                &compose(&m.table, &c.epsilon(a)),
            );
        }
    }
    out.push("coassociativity", coassoc);
    out.push("left counit", counit_l);
    out.push("right counit", counit_r);
    out.push("equivariance", equiv);
    out.push("naturality of Δ", nat_d);
    out.push("naturality of ε", nat_e);
    out
}

/// Naturality of `η` along every probe morphism: `η_Y ∘ W(m) = V(m) ∘ η_X`.
pub fn check_naturality(eta: &NatTransform, u: &ProbeUniverse<GSet>) -> Verdict {
    let ctx = eta.context();
    for m in &u.morphisms {
        let (a, b) = (&u.objects[m.src], &u.objects[m.dst]);
        let sm = ctx.fmap(eta.source(), a.size(), b.size(), &m.table);
        let tm = ctx.fmap(eta.target(), a.size(), b.size(), &m.table);
        let lhs = compose(&eta.component(b), &sm);
        let rhs = compose(&tm, &eta.component(a));
        let dom = ctx.apply(eta.source(), a);
        let cod = ctx.apply(eta.target(), b);
        let v = compare_tables(&format!("{} natural", eta.name()), &dom, &cod, &lhs, &rhs);
        if !v.is_pass() {
            return v;
        }
    }
    Verdict::Pass
}

/// Every component equivariant.
pub fn check_components_equivariant(eta: &NatTransform, u: &ProbeUniverse<GSet>) -> Verdict {
    let ctx = eta.context();
    Verdict::all(u.objects.iter().map(|x| {
        let dom = ctx.apply(eta.source(), x);
        let cod = ctx.apply(eta.target(), x);
        check_equivariant(&format!("{} equivariant", eta.name()), &dom, &cod, &eta.component(x))
    }))
}

/// Componentwise equality of two parallel transformations.
pub fn check_equal(law: &str, lhs: &NatTransform, rhs: &NatTransform, u: &ProbeUniverse<GSet>) -> Verdict {
    if lhs.source() != rhs.source() || lhs.target() != rhs.target() {
        return Verdict::fail(
            format!("{law}: functor mismatch {lhs:?} vs {rhs:?}"),
            "",
            Vec::new(),
            Vec::new(),
            Vec::new(),
        );
    }
    let ctx = lhs.context();
    Verdict::all(u.objects.iter().map(|x| {
        let dom = ctx.apply(lhs.source(), x);
        let cod = ctx.apply(lhs.target(), x);
        compare_tables(law, &dom, &cod, &lhs.component(x), &rhs.component(x))
    }))
}

/// `b ∘ a = id` and `a ∘ b = id`.
pub fn check_inverse(a: &NatTransform, b: &NatTransform, u: &ProbeUniverse<GSet>) -> Verdict {
    let ctx = a.context().clone();
    let run = |first: &NatTransform, second: &NatTransform| -> Verdict {
        match first.then(second) {
            Ok(comp) => {
                let id = NatTransform::identity(&ctx, first.source().clone());
                check_equal(&format!("{} ∘ {} = id", second.name(), first.name()), &comp, &id, u)
            }
            Err(e) => Verdict::fail(e.to_string(), "", Vec::new(), Vec::new(), Vec::new()),
        }
    };
    run(a, b).and_then(|| run(b, a))
}

/// The hom bijection `θ : Hom(TN, SN) → Map(N, L×N)` and its inverse `ξ`.
#[derive(Debug, Clone)]
pub struct ThetaXi {
    n: GSet,
    l: GSet,
    tn: GSet,
    sn: GSet,
}

pub fn theta_xi(n: &GSet, l: &GSet) -> ThetaXi {
    ThetaXi {
        n: n.clone(),
        l: l.clone(),
        tn: t_product(n),
        sn: s_product(l, n),
    }
}

impl ThetaXi {
    pub fn tn(&self) -> &GSet {
        &self.tn
    }

    pub fn sn(&self) -> &GSet {
        &self.sn
    }

    /// `θ(ρ)(n) = ρ(1, n)`; rejects non-equivariant input.
    pub fn theta(&self, rho: &[usize]) -> Result<Vec<usize>, ComonadError> {
        let m = EquivariantMap::new_unchecked(self.tn.clone(), self.sn.clone(), rho.to_vec())?;
        if let Some((g, x)) = m.equivariance_witness() {
            return Err(ComonadError::NotEquivariant { g, x });
        }
        Ok(self.n.points().map(|p| rho[p]).collect())
    }

    /// `ξ(ρ̄)(a, n) = a·ρ̄(n)`.
    pub fn xi(&self, rho_bar: &[usize]) -> Vec<usize> {
        let n = self.n.size();
        self.tn.points().map(|p| self.sn.act(p / n, rho_bar[p % n])).collect()
    }

    /// Every plain map `N → L×N`, in lexicographic order of tables.
    pub fn all_plain_maps(&self) -> Vec<Vec<usize>> {
        let (n, m) = (self.n.size(), self.sn.size());
        let total = (m as u128).saturating_pow(n as u32);
        let mut out = Vec::new();
        if total > crate::gset::DEFAULT_SEARCH_BOUND {
            return out;
        }
        let mut cur = vec![0usize; n];
        loop {
            out.push(cur.clone());
            let mut k = n;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                cur[k] += 1;
                if cur[k] < m {
                    break;
                }
                cur[k] = 0;
            }
        }
    }

    pub fn l(&self) -> &GSet {
        &self.l
    }
}

/// The four compatibility diagrams of a candidate `λ : ST ⇒ TS`, plus
/// naturality and equivariance.
pub fn check_distributive_law(candidate: &NatTransform, u: &ProbeUniverse<GSet>) -> CheckList {
    let mut out = CheckList::new();
    let ctx = candidate.context().clone();
    let (s, t) = (word(&[Letter::S]), word(&[Letter::T]));
    let st = word(&[Letter::S, Letter::T]);
    let ts = word(&[Letter::T, Letter::S]);
    if candidate.source() != &st || candidate.target() != &ts {
        out.push(
            "shape",
            Verdict::fail(
                format!("expected ST => TS, found {candidate:?}"),
                "",
                Vec::new(),
                Vec::new(),
                Vec::new(),
            ),
        );
        return out;
    }
    let (ds, es, dt, et) = (delta_s(&ctx), eps_s(&ctx), delta_t(&ctx), eps_t(&ctx));
    let diagram = |name: &str, lhs: Result<NatTransform, ComonadError>, rhs: Result<NatTransform, ComonadError>| {
        match (lhs, rhs) {
            (Ok(a), Ok(b)) => check_equal(name, &a, &b, u),
            (Err(e), _) | (_, Err(e)) => Verdict::fail(e.to_string(), "", Vec::new(), Vec::new(), Vec::new()),
        }
    };
    // T-comultiplication: Tλ ∘ λT ∘ SΔ̃ = Δ̃S ∘ λ
    out.push(
        "comultiplication of T",
        diagram(
            "Tλ ∘ λT ∘ SΔ̃ = Δ̃S ∘ λ",
            chain(&[&dt.whisker_left(&s), &candidate.whisker_right(&t), &candidate.whisker_left(&t)]),
            candidate.then(&dt.whisker_right(&s)),
        ),
    );
    out.push(
        "counit of T",
        diagram("ε̃S ∘ λ = Sε̃", candidate.then(&et.whisker_right(&s)), Ok(et.whisker_left(&s))),
    );
    // S-comultiplication: λS ∘ Sλ ∘ ΔT = TΔ ∘ λ
    out.push(
        "comultiplication of S",
        diagram(
            "λS ∘ Sλ ∘ ΔT = TΔ ∘ λ",
            chain(&[&ds.whisker_right(&t), &candidate.whisker_left(&s), &candidate.whisker_right(&s)]),
            candidate.then(&ds.whisker_left(&t)),
        ),
    );
    out.push(
        "counit of S",
        diagram("Tε ∘ λ = εT", candidate.then(&es.whisker_left(&t)), Ok(es.whisker_right(&t))),
    );
    out.push("naturality", check_naturality(candidate, u));
    out.push("equivariance", check_components_equivariant(candidate, u));
    out
}

/// Values forced on a candidate `ST ⇒ TS` by the two counit diagrams, next
/// to the candidate's own output, per point `(l, g, x)` of `L×(G×̃X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawComponents {
    /// `(β, α, ξ)` solved from the right-hand sides of the counit diagrams.
    pub forced: Vec<[usize; 3]>,
    /// `(β, α, ξ)` read off the candidate.
    pub candidate: Vec<[usize; 3]>,
    pub verdict: Verdict,
}

/// Solves the counit conditions for the components of a candidate law at `X`.
///
/// With `λ(l, g, x) = (β, α, ξ)`, the diagram `Tε ∘ λ = εT` gives
/// `(β, ξ) = εT(l, g, x)` and `ε̃S ∘ λ = Sε̃` gives `β·α = l'` where
/// `(l', _) = Sε̃(l, g, x)`.
pub fn derive_law_components(candidate: &NatTransform, x: &GSet) -> LawComponents {
    let ctx = candidate.context().clone();
    let t = word(&[Letter::T]);
    let s = word(&[Letter::S]);
    let grp = ctx.group().clone();
    let l = ctx.l().clone();
    let st_x = ctx.apply(&word(&[Letter::S, Letter::T]), x);
    let tx = ctx.apply(&t, x);
    let eps_t_side = eps_s(&ctx).whisker_right(&t).component(x);
    let s_epst = eps_t(&ctx).whisker_left(&s).component(x);
    let cand = candidate.component(x);
    let mut forced = Vec::with_capacity(st_x.size());
    let mut got = Vec::with_capacity(st_x.size());
    let mut verdict = Verdict::Pass;
    for p in st_x.points() {
        let bx = tx.decode(eps_t_side[p]);
        let (beta, xi) = (bx[0], eps_t_side[p] % x.size());
        let lprime = s_epst[p] / x.size();
        let alpha = l.act(grp.inv(beta), lprime);
        let f = [beta, alpha, xi];
        let c = cand[p];
        let n = x.size();
        let g = [c / (l.size() * n), (c / n) % l.size(), c % n];
        if verdict.is_pass() && f != g {
            verdict = Verdict::fail(
                "candidate differs from forced components",
                x.label(),
                st_x.decode(p),
                g.to_vec(),
                f.to_vec(),
            );
        }
        forced.push(f);
        got.push(g);
    }
    LawComponents { forced, candidate: got, verdict }
}

/// Every equivariant component `L×(G×̃X) → G×̃(L×X)` at `X` that satisfies
/// both counit diagrams.
///
/// Both diagrams compare equivariant maps, so they hold everywhere once they
/// hold at orbit representatives. The search therefore picks, per orbit, an
/// image with a large enough stabilizer that meets both conditions there;
/// `bound` caps the number of combinations.
pub fn enumerate_counit_compatible(
    ctx: &Arc<Context>,
    x: &GSet,
    bound: u128,
) -> Result<Vec<Vec<usize>>, ComonadError> {
    let s = word(&[Letter::S]);
    let t = word(&[Letter::T]);
    let dom = ctx.apply(&word(&[Letter::S, Letter::T]), x);
    let cod = ctx.apply(&word(&[Letter::T, Letter::S]), x);
    let lhs_t = eps_t(ctx).whisker_right(&s).component(x);
    let rhs_t = eps_t(ctx).whisker_left(&s).component(x);
    let lhs_s = eps_s(ctx).whisker_left(&t).component(x);
    let rhs_s = eps_s(ctx).whisker_right(&t).component(x);
    let group = ctx.group().clone();
    let reps = crate::gset::orbits(&dom).representatives().to_vec();
    let mut choices: Vec<Vec<usize>> = Vec::with_capacity(reps.len());
    let mut total: u128 = 1;
    for &p in &reps {
        let stab = dom.stabilizer(p);
        let ok: Vec<usize> = cod
            .points()
            .filter(|&q| lhs_t[q] == rhs_t[p] && lhs_s[q] == rhs_s[p])
            .filter(|&q| stab.iter().all(|&g| cod.act(g, q) == q))
            .collect();
        total = total.saturating_mul(ok.len() as u128);
        choices.push(ok);
    }
    if total > bound {
        return Err(GSetError::SizeBoundExceeded { needed: total, bound }.into());
    }
    if total == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pick = vec![0usize; reps.len()];
    loop {
        let mut table = vec![usize::MAX; dom.size()];
        for (k, &p) in reps.iter().enumerate() {
            let q = choices[k][pick[k]];
            for g in group.elements() {
                table[dom.act(g, p)] = cod.act(g, q);
            }
        }
        out.push(table);
        let mut k = 0;
        while k < pick.len() {
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
        if k == pick.len() {
            return Ok(out);
        }
    }
}

/// Which adjunction a mate is taken across.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Adjunction {
    /// Free G-set on a set, left adjoint to the forgetful functor; the lift
    /// data is `Ω : CU ⇒ US` given as an `S ⇒ S` transformation.
    FreeForgetful,
    /// Forgetful functor from S-coalgebras, left adjoint to the cofree
    /// functor; the lift data is `Ω̃ : QF^S ⇒ F^S T` given as `TS ⇒ ST`.
    CofreeForgetful,
}

/// The mate of a lift datum across an adjunction, evaluated pointwise.
#[derive(Debug, Clone)]
pub struct Mate {
    adjunction: Adjunction,
    omega: NatTransform,
}

pub fn mate(omega: &NatTransform, adjunction: Adjunction) -> Result<Mate, ComonadError> {
    let (src, dst) = match adjunction {
        Adjunction::FreeForgetful => (word(&[Letter::S]), word(&[Letter::S])),
        Adjunction::CofreeForgetful => (word(&[Letter::T, Letter::S]), word(&[Letter::S, Letter::T])),
    };
    if omega.source() != &src || omega.target() != &dst {
        return Err(ComonadError::IncompatibleFunctors {
            expected: format!("{src} => {dst}"),
            found: format!("{} => {}", omega.source(), omega.target()),
        });
    }
    Ok(Mate {
        adjunction,
        omega: omega.clone(),
    })
}

impl Mate {
    pub fn adjunction(&self) -> Adjunction {
        self.adjunction
    }

    /// `Λ_{UX} = εSF ∘ FΩF ∘ FCη` as a map `G×̃(L×X) → L×(G×̃X)`.
    pub fn at_gset(&self, x: &GSet) -> Result<Vec<usize>, ComonadError> {
        if self.adjunction != Adjunction::FreeForgetful {
            return Err(ComonadError::IncompatibleFunctors {
                expected: String::from("free/forgetful adjunction"),
                found: String::from("cofree/forgetful adjunction"),
            });
        }
        let ctx = self.omega.context();
        let (ng, nl, n) = (ctx.group().order(), ctx.l().size(), x.size());
        let fy = t_product(x);
        let sfy = s_product(ctx.l(), &fy);
        let omega = self.omega.component(&fy);
        let mut out = Vec::with_capacity(ng * nl * n);
        for g in 0..ng {
            for l in 0..nl {
                for y in 0..n {
                    // FCη: (g, l, y) ↦ (g, l, (1, y))
                    let inner = l * ng * n + y;
                    // FΩF, then the counit ε(g, p) = g·p
                    out.push(sfy.act(g, omega[inner]));
                }
            }
        }
        Ok(out)
    }

    /// `Λ̃_{(X,β)} = εT ∘ Ω̃ ∘ Tβ` as a map `G×̃X → G×̃X`, for a coalgebra
    /// with structure map `β₁ : X → L`.
    pub fn at_coalgebra(&self, x: &GSet, beta1: &[usize]) -> Result<Vec<usize>, ComonadError> {
        if self.adjunction != Adjunction::CofreeForgetful {
            return Err(ComonadError::IncompatibleFunctors {
                expected: String::from("cofree/forgetful adjunction"),
                found: String::from("free/forgetful adjunction"),
            });
        }
        let ctx = self.omega.context();
        let (ng, nl, n) = (ctx.group().order(), ctx.l().size(), x.size());
        let omega = self.omega.component(x);
        let mut out = Vec::with_capacity(ng * n);
        for g in 0..ng {
            for y in 0..n {
                // VQη: (g, y) ↦ (g, β₁(y), y)
                let p = (g * nl + beta1[y]) * n + y;
                // Ω̃ lands in L×(G×̃X); the counit drops the L-coordinate
                out.push(omega[p] % (ng * n));
            }
        }
        Ok(out)
    }

    /// The free/forgetful mate as a transformation `TS ⇒ ST`.
    pub fn as_transform(&self) -> Result<NatTransform, ComonadError> {
        if self.adjunction != Adjunction::FreeForgetful {
            return Err(ComonadError::IncompatibleFunctors {
                expected: String::from("free/forgetful adjunction"),
                found: String::from("cofree/forgetful adjunction"),
            });
        }
        let me = self.clone();
        Ok(NatTransform::from_builder(
            self.omega.context(),
            "mate",
            word(&[Letter::T, Letter::S]),
            word(&[Letter::S, Letter::T]),
            move |x| me.at_gset(x).unwrap_or_default(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{standard_group, symmetric_index, GroupKind};

    fn grp(k: GroupKind) -> Arc<Group> {
        Arc::new(standard_group(&k).unwrap())
    }

    #[test]
    fn s_and_t_structure_maps() {
        let c2 = grp(GroupKind::Cyclic(2));
        let l = GSet::regular(&c2);
        let ctx = Context::new(&l);
        let x = GSet::point(&c2);
        // Δ(l, n) = (l, l, n)
        let d = delta_s(&ctx).component(&x);
        assert_eq!(d, vec![0, 3]);
        assert_eq!(d, build_s(&l).delta(&x));
        let dt = delta_t(&ctx).component(&x);
        assert_eq!(dt, build_t(&c2).delta(&x));
        assert_eq!(dt, vec![0, 2]);
        let s3 = grp(GroupKind::Symmetric(3));
        let conj = GSet::conj(&s3);
        let t12 = symmetric_index(&[1, 0, 2]).unwrap();
        let c123 = symmetric_index(&[1, 2, 0]).unwrap();
        let c132 = symmetric_index(&[2, 0, 1]).unwrap();
        let e = build_t(&s3).epsilon(&conj);
        assert_eq!(e[t12 * 6 + c123], c132);
    }

    #[test]
    fn laws_hold_on_small_fixtures() {
        for k in [GroupKind::Cyclic(2), GroupKind::Symmetric(3)] {
            let g = grp(k);
            let u = default_universe(&g, DEFAULT_PROBE_BOUND).unwrap();
            for l in [GSet::regular(&g), GSet::conj(&g), GSet::trivial(&g, 2)] {
                let c = check_comonad_laws(&build_s(&l), &u);
                assert!(c.all_pass(), "{:?}", c.verdict());
            }
            let c = check_comonad_laws(&build_t(&g), &u);
            assert!(c.all_pass(), "{:?}", c.verdict());
        }
    }

    #[test]
    fn whiskering_matches_direct_formulas() {
        let c3 = grp(GroupKind::Cyclic(3));
        let ctx = Context::new(&GSet::conj(&c3));
        let x = GSet::regular(&c3);
        let s = word(&[Letter::S]);
        let left = delta_t(&ctx).whisker_left(&s).component(&x);
        let direct = NatTransform::pointwise(
            &ctx,
            "SΔ̃",
            word(&[Letter::S, Letter::T]),
            word(&[Letter::S, Letter::T, Letter::T]),
            |_, _, p, y| (vec![p[0], p[1], 0], y),
        )
        .component(&x);
        assert_eq!(left, direct);
        let right = eps_t(&ctx).whisker_right(&s).component(&x);
        let l = ctx.l().clone();
        let direct = NatTransform::pointwise(
            &ctx,
            "ε̃S",
            word(&[Letter::T, Letter::S]),
            word(&[Letter::S]),
            move |_, x, p, y| (vec![l.act(p[0], p[1])], x.act(p[0], y)),
        )
        .component(&x);
        assert_eq!(right, direct);
    }

    #[test]
    fn theta_xi_round_trips() {
        let c2 = grp(GroupKind::Cyclic(2));
        let r = GSet::regular(&c2);
        let tx = theta_xi(&r, &r);
        let plain = tx.all_plain_maps();
        assert_eq!(plain.len(), 16);
        for rb in &plain {
            let rho = tx.xi(rb);
            assert_eq!(&tx.theta(&rho).unwrap(), rb);
            for a in 0..2 {
                for n in 0..2 {
                    assert_eq!(rho[a * 2 + n], tx.sn().act(a, rb[n]));
                }
            }
        }
        let maps = enumerate_equivariant_maps_bounded(tx.tn(), tx.sn(), 1 << 20).unwrap();
        assert_eq!(maps.len(), 16);
        for m in maps {
            let back = tx.xi(&tx.theta(m.table()).unwrap());
            assert_eq!(back, m.table());
        }
        assert!(matches!(tx.theta(&[0, 0, 0, 0]), Err(ComonadError::NotEquivariant { .. })));
    }

    #[test]
    fn chi_examples() {
        let c2 = grp(GroupKind::Cyclic(2));
        let (c, ci) = chi_pair(&GSet::regular(&c2), &GSet::point(&c2)).unwrap();
        // χ(a, e, *) = (a, a, *)
        assert_eq!(c.apply(2), 3);
        assert_eq!(ci.apply(3), 2);
        let s3 = grp(GroupKind::Symmetric(3));
        let conj = GSet::conj(&s3);
        let pt = GSet::point(&s3);
        let ci = chi_inverse(&conj, &pt);
        let t12 = symmetric_index(&[1, 0, 2]).unwrap();
        let c123 = symmetric_index(&[1, 2, 0]).unwrap();
        let c132 = symmetric_index(&[2, 0, 1]).unwrap();
        assert_eq!(ci.apply(c123 * 6 + t12), t12 * 6 + c132);
    }

    #[test]
    fn chi_tilde_is_a_distributive_law() {
        let s3 = grp(GroupKind::Symmetric(3));
        let u = default_universe(&s3, DEFAULT_PROBE_BOUND).unwrap();
        let ctx = Context::new(&GSet::conj(&s3));
        let c = check_distributive_law(&chi_tilde_transform(&ctx), &u);
        assert!(c.all_pass(), "{:?}", c.verdict());
        for x in &u.objects {
            let d = derive_law_components(&chi_tilde_transform(&ctx), x);
            assert!(d.verdict.is_pass());
        }
    }

    #[test]
    fn naive_swap_fails_counit() {
        let c2 = grp(GroupKind::Cyclic(2));
        let u = default_universe(&c2, DEFAULT_PROBE_BOUND).unwrap();
        let ctx = Context::new(&GSet::regular(&c2));
        let swap = NatTransform::pointwise(
            &ctx,
            "swap",
            word(&[Letter::S, Letter::T]),
            word(&[Letter::T, Letter::S]),
            |_, _, p, x| (vec![p[1], p[0]], x),
        );
        let c = check_distributive_law(&swap, &u);
        assert!(!c.get("counit of T").unwrap().is_pass());
        assert!(!derive_law_components(&swap, &GSet::point(&c2)).verdict.is_pass());
    }

    #[test]
    fn unique_counit_compatible_component() {
        let c2 = grp(GroupKind::Cyclic(2));
        let ctx = Context::new(&GSet::regular(&c2));
        for x in [GSet::point(&c2), GSet::regular(&c2)] {
            let found = enumerate_counit_compatible(&ctx, &x, 1 << 20).unwrap();
            assert_eq!(found, vec![chi_tilde_transform(&ctx).component(&x)]);
        }
    }

    #[test]
    fn orbitwise_search_matches_filtered_enumeration() {
        let c3 = grp(GroupKind::Cyclic(3));
        for l in [GSet::conj(&c3), GSet::trivial(&c3, 2), GSet::regular(&c3)] {
            let ctx = Context::new(&l);
            let x = GSet::point(&c3);
            let s = word(&[Letter::S]);
            let t = word(&[Letter::T]);
            let dom = ctx.apply(&word(&[Letter::S, Letter::T]), &x);
            let cod = ctx.apply(&word(&[Letter::T, Letter::S]), &x);
            let lhs_t = eps_t(&ctx).whisker_right(&s).component(&x);
            let rhs_t = eps_t(&ctx).whisker_left(&s).component(&x);
            let lhs_s = eps_s(&ctx).whisker_left(&t).component(&x);
            let rhs_s = eps_s(&ctx).whisker_right(&t).component(&x);
            let mut brute: Vec<Vec<usize>> = enumerate_equivariant_maps_bounded(&dom, &cod, 1 << 24)
                .unwrap()
                .into_iter()
                .map(|m| m.table().to_vec())
                .filter(|c| compose(&lhs_t, c) == rhs_t && compose(&lhs_s, c) == rhs_s)
                .collect();
            brute.sort();
            let mut fast = enumerate_counit_compatible(&ctx, &x, 1 << 20).unwrap();
            fast.sort();
            assert_eq!(fast, brute);
            assert_eq!(fast.len(), 1);
        }
    }

    #[test]
    fn mate_of_identity_is_chi() {
        let s3 = grp(GroupKind::Symmetric(3));
        let ctx = Context::new(&GSet::conj(&s3));
        let id = NatTransform::identity(&ctx, word(&[Letter::S]));
        let m = mate(&id, Adjunction::FreeForgetful).unwrap();
        for x in [GSet::regular(&s3), GSet::point(&s3)] {
            assert_eq!(m.at_gset(&x).unwrap(), chi_transform(&ctx).component(&x));
        }
        assert!(matches!(
            mate(&id, Adjunction::CofreeForgetful),
            Err(ComonadError::IncompatibleFunctors { .. })
        ));
    }

    #[test]
    fn incompatible_composition_is_an_error() {
        let c2 = grp(GroupKind::Cyclic(2));
        let ctx = Context::new(&GSet::regular(&c2));
        assert!(delta_s(&ctx).then(&delta_t(&ctx)).is_err());
        assert!(chain(&[&delta_s(&ctx), &eps_s(&ctx).whisker_left(&word(&[Letter::S]))]).is_ok());
    }
}
