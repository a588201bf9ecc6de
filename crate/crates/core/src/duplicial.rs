//! The bar simplicial set in normal form `(x₁, …, x_n, w)`, its faces and
//! degeneracies, the twisted cyclic operator `t`, identity suites and the
//! cyclicity criterion.
//!
//! A representative `[*, g₁, …, g_{n+1}, w]` normalizes to `(g₂, …, g_{n+1}, w)`;
//! the class is unchanged by `g₁ ↦ a·g₁`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coeff::CoefficientConfig;
use crate::fingroup::Group;
use crate::gset::{crossed_witness, GSet};
use crate::verdict::{CheckList, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DuplicialError {
    #[error("{op} index {index} out of range at level {level}")]
    IndexOutOfRange {
        op: &'static str,
        index: usize,
        level: usize,
    },
    #[error("invalid configuration: {0}")]
    ConfigInvalid(&'static str),
}

/// `(x₁, …, x_n, w)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    pub chain: Vec<usize>,
    pub point: usize,
}

impl Simplex {
    pub fn new(chain: Vec<usize>, point: usize) -> Self {
        Self { chain, point }
    }

    pub fn level(&self) -> usize {
        self.chain.len()
    }

    fn coords(&self) -> Vec<usize> {
        let mut v = self.chain.clone();
        v.push(self.point);
        v
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}; {})", self.chain, self.point)
    }
}

/// `[*, g₁, …, g_{n+1}, w] ↦ (g₂, …, g_{n+1}, w)`.
pub fn normalize(rep: &[usize], w: usize) -> Simplex {
    Simplex::new(rep.get(1..).unwrap_or(&[]).to_vec(), w)
}

/// `(x₁, …, x_n, w) ↦ [*, 1, x₁, …, x_n, w]`, returned as `(g₁, …, g_{n+1})`
/// and `w`, with identity index `e`.
pub fn lift(s: &Simplex, e: usize) -> (Vec<usize>, usize) {
    let mut rep = Vec::with_capacity(s.level() + 1);
    rep.push(e);
    rep.extend_from_slice(&s.chain);
    (rep, s.point)
}

/// The simplicial set `C̄(G, {*}, N)`.
#[derive(Debug, Clone)]
pub struct Bar {
    group: Arc<Group>,
    n: GSet,
}

impl Bar {
    pub fn new(n: &GSet) -> Self {
        Self {
            group: n.group().clone(),
            n: n.clone(),
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn n(&self) -> &GSet {
        &self.n
    }

    pub fn count(&self, level: usize) -> usize {
        self.group.order().pow(level as u32) * self.n.size()
    }

    /// Position of `s` in the lexicographic order on `(x₁, …, x_n, w)`.
    pub fn index(&self, s: &Simplex) -> usize {
        let g = self.group.order();
        s.chain.iter().fold(0, |acc, &x| acc * g + x) * self.n.size() + s.point
    }

    pub fn simplex(&self, level: usize, mut idx: usize) -> Simplex {
        let g = self.group.order();
        let point = idx % self.n.size();
        idx /= self.n.size();
        let mut chain = vec![0; level];
        for slot in chain.iter_mut().rev() {
            *slot = idx % g;
            idx /= g;
        }
        Simplex::new(chain, point)
    }

    pub fn simplices(&self, level: usize) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.count(level)).map(move |i| self.simplex(level, i))
    }

    /// `d₀` drops `x₁`, `d_i` merges `x_i x_{i+1}`, `d_n` moves `x_n` onto `w`.
    pub fn face(&self, i: usize, s: &Simplex) -> Result<Simplex, DuplicialError> {
        let n = s.level();
        if n == 0 || i > n {
            return Err(DuplicialError::IndexOutOfRange { op: "face", index: i, level: n });
        }
        let c = &s.chain;
        Ok(if i == 0 {
            Simplex::new(c[1..].to_vec(), s.point)
        } else if i == n {
            Simplex::new(c[..n - 1].to_vec(), self.n.act(c[n - 1], s.point))
        } else {
            let mut chain = c[..i - 1].to_vec();
            chain.push(self.group.mul(c[i - 1], c[i]));
            chain.extend_from_slice(&c[i + 1..]);
            Simplex::new(chain, s.point)
        })
    }

    /// Inserts the identity at slot `i` of the chain, `0 ≤ i ≤ n`.
    pub fn degeneracy(&self, i: usize, s: &Simplex) -> Result<Simplex, DuplicialError> {
        let n = s.level();
        if i > n {
            return Err(DuplicialError::IndexOutOfRange { op: "degeneracy", index: i, level: n });
        }
        let mut chain = s.chain.clone();
        chain.insert(i, self.group.identity());
        Ok(Simplex::new(chain, s.point))
    }

    fn d(&self, i: usize, s: &Simplex) -> Simplex {
        self.face(i, s).expect("face index in range")
    }

    fn s(&self, i: usize, s: &Simplex) -> Simplex {
        self.degeneracy(i, s).expect("degeneracy index in range")
    }

    fn product(&self, xs: &[usize]) -> usize {
        self.group.product(xs)
    }
}

pub trait DuplicialOperator {
    fn name(&self) -> String;
    fn apply(&self, s: &Simplex) -> Simplex;
}

/// `(x₁, …, x_n, w) ↦ (α(w)(x₁⋯x_n)⁻¹, x₁, …, x_{n-1}, x_n w)` and
/// `t₀(w) = α(w)·w`, for an arbitrary `α : N → G`.
#[derive(Debug, Clone)]
pub struct ClosedOperator {
    bar: Bar,
    alpha: Vec<usize>,
}

impl ClosedOperator {
    pub fn new(bar: &Bar, alpha: Vec<usize>) -> Result<Self, DuplicialError> {
        if alpha.len() != bar.n.size() || alpha.iter().any(|&a| a >= bar.group.order()) {
            return Err(DuplicialError::ConfigInvalid("α has wrong shape"));
        }
        Ok(Self { bar: bar.clone(), alpha })
    }

    pub fn from_config(cfg: &CoefficientConfig) -> Self {
        Self {
            bar: Bar::new(cfg.n()),
            alpha: cfg.alpha_table(),
        }
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }
}

impl DuplicialOperator for ClosedOperator {
    fn name(&self) -> String {
        String::from("closed")
    }

    fn apply(&self, s: &Simplex) -> Simplex {
        let b = &self.bar;
        let a = self.alpha[s.point];
        let n = s.level();
        if n == 0 {
            return Simplex::new(vec![], b.n.act(a, s.point));
        }
        let p = b.product(&s.chain);
        let mut chain = Vec::with_capacity(n);
        chain.push(b.group.mul(a, b.group.inv(p)));
        chain.extend_from_slice(&s.chain[..n - 1]);
        Simplex::new(chain, b.n.act(s.chain[n - 1], s.point))
    }
}

/// The three-stage composite `λ × Id ∘ χⁿ ∘ Id × ρ` evaluated on the
/// representative with first entry `lift`, then normalized.
#[derive(Debug, Clone)]
pub struct CompositeOperator {
    cfg: CoefficientConfig,
    lift: usize,
}

/// Intermediate values of one composite evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeTrace {
    /// `(g₁, …, g_n, g_{n+1}·f(w), g_{n+1}w)` after `ρ`.
    pub after_rho: (Vec<usize>, usize, usize),
    /// `(u, g₁, …, g_n, g_{n+1}w)` after `χⁿ`.
    pub after_chi: (usize, Vec<usize>, usize),
    /// `[*, h(u), h(u)⁻¹g₁, g₂, …, g_n, g_{n+1}w]` after `λ`.
    pub after_lambda: (Vec<usize>, usize),
}

impl CompositeOperator {
    pub fn new(cfg: &CoefficientConfig, lift: usize) -> Self {
        Self { cfg: cfg.clone(), lift }
    }

    /// Evaluates on a full representative `(g₁, …, g_{n+1})`, `w`.
    pub fn trace(&self, rep: &[usize], w: usize) -> CompositeTrace {
        let group = self.cfg.group();
        let l = self.cfg.l();
        let n_set = self.cfg.n();
        let n = rep.len() - 1;
        let last = rep[n];
        let rho_l = l.act(last, self.cfg.f()[w]);
        let moved = n_set.act(last, w);
        // χ(g, l, …) = (gl, g, …), applied from the innermost factor outwards
        let mut u = rho_l;
        for &g in rep[..n].iter().rev() {
            u = l.act(g, u);
        }
        let hu = self.cfg.h()[u];
        let mut out = Vec::with_capacity(n + 1);
        out.push(hu);
        if n > 0 {
            out.push(group.mul(group.inv(hu), rep[0]));
            out.extend_from_slice(&rep[1..n]);
        }
        CompositeTrace {
            after_rho: (rep[..n].to_vec(), rho_l, moved),
            after_chi: (u, rep[..n].to_vec(), moved),
            after_lambda: (out, moved),
        }
    }
}

impl DuplicialOperator for CompositeOperator {
    fn name(&self) -> String {
        format!("composite(lift {})", self.lift)
    }

    fn apply(&self, s: &Simplex) -> Simplex {
        let (mut rep, w) = lift(s, self.cfg.group().identity());
        rep[0] = self.lift;
        let (out, w2) = self.trace(&rep, w).after_lambda;
        if s.level() == 0 {
            // λ on L × N: [u, w'] ↦ [h(u), h(u)⁻¹w'], then G×̃N/G ≅ N
            let hu = out[0];
            let group = self.cfg.group();
            return Simplex::new(vec![], self.cfg.n().act(group.inv(hu), w2));
        }
        normalize(&out, w2)
    }
}

/// `h(u)⁻¹` applied to every entry `g₁, …, g_n` instead of only the first.
#[derive(Debug, Clone)]
pub struct ElementwiseOperator {
    cfg: CoefficientConfig,
}

impl ElementwiseOperator {
    pub fn new(cfg: &CoefficientConfig) -> Self {
        Self { cfg: cfg.clone() }
    }
}

impl DuplicialOperator for ElementwiseOperator {
    fn name(&self) -> String {
        String::from("elementwise reading")
    }

    fn apply(&self, s: &Simplex) -> Simplex {
        let (rep, w) = lift(s, self.cfg.group().identity());
        let base = CompositeOperator::new(&self.cfg, self.cfg.group().identity());
        if s.level() == 0 {
            return base.apply(s);
        }
        let tr = base.trace(&rep, w);
        let group = self.cfg.group();
        let hinv = group.inv(tr.after_lambda.0[0]);
        let n = s.level();
        let mut out = vec![tr.after_lambda.0[0]];
        out.extend(rep[..n].iter().map(|&g| group.mul(hinv, g)));
        normalize(&out, tr.after_lambda.1)
    }
}

/// Deliberately broken variants of the closed operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// `α(w)·(x₁⋯x_n)` in place of `α(w)·(x₁⋯x_n)⁻¹`.
    DroppedInverse,
    /// `α(w)` multiplied by `x₁` when the level is at least 2.
    ChainDependentAlpha,
}

#[derive(Debug, Clone)]
pub struct FaultyOperator {
    base: ClosedOperator,
    fault: Fault,
}

impl FaultyOperator {
    pub fn new(base: ClosedOperator, fault: Fault) -> Self {
        Self { base, fault }
    }
}

impl DuplicialOperator for FaultyOperator {
    fn name(&self) -> String {
        format!("faulty({:?})", self.fault)
    }

    fn apply(&self, s: &Simplex) -> Simplex {
        let mut out = self.base.apply(s);
        let b = &self.base.bar;
        let a = self.base.alpha[s.point];
        match self.fault {
            Fault::DroppedInverse if s.level() > 0 => {
                out.chain[0] = b.group.mul(a, b.product(&s.chain));
            }
            Fault::ChainDependentAlpha if s.level() > 1 => {
                out.chain[0] = b.group.mul(s.chain[0], out.chain[0]);
            }
            _ => {}
        }
        out
    }
}

/// Which identity suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityKind {
    Simplicial,
    Duplicial,
}

fn first_mismatch(
    law: &str,
    bar: &Bar,
    level: usize,
    mut f: impl FnMut(&Simplex) -> Option<(Simplex, Simplex)>,
) -> Verdict {
    for s in bar.simplices(level) {
        if let Some((a, b)) = f(&s) {
            if a != b {
                return Verdict::fail(law, format!("level {level}"), s.coords(), a.coords(), b.coords());
            }
        }
    }
    Verdict::Pass
}

/// Exhaustive identity checks on every simplex of level at most `cap`.
pub fn check_identities(
    bar: &Bar,
    op: &dyn DuplicialOperator,
    kind: IdentityKind,
    cap: usize,
) -> CheckList {
    let mut out = CheckList::new();
    match kind {
        IdentityKind::Simplicial => {
            let mut fam = [Verdict::Pass, Verdict::Pass, Verdict::Pass, Verdict::Pass, Verdict::Pass];
            for n in 0..=cap {
                // d_i d_j = d_{j-1} d_i, i < j
                for j in 1..=n {
                    for i in 0..j {
                        if n >= 2 && fam[0].is_pass() {
                            fam[0] = first_mismatch("d_i d_j = d_{j-1} d_i", bar, n, |s| {
                                Some((bar.d(i, &bar.d(j, s)), bar.d(j - 1, &bar.d(i, s))))
                            });
                        }
                    }
                }
                // s_i s_j = s_{j+1} s_i, i ≤ j
                for j in 0..=n {
                    for i in 0..=j {
                        if fam[1].is_pass() {
                            fam[1] = first_mismatch("s_i s_j = s_{j+1} s_i", bar, n, |s| {
                                Some((bar.s(i, &bar.s(j, s)), bar.s(j + 1, &bar.s(i, s))))
                            });
                        }
                    }
                }
                // faces of degeneracies, at level n + 1 via s_j on level n
                for j in 0..=n {
                    for i in 0..=n + 1 {
                        let idx = if i < j {
                            2
                        } else if i == j || i == j + 1 {
                            3
                        } else {
                            4
                        };
                        if !fam[idx].is_pass() {
                            continue;
                        }
                        fam[idx] = match idx {
                            2 => first_mismatch("d_i s_j = s_{j-1} d_i, i < j", bar, n, |s| {
                                Some((bar.d(i, &bar.s(j, s)), bar.s(j - 1, &bar.d(i, s))))
                            }),
                            3 => first_mismatch("d_j s_j = d_{j+1} s_j = id", bar, n, |s| {
                                Some((bar.d(i, &bar.s(j, s)), s.clone()))
                            }),
                            _ => first_mismatch("d_i s_j = s_j d_{i-1}, i > j + 1", bar, n, |s| {
                                Some((bar.d(i, &bar.s(j, s)), bar.s(j, &bar.d(i - 1, s))))
                            }),
                        };
                    }
                }
            }
            let names = [
                "d_i d_j = d_{j-1} d_i",
                "s_i s_j = s_{j+1} s_i",
                "d_i s_j = s_{j-1} d_i",
                "d_j s_j = d_{j+1} s_j = id",
                "d_i s_j = s_j d_{i-1}",
            ];
            for (name, v) in names.iter().zip(fam) {
                out.push(*name, v);
            }
        }
        IdentityKind::Duplicial => {
            let mut fam = [Verdict::Pass, Verdict::Pass, Verdict::Pass, Verdict::Pass];
            for n in 0..=cap {
                for i in 1..=n {
                    if fam[0].is_pass() {
                        fam[0] = first_mismatch("d_i t = t d_{i-1}", bar, n, |s| {
                            Some((bar.d(i, &op.apply(s)), op.apply(&bar.d(i - 1, s))))
                        });
                    }
                    if fam[2].is_pass() {
                        fam[2] = first_mismatch("s_i t = t s_{i-1}", bar, n, |s| {
                            Some((bar.s(i, &op.apply(s)), op.apply(&bar.s(i - 1, s))))
                        });
                    }
                }
                if n >= 1 && fam[1].is_pass() {
                    fam[1] = first_mismatch("d_0 t = d_n", bar, n, |s| Some((bar.d(0, &op.apply(s)), bar.d(n, s))));
                }
                if fam[3].is_pass() {
                    fam[3] = first_mismatch("s_0 t = t² s_n", bar, n, |s| {
                        Some((bar.s(0, &op.apply(s)), op.apply(&op.apply(&bar.s(n, s)))))
                    });
                }
            }
            let names = ["d_i t = t d_{i-1}", "d_0 t = d_n", "s_i t = t s_{i-1}", "s_0 t = t² s_n"];
            for (name, v) in names.iter().zip(fam) {
                out.push(*name, v);
            }
        }
    }
    out
}

/// First simplex (level 1 to `cap`) where the two operators disagree.
pub fn compare_operators(bar: &Bar, a: &dyn DuplicialOperator, b: &dyn DuplicialOperator, cap: usize) -> Verdict {
    let law = format!("{} = {}", a.name(), b.name());
    for n in 0..=cap {
        let v = first_mismatch(&law, bar, n, |s| Some((a.apply(s), b.apply(s))));
        if !v.is_pass() {
            return v;
        }
    }
    Verdict::Pass
}

/// The composite operator gives the same class at every lift `g₁ = a`.
pub fn representative_independence(cfg: &CoefficientConfig, cap: usize) -> Verdict {
    let bar = Bar::new(cfg.n());
    let base = CompositeOperator::new(cfg, cfg.group().identity());
    for a in cfg.group().elements().skip(1) {
        let other = CompositeOperator::new(cfg, a);
        let v = compare_operators(&bar, &base, &other, cap);
        if !v.is_pass() {
            return v.context("representative independence");
        }
    }
    Verdict::Pass
}

/// `t^{n+1} = id` on every simplex of levels `1..=cap`.
pub fn cyclicity_brute(bar: &Bar, op: &dyn DuplicialOperator, cap: usize) -> Verdict {
    for n in 1..=cap {
        let v = first_mismatch("t^{n+1} = id", bar, n, |s| {
            let mut cur = s.clone();
            for _ in 0..=n {
                cur = op.apply(&cur);
            }
            Some((cur, s.clone()))
        });
        if !v.is_pass() {
            return v;
        }
    }
    Verdict::Pass
}

/// `α(w) ∈ Stab(w)` and `α(gw) = g α(w) g⁻¹` for every `w` and `g`.
pub fn cyclicity_criterion(n: &GSet, alpha: &[usize]) -> Verdict {
    let group = n.group();
    for w in n.points() {
        if n.act(alpha[w], w) != w {
            return Verdict::fail("α(w) ∈ Stab(w)", n.label(), vec![w], vec![n.act(alpha[w], w)], vec![w]);
        }
    }
    for w in n.points() {
        for g in group.elements() {
            let lhs = alpha[n.act(g, w)];
            let rhs = group.conjugate(g, alpha[w]);
            if lhs != rhs {
                return Verdict::fail("α(gw) = g α(w) g⁻¹", n.label(), vec![g, w], vec![lhs], vec![rhs]);
            }
        }
    }
    Verdict::Pass
}

/// Brute force against the criterion for one configuration.
#[derive(Debug, Clone)]
pub struct CyclicityReport {
    pub alpha: Vec<usize>,
    pub brute: Verdict,
    pub criterion: Verdict,
    /// `α` satisfies the crossed axiom.
    pub alpha_crossed: bool,
}

impl CyclicityReport {
    pub fn agree(&self) -> bool {
        self.brute.is_pass() == self.criterion.is_pass()
    }

    /// Agreement, and a crossed `α` whenever the criterion passes.
    pub fn satisfied(&self) -> bool {
        self.agree() && (!self.criterion.is_pass() || self.alpha_crossed)
    }
}

pub fn cyclicity(n: &GSet, alpha: &[usize], cap: usize) -> Result<CyclicityReport, DuplicialError> {
    if cap == 0 {
        return Err(DuplicialError::ConfigInvalid("level cap must be at least 1"));
    }
    let bar = Bar::new(n);
    let op = ClosedOperator::new(&bar, alpha.to_vec())?;
    Ok(CyclicityReport {
        alpha: alpha.to_vec(),
        brute: cyclicity_brute(&bar, &op, cap),
        criterion: cyclicity_criterion(n, alpha),
        alpha_crossed: crossed_witness(n, alpha).is_none(),
    })
}

/// Smallest `k ≥ 1` with `t^k = id` on all of level `n`.
pub fn operator_order(bar: &Bar, op: &dyn DuplicialOperator, level: usize, limit: usize) -> Option<usize> {
    let all: Vec<Simplex> = bar.simplices(level).collect();
    let mut cur = all.clone();
    for k in 1..=limit {
        cur = cur.iter().map(|s| op.apply(s)).collect();
        if cur == all {
            return Some(k);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CodomainAction;
    use crate::fingroup::{standard_group, GroupKind};

    fn grp(k: GroupKind) -> Arc<Group> {
        Arc::new(standard_group(&k).unwrap())
    }

    fn loday_c3() -> CoefficientConfig {
        let c3 = grp(GroupKind::Cyclic(3));
        CoefficientConfig::new(GSet::conj(&c3), GSet::point(&c3), vec![0, 1, 2], CodomainAction::Conjugation, vec![1]).unwrap()
    }

    #[test]
    fn normal_form_round_trip() {
        let c2 = grp(GroupKind::Cyclic(2));
        let bar = Bar::new(&GSet::point(&c2));
        for s in bar.simplices(2) {
            let (rep, w) = lift(&s, 0);
            assert_eq!(normalize(&rep, w), s);
            assert_eq!(normalize(&[1, rep[1], rep[2]], w), s);
        }
        assert_eq!(normalize(&[0, 1], 0), Simplex::new(vec![1], 0));
        for (i, s) in bar.simplices(3).enumerate() {
            assert_eq!(bar.index(&s), i);
        }
    }

    #[test]
    fn faces_and_degeneracies() {
        let c2 = grp(GroupKind::Cyclic(2));
        let bar = Bar::new(&GSet::point(&c2));
        let s = Simplex::new(vec![1, 1], 0);
        assert_eq!(bar.face(0, &s).unwrap().chain, vec![1]);
        assert_eq!(bar.face(1, &s).unwrap().chain, vec![0]);
        assert_eq!(bar.face(2, &s).unwrap().chain, vec![1]);
        assert_eq!(bar.degeneracy(0, &Simplex::new(vec![1], 0)).unwrap().chain, vec![0, 1]);
        assert!(matches!(bar.face(3, &s), Err(DuplicialError::IndexOutOfRange { .. })));
        assert!(matches!(bar.degeneracy(3, &s), Err(DuplicialError::IndexOutOfRange { .. })));
        assert!(bar.face(0, &Simplex::new(vec![], 0)).is_err());
    }

    #[test]
    fn simplicial_identities_s3() {
        let s3 = grp(GroupKind::Symmetric(3));
        let bar = Bar::new(&GSet::point(&s3));
        let op = ClosedOperator::new(&bar, vec![0]).unwrap();
        let c = check_identities(&bar, &op, IdentityKind::Simplicial, 3);
        assert!(c.all_pass(), "{:?}", c.verdict());
    }

    #[test]
    fn cyclic_nerve() {
        let c3 = grp(GroupKind::Cyclic(3));
        let bar = Bar::new(&GSet::point(&c3));
        let op = ClosedOperator::new(&bar, vec![0]).unwrap();
        // t₁(x) = x⁻¹
        assert_eq!(op.apply(&Simplex::new(vec![1], 0)).chain, vec![2]);
        assert!(check_identities(&bar, &op, IdentityKind::Duplicial, 3).all_pass());
        assert!(cyclicity_brute(&bar, &op, 3).is_pass());
        for n in 1..=3 {
            assert_eq!(operator_order(&bar, &op, n, 10), Some(n + 1));
        }
    }

    #[test]
    fn loday_closed_and_composite() {
        let cfg = loday_c3();
        let bar = Bar::new(cfg.n());
        let closed = ClosedOperator::from_config(&cfg);
        assert_eq!(closed.alpha(), &[2]);
        // t₁(x) = r² x⁻¹
        assert_eq!(closed.apply(&Simplex::new(vec![1], 0)).chain, vec![1]);
        let comp = CompositeOperator::new(&cfg, 0);
        // u = x·f(*) acted on conj(C3) is r, so h(u)⁻¹ = r²
        let tr = comp.trace(&[0, 1], 0);
        assert_eq!(tr.after_chi.0, 1);
        assert_eq!(comp.apply(&Simplex::new(vec![1], 0)).chain, vec![2]);
        assert!(!compare_operators(&bar, &closed, &comp, 3).is_pass());
        assert!(!representative_independence(&cfg, 3).is_pass());
        let rep = cyclicity(cfg.n(), closed.alpha(), 3).unwrap();
        assert!(rep.brute.is_pass() && rep.criterion.is_pass() && rep.alpha_crossed);
    }

    #[test]
    fn translation_configs_agree_and_are_not_cyclic() {
        let c2 = grp(GroupKind::Cyclic(2));
        let r = GSet::regular(&c2);
        for h in [vec![0, 1], vec![1, 0]] {
            let cfg = CoefficientConfig::new(r.clone(), r.clone(), h, CodomainAction::Translation, vec![0, 1]).unwrap();
            let bar = Bar::new(cfg.n());
            let closed = ClosedOperator::from_config(&cfg);
            let comp = CompositeOperator::new(&cfg, 0);
            assert!(compare_operators(&bar, &closed, &comp, 3).is_pass());
            assert!(representative_independence(&cfg, 3).is_pass());
            let rep = cyclicity(cfg.n(), closed.alpha(), 3).unwrap();
            assert!(!rep.brute.is_pass() && !rep.criterion.is_pass());
            assert!(rep.satisfied());
        }
    }

    #[test]
    fn identities_hold_for_any_alpha_and_faults_break_them() {
        let s3 = grp(GroupKind::Symmetric(3));
        let cj = GSet::conj(&s3);
        let bar = Bar::new(&cj);
        // a non-crossed α
        let alpha = vec![1, 0, 0, 0, 0, 0];
        assert!(crossed_witness(&cj, &alpha).is_some());
        let op = ClosedOperator::new(&bar, alpha).unwrap();
        assert!(check_identities(&bar, &op, IdentityKind::Duplicial, 2).all_pass());
        for fault in [Fault::DroppedInverse, Fault::ChainDependentAlpha] {
            let bad = FaultyOperator::new(op.clone(), fault);
            let c = check_identities(&bar, &bad, IdentityKind::Duplicial, 2);
            assert!(!c.all_pass());
            assert!(c.verdict().counterexample().is_some());
        }
    }

    #[test]
    fn non_central_alpha_fails_both_ways() {
        let c2 = grp(GroupKind::Cyclic(2));
        let r = GSet::regular(&c2);
        // α(w) = a everywhere, outside Stab(w)
        let rep = cyclicity(&r, &[1, 1], 3).unwrap();
        assert!(!rep.brute.is_pass());
        assert!(!rep.criterion.is_pass());
        assert_eq!(rep.brute.counterexample().unwrap().witness.len(), 2);
    }
}
