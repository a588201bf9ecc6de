//! Coefficient data `h : L → G` and `f : N → L`, the structures they induce
//! (`ρ`, `λ̃`, `∇`), and the two chains relating `λ` and `∇`.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::emcat::{cofree, is_coalgebra_morphism, mate_lambda, q_comonad, EmError, SCoalgebra};
use crate::comonad::{Comonad, Context};
use crate::fingroup::Group;
use crate::gset::{
    enumerate_equivariant_maps_bounded, orbits, s_product, t_product, EquivariantMap, GSet, GSetError,
};
use crate::triangle::phi_component;
use crate::verdict::{check_equivariant, compare_tables, compose, CheckList, Counterexample, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("{map} is not equivariant for the {action} action: {witness}")]
    NotEquivariant {
        map: &'static str,
        action: String,
        witness: Box<Counterexample>,
    },
    #[error("orbit map not well defined: {0}")]
    NotWellDefined(Box<Counterexample>),
    #[error("chain stage {stage}: expected {expected}, found {found}")]
    ChainTypeMismatch {
        stage: &'static str,
        expected: String,
        found: String,
    },
    #[error("malformed coefficient data: {0}")]
    Malformed(&'static str),
    #[error(transparent)]
    GSet(#[from] GSetError),
    #[error(transparent)]
    Em(#[from] EmError),
}

/// The G-set structure placed on `G` as the codomain of `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodomainAction {
    /// `g·k = gk`
    Translation,
    /// `g·k = gkg⁻¹`
    Conjugation,
    /// Explicit rows `table[g][k]`.
    Table(Vec<Vec<usize>>),
}

impl CodomainAction {
    pub fn gset(&self, group: &Arc<Group>) -> Result<GSet, GSetError> {
        match self {
            CodomainAction::Translation => Ok(GSet::regular(group).with_label("G(translation)")),
            CodomainAction::Conjugation => Ok(GSet::conj(group).with_label("G(conjugation)")),
            CodomainAction::Table(rows) => {
                Ok(GSet::from_table(group.clone(), rows)?.with_label("G(table)"))
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CodomainAction::Translation => "translation",
            CodomainAction::Conjugation => "conjugation",
            CodomainAction::Table(_) => "table",
        }
    }
}

impl fmt::Display for CodomainAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `h : L → G` and `f : N → L`, both validated against their declared actions.
#[derive(Debug, Clone)]
pub struct CoefficientConfig {
    l: GSet,
    n: GSet,
    h: Vec<usize>,
    action: CodomainAction,
    f: Vec<usize>,
}

impl CoefficientConfig {
    pub fn new(
        l: GSet,
        n: GSet,
        h: Vec<usize>,
        action: CodomainAction,
        f: Vec<usize>,
    ) -> Result<Self, CoeffError> {
        if !l.same_group(&n) {
            return Err(CoeffError::Malformed("L and N over different groups"));
        }
        let group = l.group().clone();
        if h.len() != l.size() || h.iter().any(|&k| k >= group.order()) {
            return Err(CoeffError::Malformed("h has wrong shape"));
        }
        if f.len() != n.size() || f.iter().any(|&v| v >= l.size()) {
            return Err(CoeffError::Malformed("f has wrong shape"));
        }
        let cod = action.gset(&group)?;
        if let Verdict::Fail(witness) = check_equivariant("h equivariant", &l, &cod, &h) {
            return Err(CoeffError::NotEquivariant {
                map: "h",
                action: action.name().to_string(),
                witness: Box::new(witness),
            });
        }
        if let Verdict::Fail(witness) = check_equivariant("f equivariant", &n, &l, &f) {
            return Err(CoeffError::NotEquivariant {
                map: "f",
                action: "given".to_string(),
                witness: Box::new(witness),
            });
        }
        Ok(Self { l, n, h, action, f })
    }

    pub fn group(&self) -> &Arc<Group> {
        self.l.group()
    }

    pub fn l(&self) -> &GSet {
        &self.l
    }

    pub fn n(&self) -> &GSet {
        &self.n
    }

    pub fn h(&self) -> &[usize] {
        &self.h
    }

    pub fn f(&self) -> &[usize] {
        &self.f
    }

    pub fn action(&self) -> &CodomainAction {
        &self.action
    }

    /// `α(w) = h(f(w))⁻¹`.
    pub fn alpha(&self, w: usize) -> usize {
        self.group().inv(self.h[self.f[w]])
    }

    pub fn alpha_table(&self) -> Vec<usize> {
        self.n.points().map(|w| self.alpha(w)).collect()
    }
}

/// First `(g, w)` with `h(g·f(w)) != g·h(f(w))`; `None` when `h` commutes
/// with left translation on the orbits through `f(N)`.
pub fn translation_witness(cfg: &CoefficientConfig) -> Option<(usize, usize)> {
    let group = cfg.group();
    for w in cfg.n.points() {
        let b = cfg.f[w];
        for g in group.elements() {
            if cfg.h[cfg.l.act(g, b)] != group.mul(g, cfg.h[b]) {
                return Some((g, w));
            }
        }
    }
    None
}

/// Every pair `(h, f)` of equivariant maps for the declared codomain action.
pub fn enumerate_configs(
    l: &GSet,
    n: &GSet,
    action: &CodomainAction,
    bound: u128,
) -> Result<Vec<CoefficientConfig>, CoeffError> {
    let cod = action.gset(l.group())?;
    let hs = enumerate_equivariant_maps_bounded(l, &cod, bound)?;
    let fs = enumerate_equivariant_maps_bounded(n, l, bound)?;
    let mut out = Vec::with_capacity(hs.len() * fs.len());
    for h in &hs {
        for f in &fs {
            out.push(CoefficientConfig {
                l: l.clone(),
                n: n.clone(),
                h: h.table().to_vec(),
                action: action.clone(),
                f: f.table().to_vec(),
            });
        }
    }
    Ok(out)
}

/// `ρ(g, n) = (g·f(n), gn)` from `G×̃N` to `L×N`.
pub fn rho_from_f(cfg: &CoefficientConfig) -> Result<EquivariantMap, CoeffError> {
    let table = phi_component(&cfg.l, &cfg.n, &cfg.f);
    let tn = t_product(&cfg.n);
    let sn = s_product(&cfg.l, &cfg.n);
    if let Verdict::Fail(witness) = check_equivariant("ρ equivariant", &tn, &sn, &table) {
        return Err(CoeffError::NotEquivariant {
            map: "ρ",
            action: "diagonal".to_string(),
            witness: Box::new(witness),
        });
    }
    Ok(EquivariantMap::new_unchecked(tn, sn, table)?)
}

/// Pushes a point map through orbits, checking that it is constant on
/// classes. The result is indexed by class position.
pub fn orbit_map(law: &str, src: &GSet, dst: &GSet, table: &[usize]) -> Result<Vec<usize>, Counterexample> {
    let (os, od) = (orbits(src), orbits(dst));
    let mut out = vec![usize::MAX; os.orbit_count()];
    for p in src.points() {
        let c = os.class_index(p);
        let img = od.class_index(table[p]);
        if out[c] == usize::MAX {
            out[c] = img;
        } else if out[c] != img {
            let r = os.rep(p);
            return Err(Counterexample {
                law: law.to_string(),
                object: src.label().to_string(),
                witness: src.decode(p),
                lhs: dst.decode(table[p]),
                rhs: dst.decode(table[r]),
            });
        }
    }
    Ok(out)
}

/// `λ̃_N(b, n) = (h(b), h(b)⁻¹n)` together with its orbit-level map.
#[derive(Debug, Clone)]
pub struct Lambda {
    pub src: GSet,
    pub dst: GSet,
    pub point: Vec<usize>,
    pub classes: Vec<usize>,
}

pub fn lambda_tilde_table(l: &GSet, h: &[usize], n: &GSet) -> Vec<usize> {
    let group = l.group();
    let m = n.size();
    s_product(l, n)
        .points()
        .map(|p| {
            let k = h[p / m];
            k * m + n.act(group.inv(k), p % m)
        })
        .collect()
}

pub fn lambda_from_h(cfg: &CoefficientConfig) -> Result<Lambda, CoeffError> {
    lambda_at(&cfg.l, &cfg.h, &cfg.action, &cfg.n)
}

/// `λ̃` at an arbitrary `N`, with equivariance and well-definedness checked.
pub fn lambda_at(l: &GSet, h: &[usize], action: &CodomainAction, n: &GSet) -> Result<Lambda, CoeffError> {
    let src = s_product(l, n);
    let dst = t_product(n);
    let point = lambda_tilde_table(l, h, n);
    if let Verdict::Fail(witness) = check_equivariant("λ̃ equivariant", &src, &dst, &point) {
        return Err(CoeffError::NotEquivariant {
            map: "λ̃",
            action: action.name().to_string(),
            witness: Box::new(witness),
        });
    }
    let classes = orbit_map("λ well defined", &src, &dst, &point).map_err(|c| CoeffError::NotWellDefined(Box::new(c)))?;
    Ok(Lambda {
        src,
        dst,
        point,
        classes,
    })
}

/// `∇(x) = (h(β₁x), h(β₁x)⁻¹x)` as a table `X → G×̃X`.
pub fn nabla_table(h: &[usize], c: &SCoalgebra) -> Vec<usize> {
    let x = c.base();
    let group = x.group();
    let n = x.size();
    x.points()
        .map(|p| {
            let k = h[c.beta1(p)];
            k * n + x.act(group.inv(k), p)
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct Nabla {
    pub table: Vec<usize>,
    pub checks: CheckList,
}

/// `∇` at `c` with three groups of checks: a coalgebra morphism into
/// `Q(c)`, a `Q`-coalgebra structure, and the induced orbit-level coalgebra.
pub fn nabla(h: &[usize], c: &SCoalgebra) -> Nabla {
    let x = c.base();
    let l = c.l();
    let group = x.group();
    let ng = group.order();
    let n = x.size();
    let tx = t_product(x);
    let table = nabla_table(h, c);
    let q = q_comonad(l);
    let qc = q.apply(c);
    let mut checks = CheckList::new();

    // χ ∘ G×̃β ∘ ∇ = L×∇ ∘ β
    let lhs: Vec<usize> = table
        .iter()
        .map(|&p| {
            let (k, y) = (p / n, p % n);
            (l.act(k, c.beta1(y)) * ng + k) * n + y
        })
        .collect();
    let rhs: Vec<usize> = x.points().map(|p| c.beta1(p) * ng * n + table[p]).collect();
    let slx = s_product(l, &tx);
    let morphism = compare_tables("χ ∘ G×̃β ∘ ∇ = L×∇ ∘ β", x, &slx, &lhs, &rhs)
        .and_then(|| is_coalgebra_morphism(&table, c, &qc));
    checks.push("coalgebra morphism into Q", morphism);

    let eps = q.epsilon(c);
    let id: Vec<usize> = x.points().collect();
    let counit = compare_tables("ε^Q ∘ ∇ = id", x, x, &compose(&eps, &table), &id);
    let delta = q.delta(c);
    let g_nabla = q.fmap(c, &qc, &table);
    let coassoc = compare_tables(
        "Δ^Q ∘ ∇ = G×̃∇ ∘ ∇",
        x,
        &t_product(&tx),
        &compose(&delta, &table),
        &compose(&g_nabla, &table),
    );
    checks.push("Q-coalgebra", counit.and_then(|| coassoc));

    let orbit = match orbit_map("M̃∇ well defined", x, &tx, &table) {
        Err(c) => Verdict::Fail(c),
        Ok(m) => {
            let ttx = t_product(&tx);
            let oeps = orbit_map("M̃ε^Q", &tx, x, &eps);
            let odel = orbit_map("M̃Δ^Q", &tx, &ttx, &delta);
            let ogn = orbit_map("M̃G×̃∇", &tx, &ttx, &g_nabla);
            match (oeps, odel, ogn) {
                (Ok(e), Ok(d), Ok(gn)) => {
                    let ox = orbits(x);
                    let ids: Vec<usize> = (0..ox.orbit_count()).collect();
                    let lhs = compose(&e, &m);
                    if lhs != ids {
                        Verdict::fail("M̃ε^Q ∘ M̃∇ = id", x.label(), vec![], lhs, ids)
                    } else {
                        let a = compose(&d, &m);
                        let b = compose(&gn, &m);
                        if a == b {
                            Verdict::Pass
                        } else {
                            Verdict::fail("M̃Δ^Q ∘ M̃∇ = M̃G×̃∇ ∘ M̃∇", x.label(), vec![], a, b)
                        }
                    }
                }
                (Err(c), _, _) | (_, Err(c), _) | (_, _, Err(c)) => Verdict::Fail(c),
            }
        }
    };
    checks.push("orbit coalgebra", orbit);
    Nabla { table, checks }
}

/// One stage of a chain evaluated on a representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub stage: &'static str,
    pub object: String,
    pub point: Vec<usize>,
    pub class: usize,
}

/// Result of evaluating one of the chains: the point-level composite, its
/// orbit-level map, and per-representative traces.
#[derive(Debug, Clone)]
pub struct ChainResult {
    pub point: Vec<usize>,
    pub classes: Vec<usize>,
    pub traces: Vec<Vec<ChainStep>>,
}

struct Stage<'a> {
    name: &'static str,
    src: &'a GSet,
    dst: &'a GSet,
    table: &'a [usize],
}

fn run_chain(start: &GSet, stages: &[Stage<'_>]) -> Result<ChainResult, CoeffError> {
    let mut cur = start;
    let mut point: Vec<usize> = start.points().collect();
    let mut classes: Vec<usize> = (0..orbits(start).orbit_count()).collect();
    for s in stages {
        if s.src != cur || s.table.len() != s.src.size() {
            return Err(CoeffError::ChainTypeMismatch {
                stage: s.name,
                expected: cur.label().to_string(),
                found: s.src.label().to_string(),
            });
        }
        let om = orbit_map(s.name, s.src, s.dst, s.table).map_err(|c| CoeffError::NotWellDefined(Box::new(c)))?;
        classes = compose(&om, &classes);
        point = compose(s.table, &point);
        cur = s.dst;
    }
    let os = orbits(start);
    let traces = os
        .representatives()
        .iter()
        .map(|&r| {
            let mut steps = Vec::with_capacity(stages.len() + 1);
            let mut p = r;
            steps.push(ChainStep {
                stage: "start",
                object: start.label().to_string(),
                point: start.decode(p),
                class: os.class_index(p),
            });
            for s in stages {
                p = s.table[p];
                steps.push(ChainStep {
                    stage: s.name,
                    object: s.dst.label().to_string(),
                    point: s.dst.decode(p),
                    class: orbits(s.dst).class_index(p),
                });
            }
            steps
        })
        .collect();
    Ok(ChainResult {
        point,
        classes,
        traces,
    })
}

/// `M̃Λ̃⁻¹ ∘ λV ∘ M̃Vη` at a coalgebra `c`, with `λ̃_X` supplied and `ā = 1`.
pub fn forward(lambda: &Lambda, c: &SCoalgebra) -> Result<ChainResult, CoeffError> {
    let x = c.base();
    let sx = s_product(c.l(), x);
    let tx = t_product(x);
    let ctx = Context::new(c.l());
    let gamma = mate_lambda(&ctx, 0)?.gamma_at(c);
    let eta = c.coaction();
    run_chain(
        x,
        &[
            Stage { name: "M̃Vη", src: x, dst: &sx, table: &eta },
            Stage { name: "λV", src: &lambda.src, dst: &lambda.dst, table: &lambda.point },
            Stage { name: "M̃Λ̃⁻¹", src: &tx, dst: &tx, table: &gamma },
        ],
    )
}

/// `M̃Tε ∘ M̃Λ̃F^S ∘ M̃∇F^S` at `N`, with `∇` at the cofree coalgebra supplied
/// and `ā = 1`.
pub fn backward(nabla_cofree: &[usize], l: &GSet, n: &GSet) -> Result<ChainResult, CoeffError> {
    let fs = cofree(n, l);
    let ln = fs.base().clone();
    let tln = t_product(&ln);
    let tn = t_product(n);
    let ctx = Context::new(l);
    let lam = mate_lambda(&ctx, 0)?.lambda_at(&fs);
    let m = n.size();
    let t_eps: Vec<usize> = tln.points().map(|p| (p / ln.size()) * m + (p % ln.size()) % m).collect();
    run_chain(
        &ln,
        &[
            Stage { name: "M̃∇F^S", src: &ln, dst: &tln, table: nabla_cofree },
            Stage { name: "M̃Λ̃F^S", src: &tln, dst: &tln, table: &lam },
            Stage { name: "M̃Tε", src: &tln, dst: &tn, table: &t_eps },
        ],
    )
}

/// Forward chain checked against its displayed images
/// `[x] ↦ [(β₁x, x)] ↦ [(h(β₁x), h(β₁x)⁻¹x)]` and against `M̃∇`.
pub fn check_forward(h: &[usize], action: &CodomainAction, c: &SCoalgebra) -> Result<CheckList, CoeffError> {
    let x = c.base();
    let lambda = lambda_at(c.l(), h, action, x)?;
    let res = forward(&lambda, c)?;
    let direct = nabla_table(h, c);
    let sx = s_product(c.l(), x);
    let tx = t_product(x);
    let (osx, otx) = (orbits(&sx), orbits(&tx));
    let n = x.size();
    let mut images = Verdict::Pass;
    for (trace, &r) in res.traces.iter().zip(orbits(x).representatives()) {
        let b = c.beta1(r);
        let k = h[b];
        let first = osx.class_index(b * n + r);
        let second = otx.class_index(k * n + x.act(x.group().inv(k), r));
        if trace[1].class != first || trace[2].class != second {
            images = Verdict::fail(
                "forward chain images",
                c.label(),
                x.decode(r),
                vec![trace[1].class, trace[2].class],
                vec![first, second],
            );
            break;
        }
    }
    let mut out = CheckList::new();
    out.push("displayed images", images);
    out.push("point composite = ∇", compare_tables("forward = ∇", x, &tx, &res.point, &direct));
    let m = orbit_map("M̃∇", x, &tx, &direct).map_err(|c| CoeffError::NotWellDefined(Box::new(c)))?;
    out.push(
        "orbit composite = M̃∇",
        if m == res.classes {
            Verdict::Pass
        } else {
            Verdict::fail("forward = M̃∇", c.label(), vec![], res.classes.clone(), m)
        },
    );
    Ok(out)
}

/// Backward chain checked against `[(l, x)] ↦ [(h(l), h(l)⁻¹x)]` and `λ`.
pub fn check_backward(h: &[usize], action: &CodomainAction, l: &GSet, n: &GSet) -> Result<CheckList, CoeffError> {
    let fs = cofree(n, l);
    let nab = nabla_table(h, &fs);
    let res = backward(&nab, l, n)?;
    let lambda = lambda_at(l, h, action, n)?;
    let tn = t_product(n);
    let otn = orbits(&tn);
    let m = n.size();
    let mut images = Verdict::Pass;
    for (trace, &r) in res.traces.iter().zip(orbits(&lambda.src).representatives()) {
        let k = h[r / m];
        let want = otn.class_index(k * m + n.act(n.group().inv(k), r % m));
        if trace.last().map(|s| s.class) != Some(want) {
            images = Verdict::fail("backward chain images", n.label(), lambda.src.decode(r), vec![], vec![want]);
            break;
        }
    }
    let mut out = CheckList::new();
    out.push("displayed images", images);
    out.push(
        "point composite = λ̃",
        compare_tables("backward = λ̃", &lambda.src, &tn, &res.point, &lambda.point),
    );
    out.push(
        "orbit composite = λ",
        if res.classes == lambda.classes {
            Verdict::Pass
        } else {
            Verdict::fail("backward = λ", n.label(), vec![], res.classes, lambda.classes)
        },
    );
    Ok(out)
}

/// Both round trips for one `h`, over the given coalgebras and G-sets.
///
/// `backward(forward(λ)) = λ` at every `N`, and `forward(backward(∇)) = ∇`
/// at every coalgebra, point-level and orbit-level.
pub fn correspondence_round_trips(
    h: &[usize],
    action: &CodomainAction,
    l: &GSet,
    gsets: &[GSet],
    coalgebras: &[SCoalgebra],
) -> Result<CheckList, CoeffError> {
    let mut out = CheckList::new();
    let mut bf = Verdict::Pass;
    for n in gsets {
        let lambda = lambda_at(l, h, action, n)?;
        let fs = cofree(n, l);
        let lam_ln = lambda_at(l, h, action, fs.base())?;
        let nab = forward(&lam_ln, &fs)?;
        let back = backward(&nab.point, l, n)?;
        let v = compare_tables("backward ∘ forward = id", &lambda.src, &lambda.dst, &back.point, &lambda.point)
            .and_then(|| {
                if back.classes == lambda.classes {
                    Verdict::Pass
                } else {
                    Verdict::fail("orbit backward ∘ forward = id", n.label(), vec![], back.classes.clone(), lambda.classes.clone())
                }
            });
        if !v.is_pass() {
            bf = v;
            break;
        }
    }
    out.push("backward ∘ forward", bf);
    let mut fb = Verdict::Pass;
    for c in coalgebras {
        let x = c.base();
        let direct = nabla(h, c);
        let fs = cofree(x, l);
        let nab_fs = nabla_table(h, &fs);
        let lam = backward(&nab_fs, l, x)?;
        let lambda = Lambda {
            src: s_product(l, x),
            dst: t_product(x),
            classes: orbit_map("λ from backward", &s_product(l, x), &t_product(x), &lam.point)
                .map_err(|c| CoeffError::NotWellDefined(Box::new(c)))?,
            point: lam.point,
        };
        let again = forward(&lambda, c)?;
        let tx = t_product(x);
        let v = compare_tables("forward ∘ backward = id", x, &tx, &again.point, &direct.table).and_then(|| {
            match orbit_map("M̃∇", x, &tx, &direct.table) {
                Ok(m) if m == again.classes => Verdict::Pass,
                Ok(m) => Verdict::fail("orbit forward ∘ backward = id", c.label(), vec![], again.classes.clone(), m),
                Err(e) => Verdict::Fail(e),
            }
        });
        if !v.is_pass() {
            fb = v;
            break;
        }
    }
    out.push("forward ∘ backward", fb);
    Ok(out)
}
