//! Suite runners. Each produces a [`SuiteReport`] whose checks carry the
//! predicted outcome next to the observed one.

use std::fmt;

use duplicial_core::coeff::{
    check_backward, check_forward, correspondence_round_trips, enumerate_configs, lambda_at, nabla,
    translation_witness, CodomainAction, CoeffError,
};
use duplicial_core::comonad::{
    build_s, build_t, check_comonad_laws, check_distributive_law, check_inverse, chi_tilde_transform,
    chi_transform, derive_law_components, enumerate_counit_compatible, Context, ProbeUniverse,
};
use duplicial_core::duplicial::{
    check_identities, compare_operators, cyclicity, representative_independence, Bar, ClosedOperator,
    CompositeOperator, ElementwiseOperator, IdentityKind,
};
use duplicial_core::emcat::{
    check_q_comonad, coalgebra_universe, lax_colax_report, q_comonad, SCoalgebra, DEFAULT_STRUCTURES_PER_OBJECT,
};
use duplicial_core::gset::{
    check_braiding, crossed_from, enumerate_crossed_structures, enumerate_equivariant_maps_bounded, orbits,
    yang_baxter_witness, CrossedGSet, DEFAULT_SEARCH_BOUND,
};
use duplicial_core::homology::{
    boundary_matrices, check_boundary_squared, homology_groups, HomologyGroup, Ordering, DEFAULT_MATRIX_BOUND,
};
use duplicial_core::triangle::{check_phi, constant_family, pi_theta, triangle_universe};
use duplicial_core::verdict::Verdict;
use duplicial_core::GSet;
use serde_json::{json, Value};

use crate::report::{CheckResult, SuiteReport};
use crate::scenario::{NamedConfig, Scenario};

/// Suites in execution order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Laws,
    Distributive,
    LaxColax,
    Triangle,
    Correspondence,
    Duplicial,
    Cyclicity,
    Homology,
    Classify,
    Braiding,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Laws,
        Suite::Distributive,
        Suite::LaxColax,
        Suite::Triangle,
        Suite::Correspondence,
        Suite::Duplicial,
        Suite::Cyclicity,
        Suite::Homology,
        Suite::Classify,
        Suite::Braiding,
    ];

    pub fn all() -> Vec<Suite> {
        Suite::ALL.to_vec()
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Laws => "laws",
            Suite::Distributive => "distributive",
            Suite::LaxColax => "lax-colax",
            Suite::Triangle => "triangle",
            Suite::Correspondence => "correspondence",
            Suite::Duplicial => "duplicial",
            Suite::Cyclicity => "cyclicity",
            Suite::Homology => "homology",
            Suite::Classify => "classify",
            Suite::Braiding => "braiding",
        }
    }

    /// A suite name, or `all`.
    pub fn parse(name: &str) -> Result<Vec<Suite>, String> {
        if name == "all" {
            return Ok(Suite::all());
        }
        Suite::ALL
            .iter()
            .find(|s| s.name() == name)
            .map(|s| vec![*s])
            .ok_or_else(|| format!("unknown suite {name:?}"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Settings shared by every suite.
#[derive(Debug, Clone)]
pub struct RunContext<'a> {
    pub scenario: &'a Scenario,
    pub level_cap: usize,
    /// Morphisms kept per ordered pair of probe objects.
    pub probe_bound: usize,
    pub universe: ProbeUniverse<GSet>,
}

impl<'a> RunContext<'a> {
    pub fn new(scenario: &'a Scenario, level_cap: usize, probe_bound: usize) -> Result<Self, String> {
        let g = &scenario.group;
        let mut objects: Vec<GSet> = scenario.gsets.iter().map(|(_, x)| x.clone()).collect();
        for extra in [GSet::regular(g), GSet::conj(g), GSet::trivial(g, 2), GSet::point(g)] {
            if !objects.contains(&extra) {
                objects.push(extra);
            }
        }
        let universe = ProbeUniverse::with_all_maps(objects, probe_bound).map_err(|e| e.to_string())?;
        Ok(RunContext {
            scenario,
            level_cap,
            probe_bound,
            universe,
        })
    }

    /// `L` objects: those named by coefficient configurations, or every
    /// declared G-set.
    fn ls(&self) -> Vec<(String, GSet)> {
        let sc = self.scenario;
        let mut out: Vec<(String, GSet)> = Vec::new();
        if sc.coefficients.is_empty() {
            return sc.gsets.clone();
        }
        for c in &sc.coefficients {
            if !out.iter().any(|(n, _)| *n == c.l_name) {
                out.push((c.l_name.clone(), c.config.l().clone()));
            }
        }
        out
    }

    fn ns(&self) -> Vec<(String, GSet)> {
        let sc = self.scenario;
        if sc.coefficients.is_empty() {
            return sc.gsets.clone();
        }
        let mut out: Vec<(String, GSet)> = Vec::new();
        for c in &sc.coefficients {
            if !out.iter().any(|(n, _)| *n == c.n_name) {
                out.push((c.n_name.clone(), c.config.n().clone()));
            }
        }
        out
    }

    fn coalgebras(&self, l: &GSet) -> Result<ProbeUniverse<SCoalgebra>, String> {
        coalgebra_universe(l, &self.universe.objects, DEFAULT_STRUCTURES_PER_OBJECT, 4).map_err(|e| e.to_string())
    }
}

pub fn run_suite(suite: Suite, rc: &RunContext<'_>) -> SuiteReport {
    let mut r = SuiteReport::new(suite.name());
    match suite {
        Suite::Laws => laws(rc, &mut r),
        Suite::Distributive => distributive(rc, &mut r),
        Suite::LaxColax => lax_colax(rc, &mut r),
        Suite::Triangle => triangle(rc, &mut r),
        Suite::Correspondence => correspondence(rc, &mut r),
        Suite::Duplicial => duplicial(rc, &mut r),
        Suite::Cyclicity => cyclicity_suite(rc, &mut r),
        Suite::Homology => homology(rc, &mut r),
        Suite::Classify => classify(rc, &mut r),
        Suite::Braiding => braiding(rc, &mut r),
    }
    r
}

fn laws(rc: &RunContext<'_>, r: &mut SuiteReport) {
    let t = build_t(&rc.scenario.group);
    r.checklist("T", &check_comonad_laws(&t, &rc.universe));
    for (name, l) in rc.ls() {
        r.checklist(&format!("S[{name}]"), &check_comonad_laws(&build_s(&l), &rc.universe));
        match rc.coalgebras(&l) {
            Ok(cu) => {
                r.checklist(&format!("Q[{name}]"), &check_q_comonad(&q_comonad(&l), &cu));
                r.table(&format!("Q[{name}] probe coalgebras"), json!(cu.objects.len()));
            }
            Err(e) => r.push(CheckResult::error(format!("Q[{name}]"), e)),
        }
    }
    r.table("probe objects", json!(rc.universe.objects.len()));
    r.table("probe morphisms", json!(rc.universe.morphisms.len()));
}

fn distributive(rc: &RunContext<'_>, r: &mut SuiteReport) {
    for (name, l) in rc.ls() {
        let ctx = Context::new(&l);
        let chi = chi_transform(&ctx);
        let chi_t = chi_tilde_transform(&ctx);
        r.checklist(&format!("χ̃[{name}]"), &check_distributive_law(&chi_t, &rc.universe));
        r.verdict(format!("χ̃[{name}]: mutually inverse with χ"), true, &check_inverse(&chi, &chi_t, &rc.universe));
        let forced = Verdict::all(rc.universe.objects.iter().map(|x| derive_law_components(&chi_t, x).verdict));
        r.verdict(format!("χ̃[{name}]: equals the counit-forced components"), true, &forced);
        let mut counts = serde_json::Map::new();
        let mut unique = Verdict::Pass;
        let mut searched = 0usize;
        for x in &rc.universe.objects {
            match enumerate_counit_compatible(&ctx, x, DEFAULT_SEARCH_BOUND) {
                Ok(found) => {
                    searched += 1;
                    counts.insert(x.label().to_string(), json!(found.len()));
                    if unique.is_pass() && (found.len() != 1 || found[0] != chi_t.component(x)) {
                        unique = Verdict::fail("unique counit-compatible law", x.label(), vec![], vec![found.len()], vec![1]);
                    }
                }
                Err(_) => {
                    counts.insert(x.label().to_string(), Value::Null);
                }
            }
        }
        if searched > 0 {
            r.verdict(format!("χ̃[{name}]: unique among equivariant candidates"), true, &unique);
        }
        r.table(&format!("counit-compatible candidates[{name}]"), Value::Object(counts));
    }
}

fn a_bars(rc: &RunContext<'_>) -> Vec<usize> {
    let sc = rc.scenario;
    if sc.coefficients.is_empty() {
        return sc.group.elements().collect();
    }
    let mut v: Vec<usize> = sc.coefficients.iter().map(|c| c.a_bar).collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn lax_colax(rc: &RunContext<'_>, r: &mut SuiteReport) {
    for (name, l) in rc.ls() {
        let ctx = Context::new(&l);
        let cu = match rc.coalgebras(&l) {
            Ok(cu) => cu,
            Err(e) => {
                r.push(CheckResult::error(format!("coalgebras[{name}]"), e));
                continue;
            }
        };
        let mut rows = Vec::new();
        for a in a_bars(rc) {
            match lax_colax_report(&ctx, a, &rc.universe, &cu) {
                Ok(rep) => {
                    let e = rep.expected_pass();
                    r.push(
                        CheckResult::from_verdict(format!("lax[{name}] at ā={a}"), e, &rep.lax.verdict())
                            .with_note("holds exactly when ā is the identity"),
                    );
                    r.push(
                        CheckResult::from_verdict(format!("colax[{name}] at ā={a}"), e, &rep.colax.verdict())
                            .with_note("holds exactly when ā is the identity"),
                    );
                    rows.push(json!({
                        "a_bar": a,
                        "lax": rep.lax.all_pass(),
                        "colax": rep.colax.all_pass(),
                        "meta_satisfied": rep.meta_satisfied(),
                    }));
                }
                Err(e) => r.push(CheckResult::error(format!("lax-colax[{name}] at ā={a}"), e.to_string())),
            }
        }
        r.table(&format!("lax-colax[{name}]"), Value::Array(rows));
    }
}

fn triangle(rc: &RunContext<'_>, r: &mut SuiteReport) {
    let group = rc.scenario.group.clone();
    let tu = triangle_universe(&rc.universe);
    for (name, l) in rc.ls() {
        let constants = Verdict::all(l.points().map(|l0| check_phi(&l, &tu, &constant_family(&tu, l0)).verdict()));
        r.verdict(format!("φ[{name}]: every constant family is a comonad morphism"), true, &constants);
        if l.size() >= 2 {
            if let Some(i) = tu.objects.iter().position(|x| x.size() >= 2) {
                let mut fam = constant_family(&tu, 0);
                fam[i][1] = 1;
                r.push(
                    CheckResult::from_verdict(
                        format!("φ[{name}]: a non-constant family is rejected"),
                        false,
                        &check_phi(&l, &tu, &fam).verdict(),
                    )
                    .with_note("natural families are constant"),
                );
            }
        }
        let cu = match rc.coalgebras(&l) {
            Ok(cu) => cu,
            Err(e) => {
                r.push(CheckResult::error(format!("coalgebras[{name}]"), e));
                continue;
            }
        };
        let max_y = rc.level_cap.min(3);
        let mut adj = Verdict::Pass;
        let mut instances = 0usize;
        'outer: for c in &cu.objects {
            for l0 in l.points() {
                for ny in 1..=max_y {
                    let f_x = vec![l0; c.base().size()];
                    match pi_theta(&group, &vec![l0; ny], c, &f_x, 4096) {
                        Ok(pt) => {
                            instances += 1;
                            if !pt.checks.all_pass() {
                                adj = pt.checks.verdict();
                                break 'outer;
                            }
                        }
                        Err(e) => {
                            adj = Verdict::fail(e.to_string(), c.label(), vec![], vec![], vec![]);
                            break 'outer;
                        }
                    }
                }
            }
        }
        r.verdict(format!("K ⊣ D[{name}]: Π and Θ are inverse bijections"), true, &adj);
        r.table(&format!("K ⊣ D instances[{name}]"), json!(instances));
    }
}

fn config_json(c: &NamedConfig) -> Value {
    json!({
        "name": c.name,
        "L": c.l_name,
        "N": c.n_name,
        "action": c.config.action().name(),
        "h": c.config.h(),
        "f": c.config.f(),
        "a_bar": c.a_bar,
    })
}

fn correspondence(rc: &RunContext<'_>, r: &mut SuiteReport) {
    for nc in &rc.scenario.coefficients {
        let cfg = &nc.config;
        let l = cfg.l();
        let h = cfg.h();
        let action = cfg.action();
        let translation = {
            let group = cfg.group();
            l.points().all(|b| group.elements().all(|g| h[l.act(g, b)] == group.mul(g, h[b])))
        };
        let name = &nc.name;
        let lam = lambda_at(l, h, action, cfg.n());
        let observed = match &lam {
            Ok(_) => Verdict::Pass,
            Err(CoeffError::NotEquivariant { witness, .. }) | Err(CoeffError::NotWellDefined(witness)) => {
                Verdict::Fail((**witness).clone())
            }
            Err(e) => Verdict::fail(e.to_string(), "", vec![], vec![], vec![]),
        };
        r.push(
            CheckResult::from_verdict(format!("λ̃[{name}] equivariant"), translation, &observed)
                .with_note("requires h to commute with left translation"),
        );
        if !translation {
            r.table(&format!("correspondence[{name}]"), json!({"hypothesis": "not met", "checked": false}));
            continue;
        }
        let cu = match rc.coalgebras(l) {
            Ok(cu) => cu,
            Err(e) => {
                r.push(CheckResult::error(format!("coalgebras[{name}]"), e));
                continue;
            }
        };
        let mut nab = Verdict::Pass;
        let mut fwd = Verdict::Pass;
        for c in &cu.objects {
            if nab.is_pass() {
                nab = nabla(h, c).checks.verdict();
            }
            if fwd.is_pass() {
                fwd = match check_forward(h, action, c) {
                    Ok(list) => list.verdict(),
                    Err(e) => Verdict::fail(e.to_string(), c.label(), vec![], vec![], vec![]),
                };
            }
        }
        let mut bwd = Verdict::Pass;
        for n in &rc.universe.objects {
            if bwd.is_pass() {
                bwd = match check_backward(h, action, l, n) {
                    Ok(list) => list.verdict(),
                    Err(e) => Verdict::fail(e.to_string(), n.label(), vec![], vec![], vec![]),
                };
            }
        }
        r.verdict(format!("∇[{name}]: morphism, Q-coalgebra, orbit coalgebra"), true, &nab);
        r.verdict(format!("forward[{name}]: chain images and M̃∇"), true, &fwd);
        r.verdict(format!("backward[{name}]: chain images and λ"), true, &bwd);
        match correspondence_round_trips(h, action, l, &rc.universe.objects, &cu.objects) {
            Ok(list) => r.checklist(&format!("round trips[{name}]"), &list),
            Err(e) => r.push(CheckResult::error(format!("round trips[{name}]"), e.to_string())),
        }
        r.table(
            &format!("correspondence[{name}]"),
            json!({"hypothesis": "met", "coalgebras": cu.objects.len(), "gsets": rc.universe.objects.len()}),
        );
    }
}

fn duplicial(rc: &RunContext<'_>, r: &mut SuiteReport) {
    let cap = rc.level_cap;
    for nc in &rc.scenario.coefficients {
        let cfg = &nc.config;
        let name = &nc.name;
        let bar = Bar::new(cfg.n());
        let closed = ClosedOperator::from_config(cfg);
        r.checklist(&format!("simplicial[{name}]"), &check_identities(&bar, &closed, IdentityKind::Simplicial, cap));
        r.checklist(&format!("duplicial[{name}]"), &check_identities(&bar, &closed, IdentityKind::Duplicial, cap));
        let composite = CompositeOperator::new(cfg, cfg.group().identity());
        let tw = translation_witness(cfg);
        let predicted = tw.is_none();
        let note = match tw {
            None => "h commutes with translation on G·f(N); routes predicted to agree".to_string(),
            Some((g, w)) => format!("h(g·f(w)) != g·h(f(w)) at g={g}, w={w}; routes predicted to differ"),
        };
        r.push(
            CheckResult::from_verdict(
                format!("t closed = t composite[{name}]"),
                predicted,
                &compare_operators(&bar, &closed, &composite, cap),
            )
            .with_note(note.clone()),
        );
        r.push(
            CheckResult::from_verdict(
                format!("t composite representative-independent[{name}]"),
                predicted,
                &representative_independence(cfg, cap),
            )
            .with_note(note),
        );
        let alt = compare_operators(&bar, &composite, &ElementwiseOperator::new(cfg), cap);
        r.table(
            &format!("elementwise reading[{name}]"),
            json!({
                "differs": !alt.is_pass(),
                "first_difference": alt.counterexample().map(|c| c.witness.clone()),
            }),
        );
    }
}

fn cyclicity_suite(rc: &RunContext<'_>, r: &mut SuiteReport) {
    let mut rows = Vec::new();
    for nc in &rc.scenario.coefficients {
        let cfg = &nc.config;
        let name = &nc.name;
        match cyclicity(cfg.n(), &cfg.alpha_table(), rc.level_cap) {
            Ok(rep) => {
                let agree = if rep.agree() {
                    Verdict::Pass
                } else {
                    let w = rep
                        .brute
                        .counterexample()
                        .or(rep.criterion.counterexample())
                        .cloned()
                        .map(Verdict::Fail)
                        .unwrap_or(Verdict::Pass);
                    match w {
                        Verdict::Fail(c) => Verdict::Fail(c),
                        Verdict::Pass => Verdict::fail("brute and criterion disagree", name.as_str(), vec![], vec![], vec![]),
                    }
                };
                r.verdict(format!("brute = criterion[{name}]"), true, &agree);
                if rep.criterion.is_pass() {
                    let crossed = if rep.alpha_crossed {
                        Verdict::Pass
                    } else {
                        Verdict::fail("α crossed", name.as_str(), vec![], rep.alpha.clone(), vec![])
                    };
                    r.verdict(format!("α crossed when cyclic[{name}]"), true, &crossed);
                }
                let mut row = config_json(nc);
                row["alpha"] = json!(rep.alpha);
                row["brute"] = json!(rep.brute.is_pass());
                row["criterion"] = json!(rep.criterion.is_pass());
                row["alpha_crossed"] = json!(rep.alpha_crossed);
                if let Some(c) = rep.brute.counterexample() {
                    row["brute_witness"] = json!(c.witness);
                }
                if let Some(c) = rep.criterion.counterexample() {
                    row["criterion_witness"] = json!({"law": c.law, "at": c.witness});
                }
                rows.push(row);
            }
            Err(e) => r.push(CheckResult::error(format!("cyclicity[{name}]"), e.to_string())),
        }
    }
    r.table("configurations", Value::Array(rows));
}

fn group_json(h: &[HomologyGroup]) -> Value {
    Value::Array(
        h.iter()
            .enumerate()
            .map(|(k, g)| json!({"level": k, "betti": g.betti, "torsion": g.torsion, "group": g.to_string()}))
            .collect(),
    )
}

fn homology(rc: &RunContext<'_>, r: &mut SuiteReport) {
    for (name, n) in rc.ns() {
        let bar = Bar::new(&n);
        // highest boundary that fits the matrix bound
        let top = (1..=rc.level_cap + 1)
            .rev()
            .find(|&t| bar.count(t - 1) as u128 * bar.count(t) as u128 <= DEFAULT_MATRIX_BOUND)
            .unwrap_or(1);
        if top <= rc.level_cap {
            r.table(
                &format!("homology[{name}] truncated"),
                json!({"requested_levels": rc.level_cap + 1, "computed_levels": top, "matrix_bound": DEFAULT_MATRIX_BOUND.to_string()}),
            );
        }
        match boundary_matrices(&bar, top, Ordering::Lexicographic, DEFAULT_MATRIX_BOUND) {
            Ok(ms) => r.verdict(format!("∂∂ = 0[{name}]"), true, &check_boundary_squared(&ms)),
            Err(e) => {
                r.push(CheckResult::error(format!("boundary[{name}]"), e.to_string()));
                continue;
            }
        }
        let lex = homology_groups(&bar, top, Ordering::Lexicographic, DEFAULT_MATRIX_BOUND);
        let rev = homology_groups(&bar, top, Ordering::Reversed, DEFAULT_MATRIX_BOUND);
        let (lex, rev) = match (lex, rev) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                r.push(CheckResult::error(format!("homology[{name}]"), e.to_string()));
                continue;
            }
        };
        let same = match lex.iter().zip(&rev).position(|(a, b)| a != b) {
            None => Verdict::Pass,
            Some(k) => Verdict::fail("order independence", name.as_str(), vec![k], vec![], vec![]),
        };
        r.verdict(format!("independent of simplex order[{name}]"), true, &same);
        if n.size() == 1 {
            let h0 = if lex[0] == (HomologyGroup { betti: 1, torsion: vec![] }) {
                Verdict::Pass
            } else {
                Verdict::fail("H0 = Z", name.as_str(), vec![0], vec![lex[0].betti], vec![1])
            };
            r.verdict(format!("H0 = Z[{name}]"), true, &h0);
            if lex.len() > 1 {
                let ab: Vec<u128> = rc.scenario.group.abelianization_invariants().iter().map(|&d| d as u128).collect();
                let h1 = if lex[1].betti == 0 && lex[1].torsion == ab {
                    Verdict::Pass
                } else {
                    Verdict::fail(
                        "H1 = G^ab",
                        name.as_str(),
                        vec![1],
                        lex[1].torsion.iter().map(|&d| d as usize).collect(),
                        ab.iter().map(|&d| d as usize).collect(),
                    )
                };
                r.verdict(format!("H1 = G^ab[{name}]"), true, &h1);
            }
        }
        r.table(&format!("homology[{name}]"), group_json(&lex));
    }
}

const CLASSIFY_ROWS: usize = 64;

fn classify(rc: &RunContext<'_>, r: &mut SuiteReport) {
    let sc = rc.scenario;
    let mut pairs: Vec<(String, GSet, String, GSet)> = Vec::new();
    if sc.coefficients.is_empty() {
        for (ln, l) in &sc.gsets {
            for (nn, n) in &sc.gsets {
                pairs.push((ln.clone(), l.clone(), nn.clone(), n.clone()));
            }
        }
    } else {
        for c in &sc.coefficients {
            if !pairs.iter().any(|p| p.0 == c.l_name && p.2 == c.n_name) {
                pairs.push((c.l_name.clone(), c.config.l().clone(), c.n_name.clone(), c.config.n().clone()));
            }
        }
    }
    let mut crossed_counts = serde_json::Map::new();
    for (name, x) in &sc.gsets {
        crossed_counts.insert(name.clone(), json!(enumerate_crossed_structures(x).len()));
    }
    r.table("crossed structures", Value::Object(crossed_counts));
    for (ln, l, nn, n) in pairs {
        let key = format!("{ln}/{nn}");
        let homs = enumerate_equivariant_maps_bounded(&n, &l, DEFAULT_SEARCH_BOUND).map(|v| v.len()).ok();
        let mut entry = serde_json::Map::new();
        entry.insert("f candidates".into(), json!(homs));
        let mut agree = Verdict::Pass;
        for action in [CodomainAction::Translation, CodomainAction::Conjugation] {
            let configs = match enumerate_configs(&l, &n, &action, DEFAULT_SEARCH_BOUND) {
                Ok(c) => c,
                Err(e) => {
                    r.push(CheckResult::error(format!("enumerate[{key}, {action}]"), e.to_string()));
                    continue;
                }
            };
            let mut rows = Vec::new();
            let mut cyclic = 0usize;
            for cfg in &configs {
                let alpha = cfg.alpha_table();
                match cyclicity(&n, &alpha, rc.level_cap) {
                    Ok(rep) => {
                        if rep.criterion.is_pass() {
                            cyclic += 1;
                        }
                        if agree.is_pass() && !rep.satisfied() {
                            agree = rep.brute.counterexample().cloned().map(Verdict::Fail).unwrap_or_else(|| {
                                Verdict::fail("brute and criterion disagree", key.as_str(), alpha.clone(), vec![], vec![])
                            });
                        }
                        if rows.len() < CLASSIFY_ROWS {
                            rows.push(json!({
                                "h": cfg.h(),
                                "f": cfg.f(),
                                "alpha": alpha,
                                "cyclic": rep.criterion.is_pass(),
                                "brute": rep.brute.is_pass(),
                            }));
                        }
                    }
                    Err(e) => r.push(CheckResult::error(format!("cyclicity[{key}]"), e.to_string())),
                }
            }
            entry.insert(
                action.name().to_string(),
                json!({"configurations": configs.len(), "cyclic": cyclic, "rows": rows}),
            );
        }
        r.verdict(format!("brute = criterion on every enumerated configuration[{key}]"), true, &agree);
        r.table(&key, Value::Object(entry));
    }
}

/// `α(y)² α(x) = α(x) α(y)²` for all pairs, the condition under which the
/// braiding preserves the crossed structure.
fn braiding_predicted(x: &CrossedGSet, y: &CrossedGSet) -> bool {
    let g = x.base().group();
    x.base().points().all(|a| {
        y.base().points().all(|b| {
            let (p, q) = (x.alpha(a), y.alpha(b));
            let q2 = g.mul(q, q);
            g.mul(q2, p) == g.mul(p, q2)
        })
    })
}

fn braiding(rc: &RunContext<'_>, r: &mut SuiteReport) {
    let sc = rc.scenario;
    let mut structures: Vec<(String, CrossedGSet)> = Vec::new();
    for nc in &sc.coefficients {
        if let Ok(c) = crossed_from(nc.config.n(), nc.config.alpha_table()) {
            structures.push((format!("α[{}]", nc.name), c));
        }
    }
    if structures.is_empty() {
        for (name, x) in &sc.gsets {
            for (i, c) in enumerate_crossed_structures(x).into_iter().take(3).enumerate() {
                structures.push((format!("{name}#{i}"), c));
            }
        }
    }
    structures.truncate(6);
    let mut rows = Vec::new();
    for (xn, x) in &structures {
        for (yn, y) in &structures {
            let key = format!("σ[{xn}, {yn}]");
            match check_braiding(x, y) {
                Ok(rep) => {
                    let be = if rep.bijective && rep.equivariant {
                        Verdict::Pass
                    } else {
                        Verdict::fail("σ bijective and equivariant", key.as_str(), vec![], vec![], vec![])
                    };
                    r.verdict(format!("{key} bijective and equivariant"), true, &be);
                    let observed = match rep.crossed_morphism_witness {
                        None => Verdict::Pass,
                        Some((a, b)) => Verdict::fail("σ preserves α", key.as_str(), vec![a, b], vec![], vec![]),
                    };
                    r.push(
                        CheckResult::from_verdict(format!("{key} preserves α"), braiding_predicted(x, y), &observed)
                            .with_note("predicted exactly when α(y)²α(x) = α(x)α(y)² for all x, y"),
                    );
                    rows.push(json!({"pair": key, "preserves_alpha": rep.crossed_morphism_witness.is_none()}));
                }
                Err(e) => r.push(CheckResult::error(key, e.to_string())),
            }
        }
    }
    let mut yb = Vec::new();
    for (xn, x) in structures.iter().take(3) {
        for (yn, y) in structures.iter().take(3) {
            for (zn, z) in structures.iter().take(3) {
                let w = yang_baxter_witness(x, y, z);
                yb.push(json!({
                    "triple": [xn, yn, zn],
                    "holds": w.is_none(),
                    "witness": w.map(|(at, _, _)| at.to_vec()),
                }));
            }
        }
    }
    r.table("braiding", Value::Array(rows));
    r.table("yang-baxter", Value::Array(yb));
}

/// Scenario echo for the report header.
pub fn scenario_json(sc: &Scenario) -> Value {
    json!({
        "name": sc.name,
        "group": sc.group_label,
        "order": sc.group.order(),
        "gsets": sc.gsets.iter().map(|(n, x)| json!({
            "name": n,
            "size": x.size(),
            "orbits": orbits(x).orbit_sizes(),
        })).collect::<Vec<_>>(),
        "coefficients": sc.coefficients.iter().map(config_json).collect::<Vec<_>>(),
        "suites": sc.suites.iter().map(|s| s.name()).collect::<Vec<_>>(),
    })
}
