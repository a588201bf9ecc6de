//! Scenario files: a TOML document with `group`, `gsets`, `coefficients`
//! and `run` sections.

use std::collections::BTreeMap;
use std::ops::Range;
use std::sync::Arc;

use duplicial_core::coeff::{CodomainAction, CoeffError, CoefficientConfig};
use duplicial_core::{standard_group, GSet, Group, GroupKind};
use serde::Deserialize;
use toml::Spanned;

use crate::suites::Suite;

pub const DEFAULT_LEVEL_CAP: usize = 3;

#[derive(Debug, thiserror::Error)]
pub enum ScenarioError {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unresolved reference {name:?} at line {line}")]
    UnresolvedReference { name: String, line: usize },
    #[error("equivariance declaration failed for {what} at line {line}: {detail}")]
    EquivarianceDeclarationFailed {
        what: String,
        line: usize,
        detail: String,
    },
}

impl ScenarioError {
    pub fn line(&self) -> usize {
        match self {
            ScenarioError::Parse { line, .. }
            | ScenarioError::UnresolvedReference { line, .. }
            | ScenarioError::EquivarianceDeclarationFailed { line, .. } => *line,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    #[serde(default)]
    name: Option<String>,
    group: Spanned<RawGroup>,
    #[serde(default)]
    gsets: BTreeMap<String, Spanned<RawGSet>>,
    #[serde(default)]
    coefficients: Vec<Spanned<RawCoefficient>>,
    #[serde(default)]
    run: Option<Spanned<RawRun>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    kind: String,
    #[serde(default)]
    n: Option<usize>,
    #[serde(default)]
    table: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    factors: Option<Vec<RawGroup>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGSet {
    kind: String,
    #[serde(default)]
    size: Option<usize>,
    #[serde(default)]
    table: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCoefficient {
    name: String,
    #[serde(rename = "L")]
    l: Spanned<String>,
    #[serde(rename = "N")]
    n: Spanned<String>,
    action: String,
    #[serde(default)]
    action_table: Option<Vec<Vec<usize>>>,
    h: Vec<usize>,
    f: Vec<usize>,
    #[serde(default)]
    a_bar: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRun {
    #[serde(default)]
    suites: Option<Vec<String>>,
    #[serde(default)]
    level_cap: Option<usize>,
}

/// A coefficient configuration with its names and `ā`.
#[derive(Debug, Clone)]
pub struct NamedConfig {
    pub name: String,
    pub l_name: String,
    pub n_name: String,
    pub config: CoefficientConfig,
    pub a_bar: usize,
}

/// A validated scenario.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: String,
    pub group_label: String,
    pub group: Arc<Group>,
    /// Declared G-sets in name order.
    pub gsets: Vec<(String, GSet)>,
    pub coefficients: Vec<NamedConfig>,
    pub level_cap: usize,
    pub suites: Vec<Suite>,
}

impl Scenario {
    pub fn gset(&self, name: &str) -> Option<&GSet> {
        self.gsets.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }
}

fn line_of(text: &str, span: Range<usize>) -> usize {
    text[..span.start.min(text.len())].matches('\n').count() + 1
}

fn parse_err(text: &str, span: Range<usize>, message: impl Into<String>) -> ScenarioError {
    ScenarioError::Parse {
        line: line_of(text, span),
        message: message.into(),
    }
}

fn group_kind(raw: &RawGroup) -> Result<GroupKind, String> {
    let need_n = || raw.n.ok_or_else(|| format!("group kind {:?} needs n", raw.kind));
    match raw.kind.as_str() {
        "cyclic" => Ok(GroupKind::Cyclic(need_n()?)),
        "dihedral" => Ok(GroupKind::Dihedral(need_n()?)),
        "symmetric" => Ok(GroupKind::Symmetric(need_n()?)),
        "product" => match raw.factors.as_deref() {
            Some([a, b]) => Ok(GroupKind::Product(Box::new(group_kind(a)?), Box::new(group_kind(b)?))),
            _ => Err("product needs exactly two factors".into()),
        },
        other => Err(format!("unknown group kind {other:?}")),
    }
}

fn build_group(raw: &RawGroup) -> Result<(Group, String), String> {
    if raw.kind == "table" {
        let rows = raw.table.as_ref().ok_or("group kind \"table\" needs table")?;
        let g = Group::from_table(rows).map_err(|e| e.to_string())?;
        let label = format!("table({})", g.order());
        return Ok((g, label));
    }
    let kind = group_kind(raw)?;
    let g = standard_group(&kind).map_err(|e| e.to_string())?;
    Ok((g, kind.to_string()))
}

fn build_gset(group: &Arc<Group>, name: &str, raw: &RawGSet) -> Result<GSet, String> {
    let g = match raw.kind.as_str() {
        "regular" => GSet::regular(group),
        "conj" => GSet::conj(group),
        "point" => GSet::point(group),
        "trivial" => GSet::trivial(group, raw.size.ok_or("trivial G-set needs size")?),
        "table" => {
            let rows = raw.table.as_ref().ok_or("G-set kind \"table\" needs table")?;
            GSet::from_table(group.clone(), rows).map_err(|e| e.to_string())?
        }
        other => return Err(format!("unknown G-set kind {other:?}")),
    };
    Ok(g.with_label(name))
}

fn parse_suites(names: &[String]) -> Result<Vec<Suite>, String> {
    let mut out = Vec::new();
    for n in names {
        for s in Suite::parse(n)? {
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let raw: RawScenario = toml::from_str(text).map_err(|e| ScenarioError::Parse {
        line: e.span().map_or(1, |s| line_of(text, s)),
        message: e.message().to_string(),
    })?;

    let gspan = raw.group.span();
    let (group, group_label) = build_group(raw.group.get_ref()).map_err(|m| parse_err(text, gspan, m))?;
    let group = Arc::new(group);

    let mut gsets = Vec::with_capacity(raw.gsets.len());
    for (name, spec) in &raw.gsets {
        let g = build_gset(&group, name, spec.get_ref()).map_err(|m| parse_err(text, spec.span(), m))?;
        gsets.push((name.clone(), g));
    }
    let lookup = |r: &Spanned<String>| -> Result<GSet, ScenarioError> {
        gsets
            .iter()
            .find(|(n, _)| n == r.get_ref())
            .map(|(_, g)| g.clone())
            .ok_or_else(|| ScenarioError::UnresolvedReference {
                name: r.get_ref().clone(),
                line: line_of(text, r.span()),
            })
    };

    let mut coefficients = Vec::with_capacity(raw.coefficients.len());
    for entry in &raw.coefficients {
        let span = entry.span();
        let c = entry.get_ref();
        let l = lookup(&c.l)?;
        let n = lookup(&c.n)?;
        let action = match c.action.as_str() {
            "translation" => CodomainAction::Translation,
            "conjugation" => CodomainAction::Conjugation,
            "table" => CodomainAction::Table(
                c.action_table
                    .clone()
                    .ok_or_else(|| parse_err(text, span.clone(), "action \"table\" needs action_table"))?,
            ),
            other => return Err(parse_err(text, span, format!("unknown action {other:?}"))),
        };
        let config = CoefficientConfig::new(l, n, c.h.clone(), action, c.f.clone()).map_err(|e| match e {
            CoeffError::NotEquivariant { map, action, witness } => ScenarioError::EquivarianceDeclarationFailed {
                what: format!("{} in {:?} ({action} action)", map, c.name),
                line: line_of(text, span.clone()),
                detail: witness.to_string(),
            },
            other => parse_err(text, span.clone(), other.to_string()),
        })?;
        let a_bar = c.a_bar.unwrap_or(group.identity());
        if a_bar >= group.order() {
            return Err(parse_err(text, span, format!("a_bar {a_bar} is not a group element")));
        }
        coefficients.push(NamedConfig {
            name: c.name.clone(),
            l_name: c.l.get_ref().clone(),
            n_name: c.n.get_ref().clone(),
            config,
            a_bar,
        });
    }

    let (suites, level_cap) = match &raw.run {
        None => (Suite::all(), DEFAULT_LEVEL_CAP),
        Some(r) => {
            let span = r.span();
            let r = r.get_ref();
            let suites = match &r.suites {
                None => Suite::all(),
                Some(names) => parse_suites(names).map_err(|m| parse_err(text, span.clone(), m))?,
            };
            let cap = r.level_cap.unwrap_or(DEFAULT_LEVEL_CAP);
            if cap == 0 {
                return Err(parse_err(text, span, "level_cap must be at least 1"));
            }
            (suites, cap)
        }
    };

    Ok(Scenario {
        name: raw.name.unwrap_or_else(|| "scenario".into()),
        group_label,
        group,
        gsets,
        coefficients,
        level_cap,
        suites,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
[group]
kind = "cyclic"
n = 2

[gsets.N]
kind = "point"

[run]
suites = ["laws"]
"#;

    #[test]
    fn minimal_parses() {
        let s = parse_scenario(MINIMAL).unwrap();
        assert_eq!(s.group.order(), 2);
        assert_eq!(s.suites, vec![Suite::Laws]);
        assert_eq!(s.level_cap, DEFAULT_LEVEL_CAP);
    }

    #[test]
    fn unresolved_reference() {
        let text = r#"
[group]
kind = "cyclic"
n = 2

[gsets.L]
kind = "regular"

[[coefficients]]
name = "c"
L = "L"
N = "M"
action = "translation"
h = [0, 1]
f = []
"#;
        match parse_scenario(text) {
            Err(ScenarioError::UnresolvedReference { name, line }) => {
                assert_eq!(name, "M");
                assert_eq!(line, 12);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn conjugation_declaration_fails() {
        let text = r#"
[group]
kind = "cyclic"
n = 2

[gsets.L]
kind = "regular"

[[coefficients]]
name = "c"
L = "L"
N = "L"
action = "conjugation"
h = [0, 1]
f = [0, 1]
"#;
        match parse_scenario(text) {
            Err(ScenarioError::EquivarianceDeclarationFailed { what, detail, .. }) => {
                assert!(what.contains("conjugation"));
                assert!(!detail.is_empty());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_error_has_line() {
        let text = "[group]\nkind = \"cyclic\"\nn = = 2\n";
        match parse_scenario(text) {
            Err(ScenarioError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_suite_rejected() {
        let text = "[group]\nkind = \"cyclic\"\nn = 2\n[run]\nsuites = [\"nope\"]\n";
        assert!(matches!(parse_scenario(text), Err(ScenarioError::Parse { line: 4, .. })));
    }
}
