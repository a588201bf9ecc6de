//! Pass/fail outcomes carrying the first counterexample.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::gset::GSet;

/// A law instance that failed, with both sides evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub law: String,
    pub object: String,
    pub witness: Vec<usize>,
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {} on {:?}: {:?} != {:?}",
            self.law, self.object, self.witness, self.lhs, self.rhs
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Counterexample),
}

impl Verdict {
    pub fn fail(
        law: impl Into<String>,
        object: impl Into<String>,
        witness: Vec<usize>,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    ) -> Verdict {
        Verdict::Fail(Counterexample {
            law: law.into(),
            object: object.into(),
            witness,
            lhs,
            rhs,
        })
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(c) => Some(c),
        }
    }

    /// Keeps the first failure; evaluates `next` only after a pass.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Pass => next(),
            fail => fail,
        }
    }

    /// First failure of a sequence, or pass.
    pub fn all(items: impl IntoIterator<Item = Verdict>) -> Verdict {
        for v in items {
            if !v.is_pass() {
                return v;
            }
        }
        Verdict::Pass
    }

    /// Same verdict with the law name prefixed.
    pub fn context(self, prefix: &str) -> Verdict {
        match self {
            Verdict::Pass => Verdict::Pass,
            Verdict::Fail(mut c) => {
                let mut law = String::from(prefix);
                law.push_str(": ");
                law.push_str(&c.law);
                c.law = law;
                Verdict::Fail(c)
            }
        }
    }
}

/// Named verdicts in evaluation order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckList {
    pub entries: Vec<(String, Verdict)>,
}

impl CheckList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, v: Verdict) {
        self.entries.push((name.into(), v));
    }

    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|(_, v)| v.is_pass())
    }

    /// First failing entry, with its name as context.
    pub fn verdict(&self) -> Verdict {
        for (name, v) in &self.entries {
            if !v.is_pass() {
                return v.clone().context(name);
            }
        }
        Verdict::Pass
    }

    pub fn extend(&mut self, prefix: &str, other: CheckList) {
        for (name, v) in other.entries {
            let mut full = String::from(prefix);
            full.push('/');
            full.push_str(&name);
            self.entries.push((full, v));
        }
    }
}

/// Compares two tables defined on the points of `domain` and valued in
/// `codomain`; the witness and both sides are decoded into coordinates.
pub fn compare_tables(
    law: &str,
    domain: &GSet,
    codomain: &GSet,
    lhs: &[usize],
    rhs: &[usize],
) -> Verdict {
    match lhs.iter().zip(rhs).position(|(a, b)| a != b) {
        None => Verdict::Pass,
        Some(p) => Verdict::fail(
            law,
            domain.label().to_string(),
            domain.decode(p),
            codomain.decode(lhs[p]),
            codomain.decode(rhs[p]),
        ),
    }
}

/// Checks that `table` is equivariant from `domain` to `codomain`.
pub fn check_equivariant(law: &str, domain: &GSet, codomain: &GSet, table: &[usize]) -> Verdict {
    let group = domain.group();
    for x in domain.points() {
        for g in group.elements() {
            let lhs = table[domain.act(g, x)];
            let rhs = codomain.act(g, table[x]);
            if lhs != rhs {
                let mut witness = vec![g];
                witness.extend(domain.decode(x));
                return Verdict::fail(
                    law,
                    domain.label().to_string(),
                    witness,
                    codomain.decode(lhs),
                    codomain.decode(rhs),
                );
            }
        }
    }
    Verdict::Pass
}

/// Composition of tables: `second ∘ first`.
pub fn compose(second: &[usize], first: &[usize]) -> Vec<usize> {
    first.iter().map(|&y| second[y]).collect()
}

/// Checks that `table` is the identity on its index range.
pub fn check_identity(law: &str, domain: &GSet, table: &[usize]) -> Verdict {
    let id: Vec<usize> = (0..table.len()).collect();
    compare_tables(law, domain, domain, table, &id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_wins() {
        let a = Verdict::fail("a", "X", vec![1], vec![], vec![]);
        let b = Verdict::fail("b", "X", vec![2], vec![], vec![]);
        let v = Verdict::all([Verdict::Pass, a.clone(), b]);
        assert_eq!(v, a);
        assert!(Verdict::all([Verdict::Pass, Verdict::Pass]).is_pass());
        assert_eq!(a.context("outer").counterexample().unwrap().law, "outer: a");
    }

    #[test]
    fn checklist_reports_named_failure() {
        let mut c = CheckList::new();
        c.push("ok", Verdict::Pass);
        c.push("bad", Verdict::fail("eq", "X", vec![0], vec![1], vec![2]));
        assert!(!c.all_pass());
        assert_eq!(c.verdict().counterexample().unwrap().law, "bad: eq");
        assert!(c.get("ok").unwrap().is_pass());
    }
}
