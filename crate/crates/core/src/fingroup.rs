//! Finite groups stored as explicit Cayley tables.
//!
//! Elements are dense indices `0..order` and the identity is always index 0.
//! Every higher module speaks in these indices.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Default bound on the order of groups built by [`standard_group`].
pub const DEFAULT_ORDER_BOUND: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("multiplication table is not square or has entries out of range (row {row})")]
    MalformedTable { row: usize },
    #[error("table is empty")]
    Empty,
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("group of order {order} exceeds the configured bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
    #[error("invalid parameter for {kind}: {detail}")]
    InvalidParameter { kind: &'static str, detail: &'static str },
}

/// A finite group given by its multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group").field("order", &self.order).finish()
    }
}

impl Group {
    /// Validates a row-major Cayley table. The identity is relocated to index 0
    /// by swapping it with whatever element sat there; all other labels are kept.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Group, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n || row.iter().any(|&v| v >= n) {
                return Err(GroupError::MalformedTable { row: r });
            }
        }
        let m = |a: usize, b: usize| rows[a][b];
        let e = (0..n)
            .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        for x in 0..n {
            if !(0..n).any(|y| m(x, y) == e && m(y, x) == e) {
                return Err(GroupError::NoInverse(x));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        // swap labels e <-> 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[relabel(a) * n + relabel(b)] = relabel(m(a, b));
            }
        }
        Ok(Group::from_flat_unchecked(n, mul))
    }

    /// Builds a group from a flat table already known to be a group with
    /// identity at index 0.
    fn from_flat_unchecked(order: usize, mul: Vec<usize>) -> Group {
        let mut inv = vec![0; order];
        for x in 0..order {
            inv[x] = (0..order).find(|&y| mul[x * order + y] == 0).unwrap_or(0);
        }
        Group { order, mul, inv }
    }

    /// The trivial group.
    pub fn trivial() -> Group {
        Group::from_flat_unchecked(1, vec![0])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Left-to-right product of a sequence; the identity for an empty slice.
    pub fn product(&self, xs: &[usize]) -> usize {
        xs.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Rows of the Cayley table, for serialization.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Exhaustive scan of the group axioms. `None` when all hold.
    pub fn axiom_violation(&self) -> Option<GroupError> {
        for x in self.elements() {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Some(GroupError::NoIdentity);
            }
            if self.mul(x, self.inv(x)) != 0 || self.inv(self.inv(x)) != x {
                return Some(GroupError::NoInverse(x));
            }
        }
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Some(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        None
    }

    /// `{z : zg = gz for all g}`.
    pub fn center(&self) -> Vec<usize> {
        self.elements()
            .filter(|&z| self.elements().all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    pub fn is_central(&self, z: usize) -> bool {
        self.elements().all(|g| self.mul(z, g) == self.mul(g, z))
    }

    /// Contains the identity and is closed under products and inverses.
    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &x in set {
            member[x] = true;
        }
        member[0]
            && set.iter().all(|&a| member[self.inv(a)])
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| member[self.mul(a, b)]))
    }

    /// Smallest subgroup containing `gens`, as a sorted list.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    frontier.push(y);
                }
            }
        }
        (0..self.order).filter(|&x| member[x]).collect()
    }

    /// `[G, G]`, generated by all commutators `a b a⁻¹ b⁻¹`.
    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let mut comms = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                if !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.generated_subgroup(&comms)
    }

    /// Invariant factors `d₁ | d₂ | …` (all > 1) of the abelian quotient
    /// `G / K` for a normal subgroup `K` with abelian quotient.
    ///
    /// Computed by counting solutions of `x^(p^j) = 1` in the quotient, which
    /// determines each primary component.
    pub fn abelian_quotient_invariants(&self, normal: &[usize]) -> Vec<u64> {
        let mut in_k = vec![false; self.order];
        for &k in normal {
            in_k[k] = true;
        }
        let index = self.order / normal.len().max(1);
        let in_kernel_after_pow = |g: usize, m: usize| in_k[self.pow(g, m)];
        // |A[m]| = #{cosets xK : x^m ∈ K} = #{x : x^m ∈ K} / |K|
        let torsion_count = |m: usize| {
            self.elements().filter(|&g| in_kernel_after_pow(g, m)).count() / normal.len()
        };
        let mut primary: Vec<(u64, Vec<u32>)> = Vec::new();
        for p in primes_dividing(index) {
            let mut ranks = vec![0u32];
            let mut pj = 1usize;
            loop {
                pj *= p;
                let cnt = torsion_count(pj);
                let r = ilog(cnt, p);
                if r == *ranks.last().unwrap_or(&0) {
                    break;
                }
                ranks.push(r);
                if cnt == index {
                    break;
                }
            }
            // c[j] = number of cyclic factors of order ≥ p^(j+1)
            let c: Vec<u32> = ranks.windows(2).map(|w| w[1] - w[0]).collect();
            let factors = c.first().copied().unwrap_or(0);
            let mut exps: Vec<u32> = (1..=factors)
                .map(|k| c.iter().filter(|&&cj| cj >= k).count() as u32)
                .collect();
            exps.sort_unstable();
            primary.push((p as u64, exps));
        }
        let count = primary.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
        let mut out = vec![1u64; count];
        for (p, exps) in &primary {
            // align the largest exponents with the last invariant factor
            let offset = count - exps.len();
            for (i, &e) in exps.iter().enumerate() {
                out[offset + i] *= p.pow(e);
            }
        }
        out
    }

    /// Invariant factors of `G^ab = G / [G, G]`.
    pub fn abelianization_invariants(&self) -> Vec<u64> {
        self.abelian_quotient_invariants(&self.commutator_subgroup())
    }
}

fn primes_dividing(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn ilog(mut n: usize, p: usize) -> u32 {
    let mut r = 0;
    while n > 1 {
        n /= p;
        r += 1;
    }
    r
}

/// Parameterised families of test groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    /// `Z/n`, element `k` is `r^k`.
    Cyclic(usize),
    /// Symmetries of the regular `n`-gon, order `2n`; element `k + n·e` is `r^k s^e`.
    Dihedral(usize),
    /// Permutations of `n` letters in lexicographic order of their images;
    /// products compose right to left, `(στ)(i) = σ(τ(i))`.
    Symmetric(usize),
    /// Direct product; element `(a, b)` is `a·|H| + b`.
    Product(Box<GroupKind>, Box<GroupKind>),
}

impl GroupKind {
    /// Order without building the table.
    pub fn order(&self) -> usize {
        match self {
            GroupKind::Cyclic(n) => *n,
            GroupKind::Dihedral(n) => 2 * n,
            GroupKind::Symmetric(n) => (1..=*n).product(),
            GroupKind::Product(a, b) => a.order() * b.order(),
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Cyclic(n) => write!(f, "C{n}"),
            GroupKind::Dihedral(n) => write!(f, "D{n}"),
            GroupKind::Symmetric(n) => write!(f, "S{n}"),
            GroupKind::Product(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

/// Builds a standard group with the default order bound.
pub fn standard_group(kind: &GroupKind) -> Result<Group, GroupError> {
    standard_group_bounded(kind, DEFAULT_ORDER_BOUND)
}

pub fn standard_group_bounded(kind: &GroupKind, bound: usize) -> Result<Group, GroupError> {
    validate_kind(kind)?;
    let order = kind.order();
    if order > bound {
        return Err(GroupError::OrderBoundExceeded { order, bound });
    }
    Ok(build_kind(kind))
}

fn validate_kind(kind: &GroupKind) -> Result<(), GroupError> {
    match kind {
        GroupKind::Cyclic(0) => Err(GroupError::InvalidParameter {
            kind: "cyclic",
            detail: "n must be at least 1",
        }),
        GroupKind::Dihedral(0) => Err(GroupError::InvalidParameter {
            kind: "dihedral",
            detail: "n must be at least 1",
        }),
        GroupKind::Symmetric(0) => Err(GroupError::InvalidParameter {
            kind: "symmetric",
            detail: "n must be at least 1",
        }),
        GroupKind::Symmetric(n) if *n > 8 => Err(GroupError::InvalidParameter {
            kind: "symmetric",
            detail: "n must be at most 8",
        }),
        GroupKind::Product(a, b) => {
            validate_kind(a)?;
            validate_kind(b)
        }
        _ => Ok(()),
    }
}

fn build_kind(kind: &GroupKind) -> Group {
    match kind {
        GroupKind::Cyclic(n) => {
            let n = *n;
            let mul = (0..n * n).map(|i| (i / n + i % n) % n).collect();
            Group::from_flat_unchecked(n, mul)
        }
        GroupKind::Dihedral(n) => {
            let n = *n;
            let order = 2 * n;
            let mut mul = vec![0; order * order];
            for x in 0..order {
                for y in 0..order {
                    let (a, e) = (x % n, x / n);
                    let (b, f) = (y % n, y / n);
                    // r^a s^e r^b s^f = r^(a ± b) s^(e+f)
                    let rot = if e == 0 { (a + b) % n } else { (a + n - b) % n };
                    mul[x * order + y] = rot + n * ((e + f) % 2);
                }
            }
            Group::from_flat_unchecked(order, mul)
        }
        GroupKind::Symmetric(n) => {
            let perms = permutations(*n);
            let order = perms.len();
            let mut mul = vec![0; order * order];
            for (i, s) in perms.iter().enumerate() {
                for (j, t) in perms.iter().enumerate() {
                    let comp: Vec<usize> = t.iter().map(|&k| s[k]).collect();
                    mul[i * order + j] = perms.binary_search(&comp).unwrap_or(0);
                }
            }
            Group::from_flat_unchecked(order, mul)
        }
        GroupKind::Product(a, b) => {
            let ga = build_kind(a);
            let gb = build_kind(b);
            let (na, nb) = (ga.order(), gb.order());
            let order = na * nb;
            let mut mul = vec![0; order * order];
            for x in 0..order {
                for y in 0..order {
                    mul[x * order + y] =
                        ga.mul(x / nb, y / nb) * nb + gb.mul(x % nb, y % nb);
                }
            }
            Group::from_flat_unchecked(order, mul)
        }
    }
}

/// All permutations of `0..n` in lexicographic order (identity first).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap_or(i);
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

/// Index of a permutation (given by its images) inside `Symmetric(n)`.
pub fn symmetric_index(images: &[usize]) -> Option<usize> {
    permutations(images.len()).binary_search(&images.to_vec()).ok()
}
