//! Integral homology of the bar simplicial set via the unnormalized chain
//! complex and an exact Smith normal form.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::duplicial::Bar;
use crate::verdict::Verdict;

/// Default limit on `rows × cols` of a single boundary matrix.
pub const DEFAULT_MATRIX_BOUND: u128 = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("boundary matrix needs {needed} entries, bound is {bound}")]
    SizeBoundExceeded { needed: u128, bound: u128 },
    #[error("integer overflow during Smith normal form")]
    Overflow,
}

/// Order in which simplices index rows and columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ordering {
    Lexicographic,
    Reversed,
}

/// `∂_n : C_n → C_{n-1}` as sparse columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub level: usize,
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl BoundaryMatrix {
    pub fn dense(&self) -> Vec<Vec<i128>> {
        let mut m = vec![vec![0i128; self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                m[r][c] = v as i128;
            }
        }
        m
    }

    pub fn entry(&self, r: usize, c: usize) -> i64 {
        self.columns[c].iter().find(|&&(i, _)| i == r).map_or(0, |&(_, v)| v)
    }
}

fn position(bar: &Bar, level: usize, idx: usize, order: Ordering) -> usize {
    match order {
        Ordering::Lexicographic => idx,
        Ordering::Reversed => bar.count(level) - 1 - idx,
    }
}

/// `∂_n = Σ (−1)^i d_i` for `n = 1..=cap`.
pub fn boundary_matrices(
    bar: &Bar,
    cap: usize,
    order: Ordering,
    bound: u128,
) -> Result<Vec<BoundaryMatrix>, HomologyError> {
    let mut out = Vec::with_capacity(cap);
    for n in 1..=cap {
        let rows = bar.count(n - 1);
        let cols = bar.count(n);
        let needed = rows as u128 * cols as u128;
        if needed > bound {
            return Err(HomologyError::SizeBoundExceeded { needed, bound });
        }
        let mut columns = vec![Vec::new(); cols];
        for (idx, s) in bar.simplices(n).enumerate() {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for i in 0..=n {
                let face = bar.face(i, &s).expect("face in range");
                let r = position(bar, n - 1, bar.index(&face), order);
                *acc.entry(r).or_insert(0) += if i % 2 == 0 { 1 } else { -1 };
            }
            columns[position(bar, n, idx, order)] = acc.into_iter().filter(|&(_, v)| v != 0).collect();
        }
        out.push(BoundaryMatrix {
            level: n,
            rows,
            cols,
            columns,
        });
    }
    Ok(out)
}

/// `∂_n ∘ ∂_{n+1} = 0` for consecutive matrices.
pub fn check_boundary_squared(ms: &[BoundaryMatrix]) -> Verdict {
    for w in ms.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        for (c, col) in hi.columns.iter().enumerate() {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(mid, a) in col {
                for &(r, b) in &lo.columns[mid] {
                    *acc.entry(r).or_insert(0) += a * b;
                }
            }
            if let Some((&r, &v)) = acc.iter().find(|(_, &v)| v != 0) {
                return Verdict::fail(
                    "∂∂ = 0",
                    alloc::format!("level {}", hi.level),
                    vec![r, c],
                    vec![v as usize],
                    vec![0],
                );
            }
        }
    }
    Verdict::Pass
}

/// Nonzero diagonal entries of the Smith normal form, in divisibility order.
pub fn smith_invariants(mut m: Vec<Vec<i128>>) -> Result<Vec<u128>, HomologyError> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero magnitude in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, &v) in row.iter().enumerate().skip(t) {
                if v != 0 && best.is_none_or(|(bi, bj)| v.unsigned_abs() < m[bi][bj].unsigned_abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                if m[i][t] != 0 {
                    let q = m[i][t] / p;
                    for j in t..cols {
                        let s = q.checked_mul(m[t][j]).ok_or(HomologyError::Overflow)?;
                        m[i][j] = m[i][j].checked_sub(s).ok_or(HomologyError::Overflow)?;
                    }
                    if m[i][t] != 0 {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if m[t][j] != 0 {
                    let q = m[t][j] / p;
                    for row in m.iter_mut().skip(t) {
                        let s = q.checked_mul(row[t]).ok_or(HomologyError::Overflow)?;
                        row[j] = row[j].checked_sub(s).ok_or(HomologyError::Overflow)?;
                    }
                    if m[t][j] != 0 {
                        dirty = true;
                    }
                }
            }
            if dirty {
                // move a smaller remainder into the pivot
                let mut best = (t, t);
                for i in t..rows {
                    if m[i][t] != 0 && m[i][t].unsigned_abs() < m[best.0][best.1].unsigned_abs() {
                        best = (i, t);
                    }
                }
                for j in t..cols {
                    if m[t][j] != 0 && m[t][j].unsigned_abs() < m[best.0][best.1].unsigned_abs() {
                        best = (t, j);
                    }
                }
                m.swap(t, best.0);
                for row in m.iter_mut() {
                    row.swap(t, best.1);
                }
                continue;
            }
            // the pivot must divide the rest of the block
            let p = m[t][t];
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        m[t][j] = m[t][j].checked_add(m[i][j]).ok_or(HomologyError::Overflow)?;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].unsigned_abs());
        t += 1;
    }
    diag.sort_unstable();
    Ok(diag)
}

/// `Z^betti ⊕ ⊕ Z/d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<u128>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<alloc::string::String> = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".into()),
            b => parts.push(alloc::format!("Z^{b}")),
        }
        for d in &self.torsion {
            parts.push(alloc::format!("Z/{d}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

/// `H_0, …, H_{cap-1}` from `∂_1, …, ∂_cap`.
pub fn homology_groups(
    bar: &Bar,
    cap: usize,
    order: Ordering,
    bound: u128,
) -> Result<Vec<HomologyGroup>, HomologyError> {
    let ms = boundary_matrices(bar, cap, order, bound)?;
    let invariants: Vec<Vec<u128>> = ms
        .iter()
        .map(|m| smith_invariants(m.dense()))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::with_capacity(cap);
    for k in 0..cap {
        let dim = bar.count(k);
        let rank_out = if k == 0 { 0 } else { invariants[k - 1].len() };
        let into = &invariants[k];
        out.push(HomologyGroup {
            betti: dim - rank_out - into.len(),
            torsion: into.iter().copied().filter(|&d| d > 1).collect(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{standard_group, Group, GroupKind};
    use crate::gset::GSet;
    use alloc::string::ToString;
    use alloc::sync::Arc;

    fn bar(k: GroupKind) -> Bar {
        let g: Arc<Group> = Arc::new(standard_group(&k).unwrap());
        Bar::new(&GSet::point(&g))
    }

    #[test]
    fn smith_small() {
        assert_eq!(smith_invariants(vec![vec![2, 4], vec![6, 8]]).unwrap(), vec![2, 4]);
        assert_eq!(smith_invariants(vec![vec![2, 0], vec![0, 3]]).unwrap(), vec![1, 6]);
        assert_eq!(smith_invariants(vec![vec![0, 0]]).unwrap(), Vec::<u128>::new());
        assert_eq!(smith_invariants(vec![]).unwrap(), Vec::<u128>::new());
    }

    #[test]
    fn level_sizes_and_first_boundary() {
        let b = bar(GroupKind::Cyclic(2));
        assert_eq!((0..4).map(|n| b.count(n)).collect::<Vec<_>>(), vec![1, 2, 4, 8]);
        let ms = boundary_matrices(&b, 3, Ordering::Lexicographic, DEFAULT_MATRIX_BOUND).unwrap();
        assert!(ms[0].columns.iter().all(|c| c.is_empty()));
        assert!(check_boundary_squared(&ms).is_pass());
    }

    #[test]
    fn cyclic_three() {
        let b = bar(GroupKind::Cyclic(3));
        let h = homology_groups(&b, 4, Ordering::Lexicographic, DEFAULT_MATRIX_BOUND).unwrap();
        assert_eq!(h[0], HomologyGroup { betti: 1, torsion: vec![] });
        assert_eq!(h[1].torsion, vec![3]);
        assert!(h[2].is_zero());
        assert_eq!(h[3].torsion, vec![3]);
        assert_eq!(h[1].to_string(), "Z/3");
        let r = homology_groups(&b, 4, Ordering::Reversed, DEFAULT_MATRIX_BOUND).unwrap();
        assert_eq!(h, r);
    }

    #[test]
    fn bound_is_enforced() {
        let b = bar(GroupKind::Symmetric(3));
        assert!(matches!(
            boundary_matrices(&b, 3, Ordering::Lexicographic, 100),
            Err(HomologyError::SizeBoundExceeded { .. })
        ));
    }
}
