//! Closure components and linking numbers of braid closures, plus component
//! counting for circular plat closures.

use crate::error::{Error, Result};
use crate::word::BraidWord;
use serde::{Deserialize, Serialize};

/// The partition of strand indices into closure components (cycles of the
/// strand permutation).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentPartition {
    /// Cycles as 1-based strand indices, ordered by smallest member.
    pub cycles: Vec<Vec<usize>>,
    /// 0-based component id per 1-based strand (index 0 unused).
    component_of: Vec<usize>,
}

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Component id of a 1-based strand index.
    pub fn component_of(&self, strand: usize) -> usize {
        self.component_of[strand]
    }
}

/// Pairwise linking numbers of closure components: symmetric, zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkingMatrix {
    pub size: usize,
    pub entries: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn entry(&self, p: usize, q: usize) -> i64 {
        self.entries[p][q]
    }

    pub fn off_diagonal_all_equal(&self) -> bool {
        let mut seen: Option<i64> = None;
        for p in 0..self.size {
            for q in 0..self.size {
                if p == q {
                    continue;
                }
                match seen {
                    None => seen = Some(self.entries[p][q]),
                    Some(v) if v != self.entries[p][q] => return false,
                    _ => {}
                }
            }
        }
        true
    }

    /// Sum of the strictly upper triangle.
    pub fn total(&self) -> i64 {
        let mut acc = 0;
        for p in 0..self.size {
            for q in p + 1..self.size {
                acc += self.entries[p][q];
            }
        }
        acc
    }
}

/// Cycles of the strand permutation of `b`.
pub fn components(b: &BraidWord) -> ComponentPartition {
    let cycles = b.permutation().cycles();
    let mut component_of = vec![usize::MAX; b.strands() + 1];
    for (id, cycle) in cycles.iter().enumerate() {
        for &s in cycle {
            component_of[s] = id;
        }
    }
    ComponentPartition {
        cycles,
        component_of,
    }
}

/// Linking numbers between closure components: half the signed count of
/// crossings whose two strands lie in distinct components.
pub fn linking_matrix(b: &BraidWord) -> LinkingMatrix {
    let parts = components(b);
    let m = parts.len();
    let mut twice = vec![vec![0i64; m]; m];
    b.scan_crossings(|s, t, sign| {
        let (p, q) = (parts.component_of(s), parts.component_of(t));
        if p != q {
            twice[p][q] += sign;
            twice[q][p] += sign;
        }
    });
    let entries = twice
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| {
                    assert!(v % 2 == 0, "inter-component crossing count must be even");
                    v / 2
                })
                .collect()
        })
        .collect();
    LinkingMatrix { size: m, entries }
}

/// Linking matrix indexed by strands, for pure braids.
pub fn strand_linking_matrix(b: &BraidWord) -> Result<Vec<Vec<i64>>> {
    if !b.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(linking_matrix(b).entries)
}

/// Sum of linking numbers between the component of strand `i` and all other
/// components. Requires the permutation of `b` to fix `i`.
pub fn linking_sum_at(b: &BraidWord, i: usize) -> Result<i64> {
    if i < 1 || i > b.strands() {
        return Err(Error::InvalidIndex {
            index: i,
            strands: b.strands(),
        });
    }
    if b.permutation().image_of(i) != i {
        return Err(Error::NotFixedStrand { index: i });
    }
    let lk = linking_matrix(b);
    let parts = components(b);
    let p = parts.component_of(i);
    Ok((0..lk.size).filter(|&q| q != p).map(|q| lk.entry(p, q)).sum())
}

/// Number of components of the circular plat closure of an even-strand braid:
/// cap adjacent pairs `(1 2)(3 4)…` at the top and the bottom.
pub fn plat_component_count(b: &BraidWord) -> Result<usize> {
    let n = b.strands();
    if !n.is_multiple_of(2) {
        return Err(Error::OddStrands(n));
    }
    let cap = |s: usize| if s % 2 == 1 { s + 1 } else { s - 1 };
    let pi = b.permutation();
    let inv = pi.inverse();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn root(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let union = |parent: &mut Vec<usize>, x: usize, y: usize| {
        let (rx, ry) = (root(parent, x), root(parent, y));
        if rx != ry {
            parent[rx] = ry;
        }
    };
    for s in 1..=n {
        union(&mut parent, s, cap(s));
        union(&mut parent, s, inv.image_of(cap(pi.image_of(s))));
    }
    let mut roots: Vec<usize> = (1..=n).map(|s| root(&mut parent, s)).collect();
    roots.sort_unstable();
    roots.dedup();
    Ok(roots.len())
}
