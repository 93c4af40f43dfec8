//! Structure-blind exact solvers for graphs of at most 64 vertices.
//!
//! These ignore the containment order entirely and serve as independent
//! cross-checks of the poset-based routines.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const BITSET_LIMIT: usize = 64;

fn rows(g: &SimpleGraph) -> Result<Vec<u64>> {
    let n = g.vertex_count();
    if n > BITSET_LIMIT {
        return Err(Error::TooLarge {
            what: "exact search vertex count",
            size: n,
            cap: BITSET_LIMIT,
        });
    }
    Ok((0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
        .collect())
}

fn all_bits(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits_to_vec(mut b: u64) -> Vec<usize> {
    let mut out = Vec::new();
    while b != 0 {
        out.push(b.trailing_zeros() as usize);
        b &= b - 1;
    }
    out
}

fn clique_search(rows: &[u64], current: u64, candidates: u64, best: &mut u64) {
    if candidates == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    if current.count_ones() + candidates.count_ones() <= best.count_ones() {
        return;
    }
    let mut rest = candidates;
    while rest != 0 {
        if current.count_ones() + rest.count_ones() <= best.count_ones() {
            return;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        clique_search(rows, current | 1 << v, rest & rows[v], best);
    }
}

/// Maximum clique by branch and bound.
pub fn max_clique(g: &SimpleGraph) -> Result<Vec<usize>> {
    let rows = rows(g)?;
    let mut best = 0u64;
    clique_search(&rows, 0, all_bits(rows.len()), &mut best);
    Ok(bits_to_vec(best))
}

/// Maximum independent set as a maximum clique of the complement.
pub fn max_independent_set(g: &SimpleGraph) -> Result<Vec<usize>> {
    let rows = rows(g)?;
    let full = all_bits(rows.len());
    let comp: Vec<u64> = rows
        .iter()
        .enumerate()
        .map(|(v, r)| full & !r & !(1 << v))
        .collect();
    let mut best = 0u64;
    clique_search(&comp, 0, full, &mut best);
    Ok(bits_to_vec(best))
}

struct Dsatur<'a> {
    rows: &'a [u64],
    colors: Vec<usize>,
    best: Option<Vec<usize>>,
    best_k: usize,
    /// clique size: once reached, the coloring is optimal
    lower: usize,
}

const UNCOLORED: usize = usize::MAX;

impl Dsatur<'_> {
    fn pick(&self) -> Option<usize> {
        let n = self.rows.len();
        let mut pick = None;
        let mut key = (0usize, 0usize);
        for v in 0..n {
            if self.colors[v] != UNCOLORED {
                continue;
            }
            let mut seen = 0u128;
            let mut deg = 0;
            for w in bits_to_vec(self.rows[v]) {
                if self.colors[w] == UNCOLORED {
                    deg += 1;
                } else {
                    seen |= 1 << self.colors[w];
                }
            }
            let k = (seen.count_ones() as usize, deg);
            if pick.is_none() || k > key {
                pick = Some(v);
                key = k;
            }
        }
        pick
    }

    fn search(&mut self, used: usize) {
        if used >= self.best_k || self.best_k <= self.lower {
            return;
        }
        let Some(v) = self.pick() else {
            self.best_k = used;
            self.best = Some(self.colors.clone());
            return;
        };
        let mut forbidden = 0u128;
        for w in bits_to_vec(self.rows[v]) {
            if self.colors[w] != UNCOLORED {
                forbidden |= 1 << self.colors[w];
            }
        }
        for c in 0..=used.min(63) {
            if forbidden >> c & 1 == 1 {
                continue;
            }
            let next_used = if c == used { used + 1 } else { used };
            if next_used >= self.best_k {
                continue;
            }
            self.colors[v] = c;
            self.search(next_used);
            self.colors[v] = UNCOLORED;
        }
    }
}

/// Exact chromatic number by DSATUR-ordered backtracking.
pub fn chromatic_number(g: &SimpleGraph) -> Result<(usize, Vec<usize>)> {
    let rows = rows(g)?;
    let n = rows.len();
    let mut clique = 0u64;
    clique_search(&rows, 0, all_bits(n), &mut clique);
    let mut s = Dsatur {
        rows: &rows,
        colors: vec![UNCOLORED; n],
        best: None,
        best_k: n + 1,
        lower: clique.count_ones() as usize,
    };
    s.search(0);
    let colors = s.best.unwrap_or_default();
    Ok((s.best_k.min(n), colors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_cycle() {
        let c5 = SimpleGraph::cycle(5);
        assert_eq!(max_clique(&c5).unwrap().len(), 2);
        assert_eq!(max_independent_set(&c5).unwrap().len(), 2);
        assert_eq!(chromatic_number(&c5).unwrap().0, 3);
    }

    #[test]
    fn complete_and_empty() {
        let k5 = SimpleGraph::complete(5);
        assert_eq!(max_clique(&k5).unwrap().len(), 5);
        assert_eq!(chromatic_number(&k5).unwrap().0, 5);
        let e = SimpleGraph::new(4);
        assert_eq!(max_independent_set(&e).unwrap().len(), 4);
        assert_eq!(chromatic_number(&e).unwrap().0, 1);
        assert_eq!(chromatic_number(&SimpleGraph::new(0)).unwrap().0, 0);
    }

    #[test]
    fn petersen() {
        let edges = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
        ];
        let p = SimpleGraph::from_edges(10, &edges);
        assert_eq!(max_independent_set(&p).unwrap().len(), 4);
        assert_eq!(chromatic_number(&p).unwrap().0, 3);
        assert_eq!(max_clique(&p).unwrap().len(), 2);
    }

    #[test]
    fn refuses_large_graphs() {
        assert!(max_clique(&SimpleGraph::new(65)).is_err());
    }
}
