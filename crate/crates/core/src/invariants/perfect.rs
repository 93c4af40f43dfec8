//! Odd hole / odd antihole search.
//!
//! A graph is perfect iff neither it nor its complement contains an induced
//! odd cycle of length at least 5. The search grows induced paths from the
//! smallest vertex of the would-be cycle and prunes any vertex that would
//! create a chord.

use serde::Serialize;

use crate::graph::SimpleGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Perfectness {
    Perfect,
    Imperfect {
        /// Vertices of the induced cycle in cyclic order.
        cycle: Vec<usize>,
        /// True when the cycle is induced in the complement.
        antihole: bool,
    },
    Unknown {
        max_len: usize,
    },
}

impl Perfectness {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Perfectness::Perfect => Some(true),
            Perfectness::Imperfect { .. } => Some(false),
            Perfectness::Unknown { .. } => None,
        }
    }
}

struct Rows {
    words: usize,
    bits: Vec<u64>,
}

impl Rows {
    fn new(g: &SimpleGraph) -> Self {
        let n = g.vertex_count();
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        for v in 0..n {
            for &w in g.neighbors(v) {
                bits[v * words + w / 64] |= 1 << (w % 64);
            }
        }
        Rows { words, bits }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    fn adjacent(&self, v: usize, w: usize) -> bool {
        self.bits[v * self.words + w / 64] >> (w % 64) & 1 == 1
    }
}

struct HoleSearch<'a> {
    g: &'a SimpleGraph,
    rows: Rows,
    max_len: usize,
    path: Vec<usize>,
    /// how many path vertices (other than the last and the root) each vertex sees
    blocked: Vec<u32>,
}

impl HoleSearch<'_> {
    fn block(&mut self, v: usize, delta: i32) {
        let row: Vec<u64> = self.rows.row(v).to_vec();
        for (i, mut word) in row.into_iter().enumerate() {
            while word != 0 {
                let w = i * 64 + word.trailing_zeros() as usize;
                word &= word - 1;
                self.blocked[w] = (self.blocked[w] as i32 + delta) as u32;
            }
        }
        self.blocked[v] = (self.blocked[v] as i32 + delta) as u32;
    }

    fn extend(&mut self) -> bool {
        let root = self.path[0];
        let last = *self.path.last().expect("nonempty path");
        let len = self.path.len();
        let next: Vec<usize> = self.g.neighbors(last).to_vec();
        for w in next {
            if w <= root || self.blocked[w] > 0 || self.path.contains(&w) {
                continue;
            }
            let closes = len >= 2 && self.rows.adjacent(w, root);
            if closes {
                if (len + 1) % 2 == 1 && len + 1 >= 5 {
                    self.path.push(w);
                    return true;
                }
                continue;
            }
            if len + 1 >= self.max_len {
                continue;
            }
            // `last` becomes interior: its neighbours can no longer join
            if len >= 2 {
                self.block(last, 1);
            }
            self.path.push(w);
            if self.extend() {
                return true;
            }
            self.path.pop();
            if len >= 2 {
                self.block(last, -1);
            }
        }
        false
    }

    fn run(mut self) -> Option<Vec<usize>> {
        let n = self.g.vertex_count();
        for root in 0..n {
            self.path.clear();
            self.path.push(root);
            if self.extend() {
                return Some(self.path);
            }
        }
        None
    }
}

/// Induced odd cycle of length `5..=max_len`, if one exists.
pub fn find_odd_hole(g: &SimpleGraph, max_len: usize) -> Option<Vec<usize>> {
    if max_len < 5 {
        return None;
    }
    HoleSearch {
        g,
        rows: Rows::new(g),
        max_len,
        path: Vec::new(),
        blocked: vec![0; g.vertex_count()],
    }
    .run()
}

/// Searches holes and antiholes up to `max_len`; a clean result is definitive
/// only when `max_len` reaches the vertex count.
pub fn perfectness(g: &SimpleGraph, max_len: usize) -> Perfectness {
    if let Some(cycle) = find_odd_hole(g, max_len) {
        return Perfectness::Imperfect {
            cycle,
            antihole: false,
        };
    }
    if let Some(cycle) = find_odd_hole(&g.complement(), max_len) {
        return Perfectness::Imperfect {
            cycle,
            antihole: true,
        };
    }
    if max_len >= g.vertex_count() {
        Perfectness::Perfect
    } else {
        Perfectness::Unknown { max_len }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_induced_cycle(g: &SimpleGraph, c: &[usize]) -> bool {
        let k = c.len();
        (0..k).all(|i| {
            (0..k).all(|j| {
                if i == j {
                    return true;
                }
                let cyc = (i + 1) % k == j || (j + 1) % k == i;
                g.has_edge(c[i], c[j]) == cyc
            })
        })
    }

    #[test]
    fn c5_and_c7() {
        let c5 = SimpleGraph::cycle(5);
        match perfectness(&c5, 5) {
            Perfectness::Imperfect { cycle, antihole } => {
                assert!(!antihole);
                assert!(is_induced_cycle(&c5, &cycle));
            }
            other => panic!("{other:?}"),
        }
        let c7 = SimpleGraph::cycle(7);
        assert_eq!(perfectness(&c7, 5), Perfectness::Unknown { max_len: 5 });
        let anti = c7.complement();
        match perfectness(&anti, 7) {
            Perfectness::Imperfect { cycle, antihole } => {
                assert!(antihole);
                assert!(is_induced_cycle(&c7, &cycle));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn even_cycles_and_complete_graphs_are_perfect() {
        assert_eq!(perfectness(&SimpleGraph::cycle(6), 6), Perfectness::Perfect);
        assert_eq!(
            perfectness(&SimpleGraph::complete(6), 6),
            Perfectness::Perfect
        );
        assert_eq!(perfectness(&SimpleGraph::new(0), 0), Perfectness::Perfect);
    }

    #[test]
    fn chord_kills_hole() {
        let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.push((0, 2));
        let g = SimpleGraph::from_edges(7, &edges);
        // remaining cycle 0-2-3-4-5-6 has length 6, so no odd hole
        assert_eq!(find_odd_hole(&g, 7), None);
    }
}
