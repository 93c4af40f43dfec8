//! Maximum cardinality matching in general graphs (Edmonds' blossom algorithm).

use std::collections::VecDeque;

use crate::graph::SimpleGraph;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a SimpleGraph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a SimpleGraph) -> Self {
        let n = g.vertex_count();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for u in 0..self.g.vertex_count() {
            if self.mate[u] != NONE {
                continue;
            }
            if let Some(&w) = self.g.neighbors(u).iter().find(|&&w| self.mate[w] == NONE) {
                self.mate[u] = w;
                self.mate[w] = u;
            }
        }
    }

    fn lowest_common_ancestor(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.vertex_count()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn contract(&mut self, v: usize, u: usize) {
        let b = self.lowest_common_ancestor(v, u);
        self.in_blossom.iter_mut().for_each(|x| *x = false);
        self.mark_path(v, b, u);
        self.mark_path(u, b, v);
        for i in 0..self.g.vertex_count() {
            if self.in_blossom[self.base[i]] {
                self.base[i] = b;
                if !self.used[i] {
                    self.used[i] = true;
                    self.queue.push_back(i);
                }
            }
        }
    }

    /// Searches an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.vertex_count();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    self.contract(v, to);
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn run(mut self) -> Vec<usize> {
        self.greedy();
        for root in 0..self.g.vertex_count() {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_path(root) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingResult {
    /// Matching number `α'`.
    pub size: usize,
    /// Edges `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub perfect: bool,
}

impl MatchingResult {
    /// Minimum edge cover size `|V| - α'`, undefined when there is an isolated vertex.
    pub fn edge_cover(&self, g: &SimpleGraph) -> Option<usize> {
        if (0..g.vertex_count()).any(|v| g.degree(v) == 0) {
            None
        } else {
            Some(g.vertex_count() - self.size)
        }
    }
}

pub fn maximum_matching(g: &SimpleGraph) -> MatchingResult {
    let mate = Blossom::new(g).run();
    let edges: Vec<(usize, usize)> = mate
        .iter()
        .enumerate()
        .filter(|&(u, &v)| v != NONE && u < v)
        .map(|(u, &v)| (u, v))
        .collect();
    let size = edges.len();
    MatchingResult {
        size,
        perfect: 2 * size == g.vertex_count(),
        edges,
    }
}

/// Checks that `edges` is a matching of `g` covering every vertex.
pub fn is_perfect_matching(g: &SimpleGraph, edges: &[(usize, usize)]) -> bool {
    let mut hit = vec![false; g.vertex_count()];
    for &(u, v) in edges {
        if u >= hit.len() || v >= hit.len() || !g.has_edge(u, v) || hit[u] || hit[v] {
            return false;
        }
        hit[u] = true;
        hit[v] = true;
    }
    hit.iter().all(|&h| h)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive maximum matching for tiny graphs.
    fn brute(g: &SimpleGraph) -> usize {
        fn go(edges: &[(usize, usize)], i: usize, used: u64) -> usize {
            if i == edges.len() {
                return 0;
            }
            let (u, v) = edges[i];
            let skip = go(edges, i + 1, used);
            if used >> u & 1 == 0 && used >> v & 1 == 0 {
                skip.max(1 + go(edges, i + 1, used | 1 << u | 1 << v))
            } else {
                skip
            }
        }
        go(&g.edges(), 0, 0)
    }

    #[test]
    fn cycles_and_paths() {
        let c6 = SimpleGraph::cycle(6);
        assert_eq!(brute(&c6), 3);
        let m = maximum_matching(&c6);
        assert_eq!(m.size, 3);
        assert!(m.perfect);
        assert!(is_perfect_matching(&c6, &m.edges));
        let p3 = SimpleGraph::from_edges(3, &[(0, 1), (0, 2)]);
        let m = maximum_matching(&p3);
        assert_eq!(m.size, 1);
        assert!(!m.perfect);
        assert_eq!(maximum_matching(&SimpleGraph::cycle(7)).size, 3);
    }

    #[test]
    fn blossom_needed() {
        // triangle 0-1-2 with pendant paths: greedy can go wrong, blossom fixes it
        let g = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]);
        assert_eq!(maximum_matching(&g).size, 3);
        let g = SimpleGraph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (5, 6),
                (2, 7),
                (7, 8),
                (8, 9),
                (9, 3),
            ],
        );
        assert_eq!(maximum_matching(&g).size, brute(&g));
    }

    #[test]
    fn isolated_vertices_and_edge_cover() {
        let g = SimpleGraph::from_edges(4, &[(0, 1)]);
        let m = maximum_matching(&g);
        assert_eq!(m.size, 1);
        assert_eq!(m.edge_cover(&g), None);
        let c6 = SimpleGraph::cycle(6);
        assert_eq!(maximum_matching(&c6).edge_cover(&c6), Some(3));
    }
}
