//! Breadth-first invariants: components, diameter, girth and simple flags.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::SimpleGraph;

/// `None` stands for infinity.
pub type Extended = Option<usize>;

const UNSEEN: usize = usize::MAX;

pub fn bfs_distances(g: &SimpleGraph, root: usize) -> Vec<usize> {
    let mut dist = vec![UNSEEN; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[root] = 0;
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNSEEN {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Connected components as vertex lists, each sorted, ordered by smallest vertex.
pub fn components(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for s in 0..g.vertex_count() {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub components: usize,
    /// Maximum eccentricity; `None` (infinite) when disconnected.
    pub diameter: Extended,
    /// A pair realizing the diameter, when finite and positive.
    pub witness: Option<(usize, usize)>,
}

impl Connectivity {
    pub fn connected(&self) -> bool {
        self.components <= 1
    }
}

pub fn connectivity(g: &SimpleGraph) -> Connectivity {
    let components = components(g).len();
    if components > 1 {
        return Connectivity {
            components,
            diameter: None,
            witness: None,
        };
    }
    let mut best = 0;
    let mut witness = None;
    for s in 0..g.vertex_count() {
        let dist = bfs_distances(g, s);
        for (t, &d) in dist.iter().enumerate() {
            if d > best {
                best = d;
                witness = Some((s, t));
            }
        }
    }
    Connectivity {
        components,
        diameter: Some(best),
        witness,
    }
}

/// Length of a shortest cycle; `None` for forests.
pub fn girth(g: &SimpleGraph) -> Extended {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![UNSEEN; n];
    let mut parent = vec![UNSEEN; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = UNSEEN);
        dist[root] = 0;
        parent[root] = UNSEEN;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                // any cycle found from here on is at least 2*dist[u]+1 long
                if 2 * dist[u] + 1 >= b {
                    break;
                }
            }
            for &w in g.neighbors(u) {
                if dist[w] == UNSEEN {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralFlags {
    pub eulerian: bool,
    pub bipartite: bool,
    pub triangulated: bool,
}

pub fn is_bipartite(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Every vertex lies on a triangle.
pub fn is_triangulated(g: &SimpleGraph) -> bool {
    (0..g.vertex_count()).all(|v| {
        let nb = g.neighbors(v);
        nb.iter()
            .enumerate()
            .any(|(i, &a)| nb[i + 1..].iter().any(|&b| g.has_edge(a, b)))
    })
}

pub fn structural_flags(g: &SimpleGraph) -> StructuralFlags {
    let connected = components(g).len() <= 1;
    StructuralFlags {
        eulerian: connected && (0..g.vertex_count()).all(|v| g.degree(v).is_multiple_of(2)),
        bipartite: is_bipartite(g),
        triangulated: is_triangulated(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_cycle() {
        let p3 = SimpleGraph::from_edges(3, &[(0, 1), (0, 2)]);
        let c = connectivity(&p3);
        assert_eq!((c.components, c.diameter), (1, Some(2)));
        assert_eq!(girth(&p3), None);
        for len in 3..9 {
            assert_eq!(girth(&SimpleGraph::cycle(len)), Some(len));
        }
        let two = SimpleGraph::new(2);
        assert_eq!(connectivity(&two).diameter, None);
        assert_eq!(connectivity(&two).components, 2);
    }

    #[test]
    fn girth_with_chord() {
        // 6-cycle plus chord 0-3 gives two 4-cycles
        let g =
            SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]);
        assert_eq!(girth(&g), Some(4));
    }

    #[test]
    fn flags() {
        let c6 = SimpleGraph::cycle(6);
        let f = structural_flags(&c6);
        assert!(f.eulerian && f.bipartite && !f.triangulated);
        let k4 = SimpleGraph::complete(4);
        let f = structural_flags(&k4);
        assert!(!f.eulerian && !f.bipartite && f.triangulated);
        let f = structural_flags(&SimpleGraph::new(2));
        assert!(!f.eulerian && f.bipartite && !f.triangulated);
    }
}
