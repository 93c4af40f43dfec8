//! Chain/antichain duality on the containment order.
//!
//! Cliques of an inclusion graph are chains and independent sets are
//! antichains, so the clique number is the height of the poset (longest
//! chain), a Mirsky layering gives an optimal coloring, and the independence
//! number is the width, computed through Dilworth's theorem as
//! `|V| - ν` where `ν` is a maximum matching of the split bipartite graph of
//! the strict order.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::graph::InclusionGraph;

/// Strict up-sets of every vertex (`above[v]` = strict supersets of `v`).
pub fn up_sets(g: &InclusionGraph) -> Vec<Vec<usize>> {
    (0..g.vertex_count()).map(|v| g.above(v)).collect()
}

/// Longest chain ending at each vertex (1 for minimal elements). Vertex ids
/// are a linear extension, so one forward pass suffices.
pub fn heights_from_below(up: &[Vec<usize>]) -> Vec<usize> {
    let mut h = vec![1usize; up.len()];
    for v in 0..up.len() {
        for &w in &up[v] {
            h[w] = h[w].max(h[v] + 1);
        }
    }
    h
}

/// Longest chain starting at each vertex.
pub fn heights_from_above(up: &[Vec<usize>]) -> Vec<usize> {
    let mut h = vec![1usize; up.len()];
    for v in (0..up.len()).rev() {
        for &w in &up[v] {
            h[v] = h[v].max(h[w] + 1);
        }
    }
    h
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainResult {
    pub length: usize,
    /// Bottom-up; the lexicographically smallest mask sequence among maximum chains.
    pub chain: Vec<usize>,
}

pub fn longest_chain(g: &InclusionGraph, up: &[Vec<usize>]) -> ChainResult {
    if up.is_empty() {
        return ChainResult {
            length: 0,
            chain: Vec::new(),
        };
    }
    let h = heights_from_above(up);
    let length = *h.iter().max().expect("nonempty");
    let by_mask = |a: &usize, b: &usize| -> Ordering { g.mask(*a).cmp_value(&g.mask(*b)) };
    let mut current = (0..up.len())
        .filter(|&v| h[v] == length)
        .min_by(by_mask)
        .expect("some vertex attains the height");
    let mut chain = vec![current];
    while h[current] > 1 {
        current = up[current]
            .iter()
            .copied()
            .filter(|&w| h[w] == h[current] - 1)
            .min_by(by_mask)
            .expect("height drops by one along some cover");
        chain.push(current);
    }
    ChainResult { length, chain }
}

/// Proper coloring by longest chain ending at each vertex (colors `0..height`).
pub fn mirsky_coloring(up: &[Vec<usize>]) -> (usize, Vec<usize>) {
    let h = heights_from_below(up);
    let colors: Vec<usize> = h.iter().map(|x| x - 1).collect();
    (h.iter().copied().max().unwrap_or(0), colors)
}

/// Maximum matching of a bipartite graph `left -> right` by Hopcroft–Karp.
/// Returns `match_left[u] = Some(v)`.
pub fn hopcroft_karp(adj: &[Vec<usize>], right_count: usize) -> Vec<Option<usize>> {
    const INF: usize = usize::MAX;
    let left_count = adj.len();
    let mut match_left: Vec<Option<usize>> = vec![None; left_count];
    let mut match_right: Vec<Option<usize>> = vec![None; right_count];
    let mut dist = vec![INF; left_count];

    loop {
        // layered BFS from free left vertices
        let mut queue = VecDeque::new();
        for u in 0..left_count {
            if match_left[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match match_right[v] {
                    None => found = true,
                    Some(w) if dist[w] == INF => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }

        // iterative DFS along the layers
        let mut next_edge = vec![0usize; left_count];
        for root in 0..left_count {
            if match_left[root].is_some() {
                continue;
            }
            let mut stack = vec![root];
            while let Some(&u) = stack.last() {
                if next_edge[u] == adj[u].len() {
                    dist[u] = INF;
                    stack.pop();
                    continue;
                }
                let v = adj[u][next_edge[u]];
                next_edge[u] += 1;
                match match_right[v] {
                    None => {
                        // augment along the stack
                        let mut v = v;
                        while let Some(u) = stack.pop() {
                            let prev = match_left[u];
                            match_left[u] = Some(v);
                            match_right[v] = Some(u);
                            match prev {
                                Some(p) => v = p,
                                None => break,
                            }
                        }
                        stack.clear();
                    }
                    Some(w) if dist[w] == dist[u] + 1 => stack.push(w),
                    _ => {}
                }
            }
        }
    }
    match_left
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthResult {
    pub width: usize,
    pub antichain: Vec<usize>,
    pub chains: Vec<Vec<usize>>,
}

/// Poset width with a maximum antichain and a minimum chain cover.
pub fn dilworth(up: &[Vec<usize>]) -> WidthResult {
    let n = up.len();
    let match_left = hopcroft_karp(up, n);
    let mut match_right = vec![None; n];
    for (u, m) in match_left.iter().enumerate() {
        if let Some(v) = m {
            match_right[*v] = Some(u);
        }
    }
    let matched = match_left.iter().filter(|m| m.is_some()).count();

    // chains: follow u -> match_left[u] from chain heads (vertices with no predecessor)
    let mut chains = Vec::new();
    for start in (0..n).filter(|&v| match_right[v].is_none()) {
        let mut chain = vec![start];
        let mut cur = start;
        while let Some(next) = match_left[cur] {
            chain.push(next);
            cur = next;
        }
        chains.push(chain);
    }

    // König: alternating reachability from free left vertices
    let mut left_z = vec![false; n];
    let mut right_z = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&u| match_left[u].is_none()).collect();
    for &u in &queue {
        left_z[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in &up[u] {
            if match_left[u] == Some(v) || right_z[v] {
                continue;
            }
            right_z[v] = true;
            if let Some(w) = match_right[v] {
                if !left_z[w] {
                    left_z[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let antichain: Vec<usize> = (0..n).filter(|&v| left_z[v] && !right_z[v]).collect();
    debug_assert_eq!(antichain.len(), n - matched);
    WidthResult {
        width: n - matched,
        antichain,
        chains,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_antichain(g: &InclusionGraph, s: &[usize]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &a)| s[i + 1..].iter().all(|&b| !g.is_adjacent(a, b)))
    }

    #[test]
    fn boolean_height_and_width() {
        for n in 2..=7u32 {
            let g = InclusionGraph::boolean(n).unwrap();
            let up = up_sets(&g);
            let c = longest_chain(&g, &up);
            assert_eq!(c.length, n as usize - 1);
            let w = dilworth(&up);
            let p = n as u64 / 2;
            assert_eq!(w.width as u64, crate::combinat::binomial(n as u64, p));
            assert!(is_antichain(&g, &w.antichain));
            assert_eq!(w.chains.len(), w.width);
            let covered: usize = w.chains.iter().map(Vec::len).sum();
            assert_eq!(covered, g.vertex_count());
        }
    }

    #[test]
    fn canonical_chain_is_prefix_chain() {
        let g = InclusionGraph::boolean(5).unwrap();
        let c = longest_chain(&g, &up_sets(&g));
        let words: Vec<u64> = c.chain.iter().map(|&v| g.word(v).unwrap()).collect();
        assert_eq!(words, vec![0b1, 0b11, 0b111, 0b1111]);
    }

    #[test]
    fn even_n_width_witness_is_middle_layer() {
        let g = InclusionGraph::boolean(4).unwrap();
        let w = dilworth(&up_sets(&g));
        assert_eq!(w.width, 6);
        assert!(w.antichain.iter().all(|&v| g.size(v) == 2));
    }

    #[test]
    fn mirsky_is_proper() {
        let g = InclusionGraph::boolean(5).unwrap();
        let up = up_sets(&g);
        let (k, colors) = mirsky_coloring(&up);
        assert_eq!(k, 4);
        for (v, ups) in up.iter().enumerate() {
            for &w in ups {
                assert_ne!(colors[v], colors[w]);
            }
        }
    }
}
