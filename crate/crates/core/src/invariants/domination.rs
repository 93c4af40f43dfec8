//! Exact minimum dominating sets by iterative deepening over closed neighborhoods.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const DEFAULT_DOMINATION_CAP: usize = 1 << 16;

struct Search<'a> {
    g: &'a SimpleGraph,
    /// number of chosen vertices dominating each vertex
    hits: Vec<u32>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn closed(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(v).chain(self.g.neighbors(v).iter().copied())
    }

    fn toggle(&mut self, v: usize, on: bool) {
        let g = self.g;
        for w in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
            if on {
                self.hits[w] += 1;
            } else {
                self.hits[w] -= 1;
            }
        }
    }

    /// Undominated vertex with the fewest dominators available.
    fn most_constrained(&self) -> Option<usize> {
        (0..self.g.vertex_count())
            .filter(|&v| self.hits[v] == 0)
            .min_by_key(|&v| (self.g.degree(v), v))
    }

    fn undominated(&self) -> usize {
        self.hits.iter().filter(|&&h| h == 0).count()
    }

    fn max_closed_degree(&self) -> usize {
        (0..self.g.vertex_count())
            .map(|v| self.g.degree(v) + 1)
            .max()
            .unwrap_or(1)
    }

    fn go(&mut self, budget: usize, max_cover: usize) -> bool {
        let Some(u) = self.most_constrained() else {
            return true;
        };
        if budget == 0 || self.undominated() > budget * max_cover {
            return false;
        }
        let candidates: Vec<usize> = self.closed(u).collect();
        for w in candidates {
            self.toggle(w, true);
            self.chosen.push(w);
            if self.go(budget - 1, max_cover) {
                return true;
            }
            self.chosen.pop();
            self.toggle(w, false);
        }
        false
    }
}

/// Minimum dominating set; refuses graphs above `cap` vertices.
pub fn domination_number(g: &SimpleGraph, cap: usize) -> Result<(usize, Vec<usize>)> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::TooLarge {
            what: "domination search vertex count",
            size: n,
            cap,
        });
    }
    let mut s = Search {
        g,
        hits: vec![0; n],
        chosen: Vec::new(),
    };
    let max_cover = s.max_closed_degree();
    for k in 0..=n {
        if s.go(k, max_cover) {
            let mut d = s.chosen.clone();
            d.sort_unstable();
            return Ok((k, d));
        }
    }
    unreachable!("the whole vertex set dominates")
}

pub fn is_dominating(g: &SimpleGraph, set: &[usize]) -> bool {
    let mut hit = vec![false; g.vertex_count()];
    for &v in set {
        hit[v] = true;
        for &w in g.neighbors(v) {
            hit[w] = true;
        }
    }
    hit.iter().all(|&h| h)
}
