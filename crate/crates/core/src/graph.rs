//! The inclusion ideal graph and a plain adjacency-list graph.
//!
//! Vertices are nontrivial left ideals; two vertices are adjacent iff one is
//! strictly contained in the other. Vertex ids follow the canonical order
//! `(cardinality, mask value)`.
//!
//! In Boolean mode (completely simple `S` with `n` minimal left ideals) the
//! vertices are the nonempty proper subsets of `[n]` and nothing is stored:
//! ids are ranked and unranked through the combinatorial number system.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::combinat::{
    binomial, layer, proper_nonempty_submasks, rank_in_layer, subset_label, unrank_in_layer,
};
use crate::error::{Error, Result};
use crate::semigroup::IdealFamily;

/// Default cap on materialized vertex counts.
pub const DEFAULT_MAX_VERTICES: usize = 1 << 22;

/// Largest `n` accepted by [`InclusionGraph::boolean`].
pub const MAX_BOOLEAN_N: u32 = 62;

/// Undirected simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); vertex_count],
        }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g.normalize();
        g
    }

    pub fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        SimpleGraph { adj }
    }

    /// Adds `u -- v` without keeping lists sorted; call [`normalize`](Self::normalize) afterwards.
    fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].push(v);
            self.adj[v].push(u);
        }
    }

    fn normalize(&mut self) {
        for list in self.adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
    }

    pub fn cycle(len: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
        SimpleGraph::from_edges(len, &edges)
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        SimpleGraph::from_edges(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.vertex_count();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        SimpleGraph { adj }
    }

    /// Subgraph induced by `vertices`, relabeled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let pos: HashMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut l: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|w| pos.get(w).copied())
                    .collect();
                l.sort_unstable();
                l
            })
            .collect();
        SimpleGraph { adj }
    }

    /// Removes one edge; returns whether it was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(i) => {
                self.adj[u].remove(i);
                let j = self.adj[v].binary_search(&u).expect("symmetric adjacency");
                self.adj[v].remove(j);
                true
            }
            Err(_) => false,
        }
    }
}

/// How the vertex set was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphMode {
    Generic,
    Boolean,
}

#[derive(Clone, Debug)]
enum Repr {
    Boolean {
        n: u32,
        /// offsets[k] = id of the first k-subset
        offsets: Vec<u64>,
    },
    Generic {
        universe: usize,
        masks: Vec<ElementSet>,
        adj: Vec<Vec<usize>>,
        index: HashMap<ElementSet, usize>,
    },
}

/// The inclusion ideal graph `In(S)`.
#[derive(Clone, Debug)]
pub struct InclusionGraph {
    repr: Repr,
}

impl InclusionGraph {
    /// One vertex per nontrivial left ideal, edges by strict containment.
    pub fn from_family(family: &IdealFamily) -> Result<Self> {
        if family.truncated {
            return Err(Error::TruncatedFamily { cap: family.cap });
        }
        let masks: Vec<ElementSet> = family.ideals.iter().map(|i| i.members().clone()).collect();
        Ok(Self::from_masks(family.order, masks))
    }

    /// Containment graph on arbitrary distinct sets (sorted canonically).
    pub fn from_masks(universe: usize, mut masks: Vec<ElementSet>) -> Self {
        masks.sort_by(|a, b| a.cmp_canonical(b));
        masks.dedup();
        let sizes: Vec<usize> = masks.iter().map(ElementSet::count).collect();
        let mut adj = vec![Vec::new(); masks.len()];
        for u in 0..masks.len() {
            for v in u + 1..masks.len() {
                // canonical order puts strict subsets first
                if sizes[u] < sizes[v] && masks[u].is_subset(&masks[v]) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
        }
        let index = masks
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        InclusionGraph {
            repr: Repr::Generic {
                universe,
                masks,
                adj,
                index,
            },
        }
    }

    /// The containment graph on nonempty proper subsets of `[n]`.
    pub fn boolean(n: u32) -> Result<Self> {
        if !(2..=MAX_BOOLEAN_N).contains(&n) {
            return Err(Error::OutOfRange {
                what: "n",
                value: n as i64,
                range: "2..=62",
            });
        }
        let mut offsets = vec![0u64; n as usize + 1];
        for k in 1..n as usize {
            offsets[k + 1] = offsets[k] + binomial(n as u64, k as u64);
        }
        // offsets[1] = 0 and offsets[n] = 2^n - 2
        Ok(InclusionGraph {
            repr: Repr::Boolean { n, offsets },
        })
    }

    pub fn mode(&self) -> GraphMode {
        match self.repr {
            Repr::Boolean { .. } => GraphMode::Boolean,
            Repr::Generic { .. } => GraphMode::Generic,
        }
    }

    /// `n` in Boolean mode.
    pub fn boolean_n(&self) -> Option<u32> {
        match self.repr {
            Repr::Boolean { n, .. } => Some(n),
            Repr::Generic { .. } => None,
        }
    }

    /// Width of the masks: `n` in Boolean mode, the semigroup order otherwise.
    pub fn universe(&self) -> usize {
        match &self.repr {
            Repr::Boolean { n, .. } => *n as usize,
            Repr::Generic { universe, .. } => *universe,
        }
    }

    pub fn vertex_count(&self) -> usize {
        match &self.repr {
            Repr::Boolean { offsets, .. } => *offsets.last().expect("offsets") as usize,
            Repr::Generic { masks, .. } => masks.len(),
        }
    }

    pub fn edge_count(&self) -> u128 {
        match &self.repr {
            Repr::Boolean { n, .. } => {
                let n = *n as u64;
                (1..n)
                    .map(|k| {
                        binomial(n, k) as u128 * (((1u128 << k) - 2) + ((1u128 << (n - k)) - 2))
                    })
                    .sum::<u128>()
                    / 2
            }
            Repr::Generic { adj, .. } => (adj.iter().map(Vec::len).sum::<usize>() / 2) as u128,
        }
    }

    /// Subset of `[n]` for a Boolean-mode vertex.
    pub fn word(&self, v: usize) -> Option<u64> {
        match &self.repr {
            Repr::Boolean { n, offsets } => {
                let v = v as u64;
                if v >= *offsets.last()? {
                    return None;
                }
                let k = offsets.partition_point(|&o| o <= v) - 1;
                Some(unrank_in_layer(*n, k as u32, v - offsets[k]))
            }
            Repr::Generic { masks, .. } => masks.get(v)?.as_word(),
        }
    }

    pub fn mask(&self, v: usize) -> ElementSet {
        match &self.repr {
            Repr::Boolean { n, .. } => {
                ElementSet::from_word(*n as usize, self.word(v).expect("vertex in range"))
            }
            Repr::Generic { masks, .. } => masks[v].clone(),
        }
    }

    pub fn size(&self, v: usize) -> usize {
        match &self.repr {
            Repr::Boolean { offsets, .. } => offsets.partition_point(|&o| o <= v as u64) - 1,
            Repr::Generic { masks, .. } => masks[v].count(),
        }
    }

    /// Vertex id of a Boolean subset.
    pub fn id_of_word(&self, mask: u64) -> Option<usize> {
        match &self.repr {
            Repr::Boolean { n, offsets } => {
                let k = mask.count_ones();
                if k == 0 || k >= *n || mask >> *n != 0 {
                    return None;
                }
                Some((offsets[k as usize] + rank_in_layer(mask)) as usize)
            }
            Repr::Generic {
                index, universe, ..
            } => {
                if *universe > 64 {
                    return None;
                }
                index.get(&ElementSet::from_word(*universe, mask)).copied()
            }
        }
    }

    pub fn id_of(&self, mask: &ElementSet) -> Option<usize> {
        match &self.repr {
            Repr::Boolean { .. } => self.id_of_word(mask.as_word()?),
            Repr::Generic { index, .. } => index.get(mask).copied(),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        match &self.repr {
            Repr::Boolean { .. } => {
                let (a, b) = (self.word(u).unwrap_or(0), self.word(v).unwrap_or(0));
                a != b && (a & b == a || a & b == b)
            }
            Repr::Generic { adj, .. } => adj[u].binary_search(&v).is_ok(),
        }
    }

    /// Strict subsets of `v` inside the graph.
    pub fn below(&self, v: usize) -> Vec<usize> {
        match &self.repr {
            Repr::Boolean { .. } => {
                let w = self.word(v).expect("vertex in range");
                let mut out: Vec<usize> = proper_nonempty_submasks(w)
                    .filter_map(|s| self.id_of_word(s))
                    .collect();
                out.sort_unstable();
                out
            }
            Repr::Generic { adj, .. } => adj[v].iter().copied().filter(|&u| u < v).collect(),
        }
    }

    /// Strict supersets of `v` inside the graph.
    pub fn above(&self, v: usize) -> Vec<usize> {
        match &self.repr {
            Repr::Boolean { n, .. } => {
                let w = self.word(v).expect("vertex in range");
                let full = (1u64 << *n) - 1;
                let rest = full & !w;
                let mut out: Vec<usize> = proper_nonempty_submasks(rest)
                    .filter_map(|s| self.id_of_word(w | s))
                    .collect();
                out.sort_unstable();
                out
            }
            Repr::Generic { adj, .. } => adj[v].iter().copied().filter(|&u| u > v).collect(),
        }
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = self.below(v);
        out.extend(self.above(v));
        out
    }

    pub fn vertex_degree(&self, v: usize) -> Result<u64> {
        self.check_vertex(v)?;
        Ok(match &self.repr {
            Repr::Boolean { n, .. } => {
                let k = self.size(v) as u32;
                ((1u64 << k) - 2) + ((1u64 << (n - k)) - 2)
            }
            Repr::Generic { adj, .. } => adj[v].len() as u64,
        })
    }

    /// Materializes adjacency lists, refusing graphs above `cap` vertices.
    pub fn to_simple(&self, cap: usize) -> Result<SimpleGraph> {
        let count = self.vertex_count();
        if count > cap {
            return Err(Error::TooLarge {
                what: "vertex count",
                size: count,
                cap,
            });
        }
        Ok(match &self.repr {
            Repr::Generic { adj, .. } => SimpleGraph { adj: adj.clone() },
            Repr::Boolean { .. } => SimpleGraph {
                adj: (0..count).map(|v| self.neighbors(v)).collect(),
            },
        })
    }

    /// All vertex masks in id order (Boolean mode only).
    pub fn words(&self) -> Option<Vec<u64>> {
        match &self.repr {
            Repr::Boolean { n, .. } => Some((1..*n).flat_map(|k| layer(*n, k)).collect()),
            Repr::Generic { .. } => None,
        }
    }

    /// `I_{...}` name: 1-based minimal-ideal indices in Boolean mode,
    /// 0-based element indices otherwise.
    pub fn vertex_name(&self, v: usize) -> String {
        match &self.repr {
            Repr::Boolean { .. } => {
                format!("I_{{{}}}", subset_label(self.word(v).expect("vertex")))
            }
            Repr::Generic { masks, .. } => {
                let parts: Vec<String> = masks[v].iter().map(|i| i.to_string()).collect();
                format!("I_{{{}}}", parts.join(","))
            }
        }
    }

    /// Deterministic edge list `(u, v)` with `u < v`, sorted.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<serde_json::Value> = (0..self.vertex_count())
            .map(|v| {
                let mask: serde_json::Number =
                    serde_json::from_str(&self.mask(v).to_decimal()).expect("decimal integer");
                serde_json::json!({ "id": v, "mask": mask, "size": self.size(v) })
            })
            .collect();
        let edges: Vec<[usize; 2]> = self.edge_list().into_iter().map(|(u, v)| [u, v]).collect();
        serde_json::json!({
            "mode": self.mode(),
            "n": self.boolean_n(),
            "vertices": vertices,
            "edges": edges,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph In {\n");
        for v in 0..self.vertex_count() {
            let _ = writeln!(out, "  \"{}\";", self.vertex_name(v));
        }
        for (u, v) in self.edge_list() {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\";",
                self.vertex_name(u),
                self.vertex_name(v)
            );
        }
        out.push_str("}\n");
        out
    }

    /// Renders the graph, refusing to enumerate more than `cap` vertices.
    pub fn export(&self, format: ExportFormat, cap: usize) -> Result<String> {
        if self.vertex_count() > cap {
            return Err(Error::TooLarge {
                what: "vertex count",
                size: self.vertex_count(),
                cap,
            });
        }
        Ok(match format {
            ExportFormat::Dot => self.to_dot(),
            ExportFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("json");
                s.push('\n');
                s
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

/// For a family whose minimal ideals partition `S` and where every member
/// is a union of minimal ideals, maps each member to the subset of
/// minimal-ideal indices it contains. Minimal ideals are indexed in the
/// family's canonical order.
pub fn minimal_ideal_coordinates(family: &IdealFamily) -> Option<Vec<u64>> {
    let minimal: Vec<&ElementSet> = family.minimal().map(|i| i.members()).collect();
    if minimal.len() > 64 {
        return None;
    }
    family
        .ideals
        .iter()
        .map(|ideal| {
            let mut word = 0u64;
            let mut covered = ElementSet::empty(family.order);
            for (i, m) in minimal.iter().enumerate() {
                if m.is_subset(ideal.members()) {
                    word |= 1 << i;
                    covered.union_with(m);
                }
            }
            (covered == *ideal.members()).then_some(word)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{enumerate_left_ideals, CayleyTable, DEFAULT_IDEAL_CAP};

    fn family(t: &CayleyTable) -> IdealFamily {
        enumerate_left_ideals(t, DEFAULT_IDEAL_CAP)
    }

    #[test]
    fn null_semigroup_is_a_path() {
        let g = InclusionGraph::from_family(&family(&CayleyTable::null(3))).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_list(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn group_has_empty_graph() {
        let g = InclusionGraph::from_family(&family(&CayleyTable::cyclic_group(3))).unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.to_dot(), "graph In {\n}\n");
    }

    #[test]
    fn truncated_family_refused() {
        let fam = enumerate_left_ideals(&CayleyTable::right_zero(5), 3);
        assert!(matches!(
            InclusionGraph::from_family(&fam),
            Err(Error::TruncatedFamily { cap: 3 })
        ));
    }

    #[test]
    fn boolean_small_cases() {
        let g = InclusionGraph::boolean(2).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 0);
        let g = InclusionGraph::boolean(3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 6));
        assert!((0..6).all(|v| g.vertex_degree(v).unwrap() == 2));
        assert_eq!(InclusionGraph::boolean(4).unwrap().vertex_count(), 14);
        assert!(InclusionGraph::boolean(1).is_err());
        assert!(InclusionGraph::boolean(63).is_err());
        assert_eq!(
            InclusionGraph::boolean(62).unwrap().vertex_count(),
            (1usize << 62) - 2
        );
    }

    #[test]
    fn degree_formula_examples() {
        let g4 = InclusionGraph::boolean(4).unwrap();
        let single = g4.id_of_word(0b0001).unwrap();
        let pair = g4.id_of_word(0b0011).unwrap();
        assert_eq!(g4.vertex_degree(single).unwrap(), 6);
        assert_eq!(g4.vertex_degree(pair).unwrap(), 4);
        assert_eq!(g4.neighbors(single).len(), 6);
        assert_eq!(g4.neighbors(pair).len(), 4);
        let g5 = InclusionGraph::boolean(5).unwrap();
        let pair = g5.id_of_word(0b00110).unwrap();
        assert_eq!(g5.vertex_degree(pair).unwrap(), 8);
        assert!(matches!(
            g4.vertex_degree(14),
            Err(Error::UnknownVertex(14))
        ));
    }

    #[test]
    fn boolean_ids_follow_canonical_order() {
        let g = InclusionGraph::boolean(5).unwrap();
        let words = g.words().unwrap();
        for (v, &w) in words.iter().enumerate() {
            assert_eq!(g.word(v), Some(w));
            assert_eq!(g.id_of_word(w), Some(v));
        }
        let sets: Vec<ElementSet> = words.iter().map(|&w| ElementSet::from_word(5, w)).collect();
        assert!(sets.windows(2).all(|p| p[0].cmp_canonical(&p[1]).is_lt()));
    }

    #[test]
    fn json_export_small() {
        let g = InclusionGraph::boolean(2).unwrap();
        let j = g.to_json();
        assert_eq!(j["mode"], "boolean");
        assert_eq!(j["vertices"].as_array().unwrap().len(), 2);
        assert!(j["edges"].as_array().unwrap().is_empty());
        let g3 = InclusionGraph::boolean(3).unwrap();
        assert_eq!(g3.to_json()["edges"].as_array().unwrap().len(), 6);
        let dot = g3.to_dot();
        assert!(dot.contains("\"I_{1}\" -- \"I_{1,2}\";"));
    }
}
