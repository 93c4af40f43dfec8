//! Automorphism groups of inclusion graphs.
//!
//! The general search is individualization-refinement: colour refinement by
//! (colour, sorted neighbour colours) to a fixed point, then individualize a
//! vertex of the first non-singleton cell and repeat. Along the first path
//! this fixes a base `b_1, ..., b_k`; the group order is the product of the
//! basic orbit lengths, each orbit being completed by searching, for every
//! candidate image of `b_i`, for a leaf compatible with the first path.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::graph::{InclusionGraph, SimpleGraph};

pub const DEFAULT_AUT_CAP: usize = 1 << 12;
/// Largest group enumerated element by element.
pub const CLOSURE_CAP: usize = 10_000_000;
/// Closure is skipped when it would hold more than this many vertex images.
const CLOSURE_MEMORY_CAP: usize = 1 << 28;

/// Boolean-model reading of an automorphism: `I_A -> I_{σ(A)}`, or
/// `I_A -> I_{σ([n] \ A)}` when complemented. `sigma` is 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Decomposition {
    pub sigma: Vec<usize>,
    pub complemented: bool,
}

impl Decomposition {
    /// `(σ1, c1)(σ2, c2) = (σ1 σ2, c1 + c2 mod 2)`.
    pub fn compose(&self, other: &Decomposition) -> Decomposition {
        Decomposition {
            sigma: other.sigma.iter().map(|&i| self.sigma[i]).collect(),
            complemented: self.complemented != other.complemented,
        }
    }

    fn apply(&self, n: u32, word: u64) -> u64 {
        let base = if self.complemented {
            ((1u64 << n) - 1) ^ word
        } else {
            word
        };
        (0..n as usize)
            .filter(|&i| base >> i & 1 == 1)
            .fold(0u64, |acc, i| acc | 1 << self.sigma[i])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GraphAutomorphism {
    /// `perm[v]` is the image of vertex `v`.
    pub perm: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Decomposition>,
}

impl GraphAutomorphism {
    pub fn identity(n: usize) -> Self {
        GraphAutomorphism {
            perm: (0..n).collect(),
            decomposition: None,
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GraphAutomorphism) -> GraphAutomorphism {
        GraphAutomorphism {
            perm: other.perm.iter().map(|&v| self.perm[v]).collect(),
            decomposition: match (&self.decomposition, &other.decomposition) {
                (Some(a), Some(b)) => Some(a.compose(b)),
                _ => None,
            },
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Smallest `k >= 1` with `self^k = id`.
    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.perm.len()];
        let mut acc = 1usize;
        for s in 0..self.perm.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut v = s;
            while !seen[v] {
                seen[v] = true;
                v = self.perm[v];
                len += 1;
            }
            acc = lcm(acc, len);
        }
        acc
    }

    /// `(mask, image mask)` pairs for export.
    pub fn mask_pairs(&self, g: &InclusionGraph) -> Vec<(String, String)> {
        self.perm
            .iter()
            .enumerate()
            .map(|(v, &w)| (g.mask(v).to_decimal(), g.mask(w).to_decimal()))
            .collect()
    }
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

pub fn is_automorphism(g: &SimpleGraph, perm: &[usize]) -> bool {
    let n = g.vertex_count();
    if perm.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &v in perm {
        if v >= n || hit[v] {
            return false;
        }
        hit[v] = true;
    }
    (0..n).all(|u| {
        g.degree(u) == g.degree(perm[u])
            && g.neighbors(u).iter().all(|&w| g.has_edge(perm[u], perm[w]))
    })
}

fn boolean_n(g: &InclusionGraph) -> Result<u32> {
    g.boolean_n().ok_or(Error::OutOfRange {
        what: "graph mode",
        value: 0,
        range: "Boolean model only",
    })
}

fn check_permutation(n: usize, sigma: &[usize]) -> Result<()> {
    if sigma.len() != n {
        return Err(Error::NotAPermutation {
            n,
            reason: format!("expected {n} images, got {}", sigma.len()),
        });
    }
    let mut seen = vec![false; n];
    for &s in sigma {
        if s >= n {
            return Err(Error::NotAPermutation {
                n,
                reason: format!("image {} is out of range", s + 1),
            });
        }
        if seen[s] {
            return Err(Error::NotAPermutation {
                n,
                reason: format!("image {} repeats", s + 1),
            });
        }
        seen[s] = true;
    }
    Ok(())
}

/// Vertex automorphisms of Boolean graphs with at most this many vertices
/// are re-checked edge by edge when constructed.
const VERIFY_LIMIT: usize = 1 << 12;

fn from_decomposition(g: &InclusionGraph, d: Decomposition) -> Result<GraphAutomorphism> {
    let n = boolean_n(g)?;
    let perm: Vec<usize> = (0..g.vertex_count())
        .map(|v| {
            let w = d.apply(n, g.word(v).expect("Boolean vertex"));
            g.id_of_word(w).expect("image is a vertex")
        })
        .collect();
    if g.vertex_count() <= VERIFY_LIMIT {
        let s = g.to_simple(VERIFY_LIMIT)?;
        debug_assert!(is_automorphism(&s, &perm));
        if !is_automorphism(&s, &perm) {
            return Err(Error::NotAPermutation {
                n: n as usize,
                reason: "induced vertex map does not preserve adjacency".into(),
            });
        }
    }
    Ok(GraphAutomorphism {
        perm,
        decomposition: Some(d),
    })
}

/// The relabeling automorphism `I_A -> I_{σ(A)}` (σ 0-based).
pub fn phi_sigma(g: &InclusionGraph, sigma: &[usize]) -> Result<GraphAutomorphism> {
    let n = boolean_n(g)?;
    check_permutation(n as usize, sigma)?;
    from_decomposition(
        g,
        Decomposition {
            sigma: sigma.to_vec(),
            complemented: false,
        },
    )
}

/// The complementation automorphism `I_A -> I_{[n] \ A}`.
pub fn alpha_complement(g: &InclusionGraph) -> Result<GraphAutomorphism> {
    let n = boolean_n(g)?;
    from_decomposition(
        g,
        Decomposition {
            sigma: (0..n as usize).collect(),
            complemented: true,
        },
    )
}

/// Reads `(σ, complemented)` from singleton images, or from the images of
/// the `(n-1)`-subsets; `None` if neither pattern explains the whole map.
pub fn decompose(g: &InclusionGraph, perm: &[usize]) -> Option<Decomposition> {
    let n = g.boolean_n()?;
    let full = (1u64 << n) - 1;
    let image = |w: u64| g.word(perm[g.id_of_word(w)?]);
    let read = |complemented: bool| -> Option<Decomposition> {
        let mut sigma = vec![0usize; n as usize];
        for (i, s) in sigma.iter_mut().enumerate() {
            let source = if complemented {
                full ^ (1 << i)
            } else {
                1 << i
            };
            let w = image(source)?;
            if w.count_ones() != 1 {
                return None;
            }
            *s = w.trailing_zeros() as usize;
        }
        check_permutation(n as usize, &sigma).ok()?;
        let d = Decomposition {
            sigma,
            complemented,
        };
        let consistent = (0..g.vertex_count()).all(|v| {
            let w = g.word(v).expect("Boolean vertex");
            g.word(perm[v]) == Some(d.apply(n, w))
        });
        consistent.then_some(d)
    };
    read(false).or_else(|| read(true))
}

struct Refiner<'a> {
    g: &'a SimpleGraph,
}

impl Refiner<'_> {
    /// Equitable refinement; colours are canonical (depend only on the input
    /// colouring up to isomorphism) and dense in `0..k`.
    fn refine(&self, colors: &mut Vec<usize>) {
        let n = self.g.vertex_count();
        let mut count = distinct(colors);
        loop {
            let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<usize> =
                        self.g.neighbors(v).iter().map(|&w| colors[w]).collect();
                    nb.sort_unstable();
                    (colors[v], nb, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut next = vec![0usize; n];
            let mut c = 0;
            for i in 0..n {
                if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                    c += 1;
                }
                next[sigs[i].2] = c;
            }
            let new_count = if n == 0 { 0 } else { c + 1 };
            *colors = next;
            if new_count == count {
                return;
            }
            count = new_count;
        }
    }

    fn individualize(&self, colors: &[usize], v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = colors.iter().map(|&c| 2 * c + 1).collect();
        out[v] = 2 * colors[v];
        let mut out = compress(&out);
        self.refine(&mut out);
        out
    }
}

fn distinct(colors: &[usize]) -> usize {
    colors.iter().collect::<HashSet<_>>().len()
}

fn compress(colors: &[usize]) -> Vec<usize> {
    let mut vals: Vec<usize> = colors.to_vec();
    vals.sort_unstable();
    vals.dedup();
    colors
        .iter()
        .map(|c| vals.binary_search(c).expect("present"))
        .collect()
}

fn histogram(colors: &[usize]) -> Vec<usize> {
    let mut h = vec![0usize; colors.len()];
    for &c in colors {
        h[c] += 1;
    }
    h
}

/// Lowest colour with more than one vertex.
fn target_color(colors: &[usize]) -> Option<usize> {
    histogram(colors).iter().position(|&k| k > 1)
}

struct Level {
    colors: Vec<usize>,
    target: usize,
    base: usize,
}

struct Search<'a> {
    refiner: Refiner<'a>,
    path: Vec<Level>,
    /// colour -> vertex at the discrete leaf of the first path
    leaf: Vec<usize>,
}

impl Search<'_> {
    /// Depth-first search for an automorphism whose leaf matches the first
    /// path's leaf, starting at `depth` with `colors` already individualized.
    fn descend(&self, depth: usize, colors: Vec<usize>) -> Option<Vec<usize>> {
        if depth == self.path.len() {
            let perm = invert_leaf(&self.leaf, &colors);
            return is_automorphism(self.refiner.g, &perm).then_some(perm);
        }
        let level = &self.path[depth];
        let expected = self.expected_histogram(depth + 1);
        let cell: Vec<usize> = (0..colors.len())
            .filter(|&v| colors[v] == level.target)
            .collect();
        for x in cell {
            let next = self.refiner.individualize(&colors, x);
            if histogram(&next) != expected {
                continue;
            }
            if let Some(p) = self.descend(depth + 1, next) {
                return Some(p);
            }
        }
        None
    }

    /// Cell sizes the first path has after `depth` individualizations.
    fn expected_histogram(&self, depth: usize) -> Vec<usize> {
        match self.path.get(depth) {
            Some(level) => histogram(&level.colors),
            None => vec![1; self.leaf.len()],
        }
    }
}

/// `perm[leaf[c]] = w` where `w` has colour `c` in `colors`.
fn invert_leaf(leaf: &[usize], colors: &[usize]) -> Vec<usize> {
    let mut perm = vec![0usize; leaf.len()];
    for (w, &c) in colors.iter().enumerate() {
        perm[leaf[c]] = w;
    }
    perm
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
        for v in 0..n {
            let r = self.find(v);
            by_root.entry(r).or_default().push(v);
        }
        let mut out: Vec<Vec<usize>> = by_root.into_values().collect();
        out.sort();
        out
    }
}

fn orbit_of(n: usize, gens: &[Vec<usize>], x: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([x]);
    seen[x] = true;
    let mut out = vec![x];
    while let Some(v) = queue.pop_front() {
        for g in gens {
            let w = g[v];
            if !seen[w] {
                seen[w] = true;
                out.push(w);
                queue.push_back(w);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureTag {
    Trivial,
    /// `S_n × Z_2` acting on the Boolean model on `[n]`.
    SymmetricTimesZ2(u32),
    Other,
}

impl fmt::Display for StructureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureTag::Trivial => write!(f, "trivial"),
            StructureTag::SymmetricTimesZ2(n) => write!(f, "S_{n} x Z_2"),
            StructureTag::Other => write!(f, "other"),
        }
    }
}

impl Serialize for StructureTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutGroupReport {
    #[serde(serialize_with = "ser_u128")]
    pub order: u128,
    pub generators: Vec<GraphAutomorphism>,
    pub structure: StructureTag,
    /// Basic orbit lengths along the base, from the top of the chain.
    pub orbit_lengths: Vec<usize>,
    /// Order recomputed by closing the generators; `None` if skipped.
    pub closure_order: Option<usize>,
}

fn ser_u128<S: Serializer>(v: &u128, s: S) -> std::result::Result<S::Ok, S::Error> {
    match u64::try_from(*v) {
        Ok(x) => s.serialize_u64(x),
        Err(_) => s.collect_str(v),
    }
}

impl AutGroupReport {
    pub fn orbits(&self, vertex_count: usize) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(vertex_count);
        for g in &self.generators {
            for (v, &w) in g.perm.iter().enumerate() {
                uf.union(v, w);
            }
        }
        uf.classes()
    }

    pub fn edge_orbits(&self, g: &SimpleGraph) -> Vec<Vec<(usize, usize)>> {
        let edges = g.edges();
        let index: HashMap<(usize, usize), usize> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut uf = UnionFind::new(edges.len());
        for a in &self.generators {
            for (i, &(u, v)) in edges.iter().enumerate() {
                let (x, y) = (a.perm[u], a.perm[v]);
                uf.union(i, index[&(x.min(y), x.max(y))]);
            }
        }
        uf.classes()
            .into_iter()
            .map(|c| c.into_iter().map(|i| edges[i]).collect())
            .collect()
    }
}

/// Enumerates the group generated by `gens` (on `n` points), up to `cap` elements.
pub fn closure_size(n: usize, gens: &[Vec<usize>], cap: usize) -> Option<usize> {
    let id: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q: Vec<usize> = p.iter().map(|&v| g[v]).collect();
            if seen.insert(q.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(q);
            }
        }
    }
    Some(seen.len())
}

/// Full automorphism group with generators, order and (in Boolean mode) the
/// `(σ, complemented)` reading of each generator.
pub fn automorphism_group(g: &InclusionGraph, cap: usize) -> Result<AutGroupReport> {
    let simple = g.to_simple(cap)?;
    let mut report = automorphisms_of(&simple);
    if let Some(n) = g.boolean_n() {
        let mut all_decompose = true;
        for a in report.generators.iter_mut() {
            a.decomposition = decompose(g, &a.perm);
            all_decompose &= a.decomposition.is_some();
        }
        if all_decompose && report.order == 2 * factorial(n as u64) {
            report.structure = StructureTag::SymmetricTimesZ2(n);
        }
    }
    Ok(report)
}

/// Automorphism group of a plain graph.
pub fn automorphisms_of(g: &SimpleGraph) -> AutGroupReport {
    let n = g.vertex_count();
    let refiner = Refiner { g };
    let mut colors = vec![0usize; n];
    refiner.refine(&mut colors);

    let mut path = Vec::new();
    while let Some(target) = target_color(&colors) {
        let base = colors
            .iter()
            .position(|&c| c == target)
            .expect("cell is nonempty");
        let next = refiner.individualize(&colors, base);
        path.push(Level {
            colors: std::mem::replace(&mut colors, next),
            target,
            base,
        });
    }
    let mut leaf = vec![0usize; n];
    for (v, &c) in colors.iter().enumerate() {
        leaf[c] = v;
    }
    let search = Search {
        refiner,
        path,
        leaf,
    };

    let mut gens: Vec<Vec<usize>> = Vec::new();
    let mut orbit_lengths = vec![0usize; search.path.len()];
    for depth in (0..search.path.len()).rev() {
        let level = &search.path[depth];
        let cell: Vec<usize> = (0..n)
            .filter(|&v| level.colors[v] == level.target)
            .collect();
        for &w in &cell {
            if orbit_of(n, &gens, level.base).contains(&w) {
                continue;
            }
            let next = search.refiner.individualize(&level.colors, w);
            if histogram(&next) != search.expected_histogram(depth + 1) {
                continue;
            }
            if let Some(p) = search.descend(depth + 1, next) {
                gens.push(p);
            }
        }
        orbit_lengths[depth] = orbit_of(n, &gens, level.base).len();
    }
    let order: u128 = orbit_lengths.iter().map(|&k| k as u128).product();
    let closure_order = if order <= CLOSURE_CAP as u128
        && (order as usize).saturating_mul(n.max(1)) <= CLOSURE_MEMORY_CAP
    {
        closure_size(n, &gens, CLOSURE_CAP)
    } else {
        None
    };
    let structure = if order == 1 {
        StructureTag::Trivial
    } else {
        StructureTag::Other
    };
    AutGroupReport {
        order,
        generators: gens
            .into_iter()
            .map(|perm| GraphAutomorphism {
                perm,
                decomposition: None,
            })
            .collect(),
        structure,
        orbit_lengths,
        closure_order,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Transitivity {
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
}

pub fn transitivity(g: &InclusionGraph, cap: usize) -> Result<Transitivity> {
    let simple = g.to_simple(cap)?;
    let report = automorphism_group(g, cap)?;
    Ok(Transitivity {
        vertex_transitive: report.orbits(simple.vertex_count()).len() <= 1,
        edge_transitive: report.edge_orbits(&simple).len() <= 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_and_petersen() {
        assert_eq!(automorphisms_of(&SimpleGraph::cycle(6)).order, 12);
        assert_eq!(automorphisms_of(&SimpleGraph::complete(5)).order, 120);
        assert_eq!(automorphisms_of(&SimpleGraph::new(3)).order, 6);
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
        let r = automorphisms_of(&p);
        assert_eq!(r.order, 120);
        assert_eq!(r.closure_order, Some(120));
    }

    #[test]
    fn asymmetric_graph() {
        // smallest asymmetric tree has 7 vertices
        let t = SimpleGraph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]);
        let r = automorphisms_of(&t);
        assert_eq!(r.order, 1);
        assert_eq!(r.structure, StructureTag::Trivial);
    }

    #[test]
    fn boolean_groups() {
        for (n, order) in [(2u32, 2u128), (3, 12), (4, 48)] {
            let g = InclusionGraph::boolean(n).unwrap();
            let r = automorphism_group(&g, DEFAULT_AUT_CAP).unwrap();
            assert_eq!(r.order, order);
            assert!(r.generators.iter().all(|a| a.decomposition.is_some()));
        }
    }

    #[test]
    fn phi_and_alpha() {
        let g = InclusionGraph::boolean(3).unwrap();
        let id = phi_sigma(&g, &[0, 1, 2]).unwrap();
        assert!(id.is_identity());
        let swap = phi_sigma(&g, &[1, 0, 2]).unwrap();
        let v1 = g.id_of_word(0b001).unwrap();
        let v2 = g.id_of_word(0b010).unwrap();
        assert_eq!(swap.perm[v1], v2);
        assert_eq!(
            swap.perm[g.id_of_word(0b100).unwrap()],
            g.id_of_word(0b100).unwrap()
        );
        assert_eq!(
            swap.perm[g.id_of_word(0b101).unwrap()],
            g.id_of_word(0b110).unwrap()
        );
        let a = alpha_complement(&g).unwrap();
        assert_eq!(a.order(), 2);
        assert_eq!(a.perm[v1], g.id_of_word(0b110).unwrap());
        assert!(phi_sigma(&g, &[0, 0, 1]).is_err());
        let g4 = InclusionGraph::boolean(4).unwrap();
        assert_eq!(phi_sigma(&g4, &[1, 2, 3, 0]).unwrap().order(), 4);
    }
}
