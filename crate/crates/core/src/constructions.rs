//! Explicit constructions on the Boolean model: layer matchings, the
//! perfect matching, antichain normalization, and the canonical dominating
//! set and maximum chain. Vertices are `u64` masks over `[n]` (bit `i` is
//! element `i + 1`).

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::combinat::{binomial, layer};
use crate::error::{Error, Result};

/// Largest `n` accepted by the layer-based constructions.
pub const MAX_CONSTRUCTION_N: u32 = 20;

fn full(n: u32) -> u64 {
    (1u64 << n) - 1
}

fn check_n(n: u32, min: u32, range: &'static str) -> Result<()> {
    if n < min || n > MAX_CONSTRUCTION_N {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            range,
        });
    }
    Ok(())
}

/// Strict supersets of `mask` with one more element.
fn up_neighbors(n: u32, mask: u64) -> impl Iterator<Item = u64> {
    (0..n)
        .filter(move |i| mask >> i & 1 == 0)
        .map(move |i| mask | 1 << i)
}

/// Strict subsets of `mask` with one element fewer.
fn down_neighbors(n: u32, mask: u64) -> impl Iterator<Item = u64> {
    (0..n)
        .filter(move |i| mask >> i & 1 == 1)
        .map(move |i| mask & !(1 << i))
}

/// Matching saturating `sources`, trying targets in the order produced by
/// `targets` and augmenting along shortest alternating paths. `None` when
/// Hall's condition fails.
fn saturating_matching<F, I>(
    sources: &[u64],
    targets: F,
    allowed: Option<&HashSet<u64>>,
) -> Option<Vec<(u64, u64)>>
where
    F: Fn(u64) -> I,
    I: Iterator<Item = u64>,
{
    let mut src_mate: HashMap<u64, u64> = HashMap::new();
    let mut tgt_mate: HashMap<u64, u64> = HashMap::new();
    for &s in sources {
        let mut parent: HashMap<u64, u64> = HashMap::new();
        let mut queue = VecDeque::from([s]);
        let mut free = None;
        'bfs: while let Some(u) = queue.pop_front() {
            for t in targets(u) {
                if allowed.is_some_and(|a| !a.contains(&t)) || parent.contains_key(&t) {
                    continue;
                }
                parent.insert(t, u);
                match tgt_mate.get(&t) {
                    None => {
                        free = Some(t);
                        break 'bfs;
                    }
                    Some(&w) => queue.push_back(w),
                }
            }
        }
        let mut t = free?;
        loop {
            let u = parent[&t];
            let prev = src_mate.insert(u, t);
            tgt_mate.insert(t, u);
            match prev {
                Some(p) if u != s => t = p,
                _ => break,
            }
        }
    }
    Some(sources.iter().map(|s| (*s, src_mate[s])).collect())
}

/// The bipartite graph between consecutive layers `T_k` and `T_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerGraph {
    pub n: u32,
    pub k: u32,
    pub lower: Vec<u64>,
    pub upper: Vec<u64>,
}

impl LayerGraph {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        check_layer(n, k)?;
        Ok(LayerGraph {
            n,
            k,
            lower: layer(n, k),
            upper: layer(n, k + 1),
        })
    }

    pub fn edges(&self) -> Vec<(u64, u64)> {
        self.lower
            .iter()
            .flat_map(|&a| up_neighbors(self.n, a).map(move |b| (a, b)))
            .collect()
    }

    /// Every lower vertex has degree `n - k` and every upper one `k + 1`.
    pub fn is_biregular(&self) -> bool {
        let mut up_deg: HashMap<u64, u32> = HashMap::new();
        for (a, b) in self.edges() {
            *up_deg.entry(b).or_default() += 1;
            debug_assert_eq!(a.count_ones(), self.k);
        }
        self.lower
            .iter()
            .all(|&a| up_neighbors(self.n, a).count() as u32 == self.n - self.k)
            && self
                .upper
                .iter()
                .all(|b| up_deg.get(b) == Some(&(self.k + 1)))
    }
}

fn check_layer(n: u32, k: u32) -> Result<()> {
    check_n(n, 2, "2..=20")?;
    if k < 1 || k + 2 > n {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            range: "1..=n-2",
        });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Covers {
    /// Every `k`-subset is matched.
    Lower,
    /// Every `(k+1)`-subset is matched.
    Upper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerMatching {
    pub n: u32,
    pub k: u32,
    /// `(k-subset, (k+1)-subset)` pairs with containment.
    pub pairs: Vec<(u64, u64)>,
    pub covers: Covers,
}

impl LayerMatching {
    /// Image of a lower vertex, when matched.
    pub fn up(&self, a: u64) -> Option<u64> {
        self.pairs.iter().find(|p| p.0 == a).map(|p| p.1)
    }

    pub fn down(&self, b: u64) -> Option<u64> {
        self.pairs.iter().find(|p| p.1 == b).map(|p| p.0)
    }
}

/// Matching in the `k`/`k+1` layer graph that saturates `T_k` when
/// `k <= p - 1` and `T_{k+1}` when `k >= p`, where `p = floor(n / 2)`.
pub fn layer_matching(n: u32, k: u32) -> Result<LayerMatching> {
    check_layer(n, k)?;
    let p = n / 2;
    let (covers, pairs) = if k < p {
        let lower = layer(n, k);
        let pairs = saturating_matching(&lower, |a| up_neighbors(n, a), None)
            .expect("Hall condition holds below the middle");
        (Covers::Lower, pairs)
    } else {
        let upper = layer(n, k + 1);
        let pairs = saturating_matching(&upper, |b| down_neighbors(n, b), None)
            .expect("Hall condition holds above the middle")
            .into_iter()
            .map(|(b, a)| (a, b))
            .collect();
        (Covers::Upper, pairs)
    };
    Ok(LayerMatching {
        n,
        k,
        pairs,
        covers,
    })
}

fn check_vertex(n: u32, mask: u64) -> Result<()> {
    if mask == 0 || mask >= full(n) {
        return Err(Error::OutOfRange {
            what: "subset mask",
            value: mask as i64,
            range: "nonempty proper subsets of [n]",
        });
    }
    Ok(())
}

fn comparable(a: u64, b: u64) -> bool {
    a != b && (a & b == a || a & b == b)
}

/// Rewrites an antichain into the middle layer `T_p` without changing its
/// size: lower layers are pushed up along `T_k`-saturating matchings
/// (`k = 1..p-1`), then upper layers pushed down along `T_{k+1}`-saturating
/// ones (`k = n-2` down to `p`).
pub fn normalize_independent_set(n: u32, set: &[u64]) -> Result<Vec<u64>> {
    check_n(n, 2, "2..=20")?;
    for &a in set {
        check_vertex(n, a)?;
    }
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i + 1..] {
            if comparable(a, b) {
                return Err(Error::NotIndependent(a as usize, b as usize));
            }
        }
    }
    let mut current: Vec<u64> = set.to_vec();
    current.sort_unstable();
    current.dedup();
    let p = n / 2;
    for k in 1..p {
        if current.iter().any(|m| m.count_ones() == k) {
            let phi = layer_matching(n, k)?;
            for m in current.iter_mut().filter(|m| m.count_ones() == k) {
                *m = phi.up(*m).expect("lower layer is saturated");
            }
        }
    }
    for k in (p..=n.saturating_sub(2)).rev() {
        if k == 0 {
            continue;
        }
        if current.iter().any(|m| m.count_ones() == k + 1) {
            let phi = layer_matching(n, k)?;
            for m in current.iter_mut().filter(|m| m.count_ones() == k + 1) {
                *m = phi.down(*m).expect("upper layer is saturated");
            }
        }
    }
    current.sort_unstable();
    Ok(current)
}

/// Supersets of `mask` within `[n]` having exactly `size` elements.
fn supersets_of_size(n: u32, mask: u64, size: u32) -> impl Iterator<Item = u64> {
    let free: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
    let extra = size.saturating_sub(mask.count_ones());
    layer(free.len() as u32, extra)
        .into_iter()
        .map(move |pick| {
            free.iter()
                .enumerate()
                .filter(|(j, _)| pick >> j & 1 == 1)
                .fold(mask, |acc, (_, &i)| acc | 1 << i)
        })
}

/// A perfect matching of the Boolean model on `[n]`.
///
/// Odd `n`: each layer `T_k` (`k <= n/2`) is matched onto the
/// complementary-size layer `T_{n-k}` along containment; that bipartite graph
/// is regular, so the matching is perfect. Even `n`: the pair `({1}, [n-1])`
/// is fixed, then the unmatched rest of each layer `T_k` is matched into
/// `T_{k+1}` for `k = 1..n-2`, with `[n-1]` withheld from the last layer.
pub fn perfect_matching(n: u32) -> Result<Vec<(u64, u64)>> {
    check_n(n, 3, "3..=20")?;
    let all = full(n);
    if n % 2 == 1 {
        let mut pairs = Vec::new();
        for k in 1..=n / 2 {
            let lower = layer(n, k);
            pairs.extend(
                saturating_matching(&lower, |a| supersets_of_size(n, a, n - k), None)
                    .expect("regular bipartite graphs have perfect matchings"),
            );
        }
        return Ok(pairs);
    }
    let seed_top = all >> 1;
    let mut pairs = vec![(1u64, seed_top)];
    let mut domain: Vec<u64> = layer(n, 1).into_iter().filter(|&m| m != 1).collect();
    for k in 1..=n - 2 {
        let mut codomain: HashSet<u64> = layer(n, k + 1).into_iter().collect();
        if k == n - 2 {
            codomain.remove(&seed_top);
        }
        let step = saturating_matching(&domain, |a| up_neighbors(n, a), Some(&codomain)).ok_or(
            Error::OutOfRange {
                what: "n",
                value: n as i64,
                range: "sizes where the layer remainders admit a saturating matching",
            },
        )?;
        let image: HashSet<u64> = step.iter().map(|p| p.1).collect();
        pairs.extend(step);
        domain = layer(n, k + 1)
            .into_iter()
            .filter(|m| !image.contains(m) && *m != seed_top)
            .collect();
    }
    debug_assert!(domain.is_empty());
    Ok(pairs)
}

/// `{ {1}, {2, ..., n} }`.
pub fn canonical_dominating_set(n: u32) -> Result<[u64; 2]> {
    check_n(n, 3, "3..=20")?;
    Ok([1, full(n) ^ 1])
}

/// `{1} ⊂ {1,2} ⊂ ... ⊂ {1, ..., n-1}`.
pub fn canonical_maximum_chain(n: u32) -> Result<Vec<u64>> {
    check_n(n, 2, "2..=20")?;
    Ok((1..n).map(|k| (1u64 << k) - 1).collect())
}

/// Checks that `pairs` is a perfect matching of the Boolean model on `[n]`.
pub fn is_boolean_perfect_matching(n: u32, pairs: &[(u64, u64)]) -> bool {
    let mut seen = HashSet::new();
    for &(a, b) in pairs {
        if a == 0 || b == 0 || a >= full(n) || b >= full(n) || !comparable(a, b) {
            return false;
        }
        if !seen.insert(a) || !seen.insert(b) {
            return false;
        }
    }
    seen.len() as u64 == (1u64 << n) - 2
}

/// Closed neighborhoods of `set` cover every nonempty proper subset.
pub fn is_boolean_dominating(n: u32, set: &[u64]) -> bool {
    (1..full(n)).all(|v| set.iter().any(|&d| d == v || comparable(d, v)))
}

/// `C(n, floor(n/2))`, the size bound certified by normalization.
pub fn middle_layer_size(n: u32) -> u64 {
    binomial(n as u64, (n / 2) as u64)
}
