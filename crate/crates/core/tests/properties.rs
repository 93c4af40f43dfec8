use idealgraph::constructions::{middle_layer_size, normalize_independent_set};
use idealgraph::corpus::random_small_semigroup;
use idealgraph::invariants::distance::girth;
use idealgraph::invariants::domination::{domination_number, is_dominating};
use idealgraph::invariants::exact::{chromatic_number, max_clique, max_independent_set};
use idealgraph::invariants::matching::{is_perfect_matching, maximum_matching};
use idealgraph::invariants::planarity::{
    planarity, verify_embedding, verify_kuratowski, Planarity,
};
use idealgraph::invariants::poset::{dilworth, longest_chain, mirsky_coloring, up_sets};
use idealgraph::suite::brute_force_ideals;
use idealgraph::symmetry::{automorphisms_of, is_automorphism};
use idealgraph::{enumerate_left_ideals, CayleyTable, ElementSet, InclusionGraph, SimpleGraph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            SimpleGraph::from_edges(n, &edges)
        })
    })
}

/// Random family of distinct nonempty proper subsets of `[n]`.
fn containment_family() -> impl Strategy<Value = (usize, Vec<u64>)> {
    (2usize..=6).prop_flat_map(|n| {
        let full = (1u64 << n) - 1;
        prop::collection::btree_set(1..full, 1..=12).prop_map(move |s| (n, s.into_iter().collect()))
    })
}

fn family_graph(n: usize, masks: &[u64]) -> InclusionGraph {
    InclusionGraph::from_masks(
        n,
        masks.iter().map(|&w| ElementSet::from_word(n, w)).collect(),
    )
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |b| (0..n).filter(|i| b >> i & 1 == 1).collect())
}

fn brute_matching(g: &SimpleGraph, used: &mut Vec<bool>, from: usize) -> usize {
    let n = g.vertex_count();
    let Some(u) = (from..n).find(|&u| !used[u]) else {
        return 0;
    };
    used[u] = true;
    let mut best = brute_matching(g, used, u + 1);
    for &v in g.neighbors(u) {
        if !used[v] {
            used[v] = true;
            best = best.max(1 + brute_matching(g, used, u + 1));
            used[v] = false;
        }
    }
    used[u] = false;
    best
}

fn is_clique(g: &SimpleGraph, s: &[usize]) -> bool {
    s.iter()
        .enumerate()
        .all(|(i, &a)| s[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

fn brute_chromatic(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    (1..=n.max(1))
        .find(|&k| {
            let mut colour = vec![0usize; n];
            loop {
                if g.edges().iter().all(|&(u, v)| colour[u] != colour[v]) {
                    return true;
                }
                let mut i = 0;
                while i < n && colour[i] + 1 == k {
                    colour[i] = 0;
                    i += 1;
                }
                if i == n {
                    return false;
                }
                colour[i] += 1;
            }
        })
        .unwrap_or(0)
}

fn brute_girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best = None;
    for s in subsets(n).filter(|s| s.len() >= 3) {
        let h = g.induced(&s);
        // Shortest cycles are induced, so look for connected 2-regular induced subgraphs.
        if (0..h.vertex_count()).all(|v| h.degree(v) == 2) && connected(&h) {
            best = Some(best.map_or(s.len(), |b: usize| b.min(s.len())));
        }
    }
    best
}

fn connected(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn blossom_matches_brute_force(g in small_graph(10)) {
        let m = maximum_matching(&g);
        prop_assert_eq!(m.size, brute_matching(&g, &mut vec![false; g.vertex_count()], 0));
        let mut hit = vec![false; g.vertex_count()];
        for &(u, v) in &m.edges {
            prop_assert!(g.has_edge(u, v) && !hit[u] && !hit[v]);
            hit[u] = true;
            hit[v] = true;
        }
        prop_assert_eq!(m.perfect, is_perfect_matching(&g, &m.edges));
    }

    #[test]
    fn exact_solvers_match_brute_force(g in small_graph(9)) {
        let n = g.vertex_count();
        let omega = subsets(n).filter(|s| is_clique(&g, s)).map(|s| s.len()).max().unwrap();
        let comp = g.complement();
        let alpha = subsets(n).filter(|s| is_clique(&comp, s)).map(|s| s.len()).max().unwrap();
        let clique = max_clique(&g).unwrap();
        prop_assert!(is_clique(&g, &clique));
        prop_assert_eq!(clique.len(), omega);
        let indep = max_independent_set(&g).unwrap();
        prop_assert!(is_clique(&comp, &indep));
        prop_assert_eq!(indep.len(), alpha);
        let (chi, colouring) = chromatic_number(&g).unwrap();
        prop_assert_eq!(chi, brute_chromatic(&g));
        prop_assert!(g.edges().iter().all(|&(u, v)| colouring[u] != colouring[v]));
        prop_assert!(colouring.iter().all(|&c| c < chi));
    }

    #[test]
    fn domination_and_girth_match_brute_force(g in small_graph(8)) {
        let n = g.vertex_count();
        let gamma = subsets(n).filter(|s| is_dominating(&g, s)).map(|s| s.len()).min().unwrap();
        let (size, set) = domination_number(&g, 64).unwrap();
        prop_assert_eq!(size, gamma);
        prop_assert!(is_dominating(&g, &set));
        prop_assert_eq!(girth(&g), brute_girth(&g));
    }

    #[test]
    fn planarity_witnesses_check_out(g in small_graph(9)) {
        match planarity(&g) {
            Planarity::Planar { blocks } => {
                prop_assert!(verify_embedding(&blocks));
                let n = g.vertex_count();
                prop_assert!(n < 3 || g.edge_count() <= 3 * n - 6);
            }
            Planarity::NonPlanar { witness } => prop_assert!(verify_kuratowski(&g, &witness)),
        }
    }

    #[test]
    fn automorphism_group_matches_brute_force(g in small_graph(6)) {
        let n = g.vertex_count();
        let count = permutations(n).iter().filter(|p| is_automorphism(&g, p)).count();
        let report = automorphisms_of(&g);
        prop_assert_eq!(report.order, count as u128);
        for a in &report.generators {
            prop_assert!(is_automorphism(&g, &a.perm));
        }
    }

    #[test]
    fn poset_duality_matches_brute_force((n, masks) in containment_family()) {
        let g = family_graph(n, &masks);
        let sg = g.to_simple(usize::MAX).unwrap();
        let v = sg.vertex_count();
        let comp = sg.complement();
        let omega = subsets(v).filter(|s| is_clique(&sg, s)).map(|s| s.len()).max().unwrap();
        let alpha = subsets(v).filter(|s| is_clique(&comp, s)).map(|s| s.len()).max().unwrap();
        let up = up_sets(&g);
        let chain = longest_chain(&g, &up);
        prop_assert_eq!(chain.length, omega);
        prop_assert!(is_clique(&sg, &chain.chain));
        let (colours, layer) = mirsky_coloring(&up);
        prop_assert_eq!(colours, omega);
        prop_assert!(sg.edges().iter().all(|&(a, b)| layer[a] != layer[b]));
        let w = dilworth(&up);
        prop_assert_eq!(w.width, alpha);
        prop_assert!(is_clique(&comp, &w.antichain));
        prop_assert_eq!(w.chains.len(), alpha);
        prop_assert!(w.chains.iter().all(|c| is_clique(&sg, c)));
        prop_assert_eq!(w.chains.iter().map(Vec::len).sum::<usize>(), v);
    }

    #[test]
    fn handshake((n, masks) in containment_family()) {
        let g = family_graph(n, &masks);
        let total: u64 = (0..g.vertex_count()).map(|v| g.vertex_degree(v).unwrap()).sum();
        prop_assert_eq!(total as u128, 2 * g.edge_count());
    }

    #[test]
    fn normalized_antichains_land_in_middle_layer(n in 2u32..=7, picks in prop::collection::vec(1u64..127, 0..40)) {
        let full = (1u64 << n) - 1;
        let mut antichain: Vec<u64> = Vec::new();
        for w in picks.into_iter().map(|w| w % full).filter(|&w| w != 0) {
            if antichain.iter().all(|&a| a & w != a && a & w != w) {
                antichain.push(w);
            }
        }
        let out = normalize_independent_set(n, &antichain).unwrap();
        prop_assert_eq!(out.len(), antichain.len());
        let p = n / 2;
        let mut sorted = out.clone();
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), out.len());
        prop_assert!(out.iter().all(|w| w.count_ones() == p && *w < full));
        prop_assert!(out.len() as u64 <= middle_layer_size(n));
    }

    #[test]
    fn enumeration_matches_brute_force(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_small_semigroup(&mut rng, 12);
        let fam = enumerate_left_ideals(&t, usize::MAX);
        prop_assert!(!fam.truncated);
        let mut got: Vec<ElementSet> = fam.ideals.iter().map(|i| i.members().clone()).collect();
        got.sort_by(|a, b| a.cmp_canonical(b));
        prop_assert_eq!(got, brute_force_ideals(&t));
        for &i in &fam.minimal_indices {
            let m = fam.ideals[i].members();
            prop_assert!(fam.ideals.iter().all(|j| !j.members().is_strict_subset(m)));
        }
    }

    #[test]
    fn table_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_small_semigroup(&mut rng, 16);
        let back = CayleyTable::parse(&t.serialize()).unwrap();
        prop_assert_eq!(back.rows(), t.rows());
        prop_assert!(back.associativity_violation().is_none());
    }
}
