//! Worked examples for each module, checked against hand-computable values.

use idealgraph::constructions::{
    canonical_dominating_set, canonical_maximum_chain, layer_matching, normalize_independent_set,
    perfect_matching, Covers,
};
use idealgraph::invariants::distance::{connectivity, girth, structural_flags};
use idealgraph::invariants::domination::domination_number;
use idealgraph::invariants::matching::maximum_matching;
use idealgraph::invariants::perfect::{perfectness, Perfectness};
use idealgraph::invariants::planarity::{planarity, KuratowskiKind, Planarity};
use idealgraph::invariants::{exact, poset};
use idealgraph::symmetry::{alpha_complement, automorphism_group, phi_sigma, transitivity};
use idealgraph::{
    enumerate_left_ideals, CayleyTable, ElementSet, Error, ExportFormat, InclusionGraph,
    SimpleGraph,
};

fn set(m: usize, items: &[usize]) -> ElementSet {
    ElementSet::from_indices(m, items.iter().copied())
}

fn boolean(n: u32) -> (InclusionGraph, SimpleGraph) {
    let g = InclusionGraph::boolean(n).unwrap();
    let s = g.to_simple(1 << 20).unwrap();
    (g, s)
}

fn generic(t: &CayleyTable) -> (InclusionGraph, SimpleGraph) {
    let g = InclusionGraph::from_family(&enumerate_left_ideals(t, 1 << 20)).unwrap();
    let s = g.to_simple(1 << 20).unwrap();
    (g, s)
}

#[test]
fn tables_parse_and_validate() {
    let one = CayleyTable::parse("1\n0\n").unwrap();
    assert_eq!(one.order(), 1);
    assert!(one.is_completely_simple());
    assert!(CayleyTable::parse("3\n0 1 2\n0 1 2\n0 1 2\n").is_ok());
    // (0*0)*0 = 1*0 = 0 but 0*(0*0) = 0*1 = 1
    match CayleyTable::parse("2\n1 1\n0 0\n") {
        Err(Error::NotAssociative { left, right, .. }) => assert_ne!(left, right),
        other => panic!("expected a witness, got {other:?}"),
    }
    let text = "# c\n2\n0   1\n0 1\nlabels: e f\n";
    let t = CayleyTable::parse(text).unwrap();
    assert_eq!(CayleyTable::parse(&t.serialize()).unwrap(), t);
}

#[test]
fn principal_ideals_and_classes() {
    let rz = CayleyTable::right_zero(3);
    assert_eq!(rz.principal_left_ideal(1), set(3, &[1]));
    assert_eq!(rz.l_classes().len(), 3);
    let null = CayleyTable::null(3);
    assert_eq!(null.principal_left_ideal(0), set(3, &[0]));
    let z3 = CayleyTable::cyclic_group(3);
    assert!((0..3).all(|a| z3.principal_left_ideal(a).is_full()));
    assert_eq!(z3.l_classes().len(), 1);
    assert!(rz.is_completely_simple());
    assert!(!null.is_completely_simple());
}

#[test]
fn ideal_families() {
    assert_eq!(
        enumerate_left_ideals(&CayleyTable::right_zero(3), 100).len(),
        6
    );
    let null = enumerate_left_ideals(&CayleyTable::null(3), 100);
    assert_eq!(null.len(), 3);
    let mins: Vec<&ElementSet> = null.minimal().map(|i| i.members()).collect();
    assert_eq!(mins, vec![&set(3, &[0])]);
    assert!(enumerate_left_ideals(&CayleyTable::cyclic_group(3), 100).is_empty());
    let truncated = enumerate_left_ideals(&CayleyTable::right_zero(6), 10);
    assert!(truncated.truncated);
    assert_eq!(
        InclusionGraph::from_family(&truncated).unwrap_err(),
        Error::TruncatedFamily { cap: 10 }
    );
}

#[test]
fn maximality_via_l_classes() {
    let rz = CayleyTable::right_zero(3);
    assert!(rz.is_maximal_via_lclass(&set(3, &[0, 1])));
    assert!(!rz.is_maximal_via_lclass(&set(3, &[0])));
    assert!(CayleyTable::null(3).is_maximal_via_lclass(&set(3, &[0, 1])));
}

#[test]
fn graph_shapes() {
    let (_, path) = generic(&CayleyTable::null(3));
    assert_eq!((path.vertex_count(), path.edge_count()), (3, 2));
    assert_eq!(generic(&CayleyTable::cyclic_group(3)).0.vertex_count(), 0);
    let (_, c6) = generic(&CayleyTable::right_zero(3));
    assert!((0..6).all(|v| c6.degree(v) == 2));
    assert_eq!(connectivity(&c6).components, 1);

    let (g2, s2) = boolean(2);
    assert_eq!((s2.vertex_count(), s2.edge_count()), (2, 0));
    assert_eq!(g2.vertex_name(0), "I_{1}");
    assert_eq!(boolean(3).1.edge_count(), 6);
    assert_eq!(boolean(4).0.vertex_count(), 14);
    let (g4, _) = boolean(4);
    assert_eq!(g4.vertex_degree(g4.id_of_word(0b0001).unwrap()).unwrap(), 6);
    assert_eq!(g4.vertex_degree(g4.id_of_word(0b0011).unwrap()).unwrap(), 4);
    let (g5, _) = boolean(5);
    assert_eq!(
        g5.vertex_degree(g5.id_of_word(0b00011).unwrap()).unwrap(),
        8
    );
    assert_eq!(
        g5.vertex_degree(1 << 20),
        Err(Error::UnknownVertex(1 << 20))
    );
}

#[test]
fn exports() {
    let json: serde_json::Value = serde_json::from_str(
        &InclusionGraph::boolean(2)
            .unwrap()
            .export(ExportFormat::Json, 100)
            .unwrap(),
    )
    .unwrap();
    assert_eq!(json["vertices"].as_array().unwrap().len(), 2);
    assert!(json["edges"].as_array().unwrap().is_empty());
    let json: serde_json::Value = serde_json::from_str(
        &InclusionGraph::boolean(3)
            .unwrap()
            .export(ExportFormat::Json, 100)
            .unwrap(),
    )
    .unwrap();
    assert_eq!(json["edges"].as_array().unwrap().len(), 6);
    assert_eq!(json["mode"], "boolean");
    let empty = generic(&CayleyTable::cyclic_group(3)).0;
    assert_eq!(
        empty.export(ExportFormat::Dot, 100).unwrap(),
        "graph In {\n}\n"
    );
    assert!(InclusionGraph::boolean(10)
        .unwrap()
        .export(ExportFormat::Dot, 100)
        .is_err());
}

#[test]
fn distances() {
    let c = connectivity(&boolean(2).1);
    assert_eq!((c.components, c.diameter), (2, None));
    let c = connectivity(&boolean(3).1);
    assert_eq!((c.components, c.diameter), (1, Some(3)));
    let c = connectivity(&generic(&CayleyTable::null(3)).1);
    assert_eq!((c.components, c.diameter), (1, Some(2)));
    assert_eq!(girth(&boolean(2).1), None);
    assert_eq!(girth(&boolean(3).1), Some(6));
    assert_eq!(girth(&boolean(4).1), Some(3));
}

#[test]
fn cliques_colorings_antichains() {
    let (g5, _) = boolean(5);
    let chain = poset::longest_chain(&g5, &poset::up_sets(&g5));
    assert_eq!(chain.length, 4);
    let words: Vec<u64> = chain.chain.iter().map(|&v| g5.word(v).unwrap()).collect();
    assert!(words
        .windows(2)
        .all(|w| w[0] & w[1] == w[0] && w[0] != w[1]));

    let (g2, s2) = boolean(2);
    assert_eq!(poset::longest_chain(&g2, &poset::up_sets(&g2)).length, 1);
    assert_eq!(exact::max_clique(&s2).unwrap().len(), 1);

    let monoid = CayleyTable::right_zero(3).with_identity();
    let (gm, _) = generic(&monoid);
    assert_eq!(poset::longest_chain(&gm, &poset::up_sets(&gm)).length, 3);

    let (g4, _) = boolean(4);
    assert_eq!(poset::mirsky_coloring(&poset::up_sets(&g4)).0, 3);
    assert_eq!(exact::chromatic_number(&boolean(3).1).unwrap().0, 2);
    assert_eq!(
        exact::chromatic_number(&generic(&CayleyTable::null(3)).1)
            .unwrap()
            .0,
        2
    );

    let w = poset::dilworth(&poset::up_sets(&g4));
    assert_eq!(w.width, 6);
    assert!(w.antichain.iter().all(|&v| g4.size(v) == 2));
    assert_eq!(poset::dilworth(&poset::up_sets(&g5)).width, 10);
    assert_eq!(poset::dilworth(&poset::up_sets(&g2)).width, 2);
}

#[test]
fn matchings_and_domination() {
    let m3 = maximum_matching(&boolean(3).1);
    assert_eq!((m3.size, m3.perfect), (3, true));
    let m4 = maximum_matching(&boolean(4).1);
    assert_eq!((m4.size, m4.perfect), (7, true));
    let p = maximum_matching(&generic(&CayleyTable::null(3)).1);
    assert_eq!((p.size, p.perfect), (1, false));

    let (g4, s4) = boolean(4);
    let (gamma, _) = domination_number(&s4, 1 << 16).unwrap();
    assert_eq!(gamma, 2);
    let d = canonical_dominating_set(4).unwrap();
    assert_eq!(d, [0b0001, 0b1110]);
    assert!(d.iter().all(|&w| g4.id_of_word(w).is_some()));
    assert_eq!(domination_number(&boolean(2).1, 1 << 16).unwrap().0, 2);
    assert_eq!(
        domination_number(&SimpleGraph::new(1), 1 << 16).unwrap().0,
        1
    );
}

#[test]
fn flags() {
    let f4 = structural_flags(&boolean(4).1);
    assert_eq!(
        (f4.eulerian, f4.bipartite, f4.triangulated),
        (true, false, true)
    );
    let f3 = structural_flags(&boolean(3).1);
    assert_eq!(
        (f3.eulerian, f3.bipartite, f3.triangulated),
        (true, true, false)
    );
    let f2 = structural_flags(&boolean(2).1);
    assert_eq!(
        (f2.eulerian, f2.bipartite, f2.triangulated),
        (false, true, false)
    );
}

#[test]
fn planarity_examples() {
    assert!(planarity(&boolean(4).1).is_planar());
    match planarity(&boolean(5).1) {
        Planarity::NonPlanar { witness } => assert_eq!(witness.kind, KuratowskiKind::K33),
        _ => panic!("boolean(5) is nonplanar"),
    }
    let (g6, s6) = boolean(6);
    assert!(!planarity(&s6).is_planar());
    let chain: Vec<usize> = (1..6)
        .map(|k| g6.id_of_word((1u64 << k) - 1).unwrap())
        .collect();
    let k5 = s6.induced(&chain);
    assert_eq!(k5.edge_count(), 10);
}

#[test]
fn perfectness_examples() {
    assert_eq!(perfectness(&boolean(4).1, 14), Perfectness::Perfect);
    match perfectness(&SimpleGraph::cycle(5), 5) {
        Perfectness::Imperfect { cycle, antihole } => {
            assert_eq!(cycle.len(), 5);
            assert!(!antihole);
        }
        other => panic!("C5 is imperfect, got {other:?}"),
    }
    assert_eq!(
        perfectness(&boolean(5).1, 9),
        Perfectness::Unknown { max_len: 9 }
    );
}

#[test]
fn layer_matchings() {
    let m = layer_matching(4, 1).unwrap();
    assert_eq!((m.pairs.len(), m.covers), (4, Covers::Lower));
    let m = layer_matching(4, 2).unwrap();
    assert_eq!((m.pairs.len(), m.covers), (4, Covers::Upper));
    let m = layer_matching(3, 1).unwrap();
    assert_eq!(m.pairs.len(), 3);
    assert!(layer_matching(4, 3).is_err());
}

#[test]
fn normalization() {
    let out = normalize_independent_set(4, &[0b0001, 0b0010, 0b0100, 0b1000]).unwrap();
    assert_eq!(out.len(), 4);
    assert!(out.iter().all(|w| w.count_ones() == 2));
    let mid: Vec<u64> = (1u64..15).filter(|w| w.count_ones() == 2).collect();
    let mut same = normalize_independent_set(4, &mid).unwrap();
    same.sort_unstable();
    assert_eq!(same, mid);
    let one = normalize_independent_set(5, &[0b01111]).unwrap();
    assert_eq!(one.len(), 1);
    assert_eq!(one[0].count_ones(), 2);
    assert!(matches!(
        normalize_independent_set(4, &[0b0001, 0b0011]),
        Err(Error::NotIndependent(..))
    ));
}

#[test]
fn constructions() {
    // odd n pairs T_k with T_{n-k}; see the notes on the complement pairing
    let p3 = perfect_matching(3).unwrap();
    assert_eq!(p3.len(), 3);
    assert!(p3
        .iter()
        .all(|&(a, b)| a.count_ones() == 1 && b.count_ones() == 2 && a & b == a));
    assert_eq!(perfect_matching(5).unwrap().len(), 15);
    let p4 = perfect_matching(4).unwrap();
    assert_eq!(p4.len(), 7);
    assert!(p4.contains(&(0b0001, 0b0111)));
    assert_eq!(canonical_dominating_set(3).unwrap(), [0b001, 0b110]);
    assert_eq!(canonical_dominating_set(5).unwrap(), [0b00001, 0b11110]);
    assert_eq!(
        canonical_maximum_chain(4).unwrap(),
        vec![0b001, 0b011, 0b111]
    );
    assert_eq!(canonical_maximum_chain(2).unwrap(), vec![0b1]);
    assert_eq!(canonical_maximum_chain(6).unwrap().len(), 5);
}

#[test]
fn symmetry_examples() {
    let (g3, _) = boolean(3);
    assert!(phi_sigma(&g3, &[0, 1, 2]).unwrap().is_identity());
    let swap = phi_sigma(&g3, &[1, 0, 2]).unwrap();
    let image = |w: u64| g3.word(swap.perm[g3.id_of_word(w).unwrap()]).unwrap();
    assert_eq!(
        (image(0b001), image(0b101), image(0b100), image(0b011)),
        (0b010, 0b110, 0b100, 0b011)
    );
    assert!(matches!(
        phi_sigma(&g3, &[0, 0, 1]),
        Err(Error::NotAPermutation { .. })
    ));
    let (g4, _) = boolean(4);
    assert_eq!(phi_sigma(&g4, &[1, 2, 3, 0]).unwrap().order(), 4);

    let alpha = alpha_complement(&g3).unwrap();
    assert_eq!(
        g3.word(alpha.perm[g3.id_of_word(0b001).unwrap()]),
        Some(0b110)
    );
    assert_eq!(alpha.order(), 2);
    let a4 = alpha_complement(&g4).unwrap();
    assert_eq!(
        g4.word(a4.perm[g4.id_of_word(0b0011).unwrap()]),
        Some(0b1100)
    );
    let (g5, _) = boolean(5);
    let a5 = alpha_complement(&g5).unwrap();
    assert!(a5.compose(&a5).is_identity());

    assert_eq!(automorphism_group(&g3, 1 << 12).unwrap().order, 12);
    assert_eq!(automorphism_group(&g4, 1 << 12).unwrap().order, 48);
    assert_eq!(automorphism_group(&boolean(2).0, 1 << 12).unwrap().order, 2);
    assert_eq!(
        automorphism_group(&g4, 1 << 12)
            .unwrap()
            .structure
            .to_string(),
        "S_4 x Z_2"
    );

    let t = |n| {
        let r = transitivity(&boolean(n).0, 1 << 12).unwrap();
        (r.vertex_transitive, r.edge_transitive)
    };
    assert_eq!(
        (t(2), t(3), t(4)),
        ((true, true), (true, true), (false, false))
    );
}
