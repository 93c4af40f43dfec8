//! The combined invariant report.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Serialize, Serializer};

use super::distance::{self, Extended};
use super::domination::{self, DEFAULT_DOMINATION_CAP};
use super::exact;
use super::matching;
use super::perfect::{self, Perfectness};
use super::planarity::{self, KuratowskiKind, Planarity};
use super::poset;
use crate::error::Result;
use crate::graph::{GraphMode, InclusionGraph, DEFAULT_MAX_VERTICES};

/// Vertex-count limits for the structure-blind cross-checks.
pub const CLIQUE_CROSS_CHECK_LIMIT: usize = 64;
pub const INDEPENDENCE_CROSS_CHECK_LIMIT: usize = 30;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Selection {
    pub diameter: bool,
    pub girth: bool,
    pub clique: bool,
    pub chromatic: bool,
    pub independence: bool,
    pub matching: bool,
    pub domination: bool,
    pub planarity: bool,
    pub perfect: bool,
    pub flags: bool,
}

impl Selection {
    pub fn all() -> Self {
        Selection {
            diameter: true,
            girth: true,
            clique: true,
            chromatic: true,
            independence: true,
            matching: true,
            domination: true,
            planarity: true,
            perfect: true,
            flags: true,
        }
    }

    pub fn is_empty(&self) -> bool {
        *self == Selection::default()
    }
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub selection: Selection,
    /// Longest hole/antihole searched; `None` picks a size-dependent default.
    pub perfect_max_len: Option<usize>,
    pub domination_cap: usize,
    pub max_vertices: usize,
    pub timings: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            selection: Selection::all(),
            perfect_max_len: None,
            domination_cap: DEFAULT_DOMINATION_CAP,
            max_vertices: DEFAULT_MAX_VERTICES,
            timings: false,
        }
    }
}

/// Exhaustive up to 14 vertices, then progressively shorter searches; 0
/// (no search) beyond 126 vertices, where even 5-antiholes are too costly.
pub fn default_perfect_max_len(vertices: usize) -> usize {
    match vertices {
        0..=14 => vertices.max(5),
        15..=62 => 7,
        63..=126 => 5,
        _ => 0,
    }
}

fn ser_extended<S: Serializer>(v: &Option<Extended>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(Some(d)) => s.serialize_u64(*d as u64),
        _ => s.serialize_str("infinity"),
    }
}

fn ser_perfect<S: Serializer>(
    v: &Option<Option<bool>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(Some(b)) => s.serialize_bool(*b),
        _ => s.serialize_str("unknown"),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<String>,
    pub paths: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HoleWitness {
    pub cycle: Vec<String>,
    pub antihole: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diameter_pair: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_chain: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_antichain: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matching: Option<Vec<[String; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dominating_set: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kuratowski: Option<KuratowskiWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_hole: Option<HoleWitness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub poset: usize,
    pub generic: usize,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantReport {
    pub mode: GraphMode,
    pub n: Option<u32>,
    pub vertices: usize,
    pub edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub connected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<usize>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "ser_extended"
    )]
    pub diameter: Option<Extended>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "ser_extended"
    )]
    pub girth: Option<Extended>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clique_number: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chromatic_number: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub independence_number: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_cover: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matching_number: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perfect_matching: Option<bool>,
    /// Inner `None` (serialized as null) when an isolated vertex exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_cover: Option<Option<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domination_number: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eulerian: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bipartite: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangulated: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub planar: Option<bool>,
    /// Inner `None` (serialized as "unknown") when the bounded search was inconclusive.
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "ser_perfect"
    )]
    pub perfect: Option<Option<bool>>,
    pub witnesses: Witnesses,
    pub cross_checks: BTreeMap<&'static str, CrossCheck>,
    pub methods: BTreeMap<&'static str, &'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<&'static str, f64>>,
}

impl InvariantReport {
    /// Identities every report must satisfy; returns human-readable violations.
    pub fn consistency_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let (Some(a), Some(b)) = (self.independence_number, self.vertex_cover) {
            if a + b != self.vertices {
                out.push(format!("alpha + beta = {} != {}", a + b, self.vertices));
            }
        }
        if let (Some(m), Some(Some(c))) = (self.matching_number, self.edge_cover) {
            if m + c != self.vertices {
                out.push(format!("alpha' + beta' = {} != {}", m + c, self.vertices));
            }
        }
        if let (Some(w), Some(x)) = (self.clique_number, self.chromatic_number) {
            if w > x {
                out.push(format!("omega {w} > chi {x}"));
            }
        }
        for (name, c) in &self.cross_checks {
            if !c.agree {
                out.push(format!(
                    "{name}: poset {} vs generic {}",
                    c.poset, c.generic
                ));
            }
        }
        out
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

struct Clock {
    on: bool,
    times: BTreeMap<&'static str, f64>,
}

impl Clock {
    fn run<T>(&mut self, name: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.on {
            self.times.insert(name, start.elapsed().as_secs_f64() * 1e3);
        }
        out
    }
}

pub fn invariant_report(g: &InclusionGraph, opts: &ReportOptions) -> Result<InvariantReport> {
    let sel = opts.selection;
    let simple = g.to_simple(opts.max_vertices)?;
    let nv = simple.vertex_count();
    let names = |vs: &[usize]| -> Vec<String> { vs.iter().map(|&v| g.vertex_name(v)).collect() };
    let mut clock = Clock {
        on: opts.timings,
        times: BTreeMap::new(),
    };
    let mut r = InvariantReport {
        mode: g.mode(),
        n: g.boolean_n(),
        vertices: nv,
        edges: simple.edge_count(),
        connected: None,
        components: None,
        diameter: None,
        girth: None,
        clique_number: None,
        chromatic_number: None,
        independence_number: None,
        vertex_cover: None,
        matching_number: None,
        perfect_matching: None,
        edge_cover: None,
        domination_number: None,
        eulerian: None,
        bipartite: None,
        triangulated: None,
        planar: None,
        perfect: None,
        witnesses: Witnesses::default(),
        cross_checks: BTreeMap::new(),
        methods: BTreeMap::new(),
        timings_ms: None,
    };

    if sel.diameter || sel.flags {
        let c = clock.run("diameter", || distance::connectivity(&simple));
        r.connected = Some(c.connected());
        r.components = Some(c.components);
        r.diameter = Some(c.diameter);
        r.witnesses.diameter_pair = c.witness.map(|(a, b)| [g.vertex_name(a), g.vertex_name(b)]);
        r.methods.insert("diameter", "all-pairs bfs");
    }
    if sel.girth {
        r.girth = Some(clock.run("girth", || distance::girth(&simple)));
        r.methods.insert("girth", "bfs per vertex");
    }

    let up = if sel.clique || sel.chromatic || sel.independence {
        poset::up_sets(g)
    } else {
        Vec::new()
    };
    if sel.clique {
        let chain = clock.run("clique", || poset::longest_chain(g, &up));
        r.clique_number = Some(chain.length);
        r.witnesses.max_chain = Some(names(&chain.chain));
        r.methods.insert("clique", "longest chain");
        if nv <= CLIQUE_CROSS_CHECK_LIMIT {
            let generic = exact::max_clique(&simple)?.len();
            r.cross_checks
                .insert("clique", cross(chain.length, generic));
        }
    }
    if sel.chromatic {
        let (k, colors) = clock.run("chromatic", || poset::mirsky_coloring(&up));
        r.chromatic_number = Some(k);
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in colors.iter().enumerate() {
            classes[c].push(g.vertex_name(v));
        }
        r.witnesses.coloring = Some(classes);
        r.methods.insert("chromatic", "mirsky layering");
        if nv <= CLIQUE_CROSS_CHECK_LIMIT {
            let generic = exact::chromatic_number(&simple)?.0;
            r.cross_checks.insert("chromatic", cross(k, generic));
        }
    }
    if sel.independence {
        let w = clock.run("independence", || poset::dilworth(&up));
        r.independence_number = Some(w.width);
        r.vertex_cover = Some(nv - w.width);
        r.witnesses.max_antichain = Some(names(&w.antichain));
        r.methods
            .insert("independence", "dilworth via hopcroft-karp");
        if nv <= INDEPENDENCE_CROSS_CHECK_LIMIT {
            let generic = exact::max_independent_set(&simple)?.len();
            r.cross_checks
                .insert("independence", cross(w.width, generic));
        }
    }
    if sel.matching {
        let m = clock.run("matching", || matching::maximum_matching(&simple));
        r.matching_number = Some(m.size);
        r.perfect_matching = Some(m.perfect);
        r.edge_cover = Some(m.edge_cover(&simple));
        r.witnesses.matching = Some(
            m.edges
                .iter()
                .map(|&(a, b)| [g.vertex_name(a), g.vertex_name(b)])
                .collect(),
        );
        r.methods.insert("matching", "edmonds blossom");
    }
    if sel.domination {
        let (k, set) = clock.run("domination", || {
            domination::domination_number(&simple, opts.domination_cap)
        })?;
        r.domination_number = Some(k);
        r.witnesses.dominating_set = Some(names(&set));
        r.methods.insert("domination", "iterative deepening");
    }
    if sel.flags {
        let f = clock.run("flags", || distance::structural_flags(&simple));
        r.eulerian = Some(f.eulerian);
        r.bipartite = Some(f.bipartite);
        r.triangulated = Some(f.triangulated);
        r.methods
            .insert("flags", "degree parity, bfs 2-coloring, triangle scan");
    }
    if sel.planarity {
        let p = clock.run("planarity", || planarity::planarity(&simple));
        r.planar = Some(p.is_planar());
        match p {
            Planarity::Planar { blocks } => {
                r.witnesses.faces = Some(
                    blocks
                        .iter()
                        .flat_map(|b| b.faces.iter().map(|f| names(f)))
                        .collect(),
                );
            }
            Planarity::NonPlanar { witness } => {
                r.witnesses.kuratowski = Some(KuratowskiWitness {
                    kind: witness.kind,
                    branch_vertices: names(&witness.branch_vertices),
                    paths: witness.paths.iter().map(|p| names(p)).collect(),
                });
            }
        }
        r.methods.insert("planarity", "path addition per block");
    }
    if sel.perfect {
        let max_len = opts
            .perfect_max_len
            .unwrap_or_else(|| default_perfect_max_len(nv));
        let p = clock.run("perfect", || perfect::perfectness(&simple, max_len));
        r.perfect = Some(p.as_bool());
        if let Perfectness::Imperfect { cycle, antihole } = &p {
            r.witnesses.odd_hole = Some(HoleWitness {
                cycle: names(cycle),
                antihole: *antihole,
            });
        }
        let method = if max_len >= nv {
            "exhaustive hole search"
        } else if max_len < 5 {
            "not searched"
        } else {
            "bounded hole search"
        };
        r.methods.insert("perfect", method);
    }
    if opts.timings {
        r.timings_ms = Some(clock.times);
    }
    Ok(r)
}

fn cross(poset: usize, generic: usize) -> CrossCheck {
    CrossCheck {
        poset,
        generic,
        agree: poset == generic,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_four_full_report() {
        let g = InclusionGraph::boolean(4).unwrap();
        let r = invariant_report(&g, &ReportOptions::default()).unwrap();
        assert_eq!(r.diameter, Some(Some(3)));
        assert_eq!(r.girth, Some(Some(3)));
        assert_eq!(r.clique_number, Some(3));
        assert_eq!(r.chromatic_number, Some(3));
        assert_eq!(r.independence_number, Some(6));
        assert_eq!(r.domination_number, Some(2));
        assert_eq!(r.eulerian, Some(true));
        assert_eq!(r.planar, Some(true));
        assert_eq!(r.perfect, Some(Some(true)));
        assert!(r.consistency_violations().is_empty());
        let v: serde_json::Value = serde_json::from_str(&r.to_json_string()).unwrap();
        assert_eq!(v["diameter"], 3);
        assert!(v.get("timings_ms").is_none());
    }

    #[test]
    fn disconnected_uses_infinity() {
        let g = InclusionGraph::boolean(2).unwrap();
        let r = invariant_report(&g, &ReportOptions::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json_string()).unwrap();
        assert_eq!(v["diameter"], "infinity");
        assert_eq!(v["girth"], "infinity");
        assert_eq!(v["edge_cover"], serde_json::Value::Null);
        assert_eq!(v["components"], 2);
    }

    #[test]
    fn partial_selection_omits_keys() {
        let g = InclusionGraph::boolean(3).unwrap();
        let opts = ReportOptions {
            selection: Selection {
                girth: true,
                ..Selection::default()
            },
            ..ReportOptions::default()
        };
        let v: serde_json::Value =
            serde_json::from_str(&invariant_report(&g, &opts).unwrap().to_json_string()).unwrap();
        assert_eq!(v["girth"], 6);
        assert!(v.get("clique_number").is_none());
    }
}
