//! A declarative battery of structural checks over Boolean models, the
//! exhaustive small-semigroup sweep, and corpus directories.
//!
//! Every check id is listed in [`REGISTRY`] and in the checked-in
//! `theorems.manifest`. Checks whose hypothesis does not hold for an instance
//! (for example, anything about ideals on a semigroup without nontrivial left
//! ideals) are reported as vacuous and counted separately.

use std::collections::{BTreeMap, HashSet};
use std::fmt::{self, Display};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::ElementSet;
use crate::combinat::{binomial, factorial};
use crate::constructions::{
    canonical_dominating_set, is_boolean_dominating, is_boolean_perfect_matching, layer_matching,
    normalize_independent_set, perfect_matching, Covers,
};
use crate::corpus::{all_associative_tables, load_corpus_dir, sample_associative, CorpusEntry};
use crate::error::{Error, Result};
use crate::graph::{InclusionGraph, SimpleGraph, DEFAULT_MAX_VERTICES};
use crate::invariants::distance::{connectivity, girth, structural_flags};
use crate::invariants::domination::{domination_number, DEFAULT_DOMINATION_CAP};
use crate::invariants::matching::maximum_matching;
use crate::invariants::perfect::{perfectness, Perfectness};
use crate::invariants::planarity::{planarity, verify_kuratowski, Planarity};
use crate::invariants::report::default_perfect_max_len;
use crate::invariants::{exact, invariant_report, poset, ReportOptions};
use crate::semigroup::{enumerate_left_ideals, CayleyTable, IdealFamily, DEFAULT_IDEAL_CAP};
use crate::symmetry::{
    alpha_complement, automorphism_group, closure_size, phi_sigma, DEFAULT_AUT_CAP,
};

/// Boolean sizes accepted by [`Scope::Boolean`].
pub const BOOLEAN_RANGE: (u32, u32) = (2, 8);
pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_ORDER4_SAMPLES: usize = 1000;
/// Random induced subgraphs per Boolean size in the clique/chromatic check.
pub const INDUCED_SAMPLES: usize = 100;
const INDUCED_MAX_SIZE: usize = 24;
/// Orders up to which ideal enumeration is compared against all subsets.
const BRUTE_FORCE_ORDER: usize = 16;

pub struct CheckInfo {
    pub id: &'static str,
    pub summary: &'static str,
}

/// Every check the suite can emit, in report order.
pub const REGISTRY: &[CheckInfo] = &[
    CheckInfo { id: "order-closed-form", summary: "the Boolean model on [n] has 2^n - 2 vertices" },
    CheckInfo { id: "degree-closed-form", summary: "a k-subset has degree (2^k - 2) + (2^(n-k) - 2)" },
    CheckInfo { id: "disconnected-iff-two-minimal", summary: "In(S) is disconnected iff S is the union of exactly two minimal left ideals" },
    CheckInfo { id: "disconnected-iff-minimal-and-maximal", summary: "In(S) is disconnected iff S has at least two minimal left ideals and every nontrivial left ideal is both minimal and maximal" },
    CheckInfo { id: "disconnected-implies-edgeless", summary: "a disconnected In(S) has no edges" },
    CheckInfo { id: "two-minimal-are-maximal", summary: "if S is the union of two minimal left ideals, both are maximal" },
    CheckInfo { id: "diameter-at-most-three", summary: "a connected In(S) has diameter at most 3" },
    CheckInfo { id: "boolean-diameter-three", summary: "the Boolean model has diameter exactly 3 for n >= 3" },
    CheckInfo { id: "girth-in-three-six-infinity", summary: "the girth of In(S) is 3, 6 or infinity" },
    CheckInfo { id: "boolean-girth-table", summary: "the Boolean model has girth infinity, 6, 3 for n = 2, 3, >= 4" },
    CheckInfo { id: "short-cycle-implies-triangle", summary: "a 4-cycle or 5-cycle forces a triangle" },
    CheckInfo { id: "same-union-not-adjacent", summary: "two unions of the same number of minimal left ideals are not adjacent" },
    CheckInfo { id: "perfect-no-odd-hole", summary: "In(S) has no odd hole or odd antihole" },
    CheckInfo { id: "induced-clique-equals-chromatic", summary: "seeded induced subgraphs satisfy clique number = chromatic number" },
    CheckInfo { id: "clique-number-of-union", summary: "if S is the union of n minimal left ideals, the clique number is n - 1" },
    CheckInfo { id: "clique-n-iff-union-maximal", summary: "the clique number is n iff the union of the n minimal left ideals is a maximal left ideal" },
    CheckInfo { id: "chromatic-number", summary: "the Boolean model has chromatic number n - 1" },
    CheckInfo { id: "eulerian", summary: "the Boolean model is Eulerian iff n >= 3" },
    CheckInfo { id: "bipartite-iff-three", summary: "the connected Boolean model is bipartite iff n = 3" },
    CheckInfo { id: "triangulated", summary: "the Boolean model is triangulated iff n >= 4" },
    CheckInfo { id: "domination-number-two", summary: "the Boolean model has domination number 2, realized by {1}, {2..n}" },
    CheckInfo { id: "planarity-threshold", summary: "if S is the union of n minimal left ideals, In(S) is planar iff n <= 4" },
    CheckInfo { id: "planar-implies-few-minimal", summary: "a planar In(S) comes from S with at most 4 minimal left ideals" },
    CheckInfo { id: "independence-middle-binomial", summary: "the Boolean model has independence number C(n, floor(n/2))" },
    CheckInfo { id: "vertex-cover-complement", summary: "the Boolean model has vertex cover number 2^n - 2 - C(n, floor(n/2))" },
    CheckInfo { id: "independent-set-normalizes", summary: "a maximum independent set normalizes into the middle layer" },
    CheckInfo { id: "layer-matchings-saturate", summary: "each consecutive layer pair has a matching saturating the smaller layer" },
    CheckInfo { id: "perfect-matching-construction", summary: "the explicit matching of the Boolean model is perfect" },
    CheckInfo { id: "matching-number", summary: "the Boolean model has matching number 2^(n-1) - 1" },
    CheckInfo { id: "edge-cover-number", summary: "the Boolean model has edge cover number 2^(n-1) - 1" },
    CheckInfo { id: "automorphism-group-order", summary: "the Boolean model has 2 * n! automorphisms" },
    CheckInfo { id: "automorphisms-decompose", summary: "every automorphism is a relabeling, possibly followed by complementation" },
    CheckInfo { id: "automorphisms-level-action", summary: "every automorphism preserves subset sizes or maps size k to n - k" },
    CheckInfo { id: "relabel-complement-generate", summary: "a transposition, an n-cycle and complementation generate the automorphism group" },
    CheckInfo { id: "complement-commutes", summary: "complementation is an involution commuting with every relabeling" },
    CheckInfo { id: "vertex-transitive-iff-small", summary: "the Boolean model is vertex-transitive iff n is 2 or 3" },
    CheckInfo { id: "edge-transitive-iff-small", summary: "the Boolean model is edge-transitive iff n is 2 or 3" },
    CheckInfo { id: "right-zero-matches-boolean", summary: "In of the right-zero semigroup on n elements equals the Boolean model" },
    CheckInfo { id: "maximal-iff-complement-l-class", summary: "a left ideal K is maximal iff S minus K is an L-class" },
    CheckInfo { id: "minimal-ideals-disjoint", summary: "distinct minimal left ideals are disjoint" },
    CheckInfo { id: "completely-simple-union", summary: "in a completely simple semigroup every nontrivial left ideal is a union of minimal left ideals, and so is S" },
    CheckInfo { id: "ideal-enumeration-brute-force", summary: "union-closure enumeration matches testing every subset" },
    CheckInfo { id: "corpus-expectation", summary: "annotated values in corpus files match the computed invariants" },
];

pub fn registry_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.id).collect()
}

fn registry_index(id: &str) -> usize {
    REGISTRY
        .iter()
        .position(|c| c.id == id)
        .unwrap_or(usize::MAX)
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// A closed form or property stated for the family.
    Stated,
    /// Immediate from the definitions (empty or edgeless graphs, tiny cases).
    Trivial,
    /// Computed from stated values, or supplied by a corpus annotation.
    Derived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Vacuous,
}

impl Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Vacuous => "vacuous",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub instance: String,
    pub expected: String,
    pub provenance: Provenance,
    pub computed: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<TheoremCheck>,
    pub passed: usize,
    pub failed: usize,
    pub vacuous: usize,
}

impl SuiteReport {
    fn from_checks(mut checks: Vec<TheoremCheck>) -> Self {
        // stable: instance order within a check id is preserved
        checks.sort_by_key(|c| registry_index(c.id));
        let count = |v: Verdict| checks.iter().filter(|c| c.verdict == v).count();
        SuiteReport {
            passed: count(Verdict::Pass),
            failed: count(Verdict::Fail),
            vacuous: count(Verdict::Vacuous),
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn ids(&self) -> HashSet<&'static str> {
        self.checks.iter().map(|c| c.id).collect()
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("suite report serializes");
        s.push('\n');
        s
    }

    /// Aligned plain-text table with a summary line.
    pub fn to_table(&self) -> String {
        let header = ["check", "instance", "expected", "computed", "verdict"];
        let rows: Vec<[String; 5]> = self
            .checks
            .iter()
            .map(|c| {
                [
                    c.id.to_string(),
                    c.instance.clone(),
                    c.expected.clone(),
                    c.computed.clone(),
                    c.verdict.to_string(),
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: [&str; 5]| {
            let mut out = String::new();
            for (i, cell) in cells.iter().enumerate() {
                if i + 1 == cells.len() {
                    out.push_str(cell);
                } else {
                    out.push_str(cell);
                    out.extend(std::iter::repeat_n(
                        ' ',
                        widths[i] - cell.chars().count() + 2,
                    ));
                }
            }
            out.push('\n');
            out
        };
        let mut out = line(header);
        for row in &rows {
            out.push_str(&line([&row[0], &row[1], &row[2], &row[3], &row[4]]));
        }
        out.push_str(&format!(
            "{} checks: {} passed, {} failed, {} vacuous\n",
            self.checks.len(),
            self.passed,
            self.failed,
            self.vacuous
        ));
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scope {
    /// Boolean sizes 2..=8 plus the semigroup sweep.
    All,
    Boolean {
        lo: u32,
        hi: u32,
    },
    /// Every associative table of order <= 3 plus seeded order-4 samples.
    Semigroups,
    Corpus(PathBuf),
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub order4_samples: usize,
    pub timings: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: DEFAULT_SEED,
            order4_samples: DEFAULT_ORDER4_SAMPLES,
            timings: false,
        }
    }
}

/// Runs every registered check that applies to `scope`.
pub fn run_suite(scope: &Scope, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut run = Run::new(opts.timings);
    match scope {
        Scope::All => {
            boolean_scope(&mut run, BOOLEAN_RANGE.0, BOOLEAN_RANGE.1, opts.seed)?;
            semigroup_sweep(&mut run, opts)?;
        }
        Scope::Boolean { lo, hi } => boolean_scope(&mut run, *lo, *hi, opts.seed)?,
        Scope::Semigroups => semigroup_sweep(&mut run, opts)?,
        Scope::Corpus(dir) => corpus_scope(&mut run, dir)?,
    }
    Ok(SuiteReport::from_checks(run.checks))
}

struct Outcome {
    expected: String,
    provenance: Provenance,
    computed: String,
    verdict: Verdict,
    note: Option<String>,
}

impl Outcome {
    fn equal<T: PartialEq + Display>(expected: T, computed: T, provenance: Provenance) -> Self {
        let verdict = if expected == computed {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Outcome {
            expected: expected.to_string(),
            provenance,
            computed: computed.to_string(),
            verdict,
            note: None,
        }
    }

    fn holds(
        expected: impl Into<String>,
        ok: bool,
        computed: impl Into<String>,
        provenance: Provenance,
    ) -> Self {
        Outcome {
            expected: expected.into(),
            provenance,
            computed: computed.into(),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            note: None,
        }
    }

    fn vacuous(reason: impl Into<String>) -> Self {
        let reason = reason.into();
        Outcome {
            expected: "-".into(),
            provenance: Provenance::Trivial,
            computed: format!("vacuous: {reason}"),
            verdict: Verdict::Vacuous,
            note: None,
        }
    }

    fn error(e: Error) -> Self {
        Outcome {
            expected: "-".into(),
            provenance: Provenance::Derived,
            computed: format!("error: {e}"),
            verdict: Verdict::Fail,
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

struct Run {
    checks: Vec<TheoremCheck>,
    timings: bool,
}

impl Run {
    fn new(timings: bool) -> Self {
        Run {
            checks: Vec::new(),
            timings,
        }
    }

    fn check(&mut self, id: &'static str, instance: &str, f: impl FnOnce() -> Result<Outcome>) {
        debug_assert!(registry_index(id) != usize::MAX, "unregistered check {id}");
        let start = Instant::now();
        let o = f().unwrap_or_else(Outcome::error);
        let elapsed = start.elapsed().as_secs_f64() * 1e3;
        self.checks.push(TheoremCheck {
            id,
            instance: instance.to_string(),
            expected: o.expected,
            provenance: o.provenance,
            computed: o.computed,
            verdict: o.verdict,
            note: o.note,
            elapsed_ms: self.timings.then_some(elapsed),
        });
    }
}

fn ext(v: Option<usize>) -> String {
    v.map_or_else(|| "infinity".into(), |d| d.to_string())
}

/// Facts about `S` that the graph-level checks consult, independent of how
/// the graph was built.
struct Facts {
    /// Number of minimal left ideals of `S`.
    minimal: usize,
    /// `S` is the union of its minimal left ideals.
    union_is_s: bool,
    /// The vertex of the union of all minimal left ideals, when nontrivial.
    union_vertex: Option<usize>,
    /// For each vertex, the number of minimal left ideals it is a union of.
    layer: Vec<Option<usize>>,
    /// At least two minimal left ideals and every nontrivial left ideal is
    /// both minimal and maximal.
    all_min_max: bool,
}

impl Facts {
    fn boolean(g: &InclusionGraph, n: u32) -> Self {
        Facts {
            minimal: n as usize,
            union_is_s: true,
            union_vertex: None,
            layer: (0..g.vertex_count()).map(|v| Some(g.size(v))).collect(),
            all_min_max: n == 2,
        }
    }

    fn from_table(t: &CayleyTable, family: &IdealFamily, g: &InclusionGraph) -> Self {
        let mins = t.minimal_left_ideals();
        let union = mins
            .iter()
            .fold(ElementSet::empty(t.order()), |acc, m| acc.union(m));
        let layer = (0..g.vertex_count())
            .map(|v| {
                let mask = g.mask(v);
                let inside: Vec<&ElementSet> = mins.iter().filter(|m| m.is_subset(&mask)).collect();
                let covered = inside
                    .iter()
                    .fold(ElementSet::empty(t.order()), |acc, m| acc.union(m));
                (covered == mask).then_some(inside.len())
            })
            .collect();
        let all_min_max = mins.len() >= 2
            && family.len() == family.minimal_indices.len()
            && family.len() == family.maximal_indices.len();
        Facts {
            minimal: mins.len(),
            union_is_s: union.is_full(),
            union_vertex: g.id_of(&union),
            layer,
            all_min_max,
        }
    }
}

/// Checks stated for arbitrary semigroups, evaluated on a graph plus facts.
fn graph_checks(run: &mut Run, inst: &str, g: &InclusionGraph, s: &SimpleGraph, f: &Facts) {
    let empty = s.vertex_count() == 0;
    let conn = connectivity(s);
    let disconnected = conn.components > 1;
    let two_min = f.minimal == 2 && f.union_is_s;

    run.check("disconnected-iff-two-minimal", inst, || {
        Ok(Outcome::holds(
            format!("disconnected = {two_min}"),
            disconnected == two_min,
            format!(
                "disconnected = {disconnected} ({} components)",
                conn.components
            ),
            Provenance::Stated,
        ))
    });
    run.check("disconnected-iff-minimal-and-maximal", inst, || {
        Ok(Outcome::holds(
            format!("disconnected = {}", f.all_min_max),
            disconnected == f.all_min_max,
            format!("disconnected = {disconnected}"),
            Provenance::Stated,
        ))
    });
    run.check("disconnected-implies-edgeless", inst, || {
        if !disconnected {
            return Ok(Outcome::vacuous("connected"));
        }
        Ok(Outcome::equal(0, s.edge_count(), Provenance::Stated))
    });
    run.check("diameter-at-most-three", inst, || {
        if empty {
            return Ok(Outcome::vacuous("empty graph"));
        }
        if disconnected {
            return Ok(Outcome::vacuous("disconnected"));
        }
        let d = conn.diameter.unwrap_or(0);
        Ok(Outcome::holds(
            "<= 3",
            d <= 3,
            d.to_string(),
            Provenance::Stated,
        ))
    });
    let gi = girth(s);
    run.check("girth-in-three-six-infinity", inst, || {
        if empty {
            return Ok(Outcome::vacuous("empty graph"));
        }
        let ok = matches!(gi, None | Some(3) | Some(6));
        Ok(Outcome::holds(
            "3, 6 or infinity",
            ok,
            ext(gi),
            Provenance::Stated,
        ))
    });
    run.check("short-cycle-implies-triangle", inst, || {
        if empty {
            return Ok(Outcome::vacuous("empty graph"));
        }
        // without a triangle the girth is at least 4, so a 4- or 5-cycle
        // exists exactly when the girth is 4 or 5
        let ok = !matches!(gi, Some(4) | Some(5));
        Ok(Outcome::holds(
            "no 4- or 5-cycle without a triangle",
            ok,
            format!("girth {}", ext(gi)),
            Provenance::Stated,
        ))
    });
    run.check("same-union-not-adjacent", inst, || {
        if empty {
            return Ok(Outcome::vacuous("empty graph"));
        }
        let bad = s
            .edges()
            .into_iter()
            .find(|&(u, v)| f.layer[u].is_some() && f.layer[u] == f.layer[v]);
        Ok(match bad {
            None => Outcome::holds("no such edge", true, "no such edge", Provenance::Stated),
            Some((u, v)) => Outcome::holds(
                "no such edge",
                false,
                format!("{} ~ {}", g.vertex_name(u), g.vertex_name(v)),
                Provenance::Stated,
            ),
        })
    });
    run.check("perfect-no-odd-hole", inst, || {
        if empty {
            return Ok(Outcome::vacuous("empty graph"));
        }
        let max_len = default_perfect_max_len(s.vertex_count()).max(5);
        let exhaustive = max_len >= s.vertex_count();
        Ok(match perfectness(s, max_len) {
            Perfectness::Imperfect { cycle, antihole } => {
                let names: Vec<String> = cycle.iter().map(|&v| g.vertex_name(v)).collect();
                let kind = if antihole { "antihole" } else { "hole" };
                Outcome::holds(
                    "no odd hole or antihole",
                    false,
                    format!("odd {kind} {}", names.join(" ")),
                    Provenance::Stated,
                )
            }
            _ if exhaustive => Outcome::holds(
                "no odd hole or antihole",
                true,
                "perfect (exhaustive)",
                Provenance::Stated,
            ),
            _ => Outcome::holds(
                "no odd hole or antihole",
                true,
                format!("none up to length {max_len}"),
                Provenance::Stated,
            )
            .with_note("bounded search"),
        })
    });

    let up = poset::up_sets(g);
    let omega = poset::longest_chain(g, &up).length;
    run.check("clique-number-of-union", inst, || {
        if empty {
            return Ok(Outcome::vacuous("empty graph"));
        }
        if !f.union_is_s {
            return Ok(Outcome::vacuous("S is not a union of minimal left ideals"));
        }
        let expected = f.minimal - 1;
        if s.vertex_count() <= exact::BITSET_LIMIT {
            let generic = exact::max_clique(s)?.len();
            return Ok(Outcome::holds(
                expected.to_string(),
                omega == expected && generic == expected,
                format!("{omega} (chain), {generic} (generic)"),
                Provenance::Stated,
            ));
        }
        Ok(Outcome::equal(expected, omega, Provenance::Stated))
    });
    run.check("clique-n-iff-union-maximal", inst, || {
        if empty {
            return Ok(Outcome::vacuous("empty graph"));
        }
        let union_maximal = f.union_vertex.is_some_and(|v| g.above(v).is_empty());
        let hits = omega == f.minimal;
        Ok(Outcome::holds(
            format!("omega = n is {union_maximal}"),
            hits == union_maximal,
            format!("omega = {omega}, n = {}", f.minimal),
            Provenance::Stated,
        ))
    });

    let plan = planarity(s);
    run.check("planar-implies-few-minimal", inst, || {
        if empty {
            return Ok(Outcome::vacuous("empty graph"));
        }
        if !plan.is_planar() {
            return Ok(Outcome::vacuous("nonplanar"));
        }
        Ok(Outcome::holds(
            "<= 4 minimal left ideals",
            f.minimal <= 4,
            format!("{} minimal left ideals", f.minimal),
            Provenance::Stated,
        ))
    });
    run.check("planarity-threshold", inst, || {
        if empty {
            return Ok(Outcome::vacuous("empty graph"));
        }
        if !f.union_is_s {
            return Ok(Outcome::vacuous("S is not a union of minimal left ideals"));
        }
        let expected = f.minimal <= 4;
        Ok(match &plan {
            Planarity::Planar { .. } => Outcome::equal(
                label_planar(expected),
                label_planar(true),
                Provenance::Stated,
            ),
            Planarity::NonPlanar { witness } => {
                let verified = verify_kuratowski(s, witness);
                Outcome::holds(
                    label_planar(expected),
                    !expected && verified,
                    format!(
                        "nonplanar ({:?} witness{})",
                        witness.kind,
                        if verified { "" } else { " INVALID" }
                    ),
                    Provenance::Stated,
                )
            }
        })
    });
}

fn label_planar(p: bool) -> &'static str {
    if p {
        "planar"
    } else {
        "nonplanar"
    }
}

/// Checks stated for the semigroup itself (ideals, L-classes).
fn semigroup_checks(run: &mut Run, inst: &str, t: &CayleyTable, family: &IdealFamily) {
    let mins = t.minimal_left_ideals();
    run.check("two-minimal-are-maximal", inst, || {
        let union = mins
            .iter()
            .fold(ElementSet::empty(t.order()), |acc, m| acc.union(m));
        if mins.len() != 2 || !union.is_full() {
            return Ok(Outcome::vacuous(
                "S is not the union of two minimal left ideals",
            ));
        }
        let maximal: Vec<&ElementSet> = family.maximal().map(|i| i.members()).collect();
        let both = mins.iter().all(|m| maximal.contains(&m));
        Ok(Outcome::holds(
            "both maximal",
            both,
            if both {
                "both maximal"
            } else {
                "not both maximal"
            },
            Provenance::Stated,
        ))
    });
    run.check("maximal-iff-complement-l-class", inst, || {
        if family.is_empty() {
            return Ok(Outcome::vacuous("no nontrivial left ideals"));
        }
        let maximal: HashSet<usize> = family.maximal_indices.iter().copied().collect();
        let bad = family
            .ideals
            .iter()
            .enumerate()
            .find(|(i, k)| maximal.contains(i) != t.is_maximal_via_lclass(k.members()));
        Ok(match bad {
            None => Outcome::holds(
                "agree on every ideal",
                true,
                format!("agree on {} ideals", family.len()),
                Provenance::Stated,
            ),
            Some((_, k)) => Outcome::holds(
                "agree on every ideal",
                false,
                format!("disagree on {}", k.members().to_decimal()),
                Provenance::Stated,
            ),
        })
    });
    run.check("minimal-ideals-disjoint", inst, || {
        if mins.len() < 2 {
            return Ok(Outcome::vacuous("fewer than two minimal left ideals"));
        }
        let ok = mins
            .iter()
            .enumerate()
            .all(|(i, a)| mins[i + 1..].iter().all(|b| a.is_disjoint(b)));
        Ok(Outcome::holds(
            "pairwise disjoint",
            ok,
            format!("{} minimal left ideals", mins.len()),
            Provenance::Stated,
        ))
    });
    run.check("completely-simple-union", inst, || {
        if !t.is_completely_simple() {
            return Ok(Outcome::vacuous("not completely simple"));
        }
        let union = mins
            .iter()
            .fold(ElementSet::empty(t.order()), |acc, m| acc.union(m));
        let every = family.ideals.iter().all(|k| {
            let covered = mins
                .iter()
                .filter(|m| m.is_subset(k.members()))
                .fold(ElementSet::empty(t.order()), |acc, m| acc.union(m));
            &covered == k.members()
        });
        Ok(Outcome::holds(
            "S and every ideal are unions of minimal ones",
            union.is_full() && every,
            format!("S covered: {}, ideals covered: {every}", union.is_full()),
            Provenance::Stated,
        ))
    });
    run.check("ideal-enumeration-brute-force", inst, || {
        let m = t.order();
        if m > BRUTE_FORCE_ORDER {
            return Ok(Outcome::vacuous(format!(
                "order {m} exceeds {BRUTE_FORCE_ORDER}"
            )));
        }
        let brute = brute_force_ideals(t);
        let enumerated: Vec<ElementSet> = {
            let mut v: Vec<ElementSet> =
                family.ideals.iter().map(|i| i.members().clone()).collect();
            v.sort_by(|a, b| a.cmp_canonical(b));
            v
        };
        Ok(Outcome::holds(
            format!("{} ideals", brute.len()),
            brute == enumerated && !family.truncated,
            format!("{} ideals", enumerated.len()),
            Provenance::Trivial,
        ))
    });
}

/// Nontrivial left ideals by testing every subset, canonically sorted.
pub fn brute_force_ideals(t: &CayleyTable) -> Vec<ElementSet> {
    let m = t.order();
    let mut out: Vec<ElementSet> = (1u64..(1u64 << m) - 1)
        .map(|w| ElementSet::from_word(m, w))
        .filter(|s| t.is_left_ideal(s))
        .collect();
    out.sort_by(|a, b| a.cmp_canonical(b));
    out
}

/// Samples `samples` induced subgraphs of at most `max_size` vertices and
/// returns the first whose clique and chromatic numbers differ.
pub fn induced_clique_chromatic_counterexample(
    g: &SimpleGraph,
    samples: usize,
    max_size: usize,
    seed: u64,
) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = max_size.min(n).min(exact::BITSET_LIMIT);
    for _ in 0..samples {
        let size = rng.gen_range(1..=cap);
        let mut vs = sample(&mut rng, n, size).into_vec();
        vs.sort_unstable();
        let h = g.induced(&vs);
        if exact::max_clique(&h)?.len() != exact::chromatic_number(&h)?.0 {
            return Ok(Some(vs));
        }
    }
    Ok(None)
}

fn boolean_scope(run: &mut Run, lo: u32, hi: u32, seed: u64) -> Result<()> {
    if lo < BOOLEAN_RANGE.0 || hi > BOOLEAN_RANGE.1 || lo > hi {
        return Err(Error::OutOfRange {
            what: "boolean range",
            value: if lo < BOOLEAN_RANGE.0 || lo > hi {
                lo as i64
            } else {
                hi as i64
            },
            range: "2..=8",
        });
    }
    for n in lo..=hi {
        let inst = format!("boolean n={n}");
        let g = InclusionGraph::boolean(n)?;
        let s = g.to_simple(DEFAULT_MAX_VERTICES)?;
        graph_checks(run, &inst, &g, &s, &Facts::boolean(&g, n));
        let rz = CayleyTable::right_zero(n as usize);
        let family = enumerate_left_ideals(&rz, DEFAULT_IDEAL_CAP);
        semigroup_checks(run, &format!("right-zero n={n}"), &rz, &family);
        boolean_checks(run, &inst, n, &g, &s, &family, seed);
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn boolean_checks(
    run: &mut Run,
    inst: &str,
    n: u32,
    g: &InclusionGraph,
    s: &SimpleGraph,
    rz_family: &IdealFamily,
    seed: u64,
) {
    let vcount = s.vertex_count();
    let mid = binomial(n as u64, (n / 2) as u64) as usize;
    let half = (1usize << (n - 1)) - 1;
    let word = |v: usize| g.word(v).expect("Boolean vertex");

    run.check("order-closed-form", inst, || {
        Ok(Outcome::equal(
            (1usize << n) - 2,
            vcount,
            Provenance::Stated,
        ))
    });
    run.check("degree-closed-form", inst, || {
        let bad = (0..vcount).find(|&v| {
            let k = g.size(v) as u32;
            s.degree(v) != ((1usize << k) - 2) + ((1usize << (n - k)) - 2)
        });
        Ok(match bad {
            None => Outcome::holds(
                "(2^k - 2) + (2^(n-k) - 2)",
                true,
                "all vertices match",
                Provenance::Stated,
            ),
            Some(v) => Outcome::holds(
                "(2^k - 2) + (2^(n-k) - 2)",
                false,
                format!("{} has degree {}", g.vertex_name(v), s.degree(v)),
                Provenance::Stated,
            ),
        })
    });
    let conn = connectivity(s);
    run.check("boolean-diameter-three", inst, || {
        Ok(if n == 2 {
            Outcome::equal(
                "infinity".to_string(),
                ext(conn.diameter),
                Provenance::Trivial,
            )
        } else {
            Outcome::equal("3".to_string(), ext(conn.diameter), Provenance::Stated)
        })
    });
    run.check("boolean-girth-table", inst, || {
        let expected = match n {
            2 => None,
            3 => Some(6),
            _ => Some(3),
        };
        Ok(Outcome::equal(
            ext(expected),
            ext(girth(s)),
            Provenance::Stated,
        ))
    });
    run.check("induced-clique-equals-chromatic", inst, || {
        let bad = induced_clique_chromatic_counterexample(
            s,
            INDUCED_SAMPLES,
            INDUCED_MAX_SIZE,
            seed ^ n as u64,
        )?;
        Ok(match bad {
            None => Outcome::holds(
                "equal on every sample",
                true,
                format!("{INDUCED_SAMPLES} samples agree"),
                Provenance::Derived,
            ),
            Some(vs) => Outcome::holds(
                "equal on every sample",
                false,
                format!("differs on {vs:?}"),
                Provenance::Derived,
            ),
        })
    });
    let up = poset::up_sets(g);
    run.check("chromatic-number", inst, || {
        let (chi, _) = poset::mirsky_coloring(&up);
        let expected = n as usize - 1;
        if vcount <= exact::BITSET_LIMIT {
            let (generic, _) = exact::chromatic_number(s)?;
            return Ok(Outcome::holds(
                expected.to_string(),
                chi == expected && generic == expected,
                format!("{chi} (layers), {generic} (generic)"),
                Provenance::Stated,
            ));
        }
        Ok(Outcome::equal(expected, chi, Provenance::Stated))
    });
    let flags = structural_flags(s);
    run.check("eulerian", inst, || {
        Ok(Outcome::equal(
            n >= 3,
            flags.eulerian,
            if n >= 3 {
                Provenance::Stated
            } else {
                Provenance::Trivial
            },
        ))
    });
    run.check("bipartite-iff-three", inst, || {
        Ok(if n == 2 {
            Outcome::equal(true, flags.bipartite, Provenance::Trivial).with_note("edgeless graph")
        } else {
            Outcome::equal(n == 3, flags.bipartite, Provenance::Stated)
        })
    });
    run.check("triangulated", inst, || {
        Ok(Outcome::equal(
            n >= 4,
            flags.triangulated,
            Provenance::Stated,
        ))
    });
    run.check("domination-number-two", inst, || {
        let (gamma, _) = domination_number(s, DEFAULT_DOMINATION_CAP)?;
        let canonical = if n >= 3 {
            canonical_dominating_set(n)?.to_vec()
        } else {
            vec![1, 2]
        };
        let dominating = is_boolean_dominating(n, &canonical);
        Ok(Outcome::holds(
            "2",
            gamma == 2 && dominating,
            format!("{gamma}, canonical set dominating: {dominating}"),
            Provenance::Stated,
        ))
    });
    let width = poset::dilworth(&up);
    run.check("independence-middle-binomial", inst, || {
        if vcount <= 30 {
            let generic = exact::max_independent_set(s)?.len();
            return Ok(Outcome::holds(
                mid.to_string(),
                width.width == mid && generic == mid,
                format!("{} (Dilworth), {generic} (generic)", width.width),
                Provenance::Stated,
            ));
        }
        Ok(Outcome::equal(mid, width.width, Provenance::Stated))
    });
    run.check("vertex-cover-complement", inst, || {
        Ok(Outcome::equal(
            vcount - mid,
            vcount - width.width,
            Provenance::Stated,
        ))
    });
    run.check("independent-set-normalizes", inst, || {
        let words: Vec<u64> = width.antichain.iter().map(|&v| word(v)).collect();
        let normal = normalize_independent_set(n, &words)?;
        let p = n / 2;
        let in_middle = normal.iter().all(|w| w.count_ones() == p);
        let distinct = normal.iter().collect::<HashSet<_>>().len() == normal.len();
        Ok(Outcome::holds(
            format!("{} middle-layer sets", words.len()),
            in_middle && distinct && normal.len() == words.len(),
            format!("{} sets, all in layer {p}: {in_middle}", normal.len()),
            Provenance::Stated,
        ))
    });
    run.check("layer-matchings-saturate", inst, || {
        if n < 3 {
            return Ok(Outcome::vacuous("no consecutive layer pair"));
        }
        for k in 1..=n - 2 {
            let m = layer_matching(n, k)?;
            let side = match m.covers {
                Covers::Lower => binomial(n as u64, k as u64),
                Covers::Upper => binomial(n as u64, k as u64 + 1),
            } as usize;
            let ok = m.pairs.len() == side
                && m.pairs
                    .iter()
                    .all(|&(a, b)| a & b == a && b.count_ones() == k + 1)
                && m.pairs.iter().map(|p| p.0).collect::<HashSet<_>>().len() == side
                && m.pairs.iter().map(|p| p.1).collect::<HashSet<_>>().len() == side;
            if !ok {
                return Ok(Outcome::holds(
                    "every k saturated",
                    false,
                    format!("k = {k} fails"),
                    Provenance::Stated,
                ));
            }
        }
        Ok(Outcome::holds(
            "every k saturated",
            true,
            format!("k = 1..{} saturated", n - 2),
            Provenance::Stated,
        ))
    });
    let blossom = maximum_matching(s);
    run.check("perfect-matching-construction", inst, || {
        if n == 2 {
            return Ok(Outcome::equal(false, blossom.perfect, Provenance::Trivial)
                .with_note("edgeless graph"));
        }
        let pairs = perfect_matching(n)?;
        let ok = is_boolean_perfect_matching(n, &pairs);
        Ok(Outcome::holds(
            "perfect",
            ok,
            format!("{} pairs, perfect: {ok}", pairs.len()),
            Provenance::Stated,
        ))
    });
    run.check("matching-number", inst, || {
        Ok(if n == 2 {
            Outcome::equal(0, blossom.size, Provenance::Trivial)
        } else {
            Outcome::equal(half, blossom.size, Provenance::Stated)
        })
    });
    run.check("edge-cover-number", inst, || {
        let cover = blossom
            .edge_cover(s)
            .map_or_else(|| "undefined".into(), |c| c.to_string());
        Ok(if n == 2 {
            Outcome::equal("undefined".to_string(), cover, Provenance::Trivial)
        } else {
            Outcome::equal(half.to_string(), cover, Provenance::Stated)
        })
    });

    let aut = automorphism_group(g, DEFAULT_AUT_CAP);
    let aut = match aut {
        Ok(a) => a,
        Err(e) => {
            run.check("automorphism-group-order", inst, || Err(e));
            return;
        }
    };
    run.check("automorphism-group-order", inst, || {
        Ok(if n == 2 {
            Outcome::equal(2u128, aut.order, Provenance::Trivial).with_note("two isolated vertices")
        } else {
            Outcome::equal(2 * factorial(n as u64), aut.order, Provenance::Stated)
        })
    });
    run.check("automorphisms-decompose", inst, || {
        let ok = aut.generators.iter().all(|a| a.decomposition.is_some());
        Ok(Outcome::holds(
            "every generator",
            ok,
            format!("{} generators, all decompose: {ok}", aut.generators.len()),
            Provenance::Stated,
        ))
    });
    run.check("automorphisms-level-action", inst, || {
        let ok = aut.generators.iter().all(|a| {
            let keep = (0..vcount).all(|v| g.size(a.perm[v]) == g.size(v));
            let flip = (0..vcount).all(|v| g.size(a.perm[v]) == n as usize - g.size(v));
            keep || flip
        });
        Ok(Outcome::holds(
            "size k to k or n - k",
            ok,
            if ok { "every generator" } else { "violated" },
            Provenance::Stated,
        ))
    });
    run.check("relabel-complement-generate", inst, || {
        let mut transposition: Vec<usize> = (0..n as usize).collect();
        transposition.swap(0, 1);
        let cycle: Vec<usize> = (0..n as usize).map(|i| (i + 1) % n as usize).collect();
        let gens = vec![
            phi_sigma(g, &transposition)?.perm,
            phi_sigma(g, &cycle)?.perm,
            alpha_complement(g)?.perm,
        ];
        let size = closure_size(vcount, &gens, aut.order as usize + 1);
        Ok(Outcome::equal(
            aut.order.to_string(),
            size.map_or_else(|| "too large".into(), |k| k.to_string()),
            Provenance::Stated,
        ))
    });
    run.check("complement-commutes", inst, || {
        let alpha = alpha_complement(g)?;
        let involution = alpha.compose(&alpha).is_identity();
        let mut transposition: Vec<usize> = (0..n as usize).collect();
        transposition.swap(0, 1);
        let cycle: Vec<usize> = (0..n as usize).map(|i| (i + 1) % n as usize).collect();
        let mut commutes = true;
        for sigma in [transposition, cycle] {
            let phi = phi_sigma(g, &sigma)?;
            commutes &= phi.compose(&alpha).perm == alpha.compose(&phi).perm;
        }
        Ok(Outcome::holds(
            "involution, commutes",
            involution && commutes,
            format!("involution: {involution}, commutes: {commutes}"),
            Provenance::Stated,
        ))
    });
    let vertex_orbits = aut.orbits(vcount).len();
    let edge_orbits = aut.edge_orbits(s).len();
    let small = n <= 3;
    run.check("vertex-transitive-iff-small", inst, || {
        Ok(
            Outcome::equal(small, vertex_orbits <= 1, Provenance::Stated)
                .with_note(format!("{vertex_orbits} vertex orbits")),
        )
    });
    run.check("edge-transitive-iff-small", inst, || {
        // the edgeless n = 2 graph is edge-transitive vacuously: no edge orbits
        Ok(Outcome::equal(small, edge_orbits <= 1, Provenance::Stated)
            .with_note(format!("{edge_orbits} edge orbits")))
    });
    run.check("right-zero-matches-boolean", inst, || {
        let generic = InclusionGraph::from_family(rz_family)?;
        let ok = generic.vertex_count() == vcount
            && (0..vcount).all(|v| {
                generic.mask(v).as_word() == Some(word(v)) && generic.neighbors(v) == g.neighbors(v)
            });
        Ok(Outcome::holds(
            "identical vertex and edge lists",
            ok,
            format!("{} vertices, identical: {ok}", generic.vertex_count()),
            Provenance::Trivial,
        ))
    });
}

/// Builds the graph and facts of a table and runs the general checks.
fn table_checks(run: &mut Run, inst: &str, t: &CayleyTable) {
    let family = enumerate_left_ideals(t, DEFAULT_IDEAL_CAP);
    match InclusionGraph::from_family(&family)
        .and_then(|g| Ok((g.to_simple(DEFAULT_MAX_VERTICES)?, g)))
    {
        Ok((s, g)) => {
            let facts = Facts::from_table(t, &family, &g);
            graph_checks(run, inst, &g, &s, &facts);
        }
        Err(e) => run.check("disconnected-iff-two-minimal", inst, || Err(e)),
    }
    semigroup_checks(run, inst, t, &family);
}

/// Folds per-table outcomes into one row per check id and batch.
fn aggregate(run: &mut Run, batch: &str, sub: Run) {
    let mut by_id: BTreeMap<usize, Vec<TheoremCheck>> = BTreeMap::new();
    for c in sub.checks {
        by_id.entry(registry_index(c.id)).or_default().push(c);
    }
    for (_, rows) in by_id {
        let id = rows[0].id;
        let total = rows.len();
        let failed: Vec<&TheoremCheck> =
            rows.iter().filter(|c| c.verdict == Verdict::Fail).collect();
        let vacuous = rows
            .iter()
            .filter(|c| c.verdict == Verdict::Vacuous)
            .count();
        let verdict = if !failed.is_empty() {
            Verdict::Fail
        } else if vacuous == total {
            Verdict::Vacuous
        } else {
            Verdict::Pass
        };
        let computed = match failed.first() {
            None => format!(
                "{} held, {vacuous} vacuous, 0 counterexamples",
                total - vacuous
            ),
            Some(c) => format!(
                "{} counterexamples; first {}: {}",
                failed.len(),
                c.instance,
                c.computed
            ),
        };
        let elapsed = rows.iter().map(|c| c.elapsed_ms).sum::<Option<f64>>();
        run.checks.push(TheoremCheck {
            id,
            instance: format!("{batch} ({total} tables)"),
            expected: "no counterexample".into(),
            provenance: Provenance::Stated,
            computed,
            verdict,
            note: None,
            elapsed_ms: if run.timings { elapsed } else { None },
        });
    }
}

fn semigroup_sweep(run: &mut Run, opts: &SuiteOptions) -> Result<()> {
    let mut sub = Run::new(opts.timings);
    for m in 1..=3 {
        for (i, t) in all_associative_tables(m)?.iter().enumerate() {
            table_checks(&mut sub, &format!("order {m} #{i} {:?}", t.rows()), t);
        }
    }
    aggregate(run, "all tables of order <= 3", sub);
    let mut sub = Run::new(opts.timings);
    for (i, t) in sample_associative(4, opts.order4_samples, opts.seed)?
        .iter()
        .enumerate()
    {
        table_checks(&mut sub, &format!("order 4 sample #{i} {:?}", t.rows()), t);
    }
    aggregate(run, &format!("order-4 samples, seed {}", opts.seed), sub);
    Ok(())
}

fn corpus_scope(run: &mut Run, dir: &Path) -> Result<()> {
    for entry in load_corpus_dir(dir)? {
        table_checks(run, &entry.name, &entry.table);
        expectation_checks(run, &entry);
    }
    Ok(())
}

/// Keys accepted in `# expect:` lines beyond the invariant report fields.
const EXTRA_KEYS: &[&str] = &["minimal_ideals", "ideals", "aut_order", "completely_simple"];

fn expectation_checks(run: &mut Run, entry: &CorpusEntry) {
    if entry.expectations.is_empty() {
        return;
    }
    let computed = computed_values(&entry.table);
    for (key, value) in &entry.expectations {
        let inst = format!("{}: {key}", entry.name);
        run.check("corpus-expectation", &inst, || {
            let values = computed.as_ref().map_err(Clone::clone)?;
            Ok(match values.get(key.as_str()) {
                Some(got) => Outcome::equal(value.clone(), got.clone(), Provenance::Derived),
                None => Outcome::holds(
                    value.clone(),
                    false,
                    format!("unknown key {key:?}"),
                    Provenance::Derived,
                ),
            })
        });
    }
}

fn computed_values(t: &CayleyTable) -> Result<BTreeMap<String, String>> {
    let family = enumerate_left_ideals(t, DEFAULT_IDEAL_CAP);
    let g = InclusionGraph::from_family(&family)?;
    let report = invariant_report(&g, &ReportOptions::default())?;
    let mut out = BTreeMap::new();
    if let serde_json::Value::Object(map) =
        serde_json::to_value(&report).expect("report serializes")
    {
        for (k, v) in map {
            let text = match v {
                serde_json::Value::String(s) => s,
                serde_json::Value::Null => "null".into(),
                serde_json::Value::Object(_) | serde_json::Value::Array(_) => continue,
                other => other.to_string(),
            };
            out.insert(k, text);
        }
    }
    debug_assert!(EXTRA_KEYS.iter().all(|k| !out.contains_key(*k)));
    out.insert(
        "minimal_ideals".into(),
        t.minimal_left_ideals().len().to_string(),
    );
    out.insert("ideals".into(), family.len().to_string());
    out.insert(
        "aut_order".into(),
        automorphism_group(&g, DEFAULT_AUT_CAP)?.order.to_string(),
    );
    out.insert(
        "completely_simple".into(),
        t.is_completely_simple().to_string(),
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_matches_manifest() {
        let manifest: Vec<&str> = include_str!("../theorems.manifest")
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        assert_eq!(manifest, registry_ids());
        let unique: HashSet<&str> = manifest.iter().copied().collect();
        assert_eq!(unique.len(), manifest.len());
    }

    #[test]
    fn small_boolean_scope_passes() {
        let report = run_suite(&Scope::Boolean { lo: 2, hi: 4 }, &SuiteOptions::default()).unwrap();
        let failed: Vec<_> = report
            .checks
            .iter()
            .filter(|c| c.verdict == Verdict::Fail)
            .collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert!(report.passed > 0);
    }

    #[test]
    fn out_of_range_scope() {
        assert!(run_suite(&Scope::Boolean { lo: 1, hi: 3 }, &SuiteOptions::default()).is_err());
        assert!(run_suite(&Scope::Boolean { lo: 3, hi: 9 }, &SuiteOptions::default()).is_err());
    }

    #[test]
    fn brute_force_on_null_semigroup() {
        // every subset containing the zero is a left ideal
        let t = CayleyTable::null(3);
        assert_eq!(brute_force_ideals(&t).len(), 3);
    }
}
