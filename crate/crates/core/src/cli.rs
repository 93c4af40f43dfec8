//! Command-line front end. Exit codes: 0 success, 1 check failure, 2 usage,
//! parse or input error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::combinat::subset_label;
use crate::constructions::{
    canonical_dominating_set, canonical_maximum_chain, is_boolean_dominating,
    is_boolean_perfect_matching, layer_matching, perfect_matching,
};
use crate::error::{Error, Result};
use crate::graph::{ExportFormat, InclusionGraph, DEFAULT_MAX_VERTICES};
use crate::invariants::domination::DEFAULT_DOMINATION_CAP;
use crate::invariants::{invariant_report, ReportOptions, Selection};
use crate::semigroup::{enumerate_left_ideals, CayleyTable, DEFAULT_IDEAL_CAP};
use crate::suite::{
    run_suite, Scope, SuiteOptions, BOOLEAN_RANGE, DEFAULT_ORDER4_SAMPLES, DEFAULT_SEED,
};
use crate::symmetry::{automorphism_group, DEFAULT_AUT_CAP};

pub const MAX_VERTICES_ENV: &str = "IDEALGRAPH_MAX_VERTICES";

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "idealgraph",
    version,
    about = "Inclusion ideal graphs of finite semigroups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a Cayley table and check associativity.
    Validate { file: PathBuf },
    /// List the nontrivial left ideals of a table.
    Ideals {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_IDEAL_CAP, value_parser = positive)]
        max_ideals: usize,
    },
    /// Export the inclusion graph.
    Graph {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Compute graph invariants as a JSON report.
    Invariants {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        select: Select,
        /// Include per-invariant timings (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
        /// Longest odd hole/antihole searched by the perfectness test.
        #[arg(long, value_parser = positive)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_DOMINATION_CAP, value_parser = positive)]
        domination_cap: usize,
    },
    /// Automorphism group, generators and transitivity.
    Aut {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_AUT_CAP, value_parser = positive)]
        aut_cap: usize,
    },
    /// Explicit constructions on the Boolean model.
    Construct {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        what: Construction,
    },
    /// Run the verification suite.
    Verify {
        /// Boolean sizes, e.g. `2..8` (inclusive).
        #[arg(long, value_parser = parse_range, conflicts_with_all = ["corpus", "semigroups"])]
        boolean: Option<(u32, u32)>,
        /// Directory of Cayley table files.
        #[arg(long, conflicts_with = "semigroups")]
        corpus: Option<PathBuf>,
        /// Only the exhaustive small-semigroup sweep.
        #[arg(long)]
        semigroups: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Order-4 tables sampled in the sweep.
        #[arg(long, default_value_t = DEFAULT_ORDER4_SAMPLES)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Also write the JSON report to this path.
        #[arg(long)]
        json_out: Option<PathBuf>,
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Cayley table file.
    pub file: Option<PathBuf>,
    /// Boolean model on [n] instead of a table.
    #[arg(long)]
    pub n: Option<u32>,
}

#[derive(Args, Debug, Default)]
pub struct Select {
    #[arg(long, conflicts_with_all = ["diameter", "girth", "clique", "chromatic", "independence", "matching", "domination", "planarity", "perfect", "flags"])]
    pub all: bool,
    #[arg(long)]
    pub diameter: bool,
    #[arg(long)]
    pub girth: bool,
    #[arg(long)]
    pub clique: bool,
    #[arg(long)]
    pub chromatic: bool,
    #[arg(long)]
    pub independence: bool,
    #[arg(long)]
    pub matching: bool,
    #[arg(long)]
    pub domination: bool,
    #[arg(long)]
    pub planarity: bool,
    #[arg(long)]
    pub perfect: bool,
    #[arg(long)]
    pub flags: bool,
}

impl Select {
    fn selection(&self) -> Selection {
        let s = Selection {
            diameter: self.diameter,
            girth: self.girth,
            clique: self.clique,
            chromatic: self.chromatic,
            independence: self.independence,
            matching: self.matching,
            domination: self.domination,
            planarity: self.planarity,
            perfect: self.perfect,
            flags: self.flags,
        };
        if self.all || s.is_empty() {
            Selection::all()
        } else {
            s
        }
    }
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Construction {
    #[arg(long)]
    pub perfect_matching: bool,
    #[arg(long)]
    pub dominating_set: bool,
    #[arg(long)]
    pub max_chain: bool,
    /// Matching between layers k and k+1.
    #[arg(long, value_name = "K")]
    pub layer_matching: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Table,
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// `a..b` or `a..=b` (both inclusive), or a single size.
pub fn parse_range(s: &str) -> std::result::Result<(u32, u32), String> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: u32 = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad range start in {s:?}"))?;
    let hi: u32 = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad range end in {s:?}"))?;
    let (min, max) = BOOLEAN_RANGE;
    if lo < min || hi > max || lo > hi {
        return Err(format!("range must lie within {min}..{max}"));
    }
    Ok((lo, hi))
}

/// Vertex cap from the environment, else the library default.
pub fn max_vertices() -> usize {
    std::env::var(MAX_VERTICES_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_MAX_VERTICES)
}

fn load_table(path: &PathBuf) -> Result<CayleyTable> {
    let text = fs::read_to_string(path).map_err(|e| Error::CorpusLoad {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    CayleyTable::parse(&text)
}

fn build_graph(input: &Input) -> Result<InclusionGraph> {
    match (&input.file, input.n) {
        (_, Some(n)) => InclusionGraph::boolean(n),
        (Some(path), None) => {
            let t = load_table(path)?;
            InclusionGraph::from_family(&enumerate_left_ideals(&t, DEFAULT_IDEAL_CAP))
        }
        (None, None) => unreachable!("clap requires an input"),
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn labels(words: &[u64]) -> Vec<String> {
    words.iter().map(|&w| subset_label(w)).collect()
}

/// Output of one command: text for stdout and an exit code.
struct Done {
    stdout: String,
    code: i32,
}

impl Done {
    fn ok(stdout: String) -> Self {
        Done {
            stdout,
            code: EXIT_OK,
        }
    }
}

fn execute(cmd: Command) -> Result<Done> {
    match cmd {
        Command::Validate { file } => {
            let t = load_table(&file)?;
            let mins: Vec<Vec<usize>> = t
                .minimal_left_ideals()
                .iter()
                .map(|m| m.iter().collect())
                .collect();
            let classes: Vec<Vec<usize>> = t
                .l_classes()
                .iter()
                .map(|c| c.members.iter().collect())
                .collect();
            Ok(Done::ok(pretty(&json!({
                "associative": true,
                "order": t.order(),
                "completely_simple": t.is_completely_simple(),
                "minimal_left_ideals": mins,
                "l_classes": classes,
            }))))
        }
        Command::Ideals { file, max_ideals } => {
            let t = load_table(&file)?;
            let family = enumerate_left_ideals(&t, max_ideals);
            let ideals: Vec<_> = family
                .ideals
                .iter()
                .enumerate()
                .map(|(i, k)| {
                    json!({
                        "members": k.members().iter().collect::<Vec<_>>(),
                        "size": k.cardinality(),
                        "minimal": family.minimal_indices.contains(&i),
                        "maximal": family.maximal_indices.contains(&i),
                    })
                })
                .collect();
            Ok(Done::ok(pretty(&json!({
                "order": t.order(),
                "count": family.len(),
                "truncated": family.truncated,
                "ideals": ideals,
            }))))
        }
        Command::Graph {
            input,
            format,
            output,
        } => {
            let g = build_graph(&input)?;
            let format = match format {
                Format::Dot => ExportFormat::Dot,
                Format::Json => ExportFormat::Json,
            };
            let text = g.export(format, max_vertices())?;
            match output {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| Error::CorpusLoad {
                        path: path.display().to_string(),
                        message: e.to_string(),
                    })?;
                    Ok(Done::ok(String::new()))
                }
                None => Ok(Done::ok(text)),
            }
        }
        Command::Invariants {
            input,
            select,
            timings,
            max_len,
            domination_cap,
        } => {
            let g = build_graph(&input)?;
            let opts = ReportOptions {
                selection: select.selection(),
                perfect_max_len: max_len,
                domination_cap,
                max_vertices: max_vertices(),
                timings,
            };
            Ok(Done::ok(invariant_report(&g, &opts)?.to_json_string()))
        }
        Command::Aut { input, aut_cap } => {
            let g = build_graph(&input)?;
            let simple = g.to_simple(aut_cap)?;
            let report = automorphism_group(&g, aut_cap)?;
            let vertex_orbits = report.orbits(simple.vertex_count()).len();
            let edge_orbits = report.edge_orbits(&simple).len();
            let names: Vec<String> = (0..g.vertex_count()).map(|v| g.vertex_name(v)).collect();
            Ok(Done::ok(pretty(&json!({
                "vertices": names,
                "group": report,
                "vertex_orbits": vertex_orbits,
                "edge_orbits": edge_orbits,
                "vertex_transitive": vertex_orbits <= 1,
                "edge_transitive": edge_orbits <= 1,
            }))))
        }
        Command::Construct { n, what } => {
            let body = if what.perfect_matching {
                let pairs = perfect_matching(n)?;
                let verified = is_boolean_perfect_matching(n, &pairs);
                let shown: Vec<[String; 2]> = pairs
                    .iter()
                    .map(|&(a, b)| [subset_label(a), subset_label(b)])
                    .collect();
                json!({"n": n, "perfect_matching": shown, "size": pairs.len(), "verified": verified})
            } else if what.dominating_set {
                let set = canonical_dominating_set(n)?;
                json!({"n": n, "dominating_set": labels(&set), "verified": is_boolean_dominating(n, &set)})
            } else if what.max_chain {
                let chain = canonical_maximum_chain(n)?;
                json!({"n": n, "chain": labels(&chain), "length": chain.len()})
            } else {
                let k = what.layer_matching.expect("clap requires one construction");
                let m = layer_matching(n, k)?;
                let shown: Vec<[String; 2]> = m
                    .pairs
                    .iter()
                    .map(|&(a, b)| [subset_label(a), subset_label(b)])
                    .collect();
                json!({"n": n, "k": k, "covers": m.covers, "pairs": shown, "size": m.pairs.len()})
            };
            Ok(Done::ok(pretty(&body)))
        }
        Command::Verify {
            boolean,
            corpus,
            semigroups,
            seed,
            samples,
            format,
            json_out,
            timings,
        } => {
            let scope = match (boolean, corpus, semigroups) {
                (Some((lo, hi)), _, _) => Scope::Boolean { lo, hi },
                (None, Some(dir), _) => Scope::Corpus(dir),
                (None, None, true) => Scope::Semigroups,
                (None, None, false) => Scope::All,
            };
            let opts = SuiteOptions {
                seed,
                order4_samples: samples,
                timings,
            };
            let report = run_suite(&scope, &opts)?;
            if let Some(path) = json_out {
                fs::write(&path, report.to_json_string()).map_err(|e| Error::CorpusLoad {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })?;
            }
            let stdout = match format {
                ReportFormat::Json => report.to_json_string(),
                ReportFormat::Table => report.to_table(),
            };
            Ok(Done {
                stdout,
                code: if report.all_passed() {
                    EXIT_OK
                } else {
                    EXIT_CHECK_FAILED
                },
            })
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// to the given streams. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli.command) {
        Ok(done) => {
            let _ = out.write_all(done.stdout.as_bytes());
            done.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
