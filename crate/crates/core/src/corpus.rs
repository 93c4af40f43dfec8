//! Small-semigroup corpora: exhaustive enumeration of associative tables,
//! seeded sampling, transformation semigroups, and loading table files from
//! a directory.

use std::collections::{HashSet, VecDeque};
use std::fs;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::semigroup::CayleyTable;

/// Largest order for which [`all_associative_tables`] is allowed to run.
pub const MAX_ENUMERATED_ORDER: usize = 4;

const UNSET: u32 = u32::MAX;

fn consistent(m: usize, t: &[u32]) -> bool {
    for x in 0..m {
        for y in 0..m {
            let xy = t[x * m + y];
            if xy == UNSET {
                continue;
            }
            for z in 0..m {
                let yz = t[y * m + z];
                if yz == UNSET {
                    continue;
                }
                let left = t[xy as usize * m + z];
                let right = t[x * m + yz as usize];
                if left != UNSET && right != UNSET && left != right {
                    return false;
                }
            }
        }
    }
    true
}

fn fill(m: usize, cell: usize, t: &mut Vec<u32>, out: &mut Vec<CayleyTable>) {
    if cell == m * m {
        out.push(CayleyTable::from_flat_unchecked(m, t.clone()));
        return;
    }
    for v in 0..m as u32 {
        t[cell] = v;
        if consistent(m, t) {
            fill(m, cell + 1, t, out);
        }
    }
    t[cell] = UNSET;
}

/// Every associative operation on `{0, ..., m-1}` (labeled, not up to
/// isomorphism), in lexicographic order of the row-major table.
/// Counts are 1, 8, 113, 3492 for `m = 1..4`.
pub fn all_associative_tables(m: usize) -> Result<Vec<CayleyTable>> {
    if m == 0 || m > MAX_ENUMERATED_ORDER {
        return Err(Error::OutOfRange {
            what: "order",
            value: m as i64,
            range: "1..=4",
        });
    }
    let mut out = Vec::new();
    fill(m, 0, &mut vec![UNSET; m * m], &mut out);
    Ok(out)
}

/// All associative tables of orders `1..=max_m`.
pub fn exhaustive_corpus(max_m: usize) -> Result<Vec<CayleyTable>> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        out.extend(all_associative_tables(m)?);
    }
    Ok(out)
}

/// `count` distinct associative tables of order `m`, drawn uniformly with a
/// fixed seed from the full enumeration (all of them if fewer exist).
pub fn sample_associative(m: usize, count: usize, seed: u64) -> Result<Vec<CayleyTable>> {
    let all = all_associative_tables(m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut idx: Vec<usize> = (0..all.len()).collect();
    idx.shuffle(&mut rng);
    idx.truncate(count);
    idx.sort_unstable();
    Ok(idx.into_iter().map(|i| all[i].clone()).collect())
}

/// The semigroup generated by full transformations of `{0, ..., k-1}` under
/// composition (`f·g` = apply `f` then `g`), or `None` if it exceeds `cap`
/// elements. Elements are numbered in discovery order, generators first.
pub fn transformation_semigroup(gens: &[Vec<usize>], cap: usize) -> Option<CayleyTable> {
    let mut elems: Vec<Vec<usize>> = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for g in gens {
        if seen.insert(g.clone()) {
            elems.push(g.clone());
        }
    }
    let compose = |f: &[usize], g: &[usize]| -> Vec<usize> { f.iter().map(|&x| g[x]).collect() };
    let mut queue: VecDeque<usize> = (0..elems.len()).collect();
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let p = compose(&elems[i], g);
            if seen.insert(p.clone()) {
                elems.push(p);
                if elems.len() > cap {
                    return None;
                }
                queue.push_back(elems.len() - 1);
            }
        }
    }
    let index = |p: &Vec<usize>| elems.iter().position(|e| e == p).expect("closed");
    let m = elems.len();
    let mut flat = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            flat.push(index(&compose(&elems[a], &elems[b])) as u32);
        }
    }
    Some(CayleyTable::from_flat_unchecked(m, flat))
}

/// A seeded random semigroup of order at most `max_order`, generated by one
/// or two random transformations of a small set.
pub fn random_small_semigroup(rng: &mut impl Rng, max_order: usize) -> CayleyTable {
    loop {
        let k = rng.gen_range(1..=4usize);
        let ngens = rng.gen_range(1..=2usize);
        let gens: Vec<Vec<usize>> = (0..ngens)
            .map(|_| (0..k).map(|_| rng.gen_range(0..k)).collect())
            .collect();
        if let Some(t) = transformation_semigroup(&gens, max_order) {
            return t;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    /// File name relative to the corpus directory.
    pub name: String,
    pub table: CayleyTable,
    /// `# expect: key = value` annotations, in file order.
    pub expectations: Vec<(String, String)>,
}

/// Extracts `# expect: key = value` comment lines.
pub fn parse_expectations(text: &str) -> Vec<(String, String)> {
    text.lines()
        .filter_map(|line| {
            let rest = line
                .trim()
                .strip_prefix('#')?
                .trim()
                .strip_prefix("expect:")?;
            let (k, v) = rest.split_once('=')?;
            Some((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

/// Loads every regular file of `dir` (sorted by name) as a Cayley table.
pub fn load_corpus_dir(dir: &Path) -> Result<Vec<CorpusEntry>> {
    let err = |path: &Path, message: String| Error::CorpusLoad {
        path: path.display().to_string(),
        message,
    };
    let mut paths: Vec<_> = fs::read_dir(dir)
        .map_err(|e| err(dir, e.to_string()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = fs::read_to_string(&p).map_err(|e| err(&p, e.to_string()))?;
            let table = CayleyTable::parse(&text).map_err(|e| err(&p, e.to_string()))?;
            Ok(CorpusEntry {
                name: p
                    .file_name()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_default(),
                table,
                expectations: parse_expectations(&text),
            })
        })
        .collect()
}
