//! Finite semigroups given by Cayley tables, and their left ideals.
//!
//! Elements are referred to by 0-based index. Every left ideal of a finite
//! semigroup is a union of principal left ideals `S¹a = Sa ∪ {a}`, so the
//! whole left-ideal lattice is recovered by closing the distinct principal
//! ideals under union.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};

/// Default number of distinct ideals enumerated before truncation.
pub const DEFAULT_IDEAL_CAP: usize = 1_000_000;

/// A finite semigroup as an `m × m` operation table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    table: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl CayleyTable {
    /// Validates entries and associativity.
    pub fn new(rows: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::Syntax {
                line: 1,
                message: "order must be positive".into(),
            });
        }
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Syntax {
                    line: i + 2,
                    message: format!("row {i} has {} entries, expected {order}", row.len()),
                });
            }
            for &x in row {
                if x >= order {
                    return Err(Error::Syntax {
                        line: i + 2,
                        message: format!("entry {x} is not an element index below {order}"),
                    });
                }
                table.push(x as u32);
            }
        }
        if let Some(l) = &labels {
            check_labels(l, order, order + 2)?;
        }
        let t = CayleyTable {
            order,
            table,
            labels,
        };
        t.check_associative()?;
        Ok(t)
    }

    /// Builds a table from a flat row-major array that is already known to be
    /// associative (used by the exhaustive enumerators).
    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        CayleyTable {
            order,
            table,
            labels: None,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect()
    }

    /// First triple (in lexicographic order) with `(ab)c != a(bc)`.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let m = self.order;
        for a in 0..m {
            for b in 0..m {
                let ab = self.mul(a, b);
                for c in 0..m {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    fn check_associative(&self) -> Result<()> {
        match self.associativity_violation() {
            None => Ok(()),
            Some((a, b, c)) => Err(Error::NotAssociative {
                a,
                b,
                c,
                left: self.mul(self.mul(a, b), c),
                right: self.mul(a, self.mul(b, c)),
            }),
        }
    }

    /// Parses the plain-text table format: optional `#` comment lines, the
    /// order `m`, `m` rows of `m` indices, and an optional `labels:` line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (first_line, header) = lines.next().ok_or(Error::Syntax {
            line: 1,
            message: "empty input".into(),
        })?;
        let order: usize = header.parse().map_err(|_| Error::Syntax {
            line: first_line,
            message: format!("expected the order m, found {header:?}"),
        })?;
        if order == 0 {
            return Err(Error::Syntax {
                line: first_line,
                message: "order must be positive".into(),
            });
        }

        let mut table = Vec::with_capacity(order * order);
        let mut last_line = first_line;
        for r in 0..order {
            let (ln, row) = lines.next().ok_or(Error::Syntax {
                line: last_line + 1,
                message: format!("expected {order} rows, found {r}"),
            })?;
            last_line = ln;
            let mut count = 0;
            for tok in row.split_whitespace() {
                let x: usize = tok.parse().map_err(|_| Error::Syntax {
                    line: ln,
                    message: format!("{tok:?} is not an element index"),
                })?;
                if x >= order {
                    return Err(Error::Syntax {
                        line: ln,
                        message: format!("entry {x} is not an element index below {order}"),
                    });
                }
                table.push(x as u32);
                count += 1;
            }
            if count != order {
                return Err(Error::Syntax {
                    line: ln,
                    message: format!("row has {count} entries, expected {order}"),
                });
            }
        }

        let mut labels = None;
        if let Some((ln, rest)) = lines.next() {
            let body = rest.strip_prefix("labels:").ok_or(Error::Syntax {
                line: ln,
                message: format!("unexpected trailing line {rest:?}"),
            })?;
            let l: Vec<String> = body.split_whitespace().map(str::to_owned).collect();
            check_labels(&l, order, ln)?;
            labels = Some(l);
            if let Some((ln, extra)) = lines.next() {
                return Err(Error::Syntax {
                    line: ln,
                    message: format!("unexpected line after labels: {extra:?}"),
                });
            }
        }

        let t = CayleyTable {
            order,
            table,
            labels,
        };
        t.check_associative()?;
        Ok(t)
    }

    /// Renders the table in normalized form: single spaces, LF endings, no comments.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.order);
        for row in self.table.chunks(self.order) {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        if let Some(l) = &self.labels {
            let _ = writeln!(out, "labels: {}", l.join(" "));
        }
        out
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    /// `S¹a = Sa ∪ {a}`.
    pub fn principal_left_ideal(&self, a: usize) -> ElementSet {
        let mut s = ElementSet::empty(self.order);
        s.insert(a);
        for x in 0..self.order {
            s.insert(self.mul(x, a));
        }
        s
    }

    /// `S¹aS¹`, the principal two-sided ideal generated by `a`.
    pub fn principal_ideal(&self, a: usize) -> ElementSet {
        let m = self.order;
        let mut s = self.principal_left_ideal(a);
        for x in 0..m {
            let ax = self.mul(a, x);
            s.insert(ax);
            for y in 0..m {
                s.insert(self.mul(y, ax));
            }
        }
        s
    }

    pub fn is_left_ideal(&self, set: &ElementSet) -> bool {
        !set.is_empty()
            && set
                .iter()
                .all(|a| (0..self.order).all(|s| set.contains(self.mul(s, a))))
    }

    /// Green's L-classes, ordered by their smallest element.
    pub fn l_classes(&self) -> Vec<LClass> {
        let principals: Vec<ElementSet> = (0..self.order)
            .map(|a| self.principal_left_ideal(a))
            .collect();
        let mut assigned = vec![false; self.order];
        let mut classes = Vec::new();
        for a in 0..self.order {
            if assigned[a] {
                continue;
            }
            let mut members = ElementSet::empty(self.order);
            for b in a..self.order {
                if !assigned[b] && principals[b] == principals[a] {
                    assigned[b] = true;
                    members.insert(b);
                }
            }
            classes.push(LClass {
                representative: a,
                members,
            });
        }
        classes
    }

    /// The L-class of a single element.
    pub fn l_class_of(&self, a: usize) -> ElementSet {
        let pa = self.principal_left_ideal(a);
        ElementSet::from_indices(
            self.order,
            (0..self.order).filter(|&b| self.principal_left_ideal(b) == pa),
        )
    }

    /// All minimal left ideals of `S`. When `S` has no nontrivial left ideal
    /// the single minimal left ideal is `S` itself.
    pub fn minimal_left_ideals(&self) -> Vec<ElementSet> {
        let mut principals = distinct_principals(self);
        principals.sort_by(|a, b| a.cmp_canonical(b));
        let mut minimal: Vec<ElementSet> = Vec::new();
        for p in &principals {
            if !principals.iter().any(|q| q.is_strict_subset(p)) {
                minimal.push(p.clone());
            }
        }
        minimal
    }

    /// `S \ K` is a single L-class.
    pub fn is_maximal_via_lclass(&self, k: &ElementSet) -> bool {
        let rest = k.complement();
        let first = rest.iter().next();
        match first {
            None => false,
            Some(a) => self.l_class_of(a) == rest,
        }
    }

    /// Simple (every principal two-sided ideal is `S`) with a primitive idempotent.
    pub fn is_completely_simple(&self) -> bool {
        let m = self.order;
        if !(0..m).all(|a| self.principal_ideal(a).is_full()) {
            return false;
        }
        let idempotents: Vec<usize> = (0..m).filter(|&e| self.mul(e, e) == e).collect();
        idempotents.iter().any(|&e| {
            !idempotents
                .iter()
                .any(|&f| f != e && self.mul(e, f) == f && self.mul(f, e) == f)
        })
    }

    /// Right-zero semigroup `x·y = y` on `n` elements.
    pub fn right_zero(n: usize) -> Self {
        let table = (0..n).flat_map(|_| (0..n).map(|y| y as u32)).collect();
        CayleyTable::from_flat_unchecked(n, table)
    }

    /// Null semigroup on `m` elements with zero at index 0: `x·y = 0`.
    pub fn null(m: usize) -> Self {
        CayleyTable::from_flat_unchecked(m, vec![0; m * m])
    }

    /// The cyclic group `Z_m` under addition mod `m`.
    pub fn cyclic_group(m: usize) -> Self {
        let table = (0..m)
            .flat_map(|x| (0..m).map(move |y| ((x + y) % m) as u32))
            .collect();
        CayleyTable::from_flat_unchecked(m, table)
    }

    /// `S¹` with a fresh identity appended at index `m`.
    pub fn with_identity(&self) -> Self {
        let m = self.order;
        let e = m;
        let mut table = Vec::with_capacity((m + 1) * (m + 1));
        for x in 0..=m {
            for y in 0..=m {
                let v = if x == e {
                    y
                } else if y == e {
                    x
                } else {
                    self.mul(x, y)
                };
                table.push(v as u32);
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.push("1".to_string());
            l
        });
        CayleyTable {
            order: m + 1,
            table,
            labels,
        }
    }
}

fn check_labels(labels: &[String], order: usize, line: usize) -> Result<()> {
    if labels.len() != order {
        return Err(Error::Syntax {
            line,
            message: format!("expected {order} labels, found {}", labels.len()),
        });
    }
    let distinct: HashSet<&String> = labels.iter().collect();
    if distinct.len() != order {
        return Err(Error::Syntax {
            line,
            message: "labels must be distinct".into(),
        });
    }
    Ok(())
}

fn distinct_principals(t: &CayleyTable) -> Vec<ElementSet> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for a in 0..t.order() {
        let p = t.principal_left_ideal(a);
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    out
}

/// An L-class: elements generating the same principal left ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LClass {
    pub representative: usize,
    pub members: ElementSet,
}

/// A nonempty left ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeftIdeal {
    members: ElementSet,
    cardinality: usize,
}

impl LeftIdeal {
    pub fn new(members: ElementSet) -> Self {
        let cardinality = members.count();
        LeftIdeal {
            members,
            cardinality,
        }
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn cardinality(&self) -> usize {
        self.cardinality
    }

    pub fn is_nontrivial(&self) -> bool {
        self.cardinality < self.members.universe()
    }
}

/// All nontrivial left ideals of a semigroup.
#[derive(Clone, Debug)]
pub struct IdealFamily {
    pub order: usize,
    pub ideals: Vec<LeftIdeal>,
    pub minimal_indices: Vec<usize>,
    pub maximal_indices: Vec<usize>,
    pub truncated: bool,
    pub cap: usize,
}

impl IdealFamily {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn minimal(&self) -> impl Iterator<Item = &LeftIdeal> {
        self.minimal_indices.iter().map(|&i| &self.ideals[i])
    }

    pub fn maximal(&self) -> impl Iterator<Item = &LeftIdeal> {
        self.maximal_indices.iter().map(|&i| &self.ideals[i])
    }
}

/// Enumerates the nontrivial left ideals by closing the distinct principal
/// left ideals under union, stopping after `cap` distinct ideals.
pub fn enumerate_left_ideals(t: &CayleyTable, cap: usize) -> IdealFamily {
    let cap = cap.max(1);
    let full = t.full_set();
    let principals: Vec<ElementSet> = distinct_principals(t)
        .into_iter()
        .filter(|p| *p != full)
        .collect();

    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut found: Vec<ElementSet> = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    let mut truncated = false;

    'outer: for p in &principals {
        if seen.contains(p) {
            continue;
        }
        if found.len() >= cap {
            truncated = true;
            break;
        }
        seen.insert(p.clone());
        found.push(p.clone());
        queue.push_back(found.len() - 1);
        while let Some(i) = queue.pop_front() {
            for q in &principals {
                if q.is_subset(&found[i]) {
                    continue;
                }
                let u = found[i].union(q);
                if u == full || seen.contains(&u) {
                    continue;
                }
                if found.len() >= cap {
                    truncated = true;
                    break 'outer;
                }
                seen.insert(u.clone());
                found.push(u);
                queue.push_back(found.len() - 1);
            }
        }
    }

    found.sort_by(|a, b| a.cmp_canonical(b));

    // A minimal member is principal; a member K is maximal iff K ∪ S¹a = S
    // for every a outside K.
    let principal_set: HashSet<&ElementSet> = principals.iter().collect();
    let minimal_indices = found
        .iter()
        .enumerate()
        .filter(|(_, k)| {
            principal_set.contains(k) && !principals.iter().any(|q| q.is_strict_subset(k))
        })
        .map(|(i, _)| i)
        .collect();
    let principal_of: Vec<ElementSet> = (0..t.order()).map(|a| t.principal_left_ideal(a)).collect();
    let maximal_indices = found
        .iter()
        .enumerate()
        .filter(|(_, k)| {
            k.complement()
                .iter()
                .all(|a| k.union(&principal_of[a]).is_full())
        })
        .map(|(i, _)| i)
        .collect();

    IdealFamily {
        order: t.order(),
        ideals: found.into_iter().map(LeftIdeal::new).collect(),
        minimal_indices,
        maximal_indices,
        truncated,
        cap,
    }
}
