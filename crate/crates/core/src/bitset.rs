//! Fixed-width bit vectors over semigroup elements.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A subset of `{0, .., len-1}` stored as little-endian 64-bit words.
///
/// The width is fixed at construction; all binary operations expect both
/// operands to have the same width.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    len: usize,
    words: SmallVec<[u64; 2]>,
}

fn word_count(len: usize) -> usize {
    len.div_ceil(64)
}

impl ElementSet {
    pub fn empty(len: usize) -> Self {
        ElementSet {
            len,
            words: SmallVec::from_elem(0, word_count(len)),
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(len: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(len);
        for i in items {
            s.insert(i);
        }
        s
    }

    /// Builds a set from the low `len` bits of a single word.
    pub fn from_word(len: usize, word: u64) -> Self {
        assert!(len <= 64, "from_word needs len <= 64");
        let mut s = Self::empty(len);
        if len > 0 {
            let keep = if len == 64 {
                u64::MAX
            } else {
                (1u64 << len) - 1
            };
            s.words[0] = word & keep;
        }
        s
    }

    /// Width of the universe, not the number of members.
    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
        s
    }

    pub fn complement(&self) -> ElementSet {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        let tail = self.len % 64;
        if tail != 0 {
            if let Some(last) = s.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        s
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_strict_subset(&self, other: &ElementSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// The set as a single integer, when it fits in one word.
    pub fn as_word(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ if self.words[1..].iter().all(|&w| w == 0) => Some(self.words[0]),
            _ => None,
        }
    }

    /// Compares the two sets as binary integers (bit i has weight 2^i).
    pub fn cmp_value(&self, other: &ElementSet) -> Ordering {
        let n = self.words.len().max(other.words.len());
        for i in (0..n).rev() {
            let a = self.words.get(i).copied().unwrap_or(0);
            let b = other.words.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Canonical vertex order: by cardinality, then by integer value.
    pub fn cmp_canonical(&self, other: &ElementSet) -> Ordering {
        self.count()
            .cmp(&other.count())
            .then_with(|| self.cmp_value(other))
    }

    /// Decimal rendering of the integer value, for any width.
    pub fn to_decimal(&self) -> String {
        if let Some(w) = self.as_word() {
            return w.to_string();
        }
        let mut limbs: Vec<u64> = self.words.to_vec();
        let mut digits = Vec::new();
        while limbs.iter().any(|&l| l != 0) {
            let mut rem: u128 = 0;
            for limb in limbs.iter_mut().rev() {
                let cur = (rem << 64) | *limb as u128;
                *limb = (cur / 10) as u64;
                rem = cur % 10;
            }
            digits.push(b'0' + rem as u8);
        }
        digits.reverse();
        String::from_utf8(digits).expect("ascii digits")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_and_complement() {
        let a = ElementSet::from_indices(70, [0, 65]);
        let b = ElementSet::from_indices(70, [0, 3, 65]);
        assert!(a.is_strict_subset(&b));
        assert!(!b.is_subset(&a));
        let c = a.complement();
        assert_eq!(c.count(), 68);
        assert!(c.is_disjoint(&a));
        assert!(c.union(&a).is_full());
    }

    #[test]
    fn decimal_of_wide_sets() {
        let s = ElementSet::from_indices(70, [64]);
        assert_eq!(s.to_decimal(), "18446744073709551616");
        assert_eq!(ElementSet::from_word(5, 0b10110).to_decimal(), "22");
        assert_eq!(ElementSet::empty(3).to_decimal(), "0");
    }

    #[test]
    fn canonical_order() {
        let a = ElementSet::from_word(4, 0b1000);
        let b = ElementSet::from_word(4, 0b0011);
        assert_eq!(a.cmp_canonical(&b), Ordering::Less);
        assert_eq!(a.cmp_value(&b), Ordering::Greater);
        let v: Vec<usize> = ElementSet::from_indices(130, [1, 64, 129]).iter().collect();
        assert_eq!(v, vec![1, 64, 129]);
    }
}
