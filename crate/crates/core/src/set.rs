//! Fixed-universe bitsets over ring carriers.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

const WORD_BITS: usize = 64;

/// A subset of `{0, .., universe - 1}` stored as a little-endian word vector.
///
/// The canonical order is by cardinality first and then by the numeric value
/// of the bitmask, which is the order ideal enumerations are reported in.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            universe,
            words: vec![0; universe.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for x in 0..universe {
            set.insert(x);
        }
        set
    }

    pub fn singleton(universe: usize, x: usize) -> Self {
        let mut set = Self::empty(universe);
        set.insert(x);
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Self {
        let mut set = Self::empty(universe);
        for x in items {
            set.insert(x);
        }
        set
    }

    /// Builds a set from the low `universe` bits of `mask`.
    pub fn from_u64(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD_BITS, "u64 mask only covers 64 elements");
        let mut set = Self::empty(universe);
        if universe > 0 {
            let keep = if universe == WORD_BITS {
                u64::MAX
            } else {
                (1u64 << universe) - 1
            };
            set.words[0] = mask & keep;
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, x: usize) -> bool {
        assert!(
            x < self.universe,
            "element {x} outside universe {}",
            self.universe
        );
        let (w, b) = (x / WORD_BITS, x % WORD_BITS);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.universe {
            self.words[x / WORD_BITS] &= !(1 << (x % WORD_BITS));
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.words[x / WORD_BITS] & (1 << (x % WORD_BITS)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + b)
            })
        })
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_proper_subset(&self, other: &ElementSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        self.zip_with(other, |a, b| a | b)
    }

    fn zip_with(&self, other: &ElementSet, f: impl Fn(u64, u64) -> u64) -> ElementSet {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        ElementSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Lower-case hexadecimal rendering of the bitmask, most significant digit
    /// first, without prefix. The empty set renders as `"0"`.
    pub fn to_hex(&self) -> String {
        let mut out = String::new();
        for &w in self.words.iter().rev() {
            if out.is_empty() {
                if w != 0 {
                    out = format!("{w:x}");
                }
            } else {
                out.push_str(&format!("{w:016x}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn from_hex(universe: usize, hex: &str) -> Result<ElementSet, String> {
        let digits = hex.trim().trim_start_matches("0x");
        if digits.is_empty() {
            return Err("empty bitmask".into());
        }
        let mut set = ElementSet::empty(universe);
        for (pos, ch) in digits.chars().rev().enumerate() {
            let nibble = ch
                .to_digit(16)
                .ok_or_else(|| format!("invalid hex digit {ch:?}"))?;
            for bit in 0..4 {
                if nibble & (1 << bit) != 0 {
                    let x = pos * 4 + bit;
                    if x >= universe {
                        return Err(format!("bit {x} outside universe of {universe}"));
                    }
                    set.insert(x);
                }
            }
        }
        Ok(set)
    }

    fn cmp_numeric(&self, other: &ElementSet) -> Ordering {
        self.words.iter().rev().cmp(other.words.iter().rev())
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.words.len().cmp(&other.words.len()))
            .then_with(|| self.cmp_numeric(other))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

/// Deserialized sets carry the smallest universe that holds their highest
/// bit; callers re-home them with [`ElementSet::with_universe`].
impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let hex = String::deserialize(d)?;
        let digits = hex.trim().trim_start_matches("0x").len();
        ElementSet::from_hex(digits * 4, &hex).map_err(serde::de::Error::custom)
    }
}

impl ElementSet {
    /// Moves the set into a universe of a different size, failing if an
    /// element would fall outside it.
    pub fn with_universe(&self, universe: usize) -> Option<ElementSet> {
        if self.iter().any(|x| x >= universe) {
            return None;
        }
        Some(ElementSet::from_indices(universe, self.iter()))
    }
}
