//! Colors `1..=d` and small sets of them, stored as bitmasks.

use std::fmt;

/// A color label. Colors are 1-based: a graph or complex of rank `d` uses colors `1..=d`.
pub type Color = u8;

/// Largest supported rank. Face classes are materialized for all `2^d` color
/// subsets, so `d` is capped where that table stays small.
pub const MAX_RANK: Color = 16;

/// A subset of `1..=MAX_RANK`, with bit `c - 1` standing for color `c`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ColorSet(u32);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// The full set `{1, ..., d}`.
    pub fn full(d: Color) -> ColorSet {
        debug_assert!(d <= MAX_RANK);
        if d == 0 {
            ColorSet(0)
        } else {
            ColorSet((1u32 << d) - 1)
        }
    }

    pub fn singleton(c: Color) -> ColorSet {
        debug_assert!(c >= 1 && c <= MAX_RANK);
        ColorSet(1 << (c - 1))
    }

    pub fn from_colors<I: IntoIterator<Item = Color>>(colors: I) -> ColorSet {
        let mut s = ColorSet::EMPTY;
        for c in colors {
            s = s.with(c);
        }
        s
    }

    pub fn from_bits(bits: u32) -> ColorSet {
        ColorSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, c: Color) -> bool {
        c >= 1 && c <= MAX_RANK && self.0 & (1 << (c - 1)) != 0
    }

    pub fn with(self, c: Color) -> ColorSet {
        debug_assert!(c >= 1 && c <= MAX_RANK);
        ColorSet(self.0 | (1 << (c - 1)))
    }

    pub fn without(self, c: Color) -> ColorSet {
        debug_assert!(c >= 1 && c <= MAX_RANK);
        ColorSet(self.0 & !(1 << (c - 1)))
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn minus(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    /// Complement inside `{1, ..., d}`.
    pub fn complement_in(self, d: Color) -> ColorSet {
        ColorSet::full(d).minus(self)
    }

    pub fn len(self) -> u8 {
        self.0.count_ones() as u8
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Colors of the set in ascending order.
    pub fn iter(self) -> impl Iterator<Item = Color> {
        let bits = self.0;
        (1..=MAX_RANK).filter(move |c| bits & (1 << (c - 1)) != 0)
    }

    /// All `2^d` subsets of `{1, ..., d}` in ascending bitmask order.
    pub fn all_subsets(d: Color) -> impl Iterator<Item = ColorSet> {
        debug_assert!(d <= MAX_RANK);
        (0..(1u64 << d)).map(|bits| ColorSet(bits as u32))
    }

    /// All subsets of `self`, in ascending bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = ColorSet> {
        let mask = self.0;
        (0..=mask).filter(move |b| b & !mask == 0).map(ColorSet)
    }

    /// Render as a bare comma list, e.g. `1,3`; the empty set renders as `-`.
    pub fn to_list_string(self) -> String {
        if self.is_empty() {
            "-".to_string()
        } else {
            self.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Parse a comma list as written by [`ColorSet::to_list_string`].
    pub fn parse_list(s: &str) -> Option<ColorSet> {
        if s == "-" {
            return Some(ColorSet::EMPTY);
        }
        let mut set = ColorSet::EMPTY;
        for part in s.split(',') {
            let c: Color = part.trim().parse().ok()?;
            if c < 1 || c > MAX_RANK {
                return None;
            }
            set = set.with(c);
        }
        Some(set)
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for c in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
