//! Binary words with run-length block structure.
//!
//! Words have first letter `1`; a block is a maximal constant run, so blocks
//! alternate between all-ones and all-zeros starting with ones. The two
//! boundary sets pinpoint where blocks meet: `block_starts` holds the first
//! position of every block after the first, `block_ends` the last position of
//! every block before the last.

use std::fmt;

use thiserror::Error;

use crate::color::{Color, ColorSet, MAX_RANK};

#[derive(Error, Debug, PartialEq, Eq)]
pub enum WordError {
    #[error("words must be nonempty")]
    Empty,
    #[error("first letter must be 1")]
    FirstLetterZero,
    #[error("word length {0} exceeds the supported maximum {MAX_RANK}")]
    TooLong(usize),
    #[error("invalid character `{0}` in word")]
    BadCharacter(char),
}

/// A binary word `w_1 w_2 ... w_d` with `w_1 = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryWord {
    bits: Vec<bool>,
}

/// The block decomposition of a word, bundled for convenience.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockData {
    /// `(value, length)` per maximal run, in order.
    pub blocks: Vec<(bool, u8)>,
    /// 1-based block index of every position.
    pub block_index: Vec<u8>,
    /// `{ i > 1 : w_i != w_{i-1} }`.
    pub starts: ColorSet,
    /// `{ i < d : w_i != w_{i+1} }`.
    pub ends: ColorSet,
}

impl BinaryWord {
    pub fn new(bits: Vec<bool>) -> Result<BinaryWord, WordError> {
        if bits.is_empty() {
            return Err(WordError::Empty);
        }
        if bits.len() > MAX_RANK as usize {
            return Err(WordError::TooLong(bits.len()));
        }
        if !bits[0] {
            return Err(WordError::FirstLetterZero);
        }
        Ok(BinaryWord { bits })
    }

    pub fn parse(s: &str) -> Result<BinaryWord, WordError> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(WordError::BadCharacter(other)),
            })
            .collect::<Result<Vec<bool>, WordError>>()?;
        BinaryWord::new(bits)
    }

    pub fn len(&self) -> Color {
        self.bits.len() as Color
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 1-based bit access.
    pub fn bit(&self, pos: Color) -> bool {
        self.bits[pos as usize - 1]
    }

    pub fn block_count(&self) -> u8 {
        1 + self.bits.windows(2).filter(|w| w[0] != w[1]).count() as u8
    }

    pub fn blocks(&self) -> Vec<(bool, u8)> {
        let mut out: Vec<(bool, u8)> = Vec::new();
        for &b in &self.bits {
            match out.last_mut() {
                Some(last) if last.0 == b => last.1 += 1,
                _ => out.push((b, 1)),
            }
        }
        out
    }

    /// The 1-based index of the block containing position `pos`.
    pub fn block_index(&self, pos: Color) -> u8 {
        let mut idx = 1u8;
        for i in 1..pos as usize {
            if self.bits[i] != self.bits[i - 1] {
                idx += 1;
            }
        }
        idx
    }

    pub fn block_starts(&self) -> ColorSet {
        let mut s = ColorSet::EMPTY;
        for i in 2..=self.len() {
            if self.bit(i) != self.bit(i - 1) {
                s = s.with(i);
            }
        }
        s
    }

    pub fn block_ends(&self) -> ColorSet {
        let mut s = ColorSet::EMPTY;
        for i in 1..self.len() {
            if self.bit(i) != self.bit(i + 1) {
                s = s.with(i);
            }
        }
        s
    }

    pub fn block_data(&self) -> BlockData {
        BlockData {
            blocks: self.blocks(),
            block_index: (1..=self.len()).map(|p| self.block_index(p)).collect(),
            starts: self.block_starts(),
            ends: self.block_ends(),
        }
    }

    /// Positions whose block has size one (these connect to the apex).
    pub fn size_one_block_positions(&self) -> Vec<Color> {
        let mut out = Vec::new();
        let mut pos: Color = 1;
        for (_, len) in self.blocks() {
            if len == 1 {
                out.push(pos);
            }
            pos += len as Color;
        }
        out
    }

    /// Toggle one bit; `None` when this would clear the first letter.
    pub fn flipped(&self, pos: Color) -> Option<BinaryWord> {
        if pos == 1 {
            return None;
        }
        let mut bits = self.bits.clone();
        bits[pos as usize - 1] = !bits[pos as usize - 1];
        Some(BinaryWord { bits })
    }

    /// `Some(j)` iff the words have equal length and differ exactly at `j`.
    pub fn diff_position(&self, other: &BinaryWord) -> Option<Color> {
        if self.bits.len() != other.bits.len() {
            return None;
        }
        let mut found = None;
        for i in 0..self.bits.len() {
            if self.bits[i] != other.bits[i] {
                if found.is_some() {
                    return None;
                }
                found = Some(i as Color + 1);
            }
        }
        found
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// All length-`d` words with first letter `1` and exactly `k+1` blocks, in
/// lexicographic order. There are `C(d-1, k)` of them; the list is empty when
/// `k + 1 > d` or `d = 0`.
pub fn words(d: Color, k: u8) -> Vec<BinaryWord> {
    if d == 0 || d > MAX_RANK || k as u16 + 1 > d as u16 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for suffix in 0u32..(1u32 << (d - 1)) {
        let mut bits = Vec::with_capacity(d as usize);
        bits.push(true);
        for pos in 1..d as u32 {
            // highest suffix bit is position 2, so numeric order is lex order
            bits.push(suffix & (1 << (d as u32 - 1 - pos)) != 0);
        }
        let w = BinaryWord { bits };
        if w.block_count() == k + 1 {
            out.push(w);
        }
    }
    out
}
