//! Sparse integer matrices and exact rank computation.
//!
//! Ranks over the rationals are computed by fraction-free elimination on
//! arbitrary-precision integers (integer cross-multiplication followed by
//! content removal), so no rational number is ever formed. Ranks over `F_p`
//! use modular elimination. Columns are processed left to right and the pivot
//! is the first nonzero row of each column, so results are reproducible
//! bit for bit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::field::FieldSpec;

/// Column-major sparse matrix with integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(u32, i64)>>,
}

impl SparseIntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Accumulate `(row, col, value)` triplets; duplicate positions are summed.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: &[(usize, usize, i64)],
    ) -> SparseIntMatrix {
        let mut m = SparseIntMatrix::zero(rows, cols);
        for &(r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet out of bounds");
            m.columns[c].push((r as u32, v));
        }
        for col in m.columns.iter_mut() {
            col.sort_by_key(|&(r, _)| r);
            let mut merged: Vec<(u32, i64)> = Vec::with_capacity(col.len());
            for &(r, v) in col.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == r => last.1 += v,
                    _ => merged.push((r, v)),
                }
            }
            merged.retain(|&(_, v)| v != 0);
            *col = merged;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(u32, i64)] {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Entries as `(row, col, value)` triplets in column-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::with_capacity(self.nnz());
        for (j, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                out.push((r as usize, j, v));
            }
        }
        out
    }

    /// True iff `self * other` is the zero matrix (exact integer arithmetic).
    pub fn compose_is_zero(&self, other: &SparseIntMatrix) -> bool {
        assert_eq!(self.cols, other.rows, "composition shape mismatch");
        let mut acc: Vec<i128> = Vec::new();
        let mut touched: Vec<usize> = Vec::new();
        acc.resize(self.rows, 0);
        for col in &other.columns {
            for &(k, bv) in col {
                for &(r, av) in &self.columns[k as usize] {
                    if acc[r as usize] == 0 {
                        touched.push(r as usize);
                    }
                    acc[r as usize] += av as i128 * bv as i128;
                }
            }
            if touched.iter().any(|&r| acc[r] != 0) {
                return false;
            }
            for &r in &touched {
                acc[r] = 0;
            }
            touched.clear();
        }
        true
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        match field {
            FieldSpec::Rationals => self.rank_rational(),
            FieldSpec::Prime(p) => self.rank_mod(p),
        }
    }

    fn rank_rational(&self) -> usize {
        let mut work: Vec<Vec<(u32, BigInt)>> = self
            .columns
            .iter()
            .map(|col| col.iter().map(|&(r, v)| (r, BigInt::from(v))).collect())
            .collect();
        let mut owner: Vec<Option<usize>> = vec![None; self.rows];
        let mut rank = 0usize;
        for j in 0..work.len() {
            loop {
                let Some(&(top, _)) = work[j].first() else {
                    break;
                };
                match owner[top as usize] {
                    None => {
                        owner[top as usize] = Some(j);
                        rank += 1;
                        break;
                    }
                    Some(p) => {
                        let a = work[p][0].1.clone();
                        let b = work[j][0].1.clone();
                        let pivot_col = std::mem::take(&mut work[p]);
                        work[j] = combine_int(&work[j], &a, &pivot_col, &b);
                        work[p] = pivot_col;
                    }
                }
            }
        }
        rank
    }

    fn rank_mod(&self, p: u64) -> usize {
        let reduce = |v: i64| -> u64 {
            let m = (v as i128).rem_euclid(p as i128);
            m as u64
        };
        let mut work: Vec<Vec<(u32, u64)>> = self
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|&(r, v)| (r, reduce(v)))
                    .filter(|&(_, v)| v != 0)
                    .collect()
            })
            .collect();
        let mut owner: Vec<Option<usize>> = vec![None; self.rows];
        let mut rank = 0usize;
        for j in 0..work.len() {
            loop {
                let Some(&(top, _)) = work[j].first() else {
                    break;
                };
                match owner[top as usize] {
                    None => {
                        owner[top as usize] = Some(j);
                        rank += 1;
                        break;
                    }
                    Some(pc) => {
                        let a = work[pc][0].1;
                        let b = work[j][0].1;
                        // col_j -= (b / a) * col_pc
                        let factor = mul_mod(b, mod_inverse(a, p), p);
                        let pivot_col = std::mem::take(&mut work[pc]);
                        work[j] = combine_mod(&work[j], &pivot_col, factor, p);
                        work[pc] = pivot_col;
                    }
                }
            }
        }
        rank
    }
}

/// `a*x - b*y` on sorted sparse columns, divided by the gcd of the result.
fn combine_int(
    x: &[(u32, BigInt)],
    a: &BigInt,
    y: &[(u32, BigInt)],
    b: &BigInt,
) -> Vec<(u32, BigInt)> {
    let mut out: Vec<(u32, BigInt)> = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut k) = (0usize, 0usize);
    while i < x.len() || k < y.len() {
        let take_x = k >= y.len() || (i < x.len() && x[i].0 < y[k].0);
        let take_y = i >= x.len() || (k < y.len() && y[k].0 < x[i].0);
        let (row, val) = if take_x {
            let v = a * &x[i].1;
            i += 1;
            (x[i - 1].0, v)
        } else if take_y {
            let v = -(b * &y[k].1);
            k += 1;
            (y[k - 1].0, v)
        } else {
            let v = a * &x[i].1 - b * &y[k].1;
            i += 1;
            k += 1;
            (x[i - 1].0, v)
        };
        if !val.is_zero() {
            out.push((row, val));
        }
    }
    // content removal keeps the integers small
    let mut content = BigInt::zero();
    for (_, v) in &out {
        content = content.gcd(v);
        if content == BigInt::from(1) {
            break;
        }
    }
    if content > BigInt::from(1) {
        for (_, v) in out.iter_mut() {
            *v = &*v / &content;
        }
    }
    // keep leading entries positive for a canonical form
    if let Some((_, lead)) = out.first() {
        if lead.is_negative() {
            for (_, v) in out.iter_mut() {
                *v = -&*v;
            }
        }
    }
    out
}

/// `x - factor*y` over `F_p` on sorted sparse columns.
fn combine_mod(x: &[(u32, u64)], y: &[(u32, u64)], factor: u64, p: u64) -> Vec<(u32, u64)> {
    let mut out: Vec<(u32, u64)> = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut k) = (0usize, 0usize);
    while i < x.len() || k < y.len() {
        let take_x = k >= y.len() || (i < x.len() && x[i].0 < y[k].0);
        let take_y = i >= x.len() || (k < y.len() && y[k].0 < x[i].0);
        let (row, val) = if take_x {
            i += 1;
            (x[i - 1].0, x[i - 1].1)
        } else if take_y {
            let v = (p - mul_mod(factor, y[k].1, p)) % p;
            k += 1;
            (y[k - 1].0, v)
        } else {
            let v = (x[i].1 + p - mul_mod(factor, y[k].1, p)) % p;
            i += 1;
            k += 1;
            (x[i - 1].0, v)
        };
        if val != 0 {
            out.push((row, val));
        }
    }
    out
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) works
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}
