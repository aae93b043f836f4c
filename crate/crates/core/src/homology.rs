//! Exact reduced homology of cell complexes over `Q` and prime fields.
//!
//! The primary engine is the cellular chain complex on face classes: matrix
//! sizes match the f-vector, and boundary signs are canonical because every
//! face lists its vertex colors in increasing order. The order complex (whose
//! realization is the barycentric subdivision) is retained as an independent
//! small-instance oracle; it must agree with the cellular route wherever both
//! are computed.

use std::collections::HashMap;

use thiserror::Error;

use crate::color::Color;
use crate::complex::{CellComplex, FaceId, ValidationError};
use crate::field::FieldSpec;
use crate::invariants::BettiVector;
use crate::linalg::SparseIntMatrix;

/// Faces of the order complex beyond this count are refused rather than
/// silently truncated; override per call or via the CLI environment knob.
pub const DEFAULT_ORDER_COMPLEX_BUDGET: usize = 2_000_000;

#[derive(Error, Debug)]
pub enum HomologyError {
    #[error("complex failed validation: {0}")]
    InvalidComplex(#[from] ValidationError),
    #[error("boundary composition at rank {rank} is nonzero")]
    BoundarySquare { rank: u8 },
    #[error("boundary column at rank {rank} has {got} entries, expected {want}")]
    ColumnCount { rank: u8, got: usize, want: usize },
    #[error("order complex needs {needed} faces, over the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: usize },
}

/// The augmented cellular chain complex: bases of face classes per rank and
/// boundary matrices with entries in `{-1, 0, +1}`.
pub struct ChainComplex {
    d: Color,
    bases: Vec<Vec<FaceId>>,
    /// `boundaries[r-1]` maps rank-`r` chains to rank-`(r-1)` chains; the
    /// `r = 1` matrix is the augmentation (an all-ones row onto the empty face).
    boundaries: Vec<SparseIntMatrix>,
}

impl ChainComplex {
    pub fn d(&self) -> Color {
        self.d
    }

    /// Face classes of rank `r` indexing the chain group `C_{r-1}`.
    pub fn basis(&self, r: u8) -> &[FaceId] {
        &self.bases[r as usize]
    }

    /// The boundary matrix from rank `r` to rank `r-1`, for `r = 1..=d`.
    pub fn boundary(&self, r: u8) -> &SparseIntMatrix {
        &self.boundaries[r as usize - 1]
    }
}

/// Build all boundary matrices. For a face with colors `c_1 < ... < c_r`, the
/// boundary is the alternating sum of the faces obtained by removing one
/// color, signs `(+,-,+,...)` in color order. `∂∂ = 0` and the per-column
/// entry counts are verified exactly before returning.
pub fn boundary_matrices(p: &CellComplex) -> Result<ChainComplex, HomologyError> {
    p.validate()?;
    let d = p.d();
    let bases: Vec<Vec<FaceId>> = (0..=d)
        .map(|r| p.faces(r).expect("rank in range"))
        .collect();
    let index: Vec<HashMap<FaceId, usize>> = bases
        .iter()
        .map(|faces| {
            faces
                .iter()
                .enumerate()
                .map(|(i, &f)| (f, i))
                .collect::<HashMap<_, _>>()
        })
        .collect();
    let mut boundaries = Vec::with_capacity(d as usize);
    for r in 1..=d {
        let rows = bases[r as usize - 1].len();
        let cols = bases[r as usize].len();
        let mut triplets = Vec::with_capacity(cols * r as usize);
        for (j, face) in bases[r as usize].iter().enumerate() {
            for (t, c) in face.colors().iter().enumerate() {
                let sub = p.face_of(face.rep(), face.colors().without(c));
                let i = index[r as usize - 1][&sub];
                let sign = if t % 2 == 0 { 1 } else { -1 };
                triplets.push((i, j, sign));
            }
        }
        let m = SparseIntMatrix::from_triplets(rows, cols, &triplets);
        for j in 0..cols {
            let got = m.column(j).len();
            if got != r as usize {
                return Err(HomologyError::ColumnCount {
                    rank: r,
                    got,
                    want: r as usize,
                });
            }
        }
        boundaries.push(m);
    }
    for r in 2..=d {
        if !boundaries[r as usize - 2].compose_is_zero(&boundaries[r as usize - 1]) {
            return Err(HomologyError::BoundarySquare { rank: r });
        }
    }
    Ok(ChainComplex {
        d,
        bases,
        boundaries,
    })
}

/// Reduced Betti numbers over `field` from the cellular chain complex:
/// `β̃_{r-1} = dim C_{r-1} - rank ∂_r - rank ∂_{r+1}` on the augmented complex,
/// so `β̃_{-1}` is included (and vanishes for nonempty complexes).
pub fn reduced_betti(p: &CellComplex, field: FieldSpec) -> Result<BettiVector, HomologyError> {
    let cc = boundary_matrices(p)?;
    Ok(betti_from_chain(&cc, field))
}

pub fn betti_from_chain(cc: &ChainComplex, field: FieldSpec) -> BettiVector {
    let d = cc.d;
    let ranks: Vec<usize> = cc.boundaries.iter().map(|m| m.rank(field)).collect();
    let rank_at = |r: usize| -> usize {
        if r >= 1 && r <= d as usize {
            ranks[r - 1]
        } else {
            0
        }
    };
    let entries = (0..=d as usize)
        .map(|r| (cc.bases[r].len() - rank_at(r) - rank_at(r + 1)) as u64)
        .collect();
    BettiVector::new(d, field, entries).expect("length matches by construction")
}

/// Reduced Betti numbers of the order complex of `p` (all chains of faces
/// above the empty face), over `field`. Must equal [`reduced_betti`]; kept as
/// an independent oracle. Refuses to run when the chain count exceeds
/// `budget` (default [`DEFAULT_ORDER_COMPLEX_BUDGET`]).
pub fn betti_via_order_complex(
    p: &CellComplex,
    field: FieldSpec,
    budget: Option<usize>,
) -> Result<BettiVector, HomologyError> {
    p.validate()?;
    let budget = budget.unwrap_or(DEFAULT_ORDER_COMPLEX_BUDGET);
    let d = p.d();
    let mut elements: Vec<FaceId> = Vec::new();
    for r in 1..=d {
        elements.extend(p.faces(r).expect("rank in range"));
    }
    let n = elements.len();
    // elements are sorted by rank, so poset order implies index order
    let mut below: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut above: Vec<Vec<u32>> = vec![Vec::new(); n];
    for j in 0..n {
        for i in 0..j {
            if elements[i].rank() < elements[j].rank() && p.face_le(elements[i], elements[j]) {
                below[j].push(i as u32);
                above[i].push(j as u32);
            }
        }
    }
    let mut chains_ending: Vec<u128> = vec![0; n];
    let mut total: u128 = 0;
    for j in 0..n {
        let mut t: u128 = 1;
        for &i in &below[j] {
            t += chains_ending[i as usize];
        }
        chains_ending[j] = t;
        total += t;
    }
    if total > budget as u128 {
        return Err(HomologyError::BudgetExceeded {
            needed: total,
            budget,
        });
    }

    // enumerate chains by length; a chain is an increasing index sequence
    let mut current: Vec<Vec<u32>> = (0..n as u32).map(|i| vec![i]).collect();
    let mut counts: Vec<usize> = Vec::new();
    let mut matrices: Vec<SparseIntMatrix> = Vec::new();
    // augmentation: every vertex of the order complex maps to the empty chain
    matrices.push(SparseIntMatrix::from_triplets(
        1,
        n,
        &(0..n).map(|j| (0usize, j, 1i64)).collect::<Vec<_>>(),
    ));
    counts.push(n);
    let mut prev_index: HashMap<Vec<u32>, usize> = current
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    for _len in 2..=d as usize {
        let mut next: Vec<Vec<u32>> = Vec::new();
        for chain in &current {
            let top = *chain.last().expect("chains are nonempty") as usize;
            for &ext in &above[top] {
                let mut c = chain.clone();
                c.push(ext);
                next.push(c);
            }
        }
        if next.is_empty() {
            break;
        }
        let next_index: HashMap<Vec<u32>, usize> = next
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        let mut triplets = Vec::with_capacity(next.len() * next[0].len());
        for (j, chain) in next.iter().enumerate() {
            for t in 0..chain.len() {
                let mut sub = chain.clone();
                sub.remove(t);
                let i = prev_index[&sub];
                let sign = if t % 2 == 0 { 1 } else { -1 };
                triplets.push((i, j, sign));
            }
        }
        matrices.push(SparseIntMatrix::from_triplets(
            current.len(),
            next.len(),
            &triplets,
        ));
        counts.push(next.len());
        current = next;
        prev_index = next_index;
    }

    let ranks: Vec<usize> = matrices.iter().map(|m| m.rank(field)).collect();
    let rank_at = |r: usize| ranks.get(r).copied().unwrap_or(0);
    let mut entries = Vec::with_capacity(d as usize + 1);
    entries.push((1 - rank_at(0)) as u64);
    for (dim, &count) in counts.iter().enumerate() {
        entries.push((count - rank_at(dim) - rank_at(dim + 1)) as u64);
    }
    // ranks where the order complex has no chains contribute zero homology
    entries.resize(d as usize + 1, 0);
    Ok(BettiVector::new(d, field, entries).expect("length matches"))
}

/// Link-homology criterion applied directly to poset links: every face link
/// (including the link of the empty face, the complex itself) must have
/// vanishing reduced homology below its top dimension.
pub fn is_cohen_macaulay(p: &CellComplex, field: FieldSpec) -> Result<bool, HomologyError> {
    let d = p.d();
    for r in 0..=d {
        for face in p.faces(r).expect("rank in range") {
            let link = if r == 0 {
                p.clone()
            } else {
                p.link(face).expect("face is in the complex")
            };
            let betti = reduced_betti(&link, field)?;
            // entries below index link.d() are β̃_i for i < dim(link)
            if betti.entries()[..link.d() as usize].iter().any(|&b| b != 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A complex is Buchsbaum iff it is pure (automatic here: every facet has
/// rank `d`) and the link of every atom is Cohen-Macaulay.
pub fn is_buchsbaum(p: &CellComplex, field: FieldSpec) -> Result<bool, HomologyError> {
    for atom in p.atoms() {
        let link = p.link(atom).expect("atom is in the complex");
        if !is_cohen_macaulay(&link, field)? {
            return Ok(false);
        }
    }
    Ok(true)
}
