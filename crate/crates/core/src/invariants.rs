//! Face-number arithmetic: f-, h- and h'-vectors, Euler characteristics, the
//! short simplicial relation, the lower-bound inequality report, ridge
//! multiplicity diagnostics, and the alternating binomial identities.
//!
//! All arithmetic is exact arbitrary-precision integer; there is no floating
//! point anywhere in this module. Index conventions are pinned once and for
//! all: `FVector` entry `i` stores `f_{i-1}` and `BettiVector` entry `i`
//! stores `β̃_{i-1}`, so the correction term in the h'-formula reads off
//! directly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::color::Color;
use crate::complex::CellComplex;
use crate::field::FieldSpec;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum InvariantError {
    #[error("vector has {got} entries, expected {want}")]
    LengthMismatch { got: usize, want: usize },
    #[error("f_(-1) must be 1 for a nonempty complex")]
    BadEmptyFaceCount,
    #[error("h_0 must be 1")]
    BadHZero,
    #[error("h'_d = {got} does not equal the top Betti number {want}; the h- and Betti-vectors do not describe the same complex")]
    TopMismatch { got: BigInt, want: BigInt },
    #[error("parameters k={k}, d={d} out of range")]
    ParamRange { k: i64, d: i64 },
}

/// Exact binomial coefficient, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    for t in 0..k {
        num = num * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    num
}

macro_rules! int_vector {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, PartialEq, Eq, Debug)]
        pub struct $name {
            d: Color,
            entries: Vec<BigInt>,
        }

        impl $name {
            pub fn new(d: Color, entries: Vec<BigInt>) -> Result<Self, InvariantError> {
                if entries.len() != d as usize + 1 {
                    return Err(InvariantError::LengthMismatch {
                        got: entries.len(),
                        want: d as usize + 1,
                    });
                }
                Ok(Self { d, entries })
            }

            pub fn from_i64s(d: Color, entries: &[i64]) -> Result<Self, InvariantError> {
                Self::new(d, entries.iter().map(|&x| BigInt::from(x)).collect())
            }

            pub fn d(&self) -> Color {
                self.d
            }

            pub fn entries(&self) -> &[BigInt] {
                &self.entries
            }

            pub fn entry(&self, i: usize) -> &BigInt {
                &self.entries[i]
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, e) in self.entries.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")
            }
        }
    };
}

int_vector!(
    FVector,
    "Face counts `f_{-1}, f_0, ..., f_{d-1}`; entry `i` stores `f_{i-1}`."
);
int_vector!(HVector, "The h-vector `h_0, ..., h_d`.");
int_vector!(
    HPrimeVector,
    "The h'-vector `h'_0, ..., h'_d`: h-numbers corrected by Betti numbers."
);

/// Reduced Betti numbers `β̃_{-1}, β̃_0, ..., β̃_{d-1}` over a recorded field;
/// entry `i` stores `β̃_{i-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiVector {
    d: Color,
    field: FieldSpec,
    entries: Vec<u64>,
}

impl BettiVector {
    pub fn new(d: Color, field: FieldSpec, entries: Vec<u64>) -> Result<Self, InvariantError> {
        if entries.len() != d as usize + 1 {
            return Err(InvariantError::LengthMismatch {
                got: entries.len(),
                want: d as usize + 1,
            });
        }
        Ok(BettiVector { d, field, entries })
    }

    pub fn d(&self) -> Color {
        self.d
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// `β̃_i` for `i` in `-1..=d-1`.
    pub fn betti(&self, i: i32) -> u64 {
        self.entries[(i + 1) as usize]
    }

    /// Alternating sum `Σ (-1)^i β̃_i` over `i = -1..=d-1`.
    pub fn euler_characteristic(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (idx, &b) in self.entries.iter().enumerate() {
            // idx stores i = idx - 1
            let term = BigInt::from(b);
            if idx % 2 == 0 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        acc
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Count faces of every rank.
pub fn f_vector(p: &CellComplex) -> FVector {
    let d = p.d();
    let entries = (0..=d)
        .map(|r| BigInt::from(p.faces(r).expect("rank in range").len()))
        .collect();
    FVector { d, entries }
}

/// Reduced Euler characteristic computed from face counts:
/// `χ̃ = Σ_{i≥0} (-1)^i f_i - f_{-1}`.
pub fn euler_characteristic(f: &FVector) -> BigInt {
    let mut acc = -f.entries[0].clone();
    for (idx, e) in f.entries.iter().enumerate().skip(1) {
        if (idx - 1) % 2 == 0 {
            acc += e;
        } else {
            acc -= e;
        }
    }
    acc
}

/// The binomial transform `h_j = Σ_{i=0}^{j} (-1)^{j-i} C(d-i, d-j) f_{i-1}`.
pub fn h_from_f(f: &FVector) -> Result<HVector, InvariantError> {
    if !f.entries[0].is_one() {
        return Err(InvariantError::BadEmptyFaceCount);
    }
    let d = f.d as u64;
    let mut entries = Vec::with_capacity(f.d as usize + 1);
    for j in 0..=d {
        let mut h = BigInt::zero();
        for i in 0..=j {
            let term = binomial(d - i, d - j) * &f.entries[i as usize];
            if (j - i) % 2 == 0 {
                h += term;
            } else {
                h -= term;
            }
        }
        entries.push(h);
    }
    // top-entry identity: h_d = (-1)^(d-1) χ̃, guaranteed by the transform
    let chi = euler_characteristic(f);
    let signed_chi = if (f.d as usize + 1) % 2 == 0 {
        chi
    } else {
        -chi
    };
    debug_assert_eq!(entries[f.d as usize], signed_chi);
    Ok(HVector { d: f.d, entries })
}

/// Inverse transform `f_{i-1} = Σ_{j=0}^{i} C(d-j, d-i) h_j`.
pub fn f_from_h(h: &HVector) -> Result<FVector, InvariantError> {
    if !h.entries[0].is_one() {
        return Err(InvariantError::BadHZero);
    }
    let d = h.d as u64;
    let mut entries = Vec::with_capacity(h.d as usize + 1);
    for i in 0..=d {
        let mut f = BigInt::zero();
        for j in 0..=i {
            f += binomial(d - j, d - i) * &h.entries[j as usize];
        }
        entries.push(f);
    }
    Ok(FVector { d: h.d, entries })
}

/// The Betti-corrected h-numbers
/// `h'_j = h_j + C(d,j) · Σ_{i=0}^{j-1} (-1)^{j-i-1} β̃_{i-1}`.
///
/// Fails if the pair is inconsistent, i.e. `h'_d ≠ β̃_{d-1}`.
pub fn h_prime(h: &HVector, betti: &BettiVector) -> Result<HPrimeVector, InvariantError> {
    if h.d != betti.d {
        return Err(InvariantError::LengthMismatch {
            got: betti.entries.len(),
            want: h.d as usize + 1,
        });
    }
    let d = h.d as u64;
    let mut entries = Vec::with_capacity(h.d as usize + 1);
    for j in 0..=d {
        let mut corr = BigInt::zero();
        for i in 0..j {
            let term = BigInt::from(betti.entries[i as usize]);
            if (j - i - 1) % 2 == 0 {
                corr += term;
            } else {
                corr -= term;
            }
        }
        entries.push(&h.entries[j as usize] + binomial(d, j) * corr);
    }
    let top = &entries[h.d as usize];
    let expected = BigInt::from(betti.entries[h.d as usize]);
    if *top != expected {
        return Err(InvariantError::TopMismatch {
            got: top.clone(),
            want: expected,
        });
    }
    Ok(HPrimeVector { d: h.d, entries })
}

/// Per-index residuals of the vertex-link relation
/// `Σ_v h_{i-1}(lk(v)) = i·h_i + (d-i+1)·h_{i-1}` for `i = 1..=d`.
#[derive(Clone, Debug)]
pub struct ShortSimplicialReport {
    pub residuals: Vec<BigInt>,
}

impl ShortSimplicialReport {
    pub fn passed(&self) -> bool {
        self.residuals.iter().all(|r| r.is_zero())
    }
}

pub fn short_simplicial_check(p: &CellComplex) -> Result<ShortSimplicialReport, InvariantError> {
    let d = p.d();
    let h = h_from_f(&f_vector(p))?;
    let mut link_sums = vec![BigInt::zero(); d as usize];
    for atom in p.atoms() {
        let link = p.link(atom).expect("atom is a face");
        let hl = h_from_f(&f_vector(&link))?;
        for i in 1..=d as usize {
            link_sums[i - 1] += &hl.entries[i - 1];
        }
    }
    let residuals = (1..=d as usize)
        .map(|i| {
            let rhs = BigInt::from(i as u64) * &h.entries[i]
                + BigInt::from(d as u64 - i as u64 + 1) * &h.entries[i - 1];
            &link_sums[i - 1] - rhs
        })
        .collect();
    Ok(ShortSimplicialReport { residuals })
}

/// Slack report for the lower bounds `h'_j ≥ C(d,j)·β̃_{j-1}`, `j = 1..=d-1`,
/// together with the boundary conditions `h'_0 = 1` and `h'_d = β̃_{d-1}`.
#[derive(Clone, Debug)]
pub struct NsReport {
    /// `slacks[j-1] = h'_j - C(d,j)·β̃_{j-1}` for `j = 1..=d-1`.
    pub slacks: Vec<BigInt>,
    pub h0_ok: bool,
    pub top_ok: bool,
}

impl NsReport {
    pub fn passed(&self) -> bool {
        self.h0_ok && self.top_ok && self.slacks.iter().all(|s| !s.is_negative())
    }
}

pub fn ns_check(hp: &HPrimeVector, betti: &BettiVector) -> Result<NsReport, InvariantError> {
    if hp.d != betti.d {
        return Err(InvariantError::LengthMismatch {
            got: betti.entries.len(),
            want: hp.d as usize + 1,
        });
    }
    let d = hp.d as u64;
    let slacks = (1..d)
        .map(|j| &hp.entries[j as usize] - binomial(d, j) * BigInt::from(betti.entries[j as usize]))
        .collect();
    Ok(NsReport {
        slacks,
        h0_ok: hp.entries[0].is_one(),
        top_ok: hp.entries[hp.d as usize] == BigInt::from(betti.entries[hp.d as usize]),
    })
}

/// How many facets contain each ridge (codimension-one face).
#[derive(Clone, Debug)]
pub struct RidgeProfile {
    /// ridges contained in exactly one facet
    pub boundary_count: u64,
    /// ridges contained in exactly two facets
    pub interior_count: u64,
    pub max_multiplicity: u64,
    /// multiplicity -> number of ridges
    pub histogram: BTreeMap<u64, u64>,
    /// `Σ m·count_m = d·f_{d-1}` (every facet has d ridges)
    pub conservation_ok: bool,
}

impl RidgeProfile {
    /// When no ridge lies in three or more facets, the boundary count must be
    /// `2 f_{d-2} - d f_{d-1}`. Returns `None` if some ridge has multiplicity
    /// three or more, making the identity inapplicable.
    pub fn boundary_identity(&self, f: &FVector) -> Option<bool> {
        if self.max_multiplicity > 2 {
            return None;
        }
        let d = f.d as usize;
        let expected =
            BigInt::from(2) * &f.entries[d - 1] - BigInt::from(f.d as u64) * &f.entries[d];
        Some(BigInt::from(self.boundary_count) == expected)
    }
}

pub fn ridge_profile(p: &CellComplex) -> RidgeProfile {
    let d = p.d();
    let mut histogram: BTreeMap<u64, u64> = BTreeMap::new();
    for ridge in p.faces(d - 1).expect("rank in range") {
        let m = p.class_size(ridge) as u64;
        *histogram.entry(m).or_insert(0) += 1;
    }
    let boundary_count = histogram.get(&1).copied().unwrap_or(0);
    let interior_count = histogram.get(&2).copied().unwrap_or(0);
    let max_multiplicity = histogram.keys().next_back().copied().unwrap_or(0);
    let total: u64 = histogram.iter().map(|(m, c)| m * c).sum();
    let conservation_ok = total == d as u64 * p.facet_count() as u64;
    RidgeProfile {
        boundary_count,
        interior_count,
        max_multiplicity,
        histogram,
        conservation_ok,
    }
}

/// Exact verification of the two alternating binomial identities
/// `Σ_{j=k+1}^{d} (-1)^{j-k+1} C(d,j) = C(d-1,k)` and, for `k < d-1`,
/// `Σ_{j=k+1}^{d-1} (-1)^{j-k+1} (d-j) C(d,j) = d·C(d-2,k)`.
#[derive(Clone, Debug)]
pub struct BinomialIdentityReport {
    pub d: u64,
    pub k: u64,
    pub first: (BigInt, BigInt),
    pub second: Option<(BigInt, BigInt)>,
}

impl BinomialIdentityReport {
    pub fn passed(&self) -> bool {
        self.first.0 == self.first.1 && self.second.as_ref().map_or(true, |(l, r)| l == r)
    }
}

pub fn binomial_identities(d: u64, k: u64) -> Result<BinomialIdentityReport, InvariantError> {
    if d == 0 || k > d - 1 {
        return Err(InvariantError::ParamRange {
            k: k as i64,
            d: d as i64,
        });
    }
    let alt = |j: u64, term: BigInt| {
        if (j - k + 1) % 2 == 0 {
            term
        } else {
            -term
        }
    };
    let mut first = BigInt::zero();
    for j in (k + 1)..=d {
        first += alt(j, binomial(d, j));
    }
    let second = if k < d.saturating_sub(1) {
        let mut sum = BigInt::zero();
        for j in (k + 1)..d {
            sum += alt(j, BigInt::from(d - j) * binomial(d, j));
        }
        Some((sum, BigInt::from(d) * binomial(d - 2, k)))
    } else {
        None
    };
    Ok(BinomialIdentityReport {
        d,
        k,
        first: (first, binomial(d - 1, k)),
        second,
    })
}
