//! The word-graph family: graphs `G'(k,d)` and `G(k,d)`, the complexes
//! `X(k,d)` realizing a single nonzero reduced Betti number with the minimal
//! h'-vector, the explicit link shelling orders, and the chain-gluing
//! synthesizer for arbitrary prescribed Betti vectors.
//!
//! Vertices of `G'(k,d)` are the binary words of length `d` with first letter
//! `1` and `k+1` blocks; two words differing in exactly one position `j` are
//! joined by an edge labeled `j`. `G(k,d)` adds an apex vertex `alpha`, joined
//! to a word by an edge labeled `j` whenever position `j` sits in a block of
//! size one (flipping that bit would merge blocks).

mod words;

pub use words::{words, BinaryWord, BlockData, WordError};

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::color::{Color, ColorSet};
use crate::complex::{CellComplex, ComplexError};
use crate::field::FieldSpec;
use crate::graph::ColoredMultigraph;
use crate::homology::{reduced_betti, HomologyError};
use crate::invariants::{binomial, f_vector, h_from_f, h_prime, HPrimeVector, HVector};
use crate::shelling::{is_graphical_shelling_on, ShellingCertificate, ShellingError};

/// Name of the apex vertex of `G(k,d)`.
pub const APEX: &str = "alpha";

#[derive(Error, Debug)]
pub enum ConstructError {
    #[error("parameters k={k}, d={d} out of range")]
    ParamRange { k: i64, d: i64 },
    #[error("color {c} out of range 1..={d}")]
    ColorRange { c: Color, d: Color },
    #[error("Betti vector has {got} entries, expected {want}")]
    BettiShape { got: usize, want: usize },
    #[error("the entry for degree -1 homology must be zero")]
    NonzeroBettiAtEmptyDegree,
    #[error(
        "requested h'_{j} = {requested} exceeds the minimal value {minimal} for the given Betti numbers; raising h' above the minimal bound is not constructible by this library"
    )]
    HPrimeSurplus {
        j: usize,
        requested: BigInt,
        minimal: BigInt,
    },
    #[error("requested h'-vector is infeasible at index {j}: {requested} < minimal {minimal}")]
    HPrimeInfeasible {
        j: usize,
        requested: BigInt,
        minimal: BigInt,
    },
    #[error("complex construction failed: {0}")]
    Complex(#[from] ComplexError),
    #[error("homology check failed: {0}")]
    Homology(#[from] HomologyError),
    #[error("shelling check failed: {0}")]
    Shelling(#[from] ShellingError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

fn check_kd(k: u8, d: Color) -> Result<(), ConstructError> {
    if d < 2 || k < 1 || k > d - 1 {
        return Err(ConstructError::ParamRange {
            k: k as i64,
            d: d as i64,
        });
    }
    Ok(())
}

/// The flip graph on the words alone (no apex).
pub fn build_g_prime(k: u8, d: Color) -> Result<ColoredMultigraph, ConstructError> {
    check_kd(k, d)?;
    let ws = words(d, k);
    let names: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
    let mut edges = Vec::new();
    for i in 0..ws.len() {
        for j in (i + 1)..ws.len() {
            if let Some(pos) = ws[i].diff_position(&ws[j]) {
                edges.push((names[i].clone(), names[j].clone(), pos));
            }
        }
    }
    ColoredMultigraph::new(d, names, &edges).map_err(|e| ConstructError::Internal(e.to_string()))
}

/// The word graph with the apex: vertex order is `alpha` first, then the
/// words lexicographically.
pub fn build_g(k: u8, d: Color) -> Result<ColoredMultigraph, ConstructError> {
    check_kd(k, d)?;
    let ws = words(d, k);
    let mut names: Vec<String> = vec![APEX.to_string()];
    names.extend(ws.iter().map(|w| w.to_string()));
    let mut edges = Vec::new();
    for i in 0..ws.len() {
        for j in (i + 1)..ws.len() {
            if let Some(pos) = ws[i].diff_position(&ws[j]) {
                edges.push((ws[i].to_string(), ws[j].to_string(), pos));
            }
        }
    }
    for w in &ws {
        for pos in w.size_one_block_positions() {
            edges.push((w.to_string(), APEX.to_string(), pos));
        }
    }
    ColoredMultigraph::new(d, names, &edges).map_err(|e| ConstructError::Internal(e.to_string()))
}

/// The complex `X(k,d)`: reduced Betti numbers `β̃_i = [i = k]` and the
/// minimal h'-vector with `h'_j = C(d,j)` at `j = 0, k+1`. Built from the
/// word graph for `k ≥ 1`; for `k = 0` it is the disjoint union of two
/// simplices (facets `s1`, `s2`).
pub fn xkd(k: u8, d: Color) -> Result<CellComplex, ConstructError> {
    if d < 2 || k > d - 1 {
        return Err(ConstructError::ParamRange {
            k: k as i64,
            d: d as i64,
        });
    }
    if k == 0 {
        let a = CellComplex::simplex(d, "s1")?;
        let b = CellComplex::simplex(d, "s2")?;
        return Ok(a.disjoint_union(&b)?);
    }
    Ok(CellComplex::from_graph(&build_g(k, d)?)?)
}

/// The graph encoding of `X(k,d)`, when one exists (`k ≥ 1`; the `k = 0`
/// complex is disconnected and has no single-graph encoding).
pub fn xkd_graph(k: u8, d: Color) -> Result<Option<ColoredMultigraph>, ConstructError> {
    if d < 2 || k > d - 1 {
        return Err(ConstructError::ParamRange {
            k: k as i64,
            d: d as i64,
        });
    }
    if k == 0 {
        Ok(None)
    } else {
        Ok(Some(build_g(k, d)?))
    }
}

/// Sort key for the link shelling order at distinguished color `c`:
/// `I(w)` = block ends strictly below `c`, `E(w)` = block starts strictly
/// above `c`. Their disjoint union has exactly `k` elements and is the
/// restriction set of `w` in the shelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkOrderKey {
    pub i_set: Vec<Color>,
    pub e_set: Vec<Color>,
}

impl LinkOrderKey {
    pub fn new(w: &BinaryWord, c: Color, k: u8) -> Result<LinkOrderKey, ConstructError> {
        let d = w.len();
        if c < 1 || c > d {
            return Err(ConstructError::ColorRange { c, d });
        }
        let below: ColorSet = ColorSet::from_colors((1..c).collect::<Vec<_>>());
        let above: ColorSet = ColorSet::from_colors(((c + 1)..=d).collect::<Vec<_>>());
        let i_set: Vec<Color> = w.block_ends().intersection(below).iter().collect();
        let e_set: Vec<Color> = w.block_starts().intersection(above).iter().collect();
        let b = w.block_index(c);
        if i_set.len() != b as usize - 1
            || e_set.len() != (k + 1 - b) as usize
            || i_set.len() + e_set.len() != k as usize
        {
            return Err(ConstructError::Internal(format!(
                "boundary-set cardinalities broken for word {w}, c={c}, k={k}"
            )));
        }
        Ok(LinkOrderKey { i_set, e_set })
    }

    pub fn restriction(&self) -> ColorSet {
        ColorSet::from_colors(self.i_set.iter().chain(self.e_set.iter()).copied())
    }
}

impl Ord for LinkOrderKey {
    fn cmp(&self, other: &Self) -> Ordering {
        // (1) fewer block ends below c comes first
        match self.i_set.len().cmp(&other.i_set.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // (2) ascending lexicographic on I at the first difference
        match self.i_set.cmp(&other.i_set) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // (3) compare E from the top; the larger entry at the first
        // difference comes earlier
        for t in (0..self.e_set.len()).rev() {
            if self.e_set[t] != other.e_set[t] {
                return other.e_set[t].cmp(&self.e_set[t]);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for LinkOrderKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The explicit shelling order for the link of the color-`c` atom of
/// `X(k,d)`: the apex first, then the words sorted by [`LinkOrderKey`].
pub fn link_shelling_order(k: u8, d: Color, c: Color) -> Result<Vec<String>, ConstructError> {
    check_kd(k, d)?;
    if c < 1 || c > d {
        return Err(ConstructError::ColorRange { c, d });
    }
    let mut keyed: Vec<(LinkOrderKey, String)> = words(d, k)
        .iter()
        .map(|w| Ok((LinkOrderKey::new(w, c, k)?, w.to_string())))
        .collect::<Result<_, ConstructError>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let mut order = vec![APEX.to_string()];
    order.extend(keyed.into_iter().map(|(_, name)| name));
    Ok(order)
}

/// Run the graphical-shelling checker on the explicit link order. Returns the
/// verified certificate, or `None` if the order fails (it never should).
pub fn link_shelling_certificate(
    k: u8,
    d: Color,
    c: Color,
) -> Result<Option<ShellingCertificate>, ConstructError> {
    let g = build_g(k, d)?;
    let universe = ColorSet::full(d).without(c);
    let restricted = g
        .restrict(universe)
        .map_err(|e| ConstructError::Internal(e.to_string()))?;
    let order = link_shelling_order(k, d, c)?;
    Ok(is_graphical_shelling_on(&restricted, &order, universe)?)
}

/// Betti profile of `X(k,d)`: a single 1 in homological degree `k`
/// (entry `k+1` under the shifted indexing).
pub fn expected_betti_entries(k: u8, d: Color) -> Vec<u64> {
    let mut entries = vec![0u64; d as usize + 1];
    entries[k as usize + 1] = 1;
    entries
}

/// The h-vector forced on `X(k,d)`: zeros through position `k`, then
/// `(-1)^(i-k+1) C(d,i)`.
pub fn expected_h(k: u8, d: Color) -> HVector {
    let mut entries = vec![BigInt::from(1)];
    for i in 1..=d as u64 {
        if i <= k as u64 {
            entries.push(BigInt::zero());
        } else {
            let b = binomial(d as u64, i);
            entries.push(if (i - k as u64 + 1) % 2 == 0 { b } else { -b });
        }
    }
    HVector::new(d, entries).expect("length d+1")
}

/// The h'-vector of `X(k,d)`: `C(d,j)` at `j = 0` and `j = k+1`, zero elsewhere.
pub fn expected_hprime(k: u8, d: Color) -> HPrimeVector {
    let mut entries = vec![BigInt::zero(); d as usize + 1];
    entries[0] = BigInt::from(1);
    entries[k as usize + 1] = binomial(d as u64, k as u64 + 1);
    if k as usize + 1 == 0 {
        unreachable!();
    }
    HPrimeVector::new(d, entries).expect("length d+1")
}

/// The h-vector of every atom link of `X(k,d)`: `C(d-1,j)` at `j = 0, k`.
pub fn expected_link_h(k: u8, d: Color) -> HVector {
    let mut entries = vec![BigInt::zero(); d as usize];
    entries[0] = BigInt::from(1);
    if k > 0 {
        entries[k as usize] = binomial(d as u64 - 1, k as u64);
    }
    HVector::new(d - 1, entries).expect("length d")
}

/// Check that the link of every atom of `P(G)` equals the complex built from
/// the corresponding color-restricted graph, color for color. Requires `G`
/// to stay connected avoiding each color (so each color has one atom).
pub fn links_match_graph_restrictions(
    g: &ColoredMultigraph,
    p: &CellComplex,
) -> Result<bool, ConstructError> {
    for c in 1..=g.d() {
        if !g
            .is_connected_avoiding(c)
            .map_err(|e| ConstructError::Internal(e.to_string()))?
        {
            return Ok(false);
        }
        let atom = match p
            .atoms()
            .into_iter()
            .find(|a| a.colors() == ColorSet::singleton(c))
        {
            Some(a) => a,
            None => return Ok(false),
        };
        let link = p.link(atom)?;
        let universe = ColorSet::full(g.d()).without(c);
        let restricted = g
            .restrict(universe)
            .map_err(|e| ConstructError::Internal(e.to_string()))?;
        let rebuilt = CellComplex::from_graph_on_colors(&restricted, universe)?;
        if link != rebuilt {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The minimal h'-vector compatible with a Betti vector: `h'_0 = 1`,
/// `h'_j = C(d,j)·β̃_{j-1}` for `1 ≤ j ≤ d-1`, `h'_d = β̃_{d-1}`.
pub fn minimal_hprime(d: Color, betti: &[u64]) -> Result<HPrimeVector, ConstructError> {
    check_betti_shape(d, betti)?;
    let mut entries = Vec::with_capacity(d as usize + 1);
    entries.push(BigInt::from(1));
    for j in 1..d as usize {
        entries.push(binomial(d as u64, j as u64) * BigInt::from(betti[j]));
    }
    entries.push(BigInt::from(betti[d as usize]));
    Ok(HPrimeVector::new(d, entries).expect("length d+1"))
}

fn check_betti_shape(d: Color, betti: &[u64]) -> Result<(), ConstructError> {
    if betti.len() != d as usize + 1 {
        return Err(ConstructError::BettiShape {
            got: betti.len(),
            want: d as usize + 1,
        });
    }
    if betti[0] != 0 {
        return Err(ConstructError::NonzeroBettiAtEmptyDegree);
    }
    Ok(())
}

/// Realize a prescribed Betti vector (entries `β̃_{-1}, β̃_0, ..., β̃_{d-1}`,
/// the first of which must be zero) with the minimal h'-vector: chain together
/// `β̃_k` copies of `X(k,d)`, gluing each new summand's first facet onto the
/// last facet of the accumulated complex. A zero vector yields one simplex.
/// The resulting Betti and h'-vectors are recomputed and checked before
/// returning.
pub fn synthesize(d: Color, betti: &[u64]) -> Result<CellComplex, ConstructError> {
    if d < 2 {
        return Err(ConstructError::ParamRange { k: 0, d: d as i64 });
    }
    check_betti_shape(d, betti)?;
    let mut summands: Vec<u8> = Vec::new();
    for k in 0..d {
        for _ in 0..betti[k as usize + 1] {
            summands.push(k);
        }
    }
    let result = if summands.is_empty() {
        CellComplex::simplex(d, "s1")?
    } else if summands.len() == 1 {
        xkd(summands[0], d)?
    } else {
        let mut acc = xkd(summands[0], d)?.prefix_facets("p0.");
        for (i, &k) in summands.iter().enumerate().skip(1) {
            let part = xkd(k, d)?.prefix_facets(&format!("p{i}."));
            let last = acc
                .facet_names()
                .last()
                .expect("accumulated complex is nonempty")
                .clone();
            let first = part.facet_names()[0].clone();
            acc = acc.glue_facets(&last, &part, &first)?;
        }
        acc
    };
    // post-hoc verification of the advertised profile
    let got_betti = reduced_betti(&result, FieldSpec::Rationals)?;
    if got_betti.entries() != betti {
        return Err(ConstructError::Internal(format!(
            "synthesized Betti numbers {got_betti} differ from the target"
        )));
    }
    let hp =
        h_prime(&h_from_f(&f_vector(&result)).map_err(int_err)?, &got_betti).map_err(int_err)?;
    let want = minimal_hprime(d, betti)?;
    if hp != want {
        return Err(ConstructError::Internal(format!(
            "synthesized h'-vector {hp} differs from the minimal profile {want}"
        )));
    }
    Ok(result)
}

/// Like [`synthesize`], but with an explicit h'-target. Targets above the
/// minimal profile are rejected (out of scope for this library); targets
/// below it are infeasible outright.
pub fn synthesize_with_hprime(
    d: Color,
    betti: &[u64],
    hprime: &[BigInt],
) -> Result<CellComplex, ConstructError> {
    check_betti_shape(d, betti)?;
    let minimal = minimal_hprime(d, betti)?;
    if hprime.len() != d as usize + 1 {
        return Err(ConstructError::BettiShape {
            got: hprime.len(),
            want: d as usize + 1,
        });
    }
    for (j, (req, min)) in hprime.iter().zip(minimal.entries()).enumerate() {
        if req > min {
            return Err(ConstructError::HPrimeSurplus {
                j,
                requested: req.clone(),
                minimal: min.clone(),
            });
        }
        if req < min {
            return Err(ConstructError::HPrimeInfeasible {
                j,
                requested: req.clone(),
                minimal: min.clone(),
            });
        }
    }
    synthesize(d, betti)
}

fn int_err(e: crate::invariants::InvariantError) -> ConstructError {
    ConstructError::Internal(e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::BettiVector;

    #[test]
    fn g13_is_the_fan_with_apex() {
        let g = build_g(1, 3).unwrap();
        assert_eq!(g.vertices(), &["alpha", "100", "110"]);
        let mut edges: Vec<(String, String, Color)> = g
            .edges()
            .iter()
            .map(|e| {
                let (mut a, mut b) = (
                    g.vertex_name(e.u).to_string(),
                    g.vertex_name(e.v).to_string(),
                );
                if a > b {
                    std::mem::swap(&mut a, &mut b);
                }
                (a, b, e.color)
            })
            .collect();
        edges.sort();
        assert_eq!(
            edges,
            vec![
                ("100".into(), "110".into(), 2),
                ("100".into(), "alpha".into(), 1),
                ("110".into(), "alpha".into(), 3),
            ]
        );
    }

    #[test]
    fn g25_matches_the_reference_drawing() {
        let g = build_g(2, 5).unwrap();
        assert_eq!(g.vertex_count(), 7);
        let mut edges: Vec<(String, String, Color)> = g
            .edges()
            .iter()
            .map(|e| {
                let (mut a, mut b) = (
                    g.vertex_name(e.u).to_string(),
                    g.vertex_name(e.v).to_string(),
                );
                if a > b {
                    std::mem::swap(&mut a, &mut b);
                }
                (a, b, e.color)
            })
            .collect();
        edges.sort();
        let expect: Vec<(String, String, Color)> = vec![
            ("10001".into(), "10011".into(), 4),
            ("10001".into(), "11001".into(), 2),
            ("10001".into(), "alpha".into(), 1),
            ("10001".into(), "alpha".into(), 5),
            ("10011".into(), "10111".into(), 3),
            ("10011".into(), "11011".into(), 2),
            ("10011".into(), "alpha".into(), 1),
            ("10111".into(), "alpha".into(), 1),
            ("10111".into(), "alpha".into(), 2),
            ("11001".into(), "11011".into(), 4),
            ("11001".into(), "11101".into(), 3),
            ("11001".into(), "alpha".into(), 5),
            ("11011".into(), "alpha".into(), 3),
            ("11101".into(), "alpha".into(), 4),
            ("11101".into(), "alpha".into(), 5),
        ];
        assert_eq!(edges, expect);
    }

    #[test]
    fn deleting_any_color_class_keeps_g_connected() {
        for d in 2..=8u8 {
            for k in 1..d {
                let g = build_g(k, d).unwrap();
                for c in 1..=d {
                    assert!(
                        g.is_connected_avoiding(c).unwrap(),
                        "G({k},{d}) disconnected avoiding {c}"
                    );
                }
            }
        }
    }

    #[test]
    fn top_parameter_is_two_parallel_facets() {
        // k = d-1 leaves the single alternating word plus the apex,
        // joined by d parallel edges of every color
        let g = build_g(3, 4).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges().len(), 4);
        let colors: Vec<Color> = g.edges().iter().map(|e| e.color).collect();
        assert_eq!(colors, vec![1, 2, 3, 4]);
    }

    #[test]
    fn xkd_reference_profiles() {
        let x13 = xkd(1, 3).unwrap();
        assert_eq!(x13.facet_count(), 3);

        let x25 = xkd(2, 5).unwrap();
        assert_eq!(x25.facet_count(), 7);

        assert!(xkd(3, 3).is_err());
        assert!(xkd(0, 1).is_err());
    }

    #[test]
    fn link_order_reference_case() {
        let order = link_shelling_order(1, 3, 2).unwrap();
        assert_eq!(order, vec!["alpha", "110", "100"]);
        let cert = link_shelling_certificate(1, 3, 2).unwrap().unwrap();
        assert_eq!(
            cert.restrictions,
            vec![
                ColorSet::EMPTY,
                ColorSet::singleton(3),
                ColorSet::singleton(1)
            ]
        );
    }

    #[test]
    fn link_order_for_middle_color() {
        // c = 3 exercises both boundary sets; order and restriction sets were
        // derived by hand from the block decompositions
        let order = link_shelling_order(2, 5, 3).unwrap();
        assert_eq!(
            order,
            vec!["alpha", "11101", "10001", "10011", "11001", "11011", "10111"]
        );
        let cert = link_shelling_certificate(2, 5, 3).unwrap().unwrap();
        let want: Vec<ColorSet> = vec![
            ColorSet::EMPTY,
            ColorSet::from_colors([4, 5]),
            ColorSet::from_colors([1, 5]),
            ColorSet::from_colors([1, 4]),
            ColorSet::from_colors([2, 5]),
            ColorSet::from_colors([2, 4]),
            ColorSet::from_colors([1, 2]),
        ];
        assert_eq!(cert.restrictions, want);
    }

    #[test]
    fn restriction_sets_have_size_k() {
        for d in 2..=8u8 {
            for k in 1..d {
                for c in 1..=d {
                    for w in words(d, k) {
                        let key = LinkOrderKey::new(&w, c, k).unwrap();
                        assert_eq!(key.restriction().len(), k);
                    }
                }
            }
        }
    }

    #[test]
    fn flip_graph_blocks_obstruct_paths() {
        // in G'(k,d) minus color c, words whose position-c block index differs
        // are disconnected: a path would need a c-flip or the apex
        for (k, d) in [(1u8, 4u8), (2, 4), (2, 5), (3, 5)] {
            let gp = build_g_prime(k, d).unwrap();
            for c in 1..=d {
                let part = gp.component_partition(ColorSet::full(d).without(c));
                let ws = words(d, k);
                for i in 0..ws.len() {
                    for j in 0..ws.len() {
                        let vi = gp.vertex_index(&ws[i].to_string()).unwrap();
                        let vj = gp.vertex_index(&ws[j].to_string()).unwrap();
                        if part[vi] == part[vj] {
                            assert_eq!(
                                ws[i].block_index(c),
                                ws[j].block_index(c),
                                "words {} and {} connected avoiding {c}",
                                ws[i],
                                ws[j]
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn alpha_edges_merge_blocks() {
        for d in 2..=6u8 {
            for k in 1..d {
                let g = build_g(k, d).unwrap();
                let apex = g.vertex_index(APEX).unwrap();
                for e in g.edges() {
                    let (w_idx, is_apex_edge) = if e.u == apex {
                        (e.v, true)
                    } else if e.v == apex {
                        (e.u, true)
                    } else {
                        (e.u, false)
                    };
                    let w = BinaryWord::parse(g.vertex_name(w_idx)).unwrap();
                    if is_apex_edge {
                        // flipping the labeled position must reduce the block count
                        if let Some(flipped) = w.flipped(e.color) {
                            assert!(flipped.block_count() < w.block_count());
                        } else {
                            // flipping position 1 of a size-one first block
                            assert_eq!(w.block_index(1), 1);
                        }
                    } else {
                        let other = if e.u == w_idx { e.v } else { e.u };
                        let w2 = BinaryWord::parse(g.vertex_name(other)).unwrap();
                        assert_eq!(w.diff_position(&w2), Some(e.color));
                        assert_eq!(w2.block_count(), w.block_count());
                    }
                }
            }
        }
    }

    #[test]
    fn links_of_word_complexes_match_restrictions() {
        for (k, d) in [(1u8, 3u8), (2, 3), (1, 4), (2, 4), (3, 4)] {
            let g = build_g(k, d).unwrap();
            let p = CellComplex::from_graph(&g).unwrap();
            assert!(links_match_graph_restrictions(&g, &p).unwrap());
        }
    }

    #[test]
    fn synthesize_reference_cases() {
        // single summand comes back unprefixed
        let q = synthesize(3, &[0, 1, 0, 0]).unwrap();
        assert_eq!(q, xkd(0, 3).unwrap());

        // zero vector: a single simplex
        let q = synthesize(3, &[0, 0, 0, 0]).unwrap();
        assert_eq!(q.facet_count(), 1);

        // chain of two summands
        let q = synthesize(3, &[0, 0, 1, 1]).unwrap();
        let betti = reduced_betti(&q, FieldSpec::Rationals).unwrap();
        assert_eq!(
            betti,
            BettiVector::new(3, FieldSpec::Rationals, vec![0, 0, 1, 1]).unwrap()
        );
        let hp = h_prime(&h_from_f(&f_vector(&q)).unwrap(), &betti).unwrap();
        assert_eq!(hp, HPrimeVector::from_i64s(3, &[1, 0, 3, 1]).unwrap());
    }

    #[test]
    fn synthesize_guards() {
        assert!(matches!(
            synthesize(3, &[1, 0, 0, 0]),
            Err(ConstructError::NonzeroBettiAtEmptyDegree)
        ));
        assert!(matches!(
            synthesize(3, &[0, 0]),
            Err(ConstructError::BettiShape { .. })
        ));
        let minimal = minimal_hprime(3, &[0, 0, 1, 0]).unwrap();
        let mut surplus: Vec<BigInt> = minimal.entries().to_vec();
        surplus[1] += 1;
        assert!(matches!(
            synthesize_with_hprime(3, &[0, 0, 1, 0], &surplus),
            Err(ConstructError::HPrimeSurplus { j: 1, .. })
        ));
        let ok = synthesize_with_hprime(3, &[0, 0, 1, 0], &minimal.entries().to_vec()).unwrap();
        assert_eq!(ok, xkd(1, 3).unwrap());
    }
}
