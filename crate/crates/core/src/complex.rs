//! Balanced simplicial cell complexes of rank `d`.
//!
//! A complex is stored as its list of facets (rank-`d` cells) together with,
//! for every color set `S ⊆ {1..d}`, a partition of the facets: two facets lie
//! in the same block exactly when their faces with vertex colors `S` are
//! identified. The face of facet `f` with colors `S` is written `(f, S)`; the
//! pair (block, `S`) is a face class. This representation forces color
//! consistency (a class never mixes two color sets) and makes every lower
//! interval Boolean, so the face poset is simplicial by construction.
//!
//! Identifications must be downward closed: `(f,S) ≡ (g,S)` implies
//! `(f,S') ≡ (g,S')` for every `S' ⊆ S`. Constructors establish closure
//! themselves; [`CellComplex::validate`] re-checks it on arbitrary data.

use std::collections::HashMap;

use thiserror::Error;

use crate::color::{Color, ColorSet, MAX_RANK};
use crate::graph::{ColoredMultigraph, UnionFind};

/// A face class: the canonical representative is the smallest facet index
/// whose `(facet, colors)` pair lies in the class.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FaceId {
    mask: ColorSet,
    rep: u32,
}

impl FaceId {
    pub fn colors(&self) -> ColorSet {
        self.mask
    }

    /// Rank = number of vertex colors; dimension is `rank - 1`.
    pub fn rank(&self) -> u8 {
        self.mask.len()
    }

    pub fn dimension(&self) -> i32 {
        self.rank() as i32 - 1
    }

    /// Index of the canonical representative facet.
    pub fn rep(&self) -> usize {
        self.rep as usize
    }
}

/// A declared identification `(facet_a, colors) ≡ (facet_b, colors)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identification {
    pub facet_a: String,
    pub colors_a: ColorSet,
    pub facet_b: String,
    pub colors_b: ColorSet,
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum ComplexError {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("rank {0} exceeds the supported maximum {MAX_RANK}")]
    RankTooLarge(u16),
    #[error("a complex must have at least one facet")]
    EmptyComplex,
    #[error("graph is disconnected; assemble disconnected complexes with disjoint_union")]
    Disconnected,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(u8, u8),
    #[error("duplicate facet identifier `{0}`")]
    DuplicateFacet(String),
    #[error("unknown facet `{0}`")]
    UnknownFacet(String),
    #[error("rank {rank} out of range 0..={d}")]
    RankOutOfRange { rank: u8, d: u8 },
    #[error("face is not a class of this complex")]
    FaceNotInComplex,
    #[error(
        "color consistency violation: identification of `{facet_a}` {colors_a} with `{facet_b}` {colors_b} mixes two color sets"
    )]
    ColorConsistency {
        facet_a: String,
        colors_a: ColorSet,
        facet_b: String,
        colors_b: ColorSet,
    },
    #[error("colors {colors} not contained in 1..={d}")]
    ColorsOutOfRange { colors: ColorSet, d: u8 },
}

/// First violation found by [`CellComplex::validate`].
#[derive(Error, Debug, PartialEq, Eq)]
pub enum ValidationError {
    #[error("complex has no facets")]
    NoFacets,
    #[error("partition table has the wrong shape")]
    BadShape,
    #[error("partition at colors {colors} is not in canonical (min-representative) form")]
    NotCanonical { colors: ColorSet },
    #[error(
        "minimal element is not unique: facets {a} and {b} are separated at the empty color set"
    )]
    MinimalElementNotUnique { a: usize, b: usize },
    #[error("facets {a} and {b} are identified at the full color set but kept as distinct facets")]
    FacetClassesMerged { a: usize, b: usize },
    #[error(
        "downward closure violated: facets {a} and {b} are identified at {colors} but not at {sub}"
    )]
    DownwardClosure {
        a: usize,
        b: usize,
        colors: ColorSet,
        sub: ColorSet,
    },
}

/// A balanced simplicial cell complex; see the module docs for the encoding.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellComplex {
    pub(crate) d: Color,
    pub(crate) facets: Vec<String>,
    /// `partitions[mask.bits()][f]` = smallest facet index in the class of `(f, mask)`.
    pub(crate) partitions: Vec<Vec<u32>>,
}

impl CellComplex {
    /// A single `(d-1)`-simplex: one facet, no identifications.
    pub fn simplex(d: Color, facet_name: &str) -> Result<CellComplex, ComplexError> {
        check_rank(d)?;
        Ok(CellComplex {
            d,
            facets: vec![facet_name.to_string()],
            partitions: vec![vec![0]; 1 << d],
        })
    }

    /// The complex `P(G)` of a connected edge-colored multigraph: facets are the
    /// vertices of `G`, and `(f, S) ≡ (g, S)` exactly when `f` and `g` lie in the
    /// same component of `G` with all edges colored in `S` removed.
    pub fn from_graph(g: &ColoredMultigraph) -> Result<CellComplex, ComplexError> {
        Self::from_graph_on_colors(g, ColorSet::full(g.d()))
    }

    /// Same as [`CellComplex::from_graph`] but over a sub-universe of colors:
    /// the result has rank `|universe|`, with new color `j` standing for the
    /// `j`-th smallest color of `universe`. Edges colored outside `universe`
    /// are ignored. This realizes vertex links of `P(G)` directly from the
    /// color-restricted graph.
    pub fn from_graph_on_colors(
        g: &ColoredMultigraph,
        universe: ColorSet,
    ) -> Result<CellComplex, ComplexError> {
        if !universe.is_subset_of(ColorSet::full(g.d())) {
            return Err(ComplexError::ColorsOutOfRange {
                colors: universe,
                d: g.d(),
            });
        }
        let d = universe.len();
        check_rank(d)?;
        if g.vertex_count() == 0 {
            return Err(ComplexError::EmptyComplex);
        }
        if !g.component_partition(universe).iter().all(|&r| r == 0) {
            return Err(ComplexError::Disconnected);
        }
        let old_colors: Vec<Color> = universe.iter().collect();
        let mut partitions = Vec::with_capacity(1 << d);
        for mask in ColorSet::all_subsets(d) {
            // face colors `mask` survive exactly the edges colored outside them
            let mut allowed = universe;
            for j in mask.iter() {
                allowed = allowed.without(old_colors[(j - 1) as usize]);
            }
            partitions.push(g.component_partition(allowed));
        }
        Ok(CellComplex {
            d,
            facets: g.vertices().to_vec(),
            partitions,
        })
    }

    /// Assemble a complex from facet names and declared identifications,
    /// applying downward closure. Rejects identifications whose two sides
    /// carry different color sets.
    pub fn from_identifications(
        d: Color,
        facets: Vec<String>,
        idents: &[Identification],
    ) -> Result<CellComplex, ComplexError> {
        check_rank(d)?;
        if facets.is_empty() {
            return Err(ComplexError::EmptyComplex);
        }
        let mut index = HashMap::new();
        for (i, name) in facets.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(ComplexError::DuplicateFacet(name.clone()));
            }
        }
        let n = facets.len();
        let mut ufs: Vec<UnionFind> = (0..(1usize << d)).map(|_| UnionFind::new(n)).collect();
        // the empty face of every facet is the unique minimal element
        for i in 1..n {
            ufs[0].union(0, i);
        }
        for ident in idents {
            if ident.colors_a != ident.colors_b {
                return Err(ComplexError::ColorConsistency {
                    facet_a: ident.facet_a.clone(),
                    colors_a: ident.colors_a,
                    facet_b: ident.facet_b.clone(),
                    colors_b: ident.colors_b,
                });
            }
            let colors = ident.colors_a;
            if !colors.is_subset_of(ColorSet::full(d)) {
                return Err(ComplexError::ColorsOutOfRange { colors, d });
            }
            let a = *index
                .get(&ident.facet_a)
                .ok_or_else(|| ComplexError::UnknownFacet(ident.facet_a.clone()))?;
            let b = *index
                .get(&ident.facet_b)
                .ok_or_else(|| ComplexError::UnknownFacet(ident.facet_b.clone()))?;
            for sub in colors.subsets() {
                ufs[sub.bits() as usize].union(a, b);
            }
        }
        Ok(collapse_and_build(d, facets, ufs))
    }

    /// Disjoint union: facets concatenated, no identifications across the two
    /// summands except the shared minimal element.
    pub fn disjoint_union(&self, other: &CellComplex) -> Result<CellComplex, ComplexError> {
        if self.d != other.d {
            return Err(ComplexError::RankMismatch(self.d, other.d));
        }
        let mut facets = self.facets.clone();
        for name in &other.facets {
            if self.facets.contains(name) {
                return Err(ComplexError::DuplicateFacet(name.clone()));
            }
            facets.push(name.clone());
        }
        let n1 = self.facets.len() as u32;
        let n = facets.len();
        let mut partitions = Vec::with_capacity(1 << self.d);
        for mask in ColorSet::all_subsets(self.d) {
            let bits = mask.bits() as usize;
            let mut row = Vec::with_capacity(n);
            if mask.is_empty() {
                row.resize(n, 0);
            } else {
                row.extend_from_slice(&self.partitions[bits]);
                row.extend(other.partitions[bits].iter().map(|&r| r + n1));
            }
            partitions.push(row);
        }
        Ok(CellComplex {
            d: self.d,
            facets,
            partitions,
        })
    }

    /// Glue two complexes by identifying facet `facet_a` of `self` with facet
    /// `facet_b` of `other`, matching vertices by color. The identified facet
    /// keeps the name `facet_a`, so the result has
    /// `f_{d-1} = f_{d-1}(self) + f_{d-1}(other) - 1` facets.
    pub fn glue_facets(
        &self,
        facet_a: &str,
        other: &CellComplex,
        facet_b: &str,
    ) -> Result<CellComplex, ComplexError> {
        if self.d != other.d {
            return Err(ComplexError::RankMismatch(self.d, other.d));
        }
        let fa = self
            .facet_index(facet_a)
            .ok_or_else(|| ComplexError::UnknownFacet(facet_a.to_string()))?;
        let fb = other
            .facet_index(facet_b)
            .ok_or_else(|| ComplexError::UnknownFacet(facet_b.to_string()))?;
        let mut facets = self.facets.clone();
        for name in &other.facets {
            if self.facets.contains(name) {
                return Err(ComplexError::DuplicateFacet(name.clone()));
            }
            facets.push(name.clone());
        }
        let n1 = self.facets.len();
        let n = facets.len();
        let mut ufs = Vec::with_capacity(1 << self.d);
        for mask in ColorSet::all_subsets(self.d) {
            let bits = mask.bits() as usize;
            let mut uf = UnionFind::new(n);
            for (i, &r) in self.partitions[bits].iter().enumerate() {
                uf.union(i, r as usize);
            }
            for (i, &r) in other.partitions[bits].iter().enumerate() {
                uf.union(n1 + i, n1 + r as usize);
            }
            uf.union(fa, n1 + fb);
            ufs.push(uf);
        }
        Ok(collapse_and_build(self.d, facets, ufs))
    }

    pub fn d(&self) -> Color {
        self.d
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn facet_names(&self) -> &[String] {
        &self.facets
    }

    pub fn facet_name(&self, i: usize) -> &str {
        &self.facets[i]
    }

    pub fn facet_index(&self, name: &str) -> Option<usize> {
        self.facets.iter().position(|f| f == name)
    }

    /// The class of the face of facet `f` carrying exactly the colors `mask`.
    pub fn face_of(&self, facet: usize, mask: ColorSet) -> FaceId {
        FaceId {
            mask,
            rep: self.partitions[mask.bits() as usize][facet],
        }
    }

    /// The unique minimal element (the empty face).
    pub fn zero_hat(&self) -> FaceId {
        FaceId {
            mask: ColorSet::EMPTY,
            rep: 0,
        }
    }

    /// All rank-`r` face classes, in deterministic order: color sets by
    /// ascending bitmask, then representatives ascending.
    pub fn faces(&self, r: u8) -> Result<Vec<FaceId>, ComplexError> {
        if r > self.d {
            return Err(ComplexError::RankOutOfRange { rank: r, d: self.d });
        }
        let mut out = Vec::new();
        for mask in ColorSet::all_subsets(self.d) {
            if mask.len() != r {
                continue;
            }
            let row = &self.partitions[mask.bits() as usize];
            for (i, &rep) in row.iter().enumerate() {
                if rep as usize == i {
                    out.push(FaceId { mask, rep });
                }
            }
        }
        Ok(out)
    }

    /// All atoms (rank-1 faces).
    pub fn atoms(&self) -> Vec<FaceId> {
        self.faces(1).expect("rank 1 is always valid")
    }

    /// Number of facets containing the face, i.e. the size of its class.
    pub fn class_size(&self, face: FaceId) -> usize {
        self.partitions[face.mask.bits() as usize]
            .iter()
            .filter(|&&r| r == face.rep)
            .count()
    }

    /// Indices of the facets containing the face, ascending.
    pub fn class_members(&self, face: FaceId) -> Vec<usize> {
        self.partitions[face.mask.bits() as usize]
            .iter()
            .enumerate()
            .filter(|(_, &r)| r == face.rep)
            .map(|(i, _)| i)
            .collect()
    }

    /// Face order: `x ≤ y` iff the colors of `x` are contained in those of `y`
    /// and the `colors(x)`-face of `y` is `x`.
    pub fn face_le(&self, x: FaceId, y: FaceId) -> bool {
        x.mask.is_subset_of(y.mask)
            && self.partitions[x.mask.bits() as usize][y.rep as usize] == x.rep
    }

    fn contains_face(&self, face: FaceId) -> bool {
        face.mask.is_subset_of(ColorSet::full(self.d))
            && (face.rep as usize) < self.facets.len()
            && self.partitions[face.mask.bits() as usize][face.rep as usize] == face.rep
    }

    /// The link of a face: all faces above it, re-ranked so the link has rank
    /// `d - rank(face)`; remaining colors are renumbered order-preservingly
    /// onto `1..=d'`. Facet names are preserved.
    pub fn link(&self, face: FaceId) -> Result<CellComplex, ComplexError> {
        if !self.contains_face(face) {
            return Err(ComplexError::FaceNotInComplex);
        }
        let t = face.mask;
        let dd = self.d - t.len();
        let rest: Vec<Color> = ColorSet::full(self.d).minus(t).iter().collect();
        let members: Vec<usize> = self.class_members(face);
        let facets: Vec<String> = members.iter().map(|&i| self.facets[i].clone()).collect();
        let mut partitions = Vec::with_capacity(1 << dd);
        for mask in ColorSet::all_subsets(dd) {
            let mut old_mask = t;
            for j in mask.iter() {
                old_mask = old_mask.with(rest[(j - 1) as usize]);
            }
            let old_row = &self.partitions[old_mask.bits() as usize];
            let mut first_seen: HashMap<u32, u32> = HashMap::new();
            let mut row = Vec::with_capacity(members.len());
            for (new_i, &old_i) in members.iter().enumerate() {
                let root = old_row[old_i];
                let rep = *first_seen.entry(root).or_insert(new_i as u32);
                row.push(rep);
            }
            partitions.push(row);
        }
        Ok(CellComplex {
            d: dd,
            facets,
            partitions,
        })
    }

    /// Clone with every facet name prefixed; used to keep names unique before
    /// disjoint unions and gluings.
    pub fn prefix_facets(&self, prefix: &str) -> CellComplex {
        CellComplex {
            d: self.d,
            facets: self.facets.iter().map(|f| format!("{prefix}{f}")).collect(),
            partitions: self.partitions.clone(),
        }
    }

    /// Check the structural invariants, returning the first violation:
    /// canonical partition tables, a unique minimal element, facets kept
    /// distinct, and downward closure of identifications. Purity holds by
    /// construction (every facet has rank `d`), so it is not re-derived here.
    pub fn validate(&self) -> Result<(), ValidationError> {
        let n = self.facets.len();
        if n == 0 {
            return Err(ValidationError::NoFacets);
        }
        if self.partitions.len() != 1usize << self.d {
            return Err(ValidationError::BadShape);
        }
        for mask in ColorSet::all_subsets(self.d) {
            let row = &self.partitions[mask.bits() as usize];
            if row.len() != n {
                return Err(ValidationError::BadShape);
            }
            for (i, &rep) in row.iter().enumerate() {
                let ok = (rep as usize) < n && rep as usize <= i && row[rep as usize] == rep;
                if !ok {
                    return Err(ValidationError::NotCanonical { colors: mask });
                }
            }
        }
        for (i, &rep) in self.partitions[0].iter().enumerate() {
            if rep != 0 {
                return Err(ValidationError::MinimalElementNotUnique { a: 0, b: i });
            }
        }
        let full = ColorSet::full(self.d).bits() as usize;
        for (i, &rep) in self.partitions[full].iter().enumerate() {
            if rep as usize != i {
                return Err(ValidationError::FacetClassesMerged {
                    a: rep as usize,
                    b: i,
                });
            }
        }
        // one-color steps suffice: closure for general subsets follows by induction
        for mask in ColorSet::all_subsets(self.d) {
            if mask.is_empty() {
                continue;
            }
            let row = &self.partitions[mask.bits() as usize];
            for c in mask.iter() {
                let sub = mask.without(c);
                let sub_row = &self.partitions[sub.bits() as usize];
                for (i, &rep) in row.iter().enumerate() {
                    if sub_row[i] != sub_row[rep as usize] {
                        return Err(ValidationError::DownwardClosure {
                            a: rep as usize,
                            b: i,
                            colors: mask,
                            sub,
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_rank(d: Color) -> Result<(), ComplexError> {
    if d == 0 {
        Err(ComplexError::ZeroRank)
    } else if d > MAX_RANK {
        Err(ComplexError::RankTooLarge(d as u16))
    } else {
        Ok(())
    }
}

/// Canonicalize per-mask union-find tables into a complex, collapsing ground
/// facets that were identified at the full color set (as happens when gluing).
fn collapse_and_build(d: Color, facets: Vec<String>, mut ufs: Vec<UnionFind>) -> CellComplex {
    let n = facets.len();
    let full = (1usize << d) - 1;
    let full_labels = ufs[full].min_labels();
    let mut new_index = vec![u32::MAX; n];
    let mut kept_names = Vec::new();
    let mut kept_old = Vec::new();
    for i in 0..n {
        if full_labels[i] as usize == i {
            new_index[i] = kept_old.len() as u32;
            kept_old.push(i);
            kept_names.push(facets[i].clone());
        }
    }
    let m = kept_old.len();
    let mut partitions = Vec::with_capacity(1 << d);
    for uf in ufs.iter_mut() {
        let labels = uf.min_labels();
        let mut first_seen: HashMap<u32, u32> = HashMap::new();
        let mut row = Vec::with_capacity(m);
        for (new_i, &old_i) in kept_old.iter().enumerate() {
            let root = labels[old_i];
            let rep = *first_seen.entry(root).or_insert(new_i as u32);
            row.push(rep);
        }
        partitions.push(row);
    }
    CellComplex {
        d,
        facets: kept_names,
        partitions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_g, xkd};

    fn parallel_graph(d: Color) -> ColoredMultigraph {
        let edges: Vec<(String, String, Color)> = (1..=d)
            .map(|c| ("a".to_string(), "b".to_string(), c))
            .collect();
        ColoredMultigraph::new(d, vec!["a".into(), "b".into()], &edges).unwrap()
    }

    #[test]
    fn single_simplex_face_counts() {
        let p = CellComplex::simplex(4, "s").unwrap();
        let binom = [1usize, 4, 6, 4, 1];
        for r in 0..=4u8 {
            assert_eq!(p.faces(r).unwrap().len(), binom[r as usize]);
        }
        assert!(p.validate().is_ok());
        let single = ColoredMultigraph::new(4, vec!["s".into()], &[]).unwrap();
        assert_eq!(CellComplex::from_graph(&single).unwrap(), p);

        let t = CellComplex::simplex(3, "t").unwrap();
        assert_eq!(t.faces(2).unwrap().len(), 3);
        assert!(matches!(
            t.faces(4),
            Err(ComplexError::RankOutOfRange { rank: 4, d: 3 })
        ));
    }

    #[test]
    fn p_of_g13_face_counts() {
        let p = CellComplex::from_graph(&build_g(1, 3).unwrap()).unwrap();
        assert!(p.validate().is_ok());
        assert_eq!(p.facet_count(), 3);
        let counts: Vec<usize> = (0..=3u8).map(|r| p.faces(r).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 3, 6, 3]);
        // one vertex per color
        for c in 1..=3 {
            let atoms: Vec<_> = p
                .atoms()
                .into_iter()
                .filter(|a| a.colors() == ColorSet::singleton(c))
                .collect();
            assert_eq!(atoms.len(), 1);
        }
    }

    #[test]
    fn two_simplices_identified_along_boundaries() {
        let d = 3;
        let p = CellComplex::from_graph(&parallel_graph(d)).unwrap();
        assert!(p.validate().is_ok());
        assert_eq!(p.facet_count(), 2);
        for r in 0..d {
            for face in p.faces(r).unwrap() {
                assert_eq!(p.class_size(face), 2, "proper face class at rank {r}");
            }
        }
        for face in p.faces(d).unwrap() {
            assert_eq!(p.class_size(face), 1);
        }
    }

    #[test]
    fn disconnected_graphs_are_rejected() {
        let g = ColoredMultigraph::new(2, vec!["a".into(), "b".into()], &[]).unwrap();
        assert_eq!(CellComplex::from_graph(&g), Err(ComplexError::Disconnected));
    }

    #[test]
    fn boolean_lower_intervals() {
        for p in [
            CellComplex::from_graph(&build_g(1, 3).unwrap()).unwrap(),
            CellComplex::from_graph(&build_g(2, 4).unwrap()).unwrap(),
        ] {
            let mut all = Vec::new();
            for r in 0..=p.d() {
                all.extend(p.faces(r).unwrap());
            }
            for &y in &all {
                let below = all.iter().filter(|&&x| p.face_le(x, y)).count();
                assert_eq!(below, 1usize << y.rank());
            }
        }
    }

    #[test]
    fn link_of_atom_matches_restricted_graph() {
        let g = build_g(1, 3).unwrap();
        let p = CellComplex::from_graph(&g).unwrap();
        let atom = p
            .atoms()
            .into_iter()
            .find(|a| a.colors() == ColorSet::singleton(2))
            .unwrap();
        let link = p.link(atom).unwrap();
        assert_eq!(link.d(), 2);
        assert_eq!(link.facet_count(), 3);
        let expected = CellComplex::from_graph_on_colors(
            &g.restrict(ColorSet::from_colors([1, 3])).unwrap(),
            ColorSet::from_colors([1, 3]),
        )
        .unwrap();
        assert_eq!(link, expected);
    }

    #[test]
    fn link_identity_and_simplex_links() {
        let p = CellComplex::from_graph(&build_g(1, 3).unwrap()).unwrap();
        assert_eq!(p.link(p.zero_hat()).unwrap(), p);

        let s = CellComplex::simplex(3, "s").unwrap();
        let v = s.atoms()[0];
        let l = s.link(v).unwrap();
        assert_eq!(l, CellComplex::simplex(2, "s").unwrap());

        // a face id from a bigger complex is rejected
        let foreign = p.face_of(2, ColorSet::full(3));
        assert_eq!(s.link(foreign), Err(ComplexError::FaceNotInComplex));
    }

    #[test]
    fn links_compose() {
        let p = CellComplex::from_graph(&build_g(2, 5).unwrap()).unwrap();
        for pair in p.faces(2).unwrap() {
            let direct = p.link(pair).unwrap();
            let colors: Vec<Color> = pair.colors().iter().collect();
            let v = p.face_of(pair.rep(), ColorSet::singleton(colors[0]));
            let l1 = p.link(v).unwrap();
            // locate the second vertex inside the re-colored link
            let rest: Vec<Color> = ColorSet::full(p.d()).minus(v.colors()).iter().collect();
            let new_c = rest.iter().position(|&c| c == colors[1]).unwrap() as Color + 1;
            let member = l1
                .facet_index(p.facet_name(pair.rep()))
                .expect("representative facet survives into the link");
            let w = l1.face_of(member, ColorSet::singleton(new_c));
            assert_eq!(l1.link(w).unwrap(), direct);
        }
    }

    #[test]
    fn disjoint_union_shape() {
        let a = CellComplex::simplex(3, "s1").unwrap();
        let b = CellComplex::simplex(3, "s2").unwrap();
        let u = a.disjoint_union(&b).unwrap();
        assert!(u.validate().is_ok());
        assert_eq!(u.facet_count(), 2);
        assert_eq!(u.faces(1).unwrap().len(), 6);
        assert_eq!(
            a.disjoint_union(&CellComplex::simplex(2, "t").unwrap()),
            Err(ComplexError::RankMismatch(3, 2))
        );
        assert_eq!(
            a.disjoint_union(&a),
            Err(ComplexError::DuplicateFacet("s1".into()))
        );
    }

    #[test]
    fn glue_two_simplices_along_a_facet() {
        let d = 4;
        let a = CellComplex::simplex(d, "s1").unwrap();
        let b = CellComplex::simplex(d, "s2").unwrap();
        let q = a.glue_facets("s1", &b, "s2").unwrap();
        assert!(q.validate().is_ok());
        assert_eq!(q.faces(d).unwrap().len(), 1);
        let q = {
            // gluing along one ridge instead: two facets sharing a single ridge
            // is not expressible here (glue identifies whole facets); instead
            // check the facet-count law on a nontrivial pair
            let x = xkd(1, 3).unwrap().prefix_facets("a.");
            let y = xkd(2, 3).unwrap().prefix_facets("b.");
            x.glue_facets("a.alpha", &y, "b.alpha").unwrap()
        };
        assert!(q.validate().is_ok());
        assert_eq!(q.faces(3).unwrap().len(), 3 + 2 - 1);
    }

    #[test]
    fn glue_errors() {
        let a = CellComplex::simplex(3, "s1").unwrap();
        let b = CellComplex::simplex(3, "s2").unwrap();
        assert_eq!(
            a.glue_facets("nope", &b, "s2"),
            Err(ComplexError::UnknownFacet("nope".into()))
        );
        assert_eq!(
            a.glue_facets("s1", &CellComplex::simplex(2, "t").unwrap(), "t"),
            Err(ComplexError::RankMismatch(3, 2))
        );
    }

    #[test]
    fn identification_builder_and_color_consistency() {
        // two triangles sharing the edge with colors {1,2}: a disc with
        // f_(d-2) = 2d-1 ridges and one extra facet over the simplex
        let p = CellComplex::from_identifications(
            3,
            vec!["f".into(), "g".into()],
            &[Identification {
                facet_a: "f".into(),
                colors_a: ColorSet::from_colors([1, 2]),
                facet_b: "g".into(),
                colors_b: ColorSet::from_colors([1, 2]),
            }],
        )
        .unwrap();
        assert!(p.validate().is_ok());
        assert_eq!(p.faces(3).unwrap().len(), 2);
        assert_eq!(p.faces(2).unwrap().len(), 5);
        assert_eq!(p.faces(1).unwrap().len(), 4);
        let h = crate::invariants::h_from_f(&crate::invariants::f_vector(&p)).unwrap();
        assert_eq!(
            h,
            crate::invariants::HVector::from_i64s(3, &[1, 1, 0, 0]).unwrap()
        );

        let err = CellComplex::from_identifications(
            3,
            vec!["f".into(), "g".into()],
            &[Identification {
                facet_a: "f".into(),
                colors_a: ColorSet::from_colors([1, 2]),
                facet_b: "g".into(),
                colors_b: ColorSet::from_colors([1, 3]),
            }],
        );
        assert!(matches!(err, Err(ComplexError::ColorConsistency { .. })));
    }

    #[test]
    fn full_color_identification_merges_facets() {
        let p = CellComplex::from_identifications(
            2,
            vec!["f".into(), "g".into()],
            &[Identification {
                facet_a: "f".into(),
                colors_a: ColorSet::full(2),
                facet_b: "g".into(),
                colors_b: ColorSet::full(2),
            }],
        )
        .unwrap();
        assert_eq!(p.facet_count(), 1);
        assert_eq!(p, CellComplex::simplex(2, "f").unwrap());
    }

    #[test]
    fn validate_catches_broken_closure() {
        // hand-build a table where {1,2} identifies f,g but {1} does not
        let mut p = CellComplex::from_identifications(
            2,
            vec!["f".into(), "g".into()],
            &[Identification {
                facet_a: "f".into(),
                colors_a: ColorSet::from_colors([1, 2]),
                facet_b: "g".into(),
                colors_b: ColorSet::from_colors([1, 2]),
            }],
        )
        .unwrap();
        // the builder collapsed the two facets; rebuild a raw broken table instead
        p = CellComplex {
            d: 2,
            facets: vec!["f".into(), "g".into()],
            partitions: vec![
                vec![0, 0], // {}
                vec![0, 0], // {1} identified
                vec![0, 1], // {2} not identified -> fine
                vec![0, 1], // {1,2} distinct facets
            ],
        };
        assert!(p.validate().is_ok());
        p.partitions[1] = vec![0, 1];
        p.partitions[2] = vec![0, 0];
        // now (f,{2}) ≡ (g,{2}) would need closure at {} which holds, fine;
        // break closure instead: identify at {1,2} without {1}
        p.partitions[3] = vec![0, 0];
        let err = p.validate().unwrap_err();
        assert!(matches!(
            err,
            ValidationError::FacetClassesMerged { .. } | ValidationError::DownwardClosure { .. }
        ));
    }

    #[test]
    fn empty_complexes_are_rejected() {
        assert_eq!(
            CellComplex::from_identifications(3, vec![], &[]),
            Err(ComplexError::EmptyComplex)
        );
        assert_eq!(
            CellComplex::from_identifications(
                2,
                vec!["f".into()],
                &[Identification {
                    facet_a: "f".into(),
                    colors_a: ColorSet::singleton(1),
                    facet_b: "ghost".into(),
                    colors_b: ColorSet::singleton(1),
                }]
            ),
            Err(ComplexError::UnknownFacet("ghost".into()))
        );
    }

    #[test]
    fn every_face_has_rank_many_colors() {
        let p = CellComplex::from_graph(&build_g(2, 4).unwrap()).unwrap();
        for r in 0..=p.d() {
            for f in p.faces(r).unwrap() {
                assert_eq!(f.colors().len(), r);
                assert_eq!(f.rank(), r);
            }
        }
    }
}
