//! Graphical shellings of colored multigraphs and CW shellings of the
//! associated cell complexes.
//!
//! For an ordering `F_1, ..., F_r` of the vertices of `G`, the family of color
//! sets that separate `F_i` from all earlier vertices (every path must use one
//! of the colors) is upward closed. The ordering is a graphical shelling when
//! each step has a unique minimal separating set `R(F_i)`; the sizes `|R(F_i)|`
//! then histogram into the h-vector of the complex built from `G`.

use std::collections::HashSet;

use num_bigint::BigInt;
use thiserror::Error;

use crate::color::{Color, ColorSet};
use crate::complex::CellComplex;
use crate::graph::ColoredMultigraph;
use crate::invariants::HVector;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum ShellingError {
    #[error("unknown vertex or facet `{0}` in ordering")]
    UnknownName(String),
    #[error("ordering is not a permutation: `{0}` repeats or something is missing")]
    NotAPermutation(String),
    #[error("index {i} out of range 1..={n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge color {0} lies outside the declared color universe")]
    ColorOutsideUniverse(Color),
}

/// A verified shelling certificate: the ordering, one restriction set per
/// step, and the color universe of the complex the ordering shells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingCertificate {
    pub order: Vec<String>,
    pub restrictions: Vec<ColorSet>,
    pub colors: ColorSet,
}

impl ShellingCertificate {
    /// `h_j = |{ i : |R(F_i)| = j }|` for `j = 0..=rank`.
    pub fn h_vector(&self) -> HVector {
        let d = self.colors.len();
        let mut counts = vec![BigInt::from(0); d as usize + 1];
        for r in &self.restrictions {
            counts[r.len() as usize] += 1;
        }
        HVector::new(d, counts).expect("histogram has d+1 buckets")
    }
}

/// Histogram the restriction-set sizes of a certificate into an h-vector.
pub fn h_from_shelling(cert: &ShellingCertificate) -> HVector {
    cert.h_vector()
}

/// True iff every path from `start` to a vertex marked in `earlier` uses at
/// least one edge colored in `cut`.
fn separates(g: &ColoredMultigraph, earlier: &[bool], start: usize, cut: ColorSet) -> bool {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in g.edges() {
        if !cut.contains(e.color) {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
    }
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        if earlier[v] {
            return false;
        }
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    true
}

fn earlier_marks(order: &[usize], i: usize, n: usize) -> (Vec<bool>, usize) {
    let mut earlier = vec![false; n];
    for &v in &order[..i - 1] {
        earlier[v] = true;
    }
    (earlier, order[i - 1])
}

/// The unique minimal separating color set for step `i` (1-based) of the
/// ordering, or `None` when no unique minimal element exists.
///
/// Fast path: by upward closure the intersection of all separating sets is
/// `T = { c : the earlier vertices stay reachable using color c alone }`, and
/// a unique minimal element exists iff `T` itself separates.
pub fn separating_family_min(
    g: &ColoredMultigraph,
    order: &[usize],
    i: usize,
) -> Result<Option<ColorSet>, ShellingError> {
    check_order_indices(g, order)?;
    if i < 1 || i > order.len() {
        return Err(ShellingError::IndexOutOfRange { i, n: order.len() });
    }
    if i == 1 {
        return Ok(Some(ColorSet::EMPTY));
    }
    let (earlier, start) = earlier_marks(order, i, g.vertex_count());
    let mut t = ColorSet::EMPTY;
    for c in 1..=g.d() {
        let only_c = ColorSet::full(g.d()).without(c);
        if !separates(g, &earlier, start, only_c) {
            t = t.with(c);
        }
    }
    if separates(g, &earlier, start, t) {
        Ok(Some(t))
    } else {
        Ok(None)
    }
}

/// Brute-force oracle for [`separating_family_min`]: enumerate all `2^d`
/// color sets and inspect the minimal elements directly.
pub fn separating_family_min_brute(
    g: &ColoredMultigraph,
    order: &[usize],
    i: usize,
) -> Result<Option<ColorSet>, ShellingError> {
    check_order_indices(g, order)?;
    if i < 1 || i > order.len() {
        return Err(ShellingError::IndexOutOfRange { i, n: order.len() });
    }
    if i == 1 {
        return Ok(Some(ColorSet::EMPTY));
    }
    let (earlier, start) = earlier_marks(order, i, g.vertex_count());
    let family: Vec<ColorSet> = ColorSet::all_subsets(g.d())
        .filter(|&s| separates(g, &earlier, start, s))
        .collect();
    let in_family: HashSet<u32> = family.iter().map(|s| s.bits()).collect();
    // the family is upward closed, so minimality only needs one-color drops
    let minimal: Vec<ColorSet> = family
        .iter()
        .copied()
        .filter(|s| s.iter().all(|c| !in_family.contains(&s.without(c).bits())))
        .collect();
    Ok(if minimal.len() == 1 {
        Some(minimal[0])
    } else {
        None
    })
}

fn check_order_indices(g: &ColoredMultigraph, order: &[usize]) -> Result<(), ShellingError> {
    let n = g.vertex_count();
    if order.len() != n {
        return Err(ShellingError::NotAPermutation(format!(
            "{} of {} vertices listed",
            order.len(),
            n
        )));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(ShellingError::NotAPermutation(
                g.vertex_name(v.min(n - 1)).to_string(),
            ));
        }
        seen[v] = true;
    }
    Ok(())
}

fn resolve_order(
    names: &[String],
    lookup: impl Fn(&str) -> Option<usize>,
) -> Result<Vec<usize>, ShellingError> {
    names
        .iter()
        .map(|name| lookup(name).ok_or_else(|| ShellingError::UnknownName(name.clone())))
        .collect()
}

/// Check a vertex ordering for the graphical-shelling property over the full
/// color universe `1..=d`.
pub fn is_graphical_shelling(
    g: &ColoredMultigraph,
    order: &[String],
) -> Result<Option<ShellingCertificate>, ShellingError> {
    is_graphical_shelling_on(g, order, ColorSet::full(g.d()))
}

/// Same, but with an explicit color universe: the certificate then describes a
/// shelling of the complex built over `colors` (a vertex link, for instance,
/// lives over the universe with one color deleted).
pub fn is_graphical_shelling_on(
    g: &ColoredMultigraph,
    order: &[String],
    colors: ColorSet,
) -> Result<Option<ShellingCertificate>, ShellingError> {
    if let Some(e) = g.edges().iter().find(|e| !colors.contains(e.color)) {
        return Err(ShellingError::ColorOutsideUniverse(e.color));
    }
    let idx = resolve_order(order, |name| g.vertex_index(name))?;
    check_order_indices(g, &idx)?;
    if !g.is_connected() {
        return Err(ShellingError::Disconnected);
    }
    let mut restrictions = Vec::with_capacity(order.len());
    for i in 1..=idx.len() {
        match separating_family_min(g, &idx, i)? {
            Some(r) => restrictions.push(r),
            None => return Ok(None),
        }
    }
    Ok(Some(ShellingCertificate {
        order: order.to_vec(),
        restrictions,
        colors,
    }))
}

/// CW-shelling check on the facet ordering of a cell complex: for every facet
/// after the first, the part of its boundary already covered by earlier
/// facets must be nonempty and pure of codimension one inside the facet.
/// Rank-1 complexes are shellable by every ordering.
pub fn is_cw_shelling(p: &CellComplex, order: &[String]) -> Result<bool, ShellingError> {
    let idx = resolve_order(order, |name| p.facet_index(name))?;
    let n = p.facet_count();
    if idx.len() != n {
        return Err(ShellingError::NotAPermutation(format!(
            "{} of {n} facets listed",
            idx.len()
        )));
    }
    let mut used = vec![false; n];
    for &f in &idx {
        if used[f] {
            return Err(ShellingError::NotAPermutation(p.facet_name(f).to_string()));
        }
        used[f] = true;
    }
    let d = p.d();
    if d == 1 {
        return Ok(true);
    }
    let full = ColorSet::full(d);
    let proper_masks: Vec<ColorSet> = ColorSet::all_subsets(d)
        .filter(|m| !m.is_empty() && m.len() < d)
        .collect();
    let mut seen: HashSet<crate::complex::FaceId> = HashSet::new();
    for (step, &f) in idx.iter().enumerate() {
        if step > 0 {
            let mut hit_any = false;
            let mut ok = true;
            for &mask in &proper_masks {
                let face = p.face_of(f, mask);
                if !seen.contains(&face) {
                    continue;
                }
                hit_any = true;
                if mask.len() < d - 1 {
                    // the face must sit under a ridge that is also shared
                    let covered = full.minus(mask).iter().any(|c| {
                        let t = full.without(c);
                        t.len() == d - 1 && seen.contains(&p.face_of(f, t))
                    });
                    if !covered {
                        ok = false;
                        break;
                    }
                }
            }
            if !hit_any || !ok {
                return Ok(false);
            }
        }
        for &mask in &proper_masks {
            seen.insert(p.face_of(f, mask));
        }
    }
    Ok(true)
}

/// Small-scale search utility: find some graphical shelling by greedy
/// extension with backtracking, trying vertices in index order.
pub fn find_graphical_shelling(
    g: &ColoredMultigraph,
) -> Result<Option<ShellingCertificate>, ShellingError> {
    if !g.is_connected() {
        return Err(ShellingError::Disconnected);
    }
    let n = g.vertex_count();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let mut restrictions: Vec<ColorSet> = Vec::with_capacity(n);
    let mut used = vec![false; n];

    fn extend(
        g: &ColoredMultigraph,
        chosen: &mut Vec<usize>,
        restrictions: &mut Vec<ColorSet>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = g.vertex_count();
        if chosen.len() == n {
            return true;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            chosen.push(v);
            used[v] = true;
            let step = chosen.len();
            let r = step_min(g, chosen, step);
            if let Some(r) = r {
                restrictions.push(r);
                if extend(g, chosen, restrictions, used) {
                    return true;
                }
                restrictions.pop();
            }
            chosen.pop();
            used[v] = false;
        }
        false
    }

    // same computation as separating_family_min but on a prefix ordering
    fn step_min(g: &ColoredMultigraph, prefix: &[usize], i: usize) -> Option<ColorSet> {
        if i == 1 {
            return Some(ColorSet::EMPTY);
        }
        let mut earlier = vec![false; g.vertex_count()];
        for &v in &prefix[..i - 1] {
            earlier[v] = true;
        }
        let start = prefix[i - 1];
        let mut t = ColorSet::EMPTY;
        for c in 1..=g.d() {
            if !separates(g, &earlier, start, ColorSet::full(g.d()).without(c)) {
                t = t.with(c);
            }
        }
        if separates(g, &earlier, start, t) {
            Some(t)
        } else {
            None
        }
    }

    if extend(g, &mut chosen, &mut restrictions, &mut used) {
        Ok(Some(ShellingCertificate {
            order: chosen
                .iter()
                .map(|&v| g.vertex_name(v).to_string())
                .collect(),
            restrictions,
            colors: ColorSet::full(g.d()),
        }))
    } else {
        Ok(None)
    }
}
