//! Finite multigraphs with edges colored in `1..=d`.
//!
//! The color-restriction and connected-component queries here define the face
//! structure of the cell complexes built in [`crate::complex`]: the faces with
//! color set `S` correspond to the components of the graph once every edge
//! colored in `S` is removed.

use std::collections::HashMap;

use thiserror::Error;

use crate::color::{Color, ColorSet, MAX_RANK};

/// An edge between vertex indices `u` and `v`, carrying one color.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub color: Color,
}

/// An edge-colored multigraph. Vertices are named; parallel edges (with equal
/// or distinct colors) are permitted, loops are not.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoredMultigraph {
    d: Color,
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum GraphError {
    #[error("number of colors must be at least 1")]
    ZeroColors,
    #[error("rank {0} exceeds the supported maximum {MAX_RANK}")]
    RankTooLarge(u16),
    #[error("duplicate vertex identifier `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("loop at vertex `{0}` is not allowed")]
    LoopEdge(String),
    #[error("edge color {color} outside 1..={d}")]
    ColorOutOfRange { color: Color, d: Color },
}

impl ColoredMultigraph {
    /// Build a graph from named vertices and `(u, v, color)` edge records.
    pub fn new(
        d: Color,
        vertices: Vec<String>,
        edges: &[(String, String, Color)],
    ) -> Result<Self, GraphError> {
        if d == 0 {
            return Err(GraphError::ZeroColors);
        }
        if d > MAX_RANK {
            return Err(GraphError::RankTooLarge(d as u16));
        }
        let mut index = HashMap::new();
        for (i, name) in vertices.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(name.clone()));
            }
        }
        let mut resolved = Vec::with_capacity(edges.len());
        for (u, v, color) in edges {
            let ui = *index
                .get(u)
                .ok_or_else(|| GraphError::UnknownVertex(u.clone()))?;
            let vi = *index
                .get(v)
                .ok_or_else(|| GraphError::UnknownVertex(v.clone()))?;
            if ui == vi {
                return Err(GraphError::LoopEdge(u.clone()));
            }
            if *color < 1 || *color > d {
                return Err(GraphError::ColorOutOfRange { color: *color, d });
            }
            resolved.push(Edge {
                u: ui,
                v: vi,
                color: *color,
            });
        }
        Ok(ColoredMultigraph {
            d,
            vertices,
            index,
            edges: resolved,
        })
    }

    pub fn d(&self) -> Color {
        self.d
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The restriction `G_S`: same vertices, only the edges whose color lies in `S`.
    pub fn restrict(&self, colors: ColorSet) -> Result<ColoredMultigraph, GraphError> {
        if let Some(c) = colors.iter().find(|&c| c > self.d) {
            return Err(GraphError::ColorOutOfRange {
                color: c,
                d: self.d,
            });
        }
        Ok(ColoredMultigraph {
            d: self.d,
            vertices: self.vertices.clone(),
            index: self.index.clone(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| colors.contains(e.color))
                .collect(),
        })
    }

    /// Vertex partition into connected components, keeping isolated vertices.
    /// Components are sorted by smallest member index, members ascending.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_on(ColorSet::full(self.d))
    }

    /// Components of the restriction to the edges colored in `allowed`.
    pub fn components_on(&self, allowed: ColorSet) -> Vec<Vec<usize>> {
        let part = self.component_partition(allowed);
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut group_of_rep: HashMap<u32, usize> = HashMap::new();
        for (i, &rep) in part.iter().enumerate() {
            let g = *group_of_rep.entry(rep).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[g].push(i);
        }
        // reps are minima and appear in ascending index order, so groups are
        // already sorted by smallest member
        groups
    }

    /// For each vertex, the smallest vertex index in its component of the
    /// restriction to `allowed` edge colors.
    pub fn component_partition(&self, allowed: ColorSet) -> Vec<u32> {
        let n = self.vertices.len();
        let mut uf = UnionFind::new(n);
        for e in &self.edges {
            if allowed.contains(e.color) {
                uf.union(e.u, e.v);
            }
        }
        uf.min_labels()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        n == 0
            || self
                .component_partition(ColorSet::full(self.d))
                .iter()
                .all(|&r| r == 0)
    }

    /// True iff the graph stays connected after deleting all edges colored `c`.
    pub fn is_connected_avoiding(&self, c: Color) -> Result<bool, GraphError> {
        if c < 1 || c > self.d {
            return Err(GraphError::ColorOutOfRange {
                color: c,
                d: self.d,
            });
        }
        let allowed = ColorSet::full(self.d).without(c);
        Ok(self.component_partition(allowed).iter().all(|&r| r == 0))
    }
}

/// Plain union-find with path halving; labels are canonicalized to the
/// smallest member of each class.
pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> u32 {
        let mut cur = x as u32;
        while self.parent[cur as usize] != cur {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = self.parent[next as usize];
            cur = self.parent[cur as usize];
        }
        cur
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            // keep the smaller root so labels stay canonical-friendly
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }

    /// Resolve every element to the smallest index in its class.
    pub(crate) fn min_labels(&mut self) -> Vec<u32> {
        let n = self.parent.len();
        (0..n).map(|i| self.find(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_g, words};

    fn g13() -> ColoredMultigraph {
        build_g(1, 3).unwrap()
    }

    #[test]
    fn construction_guards() {
        let v = |names: &[&str]| names.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let e = |u: &str, v: &str, c: Color| (u.to_string(), v.to_string(), c);

        assert_eq!(
            ColoredMultigraph::new(2, v(&["a", "a"]), &[]),
            Err(GraphError::DuplicateVertex("a".into()))
        );
        assert_eq!(
            ColoredMultigraph::new(2, v(&["a"]), &[e("a", "a", 1)]),
            Err(GraphError::LoopEdge("a".into()))
        );
        assert_eq!(
            ColoredMultigraph::new(2, v(&["a", "b"]), &[e("a", "b", 3)]),
            Err(GraphError::ColorOutOfRange { color: 3, d: 2 })
        );
        assert_eq!(
            ColoredMultigraph::new(0, v(&["a"]), &[]),
            Err(GraphError::ZeroColors)
        );
        // parallel edges with equal and distinct colors are fine
        let g = ColoredMultigraph::new(
            3,
            v(&["a", "b"]),
            &[e("a", "b", 1), e("a", "b", 1), e("a", "b", 2)],
        )
        .unwrap();
        assert_eq!(g.edges().len(), 3);
    }

    #[test]
    fn restrict_g13_to_color_2() {
        let g = g13();
        let r = g.restrict(ColorSet::singleton(2)).unwrap();
        assert_eq!(r.vertex_count(), 3);
        assert_eq!(r.edges().len(), 1);
        let e = r.edges()[0];
        assert_eq!(e.color, 2);
        let mut ends = [r.vertex_name(e.u), r.vertex_name(e.v)];
        ends.sort();
        assert_eq!(ends, ["100", "110"]);
    }

    #[test]
    fn restrict_identity_and_empty() {
        let g = g13();
        assert_eq!(g.restrict(ColorSet::full(3)).unwrap(), g);
        let r = g.restrict(ColorSet::EMPTY).unwrap();
        assert!(r.edges().is_empty());
        assert_eq!(r.vertices(), g.vertices());
        assert_eq!(
            g.restrict(ColorSet::singleton(4)),
            Err(GraphError::ColorOutOfRange { color: 4, d: 3 })
        );
    }

    #[test]
    fn components_of_restrictions() {
        let g = g13();
        let r = g.restrict(ColorSet::singleton(2)).unwrap();
        let comps = r.components();
        // {100, 110} and the isolated alpha
        assert_eq!(comps.len(), 2);
        let sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 3);
        assert!(sizes.contains(&2) && sizes.contains(&1));

        let edgeless = g.restrict(ColorSet::EMPTY).unwrap();
        assert_eq!(edgeless.components().len(), 3);

        let g25 = build_g(2, 5).unwrap();
        assert_eq!(g25.components().len(), 1);
        assert_eq!(g25.vertex_count(), 7);
    }

    #[test]
    fn connectivity_avoiding_each_color() {
        let g = g13();
        for c in 1..=3 {
            assert!(g.is_connected_avoiding(c).unwrap());
        }
        assert!(build_g(2, 5).unwrap().is_connected_avoiding(3).unwrap());
        assert_eq!(
            g.is_connected_avoiding(9),
            Err(GraphError::ColorOutOfRange { color: 9, d: 3 })
        );

        let two = ColoredMultigraph::new(2, vec!["a".into(), "b".into()], &[]).unwrap();
        assert!(!two.is_connected_avoiding(1).unwrap());
    }

    #[test]
    fn restriction_composes_as_intersection() {
        use rand::prelude::*;
        let mut rng = StdRng::seed_from_u64(0);
        for _ in 0..40 {
            let d: Color = rng.gen_range(1..=5);
            let n = rng.gen_range(1..=6usize);
            let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let mut edges = Vec::new();
            for _ in 0..rng.gen_range(0..10usize) {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u != v {
                    edges.push((names[u].clone(), names[v].clone(), rng.gen_range(1..=d)));
                }
            }
            let g = ColoredMultigraph::new(d, names, &edges).unwrap();
            let s = ColorSet::from_bits(rng.gen_range(0..(1u32 << d)));
            let t = ColorSet::from_bits(rng.gen_range(0..(1u32 << d)));
            let lhs = g.restrict(s).unwrap().restrict(t).unwrap();
            let rhs = g.restrict(s.intersection(t)).unwrap();
            assert_eq!(lhs, rhs);

            // components of the smaller restriction refine the larger one
            let sub = s.intersection(t);
            let fine = g.component_partition(sub);
            let coarse = g.component_partition(s);
            for (i, _) in fine.iter().enumerate() {
                for (j, _) in fine.iter().enumerate() {
                    if fine[i] == fine[j] {
                        assert_eq!(coarse[i], coarse[j]);
                    }
                }
            }
        }
    }

    #[test]
    fn word_vertices_print_readably() {
        let g = build_g(2, 5).unwrap();
        for w in words(5, 2) {
            assert!(g.vertex_index(&w.to_string()).is_some());
        }
        assert!(g.vertex_index("alpha").is_some());
    }
}
