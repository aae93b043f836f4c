//! Line-oriented interchange formats and DOT export.
//!
//! Graph files preserve edge order exactly; complex files store a generating
//! set of identifications (the reader applies downward closure). The first
//! line of a file names its kind, so commands can accept either and build the
//! complex from a graph on the fly.

use thiserror::Error;

use crate::color::{Color, ColorSet};
use crate::complex::{CellComplex, ComplexError, Identification, ValidationError};
use crate::graph::{ColoredMultigraph, GraphError};

const GRAPH_HEADER: &str = "poset-forge graph v1";
const COMPLEX_HEADER: &str = "poset-forge complex v1";

#[derive(Error, Debug)]
pub enum FormatError {
    #[error("empty input; expected a `{GRAPH_HEADER}` or `{COMPLEX_HEADER}` header")]
    MissingHeader,
    #[error("unrecognized header `{0}`")]
    UnknownHeader(String),
    #[error("line {line}: field `{field}`: {message}")]
    Field {
        line: usize,
        field: String,
        message: String,
    },
    #[error("identifier `{0}` contains whitespace")]
    BadName(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("complex failed validation: {0}")]
    Validation(#[from] ValidationError),
}

/// Either kind of input object, as sniffed from the file header.
pub enum InputObject {
    Graph(ColoredMultigraph),
    Complex(CellComplex),
}

impl InputObject {
    /// The complex described by the file, building `P(G)` for graph inputs.
    pub fn into_complex(self) -> Result<CellComplex, FormatError> {
        match self {
            InputObject::Graph(g) => Ok(CellComplex::from_graph(&g)?),
            InputObject::Complex(p) => Ok(p),
        }
    }
}

fn field_err(line: usize, field: &str, message: impl Into<String>) -> FormatError {
    FormatError::Field {
        line,
        field: field.to_string(),
        message: message.into(),
    }
}

fn check_name(name: &str) -> Result<(), FormatError> {
    if name.is_empty() || name.chars().any(|c| c.is_whitespace()) {
        return Err(FormatError::BadName(name.to_string()));
    }
    Ok(())
}

pub fn write_graph(g: &ColoredMultigraph) -> String {
    let mut out = String::new();
    out.push_str(GRAPH_HEADER);
    out.push('\n');
    out.push_str(&format!("d {}\n", g.d()));
    for name in g.vertices() {
        out.push_str(&format!("vertex {name}\n"));
    }
    for e in g.edges() {
        out.push_str(&format!(
            "edge {} {} {}\n",
            g.vertex_name(e.u),
            g.vertex_name(e.v),
            e.color
        ));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<ColoredMultigraph, FormatError> {
    let mut lines = numbered_lines(text);
    expect_header(&mut lines, GRAPH_HEADER)?;
    let mut d: Option<Color> = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String, Color)> = Vec::new();
    for (n, line) in lines {
        let mut parts = line.split_whitespace();
        let key = parts.next().expect("nonempty line");
        match key {
            "d" => {
                let v = parts
                    .next()
                    .ok_or_else(|| field_err(n, "d", "missing value"))?;
                d = Some(
                    v.parse()
                        .map_err(|_| field_err(n, "d", format!("`{v}` is not a color count")))?,
                );
            }
            "vertex" => {
                let name = parts
                    .next()
                    .ok_or_else(|| field_err(n, "vertex", "missing identifier"))?;
                check_name(name)?;
                vertices.push(name.to_string());
            }
            "edge" => {
                let u = parts
                    .next()
                    .ok_or_else(|| field_err(n, "edge", "missing first endpoint"))?;
                let v = parts
                    .next()
                    .ok_or_else(|| field_err(n, "edge", "missing second endpoint"))?;
                let c = parts
                    .next()
                    .ok_or_else(|| field_err(n, "edge", "missing color"))?;
                let color: Color = c
                    .parse()
                    .map_err(|_| field_err(n, "edge", format!("`{c}` is not a color")))?;
                edges.push((u.to_string(), v.to_string(), color));
            }
            other => return Err(field_err(n, other, "unknown record")),
        }
        if parts.next().is_some() {
            return Err(field_err(n, key, "trailing tokens"));
        }
    }
    let d = d.ok_or_else(|| field_err(0, "d", "missing `d` record"))?;
    Ok(ColoredMultigraph::new(d, vertices, &edges)?)
}

/// Emit a complex as facets plus a generating set of identifications. Masks
/// are visited from largest color sets down, so the writer skips every
/// identification already implied by downward closure of an earlier line.
pub fn write_complex(p: &CellComplex) -> String {
    let mut out = String::new();
    out.push_str(COMPLEX_HEADER);
    out.push('\n');
    out.push_str(&format!("d {}\n", p.d()));
    for name in p.facet_names() {
        out.push_str(&format!("facet {name}\n"));
    }
    let d = p.d();
    let n = p.facet_count();
    // reconstruction state: union-find per mask, discrete to start
    let mut recon: Vec<crate::graph::UnionFind> = (0..(1usize << d))
        .map(|_| crate::graph::UnionFind::new(n))
        .collect();
    let mut masks: Vec<ColorSet> = ColorSet::all_subsets(d).collect();
    masks.sort_by_key(|m| (std::cmp::Reverse(m.len()), m.bits()));
    for mask in masks {
        if mask.is_empty() {
            continue; // the empty face is always shared
        }
        for face in p.faces(mask.len()).expect("rank in range") {
            if face.colors() != mask {
                continue;
            }
            let members = p.class_members(face);
            for pair in members.windows(2) {
                let (a, b) = (pair[0], pair[1]);
                if recon[mask.bits() as usize].find(a) == recon[mask.bits() as usize].find(b) {
                    continue;
                }
                out.push_str(&format!(
                    "identify {} {} {}\n",
                    p.facet_name(a),
                    p.facet_name(b),
                    mask.to_list_string()
                ));
                for sub in mask.subsets() {
                    recon[sub.bits() as usize].union(a, b);
                }
            }
        }
    }
    out
}

pub fn parse_complex(text: &str) -> Result<CellComplex, FormatError> {
    let mut lines = numbered_lines(text);
    expect_header(&mut lines, COMPLEX_HEADER)?;
    let mut d: Option<Color> = None;
    let mut facets: Vec<String> = Vec::new();
    let mut idents: Vec<Identification> = Vec::new();
    for (n, line) in lines {
        let mut parts = line.split_whitespace();
        let key = parts.next().expect("nonempty line");
        match key {
            "d" => {
                let v = parts
                    .next()
                    .ok_or_else(|| field_err(n, "d", "missing value"))?;
                d = Some(
                    v.parse()
                        .map_err(|_| field_err(n, "d", format!("`{v}` is not a rank")))?,
                );
            }
            "facet" => {
                let name = parts
                    .next()
                    .ok_or_else(|| field_err(n, "facet", "missing identifier"))?;
                check_name(name)?;
                facets.push(name.to_string());
            }
            "identify" => {
                let a = parts
                    .next()
                    .ok_or_else(|| field_err(n, "identify", "missing first facet"))?;
                let b = parts
                    .next()
                    .ok_or_else(|| field_err(n, "identify", "missing second facet"))?;
                let cs = parts
                    .next()
                    .ok_or_else(|| field_err(n, "identify", "missing colors"))?;
                let colors = ColorSet::parse_list(cs).ok_or_else(|| {
                    field_err(n, "identify", format!("`{cs}` is not a color list"))
                })?;
                idents.push(Identification {
                    facet_a: a.to_string(),
                    colors_a: colors,
                    facet_b: b.to_string(),
                    colors_b: colors,
                });
            }
            other => return Err(field_err(n, other, "unknown record")),
        }
        if parts.next().is_some() {
            return Err(field_err(n, key, "trailing tokens"));
        }
    }
    let d = d.ok_or_else(|| field_err(0, "d", "missing `d` record"))?;
    let p = CellComplex::from_identifications(d, facets, &idents)?;
    p.validate()?;
    Ok(p)
}

/// Sniff the header line and parse accordingly.
pub fn parse_input(text: &str) -> Result<InputObject, FormatError> {
    let header = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or(FormatError::MissingHeader)?;
    match header {
        GRAPH_HEADER => Ok(InputObject::Graph(parse_graph(text)?)),
        COMPLEX_HEADER => Ok(InputObject::Complex(parse_complex(text)?)),
        other => Err(FormatError::UnknownHeader(other.to_string())),
    }
}

/// DOT rendering: one undirected edge per multigraph edge with the color as
/// its label; a vertex named `alpha` is drawn with a distinct (double-circle,
/// white) shape, matching the apex convention.
pub fn graph_to_dot(g: &ColoredMultigraph) -> String {
    let mut out = String::from("graph G {\n");
    out.push_str("  node [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n");
    for name in g.vertices() {
        if name == "alpha" {
            out.push_str(&format!(
                "  \"{name}\" [shape=doublecircle, fillcolor=white, fontcolor=black];\n"
            ));
        } else {
            out.push_str(&format!("  \"{name}\";\n"));
        }
    }
    for e in g.edges() {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\" [label=\"{}\"];\n",
            g.vertex_name(e.u),
            g.vertex_name(e.v),
            e.color
        ));
    }
    out.push_str("}\n");
    out
}

type NumberedLines<'a> = std::vec::IntoIter<(usize, &'a str)>;

fn numbered_lines(text: &str) -> NumberedLines<'_> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect::<Vec<_>>()
        .into_iter()
}

fn expect_header(lines: &mut NumberedLines<'_>, want: &str) -> Result<(), FormatError> {
    match lines.next() {
        None => Err(FormatError::MissingHeader),
        Some((_, l)) if l == want => Ok(()),
        Some((_, l)) => Err(FormatError::UnknownHeader(l.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_g, xkd};

    #[test]
    fn graph_round_trip_preserves_edge_order() {
        let g = build_g(2, 5).unwrap();
        let text = write_graph(&g);
        let parsed = parse_graph(&text).unwrap();
        assert_eq!(parsed, g);
        // byte-identical re-emission
        assert_eq!(write_graph(&parsed), text);
    }

    #[test]
    fn complex_round_trip() {
        for p in [
            xkd(1, 3).unwrap(),
            xkd(2, 3).unwrap(),
            xkd(0, 4).unwrap(),
            xkd(2, 4).unwrap(),
            xkd(1, 3)
                .unwrap()
                .prefix_facets("a.")
                .glue_facets(
                    "a.alpha",
                    &xkd(2, 3).unwrap().prefix_facets("b."),
                    "b.alpha",
                )
                .unwrap(),
        ] {
            let text = write_complex(&p);
            let parsed = parse_complex(&text).unwrap();
            assert_eq!(parsed, p);
        }
    }

    #[test]
    fn generating_set_is_small() {
        // the two-triangle sphere needs only its three edge identifications
        let p = xkd(2, 3).unwrap();
        let text = write_complex(&p);
        let idents = text.lines().filter(|l| l.starts_with("identify")).count();
        assert_eq!(idents, 3);
    }

    #[test]
    fn sniffing_and_errors() {
        let g = build_g(1, 3).unwrap();
        match parse_input(&write_graph(&g)).unwrap() {
            InputObject::Graph(parsed) => assert_eq!(parsed, g),
            InputObject::Complex(_) => panic!("sniffed the wrong kind"),
        }
        let p = xkd(1, 3).unwrap();
        match parse_input(&write_complex(&p)).unwrap() {
            InputObject::Complex(parsed) => assert_eq!(parsed, p),
            InputObject::Graph(_) => panic!("sniffed the wrong kind"),
        }
        assert!(matches!(
            parse_input("nonsense header\n"),
            Err(FormatError::UnknownHeader(_))
        ));
        assert!(matches!(
            parse_input("  \n"),
            Err(FormatError::MissingHeader)
        ));

        let bad = "poset-forge graph v1\nd 3\nvertex a\nedge a b 1\n";
        assert!(matches!(parse_graph(bad), Err(FormatError::Graph(_))));

        let bad = "poset-forge graph v1\nd 3\nvertex a\nvertex b\nedge a b x\n";
        match parse_graph(bad).unwrap_err() {
            FormatError::Field { field, .. } => assert_eq!(field, "edge"),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn dot_output_marks_the_apex() {
        let dot = graph_to_dot(&build_g(1, 3).unwrap());
        assert!(dot.contains("\"alpha\" [shape=doublecircle"));
        assert!(dot.contains("\"100\" -- \"110\" [label=\"2\"]"));
        assert!(dot.starts_with("graph G {"));
    }

    #[test]
    fn graph_file_builds_complex() {
        let g = build_g(1, 3).unwrap();
        let obj = parse_input(&write_graph(&g)).unwrap();
        let p = obj.into_complex().unwrap();
        assert_eq!(p, CellComplex::from_graph(&g).unwrap());
    }
}
