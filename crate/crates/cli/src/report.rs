//! Report rows and the DOT and CSV emitters.

use alcovelab::affweyl::{ExtAffWeylElem, ExtAffineWeyl};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Clone, Debug, Serialize)]
pub struct ElementOut {
    pub label: String,
    pub t: Vec<i64>,
    pub w: Vec<i32>,
    pub length: usize,
    pub kappa: i64,
}

impl ElementOut {
    pub fn new(aw: &ExtAffineWeyl, x: &ExtAffWeylElem) -> Self {
        ElementOut {
            label: x.to_string(),
            t: x.t.clone(),
            w: x.w.img.clone(),
            length: aw.length(x),
            kappa: aw.kappa(x),
        }
    }

    pub fn all(aw: &ExtAffineWeyl, xs: &[ExtAffWeylElem]) -> Vec<Self> {
        xs.iter().map(|x| Self::new(aw, x)).collect()
    }
}

/// Flat CSV row for an element.
#[derive(Serialize)]
pub struct ElementRow<'a> {
    pub label: &'a str,
    pub t: String,
    pub w: String,
    pub length: usize,
    pub kappa: i64,
}

impl<'a> From<&'a ElementOut> for ElementRow<'a> {
    fn from(e: &'a ElementOut) -> Self {
        ElementRow {
            label: &e.label,
            t: join(&e.t),
            w: join(&e.w),
            length: e.length,
            kappa: e.kappa,
        }
    }
}

pub fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Graphviz digraph of covering relations, edges pointing upwards.
pub fn hasse_dot(name: &str, labels: &[String], edges: &[(usize, usize)]) -> String {
    let mut s = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
    for (i, l) in labels.iter().enumerate() {
        let _ = writeln!(s, "  n{i} [label=\"{}\"];", l.replace('"', "\\\""));
    }
    let mut edges = edges.to_vec();
    edges.sort_unstable();
    edges.dedup();
    for (a, b) in edges {
        let _ = writeln!(s, "  n{a} -> n{b};");
    }
    s.push_str("}\n");
    s
}

/// Serializes rows as CSV with a header line.
pub fn csv_rows<T: Serialize>(rows: impl IntoIterator<Item = T>) -> anyhow::Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
