//! Bipartite maps extracted from monodromy triples, with DOT and JSON
//! export.
//!
//! Edges are the points `{0..n-1}`; black vertices are the cycles of `g_0`,
//! white vertices the cycles of `g_1`, and faces the cycles of `g_inf` (a
//! face cycle of length `u` bounds a `2u`-gon). Labels in exported text are
//! 1-based.

use serde_json::{json, Value};

use crate::scheme::Scheme;
use crate::triples::MonodromyTriple;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dessin {
    degree: usize,
    black: Vec<Vec<usize>>,
    white: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
}

impl Dessin {
    pub fn of(t: &MonodromyTriple) -> Dessin {
        Dessin {
            degree: t.degree(),
            black: t.g0().cycle_decomposition().cycles,
            white: t.g1().cycle_decomposition().cycles,
            faces: t.g_inf().cycle_decomposition().cycles,
        }
    }

    /// Number of edges.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Black vertices as cyclically ordered edge lists.
    pub fn black_vertices(&self) -> &[Vec<usize>] {
        &self.black
    }

    pub fn white_vertices(&self) -> &[Vec<usize>] {
        &self.white
    }

    /// Face cycles of the map; a cycle of length `u` is a `2u`-gonal face.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn scheme(&self) -> Scheme {
        let part = |cycles: &[Vec<usize>]| {
            crate::partition::Partition::new(cycles.iter().map(|c| c.len()).collect())
        };
        Scheme::three(part(&self.faces), part(&self.black), part(&self.white))
            .expect("cycles partition the edge set")
    }

    /// Genus from the Euler count `V - E + F = 2 - 2g`; meaningful for
    /// connected maps only, `None` when the count is odd.
    pub fn euler_genus(&self) -> Option<i64> {
        let v = (self.black.len() + self.white.len()) as i64;
        let e = self.degree as i64;
        let f = self.faces.len() as i64;
        let twice = 2 - (v - e + f);
        if twice % 2 == 0 {
            Some(twice / 2)
        } else {
            None
        }
    }

    /// Graphviz DOT output: black vertices are filled circles `b0, b1, ...`,
    /// white vertices open circles `w0, ...`, one edge per point labelled
    /// with its 1-based index. Ordering is stable.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("graph dessin {\n");
        for i in 0..self.black.len() {
            out.push_str(&format!(
                "  b{i} [shape=circle, style=filled, fillcolor=black, fontcolor=white, label=\"b{i}\"];\n"
            ));
        }
        for i in 0..self.white.len() {
            out.push_str(&format!(
                "  w{i} [shape=circle, style=filled, fillcolor=white, label=\"w{i}\"];\n"
            ));
        }
        for edge in 0..self.degree {
            let b = self.black.iter().position(|c| c.contains(&edge)).unwrap();
            let w = self.white.iter().position(|c| c.contains(&edge)).unwrap();
            out.push_str(&format!("  b{b} -- w{w} [label=\"{}\"];\n", edge + 1));
        }
        out.push_str("}\n");
        out
    }

    /// JSON mirror of the map data, 1-based edge labels.
    pub fn to_json(&self) -> Value {
        let vertex = |id: char, i: usize, cycle: &Vec<usize>| {
            json!({
                "id": format!("{id}{i}"),
                "degree": cycle.len(),
                "edges": cycle.iter().map(|&e| e + 1).collect::<Vec<usize>>(),
            })
        };
        let edges: Vec<Value> = (0..self.degree)
            .map(|edge| {
                let b = self.black.iter().position(|c| c.contains(&edge)).unwrap();
                let w = self.white.iter().position(|c| c.contains(&edge)).unwrap();
                json!({
                    "label": edge + 1,
                    "black": format!("b{b}"),
                    "white": format!("w{w}"),
                })
            })
            .collect();
        json!({
            "format_version": 1,
            "degree": self.degree,
            "scheme": self.scheme().to_string(),
            "black_vertices": self.black.iter().enumerate()
                .map(|(i, c)| vertex('b', i, c)).collect::<Vec<Value>>(),
            "white_vertices": self.white.iter().enumerate()
                .map(|(i, c)| vertex('w', i, c)).collect::<Vec<Value>>(),
            "faces": self.faces.iter().enumerate().map(|(i, c)| json!({
                "id": format!("f{i}"),
                "degree": 2 * c.len(),
                "edges": c.iter().map(|&e| e + 1).collect::<Vec<usize>>(),
            })).collect::<Vec<Value>>(),
            "edges": edges,
            "genus": self.euler_genus(),
        })
    }
}
