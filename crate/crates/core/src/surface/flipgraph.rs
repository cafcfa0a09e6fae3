//! Graph of loop-free triangulations connected by flips, up to equivalence.

use std::collections::HashMap;
use std::fmt::Write;

use serde::Serialize;

use super::equivalence::canonical_key;
use super::triangulation::Triangulation;
use crate::Exhausted;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FlipEdge {
    pub source: usize,
    pub target: usize,
    /// Arc of the source triangulation that is flipped.
    pub arc: usize,
}

#[derive(Clone, Debug, Default)]
pub struct FlipGraph {
    pub nodes: Vec<Triangulation>,
    pub keys: Vec<Vec<u32>>,
    pub edges: Vec<FlipEdge>,
}

#[derive(Serialize)]
struct FlipGraphJson<'a> {
    nodes: Vec<crate::surface::TriangulationFile>,
    edges: &'a [FlipEdge],
}

impl FlipGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Flips leaving from `node`, one per flippable arc.
    pub fn out_edges(&self, node: usize) -> impl Iterator<Item = &FlipEdge> {
        self.edges.iter().filter(move |e| e.source == node)
    }

    pub fn to_json(&self) -> String {
        let j = FlipGraphJson {
            nodes: self.nodes.iter().map(Triangulation::to_file).collect(),
            edges: &self.edges,
        };
        serde_json::to_string_pretty(&j).expect("serializable")
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph flips {\n");
        for i in 0..self.nodes.len() {
            let _ = writeln!(s, "  n{i};");
        }
        for e in &self.edges {
            let _ = writeln!(s, "  n{} -> n{} [label=\"{}\"];", e.source, e.target, e.arc);
        }
        s.push_str("}\n");
        s
    }
}

/// Breadth-first search from `start` over flips that keep the triangulation
/// loop-free. Nodes are identified up to orientation-preserving equivalence.
pub fn loop_free_flip_graph(
    start: &Triangulation,
    max_nodes: usize,
) -> Result<FlipGraph, Exhausted<FlipGraph>> {
    let mut g = FlipGraph::default();
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let key = canonical_key(start);
    index.insert(key.clone(), 0);
    g.nodes.push(start.clone());
    g.keys.push(key);
    let mut head = 0;
    while head < g.nodes.len() {
        let cur = g.nodes[head].clone();
        for arc in cur.loop_free_flips() {
            let next = cur.flip(arc).expect("loop-free flip");
            let k = canonical_key(&next);
            let target = match index.get(&k) {
                Some(&i) => i,
                None => {
                    if g.nodes.len() == max_nodes {
                        return Err(Exhausted { partial: g, budget: max_nodes });
                    }
                    let i = g.nodes.len();
                    index.insert(k.clone(), i);
                    g.nodes.push(next);
                    g.keys.push(k);
                    i
                }
            };
            g.edges.push(FlipEdge { source: head, target, arc });
        }
        head += 1;
    }
    Ok(g)
}
