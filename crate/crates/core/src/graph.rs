use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::poset::VariableSet;

/// Undirected simple graph on variable indices. Edges are stored as `(a, b)`
/// with `a < b`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SimpleGraph {
    vertices: VariableSet,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    /// Edge endpoints are added to the vertex set; loops are dropped.
    pub fn new(vertices: VariableSet, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut graph = SimpleGraph {
            vertices,
            edges: BTreeSet::new(),
        };
        for (a, b) in edges {
            graph.add_edge(a, b);
        }
        graph
    }

    /// Graph whose vertex set is exactly the union of the edge endpoints.
    pub fn from_edges(edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::new(VariableSet::new(), edges)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.vertices.insert(a);
        self.vertices.insert(b);
        self.edges.insert((a.min(b), a.max(b)));
    }

    pub fn vertices(&self) -> &VariableSet {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn isolated_vertices(&self) -> VariableSet {
        let touched: VariableSet = self.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        self.vertices.difference(&touched)
    }

    pub fn without_isolated(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.edges())
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VariableSet> {
        let mut parent: BTreeMap<usize, usize> = self.vertices.iter().map(|v| (v, v)).collect();
        fn find(parent: &mut BTreeMap<usize, usize>, v: usize) -> usize {
            let p = parent[&v];
            if p == v {
                return v;
            }
            let root = find(parent, p);
            parent.insert(v, root);
            root
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent.insert(ra.max(rb), ra.min(rb));
            }
        }
        let mut groups: BTreeMap<usize, VariableSet> = BTreeMap::new();
        for v in self.vertices.iter() {
            let root = find(&mut parent, v);
            groups.entry(root).or_default().insert(v);
        }
        let mut parts: Vec<VariableSet> = groups.into_values().collect();
        parts.sort_by_key(|p| p.iter().next());
        parts
    }

    /// Same vertices; every connected component becomes a clique.
    pub fn transitive_closure(&self) -> SimpleGraph {
        let mut closure = SimpleGraph {
            vertices: self.vertices.clone(),
            edges: BTreeSet::new(),
        };
        for part in self.components() {
            let members: Vec<usize> = part.iter().collect();
            for (k, &a) in members.iter().enumerate() {
                for &b in &members[k + 1..] {
                    closure.edges.insert((a, b));
                }
            }
        }
        closure
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in self.edges() {
            writeln!(f, "x{a} -- x{b}")?;
        }
        Ok(())
    }
}
