//! Directed graphs with group-valued edge weights, their derived vertex
//! sets, and the weighted adjacency matrix.

use crate::group::{Group, GroupElement};
use crate::int_mat::IntMatrix;
use crate::laurent::{GroupRingElement, LaurentMatrix};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_bigint::BigInt;

/// A weighted edge. Endpoints are vertex ids; the weight lives in the
/// graph's group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub src: String,
    pub dst: String,
    pub weight: GroupElement,
}

/// A finite directed graph with a weight map E¹ → G. Vertex and edge order
/// is construction order; all derived matrices use it. Finite edge lists
/// make every graph row-finite by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    group: Group,
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl WeightedGraph {
    pub fn new(group: Group, vertices: Vec<String>, edges: Vec<Edge>) -> Self {
        WeightedGraph { group, vertices, edges }
    }

    /// Graph with the standard ℤ-grading (every edge weighted σ) read off an
    /// adjacency count matrix. Vertices are named `v0..`, edges `e0..` in
    /// row-major matrix order.
    pub fn from_adjacency(counts: &[Vec<u64>]) -> Self {
        let group = Group::infinite_cyclic();
        let sigma = group.generator();
        let vertices: Vec<String> = (0..counts.len()).map(|i| format!("v{i}")).collect();
        let mut edges = Vec::new();
        for (i, row) in counts.iter().enumerate() {
            assert_eq!(row.len(), counts.len(), "adjacency matrix must be square");
            for (j, &mult) in row.iter().enumerate() {
                for _ in 0..mult {
                    edges.push(Edge {
                        id: format!("e{}", edges.len()),
                        src: vertices[i].clone(),
                        dst: vertices[j].clone(),
                        weight: sigma.clone(),
                    });
                }
            }
        }
        WeightedGraph { group, vertices, edges }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    /// Every invariant violation with a human-readable locus; empty iff the
    /// graph is well-formed. Violations are data, not failures.
    pub fn validate(&self) -> Vec<String> {
        let mut violations = Vec::new();
        let mut seen_v: BTreeMap<&str, usize> = BTreeMap::new();
        for v in &self.vertices {
            *seen_v.entry(v.as_str()).or_insert(0) += 1;
        }
        for (v, count) in &seen_v {
            if *count > 1 {
                violations.push(format!("duplicate vertex id {v}"));
            }
        }
        let mut seen_e: BTreeMap<&str, usize> = BTreeMap::new();
        for e in &self.edges {
            *seen_e.entry(e.id.as_str()).or_insert(0) += 1;
        }
        for (id, count) in &seen_e {
            if *count > 1 {
                violations.push(format!("duplicate edge id {id}"));
            }
        }
        for e in &self.edges {
            if !seen_v.contains_key(e.src.as_str()) {
                violations.push(format!("edge {}: unknown src {}", e.id, e.src));
            }
            if !seen_v.contains_key(e.dst.as_str()) {
                violations.push(format!("edge {}: unknown dst {}", e.id, e.dst));
            }
            if e.weight.coords().len() != self.group.dim() {
                violations.push(format!(
                    "edge {}: weight has {} coordinates, group needs {}",
                    e.id,
                    e.weight.coords().len(),
                    self.group.dim()
                ));
            }
        }
        violations
    }

    /// Vertices emitting at least one edge, in vertex order. Finite graphs
    /// have no infinite emitters, so regular = non-sink.
    pub fn regular_vertices(&self) -> Vec<String> {
        self.vertices
            .iter()
            .filter(|v| self.edges.iter().any(|e| &e.src == *v))
            .cloned()
            .collect()
    }

    /// Vertices emitting no edge, in vertex order; together with the regular
    /// vertices this partitions E⁰.
    pub fn sinks(&self) -> Vec<String> {
        self.vertices
            .iter()
            .filter(|v| !self.edges.iter().any(|e| &e.src == *v))
            .cloned()
            .collect()
    }

    /// The weighted adjacency matrix A_ω over ℤ[G]: rows indexed by regular
    /// vertices, columns by all vertices, entry (v,w) = Σ_{e: v→w} ω(e).
    pub fn weighted_adjacency(&self) -> LaurentMatrix {
        let regular = self.regular_vertices();
        let mut m = LaurentMatrix::zeros(self.group.clone(), regular.len(), self.vertices.len());
        for e in &self.edges {
            let Some(r) = regular.iter().position(|v| v == &e.src) else { continue };
            let c = self.vertex_index(&e.dst).expect("valid graph");
            let term = GroupRingElement::monomial(self.group.clone(), e.weight.clone());
            m.set(r, c, m.get(r, c) + &term);
        }
        m
    }

    /// The ordinary adjacency count matrix A_E (weights forgotten): rows
    /// indexed by regular vertices, columns by all vertices.
    pub fn adjacency_counts(&self) -> IntMatrix {
        let regular = self.regular_vertices();
        let mut m = IntMatrix::zeros(regular.len(), self.vertices.len());
        for e in &self.edges {
            let Some(r) = regular.iter().position(|v| v == &e.src) else { continue };
            let c = self.vertex_index(&e.dst).expect("valid graph");
            let v = m.get(r, c) + BigInt::from(1);
            m.set(r, c, v);
        }
        m
    }

    /// Disjoint union, relabeling both sides to keep ids distinct.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        assert_eq!(self.group, other.group, "disjoint union needs a common weight group");
        let tag = |s: &str, side: char| format!("{side}.{s}");
        let mut vertices: Vec<String> = self.vertices.iter().map(|v| tag(v, 'a')).collect();
        vertices.extend(other.vertices.iter().map(|v| tag(v, 'b')));
        let map_edges = |edges: &[Edge], side: char| -> Vec<Edge> {
            edges
                .iter()
                .map(|e| Edge {
                    id: tag(&e.id, side),
                    src: tag(&e.src, side),
                    dst: tag(&e.dst, side),
                    weight: e.weight.clone(),
                })
                .collect()
        };
        let mut edges = map_edges(&self.edges, 'a');
        edges.extend(map_edges(&other.edges, 'b'));
        WeightedGraph { group: self.group.clone(), vertices, edges }
    }

    /// True when every edge has the generator weight σ and the group is ℤ.
    pub fn has_standard_grading(&self) -> bool {
        self.group.is_infinite_cyclic()
            && self.edges.iter().all(|e| e.weight == self.group.generator())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    pub(crate) fn single_loop() -> WeightedGraph {
        WeightedGraph::from_adjacency(&[vec![1]])
    }

    #[test]
    fn validate_minimal_loop() {
        assert!(single_loop().validate().is_empty());
    }

    #[test]
    fn validate_missing_vertex() {
        let group = Group::infinite_cyclic();
        let sigma = group.generator();
        let g = WeightedGraph::new(
            group,
            vec!["v".to_string()],
            vec![Edge {
                id: "e".to_string(),
                src: "v".to_string(),
                dst: "w".to_string(),
                weight: sigma,
            }],
        );
        assert_eq!(g.validate(), vec!["edge e: unknown dst w".to_string()]);
    }

    #[test]
    fn validate_duplicate_edge_id() {
        let group = Group::infinite_cyclic();
        let sigma = group.generator();
        let mk = |_: usize| Edge {
            id: "e".to_string(),
            src: "v".to_string(),
            dst: "v".to_string(),
            weight: sigma.clone(),
        };
        let g = WeightedGraph::new(group, vec!["v".to_string()], vec![mk(0), mk(1)]);
        assert_eq!(g.validate(), vec!["duplicate edge id e".to_string()]);
    }

    #[test]
    fn regular_and_sinks_partition() {
        let g = single_loop();
        assert_eq!(g.regular_vertices(), vec!["v0".to_string()]);
        assert!(g.sinks().is_empty());

        let isolated = WeightedGraph::from_adjacency(&[vec![0]]);
        assert!(isolated.regular_vertices().is_empty());
        assert_eq!(isolated.sinks(), vec!["v0".to_string()]);

        let arrow = WeightedGraph::from_adjacency(&[vec![0, 1], vec![0, 0]]);
        assert_eq!(arrow.regular_vertices(), vec!["v0".to_string()]);
        assert_eq!(arrow.sinks(), vec!["v1".to_string()]);
    }

    #[test]
    fn weighted_adjacency_examples() {
        // R₂: one vertex, two loops of weight σ → [2σ].
        let r2 = WeightedGraph::from_adjacency(&[vec![2]]);
        let a = r2.weighted_adjacency();
        assert_eq!(a.get(0, 0).to_text(), "2*s^1");

        // C₂: v→w, w→v → [[0, σ], [σ, 0]].
        let c2 = WeightedGraph::from_adjacency(&[vec![0, 1], vec![1, 0]]);
        let a = c2.weighted_adjacency();
        assert!(a.get(0, 0).is_zero());
        assert_eq!(a.get(0, 1).to_text(), "1*s^1");
        assert_eq!(a.get(1, 0).to_text(), "1*s^1");

        // Forgetting weights gives the count matrix; row sums = out-degrees.
        let counts = r2.adjacency_counts();
        assert_eq!(counts.get(0, 0), &BigInt::from(2));
    }

    #[test]
    fn adjacency_specializes_to_counts() {
        let g = WeightedGraph::from_adjacency(&[vec![2, 1], vec![0, 1]]);
        let specialized = g.weighted_adjacency().evaluate_at_unit(1).unwrap();
        assert_eq!(specialized, g.adjacency_counts());
        // row sums are out-degrees
        for (r, v) in g.regular_vertices().iter().enumerate() {
            let sum: BigInt = (0..g.vertices().len())
                .map(|c| specialized.get(r, c).clone())
                .sum();
            let outdeg = g.edges().iter().filter(|e| &e.src == v).count();
            assert_eq!(sum, BigInt::from(outdeg));
        }
    }
}
