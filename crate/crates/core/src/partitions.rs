//! Integer partitions as Young-diagram multiindices, the merge-coarsening
//! order on partitions of k, and DOT output for its Hasse diagram.
//!
//! The covering relation merges exactly two parts, so every edge lowers the
//! part count by one: the diagram is graded with unique source `{1,...,1}`
//! and sink `{k}`.

use std::collections::BTreeSet;
use std::fmt;

/// A partition of `k`: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Panics unless the parts are weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        Partition { parts }
    }

    /// Sort arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Diagram label `H^k_{m1,m2,...}`.
    pub fn label(&self) -> String {
        format!(
            "H^{}_{{{}}}",
            self.weight(),
            self.parts
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )
    }

    /// All partitions reachable by merging exactly two parts, in
    /// reverse-lexicographic order.
    pub fn covers(&self) -> Vec<Partition> {
        let mut seen = BTreeSet::new();
        for i in 0..self.parts.len() {
            for j in (i + 1)..self.parts.len() {
                let mut merged = Vec::with_capacity(self.parts.len() - 1);
                for (idx, &p) in self.parts.iter().enumerate() {
                    if idx != i && idx != j {
                        merged.push(p);
                    }
                }
                merged.push(self.parts[i] + self.parts[j]);
                merged.sort_unstable_by(|a, b| b.cmp(a));
                seen.insert(merged);
            }
        }
        seen.into_iter().rev().map(Partition::new).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// All partitions of `k` in reverse-lexicographic order (`{k}` first,
/// `{1,...,1}` last). Panics for `k = 0`.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    assert!(k >= 1, "partitions are defined for k >= 1");
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(k, k, &mut prefix, &mut out);
    out
}

fn descend(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::new(prefix.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        prefix.push(part);
        descend(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

/// The Hasse diagram of the merge-coarsening order on partitions of `k`.
///
/// Nodes are in reverse-lexicographic order; edges point from the finer to
/// the coarser partition and are stored as node-index pairs.
#[derive(Clone, Debug)]
pub struct PartitionDag {
    weight: usize,
    nodes: Vec<Partition>,
    edges: Vec<(usize, usize)>,
}

/// Build the complete single-merge Hasse diagram for partitions of `k`.
pub fn build_dag(k: usize) -> PartitionDag {
    let nodes = partitions_of(k);
    let index: std::collections::HashMap<&Partition, usize> =
        nodes.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut edges = Vec::new();
    for (i, node) in nodes.iter().enumerate() {
        for cover in node.covers() {
            edges.push((i, index[&cover]));
        }
    }
    edges.sort_unstable();
    PartitionDag {
        weight: k,
        nodes,
        edges,
    }
}

impl PartitionDag {
    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn nodes(&self) -> &[Partition] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn node_index(&self, partition: &Partition) -> Option<usize> {
        self.nodes.iter().position(|p| p == partition)
    }

    fn successors(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .filter(move |(from, _)| *from == node)
            .map(|&(_, to)| to)
    }

    /// All maximal chains (paths from `{1,...,1}` to `{k}`), as node-index
    /// sequences in deterministic order.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let source = self.nodes.len() - 1; // {1,...,1} is last in reverse-lex
        let sink = 0; // {k} is first
        let mut chains = Vec::new();
        let mut path = vec![source];
        self.extend_chains(source, sink, &mut path, &mut chains);
        chains
    }

    fn extend_chains(
        &self,
        node: usize,
        sink: usize,
        path: &mut Vec<usize>,
        chains: &mut Vec<Vec<usize>>,
    ) {
        if node == sink {
            chains.push(path.clone());
            return;
        }
        for next in self.successors(node) {
            path.push(next);
            self.extend_chains(next, sink, path, chains);
            path.pop();
        }
    }

    /// Graphviz digraph with one node per partition, labelled
    /// `H^k_{m1,...}`, ranked by part count so the source sits leftmost.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("digraph partitions_k{} {{\n", self.weight));
        out.push_str("    rankdir=LR;\n");
        out.push_str("    node [shape=box];\n");
        let max_len = self.nodes.iter().map(Partition::len).max().unwrap_or(1);
        for len in (1..=max_len).rev() {
            let group: Vec<&Partition> =
                self.nodes.iter().filter(|p| p.len() == len).collect();
            if group.is_empty() {
                continue;
            }
            out.push_str("    { rank=same;");
            for p in group {
                out.push_str(&format!(" \"{}\";", p.label()));
            }
            out.push_str(" }\n");
        }
        for &(from, to) in &self.edges {
            out.push_str(&format!(
                "    \"{}\" -> \"{}\";\n",
                self.nodes[from].label(),
                self.nodes[to].label()
            ));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn partitions_of_small_k() {
        let k3: Vec<_> = partitions_of(3);
        assert_eq!(k3, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        let k4 = partitions_of(4);
        assert_eq!(
            k4,
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(partitions_of(1), vec![p(&[1])]);
    }

    #[test]
    fn covers_merge_two_parts() {
        assert_eq!(p(&[2, 1, 1]).covers(), vec![p(&[3, 1]), p(&[2, 2])]);
        assert_eq!(p(&[4]).covers(), vec![]);
        // {2,2,1}: merging 2+2 gives {4,1}, merging 2+1 gives {3,2}
        assert_eq!(p(&[2, 2, 1]).covers(), vec![p(&[4, 1]), p(&[3, 2])]);
    }

    #[test]
    fn dag_for_k3_is_a_chain() {
        let dag = build_dag(3);
        assert_eq!(dag.nodes().len(), 3);
        assert_eq!(dag.edges(), &[(1, 0), (2, 1)]);
        assert_eq!(dag.maximal_chains().len(), 1);
    }

    #[test]
    fn dag_for_k4_branches() {
        let dag = build_dag(4);
        let edge_labels: Vec<(String, String)> = dag
            .edges()
            .iter()
            .map(|&(a, b)| (dag.nodes()[a].to_string(), dag.nodes()[b].to_string()))
            .collect();
        let expected = [
            ("{3,1}", "{4}"),
            ("{2,2}", "{4}"),
            ("{2,1,1}", "{3,1}"),
            ("{2,1,1}", "{2,2}"),
            ("{1,1,1,1}", "{2,1,1}"),
        ];
        assert_eq!(edge_labels.len(), 5);
        for (a, b) in expected {
            assert!(edge_labels.contains(&(a.to_string(), b.to_string())));
        }
        assert_eq!(dag.maximal_chains().len(), 2);
    }

    #[test]
    fn dag_for_k5_has_nine_edges() {
        let dag = build_dag(5);
        assert_eq!(dag.nodes().len(), 7);
        assert_eq!(dag.edges().len(), 9);
    }

    #[test]
    fn dag_for_k6_has_eleven_nodes() {
        assert_eq!(build_dag(6).nodes().len(), 11);
    }

    #[test]
    fn dot_output_shape() {
        let dot = build_dag(3).to_dot();
        assert!(dot.starts_with("digraph partitions_k3 {"));
        assert_eq!(dot.matches("\" -> \"").count(), 2);
        assert!(dot.contains("\"H^3_{1,1,1}\" -> \"H^3_{2,1}\";"));
        let single = build_dag(1).to_dot();
        assert!(single.contains("\"H^1_{1}\""));
        assert_eq!(single.matches("->").count(), 0);
    }

    #[test]
    fn single_node_chain() {
        let dag = build_dag(1);
        let chains = dag.maximal_chains();
        assert_eq!(chains, vec![vec![0]]);
    }
}
