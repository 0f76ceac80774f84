//! Undirected simple graphs: construction, edge-list loading,
//! giant-component extraction and summary statistics.

use std::collections::{HashMap, HashSet};
use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Node identifier; nodes of a graph are always `0..node_count`.
pub type NodeId = u32;

/// Canonical undirected edge with `e.0 < e.1`.
pub type Edge = (NodeId, NodeId);

/// Orders a pair so the smaller endpoint comes first.
#[inline]
pub fn canonical(u: NodeId, v: NodeId) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// An immutable undirected simple graph over contiguous node ids.
///
/// Neighbor lists are sorted and the edge list is kept in canonical order
/// (ascending pairs), so every iteration order downstream — and with it
/// every seeded procedure — is reproducible. Zero-degree nodes are legal;
/// they simply have empty neighbor lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    edges: Vec<Edge>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge iterator.
    ///
    /// Self-loops are dropped and duplicate edges (in either orientation)
    /// collapse to one. Errors if an endpoint is `>= node_count`.
    pub fn from_edges(
        node_count: usize,
        input: impl IntoIterator<Item = (NodeId, NodeId)>,
    ) -> Result<Self> {
        assert!(
            node_count <= NodeId::MAX as usize,
            "node count exceeds the id width"
        );
        let mut edges: Vec<Edge> = Vec::new();
        for (u, v) in input {
            if u as usize >= node_count {
                return Err(Error::UnknownNode(u));
            }
            if v as usize >= node_count {
                return Err(Error::UnknownNode(v));
            }
            if u == v {
                continue;
            }
            edges.push(canonical(u, v));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adjacency = vec![Vec::new(); node_count];
        for &(u, v) in &edges {
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            adjacency,
            edges,
            labels: None,
        })
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: ascending `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn degree(&self, i: NodeId) -> usize {
        self.adjacency[i as usize].len()
    }

    /// Neighbors of `i` in ascending order.
    pub fn neighbors(&self, i: NodeId) -> &[NodeId] {
        &self.adjacency[i as usize]
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        let (u, v) = canonical(u, v);
        self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    /// Position of an edge in [`Self::edges`], if present.
    pub fn edge_position(&self, u: NodeId, v: NodeId) -> Option<usize> {
        self.edges.binary_search(&canonical(u, v)).ok()
    }

    /// Errors unless `i` is a node of this graph.
    pub fn check_node(&self, i: NodeId) -> Result<()> {
        if (i as usize) < self.node_count() {
            Ok(())
        } else {
            Err(Error::UnknownNode(i))
        }
    }

    /// Original label of a node, when the graph came from a labeled source.
    pub fn label(&self, i: NodeId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[i as usize].as_str())
    }

    /// Number of common neighbors of `i` and `j`.
    pub fn common_neighbors(&self, i: NodeId, j: NodeId) -> Result<usize> {
        self.check_node(i)?;
        self.check_node(j)?;
        Ok(sorted_intersection_size(
            self.neighbors(i),
            self.neighbors(j),
        ))
    }

    /// Popularity of the pair `(i, j)`: `(degree(i) - 1) * (degree(j) - 1)`,
    /// with zero-degree endpoints clamped so the factor never goes negative.
    /// The pair need not be an edge.
    pub fn edge_popularity(&self, i: NodeId, j: NodeId) -> Result<u64> {
        self.check_node(i)?;
        self.check_node(j)?;
        let a = (self.degree(i) as u64).saturating_sub(1);
        let b = (self.degree(j) as u64).saturating_sub(1);
        Ok(a * b)
    }

    pub fn is_connected(&self) -> bool {
        if self.node_count() <= 1 {
            return true;
        }
        let reached = self.reachable_from(0);
        reached.iter().filter(|&&r| r).count() == self.node_count()
    }

    fn reachable_from(&self, start: NodeId) -> Vec<bool> {
        let mut seen = vec![false; self.node_count()];
        let mut stack = vec![start];
        seen[start as usize] = true;
        while let Some(i) = stack.pop() {
            for &j in self.neighbors(i) {
                if !seen[j as usize] {
                    seen[j as usize] = true;
                    stack.push(j);
                }
            }
        }
        seen
    }

    /// Extracts the connected component with the most nodes, relabeling its
    /// nodes to `0..n` in ascending order of the old ids. A tie on size goes
    /// to the component containing the smallest node id. Labels follow the
    /// surviving nodes.
    pub fn giant_component(&self) -> Graph {
        let n = self.node_count();
        if n == 0 {
            return self.clone();
        }
        let mut assigned = vec![false; n];
        let mut best: Option<Vec<NodeId>> = None;
        for start in 0..n as NodeId {
            if assigned[start as usize] {
                continue;
            }
            let reached = self.reachable_from(start);
            let members: Vec<NodeId> = (0..n as NodeId)
                .filter(|&v| reached[v as usize])
                .collect();
            for &v in &members {
                assigned[v as usize] = true;
            }
            // Strict inequality keeps the earlier component on ties, and the
            // scan order guarantees that one contains the smallest id.
            if best.as_ref().is_none_or(|b| members.len() > b.len()) {
                best = Some(members);
            }
        }
        let members = best.expect("graph has at least one node");
        let mut remap = vec![NodeId::MAX; n];
        for (new_id, &old_id) in members.iter().enumerate() {
            remap[old_id as usize] = new_id as NodeId;
        }
        let edges = self
            .edges
            .iter()
            .filter(|(u, v)| remap[*u as usize] != NodeId::MAX && remap[*v as usize] != NodeId::MAX)
            .map(|&(u, v)| (remap[u as usize], remap[v as usize]));
        let mut out =
            Graph::from_edges(members.len(), edges).expect("component edges are in range");
        out.labels = self
            .labels
            .as_ref()
            .map(|l| members.iter().map(|&v| l[v as usize].clone()).collect());
        out
    }

    /// Summary statistics: average degree, mean clustering coefficient and
    /// degree heterogeneity.
    ///
    /// * average degree `2|E| / |V|`;
    /// * per-node clustering `C_i = 2|E_i| / (k_i (k_i - 1))` where `E_i`
    ///   are the edges among `i`'s neighbors, with `C_i = 0` when `k_i <= 1`,
    ///   averaged over all nodes;
    /// * heterogeneity `<k^2> / <k>^2`, which is exactly 1 for regular
    ///   graphs. An edgeless graph is 0-regular, so its heterogeneity is
    ///   reported as 1.
    ///
    /// The graph must have at least one node.
    pub fn stats<S: Real>(&self) -> GraphStats<S> {
        let n = self.node_count();
        assert!(n >= 1, "stats need at least one node");
        let m = self.edge_count();

        let mut degree_sq_sum: u64 = 0;
        let mut clustering_sum = S::zero();
        for i in 0..n as NodeId {
            let k = self.degree(i) as u64;
            degree_sq_sum += k * k;
            if k >= 2 {
                // Each edge among neighbors shows up in two intersections,
                // so this sum is already 2|E_i|.
                let paired: u64 = self
                    .neighbors(i)
                    .iter()
                    .map(|&u| sorted_intersection_size(self.neighbors(i), self.neighbors(u)) as u64)
                    .sum();
                clustering_sum += S::ratio(paired, k * (k - 1));
            }
        }

        let avg_degree = S::ratio(2 * m as u64, n as u64);
        let heterogeneity = if m == 0 {
            S::one()
        } else {
            S::from_count(degree_sq_sum * n as u64) / S::from_count(4 * (m as u64) * (m as u64))
        };
        GraphStats {
            node_count: n,
            edge_count: m,
            avg_degree,
            clustering: clustering_sum / S::from_count(n as u64),
            heterogeneity,
        }
    }

    /// Writes the edge list as one `u v` line per edge, in canonical order,
    /// using compact ids. `load_edge_list` reads the result back verbatim.
    pub fn write_edge_list(&self, mut w: impl Write) -> io::Result<()> {
        for (u, v) in &self.edges {
            writeln!(w, "{u} {v}")?;
        }
        Ok(())
    }
}

/// Size of the intersection of two ascending slices.
pub(crate) fn sorted_intersection_size(a: &[NodeId], b: &[NodeId]) -> usize {
    let mut count = 0;
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => x += 1,
            std::cmp::Ordering::Greater => y += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                x += 1;
                y += 1;
            }
        }
    }
    count
}

/// Summary statistics of a graph. See [`Graph::stats`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphStats<S> {
    pub node_count: usize,
    pub edge_count: usize,
    pub avg_degree: S,
    pub clustering: S,
    pub heterogeneity: S,
}

/// Options controlling edge-list parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadOptions {
    /// Lines starting with any of these strings are skipped.
    pub comment_prefixes: Vec<String>,
    /// Field separator; `None` splits on runs of whitespace. With an
    /// explicit separator, empty fields (from consecutive separators) are
    /// ignored and fields are trimmed.
    pub separator: Option<char>,
    /// Treat tokens as 1-based integers (Pajek-style exports) instead of
    /// opaque labels. Ids are compacted in ascending numeric order.
    pub one_indexed: bool,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions {
            comment_prefixes: vec!["#".to_string(), "%".to_string()],
            separator: None,
            one_indexed: false,
        }
    }
}

/// Cleaning counters reported by [`load_edge_list`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadReport {
    /// Non-comment, non-empty lines parsed.
    pub data_lines: usize,
    /// Extra occurrences of an edge (either orientation) that were merged.
    pub duplicate_edges: usize,
    /// Self-loop lines dropped.
    pub self_loops: usize,
}

/// A parsed graph together with its cleaning report.
#[derive(Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub report: LoadReport,
}

/// Reads an undirected edge list.
///
/// Each non-comment line must hold at least two fields; the first two name
/// the endpoints and trailing fields (weights, timestamps) are ignored.
/// Node tokens are mapped to contiguous ids — in first-appearance order for
/// labels, in ascending numeric order with `one_indexed` — and the original
/// tokens stay available through [`Graph::label`].
pub fn load_edge_list(reader: impl BufRead, options: &LoadOptions) -> Result<LoadedGraph> {
    let mut raw: Vec<(String, String)> = Vec::new();
    let mut report = LoadReport::default();

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        let line = line.trim();
        if line.is_empty()
            || options
                .comment_prefixes
                .iter()
                .any(|p| !p.is_empty() && line.starts_with(p.as_str()))
        {
            continue;
        }
        let fields: Vec<&str> = match options.separator {
            None => line.split_whitespace().collect(),
            Some(sep) => line
                .split(sep)
                .map(str::trim)
                .filter(|f| !f.is_empty())
                .collect(),
        };
        if fields.len() < 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected at least two fields, found {}", fields.len()),
            });
        }
        report.data_lines += 1;
        raw.push((fields[0].to_string(), fields[1].to_string()));
    }

    let (pairs, labels) = if options.one_indexed {
        map_numeric_ids(&raw)?
    } else {
        map_label_ids(&raw)
    };

    let mut seen: HashSet<Edge> = HashSet::with_capacity(pairs.len());
    let mut kept: Vec<Edge> = Vec::with_capacity(pairs.len());
    for (u, v) in pairs {
        if u == v {
            report.self_loops += 1;
        } else if seen.insert(canonical(u, v)) {
            kept.push(canonical(u, v));
        } else {
            report.duplicate_edges += 1;
        }
    }
    if kept.is_empty() {
        return Err(Error::EmptyGraph);
    }

    let mut graph = Graph::from_edges(labels.len(), kept)?;
    graph.labels = Some(labels);
    Ok(LoadedGraph { graph, report })
}

fn map_label_ids(raw: &[(String, String)]) -> (Vec<(NodeId, NodeId)>, Vec<String>) {
    let mut ids: HashMap<String, NodeId> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut pairs = Vec::with_capacity(raw.len());
    for (u, v) in raw {
        let mut intern = |token: &String| -> NodeId {
            if let Some(&i) = ids.get(token) {
                i
            } else {
                let i = labels.len() as NodeId;
                labels.push(token.clone());
                ids.insert(token.clone(), i);
                i
            }
        };
        let ui = intern(u);
        let vi = intern(v);
        pairs.push((ui, vi));
    }
    (pairs, labels)
}

fn map_numeric_ids(raw: &[(String, String)]) -> Result<(Vec<(NodeId, NodeId)>, Vec<String>)> {
    let parse = |token: &str, line_hint: usize| -> Result<u64> {
        match token.parse::<u64>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => Err(Error::Parse {
                line: line_hint,
                message: format!("expected a positive integer node id, found {token:?}"),
            }),
        }
    };
    let mut numeric = Vec::with_capacity(raw.len());
    for (idx, (u, v)) in raw.iter().enumerate() {
        numeric.push((parse(u, idx + 1)?, parse(v, idx + 1)?));
    }
    let mut distinct: Vec<u64> = numeric.iter().flat_map(|&(u, v)| [u, v]).collect();
    distinct.sort_unstable();
    distinct.dedup();
    let index: HashMap<u64, NodeId> = distinct
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as NodeId))
        .collect();
    let pairs = numeric
        .iter()
        .map(|&(u, v)| (index[&u], index[&v]))
        .collect();
    let labels = distinct.iter().map(|v| v.to_string()).collect();
    Ok((pairs, labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn load(text: &str, options: &LoadOptions) -> Result<LoadedGraph> {
        load_edge_list(Cursor::new(text), options)
    }

    #[test]
    fn duplicate_and_reversed_lines_collapse() {
        let loaded = load("1 2\n2 3\n2 1\n", &LoadOptions::default()).unwrap();
        assert_eq!(loaded.graph.node_count(), 3);
        assert_eq!(loaded.graph.edge_count(), 2);
        assert_eq!(loaded.report.duplicate_edges, 1);
        assert_eq!(loaded.report.data_lines, 3);
    }

    #[test]
    fn labeled_triangle_loads_in_first_appearance_order() {
        let loaded = load("a b\nb c\nc a\n", &LoadOptions::default()).unwrap();
        let g = &loaded.graph;
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.label(0), Some("a"));
        assert_eq!(g.label(1), Some("b"));
        assert_eq!(g.label(2), Some("c"));
    }

    #[test]
    fn self_loop_only_input_is_an_empty_graph_error() {
        let err = load("1 1\n", &LoadOptions::default()).unwrap_err();
        assert!(matches!(err, Error::EmptyGraph));
    }

    #[test]
    fn malformed_line_reports_its_number() {
        let err = load("1 2\nbad\n", &LoadOptions::default()).unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn comments_extra_fields_and_custom_separator() {
        let opts = LoadOptions {
            separator: Some(','),
            ..LoadOptions::default()
        };
        let loaded = load("# header\na,b,0.5\n% alt comment\nb,c,1.0\n", &opts).unwrap();
        assert_eq!(loaded.graph.edge_count(), 2);
        assert_eq!(loaded.report.data_lines, 2);
    }

    #[test]
    fn one_indexed_ids_compact_in_numeric_order() {
        let opts = LoadOptions {
            one_indexed: true,
            ..LoadOptions::default()
        };
        let loaded = load("3 5\n1 3\n", &opts).unwrap();
        let g = &loaded.graph;
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.label(0), Some("1"));
        assert_eq!(g.label(1), Some("3"));
        assert_eq!(g.label(2), Some("5"));
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn one_indexed_rejects_zero_and_text() {
        let opts = LoadOptions {
            one_indexed: true,
            ..LoadOptions::default()
        };
        assert!(load("0 2\n", &opts).is_err());
        assert!(load("a 2\n", &opts).is_err());
    }

    #[test]
    fn giant_component_keeps_largest_and_relabels() {
        // Triangle on {0,1,2} plus an isolated edge {3,4}.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let gcc = g.giant_component();
        assert_eq!(gcc.node_count(), 3);
        assert_eq!(gcc.edge_count(), 3);
        assert!(gcc.is_connected());
    }

    #[test]
    fn giant_component_tie_goes_to_smallest_id() {
        let g = Graph::from_edges(4, [(2, 3), (0, 1)]).unwrap();
        let gcc = g.giant_component();
        assert_eq!(gcc.node_count(), 2);
        assert_eq!(gcc.edges(), &[(0, 1)]);
    }

    #[test]
    fn giant_component_relabels_labels_too() {
        let loaded = load("x y\ny z\np q\n", &LoadOptions::default()).unwrap();
        let gcc = loaded.graph.giant_component();
        assert_eq!(gcc.node_count(), 3);
        let labels: Vec<_> = (0..3).map(|i| gcc.label(i).unwrap().to_string()).collect();
        assert_eq!(labels, ["x", "y", "z"]);
    }

    #[test]
    fn star_stats_match_hand_computation() {
        // Star with hub 0: degrees {3,1,1,1}.
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = g.stats::<f64>();
        assert_eq!(s.avg_degree, 1.5);
        assert_eq!(s.clustering, 0.0);
        assert_eq!(s.heterogeneity, 4.0 / 3.0);
    }

    #[test]
    fn complete_graph_stats_are_exact() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let s = g.stats::<f64>();
        assert_eq!(s.avg_degree, 3.0);
        assert_eq!(s.clustering, 1.0);
        assert_eq!(s.heterogeneity, 1.0);
    }

    #[test]
    fn triangle_stats() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let s = g.stats::<f64>();
        assert_eq!(s.clustering, 1.0);
        assert_eq!(s.heterogeneity, 1.0);
    }

    #[test]
    fn stats_are_generic_over_width() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let s32 = g.stats::<f32>();
        assert_eq!(s32.avg_degree, 1.5f32);
    }

    #[test]
    fn edge_popularity_clamps_and_multiplies() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(g.edge_popularity(0, 1).unwrap(), 0); // leaf factor zero
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.edge_popularity(0, 1).unwrap(), 4);
        // Isolated endpoints clamp to zero rather than underflowing.
        let sparse = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(sparse.edge_popularity(0, 2).unwrap(), 0);
    }

    #[test]
    fn common_neighbors_counts_intersections() {
        let triangle = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(triangle.common_neighbors(0, 1).unwrap(), 1);
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.common_neighbors(0, 2).unwrap(), 1);
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(split.common_neighbors(0, 2).unwrap(), 0);
    }

    #[test]
    fn unknown_node_is_an_error() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(matches!(
            g.common_neighbors(0, 7),
            Err(Error::UnknownNode(7))
        ));
        assert!(matches!(g.edge_popularity(9, 0), Err(Error::UnknownNode(9))));
    }

    #[test]
    fn write_then_load_round_trips() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let mut buf = Vec::new();
        g.write_edge_list(&mut buf).unwrap();
        let opts = LoadOptions::default();
        let back = load_edge_list(Cursor::new(buf), &opts).unwrap().graph;
        assert_eq!(back.edges(), g.edges());
    }
}
