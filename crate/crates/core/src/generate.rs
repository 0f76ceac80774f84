//! Deterministic synthetic graph generators for tests and benchmarks.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{canonical, Edge, Graph, NodeId};

/// Families of synthetic graphs.
///
/// Generation is a pure function of `(Synthetic, seed)`: the same pair
/// always produces the same graph, on every platform.
#[derive(Debug, Clone, PartialEq)]
pub enum Synthetic {
    /// Complete graph on `n >= 1` nodes.
    Complete { n: usize },
    /// Cycle on `n >= 3` nodes; 2-regular.
    Ring { n: usize },
    /// `m` distinct edges drawn uniformly from all pairs of `n` nodes.
    /// May be disconnected; callers usually take the giant component.
    RandomUniform { n: usize, m: usize },
    /// Growing graph: each new node attaches `edges_per_node` edges to
    /// existing nodes picked proportionally to degree. After the first
    /// attachment, each further edge instead closes a triangle through the
    /// previous target with probability `triangle_p`, which raises
    /// clustering without changing the heavy-tailed degree growth
    /// (`triangle_p = 0` gives the plain growth model). Connected by
    /// construction.
    PreferentialAttachment {
        n: usize,
        edges_per_node: usize,
        triangle_p: f64,
    },
}

impl Synthetic {
    /// Builds the graph for this description and seed.
    pub fn generate(&self, seed: u64) -> Result<Graph> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match *self {
            Synthetic::Complete { n } => complete(n),
            Synthetic::Ring { n } => ring(n),
            Synthetic::RandomUniform { n, m } => random_uniform(n, m, &mut rng),
            Synthetic::PreferentialAttachment {
                n,
                edges_per_node,
                triangle_p,
            } => preferential_attachment(n, edges_per_node, triangle_p, &mut rng),
        }
    }
}

fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "complete graph needs at least one node".into(),
        ));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n as NodeId {
        for v in (u + 1)..n as NodeId {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges)
}

fn ring(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "a ring needs at least 3 nodes, got {n}"
        )));
    }
    let edges = (0..n as NodeId).map(|u| canonical(u, (u + 1) % n as NodeId));
    Graph::from_edges(n, edges)
}

fn random_uniform(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "uniform random graph needs at least two nodes".into(),
        ));
    }
    let max_edges = n * (n - 1) / 2;
    if m < 1 || m > max_edges {
        return Err(Error::InvalidParameter(format!(
            "edge count {m} outside 1..={max_edges} for {n} nodes"
        )));
    }
    let edges: Vec<Edge> = if m * 2 > max_edges {
        // Dense request: materialize every pair and take a random prefix.
        let mut all = Vec::with_capacity(max_edges);
        for u in 0..n as NodeId {
            for v in (u + 1)..n as NodeId {
                all.push((u, v));
            }
        }
        let (chosen, _) = all.partial_shuffle(rng, m);
        chosen.to_vec()
    } else {
        let mut picked: HashSet<Edge> = HashSet::with_capacity(m);
        while picked.len() < m {
            let u = rng.random_range(0..n) as NodeId;
            let v = rng.random_range(0..n) as NodeId;
            if u != v {
                picked.insert(canonical(u, v));
            }
        }
        picked.into_iter().collect()
    };
    Graph::from_edges(n, edges)
}

fn preferential_attachment(
    n: usize,
    edges_per_node: usize,
    triangle_p: f64,
    rng: &mut ChaCha8Rng,
) -> Result<Graph> {
    if edges_per_node < 1 || edges_per_node >= n {
        return Err(Error::InvalidParameter(format!(
            "edges_per_node must lie in 1..{n}, got {edges_per_node}"
        )));
    }
    if !(0.0..=1.0).contains(&triangle_p) {
        return Err(Error::InvalidParameter(format!(
            "triangle_p must lie in [0, 1], got {triangle_p}"
        )));
    }

    // Start from a clique on edges_per_node + 1 nodes so every early pick
    // has nonzero degree.
    let core = edges_per_node + 1;
    let mut edges: Vec<Edge> = Vec::new();
    let mut adjacency: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    // One entry per endpoint per edge; uniform picks from this list are
    // degree-proportional.
    let mut endpoint_pool: Vec<NodeId> = Vec::new();
    let mut add_edge = |u: NodeId,
                        v: NodeId,
                        edges: &mut Vec<Edge>,
                        adjacency: &mut Vec<Vec<NodeId>>,
                        endpoint_pool: &mut Vec<NodeId>| {
        edges.push(canonical(u, v));
        adjacency[u as usize].push(v);
        adjacency[v as usize].push(u);
        endpoint_pool.push(u);
        endpoint_pool.push(v);
    };

    for u in 0..core as NodeId {
        for v in (u + 1)..core as NodeId {
            add_edge(u, v, &mut edges, &mut adjacency, &mut endpoint_pool);
        }
    }

    for v in core as NodeId..n as NodeId {
        let mut chosen: Vec<NodeId> = Vec::with_capacity(edges_per_node);
        let mut previous: Option<NodeId> = None;
        for _ in 0..edges_per_node {
            let mut target = None;
            if let Some(prev) = previous {
                if rng.random::<f64>() < triangle_p {
                    // Close a triangle: pick an unused neighbor of the
                    // previous target.
                    let options: Vec<NodeId> = adjacency[prev as usize]
                        .iter()
                        .copied()
                        .filter(|w| *w != v && !chosen.contains(w))
                        .collect();
                    if !options.is_empty() {
                        target = Some(options[rng.random_range(0..options.len())]);
                    }
                }
            }
            let target = target.unwrap_or_else(|| {
                // Degree-proportional pick; rejection keeps targets distinct.
                loop {
                    let t = endpoint_pool[rng.random_range(0..endpoint_pool.len())];
                    if t != v && !chosen.contains(&t) {
                        break t;
                    }
                }
            });
            chosen.push(target);
            previous = Some(target);
        }
        for &t in &chosen {
            add_edge(v, t, &mut edges, &mut adjacency, &mut endpoint_pool);
        }
    }

    Graph::from_edges(n, edges)
}
