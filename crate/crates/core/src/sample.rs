//! Edge-sampling procedures that split a graph into training and probe sets.
//!
//! All five procedures return a [`Partition`] whose training side holds
//! exactly `ceil(s_f * |E|)` edges; the probe side is the complement. Edge
//! collection is stopped the moment the target is reached — even mid-node
//! for the traversal-based methods — so probe sizes are identical across
//! methods and their evaluation results are directly comparable.
//!
//! Every procedure is a pure function of `(graph, parameters, seed)`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, NodeId};

/// Steps allowed per collected edge before a walk-based sampler gives up.
const WALK_BUDGET_FACTOR: u64 = 10_000;

/// Train/probe split of a graph's edge set.
///
/// Both sides are in canonical order (ascending pairs), independent of the
/// order in which the sampler happened to discover edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub train_edges: Vec<Edge>,
    pub probe_edges: Vec<Edge>,
}

impl Partition {
    /// Builds the training graph on the same node set as the sampled graph.
    pub fn train_graph(&self, node_count: usize) -> Graph {
        Graph::from_edges(node_count, self.train_edges.iter().copied())
            .expect("training edges come from a valid graph")
    }
}

/// The five sampling procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SamplerMethod {
    /// Breadth-first edge collection from a random start node; biased
    /// toward high-degree regions.
    #[serde(rename = "BFS")]
    Bfs,
    /// Metropolis–Hastings random walk whose acceptance rule targets
    /// uniform node occupancy.
    #[serde(rename = "MHRW")]
    Mhrw,
    /// Frontier sampling: `m` dependent walkers, advanced by picking a
    /// walker with probability proportional to its current node's degree.
    #[serde(rename = "FS")]
    Fs,
    /// Forest fire: burn outward from seeds, igniting a geometric number
    /// of unvisited neighbors per burned node.
    #[serde(rename = "FF")]
    Ff,
    /// Pure random: a uniform subset of the edge list.
    #[serde(rename = "PR")]
    Pr,
}

impl SamplerMethod {
    pub const ALL: [SamplerMethod; 5] = [
        SamplerMethod::Bfs,
        SamplerMethod::Mhrw,
        SamplerMethod::Fs,
        SamplerMethod::Ff,
        SamplerMethod::Pr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SamplerMethod::Bfs => "BFS",
            SamplerMethod::Mhrw => "MHRW",
            SamplerMethod::Fs => "FS",
            SamplerMethod::Ff => "FF",
            SamplerMethod::Pr => "PR",
        }
    }
}

impl fmt::Display for SamplerMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SamplerMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "BFS" => Ok(SamplerMethod::Bfs),
            "MHRW" => Ok(SamplerMethod::Mhrw),
            "FS" => Ok(SamplerMethod::Fs),
            "FF" => Ok(SamplerMethod::Ff),
            "PR" => Ok(SamplerMethod::Pr),
            other => Err(Error::InvalidParameter(format!(
                "unknown sampler {other:?} (expected BFS, MHRW, FS, FF or PR)"
            ))),
        }
    }
}

/// A fully parameterized sampling request.
///
/// `m` applies to FS and `p_f` to FF; both are ignored by the other
/// methods. `s_f` may be anything in `(0, 1]`; note that `s_f = 1` leaves
/// an empty probe set, which the evaluators reject.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SamplerSpec {
    pub method: SamplerMethod,
    pub s_f: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_f: Option<f64>,
}

impl SamplerSpec {
    /// Runs the described sampler.
    pub fn sample(&self, graph: &Graph, seed: u64) -> Result<Partition> {
        match self.method {
            SamplerMethod::Bfs => sample_bfs(graph, self.s_f, seed),
            SamplerMethod::Mhrw => sample_mhrw(graph, self.s_f, seed),
            SamplerMethod::Fs => {
                let m = self.m.ok_or_else(|| {
                    Error::InvalidParameter("FS needs the frontier size m".into())
                })?;
                sample_fs(graph, self.s_f, m, seed)
            }
            SamplerMethod::Ff => {
                let p_f = self.p_f.ok_or_else(|| {
                    Error::InvalidParameter("FF needs the burn parameter p_f".into())
                })?;
                sample_ff(graph, self.s_f, p_f, seed)
            }
            SamplerMethod::Pr => sample_pr(graph, self.s_f, seed),
        }
    }
}

/// Training-set size for a sampling fraction: the ceiling of `s_f * |E|`
/// over the reals. The float product is snapped to the nearest integer when
/// within a relative 1e-12 of it, so fractions like `1 - 1/|E|` (whose
/// product is mathematically an integer) do not round up spuriously.
fn train_target(edge_count: usize, s_f: f64) -> Result<usize> {
    if !s_f.is_finite() || s_f <= 0.0 || s_f > 1.0 {
        return Err(Error::InvalidParameter(format!(
            "s_f must lie in (0, 1], got {s_f}"
        )));
    }
    if edge_count == 0 {
        return Err(Error::InvalidParameter(
            "cannot sample a graph with no edges".into(),
        ));
    }
    let product = s_f * edge_count as f64;
    let nearest = product.round();
    let target = if (product - nearest).abs() <= nearest.max(1.0) * 1e-12 {
        nearest as usize
    } else {
        product.ceil() as usize
    };
    Ok(target.clamp(1, edge_count))
}

/// Tracks which edges have been collected, against a fixed target.
struct TrainSet<'g> {
    graph: &'g Graph,
    picked: Vec<bool>,
    count: usize,
    target: usize,
}

impl<'g> TrainSet<'g> {
    fn new(graph: &'g Graph, target: usize) -> Self {
        TrainSet {
            graph,
            picked: vec![false; graph.edge_count()],
            count: 0,
            target,
        }
    }

    /// Marks `(u, v)` as training; returns true when it is newly added.
    fn add(&mut self, u: NodeId, v: NodeId) -> bool {
        let idx = self
            .graph
            .edge_position(u, v)
            .expect("samplers only visit edges of the graph");
        if self.picked[idx] {
            false
        } else {
            self.picked[idx] = true;
            self.count += 1;
            true
        }
    }

    fn full(&self) -> bool {
        self.count >= self.target
    }

    fn into_partition(self) -> Partition {
        let mut train_edges = Vec::with_capacity(self.count);
        let mut probe_edges = Vec::with_capacity(self.graph.edge_count() - self.count);
        for (idx, &edge) in self.graph.edges().iter().enumerate() {
            if self.picked[idx] {
                train_edges.push(edge);
            } else {
                probe_edges.push(edge);
            }
        }
        Partition {
            train_edges,
            probe_edges,
        }
    }
}

/// Breadth-first sampling.
///
/// Starts at a uniformly random node and dequeues FIFO; the current node's
/// edges enter the training set one at a time in ascending-neighbor order,
/// stopping the whole traversal the moment the target is reached. Requires
/// a connected graph to be able to reach every edge.
pub fn sample_bfs(graph: &Graph, s_f: f64, seed: u64) -> Result<Partition> {
    let target = train_target(graph.edge_count(), s_f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut train = TrainSet::new(graph, target);

    let n = graph.node_count();
    let start = rng.random_range(0..n) as NodeId;
    let mut discovered = vec![false; n];
    let mut queue = VecDeque::new();
    discovered[start as usize] = true;
    queue.push_back(start);

    'traversal: while let Some(i) = queue.pop_front() {
        for &j in graph.neighbors(i) {
            if train.add(i, j) && train.full() {
                break 'traversal;
            }
            if !discovered[j as usize] {
                discovered[j as usize] = true;
                queue.push_back(j);
            }
        }
    }

    if !train.full() {
        return Err(Error::UnreachableTarget {
            method: "BFS",
            collected: train.count,
            target,
        });
    }
    Ok(train.into_partition())
}

/// Occupancy record of one Metropolis–Hastings walk, used to test its
/// uniformity against a plain random walk.
#[derive(Debug, Clone)]
pub(crate) struct WalkTrace {
    /// Visit count per node, counting a rejected proposal as another visit
    /// to the current node.
    pub visits: Vec<u64>,
    pub steps: u64,
    pub stays: u64,
}

/// Metropolis–Hastings random-walk sampling. See [`sample_mhrw`].
pub(crate) fn mhrw_with_trace(graph: &Graph, s_f: f64, seed: u64) -> Result<(Partition, WalkTrace)> {
    let target = train_target(graph.edge_count(), s_f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut train = TrainSet::new(graph, target);

    let n = graph.node_count();
    let mut current = rng.random_range(0..n) as NodeId;
    if graph.degree(current) == 0 {
        return Err(Error::UnreachableTarget {
            method: "MHRW",
            collected: 0,
            target,
        });
    }
    let budget = WALK_BUDGET_FACTOR.saturating_mul(target as u64);
    let mut trace = WalkTrace {
        visits: vec![0; n],
        steps: 0,
        stays: 0,
    };
    trace.visits[current as usize] += 1;

    while !train.full() {
        if trace.steps >= budget {
            return Err(Error::StepBudgetExhausted {
                method: "MHRW",
                target,
                budget,
            });
        }
        trace.steps += 1;
        let neighbors = graph.neighbors(current);
        let proposal = neighbors[rng.random_range(0..neighbors.len())];
        // Accept with min(1, k_i / k_j): moving toward lower degree is
        // always accepted, toward higher degree proportionally rarely.
        let ratio = graph.degree(current) as f64 / graph.degree(proposal) as f64;
        if rng.random::<f64>() <= ratio {
            train.add(current, proposal);
            current = proposal;
        } else {
            trace.stays += 1;
        }
        trace.visits[current as usize] += 1;
    }
    Ok((train.into_partition(), trace))
}

/// Metropolis–Hastings random-walk sampling.
///
/// From node `i`, proposes a uniform neighbor `j` and accepts the move with
/// probability `min(1, k_i / k_j)`; accepted traversals add the crossed
/// edge. Rejections keep the walk in place, which is what makes long-run
/// node occupancy uniform instead of degree-biased. Gives up with a budget
/// error after `10_000 * target` proposals.
pub fn sample_mhrw(graph: &Graph, s_f: f64, seed: u64) -> Result<Partition> {
    mhrw_with_trace(graph, s_f, seed).map(|(partition, _)| partition)
}

/// Frontier sampling.
///
/// Seeds `m <= |V|` distinct walkers uniformly at random. Each step picks a
/// walker with probability proportional to its node's degree, crosses a
/// uniform incident edge, adds it, and moves that walker. Multiple walkers
/// may share a node; exactly the chosen one moves.
pub fn sample_fs(graph: &Graph, s_f: f64, m: usize, seed: u64) -> Result<Partition> {
    let n = graph.node_count();
    if m == 0 {
        return Err(Error::InvalidParameter(
            "frontier size m must be at least 1".into(),
        ));
    }
    if m > n {
        return Err(Error::InvalidParameter(format!(
            "frontier size m = {m} exceeds the node count |V| = {n}"
        )));
    }
    let target = train_target(graph.edge_count(), s_f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut train = TrainSet::new(graph, target);

    let mut slots: Vec<NodeId> = rand::seq::index::sample(&mut rng, n, m)
        .into_iter()
        .map(|i| i as NodeId)
        .collect();
    let mut degree_total: u64 = slots.iter().map(|&v| graph.degree(v) as u64).sum();
    let budget = WALK_BUDGET_FACTOR.saturating_mul(target as u64);
    let mut steps: u64 = 0;

    while !train.full() {
        if steps >= budget {
            return Err(Error::StepBudgetExhausted {
                method: "FS",
                target,
                budget,
            });
        }
        steps += 1;
        if degree_total == 0 {
            // Every walker sits on an isolated node; nothing is reachable.
            return Err(Error::UnreachableTarget {
                method: "FS",
                collected: train.count,
                target,
            });
        }
        // Degree-proportional walker pick by integer weight.
        let mut ticket = rng.random_range(0..degree_total);
        let mut slot = 0;
        for (idx, &node) in slots.iter().enumerate() {
            let weight = graph.degree(node) as u64;
            if ticket < weight {
                slot = idx;
                break;
            }
            ticket -= weight;
        }
        let i = slots[slot];
        let neighbors = graph.neighbors(i);
        let j = neighbors[rng.random_range(0..neighbors.len())];
        train.add(i, j);
        degree_total = degree_total - graph.degree(i) as u64 + graph.degree(j) as u64;
        slots[slot] = j;
    }
    Ok(train.into_partition())
}

/// Number of neighbors a burning node ignites: geometric on `{0, 1, 2, …}`
/// with success probability `1 - p_f`, so the mean is `p_f / (1 - p_f)`.
///
/// Exposed so the distribution itself can be validated; `p_f` must lie in
/// `(0, 1)`.
pub fn burn_spread(p_f: f64, rng: &mut impl Rng) -> u64 {
    debug_assert!(p_f > 0.0 && p_f < 1.0);
    Geometric::new(1.0 - p_f)
        .expect("success probability in (0, 1)")
        .sample(rng)
}

/// Forest-fire sampling.
///
/// Pops nodes FIFO from a burn queue: the popped node burns, its edges are
/// added one at a time in ascending-neighbor order (stopping exactly at the
/// target), and a geometric number of its not-yet-visited neighbors join
/// the queue. When the queue burns out before the target, the fire restarts
/// at a fresh uniformly random unburned node, which guarantees termination.
pub fn sample_ff(graph: &Graph, s_f: f64, p_f: f64, seed: u64) -> Result<Partition> {
    if !(p_f > 0.0 && p_f < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "p_f must lie in (0, 1), got {p_f}"
        )));
    }
    let target = train_target(graph.edge_count(), s_f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut train = TrainSet::new(graph, target);

    let n = graph.node_count();
    const UNTOUCHED: u8 = 0;
    const QUEUED: u8 = 1;
    const BURNED: u8 = 2;
    let mut state = vec![UNTOUCHED; n];
    let mut queue: VecDeque<NodeId> = VecDeque::new();
    let spread = Geometric::new(1.0 - p_f).expect("validated above");

    'fire: while !train.full() {
        let i = match queue.pop_front() {
            Some(i) => i,
            None => {
                let unburned: Vec<NodeId> = (0..n as NodeId)
                    .filter(|&v| state[v as usize] != BURNED)
                    .collect();
                // All nodes burned means all edges were collected, so the
                // loop condition would have stopped us already.
                debug_assert!(!unburned.is_empty());
                let seed_node = unburned[rng.random_range(0..unburned.len())];
                state[seed_node as usize] = QUEUED;
                seed_node
            }
        };
        state[i as usize] = BURNED;
        for &j in graph.neighbors(i) {
            if train.add(i, j) && train.full() {
                break 'fire;
            }
        }
        let fresh: Vec<NodeId> = graph
            .neighbors(i)
            .iter()
            .copied()
            .filter(|&v| state[v as usize] == UNTOUCHED)
            .collect();
        let burn_count = (spread.sample(&mut rng) as usize).min(fresh.len());
        for idx in rand::seq::index::sample(&mut rng, fresh.len(), burn_count) {
            let v = fresh[idx];
            state[v as usize] = QUEUED;
            queue.push_back(v);
        }
    }
    Ok(train.into_partition())
}

/// Pure-random sampling: a uniform subset of exactly the target size,
/// drawn by a partial Fisher–Yates shuffle of the edge list.
pub fn sample_pr(graph: &Graph, s_f: f64, seed: u64) -> Result<Partition> {
    let target = train_target(graph.edge_count(), s_f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut train = TrainSet::new(graph, target);

    let mut order: Vec<usize> = (0..graph.edge_count()).collect();
    let (chosen, _) = order.partial_shuffle(&mut rng, target);
    for &idx in chosen.iter() {
        let (u, v) = graph.edges()[idx];
        train.add(u, v);
    }
    Ok(train.into_partition())
}
