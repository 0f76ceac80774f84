//! Local similarity indices over a training graph.
//!
//! Each index scores a node pair from the pair's training-graph
//! neighborhoods and degrees alone. The neighborhood-normalized indices
//! (everything except the raw counts and the degree product) are defined as
//! zero when the pair has no common neighbors, which also sidesteps their
//! zero denominators.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{canonical, Edge, Graph, NodeId};
use crate::scalar::Real;

/// The ten similarity indices.
///
/// The short names double as the config and output vocabulary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MeasureId {
    /// Common neighbors: `|n(i) ∩ n(j)|`.
    #[serde(rename = "CN")]
    Cn,
    /// Adamic–Adar: common neighbors weighted by `1 / ln(k_q)`.
    #[serde(rename = "AA")]
    Aa,
    /// Resource allocation: common neighbors weighted by `1 / k_q`.
    #[serde(rename = "RA")]
    Ra,
    /// Salton (cosine) index: `CN / sqrt(k_i * k_j)`.
    #[serde(rename = "SAI")]
    Sai,
    /// Jaccard index: `CN / |n(i) ∪ n(j)|`.
    #[serde(rename = "JI")]
    Ji,
    /// Sørensen index: `2 CN / (k_i + k_j)`.
    #[serde(rename = "SPI")]
    Spi,
    /// Hub-promoted index: `CN / min(k_i, k_j)`.
    #[serde(rename = "HPI")]
    Hpi,
    /// Hub-depressed index: `CN / max(k_i, k_j)`.
    #[serde(rename = "HDI")]
    Hdi,
    /// Leicht–Holme–Newman index: `CN / (k_i * k_j)`.
    #[serde(rename = "LHN")]
    Lhn,
    /// Preferential attachment: `k_i * k_j`, no neighborhood information.
    #[serde(rename = "PA")]
    Pa,
}

/// All ten measures in canonical presentation order.
pub const ALL_MEASURES: [MeasureId; 10] = [
    MeasureId::Cn,
    MeasureId::Aa,
    MeasureId::Ra,
    MeasureId::Sai,
    MeasureId::Ji,
    MeasureId::Spi,
    MeasureId::Hpi,
    MeasureId::Hdi,
    MeasureId::Lhn,
    MeasureId::Pa,
];

impl MeasureId {
    pub fn name(self) -> &'static str {
        match self {
            MeasureId::Cn => "CN",
            MeasureId::Aa => "AA",
            MeasureId::Ra => "RA",
            MeasureId::Sai => "SAI",
            MeasureId::Ji => "JI",
            MeasureId::Spi => "SPI",
            MeasureId::Hpi => "HPI",
            MeasureId::Hdi => "HDI",
            MeasureId::Lhn => "LHN",
            MeasureId::Pa => "PA",
        }
    }
}

impl fmt::Display for MeasureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MeasureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.to_ascii_uppercase();
        ALL_MEASURES
            .into_iter()
            .find(|m| m.name() == upper)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "unknown measure {s:?} (expected one of CN, AA, RA, SAI, JI, SPI, HPI, HDI, LHN, PA)"
                ))
            })
    }
}

/// Everything the ten formulas need about one pair, computed in a single
/// pass over the two sorted neighbor lists.
pub(crate) struct PairProfile<S> {
    pub cn: u64,
    pub k_i: u64,
    pub k_j: u64,
    /// Sum of `1 / k_q` over common neighbors `q`.
    pub inv_degree_sum: S,
    /// Sum of `1 / ln(k_q)` over common neighbors `q`.
    pub inv_log_degree_sum: S,
}

pub(crate) fn pair_profile<S: Real>(train: &Graph, i: NodeId, j: NodeId) -> PairProfile<S> {
    let a = train.neighbors(i);
    let b = train.neighbors(j);
    let mut profile = PairProfile {
        cn: 0,
        k_i: a.len() as u64,
        k_j: b.len() as u64,
        inv_degree_sum: S::zero(),
        inv_log_degree_sum: S::zero(),
    };
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            Ordering::Less => x += 1,
            Ordering::Greater => y += 1,
            Ordering::Equal => {
                let k_q = train.degree(a[x]) as u64;
                // A common neighbor of i and j has at least those two
                // training edges, so the log weight can never blow up.
                assert!(k_q >= 2, "common neighbor with degree < 2");
                profile.cn += 1;
                profile.inv_degree_sum += S::ratio(1, k_q);
                profile.inv_log_degree_sum += S::one() / S::from_count(k_q).ln();
                x += 1;
                y += 1;
            }
        }
    }
    profile
}

pub(crate) fn score_from_profile<S: Real>(measure: MeasureId, p: &PairProfile<S>) -> S {
    let cn = p.cn;
    match measure {
        MeasureId::Pa => return S::from_count(p.k_i * p.k_j),
        MeasureId::Cn => return S::from_count(cn),
        MeasureId::Aa => return p.inv_log_degree_sum,
        MeasureId::Ra => return p.inv_degree_sum,
        _ => {}
    }
    if cn == 0 {
        return S::zero();
    }
    match measure {
        MeasureId::Sai => S::from_count(cn) / S::from_count(p.k_i * p.k_j).sqrt(),
        MeasureId::Ji => S::ratio(cn, p.k_i + p.k_j - cn),
        MeasureId::Spi => S::ratio(2 * cn, p.k_i + p.k_j),
        MeasureId::Hpi => S::ratio(cn, p.k_i.min(p.k_j)),
        MeasureId::Hdi => S::ratio(cn, p.k_i.max(p.k_j)),
        MeasureId::Lhn => S::ratio(cn, p.k_i * p.k_j),
        _ => unreachable!("count measures handled above"),
    }
}

/// Scores a node pair with one index, reading only the training graph.
pub fn score<S: Real>(measure: MeasureId, train: &Graph, i: NodeId, j: NodeId) -> Result<S> {
    train.check_node(i)?;
    train.check_node(j)?;
    if i == j {
        return Err(Error::IdenticalEndpoints(i));
    }
    Ok(score_from_profile(measure, &pair_profile(train, i, j)))
}

/// Scores a node pair with all ten indices at once, sharing the
/// neighborhood pass. Output order matches [`ALL_MEASURES`].
pub fn score_all<S: Real>(train: &Graph, i: NodeId, j: NodeId) -> Result<[S; 10]> {
    train.check_node(i)?;
    train.check_node(j)?;
    if i == j {
        return Err(Error::IdenticalEndpoints(i));
    }
    let profile = pair_profile(train, i, j);
    Ok(ALL_MEASURES.map(|m| score_from_profile(m, &profile)))
}

/// A candidate pair with its score.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoredPair<S> {
    /// Canonical pair, smaller id first.
    pub pair: Edge,
    pub score: S,
}

/// Ranking order used everywhere: descending score, ties broken by
/// ascending pair so results are reproducible.
pub fn rank_order<S: Real>(a: &ScoredPair<S>, b: &ScoredPair<S>) -> Ordering {
    b.score
        .partial_cmp(&a.score)
        .expect("similarity scores are finite")
        .then_with(|| a.pair.cmp(&b.pair))
}

/// Scores every candidate (all must be non-edges of `train`) and returns
/// them in ranking order.
pub fn score_candidates<S: Real>(
    measure: MeasureId,
    train: &Graph,
    candidates: &[Edge],
) -> Result<Vec<ScoredPair<S>>> {
    let mut scored = Vec::with_capacity(candidates.len());
    for &(u, v) in candidates {
        let pair = canonical(u, v);
        if train.has_edge(pair.0, pair.1) {
            return Err(Error::CandidateIsTrainingEdge(pair.0, pair.1));
        }
        scored.push(ScoredPair {
            pair,
            score: score(measure, train, pair.0, pair.1)?,
        });
    }
    scored.sort_unstable_by(rank_order);
    Ok(scored)
}

/// Iterates every non-edge of `train` in ascending canonical order.
pub fn non_edges(train: &Graph) -> impl Iterator<Item = Edge> + '_ {
    let n = train.node_count() as NodeId;
    (0..n).flat_map(move |i| {
        ((i + 1)..n).filter_map(move |j| {
            if train.has_edge(i, j) {
                None
            } else {
                Some((i, j))
            }
        })
    })
}

/// Non-edges with at least one common training neighbor, sorted ascending.
///
/// These are the only pairs the neighborhood-based indices can score above
/// zero, so rankings over all non-edges can be built from this much smaller
/// set plus canonical-order padding.
pub fn cn_positive_non_edges(train: &Graph) -> Vec<Edge> {
    let mut pairs: Vec<Edge> = Vec::new();
    for q in 0..train.node_count() as NodeId {
        let around = train.neighbors(q);
        for (idx, &u) in around.iter().enumerate() {
            for &v in &around[idx + 1..] {
                // Neighbor lists are ascending, so (u, v) is canonical.
                if !train.has_edge(u, v) {
                    pairs.push((u, v));
                }
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}
