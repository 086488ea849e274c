//! Godsil–McKay switching.
//!
//! A partition `{X, Y}` is a switching set when `X` induces a regular
//! subgraph and every `y` in `Y` has `0`, `|X|/2` or `|X|` neighbours in `X`.
//! Switching complements, inside `X`, the neighbourhood of every `y` with
//! exactly `|X|/2` neighbours there. The result is cospectral with the input.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwitchingError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("vertex {0} is in both X and Y")]
    Overlap(Vertex),
    #[error("vertex {0} is in neither X nor Y")]
    Uncovered(Vertex),
    #[error("switching set must have even size at least 2, got {0}")]
    BadSize(usize),
    #[error("partition covers {partition} vertices but the graph has {graph}")]
    OrderMismatch { partition: usize, graph: usize },
    #[error("not a switching set: {0}")]
    Invalid(String),
    #[error("malformed partition JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingPartition {
    x: VertexSet,
    y: VertexSet,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionJson {
    #[serde(rename = "X")]
    x: Vec<Vertex>,
}

impl SwitchingPartition {
    pub fn new(n: usize, x: VertexSet, y: VertexSet) -> Result<Self, SwitchingError> {
        for v in x.iter().chain(y.iter()) {
            if v >= n {
                return Err(SwitchingError::OutOfRange { vertex: v, n });
            }
        }
        if let Some(v) = x.iter().find(|&v| y.contains(v)) {
            return Err(SwitchingError::Overlap(v));
        }
        if let Some(v) = (0..n).find(|&v| !x.contains(v) && !y.contains(v)) {
            return Err(SwitchingError::Uncovered(v));
        }
        if x.len() < 2 || x.len() % 2 == 1 {
            return Err(SwitchingError::BadSize(x.len()));
        }
        Ok(SwitchingPartition { x, y })
    }

    /// `Y` is everything outside `x`. Duplicate entries in `x` are rejected.
    pub fn from_x(n: usize, x: &[Vertex]) -> Result<Self, SwitchingError> {
        let set = VertexSet::new(x.iter().copied());
        if set.len() != x.len() {
            let mut seen = vec![false; n];
            for &v in x {
                if v < n && std::mem::replace(&mut seen[v], true) {
                    return Err(SwitchingError::Overlap(v));
                }
            }
        }
        let y = (0..n).filter(|&v| !set.contains(v)).collect();
        SwitchingPartition::new(n, set, y)
    }

    /// Parses `{"X": [...]}`.
    pub fn from_json(n: usize, json: &str) -> Result<Self, SwitchingError> {
        let raw: PartitionJson =
            serde_json::from_str(json).map_err(|e| SwitchingError::Json(e.to_string()))?;
        SwitchingPartition::from_x(n, &raw.x)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PartitionJson {
            x: self.x.as_slice().to_vec(),
        })
        .expect("plain integer list")
    }

    pub fn x(&self) -> &VertexSet {
        &self.x
    }

    pub fn y(&self) -> &VertexSet {
        &self.y
    }

    pub fn order(&self) -> usize {
        self.x.len() + self.y.len()
    }

    fn check_order(&self, g: &Graph) -> Result<(), SwitchingError> {
        if self.order() != g.order() {
            return Err(SwitchingError::OrderMismatch {
                partition: self.order(),
                graph: g.order(),
            });
        }
        Ok(())
    }
}

/// A vertex of `Y` whose neighbour count in `X` is not `0`, `|X|/2` or `|X|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Offender {
    pub vertex: Vertex,
    pub neighbors_in_x: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchingReport {
    pub valid: bool,
    /// Common degree of the subgraph induced by `X`, or `None` if it is not regular.
    pub x_induced_degree: Option<usize>,
    pub offenders: Vec<Offender>,
}

impl SwitchingReport {
    pub fn describe_failure(&self) -> Option<String> {
        if self.valid {
            return None;
        }
        let mut parts = Vec::new();
        if self.x_induced_degree.is_none() {
            parts.push("X does not induce a regular subgraph".to_string());
        }
        for o in &self.offenders {
            parts.push(format!(
                "vertex {} has {} neighbours in X",
                o.vertex, o.neighbors_in_x
            ));
        }
        Some(parts.join("; "))
    }
}

fn neighbors_in(g: &Graph, v: Vertex, set: &[bool]) -> usize {
    g.neighbors(v).filter(|&w| set[w]).count()
}

pub fn validate_switching_set(
    g: &Graph,
    p: &SwitchingPartition,
) -> Result<SwitchingReport, SwitchingError> {
    p.check_order(g)?;
    let in_x = p.x.mask(g.order());
    let half = p.x.len() / 2;

    let mut x_degrees = p.x.iter().map(|v| neighbors_in(g, v, &in_x));
    let first = x_degrees.next().expect("X is non-empty");
    let x_induced_degree = x_degrees.all(|d| d == first).then_some(first);

    let offenders: Vec<Offender> = p
        .y
        .iter()
        .filter_map(|y| {
            let k = neighbors_in(g, y, &in_x);
            (k != 0 && k != half && k != p.x.len()).then_some(Offender {
                vertex: y,
                neighbors_in_x: k,
            })
        })
        .collect();

    Ok(SwitchingReport {
        valid: x_induced_degree.is_some() && offenders.is_empty(),
        x_induced_degree,
        offenders,
    })
}

/// Performs the switch. Refuses partitions that fail validation.
pub fn apply_switch(g: &Graph, p: &SwitchingPartition) -> Result<Graph, SwitchingError> {
    let report = validate_switching_set(g, p)?;
    if let Some(why) = report.describe_failure() {
        return Err(SwitchingError::Invalid(why));
    }
    let in_x = p.x.mask(g.order());
    let half = p.x.len() / 2;
    let mut out = g.clone();
    for y in p.y.iter() {
        if neighbors_in(g, y, &in_x) != half {
            continue;
        }
        for x in p.x.iter() {
            if g.has_edge(x, y) {
                out.remove_edge(x, y).expect("valid pair");
            } else {
                out.add_edge(x, y).expect("valid pair");
            }
        }
    }
    Ok(out)
}
