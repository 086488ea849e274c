//! The cospectral pair family: for each `b >= 5`, a connected `b`-regular
//! graph without a perfect matching that has a Godsil–McKay switching set
//! whose switch produces a graph with one.
//!
//! Vertex blocks are emitted in a fixed order: triangle, big cycle, the
//! `b - 2` gadget copies (gadget body first, then its pendant vertex `v`),
//! then the extra gadget (odd `b`) or the filler cycle (even `b`), then the
//! pendant pairs (odd `b` only). `X` is the triangle plus the big cycle and
//! `W` is the set of pendant vertices of the first `b - 2` gadgets.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::switching::{apply_switch, SwitchingError, SwitchingPartition};

pub const MIN_DEGREE: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("b = {0} is out of range: the construction needs b >= 5, and no construction is known for b <= 4")]
    DegreeTooSmall(usize),
    #[error("this gadget needs an odd degree b >= 5, got {0}")]
    NeedOdd(usize),
    #[error("this gadget needs an even degree b >= 6, got {0}")]
    NeedEven(usize),
    #[error("the introductory fixture needs an even order n >= 8, got {0}")]
    FixtureOrder(usize),
    #[error(transparent)]
    Switching(#[from] SwitchingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParams {
    b: usize,
}

impl FamilyParams {
    pub fn new(b: usize) -> Result<Self, FamilyError> {
        if b < MIN_DEGREE {
            return Err(FamilyError::DegreeTooSmall(b));
        }
        Ok(FamilyParams { b })
    }

    pub fn degree(&self) -> usize {
        self.b
    }

    pub fn parity(&self) -> Parity {
        if self.b % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// `|X|`: the triangle plus the big cycle.
    pub fn switching_set_size(&self) -> usize {
        match self.parity() {
            Parity::Odd => 2 * self.b - 2,
            Parity::Even => 2 * self.b - 4,
        }
    }
}

/// `b^2 + 5b - 8` for odd `b`, `b^2 + 3b - 10` for even `b`.
pub fn expected_order(b: usize) -> Result<usize, FamilyError> {
    let p = FamilyParams::new(b)?;
    Ok(match p.parity() {
        Parity::Odd => b * b + 5 * b - 8,
        Parity::Even => b * b + 3 * b - 10,
    })
}

/// Complement of `(b-1)/2` disjoint edges plus a 3-vertex path, on `b + 2`
/// vertices. Returns the graph and `u`, the path's middle vertex, which is
/// the only vertex of degree `b - 1`.
pub fn build_h(b: usize) -> Result<(Graph, Vertex), FamilyError> {
    if b < MIN_DEGREE || b % 2 == 0 {
        return Err(FamilyError::NeedOdd(b));
    }
    let mut base = Graph::empty(b + 2);
    for i in (0..b - 1).step_by(2) {
        base.add_edge(i, i + 1).expect("in range");
    }
    base.add_edge(b - 1, b).expect("in range");
    base.add_edge(b, b + 1).expect("in range");
    Ok((base.complement(), b))
}

/// `H_b` with a pendant edge `{u, v}`. Returns `(graph, u, v)`.
pub fn build_h_tilde(b: usize) -> Result<(Graph, Vertex, Vertex), FamilyError> {
    let (h, u) = build_h(b)?;
    let v = h.order();
    let g = h
        .disjoint_union(&Graph::empty(1))
        .with_edge(u, v)
        .expect("in range");
    Ok((g, u, v))
}

/// `K_{b+1}` minus one edge `{p, q}`, plus a vertex `v` joined to `p` and `q`.
/// Returns `(graph, v, [p, q])`.
pub fn build_gadget_even(b: usize) -> Result<(Graph, Vertex, [Vertex; 2]), FamilyError> {
    if b < MIN_DEGREE + 1 || b % 2 == 1 {
        return Err(FamilyError::NeedEven(b));
    }
    let (p, q, v) = (b - 1, b, b + 1);
    let mut g = Graph::complete(b + 1).disjoint_union(&Graph::empty(1));
    g.remove_edge(p, q).expect("in range");
    g.add_edge(v, p).expect("in range");
    g.add_edge(v, q).expect("in range");
    Ok((g, v, [p, q]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub name: String,
    pub start: Vertex,
    pub len: usize,
}

impl Block {
    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        self.start..self.start + self.len
    }
}

/// Where a gadget's pendant vertex `v` hangs: `u` holds one anchor for the
/// odd gadget and two for the even one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetLabels {
    pub u: Vec<Vertex>,
    pub v: Vertex,
}

#[derive(Debug, Clone)]
pub struct FamilyLayout {
    pub params: FamilyParams,
    pub graph: Graph,
    pub partition: SwitchingPartition,
    pub w: VertexSet,
    pub blocks: Vec<Block>,
    pub gadgets: Vec<GadgetLabels>,
}

/// Sidecar metadata for a constructed graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayoutJson {
    pub b: usize,
    pub parity: Parity,
    pub order: usize,
    pub blocks: Vec<Block>,
    #[serde(rename = "X")]
    pub x: VertexSet,
    #[serde(rename = "W")]
    pub w: VertexSet,
    pub u_v_pairs: Vec<GadgetLabels>,
}

impl FamilyLayout {
    pub fn block(&self, name: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.name == name)
    }

    pub fn to_json(&self) -> LayoutJson {
        LayoutJson {
            b: self.params.degree(),
            parity: self.params.parity(),
            order: self.graph.order(),
            blocks: self.blocks.clone(),
            x: self.partition.x().clone(),
            w: self.w.clone(),
            u_v_pairs: self.gadgets.clone(),
        }
    }

    /// Human-readable vertex names for DOT output, e.g. `big_cycle.3`.
    pub fn vertex_labels(&self) -> Vec<String> {
        let mut labels = vec![String::new(); self.graph.order()];
        for block in &self.blocks {
            for (i, v) in block.vertices().enumerate() {
                labels[v] = format!("{}.{i}", block.name);
            }
        }
        for gadget in &self.gadgets {
            labels[gadget.v].push_str(" (v)");
            for &u in &gadget.u {
                labels[u].push_str(" (u)");
            }
        }
        labels
    }
}

/// How attaching `Y` vertices pick their big-cycle neighbours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Wiring {
    /// Lowest current attachment count first, ties by smallest label.
    Balanced,
    /// Lowest current attachment count first, ties broken by a seeded RNG.
    Random(u64),
}

struct CycleWiring {
    start: Vertex,
    counts: Vec<usize>,
    rng: Option<ChaCha8Rng>,
}

impl CycleWiring {
    fn new(start: Vertex, len: usize, wiring: Wiring) -> Self {
        CycleWiring {
            start,
            counts: vec![0; len],
            rng: match wiring {
                Wiring::Balanced => None,
                Wiring::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            },
        }
    }

    /// Picks `quota` distinct big-cycle vertices with the fewest attachments.
    fn take(&mut self, quota: usize) -> Vec<Vertex> {
        let mut order: Vec<usize> = (0..self.counts.len()).collect();
        if let Some(rng) = self.rng.as_mut() {
            order.shuffle(rng);
        }
        // stable sort keeps label order (or shuffled order) within a count
        order.sort_by_key(|&i| self.counts[i]);
        order.truncate(quota);
        order.sort_unstable();
        for &i in &order {
            self.counts[i] += 1;
        }
        order.into_iter().map(|i| self.start + i).collect()
    }
}

struct Builder {
    graph: Graph,
    blocks: Vec<Block>,
    next: Vertex,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder {
            graph: Graph::empty(n),
            blocks: Vec::new(),
            next: 0,
        }
    }

    /// Copies `part` in at the next free labels; returns its offset.
    fn place(&mut self, name: String, part: &Graph) -> Vertex {
        let start = self.next;
        for (u, v) in part.edges() {
            self.join(start + u, start + v);
        }
        self.blocks.push(Block {
            name,
            start,
            len: part.order(),
        });
        self.next += part.order();
        start
    }

    fn join(&mut self, u: Vertex, v: Vertex) {
        self.graph.add_edge(u, v).expect("builder labels are in range");
    }
}

pub fn build_family(params: FamilyParams) -> FamilyLayout {
    build_family_with(params, Wiring::Balanced)
}

pub fn build_family_with(params: FamilyParams, wiring: Wiring) -> FamilyLayout {
    let b = params.degree();
    let n = expected_order(b).expect("params are validated");
    let mut bld = Builder::new(n);

    let triangle = bld.place("triangle".into(), &Graph::complete(3));
    let cycle_len = params.switching_set_size() - 3;
    let cycle_start = bld.place("big_cycle".into(), &Graph::cycle(cycle_len).expect("len >= 5"));
    let mut cycle = CycleWiring::new(cycle_start, cycle_len, wiring);

    let (gadget, anchors, v_local) = match params.parity() {
        Parity::Odd => {
            let (g, u, v) = build_h_tilde(b).expect("odd b >= 5");
            (g, vec![u], v)
        }
        Parity::Even => {
            let (g, v, pq) = build_gadget_even(b).expect("even b >= 6");
            (g, pq.to_vec(), v)
        }
    };
    // W vertices see the whole triangle plus enough of the big cycle to
    // reach |X|/2 neighbours in X.
    let w_quota = params.switching_set_size() / 2 - 3;

    let mut gadgets = Vec::new();
    let mut w = Vec::new();
    for i in 0..b - 2 {
        let off = bld.place(format!("gadget_{i}"), &gadget);
        let v = off + v_local;
        for t in triangle..triangle + 3 {
            bld.join(v, t);
        }
        for c in cycle.take(w_quota) {
            bld.join(v, c);
        }
        w.push(v);
        gadgets.push(GadgetLabels {
            u: anchors.iter().map(|a| off + a).collect(),
            v,
        });
    }

    match params.parity() {
        Parity::Odd => {
            let off = bld.place("extra_gadget".into(), &gadget);
            let v = off + v_local;
            for c in cycle.take(b - 1) {
                bld.join(v, c);
            }
            gadgets.push(GadgetLabels {
                u: anchors.iter().map(|a| off + a).collect(),
                v,
            });
            let pairs = (b - 3) / 2;
            let mut matching = Graph::empty(2 * pairs);
            for i in 0..pairs {
                matching.add_edge(2 * i, 2 * i + 1).expect("in range");
            }
            let off = bld.place("pendant_pairs".into(), &matching);
            for p in off..off + 2 * pairs {
                for c in cycle.take(b - 1) {
                    bld.join(p, c);
                }
            }
        }
        Parity::Even => {
            let off = bld.place("filler_cycle".into(), &Graph::cycle(b - 2).expect("b >= 6"));
            for f in off..off + b - 2 {
                for c in cycle.take(b - 2) {
                    bld.join(f, c);
                }
            }
        }
    }
    debug_assert_eq!(bld.next, n);

    let x: Vec<Vertex> = (0..3 + cycle_len).collect();
    let partition = SwitchingPartition::from_x(n, &x).expect("X is a well-formed even block");
    FamilyLayout {
        params,
        graph: bld.graph,
        partition,
        w: VertexSet::new(w),
        blocks: bld.blocks,
        gadgets,
    }
}

/// The unswitched graph `G`, its switch `G'`, and the layout of `G`.
pub fn build_pair(params: FamilyParams) -> Result<(Graph, Graph, FamilyLayout), FamilyError> {
    build_pair_with(params, Wiring::Balanced)
}

pub fn build_pair_with(
    params: FamilyParams,
    wiring: Wiring,
) -> Result<(Graph, Graph, FamilyLayout), FamilyError> {
    let layout = build_family_with(params, wiring);
    let switched = apply_switch(&layout.graph, &layout.partition)?;
    Ok((layout.graph.clone(), switched, layout))
}

/// `(C_4 + P_{n-4}, T)` where `T` is `P_{n-4}` with two pendant vertices at
/// each end. The first has a perfect matching, the second does not.
pub fn intro_fixture(n: usize) -> Result<(Graph, Graph), FamilyError> {
    if n < 8 || n % 2 == 1 {
        return Err(FamilyError::FixtureOrder(n));
    }
    let path = n - 4;
    let with_pm = Graph::cycle(4).expect("4 >= 3").disjoint_union(&Graph::path(path));
    let mut tree = Graph::path(path).disjoint_union(&Graph::empty(4));
    for (leaf, end) in [(path, 0), (path + 1, 0), (path + 2, path - 1), (path + 3, path - 1)] {
        tree.add_edge(leaf, end).expect("in range");
    }
    Ok((with_pm, tree))
}
