//! Maximum-cardinality matching in general graphs and Tutte certificates.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError, Vertex, VertexSet};

const NONE: usize = usize::MAX;

/// A set of vertex-disjoint edges, stored as sorted `(u, v)` pairs with `u < v`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<(Vertex, Vertex)>,
}

impl Matching {
    pub fn new<I: IntoIterator<Item = (Vertex, Vertex)>>(edges: I) -> Self {
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(u, v)| if u <= v { (u, v) } else { (v, u) })
            .collect();
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        let e = if u <= v { (u, v) } else { (v, u) };
        self.edges.binary_search(&e).is_ok()
    }

    fn from_mates(mate: &[usize]) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter(|&(u, &v)| v != NONE && u < v)
            .map(|(u, &v)| (u, v));
        Matching::new(edges)
    }
}

/// Edmonds' blossom search for augmenting paths, one BFS per free root.
struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for u in 0..self.g.order() {
            if self.mate[u] != NONE {
                continue;
            }
            if let Some(v) = self.g.neighbors(u).find(|&v| self.mate[v] == NONE) {
                self.mate[u] = v;
                self.mate[v] = u;
            }
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Returns the free endpoint of an augmenting path from `root`, if any.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn run(mut self) -> Vec<usize> {
        self.greedy();
        for root in 0..self.g.order() {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_path(root) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

/// A maximum-cardinality matching. Vertices and neighbours are scanned in
/// ascending order, so the result depends only on the labelled input.
pub fn maximum_matching(g: &Graph) -> Matching {
    Matching::from_mates(&Blossom::new(g).run())
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    if g.order() % 2 == 1 {
        return false;
    }
    2 * maximum_matching(g).len() == g.order()
}

/// `n - 2 * |maximum matching|`.
pub fn deficiency(g: &Graph) -> usize {
    g.order() - 2 * maximum_matching(g).len()
}

/// Every pair is an edge of `g` and no vertex is used twice.
pub fn verify_matching(g: &Graph, m: &Matching) -> bool {
    let mut used = vec![false; g.order()];
    for &(u, v) in m.edges() {
        if !g.has_edge(u, v) || used[u] || used[v] {
            return false;
        }
        used[u] = true;
        used[v] = true;
    }
    true
}

pub fn is_perfect_matching(g: &Graph, m: &Matching) -> bool {
    verify_matching(g, m) && 2 * m.len() == g.order()
}

/// The odd components left after deleting `s`. When their number exceeds
/// `|s|`, `g` has no perfect matching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteViolator {
    #[serde(rename = "S")]
    pub s: VertexSet,
    pub size: usize,
    pub odd_components: usize,
    /// Orders of all components of `g - s`, in order of smallest surviving label.
    pub component_orders: Vec<usize>,
}

impl TutteViolator {
    pub fn is_violating(&self) -> bool {
        self.odd_components > self.size
    }

    /// Lower bound on the deficiency from this vertex set.
    pub fn deficiency_bound(&self) -> usize {
        self.odd_components.saturating_sub(self.size)
    }
}

pub fn check_tutte_violator(g: &Graph, s: &VertexSet) -> Result<TutteViolator, GraphError> {
    let (rest, _) = g.delete_vertices(s)?;
    let component_orders: Vec<usize> = rest.components().iter().map(VertexSet::len).collect();
    Ok(TutteViolator {
        s: s.clone(),
        size: s.len(),
        odd_components: component_orders.iter().filter(|&&c| c % 2 == 1).count(),
        component_orders,
    })
}
