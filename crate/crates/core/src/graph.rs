//! Simple undirected graphs on vertices `0..n`.
//!
//! Adjacency is a dense bit matrix, one row of `u64` words per vertex, so
//! membership tests and complements are cheap for the few-hundred-vertex
//! graphs this crate deals with.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(k: usize) -> Self {
        let mut g = Graph::empty(k);
        for u in 0..k {
            for v in u + 1..k {
                g.set(u, v, true);
            }
        }
        g
    }

    /// The cycle `0 - 1 - ... - (k-1) - 0`.
    pub fn cycle(k: usize) -> Result<Self, GraphError> {
        if k < 3 {
            return Err(GraphError::CycleTooShort(k));
        }
        let mut g = Graph::path(k);
        g.set(0, k - 1, true);
        Ok(g)
    }

    /// The path on `k` vertices (so `k - 1` edges).
    pub fn path(k: usize) -> Self {
        let mut g = Graph::empty(k);
        for u in 1..k {
            g.set(u - 1, u, true);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        let twice: u32 = self.rows.iter().map(|w| w.count_ones()).sum();
        twice as usize / 2
    }

    #[inline]
    fn row(&self, v: Vertex) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    fn set(&mut self, u: Vertex, v: Vertex, on: bool) {
        let (wu, bu) = (u / 64, 1u64 << (u % 64));
        let (wv, bv) = (v / 64, 1u64 << (v % 64));
        if on {
            self.rows[u * self.words + wv] |= bv;
            self.rows[v * self.words + wu] |= bu;
        } else {
            self.rows[u * self.words + wv] &= !bv;
            self.rows[v * self.words + wu] &= !bu;
        }
    }

    fn check_pair(&self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adds `{u, v}`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        self.set(u, v, true);
        Ok(())
    }

    pub fn with_edge(mut self, u: Vertex, v: Vertex) -> Result<Self, GraphError> {
        self.add_edge(u, v)?;
        Ok(self)
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        self.set(u, v, false);
        Ok(())
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: Vertex) -> Neighbors<'_> {
        Neighbors {
            row: self.row(v),
            word: 0,
            bits: self.row(v).first().copied().unwrap_or(0),
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set(u, v, true);
                }
            }
        }
        g
    }

    /// Vertices of `other` are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set(u + offset, v + offset, true);
        }
        g
    }

    /// Subgraph induced on `keep`, relabelled `0..keep.len()` in the given order.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set(i, j, true);
                }
            }
        }
        g
    }

    /// Removes `s` and relabels the survivors consecutively, preserving order.
    /// The returned vector maps each new label to its old label.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<(Graph, Vec<Vertex>), GraphError> {
        s.check_range(self.n)?;
        let keep: Vec<Vertex> = (0..self.n).filter(|v| !s.contains(*v)).collect();
        Ok((self.induced_subgraph(&keep), keep))
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v], true);
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn odd_component_count(&self) -> usize {
        self.components().iter().filter(|c| c.len() % 2 == 1).count()
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == k)
    }

    /// The common degree, if there is one. `None` for the null graph.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d = self.degree(0);
        self.is_regular(d).then_some(d)
    }

    /// Proper 2-colouring by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    bits: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        loop {
            if self.bits != 0 {
                let t = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + t);
            }
            self.word += 1;
            self.bits = *self.row.get(self.word)?;
        }
    }
}

/// A sorted set of vertex labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = Vertex>>(members: I) -> Self {
        let set: BTreeSet<Vertex> = members.into_iter().collect();
        VertexSet(set.into_iter().collect())
    }

    pub fn range(r: std::ops::Range<Vertex>) -> Self {
        VertexSet(r.collect())
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn check_range(&self, n: usize) -> Result<(), GraphError> {
        match self.0.last() {
            Some(&v) if v >= n => Err(GraphError::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    /// Membership mask over `0..n`. Members must be in range.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for v in self.iter() {
            m[v] = true;
        }
        m
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        VertexSet::new(v)
    }
}

impl From<VertexSet> for Vec<Vertex> {
    fn from(s: VertexSet) -> Self {
        s.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    #[test]
    fn empty_graphs() {
        assert_eq!(Graph::empty(0).order(), 0);
        let g = Graph::empty(3);
        assert_eq!(g.size(), 0);
        assert_eq!(g.degree_sequence(), vec![0, 0, 0]);
        assert_eq!(Graph::empty(5).complement(), Graph::complete(5));
    }

    #[test]
    fn add_edge_is_idempotent_and_rejects_loops() {
        let mut g = Graph::empty(2);
        g.add_edge(0, 1).unwrap();
        assert_eq!(g, Graph::path(2));
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.add_edge(0, 0), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            g.add_edge(0, 2),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
    }

    #[test]
    fn h5_degree_sequence_from_complement() {
        // two disjoint edges plus a 3-vertex path, on 7 vertices
        let base = Graph::from_edges(7, [(0, 1), (2, 3), (4, 5), (5, 6)]).unwrap();
        let h = base.complement();
        assert_eq!(h.degree_sequence(), vec![4, 5, 5, 5, 5, 5, 5]);
        assert_eq!(h.degree(5), 4);
    }

    #[test]
    fn disjoint_unions() {
        let g = Graph::complete(3).disjoint_union(&Graph::cycle(5).unwrap());
        assert_eq!((g.order(), g.size()), (8, 8));
        assert_eq!(g.components().len(), 2);
        assert_eq!(g.odd_component_count(), 2);
        let c = Graph::cycle(4).unwrap();
        assert_eq!(c.disjoint_union(&Graph::empty(0)), c);
        let f = c.disjoint_union(&Graph::path(4));
        assert_eq!((f.order(), f.size()), (8, 7));
    }

    #[test]
    fn standard_families() {
        assert_eq!(Graph::cycle(3).unwrap(), Graph::complete(3));
        assert_eq!(Graph::cycle(2), Err(GraphError::CycleTooShort(2)));
        assert_eq!(Graph::path(1).order(), 1);
        assert_eq!(Graph::path(1).size(), 0);
        let mut k6 = Graph::complete(6);
        k6.remove_edge(0, 1).unwrap();
        assert_eq!(k6.degree_sequence(), vec![4, 4, 5, 5, 5, 5]);
        assert!(Graph::cycle(5).unwrap().is_regular(2));
    }

    #[test]
    fn delete_vertices_relabels_in_order() {
        let (g, map) = star(4).delete_vertices(&VertexSet::new([0])).unwrap();
        assert_eq!(g, Graph::empty(4));
        assert_eq!(map, vec![1, 2, 3, 4]);
        let c = Graph::cycle(6).unwrap();
        assert_eq!(c.delete_vertices(&VertexSet::default()).unwrap().0, c);
        assert!(c.delete_vertices(&VertexSet::new([6])).is_err());
    }

    #[test]
    fn neighbors_cross_word_boundaries() {
        let g = Graph::from_edges(200, [(3, 64), (3, 199), (3, 0), (130, 3)]).unwrap();
        assert_eq!(g.neighbors(3).collect::<Vec<_>>(), vec![0, 64, 130, 199]);
        assert_eq!(g.degree(3), 4);
        assert_eq!(g.size(), 4);
    }

    #[test]
    fn bipartite_check() {
        assert!(Graph::cycle(4).unwrap().is_bipartite());
        assert!(!Graph::cycle(5).unwrap().is_bipartite());
        assert!(Graph::empty(3).is_bipartite());
    }

    #[test]
    fn regular_degree() {
        assert_eq!(Graph::empty(0).regular_degree(), None);
        assert_eq!(Graph::complete(4).regular_degree(), Some(3));
        assert_eq!(Graph::path(3).regular_degree(), None);
    }
}
