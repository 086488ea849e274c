//! Orderly generation of connected k-regular graphs.
//!
//! Graphs are grown one vertex at a time. A labelled graph is kept only if
//! its upper-triangle bit string in column order (`x01, x02, x12, x03, ...`)
//! is lexicographically maximal over all relabellings. The first `m`
//! columns of that string describe the subgraph induced on the first `m`
//! vertices, so every prefix of a maximal graph is itself maximal and each
//! isomorphism class is reached along exactly one path. In a maximal
//! connected graph every vertex after the first has an earlier neighbour,
//! which keeps every intermediate graph connected.

use rayon::prelude::*;

use super::canon::canonical_form;
use crate::graph::Graph;

/// Largest order the bitmask representation supports.
pub const MAX_ORDER: usize = 64;

#[derive(Clone)]
struct Partial {
    n: usize,
    k: usize,
    m: usize,
    adj: Vec<u64>,
    deg: Vec<usize>,
}

impl Partial {
    fn root(n: usize, k: usize) -> Self {
        Partial {
            n,
            k,
            m: 1,
            adj: vec![0; n],
            deg: vec![0; n],
        }
    }

    #[inline]
    fn edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Column `p` under the labelling `sigma`, most significant bit first.
    #[inline]
    fn column(&self, sigma: &[usize], p: usize) -> u64 {
        let mut c = 0u64;
        for &s in &sigma[..p] {
            c = (c << 1) | self.edge(s, sigma[p]) as u64;
        }
        c
    }

    fn is_maximal(&self) -> bool {
        let ident: Vec<usize> = (0..self.m).collect();
        let target: Vec<u64> = (0..self.m).map(|p| self.column(&ident, p)).collect();
        let mut sigma = Vec::with_capacity(self.m);
        let mut used = 0u64;
        self.dfs(&target, &mut sigma, &mut used)
    }

    /// False as soon as some relabelling beats the identity.
    fn dfs(&self, target: &[u64], sigma: &mut Vec<usize>, used: &mut u64) -> bool {
        let p = sigma.len();
        if p == self.m {
            return true;
        }
        for v in 0..self.m {
            if *used >> v & 1 == 1 {
                continue;
            }
            sigma.push(v);
            let col = self.column(sigma, p);
            let ok = if col > target[p] {
                false
            } else if col < target[p] {
                true
            } else {
                *used |= 1 << v;
                let r = self.dfs(target, sigma, used);
                *used &= !(1 << v);
                r
            };
            sigma.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    /// Degree budget for the vertices after `m` still has to close up.
    fn feasible(&self) -> bool {
        let rest = self.n - self.m;
        let mut need = 0;
        for i in 0..self.m {
            let d = self.k - self.deg[i];
            if d > rest {
                return false;
            }
            need += d;
        }
        need <= self.k * rest && (self.k * rest - need) % 2 == 0
    }

    fn with_vertex(&self, nbrs: u64) -> Partial {
        let mut next = self.clone();
        let v = self.m;
        next.adj[v] = nbrs;
        next.deg[v] = nbrs.count_ones() as usize;
        let mut bits = nbrs;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next.adj[u] |= 1 << v;
            next.deg[u] += 1;
        }
        next.m += 1;
        next
    }

    fn children(&self) -> Vec<Partial> {
        let m = self.m;
        let open: Vec<usize> = (0..m).filter(|&i| self.deg[i] < self.k).collect();
        let prev = if m >= 2 {
            let ident: Vec<usize> = (0..m).collect();
            Some(self.column(&ident, m - 1))
        } else {
            None
        };
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(self.k);
        self.subsets(&open, 0, &mut chosen, prev, &mut out);
        out
    }

    fn subsets(
        &self,
        open: &[usize],
        from: usize,
        chosen: &mut Vec<usize>,
        prev: Option<u64>,
        out: &mut Vec<Partial>,
    ) {
        if !chosen.is_empty() {
            let mask: u64 = chosen.iter().fold(0, |acc, &u| acc | 1 << u);
            // Swapping the last two positions must not increase column m-1.
            let m = self.m;
            let head = (0..m - 1).fold(0u64, |c, i| (c << 1) | (mask >> i & 1));
            if prev.is_none_or(|p| head <= p) {
                let child = self.with_vertex(mask);
                if child.feasible() && child.is_maximal() {
                    out.push(child);
                }
            }
        }
        if chosen.len() == self.k {
            return;
        }
        for i in from..open.len() {
            chosen.push(open[i]);
            self.subsets(open, i + 1, chosen, prev, out);
            chosen.pop();
        }
    }

    fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.edge(u, v) {
                    g.add_edge(u, v).expect("in range");
                }
            }
        }
        g
    }

    fn walk(&self, out: &mut Vec<Graph>) {
        if self.m == self.n {
            if self.deg.iter().all(|&d| d == self.k) {
                out.push(self.to_graph());
            }
            return;
        }
        for child in self.children() {
            child.walk(out);
        }
    }
}

/// Why `(n, k)` admits no connected k-regular graph, if it does not.
pub fn infeasibility(n: usize, k: usize) -> Option<String> {
    if n == 0 {
        Some("n = 0: no vertices".into())
    } else if k >= n {
        Some(format!("k = {k} must be smaller than n = {n}"))
    } else if n * k % 2 == 1 {
        Some(format!("n*k = {} is odd (handshake parity)", n * k))
    } else if n > MAX_ORDER {
        Some(format!("n = {n} exceeds the enumerator limit of {MAX_ORDER}"))
    } else if k == 0 && n > 1 {
        Some("0-regular graphs on more than one vertex are disconnected".into())
    } else {
        None
    }
}

fn sort_canonically(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut keyed: Vec<(String, Graph)> = graphs.into_iter().map(|g| (canonical_form(&g), g)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, g)| g).collect()
}

/// Every connected k-regular graph on `n` vertices, once per isomorphism
/// class, sorted by canonical form. Subtrees below a fixed depth are
/// explored in parallel; the sorted result does not depend on scheduling.
pub fn enumerate_regular(n: usize, k: usize) -> Vec<Graph> {
    if infeasibility(n, k).is_some() {
        return Vec::new();
    }
    let mut frontier = vec![Partial::root(n, k)];
    while frontier.len() < 64 && frontier.iter().any(|p| p.m < n) {
        frontier = frontier
            .into_iter()
            .flat_map(|p| if p.m < n { p.children() } else { vec![p] })
            .collect();
    }
    let graphs: Vec<Graph> = frontier
        .par_iter()
        .flat_map_iter(|p| {
            let mut out = Vec::new();
            p.walk(&mut out);
            out
        })
        .collect();
    sort_canonically(graphs)
}

/// Single-threaded reference run of [`enumerate_regular`].
pub fn enumerate_regular_sequential(n: usize, k: usize) -> Vec<Graph> {
    if infeasibility(n, k).is_some() {
        return Vec::new();
    }
    let mut out = Vec::new();
    Partial::root(n, k).walk(&mut out);
    sort_canonically(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_the_only_cubic_graph_on_four_vertices() {
        let gs = enumerate_regular(4, 3);
        assert_eq!(gs, vec![Graph::complete(4)]);
    }

    #[test]
    fn two_cubic_graphs_on_six_vertices() {
        let gs = enumerate_regular(6, 3);
        assert_eq!(gs.len(), 2);
        let bip = gs.iter().filter(|g| g.is_bipartite()).count();
        assert_eq!(bip, 1, "exactly one of K33 / prism is bipartite");
    }

    #[test]
    fn infeasible_parameters_are_empty() {
        assert!(enumerate_regular(5, 3).is_empty());
        assert!(infeasibility(5, 3).unwrap().contains("odd"));
        assert!(enumerate_regular(3, 3).is_empty());
        assert!(enumerate_regular(4, 0).is_empty());
        assert_eq!(enumerate_regular(1, 0), vec![Graph::empty(1)]);
    }

    #[test]
    fn cycles_are_the_connected_two_regular_graphs() {
        for n in 3..=10 {
            let gs = enumerate_regular(n, 2);
            assert_eq!(gs.len(), 1, "n={n}");
            assert_eq!(canonical_form(&gs[0]), canonical_form(&Graph::cycle(n).unwrap()));
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        for (n, k) in [(8, 3), (10, 3), (8, 4), (9, 4)] {
            assert_eq!(enumerate_regular(n, k), enumerate_regular_sequential(n, k));
        }
    }
}
