//! Slow, obviously-correct reference computations for cross-checking the
//! library. Nothing here shares an algorithm with `cospec` itself; only the
//! `Graph` container is reused.

use std::collections::HashMap;

use cospec::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

pub use rand_chacha::ChaCha8Rng as TestRng;
pub use rand::SeedableRng;

pub fn rng(seed: u64) -> TestRng {
    TestRng::seed_from_u64(seed)
}

/// G(n, p) on `n` vertices.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn adjacency(g: &Graph) -> Vec<Vec<i128>> {
    let n = g.order();
    (0..n)
        .map(|i| (0..n).map(|j| g.has_edge(i, j) as i128).collect())
        .collect()
}

/// Polynomials as coefficient vectors, constant term first.
type Poly = Vec<i128>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_scaled(acc: &mut Poly, p: &Poly, sign: i128) {
    if acc.len() < p.len() {
        acc.resize(p.len(), 0);
    }
    for (i, c) in p.iter().enumerate() {
        acc[i] += sign * c;
    }
}

/// `det(xI - A)` by cofactor expansion along successive rows, memoised on
/// the set of remaining columns. Returns coefficients leading first.
pub fn char_poly_by_minors(g: &Graph) -> Vec<i128> {
    let n = g.order();
    assert!(n <= 20, "minors oracle is exponential");
    let a = adjacency(g);
    // entry (i, j) of xI - A as a polynomial
    let entry = |i: usize, j: usize| -> Poly {
        if i == j {
            vec![-a[i][j], 1]
        } else {
            vec![-a[i][j]]
        }
    };
    let mut memo: HashMap<u32, Poly> = HashMap::new();
    fn det(
        row: usize,
        cols: u32,
        n: usize,
        entry: &dyn Fn(usize, usize) -> Poly,
        memo: &mut HashMap<u32, Poly>,
    ) -> Poly {
        if row == n {
            return vec![1];
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let mut acc: Poly = vec![0];
        let mut sign = 1;
        for j in 0..n {
            if cols >> j & 1 == 0 {
                continue;
            }
            let e = entry(row, j);
            if e.iter().any(|&c| c != 0) {
                let minor = det(row + 1, cols & !(1 << j), n, entry, memo);
                poly_add_scaled(&mut acc, &poly_mul(&e, &minor), sign);
            }
            sign = -sign;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut p = det(0, full, n, &entry, &mut memo);
    p.resize(n + 1, 0);
    p.reverse();
    p
}

/// Largest matching by trying every option for the smallest free vertex.
pub fn max_matching_exhaustive(g: &Graph) -> usize {
    fn go(g: &Graph, free: u64) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let mut best = go(g, rest);
        for w in 0..g.order() {
            if rest >> w & 1 == 1 && g.has_edge(v, w) {
                best = best.max(1 + go(g, rest & !(1 << w)));
            }
        }
        best
    }
    assert!(g.order() <= 20);
    go(g, (1u64 << g.order()) - 1)
}

/// Two-colouring by depth-first search with an explicit stack.
pub fn two_colorable(g: &Graph) -> bool {
    let n = g.order();
    let mut color = vec![-1i8; n];
    for s in 0..n {
        if color[s] >= 0 {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if !g.has_edge(u, v) {
                    continue;
                }
                if color[v] < 0 {
                    color[v] = 1 - color[u];
                    stack.push(v);
                } else if color[v] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Searches all bijections, extending a partial map one vertex at a time
/// and backing out on the first adjacency mismatch.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = map.len();
        if v == g.order() {
            return true;
        }
        for w in 0..h.order() {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
                used[w] = true;
                map.push(w);
                if extend(g, h, map, used) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
        }
        false
    }
    extend(g, h, &mut Vec::new(), &mut vec![false; h.order()])
}

fn connected(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if g.has_edge(u, v) && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Every labelled k-regular graph on `n` vertices, by deciding each pair
/// `(u, v)` in order with degree-capacity pruning.
pub fn labelled_regular_graphs(n: usize, k: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    let mut deg = vec![0; n];
    let mut g = Graph::empty(n);
    fn go(
        i: usize,
        pairs: &[(usize, usize)],
        k: usize,
        deg: &mut [usize],
        g: &mut Graph,
        out: &mut Vec<Graph>,
    ) {
        if i == pairs.len() {
            if deg.iter().all(|&d| d == k) {
                out.push(g.clone());
            }
            return;
        }
        let (u, v) = pairs[i];
        // once all pairs involving u are decided, u must be full
        let last_for_u = v == deg.len() - 1;
        if deg[u] < k && deg[v] < k {
            deg[u] += 1;
            deg[v] += 1;
            g.add_edge(u, v).unwrap();
            if !last_for_u || deg[u] == k {
                go(i + 1, pairs, k, deg, g, out);
            }
            g.remove_edge(u, v).unwrap();
            deg[u] -= 1;
            deg[v] -= 1;
        }
        if !last_for_u || deg[u] == k {
            go(i + 1, pairs, k, deg, g, out);
        }
    }
    go(0, &pairs, k, &mut deg, &mut g, &mut out);
    out
}

/// Isomorphism classes of connected k-regular graphs on `n` vertices, one
/// representative each, by pairwise brute-force isomorphism testing.
pub fn regular_classes_bruteforce(n: usize, k: usize) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    for g in labelled_regular_graphs(n, k) {
        if !connected(&g) {
            continue;
        }
        if !reps.iter().any(|r| isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    reps
}

/// A random regular graph on `m` vertices: a randomly relabelled circulant.
pub fn random_regular(rng: &mut impl Rng, m: usize) -> Graph {
    let mut g = Graph::empty(m);
    for d in 1..=m / 2 {
        if rng.gen_bool(0.5) {
            for i in 0..m {
                let j = (i + d) % m;
                if i != j {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
    }
    let perm = random_permutation(rng, m);
    g.permute(&perm)
}

/// A graph with a planted switching set `X = {0..x_len}`: a random regular
/// graph on `X`, each outside vertex joined to none, half or all of `X`,
/// and random edges inside `Y`.
pub fn planted_switching_instance(rng: &mut impl Rng, x_len: usize, y_len: usize) -> Graph {
    assert!(x_len >= 2 && x_len % 2 == 0);
    let n = x_len + y_len;
    let mut g = Graph::empty(n);
    for (u, v) in random_regular(rng, x_len).edges() {
        g.add_edge(u, v).unwrap();
    }
    for y in x_len..n {
        let mut xs: Vec<usize> = (0..x_len).collect();
        let take = match rng.gen_range(0..3) {
            0 => 0,
            1 => x_len / 2,
            _ => x_len,
        };
        xs.shuffle(rng);
        for &x in &xs[..take] {
            g.add_edge(x, y).unwrap();
        }
    }
    for u in x_len..n {
        for v in u + 1..n {
            if rng.gen_bool(0.4) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minors_oracle_on_triangle() {
        assert_eq!(char_poly_by_minors(&Graph::complete(3)), vec![1, 0, -3, -2]);
        assert_eq!(char_poly_by_minors(&Graph::empty(0)), vec![1]);
    }

    #[test]
    fn brute_force_counts() {
        assert_eq!(regular_classes_bruteforce(4, 3).len(), 1);
        assert_eq!(regular_classes_bruteforce(6, 3).len(), 2);
        assert_eq!(labelled_regular_graphs(4, 3).len(), 1);
    }

    #[test]
    fn exhaustive_matching() {
        assert_eq!(max_matching_exhaustive(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(max_matching_exhaustive(&Graph::complete(6)), 3);
    }
}
