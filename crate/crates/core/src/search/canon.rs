//! Canonical labelling for small graphs.
//!
//! Colour refinement produces an ordered equitable partition; the search
//! then individualizes each vertex of the first non-singleton cell in turn,
//! refines again, and at every discrete leaf encodes the relabelled graph
//! as graph6. The lexicographically largest leaf is the canonical form.
//! Interchangeable twins (same neighbourhood apart from each other) are
//! only individualized once per cell, since swapping them is an
//! automorphism that fixes the current partition.

use crate::graph::{Graph, Vertex};
use crate::graph6;

type Partition = Vec<Vec<Vertex>>;

fn refine(g: &Graph, mut cells: Partition) -> Partition {
    let n = g.order();
    let mut cell_of = vec![0usize; n];
    loop {
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        let mut next: Partition = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, Vertex)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0usize; cells.len()];
                    for w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn twins(g: &Graph, u: Vertex, v: Vertex) -> bool {
    let nu = g.neighbors(u).filter(|&w| w != v);
    let nv = g.neighbors(v).filter(|&w| w != u);
    nu.eq(nv)
}

fn search(g: &Graph, cells: Partition, best: &mut Option<String>) {
    let Some(pos) = cells.iter().position(|c| c.len() > 1) else {
        let mut perm = vec![0; g.order()];
        for (i, cell) in cells.iter().enumerate() {
            perm[cell[0]] = i;
        }
        let s = graph6::encode(&g.permute(&perm));
        if best.as_ref().is_none_or(|b| s > *b) {
            *best = Some(s);
        }
        return;
    };
    let target = &cells[pos];
    let mut tried: Vec<Vertex> = Vec::new();
    for &v in target {
        if tried.iter().any(|&t| twins(g, t, v)) {
            continue;
        }
        tried.push(v);
        let mut split = cells.clone();
        let rest: Vec<Vertex> = target.iter().copied().filter(|&w| w != v).collect();
        split.splice(pos..=pos, [vec![v], rest]);
        search(g, refine(g, split), best);
    }
}

/// graph6 string of a canonical relabelling: equal for two graphs iff they
/// are isomorphic. Intended for the small orders the enumerator produces.
pub fn canonical_form(g: &Graph) -> String {
    let start = refine(g, vec![(0..g.order()).collect()]);
    let mut best = None;
    if g.order() == 0 {
        return graph6::encode(g);
    }
    search(g, start, &mut best);
    best.expect("search reaches at least one leaf")
}
