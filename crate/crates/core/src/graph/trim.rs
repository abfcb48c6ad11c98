//! Deleting vertices that cannot lie on any full-depth cycle.
//!
//! A vertex outside `K_0` with at most one predecessor, or outside `K_L`
//! with at most one successor, is *removable*. Deleting removable vertices
//! can make others removable, so deletion cascades to a fixpoint.

use std::collections::VecDeque;

use super::{Reduced, StratifiedDigraph, Vertex};

/// Deletes removable vertices until none is left.
pub fn trim_removable(g: &StratifiedDigraph) -> Reduced {
    let keep = removable_fixpoint(g, None);
    g.restrict(&keep)
}

/// Alternates the removable cascade with the connected-count rule: a vertex
/// `x` in `K_i` is deleted when, for some other layer `j`, at most one vertex
/// of `K_j` shares an allowed path with `x`.
///
/// The connected-count test uses ancestor/descendant bitsets, costing
/// `O(|V|^2 / 64)` words of memory and `O(|E| |V| / 64)` time per pass.
pub fn trim_connected_count(g: &StratifiedDigraph) -> Reduced {
    let mut keep = removable_fixpoint(g, None);
    loop {
        let flagged = connected_count_violations(g, &keep);
        if flagged.is_empty() {
            break;
        }
        for v in flagged {
            keep[v.index()] = false;
        }
        keep = removable_fixpoint(g, Some(keep));
    }
    g.restrict(&keep)
}

fn removable_fixpoint(g: &StratifiedDigraph, start: Option<Vec<bool>>) -> Vec<bool> {
    let graph = g.graph();
    let depth = g.depth();
    let mut alive = start.unwrap_or_else(|| {
        let mut a = vec![false; graph.universe()];
        for v in graph.vertices() {
            a[v.index()] = true;
        }
        a
    });
    let mut indeg = vec![0usize; graph.universe()];
    let mut outdeg = vec![0usize; graph.universe()];
    for &(u, v) in graph.edges() {
        if alive[u.index()] && alive[v.index()] {
            outdeg[u.index()] += 1;
            indeg[v.index()] += 1;
        }
    }
    let removable = |v: Vertex, indeg: &[usize], outdeg: &[usize]| {
        let layer = g.layer_of(v).expect("vertex in graph");
        (layer != 0 && indeg[v.index()] <= 1) || (layer != depth && outdeg[v.index()] <= 1)
    };
    let mut queue: VecDeque<Vertex> = graph
        .vertices()
        .iter()
        .copied()
        .filter(|&v| alive[v.index()] && removable(v, &indeg, &outdeg))
        .collect();
    while let Some(x) = queue.pop_front() {
        if !alive[x.index()] {
            continue;
        }
        alive[x.index()] = false;
        for &y in graph.succ(x) {
            if alive[y.index()] {
                indeg[y.index()] -= 1;
                if removable(y, &indeg, &outdeg) {
                    queue.push_back(y);
                }
            }
        }
        for &w in graph.pred(x) {
            if alive[w.index()] {
                outdeg[w.index()] -= 1;
                if removable(w, &indeg, &outdeg) {
                    queue.push_back(w);
                }
            }
        }
    }
    alive
}

/// Fixed-size bitset over local vertex positions.
#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn count_in(&self, mask: &Bits) -> u32 {
        self.0
            .iter()
            .zip(&mask.0)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }
}

fn connected_count_violations(g: &StratifiedDigraph, alive: &[bool]) -> Vec<Vertex> {
    let graph = g.graph();
    let live: Vec<Vertex> = graph
        .vertices()
        .iter()
        .copied()
        .filter(|v| alive[v.index()])
        .collect();
    let n = live.len();
    let mut pos = vec![usize::MAX; graph.universe()];
    for (i, v) in live.iter().enumerate() {
        pos[v.index()] = i;
    }
    let layer_masks: Vec<Bits> = g
        .layers()
        .iter()
        .map(|layer| {
            let mut m = Bits::new(n);
            for v in layer.iter().filter(|v| alive[v.index()]) {
                m.set(pos[v.index()]);
            }
            m
        })
        .collect();

    // ancestors top-down, descendants bottom-up; layers are a topological order
    let mut anc = vec![Bits::new(n); n];
    for layer in g.layers() {
        for &x in layer.iter().filter(|v| alive[v.index()]) {
            let mut acc = Bits::new(n);
            for &u in graph.pred(x).iter().filter(|u| alive[u.index()]) {
                acc.union_with(&anc[pos[u.index()]]);
                acc.set(pos[u.index()]);
            }
            anc[pos[x.index()]] = acc;
        }
    }
    let mut desc = vec![Bits::new(n); n];
    for layer in g.layers().iter().rev() {
        for &x in layer.iter().filter(|v| alive[v.index()]) {
            let mut acc = Bits::new(n);
            for &y in graph.succ(x).iter().filter(|y| alive[y.index()]) {
                acc.union_with(&desc[pos[y.index()]]);
                acc.set(pos[y.index()]);
            }
            desc[pos[x.index()]] = acc;
        }
    }

    live.iter()
        .copied()
        .filter(|&x| {
            let i = g.layer_of(x).expect("vertex in graph");
            let p = pos[x.index()];
            (0..layer_masks.len()).filter(|&j| j != i).any(|j| {
                let reach = if j < i { &anc[p] } else { &desc[p] };
                reach.count_in(&layer_masks[j]) <= 1
            })
        })
        .collect()
}
