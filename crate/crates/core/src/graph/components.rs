use super::{Digraph, Vertex};

/// Weakly connected components, ordered by their smallest vertex.
pub fn weakly_connected_components(g: &Digraph) -> Vec<Digraph> {
    let mut parent: Vec<usize> = (0..g.universe()).collect();

    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    for &(u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u.index()), find(&mut parent, v.index()));
        if a != b {
            // keep the smaller id as root so roots order components
            let (lo, hi) = (a.min(b), a.max(b));
            parent[hi] = lo;
        }
    }

    let mut groups: Vec<(usize, Vec<Vertex>)> = Vec::new();
    let mut slot = vec![usize::MAX; g.universe()];
    for &v in g.vertices() {
        let root = find(&mut parent, v.index());
        if slot[root] == usize::MAX {
            slot[root] = groups.len();
            groups.push((root, Vec::new()));
        }
        groups[slot[root]].1.push(v);
    }
    groups
        .into_iter()
        .map(|(_, members)| {
            let mut keep = vec![false; g.universe()];
            for v in &members {
                keep[v.index()] = true;
            }
            g.induced(&keep)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures;

    #[test]
    fn two_disjoint_edges() {
        let g = Digraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let cs = weakly_connected_components(&g);
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].vertices(), [Vertex(0), Vertex(1)]);
        assert_eq!(cs[1].edges(), [(Vertex(2), Vertex(3))]);
    }

    #[test]
    fn diamond_is_connected() {
        let cs = weakly_connected_components(&fixtures::diamond());
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0], fixtures::diamond());
    }

    #[test]
    fn isolated_vertices_are_components() {
        let g = Digraph::from_edges(3, &[(2, 1)]).unwrap();
        let cs = weakly_connected_components(&g);
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].vertices(), [Vertex(0)]);
        assert_eq!(cs[1].vertices(), [Vertex(1), Vertex(2)]);
    }
}
