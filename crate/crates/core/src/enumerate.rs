//! Exhaustive generation of small graphs up to isomorphism: all free trees
//! by leaf growth, and all connected graphs by edge-subset enumeration.

use std::collections::HashSet;

use crate::graph::Graph;

/// Canonical form of a labeled graph: the smallest upper-triangle adjacency
/// bitmask over all vertex permutations. Only intended for small n (the
/// n <= 10 range used in tests; the pair count must fit in 64 bits).
fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n * n.saturating_sub(1) / 2 <= 64);
    let adj: Vec<u16> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w))
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                code |= u64::from(adj[p[i]] >> p[j] & 1) << bit;
                bit += 1;
            }
        }
        best = best.min(code);
    });
    best
}

fn permute(perm: &mut Vec<usize>, i: usize, visit: &mut impl FnMut(&[usize])) {
    if i == perm.len() {
        visit(perm);
        return;
    }
    for j in i..perm.len() {
        perm.swap(i, j);
        permute(perm, i + 1, visit);
        perm.swap(i, j);
    }
}

/// All free trees on n vertices, one labeled representative per isomorphism
/// class, grown by attaching a leaf to every vertex of every smaller tree.
pub fn all_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut current = vec![Graph::from_edge_list(1, &[]).unwrap()];
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &current {
            let mut edges = t.edges();
            for v in 0..size - 1 {
                edges.push((v, size - 1));
                let grown = Graph::from_edge_list(size, &edges).unwrap();
                edges.pop();
                if seen.insert(canonical_code(&grown)) {
                    next.push(grown);
                }
            }
        }
        current = next;
    }
    current
}

/// All connected graphs on n vertices, one representative per isomorphism
/// class, by enumerating every edge subset and deduplicating canonically.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=6).contains(&n), "edge-subset enumeration is for n <= 6");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if g.is_connected() && seen.insert(canonical_code(&g)) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts_match_oeis() {
        // number of free trees: 1, 1, 1, 2, 3, 6, 11, 23, 47
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(all_trees(i + 1).len(), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn trees_are_trees() {
        for t in all_trees(7) {
            assert!(t.is_tree());
        }
    }

    #[test]
    fn connected_graph_counts_match_oeis() {
        // connected graphs up to isomorphism: 1, 1, 2, 6, 21, 112
        let expected = [1, 1, 2, 6, 21, 112];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(connected_graphs(i + 1).len(), want, "n = {}", i + 1);
        }
    }
}
