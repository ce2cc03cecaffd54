//! Shared fixtures and independent oracles for the integration suites.

use std::collections::BTreeSet;

use watchsys::bits::VertexSet;
use watchsys::graph::Graph;
use watchsys::watch::{Watcher, WatchingSystem};

/// The six-vertex octahedron: a hexagon plus the two triangles on even and
/// odd vertices. Every vertex is adjacent to all but its antipode, so closed
/// neighborhoods pairwise differ by exactly two vertices.
pub fn octahedron() -> Graph {
    Graph::from_edge_list(
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (0, 2),
            (2, 4),
            (4, 0),
            (1, 3),
            (3, 5),
            (5, 1),
        ],
    )
    .unwrap()
}

fn system(graph_n: usize, watchers: &[(usize, &[usize])]) -> WatchingSystem {
    WatchingSystem {
        graph_n,
        r: 1,
        watchers: watchers
            .iter()
            .map(|(loc, zone)| Watcher {
                location: *loc,
                zone: VertexSet::from_iter(graph_n, zone.iter().copied()),
            })
            .collect(),
    }
}

/// The published minimum watching system of size three on the octahedron:
/// labels {1,2}, {2}, {1}, {0}, {0,2}, {0,1} around the hexagon.
pub fn octahedron_system() -> WatchingSystem {
    system(6, &[(4, &[3, 4, 5]), (1, &[0, 2, 5]), (0, &[0, 1, 4])])
}

/// The published minimum watching system of size four on the 15-vertex star:
/// all four watchers sit at the center; the leaves take the 14 proper
/// nonempty subsets of {0,1,2,3} in (size, value) order and the center takes
/// the full set.
pub fn star_system() -> WatchingSystem {
    let mut subsets: Vec<Vec<usize>> = (1u32..16).map(|m| (0..4).filter(|b| m >> b & 1 == 1).collect()).collect();
    subsets.sort_by_key(|s| (s.len(), s.clone()));
    // the full set goes to the center (vertex 0), the rest to leaves 1..=14
    let mut zones: Vec<Vec<usize>> = vec![vec![0]; 4];
    for (leaf, subset) in subsets.iter().take(14).enumerate() {
        for &w in subset {
            zones[w].push(leaf + 1);
        }
    }
    WatchingSystem {
        graph_n: 15,
        r: 1,
        watchers: zones
            .into_iter()
            .map(|zone| Watcher { location: 0, zone: VertexSet::from_iter(15, zone) })
            .collect(),
    }
}

/// Independent brute-force watching number: enumerate all subsets of the
/// deduplicated candidate-watcher pool (every nonempty zone inside some
/// closed neighborhood) in increasing size and test the labels directly.
/// Exponential; for cross-checking the branch-and-bound on tiny graphs only.
pub fn dumb_watching_number(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 16);
    let mut zones: BTreeSet<Vec<usize>> = BTreeSet::new();
    for v in 0..n {
        let hood: Vec<usize> = g.closed_neighborhood(v).to_vec();
        for mask in 1u32..1 << hood.len() {
            zones.insert(
                hood.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &u)| u)
                    .collect(),
            );
        }
    }
    let pool: Vec<u32> = zones
        .into_iter()
        .map(|zone| zone.into_iter().fold(0u32, |m, v| m | 1 << v))
        .collect();
    for size in 1..=n {
        if try_pools(&pool, g, size) {
            return size;
        }
    }
    n
}

fn try_pools(pool: &[u32], g: &Graph, size: usize) -> bool {
    fn rec(pool: &[u32], n: usize, chosen: &mut Vec<u32>, start: usize, size: usize) -> bool {
        if chosen.len() == size {
            let mut labels: Vec<u32> = (0..n)
                .map(|v| {
                    chosen
                        .iter()
                        .enumerate()
                        .fold(0u32, |m, (i, z)| m | (u32::from(z >> v & 1 == 1) << i))
                })
                .collect();
            if labels.iter().any(|&l| l == 0) {
                return false;
            }
            labels.sort_unstable();
            return labels.windows(2).all(|w| w[0] != w[1]);
        }
        for i in start..pool.len() {
            chosen.push(pool[i]);
            if rec(pool, n, chosen, i + 1, size) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    rec(pool, g.order(), &mut Vec::new(), 0, size)
}
