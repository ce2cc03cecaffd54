//! Immutable simple undirected graphs with the neighborhood, ball, distance,
//! spanning-tree and diameter-path queries the rest of the crate consumes.

use std::collections::VecDeque;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bits::VertexSet;

/// Vertex identifier: a dense index in `[0, n)` for a graph of order `n`.
pub type VertexId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside [0, {n})")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("graph is disconnected: no path between {u} and {v}")]
    Disconnected { u: VertexId, v: VertexId },
    #[error("graph is not a tree (n = {n}, m = {m})")]
    NotATree { n: usize, m: usize },
    #[error("vertex {v} out of range [0, {n})")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    BadOrder(String),
}

/// Simple, finite, undirected graph. Adjacency lists are sorted; construction
/// collapses duplicate edges and rejects self-loops.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<VertexId>>,
    adj_sets: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj_sets: Vec<VertexSet> = (0..n).map(|_| VertexSet::new(n)).collect();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            adj_sets[u].insert(v);
            adj_sets[v].insert(u);
        }
        let adj = adj_sets.iter().map(|s| s.to_vec()).collect();
        Ok(Graph { n, adj, adj_sets })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj_sets[u].contains(v)
    }

    /// `N[v] = {v} ∪ adj(v)`.
    pub fn closed_neighborhood(&self, v: VertexId) -> VertexSet {
        let mut s = self.adj_sets[v].clone();
        s.insert(v);
        s
    }

    /// All vertices at distance at most `r` from `v`, by breadth-first search.
    pub fn ball(&self, v: VertexId, r: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(self.n, v);
        let mut frontier = vec![v];
        for _ in 0..r {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in &self.adj[u] {
                    if !seen.contains(w) {
                        seen.insert(w);
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        seen
    }

    /// BFS distances from `v`; `None` for unreachable vertices.
    pub fn distances_from(&self, v: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path length, or `None` across components.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.distances_from(u)[v]
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// BFS spanning tree rooted at vertex 0, neighbors visited in index order.
    pub fn spanning_tree(&self) -> Result<Graph, GraphError> {
        if self.n == 0 {
            return Graph::from_edge_list(0, &[]);
        }
        let dist = self.distances_from(0);
        if let Some(v) = dist.iter().position(Option::is_none) {
            return Err(GraphError::Disconnected { u: 0, v });
        }
        let mut edges = Vec::with_capacity(self.n.saturating_sub(1));
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    edges.push((u, w));
                    queue.push_back(w);
                }
            }
        }
        Graph::from_edge_list(self.n, &edges)
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.num_edges() == self.n - 1 && self.is_connected()
    }

    /// Vertex sequence of a longest path of a tree, found by double BFS.
    /// Ties are broken toward the smallest vertex index.
    pub fn diameter_path(&self) -> Result<Vec<VertexId>, GraphError> {
        if !self.is_tree() {
            return Err(GraphError::NotATree { n: self.n, m: self.num_edges() });
        }
        let farthest = |from: VertexId| -> VertexId {
            let dist = self.distances_from(from);
            let mut best = from;
            for v in 0..self.n {
                if dist[v].unwrap() > dist[best].unwrap() {
                    best = v;
                }
            }
            best
        };
        let a = farthest(0);
        let b = farthest(a);
        // walk back from b to a along BFS parents
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::from([a]);
        let mut seen = vec![false; self.n];
        seen[a] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        Ok(path)
    }

    /// Smallest pair of vertices with equal closed neighborhoods, if any.
    pub fn twins(&self) -> Option<(VertexId, VertexId)> {
        let hoods: Vec<VertexSet> = (0..self.n).map(|v| self.closed_neighborhood(v)).collect();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if hoods[u] == hoods[v] {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// True iff all closed neighborhoods are pairwise distinct.
    pub fn is_twin_free(&self) -> bool {
        self.twins().is_none()
    }

    /// Subgraph induced by `verts`, plus the map from new ids to old ids.
    pub fn induced(&self, verts: &VertexSet) -> (Graph, Vec<VertexId>) {
        let map: Vec<VertexId> = verts.iter().collect();
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            index[old] = new;
        }
        let mut edges = Vec::new();
        for (new, &old) in map.iter().enumerate() {
            for &w in &self.adj[old] {
                if old < w && verts.contains(w) {
                    edges.push((new, index[w]));
                }
            }
        }
        let g = Graph::from_edge_list(map.len(), &edges).expect("induced edges are in range");
        (g, map)
    }

    pub fn add_edge(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        let mut edges = self.edges();
        edges.push((u, v));
        Graph::from_edge_list(self.n, &edges)
    }
}

// ---- generators -----------------------------------------------------------

impl Graph {
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::BadOrder("path needs n >= 1".into()));
        }
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::BadOrder("cycle needs n >= 3".into()));
        }
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edge_list(n, &edges)
    }

    /// Star with center 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::BadOrder("star needs n >= 1".into()));
        }
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edge_list(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::BadOrder("complete graph needs n >= 1".into()));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Uniform random labeled tree from a seeded Prüfer sequence.
    pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::BadOrder("tree needs n >= 1".into()));
        }
        if n <= 2 {
            return Graph::path(n);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let mut degree = vec![1usize; n];
        for &v in &prufer {
            degree[v] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        let mut leaf_heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
            .filter(|&v| degree[v] == 1)
            .map(std::cmp::Reverse)
            .collect();
        for &v in &prufer {
            let std::cmp::Reverse(leaf) = leaf_heap.pop().expect("prufer decode leaf");
            edges.push((leaf, v));
            degree[v] -= 1;
            if degree[v] == 1 {
                leaf_heap.push(std::cmp::Reverse(v));
            }
        }
        let std::cmp::Reverse(a) = leaf_heap.pop().unwrap();
        let std::cmp::Reverse(b) = leaf_heap.pop().unwrap();
        edges.push((a, b));
        Graph::from_edge_list(n, &edges)
    }
}

// ---- edge-list text format -------------------------------------------------
//
// First non-comment line is "n m", then m lines "u v" (0-based). Lines
// starting with '#' are ignored.

impl Graph {
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let parse_num = |tok: Option<&str>, what: &str| -> Result<usize, GraphError> {
                tok.ok_or_else(|| GraphError::Parse {
                    line: lineno + 1,
                    msg: format!("missing {what}"),
                })?
                .parse()
                .map_err(|_| GraphError::Parse {
                    line: lineno + 1,
                    msg: format!("{what} is not a number: {line:?}"),
                })
            };
            let a = parse_num(parts.next(), "first field")?;
            let b = parse_num(parts.next(), "second field")?;
            if parts.next().is_some() {
                return Err(GraphError::Parse {
                    line: lineno + 1,
                    msg: format!("trailing tokens in {line:?}"),
                });
            }
            if header.is_none() {
                header = Some((a, b));
            } else {
                edges.push((a, b));
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse { line: 0, msg: "empty input".into() })?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: 0,
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Canonical serialization: header then edges sorted ascending.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.num_edges());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_from_edges() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.num_edges(), 3);
        for v in 0..3 {
            assert_eq!(g.degree(v), 2);
        }
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.num_edges(), 1);
    }

    #[test]
    fn star_max_degree() {
        let g = Graph::star(15).unwrap();
        assert_eq!(g.max_degree(), 14);
        assert_eq!(g.degree(0), 14);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::EdgeOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(GraphError::SelfLoop { v: 1 }));
    }

    #[test]
    fn closed_neighborhoods() {
        let g = Graph::from_edge_list(3, &[]).unwrap();
        assert_eq!(g.closed_neighborhood(1).to_vec(), vec![1]);

        let star = Graph::star(15).unwrap();
        assert_eq!(star.closed_neighborhood(0).len(), 15);

        let p5 = Graph::path(5).unwrap();
        assert_eq!(p5.closed_neighborhood(2).to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn balls() {
        let p9 = Graph::path(9).unwrap();
        assert_eq!(p9.ball(4, 0).to_vec(), vec![4]);
        assert_eq!(p9.ball(4, 2).len(), 5);
        assert_eq!(p9.ball(4, 1), p9.closed_neighborhood(4));
        assert_eq!(p9.ball(0, 100).len(), 9);
    }

    #[test]
    fn distances() {
        let p7 = Graph::path(7).unwrap();
        assert_eq!(p7.distance(3, 3), Some(0));
        assert_eq!(p7.distance(0, 6), Some(6));
        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.distance(0, 3), None);
        assert!(!two.is_connected());
    }

    #[test]
    fn spanning_tree_basics() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.spanning_tree().unwrap(), p4);

        let c4 = Graph::cycle(4).unwrap();
        let t = c4.spanning_tree().unwrap();
        assert_eq!(t.num_edges(), 3);
        assert!(t.is_tree());
        for (u, v) in t.edges() {
            assert!(c4.has_edge(u, v));
        }

        let star = Graph::star(15).unwrap();
        assert_eq!(star.spanning_tree().unwrap(), star);

        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.spanning_tree(), Err(GraphError::Disconnected { u: 0, v: 2 }));
    }

    #[test]
    fn diameter_paths() {
        let p6 = Graph::path(6).unwrap();
        assert_eq!(p6.diameter_path().unwrap().len(), 6);

        let k13 = Graph::star(4).unwrap();
        let path = k13.diameter_path().unwrap();
        assert_eq!(path.len(), 3);
        assert_eq!(path[1], 0);

        let single = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(single.diameter_path().unwrap(), vec![0]);

        let c4 = Graph::cycle(4).unwrap();
        assert!(c4.diameter_path().is_err());
    }

    #[test]
    fn twin_detection() {
        // triangle plus a pendant: N[0] = N[1] = {0, 1, 2}
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert_eq!(g.twins(), Some((0, 1)));

        // two pendants on the same vertex are not closed-neighborhood twins:
        // N[2] = {1, 2} and N[3] = {1, 3} differ
        let pendants = Graph::from_edge_list(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(pendants.is_twin_free());

        assert!(Graph::path(5).unwrap().is_twin_free());
        assert_eq!(Graph::path(2).unwrap().twins(), Some((0, 1)));
        // stars are twin-free: each leaf's closed neighborhood is {leaf, center}
        assert!(Graph::star(15).unwrap().is_twin_free());
    }

    #[test]
    fn random_trees_are_trees() {
        for seed in 0..20 {
            let t = Graph::random_tree(10, seed).unwrap();
            assert!(t.is_tree());
        }
        assert_eq!(
            Graph::random_tree(10, 7).unwrap(),
            Graph::random_tree(10, 7).unwrap()
        );
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edge_list(5, &[(0, 4), (1, 2), (0, 1)]).unwrap();
        let text = g.to_edge_list();
        let h = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(g, h);
        assert_eq!(text, h.to_edge_list());
    }

    #[test]
    fn edge_list_parsing() {
        let g = Graph::parse_edge_list("# a comment\n3 2\n0 1\n1 2").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.num_edges(), 2);
        assert!(Graph::parse_edge_list("3 2\n0 1").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 zebra").is_err());
        assert!(Graph::parse_edge_list("").is_err());
    }

    #[test]
    fn induced_subgraph() {
        let p5 = Graph::path(5).unwrap();
        let (sub, map) = p5.induced(&VertexSet::from_iter(5, [1, 2, 4]));
        assert_eq!(map, vec![1, 2, 4]);
        assert_eq!(sub.edges(), vec![(0, 1)]);
    }
}
