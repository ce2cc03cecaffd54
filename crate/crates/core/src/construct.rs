//! Constructive algorithms with proven size guarantees: the 2n/3 tree and
//! graph construction, closed-form path and cycle systems, the (1,<=2)
//! path/cycle families, and the trivial hermit system.

use thiserror::Error;

use crate::bits::VertexSet;
use crate::graph::{Graph, VertexId};
use crate::solver::{watching_number, SolveError, SolverBudget};
use crate::watch::{verify, Watcher, WatchingSystem};

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("input graph is not a tree (n = {n}, m = {m})")]
    NotATree { n: usize, m: usize },
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("n must be at least {min}, got {n}")]
    BadN { n: usize, min: usize },
    #[error("no watcher can be anchored at vertex {v}")]
    Unanchorable { v: VertexId },
    #[error("anchored pair construction needs a 4-vertex tree, got {n} vertices")]
    BadAnchorOrder { n: usize },
    #[error("internal: constructed system failed verification: {0}")]
    Internal(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Size target of the tree/graph construction: the exact small-order optima
/// 1, 2, 2, 3, 3, then floor(2n/3).
pub fn two_thirds_target(n: usize) -> usize {
    match n {
        0 => 0,
        1 => 1,
        2 | 3 => 2,
        4 | 5 => 3,
        _ => 2 * n / 3,
    }
}

/// How a recursive subtree solve is constrained by its caller.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    /// The result must locate a watcher at this vertex.
    HostWatcher(VertexId),
    /// Two watchers on a 4-vertex tree: all vertices except this one are
    /// covered and pairwise separated, and this one is still covered.
    CoverAllBut(VertexId),
}

fn checked(
    g: &Graph,
    watchers: Vec<Watcher>,
    r: usize,
    ell: usize,
) -> Result<WatchingSystem, ConstructError> {
    let system = WatchingSystem { watchers, r, graph_n: g.order() };
    let report = verify(g, &system, ell).map_err(|e| ConstructError::Internal(e.to_string()))?;
    if !report.valid {
        return Err(ConstructError::Internal(format!("{:?}", report.violation)));
    }
    Ok(system)
}

/// The trivial system of one hermit per vertex; valid at every radius and
/// every identification level.
pub fn hermit_system(g: &Graph) -> WatchingSystem {
    let n = g.order();
    WatchingSystem {
        watchers: (0..n)
            .map(|v| Watcher { location: v, zone: VertexSet::singleton(n, v) })
            .collect(),
        r: 1,
        graph_n: n,
    }
}

// ---- scoped tree helpers ----------------------------------------------------
//
// The 2n/3 recursion works on vertex subsets of the original tree so that
// watchers keep their final coordinates throughout.

struct Scope<'a> {
    g: &'a Graph,
    alive: VertexSet,
}

impl<'a> Scope<'a> {
    fn len(&self) -> usize {
        self.alive.len()
    }

    fn without(&self, removed: &[VertexId]) -> Scope<'a> {
        let mut alive = self.alive.clone();
        for &v in removed {
            alive.remove(v);
        }
        Scope { g: self.g, alive }
    }

    fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.g.neighbors(v).iter().copied().filter(|&w| self.alive.contains(w))
    }

    fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).count()
    }

    fn closed_neighborhood(&self, v: VertexId) -> VertexSet {
        let mut s = VertexSet::singleton(self.g.order(), v);
        for w in self.neighbors(v) {
            s.insert(w);
        }
        s
    }

    fn bfs(&self, start: VertexId) -> (Vec<Option<usize>>, Vec<VertexId>) {
        let n = self.g.order();
        let mut dist = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        dist[start] = Some(0);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    /// Longest path of the scoped tree by double BFS, ties toward smaller ids.
    fn diameter_path(&self) -> Vec<VertexId> {
        let start = self.alive.first().expect("nonempty scope");
        let farthest = |from: VertexId| -> VertexId {
            let (dist, _) = self.bfs(from);
            self.alive
                .iter()
                .max_by_key(|&v| (dist[v].expect("scope is connected"), std::cmp::Reverse(v)))
                .unwrap()
        };
        let a = farthest(start);
        let b = farthest(a);
        let (_, parent) = self.bfs(a);
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }
}

// ---- anchoring rewrites -------------------------------------------------------

/// Index of the smallest watcher located at `v`, if any.
fn watcher_at(watchers: &[Watcher], v: VertexId) -> Option<usize> {
    (0..watchers.len()).find(|&i| watchers[i].location == v)
}

/// Rewrite a valid scoped system so a watcher is located at `target`,
/// preserving size and validity. Works when `target` is adjacent to a leaf
/// (relocate the leaf's watchers along the zone inclusion N[leaf] ⊆
/// N[target]), or two steps from a leaf through a degree-2 vertex (rebuild
/// the local zones).
fn host_watcher_at(
    scope: &Scope,
    watchers: &mut [Watcher],
    target: VertexId,
) -> Result<usize, ConstructError> {
    if let Some(i) = watcher_at(watchers, target) {
        return Ok(i);
    }
    if let Some(leaf) = scope
        .neighbors(target)
        .find(|&f| scope.degree(f) == 1 && watchers.iter().any(|w| w.location == f))
    {
        for w in watchers.iter_mut() {
            if w.location == leaf {
                w.location = target;
            }
        }
        return watcher_at(watchers, target).ok_or(ConstructError::Unanchorable { v: target });
    }
    // chain leaf -- mid -- target with mid of degree 2
    let chain = scope.neighbors(target).find_map(|mid| {
        if scope.degree(mid) != 2 {
            return None;
        }
        scope
            .neighbors(mid)
            .find(|&y| y != target && scope.degree(y) == 1)
            .map(|leaf| (mid, leaf))
    });
    let Some((mid, leaf)) = chain else {
        return Err(ConstructError::Unanchorable { v: target });
    };
    // pull the leaf's watchers onto mid; afterwards every coverer of leaf or
    // mid sits at mid, and there are at least two of them since the two
    // labels are nonempty and distinct
    for w in watchers.iter_mut() {
        if w.location == leaf {
            w.location = mid;
        }
    }
    let at_mid: Vec<usize> =
        (0..watchers.len()).filter(|&i| watchers[i].location == mid).collect();
    let w1 = at_mid
        .iter()
        .copied()
        .find(|&i| watchers[i].zone.contains(leaf))
        .expect("leaf is covered from mid");
    let w2 = at_mid
        .iter()
        .copied()
        .find(|&i| i != w1)
        .expect("two watchers sit at mid");
    let n = scope.g.order();
    for &i in &at_mid {
        if i == w1 {
            watchers[i].zone = VertexSet::from_iter(n, [leaf, mid]);
        } else if i == w2 {
            watchers[i].location = target;
            watchers[i].zone = VertexSet::from_iter(n, [mid, target]);
        } else {
            watchers[i].zone = VertexSet::singleton(n, mid);
        }
    }
    Ok(w2)
}

/// Brute-force pair of watchers on a 4-vertex scoped tree: covers and
/// pairwise separates everything except `v`, and still covers `v`.
/// The lexicographically first such pair is returned.
fn anchored_pair(scope: &Scope, v: VertexId) -> Result<Vec<Watcher>, ConstructError> {
    if scope.len() != 4 {
        return Err(ConstructError::BadAnchorOrder { n: scope.len() });
    }
    let n = scope.g.order();
    let verts: Vec<VertexId> = scope.alive.iter().collect();
    let mut pool: Vec<Watcher> = Vec::new();
    for &loc in &verts {
        let hood: Vec<VertexId> = scope.closed_neighborhood(loc).iter().collect();
        for mask in 1u32..1 << hood.len() {
            let zone = VertexSet::from_iter(
                n,
                hood.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &u)| u),
            );
            pool.push(Watcher { location: loc, zone });
        }
    }
    let others: Vec<VertexId> = verts.iter().copied().filter(|&u| u != v).collect();
    for i in 0..pool.len() {
        for j in i + 1..pool.len() {
            let pair = [&pool[i], &pool[j]];
            let label = |u: VertexId| -> u8 {
                pair.iter()
                    .enumerate()
                    .fold(0, |m, (b, w)| m | ((w.zone.contains(u) as u8) << b))
            };
            let labels: Vec<u8> = others.iter().map(|&u| label(u)).collect();
            let good = labels.iter().all(|&l| l != 0)
                && labels[0] != labels[1]
                && labels[0] != labels[2]
                && labels[1] != labels[2]
                && label(v) != 0;
            if good {
                return Ok(vec![pool[i].clone(), pool[j].clone()]);
            }
        }
    }
    unreachable!("every 4-vertex tree admits an anchored pair");
}

/// Exact small-tree systems (orders 1..=5), generated by the exact solver on
/// the scoped subtree rather than transcribed by hand.
fn small_tree_system(scope: &Scope) -> Result<Vec<Watcher>, ConstructError> {
    let (sub, map) = scope.g.induced(&scope.alive);
    let res = watching_number(&sub, 1, 1, &SolverBudget::large())?;
    let n = scope.g.order();
    Ok(res
        .certificate
        .watchers
        .into_iter()
        .map(|w| Watcher {
            location: map[w.location],
            zone: VertexSet::from_iter(n, w.zone.iter().map(|u| map[u])),
        })
        .collect())
}

// ---- the 2n/3 recursion -------------------------------------------------------

fn subtree_system(scope: &Scope, anchor: Option<Anchor>) -> Result<Vec<Watcher>, ConstructError> {
    match anchor {
        Some(Anchor::CoverAllBut(v)) => return anchored_pair(scope, v),
        Some(Anchor::HostWatcher(v)) => {
            let mut watchers = subtree_system(scope, None)?;
            host_watcher_at(scope, &mut watchers, v)?;
            return Ok(watchers);
        }
        None => {}
    }
    if scope.len() <= 5 {
        return small_tree_system(scope);
    }
    let path = scope.diameter_path();
    let d = path.len() - 1;
    let leaf = path[d];
    let a = path[d - 1];
    let b = path[d - 2];
    match scope.degree(a) {
        3 => {
            let extra = scope.neighbors(a).find(|&x| x != b && x != leaf).unwrap();
            case_branching_three(scope, b, a, leaf, extra)
        }
        deg if deg >= 4 => case_branching_many(scope, b, a, leaf),
        2 => {
            if scope.degree(b) == 2 {
                let c = path[d - 3];
                case_bare_tail(scope, c, b, a, leaf)
            } else {
                // b has an extra neighbor x; if x branches, x takes over the
                // role of a, with its leaf children as the path ends
                let x = scope.neighbors(b).find(|&x| x != a && x != path[d - 3]).unwrap();
                match scope.degree(x) {
                    dx if dx >= 4 => {
                        let child = scope.neighbors(x).find(|&c| c != b).unwrap();
                        case_branching_many(scope, b, x, child)
                    }
                    3 => {
                        let mut children = scope.neighbors(x).filter(|&c| c != b);
                        let child = children.next().unwrap();
                        let extra = children.next().unwrap();
                        case_branching_three(scope, b, x, child, extra)
                    }
                    _ => case_deep_tail(scope, b, a, leaf),
                }
            }
        }
        _ => unreachable!("next-to-last path vertex has degree >= 2 when n >= 6"),
    }
}

/// deg(a) = 3: remove the two leaves hanging off `a` together with `a`,
/// then watch the three of them with two watchers at `a`.
fn case_branching_three(
    scope: &Scope,
    b: VertexId,
    a: VertexId,
    leaf: VertexId,
    extra: VertexId,
) -> Result<Vec<Watcher>, ConstructError> {
    let rest = scope.without(&[extra, a, leaf]);
    let anchor = (rest.len() == 4).then_some(Anchor::CoverAllBut(b));
    let mut watchers = subtree_system(&rest, anchor)?;
    let n = scope.g.order();
    watchers.push(Watcher { location: a, zone: VertexSet::from_iter(n, [b, a, leaf]) });
    watchers.push(Watcher { location: a, zone: VertexSet::from_iter(n, [a, extra]) });
    Ok(watchers)
}

/// deg(a) = deg(b) = 2: remove the bare three-vertex tail b, a, leaf.
fn case_bare_tail(
    scope: &Scope,
    c: VertexId,
    b: VertexId,
    a: VertexId,
    leaf: VertexId,
) -> Result<Vec<Watcher>, ConstructError> {
    let rest = scope.without(&[b, a, leaf]);
    let anchor = (rest.len() == 4).then_some(Anchor::CoverAllBut(c));
    let mut watchers = subtree_system(&rest, anchor)?;
    let n = scope.g.order();
    watchers.push(Watcher { location: b, zone: VertexSet::from_iter(n, [c, b, a]) });
    watchers.push(Watcher { location: a, zone: VertexSet::from_iter(n, [b, leaf]) });
    Ok(watchers)
}

/// deg(a) >= 4: remove two leaves x, y off `a`, anchor a watcher at `a`,
/// extend its zone with x and add one watcher for the pair.
fn case_branching_many(
    scope: &Scope,
    b: VertexId,
    a: VertexId,
    leaf: VertexId,
) -> Result<Vec<Watcher>, ConstructError> {
    let mut extras = scope.neighbors(a).filter(|&x| x != b && x != leaf);
    let x = extras.next().unwrap();
    let y = extras.next().unwrap();
    let rest = scope.without(&[x, y]);
    let mut watchers = subtree_system(&rest, None)?;
    let host = host_watcher_at(&rest, &mut watchers, a)?;
    watchers[host].zone.insert(x);
    let n = scope.g.order();
    watchers.push(Watcher { location: a, zone: VertexSet::from_iter(n, [x, y]) });
    Ok(watchers)
}

/// deg(a) = 2, deg(b) >= 3 with only thin growth past b: remove a and the
/// leaf, anchor a watcher at b and extend its zone with a.
fn case_deep_tail(
    scope: &Scope,
    b: VertexId,
    a: VertexId,
    leaf: VertexId,
) -> Result<Vec<Watcher>, ConstructError> {
    let rest = scope.without(&[a, leaf]);
    let mut watchers = subtree_system(&rest, None)?;
    let host = host_watcher_at(&rest, &mut watchers, b)?;
    watchers[host].zone.insert(a);
    let n = scope.g.order();
    watchers.push(Watcher { location: a, zone: VertexSet::from_iter(n, [a, leaf]) });
    Ok(watchers)
}

/// Watching system on a tree of size at most floor(2n/3) for n not in
/// {1, 2, 4}, with the exact optima 1, 2, 2, 3, 3 for n = 1..=5.
pub fn tree_2n3_system(t: &Graph) -> Result<WatchingSystem, ConstructError> {
    if !t.is_tree() {
        return Err(ConstructError::NotATree { n: t.order(), m: t.num_edges() });
    }
    let scope = Scope { g: t, alive: VertexSet::full(t.order()) };
    let watchers = subtree_system(&scope, None)?;
    debug_assert!(watchers.len() <= two_thirds_target(t.order()));
    checked(t, watchers, 1, 1)
}

/// Same bound on an arbitrary connected graph: build on a spanning tree and
/// return the system unchanged. A system for a partial graph stays valid on
/// any supergraph over the same vertices.
pub fn graph_2n3_system(g: &Graph) -> Result<WatchingSystem, ConstructError> {
    let tree = g.spanning_tree().map_err(|_| ConstructError::Disconnected)?;
    let system = tree_2n3_system(&tree)?;
    checked(g, system.watchers, 1, 1)
}

/// A tree solve with an explicit caller constraint, exposed so the anchoring
/// contracts can be checked directly.
pub fn tree_system_anchored(t: &Graph, anchor: Anchor) -> Result<WatchingSystem, ConstructError> {
    if !t.is_tree() {
        return Err(ConstructError::NotATree { n: t.order(), m: t.num_edges() });
    }
    let scope = Scope { g: t, alive: VertexSet::full(t.order()) };
    let watchers = subtree_system(&scope, Some(anchor))?;
    match anchor {
        Anchor::HostWatcher(_) => checked(t, watchers, 1, 1),
        // the pair leaves the anchor unidentified on purpose, so it cannot
        // pass full verification; return it unchecked
        Anchor::CoverAllBut(_) => Ok(WatchingSystem { watchers, r: 1, graph_n: t.order() }),
    }
}

// ---- paths and cycles, level 1 ------------------------------------------------

/// Optimal system on the path: size exactly ceil((n+1)/2). Full-neighborhood
/// watchers on every other vertex, plus a final hermit on even orders.
pub fn path_system(n: usize) -> Result<WatchingSystem, ConstructError> {
    if n < 1 {
        return Err(ConstructError::BadN { n, min: 1 });
    }
    let g = Graph::path(n).expect("n >= 1");
    if n <= 2 {
        return Ok(hermit_system(&g));
    }
    let mut watchers: Vec<Watcher> = (0..=(n - 1) / 2)
        .map(|j| 2 * j)
        .take_while(|&v| v < n)
        .map(|v| Watcher { location: v, zone: g.closed_neighborhood(v) })
        .collect();
    if n % 2 == 0 {
        // the last even-index watcher stops at n-2; a hermit separates the
        // two final vertices
        watchers.push(Watcher { location: n - 1, zone: VertexSet::singleton(n, n - 1) });
    }
    let system = checked(&g, watchers, 1, 1)?;
    debug_assert_eq!(system.size(), (n + 1).div_ceil(2));
    Ok(system)
}

/// Optimal system on the cycle: ceil(n/2) for n = 3 and n >= 5, and 3 for
/// the 4-cycle. Small orders come from the exact solver.
pub fn cycle_system(n: usize) -> Result<WatchingSystem, ConstructError> {
    if n < 3 {
        return Err(ConstructError::BadN { n, min: 3 });
    }
    let g = Graph::cycle(n).expect("n >= 3");
    if n <= 4 {
        let res = watching_number(&g, 1, 1, &SolverBudget::large())?;
        return Ok(res.certificate);
    }
    let mut watchers: Vec<Watcher> = (0..n / 2)
        .map(|j| Watcher { location: 2 * j, zone: g.closed_neighborhood(2 * j) })
        .collect();
    if n % 2 == 1 {
        watchers.push(Watcher { location: n - 1, zone: VertexSet::from_iter(n, [n - 2, n - 1]) });
    }
    let system = checked(&g, watchers, 1, 1)?;
    debug_assert_eq!(system.size(), n.div_ceil(2));
    Ok(system)
}

// ---- paths and cycles, level 2 ------------------------------------------------

/// Label table for the optimal (1,<=2) path system on n >= 11 vertices,
/// n ≡ 5 (mod 6): a five-vertex head followed by six-vertex blocks, each
/// block opening with a hole (a vertex hosting no watcher).
fn block_path_labels(n: usize) -> Vec<(usize, usize)> {
    debug_assert!(n >= 11 && n % 6 == 5);
    let k = (n + 1) / 6;
    let mut labels = vec![(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)];
    for j in 1..k {
        let w = 5 * j;
        labels.push((w - 1, w)); // the hole at the block boundary
        labels.push((w, w + 1));
        labels.push((w, w + 2));
        labels.push((w + 1, w + 3));
        labels.push((w + 2, w + 4));
        labels.push((w + 3, w + 4));
    }
    labels
}

/// Watcher locations matching `block_path_labels`: watchers 5j..=5j+4 sit on
/// the five non-hole vertices of block j.
fn block_path_locations(n: usize) -> Vec<VertexId> {
    let k = (n + 1) / 6;
    let mut locations: Vec<VertexId> = (0..5).collect();
    for j in 1..k {
        locations.extend((0..5).map(|t| 6 * j + t));
    }
    locations
}

fn watchers_from_labels(
    n: usize,
    labels: &[(usize, usize)],
    locations: &[VertexId],
) -> Vec<Watcher> {
    locations
        .iter()
        .enumerate()
        .map(|(w, &loc)| {
            let zone = VertexSet::from_iter(
                n,
                labels
                    .iter()
                    .enumerate()
                    .filter(|(_, &(p, q))| p == w || q == w)
                    .map(|(v, _)| v),
            );
            Watcher { location: loc, zone }
        })
        .collect()
}

/// Optimal (1,<=2)-watching system on the path: n hermits for n <= 10, the
/// block pattern above that, with the tail relabeling rule for n not ≡ 5
/// (mod 6). Size is exactly min(n, ceil(5(n+1)/6)).
pub fn path_12_system(n: usize) -> Result<WatchingSystem, ConstructError> {
    if n < 1 {
        return Err(ConstructError::BadN { n, min: 1 });
    }
    let g = Graph::path(n).expect("n >= 1");
    if n <= 10 {
        return Ok(hermit_system(&g));
    }
    let (labels, locations) = if n % 6 == 5 {
        (block_path_labels(n), block_path_locations(n))
    } else {
        // n = 6k + i: extend the 6k-1 construction by i+1 watched vertices
        let k = n / 6;
        let i = n % 6;
        let base = 6 * k - 1;
        let mut labels = block_path_labels(base);
        let mut locations = block_path_locations(base);
        let w = 5 * k;
        labels[base - 1] = (w - 2, w);
        for j in 0..i {
            labels.push((w - 1 + j, w + 1 + j));
        }
        labels.push((w - 1 + i, w + i));
        locations.extend((0..=i).map(|j| base + j));
        (labels, locations)
    };
    let watchers = watchers_from_labels(n, &labels, &locations);
    let system = checked(&g, watchers, 1, 2)?;
    debug_assert_eq!(system.size(), n.min((5 * (n + 1)).div_ceil(6)));
    Ok(system)
}

/// Solver-derived optimal (1,<=2) cycle systems for the orders where the
/// path-plus-closing construction is invalid, as (location, zone) tables.
/// Re-verified on every construction.
fn small_cycle_12_table(n: usize) -> Vec<(VertexId, Vec<VertexId>)> {
    match n {
        8 => vec![
            (1, vec![0, 1, 2]),
            (0, vec![0, 7]),
            (2, vec![1, 3]),
            (3, vec![2, 4]),
            (4, vec![3, 5]),
            (5, vec![4, 5, 6]),
            (6, vec![6, 7]),
        ],
        9 => vec![
            (0, vec![0]),
            (2, vec![1, 2, 3]),
            (0, vec![1, 8]),
            (3, vec![2, 4]),
            (4, vec![3, 5]),
            (5, vec![4, 6]),
            (6, vec![5, 6, 7]),
            (7, vec![7, 8]),
        ],
        10 => vec![
            (0, vec![0]),
            (2, vec![1, 3]),
            (0, vec![1, 9]),
            (1, vec![2]),
            (4, vec![3, 4, 5]),
            (5, vec![4, 6]),
            (6, vec![5, 7]),
            (7, vec![6, 8]),
            (8, vec![7, 8, 9]),
        ],
        11 => vec![
            (0, vec![0]),
            (2, vec![1, 3]),
            (0, vec![1, 10]),
            (1, vec![2]),
            (4, vec![3, 4, 5]),
            (5, vec![4, 6]),
            (6, vec![5, 7]),
            (7, vec![6, 8]),
            (8, vec![7, 8, 9]),
            (9, vec![9, 10]),
        ],
        _ => unreachable!("table covers 8..=11"),
    }
}

/// (1,<=2)-watching system on the cycle of size ceil(5n/6) wherever such a
/// system exists: hermits up to n = 5, fixed optimal certificates for
/// n = 8..=11, and the path construction closed through one extra vertex for
/// n >= 12. For n = 6 and n = 7 no system of size ceil(5n/6) exists; the
/// hermit system (size n, the actual optimum) is returned.
pub fn cycle_12_system(n: usize) -> Result<WatchingSystem, ConstructError> {
    if n < 3 {
        return Err(ConstructError::BadN { n, min: 3 });
    }
    let g = Graph::cycle(n).expect("n >= 3");
    if n <= 7 {
        return Ok(hermit_system(&g));
    }
    if n <= 11 {
        let watchers = small_cycle_12_table(n)
            .into_iter()
            .map(|(loc, zone)| Watcher { location: loc, zone: VertexSet::from_iter(n, zone) })
            .collect();
        let system = checked(&g, watchers, 1, 2)?;
        debug_assert_eq!(system.size(), (5 * n).div_ceil(6));
        return Ok(system);
    }
    // close the path construction: the extra vertex is adjacent to both path
    // ends and labeled by the two end watchers
    let path_sys = path_12_system(n - 1)?;
    let mut watchers = path_sys.watchers;
    for w in &mut watchers {
        w.zone = VertexSet::from_iter(n, w.zone.iter());
    }
    let first = watcher_at(&watchers, 0).expect("block construction has a watcher at vertex 0");
    let last =
        watcher_at(&watchers, n - 2).expect("block construction has a watcher at the last vertex");
    watchers[first].zone.insert(n - 1);
    watchers[last].zone.insert(n - 1);
    let system = checked(&g, watchers, 1, 2)?;
    debug_assert_eq!(system.size(), (5 * n).div_ceil(6));
    Ok(system)
}
