//! Exact minimum-size computation for watching systems, identifying codes,
//! dominating sets, and vertex covers on small instances.
//!
//! The watching-system search branches on vertex labels rather than on
//! (location, zone) pairs: a size-k system exists iff the vertices can be
//! given distinct nonempty labels over k watcher indices such that each
//! index class {v : i in label(v)} fits inside some radius-r ball. For
//! ell >= 2 the labels must additionally have distinct unions over all
//! vertex subsets of size up to ell.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::bits::VertexSet;
use crate::graph::{Graph, VertexId};
use crate::watch::{Watcher, WatchingSystem};

/// Largest graph order the bitmask search paths accept.
pub const SOLVER_VERTEX_CAP: usize = 64;

#[derive(Debug, Clone, Copy)]
pub struct SolverBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget { node_limit: 10_000_000, time_limit: Duration::from_secs(60) }
    }
}

impl SolverBudget {
    pub fn new(node_limit: u64, time_limit: Duration) -> Self {
        SolverBudget { node_limit, time_limit }
    }

    /// Generous budget for test harnesses.
    pub fn large() -> Self {
        SolverBudget { node_limit: u64::MAX, time_limit: Duration::from_secs(3600) }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph order {n} exceeds the solver cap of {cap} vertices")]
    TooLarge { n: usize, cap: usize },
    #[error("budget exhausted after {explored} nodes; optimum is in {lower}..={upper}")]
    BudgetExhausted { explored: u64, lower: usize, upper: usize },
    #[error("vertices {u} and {v} are twins: the graph is not identifiable")]
    NotIdentifiable { u: VertexId, v: VertexId },
    #[error("identification level must be at least 1")]
    BadLevel,
}

/// Outcome of an exact solve: the optimum, a certificate that verifies, the
/// number of search nodes explored, and the lower bound the search opened at
/// (every size below the optimum was refuted exhaustively).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult<C> {
    pub optimum: usize,
    pub certificate: C,
    pub explored: u64,
    pub lower_bound: usize,
}

/// ceil(log2(x)) for x >= 1.
pub fn ceil_log2(x: usize) -> usize {
    debug_assert!(x >= 1);
    (usize::BITS - (x - 1).leading_zeros()) as usize
}

struct Stats {
    nodes: u64,
    node_limit: u64,
    deadline: Instant,
}

struct Exhausted;

impl Stats {
    fn new(budget: &SolverBudget) -> Self {
        Stats {
            nodes: 0,
            node_limit: budget.node_limit,
            deadline: Instant::now() + budget.time_limit,
        }
    }

    fn tick(&mut self) -> Result<(), Exhausted> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Exhausted);
        }
        if self.nodes % 4096 == 0 && Instant::now() > self.deadline {
            return Err(Exhausted);
        }
        Ok(())
    }
}

fn mask_of(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

/// Next c-bit mask in ascending numeric order (Gosper's hack).
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

// ---- watching-system search -------------------------------------------------

struct LabelSearch<'a> {
    n: usize,
    k: usize,
    ell: usize,
    order: Vec<VertexId>,
    ball: Vec<u64>,
    labels: Vec<u64>,
    assigned: Vec<VertexId>,
    cand: Vec<u64>,
    used: usize,
    registry: HashSet<u64>,
    stats: &'a mut Stats,
}

struct Undo {
    cand_saved: Vec<(usize, u64)>,
    reg_saved: Vec<u64>,
    prev_used: usize,
}

impl<'a> LabelSearch<'a> {
    fn try_assign(&mut self, v: VertexId, m: u64) -> Option<Undo> {
        let mut undo = Undo {
            cand_saved: Vec::new(),
            reg_saved: Vec::new(),
            prev_used: self.used,
        };
        // every index class must keep a feasible center
        let mut bits = m;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let new_cand = self.cand[i] & self.ball[v];
            if new_cand == 0 {
                self.rollback(undo);
                return None;
            }
            undo.cand_saved.push((i, self.cand[i]));
            self.cand[i] = new_cand;
        }
        // distinctness: the label itself, and at ell >= 2 all pair unions
        if !self.register(m, &mut undo) {
            self.rollback(undo);
            return None;
        }
        if self.ell >= 2 {
            for t in 0..self.assigned.len() {
                let u = m | self.labels[self.assigned[t]];
                if !self.register(u, &mut undo) {
                    self.rollback(undo);
                    return None;
                }
            }
        }
        self.labels[v] = m;
        self.assigned.push(v);
        let top = 64 - m.leading_zeros() as usize;
        self.used = self.used.max(top);
        Some(undo)
    }

    fn register(&mut self, key: u64, undo: &mut Undo) -> bool {
        if self.registry.insert(key) {
            undo.reg_saved.push(key);
            true
        } else {
            false
        }
    }

    fn rollback(&mut self, undo: Undo) {
        for (i, old) in undo.cand_saved.into_iter().rev() {
            self.cand[i] = old;
        }
        for key in undo.reg_saved {
            self.registry.remove(&key);
        }
        self.used = undo.prev_used;
    }

    fn unassign(&mut self, undo: Undo) {
        let v = self.assigned.pop().expect("assignment to undo");
        self.labels[v] = 0;
        self.rollback(undo);
    }

    /// Every vertex not yet assigned must still be coverable by some index.
    fn coverage_ok(&self, t: usize) -> bool {
        self.order[t..].iter().all(|&v| {
            let ball = self.ball[v];
            self.cand.iter().any(|&c| c & ball != 0)
        })
    }

    fn rec(&mut self, t: usize) -> Result<bool, Exhausted> {
        self.stats.tick()?;
        if t == self.n {
            return Ok(self.ell <= 2 || self.leaf_check());
        }
        if !self.coverage_ok(t) {
            return Ok(false);
        }
        let v = self.order[t];
        // labels in ascending popcount, then ascending value; watcher indices
        // are interchangeable, so new indices must be introduced as the next
        // unused ones (first-use order breaks the k! symmetry)
        for popcount in 1..=self.k {
            let max_new = (self.k - self.used).min(popcount);
            for c_new in 0..=max_new {
                let c_old = popcount - c_new;
                if c_old > self.used {
                    continue;
                }
                let new_part = mask_of(c_new) << self.used;
                let mut old_part = mask_of(c_old);
                loop {
                    if c_old > 0 && old_part & !mask_of(self.used) != 0 {
                        break;
                    }
                    let m = old_part | new_part;
                    if let Some(undo) = self.try_assign(v, m) {
                        if self.rec(t + 1)? {
                            return Ok(true);
                        }
                        self.unassign(undo);
                    }
                    if c_old == 0 {
                        break;
                    }
                    let next = next_combination(old_part);
                    if next <= old_part {
                        break;
                    }
                    old_part = next;
                }
            }
        }
        Ok(false)
    }

    /// Full union-distinctness over vertex subsets of size up to ell; the
    /// incremental registry only maintains sizes 1 and 2.
    fn leaf_check(&self) -> bool {
        let mut seen = HashSet::new();
        let mut members = Vec::new();
        self.leaf_rec(0, 0, &mut members, &mut seen)
    }

    fn leaf_rec(
        &self,
        start: usize,
        union: u64,
        members: &mut Vec<usize>,
        seen: &mut HashSet<u64>,
    ) -> bool {
        if !members.is_empty() && !seen.insert(union) {
            return false;
        }
        if members.len() == self.ell {
            return true;
        }
        for v in start..self.n {
            members.push(v);
            if !self.leaf_rec(v + 1, union | self.labels[v], members, seen) {
                return false;
            }
            members.pop();
        }
        true
    }
}

/// Search for the smallest k admitting a valid labeling of a connected (or,
/// at ell >= 2, arbitrary) graph. Returns (k, labels, starting lower bound).
fn solve_labels(
    g: &Graph,
    r: usize,
    ell: usize,
    stats: &mut Stats,
) -> Result<(usize, Vec<u64>, usize), Exhausted> {
    let n = g.order();
    if n == 0 {
        return Ok((0, Vec::new(), 0));
    }
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let ball: Vec<u64> = (0..n).map(|v| g.ball(v, r).as_u64()).collect();
    let lower = ceil_log2(n + 1).max(1);
    for k in lower..=n {
        let mut search = LabelSearch {
            n,
            k,
            ell,
            order: order.clone(),
            ball: ball.clone(),
            labels: vec![0; n],
            assigned: Vec::with_capacity(n),
            cand: vec![mask_of(n); k],
            used: 0,
            registry: HashSet::new(),
            stats,
        };
        if search.rec(0)? {
            let labels = search.labels.clone();
            return Ok((k, labels, lower));
        }
    }
    unreachable!("the hermit labeling makes k = n feasible at any level");
}

fn system_from_labels(g: &Graph, r: usize, k: usize, labels: &[u64]) -> WatchingSystem {
    let n = g.order();
    let balls: Vec<VertexSet> = (0..n).map(|v| g.ball(v, r)).collect();
    let mut watchers = Vec::with_capacity(k);
    for i in 0..k {
        let zone = VertexSet::from_iter(n, (0..n).filter(|&v| labels[v] >> i & 1 == 1));
        let location = (0..n)
            .find(|&u| zone.is_subset_of(&balls[u]))
            .expect("index class fits a ball by construction");
        watchers.push(Watcher { location, zone });
    }
    WatchingSystem { watchers, r, graph_n: n }
}

/// Minimum size of an (r, <= ell)-watching system, with certificate.
///
/// At ell = 1 a disconnected graph is solved per component and the optima
/// summed (labels never span components since zones live inside balls); at
/// ell >= 2 the graph is searched whole.
pub fn watching_number(
    g: &Graph,
    r: usize,
    ell: usize,
    budget: &SolverBudget,
) -> Result<SolveResult<WatchingSystem>, SolveError> {
    if ell < 1 {
        return Err(SolveError::BadLevel);
    }
    let n = g.order();
    if n > SOLVER_VERTEX_CAP {
        return Err(SolveError::TooLarge { n, cap: SOLVER_VERTEX_CAP });
    }
    let mut stats = Stats::new(budget);
    let run = |stats: &mut Stats| -> Result<SolveResult<WatchingSystem>, Exhausted> {
        let components = g.components();
        if ell >= 2 || components.len() <= 1 {
            let (k, labels, lower) = solve_labels(g, r, ell, stats)?;
            return Ok(SolveResult {
                optimum: k,
                certificate: system_from_labels(g, r, k, &labels),
                explored: stats.nodes,
                lower_bound: lower,
            });
        }
        // per-component solve; merge certificates with disjoint index blocks
        let mut total = 0;
        let mut lower_sum = 0;
        let mut merged: Vec<(Vec<VertexId>, WatchingSystem)> = Vec::new();
        for comp in &components {
            let set = VertexSet::from_iter(n, comp.iter().copied());
            let (sub, map) = g.induced(&set);
            let (k, labels, lower) = solve_labels(&sub, r, ell, stats)?;
            total += k;
            lower_sum += lower;
            merged.push((map, system_from_labels(&sub, r, k, &labels)));
        }
        let mut watchers = Vec::with_capacity(total);
        for (map, sub_sys) in &merged {
            for w in &sub_sys.watchers {
                watchers.push(Watcher {
                    location: map[w.location],
                    zone: VertexSet::from_iter(n, w.zone.iter().map(|v| map[v])),
                });
            }
        }
        Ok(SolveResult {
            optimum: total,
            certificate: WatchingSystem { watchers, r, graph_n: n },
            explored: stats.nodes,
            lower_bound: lower_sum,
        })
    };
    match run(&mut stats) {
        Ok(result) => {
            debug_assert!(result.optimum >= ceil_log2(n + 1) || n == 0);
            debug_assert!(crate::watch::verify(g, &result.certificate, ell)
                .expect("level checked")
                .valid);
            Ok(result)
        }
        Err(Exhausted) => Err(SolveError::BudgetExhausted {
            explored: stats.nodes,
            lower: ceil_log2(n + 1).max(1),
            upper: n,
        }),
    }
}

// ---- subset-enumeration solvers ----------------------------------------------

/// Enumerate all s-element subsets of [0, n) as masks, ascending. Calls
/// `check` on each; returns the first accepted mask.
fn first_subset(
    n: usize,
    s: usize,
    stats: &mut Stats,
    mut check: impl FnMut(u64) -> bool,
) -> Result<Option<u64>, Exhausted> {
    if s > n {
        return Ok(None);
    }
    if s == 0 {
        stats.tick()?;
        return Ok(if check(0) { Some(0) } else { None });
    }
    let mut mask = mask_of(s);
    loop {
        stats.tick()?;
        if check(mask) {
            return Ok(Some(mask));
        }
        let next = next_combination(mask);
        if next & !mask_of(n) != 0 || next <= mask {
            return Ok(None);
        }
        mask = next;
    }
}

fn check_cap(g: &Graph) -> Result<usize, SolveError> {
    let n = g.order();
    if n > SOLVER_VERTEX_CAP {
        return Err(SolveError::TooLarge { n, cap: SOLVER_VERTEX_CAP });
    }
    Ok(n)
}

/// Minimum identifying code by subset enumeration in increasing size, or
/// `NotIdentifiable` when the graph has twins.
pub fn identifying_number(
    g: &Graph,
    budget: &SolverBudget,
) -> Result<SolveResult<VertexSet>, SolveError> {
    let n = check_cap(g)?;
    if let Some((u, v)) = g.twins() {
        return Err(SolveError::NotIdentifiable { u, v });
    }
    if n == 0 {
        return Ok(SolveResult {
            optimum: 0,
            certificate: VertexSet::new(0),
            explored: 0,
            lower_bound: 0,
        });
    }
    let hoods: Vec<u64> = (0..n).map(|v| g.closed_neighborhood(v).as_u64()).collect();
    let mut stats = Stats::new(budget);
    let lower = ceil_log2(n + 1);
    let mut traces: Vec<u64> = vec![0; n];
    for s in lower..=n {
        let found = first_subset(n, s, &mut stats, |code| {
            for v in 0..n {
                traces[v] = hoods[v] & code;
                if traces[v] == 0 {
                    return false;
                }
            }
            traces.sort_unstable();
            traces.windows(2).all(|w| w[0] != w[1])
        });
        match found {
            Ok(Some(code)) => {
                return Ok(SolveResult {
                    optimum: s,
                    certificate: VertexSet::from_u64(n, code),
                    explored: stats.nodes,
                    lower_bound: lower,
                })
            }
            Ok(None) => continue,
            Err(Exhausted) => {
                return Err(SolveError::BudgetExhausted {
                    explored: stats.nodes,
                    lower: s,
                    upper: n,
                })
            }
        }
    }
    unreachable!("a twin-free graph is identified by the full vertex set");
}

/// Minimum dominating set by subset enumeration in increasing size.
pub fn domination_number(
    g: &Graph,
    budget: &SolverBudget,
) -> Result<SolveResult<VertexSet>, SolveError> {
    let n = check_cap(g)?;
    if n == 0 {
        return Ok(SolveResult {
            optimum: 0,
            certificate: VertexSet::new(0),
            explored: 0,
            lower_bound: 0,
        });
    }
    let hoods: Vec<u64> = (0..n).map(|v| g.closed_neighborhood(v).as_u64()).collect();
    let full = mask_of(n);
    let mut stats = Stats::new(budget);
    let lower = n.div_ceil(g.max_degree() + 1);
    for s in lower..=n {
        let found = first_subset(n, s, &mut stats, |set| {
            let mut covered = 0u64;
            let mut bits = set;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                covered |= hoods[v];
            }
            covered == full
        });
        match found {
            Ok(Some(set)) => {
                return Ok(SolveResult {
                    optimum: s,
                    certificate: VertexSet::from_u64(n, set),
                    explored: stats.nodes,
                    lower_bound: lower,
                })
            }
            Ok(None) => continue,
            Err(Exhausted) => {
                return Err(SolveError::BudgetExhausted {
                    explored: stats.nodes,
                    lower: s,
                    upper: n,
                })
            }
        }
    }
    unreachable!("the full vertex set dominates");
}

/// Minimum vertex cover: degree-1 reduction first (removing a leaf and its
/// neighbor costs exactly one cover vertex), then subset enumeration on the
/// remainder.
pub fn vertex_cover_number(
    g: &Graph,
    budget: &SolverBudget,
) -> Result<SolveResult<VertexSet>, SolveError> {
    let n = check_cap(g)?;
    let mut alive = mask_of(n);
    let mut edges: Vec<(usize, usize)> = g.edges();
    let mut forced: Vec<VertexId> = Vec::new();
    loop {
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let leaf = (0..n).find(|&v| alive >> v & 1 == 1 && degree[v] == 1);
        let Some(x) = leaf else { break };
        let &(u, v) = edges.iter().find(|&&(u, v)| u == x || v == x).unwrap();
        let y = if u == x { v } else { u };
        forced.push(y);
        alive &= !(1 << x);
        alive &= !(1 << y);
        edges.retain(|&(a, b)| a != x && a != y && b != x && b != y);
    }
    let mut stats = Stats::new(budget);
    // enumerate over vertices still carrying edges
    let mut active: Vec<VertexId> = Vec::new();
    for v in 0..n {
        if alive >> v & 1 == 1 && edges.iter().any(|&(a, b)| a == v || b == v) {
            active.push(v);
        }
    }
    let mut index = vec![usize::MAX; n];
    for (i, &v) in active.iter().enumerate() {
        index[v] = i;
    }
    let lower = forced.len();
    for s in 0..=active.len() {
        let found = first_subset(active.len(), s, &mut stats, |subset| {
            edges
                .iter()
                .all(|&(a, b)| subset >> index[a] & 1 == 1 || subset >> index[b] & 1 == 1)
        });
        match found {
            Ok(Some(subset)) => {
                let mut cover = VertexSet::new(n);
                for &v in &forced {
                    cover.insert(v);
                }
                for (i, &v) in active.iter().enumerate() {
                    if subset >> i & 1 == 1 {
                        cover.insert(v);
                    }
                }
                return Ok(SolveResult {
                    optimum: forced.len() + s,
                    certificate: cover,
                    explored: stats.nodes,
                    lower_bound: lower,
                });
            }
            Ok(None) => continue,
            Err(Exhausted) => {
                return Err(SolveError::BudgetExhausted {
                    explored: stats.nodes,
                    lower: forced.len() + s,
                    upper: n,
                })
            }
        }
    }
    unreachable!("the active vertex set covers all remaining edges");
}

// ---- bound records -----------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct UpperBound {
    pub rule: String,
    pub value: usize,
}

/// The bound sandwich around w(G): the binary lower bound, the domination
/// sandwich, the 2n/3 guarantee, and the identifying-code upper bound where
/// one exists.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub max_degree: usize,
    pub connected: bool,
    pub log_lower: usize,
    pub gamma: Option<usize>,
    /// None: not computed within budget. Some(None): not identifiable.
    pub identifying: Option<Option<usize>>,
    pub lower: usize,
    pub uppers: Vec<UpperBound>,
}

pub fn bounds(g: &Graph, budget: &SolverBudget) -> BoundsReport {
    let n = g.order();
    let log_lower = if n == 0 { 0 } else { ceil_log2(n + 1) };
    let gamma = domination_number(g, budget).ok().map(|r| r.optimum);
    let identifying = match identifying_number(g, budget) {
        Ok(r) => Some(Some(r.optimum)),
        Err(SolveError::NotIdentifiable { .. }) => Some(None),
        Err(_) => None,
    };
    let mut uppers = Vec::new();
    if let Some(Some(i)) = identifying {
        uppers.push(UpperBound { rule: "identifying-code".into(), value: i });
    }
    if let Some(gamma) = gamma {
        uppers.push(UpperBound {
            rule: "domination-times-log".into(),
            value: gamma * ceil_log2(g.max_degree() + 2),
        });
    }
    let connected = g.is_connected();
    if connected && !matches!(n, 1 | 2 | 4) && n > 0 {
        uppers.push(UpperBound { rule: "two-thirds".into(), value: 2 * n / 3 });
    }
    uppers.push(UpperBound { rule: "hermits".into(), value: n });
    BoundsReport {
        n,
        max_degree: g.max_degree(),
        connected,
        log_lower,
        gamma,
        identifying,
        lower: log_lower.max(gamma.unwrap_or(0)),
        uppers,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::watch::verify;

    fn solve(g: &Graph, r: usize, ell: usize) -> SolveResult<WatchingSystem> {
        watching_number(g, r, ell, &SolverBudget::large()).unwrap()
    }

    /// Fig-style octahedron: 6-cycle plus the two triangles on even and odd
    /// vertices; every vertex is adjacent to all but its antipode.
    fn g1() -> Graph {
        Graph::from_edge_list(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (2, 4), (4, 0), (1, 3), (3, 5), (5, 1)],
        )
        .unwrap()
    }

    #[test]
    fn paths_level_one() {
        // w(P_n) = ceil((n+1)/2)
        for n in 1..=8 {
            let g = Graph::path(n).unwrap();
            let res = solve(&g, 1, 1);
            assert_eq!(res.optimum, (n + 1).div_ceil(2), "P_{n}");
            assert!(verify(&g, &res.certificate, 1).unwrap().valid);
        }
    }

    #[test]
    fn small_graph_values() {
        assert_eq!(solve(&g1(), 1, 1).optimum, 3);
        assert_eq!(solve(&Graph::star(15).unwrap(), 1, 1).optimum, 4);
        assert_eq!(solve(&Graph::cycle(6).unwrap(), 1, 2).optimum, 6);
        assert_eq!(solve(&Graph::path(4).unwrap(), 1, 2).optimum, 4);
    }

    #[test]
    fn radius_two_shrinks_systems() {
        // with radius 2 every index class fits the center's ball on P_5
        let g = Graph::path(5).unwrap();
        let res = solve(&g, 2, 1);
        assert_eq!(res.optimum, 3);
        assert!(verify(&g, &res.certificate, 1).unwrap().valid);
    }

    #[test]
    fn component_additivity() {
        let g = Graph::from_edge_list(7, &[(0, 1), (1, 2), (3, 4), (4, 5), (5, 6)]).unwrap();
        let res = solve(&g, 1, 1);
        let p3 = solve(&Graph::path(3).unwrap(), 1, 1).optimum;
        let p4 = solve(&Graph::path(4).unwrap(), 1, 1).optimum;
        assert_eq!(res.optimum, p3 + p4);
        assert!(verify(&g, &res.certificate, 1).unwrap().valid);
    }

    #[test]
    fn identifying_numbers() {
        assert_eq!(
            identifying_number(&g1(), &SolverBudget::large()).unwrap().optimum,
            5
        );
        assert_eq!(
            identifying_number(&Graph::star(15).unwrap(), &SolverBudget::large())
                .unwrap()
                .optimum,
            14
        );
        assert_eq!(
            identifying_number(&Graph::cycle(3).unwrap(), &SolverBudget::large()),
            Err(SolveError::NotIdentifiable { u: 0, v: 1 })
        );
    }

    #[test]
    fn domination_numbers() {
        assert_eq!(
            domination_number(&Graph::star(15).unwrap(), &SolverBudget::large())
                .unwrap()
                .optimum,
            1
        );
        // brute-force cross-check on P_6
        let p6 = Graph::path(6).unwrap();
        let res = domination_number(&p6, &SolverBudget::large()).unwrap();
        let brute = (0u64..64)
            .filter(|&mask| {
                let set = VertexSet::from_u64(6, mask);
                crate::watch::is_dominating_set(&p6, &set)
            })
            .map(u64::count_ones)
            .min()
            .unwrap();
        assert_eq!(res.optimum as u32, brute);
        assert_eq!(res.optimum, 2);
        // edgeless graph needs every vertex
        let edgeless = Graph::from_edge_list(5, &[]).unwrap();
        assert_eq!(
            domination_number(&edgeless, &SolverBudget::large()).unwrap().optimum,
            5
        );
    }

    #[test]
    fn vertex_cover_numbers() {
        let large = SolverBudget::large();
        assert_eq!(vertex_cover_number(&Graph::cycle(3).unwrap(), &large).unwrap().optimum, 2);
        assert_eq!(vertex_cover_number(&Graph::path(2).unwrap(), &large).unwrap().optimum, 1);
        // C_5 cross-checked by brute force over all subsets
        let c5 = Graph::cycle(5).unwrap();
        let res = vertex_cover_number(&c5, &large).unwrap();
        let brute = (0u64..32)
            .filter(|&mask| c5.edges().iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1))
            .map(u64::count_ones)
            .min()
            .unwrap();
        assert_eq!(res.optimum as u32, brute);
        assert_eq!(res.optimum, 3);
        // the cover certificate covers every edge
        for (u, v) in c5.edges() {
            assert!(res.certificate.contains(u) || res.certificate.contains(v));
        }
    }

    #[test]
    fn bounds_report() {
        let star = Graph::star(15).unwrap();
        let b = bounds(&star, &SolverBudget::large());
        assert_eq!(b.log_lower, 4);
        assert_eq!(b.gamma, Some(1));
        assert_eq!(b.identifying, Some(Some(14)));
        assert!(b
            .uppers
            .iter()
            .any(|u| u.rule == "domination-times-log" && u.value == 4));
        // n = 15 is not in {1, 2, 4}: the two-thirds bound applies
        assert!(b.uppers.iter().any(|u| u.rule == "two-thirds" && u.value == 10));

        let b6 = bounds(&Graph::path(6).unwrap(), &SolverBudget::large());
        assert_eq!(b6.log_lower, 3);

        // no two-thirds entry for n = 4
        let b4 = bounds(&Graph::path(4).unwrap(), &SolverBudget::large());
        assert!(b4.uppers.iter().all(|u| u.rule != "two-thirds"));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = Graph::path(8).unwrap();
        let tiny = SolverBudget::new(5, Duration::from_secs(60));
        match watching_number(&g, 1, 1, &tiny) {
            Err(SolveError::BudgetExhausted { lower, upper, .. }) => {
                assert!(lower <= upper);
            }
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::path(65).unwrap();
        assert_eq!(
            watching_number(&g, 1, 1, &SolverBudget::default()),
            Err(SolveError::TooLarge { n: 65, cap: 64 })
        );
    }
}
