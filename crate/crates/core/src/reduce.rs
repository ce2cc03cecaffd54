//! The polynomial reduction from vertex cover to minimum watching system:
//! every edge xy is replaced by a four-vertex structure (x, y, a_xy, b_xy
//! with a_xy adjacent to x, y and the leaf b_xy), and budgets translate as
//! k' = k + m. Certificates convert in both directions.

use serde::Serialize;
use thiserror::Error;

use crate::bits::VertexSet;
use crate::graph::{Graph, VertexId};
use crate::solver::{vertex_cover_number, watching_number, SolveError, SolverBudget};
use crate::watch::{verify, Watcher, WatchingSystem};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReduceError {
    #[error("vertex {v} has degree {degree}; the reduction needs all degrees in {{2, 3}}")]
    BadDegree { v: VertexId, degree: usize },
    #[error("set is not a vertex cover: edge ({u}, {v}) is uncovered")]
    NotACover { u: VertexId, v: VertexId },
    #[error("cover has {size} vertices, over the budget k = {k}")]
    CoverOverBudget { size: usize, k: usize },
    #[error("watching system is invalid on the expanded graph: {0}")]
    InvalidSystem(String),
    #[error("watching system has {size} watchers, over the budget k' = {k_prime}")]
    SystemOverBudget { size: usize, k_prime: usize },
    #[error("solve was inconclusive: {0}")]
    Inconclusive(SolveError),
}

/// One expanded edge: the original endpoints and the two gadget vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GadgetEdge {
    pub x: VertexId,
    pub y: VertexId,
    pub a: VertexId,
    pub b: VertexId,
}

/// A reduction instance: the original graph, the expanded graph, the budgets
/// k and k' = k + m, and the per-edge gadget map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub original: Graph,
    pub expanded: Graph,
    pub budget_k: usize,
    pub budget_k_prime: usize,
    pub gadgets: Vec<GadgetEdge>,
}

/// Expand a graph with all degrees in {2, 3} into the watching-system
/// instance: originals keep their ids, gadget vertices are appended in edge
/// order (a before b), and each original edge is replaced by three gadget
/// edges. The expanded graph has n + 2m vertices and 3m edges.
pub fn vc_to_ws(g: &Graph, k: usize) -> Result<ReductionInstance, ReduceError> {
    let n = g.order();
    for v in 0..n {
        let degree = g.degree(v);
        if degree != 2 && degree != 3 {
            return Err(ReduceError::BadDegree { v, degree });
        }
    }
    let edges = g.edges();
    let m = edges.len();
    let mut gadgets = Vec::with_capacity(m);
    let mut expanded_edges = Vec::with_capacity(3 * m);
    for (e, &(x, y)) in edges.iter().enumerate() {
        let a = n + 2 * e;
        let b = n + 2 * e + 1;
        gadgets.push(GadgetEdge { x, y, a, b });
        expanded_edges.push((x, a));
        expanded_edges.push((y, a));
        expanded_edges.push((a, b));
    }
    let expanded = Graph::from_edge_list(n + 2 * m, &expanded_edges).expect("gadget ids in range");
    Ok(ReductionInstance {
        original: g.clone(),
        expanded,
        budget_k: k,
        budget_k_prime: k + m,
        gadgets,
    })
}

/// Translate a vertex cover of the original graph into a watching system of
/// size |C| + m on the expanded graph: a full-neighborhood watcher at every
/// cover vertex and at every gadget center a_xy.
pub fn cover_to_system(
    inst: &ReductionInstance,
    cover: &VertexSet,
) -> Result<WatchingSystem, ReduceError> {
    for &(u, v) in &inst.original.edges() {
        if !cover.contains(u) && !cover.contains(v) {
            return Err(ReduceError::NotACover { u, v });
        }
    }
    if cover.len() > inst.budget_k {
        return Err(ReduceError::CoverOverBudget { size: cover.len(), k: inst.budget_k });
    }
    let gp = &inst.expanded;
    let mut watchers: Vec<Watcher> = cover
        .iter()
        .map(|x| Watcher { location: x, zone: gp.closed_neighborhood(x) })
        .collect();
    watchers.extend(inst.gadgets.iter().map(|gadget| Watcher {
        location: gadget.a,
        zone: gp.closed_neighborhood(gadget.a),
    }));
    Ok(WatchingSystem { watchers, r: 1, graph_n: gp.order() })
}

/// Translate a watching system of size at most k' on the expanded graph into
/// a vertex cover of size at most k on the original: take the original
/// vertices hosting watchers, then add the smaller endpoint of every still
/// uncovered edge.
pub fn system_to_cover(
    inst: &ReductionInstance,
    system: &WatchingSystem,
) -> Result<VertexSet, ReduceError> {
    let report = verify(&inst.expanded, system, 1)
        .map_err(|e| ReduceError::InvalidSystem(e.to_string()))?;
    if !report.valid {
        return Err(ReduceError::InvalidSystem(format!("{:?}", report.violation)));
    }
    if system.size() > inst.budget_k_prime {
        return Err(ReduceError::SystemOverBudget {
            size: system.size(),
            k_prime: inst.budget_k_prime,
        });
    }
    let n = inst.original.order();
    let mut cover = VertexSet::new(n);
    for w in &system.watchers {
        if w.location < n {
            cover.insert(w.location);
        }
    }
    for &(x, y) in &inst.original.edges() {
        if !cover.contains(x) && !cover.contains(y) {
            cover.insert(x.min(y));
        }
    }
    // the counting argument guarantees the budget: each uncovered edge's
    // gadget holds two watchers, each covered edge's gadget at least one
    debug_assert!(cover.len() <= inst.budget_k);
    for &(u, v) in &inst.original.edges() {
        debug_assert!(cover.contains(u) || cover.contains(v));
    }
    Ok(cover)
}

/// Outcome of solving both sides of the reduction exactly.
#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub vertex_cover: usize,
    pub edge_count: usize,
    pub watching_number: usize,
    /// w(G') = vc(G) + m, checked on the solved optima.
    pub holds: bool,
    pub cover_certificate: VertexSet,
    pub system_certificate: WatchingSystem,
}

/// Solve the original vertex cover and the expanded watching number
/// independently and compare them against the k' = k + m translation.
pub fn equivalence_check(g: &Graph, budget: &SolverBudget) -> Result<EquivalenceReport, ReduceError> {
    let vc = vertex_cover_number(g, budget).map_err(ReduceError::Inconclusive)?;
    let inst = vc_to_ws(g, vc.optimum)?;
    let ws = watching_number(&inst.expanded, 1, 1, budget).map_err(ReduceError::Inconclusive)?;
    let m = inst.gadgets.len();
    Ok(EquivalenceReport {
        vertex_cover: vc.optimum,
        edge_count: m,
        watching_number: ws.optimum,
        holds: ws.optimum == vc.optimum + m,
        cover_certificate: vc.certificate,
        system_certificate: ws.certificate,
    })
}
