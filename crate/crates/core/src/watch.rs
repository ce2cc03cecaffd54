//! Watcher and watching-system data model, label computation, the
//! set-identification verifier, the compression rewrite, and checkers for
//! identifying codes, dominating sets, and superimposed families.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::{BitSet, Label, VertexSet};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WatchError {
    #[error("identification level must be at least 1")]
    BadLevel,
    #[error("system is declared for a graph of order {system_n}, got order {graph_n}")]
    OrderMismatch { system_n: usize, graph_n: usize },
    #[error("watcher {watcher} has vertex {vertex} outside the radius-{r} ball of its location")]
    ZoneOutsideBall { watcher: usize, vertex: VertexId, r: usize },
    #[error("set label of the empty vertex set is undefined")]
    EmptySet,
    #[error("family member {index} is empty")]
    EmptyFamilyMember { index: usize },
    #[error("family members {a} and {b} are equal")]
    DuplicateFamilyMember { a: usize, b: usize },
    #[error("compress requires a system that verifies at level 1: {0:?}")]
    NotVerified(Violation),
    #[error("compress requires radius 1, got {0}")]
    BadRadius(usize),
    #[error("compression emptied the zone of watcher {watcher}; the input carries a redundant watcher")]
    ZoneEmptied { watcher: usize },
}

/// A watcher: a location and the vertices it actually watches.
///
/// The zone must lie inside the radius-r ball of the location for the
/// system's radius r; it may be empty only transiently during rewrites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Watcher {
    pub location: VertexId,
    pub zone: VertexSet,
}

/// An indexed collection of watchers. Watcher identity is its list index;
/// labels are bitmasks over those indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WatchingSystem {
    pub watchers: Vec<Watcher>,
    pub r: usize,
    pub graph_n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// A vertex covered by no watcher.
    Uncovered { vertex: VertexId },
    /// A watcher whose zone leaves the ball of its location.
    Zone { watcher: usize, vertex: VertexId },
    /// A watcher watching nothing.
    EmptyZone { watcher: usize },
    /// Two distinct vertex sets with equal labels.
    Confusable { a: Vec<VertexId>, b: Vec<VertexId> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub violation: Option<Violation>,
    pub size: usize,
}

impl VerificationReport {
    fn ok(size: usize) -> Self {
        VerificationReport { valid: true, violation: None, size }
    }

    fn bad(size: usize, violation: Violation) -> Self {
        VerificationReport { valid: false, violation: Some(violation), size }
    }
}

impl WatchingSystem {
    pub fn new(graph_n: usize, r: usize) -> Self {
        WatchingSystem { watchers: Vec::new(), r, graph_n }
    }

    pub fn size(&self) -> usize {
        self.watchers.len()
    }

    /// Indices of watchers whose zone is a single vertex.
    pub fn hermits(&self) -> Vec<usize> {
        (0..self.watchers.len())
            .filter(|&i| self.watchers[i].zone.len() == 1)
            .collect()
    }

    /// Pairs of watchers with identical zones. Duplicates are allowed by the
    /// model but can never both be needed for identification.
    pub fn duplicate_zone_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.watchers.len() {
            for j in i + 1..self.watchers.len() {
                if self.watchers[i].zone == self.watchers[j].zone {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Labels of all vertices: `labels()[v]` is the set of watcher indices
    /// whose zone contains `v`.
    pub fn labels(&self) -> Vec<Label> {
        let k = self.watchers.len();
        let mut labels = vec![Label::new(k); self.graph_n];
        for (i, w) in self.watchers.iter().enumerate() {
            for v in w.zone.iter() {
                labels[v].insert(i);
            }
        }
        labels
    }
}

/// The set of watcher indices covering `v`.
pub fn label_of(w: &WatchingSystem, v: VertexId) -> Label {
    let k = w.watchers.len();
    let mut label = Label::new(k);
    for (i, watcher) in w.watchers.iter().enumerate() {
        if watcher.zone.contains(v) {
            label.insert(i);
        }
    }
    label
}

/// Label of a vertex set: the union of its members' labels.
pub fn set_label(w: &WatchingSystem, set: &VertexSet) -> Result<Label, WatchError> {
    if set.is_empty() {
        return Err(WatchError::EmptySet);
    }
    let labels = w.labels();
    let mut out = Label::new(w.watchers.len());
    for v in set.iter() {
        out.union_with(&labels[v]);
    }
    Ok(out)
}

fn structural_violation(g: &Graph, w: &WatchingSystem) -> Option<Violation> {
    for (i, watcher) in w.watchers.iter().enumerate() {
        if watcher.zone.is_empty() {
            return Some(Violation::EmptyZone { watcher: i });
        }
        let ball = g.ball(watcher.location, w.r);
        if !watcher.zone.is_subset_of(&ball) {
            let vertex = watcher.zone.iter().find(|&v| !ball.contains(v)).unwrap();
            return Some(Violation::Zone { watcher: i, vertex });
        }
    }
    None
}

/// Check that `w` identifies every vertex set of size up to `ell`: all such
/// sets must have nonempty, pairwise distinct labels. Zone containment is
/// checked first. The first violation is reported deterministically (the
/// smallest offending pair, comparing vertex sets as bitmask integers).
pub fn verify(g: &Graph, w: &WatchingSystem, ell: usize) -> Result<VerificationReport, WatchError> {
    if ell < 1 {
        return Err(WatchError::BadLevel);
    }
    if w.graph_n != g.order() {
        return Err(WatchError::OrderMismatch { system_n: w.graph_n, graph_n: g.order() });
    }
    let size = w.size();
    if let Some(v) = structural_violation(g, w) {
        return Ok(VerificationReport::bad(size, v));
    }
    let labels = w.labels();
    for (v, label) in labels.iter().enumerate() {
        if label.is_empty() {
            return Ok(VerificationReport::bad(size, Violation::Uncovered { vertex: v }));
        }
    }
    match smallest_confusable(g.order(), &labels, ell) {
        Some((a, b)) => Ok(VerificationReport::bad(size, Violation::Confusable { a, b })),
        None => Ok(VerificationReport::ok(size)),
    }
}

/// Enumerate all vertex subsets of size 1..=ell, hash their set labels, and
/// return the smallest colliding pair of subsets, if any.
fn smallest_confusable(
    n: usize,
    labels: &[Label],
    ell: usize,
) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    // Map each union to the smallest subset producing it; on a collision the
    // smallest pair survives because the representative is kept minimal.
    let mut seen: HashMap<Label, VertexSet> = HashMap::new();
    let mut best: Option<(VertexSet, VertexSet)> = None;
    let mut consider = |subset: &VertexSet, union: &Label, seen: &mut HashMap<Label, VertexSet>| {
        match seen.get_mut(union) {
            Some(rep) => {
                let (lo, hi) = if &*rep < subset {
                    (rep.clone(), subset.clone())
                } else {
                    let old = rep.clone();
                    *rep = subset.clone();
                    (subset.clone(), old)
                };
                let better = match &best {
                    None => true,
                    Some((a, b)) => (&lo, &hi) < (a, b),
                };
                if better {
                    best = Some((lo, hi));
                }
            }
            None => {
                seen.insert(union.clone(), subset.clone());
            }
        }
    };

    // subsets of size 1..=ell by recursive combination enumeration
    let mut members: Vec<VertexId> = Vec::new();
    fn rec(
        n: usize,
        labels: &[Label],
        ell: usize,
        start: usize,
        members: &mut Vec<VertexId>,
        union: &Label,
        consider: &mut dyn FnMut(&VertexSet, &Label),
    ) {
        if !members.is_empty() {
            let subset = VertexSet::from_iter(n, members.iter().copied());
            consider(&subset, union);
        }
        if members.len() == ell {
            return;
        }
        for v in start..n {
            members.push(v);
            let next = union.union(&labels[v]);
            rec(n, labels, ell, v + 1, members, &next, consider);
            members.pop();
        }
    }
    let k = labels.first().map_or(0, BitSet::capacity);
    rec(n, labels, ell, 0, &mut members, &Label::new(k), &mut |s, u| {
        consider(s, u, &mut seen)
    });
    best.map(|(a, b)| (a.to_vec(), b.to_vec()))
}

/// True iff every nonempty proper subset of any vertex's label is itself the
/// label of some vertex.
pub fn is_compressed(w: &WatchingSystem) -> bool {
    first_compression_violation(&w.labels()).is_none()
}

/// Smallest (vertex, subset) pair violating the compressed property, scanning
/// vertices in ascending order and subsets in ascending bitmask order.
fn first_compression_violation(labels: &[Label]) -> Option<(VertexId, Label)> {
    let realized: std::collections::HashSet<&Label> = labels.iter().collect();
    for (v, label) in labels.iter().enumerate() {
        let bits: Vec<usize> = label.iter().collect();
        let t = bits.len();
        if t <= 1 {
            continue;
        }
        // proper nonempty subsets; compact-mask order equals expanded order
        for mask in 1..((1u64 << t) - 1) {
            let subset = Label::from_iter(
                label.capacity(),
                bits.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &b)| b),
            );
            if !realized.contains(&subset) {
                return Some((v, subset));
            }
        }
    }
    None
}

/// Rewrite a valid radius-1 system into a compressed one of the same size:
/// repeatedly find the smallest (vertex, label subset) not realized anywhere,
/// and shrink the zones of the watchers outside that subset so the vertex's
/// label becomes exactly the subset.
pub fn compress(g: &Graph, w: &WatchingSystem) -> Result<WatchingSystem, WatchError> {
    if w.r != 1 {
        return Err(WatchError::BadRadius(w.r));
    }
    let report = verify(g, w, 1)?;
    if let Some(v) = report.violation {
        return Err(WatchError::NotVerified(v));
    }
    let mut out = w.clone();
    loop {
        let labels = out.labels();
        let Some((v, subset)) = first_compression_violation(&labels) else {
            return Ok(out);
        };
        let mut excess = labels[v].clone();
        excess.difference_with(&subset);
        for i in excess.iter() {
            out.watchers[i].zone.remove(v);
            if out.watchers[i].zone.is_empty() {
                return Err(WatchError::ZoneEmptied { watcher: i });
            }
        }
    }
}

/// The compressed-system label bound: every vertex of a compressed valid
/// system satisfies 2^|L(v)| - 1 <= |B(v, 2)|. Returns the first witness
/// vertex on failure (which would indicate a bug upstream).
pub fn check_compressed_bound(g: &Graph, w: &WatchingSystem) -> Result<(), VertexId> {
    for (v, label) in w.labels().iter().enumerate() {
        let lhs = (1u128 << label.len()) - 1;
        if lhs > g.ball(v, 2).len() as u128 {
            return Err(v);
        }
    }
    Ok(())
}

/// Interpret a vertex subset as a candidate identifying code: the closed
/// neighborhoods of its members must give every vertex a nonempty, distinct
/// label.
pub fn is_identifying_code(g: &Graph, code: &VertexSet) -> VerificationReport {
    let system = code_system(g, code);
    verify(g, &system, 1).expect("level 1 on matching order")
}

/// The watching system induced by an identifying code: one full-neighborhood
/// watcher per codeword, in ascending vertex order.
pub fn code_system(g: &Graph, code: &VertexSet) -> WatchingSystem {
    let watchers = code
        .iter()
        .map(|c| Watcher { location: c, zone: g.closed_neighborhood(c) })
        .collect();
    WatchingSystem { watchers, r: 1, graph_n: g.order() }
}

/// Standard domination check: every vertex is in the set or adjacent to it.
pub fn is_dominating_set(g: &Graph, set: &VertexSet) -> bool {
    (0..g.order()).all(|v| set.contains(v) || !set.is_disjoint_from(&g.closed_neighborhood(v)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Superimposed {
    Yes,
    /// Two distinct index sets whose unions coincide.
    No { i: Vec<usize>, j: Vec<usize> },
}

/// Check that all unions of up to `ell` distinct members are distinct across
/// distinct index sets. Members must be nonempty and pairwise distinct.
pub fn is_superimposed(family: &[BitSet], ell: usize) -> Result<Superimposed, WatchError> {
    if ell < 1 {
        return Err(WatchError::BadLevel);
    }
    for (i, s) in family.iter().enumerate() {
        if s.is_empty() {
            return Err(WatchError::EmptyFamilyMember { index: i });
        }
        for (j, t) in family.iter().enumerate().skip(i + 1) {
            if s == t {
                return Err(WatchError::DuplicateFamilyMember { a: i, b: j });
            }
        }
    }
    let k = family.len();
    let mut seen: HashMap<BitSet, Vec<usize>> = HashMap::new();
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    let mut members: Vec<usize> = Vec::new();
    let cap = family.first().map_or(0, BitSet::capacity);

    fn rec(
        family: &[BitSet],
        k: usize,
        ell: usize,
        start: usize,
        members: &mut Vec<usize>,
        union: &BitSet,
        seen: &mut HashMap<BitSet, Vec<usize>>,
        best: &mut Option<(Vec<usize>, Vec<usize>)>,
    ) {
        if !members.is_empty() {
            match seen.get_mut(union) {
                Some(rep) => {
                    let (lo, hi) = if &*rep < members {
                        (rep.clone(), members.clone())
                    } else {
                        let old = rep.clone();
                        *rep = members.clone();
                        (members.clone(), old)
                    };
                    let better = match best {
                        None => true,
                        Some((a, b)) => (&lo, &hi) < (&*a, &*b),
                    };
                    if better {
                        *best = Some((lo, hi));
                    }
                }
                None => {
                    seen.insert(union.clone(), members.clone());
                }
            }
        }
        if members.len() == ell {
            return;
        }
        for i in start..k {
            members.push(i);
            let next = union.union(&family[i]);
            rec(family, k, ell, i + 1, members, &next, seen, best);
            members.pop();
        }
    }
    rec(family, k, ell, 0, &mut members, &BitSet::new(cap), &mut seen, &mut best);
    Ok(match best {
        None => Superimposed::Yes,
        Some((i, j)) => Superimposed::No { i, j },
    })
}

// ---- certificate JSON format ------------------------------------------------

#[derive(Serialize, Deserialize)]
struct WatcherJson {
    location: usize,
    zone: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct SystemJson {
    graph_n: usize,
    r: usize,
    watchers: Vec<WatcherJson>,
}

impl WatchingSystem {
    pub fn to_json(&self) -> String {
        let doc = SystemJson {
            graph_n: self.graph_n,
            r: self.r,
            watchers: self
                .watchers
                .iter()
                .map(|w| WatcherJson { location: w.location, zone: w.zone.to_vec() })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let doc: SystemJson = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let mut watchers = Vec::with_capacity(doc.watchers.len());
        for (i, w) in doc.watchers.iter().enumerate() {
            if w.location >= doc.graph_n {
                return Err(format!("watcher {i}: location {} out of range", w.location));
            }
            let mut zone = VertexSet::new(doc.graph_n);
            for &v in &w.zone {
                if v >= doc.graph_n {
                    return Err(format!("watcher {i}: zone vertex {v} out of range"));
                }
                zone.insert(v);
            }
            watchers.push(Watcher { location: w.location, zone });
        }
        if doc.r < 1 {
            return Err("radius must be at least 1".into());
        }
        Ok(WatchingSystem { watchers, r: doc.r, graph_n: doc.graph_n })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn system(graph_n: usize, r: usize, watchers: &[(usize, &[usize])]) -> WatchingSystem {
        WatchingSystem {
            graph_n,
            r,
            watchers: watchers
                .iter()
                .map(|(loc, zone)| Watcher {
                    location: *loc,
                    zone: VertexSet::from_iter(graph_n, zone.iter().copied()),
                })
                .collect(),
        }
    }

    /// Trivial hermit system (v, {v}) for every vertex.
    fn hermits(n: usize) -> WatchingSystem {
        WatchingSystem {
            graph_n: n,
            r: 1,
            watchers: (0..n)
                .map(|v| Watcher { location: v, zone: VertexSet::singleton(n, v) })
                .collect(),
        }
    }

    #[test]
    fn labels_and_set_labels() {
        let p3 = Graph::path(3).unwrap();
        let w = system(3, 1, &[(1, &[0, 1]), (1, &[1, 2])]);
        assert_eq!(label_of(&w, 0).to_vec(), vec![0]);
        assert_eq!(label_of(&w, 1).to_vec(), vec![0, 1]);
        assert_eq!(label_of(&w, 2).to_vec(), vec![1]);
        assert!(verify(&p3, &w, 1).unwrap().valid);

        // uncovered vertex has an empty label
        let partial = system(3, 1, &[(1, &[1, 2]), (2, &[2])]);
        assert!(label_of(&partial, 0).is_empty());

        let both = set_label(&w, &VertexSet::from_iter(3, [0, 2])).unwrap();
        assert_eq!(both.to_vec(), vec![0, 1]);
        assert_eq!(
            set_label(&w, &VertexSet::from_iter(3, [0])).unwrap(),
            label_of(&w, 0)
        );
        assert_eq!(set_label(&w, &VertexSet::new(3)), Err(WatchError::EmptySet));
        // monotonicity of the union
        let sub = set_label(&w, &VertexSet::from_iter(3, [0])).unwrap();
        assert!(sub.is_subset_of(&both));
    }

    #[test]
    fn verify_rejects_structural_problems() {
        let p3 = Graph::path(3).unwrap();
        let bad_zone = system(3, 1, &[(0, &[0, 2])]);
        assert_eq!(
            verify(&p3, &bad_zone, 1).unwrap().violation,
            Some(Violation::Zone { watcher: 0, vertex: 2 })
        );
        let empty = system(3, 1, &[(0, &[0, 1]), (2, &[])]);
        assert_eq!(
            verify(&p3, &empty, 1).unwrap().violation,
            Some(Violation::EmptyZone { watcher: 1 })
        );
        assert_eq!(verify(&p3, &hermits(3), 0), Err(WatchError::BadLevel));
        // zones are fine at a larger radius
        let wide = system(3, 2, &[(0, &[0, 2]), (1, &[1]), (2, &[2])]);
        assert!(verify(&p3, &wide, 1).unwrap().valid);
    }

    #[test]
    fn verify_detects_confusable_vertices() {
        let p3 = Graph::path(3).unwrap();
        let w = system(3, 1, &[(1, &[0, 1, 2])]);
        assert_eq!(
            verify(&p3, &w, 1).unwrap().violation,
            Some(Violation::Confusable { a: vec![0], b: vec![1] })
        );
    }

    #[test]
    fn verify_uncovered() {
        let p3 = Graph::path(3).unwrap();
        let w = system(3, 1, &[(1, &[1, 2])]);
        assert_eq!(
            verify(&p3, &w, 1).unwrap().violation,
            Some(Violation::Uncovered { vertex: 0 })
        );
    }

    #[test]
    fn hermit_system_valid_at_any_level() {
        let p4 = Graph::path(4).unwrap();
        for ell in 1..=4 {
            assert!(verify(&p4, &hermits(4), ell).unwrap().valid, "ell={ell}");
        }
    }

    #[test]
    fn level_two_catches_union_collision() {
        // two vertices labeled {0} and {1}, a third labeled {0,1}: fine at
        // level 1, confusable at level 2 ({2} vs {0,1}).
        let p3 = Graph::path(3).unwrap();
        let w = system(3, 1, &[(1, &[0, 2]), (1, &[1, 2])]);
        assert!(verify(&p3, &w, 1).unwrap().valid);
        let rep = verify(&p3, &w, 2).unwrap();
        // {0,1} precedes {2} in bitmask order
        assert_eq!(
            rep.violation,
            Some(Violation::Confusable { a: vec![0, 1], b: vec![2] })
        );
    }

    #[test]
    fn compress_examples() {
        let p2 = Graph::path(2).unwrap();
        // vertex 0 labeled {0,1} but no vertex labeled {0}: compression gives it {0}
        let w = system(2, 1, &[(0, &[0, 1]), (0, &[0])]);
        assert!(verify(&p2, &w, 1).unwrap().valid);
        let c = compress(&p2, &w).unwrap();
        assert_eq!(c.size(), w.size());
        assert!(verify(&p2, &c, 1).unwrap().valid);
        assert!(is_compressed(&c));
        assert_eq!(label_of(&c, 0).to_vec(), vec![1]);
        assert_eq!(label_of(&c, 1).to_vec(), vec![0]);

        // already-compressed systems come back unchanged
        let again = compress(&p2, &c).unwrap();
        assert_eq!(again, c);

        // hermit systems are compressed (all labels singletons)
        let h = hermits(4);
        let p4 = Graph::path(4).unwrap();
        assert_eq!(compress(&p4, &h).unwrap(), h);
    }

    #[test]
    fn compress_rejects_bad_input() {
        let p3 = Graph::path(3).unwrap();
        let invalid = system(3, 1, &[(1, &[0, 1, 2])]);
        assert!(matches!(compress(&p3, &invalid), Err(WatchError::NotVerified(_))));
        let r2 = system(3, 2, &[(0, &[0]), (1, &[1]), (2, &[2])]);
        assert_eq!(compress(&p3, &r2), Err(WatchError::BadRadius(2)));
    }

    #[test]
    fn compress_flags_redundant_watcher() {
        // v=0 has label {0,1,3}; {1} is unrealized, and realizing it strips
        // watcher 3 (a hermit at 0) down to an empty zone.
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (2, 3)]).unwrap();
        let w = system(4, 1, &[(0, &[0, 1]), (0, &[0, 2]), (2, &[2, 3]), (0, &[0])]);
        assert!(verify(&g, &w, 1).unwrap().valid);
        assert_eq!(compress(&g, &w), Err(WatchError::ZoneEmptied { watcher: 3 }));
    }

    #[test]
    fn compressed_bound_holds() {
        let p5 = Graph::path(5).unwrap();
        let w = system(5, 1, &[(0, &[0, 1]), (2, &[1, 2, 3]), (4, &[3, 4])]);
        assert!(verify(&p5, &w, 1).unwrap().valid);
        let c = compress(&p5, &w).unwrap();
        assert_eq!(check_compressed_bound(&p5, &c), Ok(()));

        // single vertex, one hermit: 2^1 - 1 = 1 <= |B(v,2)| = 1
        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(check_compressed_bound(&k1, &hermits(1)), Ok(()));
    }

    #[test]
    fn identifying_code_checks() {
        let p5 = Graph::path(5).unwrap();
        // every-other-vertex code on P5
        let code = VertexSet::from_iter(5, [0, 2, 4]);
        assert!(is_identifying_code(&p5, &code).valid);

        let empty = VertexSet::new(5);
        assert!(!is_identifying_code(&p5, &empty).valid);

        // the 14 leaves of the 15-star form a minimum identifying code
        let star = Graph::star(15).unwrap();
        let leaves = VertexSet::from_iter(15, 1..15);
        let rep = is_identifying_code(&star, &leaves);
        assert!(rep.valid);
        assert_eq!(rep.size, 14);
    }

    #[test]
    fn domination_checks() {
        let star = Graph::star(15).unwrap();
        assert!(is_dominating_set(&star, &VertexSet::singleton(15, 0)));
        assert!(is_dominating_set(&star, &VertexSet::full(15)));
        assert!(!is_dominating_set(&star, &VertexSet::new(15)));
        let p6 = Graph::path(6).unwrap();
        assert!(is_dominating_set(&p6, &VertexSet::from_iter(6, [1, 4])));
        assert!(!is_dominating_set(&p6, &VertexSet::from_iter(6, [0, 5])));
    }

    #[test]
    fn superimposed_families() {
        // singletons always work
        let singles: Vec<BitSet> = (0..5).map(|i| BitSet::singleton(5, i)).collect();
        assert_eq!(is_superimposed(&singles, 3).unwrap(), Superimposed::Yes);

        // {1,2},{1,3},{3,4},{2,4} is not 2-superimposed
        let family: Vec<BitSet> = [[1, 2], [1, 3], [3, 4], [2, 4]]
            .iter()
            .map(|p| BitSet::from_iter(5, p.iter().copied()))
            .collect();
        match is_superimposed(&family, 2).unwrap() {
            Superimposed::No { i, j } => {
                let u = family[i[0]].union(&family[i[1]]);
                let w = family[j[0]].union(&family[j[1]]);
                assert_eq!(u, w);
                assert_ne!(i, j);
            }
            Superimposed::Yes => panic!("expected failure"),
        }

        // nested members fail: {1} ∪ {1,2} = {1,2}
        let nested = vec![BitSet::from_iter(3, [1]), BitSet::from_iter(3, [1, 2])];
        assert!(matches!(
            is_superimposed(&nested, 2).unwrap(),
            Superimposed::No { .. }
        ));

        // errors on empty or duplicate members
        assert_eq!(
            is_superimposed(&[BitSet::new(3)], 2),
            Err(WatchError::EmptyFamilyMember { index: 0 })
        );
        let dup = vec![BitSet::singleton(3, 1), BitSet::singleton(3, 1)];
        assert_eq!(
            is_superimposed(&dup, 2),
            Err(WatchError::DuplicateFamilyMember { a: 0, b: 1 })
        );
    }

    #[test]
    fn hermit_listing() {
        let w = system(4, 1, &[(0, &[0]), (1, &[0, 1]), (3, &[3])]);
        assert_eq!(w.hermits(), vec![0, 2]);
        assert_eq!(hermits(4).hermits(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn duplicate_zone_lint() {
        let w = system(3, 1, &[(0, &[0, 1]), (1, &[0, 1]), (1, &[1, 2])]);
        assert_eq!(w.duplicate_zone_pairs(), vec![(0, 1)]);
    }

    #[test]
    fn json_round_trip() {
        let w = system(5, 1, &[(0, &[0, 1]), (2, &[1, 2, 3]), (4, &[3, 4])]);
        let text = w.to_json();
        let back = WatchingSystem::from_json(&text).unwrap();
        assert_eq!(back, w);
        assert!(WatchingSystem::from_json("{\"graph_n\":2,\"r\":1,\"watchers\":[{\"location\":5,\"zone\":[]}]}").is_err());
    }
}
