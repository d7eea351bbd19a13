//! The equality case `gamma_r2(G) = 2 * gamma_r(G)`: testing it, extracting
//! and verifying the structural decomposition every minimum weak Roman
//! assignment of an extremal graph induces, recognizing the characterized
//! {K4, K4-e}-free and triangle-free families, and generating those families.

use thiserror::Error;

use crate::domination::{
    validate_weak_roman, AssignmentError, SolveError, Solver, WeakRomanAssignment,
};
use crate::graph::{contains_induced, Graph, GraphError, Pattern, VertexSet};

/// Result of testing a graph for the equality `gamma_r2 = 2 * gamma_r`.
///
/// The empty graph satisfies the equality as `0 = 2*0`; it is reported
/// extremal with the `vacuous` flag set so callers can exclude it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalCheck {
    pub gamma_r: usize,
    pub gamma_r2: usize,
    pub extremal: bool,
    pub vacuous: bool,
}

/// Computes both parameters exactly and reports whether the equality holds.
pub fn is_extremal(g: &Graph) -> Result<ExtremalCheck, SolveError> {
    is_extremal_with(g, &Solver::default())
}

pub fn is_extremal_with(g: &Graph, solver: &Solver) -> Result<ExtremalCheck, SolveError> {
    let gamma_r = solver.weak_roman_value(g)?;
    let gamma_r2 = solver.rainbow_value(g)?;
    Ok(ExtremalCheck {
        gamma_r,
        gamma_r2,
        extremal: gamma_r2 == 2 * gamma_r,
        vacuous: g.order() == 0,
    })
}

/// The vertex partition attached to a minimum weak Roman assignment of an
/// extremal graph: the ordered positive vertices `v_1..v_k`, the sets `P_i`
/// of vertices whose only positive neighbor is `v_i`, and the leftover sets
/// `Q_i` keyed by the smallest defending index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalDecomposition {
    pub v_list: Vec<usize>,
    pub p_sets: Vec<VertexSet>,
    pub q_sets: Vec<VertexSet>,
}

impl ExtremalDecomposition {
    pub fn k(&self) -> usize {
        self.v_list.len()
    }
}

/// A structural consequence of the extremal equality failed to hold; given a
/// verified-minimum assignment on a verified-extremal graph this indicates an
/// implementation bug, not bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TheoremViolation {
    #[error("part P_{index} is empty")]
    EmptyPart { index: usize },
    #[error("part P_{index} is not complete: {u} and {v} are non-adjacent")]
    PartNotComplete { index: usize, u: usize, v: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtractError {
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Assignment(#[from] AssignmentError),
    #[error("assignment is not weak Roman dominating (witness vertex {witness})")]
    AssignmentInvalid { witness: usize },
    #[error("assignment weight {weight} is not the optimum {optimum}")]
    NotMinimum { weight: usize, optimum: usize },
    #[error("graph is not extremal: gamma_r={gamma_r}, gamma_r2={gamma_r2}")]
    NotExtremal { gamma_r: usize, gamma_r2: usize },
    #[error("assignment has value 2 at vertex {vertex}")]
    HasValueTwo { vertex: usize },
    #[error(transparent)]
    Theorem(TheoremViolation),
}

/// Builds the decomposition induced by a minimum weak Roman assignment of an
/// extremal graph.
///
/// Every remaining vertex `u` is placed in `Q_i` for the smallest index `i`
/// such that `v_i` neighbors `u` and the unit transfer from `v_i` to `u`
/// leaves the positive vertices dominating, so the output is a deterministic
/// function of `(g, gfun)`.
pub fn extract_decomposition(
    g: &Graph,
    gfun: &WeakRomanAssignment,
) -> Result<ExtremalDecomposition, ExtractError> {
    extract_decomposition_with(g, gfun, &Solver::default())
}

pub fn extract_decomposition_with(
    g: &Graph,
    gfun: &WeakRomanAssignment,
    solver: &Solver,
) -> Result<ExtremalDecomposition, ExtractError> {
    match validate_weak_roman(g, gfun)? {
        crate::domination::Verdict::Valid => {}
        crate::domination::Verdict::Invalid { witness } => {
            return Err(ExtractError::AssignmentInvalid { witness });
        }
    }
    let gamma_r = solver.weak_roman_value(g)?;
    if gfun.weight() != gamma_r {
        return Err(ExtractError::NotMinimum {
            weight: gfun.weight(),
            optimum: gamma_r,
        });
    }
    let gamma_r2 = solver.rainbow_value(g)?;
    if gamma_r2 != 2 * gamma_r {
        return Err(ExtractError::NotExtremal { gamma_r, gamma_r2 });
    }
    if let Some(vertex) = g.vertices().find(|&v| gfun.value(v) == 2) {
        return Err(ExtractError::HasValueTwo { vertex });
    }

    let v_list = gfun.positive_set().to_vec();
    let k = v_list.len();
    let positive = gfun.positive_set().bits();
    let mut p_sets = vec![VertexSet::EMPTY; k];
    let mut q_sets = vec![VertexSet::EMPTY; k];
    let mut leftovers = Vec::new();
    for u in g.vertices() {
        if positive >> u & 1 == 1 {
            continue;
        }
        let m = g.neighbors(u).bits() & positive;
        if m.count_ones() == 1 {
            let v = m.trailing_zeros() as usize;
            let i = v_list.binary_search(&v).expect("positive vertex is listed");
            p_sets[i].insert(u);
        } else {
            leftovers.push(u);
        }
    }
    for (i, p) in p_sets.iter().enumerate() {
        if p.is_empty() {
            return Err(ExtractError::Theorem(TheoremViolation::EmptyPart {
                index: i + 1,
            }));
        }
        if let Some((u, v)) = incomplete_pair(g, *p) {
            return Err(ExtractError::Theorem(TheoremViolation::PartNotComplete {
                index: i + 1,
                u,
                v,
            }));
        }
    }
    for u in leftovers {
        let i = (0..k)
            .find(|&i| {
                let v = v_list[i];
                g.has_edge(u, v) && {
                    let moved = gfun.apply_move(v, u).expect("v positive, u zero");
                    crate::domination::is_dominating_set(g, moved.positive_set())
                        .expect("sets in range")
                }
            })
            .unwrap_or_else(|| unreachable!("validated assignment must defend vertex {u}"));
        q_sets[i].insert(u);
    }
    Ok(ExtremalDecomposition {
        v_list,
        p_sets,
        q_sets,
    })
}

fn incomplete_pair(g: &Graph, s: VertexSet) -> Option<(usize, usize)> {
    let members = s.to_vec();
    for (bi, &b) in members.iter().enumerate() {
        for &a in &members[..bi] {
            if !g.has_edge(a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// One failed clause of the decomposition definition, naming the offending
/// vertices. Indices are 1-based to match the `v_1..v_k` numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionViolation {
    ShapeMismatch {
        k: usize,
        p_count: usize,
        q_count: usize,
    },
    VertexOutOfRange {
        vertex: usize,
    },
    NotPartition {
        vertex: usize,
        times_covered: usize,
    },
    EmptyPart {
        index: usize,
    },
    PartNotComplete {
        index: usize,
        u: usize,
        v: usize,
    },
    /// A vertex of P_i whose positive neighborhood is not exactly {v_i}.
    PartMembershipWrong {
        index: usize,
        vertex: usize,
    },
    /// A vertex satisfying the P_i membership condition but placed elsewhere.
    PartMembershipMissing {
        index: usize,
        vertex: usize,
    },
    QNotAdjacent {
        index: usize,
        member: usize,
        target: usize,
    },
}

/// Checks every decomposition invariant against `g`; an empty list means the
/// decomposition is valid.
pub fn verify_decomposition(g: &Graph, d: &ExtremalDecomposition) -> Vec<DecompositionViolation> {
    let mut out = Vec::new();
    let k = d.v_list.len();
    if d.p_sets.len() != k || d.q_sets.len() != k {
        out.push(DecompositionViolation::ShapeMismatch {
            k,
            p_count: d.p_sets.len(),
            q_count: d.q_sets.len(),
        });
        return out;
    }

    let mut covered = vec![0usize; g.order()];
    {
        let mut record = |vertex: usize, out: &mut Vec<DecompositionViolation>| {
            if vertex >= g.order() {
                out.push(DecompositionViolation::VertexOutOfRange { vertex });
            } else {
                covered[vertex] += 1;
            }
        };
        for &v in &d.v_list {
            record(v, &mut out);
        }
        for s in d.p_sets.iter().chain(d.q_sets.iter()) {
            for v in s.iter() {
                record(v, &mut out);
            }
        }
    }
    for (vertex, &times) in covered.iter().enumerate() {
        if times != 1 {
            out.push(DecompositionViolation::NotPartition {
                vertex,
                times_covered: times,
            });
        }
    }
    if !out.is_empty() {
        return out;
    }

    let v1: VertexSet = d.v_list.iter().copied().collect();
    for i in 0..k {
        let idx = i + 1;
        let vi = d.v_list[i];
        let p = d.p_sets[i];
        if p.is_empty() {
            out.push(DecompositionViolation::EmptyPart { index: idx });
        }
        if let Some((u, v)) = incomplete_pair(g, p) {
            out.push(DecompositionViolation::PartNotComplete { index: idx, u, v });
        }
        for u in p.iter() {
            let m = g.neighbors(u).intersection(v1);
            if m != VertexSet::singleton(vi) {
                out.push(DecompositionViolation::PartMembershipWrong {
                    index: idx,
                    vertex: u,
                });
            }
        }
        for u in d.q_sets[i].iter() {
            let m = g.neighbors(u).intersection(v1);
            if m == VertexSet::singleton(vi) {
                out.push(DecompositionViolation::PartMembershipMissing {
                    index: idx,
                    vertex: u,
                });
            }
            for target in p.iter().chain(std::iter::once(vi)) {
                if !g.has_edge(u, target) {
                    out.push(DecompositionViolation::QNotAdjacent {
                        index: idx,
                        member: u,
                        target,
                    });
                }
            }
        }
    }
    out
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognizeError {
    #[error("recognizer requires a connected graph")]
    Disconnected,
    #[error("graph contains an induced {} at {witness}", .pattern.name())]
    Forbidden { pattern: Pattern, witness: VertexSet },
}

/// Structural classification of a connected {K4, K4-e}-free graph against
/// the three characterized extremal families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtremalClass {
    K2,
    /// Two disjoint triangles joined by a matching of exactly two edges;
    /// matching pairs are (triangle-1 vertex, triangle-2 vertex).
    TwoTrianglesTwoMatching {
        triangles: [[usize; 3]; 2],
        matching: [(usize, usize); 2],
    },
    /// `k` vertex-disjoint spanning triangles where every edge outside the
    /// triangles joins two hub vertices. `added_edges` holds 1-based hub
    /// index pairs `(a, b)` with `a < b`, i.e. the edge `hubs[a-1]-hubs[b-1]`.
    TriangleSystem {
        hubs: Vec<usize>,
        privates: Vec<(usize, usize)>,
        added_edges: Vec<(usize, usize)>,
    },
    NotOfCharacterizedForm,
}

impl ExtremalClass {
    pub fn is_characterized(&self) -> bool {
        !matches!(self, ExtremalClass::NotOfCharacterizedForm)
    }

    /// Number of triangles for the triangle-based tags.
    pub fn k(&self) -> Option<usize> {
        match self {
            ExtremalClass::K2 => None,
            ExtremalClass::TwoTrianglesTwoMatching { .. } => Some(2),
            ExtremalClass::TriangleSystem { hubs, .. } => Some(hubs.len()),
            ExtremalClass::NotOfCharacterizedForm => None,
        }
    }

    /// Rebuilds the graph the classification describes, in the original
    /// labeling. Returns None for `NotOfCharacterizedForm`.
    pub fn rebuild(&self) -> Option<Graph> {
        match self {
            ExtremalClass::K2 => Some(Graph::complete(2).unwrap()),
            ExtremalClass::TwoTrianglesTwoMatching { triangles, matching } => {
                let mut edges = Vec::new();
                for t in triangles {
                    edges.extend([(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]);
                }
                edges.extend(matching.iter().copied());
                Some(Graph::from_edges(6, edges).unwrap())
            }
            ExtremalClass::TriangleSystem {
                hubs,
                privates,
                added_edges,
            } => {
                let k = hubs.len();
                let mut edges = Vec::new();
                for i in 0..k {
                    let (w, u) = privates[i];
                    edges.extend([(hubs[i], w), (hubs[i], u), (w, u)]);
                }
                for &(a, b) in added_edges {
                    edges.push((hubs[a - 1], hubs[b - 1]));
                }
                Some(Graph::from_edges(3 * k, edges).unwrap())
            }
            ExtremalClass::NotOfCharacterizedForm => None,
        }
    }
}

/// Classifies a connected {K4, K4-e}-free graph purely structurally, with no
/// solver calls. A characterized tag is equivalent to the graph being
/// extremal.
pub fn recognize_c2(g: &Graph) -> Result<ExtremalClass, RecognizeError> {
    if !g.is_connected() {
        return Err(RecognizeError::Disconnected);
    }
    for pattern in [Pattern::K4, Pattern::Diamond] {
        if let Some(witness) = contains_induced(g, pattern) {
            return Err(RecognizeError::Forbidden { pattern, witness });
        }
    }
    if g.order() == 2 {
        // Connected on two vertices is K2.
        return Ok(ExtremalClass::K2);
    }
    if let Some(class) = try_triangle_system(g) {
        return Ok(class);
    }
    if let Some(class) = try_two_triangles_matching(g) {
        return Ok(class);
    }
    Ok(ExtremalClass::NotOfCharacterizedForm)
}

fn try_triangle_system(g: &Graph) -> Option<ExtremalClass> {
    let n = g.order();
    if n < 3 || !n.is_multiple_of(3) {
        return None;
    }
    let mut triangle_of = vec![usize::MAX; n];
    let mut triangles: Vec<(usize, usize, usize)> = Vec::new();
    if !assign_triangles(g, &mut triangle_of, &mut triangles) {
        return None;
    }
    // All cross-triangle edges must join two hubs.
    let mut is_hub = vec![false; n];
    for &(hub, _, _) in &triangles {
        is_hub[hub] = true;
    }
    let mut added_edges = Vec::new();
    for (u, v) in g.edges() {
        if triangle_of[u] == triangle_of[v] {
            continue;
        }
        if !(is_hub[u] && is_hub[v]) {
            return None;
        }
        let (a, b) = (triangle_of[u] + 1, triangle_of[v] + 1);
        added_edges.push((a.min(b), a.max(b)));
    }
    added_edges.sort_unstable();
    Some(ExtremalClass::TriangleSystem {
        hubs: triangles.iter().map(|t| t.0).collect(),
        privates: triangles.iter().map(|t| (t.1, t.2)).collect(),
        added_edges,
    })
}

/// Greedy triangle assignment driven by the private vertices (degree exactly
/// two with adjacent neighbors), smallest index first, with full
/// backtracking over the rare ambiguous hub choice.
fn assign_triangles(
    g: &Graph,
    triangle_of: &mut Vec<usize>,
    triangles: &mut Vec<(usize, usize, usize)>,
) -> bool {
    let n = g.order();
    let next = (0..n).find(|&v| triangle_of[v] == usize::MAX && g.degree(v) == 2);
    let x = match next {
        Some(x) => x,
        None => return triangle_of.iter().all(|&t| t != usize::MAX),
    };
    let nbrs = g.neighbors(x).to_vec();
    let (p, q) = (nbrs[0], nbrs[1]);
    if !g.has_edge(p, q) {
        return false;
    }
    for (partner, hub) in [(p, q), (q, p)] {
        if triangle_of[partner] != usize::MAX || triangle_of[hub] != usize::MAX {
            continue;
        }
        if g.degree(partner) != 2 {
            continue;
        }
        let idx = triangles.len();
        triangle_of[x] = idx;
        triangle_of[partner] = idx;
        triangle_of[hub] = idx;
        triangles.push((hub, x.min(partner), x.max(partner)));
        if assign_triangles(g, triangle_of, triangles) {
            return true;
        }
        triangles.pop();
        triangle_of[x] = usize::MAX;
        triangle_of[partner] = usize::MAX;
        triangle_of[hub] = usize::MAX;
    }
    false
}

fn try_two_triangles_matching(g: &Graph) -> Option<ExtremalClass> {
    if g.order() != 6 {
        return None;
    }
    // Enumerate the triangle through vertex 0; the other three vertices must
    // form the second triangle.
    let nbrs = g.neighbors(0).to_vec();
    for (bi, &b) in nbrs.iter().enumerate() {
        for &a in &nbrs[..bi] {
            if !g.has_edge(a, b) {
                continue;
            }
            let t1 = [0, a.min(b), a.max(b)];
            let t1_set: VertexSet = t1.iter().copied().collect();
            let t2_set = g.full_set().difference(t1_set);
            if !g.is_complete_set(t2_set).unwrap() {
                continue;
            }
            let t2: Vec<usize> = t2_set.to_vec();
            let mut cross = Vec::new();
            for &u in &t1 {
                for &v in &t2 {
                    if g.has_edge(u, v) {
                        cross.push((u, v));
                    }
                }
            }
            if cross.len() != 2 {
                continue;
            }
            let ((u1, v1), (u2, v2)) = (cross[0], cross[1]);
            if u1 == u2 || v1 == v2 {
                continue; // two cross edges sharing an endpoint is not a matching
            }
            return Some(ExtremalClass::TwoTrianglesTwoMatching {
                triangles: [t1, [t2[0], t2[1], t2[2]]],
                matching: [cross[0], cross[1]],
            });
        }
    }
    None
}

/// Corollary test for triangle-free graphs: the equality holds iff every
/// component is K2, i.e. every vertex has degree exactly one.
pub fn recognize_c1(g: &Graph) -> Result<bool, RecognizeError> {
    if let Some(witness) = contains_induced(g, Pattern::K3) {
        return Err(RecognizeError::Forbidden {
            pattern: Pattern::K3,
            witness,
        });
    }
    Ok(g.vertices().all(|v| g.degree(v) == 1))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("triangle count must be positive")]
    KZero,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("hub index {index} outside [1,{k}]")]
    HubIndexOutOfRange { index: usize, k: usize },
    #[error("added edge joins hub {0} to itself")]
    HubLoop(usize),
    #[error("matching size must be 2 or 3, got {0}")]
    InvalidMatchingSize(usize),
}

/// Builds `k` disjoint triangles plus the requested edges among their hubs.
///
/// Canonical numbering: triangle `i` (1-based) occupies vertices `3(i-1)`
/// (hub), `3(i-1)+1` and `3(i-1)+2`. `added_edges` are 1-based hub index
/// pairs.
pub fn generate_triangle_system(
    k: usize,
    added_edges: &[(usize, usize)],
) -> Result<Graph, GenerateError> {
    if k == 0 {
        return Err(GenerateError::KZero);
    }
    let mut g = Graph::empty(3 * k)?;
    for i in 0..k {
        let base = 3 * i;
        g.add_edge(base, base + 1);
        g.add_edge(base, base + 2);
        g.add_edge(base + 1, base + 2);
    }
    for &(a, b) in added_edges {
        for idx in [a, b] {
            if idx == 0 || idx > k {
                return Err(GenerateError::HubIndexOutOfRange { index: idx, k });
            }
        }
        if a == b {
            return Err(GenerateError::HubLoop(a));
        }
        g.add_edge(3 * (a - 1), 3 * (b - 1));
    }
    Ok(g)
}

/// Two disjoint triangles {0,1,2} and {3,4,5} with a matching of `medges`
/// edges (0-3, 1-4 and, for size three, 2-5) between them.
pub fn generate_two_triangles_matching(medges: usize) -> Result<Graph, GenerateError> {
    if !(2..=3).contains(&medges) {
        return Err(GenerateError::InvalidMatchingSize(medges));
    }
    let mut g = Graph::empty(6)?;
    for base in [0, 3] {
        g.add_edge(base, base + 1);
        g.add_edge(base, base + 2);
        g.add_edge(base + 1, base + 2);
    }
    for i in 0..medges {
        g.add_edge(i, i + 3);
    }
    Ok(g)
}
