//! Immutable small-graph representation with bit-parallel adjacency.
//!
//! Vertices are `0..order` and every neighborhood is a single `u64` bitmask,
//! which caps the order at [`MAX_ORDER`]. That is far beyond what the exact
//! solvers in this crate can handle anyway.

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count (graph6 short form, single-word bitmasks).
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("order {0} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("cycle graphs need at least 3 vertices, got {0}")]
    CycleTooShort(usize),
}

/// A subset of the vertices of some graph, stored as a bitmask.
///
/// The set itself does not know which graph it belongs to; operations taking
/// a `(Graph, VertexSet)` pair range-check the members.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn full(order: usize) -> Self {
        debug_assert!(order <= MAX_ORDER);
        if order == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - order))
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Iterates members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < 64, "vertex {v} out of bitmask range");
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A finite simple undirected graph on vertices `0..order`.
///
/// Immutable after construction; adjacency is symmetric and irreflexive by
/// construction and one bitmask per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Graph, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(order));
        }
        Ok(Graph {
            order,
            adj: vec![0; order],
        })
    }

    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(order)?;
        for (u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    /// The complete graph K_n.
    pub fn complete(order: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(order)?;
        let full = VertexSet::full(order).bits();
        for v in 0..order {
            g.adj[v] = full & !(1 << v);
        }
        Ok(g)
    }

    /// The cycle C_n, vertices in cyclic order `0-1-...-(n-1)-0`.
    pub fn cycle(order: usize) -> Result<Graph, GraphError> {
        if order < 3 {
            return Err(GraphError::CycleTooShort(order));
        }
        let mut g = Graph::empty(order)?;
        for v in 0..order {
            g.add_edge(v, (v + 1) % order);
        }
        Ok(g)
    }

    /// The path P_n with vertices in path order.
    pub fn path(order: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(order)?;
        for v in 1..order {
            g.add_edge(v - 1, v);
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if w >= self.order {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.order,
                });
            }
        }
        self.add_edge(u, v);
        Ok(())
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order && v < self.order);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// All vertices as a set; the bitmask is `2^order - 1`.
    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.order && v < self.order);
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Neighborhood bitmask of `v` (open).
    #[inline]
    pub fn adj_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood bitmask `N[v] = N(v) | {v}`.
    #[inline]
    pub fn closed_bits(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as `(u, v)` pairs with `u < v`, in column order (the graph6 bit
    /// order): (0,1), (0,2), (1,2), (0,3), ...
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.order).flat_map(move |v| (0..v).filter_map(move |u| self.has_edge(u, v).then_some((u, v))))
    }

    fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        if !s.is_subset_of(self.full_set()) {
            let vertex = s.difference(self.full_set()).min().unwrap();
            return Err(GraphError::VertexOutOfRange {
                vertex,
                order: self.order,
            });
        }
        Ok(())
    }

    /// The subgraph induced on `s`, relabeled to `0..|s|` preserving the
    /// original vertex order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        self.check_set(s)?;
        let kept = s.to_vec();
        let mut g = Graph::empty(kept.len()).expect("subset order fits");
        for (bi, &b) in kept.iter().enumerate() {
            for (ai, &a) in kept.iter().enumerate().take(bi) {
                if self.has_edge(a, b) {
                    g.add_edge(ai, bi);
                }
            }
        }
        Ok(g)
    }

    /// True iff every pair of vertices is joined by a path. The empty graph
    /// and K_1 count as connected.
    pub fn is_connected(&self) -> bool {
        if self.order <= 1 {
            return true;
        }
        let full = self.full_set().bits();
        let mut reached = 1u64;
        loop {
            let mut next = reached;
            let mut frontier = reached;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                next |= self.adj[v];
            }
            if next == reached {
                return reached == full;
            }
            reached = next;
        }
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.order {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << v;
            loop {
                let mut next = comp;
                let mut frontier = comp;
                while frontier != 0 {
                    let u = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    next |= self.adj[u];
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    /// True iff every pair in `s` is adjacent; the empty set and singletons
    /// are complete.
    pub fn is_complete_set(&self, s: VertexSet) -> Result<bool, GraphError> {
        self.check_set(s)?;
        Ok(self.is_complete_mask(s.bits()))
    }

    #[inline]
    pub(crate) fn is_complete_mask(&self, s: u64) -> bool {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if s & !(1 << v) & !self.adj[v] != 0 {
                return false;
            }
        }
        true
    }

    /// Cartesian product with K_2: two copies of the graph joined by a
    /// perfect matching between corresponding vertices.
    pub fn prism(&self) -> Result<Graph, GraphError> {
        let n = self.order;
        let mut g = Graph::empty(2 * n)?;
        for v in 0..n {
            g.add_edge(v, v + n);
            let mut nb = self.adj[v];
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if u > v {
                    g.add_edge(u, v);
                    g.add_edge(u + n, v + n);
                }
            }
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.order;
        let mut g = Graph::empty(n + other.order)?;
        g.adj[..n].copy_from_slice(&self.adj);
        for v in 0..other.order {
            g.adj[n + v] = other.adj[v] << n;
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}; ", self.order)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, ")")
    }
}

/// The fixed induced patterns the recognizers need.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// Three pairwise non-adjacent vertices (the complement of a triangle).
    Empty3,
    /// Induced 5-cycle.
    C5,
    K3,
    K4,
    /// K_4 minus one edge.
    Diamond,
    K5,
}

impl Pattern {
    pub fn vertex_count(self) -> usize {
        match self {
            Pattern::Empty3 | Pattern::K3 => 3,
            Pattern::K4 | Pattern::Diamond => 4,
            Pattern::K5 | Pattern::C5 => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::Empty3 => "empty-triple",
            Pattern::C5 => "c5",
            Pattern::K3 => "k3",
            Pattern::K4 => "k4",
            Pattern::Diamond => "k4-minus-e",
            Pattern::K5 => "k5",
        }
    }

    /// The pattern as a concrete graph in canonical labeling.
    pub fn to_graph(self) -> Graph {
        match self {
            Pattern::Empty3 => Graph::empty(3).unwrap(),
            Pattern::C5 => Graph::cycle(5).unwrap(),
            Pattern::K3 => Graph::complete(3).unwrap(),
            Pattern::K4 => Graph::complete(4).unwrap(),
            Pattern::Diamond => Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap(),
            Pattern::K5 => Graph::complete(5).unwrap(),
        }
    }

    /// Does the subset `s` (of size `vertex_count`) induce this pattern in `g`?
    #[inline]
    fn matches(self, g: &Graph, s: u64) -> bool {
        // All patterns here are recognizable from the induced edge count plus,
        // for C5, the induced degree sequence: among 5-vertex graphs with five
        // edges, C5 is the only 2-regular one.
        let mut edges = 0u32;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            edges += (g.adj[v] & rest).count_ones();
        }
        match self {
            Pattern::Empty3 => edges == 0,
            Pattern::K3 => edges == 3,
            Pattern::K4 => edges == 6,
            Pattern::Diamond => edges == 5,
            Pattern::K5 => edges == 10,
            Pattern::C5 => {
                if edges != 5 {
                    return false;
                }
                let mut rest = s;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if (g.adj[v] & s).count_ones() != 2 {
                        return false;
                    }
                }
                true
            }
        }
    }
}

/// Finds a vertex set inducing `pattern` in `g`, if one exists.
///
/// Subsets are scanned in ascending bitmask order, so the result is
/// deterministic. Feeding the returned set to [`Graph::induced_subgraph`]
/// yields a graph isomorphic to the pattern.
pub fn contains_induced(g: &Graph, pattern: Pattern) -> Option<VertexSet> {
    let k = pattern.vertex_count();
    let n = g.order();
    if n < k {
        return None;
    }
    let mut found = None;
    for_each_subset(n, k, |s| {
        if pattern.matches(g, s) {
            found = Some(VertexSet(s));
            true
        } else {
            false
        }
    });
    found
}

/// Calls `f` on every `k`-subset of `0..n` in ascending bitmask order until
/// `f` returns true (early exit) or the subsets are exhausted.
#[inline]
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(u64) -> bool) {
    debug_assert!(n <= MAX_ORDER);
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit = 1u64 << n;
    let mut s = (1u64 << k) - 1;
    while s < limit {
        if f(s) {
            return;
        }
        // Gosper's hack: next k-subset in ascending numeric order.
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
        if c == 0 {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_graphs() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.order(), 4);
        assert_eq!(k4.size(), 6);
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(e3.size(), 0);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.size(), 5);
        assert!(matches!(Graph::cycle(2), Err(GraphError::CycleTooShort(2))));
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.size(), 3);
        assert!(matches!(Graph::empty(63), Err(GraphError::OrderTooLarge(63))));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 0)]),
            Err(GraphError::SelfLoop(0))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        ));
    }

    #[test]
    fn adjacency_is_symmetric_and_irreflexive() {
        let g = Graph::from_edges(5, [(0, 3), (3, 1), (2, 4)]).unwrap();
        for u in g.vertices() {
            assert!(!g.has_edge(u, u.min(g.order() - 1)) || u != u); // no self loop encoded
            for v in g.vertices() {
                if u != v {
                    assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
                }
            }
            assert!(!g.neighbors(u).contains(u));
        }
    }

    #[test]
    fn induced_subgraph_basics() {
        let c5 = Graph::cycle(5).unwrap();
        // Three consecutive cycle vertices induce a path.
        let h = c5.induced_subgraph([0, 1, 2].into_iter().collect()).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.size(), 2);
        assert!(h.has_edge(0, 1) && h.has_edge(1, 2) && !h.has_edge(0, 2));
        // Full vertex set gives the graph itself.
        assert_eq!(c5.induced_subgraph(c5.full_set()).unwrap(), c5);
        // K4 restricted to two vertices is K2.
        let k2 = Graph::complete(4)
            .unwrap()
            .induced_subgraph([0, 1].into_iter().collect())
            .unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap());
        // Out-of-range member errors.
        let err = c5.induced_subgraph(VertexSet::from_bits(1 << 5)).unwrap_err();
        assert!(matches!(err, GraphError::VertexOutOfRange { vertex: 5, .. }));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::cycle(5).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        assert!(Graph::complete(2).unwrap().is_connected());
        assert!(Graph::empty(0).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        let two_comps = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_comps.is_connected());
        assert_eq!(two_comps.components().len(), 2);
    }

    #[test]
    fn complete_sets() {
        let k3 = Graph::complete(3).unwrap();
        assert!(k3.is_complete_set(k3.full_set()).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        assert!(!c5.is_complete_set([0, 2].into_iter().collect()).unwrap());
        assert!(c5.is_complete_set(VertexSet::EMPTY).unwrap());
        assert!(c5.is_complete_set(VertexSet::singleton(3)).unwrap());
        assert!(c5.is_complete_set([0, 1].into_iter().collect()).unwrap());
    }

    #[test]
    fn prism_small_cases() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(k1.prism().unwrap(), Graph::complete(2).unwrap());
        let e2 = Graph::empty(2).unwrap();
        let p = e2.prism().unwrap();
        assert_eq!(p.size(), 2);
        assert!(p.has_edge(0, 2) && p.has_edge(1, 3));
        // prism(K2) is the 4-cycle 0-1-3-2-0.
        let c4 = Graph::complete(2).unwrap().prism().unwrap();
        assert_eq!(c4.size(), 4);
        for v in c4.vertices() {
            assert_eq!(c4.degree(v), 2);
        }
        assert!(c4.is_connected());
    }

    #[test]
    fn pattern_detection() {
        let c5 = Graph::cycle(5).unwrap();
        let hit = contains_induced(&c5, Pattern::C5).unwrap();
        assert_eq!(hit, c5.full_set());
        assert!(contains_induced(&Graph::complete(4).unwrap(), Pattern::Empty3).is_none());
        // Two disjoint triangles joined by a 2-edge matching contain neither
        // K4 nor a diamond.
        let g = Graph::from_edges(
            6,
            [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4)],
        )
        .unwrap();
        assert!(contains_induced(&g, Pattern::Diamond).is_none());
        assert!(contains_induced(&g, Pattern::K4).is_none());
        assert!(contains_induced(&g, Pattern::K3).is_some());
        // The diamond itself.
        let d = Pattern::Diamond.to_graph();
        assert!(contains_induced(&d, Pattern::Diamond).is_some());
        assert!(contains_induced(&d, Pattern::K4).is_none());
        assert!(contains_induced(&Graph::complete(5).unwrap(), Pattern::K5).is_some());
        assert!(contains_induced(&Graph::complete(4).unwrap(), Pattern::K5).is_none());
    }

    #[test]
    fn pattern_embedding_induces_pattern() {
        // The returned set really induces the pattern (checked by edge count
        // and degree profile through matches()).
        let g = Graph::from_edges(7, [(0, 2), (2, 4), (4, 6), (6, 1), (1, 0), (3, 5)]).unwrap();
        let s = contains_induced(&g, Pattern::C5).unwrap();
        let h = g.induced_subgraph(s).unwrap();
        assert_eq!(h.order(), 5);
        assert_eq!(h.size(), 5);
        for v in h.vertices() {
            assert_eq!(h.degree(v), 2);
        }
    }

    #[test]
    fn disjoint_union_shifts_labels() {
        let g = Graph::complete(2)
            .unwrap()
            .disjoint_union(&Graph::complete(3).unwrap())
            .unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 4);
        assert!(g.has_edge(0, 1) && g.has_edge(2, 3) && g.has_edge(3, 4) && g.has_edge(2, 4));
        assert!(!g.has_edge(1, 2));
    }

    #[test]
    fn subset_enumeration_order() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| {
            seen.push(s);
            false
        });
        assert_eq!(seen, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
    }
}
