//! Validators and exact solvers for plain domination, 2-rainbow domination
//! and weak Roman domination.
//!
//! The solvers run iterative deepening on the weight: for w = 0, 1, 2, ...
//! they enumerate every assignment of weight exactly w (positive support
//! first, then the distribution of values or labels over it), validate, and
//! stop at the first weight with a hit. Supports that are not dominating
//! sets are pruned, which is a necessary condition for both parameters.
//! Among optimal witnesses the lexicographically smallest assignment is
//! returned, comparing per-vertex values from vertex 0 with value order
//! 0 < 1 < 2 (weak Roman) resp. none < {1} < {2} < {1,2} (rainbow).

use std::fmt;

use thiserror::Error;

use crate::graph::{for_each_subset, Graph, GraphError, VertexSet};

/// Default hard cap on the order accepted by the exact solvers.
pub const DEFAULT_ORDER_CAP: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph order {order} exceeds the solver cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AssignmentError {
    #[error("assignment covers {found} vertices but the graph has {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("value {value} at vertex {vertex} outside {{0,1,2}}")]
    ValueOutOfRange { vertex: usize, value: u8 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("move endpoints must be distinct (vertex {0})")]
    SameVertex(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("move source {0} has value 0")]
    SourceNotPositive(usize),
    #[error("move target {0} already has positive value")]
    TargetPositive(usize),
    #[error("move target {0} already has value 2")]
    TargetAtMax(usize),
}

/// Outcome of a validator: valid, or invalid with the first offending vertex
/// in ascending vertex order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid { witness: usize },
}

impl Verdict {
    pub fn is_valid(self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Per-vertex label of a 2-rainbow dominating function: a subset of {1,2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RainbowLabel {
    None,
    One,
    Two,
    Both,
}

impl RainbowLabel {
    pub fn weight(self) -> usize {
        match self {
            RainbowLabel::None => 0,
            RainbowLabel::One | RainbowLabel::Two => 1,
            RainbowLabel::Both => 2,
        }
    }

    fn ordinal(self) -> u8 {
        match self {
            RainbowLabel::None => 0,
            RainbowLabel::One => 1,
            RainbowLabel::Two => 2,
            RainbowLabel::Both => 3,
        }
    }
}

impl fmt::Display for RainbowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RainbowLabel::None => "-",
            RainbowLabel::One => "1",
            RainbowLabel::Two => "2",
            RainbowLabel::Both => "12",
        })
    }
}

/// An assignment of subsets of {1,2} to the vertices of a graph.
#[derive(Clone, PartialEq, Eq)]
pub struct RainbowAssignment {
    order: usize,
    ones: u64,
    twos: u64,
}

impl RainbowAssignment {
    pub fn from_labels(labels: &[RainbowLabel]) -> RainbowAssignment {
        assert!(labels.len() <= 64);
        let mut ones = 0u64;
        let mut twos = 0u64;
        for (v, label) in labels.iter().enumerate() {
            if matches!(label, RainbowLabel::One | RainbowLabel::Both) {
                ones |= 1 << v;
            }
            if matches!(label, RainbowLabel::Two | RainbowLabel::Both) {
                twos |= 1 << v;
            }
        }
        RainbowAssignment {
            order: labels.len(),
            ones,
            twos,
        }
    }

    pub(crate) fn from_masks(order: usize, ones: u64, twos: u64) -> RainbowAssignment {
        RainbowAssignment { order, ones, twos }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self, v: usize) -> RainbowLabel {
        assert!(v < self.order);
        match (self.ones >> v & 1, self.twos >> v & 1) {
            (0, 0) => RainbowLabel::None,
            (1, 0) => RainbowLabel::One,
            (0, 1) => RainbowLabel::Two,
            _ => RainbowLabel::Both,
        }
    }

    pub fn labels(&self) -> Vec<RainbowLabel> {
        (0..self.order).map(|v| self.label(v)).collect()
    }

    pub fn weight(&self) -> usize {
        (self.ones.count_ones() + self.twos.count_ones()) as usize
    }

    /// Vertices with a non-empty label.
    pub fn support(&self) -> VertexSet {
        VertexSet::from_bits(self.ones | self.twos)
    }

    /// The same assignment with colors 1 and 2 exchanged.
    pub fn swapped_colors(&self) -> RainbowAssignment {
        RainbowAssignment {
            order: self.order,
            ones: self.twos,
            twos: self.ones,
        }
    }

    fn lex_key(&self) -> u128 {
        let mut key = 0u128;
        for v in 0..self.order {
            key = key << 2 | self.label(v).ordinal() as u128;
        }
        key
    }
}

impl fmt::Debug for RainbowAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for v in 0..self.order {
            if v > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.label(v))?;
        }
        write!(f, "]")
    }
}

/// An assignment of values in {0,1,2} to the vertices of a graph.
#[derive(Clone, PartialEq, Eq)]
pub struct WeakRomanAssignment {
    order: usize,
    /// Vertices with value >= 1.
    positive: u64,
    /// Vertices with value 2 (a subset of `positive`).
    doubled: u64,
}

impl WeakRomanAssignment {
    pub fn from_values(values: &[u8]) -> Result<WeakRomanAssignment, AssignmentError> {
        assert!(values.len() <= 64);
        let mut positive = 0u64;
        let mut doubled = 0u64;
        for (v, &value) in values.iter().enumerate() {
            match value {
                0 => {}
                1 => positive |= 1 << v,
                2 => {
                    positive |= 1 << v;
                    doubled |= 1 << v;
                }
                _ => return Err(AssignmentError::ValueOutOfRange { vertex: v, value }),
            }
        }
        Ok(WeakRomanAssignment {
            order: values.len(),
            positive,
            doubled,
        })
    }

    pub(crate) fn from_masks(order: usize, positive: u64, doubled: u64) -> WeakRomanAssignment {
        debug_assert!(doubled & !positive == 0);
        WeakRomanAssignment {
            order,
            positive,
            doubled,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn value(&self, v: usize) -> u8 {
        assert!(v < self.order);
        if self.doubled >> v & 1 == 1 {
            2
        } else {
            (self.positive >> v & 1) as u8
        }
    }

    pub fn values(&self) -> Vec<u8> {
        (0..self.order).map(|v| self.value(v)).collect()
    }

    pub fn weight(&self) -> usize {
        (self.positive.count_ones() + self.doubled.count_ones()) as usize
    }

    /// Vertices with positive value.
    pub fn positive_set(&self) -> VertexSet {
        VertexSet::from_bits(self.positive)
    }

    fn check_endpoints(&self, v: usize, u: usize) -> Result<(), MoveError> {
        for w in [v, u] {
            if w >= self.order {
                return Err(MoveError::VertexOutOfRange {
                    vertex: w,
                    order: self.order,
                });
            }
        }
        if u == v {
            return Err(MoveError::SameVertex(u));
        }
        Ok(())
    }

    /// The unit transfer from `v` to `u`: `v` loses 1, `u` gains 1, total
    /// weight preserved.
    ///
    /// Restricted to the shape every use in the underlying theory has:
    /// the source must be positive and the target must have value 0.
    /// [`Self::apply_move_unchecked`] lifts the target restriction.
    pub fn apply_move(&self, v: usize, u: usize) -> Result<WeakRomanAssignment, MoveError> {
        self.check_endpoints(v, u)?;
        if self.value(v) == 0 {
            return Err(MoveError::SourceNotPositive(v));
        }
        if self.value(u) != 0 {
            return Err(MoveError::TargetPositive(u));
        }
        Ok(self.moved(v, u))
    }

    /// Like [`Self::apply_move`] but allows a target with value 1. Values
    /// leaving {0,1,2} at either endpoint are still reported as errors.
    pub fn apply_move_unchecked(&self, v: usize, u: usize) -> Result<WeakRomanAssignment, MoveError> {
        self.check_endpoints(v, u)?;
        if self.value(v) == 0 {
            return Err(MoveError::SourceNotPositive(v));
        }
        if self.value(u) == 2 {
            return Err(MoveError::TargetAtMax(u));
        }
        Ok(self.moved(v, u))
    }

    fn moved(&self, v: usize, u: usize) -> WeakRomanAssignment {
        let mut values = self.values();
        values[v] -= 1;
        values[u] += 1;
        WeakRomanAssignment::from_values(&values).expect("values stay in range")
    }

    fn lex_key(&self) -> u128 {
        let mut key = 0u128;
        for v in 0..self.order {
            key = key << 2 | self.value(v) as u128;
        }
        key
    }
}

impl fmt::Debug for WeakRomanAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for v in 0..self.order {
            if v > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.value(v))?;
        }
        write!(f, "]")
    }
}

/// An exact parameter value together with an optimal witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult<W> {
    pub value: usize,
    pub witness: W,
}

/// True iff every vertex outside `d` has at least one neighbor inside `d`.
pub fn is_dominating_set(g: &Graph, d: VertexSet) -> Result<bool, GraphError> {
    if !d.is_subset_of(g.full_set()) {
        let vertex = d.difference(g.full_set()).min().unwrap();
        return Err(GraphError::VertexOutOfRange {
            vertex,
            order: g.order(),
        });
    }
    let ctx = SolveCtx::new(g);
    Ok(ctx.dominates(d.bits()))
}

/// Checks the 2-rainbow condition: every vertex with an empty label sees
/// both colors among its neighbors' labels.
pub fn validate_rainbow(g: &Graph, f: &RainbowAssignment) -> Result<Verdict, AssignmentError> {
    if f.order() != g.order() {
        return Err(AssignmentError::LengthMismatch {
            expected: g.order(),
            found: f.order(),
        });
    }
    Ok(match rainbow_violation(g, f.ones, f.twos) {
        None => Verdict::Valid,
        Some(witness) => Verdict::Invalid { witness },
    })
}

/// Checks the weak Roman condition: every vertex with value 0 has a positive
/// neighbor whose unit transfer leaves the positive vertices dominating.
pub fn validate_weak_roman(
    g: &Graph,
    gfun: &WeakRomanAssignment,
) -> Result<Verdict, AssignmentError> {
    if gfun.order() != g.order() {
        return Err(AssignmentError::LengthMismatch {
            expected: g.order(),
            found: gfun.order(),
        });
    }
    let ctx = SolveCtx::new(g);
    Ok(match ctx.wrdf_violation(gfun.positive, gfun.doubled) {
        None => Verdict::Valid,
        Some(witness) => Verdict::Invalid { witness },
    })
}

#[inline]
fn rainbow_violation(g: &Graph, ones: u64, twos: u64) -> Option<usize> {
    let support = ones | twos;
    for u in 0..g.order() {
        if support >> u & 1 == 0 {
            let nb = g.adj_bits(u);
            if nb & ones == 0 || nb & twos == 0 {
                return Some(u);
            }
        }
    }
    None
}

/// Precomputed bitmask context for one graph; all solver loops run on it.
struct SolveCtx<'g> {
    g: &'g Graph,
    n: usize,
    full: u64,
    closed: [u64; 64],
}

impl<'g> SolveCtx<'g> {
    fn new(g: &'g Graph) -> SolveCtx<'g> {
        let mut closed = [0u64; 64];
        for (v, slot) in closed.iter_mut().enumerate().take(g.order()) {
            *slot = g.closed_bits(v);
        }
        SolveCtx {
            g,
            n: g.order(),
            full: g.full_set().bits(),
            closed,
        }
    }

    #[inline]
    fn coverage(&self, s: u64) -> u64 {
        let mut covered = 0u64;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            covered |= self.closed[v];
        }
        covered
    }

    #[inline]
    fn dominates(&self, s: u64) -> bool {
        self.coverage(s) == self.full
    }

    /// First vertex violating the weak Roman condition, scanning ascending.
    fn wrdf_violation(&self, positive: u64, doubled: u64) -> Option<usize> {
        for u in 0..self.n {
            if positive >> u & 1 == 1 {
                continue;
            }
            let mut cand = self.g.adj_bits(u) & positive;
            if cand == 0 {
                return Some(u);
            }
            let mut defended = false;
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                let mut moved = positive | 1 << u;
                if doubled >> v & 1 == 0 {
                    moved &= !(1 << v);
                }
                if self.dominates(moved) {
                    defended = true;
                    break;
                }
            }
            if !defended {
                return Some(u);
            }
        }
        None
    }

    /// Enumerates all weak Roman assignments of weight exactly `w` that
    /// validate, as (positive, doubled) mask pairs, in a fixed order.
    /// Returns true when the visitor stopped the scan.
    fn scan_weak_roman_level(&self, w: usize, visit: &mut impl FnMut(u64, u64) -> bool) -> bool {
        let s_min = w.div_ceil(2).max(1);
        for s_size in s_min..=w.min(self.n) {
            let d_size = w - s_size;
            let mut stopped = false;
            for_each_subset(self.n, s_size, |support| {
                if !self.dominates(support) {
                    return false;
                }
                for_each_subset_of(support, d_size, &mut |doubled| {
                    if self.wrdf_violation(support, doubled).is_none() && visit(support, doubled) {
                        stopped = true;
                    }
                    stopped
                });
                stopped
            });
            if stopped {
                return true;
            }
        }
        false
    }

    /// Enumerates all valid 2-rainbow assignments of weight exactly `w` as
    /// (ones, twos) mask pairs. Returns true when the visitor stopped.
    fn scan_rainbow_level(&self, w: usize, visit: &mut impl FnMut(u64, u64) -> bool) -> bool {
        let s_min = w.div_ceil(2).max(1);
        for s_size in s_min..=w.min(self.n) {
            let b_size = w - s_size;
            let mut stopped = false;
            for_each_subset(self.n, s_size, |support| {
                stopped = self.scan_rainbow_support(support, b_size, visit);
                stopped
            });
            if stopped {
                return true;
            }
        }
        false
    }

    fn scan_rainbow_support(
        &self,
        support: u64,
        b_size: usize,
        visit: &mut impl FnMut(u64, u64) -> bool,
    ) -> bool {
        if !self.dominates(support) {
            return false;
        }
        // A vertex outside the support whose only supported neighbor is v
        // forces label {1,2} on v.
        let mut forced = 0u64;
        let mut outside = self.full & !support;
        while outside != 0 {
            let u = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            let m = self.g.adj_bits(u) & support;
            if m.count_ones() == 1 {
                forced |= m;
            }
        }
        if forced.count_ones() as usize > b_size {
            return false;
        }
        let mut stopped = false;
        for_each_subset_of(support & !forced, b_size - forced.count_ones() as usize, &mut |extra| {
            let both = forced | extra;
            let singles = support & !both;
            // Outside vertices not adjacent to a {1,2} vertex must see both
            // colors among singly-labeled neighbors, hence at least two.
            let mut constraints = [0u64; 64];
            let mut n_constraints = 0;
            let mut feasible = true;
            let mut outside = self.full & !support;
            while outside != 0 {
                let u = outside.trailing_zeros() as usize;
                outside &= outside - 1;
                if self.g.adj_bits(u) & both != 0 {
                    continue;
                }
                let m = self.g.adj_bits(u) & singles;
                if m.count_ones() < 2 {
                    feasible = false;
                    break;
                }
                constraints[n_constraints] = m;
                n_constraints += 1;
            }
            if !feasible {
                return false;
            }
            let mut members = [0usize; 64];
            let t = mask_members(singles, &mut members);
            for choice in 0u64..1 << t {
                let mut twos_part = 0u64;
                let mut b = choice;
                while b != 0 {
                    let j = b.trailing_zeros() as usize;
                    b &= b - 1;
                    twos_part |= 1 << members[j];
                }
                let ones_part = singles & !twos_part;
                let ok = constraints[..n_constraints]
                    .iter()
                    .all(|&m| m & ones_part != 0 && m & twos_part != 0);
                if ok && visit(both | ones_part, both | twos_part) {
                    stopped = true;
                    return true;
                }
            }
            false
        });
        stopped
    }
}

#[inline]
fn mask_members(mask: u64, out: &mut [usize; 64]) -> usize {
    let mut rest = mask;
    let mut i = 0;
    while rest != 0 {
        out[i] = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        i += 1;
    }
    i
}

/// Calls `f` on every `k`-subset of the set bits of `mask`, in a fixed order,
/// until `f` returns true.
fn for_each_subset_of(mask: u64, k: usize, f: &mut impl FnMut(u64) -> bool) {
    let mut members = [0usize; 64];
    let m = mask_members(mask, &mut members);
    if k > m {
        return;
    }
    for_each_subset(m, k, |idx| {
        let mut s = 0u64;
        let mut b = idx;
        while b != 0 {
            let j = b.trailing_zeros() as usize;
            b &= b - 1;
            s |= 1 << members[j];
        }
        f(s)
    });
}

/// Exact-solver entry points with a configurable order cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Solver {
    pub order_cap: usize,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            order_cap: DEFAULT_ORDER_CAP,
        }
    }
}

impl Solver {
    pub fn with_cap(order_cap: usize) -> Solver {
        Solver { order_cap }
    }

    fn admit<'g>(&self, g: &'g Graph) -> Result<SolveCtx<'g>, SolveError> {
        if g.order() > self.order_cap {
            return Err(SolveError::OrderCapExceeded {
                order: g.order(),
                cap: self.order_cap,
            });
        }
        Ok(SolveCtx::new(g))
    }

    /// Minimum size of a dominating set, with the lexicographically smallest
    /// optimal set (by indicator vector).
    pub fn domination_number(&self, g: &Graph) -> Result<SolveResult<VertexSet>, SolveError> {
        let ctx = self.admit(g)?;
        for k in 0..=ctx.n {
            let mut best: Option<u64> = None;
            for_each_subset(ctx.n, k, |s| {
                if ctx.dominates(s) {
                    let key = s.reverse_bits();
                    if best.is_none_or(|b| key < b.reverse_bits()) {
                        best = Some(s);
                    }
                }
                false
            });
            if let Some(s) = best {
                return Ok(SolveResult {
                    value: k,
                    witness: VertexSet::from_bits(s),
                });
            }
        }
        unreachable!("the full vertex set always dominates")
    }

    /// Minimum size of a dominating set, value only.
    pub fn domination_value(&self, g: &Graph) -> Result<usize, SolveError> {
        let ctx = self.admit(g)?;
        for k in 0..=ctx.n {
            let mut hit = false;
            for_each_subset(ctx.n, k, |s| {
                hit = ctx.dominates(s);
                hit
            });
            if hit {
                return Ok(k);
            }
        }
        unreachable!("the full vertex set always dominates")
    }

    /// The 2-rainbow domination number with a lexicographically smallest
    /// optimal witness.
    pub fn rainbow_number(&self, g: &Graph) -> Result<SolveResult<RainbowAssignment>, SolveError> {
        let ctx = self.admit(g)?;
        let value = rainbow_value_inner(&ctx);
        let mut best: Option<(u128, RainbowAssignment)> = None;
        ctx.scan_rainbow_level(value, &mut |ones, twos| {
            let cand = RainbowAssignment::from_masks(ctx.n, ones, twos);
            let key = cand.lex_key();
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, cand));
            }
            false
        });
        let witness = match best {
            Some((_, w)) => w,
            None => {
                debug_assert_eq!(value, 0);
                RainbowAssignment::from_masks(ctx.n, 0, 0)
            }
        };
        Ok(SolveResult { value, witness })
    }

    /// The 2-rainbow domination number, value only.
    pub fn rainbow_value(&self, g: &Graph) -> Result<usize, SolveError> {
        let ctx = self.admit(g)?;
        Ok(rainbow_value_inner(&ctx))
    }

    /// The weak Roman domination number with a lexicographically smallest
    /// optimal witness.
    pub fn weak_roman_number(
        &self,
        g: &Graph,
    ) -> Result<SolveResult<WeakRomanAssignment>, SolveError> {
        let ctx = self.admit(g)?;
        let value = weak_roman_value_inner(&ctx);
        let mut best: Option<(u128, WeakRomanAssignment)> = None;
        ctx.scan_weak_roman_level(value, &mut |positive, doubled| {
            let cand = WeakRomanAssignment::from_masks(ctx.n, positive, doubled);
            let key = cand.lex_key();
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, cand));
            }
            false
        });
        let witness = match best {
            Some((_, w)) => w,
            None => {
                debug_assert_eq!(value, 0);
                WeakRomanAssignment::from_masks(ctx.n, 0, 0)
            }
        };
        Ok(SolveResult { value, witness })
    }

    /// The weak Roman domination number, value only.
    pub fn weak_roman_value(&self, g: &Graph) -> Result<usize, SolveError> {
        let ctx = self.admit(g)?;
        Ok(weak_roman_value_inner(&ctx))
    }

    /// Every minimum weak Roman dominating function of `g`, sorted
    /// lexicographically, together with the optimal weight.
    pub fn minimum_weak_roman_assignments(
        &self,
        g: &Graph,
    ) -> Result<(usize, Vec<WeakRomanAssignment>), SolveError> {
        let ctx = self.admit(g)?;
        let value = weak_roman_value_inner(&ctx);
        if value == 0 {
            return Ok((0, vec![WeakRomanAssignment::from_masks(ctx.n, 0, 0)]));
        }
        let mut all = Vec::new();
        ctx.scan_weak_roman_level(value, &mut |positive, doubled| {
            all.push(WeakRomanAssignment::from_masks(ctx.n, positive, doubled));
            false
        });
        all.sort_by_key(WeakRomanAssignment::lex_key);
        Ok((value, all))
    }
}

fn rainbow_value_inner(ctx: &SolveCtx) -> usize {
    if ctx.n == 0 {
        return 0;
    }
    // Weight n always suffices: label every vertex {1}.
    for w in 1..=ctx.n {
        if ctx.scan_rainbow_level(w, &mut |_, _| true) {
            return w;
        }
    }
    unreachable!("the all-{{1}} assignment is always valid")
}

fn weak_roman_value_inner(ctx: &SolveCtx) -> usize {
    if ctx.n == 0 {
        return 0;
    }
    // Weight n always suffices: value 1 everywhere.
    for w in 1..=ctx.n {
        if ctx.scan_weak_roman_level(w, &mut |_, _| true) {
            return w;
        }
    }
    unreachable!("the all-1 assignment is always valid")
}

/// [`Solver::domination_number`] under the default order cap.
pub fn domination_number(g: &Graph) -> Result<SolveResult<VertexSet>, SolveError> {
    Solver::default().domination_number(g)
}

/// [`Solver::rainbow_number`] under the default order cap.
pub fn rainbow_number(g: &Graph) -> Result<SolveResult<RainbowAssignment>, SolveError> {
    Solver::default().rainbow_number(g)
}

/// [`Solver::weak_roman_number`] under the default order cap.
pub fn weak_roman_number(g: &Graph) -> Result<SolveResult<WeakRomanAssignment>, SolveError> {
    Solver::default().weak_roman_number(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn c5() -> Graph {
        Graph::cycle(5).unwrap()
    }

    fn rainbow(labels: &[RainbowLabel]) -> RainbowAssignment {
        RainbowAssignment::from_labels(labels)
    }

    use RainbowLabel::{Both, None as LNone, One, Two};

    #[test]
    fn dominating_set_checks() {
        let g = c5();
        assert!(is_dominating_set(&g, [0, 2].into_iter().collect()).unwrap());
        assert!(!is_dominating_set(&g, [0].into_iter().collect()).unwrap());
        let k3 = Graph::complete(3).unwrap();
        assert!(is_dominating_set(&k3, [0].into_iter().collect()).unwrap());
        assert!(matches!(
            is_dominating_set(&k3, VertexSet::from_bits(1 << 5)),
            Err(GraphError::VertexOutOfRange { vertex: 5, .. })
        ));
    }

    #[test]
    fn domination_numbers() {
        assert_eq!(domination_number(&c5()).unwrap().value, 2);
        assert_eq!(domination_number(&Graph::empty(3).unwrap()).unwrap().value, 3);
        for n in 1..=6 {
            assert_eq!(domination_number(&Graph::complete(n).unwrap()).unwrap().value, 1);
        }
        let empty = Graph::empty(0).unwrap();
        let r = domination_number(&empty).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.witness.is_empty());
    }

    #[test]
    fn domination_witness_is_minimum_and_valid() {
        let g = c5();
        let r = domination_number(&g).unwrap();
        assert_eq!(r.witness.len(), r.value);
        assert!(is_dominating_set(&g, r.witness).unwrap());
    }

    #[test]
    fn rainbow_validation_examples() {
        let g = c5();
        // f(0)={1}, f(1)={1}, f(3)={2}: both empty vertices see both colors.
        let f = rainbow(&[One, One, LNone, Two, LNone]);
        assert_eq!(f.weight(), 3);
        assert!(validate_rainbow(&g, &f).unwrap().is_valid());
        // f(0)={1}, f(2)={2}: vertex 3 sees only color 2, vertex 4 only 1.
        let f = rainbow(&[One, LNone, Two, LNone, LNone]);
        assert_eq!(
            validate_rainbow(&g, &f).unwrap(),
            Verdict::Invalid { witness: 3 }
        );
        // No empty vertex, vacuously valid.
        let f = rainbow(&[Both, Both, Both, Both, Both]);
        assert!(validate_rainbow(&g, &f).unwrap().is_valid());
        // Length mismatch.
        let f = rainbow(&[One, One]);
        assert!(matches!(
            validate_rainbow(&g, &f),
            Err(AssignmentError::LengthMismatch { expected: 5, found: 2 })
        ));
    }

    #[test]
    fn weak_roman_validation_examples() {
        let g = c5();
        let ok = WeakRomanAssignment::from_values(&[1, 1, 1, 0, 0]).unwrap();
        assert!(validate_weak_roman(&g, &ok).unwrap().is_valid());
        let bad = WeakRomanAssignment::from_values(&[1, 0, 1, 0, 0]).unwrap();
        assert_eq!(
            validate_weak_roman(&g, &bad).unwrap(),
            Verdict::Invalid { witness: 1 }
        );
        let k3 = Graph::complete(3).unwrap();
        let one = WeakRomanAssignment::from_values(&[1, 0, 0]).unwrap();
        assert!(validate_weak_roman(&k3, &one).unwrap().is_valid());
    }

    #[test]
    fn move_semantics() {
        let g = WeakRomanAssignment::from_values(&[1, 0, 0]).unwrap();
        let moved = g.apply_move(0, 1).unwrap();
        assert_eq!(moved.values(), vec![0, 1, 0]);
        assert_eq!(moved.weight(), g.weight());

        let g = WeakRomanAssignment::from_values(&[2, 0]).unwrap();
        assert_eq!(g.apply_move(0, 1).unwrap().values(), vec![1, 1]);

        let g = WeakRomanAssignment::from_values(&[1, 1]).unwrap();
        assert_eq!(g.apply_move(0, 1), Err(MoveError::TargetPositive(1)));
        // The relaxed variant allows it but still guards the value range.
        assert_eq!(g.apply_move_unchecked(0, 1).unwrap().values(), vec![0, 2]);
        let g2 = WeakRomanAssignment::from_values(&[1, 2]).unwrap();
        assert_eq!(g2.apply_move_unchecked(0, 1), Err(MoveError::TargetAtMax(1)));
        assert_eq!(g2.apply_move(1, 1), Err(MoveError::SameVertex(1)));
        let g3 = WeakRomanAssignment::from_values(&[0, 1]).unwrap();
        assert_eq!(g3.apply_move(0, 1), Err(MoveError::SourceNotPositive(0)));
        assert!(matches!(
            g3.apply_move(0, 7),
            Err(MoveError::VertexOutOfRange { vertex: 7, .. })
        ));
    }

    #[test]
    fn assignment_value_range() {
        assert!(matches!(
            WeakRomanAssignment::from_values(&[0, 3]),
            Err(AssignmentError::ValueOutOfRange { vertex: 1, value: 3 })
        ));
    }

    #[test]
    fn rainbow_point_values() {
        assert_eq!(rainbow_number(&c5()).unwrap().value, 3);
        assert_eq!(rainbow_number(&Graph::empty(3).unwrap()).unwrap().value, 3);
        assert_eq!(rainbow_number(&Graph::empty(1).unwrap()).unwrap().value, 1);
        assert_eq!(rainbow_number(&Graph::complete(2).unwrap()).unwrap().value, 2);
        assert_eq!(rainbow_number(&Graph::empty(0).unwrap()).unwrap().value, 0);
    }

    #[test]
    fn weak_roman_point_values() {
        assert_eq!(weak_roman_number(&c5()).unwrap().value, 3);
        assert_eq!(weak_roman_number(&Graph::empty(3).unwrap()).unwrap().value, 3);
        assert_eq!(weak_roman_number(&Graph::empty(2).unwrap()).unwrap().value, 2);
        assert_eq!(weak_roman_number(&Graph::complete(2).unwrap()).unwrap().value, 1);
        assert_eq!(weak_roman_number(&Graph::empty(0).unwrap()).unwrap().value, 0);
    }

    #[test]
    fn witnesses_validate_and_match_value() {
        for g in [
            c5(),
            Graph::complete(4).unwrap(),
            Graph::path(6).unwrap(),
            Graph::from_edges(6, [(0, 1), (2, 3), (3, 4), (4, 2)]).unwrap(),
        ] {
            let r = rainbow_number(&g).unwrap();
            assert_eq!(r.witness.weight(), r.value);
            assert!(validate_rainbow(&g, &r.witness).unwrap().is_valid());
            let w = weak_roman_number(&g).unwrap();
            assert_eq!(w.witness.weight(), w.value);
            assert!(validate_weak_roman(&g, &w.witness).unwrap().is_valid());
        }
    }

    #[test]
    fn order_cap_is_enforced() {
        let g = Graph::complete(25).unwrap();
        assert_eq!(
            Solver::default().weak_roman_value(&g),
            Err(SolveError::OrderCapExceeded { order: 25, cap: 24 })
        );
        assert_eq!(Solver::with_cap(30).weak_roman_value(&g), Ok(1));
    }

    #[test]
    fn value_only_agrees_with_witness_search() {
        let solver = Solver::default();
        for g in [c5(), Graph::path(5).unwrap(), Graph::empty(4).unwrap()] {
            assert_eq!(
                solver.rainbow_value(&g).unwrap(),
                solver.rainbow_number(&g).unwrap().value
            );
            assert_eq!(
                solver.weak_roman_value(&g).unwrap(),
                solver.weak_roman_number(&g).unwrap().value
            );
            assert_eq!(
                solver.domination_value(&g).unwrap(),
                solver.domination_number(&g).unwrap().value
            );
        }
    }

    #[test]
    fn minimum_assignment_enumeration() {
        let g = Graph::complete(3).unwrap();
        let (value, all) = Solver::default().minimum_weak_roman_assignments(&g).unwrap();
        assert_eq!(value, 1);
        // K3: each single vertex with value 1 is optimal.
        assert_eq!(all.len(), 3);
        for a in &all {
            assert_eq!(a.weight(), 1);
            assert!(validate_weak_roman(&g, a).unwrap().is_valid());
        }
        // Sorted lexicographically: (0,0,1) < (0,1,0) < (1,0,0).
        assert_eq!(all[0].values(), vec![0, 0, 1]);
        assert_eq!(all[2].values(), vec![1, 0, 0]);
    }
}
