//! Hereditary-class membership: a graph belongs to the class with threshold
//! `k` when every induced subgraph H with `gamma_r(H) >= k` attains the
//! extremal equality `gamma_r2(H) = 2 * gamma_r(H)`. For `k = 3` this class
//! has exactly two minimal forbidden induced subgraphs, the empty triple and
//! the 5-cycle, and [`check_theorem3`] compares the definition-level check
//! against that forbidden-subgraph test.

use std::sync::atomic::{AtomicU16, Ordering};

use thiserror::Error;

use crate::domination::Solver;
use crate::graph::{contains_induced, for_each_subset, Graph, Pattern, VertexSet};
use crate::graph6::graph_from_triangle_bits;

/// Default cap on the order accepted by the membership check: all `2^order`
/// induced subgraphs are solved exactly.
pub const DEFAULT_HEREDITARY_CAP: usize = 10;

/// Largest order whose packed adjacency is memoized in a direct-address
/// table (`2^21` entries at order 7).
const DIRECT_CACHE_MAX_ORDER: usize = 7;

const UNSOLVED: u16 = u16::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HereditaryError {
    #[error("graph order {order} exceeds the hereditary cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("threshold k must be positive")]
    KZero,
}

/// Membership verdict; a non-member carries a minimal-order induced-subgraph
/// witness with `gamma_r >= k` and `gamma_r2 != 2 * gamma_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HereditaryVerdict {
    pub member: bool,
    pub witness: Option<VertexSet>,
}

/// Shared memo table mapping a packed labeled subgraph to its
/// `(gamma_r, gamma_r2)` pair.
///
/// Keys are the upper-triangle adjacency bits of the relabeled induced
/// subgraph in column order, per order. Entries are immutable once written;
/// concurrent writers may redundantly solve the same key, which is harmless.
pub struct PairCache {
    tables: Vec<Vec<AtomicU16>>,
}

impl PairCache {
    /// A cache with direct-address tables for subgraph orders up to
    /// `min(max_order, 7)`; larger subgraphs are solved without caching.
    pub fn for_order(max_order: usize) -> PairCache {
        let top = max_order.min(DIRECT_CACHE_MAX_ORDER);
        let tables = (0..=top)
            .map(|o| {
                let bits = o * o.saturating_sub(1) / 2;
                (0..1usize << bits).map(|_| AtomicU16::new(UNSOLVED)).collect()
            })
            .collect();
        PairCache { tables }
    }

    /// `(gamma_r, gamma_r2)` of the subgraph of `g` induced on `subset`.
    pub fn pair_values(&self, g: &Graph, subset: u64, solver: &Solver) -> (u8, u8) {
        let mut members = [0usize; 64];
        let mut rest = subset;
        let mut t = 0;
        while rest != 0 {
            members[t] = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            t += 1;
        }
        if t == 0 {
            return (0, 0);
        }
        let mut bits = 0u64;
        let mut idx = 0;
        for b in 1..t {
            for a in 0..b {
                if g.has_edge(members[a], members[b]) {
                    bits |= 1 << idx;
                }
                idx += 1;
            }
        }
        if t < self.tables.len() {
            let slot = &self.tables[t][bits as usize];
            let cached = slot.load(Ordering::Relaxed);
            if cached != UNSOLVED {
                return ((cached >> 8) as u8, (cached & 0xff) as u8);
            }
            let pair = solve_pair(t, bits, solver);
            slot.store((pair.0 as u16) << 8 | pair.1 as u16, Ordering::Relaxed);
            pair
        } else {
            solve_pair(t, bits, solver)
        }
    }
}

fn solve_pair(order: usize, bits: u64, solver: &Solver) -> (u8, u8) {
    let h = graph_from_triangle_bits(order, bits).expect("subgraph order in range");
    let gamma_r = solver.weak_roman_value(&h).expect("within solver cap");
    let gamma_r2 = solver.rainbow_value(&h).expect("within solver cap");
    (gamma_r as u8, gamma_r2 as u8)
}

/// Definition-level membership test under the default order cap.
///
/// Subsets are scanned by increasing size, so a returned witness has minimal
/// order. The empty subgraph is skipped.
pub fn in_gk(g: &Graph, k: usize) -> Result<HereditaryVerdict, HereditaryError> {
    let cache = PairCache::for_order(g.order());
    in_gk_cached(g, k, DEFAULT_HEREDITARY_CAP, &cache)
}

pub fn in_gk_cached(
    g: &Graph,
    k: usize,
    order_cap: usize,
    cache: &PairCache,
) -> Result<HereditaryVerdict, HereditaryError> {
    if k == 0 {
        return Err(HereditaryError::KZero);
    }
    let n = g.order();
    if n > order_cap {
        return Err(HereditaryError::OrderCapExceeded {
            order: n,
            cap: order_cap,
        });
    }
    let solver = Solver::with_cap(order_cap.max(crate::domination::DEFAULT_ORDER_CAP));
    for size in 1..=n {
        let mut witness = None;
        for_each_subset(n, size, |s| {
            let (gamma_r, gamma_r2) = cache.pair_values(g, s, &solver);
            if gamma_r as usize >= k && gamma_r2 as usize != 2 * gamma_r as usize {
                witness = Some(VertexSet::from_bits(s));
                true
            } else {
                false
            }
        });
        if witness.is_some() {
            return Ok(HereditaryVerdict {
                member: false,
                witness,
            });
        }
    }
    Ok(HereditaryVerdict {
        member: true,
        witness: None,
    })
}

/// The two minimal forbidden induced subgraphs of the `k = 3` class.
pub const G3_FORBIDDEN: [Pattern; 2] = [Pattern::Empty3, Pattern::C5];

/// Outcome of a forbidden-induced-subgraph scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeCheck {
    pub free: bool,
    pub witness: Option<(Pattern, VertexSet)>,
}

/// True iff none of `patterns` occurs as an induced subgraph; otherwise the
/// first pattern found is returned with its embedding.
pub fn is_free(g: &Graph, patterns: &[Pattern]) -> FreeCheck {
    for &pattern in patterns {
        if let Some(witness) = contains_induced(g, pattern) {
            return FreeCheck {
                free: false,
                witness: Some((pattern, witness)),
            };
        }
    }
    FreeCheck {
        free: true,
        witness: None,
    }
}

/// Compares definition-level membership at `k = 3` against
/// {empty-triple, C5}-freeness. A `false` return means the two
/// implementations disagree, which indicates a bug: the equality of the two
/// predicates is a theorem.
pub fn check_theorem3(g: &Graph) -> Result<bool, HereditaryError> {
    let cache = PairCache::for_order(g.order());
    check_theorem3_cached(g, DEFAULT_HEREDITARY_CAP, &cache)
}

pub fn check_theorem3_cached(
    g: &Graph,
    order_cap: usize,
    cache: &PairCache,
) -> Result<bool, HereditaryError> {
    let member = in_gk_cached(g, 3, order_cap, cache)?.member;
    Ok(member == is_free(g, &G3_FORBIDDEN).free)
}
