//! Shared helpers for the integration suites: labeled-graph enumeration and
//! independent brute-force oracles. The oracles use plain adjacency lists
//! and exhaustive assignment scans on purpose; they share no code with the
//! solver paths they check.

#![allow(dead_code)]

use domlab::graph::{Graph, Pattern};

/// Builds the labeled graph of `order` whose upper-triangle edge bits (in
/// column order (0,1), (0,2), (1,2), (0,3), ...) are `bits`.
pub fn graph_from_bits(order: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..order {
        for u in 0..v {
            if bits >> idx & 1 == 1 {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    Graph::from_edges(order, edges).unwrap()
}

pub fn edge_bit_count(order: usize) -> usize {
    order * order.saturating_sub(1) / 2
}

/// Every labeled graph of the given order.
pub fn all_graphs(order: usize) -> impl Iterator<Item = Graph> {
    let total = 1u64 << edge_bit_count(order);
    (0..total).map(move |bits| graph_from_bits(order, bits))
}

fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    g.vertices().map(|v| g.neighbors(v).to_vec()).collect()
}

fn dominates_naive(adj: &[Vec<usize>], in_set: &[bool]) -> bool {
    (0..adj.len()).all(|v| in_set[v] || adj[v].iter().any(|&u| in_set[u]))
}

/// Minimum dominating set size by scanning all vertex subsets.
pub fn oracle_domination_number(g: &Graph) -> usize {
    let n = g.order();
    let adj = adjacency_lists(g);
    let mut best = n;
    for mask in 0u64..1 << n {
        let in_set: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if dominates_naive(&adj, &in_set) {
            best = best.min(mask.count_ones() as usize);
        }
    }
    best
}

/// Minimum 2-rainbow weight by scanning all 4^n label assignments.
/// Labels are subsets of {1,2} encoded as two bits.
pub fn oracle_rainbow_number(g: &Graph) -> usize {
    let n = g.order();
    let adj = adjacency_lists(g);
    let mut best = usize::MAX;
    let total = 4u64.pow(n as u32);
    for code in 0..total {
        let labels: Vec<u8> = (0..n).map(|v| (code >> (2 * v) & 3) as u8).collect();
        let weight: usize = labels.iter().map(|&l| l.count_ones() as usize).sum();
        if weight >= best {
            continue;
        }
        let valid = (0..n).all(|v| {
            labels[v] != 0 || adj[v].iter().fold(0u8, |acc, &u| acc | labels[u]) == 3
        });
        if valid {
            best = weight;
        }
    }
    best
}

/// Minimum weak Roman weight by scanning all 3^n value assignments and
/// checking the defending-move condition definitionally.
pub fn oracle_weak_roman_number(g: &Graph) -> usize {
    let n = g.order();
    let adj = adjacency_lists(g);
    let mut best = usize::MAX;
    let total = 3u64.pow(n as u32);
    for code in 0..total {
        let mut values = Vec::with_capacity(n);
        let mut rest = code;
        for _ in 0..n {
            values.push((rest % 3) as u8);
            rest /= 3;
        }
        let weight: usize = values.iter().map(|&x| x as usize).sum();
        if weight >= best {
            continue;
        }
        if oracle_wrdf_valid(&adj, &values) {
            best = weight;
        }
    }
    best
}

pub fn oracle_wrdf_valid(adj: &[Vec<usize>], values: &[u8]) -> bool {
    let n = adj.len();
    (0..n).all(|u| {
        if values[u] > 0 {
            return true;
        }
        adj[u].iter().any(|&v| {
            if values[v] == 0 {
                return false;
            }
            let mut moved = values.to_vec();
            moved[v] -= 1;
            moved[u] += 1;
            let in_set: Vec<bool> = moved.iter().map(|&x| x > 0).collect();
            dominates_naive(adj, &in_set)
        })
    })
}

/// Induced-pattern oracle: scans every |V(P)|-subset and every bijection to
/// the pattern's vertices.
pub fn oracle_contains_pattern(g: &Graph, pattern: Pattern) -> bool {
    let p = pattern.to_graph();
    let k = p.order();
    let n = g.order();
    if n < k {
        return false;
    }
    let mut subset: Vec<usize> = Vec::new();
    subsets_rec(n, k, 0, &mut subset, &mut |sub| {
        let mut perm: Vec<usize> = (0..k).collect();
        permutations_any(&mut perm, 0, &mut |perm| {
            (0..k).all(|i| {
                (i + 1..k).all(|j| p.has_edge(i, j) == g.has_edge(sub[perm[i]], sub[perm[j]]))
            })
        })
    })
}

fn subsets_rec(
    n: usize,
    k: usize,
    start: usize,
    acc: &mut Vec<usize>,
    found: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if acc.len() == k {
        return found(acc);
    }
    for v in start..n {
        acc.push(v);
        if subsets_rec(n, k, v + 1, acc, found) {
            acc.pop();
            return true;
        }
        acc.pop();
    }
    false
}

fn permutations_any(perm: &mut Vec<usize>, at: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if at == perm.len() {
        return check(perm);
    }
    for i in at..perm.len() {
        perm.swap(at, i);
        if permutations_any(perm, at + 1, check) {
            perm.swap(at, i);
            return true;
        }
        perm.swap(at, i);
    }
    false
}

/// Reachability oracle: explicit-stack depth-first search on adjacency lists.
pub fn oracle_is_connected(g: &Graph) -> bool {
    let n = g.order();
    if n <= 1 {
        return true;
    }
    let adj = adjacency_lists(g);
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}
