//! Timing probe for the exhaustive labeled-graph sweeps: solves both
//! parameters for every labeled graph of order 6 and a sample of order 7,
//! printing the per-graph cost. Useful when touching the solver hot paths.

use std::time::Instant;

use domlab::graph::Graph;
use domlab::Solver;

fn graph_from_bits(order: usize, bits: u64) -> Graph {
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

fn main() {
    let solver = Solver::default();
    for (order, step) in [(6usize, 1u64), (7, 64)] {
        let total = 1u64 << (order * (order - 1) / 2);
        let start = Instant::now();
        let mut checksum = 0usize;
        let mut count = 0u64;
        let mut bits = 0;
        while bits < total {
            let g = graph_from_bits(order, bits);
            checksum += solver.weak_roman_value(&g).unwrap();
            checksum += solver.rainbow_value(&g).unwrap();
            count += 1;
            bits += step;
        }
        let dt = start.elapsed();
        println!(
            "order {order}: {count} graphs in {dt:.2?} ({:.2} us/graph, checksum {checksum})",
            dt.as_secs_f64() * 1e6 / count as f64
        );
    }
}
