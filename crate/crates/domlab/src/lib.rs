//! Exact computation for 2-rainbow domination and weak Roman domination on
//! small graphs: bit-parallel graph representation with graph6 I/O, weight
//! bounded exact solvers with certificate witnesses, recognizers and
//! generators for the graphs attaining the extremal equality
//! `gamma_r2 = 2 * gamma_r`, a 3SAT reduction gadget, and hereditary-class
//! membership checks.

pub mod domination;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod hereditary;
pub mod reduction;

pub use domination::{
    domination_number, is_dominating_set, rainbow_number, validate_rainbow, validate_weak_roman,
    weak_roman_number, RainbowAssignment, RainbowLabel, SolveResult, Solver, Verdict,
    WeakRomanAssignment, DEFAULT_ORDER_CAP,
};
pub use extremal::{
    extract_decomposition, generate_triangle_system, generate_two_triangles_matching, is_extremal,
    recognize_c1, recognize_c2, verify_decomposition, ExtremalCheck, ExtremalClass,
    ExtremalDecomposition,
};
pub use graph::{contains_induced, Graph, GraphError, Pattern, VertexSet, MAX_ORDER};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use hereditary::{check_theorem3, in_gk, is_free, HereditaryVerdict, PairCache};
pub use reduction::{
    build_reduction, parse_dimacs, sat_brute_force, truth_assignment_to_wrdf, verify_theorem2,
    ArityPolicy, CnfFormula, ReductionGraph, Theorem2Report,
};
