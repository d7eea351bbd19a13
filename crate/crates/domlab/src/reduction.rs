//! The 3SAT gadget: parse DIMACS formulas, build the K5-free graph whose
//! weak Roman domination number encodes satisfiability, and verify both
//! directions of the equivalence with the exact solvers.

use thiserror::Error;

use crate::domination::{SolveError, Solver, WeakRomanAssignment};
use crate::graph::{contains_induced, Graph, GraphError, Pattern};

/// Default cap on the variable count accepted by the brute-force SAT check.
pub const DEFAULT_SAT_CAP: usize = 20;

/// A literal: a 1-based variable index with a polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn from_dimacs(lit: i64) -> Option<Literal> {
        if lit == 0 {
            return None;
        }
        Some(Literal {
            var: lit.unsigned_abs() as usize,
            positive: lit > 0,
        })
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64;
        if self.positive {
            v
        } else {
            -v
        }
    }

    fn holds_under(self, assignment: &[bool]) -> bool {
        assignment[self.var - 1] == self.positive
    }
}

pub type Clause = [Literal; 3];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("need at least 2 clauses, got {0}")]
    TooFewClauses(usize),
    #[error("literal references variable {var} but the formula has {num_vars}")]
    VarOutOfRange { var: usize, num_vars: usize },
    #[error("literal references variable 0")]
    VarZero,
}

/// A 3SAT instance: clauses of exactly three literals (repetition allowed)
/// over variables `1..=num_vars`, with at least two clauses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<CnfFormula, FormulaError> {
        if clauses.len() < 2 {
            return Err(FormulaError::TooFewClauses(clauses.len()));
        }
        for clause in &clauses {
            for lit in clause {
                if lit.var == 0 {
                    return Err(FormulaError::VarZero);
                }
                if lit.var > num_vars {
                    return Err(FormulaError::VarOutOfRange {
                        var: lit.var,
                        num_vars,
                    });
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self
                .clauses
                .iter()
                .all(|c| c.iter().any(|lit| lit.holds_under(assignment)))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DimacsError {
    #[error("no 'p cnf' header found")]
    MissingHeader,
    #[error("malformed 'p' header on line {line}")]
    BadHeader { line: usize },
    #[error("duplicate 'p' header on line {line}")]
    DuplicateHeader { line: usize },
    #[error("unparsable token {token:?} on line {line}")]
    BadToken { token: String, line: usize },
    #[error("literal {literal} on line {line} outside the declared {num_vars} variables")]
    LiteralOutOfRange {
        literal: i64,
        num_vars: usize,
        line: usize,
    },
    #[error("clause {clause} has {arity} literals; expected exactly 3")]
    WrongArity { clause: usize, arity: usize },
    #[error("last clause is not 0-terminated")]
    UnterminatedClause,
    #[error("header declares {declared} clauses but {found} were read")]
    ClauseCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

/// What to do with clauses of fewer than three literals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArityPolicy {
    /// Reject anything that is not exactly three literals.
    Strict,
    /// Pad one- and two-literal clauses by repeating the last literal.
    PadShort,
}

/// Parses standard DIMACS CNF: a `p cnf <vars> <clauses>` header, `c`
/// comment lines, and zero-terminated literal lists (which may span lines).
pub fn parse_dimacs(text: &str, policy: ArityPolicy) -> Result<CnfFormula, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut tokens: Vec<(i64, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(DimacsError::DuplicateHeader { line: line_no });
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parsed = match parts.as_slice() {
                ["p", "cnf", n, m] => n.parse().ok().zip(m.parse().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or(DimacsError::BadHeader { line: line_no })?);
            continue;
        }
        if header.is_none() {
            return Err(DimacsError::MissingHeader);
        }
        for token in line.split_whitespace() {
            let lit: i64 = token.parse().map_err(|_| DimacsError::BadToken {
                token: token.to_string(),
                line: line_no,
            })?;
            tokens.push((lit, line_no));
        }
    }
    let (num_vars, declared) = header.ok_or(DimacsError::MissingHeader)?;

    let mut raw_clauses: Vec<Vec<Literal>> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    for (lit, line) in tokens {
        match Literal::from_dimacs(lit) {
            None => raw_clauses.push(std::mem::take(&mut current)),
            Some(l) => {
                if l.var > num_vars {
                    return Err(DimacsError::LiteralOutOfRange {
                        literal: lit,
                        num_vars,
                        line,
                    });
                }
                current.push(l);
            }
        }
    }
    if !current.is_empty() {
        return Err(DimacsError::UnterminatedClause);
    }
    if raw_clauses.len() != declared {
        return Err(DimacsError::ClauseCountMismatch {
            declared,
            found: raw_clauses.len(),
        });
    }

    let mut clauses = Vec::with_capacity(raw_clauses.len());
    for (i, c) in raw_clauses.into_iter().enumerate() {
        let clause = match (c.len(), policy) {
            (3, _) => [c[0], c[1], c[2]],
            (1, ArityPolicy::PadShort) => [c[0], c[0], c[0]],
            (2, ArityPolicy::PadShort) => [c[0], c[1], c[1]],
            (arity, _) => {
                return Err(DimacsError::WrongArity {
                    clause: i + 1,
                    arity,
                })
            }
        };
        clauses.push(clause);
    }
    Ok(CnfFormula::new(num_vars, clauses)?)
}

/// Role of a vertex in the reduction graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    /// The vertex named after the positive literal of variable `i`.
    PositiveLiteral(usize),
    /// The vertex named after the negated literal of variable `i`.
    NegativeLiteral(usize),
    /// One of the two unnamed vertices completing the K4 gadget of `var`.
    Filler { var: usize, slot: u8 },
    /// The vertex of clause `j` (1-based).
    Clause(usize),
    /// First of the two extra vertices adjacent to all clause vertices.
    AnchorA,
    /// Second extra vertex.
    AnchorB,
}

impl VertexRole {
    pub fn name(self) -> String {
        match self {
            VertexRole::PositiveLiteral(i) => format!("x{i}"),
            VertexRole::NegativeLiteral(i) => format!("!x{i}"),
            VertexRole::Filler { var, slot } => format!("x{var}.f{slot}"),
            VertexRole::Clause(j) => format!("c{j}"),
            VertexRole::AnchorA => "a".to_string(),
            VertexRole::AnchorB => "b".to_string(),
        }
    }
}

/// The reduction graph of a formula with `n` variables and `m` clauses:
/// one K4 gadget per variable, one vertex per clause wired to the literals
/// it contains, and two extra vertices `a`, `b` adjacent to each other and
/// to every clause vertex. Order `4n + m + 2`, K5-free.
///
/// Canonical numbering: the gadget of variable `i` occupies vertices
/// `4(i-1)..4(i-1)+4` with the positive literal first, then the negated
/// literal, then the two fillers; clause `j` sits at `4n + (j-1)`; `a` and
/// `b` come last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionGraph {
    graph: Graph,
    roles: Vec<VertexRole>,
    formula: CnfFormula,
}

impl ReductionGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn roles(&self) -> &[VertexRole] {
        &self.roles
    }

    pub fn formula(&self) -> &CnfFormula {
        &self.formula
    }

    pub fn literal_vertex(&self, lit: Literal) -> usize {
        let base = 4 * (lit.var - 1);
        if lit.positive {
            base
        } else {
            base + 1
        }
    }

    pub fn clause_vertex(&self, j: usize) -> usize {
        4 * self.formula.num_vars() + (j - 1)
    }

    pub fn anchor_a(&self) -> usize {
        self.graph.order() - 2
    }

    pub fn anchor_b(&self) -> usize {
        self.graph.order() - 1
    }
}

/// Builds the reduction graph; deterministic under the canonical numbering.
pub fn build_reduction(f: &CnfFormula) -> Result<ReductionGraph, GraphError> {
    let n = f.num_vars();
    let m = f.num_clauses();
    let order = 4 * n + m + 2;
    let mut g = Graph::empty(order)?;
    let mut roles = Vec::with_capacity(order);
    for i in 1..=n {
        let base = 4 * (i - 1);
        roles.extend([
            VertexRole::PositiveLiteral(i),
            VertexRole::NegativeLiteral(i),
            VertexRole::Filler { var: i, slot: 0 },
            VertexRole::Filler { var: i, slot: 1 },
        ]);
        for a in base..base + 4 {
            for b in (a + 1)..base + 4 {
                g.add_edge(a, b);
            }
        }
    }
    let clause_base = 4 * n;
    for (j, clause) in f.clauses().iter().enumerate() {
        roles.push(VertexRole::Clause(j + 1));
        let cj = clause_base + j;
        for lit in clause {
            let base = 4 * (lit.var - 1);
            let x = if lit.positive { base } else { base + 1 };
            // Duplicate literals wire a single edge; the graph is simple.
            g.add_edge(x, cj);
        }
    }
    let a = order - 2;
    let b = order - 1;
    roles.extend([VertexRole::AnchorA, VertexRole::AnchorB]);
    g.add_edge(a, b);
    for j in 0..m {
        g.add_edge(a, clause_base + j);
        g.add_edge(b, clause_base + j);
    }
    Ok(ReductionGraph {
        graph: g,
        roles,
        formula: f.clone(),
    })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SatError {
    #[error("{num_vars} variables exceed the brute-force cap {cap}")]
    TooManyVariables { num_vars: usize, cap: usize },
}

/// Scans all `2^n` truth assignments in counting order and returns the first
/// satisfying one, if any.
pub fn sat_brute_force(f: &CnfFormula) -> Result<Option<Vec<bool>>, SatError> {
    sat_brute_force_capped(f, DEFAULT_SAT_CAP)
}

pub fn sat_brute_force_capped(f: &CnfFormula, cap: usize) -> Result<Option<Vec<bool>>, SatError> {
    let n = f.num_vars();
    if n > cap {
        return Err(SatError::TooManyVariables { num_vars: n, cap });
    }
    for bits in 0u64..1 << n {
        let assignment: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
        if f.evaluate(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("assignment has {found} values but the formula has {expected} variables")]
    WrongLength { expected: usize, found: usize },
    #[error("truth assignment does not satisfy the formula")]
    NotSatisfying,
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Sat(#[from] SatError),
}

/// Converts a satisfying truth assignment into the canonical weak Roman
/// dominating function of weight `n + 1`: value 1 on anchor `a` and on the
/// vertex of every true literal, 0 elsewhere.
pub fn truth_assignment_to_wrdf(
    r: &ReductionGraph,
    t: &[bool],
) -> Result<WeakRomanAssignment, ReductionError> {
    let n = r.formula.num_vars();
    if t.len() != n {
        return Err(ReductionError::WrongLength {
            expected: n,
            found: t.len(),
        });
    }
    if !r.formula.evaluate(t) {
        return Err(ReductionError::NotSatisfying);
    }
    let mut values = vec![0u8; r.graph.order()];
    values[r.anchor_a()] = 1;
    for (i, &true_positive) in t.iter().enumerate() {
        let lit = Literal {
            var: i + 1,
            positive: true_positive,
        };
        values[r.literal_vertex(lit)] = 1;
    }
    Ok(WeakRomanAssignment::from_values(&values).expect("values in range"))
}

/// Outcome of checking the reduction's claims on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem2Report {
    pub num_vars: usize,
    pub num_clauses: usize,
    pub order: usize,
    pub k5_free: bool,
    pub gamma_r2: usize,
    /// Expected to equal `2n + 2` on every instance.
    pub gamma_r2_ok: bool,
    pub gamma_r: usize,
    /// `gamma_r >= n + 1` must hold unconditionally.
    pub lower_bound_ok: bool,
    pub satisfying: Option<Vec<bool>>,
    /// `gamma_r == n + 1` must hold exactly when the formula is satisfiable.
    pub equivalence_ok: bool,
}

impl Theorem2Report {
    pub fn all_ok(&self) -> bool {
        self.k5_free && self.gamma_r2_ok && self.lower_bound_ok && self.equivalence_ok
    }
}

/// Builds the reduction graph for `f`, solves both parameters exactly, runs
/// the brute-force SAT check, and reports every claimed identity.
pub fn verify_theorem2(f: &CnfFormula) -> Result<Theorem2Report, ReductionError> {
    verify_theorem2_with(f, &Solver::default(), DEFAULT_SAT_CAP)
}

pub fn verify_theorem2_with(
    f: &CnfFormula,
    solver: &Solver,
    sat_cap: usize,
) -> Result<Theorem2Report, ReductionError> {
    let r = build_reduction(f)?;
    let g = r.graph();
    let n = f.num_vars();
    let gamma_r2 = solver.rainbow_value(g)?;
    let gamma_r = solver.weak_roman_value(g)?;
    let satisfying = sat_brute_force_capped(f, sat_cap)?;
    Ok(Theorem2Report {
        num_vars: n,
        num_clauses: f.num_clauses(),
        order: g.order(),
        k5_free: contains_induced(g, Pattern::K5).is_none(),
        gamma_r2,
        gamma_r2_ok: gamma_r2 == 2 * n + 2,
        gamma_r,
        lower_bound_ok: gamma_r > n,
        equivalence_ok: (gamma_r == n + 1) == satisfying.is_some(),
        satisfying,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{validate_weak_roman, Verdict};

    fn lit(l: i64) -> Literal {
        Literal::from_dimacs(l).unwrap()
    }

    fn formula(num_vars: usize, clauses: &[[i64; 3]]) -> CnfFormula {
        CnfFormula::new(
            num_vars,
            clauses
                .iter()
                .map(|c| [lit(c[0]), lit(c[1]), lit(c[2])])
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn dimacs_parsing() {
        let f = parse_dimacs("p cnf 2 2\n1 2 2 0\n-1 2 2 0\n", ArityPolicy::Strict).unwrap();
        assert_eq!(f.num_vars(), 2);
        assert_eq!(f.num_clauses(), 2);
        assert_eq!(f.clauses()[0], [lit(1), lit(2), lit(2)]);
        assert_eq!(f.clauses()[1], [lit(-1), lit(2), lit(2)]);

        // Comments, blank lines, clauses spanning lines.
        let f = parse_dimacs(
            "c header comment\np cnf 2 2\n\n1 2\n2 0 -1 2 2 0\n",
            ArityPolicy::Strict,
        )
        .unwrap();
        assert_eq!(f.num_clauses(), 2);

        assert_eq!(
            parse_dimacs("p cnf 1 1\n1 1 1 0\n", ArityPolicy::Strict),
            Err(DimacsError::Formula(FormulaError::TooFewClauses(1)))
        );
        assert_eq!(
            parse_dimacs("p cnf 1 2\n1 0\n-1 0\n", ArityPolicy::Strict),
            Err(DimacsError::WrongArity { clause: 1, arity: 1 })
        );
        let f = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n", ArityPolicy::PadShort).unwrap();
        assert_eq!(f.clauses()[0], [lit(1); 3]);
        assert_eq!(f.clauses()[1], [lit(-1); 3]);

        assert_eq!(
            parse_dimacs("p cnf 1 1\n1 2 1 0\n", ArityPolicy::Strict),
            Err(DimacsError::LiteralOutOfRange {
                literal: 2,
                num_vars: 1,
                line: 2
            })
        );
        assert_eq!(
            parse_dimacs("1 2 3 0", ArityPolicy::Strict),
            Err(DimacsError::MissingHeader)
        );
        assert_eq!(
            parse_dimacs("p cnf 2 2\n1 2 2 0\n-1 2 2\n", ArityPolicy::Strict),
            Err(DimacsError::UnterminatedClause)
        );
        assert_eq!(
            parse_dimacs("p cnf 2 3\n1 2 2 0\n-1 2 2 0\n", ArityPolicy::Strict),
            Err(DimacsError::ClauseCountMismatch {
                declared: 3,
                found: 2
            })
        );
        assert!(matches!(
            parse_dimacs("p cnf x 2\n", ArityPolicy::Strict),
            Err(DimacsError::BadHeader { line: 1 })
        ));
        assert!(matches!(
            parse_dimacs("p cnf 2 2\n1 two 2 0\n", ArityPolicy::Strict),
            Err(DimacsError::BadToken { line: 2, .. })
        ));
    }

    #[test]
    fn reduction_shape() {
        let f = formula(1, &[[1, 1, 1], [-1, -1, -1]]);
        let r = build_reduction(&f).unwrap();
        assert_eq!(r.graph().order(), 8);

        let f = formula(2, &[[1, 2, 2], [-1, 2, 2]]);
        let r = build_reduction(&f).unwrap();
        let g = r.graph();
        assert_eq!(g.order(), 12);
        assert!(contains_induced(g, Pattern::K5).is_none());
        // Each gadget induces a K4.
        for base in [0, 4] {
            let gadget = (base..base + 4).collect();
            assert!(g.is_complete_set(gadget).unwrap());
        }
        // Clause wiring: c1 = vertex 8 sees x1 (0) and x2 (4).
        assert!(g.has_edge(8, 0) && g.has_edge(8, 4));
        assert!(!g.has_edge(8, 1));
        // c2 sees !x1 (1) and x2 (4).
        assert!(g.has_edge(9, 1) && g.has_edge(9, 4));
        // Anchors see each other and both clause vertices.
        assert!(g.has_edge(10, 11));
        assert!(g.has_edge(10, 8) && g.has_edge(10, 9));
        assert!(g.has_edge(11, 8) && g.has_edge(11, 9));
        // No stray edges out of the gadgets: fillers have degree 3.
        for filler in [2, 3, 6, 7] {
            assert_eq!(g.degree(filler), 3);
        }
    }

    #[test]
    fn reduction_is_deterministic() {
        let f = formula(2, &[[1, 2, 2], [-1, 2, 2]]);
        let a = build_reduction(&f).unwrap();
        let b = build_reduction(&f).unwrap();
        assert_eq!(a.graph().to_graph6(), b.graph().to_graph6());
    }

    #[test]
    fn brute_force_sat() {
        let f = formula(2, &[[1, 2, 2], [-1, 2, 2]]);
        let t = sat_brute_force(&f).unwrap().unwrap();
        assert!(f.evaluate(&t));
        assert!(t[1], "x2 = true is forced in every satisfying assignment");

        let unsat = formula(1, &[[1, 1, 1], [-1, -1, -1]]);
        assert_eq!(sat_brute_force(&unsat).unwrap(), None);

        // A clause containing both polarities of a variable is a tautology.
        let taut = formula(1, &[[1, -1, 1], [1, -1, -1]]);
        assert!(sat_brute_force(&taut).unwrap().is_some());

        let wide = CnfFormula::new(
            25,
            vec![[lit(1), lit(2), lit(3)], [lit(-1), lit(2), lit(3)]],
        )
        .unwrap();
        assert_eq!(
            sat_brute_force(&wide),
            Err(SatError::TooManyVariables {
                num_vars: 25,
                cap: DEFAULT_SAT_CAP
            })
        );
    }

    #[test]
    fn satisfying_assignment_gives_valid_wrdf() {
        let f = formula(2, &[[1, 2, 2], [-1, 2, 2]]);
        let r = build_reduction(&f).unwrap();
        // x1 = false, x2 = true: positive on a, !x1 and x2, weight n+1 = 3.
        let w = truth_assignment_to_wrdf(&r, &[false, true]).unwrap();
        assert_eq!(w.weight(), 3);
        assert_eq!(w.value(r.anchor_a()), 1);
        assert_eq!(w.value(r.literal_vertex(lit(-1))), 1);
        assert_eq!(w.value(r.literal_vertex(lit(2))), 1);
        assert_eq!(
            validate_weak_roman(r.graph(), &w).unwrap(),
            Verdict::Valid
        );

        assert_eq!(
            truth_assignment_to_wrdf(&r, &[true, false]),
            Err(ReductionError::NotSatisfying)
        );
        assert_eq!(
            truth_assignment_to_wrdf(&r, &[true]),
            Err(ReductionError::WrongLength {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn theorem2_satisfiable_instance() {
        let f = formula(2, &[[1, 2, 2], [-1, 2, 2]]);
        let report = verify_theorem2(&f).unwrap();
        assert_eq!(report.order, 12);
        assert_eq!(report.gamma_r2, 6);
        assert_eq!(report.gamma_r, 3);
        assert!(report.satisfying.is_some());
        assert!(report.all_ok(), "{report:?}");
    }

    #[test]
    fn theorem2_unsatisfiable_instance() {
        let f = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n", ArityPolicy::PadShort).unwrap();
        let report = verify_theorem2(&f).unwrap();
        assert_eq!(report.order, 8);
        assert_eq!(report.gamma_r2, 4);
        assert_ne!(report.gamma_r, 2);
        assert!(report.satisfying.is_none());
        assert!(report.all_ok(), "{report:?}");
    }

    #[test]
    fn role_names_cover_all_vertices() {
        let f = formula(1, &[[1, 1, 1], [-1, -1, -1]]);
        let r = build_reduction(&f).unwrap();
        let names: Vec<String> = r.roles().iter().map(|role| role.name()).collect();
        assert_eq!(
            names,
            vec!["x1", "!x1", "x1.f0", "x1.f1", "c1", "c2", "a", "b"]
        );
    }
}
