use std::path::Path;

use domlab::domination::Solver;
use domlab::reduction::{
    build_reduction, parse_dimacs, verify_theorem2_with, ArityPolicy, ReductionError,
    DEFAULT_SAT_CAP,
};
use serde_json::{json, Map, Value};

use crate::input::read_to_string;
use crate::report;
use crate::{ReduceFormat, RunStatus};

pub fn run(
    input: Option<&Path>,
    verify: bool,
    pad: bool,
    format: ReduceFormat,
    max_order: usize,
) -> anyhow::Result<RunStatus> {
    let (source, text) = read_to_string(input)?;
    let input_ref = report::input_ref(&source, 1, None, None);
    let policy = if pad {
        ArityPolicy::PadShort
    } else {
        ArityPolicy::Strict
    };
    let formula = match parse_dimacs(&text, policy) {
        Ok(f) => f,
        Err(e) => {
            println!(
                "{}",
                report::error_report("reduce", input_ref, "parse", e.to_string())
            );
            return Ok(RunStatus::HardErrors);
        }
    };
    let reduction = match build_reduction(&formula) {
        Ok(r) => r,
        Err(e) => {
            println!(
                "{}",
                report::error_report("reduce", input_ref, "cap", e.to_string())
            );
            return Ok(RunStatus::HardErrors);
        }
    };
    let graph6 = reduction.graph().to_graph6();

    if format == ReduceFormat::G6 {
        if verify {
            eprintln!("domlab: --verify is ignored with --format g6");
        }
        println!("{graph6}");
        return Ok(RunStatus::Clean);
    }

    let mut obj = Map::new();
    obj.insert("command".into(), json!("reduce"));
    obj.insert("input".into(), input_ref);
    obj.insert("num_vars".into(), json!(formula.num_vars()));
    obj.insert("num_clauses".into(), json!(formula.num_clauses()));
    obj.insert("order".into(), json!(reduction.graph().order()));
    obj.insert("graph6".into(), json!(graph6));
    obj.insert(
        "labels".into(),
        json!(reduction
            .roles()
            .iter()
            .map(|r| r.name())
            .collect::<Vec<_>>()),
    );
    if verify {
        match verify_theorem2_with(&formula, &Solver::with_cap(max_order), DEFAULT_SAT_CAP) {
            Ok(rep) => {
                obj.insert("verify".into(), report::theorem2(&rep));
            }
            Err(e @ (ReductionError::Solve(_) | ReductionError::Sat(_))) => {
                // The graph itself is still emitted; the verification is
                // skipped with a note rather than failing the run.
                eprintln!("domlab: verification skipped: {e}");
                obj.insert("verify_skipped".into(), json!(e.to_string()));
            }
            Err(e) => {
                println!(
                    "{}",
                    report::error_report("reduce", Value::Object(obj.clone()), "internal", e.to_string())
                );
                return Ok(RunStatus::HardErrors);
            }
        }
    }
    println!("{}", Value::Object(obj));
    Ok(RunStatus::Clean)
}
