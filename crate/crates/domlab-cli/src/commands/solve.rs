use std::time::Instant;

use domlab::domination::{SolveError, Solver};
use domlab::graph6::parse_graph6;
use serde_json::{json, Map, Value};

use crate::input::{run_stream, LineOut};
use crate::report;
use crate::{Param, RunStatus, StreamArgs};

pub fn run(
    stream: &StreamArgs,
    param: Param,
    certificate: bool,
    max_order: usize,
) -> anyhow::Result<RunStatus> {
    let solver = Solver::with_cap(max_order);
    run_stream(stream, |source, line_no, line| {
        let start = Instant::now();
        let g = match parse_graph6(line) {
            Ok(g) => g,
            Err(e) => {
                return LineOut::ParseError(report::error_report(
                    "solve",
                    report::input_ref(source, line_no, None, Some(line)),
                    "parse",
                    e.to_string(),
                ))
            }
        };
        let input = report::input_ref(source, line_no, Some(line), None);
        let mut results = Map::new();
        let solved: Result<(), SolveError> = (|| {
            if matches!(param, Param::Gamma | Param::All) {
                let entry = if certificate {
                    let r = solver.domination_number(&g)?;
                    json!({ "value": r.value, "witness": report::vertex_set(r.witness) })
                } else {
                    json!({ "value": solver.domination_value(&g)? })
                };
                results.insert("gamma".into(), entry);
            }
            if matches!(param, Param::GammaR | Param::All) {
                let entry = if certificate {
                    let r = solver.weak_roman_number(&g)?;
                    json!({ "value": r.value, "witness": report::weak_roman_witness(&r.witness) })
                } else {
                    json!({ "value": solver.weak_roman_value(&g)? })
                };
                results.insert("gamma_r".into(), entry);
            }
            if matches!(param, Param::GammaR2 | Param::All) {
                let entry = if certificate {
                    let r = solver.rainbow_number(&g)?;
                    json!({ "value": r.value, "witness": report::rainbow_witness(&r.witness) })
                } else {
                    json!({ "value": solver.rainbow_value(&g)? })
                };
                results.insert("gamma_r2".into(), entry);
            }
            Ok(())
        })();
        match solved {
            Ok(()) => LineOut::Report(json!({
                "command": "solve",
                "input": input,
                "order": g.order(),
                "results": Value::Object(results),
                "elapsed_ms": report::elapsed_ms(start),
            })),
            Err(e) => LineOut::HardError(report::error_report(
                "solve",
                input,
                "cap",
                e.to_string(),
            )),
        }
    })
}
