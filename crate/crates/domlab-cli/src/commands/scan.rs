use std::time::Instant;

use domlab::domination::Solver;
use domlab::extremal::recognize_c2;
use domlab::graph::{contains_induced, Pattern};
use domlab::graph6::parse_graph6;
use serde_json::{json, Map, Value};

use crate::input::{run_stream, LineOut};
use crate::report;
use crate::{RunStatus, StreamArgs};

#[derive(Clone, Copy)]
pub struct Filters {
    pub find_extremal: bool,
    pub connected: bool,
    pub triangle_free: bool,
    pub k4_k4e_free: bool,
    pub k5_free: bool,
}

pub fn run(stream: &StreamArgs, filters: Filters, max_order: usize) -> anyhow::Result<RunStatus> {
    let solver = Solver::with_cap(max_order);
    run_stream(stream, |source, line_no, line| {
        let start = Instant::now();
        let g = match parse_graph6(line) {
            Ok(g) => g,
            Err(e) => {
                return LineOut::ParseError(report::error_report(
                    "scan",
                    report::input_ref(source, line_no, None, Some(line)),
                    "parse",
                    e.to_string(),
                ))
            }
        };
        // Structural pre-filters, cheapest first, before any solving.
        if filters.connected && !g.is_connected() {
            return LineOut::Skip;
        }
        if filters.triangle_free && contains_induced(&g, Pattern::K3).is_some() {
            return LineOut::Skip;
        }
        if filters.k4_k4e_free
            && (contains_induced(&g, Pattern::K4).is_some()
                || contains_induced(&g, Pattern::Diamond).is_some())
        {
            return LineOut::Skip;
        }
        if filters.k5_free && contains_induced(&g, Pattern::K5).is_some() {
            return LineOut::Skip;
        }
        let input = report::input_ref(source, line_no, Some(line), None);
        let (gamma_r, gamma_r2) = match (solver.weak_roman_value(&g), solver.rainbow_value(&g)) {
            (Ok(r), Ok(r2)) => (r, r2),
            (Err(e), _) | (_, Err(e)) => {
                return LineOut::HardError(report::error_report(
                    "scan",
                    input,
                    "cap",
                    e.to_string(),
                ))
            }
        };
        let extremal = gamma_r2 == 2 * gamma_r;
        if filters.find_extremal && !extremal {
            return LineOut::Skip;
        }
        let mut obj = Map::new();
        obj.insert("command".into(), json!("scan"));
        obj.insert("input".into(), input);
        obj.insert("order".into(), json!(g.order()));
        obj.insert("gamma_r".into(), json!(gamma_r));
        obj.insert("gamma_r2".into(), json!(gamma_r2));
        obj.insert("extremal".into(), json!(extremal));
        // With both Corollary-2 premises enforced by filters, the structural
        // classification is well-defined; include it.
        if filters.connected && filters.k4_k4e_free {
            let class = recognize_c2(&g).expect("filters guarantee the preconditions");
            obj.insert("class".into(), report::classification(&class));
        }
        obj.insert("elapsed_ms".into(), report::elapsed_ms(start));
        LineOut::Report(Value::Object(obj))
    })
}
