use domlab::domination::{
    is_dominating_set, validate_rainbow, validate_weak_roman, RainbowAssignment, RainbowLabel,
    Verdict, WeakRomanAssignment,
};
use domlab::graph::{Graph, VertexSet};
use domlab::graph6::parse_graph6;
use serde_json::{json, Map, Value};

use crate::input::{run_stream, LineOut};
use crate::report;
use crate::{RunStatus, StreamArgs};

/// Re-validates every certificate found in a stream of solve reports: the
/// witness must pass its validator and its weight must equal the reported
/// value. Lines whose certificates all hold produce `"ok": true`; any
/// failing certificate makes the run exit non-zero.
pub fn run(stream: &StreamArgs) -> anyhow::Result<RunStatus> {
    run_stream(stream, |source, line_no, line| {
        let parse_err = |msg: String| {
            LineOut::ParseError(report::error_report(
                "validate",
                report::input_ref(source, line_no, None, Some(line)),
                "parse",
                msg,
            ))
        };
        let value: Value = match serde_json::from_str(line) {
            Ok(v) => v,
            Err(e) => return parse_err(format!("not a JSON report: {e}")),
        };
        let Some(g6) = value.pointer("/input/graph6").and_then(Value::as_str) else {
            return parse_err("report has no input.graph6 field".to_string());
        };
        let g = match parse_graph6(g6) {
            Ok(g) => g,
            Err(e) => return parse_err(format!("embedded graph6: {e}")),
        };
        let Some(results) = value.get("results").and_then(Value::as_object) else {
            return parse_err("report has no results object".to_string());
        };

        let mut checked = Map::new();
        let mut all_ok = true;
        for (name, entry) in results {
            let Some(witness) = entry.get("witness") else {
                continue; // value-only entries carry nothing to re-check
            };
            let Some(reported) = entry.get("value").and_then(Value::as_u64) else {
                checked.insert(name.clone(), json!("missing value"));
                all_ok = false;
                continue;
            };
            let outcome = check_certificate(&g, name, witness, reported as usize);
            all_ok &= outcome == "valid";
            checked.insert(name.clone(), json!(outcome));
        }

        let obj = json!({
            "command": "validate",
            "input": report::input_ref(source, line_no, Some(g6), None),
            "checked": Value::Object(checked),
            "ok": all_ok,
        });
        if all_ok {
            LineOut::Report(obj)
        } else {
            LineOut::HardError(obj)
        }
    })
}

fn check_certificate(g: &Graph, name: &str, witness: &Value, reported: usize) -> String {
    match name {
        "gamma" => {
            let Some(vertices) = as_usize_vec(witness) else {
                return "malformed witness".to_string();
            };
            if vertices.iter().any(|&v| v >= g.order()) {
                return "witness vertex out of range".to_string();
            }
            let set: VertexSet = vertices.iter().copied().collect();
            if set.len() != reported {
                return format!("weight {} != reported {reported}", set.len());
            }
            match is_dominating_set(g, set) {
                Ok(true) => "valid".to_string(),
                Ok(false) => "not dominating".to_string(),
                Err(e) => e.to_string(),
            }
        }
        "gamma_r" => {
            let Some(values) = as_usize_vec(witness) else {
                return "malformed witness".to_string();
            };
            let bytes: Vec<u8> = values.iter().map(|&v| v as u8).collect();
            let Ok(assignment) = WeakRomanAssignment::from_values(&bytes) else {
                return "witness value out of range".to_string();
            };
            if assignment.weight() != reported {
                return format!("weight {} != reported {reported}", assignment.weight());
            }
            match validate_weak_roman(g, &assignment) {
                Ok(Verdict::Valid) => "valid".to_string(),
                Ok(Verdict::Invalid { witness }) => format!("invalid at vertex {witness}"),
                Err(e) => e.to_string(),
            }
        }
        "gamma_r2" => {
            let Some(labels) = witness.as_array() else {
                return "malformed witness".to_string();
            };
            let mut parsed = Vec::with_capacity(labels.len());
            for l in labels {
                match l.as_str() {
                    Some("-") => parsed.push(RainbowLabel::None),
                    Some("1") => parsed.push(RainbowLabel::One),
                    Some("2") => parsed.push(RainbowLabel::Two),
                    Some("12") => parsed.push(RainbowLabel::Both),
                    _ => return "malformed witness".to_string(),
                }
            }
            let assignment = RainbowAssignment::from_labels(&parsed);
            if assignment.weight() != reported {
                return format!("weight {} != reported {reported}", assignment.weight());
            }
            match validate_rainbow(g, &assignment) {
                Ok(Verdict::Valid) => "valid".to_string(),
                Ok(Verdict::Invalid { witness }) => format!("invalid at vertex {witness}"),
                Err(e) => e.to_string(),
            }
        }
        other => format!("unknown parameter {other:?}"),
    }
}

fn as_usize_vec(value: &Value) -> Option<Vec<usize>> {
    value
        .as_array()?
        .iter()
        .map(|v| v.as_u64().map(|x| x as usize))
        .collect()
}
