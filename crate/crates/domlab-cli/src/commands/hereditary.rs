use std::time::Instant;

use anyhow::bail;
use domlab::graph6::parse_graph6;
use domlab::hereditary::{in_gk_cached, is_free, HereditaryError, PairCache, G3_FORBIDDEN};
use serde_json::{json, Map, Value};

use crate::input::{run_stream, LineOut};
use crate::report;
use crate::{RunStatus, StreamArgs};

pub fn run(
    stream: &StreamArgs,
    k: usize,
    check_theorem3: bool,
    max_order: usize,
) -> anyhow::Result<RunStatus> {
    if k == 0 {
        bail!("--k must be positive");
    }
    if check_theorem3 && k != 3 {
        bail!("--check-theorem3 applies only with --k 3");
    }
    // One memo table shared across all input lines.
    let cache = PairCache::for_order(max_order);
    run_stream(stream, |source, line_no, line| {
        let start = Instant::now();
        let g = match parse_graph6(line) {
            Ok(g) => g,
            Err(e) => {
                return LineOut::ParseError(report::error_report(
                    "hereditary",
                    report::input_ref(source, line_no, None, Some(line)),
                    "parse",
                    e.to_string(),
                ))
            }
        };
        let input = report::input_ref(source, line_no, Some(line), None);
        let verdict = match in_gk_cached(&g, k, max_order, &cache) {
            Ok(v) => v,
            Err(e @ HereditaryError::OrderCapExceeded { .. }) => {
                return LineOut::HardError(report::error_report(
                    "hereditary",
                    input,
                    "cap",
                    e.to_string(),
                ))
            }
            Err(e) => {
                return LineOut::HardError(report::error_report(
                    "hereditary",
                    input,
                    "argument",
                    e.to_string(),
                ))
            }
        };
        let mut obj = Map::new();
        obj.insert("command".into(), json!("hereditary"));
        obj.insert("input".into(), input);
        obj.insert("order".into(), json!(g.order()));
        obj.insert("k".into(), json!(k));
        obj.insert("member".into(), json!(verdict.member));
        obj.insert(
            "witness".into(),
            verdict
                .witness
                .map_or(Value::Null, report::vertex_set),
        );
        if check_theorem3 {
            let free = is_free(&g, &G3_FORBIDDEN);
            obj.insert("free".into(), json!(free.free));
            obj.insert("theorem3_agreement".into(), json!(verdict.member == free.free));
        }
        obj.insert("elapsed_ms".into(), report::elapsed_ms(start));
        LineOut::Report(Value::Object(obj))
    })
}
