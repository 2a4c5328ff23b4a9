//! Result serialization: frozen CSV tables, JSON mirrors, and the Cayley
//! graph dump format.
//!
//! CSV headers are frozen; any future columns append on the right.

use std::io::Write;

use anyhow::Result;
use braidwalk_core::cayley::CayleyGraph;
use braidwalk_core::group::Sign;
use braidwalk_core::ldp::RateReportRow;
use braidwalk_core::walk::WalkReport;
use serde_json::{json, Value};

use crate::fmt::{fmt_rational, fmt_real};

pub const WALK_CSV_HEADER: &str =
    "step,parity,empirical_mean,exact_limit,tv_distance,std_error";
pub const LDP_CSV_HEADER: &str =
    "n,N,x,model,log_prob,neg_log_prob_over_N,I_x,kappa_asymptotic_log";

fn parity_name(odd: bool) -> &'static str {
    if odd {
        "odd"
    } else {
        "even"
    }
}

pub fn write_walk_csv(out: &mut dyn Write, report: &WalkReport) -> Result<()> {
    writeln!(out, "{WALK_CSV_HEADER}")?;
    for row in &report.rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            row.step,
            parity_name(row.odd_parity),
            fmt_real(row.empirical_mean),
            fmt_rational(&row.exact_limit),
            fmt_real(row.tv_distance),
            fmt_real(row.std_error),
        )?;
    }
    Ok(())
}

pub fn walk_report_json(report: &WalkReport, group: Value) -> Value {
    json!({
        "group": group,
        "seed": report.seed,
        "trials": report.trials,
        "rows": report.rows.iter().map(|row| json!({
            "step": row.step,
            "parity": parity_name(row.odd_parity),
            "empirical_mean": row.empirical_mean,
            "exact_limit": fmt_rational(&row.exact_limit),
            "tv_distance": row.tv_distance,
            "std_error": row.std_error,
        })).collect::<Vec<Value>>(),
    })
}

pub fn write_ldp_csv(out: &mut dyn Write, rows: &[RateReportRow]) -> Result<()> {
    writeln!(out, "{LDP_CSV_HEADER}")?;
    for row in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            row.n,
            row.blocks,
            fmt_rational(&row.x),
            row.model.name(),
            fmt_real(row.log_prob),
            fmt_real(row.neg_log_prob_over_blocks),
            fmt_real(row.rate_value),
            row.kappa_asymptotic_log.map(fmt_real).unwrap_or_default(),
        )?;
    }
    Ok(())
}

pub fn ldp_report_json(rows: &[RateReportRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| {
                json!({
                    "n": row.n,
                    "N": row.blocks,
                    "x": fmt_rational(&row.x),
                    "model": row.model.name(),
                    "log_prob": row.log_prob,
                    "neg_log_prob_over_N": row.neg_log_prob_over_blocks,
                    "I_x": row.rate_value,
                    "kappa_asymptotic_log": row.kappa_asymptotic_log,
                })
            })
            .collect(),
    )
}

/// Dumps the graph as `u v gen sign` edge lines followed by a
/// `# distances` block of `v d` lines. Generators print 1-based.
pub fn write_graph_dump(out: &mut dyn Write, graph: &CayleyGraph) -> Result<()> {
    for (u, v, letter) in graph.edges() {
        let sign = match letter.sign {
            Sign::Plus => 1,
            Sign::Minus => -1,
        };
        writeln!(out, "{u} {v} {} {sign}", letter.generator + 1)?;
    }
    writeln!(out, "# distances")?;
    for v in 0..graph.vertex_count() as u32 {
        writeln!(out, "{v} {}", graph.distance(v))?;
    }
    Ok(())
}
