use adica_core::adic::{build_bv, coding_vs_diagram, BuildMode, BuildOptions, RankReport};
use adica_core::bratteli::export_dot;
use adica_core::language::factors;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::io::{emit, read_directive};
use crate::{BuildArgs, ModeArg, ReportFormat};

pub const DEFAULT_MAX_DEPTH: usize = 6;

pub fn report_json(r: &RankReport) -> Value {
    json!({
        "depth": r.depth,
        "mode": match r.mode { BuildMode::Strict => "strict", BuildMode::Alternating => "alt" },
        "rank_bound": r.max_vertices,
        "vertex_counts": r.vertex_counts,
        "injectivity_scale": r.injectivity_scale,
        "periodic": r.periodic_tail_detected,
        "morse_hedlund_witness": r.morse_hedlund_witness,
        "complexity": r.complexity,
        "verdict": r.verdict.to_string(),
    })
}

pub fn report_text(r: &RankReport) -> String {
    let mode = match r.mode {
        BuildMode::Strict => "strict",
        BuildMode::Alternating => "alternating",
    };
    let mut s = format!("depth {} ({mode})\n", r.depth);
    s += &format!("rank bound: {} (vertices per level {:?})\n", r.max_vertices, r.vertex_counts);
    s += &format!("injective on the source language up to length {}\n", r.injectivity_scale);
    s += &format!("complexity p(1..): {:?}\n", r.complexity);
    match r.morse_hedlund_witness {
        Some(w) => s += &format!("periodic tail: yes (p({w}) <= {w})\n"),
        None => s += "periodic tail: no\n",
    }
    s += &format!("verdict: {}\n", r.verdict);
    s
}

pub fn run(args: BuildArgs, json: bool) -> Result<(), CliError> {
    let d = read_directive(&args.directive)?;
    let depth = match args.depth {
        Some(depth) => depth,
        None if d.len() >= 2 => DEFAULT_MAX_DEPTH.min(d.len() - 1),
        None => {
            return Err(CliError::usage(
                "InsufficientDirective: need at least 2 entries to build a diagram",
            ))
        }
    };
    let opts = BuildOptions {
        mode: match args.mode {
            ModeArg::Strict => BuildMode::Strict,
            ModeArg::Alt => BuildMode::Alternating,
        },
        scale: args.scale,
        ..BuildOptions::default()
    };
    let (diag, report) = build_bv(&d, depth, &opts)?;
    let coding = coding_vs_diagram(&diag, &factors(&d, args.coding_len)?, args.steps)?;

    if let Some(target) = &args.dot {
        emit(target, &export_dot(&diag))?;
    }
    if json || args.report == ReportFormat::Json {
        let mut out = report_json(&report);
        out["schema"] = json!(1);
        out["coding_match_len"] = json!(coding.match_len);
        out["coding_len"] = json!(coding.max_len);
        out["coding_complete"] = json!(coding.complete);
        out["coding_prefix"] = json!(coding.coding.as_str());
        println!("{out}");
    } else if args.dot.as_deref().is_none_or(|p| p.as_os_str() != "-") {
        print!("{}", report_text(&report));
        println!(
            "orbit coding ({} letters{}): factors agree with the language up to length {} of {}",
            coding.coding.len(),
            if coding.complete { "" } else { ", stopped at the maximal path" },
            coding.match_len,
            coding.max_len
        );
    }
    Ok(())
}
