use adica_core::bratteli::{export_dot, BratteliDiagram};
use adica_core::language::DirectiveSequence;
use adica_core::{Morphism, Word};
use serde_json::json;

use crate::error::CliError;
use crate::io::{emit, read_directive};
use crate::BvCmd;

/// The diagram whose levels `2..=depth+1` read the first `depth` morphisms.
pub fn diagram(d: &DirectiveSequence, depth: usize) -> Result<BratteliDiagram, CliError> {
    if depth == 0 || depth > d.len() {
        return Err(CliError::usage(format!(
            "InsufficientDirective: depth {depth} needs 1..={} morphisms",
            d.len()
        )));
    }
    let ms: Vec<Morphism> = d.morphisms().take(depth).cloned().collect();
    Ok(BratteliDiagram::build_from_morphisms(&ms)?)
}

pub fn run(cmd: BvCmd, json: bool) -> Result<(), CliError> {
    match cmd {
        BvCmd::Build {
            directive,
            depth,
            dot,
        } => {
            let diag = diagram(&read_directive(&directive)?, depth)?;
            if let Some(target) = &dot {
                emit(target, &export_dot(&diag))?;
            }
            let to_stdout = dot.as_deref().is_some_and(|p| p.as_os_str() == "-");
            if json {
                let edges: Vec<usize> = (1..=diag.top_level()).map(|l| diag.edge_count(l)).collect();
                println!(
                    "{}",
                    json!({"schema": 1, "depth": diag.depth(), "vertex_counts": diag.vertex_counts(), "edge_counts": edges})
                );
            } else if !to_stdout {
                println!("depth {} (top level V_{})", diag.depth(), diag.top_level());
                for l in 1..=diag.top_level() {
                    let v = diag.vertices(l).expect("level in range");
                    println!("  V_{l}: {{{v}}}  edges down: {}", diag.edge_count(l));
                }
            }
            Ok(())
        }
        BvCmd::Orbit {
            directive,
            depth,
            steps,
            wrap,
        } => {
            let diag = diagram(&read_directive(&directive)?, depth)?;
            let start = diag.min_path(depth)?;
            let (word, complete, wraps) = if wrap {
                let mut word = Word::empty();
                let mut p = start;
                let mut wraps = 0;
                for i in 0..steps {
                    word.push(diag.path_vertices(&p)?[0]);
                    if i + 1 < steps {
                        let (next, wrapped) = diag.vershik_successor_wrapping(&p)?;
                        wraps += usize::from(wrapped);
                        p = next;
                    }
                }
                (word, true, wraps)
            } else {
                let o = diag.orbit_coding(&start, steps)?;
                (o.word, o.complete, 0)
            };
            if json {
                println!(
                    "{}",
                    json!({"schema": 1, "coding": word.as_str(), "len": word.len(), "complete": complete, "wraps": wraps})
                );
            } else {
                println!("{word}");
                if !complete {
                    eprintln!(
                        "note: reached the maximal path after {} of {steps} steps (use --wrap to continue)",
                        word.len()
                    );
                }
            }
            Ok(())
        }
        BvCmd::Check {
            directive,
            depth,
            simple,
            extrema,
        } => {
            let diag = diagram(&read_directive(&directive)?, depth)?;
            let (simple, extrema) = if simple || extrema { (simple, extrema) } else { (true, true) };
            let mut problems = Vec::new();
            let mut out = json!({"schema": 1, "depth": depth});
            if simple {
                let is_simple = diag.is_simple(depth);
                let cuts = diag.simplicity_cuts(depth);
                if !json {
                    println!("simple: {} (positive blocks end at levels {cuts:?})", yes_no(is_simple));
                }
                out["simple"] = json!(is_simple);
                out["cuts"] = json!(cuts);
                if !is_simple {
                    problems.push("NotSimple");
                }
            }
            if extrema {
                let r = diag.unique_extrema_check(depth)?;
                if !json {
                    println!("unique minimal path: {} {:?}", yes_no(r.unique_min), r.min_counts);
                    println!("unique maximal path: {} {:?}", yes_no(r.unique_max), r.max_counts);
                }
                out["unique_min"] = json!(r.unique_min);
                out["unique_max"] = json!(r.unique_max);
                out["min_counts"] = json!(r.min_counts);
                out["max_counts"] = json!(r.max_counts);
                if !r.is_unique() {
                    problems.push("NonUniqueExtrema");
                }
            }
            if json {
                println!("{out}");
            }
            if problems.is_empty() {
                Ok(())
            } else {
                Err(CliError::rejected(problems.join(", ")))
            }
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
