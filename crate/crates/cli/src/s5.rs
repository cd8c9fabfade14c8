use adica_core::bratteli::export_dot;
use adica_core::language::DirectiveSequence;
use adica_core::s5::{build_rank3_bv, catalog_name, complexity_harness, search_marks, validate_directive, ValidatedDirective};
use serde_json::json;

use crate::build::{report_json, report_text};
use crate::error::CliError;
use crate::io::{emit, read_directive};
use crate::S5Cmd;

fn validated(d: &DirectiveSequence, search: Option<usize>) -> Result<ValidatedDirective, CliError> {
    Ok(match search {
        Some(w) => search_marks(d, w)?,
        None => validate_directive(d)?,
    })
}

pub fn run(cmd: S5Cmd, json: bool) -> Result<(), CliError> {
    match cmd {
        S5Cmd::Validate { file, search_marks } => {
            let vd = validated(&read_directive(&file)?, search_marks)?;
            if json {
                let blocks: Vec<_> = vd
                    .blocks()
                    .iter()
                    .map(|b| {
                        let names: Vec<&str> = (b.start..b.end)
                            .map(|l| vd.directive().morphism(l).ok().and_then(catalog_name).unwrap_or("sigma_2"))
                            .collect();
                        let images: Vec<&str> = b.product.images().iter().map(|w| w.as_str()).collect();
                        json!({"start": b.start, "end": b.end, "morphisms": names, "images": images})
                    })
                    .collect();
                println!("{}", json!({"schema": 1, "valid": true, "marks": vd.marks(), "blocks": blocks}));
            } else {
                println!("marks: {:?}", vd.marks());
                for b in vd.blocks() {
                    let names: Vec<&str> = (b.start..b.end)
                        .map(|l| vd.directive().morphism(l).ok().and_then(catalog_name).unwrap_or("σ₂"))
                        .collect();
                    println!("  block {} [{}, {}): {}  {}", b.index, b.start, b.end, names.join(" "), b.product);
                }
                println!("valid: {} blocks", vd.blocks().len());
            }
            Ok(())
        }
        S5Cmd::Harness { file, max_n } => {
            let r = complexity_harness(&read_directive(&file)?, max_n)?;
            if json {
                let out = json!({
                    "schema": 1,
                    "max_n": r.max_n,
                    "p": r.values,
                    "diff": r.differences,
                    "bounded": r.bounded(),
                    "max_diff": r.max_difference(),
                    "n_min": r.n_min,
                    "witness": r.morse_hedlund_witness,
                });
                println!("{out}");
            } else {
                for (i, d) in r.differences.iter().enumerate() {
                    println!("n = {:>3}  p(n) = {:>4}  p(n+1)-p(n) = {d}", i + 1, r.values[i]);
                }
                match r.n_min {
                    Some(n) => println!("differences <= 2 from n = {n} to {max_n}"),
                    None => println!("last difference exceeds 2"),
                }
                if let Some(w) = r.morse_hedlund_witness {
                    println!("periodic: p({w}) <= {w}");
                }
            }
            if r.bounded() {
                Ok(())
            } else {
                Err(CliError::rejected(format!(
                    "UnboundedDifferences: p({}) - p({max_n}) = {}",
                    max_n + 1,
                    r.differences.last().copied().unwrap_or(0)
                )))
            }
        }
        S5Cmd::Build {
            file,
            depth,
            dot,
            search_marks,
        } => {
            let vd = validated(&read_directive(&file)?, search_marks)?;
            let (diag, report) = build_rank3_bv(&vd, depth)?;
            if let Some(target) = &dot {
                emit(target, &export_dot(&diag))?;
            }
            if json {
                let mut out = report_json(&report);
                out["schema"] = json!(1);
                out["marks"] = json!(vd.marks());
                println!("{out}");
            } else if dot.as_deref().is_none_or(|p| p.as_os_str() != "-") {
                println!("marks: {:?}", vd.marks());
                print!("{}", report_text(&report));
            }
            Ok(())
        }
    }
}
