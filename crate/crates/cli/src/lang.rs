use adica_core::language::{complexity, factors, morse_hedlund_witness, recurrence_probe};
use serde_json::json;

use crate::error::CliError;
use crate::io::read_directive;
use crate::LangArgs;

pub fn run(args: LangArgs, json: bool) -> Result<(), CliError> {
    let d = read_directive(&args.directive)?;
    let n = args.complexity.unwrap_or(args.max_len);
    let lang = factors(&d, args.max_len.max(n))?;
    let profile = complexity(&lang, n)?;
    let witness = morse_hedlund_witness(&profile);
    let recurrence = args
        .recurrence
        .map(|m| recurrence_probe(&lang, m, args.max_len))
        .transpose()?;

    if json {
        let rec = recurrence.as_ref().map(|r| {
            json!({
                "factor_len": r.factor_len,
                "window": r.window,
                "holds": r.holds,
                "gaps": r.gaps.iter().map(|g| json!({
                    "window": g.window.as_str(),
                    "missing": g.missing.iter().map(|w| w.as_str()).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            })
        });
        let out = json!({
            "schema": 1,
            "max_len": lang.max_len(),
            "depth_used": lang.depth_used(),
            "stabilized": lang.is_stabilized(),
            "p": profile.values(),
            "diff": profile.differences(),
            "witness": witness,
            "recurrence": rec,
        });
        println!("{out}");
    } else {
        println!(
            "language up to length {} ({} levels used, {})",
            lang.max_len(),
            lang.depth_used(),
            if lang.is_stabilized() { "stabilized" } else { "NOT stabilized" }
        );
        for (i, p) in profile.values().iter().enumerate() {
            let diff = profile
                .differences()
                .get(i)
                .map(|d| format!("  p({})-p({}) = {d}", i + 2, i + 1))
                .unwrap_or_default();
            println!("p({}) = {p}{diff}", i + 1);
        }
        match witness {
            Some(w) => println!("periodic: p({w}) <= {w}"),
            None => println!("no periodicity witness up to n = {n}"),
        }
        if let Some(r) = &recurrence {
            println!(
                "recurrence ({} in every {}-window): {}",
                r.factor_len,
                r.window,
                if r.holds { "holds" } else { "fails" }
            );
            for g in &r.gaps {
                let missing: Vec<&str> = g.missing.iter().map(|w| w.as_str()).collect();
                println!("  {} misses {}", g.window, missing.join(", "));
            }
        }
    }
    if !lang.is_stabilized() {
        eprintln!("warning: language did not stabilize; counts are lower bounds");
    }
    Ok(())
}
