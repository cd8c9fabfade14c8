use adica_core::words::random::{left_proper_morphism, rng};
use adica_core::words::{
    proper_products, to_mor_string, verify_conjugacy_identity, ConjugacyReport, IncidenceMatrix,
    IteratedOutcome, Properness, Side,
};
use adica_core::{Morphism, Word};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::io::read_morphism;
use crate::{MorphismCmd, SideArg};

pub fn run(cmd: MorphismCmd, json: bool) -> Result<(), CliError> {
    match cmd {
        MorphismCmd::Apply { file, word } => {
            let m = read_morphism(&file)?;
            let w = Word::over(m.domain(), &word)?;
            let image = m.apply(&w)?;
            if json {
                println!("{}", json!({"schema": 1, "word": w.as_str(), "image": image.as_str()}));
            } else {
                println!("{image}");
            }
        }
        MorphismCmd::Info { file } => info(&read_morphism(&file)?, json)?,
        MorphismCmd::Compose { outer, inner } => {
            let m = Morphism::compose(&read_morphism(&outer)?, &read_morphism(&inner)?)?;
            print_morphism(&m, json);
        }
        MorphismCmd::Power { file, k } => print_morphism(&read_morphism(&file)?.power(k)?, json),
        MorphismCmd::Conjugate { file, side } => {
            let m = read_morphism(&file)?;
            let c = match side {
                Some(SideArg::Left) => m.left_conjugate()?,
                Some(SideArg::Right) => m.right_conjugate()?,
                None => m.some_conjugate()?.1,
            };
            print_morphism(&c, json);
        }
        MorphismCmd::Products { file } => {
            let p = proper_products(&read_morphism(&file)?)?;
            if json {
                let out = json!({
                    "schema": 1,
                    "conjugate": rules(&p.conjugate),
                    "sigma_tau": rules(&p.sigma_tau),
                    "tau_sigma": rules(&p.tau_sigma),
                    "proper": p.both_proper(),
                    "primitive": p.both_primitive(),
                });
                println!("{out}");
            } else {
                println!("conjugate ({}): {}", side_name(p.conjugate_side), p.conjugate);
                println!("sigma tau: {} ({})", p.sigma_tau, p.sigma_tau.properness());
                println!("tau sigma: {} ({})", p.tau_sigma, p.tau_sigma.properness());
                println!("proper: {}", yes_no(p.both_proper()));
                println!("primitive: {}", yes_no(p.both_primitive()));
            }
        }
        MorphismCmd::CheckConjugacy {
            file,
            random,
            seed,
            max_len,
        } => check_conjugacy(file, random, seed, max_len, json)?,
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Left => "left",
        Side::Right => "right",
    }
}

fn rules(m: &Morphism) -> Value {
    let map: Map<String, Value> = m
        .rules()
        .map(|(c, w)| (c.to_string(), Value::from(w.as_str())))
        .collect();
    Value::Object(map)
}

fn print_morphism(m: &Morphism, json: bool) {
    if json {
        let out = json!({
            "schema": 1,
            "domain": m.domain().to_string(),
            "codomain": m.codomain().to_string(),
            "rules": rules(m),
        });
        println!("{out}");
    } else {
        print!("{}", to_mor_string(m));
    }
}

fn properness_json(p: Properness) -> Value {
    let kind = match p {
        Properness::Left(_) => "left",
        Properness::Right(_) => "right",
        Properness::Both { .. } => "both",
        Properness::Neither => "neither",
    };
    json!({"kind": kind, "left": p.left_letter().map(String::from), "right": p.right_letter().map(String::from)})
}

fn matrix_text(m: &IncidenceMatrix) -> String {
    let mut out = String::from("   ");
    for c in m.cols().iter() {
        out.push_str(&format!(" {c:>3}"));
    }
    out.push('\n');
    for (r, row) in m.rows().iter().zip(m.entries()) {
        out.push_str(&format!("  {r}"));
        for x in row {
            out.push_str(&format!(" {x:>3}"));
        }
        out.push('\n');
    }
    out
}

fn info(m: &Morphism, json: bool) -> Result<(), CliError> {
    let p = m.properness();
    let primitive = m.is_endomorphism().then(|| m.is_primitive()).transpose()?;
    let left = m.left_conjugate().ok();
    let right = m.right_conjugate().ok();
    let inc = m.incidence_matrix();
    if json {
        let out = json!({
            "schema": 1,
            "domain": m.domain().to_string(),
            "codomain": m.codomain().to_string(),
            "rules": rules(m),
            "properness": properness_json(p),
            "primitive": primitive,
            "incidence": inc.entries(),
            "left_conjugate": left.as_ref().map(rules),
            "right_conjugate": right.as_ref().map(rules),
        });
        println!("{out}");
        return Ok(());
    }
    println!("domain: {}", m.domain());
    println!("codomain: {}", m.codomain());
    for (c, w) in m.rules() {
        println!("  {c} -> {w}");
    }
    println!("properness: {p}");
    match primitive {
        Some(b) => println!("primitive: {}", yes_no(b)),
        None => println!("primitive: n/a (not an endomorphism)"),
    }
    print!("incidence (rows: codomain, columns: domain):\n{}", matrix_text(&inc));
    if let Some(l) = left {
        println!("left conjugate: {l}");
    }
    if let Some(r) = right {
        println!("right conjugate: {r}");
    }
    Ok(())
}

fn iterated_text(r: &ConjugacyReport) -> String {
    match &r.iterated {
        None => "iterated form: n/a".into(),
        Some(IteratedOutcome::Holds { up_to }) => format!("iterated form: holds up to n = {up_to}"),
        Some(IteratedOutcome::Fails(f)) => format!(
            "iterated form: FAILS at n = {}, letter {}: {} != {}",
            f.n, f.letter, f.lhs, f.rhs
        ),
    }
}

fn check_conjugacy(
    file: Option<std::path::PathBuf>,
    random: Option<usize>,
    seed: u64,
    max_len: usize,
    json: bool,
) -> Result<(), CliError> {
    if let Some(file) = file {
        let m = read_morphism(&file)?;
        let side = if m.properness().is_left() { Side::Left } else { Side::Right };
        let r = verify_conjugacy_identity(&m, side, max_len)?;
        if json {
            let iterated = match &r.iterated {
                Some(IteratedOutcome::Fails(f)) => json!({"holds": false, "n": f.n, "letter": f.letter.to_string(), "lhs": f.lhs.as_str(), "rhs": f.rhs.as_str()}),
                Some(IteratedOutcome::Holds { up_to }) => json!({"holds": true, "up_to": up_to}),
                None => Value::Null,
            };
            let out = json!({
                "schema": 1,
                "side": side_name(r.side),
                "witness": r.witness.to_string(),
                "conjugate": rules(&r.conjugate),
                "max_len": r.max_len,
                "words_checked": r.words_checked,
                "holds": r.holds(),
                "counterexample": r.counterexample.as_ref().map(|w| w.as_str()),
                "iterated": iterated,
            });
            println!("{out}");
        } else {
            println!("conjugate ({}): {}", side_name(r.side), r.conjugate);
            println!(
                "identity on {} words up to length {}: {}",
                r.words_checked,
                r.max_len,
                if r.holds() { "holds" } else { "FAILS" }
            );
            println!("{}", iterated_text(&r));
        }
        return match &r.counterexample {
            Some(w) => Err(CliError::rejected(format!("ConjugacyFailure: counterexample `{w}`"))),
            None => Ok(()),
        };
    }

    let count = random.unwrap_or(100);
    let mut r = rng(seed);
    let mut words = 0u64;
    let mut failures = Vec::new();
    for i in 0..count {
        let m = left_proper_morphism(&mut r);
        let report = verify_conjugacy_identity(&m, Side::Left, max_len)?;
        words += report.words_checked;
        if let Some(w) = report.counterexample {
            failures.push((i, m, w));
        }
    }
    if json {
        let out = json!({
            "schema": 1,
            "seed": seed,
            "morphisms": count,
            "max_len": max_len,
            "words_checked": words,
            "failures": failures.iter().map(|(i, m, w)| json!({"index": i, "morphism": rules(m), "word": w.as_str()})).collect::<Vec<_>>(),
        });
        println!("{out}");
    } else {
        println!("seed: {seed:#x}");
        println!("{count} random left-proper morphisms, {words} words up to length {max_len}");
        for (i, m, w) in &failures {
            println!("  #{i} {m}: fails on `{w}`");
        }
        if failures.is_empty() {
            println!("identity holds for all");
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::rejected(format!("ConjugacyFailure: {} morphisms", failures.len())))
    }
}
