//! The `.dir` directive-sequence format.
//!
//! ```text
//! use fib = fib.mor
//! 2: fib seed=a
//! 3: fib seed=a
//! 4: D seed=a        # catalog names need no binding
//! mark 2
//! ```
//!
//! Entries must start at level 2 and be consecutive. `use` paths are
//! resolved relative to the directive file.

use std::collections::HashMap;
use std::path::Path;

use crate::s5;
use crate::words::{parse_morphism, Morphism};

use super::{DirectiveEntry, DirectiveSequence, LanguageError, FIRST_LEVEL};

fn parse_err(line: usize, message: impl Into<String>) -> LanguageError {
    LanguageError::DirectiveParse {
        line,
        message: message.into(),
    }
}

fn is_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

/// Parses directive text; `load` turns a `use` path into a morphism.
pub fn parse_directive<F>(text: &str, mut load: F) -> Result<DirectiveSequence, LanguageError>
where
    F: FnMut(&str) -> Result<Morphism, LanguageError>,
{
    let mut bindings: HashMap<String, Morphism> = HashMap::new();
    let mut entries = Vec::new();
    let mut marks = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }

        if let Some(rest) = line.strip_prefix("use ") {
            let (name, path) = rest
                .split_once('=')
                .ok_or_else(|| parse_err(lineno, "expected `use <name> = <path>`"))?;
            let (name, path) = (name.trim(), path.trim());
            if !is_name(name) || path.is_empty() {
                return Err(parse_err(lineno, "expected `use <name> = <path>`"));
            }
            let m = load(path)?.with_name(name);
            bindings.insert(name.to_owned(), m);
            continue;
        }

        if let Some(rest) = line.strip_prefix("mark ") {
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| parse_err(lineno, format!("bad mark `{}`", rest.trim())))?;
            marks.push(n);
            continue;
        }

        let (level, rest) = line
            .split_once(':')
            .ok_or_else(|| parse_err(lineno, format!("unrecognised line `{line}`")))?;
        let level: usize = level
            .trim()
            .parse()
            .map_err(|_| parse_err(lineno, format!("bad level `{}`", level.trim())))?;
        let expected = entries.len() + FIRST_LEVEL;
        if level != expected {
            return Err(parse_err(
                lineno,
                format!("levels must be consecutive from {FIRST_LEVEL}: expected {expected}, found {level}"),
            ));
        }
        let mut parts = rest.split_whitespace();
        let name = parts
            .next()
            .ok_or_else(|| parse_err(lineno, "missing morphism name"))?;
        let seed = parts
            .next()
            .and_then(|s| s.strip_prefix("seed="))
            .ok_or_else(|| parse_err(lineno, "expected `seed=<letter>`"))?;
        if parts.next().is_some() {
            return Err(parse_err(lineno, "trailing input"));
        }
        let mut seed_chars = seed.chars();
        let seed = match (seed_chars.next(), seed_chars.next()) {
            (Some(c), None) => c,
            _ => return Err(parse_err(lineno, format!("bad seed `{seed}`"))),
        };
        let morphism = match bindings.get(name) {
            Some(m) => m.clone(),
            None => s5::catalog_morphism(name)
                .ok_or_else(|| parse_err(lineno, format!("unknown morphism `{name}`")))?,
        };
        entries.push(DirectiveEntry { morphism, seed });
    }

    DirectiveSequence::new(entries, marks)
}

/// Reads a `.dir` file, loading `use` paths relative to its directory.
pub fn read_directive_file(path: &Path) -> Result<DirectiveSequence, LanguageError> {
    let text = std::fs::read_to_string(path).map_err(|e| LanguageError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    parse_directive(&text, |rel| {
        let p = base.join(rel);
        let text = std::fs::read_to_string(&p).map_err(|e| LanguageError::Io {
            path: p.display().to_string(),
            message: e.to_string(),
        })?;
        Ok(parse_morphism(&text)?)
    })
}
