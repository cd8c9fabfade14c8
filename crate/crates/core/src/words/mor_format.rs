//! The `.mor` text format.
//!
//! ```text
//! # Fibonacci
//! alphabet: ab
//! a -> ab
//! b -> a
//! ```
//!
//! The `alphabet:` header declares the codomain and is optional; without
//! it the codomain is inferred from the rules. `#` starts a comment.
//! [`to_mor_string`] always writes the header, so canonical files read
//! back byte-for-byte once comments and blank lines are stripped.

use super::alphabet::is_letter;
use super::morphism::infer_codomain;
use super::{Alphabet, Morphism, Word, WordError};

fn parse_err(line: usize, message: impl Into<String>) -> WordError {
    WordError::Parse {
        line,
        message: message.into(),
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn parse_morphism(text: &str) -> Result<Morphism, WordError> {
    let mut declared: Option<Alphabet> = None;
    let mut rules: Vec<(char, Word)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("alphabet:") {
            if declared.is_some() || !rules.is_empty() {
                return Err(parse_err(lineno, "alphabet header must come before the rules"));
            }
            let letters = rest.chars().filter(|c| !c.is_whitespace() && *c != ',');
            declared = Some(Alphabet::new(letters).map_err(|e| parse_err(lineno, e.to_string()))?);
            continue;
        }
        let (lhs, rhs) = line
            .split_once("->")
            .ok_or_else(|| parse_err(lineno, "expected `<letter> -> <word>`"))?;
        let mut lhs_chars = lhs.trim().chars();
        let letter = match (lhs_chars.next(), lhs_chars.next()) {
            (Some(c), None) if is_letter(c) => c,
            _ => return Err(parse_err(lineno, format!("bad left-hand side `{}`", lhs.trim()))),
        };
        let rhs = rhs.trim();
        if rhs.is_empty() {
            return Err(WordError::ErasingImage(letter));
        }
        if rhs.chars().any(|c| !is_letter(c)) {
            return Err(parse_err(lineno, format!("bad image `{rhs}`")));
        }
        if rules.iter().any(|(c, _)| *c == letter) {
            return Err(WordError::DuplicateRule(letter));
        }
        let image = Word::new(rhs)?;
        if let Some(alpha) = &declared {
            image.check_over(alpha)?;
        }
        rules.push((letter, image));
    }

    if rules.is_empty() {
        return Err(parse_err(0, "no rules"));
    }
    let domain = Alphabet::new(rules.iter().map(|(c, _)| *c))?;
    let codomain = match declared {
        Some(a) => a,
        None => infer_codomain(&domain, rules.iter().map(|(_, w)| w))?,
    };
    Morphism::new(domain, codomain, rules)
}

pub fn to_mor_string(m: &Morphism) -> String {
    let mut out = format!("alphabet: {}\n", m.codomain());
    for (c, w) in m.rules() {
        out.push_str(&format!("{c} -> {w}\n"));
    }
    out
}
