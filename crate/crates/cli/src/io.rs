use std::fs;
use std::path::Path;

use adica_core::language::{read_directive_file, DirectiveSequence};
use adica_core::words::parse_morphism;
use adica_core::Morphism;

use crate::error::CliError;

pub fn read_morphism(path: &Path) -> Result<Morphism, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("IoError: {}: {e}", path.display())))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Ok(parse_morphism(&text)?.with_name(name))
}

pub fn read_directive(path: &Path) -> Result<DirectiveSequence, CliError> {
    Ok(read_directive_file(path)?)
}

/// Writes `text` to `target`, or to stdout when `target` is `-`.
pub fn emit(target: &Path, text: &str) -> Result<(), CliError> {
    if target == Path::new("-") {
        print!("{text}");
        Ok(())
    } else {
        fs::write(target, text)
            .map_err(|e| CliError::usage(format!("IoError: {}: {e}", target.display())))
    }
}
