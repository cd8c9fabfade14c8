use crate::language::FIRST_LEVEL;
use crate::words::Morphism;

use super::AdicError;

/// Replaces morphisms by conjugates so that even levels are left proper and
/// odd levels right proper. `ms[0]` sits at level `base_index`.
///
/// A morphism already of the required kind is kept; otherwise its
/// conjugate is used (the right conjugate of a right-proper morphism is
/// left proper, and vice versa).
pub fn alternate_conjugates(ms: &[Morphism], base_index: usize) -> Result<Vec<Morphism>, AdicError> {
    ms.iter()
        .enumerate()
        .map(|(i, m)| {
            let level = base_index + i;
            let p = m.properness();
            let out = if level.is_multiple_of(2) {
                if p.is_left() {
                    m.clone()
                } else if p.is_right() {
                    m.right_conjugate()?
                } else {
                    return Err(AdicError::NotProperEnough { level });
                }
            } else if p.is_right() {
                m.clone()
            } else if p.is_left() {
                m.left_conjugate()?
            } else {
                return Err(AdicError::NotProperEnough { level });
            };
            Ok(match m.name() {
                Some(n) if out != *m => out.with_name(format!("{n}'")),
                _ => out,
            })
        })
        .collect()
}

/// [`alternate_conjugates`] at the usual base index.
pub(crate) fn alternate_from_first(ms: &[Morphism]) -> Result<Vec<Morphism>, AdicError> {
    alternate_conjugates(ms, FIRST_LEVEL)
}
