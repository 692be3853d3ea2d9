//! Word-pair corpora: one `<word> ; <word>` pair per line.

use metabelian_core::fox::magnus_equal;
use metabelian_core::words::parse_word;
use metabelian_core::{Element, Error};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub line: usize,
    pub left: String,
    pub right: String,
    /// Equality of normal forms.
    pub nf: bool,
    /// Equality under the Fox oracle.
    pub fox: bool,
}

impl Verdict {
    pub fn agrees(&self) -> bool {
        self.nf == self.fox
    }
}

#[derive(Debug, thiserror::Error)]
#[error("line {line}: {error}")]
pub struct CorpusError {
    pub line: usize,
    pub error: Error,
}

/// Checks every pair with both deciders. Blank lines and `#` comments are skipped.
pub fn run(text: &str, rank: usize) -> Result<Vec<Verdict>, CorpusError> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let at = |error| CorpusError { line, error };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some((l, r)) = trimmed.split_once(';') else {
            return Err(at(Error::Syntax { pos: 0, message: "expected `<word> ; <word>`".into() }));
        };
        let u = parse_word(l.trim(), rank).map_err(at)?;
        let v = parse_word(r.trim(), rank).map_err(at)?;
        let nf = Element::from_word(&u, rank).map_err(at)? == Element::from_word(&v, rank).map_err(at)?;
        let fox = magnus_equal(&u, &v, rank).map_err(at)?;
        out.push(Verdict { line, left: l.trim().into(), right: r.trim().into(), nf, fox });
    }
    Ok(out)
}
