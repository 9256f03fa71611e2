//! Poset file formats.
//!
//! JSON: `{"n": 3, "covers": [[1, 3]]}` with pairs `[lower, upper]`.
//! Text: the first line is `n`, then one `j < i` per line. Blank lines and
//! lines starting with `#` are ignored in the text form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
}

impl PosetFile {
    pub fn of(poset: &Poset) -> Self {
        PosetFile {
            n: poset.n(),
            covers: poset.covers().map(|(lo, hi)| [lo, hi]).collect(),
        }
    }

    pub fn into_poset(self) -> Result<Poset> {
        Poset::new(self.n, self.covers.into_iter().map(|[lo, hi]| (lo, hi)))
    }
}

/// Parses either format, chosen by whether the input starts with `{`.
pub fn parse_poset(text: &str) -> Result<Poset> {
    if text.trim_start().starts_with('{') {
        let file: PosetFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("poset JSON: {e}")))?;
        return file.into_poset();
    }
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty poset file".into()))?
        .parse()
        .map_err(|_| Error::Parse("first line must be the element count".into()))?;
    let mut relations = Vec::new();
    for line in lines {
        let (lo, hi) = line
            .split_once('<')
            .ok_or_else(|| Error::Parse(format!("expected `j < i`, got `{line}`")))?;
        let index = |s: &str| {
            let s = s.trim();
            s.strip_prefix('x')
                .unwrap_or(s)
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad element `{s}` in `{line}`")))
        };
        relations.push((index(lo)?, index(hi)?));
    }
    Poset::new(n, relations)
}

pub fn poset_to_json(poset: &Poset) -> String {
    serde_json::to_string(&PosetFile::of(poset)).expect("poset file serializes")
}

pub fn poset_to_text(poset: &Poset) -> String {
    let mut out = format!("{}\n", poset.n());
    for (lo, hi) in poset.covers() {
        out.push_str(&format!("{lo} < {hi}\n"));
    }
    out
}
