use serde::Serialize;

use crate::morph::MorphTag;

/// Spoken form that replaces a non-standard word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expansion {
    pub words: Vec<String>,
    #[serde(skip)]
    pub tags: Vec<MorphTag>,
    /// Rule identifier or dictionary row (`file:line`) that produced the words.
    pub source: String,
    /// The surface that was replaced.
    pub original: String,
}

impl Expansion {
    pub fn new(words: Vec<String>, tag: MorphTag, source: impl Into<String>, original: impl Into<String>) -> Self {
        let tags = vec![tag; words.len()];
        Self { words, tags, source: source.into(), original: original.into() }
    }

    pub fn text(&self) -> String {
        self.words.join(" ")
    }
}
