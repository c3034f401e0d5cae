use std::collections::HashMap;

use crate::error::{Error, Result, Violation};
use crate::tsv;

/// The 30 letters of the Croatian alphabet; the table must name each of them.
pub const CROATIAN_ALPHABET: [&str; 30] = [
    "A", "B", "C", "Č", "Ć", "D", "DŽ", "Đ", "E", "F", "G", "H", "I", "J", "K", "L", "LJ", "M", "N", "NJ", "O", "P",
    "R", "S", "Š", "T", "U", "V", "Z", "Ž",
];

/// Spoken names of letters, keyed by uppercase letter or digraph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LetterNameTable {
    names: HashMap<String, String>,
}

impl LetterNameTable {
    pub fn parse(file: &str, content: &str) -> Result<Self> {
        let mut violations = Vec::new();
        let table = Self::parse_collecting(file, content, &mut violations);
        if violations.is_empty() {
            Ok(table)
        } else {
            Err(Error::Load(violations))
        }
    }

    pub fn parse_collecting(file: &str, content: &str, violations: &mut Vec<Violation>) -> Self {
        let mut names = HashMap::new();
        for row in tsv::rows(file, content, 3, violations) {
            let letter = row.field(1);
            if letter.to_uppercase() != letter {
                violations.push(Violation::new(file, row.line, 1, format!("letter `{letter}` is not uppercase")));
                continue;
            }
            if !matches!(row.field(3), "native" | "foreign") {
                violations.push(Violation::new(file, row.line, 3, "origin must be native or foreign"));
                continue;
            }
            if names.insert(letter.to_string(), row.field(2).to_string()).is_some() {
                violations.push(Violation::new(file, row.line, 1, format!("duplicate letter `{letter}`")));
            }
        }
        for letter in CROATIAN_ALPHABET {
            if !names.contains_key(letter) {
                violations.push(Violation::file_level(file, format!("missing letter name for {letter}")));
            }
        }
        LetterNameTable { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, letter: &str) -> Option<&str> {
        self.names.get(letter).map(String::as_str)
    }

    /// Letter names in reading order, one word per letter or digraph (DŽ, LJ, NJ).
    pub fn spell(&self, surface: &str) -> Result<Vec<String>> {
        let upper: Vec<char> = surface.chars().flat_map(char::to_uppercase).collect();
        let mut words = Vec::new();
        let mut i = 0;
        while i < upper.len() {
            if i + 1 < upper.len() {
                let pair: String = upper[i..i + 2].iter().collect();
                if let Some(name) = self.names.get(&pair) {
                    words.push(name.clone());
                    i += 2;
                    continue;
                }
            }
            let single = upper[i].to_string();
            match self.names.get(&single) {
                Some(name) => words.push(name.clone()),
                None => return Err(Error::Spell(upper[i])),
            }
            i += 1;
        }
        Ok(words)
    }
}

/// Reads an acronym letter by letter, never expanding its meaning.
pub fn spell_acronym(surface: &str, table: &LetterNameTable) -> Result<Vec<String>> {
    table.spell(surface)
}
