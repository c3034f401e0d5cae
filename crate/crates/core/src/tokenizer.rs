//! Sentence and token segmentation.
//!
//! Whitespace splits the text into chunks; leading and trailing punctuation
//! is peeled off each chunk into separate tokens. A final dot stays attached
//! to its token when the token is a known abbreviation, ends in a digit, or
//! is a well-formed Roman numeral. Whether such a dot also ends the sentence
//! is decided afterwards, in this order:
//!
//! 1. known abbreviation: never a sentence end;
//! 2. number or Roman numeral: a sentence end only before an uppercase
//!    letter or the end of input;
//! 3. anything else: a sentence end before an uppercase letter, a digit or
//!    the end of input.
//!
//! Ellipses always end the sentence, as does a blank line.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::numexpand::roman_value;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// Exact input slice, including an attached dot.
    pub surface: String,
    pub byte_start: usize,
    pub byte_end: usize,
    pub sentence_index: usize,
    pub trailing_dot: bool,
}

impl Token {
    /// Surface without the attached dot.
    pub fn stem(&self) -> &str {
        if self.trailing_dot {
            &self.surface[..self.surface.len() - 1]
        } else {
            &self.surface
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub index: usize,
    pub tokens: Vec<Token>,
}

/// Segmented text. Token positions used by [`Document::reattach`] are flat
/// indices over all tokens in order.
#[derive(Debug, Clone)]
pub struct Document<'a> {
    source: &'a str,
    sentences: Vec<Sentence>,
}

/// Replaces tokens `first..=last` (flat indices) and the separators between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replacement {
    pub first: usize,
    pub last: usize,
    pub text: String,
}

impl<'a> Document<'a> {
    pub fn source(&self) -> &'a str {
        self.source
    }

    pub fn sentences(&self) -> &[Sentence] {
        &self.sentences
    }

    pub fn into_sentences(self) -> Vec<Sentence> {
        self.sentences
    }

    pub fn tokens(&self) -> impl Iterator<Item = &Token> {
        self.sentences.iter().flat_map(|s| s.tokens.iter())
    }

    pub fn token_count(&self) -> usize {
        self.sentences.iter().map(|s| s.tokens.len()).sum()
    }

    /// Substitutes single tokens, keeping every other byte of the input.
    pub fn reattach(&self, replacements: &BTreeMap<usize, String>) -> Result<String> {
        let spans: Vec<Replacement> =
            replacements.iter().map(|(&i, text)| Replacement { first: i, last: i, text: text.clone() }).collect();
        self.reattach_spans(&spans)
    }

    pub fn reattach_spans(&self, replacements: &[Replacement]) -> Result<String> {
        let tokens: Vec<&Token> = self.tokens().collect();
        let mut spans: Vec<&Replacement> = replacements.iter().collect();
        spans.sort_by_key(|r| r.first);
        let mut out = String::with_capacity(self.source.len());
        let mut cursor = 0;
        for r in spans {
            if r.last < r.first || r.last >= tokens.len() {
                return Err(Error::TokenPosition { index: r.last.max(r.first), len: tokens.len() });
            }
            let start = tokens[r.first].byte_start;
            if start < cursor {
                return Err(Error::OverlappingReplacement { index: r.first });
            }
            out.push_str(&self.source[cursor..start]);
            out.push_str(&r.text);
            cursor = tokens[r.last].byte_end;
        }
        out.push_str(&self.source[cursor..]);
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy)]
struct Piece {
    start: usize,
    end: usize,
    trailing_dot: bool,
}

#[derive(Debug, Clone, Default)]
pub struct Segmenter {
    abbreviations: HashSet<String>,
}

const LEADING: &[char] = &[
    '(', '[', '{', '"', '\'', '«', '»', '„', '“', '”', '‘', '’', '‹', '›', '¿', '¡', '*', '–', '—', '€', '$', '£', '§',
];
const TRAILING: &[char] = &[
    ')', ']', '}', '"', '\'', '«', '»', '“', '”', '‘', '’', '‹', '›', ',', ';', ':', '!', '?', '%', '‰', '€', '$', '£',
    '§', '*', '–', '—',
];
/// Characters skipped when looking for the first character after a sentence end.
const QUOTES: &[char] = &['"', '\'', '«', '»', '„', '“', '”', '‘', '’', '(', ')', '[', ']'];
const CLOSING: &[char] = &['"', '\'', '»', '“', '”', '’', ')', ']'];

impl Segmenter {
    pub fn new<I, S>(abbreviations: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self { abbreviations: abbreviations.into_iter().map(Into::into).collect() }
    }

    /// Uses every dotted surface of the lexicon as an abbreviation.
    pub fn from_lexicon(lexicon: &Lexicon) -> Self {
        Self::new(lexicon.surfaces().filter(|s| s.ends_with('.') && s.len() > 1))
    }

    /// `stem` plus a dot is a known abbreviation (also with a capitalised first letter).
    pub fn is_abbreviation(&self, stem: &str) -> bool {
        let dotted = format!("{stem}.");
        self.abbreviations.contains(&dotted) || self.abbreviations.contains(&lower_first(&dotted))
    }

    pub fn segment_bytes<'a>(&self, bytes: &'a [u8]) -> Result<Document<'a>> {
        let text = std::str::from_utf8(bytes).map_err(|e| Error::Encoding { offset: e.valid_up_to() })?;
        Ok(self.segment(text))
    }

    pub fn segment<'a>(&self, text: &'a str) -> Document<'a> {
        let mut pieces = Vec::new();
        let mut chunk_start = None;
        for (i, c) in text.char_indices() {
            match (c.is_whitespace(), chunk_start) {
                (true, Some(s)) => {
                    self.split_chunk(text, s, i, &mut pieces);
                    chunk_start = None;
                }
                (false, None) => chunk_start = Some(i),
                _ => {}
            }
        }
        if let Some(s) = chunk_start {
            self.split_chunk(text, s, text.len(), &mut pieces);
        }

        let mut sentences = Vec::new();
        let mut current = Vec::new();
        let mut k = 0;
        while k < pieces.len() {
            current.push(pieces[k]);
            let mut brk = self.ends_sentence(text, &pieces[k]);
            if brk {
                while k + 1 < pieces.len()
                    && pieces[k + 1].start == pieces[k].end
                    && text[pieces[k + 1].start..pieces[k + 1].end].chars().all(|c| CLOSING.contains(&c))
                {
                    k += 1;
                    current.push(pieces[k]);
                }
            }
            if let Some(next) = pieces.get(k + 1) {
                brk |= blank_line(&text[pieces[k].end..next.start]);
            }
            if brk || k + 1 == pieces.len() {
                let index = sentences.len();
                let tokens = current
                    .drain(..)
                    .map(|p| Token {
                        surface: text[p.start..p.end].to_string(),
                        byte_start: p.start,
                        byte_end: p.end,
                        sentence_index: index,
                        trailing_dot: p.trailing_dot,
                    })
                    .collect();
                sentences.push(Sentence { index, tokens });
            }
            k += 1;
        }
        Document { source: text, sentences }
    }

    fn split_chunk(&self, text: &str, chunk_start: usize, chunk_end: usize, out: &mut Vec<Piece>) {
        let mut start = chunk_start;
        let mut chars = text[start..chunk_end].chars().peekable();
        while let Some(c) = chars.next() {
            let next_is_digit = chars.peek().is_some_and(|n| n.is_ascii_digit());
            let peel = LEADING.contains(&c) || (matches!(c, '-' | '+') && !next_is_digit && chars.peek().is_some());
            if !peel || start + c.len_utf8() == chunk_end {
                break;
            }
            out.push(Piece { start, end: start + c.len_utf8(), trailing_dot: false });
            start += c.len_utf8();
        }

        let mut end = chunk_end;
        let mut trailing = Vec::new();
        let mut core_dot = false;
        while end > start {
            let s = &text[start..end];
            let dots = s.len() - s.trim_end_matches('.').len();
            if dots >= 3 {
                trailing.push(Piece { start: end - dots, end, trailing_dot: false });
                end -= dots;
                continue;
            }
            if let Some(unit) = ["°C", "°F"].into_iter().find(|u| s.ends_with(u) && s.len() > u.len()) {
                trailing.push(Piece { start: end - unit.len(), end, trailing_dot: false });
                end -= unit.len();
                continue;
            }
            let last = s.chars().next_back().expect("non-empty");
            let len = last.len_utf8();
            if last == '.' {
                let rest = &s[..s.len() - 1];
                if !rest.is_empty() && self.attaches_dot(rest) {
                    core_dot = true;
                    break;
                }
                trailing.push(Piece { start: end - 1, end, trailing_dot: false });
                end -= 1;
                continue;
            }
            if (TRAILING.contains(&last) || last == '…') && s.len() > len {
                trailing.push(Piece { start: end - len, end, trailing_dot: false });
                end -= len;
                continue;
            }
            break;
        }
        if end > start {
            out.push(Piece { start, end, trailing_dot: core_dot });
        }
        out.extend(trailing.into_iter().rev());
    }

    fn attaches_dot(&self, stem: &str) -> bool {
        stem.ends_with(|c: char| c.is_ascii_digit()) || self.is_abbreviation(stem) || is_roman(stem)
    }

    fn ends_sentence(&self, text: &str, piece: &Piece) -> bool {
        let s = &text[piece.start..piece.end];
        let next = lookahead(&text[piece.end..]);
        if s == "…" || (s.len() >= 3 && s.bytes().all(|b| b == b'.')) {
            return true;
        }
        if piece.trailing_dot {
            let stem = &s[..s.len() - 1];
            if self.is_abbreviation(stem) {
                return false;
            }
            if stem.ends_with(|c: char| c.is_ascii_digit()) || is_roman(stem) {
                return next.is_none_or(char::is_uppercase);
            }
            return terminal(next);
        }
        matches!(s, "." | "!" | "?") && terminal(next)
    }
}

fn terminal(next: Option<char>) -> bool {
    next.is_none_or(|c| c.is_uppercase() || c.is_ascii_digit())
}

fn lookahead(rest: &str) -> Option<char> {
    rest.chars().find(|c| !c.is_whitespace() && !QUOTES.contains(c))
}

fn blank_line(gap: &str) -> bool {
    gap.split('\n').skip(1).take(gap.matches('\n').count().saturating_sub(1)).any(|l| l.trim().is_empty())
}

fn is_roman(stem: &str) -> bool {
    !stem.is_empty() && stem.chars().all(|c| "IVXLCDM".contains(c)) && roman_value(stem).is_some()
}

pub(crate) fn lower_first(s: &str) -> String {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) => c.to_lowercase().chain(chars).collect(),
        None => String::new(),
    }
}

/// Segments with the abbreviation list of the bundled lexicon.
pub fn segment(text: &str) -> Document<'_> {
    crate::fixtures::bundled().segmenter.segment(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surfaces(doc: &Document) -> Vec<Vec<String>> {
        doc.sentences().iter().map(|s| s.tokens.iter().map(|t| t.surface.clone()).collect()).collect()
    }

    #[test]
    fn ordinal_dot_inside_sentence() {
        let doc = segment("Ivo je na natjecanju bio 3. i odlikovan je broncom.");
        assert_eq!(doc.sentences().len(), 1);
        let three = doc.tokens().find(|t| t.stem() == "3").unwrap();
        assert!(three.trailing_dot);
        assert_eq!(three.surface, "3.");
        assert_eq!(doc.tokens().last().unwrap().surface, ".");
    }

    #[test]
    fn year_dot_ends_sentence_before_capital() {
        let doc = segment("Došao je 1999. Otišao je 2001.");
        assert_eq!(doc.sentences().len(), 2);
        let last = doc.sentences()[0].tokens.last().unwrap();
        assert_eq!(last.stem(), "1999");
        assert!(last.trailing_dot);
    }

    #[test]
    fn empty_input() {
        assert!(segment("").sentences().is_empty());
        assert!(segment("  \n\t ").sentences().is_empty());
    }

    #[test]
    fn abbreviation_never_ends_sentence() {
        let doc = segment("Vidi npr. Marka i g. Horvata.");
        assert_eq!(doc.sentences().len(), 1);
        assert!(doc.tokens().any(|t| t.surface == "npr." && t.trailing_dot));
        assert!(doc.tokens().any(|t| t.surface == "g." && t.trailing_dot));
    }

    #[test]
    fn punctuation_is_peeled() {
        let doc = segment("(Cijena: 50%, tj. 20 kn.)");
        assert_eq!(surfaces(&doc), vec![vec!["(", "Cijena", ":", "50", "%", ",", "tj.", "20", "kn", ".", ")"]]);
        let doc = segment("Bilo je 20°C.");
        assert_eq!(surfaces(&doc), vec![vec!["Bilo", "je", "20", "°C", "."]]);
    }

    #[test]
    fn dates_and_times_stay_whole() {
        let doc = segment("Rok je 3. 5. 2012. u 14:30, a ne 3/5/2012.");
        assert_eq!(doc.sentences().len(), 1);
        let s: Vec<_> = doc.tokens().map(|t| t.surface.as_str()).collect();
        assert_eq!(s, ["Rok", "je", "3.", "5.", "2012.", "u", "14:30", ",", "a", "ne", "3/5/2012."]);
    }

    #[test]
    fn ellipsis_and_blank_lines() {
        let doc = segment("Čekaj... ne znam\n\nNaslov bez točke\nnastavak");
        assert_eq!(surfaces(&doc)[0], ["Čekaj", "..."]);
        assert_eq!(doc.sentences().len(), 3);
    }

    #[test]
    fn roman_numerals_keep_dot() {
        let doc = segment("Papa Ivan Pavao II. je došao. Bio je to XX. stoljeće.");
        assert_eq!(doc.sentences().len(), 2);
        assert!(doc.tokens().any(|t| t.surface == "II." && t.trailing_dot));
        assert!(doc.tokens().any(|t| t.surface == "XX." && t.trailing_dot));
        let doc = segment("Kupio je DVD.");
        assert!(doc.tokens().any(|t| t.surface == "DVD" && !t.trailing_dot));
    }

    #[test]
    fn quotes_after_sentence_end() {
        let doc = segment("Rekao je: \"Dođi.\" Nije došao.");
        assert_eq!(doc.sentences().len(), 2);
        assert_eq!(doc.sentences()[0].tokens.last().unwrap().surface, "\"");
    }

    #[test]
    fn invalid_utf8_reports_offset() {
        let seg = &crate::fixtures::bundled().segmenter;
        let err = seg.segment_bytes(b"abc \xff def").unwrap_err();
        assert!(matches!(err, Error::Encoding { offset: 4 }));
    }

    #[test]
    fn reattach_substitutes_and_preserves() {
        let text = "Ivo je na natjecanju bio 3. i odlikovan je broncom.";
        let doc = segment(text);
        assert_eq!(doc.reattach(&BTreeMap::new()).unwrap(), text);
        let idx = doc.tokens().position(|t| t.surface == "3.").unwrap();
        let out = doc.reattach(&BTreeMap::from([(idx, "treći".to_string())])).unwrap();
        assert_eq!(out, "Ivo je na natjecanju bio treći i odlikovan je broncom.");

        let text = "A  1\tB\n2 C";
        let doc = segment(text);
        let out = doc.reattach(&BTreeMap::from([(1, "jedan".to_string()), (3, "dva".to_string())])).unwrap();
        assert_eq!(out, "A  jedan\tB\ndva C");

        let err = doc.reattach(&BTreeMap::from([(99, "x".to_string())])).unwrap_err();
        assert!(matches!(err, Error::TokenPosition { index: 99, len: 5 }));
    }

    #[test]
    fn span_replacement_swallows_inner_separators() {
        let doc = segment("Dana 3. 5. 2012. je kišilo.");
        let out = doc.reattach_spans(&[Replacement { first: 1, last: 3, text: "X".into() }]).unwrap();
        assert_eq!(out, "Dana X je kišilo.");
        let err = doc
            .reattach_spans(&[
                Replacement { first: 1, last: 3, text: "X".into() },
                Replacement { first: 2, last: 2, text: "Y".into() },
            ])
            .unwrap_err();
        assert!(matches!(err, Error::OverlappingReplacement { index: 2 }));
    }
}
