//! Assigns every token of a sentence to exactly one classified span.
//!
//! Pattern rules are tried at each position in a fixed priority order and the
//! first match wins:
//!
//! e-mail/URL, combined date, numeric date, time, phone number, decimal,
//! ordinal, year, cardinal, Roman numeral, dictionary classes and acronyms,
//! mixed alphanumerics, standard words.
//!
//! Only dates, times, phone numbers, e-mails and URLs may span several tokens.

use std::fmt;

use once_cell::sync::Lazy;
use regex::Regex;
use serde::Serialize;

use crate::lexicon::{Lexicon, Neighbor, Quantity};
use crate::numexpand::{roman_value, NumberSpelling};
use crate::taxonomy::NswClass;
use crate::tokenizer::{Sentence, Token};

/// The rule that produced a span.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleId {
    Email,
    Url,
    DateCombined,
    DateNumericCompact,
    DateNumericSpaced,
    Time,
    PhoneSingle,
    PhoneGrouped,
    Decimal,
    Ordinal,
    Year,
    Cardinal,
    Roman,
    Lexicon,
    Acronym,
    Mixed,
    Word,
}

impl RuleId {
    /// All rules in priority order.
    pub const PRIORITY: [RuleId; 17] = [
        RuleId::Email,
        RuleId::Url,
        RuleId::DateCombined,
        RuleId::DateNumericCompact,
        RuleId::DateNumericSpaced,
        RuleId::Time,
        RuleId::PhoneSingle,
        RuleId::PhoneGrouped,
        RuleId::Decimal,
        RuleId::Ordinal,
        RuleId::Year,
        RuleId::Cardinal,
        RuleId::Roman,
        RuleId::Lexicon,
        RuleId::Acronym,
        RuleId::Mixed,
        RuleId::Word,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::Email => "email",
            RuleId::Url => "url",
            RuleId::DateCombined => "date-combined",
            RuleId::DateNumericCompact => "date-numeric-compact",
            RuleId::DateNumericSpaced => "date-numeric-spaced",
            RuleId::Time => "time",
            RuleId::PhoneSingle => "phone-single",
            RuleId::PhoneGrouped => "phone-grouped",
            RuleId::Decimal => "decimal",
            RuleId::Ordinal => "ordinal",
            RuleId::Year => "year",
            RuleId::Cardinal => "cardinal",
            RuleId::Roman => "roman",
            RuleId::Lexicon => "lexicon",
            RuleId::Acronym => "acronym",
            RuleId::Mixed => "mixed",
            RuleId::Word => "word",
        }
    }

    pub fn priority(self) -> usize {
        Self::PRIORITY.iter().position(|r| *r == self).expect("listed")
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedSpan {
    /// Index of the first token within its sentence.
    pub start: usize,
    pub tokens: Vec<Token>,
    pub cls: NswClass,
    pub rule: RuleId,
}

impl ClassifiedSpan {
    pub fn byte_start(&self) -> usize {
        self.tokens[0].byte_start
    }

    pub fn byte_end(&self) -> usize {
        self.tokens[self.tokens.len() - 1].byte_end
    }

    pub fn last(&self) -> &Token {
        &self.tokens[self.tokens.len() - 1]
    }

    /// Surfaces joined by single spaces.
    pub fn surface(&self) -> String {
        let parts: Vec<&str> = self.tokens.iter().map(|t| t.surface.as_str()).collect();
        parts.join(" ")
    }

    /// Capitalised alphabetic standard word, not sentence-initial and not a dictionary entry.
    pub fn is_proper_name(&self, lexicon: &Lexicon) -> bool {
        self.cls == NswClass::StandardWord
            && self.tokens.len() == 1
            && self.start > 0
            && looks_like_name(&self.tokens[0], lexicon)
    }

    /// Numeric value relevant for agreement with a following counted word.
    pub fn quantity(&self) -> Option<Quantity> {
        match self.cls {
            NswClass::CardinalNumber => {
                parse_grouped(self.tokens[0].stem().trim_start_matches('-')).map(Quantity::Integer)
            }
            NswClass::DecimalNumber => Some(Quantity::Fractional),
            _ => None,
        }
    }

    pub fn neighbor(&self, lexicon: &Lexicon) -> Neighbor<'_> {
        Neighbor {
            cls: self.cls,
            surface: &self.tokens[0].surface,
            proper_name: self.is_proper_name(lexicon),
            quantity: self.quantity(),
        }
    }
}

fn looks_like_name(token: &Token, lexicon: &Lexicon) -> bool {
    let s = &token.surface;
    let mut chars = s.chars();
    chars.next().is_some_and(char::is_uppercase)
        && s.chars().count() > 1
        && s.chars().all(char::is_alphabetic)
        && !s.chars().all(char::is_uppercase)
        && !lexicon.contains(s)
}

static EMAIL: Lazy<Regex> =
    Lazy::new(|| Regex::new(r"^[A-Za-z0-9._%+-]+@[A-Za-z0-9-]+(\.[A-Za-z0-9-]+)+$").expect("valid regex"));
static URL: Lazy<Regex> = Lazy::new(|| {
    Regex::new(r"^(https?://[^\s]+|www\.[A-Za-z0-9-]+(\.[A-Za-z0-9-]+)+(/[^\s]*)?)$").expect("valid regex")
});
static DATE_DOTTED: Lazy<Regex> =
    Lazy::new(|| Regex::new(r"^(\d{1,2})\.(\d{1,2})\.(\d{3,4})\.?$").expect("valid regex"));
static DATE_SLASHED: Lazy<Regex> = Lazy::new(|| Regex::new(r"^(\d{1,2})/(\d{1,2})/(\d{3,4})$").expect("valid regex"));
static TIME: Lazy<Regex> = Lazy::new(|| Regex::new(r"^(\d{1,2}):(\d{2})(?::(\d{2}))?$").expect("valid regex"));
static PHONE: Lazy<Regex> = Lazy::new(|| Regex::new(r"^(\+\d+|0\d*)([/-]\d+)+$").expect("valid regex"));
static PHONE_HEAD: Lazy<Regex> = Lazy::new(|| Regex::new(r"^(\+\d{1,3}|0\d{1,3})$").expect("valid regex"));
static DECIMAL: Lazy<Regex> = Lazy::new(|| Regex::new(r"^-?(\d+|\d{1,3}(\.\d{3})+),\d+$").expect("valid regex"));
static GROUPED: Lazy<Regex> = Lazy::new(|| Regex::new(r"^(\d+|\d{1,3}(\.\d{3})+)$").expect("valid regex"));

/// Parses digits with optional dots between groups of three.
pub(crate) fn parse_grouped(s: &str) -> Option<u64> {
    if !GROUPED.is_match(s) {
        return None;
    }
    s.replace('.', "").parse().ok()
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Roman-numeral check: well-formed, and either dotted or next to a trigger
/// word or a proper name. A lone letter without a dot never qualifies.
pub fn is_roman_numeral(tokens: &[Token], index: usize, lexicon: &Lexicon, spelling: &NumberSpelling) -> bool {
    let token = &tokens[index];
    let stem = token.stem();
    if stem.is_empty() || !stem.chars().all(|c| "IVXLCDM".contains(c)) || roman_value(stem).is_none() {
        return false;
    }
    if token.trailing_dot {
        return true;
    }
    if stem.len() == 1 {
        return false;
    }
    let adjacent = |i: Option<usize>| {
        i.and_then(|i| tokens.get(i)).is_some_and(|t| {
            spelling.is_roman_trigger(&t.surface) || (i.unwrap_or(0) > 0 && looks_like_name(t, lexicon))
        })
    };
    adjacent(index.checked_sub(1)) || adjacent(Some(index + 1))
}

/// Classifies sentences against a dictionary and the spelling tables, which
/// supply month names and trigger words.
#[derive(Debug, Clone, Copy)]
pub struct Classifier<'r> {
    pub lexicon: &'r Lexicon,
    pub spelling: &'r NumberSpelling,
}

impl<'r> Classifier<'r> {
    pub fn new(lexicon: &'r Lexicon, spelling: &'r NumberSpelling) -> Self {
        Self { lexicon, spelling }
    }

    pub fn classify(&self, sentence: &Sentence) -> Vec<ClassifiedSpan> {
        let tokens = &sentence.tokens;
        let mut spans: Vec<ClassifiedSpan> = Vec::new();
        let mut i = 0;
        while i < tokens.len() {
            let prev = spans.last().map(|s| s.cls);
            let (rule, len) = RuleId::PRIORITY
                .iter()
                .find_map(|&r| self.try_rule(r, tokens, i, prev).map(|len| (r, len)))
                .expect("the word rule always matches");
            let cls = self.class_of(rule, &tokens[i], i == 0);
            spans.push(ClassifiedSpan { start: i, tokens: tokens[i..i + len].to_vec(), cls, rule });
            i += len;
        }
        spans
    }

    /// Every rule that matches at `index`, in priority order, with the span
    /// length it would claim. `prev` is the class of the preceding span.
    pub fn matching_rules(&self, tokens: &[Token], index: usize, prev: Option<NswClass>) -> Vec<(RuleId, usize)> {
        RuleId::PRIORITY.iter().filter_map(|&r| self.try_rule(r, tokens, index, prev).map(|len| (r, len))).collect()
    }

    fn class_of(&self, rule: RuleId, token: &Token, sentence_initial: bool) -> NswClass {
        match rule {
            RuleId::Email => NswClass::Email,
            RuleId::Url => NswClass::Url,
            RuleId::DateCombined => NswClass::DateCombined,
            RuleId::DateNumericCompact | RuleId::DateNumericSpaced => NswClass::DateNumeric,
            RuleId::Time => NswClass::Time,
            RuleId::PhoneSingle | RuleId::PhoneGrouped => NswClass::PhoneNumber,
            RuleId::Decimal => NswClass::DecimalNumber,
            RuleId::Ordinal => NswClass::OrdinalNumber,
            RuleId::Year => NswClass::Year,
            RuleId::Cardinal => NswClass::CardinalNumber,
            RuleId::Roman => NswClass::RomanNumeral,
            RuleId::Lexicon => {
                self.lexicon.find(&token.surface, sentence_initial).map(|e| e.cls).unwrap_or(NswClass::StandardWord)
            }
            RuleId::Acronym => NswClass::Acronym,
            RuleId::Mixed => NswClass::MixedAlphanumeric,
            RuleId::Word => NswClass::StandardWord,
        }
    }

    /// Number of tokens the rule claims at `i`, if it matches.
    fn try_rule(&self, rule: RuleId, t: &[Token], i: usize, prev: Option<NswClass>) -> Option<usize> {
        let tok = &t[i];
        let stem = tok.stem();
        let one = |ok: bool| ok.then_some(1);
        match rule {
            RuleId::Email => one(EMAIL.is_match(&tok.surface)),
            RuleId::Url => one(URL.is_match(&tok.surface)),
            RuleId::DateCombined => self.date_combined(t, i),
            RuleId::DateNumericCompact => {
                let caps = DATE_DOTTED.captures(&tok.surface).or_else(|| DATE_SLASHED.captures(stem))?;
                one(valid_date(&caps[1], &caps[2], Some(&caps[3])))
            }
            RuleId::DateNumericSpaced => {
                let (d, m, y) = (tok, t.get(i + 1)?, t.get(i + 2)?);
                let ok = d.trailing_dot
                    && m.trailing_dot
                    && is_digits(d.stem())
                    && d.stem().len() <= 2
                    && is_digits(m.stem())
                    && m.stem().len() <= 2
                    && is_digits(y.stem())
                    && (3..=4).contains(&y.stem().len())
                    && valid_date(d.stem(), m.stem(), Some(y.stem()));
                ok.then_some(3)
            }
            RuleId::Time => {
                let caps = TIME.captures(stem)?;
                let h: u8 = caps[1].parse().ok()?;
                let m: u8 = caps[2].parse().ok()?;
                let s: u8 = caps.get(3).map_or(Some(0), |s| s.as_str().parse().ok())?;
                one(h <= 23 && m <= 59 && s <= 59)
            }
            RuleId::PhoneSingle => {
                let digits = stem.bytes().filter(u8::is_ascii_digit).count();
                one(PHONE.is_match(stem) && digits >= 6)
            }
            RuleId::PhoneGrouped => {
                if tok.trailing_dot || !PHONE_HEAD.is_match(&tok.surface) {
                    return None;
                }
                let mut len = 1;
                let mut digits = tok.surface.bytes().filter(u8::is_ascii_digit).count();
                while let Some(next) = t.get(i + len) {
                    let last_in_sentence = i + len + 1 == t.len();
                    if !is_digits(next.stem()) || next.stem().len() > 4 || (next.trailing_dot && !last_in_sentence) {
                        break;
                    }
                    digits += next.stem().len();
                    len += 1;
                    if next.trailing_dot {
                        break;
                    }
                }
                (len >= 3 && digits >= 6).then_some(len)
            }
            RuleId::Decimal => one(DECIMAL.is_match(stem)),
            RuleId::Ordinal => one(tok.trailing_dot && parse_grouped(stem).is_some_and(|n| n >= 1)),
            RuleId::Year => {
                let dated = |j: Option<usize>| {
                    j.and_then(|j| t.get(j)).is_some_and(|n| {
                        self.spelling.is_year_trigger(&n.surface) || self.spelling.month_by_name(n.stem()).is_some()
                    })
                };
                let shape =
                    !tok.trailing_dot && is_digits(stem) && (3..=4).contains(&stem.len()) && !stem.starts_with('0');
                one(shape && (dated(i.checked_sub(1)) || dated(Some(i + 1))))
            }
            RuleId::Cardinal => {
                let body = stem.strip_prefix('-').unwrap_or(stem);
                one(GROUPED.is_match(body))
            }
            RuleId::Roman => one(is_roman_numeral(t, i, self.lexicon, self.spelling)),
            RuleId::Lexicon => {
                let entry = self.lexicon.find(&tok.surface, i == 0)?;
                let gated = matches!(entry.cls, NswClass::MeasurementUnit | NswClass::Currency)
                    && entry.surface.chars().any(char::is_alphabetic);
                let after_number = matches!(prev, Some(NswClass::CardinalNumber | NswClass::DecimalNumber));
                one(!gated || after_number)
            }
            RuleId::Acronym => one(!tok.trailing_dot
                && stem.chars().count() >= 2
                && stem.chars().all(|c| c.is_alphabetic() && c.is_uppercase())),
            RuleId::Mixed => {
                let has_digit = tok.surface.chars().any(|c| c.is_ascii_digit());
                one(has_digit && !is_digits(&tok.surface))
            }
            RuleId::Word => Some(1),
        }
    }

    fn date_combined(&self, t: &[Token], i: usize) -> Option<usize> {
        let (d, m) = (&t[i], t.get(i + 1)?);
        if !(d.trailing_dot && is_digits(d.stem()) && d.stem().len() <= 2) {
            return None;
        }
        let day: u8 = d.stem().parse().ok()?;
        if !(1..=31).contains(&day) || m.trailing_dot || self.spelling.month_by_name(&m.surface).is_none() {
            return None;
        }
        let year = t.get(i + 2).filter(|y| {
            let s = y.stem();
            is_digits(s) && (3..=4).contains(&s.len()) && !s.starts_with('0')
        });
        Some(if year.is_some() { 3 } else { 2 })
    }
}

fn valid_date(day: &str, month: &str, year: Option<&str>) -> bool {
    let ok = |s: &str, lo: u32, hi: u32| s.parse::<u32>().is_ok_and(|v| (lo..=hi).contains(&v));
    ok(day, 1, 31) && ok(month, 1, 12) && year.is_none_or(|y| ok(y, 1, 9999) && !y.starts_with('0'))
}

/// Classifies with the bundled spelling tables.
pub fn classify(sentence: &Sentence, lexicon: &Lexicon) -> Vec<ClassifiedSpan> {
    Classifier::new(lexicon, &crate::fixtures::bundled().spelling).classify(sentence)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::bundled;

    fn classes(text: &str) -> Vec<(String, NswClass)> {
        let res = bundled();
        let doc = res.segmenter.segment(text);
        doc.sentences().iter().flat_map(|s| classify(s, &res.lexicon)).map(|s| (s.surface(), s.cls)).collect()
    }

    fn class_of(text: &str, surface: &str) -> NswClass {
        classes(text)
            .into_iter()
            .find(|(s, _)| s == surface)
            .unwrap_or_else(|| panic!("no span `{surface}` in {:?}", classes(text)))
            .1
    }

    #[test]
    fn worked_examples() {
        assert_eq!(class_of("Bio je 21. na listi.", "21."), NswClass::OrdinalNumber);
        assert_eq!(class_of("riječ", "riječ"), NswClass::StandardWord);
        assert_eq!(class_of("Bilo je 3. 5. 2012. u podne.", "3. 5. 2012."), NswClass::DateNumeric);
        assert_eq!(class_of("Tu je bio Ivan Pavao II. sa svitom.", "II."), NswClass::RomanNumeral);
        assert_eq!(class_of("MMF je objavio izvješće.", "MMF"), NswClass::Acronym);
    }

    #[test]
    fn numbers() {
        assert_eq!(class_of("Ima 1.500 ljudi.", "1.500"), NswClass::CardinalNumber);
        assert_eq!(class_of("Pao je za -3 stupnja.", "-3"), NswClass::CardinalNumber);
        assert_eq!(class_of("Iznosi 3,14 posto.", "3,14"), NswClass::DecimalNumber);
        assert_eq!(class_of("Iznosi 1.234,5 eura.", "1.234,5"), NswClass::DecimalNumber);
        assert_eq!(class_of("Rođen je 1990 godine.", "1990"), NswClass::Year);
        assert_eq!(class_of("Od svibnja 1990 radi tu.", "1990"), NswClass::Year);
        assert_eq!(class_of("Kupio je 1990 jabuka.", "1990"), NswClass::CardinalNumber);
        assert_eq!(class_of("Počinje u 14:05 sati.", "14:05"), NswClass::Time);
        assert_eq!(class_of("Počinje u 25:05 sati.", "25:05"), NswClass::MixedAlphanumeric);
    }

    #[test]
    fn dates() {
        assert_eq!(class_of("Rok je 3.5.2012. za sve.", "3.5.2012."), NswClass::DateNumeric);
        assert_eq!(class_of("Rok je 3/5/2012 za sve.", "3/5/2012"), NswClass::DateNumeric);
        assert_eq!(class_of("Rok je 5. svibnja 2012. za sve.", "5. svibnja 2012."), NswClass::DateCombined);
        assert_eq!(class_of("Rok je 5. svibnja za sve.", "5. svibnja"), NswClass::DateCombined);
        assert_eq!(class_of("Rok je 32.5.2012. za sve.", "32.5.2012."), NswClass::MixedAlphanumeric);
    }

    #[test]
    fn phones_mail_urls() {
        assert_eq!(class_of("Zovite 01/4567-890 odmah.", "01/4567-890"), NswClass::PhoneNumber);
        assert_eq!(class_of("Zovite +385 1 4567 890 odmah.", "+385 1 4567 890"), NswClass::PhoneNumber);
        assert_eq!(class_of("Pišite na ivo.ivic@fer.hr danas.", "ivo.ivic@fer.hr"), NswClass::Email);
        assert_eq!(class_of("Vidi www.fer.hr za više.", "www.fer.hr"), NswClass::Url);
        assert_eq!(class_of("Vidi https://fer.hr/upisi za više.", "https://fer.hr/upisi"), NswClass::Url);
    }

    #[test]
    fn lexicon_classes() {
        assert_eq!(class_of("To je npr. jabuka.", "npr."), NswClass::Abbreviation);
        assert_eq!(class_of("Pješačili smo 5 km dnevno.", "km"), NswClass::MeasurementUnit);
        assert_eq!(class_of("Platio je 20 kn za to.", "kn"), NswClass::Currency);
        assert_eq!(class_of("Rast je 5 % godišnje.", "%"), NswClass::Symbol);
        // alphabetic units need a number before them
        assert_eq!(class_of("Ja i ti smo m jedan.", "m"), NswClass::StandardWord);
    }

    #[test]
    fn roman_needs_context() {
        let res = bundled();
        let doc = res.segmenter.segment("Kuća 5C je tu, a C je slovo.");
        let spans = classify(&doc.sentences()[0], &res.lexicon);
        let c = spans.iter().find(|s| s.surface() == "C").unwrap();
        assert_eq!(c.cls, NswClass::StandardWord);
        assert_eq!(class_of("Kuća 5C je tu.", "5C"), NswClass::MixedAlphanumeric);
        assert_eq!(class_of("Vidi čl. IV zakona.", "IV"), NswClass::RomanNumeral);
        // ill-formed numerals fall through to the acronym rule
        assert_eq!(class_of("Vidi IL. zakona.", "IL"), NswClass::Acronym);
    }

    #[test]
    fn chosen_rule_is_highest_matching() {
        let res = bundled();
        let c = Classifier::new(&res.lexicon, &res.spelling);
        let doc = res.segmenter.segment("Dana 3. 5. 2012. u 14:05 platio je 20 kn na br. 5 tzv. MMF-u.");
        for s in doc.sentences() {
            let mut prev = None;
            for span in c.classify(s) {
                let matches = c.matching_rules(&s.tokens, span.start, prev);
                assert_eq!(matches[0], (span.rule, span.tokens.len()));
                prev = Some(span.cls);
            }
        }
    }
}
