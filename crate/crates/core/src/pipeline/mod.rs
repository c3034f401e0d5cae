//! Tokenize, classify, expand, reattach.
//!
//! Dictionary spans are resolved first so that number spans can agree with
//! the words that follow them: an ordinal, Roman numeral or year copies the
//! tag governed by the next dictionary sense ("g." read as "godine") or listed
//! for the next word in the agreement table; a cardinal takes the gender of a
//! following counted unit or word.

mod config;
mod report;

pub use config::RunConfig;
pub use report::{ReportRecord, RunReport, Status};

use crate::classifier::{parse_grouped, ClassifiedSpan, Classifier, RuleId};
use crate::datetime::{DateParts, Month, TimeParts};
use crate::error::{Error, Result};
use crate::expansion::Expansion;
use crate::fixtures::{self, Resources};
use crate::lexicon::{Context, LetterNameTable, Lexicon, Paradigm};
use crate::morph::{Gender, MorphTag};
use crate::numexpand::{NumberSpelling, MAX_NUMBER};
use crate::taxonomy::NswClass;
use crate::tokenizer::{Document, Replacement, Segmenter, Sentence};

/// Output of a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub text: String,
    pub report: RunReport,
}

/// A span together with what the pipeline made of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpandedSpan {
    pub span: ClassifiedSpan,
    /// `None` for standard words; `Some(Err(source))` for a miss.
    pub outcome: Option<std::result::Result<Expansion, String>>,
}

/// Loaded resources plus run options. Immutable and shareable across threads.
#[derive(Debug, Clone)]
pub struct Normalizer {
    res: Resources,
    capitalize: bool,
    strict: bool,
}

impl Normalizer {
    pub fn new(config: &RunConfig) -> Result<Self> {
        let bundled = fixtures::bundled();
        let spelling = match &config.spelling {
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| Error::io(p, e))?;
                NumberSpelling::parse(&p.display().to_string(), &text)?
            }
            None => bundled.spelling.clone(),
        };
        let letters = match &config.letters {
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| Error::io(p, e))?;
                LetterNameTable::parse(&p.display().to_string(), &text)?
            }
            None => bundled.letters.clone(),
        };
        let profile = config.profile.as_deref();
        let lexicon = if !config.lexicons.is_empty() {
            Lexicon::load(&config.lexicons, profile)?
        } else if profile.is_none() {
            bundled.lexicon.clone()
        } else {
            Lexicon::from_sources(&fixtures::bundled_lexicon_sources(), profile)?
        };
        let segmenter = Segmenter::from_lexicon(&lexicon);
        Ok(Self::from_resources(
            Resources { spelling, letters, lexicon, segmenter },
            config.capitalize_sentence_start,
            config.strict,
        ))
    }

    pub fn from_resources(res: Resources, capitalize: bool, strict: bool) -> Self {
        Self { res, capitalize, strict }
    }

    pub fn resources(&self) -> &Resources {
        &self.res
    }

    pub fn classifier(&self) -> Classifier<'_> {
        Classifier::new(&self.res.lexicon, &self.res.spelling)
    }

    pub fn segment<'a>(&self, text: &'a str) -> Document<'a> {
        self.res.segmenter.segment(text)
    }

    pub fn normalize_bytes(&self, bytes: &[u8]) -> Result<Normalized> {
        let text = std::str::from_utf8(bytes).map_err(|e| Error::Encoding { offset: e.valid_up_to() })?;
        self.normalize(text)
    }

    pub fn normalize(&self, text: &str) -> Result<Normalized> {
        let doc = self.segment(text);
        let mut replacements = Vec::new();
        let mut report = RunReport::default();
        let mut base = 0;
        for sentence in doc.sentences() {
            let last_index = sentence.tokens.len() - 1;
            for ExpandedSpan { span, outcome } in self.expand_sentence(sentence) {
                let Some(outcome) = outcome else { continue };
                let surface = text[span.byte_start()..span.byte_end()].to_string();
                match outcome {
                    Ok(exp) => {
                        let plain = exp.text();
                        let mut out =
                            if self.capitalize && span.start == 0 { capitalize(&plain) } else { plain.clone() };
                        let last = span.last();
                        let final_token = span.start + span.tokens.len() - 1 == last_index;
                        if last.trailing_dot && (final_token || !consumes_dot(&span)) {
                            out.push('.');
                        }
                        replacements.push(Replacement {
                            first: base + span.start,
                            last: base + span.start + span.tokens.len() - 1,
                            text: out,
                        });
                        report.records.push(ReportRecord {
                            offset: span.byte_start(),
                            surface,
                            class: span.cls,
                            expansion: Some(plain),
                            source: exp.source,
                            status: Status::Hit,
                        });
                    }
                    Err(source) => report.records.push(ReportRecord {
                        offset: span.byte_start(),
                        surface,
                        class: span.cls,
                        expansion: None,
                        source,
                        status: Status::Miss,
                    }),
                }
            }
            base += sentence.tokens.len();
        }
        if self.strict && report.misses().next().is_some() {
            return Err(Error::StrictMiss(Box::new(report)));
        }
        let text = doc.reattach_spans(&replacements)?;
        Ok(Normalized { text, report })
    }

    /// Classifies and expands one sentence.
    pub fn expand_sentence(&self, sentence: &Sentence) -> Vec<ExpandedSpan> {
        let spans = self.classifier().classify(sentence);
        let lexicon = &self.res.lexicon;
        let mut paradigms: Vec<Option<Paradigm>> = vec![None; spans.len()];
        let mut outcomes: Vec<Option<std::result::Result<Expansion, String>>> = vec![None; spans.len()];

        for (k, span) in spans.iter().enumerate() {
            if span.rule != RuleId::Lexicon {
                continue;
            }
            let surface = &span.tokens[0].surface;
            let ctx = Context::around(&spans, k, lexicon);
            let hit = lexicon.find(surface, span.start == 0).and_then(|entry| {
                paradigms[k] = entry.select(&ctx).map(|s| s.paradigm);
                lexicon.resolve_entry(entry, surface, &ctx)
            });
            outcomes[k] = Some(hit.ok_or_else(|| "lexicon".to_string()));
        }
        for (k, span) in spans.iter().enumerate() {
            if span.rule == RuleId::Lexicon || span.cls == NswClass::StandardWord {
                continue;
            }
            let source = format!("rule:{}", span.rule);
            outcomes[k] = Some(
                self.expand_span(&spans, k, &paradigms)
                    .map(|(words, tag)| Expansion::new(words, tag, source.clone(), span.surface()))
                    .map_err(|_| source),
            );
        }
        spans.into_iter().zip(outcomes).map(|(span, outcome)| ExpandedSpan { span, outcome }).collect()
    }

    fn expand_span(
        &self,
        spans: &[ClassifiedSpan],
        k: usize,
        paradigms: &[Option<Paradigm>],
    ) -> Result<(Vec<String>, MorphTag)> {
        let sp = &self.res.spelling;
        let span = &spans[k];
        let stem = span.tokens[0].stem();
        let tagged = |words: Vec<String>, tag: MorphTag| Ok((words, tag));
        match span.rule {
            RuleId::Email | RuleId::Url => tagged(self.read_runs(&span.tokens[0].surface, true)?, MorphTag::default()),
            RuleId::Ordinal | RuleId::Roman => {
                let tag = self.following_tag(spans, k, paradigms).unwrap_or_default();
                if span.rule == RuleId::Roman {
                    return tagged(sp.expand_roman(stem, tag)?, tag);
                }
                match parse_grouped(stem).filter(|n| *n < MAX_NUMBER) {
                    Some(n) => tagged(sp.expand_ordinal(n, tag)?, tag),
                    None => tagged(sp.expand_digits(&stem.replace('.', ""))?, tag),
                }
            }
            RuleId::Year => {
                let tag = self.following_tag(spans, k, paradigms).unwrap_or(MorphTag::feminine());
                let n = stem.parse().map_err(|_| Error::NumberParse(stem.to_string()))?;
                tagged(sp.expand_ordinal(n, tag)?, tag)
            }
            RuleId::Cardinal => {
                let gender = self.following_gender(spans, k, paradigms);
                let tag = MorphTag::default().with_gender(gender);
                let (negative, body) = match stem.strip_prefix('-') {
                    Some(b) => (true, b),
                    None => (false, stem),
                };
                let mut words = if negative { vec![sp.word("minus").to_string()] } else { Vec::new() };
                words.extend(self.read_number(body, tag)?);
                tagged(words, tag)
            }
            RuleId::Decimal => {
                let (negative, body) = match stem.strip_prefix('-') {
                    Some(b) => (true, b),
                    None => (false, stem),
                };
                let (int, frac) = body.split_once(',').ok_or_else(|| Error::NumberParse(stem.to_string()))?;
                let n = parse_grouped(int).ok_or_else(|| Error::NumberParse(stem.to_string()))?;
                let tag = MorphTag::default().with_gender(sp.count_gender("decimal"));
                let mut words = if negative { vec![sp.word("minus").to_string()] } else { Vec::new() };
                words.extend(sp.expand_cardinal(n, tag)?);
                words.push(sp.paucal_word("decimal", n).to_string());
                let zeros = frac.len() - frac.trim_start_matches('0').len();
                words.extend(std::iter::repeat_n(sp.zero().to_string(), zeros));
                let rest = &frac[zeros..];
                if !rest.is_empty() {
                    words.extend(self.read_number(rest, MorphTag::default())?);
                }
                tagged(words, tag)
            }
            RuleId::Time => {
                let mut parts = stem.split(':').map(|p| p.parse::<u8>());
                let mut next = || -> Result<Option<u8>> {
                    parts.next().transpose().map_err(|_| Error::MalformedTime(stem.to_string()))
                };
                let hours = next()?.ok_or_else(|| Error::MalformedTime(stem.to_string()))?;
                let minutes = next()?.ok_or_else(|| Error::MalformedTime(stem.to_string()))?;
                let seconds = next()?;
                tagged(sp.expand_time(&TimeParts { hours, minutes, seconds })?, MorphTag::default())
            }
            RuleId::PhoneSingle | RuleId::PhoneGrouped => {
                let mut groups: Vec<&str> = if span.rule == RuleId::PhoneSingle {
                    stem.split(['/', '-']).collect()
                } else {
                    span.tokens.iter().map(|t| t.stem()).collect()
                };
                let mut words = Vec::new();
                if let Some(first) = groups[0].strip_prefix('+') {
                    words.push(sp.word("plus").to_string());
                    groups[0] = first;
                }
                words.extend(sp.expand_phone(&groups)?);
                tagged(words, MorphTag::default())
            }
            RuleId::DateNumericCompact | RuleId::DateNumericSpaced | RuleId::DateCombined => {
                let date = date_parts(span)?;
                let tag = self.following_tag(spans, k, paradigms).unwrap_or(MorphTag::feminine());
                tagged(sp.expand_date_with_year_tag(&date, tag)?, MorphTag::default())
            }
            RuleId::Acronym => tagged(self.res.letters.spell(stem)?, MorphTag::default()),
            RuleId::Mixed => tagged(self.read_runs(stem, false)?, MorphTag::default()),
            RuleId::Lexicon | RuleId::Word => unreachable!("handled by the caller"),
        }
    }

    /// Digits as a cardinal, or one by one when they start with zero or are too long.
    fn read_number(&self, digits: &str, tag: MorphTag) -> Result<Vec<String>> {
        let sp = &self.res.spelling;
        let plain = digits.replace('.', "");
        match parse_grouped(digits).filter(|n| *n < MAX_NUMBER) {
            Some(n) if !(plain.len() > 1 && plain.starts_with('0')) => sp.expand_cardinal(n, tag),
            _ => sp.expand_digits(&plain),
        }
    }

    /// Reads a token run by run. Addresses read pronounceable letter runs as
    /// words and name their separators; mixed tokens spell capitals and
    /// single letters and drop hyphens.
    fn read_runs(&self, surface: &str, address: bool) -> Result<Vec<String>> {
        let sp = &self.res.spelling;
        let mut words = Vec::new();
        let chars: Vec<char> = surface.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c.is_alphabetic() || c.is_ascii_digit() {
                let digit = c.is_ascii_digit();
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() == digit && (digit || chars[j].is_alphabetic()) {
                    j += 1;
                }
                let run: String = chars[i..j].iter().collect();
                if digit {
                    words.extend(self.read_number(&run, MorphTag::default())?);
                } else if address && pronounceable(&run) {
                    words.push(run.to_lowercase());
                } else if !address && j - i > 1 && !run.chars().any(char::is_uppercase) {
                    words.push(run);
                } else {
                    words.extend(self.res.letters.spell(&run)?);
                }
                i = j;
                continue;
            }
            let key = match c {
                '@' => Some("at"),
                '.' => Some("dot"),
                '/' => Some("slash"),
                ':' => Some("colon"),
                '_' => Some("underscore"),
                '~' => Some("tilde"),
                '+' => Some("plus"),
                '-' if address => Some("hyphen"),
                _ => None,
            };
            match key {
                Some(k) => words.push(sp.word(k).to_string()),
                None => {
                    let symbol = self.res.lexicon.resolve(&c.to_string(), &Context::default());
                    if let Some(e) = symbol {
                        words.extend(e.words);
                    }
                }
            }
            i += 1;
        }
        if words.is_empty() {
            return Err(Error::Spell(surface.chars().next().unwrap_or(' ')));
        }
        Ok(words)
    }

    /// Tag imposed by the next span on a preceding ordinal-like number.
    fn following_tag(&self, spans: &[ClassifiedSpan], k: usize, paradigms: &[Option<Paradigm>]) -> Option<MorphTag> {
        let next = spans.get(k + 1)?;
        if let Some(Paradigm::Governs(tag)) = paradigms[k + 1] {
            return Some(tag);
        }
        (next.cls == NswClass::StandardWord).then(|| self.res.spelling.agreement(&next.tokens[0].surface)).flatten()
    }

    /// Gender a cardinal takes from the counted word after it.
    fn following_gender(&self, spans: &[ClassifiedSpan], k: usize, paradigms: &[Option<Paradigm>]) -> Gender {
        if let Some(Paradigm::Paucal(g)) = paradigms.get(k + 1).copied().flatten() {
            return g;
        }
        self.following_tag(spans, k, paradigms).map(|t| t.gender).unwrap_or_default()
    }
}

/// Whether the attached dot belongs to the reading (ordinal and date dots,
/// abbreviation dots) rather than to the punctuation of the sentence.
fn consumes_dot(span: &ClassifiedSpan) -> bool {
    matches!(
        span.cls,
        NswClass::OrdinalNumber | NswClass::RomanNumeral | NswClass::DateNumeric | NswClass::DateCombined
    ) || (span.rule == RuleId::Lexicon && span.tokens[0].surface.ends_with('.'))
}

fn date_parts(span: &ClassifiedSpan) -> Result<DateParts> {
    let bad = || Error::MalformedDate(span.surface());
    let num = |s: &str| s.parse::<u16>().map_err(|_| bad());
    let last = span.last();
    let (day, month, year) = match span.rule {
        RuleId::DateNumericCompact => {
            let body = last.stem();
            let parts: Vec<&str> = body.split(['.', '/']).collect();
            let [d, m, y] = parts[..] else { return Err(bad()) };
            (num(d)?, Month::Number(num(m)? as u8), Some(num(y)?))
        }
        RuleId::DateNumericSpaced => {
            let t = &span.tokens;
            (num(t[0].stem())?, Month::Number(num(t[1].stem())? as u8), Some(num(t[2].stem())?))
        }
        _ => {
            let t = &span.tokens;
            let year = t.get(2).map(|y| num(y.stem())).transpose()?;
            (num(t[0].stem())?, Month::Name(t[1].surface.clone()), year)
        }
    };
    let day = u8::try_from(day).map_err(|_| bad())?;
    Ok(DateParts { day, month, year, dot_after_year: year.is_some() && last.trailing_dot })
}

/// At least three letters, a vowel, and no run of four consonants.
fn pronounceable(run: &str) -> bool {
    let lower = run.to_lowercase();
    let is_vowel = |c: char| "aeiou".contains(c);
    let mut consonants = 0;
    for c in lower.chars() {
        consonants = if is_vowel(c) { 0 } else { consonants + 1 };
        if consonants >= 4 {
            return false;
        }
    }
    lower.chars().count() >= 3 && lower.chars().any(is_vowel)
}

fn capitalize(s: &str) -> String {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) => c.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

/// Normalizes with the bundled resources under `config`.
pub fn normalize(text: &str, config: &RunConfig) -> Result<Normalized> {
    Normalizer::new(config)?.normalize(text)
}
