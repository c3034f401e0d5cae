//! Dictionaries of abbreviations, symbols, units and currencies.
//!
//! Each dictionary row is one sense of a surface. Senses of the same
//! `(surface, profile)` pair form one entry; at most one sense per entry may
//! lack a context rule and that one is the default. When a profile is
//! selected, its entries replace the profile-less entries with the same
//! surface.

mod context;
mod letters;

pub use context::{Context, ContextRule, Neighbor, Paradigm, Quantity};
pub use letters::{spell_acronym, LetterNameTable, CROATIAN_ALPHABET};

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result, Violation};
use crate::expansion::Expansion;
use crate::morph::{MorphTag, Paucal};
use crate::taxonomy::NswClass;
use crate::tokenizer::lower_first;
use crate::tsv;

/// Where a sense was defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowRef {
    pub file: String,
    pub line: usize,
}

#[derive(Debug, Clone, Eq)]
pub struct Sense {
    pub expansion: String,
    pub paradigm: Paradigm,
    pub rule: Option<ContextRule>,
    pub comment: String,
    pub origin: RowRef,
}

/// Provenance is not part of a sense's identity.
impl PartialEq for Sense {
    fn eq(&self, other: &Self) -> bool {
        self.expansion == other.expansion
            && self.paradigm == other.paradigm
            && self.rule == other.rule
            && self.comment == other.comment
    }
}

impl Sense {
    fn words(&self, ctx: &Context<'_>) -> Vec<String> {
        let text = match self.paradigm {
            Paradigm::Paucal(_) => {
                let slot = ctx.prev.as_ref().and_then(|n| n.quantity).map(Quantity::paucal).unwrap_or(Paucal::Plural);
                self.expansion.split('|').nth(slot.index()).unwrap_or(&self.expansion)
            }
            _ => &self.expansion,
        };
        text.split_whitespace().map(str::to_string).collect()
    }

    fn tag(&self) -> MorphTag {
        match self.paradigm {
            Paradigm::Governs(tag) => tag,
            _ => MorphTag::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexEntry {
    pub surface: String,
    pub cls: NswClass,
    pub senses: Vec<Sense>,
    pub profile: Option<String>,
}

impl LexEntry {
    pub fn default_sense(&self) -> Option<&Sense> {
        self.senses.iter().find(|s| s.rule.is_none())
    }

    /// First sense whose rule matches, else the default sense.
    pub fn select(&self, ctx: &Context<'_>) -> Option<&Sense> {
        self.senses.iter().find(|s| s.rule.is_some_and(|r| r.matches(ctx))).or_else(|| self.default_sense())
    }
}

/// Loaded, profile-resolved dictionary. Immutable once built.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: BTreeMap<String, LexEntry>,
    profile: Option<String>,
}

pub const LEXICON_HEADER: &str = "# schema: lexicon/v1\n\
# Columns: surface, class, expansion, morph-paradigm-id, context-rule-id, profile, comment.\n";

impl Lexicon {
    pub fn load<P: AsRef<Path>>(paths: &[P], profile: Option<&str>) -> Result<Self> {
        let mut sources = Vec::new();
        for p in paths {
            let p = p.as_ref();
            let content = std::fs::read_to_string(p).map_err(|e| Error::io(p, e))?;
            sources.push((p.display().to_string(), content));
        }
        Self::from_sources(&sources, profile)
    }

    /// Builds from `(file name, content)` pairs.
    pub fn from_sources<N: AsRef<str>, C: AsRef<str>>(sources: &[(N, C)], profile: Option<&str>) -> Result<Self> {
        let mut violations = Vec::new();
        let lexicon = Self::parse_collecting(sources, profile, &mut violations);
        if violations.is_empty() {
            Ok(lexicon)
        } else {
            Err(Error::Load(violations))
        }
    }

    pub fn parse_collecting<N: AsRef<str>, C: AsRef<str>>(
        sources: &[(N, C)],
        profile: Option<&str>,
        violations: &mut Vec<Violation>,
    ) -> Self {
        // (surface, profile) -> entry plus the file that defined it
        let mut all: BTreeMap<(String, Option<String>), (LexEntry, String)> = BTreeMap::new();
        for (name, content) in sources {
            let file = name.as_ref();
            let mut defaults: HashMap<(String, Option<String>), usize> = HashMap::new();
            for row in tsv::rows(file, content.as_ref(), 7, violations) {
                let bad = |col: usize, msg: String| Violation::new(file, row.line, col, msg);
                let surface = row.field(1).to_string();
                let cls = match row.field(2).parse::<NswClass>() {
                    Ok(c) if c.is_lexical() => c,
                    Ok(c) => {
                        violations.push(bad(2, format!("class {c} cannot come from a dictionary")));
                        continue;
                    }
                    Err(e) => {
                        violations.push(bad(2, e));
                        continue;
                    }
                };
                let paradigm = match row.field(4).parse::<Paradigm>() {
                    Ok(p) => p,
                    Err(e) => {
                        violations.push(bad(4, e));
                        continue;
                    }
                };
                let expansion = row.field(3).to_string();
                let forms = expansion.split('|').count();
                match paradigm {
                    Paradigm::Paucal(_) if forms != 3 || expansion.split('|').any(|f| f.trim().is_empty()) => {
                        violations.push(bad(3, "paucal expansion needs singular|paucal|plural forms".into()));
                        continue;
                    }
                    Paradigm::Invariant | Paradigm::Governs(_) if forms != 1 => {
                        violations.push(bad(3, "only paucal paradigms take |-separated forms".into()));
                        continue;
                    }
                    _ => {}
                }
                let rule = match row.field(5) {
                    "-" => None,
                    id => match id.parse::<ContextRule>() {
                        Ok(r) => Some(r),
                        Err(e) => {
                            violations.push(bad(5, e));
                            continue;
                        }
                    },
                };
                let row_profile = match row.field(6) {
                    "-" => None,
                    p => Some(p.to_string()),
                };
                let key = (surface.clone(), row_profile.clone());
                if rule.is_none() {
                    if let Some(first) = defaults.insert(key.clone(), row.line) {
                        violations
                            .push(bad(5, format!("second default sense for `{surface}` (first on line {first})")));
                        continue;
                    }
                }
                let sense = Sense {
                    expansion,
                    paradigm,
                    rule,
                    comment: row.field(7).to_string(),
                    origin: RowRef { file: file.to_string(), line: row.line },
                };
                match all.get_mut(&key) {
                    Some((entry, owner)) if owner == file => {
                        if entry.cls != cls {
                            violations.push(bad(2, format!("class {cls} differs from earlier sense ({})", entry.cls)));
                            continue;
                        }
                        entry.senses.push(sense);
                    }
                    Some((entry, owner)) => {
                        violations.push(bad(
                            1,
                            format!(
                                "duplicate entry `{surface}` (profile {}), already defined in {owner}:{}",
                                row_profile.as_deref().unwrap_or("-"),
                                entry.senses[0].origin.line
                            ),
                        ));
                    }
                    None => {
                        let entry = LexEntry { surface, cls, senses: vec![sense], profile: row_profile };
                        all.insert(key, (entry, file.to_string()));
                    }
                }
            }
        }

        let mut entries = BTreeMap::new();
        for ((surface, row_profile), (entry, _)) in all {
            match (&row_profile, profile) {
                (None, _) => {
                    entries.entry(surface).or_insert(entry);
                }
                (Some(p), Some(selected)) if p == selected => {
                    entries.insert(surface, entry);
                }
                _ => {}
            }
        }
        Lexicon { entries, profile: profile.map(str::to_string) }
    }

    pub fn profile(&self) -> Option<&str> {
        self.profile.as_deref()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = &LexEntry> {
        self.entries.values()
    }

    pub fn surfaces(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn contains(&self, surface: &str) -> bool {
        self.entries.contains_key(surface)
    }

    pub fn get(&self, surface: &str) -> Option<&LexEntry> {
        self.entries.get(surface)
    }

    /// Exact lookup, falling back to a lowercased first letter at sentence
    /// start and for dotted abbreviations ("Ul.", "Br.").
    pub fn find(&self, surface: &str, sentence_initial: bool) -> Option<&LexEntry> {
        let fold = sentence_initial || (surface.len() > 1 && surface.ends_with('.'));
        self.entries.get(surface).or_else(|| fold.then(|| self.entries.get(&lower_first(surface))).flatten())
    }

    /// Expansion of `surface` in `ctx`, or `None` on a miss.
    pub fn resolve(&self, surface: &str, ctx: &Context<'_>) -> Option<Expansion> {
        self.resolve_entry(self.get(surface)?, surface, ctx)
    }

    pub fn resolve_entry(&self, entry: &LexEntry, surface: &str, ctx: &Context<'_>) -> Option<Expansion> {
        let sense = entry.select(ctx)?;
        let source = format!("lexicon:{}:{}", sense.origin.file, sense.origin.line);
        Some(Expansion::new(sense.words(ctx), sense.tag(), source, surface))
    }

    /// Serializes the resolved entries; reloading the text with the same
    /// profile yields an equal lexicon.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from(LEXICON_HEADER);
        for entry in self.entries.values() {
            for s in &entry.senses {
                let rule = s.rule.map(|r| r.to_string()).unwrap_or_else(|| "-".into());
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    entry.surface,
                    entry.cls,
                    s.expansion,
                    s.paradigm,
                    rule,
                    entry.profile.as_deref().unwrap_or("-"),
                    s.comment
                );
            }
        }
        out
    }
}

pub fn load<P: AsRef<Path>>(paths: &[P], profile: Option<&str>) -> Result<Lexicon> {
    Lexicon::load(paths, profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::taxonomy::NswClass;

    const G_ENTRY: &str = "g.\tAbbreviation\tgodine\tgen.f.sg\tfollows-ordinal\t-\tyear\n\
g.\tAbbreviation\tgram|grama|grama\tpaucal.m\tfollows-cardinal\t-\tgram\n\
g.\tAbbreviation\tgospodin\t-\tadjacent-proper-name\t-\tmister\n";

    fn neighbor(cls: NswClass, surface: &str, quantity: Option<Quantity>) -> Neighbor<'_> {
        Neighbor { cls, surface, proper_name: false, quantity }
    }

    fn lex(text: &str, profile: Option<&str>) -> Lexicon {
        Lexicon::from_sources(&[("t.tsv", text)], profile).unwrap()
    }

    #[test]
    fn g_resolves_by_context() {
        let l = lex(G_ENTRY, None);
        assert_eq!(l.get("g.").unwrap().senses.len(), 3);

        let ctx = Context { prev: Some(neighbor(NswClass::OrdinalNumber, "2012.", None)), next: None };
        let e = l.resolve("g.", &ctx).unwrap();
        assert_eq!(e.text(), "godine");
        assert_eq!(e.tags[0].to_string(), "gen.f.sg");
        assert_eq!(e.source, "lexicon:t.tsv:1");

        let ctx =
            Context { prev: Some(neighbor(NswClass::CardinalNumber, "5", Some(Quantity::Integer(5)))), next: None };
        assert_eq!(l.resolve("g.", &ctx).unwrap().text(), "grama");
        let ctx =
            Context { prev: Some(neighbor(NswClass::CardinalNumber, "1", Some(Quantity::Integer(1)))), next: None };
        assert_eq!(l.resolve("g.", &ctx).unwrap().text(), "gram");

        let mut name = neighbor(NswClass::StandardWord, "Horvat", None);
        name.proper_name = true;
        let ctx = Context { prev: None, next: Some(name) };
        assert_eq!(l.resolve("g.", &ctx).unwrap().text(), "gospodin");

        // no neighbours, no default sense
        assert_eq!(l.resolve("g.", &Context::default()), None);
        assert_eq!(l.resolve("xyz.", &Context::default()), None);
    }

    #[test]
    fn empty_file_gives_empty_lexicon() {
        let l = lex("# nothing here\n", None);
        assert!(l.is_empty());
        assert_eq!(l.resolve("npr.", &Context::default()), None);
    }

    #[test]
    fn two_defaults_are_rejected() {
        let text = "st.\tAbbreviation\tstoljeće\t-\t-\t-\ta\nst.\tAbbreviation\tstudent\t-\t-\t-\tb\n";
        let Err(Error::Load(v)) = Lexicon::from_sources(&[("d.tsv", text)], None) else {
            panic!("expected a load error");
        };
        assert_eq!((v[0].file.as_str(), v[0].line, v[0].column), ("d.tsv", 2, 5));
    }

    #[test]
    fn duplicate_across_files_is_rejected() {
        let a = "npr.\tAbbreviation\tna primjer\t-\t-\t-\ta\n";
        let err = Lexicon::from_sources(&[("a.tsv", a), ("b.tsv", a)], None).unwrap_err();
        assert!(err.to_string().contains("duplicate entry `npr.`"), "{err}");
    }

    #[test]
    fn schema_errors_name_the_column() {
        let cases = [
            ("x.\tWord\tx\t-\t-\t-\tc\n", 2),
            ("x.\tAbbreviation\tx\tplural\t-\t-\tc\n", 4),
            ("x.\tAbbreviation\tx\t-\tafter-noun\t-\tc\n", 5),
            ("x\tCurrency\tkuna|kune\tpaucal.f\t-\t-\tc\n", 3),
            ("x.\tAbbreviation\tx\n", 4),
        ];
        for (text, column) in cases {
            let Err(Error::Load(v)) = Lexicon::from_sources(&[("m.tsv", text)], None) else {
                panic!("expected a load error for {text:?}");
            };
            assert_eq!((v[0].line, v[0].column), (1, column), "{text:?}");
        }
    }

    #[test]
    fn profile_rows_shadow_general_rows() {
        let text = "st.\tAbbreviation\tstoljeće\t-\t-\t-\tdefault\n\
st.\tAbbreviation\tstavak\t-\t-\tformal\tlegal\n\
sv.\tAbbreviation\tsveti\t-\t-\t-\tsaint\n";
        let general = lex(text, None);
        assert_eq!(general.resolve("st.", &Context::default()).unwrap().text(), "stoljeće");
        let formal = lex(text, Some("formal"));
        assert_eq!(formal.resolve("st.", &Context::default()).unwrap().text(), "stavak");
        assert_eq!(formal.resolve("sv.", &Context::default()).unwrap().text(), "sveti");
        let news = lex(text, Some("news"));
        assert_eq!(news.resolve("st.", &Context::default()).unwrap().text(), "stoljeće");
    }

    #[test]
    fn serialization_round_trips() {
        let sources = [
            ("abbreviations.tsv", include_str!("../../data/abbreviations.tsv")),
            ("symbols.tsv", include_str!("../../data/symbols.tsv")),
        ];
        for profile in [None, Some("formal"), Some("educational")] {
            let l = Lexicon::from_sources(&sources, profile).unwrap();
            let again = Lexicon::from_sources(&[("round.tsv", l.to_tsv())], profile).unwrap();
            assert_eq!(l, again);
        }
    }
}
