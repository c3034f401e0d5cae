//! Loader for the numeral, month and reading-word tables (`spelling/v1`).

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::{Error, Result, Violation};
use crate::morph::{Gender, MorphTag, Paucal};
use crate::tsv;

/// Stem class of an ordinal root; selects the adjective ending set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StemKind {
    Hard,
    Soft,
}

impl StemKind {
    fn parse(s: &str) -> Option<StemKind> {
        match s {
            "hard" => Some(StemKind::Hard),
            "soft" => Some(StemKind::Soft),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleWord {
    /// Gender of the count in front of the scale word ("dvije tisuće", "dva milijuna").
    pub gender: Gender,
    /// Form used when the group value is exactly one and the count word is dropped.
    pub one: String,
    /// Singular, paucal and plural forms.
    pub forms: [String; 3],
}

impl ScaleWord {
    pub fn form(&self, count: u64) -> &str {
        &self.forms[Paucal::of(count).index()]
    }
}

pub const SCALE_VALUES: [u64; 4] = [1_000, 1_000_000, 1_000_000_000, 1_000_000_000_000];

/// Reading words the expanders need besides the numerals themselves.
pub const REQUIRED_WORDS: &[&str] =
    &["and", "minus", "plus", "at", "dot", "slash", "colon", "hyphen", "underscore", "tilde"];
/// Words with singular/paucal/plural forms, each with a count gender.
pub const REQUIRED_PAUCAL_WORDS: &[&str] = &["decimal", "hour", "minute", "second"];

#[derive(Debug, Clone)]
pub struct NumberSpelling {
    units: [[String; 3]; 10],
    teens: [String; 10],
    tens: [String; 10],
    hundreds: [String; 10],
    scales: [ScaleWord; 4],
    ordinal_roots: BTreeMap<u64, (String, StemKind)>,
    endings: HashMap<(StemKind, MorphTag), String>,
    months: [(String, String); 12],
    words: HashMap<String, String>,
    paucal_words: HashMap<String, [String; 3]>,
    count_genders: HashMap<String, Gender>,
    agree: HashMap<String, MorphTag>,
    roman_triggers: HashSet<String>,
    year_triggers: HashSet<String>,
    rows: usize,
}

impl NumberSpelling {
    pub fn parse(file: &str, content: &str) -> Result<Self> {
        let mut violations = Vec::new();
        let spelling = Self::parse_collecting(file, content, &mut violations);
        match spelling {
            Some(s) if violations.is_empty() => Ok(s),
            _ => Err(Error::Load(violations)),
        }
    }

    /// Parses and validates, appending every problem to `violations`.
    /// Returns `None` when the tables are incomplete.
    pub fn parse_collecting(file: &str, content: &str, violations: &mut Vec<Violation>) -> Option<Self> {
        let rows = tsv::rows(file, content, 4, violations);
        let mut units: [[Option<String>; 3]; 10] = Default::default();
        let mut teens: [Option<String>; 10] = Default::default();
        let mut tens: [Option<String>; 10] = Default::default();
        let mut hundreds: [Option<String>; 10] = Default::default();
        let mut scales: [(Option<Gender>, [Option<String>; 4]); 4] = Default::default();
        let mut ordinal_roots = BTreeMap::new();
        let mut endings = HashMap::new();
        let mut months: [(Option<String>, Option<String>); 12] = Default::default();
        let mut words = HashMap::new();
        let mut paucal_words: HashMap<String, [Option<String>; 3]> = HashMap::new();
        let mut count_genders = HashMap::new();
        let mut agree = HashMap::new();
        let mut roman_triggers = HashSet::new();
        let mut year_triggers = HashSet::new();

        for row in &rows {
            let (cat, key, form, tag) = (row.field(1), row.field(2), row.field(3), row.field(4));
            let bad = |col: usize, msg: String| Violation::new(file, row.line, col, msg);
            let number = || key.parse::<u64>().map_err(|_| bad(2, format!("key `{key}` is not a number")));
            let mut duplicates = Vec::new();
            let mut set = |slot: &mut Option<String>, what: &str| {
                if slot.replace(form.to_string()).is_some() {
                    duplicates.push(bad(2, format!("duplicate {what} row for {key}")));
                }
            };
            match cat {
                "unit" => match number() {
                    Ok(k) if k <= 9 => {
                        if tag == "-" {
                            for slot in &mut units[k as usize] {
                                set(slot, "unit");
                            }
                        } else {
                            match tag.parse::<Gender>() {
                                Ok(g) => set(&mut units[k as usize][g as usize], "unit"),
                                Err(e) => violations.push(bad(4, e)),
                            }
                        }
                    }
                    Ok(_) => violations.push(bad(2, format!("unit key {key} outside 0-9"))),
                    Err(v) => violations.push(v),
                },
                "teen" => match number() {
                    Ok(k) if (11..=19).contains(&k) => set(&mut teens[(k - 10) as usize], "teen"),
                    Ok(_) => violations.push(bad(2, format!("teen key {key} outside 11-19"))),
                    Err(v) => violations.push(v),
                },
                "ten" => match number() {
                    Ok(k) if k % 10 == 0 && (10..=90).contains(&k) => set(&mut tens[(k / 10) as usize], "ten"),
                    Ok(_) => violations.push(bad(2, format!("ten key {key} is not one of 10, 20, ..., 90"))),
                    Err(v) => violations.push(v),
                },
                "hundred" => match number() {
                    Ok(k) if k % 100 == 0 && (100..=900).contains(&k) => {
                        set(&mut hundreds[(k / 100) as usize], "hundred")
                    }
                    Ok(_) => violations.push(bad(2, format!("hundred key {key} is not one of 100, ..., 900"))),
                    Err(v) => violations.push(v),
                },
                "scale" => {
                    let Some(idx) = number().ok().and_then(|k| SCALE_VALUES.iter().position(|&s| s == k)) else {
                        violations.push(bad(2, format!("scale key `{key}` is not 10^3, 10^6, 10^9 or 10^12")));
                        continue;
                    };
                    let parsed = tag.split_once('.').and_then(|(g, slot)| {
                        let gender = g.parse::<Gender>().ok()?;
                        let pos = ["one", "sg", "pc", "pl"].iter().position(|s| *s == slot)?;
                        Some((gender, pos))
                    });
                    let Some((gender, pos)) = parsed else {
                        violations.push(bad(4, format!("scale tag `{tag}` must be <m|f|n>.<one|sg|pc|pl>")));
                        continue;
                    };
                    let entry = &mut scales[idx];
                    if entry.0.is_some_and(|g| g != gender) {
                        violations.push(bad(4, format!("scale {key} mixes count genders")));
                    }
                    entry.0 = Some(gender);
                    set(&mut entry.1[pos], "scale");
                }
                "ordinal" => match (number(), StemKind::parse(tag)) {
                    (Ok(k), Some(stem)) => {
                        if ordinal_roots.insert(k, (form.to_string(), stem)).is_some() {
                            violations.push(bad(2, format!("duplicate ordinal row for {key}")));
                        }
                    }
                    (Err(v), _) => violations.push(v),
                    (_, None) => violations.push(bad(4, format!("stem kind `{tag}` must be hard or soft"))),
                },
                "ending" => {
                    let Some(stem) = StemKind::parse(key) else {
                        violations.push(bad(2, format!("stem kind `{key}` must be hard or soft")));
                        continue;
                    };
                    match tag.parse::<MorphTag>() {
                        Ok(t) => {
                            if endings.insert((stem, t), form.to_string()).is_some() {
                                violations.push(bad(4, format!("duplicate ending for {key} {tag}")));
                            }
                        }
                        Err(e) => violations.push(bad(4, e)),
                    }
                }
                "month" => match number() {
                    Ok(k) if (1..=12).contains(&k) => {
                        let slot = &mut months[(k - 1) as usize];
                        match tag {
                            "nom" => set(&mut slot.0, "month"),
                            "gen" => set(&mut slot.1, "month"),
                            _ => violations.push(bad(4, format!("month tag `{tag}` must be nom or gen"))),
                        }
                    }
                    Ok(_) => violations.push(bad(2, format!("month key {key} outside 1-12"))),
                    Err(v) => violations.push(v),
                },
                "word" => {
                    if tag == "-" {
                        if words.insert(key.to_string(), form.to_string()).is_some() {
                            violations.push(bad(2, format!("duplicate word row for {key}")));
                        }
                    } else if let Some(p) = Paucal::from_slot(tag) {
                        let slot = &mut paucal_words.entry(key.to_string()).or_default()[p.index()];
                        set(slot, "word");
                    } else {
                        violations.push(bad(4, format!("word tag `{tag}` must be -, sg, pc or pl")));
                    }
                }
                "count-gender" => match form.parse::<Gender>() {
                    Ok(g) => {
                        count_genders.insert(key.to_string(), g);
                    }
                    Err(e) => violations.push(bad(3, e)),
                },
                "agree" => match tag.parse::<MorphTag>() {
                    Ok(t) => {
                        agree.insert(key.to_string(), t);
                    }
                    Err(e) => violations.push(bad(4, e)),
                },
                "roman-trigger" => {
                    roman_triggers.insert(key.to_string());
                }
                "year-trigger" => {
                    year_triggers.insert(key.to_string());
                }
                other => violations.push(bad(1, format!("unknown category `{other}`"))),
            }
            violations.append(&mut duplicates);
        }

        // completeness
        let before = violations.len();
        let missing = |what: &str, key: String| Violation::file_level(file, format!("missing {what} row for {key}"));
        for (k, forms) in units.iter().enumerate() {
            for (g, f) in forms.iter().enumerate() {
                if f.is_none() {
                    violations.push(missing("unit", format!("{k} ({})", Gender::ALL[g].code())));
                }
            }
        }
        for k in 1..=9 {
            if teens[k].is_none() {
                violations.push(missing("teen", (10 + k).to_string()));
            }
            if tens[k].is_none() {
                violations.push(missing("ten", (k * 10).to_string()));
            }
            if hundreds[k].is_none() {
                violations.push(missing("hundred", (k * 100).to_string()));
            }
        }
        for (i, (gender, forms)) in scales.iter().enumerate() {
            if gender.is_none() || forms.iter().any(Option::is_none) {
                violations.push(missing("scale", SCALE_VALUES[i].to_string()));
            }
        }
        let root_keys = (1..=19).chain((2..=9).map(|t| t * 10)).chain((1..=9).map(|h| h * 100));
        for k in root_keys.chain(SCALE_VALUES) {
            if !ordinal_roots.contains_key(&k) {
                violations.push(missing("ordinal", k.to_string()));
            }
        }
        for stem in [StemKind::Hard, StemKind::Soft] {
            for tag in MorphTag::all() {
                if !endings.contains_key(&(stem, tag)) {
                    violations.push(missing("ending", format!("{stem:?} {tag}").to_lowercase()));
                }
            }
        }
        for (i, (nom, gen)) in months.iter().enumerate() {
            if nom.is_none() || gen.is_none() {
                violations.push(missing("month", (i + 1).to_string()));
            }
        }
        for key in REQUIRED_WORDS {
            if !words.contains_key(*key) {
                violations.push(missing("word", key.to_string()));
            }
        }
        for key in REQUIRED_PAUCAL_WORDS {
            if paucal_words.get(*key).is_none_or(|f| f.iter().any(Option::is_none)) {
                violations.push(missing("word", format!("{key} (sg/pc/pl)")));
            }
            if !count_genders.contains_key(*key) {
                violations.push(missing("count-gender", key.to_string()));
            }
        }
        if violations.len() > before {
            return None;
        }

        let take = |o: Option<String>| o.unwrap_or_default();
        Some(NumberSpelling {
            units: units.map(|forms| forms.map(take)),
            teens: teens.map(take),
            tens: tens.map(take),
            hundreds: hundreds.map(take),
            scales: scales.map(|(g, [one, sg, pc, pl])| ScaleWord {
                gender: g.unwrap_or_default(),
                one: take(one),
                forms: [take(sg), take(pc), take(pl)],
            }),
            ordinal_roots,
            endings,
            months: months.map(|(n, g)| (take(n), take(g))),
            words,
            paucal_words: paucal_words.into_iter().map(|(k, v)| (k, v.map(take))).collect(),
            count_genders,
            agree,
            roman_triggers,
            year_triggers,
            rows: rows.len(),
        })
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn unit(&self, digit: u64, gender: Gender) -> &str {
        &self.units[digit as usize][gender as usize]
    }

    pub fn zero(&self) -> &str {
        self.unit(0, Gender::Masculine)
    }

    pub(crate) fn teen(&self, value: u64) -> &str {
        &self.teens[(value - 10) as usize]
    }

    pub(crate) fn ten(&self, value: u64) -> &str {
        &self.tens[(value / 10) as usize]
    }

    pub(crate) fn hundred(&self, value: u64) -> &str {
        &self.hundreds[(value / 100) as usize]
    }

    /// Scale word for 10^(3*index), index 1..=4.
    pub fn scale(&self, index: usize) -> &ScaleWord {
        &self.scales[index - 1]
    }

    pub(crate) fn ordinal_root(&self, value: u64) -> &(String, StemKind) {
        &self.ordinal_roots[&value]
    }

    pub(crate) fn ending(&self, stem: StemKind, tag: MorphTag) -> &str {
        &self.endings[&(stem, tag)]
    }

    /// Nominative month name, `month` in 1..=12.
    pub fn month_nominative(&self, month: u8) -> &str {
        &self.months[month as usize - 1].0
    }

    pub fn month_genitive(&self, month: u8) -> &str {
        &self.months[month as usize - 1].1
    }

    /// Month number for a month name in nominative or genitive, case-insensitive.
    pub fn month_by_name(&self, name: &str) -> Option<u8> {
        let name = name.to_lowercase();
        self.months.iter().position(|(nom, gen)| *nom == name || *gen == name).map(|i| i as u8 + 1)
    }

    pub fn word<'a>(&'a self, key: &'a str) -> &'a str {
        self.words.get(key).map(String::as_str).unwrap_or(key)
    }

    pub fn paucal_word<'a>(&'a self, key: &'a str, count: u64) -> &'a str {
        self.paucal_words.get(key).map(|f| f[Paucal::of(count).index()].as_str()).unwrap_or(key)
    }

    pub fn paucal_word_slot<'a>(&'a self, key: &'a str, slot: Paucal) -> &'a str {
        self.paucal_words.get(key).map(|f| f[slot.index()].as_str()).unwrap_or(key)
    }

    pub fn count_gender(&self, key: &str) -> Gender {
        self.count_genders.get(key).copied().unwrap_or_default()
    }

    /// Tag an ordinal takes when immediately followed by `word`.
    pub fn agreement(&self, word: &str) -> Option<MorphTag> {
        self.agree.get(word).or_else(|| self.agree.get(&word.to_lowercase())).copied()
    }

    pub fn is_roman_trigger(&self, surface: &str) -> bool {
        self.roman_triggers.contains(surface) || self.roman_triggers.contains(&surface.to_lowercase())
    }

    pub fn is_year_trigger(&self, surface: &str) -> bool {
        self.year_triggers.contains(surface) || self.year_triggers.contains(&surface.to_lowercase())
    }

    /// Every word the cardinal speller can emit, with the value it stands for.
    /// Scale words map to their power of a thousand.
    pub(crate) fn cardinal_vocabulary(&self) -> Vec<(&str, NumberWord)> {
        let mut v = Vec::new();
        for (d, forms) in self.units.iter().enumerate() {
            for f in forms {
                v.push((f.as_str(), NumberWord::Value(d as u64)));
            }
        }
        for k in 1..=9u64 {
            v.push((self.teens[k as usize].as_str(), NumberWord::Value(10 + k)));
            v.push((self.tens[k as usize].as_str(), NumberWord::Value(k * 10)));
            v.push((self.hundreds[k as usize].as_str(), NumberWord::Value(k * 100)));
        }
        for (i, s) in self.scales.iter().enumerate() {
            v.push((s.one.as_str(), NumberWord::Scale(SCALE_VALUES[i])));
            for f in &s.forms {
                v.push((f.as_str(), NumberWord::Scale(SCALE_VALUES[i])));
            }
        }
        v.push((self.word("and"), NumberWord::And));
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum NumberWord {
    Value(u64),
    Scale(u64),
    And,
}
