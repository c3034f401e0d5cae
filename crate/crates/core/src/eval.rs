//! Token and flective correctness against an annotated gold corpus.
//!
//! A gold span is recognized when the system reported a span with exactly the
//! same byte range. A recognized span is flectively correct when its expansion
//! equals one of the accepted gold expansions after whitespace collapsing and
//! lowercasing. Token correctness is recognized/total, flective correctness is
//! correct/recognized (0 when nothing was recognized).

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};
use crate::pipeline::{Normalizer, RunConfig, RunReport};
use crate::taxonomy::NswClass;
use crate::tsv;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Genre {
    Educational,
    Scientific,
    Popular,
    News,
    Formal,
}

impl Genre {
    pub const ALL: [Genre; 5] = [Genre::Educational, Genre::Scientific, Genre::Popular, Genre::News, Genre::Formal];

    pub fn name(self) -> &'static str {
        match self {
            Genre::Educational => "educational",
            Genre::Scientific => "scientific",
            Genre::Popular => "popular",
            Genre::News => "news",
            Genre::Formal => "formal",
        }
    }
}

impl fmt::Display for Genre {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Genre {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Genre::ALL.into_iter().find(|g| g.name() == s).ok_or_else(|| format!("unknown genre `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldRecord {
    pub text_id: String,
    pub genre: Genre,
    pub byte_start: usize,
    pub byte_end: usize,
    pub gold_class: NswClass,
    pub gold_expansions: Vec<String>,
}

pub const GOLD_COLUMNS: usize = 6;

/// Parses gold TSV: text id, genre, start, end, class, `|`-separated expansions.
pub fn parse_gold(file: &str, content: &str) -> Result<Vec<GoldRecord>> {
    let mut violations = Vec::new();
    let records = parse_gold_collecting(file, content, &mut violations);
    if violations.is_empty() {
        Ok(records)
    } else {
        Err(Error::Load(violations))
    }
}

pub fn parse_gold_collecting(file: &str, content: &str, violations: &mut Vec<Violation>) -> Vec<GoldRecord> {
    let mut records = Vec::new();
    for row in tsv::rows(file, content, GOLD_COLUMNS, violations) {
        let bad = |col: usize, msg: String| Violation::new(file, row.line, col, msg);
        let genre = row.field(2).parse::<Genre>().map_err(|e| bad(2, e));
        let start = row.field(3).parse::<usize>().map_err(|e| bad(3, format!("bad start offset: {e}")));
        let end = row.field(4).parse::<usize>().map_err(|e| bad(4, format!("bad end offset: {e}")));
        let class = row.field(5).parse::<NswClass>().map_err(|e| bad(5, e));
        let expansions: Vec<String> = row.field(6).split('|').map(|s| s.trim().to_string()).collect();
        match (genre, start, end, class) {
            (Ok(genre), Ok(start), Ok(end), Ok(class)) => {
                if start >= end {
                    violations.push(bad(4, format!("empty span {start}..{end}")));
                } else if expansions.iter().any(String::is_empty) {
                    violations.push(bad(6, "empty gold expansion".into()));
                } else {
                    records.push(GoldRecord {
                        text_id: row.field(1).to_string(),
                        genre,
                        byte_start: start,
                        byte_end: end,
                        gold_class: class,
                        gold_expansions: expansions,
                    });
                }
            }
            (g, s, e, c) => violations.extend([g.err(), s.err(), e.err(), c.err()].into_iter().flatten()),
        }
    }
    records
}

/// One row of the report.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub texts: usize,
    pub words: usize,
    pub total: usize,
    pub unrecognized: usize,
    pub recognized: usize,
    pub correct: usize,
    pub incorrect: usize,
    /// Recognized spans whose class also matches the gold class.
    pub class_correct: usize,
}

impl Counters {
    pub fn token_correctness(&self) -> f64 {
        percent(self.recognized, self.total)
    }

    pub fn flective_correctness(&self) -> f64 {
        percent(self.correct, self.recognized)
    }

    pub fn class_accuracy(&self) -> f64 {
        percent(self.class_correct, self.recognized)
    }

    fn add(&mut self, other: &Counters) {
        self.texts += other.texts;
        self.words += other.words;
        self.total += other.total;
        self.unrecognized += other.unrecognized;
        self.recognized += other.recognized;
        self.correct += other.correct;
        self.incorrect += other.incorrect;
        self.class_correct += other.class_correct;
    }

    /// Problems with the row's internal arithmetic.
    pub fn conservation_errors(&self) -> Vec<String> {
        let mut errors = Vec::new();
        if self.unrecognized + self.recognized != self.total {
            errors.push(format!(
                "unrecognized {} + recognized {} != total {}",
                self.unrecognized, self.recognized, self.total
            ));
        }
        if self.correct + self.incorrect != self.recognized {
            errors.push(format!(
                "correct {} + incorrect {} != recognized {}",
                self.correct, self.incorrect, self.recognized
            ));
        }
        if self.class_correct > self.recognized {
            errors.push(format!("class-correct {} > recognized {}", self.class_correct, self.recognized));
        }
        errors
    }
}

fn percent(part: usize, whole: usize) -> f64 {
    if whole == 0 {
        0.0
    } else {
        100.0 * part as f64 / whole as f64
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalReport {
    pub genres: BTreeMap<Genre, Counters>,
    pub overall: Counters,
}

impl EvalReport {
    /// Builds a report from per-genre rows; OVERALL is their sum.
    pub fn from_genres(genres: BTreeMap<Genre, Counters>) -> Self {
        let mut overall = Counters::default();
        for c in genres.values() {
            overall.add(c);
        }
        Self { genres, overall }
    }

    /// A report holding only an OVERALL row, as published tables sometimes do.
    /// The counters are taken as given.
    pub fn from_overall(overall: Counters) -> Self {
        Self { genres: BTreeMap::new(), overall }
    }

    /// Checks every row's arithmetic and that OVERALL sums the genre rows.
    pub fn check_conservation(&self) -> std::result::Result<(), Vec<String>> {
        let mut errors = Vec::new();
        for (g, c) in &self.genres {
            errors.extend(c.conservation_errors().into_iter().map(|e| format!("{g}: {e}")));
        }
        errors.extend(self.overall.conservation_errors().into_iter().map(|e| format!("OVERALL: {e}")));
        if !self.genres.is_empty() {
            let mut sum = Counters::default();
            for c in self.genres.values() {
                sum.add(c);
            }
            if sum != self.overall {
                errors.push("OVERALL differs from the sum of the genre rows".to_string());
            }
        }
        if errors.is_empty() {
            Ok(())
        } else {
            Err(errors)
        }
    }
}

/// Whitespace collapsed and lowercased.
pub fn canonical(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ").to_lowercase()
}

/// Scores system reports (keyed by text id) against gold records.
/// `texts` maps text ids to their content and must contain every id the gold
/// records reference.
pub fn evaluate(
    outputs: &HashMap<String, RunReport>,
    gold: &[GoldRecord],
    texts: &BTreeMap<String, String>,
) -> Result<EvalReport> {
    let mut genres: BTreeMap<Genre, Counters> = BTreeMap::new();
    let mut text_genres: BTreeMap<&str, Genre> = BTreeMap::new();
    let empty = RunReport::default();
    for g in gold {
        if !texts.contains_key(&g.text_id) {
            return Err(Error::UnknownText(g.text_id.clone()));
        }
        text_genres.entry(&g.text_id).or_insert(g.genre);
        let row = genres.entry(g.genre).or_default();
        row.total += 1;
        let report = outputs.get(&g.text_id).unwrap_or(&empty);
        let found = report.records.iter().find(|r| r.offset == g.byte_start && r.end() == g.byte_end);
        let Some(record) = found else {
            row.unrecognized += 1;
            continue;
        };
        row.recognized += 1;
        if record.class == g.gold_class {
            row.class_correct += 1;
        }
        let correct = record
            .expansion
            .as_deref()
            .is_some_and(|e| g.gold_expansions.iter().any(|gold| canonical(gold) == canonical(e)));
        if correct {
            row.correct += 1;
        } else {
            row.incorrect += 1;
        }
    }
    for (id, genre) in text_genres {
        let row = genres.entry(genre).or_default();
        row.texts += 1;
        row.words += texts[id].split_whitespace().count();
    }
    Ok(EvalReport::from_genres(genres))
}

/// A gold file plus the texts it annotates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub gold: Vec<GoldRecord>,
    pub texts: BTreeMap<String, String>,
}

impl Corpus {
    /// Loads `gold` and every referenced `<texts_dir>/<id>.txt`.
    pub fn load(gold: &Path, texts_dir: &Path) -> Result<Self> {
        let content = std::fs::read_to_string(gold).map_err(|e| Error::io(gold, e))?;
        let records = parse_gold(&gold.display().to_string(), &content)?;
        let mut texts = BTreeMap::new();
        for r in &records {
            if texts.contains_key(&r.text_id) {
                continue;
            }
            let path = texts_dir.join(format!("{}.txt", r.text_id));
            let text = std::fs::read_to_string(&path).map_err(|e| match e.kind() {
                std::io::ErrorKind::NotFound => Error::UnknownText(r.text_id.clone()),
                _ => Error::io(&path, e),
            })?;
            texts.insert(r.text_id.clone(), text);
        }
        Ok(Self { gold: records, texts })
    }

    /// Genre of each text, from its first gold record.
    pub fn genre_of(&self, text_id: &str) -> Option<Genre> {
        self.gold.iter().find(|g| g.text_id == text_id).map(|g| g.genre)
    }

    /// Normalizes every text and scores the result. Without a profile in
    /// `config`, each text uses its genre as the profile.
    pub fn run(&self, config: &RunConfig) -> Result<(EvalReport, HashMap<String, RunReport>)> {
        let mut normalizers: HashMap<Option<String>, Normalizer> = HashMap::new();
        let mut outputs = HashMap::new();
        for (id, text) in &self.texts {
            let profile = config.profile.clone().or_else(|| self.genre_of(id).map(|g| g.name().to_string()));
            if !normalizers.contains_key(&profile) {
                let n = Normalizer::new(&config.clone().with_profile(profile.as_deref()))?;
                normalizers.insert(profile.clone(), n);
            }
            let out = normalizers[&profile].normalize(text)?;
            outputs.insert(id.clone(), out.report);
        }
        let report = evaluate(&outputs, &self.gold, &self.texts)?;
        Ok((report, outputs))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            _ => Err(format!("unknown report format `{s}` (expected text or json)")),
        }
    }
}

#[derive(Serialize)]
struct JsonRow<'a> {
    genre: &'a str,
    #[serde(flatten)]
    counters: &'a Counters,
    token_correctness: f64,
    flective_correctness: f64,
}

pub fn render_report(report: &EvalReport, format: ReportFormat) -> String {
    let mut rows: Vec<(&str, &Counters)> = report.genres.iter().map(|(g, c)| (g.name(), c)).collect();
    rows.push(("OVERALL", &report.overall));
    let mut out = String::new();
    match format {
        ReportFormat::Text => {
            let _ = writeln!(
                out,
                "{:<12} {:>5} {:>7} {:>6} {:>12} {:>10} {:>7} {:>9} {:>8} {:>9}",
                "genre",
                "texts",
                "words",
                "total",
                "unrecognized",
                "recognized",
                "correct",
                "incorrect",
                "token%",
                "flective%"
            );
            for (name, c) in rows {
                let _ = writeln!(
                    out,
                    "{:<12} {:>5} {:>7} {:>6} {:>12} {:>10} {:>7} {:>9} {:>8.2} {:>9.2}",
                    name,
                    c.texts,
                    c.words,
                    c.total,
                    c.unrecognized,
                    c.recognized,
                    c.correct,
                    c.incorrect,
                    c.token_correctness(),
                    c.flective_correctness()
                );
            }
            let o = &report.overall;
            let _ = writeln!(out, "class accuracy of recognized spans: {:.2}%", o.class_accuracy());
        }
        ReportFormat::Json => {
            for (genre, counters) in rows {
                let row = JsonRow {
                    genre,
                    counters,
                    token_correctness: counters.token_correctness(),
                    flective_correctness: counters.flective_correctness(),
                };
                let _ = writeln!(out, "{}", serde_json::to_string(&row).expect("rows serialize"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::{ReportRecord, Status};

    fn published_overall() -> Counters {
        Counters {
            texts: 18,
            words: 10934,
            total: 1728,
            unrecognized: 80,
            recognized: 1648,
            correct: 1316,
            incorrect: 378,
            class_correct: 0,
        }
    }

    #[test]
    fn published_percentages() {
        let c = published_overall();
        assert!((c.token_correctness() - 95.37).abs() < 0.01);
        assert!((c.flective_correctness() - 79.85).abs() < 0.01);
        let text = render_report(&EvalReport::from_overall(c), ReportFormat::Text);
        let overall = text.lines().find(|l| l.starts_with("OVERALL")).unwrap();
        let fields: Vec<&str> = overall.split_whitespace().collect();
        assert_eq!(fields[1..8], ["18", "10934", "1728", "80", "1648", "1316", "378"]);
    }

    #[test]
    fn published_counters_do_not_conserve() {
        let errors = EvalReport::from_overall(published_overall()).check_conservation().unwrap_err();
        assert!(errors[0].contains("correct 1316 + incorrect 378 != recognized 1648"), "{errors:?}");
    }

    #[test]
    fn empty_denominators_give_zero() {
        let c = Counters::default();
        assert_eq!((c.token_correctness(), c.flective_correctness()), (0.0, 0.0));
    }

    fn record(offset: usize, surface: &str, expansion: &str) -> ReportRecord {
        ReportRecord {
            offset,
            surface: surface.into(),
            class: NswClass::OrdinalNumber,
            expansion: Some(expansion.into()),
            source: "rule:ordinal".into(),
            status: Status::Hit,
        }
    }

    #[test]
    fn exact_spans_and_expansions() {
        let text = "Bio je 3. i 21. put.";
        let texts = BTreeMap::from([("t1".to_string(), text.to_string())]);
        let gold = vec![
            GoldRecord {
                text_id: "t1".into(),
                genre: Genre::News,
                byte_start: 7,
                byte_end: 9,
                gold_class: NswClass::OrdinalNumber,
                gold_expansions: vec!["treći".into()],
            },
            GoldRecord {
                text_id: "t1".into(),
                genre: Genre::News,
                byte_start: 12,
                byte_end: 15,
                gold_class: NswClass::OrdinalNumber,
                gold_expansions: vec!["dvadeset i prvi".into(), "dvadeset prvi".into()],
            },
        ];
        let outputs = HashMap::from([(
            "t1".to_string(),
            RunReport { records: vec![record(7, "3.", "Treći"), record(12, "21", "x")] },
        )]);
        let r = evaluate(&outputs, &gold, &texts).unwrap();
        let row = r.genres[&Genre::News];
        assert_eq!((row.total, row.recognized, row.unrecognized, row.correct), (2, 1, 1, 1));
        assert_eq!((row.texts, row.words), (1, 6));
        assert!(r.check_conservation().is_ok());

        let mut perturbed = gold.clone();
        perturbed[0].gold_expansions = vec!["treći!".into()];
        let r2 = evaluate(&outputs, &perturbed, &texts).unwrap();
        assert_eq!(r2.overall.correct, 0);
        assert_eq!(r2.overall.incorrect, 1);

        let mut unknown = gold;
        unknown[0].text_id = "t9".into();
        assert!(matches!(evaluate(&outputs, &unknown, &texts), Err(Error::UnknownText(id)) if id == "t9"));
    }

    #[test]
    fn single_genre_overall_matches_row() {
        let mut genres = BTreeMap::new();
        genres.insert(
            Genre::Formal,
            Counters {
                texts: 1,
                words: 10,
                total: 4,
                unrecognized: 1,
                recognized: 3,
                correct: 2,
                incorrect: 1,
                class_correct: 3,
            },
        );
        let r = EvalReport::from_genres(genres);
        assert_eq!(r.overall, r.genres[&Genre::Formal]);
        let json = render_report(&r, ReportFormat::Json);
        assert_eq!(json.lines().count(), 2);
        assert!(json.lines().last().unwrap().contains(r#""genre":"OVERALL""#));
    }

    #[test]
    fn gold_parsing_reports_columns() {
        let ok = "# schema: gold/v1\nt1\tnews\t7\t9\tOrdinalNumber\ttreći|treću\n";
        assert_eq!(parse_gold("g.tsv", ok).unwrap()[0].gold_expansions.len(), 2);
        let bad = "t1\tsports\t7\t9\tOrdinalNumber\ttreći\n";
        let Err(Error::Load(v)) = parse_gold("g.tsv", bad) else { panic!() };
        assert_eq!((v[0].line, v[0].column), (1, 2));
    }
}
