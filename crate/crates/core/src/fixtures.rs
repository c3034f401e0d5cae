//! Shipped data files, their manifest, and the validation harness.
//!
//! Every linguistic table lives under `data/`. The bundled copies compiled
//! into the crate back the default resources; `manifest.toml` records each
//! file's schema, row count and SHA-256 digest so that drift is caught by
//! [`validate_all`].

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result, Violation};
use crate::eval::parse_gold_collecting;
use crate::lexicon::{LetterNameTable, Lexicon};
use crate::numexpand::NumberSpelling;
use crate::taxonomy::NswClass;
use crate::tokenizer::Segmenter;
use crate::tsv;

const SPELLING: &str = include_str!("../data/spelling.tsv");
const LETTERS: &str = include_str!("../data/letters.tsv");
const ABBREVIATIONS: &str = include_str!("../data/abbreviations.tsv");
const SYMBOLS: &str = include_str!("../data/symbols.tsv");

/// Everything a normalizer needs.
#[derive(Debug, Clone)]
pub struct Resources {
    pub spelling: NumberSpelling,
    pub letters: LetterNameTable,
    pub lexicon: Lexicon,
    pub segmenter: Segmenter,
}

static BUNDLED: Lazy<Resources> = Lazy::new(|| {
    let spelling = NumberSpelling::parse("spelling.tsv", SPELLING).expect("bundled spelling table is valid");
    let letters = LetterNameTable::parse("letters.tsv", LETTERS).expect("bundled letter table is valid");
    let lexicon = Lexicon::from_sources(&bundled_lexicon_sources(), None).expect("bundled dictionaries are valid");
    let segmenter = Segmenter::from_lexicon(&lexicon);
    Resources { spelling, letters, lexicon, segmenter }
});

/// Resources built from the data files compiled into the crate.
pub fn bundled() -> &'static Resources {
    &BUNDLED
}

/// `(file name, content)` of the bundled dictionaries.
pub fn bundled_lexicon_sources() -> [(&'static str, &'static str); 2] {
    [("abbreviations.tsv", ABBREVIATIONS), ("symbols.tsv", SYMBOLS)]
}

/// Source-tree location of the shipped data files.
pub fn data_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/data"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Schema {
    Spelling,
    Letters,
    Lexicon,
    Segmentation,
    Gold,
    Text,
}

impl Schema {
    pub const ALL: [Schema; 6] =
        [Schema::Spelling, Schema::Letters, Schema::Lexicon, Schema::Segmentation, Schema::Gold, Schema::Text];

    pub fn id(self) -> &'static str {
        match self {
            Schema::Spelling => "spelling/v1",
            Schema::Letters => "letters/v1",
            Schema::Lexicon => "lexicon/v1",
            Schema::Segmentation => "segmentation/v1",
            Schema::Gold => "gold/v1",
            Schema::Text => "text/v1",
        }
    }

    pub fn from_id(id: &str) -> Option<Schema> {
        Schema::ALL.into_iter().find(|s| s.id() == id)
    }

    /// Schema declared in the file header, else lexicon for TSV files and text otherwise.
    pub fn detect(path: &Path, content: &str) -> std::result::Result<Schema, String> {
        match tsv::declared_schema(content) {
            Some(id) => Schema::from_id(id).ok_or_else(|| format!("unknown schema `{id}`")),
            None if path.extension().is_some_and(|e| e == "txt") => Ok(Schema::Text),
            None => Ok(Schema::Lexicon),
        }
    }
}

pub const SEGMENTATION_COLUMNS: usize = 4;

/// Hand-checked segmentation case: text (with `\n` escapes), expected
/// sentence count, and the token stems that keep their dot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentationCase {
    pub id: String,
    pub text: String,
    pub sentences: usize,
    pub dotted: Vec<String>,
}

pub fn parse_segmentation(file: &str, content: &str, violations: &mut Vec<Violation>) -> Vec<SegmentationCase> {
    let mut cases = Vec::new();
    for row in tsv::rows(file, content, SEGMENTATION_COLUMNS, violations) {
        let Ok(sentences) = row.field(3).parse() else {
            violations.push(Violation::new(file, row.line, 3, format!("bad sentence count `{}`", row.field(3))));
            continue;
        };
        let dotted = match row.field(4) {
            "-" => Vec::new(),
            list => list.split(' ').map(str::to_string).collect(),
        };
        cases.push(SegmentationCase {
            id: row.field(1).to_string(),
            text: row.field(2).replace("\\n", "\n"),
            sentences,
            dotted,
        });
    }
    cases
}

/// Data rows of a file: non-blank, non-comment lines for TSV, all lines for text.
pub fn row_count(schema: Schema, content: &str) -> usize {
    match schema {
        Schema::Text => content.lines().count(),
        _ => content.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')).count(),
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Checks one file against its schema in isolation.
pub fn validate_content(name: &str, schema: Schema, content: &str) -> Vec<Violation> {
    let mut v = Vec::new();
    match schema {
        Schema::Spelling => {
            NumberSpelling::parse_collecting(name, content, &mut v);
        }
        Schema::Letters => {
            LetterNameTable::parse_collecting(name, content, &mut v);
        }
        Schema::Lexicon => {
            Lexicon::parse_collecting(&[(name, content)], None, &mut v);
        }
        Schema::Segmentation => {
            parse_segmentation(name, content, &mut v);
        }
        Schema::Gold => {
            parse_gold_collecting(name, content, &mut v);
        }
        Schema::Text => {
            if let Some(i) = content.split('\n').position(|l| l.ends_with('\r')) {
                v.push(Violation::new(name, i + 1, 0, "CR line ending (files must use LF)"));
            }
        }
    }
    if let Some(declared) = tsv::declared_schema(content) {
        if declared != schema.id() {
            v.push(Violation::new(name, 1, 0, format!("header declares {declared}, expected {}", schema.id())));
        }
    }
    v
}

/// Validates several files together: each on its own, then dictionaries
/// jointly so that duplicates across files are caught.
pub fn validate_files(paths: &[PathBuf]) -> Vec<Violation> {
    let mut violations = Vec::new();
    let mut lexicons = Vec::new();
    for path in paths {
        let name = path.display().to_string();
        let content = match read_text(path) {
            Ok(c) => c,
            Err(v) => {
                violations.push(v);
                continue;
            }
        };
        match Schema::detect(path, &content) {
            Ok(Schema::Lexicon) => lexicons.push((name, content)),
            Ok(Schema::Gold) => {
                violations.extend(validate_content(&name, Schema::Gold, &content));
                violations.extend(check_gold_against_texts(&name, &content, &texts_dir_for(path)));
            }
            Ok(schema) => violations.extend(validate_content(&name, schema, &content)),
            Err(e) => violations.push(Violation::new(name, 1, 0, e)),
        }
    }
    if !lexicons.is_empty() {
        Lexicon::parse_collecting(&lexicons, None, &mut violations);
    }
    violations
}

fn read_text(path: &Path) -> std::result::Result<String, Violation> {
    let name = path.display().to_string();
    let bytes = std::fs::read(path).map_err(|e| Violation::file_level(&name, format!("cannot read: {e}")))?;
    String::from_utf8(bytes).map_err(|e| {
        Violation::file_level(&name, format!("invalid UTF-8 at byte offset {}", e.utf8_error().valid_up_to()))
    })
}

fn texts_dir_for(gold: &Path) -> PathBuf {
    gold.parent().unwrap_or(Path::new("")).join("texts")
}

/// Span, text and coverage checks for a gold file.
fn check_gold_against_texts(name: &str, content: &str, texts_dir: &Path) -> Vec<Violation> {
    let mut v = Vec::new();
    let mut scratch = Vec::new();
    let gold = parse_gold_collecting(name, content, &mut scratch);
    if !scratch.is_empty() {
        // row-level problems are reported by the schema check
        return v;
    }
    let lines: Vec<usize> = {
        let mut throwaway = Vec::new();
        tsv::rows(name, content, crate::eval::GOLD_COLUMNS, &mut throwaway).iter().map(|r| r.line).collect()
    };
    let mut texts: BTreeMap<String, Option<String>> = BTreeMap::new();
    let mut coverage: BTreeMap<NswClass, usize> = BTreeMap::new();
    for (record, &line) in gold.iter().zip(&lines) {
        *coverage.entry(record.gold_class).or_default() += 1;
        let text = texts
            .entry(record.text_id.clone())
            .or_insert_with(|| std::fs::read_to_string(texts_dir.join(format!("{}.txt", record.text_id))).ok());
        let Some(text) = text else {
            v.push(Violation::new(name, line, 1, format!("unknown text `{}`", record.text_id)));
            continue;
        };
        let (s, e) = (record.byte_start, record.byte_end);
        if e > text.len() || !text.is_char_boundary(s) || !text.is_char_boundary(e) {
            v.push(Violation::new(
                name,
                line,
                3,
                format!("span {s}..{e} is not a valid slice of `{}`", record.text_id),
            ));
            continue;
        }
        let slice = &text[s..e];
        if slice.starts_with(char::is_whitespace) || slice.ends_with(char::is_whitespace) {
            v.push(Violation::new(name, line, 3, format!("span {s}..{e} has surrounding whitespace")));
        }
        if record.gold_class == NswClass::StandardWord {
            v.push(Violation::new(name, line, 5, "StandardWord is not a non-standard word class"));
        }
    }
    for class in NswClass::ALL.into_iter().filter(|c| c.is_nsw()) {
        let n = coverage.get(&class).copied().unwrap_or(0);
        if n < 3 {
            v.push(Violation::file_level(name, format!("class {class} has {n} gold records, needs at least 3")));
        }
    }
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    /// Path relative to the manifest.
    pub path: String,
    pub schema: String,
    pub rows: usize,
    pub sha256: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureManifest {
    #[serde(rename = "file", default)]
    pub files: Vec<ManifestEntry>,
}

pub const MANIFEST_HEADER: &str =
    "# Fixture manifest: schema, data-row count and SHA-256 of every shipped data file.\n\
# Regenerate with `hrnorm lexicon-check --write-manifest <data dir>` after editing a file.\n\n";

impl FixtureManifest {
    pub fn parse(text: &str) -> std::result::Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text)
            .map_err(|e| Error::Load(vec![Violation::file_level(path.display().to_string(), e.to_string())]))
    }

    pub fn to_toml(&self) -> String {
        format!("{MANIFEST_HEADER}{}", toml::to_string(self).expect("manifest serializes"))
    }

    /// Describes every `.tsv` and `.txt` file under `dir`.
    pub fn generate(dir: &Path) -> Result<Self> {
        let mut paths = Vec::new();
        collect_files(dir, &mut paths)?;
        paths.sort();
        let mut files = Vec::new();
        for path in paths {
            let bytes = std::fs::read(&path).map_err(|e| Error::io(&path, e))?;
            let content = String::from_utf8_lossy(&bytes);
            let schema = Schema::detect(&path, &content)
                .map_err(|e| Error::Load(vec![Violation::file_level(path.display().to_string(), e)]))?;
            let rel = path.strip_prefix(dir).unwrap_or(&path);
            files.push(ManifestEntry {
                path: rel.components().map(|c| c.as_os_str().to_string_lossy()).collect::<Vec<_>>().join("/"),
                schema: schema.id().to_string(),
                rows: row_count(schema, &content),
                sha256: sha256_hex(&bytes),
            });
        }
        Ok(Self { files })
    }
}

fn collect_files(dir: &Path, out: &mut Vec<PathBuf>) -> Result<()> {
    for entry in std::fs::read_dir(dir).map_err(|e| Error::io(dir, e))? {
        let path = entry.map_err(|e| Error::io(dir, e))?.path();
        if path.is_dir() {
            collect_files(&path, out)?;
        } else if path.extension().is_some_and(|e| e == "tsv" || e == "txt") {
            out.push(path);
        }
    }
    Ok(())
}

/// Outcome of [`validate_all`]; empty when the fixture set is pristine.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub files_checked: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every manifest entry: schema, digest, row count and line endings,
/// then cross-file consistency of dictionaries and the gold corpus.
pub fn validate_all(manifest_path: &Path) -> Result<ValidationReport> {
    let manifest = FixtureManifest::load(manifest_path)?;
    let base = manifest_path.parent().unwrap_or(Path::new(""));
    let mname = manifest_path.display().to_string();
    let mut report = ValidationReport::default();
    let mut lexicons = Vec::new();
    for entry in &manifest.files {
        let path = base.join(&entry.path);
        let name = path.display().to_string();
        report.files_checked += 1;
        let Some(schema) = Schema::from_id(&entry.schema) else {
            report.violations.push(Violation::file_level(
                &mname,
                format!("{}: no validator for schema `{}`", entry.path, entry.schema),
            ));
            continue;
        };
        let content = match read_text(&path) {
            Ok(c) => c,
            Err(v) => {
                report.violations.push(v);
                continue;
            }
        };
        let digest = sha256_hex(content.as_bytes());
        if digest != entry.sha256 {
            report.violations.push(Violation::file_level(
                &name,
                format!("digest {digest} does not match manifest {}", entry.sha256),
            ));
        }
        let rows = row_count(schema, &content);
        if rows != entry.rows {
            report.violations.push(Violation::file_level(&name, format!("{rows} rows, manifest says {}", entry.rows)));
        }
        if schema == Schema::Lexicon {
            if let Some(d) = tsv::declared_schema(&content).filter(|d| *d != schema.id()) {
                report.violations.push(Violation::new(
                    &name,
                    1,
                    0,
                    format!("header declares {d}, expected lexicon/v1"),
                ));
            }
            lexicons.push((name, content));
            continue;
        }
        report.violations.extend(validate_content(&name, schema, &content));
        if schema == Schema::Gold {
            report.violations.extend(check_gold_against_texts(&name, &content, &texts_dir_for(&path)));
        }
    }
    Lexicon::parse_collecting(&lexicons, None, &mut report.violations);
    Ok(report)
}
