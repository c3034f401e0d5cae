//! Normalization of non-standard words in Croatian text.
//!
//! Text is segmented into sentences and tokens, tokens are classified into a
//! taxonomy of non-standard words (numbers, dates, abbreviations, acronyms,
//! symbols, ...), and each non-standard span is rewritten as the words a
//! reader would say. An evaluation harness scores the output against an
//! annotated gold corpus.

pub mod classifier;
pub mod datetime;
pub mod error;
pub mod eval;
pub mod expansion;
pub mod fixtures;
pub mod lexicon;
pub mod morph;
pub mod numexpand;
pub mod pipeline;
pub mod taxonomy;
pub mod tokenizer;
mod tsv;

pub use classifier::{classify, is_roman_numeral, ClassifiedSpan, Classifier, RuleId};
pub use datetime::{expand_date, expand_phone, expand_time, DateParts, Month, TimeParts};
pub use error::{Error, Result, Violation};
pub use eval::{evaluate, render_report, Counters, EvalReport, Genre, GoldRecord, ReportFormat};
pub use expansion::Expansion;
pub use fixtures::{bundled, validate_all, FixtureManifest, Resources};
pub use lexicon::{spell_acronym, Context, ContextRule, LetterNameTable, LexEntry, Lexicon};
pub use morph::{Case, Gender, MorphTag, Number, Paucal};
pub use numexpand::{expand_cardinal, expand_ordinal, expand_roman, parse_spelled_number, NumberSpelling, MAX_NUMBER};
pub use pipeline::{normalize, Normalized, Normalizer, ReportRecord, RunConfig, RunReport, Status};
pub use taxonomy::{Branch, NswClass};
pub use tokenizer::{segment, Document, Sentence, Token};
