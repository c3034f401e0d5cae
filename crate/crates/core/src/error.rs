use std::fmt;
use std::path::PathBuf;

use crate::pipeline::RunReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A schema or consistency problem found in a data file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub file: String,
    /// 1-based line number, 0 when the problem concerns the whole file.
    pub line: usize,
    /// 1-based column (TSV field), 0 when not field-specific.
    pub column: usize,
    pub message: String,
}

impl Violation {
    pub fn new(file: impl Into<String>, line: usize, column: usize, message: impl Into<String>) -> Self {
        Self { file: file.into(), line, column, message: message.into() }
    }

    pub fn file_level(file: impl Into<String>, message: impl Into<String>) -> Self {
        Self::new(file, 0, 0, message)
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.column) {
            (0, _) => write!(f, "{}: {}", self.file, self.message),
            (line, 0) => write!(f, "{}:{}: {}", self.file, line, self.message),
            (line, col) => write!(f, "{}:{}:{}: {}", self.file, line, col, self.message),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("input is not valid UTF-8 at byte offset {offset}")]
    Encoding { offset: usize },

    #[error("replacement refers to token {index}, but the document has {len} tokens")]
    TokenPosition { index: usize, len: usize },

    #[error("replacements overlap at token {index}")]
    OverlappingReplacement { index: usize },

    #[error("{value} is outside the supported range (must be below {bound})")]
    UnsupportedMagnitude { value: u64, bound: u64 },

    #[error("ordinal numbers start at 1, got {0}")]
    OrdinalDomain(u64),

    #[error("`{0}` is not a well-formed Roman numeral")]
    RomanLeak(String),

    #[error("malformed date: {0}")]
    MalformedDate(String),

    #[error("malformed time: {0}")]
    MalformedTime(String),

    #[error("phone number group `{0}` contains a non-digit character")]
    PhoneLeak(String),

    #[error("no spoken name for character `{0}`")]
    Spell(char),

    #[error("cannot parse number word `{0}`")]
    NumberParse(String),

    #[error("{}", format_violations(.0))]
    Load(Vec<Violation>),

    #[error("gold record refers to unknown text `{0}`")]
    UnknownText(String),

    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("strict mode: {} unresolved token(s), first `{}`", .0.misses().count(), .0.misses().next().map(|r| r.surface.as_str()).unwrap_or(""))]
    StrictMiss(Box<RunReport>),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}

fn format_violations(v: &[Violation]) -> String {
    match v {
        [] => "load failed".to_string(),
        [one] => one.to_string(),
        [first, rest @ ..] => format!("{first} (and {} more)", rest.len()),
    }
}
