use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};

/// Settings for a normalization run. Also the schema of the optional TOML
/// configuration file, whose keys mirror the command-line flags.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Genre profile selecting dictionary overlays.
    pub profile: Option<String>,
    /// Dictionary files replacing the bundled dictionaries when non-empty.
    pub lexicons: Vec<PathBuf>,
    /// Spelling table replacing the bundled one.
    pub spelling: Option<PathBuf>,
    /// Letter-name table replacing the bundled one.
    pub letters: Option<PathBuf>,
    pub capitalize_sentence_start: bool,
    /// Abort on the first unresolved span instead of passing it through.
    pub strict: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            profile: None,
            lexicons: Vec::new(),
            spelling: None,
            letters: None,
            capitalize_sentence_start: true,
            strict: false,
        }
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> std::result::Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    /// Reads a TOML file; relative paths inside resolve against its directory.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut config = Self::from_toml(&text).map_err(|e| {
            Error::Load(vec![crate::error::Violation::file_level(path.display().to_string(), e.to_string())])
        })?;
        let base = path.parent().unwrap_or(Path::new(""));
        for p in config.lexicons.iter_mut().chain(config.spelling.iter_mut()).chain(config.letters.iter_mut()) {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        }
        Ok(config)
    }

    pub fn with_profile(mut self, profile: Option<&str>) -> Self {
        self.profile = profile.map(str::to_string);
        self
    }
}
