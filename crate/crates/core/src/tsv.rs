//! Line-oriented TSV reading shared by all data-file loaders.

use crate::error::Violation;

#[derive(Debug, Clone)]
pub(crate) struct Row<'a> {
    pub line: usize,
    pub fields: Vec<&'a str>,
}

impl<'a> Row<'a> {
    pub fn field(&self, column: usize) -> &'a str {
        self.fields[column - 1]
    }
}

/// The `# schema: name/vN` header, if the file declares one.
pub fn declared_schema(content: &str) -> Option<&str> {
    content
        .lines()
        .take_while(|l| l.starts_with('#') || l.trim().is_empty())
        .find_map(|l| l.strip_prefix('#').map(str::trim).and_then(|l| l.strip_prefix("schema:")))
        .map(str::trim)
}

/// Splits `content` into data rows with exactly `columns` non-empty fields.
/// Comment lines (`#`) and blank lines are skipped; malformed lines are
/// reported and dropped.
pub(crate) fn rows<'a>(file: &str, content: &'a str, columns: usize, violations: &mut Vec<Violation>) -> Vec<Row<'a>> {
    let mut out = Vec::new();
    for (i, raw) in content.split('\n').enumerate() {
        let line = i + 1;
        if raw.ends_with('\r') {
            violations.push(Violation::new(file, line, 0, "CR line ending (files must use LF)"));
        }
        let raw = raw.trim_end_matches('\r');
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        if fields.len() != columns {
            violations.push(Violation::new(
                file,
                line,
                fields.len().min(columns) + 1,
                format!("expected {columns} tab-separated fields, found {}", fields.len()),
            ));
            continue;
        }
        if let Some(col) = fields.iter().position(|f| f.trim().is_empty()) {
            violations.push(Violation::new(file, line, col + 1, "empty field"));
            continue;
        }
        out.push(Row { line, fields });
    }
    out
}
