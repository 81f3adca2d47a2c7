//! Betti table documents and their two serializations: Macaulay2-style text
//! (`.btbl`) and JSON.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use rncbetti_core::{int, BBettiTable, BettiError, Rational, SBettiTable};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FormatError {
    #[error("line {line}: malformed row label '{label}'")]
    RowLabel { line: usize, label: String },

    #[error("line {line}: cell '{cell}' is not a number")]
    Cell { line: usize, cell: String },

    #[error("line {line}: expected {expected} columns, found {found}")]
    ColumnCount { line: usize, expected: usize, found: usize },

    #[error("column {col}: total row says {stated}, entries sum to {actual}")]
    Totals { col: usize, stated: String, actual: String },

    #[error("column {col}, row {row}: {found} does not continue the tail (expected {expected})")]
    Tail { col: usize, row: i64, found: String, expected: String },

    #[error("line {line}: bad metadata: {message}")]
    Metadata { line: usize, message: String },

    #[error("a B-table needs d (add '# d: N' or pass --d)")]
    MissingD,

    #[error("an S-table has only columns 0, 1 and 2")]
    TooManyColumns,

    #[error("no table found")]
    Empty,

    #[error("invalid JSON table: {0}")]
    Json(String),

    #[error(transparent)]
    Betti(#[from] BettiError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    S,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    M2,
    Json,
}

/// A table as read from or written to disk. For B-tables only columns 0-3
/// are stored; later columns are implied by the tail.
#[derive(Debug, Clone, PartialEq)]
pub struct TableDocument {
    pub kind: Kind,
    pub d: Option<u32>,
    pub entries: BTreeMap<(usize, i64), Rational>,
    pub provenance: BTreeMap<String, String>,
}

impl TableDocument {
    pub fn from_s(t: &SBettiTable) -> Self {
        Self {
            kind: Kind::S,
            d: None,
            entries: t.entries().map(|(i, j, v)| ((i, j), v.clone())).collect(),
            provenance: BTreeMap::new(),
        }
    }

    pub fn from_b(t: &BBettiTable) -> Self {
        Self {
            kind: Kind::B,
            d: Some(t.d()),
            entries: t.entries().map(|(i, j, v)| ((i, j), v.clone())).collect(),
            provenance: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<String>) -> Self {
        self.provenance.insert(key.to_string(), value.into());
        self
    }

    pub fn to_s(&self) -> Result<SBettiTable, FormatError> {
        Ok(SBettiTable::from_entries(self.entries.iter().map(|(&(i, j), v)| (i, j, v.clone())))?)
    }

    /// The B-table, with `d` from the document or else from `fallback`.
    pub fn to_b(&self, fallback: Option<u32>) -> Result<BBettiTable, FormatError> {
        let d = self.d.or(fallback).ok_or(FormatError::MissingD)?;
        Ok(BBettiTable::from_entries(d, self.entries.iter().map(|(&(i, j), v)| (i, j, v.clone())))?)
    }

    fn value(&self, i: usize, j: i64) -> Rational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Entry in column `i`, extending B-tables along the tail.
    fn extended(&self, i: usize, j: i64) -> Rational {
        match (self.kind, self.d) {
            (Kind::B, Some(d)) if i > 3 => {
                let factor = int(i64::from(d) - 1);
                let mut v = self.value(3, j - (i as i64 - 3));
                for _ in 3..i {
                    v *= &factor;
                }
                v
            }
            _ => self.value(i, j),
        }
    }
}

pub fn render(doc: &TableDocument, format: Format, max_col: usize) -> String {
    match format {
        Format::M2 => render_m2(doc, max_col),
        Format::Json => render_json(doc),
    }
}

fn metadata_lines(doc: &TableDocument) -> String {
    let mut out = String::new();
    out.push_str(match doc.kind {
        Kind::S => "# kind: S\n",
        Kind::B => "# kind: B\n",
    });
    if let Some(d) = doc.d {
        out.push_str(&format!("# d: {d}\n"));
    }
    for (k, v) in &doc.provenance {
        out.push_str(&format!("# {k}: {v}\n"));
    }
    out
}

/// Macaulay2-style rendering. Column `i`, row `k` holds `β_{i,i+k}`; B-tables
/// show columns up to `max_col` (at least 3) and mark rows whose tail goes on
/// with `...`.
pub fn render_m2(doc: &TableDocument, max_col: usize) -> String {
    let mut out = metadata_lines(doc);
    out.push_str(&render_m2_body(doc, max_col));
    out
}

/// [`render_m2`] without the metadata lines.
pub fn render_m2_body(doc: &TableDocument, max_col: usize) -> String {
    let last = match doc.kind {
        Kind::S => 2,
        Kind::B => max_col.max(3),
    };
    let mut out = String::new();
    out.push_str("      ");
    for i in 0..=last {
        out.push_str(&format!(" {i}"));
    }
    out.push('\n');

    let rows: Vec<i64> = doc.entries.keys().map(|&(i, j)| j - i as i64).collect();
    let totals: Vec<Rational> = (0..=last)
        .map(|i| {
            let base = if i <= 3 { i } else { 3 };
            doc.entries
                .iter()
                .filter(|((c, _), _)| *c == base)
                .map(|(&(c, j), _)| doc.extended(i, j + (i as i64 - c as i64)))
                .sum()
        })
        .collect();
    out.push_str("total:");
    for t in &totals {
        out.push_str(&format!(" {t}"));
    }
    out.push('\n');

    if let (Some(&lo), Some(&hi)) = (rows.iter().min(), rows.iter().max()) {
        let tail_goes_on = doc.kind == Kind::B && doc.d.is_some_and(|d| d > 1);
        for k in lo.min(0)..=hi {
            out.push_str(&format!("{:>5}:", k));
            for i in 0..=last {
                let v = doc.extended(i, i as i64 + k);
                if v.is_zero() {
                    out.push_str(" .");
                } else {
                    out.push_str(&format!(" {v}"));
                }
            }
            if tail_goes_on && !doc.value(3, 3 + k).is_zero() {
                out.push_str(" ...");
            }
            out.push('\n');
        }
    }
    out
}

#[derive(Serialize, Deserialize)]
struct JsonEntry {
    i: usize,
    j: i64,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct JsonDocument {
    kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    d: Option<u32>,
    entries: Vec<JsonEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    provenance: BTreeMap<String, String>,
}

pub fn render_json(doc: &TableDocument) -> String {
    let json = JsonDocument {
        kind: doc.kind,
        d: doc.d,
        entries: doc
            .entries
            .iter()
            .map(|(&(i, j), v)| JsonEntry { i, j, value: v.to_string() })
            .collect(),
        provenance: doc.provenance.clone(),
    };
    let mut s = serde_json::to_string_pretty(&json).expect("serializable");
    s.push('\n');
    s
}

fn parse_rational(s: &str) -> Option<Rational> {
    if s == "." {
        return Some(Rational::zero());
    }
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    let num = num_bigint::BigInt::from_str(num).ok()?;
    let den = num_bigint::BigInt::from_str(den).ok()?;
    if den.is_zero() || den.is_negative() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Reads either serialization. `d_hint` supplies `d` for B-tables that do
/// not record it.
pub fn parse_table(src: &str, d_hint: Option<u32>) -> Result<TableDocument, FormatError> {
    if src.trim_start().starts_with('{') {
        parse_json(src)
    } else {
        parse_m2(src, d_hint)
    }
}

fn parse_json(src: &str) -> Result<TableDocument, FormatError> {
    let json: JsonDocument = serde_json::from_str(src).map_err(|e| FormatError::Json(e.to_string()))?;
    if json.kind == Kind::B && json.d.is_none() {
        return Err(FormatError::MissingD);
    }
    let mut entries = BTreeMap::new();
    for e in json.entries {
        let v = parse_rational(&e.value)
            .filter(|_| e.value != ".")
            .ok_or_else(|| FormatError::Json(format!("bad value '{}'", e.value)))?;
        let max = if json.kind == Kind::S { 2 } else { 3 };
        if e.i > max {
            return Err(BettiError::ColumnOutOfRange { col: e.i, max }.into());
        }
        if !v.is_zero() {
            *entries.entry((e.i, e.j)).or_insert_with(Rational::zero) += v;
        }
    }
    entries.retain(|_, v: &mut Rational| !v.is_zero());
    Ok(TableDocument { kind: json.kind, d: json.d, entries, provenance: json.provenance })
}

fn parse_m2(src: &str, d_hint: Option<u32>) -> Result<TableDocument, FormatError> {
    let mut kind = None;
    let mut d = None;
    let mut provenance = BTreeMap::new();
    let mut width: Option<usize> = None;
    let mut totals: Option<Vec<Rational>> = None;
    let mut rows: Vec<(usize, i64, Vec<Rational>)> = Vec::new();

    let mut check_width = |line: usize, found: usize| match width {
        Some(expected) if expected != found => Err(FormatError::ColumnCount { line, expected, found }),
        _ => {
            width = Some(found);
            Ok(())
        }
    };

    for (n, raw) in src.lines().enumerate() {
        let line = n + 1;
        let text = raw.trim();
        if text.is_empty() {
            continue;
        }
        if text.starts_with("##") {
            continue;
        }
        if let Some(meta) = text.strip_prefix('#') {
            let Some((key, value)) = meta.split_once(':') else { continue };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "kind" => {
                    kind = Some(match value {
                        "S" => Kind::S,
                        "B" => Kind::B,
                        _ => return Err(FormatError::Metadata { line, message: format!("unknown kind '{value}'") }),
                    })
                }
                "d" => {
                    d = Some(value.parse::<u32>().ok().filter(|&d| d > 0).ok_or_else(|| {
                        FormatError::Metadata { line, message: format!("bad d '{value}'") }
                    })?)
                }
                _ => {
                    provenance.insert(key.to_string(), value.to_string());
                }
            }
            continue;
        }
        let Some((label, rest)) = text.split_once(':') else {
            // Column header: the indices 0, 1, 2, ...
            let cells: Vec<&str> = text.split_whitespace().collect();
            if cells.iter().enumerate().all(|(i, c)| c.parse::<usize>() == Ok(i)) {
                check_width(line, cells.len())?;
                continue;
            }
            return Err(FormatError::RowLabel { line, label: text.to_string() });
        };
        let mut cells: Vec<&str> = rest.split_whitespace().collect();
        if cells.last() == Some(&"...") {
            cells.pop();
        }
        let values = cells
            .iter()
            .map(|c| parse_rational(c).ok_or_else(|| FormatError::Cell { line, cell: c.to_string() }))
            .collect::<Result<Vec<_>, _>>()?;
        check_width(line, values.len())?;
        let label = label.trim();
        if label == "total" {
            totals = Some(values);
        } else {
            let k = label
                .parse::<i64>()
                .map_err(|_| FormatError::RowLabel { line, label: label.to_string() })?;
            rows.push((line, k, values));
        }
    }
    let Some(width) = width else { return Err(FormatError::Empty) };

    let kind = kind.unwrap_or(if d.is_some() || d_hint.is_some() || width > 3 { Kind::B } else { Kind::S });
    let d = match kind {
        Kind::S => {
            if width > 3 {
                return Err(FormatError::TooManyColumns);
            }
            None
        }
        Kind::B => Some(d.or(d_hint).ok_or(FormatError::MissingD)?),
    };

    let mut doc = TableDocument { kind, d, entries: BTreeMap::new(), provenance };
    for (_, k, values) in &rows {
        for (i, v) in values.iter().enumerate().take(4) {
            if !v.is_zero() {
                doc.entries.insert((i, i as i64 + k), v.clone());
            }
        }
    }
    for (_, k, values) in &rows {
        for (i, v) in values.iter().enumerate().skip(4) {
            let expected = doc.extended(i, i as i64 + k);
            if *v != expected {
                return Err(FormatError::Tail {
                    col: i,
                    row: *k,
                    found: v.to_string(),
                    expected: expected.to_string(),
                });
            }
        }
    }
    if let Some(totals) = totals {
        for (i, stated) in totals.iter().enumerate() {
            let actual: Rational = rows.iter().map(|(_, _, values)| values[i].clone()).sum();
            if *stated != actual {
                return Err(FormatError::Totals { col: i, stated: stated.to_string(), actual: actual.to_string() });
            }
        }
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rncbetti_core::frac;

    fn worked_b() -> BBettiTable {
        BBettiTable::from_ints(3, &[(0, 0, 1), (1, 1, 1), (1, 2, 2), (2, 3, 5), (3, 4, 9)]).unwrap()
    }

    fn body(rendered: &str) -> Vec<&str> {
        rendered.lines().filter(|l| !l.starts_with('#')).collect()
    }

    #[test]
    fn worked_block() {
        let text = render_m2(&TableDocument::from_b(&worked_b()), 5);
        assert_eq!(
            body(&text),
            vec![
                "       0 1 2 3 4 5",
                "total: 1 3 5 9 18 36",
                "    0: 1 1 . . . .",
                "    1: . 2 5 9 18 36 ...",
            ]
        );
        assert_eq!(parse_table(&text, None).unwrap(), TableDocument::from_b(&worked_b()));
    }

    #[test]
    fn loose_spacing_is_accepted() {
        let loose = "       0 1 2 3  4  5 \n\
                     total: 1 3 5 9 18 36 \n    0: 1 1 . .  .  . \n    1: . 2 5 9 18 36 ...\n";
        let doc = parse_table(loose, Some(3)).unwrap();
        assert_eq!(doc.to_b(None).unwrap(), worked_b());
    }

    #[test]
    fn example_block_without_header() {
        let doc = parse_table("total: 1 6 5\n    0: 1 . .\n    4: . 6 5\n", None).unwrap();
        assert_eq!(doc.kind, Kind::S);
        let want = SBettiTable::from_ints(&[(0, 0, 1), (1, 5, 6), (2, 6, 5)]).unwrap();
        assert_eq!(doc.to_s().unwrap(), want);
    }

    #[test]
    fn zero_table() {
        let text = render_m2(&TableDocument::from_s(&SBettiTable::new()), 2);
        assert_eq!(body(&text), vec!["       0 1 2", "total: 0 0 0"]);
        assert!(parse_table(&text, None).unwrap().entries.is_empty());
    }

    #[test]
    fn rationals_and_negative_rows() {
        let mut t = BBettiTable::new(2).unwrap();
        t.set(0, -1, frac(-1, 3)).unwrap();
        t.set(3, 5, frac(5, 2)).unwrap();
        let doc = TableDocument::from_b(&t).with("cmd", "test");
        let text = render_m2(&doc, 4);
        assert!(text.contains("   -1: -1/3 . . . ."));
        assert!(text.contains("    2: . . . 5/2 5/2 ..."));
        assert_eq!(parse_table(&text, None).unwrap(), doc);
        assert_eq!(parse_table(&render_json(&doc), None).unwrap(), doc);
    }

    #[test]
    fn errors() {
        let e = |src: &str| parse_table(src, None).unwrap_err();
        assert!(matches!(e("0: 1 x ."), FormatError::Cell { line: 1, .. }));
        assert!(matches!(e("0: 1 . .\nq: . 1 ."), FormatError::RowLabel { line: 2, .. }));
        assert!(matches!(e("0: 1 . .\n1: . 1"), FormatError::ColumnCount { line: 2, expected: 3, found: 2 }));
        assert!(matches!(e("total: 2 1 0\n0: 1 . .\n1: . 1 ."), FormatError::Totals { col: 0, .. }));
        assert!(matches!(e("0: 1 . . . ."), FormatError::MissingD));
        assert!(matches!(e("# d: 3\n1: . 2 5 9 17"), FormatError::Tail { col: 4, row: 1, .. }));
        assert!(matches!(e("0: 1 1/0 ."), FormatError::Cell { .. }));
        assert!(matches!(e(""), FormatError::Empty));
        assert!(matches!(e("{\"kind\": \"B\", \"entries\": []}"), FormatError::MissingD));
    }
}
