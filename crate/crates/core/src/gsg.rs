//! The `.gsg` text format.
//!
//! ```text
//! # comments run to end of line; blank lines are ignored
//! 3 2                 # n k
//! elements a b c      # optional display names
//! ops gamma mu        # optional display names
//!
//! gamma:              # optional table label
//! a b c
//! b c a
//! c a b
//!
//! mu:
//! b c a
//! c a b
//! a b c
//! ```
//!
//! Table entries are element names or indices. Labels, when the `ops` line
//! is present, must name the table at that position; without an `ops` line,
//! labels on every table declare the operation names.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::error::TableError;
use crate::gamma::{ExtElement, GammaGroupoid};

/// Identity of G¹ as printed in reports.
pub const IDENTITY_TOKEN: &str = "<1>";

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DisplayNames {
    pub elements: Option<Vec<String>>,
    pub ops: Option<Vec<String>>,
}

impl DisplayNames {
    pub fn new(elements: Vec<String>, ops: Vec<String>) -> Self {
        Self {
            elements: Some(elements),
            ops: Some(ops),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_none() && self.ops.is_none()
    }

    pub fn element(&self, i: usize) -> String {
        match &self.elements {
            Some(names) => names[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn op(&self, i: usize) -> String {
        match &self.ops {
            Some(names) => names[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn ext(&self, e: ExtElement) -> String {
        match e {
            ExtElement::Identity => IDENTITY_TOKEN.to_string(),
            ExtElement::Element(i) => self.element(i),
        }
    }

    /// Resolves a name, falling back to a decimal index below `n`.
    pub fn resolve_element(&self, token: &str, n: usize) -> Option<usize> {
        resolve(self.elements.as_deref(), token, n)
    }

    pub fn resolve_op(&self, token: &str, k: usize) -> Option<usize> {
        resolve(self.ops.as_deref(), token, k)
    }

    /// Checks counts and uniqueness against a groupoid's dimensions.
    pub fn check(&self, n: usize, k: usize) -> Result<(), NameError> {
        for (what, names, expected) in [("element", &self.elements, n), ("operation", &self.ops, k)] {
            if let Some(names) = names {
                if names.len() != expected {
                    return Err(NameError::CountMismatch {
                        what,
                        expected,
                        found: names.len(),
                    });
                }
                let mut seen = HashSet::new();
                for name in names {
                    if !valid_name(name) {
                        return Err(NameError::Invalid { name: name.clone() });
                    }
                    if !seen.insert(name.as_str()) {
                        return Err(NameError::Duplicate { name: name.clone() });
                    }
                }
            }
        }
        Ok(())
    }
}

fn resolve(names: Option<&[String]>, token: &str, limit: usize) -> Option<usize> {
    if let Some(i) = names.and_then(|names| names.iter().position(|n| n == token)) {
        return Some(i);
    }
    token.parse::<usize>().ok().filter(|&i| i < limit)
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name.ends_with(':')
        && !name.contains('#')
        && !name.chars().any(char::is_whitespace)
        && name != IDENTITY_TOKEN
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NameError {
    #[error("expected {expected} {what} names, found {found}")]
    CountMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("duplicate display name `{name}`")]
    Duplicate { name: String },
    #[error("invalid display name `{name}`")]
    Invalid { name: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected header `n k`")]
    MalformedHeader,
    #[error("missing header")]
    MissingHeader,
    #[error(transparent)]
    Names(#[from] NameError),
    #[error("declaration `{0}` after the first table")]
    LateDeclaration(String),
    #[error("expected {expected} entries in row, found {found}")]
    WrongRowLength { expected: usize, found: usize },
    #[error("unknown token `{0}`")]
    UnknownToken(String),
    #[error("table label `{found}` does not match operation `{expected}`")]
    LabelMismatch { expected: String, found: String },
    #[error("either every table or no table must carry a label")]
    InconsistentLabels,
    #[error("document ended early: {0}")]
    UnexpectedEof(String),
    #[error("unexpected content after the last table")]
    TrailingContent,
    #[error(transparent)]
    Table(#[from] TableError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GsgDocument {
    pub groupoid: GammaGroupoid,
    pub names: DisplayNames,
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &content[s..pos],
                        column: content[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push(Line {
                number: idx + 1,
                tokens,
            });
        }
    }
    out
}

fn err(line: usize, column: usize, kind: impl Into<ParseErrorKind>) -> ParseError {
    ParseError {
        line,
        column,
        kind: kind.into(),
    }
}

fn is_label(line: &Line<'_>) -> bool {
    line.tokens.len() == 1 && line.tokens[0].text.ends_with(':') && line.tokens[0].text.len() > 1
}

pub fn parse_gsg(text: &str) -> Result<GsgDocument, ParseError> {
    let lines = tokenize(text);
    let mut it = lines.iter().peekable();

    let header = it.next().ok_or_else(|| err(1, 1, ParseErrorKind::MissingHeader))?;
    let dims: Vec<usize> = header
        .tokens
        .iter()
        .map(|t| t.text.parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| err(header.number, 1, ParseErrorKind::MalformedHeader))?;
    let (n, k) = match dims[..] {
        [n, k] => (n, k),
        _ => return Err(err(header.number, 1, ParseErrorKind::MalformedHeader)),
    };
    if n == 0 {
        return Err(err(header.number, 1, TableError::EmptyCarrier));
    }
    if k == 0 {
        return Err(err(header.number, 1, TableError::NoOperations));
    }
    if n > crate::gamma::MAX_ELEMENTS {
        return Err(err(
            header.number,
            1,
            TableError::TooManyElements {
                n,
                max: crate::gamma::MAX_ELEMENTS,
            },
        ));
    }

    let mut names = DisplayNames::default();
    while let Some(line) = it.peek() {
        let keyword = line.tokens[0].text;
        let slot = match keyword {
            "elements" => &mut names.elements,
            "ops" => &mut names.ops,
            _ => break,
        };
        let declared: Vec<String> = line.tokens[1..].iter().map(|t| t.text.to_string()).collect();
        *slot = Some(declared);
        let probe = DisplayNames {
            elements: names.elements.clone(),
            ops: names.ops.clone(),
        };
        probe.check(n, k).map_err(|e| err(line.number, 1, e))?;
        it.next();
    }
    let ops_declared = names.ops.is_some();

    let mut entries = Vec::with_capacity(k * n * n);
    let mut labels: Vec<Option<String>> = Vec::with_capacity(k);
    let mut last_line = header.number;
    for t in 0..k {
        let mut label = None;
        if let Some(line) = it.peek() {
            if matches!(line.tokens[0].text, "elements" | "ops") {
                return Err(err(
                    line.number,
                    1,
                    ParseErrorKind::LateDeclaration(line.tokens[0].text.to_string()),
                ));
            }
            if is_label(line) {
                let text = line.tokens[0].text.trim_end_matches(':');
                if let Some(ops) = &names.ops {
                    let ok = ops[t] == text || text.parse::<usize>().ok() == Some(t);
                    if !ok {
                        return Err(err(
                            line.number,
                            line.tokens[0].column,
                            ParseErrorKind::LabelMismatch {
                                expected: ops[t].clone(),
                                found: text.to_string(),
                            },
                        ));
                    }
                }
                label = Some(text.to_string());
                last_line = line.number;
                it.next();
            }
        }
        labels.push(label);
        for row in 0..n {
            let line = it.next().ok_or_else(|| {
                err(
                    last_line + 1,
                    1,
                    ParseErrorKind::UnexpectedEof(format!("missing row {} of table {}", row + 1, t + 1)),
                )
            })?;
            last_line = line.number;
            if line.tokens.len() != n {
                return Err(err(
                    line.number,
                    1,
                    ParseErrorKind::WrongRowLength {
                        expected: n,
                        found: line.tokens.len(),
                    },
                ));
            }
            for tok in &line.tokens {
                let v = names.resolve_element(tok.text, n).ok_or_else(|| {
                    err(
                        line.number,
                        tok.column,
                        ParseErrorKind::UnknownToken(tok.text.to_string()),
                    )
                })?;
                entries.push(v);
            }
        }
    }
    if let Some(line) = it.next() {
        return Err(err(line.number, 1, ParseErrorKind::TrailingContent));
    }

    if !ops_declared {
        let labelled = labels.iter().filter(|l| l.is_some()).count();
        if labelled == k {
            let ops: Vec<String> = labels.into_iter().flatten().collect();
            let probe = DisplayNames {
                elements: None,
                ops: Some(ops.clone()),
            };
            probe.check(n, k).map_err(|e| err(header.number, 1, e))?;
            names.ops = Some(ops);
        } else if labelled != 0 {
            return Err(err(header.number, 1, ParseErrorKind::InconsistentLabels));
        }
    }

    let groupoid = GammaGroupoid::build_tables(n, k, &entries).map_err(|e| err(header.number, 1, e))?;
    Ok(GsgDocument { groupoid, names })
}

/// Canonical layout. Unnamed single-table documents are written compactly
/// as the header followed by the rows; otherwise a blank line precedes each
/// table and, when operation names exist, a `name:` label.
pub fn serialize_gsg(g: &GammaGroupoid, names: &DisplayNames) -> Result<String, NameError> {
    names.check(g.n(), g.k())?;
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.k());
    if let Some(elements) = &names.elements {
        let _ = writeln!(out, "elements {}", elements.join(" "));
    }
    if let Some(ops) = &names.ops {
        let _ = writeln!(out, "ops {}", ops.join(" "));
    }
    let compact = names.is_empty() && g.k() == 1;
    for op in 0..g.k() {
        if !compact {
            out.push('\n');
        }
        if names.ops.is_some() {
            let _ = writeln!(out, "{}:", names.op(op));
        }
        for a in 0..g.n() {
            let row: Vec<String> = g.row(op, a).iter().map(|&x| names.element(x as usize)).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    }
    Ok(out)
}
