//! The JSON interchange format for root data.

use std::fmt;

use modlang::lattice::IntVec;
use modlang::rootdatum::{RootDatum, Violation};
use serde::{Deserialize, Serialize};

/// A root datum as plain integer arrays, so that other tools can produce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub rank: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
}

impl DatumDocument {
    pub fn from_datum(d: &RootDatum) -> Self {
        let rows = |vs: &[IntVec]| vs.iter().map(|v| v.coords().to_vec()).collect();
        DatumDocument {
            name: d.name().map(str::to_string),
            rank: d.rank(),
            simple_roots: rows(d.simple_roots()),
            simple_coroots: rows(d.simple_coroots()),
        }
    }

    pub fn to_datum(&self) -> RootDatum {
        let vecs = |rows: &[Vec<i64>]| rows.iter().map(|r| IntVec::new(r.clone())).collect();
        RootDatum::from_parts(self.name.clone(), self.rank, vecs(&self.simple_roots), vecs(&self.simple_coroots))
    }
}

/// A failed axiom together with the line of the document it concerns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocatedViolation {
    pub violation: Violation,
    pub line: Option<usize>,
}

impl fmt::Display for LocatedViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.violation),
            None => write!(f, "{}", self.violation),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Utf8,
    Json { line: usize, column: usize, message: String },
    Invalid(Vec<LocatedViolation>),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Utf8 => write!(f, "datum document is not valid UTF-8"),
            ParseError::Json { line, column, message } => {
                write!(f, "malformed datum document at line {line}, column {column}: {message}")
            }
            ParseError::Invalid(vs) => {
                write!(f, "invalid root datum:")?;
                for v in vs {
                    write!(f, "\n  {v}")?;
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// Parses and validates a datum document.
pub fn parse_datum(doc: &[u8]) -> Result<RootDatum, ParseError> {
    let text = std::str::from_utf8(doc).map_err(|_| ParseError::Utf8)?;
    let parsed: DatumDocument = serde_json::from_str(text).map_err(|e| ParseError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let d = parsed.to_datum();
    let violations = d.validate();
    if violations.is_empty() {
        return Ok(d);
    }
    Err(ParseError::Invalid(
        violations.into_iter().map(|v| LocatedViolation { line: locate(text, &v), violation: v }).collect(),
    ))
}

/// The canonical rendering: pretty JSON with fields in declaration order.
pub fn emit_datum(d: &RootDatum) -> String {
    serde_json::to_string_pretty(&DatumDocument::from_datum(d)).expect("documents serialize")
}

// Line of the key (or of the `index`-th entry under it) a violation is about.
fn locate(text: &str, v: &Violation) -> Option<usize> {
    let (key, index) = match v {
        Violation::CountMismatch { .. } => ("\"simple_coroots\"", None),
        Violation::WrongLength { coroot, index, .. } => {
            (if *coroot { "\"simple_coroots\"" } else { "\"simple_roots\"" }, Some(*index))
        }
        Violation::PairingNotTwo { index, .. } => ("\"simple_roots\"", Some(*index)),
        Violation::PositiveOffDiagonal { j, .. } => ("\"simple_roots\"", Some(*j)),
        Violation::AsymmetricZero { j, .. } => ("\"simple_roots\"", Some(*j)),
        Violation::DependentRoots | Violation::NotFiniteType => ("\"simple_roots\"", None),
        Violation::DependentCoroots => ("\"simple_coroots\"", None),
    };
    let start = text.find(key)?;
    let mut offset = start;
    if let Some(i) = index {
        // skip to the outer '[' and then past i inner arrays
        let rest = &text[start..];
        let open = rest.find('[')?;
        let mut depth = 0usize;
        let mut seen = 0usize;
        for (k, ch) in rest[open..].char_indices() {
            match ch {
                '[' => {
                    depth += 1;
                    if depth == 2 {
                        if seen == i {
                            offset = start + open + k;
                            break;
                        }
                        seen += 1;
                    }
                }
                ']' => {
                    if depth == 1 {
                        break;
                    }
                    depth -= 1;
                }
                _ => {}
            }
        }
    }
    Some(text[..offset].matches('\n').count() + 1)
}
