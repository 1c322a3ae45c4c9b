//! The lattice text format.
//!
//! ```text
//! document      := record+
//! record        := lattice-line elements-line covers-line*
//! lattice-line  := "lattice" NAME
//! elements-line := "elements" LABEL+
//! covers-line   := "covers" (LABEL "<" LABEL)*
//! NAME, LABEL   := one or more characters other than whitespace, '<' and '#'
//! ```
//!
//! Each line starts with its keyword. `#` starts a comment that runs to the
//! end of the line; blank lines are ignored. Tokens are separated by
//! whitespace, and `<` is a token on its own, so `a<b` and `a < b` are the
//! same pair. Covers may repeat a pair or list a non-covering comparability;
//! the order is the reflexive-transitive closure of the listed pairs.
//! Columns count characters, starting at 1.

use std::collections::{HashMap, HashSet};
use std::fmt;

use loewy_core::{CoverRelation, Error as CoreError, FiniteLattice};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("{line}:{col}: {message}")]
    Syntax { line: usize, col: usize, message: String },

    #[error("{line}:{col}: element {label:?} is declared twice")]
    DuplicateElement { label: String, line: usize, col: usize },

    #[error("{line}:{col}: element {label:?} is not declared")]
    UnknownElement { label: String, line: usize, col: usize },

    #[error("{line}:{col}: {message}")]
    Build {
        code: &'static str,
        line: usize,
        col: usize,
        message: String,
    },
}

impl DocumentError {
    pub fn code(&self) -> &'static str {
        match self {
            DocumentError::Syntax { .. } => "syntax_error",
            DocumentError::DuplicateElement { .. } => "duplicate_element",
            DocumentError::UnknownElement { .. } => "unknown_element",
            DocumentError::Build { code, .. } => code,
        }
    }

    pub fn span(&self) -> Span {
        let (line, col) = match self {
            DocumentError::Syntax { line, col, .. }
            | DocumentError::DuplicateElement { line, col, .. }
            | DocumentError::UnknownElement { line, col, .. }
            | DocumentError::Build { line, col, .. } => (*line, *col),
        };
        Span { line, col }
    }

    /// The message without its location prefix.
    pub fn message(&self) -> String {
        match self {
            DocumentError::Syntax { message, .. } | DocumentError::Build { message, .. } => message.clone(),
            DocumentError::DuplicateElement { label, .. } => format!("element {label:?} is declared twice"),
            DocumentError::UnknownElement { label, .. } => format!("element {label:?} is not declared"),
        }
    }

    /// Parse-stage errors, as opposed to an order that is not a lattice.
    pub fn is_parse_error(&self) -> bool {
        !matches!(self, DocumentError::Build { .. })
    }
}

fn syntax(span: Span, message: impl Into<String>) -> DocumentError {
    DocumentError::Syntax {
        line: span.line,
        col: span.col,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Default)]
struct Spans {
    header: Span,
    elements_line: Span,
    covers: Vec<(Span, Span)>,
}

/// One parsed record. Equality ignores source positions.
#[derive(Debug, Clone)]
pub struct LatticeDocument {
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    spans: Spans,
}

impl PartialEq for LatticeDocument {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.elements == other.elements && self.covers == other.covers
    }
}

impl Eq for LatticeDocument {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Word(String),
    Less,
}

fn tokenize(line: &str, line_no: usize) -> Vec<(Token, Span)> {
    let mut tokens = Vec::new();
    let mut word = String::new();
    let mut word_start = 0;
    let flush = |word: &mut String, start: usize, tokens: &mut Vec<(Token, Span)>| {
        if !word.is_empty() {
            tokens.push((Token::Word(std::mem::take(word)), Span { line: line_no, col: start }));
        }
    };
    for (i, c) in line.chars().enumerate() {
        let col = i + 1;
        match c {
            '#' => break,
            '<' => {
                flush(&mut word, word_start, &mut tokens);
                tokens.push((Token::Less, Span { line: line_no, col }));
            }
            c if c.is_whitespace() => flush(&mut word, word_start, &mut tokens),
            c => {
                if word.is_empty() {
                    word_start = col;
                }
                word.push(c);
            }
        }
    }
    flush(&mut word, word_start, &mut tokens);
    tokens
}

/// Parses a document holding exactly one record.
pub fn parse(text: &str) -> Result<LatticeDocument, DocumentError> {
    let mut docs = parse_many(text)?;
    match docs.len() {
        1 => Ok(docs.pop().expect("one record")),
        _ => {
            let second = docs[1].spans.header;
            Err(syntax(second, "expected a single lattice record"))
        }
    }
}

/// Parses one or more records.
pub fn parse_many(text: &str) -> Result<Vec<LatticeDocument>, DocumentError> {
    let mut docs: Vec<LatticeDocument> = Vec::new();
    let mut last_line = 0;
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let tokens = tokenize(line, line_no);
        let Some(((first, first_span), rest)) = tokens.split_first() else {
            continue;
        };
        let keyword = match first {
            Token::Word(w) => w.as_str(),
            Token::Less => return Err(syntax(*first_span, "expected a keyword, found '<'")),
        };
        match keyword {
            "lattice" => {
                if let Some(prev) = docs.last() {
                    if prev.elements.is_empty() {
                        return Err(syntax(*first_span, "expected an `elements` line before the next record"));
                    }
                }
                let name = match rest {
                    [(Token::Word(name), _)] => name.clone(),
                    [] => return Err(syntax(after(first_span, keyword), "expected a lattice name")),
                    [_, (_, extra), ..] | [(_, extra)] => {
                        return Err(syntax(*extra, "expected a single lattice name"))
                    }
                };
                docs.push(LatticeDocument {
                    name,
                    elements: Vec::new(),
                    covers: Vec::new(),
                    spans: Spans {
                        header: *first_span,
                        ..Spans::default()
                    },
                });
            }
            "elements" => {
                let Some(doc) = docs.last_mut() else {
                    return Err(syntax(*first_span, "expected a `lattice NAME` line first"));
                };
                if !doc.elements.is_empty() {
                    return Err(syntax(*first_span, "a record has a single `elements` line"));
                }
                if rest.is_empty() {
                    return Err(syntax(after(first_span, keyword), "expected at least one element"));
                }
                doc.spans.elements_line = *first_span;
                let mut seen: HashSet<&str> = HashSet::new();
                for (token, span) in rest {
                    let Token::Word(label) = token else {
                        return Err(syntax(*span, "'<' is not allowed in an element label"));
                    };
                    if !seen.insert(label) {
                        return Err(DocumentError::DuplicateElement {
                            label: label.clone(),
                            line: span.line,
                            col: span.col,
                        });
                    }
                }
                doc.elements = rest
                    .iter()
                    .map(|(t, _)| match t {
                        Token::Word(w) => w.clone(),
                        Token::Less => unreachable!("rejected above"),
                    })
                    .collect();
            }
            "covers" => {
                let Some(doc) = docs.last_mut() else {
                    return Err(syntax(*first_span, "expected a `lattice NAME` line first"));
                };
                if doc.elements.is_empty() {
                    return Err(syntax(*first_span, "expected an `elements` line before `covers`"));
                }
                parse_pairs(doc, rest)?;
            }
            other => {
                return Err(syntax(
                    *first_span,
                    format!("unknown keyword {other:?} (expected lattice, elements or covers)"),
                ))
            }
        }
    }
    match docs.last() {
        None => Err(syntax(Span { line: last_line.max(1), col: 1 }, "expected a `lattice NAME` line")),
        Some(doc) if doc.elements.is_empty() => Err(syntax(
            Span { line: last_line, col: 1 },
            format!("record {:?} has no `elements` line", doc.name),
        )),
        Some(_) => {
            for doc in &docs {
                doc.check_labels()?;
            }
            Ok(docs)
        }
    }
}

fn after(span: &Span, keyword: &str) -> Span {
    Span {
        line: span.line,
        col: span.col + keyword.chars().count(),
    }
}

fn parse_pairs(doc: &mut LatticeDocument, tokens: &[(Token, Span)]) -> Result<(), DocumentError> {
    let mut it = tokens.iter();
    while let Some((token, span)) = it.next() {
        let Token::Word(lo) = token else {
            return Err(syntax(*span, "expected a label before '<'"));
        };
        let Some((Token::Less, less_span)) = it.next() else {
            return Err(syntax(*span, format!("expected '<' after {lo:?}")));
        };
        let Some((Token::Word(hi), hi_span)) = it.next() else {
            return Err(syntax(*less_span, "expected a label after '<'"));
        };
        doc.covers.push((lo.clone(), hi.clone()));
        doc.spans.covers.push((*span, *hi_span));
    }
    Ok(())
}

impl LatticeDocument {
    fn check_labels(&self) -> Result<(), DocumentError> {
        for ((lo, hi), (lo_span, hi_span)) in self.covers.iter().zip(&self.spans.covers) {
            for (label, span) in [(lo, lo_span), (hi, hi_span)] {
                if !self.elements.contains(label) {
                    return Err(DocumentError::UnknownElement {
                        label: label.clone(),
                        line: span.line,
                        col: span.col,
                    });
                }
            }
        }
        Ok(())
    }

    /// Builds the lattice, labeled with the document's element labels.
    pub fn to_lattice(&self) -> Result<FiniteLattice, DocumentError> {
        self.check_labels()?;
        let index: HashMap<&str, usize> = self.elements.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let relation: CoverRelation = self
            .covers
            .iter()
            .map(|(lo, hi)| (index[lo.as_str()], index[hi.as_str()]))
            .collect();
        FiniteLattice::from_covers(self.elements.len(), &relation)
            .map(|l| l.with_labels(self.elements.clone()))
            .map_err(|e| self.locate(e))
    }

    fn locate(&self, e: CoreError) -> DocumentError {
        let at = self.spans.elements_line;
        let build = |code, span: Span, message: String| DocumentError::Build {
            code,
            line: span.line,
            col: span.col,
            message,
        };
        let label = |i: usize| self.elements[i].as_str();
        match e {
            CoreError::NotAPoset { cycle } => {
                let ring: Vec<&str> = cycle.iter().chain(cycle.first()).map(|&i| label(i)).collect();
                let span = self
                    .covers
                    .iter()
                    .zip(&self.spans.covers)
                    .find(|((lo, hi), _)| ring.windows(2).any(|w| (w[0] == lo && w[1] == hi) || (w[1] == lo && w[0] == hi)))
                    .map(|(_, (s, _))| *s)
                    .unwrap_or(at);
                build("not_a_poset", span, format!("covers form a cycle: {}", ring.join(" < ")))
            }
            CoreError::NotALattice { pair, kind } => build(
                "not_a_lattice",
                at,
                format!("elements {} and {} have no unique {kind}", label(pair.0), label(pair.1)),
            ),
            CoreError::NotBounded(which) => build("not_bounded", at, format!("the order has no unique {which}")),
            other => build("invalid_lattice", at, other.to_string()),
        }
    }

    /// A document for `lattice`; labels default to element ids.
    pub fn from_lattice(name: &str, lattice: &FiniteLattice) -> Self {
        let elements: Vec<String> = lattice.elements().map(|x| lattice.label(x).into_owned()).collect();
        let covers = lattice
            .cover_relation()
            .pairs
            .iter()
            .map(|&(lo, hi)| (elements[lo].clone(), elements[hi].clone()))
            .collect();
        LatticeDocument {
            name: name.to_string(),
            elements,
            covers,
            spans: Spans::default(),
        }
    }
}

impl fmt::Display for LatticeDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lattice {}", self.name)?;
        writeln!(f, "elements {}", self.elements.join(" "))?;
        if !self.covers.is_empty() {
            let pairs: Vec<String> = self.covers.iter().map(|(lo, hi)| format!("{lo}<{hi}")).collect();
            writeln!(f, "covers {}", pairs.join(" "))?;
        }
        Ok(())
    }
}

/// Records separated by blank lines.
pub fn print_many(docs: &[LatticeDocument]) -> String {
    docs.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    const D12: &str = "lattice d12\nelements 1 2 3 4 6 12\ncovers 1<2 1<3 2<4 2<6 3<6 4<12 6<12";

    #[test]
    fn divisors_of_twelve() {
        let doc = parse(D12).unwrap();
        assert_eq!(doc.name, "d12");
        assert_eq!(doc.elements.len(), 6);
        let l = doc.to_lattice().unwrap();
        let reference = loewy_core::instances::divisor_lattice(12).unwrap();
        assert!(loewy_core::is_isomorphic(&l, &reference));
    }

    #[test]
    fn two_chain_and_spacing() {
        let a = parse("lattice c2\nelements a b\ncovers a<b").unwrap();
        let b = parse("  # two-chain\nlattice   c2 # name\n\nelements a  b\ncovers a < b\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_lattice().unwrap().len(), 2);
    }

    #[test]
    fn covers_without_elements() {
        let err = parse("covers a<b").unwrap_err();
        assert_eq!(err.code(), "syntax_error");
        assert_eq!(err.span(), Span { line: 1, col: 1 });
        let err = parse("lattice x\ncovers a<b").unwrap_err();
        assert_eq!(err.code(), "syntax_error");
        assert_eq!(err.span().line, 2);
    }

    #[test]
    fn label_errors_carry_positions() {
        let err = parse("lattice x\nelements a b a").unwrap_err();
        assert_eq!(
            err,
            DocumentError::DuplicateElement {
                label: "a".into(),
                line: 2,
                col: 14
            }
        );
        let err = parse("lattice x\nelements a b\ncovers a<c").unwrap_err();
        assert_eq!(
            err,
            DocumentError::UnknownElement {
                label: "c".into(),
                line: 3,
                col: 10
            }
        );
    }

    #[test]
    fn malformed_pairs() {
        for text in ["lattice x\nelements a b\ncovers a b", "lattice x\nelements a b\ncovers a<", "lattice x\nelements a b\ncovers <b"] {
            assert_eq!(parse(text).unwrap_err().code(), "syntax_error", "{text}");
        }
        assert_eq!(parse("lattice\nelements a").unwrap_err().code(), "syntax_error");
        assert_eq!(parse("lattice x\nelements").unwrap_err().code(), "syntax_error");
        assert_eq!(parse("lattice x\nfoo a").unwrap_err().code(), "syntax_error");
        assert_eq!(parse("").unwrap_err().code(), "syntax_error");
    }

    #[test]
    fn build_errors_are_located() {
        let err = parse("lattice x\nelements a b\ncovers a<b b<a").unwrap().to_lattice().unwrap_err();
        assert_eq!(err.code(), "not_a_poset");
        assert_eq!(err.span().line, 3);
        let err = parse("lattice v\nelements 0 a b\ncovers 0<a 0<b").unwrap().to_lattice().unwrap_err();
        assert_eq!(err.code(), "not_bounded");
        let bowtie = "lattice bowtie\nelements 0 a b c d 1\ncovers 0<a 0<b a<c a<d b<c b<d c<1 d<1";
        let err = parse(bowtie).unwrap().to_lattice().unwrap_err();
        assert_eq!(err.code(), "not_a_lattice");
        assert!(!err.is_parse_error());
    }

    #[test]
    fn print_round_trips() {
        let doc = parse(D12).unwrap();
        assert_eq!(parse(&doc.to_string()).unwrap(), doc);
        let single = parse("lattice one\nelements x").unwrap();
        assert_eq!(single.to_string(), "lattice one\nelements x\n");
        assert_eq!(parse(&single.to_string()).unwrap(), single);
    }

    #[test]
    fn many_records() {
        let text = format!("{D12}\n\nlattice c2\nelements a b\ncovers a<b\n");
        let docs = parse_many(&text).unwrap();
        assert_eq!(docs.len(), 2);
        assert_eq!(parse_many(&print_many(&docs)).unwrap(), docs);
        assert_eq!(parse(&text).unwrap_err().code(), "syntax_error");
    }

    #[test]
    fn from_lattice_uses_labels() {
        let n5 = loewy_core::instances::pentagon();
        let doc = LatticeDocument::from_lattice("n5", &n5);
        assert_eq!(doc.elements, ["0", "a", "b", "c", "1"]);
        assert_eq!(doc.to_lattice().unwrap(), n5);
    }
}
