//! The line-oriented algebra file format.
//!
//! ```text
//! # comment lines start with '#'
//! order 5
//! one 4
//! names 0 a b c 1        (optional)
//! imp                    (or `op prod`, which also needs a `star` line)
//! 4 4 4 4 4
//! ...
//! ```
//!
//! Table entries and constants are decimal indices. Whitespace within a line
//! is free; row and column counts are strict. [`write_algebra`] and
//! [`write_product`] emit the canonical serialization, which parses back to
//! an equal value.

use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::{AlgebraError, Elem, FiniteAlgebra, MAX_ORDER};
use crate::transforms::ProductAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: index {value} is out of range for order {order}")]
    IndexOutOfRange {
        line: usize,
        column: usize,
        value: usize,
        order: usize,
    },
    #[error("line {line}: a table block was already given")]
    DuplicateBlock { line: usize },
}

impl FormatError {
    fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        FormatError::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// The 1-based line the error refers to.
    pub fn line(&self) -> usize {
        match self {
            FormatError::Parse { line, .. }
            | FormatError::IndexOutOfRange { line, .. }
            | FormatError::DuplicateBlock { line } => *line,
        }
    }
}

/// A parsed file: either signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedAlgebra {
    Implication(FiniteAlgebra),
    Product(ProductAlgebra),
}

impl ParsedAlgebra {
    pub fn order(&self) -> usize {
        match self {
            ParsedAlgebra::Implication(a) => a.order(),
            ParsedAlgebra::Product(p) => p.order(),
        }
    }
}

/// One whitespace-separated token with its 1-based column.
#[derive(Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (i, c)) in line.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((i, col)),
            (true, Some((s, sc))) => {
                out.push(Token {
                    text: &line[s..i],
                    column: sc + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((s, sc)) = start {
        out.push(Token {
            text: &line[s..],
            column: sc + 1,
        });
    }
    out
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
    /// Column just past the end of the line, for "missing token" errors.
    end: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum BlockKind {
    Imp,
    Prod,
}

#[derive(Default)]
struct Header {
    order: Option<usize>,
    one: Option<(usize, usize, usize)>,
    names: Option<Vec<String>>,
    star: Option<Vec<Elem>>,
    block: Option<(BlockKind, Vec<Elem>)>,
}

fn index(tok: Token<'_>, line: usize, order: usize) -> Result<Elem, FormatError> {
    let value: usize = tok
        .text
        .parse()
        .ok()
        .filter(|_| tok.text.bytes().all(|b| b.is_ascii_digit()))
        .ok_or_else(|| {
            FormatError::parse(
                line,
                tok.column,
                format!("expected an index, found `{}`", tok.text),
            )
        })?;
    if value >= order {
        return Err(FormatError::IndexOutOfRange {
            line,
            column: tok.column,
            value,
            order,
        });
    }
    Ok(value as Elem)
}

/// Reads exactly `order` indices from a line.
fn index_row(line: &Line<'_>, skip: usize, order: usize) -> Result<Vec<Elem>, FormatError> {
    let toks = &line.tokens[skip..];
    if toks.len() < order {
        return Err(FormatError::parse(
            line.number,
            line.end,
            format!("expected {order} entries, found {}", toks.len()),
        ));
    }
    if toks.len() > order {
        return Err(FormatError::parse(
            line.number,
            toks[order].column,
            format!("expected {order} entries, found {}", toks.len()),
        ));
    }
    toks.iter().map(|&t| index(t, line.number, order)).collect()
}

fn require_order(header: &Header, line: &Line<'_>) -> Result<usize, FormatError> {
    header.order.ok_or_else(|| {
        FormatError::parse(
            line.number,
            line.tokens[0].column,
            "`order` must come first",
        )
    })
}

fn reject_duplicate<T>(slot: &Option<T>, line: &Line<'_>) -> Result<(), FormatError> {
    match slot {
        Some(_) => Err(FormatError::parse(
            line.number,
            line.tokens[0].column,
            format!("duplicate `{}` line", line.tokens[0].text),
        )),
        None => Ok(()),
    }
}

fn expect_args(line: &Line<'_>, count: usize) -> Result<(), FormatError> {
    match line.tokens.len().cmp(&(count + 1)) {
        std::cmp::Ordering::Less => Err(FormatError::parse(
            line.number,
            line.end,
            format!("`{}` needs {count} argument(s)", line.tokens[0].text),
        )),
        std::cmp::Ordering::Greater => Err(FormatError::parse(
            line.number,
            line.tokens[count + 1].column,
            "unexpected trailing token",
        )),
        std::cmp::Ordering::Equal => Ok(()),
    }
}

/// Parses an algebra file.
pub fn parse(text: &str) -> Result<ParsedAlgebra, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| Line {
            number: i + 1,
            tokens: tokens(raw),
            end: raw.chars().count() + 1,
        })
        .filter(|l| !l.tokens.is_empty() && !l.tokens[0].text.starts_with('#'));

    let mut h = Header::default();
    let mut last_line = 0;
    while let Some(line) = lines.next() {
        last_line = line.number;
        let head = line.tokens[0];
        match head.text {
            "order" => {
                reject_duplicate(&h.order, &line)?;
                expect_args(&line, 1)?;
                let tok = line.tokens[1];
                let n = tok
                    .text
                    .parse::<usize>()
                    .ok()
                    .filter(|n| (1..=MAX_ORDER).contains(n))
                    .ok_or_else(|| {
                        FormatError::parse(
                            line.number,
                            tok.column,
                            format!("order must be an integer in 1..={MAX_ORDER}"),
                        )
                    })?;
                h.order = Some(n);
            }
            "one" => {
                let n = require_order(&h, &line)?;
                reject_duplicate(&h.one, &line)?;
                expect_args(&line, 1)?;
                let one = index(line.tokens[1], line.number, n)?;
                h.one = Some((one as usize, line.number, line.tokens[1].column));
            }
            "names" => {
                let n = require_order(&h, &line)?;
                reject_duplicate(&h.names, &line)?;
                expect_args(&line, n)?;
                let names: Vec<String> = line.tokens[1..]
                    .iter()
                    .map(|t| t.text.to_string())
                    .collect();
                for (i, t) in line.tokens[1..].iter().enumerate() {
                    if names[..i].contains(&names[i]) {
                        return Err(FormatError::parse(
                            line.number,
                            t.column,
                            format!("duplicate name `{}`", t.text),
                        ));
                    }
                }
                h.names = Some(names);
            }
            "star" => {
                let n = require_order(&h, &line)?;
                reject_duplicate(&h.star, &line)?;
                h.star = Some(index_row(&line, 1, n)?);
            }
            "imp" | "op" => {
                let n = require_order(&h, &line)?;
                if h.block.is_some() {
                    return Err(FormatError::DuplicateBlock { line: line.number });
                }
                let kind = if head.text == "imp" {
                    expect_args(&line, 0)?;
                    BlockKind::Imp
                } else {
                    expect_args(&line, 1)?;
                    if line.tokens[1].text != "prod" {
                        return Err(FormatError::parse(
                            line.number,
                            line.tokens[1].column,
                            format!("unknown operation `{}`", line.tokens[1].text),
                        ));
                    }
                    BlockKind::Prod
                };
                let mut table = Vec::with_capacity(n * n);
                for _ in 0..n {
                    let row = lines.next().ok_or_else(|| {
                        FormatError::parse(
                            last_line + 1,
                            1,
                            format!("table ended early: expected {n} rows"),
                        )
                    })?;
                    last_line = row.number;
                    table.extend(index_row(&row, 0, n)?);
                }
                h.block = Some((kind, table));
            }
            other => {
                return Err(FormatError::parse(
                    line.number,
                    head.column,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    let order = h
        .order
        .ok_or_else(|| FormatError::parse(last_line.max(1), 1, "missing `order` line"))?;
    let (one, one_line, one_col) = h
        .one
        .ok_or_else(|| FormatError::parse(last_line.max(1), 1, "missing `one` line"))?;
    let (kind, table) = h.block.ok_or_else(|| {
        FormatError::parse(last_line.max(1), 1, "missing `imp` or `op prod` table")
    })?;
    let wrap = |e: AlgebraError| FormatError::parse(one_line, one_col, e.to_string());
    Ok(match kind {
        BlockKind::Imp => {
            if h.star.is_some() {
                return Err(FormatError::parse(
                    last_line,
                    1,
                    "`star` is only allowed with an `op prod` table",
                ));
            }
            let mut a = FiniteAlgebra::new(order, one, table).map_err(wrap)?;
            if let Some(names) = h.names {
                a = a.with_names(names).map_err(wrap)?;
            }
            ParsedAlgebra::Implication(a)
        }
        BlockKind::Prod => {
            let star = h.star.ok_or_else(|| {
                FormatError::parse(last_line, 1, "an `op prod` table needs a `star` line")
            })?;
            let mut p = ProductAlgebra::new(order, one, star, table).map_err(wrap)?;
            if let Some(names) = h.names {
                p = p.with_names(names).map_err(wrap)?;
            }
            ParsedAlgebra::Product(p)
        }
    })
}

/// Parses raw bytes, reporting invalid UTF-8 with its position.
pub fn parse_bytes(bytes: &[u8]) -> Result<ParsedAlgebra, FormatError> {
    match std::str::from_utf8(bytes) {
        Ok(text) => parse(text),
        Err(e) => {
            let valid = &bytes[..e.valid_up_to()];
            let line = valid.iter().filter(|&&b| b == b'\n').count() + 1;
            let line_start = valid.iter().rposition(|&b| b == b'\n').map_or(0, |p| p + 1);
            let column = String::from_utf8_lossy(&valid[line_start..])
                .chars()
                .count()
                + 1;
            Err(FormatError::parse(line, column, "invalid UTF-8"))
        }
    }
}

/// Parses a file that must be in implication form.
pub fn parse_implication(text: &str) -> Result<FiniteAlgebra, FormatError> {
    match parse(text)? {
        ParsedAlgebra::Implication(a) => Ok(a),
        ParsedAlgebra::Product(_) => Err(FormatError::parse(1, 1, "expected an `imp` table")),
    }
}

fn write_header(out: &mut String, order: usize, one: Elem, names: Option<&[String]>) {
    let _ = writeln!(out, "order {order}");
    let _ = writeln!(out, "one {one}");
    if let Some(names) = names {
        let _ = writeln!(out, "names {}", names.join(" "));
    }
}

pub(crate) fn write_rows(out: &mut String, order: usize, table: &[Elem]) {
    for row in table.chunks(order) {
        let row: Vec<String> = row.iter().map(Elem::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

/// Canonical serialization of an implication algebra.
pub fn write_algebra(a: &FiniteAlgebra) -> String {
    let mut out = String::new();
    write_header(&mut out, a.order(), a.one(), a.names());
    out.push_str("imp\n");
    write_rows(&mut out, a.order(), a.table());
    out
}

/// Canonical serialization of a product algebra.
pub fn write_product(p: &ProductAlgebra) -> String {
    let mut out = String::new();
    write_header(&mut out, p.order(), p.one(), p.names());
    let star: Vec<String> = p.star_table().iter().map(Elem::to_string).collect();
    let _ = writeln!(out, "star {}", star.join(" "));
    out.push_str("op prod\n");
    write_rows(&mut out, p.order(), p.prod_table());
    out
}

pub fn write(parsed: &ParsedAlgebra) -> String {
    match parsed {
        ParsedAlgebra::Implication(a) => write_algebra(a),
        ParsedAlgebra::Product(p) => write_product(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn err(text: &str) -> FormatError {
        parse(text).unwrap_err()
    }

    #[test]
    fn fixtures_parse_with_expected_shape() {
        let a = fixtures::remark_3_6();
        assert_eq!(a.order(), 7);
        assert_eq!(a.one(), 1);
        let b = fixtures::example_3_19();
        assert_eq!(b.names().unwrap().join(" "), "0 a b c 1");
        let p = fixtures::example_5_5();
        assert_eq!(p.star_table(), &[4, 2, 1, 3, 0]);
    }

    #[test]
    fn fixtures_round_trip_through_writer() {
        for name in fixtures::names() {
            let parsed = fixtures::load(name);
            let text = write(&parsed);
            assert_eq!(parse(&text).unwrap(), parsed, "{name}");
            assert_eq!(write(&parse(&text).unwrap()), text);
        }
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(err(""), FormatError::Parse { .. }));
        assert!(matches!(
            err("# only a comment\n"),
            FormatError::Parse { .. }
        ));
    }

    #[test]
    fn out_of_range_entries_carry_position() {
        let e = err("order 2\none 1\nimp\n1 1\n0  7\n");
        assert_eq!(
            e,
            FormatError::IndexOutOfRange {
                line: 5,
                column: 4,
                value: 7,
                order: 2
            }
        );
        assert!(matches!(
            err("order 2\none 2\nimp\n1 1\n0 1\n"),
            FormatError::IndexOutOfRange { line: 2, .. }
        ));
    }

    #[test]
    fn second_block_is_rejected() {
        let e = err("order 1\none 0\nimp\n0\nimp\n0\n");
        assert_eq!(e, FormatError::DuplicateBlock { line: 5 });
        let e = err("order 1\none 0\nstar 0\nop prod\n0\nimp\n0\n");
        assert_eq!(e, FormatError::DuplicateBlock { line: 6 });
    }

    #[test]
    fn row_length_is_strict() {
        let e = err("order 2\none 1\nimp\n1 1 1\n0 1\n");
        assert_eq!(e.line(), 4);
        let e = err("order 2\none 1\nimp\n1\n0 1\n");
        assert_eq!(e.line(), 4);
        let e = err("order 2\none 1\nimp\n1 1\n");
        assert!(e.to_string().contains("ended early"), "{e}");
    }

    #[test]
    fn directives_are_validated() {
        assert!(err("one 0\norder 1\nimp\n0\n")
            .to_string()
            .contains("first"));
        assert!(err("order 1\norder 1\none 0\nimp\n0\n")
            .to_string()
            .contains("duplicate"));
        assert!(err("order 1\none 0\nbogus\n")
            .to_string()
            .contains("unknown directive"));
        assert!(err("order 1\none 0\nop sum\n0\n")
            .to_string()
            .contains("unknown operation"));
        assert!(err("order 1\none 0\nop prod\n0\n")
            .to_string()
            .contains("star"));
        assert!(err("order 1\none 0\nstar 0\nimp\n0\n")
            .to_string()
            .contains("star"));
        assert!(err("order 2\none 1\nnames x x\nimp\n1 1\n0 1\n")
            .to_string()
            .contains("duplicate name"));
        assert!(err("order 0\n").to_string().contains("order"));
        assert!(err("order 2\none +1\nimp\n1 1\n0 1\n")
            .to_string()
            .contains("expected an index"));
    }

    #[test]
    fn whitespace_and_comments_are_forgiving() {
        let a = parse_implication("  # c\norder\t2\n\none 1\n# mid\nimp\n 1   1 \n0 1\n").unwrap();
        assert_eq!(a.table(), &[1, 1, 0, 1]);
    }

    #[test]
    fn invalid_utf8_is_located() {
        let e = parse_bytes(b"order 1\nab\xffc\n").unwrap_err();
        assert_eq!(
            e,
            FormatError::Parse {
                line: 2,
                column: 3,
                message: "invalid UTF-8".into()
            }
        );
    }
}
