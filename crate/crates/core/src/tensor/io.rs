//! JSON and text interchange formats for cubes.
//!
//! JSON: `{"n": 3, "slices": [...]}` where `slices[k][i][j]` is entry
//! `(i, j, k)` as a string. Input also accepts JSON numbers and decimal
//! strings; output is always canonical `"p/q"` strings.
//!
//! Text: a line holding `n`, then `n` blocks of `n` rows of `n`
//! whitespace-separated values, blocks separated by a blank line. Lines
//! starting with `#` are ignored.

use std::str::FromStr;

use serde_json::Value;

use super::Tensor3;
use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(Error::Malformed(format!("unknown format {other:?}"))),
        }
    }
}

/// Sniffs the format: JSON if the first non-blank character is `{`.
pub(crate) fn parse_tensor(text: &str) -> Result<Tensor3> {
    let format = if text.trim_start().starts_with('{') {
        Format::Json
    } else {
        Format::Text
    };
    parse_tensor_as(text, format)
}

pub(crate) fn parse_tensor_as(text: &str, format: Format) -> Result<Tensor3> {
    match format {
        Format::Json => parse_json(text),
        Format::Text => parse_text(text),
    }
}

pub(crate) fn serialize_tensor(t: &Tensor3, format: Format) -> String {
    match format {
        Format::Json => pretty_json(t),
        Format::Text => text(t),
    }
}

fn parse_json(text: &str) -> Result<Tensor3> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Malformed("expected a JSON object".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Malformed("\"n\" must be a positive integer".into()))?
        as usize;
    let slices = obj
        .get("slices")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Malformed("\"slices\" must be an array".into()))?;
    let inconsistent = |what: &str, found: usize| {
        Error::Malformed(format!(
            "inconsistent n: n = {n} but {what} has length {found}"
        ))
    };
    if slices.len() != n {
        return Err(inconsistent("slices", slices.len()));
    }
    let mut data = Vec::with_capacity(n * n * n);
    for (k, block) in slices.iter().enumerate() {
        let rows = block
            .as_array()
            .ok_or_else(|| Error::Malformed(format!("slices[{k}] must be an array")))?;
        if rows.len() != n {
            return Err(inconsistent(&format!("slices[{k}]"), rows.len()));
        }
        for (i, row) in rows.iter().enumerate() {
            let cells = row
                .as_array()
                .ok_or_else(|| Error::Malformed(format!("slices[{k}][{i}] must be an array")))?;
            if cells.len() != n {
                return Err(inconsistent(&format!("slices[{k}][{i}]"), cells.len()));
            }
            for cell in cells {
                data.push(json_scalar(cell)?);
            }
        }
    }
    Tensor3::new(n, data)
}

fn json_scalar(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(num) => parse_rational(&num.to_string()),
        other => Err(Error::Malformed(format!(
            "entries must be strings or numbers, found {other}"
        ))),
    }
}

fn parse_text(text: &str) -> Result<Tensor3> {
    let mut content = text
        .lines()
        .enumerate()
        .map(|(no, line)| (no + 1, line))
        .filter(|(_, line)| {
            let t = line.trim();
            !t.is_empty() && !t.starts_with('#')
        });
    let last_line = text.lines().count().max(1);
    let eof = |message: String| Error::Syntax {
        line: last_line,
        column: 1,
        message,
    };

    let (header_no, header) = content
        .next()
        .ok_or_else(|| eof("empty input: expected the side length n".into()))?;
    let n: usize = header
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Syntax {
            line: header_no,
            column: column_of(header, header.trim()),
            message: format!("expected a positive side length, found {:?}", header.trim()),
        })?;

    let mut data = Vec::with_capacity(n * n * n);
    let mut rows = 0;
    for (no, line) in content {
        if rows == n * n {
            return Err(Error::Syntax {
                line: no,
                column: 1,
                message: format!("inconsistent n: more than {} rows for n = {n}", n * n),
            });
        }
        let tokens = tokens_with_columns(line);
        if tokens.len() != n {
            return Err(Error::Syntax {
                line: no,
                column: tokens.get(n).map_or(line.len() + 1, |t| t.0),
                message: format!(
                    "inconsistent n: expected {n} values, found {}",
                    tokens.len()
                ),
            });
        }
        for (col, tok) in tokens {
            data.push(parse_rational(tok).map_err(|e| Error::Syntax {
                line: no,
                column: col,
                message: e.to_string(),
            })?);
        }
        rows += 1;
    }
    if rows != n * n {
        return Err(eof(format!(
            "unexpected end of input: expected {} rows, found {rows}",
            n * n
        )));
    }
    Tensor3::new(n, data)
}

fn tokens_with_columns(line: &str) -> Vec<(usize, &str)> {
    line.split_whitespace()
        .map(|tok| (column_of(line, tok), tok))
        .collect()
}

/// 1-based column of `part`, which must be a subslice of `line`.
fn column_of(line: &str, part: &str) -> usize {
    part.as_ptr() as usize - line.as_ptr() as usize + 1
}

fn json_row(row: &[Rational]) -> String {
    let cells: Vec<String> = row
        .iter()
        .map(|v| format!("\"{}\"", format_rational(v)))
        .collect();
    format!("[{}]", cells.join(", "))
}

fn pretty_json(t: &Tensor3) -> String {
    let blocks: Vec<String> = t
        .flatten()
        .blocks
        .iter()
        .map(|b| {
            let rows: Vec<String> = b.iter().map(|r| json_row(r)).collect();
            format!("    [{}]", rows.join(", "))
        })
        .collect();
    format!(
        "{{\n  \"n\": {},\n  \"slices\": [\n{}\n  ]\n}}\n",
        t.n(),
        blocks.join(",\n")
    )
}

pub(crate) fn compact_json(t: &Tensor3) -> String {
    let slices: Vec<Value> = t
        .flatten()
        .blocks
        .iter()
        .map(|b| {
            Value::Array(
                b.iter()
                    .map(|r| {
                        r.iter()
                            .map(|v| Value::String(format_rational(v)))
                            .collect()
                    })
                    .collect(),
            )
        })
        .collect();
    serde_json::json!({ "n": t.n(), "slices": slices }).to_string()
}

fn text(t: &Tensor3) -> String {
    let mut out = format!("{}\n", t.n());
    for (k, block) in t.flatten().blocks.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        for row in block {
            let cells: Vec<String> = row.iter().map(format_rational).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    const E_TEXT: &str = "3
0 1/2 1/2
1/2 1/2 0
1/2 0 1/2

1/2 1/2 0
0 1/2 1/2
1/2 0 1/2

1/2 0 1/2
1/2 0 1/2
0 1 0
";

    #[test]
    fn text_round_trip() {
        let t = parse_text(E_TEXT).unwrap();
        assert_eq!(t.get(2, 1, 2), &ratio(1, 1));
        assert_eq!(text(&t), E_TEXT);
    }

    #[test]
    fn json_round_trip() {
        let t = parse_text(E_TEXT).unwrap();
        let js = pretty_json(&t);
        assert_eq!(parse_json(&js).unwrap(), t);
        assert_eq!(parse_json(&compact_json(&t)).unwrap(), t);
        assert_eq!(parse_tensor(&js).unwrap(), t);
    }

    #[test]
    fn json_accepts_numbers_and_decimals() {
        let t = parse_json(r#"{"n": 1, "slices": [[["0.6"]]]}"#).unwrap();
        assert_eq!(t.entries()[0], ratio(3, 5));
        let t = parse_json(r#"{"n": 1, "slices": [[[0.6]]]}"#).unwrap();
        assert_eq!(t.entries()[0], ratio(3, 5));
        let t = parse_json(r#"{"n": 1, "slices": [[[2]]]}"#).unwrap();
        assert_eq!(t.entries()[0], ratio(2, 1));
    }

    #[test]
    fn truncated_json_reports_position() {
        let err = parse_json("{\"n\": 2,\n \"slices\": [[[\"1\"").unwrap_err();
        match err {
            Error::Syntax { line, column, .. } => {
                assert_eq!(line, 2);
                assert!(column > 1);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn truncated_text_is_syntax_error() {
        let cut = &E_TEXT[..E_TEXT.len() - 8];
        assert!(matches!(parse_text(cut), Err(Error::Syntax { .. })));
        assert!(matches!(parse_text(""), Err(Error::Syntax { .. })));
    }

    #[test]
    fn bad_token_position() {
        let err = parse_text("1\n  x\n").unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                line: 2,
                column: 3,
                message: "invalid rational literal \"x\"".into()
            }
        );
    }

    #[test]
    fn inconsistent_n() {
        assert!(matches!(
            parse_json(r#"{"n": 2, "slices": [[["1"]]]}"#),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            parse_text("2\n1 0\n0 1\n\n0 1\n1 0 0\n"),
            Err(Error::Syntax { line: 6, .. })
        ));
        assert!(matches!(
            parse_text("1\n1\n1\n"),
            Err(Error::Syntax { line: 3, .. })
        ));
    }
}
