//! Text and JSON serialization of skew tableaux.
//!
//! Text form: one line per row, tokens separated by single spaces, `.` for
//! each inner cell, every line newline-terminated.

use serde::{Deserialize, Serialize};

use crate::error::{Result, TableauError};
use crate::partition::Partition;
use crate::tableau::{SkewShape, SkewTableau};

#[derive(Debug, Serialize, Deserialize)]
struct TableauJson {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<u32>>,
}

pub fn to_text(t: &SkewTableau) -> String {
    let mut out = String::new();
    for (i, row) in t.rows().iter().enumerate() {
        let mut tokens: Vec<String> = vec![".".to_string(); t.shape().inner.part(i)];
        tokens.extend(row.iter().map(|x| x.to_string()));
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    out
}

pub fn from_text(input: &str) -> Result<SkewTableau> {
    let mut inner = Vec::new();
    let mut rows = Vec::new();
    for (line_no, line) in input.lines().enumerate() {
        let line_no = line_no + 1;
        let parse_err = |column: usize, message: String| TableauError::Parse {
            line: line_no,
            column,
            message,
        };
        if line.trim().is_empty() {
            return Err(parse_err(1, "empty row".into()));
        }
        let mut dots = 0;
        let mut row = Vec::new();
        let mut column = 1;
        for token in line.split(' ') {
            if token.is_empty() {
                return Err(parse_err(column, "tokens must be separated by single spaces".into()));
            }
            if token == "." {
                if !row.is_empty() {
                    return Err(parse_err(column, "inner cell after an entry".into()));
                }
                dots += 1;
            } else {
                let value: u32 = token
                    .parse()
                    .map_err(|_| parse_err(column, format!("expected an entry or '.', found {token:?}")))?;
                if value == 0 {
                    return Err(parse_err(column, "entries must be positive".into()));
                }
                row.push(value);
            }
            column += token.len() + 1;
        }
        inner.push(dots);
        rows.push(row);
    }
    let outer: Vec<usize> = inner.iter().zip(&rows).map(|(d, r)| d + r.len()).collect();
    let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
    SkewTableau::new(shape, rows)
}

pub fn to_json(t: &SkewTableau) -> String {
    let repr = TableauJson {
        outer: t.shape().outer.clone(),
        inner: t.shape().inner.clone(),
        rows: t.rows().to_vec(),
    };
    let mut s = serde_json::to_string(&repr).expect("tableau serializes");
    s.push('\n');
    s
}

pub fn to_json_value(t: &SkewTableau) -> serde_json::Value {
    serde_json::json!({
        "outer": t.shape().outer.parts(),
        "inner": t.shape().inner.parts(),
        "rows": t.rows(),
    })
}

pub fn from_json(input: &str) -> Result<SkewTableau> {
    let repr: TableauJson = serde_json::from_str(input)?;
    let shape = SkewShape::new(repr.outer, repr.inner)?;
    SkewTableau::new(shape, repr.rows)
}

/// Reads either format, choosing JSON when the first non-blank character is `{`.
pub fn parse_any(input: &str) -> Result<SkewTableau> {
    if input.trim_start().starts_with('{') {
        from_json(input)
    } else {
        from_text(input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip_is_byte_exact() {
        let text = ". . 1 3\n. . 5 6\n2 4\n";
        let t = from_text(text).unwrap();
        assert_eq!(t.shape().outer.parts(), &[4, 4, 2]);
        assert_eq!(t.shape().inner.parts(), &[2, 2]);
        assert_eq!(to_text(&t), text);
    }

    #[test]
    fn json_round_trip_is_byte_exact() {
        let t = from_text(". . 1 3\n. . 5 6\n2 4\n").unwrap();
        let json = to_json(&t);
        assert_eq!(json, "{\"outer\":[4,4,2],\"inner\":[2,2],\"rows\":[[1,3],[5,6],[2,4]]}\n");
        assert_eq!(from_json(&json).unwrap(), t);
        assert_eq!(parse_any(&json).unwrap(), t);
    }

    #[test]
    fn empty_row_between_gaps() {
        let text = ". . . . . 1 7\n. . . . .\n. 2 4 6 9\n3 5 8\n";
        let t = from_text(text).unwrap();
        assert_eq!(t.row_vector(), vec![2, 0, 4, 3]);
        assert_eq!(to_text(&t), text);
    }

    #[test]
    fn errors_carry_positions() {
        match from_text("1 2\n3 x\n") {
            Err(TableauError::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(from_text("1  2\n").is_err());
        assert!(from_text("2 1\n").is_err());
        assert_eq!(from_text("").unwrap(), SkewTableau::empty());
    }
}
