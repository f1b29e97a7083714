//! Quadric-pair input documents.
//!
//! Two forms are accepted. The line form has one quadric per line, each as
//! ten whitespace-separated rationals in the order
//! `x² y² z² w² xy xz xw yz yw zw`; `#` starts a comment. The JSON form is
//! `{"A": [...], "B": [...]}` with ten entries each, written as strings
//! (`"1/2"`) or integers.

use crate::error::CliError;
use num_traits::Zero;
use qsic::arith::{Integer, Rational};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub a: [Rational; 10],
    pub b: [Rational; 10],
}

enum TokenError {
    Float,
    Invalid(String),
}

fn parse_integer(s: &str) -> Option<Integer> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn looks_like_float(s: &str) -> bool {
    s.parse::<f64>().is_ok()
}

fn parse_token(tok: &str) -> Result<Rational, TokenError> {
    let mut parts = tok.splitn(2, '/');
    let num = parts.next().unwrap_or("");
    let den = parts.next();
    if looks_like_float(num) && parse_integer(num).is_none() || den.is_some_and(|d| looks_like_float(d) && parse_integer(d).is_none())
    {
        return Err(TokenError::Float);
    }
    let n = parse_integer(num).ok_or_else(|| TokenError::Invalid(format!("`{tok}` is not a rational number")))?;
    let d = match den {
        None => Integer::from(1),
        Some(d) => {
            let d = parse_integer(d).ok_or_else(|| TokenError::Invalid(format!("`{tok}` has a malformed denominator")))?;
            if d.is_zero() {
                return Err(TokenError::Invalid(format!("`{tok}` has a zero denominator")));
            }
            d
        }
    };
    Ok(Rational::new(n, d))
}

/// Parses one rational literal (`-3`, `7/2`).
pub fn parse_rational(tok: &str) -> Result<Rational, CliError> {
    locate_token(tok, 1, 1)
}

fn locate_token(tok: &str, line: usize, column: usize) -> Result<Rational, CliError> {
    parse_token(tok).map_err(|e| match e {
        TokenError::Float => CliError::NonRationalCoefficient { line, column, token: tok.to_string() },
        TokenError::Invalid(m) => CliError::parse(line, column, m),
    })
}

pub fn parse_input(text: &str) -> Result<InputDocument, CliError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_lines(text)
    }
}

fn into_array(v: Vec<Rational>) -> [Rational; 10] {
    v.try_into().expect("ten coefficients")
}

fn parse_lines(text: &str) -> Result<InputDocument, CliError> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let body = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut start = None;
        for (col, ch) in body.chars().chain(std::iter::once(' ')).enumerate() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(col),
                (true, Some(s)) => {
                    toks.push((s + 1, body.chars().skip(s).take(col - s).collect::<String>()));
                    start = None;
                }
                _ => {}
            }
        }
        if toks.is_empty() {
            continue;
        }
        if rows.len() == 2 {
            return Err(CliError::parse(line, toks[0].0, "expected exactly two quadrics"));
        }
        if toks.len() != 10 {
            let column = toks.get(10).map_or(body.chars().count() + 1, |t| t.0);
            return Err(CliError::parse(line, column, format!("expected 10 coefficients, found {}", toks.len())));
        }
        let row = toks
            .iter()
            .map(|(col, t)| locate_token(t, line, *col))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.len() < 2 {
        return Err(CliError::parse(last_line + 1, 1, format!("expected two quadrics, found {}", rows.len())));
    }
    let b = into_array(rows.pop().unwrap());
    let a = into_array(rows.pop().unwrap());
    Ok(InputDocument { a, b })
}

fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().unwrap_or("").chars().count() + 1;
    (line, column)
}

/// Byte offset of the `idx`-th element of the array under `key`, or of the
/// key itself when `idx` is `None`.
fn element_offset(text: &str, key: &str, idx: Option<usize>) -> usize {
    let Some(k) = text.find(&format!("\"{key}\"")) else { return 0 };
    let Some(idx) = idx else { return k };
    let Some(open) = text[k..].find('[').map(|o| k + o) else { return k };
    let mut count = 0;
    let mut in_str = false;
    let mut escaped = false;
    let mut want_start = true;
    for (off, ch) in text[open + 1..].char_indices() {
        let off = open + 1 + off;
        if want_start && !ch.is_whitespace() {
            if count == idx {
                return off;
            }
            want_start = false;
        }
        if in_str {
            match (escaped, ch) {
                (true, _) => escaped = false,
                (false, '\\') => escaped = true,
                (false, '"') => in_str = false,
                _ => {}
            }
            continue;
        }
        match ch {
            '"' => in_str = true,
            ',' => {
                count += 1;
                want_start = true;
            }
            ']' => break,
            _ => {}
        }
    }
    open
}

fn parse_json(text: &str) -> Result<InputDocument, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::parse(e.line(), e.column(), e.to_string()))?;
    let Value::Object(map) = value else {
        return Err(CliError::parse(1, 1, "expected a JSON object"));
    };
    if let Some(k) = map.keys().find(|k| *k != "A" && *k != "B") {
        let (line, column) = position(text, element_offset(text, k, None));
        return Err(CliError::parse(line, column, format!("unknown field `{k}`")));
    }
    let read = |key: &str| -> Result<[Rational; 10], CliError> {
        let at = |idx| position(text, element_offset(text, key, idx));
        let arr = match map.get(key) {
            Some(Value::Array(arr)) => arr,
            Some(_) => {
                let (line, column) = at(None);
                return Err(CliError::parse(line, column, format!("`{key}` must be an array")));
            }
            None => return Err(CliError::parse(1, 1, format!("missing field `{key}`"))),
        };
        if arr.len() != 10 {
            let (line, column) = at(None);
            return Err(CliError::parse(line, column, format!("`{key}` needs 10 coefficients, found {}", arr.len())));
        }
        let mut out = Vec::with_capacity(10);
        for (i, v) in arr.iter().enumerate() {
            let (line, column) = at(Some(i));
            let r = match v {
                Value::String(s) => locate_token(s.trim(), line, column)?,
                Value::Number(n) if n.is_i64() || n.is_u64() => locate_token(&n.to_string(), line, column)?,
                Value::Number(n) => {
                    return Err(CliError::NonRationalCoefficient { line, column, token: n.to_string() });
                }
                _ => return Err(CliError::parse(line, column, "coefficients must be strings or integers")),
            };
            out.push(r);
        }
        Ok(into_array(out))
    };
    Ok(InputDocument { a: read("A")?, b: read("B")? })
}

impl InputDocument {
    /// Line form, one quadric per line.
    pub fn to_text(&self) -> String {
        let row = |v: &[Rational; 10]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        format!("{}\n{}\n", row(&self.a), row(&self.b))
    }

    pub fn to_json(&self) -> String {
        let row = |v: &[Rational; 10]| Value::Array(v.iter().map(|r| Value::String(r.to_string())).collect());
        let mut map = serde_json::Map::new();
        map.insert("A".into(), row(&self.a));
        map.insert("B".into(), row(&self.b));
        serde_json::to_string_pretty(&Value::Object(map)).expect("serializable") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qsic::arith::rational;

    #[test]
    fn tokens() {
        assert!(matches!(parse_token("1/2"), Ok(r) if r == rational(1, 2)));
        assert!(matches!(parse_token("-6/4"), Ok(r) if r == rational(-3, 2)));
        assert!(matches!(parse_token("+7"), Ok(r) if r == rational(7, 1)));
        assert!(matches!(parse_token("0.5"), Err(TokenError::Float)));
        assert!(matches!(parse_token("1e3"), Err(TokenError::Float)));
        assert!(matches!(parse_token("1/2.0"), Err(TokenError::Float)));
        assert!(matches!(parse_token("NaN"), Err(TokenError::Float)));
        assert!(matches!(parse_token("1/0"), Err(TokenError::Invalid(_))));
        assert!(matches!(parse_token("x"), Err(TokenError::Invalid(_))));
        assert!(matches!(parse_token("1/2/3"), Err(TokenError::Invalid(_))));
    }

    #[test]
    fn json_offsets() {
        let t = "{\"A\": [\"1\", \"2\",\n  \"3\"]}";
        assert_eq!(position(t, element_offset(t, "A", Some(0))), (1, 8));
        assert_eq!(position(t, element_offset(t, "A", Some(2))), (2, 3));
        assert_eq!(position(t, element_offset(t, "A", None)), (1, 2));
    }
}
