use num_bigint::BigInt;

use super::{AlexError, Origin, SeifertData};
use crate::field_poly::parse_int_laurent;
use crate::ZPoly;

fn err(line: usize, message: impl Into<String>) -> AlexError {
    AlexError::Parse { line, message: message.into() }
}

/// Split a row into cells: whitespace-separated, `"..."` quotes a cell that
/// contains spaces.
fn cells(line: &str) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut rest = line.trim();
    while !rest.is_empty() {
        if let Some(q) = rest.strip_prefix('"') {
            let end = q.find('"').ok_or("unterminated quote")?;
            out.push(q[..end].to_string());
            rest = q[end + 1..].trim_start();
        } else {
            let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            out.push(rest[..end].to_string());
            rest = rest[end..].trim_start();
        }
    }
    Ok(out)
}

/// Parse the matrix file format:
///
/// ```text
/// matrix <name>
/// k <int>
/// origin seifert|presentation
/// <row of polynomial cells>
/// ...
/// ```
pub fn parse_matrix(text: &str) -> Result<SeifertData, AlexError> {
    let mut name = None;
    let mut k = None;
    let mut origin = None;
    let mut rows: Vec<(usize, Vec<ZPoly>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut words = content.split_whitespace();
        match words.next() {
            Some("matrix") if rows.is_empty() => {
                let rest = content["matrix".len()..].trim();
                if rest.is_empty() {
                    return Err(err(line, "missing matrix name"));
                }
                name = Some(rest.to_string());
            }
            Some("k") if rows.is_empty() => {
                let v = words.next().and_then(|w| w.parse::<usize>().ok()).filter(|&v| v > 0);
                k = Some(v.ok_or_else(|| err(line, "expected 'k <positive integer>'"))?);
            }
            Some("origin") if rows.is_empty() => {
                origin = Some(match words.next() {
                    Some("seifert") => Origin::Seifert,
                    Some("presentation") => Origin::Presentation,
                    _ => return Err(err(line, "origin must be 'seifert' or 'presentation'")),
                });
            }
            _ => {
                let row = cells(content)
                    .map_err(|m| err(line, m))?
                    .iter()
                    .map(|c| {
                        parse_int_laurent::<BigInt>(c).map_err(|e| err(line, format!("cell '{c}': {e}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push((line, row));
            }
        }
    }
    let name = name.ok_or_else(|| err(1, "missing 'matrix <name>' line"))?;
    let k = k.ok_or_else(|| err(1, "missing 'k <int>' line"))?;
    let origin = origin.ok_or_else(|| err(1, "missing 'origin' line"))?;
    let n = rows.len();
    if let Some((line, r)) = rows.iter().find(|(_, r)| r.len() != n) {
        return Err(err(*line, format!("row has {} entries, expected {n}", r.len())));
    }
    match origin {
        Origin::Seifert => {
            let mut ints = Vec::new();
            for (line, r) in &rows {
                let mut row = Vec::new();
                for c in r {
                    if c.breadth() > 0 || (!c.is_zero() && c.low() != 0) {
                        return Err(err(*line, format!("seifert entries must be integers, found {c}")));
                    }
                    row.push(c.coeff(0));
                }
                ints.push(row);
            }
            SeifertData::seifert(name, ints, k)
        }
        Origin::Presentation => SeifertData::presentation(name, rows.into_iter().map(|(_, r)| r).collect(), k),
    }
}

impl SeifertData {
    /// Serialize in the matrix file format.
    pub fn to_text(&self) -> String {
        let origin = match self.origin {
            Origin::Seifert => "seifert",
            Origin::Presentation => "presentation",
        };
        let mut out = format!("matrix {}\nk {}\norigin {origin}\n", self.name, self.k);
        for row in self.entries() {
            let cells: Vec<String> = row.iter().map(|e| e.to_compact_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alex_module::{builtin_matrix, matrix_fixture_names};

    #[test]
    fn round_trip() {
        for name in matrix_fixture_names() {
            let sd = builtin_matrix(name).unwrap();
            assert_eq!(parse_matrix(&sd.to_text()).unwrap(), sd, "{name}");
        }
    }

    #[test]
    fn quoted_cells_and_errors() {
        let sd = parse_matrix("matrix q\nk 1\norigin presentation\n\"t - 1 + t^-1\"\n").unwrap();
        assert_eq!(sd.order(), 1);
        assert!(matches!(
            parse_matrix("matrix q\nk 1\norigin seifert\n1 t\n0 1\n"),
            Err(AlexError::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_matrix("matrix q\nk 1\norigin seifert\n1 2\n0\n"),
            Err(AlexError::Parse { line: 5, .. })
        ));
        assert!(parse_matrix("matrix q\nk 2\norigin seifert\n1 0\n0 1\n").is_err());
        assert!(parse_matrix("matrix q\norigin seifert\n").is_err());
        let empty = parse_matrix("matrix u\nk 1\norigin seifert\n").unwrap();
        assert_eq!(empty.order(), 0);
    }
}
