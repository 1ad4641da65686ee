use std::collections::HashMap;

use super::{validate_diagram, Crossing, DiagramArc, DiagramError, LinkDiagram};

fn err(line: usize, message: impl Into<String>) -> DiagramError {
    DiagramError::Parse { line, message: message.into() }
}

/// Parse the line-oriented diagram format:
///
/// ```text
/// link <name>
/// components <k>
/// arc <id> component <c>
/// crossing sign <+1|-1> over <arc> under_in <arc> under_out <arc>
/// ```
///
/// `#` starts a comment. The result is validated.
pub fn parse_diagram(text: &str) -> Result<LinkDiagram, DiagramError> {
    let mut name = None;
    let mut components = None;
    let mut arcs: Vec<DiagramArc> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut crossings = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        match words[0] {
            "link" => {
                if name.is_some() {
                    return Err(err(line, "duplicate 'link' line"));
                }
                let rest = content["link".len()..].trim();
                if rest.is_empty() {
                    return Err(err(line, "missing link name"));
                }
                name = Some(rest.to_string());
            }
            "components" => {
                if words.len() != 2 {
                    return Err(err(line, "expected 'components <k>'"));
                }
                let k: usize = words[1].parse().map_err(|_| err(line, "component count must be an integer"))?;
                if k == 0 {
                    return Err(err(line, "a link has at least one component"));
                }
                components = Some(k);
            }
            "arc" => {
                if words.len() != 4 || words[2] != "component" {
                    return Err(err(line, "expected 'arc <id> component <c>'"));
                }
                let c: usize = words[3].parse().map_err(|_| err(line, "component index must be an integer"))?;
                if let Some(k) = components {
                    if c == 0 || c > k {
                        return Err(err(line, format!("component {c} outside 1..{k}")));
                    }
                }
                if index.insert(words[1].to_string(), arcs.len()).is_some() {
                    return Err(err(line, format!("arc {} declared twice", words[1])));
                }
                arcs.push(DiagramArc { name: words[1].to_string(), component: c });
            }
            "crossing" => {
                if words.len() != 9
                    || words[1] != "sign"
                    || words[3] != "over"
                    || words[5] != "under_in"
                    || words[7] != "under_out"
                {
                    return Err(err(line, "expected 'crossing sign <+1|-1> over <a> under_in <a> under_out <a>'"));
                }
                let sign = match words[2] {
                    "+1" | "1" | "+" => 1,
                    "-1" | "-" => -1,
                    other => return Err(err(line, format!("sign must be +1 or -1, got {other}"))),
                };
                let look = |w: &str| index.get(w).copied().ok_or_else(|| err(line, format!("unknown arc {w}")));
                let x = Crossing { sign, over: look(words[4])?, under_in: look(words[6])?, under_out: look(words[8])? };
                if crossings.iter().any(|y: &Crossing| y.under_in == x.under_in) {
                    return Err(err(line, format!("arc {} used twice as under_in", words[6])));
                }
                if crossings.iter().any(|y: &Crossing| y.under_out == x.under_out) {
                    return Err(err(line, format!("arc {} used twice as under_out", words[8])));
                }
                crossings.push(x);
            }
            other => return Err(err(line, format!("unknown directive '{other}'"))),
        }
    }
    let name = name.ok_or_else(|| err(1, "missing 'link <name>' line"))?;
    let components = components.ok_or_else(|| err(last_line.max(1), "missing 'components <k>' line"))?;
    for c in 1..=components {
        if !arcs.iter().any(|a| a.component == c) {
            return Err(err(last_line.max(1), format!("component {c} has no arcs")));
        }
    }
    if let Some(a) = arcs.iter().find(|a| a.component == 0 || a.component > components) {
        return Err(err(last_line.max(1), format!("arc {} has component {} outside 1..{components}", a.name, a.component)));
    }
    let d = LinkDiagram { name, components, arcs, crossings };
    let v = validate_diagram(&d);
    if v.is_empty() {
        Ok(d)
    } else {
        Err(DiagramError::Invalid(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{builtin_fixture, fixture_names};

    #[test]
    fn round_trip_catalog() {
        for name in fixture_names() {
            let d = builtin_fixture(name).unwrap();
            assert_eq!(parse_diagram(&d.to_text()).unwrap(), d, "{name}");
        }
    }

    #[test]
    fn split_unlink() {
        let d = parse_diagram("link u2\ncomponents 2\narc a component 1\narc b component 2\n").unwrap();
        assert_eq!(d.components, 2);
        assert!(d.crossings.is_empty());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "link x\ncomponents 1\narc 1 component 1\n# comment\ncrossing sign +1 over 1 under_in 1 under_out 9\n";
        assert!(matches!(parse_diagram(bad), Err(DiagramError::Parse { line: 5, .. })));
        let gap = "link x\ncomponents 2\narc 1 component 1\narc 2 component 1\n";
        assert!(matches!(parse_diagram(gap), Err(DiagramError::Parse { .. })));
        let sign = "link x\ncomponents 1\narc 1 component 1\ncrossing sign 2 over 1 under_in 1 under_out 1\n";
        assert!(matches!(parse_diagram(sign), Err(DiagramError::Parse { line: 4, .. })));
        let twice = "link x\ncomponents 1\narc 1 component 1\narc 2 component 1\n\
                     crossing sign +1 over 1 under_in 1 under_out 2\n\
                     crossing sign +1 over 1 under_in 1 under_out 1\n";
        assert!(matches!(parse_diagram(twice), Err(DiagramError::Parse { line: 6, .. })));
        assert!(parse_diagram("components 1\narc 1 component 1\n").is_err());
    }
}
