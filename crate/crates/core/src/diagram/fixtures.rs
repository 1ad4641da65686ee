use super::{add_kink, connected_sum, parse_diagram, split, DiagramError, LinkDiagram};

const FILES: &[(&str, &str)] = &[
    ("unknot", include_str!("../../fixtures/diagrams/unknot.txt")),
    ("trefoil_plus", include_str!("../../fixtures/diagrams/trefoil_plus.txt")),
    ("trefoil_minus_mirror", include_str!("../../fixtures/diagrams/trefoil_minus_mirror.txt")),
    ("figure_eight", include_str!("../../fixtures/diagrams/figure_eight.txt")),
    ("figure_eight_mirror", include_str!("../../fixtures/diagrams/figure_eight_mirror.txt")),
    ("hopf_plus", include_str!("../../fixtures/diagrams/hopf_plus.txt")),
    ("k3_pretzel", include_str!("../../fixtures/diagrams/k3_pretzel.txt")),
    ("stevedore", include_str!("../../fixtures/diagrams/stevedore.txt")),
];

/// Names accepted by [`builtin_fixture`] besides the `split(..)` and
/// `connected_sum(..)` combinators.
pub fn fixture_names() -> Vec<&'static str> {
    let mut v: Vec<&str> = FILES.iter().map(|(n, _)| *n).collect();
    v.push("trefoil_kink");
    v
}

/// A catalog diagram. Accepts `trefoil` as an alias of `trefoil_plus`, and
/// nested `split(A,B)` / `connected_sum(A,B)` expressions.
pub fn builtin_fixture(name: &str) -> Result<LinkDiagram, DiagramError> {
    let name = name.trim();
    for (op, f) in [
        ("split", (|a: &LinkDiagram, b: &LinkDiagram| Ok(split(a, b))) as fn(&_, &_) -> Result<_, _>),
        ("connected_sum", |a, b| connected_sum(a, b)),
    ] {
        if let Some(args) = name.strip_prefix(op).map(str::trim).and_then(|s| s.strip_prefix('(')) {
            let args = args.strip_suffix(')').ok_or_else(|| DiagramError::UnknownFixture(name.into()))?;
            let (l, r) = split_args(args).ok_or_else(|| DiagramError::UnknownFixture(name.into()))?;
            return f(&builtin_fixture(l)?, &builtin_fixture(r)?);
        }
    }
    let key = if name == "trefoil" { "trefoil_plus" } else { name };
    if key == "trefoil_kink" {
        let mut d = add_kink(&builtin_fixture("trefoil_plus")?, 0, 1)?;
        d.name = key.into();
        return Ok(d);
    }
    FILES
        .iter()
        .find(|(n, _)| *n == key)
        .map(|(_, text)| parse_diagram(text))
        .unwrap_or_else(|| Err(DiagramError::UnknownFixture(name.into())))
}

/// Split `A,B` at the top-level comma.
fn split_args(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

/// A fixture name or a path to a diagram file.
pub fn load_diagram(spec: &str) -> Result<LinkDiagram, DiagramError> {
    match builtin_fixture(spec) {
        Err(DiagramError::UnknownFixture(_)) => {
            let text = std::fs::read_to_string(spec).map_err(|e| DiagramError::Io(spec.into(), e.to_string()))?;
            parse_diagram(&text)
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_expressions() {
        let d = builtin_fixture("split(trefoil, connected_sum(trefoil,figure_eight))").unwrap();
        assert_eq!((d.components, d.crossings.len()), (2, 10));
        assert!(builtin_fixture("split(trefoil)").is_err());
        assert!(matches!(builtin_fixture("nonsense"), Err(DiagramError::UnknownFixture(_))));
        assert!(load_diagram("/nonexistent/file").is_err());
    }
}
