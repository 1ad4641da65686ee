//! Oriented link diagrams as combinatorial data: arcs cut at undercrossings,
//! signed crossings, component partitions and cycles.

mod fixtures;
mod parse;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use fixtures::{builtin_fixture, fixture_names, load_diagram};
pub use parse::parse_diagram;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid diagram: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("unknown fixture '{0}'")]
    UnknownFixture(String),
    #[error("component {0} does not exist")]
    BadComponent(usize),
    #[error("arc {0} does not exist")]
    BadArc(usize),
    #[error("{0} is not a knot diagram")]
    NotAKnot(String),
    #[error("bad partition '{0}': {1}")]
    Partition(String, String),
    #[error("bad cycle '{0}': {1}")]
    Cycle(String, String),
    #[error("cannot read '{0}': {1}")]
    Io(String, String),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// A broken structural invariant, as reported by [`validate_diagram`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation(pub String);

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramArc {
    pub name: String,
    /// 1-based component index.
    pub component: usize,
}

/// Crossing with 0-based arc indices. The under strand runs from `under_in`
/// into `under_out`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub sign: i8,
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkDiagram {
    pub name: String,
    pub components: usize,
    pub arcs: Vec<DiagramArc>,
    pub crossings: Vec<Crossing>,
}

impl LinkDiagram {
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn component_of(&self, arc: usize) -> usize {
        self.arcs[arc].component
    }

    pub fn is_knot(&self) -> bool {
        self.components == 1
    }

    pub fn arc_index(&self, name: &str) -> Option<usize> {
        self.arcs.iter().position(|a| a.name == name)
    }

    /// Sum of the signs of crossings between components `i` and `j`, halved.
    pub fn linking_number(&self, i: usize, j: usize) -> i64 {
        let twice: i64 = self
            .crossings
            .iter()
            .filter(|x| {
                let (a, b) = (self.component_of(x.over), self.component_of(x.under_in));
                (a == i && b == j) || (a == j && b == i)
            })
            .map(|x| x.sign as i64)
            .sum();
        twice / 2
    }

    /// Serialize in the line-oriented file format.
    pub fn to_text(&self) -> String {
        let mut out = format!("link {}\ncomponents {}\n", self.name, self.components);
        for a in &self.arcs {
            out.push_str(&format!("arc {} component {}\n", a.name, a.component));
        }
        for x in &self.crossings {
            out.push_str(&format!(
                "crossing sign {} over {} under_in {} under_out {}\n",
                if x.sign > 0 { "+1" } else { "-1" },
                self.arcs[x.over].name,
                self.arcs[x.under_in].name,
                self.arcs[x.under_out].name
            ));
        }
        out
    }

    /// Rename arcs `1..n` in their current order.
    pub fn renumbered(mut self) -> Self {
        for (i, a) in self.arcs.iter_mut().enumerate() {
            a.name = (i + 1).to_string();
        }
        self
    }

    fn end_crossing(&self, arc: usize) -> Option<usize> {
        self.crossings.iter().position(|x| x.under_in == arc)
    }
}

/// Check the structural invariants; an empty list means the diagram is valid.
pub fn validate_diagram(d: &LinkDiagram) -> Vec<Violation> {
    let mut v = Vec::new();
    let n = d.arcs.len();
    let mut bad = |msg: String| v.push(Violation(msg));
    for a in &d.arcs {
        if a.component == 0 || a.component > d.components {
            bad(format!("arc {} has component {} outside 1..{}", a.name, a.component, d.components));
        }
    }
    for c in 1..=d.components {
        if !d.arcs.iter().any(|a| a.component == c) {
            bad(format!("component {c} has no arcs"));
        }
    }
    let mut names = BTreeSet::new();
    for a in &d.arcs {
        if !names.insert(a.name.as_str()) {
            bad(format!("arc {} declared twice", a.name));
        }
    }
    for (i, x) in d.crossings.iter().enumerate() {
        if x.sign != 1 && x.sign != -1 {
            bad(format!("crossing {} has sign {}", i + 1, x.sign));
        }
        if [x.over, x.under_in, x.under_out].iter().any(|&a| a >= n) {
            bad(format!("crossing {} references a missing arc", i + 1));
            continue;
        }
        if d.arcs[x.under_in].component != d.arcs[x.under_out].component {
            bad(format!(
                "crossing {}: under_in {} and under_out {} lie in different components",
                i + 1,
                d.arcs[x.under_in].name,
                d.arcs[x.under_out].name
            ));
        }
    }
    let mut ins = vec![0usize; n];
    let mut outs = vec![0usize; n];
    for x in d.crossings.iter().filter(|x| x.under_in < n && x.under_out < n) {
        ins[x.under_in] += 1;
        outs[x.under_out] += 1;
    }
    for c in 1..=d.components {
        let arcs: Vec<usize> = (0..n).filter(|&a| d.arcs[a].component == c).collect();
        let unders: usize = arcs.iter().map(|&a| ins[a]).sum();
        if unders == 0 {
            if arcs.len() > 1 {
                bad(format!("component {c} has no undercrossings but {} arcs", arcs.len()));
            }
            continue;
        }
        let mut ok = true;
        for &a in &arcs {
            if ins[a] != 1 || outs[a] != 1 {
                ok = false;
                let name = &d.arcs[a].name;
                match (ins[a], outs[a]) {
                    (0, _) => bad(format!("arc {name} is never closed up (no crossing ends it)")),
                    (_, 0) => bad(format!("arc {name} never starts at a crossing")),
                    (i, _) if i > 1 => bad(format!("arc {name} is under_in at {i} crossings")),
                    (_, o) => bad(format!("arc {name} is under_out at {o} crossings")),
                }
            }
        }
        if ok {
            // the successor map must be a single cycle through every arc
            let start = arcs[0];
            let mut cur = start;
            let mut len = 0;
            loop {
                let x = d.end_crossing(cur).expect("checked above");
                cur = d.crossings[x].under_out;
                len += 1;
                if cur == start || len > arcs.len() {
                    break;
                }
            }
            if len != arcs.len() {
                bad(format!("component {c} is not a single closed strand"));
            }
        }
    }
    v
}

fn checked(d: LinkDiagram) -> Result<LinkDiagram, DiagramError> {
    let v = validate_diagram(&d);
    if v.is_empty() {
        Ok(d)
    } else {
        Err(DiagramError::Invalid(v))
    }
}

/// Reverse the orientation of component `i` (1-based).
pub fn reverse_component(d: &LinkDiagram, i: usize) -> Result<LinkDiagram, DiagramError> {
    if i == 0 || i > d.components {
        return Err(DiagramError::BadComponent(i));
    }
    let mut out = d.clone();
    for x in out.crossings.iter_mut() {
        let under = d.arcs[x.under_in].component == i;
        let over = d.arcs[x.over].component == i;
        if under {
            std::mem::swap(&mut x.under_in, &mut x.under_out);
        }
        if under != over {
            x.sign = -x.sign;
        }
    }
    Ok(out)
}

/// Mirror image: every crossing sign flips. Arcs are unchanged because the
/// combinatorial data only records which arc passes over.
pub fn mirror_signs(d: &LinkDiagram) -> LinkDiagram {
    let mut out = d.clone();
    for x in out.crossings.iter_mut() {
        x.sign = -x.sign;
    }
    out
}

/// Disjoint union; components of `b` are numbered after those of `a`.
pub fn split(a: &LinkDiagram, b: &LinkDiagram) -> LinkDiagram {
    let off = a.arcs.len();
    let mut arcs = a.arcs.clone();
    arcs.extend(b.arcs.iter().map(|x| DiagramArc { name: x.name.clone(), component: x.component + a.components }));
    let mut crossings = a.crossings.clone();
    crossings.extend(b.crossings.iter().map(|x| Crossing {
        sign: x.sign,
        over: x.over + off,
        under_in: x.under_in + off,
        under_out: x.under_out + off,
    }));
    LinkDiagram {
        name: format!("split({},{})", a.name, b.name),
        components: a.components + b.components,
        arcs,
        crossings,
    }
    .renumbered()
}

/// Connected sum of two knot diagrams. Both strands are cut just before the
/// ends of their first arcs and reconnected crosswise.
pub fn connected_sum(a: &LinkDiagram, b: &LinkDiagram) -> Result<LinkDiagram, DiagramError> {
    for d in [a, b] {
        if !d.is_knot() {
            return Err(DiagramError::NotAKnot(d.name.clone()));
        }
    }
    let name = format!("connected_sum({},{})", a.name, b.name);
    let mut s = split(a, b);
    s.components = 1;
    for arc in s.arcs.iter_mut() {
        arc.component = 1;
    }
    s.name = name;
    let arc_a = 0;
    let arc_b = a.arcs.len();
    match (s.end_crossing(arc_a), s.end_crossing(arc_b)) {
        (Some(xa), Some(xb)) => {
            s.crossings[xa].under_in = arc_b;
            s.crossings[xb].under_in = arc_a;
        }
        (None, None) => {
            s.arcs.truncate(1);
        }
        (Some(_), None) => {
            s.arcs.remove(arc_b);
        }
        (None, Some(_)) => {
            s.arcs.remove(arc_a);
            for x in s.crossings.iter_mut() {
                x.over -= 1;
                x.under_in -= 1;
                x.under_out -= 1;
            }
        }
    }
    checked(s.renumbered())
}

/// Reidemeister I: add a kink of sign `sign` at the end of arc `arc`
/// (0-based). The strand passes over itself and then under, creating a new
/// arc.
pub fn add_kink(d: &LinkDiagram, arc: usize, sign: i8) -> Result<LinkDiagram, DiagramError> {
    if arc >= d.arcs.len() {
        return Err(DiagramError::BadArc(arc));
    }
    let mut out = d.clone();
    let fresh = out.arcs.len();
    out.arcs.push(DiagramArc { name: String::new(), component: d.arcs[arc].component });
    match d.end_crossing(arc) {
        Some(x) => {
            out.crossings[x].under_in = fresh;
            out.crossings.push(Crossing { sign, over: arc, under_in: arc, under_out: fresh });
        }
        None => {
            // closed circle: the kink crossing both ends and restarts the arc
            out.arcs.pop();
            out.crossings.push(Crossing { sign, over: arc, under_in: arc, under_out: arc });
        }
    }
    out.name = format!("{}_kink", d.name);
    checked(out.renumbered())
}

/// Reidemeister II: slide arc `over` across the end of arc `under`, adding
/// two crossings of opposite sign and two arcs.
pub fn add_r2(d: &LinkDiagram, over: usize, under: usize, sign: i8) -> Result<LinkDiagram, DiagramError> {
    let n = d.arcs.len();
    if over >= n {
        return Err(DiagramError::BadArc(over));
    }
    if under >= n || under == over {
        return Err(DiagramError::BadArc(under));
    }
    let mut out = d.clone();
    let comp = d.arcs[under].component;
    let (m1, m2) = (n, n + 1);
    out.arcs.push(DiagramArc { name: String::new(), component: comp });
    out.arcs.push(DiagramArc { name: String::new(), component: comp });
    let end = d.end_crossing(under);
    match end {
        Some(x) => out.crossings[x].under_in = m2,
        None => {
            out.arcs.pop();
        }
    }
    let last = if end.is_some() { m2 } else { under };
    out.crossings.push(Crossing { sign, over, under_in: under, under_out: m1 });
    out.crossings.push(Crossing { sign: -sign, over, under_in: m1, under_out: last });
    out.name = format!("{}_r2", d.name);
    checked(out.renumbered())
}

/// Partition of the components `1..k` into blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(blocks: Vec<Vec<usize>>, k: usize) -> Result<Self, DiagramError> {
        let text = blocks
            .iter()
            .map(|b| b.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("|");
        let bad = |m: &str| DiagramError::Partition(text.clone(), m.to_string());
        let mut seen = vec![false; k + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(bad("empty block"));
            }
            for &c in b {
                if c == 0 || c > k {
                    return Err(bad(&format!("component {c} outside 1..{k}")));
                }
                if seen[c] {
                    return Err(bad(&format!("component {c} appears twice")));
                }
                seen[c] = true;
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(bad("blocks do not cover every component"));
        }
        Ok(Partition { blocks })
    }

    /// One block holding every component.
    pub fn minimal(k: usize) -> Self {
        Partition { blocks: vec![(1..=k).collect()] }
    }

    /// One block per component.
    pub fn maximal(k: usize) -> Self {
        Partition { blocks: (1..=k).map(|c| vec![c]).collect() }
    }

    /// Parse `"1,2|3"`.
    pub fn parse(s: &str, k: usize) -> Result<Self, DiagramError> {
        let bad = |m: &str| DiagramError::Partition(s.to_string(), m.to_string());
        let blocks = s
            .split('|')
            .map(|b| {
                b.split(',')
                    .map(|c| c.trim().parse::<usize>().map_err(|_| bad("expected component indices")))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(blocks, k).map_err(|e| match e {
            DiagramError::Partition(_, m) => bad(&m),
            other => other,
        })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn components(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    /// Block index (0-based) of a 1-based component.
    pub fn block_of(&self, component: usize) -> usize {
        self.blocks.iter().position(|b| b.contains(&component)).expect("component in partition")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> =
            self.blocks.iter().map(|b| b.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")).collect();
        f.write_str(&s.join("|"))
    }
}

/// Labels per partition block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cycle(pub Vec<u64>);

impl Cycle {
    pub fn constant(blocks: usize, z: u64) -> Self {
        Cycle(vec![z; blocks])
    }

    /// Parse `"1,0"`.
    pub fn parse(s: &str) -> Result<Self, DiagramError> {
        s.split(',')
            .map(|x| {
                x.trim()
                    .parse::<u64>()
                    .map_err(|_| DiagramError::Cycle(s.to_string(), "labels must be non-negative integers".into()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Cycle)
    }

    pub fn labels(&self) -> &[u64] {
        &self.0
    }

    /// Every cycle in `(Z_m)^blocks`, lexicographically.
    pub fn all(blocks: usize, m: u64) -> Vec<Cycle> {
        let mut out = vec![Vec::new()];
        for _ in 0..blocks {
            out = out
                .into_iter()
                .flat_map(|v: Vec<u64>| {
                    (0..m).map(move |z| {
                        let mut w = v.clone();
                        w.push(z);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(Cycle).collect()
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|z| z.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fx(name: &str) -> LinkDiagram {
        builtin_fixture(name).unwrap()
    }

    #[test]
    fn catalog_is_valid() {
        for name in fixture_names() {
            let d = fx(name);
            assert!(validate_diagram(&d).is_empty(), "{name}");
        }
        assert_eq!(fx("unknot").arc_count(), 1);
        assert!(fx("unknot").crossings.is_empty());
    }

    #[test]
    fn violations() {
        let mut d = fx("trefoil_plus");
        d.crossings[0].under_in = 1;
        assert!(!validate_diagram(&d).is_empty());
        let mut h = fx("hopf_plus");
        h.crossings[0].under_out = 0;
        let v = validate_diagram(&h);
        assert!(v.iter().any(|x| x.0.contains("different components")), "{v:?}");
        let mut open = fx("trefoil_plus");
        open.arcs.push(DiagramArc { name: "4".into(), component: 1 });
        open.crossings[0].under_out = 3;
        assert!(validate_diagram(&open).iter().any(|x| x.0.contains("never closed up")));
    }

    #[test]
    fn reversal() {
        let t = fx("trefoil_plus");
        let r = reverse_component(&t, 1).unwrap();
        assert!(r.crossings.iter().all(|x| x.sign == 1));
        assert!(validate_diagram(&r).is_empty());
        let h = fx("hopf_plus");
        let r = reverse_component(&h, 2).unwrap();
        assert!(r.crossings.iter().all(|x| x.sign == -1));
        assert_eq!(h.linking_number(1, 2), 1);
        assert_eq!(r.linking_number(1, 2), -1);
        let twice = reverse_component(&reverse_component(&r, 1).unwrap(), 1).unwrap();
        assert_eq!(twice, r);
        assert!(reverse_component(&h, 3).is_err());
    }

    #[test]
    fn combinators() {
        let t = fx("trefoil_plus");
        let s = split(&t, &t);
        assert_eq!((s.components, s.crossings.len()), (2, 6));
        assert!(validate_diagram(&s).is_empty());
        let c = connected_sum(&t, &fx("figure_eight")).unwrap();
        assert_eq!((c.components, c.crossings.len()), (1, 7));
        let u = connected_sum(&fx("unknot"), &t).unwrap();
        assert_eq!(u.crossings.len(), 3);
        assert!(connected_sum(&fx("hopf_plus"), &t).is_err());
        let k = add_kink(&t, 0, -1).unwrap();
        assert_eq!((k.arc_count(), k.crossings.len()), (4, 4));
        let r2 = add_r2(&t, 0, 1, 1).unwrap();
        assert_eq!((r2.arc_count(), r2.crossings.len()), (5, 5));
        let uk = add_kink(&fx("unknot"), 0, 1).unwrap();
        assert_eq!((uk.arc_count(), uk.crossings.len()), (1, 1));
    }

    #[test]
    fn partitions_and_cycles() {
        let p = Partition::parse("1,2|3", 3).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.block_of(3), 1);
        assert_eq!(p.to_string(), "1,2|3");
        assert!(Partition::parse("1|1", 2).is_err());
        assert!(Partition::parse("1", 2).is_err());
        assert!(Partition::parse("1,x", 2).is_err());
        assert_eq!(Cycle::parse("1, 0").unwrap(), Cycle(vec![1, 0]));
        assert!(Cycle::parse("-1").is_err());
        assert_eq!(Cycle::all(2, 3).len(), 9);
        assert_eq!(Cycle::all(0, 3), vec![Cycle(vec![])]);
    }
}
