//! `X`-colorings of `(D, P, z̄)`: the crossing linear system over
//! `F(p, h)`, a brute-force counter, and the `Φ_X` polynomial.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{validate_diagram, Cycle, DiagramError, LinkDiagram, Partition};
use crate::field_poly::FieldElem;
use crate::linalg::kernel_basis;
use crate::quandle::AlexanderQuandle;

/// Largest `q^(#arcs)` the brute-force counter will enumerate.
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;
/// Largest `t_X^|P|` for [`phi_polynomial`].
pub const PHI_LIMIT: u128 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("partition covers {0} components but the diagram has {1}")]
    PartitionMismatch(usize, usize),
    #[error("cycle has {0} labels but the partition has {1} blocks")]
    CycleMismatch(usize, usize),
    #[error("instance too large: {0}")]
    TooLarge(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringResult {
    /// `d_X`, dimension of the coloring space.
    pub d: usize,
    /// `a_X = d_X - 1`.
    pub a: usize,
    /// `c_X = q^(d_X)`.
    #[serde(serialize_with = "crate::serialize_display")]
    pub count: BigUint,
    /// Kernel basis: one vector of arc colors per basis element.
    #[serde(skip)]
    pub basis: Vec<Vec<FieldElem>>,
}

impl ColoringResult {
    /// Kernel basis as rows `arc id -> coefficient vectors`, one column per
    /// basis vector.
    pub fn basis_table(&self, d: &LinkDiagram, x: &AlexanderQuandle) -> String {
        let mut out = String::new();
        for (i, arc) in d.arcs.iter().enumerate() {
            let cols: Vec<String> = self.basis.iter().map(|v| x.field().to_poly(&v[i]).to_string()).collect();
            out.push_str(&format!("{} -> [{}]\n", arc.name, cols.join(", ")));
        }
        out
    }
}

fn check_inputs(d: &LinkDiagram, p: &Partition, z: &Cycle) -> Result<(), ColoringError> {
    let v = validate_diagram(d);
    if !v.is_empty() {
        return Err(DiagramError::Invalid(v).into());
    }
    if p.components() != d.components {
        return Err(ColoringError::PartitionMismatch(p.components(), d.components));
    }
    if z.labels().len() != p.len() {
        return Err(ColoringError::CycleMismatch(z.labels().len(), p.len()));
    }
    Ok(())
}

/// Exponent `ε z` applied at each crossing, with `z` the label of the block
/// containing the over arc.
fn crossing_exponents(d: &LinkDiagram, p: &Partition, z: &Cycle, x: &AlexanderQuandle) -> Vec<i64> {
    d.crossings
        .iter()
        .map(|c| {
            let label = z.labels()[p.block_of(d.component_of(c.over))];
            let label = (label % x.quandle_type()) as i64;
            c.sign as i64 * label
        })
        .collect()
}

/// The linear system: one row per crossing,
/// `c - t̄^(εz) a - (1 - t̄^(εz)) b = 0`.
pub fn coloring_system(
    d: &LinkDiagram,
    p: &Partition,
    z: &Cycle,
    x: &AlexanderQuandle,
) -> Result<Vec<Vec<FieldElem>>, ColoringError> {
    check_inputs(d, p, z)?;
    let f = x.field();
    let exps = crossing_exponents(d, p, z, x);
    Ok(d.crossings
        .iter()
        .zip(exps)
        .map(|(c, m)| {
            let tm = f.tbar_pow(m);
            let mut row = vec![f.zero(); d.arc_count()];
            row[c.under_out] = f.add(&row[c.under_out], &f.one());
            row[c.under_in] = f.sub(&row[c.under_in], &tm);
            let rest = f.sub(&f.one(), &tm);
            row[c.over] = f.sub(&row[c.over], &rest);
            row
        })
        .collect())
}

/// Solve the crossing system by exact elimination over `F(p, h)`.
pub fn coloring_dimension(
    d: &LinkDiagram,
    p: &Partition,
    z: &Cycle,
    x: &AlexanderQuandle,
) -> Result<ColoringResult, ColoringError> {
    let rows = coloring_system(d, p, z, x)?;
    let basis = kernel_basis(x.field(), rows, d.arc_count());
    let dim = basis.len();
    let q = BigUint::from(x.p()).pow(x.field().degree() as u32);
    Ok(ColoringResult { d: dim, a: dim.saturating_sub(1), count: q.pow(dim as u32), basis })
}

/// Count colorings by enumerating arc assignments, pruning on each crossing
/// as soon as its three arcs are colored.
pub fn brute_force_count(
    d: &LinkDiagram,
    p: &Partition,
    z: &Cycle,
    x: &AlexanderQuandle,
) -> Result<u64, ColoringError> {
    check_inputs(d, p, z)?;
    let q = x.field().order().unwrap_or(u128::MAX);
    let n = d.arc_count() as u32;
    let size = q.checked_pow(n).filter(|&s| s <= BRUTE_FORCE_LIMIT);
    if size.is_none() {
        return Err(ColoringError::TooLarge(format!("{q}^{n} assignments exceed {BRUTE_FORCE_LIMIT}")));
    }
    let elems = x.field().elements().expect("small field");
    let exps = crossing_exponents(d, p, z, x);
    // crossings indexed by the largest arc they touch
    let mut ready: Vec<Vec<usize>> = vec![Vec::new(); n as usize];
    for (i, c) in d.crossings.iter().enumerate() {
        ready[c.over.max(c.under_in).max(c.under_out)].push(i);
    }
    let table: Vec<Vec<Vec<usize>>> = {
        let mut distinct: Vec<i64> = exps.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let by_exp: BTreeMap<i64, Vec<Vec<usize>>> = distinct
            .into_iter()
            .map(|m| {
                let t = elems
                    .iter()
                    .map(|a| elems.iter().map(|b| x.field().index_of(&x.apply(a, b, m))).collect())
                    .collect();
                (m, t)
            })
            .collect();
        exps.iter().map(|m| by_exp[m].clone()).collect()
    };
    let mut colors = vec![0usize; n as usize];
    let count = enumerate(0, &mut colors, elems.len(), d, &ready, &table);
    Ok(count)
}

fn enumerate(
    arc: usize,
    colors: &mut Vec<usize>,
    q: usize,
    d: &LinkDiagram,
    ready: &[Vec<usize>],
    table: &[Vec<Vec<usize>>],
) -> u64 {
    if arc == colors.len() {
        return 1;
    }
    let mut total = 0;
    for v in 0..q {
        colors[arc] = v;
        let ok = ready[arc].iter().all(|&i| {
            let c = &d.crossings[i];
            table[i][colors[c.under_in]][colors[c.over]] == colors[c.under_out]
        });
        if ok {
            total += enumerate(arc + 1, colors, q, d, ready, table);
        }
    }
    total
}

/// `Φ_X(L, P)(t) = Σ_z̄ t^(a_X(L, P, z̄))`, stored as exponent -> multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiPolynomial {
    pub terms: BTreeMap<usize, u64>,
    /// `a_X` per cycle, in lexicographic order of the cycles.
    pub values: Vec<(Cycle, usize)>,
}

impl PhiPolynomial {
    pub fn degree(&self) -> usize {
        self.terms.keys().next_back().copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Multiset of values, sorted.
    pub fn spectrum(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.values.iter().map(|(_, a)| *a).collect();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for PhiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = crate::field_poly::format_terms(
            self.terms.iter().map(|(&e, &m)| (e as i64, BigInt::from(m))),
            true,
        );
        f.write_str(&s)
    }
}

/// Evaluate [`coloring_dimension`] on every cycle in `(Z_{t_X})^|P|`.
pub fn phi_polynomial(d: &LinkDiagram, p: &Partition, x: &AlexanderQuandle) -> Result<PhiPolynomial, ColoringError> {
    let t = x.quandle_type() as u128;
    let total = t.checked_pow(p.len() as u32).filter(|&n| n <= PHI_LIMIT);
    if total.is_none() {
        return Err(ColoringError::TooLarge(format!("{t}^{} cycles exceed {PHI_LIMIT}", p.len())));
    }
    let mut terms = BTreeMap::new();
    let mut values = Vec::new();
    for z in Cycle::all(p.len(), x.quandle_type()) {
        let a = coloring_dimension(d, p, &z, x)?.a;
        *terms.entry(a).or_insert(0) += 1;
        values.push((z, a));
    }
    Ok(PhiPolynomial { terms, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{builtin_fixture, reverse_component};

    fn d(name: &str) -> LinkDiagram {
        builtin_fixture(name).unwrap()
    }

    fn q(p: u64, h: &str) -> AlexanderQuandle {
        AlexanderQuandle::from_parts(p, h).unwrap()
    }

    fn a_min(name: &str, x: &AlexanderQuandle, z: u64) -> usize {
        let dg = d(name);
        let p = Partition::minimal(dg.components);
        coloring_dimension(&dg, &p, &Cycle(vec![z]), x).unwrap().a
    }

    #[test]
    fn trefoil_values() {
        let d3 = q(3, "1+t");
        let t = d("trefoil_plus");
        let r = coloring_dimension(&t, &Partition::minimal(1), &Cycle(vec![1]), &d3).unwrap();
        assert_eq!((r.d, r.a, r.count.clone()), (2, 1, BigUint::from(9u32)));
        assert_eq!(r.basis.len(), 2);
        assert_eq!(a_min("trefoil_plus", &q(5, "1+t"), 1), 0);
        assert_eq!(a_min("unknot", &q(7, "t+3"), 2), 0);
        assert_eq!(a_min("figure_eight", &q(5, "1+t"), 0), 0);
    }

    #[test]
    fn zero_cycle_gives_components_minus_one() {
        let x = q(5, "1+t");
        for name in ["hopf_plus", "split(trefoil,figure_eight)", "split(unknot,split(unknot,unknot))"] {
            let dg = d(name);
            let p = Partition::maximal(dg.components);
            let r = coloring_dimension(&dg, &p, &Cycle::constant(p.len(), 0), &x).unwrap();
            assert_eq!(r.a, dg.components - 1, "{name}");
        }
    }

    #[test]
    fn brute_force_examples() {
        let d3 = q(3, "1+t");
        let d5 = q(5, "1+t");
        let min = Partition::minimal(1);
        assert_eq!(brute_force_count(&d("trefoil_plus"), &min, &Cycle(vec![1]), &d3).unwrap(), 9);
        assert_eq!(brute_force_count(&d("figure_eight"), &min, &Cycle(vec![1]), &d5).unwrap(), 25);
        let u2 = d("split(unknot,unknot)");
        let r = brute_force_count(&u2, &Partition::maximal(2), &Cycle(vec![1, 1]), &d3).unwrap();
        assert_eq!(r, 9);
        let big = d("k3_pretzel");
        assert!(brute_force_count(&big, &min, &Cycle(vec![1]), &q(11, "1+t")).is_err());
    }

    #[test]
    fn phi_examples() {
        let d3 = q(3, "1+t");
        let phi = phi_polynomial(&d("trefoil_plus"), &Partition::minimal(1), &d3).unwrap();
        assert_eq!(phi.to_string(), "1 + t");
        assert_eq!(phi.degree(), 1);
        let phi = phi_polynomial(&d("unknot"), &Partition::minimal(1), &d3).unwrap();
        assert_eq!(phi.to_string(), "2");
        let phi = phi_polynomial(&d("split(unknot,unknot)"), &Partition::maximal(2), &d3).unwrap();
        assert_eq!(phi.to_string(), "4*t");
        assert_eq!(phi.total(), 4);
    }

    #[test]
    fn mirror_and_moves() {
        for x in [q(3, "1+t"), q(5, "1+t"), q(7, "t+3"), q(11, "1+t^2")] {
            for z in 0..3 {
                let a = a_min("trefoil_plus", &x, z);
                assert_eq!(a, a_min("trefoil_kink", &x, z));
                assert_eq!(a_min("figure_eight", &x, z), a_min("figure_eight_mirror", &x, z));
                if x.quandle_type() == 2 {
                    assert_eq!(a, a_min("trefoil_minus_mirror", &x, z));
                }
            }
        }
    }

    #[test]
    fn reversal_keeps_the_maximal_spectrum() {
        let x = q(7, "t+3");
        for name in ["hopf_plus", "split(trefoil,hopf_plus)"] {
            let dg = d(name);
            let p = Partition::maximal(dg.components);
            let base = phi_polynomial(&dg, &p, &x).unwrap().spectrum();
            for c in 1..=dg.components {
                let r = reverse_component(&dg, c).unwrap();
                assert_eq!(phi_polynomial(&r, &p, &x).unwrap().spectrum(), base, "{name} component {c}");
            }
        }
    }

    #[test]
    fn input_checks() {
        let x = q(3, "1+t");
        let h = d("hopf_plus");
        assert!(matches!(
            coloring_dimension(&h, &Partition::minimal(1), &Cycle(vec![1]), &x),
            Err(ColoringError::PartitionMismatch(1, 2))
        ));
        assert!(matches!(
            coloring_dimension(&h, &Partition::maximal(2), &Cycle(vec![1]), &x),
            Err(ColoringError::CycleMismatch(1, 2))
        ));
    }
}
