//! Spectra `(p, h, z) -> a_X` and their behavior under connected sum and
//! split union.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::alex_module::{kernel_dimension, SeifertData};
use crate::coloring::{coloring_dimension, ColoringError};
use crate::diagram::{Cycle, LinkDiagram, Partition};
use crate::quandle::AlexanderQuandle;
use crate::ZPoly;

use super::primes::search_polynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComposeError {
    #[error("nothing to compose")]
    Empty,
    #[error("spectra of '{0}' and '{1}' are sampled on different (X, z) grids")]
    GridMismatch(String, String),
    #[error("'{0}' is not a knot")]
    NotAKnot(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// A quandle `F(p, h)` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct QuandleKey {
    pub p: u64,
    pub h: String,
}

impl QuandleKey {
    pub fn of(x: &AlexanderQuandle) -> Self {
        QuandleKey { p: x.p(), h: x.h().canonical().to_string() }
    }
}

/// `a_X(K, z)` of a knot on a finite grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    pub name: String,
    pub values: BTreeMap<(QuandleKey, u64), usize>,
    #[serde(serialize_with = "serialize_opt")]
    pub alexander: Option<ZPoly>,
}

fn serialize_opt<S: serde::Serializer>(v: &Option<ZPoly>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(f) => s.collect_str(f),
        None => s.serialize_none(),
    }
}

impl Spectrum {
    /// Sampled through the Seifert matrix.
    pub fn from_matrix(sd: &SeifertData, quandles: &[AlexanderQuandle], zs: &[u64]) -> Result<Self, ComposeError> {
        if sd.k != 1 {
            return Err(ComposeError::NotAKnot(sd.name.clone()));
        }
        let mut values = BTreeMap::new();
        for x in quandles {
            for &z in zs {
                values.insert((QuandleKey::of(x), z), kernel_dimension(sd, x, z));
            }
        }
        Ok(Spectrum { name: sd.name.clone(), values, alexander: Some(search_polynomial(sd).canonical()) })
    }

    /// Sampled through a knot diagram.
    pub fn from_diagram(d: &LinkDiagram, quandles: &[AlexanderQuandle], zs: &[u64]) -> Result<Self, ComposeError> {
        if d.components != 1 {
            return Err(ComposeError::NotAKnot(d.name.clone()));
        }
        let p = Partition::minimal(1);
        let mut values = BTreeMap::new();
        for x in quandles {
            for &z in zs {
                values.insert((QuandleKey::of(x), z), coloring_dimension(d, &p, &Cycle(vec![z]), x)?.a);
            }
        }
        Ok(Spectrum { name: d.name.clone(), values, alexander: None })
    }

    pub fn get(&self, x: &AlexanderQuandle, z: u64) -> Option<usize> {
        self.values.get(&(QuandleKey::of(x), z)).copied()
    }

    /// Largest sampled value: a lower bound on `A_Q`.
    pub fn max(&self) -> usize {
        self.values.values().copied().max().unwrap_or(0)
    }
}

/// `a_X(K_1 # ... # K_h, z) = Σ a_X(K_j, z)` and `Δ = ∏ Δ(K_j)`.
pub fn compose_connected_sum(parts: &[Spectrum]) -> Result<Spectrum, ComposeError> {
    let first = parts.first().ok_or(ComposeError::Empty)?;
    let mut out = first.clone();
    for s in &parts[1..] {
        if s.values.len() != out.values.len() || !s.values.keys().all(|k| out.values.contains_key(k)) {
            return Err(ComposeError::GridMismatch(first.name.clone(), s.name.clone()));
        }
        for (k, v) in &s.values {
            *out.values.get_mut(k).unwrap() += v;
        }
        out.alexander = match (&out.alexander, &s.alexander) {
            (Some(a), Some(b)) => Some((a * b).canonical()),
            _ => None,
        };
    }
    out.name = parts.iter().map(|s| s.name.as_str()).collect::<Vec<_>>().join("#");
    Ok(out)
}

/// `a_X(L, P_M, (z_1, ..., z_h))` of a split link.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitSpectrum {
    pub name: String,
    pub components: usize,
    pub values: BTreeMap<(QuandleKey, Cycle), usize>,
}

impl SplitSpectrum {
    /// Largest sampled value (maximal partition).
    pub fn max(&self) -> usize {
        self.values.values().copied().max().unwrap_or(0)
    }

    /// The minimal-partition values `a_X(L, P_m, z) = a_X(L, P_M, (z, ..., z))`.
    pub fn diagonal(&self) -> BTreeMap<(QuandleKey, u64), usize> {
        self.values
            .iter()
            .filter(|((_, c), _)| c.0.windows(2).all(|w| w[0] == w[1]))
            .map(|((x, c), a)| ((x.clone(), c.0.first().copied().unwrap_or(0)), *a))
            .collect()
    }
}

/// `a_X(L, P_M, z̄) = Σ a_X(K_i, z_i) + h - 1` over the quandles sampled in
/// every part and every combination of their sampled labels.
pub fn compose_split_link(parts: &[Spectrum]) -> SplitSpectrum {
    let h = parts.len();
    let name = format!("split({})", parts.iter().map(|s| s.name.as_str()).collect::<Vec<_>>().join(","));
    let mut values = BTreeMap::new();
    let Some(first) = parts.first() else {
        return SplitSpectrum { name, components: 0, values };
    };
    let quandles: Vec<&QuandleKey> = first.values.keys().map(|(x, _)| x).collect();
    let mut seen = std::collections::BTreeSet::new();
    for x in quandles.into_iter().filter(|x| seen.insert((*x).clone())) {
        let per_part: Vec<Vec<(u64, usize)>> = parts
            .iter()
            .map(|s| s.values.iter().filter(|((y, _), _)| y == x).map(|((_, z), a)| (*z, *a)).collect())
            .collect();
        if per_part.iter().any(Vec::is_empty) {
            continue;
        }
        let mut combos: Vec<(Vec<u64>, usize)> = vec![(Vec::new(), h - 1)];
        for options in &per_part {
            combos = combos
                .into_iter()
                .flat_map(|(zs, a)| {
                    options.iter().map(move |(z, b)| {
                        let mut zs = zs.clone();
                        zs.push(*z);
                        (zs, a + b)
                    })
                })
                .collect();
        }
        for (zs, a) in combos {
            values.insert((x.clone(), Cycle(zs)), a);
        }
    }
    SplitSpectrum { name, components: h, values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alex_module::{builtin_matrix, k_p_data, k_prime_p_data};
    use crate::diagram::builtin_fixture;

    fn d3() -> Vec<AlexanderQuandle> {
        vec![AlexanderQuandle::dihedral(3).unwrap()]
    }

    #[test]
    fn connected_sum_adds() {
        let kp = Spectrum::from_matrix(&k_prime_p_data(3).unwrap(), &d3(), &[0, 1]).unwrap();
        let sum = compose_connected_sum(&[kp.clone(), kp.clone()]).unwrap();
        assert_eq!(sum.get(&d3()[0], 1), Some(2));
        let unknot = Spectrum::from_matrix(&builtin_matrix("unknot").unwrap(), &d3(), &[0, 1]).unwrap();
        assert_eq!(compose_connected_sum(&[kp.clone(), unknot]).unwrap().values, kp.values);
        let other = Spectrum::from_matrix(&k_prime_p_data(3).unwrap(), &d3(), &[1]).unwrap();
        assert!(compose_connected_sum(&[kp, other]).is_err());
        assert!(compose_connected_sum(&[]).is_err());
    }

    #[test]
    fn block_sum_agrees_with_composition() {
        let a = k_prime_p_data(3).unwrap();
        let b = builtin_matrix("trefoil").unwrap();
        let zs = [0, 1, 2];
        let qs = vec![AlexanderQuandle::dihedral(3).unwrap(), AlexanderQuandle::from_parts(7, "t+3").unwrap()];
        let composed = compose_connected_sum(&[
            Spectrum::from_matrix(&a, &qs, &zs).unwrap(),
            Spectrum::from_matrix(&b, &qs, &zs).unwrap(),
        ])
        .unwrap();
        let direct = Spectrum::from_matrix(&a.block_sum(&b), &qs, &zs).unwrap();
        assert_eq!(composed.values, direct.values);
        assert!(composed.alexander.unwrap().assoc_eq(&direct.alexander.unwrap()));
    }

    #[test]
    fn split_links() {
        let k0 = Spectrum::from_matrix(&k_p_data(3).unwrap(), &d3(), &[0, 1]).unwrap();
        let l2 = compose_split_link(&[k0.clone(), k0.clone()]);
        assert_eq!(l2.values[&(QuandleKey::of(&d3()[0]), Cycle(vec![1, 1]))], 5);
        assert_eq!(l2.max(), 5);
        assert_eq!(compose_split_link(&[k0.clone(), k0.clone(), k0]).max(), 8);
        let u = Spectrum::from_diagram(&builtin_fixture("unknot").unwrap(), &d3(), &[1]).unwrap();
        let l = compose_split_link(&[u.clone(), u.clone(), u]);
        assert_eq!(l.max(), 2);
        assert_eq!(l.diagonal().len(), 1);
    }
}
