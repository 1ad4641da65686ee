//! Genus and tunnel-number lower bounds from coloring dimensions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::Cycle;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("a link has at least one component")]
    NoComponents,
    #[error("partition size {size} is incompatible with {k} components and kind {kind}")]
    PartitionSize { size: usize, k: usize, kind: PartitionKind },
    #[error("cycle {0} has {1} labels but the partition has {2} blocks")]
    CycleLength(String, usize, usize),
    #[error("block {0} outside 1..={1}")]
    BadBlock(usize, usize),
    #[error("cycles {0} and {1} differ on block {2}, which is not among the changed blocks")]
    OutsideChanged(String, String, usize),
    #[error("unknown partition kind '{0}' (expected minimal, maximal or general)")]
    UnknownKind(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PartitionKind {
    Minimal,
    Maximal,
    General,
}

impl fmt::Display for PartitionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartitionKind::Minimal => "minimal",
            PartitionKind::Maximal => "maximal",
            PartitionKind::General => "general",
        })
    }
}

impl FromStr for PartitionKind {
    type Err = BoundError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "minimal" => Ok(PartitionKind::Minimal),
            "maximal" => Ok(PartitionKind::Maximal),
            "general" => Ok(PartitionKind::General),
            other => Err(BoundError::UnknownKind(other.into())),
        }
    }
}

fn half_up(x: i64) -> u64 {
    if x <= 0 {
        0
    } else {
        ((x + 1) / 2) as u64
    }
}

/// `g(L, P) >= ceil((aq - 2k + |P| + 1) / 2)`.
pub fn genus_bounds(aq: u64, k: usize, partition_size: usize, kind: PartitionKind) -> Result<u64, BoundError> {
    if k == 0 {
        return Err(BoundError::NoComponents);
    }
    let ok = match kind {
        PartitionKind::Minimal => partition_size == 1,
        PartitionKind::Maximal => partition_size == k,
        PartitionKind::General => (1..=k).contains(&partition_size),
    };
    if !ok {
        return Err(BoundError::PartitionSize { size: partition_size, k, kind });
    }
    Ok(half_up(aq as i64 - 2 * k as i64 + partition_size as i64 + 1))
}

/// Lower bound on the summed genera of the changed blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionedBound {
    pub bound: u64,
    /// The pair of cycles attaining it, if any pair was compared.
    pub pair: Option<(Cycle, Cycle)>,
}

/// `Σ_{i∈I} g(Σ_i) >= ceil((|a(z) - a(z')| - Σ_{i∈I} k_i + |I|) / 2)` over
/// every pair of cycles in `a_values`. Blocks are 1-based.
pub fn partitioned_genus_bounds(
    a_values: &BTreeMap<Cycle, usize>,
    block_sizes: &[usize],
    changed: &BTreeSet<usize>,
) -> Result<PartitionedBound, BoundError> {
    let h = block_sizes.len();
    if let Some(&b) = changed.iter().find(|&&b| b == 0 || b > h) {
        return Err(BoundError::BadBlock(b, h));
    }
    for z in a_values.keys() {
        if z.0.len() != h {
            return Err(BoundError::CycleLength(z.to_string(), z.0.len(), h));
        }
    }
    let width: i64 = changed.iter().map(|&b| block_sizes[b - 1] as i64).sum::<i64>() - changed.len() as i64;
    let mut best = PartitionedBound { bound: 0, pair: None };
    let entries: Vec<(&Cycle, &usize)> = a_values.iter().collect();
    for (i, (z1, a1)) in entries.iter().enumerate() {
        for (z2, a2) in &entries[i + 1..] {
            if let Some(b) = (0..h).find(|&b| z1.0[b] != z2.0[b] && !changed.contains(&(b + 1))) {
                return Err(BoundError::OutsideChanged(z1.to_string(), z2.to_string(), b + 1));
            }
            let bound = half_up((**a1 as i64 - **a2 as i64).abs() - width);
            if best.pair.is_none() || bound > best.bound {
                best = PartitionedBound { bound, pair: Some(((*z1).clone(), (*z2).clone())) };
            }
        }
    }
    Ok(best)
}

/// `t(L) >= A_Q(L, P_M)`.
pub fn tunnel_bound(aq_max_partition: u64) -> u64 {
    aq_max_partition
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_examples() {
        assert_eq!(genus_bounds(2, 1, 1, PartitionKind::Minimal), Ok(1));
        assert_eq!(genus_bounds(3, 1, 1, PartitionKind::Minimal), Ok(2));
        assert_eq!(genus_bounds(5, 2, 2, PartitionKind::Maximal), Ok(2));
        assert_eq!(genus_bounds(0, 3, 1, PartitionKind::Minimal), Ok(0));
        assert!(genus_bounds(1, 2, 1, PartitionKind::Maximal).is_err());
        assert!(genus_bounds(1, 2, 3, PartitionKind::General).is_err());
        assert!(genus_bounds(1, 0, 1, PartitionKind::General).is_err());
    }

    #[test]
    fn partitioned_examples() {
        let two = |a: u64, b: u64| Cycle(vec![a, b]);
        let vals: BTreeMap<Cycle, usize> = [(two(1, 1), 5), (two(0, 1), 1)].into();
        let r = partitioned_genus_bounds(&vals, &[1, 1], &[1].into()).unwrap();
        assert_eq!(r.bound, 2);
        let eq: BTreeMap<Cycle, usize> = [(two(1, 1), 3), (two(0, 1), 3)].into();
        assert_eq!(partitioned_genus_bounds(&eq, &[1, 1], &[1].into()).unwrap().bound, 0);
        let three: BTreeMap<Cycle, usize> = [(two(1, 1), 4), (two(0, 1), 1)].into();
        assert_eq!(partitioned_genus_bounds(&three, &[2, 1], &[1].into()).unwrap().bound, 1);
        assert!(matches!(
            partitioned_genus_bounds(&vals, &[1, 1], &[2].into()),
            Err(BoundError::OutsideChanged(..))
        ));
        assert!(partitioned_genus_bounds(&vals, &[1, 1, 1], &[1].into()).is_err());
    }

    #[test]
    fn tunnel() {
        assert_eq!((tunnel_bound(0), tunnel_bound(2)), (0, 2));
    }
}
