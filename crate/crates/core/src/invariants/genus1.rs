//! Closed forms for genus-one knots from special-diagram data `M`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::primes::odd_prime_divisors;
use crate::alex_module::{integer_det, m_from_seifert, AlexError, Origin, SeifertData};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Genus1Report {
    #[serde(rename = "W", serialize_with = "crate::serialize_display")]
    pub w: BigInt,
    /// `|4W - 1| = |Δ(-1)|`.
    #[serde(serialize_with = "crate::serialize_display")]
    pub det_k: BigUint,
    /// `A_Q(K)`, in `{0, 1, 2}`.
    pub aq_exact: u8,
    /// Odd primes dividing `|4W - 1|`: the dihedral quandles with
    /// `a_X(K, 1) >= 1`.
    pub realizing_primes: Vec<u64>,
    /// Primes where `N(1) = 0` over `F(p, 1 + t)`, i.e. `a_X(K, 1) = 2`.
    pub sharp_primes: Vec<u64>,
}

impl fmt::Display for Genus1Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        writeln!(f, "W: {}", self.w)?;
        writeln!(f, "det_K: {}", self.det_k)?;
        writeln!(f, "aq_exact: {}", self.aq_exact)?;
        writeln!(f, "realizing_primes: {{{}}}", list(&self.realizing_primes))?;
        writeln!(f, "sharp_primes: {{{}}}", list(&self.sharp_primes))
    }
}

fn residue(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// `M_11 ≡ M_22 ≡ 0`, `M_12 ≡ (p+1)/2`, `M_21 ≡ (p-1)/2` modulo `p`.
pub fn sharp_congruences(m: &[Vec<BigInt>], p: u64) -> bool {
    residue(&m[0][0], p) == 0
        && residue(&m[1][1], p) == 0
        && residue(&m[0][1], p) == (p + 1) / 2
        && residue(&m[1][0], p) == (p - 1) / 2
}

/// Genus-one report from a 2x2 integer matrix `M`.
pub fn genus1_report(m: &[Vec<BigInt>]) -> Result<Genus1Report, AlexError> {
    if m.len() != 2 || m.iter().any(|r| r.len() != 2) {
        return Err(AlexError::NotGenusOne);
    }
    let w = integer_det(m);
    let four_w_minus_one: BigInt = BigInt::from(4) * &w - 1;
    let det_k = four_w_minus_one.magnitude().clone();
    let realizing_primes = if w.is_zero() { Vec::new() } else { odd_prime_divisors(&four_w_minus_one) };
    // the congruences force p | 2 M_21 + 1, which is odd hence nonzero
    let sharp_primes: Vec<u64> = odd_prime_divisors(&(BigInt::from(2) * &m[1][0] + 1))
        .into_iter()
        .filter(|&p| sharp_congruences(m, p))
        .collect();
    let aq_exact = if w.is_zero() {
        0
    } else if sharp_primes.is_empty() {
        1
    } else {
        2
    };
    Ok(Genus1Report { w, det_k, aq_exact, realizing_primes, sharp_primes })
}

pub fn genus1_report_i64(m: &[Vec<i64>]) -> Result<Genus1Report, AlexError> {
    genus1_report(&m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()).collect::<Vec<_>>())
}

/// Genus-one report from knot Seifert data.
pub fn genus1_report_for(sd: &SeifertData) -> Result<Genus1Report, AlexError> {
    if sd.k != 1 || !is_knot_genus_one(sd) {
        return Err(AlexError::NotGenusOne);
    }
    genus1_report(&m_from_seifert(sd)?)
}

/// `S - S^T = ±J` on a 2x2 Seifert matrix.
pub(crate) fn is_knot_genus_one(sd: &SeifertData) -> bool {
    match sd.integer_matrix() {
        Some(s) if s.len() == 2 => {
            let skew = &s[0][1] - &s[1][0];
            skew == BigInt::from(1) || skew == BigInt::from(-1)
        }
        _ => false,
    }
}

/// Whether `det S = 0` on genus-one Seifert data.
pub fn minimal_seifert_rank_check(sd: &SeifertData) -> Result<bool, AlexError> {
    if sd.origin != Origin::Seifert || sd.order() != 2 || sd.k != 1 {
        return Err(AlexError::NotGenusOne);
    }
    Ok(integer_det(&sd.integer_matrix().unwrap()).is_zero())
}

/// Split knot Seifert data into consecutive 2x2 genus-one diagonal blocks,
/// if it has that shape.
pub(crate) fn genus_one_blocks(sd: &SeifertData) -> Option<Vec<SeifertData>> {
    let s = sd.integer_matrix()?;
    let n = s.len();
    if sd.k != 1 || n == 0 || n % 2 != 0 {
        return None;
    }
    let off_block = (0..n).any(|i| (0..n).any(|j| i / 2 != j / 2 && !s[i][j].is_zero()));
    if off_block {
        return None;
    }
    (0..n / 2)
        .map(|b| {
            let block: Vec<Vec<BigInt>> = (0..2).map(|i| s[2 * b + i][2 * b..2 * b + 2].to_vec()).collect();
            let part = SeifertData::seifert(format!("{}[{b}]", sd.name), block, 1).ok()?;
            is_knot_genus_one(&part).then_some(part)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alex_module::{builtin_matrix, k_p_data, k_prime_p_data, seifert_from_m};

    #[test]
    fn examples() {
        let r = genus1_report_i64(&[vec![0, -1], vec![-2, 3]]).unwrap();
        assert_eq!((r.w.clone(), r.det_k.clone(), r.aq_exact), (BigInt::from(-2), BigUint::from(9u8), 2));
        assert_eq!(r.realizing_primes, vec![3]);
        assert_eq!(r.sharp_primes, vec![3]);
        let r = genus1_report_i64(&[vec![0, -1], vec![-2, 4]]).unwrap();
        assert_eq!((r.w.clone(), r.aq_exact), (BigInt::from(-2), 1));
        let r = genus1_report_i64(&[vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!((r.aq_exact, r.det_k.clone()), (0, BigUint::from(1u8)));
        assert!(genus1_report_i64(&[vec![1]]).is_err());
    }

    #[test]
    fn from_seifert_data() {
        for p in [3u64, 5, 7, 11] {
            let r = genus1_report_for(&k_p_data(p).unwrap()).unwrap();
            assert_eq!(r.aq_exact, 2);
            assert_eq!(r.det_k, BigUint::from(p * p));
            assert_eq!(genus1_report_for(&k_prime_p_data(p).unwrap()).unwrap().aq_exact, 1);
        }
        assert_eq!(genus1_report_for(&builtin_matrix("trefoil").unwrap()).unwrap().aq_exact, 1);
        assert_eq!(genus1_report_for(&builtin_matrix("figure_eight").unwrap()).unwrap().aq_exact, 1);
        assert_eq!(genus1_report_for(&builtin_matrix("trivial_alexander").unwrap()).unwrap().aq_exact, 0);
    }

    #[test]
    fn rank_check() {
        assert!(!minimal_seifert_rank_check(&k_p_data(3).unwrap()).unwrap());
        let j = seifert_from_m("m0", &[vec![0, 0], vec![0, 0]], 1).unwrap();
        assert!(!minimal_seifert_rank_check(&j).unwrap());
        assert!(minimal_seifert_rank_check(&builtin_matrix("trivial_alexander").unwrap()).unwrap());
        assert!(minimal_seifert_rank_check(&builtin_matrix("torus_2_7").unwrap()).is_err());
    }

    #[test]
    fn blocks() {
        let a = k_prime_p_data(3).unwrap();
        let b = builtin_matrix("trivial_alexander").unwrap();
        let parts = genus_one_blocks(&a.block_sum(&b)).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(genus_one_blocks(&builtin_matrix("torus_2_7").unwrap()).is_none());
    }
}
