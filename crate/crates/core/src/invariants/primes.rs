//! Prime frontier for the search.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::alex_module::{alexander_polynomial, module_order, Origin, SeifertData};
use crate::field_poly::{int_poly_gcd, odd_primes_up_to, resultant, IntLaurent};
use crate::ZPoly;

/// Search frontier settings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    /// Every odd prime up to this bound is searched.
    pub pmax: u64,
    /// Extra primes added to the frontier.
    pub extra_primes: Vec<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { pmax: 199, extra_primes: Vec::new() }
    }
}

/// Odd prime divisors of `n` (those the factorizer can reach), ascending.
pub fn odd_prime_divisors(n: &BigInt) -> Vec<u64> {
    if n.is_zero() {
        return Vec::new();
    }
    let (found, _rest) = num_prime::nt_funcs::factors(n.abs().to_biguint().unwrap(), None);
    found.keys().filter_map(|p| p.to_u64()).filter(|p| p % 2 == 1).collect()
}

fn derivative(f: &ZPoly) -> ZPoly {
    let c = f.coeffs();
    IntLaurent::new(0, c.iter().enumerate().skip(1).map(|(i, x)| x * BigInt::from(i)).collect())
}

/// The polynomial whose mod-`p` factorization the search depends on: `Δ`
/// for Seifert data, the module order for presentation data.
pub fn search_polynomial(sd: &SeifertData) -> ZPoly {
    match sd.origin {
        Origin::Seifert => alexander_polynomial(sd).map(|(d, _)| d).unwrap_or_else(|_| module_order(sd)),
        Origin::Presentation => module_order(sd),
    }
}

/// Odd primes `<= pmax`, the extra primes, and the odd prime divisors of
/// `|Δ(-1)|`, of the end coefficients of `Δ` and of the discriminant of the
/// square-free part of `Δ`.
pub fn candidate_primes(sd: &SeifertData, config: &SearchConfig) -> Vec<u64> {
    let mut set: BTreeSet<u64> = odd_primes_up_to(config.pmax).into_iter().collect();
    set.extend(config.extra_primes.iter().copied().filter(|&p| p % 2 == 1 && crate::field_poly::is_prime(p)));
    let delta = search_polynomial(sd).canonical();
    if delta.is_zero() {
        return set.into_iter().collect();
    }
    set.extend(odd_prime_divisors(&delta.eval_unit(&BigInt::from(-1))));
    set.extend(odd_prime_divisors(&delta.leading()));
    set.extend(odd_prime_divisors(&delta.coeff(0)));
    if delta.breadth() > 0 {
        let g = int_poly_gcd(&delta, &derivative(&delta));
        let radical = delta.exact_div(&g).map(|r| r.canonical()).unwrap_or_else(|| delta.clone());
        set.extend(odd_prime_divisors(&resultant(&radical, &derivative(&radical))));
    }
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alex_module::{builtin_matrix, k_p_data};

    #[test]
    fn frontier_contains_determinant_primes() {
        let small = SearchConfig { pmax: 3, extra_primes: vec![] };
        assert!(candidate_primes(&builtin_matrix("figure_eight").unwrap(), &small).contains(&5));
        assert!(candidate_primes(&builtin_matrix("trefoil").unwrap(), &small).contains(&3));
        for p in [3, 5, 7, 11, 211] {
            let c = candidate_primes(&k_p_data(p).unwrap(), &small);
            assert!(c.contains(&p), "{p}: {c:?}");
            assert!(c.windows(2).all(|w| w[0] < w[1]));
        }
        let c = candidate_primes(&builtin_matrix("trefoil").unwrap(), &SearchConfig::default());
        assert_eq!(c.len(), odd_primes_up_to(199).len());
    }

    #[test]
    fn divisors() {
        assert_eq!(odd_prime_divisors(&BigInt::from(-90)), vec![3, 5]);
        assert!(odd_prime_divisors(&BigInt::from(0)).is_empty());
        assert!(odd_prime_divisors(&BigInt::from(64)).is_empty());
    }
}
