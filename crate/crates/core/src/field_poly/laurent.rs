use std::fmt;

use super::{DensePoly, PrimeModulus};

/// Element of `Λ_p = Z_p[t, t^-1]`, stored as `t^low * body` with `body(0) != 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    low: i64,
    body: DensePoly,
}

impl LaurentPoly {
    pub fn new(low: i64, body: DensePoly) -> Self {
        if body.is_zero() {
            return LaurentPoly { low: 0, body };
        }
        let v = body.t_valuation();
        LaurentPoly { low: low + v as i64, body: body.strip_t() }
    }

    pub fn from_dense(f: DensePoly) -> Self {
        Self::new(0, f)
    }

    pub fn zero(modulus: PrimeModulus) -> Self {
        Self::from_dense(DensePoly::zero(modulus))
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.body.modulus()
    }

    pub fn lowest_exponent(&self) -> i64 {
        self.low
    }

    pub fn body(&self) -> &DensePoly {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn breadth(&self) -> usize {
        self.body.degree().unwrap_or(0)
    }

    /// `self(t^z)`.
    pub fn subst_power(&self, z: u64) -> Self {
        Self::new(self.low * z as i64, self.body.compose_power(z as usize))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.low + other.low, &self.body * &other.body)
    }

    /// Canonical associate in `Z_p[t]`.
    pub fn normalize(&self) -> DensePoly {
        laurent_normalize(self)
    }
}

/// The unique monic polynomial with nonzero constant term associate to `f`
/// (zero for zero).
pub fn laurent_normalize(f: &LaurentPoly) -> DensePoly {
    f.body.monic()
}

/// Breadth of a Laurent polynomial over `Z_p`.
pub fn breadth(f: &LaurentPoly) -> usize {
    f.breadth()
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .body
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.low + i as i64, num_bigint::BigInt::from(c)));
        f.write_str(&super::format_terms(terms, true))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_poly::IntLaurent;

    fn m(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert!(laurent_normalize(&LaurentPoly::zero(m(3))).is_zero());
        assert_eq!(breadth(&LaurentPoly::zero(m(3))), 0);
        // -2t + 5 - 2t^-1 mod 3 -> t^2 + 2t + 1
        let k2 = IntLaurent::<i64>::new(-1, vec![-2, 5, -2]).reduce(m(3));
        assert_eq!(laurent_normalize(&k2), DensePoly::from_i64s(m(3), &[1, 2, 1]));
        let mono = IntLaurent::<i64>::monomial(2, 3).reduce(m(5));
        assert!(laurent_normalize(&mono).is_one());
    }

    #[test]
    fn breadth_examples() {
        let k1 = IntLaurent::<i64>::new(-1, vec![1, -1, 1]).reduce(m(5));
        assert_eq!(breadth(&k1), 2);
        assert_eq!(breadth(&IntLaurent::<i64>::constant(7).reduce(m(11))), 0);
        // constant that vanishes mod p
        assert!(IntLaurent::<i64>::constant(7).reduce(m(7)).is_zero());
    }

    #[test]
    fn substitution_tracks_offset() {
        let f = IntLaurent::<i64>::new(-1, vec![1, 0, 2]).reduce(m(7));
        let g = f.subst_power(3);
        assert_eq!(g.lowest_exponent(), -3);
        assert_eq!(g.breadth(), 6);
        assert_eq!(g.to_string(), "t^-3 + 2*t^3");
    }
}
