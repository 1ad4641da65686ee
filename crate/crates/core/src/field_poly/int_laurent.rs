use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::{DensePoly, LaurentPoly, PrimeModulus};
use crate::scalar::{convert, IntScalar};

/// Laurent polynomial with integer coefficients, an element of `Z[t, t^-1]`.
///
/// Stored as `t^low * (c_0 + c_1 t + ...)`; when nonzero both `c_0` and the
/// last coefficient are nonzero. The zero polynomial has `low = 0` and no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntLaurent<T: IntScalar> {
    low: i64,
    coeffs: Vec<T>,
}

impl<T: IntScalar> IntLaurent<T> {
    pub fn new(low: i64, coeffs: Vec<T>) -> Self {
        let mut f = IntLaurent { low, coeffs };
        f.trim();
        f
    }

    pub fn zero() -> Self {
        IntLaurent { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(0, vec![c])
    }

    /// `c t^k`.
    pub fn monomial(c: T, k: i64) -> Self {
        Self::new(k, vec![c])
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, T)>) -> Self {
        let terms: Vec<(i64, T)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|(e, _)| *e).min().unwrap();
        let hi = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![T::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - lo) as usize];
            *slot = slot.clone() + c;
        }
        Self::new(lo, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
        } else if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent (equal to `low` for monomials, 0 for zero).
    pub fn high(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.low + self.coeffs.len() as i64 - 1
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `t^e`.
    pub fn coeff(&self, e: i64) -> T {
        if e < self.low {
            return T::zero();
        }
        self.coeffs.get((e - self.low) as usize).cloned().unwrap_or_else(T::zero)
    }

    /// Nonzero `(exponent, coefficient)` pairs, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Difference between highest and lowest exponent; 0 for zero.
    pub fn breadth(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    /// `±t^k`, the units of `Λ`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        IntLaurent { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.low, self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `self(t^z)` for `z >= 0`.
    pub fn subst_power(&self, z: u64) -> Self {
        if z == 1 {
            return self.clone();
        }
        Self::from_terms(self.terms().map(|(e, c)| (e * z as i64, c.clone())))
    }

    /// `self(t^-1)`.
    pub fn reflect(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c.clone())))
    }

    /// Value at an integer point; negative exponents require `x = ±1`.
    pub fn eval_unit(&self, x: &T) -> T {
        assert!(x.abs().is_one(), "Laurent evaluation only at units");
        let mut acc = T::zero();
        for (e, c) in self.terms() {
            let neg = x.is_negative() && e.rem_euclid(2) == 1;
            acc = if neg { acc - c.clone() } else { acc + c.clone() };
        }
        acc
    }

    /// GCD of the coefficients (non-negative; 0 for zero).
    pub fn content(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient (zero stays zero).
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        Self::new(self.low, self.coeffs.iter().map(|a| a.clone() / c.clone()).collect())
    }

    /// Canonical associate under `±t^k`: lowest exponent 0, positive leading
    /// coefficient.
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let sign = if self.leading().is_negative() { -T::one() } else { T::one() };
        IntLaurent { low: 0, coeffs: self.coeffs.iter().map(|c| c.clone() * sign.clone()).collect() }
    }

    /// Equality up to units `±t^k`.
    pub fn assoc_eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Image under `π_p`, keeping the exponent offset.
    pub fn reduce(&self, p: PrimeModulus) -> LaurentPoly {
        let body = DensePoly::new(p, self.coeffs.iter().map(|c| c.rem_u64(p.get())).collect());
        LaurentPoly::new(self.low, body)
    }

    pub fn try_convert<S: IntScalar>(&self) -> Option<IntLaurent<S>> {
        let coeffs = self.coeffs.iter().map(convert::<T, S>).collect::<Option<Vec<S>>>()?;
        Some(IntLaurent { low: self.low, coeffs })
    }

    pub fn to_big(&self) -> IntLaurent<BigInt> {
        IntLaurent { low: self.low, coeffs: self.coeffs.iter().map(|c| c.to_bigint()).collect() }
    }

    /// Euclidean-style division by a divisor that is known to divide exactly
    /// in `Λ`; `None` when it does not.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dlead = divisor.leading();
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); rem.len() - dlen + 1];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dlen - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&dlead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - q.clone() * d.clone();
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.low - divisor.low, quot))
    }

    /// Compact display without spaces (matrix file cells).
    pub fn to_compact_string(&self) -> String {
        self.to_string().replace(' ', "")
    }
}

impl<T: IntScalar> Add for &IntLaurent<T> {
    type Output = IntLaurent<T>;
    fn add(self, rhs: &IntLaurent<T>) -> IntLaurent<T> {
        IntLaurent::from_terms(
            self.terms()
                .map(|(e, c)| (e, c.clone()))
                .chain(rhs.terms().map(|(e, c)| (e, c.clone()))),
        )
    }
}

impl<T: IntScalar> Sub for &IntLaurent<T> {
    type Output = IntLaurent<T>;
    fn sub(self, rhs: &IntLaurent<T>) -> IntLaurent<T> {
        IntLaurent::from_terms(
            self.terms()
                .map(|(e, c)| (e, c.clone()))
                .chain(rhs.terms().map(|(e, c)| (e, -c.clone()))),
        )
    }
}

impl<T: IntScalar> Mul for &IntLaurent<T> {
    type Output = IntLaurent<T>;
    fn mul(self, rhs: &IntLaurent<T>) -> IntLaurent<T> {
        if self.is_zero() || rhs.is_zero() {
            return IntLaurent::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        IntLaurent::new(self.low + rhs.low, coeffs)
    }
}

impl<T: IntScalar> Neg for &IntLaurent<T> {
    type Output = IntLaurent<T>;
    fn neg(self) -> IntLaurent<T> {
        IntLaurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<T: IntScalar> fmt::Display for IntLaurent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms().map(|(e, c)| (e, c.to_bigint()));
        f.write_str(&super::format_terms(terms, true))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z = IntLaurent<i64>;

    fn lp(low: i64, c: &[i64]) -> Z {
        Z::new(low, c.to_vec())
    }

    #[test]
    fn trimming_and_breadth() {
        let f = lp(-2, &[0, 1, -1, 1, 0]);
        assert_eq!(f.low(), -1);
        assert_eq!(f.high(), 1);
        assert_eq!(f.breadth(), 2);
        assert_eq!(lp(3, &[0, 0]).breadth(), 0);
        assert!(lp(3, &[0, 0]).is_zero());
        assert_eq!(lp(0, &[7]).breadth(), 0);
    }

    #[test]
    fn arithmetic() {
        let k1 = lp(-1, &[1, -1, 1]);
        let k2 = lp(-1, &[-2, 5, -2]);
        let prod = &k1 * &k2;
        assert_eq!(prod, lp(-2, &[-2, 7, -9, 7, -2]));
        assert_eq!(prod.exact_div(&k1), Some(k2.clone()));
        assert_eq!(prod.exact_div(&lp(0, &[2])), None);
        assert!((&prod - &prod).is_zero());
        assert_eq!(k1.eval_unit(&-1), -3);
        assert_eq!(k2.reflect(), k2);
    }

    #[test]
    fn canonical_associates() {
        let f = lp(-3, &[-1, 3, -1]);
        assert_eq!(f.canonical(), lp(0, &[1, -3, 1]));
        assert!(f.assoc_eq(&lp(5, &[1, -3, 1])));
        assert_eq!(lp(0, &[4, 6]).content(), 2);
        assert_eq!(lp(0, &[-4, -6]).primitive_part(), lp(0, &[2, 3]));
    }

    #[test]
    fn display() {
        assert_eq!(lp(-1, &[3, 1, 0, 2]).to_string(), "3*t^-1 + 1 + 2*t^2");
        assert_eq!(lp(0, &[1, -1, 1]).to_string(), "1 - t + t^2");
        assert_eq!(lp(0, &[1, -1, 1]).to_compact_string(), "1-t+t^2");
        assert_eq!(Z::zero().to_string(), "0");
    }
}
