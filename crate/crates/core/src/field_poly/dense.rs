use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{FieldError, PrimeModulus};

/// Polynomial in `Z_p[t]`, coefficients lowest degree first.
///
/// The zero polynomial has an empty coefficient vector; otherwise the last
/// coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DensePoly {
    modulus: PrimeModulus,
    coeffs: Vec<u64>,
}

impl DensePoly {
    pub fn new(modulus: PrimeModulus, coeffs: Vec<u64>) -> Self {
        let p = modulus.get();
        let mut poly = DensePoly {
            modulus,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        poly.trim();
        poly
    }

    pub fn from_i64s(modulus: PrimeModulus, coeffs: &[i64]) -> Self {
        Self::new(modulus, coeffs.iter().map(|&c| modulus.reduce_i64(c)).collect())
    }

    pub fn zero(modulus: PrimeModulus) -> Self {
        DensePoly { modulus, coeffs: Vec::new() }
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        Self::constant(modulus, 1)
    }

    pub fn constant(modulus: PrimeModulus, c: u64) -> Self {
        Self::new(modulus, vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(modulus: PrimeModulus, c: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(modulus, coeffs)
    }

    /// The variable `t`.
    pub fn t(modulus: PrimeModulus) -> Self {
        Self::monomial(modulus, 1, 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    #[inline]
    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Exponent of the largest power of `t` dividing `self` (0 for zero).
    pub fn t_valuation(&self) -> usize {
        self.coeffs.iter().position(|&c| c != 0).unwrap_or(0)
    }

    pub fn scale(&self, c: u64) -> Self {
        let m = self.modulus;
        Self::new(m, self.coeffs.iter().map(|&a| m.mul(a, c % m.get())).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        DensePoly { modulus: self.modulus, coeffs }
    }

    /// Divide out the largest power of `t`.
    pub fn strip_t(&self) -> Self {
        let v = self.t_valuation();
        DensePoly {
            modulus: self.modulus,
            coeffs: self.coeffs[v..].to_vec(),
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.modulus.inv(self.leading()))
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.modulus != other.modulus {
            Err(FieldError::ModulusMismatch(self.modulus.get(), other.modulus.get()))
        } else {
            Ok(())
        }
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        assert_eq!(self.modulus, divisor.modulus, "modulus mismatch");
        let m = self.modulus;
        let dd = divisor.degree()?;
        if self.coeffs.len() < divisor.coeffs.len() {
            return Some((Self::zero(m), self.clone()));
        }
        let inv_lead = m.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = m.mul(rem[i + dd], inv_lead);
            quot[i] = c;
            if c != 0 {
                for (j, &d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] = m.sub(rem[i + j], m.mul(c, d));
                }
            }
        }
        rem.truncate(dd);
        Some((Self::new(m, quot), Self::new(m, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).expect("division by zero polynomial").1
    }

    /// Whether `self` divides `other` (`0 | f` only for `f = 0`).
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// Exact quotient, `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    pub fn derivative(&self) -> Self {
        let m = self.modulus;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| m.mul(c, i as u64 % m.get()))
            .collect();
        Self::new(m, coeffs)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let m = self.modulus;
        self.coeffs.iter().rev().fold(0, |acc, &c| m.add(m.mul(acc, x), c))
    }

    /// `self(t^z)`.
    pub fn compose_power(&self, z: usize) -> Self {
        if z == 1 || self.is_zero() {
            return self.clone();
        }
        if z == 0 {
            let s = self.coeffs.iter().fold(0, |acc, &c| self.modulus.add(acc, c));
            return Self::constant(self.modulus, s);
        }
        let mut coeffs = vec![0; (self.coeffs.len() - 1) * z + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * z] = c;
        }
        Self::new(self.modulus, coeffs)
    }

    /// `self^e mod modulus_poly`.
    pub fn pow_mod(&self, mut e: u64, modulus_poly: &Self) -> Self {
        let mut base = self.rem(modulus_poly);
        let mut acc = Self::one(self.modulus).rem(modulus_poly);
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus_poly);
            }
            base = (&base * &base).rem(modulus_poly);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.modulus);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Checked addition (modulus mismatch is an error).
    pub fn try_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self + other)
    }

    /// Checked multiplication (modulus mismatch is an error).
    pub fn try_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self * other)
    }

    /// Canonical associate under multiplication by units `a t^k`:
    /// monic with nonzero constant term.
    pub fn canonical(&self) -> Self {
        self.strip_t().monic()
    }

    /// Associate equality in `Λ_p` (up to `a t^k`).
    pub fn assoc_eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Display with residues in the symmetric range, e.g. `1 - t + t^2`.
    pub fn to_centered_string(&self) -> String {
        let m = self.modulus;
        super::format_terms(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i as i64, m.centered(c).into())),
            true,
        )
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn poly_gcd(f: &DensePoly, g: &DensePoly) -> Result<DensePoly, FieldError> {
    f.check(g)?;
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// Extended Euclid: returns `(g, s, u)` with `s f + u g = g` monic.
pub fn poly_xgcd(f: &DensePoly, g: &DensePoly) -> (DensePoly, DensePoly, DensePoly) {
    let m = f.modulus;
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut s0, mut s1) = (DensePoly::one(m), DensePoly::zero(m));
    let (mut u0, mut u1) = (DensePoly::zero(m), DensePoly::one(m));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
        let s2 = &s0 - &(&q * &s1);
        let u2 = &u0 - &(&q * &u1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        u0 = std::mem::replace(&mut u1, u2);
    }
    if r0.is_zero() {
        return (r0, s0, u0);
    }
    let c = m.inv(r0.leading());
    (r0.scale(c), s0.scale(c), u0.scale(c))
}

impl Ord for DensePoly {
    /// Degree first, then coefficients from the top down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
            .then_with(|| self.modulus.cmp(&other.modulus))
    }
}

impl PartialOrd for DensePoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a DensePoly> for &'a DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: &DensePoly) -> DensePoly {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        let m = self.modulus;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| m.add(self.coeff(i), rhs.coeff(i))).collect();
        DensePoly::new(m, coeffs)
    }
}

impl<'a> Sub<&'a DensePoly> for &'a DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: &DensePoly) -> DensePoly {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        let m = self.modulus;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| m.sub(self.coeff(i), rhs.coeff(i))).collect();
        DensePoly::new(m, coeffs)
    }
}

impl<'a> Mul<&'a DensePoly> for &'a DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: &DensePoly) -> DensePoly {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        let m = self.modulus;
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero(m);
        }
        let p = m.get() as u128;
        let mut acc = vec![0u128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % p;
            }
        }
        DensePoly::new(m, acc.into_iter().map(|c| c as u64).collect())
    }
}

impl Neg for &DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        let m = self.modulus;
        DensePoly::new(m, self.coeffs.iter().map(|&c| m.neg(c)).collect())
    }
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i as i64, num_bigint::BigInt::from(c)));
        f.write_str(&super::format_terms(terms, true))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn poly(p: u64, c: &[i64]) -> DensePoly {
        DensePoly::from_i64s(m(p), c)
    }

    #[test]
    fn gcd_examples() {
        // (t+1)^2 and (t+1)^3 mod 3
        let a = poly(3, &[1, 2, 1]);
        let b = poly(3, &[1, 3, 3, 1]);
        assert_eq!(poly_gcd(&a, &b).unwrap(), a);
        assert!(poly_gcd(&poly(5, &[1, 1]), &poly(5, &[2, 1])).unwrap().is_one());
        assert_eq!(
            poly_gcd(&poly(11, &[1, 1, 1, 1]), &poly(11, &[1, 0, 1])).unwrap(),
            poly(11, &[1, 0, 1])
        );
        assert!(poly_gcd(&DensePoly::zero(m(7)), &DensePoly::zero(m(7))).unwrap().is_zero());
    }

    #[test]
    fn gcd_rejects_mixed_moduli() {
        let err = poly_gcd(&poly(3, &[1, 1]), &poly(5, &[1, 1])).unwrap_err();
        assert!(matches!(err, FieldError::ModulusMismatch(3, 5)));
    }

    #[test]
    fn division_identity() {
        let f = poly(7, &[3, 0, 5, 1, 6]);
        let g = poly(7, &[2, 1, 3]);
        let (q, r) = f.div_rem(&g).unwrap();
        assert_eq!(&(&q * &g) + &r, f);
        assert!(r.degree().unwrap_or(0) < 2);
        assert!(f.div_rem(&DensePoly::zero(m(7))).is_none());
    }

    #[test]
    fn xgcd_bezout() {
        let f = poly(13, &[1, 4, 0, 2]);
        let g = poly(13, &[5, 1, 1]);
        let (d, s, u) = poly_xgcd(&f, &g);
        assert_eq!(&(&s * &f) + &(&u * &g), d);
        assert_eq!(d, poly_gcd(&f, &g).unwrap());
    }

    #[test]
    fn compose_power_and_display() {
        let f = poly(5, &[1, 2]);
        assert_eq!(f.compose_power(3), poly(5, &[1, 0, 0, 2]));
        assert_eq!(f.compose_power(0), poly(5, &[3]));
        assert_eq!(poly(3, &[1, 2, 1]).to_string(), "1 + 2*t + t^2");
        assert_eq!(poly(3, &[1, 2, 1]).to_centered_string(), "1 - t + t^2");
    }
}
