use std::fmt;

use super::{is_irreducible, laurent_normalize, poly_xgcd, DensePoly, FieldError, LaurentPoly, PrimeModulus};
use crate::linalg::FieldOps;

/// Element of `F(p, h(t))`: coefficients of a representative of degree `< n`,
/// lowest first, always of length `n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FieldElem(Vec<u64>);

impl FieldElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }
}

/// The finite field `F(p, h(t)) = Λ_p / (h(t))` with `h` canonical
/// (monic, irreducible, nonzero constant term).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionField {
    modulus: PrimeModulus,
    h: DensePoly,
    degree: usize,
}

impl ExtensionField {
    /// Normalize `h` to its canonical associate and check irreducibility.
    pub fn new(h: &LaurentPoly) -> Result<Self, FieldError> {
        if h.breadth() == 0 {
            return Err(FieldError::ZeroBreadth);
        }
        let canonical = laurent_normalize(h);
        if !is_irreducible(&canonical) {
            return Err(FieldError::Reducible(canonical.to_string()));
        }
        let degree = canonical.degree().expect("positive breadth");
        Ok(ExtensionField { modulus: h.modulus(), h: canonical, degree })
    }

    pub fn from_dense(h: &DensePoly) -> Result<Self, FieldError> {
        Self::new(&LaurentPoly::from_dense(h.clone()))
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn p(&self) -> u64 {
        self.modulus.get()
    }

    /// Canonical `h(t)`.
    pub fn h(&self) -> &DensePoly {
        &self.h
    }

    /// Extension degree `n = breadth(h)`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Field order `q = p^n`, `None` if it overflows `u128`.
    pub fn order(&self) -> Option<u128> {
        (self.p() as u128).checked_pow(self.degree as u32)
    }

    /// Order as a `usize` when it fits (for enumeration).
    pub fn order_usize(&self) -> Option<usize> {
        self.order().and_then(|q| usize::try_from(q).ok())
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(vec![0; self.degree])
    }

    pub fn one(&self) -> FieldElem {
        self.from_u64(1)
    }

    pub fn from_u64(&self, c: u64) -> FieldElem {
        let mut v = vec![0; self.degree];
        v[0] = c % self.p();
        FieldElem(v)
    }

    pub fn from_i64(&self, c: i64) -> FieldElem {
        self.from_u64(self.modulus.reduce_i64(c))
    }

    /// Reduce a polynomial modulo `h`.
    pub fn from_poly(&self, f: &DensePoly) -> FieldElem {
        assert_eq!(f.modulus(), self.modulus, "modulus mismatch");
        let r = f.rem(&self.h);
        let mut v = r.coeffs().to_vec();
        v.resize(self.degree, 0);
        FieldElem(v)
    }

    /// Image of a Laurent polynomial (negative powers via `t̄^-1`).
    pub fn from_laurent(&self, f: &LaurentPoly) -> FieldElem {
        let body = self.from_poly(f.body());
        self.mul(&body, &self.tbar_pow(f.lowest_exponent()))
    }

    pub fn to_poly(&self, a: &FieldElem) -> DensePoly {
        DensePoly::new(self.modulus, a.0.clone())
    }

    /// Class of `t`.
    pub fn tbar(&self) -> FieldElem {
        self.from_poly(&DensePoly::t(self.modulus))
    }

    /// `t̄^m` for any integer `m`.
    pub fn tbar_pow(&self, m: i64) -> FieldElem {
        let base = if m >= 0 { self.tbar() } else { self.inv(&self.tbar()) };
        self.pow(&base, m.unsigned_abs() as u128)
    }

    pub fn pow(&self, a: &FieldElem, mut e: u128) -> FieldElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let m = self.modulus;
        FieldElem(a.0.iter().zip(&b.0).map(|(&x, &y)| m.add(x, y)).collect())
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let m = self.modulus;
        FieldElem(a.0.iter().zip(&b.0).map(|(&x, &y)| m.sub(x, y)).collect())
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        let m = self.modulus;
        FieldElem(a.0.iter().map(|&x| m.neg(x)).collect())
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let m = self.modulus;
        if self.degree == 1 {
            return FieldElem(vec![m.mul(a.0[0], b.0[0])]);
        }
        self.from_poly(&(&self.to_poly(a) * &self.to_poly(b)))
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: &FieldElem) -> FieldElem {
        assert!(!self.is_zero(a), "inverse of zero in F({}, {})", self.p(), self.h);
        if self.degree == 1 {
            return FieldElem(vec![self.modulus.inv(a.0[0])]);
        }
        let (g, s, _) = poly_xgcd(&self.to_poly(a), &self.h);
        debug_assert!(g.is_one());
        self.from_poly(&s)
    }

    pub fn is_zero(&self, a: &FieldElem) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    /// Index in `0..q` (base-`p` digits of the coefficients).
    pub fn index_of(&self, a: &FieldElem) -> usize {
        let p = self.p() as usize;
        a.0.iter().rev().fold(0, |acc, &c| acc * p + c as usize)
    }

    /// Inverse of [`index_of`](Self::index_of).
    pub fn element(&self, mut idx: usize) -> FieldElem {
        let p = self.p() as usize;
        let mut v = Vec::with_capacity(self.degree);
        for _ in 0..self.degree {
            v.push((idx % p) as u64);
            idx /= p;
        }
        FieldElem(v)
    }

    /// All elements in index order; `None` if `q` does not fit in memory terms.
    pub fn elements(&self) -> Option<Vec<FieldElem>> {
        let q = self.order_usize()?;
        Some((0..q).map(|i| self.element(i)).collect())
    }
}

/// Build `F(p, h(t))` from a prime and a Laurent polynomial over `Z_p`.
pub fn build_extension_field(p: PrimeModulus, h: &LaurentPoly) -> Result<ExtensionField, FieldError> {
    if h.modulus() != p {
        return Err(FieldError::ModulusMismatch(p.get(), h.modulus().get()));
    }
    ExtensionField::new(h)
}

impl FieldOps for ExtensionField {
    type Elem = FieldElem;

    fn zero(&self) -> FieldElem {
        ExtensionField::zero(self)
    }
    fn one(&self) -> FieldElem {
        ExtensionField::one(self)
    }
    fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        ExtensionField::add(self, a, b)
    }
    fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        ExtensionField::sub(self, a, b)
    }
    fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        ExtensionField::mul(self, a, b)
    }
    fn inv(&self, a: &FieldElem) -> FieldElem {
        ExtensionField::inv(self, a)
    }
    fn is_zero(&self, a: &FieldElem) -> bool {
        ExtensionField::is_zero(self, a)
    }
}

impl fmt::Display for ExtensionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({}, {})", self.p(), self.h)
    }
}
