use std::fmt;

use serde::Serialize;

use super::FieldError;

/// An odd prime `p`, validated by trial division.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    /// Largest accepted prime (exclusive bound).
    pub const LIMIT: u64 = 1_000_000;

    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= Self::LIMIT {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if p == 2 {
            return Err(FieldError::EvenPrime);
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn reduce_i64(self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue (Fermat).
    pub fn inv(self, a: u64) -> u64 {
        assert!(a % self.0 != 0, "inverse of zero mod {}", self.0);
        self.pow(a, self.0 - 2)
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn centered(self, a: u64) -> i64 {
        if a > self.0 / 2 {
            a as i64 - self.0 as i64
        } else {
            a as i64
        }
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Odd primes in `3..=bound`, ascending.
pub fn odd_primes_up_to(bound: u64) -> Vec<u64> {
    (3..=bound).step_by(2).filter(|&n| is_prime(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_moduli() {
        assert!(matches!(PrimeModulus::new(2), Err(FieldError::EvenPrime)));
        assert!(matches!(PrimeModulus::new(9), Err(FieldError::NotPrime(9))));
        assert!(matches!(PrimeModulus::new(1), Err(FieldError::NotPrime(1))));
        assert!(PrimeModulus::new(1_000_003).is_err());
        assert_eq!(PrimeModulus::new(999_983).unwrap().get(), 999_983);
    }

    #[test]
    fn inverse_and_centering() {
        let p = PrimeModulus::new(11).unwrap();
        for a in 1..11 {
            assert_eq!(p.mul(a, p.inv(a)), 1);
        }
        assert_eq!(p.centered(10), -1);
        assert_eq!(p.centered(5), 5);
        assert_eq!(p.reduce_i64(-13), 9);
    }

    #[test]
    fn prime_list() {
        assert_eq!(odd_primes_up_to(20), vec![3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(odd_primes_up_to(199).len(), 45);
    }
}
