//! Factorization over `Z_p`: square-free decomposition, distinct-degree
//! splitting, then Cantor–Zassenhaus equal-degree splitting.
//!
//! Equal-degree splitting draws its random polynomials from a ChaCha8 stream
//! seeded with [`FACTOR_SEED`], so the output is reproducible run to run.
//! Factors are returned sorted by degree, then coefficients top-down.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{poly_gcd, DensePoly, FieldError};

/// Seed for the equal-degree splitting stream.
pub const FACTOR_SEED: u64 = 0x5eed_a1e7_0000_0001;

/// `f = unit * prod(factor^mult)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: u64,
    pub factors: Vec<(DensePoly, usize)>,
}

impl Factorization {
    /// Multiply back out.
    pub fn expand(&self, like: &DensePoly) -> DensePoly {
        let m = like.modulus();
        self.factors
            .iter()
            .fold(DensePoly::constant(m, self.unit), |acc, (g, e)| &acc * &g.pow(*e as u32))
    }

    /// Distinct irreducible factors.
    pub fn irreducibles(&self) -> impl Iterator<Item = &DensePoly> {
        self.factors.iter().map(|(g, _)| g)
    }
}

/// Factor a nonzero polynomial into monic irreducibles.
pub fn poly_factor(f: &DensePoly) -> Result<Factorization, FieldError> {
    if f.is_zero() {
        return Err(FieldError::ZeroPolynomial);
    }
    let unit = f.leading();
    let mut rng = ChaCha8Rng::seed_from_u64(FACTOR_SEED);
    let mut out: Vec<(DensePoly, usize)> = Vec::new();
    for (sqf, mult) in squarefree_decomposition(&f.monic()) {
        for (g, d) in distinct_degree(&sqf) {
            for h in equal_degree(&g, d, &mut rng) {
                out.push((h, mult));
            }
        }
    }
    out.sort();
    // merge equal factors that came out of different square-free layers
    let mut merged: Vec<(DensePoly, usize)> = Vec::with_capacity(out.len());
    for (g, e) in out {
        match merged.last_mut() {
            Some((h, k)) if *h == g => *k += e,
            _ => merged.push((g, e)),
        }
    }
    Ok(Factorization { unit, factors: merged })
}

/// Square-free decomposition of a monic polynomial: pairs `(g_i, i)` with
/// `f = prod g_i^i` and each `g_i` square-free (in characteristic `p`).
pub fn squarefree_decomposition(f: &DensePoly) -> Vec<(DensePoly, usize)> {
    let m = f.modulus();
    let p = m.get() as usize;
    let mut result = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return result;
    }
    let gcd = |a: &DensePoly, b: &DensePoly| poly_gcd(a, b).expect("same modulus");
    let mut c = gcd(f, &f.derivative());
    let mut w = f.exact_div(&c).expect("gcd divides");
    let mut i = 1;
    while !w.is_one() {
        let y = gcd(&w, &c);
        let z = w.exact_div(&y).expect("gcd divides");
        if z.degree().unwrap_or(0) > 0 {
            result.push((z, i));
        }
        i += 1;
        w = y;
        c = c.exact_div(&w).expect("gcd divides");
    }
    if c.degree().unwrap_or(0) > 0 {
        // c is a p-th power: its derivative vanishes
        let root = DensePoly::new(m, c.coeffs().iter().step_by(p).copied().collect());
        for (g, e) in squarefree_decomposition(&root) {
            result.push((g, e * p));
        }
    }
    result
}

/// Split a monic square-free polynomial into products of irreducibles of a
/// common degree: pairs `(product, degree)`.
pub fn distinct_degree(f: &DensePoly) -> Vec<(DensePoly, usize)> {
    let m = f.modulus();
    let p = m.get();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = DensePoly::t(m);
    let mut frob = x.clone();
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        frob = frob.pow_mod(p, &rest);
        let g = poly_gcd(&rest, &(&frob - &x)).expect("same modulus");
        if !g.is_one() {
            out.push((g.clone(), d));
            rest = rest.exact_div(&g).expect("gcd divides");
            frob = frob.rem(&rest);
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap();
        out.push((rest, deg));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of distinct irreducibles of
/// degree `d` (odd characteristic).
pub fn equal_degree(f: &DensePoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<DensePoly> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return vec![f.monic()];
    }
    let m = f.modulus();
    let p = m.get();
    loop {
        let a = DensePoly::new(m, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
        let mut norm = a.rem(f);
        let mut power = norm.clone();
        for _ in 1..d {
            power = power.pow_mod(p, f);
            norm = (&norm * &power).rem(f);
        }
        let b = norm.pow_mod((p - 1) / 2, f);
        let g = poly_gcd(f, &(&b - &DensePoly::one(m))).expect("same modulus");
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let h = f.exact_div(&g).expect("gcd divides");
            let mut parts = equal_degree(&g, d, rng);
            parts.extend(equal_degree(&h, d, rng));
            return parts;
        }
    }
}

/// Rabin test: `f` of degree `n` is irreducible iff `f | t^(p^n) - t` and
/// `gcd(t^(p^(n/r)) - t, f) = 1` for every prime `r | n`.
pub fn is_irreducible(f: &DensePoly) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let m = f.modulus();
    let p = m.get();
    let x = DensePoly::t(m);
    let frob_power = |k: usize| {
        let mut y = x.clone();
        for _ in 0..k {
            y = y.pow_mod(p, f);
        }
        y
    };
    if !(&frob_power(n) - &x).rem(f).is_zero() {
        return false;
    }
    prime_divisors(n as u64).into_iter().all(|r| {
        let y = frob_power(n / r as usize);
        poly_gcd(f, &(&y - &x)).expect("same modulus").is_one()
    })
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
