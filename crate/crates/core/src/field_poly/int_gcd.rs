
use super::IntLaurent;
use crate::linalg::bareiss_det;
use crate::scalar::IntScalar;

/// Coefficients of `f` with the lowest exponent shifted to zero.
fn body<T: IntScalar>(f: &IntLaurent<T>) -> Vec<T> {
    f.coeffs().to_vec()
}

/// Pseudo-remainder of `a` by `b` (both read as polynomials in `t` after
/// shifting to lowest exponent zero): `lc(b)^(deg a - deg b + 1) a mod b`.
pub fn pseudo_rem<T: IntScalar>(a: &IntLaurent<T>, b: &IntLaurent<T>) -> IntLaurent<T> {
    assert!(!b.is_zero(), "pseudo-remainder by zero");
    let mut r = body(a);
    let d = body(b);
    let dl = d.len();
    let lead = d[dl - 1].clone();
    if r.len() < dl {
        return IntLaurent::new(0, r);
    }
    let steps = r.len() - dl + 1;
    for step in 0..steps {
        let top_idx = r.len() - 1 - step;
        let top = r[top_idx].clone();
        for c in r.iter_mut() {
            *c = c.clone() * lead.clone();
        }
        if !top.is_zero() {
            let shift = top_idx + 1 - dl;
            for (j, dj) in d.iter().enumerate() {
                r[shift + j] = r[shift + j].clone() - top.clone() * dj.clone();
            }
        }
    }
    r.truncate(dl - 1);
    IntLaurent::new(0, r)
}

/// GCD in `Z[t]` (hence in `Λ` up to `±t^k`), canonical: lowest exponent 0,
/// positive leading coefficient. Content and primitive part are handled
/// separately; `gcd(0, 0) = 0`.
pub fn int_poly_gcd<T: IntScalar>(a: &IntLaurent<T>, b: &IntLaurent<T>) -> IntLaurent<T> {
    if a.is_zero() {
        return b.canonical();
    }
    if b.is_zero() {
        return a.canonical();
    }
    let content = a.content().gcd(&b.content());
    let mut x = a.primitive_part().canonical();
    let mut y = b.primitive_part().canonical();
    if x.breadth() < y.breadth() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = r.primitive_part().canonical();
    }
    x.primitive_part().canonical().scale(&content)
}

/// Resultant of two polynomials (lowest exponent shifted to zero) via the
/// Sylvester determinant.
pub fn resultant<T: IntScalar>(f: &IntLaurent<T>, g: &IntLaurent<T>) -> T {
    if f.is_zero() || g.is_zero() {
        return T::zero();
    }
    let fc = body(f);
    let gc = body(g);
    let m = fc.len() - 1;
    let n = gc.len() - 1;
    let size = m + n;
    if size == 0 {
        return T::one();
    }
    let mut rows = vec![vec![T::zero(); size]; size];
    for i in 0..n {
        for (j, c) in fc.iter().rev().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in gc.iter().rev().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    bareiss_det(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Z = IntLaurent<BigInt>;

    fn zp(low: i64, c: &[i64]) -> Z {
        Z::new(low, c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_of_remark_minors() {
        let k1 = zp(-1, &[1, -1, 1]);
        let k2 = zp(-1, &[-2, 5, -2]);
        let a = &(&k1 * &k1) * &k2;
        let b = &(&k2 * &k2) * &k1;
        let g = int_poly_gcd(&a, &b);
        assert!(g.assoc_eq(&(&k1 * &k2)));
    }

    #[test]
    fn gcd_keeps_content() {
        let a = zp(0, &[2, 2]);
        let b = zp(0, &[4, 0, -4]);
        assert_eq!(int_poly_gcd(&a, &b), zp(0, &[2, 2]));
        assert_eq!(int_poly_gcd(&zp(0, &[6]), &zp(0, &[4, 2])), zp(0, &[2]));
        assert!(int_poly_gcd(&Z::zero(), &Z::zero()).is_zero());
    }

    #[test]
    fn resultant_and_discriminant() {
        // Res(t - 2, t - 5) = ±3
        let r = resultant(&zp(0, &[-2, 1]), &zp(0, &[-5, 1]));
        assert_eq!(r.magnitude(), &num_bigint::BigUint::from(3u32));
        // t^2 - 3t + 1 and its derivative 2t - 3: |Res| = 5
        let f = zp(0, &[1, -3, 1]);
        let df = zp(0, &[-3, 2]);
        assert_eq!(resultant(&f, &df).magnitude(), &num_bigint::BigUint::from(5u32));
        assert_eq!(resultant(&zp(0, &[3]), &zp(0, &[1, 1])), BigInt::from(3));
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = zp(0, &[1, 2, 3, 4]);
        let b = zp(0, &[1, 0, 2]);
        let r = pseudo_rem(&a, &b);
        // lc(b)^2 * a - r is divisible by b
        let scaled = a.scale(&BigInt::from(4));
        assert!((&scaled - &r).exact_div(&b).is_some());
        assert!(r.breadth() < 2 || r.is_zero());
    }
}
