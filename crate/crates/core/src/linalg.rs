//! Field-generic Gaussian elimination and the fraction-free integer
//! determinant.


use crate::scalar::IntScalar;

/// Arithmetic context of a field whose elements do not carry their own
/// parameters (the context holds `p`, `h`, ...).
pub trait FieldOps {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }
}

/// Reduced row echelon form of a dense matrix.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    pub rows: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl<E: Clone> Echelon<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.pivots.len()
    }
}

/// Row-reduce `rows` (each of length `ncols`). Pivots are taken column by
/// column at the first row with a nonzero entry, so the result is
/// deterministic.
pub fn row_reduce<F: FieldOps>(field: &F, mut rows: Vec<Vec<F::Elem>>, ncols: usize) -> Echelon<F::Elem> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv(&rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(x, &field.mul(&factor, y));
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots, ncols }
}

/// Kernel basis of the matrix `rows` (vectors of length `ncols`), one basis
/// vector per free column in ascending order.
pub fn kernel_basis<F: FieldOps>(field: &F, rows: Vec<Vec<F::Elem>>, ncols: usize) -> Vec<Vec<F::Elem>> {
    let ech = row_reduce(field, rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !ech.pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); ncols];
            v[fc] = field.one();
            for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
                v[pc] = field.neg(&row[fc]);
            }
            v
        })
        .collect()
}

/// Dimension of the kernel of `rows`.
pub fn nullity<F: FieldOps>(field: &F, rows: Vec<Vec<F::Elem>>, ncols: usize) -> usize {
    row_reduce(field, rows, ncols).nullity()
}

/// Determinant of a square integer matrix by Bareiss fraction-free
/// elimination.
pub fn bareiss_det<T: IntScalar>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    if n == 0 {
        return T::one();
    }
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = v / prev.clone();
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_poly::{ExtensionField, PrimeModulus};
    use num_bigint::BigInt;

    fn prime_field(p: u64) -> ExtensionField {
        let m = PrimeModulus::new(p).unwrap();
        ExtensionField::from_dense(&crate::field_poly::DensePoly::from_i64s(m, &[1, 1])).unwrap()
    }

    #[test]
    fn kernel_of_small_system() {
        let f = prime_field(5);
        let e = |x: i64| f.from_i64(x);
        let rows = vec![vec![e(1), e(2), e(3)], vec![e(2), e(3), e(1)]];
        let basis = kernel_basis(&f, rows.clone(), 3);
        assert_eq!(basis.len(), 1);
        for row in &rows {
            let dot = row.iter().zip(&basis[0]).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)));
            assert!(f.is_zero(&dot));
        }
        assert_eq!(nullity(&f, Vec::new(), 4), 4);
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = vec![vec![2i64, -1, 0], vec![1, 3, 4], vec![0, 5, -2]];
        // 2(-6-20) + 1(-2-0) = -54
        assert_eq!(bareiss_det(m), -54);
        let singular = vec![vec![BigInt::from(1), BigInt::from(2)], vec![BigInt::from(2), BigInt::from(4)]];
        assert_eq!(bareiss_det(singular), BigInt::from(0));
        assert_eq!(bareiss_det::<i64>(Vec::new()), 1);
        let swap = vec![vec![0i64, 1], vec![1, 0]];
        assert_eq!(bareiss_det(swap), -1);
    }
}
