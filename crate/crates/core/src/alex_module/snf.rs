//! Smith normal form over `Z_p[t]` (hence over the PID `Λ_p`).

use crate::field_poly::{poly_xgcd, DensePoly, PrimeModulus};
use crate::ZPoly;

pub type PolyMatrix = Vec<Vec<DensePoly>>;

/// `U · cleared · V = diag(diagonal)` with `U`, `V` invertible over
/// `Z_p[t]`. `cleared` is the reduced input with row `i` multiplied by
/// `t^(row_shifts[i])`, a unit of `Λ_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub modulus: PrimeModulus,
    pub cleared: PolyMatrix,
    pub row_shifts: Vec<i64>,
    pub u: PolyMatrix,
    pub v: PolyMatrix,
    /// Raw diagonal, monic, `d_1 | d_2 | ...`.
    pub diagonal: Vec<DensePoly>,
    /// Canonical invariant factors (monic, nonzero constant term; zero kept).
    pub factors: Vec<DensePoly>,
}

impl SnfResult {
    /// Whether `d_i | d_(i+1)` for every `i`.
    pub fn is_chain(&self) -> bool {
        self.diagonal.windows(2).all(|w| w[0].divides(&w[1]))
    }

    /// Check `U · cleared · V = diag`, `det U`, `det V` nonzero constants and
    /// the divisibility chain.
    pub fn verify(&self) -> bool {
        let m = self.cleared.len();
        let n = self.cleared.first().map_or(self.v.len(), |r| r.len());
        let prod = mat_mul(&mat_mul(&self.u, &self.cleared, self.modulus), &self.v, self.modulus);
        let diag_ok = (0..m).all(|i| {
            (0..n).all(|j| {
                let expect = if i == j { self.diagonal[i].clone() } else { DensePoly::zero(self.modulus) };
                prod[i][j] == expect
            })
        });
        let unit = |x: &PolyMatrix| {
            let d = poly_matrix_det(x, self.modulus);
            !d.is_zero() && d.degree() == Some(0)
        };
        diag_ok && unit(&self.u) && unit(&self.v) && self.is_chain()
    }

    /// `∏ d_i`, canonical.
    pub fn determinant(&self) -> DensePoly {
        let one = DensePoly::one(self.modulus);
        self.factors.iter().fold(one, |acc, f| &acc * f).canonical()
    }
}

fn identity(n: usize, m: PrimeModulus) -> PolyMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { DensePoly::one(m) } else { DensePoly::zero(m) }).collect()).collect()
}

fn mat_mul(a: &PolyMatrix, b: &PolyMatrix, m: PrimeModulus) -> PolyMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(DensePoly::zero(m), |acc, k| &acc + &(&row[k] * &b[k][j])))
                .collect()
        })
        .collect()
}

/// Determinant over `Z_p[t]` by fraction-free elimination.
pub fn poly_matrix_det(m: &PolyMatrix, p: PrimeModulus) -> DensePoly {
    let n = m.len();
    if n == 0 {
        return DensePoly::one(p);
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = DensePoly::one(p);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return DensePoly::zero(p),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = v.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    if negate {
        -&a[n - 1][n - 1]
    } else {
        a[n - 1][n - 1].clone()
    }
}

/// Reduce modulo `p` and multiply each row by the power of `t` that moves
/// it into `Z_p[t]` with some entry of nonzero constant term.
fn clear(n: &[Vec<ZPoly>], p: PrimeModulus) -> (PolyMatrix, Vec<i64>) {
    let mut shifts = Vec::new();
    let rows = n
        .iter()
        .map(|row| {
            let red: Vec<_> = row.iter().map(|e| e.reduce(p)).collect();
            let low = red.iter().filter(|e| !e.is_zero()).map(|e| e.lowest_exponent()).min().unwrap_or(0);
            shifts.push(-low);
            red.iter()
                .map(|e| {
                    if e.is_zero() {
                        DensePoly::zero(p)
                    } else {
                        e.body().shift((e.lowest_exponent() - low) as usize)
                    }
                })
                .collect()
        })
        .collect();
    (rows, shifts)
}

struct Work {
    a: PolyMatrix,
    u: PolyMatrix,
    v: PolyMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in self.a.iter_mut().chain(self.v.iter_mut()) {
            r.swap(i, j);
        }
    }

    /// row_i -= q row_s
    fn row_sub(&mut self, i: usize, s: usize, q: &DensePoly) {
        for m in [&mut self.a, &mut self.u] {
            let src = m[s].clone();
            for (x, y) in m[i].iter_mut().zip(&src) {
                *x = &*x - &(q * y);
            }
        }
    }

    /// col_j -= q col_s
    fn col_sub(&mut self, j: usize, s: usize, q: &DensePoly) {
        for m in [&mut self.a, &mut self.v] {
            for r in m.iter_mut() {
                r[j] = &r[j] - &(q * &r[s]);
            }
        }
    }

    fn scale_row(&mut self, i: usize, c: u64) {
        for m in [&mut self.a, &mut self.u] {
            for x in m[i].iter_mut() {
                *x = x.scale(c);
            }
        }
    }

    /// Replace `diag(a, b)` at positions `i < j` by `diag(gcd, lcm)`.
    fn repair(&mut self, i: usize, j: usize) {
        let a = self.a[i][i].clone();
        let b = self.a[j][j].clone();
        let (g, x, y) = poly_xgcd(&a, &b);
        let ag = a.exact_div(&g).expect("gcd divides");
        let bg = b.exact_div(&g).expect("gcd divides");
        // rows: [x y; -b/g a/g]
        for m in [&mut self.a, &mut self.u] {
            let (ri, rj) = (m[i].clone(), m[j].clone());
            m[i] = ri.iter().zip(&rj).map(|(p, q)| &(&x * p) + &(&y * q)).collect();
            m[j] = ri.iter().zip(&rj).map(|(p, q)| &(&ag * q) - &(&bg * p)).collect();
        }
        // columns: [1 -y b/g; 1 x a/g]
        let c1 = -&(&y * &bg);
        let c2 = &x * &ag;
        for m in [&mut self.a, &mut self.v] {
            for r in m.iter_mut() {
                let (ci, cj) = (r[i].clone(), r[j].clone());
                r[i] = &ci + &cj;
                r[j] = &(&ci * &c1) + &(&cj * &c2);
            }
        }
    }
}

/// Smith normal form of `N` reduced modulo `p`.
///
/// Pivot: a nonzero entry of least degree (ties: smallest row, then
/// column); rows and columns are reduced until the pivot divides them. A
/// final pass of two-by-two repairs enforces `d_i | d_(i+1)`.
pub fn smith_normal_form(n: &[Vec<ZPoly>], p: PrimeModulus) -> SnfResult {
    let (cleared, row_shifts) = clear(n, p);
    let rows = cleared.len();
    let cols = n.first().map_or(0, |r| r.len());
    let mut w = Work { a: cleared.clone(), u: identity(rows, p), v: identity(cols, p) };
    let r = rows.min(cols);
    let mut rank = 0;
    'outer: for s in 0..r {
        loop {
            let mut best: Option<(usize, usize, usize)> = None;
            for i in s..rows {
                for j in s..cols {
                    if let Some(d) = w.a[i][j].degree() {
                        if best.is_none_or(|(bd, _, _)| d < bd) {
                            best = Some((d, i, j));
                        }
                    }
                }
            }
            let Some((_, pi, pj)) = best else { break 'outer };
            w.swap_rows(s, pi);
            w.swap_cols(s, pj);
            let pivot = w.a[s][s].clone();
            let mut clean = true;
            for i in s + 1..rows {
                if !w.a[i][s].is_zero() {
                    let (q, rem) = w.a[i][s].div_rem(&pivot).expect("nonzero pivot");
                    w.row_sub(i, s, &q);
                    clean &= rem.is_zero();
                }
            }
            for j in s + 1..cols {
                if !w.a[s][j].is_zero() {
                    let (q, rem) = w.a[s][j].div_rem(&pivot).expect("nonzero pivot");
                    w.col_sub(j, s, &q);
                    clean &= rem.is_zero();
                }
            }
            if clean {
                break;
            }
        }
        let lead = w.a[s][s].leading();
        w.scale_row(s, p.inv(lead));
        rank = s + 1;
    }
    for i in 0..rank {
        for j in i + 1..rank {
            if !w.a[i][i].divides(&w.a[j][j]) {
                w.repair(i, j);
                for k in [i, j] {
                    let lead = w.a[k][k].leading();
                    w.scale_row(k, p.inv(lead));
                }
            }
        }
    }
    let diagonal: Vec<DensePoly> = (0..r).map(|i| w.a[i][i].clone()).collect();
    let factors = diagonal.iter().map(|d| d.canonical()).collect();
    SnfResult { modulus: p, cleared, row_shifts, u: w.u, v: w.v, diagonal, factors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alex_module::{builtin_matrix, n_matrix, zpoly_from_i64};

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn inoue_diagonal_mod_3() {
        let sd = builtin_matrix("inoue_remark").unwrap();
        let r = smith_normal_form(&n_matrix(&sd, 1).entries, pm(3));
        let k = DensePoly::from_i64s(pm(3), &[1, 2, 1]);
        assert_eq!(r.factors, vec![k.clone(), k.clone(), k.clone(), k]);
        assert!(r.verify());
    }

    #[test]
    fn zero_and_figure_eight() {
        let zero = vec![vec![ZPoly::zero(); 3]; 3];
        let r = smith_normal_form(&zero, pm(5));
        assert!(r.factors.iter().all(|f| f.is_zero()));
        assert!(r.verify());
        let fig = builtin_matrix("figure_eight").unwrap();
        let r = smith_normal_form(&n_matrix(&fig, 1).entries, pm(5));
        assert_eq!(r.factors, vec![DensePoly::one(pm(5)), DensePoly::from_i64s(pm(5), &[1, 2, 1])]);
        assert!(r.verify());
    }

    #[test]
    fn needs_repair() {
        // diag(t - 1, t + 1) is not in normal form
        let m = vec![
            vec![zpoly_from_i64(0, &[-1, 1]), ZPoly::zero()],
            vec![ZPoly::zero(), zpoly_from_i64(0, &[1, 1])],
        ];
        let r = smith_normal_form(&m, pm(7));
        assert_eq!(r.factors, vec![DensePoly::one(pm(7)), DensePoly::from_i64s(pm(7), &[-1, 0, 1])]);
        assert!(r.verify());
    }

    #[test]
    fn laurent_entries_are_cleared() {
        let m = vec![vec![zpoly_from_i64(-2, &[1, 0, 1]), zpoly_from_i64(-1, &[3])]];
        let r = smith_normal_form(&m, pm(5));
        assert_eq!(r.row_shifts, vec![2]);
        assert_eq!(r.factors, vec![DensePoly::one(pm(5))]);
        assert!(r.verify());
    }

    #[test]
    fn det_of_poly_matrix() {
        let m5 = pm(5);
        let a = vec![
            vec![DensePoly::from_i64s(m5, &[0, 1]), DensePoly::one(m5)],
            vec![DensePoly::one(m5), DensePoly::from_i64s(m5, &[0, 1])],
        ];
        assert_eq!(poly_matrix_det(&a, m5), DensePoly::from_i64s(m5, &[-1, 0, 1]));
    }
}
