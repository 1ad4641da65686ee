use std::fmt;

use serde::Serialize;

use super::{laurent_det, n_matrix, smith_normal_form, AlexError, SeifertData, SnfResult};
use crate::field_poly::{int_poly_gcd, poly_gcd, DensePoly, ExtensionField, FieldElem, PrimeModulus};
use crate::linalg::nullity;
use crate::quandle::AlexanderQuandle;
use crate::scalar::IntScalar;
use crate::ZPoly;

/// Largest number of minors [`integer_delta_i`] will enumerate.
pub const MINOR_LIMIT: u128 = 200_000;

/// `e_1^(p) ⊒ e_2^(p) ⊒ ...` from the Smith normal form of `N(1)` mod `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryDivisors {
    pub modulus: PrimeModulus,
    /// `e[i - 1] = e_i^(p) = d_(alpha + 1 - i)`.
    pub e: Vec<DensePoly>,
    pub snf: SnfResult,
}

impl ElementaryDivisors {
    /// `e_i^(p)` for `i >= 1`; equal to 1 beyond the matrix order.
    pub fn e(&self, i: usize) -> DensePoly {
        assert!(i >= 1, "indices start at 1");
        self.e.get(i - 1).cloned().unwrap_or_else(|| DensePoly::one(self.modulus))
    }

    /// `Δ_i^(p) = ∏_{j >= i} e_j^(p)`, canonical.
    pub fn delta(&self, i: usize) -> DensePoly {
        assert!(i >= 1, "indices start at 1");
        let one = DensePoly::one(self.modulus);
        self.e.iter().skip(i - 1).fold(one, |acc, f| &acc * f).canonical()
    }

    /// The nonzero-breadth divisors (the ones that can contribute summands).
    pub fn nontrivial(&self) -> impl Iterator<Item = (usize, &DensePoly)> {
        self.e.iter().enumerate().filter(|(_, f)| !f.is_one()).map(|(i, f)| (i + 1, f))
    }
}

/// Elementary divisors of `N(1)` (or of `P(t)` for presentation data).
pub fn elementary_divisors(sd: &SeifertData, p: PrimeModulus) -> ElementaryDivisors {
    let snf = smith_normal_form(&n_matrix(sd, 1).entries, p);
    let e = snf.factors.iter().rev().cloned().collect();
    ElementaryDivisors { modulus: p, e, snf }
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    go(0, n, r, &mut cur, &mut out);
    out
}

fn binomial(n: usize, r: usize) -> u128 {
    (0..r as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// `Δ_i(L)`: GCD of the `(alpha - i + 1)`-minors of `N(1)` in `Λ`, up to
/// `±t^k` (content times primitive GCD). `Δ_(alpha+1) = 1`.
pub fn integer_delta_i(sd: &SeifertData, i: usize) -> Result<ZPoly, AlexError> {
    let alpha = sd.order();
    if i == 0 || i > alpha + 1 {
        return Err(AlexError::BadIndex(i, alpha + 1));
    }
    let r = alpha + 1 - i;
    if r == 0 {
        return Ok(ZPoly::one());
    }
    let count = binomial(alpha, r).pow(2);
    if count > MINOR_LIMIT {
        return Err(AlexError::TooLarge(format!("{count} minors of order {r}")));
    }
    let n = n_matrix(sd, 1).entries;
    let sets = combinations(alpha, r);
    let mut g = ZPoly::zero();
    for rows in &sets {
        for cols in &sets {
            let minor: Vec<Vec<ZPoly>> = rows.iter().map(|&a| cols.iter().map(|&b| n[a][b].clone()).collect()).collect();
            g = int_poly_gcd(&g, &laurent_det(&minor));
            if g.is_unit() {
                return Ok(g.canonical());
            }
        }
    }
    Ok(g.canonical())
}

/// Integer `e_i = Δ_i / Δ_(i+1)` for `i = 1..alpha` (zero where `Δ_i = 0`).
pub fn integer_elementary_divisors(sd: &SeifertData) -> Result<Vec<ZPoly>, AlexError> {
    let alpha = sd.order();
    let deltas = (1..=alpha + 1).map(|i| integer_delta_i(sd, i)).collect::<Result<Vec<_>, _>>()?;
    Ok((0..alpha)
        .map(|i| {
            if deltas[i].is_zero() {
                ZPoly::zero()
            } else {
                deltas[i].exact_div(&deltas[i + 1]).expect("Δ_(i+1) divides Δ_i").canonical()
            }
        })
        .collect())
}

/// `#{i : h | π_p(e_i(t^z))}` over the integer elementary divisors. This
/// need not agree with the true count, because `e_i^(p)` is not in general
/// the reduction of `e_i`.
pub fn reduced_integer_summands(sd: &SeifertData, x: &AlexanderQuandle, z: u64) -> Result<usize, AlexError> {
    let p = x.field().modulus();
    let h = x.h();
    Ok(integer_elementary_divisors(sd)?
        .iter()
        .filter(|e| {
            let red = e.subst_power(z).reduce(p).normalize();
            h.divides(&red)
        })
        .count())
}

/// One summand `Λ_p / (e_i^(p)(t^z), h)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub index: usize,
    /// `e_i^(p)(t^z)`, canonical.
    #[serde(serialize_with = "crate::serialize_display")]
    pub e: DensePoly,
    /// `gcd(e_i^(p)(t^z), h)`: either 1 (zero summand) or `h` (a copy of
    /// `F(p, h)`).
    #[serde(serialize_with = "crate::serialize_display")]
    pub gcd: DensePoly,
}

impl Summand {
    pub fn is_nonzero(&self) -> bool {
        !self.gcd.is_one()
    }
}

/// `F(p, h) ⊕ (⊕_i Λ_p / (e_i^(p)(t^z), h))` and `a_X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleDecomposition {
    pub p: u64,
    #[serde(serialize_with = "crate::serialize_display")]
    pub h: DensePoly,
    pub z: u64,
    pub summands: Vec<Summand>,
    /// Number of nonzero summands besides the free `F(p, h)`.
    pub a: usize,
}

impl fmt::Display for ModuleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = format!("F({}, {})", self.p, self.h);
        write!(f, "{field}")?;
        if self.a > 0 {
            write!(f, " + {field}^{}", self.a)?;
        }
        Ok(())
    }
}

/// Coloring module of `(L, X, z)` through the elementary divisors.
pub fn coloring_module_decomposition(sd: &SeifertData, x: &AlexanderQuandle, z: u64) -> ModuleDecomposition {
    let p = x.field().modulus();
    let ed = elementary_divisors(sd, p);
    decompose_with(&ed, x, z)
}

pub(crate) fn decompose_with(ed: &ElementaryDivisors, x: &AlexanderQuandle, z: u64) -> ModuleDecomposition {
    let h = x.h().clone();
    let summands: Vec<Summand> = ed
        .e
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let ez = e.compose_power(z as usize).canonical();
            let gcd = poly_gcd(&ez, &h).expect("same modulus");
            Summand { index: i + 1, e: ez, gcd }
        })
        .collect();
    let a = summands.iter().filter(|s| s.is_nonzero()).count();
    ModuleDecomposition { p: x.p(), h, z, summands, a }
}

fn eval_at(f: &ZPoly, field: &ExtensionField, tz: impl Fn(i64) -> FieldElem) -> FieldElem {
    let p = field.p();
    f.terms().fold(field.zero(), |acc, (e, c)| field.add(&acc, &field.mul(&field.from_u64(c.rem_u64(p)), &tz(e))))
}

/// `dim ker N(z, p, h)`: the kernel of `N(z)` with `t` evaluated at `t̄` in
/// `F(p, h)`.
pub fn kernel_dimension(sd: &SeifertData, x: &AlexanderQuandle, z: u64) -> usize {
    let f = x.field();
    let n = n_matrix(sd, z);
    let rows: Vec<Vec<FieldElem>> =
        n.entries.iter().map(|r| r.iter().map(|e| eval_at(e, f, |k| f.tbar_pow(k))).collect()).collect();
    nullity(f, rows, sd.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alex_module::{alexander_polynomial, builtin_matrix, k_p_data, zpoly_from_i64};

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn q(p: u64, h: &str) -> AlexanderQuandle {
        AlexanderQuandle::from_parts(p, h).unwrap()
    }

    #[test]
    fn trefoil_divisors() {
        let sd = builtin_matrix("trefoil").unwrap();
        let ed = elementary_divisors(&sd, pm(3));
        assert_eq!(ed.e, vec![DensePoly::from_i64s(pm(3), &[1, 2, 1]), DensePoly::one(pm(3))]);
        assert_eq!(ed.e(5), DensePoly::one(pm(3)));
        assert_eq!(ed.delta(1), DensePoly::from_i64s(pm(3), &[1, 2, 1]));
        let dec = coloring_module_decomposition(&sd, &q(3, "1+t"), 1);
        assert_eq!(dec.a, 1);
        assert_eq!(dec.to_string(), "F(3, 1 + t) + F(3, 1 + t)^1");
        assert_eq!(kernel_dimension(&sd, &q(3, "1+t"), 1), 1);
        assert_eq!(coloring_module_decomposition(&sd, &q(5, "1+t"), 1).a, 0);
    }

    #[test]
    fn knots_have_unit_divisors_at_one() {
        for name in ["trefoil", "figure_eight", "kp_matrix_p5", "torus_2_7"] {
            let sd = builtin_matrix(name).unwrap();
            for p in [3, 5, 7] {
                let ed = elementary_divisors(&sd, pm(p));
                assert!(ed.e.iter().all(|e| e.eval(1) != 0), "{name} mod {p}");
                assert_eq!(coloring_module_decomposition(&sd, &q(p, "1+t"), 0).a, 0);
            }
        }
    }

    #[test]
    fn remark_fixtures() {
        let inoue = builtin_matrix("inoue_remark").unwrap();
        let ed = elementary_divisors(&inoue, pm(3));
        let k = DensePoly::from_i64s(pm(3), &[1, 2, 1]);
        assert_eq!(ed.delta(1), k.pow(4));
        assert_eq!(ed.delta(2), k.pow(3));
        assert_eq!(ed.delta(4), k);
        assert_eq!(ed.delta(5), DensePoly::one(pm(3)));
        let d3 = q(3, "1+t");
        assert_eq!(coloring_module_decomposition(&inoue, &d3, 1).a, 4);
        assert_eq!(kernel_dimension(&inoue, &d3, 1), 4);
        assert_eq!(reduced_integer_summands(&inoue, &d3, 1).unwrap(), 2);

        let k1 = zpoly_from_i64(-1, &[1, -1, 1]);
        let k2 = zpoly_from_i64(-1, &[-2, 5, -2]);
        let k12 = &k1 * &k2;
        let contr = builtin_matrix("controes_remark").unwrap();
        assert!(integer_delta_i(&contr, 1).unwrap().assoc_eq(&(&k12 * &k12)));
        assert!(integer_delta_i(&contr, 2).unwrap().assoc_eq(&k12));
        assert!(integer_delta_i(&inoue, 2).unwrap().assoc_eq(&k12));
        for i in 1..=3 {
            assert!(integer_delta_i(&inoue, i).unwrap().assoc_eq(&integer_delta_i(&contr, i).unwrap()));
        }
        assert_eq!(coloring_module_decomposition(&contr, &d3, 1).a, 2);
    }

    #[test]
    fn integer_deltas_of_knots() {
        let sd = builtin_matrix("trefoil").unwrap();
        assert!(integer_delta_i(&sd, 1).unwrap().assoc_eq(&zpoly_from_i64(0, &[1, -1, 1])));
        assert_eq!(integer_delta_i(&sd, 2).unwrap(), ZPoly::one());
        assert_eq!(integer_delta_i(&sd, 3).unwrap(), ZPoly::one());
        assert!(integer_delta_i(&sd, 4).is_err());
        let (d, _) = alexander_polynomial(&sd).unwrap();
        assert!(integer_delta_i(&sd, 1).unwrap().assoc_eq(&d));
    }

    #[test]
    fn product_of_divisors_is_reduced_alexander() {
        for name in ["trefoil", "figure_eight", "kp_matrix_p3", "kprime_matrix_p7", "torus_2_7"] {
            let sd = builtin_matrix(name).unwrap();
            let (d, _) = alexander_polynomial(&sd).unwrap();
            for p in [3, 5, 7, 11] {
                let ed = elementary_divisors(&sd, pm(p));
                assert_eq!(ed.delta(1), d.reduce(pm(p)).normalize(), "{name} mod {p}");
                assert!(ed.snf.verify());
            }
        }
    }

    #[test]
    fn kp_route_equivalence() {
        let sd = k_p_data(3).unwrap();
        for (p, h) in [(3, "1+t"), (5, "1+t"), (7, "t+3"), (5, "t+2")] {
            let x = q(p, h);
            for z in 0..4 {
                assert_eq!(coloring_module_decomposition(&sd, &x, z).a, kernel_dimension(&sd, &x, z), "{p} {h} {z}");
            }
        }
    }
}
