//! Seifert and presentation matrices, `N(z) = t^z S - S^T`, the Alexander
//! polynomial, Smith normal form over `Λ_p` and the coloring-module
//! decomposition.

mod divisors;
mod fixtures;
mod parse;
mod snf;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::field_poly::FieldError;
use crate::ZPoly;

pub use divisors::{
    coloring_module_decomposition, elementary_divisors, integer_delta_i, integer_elementary_divisors,
    kernel_dimension, reduced_integer_summands, ElementaryDivisors, ModuleDecomposition, Summand,
};
pub use fixtures::{builtin_matrix, k_p_data, k_prime_p_data, load_matrix, matrix_fixture_names};
pub use parse::parse_matrix;
pub use snf::{poly_matrix_det, smith_normal_form, PolyMatrix, SnfResult};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlexError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("matrix is not square ({0} rows, row {1} has {2} entries)")]
    NotSquare(usize, usize, usize),
    #[error("order {alpha} is incompatible with {k} components (need alpha = 2g + k - 1, g >= 0)")]
    Shape { alpha: usize, k: usize },
    #[error("2g = {0} exceeds the order {1}")]
    GenusTooLarge(usize, usize),
    #[error("seifert matrix entries must be integers (found {0})")]
    NonIntegerEntry(String),
    #[error("the Alexander polynomial is only reported for seifert-origin data")]
    PresentationOrigin,
    #[error("index {0} outside 1..={1}")]
    BadIndex(usize, usize),
    #[error("expected a 2x2 matrix")]
    NotGenusOne,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown matrix fixture '{0}'")]
    UnknownFixture(String),
    #[error("cannot read '{0}': {1}")]
    Io(String, String),
    #[error("{0}")]
    TooLarge(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    /// An integer Seifert matrix.
    Seifert,
    /// A square presentation matrix of the Alexander module.
    Presentation,
}

/// Seifert data `S` (or a presentation matrix) of a link with `k`
/// components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertData {
    pub name: String,
    pub k: usize,
    pub origin: Origin,
    entries: Vec<Vec<ZPoly>>,
}

impl SeifertData {
    /// Integer Seifert matrix; checks `alpha = 2g + k - 1`.
    pub fn seifert(name: impl Into<String>, s: Vec<Vec<BigInt>>, k: usize) -> Result<Self, AlexError> {
        check_square(&s)?;
        let alpha = s.len();
        if k == 0 || alpha + 1 < k || (alpha + 1 - k) % 2 != 0 {
            return Err(AlexError::Shape { alpha, k });
        }
        let entries = s.into_iter().map(|r| r.into_iter().map(ZPoly::constant).collect()).collect();
        Ok(SeifertData { name: name.into(), k, origin: Origin::Seifert, entries })
    }

    pub fn seifert_i64(name: impl Into<String>, s: &[Vec<i64>], k: usize) -> Result<Self, AlexError> {
        Self::seifert(name, s.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), k)
    }

    /// Square presentation matrix over `Λ`; no shape checks.
    pub fn presentation(name: impl Into<String>, p: Vec<Vec<ZPoly>>, k: usize) -> Result<Self, AlexError> {
        check_square(&p)?;
        Ok(SeifertData { name: name.into(), k, origin: Origin::Presentation, entries: p })
    }

    /// Order `alpha` of the matrix.
    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<ZPoly>] {
        &self.entries
    }

    /// Genus `(alpha - k + 1) / 2` of the encoded surface.
    pub fn genus(&self) -> Option<usize> {
        (self.origin == Origin::Seifert).then(|| (self.order() + 1 - self.k) / 2)
    }

    /// Integer entries of a Seifert matrix.
    pub fn integer_matrix(&self) -> Option<Vec<Vec<BigInt>>> {
        if self.origin != Origin::Seifert {
            return None;
        }
        Some(self.entries.iter().map(|r| r.iter().map(|e| e.coeff(0)).collect()).collect())
    }

    /// Block sum (the data of a connected sum when both are knots).
    pub fn block_sum(&self, other: &SeifertData) -> SeifertData {
        let (a, b) = (self.order(), other.order());
        let mut entries = vec![vec![ZPoly::zero(); a + b]; a + b];
        for i in 0..a {
            for j in 0..a {
                entries[i][j] = self.entries[i][j].clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                entries[a + i][a + j] = other.entries[i][j].clone();
            }
        }
        let origin = if self.origin == Origin::Seifert && other.origin == Origin::Seifert {
            Origin::Seifert
        } else {
            Origin::Presentation
        };
        SeifertData { name: format!("{}#{}", self.name, other.name), k: 1, origin, entries }
    }

    /// Seifert data of the split link of the given knots: the block sum
    /// padded by `h - 1` zero rows and columns.
    pub fn split_link(parts: &[SeifertData]) -> SeifertData {
        let h = parts.len();
        let mut acc = parts[0].clone();
        for p in &parts[1..] {
            acc = acc.block_sum(p);
        }
        let n = acc.order() + h - 1;
        let mut entries = vec![vec![ZPoly::zero(); n]; n];
        for (i, row) in acc.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                entries[i][j] = e.clone();
            }
        }
        let name = format!("split({})", parts.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join(","));
        SeifertData { name, k: parts.iter().map(|p| p.k).sum(), origin: acc.origin, entries }
    }
}

fn check_square<T>(m: &[Vec<T>]) -> Result<(), AlexError> {
    match m.iter().enumerate().find(|(_, r)| r.len() != m.len()) {
        Some((i, r)) => Err(AlexError::NotSquare(m.len(), i + 1, r.len())),
        None => Ok(()),
    }
}

/// `J` of order `alpha`: `J[2h-1][2h] = -1`, `J[2h][2h-1] = 1` (1-based) for
/// `h <= g`, zero elsewhere.
pub fn j_matrix(alpha: usize, g: usize) -> Result<Vec<Vec<i64>>, AlexError> {
    if 2 * g > alpha {
        return Err(AlexError::GenusTooLarge(2 * g, alpha));
    }
    let mut j = vec![vec![0i64; alpha]; alpha];
    for h in 0..g {
        j[2 * h][2 * h + 1] = -1;
        j[2 * h + 1][2 * h] = 1;
    }
    Ok(j)
}

/// `S = M + J` for special-diagram data `M` of a `k`-component link.
pub fn seifert_from_m(name: impl Into<String>, m: &[Vec<i64>], k: usize) -> Result<SeifertData, AlexError> {
    check_square(m)?;
    let alpha = m.len();
    if k == 0 || alpha + 1 < k || (alpha + 1 - k) % 2 != 0 {
        return Err(AlexError::Shape { alpha, k });
    }
    let j = j_matrix(alpha, (alpha + 1 - k) / 2)?;
    let s: Vec<Vec<i64>> = (0..alpha).map(|r| (0..alpha).map(|c| m[r][c] + j[r][c]).collect()).collect();
    SeifertData::seifert_i64(name, &s, k)
}

/// Whether `M - M^T = -J`.
pub fn m_is_special(m: &[Vec<i64>], k: usize) -> bool {
    let alpha = m.len();
    if alpha + 1 < k || (alpha + 1 - k) % 2 != 0 {
        return false;
    }
    let Ok(j) = j_matrix(alpha, (alpha + 1 - k) / 2) else { return false };
    (0..alpha).all(|r| (0..alpha).all(|c| m[r][c] - m[c][r] == -j[r][c]))
}

/// `M = S - J` for genus-one Seifert data, after swapping the basis if
/// `S - S^T = -J`.
pub fn m_from_seifert(sd: &SeifertData) -> Result<Vec<Vec<BigInt>>, AlexError> {
    let s = sd.integer_matrix().ok_or(AlexError::NotGenusOne)?;
    if s.len() != 2 {
        return Err(AlexError::NotGenusOne);
    }
    let skew = &s[0][1] - &s[1][0];
    let s = if skew.is_one() {
        vec![vec![s[1][1].clone(), s[1][0].clone()], vec![s[0][1].clone(), s[0][0].clone()]]
    } else {
        s
    };
    let one = BigInt::one();
    Ok(vec![vec![s[0][0].clone(), &s[0][1] + &one], vec![&s[1][0] - &one, s[1][1].clone()]])
}

/// `N(z)` over `Λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NMatrix {
    pub z: u64,
    pub entries: Vec<Vec<ZPoly>>,
}

/// `t^z S - S^T` for Seifert data; `P(t^z)` for a presentation matrix.
pub fn n_matrix(sd: &SeifertData, z: u64) -> NMatrix {
    let n = sd.order();
    let e = &sd.entries;
    let entries = match sd.origin {
        Origin::Seifert => (0..n)
            .map(|i| (0..n).map(|j| &e[i][j].shift(z as i64) - &e[j][i]).collect())
            .collect(),
        Origin::Presentation => e.iter().map(|r| r.iter().map(|x| x.subst_power(z)).collect()).collect(),
    };
    NMatrix { z, entries }
}

/// Determinant over `Λ` by fraction-free elimination.
pub fn laurent_det(m: &[Vec<ZPoly>]) -> ZPoly {
    let n = m.len();
    if n == 0 {
        return ZPoly::one();
    }
    let mut a = m.to_vec();
    let mut negate = false;
    let mut prev = ZPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return ZPoly::zero(),
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
    let d = a[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

/// `Δ(L)(t) = det(S - t S^T)` and `A(L) = breadth Δ`.
pub fn alexander_polynomial(sd: &SeifertData) -> Result<(ZPoly, usize), AlexError> {
    if sd.origin != Origin::Seifert {
        return Err(AlexError::PresentationOrigin);
    }
    let n = sd.order();
    let e = &sd.entries;
    let m: Vec<Vec<ZPoly>> = (0..n).map(|i| (0..n).map(|j| &e[i][j] - &e[j][i].shift(1)).collect()).collect();
    let d = laurent_det(&m);
    let b = d.breadth();
    Ok((d, b))
}

/// Determinant of the matrix at `z = 1` for either origin (for presentation
/// data this is the order of the module, no breadth claim attached).
pub fn module_order(sd: &SeifertData) -> ZPoly {
    laurent_det(&n_matrix(sd, 1).entries)
}

/// Integer matrix helper: `det S`.
pub fn integer_det(m: &[Vec<BigInt>]) -> BigInt {
    crate::linalg::bareiss_det(m.to_vec())
}

#[cfg(test)]
pub(crate) fn zpoly_from_i64(low: i64, c: &[i64]) -> ZPoly {
    crate::field_poly::IntLaurent::new(low, c.iter().map(|&x| BigInt::from(x)).collect())
}
