//! I-counts, the `A_Q` search with witnesses and certificates, genus-one
//! closed forms, genus and tunnel bounds, and composition laws.

mod bounds;
mod compose;
mod genus1;
mod primes;

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::alex_module::{alexander_polynomial, elementary_divisors, ElementaryDivisors, Origin, SeifertData};
use crate::field_poly::{is_irreducible, poly_factor, DensePoly, ExtensionField, PrimeModulus};
use crate::quandle::AlexanderQuandle;
use crate::ZPoly;

pub use bounds::{genus_bounds, partitioned_genus_bounds, tunnel_bound, BoundError, PartitionKind, PartitionedBound};
pub use compose::{compose_connected_sum, compose_split_link, ComposeError, QuandleKey, Spectrum, SplitSpectrum};
pub use genus1::{
    genus1_report, genus1_report_for, genus1_report_i64, minimal_seifert_rank_check, sharp_congruences,
    Genus1Report,
};
pub use primes::{candidate_primes, odd_prime_divisors, search_polynomial, SearchConfig};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("h = {0} is not irreducible of positive breadth over Z_{1}")]
    Reducible(String, u64),
    #[error(transparent)]
    Field(#[from] crate::field_poly::FieldError),
}

fn count_with(ed: &ElementaryDivisors, h: &DensePoly, z: u64) -> usize {
    ed.e.iter().filter(|e| h.divides(&e.compose_power(z as usize))).count()
}

/// `|I(z, p, h, L)| = #{i : h | e_i^(p)(t^z)}`.
pub fn i_count(sd: &SeifertData, p: u64, h: &DensePoly, z: u64) -> Result<usize, InvariantError> {
    let m = PrimeModulus::new(p)?;
    let h = DensePoly::new(m, h.coeffs().to_vec());
    if h.degree().unwrap_or(0) == 0 || h.coeff(0) == 0 || !is_irreducible(&h) {
        return Err(InvariantError::Reducible(h.to_string(), p));
    }
    Ok(count_with(&elementary_divisors(sd, m), &h, z))
}

/// One searched quandle and its count at `z = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub p: u64,
    #[serde(serialize_with = "crate::serialize_display")]
    pub h: DensePoly,
    pub z: u64,
    pub a: usize,
}

impl Witness {
    pub fn breadth(&self) -> usize {
        self.h.degree().unwrap_or(0)
    }

    pub fn quandle(&self) -> AlexanderQuandle {
        AlexanderQuandle::new(ExtensionField::from_dense(&self.h).expect("searched h is irreducible"))
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}) a={}", self.p, self.h, self.z, self.a)
    }
}

/// Which upper bound the search result meets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    #[serde(rename = "matches_A_upper")]
    MatchesAUpper,
    MatrixSize,
    Genus1ClosedForm,
    None,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Certificate::MatchesAUpper => "matches_A_upper",
            Certificate::MatrixSize => "matrix_size",
            Certificate::Genus1ClosedForm => "genus1_closed_form",
            Certificate::None => "none",
        })
    }
}

/// Result of [`aq_search`]. `delta_hat` and `theta_hat` are taken over the
/// searched witnesses only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub name: String,
    pub components: usize,
    pub order: usize,
    pub origin: Origin,
    #[serde(serialize_with = "crate::serialize_display")]
    pub alexander: ZPoly,
    #[serde(rename = "A_upper")]
    pub a_upper: Option<usize>,
    pub aq_lower_bound: usize,
    /// Every searched quandle attaining the bound.
    pub witnesses: Vec<Witness>,
    pub exact: bool,
    pub certificate: Certificate,
    /// Upper bound from genus-one blocks, when the data has that shape.
    pub genus1_upper: Option<usize>,
    pub delta_hat: Option<usize>,
    pub theta_hat: Option<u64>,
    pub genus_lower: u64,
    pub tunnel_lower: u64,
    pub primes_searched: usize,
    /// Every `(p, h)` tried, in ascending order.
    pub searched: Vec<Witness>,
    pub search_config: SearchConfig,
}

impl InvariantReport {
    /// The dihedral count `a_{D_p}(L, 1)` if `p` was searched.
    pub fn dihedral(&self, p: u64) -> Option<usize> {
        self.searched.iter().find(|w| w.p == p && w.h.coeffs() == [1, 1]).map(|w| w.a)
    }

    pub fn to_text(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        let mut s = String::new();
        let mut kv = |k: &str, v: String| s.push_str(&format!("{k}: {v}\n"));
        kv("name", self.name.clone());
        kv("components", self.components.to_string());
        kv("order", self.order.to_string());
        kv("origin", format!("{:?}", self.origin).to_lowercase());
        kv("alexander", self.alexander.to_string());
        kv("A_upper", opt(self.a_upper.map(|a| a.to_string())));
        kv("aq_lower_bound", self.aq_lower_bound.to_string());
        kv("exact", self.exact.to_string());
        kv("certificate", self.certificate.to_string());
        kv("genus1_upper", opt(self.genus1_upper.map(|a| a.to_string())));
        kv("witnesses", self.witnesses.iter().map(Witness::to_string).collect::<Vec<_>>().join("; "));
        kv("delta_hat (searched)", opt(self.delta_hat.map(|a| a.to_string())));
        kv("theta_hat (searched)", opt(self.theta_hat.map(|a| a.to_string())));
        kv("genus_lower", self.genus_lower.to_string());
        kv("tunnel_lower", self.tunnel_lower.to_string());
        kv("primes_searched", self.primes_searched.to_string());
        kv("quandles_searched", self.searched.len().to_string());
        kv("pmax", self.search_config.pmax.to_string());
        s
    }
}

/// Canonical irreducible factors of positive breadth of the nonzero
/// `e_i^(p)`, together with `t + 1` and `t - 1`.
fn search_polys(ed: &ElementaryDivisors) -> BTreeSet<DensePoly> {
    let m = ed.modulus;
    let mut out: BTreeSet<DensePoly> =
        [DensePoly::from_i64s(m, &[1, 1]), DensePoly::from_i64s(m, &[-1, 1])].into_iter().collect();
    for e in ed.e.iter().filter(|e| !e.is_zero() && !e.is_unit()) {
        let f = poly_factor(e).expect("nonzero");
        out.extend(f.irreducibles().filter(|h| h.coeff(0) != 0).map(|h| h.canonical()));
    }
    out
}

fn search_prime(sd: &SeifertData, p: u64) -> Vec<Witness> {
    let m = PrimeModulus::new(p).expect("candidate primes are prime");
    let ed = elementary_divisors(sd, m);
    search_polys(&ed).into_iter().map(|h| Witness { p, a: count_with(&ed, &h, 1), h, z: 1 }).collect()
}

/// Search `A_Q(L) = A_Q(L, P_m)` over the candidate primes at `z = 1`.
pub fn aq_search(sd: &SeifertData, config: &SearchConfig) -> InvariantReport {
    let primes = candidate_primes(sd, config);
    let searched: Vec<Witness> = primes.par_iter().flat_map_iter(|&p| search_prime(sd, p)).collect();
    let bound = searched.iter().map(|w| w.a).max().unwrap_or(0);
    let witnesses: Vec<Witness> = if bound == 0 {
        Vec::new()
    } else {
        searched.iter().filter(|w| w.a == bound).cloned().collect()
    };
    let delta_hat = witnesses.iter().map(Witness::breadth).min();
    let theta_hat =
        delta_hat.and_then(|d| witnesses.iter().filter(|w| w.breadth() == d).map(|w| w.quandle().quandle_type()).min());

    let knot_seifert = sd.k == 1 && sd.origin == Origin::Seifert;
    let (alexander, a_upper) = match alexander_polynomial(sd) {
        Ok((d, b)) => (d.canonical(), knot_seifert.then_some(b)),
        Err(_) => (search_polynomial(sd).canonical(), None),
    };
    let genus1_upper = genus1::genus_one_blocks(sd).map(|blocks| {
        blocks.iter().map(|b| genus1_report_for(b).map(|r| r.aq_exact as usize).unwrap_or(2)).sum()
    });
    let certificate = if a_upper == Some(bound) {
        Certificate::MatchesAUpper
    } else if bound == sd.order() {
        Certificate::MatrixSize
    } else if genus1_upper == Some(bound) {
        Certificate::Genus1ClosedForm
    } else {
        Certificate::None
    };
    let genus_lower = genus_bounds(bound as u64, sd.k.max(1), 1, PartitionKind::Minimal).unwrap_or(0);
    InvariantReport {
        name: sd.name.clone(),
        components: sd.k,
        order: sd.order(),
        origin: sd.origin,
        alexander,
        a_upper,
        aq_lower_bound: bound,
        witnesses,
        exact: certificate != Certificate::None,
        certificate,
        genus1_upper,
        delta_hat,
        theta_hat,
        genus_lower,
        // minimal-partition values are maximal-partition values on constant cycles
        tunnel_lower: tunnel_bound(bound as u64),
        primes_searched: primes.len(),
        searched,
        search_config: config.clone(),
    }
}
