//! Exact arithmetic over `Z_p`, `Z_p[t]`, `Λ_p = Z_p[t, t^-1]`, the integer
//! Laurent ring `Λ = Z[t, t^-1]`, and the finite fields `F(p, h(t))`.

mod dense;
mod extension;
mod factor;
mod int_gcd;
mod int_laurent;
mod laurent;
mod modulus;
mod parse;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use dense::{poly_gcd, poly_xgcd, DensePoly};
pub use extension::{build_extension_field, ExtensionField, FieldElem};
pub use factor::{
    distinct_degree, is_irreducible, poly_factor, squarefree_decomposition, Factorization, FACTOR_SEED,
};
pub use int_gcd::{int_poly_gcd, pseudo_rem, resultant};
pub use int_laurent::IntLaurent;
pub use laurent::{breadth, laurent_normalize, LaurentPoly};
pub use modulus::{is_prime, odd_primes_up_to, PrimeModulus};
pub use parse::{parse_int_laurent, parse_laurent_mod};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p = 2 is not supported; the modulus must be an odd prime")]
    EvenPrime,
    #[error("modulus {0} exceeds the supported range (< 10^6)")]
    ModulusTooLarge(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("h(t) = {0} is reducible")]
    Reducible(String),
    #[error("h(t) must have positive breadth")]
    ZeroBreadth,
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("polynomial syntax error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

/// Render `(exponent, coefficient)` terms in ascending order as
/// `3*t^-1 + 1 + 2*t^2`. Coefficients `±1` are omitted on non-constant terms.
pub(crate) fn format_terms(terms: impl Iterator<Item = (i64, BigInt)>, spaced: bool) -> String {
    let mut out = String::new();
    for (e, c) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if spaced {
            out.push_str(if neg { " - " } else { " + " });
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mono = match e {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{e}"),
        };
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
