use super::{parse_matrix, seifert_from_m, AlexError, SeifertData};
use crate::field_poly::is_prime;

const FILES: &[(&str, &str)] = &[
    ("unknot", include_str!("../../fixtures/matrices/unknot.txt")),
    ("trefoil", include_str!("../../fixtures/matrices/trefoil.txt")),
    ("figure_eight", include_str!("../../fixtures/matrices/figure_eight.txt")),
    ("kp_matrix_p3", include_str!("../../fixtures/matrices/kp_matrix_p3.txt")),
    ("kp_matrix_p5", include_str!("../../fixtures/matrices/kp_matrix_p5.txt")),
    ("kp_matrix_p7", include_str!("../../fixtures/matrices/kp_matrix_p7.txt")),
    ("kp_matrix_p11", include_str!("../../fixtures/matrices/kp_matrix_p11.txt")),
    ("kprime_matrix_p3", include_str!("../../fixtures/matrices/kprime_matrix_p3.txt")),
    ("kprime_matrix_p5", include_str!("../../fixtures/matrices/kprime_matrix_p5.txt")),
    ("kprime_matrix_p7", include_str!("../../fixtures/matrices/kprime_matrix_p7.txt")),
    ("kprime_matrix_p11", include_str!("../../fixtures/matrices/kprime_matrix_p11.txt")),
    ("trivial_alexander", include_str!("../../fixtures/matrices/trivial_alexander.txt")),
    ("torus_2_7", include_str!("../../fixtures/matrices/torus_2_7.txt")),
    ("hopf", include_str!("../../fixtures/matrices/hopf.txt")),
    ("unlink2", include_str!("../../fixtures/matrices/unlink2.txt")),
    ("inoue_remark", include_str!("../../fixtures/matrices/inoue_remark.txt")),
    ("controes_remark", include_str!("../../fixtures/matrices/controes_remark.txt")),
];

pub fn matrix_fixture_names() -> Vec<&'static str> {
    FILES.iter().map(|(n, _)| *n).collect()
}

/// Catalog matrix; also accepts a trailing `.txt`.
pub fn builtin_matrix(name: &str) -> Result<SeifertData, AlexError> {
    let key = name.trim().trim_end_matches(".txt");
    FILES
        .iter()
        .find(|(n, _)| *n == key)
        .map(|(_, text)| parse_matrix(text))
        .unwrap_or_else(|| Err(AlexError::UnknownFixture(name.into())))
}

/// A path to a matrix file, falling back to the catalog.
pub fn load_matrix(spec: &str) -> Result<SeifertData, AlexError> {
    match std::fs::read_to_string(spec) {
        Ok(text) => parse_matrix(&text),
        Err(e) => match builtin_matrix(spec) {
            Err(AlexError::UnknownFixture(_)) => Err(AlexError::Io(spec.into(), e.to_string())),
            other => other,
        },
    }
}

fn odd_prime(p: u64) -> Result<i64, AlexError> {
    if p % 2 == 0 || !is_prime(p) {
        return Err(AlexError::Field(crate::field_poly::FieldError::NotPrime(p)));
    }
    Ok(p as i64)
}

/// Special-diagram data of `K_p`: `M = [[0, -(p-1)/2], [-(p+1)/2, p]]`.
pub fn k_p_data(p: u64) -> Result<SeifertData, AlexError> {
    let q = odd_prime(p)?;
    seifert_from_m(format!("K_{p}"), &[vec![0, -(q - 1) / 2], vec![-(q + 1) / 2, q]], 1)
}

/// `K'_p`: as `K_p` with `M_22 = p + 1`.
pub fn k_prime_p_data(p: u64) -> Result<SeifertData, AlexError> {
    let q = odd_prime(p)?;
    seifert_from_m(format!("K'_{p}"), &[vec![0, -(q - 1) / 2], vec![-(q + 1) / 2, q + 1]], 1)
}
