//! Alexander quandles `(F(p, h(t)), a * b = t̄ a + (1 - t̄) b)`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::field_poly::{
    build_extension_field, parse_laurent_mod, DensePoly, ExtensionField, FieldElem, FieldError, PrimeModulus,
};

/// Largest quandle order accepted by the exhaustive axiom check (the
/// distributivity test visits every triple).
pub const AXIOM_CHECK_LIMIT: usize = 343;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuandleError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("element does not belong to {0}")]
    ForeignElement(String),
    #[error("quandle of order {0} is too large for the exhaustive check (limit {AXIOM_CHECK_LIMIT})")]
    TooLarge(u128),
    #[error("bad quandle spec '{0}': {1}")]
    Spec(String, String),
}

/// An Alexander quandle on a finite field, with its type `t_X` computed at
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderQuandle {
    field: ExtensionField,
    tbar: FieldElem,
    type_x: u64,
}

impl AlexanderQuandle {
    pub fn new(field: ExtensionField) -> Self {
        let tbar = field.tbar();
        let type_x = compute_type(&field);
        AlexanderQuandle { field, tbar, type_x }
    }

    /// Quandle on `F(p, h)` from a prime and a polynomial string.
    pub fn from_parts(p: u64, h: &str) -> Result<Self, QuandleError> {
        let m = PrimeModulus::new(p)?;
        let h = parse_laurent_mod(h, m)?;
        Ok(Self::new(build_extension_field(m, &h)?))
    }

    /// The dihedral quandle `D_p = F(p, 1 + t)`.
    pub fn dihedral(p: u64) -> Result<Self, QuandleError> {
        Self::from_parts(p, "1 + t")
    }

    pub fn field(&self) -> &ExtensionField {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn h(&self) -> &DensePoly {
        self.field.h()
    }

    pub fn tbar(&self) -> &FieldElem {
        &self.tbar
    }

    /// Whether `h ≐ t - 1`.
    pub fn is_trivial(&self) -> bool {
        self.type_x == 1
    }

    /// The type `t_X`.
    pub fn quandle_type(&self) -> u64 {
        self.type_x
    }

    /// Reduce an integer label into `Z_{t_X}`.
    pub fn reduce_label(&self, z: i64) -> u64 {
        z.rem_euclid(self.type_x as i64) as u64
    }

    /// `a *^m b = t̄^m a + (1 - t̄^m) b`; `m` is read modulo `t_X`.
    pub fn apply(&self, a: &FieldElem, b: &FieldElem, m: i64) -> FieldElem {
        let f = &self.field;
        let tm = f.tbar_pow(self.reduce_label(m) as i64);
        let one_minus = f.sub(&f.one(), &tm);
        f.add(&f.mul(&tm, a), &f.mul(&one_minus, b))
    }

    /// Spec string, e.g. `p=11 h=1 + t^2`.
    pub fn spec(&self) -> String {
        format!("p={} h={}", self.p(), self.h())
    }
}

/// `a *^m b` with field-membership checks.
pub fn quandle_apply(
    x: &AlexanderQuandle,
    a: &FieldElem,
    b: &FieldElem,
    m: i64,
) -> Result<FieldElem, QuandleError> {
    let n = x.field.degree();
    let p = x.p();
    for e in [a, b] {
        if e.coeffs().len() != n || e.coeffs().iter().any(|&c| c >= p) {
            return Err(QuandleError::ForeignElement(x.field.to_string()));
        }
    }
    Ok(x.apply(a, b, m))
}

/// Type of an Alexander quandle: 1 if `h ≐ t - 1`, else the least `m >= 2`
/// with `h | p_m(t) = 1 + t + ... + t^(m-1)`.
pub fn quandle_type(x: &AlexanderQuandle) -> u64 {
    x.type_x
}

fn compute_type(field: &ExtensionField) -> u64 {
    let m = field.modulus();
    if field.h() == &DensePoly::from_i64s(m, &[-1, 1]) {
        return 1;
    }
    let tb = field.tbar();
    let q = field.order().expect("field order fits in u128");
    if q > TYPE_LOOP_LIMIT {
        return multiplicative_order(field, &tb, q - 1);
    }
    // p_m(t̄) via p_{m+1} = t̄ p_m + 1; h | p_m iff p_m(t̄) = 0 in F(p, h)
    let mut acc = field.one();
    let mut k: u64 = 1;
    loop {
        acc = field.add(&field.mul(&acc, &tb), &field.one());
        k += 1;
        if field.is_zero(&acc) {
            return k;
        }
        assert!((k as u128) <= q, "type search exceeded the field order");
    }
}

/// Above this field order the type is read off as the multiplicative order
/// of `t̄` (for `t̄ != 1`, `p_m(t̄) = (t̄^m - 1)/(t̄ - 1)`).
const TYPE_LOOP_LIMIT: u128 = 1 << 20;

fn multiplicative_order(field: &ExtensionField, a: &FieldElem, group_order: u128) -> u64 {
    let mut n = group_order;
    for (r, _) in num_prime::nt_funcs::factorize128(group_order) {
        while n % r == 0 && field.pow(a, n / r) == field.one() {
            n /= r;
        }
    }
    u64::try_from(n).expect("quandle type fits in u64")
}

/// Independent route to `t_X`: the least common multiple of the orders of the
/// right translations `S_b : a -> a * b`, computed on the operation table.
pub fn type_from_translations(x: &AlexanderQuandle) -> Result<u64, QuandleError> {
    let table = OperationTable::from_quandle(x)?;
    let q = table.order();
    let mut lcm = 1u64;
    for b in 0..q {
        let mut order = 0u64;
        let mut current: Vec<usize> = (0..q).collect();
        loop {
            current = current.iter().map(|&a| table.op(a, b)).collect();
            order += 1;
            if current.iter().enumerate().all(|(i, &a)| i == a) {
                break;
            }
        }
        lcm = lcm.lcm(&order);
    }
    Ok(lcm)
}

/// A finite binary operation on `0..order`, the interface the axiom checker
/// works against.
pub trait FiniteQuandle {
    fn order(&self) -> usize;
    fn op(&self, a: usize, b: usize) -> usize;
}

/// Explicit operation table, `table[a][b] = a * b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperationTable {
    table: Vec<Vec<usize>>,
}

impl OperationTable {
    pub fn new(table: Vec<Vec<usize>>) -> Self {
        OperationTable { table }
    }

    pub fn from_quandle(x: &AlexanderQuandle) -> Result<Self, QuandleError> {
        let q = x
            .field
            .order_usize()
            .filter(|&q| q <= AXIOM_CHECK_LIMIT)
            .ok_or(QuandleError::TooLarge(x.field.order().unwrap_or(u128::MAX)))?;
        let elems = x.field.elements().expect("small field");
        let table = (0..q)
            .map(|a| (0..q).map(|b| x.field.index_of(&x.apply(&elems[a], &elems[b], 1))).collect())
            .collect();
        Ok(OperationTable { table })
    }
}

impl FiniteQuandle for OperationTable {
    fn order(&self) -> usize {
        self.table.len()
    }
    fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axiom {
    /// `a * a = a`
    Idempotence,
    /// every `S_b` is a bijection
    RightInvertibility,
    /// `(a * b) * c = (a * c) * (b * c)`
    RightDistributivity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum AxiomCheck {
    Holds,
    Violated { axiom: Axiom, elements: Vec<usize> },
}

impl AxiomCheck {
    pub fn holds(&self) -> bool {
        matches!(self, AxiomCheck::Holds)
    }
}

/// Exhaustive check of the quandle axioms; reports the first violation found
/// in the order Q1, Q2, Q3.
pub fn verify_axioms<Q: FiniteQuandle>(x: &Q) -> Result<AxiomCheck, QuandleError> {
    let q = x.order();
    if q > AXIOM_CHECK_LIMIT {
        return Err(QuandleError::TooLarge(q as u128));
    }
    for a in 0..q {
        if x.op(a, a) != a {
            return Ok(AxiomCheck::Violated { axiom: Axiom::Idempotence, elements: vec![a] });
        }
    }
    for b in 0..q {
        let mut seen = vec![None; q];
        for a in 0..q {
            let c = x.op(a, b);
            if c >= q {
                return Ok(AxiomCheck::Violated { axiom: Axiom::RightInvertibility, elements: vec![a, b] });
            }
            if let Some(prev) = seen[c] {
                return Ok(AxiomCheck::Violated { axiom: Axiom::RightInvertibility, elements: vec![prev, a, b] });
            }
            seen[c] = Some(a);
        }
    }
    for a in 0..q {
        for b in 0..q {
            let ab = x.op(a, b);
            for c in 0..q {
                if x.op(ab, c) != x.op(x.op(a, c), x.op(b, c)) {
                    return Ok(AxiomCheck::Violated { axiom: Axiom::RightDistributivity, elements: vec![a, b, c] });
                }
            }
        }
    }
    Ok(AxiomCheck::Holds)
}

/// Check the axioms of an Alexander quandle through its operation table.
pub fn verify_quandle_axioms(x: &AlexanderQuandle) -> Result<AxiomCheck, QuandleError> {
    verify_axioms(&OperationTable::from_quandle(x)?)
}

/// Parses `p=11 h="1+t^2"`, optionally prefixed by the word `quandle`.
impl FromStr for AlexanderQuandle {
    type Err = QuandleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: &str| QuandleError::Spec(s.to_string(), msg.to_string());
        let body = s.trim();
        let body = body.strip_prefix("quandle").unwrap_or(body);
        let mut p = None;
        let mut h = None;
        for (key, value) in split_assignments(body).map_err(|m| bad(&m))? {
            match key.as_str() {
                "p" => p = Some(value.parse::<u64>().map_err(|_| bad("p must be a positive integer"))?),
                "h" => h = Some(value),
                other => return Err(bad(&format!("unknown key '{other}'"))),
            }
        }
        let p = p.ok_or_else(|| bad("missing p"))?;
        let h = h.ok_or_else(|| bad("missing h"))?;
        AlexanderQuandle::from_parts(p, &h)
    }
}

/// Split `k=v k="v with spaces"` into pairs. An unquoted value runs until the
/// next `key=` token, so `h=1 + t` also works.
fn split_assignments(s: &str) -> Result<Vec<(String, String)>, String> {
    let mut out: Vec<(String, String)> = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let eq = rest.find('=').ok_or("expected key=value")?;
        let key = rest[..eq].trim().to_string();
        if key.is_empty() || key.contains(char::is_whitespace) {
            return Err(format!("bad key '{key}'"));
        }
        rest = rest[eq + 1..].trim_start();
        let value;
        if let Some(stripped) = rest.strip_prefix('"') {
            let close = stripped.find('"').ok_or("unterminated quote")?;
            value = stripped[..close].to_string();
            rest = stripped[close + 1..].trim_start();
        } else {
            // next token that looks like `word=`
            let mut end = rest.len();
            for (i, _) in rest.match_indices(char::is_whitespace) {
                let tail = rest[i..].trim_start();
                if let Some(eq2) = tail.find('=') {
                    let cand = &tail[..eq2];
                    if !cand.is_empty() && cand.chars().all(|c| c.is_ascii_alphabetic() || c == '_') {
                        end = i;
                        break;
                    }
                }
            }
            value = rest[..end].trim().to_string();
            rest = rest[end..].trim_start();
        }
        out.push((key, value));
    }
    Ok(out)
}

impl fmt::Display for AlexanderQuandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quandle p={} h=\"{}\"", self.p(), self.h())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: u64, h: &str) -> AlexanderQuandle {
        AlexanderQuandle::from_parts(p, h).unwrap()
    }

    #[test]
    fn dihedral_operation() {
        let d5 = AlexanderQuandle::dihedral(5).unwrap();
        let f = d5.field();
        // 2 * 4 - 1 = 7 = 2 mod 5
        assert_eq!(d5.apply(&f.from_u64(1), &f.from_u64(4), 1), f.from_u64(2));
    }

    #[test]
    fn idempotent_for_every_exponent() {
        let x = q(7, "t + 3");
        let f = x.field();
        for a in f.elements().unwrap() {
            for m in -4..5 {
                assert_eq!(x.apply(&a, &a, m), a);
            }
        }
    }

    #[test]
    fn type_examples() {
        assert_eq!(quandle_type(&AlexanderQuandle::dihedral(3).unwrap()), 2);
        assert_eq!(quandle_type(&AlexanderQuandle::dihedral(13).unwrap()), 2);
        assert_eq!(quandle_type(&q(11, "1 + t^2")), 4);
        assert_eq!(quandle_type(&q(11, "1 + t + t^2")), 3);
        assert_eq!(quandle_type(&q(5, "t - 1")), 1);
        assert_eq!(quandle_type(&q(7, "t + 3")), 3);
    }

    #[test]
    fn order_route_matches_loop() {
        for (p, h) in [(3, "1 + t"), (11, "1 + t^2"), (11, "1 + t + t^2"), (7, "t + 3"), (5, "t^2 + 2"), (13, "t + 5")] {
            let x = q(p, h);
            let f = x.field();
            let order = multiplicative_order(f, x.tbar(), f.order().unwrap() - 1);
            assert_eq!(order, x.quandle_type(), "{x}");
        }
        // large field: t̄ of order dividing 199^4 - 1
        let x = (1..).find_map(|c| AlexanderQuandle::from_parts(199, &format!("t^4 + t + {c}")).ok()).unwrap();
        let f = x.field();
        assert_eq!(f.pow(x.tbar(), x.quandle_type() as u128), f.one());
        assert_eq!((199u128.pow(4) - 1) % x.quandle_type() as u128, 0);
    }

    #[test]
    fn type_exponent_acts_trivially() {
        let x = q(7, "t + 3");
        let f = x.field();
        let elems = f.elements().unwrap();
        for a in &elems {
            for b in &elems {
                assert_eq!(&x.apply(a, b, 3), a);
                assert_eq!(x.apply(a, b, -1), x.apply(a, b, 2));
            }
        }
    }

    #[test]
    fn type_matches_translation_orders() {
        for (p, h) in [(3, "1+t"), (11, "1+t^2"), (11, "1+t+t^2"), (5, "t-1"), (7, "t+3"), (5, "t+2")] {
            let x = q(p, h);
            assert_eq!(type_from_translations(&x).unwrap(), x.quandle_type(), "p={p} h={h}");
        }
    }

    #[test]
    fn axioms() {
        assert!(verify_quandle_axioms(&AlexanderQuandle::dihedral(3).unwrap()).unwrap().holds());
        assert!(verify_quandle_axioms(&q(11, "1 + t^2")).unwrap().holds());
        // a * b := b is idempotent but S_b is constant
        let broken = OperationTable::new((0..3).map(|_| (0..3).collect()).collect());
        match verify_axioms(&broken).unwrap() {
            AxiomCheck::Violated { axiom, .. } => assert_eq!(axiom, Axiom::RightInvertibility),
            AxiomCheck::Holds => panic!("a * b := b is not a quandle"),
        }
        let big = q(19, "1 + t^2");
        assert!(matches!(verify_quandle_axioms(&big), Err(QuandleError::TooLarge(361))));
    }

    #[test]
    fn spec_strings() {
        let x: AlexanderQuandle = "quandle p=11 h=\"1+t^2\"".parse().unwrap();
        assert_eq!(x.quandle_type(), 4);
        let y: AlexanderQuandle = "p=3 h=1+t".parse().unwrap();
        assert_eq!(y.quandle_type(), 2);
        let z: AlexanderQuandle = "h=1 + t p=5".parse().unwrap();
        assert_eq!(z.p(), 5);
        assert!("p=4 h=1+t".parse::<AlexanderQuandle>().is_err());
        assert!("p=5 h=t^2-1".parse::<AlexanderQuandle>().is_err());
        assert!("p=5".parse::<AlexanderQuandle>().is_err());
        assert_eq!(x.to_string().parse::<AlexanderQuandle>().unwrap(), x);
    }
}
