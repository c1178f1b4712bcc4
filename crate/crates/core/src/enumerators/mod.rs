//! Weight enumerators, MacWilliams transforms and the order-enumerator square.

pub mod krawtchouk;
pub mod partition;
pub mod poly;

use std::collections::HashMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::alphabet::{AlphabetError, Element};
use crate::characters::{Duality, DualityError};
use crate::codes::{word_order, Code, CodeError, Limits, Pairing, TypeProfile};
use crate::cyclotomic::CycError;

pub use krawtchouk::{hamming_substitution, KrawtchoukMatrix};
pub use partition::{LambdaMode, Partition, PartitionFile, PartitionKind};
pub use poly::{numbered_vars, Coefficient, MultiPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("IncompatiblePartition: class {class} rows {a} and {a2} differ in the sum over class {column}")]
    IncompatiblePartition { class: usize, a: Element, a2: Element, column: usize },
    #[error("NonIntegralResult: {0}")]
    NonIntegralResult(String),
    #[error("NegativeCoefficient: {0}")]
    NegativeCoefficient(i64),
    #[error("NotAValidType: {0}")]
    NotAValidType(String),
    #[error("expected {expected} variables, found {found}")]
    VariableCount { expected: usize, found: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid lambda: {0}")]
    BadLambda(String),
    #[error("duality belongs to {found}, partition is over {expected}")]
    AlphabetMismatch { expected: String, found: String },
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Duality(#[from] DualityError),
    #[error(transparent)]
    Cyclotomic(#[from] CycError),
}

impl EnumError {
    /// Whether the error is a failed identity rather than bad input.
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            EnumError::IncompatiblePartition { .. }
                | EnumError::NonIntegralResult(_)
                | EnumError::NegativeCoefficient(_)
                | EnumError::NotAValidType(_)
        )
    }
}

/// `Σ_c Π_i x_i^{N_i(c)}` with `N_i(c)` the number of coordinates of `c` in class `i`.
pub fn enumerate(code: &Code, partition: &Partition) -> Result<MultiPoly<i64>, EnumError> {
    if **code.alphabet() != **partition.alphabet() {
        return Err(EnumError::AlphabetMismatch { expected: code.alphabet().name(), found: partition.alphabet().name() });
    }
    let s = partition.len();
    let counts = code
        .words()
        .par_iter()
        .fold(HashMap::new, |mut acc: HashMap<Vec<u32>, i64>, w| {
            let mut e = vec![0u32; s];
            for &x in w {
                e[partition.class_of(x)] += 1;
            }
            *acc.entry(e).or_default() += 1;
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(MultiPoly::from_terms(partition.variable_names(), counts))
}

/// `W_C(x, y) = Σ_c x^{n - wt(c)} y^{wt(c)}`.
pub fn hamming_we(code: &Code) -> MultiPoly<i64> {
    hamming_we_of_words(code.length(), code.words())
}

/// Hamming weight enumerator of an arbitrary list of words of length `n`.
pub fn hamming_we_of_words(n: usize, words: &[Vec<Element>]) -> MultiPoly<i64> {
    let n = n as u32;
    let mut p = MultiPoly::new(vec!["x".into(), "y".into()]);
    for w in words {
        let wt = w.iter().filter(|&&x| x != Element::ZERO).count() as u32;
        p.add_term(vec![n - wt, wt], 1);
    }
    p
}

fn z_vars(e: usize) -> Vec<String> {
    numbered_vars("z", 0, e + 1)
}

/// `Σ_i |B_i| z_i`, counting codewords by chain order.
pub fn ocrw(code: &Code) -> Result<MultiPoly<i64>, EnumError> {
    let e = code.alphabet().require_chain()?.e() as usize;
    let mut p = MultiPoly::new(z_vars(e));
    for w in code.words() {
        let mut ex = vec![0; e + 1];
        ex[word_order(code.alphabet(), w)? as usize] = 1;
        p.add_term(ex, 1);
    }
    Ok(p)
}

/// Sends each monomial to `z_m`, `m` the largest index with a nonzero exponent.
pub fn psi(crw: &MultiPoly<i64>) -> MultiPoly<i64> {
    let vars = z_vars(crw.num_vars().saturating_sub(1));
    let mut out = MultiPoly::new(vars);
    for (e, &c) in crw.terms() {
        let m = e.iter().rposition(|&k| k > 0).unwrap_or(0);
        let mut ex = vec![0; crw.num_vars()];
        ex[m] = 1;
        out.add_term(ex, c);
    }
    out
}

fn exact_log(value: u128, q: u64) -> Option<u64> {
    let q = q as u128;
    let mut v = value;
    let mut k = 0;
    while v > 1 {
        if v % q != 0 {
            return None;
        }
        v /= q;
        k += 1;
    }
    (v == 1).then_some(k)
}

/// Recovers the type from an order enumerator.
pub fn type_from_ocrw(o: &MultiPoly<i64>, q: u64, e: usize, n: usize) -> Result<TypeProfile, EnumError> {
    if o.num_vars() != e + 1 {
        return Err(EnumError::VariableCount { expected: e + 1, found: o.num_vars() });
    }
    let mut counts = vec![0i64; e + 1];
    for (ex, &c) in o.terms() {
        let pos: Vec<usize> = (0..=e).filter(|&i| ex[i] > 0).collect();
        match pos.as_slice() {
            [i] if ex[*i] == 1 => counts[*i] += c,
            _ => return Err(EnumError::NotAValidType("order enumerator must be linear in z".into())),
        }
    }
    if counts.iter().any(|&c| c < 0) {
        return Err(EnumError::NotAValidType("negative class count".into()));
    }
    let mut logs = Vec::with_capacity(e + 1);
    let mut cumulative: u128 = 0;
    for (i, &c) in counts.iter().enumerate() {
        cumulative += c as u128;
        let l = exact_log(cumulative, q)
            .ok_or_else(|| EnumError::NotAValidType(format!("|A_{i}| = {cumulative} is not a power of {q}")))?;
        logs.push(l);
    }
    if logs[0] != 0 {
        return Err(EnumError::NotAValidType("the zero word must be the only word of order 0".into()));
    }
    // D_i = log|A_i| - log|A_{i-1}| = k_0 + … + k_{e-i}
    let d: Vec<i64> = (1..=e).map(|i| logs[i] as i64 - logs[i - 1] as i64).collect();
    if d.windows(2).any(|w| w[1] > w[0]) || d.first().is_some_and(|&d1| d1 > n as i64) {
        return Err(EnumError::NotAValidType(format!("log differences {d:?} are not those of a type of length {n}")));
    }
    let mut k = vec![0usize; e];
    for j in 0..e {
        let hi = d[e - j - 1];
        let lo = if j == 0 { 0 } else { d[e - j] };
        k[j] = (hi - lo) as usize;
    }
    let t = TypeProfile { n, k };
    if t.subcode_log_sizes() != logs {
        return Err(EnumError::NotAValidType("class sizes are inconsistent with every type".into()));
    }
    Ok(t)
}

/// Order enumerator of a code of the given type.
pub fn ocrw_of_type(t: &TypeProfile, q: u64) -> MultiPoly<i64> {
    let e = t.e();
    let mut p = MultiPoly::new(z_vars(e));
    for (i, b) in t.b_sizes(q).into_iter().enumerate() {
        let mut ex = vec![0; e + 1];
        ex[i] = 1;
        p.add_term(ex, b as i64);
    }
    p
}

/// Order enumerator of the orthogonal code, computed from the type alone.
pub fn theta(o: &MultiPoly<i64>, q: u64, e: usize, n: usize) -> Result<MultiPoly<i64>, EnumError> {
    let t = type_from_ocrw(o, q, e, n)?;
    Ok(ocrw_of_type(&t.dual(), q))
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Verified,
    /// Both sides were computed and differ.
    Mismatch,
    Failed(EnumError),
}

impl Outcome {
    pub fn is_verified(&self) -> bool {
        matches!(self, Outcome::Verified)
    }
}

/// `Ψ(Ω_M(CRW_C))` against `ϑ(Ψ(CRW_C))`.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareReport {
    pub psi_of_transform: MultiPoly<i64>,
    pub theta_of_psi: Result<MultiPoly<i64>, EnumError>,
}

impl SquareReport {
    pub fn commutes(&self) -> bool {
        self.theta_of_psi.as_ref().is_ok_and(|t| *t == self.psi_of_transform)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub code_size: usize,
    pub dual_size: usize,
    pub enumerator: MultiPoly<i64>,
    /// Enumerator of the brute-force orthogonal code.
    pub brute_force: MultiPoly<i64>,
    pub transform: Option<MultiPoly<i64>>,
    pub outcome: Outcome,
    pub square: Option<SquareReport>,
}

impl IdentityReport {
    pub fn verified(&self) -> bool {
        self.outcome.is_verified() && self.square.as_ref().is_none_or(SquareReport::commutes)
    }
}

/// Compares the partition enumerator of `C^M` with the transform of the enumerator of `C`.
pub fn verify_identity(
    code: &Code,
    partition: &Partition,
    duality: &Duality,
    limits: Limits,
) -> Result<IdentityReport, EnumError> {
    partition.check_duality(duality)?;
    let dual = code.orthogonal(Pairing::Duality(duality), limits)?;
    let enumerator = enumerate(code, partition)?;
    let brute_force = enumerate(&dual, partition)?;
    let transformed =
        KrawtchoukMatrix::new(partition, duality).and_then(|k| k.transform(&enumerator, code.size() as u64));
    let (transform, outcome) = match transformed {
        Ok(t) if t == brute_force => (Some(t), Outcome::Verified),
        Ok(t) => (Some(t), Outcome::Mismatch),
        Err(err) if err.is_mathematical() => (None, Outcome::Failed(err)),
        Err(err) => return Err(err),
    };
    let square = match (partition.kind(), &transform) {
        (PartitionKind::Order, Some(t)) => {
            let chain = code.alphabet().require_chain()?;
            Some(SquareReport {
                psi_of_transform: psi(t),
                theta_of_psi: theta(&psi(&enumerator), chain.q(), chain.e() as usize, code.length()),
            })
        }
        _ => None,
    };
    Ok(IdentityReport {
        code_size: code.size(),
        dual_size: dual.size(),
        enumerator,
        brute_force,
        transform,
        outcome,
        square,
    })
}
