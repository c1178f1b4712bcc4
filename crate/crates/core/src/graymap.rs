//! Homogeneous weight and the Gray map of a chain ring into its residue field.

use std::sync::Arc;

use thiserror::Error;

use crate::alphabet::{digits, Alphabet, AlphabetError, Element};
use crate::codes::{Code, Word};
use crate::enumerators::{hamming_we_of_words, MultiPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrayError {
    #[error("Y must have {expected} distinct columns of length {len} over F_{q}")]
    BadColumns { expected: usize, len: usize, q: u64 },
    #[error("Gray parameters are for {expected}, code is over {found}")]
    AlphabetMismatch { expected: String, found: String },
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
}

/// The matrix `Y` whose columns are all vectors of `F_q^{e-1}`.
#[derive(Debug, Clone)]
pub struct GrayParams {
    alphabet: Arc<Alphabet>,
    residue: Arc<Alphabet>,
    q: u64,
    e: usize,
    columns: Vec<Vec<u64>>,
}

impl GrayParams {
    /// Column `j` holds the little-endian base-`q` digits of `j`.
    pub fn new(alphabet: Arc<Alphabet>) -> Result<Self, GrayError> {
        let chain = alphabet.require_chain()?;
        let (q, e) = (chain.q(), chain.e() as usize);
        let count = q.pow(e as u32 - 1);
        let columns = (0..count).map(|j| digits(j, q, e - 1)).collect();
        Self::with_columns(alphabet, columns)
    }

    /// Uses the given columns, which must list every vector of `F_q^{e-1}` once.
    pub fn with_columns(alphabet: Arc<Alphabet>, columns: Vec<Vec<u64>>) -> Result<Self, GrayError> {
        let chain = alphabet.require_chain()?;
        let (q, e) = (chain.q(), chain.e() as usize);
        let expected = q.pow(e as u32 - 1) as usize;
        let bad = GrayError::BadColumns { expected, len: e - 1, q };
        if columns.len() != expected || columns.iter().any(|c| c.len() != e - 1 || c.iter().any(|&d| d >= q)) {
            return Err(bad);
        }
        let mut sorted = columns.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != expected {
            return Err(bad);
        }
        let residue = Arc::new(alphabet.residue_field()?);
        Ok(GrayParams { alphabet, residue, q, e, columns })
    }

    /// Reorders the columns: new column `j` is old column `perm[j]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self, GrayError> {
        let columns = perm.iter().map(|&j| self.columns.get(j).cloned().unwrap_or_default()).collect();
        Self::with_columns(self.alphabet.clone(), columns)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn residue_field(&self) -> &Arc<Alphabet> {
        &self.residue
    }

    /// Size of the residue field.
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn columns(&self) -> &[Vec<u64>] {
        &self.columns
    }

    /// Length `q^{e-1}` of the image of one ring element.
    pub fn image_length(&self) -> usize {
        self.columns.len()
    }

    /// `φ(r)_j = Σ_{i<e-1} r̄_i Y_{i,j} + r̄_{e-1}`.
    pub fn phi(&self, r: Element) -> Result<Word, GrayError> {
        let rd = self.alphabet.residue_digits(r)?;
        let f = &*self.residue;
        let last = Element::new(rd[self.e - 1] as usize);
        self.columns
            .iter()
            .map(|col| {
                let mut acc = last;
                for (i, &y) in col.iter().enumerate() {
                    let term = f.mul(Element::new(rd[i] as usize), Element::new(y as usize))?;
                    acc = f.add(acc, term);
                }
                Ok(acc)
            })
            .collect()
    }

    /// `Φ`, applied coordinatewise and concatenated.
    pub fn gray_map(&self, word: &[Element]) -> Result<Word, GrayError> {
        let mut out = Vec::with_capacity(word.len() * self.image_length());
        for &r in word {
            out.extend(self.phi(r)?);
        }
        Ok(out)
    }

    /// `Φ(C)` in the codeword order of `C`.
    pub fn gray_image(&self, code: &Code) -> Result<Vec<Word>, GrayError> {
        code.words().iter().map(|w| self.gray_map(w)).collect()
    }

    pub fn gray_hamming_we(&self, code: &Code) -> Result<MultiPoly<i64>, GrayError> {
        Ok(hamming_we_of_words(code.length() * self.image_length(), &self.gray_image(code)?))
    }
}

/// `0`, `q^{e-1}` on the minimal ideal, `(q-1) q^{e-2}` elsewhere.
pub fn homogeneous_weight(alphabet: &Alphabet, c: Element) -> Result<u64, AlphabetError> {
    let chain = alphabet.require_chain()?;
    let (q, e) = (chain.q(), chain.e());
    Ok(match alphabet.ord_chain(c)? {
        0 => 0,
        1 => q.pow(e - 1),
        _ => (q - 1) * q.pow(e - 2),
    })
}

pub fn homogeneous_word_weight(alphabet: &Alphabet, w: &[Element]) -> Result<u64, AlphabetError> {
    w.iter().map(|&c| homogeneous_weight(alphabet, c)).sum()
}

pub fn hamming_weight(w: &[Element]) -> u64 {
    w.iter().filter(|&&x| x != Element::ZERO).count() as u64
}

/// `x_0 ← x^Q`, `x_1 ← y^Q`, `x_i ← x^{Q-h} y^h` for `i ≥ 2`, with `Q = q^{e-1}`, `h = (q-1)q^{e-2}`.
pub fn crw_substitution(crw: &MultiPoly<i64>, q: u64, e: u32) -> MultiPoly<i64> {
    let big = q.pow(e - 1) as u32;
    let h = if e >= 2 { ((q - 1) * q.pow(e - 2)) as u32 } else { 0 };
    let images: Vec<Vec<u32>> = (0..crw.num_vars())
        .map(|i| match i {
            0 => vec![big, 0],
            1 => vec![0, big],
            _ => vec![big - h, h],
        })
        .collect();
    crw.substitute_monomials(vec!["x".into(), "y".into()], &images)
}

/// Outcome of comparing `W_{Φ(C)}` with the substituted chain enumerator.
#[derive(Debug, Clone, PartialEq)]
pub struct GrayReport {
    pub image: Vec<Word>,
    pub image_we: MultiPoly<i64>,
    pub substituted: MultiPoly<i64>,
    /// Codewords with `w(Φ(c)) ≠ w_Hom(c)`.
    pub isometry_failures: usize,
    pub injective: bool,
}

impl GrayReport {
    pub fn verified(&self) -> bool {
        self.image_we == self.substituted && self.isometry_failures == 0 && self.injective
    }
}

pub fn gray_report(code: &Code, params: &GrayParams) -> Result<GrayReport, GrayError> {
    let alphabet = code.alphabet();
    if **alphabet != *params.alphabet {
        return Err(GrayError::AlphabetMismatch { expected: params.alphabet.name(), found: alphabet.name() });
    }
    let chain = alphabet.require_chain()?;
    let image = params.gray_image(code)?;
    let mut isometry_failures = 0;
    for (w, g) in code.words().iter().zip(&image) {
        if homogeneous_word_weight(alphabet, w)? != hamming_weight(g) {
            isometry_failures += 1;
        }
    }
    let mut distinct = image.clone();
    distinct.sort();
    distinct.dedup();
    let injective = distinct.len() == image.len();
    let crw = crate::enumerators::enumerate(code, &crate::enumerators::Partition::order(alphabet.clone()).expect("chain"))
        .expect("same alphabet");
    Ok(GrayReport {
        image_we: hamming_we_of_words(code.length() * params.image_length(), &image),
        substituted: crw_substitution(&crw, chain.q(), chain.e()),
        image,
        isometry_failures,
        injective,
    })
}
