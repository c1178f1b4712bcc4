//! Codes as materialized codeword sets, chain-ring standard forms and types, the order
//! filtration `A_i / B_i`, and brute-force orthogonal codes.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::alphabet::{Alphabet, AlphabetError, Element};
use crate::characters::Duality;

pub type Word = Vec<Element>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("generator {index} has length {found}, expected {expected}")]
    LengthMismatch { index: usize, expected: usize, found: usize },
    #[error("code would exceed the cap of {cap} codewords")]
    TooManyWords { cap: usize },
    #[error("search space of {size} vectors exceeds the cap of {cap}")]
    SpaceTooLarge { size: u128, cap: u128 },
    #[error("operation requires a linear code")]
    NotLinear,
    #[error("duality belongs to {found}, code is over {expected}")]
    AlphabetMismatch { expected: String, found: String },
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeKind {
    /// Closed under addition.
    Additive,
    /// Closed under addition and scalar multiplication by the ring.
    Linear,
}

/// Search caps for closure and brute-force orthogonal computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_words: usize,
    pub max_space: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_words: 1 << 20, max_space: 1 << 24 }
    }
}

/// Which pairing defines the orthogonal code.
#[derive(Debug, Clone, Copy)]
pub enum Pairing<'a> {
    /// `[w,v] = Σ w_i v_i = 0` over a ring.
    Euclidean,
    /// `Π M[w_i][v_i] = 1`, codewords indexing rows.
    Duality(&'a Duality),
}

#[derive(Debug, Clone)]
pub struct Code {
    alphabet: Arc<Alphabet>,
    length: usize,
    kind: CodeKind,
    generators: Vec<Word>,
    additive_generators: Vec<Word>,
    words: Vec<Word>,
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.length == other.length && self.words == other.words
    }
}

impl Eq for Code {}

/// Additive subgroup generated by `gens`, grown coset by coset.
fn additive_closure(alphabet: &Alphabet, length: usize, gens: &[Word], cap: usize) -> Result<Vec<Word>, CodeError> {
    let mut words: Vec<Word> = vec![vec![Element::ZERO; length]];
    let mut members: HashSet<Word> = words.iter().cloned().collect();
    for h in gens {
        if members.contains(h) {
            continue;
        }
        let mut shifts = vec![h.clone()];
        loop {
            let next = add_words(alphabet, shifts.last().unwrap(), h);
            if members.contains(&next) {
                break;
            }
            shifts.push(next);
        }
        if words.len().saturating_mul(shifts.len() + 1) > cap {
            return Err(CodeError::TooManyWords { cap });
        }
        let base = words.clone();
        for s in &shifts {
            for w in &base {
                let sum = add_words(alphabet, w, s);
                members.insert(sum.clone());
                words.push(sum);
            }
        }
    }
    words.sort();
    Ok(words)
}

pub(crate) fn add_words(alphabet: &Alphabet, a: &[Element], b: &[Element]) -> Word {
    a.iter().zip(b).map(|(&x, &y)| alphabet.add(x, y)).collect()
}

fn scale_word(alphabet: &Alphabet, r: Element, w: &[Element]) -> Result<Word, AlphabetError> {
    w.iter().map(|&x| alphabet.mul(r, x)).collect()
}

/// Greedy additive generating set of a subgroup given by its sorted elements.
fn extract_generators(alphabet: &Alphabet, length: usize, words: &[Word]) -> Vec<Word> {
    let mut gens = Vec::new();
    let mut members: HashSet<Word> = HashSet::new();
    members.insert(vec![Element::ZERO; length]);
    for w in words {
        if members.contains(w) {
            continue;
        }
        gens.push(w.clone());
        let base: Vec<Word> = members.iter().cloned().collect();
        let mut shift = w.clone();
        while !members.contains(&shift) {
            for b in &base {
                members.insert(add_words(alphabet, b, &shift));
            }
            shift = add_words(alphabet, &shift, w);
        }
    }
    gens
}

impl Code {
    /// Closure of `generators` under addition, and under scalar multiplication for linear codes.
    pub fn span(
        alphabet: Arc<Alphabet>,
        length: usize,
        generators: Vec<Word>,
        kind: CodeKind,
        limits: Limits,
    ) -> Result<Code, CodeError> {
        for (index, g) in generators.iter().enumerate() {
            if g.len() != length {
                return Err(CodeError::LengthMismatch { index, expected: length, found: g.len() });
            }
            for &x in g {
                alphabet.element(x.index())?;
            }
        }
        let mut additive: Vec<Word> = match kind {
            CodeKind::Additive => generators.clone(),
            CodeKind::Linear => {
                if !alphabet.is_ring() {
                    return Err(AlphabetError::NotARing.into());
                }
                let basis: Vec<Element> = alphabet.additive_generators().into_iter().map(|(b, _)| b).collect();
                let mut out = Vec::new();
                for g in &generators {
                    for &b in &basis {
                        out.push(scale_word(&alphabet, b, g)?);
                    }
                }
                out
            }
        };
        additive.retain(|w| w.iter().any(|&x| x != Element::ZERO));
        additive.dedup();
        let words = additive_closure(&alphabet, length, &additive, limits.max_words)?;
        Ok(Code { alphabet, length, kind, generators, additive_generators: additive, words })
    }

    /// A code from an already closed, sorted set of words.
    fn from_closed_words(alphabet: Arc<Alphabet>, length: usize, kind: CodeKind, words: Vec<Word>) -> Code {
        let additive = extract_generators(&alphabet, length, &words);
        Code { alphabet, length, kind, generators: additive.clone(), additive_generators: additive, words }
    }

    pub fn zero(alphabet: Arc<Alphabet>, length: usize) -> Code {
        let kind = if alphabet.is_ring() { CodeKind::Linear } else { CodeKind::Additive };
        Code::span(alphabet, length, Vec::new(), kind, Limits::default()).expect("zero code")
    }

    /// The whole space `A^n`.
    pub fn full_space(alphabet: Arc<Alphabet>, length: usize, limits: Limits) -> Result<Code, CodeError> {
        let gens: Vec<Word> = (0..length)
            .flat_map(|i| {
                alphabet.additive_generators().into_iter().map(move |(g, _)| {
                    let mut w = vec![Element::ZERO; length];
                    w[i] = g;
                    w
                })
            })
            .collect();
        let kind = if alphabet.is_ring() { CodeKind::Linear } else { CodeKind::Additive };
        let mut code = Code::span(alphabet, length, gens, CodeKind::Additive, limits)?;
        code.kind = kind;
        Ok(code)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    /// Nonzero words whose additive span is the code.
    pub fn additive_generators(&self) -> &[Word] {
        &self.additive_generators
    }

    /// Codewords in lexicographic order of element indices.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn contains(&self, w: &[Element]) -> bool {
        self.words.binary_search_by(|x| x.as_slice().cmp(w)).is_ok()
    }

    /// Brute-force orthogonal over `A^n`, testing candidates against additive generators only.
    pub fn orthogonal(&self, pairing: Pairing<'_>, limits: Limits) -> Result<Code, CodeError> {
        let alphabet = &*self.alphabet;
        let size = alphabet.size() as u128;
        let space = (0..self.length).try_fold(1u128, |acc, _| acc.checked_mul(size)).unwrap_or(u128::MAX);
        if space > limits.max_space {
            return Err(CodeError::SpaceTooLarge { size: space, cap: limits.max_space });
        }
        let kind = match pairing {
            Pairing::Euclidean => {
                if !alphabet.is_ring() {
                    return Err(AlphabetError::NotARing.into());
                }
                CodeKind::Linear
            }
            Pairing::Duality(d) => {
                if **d.alphabet() != *alphabet {
                    return Err(CodeError::AlphabetMismatch {
                        expected: alphabet.name(),
                        found: d.alphabet().name(),
                    });
                }
                // the orthogonal of a submodule under any duality is the Euclidean one
                self.kind
            }
        };
        let gens = &self.additive_generators;
        let n = self.length;
        let accept = |v: &[Element]| -> bool {
            match pairing {
                Pairing::Euclidean => gens.iter().all(|g| {
                    let mut acc = Element::ZERO;
                    for (&x, &y) in g.iter().zip(v) {
                        acc = alphabet.add(acc, alphabet.mul(x, y).expect("ring"));
                    }
                    acc == Element::ZERO
                }),
                Pairing::Duality(d) => {
                    let order = d.root_order();
                    gens.iter().all(|g| {
                        g.iter().zip(v).map(|(&x, &y)| d.exponent(x, y) as u64).sum::<u64>() % order == 0
                    })
                }
            }
        };
        let space = space as u64;
        const CHUNK: u64 = 1 << 12;
        let chunks = space.div_ceil(CHUNK);
        let words: Vec<Word> = (0..chunks)
            .into_par_iter()
            .flat_map_iter(|c| {
                let start = c * CHUNK;
                let end = (start + CHUNK).min(space);
                let mut found = Vec::new();
                let mut v = vec![Element::ZERO; n];
                for idx in start..end {
                    let mut x = idx;
                    for slot in v.iter_mut().rev() {
                        *slot = Element::new((x % size as u64) as usize);
                        x /= size as u64;
                    }
                    if accept(&v) {
                        found.push(v.clone());
                    }
                }
                found
            })
            .collect();
        if words.len() > limits.max_words {
            return Err(CodeError::TooManyWords { cap: limits.max_words });
        }
        Ok(Code::from_closed_words(self.alphabet.clone(), n, kind, words))
    }

    /// Row-reduces the generators into the block upper-triangular chain-ring form.
    pub fn standard_form(&self) -> Result<StandardForm, CodeError> {
        if self.kind != CodeKind::Linear {
            return Err(CodeError::NotLinear);
        }
        standard_form(&self.alphabet, self.length, &self.generators)
    }

    /// Subcodes `A_i` of words of order at most `γ^i` and sets `B_i` of order exactly `γ^i`.
    pub fn filtration(&self) -> Result<Filtration, CodeError> {
        let chain = self.alphabet.require_chain()?;
        let e = chain.e() as usize;
        let mut b = vec![Vec::new(); e + 1];
        for w in &self.words {
            b[word_order(&self.alphabet, w)? as usize].push(w.clone());
        }
        let mut a: Vec<Vec<Word>> = Vec::with_capacity(e + 1);
        for level in &b {
            let mut next = a.last().cloned().unwrap_or_default();
            next.extend(level.iter().cloned());
            next.sort();
            a.push(next);
        }
        Ok(Filtration { a, b })
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} code of length {} over {} with {} words", self.kind, self.length, self.alphabet, self.size())
    }
}

/// Chain order of a vector: the largest chain order among its coordinates.
pub fn word_order(alphabet: &Alphabet, w: &[Element]) -> Result<u32, AlphabetError> {
    let chain = alphabet.require_chain()?;
    Ok(w.iter().map(|x| chain.orders()[x.index()]).max().unwrap_or(0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    pub a: Vec<Vec<Word>>,
    pub b: Vec<Vec<Word>>,
}

impl Filtration {
    pub fn b_sizes(&self) -> Vec<u128> {
        self.b.iter().map(|s| s.len() as u128).collect()
    }
}

/// Type `(k_0, …, k_{e-1})` of a linear code of length `n` over a chain ring of index `e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypeProfile {
    pub n: usize,
    pub k: Vec<usize>,
}

impl TypeProfile {
    pub fn e(&self) -> usize {
        self.k.len()
    }

    /// `k_e = n - Σ k_i`.
    pub fn k_e(&self) -> usize {
        self.n - self.k.iter().sum::<usize>()
    }

    /// `log_q |C| = Σ (e-i) k_i`.
    pub fn log_size(&self) -> u64 {
        let e = self.e();
        self.k.iter().enumerate().map(|(i, &k)| ((e - i) * k) as u64).sum()
    }

    pub fn cardinality(&self, q: u64) -> u128 {
        (q as u128).pow(self.log_size() as u32)
    }

    /// `log_q |A_i|` for `i = 0..=e`.
    pub fn subcode_log_sizes(&self) -> Vec<u64> {
        let e = self.e();
        (0..=e)
            .map(|i| {
                if i == 0 {
                    return 0;
                }
                let low: usize = self.k[..=e - i].iter().sum();
                let high: usize = (e - i + 1..e).map(|j| (e - j) * self.k[j]).sum();
                (i * low + high) as u64
            })
            .collect()
    }

    /// `|B_0| = 1`, `|B_i| = |A_i| - |A_{i-1}|`.
    pub fn b_sizes(&self, q: u64) -> Vec<u128> {
        let logs = self.subcode_log_sizes();
        let sizes: Vec<u128> = logs.iter().map(|&l| (q as u128).pow(l as u32)).collect();
        (0..sizes.len()).map(|i| if i == 0 { 1 } else { sizes[i] - sizes[i - 1] }).collect()
    }

    /// Type of the orthogonal code: `(k_e, k_{e-1}, …, k_1)`.
    pub fn dual(&self) -> TypeProfile {
        let e = self.e();
        let mut k = vec![self.k_e()];
        k.extend((1..e).rev().map(|i| self.k[i]));
        TypeProfile { n: self.n, k }
    }
}

impl fmt::Display for TypeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.k.iter().map(usize::to_string).collect();
        write!(f, "({};{})", self.n, ks.join(","))
    }
}

/// Standard-form generator matrix in permuted coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    pub rows: Vec<Word>,
    /// `permutation[j]` is the original coordinate placed at column `j`.
    pub permutation: Vec<usize>,
    /// Valuation of each row's pivot, nondecreasing.
    pub pivot_levels: Vec<usize>,
    pub profile: TypeProfile,
}

impl StandardForm {
    /// Rows mapped back to the original coordinate order.
    pub fn rows_in_original_order(&self) -> Vec<Word> {
        self.rows
            .iter()
            .map(|r| {
                let mut out = vec![Element::ZERO; r.len()];
                for (j, &x) in r.iter().enumerate() {
                    out[self.permutation[j]] = x;
                }
                out
            })
            .collect()
    }
}

/// `γ`-valuation pivoting: at level `v` pick any entry of valuation exactly `v`, normalise it
/// to `γ^v` and clear its column below.
pub fn standard_form(alphabet: &Alphabet, length: usize, generators: &[Word]) -> Result<StandardForm, CodeError> {
    let chain = alphabet.require_chain()?;
    let (q, e) = (chain.q() as usize, chain.e() as usize);
    let valuation = |x: Element| e - chain.orders()[x.index()] as usize;
    let shift_down = |x: Element, v: usize| Element::new(x.index() / q.pow(v as u32));

    let mut rows: Vec<Word> = generators.to_vec();
    let mut permutation: Vec<usize> = (0..length).collect();
    let mut k = vec![0usize; e];
    let mut pivot_levels = Vec::new();
    let mut top = 0;
    for level in 0..e {
        loop {
            let found = (top..rows.len())
                .flat_map(|r| (top..length).map(move |c| (r, c)))
                .find(|&(r, c)| valuation(rows[r][c]) == level);
            let Some((r, c)) = found else { break };
            rows.swap(top, r);
            for row in rows.iter_mut() {
                row.swap(top, c);
            }
            permutation.swap(top, c);

            let unit = shift_down(rows[top][top], level);
            let inv = alphabet.inverse(unit).expect("pivot cofactor is a unit");
            rows[top] = scale_word(alphabet, inv, &rows[top])?;
            let pivot = rows[top].clone();
            for row in rows.iter_mut().skip(top + 1) {
                let entry = row[top];
                if entry == Element::ZERO {
                    continue;
                }
                let factor = alphabet.neg(shift_down(entry, level));
                let scaled = scale_word(alphabet, factor, &pivot)?;
                *row = add_words(alphabet, row, &scaled);
            }
            k[level] += 1;
            pivot_levels.push(level);
            top += 1;
        }
    }
    rows.truncate(top);
    Ok(StandardForm { rows, permutation, pivot_levels, profile: TypeProfile { n: length, k } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::Duality;

    fn el(i: usize) -> Element {
        Element::new(i)
    }

    fn w(xs: &[usize]) -> Word {
        xs.iter().map(|&x| el(x)).collect()
    }

    fn z(n: u64) -> Arc<Alphabet> {
        Arc::new(Alphabet::zn(n).unwrap())
    }

    fn idx(words: &[Word]) -> Vec<Vec<usize>> {
        words.iter().map(|v| v.iter().map(|x| x.index()).collect()).collect()
    }

    #[test]
    fn z4_code_from_symmetric_example() {
        let c = Code::span(z(4), 3, vec![w(&[0, 1, 2]), w(&[2, 0, 0])], CodeKind::Linear, Limits::default()).unwrap();
        assert_eq!(
            idx(c.words()),
            vec![
                vec![0, 0, 0],
                vec![0, 1, 2],
                vec![0, 2, 0],
                vec![0, 3, 2],
                vec![2, 0, 0],
                vec![2, 1, 2],
                vec![2, 2, 0],
                vec![2, 3, 2]
            ]
        );
    }

    #[test]
    fn z16_one_eight() {
        let c = Code::span(z(16), 2, vec![w(&[1, 8])], CodeKind::Linear, Limits::default()).unwrap();
        let expected: Vec<Vec<usize>> = (0..16).map(|a| vec![a, if a % 2 == 1 { 8 } else { 0 }]).collect();
        assert_eq!(idx(c.words()), expected);
        let sf = c.standard_form().unwrap();
        assert_eq!(sf.profile.k, vec![1, 0, 0, 0]);
        assert_eq!(idx(&sf.rows), vec![vec![1, 8]]);
        assert_eq!(sf.profile.cardinality(2), 16);
    }

    #[test]
    fn empty_generators_give_zero_code() {
        let c = Code::span(z(5), 3, vec![], CodeKind::Linear, Limits::default()).unwrap();
        assert_eq!(idx(c.words()), vec![vec![0, 0, 0]]);
        let g = Arc::new(Alphabet::group(&[2, 3]).unwrap());
        assert_eq!(Code::zero(g, 2).size(), 1);
    }

    #[test]
    fn caps_and_shape_errors() {
        let limits = Limits { max_words: 10, max_space: 100 };
        assert_eq!(
            Code::span(z(16), 1, vec![w(&[1])], CodeKind::Linear, limits),
            Err(CodeError::TooManyWords { cap: 10 })
        );
        assert!(matches!(
            Code::span(z(4), 2, vec![w(&[1])], CodeKind::Linear, limits),
            Err(CodeError::LengthMismatch { .. })
        ));
        let g = Arc::new(Alphabet::group(&[2]).unwrap());
        assert!(Code::span(g, 1, vec![w(&[1])], CodeKind::Linear, limits).is_err());
        let zero = Code::zero(z(16), 2);
        assert_eq!(
            zero.orthogonal(Pairing::Euclidean, limits),
            Err(CodeError::SpaceTooLarge { size: 256, cap: 100 })
        );
    }

    #[test]
    fn diagonal_code_type_and_filtration() {
        let gens = vec![w(&[1, 0, 0, 0]), w(&[0, 2, 0, 0]), w(&[0, 0, 4, 0]), w(&[0, 0, 0, 8])];
        let c = Code::span(z(16), 4, gens.clone(), CodeKind::Linear, Limits::default()).unwrap();
        assert_eq!(c.size(), 1024);
        let sf = c.standard_form().unwrap();
        assert_eq!(sf.profile.k, vec![1, 1, 1, 1]);
        assert_eq!(sf.profile.k_e(), 0);
        assert_eq!(idx(&sf.rows), idx(&gens));
        assert_eq!(sf.profile.to_string(), "(4;1,1,1,1)");
        let f = c.filtration().unwrap();
        assert_eq!(f.b_sizes(), vec![1, 15, 112, 384, 512]);
        assert_eq!(sf.profile.b_sizes(2), vec![1, 15, 112, 384, 512]);
        assert_eq!(sf.profile.dual().k, vec![0, 1, 1, 1]);
    }

    #[test]
    fn one_eight_filtration_sets() {
        let c = Code::span(z(16), 2, vec![w(&[1, 8])], CodeKind::Linear, Limits::default()).unwrap();
        let f = c.filtration().unwrap();
        assert_eq!(idx(&f.b[0]), vec![vec![0, 0]]);
        assert_eq!(idx(&f.b[1]), vec![vec![8, 0]]);
        assert_eq!(idx(&f.b[2]), vec![vec![4, 0], vec![12, 0]]);
        assert_eq!(idx(&f.b[3]), vec![vec![2, 0], vec![6, 0], vec![10, 0], vec![14, 0]]);
        assert_eq!(idx(&f.b[4]), (0..8).map(|i| vec![2 * i + 1, 8]).collect::<Vec<_>>());
    }

    #[test]
    fn z4_gamma_level_pivot() {
        let c = Code::span(z(4), 2, vec![w(&[2, 2])], CodeKind::Linear, Limits::default()).unwrap();
        let sf = c.standard_form().unwrap();
        assert_eq!(sf.profile.k, vec![0, 1]);
        assert_eq!(idx(&sf.rows), vec![vec![2, 2]]);
    }

    #[test]
    fn standard_form_records_column_permutation() {
        let c = Code::span(z(4), 3, vec![w(&[2, 0, 3])], CodeKind::Linear, Limits::default()).unwrap();
        let sf = c.standard_form().unwrap();
        assert_eq!(sf.profile.k, vec![1, 0]);
        assert_eq!(sf.permutation[0], 2);
        let back = Code::span(z(4), 3, sf.rows_in_original_order(), CodeKind::Linear, Limits::default()).unwrap();
        assert_eq!(back, c);
        let additive = Code::span(z(4), 3, vec![w(&[2, 0, 3])], CodeKind::Additive, Limits::default()).unwrap();
        assert_eq!(additive.standard_form(), Err(CodeError::NotLinear));
    }

    #[test]
    fn orthogonal_of_one_eight() {
        let r = z(16);
        let c = Code::span(r.clone(), 2, vec![w(&[1, 8])], CodeKind::Linear, Limits::default()).unwrap();
        let dual = c.orthogonal(Pairing::Euclidean, Limits::default()).unwrap();
        let expected = Code::span(r.clone(), 2, vec![w(&[8, 1])], CodeKind::Linear, Limits::default()).unwrap();
        assert_eq!(dual, expected);
        assert_eq!(dual.size(), 16);
        let m = Duality::standard(r.clone());
        assert_eq!(c.orthogonal(Pairing::Duality(&m), Limits::default()).unwrap(), expected);
        let full = Code::full_space(r.clone(), 2, Limits::default()).unwrap();
        assert_eq!(full.size(), 256);
        assert_eq!(full.orthogonal(Pairing::Euclidean, Limits::default()).unwrap(), Code::zero(r, 2));
    }

    #[test]
    fn dual_types() {
        let t = TypeProfile { n: 2, k: vec![1, 0, 0, 0] };
        assert_eq!(t.dual().k, vec![1, 0, 0, 0]);
        let zero = TypeProfile { n: 3, k: vec![0, 0] };
        assert_eq!(zero.dual().k, vec![3, 0]);
    }

    #[test]
    fn free_code_b_sizes() {
        // (I_2 | A) over Z_27
        let r = z(27);
        let c = Code::span(r, 3, vec![w(&[1, 0, 5]), w(&[0, 1, 3])], CodeKind::Linear, Limits::default()).unwrap();
        let f = c.filtration().unwrap();
        let p: u128 = 3;
        let expected: Vec<u128> =
            (0..=3).map(|i| if i == 0 { 1 } else { p.pow(2 * i) - p.pow(2 * (i - 1)) }).collect();
        assert_eq!(f.b_sizes(), expected);
    }
}
