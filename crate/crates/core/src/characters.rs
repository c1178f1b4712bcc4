//! Character tables (dualities) and the two pairings on `A^n`.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::alphabet::{digits, Alphabet, AlphabetError, AlphabetSpec, Element};
use crate::cyclotomic::CycInt;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DualityError {
    #[error("table must be {size}x{size}, found a row of length {found} or {rows} rows")]
    Shape { size: usize, rows: usize, found: usize },
    #[error("root order {got} does not match the alphabet's character root order {expected}")]
    RootOrder { expected: u64, got: u64 },
    #[error("entry ({row},{col}) = {value} is not reduced modulo {order}")]
    EntryOutOfRange { row: usize, col: usize, value: u64, order: u64 },
    #[error("row {row} is not a character: t[{row}][{b}+{c}] != t[{row}][{b}] + t[{row}][{c}]")]
    RowNotCharacter { row: usize, b: usize, c: usize },
    #[error("row map is not a homomorphism: t[{a}+{a2}][{b}] != t[{a}][{b}] + t[{a2}][{b}]")]
    NotHomomorphism { a: usize, a2: usize, b: usize },
    #[error("rows {a} and {a2} coincide")]
    NotInjective { a: usize, a2: usize },
    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
}

/// A character table `M_{a,b} = ζ_N^{t[a][b]}` certified to come from an isomorphism `A → Â`.
#[derive(Debug, Clone)]
pub struct Duality {
    alphabet: Arc<Alphabet>,
    root_order: u64,
    table: Vec<u32>,
}

impl PartialEq for Duality {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.root_order == other.root_order && self.table == other.table
    }
}

impl Eq for Duality {}

/// Exponents of the generating character `χ` of a ring alphabet, indexed by element.
fn generating_character(alphabet: &Alphabet) -> Option<Vec<u32>> {
    match alphabet.spec() {
        AlphabetSpec::Group { .. } => None,
        AlphabetSpec::Zn { .. } => Some(alphabet.elements().map(|c| c.index() as u32).collect()),
        AlphabetSpec::Fq { p, m, .. } => {
            let trace = absolute_trace(alphabet, *p, *m);
            Some(trace)
        }
        AlphabetSpec::Fqu { p, m, modulus, e } => {
            let field = Alphabet::fq(*p, *m, modulus.clone()).ok()?;
            let trace = absolute_trace(&field, *p, *m);
            let q = p.pow(*m);
            Some(
                alphabet
                    .elements()
                    .map(|c| {
                        let top = digits(c.index() as u64, q, *e as usize)[*e as usize - 1];
                        trace[top as usize]
                    })
                    .collect(),
            )
        }
    }
}

/// `Tr(c) = c + c^p + … + c^{p^{m-1}}`, as an index into the prime subfield.
fn absolute_trace(field: &Alphabet, p: u64, m: u32) -> Vec<u32> {
    field
        .elements()
        .map(|c| {
            let mut acc = Element::ZERO;
            let mut power = c;
            for _ in 0..m {
                acc = field.add(acc, power);
                let mut next = Element::new(1);
                for _ in 0..p {
                    next = field.mul(next, power).expect("field multiplication");
                }
                power = next;
            }
            debug_assert!((acc.index() as u64) < p, "trace lands in the prime field");
            acc.index() as u32
        })
        .collect()
}

impl Duality {
    /// The standard duality: the dot-product character table for groups and
    /// `M_{a,b} = χ(ab)` for a generating character `χ` on rings.
    pub fn standard(alphabet: Arc<Alphabet>) -> Duality {
        let size = alphabet.size();
        let n = alphabet.char_root_order();
        let table: Vec<u32> = match generating_character(&alphabet) {
            Some(chi) => (0..size * size)
                .map(|ab| {
                    let prod = alphabet
                        .mul(Element::new(ab / size), Element::new(ab % size))
                        .expect("ring alphabet");
                    chi[prod.index()]
                })
                .collect(),
            None => {
                let radix = alphabet.radix().to_vec();
                let comps: Vec<Vec<u64>> = alphabet.elements().map(|a| alphabet.components(a)).collect();
                (0..size * size)
                    .map(|ab| {
                        let (a, b) = (&comps[ab / size], &comps[ab % size]);
                        let s: u64 = (0..radix.len()).map(|i| (n / radix[i]) * a[i] * b[i]).sum();
                        (s % n) as u32
                    })
                    .collect()
            }
        };
        Duality::from_flat(alphabet, n, table).expect("standard character tables are dualities")
    }

    /// Validates an arbitrary exponent table.
    pub fn validate(alphabet: Arc<Alphabet>, root_order: u64, table: &[Vec<u64>]) -> Result<Duality, DualityError> {
        let size = alphabet.size();
        if table.len() != size {
            return Err(DualityError::Shape { size, rows: table.len(), found: table.first().map_or(0, Vec::len) });
        }
        let mut flat = Vec::with_capacity(size * size);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != size {
                return Err(DualityError::Shape { size, rows: table.len(), found: entries.len() });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= root_order {
                    return Err(DualityError::EntryOutOfRange { row, col, value, order: root_order });
                }
                flat.push(value as u32);
            }
        }
        Duality::from_flat(alphabet, root_order, flat)
    }

    fn from_flat(alphabet: Arc<Alphabet>, root_order: u64, table: Vec<u32>) -> Result<Duality, DualityError> {
        let expected = alphabet.char_root_order();
        if root_order != expected {
            return Err(DualityError::RootOrder { expected, got: root_order });
        }
        let duality = Duality { alphabet, root_order, table };
        duality.certify()?;
        Ok(duality)
    }

    /// Checks the character, homomorphism and injectivity conditions. Additivity is tested
    /// against the additive generators, which suffices for maps between abelian groups.
    fn certify(&self) -> Result<(), DualityError> {
        let a = &*self.alphabet;
        let n = self.root_order as u32;
        let gens: Vec<Element> = a.additive_generators().into_iter().map(|(g, _)| g).collect();
        for row in a.elements() {
            if self.exponent(row, Element::ZERO) != 0 {
                return Err(DualityError::RowNotCharacter { row: row.index(), b: 0, c: 0 });
            }
            for b in a.elements() {
                for &g in &gens {
                    let lhs = self.exponent(row, a.add(b, g));
                    if lhs != (self.exponent(row, b) + self.exponent(row, g)) % n {
                        return Err(DualityError::RowNotCharacter {
                            row: row.index(),
                            b: b.index(),
                            c: g.index(),
                        });
                    }
                }
            }
        }
        for row in a.elements() {
            for &g in &gens {
                let sum = a.add(row, g);
                for b in a.elements() {
                    if self.exponent(sum, b) != (self.exponent(row, b) + self.exponent(g, b)) % n {
                        return Err(DualityError::NotHomomorphism {
                            a: row.index(),
                            a2: g.index(),
                            b: b.index(),
                        });
                    }
                }
            }
        }
        let mut seen: HashMap<&[u32], usize> = HashMap::new();
        for row in 0..a.size() {
            if let Some(prev) = seen.insert(self.row(Element::new(row)), row) {
                return Err(DualityError::NotInjective { a: prev, a2: row });
            }
        }
        Ok(())
    }

    /// The duality whose row `a` is row `σ(a)` of `self`; valid when `σ` is an additive automorphism.
    pub fn reindex_rows(&self, sigma: &[Element]) -> Result<Duality, DualityError> {
        let size = self.alphabet.size();
        if sigma.len() != size {
            return Err(DualityError::Shape { size, rows: sigma.len(), found: sigma.len() });
        }
        let table = sigma.iter().flat_map(|&s| self.row(s).iter().copied()).collect();
        Duality::from_flat(self.alphabet.clone(), self.root_order, table)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn root_order(&self) -> u64 {
        self.root_order
    }

    /// Exponent `t[a][b]` with `χ_a(b) = ζ_N^{t[a][b]}`.
    pub fn exponent(&self, a: Element, b: Element) -> u32 {
        self.table[a.index() * self.alphabet.size() + b.index()]
    }

    pub fn row(&self, a: Element) -> &[u32] {
        let size = self.alphabet.size();
        &self.table[a.index() * size..(a.index() + 1) * size]
    }

    pub fn entry(&self, a: Element, b: Element) -> CycInt {
        CycInt::root(self.exponent(a, b) as i64, self.root_order)
    }

    /// Exponent table as nested rows.
    pub fn table(&self) -> Vec<Vec<u64>> {
        self.alphabet
            .elements()
            .map(|a| self.row(a).iter().map(|&x| x as u64).collect())
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let a = &*self.alphabet;
        a.elements().all(|x| a.elements().all(|y| self.exponent(x, y) == self.exponent(y, x)))
    }

    /// Exponent of `[v,w]_M = Π χ_{v_i}(w_i)`.
    pub fn pairing_exponent(&self, v: &[Element], w: &[Element]) -> Result<u64, DualityError> {
        if v.len() != w.len() {
            return Err(DualityError::LengthMismatch(v.len(), w.len()));
        }
        let s: u64 = v.iter().zip(w).map(|(&x, &y)| self.exponent(x, y) as u64).sum();
        Ok(s % self.root_order)
    }

    /// `[v,w]_M` as an exact root of unity.
    pub fn pairing(&self, v: &[Element], w: &[Element]) -> Result<CycInt, DualityError> {
        Ok(CycInt::root(self.pairing_exponent(v, w)? as i64, self.root_order))
    }
}

/// Euclidean inner product `Σ v_i w_i` over a ring alphabet.
pub fn euclidean_inner(alphabet: &Alphabet, v: &[Element], w: &[Element]) -> Result<Element, DualityError> {
    if v.len() != w.len() {
        return Err(DualityError::LengthMismatch(v.len(), w.len()));
    }
    let mut acc = Element::ZERO;
    for (&x, &y) in v.iter().zip(w) {
        acc = alphabet.add(acc, alphabet.mul(x, y)?);
    }
    Ok(acc)
}
