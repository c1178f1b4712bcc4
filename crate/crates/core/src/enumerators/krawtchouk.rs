//! Class-collapsed character tables and the MacWilliams substitution.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use super::partition::Partition;
use super::poly::MultiPoly;
use super::EnumError;
use crate::characters::Duality;
use crate::cyclotomic::CycInt;

/// `K[i][j] = Σ_{b ∈ A_j} M_{a,b}` for any `a ∈ A_i`, certified constant on each class.
#[derive(Debug, Clone, PartialEq)]
pub struct KrawtchoukMatrix {
    root_order: u64,
    entries: Vec<Vec<CycInt>>,
}

impl KrawtchoukMatrix {
    /// Certifies that every row of each class has the same class sums.
    pub fn new(partition: &Partition, duality: &Duality) -> Result<Self, EnumError> {
        partition.check_duality(duality)?;
        let mut entries = Vec::with_capacity(partition.len());
        for (i, class) in partition.classes().iter().enumerate() {
            let rep = class[0];
            let expected = partition.signature(duality, rep);
            for &a in &class[1..] {
                let sig = partition.signature(duality, a);
                if let Some(j) = (0..sig.len()).find(|&j| sig[j] != expected[j]) {
                    return Err(EnumError::IncompatiblePartition { class: i, a: rep, a2: a, column: j });
                }
            }
            entries.push(expected);
        }
        Ok(KrawtchoukMatrix { root_order: duality.root_order(), entries })
    }

    /// The integer matrix `[[1, r], [1, -1]]`.
    pub fn hamming(r: i64) -> Self {
        let c = |v| CycInt::from_int(v, 1);
        KrawtchoukMatrix { root_order: 1, entries: vec![vec![c(1), c(r)], vec![c(1), c(-1)]] }
    }

    pub fn from_entries(root_order: u64, entries: Vec<Vec<CycInt>>) -> Result<Self, EnumError> {
        let s = entries.len();
        for row in &entries {
            if row.len() != s {
                return Err(EnumError::VariableCount { expected: s, found: row.len() });
            }
            if let Some(c) = row.iter().find(|c| c.root_order() != root_order) {
                return Err(EnumError::Cyclotomic(crate::cyclotomic::CycError::RootOrderMismatch(
                    root_order,
                    c.root_order(),
                )));
            }
        }
        Ok(KrawtchoukMatrix { root_order, entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn root_order(&self) -> u64 {
        self.root_order
    }

    pub fn entries(&self) -> &[Vec<CycInt>] {
        &self.entries
    }

    /// Entries as integers when every entry is rational.
    pub fn as_integers(&self) -> Option<Vec<Vec<i64>>> {
        self.entries.iter().map(|r| r.iter().map(|c| c.as_integer().ok()).collect()).collect()
    }

    /// `E(K·x)` before division by `|C|`.
    pub fn expand(&self, poly: &MultiPoly<i64>) -> Result<MultiPoly<CycInt>, EnumError> {
        let s = self.size();
        if poly.num_vars() != s {
            return Err(EnumError::VariableCount { expected: s, found: poly.num_vars() });
        }
        let n = self.root_order as usize;
        // Entries as sparse group-ring elements of Z[Z_N].
        let sparse: Vec<Vec<Vec<(usize, i64)>>> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| c.coeffs().iter().enumerate().filter(|(_, &v)| v != 0).map(|(t, &v)| (t, v)).collect())
                    .collect()
            })
            .collect();
        let terms: Vec<(Vec<u32>, i64)> = poly.terms().map(|(e, &c)| (e.clone(), c)).collect();
        let merge = |mut a: HashMap<Vec<u32>, Vec<i64>>, b: HashMap<Vec<u32>, Vec<i64>>| {
            for (k, v) in b {
                let slot = a.entry(k).or_insert_with(|| vec![0; n]);
                for (x, y) in slot.iter_mut().zip(v) {
                    *x += y;
                }
            }
            a
        };
        let total = terms
            .par_iter()
            .map(|(exps, coeff)| {
                let mut states: HashMap<Vec<u32>, Vec<i64>> = HashMap::new();
                let mut start = vec![0; n];
                start[0] = *coeff;
                states.insert(vec![0; s], start);
                for (i, &k) in exps.iter().enumerate() {
                    for _ in 0..k {
                        let mut next: HashMap<Vec<u32>, Vec<i64>> = HashMap::new();
                        for (ev, g) in &states {
                            for (j, entry) in sparse[i].iter().enumerate() {
                                if entry.is_empty() {
                                    continue;
                                }
                                let mut key = ev.clone();
                                key[j] += 1;
                                let slot = next.entry(key).or_insert_with(|| vec![0; n]);
                                for &(t, v) in entry {
                                    for (u, &gu) in g.iter().enumerate() {
                                        if gu != 0 {
                                            slot[(u + t) % n] += gu * v;
                                        }
                                    }
                                }
                            }
                        }
                        states = next;
                    }
                }
                states
            })
            .reduce(HashMap::new, merge);
        let mut out = MultiPoly::new(poly.vars().to_vec());
        let mut keys: Vec<_> = total.into_iter().collect();
        keys.sort();
        for (k, g) in keys {
            out.add_term(k, CycInt::from_group_ring(&g, self.root_order));
        }
        Ok(out)
    }

    /// `(1/|C|) E(K·x)`, checked to have nonnegative integer coefficients.
    pub fn transform(&self, poly: &MultiPoly<i64>, code_size: u64) -> Result<MultiPoly<i64>, EnumError> {
        let expanded = self.expand(poly)?;
        let mut out = MultiPoly::new(poly.vars().to_vec());
        let size = code_size as i64;
        for (e, c) in expanded.terms() {
            let v = c.as_integer().map_err(|_| EnumError::NonIntegralResult(format!("coefficient {c} is not rational")))?;
            if v % size != 0 {
                return Err(EnumError::NonIntegralResult(format!("coefficient {v} is not divisible by {size}")));
            }
            if v < 0 {
                return Err(EnumError::NegativeCoefficient(v / size));
            }
            out.add_term(e.clone(), v / size);
        }
        Ok(out)
    }
}

impl fmt::Display for KrawtchoukMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| {
                let cells: Vec<String> = r
                    .iter()
                    .map(|c| match c.as_integer() {
                        Ok(v) => v.to_string(),
                        Err(_) => c.to_string(),
                    })
                    .collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// `(1/|C|) W(x + r y, x - y)`.
pub fn hamming_substitution(w: &MultiPoly<i64>, r: i64, code_size: u64) -> Result<MultiPoly<i64>, EnumError> {
    KrawtchoukMatrix::hamming(r).transform(w, code_size)
}
