//! Exact arithmetic in `Z[ζ_N]`.
//!
//! Values are stored as their remainder modulo the `N`-th cyclotomic polynomial `Φ_N`, so two
//! values are equal exactly when their root orders and coefficient vectors agree.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycError {
    #[error("root orders differ: {0} vs {1}")]
    RootOrderMismatch(u64, u64),
    #[error("{0} is not a rational integer")]
    NotRational(String),
}

/// Little-endian coefficients of `Φ_n`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    // x^n - 1 = Π_{d | n} Φ_d
    let mut quotient = vec![0i64; n as usize + 1];
    quotient[0] = -1;
    quotient[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        quotient = exact_div(&quotient, &cyclotomic_polynomial(d));
    }
    cache.lock().unwrap().insert(n, quotient.clone());
    quotient
}

/// Division by a monic divisor that is known to be exact.
fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut quot = vec![0i64; a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db];
        quot[k] = c;
        for (j, &bj) in b.iter().enumerate() {
            rem[k + j] -= c * bj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// Euler's totient, i.e. `deg Φ_n`.
pub fn totient(n: u64) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

#[derive(Debug)]
struct CycRing {
    order: u64,
    modulus: Vec<i64>,
}

impl CycRing {
    fn get(order: u64) -> Arc<CycRing> {
        static RINGS: OnceLock<Mutex<HashMap<u64, Arc<CycRing>>>> = OnceLock::new();
        let rings = RINGS.get_or_init(Default::default);
        if let Some(ring) = rings.lock().unwrap().get(&order) {
            return ring.clone();
        }
        let ring = Arc::new(CycRing { order, modulus: cyclotomic_polynomial(order) });
        rings.lock().unwrap().insert(order, ring.clone());
        ring
    }

    fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Reduces in place modulo `Φ_N` and trims trailing zeros.
    fn reduce(&self, mut c: Vec<i64>) -> Vec<i64> {
        let d = self.degree();
        while c.len() > d {
            let lead = c.pop().unwrap();
            if lead != 0 {
                let shift = c.len() - d;
                for (j, &m) in self.modulus[..d].iter().enumerate() {
                    c[shift + j] -= lead * m;
                }
            }
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        c
    }
}

/// An element of `Z[ζ_N]` in canonical form.
#[derive(Clone)]
pub struct CycInt {
    ring: Arc<CycRing>,
    coeffs: Vec<i64>,
}

impl CycInt {
    /// `ζ_N^k`; negative `k` is reduced modulo `N`.
    pub fn root(k: i64, order: u64) -> Self {
        let ring = CycRing::get(order);
        let k = k.rem_euclid(order as i64) as usize;
        let mut c = vec![0; k + 1];
        c[k] = 1;
        let coeffs = ring.reduce(c);
        CycInt { ring, coeffs }
    }

    pub fn from_int(value: i64, order: u64) -> Self {
        let ring = CycRing::get(order);
        let coeffs = if value == 0 { Vec::new() } else { vec![value] };
        CycInt { ring, coeffs }
    }

    pub fn zero(order: u64) -> Self {
        Self::from_int(0, order)
    }

    pub fn one(order: u64) -> Self {
        Self::from_int(1, order)
    }

    /// Canonical value of `Σ_t counts[t] ζ_N^t`, an element of the group ring `Z[Z_N]`.
    pub fn from_group_ring(counts: &[i64], order: u64) -> Self {
        let ring = CycRing::get(order);
        let coeffs = ring.reduce(counts.to_vec());
        CycInt { ring, coeffs }
    }

    pub fn root_order(&self) -> u64 {
        self.ring.order
    }

    /// Coefficients on `1, ζ, ζ², …` with trailing zeros removed.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn checked_add(&self, other: &CycInt) -> Result<CycInt, CycError> {
        self.same_ring(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![0; len];
        for (i, v) in self.coeffs.iter().enumerate() {
            c[i] += v;
        }
        for (i, v) in other.coeffs.iter().enumerate() {
            c[i] += v;
        }
        Ok(CycInt { coeffs: self.ring.reduce(c), ring: self.ring.clone() })
    }

    pub fn checked_mul(&self, other: &CycInt) -> Result<CycInt, CycError> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(CycInt::zero(self.root_order()));
        }
        let mut c = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &x) in self.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in other.coeffs.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        Ok(CycInt { coeffs: self.ring.reduce(c), ring: self.ring.clone() })
    }

    pub fn scale(&self, k: i64) -> CycInt {
        let c = self.coeffs.iter().map(|&x| x * k).collect();
        CycInt { coeffs: self.ring.reduce(c), ring: self.ring.clone() }
    }

    /// The integer value, if this element lies in `Z`.
    pub fn as_integer(&self) -> Result<i64, CycError> {
        match self.coeffs.as_slice() {
            [] => Ok(0),
            [v] => Ok(*v),
            _ => Err(CycError::NotRational(self.to_string())),
        }
    }

    fn same_ring(&self, other: &CycInt) -> Result<(), CycError> {
        if self.ring.order == other.ring.order {
            Ok(())
        } else {
            Err(CycError::RootOrderMismatch(self.ring.order, other.ring.order))
        }
    }
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        self.ring.order == other.ring.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycInt {}

impl Hash for CycInt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl PartialOrd for CycInt {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CycInt {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.ring.order, &self.coeffs).cmp(&(other.ring.order, &other.coeffs))
    }
}

impl Add for &CycInt {
    type Output = CycInt;

    fn add(self, rhs: &CycInt) -> CycInt {
        self.checked_add(rhs).expect("cyclotomic addition across root orders")
    }
}

impl Sub for &CycInt {
    type Output = CycInt;

    fn sub(self, rhs: &CycInt) -> CycInt {
        self + &(-rhs)
    }
}

impl Mul for &CycInt {
    type Output = CycInt;

    fn mul(self, rhs: &CycInt) -> CycInt {
        self.checked_mul(rhs).expect("cyclotomic multiplication across root orders")
    }
}

impl Neg for &CycInt {
    type Output = CycInt;

    fn neg(self) -> CycInt {
        self.scale(-1)
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coeffs.as_slice() {
            [] => return write!(f, "(0)"),
            [v] => return write!(f, "({v})"),
            _ => {}
        }
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
            let mono = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            let body = match (mag, mono.is_empty()) {
                (m, true) => m.to_string(),
                (1, false) => mono,
                (m, false) => format!("{m}*{mono}"),
            };
            if out.is_empty() {
                out = if sign == "-" { format!("-{body}") } else { body };
            } else {
                out.push_str(&format!(" {sign} {body}"));
            }
        }
        write!(f, "({out} @ N={})", self.ring.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(16), vec![1, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(9), 6);
    }

    #[test]
    fn root_sums() {
        let i = CycInt::root(1, 4);
        assert!((&i + &CycInt::root(3, 4)).is_zero());
        let mut orbit = CycInt::zero(6);
        for k in 0..6 {
            orbit = &orbit + &CycInt::root(k, 6);
        }
        assert!(orbit.is_zero());
        assert_eq!(CycInt::root(8, 16), CycInt::from_int(-1, 16));
    }

    #[test]
    fn integer_extraction() {
        let w = &CycInt::root(1, 3) + &CycInt::root(2, 3);
        assert_eq!(w.as_integer(), Ok(-1));
        let prim8 = [1, 3, 5, 7].iter().fold(CycInt::zero(8), |acc, &k| &acc + &CycInt::root(k, 8));
        assert_eq!(prim8.as_integer(), Ok(0));
        assert!(matches!(CycInt::root(1, 8).as_integer(), Err(CycError::NotRational(_))));
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let a = CycInt::root(1, 4);
        let b = CycInt::root(1, 8);
        assert_eq!(a.checked_add(&b), Err(CycError::RootOrderMismatch(4, 8)));
        assert_eq!(a.checked_mul(&b), Err(CycError::RootOrderMismatch(4, 8)));
    }

    #[test]
    fn rendering() {
        assert_eq!(CycInt::from_int(-1, 8).to_string(), "(-1)");
        let v = &CycInt::root(1, 8) + &CycInt::root(3, 8);
        assert_eq!(v.to_string(), "(z + z^3 @ N=8)");
    }

    /// Multiplication in `Z[x]/(x^N - 1)` followed by a single reduction.
    fn naive_product(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
        let mut c = vec![0i64; n];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                c[(i + j) % n] += x * y;
            }
        }
        c
    }

    proptest! {
        #[test]
        fn roots_have_norm_one(n in 1u64..=48, k in 0i64..48) {
            let k = k % n as i64;
            let prod = &CycInt::root(k, n) * &CycInt::root(n as i64 - k, n);
            prop_assert_eq!(prod, CycInt::one(n));
        }

        #[test]
        fn agrees_with_group_ring_convolution(
            n in 1usize..=24,
            a in proptest::collection::vec(-5i64..5, 24),
            b in proptest::collection::vec(-5i64..5, 24),
        ) {
            let (a, b) = (&a[..n], &b[..n]);
            let x = CycInt::from_group_ring(a, n as u64);
            let y = CycInt::from_group_ring(b, n as u64);
            let expected = CycInt::from_group_ring(&naive_product(a, b, n), n as u64);
            prop_assert_eq!(&x * &y, expected);
            let sum: Vec<i64> = a.iter().zip(b).map(|(u, v)| u + v).collect();
            prop_assert_eq!(&x + &y, CycInt::from_group_ring(&sum, n as u64));
            // canonical form is a fixed point
            prop_assert_eq!(CycInt::from_group_ring(x.coeffs(), n as u64), x);
        }

        #[test]
        fn integers_embed_homomorphically(n in 1u64..=30, a in -50i64..50, b in -50i64..50) {
            let (x, y) = (CycInt::from_int(a, n), CycInt::from_int(b, n));
            prop_assert_eq!(&x + &y, CycInt::from_int(a + b, n));
            prop_assert_eq!(&x * &y, CycInt::from_int(a * b, n));
        }
    }
}
