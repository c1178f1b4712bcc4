//! Finite alphabets: products of cyclic groups, `Z_n`, `F_q` and the chain rings `F_q[u]/(u^e)`.
//!
//! Every alphabet indexes its elements `0..size` in mixed radix over the orders of a cyclic
//! decomposition of its additive group, least significant component first. Addition is
//! therefore digit-wise modular addition for every backend:
//!
//! * `Group(n_1..n_k)`: component `i` is the `Z_{n_i}` coordinate.
//! * `Zn(n)`: the residue itself.
//! * `Fq(p, m)`: base-`p` coefficients of the polynomial representative.
//! * `FqU(p, m, e)`: `Σ idx(c_i) q^i` for `Σ c_i u^i`, i.e. base-`p` digits again.
//!
//! Chain rings additionally carry a [`ChainInfo`]; the `γ`-adic digits of an element are the
//! base-`q` digits of its index.

mod gf;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub(crate) use gf::{digits, from_digits};

/// Largest alphabet for which operation tables are built.
pub const MAX_ALPHABET_SIZE: usize = 1024;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlphabetError {
    #[error("Z_n needs n >= 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("group order list is empty")]
    EmptyGroup,
    #[error("cyclic group orders must be at least 2, got {0}")]
    BadCyclicOrder(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree and chain index must be at least 1")]
    ZeroDegree,
    #[error("modulus must be a monic polynomial of degree {expected} with coefficients below p, got {got:?}")]
    BadModulus { expected: usize, got: Vec<u64> },
    #[error("modulus {0:?} is reducible over F_{1}")]
    ReducibleModulus(Vec<u64>, u64),
    #[error("alphabet of size {0} exceeds the supported maximum of {MAX_ALPHABET_SIZE}")]
    TooLarge(u128),
    #[error("multiplication is not defined on a group alphabet")]
    NotARing,
    #[error("alphabet {0} is not a chain ring")]
    NotAChainRing(String),
    #[error("element index {index} out of range for an alphabet of size {size}")]
    OutOfRange { index: usize, size: usize },
}

/// Serializable description of an alphabet, as found in the JSON input files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AlphabetSpec {
    Group {
        orders: Vec<u64>,
    },
    Zn {
        n: u64,
    },
    Fq {
        p: u64,
        m: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        modulus: Option<Vec<u64>>,
    },
    Fqu {
        p: u64,
        m: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        modulus: Option<Vec<u64>>,
        e: u32,
    },
}

/// An element, identified by its canonical index in its alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(u32);

impl Element {
    pub const ZERO: Element = Element(0);

    pub fn new(index: usize) -> Self {
        Element(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Neg,
    Mul,
}

/// Chain structure `R ⊋ ⟨γ⟩ ⊋ … ⊋ ⟨γ^{e-1}⟩ ⊋ {0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainInfo {
    e: u32,
    p: u64,
    q: u64,
    gamma: Element,
    teichmuller: Vec<Element>,
    order: Vec<u32>,
}

impl ChainInfo {
    /// Nilpotency index of `γ`.
    pub fn e(&self) -> u32 {
        self.e
    }

    /// Characteristic of the residue field.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Size of the residue field `R/⟨γ⟩`.
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn gamma(&self) -> Element {
        self.gamma
    }

    /// Digit set `T`; `T[d]` is the representative whose residue has index `d`.
    pub fn teichmuller(&self) -> &[Element] {
        &self.teichmuller
    }

    /// `ord_chain` of every element, indexed by element.
    pub fn orders(&self) -> &[u32] {
        &self.order
    }
}

/// A finite alphabet with precomputed operation tables.
#[derive(Debug, Clone)]
pub struct Alphabet {
    spec: AlphabetSpec,
    size: usize,
    radix: Vec<u64>,
    exponent: u64,
    add: Vec<u32>,
    neg: Vec<u32>,
    mul: Option<Vec<u32>>,
    chain: Option<ChainInfo>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for Alphabet {}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

fn check_size(size: u128) -> Result<usize, AlphabetError> {
    if size > MAX_ALPHABET_SIZE as u128 {
        Err(AlphabetError::TooLarge(size))
    } else {
        Ok(size as usize)
    }
}

fn resolve_modulus(p: u64, m: u32, modulus: &Option<Vec<u64>>) -> Result<Vec<u64>, AlphabetError> {
    if !gf::is_prime(p) {
        return Err(AlphabetError::NotPrime(p));
    }
    if m == 0 {
        return Err(AlphabetError::ZeroDegree);
    }
    let Some(modulus) = modulus else {
        return Ok(gf::first_irreducible(p, m as usize));
    };
    let well_formed = modulus.len() == m as usize + 1
        && modulus.last() == Some(&1)
        && modulus.iter().all(|&c| c < p);
    if !well_formed {
        return Err(AlphabetError::BadModulus { expected: m as usize, got: modulus.clone() });
    }
    if !gf::is_irreducible(modulus, p) {
        return Err(AlphabetError::ReducibleModulus(modulus.clone(), p));
    }
    Ok(modulus.clone())
}

impl Alphabet {
    /// Builds an alphabet from its description, validating moduli and populating chain data.
    pub fn build(spec: &AlphabetSpec) -> Result<Self, AlphabetError> {
        let (spec, radix) = match spec {
            AlphabetSpec::Group { orders } => {
                if orders.is_empty() {
                    return Err(AlphabetError::EmptyGroup);
                }
                if let Some(&bad) = orders.iter().find(|&&n| n < 2) {
                    return Err(AlphabetError::BadCyclicOrder(bad));
                }
                (spec.clone(), orders.clone())
            }
            AlphabetSpec::Zn { n } => {
                if *n < 2 {
                    return Err(AlphabetError::ModulusTooSmall(*n));
                }
                (spec.clone(), vec![*n])
            }
            AlphabetSpec::Fq { p, m, modulus } => {
                let modulus = resolve_modulus(*p, *m, modulus)?;
                let spec = AlphabetSpec::Fq { p: *p, m: *m, modulus: Some(modulus) };
                (spec, vec![*p; *m as usize])
            }
            AlphabetSpec::Fqu { p, m, modulus, e } => {
                let modulus = resolve_modulus(*p, *m, modulus)?;
                if *e == 0 {
                    return Err(AlphabetError::ZeroDegree);
                }
                let spec = AlphabetSpec::Fqu { p: *p, m: *m, modulus: Some(modulus), e: *e };
                (spec, vec![*p; (*m * *e) as usize])
            }
        };
        let size = check_size(radix.iter().map(|&r| r as u128).product())?;
        let exponent = radix.iter().copied().fold(1, lcm);

        let mut alphabet = Alphabet {
            spec,
            size,
            radix,
            exponent,
            add: Vec::new(),
            neg: Vec::new(),
            mul: None,
            chain: None,
        };
        alphabet.add = (0..size * size)
            .map(|ab| alphabet.add_direct(ab / size, ab % size) as u32)
            .collect();
        alphabet.neg = (0..size).map(|a| alphabet.neg_direct(a) as u32).collect();
        alphabet.mul = alphabet.mul_direct_fn().map(|mul| {
            (0..size * size).map(|ab| mul(ab / size, ab % size) as u32).collect()
        });
        alphabet.chain = alphabet.chain_direct();
        Ok(alphabet)
    }

    pub fn zn(n: u64) -> Result<Self, AlphabetError> {
        Self::build(&AlphabetSpec::Zn { n })
    }

    pub fn group(orders: &[u64]) -> Result<Self, AlphabetError> {
        Self::build(&AlphabetSpec::Group { orders: orders.to_vec() })
    }

    pub fn fq(p: u64, m: u32, modulus: Option<Vec<u64>>) -> Result<Self, AlphabetError> {
        Self::build(&AlphabetSpec::Fq { p, m, modulus })
    }

    pub fn fqu(p: u64, m: u32, modulus: Option<Vec<u64>>, e: u32) -> Result<Self, AlphabetError> {
        Self::build(&AlphabetSpec::Fqu { p, m, modulus, e })
    }

    /// Description with every modulus resolved.
    pub fn spec(&self) -> &AlphabetSpec {
        &self.spec
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Additive exponent: lcm of the additive orders of all elements.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Order `N` of the root of unity in which every character takes its values.
    pub fn char_root_order(&self) -> u64 {
        self.exponent
    }

    /// Orders of the cyclic factors used for indexing.
    pub fn radix(&self) -> &[u64] {
        &self.radix
    }

    pub fn is_ring(&self) -> bool {
        self.mul.is_some()
    }

    pub fn chain(&self) -> Option<&ChainInfo> {
        self.chain.as_ref()
    }

    pub fn require_chain(&self) -> Result<&ChainInfo, AlphabetError> {
        self.chain.as_ref().ok_or_else(|| AlphabetError::NotAChainRing(self.name()))
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.size).map(Element::new)
    }

    pub fn element(&self, index: usize) -> Result<Element, AlphabetError> {
        if index < self.size {
            Ok(Element::new(index))
        } else {
            Err(AlphabetError::OutOfRange { index, size: self.size })
        }
    }

    pub fn one(&self) -> Result<Element, AlphabetError> {
        if self.is_ring() {
            Ok(Element::new(1))
        } else {
            Err(AlphabetError::NotARing)
        }
    }

    pub fn add(&self, a: Element, b: Element) -> Element {
        Element(self.add[a.index() * self.size + b.index()])
    }

    pub fn neg(&self, a: Element) -> Element {
        Element(self.neg[a.index()])
    }

    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Element, b: Element) -> Result<Element, AlphabetError> {
        let table = self.mul.as_ref().ok_or(AlphabetError::NotARing)?;
        Ok(Element(table[a.index() * self.size + b.index()]))
    }

    /// Integer multiple `k·a` in the additive group.
    pub fn times(&self, k: u64, a: Element) -> Element {
        let comps = self.components(a);
        let scaled: Vec<u64> = comps.iter().zip(&self.radix).map(|(&c, &r)| (c * (k % r)) % r).collect();
        self.from_components(&scaled)
    }

    pub fn arith(&self, a: Element, b: Element, op: ArithOp) -> Result<Element, AlphabetError> {
        match op {
            ArithOp::Add => Ok(self.add(a, b)),
            ArithOp::Neg => Ok(self.neg(a)),
            ArithOp::Mul => self.mul(a, b),
        }
    }

    pub fn is_unit(&self, a: Element) -> bool {
        match &self.mul {
            Some(table) => {
                let row = &table[a.index() * self.size..(a.index() + 1) * self.size];
                row.contains(&1)
            }
            None => false,
        }
    }

    pub fn units(&self) -> Vec<Element> {
        self.elements().filter(|&a| self.is_unit(a)).collect()
    }

    pub fn inverse(&self, a: Element) -> Option<Element> {
        let table = self.mul.as_ref()?;
        let row = &table[a.index() * self.size..(a.index() + 1) * self.size];
        row.iter().position(|&x| x == 1).map(Element::new)
    }

    /// Generators of the additive group with their orders (one per cyclic factor).
    pub fn additive_generators(&self) -> Vec<(Element, u64)> {
        let mut place = 1usize;
        self.radix
            .iter()
            .map(|&r| {
                let g = (Element::new(place), r);
                place *= r as usize;
                g
            })
            .collect()
    }

    /// Mixed-radix components of an element.
    pub fn components(&self, a: Element) -> Vec<u64> {
        let mut x = a.index() as u64;
        self.radix
            .iter()
            .map(|&r| {
                let d = x % r;
                x /= r;
                d
            })
            .collect()
    }

    pub fn from_components(&self, comps: &[u64]) -> Element {
        let mut idx = 0u64;
        for (&c, &r) in comps.iter().zip(&self.radix).rev() {
            idx = idx * r + c;
        }
        Element::new(idx as usize)
    }

    /// Chain order exponent `i` with `a = μγ^{e-i}`, `μ` a unit.
    pub fn ord_chain(&self, a: Element) -> Result<u32, AlphabetError> {
        Ok(self.require_chain()?.order[a.index()])
    }

    /// `γ`-adic digits `[r_0, …, r_{e-1}]` with `a = Σ r_i γ^i` and `r_i ∈ T`.
    pub fn gamma_adic(&self, a: Element) -> Result<Vec<Element>, AlphabetError> {
        let chain = self.require_chain()?;
        Ok(digits(a.index() as u64, chain.q, chain.e as usize)
            .into_iter()
            .map(|d| chain.teichmuller[d as usize])
            .collect())
    }

    /// Residue-field digit indices `[r̄_0, …, r̄_{e-1}]`.
    pub fn residue_digits(&self, a: Element) -> Result<Vec<u64>, AlphabetError> {
        let chain = self.require_chain()?;
        Ok(digits(a.index() as u64, chain.q, chain.e as usize))
    }

    /// Evaluates `Σ r_i γ^i` with ring arithmetic.
    pub fn from_gamma_adic(&self, digits: &[Element]) -> Result<Element, AlphabetError> {
        let chain = self.require_chain()?;
        let mut acc = Element::ZERO;
        let mut power = Element::new(1);
        for &d in digits {
            acc = self.add(acc, self.mul(d, power)?);
            power = self.mul(power, chain.gamma)?;
        }
        Ok(acc)
    }

    /// The classes `b_0, …, b_e` of elements of chain order exactly `i`.
    pub fn ideal_classes(&self) -> Result<Vec<Vec<Element>>, AlphabetError> {
        let chain = self.require_chain()?;
        let mut classes = vec![Vec::new(); chain.e as usize + 1];
        for a in self.elements() {
            classes[chain.order[a.index()] as usize].push(a);
        }
        Ok(classes)
    }

    /// The residue field `R/⟨γ⟩` of a chain ring.
    pub fn residue_field(&self) -> Result<Alphabet, AlphabetError> {
        self.require_chain()?;
        match &self.spec {
            AlphabetSpec::Zn { n } => {
                let (p, _) = gf::prime_power(*n).expect("chain Z_n has prime power order");
                Alphabet::zn(p)
            }
            AlphabetSpec::Fq { .. } => Ok(self.clone()),
            AlphabetSpec::Fqu { p, m, modulus, .. } => Alphabet::fq(*p, *m, modulus.clone()),
            AlphabetSpec::Group { .. } => unreachable!("groups carry no chain"),
        }
    }

    /// Short human-readable name, e.g. `Z_16`, `F_4`, `F_2[u]/(u^2)`.
    pub fn name(&self) -> String {
        match &self.spec {
            AlphabetSpec::Group { orders } => {
                orders.iter().map(|n| format!("Z_{n}")).collect::<Vec<_>>().join("×")
            }
            AlphabetSpec::Zn { n } => format!("Z_{n}"),
            AlphabetSpec::Fq { p, m, .. } => format!("F_{}", p.pow(*m)),
            AlphabetSpec::Fqu { p, m, e, .. } => format!("F_{}[u]/(u^{e})", p.pow(*m)),
        }
    }

    /// Readable form of an element, e.g. `1+w` in `F_4`.
    pub fn pretty(&self, a: Element) -> String {
        match &self.spec {
            AlphabetSpec::Zn { .. } => a.to_string(),
            AlphabetSpec::Group { .. } => {
                let comps: Vec<String> = self.components(a).iter().map(u64::to_string).collect();
                format!("({})", comps.join(","))
            }
            AlphabetSpec::Fq { p, m, .. } => pretty_poly(&digits(a.index() as u64, *p, *m as usize), "w", |c| {
                c.to_string()
            }),
            AlphabetSpec::Fqu { p, m, e, .. } => {
                let q = p.pow(*m);
                let coeffs = digits(a.index() as u64, q, *e as usize);
                pretty_poly(&coeffs, "u", |c| {
                    let s = pretty_poly(&digits(c, *p, *m as usize), "w", |d| d.to_string());
                    if s.contains('+') {
                        format!("({s})")
                    } else {
                        s
                    }
                })
            }
        }
    }

    fn add_direct(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.components(Element::new(a)), self.components(Element::new(b)));
        let sum: Vec<u64> = ca.iter().zip(&cb).zip(&self.radix).map(|((x, y), r)| (x + y) % r).collect();
        self.from_components(&sum).index()
    }

    fn neg_direct(&self, a: usize) -> usize {
        let ca = self.components(Element::new(a));
        let neg: Vec<u64> = ca.iter().zip(&self.radix).map(|(x, r)| (r - x) % r).collect();
        self.from_components(&neg).index()
    }

    #[allow(clippy::type_complexity)]
    fn mul_direct_fn(&self) -> Option<Box<dyn Fn(usize, usize) -> usize + '_>> {
        match &self.spec {
            AlphabetSpec::Group { .. } => None,
            AlphabetSpec::Zn { n } => {
                let n = *n as usize;
                Some(Box::new(move |a, b| (a * b) % n))
            }
            AlphabetSpec::Fq { p, m, modulus } => {
                let (p, m) = (*p, *m as usize);
                let modulus = modulus.clone().expect("resolved");
                Some(Box::new(move |a, b| {
                    let prod = gf::mul_mod(&digits(a as u64, p, m), &digits(b as u64, p, m), &modulus, p);
                    from_digits(&prod, p) as usize
                }))
            }
            AlphabetSpec::Fqu { p, m, modulus, e } => {
                let (p, m, e) = (*p, *m as usize, *e as usize);
                let modulus = modulus.clone().expect("resolved");
                let q = p.pow(m as u32);
                let fmul = move |x: u64, y: u64| {
                    from_digits(&gf::mul_mod(&digits(x, p, m), &digits(y, p, m), &modulus, p), p)
                };
                let fadd = move |x: u64, y: u64| {
                    let s: Vec<u64> =
                        digits(x, p, m).iter().zip(digits(y, p, m)).map(|(a, b)| (a + b) % p).collect();
                    from_digits(&s, p)
                };
                Some(Box::new(move |a, b| {
                    let (ca, cb) = (digits(a as u64, q, e), digits(b as u64, q, e));
                    let mut out = vec![0u64; e];
                    for i in 0..e {
                        for j in 0..e - i {
                            out[i + j] = fadd(out[i + j], fmul(ca[i], cb[j]));
                        }
                    }
                    from_digits(&out, q) as usize
                }))
            }
        }
    }

    fn chain_direct(&self) -> Option<ChainInfo> {
        let (p, q, e) = match &self.spec {
            AlphabetSpec::Group { .. } => return None,
            AlphabetSpec::Zn { n } => {
                let (p, e) = gf::prime_power(*n)?;
                (p, p, e)
            }
            AlphabetSpec::Fq { p, m, .. } => (*p, p.pow(*m), 1),
            AlphabetSpec::Fqu { p, m, e, .. } => (*p, p.pow(*m), *e),
        };
        let gamma = if e >= 2 { Element::new(q as usize) } else { Element::ZERO };
        let order = (0..self.size)
            .map(|a| {
                let d = digits(a as u64, q, e as usize);
                match d.iter().position(|&x| x != 0) {
                    Some(valuation) => e - valuation as u32,
                    None => 0,
                }
            })
            .collect();
        Some(ChainInfo {
            e,
            p,
            q,
            gamma,
            teichmuller: (0..q as usize).map(Element::new).collect(),
            order,
        })
    }
}

fn pretty_poly(coeffs: &[u64], var: &str, coeff: impl Fn(u64) -> String) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            match (i, coeff(c).as_str()) {
                (0, s) => s.to_string(),
                (_, "1") => mono,
                (_, s) => format!("{s}{mono}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
