//! Exhaustive reference computations shared by the integration tests. These deliberately avoid
//! the library's closure, orthogonal and enumeration routines.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;
use std::sync::Arc;

use macwilliams::{Alphabet, Code, CodeKind, CycInt, Duality, Element, Limits};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub type IndexWord = Vec<usize>;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn zn(n: u64) -> Arc<Alphabet> {
    Arc::new(Alphabet::zn(n).unwrap())
}

pub fn fq(p: u64, m: u32) -> Arc<Alphabet> {
    Arc::new(Alphabet::fq(p, m, None).unwrap())
}

pub fn fqu(p: u64, m: u32, e: u32) -> Arc<Alphabet> {
    Arc::new(Alphabet::fqu(p, m, None, e).unwrap())
}

pub fn group(orders: &[u64]) -> Arc<Alphabet> {
    Arc::new(Alphabet::group(orders).unwrap())
}

pub fn el(i: usize) -> Element {
    Element::new(i)
}

pub fn word(xs: &[usize]) -> Vec<Element> {
    xs.iter().map(|&x| el(x)).collect()
}

pub fn indices(words: &[Vec<Element>]) -> Vec<IndexWord> {
    words.iter().map(|w| w.iter().map(|x| x.index()).collect()).collect()
}

pub fn all_vectors(q: usize, n: usize) -> Vec<IndexWord> {
    let total = q.pow(n as u32);
    (0..total)
        .map(|mut x| {
            let mut v = vec![0; n];
            for slot in v.iter_mut().rev() {
                *slot = x % q;
                x /= q;
            }
            v
        })
        .collect()
}

/// Naive fixed point: add pairwise sums (and ring multiples) until nothing new appears.
pub fn closure_oracle(a: &Alphabet, n: usize, gens: &[IndexWord], kind: CodeKind) -> BTreeSet<IndexWord> {
    let mut set: BTreeSet<IndexWord> = BTreeSet::new();
    set.insert(vec![0; n]);
    set.extend(gens.iter().cloned());
    loop {
        let current: Vec<IndexWord> = set.iter().cloned().collect();
        let mut next = set.clone();
        for x in &current {
            for y in &current {
                next.insert((0..n).map(|i| a.add(el(x[i]), el(y[i])).index()).collect());
            }
            if kind == CodeKind::Linear {
                for r in a.elements() {
                    next.insert((0..n).map(|i| a.mul(r, el(x[i])).unwrap().index()).collect());
                }
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

/// Orthogonal code by testing every vector against every codeword; codewords index rows.
pub fn dual_oracle(a: &Alphabet, code: &BTreeSet<IndexWord>, n: usize, m: &Duality) -> BTreeSet<IndexWord> {
    let order = m.root_order();
    all_vectors(a.size(), n)
        .into_iter()
        .filter(|v| {
            code.iter().all(|c| (0..n).map(|i| m.exponent(el(c[i]), el(v[i])) as u64).sum::<u64>() % order == 0)
        })
        .collect()
}

/// Euclidean orthogonal by testing against every codeword.
pub fn euclidean_dual_oracle(a: &Alphabet, code: &BTreeSet<IndexWord>, n: usize) -> BTreeSet<IndexWord> {
    all_vectors(a.size(), n)
        .into_iter()
        .filter(|v| {
            code.iter().all(|c| {
                (0..n).fold(Element::ZERO, |acc, i| a.add(acc, a.mul(el(c[i]), el(v[i])).unwrap())) == Element::ZERO
            })
        })
        .collect()
}

/// Exponent vectors `N_i(c)` counted directly.
pub fn enumerate_oracle<'a>(
    words: impl IntoIterator<Item = &'a IndexWord>,
    classes: &[Vec<usize>],
) -> BTreeMap<Vec<u32>, i64> {
    let mut out = BTreeMap::new();
    for w in words {
        let mut e = vec![0u32; classes.len()];
        for x in w {
            let i = classes.iter().position(|c| c.contains(x)).expect("covering partition");
            e[i] += 1;
        }
        *out.entry(e).or_insert(0) += 1;
    }
    out
}

pub fn poly_map(p: &macwilliams::MultiPoly<i64>) -> BTreeMap<Vec<u32>, i64> {
    p.terms().map(|(e, &c)| (e.clone(), c)).collect()
}

/// Numerical value of a cyclotomic integer.
pub fn cyc_value(c: &CycInt) -> (f64, f64) {
    let n = c.root_order() as f64;
    c.coeffs().iter().enumerate().fold((0.0, 0.0), |(re, im), (k, &v)| {
        let t = 2.0 * PI * k as f64 / n;
        (re + v as f64 * t.cos(), im + v as f64 * t.sin())
    })
}

/// Random additive automorphism: images of the cyclic generators, rejected until bijective.
pub fn random_automorphism(rng: &mut StdRng, a: &Alphabet) -> Vec<Element> {
    let gens = a.additive_generators();
    loop {
        let images: Vec<Element> = gens
            .iter()
            .map(|&(_, order)| loop {
                let h = el(rng.random_range(0..a.size()));
                if a.times(order, h) == Element::ZERO {
                    break h;
                }
            })
            .collect();
        let sigma: Vec<Element> = a
            .elements()
            .map(|x| {
                a.components(x)
                    .iter()
                    .zip(&images)
                    .fold(Element::ZERO, |acc, (&k, &h)| a.add(acc, a.times(k, h)))
            })
            .collect();
        let distinct: BTreeSet<_> = sigma.iter().collect();
        if distinct.len() == a.size() {
            return sigma;
        }
    }
}

/// Standard duality with rows permuted by a random automorphism.
pub fn random_duality(rng: &mut StdRng, a: &Arc<Alphabet>) -> Duality {
    let sigma = random_automorphism(rng, a);
    Duality::standard(a.clone()).reindex_rows(&sigma).expect("automorphic reindexing is a duality")
}

/// Standard duality twisted by multiplication with a random unit; keeps linear duals unchanged.
pub fn unit_twisted(rng: &mut StdRng, a: &Arc<Alphabet>) -> Duality {
    let units = a.units();
    let u = units[rng.random_range(0..units.len())];
    let sigma: Vec<Element> = a.elements().map(|x| a.mul(u, x).unwrap()).collect();
    Duality::standard(a.clone()).reindex_rows(&sigma).unwrap()
}

/// Random generators; linear kind only over rings.
pub fn random_code(rng: &mut StdRng, a: &Arc<Alphabet>, n: usize, kind: CodeKind) -> (Vec<IndexWord>, Code) {
    let k = rng.random_range(0..=3);
    let gens: Vec<IndexWord> = (0..k).map(|_| (0..n).map(|_| rng.random_range(0..a.size())).collect()).collect();
    let code = Code::span(a.clone(), n, gens.iter().map(|g| word(g)).collect(), kind, Limits::default()).unwrap();
    (gens, code)
}

/// Chain order from ideal membership: the least `i` with `a ∈ γ^{e-i} R`.
pub fn order_oracle(a: &Alphabet, x: Element) -> u32 {
    let chain = a.chain().unwrap();
    let e = chain.e();
    let gamma = chain.gamma();
    for i in 0..=e {
        let mut g = a.one().unwrap();
        for _ in 0..(e - i) {
            g = a.mul(g, gamma).unwrap();
        }
        if a.elements().any(|r| a.mul(g, r).unwrap() == x) {
            return i;
        }
    }
    unreachable!("every element lies in R = γ^0 R")
}
