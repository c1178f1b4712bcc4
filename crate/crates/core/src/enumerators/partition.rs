//! Partitions of an alphabet and their dual partitions.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::EnumError;
use crate::alphabet::{Alphabet, Element};
use crate::characters::Duality;
use crate::cyclotomic::CycInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum LambdaMode {
    /// Classes `{a, λa}` for one fixed `λ`.
    Single,
    /// Orbits under every unit squaring to one.
    #[default]
    Orbit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionKind {
    Complete,
    Hamming,
    Symmetric,
    Lambda(Element, LambdaMode),
    Order,
    Custom,
}

/// Ordered classes of alphabet elements.
#[derive(Debug, Clone)]
pub struct Partition {
    alphabet: Arc<Alphabet>,
    classes: Vec<Vec<Element>>,
    class_of: Vec<usize>,
    kind: PartitionKind,
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.classes == other.classes
    }
}

/// Partition JSON: `{"classes": [[index, ...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PartitionFile {
    pub classes: Vec<Vec<usize>>,
}

impl Partition {
    fn assemble(alphabet: Arc<Alphabet>, classes: Vec<Vec<Element>>, kind: PartitionKind, sort: bool) -> Self {
        let mut classes: Vec<Vec<Element>> = classes
            .into_iter()
            .map(|mut c| {
                c.sort();
                c
            })
            .collect();
        if sort {
            classes.sort();
        }
        let mut class_of = vec![0; alphabet.size()];
        for (i, c) in classes.iter().enumerate() {
            for a in c {
                class_of[a.index()] = i;
            }
        }
        Partition { alphabet, classes, class_of, kind }
    }

    /// Groups elements by a key, classes ordered by their least element.
    fn by_key<K: Ord>(alphabet: Arc<Alphabet>, kind: PartitionKind, key: impl Fn(Element) -> K) -> Self {
        let mut groups: BTreeMap<K, Vec<Element>> = BTreeMap::new();
        for a in alphabet.elements() {
            groups.entry(key(a)).or_default().push(a);
        }
        Self::assemble(alphabet, groups.into_values().collect(), kind, true)
    }

    /// Every element alone; the enumerator is the complete weight enumerator.
    pub fn complete(alphabet: Arc<Alphabet>) -> Self {
        Self::by_key(alphabet, PartitionKind::Complete, |a| a)
    }

    pub fn hamming(alphabet: Arc<Alphabet>) -> Self {
        Self::by_key(alphabet, PartitionKind::Hamming, |a| a != Element::ZERO)
    }

    /// `a ~ b` iff `a = ±b`.
    pub fn symmetric(alphabet: Arc<Alphabet>) -> Self {
        let a2 = alphabet.clone();
        Self::by_key(alphabet, PartitionKind::Symmetric, move |a| a.min(a2.neg(a)))
    }

    /// Units `λ` with `λ² = 1`.
    pub fn square_one_units(alphabet: &Alphabet) -> Result<Vec<Element>, EnumError> {
        let one = alphabet.one()?;
        let mut out = Vec::new();
        for u in alphabet.units() {
            if alphabet.mul(u, u)? == one {
                out.push(u);
            }
        }
        Ok(out)
    }

    /// Classes `{a, λa}` or orbits of the group `{λ : λ² = 1}`.
    pub fn lambda(alphabet: Arc<Alphabet>, lambda: Element, mode: LambdaMode) -> Result<Self, EnumError> {
        alphabet.element(lambda.index())?;
        let one = alphabet.one()?;
        if !alphabet.is_unit(lambda) {
            return Err(EnumError::BadLambda(format!("{} is not a unit", alphabet.pretty(lambda))));
        }
        if alphabet.mul(lambda, lambda)? != one {
            return Err(EnumError::BadLambda(format!("{}^2 is not 1", alphabet.pretty(lambda))));
        }
        let multipliers = match mode {
            LambdaMode::Single => vec![one, lambda],
            LambdaMode::Orbit => Self::square_one_units(&alphabet)?,
        };
        let a2 = alphabet.clone();
        let key = move |a: Element| multipliers.iter().map(|&m| a2.mul(m, a).expect("ring")).min().unwrap();
        Ok(Self::by_key(alphabet, PartitionKind::Lambda(lambda, mode), key))
    }

    /// The chain classes `b_0, …, b_e`, kept in chain order.
    pub fn order(alphabet: Arc<Alphabet>) -> Result<Self, EnumError> {
        let classes = alphabet.ideal_classes()?;
        Ok(Self::assemble(alphabet, classes, PartitionKind::Order, false))
    }

    /// Validates a user partition: nonempty, disjoint, exhaustive.
    pub fn custom(alphabet: Arc<Alphabet>, classes: &[Vec<usize>]) -> Result<Self, EnumError> {
        let mut seen = vec![false; alphabet.size()];
        let mut out = Vec::with_capacity(classes.len());
        for class in classes {
            if class.is_empty() {
                return Err(EnumError::InvalidPartition("empty class".into()));
            }
            let mut c = Vec::with_capacity(class.len());
            for &i in class {
                let a = alphabet.element(i)?;
                if std::mem::replace(&mut seen[i], true) {
                    return Err(EnumError::InvalidPartition(format!("element {i} appears twice")));
                }
                c.push(a);
            }
            out.push(c);
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(EnumError::InvalidPartition(format!("element {missing} is not covered")));
        }
        Ok(Self::assemble(alphabet, out, PartitionKind::Custom, true))
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn classes(&self) -> &[Vec<Element>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, a: Element) -> usize {
        self.class_of[a.index()]
    }

    pub fn kind(&self) -> PartitionKind {
        self.kind
    }

    /// `x0, x1, …` for complete and chain partitions, `x1, x2, …` otherwise.
    pub fn variable_names(&self) -> Vec<String> {
        let start = match self.kind {
            PartitionKind::Complete | PartitionKind::Order => 0,
            _ => 1,
        };
        super::poly::numbered_vars("x", start, self.len())
    }

    /// Classes as sets, independent of class order.
    pub fn as_set_of_sets(&self) -> Vec<Vec<Element>> {
        let mut c = self.classes.clone();
        c.sort();
        c
    }

    /// Class-sum signature `(Σ_{b ∈ A_j} M_{a,b})_j` of row `a`.
    pub fn signature(&self, m: &Duality, a: Element) -> Vec<CycInt> {
        let n = m.root_order();
        let row = m.row(a);
        self.classes
            .iter()
            .map(|class| {
                let mut counts = vec![0i64; n as usize];
                for b in class {
                    counts[row[b.index()] as usize] += 1;
                }
                CycInt::from_group_ring(&counts, n)
            })
            .collect()
    }

    /// Groups character indices by equal class-sum signatures.
    pub fn dual(&self, m: &Duality) -> Result<Partition, EnumError> {
        self.check_duality(m)?;
        Ok(Self::by_key(self.alphabet.clone(), PartitionKind::Custom, |a| self.signature(m, a)))
    }

    pub fn is_reflexive(&self, m: &Duality) -> Result<bool, EnumError> {
        Ok(self.dual(m)?.len() == self.len())
    }

    pub fn is_autodual(&self, m: &Duality) -> Result<bool, EnumError> {
        let autodual = self.dual(m)?.as_set_of_sets() == self.as_set_of_sets();
        debug_assert!(!autodual || self.is_reflexive(m)?);
        Ok(autodual)
    }

    pub(crate) fn check_duality(&self, m: &Duality) -> Result<(), EnumError> {
        if **m.alphabet() != *self.alphabet {
            return Err(EnumError::AlphabetMismatch {
                expected: self.alphabet.name(),
                found: m.alphabet().name(),
            });
        }
        Ok(())
    }

    pub fn to_file(&self) -> PartitionFile {
        PartitionFile { classes: self.classes.iter().map(|c| c.iter().map(|a| a.index()).collect()).collect() }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .classes
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|a| self.alphabet.pretty(*a)).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Arc<Alphabet> {
        Arc::new(Alphabet::zn(n).unwrap())
    }

    fn idx(p: &Partition) -> Vec<Vec<usize>> {
        p.classes().iter().map(|c| c.iter().map(|a| a.index()).collect()).collect()
    }

    fn sets(p: &Partition) -> Vec<Vec<usize>> {
        p.as_set_of_sets().iter().map(|c| c.iter().map(|a| a.index()).collect()).collect()
    }

    #[test]
    fn hamming_classes() {
        assert_eq!(idx(&Partition::hamming(z(4))), vec![vec![0], vec![1, 2, 3]]);
        assert_eq!(idx(&Partition::hamming(z(2))), vec![vec![0], vec![1]]);
        let f3 = Arc::new(Alphabet::fq(3, 1, None).unwrap());
        assert_eq!(idx(&Partition::hamming(f3)), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn symmetric_classes() {
        assert_eq!(idx(&Partition::symmetric(z(4))), vec![vec![0], vec![1, 3], vec![2]]);
        assert_eq!(idx(&Partition::symmetric(z(5))), vec![vec![0], vec![1, 4], vec![2, 3]]);
        let f4 = Arc::new(Alphabet::fq(2, 2, None).unwrap());
        assert_eq!(Partition::symmetric(f4.clone()).len(), 4);
        let g = Arc::new(Alphabet::group(&[2, 2]).unwrap());
        assert_eq!(Partition::symmetric(g).len(), 4);
    }

    #[test]
    fn lambda_classes() {
        let orbit = Partition::lambda(z(8), Element::new(3), LambdaMode::Orbit).unwrap();
        assert_eq!(idx(&orbit), vec![vec![0], vec![1, 3, 5, 7], vec![2, 6], vec![4]]);
        let z12 = Partition::lambda(z(12), Element::new(5), LambdaMode::Orbit).unwrap();
        assert_eq!(idx(&z12), vec![vec![0], vec![1, 5, 7, 11], vec![2, 10], vec![3, 9], vec![4, 8], vec![6]]);
        let single = Partition::lambda(z(8), Element::new(3), LambdaMode::Single).unwrap();
        let mut expected = vec![vec![0], vec![1, 3], vec![5, 7], vec![2, 6], vec![4]];
        expected.sort();
        assert_eq!(sets(&single), expected);
        assert!(matches!(Partition::lambda(z(8), Element::new(2), LambdaMode::Single), Err(EnumError::BadLambda(_))));
        assert!(matches!(Partition::lambda(z(5), Element::new(2), LambdaMode::Single), Err(EnumError::BadLambda(_))));
    }

    #[test]
    fn order_classes() {
        assert_eq!(idx(&Partition::order(z(9)).unwrap()), vec![vec![0], vec![3, 6], vec![1, 2, 4, 5, 7, 8]]);
        let p16 = Partition::order(z(16)).unwrap();
        assert_eq!(idx(&p16)[1], vec![8]);
        assert_eq!(idx(&p16)[4].len(), 8);
        let f5 = Arc::new(Alphabet::fq(5, 1, None).unwrap());
        assert_eq!(Partition::order(f5.clone()).unwrap(), Partition::hamming(f5));
        assert!(Partition::order(z(12)).is_err());
    }

    #[test]
    fn custom_validation() {
        let p = Partition::custom(z(6), &[vec![2, 4], vec![0], vec![5, 3, 1]]).unwrap();
        assert_eq!(idx(&p), vec![vec![0], vec![1, 3, 5], vec![2, 4]]);
        assert!(Partition::custom(z(6), &[vec![0, 1], vec![1, 2, 3, 4, 5]]).is_err());
        assert!(Partition::custom(z(6), &[vec![0, 1]]).is_err());
        assert!(Partition::custom(z(6), &[vec![0, 1, 2, 3, 4, 5], vec![]]).is_err());
        assert!(Partition::custom(z(6), &[vec![0, 1, 2, 3, 4, 5, 6]]).is_err());
    }

    #[test]
    fn z6_dual_partition() {
        let a = z(6);
        let p = Partition::custom(a.clone(), &[vec![0], vec![1, 3, 5], vec![2, 4]]).unwrap();
        let m = Duality::standard(a);
        assert_eq!(idx(&p.dual(&m).unwrap()), vec![vec![0], vec![1, 2, 4, 5], vec![3]]);
        assert!(p.is_reflexive(&m).unwrap());
        assert!(!p.is_autodual(&m).unwrap());
    }

    #[test]
    fn autodual_examples() {
        let m5 = Duality::standard(z(5));
        assert!(Partition::symmetric(z(5)).is_autodual(&m5).unwrap());
        let m4 = Duality::standard(z(4));
        assert!(Partition::hamming(z(4)).is_autodual(&m4).unwrap());
        let complete = Partition::complete(z(4));
        assert_eq!(complete.dual(&m4).unwrap().len(), 4);
        let ham = Partition::hamming(z(7));
        let m7 = Duality::standard(z(7));
        let sig: Vec<Vec<i64>> = [0, 3]
            .iter()
            .map(|&a| ham.signature(&m7, Element::new(a)).iter().map(|c| c.as_integer().unwrap()).collect())
            .collect();
        assert_eq!(sig, vec![vec![1, 6], vec![1, -1]]);
    }
}
