use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::group::{canonical_key, FiniteGroup, GroupKey};

/// A finite ℚ-linear combination of classes `[BG]`, keyed by isomorphism class.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KGpdElement {
    terms: BTreeMap<GroupKey, BigRational>,
}

impl KGpdElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The class `[BG]`.
    pub fn class_of(key: GroupKey) -> Self {
        Self::term(key, BigRational::one())
    }

    pub fn of_group(g: &FiniteGroup) -> Self {
        Self::class_of(canonical_key(g))
    }

    pub fn term(key: GroupKey, coeff: BigRational) -> Self {
        let mut x = Self::zero();
        x.add_term(key, coeff);
        x
    }

    pub fn add_term(&mut self, key: GroupKey, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_int_term(&mut self, key: GroupKey, coeff: &BigInt) {
        self.add_term(key, BigRational::from_integer(coeff.clone()));
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &GroupKey) -> BigRational {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupKey, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Apply a linear map given on basis classes.
    pub fn map_linear(&self, mut f: impl FnMut(&GroupKey) -> KGpdElement) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out += &f(k).scale(c);
        }
        out
    }
}

impl AddAssign<&KGpdElement> for KGpdElement {
    fn add_assign(&mut self, rhs: &KGpdElement) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl Add for &KGpdElement {
    type Output = KGpdElement;
    fn add(self, rhs: &KGpdElement) -> KGpdElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for KGpdElement {
    type Output = KGpdElement;
    fn add(mut self, rhs: KGpdElement) -> KGpdElement {
        self += &rhs;
        self
    }
}

impl Neg for &KGpdElement {
    type Output = KGpdElement;
    fn neg(self) -> KGpdElement {
        KGpdElement {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl Neg for KGpdElement {
    type Output = KGpdElement;
    fn neg(self) -> KGpdElement {
        -&self
    }
}

impl Sub for &KGpdElement {
    type Output = KGpdElement;
    fn sub(self, rhs: &KGpdElement) -> KGpdElement {
        self + &(-rhs)
    }
}

impl Sub for KGpdElement {
    type Output = KGpdElement;
    fn sub(self, rhs: KGpdElement) -> KGpdElement {
        &self - &rhs
    }
}

impl std::iter::Sum for KGpdElement {
    fn sum<I: Iterator<Item = KGpdElement>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}
