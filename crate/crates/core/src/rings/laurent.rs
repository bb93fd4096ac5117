use std::collections::BTreeMap;
use std::fmt::{self, Debug};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::scalar::Scalar;

/// Exponent monoid for sparse Laurent monomials.
pub trait Exponent: Clone + Ord + Hash + Debug + Send + Sync + 'static {
    fn origin() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
}

impl Exponent for i32 {
    fn origin() -> Self {
        0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl<const N: usize> Exponent for [i32; N] {
    fn origin() -> Self {
        [0; N]
    }
    fn plus(&self, other: &Self) -> Self {
        let mut out = *self;
        for (o, e) in out.iter_mut().zip(other) {
            *o += e;
        }
        out
    }
    fn negated(&self) -> Self {
        let mut out = *self;
        for o in out.iter_mut() {
            *o = -*o;
        }
        out
    }
}

/// Sparse Laurent polynomial with exponents `E` and coefficients `C`.
///
/// Terms live in a `BTreeMap`, so iteration order is the exponent order and
/// structural equality is polynomial equality. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<E: Exponent, C: Scalar> {
    terms: BTreeMap<E, C>,
}

impl<E: Exponent, C: Scalar> Default for Laurent<E, C> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<E: Exponent, C: Scalar> Laurent<E, C> {
    pub fn monomial(exp: E, coeff: C) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    pub fn constant(coeff: C) -> Self {
        Self::monomial(E::origin(), coeff)
    }

    pub fn from_terms<I: IntoIterator<Item = (E, C)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, &c);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&E, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (E, C)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, exp: &E) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn min_exp(&self) -> Option<&E> {
        self.terms.keys().next()
    }

    pub fn max_exp(&self) -> Option<&E> {
        self.terms.keys().next_back()
    }

    /// Is this a single term `c·x^e`?
    pub fn as_monomial(&self) -> Option<(&E, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn add_term(&mut self, exp: E, coeff: &C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                slot.get_mut().add_assign_ref(coeff);
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff.clone());
            }
        }
    }

    /// Multiply by the monomial `x^shift`.
    pub fn shift(&self, shift: &E) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e.plus(shift), c.clone())).collect() }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self::from_sorted(self.terms.iter().map(|(e, c)| (e.clone(), c.mul_ref(k))))
    }

    /// `self · k · x^shift` accumulated into `self`-independent target.
    pub fn add_scaled_shifted(&mut self, other: &Self, k: &C, shift: &E) {
        for (e, c) in &other.terms {
            self.add_term(e.plus(shift), &c.mul_ref(k));
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Push every term through `f` and resum.
    pub fn map_terms<E2: Exponent, C2: Scalar>(&self, mut f: impl FnMut(&E, &C) -> (E2, C2)) -> Laurent<E2, C2> {
        let mut out = Laurent::zero();
        for (e, c) in &self.terms {
            let (e2, c2) = f(e, c);
            out.add_term(e2, &c2);
        }
        out
    }

    /// Ring homomorphism into `T`, given images of monomials and coefficients.
    pub fn evaluate<T: Scalar>(&self, mut mono: impl FnMut(&E) -> T, mut coeff: impl FnMut(&C) -> T) -> T {
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            acc.add_assign_ref(&coeff(c).mul_ref(&mono(e)));
        }
        acc
    }

    fn from_sorted<I: Iterator<Item = (E, C)>>(iter: I) -> Self {
        Self { terms: iter.filter(|(_, c)| !c.is_zero()).collect() }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if let Some((e, c)) = small.as_monomial() {
            return Self::from_sorted(big.terms.iter().map(|(e2, c2)| (e2.plus(e), c2.mul_ref(c))));
        }
        let mut raw: Vec<(E, C)> = Vec::with_capacity(small.len() * big.len());
        for (e1, c1) in &small.terms {
            for (e2, c2) in &big.terms {
                raw.push((e1.plus(e2), c1.mul_ref(c2)));
            }
        }
        raw.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut terms = BTreeMap::new();
        let mut iter = raw.into_iter();
        let Some((mut cur_e, mut cur_c)) = iter.next() else {
            return Self::zero();
        };
        for (e, c) in iter {
            if e == cur_e {
                cur_c.add_assign_ref(&c);
            } else {
                if !cur_c.is_zero() {
                    terms.insert(cur_e, cur_c);
                }
                cur_e = e;
                cur_c = c;
            }
        }
        if !cur_c.is_zero() {
            terms.insert(cur_e, cur_c);
        }
        Self { terms }
    }
}

impl<E: Exponent, C: Scalar> Zero for Laurent<E, C> {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<E: Exponent, C: Scalar> One for Laurent<E, C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<'a, E: Exponent, C: Scalar> Add<&'a Laurent<E, C>> for &'a Laurent<E, C> {
    type Output = Laurent<E, C>;
    fn add(self, rhs: &'a Laurent<E, C>) -> Laurent<E, C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a, E: Exponent, C: Scalar> Sub<&'a Laurent<E, C>> for &'a Laurent<E, C> {
    type Output = Laurent<E, C>;
    fn sub(self, rhs: &'a Laurent<E, C>) -> Laurent<E, C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a, E: Exponent, C: Scalar> Mul<&'a Laurent<E, C>> for &'a Laurent<E, C> {
    type Output = Laurent<E, C>;
    fn mul(self, rhs: &'a Laurent<E, C>) -> Laurent<E, C> {
        self.mul_impl(rhs)
    }
}

impl<E: Exponent, C: Scalar> Add for Laurent<E, C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        if self.len() < rhs.len() {
            let mut rhs = rhs;
            rhs += &self;
            return rhs;
        }
        self += &rhs;
        self
    }
}

impl<E: Exponent, C: Scalar> Sub for Laurent<E, C> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<E: Exponent, C: Scalar> Mul for Laurent<E, C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_impl(&rhs)
    }
}

impl<E: Exponent, C: Scalar> Neg for Laurent<E, C> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<'a, E: Exponent, C: Scalar> Neg for &'a Laurent<E, C> {
    type Output = Laurent<E, C>;
    fn neg(self) -> Laurent<E, C> {
        -self.clone()
    }
}

impl<'a, E: Exponent, C: Scalar> AddAssign<&'a Laurent<E, C>> for Laurent<E, C> {
    fn add_assign(&mut self, rhs: &'a Laurent<E, C>) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c);
        }
    }
}

impl<'a, E: Exponent, C: Scalar> SubAssign<&'a Laurent<E, C>> for Laurent<E, C> {
    fn sub_assign(&mut self, rhs: &'a Laurent<E, C>) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), &-c.clone());
        }
    }
}

impl<E: Exponent, C: Scalar> Scalar for Laurent<E, C> {
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(C::from_i64(v))
    }
}

impl<E: Exponent, C: Scalar> Debug for Laurent<E, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
