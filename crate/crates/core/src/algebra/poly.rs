use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ring::{same_ring, Monomial, Ring, VariableSet};
use super::Coeff;
use crate::error::{Error, Result};
use crate::Elem;

/// A single coefficient-times-monomial term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub monomial: Monomial,
    pub coefficient: Coeff,
}

/// Sparse polynomial with exact rational coefficients. Zero coefficients are
/// never stored.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Coeff>,
}

/// Compares two exponent vectors of `ring` in lex order.
pub fn lex_compare(a: &Monomial, b: &Monomial, ring: &VariableSet) -> Result<Ordering> {
    if a.0.len() != ring.len() || b.0.len() != ring.len() {
        return Err(Error::RingMismatch);
    }
    Ok(a.cmp(b))
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.len()), c);
        }
        p
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn var(ring: &Ring, v: Elem) -> Result<Self> {
        let i = ring
            .index_of(v)
            .ok_or_else(|| Error::BadRenaming(format!("{v} is not a variable of {ring:?}")))?;
        let mut m = Monomial::one(ring.len());
        m.0[i] = 1;
        Ok(Self::from_terms(ring, [(m, Coeff::one())]))
    }

    pub fn monomial(ring: &Ring, m: Monomial) -> Result<Self> {
        if m.0.len() != ring.len() {
            return Err(Error::RingMismatch);
        }
        Ok(Self::from_terms(ring, [(m, Coeff::one())]))
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.0.len(), ring.len(), "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, Coeff)> {
        self.terms.pop_last()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    /// The lex-greatest term.
    pub fn init(&self) -> Result<Term> {
        self.leading_term()
            .map(|(m, c)| Term {
                monomial: m.clone(),
                coefficient: c.clone(),
            })
            .ok_or(Error::ZeroPolynomial)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = Polynomial::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    /// `self -= c * m * other`, in place.
    pub(crate) fn sub_mul_term(&mut self, c: &Coeff, m: &Monomial, other: &Polynomial) {
        for (k, x) in &other.terms {
            self.add_term(k.mul(m), -(x * c));
        }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ring);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Applies `x_e -> x_{map(e)}` and lands in `target`.
    ///
    /// `map` must be defined on every variable occurring in `self`, must be
    /// injective on its domain, and must hit variables of `target`.
    pub fn rename(&self, map: &BTreeMap<Elem, Elem>, target: &Ring) -> Result<Polynomial> {
        let mut seen = HashSet::with_capacity(map.len());
        if let Some((_, dup)) = map.iter().find(|(_, v)| !seen.insert(**v)) {
            return Err(Error::BadRenaming(format!("{dup} is hit twice")));
        }
        let used = self.used_variables();
        let mut idx = vec![usize::MAX; self.ring.len()];
        for i in used {
            let v = self.ring.vars()[i];
            let img = map
                .get(&v)
                .ok_or_else(|| Error::BadRenaming(format!("{v} has no image")))?;
            idx[i] = target
                .index_of(*img)
                .ok_or_else(|| Error::BadRenaming(format!("{img} is not a variable of {target:?}")))?;
        }
        Ok(self.rename_indices(&idx, target))
    }

    /// Renaming by variable positions; entries for unused variables are
    /// ignored.
    pub(crate) fn rename_indices(&self, idx: &[usize], target: &Ring) -> Polynomial {
        let mut terms: Vec<(Monomial, Coeff)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; target.len()];
                for (i, &k) in m.0.iter().enumerate() {
                    if k > 0 {
                        e[idx[i]] += k;
                    }
                }
                (Monomial(e), c.clone())
            })
            .collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut out = Polynomial::zero(target);
        if terms.windows(2).all(|w| w[0].0 != w[1].0) {
            out.terms = terms.into_iter().collect();
        } else {
            for (m, c) in terms {
                out.add_term(m, c);
            }
        }
        out
    }

    /// Moves the polynomial into another ring over a superset of its
    /// variables, keeping names.
    pub fn embed_into(&self, target: &Ring) -> Result<Polynomial> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        let map: BTreeMap<Elem, Elem> = self.ring.vars().iter().map(|&v| (v, v)).collect();
        self.rename(&map, target)
    }

    fn used_variables(&self) -> Vec<usize> {
        (0..self.ring.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect()
    }

    /// Evaluates at a point given in ring order.
    pub fn eval(&self, point: &[Coeff]) -> Result<Coeff> {
        if point.len() != self.ring.len() {
            return Err(Error::RingMismatch);
        }
        let mut total = Coeff::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            total += t;
        }
        Ok(total)
    }
}

/// `prod_{i<j} (x_i - x_j)` over the given variables, in list order.
pub fn discriminant(ring: &Ring, vars: &[Elem]) -> Result<Polynomial> {
    let mut seen = HashSet::new();
    if let Some(v) = vars.iter().find(|v| !seen.insert(**v)) {
        return Err(Error::BadRenaming(format!("{v} repeated in discriminant")));
    }
    let xs: Vec<Polynomial> = vars
        .iter()
        .map(|&v| Polynomial::var(ring, v))
        .collect::<Result<_>>()?;
    let mut out = Polynomial::one(ring);
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            out = &out * &(&xs[i] - &xs[j]);
        }
    }
    Ok(out)
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ring.vars().hash(state);
        self.terms.hash(state);
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for &Polynomial {
            type Output = Polynomial;
            /// Panics if the operands live in different rings; use the
            /// `checked_*` methods to get an error instead.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("operands in the same ring")
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Coeff::one())
    }
}

fn fmt_coeff(c: &Coeff) -> String {
    if c.denom() == &BigInt::one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Terms in decreasing lex order, e.g. `3/2*x1^2*x3 - x2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let constant = m.degree() == 0;
            if constant {
                f.write_str(&fmt_coeff(&abs))?;
            } else if abs.is_one() {
                f.write_str(&m.render(&self.ring))?;
            } else {
                write!(f, "{}*{}", fmt_coeff(&abs), m.render(&self.ring))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {:?}", self.ring)
    }
}

impl Term {
    pub fn to_polynomial(&self, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(ring, [(self.monomial.clone(), self.coefficient.clone())])
    }
}
