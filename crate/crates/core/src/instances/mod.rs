//! Concrete categories with finite object and morphism enumeration.
//!
//! An instance hands out labeled objects up to a size bound, the underlying
//! set `|A|` of each object, the hom-sets between objects as set maps, and,
//! where one exists, a total order on `|A|` natural in `A`.

mod descriptor;
mod functor;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;

pub use descriptor::InstanceDescriptor;
pub use functor::{check_concrete, essentially_surjective, ConcreteFunctor, Forgetful, FunctorReport};

use crate::algebra::{Ring, VariableSet};
use crate::error::Result;
use crate::tree::{BoronTree, OrderedBoronTree};
use crate::Elem;

/// A labeled object of some instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Object {
    /// `[n] = {1, ..., n}`; objects of FI, OI, BOI and their `|.|_m` variants.
    Set(u32),
    /// A chain `1 < ... < n` with position `i` colored `colors[i-1]` (colors
    /// start at 1).
    Colored(Vec<u32>),
    Boron(BoronTree),
    OrderedBoron(OrderedBoronTree),
    /// A finite subset of `N x N`.
    Pairs(BTreeSet<(u32, u32)>),
}

impl Object {
    /// The `n`-cycle `{(1,2), (2,3), ..., (n,1)}`.
    pub fn cycle(n: u32) -> Object {
        Object::Pairs((1..=n).map(|i| (i, i % n + 1)).collect())
    }

    /// Elements `a` and `b` occurring in some pair.
    pub fn support(&self) -> Vec<u32> {
        match self {
            Object::Pairs(p) => p
                .iter()
                .flat_map(|&(a, b)| [a, b])
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect(),
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Set(n) => write!(f, "[{n}]"),
            Object::Colored(c) => write!(f, "<{}>", c.iter().join(",")),
            Object::Boron(t) => write!(f, "{}", t.to_newick()),
            Object::OrderedBoron(t) => write!(f, "{}", t.to_newick()),
            Object::Pairs(p) => {
                write!(f, "{{{}}}", p.iter().map(|(a, b)| format!("({a},{b})")).join(","))
            }
        }
    }
}

/// A morphism, recorded by its underlying set map `|A| -> |B|`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Morphism {
    map: BTreeMap<Elem, Elem>,
}

impl Morphism {
    pub fn new(map: BTreeMap<Elem, Elem>) -> Self {
        Morphism { map }
    }

    pub fn identity(elems: &[Elem]) -> Self {
        Morphism::new(elems.iter().map(|&e| (e, e)).collect())
    }

    pub fn apply(&self, e: Elem) -> Option<Elem> {
        self.map.get(&e).copied()
    }

    pub fn as_map(&self) -> &BTreeMap<Elem, Elem> {
        &self.map
    }

    /// `then . self`.
    pub fn then(&self, then: &Morphism) -> Option<Morphism> {
        self.map
            .iter()
            .map(|(&a, b)| then.apply(*b).map(|c| (a, c)))
            .collect::<Option<BTreeMap<_, _>>>()
            .map(Morphism::new)
    }

    pub fn is_injective(&self) -> bool {
        self.map.values().collect::<BTreeSet<_>>().len() == self.map.len()
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.map.iter().map(|(a, b)| format!("{}->{}", a.label(), b.label()));
        write!(f, "{{{}}}", parts.format(", "))
    }
}

/// A finitary FI-concrete category.
pub trait CategoryInstance: Send + Sync {
    fn name(&self) -> String;

    /// `InstanceMismatch` unless `a` is an object of this instance.
    fn check(&self, a: &Object) -> Result<()>;

    /// Every labeled object of size at most `bound`, in a fixed order.
    fn objects(&self, bound: usize) -> Vec<Object>;

    /// The size measured by object bounds.
    fn size(&self, a: &Object) -> usize;

    /// `|A|`, sorted.
    fn underlying(&self, a: &Object) -> Result<Vec<Elem>>;

    /// `Hom(A, B)` as set maps, in a fixed order.
    fn hom(&self, a: &Object, b: &Object) -> Result<Vec<Morphism>>;

    /// `|A|` in increasing order, when the instance is ordered.
    fn ordering(&self, a: &Object) -> Result<Option<Vec<Elem>>>;

    fn parse_object(&self, text: &str) -> Result<Object>;

    /// `R_A`. Variables follow the ordering when there is one, so that the
    /// smallest element carries the lex-largest variable.
    fn ring(&self, a: &Object) -> Result<Ring> {
        let vars = match self.ordering(a)? {
            Some(o) => o,
            None => self.underlying(a)?,
        };
        VariableSet::new(vars)
    }
}

pub(crate) fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    (0..n).permutations(k).collect()
}

pub(crate) fn increasing(k: usize, n: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    (0..n).combinations(k).collect()
}
