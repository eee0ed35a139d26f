use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::Elem;

/// Ordered list of variable names; position 0 is the lex-largest variable.
pub struct VariableSet {
    vars: Vec<Elem>,
    index: HashMap<Elem, usize>,
}

/// Shared handle to a polynomial ring `Q[x_e : e in vars]`.
pub type Ring = Arc<VariableSet>;

impl VariableSet {
    pub fn new(vars: Vec<Elem>) -> Result<Ring> {
        let mut index = HashMap::with_capacity(vars.len());
        for (i, &v) in vars.iter().enumerate() {
            if index.insert(v, i).is_some() {
                return Err(Error::BadRenaming(format!("variable {v} listed twice")));
            }
        }
        Ok(Arc::new(VariableSet { vars, index }))
    }

    /// Ring whose variables are `vars` in ascending [`Elem`] order.
    pub fn sorted(mut vars: Vec<Elem>) -> Result<Ring> {
        vars.sort_unstable();
        Self::new(vars)
    }

    pub fn vars(&self) -> &[Elem] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn index_of(&self, v: Elem) -> Option<usize> {
        self.index.get(&v).copied()
    }
}

impl PartialEq for VariableSet {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl Eq for VariableSet {}

impl fmt::Debug for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.vars.iter().map(Elem::to_string).collect();
        write!(f, "Q[{}]", names.join(", "))
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Exponent vector. The derived `Ord` is the lex order of the module docs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub(crate) fn render(&self, ring: &VariableSet) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    ring.vars[i].to_string()
                } else {
                    format!("{}^{}", ring.vars[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}
