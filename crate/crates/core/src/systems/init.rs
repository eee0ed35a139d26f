use std::sync::Arc;

use super::{IdealAtObject, IdealRule};
use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::instances::{CategoryInstance, Object};

/// `init(I_A)`: the monomial ideal of lex-leading terms, from the reduced
/// Groebner basis. Needs an ordered instance.
pub fn init_system(rule: &dyn IdealRule, a: &Object) -> Result<IdealAtObject> {
    let inst = rule.instance();
    if inst.ordering(a)?.is_none() {
        return Err(Error::NoOrdering(inst.name()));
    }
    let gb = rule.groebner_at(a)?;
    let gens = gb
        .leading_monomials()
        .into_iter()
        .map(|m| Polynomial::monomial(gb.ring(), m))
        .collect::<Result<_>>()?;
    IdealAtObject::new(a.clone(), gb.ring().clone(), gens)
}

/// `A -> init(I_A)` as a system in its own right.
pub struct InitSystem {
    inner: Arc<dyn IdealRule>,
}

impl InitSystem {
    pub fn new(inner: Arc<dyn IdealRule>) -> Self {
        InitSystem { inner }
    }
}

impl IdealRule for InitSystem {
    fn instance(&self) -> Arc<dyn CategoryInstance> {
        self.inner.instance()
    }

    fn ideal_at(&self, a: &Object) -> Result<IdealAtObject> {
        init_system(&*self.inner, a)
    }
}
