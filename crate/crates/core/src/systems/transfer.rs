use std::collections::BTreeMap;
use std::sync::Arc;

use super::{IdealAtObject, IdealRule};
use crate::error::{Error, Result};
use crate::instances::{check_concrete, CategoryInstance, ConcreteFunctor, Object};

/// `A -> I_{F(A)}`, read in `R_A` through the identification
/// `|A| = |F(A)|`.
pub struct TransferredSystem {
    functor: Arc<dyn ConcreteFunctor>,
    inner: Arc<dyn IdealRule>,
}

/// Pulls `inner` back along `functor` after checking concreteness on
/// source objects of size at most `check_bound`.
pub fn transfer_system(
    functor: Arc<dyn ConcreteFunctor>,
    inner: Arc<dyn IdealRule>,
    check_bound: usize,
) -> Result<TransferredSystem> {
    let (target, have) = (functor.target().name(), inner.instance().name());
    if target != have {
        return Err(Error::InstanceMismatch(format!(
            "functor lands in {target} but the system lives on {have}"
        )));
    }
    check_concrete(&*functor, check_bound)?;
    Ok(TransferredSystem { functor, inner })
}

impl IdealRule for TransferredSystem {
    fn instance(&self) -> Arc<dyn CategoryInstance> {
        self.functor.source()
    }

    fn ideal_at(&self, a: &Object) -> Result<IdealAtObject> {
        let fa = self.functor.map_object(a)?;
        let there = self.inner.ideal_at(&fa)?;
        let back: BTreeMap<_, _> = self.functor.identify(a)?.into_iter().map(|(x, y)| (y, x)).collect();
        let ring = self.functor.source().ring(a)?;
        let gens = there
            .generators()
            .iter()
            .map(|g| g.rename(&back, &ring))
            .collect::<Result<_>>()?;
        IdealAtObject::new(a.clone(), ring, gens)
    }
}
