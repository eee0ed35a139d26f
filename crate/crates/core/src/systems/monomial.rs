use std::collections::BTreeMap;
use std::sync::Arc;

use super::{minimalize, IdealAtObject, IdealRule};
use crate::algebra::Polynomial;
use crate::error::Result;
use crate::instances::{CategoryInstance, Object};
use crate::poset::{OrderIdeal, WeightedObject};
use crate::Elem;

/// Every weighting `|A| -> {0..=max}`.
fn weightings(elems: &[Elem], max: u32) -> Vec<BTreeMap<Elem, u32>> {
    let mut out = vec![BTreeMap::new()];
    for &e in elems {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..=max).map(move |k| {
                    let mut w = w.clone();
                    w.insert(e, k);
                    w
                })
            })
            .collect();
    }
    out
}

/// `Phi`: the classes `[A, alpha]` with `m_alpha in I_A`, over objects of
/// size at most `bound` and weights at most `max_weight`, kept by their
/// minimal elements. Every generator of the system must be a monomial.
pub fn phi_map(rule: &dyn IdealRule, bound: usize, max_weight: u32) -> Result<OrderIdeal> {
    let instance = rule.instance();
    let inst = &*instance;
    let mut ideal = OrderIdeal::new(instance.clone());
    for a in inst.objects(bound) {
        let at = rule.ideal_at(&a)?;
        let gens = at.minimal_monomials()?;
        if gens.is_empty() {
            continue;
        }
        for w in weightings(&inst.underlying(&a)?, max_weight) {
            let x = WeightedObject::new(inst, a.clone(), w)?;
            let m = x.monomial(at.ring())?;
            if gens.iter().any(|g| g.divides(&m)) {
                ideal.insert(x)?;
            }
        }
    }
    Ok(ideal)
}

/// `Psi`: the monomial ideal at `A` spanned by `m_alpha` for `[A, alpha]`
/// in the order ideal, generated by the push-forwards of its generators.
pub fn psi_map(ideal: &OrderIdeal, a: &Object) -> Result<IdealAtObject> {
    let inst = &**ideal.instance();
    let ring = inst.ring(a)?;
    let mut ms = Vec::new();
    for g in ideal.generators() {
        for phi in inst.hom(g.object(), a)? {
            ms.push(g.push_forward(inst, &phi, a)?.monomial(&ring)?);
        }
    }
    let gens = minimalize(ms)
        .into_iter()
        .map(|m| Polynomial::monomial(&ring, m))
        .collect::<Result<_>>()?;
    IdealAtObject::new(a.clone(), ring, gens)
}

/// The monomial system `A -> Psi(ideal)_A`.
pub struct MonomialSystem {
    ideal: OrderIdeal,
}

impl MonomialSystem {
    pub fn new(ideal: OrderIdeal) -> Self {
        MonomialSystem { ideal }
    }

    pub fn order_ideal(&self) -> &OrderIdeal {
        &self.ideal
    }
}

impl IdealRule for MonomialSystem {
    fn instance(&self) -> Arc<dyn CategoryInstance> {
        self.ideal.instance().clone()
    }

    fn ideal_at(&self, a: &Object) -> Result<IdealAtObject> {
        psi_map(&self.ideal, a)
    }
}
