use std::fmt;
use std::sync::Arc;

use super::IdealRule;
use crate::algebra::{GroebnerBasis, Polynomial};
use crate::error::Result;
use crate::instances::{Morphism, Object};

/// A morphism `phi: A -> B` and a generator `g` of `I_A` with
/// `phi_*(g)` outside `I_B`.
#[derive(Debug, Clone)]
pub struct Violation {
    pub source: Object,
    pub target: Object,
    pub morphism: Morphism,
    pub generator: Polynomial,
    pub image: Polynomial,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} -> {} sends {} to {}, which is not in the target ideal",
            self.morphism, self.source, self.target, self.generator, self.image
        )
    }
}

/// Checks `phi_*(I_A) in I_B` for every morphism between objects of size at
/// most `bound`, generator by generator. Returns the first violation.
pub fn equivariance_check(rule: &dyn IdealRule, bound: usize) -> Result<Option<Violation>> {
    let instance = rule.instance();
    let inst = &*instance;
    let objects = inst.objects(bound);
    let ideals = objects
        .iter()
        .map(|a| rule.ideal_at(a))
        .collect::<Result<Vec<_>>>()?;
    let mut bases: Vec<Option<Arc<GroebnerBasis>>> = vec![None; objects.len()];
    for (i, a) in objects.iter().enumerate() {
        if ideals[i].is_zero() {
            continue;
        }
        for (j, b) in objects.iter().enumerate() {
            let homs = inst.hom(a, b)?;
            if homs.is_empty() {
                continue;
            }
            if bases[j].is_none() {
                bases[j] = Some(rule.groebner_at(b)?);
            }
            let gb = bases[j].as_ref().unwrap();
            for phi in &homs {
                for g in ideals[i].generators() {
                    let image = g.rename(phi.as_map(), gb.ring())?;
                    if !gb.member(&image)? {
                        return Ok(Some(Violation {
                            source: a.clone(),
                            target: b.clone(),
                            morphism: phi.clone(),
                            generator: g.clone(),
                            image,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}
