use std::fmt;
use std::sync::Arc;

use super::{GeneratorData, IdealRule, OrbitSystem};
use crate::error::{Error, Result};
use crate::instances::{CategoryInstance, Object};

/// Per-object data from a probe.
#[derive(Debug, Clone)]
pub struct ObjectTrace {
    pub object: Object,
    /// Size of the reduced Groebner basis at each level.
    pub basis_sizes: Vec<usize>,
    /// First level (1-based) from which the ideal no longer changes.
    pub first_stable: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// All probed ideals agree from this level (1-based) on.
    Stabilized { level: usize },
    /// Some probed ideal still changes at the last level.
    NotStabilized,
}

#[derive(Debug, Clone)]
pub struct StabilizationReport {
    pub levels: usize,
    pub bound: Option<usize>,
    pub outcome: Outcome,
    pub objects: Vec<ObjectTrace>,
}

impl fmt::Display for StabilizationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scope = match self.bound {
            Some(b) => format!("objects of size <= {b}"),
            None => format!("{} given objects", self.objects.len()),
        };
        match self.outcome {
            Outcome::Stabilized { level } => {
                writeln!(f, "stabilized at level {level} of {} ({scope})", self.levels)?
            }
            Outcome::NotStabilized => writeln!(f, "not stabilized at bound ({} levels, {scope})", self.levels)?,
        }
        for t in &self.objects {
            let sizes: Vec<String> = t.basis_sizes.iter().map(|s| s.to_string()).collect();
            writeln!(f, "  {}: basis sizes [{}], stable from level {}", t.object, sizes.join(", "), t.first_stable)?;
        }
        Ok(())
    }
}

/// [`stabilization_probe_on`] over every object of size at most `bound`.
pub fn stabilization_probe(
    inst: Arc<dyn CategoryInstance>,
    chain: &[GeneratorData],
    bound: usize,
) -> Result<StabilizationReport> {
    let objects = inst.objects(bound);
    let mut report = stabilization_probe_on(inst, chain, &objects)?;
    report.bound = Some(bound);
    Ok(report)
}

/// Compares the systems of an ascending chain `G_1, G_2, ...` object by
/// object by reduced Groebner basis equality.
///
/// Fails with `NotAChain` if some generator of level `k` is missing from
/// the ideal of level `k + 1`. The chain counts as stabilized at level `n`
/// when every probed ideal agrees with the last level from `n` on; when the
/// last level still differs from the one before it, only "not stabilized"
/// can be said.
pub fn stabilization_probe_on(
    inst: Arc<dyn CategoryInstance>,
    chain: &[GeneratorData],
    objects: &[Object],
) -> Result<StabilizationReport> {
    let levels = chain.len();
    let systems: Vec<OrbitSystem> = chain
        .iter()
        .map(|g| OrbitSystem::new(inst.clone(), g.clone(), None))
        .collect();
    let mut traces = Vec::with_capacity(objects.len());
    for a in objects {
        let mut bases = Vec::with_capacity(levels);
        for s in &systems {
            bases.push(s.groebner_at(a)?);
        }
        for k in 0..levels.saturating_sub(1) {
            for g in systems[k].orbit_generators(a)?.generators() {
                if !bases[k + 1].member(g)? {
                    return Err(Error::NotAChain {
                        level: k + 1,
                        object: a.to_string(),
                        generator: g.to_string(),
                    });
                }
            }
        }
        let first_stable = match bases.last() {
            None => 1,
            Some(last) => (0..levels).find(|&k| bases[k] == *last).unwrap() + 1,
        };
        traces.push(ObjectTrace {
            object: a.clone(),
            basis_sizes: bases.iter().map(|b| b.len()).collect(),
            first_stable,
        });
    }
    let level = traces.iter().map(|t| t.first_stable).max().unwrap_or(1);
    let outcome = if levels <= 1 || level < levels {
        Outcome::Stabilized { level }
    } else {
        Outcome::NotStabilized
    };
    Ok(StabilizationReport {
        levels,
        bound: None,
        outcome,
        objects: traces,
    })
}
