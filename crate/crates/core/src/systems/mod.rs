//! Ideal systems `A -> I_A` over a category instance.
//!
//! Systems are presented by finitely many generators `(T_i, f_i)`; the ideal
//! at `A` is generated by every `phi_*(f_i)` with `phi: T_i -> A`. Ideals
//! are computed on demand and their Groebner bases memoized per object.

mod equivariance;
mod init;
mod monomial;
mod spec;
mod stabilize;
mod transfer;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, RwLock};

pub use equivariance::{equivariance_check, Violation};
pub use init::{init_system, InitSystem};
pub use monomial::{phi_map, psi_map, MonomialSystem};
pub use spec::SystemSpec;
pub use stabilize::{stabilization_probe, stabilization_probe_on, ObjectTrace, Outcome, StabilizationReport};
pub use transfer::{transfer_system, TransferredSystem};

use crate::algebra::{buchberger, graded_span_member, GroebnerBasis, Monomial, Polynomial, Ring, SpanCertificate};
use crate::error::{Error, Result};
use crate::instances::{CategoryInstance, Morphism, Object};

/// Generators `(T_i, f_i)` with `f_i` in `R_{T_i}`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeneratorData {
    pairs: Vec<(Object, Polynomial)>,
}

impl GeneratorData {
    /// Moves each polynomial into the ring of its object; it may be written
    /// over any subset of `|T_i|`.
    pub fn new(inst: &dyn CategoryInstance, pairs: Vec<(Object, Polynomial)>) -> Result<Self> {
        let pairs = pairs
            .into_iter()
            .map(|(t, f)| {
                let ring = inst.ring(&t)?;
                let f = f.embed_into(&ring).map_err(|_| Error::RingMismatch)?;
                Ok((t, f))
            })
            .collect::<Result<_>>()?;
        Ok(GeneratorData { pairs })
    }

    pub fn pairs(&self) -> &[(Object, Polynomial)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Generators of `I_A` in `R_A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealAtObject {
    object: Object,
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl IdealAtObject {
    pub fn new(object: Object, ring: Ring, generators: Vec<Polynomial>) -> Result<Self> {
        let generators = generators
            .into_iter()
            .map(|g| g.embed_into(&ring).map_err(|_| Error::RingMismatch))
            .collect::<Result<_>>()?;
        Ok(IdealAtObject {
            object,
            ring,
            generators,
        })
    }

    pub fn object(&self) -> &Object {
        &self.object
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    pub fn groebner(&self) -> Result<GroebnerBasis> {
        buchberger(&self.ring, &self.generators)
    }

    /// Minimal monomial generators, ascending. `NotMonomial` if some
    /// generator has more than one term.
    pub fn minimal_monomials(&self) -> Result<Vec<Monomial>> {
        let mut ms = Vec::new();
        for g in &self.generators {
            if g.is_zero() {
                continue;
            }
            if !g.is_monomial() {
                return Err(Error::NotMonomial(g.to_string()));
            }
            ms.push(g.leading_monomial().unwrap().clone());
        }
        Ok(minimalize(ms))
    }
}

impl fmt::Display for IdealAtObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "I_{} = ({})", self.object, gens.join(", "))
    }
}

/// Minimal elements under divisibility, deduplicated and ascending.
pub(crate) fn minimalize(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort();
    ms.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    // a divisor has smaller total degree, so scanning by degree suffices
    ms.sort_by_key(|m| m.degree());
    for m in ms {
        if !out.iter().any(|d| d.divides(&m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

/// Anything that assigns an ideal to each object of an instance.
pub trait IdealRule: Send + Sync {
    fn instance(&self) -> Arc<dyn CategoryInstance>;

    fn ideal_at(&self, a: &Object) -> Result<IdealAtObject>;

    fn groebner_at(&self, a: &Object) -> Result<Arc<GroebnerBasis>> {
        Ok(Arc::new(self.ideal_at(a)?.groebner()?))
    }
}

/// `{phi_*(f_i) : phi in Hom(T_i, A)}` without exact duplicates and zeros,
/// in generator-then-morphism order.
pub fn orbit_generators(inst: &dyn CategoryInstance, data: &GeneratorData, a: &Object) -> Result<IdealAtObject> {
    let ring = inst.ring(a)?;
    let mut seen = HashSet::new();
    let mut gens = Vec::new();
    for (t, f) in &data.pairs {
        let stab = stabilizer(inst, t, f)?;
        for phi in inst.hom(t, a)? {
            // phi and phi . sigma push f to the same place; rename once per coset
            if stab.iter().any(|s| s.then(&phi).is_some_and(|p| p < phi)) {
                continue;
            }
            let g = f.rename(phi.as_map(), &ring)?;
            if !g.is_zero() && seen.insert(g.clone()) {
                gens.push(g);
            }
        }
    }
    IdealAtObject::new(a.clone(), ring, gens)
}

/// Automorphisms `sigma` of `t` with `sigma_*(f) = f`.
fn stabilizer(inst: &dyn CategoryInstance, t: &Object, f: &Polynomial) -> Result<Vec<Morphism>> {
    let mut out = Vec::new();
    for sigma in inst.hom(t, t)? {
        if f.rename(sigma.as_map(), f.ring())? == *f {
            out.push(sigma);
        }
    }
    Ok(out)
}

/// An orbit-generated ideal system.
pub struct OrbitSystem {
    instance: Arc<dyn CategoryInstance>,
    data: GeneratorData,
    bound: Option<usize>,
    cache: RwLock<HashMap<String, Arc<GroebnerBasis>>>,
    orbits: RwLock<HashMap<String, IdealAtObject>>,
}

/// Which decision procedure `member_with` uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Generator lookup, then graded span when everything is homogeneous of
    /// one degree, else Groebner.
    Auto,
    Span,
    Groebner,
}

#[derive(Debug, Clone)]
pub enum Certificate {
    Zero,
    /// `f` is the orbit generator with this index.
    Generator(usize),
    Span(SpanCertificate),
    /// Normal form with respect to the reduced basis.
    Groebner {
        remainder: Polynomial,
        steps: usize,
        basis_size: usize,
    },
}

#[derive(Debug, Clone)]
pub struct Membership {
    pub member: bool,
    pub certificate: Certificate,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.member { "MEMBER" } else { "NOT MEMBER" };
        match &self.certificate {
            Certificate::Zero => write!(f, "{verdict} (zero)"),
            Certificate::Generator(_) => write!(f, "{verdict} (generator)"),
            Certificate::Span(c) if c.member => write!(
                f,
                "{verdict} (graded span: rank {}, {} nonzero coefficients)",
                c.rank,
                c.coefficients.len()
            ),
            Certificate::Span(c) => write!(
                f,
                "{verdict} (graded span rank certificate: generators span rank {}, adding f gives rank {})",
                c.rank,
                c.rank + 1
            ),
            Certificate::Groebner {
                remainder,
                steps,
                basis_size,
            } => write!(
                f,
                "{verdict} (groebner: basis of {basis_size}, {steps} reduction steps, normal form {remainder})"
            ),
        }
    }
}

impl OrbitSystem {
    pub fn new(instance: Arc<dyn CategoryInstance>, data: GeneratorData, bound: Option<usize>) -> Self {
        OrbitSystem {
            instance,
            data,
            bound,
            cache: RwLock::new(HashMap::new()),
            orbits: RwLock::new(HashMap::new()),
        }
    }

    pub fn data(&self) -> &GeneratorData {
        &self.data
    }

    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    pub fn instance_arc(&self) -> &Arc<dyn CategoryInstance> {
        &self.instance
    }

    fn in_range(&self, a: &Object) -> Result<()> {
        self.instance.check(a)?;
        let size = self.instance.size(a);
        match self.bound {
            Some(bound) if size > bound => Err(Error::OutOfRange { size, bound }),
            _ => Ok(()),
        }
    }

    pub fn orbit_generators(&self, a: &Object) -> Result<IdealAtObject> {
        self.in_range(a)?;
        let key = a.to_string();
        if let Some(ideal) = self.orbits.read().unwrap().get(&key) {
            return Ok(ideal.clone());
        }
        let ideal = orbit_generators(&*self.instance, &self.data, a)?;
        Ok(self.orbits.write().unwrap().entry(key).or_insert(ideal).clone())
    }

    pub fn member(&self, a: &Object, f: &Polynomial) -> Result<Membership> {
        self.member_with(a, f, Strategy::Auto)
    }

    pub fn member_with(&self, a: &Object, f: &Polynomial, strategy: Strategy) -> Result<Membership> {
        let ideal = self.orbit_generators(a)?;
        let f = f.embed_into(ideal.ring()).map_err(|_| Error::RingMismatch)?;
        let gens = ideal.generators();
        if strategy == Strategy::Auto {
            if f.is_zero() {
                return Ok(Membership {
                    member: true,
                    certificate: Certificate::Zero,
                });
            }
            if let Some(i) = gens.iter().position(|g| *g == f) {
                return Ok(Membership {
                    member: true,
                    certificate: Certificate::Generator(i),
                });
            }
        }
        let single_degree = f.is_homogeneous()
            && gens
                .iter()
                .all(|g| g.is_homogeneous() && (f.is_zero() || g.degree() == f.degree()));
        let use_span = match strategy {
            Strategy::Span => true,
            Strategy::Groebner => false,
            Strategy::Auto => single_degree,
        };
        if use_span {
            let cert = graded_span_member(&f, gens)?;
            return Ok(Membership {
                member: cert.member,
                certificate: Certificate::Span(cert),
            });
        }
        let gb = self.groebner_at(a)?;
        let red = gb.reduce(&f)?;
        Ok(Membership {
            member: red.remainder.is_zero(),
            certificate: Certificate::Groebner {
                remainder: red.remainder,
                steps: red.steps,
                basis_size: gb.len(),
            },
        })
    }
}

impl IdealRule for OrbitSystem {
    fn instance(&self) -> Arc<dyn CategoryInstance> {
        self.instance.clone()
    }

    fn ideal_at(&self, a: &Object) -> Result<IdealAtObject> {
        self.orbit_generators(a)
    }

    fn groebner_at(&self, a: &Object) -> Result<Arc<GroebnerBasis>> {
        let key = a.to_string();
        if let Some(gb) = self.cache.read().unwrap().get(&key) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(self.orbit_generators(a)?.groebner()?);
        Ok(self.cache.write().unwrap().entry(key).or_insert(gb).clone())
    }
}

/// `system_member` as a free function.
pub fn system_member(sys: &OrbitSystem, a: &Object, f: &Polynomial) -> Result<Membership> {
    sys.member(a, f)
}

#[cfg(test)]
mod tests;
