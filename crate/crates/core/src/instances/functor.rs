use std::collections::BTreeMap;
use std::sync::Arc;

use super::{CategoryInstance, InstanceDescriptor, Morphism, Object};
use crate::error::{Error, Result};
use crate::tree::OrderedBoronTree;
use crate::Elem;

/// A functor `D -> C` together with the identification `|A| -> |F(A)|`.
pub trait ConcreteFunctor: Send + Sync {
    fn source(&self) -> Arc<dyn CategoryInstance>;
    fn target(&self) -> Arc<dyn CategoryInstance>;
    fn map_object(&self, a: &Object) -> Result<Object>;
    fn map_morphism(&self, a: &Object, b: &Object, phi: &Morphism) -> Result<Morphism>;

    /// The natural bijection `|A| -> |F(A)|`.
    fn identify(&self, a: &Object) -> Result<BTreeMap<Elem, Elem>>;
}

/// Forgetful functors between shipped instances, plus identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Forgetful {
    from: InstanceDescriptor,
    to: InstanceDescriptor,
}

impl Forgetful {
    /// `ordered_boron -> boron`, `oi -> fi`, `oi_m -> fi_m` (same `m`), or
    /// any instance to itself.
    pub fn new(from: InstanceDescriptor, to: InstanceDescriptor) -> Result<Self> {
        use InstanceDescriptor as D;
        let ok = from == to
            || matches!(
                (from, to),
                (D::OrderedBoron, D::Boron) | (D::Oi, D::Fi)
            )
            || matches!((from, to), (D::OiM(a), D::FiM(b)) if a == b);
        if ok {
            Ok(Forgetful { from, to })
        } else {
            Err(Error::NoSuchFunctor(from.to_string(), to.to_string()))
        }
    }

    pub fn from(&self) -> InstanceDescriptor {
        self.from
    }

    pub fn to(&self) -> InstanceDescriptor {
        self.to
    }

    /// Some object of the source mapping to `b`: a planar rooted structure
    /// on a boron tree, or `b` itself.
    pub fn lift(&self, b: &Object) -> Result<Object> {
        self.to.check(b)?;
        match (self.from, b) {
            (InstanceDescriptor::OrderedBoron, Object::Boron(t)) => {
                let root = t.leaves()[0];
                Ok(Object::OrderedBoron(OrderedBoronTree::from_tree(t.clone(), root)?))
            }
            _ => Ok(b.clone()),
        }
    }
}

impl ConcreteFunctor for Forgetful {
    fn source(&self) -> Arc<dyn CategoryInstance> {
        Arc::new(self.from)
    }

    fn target(&self) -> Arc<dyn CategoryInstance> {
        Arc::new(self.to)
    }

    fn map_object(&self, a: &Object) -> Result<Object> {
        self.from.check(a)?;
        Ok(match a {
            Object::OrderedBoron(t) if self.from != self.to => Object::Boron(t.tree().clone()),
            _ => a.clone(),
        })
    }

    fn map_morphism(&self, a: &Object, b: &Object, phi: &Morphism) -> Result<Morphism> {
        self.from.check(a)?;
        self.from.check(b)?;
        Ok(phi.clone())
    }

    fn identify(&self, a: &Object) -> Result<BTreeMap<Elem, Elem>> {
        Ok(self.from.underlying(a)?.into_iter().map(|e| (e, e)).collect())
    }
}

/// What [`check_concrete`] examined.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FunctorReport {
    pub objects: usize,
    pub morphisms: usize,
    pub compositions: usize,
}

/// Checks on every source object of size at most `bound` that the
/// identification is a bijection onto `|F(A)|`, that every morphism maps
/// into the target hom-set with the same set map (up to identification),
/// and that composition is preserved.
pub fn check_concrete(f: &dyn ConcreteFunctor, bound: usize) -> Result<FunctorReport> {
    let (src, tgt) = (f.source(), f.target());
    let objects = src.objects(bound);
    let mut report = FunctorReport {
        objects: objects.len(),
        ..Default::default()
    };
    let mut images = Vec::with_capacity(objects.len());
    let mut idents = Vec::with_capacity(objects.len());
    for a in &objects {
        let fa = f.map_object(a)?;
        tgt.check(&fa)
            .map_err(|_| Error::NotConcrete(format!("F({a}) = {fa} is not an object of {}", tgt.name())))?;
        let id = f.identify(a)?;
        let mut got: Vec<Elem> = id.values().copied().collect();
        got.sort_unstable();
        let mut dom: Vec<Elem> = id.keys().copied().collect();
        dom.sort_unstable();
        if dom != src.underlying(a)? || got != tgt.underlying(&fa)? || got.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotConcrete(format!("|{a}| -> |{fa}| is not a bijection")));
        }
        images.push(fa);
        idents.push(Morphism::new(id));
    }
    let mut homs: BTreeMap<(usize, usize), Vec<Morphism>> = BTreeMap::new();
    for (i, a) in objects.iter().enumerate() {
        for (j, b) in objects.iter().enumerate() {
            let target_hom = tgt.hom(&images[i], &images[j])?;
            let maps = src.hom(a, b)?;
            for phi in &maps {
                let fphi = f.map_morphism(a, b, phi)?;
                let lhs = phi.then(&idents[j]);
                let rhs = idents[i].then(&fphi);
                if lhs.is_none() || lhs != rhs {
                    return Err(Error::NotConcrete(format!(
                        "{phi}: {a} -> {b} and its image {fphi} have different set maps"
                    )));
                }
                if !target_hom.contains(&fphi) {
                    return Err(Error::NotConcrete(format!(
                        "F({phi}) = {fphi} is not a morphism {} -> {}",
                        images[i], images[j]
                    )));
                }
                report.morphisms += 1;
            }
            homs.insert((i, j), maps);
        }
    }
    for ((i, j), first) in &homs {
        for ((j2, k), second) in homs.range((*j, 0)..(*j + 1, 0)) {
            debug_assert_eq!(j, j2);
            for phi in first {
                for psi in second {
                    let comp = phi.then(psi).expect("composable");
                    let f_comp = f.map_morphism(&objects[*i], &objects[*k], &comp)?;
                    let fphi = f.map_morphism(&objects[*i], &objects[*j], phi)?;
                    let fpsi = f.map_morphism(&objects[*j], &objects[*k], psi)?;
                    if fphi.then(&fpsi).as_ref() != Some(&f_comp) {
                        return Err(Error::NotConcrete(format!(
                            "composition of {phi} and {psi} is not preserved"
                        )));
                    }
                    report.compositions += 1;
                }
            }
        }
    }
    Ok(report)
}

/// The first target object of size at most `bound` whose lift does not map
/// back to it, if any.
pub fn essentially_surjective(f: &Forgetful, bound: usize) -> Result<Option<Object>> {
    for b in f.to.objects(bound) {
        let a = f.lift(&b)?;
        if f.map_object(&a)? != b {
            return Ok(Some(b));
        }
    }
    Ok(None)
}
