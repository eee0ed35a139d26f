//! Partial orders: Dickson, Higman, the weighted-object order and order
//! ideals kept as antichains of minimal elements.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{Monomial, Ring};
use crate::error::{Error, ParseError, Result};
use crate::instances::{CategoryInstance, Morphism, Object};
use crate::Elem;

/// Componentwise order on `N^m`.
pub fn dickson_leq(a: &[u32], b: &[u32]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::ArityMismatch(a.len(), b.len()));
    }
    Ok(a.iter().zip(b).all(|(x, y)| x <= y))
}

/// Whether `u` embeds into `v` by a strictly increasing position map with
/// `leq(u[i], v[phi(i)])`.
///
/// Greedy leftmost matching: if any embedding exists, matching each letter
/// of `u` to the first dominating position after the previous match also
/// succeeds.
pub fn higman_leq<T>(u: &[T], v: &[T], leq: impl Fn(&T, &T) -> bool) -> bool {
    let mut j = 0;
    for x in u {
        while j < v.len() && !leq(x, &v[j]) {
            j += 1;
        }
        if j == v.len() {
            return false;
        }
        j += 1;
    }
    true
}

/// An object with a weighting `|A| -> N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedObject {
    object: Object,
    weights: BTreeMap<Elem, u32>,
}

impl WeightedObject {
    /// Weights not listed are zero. Keys outside `|A|` are rejected.
    pub fn new(inst: &dyn CategoryInstance, object: Object, weights: BTreeMap<Elem, u32>) -> Result<Self> {
        let elems = inst.underlying(&object)?;
        if let Some(e) = weights.keys().find(|e| elems.binary_search(e).is_err()) {
            return Err(Error::InstanceMismatch(format!("{} is not an element of {object}", e.label())));
        }
        let weights = elems
            .into_iter()
            .map(|e| (e, weights.get(&e).copied().unwrap_or(0)))
            .collect();
        Ok(WeightedObject { object, weights })
    }

    pub fn zero(inst: &dyn CategoryInstance, object: Object) -> Result<Self> {
        Self::new(inst, object, BTreeMap::new())
    }

    /// The 0/1 weighting that is 1 everywhere.
    pub fn indicator(inst: &dyn CategoryInstance, object: Object) -> Result<Self> {
        let w = inst.underlying(&object)?.into_iter().map(|e| (e, 1)).collect();
        Self::new(inst, object, w)
    }

    /// The OI object `[n]` weighted by the letters of a word.
    pub fn word(letters: &[u32]) -> Self {
        WeightedObject {
            object: Object::Set(letters.len() as u32),
            weights: letters
                .iter()
                .enumerate()
                .map(|(i, &w)| (Elem::Atom(i as u32 + 1), w))
                .collect(),
        }
    }

    /// The weighting read off the exponents of a monomial of `R_A`.
    pub fn from_monomial(inst: &dyn CategoryInstance, object: Object, ring: &Ring, m: &Monomial) -> Result<Self> {
        let w = ring.vars().iter().zip(&m.0).map(|(&e, &k)| (e, k)).collect();
        Self::new(inst, object, w)
    }

    pub fn object(&self) -> &Object {
        &self.object
    }

    pub fn weights(&self) -> &BTreeMap<Elem, u32> {
        &self.weights
    }

    pub fn weight(&self, e: Elem) -> u32 {
        self.weights.get(&e).copied().unwrap_or(0)
    }

    /// `m_alpha = prod x_e^{alpha(e)}` in `ring`.
    pub fn monomial(&self, ring: &Ring) -> Result<Monomial> {
        let mut e = vec![0; ring.len()];
        for (v, &w) in &self.weights {
            if w == 0 {
                continue;
            }
            let i = ring
                .index_of(*v)
                .ok_or_else(|| Error::BadRenaming(format!("{v} is not a variable of {ring:?}")))?;
            e[i] = w;
        }
        Ok(Monomial(e))
    }

    /// `phi_* alpha` on the target: `alpha(x)` at `phi(x)`, zero elsewhere.
    pub fn push_forward(&self, inst: &dyn CategoryInstance, phi: &Morphism, target: &Object) -> Result<Self> {
        let mut w = BTreeMap::new();
        for (&x, &k) in &self.weights {
            let y = phi
                .apply(x)
                .ok_or_else(|| Error::BadRenaming(format!("{phi} is not defined at {}", x.label())))?;
            w.insert(y, k);
        }
        Self::new(inst, target.clone(), w)
    }

    /// `<object> weights: {e: k, ...}`; the weights part is optional.
    pub fn parse(inst: &dyn CategoryInstance, text: &str) -> Result<Self> {
        let (obj, weights) = match text.find("weights:") {
            Some(i) => (&text[..i], Some((i + "weights:".len(), &text[i + "weights:".len()..]))),
            None => (text, None),
        };
        let object = inst.parse_object(obj)?;
        let mut w = BTreeMap::new();
        if let Some((offset, body)) = weights {
            let inner = body
                .trim()
                .strip_prefix('{')
                .and_then(|s| s.strip_suffix('}'))
                .ok_or_else(|| Error::Parse(ParseError::new(offset, "expected {elem: weight, ...}")))?;
            for item in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let (e, k) = item
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(ParseError::new(offset, format!("expected elem: weight, got `{item}`"))))?;
                let k: u32 = k
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(ParseError::new(offset, format!("bad weight in `{item}`"))))?;
                w.insert(e.parse::<Elem>()?, k);
            }
        }
        Self::new(inst, object, w)
    }
}

impl fmt::Display for WeightedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .weights
            .iter()
            .map(|(e, k)| format!("{}: {k}", e.label()))
            .collect();
        write!(f, "{} weights: {{{}}}", self.object, parts.join(", "))
    }
}

/// `[A, alpha] <= [B, beta]`: some morphism `phi: A -> B` with
/// `alpha(x) <= beta(phi(x))` for all `x`.
pub fn weighted_leq(inst: &dyn CategoryInstance, a: &WeightedObject, b: &WeightedObject) -> Result<bool> {
    Ok(witness_leq(inst, a, b)?.is_some())
}

/// The first morphism witnessing `a <= b`.
pub fn witness_leq(inst: &dyn CategoryInstance, a: &WeightedObject, b: &WeightedObject) -> Result<Option<Morphism>> {
    inst.check(&a.object)?;
    inst.check(&b.object)?;
    Ok(inst.hom(&a.object, &b.object)?.into_iter().find(|phi| {
        a.weights
            .iter()
            .all(|(&x, &k)| k <= b.weight(phi.apply(x).expect("total set map")))
    }))
}

/// `[A] <= [B]` in the subset poset: the 0/1 case, i.e. `Hom(A, B)` is
/// nonempty.
pub fn subset_class_leq(inst: &dyn CategoryInstance, a: &Object, b: &Object) -> Result<bool> {
    Ok(!inst.hom(a, b)?.is_empty())
}

/// An up-closed set of weighted-object classes, kept as its antichain of
/// minimal elements.
#[derive(Clone)]
pub struct OrderIdeal {
    instance: Arc<dyn CategoryInstance>,
    generators: Vec<WeightedObject>,
}

impl OrderIdeal {
    pub fn new(instance: Arc<dyn CategoryInstance>) -> Self {
        OrderIdeal {
            instance,
            generators: Vec::new(),
        }
    }

    pub fn instance(&self) -> &Arc<dyn CategoryInstance> {
        &self.instance
    }

    pub fn generators(&self) -> &[WeightedObject] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Adds `x` and its up-set. Returns false when `x` was already in.
    pub fn insert(&mut self, x: WeightedObject) -> Result<bool> {
        if self.contains(&x)? {
            return Ok(false);
        }
        let inst = self.instance.clone();
        let mut keep = Vec::with_capacity(self.generators.len() + 1);
        for g in self.generators.drain(..) {
            if !weighted_leq(&*inst, &x, &g)? {
                keep.push(g);
            }
        }
        keep.push(x);
        self.generators = keep;
        debug_assert!(self.is_antichain().unwrap());
        Ok(true)
    }

    /// Whether some generator lies below `x`.
    pub fn contains(&self, x: &WeightedObject) -> Result<bool> {
        self.instance.check(&x.object)?;
        for g in &self.generators {
            if weighted_leq(&*self.instance, g, x)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn is_antichain(&self) -> Result<bool> {
        let inst = &*self.instance;
        try_antichain_check(&self.generators, |a, b| weighted_leq(inst, a, b)).map(|w| w.is_none())
    }
}

impl fmt::Debug for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrderIdeal")
            .field("instance", &self.instance.name())
            .field("generators", &self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>())
            .finish()
    }
}

/// `None` if the elements are pairwise incomparable, else the first pair
/// `(i, j)` with `elements[i] <= elements[j]`.
pub fn antichain_check<T>(elements: &[T], leq: impl Fn(&T, &T) -> bool) -> Option<(usize, usize)> {
    try_antichain_check(elements, |a, b| Ok::<_, std::convert::Infallible>(leq(a, b))).unwrap()
}

pub fn try_antichain_check<T, E>(
    elements: &[T],
    mut leq: impl FnMut(&T, &T) -> Result<bool, E>,
) -> Result<Option<(usize, usize)>, E> {
    for i in 0..elements.len() {
        for j in 0..elements.len() {
            if i != j && leq(&elements[i], &elements[j])? {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}
