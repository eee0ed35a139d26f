//! Python module `boric_py`.

use std::sync::Arc;

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;

use boric::algebra::Polynomial;
use boric::instances::{CategoryInstance, InstanceDescriptor, Object};
use boric::poset::{self, WeightedObject};
use boric::systems::{self, IdealRule, Outcome, SystemSpec};
use boric::tree;

fn err(e: boric::Error) -> PyErr {
    match e {
        boric::Error::OutOfRange { .. } => PyIndexError::new_err(e.to_string()),
        e => PyValueError::new_err(e.to_string()),
    }
}

fn instance(name: &str) -> PyResult<InstanceDescriptor> {
    name.parse().map_err(err)
}

#[pyclass(name = "BoronTree", module = "boric_py", skip_from_py_object)]
#[derive(Clone)]
struct PyBoronTree {
    inner: tree::BoronTree,
}

#[pymethods]
impl PyBoronTree {
    #[new]
    fn new(newick: &str) -> PyResult<Self> {
        Ok(PyBoronTree {
            inner: tree::parse_newick(newick).map_err(err)?,
        })
    }

    fn leaves(&self) -> Vec<u32> {
        self.inner.leaves().to_vec()
    }

    fn __len__(&self) -> usize {
        self.inner.leaf_count()
    }

    /// True when the w-x and y-z paths meet.
    fn quartet(&self, w: u32, x: u32, y: u32, z: u32) -> PyResult<bool> {
        self.inner.quartet(w, x, y, z).map_err(err)
    }

    fn induced(&self, leaves: Vec<u32>) -> PyResult<Self> {
        Ok(PyBoronTree {
            inner: self.inner.induced(&leaves).map_err(err)?,
        })
    }

    fn is_isomorphic(&self, other: &PyBoronTree) -> bool {
        self.inner.is_isomorphic(&other.inner)
    }

    fn canonical_form(&self) -> String {
        self.inner.canonical_form().as_str().to_string()
    }

    /// Embeddings of `self` into `big`, each as a list of `(leaf, image)`.
    fn embeddings(&self, big: &PyBoronTree) -> Vec<Vec<(u32, u32)>> {
        tree::enumerate_embeddings(&self.inner, &big.inner)
            .iter()
            .map(|m| m.pairs().to_vec())
            .collect()
    }

    fn to_newick(&self) -> String {
        self.inner.to_newick()
    }

    fn __str__(&self) -> String {
        self.inner.to_newick()
    }

    fn __repr__(&self) -> String {
        format!("BoronTree('{}')", self.inner.to_newick())
    }

    fn __eq__(&self, other: &PyBoronTree) -> bool {
        self.inner.to_newick() == other.inner.to_newick()
    }
}

/// All boron trees with leaves `1..=n`.
#[pyfunction]
fn enumerate_labeled(n: usize) -> PyResult<Vec<PyBoronTree>> {
    Ok(tree::enumerate_labeled(n)
        .map_err(err)?
        .into_iter()
        .map(|inner| PyBoronTree { inner })
        .collect())
}

/// An orbit-generated ideal system read from spec text.
#[pyclass(name = "System", module = "boric_py")]
struct PySystem {
    spec: SystemSpec,
    system: systems::OrbitSystem,
}

impl PySystem {
    fn object(&self, text: &str) -> PyResult<Object> {
        self.spec.instance.parse_object(text).map_err(err)
    }
}

#[pymethods]
impl PySystem {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let spec = SystemSpec::parse(spec).map_err(err)?;
        let system = spec.system().map_err(err)?;
        Ok(PySystem { spec, system })
    }

    #[getter]
    fn instance(&self) -> String {
        self.spec.instance.to_string()
    }

    /// Orbit generators of `I_A` as strings.
    fn generators(&self, object: &str) -> PyResult<Vec<String>> {
        let a = self.object(object)?;
        let ideal = self.system.orbit_generators(&a).map_err(err)?;
        Ok(ideal.generators().iter().map(|g| g.to_string()).collect())
    }

    /// Reduced lex Groebner basis of `I_A`.
    fn groebner(&self, object: &str) -> PyResult<Vec<String>> {
        let a = self.object(object)?;
        let gb = self.system.groebner_at(&a).map_err(err)?;
        Ok(gb.basis().iter().map(|g| g.to_string()).collect())
    }

    /// `(member, certificate)` for `f` in `I_A`.
    fn member(&self, object: &str, f: &str) -> PyResult<(bool, String)> {
        let a = self.object(object)?;
        let ring = self.spec.instance.ring(&a).map_err(err)?;
        let f = Polynomial::parse(f, &ring).map_err(err)?;
        let m = self.system.member(&a, &f).map_err(err)?;
        Ok((m.member, m.to_string()))
    }

    /// Generators of the initial ideal of `I_A`.
    fn init(&self, object: &str) -> PyResult<Vec<String>> {
        let a = self.object(object)?;
        let ideal = systems::init_system(&self.system, &a).map_err(err)?;
        Ok(ideal.generators().iter().map(|g| g.to_string()).collect())
    }

    /// First violation of equivariance up to `bound`, or None.
    fn equivariance(&self, bound: usize) -> PyResult<Option<String>> {
        Ok(systems::equivariance_check(&self.system, bound)
            .map_err(err)?
            .map(|v| v.to_string()))
    }

    /// Level at which the spec's chain stabilizes up to `bound`, or None.
    fn stabilization_level(&self, bound: usize) -> PyResult<Option<usize>> {
        let chain = self.spec.chain().map_err(err)?;
        let report = systems::stabilization_probe(Arc::new(self.spec.instance), &chain, bound).map_err(err)?;
        Ok(match report.outcome {
            Outcome::Stabilized { level } => Some(level),
            Outcome::NotStabilized => None,
        })
    }
}

#[pyfunction]
fn higman_leq(u: Vec<u32>, v: Vec<u32>) -> bool {
    poset::higman_leq(&u, &v, |a, b| a <= b)
}

#[pyfunction]
fn dickson_leq(u: Vec<u32>, v: Vec<u32>) -> PyResult<bool> {
    poset::dickson_leq(&u, &v).map_err(err)
}

/// `[A, alpha] <= [B, beta]` for weighted objects such as `"[2] weights: {1: 1}"`.
#[pyfunction]
fn weighted_leq(instance_name: &str, a: &str, b: &str) -> PyResult<bool> {
    let inst = instance(instance_name)?;
    let x = WeightedObject::parse(&inst, a).map_err(err)?;
    let y = WeightedObject::parse(&inst, b).map_err(err)?;
    poset::weighted_leq(&inst, &x, &y).map_err(err)
}

/// Whether some morphism `a -> b` exists.
#[pyfunction]
fn subset_leq(instance_name: &str, a: &str, b: &str) -> PyResult<bool> {
    let inst = instance(instance_name)?;
    let x = inst.parse_object(a).map_err(err)?;
    let y = inst.parse_object(b).map_err(err)?;
    poset::subset_class_leq(&inst, &x, &y).map_err(err)
}

/// Number of morphisms between two objects of an instance.
#[pyfunction]
fn hom_count(instance_name: &str, a: &str, b: &str) -> PyResult<usize> {
    let inst = instance(instance_name)?;
    let x = inst.parse_object(a).map_err(err)?;
    let y = inst.parse_object(b).map_err(err)?;
    Ok(inst.hom(&x, &y).map_err(err)?.len())
}

/// The cycle `{(1,2), ..., (n,1)}` as a pair-FI object string.
#[pyfunction]
fn cycle(n: u32) -> String {
    Object::cycle(n).to_string()
}

#[pymodule]
fn boric_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBoronTree>()?;
    m.add_class::<PySystem>()?;
    m.add_function(wrap_pyfunction!(enumerate_labeled, m)?)?;
    m.add_function(wrap_pyfunction!(higman_leq, m)?)?;
    m.add_function(wrap_pyfunction!(dickson_leq, m)?)?;
    m.add_function(wrap_pyfunction!(weighted_leq, m)?)?;
    m.add_function(wrap_pyfunction!(subset_leq, m)?)?;
    m.add_function(wrap_pyfunction!(hom_count, m)?)?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    Ok(())
}
