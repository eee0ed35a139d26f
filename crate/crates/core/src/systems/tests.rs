use std::sync::Arc;

use super::*;
use crate::instances::{Forgetful, InstanceDescriptor as D};
use crate::poset::WeightedObject;
use crate::tree::parse_newick;

const T0: &str = "((1,2),(3,4),(5,6));";
const T12: &str = "(((1,2),(3,4)),((5,6),(7,8)),((9,10),(11,12)));";

fn set(n: u32) -> Object {
    Object::Set(n)
}

fn poly(inst: &dyn CategoryInstance, a: &Object, text: &str) -> Polynomial {
    Polynomial::parse(text, &inst.ring(a).unwrap()).unwrap()
}

fn orbit(inst: D, gens: &[(Object, &str)], bound: Option<usize>) -> OrbitSystem {
    let pairs = gens.iter().map(|(t, f)| (t.clone(), poly(&inst, t, f))).collect();
    OrbitSystem::new(Arc::new(inst), GeneratorData::new(&inst, pairs).unwrap(), bound)
}

fn boric(bound: Option<usize>) -> OrbitSystem {
    let t0 = Object::Boron(parse_newick(T0).unwrap());
    orbit(D::Boron, &[(t0, "disc(1,2,3,4,5,6)")], bound)
}

fn shown(ideal: &IdealAtObject) -> Vec<String> {
    ideal.generators().iter().map(|g| g.to_string()).collect()
}

#[test]
fn fi_orbit_of_a_difference() {
    let sys = orbit(D::Fi, &[(set(2), "x1 - x2")], None);
    let at3 = sys.orbit_generators(&set(3)).unwrap();
    // six injections, no two giving the same polynomial
    assert_eq!(at3.generators().len(), 6);
    assert!(sys.orbit_generators(&set(1)).unwrap().is_zero());
}

#[test]
fn boric_orbit_shapes() {
    let sys = boric(None);
    let t0 = Object::Boron(parse_newick(T0).unwrap());
    let own = sys.orbit_generators(&t0).unwrap();
    let delta = poly(&D::Boron, &t0, "disc(1,2,3,4,5,6)");
    assert!(own.generators().contains(&delta));
    assert!(own.generators().contains(&-&delta));
    let cat = Object::Boron(parse_newick("(1,(2,(3,(4,(5,6)))));").unwrap());
    assert!(sys.orbit_generators(&cat).unwrap().is_zero());
}

#[test]
fn twelve_leaf_membership() {
    let sys = boric(Some(12));
    let big = Object::Boron(parse_newick(T12).unwrap());
    let yes = poly(&D::Boron, &big, "disc(1,3,7,8,9,12)");
    let r = sys.member(&big, &yes).unwrap();
    assert!(r.member);
    assert_eq!(r.to_string(), "MEMBER (generator)");
    let no = poly(&D::Boron, &big, "disc(1,2,3,5,7,8)");
    let r = sys.member(&big, &no).unwrap();
    assert!(!r.member);
    assert!(matches!(r.certificate, Certificate::Span(_)));
    assert!(r.to_string().starts_with("NOT MEMBER (graded span rank certificate"));
    // a combination of generators is found by elimination, not lookup
    let other = poly(&D::Boron, &big, "disc(1,3,7,8,9,12) - 2*disc(2,4,5,6,10,11)");
    let r = sys.member(&big, &other).unwrap();
    assert!(r.member);
    assert!(matches!(r.certificate, Certificate::Span(_)));
}

#[test]
fn zero_is_always_a_member() {
    let sys = orbit(D::Fi, &[(set(2), "x1 - x2")], None);
    let r = sys.member(&set(3), &Polynomial::parse_standalone("0").unwrap()).unwrap();
    assert!(r.member);
    assert!(matches!(r.certificate, Certificate::Zero));
}

#[test]
fn bound_is_enforced() {
    let sys = orbit(D::Fi, &[(set(1), "x1")], Some(3));
    match sys.orbit_generators(&set(4)) {
        Err(Error::OutOfRange { size: 4, bound: 3 }) => {}
        other => panic!("{other:?}"),
    }
}

#[test]
fn span_and_groebner_agree() {
    let sys = orbit(D::Fi, &[(set(2), "x1^2 - x1*x2")], None);
    let a = set(3);
    let cases = [
        "x1^2 - x1*x2",
        "x1^2 - x2^2",
        "x1^2 - x2*x3",
        "x1*x2 - x1*x3",
        "x1*x2 + x2*x3 - 2*x1*x3",
        "x1^2 + x2^2 + x3^2 - x1*x2 - x2*x3 - x1*x3",
        "x1^2",
    ];
    for case in cases {
        let f = poly(&D::Fi, &a, case);
        let span = sys.member_with(&a, &f, Strategy::Span).unwrap();
        let gb = sys.member_with(&a, &f, Strategy::Groebner).unwrap();
        assert_eq!(span.member, gb.member, "{case}");
    }
}

#[test]
fn groebner_cache_is_shared_across_threads() {
    let sys = orbit(D::Fi, &[(set(2), "x1^2 - x2^2")], None);
    let a = set(4);
    let bases: Vec<_> = std::thread::scope(|s| {
        let hs: Vec<_> = (0..4).map(|_| s.spawn(|| sys.groebner_at(&a).unwrap())).collect();
        hs.into_iter().map(|h| h.join().unwrap()).collect()
    });
    assert!(bases.windows(2).all(|w| w[0] == w[1]));
    assert!(Arc::ptr_eq(&sys.groebner_at(&a).unwrap(), &sys.groebner_at(&a).unwrap()));
}

/// `A -> (x_min)` on OI: not closed under monotone maps.
struct MinVariable;

impl IdealRule for MinVariable {
    fn instance(&self) -> Arc<dyn CategoryInstance> {
        Arc::new(D::Oi)
    }

    fn ideal_at(&self, a: &Object) -> Result<IdealAtObject> {
        let ring = D::Oi.ring(a)?;
        let gens = match ring.vars().first() {
            Some(&v) => vec![Polynomial::var(&ring, v)?],
            None => vec![],
        };
        IdealAtObject::new(a.clone(), ring, gens)
    }
}

#[test]
fn equivariance_of_orbit_systems() {
    let sys = orbit(D::Fi, &[(set(2), "x1 - x2"), (set(1), "x1^2")], None);
    assert!(equivariance_check(&sys, 4).unwrap().is_none());
    let sys = orbit(D::Oi, &[(set(2), "x1*x2 - x2^2")], None);
    assert!(equivariance_check(&sys, 4).unwrap().is_none());
    let v = equivariance_check(&MinVariable, 3).unwrap().unwrap();
    assert_eq!(v.generator.to_string(), "x1");
    assert_ne!(v.image.to_string(), "x1");
}

#[test]
fn initial_ideals() {
    let sys = Arc::new(orbit(D::Oi, &[(set(2), "x1 - x2")], None));
    assert_eq!(shown(&init_system(&*sys, &set(2)).unwrap()), ["x1"]);
    let mut at3 = shown(&init_system(&*sys, &set(3)).unwrap());
    at3.sort();
    assert_eq!(at3, ["x1", "x2"]);
    let fi = orbit(D::Fi, &[(set(2), "x1 - x2")], None);
    assert!(matches!(init_system(&fi, &set(2)), Err(Error::NoOrdering(_))));
    let init = InitSystem::new(sys);
    assert!(equivariance_check(&init, 4).unwrap().is_none());
}

#[test]
fn initial_system_of_a_nonlinear_generator_is_equivariant() {
    let sys = Arc::new(orbit(D::Oi, &[(set(2), "x1^2 - x1*x2 + x2^2"), (set(3), "x1*x3 - x2^2")], None));
    let init = InitSystem::new(sys);
    assert!(equivariance_check(&init, 4).unwrap().is_none());
}

#[test]
fn phi_and_psi_on_fi() {
    let sys = orbit(D::Fi, &[(set(1), "x1^2")], None);
    let ideal = phi_map(&sys, 3, 2).unwrap();
    assert_eq!(ideal.len(), 1);
    assert_eq!(ideal.generators()[0].to_string(), "[1] weights: {1: 2}");
    let psi = psi_map(&ideal, &set(2)).unwrap();
    assert_eq!(shown(&psi), ["x2^2", "x1^2"]);
    let mono = MonomialSystem::new(ideal);
    for n in 0..=3 {
        let a = set(n);
        assert_eq!(mono.groebner_at(&a).unwrap(), sys.groebner_at(&a).unwrap());
    }
}

#[test]
fn psi_on_oi() {
    let mut ideal = crate::poset::OrderIdeal::new(Arc::new(D::Oi));
    ideal.insert(WeightedObject::word(&[1, 1])).unwrap();
    let psi = psi_map(&ideal, &set(3)).unwrap();
    let mut gens = shown(&psi);
    gens.sort();
    assert_eq!(gens, ["x1*x2", "x1*x3", "x2*x3"]);
}

#[test]
fn phi_needs_monomials() {
    let sys = orbit(D::Fi, &[(set(2), "x1 - x2")], None);
    assert!(matches!(phi_map(&sys, 2, 1), Err(Error::NotMonomial(_))));
}

#[test]
fn transfer_along_oi_to_fi() {
    let fi = Arc::new(orbit(D::Fi, &[(set(2), "x1 - x2")], None));
    let functor = Arc::new(Forgetful::new(D::Oi, D::Fi).unwrap());
    let pulled = transfer_system(functor, fi, 3).unwrap();
    let oi = orbit(D::Oi, &[(set(2), "x1 - x2")], None);
    for n in 0..=4 {
        let a = set(n);
        assert_eq!(pulled.groebner_at(&a).unwrap(), oi.groebner_at(&a).unwrap(), "[{n}]");
    }
    assert!(equivariance_check(&pulled, 3).unwrap().is_none());
}

#[test]
fn transfer_along_ordered_boron() {
    let functor = Arc::new(Forgetful::new(D::OrderedBoron, D::Boron).unwrap());
    let inner = Arc::new(boric(None));
    let pulled = transfer_system(functor, inner.clone(), 4).unwrap();
    let ordered = D::OrderedBoron.parse_object("root=1:(1,(2,3),((4,5),6));").unwrap();
    let plain = Object::Boron(parse_newick("(1,(2,3),((4,5),6));").unwrap());
    let here = pulled.ideal_at(&ordered).unwrap();
    let there = inner.ideal_at(&plain).unwrap();
    assert_eq!(here.generators().len(), there.generators().len());
    for g in here.generators() {
        let g = g.embed_into(there.ring()).unwrap();
        assert!(there.generators().contains(&g));
    }
}

#[test]
fn transfer_checks_the_target() {
    let oi = Arc::new(orbit(D::Oi, &[(set(2), "x1 - x2")], None));
    let functor = Arc::new(Forgetful::new(D::Oi, D::Fi).unwrap());
    assert!(matches!(transfer_system(functor, oi, 3), Err(Error::InstanceMismatch(_))));
}

fn chain(inst: D, levels: &[&[(Object, &str)]]) -> Vec<GeneratorData> {
    levels
        .iter()
        .map(|gens| {
            let pairs = gens.iter().map(|(t, f)| (t.clone(), poly(&inst, t, f))).collect();
            GeneratorData::new(&inst, pairs).unwrap()
        })
        .collect()
}

#[test]
fn constant_chain_is_stable_at_once() {
    let g: &[(Object, &str)] = &[(set(2), "x1 - x2")];
    let c = chain(D::Fi, &[g, g, g]);
    let r = stabilization_probe(Arc::new(D::Fi), &c, 3).unwrap();
    assert_eq!(r.outcome, Outcome::Stabilized { level: 1 });
    assert!(r.to_string().starts_with("stabilized at level 1 of 3"));
}

#[test]
fn chain_stabilizing_at_two() {
    let g: &[(Object, &str)] = &[(set(2), "x1 - x2")];
    let c = chain(D::Fi, &[&[], g, g]);
    let r = stabilization_probe(Arc::new(D::Fi), &c, 3).unwrap();
    assert_eq!(r.outcome, Outcome::Stabilized { level: 2 });
    let at3 = r.objects.iter().find(|t| t.object == set(3)).unwrap();
    assert_eq!(at3.basis_sizes, [0, 2, 2]);
}

#[test]
fn strictly_growing_chain() {
    let a = set(1);
    let c = chain(
        D::Fi,
        &[
            &[(a.clone(), "x1^3")],
            &[(a.clone(), "x1^3"), (a.clone(), "x1^2")],
            &[(a.clone(), "x1^3"), (a.clone(), "x1^2"), (a.clone(), "x1")],
        ],
    );
    let r = stabilization_probe(Arc::new(D::Fi), &c, 2).unwrap();
    assert_eq!(r.outcome, Outcome::NotStabilized);
    assert!(r.to_string().starts_with("not stabilized at bound"));
}

#[test]
fn decreasing_steps_are_rejected() {
    let c = chain(D::Fi, &[&[(set(1), "x1")], &[(set(1), "x1^2")]]);
    match stabilization_probe(Arc::new(D::Fi), &c, 2) {
        Err(Error::NotAChain { level: 1, .. }) => {}
        other => panic!("{other:?}"),
    }
}

#[test]
fn spec_files() {
    let text = "\
# the boric chain
instance: boron
bound: 12
generator: ((1,2),(3,4),(5,6)); | disc(1,2,3,4,5,6)
";
    let spec = SystemSpec::parse(text).unwrap();
    assert_eq!(spec.instance, D::Boron);
    assert_eq!(spec.bound, Some(12));
    assert_eq!(spec.levels, 1);
    let sys = spec.system().unwrap();
    let big = Object::Boron(parse_newick(T12).unwrap());
    let f = poly(&D::Boron, &big, "disc(1,3,7,8,9,12)");
    assert!(sys.member(&big, &f).unwrap().member);

    let staged = SystemSpec::parse("instance: fi\ngenerator@2: [2] | x1 - x2\nlevels: 3\n").unwrap();
    let c = staged.chain().unwrap();
    assert_eq!(c.iter().map(|g| g.len()).collect::<Vec<_>>(), [0, 1, 1]);
}

#[test]
fn spec_errors_point_into_the_text() {
    let text = "instance: fi\ngenerator: [2] | x1 + x7\n";
    match SystemSpec::parse(text) {
        Err(Error::Parse(p)) => assert_eq!(&text[p.position..p.position + 2], "x7"),
        other => panic!("{other:?}"),
    }
    match SystemSpec::parse("instance: nope\n") {
        Err(Error::Parse(p)) => assert_eq!(p.position, 10),
        other => panic!("{other:?}"),
    }
    assert!(matches!(SystemSpec::parse("bound: 3\n"), Err(Error::Parse(_))));
    assert!(matches!(SystemSpec::parse("instance: fi\nwhat: 3\n"), Err(Error::Parse(_))));
    assert!(matches!(
        SystemSpec::parse("instance: fi\nbound: 2\ngenerator: [3] | x1\n"),
        Err(Error::OutOfRange { size: 3, bound: 2 })
    ));
}
