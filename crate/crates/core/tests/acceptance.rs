//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use boric::algebra::{discriminant, Coeff, Monomial, Polynomial, VariableSet};
use boric::instances::{CategoryInstance, InstanceDescriptor as D, Morphism, Object};
use boric::oracle::{all_vanish, brute_force_embeddings, leibniz_discriminant, prufer_boron_trees};
use boric::poset::subset_class_leq;
use boric::systems::{
    phi_map, psi_map, stabilization_probe, Certificate, GeneratorData, IdealRule, OrbitSystem, Outcome, Strategy,
};
use boric::tree::{enumerate_embeddings, enumerate_labeled, parse_newick, BoronTree};
use boric::Elem;

const T0: &str = "((1,2),(3,4),(5,6));";
const T12: &str = "(((1,2),(3,4)),((5,6),(7,8)),((9,10),(11,12)));";

type Verdict = Result<String, String>;

// straight to the stderr handle so the lines show up without --nocapture
fn say(line: String) {
    let _ = writeln!(std::io::stderr(), "{line}");
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn q(v: i64) -> Coeff {
    Coeff::from_integer(v.into())
}

fn atoms(v: &[u32]) -> Vec<Elem> {
    v.iter().copied().map(Elem::Atom).collect()
}

fn c1_induced_subtrees() -> Verdict {
    let t0 = parse_newick(T0).map_err(|e| e.to_string())?;
    let big = parse_newick(T12).map_err(|e| e.to_string())?;
    let yes = big.induced(&[1, 3, 7, 8, 9, 12]).map_err(|e| e.to_string())?;
    let no = big.induced(&[1, 2, 3, 5, 7, 8]).map_err(|e| e.to_string())?;
    ensure(yes.is_isomorphic(&t0), "{1,3,7,8,9,12} should induce T0")?;
    ensure(!no.is_isomorphic(&t0), "{1,2,3,5,7,8} should not induce T0")?;
    ensure(yes.canonical_form() == t0.canonical_form(), "canonical forms disagree")?;
    Ok(format!("induced {} vs {}", yes.to_newick(), no.to_newick()))
}

fn c2_boric_membership() -> Verdict {
    let t0 = Object::Boron(parse_newick(T0).unwrap());
    let big = Object::Boron(parse_newick(T12).unwrap());
    let delta = Polynomial::parse("disc(1,2,3,4,5,6)", &D::Boron.ring(&t0).unwrap()).unwrap();
    let data = GeneratorData::new(&D::Boron, vec![(t0, delta)]).unwrap();
    let sys = OrbitSystem::new(Arc::new(D::Boron), data, Some(12));
    let ring = D::Boron.ring(&big).unwrap();
    let yes = Polynomial::parse("disc(1,3,7,8,9,12)", &ring).unwrap();
    let no = Polynomial::parse("disc(1,2,3,5,7,8)", &ring).unwrap();
    let r_yes = sys.member_with(&big, &yes, Strategy::Span).map_err(|e| e.to_string())?;
    let r_no = sys.member_with(&big, &no, Strategy::Span).map_err(|e| e.to_string())?;
    ensure(r_yes.member, format!("expected member, got {r_yes}"))?;
    ensure(!r_no.member, format!("expected non-member, got {r_no}"))?;
    let Certificate::Span(cert) = &r_no.certificate else {
        return Err("no span certificate".into());
    };
    say(format!("    member: {r_yes}"));
    say(format!("    non-member: {r_no}; residual leading exponents {:?}", cert.residual_leading));
    // second route: a point where every generator vanishes but f does not
    let z: Vec<Coeff> = [1, 2, 3, 1, 4, 4, 5, 6, 1, 1, 1, 1].iter().map(|&v| q(v)).collect();
    let gens = sys.orbit_generators(&big).unwrap();
    ensure(all_vanish(gens.generators(), &z).unwrap(), "witness point does not kill the generators")?;
    ensure(!no.eval(&z).unwrap().is_zero(), "witness point kills f")?;
    Ok(format!("{} orbit generators, span rank {}", gens.generators().len(), cert.rank))
}

fn c3_leading_terms() -> Verdict {
    let ring = VariableSet::new(atoms(&(1..=12).collect::<Vec<_>>())).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for _ in 0..50 {
        let mut s: Vec<u32> = (1..=12).collect();
        for i in 0..6 {
            let j = rng.gen_range(i..12);
            s.swap(i, j);
        }
        let mut s = s[..6].to_vec();
        s.sort();
        let d = discriminant(&ring, &atoms(&s)).unwrap();
        let init = d.init().unwrap();
        let mut want = vec![0u32; 12];
        for (k, &i) in s.iter().enumerate() {
            want[i as usize - 1] = 5 - k as u32;
        }
        ensure(init.monomial == Monomial(want), format!("{s:?}: {:?}", init.monomial))?;
        ensure(init.coefficient == q(1), format!("{s:?}: coefficient {}", init.coefficient))?;
        ensure(d == leibniz_discriminant(&ring, &atoms(&s)).unwrap(), format!("{s:?}: expansion differs"))?;
    }
    Ok("50 subsets, pattern (5,4,3,2,1,0), coefficient 1".into())
}

fn c4_symmetric_chain() -> Verdict {
    let mut notes = Vec::new();
    for r in 1..=2u32 {
        let t = Object::Set(r + 1);
        let vars: Vec<u32> = (1..=r + 1).collect();
        let delta = discriminant(&D::Fi.ring(&t).unwrap(), &atoms(&vars)).unwrap();
        let data = GeneratorData::new(&D::Fi, vec![(t, delta)]).unwrap();
        let sys = OrbitSystem::new(Arc::new(D::Fi), data, Some(5));
        for n in 0..=5u32 {
            let gens = sys.orbit_generators(&Object::Set(n)).unwrap();
            // every point with values in 1..=r+2 and at most r distinct values
            for point in (0..n).map(|_| 1..=r as i64 + 2).multi_cartesian_product() {
                let distinct: BTreeSet<_> = point.iter().collect();
                if distinct.len() > r as usize {
                    continue;
                }
                let z: Vec<Coeff> = point.iter().map(|&v| q(v)).collect();
                ensure(all_vanish(gens.generators(), &z).unwrap(), format!("r={r} n={n} {point:?}"))?;
            }
            if n > r {
                let z: Vec<Coeff> = (0..n as i64).map(|i| q(i.min(r as i64) + 1)).collect();
                ensure(!all_vanish(gens.generators(), &z).unwrap(), format!("r={r} n={n}: witness vanishes"))?;
            }
        }
        // G_k = {([j], disc(x1..xj)) : r+1 <= j <= k}
        let levels = (r + 3) as usize;
        let chain: Vec<GeneratorData> = (1..=levels as u32)
            .map(|k| {
                let pairs = (r + 1..=k)
                    .map(|j| {
                        let o = Object::Set(j);
                        let vars: Vec<u32> = (1..=j).collect();
                        let d = discriminant(&D::Fi.ring(&o).unwrap(), &atoms(&vars)).unwrap();
                        (o, d)
                    })
                    .collect();
                GeneratorData::new(&D::Fi, pairs).unwrap()
            })
            .collect();
        let report = stabilization_probe(Arc::new(D::Fi), &chain, 5).map_err(|e| e.to_string())?;
        let want = Outcome::Stabilized { level: r as usize + 1 };
        ensure(report.outcome == want, format!("r={r}: {report}"))?;
        notes.push(format!("r={r} stabilized at {}", r + 1));
    }
    Ok(notes.join(", "))
}

fn c5_enumeration() -> Verdict {
    for (n, want) in [(4, 3usize), (5, 15), (6, 105)] {
        let trees = enumerate_labeled(n).unwrap();
        ensure(trees.len() == want, format!("n={n}: {} trees", trees.len()))?;
        let ours: BTreeSet<String> = trees.iter().map(BoronTree::to_newick).collect();
        let theirs: BTreeSet<String> = prufer_boron_trees(n).unwrap().iter().map(BoronTree::to_newick).collect();
        ensure(ours == theirs, format!("n={n}: differs from the Pruefer enumeration"))?;
    }
    let classes: BTreeSet<_> = enumerate_labeled(6).unwrap().iter().map(|t| t.canonical_form()).collect();
    ensure(classes.len() == 2, format!("{} classes at n=6", classes.len()))?;
    Ok("3, 15, 105 labeled trees; 2 shapes at n=6".into())
}

fn c6_embedding_oracle() -> Verdict {
    let small: Vec<BoronTree> = (2..=5).flat_map(|n| enumerate_labeled(n).unwrap()).collect();
    let big: Vec<BoronTree> = (2..=7).flat_map(|n| enumerate_labeled(n).unwrap()).collect();
    let mut pairs = 0;
    let mut maps = 0;
    for s in &small {
        for b in &big {
            if s.leaf_count() > b.leaf_count() {
                continue;
            }
            let fast = enumerate_embeddings(s, b);
            let slow = brute_force_embeddings(s, b);
            ensure(fast == slow, format!("{} -> {}", s.to_newick(), b.to_newick()))?;
            pairs += 1;
            maps += fast.len();
        }
    }
    Ok(format!("{pairs} pairs, {maps} embeddings"))
}

fn c7_cycle_antichain() -> Verdict {
    let cycles: Vec<Object> = (3..=6).map(Object::cycle).collect();
    for (i, a) in cycles.iter().enumerate() {
        for (j, b) in cycles.iter().enumerate() {
            let leq = subset_class_leq(&D::PairFi, a, b).unwrap();
            ensure(leq == (i == j), format!("A_{} <= A_{} is {leq}", i + 3, j + 3))?;
        }
    }
    Ok("A_3..A_6 pairwise incomparable".into())
}

fn monomials(n: u32, max: u32) -> Vec<Vec<u32>> {
    (0..n).map(|_| 0..=max).multi_cartesian_product().collect()
}

fn c8_round_trip() -> Verdict {
    let mut systems = 0;
    for inst in [D::Fi, D::Oi] {
        let mut singles = Vec::new();
        for n in 0..=3 {
            for e in monomials(n, 2) {
                singles.push((Object::Set(n), e));
            }
        }
        let mut presentations: Vec<Vec<&(Object, Vec<u32>)>> = singles.iter().map(|g| vec![g]).collect();
        presentations.extend(singles.iter().tuple_combinations().map(|(a, b)| vec![a, b]));
        for gens in presentations {
            let pairs = gens
                .iter()
                .map(|(o, e)| {
                    let ring = inst.ring(o).unwrap();
                    (o.clone(), Polynomial::monomial(&ring, Monomial(e.clone())).unwrap())
                })
                .collect();
            let sys = OrbitSystem::new(Arc::new(inst), GeneratorData::new(&inst, pairs).unwrap(), None);
            let ideal = phi_map(&sys, 3, 2).map_err(|e| e.to_string())?;
            for n in 0..=3 {
                let a = Object::Set(n);
                let back = psi_map(&ideal, &a).unwrap().minimal_monomials().unwrap();
                let here = sys.ideal_at(&a).unwrap().minimal_monomials().unwrap();
                ensure(back == here, format!("{} {:?} at [{n}]", inst, gens))?;
            }
            systems += 1;
        }
    }
    Ok(format!("{systems} systems"))
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &boric::algebra::Ring) -> Polynomial {
    let n = ring.len();
    let terms = (0..rng.gen_range(1..=5)).map(|_| {
        let mut e = vec![0u32; n];
        let mut budget = rng.gen_range(0..=4u32);
        while budget > 0 && n > 0 {
            e[rng.gen_range(0..n)] += 1;
            budget -= 1;
        }
        (Monomial(e), q(rng.gen_range(-3..=3)))
    });
    Polynomial::from_terms(ring, terms.collect::<Vec<_>>())
}

fn commutes(f: &Polynomial, phi: &Morphism, target: &boric::algebra::Ring) -> bool {
    let lhs = f.rename(phi.as_map(), target).unwrap().init().unwrap();
    let rhs = f.init().unwrap().to_polynomial(f.ring()).rename(phi.as_map(), target).unwrap();
    lhs.to_polynomial(target) == rhs
}

fn c9_init_commutes() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut done = 0;
    while done < 500 {
        let m = rng.gen_range(1..=5u32);
        let k = rng.gen_range(1..=m);
        let (a, b) = (Object::Set(k), Object::Set(m));
        let homs = D::Oi.hom(&a, &b).unwrap();
        let phi = &homs[rng.gen_range(0..homs.len())];
        let f = random_poly(&mut rng, &D::Oi.ring(&a).unwrap());
        if f.is_zero() {
            continue;
        }
        ensure(commutes(&f, phi, &D::Oi.ring(&b).unwrap()), format!("{f} along {phi}"))?;
        done += 1;
    }
    // a swap is injective but not monotone
    let ring = D::Oi.ring(&Object::Set(2)).unwrap();
    let f = Polynomial::parse("x1 - x2", &ring).unwrap();
    let swap = Morphism::new([(Elem::Atom(1), Elem::Atom(2)), (Elem::Atom(2), Elem::Atom(1))].into());
    ensure(!commutes(&f, &swap, &ring), "negative control commuted")?;
    Ok("500 monotone maps commute; the swap does not".into())
}

fn c10_hom_counts() -> Verdict {
    let binom = |n: u64, k: u64| (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
    for n in 0..=6u32 {
        for m in 0..=6u32 {
            let (a, b) = (Object::Set(n), Object::Set(m));
            let falling: u64 = if n > m { 0 } else { (m - n + 1..=m).map(u64::from).product() };
            let fi = D::Fi.hom(&a, &b).unwrap().len() as u64;
            let oi = D::Oi.hom(&a, &b).unwrap().len() as u64;
            let boi = D::Boi.hom(&a, &b).unwrap().len() as u64;
            ensure(fi == falling, format!("FI {n}->{m}: {fi}"))?;
            ensure(oi == if n > m { 0 } else { binom(m.into(), n.into()) }, format!("OI {n}->{m}: {oi}"))?;
            let shifts = if n > m { 0 } else if n == 0 { 1 } else { u64::from(m - n + 1) };
            ensure(boi == shifts, format!("BOI {n}->{m}: {boi}"))?;
        }
    }
    Ok("FI, OI, BOI for n, m <= 6".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, Duration, fn() -> Verdict); 10] = [
        ("12-leaf induced subtrees", Duration::from_secs(1), c1_induced_subtrees),
        ("boric membership", Duration::from_secs(30), c2_boric_membership),
        ("discriminant leading terms", Duration::from_secs(60), c3_leading_terms),
        ("symmetric chains", Duration::from_secs(60), c4_symmetric_chain),
        ("boron tree enumeration", Duration::from_secs(60), c5_enumeration),
        ("embedding oracle", Duration::from_secs(300), c6_embedding_oracle),
        ("cycle antichain", Duration::from_secs(60), c7_cycle_antichain),
        ("phi/psi round trip", Duration::from_secs(60), c8_round_trip),
        ("init commutes with monotone maps", Duration::from_secs(60), c9_init_commutes),
        ("hom-set counts", Duration::from_secs(60), c10_hom_counts),
    ];
    let mut failed = Vec::new();
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let result = match result {
            Ok(_) if took > budget => Err(format!("took {took:.2?}, budget {budget:?}")),
            r => r,
        };
        match result {
            Ok(detail) => say(format!("criterion {:>2} PASS  {name} ({detail}) [{took:.2?}]", i + 1)),
            Err(why) => {
                say(format!("criterion {:>2} FAIL  {name}: {why} [{took:.2?}]", i + 1));
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
