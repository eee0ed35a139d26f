use std::sync::Arc;

use clap::{Subcommand, ValueEnum};
use serde_json::{json, Value};

use boric::algebra::Polynomial;
use boric::instances::{CategoryInstance, Object};
use boric::systems::{
    equivariance_check, init_system, stabilization_probe, Certificate, Membership, OrbitSystem, Outcome, Strategy,
    SystemSpec,
};

use crate::input::{read_arg, read_file, Failure, Within};
use crate::{Global, Report};

#[derive(Subcommand)]
pub enum IdealCommand {
    /// List the orbit generators of I_A
    Gens {
        spec: String,
        /// Object: a file or inline text in the instance's notation
        object: String,
        #[arg(long)]
        count: bool,
    },
    /// Decide whether a polynomial lies in I_A
    Member {
        spec: String,
        object: String,
        /// Polynomial, inline or in a file
        poly: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Initial ideal of I_A (ordered instances only)
    Init { spec: String, object: String },
    /// Probe the chain of a spec file for stabilization
    Stabilize { spec: String },
    /// Check phi_*(I_A) in I_B over all morphisms up to the bound
    Equivariance { spec: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Span,
    Groebner,
}

struct Loaded {
    spec: SystemSpec,
    system: OrbitSystem,
}

fn load(path: &str, g: &Global) -> Result<Loaded, Failure> {
    let src = read_file(path)?;
    let spec = SystemSpec::parse(&src.text).within(&src)?;
    let data = spec.generator_data(spec.levels)?;
    let system = OrbitSystem::new(spec.instance_arc(), data, g.bound.or(spec.bound));
    Ok(Loaded { spec, system })
}

fn object(l: &Loaded, arg: &str) -> Result<Object, Failure> {
    let src = read_arg(arg)?;
    l.spec.instance.parse_object(src.text.trim_end()).within(&src)
}

fn bound(l: &Loaded, g: &Global) -> Result<usize, Failure> {
    g.bound
        .or(l.spec.bound)
        .ok_or_else(|| Failure::Usage("give --bound or a `bound:` line in the spec".into()))
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn certificate_json(m: &Membership) -> Value {
    match &m.certificate {
        Certificate::Zero => json!({ "kind": "zero" }),
        Certificate::Generator(i) => json!({ "kind": "generator", "index": i }),
        Certificate::Span(c) => json!({
            "kind": "span",
            "rank": c.rank,
            "coefficients": c.coefficients.iter().map(|(i, x)| json!([i, x.to_string()])).collect::<Vec<_>>(),
            "residual_leading": c.residual_leading.as_ref().map(|m| m.0.clone()),
        }),
        Certificate::Groebner {
            remainder,
            steps,
            basis_size,
        } => json!({
            "kind": "groebner",
            "basis_size": basis_size,
            "steps": steps,
            "normal_form": remainder.to_string(),
        }),
    }
}

fn single_degree(f: &Polynomial, gens: &[Polynomial]) -> bool {
    f.is_homogeneous() && gens.iter().all(|g| g.is_homogeneous() && (f.is_zero() || g.degree() == f.degree()))
}

pub fn run(cmd: &IdealCommand, g: &Global) -> Result<Report, Failure> {
    match cmd {
        IdealCommand::Gens { spec, object: o, count } => {
            let l = load(spec, g)?;
            let a = object(&l, o)?;
            let ideal = l.system.orbit_generators(&a)?;
            let gens = strings(ideal.generators());
            let mut text = format!("{} orbit generators at {a}", gens.len());
            if !count {
                for s in &gens {
                    text.push_str(&format!("\n  {s}"));
                }
            }
            Ok(Report::ok(text, json!({ "object": a.to_string(), "count": gens.len(), "generators": gens })))
        }
        IdealCommand::Member {
            spec,
            object: o,
            poly,
            method,
        } => {
            let l = load(spec, g)?;
            let a = object(&l, o)?;
            let src = read_arg(poly)?;
            let ring = l.spec.instance.ring(&a)?;
            let f = Polynomial::parse(src.text.trim_end(), &ring).within(&src)?;
            let strategy = match method {
                Method::Auto => Strategy::Auto,
                Method::Span => Strategy::Span,
                Method::Groebner => Strategy::Groebner,
            };
            let m = l.system.member_with(&a, &f, strategy)?;
            let mut text = m.to_string();
            let gens = l.system.orbit_generators(&a)?;
            if let Certificate::Span(c) = &m.certificate {
                for (i, x) in &c.coefficients {
                    text.push_str(&format!("\n  {x} * g{i}   where g{i} = {}", gens.generators()[*i]));
                }
            }
            let mut json = json!({
                "object": a.to_string(),
                "polynomial": f.to_string(),
                "member": m.member,
                "certificate": certificate_json(&m),
            });
            if g.oracle {
                let other = match m.certificate {
                    Certificate::Span(_) => Strategy::Groebner,
                    _ if single_degree(&f, gens.generators()) => Strategy::Span,
                    _ => Strategy::Groebner,
                };
                let check = l.system.member_with(&a, &f, other)?;
                if check.member != m.member {
                    return Err(Failure::Oracle(format!("{m} but the second route says {check}")));
                }
                text.push_str(&format!("\noracle: agrees ({check})"));
                json["oracle"] = certificate_json(&check);
            }
            Ok(Report::verdict(m.member, text, json))
        }
        IdealCommand::Init { spec, object: o } => {
            let l = load(spec, g)?;
            let a = object(&l, o)?;
            let init = init_system(&l.system, &a)?;
            let gens = strings(init.generators());
            let text = format!("init(I_{a}) = ({})", gens.join(", "));
            Ok(Report::ok(text, json!({ "object": a.to_string(), "init": gens })))
        }
        IdealCommand::Stabilize { spec } => {
            let l = load(spec, g)?;
            let b = bound(&l, g)?;
            let chain = l.spec.chain()?;
            let report = stabilization_probe(Arc::new(l.spec.instance), &chain, b)?;
            let level = match report.outcome {
                Outcome::Stabilized { level } => Some(level),
                Outcome::NotStabilized => None,
            };
            let json = json!({
                "levels": report.levels,
                "bound": b,
                "stabilized_at": level,
                "objects": report.objects.iter().map(|t| json!({
                    "object": t.object.to_string(),
                    "basis_sizes": t.basis_sizes,
                    "stable_from": t.first_stable,
                })).collect::<Vec<_>>(),
            });
            Ok(Report::verdict(level.is_some(), report.to_string(), json))
        }
        IdealCommand::Equivariance { spec } => {
            let l = load(spec, g)?;
            let b = bound(&l, g)?;
            let found = equivariance_check(&l.system, b)?;
            let text = match &found {
                None => format!("EQUIVARIANT (all morphisms between objects of size <= {b})"),
                Some(v) => format!("NOT EQUIVARIANT: {v}"),
            };
            let json = json!({
                "equivariant": found.is_none(),
                "bound": b,
                "violation": found.as_ref().map(|v| v.to_string()),
            });
            Ok(Report::verdict(found.is_none(), text, json))
        }
    }
}
