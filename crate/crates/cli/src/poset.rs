use clap::{Subcommand, ValueEnum};
use serde_json::json;

use boric::instances::{CategoryInstance, InstanceDescriptor, Object};
use boric::oracle::higman_brute;
use boric::poset::{dickson_leq, higman_leq, subset_class_leq, try_antichain_check, weighted_leq, WeightedObject};
use boric::{Error, ParseError};

use crate::input::{Failure, Source, Within};
use crate::{Global, Report};

#[derive(Subcommand)]
pub enum PosetCommand {
    /// Compare two elements in both directions
    Leq {
        #[arg(value_enum)]
        order: Order,
        a: String,
        b: String,
        /// Instance for `weighted` and `subset`
        #[arg(long, default_value = "fi")]
        instance: String,
    },
    /// Check that no two of the given elements are comparable
    Antichain {
        /// Instance descriptor, e.g. `pairfi` or `oi`
        instance: String,
        /// Objects or weighted objects, or `cycles a..b`
        elements: Vec<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    /// Words of naturals under subword domination
    Higman,
    /// Vectors of naturals, coordinatewise
    Dickson,
    /// Weighted objects `<object> weights: {e: k}`
    Weighted,
    /// Objects, ordered by existence of a morphism
    Subset,
}

fn numbers(text: &str) -> Result<Vec<u32>, Failure> {
    let src = Source::inline(text);
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let t = piece.trim();
        if !t.is_empty() {
            let lead = piece.len() - piece.trim_start().len();
            let v = t
                .parse()
                .map_err(|_| Error::Parse(ParseError::new(offset + lead, format!("`{t}` is not a natural number"))));
            out.push(v.within(&src)?);
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}

fn instance(text: &str) -> Result<InstanceDescriptor, Failure> {
    text.parse().within(&Source::inline(text))
}

fn parse_object(inst: &InstanceDescriptor, text: &str) -> Result<Object, Failure> {
    inst.parse_object(text).within(&Source::inline(text))
}

fn parse_weighted(inst: &InstanceDescriptor, text: &str) -> Result<WeightedObject, Failure> {
    WeightedObject::parse(inst, text).within(&Source::inline(text))
}

fn both_ways(a_le_b: bool, b_le_a: bool, a: &str, b: &str) -> Report {
    let text = if a_le_b {
        format!("LEQ ({a} <= {b}{})", if b_le_a { ", and conversely" } else { "" })
    } else {
        format!("INCOMPARABLE-OR-GT ({a} <= {b}: false, {b} <= {a}: {b_le_a})")
    };
    Report::verdict(a_le_b, text, json!({ "leq": a_le_b, "geq": b_le_a }))
}

pub fn run(cmd: &PosetCommand, g: &Global) -> Result<Report, Failure> {
    match cmd {
        PosetCommand::Leq { order, a, b, instance: i } => {
            let (ab, ba) = match order {
                Order::Higman => {
                    let (u, v) = (numbers(a)?, numbers(b)?);
                    let leq = |x: &u32, y: &u32| x <= y;
                    let (ab, ba) = (higman_leq(&u, &v, leq), higman_leq(&v, &u, leq));
                    if g.oracle && (ab, ba) != (higman_brute(&u, &v, leq), higman_brute(&v, &u, leq)) {
                        return Err(Failure::Oracle("greedy and exhaustive subword search differ".into()));
                    }
                    (ab, ba)
                }
                Order::Dickson => {
                    let (u, v) = (numbers(a)?, numbers(b)?);
                    (dickson_leq(&u, &v)?, dickson_leq(&v, &u)?)
                }
                Order::Weighted => {
                    let inst = instance(i)?;
                    let (x, y) = (parse_weighted(&inst, a)?, parse_weighted(&inst, b)?);
                    (weighted_leq(&inst, &x, &y)?, weighted_leq(&inst, &y, &x)?)
                }
                Order::Subset => {
                    let inst = instance(i)?;
                    let (x, y) = (parse_object(&inst, a)?, parse_object(&inst, b)?);
                    (subset_class_leq(&inst, &x, &y)?, subset_class_leq(&inst, &y, &x)?)
                }
            };
            Ok(both_ways(ab, ba, a, b))
        }
        PosetCommand::Antichain { instance: i, elements } => {
            let inst = instance(i)?;
            let found = if elements.first().map(String::as_str) == Some("cycles") {
                let range = elements
                    .get(1)
                    .ok_or_else(|| Failure::Usage("`cycles` needs a range such as 3..6".into()))?;
                let (lo, hi) = range
                    .split_once("..")
                    .and_then(|(lo, hi)| Some((lo.parse::<u32>().ok()?, hi.parse::<u32>().ok()?)))
                    .ok_or_else(|| Failure::Usage(format!("bad range `{range}`")))?;
                let objs: Vec<Object> = (lo..=hi).map(Object::cycle).collect();
                let shown: Vec<String> = objs.iter().map(|o| o.to_string()).collect();
                (shown, try_antichain_check(&objs, |x, y| subset_class_leq(&inst, x, y))?)
            } else if elements.iter().any(|e| e.contains("weights:")) {
                let xs = elements
                    .iter()
                    .map(|e| parse_weighted(&inst, e))
                    .collect::<Result<Vec<_>, _>>()?;
                let shown = xs.iter().map(|x| x.to_string()).collect();
                (shown, try_antichain_check(&xs, |x, y| weighted_leq(&inst, x, y))?)
            } else {
                let objs = elements
                    .iter()
                    .map(|e| parse_object(&inst, e))
                    .collect::<Result<Vec<_>, _>>()?;
                let shown = objs.iter().map(|o| o.to_string()).collect();
                (shown, try_antichain_check(&objs, |x, y| subset_class_leq(&inst, x, y))?)
            };
            let (shown, pair) = found;
            let text = match pair {
                None => format!("ANTICHAIN ({} elements)", shown.len()),
                Some((i, j)) => format!("NOT AN ANTICHAIN: {} <= {}", shown[i], shown[j]),
            };
            let json = json!({
                "antichain": pair.is_none(),
                "elements": shown,
                "comparable": pair.map(|(i, j)| [i, j]),
            });
            Ok(Report::verdict(pair.is_none(), text, json))
        }
    }
}
