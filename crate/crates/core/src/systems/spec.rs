//! System specification files.
//!
//! ```text
//! # comment
//! instance: boron
//! bound: 12
//! levels: 3
//! generator: ((1,2),(3,4),(5,6)); | disc(1,2,3,4,5,6)
//! generator@2: [2] | x1 - x2
//! ```
//!
//! `instance` takes a descriptor such as `fi`, `fi_m m=3` or
//! `colored_linear c=2`. A generator line holds an object and a polynomial
//! in the ring of that object, separated by `|`. `generator@k` enters the
//! chain at level `k` (default 1) and stays in every later level. `levels`
//! defaults to the highest level mentioned. `bound` is optional.

use std::sync::Arc;

use super::{GeneratorData, OrbitSystem};
use crate::algebra::Polynomial;
use crate::error::{Error, ParseError, Result};
use crate::instances::{CategoryInstance, InstanceDescriptor, Object};

#[derive(Debug, Clone)]
pub struct SystemSpec {
    pub instance: InstanceDescriptor,
    pub bound: Option<usize>,
    pub levels: usize,
    /// `(level, object, polynomial)`, 1-based levels.
    pub generators: Vec<(usize, Object, Polynomial)>,
}

fn at(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse(ParseError::new(pos, msg))
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse(p) => Error::Parse(ParseError::new(p.position + by, p.message)),
        e => e,
    }
}

impl SystemSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut instance = None;
        let mut bound = None;
        let mut levels = None;
        let mut pending = Vec::new();
        let mut offset = 0;
        for raw in text.split_inclusive('\n') {
            let start = offset;
            offset += raw.len();
            let line = raw.split('#').next().unwrap();
            if line.trim().is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| at(start, "expected `key: value`"))?;
            let vpos = start + key.len() + 1 + (value.len() - value.trim_start().len());
            let value = value.trim();
            let key = key.trim();
            match key {
                "instance" => {
                    let d: InstanceDescriptor = value.parse().map_err(|e| shift(e, vpos))?;
                    instance = Some(d);
                }
                "bound" => bound = Some(value.parse().map_err(|_| at(vpos, "bound must be a number"))?),
                "levels" => {
                    let k: usize = value.parse().map_err(|_| at(vpos, "levels must be a number"))?;
                    if k == 0 {
                        return Err(at(vpos, "levels must be positive"));
                    }
                    levels = Some(k);
                }
                k if k == "generator" || k.starts_with("generator@") => {
                    let level = match k.strip_prefix("generator@") {
                        None => 1,
                        Some(l) => match l.parse::<usize>() {
                            Ok(l) if l >= 1 => l,
                            _ => return Err(at(start, "generator level must be a positive number")),
                        },
                    };
                    let bar = value
                        .find('|')
                        .ok_or_else(|| at(vpos, "expected `object | polynomial`"))?;
                    pending.push((level, vpos, value[..bar].trim().to_string(), vpos + bar + 1, value[bar + 1..].to_string()));
                }
                _ => return Err(at(start, format!("unknown key `{key}`"))),
            }
        }
        let instance = instance.ok_or_else(|| at(0, "missing `instance:` line"))?;
        let mut generators = Vec::with_capacity(pending.len());
        for (level, opos, obj, ppos, poly) in pending {
            let object = instance.parse_object(&obj).map_err(|e| shift(e, opos))?;
            if let Some(b) = bound {
                let size = instance.size(&object);
                if size > b {
                    return Err(Error::OutOfRange { size, bound: b });
                }
            }
            let ring = instance.ring(&object)?;
            let lead = poly.len() - poly.trim_start().len();
            let f = Polynomial::parse(poly.trim(), &ring).map_err(|e| shift(e, ppos + lead))?;
            generators.push((level, object, f));
        }
        let top = generators.iter().map(|g| g.0).max().unwrap_or(1);
        let levels = levels.unwrap_or(top);
        if top > levels {
            return Err(at(0, format!("a generator enters at level {top} but levels is {levels}")));
        }
        Ok(SystemSpec {
            instance,
            bound,
            levels,
            generators,
        })
    }

    pub fn instance_arc(&self) -> Arc<dyn CategoryInstance> {
        Arc::new(self.instance)
    }

    /// Generators present at `level` (1-based).
    pub fn generator_data(&self, level: usize) -> Result<GeneratorData> {
        let pairs = self
            .generators
            .iter()
            .filter(|g| g.0 <= level)
            .map(|g| (g.1.clone(), g.2.clone()))
            .collect();
        GeneratorData::new(&self.instance, pairs)
    }

    pub fn chain(&self) -> Result<Vec<GeneratorData>> {
        (1..=self.levels).map(|k| self.generator_data(k)).collect()
    }

    /// The system at the top level.
    pub fn system(&self) -> Result<OrbitSystem> {
        Ok(OrbitSystem::new(self.instance_arc(), self.generator_data(self.levels)?, self.bound))
    }
}
