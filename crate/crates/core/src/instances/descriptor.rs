use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use super::{increasing, injections, CategoryInstance, Morphism, Object};
use crate::error::{Error, ParseError, Result};
use crate::tree::{enumerate_embeddings, enumerate_labeled, parse_newick, parse_ordered_newick, OrderedBoronTree};
use crate::Elem;

/// The shipped instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InstanceDescriptor {
    Fi,
    Oi,
    /// FI with `|A|_m = |A| x [m]`.
    FiM(u32),
    /// OI with `|A|_m = |A| x [m]`, ordered lexicographically.
    OiM(u32),
    /// Finite chains with a `c`-coloring and color-preserving monotone
    /// injections.
    ColoredLinear(u32),
    Boron,
    OrderedBoron,
    /// Finite subsets of `N x N` under the diagonal action of injections.
    PairFi,
    /// `[n] -> [m]` are the shifts `j -> j + i`, `0 <= i <= m - n`.
    Boi,
}

use InstanceDescriptor as D;

impl fmt::Display for InstanceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            D::Fi => write!(f, "fi"),
            D::Oi => write!(f, "oi"),
            D::FiM(m) => write!(f, "fi_m m={m}"),
            D::OiM(m) => write!(f, "oi_m m={m}"),
            D::ColoredLinear(c) => write!(f, "colored_linear c={c}"),
            D::Boron => write!(f, "boron"),
            D::OrderedBoron => write!(f, "ordered_boron"),
            D::PairFi => write!(f, "pair_fi"),
            D::Boi => write!(f, "boi"),
        }
    }
}

impl FromStr for InstanceDescriptor {
    type Err = Error;

    /// `fi`, `oi`, `fi_m m=3`, `oi_m m=2`, `colored_linear c=2`, `boron`,
    /// `ordered_boron`, `pair_fi`, `boi`.
    fn from_str(s: &str) -> Result<Self> {
        let mut words = s.split_whitespace();
        let kind = words.next().unwrap_or("").to_ascii_lowercase();
        let mut params = BTreeMap::new();
        for w in words {
            let (k, v) = w
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got `{w}`")))?;
            let v: u32 = v.parse().map_err(|_| bad(format!("`{v}` is not a number")))?;
            if v == 0 {
                return Err(bad(format!("parameter {k} must be positive")));
            }
            params.insert(k.to_string(), v);
        }
        let mut take = |key: &str| {
            params
                .remove(key)
                .ok_or_else(|| bad(format!("{kind} needs parameter {key}")))
        };
        let d = match kind.replace('-', "_").as_str() {
            "fi" => D::Fi,
            "oi" => D::Oi,
            "fi_m" => D::FiM(take("m")?),
            "oi_m" => D::OiM(take("m")?),
            "colored_linear" => D::ColoredLinear(take("c")?),
            "boron" => D::Boron,
            "ordered_boron" => D::OrderedBoron,
            "pair_fi" | "pairfi" => D::PairFi,
            "boi" => D::Boi,
            _ => return Err(bad(format!("unknown instance `{kind}`"))),
        };
        if let Some(k) = params.keys().next() {
            return Err(bad(format!("unexpected parameter {k}")));
        }
        Ok(d)
    }
}

fn bad(msg: String) -> Error {
    Error::Parse(ParseError::new(0, msg))
}

fn atoms(n: u32) -> Vec<Elem> {
    (1..=n).map(Elem::Atom).collect()
}

fn colored(n: u32, m: u32) -> Vec<Elem> {
    (1..=n)
        .flat_map(|i| (1..=m).map(move |j| Elem::Pair(i, j)))
        .collect()
}

/// All words of length `n` over colors `1..=c`, lexicographically.
fn colorings(n: usize, c: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=c).map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn index_maps(a: u32, sources: Vec<Vec<usize>>, m: Option<u32>) -> Vec<Morphism> {
    sources
        .into_iter()
        .map(|img| {
            let mut map = BTreeMap::new();
            for i in 0..a as usize {
                let (x, y) = (i as u32 + 1, img[i] as u32 + 1);
                match m {
                    None => {
                        map.insert(Elem::Atom(x), Elem::Atom(y));
                    }
                    Some(m) => {
                        for j in 1..=m {
                            map.insert(Elem::Pair(x, j), Elem::Pair(y, j));
                        }
                    }
                }
            }
            Morphism::new(map)
        })
        .collect()
}

impl InstanceDescriptor {
    pub fn is_ordered(&self) -> bool {
        !matches!(self, D::Fi | D::FiM(_) | D::Boron | D::PairFi)
    }

    fn set_size(&self, a: &Object) -> Result<u32> {
        match a {
            Object::Set(n) => Ok(*n),
            _ => Err(self.mismatch(a)),
        }
    }

    fn mismatch(&self, a: &Object) -> Error {
        Error::InstanceMismatch(format!("{a} is not an object of {self}"))
    }
}

impl CategoryInstance for InstanceDescriptor {
    fn name(&self) -> String {
        self.to_string()
    }

    fn check(&self, a: &Object) -> Result<()> {
        let ok = match (self, a) {
            (D::Fi | D::Oi | D::FiM(_) | D::OiM(_) | D::Boi, Object::Set(_)) => true,
            (D::ColoredLinear(c), Object::Colored(cs)) => cs.iter().all(|&x| x >= 1 && x <= *c),
            (D::Boron, Object::Boron(_)) => true,
            (D::OrderedBoron, Object::OrderedBoron(_)) => true,
            (D::PairFi, Object::Pairs(_)) => true,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(self.mismatch(a))
        }
    }

    fn objects(&self, bound: usize) -> Vec<Object> {
        match self {
            D::Fi | D::Oi | D::FiM(_) | D::OiM(_) | D::Boi => {
                (0..=bound as u32).map(Object::Set).collect()
            }
            D::ColoredLinear(c) => (0..=bound)
                .flat_map(|n| colorings(n, *c))
                .map(Object::Colored)
                .collect(),
            D::Boron => (2..=bound)
                .flat_map(|n| enumerate_labeled(n).expect("n >= 2"))
                .map(Object::Boron)
                .collect(),
            D::OrderedBoron => (2..=bound)
                .flat_map(|n| enumerate_labeled(n).expect("n >= 2"))
                .flat_map(|t| OrderedBoronTree::all_orderings(&t))
                .map(Object::OrderedBoron)
                .collect(),
            D::PairFi => {
                let b = bound as u32;
                let cells: Vec<(u32, u32)> = (1..=b).cartesian_product(1..=b).collect();
                (0..=bound)
                    .flat_map(|k| {
                        cells
                            .iter()
                            .copied()
                            .combinations(k)
                            .map(|s| Object::Pairs(s.into_iter().collect()))
                            .collect::<Vec<_>>()
                    })
                    .collect()
            }
        }
    }

    fn size(&self, a: &Object) -> usize {
        match a {
            Object::Set(n) => *n as usize,
            Object::Colored(c) => c.len(),
            Object::Boron(t) => t.leaf_count(),
            Object::OrderedBoron(t) => t.tree().leaf_count(),
            Object::Pairs(p) => p.len(),
        }
    }

    fn underlying(&self, a: &Object) -> Result<Vec<Elem>> {
        self.check(a)?;
        Ok(match (self, a) {
            (D::FiM(m) | D::OiM(m), Object::Set(n)) => colored(*n, *m),
            (_, Object::Set(n)) => atoms(*n),
            (_, Object::Colored(c)) => atoms(c.len() as u32),
            (_, Object::Boron(t)) => t.leaves().iter().map(|&l| Elem::Atom(l)).collect(),
            (_, Object::OrderedBoron(t)) => t.tree().leaves().iter().map(|&l| Elem::Atom(l)).collect(),
            (_, Object::Pairs(p)) => p.iter().map(|&(x, y)| Elem::Pair(x, y)).collect(),
        })
    }

    fn hom(&self, a: &Object, b: &Object) -> Result<Vec<Morphism>> {
        self.check(a)?;
        self.check(b)?;
        Ok(match self {
            D::Fi | D::Oi | D::FiM(_) | D::OiM(_) => {
                let (n, m) = (self.set_size(a)?, self.set_size(b)?);
                let maps = match self {
                    D::Fi | D::FiM(_) => injections(n as usize, m as usize),
                    _ => increasing(n as usize, m as usize),
                };
                let colors = match self {
                    D::FiM(k) | D::OiM(k) => Some(*k),
                    _ => None,
                };
                index_maps(n, maps, colors)
            }
            D::Boi => {
                let (n, m) = (self.set_size(a)?, self.set_size(b)?);
                if n > m {
                    Vec::new()
                } else if n == 0 {
                    // all shifts restrict to the same empty map
                    vec![Morphism::new(BTreeMap::new())]
                } else {
                    let shifts = (0..=(m - n) as usize)
                        .map(|i| (i..i + n as usize).collect())
                        .collect();
                    index_maps(n, shifts, None)
                }
            }
            D::ColoredLinear(_) => {
                let (Object::Colored(ca), Object::Colored(cb)) = (a, b) else {
                    unreachable!()
                };
                let maps = increasing(ca.len(), cb.len())
                    .into_iter()
                    .filter(|img| img.iter().enumerate().all(|(i, &j)| ca[i] == cb[j]))
                    .collect();
                index_maps(ca.len() as u32, maps, None)
            }
            D::Boron => {
                let (Object::Boron(s), Object::Boron(t)) = (a, b) else {
                    unreachable!()
                };
                enumerate_embeddings(s, t)
                    .into_iter()
                    .map(|lm| {
                        Morphism::new(
                            lm.pairs()
                                .iter()
                                .map(|&(x, y)| (Elem::Atom(x), Elem::Atom(y)))
                                .collect(),
                        )
                    })
                    .collect()
            }
            D::OrderedBoron => {
                let (Object::OrderedBoron(s), Object::OrderedBoron(t)) = (a, b) else {
                    unreachable!()
                };
                let order = s.leaf_order();
                enumerate_embeddings(s.tree(), t.tree())
                    .into_iter()
                    .filter(|lm| {
                        lm.image(s.root()) == Some(t.root())
                            && order.windows(2).all(|w| {
                                t.less(lm.image(w[0]).unwrap(), lm.image(w[1]).unwrap())
                                    .unwrap()
                            })
                    })
                    .map(|lm| {
                        Morphism::new(
                            lm.pairs()
                                .iter()
                                .map(|&(x, y)| (Elem::Atom(x), Elem::Atom(y)))
                                .collect(),
                        )
                    })
                    .collect()
            }
            D::PairFi => {
                let (Object::Pairs(pa), Object::Pairs(pb)) = (a, b) else {
                    unreachable!()
                };
                let (sa, sb) = (a.support(), b.support());
                injections(sa.len(), sb.len())
                    .into_iter()
                    .filter_map(|img| {
                        let g: BTreeMap<u32, u32> =
                            sa.iter().zip(&img).map(|(&x, &j)| (x, sb[j])).collect();
                        let mut map = BTreeMap::new();
                        for &(x, y) in pa {
                            let im = (g[&x], g[&y]);
                            if !pb.contains(&im) {
                                return None;
                            }
                            map.insert(Elem::Pair(x, y), Elem::Pair(im.0, im.1));
                        }
                        Some(Morphism::new(map))
                    })
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect()
            }
        })
    }

    fn ordering(&self, a: &Object) -> Result<Option<Vec<Elem>>> {
        self.check(a)?;
        Ok(match (self, a) {
            (D::Fi | D::FiM(_) | D::Boron | D::PairFi, _) => None,
            (D::OrderedBoron, Object::OrderedBoron(t)) => {
                Some(t.leaf_order().into_iter().map(Elem::Atom).collect())
            }
            _ => Some(self.underlying(a)?),
        })
    }

    /// `[3]` (or `3`) for set-like instances, `<1,2,1>` for colored chains,
    /// Newick for trees and `{(1,2),(2,3)}` for pair sets.
    fn parse_object(&self, text: &str) -> Result<Object> {
        let t = text.trim();
        let err = |msg: &str| Error::Parse(ParseError::new(0, format!("{msg}: `{t}`")));
        let obj = match self {
            D::Fi | D::Oi | D::FiM(_) | D::OiM(_) | D::Boi => {
                let inner = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')).unwrap_or(t);
                Object::Set(inner.trim().parse().map_err(|_| err("expected [n]"))?)
            }
            D::ColoredLinear(_) => {
                let inner = t
                    .strip_prefix('<')
                    .and_then(|s| s.strip_suffix('>'))
                    .ok_or_else(|| err("expected <c1,c2,...>"))?;
                let colors = if inner.trim().is_empty() {
                    Vec::new()
                } else {
                    inner
                        .split(',')
                        .map(|c| c.trim().parse().map_err(|_| err("bad color")))
                        .collect::<Result<_>>()?
                };
                Object::Colored(colors)
            }
            D::Boron => Object::Boron(parse_newick(t)?),
            D::OrderedBoron => Object::OrderedBoron(parse_ordered_newick(t)?),
            D::PairFi => {
                let inner = t
                    .strip_prefix('{')
                    .and_then(|s| s.strip_suffix('}'))
                    .ok_or_else(|| err("expected {(a,b),...}"))?;
                let mut pairs = BTreeSet::new();
                let mut rest = inner.trim();
                while !rest.is_empty() {
                    let body = rest.strip_prefix('(').ok_or_else(|| err("expected `(`"))?;
                    let (pair, tail) = body.split_once(')').ok_or_else(|| err("expected `)`"))?;
                    let (x, y) = pair.split_once(',').ok_or_else(|| err("expected a,b"))?;
                    pairs.insert((
                        x.trim().parse().map_err(|_| err("bad pair"))?,
                        y.trim().parse().map_err(|_| err("bad pair"))?,
                    ));
                    rest = tail.trim_start().trim_start_matches(',').trim_start();
                }
                Object::Pairs(pairs)
            }
        };
        self.check(&obj)?;
        Ok(obj)
    }
}
