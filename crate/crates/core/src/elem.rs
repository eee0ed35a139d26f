use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError};

/// An element of an underlying set `|A|`, which doubles as the name of
/// the polynomial variable `x_e` in `R_A`.
///
/// Most instances use plain atoms (`1`, `2`, ...). The multi-variable
/// functor `|A| x [m]` and the pair instance use pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Elem {
    Atom(u32),
    Pair(u32, u32),
}

impl Elem {
    pub fn atom(self) -> Option<u32> {
        match self {
            Elem::Atom(a) => Some(a),
            Elem::Pair(..) => None,
        }
    }

    /// The bare element label without the `x` variable prefix.
    pub fn label(&self) -> String {
        match self {
            Elem::Atom(a) => a.to_string(),
            Elem::Pair(a, b) => format!("{a}_{b}"),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.label())
    }
}

impl FromStr for Elem {
    type Err = Error;

    /// Accepts `3`, `x3`, `3_2` and `x3_2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim();
        let body = body.strip_prefix('x').unwrap_or(body);
        let bad = || Error::Parse(ParseError::new(0, format!("invalid element `{s}`")));
        match body.split_once('_') {
            None => body.parse().map(Elem::Atom).map_err(|_| bad()),
            Some((a, b)) => Ok(Elem::Pair(
                a.parse().map_err(|_| bad())?,
                b.parse().map_err(|_| bad())?,
            )),
        }
    }
}
