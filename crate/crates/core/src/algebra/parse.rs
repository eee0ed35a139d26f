//! Polynomial text format.
//!
//! ```text
//! expr   := ["+" | "-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := atom ["^" INT]
//! atom   := INT ["/" INT] | VAR | "disc(" ELEM ("," ELEM)* ")" | "(" expr ")"
//! VAR    := "x" INT ["_" INT]
//! ELEM   := ["x"] INT ["_" INT]
//! ```
//!
//! `disc(a, b, ...)` expands to the product of `(x_a - x_b)` over pairs in
//! list order. Example: `3/2*x1^2*x3 - x2`.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::poly::{discriminant, Polynomial};
use super::ring::{Ring, VariableSet};
use super::Coeff;
use crate::error::{Error, ParseError, Result};
use crate::Elem;

enum Expr {
    Num(Coeff),
    Var(Elem, usize),
    /// Elements with their positions.
    Disc(Vec<Elem>, Vec<usize>),
    Sum(Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Pow(Box<Expr>, u32),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse(ParseError::new(self.pos, msg)))
    }

    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.peek();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn small_int(&mut self) -> Result<u32> {
        let at = self.pos;
        let d = self.digits()?;
        d.parse().or_else(|_| {
            self.pos = at;
            self.err("integer out of range")
        })
    }

    fn elem_body(&mut self) -> Result<Elem> {
        let a = self.small_int()?;
        if self.src.get(self.pos) == Some(&b'_') {
            self.pos += 1;
            let b = self.small_int()?;
            Ok(Elem::Pair(a, b))
        } else {
            Ok(Elem::Atom(a))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut parts = Vec::new();
        let mut negative = false;
        if self.eat(b'-') {
            negative = true;
        } else {
            self.eat(b'+');
        }
        parts.push((negative, self.term()?));
        loop {
            if self.eat(b'+') {
                parts.push((false, self.term()?));
            } else if self.eat(b'-') {
                parts.push((true, self.term()?));
            } else {
                break;
            }
        }
        Ok(Expr::Sum(parts))
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        while self.eat(b'*') {
            factors.push(self.factor()?);
        }
        Ok(Expr::Product(factors))
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.small_int()?;
            Ok(Expr::Pow(Box::new(base), e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits()?.parse().unwrap();
                if self.eat(b'/') {
                    let at = self.pos;
                    let den: BigInt = self.digits()?.parse().unwrap();
                    if den == BigInt::from(0) {
                        self.pos = at;
                        return self.err("zero denominator");
                    }
                    Ok(Expr::Num(Coeff::new(num, den)))
                } else {
                    Ok(Expr::Num(Coeff::from_integer(num)))
                }
            }
            Some(b'x') => {
                let at = self.pos;
                self.pos += 1;
                Ok(Expr::Var(self.elem_body()?, at))
            }
            Some(b'd') if self.src[self.pos..].starts_with(b"disc") => {
                self.pos += 4;
                if !self.eat(b'(') {
                    return self.err("expected `(` after disc");
                }
                let mut elems = Vec::new();
                let mut at = Vec::new();
                loop {
                    self.peek();
                    at.push(self.pos);
                    if self.src.get(self.pos) == Some(&b'x') {
                        self.pos += 1;
                    }
                    elems.push(self.elem_body()?);
                    if self.eat(b')') {
                        break;
                    }
                    if !self.eat(b',') {
                        return self.err("expected `,` or `)`");
                    }
                }
                Ok(Expr::Disc(elems, at))
            }
            _ => self.err("expected a number, variable, `disc(` or `(`"),
        }
    }
}

fn collect_vars(e: &Expr, out: &mut BTreeSet<Elem>) {
    match e {
        Expr::Num(_) => {}
        Expr::Var(v, _) => {
            out.insert(*v);
        }
        Expr::Disc(vs, _) => out.extend(vs.iter().copied()),
        Expr::Sum(parts) => parts.iter().for_each(|(_, e)| collect_vars(e, out)),
        Expr::Product(fs) => fs.iter().for_each(|e| collect_vars(e, out)),
        Expr::Pow(b, _) => collect_vars(b, out),
    }
}

fn eval(e: &Expr, ring: &Ring) -> Result<Polynomial> {
    let missing = |v: &Elem, at: usize| {
        Error::Parse(ParseError::new(at, format!("{v} is not a variable of {ring:?}")))
    };
    Ok(match e {
        Expr::Num(c) => Polynomial::constant(ring, c.clone()),
        Expr::Var(v, at) => Polynomial::var(ring, *v).map_err(|_| missing(v, *at))?,
        Expr::Disc(vs, at) => {
            if let Some(i) = vs.iter().position(|v| ring.index_of(*v).is_none()) {
                return Err(missing(&vs[i], at[i]));
            }
            discriminant(ring, vs)?
        }
        Expr::Sum(parts) => {
            let mut acc = Polynomial::zero(ring);
            for (neg, t) in parts {
                let v = eval(t, ring)?;
                acc = if *neg { &acc - &v } else { &acc + &v };
            }
            acc
        }
        Expr::Product(fs) => {
            let mut acc = Polynomial::one(ring);
            for f in fs {
                acc = &acc * &eval(f, ring)?;
            }
            acc
        }
        Expr::Pow(b, k) => eval(b, ring)?.pow(*k),
    })
}

fn parse_expr(text: &str) -> Result<Expr> {
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = lx.expr()?;
    if lx.peek().is_some() {
        return lx.err("unexpected trailing input");
    }
    Ok(e)
}

impl Polynomial {
    /// Parses `text` as an element of `ring`.
    pub fn parse(text: &str, ring: &Ring) -> Result<Polynomial> {
        eval(&parse_expr(text)?, ring)
    }

    /// Parses `text` in the ring of exactly the variables it mentions, in
    /// ascending order.
    pub fn parse_standalone(text: &str) -> Result<Polynomial> {
        let e = parse_expr(text)?;
        let mut vars = BTreeSet::new();
        collect_vars(&e, &mut vars);
        let ring = VariableSet::new(vars.into_iter().collect())?;
        eval(&e, &ring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: u32) -> Ring {
        VariableSet::new((1..=n).map(Elem::Atom).collect()).unwrap()
    }

    #[test]
    fn parses_and_prints() {
        let r = ring(3);
        let p = Polynomial::parse("3/2*x1^2*x3 - x2", &r).unwrap();
        assert_eq!(p.to_string(), "3/2*x1^2*x3 - x2");
        let q = Polynomial::parse("-(x1 - x2)^2 + 2*x1*x2 + x1^2", &r).unwrap();
        assert_eq!(q, Polynomial::parse("4*x1*x2 - x2^2", &r).unwrap());
    }

    #[test]
    fn disc_and_pairs() {
        let r = ring(3);
        let d = Polynomial::parse("disc(1,x2,3)", &r).unwrap();
        let e = Polynomial::parse("(x1-x2)*(x1-x3)*(x2-x3)", &r).unwrap();
        assert_eq!(d, e);
        let p = Polynomial::parse_standalone("x1_2*x3_1 - 2").unwrap();
        assert_eq!(p.ring().vars(), &[Elem::Pair(1, 2), Elem::Pair(3, 1)]);
        assert_eq!(p.to_string(), "x1_2*x3_1 - 2");
    }

    #[test]
    fn errors_point_at_the_problem() {
        let r = ring(2);
        match Polynomial::parse("x1 + x7", &r).unwrap_err() {
            Error::Parse(p) => assert_eq!(p.position, 5),
            e => panic!("{e:?}"),
        }
        match Polynomial::parse("x1 + * x2", &r).unwrap_err() {
            Error::Parse(p) => assert_eq!(p.position, 5),
            e => panic!("{e:?}"),
        }
        match Polynomial::parse("disc(1, x9)", &r).unwrap_err() {
            Error::Parse(p) => assert_eq!(p.position, 8),
            e => panic!("{e:?}"),
        }
        assert!(Polynomial::parse("1/0", &r).is_err());
        assert!(Polynomial::parse("x1 x2", &r).is_err());
    }
}
