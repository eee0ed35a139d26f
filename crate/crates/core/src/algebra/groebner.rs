use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;

use super::poly::Polynomial;
use super::ring::{same_ring, Monomial, Ring};
use crate::error::{Error, Result};

/// Reduced, monic Groebner basis for the lex order of its ring, sorted by
/// increasing leading monomial. Reduced bases are unique, so two ideals are
/// equal iff their bases compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    basis: Vec<Polynomial>,
}

/// Outcome of dividing a polynomial by a list of divisors:
/// `f = sum_i quotients[i] * divisors[i] + remainder`.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
    pub steps: usize,
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// by degree, then lex) and both classical criteria.
pub fn buchberger(ring: &Ring, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    for g in gens {
        if !same_ring(g.ring(), ring) {
            return Err(Error::RingMismatch);
        }
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        let r = normal_form(g, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }
    if basis.iter().any(|g| g.leading_monomial().unwrap().degree() == 0) {
        return Ok(GroebnerBasis {
            ring: ring.clone(),
            basis: vec![Polynomial::one(ring)],
        });
    }
    let lm = |p: &Polynomial| p.leading_monomial().unwrap().clone();
    let mut pending: BTreeSet<(u32, Monomial, usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            let l = lm(&basis[i]).lcm(&lm(&basis[j]));
            pending.insert((l.degree(), l, i, j));
        }
    }
    while let Some(entry) = pending.pop_first() {
        let (_, lcm, i, j) = entry;
        let (li, lj) = (lm(&basis[i]), lm(&basis[j]));
        if li.is_coprime(&lj) {
            continue;
        }
        // chain criterion: some k divides the lcm and both (i,k), (j,k) are done
        let is_pending = |a: usize, b: usize| {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            let l = lm(&basis[a]).lcm(&lm(&basis[b]));
            pending.contains(&(l.degree(), l, a, b))
        };
        let chain = (0..basis.len()).any(|k| {
            k != i && k != j && lm(&basis[k]).divides(&lcm) && !is_pending(i, k) && !is_pending(j, k)
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = normal_form(&s, &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        if r.leading_monomial().unwrap().degree() == 0 {
            return Ok(GroebnerBasis {
                ring: ring.clone(),
                basis: vec![Polynomial::one(ring)],
            });
        }
        let k = basis.len();
        let lk = lm(&r);
        basis.push(r);
        for i in 0..k {
            let l = lm(&basis[i]).lcm(&lk);
            pending.insert((l.degree(), l, i, k));
        }
    }
    Ok(GroebnerBasis {
        ring: ring.clone(),
        basis: reduce_basis(basis),
    })
}

pub(crate) fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, cf) = f.leading_term().unwrap();
    let (mg, cg) = g.leading_term().unwrap();
    let l = mf.lcm(mg);
    let a = f.mul_term(&cf.recip(), &l.div(mf));
    let b = g.mul_term(&cg.recip(), &l.div(mg));
    &a - &b
}

/// Full reduction of `f` by `divisors` (no quotient tracking).
pub(crate) fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    reduce(f, divisors, false).remainder
}

fn reduce(f: &Polynomial, divisors: &[Polynomial], track: bool) -> Reduction {
    let ring = f.ring().clone();
    let mut quotients = if track {
        vec![Polynomial::zero(&ring); divisors.len()]
    } else {
        Vec::new()
    };
    let mut p = f.clone();
    let mut remainder = Polynomial::zero(&ring);
    let mut steps = 0;
    let leads: Vec<_> = divisors
        .iter()
        .map(|d| d.leading_term().map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    while let Some((m, c)) = p.pop_leading() {
        let hit = leads.iter().enumerate().find_map(|(i, l)| match l {
            Some((lm, lc)) if lm.divides(&m) => Some((i, lm, lc)),
            _ => None,
        });
        match hit {
            Some((i, lm, lc)) => {
                let q = c / lc;
                let shift = m.div(lm);
                // the leading term is already popped; subtract the tail only
                for (k, x) in divisors[i].terms().rev().skip(1) {
                    p.add_term(k.mul(&shift), -(x * &q));
                }
                if track {
                    quotients[i] = quotients[i]
                        .checked_add(&Polynomial::from_terms(&ring, [(shift, q)]))
                        .unwrap();
                }
                steps += 1;
            }
            None => remainder.add_term(m, c),
        }
    }
    Reduction {
        quotients,
        remainder,
        steps,
    }
}

fn reduce_basis(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    // minimal: drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lg = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lg))
        {
            minimal.retain(|h| !lg.divides(h.leading_monomial().unwrap()));
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.clone())
            .collect();
        reduced.push(normal_form(&minimal[i], &others).monic());
    }
    reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    reduced
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].degree() == Some(0)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        Ok(self.reduce(f)?.remainder)
    }

    /// Division with quotients, usable as a membership certificate.
    pub fn reduce(&self, f: &Polynomial) -> Result<Reduction> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(reduce(f, &self.basis, true))
    }

    pub fn member(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Leading monomials of the basis: minimal generators of the initial ideal.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    /// Whether every S-polynomial of basis pairs reduces to zero.
    pub fn is_groebner(&self) -> bool {
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let s = s_polynomial(&self.basis[i], &self.basis[j]);
                if !normal_form(&s, &self.basis).is_zero() {
                    return false;
                }
            }
        }
        self.basis
            .iter()
            .all(|g| g.leading_term().is_some_and(|(_, c)| c.is_one()))
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.basis.iter().map(|p| p.to_string())).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VariableSet;
    use crate::Elem;

    fn ring(n: u32) -> Ring {
        VariableSet::new((1..=n).map(Elem::Atom).collect()).unwrap()
    }

    fn x(r: &Ring, i: u32) -> Polynomial {
        Polynomial::var(r, Elem::Atom(i)).unwrap()
    }

    #[test]
    fn differences_in_three_variables() {
        let r = ring(3);
        let gb = buchberger(&r, &[&x(&r, 1) - &x(&r, 2), &x(&r, 2) - &x(&r, 3)]).unwrap();
        assert_eq!(gb.basis(), &[&x(&r, 2) - &x(&r, 3), &x(&r, 1) - &x(&r, 3)]);
        assert!(gb.is_groebner());
    }

    #[test]
    fn trivial_ideals() {
        let r = ring(2);
        assert!(buchberger(&r, &[]).unwrap().is_empty());
        assert!(buchberger(&r, &[Polynomial::zero(&r)]).unwrap().is_empty());
        let unit = buchberger(&r, &[Polynomial::one(&r)]).unwrap();
        assert!(unit.is_unit());
        // x1 and x1 + 1 generate the unit ideal
        let u = buchberger(&r, &[x(&r, 1), &x(&r, 1) + &Polynomial::one(&r)]).unwrap();
        assert!(u.is_unit());
    }

    #[test]
    fn membership_examples() {
        let r = ring(3);
        let g = &x(&r, 1) - &x(&r, 2);
        let gb = buchberger(&r, &[g.clone()]).unwrap();
        assert!(gb.member(&g).unwrap());
        let f = &(&x(&r, 1) * &x(&r, 3)) - &(&x(&r, 3) * &x(&r, 2));
        assert!(gb.member(&f).unwrap());
        let red = gb.reduce(&f).unwrap();
        assert_eq!(red.quotients[0], x(&r, 3));
        let gb2 = buchberger(&r, &[&x(&r, 1) * &x(&r, 2)]).unwrap();
        assert!(!gb2.member(&x(&r, 1)).unwrap());
        assert_eq!(gb2.member(&x(&ring(2), 1)), Err(Error::RingMismatch));
    }

    #[test]
    fn reduced_basis_is_canonical() {
        let r = ring(3);
        let a = buchberger(&r, &[&x(&r, 1) - &x(&r, 2), &x(&r, 2) - &x(&r, 3)]).unwrap();
        let b = buchberger(
            &r,
            &[
                &x(&r, 1) - &x(&r, 3),
                &x(&r, 3) - &x(&r, 2),
                (&x(&r, 1) - &x(&r, 2)).scale(&num_rational::BigRational::from_integer(7.into())),
            ],
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn nonlinear_example() {
        // x1^2 - x2, x1*x2 - x3 (twisted cubic style)
        let r = ring(3);
        let f1 = &x(&r, 1).pow(2) - &x(&r, 2);
        let f2 = &(&x(&r, 1) * &x(&r, 2)) - &x(&r, 3);
        let gb = buchberger(&r, &[f1.clone(), f2.clone()]).unwrap();
        assert!(gb.is_groebner());
        assert!(gb.member(&f1).unwrap() && gb.member(&f2).unwrap());
        // x2^2 - x1*x3 = x2*(x2 - x1^2) + x1*(x1*x2 - x3)
        let g = &x(&r, 2).pow(2) - &(&x(&r, 1) * &x(&r, 3));
        assert!(gb.member(&g).unwrap());
        assert!(!gb.member(&x(&r, 3)).unwrap());
    }
}
