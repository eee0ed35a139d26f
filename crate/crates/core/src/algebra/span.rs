use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::poly::Polynomial;
use super::ring::{same_ring, Monomial};
use super::Coeff;
use crate::error::{Error, Result};

/// Result of a linear-span membership test.
#[derive(Debug, Clone)]
pub struct SpanCertificate {
    pub member: bool,
    /// Dimension of the span of the generators.
    pub rank: usize,
    /// When `member`: `f = sum coefficients[k].1 * gens[coefficients[k].0]`.
    pub coefficients: Vec<(usize, Coeff)>,
    /// When not `member`: leading monomial of the residue of `f` after
    /// elimination, which no element of the span can cancel. The rank of
    /// `gens + [f]` is then `rank + 1`.
    pub residual_leading: Option<Monomial>,
}

struct Pivot {
    poly: Polynomial,
    combo: BTreeMap<usize, Coeff>,
}

fn sub_combo(target: &mut BTreeMap<usize, Coeff>, c: &Coeff, src: &BTreeMap<usize, Coeff>) {
    for (i, x) in src {
        let e = target.entry(*i).or_insert_with(Coeff::zero);
        *e -= c * x;
        if e.is_zero() {
            target.remove(i);
        }
    }
}

/// Decides whether `f` lies in the rational span of `gens`, all homogeneous
/// of the degree of `f`.
///
/// Gaussian elimination over the monomial basis with lex-leading pivots. When
/// an ideal is generated in a single degree `d`, its degree-`d` piece is this
/// span, so this decides degree-`d` membership without a Groebner basis.
pub fn graded_span_member(f: &Polynomial, gens: &[Polynomial]) -> Result<SpanCertificate> {
    let mut degree = f.degree();
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    for g in gens {
        if !same_ring(g.ring(), f.ring()) {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            continue;
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        match degree {
            None => degree = g.degree(),
            Some(_) if degree != g.degree() => return Err(Error::NotHomogeneous),
            _ => {}
        }
    }

    let mut pivots: BTreeMap<Monomial, Pivot> = BTreeMap::new();
    for (i, g) in gens.iter().enumerate() {
        let mut p = g.clone();
        let mut combo = BTreeMap::from([(i, Coeff::one())]);
        eliminate(&mut p, &mut combo, &pivots);
        if let Some((m, c)) = p.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            let inv = c.recip();
            let combo = combo.into_iter().map(|(k, x)| (k, x * &inv)).collect();
            pivots.insert(m, Pivot { poly: p.scale(&inv), combo });
        }
    }

    let mut p = f.clone();
    let mut combo = BTreeMap::new();
    eliminate(&mut p, &mut combo, &pivots);
    let rank = pivots.len();
    if p.is_zero() {
        // f - sum(c * pivot) = 0 was tracked as combo = -(coefficients)
        let coefficients = combo.into_iter().map(|(k, x)| (k, -x)).collect();
        Ok(SpanCertificate {
            member: true,
            rank,
            coefficients,
            residual_leading: None,
        })
    } else {
        Ok(SpanCertificate {
            member: false,
            rank,
            coefficients: Vec::new(),
            residual_leading: p.leading_monomial().cloned(),
        })
    }
}

/// Cancels leading terms of `p` against pivots until the leading monomial is
/// not a pivot. `combo` tracks `p` as `p_orig + sum combo[i] * gens[i]`.
fn eliminate(p: &mut Polynomial, combo: &mut BTreeMap<usize, Coeff>, pivots: &BTreeMap<Monomial, Pivot>) {
    loop {
        let Some((m, c)) = p.leading_term().map(|(m, c)| (m.clone(), c.clone())) else {
            return;
        };
        let Some(pivot) = pivots.get(&m) else {
            return;
        };
        p.sub_mul_term(&c, &Monomial::one(m.0.len()), &pivot.poly);
        sub_combo(combo, &c, &pivot.combo);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{discriminant, Ring, VariableSet};
    use crate::Elem;

    fn ring(n: u32) -> Ring {
        VariableSet::new((1..=n).map(Elem::Atom).collect()).unwrap()
    }

    fn x(r: &Ring, i: u32) -> Polynomial {
        Polynomial::var(r, Elem::Atom(i)).unwrap()
    }

    fn q(v: i64) -> Coeff {
        Coeff::from_integer(v.into())
    }

    #[test]
    fn generator_and_combination() {
        let r = ring(4);
        let g1 = discriminant(&r, &[1, 2, 3].map(Elem::Atom)).unwrap();
        let g2 = discriminant(&r, &[2, 3, 4].map(Elem::Atom)).unwrap();
        let gens = vec![g1.clone(), g2.clone()];
        assert!(graded_span_member(&g1, &gens).unwrap().member);
        let f = &g1.scale(&q(2)) + &g2.scale(&q(3));
        let cert = graded_span_member(&f, &gens).unwrap();
        assert!(cert.member);
        assert_eq!(cert.rank, 2);
        let rebuilt = cert
            .coefficients
            .iter()
            .fold(Polynomial::zero(&r), |acc, (i, c)| &acc + &gens[*i].scale(c));
        assert_eq!(rebuilt, f);
    }

    #[test]
    fn non_member_has_residual() {
        let r = ring(4);
        let gens = vec![&x(&r, 1) * &x(&r, 2), &x(&r, 3) * &x(&r, 4)];
        let f = &x(&r, 1) * &x(&r, 3);
        let cert = graded_span_member(&f, &gens).unwrap();
        assert!(!cert.member);
        assert_eq!(cert.residual_leading, Some(Monomial(vec![1, 0, 1, 0])));
    }

    #[test]
    fn degree_checks() {
        let r = ring(2);
        let f = &x(&r, 1) + &x(&r, 2).pow(2);
        assert_eq!(graded_span_member(&f, &[]).unwrap_err(), Error::NotHomogeneous);
        let g = x(&r, 1);
        let h = x(&r, 1).pow(2);
        assert_eq!(graded_span_member(&g, &[h]).unwrap_err(), Error::NotHomogeneous);
        assert!(graded_span_member(&Polynomial::zero(&r), &[g.clone()]).unwrap().member);
    }

    #[test]
    fn dependent_generators_do_not_raise_rank() {
        let r = ring(3);
        let a = &x(&r, 1) - &x(&r, 2);
        let b = &x(&r, 2) - &x(&r, 3);
        let c = &a + &b;
        let cert = graded_span_member(&(&x(&r, 1) - &x(&r, 3)), &[a, b, c]).unwrap();
        assert!(cert.member);
        assert_eq!(cert.rank, 2);
    }
}
