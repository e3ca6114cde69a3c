use std::collections::BTreeMap;

use num_traits::Zero;

use super::sorted::SortedPoly;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, RingContext};

/// Result of dividing a polynomial by an ordered list of divisors:
/// `p = Σ quotients[i] · divisors[i] + remainder`.
#[derive(Debug, Clone, PartialEq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Multivariate division. The largest reducible term is always reduced
/// first, by the first divisor (in list order) whose leading monomial
/// divides it, so the outcome is deterministic.
pub fn divide(p: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Division {
    let ctx = p.context().clone();
    let sorted: Vec<SortedPoly> = divisors.iter().map(|d| SortedPoly::from_poly(d, order)).collect();
    let (q, r) = divide_sorted(&SortedPoly::from_poly(p, order), &sorted, order, true);
    Division {
        quotients: q.into_iter().map(|terms| Polynomial::from_terms(&ctx, terms)).collect(),
        remainder: r.to_poly(&ctx),
    }
}

/// Remainder of `p` on division by `divisors` (full reduction).
pub fn reduce(p: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let sorted: Vec<SortedPoly> = divisors.iter().map(|d| SortedPoly::from_poly(d, order)).collect();
    let (_, r) = divide_sorted(&SortedPoly::from_poly(p, order), &sorted, order, false);
    r.to_poly(p.context())
}

pub(crate) fn divide_sorted(
    p: &SortedPoly,
    divisors: &[SortedPoly],
    order: &MonomialOrder,
    track: bool,
) -> (Vec<BTreeMap<Monomial, Rational>>, SortedPoly) {
    let mut quotients: Vec<BTreeMap<Monomial, Rational>> =
        vec![BTreeMap::new(); if track { divisors.len() } else { 0 }];
    let leads: Vec<Option<&(Monomial, Rational)>> = divisors.iter().map(|d| d.lead()).collect();
    let mut cur = p.clone();
    let mut pos = 0;
    let one = Rational::from_integer(1.into());
    while pos < cur.terms.len() {
        let (mono, coeff) = &cur.terms[pos];
        let hit = leads.iter().enumerate().find_map(|(k, lead)| {
            let (lm, lc) = (*lead)?;
            mono.div(lm).map(|q| (k, q, lc))
        });
        match hit {
            None => pos += 1,
            Some((k, shift, lc)) => {
                let b = coeff / lc;
                if track {
                    let slot = quotients[k].entry(shift.clone()).or_insert_with(Rational::zero);
                    *slot += &b;
                    if slot.is_zero() {
                        quotients[k].remove(&shift);
                    }
                }
                cur = cur.combine(&one, &b, &shift, &divisors[k], order);
            }
        }
    }
    (quotients, cur)
}

pub(crate) fn to_polys(ctx: &RingContext, q: Vec<BTreeMap<Monomial, Rational>>) -> Vec<Polynomial> {
    q.into_iter().map(|t| Polynomial::from_terms(ctx, t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_generators;

    #[test]
    fn division_identity_holds() {
        let r = RingContext::new(&["x", "y"]).unwrap();
        let divs = parse_generators(&r, &["x*y - 1", "y^2 - 1"]).unwrap();
        let p = Polynomial::parse(&r, "x^2*y + x*y^2 + y^2").unwrap();
        let order = MonomialOrder::Lex;
        let d = divide(&p, &divs, &order);
        let mut back = d.remainder.clone();
        for (q, g) in d.quotients.iter().zip(&divs) {
            back = &back + &(q * g);
        }
        assert_eq!(back, p);
        // textbook example: remainder x + y + 1
        assert_eq!(d.remainder.to_string(), "x + y + 1");
    }

    #[test]
    fn hand_division_against_reduced_basis() {
        // x^2*y - 1 by {x - y, y^2 - 1} in lex x > y:
        // x^2 y -> x y^2 -> y^3 -> y -> ... y^3 - 1 = y(y^2-1) + y - 1.
        let r = RingContext::new(&["x", "y"]).unwrap();
        let divs = parse_generators(&r, &["x - y", "y^2 - 1"]).unwrap();
        let p = Polynomial::parse(&r, "x^2*y - 1").unwrap();
        let d = divide(&p, &divs, &MonomialOrder::Lex);
        assert_eq!(d.remainder.to_string(), "y - 1");
        assert_eq!(d.quotients[0].to_string(), "x*y + y^2");
        assert_eq!(d.quotients[1].to_string(), "y");
    }
}
