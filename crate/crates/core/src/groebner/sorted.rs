use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, RingContext};

/// Working representation: terms sorted from largest to smallest under a
/// fixed order.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct SortedPoly {
    pub terms: Vec<(Monomial, Rational)>,
}

impl SortedPoly {
    #[allow(dead_code)]
    pub fn zero() -> Self {
        SortedPoly { terms: Vec::new() }
    }

    pub fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, Rational)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        SortedPoly { terms }
    }

    pub fn to_poly(&self, ctx: &RingContext) -> Polynomial {
        Polynomial::from_terms(ctx, self.terms.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn scale(&mut self, c: &Rational) {
        for t in &mut self.terms {
            t.1 = &t.1 * c;
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> SortedPoly {
        SortedPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    /// `a * self - b * m * other`, merged in order.
    pub fn combine(
        &self,
        a: &Rational,
        b: &Rational,
        m: &Monomial,
        other: &SortedPoly,
        order: &MonomialOrder,
    ) -> SortedPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let a_is_one = a.is_one();
        let mut i = 0;
        let mut j = 0;
        let shifted: Vec<Monomial> = other.terms.iter().map(|(k, _)| k.mul(m)).collect();
        while i < self.terms.len() || j < other.terms.len() {
            let ord = if i == self.terms.len() {
                Ordering::Less
            } else if j == other.terms.len() {
                Ordering::Greater
            } else {
                order.cmp(&self.terms[i].0, &shifted[j])
            };
            match ord {
                Ordering::Greater => {
                    let (mono, c) = &self.terms[i];
                    let v = if a_is_one { c.clone() } else { c * a };
                    out.push((mono.clone(), v));
                    i += 1;
                }
                Ordering::Less => {
                    let v = -(&other.terms[j].1 * b);
                    out.push((shifted[j].clone(), v));
                    j += 1;
                }
                Ordering::Equal => {
                    let left = if a_is_one {
                        self.terms[i].1.clone()
                    } else {
                        &self.terms[i].1 * a
                    };
                    let v = left - &other.terms[j].1 * b;
                    if !v.is_zero() {
                        out.push((shifted[j].clone(), v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SortedPoly { terms: out }
    }
}

/// `a / g` and `b / g` for `g = gcd(a, b)` when both are integers, so that
/// an elimination step stays integral. Falls back to `(1, b / a)`.
pub(crate) fn cancel_pair(lead_divisor: &Rational, coeff: &Rational) -> (Rational, Rational) {
    use num_integer::Integer;
    if lead_divisor.is_integer() && coeff.is_integer() {
        let x = lead_divisor.numer();
        let y = coeff.numer();
        let g = x.gcd(y);
        (Rational::from_integer(x / &g), Rational::from_integer(y / &g))
    } else {
        (Rational::one(), coeff / lead_divisor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combine_cancels_leading_terms() {
        let r = RingContext::new(&["x", "y"]).unwrap();
        let o = MonomialOrder::GrevLex;
        let p = SortedPoly::from_poly(&Polynomial::parse(&r, "2*x^2 + y").unwrap(), &o);
        let g = SortedPoly::from_poly(&Polynomial::parse(&r, "3*x - y").unwrap(), &o);
        let (a, b) = cancel_pair(&g.terms[0].1, &p.terms[0].1);
        let m = Monomial::from_exponents(&[1, 0]);
        let out = p.combine(&a, &b, &m, &g, &o).to_poly(&r);
        assert_eq!(out.to_string(), "2*x*y + 3*y");
    }
}
