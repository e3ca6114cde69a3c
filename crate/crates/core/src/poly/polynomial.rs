use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Rational, RingContext};
use crate::error::{Error, Result};

/// Sparse polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored. Terms are kept in a canonical
/// (lexicographic exponent) map so equality is structural; use
/// [`Polynomial::terms_in`] to walk them in a chosen term order.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: RingContext,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ctx: &RingContext) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &RingContext) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &RingContext, c: Rational) -> Self {
        Self::monomial(ctx, Monomial::one(ctx.nvars()), c)
    }

    pub fn from_int(ctx: &RingContext, c: i64) -> Self {
        Self::constant(ctx, Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(ctx: &RingContext, i: usize) -> Self {
        Self::monomial(ctx, Monomial::var(ctx.nvars(), i), Rational::one())
    }

    pub fn var_named(ctx: &RingContext, name: &str) -> Result<Self> {
        Ok(Self::var(ctx, ctx.require_index(name)?))
    }

    pub fn monomial(ctx: &RingContext, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.nvars(), ctx.nvars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Sums the given terms, dropping anything that cancels.
    pub fn from_terms(ctx: &RingContext, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ctx.nvars());
            accumulate(&mut map, m, c);
        }
        Polynomial {
            ctx: ctx.clone(),
            terms: map,
        }
    }

    pub fn context(&self) -> &RingContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn terms_in(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Homogeneous in the standard grading (the zero polynomial counts).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Standard-grading components keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Polynomial::zero(&self.ctx))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// Component of standard degree `d` (possibly zero).
    pub fn component_of_degree(&self, d: u32) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn uses_variable(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(i) > 0)
    }

    fn check_ctx(&self, other: &Polynomial) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), -c);
        }
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                accumulate(&mut terms, m1.mul(m2), c1 * c2);
            }
        }
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ctx);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Scales so the leading coefficient under `order` is one.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Moves variable `i` to index `map[i]` of `target`.
    pub fn relabel(&self, target: &RingContext, map: &[usize]) -> Polynomial {
        Polynomial::from_terms(
            target,
            self.terms
                .iter()
                .map(|(m, c)| (m.relabel(target.nvars(), map), c.clone())),
        )
    }

    /// Like [`Polynomial::relabel`], but variables mapped to `None` must not
    /// occur; returns `None` if one does.
    pub fn try_relabel(&self, target: &RingContext, map: &[Option<usize>]) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut out = Monomial::one(target.nvars());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let j = map[i]?;
                out.set_exponent(j, out.exponent(j) + e);
            }
            terms.push((out, c.clone()));
        }
        Some(Polynomial::from_terms(target, terms))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        if divisor.is_zero() || self.ctx != divisor.ctx {
            return None;
        }
        let order = MonomialOrder::GrevLex;
        let (lm, lc) = divisor.leading_term(&order)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rest = self.clone();
        let mut quotient = Polynomial::zero(&self.ctx);
        while let Some((m, c)) = rest.leading_term(&order) {
            let q = m.div(&lm)?;
            let qc = c / &lc;
            rest = &rest - &divisor.mul_term(&q, &qc);
            quotient.terms.insert(q, qc);
        }
        Some(quotient)
    }

    /// Multiplies through by the least common denominator and divides by the
    /// content, giving an integer polynomial with positive leading
    /// coefficient under `order`.
    pub fn primitive(&self, order: &MonomialOrder) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let s = primitive_scale(self.terms.values());
        let mut p = self.scale(&s);
        if self.leading_term(order).map(|(_, c)| c.is_negative()) == Some(true) {
            p = -p;
        }
        p
    }
}

/// The factor turning a list of rationals into coprime integers.
pub(crate) fn primitive_scale<'a>(coeffs: impl Iterator<Item = &'a Rational> + Clone) -> Rational {
    use num_integer::Integer;
    let mut den = BigInt::one();
    for c in coeffs.clone() {
        den = den.lcm(c.denom());
    }
    let mut num = BigInt::zero();
    for c in coeffs {
        let scaled = (c * Rational::from_integer(den.clone())).to_integer();
        num = num.gcd(&scaled);
    }
    if num.is_zero() {
        return Rational::one();
    }
    Rational::new(den, num)
}

fn accumulate(map: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let sum = o.get() + c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomials from different rings")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub(crate) fn fmt_monomial(ctx: &RingContext, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ctx.name(i).to_string()),
            _ => parts.push(format!("{}^{}", ctx.name(i), e)),
        }
    }
    parts.join("*")
}

impl Polynomial {
    /// Renders the polynomial with terms in descending `order`.
    pub fn display_in(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms_in(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&fmt_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&fmt_monomial(&self.ctx, m));
            } else {
                out.push_str(&fmt_rational(&abs));
                out.push('*');
                out.push_str(&fmt_monomial(&self.ctx, m));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in(&MonomialOrder::GrevLex))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> RingContext {
        RingContext::new(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = (&x + &y) * (&x - &y);
        assert_eq!(p, &x * &x - &y * &y);
        assert_eq!(p.to_string(), "x^2 - y^2");
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let r = ring();
        let s = RingContext::new(&["u"]).unwrap();
        let x = Polynomial::var(&r, 0);
        let u = Polynomial::var(&s, 0);
        assert_eq!(x.checked_add(&u), Err(Error::ContextMismatch));
        assert_eq!(x.checked_mul(&u), Err(Error::ContextMismatch));
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = &x + &y;
        let p = &f * &(&x * &y - &y);
        assert_eq!(p.exact_div(&f), Some(&x * &y - &y));
        assert_eq!((&p + &x).exact_div(&f), None);
    }

    #[test]
    fn primitive_clears_denominators() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = x.scale(&Rational::new(2.into(), 3.into())) - y.scale(&Rational::new(4.into(), 9.into()));
        assert_eq!(p.primitive(&MonomialOrder::GrevLex).to_string(), "3*x - 2*y");
        let q = -p;
        assert_eq!(q.primitive(&MonomialOrder::GrevLex).to_string(), "3*x - 2*y");
    }

    #[test]
    fn display_of_rationals_and_constants() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let p = x.scale(&Rational::new(27.into(), 16.into())) - Polynomial::from_int(&r, 3);
        assert_eq!(p.to_string(), "27/16*x - 3");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }
}
