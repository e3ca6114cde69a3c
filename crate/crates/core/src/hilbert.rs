//! Hilbert functions, series and polynomials of homogeneous ideals.
//!
//! Everything is read off the grevlex lead-term ideal, except
//! [`hilbert_function_linear`] which works directly on coefficient matrices
//! and serves as an independent cross-check.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg::Echelon;
use crate::poly::{fmt_rational, Monomial, MonomialOrder, Polynomial, Rational};

/// Integer polynomial in `t`, ascending coefficients.
pub type SeriesNumerator = Vec<i64>;

fn trim(mut p: SeriesNumerator) -> SeriesNumerator {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn mul(a: &[i64], b: &[i64]) -> SeriesNumerator {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn add_shifted(a: &mut SeriesNumerator, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
    let t = trim(std::mem::take(a));
    *a = t;
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> SeriesNumerator {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let mut count = vec![0usize; nvars];
    for g in &gens {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                count[i] += 1;
            }
        }
    }
    if count.iter().all(|&c| c <= 1) {
        // pairwise coprime generators form a regular sequence
        return gens.iter().fold(vec![1], |acc, g| {
            let mut f = vec![0; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] = -1;
            mul(&acc, &f)
        });
    }
    let pivot = (0..nvars).max_by_key(|&i| (count[i], std::cmp::Reverse(i))).unwrap();
    let x = Monomial::var(nvars, pivot);
    // M + <x>
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exponent(pivot) == 0).cloned().collect();
    plus.push(x.clone());
    // M : x
    let colon: Vec<Monomial> = gens.iter().map(|g| g.div(&x).unwrap_or_else(|| g.clone())).collect();
    let mut n = numerator_rec(plus, nvars);
    add_shifted(&mut n, &numerator_rec(colon, nvars), 1);
    n
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 − t)^n` of `S/M` for
/// the monomial ideal generated by `gens` in `nvars` variables.
pub fn series_numerator_of_monomials(gens: &[Monomial], nvars: usize) -> SeriesNumerator {
    numerator_rec(gens.to_vec(), nvars)
}

/// Numerator of the Hilbert series of `S/M`; every generator of `M` must be
/// a monomial.
pub fn hilbert_series_numerator(m: &Ideal) -> Result<SeriesNumerator> {
    let mut monos = Vec::new();
    for g in m.generators() {
        if !g.is_monomial() {
            return Err(Error::NotMonomial(g.to_string()));
        }
        monos.push(g.terms().next().unwrap().0.clone());
    }
    Ok(series_numerator_of_monomials(&monos, m.context().nvars()))
}

fn require_homogeneous(i: &Ideal) -> Result<()> {
    if !i.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(())
}

fn lead_ideal(i: &Ideal) -> Vec<Monomial> {
    i.gb(&MonomialOrder::GrevLex).leading_monomials().to_vec()
}

/// Numerator of the Hilbert series of `S/I` for homogeneous `I`.
pub fn ideal_series_numerator(i: &Ideal) -> Result<SeriesNumerator> {
    require_homogeneous(i)?;
    Ok(series_numerator_of_monomials(&lead_ideal(i), i.context().nvars()))
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut r: i64 = 1;
    for j in 0..k {
        r = r * (n - j) / (j + 1);
    }
    r
}

/// Coefficient of `t^d` in `N(t) / (1 − t)^n`.
pub fn series_coefficient(num: &[i64], n: usize, d: u32) -> i64 {
    num.iter()
        .enumerate()
        .filter(|(k, _)| *k as u32 <= d)
        .map(|(k, c)| {
            let m = d as i64 - k as i64;
            if n == 0 {
                if m == 0 {
                    *c
                } else {
                    0
                }
            } else {
                c * binomial(m + n as i64 - 1, n as i64 - 1)
            }
        })
        .sum()
}

/// `dim_k (S/I)_d`: the number of degree-`d` monomials outside the grevlex
/// lead-term ideal.
pub fn hilbert_function(i: &Ideal, d: u32) -> Result<u64> {
    require_homogeneous(i)?;
    let leads = lead_ideal(i);
    Ok(Monomial::all_of_degree(i.context().nvars(), d)
        .iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .count() as u64)
}

/// Hilbert function values from the series numerator.
pub fn hilbert_function_from_series(i: &Ideal, d: u32) -> Result<u64> {
    let num = ideal_series_numerator(i)?;
    Ok(series_coefficient(&num, i.context().nvars(), d) as u64)
}

/// `dim (S/I)_d` by rank of the span of `{m·g}` in the degree-`d` monomial
/// coordinates, using the given generators only (no Gröbner basis).
pub fn hilbert_function_linear(i: &Ideal, d: u32) -> Result<u64> {
    let n = i.context().nvars();
    let mut comps: Vec<Polynomial> = Vec::new();
    for g in i.generators() {
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        comps.push(g.clone());
    }
    let monos = Monomial::all_of_degree(n, d);
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut ech = Echelon::new();
    for g in &comps {
        let gd = g.total_degree().unwrap_or(0);
        if gd > d {
            continue;
        }
        for m in Monomial::all_of_degree(n, d - gd) {
            let mut row: Vec<(usize, Rational)> = g.terms().map(|(t, c)| (index[&t.mul(&m)], c.clone())).collect();
            row.sort_by_key(|e| e.0);
            ech.insert(&row);
        }
    }
    Ok((monos.len() - ech.rank()) as u64)
}

/// A polynomial in `m` with rational coefficients, ascending powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    pub coeffs: Vec<Rational>,
}

impl HilbertPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    /// `a·m + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        HilbertPolynomial::new(vec![Rational::from_integer(b.into()), Rational::from_integer(a.into())])
    }

    pub fn eval(&self, m: i64) -> Rational {
        let x = Rational::from_integer(m.into());
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * &x + c)
    }

    /// Degree as a polynomial in `m` (the dimension of the projective
    /// scheme); `None` for the zero polynomial.
    pub fn dimension(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Geometric degree: leading coefficient times `dimension!`.
    pub fn leading_degree(&self) -> Option<Rational> {
        let dim = self.dimension()?;
        let fact: i64 = (1..=dim as i64).product();
        Some(self.coeffs[dim].clone() * Rational::from_integer(fact.into()))
    }

    /// `(d, g)` for a curve, where the polynomial is `d·m + 1 − g`.
    pub fn curve_data(&self) -> Option<(i64, i64)> {
        if self.dimension() != Some(1) || !self.coeffs.iter().all(|c| c.is_integer()) {
            return None;
        }
        let d = self.coeffs[1].to_integer().to_i64()?;
        let c = self.coeffs[0].to_integer().to_i64()?;
        Some((d, 1 - c))
    }

    pub fn sub(&self, other: &HilbertPolynomial) -> HilbertPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        HilbertPolynomial::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) - other.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "m".to_string(),
                _ => format!("m^{k}"),
            };
            if k == 0 {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), var)?;
            }
        }
        Ok(())
    }
}

/// Hilbert polynomial from a series numerator over `n` variables.
pub fn polynomial_from_series(num: &[i64], n: usize) -> HilbertPolynomial {
    // strip factors of (1 - t): synthetic division at t = 1
    let mut q: Vec<i64> = num.to_vec();
    let mut dim = n;
    while dim > 0 && !q.is_empty() && q.iter().sum::<i64>() == 0 {
        let mut out = vec![0; q.len() - 1];
        let mut acc = 0;
        for k in 0..out.len() {
            acc += q[k];
            out[k] = acc;
        }
        q = trim(out);
        dim -= 1;
    }
    if dim == 0 || q.is_empty() {
        return HilbertPolynomial::new(Vec::new());
    }
    // Σ_k q_k · C(m − k + dim − 1, dim − 1) as a polynomial in m
    let r = dim - 1;
    let fact: i64 = (1..=r as i64).product();
    let mut total = vec![Rational::zero(); r + 1];
    for (k, &c) in q.iter().enumerate() {
        if c == 0 {
            continue;
        }
        // Π_{i=1}^{r} (m − k + i)
        let mut prod = vec![Rational::one()];
        for i in 1..=r {
            let shift = Rational::from_integer((i as i64 - k as i64).into());
            let mut next = vec![Rational::zero(); prod.len() + 1];
            for (j, p) in prod.iter().enumerate() {
                next[j + 1] += p;
                next[j] += p * &shift;
            }
            prod = next;
        }
        let scale = Rational::new(c.into(), fact.into());
        for (j, p) in prod.iter().enumerate() {
            total[j] += p * &scale;
        }
    }
    HilbertPolynomial::new(total)
}

/// Hilbert polynomial of `S/I` for homogeneous `I`.
pub fn hilbert_polynomial(i: &Ideal) -> Result<HilbertPolynomial> {
    let num = ideal_series_numerator(i)?;
    Ok(polynomial_from_series(&num, i.context().nvars()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RingContext;
    use proptest::prelude::*;

    fn brute_count(gens: &[Monomial], n: usize, d: u32) -> i64 {
        Monomial::all_of_degree(n, d)
            .iter()
            .filter(|m| !gens.iter().any(|g| g.divides(m)))
            .count() as i64
    }

    #[test]
    fn numerator_examples() {
        let r = RingContext::new(&["x", "y"]).unwrap();
        assert_eq!(
            hilbert_series_numerator(&Ideal::from_strs(&r, &["x"]).unwrap()).unwrap(),
            vec![1, -1]
        );
        assert_eq!(hilbert_series_numerator(&Ideal::unit(&r)).unwrap(), Vec::<i64>::new());
        assert_eq!(hilbert_series_numerator(&Ideal::zero(&r)).unwrap(), vec![1]);
        // <x^2, x*y>: 1 - 2t^2 + t^3
        let m = Ideal::from_strs(&r, &["x^2", "x*y"]).unwrap();
        let num = hilbert_series_numerator(&m).unwrap();
        assert_eq!(num, vec![1, 0, -2, 1]);
        let gens = [Monomial::from_exponents(&[2, 0]), Monomial::from_exponents(&[1, 1])];
        for d in 0..=6 {
            assert_eq!(series_coefficient(&num, 2, d), brute_count(&gens, 2, d));
        }
        assert!(matches!(
            hilbert_series_numerator(&Ideal::from_strs(&r, &["x + y"]).unwrap()),
            Err(Error::NotMonomial(_))
        ));
    }

    #[test]
    fn function_examples() {
        let r = RingContext::new(&["x", "y", "z"]).unwrap();
        let zero = Ideal::zero(&r);
        for d in 0..6u32 {
            assert_eq!(hilbert_function(&zero, d).unwrap() as i64, binomial(d as i64 + 2, 2));
        }
        let xx = Ideal::from_strs(&r, &["x^2"]).unwrap();
        assert_eq!(hilbert_function(&xx, 2).unwrap(), 5);
        assert!(matches!(
            hilbert_function(&Ideal::from_strs(&r, &["x^2 - y"]).unwrap(), 1),
            Err(Error::NotHomogeneous)
        ));
    }

    #[test]
    fn polynomial_examples() {
        let r = RingContext::new(&["x", "y", "z"]).unwrap();
        // plane conic
        let hp = hilbert_polynomial(&Ideal::from_strs(&r, &["x^2 + y*z"]).unwrap()).unwrap();
        assert_eq!(hp, HilbertPolynomial::linear(2, 1));
        assert_eq!(hp.to_string(), "2*m + 1");
        assert_eq!(hp.curve_data(), Some((2, 0)));
        // plane cubic has genus one
        let hp = hilbert_polynomial(&Ideal::from_strs(&r, &["x^3 + y^3 + z^3"]).unwrap()).unwrap();
        assert_eq!(hp.curve_data(), Some((3, 1)));
        // two points
        let hp = hilbert_polynomial(&Ideal::from_strs(&r, &["x", "y*z"]).unwrap()).unwrap();
        assert_eq!(hp.to_string(), "2");
        assert_eq!(hilbert_polynomial(&Ideal::unit(&r)).unwrap().to_string(), "0");
        let plane = hilbert_polynomial(&Ideal::zero(&r)).unwrap();
        assert_eq!(plane.to_string(), "1/2*m^2 + 3/2*m + 1");
        assert_eq!(plane.leading_degree(), Some(Rational::one()));
        let twisted = Ideal::from_strs(
            &RingContext::new(&["a", "b", "c", "d"]).unwrap(),
            &["a*c - b^2", "b*d - c^2", "a*d - b*c"],
        )
        .unwrap();
        assert_eq!(hilbert_polynomial(&twisted).unwrap(), HilbertPolynomial::linear(3, 1));
        assert_eq!(HilbertPolynomial::linear(5, 0).to_string(), "5*m");
        assert_eq!(HilbertPolynomial::linear(-1, 3).to_string(), "-m + 3");
    }

    proptest! {
        #[test]
        fn recursion_matches_brute_force(exps in proptest::collection::vec(proptest::collection::vec(0u16..4, 3), 0..5)) {
            let gens: Vec<Monomial> = exps.iter().map(|e| Monomial::from_exponents(e)).collect();
            let num = series_numerator_of_monomials(&gens, 3);
            for d in 0..=8 {
                prop_assert_eq!(series_coefficient(&num, 3, d), brute_count(&gens, 3, d));
            }
        }
    }
}
