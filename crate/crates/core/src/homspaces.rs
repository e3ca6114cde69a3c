//! Degree-zero graded homomorphisms `I → (S/J)(twist)` and Hilbert-scheme
//! tangent dimensions.
//!
//! A homomorphism is determined by the images `φ(g_i)` of the chosen
//! generators, written in the standard-monomial basis of `(S/J)` in degree
//! `deg g_i + twist`. It is well defined iff every syzygy `s` of the `g_i`
//! satisfies `Σ s_i φ(g_i) ≡ 0 mod J`. In relative mode each generator `f`
//! of `I_X` is also sent to zero, with `f` expressed through the `g_i`
//! by Gröbner cofactors.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::groebner::{syzygy_basis, GroebnerBasis};
use crate::ideal::Ideal;
use crate::linalg::Echelon;
use crate::par;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational};

struct Target {
    gb: std::sync::Arc<GroebnerBasis>,
    nvars: usize,
}

impl Target {
    fn standard_monomials(&self, d: i64) -> Vec<Monomial> {
        if d < 0 {
            return Vec::new();
        }
        let leads = self.gb.leading_monomials();
        Monomial::all_of_degree(self.nvars, d as u32)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect()
    }
}

struct Unknowns {
    /// Per generator: offset of its block and the basis monomials.
    blocks: Vec<(usize, Vec<Monomial>)>,
    total: usize,
}

/// Adds the row `Σ_i Σ_k coeff(NF(a_i · b_{ik}), m) u_{ik}` for every
/// standard monomial `m`.
fn constraint_rows(combo: &[Polynomial], unknowns: &Unknowns, target: &Target) -> Vec<Vec<(usize, Rational)>> {
    let mut rows: HashMap<Monomial, BTreeMap<usize, Rational>> = HashMap::new();
    for (a, (offset, basis)) in combo.iter().zip(&unknowns.blocks) {
        if a.is_zero() {
            continue;
        }
        for (k, b) in basis.iter().enumerate() {
            let nf = target.gb.normal_form(&a.mul_term(b, &Rational::from_integer(1.into())));
            for (m, c) in nf.terms() {
                let slot = rows.entry(m.clone()).or_default().entry(offset + k).or_default();
                *slot += c;
            }
        }
    }
    let mut keys: Vec<Monomial> = rows.keys().cloned().collect();
    keys.sort();
    keys.into_iter()
        .map(|m| {
            rows.remove(&m)
                .unwrap()
                .into_iter()
                .filter(|(_, c)| c != &Rational::from_integer(0.into()))
                .collect()
        })
        .collect()
}

/// Splits a vector of polynomials paired with generator degrees into its
/// homogeneous pieces `{D: (s_i of degree D − deg g_i)}`.
fn homogeneous_pieces(col: &[Polynomial], degrees: &[u32]) -> Vec<Vec<Polynomial>> {
    let mut by_degree: BTreeMap<u32, Vec<Polynomial>> = BTreeMap::new();
    let ctx = col[0].context().clone();
    for (i, s) in col.iter().enumerate() {
        for (d, piece) in s.homogeneous_components() {
            by_degree
                .entry(d + degrees[i])
                .or_insert_with(|| vec![Polynomial::zero(&ctx); col.len()])[i] = piece;
        }
    }
    by_degree.into_values().collect()
}

struct HomProblem<'a> {
    source: &'a Ideal,
    gens: Vec<Polynomial>,
    degrees: Vec<u32>,
    target: Target,
    unknowns: Unknowns,
}

impl<'a> HomProblem<'a> {
    fn new(source: &'a Ideal, j: &Ideal, twist: i64) -> Result<Option<Self>> {
        if source.context() != j.context() {
            return Err(Error::ContextMismatch);
        }
        let gens = source.generators().to_vec();
        if gens.iter().any(|g| !g.is_homogeneous()) || !j.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if j.is_unit() {
            return Ok(None);
        }
        let degrees: Vec<u32> = gens.iter().map(|g| g.total_degree().unwrap_or(0)).collect();
        let target = Target {
            gb: j.gb(&MonomialOrder::GrevLex),
            nvars: j.context().nvars(),
        };
        let mut blocks = Vec::with_capacity(gens.len());
        let mut total = 0;
        for &d in &degrees {
            let basis = target.standard_monomials(d as i64 + twist);
            blocks.push((total, basis.clone()));
            total += basis.len();
        }
        Ok(Some(HomProblem {
            source,
            gens,
            degrees,
            target,
            unknowns: Unknowns { blocks, total },
        }))
    }

    fn syzygy_rows(&self) -> Vec<Vec<(usize, Rational)>> {
        if self.gens.is_empty() {
            return Vec::new();
        }
        let syz = syzygy_basis(self.source.context(), &self.gens, &MonomialOrder::GrevLex);
        let pieces: Vec<Vec<Polynomial>> = syz
            .columns
            .iter()
            .flat_map(|c| homogeneous_pieces(c, &self.degrees))
            .collect();
        par::map(&pieces, |p| constraint_rows(p, &self.unknowns, &self.target))
            .into_iter()
            .flatten()
            .collect()
    }

    fn relative_rows(&self, ix: &Ideal, order: &MonomialOrder) -> Result<Vec<Vec<(usize, Rational)>>> {
        let gb = GroebnerBasis::compute(self.source.context(), &self.gens, order, true);
        let mut combos = Vec::new();
        for f in ix.generators() {
            let lifted = gb.lift(f).ok_or(Error::NotContained)?;
            let fd = f.total_degree().unwrap_or(0);
            // only the component of matching degree contributes in degree zero
            let combo: Vec<Polynomial> = lifted
                .iter()
                .zip(&self.degrees)
                .map(|(a, &d)| {
                    if fd >= d {
                        a.component_of_degree(fd - d)
                    } else {
                        Polynomial::zero(f.context())
                    }
                })
                .collect();
            combos.push(combo);
        }
        Ok(par::map(&combos, |c| constraint_rows(c, &self.unknowns, &self.target))
            .into_iter()
            .flatten()
            .collect())
    }

    fn solve(&self, rows: &[Vec<(usize, Rational)>]) -> usize {
        let mut ech = Echelon::new();
        for r in rows {
            ech.insert(r);
        }
        self.unknowns.total - ech.rank()
    }
}

/// `dim Hom_S(I, (S/J)(twist))_0`, using the given generators of `I`.
pub fn graded_hom_dimension(i: &Ideal, j: &Ideal, twist: i64) -> Result<usize> {
    let Some(p) = HomProblem::new(i, j, twist)? else {
        return Ok(0);
    };
    Ok(p.solve(&p.syzygy_rows()))
}

/// As [`graded_hom_dimension`], with `φ(I_X) = 0` imposed. Generators of
/// `I_X` are expressed through those of `I` by cofactors of a Gröbner basis
/// for `expression_order`.
pub fn graded_hom_dimension_relative(
    i: &Ideal,
    j: &Ideal,
    twist: i64,
    ix: &Ideal,
    expression_order: &MonomialOrder,
) -> Result<usize> {
    if ix.context() != i.context() {
        return Err(Error::ContextMismatch);
    }
    if !i.contains_ideal(ix) {
        return Err(Error::NotContained);
    }
    let Some(p) = HomProblem::new(i, j, twist)? else {
        return Ok(0);
    };
    let mut rows = p.syzygy_rows();
    rows.extend(p.relative_rows(ix, expression_order)?);
    Ok(p.solve(&rows))
}

/// Tangent space dimension to the Hilbert scheme at `[C]`: `Hom(I_C, S/I_C)_0`
/// in the ambient projective space, or `Hom(I_{C/X}, O_C)` when `I_X` is
/// given.
pub fn tangent_dimension(ic: &Ideal, relative_to: Option<&Ideal>) -> Result<usize> {
    match relative_to {
        None => graded_hom_dimension(ic, ic, 0),
        Some(ix) => graded_hom_dimension_relative(ic, ic, 0, ix, &MonomialOrder::GrevLex),
    }
}

/// Ambient and (optionally) relative tangent dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TangentDimensions {
    pub ambient: usize,
    pub relative: Option<usize>,
}

pub fn tangent_dimensions(ic: &Ideal, relative_to: Option<&Ideal>) -> Result<TangentDimensions> {
    Ok(TangentDimensions {
        ambient: tangent_dimension(ic, None)?,
        relative: relative_to.map(|ix| tangent_dimension(ic, Some(ix))).transpose()?,
    })
}
