//! Torus-fixed curves of degree one to three.

use std::collections::BTreeMap;
use std::fmt;

use super::model::Dp5Model;
use super::tables::{FIXED_CONICS, FIXED_CUBICS, FIXED_LINES, V5_LABELS};
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_function, hilbert_polynomial, HilbertPolynomial};
use crate::homspaces::{tangent_dimensions, TangentDimensions};
use crate::ideal::Ideal;
use crate::par;
use crate::poly::{Polynomial, RingContext, RingMap};

/// A torus-fixed curve on `X5` with its invariants.
#[derive(Clone, Debug)]
pub struct FixedCurveRecord {
    pub degree: u32,
    /// Saturated ideal in orbit coordinates.
    pub ideal: Ideal,
    /// Configuration label copied from the printed tables (informational).
    pub label: String,
    /// How the curve was produced.
    pub provenance: String,
    pub hilbert: HilbertPolynomial,
    pub tangent: Option<TangentDimensions>,
}

impl FixedCurveRecord {
    pub(crate) fn new(degree: u32, ideal: Ideal, provenance: String) -> Result<FixedCurveRecord> {
        let hilbert = hilbert_polynomial(&ideal)?;
        Ok(FixedCurveRecord {
            degree,
            ideal,
            label: String::new(),
            provenance,
            hilbert,
            tangent: None,
        })
    }

    /// Fills in ambient and relative (to `X5`) tangent dimensions.
    pub fn compute_tangent(&mut self, model: &Dp5Model) -> Result<()> {
        let gens = Ideal::new(model.orbit_ctx(), self.ideal.reduced_generators())?;
        self.tangent = Some(tangent_dimensions(&gens, Some(&model.x5))?);
        Ok(())
    }

    /// Contains `I_{X5}`, is torus-fixed and has Hilbert polynomial `dm + 1`.
    pub fn invariant_failures(&self, model: &Dp5Model) -> Vec<String> {
        let mut out = Vec::new();
        if !self.ideal.contains_ideal(&model.x5) {
            out.push("does not contain the X5 quadrics".into());
        }
        if !self.ideal.is_fixed().unwrap_or(false) {
            out.push("not weighted-homogeneous".into());
        }
        if self.hilbert != HilbertPolynomial::linear(self.degree as i64, 1) {
            out.push(format!("Hilbert polynomial {}", self.hilbert));
        }
        out
    }
}

impl fmt::Display for FixedCurveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "degree {} [{}] {} HP {}",
            self.degree, self.provenance, self.ideal, self.hilbert
        )?;
        if !self.label.is_empty() {
            write!(f, " ({})", self.label)?;
        }
        if let Some(t) = &self.tangent {
            write!(f, " tangent ambient {}", t.ambient)?;
            if let Some(r) = t.relative {
                write!(f, " relative {r}")?;
            }
        }
        Ok(())
    }
}

impl Dp5Model {
    pub fn orbit_ctx(&self) -> &RingContext {
        &self.orbit
    }

    /// `sat(I_{X5} + images of the vanishing Plücker coordinates)`.
    pub(crate) fn section_by_plucker(&self, vanishing: &[Polynomial]) -> Result<Ideal> {
        let images = vanishing
            .iter()
            .map(|p| self.coordinate_change.apply(p))
            .collect::<Result<Vec<_>>>()?;
        self.x5.add_generators(&images)?.saturate_irrelevant()
    }
}

/// Fixed points of `Gr(2, V)` for a diagonal torus action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannFixedPoints {
    /// Coordinate points `e_i ∧ e_j` as index pairs.
    pub pairs: Vec<(usize, usize)>,
    /// Multiplicity of each weight of `∧²V`.
    pub pair_weights: BTreeMap<i64, usize>,
    pub isolated: bool,
}

/// Candidate fixed points `e_i ∧ e_j` and the isolation criterion: weights
/// of `V` distinct and no weight of `∧²V` repeated more than twice.
pub fn torus_fixed_grassmannian(weights: &[i64], k: usize) -> Result<GrassmannFixedPoints> {
    if k != 2 {
        return Err(Error::Invalid(format!("only k = 2 is supported, got {k}")));
    }
    if weights.is_empty() {
        return Err(Error::Invalid("empty weight multiset".into()));
    }
    let mut pairs = Vec::new();
    let mut pair_weights = BTreeMap::new();
    for i in 0..weights.len() {
        for j in i + 1..weights.len() {
            pairs.push((i, j));
            *pair_weights.entry(weights[i] + weights[j]).or_insert(0) += 1;
        }
    }
    let mut sorted = weights.to_vec();
    sorted.sort();
    sorted.dedup();
    let distinct = sorted.len() == weights.len();
    let isolated = distinct && pair_weights.values().all(|&m| m <= 2);
    Ok(GrassmannFixedPoints {
        pairs,
        pair_weights,
        isolated,
    })
}

/// Fixed lines by search over pencils `e_i ∧ (u·e_s + v·e_t)`: a pencil lies
/// on `X5` iff the three linear forms vanish identically in `u, v`.
pub fn fixed_lines(model: &Dp5Model) -> Result<Vec<FixedCurveRecord>> {
    let uv = RingContext::new(&["u", "v"])?;
    let u = Polynomial::var(&uv, 0);
    let v = Polynomial::var(&uv, 1);
    let mut families = Vec::new();
    for i in 0..5 {
        for s in 0..5 {
            for t in s + 1..5 {
                if s == i || t == i {
                    continue;
                }
                // Plücker coordinates of the pencil
                let mut images: Vec<(String, Polynomial)> = Vec::new();
                let mut vanishing = Vec::new();
                for x in 0..5 {
                    for y in x + 1..5 {
                        let name = super::model::plucker_name(x, y);
                        let coord = model.plucker_coordinate(x, y);
                        let value = if (x, y) == (i.min(s), i.max(s)) {
                            if i < s {
                                u.clone()
                            } else {
                                -&u
                            }
                        } else if (x, y) == (i.min(t), i.max(t)) {
                            if i < t {
                                v.clone()
                            } else {
                                -&v
                            }
                        } else {
                            vanishing.push(coord);
                            Polynomial::zero(&uv)
                        };
                        images.push((name, value));
                    }
                }
                let map = RingMap::new(&model.plucker, &uv, images.iter().map(|(n, p)| (n.as_str(), p.clone())))?;
                let on_x5 = model
                    .linear_forms
                    .iter()
                    .map(|f| map.apply(f))
                    .collect::<Result<Vec<_>>>()?
                    .iter()
                    .all(|p| p.is_zero());
                if on_x5 {
                    let name = format!("e{}^(u*e{} + v*e{})", V5_LABELS[i], V5_LABELS[s], V5_LABELS[t]);
                    families.push((name, vanishing));
                }
            }
        }
    }
    let built = par::map(&families, |(name, vanishing)| -> Result<FixedCurveRecord> {
        let ideal = model.section_by_plucker(vanishing)?;
        let mut rec = FixedCurveRecord::new(1, ideal, name.clone())?;
        for (label, gens) in FIXED_LINES.iter() {
            if rec.ideal == model.orbit_ideal(gens)? {
                rec.label = label.to_string();
            }
        }
        Ok(rec)
    });
    built.into_iter().collect()
}

/// Fixed conics `Gr(2, W) ∩ P` for the five coordinate hyperplanes `W`.
pub fn fixed_conics(model: &Dp5Model) -> Result<Vec<FixedCurveRecord>> {
    let omitted: Vec<usize> = (0..5).collect();
    let built = par::map(&omitted, |&k| -> Result<FixedCurveRecord> {
        let vanishing: Vec<Polynomial> = (0..5)
            .filter(|&j| j != k)
            .map(|j| model.plucker_coordinate(k.min(j), k.max(j)))
            .collect();
        let ideal = model.section_by_plucker(&vanishing)?;
        let mut rec = FixedCurveRecord::new(2, ideal, format!("W{} (e{} omitted)", V5_LABELS[k], V5_LABELS[k]))?;
        rec.label = FIXED_CONICS[k].0.to_string();
        Ok(rec)
    });
    built.into_iter().collect()
}

/// Generators of the Schubert variety of lines meeting `⟨e_a, e_b⟩`: the
/// 2×2 minors of the `2×3` matrix `p(a|b, ·)` on the complement plus the
/// Plücker coordinates supported on the complement.
pub fn schubert_generators(model: &Dp5Model, a: usize, b: usize) -> Vec<Polynomial> {
    let comp: Vec<usize> = (0..5).filter(|&k| k != a && k != b).collect();
    let mut gens = Vec::new();
    for k in 0..3 {
        for l in k + 1..3 {
            let m = &(&model.plucker_coordinate(a, comp[k]) * &model.plucker_coordinate(b, comp[l]))
                - &(&model.plucker_coordinate(a, comp[l]) * &model.plucker_coordinate(b, comp[k]));
            gens.push(m);
        }
    }
    for k in 0..3 {
        for l in k + 1..3 {
            gens.push(model.plucker_coordinate(comp[k], comp[l]));
        }
    }
    gens
}

/// Fixed twisted cubics from the Schubert construction over the ten
/// coordinate lines of `P(V5)`.
pub fn fixed_cubics(model: &Dp5Model) -> Result<Vec<FixedCurveRecord>> {
    let mut lines = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            lines.push((a, b));
        }
    }
    let built = par::map(&lines, |&(a, b)| -> Result<FixedCurveRecord> {
        let ideal = model.section_by_plucker(&schubert_generators(model, a, b))?;
        let mut rec = FixedCurveRecord::new(3, ideal, format!("<e{}, e{}>", V5_LABELS[a], V5_LABELS[b]))?;
        if let Some(row) = FIXED_CUBICS.iter().find(|r| r.line == (a, b)) {
            rec.label = row.label.to_string();
        }
        Ok(rec)
    });
    built.into_iter().collect()
}

/// Fixed curves of degree 1, 2 or 3 (degree 4 lives in the residual module).
pub fn fixed_curves(model: &Dp5Model, d: u32) -> Result<Vec<FixedCurveRecord>> {
    match d {
        1 => fixed_lines(model),
        2 => fixed_conics(model),
        3 => fixed_cubics(model),
        _ => Err(Error::Invalid(format!("fixed_curves supports degrees 1 to 3, got {d}"))),
    }
}

/// Projective dimension of the linear span: `HF(1) − 1`.
pub fn linear_span_dim(i: &Ideal) -> Result<i64> {
    Ok(hilbert_function(i, 1)? as i64 - 1)
}

/// `dim (I)_1`, the number of independent linear forms in the ideal.
pub fn linear_forms_in(i: &Ideal) -> Result<u64> {
    Ok(i.context().nvars() as u64 - hilbert_function(i, 1)?)
}
