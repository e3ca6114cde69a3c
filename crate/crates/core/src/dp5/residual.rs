//! Residual quartics: `E5 = X5 ∩ H1 ∩ H2` for two hyperplanes through a
//! fixed line `L`, and `C = (E5 : L)`.

use std::collections::HashMap;

use super::fixed::FixedCurveRecord;
use super::model::Dp5Model;
use super::tables::{FIXED_LINES, FIXED_QUARTICS, NORMAL_QUARTIC};
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_polynomial, HilbertPolynomial};
use crate::ideal::Ideal;
use crate::linalg::rank;
use crate::par;
use crate::poly::Polynomial;

/// One residual computation.
#[derive(Clone, Debug)]
pub struct ResidualQuartic {
    /// Index into the fixed lines `l0, l1, l2`.
    pub line: usize,
    /// Positions of the two chosen linear generators of the line ideal.
    pub pick: (usize, usize),
    pub e5: Ideal,
    pub e5_hilbert: HilbertPolynomial,
    pub curve: FixedCurveRecord,
    /// Whether `L` is a component of `C`.
    pub contains_line: bool,
    /// Hilbert polynomial of `C ∩ L` when `L ⊄ C`.
    pub secant: Option<HilbertPolynomial>,
}

impl ResidualQuartic {
    pub fn name(&self) -> String {
        format!("{}:{},{}", FIXED_LINES[self.line].0, self.pick.0, self.pick.1)
    }
}

pub fn line_ideal(model: &Dp5Model, line: usize) -> Result<Ideal> {
    let (_, gens) = FIXED_LINES
        .get(line)
        .ok_or_else(|| Error::Invalid(format!("no fixed line with index {line}")))?;
    model.orbit_ideal(gens)
}

pub fn line_index(name: &str) -> Result<usize> {
    FIXED_LINES
        .iter()
        .position(|(n, _)| *n == name)
        .ok_or_else(|| Error::Invalid(format!("unknown line {name}; expected l0, l1 or l2")))
}

fn linearly_independent(a: &Polynomial, b: &Polynomial) -> bool {
    let mut keys: Vec<_> = a.terms().chain(b.terms()).map(|(m, _)| m.clone()).collect();
    keys.sort();
    keys.dedup();
    let row = |p: &Polynomial| -> Vec<(usize, crate::poly::Rational)> {
        keys.iter()
            .enumerate()
            .filter_map(|(k, m)| {
                let c = p.coefficient(m);
                (c != crate::poly::Rational::from_integer(0.into())).then_some((k, c))
            })
            .collect()
    };
    rank(&[row(a), row(b)]) == 2
}

/// `I_{E5} = sat(I_{X5} + ⟨s1, s2⟩)` and `I_C = sat(I_{E5} : I_L)`.
pub fn residual_quartic(model: &Dp5Model, line: usize, pick: (usize, usize)) -> Result<ResidualQuartic> {
    let l = line_ideal(model, line)?;
    let gens = l.generators();
    let (i, j) = pick;
    if i >= gens.len() || j >= gens.len() || i == j {
        return Err(Error::Invalid(format!(
            "pick must be two distinct indices below {}",
            gens.len()
        )));
    }
    if !linearly_independent(&gens[i], &gens[j]) {
        return Err(Error::Invalid("chosen linear forms are dependent".into()));
    }
    let e5 = model
        .x5
        .add_generators(&[gens[i].clone(), gens[j].clone()])?
        .saturate_irrelevant()?;
    let e5_hilbert = hilbert_polynomial(&e5)?;
    let c = e5.quotient(&l)?.ideal.saturate_irrelevant()?;
    let mut curve = FixedCurveRecord::new(4, c, format!("{} pick {},{}", FIXED_LINES[line].0, i, j))?;
    let contains_line = l.contains_ideal(&curve.ideal);
    let secant = if contains_line {
        None
    } else {
        Some(hilbert_polynomial(&curve.ideal.sum(&l)?)?)
    };
    curve.label = String::new();
    Ok(ResidualQuartic {
        line,
        pick: (i.min(j), i.max(j)),
        e5,
        e5_hilbert,
        curve,
        contains_line,
        secant,
    })
}

/// All residual quartics with their involution classes and table matches.
pub struct QuarticEnumeration {
    pub quartics: Vec<ResidualQuartic>,
    /// Index of the involution image of each quartic, if it is in the list.
    pub mirror: Vec<Option<usize>>,
    /// Involution classes as sorted index lists, ordered by first member.
    pub classes: Vec<Vec<usize>>,
    /// Printed row matched by each quartic (1-based), if any.
    pub table_row: Vec<Option<usize>>,
    /// Quartics equal to the printed normal quartic.
    pub normal_quartic: Vec<usize>,
    /// Number of distinct ideals.
    pub distinct: usize,
}

fn canonical_key(i: &Ideal) -> Vec<String> {
    i.reduced_generators().iter().map(|g| g.to_string()).collect()
}

/// Runs the residual construction over all 3 lines × 10 picks.
pub fn enumerate_fixed_quartics(model: &Dp5Model, with_tangent: bool) -> Result<QuarticEnumeration> {
    let mut jobs = Vec::new();
    for line in 0..3 {
        for i in 0..5 {
            for j in i + 1..5 {
                jobs.push((line, (i, j)));
            }
        }
    }
    let quartics = par::map(&jobs, |&(line, pick)| -> Result<ResidualQuartic> {
        let mut q = residual_quartic(model, line, pick)?;
        if with_tangent {
            q.curve.compute_tangent(model)?;
        }
        Ok(q)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let keys: Vec<Vec<String>> = quartics.iter().map(|q| canonical_key(&q.curve.ideal)).collect();
    let mut index: HashMap<&Vec<String>, usize> = HashMap::new();
    for (k, key) in keys.iter().enumerate() {
        index.entry(key).or_insert(k);
    }
    let distinct = index.len();

    let mut mirror = Vec::with_capacity(quartics.len());
    for q in &quartics {
        let image = q.curve.ideal.map(&model.involution)?;
        mirror.push(index.get(&canonical_key(&image)).copied());
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; quartics.len()];
    for k in 0..quartics.len() {
        if seen[k] {
            continue;
        }
        let mut class = vec![k];
        seen[k] = true;
        if let Some(m) = mirror[k] {
            if !seen[m] {
                seen[m] = true;
                class.push(m);
            }
        }
        class.sort();
        classes.push(class);
    }

    let printed: Vec<Vec<String>> = FIXED_QUARTICS
        .iter()
        .map(|r| Ok(canonical_key(&model.orbit_ideal(r.gens)?.saturate_irrelevant()?)))
        .collect::<Result<Vec<_>>>()?;
    let table_row = keys
        .iter()
        .map(|k| printed.iter().position(|p| p == k).map(|r| FIXED_QUARTICS[r].row))
        .collect();
    let normal = canonical_key(&model.orbit_ideal(&NORMAL_QUARTIC)?);
    let normal_quartic = keys
        .iter()
        .enumerate()
        .filter(|(_, k)| **k == normal)
        .map(|(i, _)| i)
        .collect();

    Ok(QuarticEnumeration {
        quartics,
        mirror,
        classes,
        table_row,
        normal_quartic,
        distinct,
    })
}

impl QuarticEnumeration {
    /// For each printed row, the classes whose members match it.
    pub fn row_to_classes(&self) -> Vec<(usize, Vec<usize>)> {
        FIXED_QUARTICS
            .iter()
            .map(|r| {
                let hits = self
                    .classes
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.iter().any(|&k| self.table_row[k] == Some(r.row)))
                    .map(|(ci, _)| ci)
                    .collect();
                (r.row, hits)
            })
            .collect()
    }

    /// Classes fixed by the involution (a single self-mirrored member).
    pub fn self_mirrored(&self) -> Vec<usize> {
        (0..self.quartics.len())
            .filter(|&k| self.mirror[k] == Some(k))
            .collect()
    }
}
