//! The lowering operator on `∧²V5` and the invariant seven-dimensional
//! subspace it generates.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::tables::{WedgeVector, INVARIANT_BASIS, V5_LABELS};
use crate::linalg::{rank, SparseRow};
use crate::poly::Rational;
use crate::report::Check;

/// Vector of `∧²V5` keyed by position pairs `i < j`.
pub type Wedge = BTreeMap<(usize, usize), Rational>;

fn add_term(w: &mut Wedge, c: Rational, i: usize, j: usize) {
    if i == j || c.is_zero() {
        return;
    }
    let (key, c) = if i < j { ((i, j), c) } else { ((j, i), -c) };
    let slot = w.entry(key).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        w.remove(&key);
    }
}

pub fn wedge_from(terms: WedgeVector) -> Wedge {
    let mut w = Wedge::new();
    for &(c, i, j) in terms {
        add_term(&mut w, Rational::from_integer(c.into()), i, j);
    }
    w
}

/// `f` on `V5`: `e-4 ↦ e-2, e-2 ↦ 2e0, e0 ↦ 3e2, e2 ↦ 4e4, e4 ↦ 0`.
fn lower(i: usize) -> Option<(i64, usize)> {
    match i {
        0 => None,
        k => Some((5 - k as i64, k - 1)),
    }
}

/// `f` extended to `∧²V5` as a derivation.
pub fn apply_f(w: &Wedge) -> Wedge {
    let mut out = Wedge::new();
    for (&(i, j), c) in w {
        if let Some((s, fi)) = lower(i) {
            add_term(&mut out, c * Rational::from_integer(s.into()), fi, j);
        }
        if let Some((s, fj)) = lower(j) {
            add_term(&mut out, c * Rational::from_integer(s.into()), i, fj);
        }
    }
    out
}

fn row(w: &Wedge) -> SparseRow {
    w.iter().map(|(&(i, j), c)| (i * 5 + j, c.clone())).collect()
}

pub fn render(w: &Wedge) -> String {
    if w.is_empty() {
        return "0".into();
    }
    w.iter()
        .map(|(&(i, j), c)| format!("{}*e{}^e{}", c, V5_LABELS[i], V5_LABELS[j]))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// The `f`-chain starting at `e-2 ∧ e-4`, until it reaches zero.
pub fn f_chain() -> Vec<Wedge> {
    let mut chain = vec![wedge_from(&[(1, 3, 4)])];
    loop {
        let next = apply_f(chain.last().unwrap());
        if next.is_empty() || chain.len() > 10 {
            break;
        }
        chain.push(next);
    }
    chain
}

/// The `f`-orbit of `e-2 ∧ e-4` spans exactly the printed seven vectors.
pub fn invariant_subspace_check() -> Check {
    Check::timed(
        "invariant-subspace",
        "invariant seven-dimensional subspace of the second exterior power",
        || {
            let chain = f_chain();
            let listed: Vec<Wedge> = INVARIANT_BASIS.iter().map(|t| wedge_from(t)).collect();
            let chain_rows: Vec<SparseRow> = chain.iter().map(row).collect();
            let listed_rows: Vec<SparseRow> = listed.iter().map(row).collect();
            let mut both = chain_rows.clone();
            both.extend(listed_rows.iter().cloned());
            let (rc, rl, rb) = (rank(&chain_rows), rank(&listed_rows), rank(&both));
            let terminates = apply_f(chain.last().unwrap()).is_empty();
            let ok = chain.len() == 7 && rc == 7 && rl == 7 && rb == 7 && terminates;
            (
                ok,
                "chain of 7 nonzero vectors, span dim 7 equal to the printed span".into(),
                format!(
                    "chain length {}, chain rank {rc}, printed rank {rl}, joint rank {rb}, terminates {terminates}",
                    chain.len()
                ),
            )
        },
    )
}
