//! Exact linear algebra over the rationals.
//!
//! [`Echelon`] is an incremental, fraction-free sparse row echelon form used
//! for rank and kernel-dimension computations; [`nullspace`] is a small dense
//! solver used mainly by test oracles.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Rational;

/// A sparse row: `(column, value)` pairs with strictly increasing columns.
pub type SparseRow = Vec<(usize, Rational)>;

type IntRow = Vec<(usize, BigInt)>;

fn to_primitive_integers(row: &[(usize, Rational)]) -> IntRow {
    let mut lcm = BigInt::one();
    for (_, v) in row {
        lcm = lcm.lcm(v.denom());
    }
    let mut out: IntRow = row
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect();
    out.sort_by_key(|e| e.0);
    remove_content(&mut out);
    out
}

fn remove_content(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for (_, v) in row.iter_mut() {
        *v /= &g;
    }
}

/// `a * x - b * y` on sparse integer rows.
fn combine(a: &BigInt, x: &IntRow, b: &BigInt, y: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental row echelon form with integer rows.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce_int(&self, mut row: IntRow) -> IntRow {
        while let Some((col, lead)) = row.first() {
            let Some(piv) = self.pivots.get(col) else { break };
            let g = piv[0].1.gcd(lead);
            let a = &piv[0].1 / &g;
            let b = lead / &g;
            row = combine(&a, &row, &b, piv);
            remove_content(&mut row);
        }
        row
    }

    /// Adds a row; returns true when it was independent of the rows so far.
    pub fn insert(&mut self, row: &[(usize, Rational)]) -> bool {
        let mut r = self.reduce_int(to_primitive_integers(row));
        if r.is_empty() {
            return false;
        }
        if r[0].1.is_negative() {
            for e in r.iter_mut() {
                e.1 = -&e.1;
            }
        }
        self.pivots.insert(r[0].0, r);
        true
    }

    /// True when `row` lies in the span of the inserted rows.
    pub fn spans(&self, row: &[(usize, Rational)]) -> bool {
        self.reduce_int(to_primitive_integers(row)).is_empty()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }
}

/// Rank of a list of sparse rows.
pub fn rank(rows: &[SparseRow]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Reduced row echelon form of a dense matrix; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in c..cols {
                    let d = &f * &m[r][k];
                    m[i][k] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(&[(0, q(2)), (2, q(4))]));
        assert!(e.insert(&[(0, q(1)), (1, q(1))]));
        assert!(!e.insert(&[(1, q(-3)), (2, q(6))]));
        assert_eq!(e.rank(), 2);
        assert!(e.spans(&[(0, q(3)), (1, q(1)), (2, q(4))]));
        assert!(!e.spans(&[(2, q(1))]));
    }

    #[test]
    fn rational_entries() {
        let half = Rational::new(1.into(), 2.into());
        let rows = vec![vec![(0, half.clone()), (1, q(1))], vec![(0, q(1)), (1, q(2))]];
        assert_eq!(rank(&rows), 1);
    }

    #[test]
    fn nullspace_of_small_matrix() {
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                let dot: Rational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    proptest! {
        #[test]
        fn sparse_and_dense_rank_agree(entries in proptest::collection::vec(proptest::collection::vec(-3i64..4, 5), 1..7)) {
            let sparse: Vec<SparseRow> = entries.iter()
                .map(|r| r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(c, v)| (c, q(*v))).collect())
                .collect();
            let mut dense: Vec<Vec<Rational>> = entries.iter().map(|r| r.iter().map(|v| q(*v)).collect()).collect();
            let dense_rank = rref(&mut dense).len();
            prop_assert_eq!(rank(&sparse), dense_rank);
            prop_assert_eq!(nullspace(&entries.iter().map(|r| r.iter().map(|v| q(*v)).collect()).collect::<Vec<_>>(), 5).len(), 5 - dense_rank);
        }
    }
}
