use std::cmp::Ordering;
use std::fmt;

use super::Monomial;

/// A term order on monomials.
///
/// `Block` compares the first `split` variables with `first` and breaks
/// ties on the remaining ones with `second`; any variable appearing in the
/// first block dominates, which is what elimination needs. `Weighted`
/// compares by a weight vector (nonnegative weights keep it a well-order)
/// and breaks ties with `tie`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block {
        split: usize,
        first: Box<MonomialOrder>,
        second: Box<MonomialOrder>,
    },
    Weighted {
        weights: Vec<i64>,
        tie: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Eliminates the first `k` variables: grevlex on each block.
    pub fn elimination(k: usize) -> Self {
        MonomialOrder::Block {
            split: k,
            first: Box::new(MonomialOrder::GrevLex),
            second: Box::new(MonomialOrder::GrevLex),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exponents(), b.exponents())
    }

    pub fn cmp_exps(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => {
                let da: u32 = a.iter().map(|&e| e as u32).sum();
                let db: u32 = b.iter().map(|&e| e as u32).sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
            MonomialOrder::Block { split, first, second } => {
                let k = (*split).min(a.len());
                first
                    .cmp_exps(&a[..k], &b[..k])
                    .then_with(|| second.cmp_exps(&a[k..], &b[k..]))
            }
            MonomialOrder::Weighted { weights, tie } => {
                let wa: i64 = a.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum();
                let wb: i64 = b.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum();
                wa.cmp(&wb).then_with(|| tie.cmp_exps(a, b))
            }
        }
    }
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Block { split, first, second } => write!(f, "block({split}; {first:?}, {second:?})"),
            MonomialOrder::Weighted { weights, tie } => write!(f, "weighted({weights:?}; {tie:?})"),
        }
    }
}
