use num_traits::One;

use super::buchberger::GroebnerBasis;
use crate::poly::{MonomialOrder, Polynomial, Rational, RingContext};

/// Generators of the first syzygy module of a list of polynomials.
///
/// Each column `c` satisfies `Σ c[i] · gens[i] = 0`.
#[derive(Clone, Debug)]
pub struct SyzygyBasis {
    pub columns: Vec<Vec<Polynomial>>,
}

impl SyzygyBasis {
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Every column pairs to zero against `gens`.
    pub fn annihilates(&self, gens: &[Polynomial]) -> bool {
        self.columns.iter().all(|col| {
            col.len() == gens.len()
                && col
                    .iter()
                    .zip(gens)
                    .fold(Polynomial::zero(gens[0].context()), |acc, (c, g)| &acc + &(c * g))
                    .is_zero()
        })
    }
}

/// Schreyer-style syzygies: every S-pair of a Gröbner basis with tracked
/// cofactors lifts to a syzygy of the basis, which is pulled back to the
/// input through the cofactor matrix; each input generator contributes one
/// more column relating it to its expression in the basis.
pub fn syzygy_basis(ctx: &RingContext, gens: &[Polynomial], order: &MonomialOrder) -> SyzygyBasis {
    let r = gens.len();
    if r == 0 {
        return SyzygyBasis { columns: Vec::new() };
    }
    let gb = GroebnerBasis::compute(ctx, gens, order, true);
    let cof = gb.cofactors().expect("tracked");
    let elems = gb.elements();
    let leads = gb.leading_monomials();
    let one = Rational::one();
    let zero = Polynomial::zero(ctx);

    let pull_back = |sigma: &[Polynomial]| -> Vec<Polynomial> {
        (0..r)
            .map(|i| {
                sigma
                    .iter()
                    .zip(cof)
                    .filter(|(s, _)| !s.is_zero())
                    .fold(zero.clone(), |acc, (s, row)| &acc + &(s * &row[i]))
            })
            .collect()
    };

    let mut columns: Vec<Vec<Polynomial>> = Vec::new();
    for l in 0..elems.len() {
        for k in 0..l {
            let lcm = leads[k].lcm(&leads[l]);
            let mk = lcm.div(&leads[k]).unwrap();
            let ml = lcm.div(&leads[l]).unwrap();
            let s = &elems[k].mul_term(&mk, &one) - &elems[l].mul_term(&ml, &one);
            let d = gb.divide(&s);
            debug_assert!(d.remainder.is_zero());
            let mut sigma: Vec<Polynomial> = d.quotients.iter().map(|q| -q).collect();
            sigma[k] = &sigma[k] + &Polynomial::monomial(ctx, mk, one.clone());
            sigma[l] = &sigma[l] - &Polynomial::monomial(ctx, ml, one.clone());
            columns.push(pull_back(&sigma));
        }
    }
    for (i, g) in gens.iter().enumerate() {
        let mut col = if g.is_zero() {
            vec![zero.clone(); r]
        } else {
            let d = gb.divide(g);
            debug_assert!(d.remainder.is_zero());
            pull_back(&d.quotients).into_iter().map(|p| -p).collect()
        };
        col[i] = &col[i] + &Polynomial::one(ctx);
        columns.push(col);
    }
    columns.retain(|c| c.iter().any(|p| !p.is_zero()));
    let mut unique: Vec<Vec<Polynomial>> = Vec::with_capacity(columns.len());
    for c in columns {
        if !unique.contains(&c) {
            unique.push(c);
        }
    }
    SyzygyBasis { columns: unique }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_generators;

    #[test]
    fn koszul_pair() {
        let r = RingContext::new(&["x", "y"]).unwrap();
        let gens = parse_generators(&r, &["x", "y"]).unwrap();
        let syz = syzygy_basis(&r, &gens, &MonomialOrder::GrevLex);
        assert!(syz.annihilates(&gens));
        // the module is free of rank one, generated by (y, -x)
        assert!(syz
            .columns
            .iter()
            .any(|c| c[0].to_string() == "y" && c[1].to_string() == "-x"
                || c[0].to_string() == "-y" && c[1].to_string() == "x"));
    }

    #[test]
    fn twisted_cubic_minors() {
        let r = RingContext::new(&["x", "y", "z", "w"]).unwrap();
        let gens = parse_generators(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]).unwrap();
        let syz = syzygy_basis(&r, &gens, &MonomialOrder::GrevLex);
        assert!(syz.annihilates(&gens));
        assert!(syz.len() >= 2);
        for col in &syz.columns {
            for c in col {
                assert!(c.is_homogeneous());
            }
        }
    }

    #[test]
    fn zero_and_repeated_generators() {
        let r = RingContext::new(&["x", "y"]).unwrap();
        let gens = parse_generators(&r, &["x^2", "0", "x^2"]).unwrap();
        let syz = syzygy_basis(&r, &gens, &MonomialOrder::GrevLex);
        assert!(syz.annihilates(&gens));
        assert!(syz.columns.iter().any(|c| c[1].is_constant() && !c[1].is_zero()));
    }
}
