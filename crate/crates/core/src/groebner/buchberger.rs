use std::collections::{BTreeSet, HashSet};

use num_traits::{One, Signed};

use super::division::{divide_sorted, to_polys, Division};
use super::sorted::{cancel_pair, SortedPoly};
use crate::poly::{primitive_scale, Monomial, MonomialOrder, Polynomial, Rational, RingContext};

/// A reduced Gröbner basis together with the data it was computed from.
///
/// Elements are monic and sorted by increasing leading monomial. When
/// cofactors were requested, `cofactors()[k][i]` is the coefficient of
/// `input()[i]` in `elements()[k]`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ctx: RingContext,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    leads: Vec<Monomial>,
    cofactors: Option<Vec<Vec<Polynomial>>>,
    input: Vec<Polynomial>,
}

struct Elem {
    poly: SortedPoly,
    cof: Option<Vec<Polynomial>>,
}

impl Elem {
    fn lead(&self) -> &Monomial {
        &self.poly.terms[0].0
    }

    fn scale(&mut self, s: &Rational) {
        self.poly.scale(s);
        if let Some(cof) = &mut self.cof {
            for c in cof.iter_mut() {
                *c = c.scale(s);
            }
        }
    }

    /// Integer coefficients with trivial content and a positive lead.
    fn make_primitive(&mut self) {
        if self.poly.is_zero() {
            return;
        }
        let mut s = primitive_scale(self.poly.terms.iter().map(|t| &t.1));
        if (&self.poly.terms[0].1 * &s).is_negative() {
            s = -s;
        }
        if !s.is_one() {
            self.scale(&s);
        }
    }

    fn make_monic(&mut self) {
        let lc = self.poly.terms[0].1.clone();
        if !lc.is_one() {
            self.scale(&lc.recip());
        }
    }
}

/// Reduces `p` completely against `basis`, keeping integer coefficients
/// (every step multiplies `p` by the divisor's lead over a gcd rather than
/// dividing). Cofactors, if tracked, follow the same row operations.
fn reduce_fraction_free(mut p: Elem, basis: &[&Elem], order: &MonomialOrder) -> Elem {
    let mut pos = 0;
    while pos < p.poly.terms.len() {
        let hit = {
            let mono = &p.poly.terms[pos].0;
            basis.iter().find_map(|g| mono.div(g.lead()).map(|q| (*g, q)))
        };
        match hit {
            None => pos += 1,
            Some((g, shift)) => {
                let (a, b) = cancel_pair(&g.poly.terms[0].1, &p.poly.terms[pos].1);
                p.poly = p.poly.combine(&a, &b, &shift, &g.poly, order);
                if let (Some(cp), Some(cg)) = (&mut p.cof, &g.cof) {
                    for (x, y) in cp.iter_mut().zip(cg) {
                        *x = &x.scale(&a) - &y.mul_term(&shift, &b);
                    }
                }
            }
        }
    }
    p.make_primitive();
    p
}

fn s_polynomial(f: &Elem, g: &Elem, order: &MonomialOrder) -> Elem {
    let lcm = f.lead().lcm(g.lead());
    let mf = lcm.div(f.lead()).expect("lcm divisible");
    let mg = lcm.div(g.lead()).expect("lcm divisible");
    let (a, b) = cancel_pair(&f.poly.terms[0].1, &g.poly.terms[0].1);
    // b * mf * f - a * mg * g
    let shifted = f.poly.mul_monomial(&mf);
    let poly = shifted.combine(&b, &a, &mg, &g.poly, order);
    let cof = match (&f.cof, &g.cof) {
        (Some(cf), Some(cg)) => Some(
            cf.iter()
                .zip(cg)
                .map(|(x, y)| &x.mul_term(&mf, &b) - &y.mul_term(&mg, &a))
                .collect(),
        ),
        _ => None,
    };
    Elem { poly, cof }
}

fn pair_key(lcm_degree: u32, i: usize, j: usize) -> (u32, usize, usize) {
    (lcm_degree, j, i)
}

impl GroebnerBasis {
    /// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
    ///
    /// S-pairs are processed smallest lcm degree first (ties by pair index);
    /// Buchberger's coprime-lead and chain criteria discard redundant pairs.
    pub fn compute(
        ctx: &RingContext,
        gens: &[Polynomial],
        order: &MonomialOrder,
        track_cofactors: bool,
    ) -> GroebnerBasis {
        let r = gens.len();
        let mut basis: Vec<Elem> = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            debug_assert_eq!(g.context(), ctx);
            if g.is_zero() {
                continue;
            }
            let cof = track_cofactors.then(|| {
                (0..r)
                    .map(|k| {
                        if k == i {
                            Polynomial::one(ctx)
                        } else {
                            Polynomial::zero(ctx)
                        }
                    })
                    .collect()
            });
            let mut e = Elem {
                poly: SortedPoly::from_poly(g, order),
                cof,
            };
            e.make_primitive();
            basis.push(e);
        }

        let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
        let mut live: HashSet<(usize, usize)> = HashSet::new();
        for j in 0..basis.len() {
            for i in 0..j {
                let d = basis[i].lead().lcm(basis[j].lead()).degree();
                pending.insert(pair_key(d, i, j));
                live.insert((i, j));
            }
        }

        let mut unit: Option<usize> = basis.iter().position(|e| e.lead().is_one());
        while unit.is_none() {
            let Some(key) = pending.pop_first() else { break };
            let (_, j, i) = key;
            live.remove(&(i, j));
            let (li, lj) = (basis[i].lead(), basis[j].lead());
            if li.is_coprime(lj) {
                continue;
            }
            let lcm = li.lcm(lj);
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k].lead().divides(&lcm)
                    && !live.contains(&(i.min(k), i.max(k)))
                    && !live.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            let s = s_polynomial(&basis[i], &basis[j], order);
            let refs: Vec<&Elem> = basis.iter().collect();
            let h = reduce_fraction_free(s, &refs, order);
            if h.poly.is_zero() {
                continue;
            }
            let n = basis.len();
            let is_unit = h.lead().is_one();
            basis.push(h);
            if is_unit {
                unit = Some(n);
                break;
            }
            for k in 0..n {
                let d = basis[k].lead().lcm(basis[n].lead()).degree();
                pending.insert(pair_key(d, k, n));
                live.insert((k, n));
            }
        }

        let mut kept: Vec<Elem> = match unit {
            Some(u) => vec![basis.swap_remove(u)],
            None => {
                let leads: Vec<Monomial> = basis.iter().map(|e| e.lead().clone()).collect();
                let keep: Vec<bool> = (0..basis.len())
                    .map(|k| {
                        !(0..basis.len())
                            .any(|l| l != k && leads[l].divides(&leads[k]) && (leads[l] != leads[k] || l < k))
                    })
                    .collect();
                basis
                    .into_iter()
                    .zip(keep)
                    .filter_map(|(e, k)| k.then_some(e))
                    .collect()
            }
        };

        // tail reduction against the other minimal elements
        let mut reduced: Vec<Elem> = Vec::with_capacity(kept.len());
        for k in 0..kept.len() {
            let others: Vec<&Elem> = kept
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != k)
                .map(|(_, e)| e)
                .collect();
            let e = Elem {
                poly: kept[k].poly.clone(),
                cof: kept[k].cof.clone(),
            };
            reduced.push(reduce_fraction_free(e, &others, order));
        }
        kept = reduced;
        for e in &mut kept {
            e.make_monic();
        }
        kept.sort_by(|a, b| order.cmp(a.lead(), b.lead()));

        let leads = kept.iter().map(|e| e.lead().clone()).collect();
        let elements = kept.iter().map(|e| e.poly.to_poly(ctx)).collect();
        let cofactors = track_cofactors.then(|| kept.into_iter().map(|e| e.cof.unwrap()).collect());
        GroebnerBasis {
            ctx: ctx.clone(),
            order: order.clone(),
            elements,
            leads,
            cofactors,
            input: gens.to_vec(),
        }
    }

    pub fn context(&self) -> &RingContext {
        &self.ctx
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn cofactors(&self) -> Option<&[Vec<Polynomial>]> {
        self.cofactors.as_deref()
    }

    pub fn input(&self) -> &[Polynomial] {
        &self.input
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.leads.len() == 1 && self.leads[0].is_one()
    }

    fn sorted_elements(&self) -> Vec<SortedPoly> {
        self.elements
            .iter()
            .map(|e| SortedPoly::from_poly(e, &self.order))
            .collect()
    }

    /// Normal form of `p`: no remaining term is divisible by a leading
    /// monomial of the basis.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let (_, r) = divide_sorted(
            &SortedPoly::from_poly(p, &self.order),
            &self.sorted_elements(),
            &self.order,
            false,
        );
        r.to_poly(&self.ctx)
    }

    /// Normal form together with quotients with respect to `elements()`.
    pub fn divide(&self, p: &Polynomial) -> Division {
        let (q, r) = divide_sorted(
            &SortedPoly::from_poly(p, &self.order),
            &self.sorted_elements(),
            &self.order,
            true,
        );
        Division {
            quotients: to_polys(&self.ctx, q),
            remainder: r.to_poly(&self.ctx),
        }
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Expresses `p` as a combination of the *input* generators, if it lies
    /// in the ideal. Requires tracked cofactors.
    pub fn lift(&self, p: &Polynomial) -> Option<Vec<Polynomial>> {
        let cof = self.cofactors.as_ref()?;
        let d = self.divide(p);
        if !d.remainder.is_zero() {
            return None;
        }
        let mut out = vec![Polynomial::zero(&self.ctx); self.input.len()];
        for (q, row) in d.quotients.iter().zip(cof) {
            if q.is_zero() {
                continue;
            }
            for (slot, c) in out.iter_mut().zip(row) {
                *slot = &*slot + &(q * c);
            }
        }
        Some(out)
    }

    /// Every S-polynomial of the basis reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let n = self.elements.len();
        for j in 0..n {
            for i in 0..j {
                let lcm = self.leads[i].lcm(&self.leads[j]);
                let fi = self.elements[i].mul_term(&lcm.div(&self.leads[i]).unwrap(), &Rational::one());
                let fj = self.elements[j].mul_term(&lcm.div(&self.leads[j]).unwrap(), &Rational::one());
                if !self.normal_form(&(&fi - &fj)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Leads are monic and no term of any element is divisible by the lead
    /// of another element.
    pub fn is_reduced(&self) -> bool {
        for (k, e) in self.elements.iter().enumerate() {
            match e.leading_term(&self.order) {
                Some((m, c)) if m == &self.leads[k] && c.is_one() => {}
                _ => return false,
            }
            for (m, _) in e.terms() {
                for (l, lead) in self.leads.iter().enumerate() {
                    if l != k && lead.divides(m) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `elements = cofactors · input`, checked by exact expansion.
    pub fn cofactor_identity_holds(&self) -> bool {
        let Some(cof) = &self.cofactors else { return false };
        self.elements.iter().zip(cof).all(|(e, row)| {
            let sum = row
                .iter()
                .zip(&self.input)
                .fold(Polynomial::zero(&self.ctx), |acc, (c, g)| &acc + &(c * g));
            &sum == e
        })
    }
}

/// Reduced Gröbner basis of `gens`; zero generators are ignored.
pub fn reduced_groebner_basis(
    ctx: &RingContext,
    gens: &[Polynomial],
    order: &MonomialOrder,
    track_cofactors: bool,
) -> GroebnerBasis {
    GroebnerBasis::compute(ctx, gens, order, track_cofactors)
}

/// Normal form of `p` modulo a Gröbner basis.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_generators;

    fn xy() -> RingContext {
        RingContext::new(&["x", "y"]).unwrap()
    }

    #[test]
    fn hand_computed_lex_basis() {
        let r = xy();
        let gens = parse_generators(&r, &["x*y - 1", "y^2 - 1"]).unwrap();
        let gb = reduced_groebner_basis(&r, &gens, &MonomialOrder::Lex, true);
        let shown: Vec<String> = gb
            .elements()
            .iter()
            .map(|e| e.display_in(&MonomialOrder::Lex))
            .collect();
        assert_eq!(shown, vec!["y^2 - 1", "x - y"]);
        assert!(gb.is_reduced());
        assert!(gb.satisfies_buchberger_criterion());
        assert!(gb.cofactor_identity_holds());
        let p = Polynomial::parse(&r, "x^2*y - 1").unwrap();
        assert_eq!(gb.normal_form(&p).to_string(), "y - 1");
    }

    #[test]
    fn degenerate_ideals() {
        let r = xy();
        let zero = reduced_groebner_basis(&r, &[Polynomial::zero(&r)], &MonomialOrder::GrevLex, false);
        assert!(zero.is_empty());
        let none = reduced_groebner_basis(&r, &[], &MonomialOrder::GrevLex, true);
        assert!(none.is_empty());
        let one = reduced_groebner_basis(&r, &[Polynomial::from_int(&r, 7)], &MonomialOrder::GrevLex, true);
        assert!(one.is_unit());
        assert_eq!(one.elements()[0], Polynomial::one(&r));
        assert!(one.cofactor_identity_holds());
    }

    #[test]
    fn inconsistent_system_gives_unit_with_certificate() {
        let r = xy();
        let gens = parse_generators(&r, &["x*y - 1", "x", "y^2 + 1"]).unwrap();
        let gb = reduced_groebner_basis(&r, &gens, &MonomialOrder::GrevLex, true);
        assert!(gb.is_unit());
        assert!(gb.cofactor_identity_holds());
    }

    #[test]
    fn lift_expresses_members_in_input() {
        let r = RingContext::new(&["x", "y", "z"]).unwrap();
        let gens = parse_generators(&r, &["x^2 - y*z", "x*y - z^2", "y^2 - x*z"]).unwrap();
        let gb = reduced_groebner_basis(&r, &gens, &MonomialOrder::GrevLex, true);
        let p = &(&Polynomial::parse(&r, "x*y + 3").unwrap() * &gens[0])
            - &(&Polynomial::parse(&r, "z").unwrap() * &gens[2]);
        let lifted = gb.lift(&p).unwrap();
        let back = lifted
            .iter()
            .zip(&gens)
            .fold(Polynomial::zero(&r), |acc, (c, g)| &acc + &(c * g));
        assert_eq!(back, p);
        assert!(gb.lift(&Polynomial::parse(&r, "x").unwrap()).is_none());
    }
}
