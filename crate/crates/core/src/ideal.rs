//! Ideals and the usual ideal-theoretic operations.

use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::par;
use crate::poly::{
    is_weighted_homogeneous, parse_generators, render_ideal, MonomialOrder, Polynomial, RingContext, RingMap,
};

/// How two ideals sit relative to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    Equal,
    /// The left ideal is strictly contained in the right one.
    Subset,
    /// The right ideal is strictly contained in the left one.
    Superset,
    Incomparable,
}

impl fmt::Display for Containment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Containment::Equal => "equal",
            Containment::Subset => "subset",
            Containment::Superset => "superset",
            Containment::Incomparable => "incomparable",
        })
    }
}

/// Result of an ideal quotient; `warning` is set when the divisor ideal was
/// zero and the whole ring was returned.
#[derive(Clone, Debug)]
pub struct QuotientResult {
    pub ideal: Ideal,
    pub warning: Option<String>,
}

type Cache = Mutex<Vec<(MonomialOrder, bool, Arc<GroebnerBasis>)>>;

/// An ideal given by generators. Reduced Gröbner bases are computed on
/// demand and cached per order.
pub struct Ideal {
    ctx: RingContext,
    gens: Vec<Polynomial>,
    cache: Cache,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().expect("cache poisoned").clone();
        Ideal {
            ctx: self.ctx.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(cache),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Ideal{:?}",
            self.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>()
        )
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.compare(other) == Containment::Equal
    }
}

const DEFAULT: MonomialOrder = MonomialOrder::GrevLex;

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ctx: &RingContext, gens: Vec<Polynomial>) -> Result<Ideal> {
        if gens.iter().any(|g| g.context() != ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(Ideal::new_unchecked(ctx, gens))
    }

    fn new_unchecked(ctx: &RingContext, gens: Vec<Polynomial>) -> Ideal {
        Ideal {
            ctx: ctx.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Mutex::new(Vec::new()),
        }
    }

    pub fn from_strs(ctx: &RingContext, gens: &[&str]) -> Result<Ideal> {
        Ideal::new(ctx, parse_generators(ctx, gens)?)
    }

    pub fn zero(ctx: &RingContext) -> Ideal {
        Ideal::new_unchecked(ctx, Vec::new())
    }

    pub fn unit(ctx: &RingContext) -> Ideal {
        Ideal::new_unchecked(ctx, vec![Polynomial::one(ctx)])
    }

    /// The ideal generated by all variables.
    pub fn irrelevant(ctx: &RingContext) -> Ideal {
        Ideal::new_unchecked(ctx, (0..ctx.nvars()).map(|i| Polynomial::var(ctx, i)).collect())
    }

    pub fn context(&self) -> &RingContext {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Text form readable by [`crate::poly::IdealText::parse`].
    pub fn render(&self) -> String {
        render_ideal(&self.ctx, &self.gens)
    }

    fn cached_gb(&self, order: &MonomialOrder, cofactors: bool) -> Arc<GroebnerBasis> {
        {
            let cache = self.cache.lock().expect("cache poisoned");
            if let Some((_, _, gb)) = cache.iter().find(|(o, c, _)| o == order && (*c || !cofactors)) {
                return gb.clone();
            }
        }
        let gb = Arc::new(GroebnerBasis::compute(&self.ctx, &self.gens, order, cofactors));
        self.cache
            .lock()
            .expect("cache poisoned")
            .push((order.clone(), cofactors, gb.clone()));
        gb
    }

    /// Reduced Gröbner basis under `order`.
    pub fn gb(&self, order: &MonomialOrder) -> Arc<GroebnerBasis> {
        self.cached_gb(order, false)
    }

    /// Reduced Gröbner basis with cofactors expressing it in `generators()`.
    pub fn gb_with_cofactors(&self, order: &MonomialOrder) -> Arc<GroebnerBasis> {
        self.cached_gb(order, true)
    }

    /// The reduced grevlex basis, a canonical generating set.
    pub fn reduced_generators(&self) -> Vec<Polynomial> {
        self.gb(&DEFAULT).elements().to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb(&DEFAULT).is_unit()
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.gb(&DEFAULT).contains(p)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        let gb = self.gb(&DEFAULT);
        other.gens.iter().all(|g| gb.contains(g))
    }

    pub fn compare(&self, other: &Ideal) -> Containment {
        self.compare_in(other, &DEFAULT)
    }

    /// Containment decided by normal forms against reduced bases for `order`.
    pub fn compare_in(&self, other: &Ideal, order: &MonomialOrder) -> Containment {
        let mine = self.gb(order);
        let theirs = other.gb(order);
        let sub = self.gens.iter().all(|g| theirs.contains(g));
        let sup = other.gens.iter().all(|g| mine.contains(g));
        match (sub, sup) {
            (true, true) => Containment::Equal,
            (true, false) => Containment::Subset,
            (false, true) => Containment::Superset,
            (false, false) => Containment::Incomparable,
        }
    }

    fn check_ctx(&self, other: &Ideal) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ctx(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Ideal::new_unchecked(&self.ctx, gens))
    }

    pub fn add_generators(&self, extra: &[Polynomial]) -> Result<Ideal> {
        self.sum(&Ideal::new(&self.ctx, extra.to_vec())?)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ctx(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|f| other.gens.iter().map(move |g| f * g))
            .collect();
        Ok(Ideal::new_unchecked(&self.ctx, gens))
    }

    /// `I ∩ J` as the contraction of `t·I + (1−t)·J` for a fresh variable `t`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ctx));
        }
        let t_name = self.ctx.fresh_name("t");
        let ext = self.ctx.prepend(&[t_name.as_str()])?;
        let lift = shift_map(&self.ctx);
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| &t * &g.relabel(&ext, &lift)).collect();
        gens.extend(other.gens.iter().map(|g| &one_minus_t * &g.relabel(&ext, &lift)));
        Ok(Ideal::new_unchecked(&self.ctx, contract(&ext, &gens, 1, &self.ctx)))
    }

    /// Intersection of several ideals, pairwise from the left.
    pub fn intersect_all(ctx: &RingContext, ideals: &[Ideal]) -> Result<Ideal> {
        let mut iter = ideals.iter();
        let Some(first) = iter.next() else {
            return Ok(Ideal::unit(ctx));
        };
        let mut acc = first.clone();
        for next in iter {
            if acc.contains_ideal(next) {
                acc = next.clone();
            } else if !next.contains_ideal(&acc) {
                acc = acc.intersection(next)?;
            }
        }
        Ok(acc)
    }

    /// `(I : f) = (I ∩ ⟨f⟩) / f`.
    pub fn quotient_by(&self, f: &Polynomial) -> Result<Ideal> {
        if f.context() != &self.ctx {
            return Err(Error::ContextMismatch);
        }
        if f.is_zero() {
            return Ok(Ideal::unit(&self.ctx));
        }
        if self.contains(f) {
            return Ok(Ideal::unit(&self.ctx));
        }
        let meet = self.intersection(&Ideal::new_unchecked(&self.ctx, vec![f.clone()]))?;
        let gens = meet
            .gens
            .iter()
            .map(|g| {
                g.exact_div(f)
                    .ok_or(Error::Invalid("intersection not divisible".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new_unchecked(&self.ctx, gens))
    }

    /// `(I : J) = ∩_j (I : f_j)`.
    pub fn quotient(&self, other: &Ideal) -> Result<QuotientResult> {
        self.check_ctx(other)?;
        if other.is_zero() {
            let warning = "quotient by the zero ideal; returning the unit ideal".to_string();
            log::warn!("{warning}");
            return Ok(QuotientResult {
                ideal: Ideal::unit(&self.ctx),
                warning: Some(warning),
            });
        }
        let parts = par::map(other.generators(), |f| self.quotient_by(f));
        let parts = parts.into_iter().collect::<Result<Vec<_>>>()?;
        Ok(QuotientResult {
            ideal: Ideal::intersect_all(&self.ctx, &parts)?,
            warning: None,
        })
    }

    /// `(I : f^∞)` by the Rabinowitsch trick: eliminate `t` from
    /// `I + ⟨1 − t·f⟩`.
    pub fn saturation_by(&self, f: &Polynomial) -> Result<Ideal> {
        if f.context() != &self.ctx {
            return Err(Error::ContextMismatch);
        }
        if f.is_zero() {
            return Err(Error::Invalid("saturation by zero".into()));
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        let t_name = self.ctx.fresh_name("t");
        let ext = self.ctx.prepend(&[t_name.as_str()])?;
        let lift = shift_map(&self.ctx);
        let t = Polynomial::var(&ext, 0);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.relabel(&ext, &lift)).collect();
        gens.push(&Polynomial::one(&ext) - &(&t * &f.relabel(&ext, &lift)));
        Ok(Ideal::new_unchecked(&self.ctx, contract(&ext, &gens, 1, &self.ctx)))
    }

    /// `(I : J^∞) = ∩_j (I : f_j^∞)`.
    pub fn saturation(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ctx(other)?;
        if other.is_zero() {
            return Err(Error::Invalid("saturation by the zero ideal".into()));
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let parts = par::map(other.generators(), |f| self.saturation_by(f));
        let parts = parts.into_iter().collect::<Result<Vec<_>>>()?;
        Ideal::intersect_all(&self.ctx, &parts)
    }

    /// Saturation by the ideal of all variables.
    pub fn saturate_irrelevant(&self) -> Result<Ideal> {
        self.saturation(&Ideal::irrelevant(&self.ctx))
    }

    /// `I ∩ k[remaining variables]`, as an ideal of the smaller ring.
    pub fn eliminate(&self, vars: &[&str]) -> Result<Ideal> {
        let mut drop = Vec::new();
        for v in vars {
            let i = self.ctx.require_index(v)?;
            if !drop.contains(&i) {
                drop.push(i);
            }
        }
        if drop.len() >= self.ctx.nvars() {
            return Err(Error::EliminateAll);
        }
        let keep: Vec<usize> = (0..self.ctx.nvars()).filter(|i| !drop.contains(i)).collect();
        let mut perm = drop.clone();
        perm.extend(keep.iter().copied());
        let ext = self.ctx.permuted(&perm)?;
        let mut to_ext = vec![0; self.ctx.nvars()];
        for (new, &old) in perm.iter().enumerate() {
            to_ext[old] = new;
        }
        let names: Vec<&str> = keep.iter().map(|&i| self.ctx.name(i)).collect();
        let target = match self.ctx.weights() {
            Some(w) => RingContext::with_weights(&names, &keep.iter().map(|&i| w[i]).collect::<Vec<_>>())?,
            None => RingContext::new(&names)?,
        };
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.relabel(&ext, &to_ext)).collect();
        Ok(Ideal::new_unchecked(
            &target,
            contract(&ext, &gens, drop.len(), &target),
        ))
    }

    /// Every generator is homogeneous for the standard grading.
    pub fn is_homogeneous(&self) -> bool {
        self.gb(&DEFAULT).elements().iter().all(|g| g.is_homogeneous())
    }

    /// Torus-invariance: the reduced basis consists of weighted-homogeneous
    /// polynomials.
    pub fn is_fixed(&self) -> Result<bool> {
        if self.ctx.weights().is_none() {
            return Err(Error::MissingWeights);
        }
        for g in self.gb(&DEFAULT).elements() {
            if !is_weighted_homogeneous(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image under a ring map, generated by the images of the generators.
    pub fn map(&self, f: &RingMap) -> Result<Ideal> {
        if f.source() != &self.ctx {
            return Err(Error::ContextMismatch);
        }
        let gens = self.gens.iter().map(|g| f.apply(g)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new_unchecked(f.target(), gens))
    }
}

/// Index map sending variable `i` of `ctx` to `i + 1` in the ring with one
/// variable prepended.
fn shift_map(ctx: &RingContext) -> Vec<usize> {
    (1..=ctx.nvars()).collect()
}

/// Elements of the block-order basis free of the first `k` variables,
/// relabelled into `target` (whose variables are the remaining ones, in
/// order).
fn contract(ext: &RingContext, gens: &[Polynomial], k: usize, target: &RingContext) -> Vec<Polynomial> {
    let gb = GroebnerBasis::compute(ext, gens, &MonomialOrder::elimination(k), false);
    let map: Vec<Option<usize>> = (0..ext.nvars()).map(|i| i.checked_sub(k)).collect();
    gb.elements()
        .iter()
        .filter_map(|g| g.try_relabel(target, &map))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> RingContext {
        RingContext::new(names).unwrap()
    }

    fn id(r: &RingContext, gens: &[&str]) -> Ideal {
        Ideal::from_strs(r, gens).unwrap()
    }

    #[test]
    fn sum_product_intersection() {
        let r = ring(&["x", "y"]);
        let x = id(&r, &["x"]);
        let y = id(&r, &["y"]);
        assert_eq!(x.intersection(&y).unwrap(), id(&r, &["x*y"]));
        assert_eq!(x.sum(&Ideal::zero(&r)).unwrap(), x);
        assert_eq!(x.product(&x).unwrap(), id(&r, &["x^2"]));
        assert_eq!(x.intersection(&Ideal::zero(&r)).unwrap(), Ideal::zero(&r));
    }

    #[test]
    fn quotients() {
        let r = ring(&["x", "y", "z"]);
        let i = id(&r, &["x*y", "x*z"]);
        let q = i.quotient(&id(&r, &["x"])).unwrap();
        assert!(q.warning.is_none());
        assert_eq!(q.ideal, id(&r, &["y", "z"]));
        assert!(i.quotient(&i).unwrap().ideal.is_unit());
        let z = i.quotient(&Ideal::zero(&r)).unwrap();
        assert!(z.ideal.is_unit());
        assert!(z.warning.is_some());
    }

    #[test]
    fn saturations() {
        let r = ring(&["x", "y"]);
        let xx = id(&r, &["x^2"]);
        assert!(xx.saturation(&id(&r, &["x"])).unwrap().is_unit());
        let i = id(&r, &["x^2*y", "x*y^2"]);
        assert_eq!(i.saturation(&Ideal::unit(&r)).unwrap(), i);
        // embedded point at the origin goes away
        let r3 = ring(&["x", "y", "z"]);
        let j = id(&r3, &["x^2", "x*y"]);
        assert_eq!(j.saturate_irrelevant().unwrap(), j);
        let k = id(&r3, &["x", "y^2", "y*z"])
            .intersection(&id(&r3, &["x", "y", "z"]).product(&id(&r3, &["x", "y", "z"])).unwrap())
            .unwrap();
        assert_eq!(k.saturate_irrelevant().unwrap(), id(&r3, &["x", "y"]));
    }

    #[test]
    fn eliminations() {
        let r = ring(&["t", "x", "y"]);
        let e = id(&r, &["y - t", "t - x"]).eliminate(&["t"]).unwrap();
        let rxy = ring(&["x", "y"]);
        assert_eq!(e.context(), &rxy);
        assert_eq!(e, id(&rxy, &["y - x"]));
        let r2 = ring(&["x", "y"]);
        let e2 = id(&r2, &["y - x^2", "y^2 - 1"]).eliminate(&["y"]).unwrap();
        assert_eq!(e2, id(&ring(&["x"]), &["x^4 - 1"]));
        let r3 = ring(&["t", "x"]);
        assert!(id(&r3, &["1 - t*x", "x^2"]).eliminate(&["t"]).unwrap().is_unit());
        assert!(matches!(
            id(&r3, &["x"]).eliminate(&["t", "x"]),
            Err(Error::EliminateAll)
        ));
    }

    #[test]
    fn comparisons() {
        let r = ring(&["x", "y"]);
        let x = id(&r, &["x"]);
        assert_eq!(x.compare(&x), Containment::Equal);
        assert_eq!(x.compare(&id(&r, &["y"])), Containment::Incomparable);
        assert_eq!(id(&r, &["x^2"]).compare(&x), Containment::Subset);
        assert_eq!(x.compare(&id(&r, &["x^2"])), Containment::Superset);
        assert_eq!(
            x.compare_in(&id(&r, &["x^2"]), &MonomialOrder::Lex),
            Containment::Superset
        );
    }

    #[test]
    fn fixedness() {
        let r = RingContext::with_weights(&["a6", "a4", "a2"], &[6, 4, 2]).unwrap();
        assert!(!id(&r, &["a6 + a4"]).is_fixed().unwrap());
        assert!(id(&r, &["a6*a2 - a4^2", "a2"]).is_fixed().unwrap());
        assert!(matches!(
            id(&ring(&["x"]), &["x"]).is_fixed(),
            Err(Error::MissingWeights)
        ));
    }
}
