use std::collections::BTreeMap;

use super::{Polynomial, RingContext};
use crate::error::{Error, Result};

/// A ring homomorphism given by the images of the source variables.
///
/// Variables without an image are allowed as long as the polynomials being
/// mapped do not use them.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: RingContext,
    target: RingContext,
    images: Vec<Option<Polynomial>>,
}

impl RingMap {
    pub fn new<'a>(
        source: &RingContext,
        target: &RingContext,
        images: impl IntoIterator<Item = (&'a str, Polynomial)>,
    ) -> Result<Self> {
        let mut slots: Vec<Option<Polynomial>> = vec![None; source.nvars()];
        for (name, img) in images {
            let i = source.require_index(name)?;
            if img.context() != target {
                return Err(Error::ContextMismatch);
            }
            slots[i] = Some(img);
        }
        Ok(RingMap {
            source: source.clone(),
            target: target.clone(),
            images: slots,
        })
    }

    pub fn identity(ctx: &RingContext) -> Self {
        RingMap {
            source: ctx.clone(),
            target: ctx.clone(),
            images: (0..ctx.nvars()).map(|i| Some(Polynomial::var(ctx, i))).collect(),
        }
    }

    /// Permutes variables by name: `pairs` lists `(x, y)` meaning `x ↦ y`;
    /// unlisted variables stay fixed.
    pub fn renaming(ctx: &RingContext, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut map = Self::identity(ctx);
        for (from, to) in pairs {
            let i = ctx.require_index(from)?;
            let j = ctx.require_index(to)?;
            map.images[i] = Some(Polynomial::var(ctx, j));
        }
        Ok(map)
    }

    pub fn source(&self) -> &RingContext {
        &self.source
    }

    pub fn target(&self) -> &RingContext {
        &self.target
    }

    /// True when every image is a form of degree at most one.
    pub fn is_linear(&self) -> bool {
        self.images.iter().flatten().all(|p| p.total_degree().unwrap_or(0) <= 1)
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.context() != &self.source {
            return Err(Error::ContextMismatch);
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); self.source.nvars()];
        let mut out = Polynomial::zero(&self.target);
        for (m, c) in p.terms() {
            let mut term = Polynomial::constant(&self.target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = self.images[i]
                    .as_ref()
                    .ok_or_else(|| Error::UnmappedVariable(self.source.name(i).to_string()))?;
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(Polynomial::one(&self.target));
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * img;
                    cache.push(next);
                }
                term = &term * &cache[e as usize];
            }
            out = &out + &term;
        }
        Ok(out)
    }
}

/// Applies a variable ↦ linear-form substitution.
pub fn substitute_linear(p: &Polynomial, map: &RingMap) -> Result<Polynomial> {
    map.apply(p)
}

/// Decomposition of a polynomial by torus weight.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSplit {
    pub components: BTreeMap<i64, Polynomial>,
    pub is_homogeneous: bool,
}

/// Splits `p` into components of constant weighted degree.
pub fn weighted_degree_split(p: &Polynomial) -> Result<WeightSplit> {
    let ctx = p.context();
    let weights = ctx.weights().ok_or(Error::MissingWeights)?;
    let mut buckets: BTreeMap<i64, Vec<_>> = BTreeMap::new();
    for (m, c) in p.terms() {
        buckets
            .entry(m.weighted_degree(weights))
            .or_default()
            .push((m.clone(), c.clone()));
    }
    let components: BTreeMap<i64, Polynomial> = buckets
        .into_iter()
        .map(|(w, terms)| (w, Polynomial::from_terms(ctx, terms)))
        .collect();
    let is_homogeneous = components.len() <= 1;
    Ok(WeightSplit {
        components,
        is_homogeneous,
    })
}

/// True when `p` has a single torus weight (zero counts as homogeneous).
pub fn is_weighted_homogeneous(p: &Polynomial) -> Result<bool> {
    Ok(weighted_degree_split(p)?.is_homogeneous)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_generators;
    use proptest::prelude::*;

    fn orbit() -> RingContext {
        RingContext::with_weights(
            &["a6", "a4", "a2", "a0", "am2", "am4", "am6"],
            &[6, 4, 2, 0, -2, -4, -6],
        )
        .unwrap()
    }

    #[test]
    fn first_orbit_quadric_has_single_weight_four() {
        let r = orbit();
        let p = Polynomial::parse(&r, "a6*am2 - 4*a4*a0 + 3*a2^2").unwrap();
        let split = weighted_degree_split(&p).unwrap();
        assert!(split.is_homogeneous);
        assert_eq!(split.components.keys().copied().collect::<Vec<_>>(), vec![4]);
    }

    #[test]
    fn mixed_weights_split_apart() {
        let r = orbit();
        let p = Polynomial::parse(&r, "a6 + am6").unwrap();
        let split = weighted_degree_split(&p).unwrap();
        assert!(!split.is_homogeneous);
        assert_eq!(split.components[&6].to_string(), "a6");
        assert_eq!(split.components[&-6].to_string(), "am6");
        let one = weighted_degree_split(&Polynomial::one(&r)).unwrap();
        assert_eq!(one.components.keys().copied().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn missing_weights_is_an_error() {
        let r = RingContext::new(&["x"]).unwrap();
        assert_eq!(
            weighted_degree_split(&Polynomial::var(&r, 0)),
            Err(Error::MissingWeights)
        );
    }

    #[test]
    fn swap_and_identity_substitutions() {
        let r = RingContext::new(&["x", "y"]).unwrap();
        let p = Polynomial::parse(&r, "x^2*y").unwrap();
        let swap = RingMap::renaming(&r, &[("x", "y"), ("y", "x")]).unwrap();
        assert_eq!(substitute_linear(&p, &swap).unwrap().to_string(), "x*y^2");
        assert_eq!(substitute_linear(&p, &RingMap::identity(&r)).unwrap(), p);
    }

    #[test]
    fn unmapped_variable_is_reported() {
        let src = RingContext::new(&["p", "q"]).unwrap();
        let dst = RingContext::new(&["a"]).unwrap();
        let map = RingMap::new(&src, &dst, [("p", Polynomial::var(&dst, 0))]).unwrap();
        let p = Polynomial::parse(&src, "p").unwrap();
        assert_eq!(map.apply(&p).unwrap().to_string(), "a");
        let q = Polynomial::parse(&src, "p*q").unwrap();
        assert_eq!(map.apply(&q), Err(Error::UnmappedVariable("q".into())));
    }

    fn small_poly(ctx: RingContext) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u16..3, 3), -4i64..5), 0..5).prop_map(move |terms| {
            Polynomial::from_terms(
                &ctx,
                terms.into_iter().map(|(e, c)| {
                    (
                        crate::poly::Monomial::from_exponents(&e),
                        crate::poly::Rational::from_integer(c.into()),
                    )
                }),
            )
        })
    }

    fn weighted3() -> RingContext {
        RingContext::with_weights(&["x", "y", "z"], &[2, -1, 0]).unwrap()
    }

    proptest! {
        #[test]
        fn substitution_is_a_ring_homomorphism(p in small_poly(weighted3()), q in small_poly(weighted3())) {
            let r = weighted3();
            let gens = parse_generators(&r, &["x + 2*y", "y - 1/3*z", "3*x - z"]).unwrap();
            let map = RingMap::new(&r, &r, [("x", gens[0].clone()), ("y", gens[1].clone()), ("z", gens[2].clone())]).unwrap();
            prop_assert!(map.is_linear());
            prop_assert_eq!(map.apply(&(&p * &q)).unwrap(), &map.apply(&p).unwrap() * &map.apply(&q).unwrap());
            prop_assert_eq!(map.apply(&(&p + &q)).unwrap(), &map.apply(&p).unwrap() + &map.apply(&q).unwrap());
        }

        #[test]
        fn weight_components_sum_back(p in small_poly(weighted3())) {
            let split = weighted_degree_split(&p).unwrap();
            let total = split.components.values().fold(Polynomial::zero(p.context()), |acc, c| &acc + c);
            prop_assert_eq!(total, p);
        }

        #[test]
        fn ring_axioms(p in small_poly(weighted3()), q in small_poly(weighted3()), s in small_poly(weighted3())) {
            prop_assert_eq!(&(&p + &q) * &s, &(&p * &s) + &(&q * &s));
            prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&p + &q, &q + &p);
        }
    }
}
