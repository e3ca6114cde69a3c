//! Seeded randomized property suites over small ideals (at most four
//! variables, degree at most three).

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::groebner::GroebnerBasis;
use crate::hilbert::{hilbert_function, hilbert_function_from_series, hilbert_function_linear};
use crate::homspaces::graded_hom_dimension;
use crate::ideal::{Containment, Ideal};
use crate::par;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, RingContext};
use crate::report::Check;

#[derive(Clone, Copy, Debug)]
pub struct PropertyConfig {
    pub seed: u64,
    /// Cases per property family.
    pub cases: usize,
    /// Hilbert function window `0..=check_degree`.
    pub check_degree: u32,
}

impl Default for PropertyConfig {
    fn default() -> Self {
        PropertyConfig {
            seed: 0x5eed,
            cases: 20,
            check_degree: 8,
        }
    }
}

const VARS: [&str; 4] = ["x", "y", "z", "w"];

pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Gen {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn ring(&mut self, min: usize, max: usize) -> RingContext {
        let n = self.rng.gen_range(min..=max);
        RingContext::new(&VARS[..n]).expect("distinct names")
    }

    fn coefficient(&mut self) -> Rational {
        let mut c = 0;
        while c == 0 {
            c = self.rng.gen_range(-5i64..=5);
        }
        Rational::from_integer(c.into())
    }

    fn monomial(&mut self, n: usize, d: u32) -> Monomial {
        let mut e = vec![0u16; n];
        for _ in 0..d {
            e[self.rng.gen_range(0..n)] += 1;
        }
        Monomial::from_exponents(&e)
    }

    /// Random polynomial with up to `terms` terms; homogeneous of degree
    /// `deg` when `homogeneous`, otherwise of degree at most `deg`.
    pub fn polynomial(&mut self, ctx: &RingContext, deg: u32, terms: usize, homogeneous: bool) -> Polynomial {
        let n = ctx.nvars();
        loop {
            let k = self.rng.gen_range(1..=terms);
            let p = Polynomial::from_terms(
                ctx,
                (0..k).map(|_| {
                    let d = if homogeneous { deg } else { self.rng.gen_range(0..=deg) };
                    (self.monomial(n, d), self.coefficient())
                }),
            );
            if !p.is_zero() && (homogeneous || !p.is_constant()) {
                return p;
            }
        }
    }

    pub fn ideal(&mut self, ctx: &RingContext, gens: usize, homogeneous: bool) -> Ideal {
        let k = self.rng.gen_range(1..=gens);
        let polys = (0..k)
            .map(|_| {
                let d = self.rng.gen_range(1..=3);
                self.polynomial(ctx, d, 3, homogeneous)
            })
            .collect();
        Ideal::new(ctx, polys).expect("same context")
    }

    pub fn monomial_ideal(&mut self, ctx: &RingContext) -> Ideal {
        let k = self.rng.gen_range(1..=3);
        let polys = (0..k)
            .map(|_| {
                let d = self.rng.gen_range(1..=3);
                let m = self.monomial(ctx.nvars(), d);
                Polynomial::monomial(ctx, m, Rational::from_integer(1.into()))
            })
            .collect();
        Ideal::new(ctx, polys).expect("same context")
    }
}

/// Runs `case` on seeds `seed, seed+1, …` and folds the failures into one check.
fn family<F>(id: &str, cite: &str, cfg: &PropertyConfig, salt: u64, case: F) -> Check
where
    F: Fn(&mut Gen) -> Result<std::result::Result<(), String>> + Sync,
{
    let start = Instant::now();
    let seeds: Vec<u64> = (0..cfg.cases as u64)
        .map(|k| cfg.seed.wrapping_add(salt << 32).wrapping_add(k))
        .collect();
    let outcomes = par::map(&seeds, |&s| (s, case(&mut Gen::new(s))));
    let failures: Vec<String> = outcomes
        .into_iter()
        .filter_map(|(s, r)| match r {
            Ok(Ok(())) => None,
            Ok(Err(msg)) => Some(format!("seed {s}: {msg}")),
            Err(e) => Some(format!("seed {s}: error {e}")),
        })
        .collect();
    let mut c = Check::new(
        id,
        cite,
        failures.is_empty(),
        format!("{} cases pass", cfg.cases),
        if failures.is_empty() {
            format!("{} cases pass", cfg.cases)
        } else {
            format!("{} of {} failed: {}", failures.len(), cfg.cases, failures.join("; "))
        },
    );
    c.ms = start.elapsed().as_millis() as u64;
    c
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gb_axioms(g: &mut Gen) -> Result<std::result::Result<(), String>> {
    let ctx = g.ring(2, 4);
    let i = g.ideal(&ctx, 3, false);
    for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
        let gb = GroebnerBasis::compute(&ctx, i.generators(), &order, true);
        if !gb.satisfies_buchberger_criterion() {
            return Ok(Err(format!("{i}: S-pair criterion fails in {order:?}")));
        }
        if !gb.is_reduced() {
            return Ok(Err(format!("{i}: basis not reduced in {order:?}")));
        }
        if !gb.cofactor_identity_holds() {
            return Ok(Err(format!("{i}: cofactor identity fails in {order:?}")));
        }
        for f in i.generators() {
            if !gb.normal_form(f).is_zero() {
                return Ok(Err(format!("{i}: generator {f} does not reduce to zero")));
            }
        }
    }
    Ok(Ok(()))
}

fn quotient_times_divisor(g: &mut Gen) -> Result<std::result::Result<(), String>> {
    let ctx = g.ring(2, 3);
    let i = g.ideal(&ctx, 3, false);
    let j = g.ideal(&ctx, 2, false);
    let q = i.quotient(&j)?.ideal;
    let prod = q.product(&j)?;
    Ok(
        ensure(i.contains_ideal(&prod), || format!("({i} : {j}) * {j} not inside {i}"))
            .and_then(|_| ensure(q.contains_ideal(&i), || format!("{i} not inside ({i} : {j})"))),
    )
}

fn saturation_idempotent(g: &mut Gen) -> Result<std::result::Result<(), String>> {
    let ctx = g.ring(2, 3);
    let i = g.ideal(&ctx, 3, false);
    let j = g.ideal(&ctx, 2, false);
    let s = i.saturation(&j)?;
    let ss = s.saturation(&j)?;
    Ok(
        ensure(s == ss, || format!("sat(sat({i}, {j})) = {ss} differs from {s}"))
            .and_then(|_| ensure(s.contains_ideal(&i), || format!("{i} not inside its saturation"))),
    )
}

fn intersection_and_product(g: &mut Gen) -> Result<std::result::Result<(), String>> {
    let ctx = g.ring(2, 3);
    let i = g.ideal(&ctx, 2, false);
    let j = g.ideal(&ctx, 2, false);
    let meet = i.intersection(&j)?;
    let prod = i.product(&j)?;
    let r = ensure(meet.contains_ideal(&prod), || {
        format!("{i}*{j} not inside the intersection")
    })
    .and_then(|_| {
        ensure(i.contains_ideal(&meet) && j.contains_ideal(&meet), || {
            "intersection escapes a factor".into()
        })
    });
    if r.is_err() {
        return Ok(r);
    }
    // monomial intersections are generated by pairwise lcms
    let a = g.monomial_ideal(&ctx);
    let b = g.monomial_ideal(&ctx);
    let one = Rational::from_integer(1.into());
    let mut lcms = Vec::new();
    for f in a.generators() {
        for h in b.generators() {
            let (mf, _) = f.terms().next().expect("monomial");
            let (mh, _) = h.terms().next().expect("monomial");
            lcms.push(Polynomial::monomial(&ctx, mf.lcm(mh), one.clone()));
        }
    }
    let expected = Ideal::new(&ctx, lcms)?;
    let got = a.intersection(&b)?;
    Ok(ensure(got.compare(&expected) == Containment::Equal, || {
        format!("{a} meet {b} = {got}, expected {expected}")
    }))
}

fn hilbert_two_methods(g: &mut Gen, window: u32) -> Result<std::result::Result<(), String>> {
    let ctx = g.ring(2, 4);
    let i = g.ideal(&ctx, 3, true);
    for d in 0..=window {
        let a = hilbert_function(&i, d)?;
        let b = hilbert_function_from_series(&i, d)?;
        let c = hilbert_function_linear(&i, d)?;
        if a != b || b != c {
            return Ok(Err(format!(
                "{i} at degree {d}: standard monomials {a}, series {b}, linear algebra {c}"
            )));
        }
    }
    Ok(Ok(()))
}

fn hom_presentation(g: &mut Gen) -> Result<std::result::Result<(), String>> {
    let ctx = g.ring(2, 3);
    let i = g.ideal(&ctx, 2, true);
    let j = g.ideal(&ctx, 2, true).sum(&i)?;
    let twist = g.rng.gen_range(-1i64..=1);
    let base = graded_hom_dimension(&i, &j, twist)?;
    let reduced = Ideal::new(&ctx, i.reduced_generators())?;
    let mut padded_gens = i.generators().to_vec();
    let x = Polynomial::var(&ctx, g.rng.gen_range(0..ctx.nvars()));
    padded_gens.push(&padded_gens[0] * &x);
    let padded = Ideal::new(&ctx, padded_gens)?;
    let a = graded_hom_dimension(&reduced, &j, twist)?;
    let b = graded_hom_dimension(&padded, &j, twist)?;
    Ok(ensure(base == a && a == b, || {
        format!("Hom({i}, S/{j}({twist})): given {base}, reduced {a}, padded {b}")
    }))
}

/// All property families; each contributes `cfg.cases` cases.
pub fn property_checks(cfg: &PropertyConfig) -> Vec<Check> {
    let window = cfg.check_degree;
    vec![
        family(
            "prop-gb-axioms",
            "Gröbner basis axioms: S-pairs, reducedness, cofactors",
            cfg,
            1,
            gb_axioms,
        ),
        family(
            "prop-quotient",
            "ideal quotient identity (I:J)J in I",
            cfg,
            2,
            quotient_times_divisor,
        ),
        family(
            "prop-saturation",
            "saturation is idempotent",
            cfg,
            3,
            saturation_idempotent,
        ),
        family(
            "prop-intersection",
            "intersection contains product; monomial lcm rule",
            cfg,
            4,
            intersection_and_product,
        ),
        family("prop-hilbert", "Hilbert function by three methods", cfg, 5, move |g| {
            hilbert_two_methods(g, window)
        }),
        family(
            "prop-hom-presentation",
            "graded Hom independent of the generating set",
            cfg,
            6,
            hom_presentation,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_is_deterministic() {
        let mut a = Gen::new(7);
        let mut b = Gen::new(7);
        let ra = a.ring(2, 4);
        let rb = b.ring(2, 4);
        assert_eq!(ra.names(), rb.names());
        assert_eq!(a.ideal(&ra, 3, true).to_string(), b.ideal(&rb, 3, true).to_string());
    }

    #[test]
    fn homogeneous_generators_are_homogeneous() {
        let mut g = Gen::new(11);
        for _ in 0..20 {
            let r = g.ring(2, 4);
            assert!(g.ideal(&r, 3, true).generators().iter().all(|p| p.is_homogeneous()));
        }
    }

    #[test]
    fn small_run_passes() {
        let cfg = PropertyConfig {
            seed: 3,
            cases: 4,
            check_degree: 5,
        };
        for c in property_checks(&cfg) {
            assert!(c.passed(), "{c:?}");
        }
    }
}
