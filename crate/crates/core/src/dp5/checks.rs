//! Verification checks for the threefold, grouped by topic.

use std::time::Instant;

use super::fixed::{fixed_conics, fixed_cubics, fixed_lines, linear_forms_in, linear_span_dim, FixedCurveRecord};
use super::model::Dp5Model;
use super::residual::{line_ideal, QuarticEnumeration};
use super::tables::{FIXED_CONICS, FIXED_CUBICS, FIXED_LINES, FIXED_QUARTICS, NORMAL_QUARTIC, NORMAL_QUARTIC_MATRIX};
use crate::error::Result;
use crate::hilbert::{hilbert_function, hilbert_function_linear, hilbert_polynomial, HilbertPolynomial};
use crate::homspaces::graded_hom_dimension_relative;
use crate::ideal::{Containment, Ideal};
use crate::par;
use crate::poly::{MonomialOrder, Polynomial, Rational};
use crate::report::Check;

fn fail_on_error(id: &str, cite: &str, e: crate::error::Error) -> Check {
    Check::new(id, cite, false, "computation succeeds", format!("error: {e}"))
}

/// Records the elapsed time of a group on its first check.
fn stamp(mut checks: Vec<Check>, start: Instant) -> Vec<Check> {
    if let Some(c) = checks.first_mut() {
        c.ms = start.elapsed().as_millis() as u64;
    }
    checks
}

/// Substituted Plücker ideal equals the orbit ideal of `X5`.
pub fn coordinate_change_check(model: &Dp5Model) -> Check {
    const CITE: &str = "linear embedding of the Plücker model into orbit coordinates";
    Check::timed("coordinate-change", CITE, || {
        let run = || -> Result<(bool, String)> {
            let mut notes = Vec::new();
            for f in &model.linear_forms {
                let img = model.coordinate_change.apply(f)?;
                if !img.is_zero() {
                    notes.push(format!("linear form {f} maps to {img}"));
                }
            }
            for q in &model.grassmannian {
                let img = model.coordinate_change.apply(q)?;
                if !model.x5.contains(&img) {
                    notes.push(format!("relation {q} maps to {img}, not in the quadric ideal"));
                }
            }
            let image = model.to_orbit(&model.plucker_ideal)?;
            for q in model.x5.generators() {
                if !image.contains(q) {
                    notes.push(format!("quadric {q} not in the image ideal"));
                }
            }
            let same_gb = image.reduced_generators() == model.x5.reduced_generators();
            if !same_gb {
                notes.push("reduced Gröbner bases differ".into());
            }
            Ok((
                notes.is_empty(),
                if notes.is_empty() {
                    "equal reduced Gröbner bases".into()
                } else {
                    notes.join("; ")
                },
            ))
        };
        match run() {
            Ok((ok, actual)) => (ok, "image ideal equals the five-quadric ideal".into(), actual),
            Err(e) => (false, "computation succeeds".into(), format!("error: {e}")),
        }
    })
}

/// `HP(S/I_{X5}) = 5/6 m³ + 5/2 m² + 8/3 m + 1`, cross-checked against
/// a monomial-count Hilbert function through degree 8.
pub fn x5_global_check(model: &Dp5Model, window: u32) -> Check {
    const CITE: &str = "Hilbert polynomial of the quintic threefold";
    Check::timed("x5-hilbert-polynomial", CITE, || {
        let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
        let expected = HilbertPolynomial::new(vec![r(1, 1), r(8, 3), r(5, 2), r(5, 6)]);
        let hp = match hilbert_polynomial(&model.x5) {
            Ok(hp) => hp,
            Err(e) => return (false, expected.to_string(), format!("error: {e}")),
        };
        let mut mismatches = Vec::new();
        for d in 0..=window {
            let direct = hilbert_function_linear(&model.x5, d).unwrap_or(u64::MAX);
            if d >= 2 && hp.eval(d as i64) != Rational::from_integer((direct as i64).into()) {
                mismatches.push(format!("HP({d}) != HF({d}) = {direct}"));
            }
        }
        let degree = hp.leading_degree();
        let hf1 = hilbert_function(&model.x5, 1).unwrap_or(0);
        let ok =
            hp == expected && mismatches.is_empty() && hf1 == 7 && degree == Some(r(5, 1)) && hp.dimension() == Some(3);
        (
            ok,
            format!("{expected}, HF(1) = 7, degree 5, agreement with direct HF for 2 <= d <= {window}"),
            format!(
                "{hp}, HF(1) = {hf1}, degree {}, {}",
                degree.map(|d| d.to_string()).unwrap_or_else(|| "?".into()),
                if mismatches.is_empty() {
                    "agreement".to_string()
                } else {
                    mismatches.join(", ")
                }
            ),
        )
    })
}

fn tangent_summary(recs: &[FixedCurveRecord]) -> String {
    recs.iter()
        .map(|r| match r.tangent {
            Some(t) => format!(
                "{}:{}",
                r.provenance,
                t.relative.map(|x| x.to_string()).unwrap_or_else(|| "-".into())
            ),
            None => format!("{}:-", r.provenance),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn attach_tangents(model: &Dp5Model, recs: &mut [FixedCurveRecord]) -> Result<()> {
    let done = par::map(recs, |r| {
        let mut r = r.clone();
        r.compute_tangent(model).map(|_| r)
    });
    for (slot, r) in recs.iter_mut().zip(done) {
        *slot = r?;
    }
    Ok(())
}

/// Shared shape of the degree 1-3 checks.
fn degree_checks(
    model: &Dp5Model,
    degree: u32,
    noun: &str,
    cite: &str,
    expected_count: usize,
    records: Result<Vec<FixedCurveRecord>>,
    matches: &dyn Fn(&[FixedCurveRecord]) -> Result<Vec<Check>>,
) -> Vec<Check> {
    let start = Instant::now();
    let mut recs = match records {
        Ok(r) => r,
        Err(e) => return vec![fail_on_error(&format!("{noun}-count"), cite, e)],
    };
    let mut out = vec![Check::new(
        &format!("{noun}-count"),
        cite,
        recs.len() == expected_count,
        format!("{expected_count} {noun}"),
        format!("{} {noun}", recs.len()),
    )];
    match matches(&recs) {
        Ok(c) => out.extend(c),
        Err(e) => out.push(fail_on_error(&format!("{noun}-match"), cite, e)),
    }
    let bad: Vec<String> = recs
        .iter()
        .filter_map(|r| {
            let f = r.invariant_failures(model);
            (!f.is_empty()).then(|| format!("{}: {}", r.provenance, f.join(", ")))
        })
        .collect();
    out.push(Check::new(
        &format!("{noun}-invariants"),
        cite,
        bad.is_empty(),
        format!(
            "HP {}, weighted-homogeneous, contains the quadrics",
            HilbertPolynomial::linear(degree as i64, 1)
        ),
        if bad.is_empty() {
            "all hold".to_string()
        } else {
            bad.join("; ")
        },
    ));
    let want = 2 * degree as usize;
    match attach_tangents(model, &mut recs) {
        Ok(()) => {
            let ok = recs.iter().all(|r| r.tangent.and_then(|t| t.relative) == Some(want));
            out.push(Check::new(
                &format!("{noun}-tangent"),
                "tangent dimension ladder inside the threefold",
                ok,
                format!(
                    "relative tangent dimension {want} at every {}",
                    noun.trim_end_matches('s')
                ),
                tangent_summary(&recs),
            ));
        }
        Err(e) => out.push(fail_on_error(&format!("{noun}-tangent"), cite, e)),
    }
    stamp(out, start)
}

pub fn fixed_line_checks(model: &Dp5Model) -> Vec<Check> {
    let cite = "three torus-fixed lines";
    degree_checks(model, 1, "lines", cite, 3, fixed_lines(model), &|recs| {
        let mut out = Vec::new();
        for (label, gens) in FIXED_LINES.iter() {
            let printed = model.orbit_ideal(gens)?;
            let hit: Vec<&str> = recs
                .iter()
                .filter(|r| r.ideal == printed)
                .map(|r| r.provenance.as_str())
                .collect();
            out.push(Check::new(
                &format!("line-{label}"),
                &format!("fixed line {label}"),
                hit.len() == 1,
                printed.to_string(),
                if hit.is_empty() {
                    "no matching family".into()
                } else {
                    hit.join(", ")
                },
            ));
        }
        Ok(out)
    })
}

pub fn fixed_conic_checks(model: &Dp5Model) -> Vec<Check> {
    let cite = "five torus-fixed conics";
    degree_checks(model, 2, "conics", cite, 5, fixed_conics(model), &|recs| {
        let mut out = Vec::new();
        for (k, (label, gens)) in FIXED_CONICS.iter().enumerate() {
            let printed = model.orbit_ideal(gens)?;
            let rel = recs.get(k).map(|r| r.ideal.compare(&printed));
            out.push(Check::new(
                &format!("conic-{label}"),
                &format!("fixed conic list, entry {label}"),
                rel == Some(Containment::Equal),
                printed.to_string(),
                match (rel, recs.get(k)) {
                    (Some(Containment::Equal), Some(r)) => format!("equal ({})", r.provenance),
                    (Some(c), Some(r)) => format!("{c}: {}", r.ideal),
                    _ => "missing".into(),
                },
            ));
        }
        Ok(out)
    })
}

pub fn fixed_cubic_checks(model: &Dp5Model) -> Vec<Check> {
    let cite = "ten torus-fixed twisted cubics";
    degree_checks(model, 3, "cubics", cite, 10, fixed_cubics(model), &|recs| {
        let mut out = Vec::new();
        for row in FIXED_CUBICS.iter() {
            let printed = model.orbit_ideal(row.gens)?;
            let hit: Vec<&str> = recs
                .iter()
                .filter(|r| r.ideal == printed)
                .map(|r| r.provenance.as_str())
                .collect();
            out.push(Check::new(
                &format!("cubic-row{}", row.row),
                &format!("fixed twisted cubic list, row {} ({})", row.row, row.label),
                hit.len() == 1,
                printed.to_string(),
                if hit.is_empty() {
                    "no Schubert cubic matches".into()
                } else {
                    hit.join(", ")
                },
            ));
        }
        Ok(out)
    })
}

/// `h^0(I_L(1))` for each fixed line in `P^6`.
pub fn line_sections_check(model: &Dp5Model) -> Check {
    Check::timed("line-sections", "linear forms vanishing on a fixed line", || {
        let dims: Vec<String> = (0..3)
            .map(|k| match line_ideal(model, k).and_then(|l| linear_forms_in(&l)) {
                Ok(n) => n.to_string(),
                Err(e) => format!("error {e}"),
            })
            .collect();
        (dims.iter().all(|d| d == "5"), "5, 5, 5".into(), dims.join(", "))
    })
}

/// Hilbert polynomial arithmetic of the residual construction.
pub fn residual_checks(en: &QuarticEnumeration) -> Vec<Check> {
    let start = Instant::now();
    let cite = "residual curve of a line in an elliptic quintic";
    let five_m = HilbertPolynomial::linear(5, 0);
    let quartic = HilbertPolynomial::linear(4, 1);
    let diff = HilbertPolynomial::linear(1, -1);
    let two = HilbertPolynomial::linear(0, 2);
    let bad_e5: Vec<String> = en
        .quartics
        .iter()
        .filter(|q| q.e5_hilbert != five_m)
        .map(|q| format!("{}: {}", q.name(), q.e5_hilbert))
        .collect();
    let bad_c: Vec<String> = en
        .quartics
        .iter()
        .filter(|q| q.curve.hilbert != quartic)
        .map(|q| format!("{}: {}", q.name(), q.curve.hilbert))
        .collect();
    let bad_diff: Vec<String> = en
        .quartics
        .iter()
        .filter(|q| q.e5_hilbert.sub(&q.curve.hilbert) != diff)
        .map(|q| format!("{}: {}", q.name(), q.e5_hilbert.sub(&q.curve.hilbert)))
        .collect();
    let secants: Vec<_> = en
        .quartics
        .iter()
        .filter_map(|q| q.secant.as_ref().map(|s| (q, s)))
        .collect();
    let bad_sec: Vec<String> = secants
        .iter()
        .filter(|(_, s)| **s != two)
        .map(|(q, s)| format!("{}: {}", q.name(), s))
        .collect();
    let list = |v: &[String]| {
        if v.is_empty() {
            format!("all {} hold", en.quartics.len())
        } else {
            v.join("; ")
        }
    };
    let out = vec![
        Check::new(
            "residual-e5",
            cite,
            en.quartics.len() == 30 && bad_e5.is_empty(),
            "HP(E5) = 5*m in all 30 cases",
            list(&bad_e5),
        ),
        Check::new(
            "residual-quartic-hp",
            cite,
            bad_c.is_empty(),
            "HP(C) = 4*m + 1 in all 30 cases",
            list(&bad_c),
        ),
        Check::new(
            "residual-difference",
            cite,
            bad_diff.is_empty(),
            "HP(E5) - HP(C) = m - 1",
            list(&bad_diff),
        ),
        Check::new(
            "residual-secant",
            "length of the intersection of the residual quartic with its line",
            bad_sec.is_empty(),
            "HP(C + L) = 2 whenever L is not a component",
            format!(
                "{} cases with L not a component; {}",
                secants.len(),
                if bad_sec.is_empty() {
                    "all equal 2".to_string()
                } else {
                    bad_sec.join("; ")
                }
            ),
        ),
    ];
    stamp(out, start)
}

/// Counts, table matches and invariants of the thirty fixed quartics.
pub fn quartic_checks(model: &Dp5Model, en: &QuarticEnumeration) -> Vec<Check> {
    let start = Instant::now();
    let cite = "thirty torus-fixed points of the Grassmannian bundle";
    let mut out = vec![Check::new(
        "quartics-distinct",
        cite,
        en.quartics.len() == 30 && en.distinct == 30,
        "30 distinct saturated ideals",
        format!("{} computed, {} distinct", en.quartics.len(), en.distinct),
    )];

    let bad: Vec<String> = en
        .quartics
        .iter()
        .filter_map(|q| {
            let mut f = q.curve.invariant_failures(model);
            match linear_span_dim(&q.curve.ideal) {
                Ok(4) => {}
                Ok(s) => f.push(format!("span P^{s}")),
                Err(e) => f.push(e.to_string()),
            }
            (!f.is_empty()).then(|| format!("{}: {}", q.name(), f.join(", ")))
        })
        .collect();
    out.push(Check::new(
        "quartics-invariants",
        "fixed quartics span a four-dimensional linear space",
        bad.is_empty(),
        "HP 4*m + 1, weighted-homogeneous, contains the quadrics, span P^4",
        if bad.is_empty() {
            "all 30 hold".to_string()
        } else {
            bad.join("; ")
        },
    ));

    let orphans: Vec<String> = en
        .mirror
        .iter()
        .enumerate()
        .filter(|(_, m)| m.is_none())
        .map(|(k, _)| en.quartics[k].name())
        .collect();
    out.push(Check::new(
        "quartics-involution",
        "symmetry a_j <-> a_-j of the fixed quartic list",
        orphans.is_empty(),
        "the involution permutes the 30 ideals",
        if orphans.is_empty() {
            "permutation".to_string()
        } else {
            format!("images outside the set: {}", orphans.join(", "))
        },
    ));

    let row_hits = en.row_to_classes();
    let rnc_classes: Vec<usize> = en
        .classes
        .iter()
        .enumerate()
        .filter(|(_, c)| c.iter().any(|k| en.normal_quartic.contains(k)))
        .map(|(ci, _)| ci)
        .collect();
    let matched_rows = row_hits.iter().filter(|(_, h)| h.len() == 1).count();
    let mut used: Vec<usize> = row_hits.iter().flat_map(|(_, h)| h.iter().copied()).collect();
    used.extend(rnc_classes.iter().copied());
    used.sort();
    let covered = used.windows(2).all(|w| w[0] != w[1]) && used.len() == en.classes.len();
    out.push(Check::new(
        "quartics-classes",
        "reducible fixed quartic list up to symmetry, plus the fixed rational normal quartic",
        matched_rows == FIXED_QUARTICS.len() && rnc_classes.len() == 1 && covered,
        "16 involution classes: 15 match the printed reducible rows one-to-one, 1 is the rational normal quartic",
        format!(
            "{} classes; {} rows matched by exactly one class; {} class(es) equal the rational normal quartic; every class accounted for: {covered}",
            en.classes.len(),
            matched_rows,
            rnc_classes.len()
        ),
    ));

    for (row, hits) in &row_hits {
        let printed_row = &FIXED_QUARTICS[row - 1];
        let members: Vec<String> = hits
            .iter()
            .flat_map(|&ci| en.classes[ci].iter().map(|&k| en.quartics[k].name()))
            .collect();
        out.push(Check::new(
            &format!("quartic-row{row}"),
            &format!("reducible fixed quartic list, row {row} ({})", printed_row.label),
            hits.len() == 1,
            printed_row.gens.join(", "),
            if members.is_empty() {
                "no residual quartic matches".into()
            } else {
                format!("matched by {}", members.join(" and "))
            },
        ));
    }

    let symmetric: Vec<String> = en
        .self_mirrored()
        .into_iter()
        .map(|k| match en.table_row[k] {
            Some(r) => format!("row {r} ({})", en.quartics[k].name()),
            None if en.normal_quartic.contains(&k) => format!("normal quartic ({})", en.quartics[k].name()),
            None => en.quartics[k].name(),
        })
        .collect();
    let starred: Vec<usize> = FIXED_QUARTICS.iter().filter(|r| r.starred).map(|r| r.row).collect();
    let starred_symmetric = starred
        .iter()
        .all(|r| symmetric.iter().any(|s| s.starts_with(&format!("row {r} "))));
    out.push(Check::new(
        "quartics-starred-row",
        "the marked reducible quartic is its own mirror image",
        starred_symmetric,
        format!("row(s) {starred:?} fixed by the involution"),
        format!("self-mirrored: {}", symmetric.join(", ")),
    ));

    let tangents: Vec<Option<usize>> = en
        .quartics
        .iter()
        .map(|q| q.curve.tangent.and_then(|t| t.relative))
        .collect();
    if tangents.iter().all(Option::is_some) {
        let off: Vec<String> = en
            .quartics
            .iter()
            .zip(&tangents)
            .filter(|(_, t)| **t != Some(8))
            .map(|(q, t)| format!("{}: {}", q.name(), t.unwrap()))
            .collect();
        let ambient: Vec<usize> = en
            .quartics
            .iter()
            .filter_map(|q| q.curve.tangent.map(|t| t.ambient))
            .collect();
        out.push(Check::new(
            "quartics-tangent",
            "eight-dimensional tangent spaces at the fixed quartics",
            off.is_empty(),
            "relative tangent dimension 8 at all 30",
            format!(
                "{}; ambient dimensions {}..{}",
                if off.is_empty() {
                    "all 8".to_string()
                } else {
                    off.join(", ")
                },
                ambient.iter().min().unwrap_or(&0),
                ambient.iter().max().unwrap_or(&0)
            ),
        ));
    }
    stamp(out, start)
}

fn parse_matrix(model: &Dp5Model) -> Result<Vec<Vec<Polynomial>>> {
    NORMAL_QUARTIC_MATRIX
        .iter()
        .map(|row| row.iter().map(|s| Polynomial::parse(&model.orbit, s)).collect())
        .collect()
}

/// The irreducible fixed quartic from 2×2 minors.
pub fn rnc_example_checks(model: &Dp5Model) -> Vec<Check> {
    let start = Instant::now();
    let cite = "unique torus-fixed rational normal quartic";
    let run = || -> Result<Vec<Check>> {
        let m = parse_matrix(model)?;
        let mut gens = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                gens.push(&(&m[0][a] * &m[1][b]) - &(&m[0][b] * &m[1][a]));
            }
        }
        gens.push(Polynomial::var_named(&model.orbit, "a6")?);
        gens.push(Polynomial::var_named(&model.orbit, "am6")?);
        let minors = Ideal::new(&model.orbit, gens)?.saturate_irrelevant()?;
        let printed = model.orbit_ideal(&NORMAL_QUARTIC)?;
        let rel = minors.compare(&printed);
        let mut rec = FixedCurveRecord::new(4, minors, "2x2 minors plus <a6, am6>".into())?;
        let inv = rec.invariant_failures(model);
        let span = linear_span_dim(&rec.ideal)?;
        rec.compute_tangent(model)?;
        let t = rec.tangent.expect("just computed");
        Ok(vec![
            Check::new(
                "rnc-minors",
                cite,
                rel == Containment::Equal,
                printed.to_string(),
                format!("{rel}: {}", rec.ideal),
            ),
            Check::new(
                "rnc-invariants",
                cite,
                inv.is_empty() && span == 4,
                "HP 4*m + 1, weighted-homogeneous, contains the quadrics, span P^4",
                format!(
                    "HP {}, span P^{span}{}",
                    rec.hilbert,
                    if inv.is_empty() {
                        String::new()
                    } else {
                        format!("; {}", inv.join(", "))
                    }
                ),
            ),
            Check::new(
                "rnc-tangent",
                "tangent space at the rational normal quartic (reported)",
                true,
                "reported",
                format!("relative {}, ambient {}", t.relative.unwrap_or(0), t.ambient),
            ),
        ])
    };
    stamp(
        run().unwrap_or_else(|e| vec![fail_on_error("rnc-minors", cite, e)]),
        start,
    )
}

/// `dim Hom(I_D, (S/I_L)(−1))_0 ≤ 2` for the cubic `D = l0 + l1 + l2` and
/// `L = l0`, relative to `X5`, over several presentations and orders.
pub fn hom_bound_check(model: &Dp5Model) -> Check {
    let cite = "Hom bound from a reducible cubic to a fixed line, twisted by -1";
    Check::timed("hom-bound", cite, || {
        let run = || -> Result<Vec<(String, usize)>> {
            let row = FIXED_CUBICS.iter().find(|r| r.row == 4).expect("row 4 exists");
            let printed = model.orbit_ideal(row.gens)?;
            let reduced = Ideal::new(&model.orbit, printed.reduced_generators())?;
            let l = line_ideal(model, 0)?;
            let mut out = Vec::new();
            for (name, d) in [("printed", &printed), ("reduced", &reduced)] {
                for (oname, order) in [("grevlex", MonomialOrder::GrevLex), ("lex", MonomialOrder::Lex)] {
                    let dim = graded_hom_dimension_relative(d, &l, -1, &model.x5, &order)?;
                    out.push((format!("{name}/{oname}"), dim));
                }
            }
            Ok(out)
        };
        match run() {
            Ok(dims) => {
                let agree = dims.windows(2).all(|w| w[0].1 == w[1].1);
                let ok = agree && dims.iter().all(|(_, d)| *d <= 2);
                let actual = dims
                    .iter()
                    .map(|(n, d)| format!("{n} {d}"))
                    .collect::<Vec<_>>()
                    .join(", ");
                (ok, "at most 2, independent of presentation".into(), actual)
            }
            Err(e) => (false, "at most 2".into(), format!("error: {e}")),
        }
    })
}
