//! The verification suite: selects and runs checks, aggregating a report.

use std::fmt;
use std::str::FromStr;

use crate::dp5::checks::{
    coordinate_change_check, fixed_conic_checks, fixed_cubic_checks, fixed_line_checks, hom_bound_check,
    line_sections_check, quartic_checks, residual_checks, rnc_example_checks, x5_global_check,
};
use crate::dp5::fixed::torus_fixed_grassmannian;
use crate::dp5::residual::{enumerate_fixed_quartics, QuarticEnumeration};
use crate::dp5::tables::{FIXED_LINES, V5_WEIGHTS};
use crate::dp5::{invariant_subspace_check, Dp5Model};
use crate::error::{Error, Result};
use crate::properties::{property_checks, PropertyConfig};
use crate::report::{Check, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    All,
    /// Model and coordinate change.
    Section2,
    /// Fixed points, lines, conics, cubics.
    Section3,
    /// Residual quartics.
    Section4,
    /// Fixed quartics, the normal quartic, Hom bounds.
    Section5,
    Properties,
}

impl Selector {
    pub const NAMES: [&'static str; 6] = ["all", "section-2", "section-3", "section-4", "section-5", "properties"];

    fn includes(self, other: Selector) -> bool {
        self == Selector::All || self == other
    }
}

impl FromStr for Selector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Selector> {
        Ok(match s {
            "all" => Selector::All,
            "section-2" => Selector::Section2,
            "section-3" => Selector::Section3,
            "section-4" => Selector::Section4,
            "section-5" => Selector::Section5,
            "properties" => Selector::Properties,
            _ => {
                return Err(Error::Invalid(format!(
                    "unknown selector {s}; expected one of {}",
                    Selector::NAMES.join(", ")
                )))
            }
        })
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Selector::All,
            Selector::Section2,
            Selector::Section3,
            Selector::Section4,
            Selector::Section5,
            Selector::Properties,
        ]
        .iter()
        .position(|s| s == self)
        .expect("listed");
        f.write_str(Selector::NAMES[i])
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    pub properties: PropertyConfig,
}

impl SuiteOptions {
    pub fn with_check_degree(d: u32) -> SuiteOptions {
        SuiteOptions {
            properties: PropertyConfig {
                check_degree: d,
                ..PropertyConfig::default()
            },
        }
    }
}

fn fixed_point_check() -> Check {
    Check::timed(
        "torus-fixed-points",
        "fixed points of the Grassmannian bundle over the fixed lines",
        || {
            let base = torus_fixed_grassmannian(&V5_WEIGHTS, 2);
            let fiber = torus_fixed_grassmannian(&[6, 2, 0, -2, -6], 2);
            match (base, fiber) {
                (Ok(b), Ok(f)) => {
                    let total = FIXED_LINES.len() * f.pairs.len();
                    let ok = b.pairs.len() == 10 && b.isolated && f.pairs.len() == 10 && f.isolated && total == 30;
                    (
                        ok,
                        "10 isolated pairs in Gr(2,5); 10 per fiber, 30 in total".into(),
                        format!(
                            "{} pairs (isolated {}); fiber {} pairs (isolated {}); total {total}",
                            b.pairs.len(),
                            b.isolated,
                            f.pairs.len(),
                            f.isolated
                        ),
                    )
                }
                (Err(e), _) | (_, Err(e)) => (false, "computation succeeds".into(), format!("error: {e}")),
            }
        },
    )
}

fn enumeration(model: &Dp5Model) -> std::result::Result<QuarticEnumeration, Check> {
    enumerate_fixed_quartics(model, true).map_err(|e| {
        Check::new(
            "quartics-enumeration",
            "residual construction over all lines and pairs",
            false,
            "30 residual quartics",
            format!("error: {e}"),
        )
    })
}

/// Runs the selected checks. Failures are report content, never errors.
pub fn run_suite(selector: Selector, opts: &SuiteOptions) -> VerificationReport {
    let model = Dp5Model::shared();
    let mut checks = Vec::new();
    if selector.includes(Selector::Section2) {
        checks.push(coordinate_change_check(model));
        checks.push(invariant_subspace_check());
    }
    if selector.includes(Selector::Section3) {
        checks.push(x5_global_check(model, opts.properties.check_degree));
        checks.push(fixed_point_check());
        checks.extend(fixed_line_checks(model));
        checks.extend(fixed_conic_checks(model));
        checks.extend(fixed_cubic_checks(model));
    }
    let needs_quartics = selector.includes(Selector::Section4) || selector.includes(Selector::Section5);
    let quartics = needs_quartics.then(|| enumeration(model));
    if selector.includes(Selector::Section4) {
        checks.push(line_sections_check(model));
        match quartics.as_ref().expect("computed") {
            Ok(en) => checks.extend(residual_checks(en)),
            Err(c) => checks.push(c.clone()),
        }
    }
    if selector.includes(Selector::Section5) {
        match quartics.as_ref().expect("computed") {
            Ok(en) => checks.extend(quartic_checks(model, en)),
            Err(c) if selector != Selector::All => checks.push(c.clone()),
            Err(_) => {}
        }
        checks.extend(rnc_example_checks(model));
        checks.push(hom_bound_check(model));
    }
    if selector.includes(Selector::Properties) {
        checks.extend(property_checks(&opts.properties));
    }
    VerificationReport::new(&selector.to_string(), checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selector_names_round_trip() {
        for name in Selector::NAMES {
            assert_eq!(name.parse::<Selector>().unwrap().to_string(), name);
        }
        assert!("section-9".parse::<Selector>().is_err());
    }

    #[test]
    fn section_two_has_two_passing_checks() {
        let r = run_suite(Selector::Section2, &SuiteOptions::default());
        assert_eq!(r.checks.len(), 2);
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.suite, "section-2");
    }
}
