use std::sync::OnceLock;

use super::tables::{
    COORDINATE_CHANGE, ORBIT_VARS, ORBIT_WEIGHTS, PLUCKER_LINEAR_FORMS, V5_LABELS, V5_WEIGHTS, X5_QUADRICS,
};
use crate::error::Result;
use crate::ideal::Ideal;
use crate::poly::{parse_generators, Polynomial, RingContext, RingMap};

/// Both coordinate systems on `X5` and the maps between them.
pub struct Dp5Model {
    /// `a6, …, am6` with weights `6, …, −6`.
    pub orbit: RingContext,
    /// `p_{ij}` for positions `i < j` of `e4, e2, e0, e-2, e-4`.
    pub plucker: RingContext,
    /// The five quadrics in orbit coordinates.
    pub x5: Ideal,
    /// Plücker relations of `Gr(2, 5)`.
    pub grassmannian: Vec<Polynomial>,
    pub linear_forms: Vec<Polynomial>,
    /// Grassmannian relations plus the three linear forms.
    pub plucker_ideal: Ideal,
    /// Plücker coordinates in terms of orbit coordinates.
    pub coordinate_change: RingMap,
    /// `a_j ↦ a_{−j}`.
    pub involution: RingMap,
}

/// Name of the Plücker coordinate for positions `i < j`.
pub fn plucker_name(i: usize, j: usize) -> String {
    format!("p{}{}", V5_LABELS[i], V5_LABELS[j])
}

impl Dp5Model {
    pub fn build() -> Result<Dp5Model> {
        let orbit = RingContext::with_weights(&ORBIT_VARS, &ORBIT_WEIGHTS)?;
        let mut names = Vec::new();
        let mut weights = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                names.push(plucker_name(i, j));
                weights.push(V5_WEIGHTS[i] + V5_WEIGHTS[j]);
            }
        }
        let plucker = RingContext::with_weights(&names, &weights)?;
        let x5 = Ideal::from_strs(&orbit, &X5_QUADRICS)?;
        let mut grassmannian = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                for c in b + 1..5 {
                    for d in c + 1..5 {
                        let v = |i, j| Polynomial::var_named(&plucker, &plucker_name(i, j));
                        let rel = &(&(&v(a, b)? * &v(c, d)?) - &(&v(a, c)? * &v(b, d)?)) + &(&v(a, d)? * &v(b, c)?);
                        grassmannian.push(rel);
                    }
                }
            }
        }
        let linear_forms = parse_generators(&plucker, &PLUCKER_LINEAR_FORMS)?;
        let mut all = grassmannian.clone();
        all.extend(linear_forms.iter().cloned());
        let plucker_ideal = Ideal::new(&plucker, all)?;
        let images = COORDINATE_CHANGE
            .iter()
            .map(|(p, a)| Ok((*p, Polynomial::parse(&orbit, a)?)))
            .collect::<Result<Vec<_>>>()?;
        let coordinate_change = RingMap::new(&plucker, &orbit, images.iter().map(|(p, a)| (*p, a.clone())))?;
        let swaps: Vec<(&str, &str)> = ORBIT_VARS
            .iter()
            .zip(ORBIT_VARS.iter().rev())
            .map(|(a, b)| (*a, *b))
            .collect();
        let involution = RingMap::renaming(&orbit, &swaps)?;
        Ok(Dp5Model {
            orbit,
            plucker,
            x5,
            grassmannian,
            linear_forms,
            plucker_ideal,
            coordinate_change,
            involution,
        })
    }

    /// Shared instance (Gröbner caches persist across callers).
    pub fn shared() -> &'static Dp5Model {
        static MODEL: OnceLock<Dp5Model> = OnceLock::new();
        MODEL.get_or_init(|| Dp5Model::build().expect("built-in model data parses"))
    }

    /// Oriented Plücker coordinate `p(i, j) = −p(j, i)`.
    pub fn plucker_coordinate(&self, i: usize, j: usize) -> Polynomial {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Polynomial::zero(&self.plucker),
            Less => Polynomial::var_named(&self.plucker, &plucker_name(i, j)).expect("known name"),
            Greater => -Polynomial::var_named(&self.plucker, &plucker_name(j, i)).expect("known name"),
        }
    }

    pub fn orbit_ideal(&self, gens: &[&str]) -> Result<Ideal> {
        Ideal::from_strs(&self.orbit, gens)
    }

    /// Orbit-coordinate image of a Plücker-side ideal.
    pub fn to_orbit(&self, i: &Ideal) -> Result<Ideal> {
        i.map(&self.coordinate_change)
    }
}
