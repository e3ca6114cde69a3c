//! Printed ideals, transcribed with `am{k}` standing for `a_{-k}`.

/// Orbit coordinates and their torus weights `wt(a_j) = j`.
pub const ORBIT_VARS: [&str; 7] = ["a6", "a4", "a2", "a0", "am2", "am4", "am6"];
pub const ORBIT_WEIGHTS: [i64; 7] = [6, 4, 2, 0, -2, -4, -6];

/// Labels of the basis `e4, e2, e0, e-2, e-4` of `V5`, in position order.
pub const V5_LABELS: [&str; 5] = ["4", "2", "0", "m2", "m4"];
pub const V5_WEIGHTS: [i64; 5] = [4, 2, 0, -2, -4];

/// The five quadrics cutting out `X5` in orbit coordinates.
pub const X5_QUADRICS: [&str; 5] = [
    "a6*am2 - 4*a4*a0 + 3*a2^2",
    "a6*am4 - 3*a4*am2 + 2*a2*a0",
    "a6*am6 - 9*a2*am2 + 8*a0^2",
    "a4*am6 - 3*a2*am4 + 2*a0*am2",
    "a2*am6 - 4*a0*am4 + 3*am2^2",
];

/// The three linear forms cutting `X5` out of the Grassmannian.
pub const PLUCKER_LINEAR_FORMS: [&str; 3] = ["3*p20 - p4m2", "2*p2m2 - p4m4", "3*p0m2 - p2m4"];

/// Orbit images of the Plücker coordinates.
pub const COORDINATE_CHANGE: [(&str, &str); 10] = [
    ("p42", "a6"),
    ("p40", "2*a4"),
    ("p20", "a2"),
    ("p4m2", "3*a2"),
    ("p2m2", "2*a0"),
    ("p4m4", "4*a0"),
    ("p0m2", "am2"),
    ("p2m4", "3*am2"),
    ("p0m4", "2*am4"),
    ("pm2m4", "am6"),
];

/// A vector of `∧²V5` as `(coefficient, i, j)` terms of `e_i ∧ e_j`, with
/// `i, j` positions in `V5_LABELS`.
pub type WedgeVector = &'static [(i64, usize, usize)];

/// Printed basis of the seven-dimensional invariant subspace.
pub const INVARIANT_BASIS: [WedgeVector; 7] = [
    &[(1, 0, 1)],
    &[(1, 0, 2)],
    &[(1, 1, 2), (3, 0, 3)],
    &[(1, 1, 3), (2, 0, 4)],
    &[(1, 2, 3), (3, 1, 4)],
    &[(1, 2, 4)],
    &[(1, 3, 4)],
];

/// The fixed lines `l0, l1, l2`, generators in printed order.
pub const FIXED_LINES: [(&str, [&str; 5]); 3] = [
    ("l0", ["a6", "a2", "a0", "am2", "am6"]),
    ("l1", ["a2", "a0", "am2", "am4", "am6"]),
    ("l2", ["am2", "a0", "a2", "a4", "a6"]),
];

/// Fixed conics, indexed by the omitted basis vector of `V5` (`W4` first).
pub const FIXED_CONICS: [(&str, &[&str]); 5] = [
    ("W4", &["a6", "a4", "a2", "a0", "am2^2"]),
    ("W2", &["a6", "a2", "a0", "am2", "a4*am6"]),
    ("W0", &["a4", "a2", "8*a0^2 + a6*am6", "am2", "am4"]),
    ("Wm2", &["a6*am4", "a2", "a0", "am2", "am6"]),
    ("Wm4", &["a2^2", "a0", "am2", "am4", "am6"]),
];

pub struct CubicRow {
    pub row: usize,
    /// Positions in `V5_LABELS` spanning the line `l ⊂ P(V5)`.
    pub line: (usize, usize),
    pub gens: &'static [&'static str],
    pub label: &'static str,
}

pub const FIXED_CUBICS: [CubicRow; 10] = [
    CubicRow {
        row: 1,
        line: (1, 3),
        gens: &[
            "am4",
            "a0",
            "a4",
            "3*am2^2 + a2*am6",
            "9*a2*am2 - a6*am6",
            "3*a2^2 + a6*am2",
        ],
        label: "C3",
    },
    CubicRow {
        row: 2,
        line: (1, 4),
        gens: &["am2", "a2", "a4", "a0*am4", "a6*am4", "8*a0^2 + a6*am6"],
        label: "l2+C2",
    },
    CubicRow {
        row: 3,
        line: (0, 3),
        gens: &["am4", "am2", "a2", "a4*am6", "a4*a0", "8*a0^2 + a6*am6"],
        label: "l1+C2",
    },
    CubicRow {
        row: 4,
        line: (0, 4),
        gens: &["am2", "a0", "a2", "a4*am6", "a6*am6", "a6*am4"],
        label: "l0+l1+l2",
    },
    CubicRow {
        row: 5,
        line: (2, 4),
        gens: &["a0", "a2", "a6", "a4*am6", "a4*am2", "am2^2"],
        label: "l0+2l2",
    },
    CubicRow {
        row: 6,
        line: (0, 2),
        gens: &["am6", "am2", "a0", "a2*am4", "a6*am4", "a2^2"],
        label: "l0+2l1",
    },
    CubicRow {
        row: 7,
        line: (2, 3),
        gens: &["am2", "a0", "a6", "a2*am6", "a2^2", "3*a2*am4 - a4*am6"],
        label: "2l0+l2",
    },
    CubicRow {
        row: 8,
        line: (1, 2),
        gens: &["am6", "a0", "a2", "am2^2", "a6*am2", "3*a4*am2 - a6*am4"],
        label: "2l0+l1",
    },
    CubicRow {
        row: 9,
        line: (3, 4),
        gens: &["a2", "a4", "a6", "a0*am2", "a0^2", "3*am2^2 - 4*a0*am4"],
        label: "3l2",
    },
    CubicRow {
        row: 10,
        line: (0, 1),
        gens: &["am6", "am4", "am2", "a0^2", "a2*a0", "3*a2^2 - 4*a4*a0"],
        label: "3l1",
    },
];

pub struct QuarticRow {
    pub row: usize,
    pub gens: &'static [&'static str],
    pub label: &'static str,
    /// Marked in print as the one entry without a mirror partner.
    pub starred: bool,
}

pub const FIXED_QUARTICS: [QuarticRow; 15] = [
    QuarticRow {
        row: 1,
        gens: &[
            "a0",
            "a4",
            "am2*am4",
            "a2*am4",
            "a6*am4",
            "3*am2^2 + a2*am6",
            "9*a2*am2 - a6*am6",
            "3*a2^2 + a6*am2",
        ],
        label: "l2+C3",
        starred: false,
    },
    QuarticRow {
        row: 2,
        gens: &[
            "am2",
            "a2",
            "a4*am6",
            "a0*am4",
            "a4*am4",
            "a6*am4",
            "8*a0^2 + a6*am6",
            "a4*a0",
        ],
        label: "l1+l2+C2",
        starred: true,
    },
    QuarticRow {
        row: 3,
        gens: &[
            "am2",
            "a2",
            "a4*am6",
            "a0*am4",
            "a6*am4",
            "8*a0^2 + a6*am6",
            "a4*a0",
            "a6*a4",
        ],
        label: "l0+l2+C2",
        starred: false,
    },
    QuarticRow {
        row: 4,
        gens: &[
            "a2",
            "a4",
            "a0*am4",
            "a6*am4",
            "am2^2",
            "a0*am2",
            "a6*am2",
            "8*a0^2 + a6*am6",
        ],
        label: "2l2+C2",
        starred: false,
    },
    QuarticRow {
        row: 5,
        gens: &["a0", "a2", "a4*am6", "a6*am6", "a6*am4", "am2^2", "a4*am2", "a6*am2"],
        label: "l0+l1+2l2",
        starred: false,
    },
    QuarticRow {
        row: 6,
        gens: &[
            "a0",
            "a2",
            "am2*am6",
            "a4*am6",
            "a6*am6",
            "am2^2",
            "3*a4*am2 - a6*am4",
            "a6*am2",
        ],
        label: "2l0+l1+l2",
        starred: false,
    },
    QuarticRow {
        row: 7,
        gens: &[
            "am2",
            "a4",
            "am4^2",
            "4*a0*am4 - a2*am6",
            "a2*am4",
            "8*a0^2 + a6*am6",
            "2*a2*a0 + a6*am4",
            "a2^2",
        ],
        label: "2C2",
        starred: false,
    },
    QuarticRow {
        row: 8,
        gens: &[
            "am2",
            "a6",
            "4*a0*am4 - a2*am6",
            "3*a2*am4 - a4*am6",
            "a0^2",
            "a2*a0",
            "a4*a0",
            "a2^2",
        ],
        label: "2l0+2l2",
        starred: false,
    },
    QuarticRow {
        row: 9,
        gens: &[
            "a0",
            "a2",
            "a4*am6",
            "a6*am6",
            "am2^2",
            "3*a4*am2 - a6*am4",
            "a6*am2",
            "a6^2",
        ],
        label: "2l0+2l2",
        starred: false,
    },
    QuarticRow {
        row: 10,
        gens: &[
            "a0",
            "a6",
            "a2*am6",
            "3*a2*am4 - a4*am6",
            "am2^2",
            "a2*am2",
            "a4*am2",
            "a2^2",
        ],
        label: "2l0+2l2",
        starred: false,
    },
    QuarticRow {
        row: 11,
        gens: &[
            "am2",
            "a6",
            "a0*am6",
            "4*a0*am4 - a2*am6",
            "3*a2*am4 - a4*am6",
            "a0^2",
            "a2*a0",
            "3*a2^2 - 4*a4*a0",
        ],
        label: "3l0+l2",
        starred: false,
    },
    QuarticRow {
        row: 12,
        gens: &[
            "a2",
            "a6",
            "a4*am6",
            "3*am2^2 - 4*a0*am4",
            "a0*am2",
            "a4*am2",
            "a0^2",
            "a4*a0",
        ],
        label: "l0+3l2",
        starred: false,
    },
    QuarticRow {
        row: 13,
        gens: &[
            "a0",
            "a6",
            "3*a2*am4 - a4*am6",
            "3*am2^2 + a2*am6",
            "a2*am2",
            "a4*am2",
            "a2^2",
            "a4*a2",
        ],
        label: "l0+3l2",
        starred: false,
    },
    QuarticRow {
        row: 14,
        gens: &[
            "a4",
            "a6",
            "3*am2^2 - 4*a0*am4 + a2*am6",
            "2*a0*am2 - 3*a2*am4",
            "a2*am2",
            "a0^2",
            "a2*a0",
            "a2^2",
        ],
        label: "4l2",
        starred: false,
    },
    QuarticRow {
        row: 15,
        gens: &[
            "a2",
            "a6",
            "3*am2^2 - 4*a0*am4",
            "2*a0*am2 + a4*am6",
            "a4*am2",
            "a0^2",
            "a4*a0",
            "a4^2",
        ],
        label: "4l2",
        starred: false,
    },
];

/// The fixed rational normal quartic, as printed.
pub const NORMAL_QUARTIC: [&str; 8] = [
    "am6",
    "a6",
    "3*am2^2 - 4*a0*am4",
    "2*a0*am2 - 3*a2*am4",
    "a2*am2 - 2*a4*am4",
    "4*a0^2 - 9*a4*am4",
    "2*a2*a0 - 3*a4*am2",
    "3*a2^2 - 4*a4*a0",
];

/// Matrix whose 2×2 minors give the quadrics of the normal quartic.
pub const NORMAL_QUARTIC_MATRIX: [[&str; 4]; 2] =
    [["27/16*a4", "9/8*a2", "a0", "am2"], ["9/8*a2", "a0", "am2", "4/3*am4"]];
