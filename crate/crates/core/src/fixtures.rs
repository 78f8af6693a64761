//! Reference monomial ideals with known maximal tangent dimension, used as
//! regression fixtures.
//!
//! Ideals are stored in compact notation (`x^2yz` rather than `x^2*y*z`);
//! [`compact_ideal`] converts them. Where a listed generator is an evident
//! typo the literal string is kept next to the corrected one and the row is
//! flagged.

use crate::error::Result;
use crate::monomial::MonomialIdeal;
use crate::text::parse_ideal;

/// How a table row relates to the main classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowKind {
    /// Satisfies the convex-hull conditions.
    Main,
    /// Covered by the `*` family instead.
    Star,
    /// Covered by the `**` family instead.
    DoubleStar,
    /// No example listed for this colength.
    Gap,
}

#[derive(Clone, Copy, Debug)]
pub struct Transcribed {
    /// The generator list exactly as listed.
    pub literal: &'static str,
    /// The list after correcting a typo; equal to `literal` otherwise.
    pub corrected: &'static str,
    pub note: Option<&'static str>,
}

impl Transcribed {
    pub fn is_corrected(&self) -> bool {
        self.literal != self.corrected
    }

    pub fn ideal(&self) -> MonomialIdeal {
        compact_ideal(self.corrected).expect("fixture ideals parse")
    }

    pub fn literal_ideal(&self) -> MonomialIdeal {
        compact_ideal(self.literal).expect("fixture ideals parse")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct TableRow {
    pub n: usize,
    pub kind: RowKind,
    pub ideals: &'static [Transcribed],
}

const fn same(s: &'static str) -> Transcribed {
    Transcribed {
        literal: s,
        corrected: s,
        note: None,
    }
}

const fn fixed(literal: &'static str, corrected: &'static str, note: &'static str) -> Transcribed {
    Transcribed {
        literal,
        corrected,
        note: Some(note),
    }
}

const M2: &str = "x^2,y^2,z^2,xy,xz,yz";
const M3: &str = "x^3,y^3,z^3,x^2y,x^2z,xy^2,xyz,xz^2,y^2z,yz^2";
const M4: &str = "x^4,y^4,z^4,x^3y,x^3z,x^2y^2,x^2yz,x^2z^2,xy^3,xy^2z,xyz^2,xz^3,y^3z,y^2z^2,yz^3";
const M5: &str = "x^5,y^5,z^5,x^4y,x^4z,x^3y^2,x^3yz,x^3z^2,x^2y^3,x^2y^2z,x^2yz^2,x^2z^3,\
xy^4,xy^3z,xy^2z^2,xyz^3,xz^4,y^4z,y^3z^2,y^2z^3,yz^4";

/// Colength 8; every generator lies on one triangular face.
pub const S: &str = "x^2,y^2,z^4,xy,xz^2,yz^2";
/// Colength 39.
pub const J: &str = "x^5,y^5,z^7,xz^5,yz^5,x^4z,y^4z,x^4y,xy^4,x^3y^2,x^2y^3,x^3z^2,\
x^2z^3,y^3z^2,y^2z^3,x^3yz,xy^3z,xyz^3,x^2y^2z,x^2yz^2,xy^2z^2";
pub const L: &str = "x^2,y^3,z^3,xy,xz,yz^2,y^2z";
pub const U: &str =
    "x^4,y^4,z^5,yz^3,xz^3,y^2z^2,xyz^2,x^2z^2,y^3z,xy^2z,x^2yz,x^3z,xy^3,x^2y^2,x^3y";
pub const F: &str = "x^3,y^3,z^5,yz^2,xz^2,y^2z,xyz,x^2z,xy^2,x^2y";
pub const V: &str =
    "x^4,y^5,z^5,yz^4,y^2z^3,y^3z^2,y^4z,x^3yz,x^2yz^2,x^2y^2z,xy^2z^2,xyz^3,xy^3z,x^2z^3,\
xz^4,x^2y^3,xy^4,x^3z^2,x^3y^2";
pub const W: &str =
    "x^5,y^5,z^6,xy^4,x^2y^3,x^3y^2,x^4y,xz^5,yz^5,x^2z^3,y^2z^3,xyz^3,x^3z^2,y^3z^2,\
xy^2z^2,x^2yz^2,x^4z,y^4z,x^2y^2z,xy^3z,x^3yz";
pub const O: &str =
    "x^4,y^5,z^5,x^2z^2,x^2yz,x^3z,x^2y^2,x^3y,yz^4,xz^4,y^2z^3,xyz^3,y^3z^2,xy^2z^2,\
y^4z,xy^3z,xy^4";
pub const M: &str = "x^3,y^3,z^4,xz^2,y^2z,xyz,x^2z,xy^2,x^2y,yz^3";
pub const N: &str = "x^3,y^3,z^4,xy^2,x^2y,yz^3,y^2z^2,xyz^2,x^2z";

const G_LITERAL: &str =
    "x^5,y^5,z^8,y^2z^3,xyz^3,x^2z^3,y^3z^2,xy^2z^2,x^2yz^2,x^3z^2,y^4z,xy^3z,x^2y^2z,\
x^3yx,x^4z,xy^4,x^2y^3,x^3y^2,x^4y,yz^5,xz^5";
const G_CORRECTED: &str =
    "x^5,y^5,z^8,y^2z^3,xyz^3,x^2z^3,y^3z^2,xy^2z^2,x^2yz^2,x^3z^2,y^4z,xy^3z,x^2y^2z,\
x^3yz,x^4z,xy^4,x^2y^3,x^3y^2,x^4y,yz^5,xz^5";
const H_LITERAL: &str =
    "x^4,y^5,z^6,yz^4,y^2z^3,y^3z^2,y^4z,xz^4,x^2z^2,x^3z,xy^3,y^3x,x^2y^2,xyz^2,xy^2z,\
x^2yz";
const H_CORRECTED: &str =
    "x^4,y^5,z^6,yz^4,y^2z^3,y^3z^2,y^4z,xz^4,x^2z^2,x^3z,xy^3,x^3y,x^2y^2,xyz^2,xy^2z,\
x^2yz";

/// Example `G` (colength 40, `*` family).
pub const G: Transcribed = fixed(G_LITERAL, G_CORRECTED, "`x^3yx` read as `x^3yz`");
/// Example `H` (colength 27, `**` family).
pub const H: Transcribed = fixed(
    H_LITERAL,
    H_CORRECTED,
    "`y^3x` duplicates `xy^3`; read as `x^3y`",
);

/// A worked example with its stated invariants.
#[derive(Clone, Copy, Debug)]
pub struct NamedExample {
    pub name: &'static str,
    pub ideal: Transcribed,
    pub colength: Option<usize>,
    pub tangent: Option<usize>,
    /// Transcribed classification label, if any.
    pub label: Option<&'static str>,
}

pub const NAMED: &[NamedExample] = &[
    NamedExample {
        name: "S",
        ideal: same(S),
        colength: Some(8),
        tangent: None,
        label: Some("I(a)(ii)"),
    },
    NamedExample {
        name: "J",
        ideal: same(J),
        colength: Some(39),
        tangent: None,
        label: Some("I(a)(ii)"),
    },
    NamedExample {
        name: "L",
        ideal: same(L),
        colength: Some(7),
        tangent: Some(29),
        label: Some("I(a)(iii)"),
    },
    NamedExample {
        name: "U",
        ideal: same(U),
        colength: Some(21),
        tangent: Some(153),
        label: Some("I(a)(ii)"),
    },
    NamedExample {
        name: "F",
        ideal: same(F),
        colength: Some(12),
        tangent: Some(66),
        label: Some("I(a)(ii)"),
    },
    NamedExample {
        name: "V",
        ideal: same(V),
        colength: Some(34),
        tangent: Some(276),
        label: Some("II"),
    },
    NamedExample {
        name: "W",
        ideal: same(W),
        colength: Some(38),
        tangent: Some(324),
        label: Some("III(a'')(i)"),
    },
    NamedExample {
        name: "O",
        ideal: same(O),
        colength: Some(29),
        tangent: Some(207),
        label: Some("III(a'')(ii)"),
    },
    NamedExample {
        name: "G",
        ideal: G,
        colength: Some(40),
        tangent: Some(336),
        label: None,
    },
    NamedExample {
        name: "H",
        ideal: H,
        colength: Some(27),
        tangent: Some(187),
        label: None,
    },
    NamedExample {
        name: "M",
        ideal: same(M),
        colength: Some(12),
        tangent: Some(66),
        label: None,
    },
    NamedExample {
        name: "N",
        ideal: same(N),
        colength: Some(16),
        tangent: Some(78),
        label: None,
    },
];

pub fn named(name: &str) -> Option<&'static NamedExample> {
    NAMED.iter().find(|e| e.name == name)
}

const fn row(n: usize, kind: RowKind, ideals: &'static [Transcribed]) -> TableRow {
    TableRow { n, kind, ideals }
}

const GAP: &[Transcribed] = &[];

/// The table of maximal-tangent examples for colengths 1 to 40.
pub const TABLE: &[TableRow] = &[
    row(1, RowKind::Main, &[same("x,y,z")]),
    row(2, RowKind::Main, &[same("x,y,z^2")]),
    row(3, RowKind::Main, &[same("x,y^2,z^2,yz")]),
    row(4, RowKind::Main, &[same(M2)]),
    row(5, RowKind::Main, &[same("x^2,y^2,z^3,xy,yz,xz")]),
    row(6, RowKind::Main, &[same("x^2,y^2,z^4,xy,yz,xz")]),
    row(
        7,
        RowKind::Main,
        &[fixed(
            "x^2,y^3,z^3,xz,yz,yz^2,y^2z",
            L,
            "`yz` is redundant next to `yz^2`; read as `xy` (example L)",
        )],
    ),
    row(8, RowKind::Main, &[same("x^2,y^2,z^4,xy,yz^2,xz^2")]),
    row(9, RowKind::Main, &[same("x^2,y^3,z^3,yz^2,xz^2,y^2z,xy^2,xyz")]),
    row(10, RowKind::Main, &[same(M3)]),
    row(11, RowKind::Main, &[same("x^3,y^3,z^4,yz^2,xz^2,y^2z,xyz,x^2z,xy^2,x^2y")]),
    row(12, RowKind::Main, &[same(F)]),
    row(13, RowKind::Main, &[same("x^3,y^3,z^4,y^2z,xyz,x^2z,xy^2,x^2y,xz^3,yz^3")]),
    row(
        14,
        RowKind::Main,
        &[
            same("x^3,y^3,z^5,y^2z,xyz,x^2z,xy^2,x^2y,yz^3,xz^3"),
            same("x^3,y^4,z^4,xz^2,xyz,x^2z,xy^2,x^2y,yz^3,y^2z^2,y^3z"),
        ],
    ),
    row(
        15,
        RowKind::Star,
        &[fixed(
            "x^3,y^3,z^6,y^2z,xyz,x^2,xy^2,x^2y,yz^3,xz^3",
            "x^3,y^3,z^6,y^2z,xyz,x^2z,xy^2,x^2y,yz^3,xz^3",
            "`x^2` read as `x^2z`",
        )],
    ),
    row(
        16,
        RowKind::DoubleStar,
        &[same("x^3,y^4,z^5,xyz,x^2z,xy^2,x^2y,yz^3,xz^3,y^2z^2,y^3z")],
    ),
    row(
        17,
        RowKind::Main,
        &[same("x^3,y^4,z^4,x^2z,x^2y,yz^3,xz^3,y^2z^2,xyz^2,y^3z,xy^2z,xy^3")],
    ),
    row(18, RowKind::Gap, GAP),
    row(
        19,
        RowKind::Main,
        &[same("x^3,y^4,z^4,yz^3,xz^3,y^2z^2,xyz^2,x^2z^2,y^3z,xy^2z,x^2yz,xy^3,x^2y^2")],
    ),
    row(20, RowKind::Main, &[same(M4)]),
    row(21, RowKind::Main, &[same(U)]),
    row(
        22,
        RowKind::Main,
        &[same("x^4,y^4,z^6,yz^3,xz^3,y^2z^2,xyz^2,x^2z^2,y^3z,xy^2z,x^2yz,x^3z,xy^3,x^2y^2,x^3y")],
    ),
    row(
        23,
        RowKind::Main,
        &[same("x^4,y^4,z^5,y^2z^2,xyz^2,x^2z^2,y^3z,xy^2z,x^2yz,x^3z,xy^3,x^2y^2,x^3y,yz^4,xz^4")],
    ),
    row(
        24,
        RowKind::Main,
        &[same("x^4,y^4,z^6,y^2z^2,xyz^2,x^2z^2,y^3z,xy^2z,x^2yz,x^3z,xy^3,x^2y^2,x^3y,yz^4,xz^4")],
    ),
    row(
        25,
        RowKind::Main,
        &[same(
            "x^4,y^5,z^5,xz^3,xyz^2,x^2z^2,xy^2z,x^2yz,x^3z,xy^3,x^2y^2,x^3y,yz^4,y^2z^3,y^3z^2,y^4z",
        )],
    ),
    row(26, RowKind::Gap, GAP),
    row(27, RowKind::DoubleStar, &[H]),
    row(28, RowKind::Gap, GAP),
    row(29, RowKind::Main, &[same(O)]),
    row(30, RowKind::Gap, GAP),
    row(31, RowKind::Gap, GAP),
    row(32, RowKind::Gap, GAP),
    row(33, RowKind::Gap, GAP),
    row(34, RowKind::Main, &[same(V)]),
    row(35, RowKind::Main, &[same(M5)]),
    row(
        36,
        RowKind::Main,
        &[same(
            "x^5,y^5,z^6,yz^4,y^2z^3,y^3z^2,y^4z,x^3yz,x^2yz^2,x^2y^2z,xy^2z^2,xyz^3,xy^3z,x^2z^3,\
xz^4,x^2y^3,xy^4,x^3z^2,x^3y^2,x^4y,x^4z",
        )],
    ),
    row(
        37,
        RowKind::Main,
        &[same(
            "x^5,y^5,z^7,yz^4,y^2z^3,y^3z^2,y^4z,x^3yz,x^2yz^2,x^2y^2z,xy^2z^2,xyz^3,xy^3z,x^2z^3,\
xz^4,x^2y^3,xy^4,x^3z^2,x^3y^2,x^4y,x^4z",
        )],
    ),
    row(38, RowKind::Main, &[same(W)]),
    row(39, RowKind::Main, &[same(J)]),
    row(40, RowKind::Star, &[G]),
];

pub fn table_row(n: usize) -> Option<&'static TableRow> {
    TABLE.iter().find(|r| r.n == n)
}

/// Inserts the `*` that the compact notation leaves implicit.
pub fn to_grammar(compact: &str) -> String {
    let mut out = String::with_capacity(compact.len() * 2);
    let mut prev: Option<char> = None;
    for c in compact.chars().filter(|c| !c.is_whitespace()) {
        if matches!(c, 'x' | 'y' | 'z') && matches!(prev, Some(p) if p.is_ascii_alphanumeric()) {
            out.push('*');
        }
        out.push(c);
        prev = Some(c);
    }
    out
}

/// Parses a three-variable ideal written in compact notation.
pub fn compact_ideal(compact: &str) -> Result<MonomialIdeal> {
    parse_ideal(&to_grammar(compact), 3)
}
