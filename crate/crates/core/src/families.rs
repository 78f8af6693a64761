//! Explicit ideal families with closed-form colength and tangent dimension.
//!
//! Each constructor starts from the pure powers and the mixed degree-`k`
//! monomials, applies the stated removals and replacements as set
//! operations, and minimalizes. None of them is derived from a listed
//! generator list.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::conjecture::binomial;
use crate::error::{Error, Result};
use crate::monomial::{minimalize, monomials_of_degree, ExponentVector, MonomialIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyTag {
    MK,
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    #[serde(rename = "STAR")]
    Star,
    #[serde(rename = "DOUBLESTAR")]
    DoubleStar,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 10] = [
        FamilyTag::MK,
        FamilyTag::T1,
        FamilyTag::T2,
        FamilyTag::T3,
        FamilyTag::T4,
        FamilyTag::T5,
        FamilyTag::T6,
        FamilyTag::T7,
        FamilyTag::Star,
        FamilyTag::DoubleStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::MK => "MK",
            FamilyTag::T1 => "T1",
            FamilyTag::T2 => "T2",
            FamilyTag::T3 => "T3",
            FamilyTag::T4 => "T4",
            FamilyTag::T5 => "T5",
            FamilyTag::T6 => "T6",
            FamilyTag::T7 => "T7",
            FamilyTag::Star => "STAR",
            FamilyTag::DoubleStar => "DOUBLESTAR",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase();
        FamilyTag::ALL
            .into_iter()
            .find(|t| {
                t.name() == up
                    || (up == "*" && *t == FamilyTag::Star)
                    || (up == "**" && *t == FamilyTag::DoubleStar)
            })
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A family member: `param` is `k`, or `j` for [`FamilyTag::Star`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyKind {
    pub tag: FamilyTag,
    pub param: u32,
}

impl FamilyKind {
    pub fn new(tag: FamilyTag, param: u32) -> Result<Self> {
        let kind = Self { tag, param };
        kind.validate()?;
        Ok(kind)
    }

    /// The degree `k` of the underlying power of the maximal ideal.
    pub fn degree(&self) -> u32 {
        match self.tag {
            FamilyTag::Star => 2 * self.param + 1,
            _ => self.param,
        }
    }

    /// Parameter ranges, including `n < C(k+3, 3)` for the seven numbered
    /// types.
    pub fn validate(&self) -> Result<()> {
        let k = self.param;
        let min = match self.tag {
            FamilyTag::T3 | FamilyTag::DoubleStar => 3,
            _ => 1,
        };
        let bad = || Error::InvalidParam {
            kind: self.tag.name().to_string(),
            param: k,
        };
        if k < min || k > 64 {
            return Err(bad());
        }
        let numbered = !matches!(
            self.tag,
            FamilyTag::MK | FamilyTag::Star | FamilyTag::DoubleStar
        );
        if numbered && predicted_colength_unchecked(*self) >= binomial(k as u64 + 3, 3) as u64 {
            return Err(bad());
        }
        Ok(())
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = if self.tag == FamilyTag::Star {
            "j"
        } else {
            "k"
        };
        write!(f, "{} {p}={}", self.tag, self.param)
    }
}

fn ev(a: u32, b: u32, c: u32) -> ExponentVector {
    ExponentVector::from_vec_unchecked(vec![a, b, c])
}

fn mixed_of_degree(k: u32) -> BTreeSet<ExponentVector> {
    monomials_of_degree(3, k)
        .into_iter()
        .filter(|e| e.support_size() >= 2)
        .collect()
}

/// Reading of the `**` replacement rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DoubleStarReading {
    /// `yz^{k-1}` replaced by `xz^k`, exactly as stated.
    Literal,
    /// `xz^{k-1}` replaced by `xz^k`.
    Corrected,
}

/// `(x^k, y^(k+1), z^(k+2), ...)` under either reading of the `**` rule.
pub fn double_star_ideal(k: u32, reading: DoubleStarReading) -> Result<MonomialIdeal> {
    FamilyKind::new(FamilyTag::DoubleStar, k)?;
    let mut gens = mixed_of_degree(k);
    match reading {
        DoubleStarReading::Literal => {
            gens.remove(&ev(0, 1, k - 1));
        }
        DoubleStarReading::Corrected => {
            gens.remove(&ev(1, 0, k - 1));
        }
    }
    gens.insert(ev(1, 0, k));
    for i in 1..k {
        gens.remove(&ev(0, i, k - i));
    }
    for i in 1..=k {
        gens.insert(ev(0, i, k + 1 - i));
    }
    gens.extend([ev(k, 0, 0), ev(0, k + 1, 0), ev(0, 0, k + 2)]);
    minimalize(3, gens.into_iter().collect())
}

/// The ideal of a family member.
pub fn family_ideal(kind: FamilyKind) -> Result<MonomialIdeal> {
    kind.validate()?;
    let k = kind.degree();
    let mut gens = mixed_of_degree(k);
    let powers = match kind.tag {
        FamilyTag::MK => [k, k, k],
        FamilyTag::T1 => [k, k, k + 1],
        FamilyTag::T2 => [k, k, k + 2],
        FamilyTag::T3 | FamilyTag::T4 | FamilyTag::Star => {
            gens.remove(&ev(1, 0, k - 1));
            gens.remove(&ev(0, 1, k - 1));
            gens.insert(ev(1, 0, k));
            gens.insert(ev(0, 1, k));
            match kind.tag {
                FamilyTag::T3 => [k, k, k + 1],
                FamilyTag::T4 => [k, k, k + 2],
                _ => [k, k, k + 3],
            }
        }
        FamilyTag::T5 => {
            for i in 1..k {
                gens.remove(&ev(0, i, k - i));
            }
            for i in 1..=k {
                gens.insert(ev(0, i, k + 1 - i));
            }
            [k, k + 1, k + 1]
        }
        FamilyTag::T6 => {
            gens.retain(|g| g[0] > 1);
            gens.extend(
                monomials_of_degree(3, k + 1)
                    .into_iter()
                    .filter(|g| g[0] <= 1),
            );
            [k, k + 1, k + 1]
        }
        FamilyTag::T7 => {
            gens = mixed_of_degree(k + 1);
            gens.remove(&ev(k, 1, 0));
            gens.remove(&ev(k, 0, 1));
            [k, k + 1, k + 1]
        }
        FamilyTag::DoubleStar => return double_star_ideal(k, DoubleStarReading::Corrected),
    };
    gens.extend([
        ev(powers[0], 0, 0),
        ev(0, powers[1], 0),
        ev(0, 0, powers[2]),
    ]);
    minimalize(3, gens.into_iter().collect())
}

fn tetra(k: u64) -> u64 {
    binomial(k + 2, 3) as u64
}

/// `T(m^k) = C(k+1, 2) C(k+2, 2)` in three variables.
pub fn power_tangent(k: u64) -> u64 {
    (binomial(k + 1, 2) * binomial(k + 2, 2)) as u64
}

fn predicted_colength_unchecked(kind: FamilyKind) -> u64 {
    let k = kind.param as u64;
    match kind.tag {
        FamilyTag::MK => tetra(k),
        FamilyTag::T1 => tetra(k) + 1,
        FamilyTag::T2 => tetra(k) + 2,
        FamilyTag::T3 => tetra(k) + 3,
        FamilyTag::T4 => tetra(k) + 4,
        FamilyTag::T5 => tetra(k) + k + 1,
        FamilyTag::T6 => tetra(k) + 2 * k + 1,
        FamilyTag::T7 => tetra(k + 1) - 1,
        FamilyTag::Star => tetra(2 * k + 1) + 5,
        FamilyTag::DoubleStar => tetra(k) + k + 3,
    }
}

/// Closed-form colength of a family member.
pub fn predicted_colength(kind: FamilyKind) -> Result<u64> {
    kind.validate()?;
    Ok(predicted_colength_unchecked(kind))
}

/// Closed-form tangent dimension of a family member.
pub fn predicted_tangent(kind: FamilyKind) -> Result<u64> {
    let n = predicted_colength(kind)?;
    let k = kind.degree() as u64;
    // excess of T(m^d) over three times its colength
    let excess = |d: u64| power_tangent(d) - 3 * tetra(d);
    let base = 3 * n + excess(k);
    Ok(match kind.tag {
        FamilyTag::MK => power_tangent(k),
        FamilyTag::T1 => power_tangent(k) + 3,
        FamilyTag::T2 => power_tangent(k) + 6,
        FamilyTag::T3 => base,
        FamilyTag::T4 | FamilyTag::Star => base + 6,
        FamilyTag::T5 => base + k * (k - 1),
        FamilyTag::T6 => base + 4 * binomial(k, 2) as u64 + 6,
        FamilyTag::T7 => 3 * n + excess(k + 1) - k * (k + 5),
        FamilyTag::DoubleStar => {
            base + (binomial(k + 2, 2) + binomial(k.saturating_sub(2), 2)) as u64
        }
    })
}

/// The product form `(C(k+1,2)+1)(C(k+2,2)+1)+11` of the `**` tangent
/// dimension.
pub fn double_star_tangent_product(k: u64) -> u64 {
    ((binomial(k + 1, 2) + 1) * (binomial(k + 2, 2) + 1) + 11) as u64
}

/// `(x^g1, y^g2, z^g3)^k`.
pub fn fat_point_ideal(g: [u32; 3], k: u32) -> Result<MonomialIdeal> {
    if g.contains(&0) || k == 0 {
        return Err(Error::InvalidParam {
            kind: format!("fat point {g:?}"),
            param: k,
        });
    }
    let gens = monomials_of_degree(3, k)
        .into_iter()
        .map(|e| ev(e[0] * g[0], e[1] * g[1], e[2] * g[2]))
        .collect();
    minimalize(3, gens)
}

/// `(g1 g2 g3) C(k+2, 3)`.
pub fn fat_point_colength(g: [u32; 3], k: u32) -> u64 {
    g.iter().map(|&v| v as u64).product::<u64>() * tetra(k as u64)
}

/// `(g1 g2 g3) C(k+1, 2) C(k+2, 2)`.
pub fn fat_point_tangent(g: [u32; 3], k: u32) -> u64 {
    g.iter().map(|&v| v as u64).product::<u64>() * power_tangent(k as u64)
}
