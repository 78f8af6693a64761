//! Dimension of `Hom_R(I, R/I)`, the tangent space of the Hilbert scheme of
//! points at a monomial ideal.
//!
//! A homomorphism is fixed by the images `phi(g_i)` of the generators,
//! subject to one relation per pair of generators:
//! `(L/g_i) phi(g_i) - (L/g_j) phi(g_j) = 0` in `R/I` with `L = lcm(g_i, g_j)`.
//! Pairwise relations generate all syzygies of a monomial ideal, so the
//! solution space of this system is exactly `Hom(I, R/I)`.
//!
//! The system splits by the torus weight `d in Z^N` of the homomorphism:
//! at weight `d`, generator `g_i` carries one unknown iff `g_i + d` is a
//! standard monomial, and the pair `(i, j)` yields one equation iff
//! `L + d` is. [`tangent_dimension`] solves each weight separately;
//! [`tangent_dimension_dense`] assembles the whole system at once and is
//! kept as an independent check.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bareiss::{self, SparseRow};
use crate::error::Result;
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::staircase::{staircase_with_cap, Staircase, DEFAULT_COLENGTH_CAP};

/// Largest colength accepted by the dense oracle by default.
pub const DEFAULT_DENSE_CAP: usize = 20;

/// A Taylor first syzygy between generators `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyzygyPair {
    pub i: usize,
    pub j: usize,
    pub lcm: ExponentVector,
}

/// Graded contribution of a single torus weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightContribution {
    pub weight: Vec<i64>,
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentResult {
    pub dimension: usize,
    /// Nonzero graded pieces sorted by weight, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_weight: Option<Vec<WeightContribution>>,
}

#[derive(Clone, Copy, Debug)]
pub struct TangentOptions {
    pub colength_cap: usize,
    pub per_weight: bool,
}

impl Default for TangentOptions {
    fn default() -> Self {
        Self {
            colength_cap: DEFAULT_COLENGTH_CAP,
            per_weight: false,
        }
    }
}

/// All `C(g, 2)` generator pairs with their lcms, in `(i, j)` order.
pub fn pairwise_syzygies(ideal: &MonomialIdeal) -> Vec<SyzygyPair> {
    let gens = ideal.generators();
    let mut out = Vec::with_capacity(gens.len() * gens.len().saturating_sub(1) / 2);
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            out.push(SyzygyPair {
                i,
                j,
                lcm: gens[i].lcm(&gens[j]),
            });
        }
    }
    out
}

/// `T(I) = dim Hom(I, R/I)` with default options.
pub fn tangent_dimension(ideal: &MonomialIdeal) -> Result<TangentResult> {
    tangent_dimension_with(ideal, TangentOptions::default())
}

pub fn tangent_dimension_with(
    ideal: &MonomialIdeal,
    opts: TangentOptions,
) -> Result<TangentResult> {
    let stair = staircase_with_cap(ideal, opts.colength_cap)?;
    Ok(graded_solve(ideal, &stair, opts.per_weight))
}

/// Graded solver on a precomputed staircase.
pub fn tangent_dimension_on(ideal: &MonomialIdeal, stair: &Staircase) -> usize {
    graded_solve(ideal, stair, false).dimension
}

fn graded_solve(ideal: &MonomialIdeal, stair: &Staircase, per_weight: bool) -> TangentResult {
    let gens = ideal.generators();
    let pairs = pairwise_syzygies(ideal);
    // partners[i] lists (j, pair index) for every pair containing i
    let mut partners: Vec<Vec<(usize, usize)>> = vec![Vec::new(); gens.len()];
    for (p, pair) in pairs.iter().enumerate() {
        partners[pair.i].push((pair.j, p));
        partners[pair.j].push((pair.i, p));
    }

    // Support of the grading: weight s - g_i activates generator i.
    let mut active: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
    for s in stair.members() {
        for (i, g) in gens.iter().enumerate() {
            let d: Vec<i64> = s
                .iter()
                .zip(g.iter())
                .map(|(&a, &b)| a as i64 - b as i64)
                .collect();
            active.entry(d).or_default().push(i);
        }
    }
    let mut weights: Vec<(Vec<i64>, Vec<usize>)> = active.into_iter().collect();
    weights.sort_unstable_by(|a, b| a.0.cmp(&b.0));

    let mut total = 0usize;
    let mut pieces = Vec::new();
    let mut column = vec![usize::MAX; gens.len()];
    let mut seen_pair = vec![false; pairs.len()];
    for (d, mut act) in weights {
        act.sort_unstable();
        for (c, &i) in act.iter().enumerate() {
            column[i] = c;
        }
        let mut rows: Vec<SparseRow<i64>> = Vec::new();
        let mut touched = Vec::new();
        for &i in &act {
            for &(_, p) in &partners[i] {
                if seen_pair[p] {
                    continue;
                }
                seen_pair[p] = true;
                touched.push(p);
                if stair.index_of_shifted(&pairs[p].lcm, &d).is_none() {
                    continue;
                }
                let (a, b) = (pairs[p].i, pairs[p].j);
                let mut row = Vec::with_capacity(2);
                if column[a] != usize::MAX {
                    row.push((column[a], 1));
                }
                if column[b] != usize::MAX {
                    row.push((column[b], -1));
                }
                debug_assert!(i == a || i == b);
                rows.push(row);
            }
        }
        let rank = if rows.is_empty() {
            0
        } else if act.len() == 1 {
            1
        } else {
            bareiss::rank(act.len(), &rows)
        };
        let dim = act.len() - rank;
        total += dim;
        if per_weight && dim > 0 {
            pieces.push(WeightContribution {
                weight: d,
                dimension: dim,
            });
        }
        for &i in &act {
            column[i] = usize::MAX;
        }
        for p in touched {
            seen_pair[p] = false;
        }
    }
    TangentResult {
        dimension: total,
        per_weight: per_weight.then_some(pieces),
    }
}

/// Independent oracle: the full Hom system as one matrix, one unknown per
/// (generator, standard monomial) and one equation per (pair, standard
/// monomial), with no weight decomposition.
pub fn tangent_dimension_dense(ideal: &MonomialIdeal) -> Result<usize> {
    tangent_dimension_dense_with_cap(ideal, DEFAULT_DENSE_CAP)
}

pub fn tangent_dimension_dense_with_cap(ideal: &MonomialIdeal, cap: usize) -> Result<usize> {
    let stair = staircase_with_cap(ideal, cap)?;
    let gens = ideal.generators();
    let n = stair.len();
    let unknown = |gen: usize, monomial: usize| gen * n + monomial;
    let mut rows: Vec<SparseRow<i64>> = Vec::new();
    let mut source = vec![0u32; ideal.nvars()];
    for pair in pairwise_syzygies(ideal) {
        for t in stair.members() {
            let mut row = Vec::with_capacity(2);
            for (gen, sign) in [(pair.i, 1i64), (pair.j, -1i64)] {
                // x^s with (lcm / g) * x^s = x^t, i.e. s = t - lcm + g
                let g = &gens[gen];
                let ok = t
                    .iter()
                    .zip(pair.lcm.iter())
                    .zip(g.iter())
                    .zip(source.iter_mut())
                    .all(|(((&t, &l), &g), s)| {
                        let v = t as i64 - l as i64 + g as i64;
                        *s = v.max(0) as u32;
                        v >= 0
                    });
                if ok {
                    let s_idx = stair
                        .index_of(&source)
                        .expect("divisor of a standard monomial is standard");
                    row.push((unknown(gen, s_idx), sign));
                }
            }
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    let unknowns = gens.len() * n;
    Ok(unknowns - bareiss::rank(unknowns, &rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::monomial::power_ideal;
    use crate::text::parse_ideal;

    fn t(text: &str) -> usize {
        tangent_dimension(&parse_ideal(text, 3).unwrap())
            .unwrap()
            .dimension
    }

    #[test]
    fn syzygy_pairs() {
        let two = parse_ideal("x,y", 2).unwrap();
        let p = pairwise_syzygies(&two);
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].lcm.to_vec(), vec![1, 1]);

        let i = parse_ideal("x^2,x*y,y^2", 2).unwrap();
        let lcms: Vec<Vec<u32>> = pairwise_syzygies(&i)
            .iter()
            .map(|p| p.lcm.to_vec())
            .collect();
        assert_eq!(lcms, vec![vec![2, 1], vec![2, 2], vec![1, 2]]);

        assert_eq!(pairwise_syzygies(&power_ideal(3, 2).unwrap()).len(), 15);
    }

    #[test]
    fn smooth_point_and_m_squared() {
        assert_eq!(t("x,y,z"), 3);
        assert_eq!(t("x^2,y^2,z^2,x*y,x*z,y*z"), 18);
        let m1 = power_ideal(3, 1).unwrap();
        assert_eq!(tangent_dimension_dense(&m1).unwrap(), 3);
        assert_eq!(
            tangent_dimension_dense(&power_ideal(3, 2).unwrap()).unwrap(),
            18
        );
    }

    #[test]
    fn plane_curves_are_smooth() {
        // Hilb^n(A^2) is smooth of dimension 2n at every point
        for text in [
            "x^3,y",
            "x^2,x*y,y^2",
            "x^4,x^2*y,y^3",
            "x^5,x^3*y,x*y^2,y^4",
        ] {
            let i = parse_ideal(text, 2).unwrap();
            let n = crate::staircase::colength(&i).unwrap();
            assert_eq!(tangent_dimension(&i).unwrap().dimension, 2 * n, "{text}");
            assert_eq!(tangent_dimension_dense(&i).unwrap(), 2 * n, "{text}");
        }
    }

    #[test]
    fn per_weight_sums_to_total() {
        let i = parse_ideal("x^2,y^3,z^3,x*y,x*z,y*z^2,y^2*z", 3).unwrap();
        let r = tangent_dimension_with(
            &i,
            TangentOptions {
                per_weight: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(r.dimension, 29);
        let pieces = r.per_weight.unwrap();
        assert_eq!(pieces.iter().map(|p| p.dimension).sum::<usize>(), 29);
        assert!(pieces.windows(2).all(|w| w[0].weight < w[1].weight));
    }

    #[test]
    fn errors() {
        let line = parse_ideal("x^2,y", 3).unwrap();
        assert!(matches!(
            tangent_dimension(&line),
            Err(Error::NotZeroDimensional)
        ));
        let big = power_ideal(3, 5).unwrap();
        assert!(matches!(
            tangent_dimension_dense(&big),
            Err(Error::ColengthCap { cap: 20 })
        ));
        assert!(matches!(
            tangent_dimension_with(
                &big,
                TangentOptions {
                    colength_cap: 30,
                    per_weight: false
                }
            ),
            Err(Error::ColengthCap { cap: 30 })
        ));
    }
}
