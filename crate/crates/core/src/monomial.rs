//! Exponent vectors and canonical monomial ideals.
//!
//! A [`MonomialIdeal`] always holds its minimal generating set, sorted in
//! graded-lexicographic order with `x_1 > x_2 > ... > x_N`. Two ideals are
//! equal exactly when their canonical forms are equal, so derived `Eq` and
//! `Hash` are meaningful.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest exponent accepted anywhere in the toolkit.
pub const MAX_EXPONENT: u32 = i32::MAX as u32;

/// A point of `N^N`: the exponent of a monomial.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if let Some(&e) = exponents.iter().find(|&&e| e > MAX_EXPONENT) {
            return Err(Error::ExponentOverflow(e as u64));
        }
        Ok(Self(exponents))
    }

    pub fn zero(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    /// The unit vector `e_i` scaled by `power`.
    pub fn pure_power(nvars: usize, var: usize, power: u32) -> Self {
        let mut v = vec![0; nvars];
        v[var] = power;
        Self(v)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Componentwise `self <= other`, i.e. the monomial `self` divides `other`.
    pub fn divides(&self, other: &[u32]) -> bool {
        self.0.iter().zip(other).all(|(a, b)| a <= b)
    }

    /// Number of strictly positive entries.
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&e| e > 0).count()
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    pub(crate) fn from_vec_unchecked(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl MonomialIdeal {
    /// Wraps generators already known to be a sorted, duplicate-free
    /// antichain.
    pub(crate) fn from_canonical_unchecked(nvars: usize, generators: Vec<ExponentVector>) -> Self {
        debug_assert!(generators.windows(2).all(|w| w[0] < w[1]));
        Self { nvars, generators }
    }
}

impl Deref for ExponentVector {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Graded lexicographic order: lower total degree first, then the vector
/// with the larger leading exponent first (`x^2 < xy < y^2`).
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial ideal given by its canonical minimal generating set.
///
/// Ordered by variable count, then generator lists compared in canonical
/// order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<ExponentVector>,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    nvars: usize,
    generators: Vec<Vec<u32>>,
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(raw: IdealJson) -> Result<Self> {
        let gens = raw
            .generators
            .into_iter()
            .map(ExponentVector::new)
            .collect::<Result<Vec<_>>>()?;
        minimalize(raw.nvars, gens)
    }
}

impl From<MonomialIdeal> for IdealJson {
    fn from(ideal: MonomialIdeal) -> Self {
        IdealJson {
            nvars: ideal.nvars,
            generators: ideal.generators.into_iter().map(|g| g.0).collect(),
        }
    }
}

/// Deletes every vector divisible by another one and sorts the survivors
/// canonically.
pub fn minimalize(nvars: usize, gens: Vec<ExponentVector>) -> Result<MonomialIdeal> {
    if nvars == 0 {
        return Err(Error::NoVariables);
    }
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
        return Err(Error::LengthMismatch {
            expected: nvars,
            got: g.nvars(),
        });
    }
    let mut gens = gens;
    gens.sort();
    gens.dedup();
    // Sorted by degree, so a divisor of `g` is always already kept when `g`
    // is examined; distinct vectors of equal degree never divide each other.
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    Ok(MonomialIdeal {
        nvars,
        generators: kept,
    })
}

impl MonomialIdeal {
    /// Builds a canonical ideal from raw exponent rows.
    pub fn from_exponents<I, V>(nvars: usize, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<u32>>,
    {
        let gens = rows
            .into_iter()
            .map(|r| ExponentVector::new(r.into()))
            .collect::<Result<Vec<_>>>()?;
        minimalize(nvars, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Whether the monomial with exponent `v` lies in the ideal.
    pub fn contains(&self, v: &[u32]) -> bool {
        self.generators.iter().any(|g| g.divides(v))
    }

    /// Exponent of the pure-power generator of variable `var`, if any.
    pub fn pure_power(&self, var: usize) -> Option<u32> {
        self.generators
            .iter()
            .find(|g| g.support_size() == 1 && g[var] > 0)
            .map(|g| g[var])
    }

    /// The vector `(m_1, ..., m_N)` of pure-power exponents, when every
    /// variable has one.
    pub fn pure_powers(&self) -> Option<Vec<u32>> {
        (0..self.nvars).map(|v| self.pure_power(v)).collect()
    }

    /// True iff every variable has a pure-power generator.
    pub fn is_zero_dimensional(&self) -> bool {
        self.pure_powers().is_some()
    }

    /// Generators involving at least two distinct variables.
    pub fn mixed_generators(&self) -> Vec<ExponentVector> {
        self.generators
            .iter()
            .filter(|g| g.support_size() >= 2)
            .cloned()
            .collect()
    }

    /// Characteristic-0 Borel criterion with `x_1 > x_2 > ... > x_N`: for
    /// every generator `g` with `g[j] > 0` and every `i < j`,
    /// `g - e_j + e_i` must lie in the ideal.
    pub fn is_borel_fixed(&self) -> bool {
        let mut moved = vec![0u32; self.nvars];
        for g in &self.generators {
            for j in 0..self.nvars {
                if g[j] == 0 {
                    continue;
                }
                for i in 0..j {
                    moved.copy_from_slice(g);
                    moved[j] -= 1;
                    moved[i] += 1;
                    if !self.contains(&moved) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Sends variable `i` to position `perm[i]` (0-based) and
    /// re-canonicalizes.
    pub fn permute_variables(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.nvars)?;
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let mut h = vec![0; self.nvars];
                for (i, &e) in g.iter().enumerate() {
                    h[perm[i]] = e;
                }
                ExponentVector(h)
            })
            .collect();
        minimalize(self.nvars, gens)
    }

    /// Exchanges variables `i` and `j`.
    pub fn swap_variables(&self, i: usize, j: usize) -> Result<Self> {
        for index in [i, j] {
            if index >= self.nvars {
                return Err(Error::BadIndex {
                    index,
                    nvars: self.nvars,
                });
            }
        }
        let mut perm: Vec<usize> = (0..self.nvars).collect();
        perm.swap(i, j);
        self.permute_variables(&perm)
    }
}

fn check_permutation(perm: &[usize], nvars: usize) -> Result<()> {
    let mut seen = vec![false; nvars];
    if perm.len() != nvars {
        return Err(Error::InvalidPermutation(perm.to_vec()));
    }
    for &p in perm {
        if p >= nvars || seen[p] {
            return Err(Error::InvalidPermutation(perm.to_vec()));
        }
        seen[p] = true;
    }
    Ok(())
}

/// All exponent vectors of total degree `k` in `nvars` variables, in
/// canonical order.
pub fn monomials_of_degree(nvars: usize, k: u32) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fill_degree(&mut cur, 0, k, &mut out);
    out.sort();
    out
}

fn fill_degree(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<ExponentVector>) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(ExponentVector(cur.clone()));
        return;
    }
    for e in 0..=left {
        cur[pos] = e;
        fill_degree(cur, pos + 1, left - e, out);
    }
    cur[pos] = 0;
}

/// The power `m^k` of the maximal ideal in `nvars` variables.
pub fn power_ideal(nvars: usize, k: u32) -> Result<MonomialIdeal> {
    if nvars == 0 {
        return Err(Error::NoVariables);
    }
    minimalize(nvars, monomials_of_degree(nvars, k))
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal({})", crate::text::render(self))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(rows: &[[u32; 3]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(3, rows.iter().map(|r| r.to_vec())).unwrap()
    }

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = minimalize(2, vec![ev(&[1, 0]), ev(&[2, 0]), ev(&[0, 1])]).unwrap();
        assert_eq!(i.generators(), &[ev(&[1, 0]), ev(&[0, 1])]);
    }

    #[test]
    fn minimalize_of_m2_plus_cube() {
        let mut gens = monomials_of_degree(3, 2);
        gens.push(ev(&[3, 0, 0]));
        let i = minimalize(3, gens).unwrap();
        // brute-force: keep exactly the vectors with no proper divisor in the list
        let all = {
            let mut g = monomials_of_degree(3, 2);
            g.push(ev(&[3, 0, 0]));
            g
        };
        let expected: Vec<_> = all
            .iter()
            .filter(|a| !all.iter().any(|b| b != *a && b.divides(a)))
            .cloned()
            .collect();
        assert_eq!(i.len(), expected.len());
        assert!(expected.iter().all(|e| i.generators().contains(e)));
        assert_eq!(i, power_ideal(3, 2).unwrap());
    }

    #[test]
    fn minimalize_rejects_empty_and_mismatch() {
        assert!(matches!(minimalize(3, vec![]), Err(Error::EmptyGenerators)));
        assert!(matches!(
            minimalize(3, vec![ev(&[1, 0])]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn exponent_bound() {
        assert!(ExponentVector::new(vec![MAX_EXPONENT]).is_ok());
        assert!(matches!(
            ExponentVector::new(vec![MAX_EXPONENT + 1]),
            Err(Error::ExponentOverflow(_))
        ));
    }

    #[test]
    fn canonical_order_is_graded_lex() {
        let m2 = power_ideal(3, 2).unwrap();
        let rows: Vec<Vec<u32>> = m2.generators().iter().map(|g| g.to_vec()).collect();
        assert_eq!(
            rows,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
    }

    #[test]
    fn zero_dimensionality() {
        assert!(ideal(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).is_zero_dimensional());
        let two = MonomialIdeal::from_exponents(2, [vec![2, 0], vec![1, 1]]).unwrap();
        assert!(!two.is_zero_dimensional());
    }

    #[test]
    fn borel_criterion() {
        for k in 1..5 {
            assert!(power_ideal(3, k).unwrap().is_borel_fixed());
        }
        let i = MonomialIdeal::from_exponents(2, [vec![2, 0], vec![0, 2]]).unwrap();
        assert!(!i.is_borel_fixed());
        let s8 = ideal(&[
            [2, 0, 0],
            [0, 2, 0],
            [0, 0, 4],
            [1, 1, 0],
            [1, 0, 2],
            [0, 1, 2],
        ]);
        assert!(s8.is_borel_fixed());
    }

    #[test]
    fn mixed_generators() {
        let m2 = power_ideal(3, 2).unwrap();
        assert_eq!(
            m2.mixed_generators(),
            vec![ev(&[1, 1, 0]), ev(&[1, 0, 1]), ev(&[0, 1, 1])]
        );
        assert!(power_ideal(3, 1).unwrap().mixed_generators().is_empty());
    }

    #[test]
    fn permutations() {
        let i = ideal(&[[2, 0, 0], [0, 3, 0], [0, 0, 3], [1, 1, 0], [0, 1, 1]]);
        assert_eq!(i.permute_variables(&[0, 1, 2]).unwrap(), i);
        let swapped = i.swap_variables(0, 1).unwrap();
        assert_eq!(swapped.pure_powers().unwrap(), vec![3, 2, 3]);
        assert_eq!(swapped.swap_variables(0, 1).unwrap(), i);
        assert!(matches!(
            i.permute_variables(&[0, 0, 1]),
            Err(Error::InvalidPermutation(_))
        ));
        assert!(i.swap_variables(0, 3).is_err());
    }

    #[test]
    fn power_ideal_generator_counts() {
        assert_eq!(power_ideal(3, 1).unwrap().len(), 3);
        assert_eq!(power_ideal(3, 2).unwrap().len(), 6);
        assert_eq!(power_ideal(3, 5).unwrap().len(), 21);
    }

    #[test]
    fn json_form_canonicalizes() {
        let i: MonomialIdeal =
            serde_json::from_str(r#"{"nvars":3,"generators":[[0,0,1],[1,0,0],[0,1,0],[2,0,0]]}"#)
                .unwrap();
        assert_eq!(i, power_ideal(3, 1).unwrap());
        let back = serde_json::to_string(&i).unwrap();
        assert_eq!(
            back,
            r#"{"nvars":3,"generators":[[1,0,0],[0,1,0],[0,0,1]]}"#
        );
    }
}
