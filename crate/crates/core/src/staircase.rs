//! Standard monomials of a zero-dimensional monomial ideal.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};

/// Default bound on the colength of materialized staircases.
pub const DEFAULT_COLENGTH_CAP: usize = 512;

/// Boxes up to this many cells get a dense lookup table.
const DENSE_LOOKUP_LIMIT: usize = 1 << 22;

/// The finite divisibility-closed set of monomials outside an ideal.
#[derive(Clone, Debug)]
pub struct Staircase {
    members: Vec<ExponentVector>,
    lookup: Lookup,
}

#[derive(Clone, Debug)]
enum Lookup {
    Dense { dims: Vec<usize>, slots: Vec<u32> },
    Sparse(HashMap<Vec<u32>, u32>),
}

const EMPTY: u32 = u32::MAX;

impl Staircase {
    /// Members in canonical (graded-lex) order.
    pub fn members(&self) -> &[ExponentVector] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Position of `v` in [`Self::members`], if it is a standard monomial.
    pub fn index_of(&self, v: &[u32]) -> Option<usize> {
        match &self.lookup {
            Lookup::Dense { dims, slots } => {
                let mut flat = 0usize;
                for (&e, &d) in v.iter().zip(dims) {
                    let e = e as usize;
                    if e >= d {
                        return None;
                    }
                    flat = flat * d + e;
                }
                let slot = slots[flat];
                (slot != EMPTY).then_some(slot as usize)
            }
            Lookup::Sparse(map) => map.get(v).map(|&i| i as usize),
        }
    }

    /// Position of `base + shift`, which must be componentwise nonnegative to
    /// be a monomial at all.
    pub fn index_of_shifted(&self, base: &[u32], shift: &[i64]) -> Option<usize> {
        let mut buf = [0u32; 8];
        let mut heap;
        let target: &mut [u32] = if base.len() <= buf.len() {
            &mut buf[..base.len()]
        } else {
            heap = vec![0u32; base.len()];
            &mut heap
        };
        for ((t, &b), &s) in target.iter_mut().zip(base).zip(shift) {
            let v = b as i64 + s;
            if v < 0 || v > u32::MAX as i64 {
                return None;
            }
            *t = v as u32;
        }
        self.index_of(target)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.index_of(v).is_some()
    }
}

/// Standard monomials of `ideal`, refusing colengths above `cap`.
pub fn staircase_with_cap(ideal: &MonomialIdeal, cap: usize) -> Result<Staircase> {
    if !ideal.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional);
    }
    let n = ideal.nvars();
    let zero = vec![0u32; n];
    let mut members: Vec<ExponentVector> = Vec::new();
    if !ideal.contains(&zero) {
        // Grow the order ideal from the origin; every member is reached from a
        // member with one coordinate decreased.
        let mut seen: HashMap<Vec<u32>, ()> = HashMap::new();
        let mut stack = vec![zero.clone()];
        seen.insert(zero, ());
        while let Some(v) = stack.pop() {
            members.push(ExponentVector::from_vec_unchecked(v.clone()));
            if members.len() > cap {
                return Err(Error::ColengthCap { cap });
            }
            for i in 0..n {
                let mut w = v.clone();
                w[i] += 1;
                if !seen.contains_key(&w) && !ideal.contains(&w) {
                    seen.insert(w.clone(), ());
                    stack.push(w);
                }
            }
        }
    }
    members.sort();
    Ok(build(members, n))
}

/// Standard monomials with the default cap.
pub fn staircase(ideal: &MonomialIdeal) -> Result<Staircase> {
    staircase_with_cap(ideal, DEFAULT_COLENGTH_CAP)
}

/// `dim_C R/I`, the number of standard monomials.
pub fn colength(ideal: &MonomialIdeal) -> Result<usize> {
    staircase(ideal).map(|s| s.len())
}

/// Assembles a staircase from an already divisibility-closed member list.
pub(crate) fn build(mut members: Vec<ExponentVector>, nvars: usize) -> Staircase {
    members.sort();
    let mut dims = vec![1usize; nvars];
    for m in &members {
        for (d, &e) in dims.iter_mut().zip(m.iter()) {
            *d = (*d).max(e as usize + 1);
        }
    }
    let cells = dims
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .filter(|&c| c <= DENSE_LOOKUP_LIMIT);
    let lookup = match cells {
        Some(cells) => {
            let mut slots = vec![EMPTY; cells];
            for (idx, m) in members.iter().enumerate() {
                let flat = m
                    .iter()
                    .zip(&dims)
                    .fold(0usize, |f, (&e, &d)| f * d + e as usize);
                slots[flat] = idx as u32;
            }
            Lookup::Dense { dims, slots }
        }
        None => Lookup::Sparse(
            members
                .iter()
                .enumerate()
                .map(|(i, m)| (m.to_vec(), i as u32))
                .collect(),
        ),
    };
    Staircase { members, lookup }
}
