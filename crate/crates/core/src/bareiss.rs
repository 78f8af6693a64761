//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.
//!
//! Rows are sparse `(column, value)` lists. Elimination runs in checked
//! `i64` arithmetic first and restarts over arbitrary-precision integers if
//! any intermediate value overflows, so the result never depends on
//! machine-word limits.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A sparse row: strictly increasing column indices, nonzero values.
pub type SparseRow<T> = Vec<(usize, T)>;

trait Entry: Clone + PartialEq {
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn div_exact(&self, other: &Self) -> Self;
}

impl Entry for i64 {
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        debug_assert_eq!(self % other, 0, "Bareiss division must be exact");
        self / other
    }
}

impl Entry for BigInt {
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        debug_assert!(
            Zero::is_zero(&(self % other)),
            "Bareiss division must be exact"
        );
        self / other
    }
}

/// Rank of the matrix with `ncols` columns given by sparse integer rows.
///
/// Rows may be unsorted and may repeat a column; entries are summed.
pub fn rank(ncols: usize, rows: &[SparseRow<i64>]) -> usize {
    let normalized: Vec<SparseRow<i64>> = rows.iter().map(|r| normalize(r)).collect();
    if let Some(r) = rank_generic(ncols, normalized.clone()) {
        return r;
    }
    let big: Vec<SparseRow<BigInt>> = normalized
        .into_iter()
        .map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect())
        .collect();
    rank_generic(ncols, big).expect("arbitrary-precision elimination cannot overflow")
}

/// Rank of a dense integer matrix.
pub fn rank_dense(rows: &[Vec<i64>]) -> usize {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let sparse: Vec<SparseRow<i64>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(c, &v)| (c, v))
                .collect()
        })
        .collect();
    rank(ncols, &sparse)
}

fn normalize(row: &[(usize, i64)]) -> SparseRow<i64> {
    let mut r = row.to_vec();
    r.sort_by_key(|&(c, _)| c);
    let mut out: SparseRow<i64> = Vec::with_capacity(r.len());
    for (c, v) in r {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|&(_, v)| v != 0);
    out
}

/// One Bareiss step: `(pivot * row - lead * pivot_row) / prev`, dropping the
/// pivot column.
fn combine<T: Entry>(
    row: &[(usize, T)],
    pivot_row: &[(usize, T)],
    pivot: &T,
    prev: &T,
) -> Option<SparseRow<T>> {
    let lead = &row[0].1;
    let (mut a, mut b) = (1usize, 1usize);
    let mut out = Vec::with_capacity(row.len() + pivot_row.len());
    while a < row.len() || b < pivot_row.len() {
        let ca = row.get(a).map_or(usize::MAX, |e| e.0);
        let cb = pivot_row.get(b).map_or(usize::MAX, |e| e.0);
        let (col, value) = if ca < cb {
            let v = pivot.mul(&row[a].1)?;
            a += 1;
            (ca, v)
        } else if cb < ca {
            let v = neg(&lead.mul(&pivot_row[b].1)?)?;
            b += 1;
            (cb, v)
        } else {
            let v = pivot.mul(&row[a].1)?.sub(&lead.mul(&pivot_row[b].1)?)?;
            a += 1;
            b += 1;
            (ca, v)
        };
        if !value.is_zero() {
            out.push((col, value.div_exact(prev)));
        }
    }
    Some(out)
}

fn neg<T: Entry>(v: &T) -> Option<T> {
    let zero = T::one().sub(&T::one())?;
    zero.sub(v)
}

fn rank_generic<T: Entry>(ncols: usize, rows: Vec<SparseRow<T>>) -> Option<usize> {
    // Rows bucketed by their leading column; every row in bucket `c` has
    // zeros in all columns before `c`.
    let mut buckets: Vec<Vec<SparseRow<T>>> = vec![Vec::new(); ncols];
    for r in rows {
        if let Some(&(c, _)) = r.first() {
            buckets[c].push(r);
        }
    }
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..ncols {
        let mut bucket = std::mem::take(&mut buckets[col]);
        if bucket.is_empty() {
            continue;
        }
        let best = (0..bucket.len()).min_by_key(|&i| bucket[i].len()).unwrap();
        let pivot_row = bucket.swap_remove(best);
        let pivot = pivot_row[0].1.clone();
        for row in bucket {
            let reduced = combine(&row, &pivot_row, &pivot, &prev)?;
            if let Some(&(c, _)) = reduced.first() {
                buckets[c].push(reduced);
            }
        }
        // Rows with a zero in the pivot column are scaled by pivot/prev.
        if pivot != prev {
            for later in buckets[col + 1..].iter_mut() {
                for row in later.iter_mut() {
                    for (_, v) in row.iter_mut() {
                        *v = v.mul(&pivot)?.div_exact(&prev);
                    }
                }
            }
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}
