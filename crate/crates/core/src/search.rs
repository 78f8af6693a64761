//! Exhaustive enumeration of zero-dimensional monomial ideals in three
//! variables and certified maxima of the tangent dimension.
//!
//! Ideals of colength `n` in `k[x, y, z]` are in bijection with plane
//! partitions of `n`: the height of the staircase above the cell `(a, b)`
//! is the entry `pi[a][b]`, non-increasing along rows and columns.
//! Enumeration is a depth-first search over the rows of the plane partition
//! in a fixed order, so the output order never depends on how the work is
//! split between threads.
//!
//! The maximum of the tangent dimension over the whole Hilbert scheme is
//! attained at a torus-fixed point (the tangent dimension is upper
//! semicontinuous and every torus orbit closure contains a fixed point),
//! so scanning monomial ideals certifies the global maximum.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::conjecture::classify_type;
use crate::error::{Error, Result};
use crate::fixtures::{table_row, RowKind};
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::staircase::{self, Staircase};
use crate::tangent::{tangent_dimension, tangent_dimension_on};
use crate::text::render;

/// Default largest colength accepted by the enumerator.
pub const DEFAULT_ENUMERATION_CAP: usize = 30;
/// Largest colength reachable with the extended flag.
pub const EXTENDED_ENUMERATION_CAP: usize = 40;
/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "STAIRCASE_CACHE_DIR";

/// A plane partition as rows of non-increasing positive parts.
pub type PlanePartition = Vec<Vec<u32>>;

/// Number of plane partitions of `n` from the generating function
/// `prod (1 - q^k)^{-k}`, via `n pp(n) = sum_k sigma_2(k) pp(n - k)`.
pub fn count_ideals(n: usize) -> u128 {
    let sigma2: Vec<u128> = (0..=n)
        .map(|k| {
            if k == 0 {
                return 0;
            }
            (1..=k)
                .filter(|d| k % d == 0)
                .map(|d| (d * d) as u128)
                .sum()
        })
        .collect();
    let mut pp = vec![0u128; n + 1];
    pp[0] = 1;
    for m in 1..=n {
        let s: u128 = (1..=m).map(|k| sigma2[k] * pp[m - k]).sum();
        pp[m] = s / m as u128;
    }
    pp[n]
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::EnumerationCap { n, cap })
    } else {
        Ok(())
    }
}

/// Every non-increasing row with parts bounded by `bound` (entrywise) and
/// total at most `budget`, in lexicographic order of the part lists.
fn rows_under(bound: &[u32], budget: u32) -> Vec<Vec<u32>> {
    fn go(
        bound: &[u32],
        pos: usize,
        cap: u32,
        left: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if pos >= bound.len() || left == 0 {
            return;
        }
        let hi = cap.min(bound[pos]).min(left);
        for part in 1..=hi {
            cur.push(part);
            go(bound, pos + 1, part, left - part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(bound, 0, u32::MAX, budget, &mut Vec::new(), &mut out);
    out
}

fn dfs_rows(pp: &mut PlanePartition, left: u32, visit: &mut dyn FnMut(&PlanePartition)) {
    if left == 0 {
        visit(pp);
        return;
    }
    let bound = pp
        .last()
        .cloned()
        .expect("first row is placed by the caller");
    for row in rows_under(&bound, left) {
        let s: u32 = row.iter().sum();
        pp.push(row);
        dfs_rows(pp, left - s, visit);
        pp.pop();
    }
}

/// First rows of plane partitions of `n`: the independent search tasks.
fn first_rows(n: usize) -> Vec<Vec<u32>> {
    let n = n as u32;
    rows_under(&vec![n; n as usize], n)
}

fn for_each_under(first: &[u32], n: usize, visit: &mut dyn FnMut(&PlanePartition)) {
    let s: u32 = first.iter().sum();
    let mut pp = vec![first.to_vec()];
    dfs_rows(&mut pp, n as u32 - s, visit);
}

/// Calls `visit` on every plane partition of `n` in canonical order.
pub fn for_each_plane_partition(n: usize, mut visit: impl FnMut(&PlanePartition)) {
    if n == 0 {
        visit(&Vec::new());
        return;
    }
    for first in first_rows(n) {
        for_each_under(&first, n, &mut visit);
    }
}

/// Height of the staircase over cell `(a, b)`.
fn height(pp: &PlanePartition, a: usize, b: usize) -> u32 {
    pp.get(a).and_then(|r| r.get(b)).copied().unwrap_or(0)
}

/// Minimal generators of the ideal whose staircase is `pp`: the points
/// `(a, b, pi[a][b])` that are minimal in the complement.
pub fn ideal_of(pp: &PlanePartition) -> MonomialIdeal {
    let mut gens = Vec::new();
    let rows = pp.len();
    for a in 0..=rows {
        let width = if a < rows { pp[a].len() } else { 0 };
        let prev_width = if a > 0 { pp[a - 1].len() } else { 0 };
        for b in 0..=width.max(prev_width) {
            let c = height(pp, a, b);
            let below_a = a == 0 || c < height(pp, a - 1, b);
            let below_b = b == 0 || c < height(pp, a, b - 1);
            if below_a && below_b {
                gens.push(ExponentVector::from_vec_unchecked(vec![
                    a as u32, b as u32, c,
                ]));
            }
        }
    }
    gens.sort();
    MonomialIdeal::from_canonical_unchecked(3, gens)
}

/// The staircase of `pp` without re-deriving it from generators.
pub fn staircase_of(pp: &PlanePartition) -> Staircase {
    let mut members = Vec::new();
    for (a, row) in pp.iter().enumerate() {
        for (b, &h) in row.iter().enumerate() {
            for c in 0..h {
                members.push(ExponentVector::from_vec_unchecked(vec![
                    a as u32, b as u32, c,
                ]));
            }
        }
    }
    staircase::build(members, 3)
}

/// All ideals of colength `n` in canonical enumeration order.
pub fn enumerate_ideals(n: usize) -> Result<Vec<MonomialIdeal>> {
    enumerate_ideals_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_ideals_with_cap(n: usize, cap: usize) -> Result<Vec<MonomialIdeal>> {
    check_cap(n, cap)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for_each_plane_partition(n, |pp| out.push(ideal_of(pp)));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub n: usize,
    pub max_tangent: usize,
    /// All maximizers, sorted canonically.
    pub argmax: Vec<MonomialIdeal>,
    pub ideals_scanned: u64,
    pub borel_only: bool,
    /// Wall-clock time; not serialized so that output stays reproducible.
    #[serde(skip)]
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub borel_only: bool,
    pub cap: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    /// Directory holding the append-only tangent cache.
    pub cache_dir: Option<PathBuf>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            borel_only: false,
            cap: DEFAULT_ENUMERATION_CAP,
            workers: None,
            cache_dir: None,
        }
    }
}

#[derive(Clone, Debug, Default)]
struct Best {
    max: Option<usize>,
    argmax: Vec<MonomialIdeal>,
    scanned: u64,
}

impl Best {
    fn offer(&mut self, ideal: MonomialIdeal, t: usize) {
        self.scanned += 1;
        match self.max {
            Some(m) if t < m => {}
            Some(m) if t == m => self.argmax.push(ideal),
            _ => {
                self.max = Some(t);
                self.argmax = vec![ideal];
            }
        }
    }

    /// Associative and commutative: max of maxima, union of tied argmaxes.
    fn merge(mut self, other: Best) -> Best {
        self.scanned += other.scanned;
        match (self.max, other.max) {
            (_, None) => {}
            (None, Some(_)) => {
                self.max = other.max;
                self.argmax = other.argmax;
            }
            (Some(a), Some(b)) if b > a => {
                self.max = Some(b);
                self.argmax = other.argmax;
            }
            (Some(a), Some(b)) if a == b => self.argmax.extend(other.argmax),
            _ => {}
        }
        self
    }
}

/// Certified maximum of `T(I)` over all (or all Borel-fixed) ideals of
/// colength `n` in three variables.
pub fn max_tangent(n: usize, borel_only: bool) -> Result<SearchResult> {
    max_tangent_with(
        n,
        &SearchOptions {
            borel_only,
            ..Default::default()
        },
    )
}

pub fn max_tangent_with(n: usize, opts: &SearchOptions) -> Result<SearchResult> {
    check_cap(n, opts.cap)?;
    if n == 0 {
        return Err(Error::EnumerationCap { n, cap: opts.cap });
    }
    let start = Instant::now();
    let cache = match &opts.cache_dir {
        Some(dir) => Some(TangentCache::open(dir, n)?),
        None => None,
    };
    let tasks = first_rows(n);
    let run = || -> Result<Best> {
        let partials: Vec<Result<Best>> = tasks
            .par_iter()
            .map(|first| {
                let mut best = Best::default();
                let mut failure = None;
                for_each_under(first, n, &mut |pp| {
                    if failure.is_some() {
                        return;
                    }
                    let ideal = ideal_of(pp);
                    if opts.borel_only && !ideal.is_borel_fixed() {
                        return;
                    }
                    let t = match &cache {
                        Some(c) => match c.get_or_compute(&ideal, || {
                            tangent_dimension_on(&ideal, &staircase_of(pp))
                        }) {
                            Ok(t) => t,
                            Err(e) => {
                                failure = Some(e);
                                return;
                            }
                        },
                        None => tangent_dimension_on(&ideal, &staircase_of(pp)),
                    };
                    best.offer(ideal, t);
                });
                match failure {
                    Some(e) => Err(e),
                    None => Ok(best),
                }
            })
            .collect();
        let mut total = Best::default();
        for p in partials {
            total = total.merge(p?);
        }
        Ok(total)
    };
    let best = match opts.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| Error::Io(std::io::Error::other(e)))?
            .install(run)?,
        None => run()?,
    };
    if let Some(c) = &cache {
        c.flush()?;
    }
    let mut argmax = best.argmax;
    argmax.sort();
    Ok(SearchResult {
        n,
        max_tangent: best.max.unwrap_or(0),
        argmax,
        ideals_scanned: best.scanned,
        borel_only: opts.borel_only,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// One line of the cache file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub n: usize,
    pub ideal: String,
    pub t: usize,
}

/// Append-only JSONL store of computed tangent dimensions for one colength.
pub struct TangentCache {
    n: usize,
    known: HashMap<String, usize>,
    writer: Mutex<BufWriter<File>>,
}

impl TangentCache {
    /// Path of the cache file for colength `n` inside `dir`.
    pub fn path(dir: &Path, n: usize) -> PathBuf {
        dir.join(format!("tangent-n{n}.jsonl"))
    }

    /// Replays the existing file, if any. A final line without its LF
    /// terminator is an interrupted append and is discarded.
    pub fn open(dir: &Path, n: usize) -> Result<Self> {
        fs::create_dir_all(dir)?;
        let path = Self::path(dir, n);
        let mut known = HashMap::new();
        let mut valid_len = 0u64;
        if path.exists() {
            let mut reader = BufReader::new(File::open(&path)?);
            let mut line = String::new();
            let mut number = 0;
            loop {
                line.clear();
                let read = reader.read_line(&mut line)?;
                if read == 0 || !line.ends_with('\n') {
                    break;
                }
                number += 1;
                let entry: CacheEntry =
                    serde_json::from_str(line.trim_end()).map_err(|e| Error::Cache {
                        line: number,
                        msg: e.to_string(),
                    })?;
                if entry.n != n {
                    return Err(Error::Cache {
                        line: number,
                        msg: format!("entry for colength {} in cache of colength {n}", entry.n),
                    });
                }
                known.insert(entry.ideal, entry.t);
                valid_len += read as u64;
            }
        }
        let mut file = OpenOptions::new()
            .create(true)
            .truncate(false)
            .write(true)
            .open(&path)?;
        file.set_len(valid_len)?;
        file.seek(SeekFrom::End(0))?;
        Ok(Self {
            n,
            known,
            writer: Mutex::new(BufWriter::new(file)),
        })
    }

    pub fn len(&self) -> usize {
        self.known.len()
    }

    pub fn is_empty(&self) -> bool {
        self.known.is_empty()
    }

    pub fn get(&self, ideal: &MonomialIdeal) -> Option<usize> {
        self.known.get(&render(ideal)).copied()
    }

    fn get_or_compute(
        &self,
        ideal: &MonomialIdeal,
        compute: impl FnOnce() -> usize,
    ) -> Result<usize> {
        let key = render(ideal);
        if let Some(&t) = self.known.get(&key) {
            return Ok(t);
        }
        let t = compute();
        let entry = CacheEntry {
            n: self.n,
            ideal: key,
            t,
        };
        let line = serde_json::to_string(&entry)?;
        let mut w = self.writer.lock().expect("cache writer poisoned");
        w.write_all(line.as_bytes())?;
        w.write_all(b"\n")?;
        Ok(t)
    }

    pub fn flush(&self) -> Result<()> {
        self.writer.lock().expect("cache writer poisoned").flush()?;
        Ok(())
    }
}

/// One colength of the reproduced table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRowReport {
    pub n: usize,
    pub kind: RowKind,
    /// Listed ideals (typos corrected), empty for gap rows.
    pub listed_ideals: Vec<MonomialIdeal>,
    pub listed_tangents: Vec<usize>,
    pub computed_max: usize,
    pub computed_argmax: Vec<MonomialIdeal>,
    /// `classify_type` label of each argmax ideal, in argmax order.
    pub type_labels: Vec<String>,
    /// Listed rows: every listed ideal is a maximizer. Gap rows: no
    /// maximizer receives a type label.
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Recomputes rows `1..=n_max` of the table of maximal examples.
pub fn reproduce_table(n_max: usize) -> Result<Vec<TableRowReport>> {
    reproduce_table_with(n_max, &SearchOptions::default())
}

pub fn reproduce_table_with(n_max: usize, opts: &SearchOptions) -> Result<Vec<TableRowReport>> {
    check_cap(n_max, opts.cap)?;
    let opts = SearchOptions {
        borel_only: false,
        ..opts.clone()
    };
    (1..=n_max)
        .map(|n| {
            let result = max_tangent_with(n, &opts)?;
            let row = table_row(n);
            let kind = row.map_or(RowKind::Gap, |r| r.kind);
            let listed_ideals: Vec<MonomialIdeal> = row
                .map(|r| r.ideals.iter().map(|p| p.ideal()).collect())
                .unwrap_or_default();
            let listed_tangents = listed_ideals
                .iter()
                .map(|i| tangent_dimension(i).map(|t| t.dimension))
                .collect::<Result<Vec<_>>>()?;
            let type_labels = result
                .argmax
                .iter()
                .map(|i| classify_type(i).map(|r| r.label))
                .collect::<Result<Vec<_>>>()?;
            let matches = if listed_ideals.is_empty() {
                type_labels.iter().all(|l| l == "none")
            } else {
                listed_ideals
                    .iter()
                    .all(|i| result.argmax.binary_search(i).is_ok())
            };
            Ok(TableRowReport {
                n,
                kind,
                listed_ideals,
                listed_tangents,
                computed_max: result.max_tangent,
                computed_argmax: result.argmax,
                type_labels,
                matches,
            })
        })
        .collect()
}
