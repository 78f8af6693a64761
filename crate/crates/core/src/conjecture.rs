//! Checkers for the convex-hull criteria that single out monomial ideals of
//! maximal tangent dimension.
//!
//! Variables are first relabelled so that the pure-power exponents satisfy
//! `m1 <= m2 <= m3`; every condition is then evaluated on that normal form.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hull::{self, convex_hull, cross, dot, primitive, rank3, sub, to_p3, Hull, Side, P3};
use crate::monomial::{minimalize, ExponentVector, MonomialIdeal};
use crate::search::{ideal_of, PlanePartition};
use crate::staircase::colength;

/// Default node budget of the boundary-maximality search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// `C(n, k)` exactly.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// The unique `k` with `C(N-1+k, N) <= n < C(N+k, N)`.
pub fn colength_bracket(nvars: usize, n: u64) -> u64 {
    let nv = nvars as u64;
    let mut k = 0;
    while binomial(nv + k, nv) <= n as u128 {
        k += 1;
    }
    k
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessaryReport {
    pub n: u64,
    pub k: u64,
    pub m1: u32,
    pub passes: bool,
}

/// Whether the smallest pure power equals the colength bracket.
pub fn check_necessary(ideal: &MonomialIdeal) -> Result<NecessaryReport> {
    let powers = ideal.pure_powers().ok_or(Error::NotZeroDimensional)?;
    let n = colength(ideal)? as u64;
    let k = colength_bracket(ideal.nvars(), n);
    let m1 = *powers.iter().min().expect("at least one variable");
    Ok(NecessaryReport {
        n,
        k,
        m1,
        passes: m1 as u64 == k,
    })
}

/// Which side of the simplex the candidate generators may lie on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    /// Below or on the simplex; the lower boundary is counted.
    Lower,
    /// Above or on the simplex; the upper boundary is counted.
    Upper,
    /// Anywhere; both boundaries are counted together.
    Both,
}

/// Position of a point relative to the plane through the pure powers:
/// negative below, zero on, positive above.
fn simplex_side(m: [u32; 3], p: P3) -> i64 {
    let m = m.map(|v| v as i64);
    p[0] * m[1] * m[2] + p[1] * m[0] * m[2] + p[2] * m[0] * m[1] - m[0] * m[1] * m[2]
}

fn in_region(m: [u32; 3], region: Region, p: P3) -> bool {
    let s = simplex_side(m, p);
    match region {
        Region::Lower => s <= 0,
        Region::Upper => s >= 0,
        Region::Both => true,
    }
}

/// Lattice points on the boundary part designated by `region`.
pub fn region_lattice_points(h: &Hull, region: Region) -> Result<Vec<ExponentVector>> {
    Ok(match region {
        Region::Lower => h.boundary_lattice_points(Side::Lower)?,
        Region::Upper => h.boundary_lattice_points(Side::Upper)?,
        Region::Both => {
            let mut s: BTreeSet<ExponentVector> = h
                .boundary_lattice_points(Side::Lower)?
                .into_iter()
                .collect();
            s.extend(h.boundary_lattice_points(Side::Upper)?);
            s.into_iter().collect()
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryMax {
    pub m: [u32; 3],
    pub region: Region,
    pub count: usize,
    /// One ideal per maximizing hull, sorted canonically.
    pub witnesses: Vec<MonomialIdeal>,
    /// Candidate generator sets examined.
    pub nodes: u64,
}

fn validate_m(m: [u32; 3]) -> Result<()> {
    if m[0] == 0 || m[0] > m[1] || m[1] > m[2] {
        return Err(Error::InvalidParam {
            kind: format!("pure powers {m:?}"),
            param: m[0],
        });
    }
    Ok(())
}

fn pure_power_points(m: [u32; 3]) -> [P3; 3] {
    [
        [m[0] as i64, 0, 0],
        [0, m[1] as i64, 0],
        [0, 0, m[2] as i64],
    ]
}

fn leq(a: P3, b: P3) -> bool {
    a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]
}

/// Full-dimensional hull state of a candidate in convex position.
#[derive(Clone)]
struct Node {
    pts: Vec<P3>,
    planes: Vec<(P3, i64)>,
    last: usize,
}

impl Node {
    /// The hull after adding `p`, or `None` if some point stops being a
    /// vertex (which stays true for every superset).
    fn extend(&self, p: P3, idx: usize) -> Option<Node> {
        if !self.planes.iter().any(|&(n, b)| dot(n, p) > b) {
            return None;
        }
        let mut planes: BTreeSet<(P3, i64)> = self
            .planes
            .iter()
            .copied()
            .filter(|&(n, b)| dot(n, p) <= b)
            .collect();
        let k = self.pts.len();
        for i in 0..k {
            let u = sub(self.pts[i], p);
            for j in i + 1..k {
                let n = cross(u, sub(self.pts[j], p));
                if n == [0, 0, 0] {
                    continue;
                }
                let n = primitive(n);
                let b = dot(n, p);
                let (mut above, mut below) = (false, false);
                for &q in &self.pts {
                    let s = dot(n, q) - b;
                    above |= s > 0;
                    below |= s < 0;
                    if above && below {
                        break;
                    }
                }
                if !above {
                    planes.insert((n, b));
                } else if !below {
                    planes.insert(([-n[0], -n[1], -n[2]], -b));
                }
            }
        }
        let planes: Vec<(P3, i64)> = planes.into_iter().collect();
        let mut pts = self.pts.clone();
        pts.push(p);
        let all_vertices = pts.iter().all(|&q| {
            let through: Vec<P3> = planes
                .iter()
                .filter(|(n, b)| dot(*n, q) == *b)
                .map(|(n, _)| *n)
                .collect();
            rank3(&through) == 3
        });
        all_vertices.then_some(Node {
            pts,
            planes,
            last: idx,
        })
    }
}

/// Shared context of one boundary-maximality search.
struct Search {
    region: Region,
    candidates: Vec<P3>,
    /// Lattice points of the bounding box, the only ones a hull can hold.
    box_points: Vec<P3>,
    budget: u64,
    nodes: AtomicU64,
}

#[derive(Default)]
struct Tally {
    count: usize,
    /// Vertex sets of the maximizing hulls.
    hulls: Vec<Vec<P3>>,
}

impl Tally {
    fn offer(&mut self, count: usize, pts: &[P3]) {
        if count > self.count || self.hulls.is_empty() {
            self.count = count;
            self.hulls.clear();
        }
        if count == self.count {
            let mut v = pts.to_vec();
            v.sort();
            self.hulls.push(v);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        if other.hulls.is_empty() {
            return self;
        }
        if self.hulls.is_empty() || other.count > self.count {
            return other;
        }
        if other.count == self.count {
            self.hulls.extend(other.hulls);
        }
        self
    }
}

impl Search {
    fn counted(&self, n: P3, b: i64) -> bool {
        match self.region {
            Region::Lower => b < 0,
            Region::Upper => n.iter().sum::<i64>() > 0,
            Region::Both => b < 0 || n.iter().sum::<i64>() > 0,
        }
    }

    /// Lattice points on the designated boundary of a full-dimensional hull.
    fn count(&self, planes: &[(P3, i64)]) -> usize {
        let marked: Vec<bool> = planes.iter().map(|&(n, b)| self.counted(n, b)).collect();
        self.box_points
            .iter()
            .filter(|&&q| {
                let mut on = false;
                for (t, &(n, b)) in planes.iter().enumerate() {
                    let s = dot(n, q);
                    if s > b {
                        return false;
                    }
                    on |= s == b && marked[t];
                }
                on
            })
            .count()
    }

    fn tick(&self) -> Result<()> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) + 1 > self.budget {
            Err(Error::BudgetExceeded {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    fn dfs(&self, node: &Node, tally: &mut Tally) -> Result<()> {
        self.tick()?;
        tally.offer(self.count(&node.planes), &node.pts);
        for idx in node.last + 1..self.candidates.len() {
            let p = self.candidates[idx];
            if node.pts.iter().any(|&q| leq(q, p) || leq(p, q)) {
                continue;
            }
            if let Some(child) = node.extend(p, idx) {
                self.dfs(&child, tally)?;
            }
        }
        Ok(())
    }
}

/// Canonical representative of a maximizing hull: its vertices together
/// with every counted lattice point when those form an antichain, otherwise
/// the vertices alone. Both choices have the same hull.
fn witness(vertices: &[P3], region: Region) -> Result<MonomialIdeal> {
    let to_ev = |p: &P3| ExponentVector::from_vec_unchecked(p.iter().map(|&c| c as u32).collect());
    let verts: Vec<ExponentVector> = vertices.iter().map(to_ev).collect();
    let h = convex_hull(&verts)?;
    let mut full: BTreeSet<ExponentVector> = verts.iter().cloned().collect();
    full.extend(region_lattice_points(&h, region)?);
    let full: Vec<ExponentVector> = full.into_iter().collect();
    let antichain = full
        .iter()
        .all(|a| full.iter().all(|b| a == b || !a.divides(b)));
    minimalize(3, if antichain { full } else { verts })
}

/// Largest number of designated boundary lattice points over all monomial
/// ideals containing `x^m1, y^m2, z^m3` whose other minimal generators lie
/// in `region`.
///
/// A hull is determined by its vertices and interior generators never
/// change it, so only generator sets in convex position are enumerated;
/// that family is closed under taking subsets, which makes the pruning
/// exact. Exceeding `budget` candidate sets is an error.
pub fn max_boundary_count(m: [u32; 3], region: Region, budget: u64) -> Result<BoundaryMax> {
    validate_m(m)?;
    let powers = pure_power_points(m);
    let mut candidates = Vec::new();
    for a in 0..m[0] as i64 {
        for b in 0..m[1] as i64 {
            for c in 0..m[2] as i64 {
                let p = [a, b, c];
                let support = p.iter().filter(|&&v| v > 0).count();
                // points on the simplex plane are never vertices of a hull
                // containing its three corners
                if support >= 2 && simplex_side(m, p) != 0 && in_region(m, region, p) {
                    candidates.push(p);
                }
            }
        }
    }
    candidates
        .sort_by_key(|p| ExponentVector::from_vec_unchecked(p.iter().map(|&c| c as u32).collect()));
    let mut box_points = Vec::new();
    for a in 0..=m[0] as i64 {
        for b in 0..=m[1] as i64 {
            for c in 0..=m[2] as i64 {
                box_points.push([a, b, c]);
            }
        }
    }
    let search = Search {
        region,
        candidates,
        box_points,
        budget,
        nodes: AtomicU64::new(0),
    };

    // The root is the simplex itself.
    search.tick()?;
    let simplex: Vec<ExponentVector> = powers
        .iter()
        .map(|p| ExponentVector::from_vec_unchecked(p.iter().map(|&c| c as u32).collect()))
        .collect();
    let root_hull = convex_hull(&simplex)?;
    let mut root = Tally::default();
    root.offer(region_lattice_points(&root_hull, region)?.len(), &powers);

    let tallies: Vec<Result<Tally>> = (0..search.candidates.len())
        .into_par_iter()
        .map(|idx| {
            let p = search.candidates[idx];
            let mut pts = powers.to_vec();
            pts.push(p);
            let node = Node {
                planes: hull::facet_planes(&pts),
                pts,
                last: idx,
            };
            let mut tally = Tally::default();
            if hull::vertex_mask(&node.pts, &node.planes)
                .iter()
                .all(|&v| v)
            {
                search.dfs(&node, &mut tally)?;
            }
            Ok(tally)
        })
        .collect();
    let mut total = root;
    for t in tallies {
        total = total.merge(t?);
    }
    let mut witnesses = total
        .hulls
        .iter()
        .map(|v| witness(v, region))
        .collect::<Result<Vec<_>>>()?;
    witnesses.sort();
    witnesses.dedup();
    Ok(BoundaryMax {
        m,
        region,
        count: total.count,
        witnesses,
        nodes: search.nodes.load(Ordering::Relaxed),
    })
}

/// Every Borel-fixed staircase with pure powers exactly `m`, for the order
/// `x > y > z`. Standard sets of such ideals are plane partitions that are
/// strictly decreasing along rows and columns with
/// `pi[a-1][b+1] >= pi[a][b]`.
pub fn borel_ideals_with_powers(m: [u32; 3]) -> Result<Vec<MonomialIdeal>> {
    validate_m(m)?;
    fn rows(
        prev: &[u32],
        a: usize,
        m: [u32; 3],
        pp: &mut PlanePartition,
        out: &mut Vec<MonomialIdeal>,
    ) {
        if a == m[0] as usize {
            out.push(ideal_of(pp));
            return;
        }
        // row a: positive, strictly decreasing, bounded by the row above
        let max_len = prev.len().saturating_sub(1);
        fn build(
            prev: &[u32],
            max_len: usize,
            cur: &mut Vec<u32>,
            a: usize,
            m: [u32; 3],
            pp: &mut PlanePartition,
            out: &mut Vec<MonomialIdeal>,
        ) {
            if !cur.is_empty() {
                pp.push(cur.clone());
                rows(&cur.clone(), a + 1, m, pp, out);
                pp.pop();
            }
            let b = cur.len();
            if b >= max_len {
                return;
            }
            let mut hi = (prev[b] - 1).min(prev[b + 1]);
            if let Some(&l) = cur.last() {
                hi = hi.min(l - 1);
            }
            for v in 1..=hi {
                cur.push(v);
                build(prev, max_len, cur, a, m, pp, out);
                cur.pop();
            }
        }
        build(prev, max_len, &mut Vec::new(), a, m, pp, out);
    }
    if m[1] > m[2] || m[0] > m[2] {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    // row 0 is forced: z^m3 standard up to m3-1 over (0,0), length m2
    fn first(cur: &mut Vec<u32>, m: [u32; 3], out: &mut Vec<MonomialIdeal>) {
        if cur.len() == m[1] as usize {
            let mut pp = vec![cur.clone()];
            let row = cur.clone();
            if m[0] == 1 {
                out.push(ideal_of(&pp));
            } else {
                rows(&row, 1, m, &mut pp, out);
            }
            return;
        }
        let last = *cur.last().unwrap();
        let remaining = m[1] as usize - cur.len();
        for v in remaining as u32..last {
            cur.push(v);
            first(cur, m, out);
            cur.pop();
        }
    }
    first(&mut vec![m[2]], m, &mut out);
    out.sort();
    Ok(out)
}

/// The boundary maximum over Borel-fixed candidates, optionally only those
/// of colength `n`.
pub fn max_boundary_count_borel(
    m: [u32; 3],
    region: Region,
    n: Option<usize>,
) -> Result<BoundaryMax> {
    let mut best = 0usize;
    let mut witnesses = Vec::new();
    let mut nodes = 0;
    for ideal in borel_ideals_with_powers(m)? {
        nodes += 1;
        let ok = ideal
            .generators()
            .iter()
            .all(|g| in_region(m, region, to_p3(g)));
        if !ok || n.is_some_and(|n| colength(&ideal).ok() != Some(n)) {
            continue;
        }
        let h = convex_hull(ideal.generators())?;
        let c = region_lattice_points(&h, region)?.len();
        if c > best || witnesses.is_empty() {
            best = c;
            witnesses.clear();
        }
        if c == best {
            witnesses.push(ideal);
        }
    }
    Ok(BoundaryMax {
        m,
        region,
        count: best,
        witnesses,
        nodes,
    })
}

/// Candidate family against which boundary maximality is judged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// Every antichain on the required side containing the pure powers.
    All,
    /// Borel-fixed ideals with the same pure powers.
    Borel,
    /// Borel-fixed ideals with the same pure powers and the same colength.
    BorelColength,
}

impl std::str::FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Scope::All),
            "borel" => Ok(Scope::Borel),
            "borel-colength" => Ok(Scope::BorelColength),
            _ => Err(Error::InvalidParam {
                kind: format!("scope `{s}`"),
                param: 0,
            }),
        }
    }
}

/// Outcome of a single condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Not evaluated because a cheaper condition of the same type failed.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub status: Status,
    pub detail: String,
}

impl Condition {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            status: if pass { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    fn skipped() -> Self {
        Self {
            status: Status::Skipped,
            detail: "not evaluated".into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClaimedType {
    I,
    II,
    III,
    #[serde(rename = "none")]
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeReport {
    pub claimed_type: ClaimedType,
    /// Full label such as `I(a)(ii)` or `III(a″)(i)`; `none` otherwise.
    pub label: String,
    /// Labels of every type whose conditions all hold.
    pub matches: Vec<String>,
    /// Pure powers after relabelling, `m1 <= m2 <= m3`.
    pub m: [u32; 3],
    pub n: u64,
    pub k: u64,
    /// `perm[i]` is the new position of variable `i`.
    pub permutation: Vec<usize>,
    /// Standing hypotheses: Borel-fixedness, `m1 = k`, generators spanning
    /// the hull.
    pub hypotheses: BTreeMap<String, Condition>,
    /// Conditions keyed `a`..`e`, `a′`..`e′`, `a″`..`e″`.
    pub conditions: BTreeMap<String, Condition>,
    /// Generators strictly inside the hull of all generators.
    pub interior_generators: Vec<ExponentVector>,
    /// Variable swaps fixing the (relabelled) ideal.
    pub symmetric_swaps: Vec<(usize, usize)>,
    /// Boundary maxima for every region that was searched, unrestricted and
    /// over Borel-fixed candidates.
    pub maxima: Vec<MaximaPair>,
}

/// Boundary maxima of one region under each candidate family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximaPair {
    pub region: Region,
    /// Lattice points on the ideal's own designated boundary.
    pub count: usize,
    /// `None` when the unrestricted search was not requested.
    pub all: Option<usize>,
    pub borel: usize,
    pub borel_colength: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    pub budget: u64,
    /// Family that decides conditions (c), (c′) and (c″).
    pub scope: Scope,
    /// Also run the unrestricted search when `scope` does not need it.
    pub unrestricted: bool,
    /// Run the maximality searches even when a cheaper condition failed.
    pub evaluate_all: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            scope: Scope::BorelColength,
            unrestricted: false,
            evaluate_all: false,
        }
    }
}

/// Relabels variables so that the pure powers increase.
pub fn sort_variables(ideal: &MonomialIdeal) -> Result<(MonomialIdeal, Vec<usize>)> {
    let powers = ideal.pure_powers().ok_or(Error::NotZeroDimensional)?;
    let mut order: Vec<usize> = (0..powers.len()).collect();
    order.sort_by_key(|&i| (powers[i], i));
    let mut perm = vec![0; powers.len()];
    for (pos, &var) in order.iter().enumerate() {
        perm[var] = pos;
    }
    Ok((ideal.permute_variables(&perm)?, perm))
}

/// Borel-fixedness for some variable order compatible with `m1 <= m2 <= m3`.
fn borel_up_to_ties(sorted: &MonomialIdeal, m: [u32; 3]) -> bool {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    perms.iter().any(|p| {
        let keeps_order = (0..3).all(|i| m[p[i]] == m[i]);
        keeps_order
            && sorted
                .permute_variables(p)
                .map(|j| j.is_borel_fixed())
                .unwrap_or(false)
    })
}

fn render_points(pts: &[ExponentVector]) -> String {
    pts.iter()
        .map(|p| format!("{p:?}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn swaps_text(s: &[(usize, usize)]) -> String {
    if s.is_empty() {
        "no coordinate swap".into()
    } else {
        s.iter()
            .map(|(i, j)| format!("swap {i}<->{j}"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Whether the single facet of a boundary is exactly the simplex.
fn is_simplex(h: &Hull, side: Side, m: [u32; 3]) -> Result<(bool, String)> {
    let facets = h.boundary(side)?;
    let corners: BTreeSet<P3> = pure_power_points(m).into_iter().collect();
    if facets.len() != 1 {
        return Ok((false, format!("{} facets", facets.len())));
    }
    let verts: BTreeSet<P3> = facets[0]
        .vertex_ids
        .iter()
        .map(|&i| to_p3(&h.vertices[i]))
        .collect();
    let ok = verts == corners;
    Ok((ok, format!("one facet with {} vertices", verts.len())))
}

/// Evaluates every condition of the three types and reports the first type
/// whose conditions all hold, together with all standing hypotheses.
pub fn classify_type(ideal: &MonomialIdeal) -> Result<TypeReport> {
    classify_type_with(ideal, ClassifyOptions::default())
}

pub fn classify_type_with(ideal: &MonomialIdeal, opts: ClassifyOptions) -> Result<TypeReport> {
    if ideal.nvars() != 3 {
        return Err(Error::UnsupportedDimension(ideal.nvars()));
    }
    let (sorted, permutation) = sort_variables(ideal)?;
    let powers = sorted.pure_powers().expect("zero-dimensional");
    let m = [powers[0], powers[1], powers[2]];
    let nec = check_necessary(&sorted)?;
    let k = nec.k;
    let gens = sorted.generators();
    let h = convex_hull(gens)?;
    let gen_set: BTreeSet<&ExponentVector> = gens.iter().collect();

    let mut hypotheses = BTreeMap::new();
    hypotheses.insert(
        "borel_fixed".to_string(),
        Condition::new(
            borel_up_to_ties(&sorted, m),
            "order x1 > x2 > x3 after relabelling",
        ),
    );
    hypotheses.insert(
        "m1_equals_k".to_string(),
        Condition::new(nec.passes, format!("n={} k={} m1={}", nec.n, nec.k, nec.m1)),
    );
    let interior = h.interior_points();
    hypotheses.insert(
        "spanned_by_generators".to_string(),
        Condition::new(
            interior.is_empty(),
            if interior.is_empty() {
                "no generator strictly inside".to_string()
            } else {
                format!("strictly inside: {}", render_points(&interior))
            },
        ),
    );
    let hyp_ok = hypotheses.values().all(Condition::passed);

    let lower_pts = h.boundary_lattice_points(Side::Lower)?;
    let upper_pts = h.boundary_lattice_points(Side::Upper)?;
    let both_pts = region_lattice_points(&h, Region::Both)?;
    let (k32, m1, m2, m3) = (k as u32, m[0], m[1], m[2]);

    let mut conditions = BTreeMap::new();
    let mut maxima = Vec::new();
    let mut matches = Vec::new();
    let n_usize = nec.n as usize;
    let mut maximal = |region: Region, count: usize, run: bool| -> Result<Condition> {
        if !run {
            return Ok(Condition::skipped());
        }
        let all = if opts.scope == Scope::All || opts.unrestricted {
            Some(max_boundary_count(m, region, opts.budget)?.count)
        } else {
            None
        };
        let borel = max_boundary_count_borel(m, region, None)?.count;
        let borel_colength = max_boundary_count_borel(m, region, Some(n_usize))?.count;
        maxima.push(MaximaPair {
            region,
            count,
            all,
            borel,
            borel_colength,
        });
        let target = match opts.scope {
            Scope::All => all.expect("computed for this scope"),
            Scope::Borel => borel,
            Scope::BorelColength => borel_colength,
        };
        let all_text = all.map_or("not searched".to_string(), |a| a.to_string());
        Ok(Condition::new(
            count >= target,
            format!(
                "{count} lattice points; maximum {all_text} over all candidates, {borel} over Borel-fixed ones, \
                 {borel_colength} over Borel-fixed ones of colength {n_usize}"
            ),
        ))
    };
    let exact = |pts: &[ExponentVector]| -> Condition {
        let on: BTreeSet<&ExponentVector> = pts.iter().collect();
        let off: Vec<ExponentVector> = gens.iter().filter(|g| !on.contains(g)).cloned().collect();
        let extra: Vec<ExponentVector> = pts
            .iter()
            .filter(|p| !gen_set.contains(p))
            .cloned()
            .collect();
        let detail = match (off.is_empty(), extra.is_empty()) {
            (true, true) => "boundary lattice points are exactly the generators".to_string(),
            (false, _) => format!("generators off the boundary: {}", render_points(&off)),
            (true, false) => format!("missing lattice points: {}", render_points(&extra)),
        };
        Condition::new(off.is_empty() && extra.is_empty(), detail)
    };
    let symmetric = |pts: &[ExponentVector]| -> Condition {
        let swaps = hull::point_set_swaps(pts);
        Condition::new(!swaps.is_empty(), swaps_text(&swaps))
    };

    // Type I
    let a_i = m1 == m2 || m2 == m3;
    let a_ii = m1 != m2 || m3 <= m2 + 2;
    let a_iii = m2 != m3 || m1 + 1 >= m2;
    let sub_i = if m1 == m2 { "(ii)" } else { "(iii)" };
    conditions.insert(
        "a".into(),
        Condition::new(
            a_i && a_ii && a_iii,
            format!("m = {m:?}; (i) {a_i}, (ii) {a_ii}, (iii) {a_iii}"),
        ),
    );
    let (b, why) = is_simplex(&h, Side::Upper, m)?;
    conditions.insert(
        "b".into(),
        Condition::new(b, format!("upper boundary: {why}")),
    );
    conditions.insert("d".into(), symmetric(&lower_pts));
    conditions.insert("e".into(), exact(&lower_pts));
    let cheap = hyp_ok && ["a", "b", "d", "e"].iter().all(|c| conditions[*c].passed());
    let c = maximal(Region::Lower, lower_pts.len(), cheap || opts.evaluate_all)?;
    conditions.insert("c".into(), c);
    if ["a", "b", "c", "d", "e"]
        .iter()
        .all(|c| conditions[*c].passed())
        && hyp_ok
    {
        matches.push(format!("I(a){sub_i}"));
    }

    // Type II
    conditions.insert(
        "a′".into(),
        Condition::new(
            m1 == k32 && m2 == k32 + 1 && m3 == k32 + 1,
            format!("m = {m:?}, k = {k}"),
        ),
    );
    let (b, why) = is_simplex(&h, Side::Lower, m)?;
    conditions.insert(
        "b′".into(),
        Condition::new(b, format!("lower boundary: {why}")),
    );
    conditions.insert("d′".into(), symmetric(&upper_pts));
    conditions.insert("e′".into(), exact(&upper_pts));
    let cheap = hyp_ok
        && ["a′", "b′", "d′", "e′"]
            .iter()
            .all(|c| conditions[*c].passed());
    let c = maximal(Region::Upper, upper_pts.len(), cheap || opts.evaluate_all)?;
    conditions.insert("c′".into(), c);
    if ["a′", "b′", "c′", "d′", "e′"]
        .iter()
        .all(|c| conditions[*c].passed())
        && hyp_ok
    {
        matches.push("II".into());
    }

    // Type III
    let iii_i = m1 == k32 && m2 == k32 && m3 == k32 + 1;
    let iii_ii = m1 == k32 && m2 == k32 + 1 && m3 == k32 + 1;
    conditions.insert(
        "a″".into(),
        Condition::new(
            iii_i || iii_ii,
            format!("m = {m:?}, k = {k}; (i) {iii_i}, (ii) {iii_ii}"),
        ),
    );
    let sides: Vec<i64> = gens.iter().map(|g| simplex_side(m, to_p3(g))).collect();
    let above = sides.iter().any(|&s| s > 0);
    let below = sides.iter().any(|&s| s < 0);
    let on_interior: Vec<ExponentVector> = gens
        .iter()
        .zip(&sides)
        .filter(|(g, &s)| s == 0 && g.iter().all(|&c| c > 0))
        .map(|(g, _)| g.clone())
        .collect();
    let nonempty =
        h.dim == 3 && !h.boundary(Side::Lower)?.is_empty() && !h.boundary(Side::Upper)?.is_empty();
    conditions.insert(
        "b″".into(),
        Condition::new(
            above && below && on_interior.is_empty() && nonempty,
            format!(
                "generators above: {above}, below: {below}, inside the simplex: {}",
                if on_interior.is_empty() {
                    "none".to_string()
                } else {
                    render_points(&on_interior)
                }
            ),
        ),
    );
    conditions.insert("d″".into(), symmetric(&h.vertices));
    conditions.insert("e″".into(), exact(&both_pts));
    let cheap = hyp_ok
        && ["a″", "b″", "d″", "e″"]
            .iter()
            .all(|c| conditions[*c].passed());
    let c = maximal(Region::Both, both_pts.len(), cheap || opts.evaluate_all)?;
    conditions.insert("c″".into(), c);
    if ["a″", "b″", "c″", "d″", "e″"]
        .iter()
        .all(|c| conditions[*c].passed())
        && hyp_ok
    {
        matches.push(format!("III(a″){}", if iii_i { "(i)" } else { "(ii)" }));
    }

    let (claimed_type, label) = match matches.first() {
        Some(l) if l.starts_with("III") => (ClaimedType::III, l.clone()),
        Some(l) if l.starts_with("II") => (ClaimedType::II, l.clone()),
        Some(l) => (ClaimedType::I, l.clone()),
        None => (ClaimedType::None, "none".to_string()),
    };
    Ok(TypeReport {
        claimed_type,
        label,
        matches,
        m,
        n: nec.n,
        k,
        permutation,
        hypotheses,
        conditions,
        interior_generators: interior,
        symmetric_swaps: hull::symmetric_swaps(&sorted),
        maxima,
    })
}
