//! Exact convex hulls of exponent sets in three dimensions.
//!
//! Everything is integer arithmetic. Supporting planes are found by testing
//! the plane through every non-collinear triple of input points against all
//! others; at the sizes that occur here (a few dozen generators) this is
//! fast and has no degenerate cases to special-case.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};

pub(crate) type P3 = [i64; 3];

/// An oriented face: `normal . x <= offset` holds on the whole hull, with
/// equality exactly on the face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    pub normal: [i64; 3],
    pub offset: i64,
    /// Indices into [`Hull::vertices`], counter-clockwise seen from outside.
    pub vertex_ids: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hull {
    pub points: Vec<ExponentVector>,
    /// Extreme points, in canonical order.
    pub vertices: Vec<ExponentVector>,
    pub facets: Vec<Facet>,
    pub dim: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lower,
    Upper,
}

pub(crate) fn sub(a: P3, b: P3) -> P3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub(crate) fn cross(a: P3, b: P3) -> P3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub(crate) fn dot(a: P3, b: P3) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn primitive(v: P3) -> P3 {
    let g = gcd(gcd(v[0], v[1]), v[2]);
    if g <= 1 {
        v
    } else {
        [v[0] / g, v[1] / g, v[2] / g]
    }
}

fn is_zero(v: P3) -> bool {
    v == [0, 0, 0]
}

pub(crate) fn to_p3(e: &ExponentVector) -> P3 {
    [e[0] as i64, e[1] as i64, e[2] as i64]
}

fn from_p3(p: P3) -> ExponentVector {
    ExponentVector::from_vec_unchecked(p.iter().map(|&c| c as u32).collect())
}

/// Rank (0..=3) of a set of integer vectors.
pub(crate) fn rank3(vs: &[P3]) -> usize {
    let Some(&a) = vs.iter().find(|v| !is_zero(**v)) else {
        return 0;
    };
    let Some(&b) = vs.iter().find(|v| !is_zero(cross(a, **v))) else {
        return 1;
    };
    let ab = cross(a, b);
    if vs.iter().any(|&v| dot(ab, v) != 0) {
        3
    } else {
        2
    }
}

/// Affine dimension of a point set, with a normal of its plane when it is 2.
fn affine_dim(pts: &[P3]) -> (usize, Option<P3>) {
    if pts.len() <= 1 {
        return (0, None);
    }
    let d: Vec<P3> = pts.iter().map(|&p| sub(p, pts[0])).collect();
    match rank3(&d) {
        0 => (0, None),
        1 => (1, None),
        2 => {
            let a = *d.iter().find(|v| !is_zero(**v)).unwrap();
            let b = *d.iter().find(|v| !is_zero(cross(a, **v))).unwrap();
            (2, Some(primitive(cross(a, b))))
        }
        _ => (3, None),
    }
}

/// All supporting planes of a full-dimensional point set, deduplicated and
/// sorted.
pub(crate) fn facet_planes(pts: &[P3]) -> Vec<(P3, i64)> {
    let mut planes = BTreeSet::new();
    let k = pts.len();
    for i in 0..k {
        for j in i + 1..k {
            let u = sub(pts[j], pts[i]);
            for l in j + 1..k {
                let n = cross(u, sub(pts[l], pts[i]));
                if is_zero(n) {
                    continue;
                }
                let n = primitive(n);
                let b = dot(n, pts[i]);
                let (mut above, mut below) = (false, false);
                for &p in pts {
                    let s = dot(n, p) - b;
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
    }
    planes.into_iter().collect()
}

/// Extreme points of a full-dimensional set given its facet planes: a point
/// is a vertex iff the normals of the facets through it span space.
pub(crate) fn vertex_mask(pts: &[P3], planes: &[(P3, i64)]) -> Vec<bool> {
    pts.iter()
        .map(|&p| {
            let through: Vec<P3> = planes
                .iter()
                .filter(|(n, b)| dot(*n, p) == *b)
                .map(|(n, _)| *n)
                .collect();
            rank3(&through) == 3
        })
        .collect()
}

/// Extreme points of a planar set with plane normal `n`.
fn planar_vertex_mask(pts: &[P3], n: P3) -> Vec<bool> {
    // In-plane supporting lines through pairs; a vertex lies on two
    // non-parallel ones.
    let k = pts.len();
    let mut dirs: Vec<Vec<P3>> = vec![Vec::new(); k];
    for i in 0..k {
        for j in i + 1..k {
            let e = sub(pts[j], pts[i]);
            if is_zero(e) {
                continue;
            }
            let side = cross(n, e);
            let (mut pos, mut neg) = (false, false);
            for &p in pts {
                let s = dot(side, sub(p, pts[i]));
                pos |= s > 0;
                neg |= s < 0;
            }
            if pos && neg {
                continue;
            }
            for (m, &p) in pts.iter().enumerate() {
                if dot(side, sub(p, pts[i])) == 0 {
                    dirs[m].push(primitive(e));
                }
            }
        }
    }
    dirs.iter().map(|d| rank3(d) == 2).collect()
}

/// Sorts coplanar points counter-clockwise as seen from the tip of `n`.
fn ccw_order(ids: &mut [usize], pts: &[P3], n: P3) {
    let k = ids.len() as i64;
    let mut c = [0i64; 3];
    for &i in ids.iter() {
        for a in 0..3 {
            c[a] += pts[i][a];
        }
    }
    // Scaled by k so that the centroid stays integral.
    let rel = |i: usize| {
        [
            pts[i][0] * k - c[0],
            pts[i][1] * k - c[1],
            pts[i][2] * k - c[2],
        ]
    };
    let reference = rel(ids[0]);
    let ortho = cross(n, reference);
    let half = |v: P3| {
        let x = dot(v, reference);
        let y = dot(v, ortho);
        if y > 0 || (y == 0 && x > 0) {
            0
        } else {
            1
        }
    };
    ids.sort_by(|&a, &b| {
        let (va, vb) = (rel(a), rel(b));
        half(va)
            .cmp(&half(vb))
            .then_with(|| 0.cmp(&dot(n, cross(va, vb))))
    });
}

/// Exact convex hull of the exponent vectors of a three-variable ideal.
pub fn convex_hull(points: &[ExponentVector]) -> Result<Hull> {
    if let Some(p) = points.iter().find(|p| p.nvars() != 3) {
        return Err(Error::UnsupportedDimension(p.nvars()));
    }
    if points.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let mut uniq: Vec<ExponentVector> = points.to_vec();
    uniq.sort();
    uniq.dedup();
    let pts: Vec<P3> = uniq.iter().map(to_p3).collect();
    let (dim, plane_normal) = affine_dim(&pts);

    let (mask, planes) = match dim {
        0 => (vec![true], Vec::new()),
        1 => {
            // the two lexicographic extremes of a collinear set
            let lo = (0..pts.len()).min_by_key(|&i| pts[i]).unwrap();
            let hi = (0..pts.len()).max_by_key(|&i| pts[i]).unwrap();
            (
                (0..pts.len()).map(|i| i == lo || i == hi).collect(),
                Vec::new(),
            )
        }
        2 => {
            let mut n = plane_normal.unwrap();
            if n.iter().sum::<i64>() < 0 || (n.iter().sum::<i64>() == 0 && n < [0, 0, 0]) {
                n = [-n[0], -n[1], -n[2]];
            }
            (planar_vertex_mask(&pts, n), vec![(n, dot(n, pts[0]))])
        }
        _ => {
            let planes = facet_planes(&pts);
            (vertex_mask(&pts, &planes), planes)
        }
    };
    let vert_pts: Vec<P3> = pts
        .iter()
        .zip(&mask)
        .filter(|(_, &m)| m)
        .map(|(&p, _)| p)
        .collect();
    let facets = planes
        .into_iter()
        .map(|(n, b)| {
            let mut ids: Vec<usize> = (0..vert_pts.len())
                .filter(|&i| dot(n, vert_pts[i]) == b)
                .collect();
            ccw_order(&mut ids, &vert_pts, n);
            Facet {
                normal: n,
                offset: b,
                vertex_ids: ids,
            }
        })
        .collect();
    Ok(Hull {
        points: uniq,
        vertices: vert_pts.into_iter().map(from_p3).collect(),
        facets,
        dim,
    })
}

/// Hull of the minimal generator exponents of a three-variable ideal.
pub fn ideal_hull(ideal: &MonomialIdeal) -> Result<Hull> {
    if ideal.nvars() != 3 {
        return Err(Error::UnsupportedDimension(ideal.nvars()));
    }
    convex_hull(ideal.generators())
}

impl Facet {
    pub fn is_lower(&self) -> bool {
        self.offset < 0
    }

    pub fn is_upper(&self) -> bool {
        self.normal.iter().sum::<i64>() > 0
    }

    pub fn contains(&self, p: P3) -> bool {
        dot(self.normal, p) == self.offset
    }
}

impl Hull {
    fn vertex_p3(&self, i: usize) -> P3 {
        to_p3(&self.vertices[i])
    }

    /// Whether `p` lies in the closed hull.
    pub fn contains(&self, p: &ExponentVector) -> bool {
        let q = to_p3(p);
        match self.dim {
            3 => self.facets.iter().all(|f| dot(f.normal, q) <= f.offset),
            2 => self.in_facet(&self.facets[0], q),
            _ => self.vertices.iter().any(|v| v == p) || self.on_segment(q),
        }
    }

    fn on_segment(&self, q: P3) -> bool {
        if self.vertices.len() != 2 {
            return false;
        }
        let (a, b) = (self.vertex_p3(0), self.vertex_p3(1));
        let (ab, aq) = (sub(b, a), sub(q, a));
        is_zero(cross(ab, aq)) && dot(ab, aq) >= 0 && dot(ab, aq) <= dot(ab, ab)
    }

    /// Whether the lattice point `q` lies on the closed polygon `f`.
    fn in_facet(&self, f: &Facet, q: P3) -> bool {
        if !f.contains(q) {
            return false;
        }
        let ids = &f.vertex_ids;
        (0..ids.len()).all(|t| {
            let a = self.vertex_p3(ids[t]);
            let b = self.vertex_p3(ids[(t + 1) % ids.len()]);
            dot(f.normal, cross(sub(b, a), sub(q, a))) >= 0
        })
    }

    /// Facets visible from the origin (`Lower`) or from the far positive
    /// octant (`Upper`). A planar hull's single face counts as both.
    pub fn boundary(&self, side: Side) -> Result<Vec<&Facet>> {
        match self.dim {
            2 => Ok(self.facets.iter().collect()),
            3 => Ok(self
                .facets
                .iter()
                .filter(|f| match side {
                    Side::Lower => f.is_lower(),
                    Side::Upper => f.is_upper(),
                })
                .collect()),
            d => Err(Error::DegenerateHull(d)),
        }
    }

    /// Lattice points on the closed union of the facets of one side.
    pub fn boundary_lattice_points(&self, side: Side) -> Result<Vec<ExponentVector>> {
        let mut out = BTreeSet::new();
        for f in self.boundary(side)? {
            let vs: Vec<P3> = f.vertex_ids.iter().map(|&i| self.vertex_p3(i)).collect();
            let lo: Vec<i64> = (0..3)
                .map(|a| vs.iter().map(|v| v[a]).min().unwrap())
                .collect();
            let hi: Vec<i64> = (0..3)
                .map(|a| vs.iter().map(|v| v[a]).max().unwrap())
                .collect();
            for x in lo[0]..=hi[0] {
                for y in lo[1]..=hi[1] {
                    for z in lo[2]..=hi[2] {
                        if self.in_facet(f, [x, y, z]) {
                            out.insert(from_p3([x, y, z]));
                        }
                    }
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Input points lying strictly inside the hull, off every facet.
    pub fn interior_points(&self) -> Vec<ExponentVector> {
        if self.dim < 3 {
            return Vec::new();
        }
        self.points
            .iter()
            .filter(|p| {
                let q = to_p3(p);
                self.facets.iter().all(|f| dot(f.normal, q) < f.offset)
            })
            .cloned()
            .collect()
    }

    /// Number of edges of the facet complex.
    pub fn edge_count(&self) -> usize {
        match self.dim {
            3 => {
                let mut edges = BTreeSet::new();
                for f in &self.facets {
                    let ids = &f.vertex_ids;
                    for t in 0..ids.len() {
                        let (a, b) = (ids[t], ids[(t + 1) % ids.len()]);
                        edges.insert((a.min(b), a.max(b)));
                    }
                }
                edges.len()
            }
            2 => self.vertices.len(),
            1 => 1,
            _ => 0,
        }
    }
}

/// Whether swapping variables `i` and `j` maps the ideal to itself.
pub fn is_swap_symmetric(ideal: &MonomialIdeal, i: usize, j: usize) -> Result<bool> {
    let n = ideal.nvars();
    for idx in [i, j] {
        if idx >= n {
            return Err(Error::BadIndex {
                index: idx,
                nvars: n,
            });
        }
    }
    if i == j {
        return Err(Error::InvalidPermutation(vec![i, j]));
    }
    Ok(&ideal.swap_variables(i, j)? == ideal)
}

/// Every variable transposition under which the ideal is invariant.
pub fn symmetric_swaps(ideal: &MonomialIdeal) -> Vec<(usize, usize)> {
    let n = ideal.nvars();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if is_swap_symmetric(ideal, i, j).unwrap_or(false) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Every variable transposition under which a point set is invariant.
pub fn point_set_swaps(points: &[ExponentVector]) -> Vec<(usize, usize)> {
    let set: BTreeSet<&ExponentVector> = points.iter().collect();
    let mut out = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let ok = points.iter().all(|p| {
                let mut q = p.to_vec();
                q.swap(i, j);
                set.contains(&ExponentVector::from_vec_unchecked(q))
            });
            if ok {
                out.push((i, j));
            }
        }
    }
    out
}

/// Geometry in OFF format: vertices in canonical order, one face per facet.
pub fn export_off(hull: &Hull) -> Result<String> {
    if hull.dim < 2 {
        return Err(Error::DegenerateHull(hull.dim));
    }
    let mut s = String::from("OFF\n");
    let _ = writeln!(
        s,
        "{} {} {}",
        hull.vertices.len(),
        hull.facets.len(),
        hull.edge_count()
    );
    for v in &hull.vertices {
        let _ = writeln!(s, "{} {} {}", v[0], v[1], v[2]);
    }
    for f in &hull.facets {
        let _ = write!(s, "{}", f.vertex_ids.len());
        for id in &f.vertex_ids {
            let _ = write!(s, " {id}");
        }
        s.push('\n');
    }
    Ok(s)
}

/// Vertices and faces read back from OFF text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OffMesh {
    pub vertices: Vec<[i64; 3]>,
    pub faces: Vec<Vec<usize>>,
}

pub fn parse_off(text: &str) -> Result<OffMesh> {
    let off = |msg: &str| Error::Off(msg.to_string());
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    if lines.next() != Some("OFF") {
        return Err(off("missing OFF header"));
    }
    let counts: Vec<usize> = lines
        .next()
        .ok_or_else(|| off("missing counts"))?
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| off("bad count")))
        .collect::<Result<_>>()?;
    if counts.len() < 2 {
        return Err(off("expected vertex and face counts"));
    }
    let mut vertices = Vec::with_capacity(counts[0]);
    for _ in 0..counts[0] {
        let c: Vec<i64> = lines
            .next()
            .ok_or_else(|| off("truncated vertex list"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| off("bad coordinate")))
            .collect::<Result<_>>()?;
        if c.len() != 3 {
            return Err(off("vertex needs three coordinates"));
        }
        vertices.push([c[0], c[1], c[2]]);
    }
    let mut faces = Vec::with_capacity(counts[1]);
    for _ in 0..counts[1] {
        let c: Vec<usize> = lines
            .next()
            .ok_or_else(|| off("truncated face list"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| off("bad face index")))
            .collect::<Result<_>>()?;
        if c.is_empty() || c[0] != c.len() - 1 || c[1..].iter().any(|&i| i >= vertices.len()) {
            return Err(off("malformed face"));
        }
        faces.push(c[1..].to_vec());
    }
    Ok(OffMesh { vertices, faces })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::monomial::power_ideal;
    use crate::text::parse_ideal;

    #[test]
    fn m_squared_is_a_triangle() {
        let h = ideal_hull(&power_ideal(3, 2).unwrap()).unwrap();
        assert_eq!(h.dim, 2);
        assert_eq!(h.vertices.len(), 3);
        assert_eq!(h.facets.len(), 1);
        assert_eq!(
            h.boundary(Side::Lower).unwrap(),
            h.boundary(Side::Upper).unwrap()
        );
        assert_eq!(h.boundary_lattice_points(Side::Lower).unwrap().len(), 6);
        let off = export_off(&h).unwrap();
        assert!(off.starts_with("OFF\n3 1 3\n"));
    }

    #[test]
    fn single_face_holds_every_generator() {
        let i = fixtures::compact_ideal(fixtures::S).unwrap();
        let h = ideal_hull(&i).unwrap();
        assert_eq!(h.dim, 2);
        assert_eq!(h.vertices.len(), 3);
        assert_eq!(
            h.boundary_lattice_points(Side::Lower).unwrap(),
            i.generators().to_vec()
        );
    }

    #[test]
    fn degenerate_dimensions() {
        let p = convex_hull(&[ExponentVector::new(vec![1, 2, 3]).unwrap()]).unwrap();
        assert_eq!(p.dim, 0);
        assert!(matches!(
            p.boundary(Side::Lower),
            Err(Error::DegenerateHull(0))
        ));
        let line = convex_hull(&[
            ExponentVector::new(vec![0, 0, 0]).unwrap(),
            ExponentVector::new(vec![1, 1, 1]).unwrap(),
            ExponentVector::new(vec![2, 2, 2]).unwrap(),
        ])
        .unwrap();
        assert_eq!(line.dim, 1);
        assert_eq!(line.vertices.len(), 2);
        assert!(export_off(&line).is_err());
        let two = parse_ideal("x,y", 2).unwrap();
        assert!(matches!(
            ideal_hull(&two),
            Err(Error::UnsupportedDimension(2))
        ));
    }

    #[test]
    fn cube_faces_are_ordered() {
        let pts: Vec<ExponentVector> = (0..8)
            .map(|b| ExponentVector::new(vec![b & 1, (b >> 1) & 1, (b >> 2) & 1]).unwrap())
            .collect();
        let h = convex_hull(&pts).unwrap();
        assert_eq!(
            (h.dim, h.vertices.len(), h.facets.len(), h.edge_count()),
            (3, 8, 6, 12)
        );
        for f in &h.facets {
            let v: Vec<P3> = f.vertex_ids.iter().map(|&i| h.vertex_p3(i)).collect();
            for t in 0..4 {
                let turn = cross(
                    sub(v[(t + 1) % 4], v[t]),
                    sub(v[(t + 2) % 4], v[(t + 1) % 4]),
                );
                assert!(dot(turn, f.normal) > 0, "face not counter-clockwise");
            }
        }
    }

    #[test]
    fn w_is_solid_with_both_sides() {
        let h = ideal_hull(&fixtures::compact_ideal(fixtures::W).unwrap()).unwrap();
        assert_eq!(h.dim, 3);
        assert_eq!(h.vertices.len() + h.facets.len(), h.edge_count() + 2);
        let lower = h.boundary(Side::Lower).unwrap();
        let upper = h.boundary(Side::Upper).unwrap();
        assert!(!lower.is_empty() && !upper.is_empty());
        assert!(lower.iter().all(|f| !upper.contains(f)));
    }

    #[test]
    fn swaps() {
        let s = fixtures::compact_ideal(fixtures::S).unwrap();
        assert!(is_swap_symmetric(&s, 0, 1).unwrap());
        assert!(!is_swap_symmetric(&s, 0, 2).unwrap());
        let l = fixtures::compact_ideal(fixtures::L).unwrap();
        assert!(is_swap_symmetric(&l, 1, 2).unwrap());
        let d = parse_ideal("x,y^2,z^3", 3).unwrap();
        assert!(symmetric_swaps(&d).is_empty());
        assert!(is_swap_symmetric(&d, 0, 3).is_err());
        assert!(is_swap_symmetric(&d, 1, 1).is_err());
    }

    #[test]
    fn off_round_trip() {
        let h = ideal_hull(&fixtures::compact_ideal(fixtures::O).unwrap()).unwrap();
        let mesh = parse_off(&export_off(&h).unwrap()).unwrap();
        let verts: Vec<ExponentVector> = mesh.vertices.iter().map(|&p| from_p3(p)).collect();
        assert_eq!(verts, h.vertices);
        assert_eq!(mesh.faces.len(), h.facets.len());
        assert!(parse_off("OFF\n1 0 0\n1 2\n").is_err());
        assert!(parse_off("PLY\n").is_err());
    }
}
