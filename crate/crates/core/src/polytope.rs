//! Lattice polytopes: vertex filtering by exact LP, affine dimension,
//! facet enumeration, normalized volume by a placing triangulation, and
//! OFF export for 3-dimensional shapes.
//!
//! The normalized volume of a d-polytope is d! times its Euclidean volume
//! measured in the lattice `Zⁿ ∩ aff(P)` translated to a vertex.  Points
//! are mapped to integer coordinates in a basis of that lattice first, so
//! every simplex of the triangulation contributes `|det|` directly.

use std::fmt::Write as _;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::cone::extreme_rays;
use crate::linalg::{det_int, lattice_coordinates, rank_int, saturated_lattice_basis};
use crate::lp::in_convex_hull;
use crate::num::{dot, int, Scalar};
use crate::Int;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("point {index} has length {got}, expected {want}")]
    DimensionMismatch { index: usize, got: usize, want: usize },
    #[error("operation needs a nonempty point set")]
    Empty,
    #[error("OFF export requires a 3-dimensional polytope, this one has dimension {0}")]
    NotThreeDimensional(isize),
}

/// Convex hull of integer generator points. Vertices, dimension and volume
/// are computed lazily and cached; the type is immutable.
#[derive(Debug)]
pub struct LatticePolytope {
    points: Vec<Vec<Int>>,
    n: usize,
    vertices: OnceLock<Vec<Vec<Int>>>,
    dim: OnceLock<isize>,
    nvolume: OnceLock<Int>,
}

impl LatticePolytope {
    pub fn new(points: Vec<Vec<Int>>, n: usize) -> Result<Self, PolytopeError> {
        for (index, p) in points.iter().enumerate() {
            if p.len() != n {
                return Err(PolytopeError::DimensionMismatch { index, got: p.len(), want: n });
            }
        }
        let mut points = points;
        points.sort();
        points.dedup();
        Ok(LatticePolytope { points, n, vertices: OnceLock::new(), dim: OnceLock::new(), nvolume: OnceLock::new() })
    }

    pub fn from_relation(rel: &crate::relation::TernaryRelation) -> Self {
        let points = rel.generator_points().into_iter().map(|p| p.coords).collect();
        Self::new(points, rel.n()).expect("generator points share the relation's length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[Vec<Int>] {
        &self.points
    }

    /// Affine dimension; −1 for the empty polytope.
    pub fn dim(&self) -> isize {
        *self.dim.get_or_init(|| {
            if self.points.is_empty() {
                return -1;
            }
            let diffs = differences(&self.points);
            rank_int(&diffs) as isize
        })
    }

    /// Extreme points, by exact LP separation of each candidate from the
    /// hull of the others.
    pub fn vertices(&self) -> &[Vec<Int>] {
        self.vertices.get_or_init(|| {
            let mut out = Vec::new();
            for (i, p) in self.points.iter().enumerate() {
                let others: Vec<Vec<Int>> = self
                    .points
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, q)| q.clone())
                    .collect();
                if !in_convex_hull(p, &others) {
                    out.push(p.clone());
                }
            }
            out
        })
    }

    /// Facet inequalities `a·x ≥ b` of the polytope inside its own affine
    /// hull, expressed in the ambient coordinates.  Computed as extreme rays
    /// of the cone `{(a, c) : a·p + c ≥ 0 for all points p}` over the
    /// lattice coordinates of the points.
    pub fn facet_count(&self) -> usize {
        let emb = self.lattice_embedding();
        facets_of_full_dim(&emb.coords).len()
    }

    /// Normalized volume: d! × volume in the induced lattice, by a placing
    /// triangulation of the vertex set.  0 for the empty polytope, 1 for a
    /// point.
    pub fn normalized_volume(&self) -> Int {
        self.nvolume
            .get_or_init(|| {
                if self.points.is_empty() {
                    return Int::from(0);
                }
                let emb = self.lattice_embedding_of(self.vertices());
                if emb.dim == 0 {
                    return Int::from(1);
                }
                placing_volume(&emb.coords, emb.dim)
            })
            .clone()
    }

    /// Integer coordinates of the given points in a basis of
    /// `Zⁿ ∩ aff(points)`, translated to the lexicographically smallest point.
    fn lattice_embedding_of(&self, pts: &[Vec<Int>]) -> LatticeEmbedding {
        lattice_embedding(pts)
    }

    fn lattice_embedding(&self) -> LatticeEmbedding {
        lattice_embedding(self.vertices())
    }

    /// Geomview OFF text for 3-dimensional polytopes, in lattice coordinates.
    pub fn off_export(&self) -> Result<String, PolytopeError> {
        if self.dim() != 3 {
            return Err(PolytopeError::NotThreeDimensional(self.dim()));
        }
        let emb = self.lattice_embedding();
        let verts = &emb.coords;
        let facets = facets_of_full_dim(verts);
        let mut faces: Vec<Vec<usize>> = Vec::new();
        for (a, b) in &facets {
            let on: Vec<usize> = verts
                .iter()
                .enumerate()
                .filter(|(_, v)| dot(a, v) == *b)
                .map(|(i, _)| i)
                .collect();
            faces.push(order_polygon(verts, &on, a));
        }
        let edge_count: usize = faces.iter().map(|f| f.len()).sum::<usize>() / 2;
        let mut s = String::from("OFF\n");
        let _ = writeln!(s, "{} {} {}", verts.len(), faces.len(), edge_count);
        for v in verts {
            let _ = writeln!(s, "{} {} {}", v[0], v[1], v[2]);
        }
        for f in &faces {
            let _ = write!(s, "{}", f.len());
            for i in f {
                let _ = write!(s, " {i}");
            }
            s.push('\n');
        }
        Ok(s)
    }
}

pub(crate) struct LatticeEmbedding {
    pub dim: usize,
    pub coords: Vec<Vec<Int>>,
}

pub(crate) fn lattice_embedding(pts: &[Vec<Int>]) -> LatticeEmbedding {
    assert!(!pts.is_empty());
    let base = pts.iter().min().expect("nonempty").clone();
    let n = base.len();
    let diffs: Vec<Vec<Int>> = pts
        .iter()
        .map(|p| p.iter().zip(&base).map(|(a, b)| a.clone() - b.clone()).collect())
        .collect();
    let basis = saturated_lattice_basis(&diffs, n);
    let coords = diffs
        .iter()
        .map(|d| lattice_coordinates(&basis, d).expect("differences lie in the saturated lattice"))
        .collect();
    LatticeEmbedding { dim: basis.len(), coords }
}

fn differences(pts: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let base = &pts[0];
    pts[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a.clone() - b.clone()).collect())
        .collect()
}

/// Facets of a full-dimensional point set in Z^d as pairs `(a, b)` with
/// `a·x ≥ b` valid and tight on the facet.
pub(crate) fn facets_of_full_dim(pts: &[Vec<Int>]) -> Vec<(Vec<Int>, Int)> {
    let d = pts[0].len();
    let rows: Vec<Vec<Int>> = pts
        .iter()
        .map(|p| {
            let mut r = p.clone();
            r.push(Int::from(1));
            r
        })
        .collect();
    let v = extreme_rays(&rows, d + 1);
    debug_assert!(v.lineality.is_empty(), "full-dimensional hull cone is pointed");
    v.rays
        .into_iter()
        .filter(|r| r[..d].iter().any(|x| !x.is_zero()))
        .map(|mut r| {
            let c = r.pop().expect("homogenizing coordinate");
            (r, -c)
        })
        .collect()
}

/// Cyclic order of coplanar points around their centroid, by exact cross
/// products in the facet plane.
fn order_polygon(verts: &[Vec<Int>], on: &[usize], normal: &[Int]) -> Vec<usize> {
    if on.len() <= 3 {
        return on.to_vec();
    }
    // scaled centroid: Σ v (times |on| to stay integral)
    let d = verts[0].len();
    let m = int::<Int>(on.len() as i64);
    let centroid: Vec<Int> = (0..d)
        .map(|c| on.iter().map(|&i| verts[i][c].clone()).sum::<Int>())
        .collect();
    let rel = |i: usize| -> Vec<Int> {
        (0..d).map(|c| verts[i][c].clone() * m.clone() - centroid[c].clone()).collect()
    };
    let mut order = on.to_vec();
    let first = rel(order[0]);
    // comparator: angle from `first` around `normal` via sign of triple products
    let side = |v: &[Int]| -> i8 {
        let c = cross3(&first, v);
        let s = dot(&c, normal);
        if s.is_positive() {
            1
        } else if s.is_negative() {
            -1
        } else if dot(&first, v).is_positive() {
            0 // same direction as first
        } else {
            2 // opposite to first: boundary between halves
        }
    };
    order.sort_by(|&x, &y| {
        let (vx, vy) = (rel(x), rel(y));
        let (hx, hy) = (half(side(&vx)), half(side(&vy)));
        hx.cmp(&hy).then_with(|| {
            let c = cross3(&vx, &vy);
            let s = dot(&c, normal);
            if s.is_positive() {
                std::cmp::Ordering::Less
            } else if s.is_negative() {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Equal
            }
        })
    });
    order
}

fn half(side: i8) -> u8 {
    match side {
        0 => 0,        // along `first`
        1 => 1,        // positive half-turn
        2 => 2,        // opposite `first`
        _ => 3,        // negative half-turn
    }
}

fn cross3(a: &[Int], b: &[Int]) -> Vec<Int> {
    vec![
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

/// Placing (beneath–beyond) triangulation volume of a full-dimensional
/// point set in Z^d.  Points are placed in lexicographic order after a
/// greedy affinely independent start simplex; every strictly visible
/// boundary simplex is coned over the new point.  Returns Σ |det| over the
/// simplices, which is the normalized volume.
pub(crate) fn placing_volume<Z: Scalar>(pts: &[Vec<Z>], d: usize) -> Z {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| pts[a].cmp(&pts[b]));

    // greedy initial simplex
    let mut start: Vec<usize> = Vec::with_capacity(d + 1);
    for &i in &order {
        let mut trial: Vec<Vec<Z>> = Vec::new();
        if let Some(&v0) = start.first() {
            for &j in start.iter().skip(1).chain([&i]) {
                trial.push(
                    pts[j].iter().zip(&pts[v0]).map(|(a, b)| a.clone() - b.clone()).collect(),
                );
            }
            if crate::linalg::rank_int(&trial) == trial.len() {
                start.push(i);
            }
        } else {
            start.push(i);
        }
        if start.len() == d + 1 {
            break;
        }
    }
    assert_eq!(start.len(), d + 1, "point set must be full-dimensional");
    let picked: Vec<usize> = start.clone();
    start.sort_unstable(); // face keys below rely on sorted simplices

    let mut simplices: Vec<Vec<usize>> = vec![start.clone()];
    let mut boundary: std::collections::HashMap<Vec<usize>, (usize, usize)> =
        std::collections::HashMap::new();
    let mut add_simplex =
        |simplices: &mut Vec<Vec<usize>>,
         boundary: &mut std::collections::HashMap<Vec<usize>, (usize, usize)>,
         s: Vec<usize>| {
            let si = simplices.len();
            for drop in 0..s.len() {
                let mut face: Vec<usize> = s.clone();
                let opposite = face.remove(drop);
                if boundary.remove(&face).is_none() {
                    boundary.insert(face, (si, opposite));
                }
            }
            simplices.push(s);
        };
    {
        let s = simplices.pop().expect("seeded");
        add_simplex(&mut simplices, &mut boundary, s);
    }

    for &q in &order {
        if picked.contains(&q) {
            continue;
        }
        let visible: Vec<Vec<usize>> = boundary
            .iter()
            .filter(|(face, &(_, opposite))| {
                let sq = orientation(pts, face, q);
                let sw = orientation(pts, face, opposite);
                sq != 0 && sw != 0 && sq != sw
            })
            .map(|(face, _)| face.clone())
            .collect();
        for face in visible {
            let mut s = face.clone();
            s.push(q);
            s.sort_unstable();
            add_simplex(&mut simplices, &mut boundary, s);
        }
    }

    let mut total = Z::zero();
    for s in &simplices {
        let mat: Vec<Vec<Z>> = s[1..]
            .iter()
            .map(|&i| {
                pts[i].iter().zip(&pts[s[0]]).map(|(a, b)| a.clone() - b.clone()).collect()
            })
            .collect();
        total = total + det_int(&mat).abs();
    }
    total
}

/// Sign of the determinant placing `x` against the hyperplane of `face`.
fn orientation<Z: Scalar>(pts: &[Vec<Z>], face: &[usize], x: usize) -> i8 {
    let base = &pts[face[0]];
    let mut mat: Vec<Vec<Z>> = face[1..]
        .iter()
        .map(|&i| pts[i].iter().zip(base).map(|(a, b)| a.clone() - b.clone()).collect())
        .collect();
    mat.push(pts[x].iter().zip(base).map(|(a, b)| a.clone() - b.clone()).collect());
    let det = det_int(&mat);
    if det.is_zero() {
        0
    } else if det.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn poly(pts: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::new(pts.iter().map(|p| iv(p)).collect(), pts[0].len()).unwrap()
    }

    #[test]
    fn unit_segment_volume_is_one() {
        let p = poly(&[&[0], &[1]]);
        assert_eq!(p.normalized_volume(), Int::from(1));
        assert_eq!(p.dim(), 1);
    }

    #[test]
    fn single_point() {
        let p = poly(&[&[3, 4]]);
        assert_eq!(p.dim(), 0);
        assert_eq!(p.vertices().len(), 1);
        assert_eq!(p.normalized_volume(), Int::from(1));
    }

    #[test]
    fn square_with_interior_point() {
        let p = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[0, 0]]);
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.dim(), 2);
        assert_eq!(p.normalized_volume(), Int::from(2));
        assert_eq!(p.facet_count(), 4);
    }

    #[test]
    fn coarse_segment_measures_in_saturated_lattice() {
        // (0,0)–(2,2): length 2 in Z² ∩ line
        let p = poly(&[&[0, 0], &[2, 2]]);
        assert_eq!(p.normalized_volume(), Int::from(2));
    }

    #[test]
    fn degenerate_collinear_midpoint() {
        let p = poly(&[&[0, 0], &[2, 0], &[4, 0], &[1, 0]]);
        assert_eq!(p.vertices().len(), 2);
        assert_eq!(p.normalized_volume(), Int::from(4));
    }

    #[test]
    fn placing_handles_coplanar_extension() {
        // square then a point collinear with its bottom edge
        let pts = vec![iv(&[0, 0]), iv(&[1, 0]), iv(&[0, 1]), iv(&[1, 1]), iv(&[2, 0])];
        let p = LatticePolytope::new(pts, 2).unwrap();
        // area = 1 (square) + 1/2 (triangle) → normalized 3
        assert_eq!(p.normalized_volume(), Int::from(3));
    }

    #[test]
    fn cube_volume_and_facets() {
        let mut pts = Vec::new();
        for x in 0..2i64 {
            for y in 0..2 {
                for z in 0..2 {
                    pts.push(iv(&[x, y, z]));
                }
            }
        }
        let p = LatticePolytope::new(pts, 3).unwrap();
        assert_eq!(p.dim(), 3);
        assert_eq!(p.vertices().len(), 8);
        assert_eq!(p.facet_count(), 6);
        assert_eq!(p.normalized_volume(), Int::from(6));
        let off = p.off_export().unwrap();
        assert!(off.starts_with("OFF\n8 6 12\n"));
    }

    #[test]
    fn off_export_rejects_wrong_dimension() {
        let p = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert!(matches!(p.off_export(), Err(PolytopeError::NotThreeDimensional(2))));
    }
}
