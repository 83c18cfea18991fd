//! Extreme rays of rational cones `{x : Ax ≥ 0}` via double description.
//!
//! The lineality space (the kernel of `A`) is split off first and reported
//! separately; the pointed part is enumerated by incremental insertion with
//! the combinatorial adjacency test.  Output is canonical: primitive
//! integer rays in lexicographic order, independent of input row order.

use std::sync::OnceLock;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{kernel_basis_int, rank_rat, rref, solve_rat};
use crate::num::{dot, make_primitive, to_rationals, Scalar};
use crate::z2::BitVec;
use crate::Int;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConeError {
    #[error("ray count exceeded the configured limit of {limit}")]
    RayLimit { limit: usize },
    #[error("ray entry does not fit the wire integer type")]
    EntryOverflow,
}

/// V-representation: extreme rays of the pointed part plus a basis of the
/// lineality space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremeRays<Z> {
    pub rays: Vec<Vec<Z>>,
    pub lineality: Vec<Vec<Z>>,
}

/// Canonical row form: primitive, no zero rows, deduplicated, sorted with
/// the sparsest rows first (the double description insertion heuristic).
pub fn canonical_rows<Z: Scalar>(rows: &[Vec<Z>]) -> Vec<Vec<Z>> {
    let mut out: Vec<Vec<Z>> = Vec::new();
    for row in rows {
        let mut r = row.clone();
        make_primitive(&mut r);
        if r.iter().any(|x| !x.is_zero()) {
            out.push(r);
        }
    }
    out.sort_by(|a, b| {
        let na = a.iter().filter(|x| !x.is_zero()).count();
        let nb = b.iter().filter(|x| !x.is_zero()).count();
        na.cmp(&nb).then_with(|| a.cmp(b))
    });
    out.dedup();
    out
}

pub fn extreme_rays<Z: Scalar>(rows: &[Vec<Z>], n: usize) -> ExtremeRays<Z> {
    extreme_rays_capped(rows, n, None).expect("no cap given")
}

pub fn extreme_rays_capped<Z: Scalar>(
    rows: &[Vec<Z>],
    n: usize,
    cap: Option<usize>,
) -> Result<ExtremeRays<Z>, ConeError> {
    let rows = canonical_rows(rows);
    let lineality = kernel_basis_int(&rows, n);

    if lineality.len() == n {
        return Ok(ExtremeRays { rays: vec![], lineality });
    }

    // complement coordinates: everything outside the pivot columns of the
    // lineality basis
    let pivot_cols: Vec<usize> = {
        let mut lq: Vec<Vec<_>> = lineality.iter().map(|r| to_rationals(r)).collect();
        rref(&mut lq)
    };
    let keep: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let reduced: Vec<Vec<Z>> = rows
        .iter()
        .map(|r| keep.iter().map(|&c| r[c].clone()).collect())
        .collect();
    let reduced = canonical_rows(&reduced);

    let rays_reduced = dd_pointed(&reduced, keep.len(), cap)?;
    let mut rays: Vec<Vec<Z>> = rays_reduced
        .into_iter()
        .map(|r| {
            let mut full = vec![Z::zero(); n];
            for (&c, v) in keep.iter().zip(r) {
                full[c] = v;
            }
            full
        })
        .collect();
    rays.sort();
    Ok(ExtremeRays { rays, lineality })
}

struct Ray<Z> {
    v: Vec<Z>,
    tight: BitVec, // over canonical row indices, processed rows only
}

/// Double description on a pointed cone (`kernel(rows) = 0`).
fn dd_pointed<Z: Scalar>(
    rows: &[Vec<Z>],
    r: usize,
    cap: Option<usize>,
) -> Result<Vec<Vec<Z>>, ConeError> {
    if r == 0 {
        return Ok(vec![]);
    }
    let m = rows.len();
    debug_assert!(m >= r, "pointed cone needs at least dim rows");

    // greedy independent prefix in canonical order
    let mut basis_idx: Vec<usize> = Vec::with_capacity(r);
    {
        let mut acc: Vec<Vec<_>> = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            let mut trial = acc.clone();
            trial.push(to_rationals(row));
            if rank_rat(&trial) > acc.len() {
                acc = trial;
                basis_idx.push(i);
                if basis_idx.len() == r {
                    break;
                }
            }
        }
        assert_eq!(basis_idx.len(), r, "rows must have full rank after lineality split");
    }

    // initial simplicial cone: rays solve B · ray = e_i
    let b_rat: Vec<Vec<_>> = basis_idx.iter().map(|&i| to_rationals(&rows[i])).collect();
    let mut rays: Vec<Ray<Z>> = Vec::with_capacity(r);
    for i in 0..r {
        let mut e = vec![num_rational::Ratio::zero(); r];
        e[i] = <num_rational::Ratio<Z> as One>::one();
        let sol = solve_rat(&b_rat, &e).expect("basis is invertible");
        let v = crate::num::primitive_from_rationals(&sol);
        let mut tight = BitVec::zeros(m);
        for (j, &bi) in basis_idx.iter().enumerate() {
            if j != i {
                tight.set(bi, true);
            }
        }
        rays.push(Ray { v, tight });
    }

    let order: Vec<usize> = (0..m).filter(|i| !basis_idx.contains(i)).collect();

    for &t in &order {
        let row = &rows[t];
        let vals: Vec<Z> = rays.iter().map(|ray| dot(row, &ray.v)).collect();
        let mut keep: Vec<Ray<Z>> = Vec::new();
        let mut pos: Vec<usize> = Vec::new();
        let mut neg: Vec<usize> = Vec::new();
        for (i, v) in vals.iter().enumerate() {
            if v.is_zero() {
                // tight on the new row as well
            } else if v.is_positive() {
                pos.push(i);
            } else {
                neg.push(i);
            }
        }
        let mut new_rays: Vec<Ray<Z>> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                if !adjacent(&rays, p, q) {
                    continue;
                }
                // (−d_q)·ray_p + d_p·ray_q is tight on row t and inside
                let dp = vals[p].clone();
                let dq = vals[q].clone();
                let mut v: Vec<Z> = rays[p]
                    .v
                    .iter()
                    .zip(&rays[q].v)
                    .map(|(a, b)| -dq.clone() * a.clone() + dp.clone() * b.clone())
                    .collect();
                make_primitive(&mut v);
                let mut tight = rays[p].tight.clone();
                tight.and_assign(&rays[q].tight);
                tight.set(t, true);
                new_rays.push(Ray { v, tight });
            }
        }
        for (i, ray) in rays.drain(..).enumerate() {
            if vals[i].is_zero() {
                let mut ray = ray;
                ray.tight.set(t, true);
                keep.push(ray);
            } else if vals[i].is_positive() {
                keep.push(ray);
            }
        }
        keep.extend(new_rays);
        rays = keep;
        if let Some(limit) = cap {
            if rays.len() > limit {
                return Err(ConeError::RayLimit { limit });
            }
        }
    }

    Ok(rays.into_iter().map(|r| r.v).collect())
}

/// Combinatorial adjacency: no third ray's tight set contains the
/// intersection of the pair's tight sets.
fn adjacent<Z>(rays: &[Ray<Z>], p: usize, q: usize) -> bool {
    let mut s = rays[p].tight.clone();
    s.and_assign(&rays[q].tight);
    for (i, r3) in rays.iter().enumerate() {
        if i == p || i == q {
            continue;
        }
        if s.subset_of(&r3.tight) {
            return false;
        }
    }
    true
}

/// H-representation plus lazily computed V-representation over `Int`.
#[derive(Debug)]
pub struct RationalCone {
    n: usize,
    rows: Vec<Vec<Int>>,
    vrep: OnceLock<ExtremeRays<Int>>,
}

impl RationalCone {
    pub fn from_rows(rows: Vec<Vec<Int>>, n: usize) -> Self {
        RationalCone { n, rows: canonical_rows(&rows), vrep: OnceLock::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    pub fn extreme_rays(&self) -> &ExtremeRays<Int> {
        self.vrep.get_or_init(|| extreme_rays(&self.rows, self.n))
    }

    pub fn extreme_rays_capped(&self, cap: usize) -> Result<ExtremeRays<Int>, ConeError> {
        if let Some(v) = self.vrep.get() {
            return Ok(v.clone());
        }
        extreme_rays_capped(&self.rows, self.n, Some(cap))
    }
}

/// Wire form: integer arrays in canonical order.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct RaysJson {
    pub rays: Vec<Vec<i64>>,
    pub lineality: Vec<Vec<i64>>,
}

impl TryFrom<&ExtremeRays<Int>> for RaysJson {
    type Error = ConeError;

    fn try_from(v: &ExtremeRays<Int>) -> Result<Self, Self::Error> {
        let conv = |rows: &[Vec<Int>]| -> Result<Vec<Vec<i64>>, ConeError> {
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|x| i64::try_from(x).map_err(|_| ConeError::EntryOverflow))
                        .collect()
                })
                .collect()
        };
        Ok(RaysJson { rays: conv(&v.rays)?, lineality: conv(&v.lineality)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;
    use num_traits::Signed;

    fn iv(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn orthant_rays() {
        let v = extreme_rays(&[iv(&[1, 0]), iv(&[0, 1])], 2);
        assert_eq!(v.rays, vec![iv(&[0, 1]), iv(&[1, 0])]);
        assert!(v.lineality.is_empty());
    }

    #[test]
    fn triangle_dual_cone() {
        let rows = vec![iv(&[1, 1, -1]), iv(&[1, -1, 1]), iv(&[-1, 1, 1])];
        let v = extreme_rays(&rows, 3);
        assert_eq!(v.rays, vec![iv(&[0, 1, 1]), iv(&[1, 0, 1]), iv(&[1, 1, 0])]);
        assert!(v.lineality.is_empty());
    }

    #[test]
    fn full_space_is_all_lineality() {
        let v = extreme_rays::<Int>(&[], 3);
        assert!(v.rays.is_empty());
        assert_eq!(v.lineality.len(), 3);
    }

    #[test]
    fn halfspace_has_lineality() {
        // x ≥ 0 in R²: lineality along y, single ray along x
        let v = extreme_rays(&[iv(&[1, 0])], 2);
        assert_eq!(v.rays, vec![iv(&[1, 0])]);
        assert_eq!(v.lineality, vec![iv(&[0, 1])]);
    }

    #[test]
    fn insertion_order_does_not_matter() {
        let rows = vec![
            iv(&[1, 1, -1]),
            iv(&[1, -1, 1]),
            iv(&[-1, 1, 1]),
            iv(&[1, 0, 0]),
            iv(&[0, 1, 0]),
        ];
        let a = extreme_rays(&rows, 3);
        let mut shuffled = rows.clone();
        shuffled.reverse();
        shuffled.swap(0, 2);
        let b = extreme_rays(&shuffled, 3);
        assert_eq!(a, b);
    }

    #[test]
    fn ray_cap_respected() {
        let rows = vec![iv(&[1, 0]), iv(&[0, 1]), iv(&[1, 1])];
        assert_eq!(
            extreme_rays_capped(&rows, 2, Some(1)).unwrap_err(),
            ConeError::RayLimit { limit: 1 }
        );
    }

    #[test]
    fn cube_cone_in_r3() {
        // {x ≥ 0, y ≥ 0, z ≥ 0, x+y+z... } a 4-row cone with 4 rays
        let rows = vec![iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1]), iv(&[1, 1, -1])];
        let v = extreme_rays(&rows, 3);
        // rays satisfy all rows and each is tight on ≥ 2 independent rows
        for ray in &v.rays {
            for row in &rows {
                assert!(!dot(row, ray).is_negative());
            }
        }
        assert_eq!(v.rays.len(), 4);
    }
}
