//! Exact LP feasibility: a dense phase-1 simplex with Bland's rule.
//!
//! Everything this crate asks of linear programming is a feasibility
//! question, so only phase 1 exists.  Termination is guaranteed by Bland's
//! pivoting rule; arithmetic is exact rational.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::num::{to_rationals, Scalar};

type Q<Z> = Ratio<Z>;

/// Feasibility of `A x = b`, `x ≥ 0`. Returns a basic feasible point.
pub fn eq_nonneg_feasible<Z: Scalar>(a: &[Vec<Q<Z>>], b: &[Q<Z>]) -> Option<Vec<Q<Z>>> {
    let m = a.len();
    debug_assert_eq!(b.len(), m);
    let nvars = if m == 0 { 0 } else { a[0].len() };
    if m == 0 {
        return Some(vec![Q::zero(); nvars]);
    }

    // tableau: nvars real columns, m artificial columns, rhs
    let ncols = nvars + m + 1;
    let mut t: Vec<Vec<Q<Z>>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<Q<Z>> = Vec::with_capacity(ncols);
        for j in 0..nvars {
            row.push(if flip { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i { Q::one() } else { Q::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    // reduced costs for min Σ artificials with the artificial basis
    let mut obj: Vec<Q<Z>> = vec![Q::zero(); ncols];
    for j in 0..ncols {
        let mut s = Q::zero();
        for row in t.iter() {
            s = s + row[j].clone();
        }
        obj[j] = if (nvars..nvars + m).contains(&j) { Q::zero() } else { -s };
    }

    let mut basis: Vec<usize> = (nvars..nvars + m).collect();
    loop {
        // Bland: entering = lowest column with negative reduced cost
        let Some(enter) = (0..nvars + m).find(|&j| obj[j].is_negative()) else {
            break;
        };
        // ratio test, ties by lowest basis variable
        let mut leave: Option<usize> = None;
        let mut best: Option<Q<Z>> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = t[i][ncols - 1].clone() / t[i][enter].clone();
                let better = match &best {
                    None => true,
                    Some(b) => ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()]),
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let leave = leave.expect("phase-1 objective is bounded");
        let piv = t[leave][enter].clone();
        for x in t[leave].iter_mut() {
            *x = x.clone() / piv.clone();
        }
        for i in 0..m {
            if i != leave && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..ncols {
                    let sub = f.clone() * t[leave][j].clone();
                    t[i][j] = t[i][j].clone() - sub;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for j in 0..ncols {
                let sub = f.clone() * t[leave][j].clone();
                obj[j] = obj[j].clone() - sub;
            }
        }
        basis[leave] = enter;
    }

    // objective value = Σ basic artificial values
    let mut z = Q::<Z>::zero();
    for (i, &bv) in basis.iter().enumerate() {
        if bv >= nvars {
            z = z + t[i][ncols - 1].clone();
        }
    }
    if !z.is_zero() {
        return None;
    }
    let mut x = vec![Q::zero(); nvars];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < nvars {
            x[bv] = t[i][ncols - 1].clone();
        }
    }
    Some(x)
}

/// Witness `x` with `E x = 0`, `G x ≥ 0`, `S x ≥ 1`, or `None`.
///
/// All rows are homogeneous, so `S x ≥ 1` is equivalent to strict
/// positivity on `S` up to scaling.
pub fn strict_feasible<Z: Scalar>(
    eq: &[Vec<Z>],
    ge: &[Vec<Z>],
    strict: &[Vec<Z>],
    n: usize,
) -> Option<Vec<Q<Z>>> {
    // x = u − v with u, v ≥ 0; surplus columns turn ≥ into =
    let nsurplus = ge.len() + strict.len();
    let nvars = 2 * n + nsurplus;
    let mut a: Vec<Vec<Q<Z>>> = Vec::new();
    let mut b: Vec<Q<Z>> = Vec::new();
    let mut surplus_at = 0;
    for (rows, surplus, rhs) in [(eq, false, 0i64), (ge, true, 0), (strict, true, 1)] {
        for row in rows {
            debug_assert_eq!(row.len(), n);
            let mut r = vec![Q::zero(); nvars];
            for (j, x) in row.iter().enumerate() {
                r[j] = Q::from_integer(x.clone());
                r[n + j] = -Q::from_integer(x.clone());
            }
            if surplus {
                r[2 * n + surplus_at] = -Q::one();
                surplus_at += 1;
            }
            a.push(r);
            b.push(Q::from_integer(crate::num::int(rhs)));
        }
    }
    let sol = eq_nonneg_feasible(&a, &b)?;
    Some((0..n).map(|j| sol[j].clone() - sol[n + j].clone()).collect())
}

/// Is `p` a convex combination of `others`?
pub fn in_convex_hull<Z: Scalar>(p: &[Z], others: &[Vec<Z>]) -> bool {
    if others.is_empty() {
        return false;
    }
    let n = p.len();
    let m = others.len();
    let mut a: Vec<Vec<Q<Z>>> = Vec::with_capacity(n + 1);
    for c in 0..n {
        a.push(others.iter().map(|q| Q::from_integer(q[c].clone())).collect());
    }
    a.push(vec![Q::one(); m]);
    let mut b: Vec<Q<Z>> = to_rationals(p);
    b.push(Q::one());
    eq_nonneg_feasible(&a, &b).is_some()
}

/// Dimension of `{x : E x = 0}`.
pub fn solution_space_dim<Z: Scalar>(eq: &[Vec<Z>], n: usize) -> usize {
    n - crate::linalg::rank_int(eq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn iv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| crate::num::int(x)).collect()
    }

    #[test]
    fn all_strict_on_triangle_cone() {
        // x+y−z, x−y+z, −x+y+z all strict: (1,1,1) works
        let rows = vec![iv(&[1, 1, -1]), iv(&[1, -1, 1]), iv(&[-1, 1, 1])];
        let w = strict_feasible::<BigInt>(&[], &[], &rows, 3).unwrap();
        for r in &rows {
            let val: Q<BigInt> = r
                .iter()
                .zip(&w)
                .map(|(c, x)| Q::from_integer(c.clone()) * x.clone())
                .sum();
            assert!(val >= Q::one());
        }
    }

    #[test]
    fn empty_strict_set_gives_zero() {
        let rows = vec![iv(&[1, 1, -1]), iv(&[1, -1, 1]), iv(&[-1, 1, 1])];
        let w = strict_feasible::<BigInt>(&rows, &[], &[], 3).unwrap();
        assert!(w.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn two_equations_one_strict() {
        // x+y−z = 0, x−y+z = 0, −x+y+z > 0 → x = 0, y = z > 0
        let w = strict_feasible::<BigInt>(
            &[iv(&[1, 1, -1]), iv(&[1, -1, 1])],
            &[],
            &[iv(&[-1, 1, 1])],
            3,
        )
        .unwrap();
        assert!(w[0].is_zero());
        assert_eq!(w[1], w[2]);
        assert!(w[1].is_positive());
    }

    #[test]
    fn infeasible_strict_pair() {
        // x > 0 and −x > 0
        assert!(strict_feasible::<BigInt>(&[], &[], &[iv(&[1]), iv(&[-1])], 1).is_none());
    }

    #[test]
    fn hull_membership() {
        let others = vec![iv(&[0, 0]), iv(&[2, 0]), iv(&[0, 2])];
        assert!(in_convex_hull(&iv(&[1, 1]), &others));
        assert!(in_convex_hull(&iv(&[0, 0]), &others));
        assert!(!in_convex_hull(&iv(&[2, 2]), &others));
        assert!(!in_convex_hull(&iv(&[-1, 0]), &others));
    }

    #[test]
    fn kernel_dimension() {
        assert_eq!(solution_space_dim::<BigInt>(&[], 4), 4);
        assert_eq!(
            solution_space_dim(&[iv(&[1, 0]), iv(&[0, 1])], 2),
            0
        );
    }
}
