//! Exact dense linear algebra over rationals and integers.
//!
//! Row-major `Vec<Vec<_>>` matrices are enough at the scales this crate
//! works with (tens of rows and columns); everything here is deterministic
//! and allocation-heavy rather than clever.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::num::{int, make_primitive, sign_canonical, Scalar};

/// Reduce to reduced row echelon form in place; returns pivot columns.
pub fn rref<Z: Scalar>(rows: &mut Vec<Vec<Ratio<Z>>>) -> Vec<usize> {
    let m = rows.len();
    if m == 0 {
        return vec![];
    }
    let n = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() / inv.clone();
        }
        for i in 0..m {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..n {
                    let sub = f.clone() * rows[r][j].clone();
                    rows[i][j] = rows[i][j].clone() - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank_rat<Z: Scalar>(rows: &[Vec<Ratio<Z>>]) -> usize {
    let mut work = rows.to_vec();
    rref(&mut work).len()
}

pub fn rank_int<Z: Scalar>(rows: &[Vec<Z>]) -> usize {
    let work: Vec<Vec<Ratio<Z>>> = rows.iter().map(|r| crate::num::to_rationals(r)).collect();
    rank_rat(&work)
}

/// Basis of `{x : A x = 0}` as primitive integer rows, one per free column
/// of the RREF; canonical given the column order.
pub fn kernel_basis_int<Z: Scalar>(rows: &[Vec<Z>], n: usize) -> Vec<Vec<Z>> {
    let mut work: Vec<Vec<Ratio<Z>>> = rows.iter().map(|r| crate::num::to_rationals(r)).collect();
    let pivots = rref(&mut work);
    let mut basis = Vec::new();
    let piv_of_col = {
        let mut v = vec![usize::MAX; n];
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = i;
        }
        v
    };
    for free in 0..n {
        if piv_of_col[free] != usize::MAX {
            continue;
        }
        let mut vec_q: Vec<Ratio<Z>> = vec![Ratio::zero(); n];
        vec_q[free] = Ratio::one();
        for (&pc, row) in pivots.iter().zip(work.iter()) {
            vec_q[pc] = -row[free].clone();
        }
        let mut v = crate::num::primitive_from_rationals(&vec_q);
        sign_canonical(&mut v);
        basis.push(v);
    }
    basis
}

/// Fraction-free determinant (Bareiss).
pub fn det_int<Z: Scalar>(mat: &[Vec<Z>]) -> Z {
    let n = mat.len();
    if n == 0 {
        return Z::one();
    }
    debug_assert!(mat.iter().all(|r| r.len() == n));
    let mut a: Vec<Vec<Z>> = mat.to_vec();
    let mut sign = Z::one();
    let mut prev = Z::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Z::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num / prev.clone();
            }
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].clone() * sign
}

/// One solution of `A x = b` over the rationals, or `None` if inconsistent.
pub fn solve_rat<Z: Scalar>(a: &[Vec<Ratio<Z>>], b: &[Ratio<Z>]) -> Option<Vec<Ratio<Z>>> {
    debug_assert_eq!(a.len(), b.len());
    let n = if a.is_empty() { 0 } else { a[0].len() };
    let mut aug: Vec<Vec<Ratio<Z>>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last().is_some_and(|&c| c == n) {
        return None; // pivot in the rhs column
    }
    let mut x = vec![Ratio::zero(); n];
    for (&c, row) in pivots.iter().zip(aug.iter()) {
        x[c] = row[n].clone();
    }
    Some(x)
}

/// Hermite-style integer row reduction of `[B | I]`; rows of `I` matching the
/// zero rows of the reduced `B` form a basis of the left kernel `{y : yB = 0}`.
fn left_kernel_int<Z: Scalar>(b: &[Vec<Z>]) -> Vec<Vec<Z>> {
    let n = b.len();
    let m = if n == 0 { 0 } else { b[0].len() };
    let mut work: Vec<Vec<Z>> = Vec::with_capacity(n);
    for (i, row) in b.iter().enumerate() {
        let mut r = row.clone();
        r.extend((0..n).map(|j| if i == j { Z::one() } else { Z::zero() }));
        work.push(r);
    }
    let mut pivot_row = 0;
    for col in 0..m {
        loop {
            // smallest nonzero |entry| in this column at or below pivot_row
            let mut best: Option<usize> = None;
            for i in pivot_row..n {
                if work[i][col].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(i),
                    Some(bi) => {
                        if work[i][col].abs() < work[bi][col].abs() {
                            best = Some(i);
                        }
                    }
                }
            }
            let Some(bi) = best else { break };
            work.swap(pivot_row, bi);
            let mut done = true;
            for i in pivot_row + 1..n {
                if work[i][col].is_zero() {
                    continue;
                }
                let q = div_round(&work[i][col], &work[pivot_row][col]);
                for j in 0..m + n {
                    let sub = q.clone() * work[pivot_row][j].clone();
                    work[i][j] = work[i][j].clone() - sub;
                }
                if !work[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                pivot_row += 1;
                break;
            }
        }
        if pivot_row == n {
            break;
        }
    }
    let mut basis = Vec::new();
    for row in work.iter() {
        if row[..m].iter().all(|x| x.is_zero()) {
            let mut v: Vec<Z> = row[m..].to_vec();
            make_primitive(&mut v);
            sign_canonical(&mut v);
            basis.push(v);
        }
    }
    basis.sort();
    basis
}

/// Rounded quotient, so remainders shrink below |divisor|/2 and Hermite
/// reduction terminates quickly.
fn div_round<Z: Scalar>(a: &Z, b: &Z) -> Z {
    let (q, r) = a.div_rem(b);
    let two = int::<Z>(2);
    if r.abs().clone() * two > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + Z::one()
        } else {
            q - Z::one()
        }
    } else {
        q
    }
}

/// Basis of the saturated integer kernel `{x ∈ Zⁿ : M x = 0}`.
pub fn int_right_kernel<Z: Scalar>(rows: &[Vec<Z>], n: usize) -> Vec<Vec<Z>> {
    // right kernel of M = left kernel of Mᵀ
    let mut bt = vec![vec![Z::zero(); rows.len()]; n];
    for (i, row) in rows.iter().enumerate() {
        debug_assert_eq!(row.len(), n);
        for (j, x) in row.iter().enumerate() {
            bt[j][i] = x.clone();
        }
    }
    left_kernel_int(&bt)
}

/// Basis (rows) of the lattice `Zⁿ ∩ span(rows)`, i.e. the saturation of the
/// row space intersected with the integer lattice.
pub fn saturated_lattice_basis<Z: Scalar>(rows: &[Vec<Z>], n: usize) -> Vec<Vec<Z>> {
    if rows.is_empty() {
        return vec![];
    }
    let normals = kernel_basis_int(rows, n);
    if normals.is_empty() {
        // row space is all of Qⁿ
        return (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Z::one() } else { Z::zero() })
                    .collect()
            })
            .collect();
    }
    int_right_kernel(&normals, n)
}

/// Integer coordinates of `v` in the given lattice basis (rows). `None` if
/// `v` is outside the spanned lattice.
pub fn lattice_coordinates<Z: Scalar>(basis: &[Vec<Z>], v: &[Z]) -> Option<Vec<Z>> {
    let d = basis.len();
    let n = v.len();
    // solve xᵀ · basis = v, i.e. basisᵀ x = vᵀ
    let a: Vec<Vec<Ratio<Z>>> = (0..n)
        .map(|j| (0..d).map(|i| Ratio::from_integer(basis[i][j].clone())).collect())
        .collect();
    let b: Vec<Ratio<Z>> = crate::num::to_rationals(v);
    let x = solve_rat(&a, &b)?;
    let mut out = Vec::with_capacity(d);
    for c in x {
        if !c.denom().is_one() {
            return None;
        }
        out.push(c.numer().clone());
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Signed;

    fn iv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn det_small() {
        assert_eq!(det_int(&[iv(&[2, 2]), iv(&[2, 0])]), int::<BigInt>(-4));
        assert_eq!(det_int(&[iv(&[1, 2, 3]), iv(&[4, 5, 6]), iv(&[7, 8, 9])]), int::<BigInt>(0));
    }

    #[test]
    fn kernel_of_sum_row() {
        let k = kernel_basis_int(&[iv(&[1, 1, 1])], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(crate::num::dot(v, &iv(&[1, 1, 1])).is_zero());
        }
    }

    #[test]
    fn saturation_divides_out_index() {
        // span((2)) in Z¹ saturates to Z¹
        let b = saturated_lattice_basis(&[iv(&[2])], 1);
        assert_eq!(b, vec![iv(&[1])]);
        // triangle differences: lattice is the sum-zero sublattice of Z³
        let b = saturated_lattice_basis(&[iv(&[2, 0, -2]), iv(&[2, -2, 0])], 3);
        assert_eq!(b.len(), 2);
        let c0 = lattice_coordinates(&b, &iv(&[2, 0, -2])).unwrap();
        let c1 = lattice_coordinates(&b, &iv(&[2, -2, 0])).unwrap();
        let det = det_int(&[c0, c1]);
        assert_eq!(det.abs(), int::<BigInt>(4));
    }

    #[test]
    fn coordinates_reject_non_lattice_points() {
        let b = vec![iv(&[2, 0])];
        assert!(lattice_coordinates(&b, &iv(&[1, 0])).is_none());
        assert!(lattice_coordinates(&b, &iv(&[4, 0])).is_some());
        assert!(lattice_coordinates(&b, &iv(&[0, 1])).is_none());
    }
}
