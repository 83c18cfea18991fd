//! Scalar abstraction and small exact-vector helpers.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed};

/// Integer scalar the exact kernels are generic over.
///
/// Implemented by `i64`, `i128` and `num_bigint::BigInt`.  The crate-root
/// aliases use arbitrary precision, which is the safe default: double
/// description and determinant intermediates grow beyond fixed width even
/// on small inputs.
pub trait Scalar:
    Integer + Signed + Clone + Hash + Debug + Display + FromPrimitive + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Integer + Signed + Clone + Hash + Debug + Display + FromPrimitive + Send + Sync + 'static
{
}

/// Small-constant conversion; every `Scalar` holds at least `i64`.
pub fn int<Z: Scalar>(v: i64) -> Z {
    Z::from_i64(v).expect("i64 fits in every Scalar")
}

pub fn dot<Z: Scalar>(a: &[Z], b: &[Z]) -> Z {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Z::zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc + x.clone() * y.clone();
    }
    acc
}

/// Divide by the gcd of the entries, keeping orientation. Zero rows pass through.
pub fn make_primitive<Z: Scalar>(row: &mut [Z]) {
    let mut g = Z::zero();
    for x in row.iter() {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = x.clone() / g.clone();
    }
}

/// Flip so the first nonzero entry is positive (canonical line representative).
pub fn sign_canonical<Z: Scalar>(row: &mut [Z]) {
    if let Some(first) = row.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

/// Primitive integer vector on the same ray as a rational vector.
pub fn primitive_from_rationals<Z: Scalar>(row: &[Ratio<Z>]) -> Vec<Z> {
    let mut lcm = Z::one();
    for x in row {
        lcm = lcm.lcm(x.denom());
    }
    let mut out: Vec<Z> = row
        .iter()
        .map(|x| x.numer().clone() * (lcm.clone() / x.denom().clone()))
        .collect();
    make_primitive(&mut out);
    out
}

pub fn to_rationals<Z: Scalar>(row: &[Z]) -> Vec<Ratio<Z>> {
    row.iter().map(|x| Ratio::from_integer(x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn primitive_and_sign() {
        let mut v: Vec<BigInt> = vec![int(-4), int(6), int(-2)];
        make_primitive(&mut v);
        assert_eq!(v, vec![int::<BigInt>(-2), int(3), int(-1)]);
        sign_canonical(&mut v);
        assert_eq!(v, vec![int::<BigInt>(2), int(-3), int(1)]);
    }

    #[test]
    fn rational_ray_representative() {
        let row: Vec<num_rational::Ratio<BigInt>> = vec![
            num_rational::Ratio::new(int(1), int(2)),
            num_rational::Ratio::new(int(-3), int(4)),
        ];
        assert_eq!(primitive_from_rationals(&row), vec![int::<BigInt>(2), int(-3)]);
    }
}
