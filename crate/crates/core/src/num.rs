//! Coefficient scalars.
//!
//! Everything downstream (polynomials, Möbius labels, tables) is generic over
//! the coefficient ring. Any signed integer type from the `num` family works;
//! the crate-root aliases fix `num_bigint::BigInt` so that sweeps can never
//! overflow silently.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed-integer scalar: `i64`, `i128`, `num_bigint::BigInt`, ...
///
/// `Signed` brings the ring operations plus `abs`/`is_negative`; `Ord` is
/// needed for canonical forms and coefficient inspection; the primitive
/// conversions serve (de)serialization.
pub trait Coeff:
    Signed + Ord + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Coeff for T where
    T: Signed + Ord + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// Row `n` of Pascal's triangle computed in the scalar itself, so binomial
/// coefficients stay exact for every `Coeff`.
pub fn binomial_row<C: Coeff>(n: usize) -> Vec<C> {
    let mut row = vec![C::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(C::one());
        for pair in row.windows(2) {
            next.push(pair[0].clone() + pair[1].clone());
        }
        next.push(C::one());
        row = next;
    }
    row
}
