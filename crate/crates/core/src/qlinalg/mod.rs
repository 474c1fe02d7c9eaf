//! Exact linear algebra over ℚ and the integer-lattice arithmetic needed to
//! decide coset membership modulo ℤⁿ.
//!
//! Everything here is exact: scalars are arbitrary-precision rationals and no
//! floating point is used anywhere.

mod arrangement;
mod lattice;
mod matrix;
mod subspace;

pub use arrangement::{meets_nontrivially, SubspaceArrangement};
pub use lattice::{coset_in_subspace_mod_lattice, hermite_basis, lattice_contains};
pub use matrix::QMatrix;
pub use subspace::RationalSubspace;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// `p/q` as a [`Rational`]. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `p` as a [`Rational`].
pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Converts a slice of integers to a rational vector.
pub fn qvec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Rank of a matrix over ℚ.
pub fn rank(m: &QMatrix) -> usize {
    m.rank()
}

/// Lowest common multiple of the denominators of `v`.
pub(crate) fn common_denominator(v: &[Rational]) -> BigInt {
    v.iter()
        .fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()))
}
