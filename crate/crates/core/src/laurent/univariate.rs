use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::LaurentPolynomial;
use crate::error::{Error, Result};
use crate::qlinalg::Rational;

/// A polynomial in one variable `t` over ℚ, dense, lowest degree first.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Rational::zero(); k + 1];
        c[k] = Rational::one();
        UniPoly { coeffs: c }
    }

    /// A one-variable Laurent polynomial times the power of `t` that makes it
    /// an ordinary polynomial not divisible by `t`.
    pub fn from_laurent(p: &LaurentPolynomial) -> Result<Self> {
        if p.n_vars() != 1 {
            return Err(Error::Multivariable(p.n_vars()));
        }
        let q = p.clear_monomial();
        let deg = q.total_degree().unwrap_or(0).max(0) as usize;
        let mut c = vec![Rational::zero(); deg + 1];
        for (e, x) in q.terms() {
            c[e[0] as usize] = x.clone();
        }
        Ok(Self::new(c))
    }

    pub fn to_laurent(&self) -> LaurentPolynomial {
        LaurentPolynomial::new(
            1,
            self.coeffs.iter().enumerate().map(|(k, c)| (vec![k as i64], c.clone())),
        )
        .expect("one variable")
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Monic normalization; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Removes every factor of `t`, since `t = 0` is not a character.
    pub fn strip_t(&self) -> Self {
        let k = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        Self::new(self.coeffs[k..].to_vec())
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading().expect("nonzero").clone();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let c = r.last().expect("nonempty") / &lead;
            for (j, x) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * x;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn divides(&self, other: &UniPoly) -> bool {
        !self.is_zero() && other.div_rem(self).1.is_zero()
    }

    /// Exact quotient; panics if `d` does not divide.
    pub fn div_exact(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd, with `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic lcm; the lcm with zero is zero.
    pub fn lcm(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        (self * other).div_exact(&self.gcd(other)).monic()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|k| {
                    let a = self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero);
                    a + rhs.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
                })
                .collect(),
        )
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::new(c)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

/// Euler's totient.
pub fn totient(m: u64) -> u64 {
    (1..=m).filter(|k| k.gcd(&m) == 1).count() as u64
}

/// The `m`-th cyclotomic polynomial, via `tᵐ − 1 = ∏_{d | m} Φ_d`.
pub fn cyclotomic(m: u64) -> UniPoly {
    assert!(m >= 1);
    let mut p = &UniPoly::monomial(m as usize) - &UniPoly::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = p.div_exact(&cyclotomic(d));
        }
    }
    p
}

/// Largest degree of a cyclotomic factor that is recognized.
pub const MAX_CYCLOTOMIC_DEGREE: u64 = 12;

/// A polynomial split as `c · ∏ Φ_m^{e_m} · residual`, where the residual
/// has no cyclotomic factor of degree at most [`MAX_CYCLOTOMIC_DEGREE`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    /// Pairs `(m, multiplicity)`, sorted by `m`.
    pub cyclotomic: Vec<(u64, u32)>,
    /// Monic remaining factor, `1` when fully cyclotomic.
    pub residual: UniPoly,
}

impl CyclotomicFactorization {
    /// Whether every root is a root of unity.
    pub fn is_fully_cyclotomic(&self) -> bool {
        self.residual.degree() == Some(0)
    }

    /// The torsion roots `exp(2πi k/m)` as reduced fractions `k/m ∈ [0, 1)`,
    /// without multiplicity, sorted.
    pub fn root_angles(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = self
            .cyclotomic
            .iter()
            .flat_map(|&(m, _)| {
                (0..m)
                    .filter(move |k| k.gcd(&m) == 1)
                    .map(move |k| Rational::new((k as i64).into(), (m as i64).into()))
            })
            .collect();
        out.sort();
        out
    }
}

/// Splits off the cyclotomic factors of degree at most 12 from a nonzero
/// polynomial. Factors of `t` are discarded first.
pub fn factor_cyclotomic(p: &UniPoly) -> Result<CyclotomicFactorization> {
    if p.is_zero() {
        return Err(Error::Precondition("cannot factor the zero polynomial".into()));
    }
    let mut rest = p.strip_t().monic();
    let mut found = Vec::new();
    // φ(m) ≤ 12 forces m ≤ 42.
    for m in 1..=42u64 {
        if totient(m) > MAX_CYCLOTOMIC_DEGREE {
            continue;
        }
        let phi = cyclotomic(m);
        let mut e = 0;
        while rest.degree().unwrap_or(0) >= phi.degree().unwrap_or(0) && phi.divides(&rest) {
            rest = rest.div_exact(&phi);
            e += 1;
        }
        if e > 0 {
            found.push((m, e));
        }
    }
    Ok(CyclotomicFactorization {
        cyclotomic: found,
        residual: rest.monic(),
    })
}

/// Determinant of a square matrix over `ℚ[t]` by fraction-free (Bareiss)
/// elimination, which only ever divides exactly.
pub fn det(m: &[Vec<UniPoly>]) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one();
    }
    let mut a: Vec<Vec<UniPoly>> = m.to_vec();
    let mut sign = false;
    let mut prev = UniPoly::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return UniPoly::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -&d
    } else {
        d
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Monic gcd of all `k × k` minors of `m` (`rows × cols`).
///
/// By convention the empty set of minors (`k` larger than a side) has gcd
/// `0`, and `k = 0` gives `1`.
pub fn minor_gcd(m: &[Vec<UniPoly>], rows: usize, cols: usize, k: usize) -> UniPoly {
    if k == 0 {
        return UniPoly::one();
    }
    let mut g = UniPoly::zero();
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let sub: Vec<Vec<UniPoly>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect()).collect();
            g = g.gcd(&det(&sub));
            if g.degree() == Some(0) {
                return g;
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::{int, rat};

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(1), UniPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic(6), UniPoly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), UniPoly::from_ints(&[1, 0, -1, 0, 1]));
        assert_eq!(totient(36), 12);
    }

    #[test]
    fn gcd_and_lcm() {
        let a = UniPoly::from_ints(&[-1, 0, 1]);
        let b = UniPoly::from_ints(&[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        assert_eq!(a.lcm(&b), a);
        assert_eq!(UniPoly::zero().gcd(&a), a);
        assert!(UniPoly::zero().lcm(&a).is_zero());
    }

    #[test]
    fn trefoil_is_sixth_cyclotomic() {
        let f = factor_cyclotomic(&UniPoly::from_ints(&[1, -1, 1])).unwrap();
        assert_eq!(f.cyclotomic, vec![(6, 1)]);
        assert!(f.is_fully_cyclotomic());
        assert_eq!(f.root_angles(), vec![rat(1, 6), rat(5, 6)]);
    }

    #[test]
    fn residual_kept() {
        // (t − 1)² (2t − 1): the factor 2t − 1 has root 1/2, not torsion.
        let p = &UniPoly::from_ints(&[-1, 1]).pow(2) * &UniPoly::from_ints(&[-1, 2]);
        let f = factor_cyclotomic(&p).unwrap();
        assert_eq!(f.cyclotomic, vec![(1, 2)]);
        assert_eq!(f.residual, UniPoly::new(vec![rat(-1, 2), int(1)]));
    }

    #[test]
    fn bareiss_matches_expansion() {
        let t = UniPoly::from_ints(&[0, 1]);
        let one = UniPoly::one();
        let m = vec![
            vec![t.clone(), one.clone(), UniPoly::zero()],
            vec![one.clone(), t.clone(), one.clone()],
            vec![UniPoly::zero(), one.clone(), t.clone()],
        ];
        // t³ − 2t
        assert_eq!(det(&m), UniPoly::from_ints(&[0, -2, 0, 1]));
    }

    #[test]
    fn minors_of_a_column() {
        let m = vec![vec![UniPoly::from_ints(&[-1, 1])], vec![UniPoly::from_ints(&[-1, 0, 1])]];
        assert_eq!(minor_gcd(&m, 2, 1, 1), UniPoly::from_ints(&[-1, 1]));
        assert!(minor_gcd(&m, 2, 1, 2).is_zero());
        assert_eq!(minor_gcd(&m, 2, 1, 0), UniPoly::one());
    }

    #[test]
    fn laurent_roundtrip() {
        let l = LaurentPolynomial::from_int_terms(1, &[(&[-1], 1), (&[1], -1)]);
        assert_eq!(UniPoly::from_laurent(&l).unwrap(), UniPoly::from_ints(&[1, 0, -1]));
        assert!(UniPoly::from_laurent(&LaurentPolynomial::one(2)).is_err());
    }
}
