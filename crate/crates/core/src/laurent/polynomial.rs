use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::qlinalg::Rational;

/// A Laurent polynomial in `n` variables with rational coefficients.
///
/// Terms are kept in a sorted map from exponent vectors to nonzero
/// coefficients. The same type serves for ordinary polynomials (all
/// exponents nonnegative), e.g. the tangent-cone forms in the `z` variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    n: usize,
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl LaurentPolynomial {
    pub fn zero(n: usize) -> Self {
        LaurentPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(c, vec![0; n])
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn monomial(c: Rational, exponent: Vec<i64>) -> Self {
        let n = exponent.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        LaurentPolynomial { n, terms }
    }

    /// The variable `t_i` (0-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(Rational::one(), e)
    }

    /// Sums repeated exponents and drops zero coefficients.
    pub fn new(n: usize, terms: impl IntoIterator<Item = (Vec<i64>, Rational)>) -> Result<Self> {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            check_dim(n, e.len())?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Convenience constructor from integer data.
    pub fn from_int_terms(n: usize, terms: &[(&[i64], i64)]) -> Self {
        Self::new(
            n,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), Rational::from_integer(BigInt::from(*c)))),
        )
        .expect("exponent vectors have length n")
    }

    fn add_term(&mut self, e: Vec<i64>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    pub fn coeff(&self, e: &[i64]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Sum of the coefficients, i.e. the value at `(1, …, 1)`.
    pub fn value_at_one(&self) -> Rational {
        self.terms.values().sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Total degree of the highest term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Smallest total degree of a term; `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The part of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: i64) -> Self {
        LaurentPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<i64>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `t^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        LaurentPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// The unique `t^a · f` with nonnegative exponents and no monomial factor.
    pub fn clear_monomial(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mins: Vec<i64> = (0..self.n)
            .map(|i| -self.terms.keys().map(|e| e[i]).min().expect("nonzero"))
            .collect();
        self.shift(&mins)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        LaurentPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Coefficient of the lexicographically largest exponent.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// Scales so that the lexicographically largest term has coefficient 1.
    pub fn normalized(&self) -> Self {
        match self.leading_coeff() {
            Some(c) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `f(z₁ + 1, …, z_n + 1)` for a polynomial `f`.
    ///
    /// Laurent inputs are first multiplied by the monomial clearing their
    /// denominators; this changes `g` only by a unit with constant term 1,
    /// so its initial form is unaffected.
    pub fn shift_to_identity(&self) -> Self {
        let f = if self.is_polynomial() {
            self.clone()
        } else {
            self.clear_monomial()
        };
        let mut out = Self::zero(self.n);
        for (e, c) in &f.terms {
            let mut term = Self::constant(self.n, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    let binom = &Self::var(self.n, i) + &Self::one(self.n);
                    term = &term * &binom.pow(k as u32);
                }
            }
            out = &out + &term;
        }
        out
    }

    /// The lowest-degree homogeneous part.
    pub fn initial_form(&self) -> Self {
        match self.min_degree() {
            Some(d) => self.homogeneous_part(d),
            None => self.clone(),
        }
    }

    /// Evaluates a polynomial at a rational point.
    pub fn eval(&self, x: &[Rational]) -> Result<Rational> {
        check_dim(self.n, x.len())?;
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                if k < 0 {
                    if xi.is_zero() {
                        return Err(Error::Precondition("negative power of zero".into()));
                    }
                    v *= rpow(&xi.recip(), -k);
                } else {
                    v *= rpow(xi, k);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Substitutes `z_i = Σ_j rows[i][j] s_j`, producing a polynomial in the
    /// `k` variables `s`. Requires nonnegative exponents.
    pub fn linear_substitute(&self, rows: &[Vec<Rational>], k: usize) -> Result<Self> {
        check_dim(self.n, rows.len())?;
        if !self.is_polynomial() {
            return Err(Error::Precondition("linear substitution needs a polynomial".into()));
        }
        let forms: Vec<Self> = rows
            .iter()
            .map(|r| {
                check_dim(k, r.len())?;
                Self::new(
                    k,
                    r.iter().enumerate().map(|(j, c)| {
                        let mut e = vec![0; k];
                        e[j] = 1;
                        (e, c.clone())
                    }),
                )
            })
            .collect::<Result<_>>()?;
        let mut out = Self::zero(k);
        for (e, c) in &self.terms {
            let mut term = Self::constant(k, c.clone());
            for (i, &p) in e.iter().enumerate() {
                if p > 0 {
                    term = &term * &forms[i].pow(p as u32);
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Exact division by a nonzero linear form `Σ ℓ_i z_i`, or `None` if the
    /// form does not divide.
    pub fn div_linear_form(&self, form: &[Rational]) -> Option<Self> {
        assert_eq!(form.len(), self.n);
        let p = form.iter().rposition(|c| !c.is_zero())?;
        let lead = form[p].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.n);
        loop {
            // A term with the largest power of z_p.
            let Some((e, c)) = rem
                .terms
                .iter()
                .filter(|(e, _)| e[p] > 0)
                .max_by_key(|(e, _)| e[p])
                .map(|(e, c)| (e.clone(), c.clone()))
            else {
                break;
            };
            let mut qe = e;
            qe[p] -= 1;
            let q = Self::monomial(c / &lead, qe);
            let lin = Self::new(
                self.n,
                form.iter().enumerate().map(|(j, a)| {
                    let mut ej = vec![0; self.n];
                    ej[j] = 1;
                    (ej, a.clone())
                }),
            )
            .expect("form has n entries");
            rem = &rem - &(&q * &lin);
            quot = &quot + &q;
        }
        rem.is_zero().then_some(quot)
    }
}

fn rpow(x: &Rational, k: i64) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * x)
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.n, rhs.n, "variable counts differ");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.n, rhs.n, "variable counts differ");
        let mut out = LaurentPolynomial::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.iter().zip(b).map(|(p, q)| p + q).collect(), x * y);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p != 0)
                .map(|(i, &p)| if p == 1 { format!("t{}", i + 1) } else { format!("t{}^{}", i + 1, p) })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial[{}]({})", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::{int, qvec};

    fn chain_link() -> LaurentPolynomial {
        LaurentPolynomial::from_int_terms(
            3,
            &[
                (&[1, 0, 0], 1),
                (&[0, 1, 0], 1),
                (&[0, 0, 1], 1),
                (&[1, 1, 0], -1),
                (&[1, 0, 1], -1),
                (&[0, 1, 1], -1),
            ],
        )
    }

    #[test]
    fn zero_coefficients_vanish() {
        let p = LaurentPolynomial::from_int_terms(1, &[(&[1], 2), (&[1], -2), (&[0], 1)]);
        assert_eq!(p, LaurentPolynomial::one(1));
    }

    #[test]
    fn shift_expands_binomials() {
        // (1+z)² − (1+z) + 1 = 1 + z + z²
        let f = LaurentPolynomial::from_int_terms(1, &[(&[2], 1), (&[1], -1), (&[0], 1)]);
        let g = f.shift_to_identity();
        assert_eq!(g, LaurentPolynomial::from_int_terms(1, &[(&[2], 1), (&[1], 1), (&[0], 1)]));
        assert_eq!(g.initial_form(), LaurentPolynomial::one(1));
    }

    #[test]
    fn chain_link_initial_form() {
        let g = chain_link().shift_to_identity();
        let expected = LaurentPolynomial::from_int_terms(3, &[(&[1, 0, 0], -1), (&[0, 1, 0], -1), (&[0, 0, 1], -1)]);
        assert_eq!(g.initial_form(), expected);
    }

    #[test]
    fn negative_exponents_are_cleared() {
        // t − t⁻¹ = t⁻¹(t² − 1), initial form 2z.
        let f = LaurentPolynomial::from_int_terms(1, &[(&[1], 1), (&[-1], -1)]);
        assert_eq!(f.shift_to_identity().initial_form(), LaurentPolynomial::from_int_terms(1, &[(&[1], 2)]));
    }

    #[test]
    fn evaluation() {
        let f = chain_link();
        assert_eq!(f.value_at_one(), int(0));
        assert_eq!(f.eval(&qvec(&[2, 0, 0])).unwrap(), int(2));
    }

    #[test]
    fn substitution_along_a_line() {
        // z1 + z2 + z3 restricted to (s, -s, 0) vanishes.
        let form = LaurentPolynomial::from_int_terms(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1)]);
        let r = form.linear_substitute(&[qvec(&[1]), qvec(&[-1]), qvec(&[0])], 1).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn exact_linear_division() {
        // z1 z2 / z1 = z2 ; (z1 + z2)^2 / (z1 + z2) ; z1 z2 is not divisible by z1 + z2.
        let z1z2 = LaurentPolynomial::from_int_terms(2, &[(&[1, 1], 1)]);
        assert_eq!(
            z1z2.div_linear_form(&qvec(&[1, 0])).unwrap(),
            LaurentPolynomial::var(2, 1)
        );
        let s = LaurentPolynomial::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(s.pow(2).div_linear_form(&qvec(&[1, 1])).unwrap(), s);
        assert!(z1z2.div_linear_form(&qvec(&[1, 1])).is_none());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(chain_link().to_string(), "-t1*t2 - t1*t3 + t1 - t2*t3 + t2 + t3");
    }
}
