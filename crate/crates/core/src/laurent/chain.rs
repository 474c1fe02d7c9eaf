use super::univariate::{minor_gcd, UniPoly};
use super::LaurentPolynomial;
use crate::error::{Error, Result};
use crate::qlinalg::Rational;
use num_traits::Zero;

/// A finite free chain complex over `ℚ[t^{±1}]`:
/// `C_m → ⋯ → C_1 → C_0` with `C_i` of rank `c_i`.
///
/// `boundaries[i − 1]` is `∂_i : C_i → C_{i−1}`, a `c_{i−1} × c_i` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantChainComplex1 {
    ranks: Vec<usize>,
    boundaries: Vec<Vec<Vec<LaurentPolynomial>>>,
}

impl EquivariantChainComplex1 {
    /// Checks shapes, the single variable and `∂_i ∘ ∂_{i+1} = 0`.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<Vec<Vec<LaurentPolynomial>>>) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::InvalidChainComplex("no chain groups".into()));
        }
        if boundaries.len() + 1 != ranks.len() {
            return Err(Error::InvalidChainComplex(format!(
                "{} chain groups need {} boundary maps, got {}",
                ranks.len(),
                ranks.len() - 1,
                boundaries.len()
            )));
        }
        for (k, d) in boundaries.iter().enumerate() {
            let (rows, cols) = (ranks[k], ranks[k + 1]);
            if d.len() != rows || d.iter().any(|r| r.len() != cols) {
                return Err(Error::InvalidChainComplex(format!(
                    "boundary {} should be {rows}x{cols}",
                    k + 1
                )));
            }
            for p in d.iter().flatten() {
                if p.n_vars() != 1 {
                    return Err(Error::Multivariable(p.n_vars()));
                }
            }
        }
        for k in 1..boundaries.len() {
            let (a, b) = (&boundaries[k - 1], &boundaries[k]);
            for i in 0..ranks[k - 1] {
                for j in 0..ranks[k + 1] {
                    let mut s = LaurentPolynomial::zero(1);
                    for l in 0..ranks[k] {
                        s = &s + &(&a[i][l] * &b[l][j]);
                    }
                    if !s.is_zero() {
                        return Err(Error::InvalidChainComplex(format!(
                            "boundary {} composed with boundary {} is nonzero",
                            k,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(EquivariantChainComplex1 { ranks, boundaries })
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn boundary(&self, i: usize) -> Option<&Vec<Vec<LaurentPolynomial>>> {
        if i == 0 {
            return None;
        }
        self.boundaries.get(i - 1)
    }

    /// `∂_i` as a polynomial matrix after multiplying by a power of `t`,
    /// which changes no minor's zero set in `ℂ^×`.
    fn poly_boundary(&self, i: usize) -> Option<(Vec<Vec<UniPoly>>, usize, usize)> {
        let d = self.boundary(i)?;
        let (rows, cols) = (self.ranks[i - 1], self.ranks[i]);
        let low = d
            .iter()
            .flatten()
            .flat_map(|p| p.terms().map(|(e, _)| e[0]))
            .min()
            .unwrap_or(0);
        let m = d
            .iter()
            .map(|r| {
                r.iter()
                    .map(|p| {
                        let q = p.shift(&[-low]);
                        let deg = q.total_degree().unwrap_or(0).max(0) as usize;
                        let mut c = vec![Rational::zero(); deg + 1];
                        for (e, x) in q.terms() {
                            c[e[0] as usize] = x.clone();
                        }
                        UniPoly::new(c)
                    })
                    .collect()
            })
            .collect();
        Some((m, rows, cols))
    }
}

/// Gcd of `k`-minors of `∂_i`, where an absent boundary is the zero map.
fn fitting(c: &EquivariantChainComplex1, i: usize, k: usize) -> UniPoly {
    match c.poly_boundary(i) {
        Some((m, rows, cols)) => minor_gcd(&m, rows, cols, k),
        None if k == 0 => UniPoly::one(),
        None => UniPoly::zero(),
    }
}

/// A monic polynomial (with no factor `t`) cutting out, in `ℂ^×`, the locus
/// where `rank ∂_{i+1}(ρ) + rank ∂_i(ρ) ≤ c_i − d`, i.e. where the twisted
/// homology in degree `i` has dimension at least `d`.
///
/// The zero polynomial means the whole of `ℂ^×` and `1` the empty set.
pub fn cv_rank1_chain(c: &EquivariantChainComplex1, i: usize, d: usize) -> Result<UniPoly> {
    if i > c.top() {
        return Err(Error::DegreeOutOfRange { degree: i, max: c.top() });
    }
    let ci = c.ranks[i];
    if d > ci {
        return Ok(UniPoly::one());
    }
    let budget = ci - d;
    // rank A + rank B ≤ D  ⟺  rank A ≤ a and rank B ≤ b for some a + b = D.
    let mut acc = UniPoly::one();
    for a in 0..=budget {
        let b = budget - a;
        let part = fitting(c, i + 1, a + 1).gcd(&fitting(c, i, b + 1));
        acc = acc.lcm(&part);
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc.strip_t().monic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::rat;

    fn lp(c: &[i64]) -> LaurentPolynomial {
        UniPoly::from_ints(c).to_laurent()
    }

    /// `Λ →f Λ →0 Λ →(t−1) Λ`.
    fn s1s2(f: &[i64]) -> EquivariantChainComplex1 {
        EquivariantChainComplex1::new(
            vec![1, 1, 1, 1],
            vec![vec![vec![lp(&[-1, 1])]], vec![vec![lp(&[])]], vec![vec![lp(f)]]],
        )
        .unwrap()
    }

    #[test]
    fn example_complex_loci() {
        let c = s1s2(&[1, -3, 2]);
        assert_eq!(cv_rank1_chain(&c, 1, 1).unwrap(), UniPoly::from_ints(&[-1, 1]));
        assert_eq!(
            cv_rank1_chain(&c, 2, 1).unwrap(),
            UniPoly::new(vec![rat(1, 2), rat(-3, 2), rat(1, 1)])
        );
        assert_eq!(cv_rank1_chain(&c, 0, 1).unwrap(), UniPoly::from_ints(&[-1, 1]));
        assert_eq!(cv_rank1_chain(&c, 1, 2).unwrap(), UniPoly::one());
    }

    #[test]
    fn zero_boundaries_give_everything() {
        let c = EquivariantChainComplex1::new(
            vec![2, 1],
            vec![vec![vec![lp(&[])], vec![lp(&[])]]],
        )
        .unwrap();
        assert!(cv_rank1_chain(&c, 0, 1).unwrap().is_zero());
        assert!(cv_rank1_chain(&c, 0, 2).unwrap().is_zero());
        assert!(cv_rank1_chain(&c, 1, 1).unwrap().is_zero());
    }

    #[test]
    fn laurent_entries_are_shifted() {
        // ∂₁ = t⁻¹ − 1 has the same zero set as t − 1.
        let c = EquivariantChainComplex1::new(
            vec![1, 1],
            vec![vec![vec![LaurentPolynomial::from_int_terms(1, &[(&[-1], 1), (&[0], -1)])]]],
        )
        .unwrap();
        assert_eq!(cv_rank1_chain(&c, 1, 1).unwrap(), UniPoly::from_ints(&[-1, 1]));
    }

    #[test]
    fn rejects_bad_input() {
        let err = EquivariantChainComplex1::new(
            vec![1, 1],
            vec![vec![vec![LaurentPolynomial::one(2)]]],
        );
        assert_eq!(err.unwrap_err(), Error::Multivariable(2));
        let not_complex = EquivariantChainComplex1::new(
            vec![1, 1, 1],
            vec![vec![vec![lp(&[-1, 1])]], vec![vec![lp(&[1])]]],
        );
        assert!(matches!(not_complex, Err(Error::InvalidChainComplex(_))));
        assert!(cv_rank1_chain(&s1s2(&[1]), 4, 1).is_err());
    }
}
