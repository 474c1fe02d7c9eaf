use std::fmt;

use num_traits::Zero;

use super::{is_zero_vec, unit_vec, QMatrix, Rational};
use crate::error::{check_dim, Result};

/// A linear subspace of ℚⁿ.
///
/// The basis is stored in reduced row-echelon form, which is unique for a
/// given subspace, so structural equality is subspace equality and the derived
/// ordering gives a canonical sort order for arrangements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalSubspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl RationalSubspace {
    pub fn zero(n: usize) -> Self {
        RationalSubspace {
            ambient: n,
            basis: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        RationalSubspace {
            ambient: n,
            basis: (0..n).map(|i| unit_vec(n, i)).collect(),
        }
    }

    /// Span of the given vectors (which need not be independent).
    pub fn span(n: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        for v in vectors {
            check_dim(n, v.len())?;
        }
        let (r, pivots) = QMatrix::from_rows(n, vectors).rref();
        Ok(RationalSubspace {
            ambient: n,
            basis: (0..pivots.len()).map(|i| r.row(i).to_vec()).collect(),
        })
    }

    /// The common zero set `{x : e·x = 0 for every equation e}`.
    pub fn from_equations(n: usize, equations: &[Vec<Rational>]) -> Result<Self> {
        for e in equations {
            check_dim(n, e.len())?;
        }
        let kernel = QMatrix::from_rows(n, equations).kernel();
        Self::span(n, &kernel)
    }

    /// The coordinate subspace spanned by `e_i` for `i` in `coords` (0-based).
    pub fn coordinate(n: usize, coords: impl IntoIterator<Item = usize>) -> Self {
        let vecs: Vec<_> = coords.into_iter().map(|i| unit_vec(n, i)).collect();
        Self::span(n, &vecs).expect("unit vectors have the ambient dimension")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// The RREF basis rows.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// A canonical (RREF) system of linear equations cutting out the subspace.
    pub fn equations(&self) -> Vec<Vec<Rational>> {
        let kernel = QMatrix::from_rows(self.ambient, &self.basis).kernel();
        Self::span(self.ambient, &kernel)
            .expect("kernel vectors live in the ambient space")
            .basis
    }

    pub fn contains_vector(&self, v: &[Rational]) -> Result<bool> {
        check_dim(self.ambient, v.len())?;
        if is_zero_vec(v) {
            return Ok(true);
        }
        // v lies in the row space iff reducing it against the RREF rows leaves zero.
        let mut w = v.to_vec();
        for row in &self.basis {
            let p = row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (wj, rj) in w.iter_mut().zip(row) {
                *wj -= &f * rj;
            }
        }
        Ok(is_zero_vec(&w))
    }

    pub fn contains(&self, other: &RationalSubspace) -> Result<bool> {
        check_dim(self.ambient, other.ambient)?;
        for v in &other.basis {
            if !self.contains_vector(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &RationalSubspace) -> Result<Self> {
        check_dim(self.ambient, other.ambient)?;
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Self::span(self.ambient, &vecs)
    }

    pub fn intersect(&self, other: &RationalSubspace) -> Result<Self> {
        check_dim(self.ambient, other.ambient)?;
        let mut eqs = self.equations();
        eqs.extend(other.equations());
        Self::from_equations(self.ambient, &eqs)
    }

    /// `self × other` inside ℚ^{n₁+n₂}.
    pub fn direct_product(&self, other: &RationalSubspace) -> Self {
        let n = self.ambient + other.ambient;
        let mut vecs = Vec::with_capacity(self.dim() + other.dim());
        for v in &self.basis {
            let mut w = v.clone();
            w.resize(n, Rational::zero());
            vecs.push(w);
        }
        for v in &other.basis {
            let mut w = vec![Rational::zero(); self.ambient];
            w.extend(v.iter().cloned());
            vecs.push(w);
        }
        Self::span(n, &vecs).expect("padded vectors have the product dimension")
    }
}

impl fmt::Debug for RationalSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (k, v) in self.basis.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        write!(f, "}} ⊆ Q^{}", self.ambient)
    }
}
