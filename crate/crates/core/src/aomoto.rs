//! Aomoto complexes `(A, ·a)` of graded algebras presented by their
//! degree-one multiplication maps, used as an exact resonance oracle.

use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::qlinalg::{QMatrix, Rational, RationalSubspace, SubspaceArrangement};

/// A graded algebra `A⁰ ⊕ ⋯ ⊕ A^k` with `A⁰ = ℚ`, described by
/// left multiplication by the degree-one basis elements `e_j`.
///
/// `mult[i][j]` is the matrix (`c_{i+1} × c_i`) of `u ↦ e_j u` on `A^i`.
/// `mult[0]` is the inclusion `1 ↦ e_j` and is built automatically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebraPresentation {
    dims: Vec<usize>,
    mult: Vec<Vec<QMatrix>>,
}

impl GradedAlgebraPresentation {
    /// `higher[i − 1][j]` is the matrix of `e_j · : A^i → A^{i+1}` for
    /// `1 ≤ i < k`, where `k = dims.len() − 1`.
    ///
    /// Checks shapes and that `e_j e_l + e_l e_j` acts as zero in every
    /// degree, the polarized form of `a · a = 0`.
    pub fn new(dims: Vec<usize>, higher: Vec<Vec<QMatrix>>) -> Result<Self> {
        if dims.first() != Some(&1) {
            return Err(Error::InvalidAlgebra("c₀ must be 1".into()));
        }
        let k = dims.len() - 1;
        let n = dims.get(1).copied().unwrap_or(0);
        if higher.len() != k.saturating_sub(1) {
            return Err(Error::InvalidAlgebra(format!(
                "top degree {k} needs {} multiplication tables, got {}",
                k.saturating_sub(1),
                higher.len()
            )));
        }
        let mut mult = Vec::with_capacity(k);
        if k >= 1 {
            mult.push((0..n).map(|j| QMatrix::from_fn(n, 1, |r, _| unit(r == j))).collect());
        }
        for (idx, tables) in higher.into_iter().enumerate() {
            let i = idx + 1;
            if tables.len() != n {
                return Err(Error::InvalidAlgebra(format!("degree {i} needs {n} tables, got {}", tables.len())));
            }
            for t in &tables {
                if t.rows() != dims[i + 1] || t.cols() != dims[i] {
                    return Err(Error::InvalidAlgebra(format!(
                        "degree {i} table should be {}x{}",
                        dims[i + 1],
                        dims[i]
                    )));
                }
            }
            mult.push(tables);
        }
        let alg = GradedAlgebraPresentation { dims, mult };
        alg.check_square_zero()?;
        Ok(alg)
    }

    fn check_square_zero(&self) -> Result<()> {
        let n = self.n();
        for i in 0..self.mult.len().saturating_sub(1) {
            for j in 0..n {
                for l in j..n {
                    let s = (&self.mult[i + 1][j] * &self.mult[i][l]).add(&(&self.mult[i + 1][l] * &self.mult[i][j]));
                    if !s.is_zero() {
                        return Err(Error::InvalidAlgebra(format!(
                            "e{}·e{} + e{}·e{} is nonzero on degree {i}",
                            j + 1,
                            l + 1,
                            l + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `b₁`, the number of degree-one generators.
    pub fn n(&self) -> usize {
        self.dims.get(1).copied().unwrap_or(0)
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    /// Matrix of `e_j · : A^i → A^{i+1}`.
    pub fn table(&self, i: usize, j: usize) -> &QMatrix {
        &self.mult[i][j]
    }

    /// The same algebra in the degree-one basis `e'_j = Σ_l g[l][j] e_l`.
    /// Coordinates transform by `a = g a'`.
    pub fn change_basis(&self, g: &QMatrix) -> Result<Self> {
        let n = self.n();
        if g.rows() != n || g.cols() != n || g.rank() != n {
            return Err(Error::Precondition("change of basis must be invertible n×n".into()));
        }
        let combine = |i: usize, j: usize| {
            let mut m = QMatrix::zeros(self.dims[i + 1], self.dims[i]);
            for l in 0..n {
                m = m.add(&self.mult[i][l].scale(&g[(l, j)]));
            }
            m
        };
        // Only A¹ changes basis, so degree-one tables also absorb `g` on the right.
        let higher = (1..self.mult.len())
            .map(|i| (0..n).map(|j| if i == 1 { &combine(1, j) * g } else { combine(i, j) }).collect())
            .collect();
        Self::new(self.dims.clone(), higher)
    }
}

fn unit(b: bool) -> Rational {
    if b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// The differentials `δ^i(a) = Σ_j a_j μ_{i,j}` of the Aomoto complex at a
/// point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AomotoEvaluation {
    pub point: Vec<Rational>,
    pub matrices: Vec<QMatrix>,
}

pub fn aomoto_matrices(alg: &GradedAlgebraPresentation, a: &[Rational]) -> Result<AomotoEvaluation> {
    check_dim(alg.n(), a.len())?;
    let matrices: Vec<QMatrix> = (0..alg.mult.len())
        .map(|i| {
            let mut m = QMatrix::zeros(alg.dims[i + 1], alg.dims[i]);
            for (j, aj) in a.iter().enumerate() {
                if !aj.is_zero() {
                    m = m.add(&alg.mult[i][j].scale(aj));
                }
            }
            m
        })
        .collect();
    for w in matrices.windows(2) {
        if !(&w[1] * &w[0]).is_zero() {
            return Err(Error::InvalidAlgebra("δ∘δ ≠ 0".into()));
        }
    }
    Ok(AomotoEvaluation {
        point: a.to_vec(),
        matrices,
    })
}

fn ranks(ev: &AomotoEvaluation) -> Vec<usize> {
    ev.matrices.iter().map(QMatrix::rank).collect()
}

/// `dim H^i(A, ·a) = c_i − rank δ^{i−1}(a) − rank δ^i(a)` for `i < k`.
pub fn aomoto_betti(alg: &GradedAlgebraPresentation, a: &[Rational], i: usize) -> Result<usize> {
    let k = alg.top_degree();
    if i + 1 > k {
        return Err(Error::DegreeOutOfRange {
            degree: i,
            max: k.saturating_sub(1),
        });
    }
    Ok(cohomology_dims(alg, a)?[i])
}

/// `dim H^i(A, ·a)` for every `0 ≤ i ≤ k`, including the top degree.
pub fn cohomology_dims(alg: &GradedAlgebraPresentation, a: &[Rational]) -> Result<Vec<usize>> {
    let r = ranks(&aomoto_matrices(alg, a)?);
    Ok((0..=alg.top_degree())
        .map(|i| {
            let below = if i == 0 { 0 } else { r[i - 1] };
            let above = r.get(i).copied().unwrap_or(0);
            alg.dims[i] - below - above
        })
        .collect())
}

/// `a ∈ R^i_d(A)`.
pub fn resonance_member(alg: &GradedAlgebraPresentation, a: &[Rational], i: usize, d: usize) -> Result<bool> {
    Ok(aomoto_betti(alg, a, i)? >= d)
}

/// `a ∈ R^i(A)`: some `H^j(A, ·a)` with `j ≤ i` is nonzero.
pub fn resonance_member_upto(alg: &GradedAlgebraPresentation, a: &[Rational], i: usize) -> Result<bool> {
    for j in 0..=i {
        if aomoto_betti(alg, a, j)? > 0 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The universal Aomoto complex: matrices of linear forms in `x₁..x_n`,
/// `d^i = Σ_j x_j μ_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalAomoto {
    n: usize,
    /// `matrices[i][r][c]`, a homogeneous linear form.
    matrices: Vec<Vec<Vec<LaurentPolynomial>>>,
}

impl UniversalAomoto {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn differential(&self, i: usize) -> &[Vec<LaurentPolynomial>] {
        &self.matrices[i]
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    /// Evaluates `d^i` at `a`.
    pub fn evaluate(&self, i: usize, a: &[Rational]) -> Result<QMatrix> {
        check_dim(self.n, a.len())?;
        let m = &self.matrices[i];
        let cols = m.first().map_or(0, Vec::len);
        let mut out = QMatrix::zeros(m.len(), cols);
        for (r, row) in m.iter().enumerate() {
            for (c, p) in row.iter().enumerate() {
                out[(r, c)] = p.eval(a)?;
            }
        }
        Ok(out)
    }

    /// `d^{i+1} ∘ d^i = 0` as an identity of quadratic polynomials.
    pub fn squares_to_zero(&self) -> bool {
        self.matrices.windows(2).all(|w| {
            let (a, b) = (&w[1], &w[0]);
            let inner = b.len();
            let cols = b.first().map_or(0, Vec::len);
            a.iter().all(|row| {
                (0..cols).all(|c| {
                    let mut s = LaurentPolynomial::zero(self.n);
                    for (l, x) in row.iter().enumerate().take(inner) {
                        s = &s + &(x * &b[l][c]);
                    }
                    s.is_zero()
                })
            })
        })
    }
}

pub fn universal_aomoto(alg: &GradedAlgebraPresentation) -> UniversalAomoto {
    let n = alg.n();
    let matrices = alg
        .mult
        .iter()
        .enumerate()
        .map(|(i, tables)| {
            (0..alg.dims[i + 1])
                .map(|r| {
                    (0..alg.dims[i])
                        .map(|c| {
                            LaurentPolynomial::new(
                                n,
                                tables.iter().enumerate().map(|(j, t)| {
                                    let mut e = vec![0; n];
                                    e[j] = 1;
                                    (e, t[(r, c)].clone())
                                }),
                            )
                            .expect("exponents have length n")
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    UniversalAomoto { n, matrices }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    // Lexicographic order.
    let mut out = Vec::new();
    for first in 0..n {
        for mut rest in combinations(n - first - 1, k - 1) {
            for x in rest.iter_mut() {
                *x += first + 1;
            }
            let mut v = vec![first];
            v.extend(rest);
            out.push(v);
        }
    }
    out
}

/// `e_j ∧ · : Λ^i ℚⁿ → Λ^{i+1} ℚⁿ` in the lexicographic monomial bases.
fn wedge_table(n: usize, i: usize, j: usize) -> QMatrix {
    let src = combinations(n, i);
    let dst = combinations(n, i + 1);
    let mut m = QMatrix::zeros(dst.len(), src.len());
    for (c, s) in src.iter().enumerate() {
        if s.contains(&j) {
            continue;
        }
        let mut t = s.clone();
        let pos = t.iter().filter(|&&x| x < j).count();
        t.insert(pos, j);
        let r = dst.iter().position(|d| *d == t).expect("subset present");
        m[(r, c)] = if pos % 2 == 0 { Rational::one() } else { -Rational::one() };
    }
    m
}

/// The exterior algebra `Λ(ℚⁿ)`, the cohomology of the torus `Tⁿ`.
pub fn exterior_algebra(n: usize) -> GradedAlgebraPresentation {
    exterior_truncated(n, n)
}

/// `Λ(ℚⁿ)` with everything above degree `k` removed.
pub fn exterior_truncated(n: usize, k: usize) -> GradedAlgebraPresentation {
    let k = k.min(n);
    let dims = (0..=k).map(|i| combinations(n, i).len()).collect();
    let higher = (1..k).map(|i| (0..n).map(|j| wedge_table(n, i, j)).collect()).collect();
    GradedAlgebraPresentation::new(dims, higher).expect("exterior algebra is valid")
}

/// `Λ(ℚⁿ)` in degrees ≤ 2, with `Λ²` divided by the span of `relations`
/// (vectors in the lexicographic basis `e_i ∧ e_j`, `i < j`).
pub fn exterior_quotient_deg2(n: usize, relations: &[Vec<Rational>]) -> Result<GradedAlgebraPresentation> {
    let pairs = combinations(n, 2).len();
    for r in relations {
        check_dim(pairs, r.len())?;
    }
    // The projection Λ² → A² is the matrix of equations of the relation span.
    let quotient = RationalSubspace::span(pairs, relations)?.equations();
    let q = QMatrix::from_rows(pairs, &quotient);
    let tables = (0..n).map(|j| &q * &wedge_table(n, 1, j)).collect();
    GradedAlgebraPresentation::new(vec![1, n, quotient.len()], vec![tables])
}

/// The cohomology of the closed orientable surface of genus `g`, with basis
/// `a₁, b₁, …, a_g, b_g` and `a_i b_i = ω = −b_i a_i`.
pub fn surface_algebra(g: usize) -> GradedAlgebraPresentation {
    let n = 2 * g;
    if g == 0 {
        return GradedAlgebraPresentation::new(vec![1, 0, 1], vec![vec![]]).expect("sphere");
    }
    let tables = (0..n)
        .map(|j| {
            QMatrix::from_fn(1, n, |_, l| {
                if j % 2 == 0 && l == j + 1 {
                    Rational::one()
                } else if j % 2 == 1 && l + 1 == j {
                    -Rational::one()
                } else {
                    Rational::zero()
                }
            })
        })
        .collect();
    GradedAlgebraPresentation::new(vec![1, n, 1], vec![tables]).expect("symplectic form is alternating")
}

/// `c₁ = n`, `c₂ = m` and all products of degree-one classes zero.
pub fn zero_multiplication(n: usize, m: usize) -> GradedAlgebraPresentation {
    GradedAlgebraPresentation::new(vec![1, n, m], vec![vec![QMatrix::zeros(m, n); n]]).expect("zero tables")
}

/// `ℚ` in degrees 0 to 3 with one generator `x` in degree one, `x·x = 0` and
/// `x` acting from degree 2 to 3 by the scalar `f′(1)`.
pub fn s1s2_algebra(fprime1: &Rational) -> GradedAlgebraPresentation {
    let one = |c: Rational| QMatrix::from_fn(1, 1, |_, _| c.clone());
    GradedAlgebraPresentation::new(
        vec![1, 1, 1, 1],
        vec![vec![one(Rational::zero())], vec![one(fprime1.clone())]],
    )
    .expect("x² = 0")
}

/// The graded tensor product, the cohomology of a product space. Degree-one
/// generators are those of `a` followed by those of `b`.
pub fn tensor_product(a: &GradedAlgebraPresentation, b: &GradedAlgebraPresentation) -> GradedAlgebraPresentation {
    let (ka, kb) = (a.top_degree(), b.top_degree());
    let k = ka + kb;
    // Basis of degree m: (p, x, y) with x ∈ A^p, y ∈ B^{m−p}, p decreasing so
    // that degree one lists the generators of `a` first.
    let basis = |m: usize| -> Vec<(usize, usize, usize)> {
        let mut v = Vec::new();
        for p in (m.saturating_sub(kb)..=m.min(ka)).rev() {
            for x in 0..a.dims[p] {
                for y in 0..b.dims[m - p] {
                    v.push((p, x, y));
                }
            }
        }
        v
    };
    let dims: Vec<usize> = (0..=k).map(|m| basis(m).len()).collect();
    let (na, nb) = (a.n(), b.n());
    let higher = (1..k)
        .map(|m| {
            let src = basis(m);
            let dst = basis(m + 1);
            let index = |t: (usize, usize, usize)| dst.iter().position(|&d| d == t).expect("basis element");
            (0..na + nb)
                .map(|g| {
                    let mut t = QMatrix::zeros(dst.len(), src.len());
                    for (c, &(p, x, y)) in src.iter().enumerate() {
                        if g < na {
                            if p < ka {
                                let mm = &a.mult[p][g];
                                for r in 0..mm.rows() {
                                    if !mm[(r, x)].is_zero() {
                                        t[(index((p + 1, r, y)), c)] += mm[(r, x)].clone();
                                    }
                                }
                            }
                        } else if m - p < kb {
                            let mm = &b.mult[m - p][g - na];
                            let sign = if p % 2 == 0 { Rational::one() } else { -Rational::one() };
                            for r in 0..mm.rows() {
                                if !mm[(r, y)].is_zero() {
                                    t[(index((p, x, r)), c)] += &sign * &mm[(r, y)];
                                }
                            }
                        }
                    }
                    t
                })
                .collect()
        })
        .collect();
    GradedAlgebraPresentation::new(dims, higher).expect("tensor product of valid algebras")
}

/// The cohomology of a wedge: `A^i ⊕ B^i` in positive degrees, with all
/// products between the two summands zero. Generators of `a` come first.
pub fn wedge_sum(a: &GradedAlgebraPresentation, b: &GradedAlgebraPresentation) -> GradedAlgebraPresentation {
    let k = a.top_degree().max(b.top_degree());
    let da = |i: usize| a.dims.get(i).copied().unwrap_or(0);
    let db = |i: usize| b.dims.get(i).copied().unwrap_or(0);
    let dims: Vec<usize> = (0..=k).map(|i| if i == 0 { 1 } else { da(i) + db(i) }).collect();
    let (na, nb) = (a.n(), b.n());
    let higher = (1..k)
        .map(|i| {
            (0..na + nb)
                .map(|g| {
                    let mut t = QMatrix::zeros(dims[i + 1], dims[i]);
                    let (src, row0, col0, gen) = if g < na { (a, 0, 0, g) } else { (b, da(i + 1), da(i), g - na) };
                    if let Some(m) = src.mult.get(i).and_then(|tables| tables.get(gen)) {
                        for r in 0..m.rows() {
                            for c in 0..m.cols() {
                                t[(row0 + r, col0 + c)] = m[(r, c)].clone();
                            }
                        }
                    }
                    t
                })
                .collect()
        })
        .collect();
    GradedAlgebraPresentation::new(dims, higher).expect("wedge of valid algebras")
}

/// `R¹` and `R²` of the algebra [`s1s2_algebra`], as subsets of `ℚ¹`.
pub fn s1s2_resonance(fprime1: &Rational) -> (SubspaceArrangement, SubspaceArrangement) {
    let r2 = if fprime1.is_zero() {
        SubspaceArrangement::full(1)
    } else {
        SubspaceArrangement::origin(1)
    };
    (SubspaceArrangement::origin(1), r2)
}

/// `R^i_1(X₁ × X₂) = ⋃_{p+q=i} R^p_1(X₁) × R^q_1(X₂)`, where `r1[p]` and
/// `r2[q]` are the depth-one loci of the factors; degrees past the end of a
/// list are taken to be empty.
pub fn product_resonance(
    r1: &[SubspaceArrangement],
    r2: &[SubspaceArrangement],
    i: usize,
) -> Result<SubspaceArrangement> {
    let n1 = ambient(r1)?;
    let n2 = ambient(r2)?;
    let mut acc = SubspaceArrangement::empty(n1 + n2);
    for p in 0..=i {
        if let (Some(a), Some(b)) = (r1.get(p), r2.get(i - p)) {
            acc = acc.union(&a.product(b))?;
        }
    }
    Ok(acc)
}

fn ambient(list: &[SubspaceArrangement]) -> Result<usize> {
    let n = list
        .first()
        .ok_or_else(|| Error::Precondition("resonance list is empty".into()))?
        .ambient_dim();
    for a in list {
        check_dim(n, a.ambient_dim())?;
    }
    Ok(n)
}

/// `R^i(X₁ ∨ X₂)` for `i ≥ 1` is all of `H¹` when both first Betti numbers
/// are positive; `R⁰` is the origin.
pub fn wedge_resonance(n1: usize, n2: usize, i: usize) -> Result<SubspaceArrangement> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::HypothesisViolated(
            "both wedge summands need positive first Betti number".into(),
        ));
    }
    Ok(if i == 0 {
        SubspaceArrangement::origin(n1 + n2)
    } else {
        SubspaceArrangement::full(n1 + n2)
    })
}

/// Exterior algebra on `a₁,a₂,a₃,b₁,b₂,b₃` modulo `(a_i − a_j)(b_i − b_j)`,
/// the cohomology ring of the configuration space of three points on a
/// torus, in degrees ≤ 2.
pub fn torus_configuration_algebra() -> GradedAlgebraPresentation {
    let n = 6;
    let pairs = combinations(n, 2);
    let idx = |i: usize, j: usize| -> (usize, Rational) {
        let (lo, hi, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
        (pairs.iter().position(|p| *p == vec![lo, hi]).expect("pair"), Rational::from_integer(s.into()))
    };
    let relation = |i: usize, j: usize| {
        // (a_i − a_j)(b_i − b_j) with a_k = e_k and b_k = e_{k+3}.
        let mut v = vec![Rational::zero(); pairs.len()];
        for (x, sx) in [(i, 1), (j, -1)] {
            for (y, sy) in [(i + 3, 1), (j + 3, -1)] {
                let (p, s) = idx(x, y);
                v[p] += s * Rational::from_integer((sx * sy).into());
            }
        }
        v
    };
    exterior_quotient_deg2(n, &[relation(0, 1), relation(0, 2), relation(1, 2)]).expect("valid relations")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::{int, qvec};

    #[test]
    fn exterior_two_at_e1() {
        let alg = exterior_algebra(2);
        let ev = aomoto_matrices(&alg, &qvec(&[1, 0])).unwrap();
        assert_eq!(ev.matrices[0], QMatrix::from_rows(1, &[qvec(&[1]), qvec(&[0])]));
        assert_eq!(ev.matrices[1].rank(), 1);
    }

    #[test]
    fn zero_point_gives_zero_maps() {
        let alg = exterior_algebra(3);
        let ev = aomoto_matrices(&alg, &qvec(&[0, 0, 0])).unwrap();
        assert!(ev.matrices.iter().all(QMatrix::is_zero));
    }

    #[test]
    fn genus_two_surface() {
        let alg = surface_algebra(2);
        let a = qvec(&[1, 0, 0, 0]);
        let ev = aomoto_matrices(&alg, &a).unwrap();
        assert_eq!(ev.matrices[1].rank(), 1);
        assert_eq!(aomoto_betti(&alg, &a, 1).unwrap(), 2);
        assert!(!resonance_member(&alg, &a, 1, 3).unwrap());
        assert!(resonance_member(&alg, &a, 1, 2).unwrap());
    }

    #[test]
    fn torus_koszul_is_exact() {
        let alg = exterior_algebra(3);
        for i in 0..3 {
            assert_eq!(aomoto_betti(&alg, &qvec(&[1, 2, -1]), i).unwrap(), 0);
        }
        assert!(aomoto_betti(&alg, &qvec(&[1, 2, -1]), 3).is_err());
    }

    #[test]
    fn configuration_space_quadric() {
        let alg = torus_configuration_algebra();
        assert_eq!(alg.dims(), &[1, 6, 12]);
        assert!(aomoto_betti(&alg, &qvec(&[1, -1, 0, 1, -1, 0]), 1).unwrap() >= 1);
        assert_eq!(aomoto_betti(&alg, &qvec(&[1, 2, 3, 5, 7, 11]), 1).unwrap(), 0);
    }

    #[test]
    fn zero_point_is_in_degree_zero_resonance() {
        let alg = surface_algebra(1);
        assert!(resonance_member(&alg, &qvec(&[0, 0]), 0, 1).unwrap());
        assert!(!resonance_member(&alg, &qvec(&[1, 0]), 0, 1).unwrap());
    }

    #[test]
    fn one_generator_has_no_resonance() {
        let alg = zero_multiplication(1, 0);
        assert!(!resonance_member(&alg, &qvec(&[3]), 1, 1).unwrap());
    }

    #[test]
    fn universal_examples() {
        let u = universal_aomoto(&exterior_algebra(3));
        assert!(u.squares_to_zero());
        // d⁰ = (x₁, x₂, x₃)ᵀ.
        assert_eq!(u.differential(0)[1][0], LaurentPolynomial::var(3, 1));

        let s = universal_aomoto(&s1s2_algebra(&int(2)));
        assert_eq!(s.differential(0)[0][0], LaurentPolynomial::var(1, 0));
        assert!(s.differential(1)[0][0].is_zero());
        assert_eq!(s.differential(2)[0][0], LaurentPolynomial::var(1, 0).scale(&int(2)));

        let z = universal_aomoto(&zero_multiplication(2, 1));
        assert!(z.differential(1).iter().flatten().all(LaurentPolynomial::is_zero));
    }

    #[test]
    fn s1s2_matches_oracle() {
        for f in [0, 1, 2] {
            let (r1, r2) = s1s2_resonance(&int(f));
            let alg = s1s2_algebra(&int(f));
            assert!(r1.is_origin_only());
            assert!(!resonance_member(&alg, &qvec(&[1]), 1, 1).unwrap());
            assert_eq!(resonance_member(&alg, &qvec(&[1]), 2, 1).unwrap(), r2.components()[0].is_full());
        }
    }

    #[test]
    fn invalid_algebra_rejected() {
        // e₁e₂ = e₂e₁ = ω violates anticommutativity.
        let t1 = QMatrix::from_rows(2, &[qvec(&[0, 1])]);
        let t2 = QMatrix::from_rows(2, &[qvec(&[1, 0])]);
        assert!(matches!(
            GradedAlgebraPresentation::new(vec![1, 2, 1], vec![vec![t1, t2]]),
            Err(Error::InvalidAlgebra(_))
        ));
    }

    #[test]
    fn product_of_surfaces() {
        let g = surface_algebra(2);
        let prod = tensor_product(&g, &g);
        assert_eq!(prod.dims(), &[1, 8, 1 + 16 + 1, 4 + 4, 1]);
        let r = vec![
            SubspaceArrangement::origin(4),
            SubspaceArrangement::full(4),
            SubspaceArrangement::origin(4),
        ];
        let r1 = product_resonance(&r, &r, 1).unwrap();
        assert_eq!(r1.len(), 2);
        assert_eq!(product_resonance(&r, &r, 2).unwrap(), SubspaceArrangement::full(8));
        for (pt, i) in [
            ([1, 2, 0, 0, 0, 0, 0, 0], 1),
            ([0, 0, 0, 0, 1, 0, 3, 0], 1),
            ([1, 0, 0, 0, 1, 0, 0, 0], 1),
            ([1, 0, 0, 0, 1, 0, 0, 0], 2),
            ([1, 0, 0, 0, 1, 0, 0, 0], 3),
        ] {
            let a = qvec(&pt);
            let expected = product_resonance(&r, &r, i).unwrap().contains_vector(&a).unwrap();
            assert_eq!(resonance_member(&prod, &a, i, 1).unwrap(), expected, "{pt:?} in degree {i}");
        }
    }

    #[test]
    fn wedge_of_surfaces_is_resonant() {
        let w = wedge_sum(&surface_algebra(1), &exterior_algebra(3));
        assert_eq!(w.dims(), &[1, 5, 4, 1]);
        assert!(resonance_member(&w, &qvec(&[1, 2, 3, -1, 2]), 1, 1).unwrap());
        assert!(resonance_member(&w, &qvec(&[0, 0, 3, -1, 2]), 1, 1).unwrap());
    }

    #[test]
    fn wedge_needs_positive_betti() {
        assert!(wedge_resonance(0, 2, 1).is_err());
        assert_eq!(wedge_resonance(2, 3, 1).unwrap(), SubspaceArrangement::full(5));
    }
}
