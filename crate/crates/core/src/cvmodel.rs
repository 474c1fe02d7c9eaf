//! Characteristic varieties presented as finite unions of torsion-translated
//! subtori, together with straightness checks and Dwyer–Fried membership.

use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::laurent::{LinkCv, UniPoly};
use crate::qlinalg::{
    coset_in_subspace_mod_lattice, meets_nontrivially, zero_vec, Rational, RationalSubspace,
    SubspaceArrangement,
};

/// `ρ · exp(L ⊗ ℂ)` with `ρ = exp(2πi q)`. The translation is stored
/// reduced into `[0, 1)ⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TranslatedTorus {
    direction: RationalSubspace,
    q: Vec<Rational>,
}

fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

impl TranslatedTorus {
    pub fn new(direction: RationalSubspace, q: Vec<Rational>) -> Result<Self> {
        check_dim(direction.ambient_dim(), q.len())?;
        let q = q.iter().map(frac).collect();
        Ok(TranslatedTorus { direction, q })
    }

    /// The subtorus `exp(L ⊗ ℂ)` itself.
    pub fn subtorus(direction: RationalSubspace) -> Self {
        let n = direction.ambient_dim();
        TranslatedTorus {
            direction,
            q: zero_vec(n),
        }
    }

    /// The single torsion point `exp(2πi q)`.
    pub fn point(q: Vec<Rational>) -> Self {
        let n = q.len();
        TranslatedTorus {
            direction: RationalSubspace::zero(n),
            q: q.iter().map(frac).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.direction.ambient_dim()
    }

    pub fn direction(&self) -> &RationalSubspace {
        &self.direction
    }

    pub fn translation(&self) -> &[Rational] {
        &self.q
    }

    pub fn dim(&self) -> usize {
        self.direction.dim()
    }
}

/// Whether the component contains the trivial character, i.e. `q ∈ L + ℤⁿ`.
pub fn passes_through_origin(c: &TranslatedTorus) -> bool {
    coset_in_subspace_mod_lattice(&c.q, &c.direction).expect("dimensions agree by construction")
}

/// One characteristic variety `W^i ⊂ (ℂ^×)ⁿ`, taken as given: the
/// components are trusted to be the irreducible decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CvModel {
    n: usize,
    components: Vec<TranslatedTorus>,
    isolated: Vec<Vec<Rational>>,
}

impl CvModel {
    pub fn new(n: usize, components: Vec<TranslatedTorus>, isolated: Vec<Vec<Rational>>) -> Result<Self> {
        for c in &components {
            check_dim(n, c.ambient_dim())?;
        }
        for p in &isolated {
            check_dim(n, p.len())?;
        }
        let isolated = isolated.into_iter().map(|p| p.iter().map(frac).collect()).collect();
        Ok(CvModel {
            n,
            components,
            isolated,
        })
    }

    /// `W = {1}`.
    pub fn trivial(n: usize) -> Self {
        CvModel {
            n,
            components: Vec::new(),
            isolated: vec![zero_vec(n)],
        }
    }

    /// `W = (ℂ^×)ⁿ`.
    pub fn full_torus(n: usize) -> Self {
        CvModel {
            n,
            components: vec![TranslatedTorus::subtorus(RationalSubspace::full(n))],
            isolated: Vec::new(),
        }
    }

    /// The zero set in `ℂ^×` of a one-variable polynomial whose roots are
    /// roots of unity. The zero polynomial gives all of `ℂ^×`.
    pub fn from_univariate(p: &UniPoly) -> Result<Self> {
        if p.is_zero() {
            return Ok(CvModel::full_torus(1));
        }
        let f = crate::laurent::univariate::factor_cyclotomic(p)?;
        if !f.is_fully_cyclotomic() {
            return Err(Error::HypothesisViolated(format!(
                "factor {} has roots that are not roots of unity of order ≤ 42",
                f.residual.to_laurent()
            )));
        }
        Ok(CvModel {
            n: 1,
            components: Vec::new(),
            isolated: f.root_angles().into_iter().map(|q| vec![q]).collect(),
        })
    }

    /// `W¹ = V(Δ) ∪ {1}` for a knot, or `{1}`/the full torus when `Δ` is a
    /// nonzero constant/zero. Links with several components are only
    /// accepted in those two degenerate cases.
    pub fn from_link(link: &LinkCv) -> Result<Self> {
        let n = link.n();
        let delta = link.delta();
        if delta.is_zero() {
            return Ok(CvModel::full_torus(n));
        }
        if delta.is_constant() {
            return Ok(CvModel::trivial(n));
        }
        if n != 1 {
            return Err(Error::HypothesisViolated(
                "a hypersurface in several variables is not a union of translated subtori here".into(),
            ));
        }
        let mut m = CvModel::from_univariate(&UniPoly::from_laurent(delta)?)?;
        if !m.isolated.iter().any(|p| p[0].is_zero()) {
            m.isolated.insert(0, zero_vec(1));
        }
        Ok(m)
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[TranslatedTorus] {
        &self.components
    }

    pub fn isolated(&self) -> &[Vec<Rational>] {
        &self.isolated
    }

    /// Components of positive dimension.
    pub fn positive_dimensional(&self) -> impl Iterator<Item = &TranslatedTorus> {
        self.components.iter().filter(|c| c.dim() > 0)
    }
}

/// `τ₁(W)`: directions of the components through `1`, together with the
/// origin (the trivial character is always in `W^i`).
pub fn model_tau1(m: &CvModel) -> SubspaceArrangement {
    let dirs = m
        .components
        .iter()
        .filter(|c| passes_through_origin(c))
        .map(|c| c.direction.clone())
        .chain(std::iter::once(RationalSubspace::zero(m.n)))
        .collect();
    SubspaceArrangement::new(m.n, dirs).expect("same ambient")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StraightnessCondition {
    /// Components through `1` are subtori.
    A,
    /// `TC₁(W^i) = R^i`.
    B,
    /// Components missing `1` are points.
    C,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraightnessReport {
    pub locally_straight: bool,
    pub straight: bool,
    /// The first violated condition and its degree. Failures of (a) or (b)
    /// are reported ahead of failures of (c).
    pub failure: Option<(StraightnessCondition, usize)>,
}

/// Checks conditions (a)–(c) in degrees `1..=k`, with `models[i − 1]` and
/// `res[i − 1]` describing `W^i` and `R^i`.
///
/// In the model format a component through `1` is `exp(L ⊗ ℂ)` after
/// absorbing the integral part of `q`, so (a) holds by construction; then
/// `TC₁ = τ₁` and (b) compares [`model_tau1`] with `R^i` (both taken with
/// the origin adjoined).
pub fn classify_straightness(models: &[CvModel], res: &[SubspaceArrangement]) -> Result<StraightnessReport> {
    if models.len() != res.len() {
        return Err(Error::DimensionMismatch {
            expected: models.len(),
            found: res.len(),
        });
    }
    let mut first_ab = None;
    let mut first_c = None;
    for (idx, (m, r)) in models.iter().zip(res).enumerate() {
        let degree = idx + 1;
        check_dim(m.n, r.ambient_dim())?;
        let r = r.union(&SubspaceArrangement::origin(m.n))?;
        if first_ab.is_none() && model_tau1(m) != r {
            first_ab = Some((StraightnessCondition::B, degree));
        }
        if first_c.is_none() && m.positive_dimensional().any(|c| !passes_through_origin(c)) {
            first_c = Some((StraightnessCondition::C, degree));
        }
    }
    Ok(StraightnessReport {
        locally_straight: first_ab.is_none(),
        straight: first_ab.is_none() && first_c.is_none(),
        failure: first_ab.or(first_c),
    })
}

/// `P ∈ Ω^i_r`: `exp(P ⊗ ℂ)` meets `W^i` in finitely many points.
///
/// Against `ρ exp(L ⊗ ℂ)` the intersection is empty or a coset of
/// `exp((P ∩ L) ⊗ ℂ)`, and it is nonempty exactly when `q ∈ P + L + ℤⁿ`.
pub fn omega_member(m: &CvModel, p: &RationalSubspace) -> Result<bool> {
    check_dim(m.n, p.ambient_dim())?;
    if p.dim() == 0 {
        return Err(Error::Precondition("Ω is defined for subspaces of dimension r ≥ 1".into()));
    }
    for c in m.positive_dimensional() {
        if p.intersect(&c.direction)?.dim() >= 1 && coset_in_subspace_mod_lattice(&c.q, &p.sum(&c.direction)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Codimension of `σ_r(L)` in `Grass_r(ℚⁿ)`, namely `codim L − r + 1`,
/// clamped at `0` (then σ_r(L) is everything).
pub fn schubert_codim(l: &RationalSubspace, r: usize) -> Result<usize> {
    if l.is_full() {
        return Err(Error::Precondition("σ_r of the full space is not a proper Schubert variety".into()));
    }
    Ok((l.codim() + 1).saturating_sub(r))
}

/// `P ∈ σ_r(arr)`: `P` meets some component in a nonzero vector.
pub fn sigma_member(arr: &SubspaceArrangement, p: &RationalSubspace) -> Result<bool> {
    meets_nontrivially(p, arr)
}

fn minors2(rows: &[Vec<Rational>]) -> Result<[Rational; 6]> {
    if rows.len() != 2 || rows.iter().any(|r| r.len() != 4) {
        return Err(Error::Precondition("need a 2-dimensional subspace of ℚ⁴".into()));
    }
    let m = |i: usize, j: usize| &rows[0][i] * &rows[1][j] - &rows[0][j] * &rows[1][i];
    let mut p = [m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3)];
    let lead = p.iter().find(|x| !x.is_zero()).cloned().expect("rows are independent");
    for x in p.iter_mut() {
        *x /= &lead;
    }
    Ok(p)
}

/// Plücker coordinates `(p₁₂, p₁₃, p₁₄, p₂₃, p₂₄, p₃₄)` of a plane in ℚ⁴
/// from a basis, scaled so the first nonzero entry is `1`.
pub fn plucker2(p: &RationalSubspace) -> Result<[Rational; 6]> {
    check_dim(4, p.ambient_dim())?;
    minors2(p.basis())
}

/// Plücker coordinates of a plane in ℚ⁴ computed from its two defining
/// equations, i.e. those of the annihilator. Up to scale,
/// `(q₁₂, q₁₃, q₁₄, q₂₃, q₂₄, q₃₄) = (p₃₄, −p₂₄, p₂₃, p₁₄, −p₁₃, p₁₂)`.
pub fn plucker2_dual(p: &RationalSubspace) -> Result<[Rational; 6]> {
    check_dim(4, p.ambient_dim())?;
    minors2(&p.equations())
}

/// Upper bound `Ω^i_r ⊆ Grass_r ∖ σ_r(R^i)` for locally straight spaces.
pub fn omega_upper_bound(res: &SubspaceArrangement, p: &RationalSubspace) -> Result<bool> {
    Ok(!sigma_member(res, p)?)
}

/// `Ω^i_r = Grass_r ∖ σ_r(R^i)`, valid for straight spaces.
pub fn omega_exact_straight(res: &SubspaceArrangement, p: &RationalSubspace) -> Result<bool> {
    omega_upper_bound(res, p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictnessWitness {
    pub lambda: Vec<i64>,
    pub plane: RationalSubspace,
}

/// Integer vectors with `max |λ_i| = b`, lexicographic with coordinates
/// ordered `0, 1, −1, 2, −2, …`.
fn shell(n: usize, b: i64) -> Vec<Vec<i64>> {
    let values: Vec<i64> = std::iter::once(0).chain((1..=b).flat_map(|k| [k, -k])).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                values.iter().map(move |&x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|x| x.abs() == b));
    out
}

/// For a one-dimensional component `ρ exp(ℓ ⊗ ℂ)` missing `1` and a
/// resonance arrangement with every component of codimension ≥ 2, finds the
/// first `λ ∈ ℤⁿ` (by box radius, then [`shell`] order) such that
/// `P₀ = span(ℓ, q + λ)` is a plane meeting `R` only at `0`. Such a `P₀`
/// lies outside `σ₂(R)` but not in `Ω`.
pub fn strictness_witness(c: &TranslatedTorus, res: &SubspaceArrangement, bound: u32) -> Result<StrictnessWitness> {
    let n = c.ambient_dim();
    check_dim(n, res.ambient_dim())?;
    if c.dim() != 1 {
        return Err(Error::HypothesisViolated("component must be one-dimensional".into()));
    }
    if passes_through_origin(c) {
        return Err(Error::HypothesisViolated("component passes through the origin".into()));
    }
    if res.components().iter().any(|l| l.codim() < 2) {
        return Err(Error::HypothesisViolated("resonance has a component of codimension < 2".into()));
    }
    let ell = c.direction.basis()[0].clone();
    for b in 0..=i64::from(bound) {
        for lambda in shell(n, b) {
            let v: Vec<Rational> = c.q.iter().zip(&lambda).map(|(x, &l)| x + Rational::from_integer(l.into())).collect();
            let plane = RationalSubspace::span(n, &[ell.clone(), v])?;
            if plane.dim() == 2 && !sigma_member(res, &plane)? {
                return Ok(StrictnessWitness { lambda, plane });
            }
        }
    }
    Err(Error::SearchExhausted { bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::{int, qvec, rat, unit_vec};

    fn line(n: usize, v: &[i64]) -> RationalSubspace {
        RationalSubspace::span(n, &[qvec(v)]).unwrap()
    }

    /// `W¹ = {1} ∪ {t₁ = −1}` in `(ℂ^×)²`.
    fn straight_c() -> CvModel {
        let c = TranslatedTorus::new(line(2, &[0, 1]), vec![rat(1, 2), int(0)]).unwrap();
        CvModel::new(2, vec![c], vec![qvec(&[0, 0])]).unwrap()
    }

    #[test]
    fn translations_are_reduced() {
        let c = TranslatedTorus::new(line(2, &[0, 1]), vec![rat(-1, 2), rat(7, 3)]).unwrap();
        assert_eq!(c.translation(), &[rat(1, 2), rat(1, 3)]);
    }

    #[test]
    fn origin_test() {
        assert!(passes_through_origin(&TranslatedTorus::subtorus(line(2, &[1, 1]))));
        assert!(!passes_through_origin(&straight_c().components()[0]));
        let integral = TranslatedTorus::new(line(2, &[0, 1]), qvec(&[1, 0])).unwrap();
        assert!(passes_through_origin(&integral));
        // q on the direction line up to integers.
        let on_line = TranslatedTorus::new(line(2, &[1, 1]), vec![rat(1, 3), rat(1, 3)]).unwrap();
        assert!(passes_through_origin(&on_line));
    }

    #[test]
    fn tau1_of_models() {
        assert!(model_tau1(&CvModel::trivial(3)).is_origin_only());
        assert!(model_tau1(&straight_c()).is_origin_only());
        let l = line(3, &[1, 2, 0]);
        let m = CvModel::new(3, vec![TranslatedTorus::subtorus(l.clone())], vec![]).unwrap();
        assert_eq!(model_tau1(&m), SubspaceArrangement::single(l));
    }

    #[test]
    fn classification_examples() {
        let r = classify_straightness(&[straight_c()], &[SubspaceArrangement::origin(2)]).unwrap();
        assert!(r.locally_straight && !r.straight);
        assert_eq!(r.failure, Some((StraightnessCondition::C, 1)));

        let heis = classify_straightness(&[CvModel::trivial(2)], &[SubspaceArrangement::full(2)]).unwrap();
        assert!(!heis.locally_straight);
        assert_eq!(heis.failure, Some((StraightnessCondition::B, 1)));

        let full = classify_straightness(&[CvModel::full_torus(3)], &[SubspaceArrangement::full(3)]).unwrap();
        assert!(full.straight);
        assert_eq!(full.failure, None);
    }

    #[test]
    fn omega_examples() {
        let full = RationalSubspace::full(2);
        assert!(!omega_member(&straight_c(), &full).unwrap());
        assert!(omega_upper_bound(&SubspaceArrangement::origin(2), &full).unwrap());
        assert!(omega_member(&CvModel::trivial(2), &full).unwrap());
        // A line transverse to the direction misses the translated component.
        assert!(omega_member(&straight_c(), &line(2, &[1, 0])).unwrap());
        // The direction line itself meets it only when q ∈ ℓ + ℤ².
        assert!(omega_member(&straight_c(), &line(2, &[0, 1])).unwrap());
        assert!(omega_member(&straight_c(), &RationalSubspace::zero(2)).is_err());
    }

    #[test]
    fn schubert_and_plucker() {
        let l = RationalSubspace::from_equations(4, &[qvec(&[1, 1, 1, 0]), qvec(&[0, 0, 0, 1])]).unwrap();
        assert_eq!(schubert_codim(&l, 2).unwrap(), 1);
        assert_eq!(schubert_codim(&l, 3).unwrap(), 0);
        assert!(schubert_codim(&RationalSubspace::full(4), 1).is_err());

        let p = RationalSubspace::span(4, &[qvec(&[1, 0, 2, 0]), qvec(&[0, 1, 0, 3])]).unwrap();
        let c = plucker2(&p).unwrap();
        assert_eq!(c[0].clone() * &c[5] - &c[1] * &c[4] + &c[3] * &c[2], int(0));
        let d = plucker2_dual(&p).unwrap();
        // Complementary minors agree up to one common scale.
        let ratio = &c[5] / &d[0];
        let expected = [&c[5], &-c[4].clone(), &c[3], &c[2], &-c[1].clone(), &c[0]];
        for (x, y) in d.iter().zip(expected) {
            assert_eq!(x * &ratio, y.clone());
        }
    }

    #[test]
    fn witness_examples() {
        let c = straight_c().components()[0].clone();
        let w = strictness_witness(&c, &SubspaceArrangement::origin(2), 3).unwrap();
        assert_eq!(w.lambda, vec![0, 0]);
        assert!(w.plane.is_full());

        let c3 = TranslatedTorus::new(line(3, &[0, 0, 1]), vec![rat(1, 2), int(0), int(0)]).unwrap();
        let r = SubspaceArrangement::single(line(3, &[1, 0, 0]));
        let w = strictness_witness(&c3, &r, 3).unwrap();
        assert_eq!(w.lambda, vec![0, 1, 0]);
        let expected = RationalSubspace::span(3, &[unit_vec(3, 2), vec![rat(1, 2), int(1), int(0)]]).unwrap();
        assert_eq!(w.plane, expected);

        let hyper = SubspaceArrangement::single(RationalSubspace::from_equations(3, &[qvec(&[1, 0, 0])]).unwrap());
        assert!(matches!(strictness_witness(&c3, &hyper, 3), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn exhausted_search_is_distinct() {
        // Every plane through ℓ meets a line of R once the box is too small.
        let c = TranslatedTorus::new(line(3, &[0, 0, 1]), vec![rat(1, 2), int(0), int(0)]).unwrap();
        let r = SubspaceArrangement::new(3, vec![line(3, &[1, 0, 0]), line(3, &[1, 2, 0]), line(3, &[1, -2, 0])]).unwrap();
        assert_eq!(strictness_witness(&c, &r, 0), Err(Error::SearchExhausted { bound: 0 }));
        assert!(strictness_witness(&c, &r, 1).is_ok());
    }

    #[test]
    fn univariate_models() {
        let m = CvModel::from_univariate(&UniPoly::from_ints(&[-1, 0, 1])).unwrap();
        assert_eq!(m.isolated(), &[qvec(&[0]), vec![rat(1, 2)]]);
        assert!(CvModel::from_univariate(&UniPoly::from_ints(&[1, -3, 1])).is_err());
        let trefoil = crate::laurent::link_cv1(&UniPoly::from_ints(&[1, -1, 1]).to_laurent());
        let m = CvModel::from_link(&trefoil).unwrap();
        assert_eq!(m.isolated(), &[qvec(&[0]), vec![rat(1, 6)], vec![rat(5, 6)]]);
        assert!(omega_member(&m, &RationalSubspace::full(1)).unwrap());
    }
}
