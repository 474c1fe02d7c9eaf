use num_traits::Zero;

use super::univariate::{factor_cyclotomic, CyclotomicFactorization, UniPoly};
use super::LaurentPolynomial;
use crate::error::{check_dim, Error, Result};
use crate::qlinalg::{Rational, RationalSubspace, SubspaceArrangement};

/// Largest support for which partitions are enumerated.
pub const SUPPORT_LIMIT: usize = 10;

/// A partition of the support of `f` into blocks whose coefficients sum to
/// zero. Blocks hold exponent vectors; both levels are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdmissiblePartition {
    blocks: Vec<Vec<Vec<i64>>>,
}

impl AdmissiblePartition {
    pub fn blocks(&self) -> &[Vec<Vec<i64>>] {
        &self.blocks
    }

    /// `L(p)`: the `x` with `(a − b)·x = 0` whenever `a, b` share a block.
    pub fn subspace(&self, n: usize) -> RationalSubspace {
        let mut eqs = Vec::new();
        for block in &self.blocks {
            let base = &block[0];
            for a in &block[1..] {
                eqs.push(
                    a.iter()
                        .zip(base)
                        .map(|(x, y)| Rational::from_integer((x - y).into()))
                        .collect(),
                );
            }
        }
        RationalSubspace::from_equations(n, &eqs).expect("exponents have n entries")
    }
}

/// Sums of coefficients over every subset of the support, indexed by mask.
fn subset_sums(coeffs: &[Rational]) -> Vec<Rational> {
    let mut sums = vec![Rational::zero(); 1 << coeffs.len()];
    for m in 1usize..sums.len() {
        let low = m.trailing_zeros() as usize;
        sums[m] = &sums[m & (m - 1)] + &coeffs[low];
    }
    sums
}

fn enumerate(
    remaining: usize,
    blocks: &mut Vec<usize>,
    ok: &dyn Fn(usize) -> bool,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        out.push(blocks.clone());
        return;
    }
    let low = remaining & remaining.wrapping_neg();
    let rest = remaining & !low;
    // Submasks of `rest`, each joined with the lowest remaining element.
    let mut sub = rest;
    loop {
        let block = sub | low;
        if ok(block) {
            blocks.push(block);
            enumerate(remaining & !block, blocks, ok, out);
            blocks.pop();
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
}

fn partitions_with(f: &LaurentPolynomial, minimal_only: bool) -> Result<Vec<AdmissiblePartition>> {
    let support = f.support();
    let s = support.len();
    if s > SUPPORT_LIMIT {
        return Err(Error::SupportTooLarge { size: s, limit: SUPPORT_LIMIT });
    }
    if s == 0 || !f.value_at_one().is_zero() {
        return Ok(Vec::new());
    }
    let coeffs: Vec<Rational> = support.iter().map(|e| f.coeff(e)).collect();
    let sums = subset_sums(&coeffs);
    let zero = |m: usize| sums[m].is_zero();
    // A block is minimal when no proper nonempty part of it sums to zero.
    let minimal = |m: usize| {
        if !zero(m) {
            return false;
        }
        let mut sub = (m - 1) & m;
        while sub != 0 {
            if zero(sub) {
                return false;
            }
            sub = (sub - 1) & m;
        }
        true
    };
    let mut raw = Vec::new();
    let full = (1usize << s) - 1;
    if minimal_only {
        enumerate(full, &mut Vec::new(), &minimal, &mut raw);
    } else {
        enumerate(full, &mut Vec::new(), &zero, &mut raw);
    }
    Ok(raw
        .into_iter()
        .map(|blocks| AdmissiblePartition {
            blocks: blocks
                .into_iter()
                .map(|b| (0..s).filter(|i| b >> i & 1 == 1).map(|i| support[i].clone()).collect())
                .collect(),
        })
        .collect())
}

/// All admissible partitions of the support of `f`.
///
/// Empty when `f(1) ≠ 0`. Errors on the zero polynomial and on supports
/// larger than [`SUPPORT_LIMIT`].
pub fn admissible_partitions(f: &LaurentPolynomial) -> Result<Vec<AdmissiblePartition>> {
    if f.is_zero() {
        return Err(Error::Precondition("the zero polynomial has no support to partition".into()));
    }
    partitions_with(f, false)
}

/// Admissible partitions whose blocks cannot be split further. Every other
/// admissible partition is coarser than one of these and so has a smaller
/// `L(p)`, which makes these enough for the union.
pub fn finest_admissible_partitions(f: &LaurentPolynomial) -> Result<Vec<AdmissiblePartition>> {
    partitions_with(f, true)
}

/// A maximal component of `τ₁(V(f))` with a partition witnessing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tau1Certificate {
    pub subspace: RationalSubspace,
    pub partition: AdmissiblePartition,
}

/// The maximal subspaces `L(p)`, each with the first partition producing it.
pub fn tau1_with_certificates(f: &LaurentPolynomial) -> Result<Vec<Tau1Certificate>> {
    let n = f.n_vars();
    let parts = finest_admissible_partitions(f)?;
    let with_spaces: Vec<(RationalSubspace, AdmissiblePartition)> =
        parts.into_iter().map(|p| (p.subspace(n), p)).collect();
    let arr = SubspaceArrangement::new(n, with_spaces.iter().map(|(l, _)| l.clone()).collect())?;
    Ok(arr
        .components()
        .iter()
        .map(|c| {
            let p = with_spaces.iter().find(|(l, _)| l == c).expect("component came from a partition");
            Tau1Certificate {
                subspace: c.clone(),
                partition: p.1.clone(),
            }
        })
        .collect())
}

fn tau1_single(f: &LaurentPolynomial) -> Result<SubspaceArrangement> {
    let n = f.n_vars();
    if f.is_zero() {
        return Ok(SubspaceArrangement::full(n));
    }
    let comps = tau1_with_certificates(f)?.into_iter().map(|c| c.subspace).collect();
    SubspaceArrangement::new(n, comps)
}

/// `τ₁` of the common zero set of `polys`: the union of the `L(p)` for each
/// polynomial, intersected across polynomials.
pub fn exp_tangent_cone(polys: &[LaurentPolynomial]) -> Result<SubspaceArrangement> {
    let first = polys
        .first()
        .ok_or_else(|| Error::Precondition("at least one polynomial is needed".into()))?;
    let n = first.n_vars();
    let mut acc = SubspaceArrangement::full(n);
    for f in polys {
        check_dim(n, f.n_vars())?;
        acc = acc.intersect(&tau1_single(f)?)?;
    }
    Ok(acc)
}

/// The initial form of `f(z + 1)`, scaled so its lexicographically largest
/// term has coefficient 1.
///
/// A nonzero constant means `1 ∉ V(f)` and `TC₁ = ∅`; the zero polynomial
/// means `TC₁` is everything.
pub fn hypersurface_tc1(f: &LaurentPolynomial) -> LaurentPolynomial {
    f.shift_to_identity().initial_form().normalized()
}

/// Whether the form defines the empty tangent cone.
pub fn tc1_is_empty(form: &LaurentPolynomial) -> bool {
    !form.is_zero() && form.is_constant()
}

/// Outcome of comparing `τ₁(V(f))` with `TC₁(V(f))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentConeComparison {
    pub tau1: SubspaceArrangement,
    pub tc1: LaurentPolynomial,
    pub tau1_inside_tc1: bool,
    pub equal: bool,
}

/// Whether `form` vanishes identically on `l`.
fn vanishes_on(form: &LaurentPolynomial, l: &RationalSubspace) -> bool {
    if l.is_zero() {
        return form.coeff(&vec![0; form.n_vars()]).is_zero();
    }
    // z = Σ_j s_j v_j with v_j the basis vectors.
    let n = l.ambient_dim();
    let rows: Vec<Vec<Rational>> = (0..n).map(|i| l.basis().iter().map(|v| v[i].clone()).collect()).collect();
    form.linear_substitute(&rows, l.dim()).expect("shapes agree").is_zero()
}

/// Decides `τ₁ ⊆ TC₁` and `τ₁ = TC₁` exactly.
///
/// Containment is tested by restricting the `TC₁` form to each component.
/// For equality, `TC₁` is a hypersurface, so it can only equal a union of
/// subspaces if every component is a hyperplane and the form is, up to a
/// constant, a product of their equations; this is checked by exact
/// division, so the answer is never left undetermined.
pub fn compare_tangent_cones(f: &LaurentPolynomial) -> Result<TangentConeComparison> {
    let tau1 = tau1_single(f)?;
    let tc1 = hypersurface_tc1(f);
    let inside = tau1.components().iter().all(|l| vanishes_on(&tc1, l));
    let equal = if f.is_zero() || tc1_is_empty(&tc1) {
        // Both everything, or both empty.
        true
    } else if !inside || tau1.components().iter().any(|l| l.codim() != 1) {
        false
    } else {
        let mut rest = tc1.clone();
        for l in tau1.components() {
            let eq = &l.equations()[0];
            while let Some(q) = rest.div_linear_form(eq) {
                rest = q;
            }
        }
        rest.is_constant()
    };
    Ok(TangentConeComparison {
        tau1,
        tc1,
        tau1_inside_tc1: inside,
        equal,
    })
}

/// The first characteristic variety of a link complement,
/// `W¹ = V(Δ) ∪ {1}`, from its Alexander polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkCv {
    delta: LaurentPolynomial,
}

/// Wraps an Alexander polynomial as the variety `V(Δ) ∪ {1}`.
pub fn link_cv1(delta: &LaurentPolynomial) -> LinkCv {
    LinkCv { delta: delta.clone() }
}

impl LinkCv {
    pub fn delta(&self) -> &LaurentPolynomial {
        &self.delta
    }

    /// Number of link components.
    pub fn n(&self) -> usize {
        self.delta.n_vars()
    }

    /// Defining polynomials of the hypersurface part, for
    /// [`exp_tangent_cone`].
    pub fn polys(&self) -> Vec<LaurentPolynomial> {
        vec![self.delta.clone()]
    }

    /// `τ₁(W¹)`, which always contains the origin.
    pub fn tau1(&self) -> Result<SubspaceArrangement> {
        exp_tangent_cone(&self.polys())?.union(&SubspaceArrangement::origin(self.n()))
    }

    /// The `TC₁` form of `V(Δ)`; the added point `1` only contributes the
    /// origin, which lies on every nonconstant form.
    pub fn tc1(&self) -> LaurentPolynomial {
        hypersurface_tc1(&self.delta)
    }

    /// For knots: `Δ` split into cyclotomic factors and a residual.
    pub fn roots(&self) -> Result<CyclotomicFactorization> {
        factor_cyclotomic(&UniPoly::from_laurent(&self.delta)?)
    }
}
