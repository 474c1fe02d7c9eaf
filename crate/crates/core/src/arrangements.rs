//! Degree-one resonance of projective line arrangements in ℙ².
//!
//! Lines are labelled `1..=n` in the order their forms are given.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::aomoto::{aomoto_betti, exterior_quotient_deg2, GradedAlgebraPresentation};
use crate::error::{Error, Result};
use crate::qlinalg::{Rational, RationalSubspace, SubspaceArrangement};

/// Random points drawn per component when certifying against the
/// Orlik–Solomon oracle.
pub const CERTIFY_POINTS: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjLineArrangement {
    forms: Vec<[Rational; 3]>,
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Scales so the first nonzero coordinate is `1`.
fn normalize(v: [Rational; 3]) -> [Rational; 3] {
    let lead = v.iter().find(|x| !x.is_zero()).cloned().unwrap_or_else(Rational::one);
    v.map(|x| x / &lead)
}

impl ProjLineArrangement {
    pub fn new(forms: Vec<[Rational; 3]>) -> Result<Self> {
        for (i, f) in forms.iter().enumerate() {
            if f.iter().all(Zero::is_zero) {
                return Err(Error::ZeroForm(i + 1));
            }
        }
        for i in 0..forms.len() {
            for j in i + 1..forms.len() {
                if cross(&forms[i], &forms[j]).iter().all(Zero::is_zero) {
                    return Err(Error::ProportionalForms(i + 1, j + 1));
                }
            }
        }
        Ok(ProjLineArrangement { forms })
    }

    pub fn from_ints(forms: &[[i64; 3]]) -> Result<Self> {
        Self::new(
            forms
                .iter()
                .map(|f| f.map(|x| Rational::from_integer(x.into())))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn forms(&self) -> &[[Rational; 3]] {
        &self.forms
    }
}

/// An intersection point `v_J` and the labels `J` of the lines through it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultiplePoint {
    pub point: [Rational; 3],
    pub lines: Vec<usize>,
}

impl MultiplePoint {
    pub fn multiplicity(&self) -> usize {
        self.lines.len()
    }
}

/// All intersection points, each with every line through it, sorted by
/// line labels.
pub fn multiple_points(a: &ProjLineArrangement) -> Vec<MultiplePoint> {
    let n = a.len();
    let mut by_point: BTreeMap<[Rational; 3], Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = normalize(cross(&a.forms[i], &a.forms[j]));
            let lines = by_point.entry(p).or_default();
            for l in [i + 1, j + 1] {
                if !lines.contains(&l) {
                    lines.push(l);
                }
            }
        }
    }
    let mut out: Vec<MultiplePoint> = by_point
        .into_iter()
        .map(|(point, mut lines)| {
            lines.sort_unstable();
            MultiplePoint { point, lines }
        })
        .collect();
    out.sort_by(|x, y| x.lines.cmp(&y.lines));
    out
}

/// Largest multiplicity of an intersection point (`0` with fewer than two
/// lines).
pub fn max_multiplicity(a: &ProjLineArrangement) -> usize {
    multiple_points(a).iter().map(MultiplePoint::multiplicity).max().unwrap_or(0)
}

/// `L_J = {Σ_{j∈J} x_j = 0, x_i = 0 for i ∉ J}`.
pub fn local_subspace(n: usize, lines: &[usize]) -> RationalSubspace {
    let mut eqs = vec![(0..n)
        .map(|i| if lines.contains(&(i + 1)) { Rational::one() } else { Rational::zero() })
        .collect::<Vec<_>>()];
    for i in (1..=n).filter(|i| !lines.contains(i)) {
        eqs.push(indicator(n, i));
    }
    RationalSubspace::from_equations(n, &eqs).expect("length n")
}

fn indicator(n: usize, label: usize) -> Vec<Rational> {
    (0..n).map(|i| if i + 1 == label { Rational::one() } else { Rational::zero() }).collect()
}

/// One `L_J` for every point of multiplicity at least 3.
pub fn local_components(a: &ProjLineArrangement) -> SubspaceArrangement {
    let n = a.len();
    let comps = multiple_points(a)
        .iter()
        .filter(|p| p.multiplicity() >= 3)
        .map(|p| local_subspace(n, &p.lines))
        .collect();
    SubspaceArrangement::new(n, comps).expect("same ambient")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidComponent {
    /// The six line labels, increasing.
    pub lines: Vec<usize>,
    /// Lines sharing no triple point, each pair increasing, pairs sorted.
    pub pairs: [(usize, usize); 3],
    pub subspace: RationalSubspace,
}

/// The triples cut out on `subset` by the multiple points of `a`, or `None`
/// if some point meets the subset in four or more lines.
fn induced_triples(points: &[MultiplePoint], subset: &[usize]) -> Option<Vec<Vec<usize>>> {
    let mut triples = Vec::new();
    for p in points {
        let on: Vec<usize> = p.lines.iter().copied().filter(|l| subset.contains(l)).collect();
        match on.len() {
            0..=2 => {}
            3 => triples.push(on),
            _ => return None,
        }
    }
    Some(triples)
}

fn braid_pattern(n: usize, subset: &[usize], triples: &[Vec<usize>]) -> Option<BraidComponent> {
    if triples.len() != 4 {
        return None;
    }
    if subset.iter().any(|l| triples.iter().filter(|t| t.contains(l)).count() != 2) {
        return None;
    }
    let mut pairs = Vec::new();
    for (ix, &a) in subset.iter().enumerate() {
        for &b in &subset[ix + 1..] {
            if !triples.iter().any(|t| t.contains(&a) && t.contains(&b)) {
                pairs.push((a, b));
            }
        }
    }
    if pairs.len() != 3 {
        return None;
    }
    let pairs = [pairs[0], pairs[1], pairs[2]];
    let mut eqs: Vec<Vec<Rational>> = pairs
        .iter()
        .map(|&(a, b)| {
            let mut v = indicator(n, a);
            v[b - 1] = -Rational::one();
            v
        })
        .collect();
    let mut sum = vec![Rational::zero(); n];
    for &(a, _) in &pairs {
        sum[a - 1] = Rational::one();
    }
    eqs.push(sum);
    for i in (1..=n).filter(|i| !subset.contains(i)) {
        eqs.push(indicator(n, i));
    }
    Some(BraidComponent {
        lines: subset.to_vec(),
        pairs,
        subspace: RationalSubspace::from_equations(n, &eqs).expect("length n"),
    })
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(1, n, k, &mut cur, &mut out);
    out
}

/// Six-line sub-arrangements whose four triple points cover each line
/// twice, with the subspace `x_a = x_f, x_b = x_e, x_c = x_d,
/// x_a + x_b + x_c = 0` (zero off the six lines) for the three pairs of
/// lines not sharing a triple point. Each candidate is checked against the
/// Orlik–Solomon oracle at random points.
pub fn braid_subarrangements(a: &ProjLineArrangement, seed: u64) -> Result<Vec<BraidComponent>> {
    let n = a.len();
    let points = multiple_points(a);
    let found: Vec<BraidComponent> = subsets_of_size(n, 6)
        .into_iter()
        .filter_map(|s| induced_triples(&points, &s).and_then(|t| braid_pattern(n, &s, &t)))
        .collect();
    if !found.is_empty() {
        let alg = os_algebra_deg2(a);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for b in &found {
            certify_component(&alg, &b.subspace, &mut rng)
                .map_err(|_| Error::CertificationFailed(format!("braid sub-arrangement {:?} is not resonant", b.lines)))?;
        }
    }
    Ok(found)
}

/// A random point of `l ∖ {0}` with small integer coordinates in the
/// basis of `l`.
pub fn random_point(l: &RationalSubspace, rng: &mut impl Rng) -> Vec<Rational> {
    let n = l.ambient_dim();
    loop {
        let mut v = vec![Rational::zero(); n];
        for b in l.basis() {
            let c = Rational::from_integer(rng.gen_range(-5i64..=5).into());
            for (x, y) in v.iter_mut().zip(b) {
                *x += &c * y;
            }
        }
        if v.iter().any(|x| !x.is_zero()) || l.is_zero() {
            return v;
        }
    }
}

/// Checks `dim H¹(A, ·a) ≥ 1` at [`CERTIFY_POINTS`] random points of `l`.
pub fn certify_component(alg: &GradedAlgebraPresentation, l: &RationalSubspace, rng: &mut impl Rng) -> Result<()> {
    for _ in 0..CERTIFY_POINTS {
        let a = random_point(l, rng);
        if aomoto_betti(alg, &a, 1)? == 0 {
            return Err(Error::CertificationFailed(format!("point {a:?} is not resonant")));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R1Report {
    pub resonance: SubspaceArrangement,
    pub local: SubspaceArrangement,
    pub braid: Vec<BraidComponent>,
    /// Set when some line lies on two or more points of multiplicity ≥ 3
    /// inside a sub-arrangement that no braid pattern covers; non-local
    /// components of other types could then be missing.
    pub possibly_incomplete: bool,
}

/// Lines that keep at least two points of multiplicity ≥ 3 after
/// repeatedly discarding lines with fewer.
fn triple_core(a: &ProjLineArrangement) -> Vec<usize> {
    let points = multiple_points(a);
    let mut alive: Vec<usize> = (1..=a.len()).collect();
    loop {
        let heavy: Vec<Vec<usize>> = points
            .iter()
            .map(|p| p.lines.iter().copied().filter(|l| alive.contains(l)).collect::<Vec<_>>())
            .filter(|on| on.len() >= 3)
            .collect();
        let keep: Vec<usize> = alive
            .iter()
            .copied()
            .filter(|l| heavy.iter().filter(|on| on.contains(l)).count() >= 2)
            .collect();
        if keep.len() == alive.len() {
            return alive;
        }
        alive = keep;
    }
}

/// `R¹(A)` as the union of local and braid components, each certified by
/// the oracle, with pairwise intersections checked to be `{0}`. Without
/// any component the result is the origin.
pub fn r1_arrangement(a: &ProjLineArrangement, seed: u64) -> Result<R1Report> {
    let n = a.len();
    let local = local_components(a);
    let braid = braid_subarrangements(a, seed)?;
    let mut all: Vec<RationalSubspace> = local.components().to_vec();
    all.extend(braid.iter().map(|b| b.subspace.clone()));
    let alg = os_algebra_deg2(a);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    for l in local.components() {
        certify_component(&alg, l, &mut rng)?;
    }
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            if all[i].intersect(&all[j])?.dim() != 0 {
                return Err(Error::CertificationFailed(format!(
                    "components {i} and {j} meet outside the origin"
                )));
            }
        }
    }
    let resonance = if all.is_empty() {
        SubspaceArrangement::origin(n)
    } else {
        SubspaceArrangement::new(n, all)?
    };
    let covered: Vec<usize> = braid.iter().flat_map(|b| b.lines.iter().copied()).collect();
    let possibly_incomplete = triple_core(a).iter().any(|l| !covered.contains(l));
    Ok(R1Report {
        resonance,
        local,
        braid,
        possibly_incomplete,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OmegaBound {
    Full,
    Empty,
    Undetermined,
}

/// Ω¹_r from the maximal multiplicity `m` alone: everything when `m = 2`,
/// nothing when `m ≥ 3` and `r ≥ n − m + 2`.
pub fn omega_bounds(a: &ProjLineArrangement, r: usize) -> OmegaBound {
    let m = max_multiplicity(a);
    if m <= 2 {
        OmegaBound::Full
    } else if r + m >= a.len() + 2 {
        OmegaBound::Empty
    } else {
        OmegaBound::Undetermined
    }
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// The Orlik–Solomon algebra in degrees ≤ 2: `Λ²ℚⁿ` modulo
/// `(e_i − e_j) ∧ (e_j − e_k) = e_ij − e_ik + e_jk` for all concurrent
/// triples `i < j < k`.
pub fn os_algebra_deg2(a: &ProjLineArrangement) -> GradedAlgebraPresentation {
    let n = a.len();
    let pairs = n * n.saturating_sub(1) / 2;
    let mut rels = Vec::new();
    for p in multiple_points(a).iter().filter(|p| p.multiplicity() >= 3) {
        for t in subsets_of_size(p.multiplicity(), 3) {
            let (i, j, k) = (p.lines[t[0] - 1] - 1, p.lines[t[1] - 1] - 1, p.lines[t[2] - 1] - 1);
            let mut v = vec![Rational::zero(); pairs];
            v[pair_index(n, i, j)] += Rational::one();
            v[pair_index(n, i, k)] -= Rational::one();
            v[pair_index(n, j, k)] += Rational::one();
            rels.push(v);
        }
    }
    exterior_quotient_deg2(n, &rels).expect("relations have the right length")
}
