//! Finite simplicial complexes on labelled vertices `1..=n`, with induced
//! subcomplexes, links and reduced rational homology.
//!
//! Simplices are bitmasks (label `v` is bit `v − 1`), which caps the vertex
//! count at 63. That is far beyond anything whose homology is computed here.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::qlinalg::{QMatrix, Rational};

pub const MAX_VERTICES: usize = 63;

/// A set of vertex labels, possibly empty.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Simplex(u64);

impl Simplex {
    pub const EMPTY: Simplex = Simplex(0);

    pub fn from_bits(bits: u64) -> Self {
        Simplex(bits)
    }

    /// Builds a simplex from 1-based labels, each at most `n`.
    pub fn new(n: usize, vertices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vertices {
            if v == 0 || v > n || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange { label: v, max: n.min(MAX_VERTICES) });
            }
            bits |= 1 << (v - 1);
        }
        Ok(Simplex(bits))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Number of vertices, so the empty simplex has size 0.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn vertices(self) -> Vec<usize> {
        (0..64).filter(|b| self.0 >> b & 1 == 1).map(|b| b + 1).collect()
    }

    pub fn is_subset(self, other: Simplex) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Simplex) -> Simplex {
        Simplex(self.0 | other.0)
    }

    pub fn is_disjoint(self, other: Simplex) -> bool {
        self.0 & other.0 == 0
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.vertices())
    }
}

/// Iterates over all submasks of `mask`, including 0 and `mask` itself.
pub(crate) fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

/// A simplicial complex, stored as its full (downward closed) face set.
/// The empty simplex is always a face; the complex `{∅}` is the empty complex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    faces: BTreeSet<u64>,
}

impl SimplicialComplex {
    /// The complex on vertex set `{1..n}` generated by `facets`. Every label in
    /// `1..=n` is a vertex even if no facet mentions it.
    pub fn new(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::VertexOutOfRange { label: n, max: MAX_VERTICES });
        }
        let mut k = Self::from_facet_masks(n, std::iter::empty());
        for f in facets {
            k.add_closed(Simplex::new(n, f)?.0);
        }
        for v in 0..n {
            k.faces.insert(1 << v);
        }
        Ok(k)
    }

    /// The closure of the given masks, without adding missing vertices.
    pub fn from_facet_masks(n: usize, facets: impl IntoIterator<Item = u64>) -> Self {
        let mut k = SimplicialComplex {
            n,
            faces: BTreeSet::from([0]),
        };
        for f in facets {
            k.add_closed(f);
        }
        k
    }

    fn add_closed(&mut self, mask: u64) {
        if self.faces.contains(&mask) {
            return;
        }
        for s in submasks(mask) {
            self.faces.insert(s);
        }
    }

    /// The simplex on all of `1..=n` (so the toric complex is the torus).
    pub fn full_simplex(n: usize) -> Self {
        let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        Self::from_facet_masks(n, [all])
    }

    /// `n` isolated vertices.
    pub fn discrete(n: usize) -> Self {
        Self::from_facet_masks(n, (0..n).map(|v| 1u64 << v))
    }

    /// The boundary of the `(n−1)`-simplex, a sphere of dimension `n − 2`.
    pub fn simplex_boundary(n: usize) -> Self {
        let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        Self::from_facet_masks(n, (0..n).map(|v| all & !(1u64 << v)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertices actually present, as a mask.
    pub fn vertex_mask(&self) -> u64 {
        self.faces.iter().filter(|f| f.count_ones() == 1).fold(0, |a, f| a | f)
    }

    pub fn vertices(&self) -> Vec<usize> {
        Simplex(self.vertex_mask()).vertices()
    }

    /// All faces including the empty one, in increasing mask order.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        self.faces.iter().map(|&f| Simplex(f))
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, s: Simplex) -> bool {
        self.faces.contains(&s.0)
    }

    /// Dimension of the complex; −1 for the empty complex.
    pub fn dim(&self) -> isize {
        self.faces.iter().map(|f| f.count_ones() as isize).max().unwrap_or(0) - 1
    }

    /// Inclusion-maximal faces, sorted.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut out: Vec<Simplex> = self
            .faces
            .iter()
            .filter(|&&f| {
                let free = !f & if self.n == 0 { 0 } else { u64::MAX >> (64 - self.n) };
                (0..self.n).all(|b| free >> b & 1 == 0 || !self.faces.contains(&(f | 1 << b)))
            })
            .map(|&f| Simplex(f))
            .collect();
        out.sort_by_key(|s| s.vertices());
        out
    }

    /// Edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.faces
            .iter()
            .filter(|f| f.count_ones() == 2)
            .map(|&f| {
                let v = Simplex(f).vertices();
                (v[0], v[1])
            })
            .collect()
    }

    /// The subcomplex of simplices with every vertex in `w`.
    pub fn induced(&self, w: &[usize]) -> Result<Self> {
        Ok(self.induced_mask(Simplex::new(self.n, w)?.0))
    }

    pub fn induced_mask(&self, w: u64) -> Self {
        SimplicialComplex {
            n: self.n,
            faces: self.faces.iter().copied().filter(|f| f & !w == 0).collect(),
        }
    }

    /// `{τ ⊆ W : τ ∪ σ ∈ K}`, the link of `σ` taken inside `K_W`.
    ///
    /// Fails if `σ ∉ K`; `σ` must be disjoint from `W`.
    pub fn link_in_induced(&self, sigma: Simplex, w: &[usize]) -> Result<Self> {
        self.link_in_induced_mask(sigma, Simplex::new(self.n, w)?.0)
    }

    pub fn link_in_induced_mask(&self, sigma: Simplex, w: u64) -> Result<Self> {
        if !self.contains(sigma) {
            return Err(Error::SimplexNotInComplex(sigma.vertices()));
        }
        if sigma.0 & w != 0 {
            return Err(Error::Precondition(format!(
                "simplex {:?} meets the vertex set {:?}",
                sigma.vertices(),
                Simplex(w).vertices()
            )));
        }
        Ok(self.link_unchecked(sigma.0, w))
    }

    pub(crate) fn link_unchecked(&self, sigma: u64, w: u64) -> Self {
        let faces = self
            .faces
            .iter()
            .filter(|&&f| f & sigma == sigma && f & !(sigma | w) == 0)
            .map(|&f| f & !sigma)
            .collect();
        SimplicialComplex { n: self.n, faces }
    }

    /// Simplicial join, with the vertices of `other` relabelled `n+1..`.
    pub fn join(&self, other: &SimplicialComplex) -> Self {
        let n = self.n + other.n;
        assert!(n <= MAX_VERTICES, "join has too many vertices");
        let mut faces = BTreeSet::new();
        for &a in &self.faces {
            for &b in &other.faces {
                faces.insert(a | b << self.n);
            }
        }
        SimplicialComplex { n, faces }
    }

    fn faces_of_size(&self, k: usize) -> Vec<u64> {
        self.faces.iter().copied().filter(|f| f.count_ones() as usize == k).collect()
    }

    /// Number of `i`-dimensional faces, for `i ≥ −1`.
    pub fn face_count(&self, i: isize) -> usize {
        if i < -1 {
            return 0;
        }
        self.faces_of_size((i + 1) as usize).len()
    }

    /// Matrix of the simplicial boundary from `i`-faces to `(i−1)`-faces,
    /// augmented so that `∂₀` maps every vertex to the empty face.
    pub fn boundary_matrix(&self, i: isize) -> QMatrix {
        if i < 0 {
            return QMatrix::zeros(0, self.face_count(i));
        }
        let cols = self.faces_of_size((i + 1) as usize);
        let rows = self.faces_of_size(i as usize);
        let index: HashMap<u64, usize> = rows.iter().enumerate().map(|(k, &f)| (f, k)).collect();
        let mut m = QMatrix::zeros(rows.len(), cols.len());
        for (c, &f) in cols.iter().enumerate() {
            for (j, v) in Simplex(f).vertices().into_iter().enumerate() {
                let r = index[&(f & !(1u64 << (v - 1)))];
                m[(r, c)] = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
            }
        }
        m
    }

    /// Dimension of reduced homology `H̃_i(K; ℚ)` for `i ≥ −1`.
    ///
    /// `H̃₋₁` is one-dimensional exactly for the empty complex `{∅}`.
    pub fn reduced_betti(&self, i: isize) -> usize {
        if i < -1 {
            return 0;
        }
        let c = self.face_count(i);
        if c == 0 {
            return 0;
        }
        c - self.boundary_matrix(i).rank() - self.boundary_matrix(i + 1).rank()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets={:?})", self.n, self.facets())
    }
}

/// Reduced Euler characteristic computed from face counts.
pub fn reduced_euler_from_faces(k: &SimplicialComplex) -> i64 {
    (-1..=k.dim())
        .map(|i| if i.rem_euclid(2) == 0 { 1 } else { -1 } * k.face_count(i) as i64)
        .sum()
}

/// Reduced Euler characteristic computed from Betti numbers.
pub fn reduced_euler_from_betti(k: &SimplicialComplex) -> i64 {
    (-1..=k.dim())
        .map(|i| if i.rem_euclid(2) == 0 { 1 } else { -1 } * k.reduced_betti(i) as i64)
        .sum()
}


/// Every simplicial complex whose vertex set is exactly `1..=n`.
///
/// Intended for exhaustive checks on few vertices: there are 6 894 such
/// complexes for `n = 5` but millions for `n = 6`.
pub fn enumerate_complexes(n: usize) -> Vec<SimplicialComplex> {
    assert!(n <= 6, "exhaustive enumeration is limited to 6 vertices");
    let mut candidates: Vec<u64> = (1u64..1 << n).filter(|m| m.count_ones() >= 2).collect();
    candidates.sort_by_key(|m| (m.count_ones(), *m));
    let base = SimplicialComplex::discrete(n);
    let mut out = Vec::new();
    fn go(k: &mut SimplicialComplex, cands: &[u64], out: &mut Vec<SimplicialComplex>) {
        let Some((&f, rest)) = cands.split_first() else {
            out.push(k.clone());
            return;
        };
        go(k, rest, out);
        let closed = (0..64).filter(|b| f >> b & 1 == 1).all(|b| k.faces.contains(&(f & !(1u64 << b))));
        if closed {
            k.faces.insert(f);
            go(k, rest, out);
            k.faces.remove(&f);
        }
    }
    go(&mut base.clone(), &candidates, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(n, &facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn induced_triangle_on_edge() {
        let t = k(3, &[&[1, 2, 3]]);
        assert_eq!(t.induced(&[1, 2]).unwrap(), SimplicialComplex::from_facet_masks(3, [0b11]));
    }

    #[test]
    fn induced_two_edges_on_two_points() {
        let t = k(4, &[&[1, 2], &[3, 4]]);
        let i = t.induced(&[1, 3]).unwrap();
        assert_eq!(i.vertices(), vec![1, 3]);
        assert_eq!(i.dim(), 0);
    }

    #[test]
    fn induced_on_nothing_is_empty() {
        let t = k(3, &[&[1, 2, 3]]);
        let e = t.induced(&[]).unwrap();
        assert_eq!(e.num_faces(), 1);
        assert_eq!(e.reduced_betti(-1), 1);
    }

    #[test]
    fn link_of_edge_endpoint() {
        // τ ⊆ {1} with τ ∪ {2} ∈ K: both ∅ and {1}.
        let e = k(2, &[&[1, 2]]);
        let l = e.link_in_induced(Simplex::new(2, &[2]).unwrap(), &[1]).unwrap();
        assert!(l.contains(Simplex::new(2, &[1]).unwrap()));
        assert_eq!(l.num_faces(), 2);
    }

    #[test]
    fn link_of_isolated_vertex_is_empty() {
        let d = SimplicialComplex::discrete(2);
        let l = d.link_in_induced(Simplex::new(2, &[2]).unwrap(), &[1]).unwrap();
        assert_eq!(l.num_faces(), 1);
        assert_eq!(l.reduced_betti(-1), 1);
    }

    #[test]
    fn link_of_empty_simplex_is_identity() {
        let t = k(4, &[&[1, 2, 3], &[3, 4]]);
        assert_eq!(t.link_in_induced(Simplex::EMPTY, &[1, 2, 3, 4]).unwrap(), t);
    }

    #[test]
    fn link_rejects_non_face() {
        let t = k(3, &[&[1, 2], &[3]]);
        let err = t.link_in_induced(Simplex::new(3, &[1, 3]).unwrap(), &[2]).unwrap_err();
        assert_eq!(err, Error::SimplexNotInComplex(vec![1, 3]));
    }

    #[test]
    fn betti_of_circle_points_and_empty() {
        assert_eq!(SimplicialComplex::simplex_boundary(3).reduced_betti(1), 1);
        assert_eq!(SimplicialComplex::simplex_boundary(3).reduced_betti(0), 0);
        assert_eq!(SimplicialComplex::discrete(2).reduced_betti(0), 1);
        assert_eq!(SimplicialComplex::discrete(2).reduced_betti(-1), 0);
        assert_eq!(SimplicialComplex::from_facet_masks(0, []).reduced_betti(-1), 1);
    }

    #[test]
    fn sphere_homology() {
        let s = SimplicialComplex::simplex_boundary(5);
        let b: Vec<usize> = (-1..=4).map(|i| s.reduced_betti(i)).collect();
        assert_eq!(b, vec![0, 0, 0, 0, 1, 0]);
    }

    #[test]
    fn facets_are_maximal() {
        let t = k(4, &[&[1, 2, 3], &[2, 3], &[4]]);
        let f: Vec<Vec<usize>> = t.facets().into_iter().map(|s| s.vertices()).collect();
        assert_eq!(f, vec![vec![1, 2, 3], vec![4]]);
    }

    #[test]
    fn bad_label_is_rejected() {
        assert!(SimplicialComplex::new(3, &[vec![1, 4]]).is_err());
        assert!(SimplicialComplex::new(3, &[vec![0]]).is_err());
    }

    #[test]
    fn complex_counts() {
        // Labelled complexes with full vertex set: 1, 1, 2, 9, 114.
        let counts: Vec<usize> = (0..=4).map(|n| enumerate_complexes(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 9, 114]);
    }

    #[test]
    fn boundaries_compose_to_zero() {
        let s = SimplicialComplex::full_simplex(5);
        for i in 0..4 {
            let d = &s.boundary_matrix(i) * &s.boundary_matrix(i + 1);
            assert!(d.is_zero());
        }
    }
}
