//! Jump loci and Dwyer–Fried sets of toric complexes `T_K` and of
//! right-angled Artin groups `G_Γ`.
//!
//! Everything here is a union of coordinate subspaces `ℚ^W` (or coordinate
//! subtori), indexed by vertex subsets `W`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{check_dim, Error, Result};
use crate::qlinalg::{meets_nontrivially, RationalSubspace, SubspaceArrangement};
use crate::simplicial::{submasks, Simplex, SimplicialComplex, MAX_VERTICES};

fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

/// A simple graph on the vertices `1..=n`, stored as adjacency masks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::VertexOutOfRange { label: n, max: MAX_VERTICES });
        }
        let mut g = Graph { n, adj: vec![0; n] };
        for &(u, v) in edges {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { label: x, max: n });
                }
            }
            if u == v {
                return Err(Error::Precondition(format!("loop at vertex {u}")));
            }
            g.adj[u - 1] |= 1 << (v - 1);
            g.adj[v - 1] |= 1 << (u - 1);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let all = full_mask(n);
        Graph {
            n,
            adj: (0..n).map(|v| all & !(1 << v)).collect(),
        }
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, adj: vec![0; n] }
    }

    /// The path `1 − 2 − ⋯ − n`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v, v + 1)).collect();
        Self::new(n, &edges).expect("path edges are in range")
    }

    /// The 1-skeleton `K⁽¹⁾`.
    pub fn one_skeleton(k: &SimplicialComplex) -> Self {
        Self::new(k.n(), &k.edges()).expect("complex edges are in range")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.adj[v] == full_mask(self.n) & !(1 << v))
    }

    /// The graph as a one-dimensional simplicial complex.
    pub fn as_complex(&self) -> SimplicialComplex {
        let facets: Vec<Vec<usize>> = self.edges().into_iter().map(|(u, v)| vec![u, v]).collect();
        SimplicialComplex::new(self.n, &facets).expect("edges are in range")
    }

    /// The clique (flag) complex, whose toric complex is a K(G_Γ, 1).
    pub fn flag_complex(&self) -> SimplicialComplex {
        let cliques = submasks(full_mask(self.n)).filter(|&m| self.is_clique(m));
        SimplicialComplex::from_facet_masks(self.n, cliques)
    }

    fn is_clique(&self, m: u64) -> bool {
        (0..self.n).filter(|v| m >> v & 1 == 1).all(|v| (m & !(1 << v)) & !self.adj[v] == 0)
    }

    /// Number of connected components of the subgraph induced on `w`.
    pub fn components_of(&self, w: u64) -> usize {
        let mut left = w;
        let mut count = 0;
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut seen = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for v in 0..self.n {
                    if frontier >> v & 1 == 1 {
                        next |= self.adj[v];
                    }
                }
                frontier = next & w & !seen;
                seen |= frontier;
            }
            left &= !seen;
            count += 1;
        }
        count
    }

    /// The induced subgraph on `w` has at least two components.
    pub fn is_disconnected_on(&self, w: u64) -> bool {
        self.components_of(w) >= 2
    }

    /// The same graph with vertex `v` renamed `perm[v − 1] + 1`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u - 1] + 1, perm[v - 1] + 1)).collect();
        Self::new(self.n, &edges).expect("permutation preserves range")
    }

    fn edge_code(&self) -> u64 {
        let mut code = 0u64;
        let mut bit = 0;
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if self.has_edge(u, v) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        code
    }

    /// Lexicographically least edge code over all relabellings.
    fn canonical_code(&self) -> u64 {
        let mut best = u64::MAX;
        for perm in permutations(self.n) {
            best = best.min(self.relabel(&perm).edge_code());
        }
        best
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative of every isomorphism class of graphs on `n` vertices.
///
/// Classes are grown vertex by vertex, so the cost is dominated by the
/// canonical forms of `classes(n−1) · 2^(n−1)` candidates.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "isomorphism enumeration is limited to 7 vertices");
    let mut classes = vec![Graph::empty(0)];
    for m in 1..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &classes {
            for nbrs in 0u64..1 << (m - 1) {
                let mut edges = g.edges();
                edges.extend((1..m).filter(|v| nbrs >> (v - 1) & 1 == 1).map(|v| (v, m)));
                let h = Graph::new(m, &edges).expect("edges in range");
                if seen.insert(h.canonical_code()) {
                    next.push(h);
                }
            }
        }
        classes = next;
    }
    classes
}

/// Whether a coordinate arrangement describes linear subspaces or subtori.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoordinateKind {
    Linear,
    Toric,
}

/// A union of coordinate subspaces `ℚ^W` (or subtori `(ℂ^×)^W`).
///
/// The subset `W = ∅` stands for the origin (or the identity character), so
/// `[∅]` is the variety `{0}` and an empty subset list is the empty set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoordinateArrangement {
    n: usize,
    subsets: Vec<u64>,
    kind: CoordinateKind,
}

impl CoordinateArrangement {
    /// Keeps the inclusion-maximal subsets and sorts them lexicographically.
    pub fn from_masks(n: usize, masks: impl IntoIterator<Item = u64>, kind: CoordinateKind) -> Self {
        let mut all: Vec<u64> = masks.into_iter().collect();
        all.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
        all.dedup();
        let mut kept: Vec<u64> = Vec::new();
        for m in all {
            if !kept.iter().any(|&k| m & !k == 0) {
                kept.push(m);
            }
        }
        kept.sort_by_key(|&m| Simplex::from_bits(m).vertices());
        CoordinateArrangement { n, subsets: kept, kind }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> CoordinateKind {
        self.kind
    }

    pub fn masks(&self) -> &[u64] {
        &self.subsets
    }

    /// The subsets as sorted lists of 1-based labels.
    pub fn subsets(&self) -> Vec<Vec<usize>> {
        self.subsets.iter().map(|&m| Simplex::from_bits(m).vertices()).collect()
    }

    /// True when the union is exactly `{0}`.
    pub fn is_origin_only(&self) -> bool {
        self.subsets == [0]
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    /// `n − max |W|`; `None` for the empty set.
    pub fn codim(&self) -> Option<usize> {
        self.subsets.iter().map(|m| self.n - m.count_ones() as usize).min()
    }

    pub fn to_subspaces(&self) -> SubspaceArrangement {
        let comps = self
            .subsets
            .iter()
            .map(|&m| RationalSubspace::coordinate(self.n, (0..self.n).filter(|b| m >> b & 1 == 1)))
            .collect();
        SubspaceArrangement::new(self.n, comps).expect("coordinate subspaces share the ambient")
    }

    /// The same subsets read as subtori.
    pub fn as_toric(&self) -> Self {
        CoordinateArrangement {
            kind: CoordinateKind::Toric,
            ..self.clone()
        }
    }
}

impl fmt::Debug for CoordinateArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?} in n={}", self.kind, self.subsets(), self.n)
    }
}

/// The homological sum deciding whether `ℚ^W` lies in `R^i_d(T_K)`:
/// `Σ_{σ ∈ K_{V∖W}} dim H̃_{i−1−|σ|}(lk_{K_W}(σ))`, restricted to terms in
/// degree ≥ −1. Stops early once `cap` is reached.
fn homological_weight(k: &SimplicialComplex, i: usize, w: u64, cap: usize) -> usize {
    let outside = full_mask(k.n()) & !w;
    let mut total = 0;
    for sigma in k.faces() {
        let s = sigma.bits();
        if s & !outside != 0 || sigma.len() > i {
            continue;
        }
        let degree = i as isize - 1 - sigma.len() as isize;
        total += k.link_unchecked(s, w).reduced_betti(degree);
        if total >= cap {
            break;
        }
    }
    total
}

/// `R^i_d(T_K, ℚ)`: the maximal `W` whose homological weight is at least `d`.
pub fn toric_resonance(k: &SimplicialComplex, i: usize, d: usize) -> Result<CoordinateArrangement> {
    if d == 0 {
        return Err(Error::Precondition("depth d must be at least 1".into()));
    }
    let passing: Vec<u64> = submasks(full_mask(k.n()))
        .filter(|&w| homological_weight(k, i, w, d) >= d)
        .collect();
    Ok(CoordinateArrangement::from_masks(k.n(), passing, CoordinateKind::Linear))
}

/// `V^i_d(T_K)`: the same subsets as [`toric_resonance`], read as subtori.
pub fn toric_cv(k: &SimplicialComplex, i: usize, d: usize) -> Result<CoordinateArrangement> {
    Ok(toric_resonance(k, i, d)?.as_toric())
}

/// `R¹(G_Γ)`: the maximal `W` for which `Γ_W` is disconnected, or `[∅]` (the
/// origin) when there is none. With no vertices at all `H¹ = 0` and the
/// result is the empty set.
pub fn raag_r1(g: &Graph) -> CoordinateArrangement {
    if g.n() == 0 {
        return CoordinateArrangement::from_masks(0, [], CoordinateKind::Linear);
    }
    let mut passing: Vec<u64> = submasks(full_mask(g.n())).filter(|&w| g.is_disconnected_on(w)).collect();
    if passing.is_empty() {
        passing.push(0);
    }
    CoordinateArrangement::from_masks(g.n(), passing, CoordinateKind::Linear)
}

/// Vertex connectivity: the size of a smallest vertex set whose removal
/// disconnects the graph, `n − 1` for complete graphs, `0` if disconnected.
pub fn graph_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    let all = full_mask(n);
    (0..n)
        .find(|&size| submasks(all).any(|cut| cut.count_ones() as usize == size && g.is_disconnected_on(all & !cut)))
        .expect("a non-complete graph has a separating set")
}

/// `R^i(T_K) = ⋃_{j ≤ i} R^j_1(T_K)`.
pub fn toric_resonance_upto(k: &SimplicialComplex, i: usize) -> SubspaceArrangement {
    let mut acc = SubspaceArrangement::empty(k.n());
    for j in 0..=i {
        let r = toric_resonance(k, j, 1).expect("depth 1 is valid").to_subspaces();
        acc = acc.union(&r).expect("same ambient");
    }
    acc
}

/// Whether the `r`-plane `P` lies in `Ω^i_r(T_K)`, i.e. meets no component
/// of `R^i(T_K)` outside the origin.
pub fn toric_omega_member(k: &SimplicialComplex, i: usize, r: usize, p: &RationalSubspace) -> Result<bool> {
    check_dim(k.n(), p.ambient_dim())?;
    check_dim(r, p.dim())?;
    Ok(!meets_nontrivially(p, &toric_resonance_upto(k, i))?)
}

/// [`toric_omega_member`] for several `r`-planes, computing `R^i` once.
pub fn toric_omega_members(
    k: &SimplicialComplex,
    i: usize,
    r: usize,
    planes: &[RationalSubspace],
) -> Result<Vec<bool>> {
    let res = toric_resonance_upto(k, i);
    planes
        .iter()
        .map(|p| {
            check_dim(k.n(), p.ambient_dim())?;
            check_dim(r, p.dim())?;
            Ok(!meets_nontrivially(p, &res)?)
        })
        .collect()
}

/// Certifies `Ω¹_r(G_Γ) = ∅`.
///
/// For a non-complete graph this is `r ≥ κ + 1`. For `Kₙ` the resonance is
/// `{0}` and every plane is in `Ω`, so nothing is certified until `r > n`,
/// where the Grassmannian itself is empty.
pub fn omega_vanishing_bound(g: &Graph, r: usize) -> bool {
    if g.is_complete() {
        r > g.n()
    } else {
        r > graph_connectivity(g)
    }
}
