use super::{Rational, RationalSubspace};
use crate::error::{check_dim, Result};

/// A finite union of linear subspaces of ℚⁿ, kept in canonical form:
/// deduplicated, with no component contained in another, sorted.
///
/// The zero subspace is an ordinary component: `[{0}]` is the variety `{0}`,
/// while an empty component list is the empty set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceArrangement {
    ambient: usize,
    components: Vec<RationalSubspace>,
}

impl SubspaceArrangement {
    /// Canonicalizes `components` by maximality pruning.
    pub fn new(ambient: usize, components: Vec<RationalSubspace>) -> Result<Self> {
        for c in &components {
            check_dim(ambient, c.ambient_dim())?;
        }
        let mut comps = components;
        // Larger subspaces first so a single pass suffices.
        comps.sort_by(|a, b| b.dim().cmp(&a.dim()).then_with(|| a.cmp(b)));
        comps.dedup();
        let mut kept: Vec<RationalSubspace> = Vec::with_capacity(comps.len());
        for c in comps {
            let covered = kept
                .iter()
                .any(|k| k.dim() >= c.dim() && k.contains(&c).expect("same ambient"));
            if !covered {
                kept.push(c);
            }
        }
        kept.sort();
        Ok(SubspaceArrangement {
            ambient,
            components: kept,
        })
    }

    pub fn empty(ambient: usize) -> Self {
        SubspaceArrangement {
            ambient,
            components: Vec::new(),
        }
    }

    /// The variety `{0}`.
    pub fn origin(ambient: usize) -> Self {
        SubspaceArrangement {
            ambient,
            components: vec![RationalSubspace::zero(ambient)],
        }
    }

    pub fn full(ambient: usize) -> Self {
        SubspaceArrangement {
            ambient,
            components: vec![RationalSubspace::full(ambient)],
        }
    }

    pub fn single(component: RationalSubspace) -> Self {
        SubspaceArrangement {
            ambient: component.ambient_dim(),
            components: vec![component],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn components(&self) -> &[RationalSubspace] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    /// True when the union is the empty set.
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_origin_only(&self) -> bool {
        self.components.len() == 1 && self.components[0].is_zero()
    }

    /// Components of positive dimension.
    pub fn positive_dimensional(&self) -> impl Iterator<Item = &RationalSubspace> {
        self.components.iter().filter(|c| !c.is_zero())
    }

    /// Codimension of the union, i.e. of its largest component.
    /// `None` for the empty set.
    pub fn codim(&self) -> Option<usize> {
        self.components.iter().map(|c| c.codim()).min()
    }

    pub fn union(&self, other: &SubspaceArrangement) -> Result<Self> {
        check_dim(self.ambient, other.ambient)?;
        let mut comps = self.components.clone();
        comps.extend(other.components.iter().cloned());
        Self::new(self.ambient, comps)
    }

    /// Set-theoretic intersection of the two unions.
    pub fn intersect(&self, other: &SubspaceArrangement) -> Result<Self> {
        check_dim(self.ambient, other.ambient)?;
        let mut comps = Vec::new();
        for a in &self.components {
            for b in &other.components {
                comps.push(a.intersect(b)?);
            }
        }
        Self::new(self.ambient, comps)
    }

    /// `self × other` inside ℚ^{n₁+n₂}.
    pub fn product(&self, other: &SubspaceArrangement) -> Self {
        let comps = self
            .components
            .iter()
            .flat_map(|a| other.components.iter().map(move |b| a.direct_product(b)))
            .collect();
        Self::new(self.ambient + other.ambient, comps).expect("product dimensions agree")
    }

    pub fn contains_vector(&self, v: &[Rational]) -> Result<bool> {
        check_dim(self.ambient, v.len())?;
        for c in &self.components {
            if c.contains_vector(v)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Whether `p` meets some component of `arrangement` in a nonzero vector,
/// i.e. whether `p` lies in the incidence variety σ_r of the arrangement.
pub fn meets_nontrivially(p: &RationalSubspace, arrangement: &SubspaceArrangement) -> Result<bool> {
    check_dim(arrangement.ambient_dim(), p.ambient_dim())?;
    for c in arrangement.components() {
        // Cheap dimension count first.
        if p.dim() + c.dim() > p.ambient_dim() || p.intersect(c)?.dim() >= 1 {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::qvec;

    #[test]
    fn pruning_removes_contained_components() {
        let a = SubspaceArrangement::new(
            3,
            vec![
                RationalSubspace::coordinate(3, [0]),
                RationalSubspace::coordinate(3, [0, 1]),
                RationalSubspace::zero(3),
                RationalSubspace::coordinate(3, [0, 1]),
                RationalSubspace::coordinate(3, [2]),
            ],
        )
        .unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a.codim(), Some(1));
    }

    #[test]
    fn meets_all_ones_line_vs_hyperplane() {
        let p = RationalSubspace::span(3, &[qvec(&[1, 1, 1])]).unwrap();
        let v = SubspaceArrangement::single(RationalSubspace::from_equations(3, &[qvec(&[0, 1, 0])]).unwrap());
        assert!(!meets_nontrivially(&p, &v).unwrap());
    }

    #[test]
    fn plane_always_meets_hyperplane() {
        let p = RationalSubspace::span(4, &[qvec(&[1, 2, 3, 4]), qvec(&[0, 1, -1, 5])]).unwrap();
        let v = SubspaceArrangement::single(RationalSubspace::from_equations(4, &[qvec(&[1, 1, 0, 7])]).unwrap());
        assert!(meets_nontrivially(&p, &v).unwrap());
    }

    #[test]
    fn subspace_meets_itself() {
        let p = RationalSubspace::span(3, &[qvec(&[1, 0, 2])]).unwrap();
        assert!(meets_nontrivially(&p, &SubspaceArrangement::single(p.clone())).unwrap());
    }

    #[test]
    fn origin_component_never_meets() {
        let p = RationalSubspace::full(2);
        assert!(!meets_nontrivially(&p, &SubspaceArrangement::origin(2)).unwrap());
    }

    #[test]
    fn mismatched_dims_error() {
        let p = RationalSubspace::full(2);
        assert!(meets_nontrivially(&p, &SubspaceArrangement::origin(3)).is_err());
    }
}
