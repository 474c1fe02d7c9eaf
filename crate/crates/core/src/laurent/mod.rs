//! Laurent polynomials and the tangent cones of the hypersurfaces they
//! define, together with rank-one characteristic varieties of chain complexes
//! over `ℚ[t^{±1}]`.

mod chain;
mod polynomial;
mod tangent;
pub mod univariate;

pub use chain::{cv_rank1_chain, EquivariantChainComplex1};
pub use polynomial::LaurentPolynomial;
pub use tangent::{
    admissible_partitions, compare_tangent_cones, exp_tangent_cone, finest_admissible_partitions,
    hypersurface_tc1, link_cv1, tau1_with_certificates, tc1_is_empty, AdmissiblePartition, LinkCv,
    TangentConeComparison, Tau1Certificate, SUPPORT_LIMIT,
};
pub use univariate::UniPoly;
