use jumploci::qlinalg::RationalSubspace;
use jumploci::simplicial::{
    enumerate_complexes, reduced_euler_from_betti, reduced_euler_from_faces, Simplex,
    SimplicialComplex,
};
use proptest::prelude::*;

fn random_complex() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=7).prop_flat_map(|n| {
        prop::collection::vec(1u64..(1 << n), 0..6)
            .prop_map(move |masks| {
                let mut k = SimplicialComplex::from_facet_masks(n, masks);
                // Add the remaining vertices as isolated points.
                let missing = !k.vertex_mask() & ((1u64 << n) - 1);
                let facets: Vec<Vec<usize>> = k
                    .facets()
                    .into_iter()
                    .map(|s| s.vertices())
                    .chain(Simplex::from_bits(missing).vertices().into_iter().map(|v| vec![v]))
                    .collect();
                k = SimplicialComplex::new(n, &facets).unwrap();
                k
            })
    })
}

/// dim ker ∂_i − dim im ∂_{i+1}, the image measured as a column span.
fn betti_by_rank_nullity(k: &SimplicialComplex, i: isize) -> usize {
    let d = k.boundary_matrix(i);
    let kernel = if i < 0 { k.face_count(i) } else { d.kernel().len() };
    let up = k.boundary_matrix(i + 1);
    let cols: Vec<_> = (0..up.cols()).map(|c| up.column(c)).collect();
    let image = RationalSubspace::span(up.rows(), &cols).unwrap().dim();
    kernel - image
}

#[test]
fn betti_matches_rank_nullity_on_small_complexes() {
    for n in 1..=5 {
        for k in enumerate_complexes(n) {
            for i in -1..=k.dim() {
                assert_eq!(k.reduced_betti(i), betti_by_rank_nullity(&k, i), "{k:?} degree {i}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_characteristic_consistency(k in random_complex()) {
        prop_assert_eq!(reduced_euler_from_faces(&k), reduced_euler_from_betti(&k));
    }

    #[test]
    fn link_of_empty_is_induced(k in random_complex(), w in 0u64..128) {
        let w = w & ((1u64 << k.n()) - 1);
        prop_assert_eq!(k.link_in_induced_mask(Simplex::EMPTY, w).unwrap(), k.induced_mask(w));
    }
}
