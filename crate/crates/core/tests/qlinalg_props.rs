use jumploci::qlinalg::{coset_in_subspace_mod_lattice, int, rat, Rational, RationalSubspace};
use proptest::prelude::*;

fn small_vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..=max)
}

fn to_q(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn subspace(n: usize, gens: &[Vec<i64>]) -> RationalSubspace {
    let vs: Vec<_> = gens.iter().map(|g| to_q(g)).collect();
    RationalSubspace::span(n, &vs).unwrap()
}

fn box_points(n: usize, b: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-b..=b).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_equality_is_subspace_equality(a in small_vectors(3, 3), b in small_vectors(3, 3)) {
        let u = subspace(3, &a);
        let v = subspace(3, &b);
        let mutual = u.contains(&v).unwrap() && v.contains(&u).unwrap();
        prop_assert_eq!(mutual, u == v);
    }

    #[test]
    fn grassmann_dimension_formula(a in small_vectors(4, 4), b in small_vectors(4, 4)) {
        let u = subspace(4, &a);
        let v = subspace(4, &b);
        let cap = u.intersect(&v).unwrap();
        let sum = u.sum(&v).unwrap();
        prop_assert!(u.contains(&cap).unwrap() && v.contains(&cap).unwrap());
        prop_assert_eq!(u.dim() + v.dim(), sum.dim() + cap.dim());
    }

    #[test]
    fn coset_agrees_with_brute_force(
        n in 1usize..=4,
        gens in small_vectors(4, 3),
        nums in prop::collection::vec(-4i64..=4, 4),
        dens in prop::collection::vec(1i64..=4, 4),
    ) {
        let gens: Vec<Vec<i64>> = gens.into_iter().map(|g| g[..n].to_vec()).collect();
        let u = subspace(n, &gens);
        let q: Vec<Rational> = (0..n).map(|i| rat(nums[i], dens[i])).collect();
        let fast = coset_in_subspace_mod_lattice(&q, &u).unwrap();
        let brute = box_points(n, 3).into_iter().any(|m| {
            let d: Vec<Rational> = q.iter().zip(&m).map(|(x, &k)| x - int(k)).collect();
            u.contains_vector(&d).unwrap()
        });
        if brute {
            prop_assert!(fast);
        }
    }
}
