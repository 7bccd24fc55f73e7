use std::sync::Arc;

use homcert_core::exactlin::{vector, Matrix, Rational, Tensor3};
use homcert_core::functors::{commutator_lie, prelie_to_lie, scale};
use homcert_core::homcore::axioms::kind_identities;
use homcert_core::homcore::{
    check_axioms, check_predicate, check_rota_baxter, is_multiplicative, HomAlgebra, Kind, Predicate, MUL,
};
use homcert_core::hommod::{bimodule_to_lie_module, check_oop, regular_module};
use homcert_core::search::{brute_force_oop_search, random_instance, Generator, RandomInstanceSpec};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n, d))
}

fn small_matrix(max_dim: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        prop::collection::vec(-2i64..=2, r * c)
            .prop_map(move |v| Matrix::new(r, c, v.into_iter().map(Rational::from).collect()).unwrap())
    })
}

fn small_tensor(n: usize) -> impl Strategy<Value = Tensor3> {
    prop::collection::vec(-1i64..=1, n * n * n)
        .prop_map(move |v| Tensor3::new(n, n, n, v.into_iter().map(Rational::from).collect()).unwrap())
}

fn twist(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-1i64..=1, n * n)
        .prop_map(move |v| Matrix::new(n, n, v.into_iter().map(Rational::from).collect()).unwrap())
}

fn instance(kind: Kind) -> impl Strategy<Value = HomAlgebra> {
    (any::<u64>(), 1usize..=3, 0usize..4).prop_filter_map("no instance for this spec", move |(seed, dim, g)| {
        random_instance(&RandomInstanceSpec::new(kind, dim, seed, Generator::ALL[g])).ok()
    })
}

/// Whether every identity of `a`'s kind has zero defect at the given vectors.
fn holds_at(a: &HomAlgebra, points: &[Vec<Rational>]) -> bool {
    kind_identities(a).unwrap().iter().all(|id| {
        let args: Vec<_> = points.iter().take(id.arity()).cloned().collect();
        vector::is_zero(&id.defect(&args))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_text_round_trip(q in rational()) {
        let back: Rational = q.to_string().parse().unwrap();
        prop_assert_eq!(back, q);
    }

    #[test]
    fn nullspace_is_exact_and_complete(m in small_matrix(6)) {
        let ns = m.nullspace();
        for v in &ns {
            prop_assert!(vector::is_zero(&m.mul_vec(v).unwrap()));
        }
        prop_assert!(vector::independent(&ns));
        prop_assert_eq!(m.rank() + ns.len(), m.cols());
    }

    #[test]
    fn evaluation_is_bilinear(
        t in small_tensor(3),
        x in prop::collection::vec(rational(), 3),
        x2 in prop::collection::vec(rational(), 3),
        y in prop::collection::vec(rational(), 3),
        a in rational(),
        b in rational(),
    ) {
        let comb = vector::add(&vector::scale(&x, &a), &vector::scale(&x2, &b));
        let lhs = t.bilinear_eval(&comb, &y).unwrap();
        let rhs = vector::add(
            &vector::scale(&t.bilinear_eval(&x, &y).unwrap(), &a),
            &vector::scale(&t.bilinear_eval(&x2, &y).unwrap(), &b),
        );
        prop_assert_eq!(&lhs, &rhs);
        let lhs = t.bilinear_eval(&y, &comb).unwrap();
        let rhs = vector::add(
            &vector::scale(&t.bilinear_eval(&y, &x).unwrap(), &a),
            &vector::scale(&t.bilinear_eval(&y, &x2).unwrap(), &b),
        );
        prop_assert_eq!(lhs, rhs);
    }

    /// A basis pass means every random point passes; a basis failure is
    /// seen at some random point with probability one, so 50 points suffice.
    #[test]
    fn basis_check_matches_random_points(
        kind_index in 0usize..3,
        t in small_tensor(2),
        alpha in twist(2),
        points in prop::collection::vec(prop::collection::vec(rational(), 2), 150),
    ) {
        let (kind, name) = [(Kind::HomAssociative, MUL), (Kind::HomPreLie, MUL), (Kind::HomNovikov, MUL)][kind_index];
        let a = HomAlgebra::with_product(kind, name, t, alpha).unwrap();
        let basis = check_axioms(&a).unwrap().passed;
        let random = points.chunks(3).all(|p| holds_at(&a, p));
        prop_assert_eq!(basis, random);
    }

    #[test]
    fn scaling_a_product_preserves_status(t in small_tensor(2), alpha in twist(2), k in rational()) {
        prop_assume!(!k.is_zero());
        for kind in [Kind::HomAssociative, Kind::HomPreLie] {
            let a = HomAlgebra::with_product(kind, MUL, t.clone(), alpha.clone()).unwrap();
            let b = HomAlgebra::with_product(kind, MUL, t.scale(&k), alpha.clone()).unwrap();
            prop_assert_eq!(check_axioms(&a).unwrap().passed, check_axioms(&b).unwrap().passed);
        }
    }

    #[test]
    fn associative_implies_lie_admissible(a in instance(Kind::HomAssociative)) {
        prop_assert!(check_predicate(&a, Predicate::LieAdmissible).unwrap().passed);
        prop_assert!(commutator_lie(&a).unwrap().passed());
        prop_assert!(check_rota_baxter(&a, &Matrix::identity(a.dim()), &Rational::from(-1)).unwrap().cert.passed);
        let multiplicative = is_multiplicative(&a);
        let md = regular_module(Arc::new(a)).unwrap();
        let lie = bimodule_to_lie_module(&md).unwrap();
        prop_assert!(lie.cert.axiom("module-bracket").unwrap().passed);
        if multiplicative {
            prop_assert!(lie.passed());
        }
    }

    #[test]
    fn prelie_commutator_is_lie(a in instance(Kind::HomPreLie)) {
        prop_assert!(prelie_to_lie(&a).unwrap().passed());
        let n = a.dim();
        let md = regular_module(Arc::new(a)).unwrap();
        prop_assert!(check_oop(&Matrix::zeros(n, n), &md).unwrap().passed);
    }

    #[test]
    fn postlie_scaling_certifies(a in instance(Kind::HomPostLie), k in rational()) {
        prop_assume!(!k.is_zero());
        prop_assert!(scale(&a, &k).unwrap().passed());
    }

    #[test]
    fn random_instances_are_deterministic(seed in any::<u64>(), dim in 1usize..=3, g in 0usize..4, kind in 0usize..8) {
        let spec = RandomInstanceSpec::new(Kind::ALL[kind], dim, seed, Generator::ALL[g]);
        let a = random_instance(&spec).map(|a| a.digest()).map_err(|e| e.to_string());
        let b = random_instance(&spec).map(|a| a.digest()).map_err(|e| e.to_string());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn functor_results_replay(a in instance(Kind::HomAssociative)) {
        let first = commutator_lie(&a).unwrap();
        let second = commutator_lie(&a).unwrap();
        prop_assert_eq!(first.value.digest(), second.value.digest());
        prop_assert_eq!(first.provenance, second.provenance);
    }
}

#[test]
fn abelian_lie_operators_are_closed_under_negation() {
    for n in 1..=2 {
        let a = Arc::new(HomAlgebra::zero(Kind::HomLie, Matrix::identity(n)).unwrap());
        let md = regular_module(a).unwrap();
        let found = brute_force_oop_search(&md, 1, 100_000).unwrap();
        assert_eq!(found.len(), 3usize.pow((n * n) as u32));
        for t in &found {
            assert!(found.contains(&t.neg()));
        }
    }
}
