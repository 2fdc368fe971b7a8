mod common;

use std::sync::Arc;

use capelli_core::capelli::ElementName;
use capelli_core::coeff::int;
use capelli_core::ncmatrix::generator_matrix;
use capelli_core::oracle::{free_product, highest_weight_action, TensorModule};
use capelli_core::{weight_from_partition, AlgebraKind, EnvElement, GenId, Rat, RatMatrix, Realization, UnivPoly};
use common::{all_realizations, assert_jacobi, random_element, standard};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn engine_agrees_with_rewriting_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for alg in all_realizations(3, 1) {
        for _ in 0..200 {
            let a = random_element(&alg, 3, 2, &mut rng);
            let b = random_element(&alg, 3, 2, &mut rng);
            let engine = &a * &b;
            let first = free_product(&a, &b, &mut rng).unwrap();
            let second = free_product(&a, &b, &mut rng).unwrap();
            assert_eq!(first, second, "rewriting order changed the normal form over {}", alg.descriptor());
            assert_eq!(engine, first, "{} : ({a}) * ({b})", alg.descriptor());
        }
    }
}

#[test]
fn oracle_trivial_products() {
    let alg = Realization::gl(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let one = EnvElement::one(&alg);
    assert_eq!(free_product(&one, &one, &mut rng).unwrap(), one);
    let e12 = EnvElement::symbol(&alg, 1, 2).unwrap();
    let e21 = EnvElement::symbol(&alg, 2, 1).unwrap();
    assert_eq!(free_product(&e12, &e21, &mut rng).unwrap(), &e12 * &e21);
}

#[test]
fn jacobi_on_all_basis_triples() {
    for alg in all_realizations(6, 2) {
        assert_jacobi(&alg);
    }
}

fn combo_matrix(alg: &Realization, v: &[(GenId, Rat)]) -> RatMatrix {
    let n = alg.size();
    let mut m = RatMatrix::zeros(n, n);
    for (g, c) in v {
        m = &m + &alg.matrix(*g).scale(c);
    }
    m
}

#[test]
fn brackets_match_matrix_commutators() {
    for alg in all_realizations(6, 3) {
        for a in alg.basis() {
            for b in alg.basis() {
                let expected = alg.matrix(a).commutator(alg.matrix(b));
                assert_eq!(combo_matrix(&alg, alg.bracket(a, b)), expected, "{}", alg.descriptor());
            }
        }
    }
}

#[test]
fn generator_matrix_transforms_infinitesimally() {
    for alg in all_realizations(4, 4) {
        let m = generator_matrix(&alg);
        for x in alg.basis() {
            let gen = EnvElement::generator(&alg, x);
            let t = alg.matrix(x).transpose();
            let left = m.left_mul(&t).unwrap();
            let right = m.right_mul(&t).unwrap();
            for i in 0..alg.size() {
                for j in 0..alg.size() {
                    let lhs = gen.commutator(m.get(i, j)).unwrap();
                    let rhs = left.get(i, j) - right.get(i, j);
                    assert_eq!(lhs, rhs, "{} X={} entry ({i},{j})", alg.descriptor(), alg.label(x));
                }
            }
        }
    }
}

fn commutative_product(a: &EnvElement, b: &EnvElement) -> EnvElement {
    let mut out = EnvElement::zero(a.realization());
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let mut m = ma.clone();
            m.extend_from_slice(mb);
            m.sort();
            out = &out + &EnvElement::from_terms(a.realization(), [(m, ca * cb)]).unwrap();
        }
    }
    out
}

#[test]
fn eigenvalues_match_highest_weight_action() {
    let u = UnivPoly::u();
    let cases: Vec<(Arc<Realization>, ElementName, usize)> = vec![
        (Realization::gl(2).unwrap(), ElementName::CGl, 2),
        (Realization::gl(3).unwrap(), ElementName::CGl, 3),
        (Realization::gl(3).unwrap(), ElementName::CGlK, 2),
        (Realization::gl(3).unwrap(), ElementName::DGlK, 2),
        (Realization::o_split(2).unwrap(), ElementName::COS0, 2),
        (Realization::o_split(3).unwrap(), ElementName::COS0K, 2),
        (Realization::sp_split(2).unwrap(), ElementName::DSp, 2),
        (Realization::sp_split(2).unwrap(), ElementName::DSp, 3),
    ];
    for (alg, name, k) in cases {
        let e = name.build(&alg, k, &u).unwrap();
        let n = alg.size();
        let modules = [TensorModule::Symmetric(1), TensorModule::Symmetric(2), TensorModule::Exterior(1)]
            .into_iter()
            .chain((2..=n / 2).map(TensorModule::Exterior));
        for module in modules {
            let mut hw: Vec<Rat> = module.highest_weight(n).into_iter().map(|x| int(x as i64)).collect();
            if alg.kind() != AlgebraKind::Gl {
                hw.truncate(n / 2);
            }
            let w = weight_from_partition(&alg, &hw).unwrap();
            let direct = highest_weight_action(&e, module).expect("highest weight vector is an eigenvector");
            assert_eq!(e.eigenvalue(&w).unwrap(), direct, "{name} k={k} over {} on {module:?}", alg.descriptor());
        }
    }
}

#[test]
fn gl_desk_eigenvalue() {
    let alg = Realization::gl(2).unwrap();
    let c = ElementName::CGl.build(&alg, 2, &UnivPoly::u()).unwrap();
    let direct = highest_weight_action(&c, TensorModule::Symmetric(1)).unwrap();
    let expected = UnivPoly::from_terms([(2, int(1)), (1, int(2))]);
    assert_eq!(direct, expected);
    let w = weight_from_partition(&alg, &[int(1), int(0)]).unwrap();
    assert_eq!(c.eigenvalue(&w).unwrap(), expected);
}

fn realization_strategy() -> impl Strategy<Value = Arc<Realization>> {
    let algs: Vec<Arc<Realization>> = (1..=4).flat_map(standard).collect();
    proptest::sample::select(algs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn multiplication_is_associative(alg in realization_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(&alg, 3, 3, &mut rng);
        let b = random_element(&alg, 3, 3, &mut rng);
        let c = random_element(&alg, 3, 3, &mut rng);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn products_respect_the_filtration(alg in realization_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(&alg, 3, 3, &mut rng);
        let b = random_element(&alg, 3, 3, &mut rng);
        let ab = &a * &b;
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert!(ab.degree().unwrap_or(0) <= da + db);
            prop_assert_eq!(ab.top_degree_part(), commutative_product(&a.top_degree_part(), &b.top_degree_part()));
        } else {
            prop_assert!(ab.is_zero());
        }
    }
}
