use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cstar_semigroup::corpus::{random_free_element, random_operator_element, random_semigroup, random_word};
use cstar_semigroup::dual::{convolve, haar, Functional};
use cstar_semigroup::quantum::{coassociativity_check, coproduct, rep, weak_antipode, weak_hopf_check};
use cstar_semigroup::{GaussianRational, OperatorElement, PartialTranslation};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn monomials_form_an_inverse_semigroup(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_semigroup(&mut r);
        let v = PartialTranslation::evaluate_word(&s, &random_word(&mut r, &s, 6)).unwrap();
        let w = PartialTranslation::evaluate_word(&s, &random_word(&mut r, &s, 6)).unwrap();
        prop_assert_eq!(v.compose(&v.adjoint()).unwrap().compose(&v).unwrap(), v.clone());
        prop_assert_eq!(v.compose(&w).unwrap().index(), v.index() + w.index());
        prop_assert_eq!(v.compose(&w).unwrap().adjoint(), w.adjoint().compose(&v.adjoint()).unwrap());
    }

    #[test]
    fn rep_is_a_star_homomorphism(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_semigroup(&mut r);
        let x = random_free_element(&mut r, &s, 3, 4);
        let y = random_free_element(&mut r, &s, 3, 4);
        prop_assert_eq!(rep(&x.multiply(&y).unwrap()), rep(&x).multiply(&rep(&y)).unwrap());
        prop_assert_eq!(rep(&x.adjoint()), rep(&x).adjoint());
        prop_assert_eq!(rep(&x.add(&y).unwrap()), rep(&x).add(&rep(&y)).unwrap());
    }

    #[test]
    fn symbol_and_split(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_semigroup(&mut r);
        let a = random_operator_element(&mut r, &s, 3, 4);
        let b = random_operator_element(&mut r, &s, 3, 4);
        prop_assert_eq!(a.multiply(&b).unwrap().symbol(), a.symbol().mul(&b.symbol()));
        let (f, k) = a.split();
        prop_assert!(k.in_ideal());
        prop_assert_eq!(OperatorElement::toeplitz_lift(&f, &s).add(&k).unwrap(), a.clone());
        let e = s.next_member(a.stabilization_threshold());
        prop_assert_eq!(a.conjugate(e).unwrap(), OperatorElement::toeplitz_lift(&a.symbol(), &s));
    }

    #[test]
    fn coproduct_structure(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_semigroup(&mut r);
        let x = random_free_element(&mut r, &s, 4, 4);
        let y = random_free_element(&mut r, &s, 2, 3);
        prop_assert!(weak_hopf_check(&x).pass());
        prop_assert!(coassociativity_check(&x));
        prop_assert_eq!(
            coproduct(&x.multiply(&y).unwrap()),
            coproduct(&x).multiply(&coproduct(&y)).unwrap()
        );
        prop_assert_eq!(weak_antipode(&weak_antipode(&x)), x.clone());
    }

    #[test]
    fn haar_absorbs_matrix_coefficients(seed in any::<u64>(), a in 0usize..5, b in 0usize..5) {
        let mut r = rng(seed);
        let s = random_semigroup(&mut r);
        let x = random_free_element(&mut r, &s, 4, 4);
        let phi = Functional::MatrixCoeff { a: s.element_at(a), b: s.element_at(b) };
        let identity = cstar_semigroup::FreeElement::identity(&s);
        let lhs = convolve(&haar(), &phi).eval(&x);
        let scale = phi.eval(&identity);
        let rhs = scale * haar().eval(&x);
        prop_assert!(lhs.agrees(&rhs, 1e-12));
        let one = GaussianRational::integer(1);
        prop_assert_eq!(haar().eval(&identity), cstar_semigroup::Scalar::Exact(one));
    }
}
