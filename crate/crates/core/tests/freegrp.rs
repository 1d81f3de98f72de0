use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tilt_core::exactlin::{Field, FieldMatrix, PrimeField};
use tilt_core::freegrp::{
    envelope_value, envelope_value_linear, flatness_witness, ga_mul, parse_reduce, FreeGroupError, FreeWord, GroupAlgElem,
    XDivModule,
};

fn f7() -> PrimeField {
    PrimeField::new(7).unwrap()
}

fn xy() -> Vec<String> {
    vec!["x".to_string(), "y".to_string()]
}

fn word(text: &str) -> FreeWord {
    parse_reduce(text, &xy()).unwrap()
}

fn scalars(x: i64, y: i64) -> XDivModule<PrimeField> {
    let m = |v| FieldMatrix::from_i64_rows(f7(), 1, 1, &[vec![v]]);
    XDivModule::new(f7(), 1, vec![m(x), m(y)], &xy()).unwrap()
}

#[test]
fn reduction_examples() {
    assert_eq!(word("x y y^-1 x").render(&xy()), "x x");
    assert!(word("").is_identity());
    assert_eq!(word("x^-1 x y").render(&xy()), "y");
    assert_eq!(parse_reduce("x w", &xy()), Err(FreeGroupError::UnknownSymbol("w".to_string())));
}

#[test]
fn product_examples() {
    let g = |t: &str| GroupAlgElem::from_word(f7(), word(t));
    assert_eq!(ga_mul(&g("x"), &g("x^-1")), GroupAlgElem::one(f7()));
    let sum = g("x").add(&g("y"));
    assert_eq!(ga_mul(&sum, &GroupAlgElem::one(f7())), sum);
    let sq = ga_mul(&g("x"), &g("x"));
    assert_eq!(sq.terms().len(), 1);
    assert_eq!(sq.terms().get(&word("x x")), Some(&1));
}

#[test]
fn envelope_examples() {
    let m = scalars(2, 3);
    assert_eq!(envelope_value(&[1], &word("x^-1"), &m).unwrap(), vec![4]);
    assert_eq!(envelope_value(&[5], &FreeWord::identity(), &m).unwrap(), vec![5]);
    assert_eq!(envelope_value(&[1], &word("x y"), &m).unwrap(), vec![6]);
    assert_eq!(envelope_value(&[1, 0], &word("x"), &m), Err(FreeGroupError::BadVector));
}

#[test]
fn non_invertible_action_is_rejected() {
    let m = |v| FieldMatrix::from_i64_rows(f7(), 1, 1, &[vec![v]]);
    assert_eq!(XDivModule::new(f7(), 1, vec![m(0), m(1)], &xy()), Err(FreeGroupError::NotInvertible("x".to_string())));
}

#[test]
fn flatness_examples() {
    let w = flatness_witness(&f7(), 0, 1).unwrap();
    assert!(w.image.is_zero());
    assert!(!w.element.0.is_zero() && !w.element.1.is_zero());
    let v = flatness_witness(&f7(), 1, 0).unwrap();
    assert_eq!(v.element.0, w.element.1.neg());
    assert_eq!(v.element.1, w.element.0.neg());
    assert_eq!(flatness_witness(&f7(), 1, 1).unwrap_err(), FreeGroupError::SameGenerator);
}

fn random_letters(rng: &mut ChaCha8Rng, symbols: usize, max_len: usize) -> Vec<(usize, i8)> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| (rng.gen_range(0..symbols), if rng.gen_bool(0.5) { 1 } else { -1 })).collect()
}

fn random_module(rng: &mut ChaCha8Rng, symbols: usize) -> XDivModule<PrimeField> {
    let dim = rng.gen_range(1..=3);
    let alphabet: Vec<String> = (0..symbols).map(|i| format!("g{i}")).collect();
    let action = (0..symbols).map(|_| FieldMatrix::random_invertible(f7(), dim, rng)).collect();
    XDivModule::new(f7(), dim, action, &alphabet).unwrap()
}

fn random_elem(rng: &mut ChaCha8Rng) -> GroupAlgElem<PrimeField> {
    let n = rng.gen_range(0..=5);
    GroupAlgElem::from_terms(f7(), (0..n).map(|_| (FreeWord::from_letters(random_letters(rng, 2, 4)), f7().random(rng))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn envelope_respects_the_action(seed in any::<u64>(), symbols in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let module = random_module(&mut rng, symbols);
        let m0: Vec<u64> = (0..module.dimension()).map(|_| f7().random(&mut rng)).collect();
        let g = FreeWord::from_letters(random_letters(&mut rng, symbols, 12));
        prop_assert!(g.len() <= 12);
        let s = FreeWord::letter(rng.gen_range(0..symbols), if rng.gen_bool(0.5) { 1 } else { -1 });
        let lhs = envelope_value(&m0, &g.mul(&s), &module).unwrap();
        let rhs = module.act(&envelope_value(&m0, &g, &module).unwrap(), &s);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn positive_words_act_directly(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let module = random_module(&mut rng, 2);
        let m0: Vec<u64> = (0..module.dimension()).map(|_| f7().random(&mut rng)).collect();
        let letters: Vec<usize> = (0..rng.gen_range(0..=8)).map(|_| rng.gen_range(0..2)).collect();
        let mut expected = m0.clone();
        for &s in &letters {
            expected = module.action(s).transpose().mul_vec(&expected);
        }
        let g = FreeWord::from_letters(letters.iter().map(|&s| (s, 1)));
        prop_assert_eq!(envelope_value(&m0, &g, &module).unwrap(), expected);
    }

    #[test]
    fn reduction_is_idempotent_and_confluent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = FreeWord::from_letters(random_letters(&mut rng, 2, 10));
        prop_assert_eq!(parse_reduce(&w.render(&xy()), &xy()).unwrap(), w.clone());
        // insert a cancelling pair anywhere and reduce again
        let mut letters = w.letters().to_vec();
        let at = rng.gen_range(0..=letters.len());
        let s = rng.gen_range(0..2);
        let e: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
        letters.splice(at..at, [(s, e), (s, -e)]);
        prop_assert_eq!(FreeWord::from_letters(letters), w.clone());
        prop_assert!(w.mul(&w.inverse()).is_identity());
    }

    #[test]
    fn group_algebra_is_associative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (random_elem(&mut rng), random_elem(&mut rng), random_elem(&mut rng));
        prop_assert_eq!(ga_mul(&ga_mul(&a, &b), &c), ga_mul(&a, &ga_mul(&b, &c)));
    }

    #[test]
    fn linear_envelope_is_a_module_map(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let module = random_module(&mut rng, 2);
        let m0: Vec<u64> = (0..module.dimension()).map(|_| f7().random(&mut rng)).collect();
        let a = random_elem(&mut rng);
        let g = FreeWord::from_letters(random_letters(&mut rng, 2, 4));
        let ag = ga_mul(&a, &GroupAlgElem::from_word(f7(), g.clone()));
        let lhs = envelope_value_linear(&m0, &ag, &module).unwrap();
        let rhs = module.act(&envelope_value_linear(&m0, &a, &module).unwrap(), &g);
        prop_assert_eq!(lhs, rhs);
    }
}
