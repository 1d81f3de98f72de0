use std::sync::Arc;

use num::rational::Ratio;
use num::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tilt_core::artheory::{
    a31_tube_modules, build_extension, decompose, is_atomic_full, is_full, is_indecomposable, is_isomorphic, is_regular, tau,
    tau_minus, transpose, tube_catalog, u_filtration, BoundSet, DefectFunction, SearchBudget, TubeFamily,
};
use tilt_core::exactlin::{FieldMatrix, PrimeField};
use tilt_core::quiverrep::{
    ext1_dim, hom_space, is_projective, proj_presentation, projective, regular_module, Quiver, QuiverRep, RepMap,
};

fn f5() -> PrimeField {
    PrimeField::new(5).unwrap()
}

fn kron() -> Arc<Quiver> {
    Arc::new(Quiver::kronecker())
}

fn r_lambda(q: &Arc<Quiver>, lambda: i64) -> QuiverRep<PrimeField> {
    let m = |x| FieldMatrix::from_i64_rows(f5(), 1, 1, &[vec![x]]);
    QuiverRep::new(q.clone(), f5(), vec![1, 1], vec![m(1), m(lambda)]).unwrap()
}

fn random_rep(q: &Arc<Quiver>, max: usize, rng: &mut ChaCha8Rng) -> QuiverRep<PrimeField> {
    let dims = (0..q.vertex_count()).map(|_| rng.gen_range(0..=max)).collect();
    QuiverRep::random(q.clone(), f5(), dims, rng)
}

fn corpus() -> [Arc<Quiver>; 2] {
    [kron(), Arc::new(Quiver::a31())]
}

fn is_injective(m: &QuiverRep<PrimeField>) -> bool {
    is_projective(&m.dual())
}

/// `m` with every summand matching `drop` removed.
fn without(m: &QuiverRep<PrimeField>, seed: u64, drop: fn(&QuiverRep<PrimeField>) -> bool) -> QuiverRep<PrimeField> {
    let mut parts = Vec::new();
    for (s, k) in decompose(m, seed).unwrap() {
        if !drop(&s) {
            parts.extend(std::iter::repeat_n(s, k));
        }
    }
    QuiverRep::direct_sum_all(m.quiver().clone(), f5(), &parts).unwrap()
}

fn bound_corpus() -> Vec<QuiverRep<PrimeField>> {
    let mut out: Vec<QuiverRep<PrimeField>> = Vec::new();
    for family in [TubeFamily::Kronecker, TubeFamily::A31] {
        out.extend(tube_catalog(family, &f5()).simples().cloned());
    }
    let t = a31_tube_modules(&f5()).unwrap();
    out.extend([t.s2, t.tau_s2]);
    out.push(QuiverRep::simple(kron(), f5(), 0));
    out
}

#[test]
fn transpose_examples() {
    for q in corpus() {
        for i in 0..q.vertex_count() {
            assert!(transpose(&projective(&q, &f5(), i)).is_zero());
        }
    }
    let tr = transpose(&QuiverRep::simple(kron(), f5(), 0));
    assert_eq!(tr.dims(), &[3, 2]);
    assert!(tr.quiver().same_shape(&kron().opposite()));
}

#[test]
fn double_transpose_on_bound_corpus() {
    for u in bound_corpus() {
        assert!(is_isomorphic(&transpose(&transpose(&u)), &u, 0).unwrap(), "{:?}", u.dims());
    }
}

#[test]
fn translate_examples() {
    for q in corpus() {
        for i in 0..q.vertex_count() {
            assert!(tau(&projective(&q, &f5(), i)).is_zero());
        }
    }
    let q = kron();
    for l in 0..5 {
        let r = r_lambda(&q, l);
        assert!(is_isomorphic(&tau(&r), &r, 0).unwrap());
    }
    let t = a31_tube_modules(&f5()).unwrap();
    assert!(is_isomorphic(&tau(&tau(&tau(&t.s))), &t.s, 0).unwrap());
    assert!(!is_isomorphic(&tau(&t.s), &t.s, 0).unwrap());
}

#[test]
fn decompose_examples() {
    let q = kron();
    let s1 = QuiverRep::simple(q.clone(), f5(), 0);
    let d = decompose(&s1.direct_sum(&s1).unwrap(), 0).unwrap();
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].1, 2);
    assert!(is_isomorphic(&d[0].0, &s1, 0).unwrap());

    let p1 = projective(&q, &f5(), 0);
    let d = decompose(&p1, 0).unwrap();
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].1, 1);

    let s2 = QuiverRep::simple(q.clone(), f5(), 1);
    let d = decompose(&r_lambda(&q, 2).direct_sum(&s2).unwrap(), 0).unwrap();
    assert_eq!(d.len(), 2);
}

#[test]
fn defect_examples() {
    let q = kron();
    let df = DefectFunction::new(q.clone()).unwrap();
    assert_eq!(df.radical_vector().coords, vec![1, 1]);
    assert_eq!(df.normalizer(), 2);
    assert_eq!(df.defect_of(&projective(&q, &f5(), 1)), Ratio::new(1, 2));
    assert!(df.defect_of(&r_lambda(&q, 3)).is_zero());
    for q in corpus() {
        let df = DefectFunction::new(q.clone()).unwrap();
        assert_eq!(df.defect_of(&regular_module(&q, &f5())), Ratio::from_integer(1));
        assert!(df.radical_vector().coords.contains(&1));
        for i in 0..q.vertex_count() {
            assert!(df.defect_of(&projective(&q, &f5(), i)) > Ratio::zero());
        }
    }
    let a31 = DefectFunction::new(Arc::new(Quiver::a31())).unwrap();
    assert_eq!(a31.radical_vector().coords, vec![1, 1, 1, 1]);
}

#[test]
fn regularity_examples() {
    let q = kron();
    let df = DefectFunction::new(q.clone()).unwrap();
    assert!(is_regular(&r_lambda(&q, 1), &df, 0).unwrap());
    let s1 = QuiverRep::simple(q.clone(), f5(), 0);
    assert!(!is_regular(&s1, &df, 0).unwrap());
    // the simple injective S_1 cancels the defect of P_1
    let m = projective(&q, &f5(), 0).direct_sum(&s1).unwrap();
    assert!(df.defect_of(&m).is_zero());
    assert!(!is_regular(&m, &df, 0).unwrap());
}

#[test]
fn fullness_examples() {
    let q = kron();
    let df = DefectFunction::new(q.clone()).unwrap();
    let budget = SearchBudget::default();
    let p1 = projective(&q, &f5(), 0);
    assert!(is_full(&RepMap::identity(&p1), &df, 0).unwrap());

    let pres = proj_presentation(&r_lambda(&q, 4));
    assert!(is_atomic_full(&pres.alpha, &df, &budget, 0).unwrap());

    let pres = proj_presentation(&QuiverRep::simple(q.clone(), f5(), 0));
    assert!(!is_full(&pres.alpha, &df, 0).unwrap());
}

#[test]
fn extension_in_the_tube() {
    let t = a31_tube_modules(&f5()).unwrap();
    assert!(ext1_dim(&t.tau_minus_s, &t.s).unwrap() > 0);
    let mid = build_extension(&t.tau_minus_s, &t.s, 0).unwrap();
    let expected: Vec<usize> = t.tau_minus_s.dims().iter().zip(t.s.dims()).map(|(a, b)| a + b).collect();
    assert_eq!(mid.dims(), expected.as_slice());
    assert!(is_indecomposable(&mid, 0).unwrap());
    assert!(is_isomorphic(&mid, &t.s2, 0).unwrap());
}

#[test]
fn filtration_examples() {
    let t = a31_tube_modules(&f5()).unwrap();
    let budget = SearchBudget::default();
    let set = BoundSet::new(vec![t.s.clone(), t.tau_minus_s.clone()]).unwrap();
    let fil = u_filtration(&t.s2, &set, &budget).unwrap().expect("S[2] is filtered by S and tau^- S");
    assert_eq!(fil.factors, vec![0, 1]);
    assert!(fil.validate(&t.s2, &set, 0).unwrap());

    let single = BoundSet::new(vec![t.s.clone()]).unwrap();
    let fil = u_filtration(&t.s, &single, &budget).unwrap().unwrap();
    assert_eq!(fil.len(), 1);

    let q = kron();
    let set = BoundSet::new(vec![r_lambda(&q, 1)]).unwrap();
    assert!(u_filtration(&QuiverRep::simple(q, f5(), 0), &set, &budget).unwrap().is_none());
}

#[test]
fn catalogs() {
    let budget = SearchBudget::default();
    let k = tube_catalog(TubeFamily::Kronecker, &f5());
    assert_eq!(k.homogeneous.len(), 6);
    assert!(k.simples().all(|m| m.dims() == [1, 1]));
    assert!(k.verify(&budget, 0).unwrap());

    let a = tube_catalog(TubeFamily::A31, &f5());
    assert_eq!(a.ranks()[0], 3);
    let mut sum = vec![0; 4];
    for m in &a.exceptional[0] {
        for (s, d) in sum.iter_mut().zip(m.dims()) {
            *s += d;
        }
    }
    assert_eq!(sum, vec![1, 1, 1, 1]);
    assert!(a.verify(&budget, 0).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn auslander_reiten_formula(seed in any::<u64>(), which in 0usize..2) {
        let q = corpus()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = without(&random_rep(&q, 3, &mut rng), seed, is_projective);
        let n = random_rep(&q, 3, &mut rng);
        prop_assert_eq!(ext1_dim(&m, &n).unwrap(), hom_space(&n, &tau(&m)).unwrap().dim());
    }

    #[test]
    fn translates_are_inverse(seed in any::<u64>(), which in 0usize..2) {
        let q = corpus()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_rep(&q, 2, &mut rng);
        let no_proj = without(&m, seed, is_projective);
        prop_assert!(is_isomorphic(&tau_minus(&tau(&no_proj)), &no_proj, seed).unwrap());
        let no_inj = without(&m, seed, is_injective);
        prop_assert!(is_isomorphic(&tau(&tau_minus(&no_inj)), &no_inj, seed).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn decomposition_is_basis_independent(seed in any::<u64>(), which in 0usize..2) {
        let q = corpus()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_rep(&q, 3, &mut rng);
        let n = m.random_conjugate(&mut rng);
        let shape = |x: &QuiverRep<PrimeField>| {
            let mut v: Vec<(Vec<usize>, usize)> =
                decompose(x, seed).unwrap().into_iter().map(|(s, k)| (s.dims().to_vec(), k)).collect();
            v.sort();
            v
        };
        prop_assert_eq!(shape(&m), shape(&n));
    }

    #[test]
    fn filtrations_revalidate(seed in any::<u64>(), picks in prop::collection::vec(0usize..5, 1..=3)) {
        let t = a31_tube_modules(&f5()).unwrap();
        let pool = [t.s.clone(), t.tau_s.clone(), t.tau_minus_s.clone(), t.s2.clone(), t.tau_s2.clone()];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let members: Vec<_> = picks.iter().map(|&i| pool[i].clone()).collect();
        let set = BoundSet::new(members).unwrap();
        let n = pool[rng.gen_range(0..pool.len())].random_conjugate(&mut rng);
        if let Some(fil) = u_filtration(&n, &set, &SearchBudget::default()).unwrap() {
            prop_assert!(fil.validate(&n, &set, seed).unwrap());
        }
    }
}
