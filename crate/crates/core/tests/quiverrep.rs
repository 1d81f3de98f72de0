use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tilt_core::artheory::{a31_tube_modules, is_isomorphic};
use tilt_core::exactlin::{FieldMatrix, PrimeField};
use tilt_core::quiverrep::{
    euler_form, ext1_dim, ext1_dim_with, hom_space, proj_presentation, projective, regular_module, tor1_dim, K0Class, Quiver,
    QuiverRep,
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

#[test]
fn projective_dimensions() {
    let q = kron();
    assert_eq!(projective(&q, &f5(), 1).dims(), &[0, 1]);
    assert_eq!(projective(&q, &f5(), 0).dims(), &[1, 2]);
    for q in corpus() {
        let mut total = vec![0; q.vertex_count()];
        for i in 0..q.vertex_count() {
            for (t, d) in total.iter_mut().zip(projective(&q, &f5(), i).dims()) {
                *t += d;
            }
        }
        assert_eq!(regular_module(&q, &f5()).dims(), total.as_slice());
    }
}

#[test]
fn hom_examples() {
    let q = kron();
    let s1 = QuiverRep::simple(q.clone(), f5(), 0);
    let s2 = QuiverRep::simple(q.clone(), f5(), 1);
    assert_eq!(hom_space(&s1, &s2).unwrap().dim(), 0);
    assert!(hom_space(&r_lambda(&q, 3), &r_lambda(&q, 3)).unwrap().dim() >= 1);
    let p1 = projective(&q, &f5(), 0);
    assert_eq!(hom_space(&p1, &p1).unwrap().dim(), 1);
}

#[test]
fn presentation_examples() {
    let q = kron();
    let p2 = projective(&q, &f5(), 1);
    let pres = proj_presentation(&p2);
    assert!(pres.p.is_zero());
    assert!(is_isomorphic(&pres.q, &p2, 0).unwrap());

    let pres = proj_presentation(&QuiverRep::simple(q.clone(), f5(), 0));
    assert_eq!(pres.p.dims(), &[0, 2]);
    assert_eq!(pres.q.dims(), &[1, 2]);

    let pres = proj_presentation(&r_lambda(&q, 2));
    assert_eq!(pres.p.dims(), &[0, 1]);
    assert_eq!(pres.q.dims(), &[1, 2]);
}

#[test]
fn ext_examples() {
    let q = kron();
    let s1 = QuiverRep::simple(q.clone(), f5(), 0);
    let s2 = QuiverRep::simple(q.clone(), f5(), 1);
    assert_eq!(ext1_dim(&s1, &s2).unwrap(), 2);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for q in corpus() {
        for i in 0..q.vertex_count() {
            let p = projective(&q, &f5(), i);
            for _ in 0..5 {
                assert_eq!(ext1_dim(&p, &random_rep(&q, 3, &mut rng)).unwrap(), 0);
            }
        }
    }
    let t = a31_tube_modules(&f5()).unwrap();
    assert_eq!(ext1_dim(&t.s2, &t.s).unwrap(), 0);
}

#[test]
fn tor_of_projectives_vanishes() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for q in corpus() {
        let qop = Arc::new(q.opposite());
        for i in 0..q.vertex_count() {
            let p = projective(&q, &f5(), i);
            let x = random_rep(&qop, 3, &mut rng);
            assert_eq!(tor1_dim(&p, &x).unwrap().tor1, 0);
        }
    }
}

#[test]
fn tor_against_dual_injective() {
    // Tor1(M, DN) is dual to Ext1(M, N)
    let q = kron();
    let s1 = QuiverRep::simple(q.clone(), f5(), 0);
    let i1 = s1.clone();
    assert_eq!(tor1_dim(&s1, &i1.dual()).unwrap().tor1, ext1_dim(&s1, &i1).unwrap());
}

#[test]
fn euler_examples() {
    let q = Quiver::kronecker();
    let k = |v: &[i64]| K0Class::new(v.to_vec());
    assert_eq!(euler_form(&q, &k(&[1, 0]), &k(&[0, 1])), -2);
    assert_eq!(euler_form(&q, &k(&[3, 4]), &k(&[0, 0])), 0);
    assert_eq!(euler_form(&q, &k(&[1, 1]), &k(&[1, 1])), 0);
}

#[test]
fn direct_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let q = kron();
    let m = random_rep(&q, 3, &mut rng);
    let n = random_rep(&q, 3, &mut rng);
    let zero = QuiverRep::zero(q.clone(), f5());
    assert!(is_isomorphic(&m.direct_sum(&zero).unwrap(), &m, 0).unwrap());
    let s = m.direct_sum(&n).unwrap();
    let expected: Vec<usize> = m.dims().iter().zip(n.dims()).map(|(a, b)| a + b).collect();
    assert_eq!(s.dims(), expected.as_slice());
}

#[test]
fn regular_socle_of_the_length_two_module() {
    let t = a31_tube_modules(&f5()).unwrap();
    let f = f5();
    let at_vertex = |v: usize| -> Vec<FieldMatrix<PrimeField>> {
        (0..4)
            .map(|w| if w == v { FieldMatrix::identity(f, t.s2.dims()[w]) } else { FieldMatrix::zeros(f, t.s2.dims()[w], 0) })
            .collect()
    };
    let basis = at_vertex(1);
    assert!(t.s2.is_invariant(&basis));
    let (sub, _) = t.s2.subrep(&basis).unwrap();
    assert!(is_isomorphic(&sub, &t.s, 0).unwrap());
    let quotient = t.s2.quotient(&basis).unwrap();
    assert!(is_isomorphic(&quotient.rep, &t.tau_minus_s, 0).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn euler_identity(seed in any::<u64>(), which in 0usize..2) {
        let q = corpus()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_rep(&q, 3, &mut rng);
        let n = random_rep(&q, 3, &mut rng);
        let hom = hom_space(&m, &n).unwrap().dim() as i64;
        let ext = ext1_dim(&m, &n).unwrap() as i64;
        prop_assert_eq!(euler_form(&q, &m.dim_vector(), &n.dim_vector()), hom - ext);
    }

    #[test]
    fn presentation_is_exact(seed in any::<u64>(), which in 0usize..2) {
        let q = corpus()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_rep(&q, 3, &mut rng);
        let pres = proj_presentation(&m);
        prop_assert!(pres.alpha.is_injective());
        prop_assert!(pres.projection.is_surjective());
        prop_assert!(pres.projection.compose(&pres.alpha).is_zero());
        let k = &(&pres.p.dim_vector() - &pres.q.dim_vector()) + &m.dim_vector();
        prop_assert!(k.coords.iter().all(|&c| c == 0));
        prop_assert!(is_isomorphic(&pres.cokernel, &m, seed).unwrap());
    }

    #[test]
    fn hom_basis_commutes(seed in any::<u64>(), which in 0usize..2) {
        let q = corpus()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_rep(&q, 3, &mut rng);
        let n = random_rep(&q, 3, &mut rng);
        for b in &hom_space(&m, &n).unwrap().basis {
            prop_assert!(b.commutes());
        }
    }

    #[test]
    fn tor_is_dual_to_ext(seed in any::<u64>(), which in 0usize..2) {
        let q = corpus()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_rep(&q, 3, &mut rng);
        let n = random_rep(&q, 3, &mut rng);
        prop_assert_eq!(tor1_dim(&m, &n.dual()).unwrap().tor1, ext1_dim(&m, &n).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn ext_is_independent_of_presentation(seed in any::<u64>(), which in 0usize..2) {
        let q = corpus()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_rep(&q, 3, &mut rng);
        let n = random_rep(&q, 3, &mut rng);
        let pres = proj_presentation(&m);
        let other = pres.padded(rng.gen_range(0..q.vertex_count()));
        prop_assert_ne!(other.q.dims(), pres.q.dims());
        prop_assert_eq!(ext1_dim_with(&pres, &n).unwrap(), ext1_dim_with(&other, &n).unwrap());
    }
}
