use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tilt_core::exactlin::{snf, Field, FieldMatrix, IntMatrix, PrimeField, Rationals};

fn f(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

#[test]
fn kernel_examples() {
    let id = FieldMatrix::identity(f(5), 3);
    assert_eq!(id.kernel_basis().cols(), 0);

    let zero = FieldMatrix::zeros(f(5), 2, 2);
    assert_eq!(zero.kernel_basis(), FieldMatrix::identity(f(5), 2));

    let a = FieldMatrix::from_i64_rows(f(2), 1, 2, &[vec![1, 1]]);
    let k = a.kernel_basis();
    assert_eq!(k.cols(), 1);
    assert_eq!(k.column(0), vec![1, 1]);
}

#[test]
fn solve_examples() {
    let id = FieldMatrix::identity(f(7), 3);
    assert_eq!(id.solve(&[3, 0, 6]), Some(vec![3, 0, 6]));

    let two = FieldMatrix::from_i64_rows(f(7), 1, 1, &[vec![2]]);
    assert_eq!(two.solve(&[1]), Some(vec![4]));

    let zero = FieldMatrix::zeros(f(7), 2, 2);
    assert_eq!(zero.solve(&[1, 0]), None);
}

#[test]
fn empty_matrices() {
    let a = FieldMatrix::zeros(f(5), 0, 3);
    assert_eq!(a.rank(), 0);
    assert_eq!(a.kernel_basis().cols(), 3);
    let b = FieldMatrix::zeros(f(5), 3, 0);
    assert_eq!(b.kernel_basis().cols(), 0);
    assert_eq!(b.solve(&[0, 0, 0]), Some(vec![]));
    assert_eq!(b.solve(&[0, 1, 0]), None);
}

fn diag(d: &IntMatrix) -> Vec<BigInt> {
    (0..d.rows().min(d.cols())).map(|i| d.get(i, i).clone()).collect()
}

#[test]
fn snf_examples() {
    let s = snf(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
    assert_eq!(diag(&s.d), vec![BigInt::from(1), BigInt::from(6)]);

    let s = snf(&IntMatrix::identity(4));
    assert_eq!(s.d, IntMatrix::identity(4));

    let s = snf(&IntMatrix::from_rows(&[vec![4, 6]]));
    assert_eq!(s.d, IntMatrix::from_rows(&[vec![2, 0]]));
}

fn check_snf(a: &IntMatrix) -> Result<(), TestCaseError> {
    let s = snf(a);
    prop_assert_eq!(&s.u.mul(a).mul(&s.v), &s.d);
    prop_assert!(s.u.det().abs().is_one());
    prop_assert!(s.v.det().abs().is_one());
    prop_assert_eq!(&s.u.mul(&s.u_inv), &IntMatrix::identity(a.rows()));
    prop_assert_eq!(&s.v.mul(&s.v_inv), &IntMatrix::identity(a.cols()));
    for i in 0..s.d.rows() {
        for j in 0..s.d.cols() {
            if i != j {
                prop_assert!(s.d.get(i, j).is_zero());
            }
        }
    }
    let d = diag(&s.d);
    for w in d.windows(2) {
        prop_assert!(!w[0].is_negative() && !w[1].is_negative());
        if w[0].is_zero() {
            prop_assert!(w[1].is_zero());
        } else {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
    }
    Ok(())
}

fn int_matrix() -> impl Strategy<Value = IntMatrix> {
    (0usize..=4, 0usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(-30i64..=30, r * c).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = (0..r).map(|i| v[i * c..(i + 1) * c].to_vec()).collect();
            if r == 0 {
                IntMatrix::zeros(0, c)
            } else {
                IntMatrix::from_rows(&rows)
            }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_is_valid(a in int_matrix()) {
        check_snf(&a)?;
    }

    #[test]
    fn rank_nullity_and_kernel_solve_mod_p(seed in any::<u64>(), r in 0usize..=5, c in 0usize..=5, p in prop::sample::select(vec![2u64, 3, 5, 7, 31])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = FieldMatrix::random(f(p), r, c, &mut rng);
        let k = a.kernel_basis();
        prop_assert_eq!(a.rank() + k.cols(), c);
        prop_assert!(a.mul(&k).is_zero());
        for j in 0..k.cols() {
            let b = a.mul_vec(&k.column(j));
            prop_assert!(a.solve(&b).is_some());
        }
        let x: Vec<u64> = (0..c).map(|_| f(p).random(&mut rng)).collect();
        let b = a.mul_vec(&x);
        let y = a.solve(&b).expect("consistent system");
        prop_assert_eq!(a.mul_vec(&y), b);
    }

    #[test]
    fn rank_nullity_over_rationals(seed in any::<u64>(), r in 0usize..=4, c in 0usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = FieldMatrix::random(Rationals, r, c, &mut rng);
        let k = a.kernel_basis();
        prop_assert_eq!(a.rank() + k.cols(), c);
        prop_assert!(a.mul(&k).is_zero());
        for j in 0..k.cols() {
            let b = a.mul_vec(&k.column(j));
            prop_assert!(a.solve(&b).is_some());
        }
    }

    #[test]
    fn invertible_matrices_invert(seed in any::<u64>(), n in 0usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = FieldMatrix::random_invertible(f(5), n, &mut rng);
        let inv = a.inverse().expect("invertible");
        prop_assert_eq!(a.mul(&inv), FieldMatrix::identity(f(5), n));
    }
}

#[test]
fn rationals_stay_exact() {
    let q = Rationals;
    let third = q.parse_elem("1/3").unwrap();
    let sum = q.add(&q.add(&third, &third), &third);
    assert_eq!(sum, BigRational::one());
    let a = FieldMatrix::from_elems(q, 2, 2, vec![third.clone(), q.one(), q.one(), q.from_i64(3)]);
    assert_eq!(a.rank(), 1);
}
