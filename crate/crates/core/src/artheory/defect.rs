use std::sync::Arc;

use num::integer::Integer;
use num::rational::Ratio;
use num::{BigInt, One, Signed, ToPrimitive, Zero};

use super::decompose::{decompose, is_indecomposable};
use super::search::{find_submodule, SearchBudget};
use super::ArError;
use crate::exactlin::{Field, FieldMatrix, Rationals};
use crate::quiverrep::{euler_form, is_projective, K0Class, Quiver, QuiverRep, RepMap};

/// `∂(d) = B(d, v) / B([R], v)` for the radical vector `v` of the Euler form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectFunction {
    quiver: Arc<Quiver>,
    v: K0Class,
    normalizer: i64,
}

impl DefectFunction {
    /// Requires the symmetrized Euler form to have a one-dimensional radical
    /// spanned by a nonnegative vector with some coordinate equal to 1.
    pub fn new(quiver: Arc<Quiver>) -> Result<Self, ArError> {
        let n = quiver.vertex_count();
        let e = quiver.euler_matrix();
        let sym = FieldMatrix::from_i64_rows(
            Rationals,
            n,
            n,
            &(0..n).map(|i| (0..n).map(|j| e[i][j] + e[j][i]).collect()).collect::<Vec<_>>(),
        );
        let kernel = sym.kernel_basis();
        if kernel.cols() != 1 {
            return Err(ArError::NotTame);
        }
        let col = kernel.column(0);
        let lcm = col.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = col.iter().map(|c| (c * Ratio::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let mut ints: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        if ints.iter().any(|c| c.is_negative()) {
            ints = ints.iter().map(|c| -c).collect();
        }
        if ints.iter().any(|c| c.is_negative()) || !ints.iter().any(|c| c.is_one()) {
            return Err(ArError::NotTame);
        }
        let v = K0Class::new(ints.iter().map(|c| c.to_i64().expect("small radical vector")).collect());
        let regular = K0Class::new(
            (0..n).map(|j| (0..n).map(|i| quiver.paths_between(i, j).len() as i64).sum()).collect(),
        );
        let normalizer = euler_form(&quiver, &regular, &v);
        if normalizer == 0 {
            return Err(ArError::NotTame);
        }
        Ok(Self { quiver, v, normalizer })
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn radical_vector(&self) -> &K0Class {
        &self.v
    }

    pub fn normalizer(&self) -> i64 {
        self.normalizer
    }

    pub fn defect(&self, d: &K0Class) -> Ratio<i64> {
        Ratio::new(euler_form(&self.quiver, d, &self.v), self.normalizer)
    }

    pub fn defect_of<F: Field>(&self, m: &QuiverRep<F>) -> Ratio<i64> {
        self.defect(&m.dim_vector())
    }
}

/// Every indecomposable summand has defect zero.
pub fn is_regular<F: Field>(m: &QuiverRep<F>, df: &DefectFunction, seed: u64) -> Result<bool, ArError> {
    if !df.defect_of(m).is_zero() {
        return Ok(false);
    }
    Ok(decompose(m, seed)?.iter().all(|(s, _)| df.defect_of(s).is_zero()))
}

/// Regular, indecomposable, and without proper nonzero regular submodules.
pub fn is_simple_regular<F: Field>(
    m: &QuiverRep<F>,
    df: &DefectFunction,
    budget: &SearchBudget,
    seed: u64,
) -> Result<bool, ArError> {
    if m.is_zero() || !df.defect_of(m).is_zero() || !is_indecomposable(m, seed)? {
        return Ok(false);
    }
    // a submodule of a regular module has no preinjective summand, so it
    // is regular exactly when its defect vanishes
    let found = find_submodule(m, budget, |sub| {
        let d = K0Class::new(sub.iter().map(|b| b.cols() as i64).collect());
        df.defect(&d).is_zero()
    })?;
    Ok(found.is_none())
}

fn check_projective<F: Field>(alpha: &RepMap<F>) -> Result<(), ArError> {
    if !is_projective(alpha.source()) || !is_projective(alpha.target()) {
        return Err(ArError::NonProjective);
    }
    Ok(())
}

/// A map of projectives is full when it is injective with regular cokernel.
pub fn is_full<F: Field>(alpha: &RepMap<F>, df: &DefectFunction, seed: u64) -> Result<bool, ArError> {
    check_projective(alpha)?;
    if !alpha.is_injective() {
        return Ok(false);
    }
    is_regular(&alpha.cokernel().rep, df, seed)
}

/// Full, with simple regular cokernel.
pub fn is_atomic_full<F: Field>(
    alpha: &RepMap<F>,
    df: &DefectFunction,
    budget: &SearchBudget,
    seed: u64,
) -> Result<bool, ArError> {
    if !is_full(alpha, df, seed)? {
        return Ok(false);
    }
    is_simple_regular(&alpha.cokernel().rep, df, budget, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;
    use crate::quiverrep::{injective, proj_presentation, projective};

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    fn kron_r(lambda: i64) -> QuiverRep<PrimeField> {
        let q = Arc::new(Quiver::kronecker());
        let a = FieldMatrix::from_i64_rows(f5(), 1, 1, &[vec![1]]);
        let b = FieldMatrix::from_i64_rows(f5(), 1, 1, &[vec![lambda]]);
        QuiverRep::new(q, f5(), vec![1, 1], vec![a, b]).unwrap()
    }

    #[test]
    fn kronecker_defect() {
        let df = DefectFunction::new(Arc::new(Quiver::kronecker())).unwrap();
        assert_eq!(df.radical_vector().coords, vec![1, 1]);
        assert_eq!(df.normalizer(), 2);
        assert_eq!(df.defect(&K0Class::new(vec![0, 1])), Ratio::new(1, 2));
        assert_eq!(df.defect(&K0Class::new(vec![1, 1])), Ratio::zero());
        assert_eq!(df.defect(&K0Class::new(vec![1, 3])), Ratio::one());
    }

    #[test]
    fn a31_defect() {
        let df = DefectFunction::new(Arc::new(Quiver::a31())).unwrap();
        assert_eq!(df.radical_vector().coords, vec![1, 1, 1, 1]);
        assert_eq!(df.normalizer(), 4);
    }

    #[test]
    fn wild_quiver_is_rejected() {
        let q = Quiver::from_triples("k3", 2, &[("a", 0, 1), ("b", 0, 1), ("c", 0, 1)]).unwrap();
        assert_eq!(DefectFunction::new(Arc::new(q)), Err(ArError::NotTame));
    }

    #[test]
    fn regularity_is_summandwise() {
        let q = Arc::new(Quiver::kronecker());
        let df = DefectFunction::new(q.clone()).unwrap();
        assert!(is_regular(&kron_r(2), &df, 0).unwrap());
        assert!(!is_regular(&QuiverRep::simple(q.clone(), f5(), 0), &df, 0).unwrap());
        // P_1 has defect 1/2 and I_1 (the simple injective) has defect -1/2
        let p = projective(&q, &f5(), 1);
        let i = injective(&q, &f5(), 0);
        let m = p.direct_sum(&i).unwrap();
        assert!(df.defect_of(&m).is_zero());
        assert!(!is_regular(&m, &df, 0).unwrap());
    }

    #[test]
    fn fullness_of_presentations() {
        let q = Arc::new(Quiver::kronecker());
        let df = DefectFunction::new(q.clone()).unwrap();
        let budget = SearchBudget::default();
        let r = proj_presentation(&kron_r(3));
        assert_eq!(r.p.dims(), &[0, 1]);
        assert!(is_atomic_full(&r.alpha, &df, &budget, 0).unwrap());
        let s = proj_presentation(&QuiverRep::simple(q.clone(), f5(), 0));
        assert!(!is_full(&s.alpha, &df, 0).unwrap());
        let p = projective(&q, &f5(), 0);
        assert!(is_full(&RepMap::identity(&p), &df, 0).unwrap());
        let m = kron_r(1);
        assert_eq!(is_full(&RepMap::identity(&m), &df, 0), Err(ArError::NonProjective));
    }

    #[test]
    fn length_two_regular_is_not_simple() {
        let q = Arc::new(Quiver::kronecker());
        let df = DefectFunction::new(q.clone()).unwrap();
        // Jordan block: the regular module of length 2 in the tube at 2
        let a = FieldMatrix::identity(f5(), 2);
        let b = FieldMatrix::from_i64_rows(f5(), 2, 2, &[vec![2, 1], vec![0, 2]]);
        let m = QuiverRep::new(q, f5(), vec![2, 2], vec![a, b]).unwrap();
        assert!(is_regular(&m, &df, 0).unwrap());
        assert!(!is_simple_regular(&m, &df, &SearchBudget::default(), 0).unwrap());
        assert!(is_simple_regular(&kron_r(2), &df, &SearchBudget::default(), 0).unwrap());
    }
}
