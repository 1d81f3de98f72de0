use crate::exactlin::Field;
use crate::quiverrep::{proj_presentation, ProjPresentation, QuiverRep};

/// `Tr U = coker(Q* → P*)`, a representation of the opposite quiver.
pub fn transpose<F: Field>(u: &QuiverRep<F>) -> QuiverRep<F> {
    transpose_from(&proj_presentation(u))
}

/// Transpose computed from a given presentation.
pub fn transpose_from<F: Field>(pres: &ProjPresentation<F>) -> QuiverRep<F> {
    pres.alpha_paths.dual().to_rep_map().cokernel().rep
}

/// `τM = D Tr M`.
pub fn tau<F: Field>(m: &QuiverRep<F>) -> QuiverRep<F> {
    transpose(m).dual()
}

/// `τ⁻M = Tr D M`.
pub fn tau_minus<F: Field>(m: &QuiverRep<F>) -> QuiverRep<F> {
    transpose(&m.dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;
    use crate::quiverrep::{projective, Quiver};
    use std::sync::Arc;

    #[test]
    fn projectives_have_zero_transpose() {
        let f = PrimeField::new(5).unwrap();
        let q = Arc::new(Quiver::a31());
        for i in 0..4 {
            assert!(transpose(&projective(&q, &f, i)).is_zero());
            assert!(tau(&projective(&q, &f, i)).is_zero());
        }
    }

    #[test]
    fn transpose_of_kronecker_simple_top() {
        // the dual presentation maps dims (1,0) into (4,2)
        let f = PrimeField::new(5).unwrap();
        let q = Arc::new(Quiver::kronecker());
        let t = transpose(&QuiverRep::simple(q, f, 0));
        assert_eq!(t.dims(), &[3, 2]);
    }
}
