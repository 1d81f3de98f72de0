use super::ArError;
use crate::exactlin::{Field, FieldMatrix};
use crate::quiverrep::{proj_presentation, ProjPresentation, QuiverRep, RepMap};

/// Columns spanning a complement of the image of `Hom(Q, A)` in
/// `Hom(P, A)`: representatives of a basis of `Ext¹(C, A)`.
pub fn ext_class_basis<F: Field>(pres: &ProjPresentation<F>, a: &QuiverRep<F>) -> FieldMatrix<F> {
    let h = pres.alpha_paths.hom_matrix(a);
    h.column_space().extend_basis(&FieldMatrix::identity(a.field().clone(), h.rows()))
}

/// Middle term of the extension `0 → A → M → C → 0` for the chosen basis
/// class, with the embedding of `A`. Built as the pushout of the
/// presentation of `C` along the class `ξ: P → A`.
pub fn extension_with_inclusion<F: Field>(
    c: &QuiverRep<F>,
    a: &QuiverRep<F>,
    class_index: usize,
) -> Result<(QuiverRep<F>, RepMap<F>), ArError> {
    if !c.compatible(a) {
        return Err(crate::quiverrep::QuiverError::QuiverMismatch.into());
    }
    let pres = proj_presentation(c);
    let classes = ext_class_basis(&pres, a);
    if classes.cols() == 0 {
        return Err(ArError::NoExtension);
    }
    if class_index >= classes.cols() {
        return Err(ArError::ClassIndexOutOfRange { index: class_index, dim: classes.cols() });
    }
    let x = classes.column(class_index);
    let f = a.field().clone();
    let quiver = a.quiver().clone();
    let sum = a.direct_sum(&pres.q)?;
    let maps = (0..quiver.vertex_count())
        .map(|w| {
            let mut xi = FieldMatrix::zeros(f.clone(), a.dims()[w], pres.p.dims()[w]);
            let mut col = 0;
            let mut off = 0;
            for &s in pres.alpha_paths.source_vertices() {
                let xs = &x[off..off + a.dims()[s]];
                for path in quiver.paths_between(s, w) {
                    for (r, val) in a.path_action(path).mul_vec(xs).into_iter().enumerate() {
                        xi.set(r, col, val);
                    }
                    col += 1;
                }
                off += a.dims()[s];
            }
            xi.vstack(&pres.alpha.vertex_map(w).neg())
        })
        .collect();
    let pushout = RepMap::new(pres.p.clone(), sum, maps)?.cokernel();
    let inclusion = (0..quiver.vertex_count())
        .map(|w| pushout.projection.vertex_map(w).column_range(0, a.dims()[w]))
        .collect();
    let inclusion = RepMap::new(a.clone(), pushout.rep.clone(), inclusion)?;
    Ok((pushout.rep, inclusion))
}

/// Middle term of a non-split extension of `C` by `A` (so `A` is the
/// submodule).
pub fn build_extension<F: Field>(c: &QuiverRep<F>, a: &QuiverRep<F>, class_index: usize) -> Result<QuiverRep<F>, ArError> {
    extension_with_inclusion(c, a, class_index).map(|(m, _)| m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artheory::{decompose, is_isomorphic};
    use crate::exactlin::PrimeField;
    use crate::quiverrep::{projective, Quiver};
    use std::sync::Arc;

    #[test]
    fn kronecker_simples_extend_to_a_projective() {
        let f = PrimeField::new(5).unwrap();
        let q = Arc::new(Quiver::kronecker());
        let s1 = QuiverRep::simple(q.clone(), f, 0);
        let s2 = QuiverRep::simple(q.clone(), f, 1);
        for class in 0..2 {
            let (m, inc) = extension_with_inclusion(&s1, &s2, class).unwrap();
            assert_eq!(m.dims(), &[1, 1]);
            assert!(inc.is_injective());
            assert_eq!(decompose(&m, 0).unwrap().len(), 1);
        }
        assert_eq!(build_extension(&s1, &s2, 2), Err(ArError::ClassIndexOutOfRange { index: 2, dim: 2 }));
        assert_eq!(build_extension(&s2, &s1, 0), Err(ArError::NoExtension));
        let p = projective(&q, &f, 0);
        assert_eq!(build_extension(&p, &s2, 0), Err(ArError::NoExtension));
        assert!(!is_isomorphic(&build_extension(&s1, &s2, 0).unwrap(), &s1.direct_sum(&s2).unwrap(), 0).unwrap());
    }
}
