//! `M ⊗ X` for a right module `M` and a left module `X`, built directly as
//! `⊕_v M_v ⊗ X_v` modulo `(m·a) ⊗ x − m ⊗ (a·x)`.

use super::rep::{QuiverRep, RepMap};
use super::QuiverError;
use crate::exactlin::{Field, FieldMatrix};

fn check_sides<F: Field>(m: &QuiverRep<F>, x: &QuiverRep<F>) -> Result<(), QuiverError> {
    if !x.quiver().same_shape(&m.quiver().opposite()) {
        return Err(QuiverError::QuiverMismatch);
    }
    if x.field() != m.field() {
        return Err(QuiverError::FieldMismatch);
    }
    Ok(())
}

fn vertex_offsets<F: Field>(m: &QuiverRep<F>, x: &QuiverRep<F>) -> Vec<usize> {
    let mut acc = 0;
    m.dims()
        .iter()
        .zip(x.dims())
        .map(|(a, b)| {
            let o = acc;
            acc += a * b;
            o
        })
        .collect()
}

/// Relation matrix in `V = ⊕_v M_v ⊗ X_v`; the tensor product is `V / im`.
fn relations<F: Field>(m: &QuiverRep<F>, x: &QuiverRep<F>) -> FieldMatrix<F> {
    let f = m.field().clone();
    let offs = vertex_offsets(m, x);
    let total: usize = m.dims().iter().zip(x.dims()).map(|(a, b)| a * b).sum();
    let blocks: Vec<FieldMatrix<F>> = m
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let (i, j) = (a.source, a.target);
            let width = m.dims()[i] * x.dims()[j];
            let mut r = FieldMatrix::zeros(f.clone(), total, width);
            let left = m.map(ai).kron(&FieldMatrix::identity(f.clone(), x.dims()[j]));
            let right = FieldMatrix::identity(f.clone(), m.dims()[i]).kron(x.map(ai));
            r.add_block(offs[j], 0, &left);
            r.add_block(offs[i], 0, &right.neg());
            r
        })
        .collect();
    FieldMatrix::hstack_all(f, total, &blocks)
}

/// `dim_k (M ⊗ X)`.
pub fn tensor_dim<F: Field>(m: &QuiverRep<F>, x: &QuiverRep<F>) -> Result<usize, QuiverError> {
    check_sides(m, x)?;
    let rel = relations(m, x);
    Ok(rel.rows() - rel.rank())
}

/// Whether `1_M ⊗ g: M ⊗ X → M ⊗ Y` is bijective, for `g: X → Y` a map of
/// left modules.
pub fn tensor_map_is_iso<F: Field>(m: &QuiverRep<F>, g: &RepMap<F>) -> Result<bool, QuiverError> {
    let (x, y) = (g.source(), g.target());
    check_sides(m, x)?;
    check_sides(m, y)?;
    let f = m.field().clone();
    let rel_x = relations(m, x);
    let rel_y = relations(m, y);
    let ox = vertex_offsets(m, x);
    let oy = vertex_offsets(m, y);
    let mut big = FieldMatrix::zeros(f.clone(), rel_y.rows(), rel_x.rows());
    for v in 0..m.dims().len() {
        let block = FieldMatrix::identity(f.clone(), m.dims()[v]).kron(g.vertex_map(v));
        big.add_block(oy[v], ox[v], &block);
    }
    let joined = big.hstack(&rel_y);
    if joined.rank() != rel_y.rows() {
        return Ok(false);
    }
    // preimage of im(rel_y) under the induced map must be exactly im(rel_x)
    let ker = joined.kernel_basis();
    let preimage_dim = ker.row_range(0, rel_x.rows()).rank();
    Ok(preimage_dim == rel_x.rank())
}
