//! Projective representations, morphisms between them written as matrices
//! of path combinations, projective presentations, Ext¹ and Tor₁.

use std::sync::Arc;

use super::quiver::{Path, Quiver};
use super::rep::{QuiverRep, RepMap};
use super::QuiverError;
use crate::exactlin::{Field, FieldMatrix};

/// `(path, coefficient)` terms of a linear combination of parallel paths.
pub type PathCombo<F> = Vec<(Path, <F as Field>::Elem)>;

/// Projective `⊕ P_{v_k}` for the listed vertices. The basis at vertex `w`
/// is, summand by summand, the sorted paths `v_k ⇝ w`.
pub fn projective_sum<F: Field>(quiver: &Arc<Quiver>, field: &F, vertices: &[usize]) -> QuiverRep<F> {
    let n = quiver.vertex_count();
    let dims: Vec<usize> = (0..n)
        .map(|w| vertices.iter().map(|&v| quiver.paths_between(v, w).len()).sum())
        .collect();
    let maps = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = FieldMatrix::zeros(field.clone(), dims[a.target], dims[a.source]);
            let mut src_off = 0;
            let mut tgt_off = 0;
            let step = Path { start: a.source, end: a.target, arrows: vec![ai] };
            for &v in vertices {
                for (k, p) in quiver.paths_between(v, a.source).iter().enumerate() {
                    let longer = p.concat(&step);
                    m.set(tgt_off + quiver.path_index(&longer), src_off + k, field.one());
                }
                src_off += quiver.paths_between(v, a.source).len();
                tgt_off += quiver.paths_between(v, a.target).len();
            }
            m
        })
        .collect();
    QuiverRep::new(quiver.clone(), field.clone(), dims, maps).expect("projective shapes are consistent")
}

/// The indecomposable projective `P_i`: basis the paths starting at `i`.
pub fn projective<F: Field>(quiver: &Arc<Quiver>, field: &F, vertex: usize) -> QuiverRep<F> {
    projective_sum(quiver, field, &[vertex])
}

/// The indecomposable injective `I_i = D P_i^{op}`.
pub fn injective<F: Field>(quiver: &Arc<Quiver>, field: &F, vertex: usize) -> QuiverRep<F> {
    let op = Arc::new(quiver.opposite());
    projective(&op, field, vertex).dual()
}

/// The regular module `R = ⊕_i P_i`.
pub fn regular_module<F: Field>(quiver: &Arc<Quiver>, field: &F) -> QuiverRep<F> {
    let all: Vec<usize> = (0..quiver.vertex_count()).collect();
    projective_sum(quiver, field, &all)
}

fn offsets(quiver: &Quiver, vertices: &[usize], w: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(vertices.len());
    let mut acc = 0;
    for &v in vertices {
        out.push(acc);
        acc += quiver.paths_between(v, w).len();
    }
    out
}

/// A morphism `⊕ P_{source[c]} → ⊕ P_{target[r]}`. Entry `(r, c)` is a
/// combination of paths `target[r] ⇝ source[c]`; a path `p` sends a path
/// `q` of `P_{source[c]}` to `p·q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMorphism<F: Field> {
    quiver: Arc<Quiver>,
    field: F,
    source: Vec<usize>,
    target: Vec<usize>,
    entries: Vec<Vec<PathCombo<F>>>,
}

impl<F: Field> ProjMorphism<F> {
    pub fn new(
        quiver: Arc<Quiver>,
        field: F,
        source: Vec<usize>,
        target: Vec<usize>,
        entries: Vec<Vec<PathCombo<F>>>,
    ) -> Result<Self, QuiverError> {
        if entries.len() != target.len() || entries.iter().any(|row| row.len() != source.len()) {
            return Err(QuiverError::NotMorphism);
        }
        for (r, row) in entries.iter().enumerate() {
            for (c, combo) in row.iter().enumerate() {
                if combo.iter().any(|(p, _)| p.start != target[r] || p.end != source[c]) {
                    return Err(QuiverError::NotMorphism);
                }
            }
        }
        Ok(Self { quiver, field, source, target, entries })
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn source_vertices(&self) -> &[usize] {
        &self.source
    }

    pub fn target_vertices(&self) -> &[usize] {
        &self.target
    }

    pub fn entry(&self, r: usize, c: usize) -> &PathCombo<F> {
        &self.entries[r][c]
    }

    pub fn source_rep(&self) -> QuiverRep<F> {
        projective_sum(&self.quiver, &self.field, &self.source)
    }

    pub fn target_rep(&self) -> QuiverRep<F> {
        projective_sum(&self.quiver, &self.field, &self.target)
    }

    /// Vertex-wise matrices of the morphism.
    pub fn to_rep_map(&self) -> RepMap<F> {
        let q = &self.quiver;
        let f = &self.field;
        let src = self.source_rep();
        let tgt = self.target_rep();
        let maps = (0..q.vertex_count())
            .map(|w| {
                let so = offsets(q, &self.source, w);
                let to = offsets(q, &self.target, w);
                let mut m = FieldMatrix::zeros(f.clone(), tgt.dims()[w], src.dims()[w]);
                for (c, &sv) in self.source.iter().enumerate() {
                    for (k, path) in q.paths_between(sv, w).iter().enumerate() {
                        for (r, row) in self.entries.iter().enumerate() {
                            for (p, coeff) in &row[c] {
                                let i = to[r] + q.path_index(&p.concat(path));
                                let v = f.add(m.get(i, so[c] + k), coeff);
                                m.set(i, so[c] + k, v);
                            }
                        }
                    }
                }
                m
            })
            .collect();
        RepMap::new_unchecked(src, tgt, maps)
    }

    /// `Hom(−, R)` applied: a morphism of projectives over the opposite
    /// quiver, `⊕ P^op_{target} → ⊕ P^op_{source}`, transposing the entry
    /// matrix and reversing every path.
    pub fn dual(&self) -> Self {
        let entries = (0..self.source.len())
            .map(|c| {
                (0..self.target.len())
                    .map(|r| self.entries[r][c].iter().map(|(p, x)| (p.reversed(), x.clone())).collect())
                    .collect()
            })
            .collect();
        Self {
            quiver: Arc::new(self.quiver.opposite()),
            field: self.field.clone(),
            source: self.target.clone(),
            target: self.source.clone(),
            entries,
        }
    }

    /// Matrix of `Hom(α, N): Hom(Q, N) → Hom(P, N)`, identifying
    /// `Hom(P_v, N)` with `N_v` by evaluation at the trivial path.
    pub fn hom_matrix(&self, n: &QuiverRep<F>) -> FieldMatrix<F> {
        let f = &self.field;
        let rows: Vec<usize> = self.source.iter().map(|&v| n.dims()[v]).collect();
        let cols: Vec<usize> = self.target.iter().map(|&v| n.dims()[v]).collect();
        let mut m = FieldMatrix::zeros(f.clone(), rows.iter().sum(), cols.iter().sum());
        let mut r0 = 0;
        for (c, &hc) in rows.iter().enumerate() {
            let mut c0 = 0;
            for (r, &wr) in cols.iter().enumerate() {
                for (p, coeff) in &self.entries[r][c] {
                    m.add_block(r0, c0, &n.path_action(p).scale(coeff));
                }
                c0 += wr;
            }
            r0 += hc;
        }
        m
    }

    /// Matrix of `α ⊗ X: P ⊗ X → Q ⊗ X` for a left module `X` (a
    /// representation of the opposite quiver), with `P_v ⊗ X = X_v`.
    pub fn tensor_matrix(&self, x: &QuiverRep<F>) -> FieldMatrix<F> {
        let f = &self.field;
        let rows: Vec<usize> = self.target.iter().map(|&v| x.dims()[v]).collect();
        let cols: Vec<usize> = self.source.iter().map(|&v| x.dims()[v]).collect();
        let mut m = FieldMatrix::zeros(f.clone(), rows.iter().sum(), cols.iter().sum());
        let mut r0 = 0;
        for (r, &hr) in rows.iter().enumerate() {
            let mut c0 = 0;
            for (c, &wc) in cols.iter().enumerate() {
                for (p, coeff) in &self.entries[r][c] {
                    m.add_block(r0, c0, &x.path_action(&p.reversed()).scale(coeff));
                }
                c0 += wc;
            }
            r0 += hr;
        }
        m
    }

    /// Add an identity summand `P_v → P_v`.
    pub fn pad_with_identity(&self, vertex: usize) -> Self {
        let mut entries = self.entries.clone();
        for row in &mut entries {
            row.push(Vec::new());
        }
        let mut last: Vec<PathCombo<F>> = vec![Vec::new(); self.source.len()];
        last.push(vec![(Path::trivial(vertex), self.field.one())]);
        entries.push(last);
        let mut source = self.source.clone();
        source.push(vertex);
        let mut target = self.target.clone();
        target.push(vertex);
        Self { quiver: self.quiver.clone(), field: self.field.clone(), source, target, entries }
    }
}

/// `0 → P --α--> Q --π--> M → 0` with `Q → M` a projective cover.
#[derive(Clone, Debug)]
pub struct ProjPresentation<F: Field> {
    pub p: QuiverRep<F>,
    pub q: QuiverRep<F>,
    pub alpha: RepMap<F>,
    pub alpha_paths: ProjMorphism<F>,
    pub cokernel: QuiverRep<F>,
    pub projection: RepMap<F>,
}

impl<F: Field> ProjPresentation<F> {
    /// The same presentation with an extra `P_v --1--> P_v` summand.
    pub fn padded(&self, vertex: usize) -> Self {
        let alpha_paths = self.alpha_paths.pad_with_identity(vertex);
        let alpha = alpha_paths.to_rep_map();
        let q = alpha.target().clone();
        let extra = super::proj::projective(self.q.quiver(), self.q.field(), vertex);
        let maps = (0..q.dims().len())
            .map(|w| self.projection.vertex_map(w).hstack(&FieldMatrix::zeros(q.field().clone(), self.cokernel.dims()[w], extra.dims()[w])))
            .collect();
        let projection = RepMap::new_unchecked(q.clone(), self.cokernel.clone(), maps);
        Self { p: alpha.source().clone(), q, alpha, alpha_paths, cokernel: self.cokernel.clone(), projection }
    }
}

/// Minimal projective presentation: `Q` from the top `M / rad M`, `P` from
/// the top of the kernel (projective because path algebras are hereditary).
pub fn proj_presentation<F: Field>(m: &QuiverRep<F>) -> ProjPresentation<F> {
    let quiver = m.quiver().clone();
    let f = m.field().clone();
    let nv = quiver.vertex_count();

    let rad = m.radical();
    let mut q_vertices = Vec::new();
    let mut gens = Vec::new();
    for v in 0..nv {
        let added = rad[v].extend_basis(&FieldMatrix::identity(f.clone(), m.dims()[v]));
        for j in 0..added.cols() {
            q_vertices.push(v);
            gens.push(added.column(j));
        }
    }
    let q = projective_sum(&quiver, &f, &q_vertices);
    let proj_maps: Vec<FieldMatrix<F>> = (0..nv)
        .map(|w| {
            let blocks: Vec<FieldMatrix<F>> = q_vertices
                .iter()
                .zip(&gens)
                .map(|(&t, g)| {
                    let cols: Vec<FieldMatrix<F>> = quiver
                        .paths_between(t, w)
                        .iter()
                        .map(|p| FieldMatrix::column_vector(f.clone(), m.path_action(p).mul_vec(g)))
                        .collect();
                    FieldMatrix::hstack_all(f.clone(), m.dims()[w], &cols)
                })
                .collect();
            FieldMatrix::hstack_all(f.clone(), m.dims()[w], &blocks)
        })
        .collect();
    let projection = RepMap::new_unchecked(q.clone(), m.clone(), proj_maps);
    debug_assert!(projection.commutes() && projection.is_surjective());

    let kernel = projection.kernel_subspaces();
    let mut p_vertices = Vec::new();
    let mut columns: Vec<Vec<PathCombo<F>>> = Vec::new();
    for v in 0..nv {
        let blocks: Vec<FieldMatrix<F>> = quiver
            .arrows()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.target == v)
            .map(|(ai, a)| q.map(ai).mul(&kernel[a.source]))
            .collect();
        let krad = FieldMatrix::hstack_all(f.clone(), q.dims()[v], &blocks).column_space();
        let added = krad.extend_basis(&kernel[v]);
        let offs = offsets(&quiver, &q_vertices, v);
        for j in 0..added.cols() {
            let x = added.column(j);
            let col = q_vertices
                .iter()
                .enumerate()
                .map(|(r, &t)| {
                    quiver
                        .paths_between(t, v)
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| !f.is_zero(&x[offs[r] + k]))
                        .map(|(k, p)| (p.clone(), x[offs[r] + k].clone()))
                        .collect()
                })
                .collect();
            p_vertices.push(v);
            columns.push(col);
        }
    }
    let entries = (0..q_vertices.len())
        .map(|r| columns.iter().map(|col| col[r].clone()).collect())
        .collect();
    let alpha_paths = ProjMorphism { quiver, field: f, source: p_vertices, target: q_vertices, entries };
    let alpha = alpha_paths.to_rep_map();
    debug_assert!(alpha.is_injective());
    debug_assert!(alpha.source().dims().iter().zip(&kernel).all(|(d, k)| *d == k.cols()));
    ProjPresentation { p: alpha.source().clone(), q, alpha, alpha_paths, cokernel: m.clone(), projection }
}

/// `M` is projective iff its minimal presentation has `P = 0`.
pub fn is_projective<F: Field>(m: &QuiverRep<F>) -> bool {
    proj_presentation(m).p.is_zero()
}

/// `dim Ext¹(M, N)` from a given presentation of `M`.
pub fn ext1_dim_with<F: Field>(pres: &ProjPresentation<F>, n: &QuiverRep<F>) -> Result<usize, QuiverError> {
    pres.cokernel.check_compatible(n)?;
    let h = pres.alpha_paths.hom_matrix(n);
    Ok(h.rows() - h.rank())
}

/// `dim Ext¹(M, N) = dim coker(Hom(Q, N) → Hom(P, N))`.
pub fn ext1_dim<F: Field>(m: &QuiverRep<F>, n: &QuiverRep<F>) -> Result<usize, QuiverError> {
    m.check_compatible(n)?;
    ext1_dim_with(&proj_presentation(m), n)
}

/// Dimensions of `Tor₁(M, X)` and `M ⊗ X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorDims {
    pub tor1: usize,
    pub tensor: usize,
}

/// `Tor₁(M, X)` and `M ⊗ X` for a right module `M` and a left module `X`
/// (a representation of the opposite quiver), from `0 → P⊗X → Q⊗X`.
pub fn tor1_dim<F: Field>(m: &QuiverRep<F>, x: &QuiverRep<F>) -> Result<TorDims, QuiverError> {
    if !x.quiver().same_shape(&m.quiver().opposite()) {
        return Err(QuiverError::QuiverMismatch);
    }
    if x.field() != m.field() {
        return Err(QuiverError::FieldMismatch);
    }
    let t = proj_presentation(m).alpha_paths.tensor_matrix(x);
    let rank = t.rank();
    Ok(TorDims { tor1: t.cols() - rank, tensor: t.rows() - rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    #[test]
    fn kronecker_projectives() {
        let q = Arc::new(Quiver::kronecker());
        assert_eq!(projective(&q, &f5(), 1).dims(), &[0, 1]);
        assert_eq!(projective(&q, &f5(), 0).dims(), &[1, 2]);
        assert_eq!(regular_module(&q, &f5()).dims(), &[1, 3]);
        assert_eq!(injective(&q, &f5(), 1).dims(), &[2, 1]);
        assert_eq!(injective(&q, &f5(), 0).dims(), &[1, 0]);
    }

    #[test]
    fn presentation_of_simple_top() {
        let q = Arc::new(Quiver::kronecker());
        let s1 = QuiverRep::simple(q.clone(), f5(), 0);
        let pres = proj_presentation(&s1);
        assert_eq!(pres.alpha_paths.source_vertices(), &[1, 1]);
        assert_eq!(pres.alpha_paths.target_vertices(), &[0]);
        assert!(pres.alpha.commutes());
    }

    #[test]
    fn projectives_present_themselves() {
        let q = Arc::new(Quiver::a31());
        for i in 0..4 {
            let p = projective(&q, &f5(), i);
            let pres = proj_presentation(&p);
            assert!(pres.p.is_zero());
            assert_eq!(pres.q.dims(), p.dims());
        }
    }

    #[test]
    fn dual_morphism_is_a_morphism() {
        let q = Arc::new(Quiver::a31());
        let m = QuiverRep::random(q, f5(), vec![1, 2, 1, 2], &mut rand::thread_rng());
        let pres = proj_presentation(&m);
        let d = pres.alpha_paths.dual().to_rep_map();
        assert!(d.commutes());
    }
}
