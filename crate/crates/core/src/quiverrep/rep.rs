use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use rand::Rng;

use super::quiver::{Path, Quiver};
use super::QuiverError;
use crate::exactlin::{Field, FieldMatrix};

/// Class in the Grothendieck group, in the basis of simples.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct K0Class {
    pub coords: Vec<i64>,
}

impl K0Class {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn zero(n: usize) -> Self {
        Self { coords: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self { coords: self.coords.iter().map(|c| c * k).collect() }
    }
}

impl Add for &K0Class {
    type Output = K0Class;
    fn add(self, rhs: &K0Class) -> K0Class {
        assert_eq!(self.len(), rhs.len());
        K0Class { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &K0Class {
    type Output = K0Class;
    fn sub(self, rhs: &K0Class) -> K0Class {
        self + &(-rhs)
    }
}

impl Neg for &K0Class {
    type Output = K0Class;
    fn neg(self) -> K0Class {
        self.scaled(-1)
    }
}

/// `B(d, e) = Σ_i d_i e_i − Σ_{a: i→j} d_i e_j`.
pub fn euler_form(q: &Quiver, d: &K0Class, e: &K0Class) -> i64 {
    let n = q.vertex_count();
    assert_eq!(d.len(), n, "class length");
    assert_eq!(e.len(), n, "class length");
    let diag: i64 = (0..n).map(|i| d.coords[i] * e.coords[i]).sum();
    let arrows: i64 = q.arrows().iter().map(|a| d.coords[a.source] * e.coords[a.target]).sum();
    diag - arrows
}

/// A finite-dimensional representation: a vector space per vertex and a
/// matrix `dims[target] x dims[source]` per arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep<F: Field> {
    quiver: Arc<Quiver>,
    field: F,
    dims: Vec<usize>,
    maps: Vec<FieldMatrix<F>>,
}

impl<F: Field> QuiverRep<F> {
    pub fn new(quiver: Arc<Quiver>, field: F, dims: Vec<usize>, maps: Vec<FieldMatrix<F>>) -> Result<Self, QuiverError> {
        if dims.len() != quiver.vertex_count() {
            return Err(QuiverError::DimensionCount { expected: quiver.vertex_count(), found: dims.len() });
        }
        if maps.len() != quiver.arrows().len() {
            return Err(QuiverError::ArrowCount { expected: quiver.arrows().len(), found: maps.len() });
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            let expected = (dims[a.target], dims[a.source]);
            if m.shape() != expected {
                return Err(QuiverError::ShapeMismatch { arrow: a.name.clone(), expected, found: m.shape() });
            }
            if m.field() != &field {
                return Err(QuiverError::FieldMismatch);
            }
        }
        Ok(Self { quiver, field, dims, maps })
    }

    pub fn zero(quiver: Arc<Quiver>, field: F) -> Self {
        let dims = vec![0; quiver.vertex_count()];
        Self::with_zero_maps(quiver, field, dims)
    }

    /// Given dimensions with every arrow acting by zero.
    pub fn with_zero_maps(quiver: Arc<Quiver>, field: F, dims: Vec<usize>) -> Self {
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| FieldMatrix::zeros(field.clone(), dims[a.target], dims[a.source]))
            .collect();
        Self { quiver, field, dims, maps }
    }

    pub fn simple(quiver: Arc<Quiver>, field: F, vertex: usize) -> Self {
        let mut dims = vec![0; quiver.vertex_count()];
        dims[vertex] = 1;
        Self::with_zero_maps(quiver, field, dims)
    }

    pub fn random<R: Rng + ?Sized>(quiver: Arc<Quiver>, field: F, dims: Vec<usize>, rng: &mut R) -> Self {
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| FieldMatrix::random(field.clone(), dims[a.target], dims[a.source], rng))
            .collect();
        Self { quiver, field, dims, maps }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> K0Class {
        K0Class::new(self.dims.iter().map(|&d| d as i64).collect())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &FieldMatrix<F> {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[FieldMatrix<F>] {
        &self.maps
    }

    /// Whether `other` lives over the same quiver and field.
    pub fn compatible(&self, other: &Self) -> bool {
        self.quiver.same_shape(&other.quiver) && self.field == other.field
    }

    pub(crate) fn check_compatible(&self, other: &Self) -> Result<(), QuiverError> {
        if !self.quiver.same_shape(&other.quiver) {
            return Err(QuiverError::QuiverMismatch);
        }
        if self.field != other.field {
            return Err(QuiverError::FieldMismatch);
        }
        Ok(())
    }

    /// Action of a path, `dims[end] x dims[start]`.
    pub fn path_action(&self, p: &Path) -> FieldMatrix<F> {
        p.arrows.iter().fold(FieldMatrix::identity(self.field.clone(), self.dims[p.start]), |acc, &a| {
            self.maps[a].mul(&acc)
        })
    }

    /// The vector-space dual, a representation of the opposite quiver.
    pub fn dual(&self) -> Self {
        let quiver = Arc::new(self.quiver.opposite());
        let maps = self.maps.iter().map(FieldMatrix::transpose).collect();
        Self { quiver, field: self.field.clone(), dims: self.dims.clone(), maps }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, QuiverError> {
        self.check_compatible(other)?;
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.block_diag(b)).collect();
        Ok(Self { quiver: self.quiver.clone(), field: self.field.clone(), dims, maps })
    }

    pub fn direct_sum_all(quiver: Arc<Quiver>, field: F, parts: &[Self]) -> Result<Self, QuiverError> {
        parts.iter().try_fold(Self::zero(quiver, field), |acc, p| acc.direct_sum(p))
    }

    /// Transport along vertex bases: the result has arrow maps
    /// `B_j^{-1} M_a B_i`. Each `B_v` must be invertible.
    pub fn change_basis(&self, bases: &[FieldMatrix<F>]) -> Self {
        let inverses: Vec<FieldMatrix<F>> =
            bases.iter().map(|b| b.inverse().expect("change of basis must be invertible")).collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| inverses[a.target].mul(m).mul(&bases[a.source]))
            .collect();
        Self { quiver: self.quiver.clone(), field: self.field.clone(), dims: self.dims.clone(), maps }
    }

    /// An isomorphic copy in random coordinates.
    pub fn random_conjugate<R: Rng + ?Sized>(&self, rng: &mut R) -> Self {
        let bases: Vec<_> =
            self.dims.iter().map(|&d| FieldMatrix::random_invertible(self.field.clone(), d, rng)).collect();
        self.change_basis(&bases)
    }

    /// Whether the vertex-wise column spans are closed under all arrows.
    pub fn is_invariant(&self, basis: &[FieldMatrix<F>]) -> bool {
        self.quiver.arrows().iter().enumerate().all(|(ai, a)| {
            let img = self.maps[ai].mul(&basis[a.source]);
            basis[a.target].solve_matrix(&img).is_some()
        })
    }

    /// The subrepresentation spanned by the given vertex-wise columns,
    /// together with its inclusion.
    pub fn subrep(&self, basis: &[FieldMatrix<F>]) -> Result<(Self, RepMap<F>), QuiverError> {
        let basis: Vec<FieldMatrix<F>> = basis.iter().map(FieldMatrix::column_space).collect();
        let mut maps = Vec::with_capacity(self.maps.len());
        for (ai, a) in self.quiver.arrows().iter().enumerate() {
            let img = self.maps[ai].mul(&basis[a.source]);
            let x = basis[a.target].solve_matrix(&img).ok_or(QuiverError::NotInvariant)?;
            maps.push(x);
        }
        let dims = basis.iter().map(FieldMatrix::cols).collect();
        let sub = Self { quiver: self.quiver.clone(), field: self.field.clone(), dims, maps };
        let inclusion = RepMap { source: sub.clone(), target: self.clone(), maps: basis };
        Ok((sub, inclusion))
    }

    /// Quotient by an arrow-stable family of subspaces.
    pub fn quotient(&self, basis: &[FieldMatrix<F>]) -> Result<Quotient<F>, QuiverError> {
        if !self.is_invariant(basis) {
            return Err(QuiverError::NotInvariant);
        }
        let f = &self.field;
        let mut proj = Vec::with_capacity(self.dims.len());
        let mut section = Vec::with_capacity(self.dims.len());
        for (v, b) in basis.iter().enumerate() {
            let n = self.dims[v];
            let b = b.column_space();
            let c = b.extend_basis(&FieldMatrix::identity(f.clone(), n));
            let t = b.hstack(&c);
            let tinv = t.inverse().expect("completed basis is invertible");
            proj.push(tinv.row_range(b.cols(), n));
            section.push(c);
        }
        let maps = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| proj[a.target].mul(&self.maps[ai]).mul(&section[a.source]))
            .collect();
        let dims = section.iter().map(FieldMatrix::cols).collect();
        let rep = Self { quiver: self.quiver.clone(), field: f.clone(), dims, maps };
        let projection = RepMap { source: self.clone(), target: rep.clone(), maps: proj };
        Ok(Quotient { rep, projection, section })
    }

    /// Smallest subrepresentation containing the given columns at each vertex.
    pub fn generated_by(&self, gens: &[FieldMatrix<F>]) -> Vec<FieldMatrix<F>> {
        let mut spans: Vec<FieldMatrix<F>> = gens.iter().map(FieldMatrix::column_space).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for (ai, a) in self.quiver.arrows().iter().enumerate() {
                let img = self.maps[ai].mul(&spans[a.source]);
                let grown = spans[a.target].hstack(&img).column_space();
                if grown.cols() > spans[a.target].cols() {
                    spans[a.target] = grown;
                    changed = true;
                }
            }
        }
        spans
    }

    /// Zero subspace at every vertex, as empty column bases.
    pub fn zero_subspaces(&self) -> Vec<FieldMatrix<F>> {
        self.dims.iter().map(|&d| FieldMatrix::zeros(self.field.clone(), d, 0)).collect()
    }

    /// The whole space at every vertex.
    pub fn full_subspaces(&self) -> Vec<FieldMatrix<F>> {
        self.dims.iter().map(|&d| FieldMatrix::identity(self.field.clone(), d)).collect()
    }

    /// Sum of the images of all arrows ending at each vertex.
    pub fn radical(&self) -> Vec<FieldMatrix<F>> {
        (0..self.dims.len())
            .map(|v| {
                let blocks: Vec<FieldMatrix<F>> = self
                    .quiver
                    .arrows()
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.target == v)
                    .map(|(ai, _)| self.maps[ai].clone())
                    .collect();
                FieldMatrix::hstack_all(self.field.clone(), self.dims[v], &blocks).column_space()
            })
            .collect()
    }
}

/// A quotient representation, its projection, and a linear section
/// (vertex-wise complement bases) used to lift subspaces back.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    pub rep: QuiverRep<F>,
    pub projection: RepMap<F>,
    pub section: Vec<FieldMatrix<F>>,
}

impl<F: Field> Quotient<F> {
    /// Preimage in the ambient module of a family of subspaces of the quotient.
    pub fn preimage(&self, sub: &[FieldMatrix<F>]) -> Vec<FieldMatrix<F>> {
        let kernel = self.projection.kernel_subspaces();
        kernel
            .iter()
            .zip(&self.section)
            .zip(sub)
            .map(|((k, s), c)| k.hstack(&s.mul(c)).column_space())
            .collect()
    }
}

/// A morphism of representations, one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMap<F: Field> {
    source: QuiverRep<F>,
    target: QuiverRep<F>,
    maps: Vec<FieldMatrix<F>>,
}

impl<F: Field> RepMap<F> {
    pub fn new(source: QuiverRep<F>, target: QuiverRep<F>, maps: Vec<FieldMatrix<F>>) -> Result<Self, QuiverError> {
        source.check_compatible(&target)?;
        if maps.len() != source.dims.len() {
            return Err(QuiverError::NotMorphism);
        }
        for (v, m) in maps.iter().enumerate() {
            if m.shape() != (target.dims[v], source.dims[v]) {
                return Err(QuiverError::NotMorphism);
            }
        }
        let f = Self { source, target, maps };
        if !f.commutes() {
            return Err(QuiverError::NotMorphism);
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: QuiverRep<F>, target: QuiverRep<F>, maps: Vec<FieldMatrix<F>>) -> Self {
        Self { source, target, maps }
    }

    pub fn zero(source: QuiverRep<F>, target: QuiverRep<F>) -> Self {
        let maps = (0..source.dims.len())
            .map(|v| FieldMatrix::zeros(source.field.clone(), target.dims[v], source.dims[v]))
            .collect();
        Self { source, target, maps }
    }

    pub fn identity(m: &QuiverRep<F>) -> Self {
        let maps = m.dims.iter().map(|&d| FieldMatrix::identity(m.field.clone(), d)).collect();
        Self { source: m.clone(), target: m.clone(), maps }
    }

    pub fn source(&self) -> &QuiverRep<F> {
        &self.source
    }

    pub fn target(&self) -> &QuiverRep<F> {
        &self.target
    }

    pub fn vertex_map(&self, v: usize) -> &FieldMatrix<F> {
        &self.maps[v]
    }

    pub fn vertex_maps(&self) -> &[FieldMatrix<F>] {
        &self.maps
    }

    /// `target.a ∘ f_i = f_j ∘ source.a` for every arrow `a: i → j`.
    pub fn commutes(&self) -> bool {
        self.source.quiver.arrows().iter().enumerate().all(|(ai, a)| {
            let lhs = self.target.maps[ai].mul(&self.maps[a.source]);
            let rhs = self.maps[a.target].mul(&self.source.maps[ai]);
            lhs == rhs
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert!(other.target.dims == self.source.dims, "morphisms do not compose");
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.mul(b)).collect();
        Self { source: other.source.clone(), target: self.target.clone(), maps }
    }

    pub fn add(&self, other: &Self) -> Self {
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect();
        Self { source: self.source.clone(), target: self.target.clone(), maps }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let maps = self.maps.iter().map(|a| a.scale(c)).collect();
        Self { source: self.source.clone(), target: self.target.clone(), maps }
    }

    /// `Σ c_k f_k` over a nonempty family of parallel morphisms.
    pub fn linear_combination(maps: &[Self], coeffs: &[F::Elem]) -> Self {
        assert_eq!(maps.len(), coeffs.len());
        let first = maps.first().expect("nonempty family");
        maps.iter()
            .zip(coeffs)
            .fold(Self::zero(first.source.clone(), first.target.clone()), |acc, (m, c)| acc.add(&m.scale(c)))
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(FieldMatrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.maps.iter().all(FieldMatrix::is_invertible)
    }

    pub fn kernel_subspaces(&self) -> Vec<FieldMatrix<F>> {
        self.maps.iter().map(FieldMatrix::kernel_basis).collect()
    }

    pub fn image_subspaces(&self) -> Vec<FieldMatrix<F>> {
        self.maps.iter().map(FieldMatrix::column_space).collect()
    }

    pub fn kernel(&self) -> (QuiverRep<F>, RepMap<F>) {
        self.source.subrep(&self.kernel_subspaces()).expect("kernels are subrepresentations")
    }

    pub fn image(&self) -> (QuiverRep<F>, RepMap<F>) {
        self.target.subrep(&self.image_subspaces()).expect("images are subrepresentations")
    }

    pub fn cokernel(&self) -> Quotient<F> {
        self.target.quotient(&self.image_subspaces()).expect("images are subrepresentations")
    }

    /// Transpose of every vertex map: the dual morphism `D target → D source`.
    pub fn dual(&self) -> Self {
        let maps = self.maps.iter().map(FieldMatrix::transpose).collect();
        Self { source: self.target.dual(), target: self.source.dual(), maps }
    }
}

/// A basis of `Hom(M, N)`.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    pub source: QuiverRep<F>,
    pub target: QuiverRep<F>,
    pub basis: Vec<RepMap<F>>,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The morphism with the given coordinates in the basis.
    pub fn element(&self, coeffs: &[F::Elem]) -> RepMap<F> {
        if self.basis.is_empty() {
            return RepMap::zero(self.source.clone(), self.target.clone());
        }
        RepMap::linear_combination(&self.basis, coeffs)
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> RepMap<F> {
        let f = self.source.field();
        let coeffs: Vec<F::Elem> = (0..self.dim()).map(|_| f.random(rng)).collect();
        self.element(&coeffs)
    }
}

/// All morphisms `M → N`, by solving the commuting-square equations
/// `N_a f_i − f_j M_a = 0` for the unknown vertex matrices.
pub fn hom_space<F: Field>(m: &QuiverRep<F>, n: &QuiverRep<F>) -> Result<HomSpace<F>, QuiverError> {
    m.check_compatible(n)?;
    let f = m.field().clone();
    let q = m.quiver();
    let nv = q.vertex_count();
    let mut offsets = Vec::with_capacity(nv);
    let mut unknowns = 0;
    for v in 0..nv {
        offsets.push(unknowns);
        unknowns += n.dims[v] * m.dims[v];
    }
    let idx = |v: usize, r: usize, c: usize| offsets[v] + r * m.dims[v] + c;
    let eq_count: usize = q.arrows().iter().map(|a| n.dims[a.target] * m.dims[a.source]).sum();
    let mut sys = FieldMatrix::zeros(f.clone(), eq_count, unknowns);
    let mut row = 0;
    for (ai, a) in q.arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let na = &n.maps[ai];
        let ma = &m.maps[ai];
        for r in 0..n.dims[j] {
            for c in 0..m.dims[i] {
                // (N_a f_i)[r][c] = Σ_k N_a[r][k] f_i[k][c]
                for k in 0..n.dims[i] {
                    let col = idx(i, k, c);
                    let v = f.add(sys.get(row, col), na.get(r, k));
                    sys.set(row, col, v);
                }
                // −(f_j M_a)[r][c] = −Σ_k f_j[r][k] M_a[k][c]
                for k in 0..m.dims[j] {
                    let col = idx(j, r, k);
                    let v = f.sub(sys.get(row, col), ma.get(k, c));
                    sys.set(row, col, v);
                }
                row += 1;
            }
        }
    }
    let kernel = sys.kernel_basis();
    let basis = (0..kernel.cols())
        .map(|t| {
            let maps = (0..nv)
                .map(|v| FieldMatrix::from_fn(f.clone(), n.dims[v], m.dims[v], |r, c| kernel.get(idx(v, r, c), t).clone()))
                .collect();
            RepMap::new_unchecked(m.clone(), n.clone(), maps)
        })
        .collect();
    Ok(HomSpace { source: m.clone(), target: n.clone(), basis })
}
