//! Membership in perpendicular classes `𝒰^⊥` of finite-dimensional
//! representations, and the conditions that characterize it.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::artheory::{ext_class_basis, extension_with_inclusion, is_bound, transpose_from, ArError, BoundSet};
use crate::exactlin::{Field, FieldMatrix};
use crate::quiverrep::{
    ext1_dim, ext1_dim_with, hom_space, injective, tensor_map_is_iso, tor1_dim, ProjPresentation,
    QuiverError, QuiverRep,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PerpError {
    #[error("module is not bound: it maps nonzero to a projective")]
    NotBound,
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Ar(#[from] ArError),
}

/// Three characterizations of `M ∈ U^⊥ ∩ {Hom(U, −) = 0}` for a bound `U`
/// with presentation `0 → P → Q → U → 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PerpReport {
    /// `M ⊗ Q* → M ⊗ P*` is bijective.
    pub cond_invert: bool,
    /// `Tor₁(M, Tr U) = M ⊗ Tr U = 0`.
    pub cond_tor: bool,
    /// `Hom(U, M) = Ext¹(U, M) = 0`.
    pub cond_homext: bool,
    pub consistent: bool,
}

pub fn perp_conditions<F: Field>(m: &QuiverRep<F>, pres: &ProjPresentation<F>) -> Result<PerpReport, PerpError> {
    let u = &pres.cokernel;
    m.compatible(u).then_some(()).ok_or(QuiverError::QuiverMismatch)?;
    if !is_bound(u)? {
        return Err(PerpError::NotBound);
    }
    let cond_invert = tensor_map_is_iso(m, &pres.alpha_paths.dual().to_rep_map())?;

    let tr = transpose_from(pres);
    let tor = tor1_dim(m, &tr)?;
    let cond_tor = tor.tor1 == 0 && tor.tensor == 0;

    let cond_homext = hom_space(u, m)?.dim() == 0 && ext1_dim_with(pres, m)? == 0;

    let consistent = cond_invert == cond_tor && cond_tor == cond_homext;
    Ok(PerpReport { cond_invert, cond_tor, cond_homext, consistent })
}

/// `Ext¹(U, M) = 0` for every member.
pub fn is_divisible<F: Field>(m: &QuiverRep<F>, set: &BoundSet<F>) -> Result<bool, PerpError> {
    for u in set.members() {
        if ext1_dim(u, m)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Hom(U, M) = 0` for every member.
pub fn is_torsionfree<F: Field>(m: &QuiverRep<F>, set: &BoundSet<F>) -> Result<bool, PerpError> {
    for u in set.members() {
        if hom_space(u, m)?.dim() != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sum of the images of all maps `U → M`, as vertex-wise column bases.
pub fn trace<F: Field>(u: &QuiverRep<F>, m: &QuiverRep<F>) -> Result<Vec<FieldMatrix<F>>, PerpError> {
    let h = hom_space(u, m)?;
    Ok((0..m.dims().len())
        .map(|v| {
            let blocks: Vec<FieldMatrix<F>> = h.basis.iter().map(|g| g.vertex_map(v).clone()).collect();
            FieldMatrix::hstack_all(m.field().clone(), m.dims()[v], &blocks).column_space()
        })
        .collect())
}

/// `(dim Tor₁(U, X), dim Hom(Tr U, X))` for a left module `X`.
pub fn transpose_duality_check<F: Field>(
    pres: &ProjPresentation<F>,
    x: &QuiverRep<F>,
) -> Result<(usize, usize), PerpError> {
    let tor = tor1_dim(&pres.cokernel, x)?.tor1;
    let hom = hom_space(&transpose_from(pres), x)?.dim();
    Ok((tor, hom))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassComparison<F: Field> {
    Equal,
    /// First test module lying in exactly one of the two classes.
    Witness { index: usize, module: QuiverRep<F>, in_first: bool },
}

/// Compare `U1^⊥` and `U2^⊥` on a finite list of test modules.
pub fn class_compare<F: Field>(
    u1: &BoundSet<F>,
    u2: &BoundSet<F>,
    testset: &[QuiverRep<F>],
) -> Result<ClassComparison<F>, PerpError> {
    for (index, m) in testset.iter().enumerate() {
        let a = is_divisible(m, u1)?;
        let b = is_divisible(m, u2)?;
        if a != b {
            return Ok(ClassComparison::Witness { index, module: m.clone(), in_first: a });
        }
    }
    Ok(ClassComparison::Equal)
}

/// Outcome of sampling extensions inside `U^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureSample<F: Field> {
    pub extensions_checked: usize,
    pub pool_size: usize,
    /// `(C, A, class index)` of an extension leaving the class.
    pub counterexample: Option<(QuiverRep<F>, QuiverRep<F>, usize)>,
}

impl<F: Field> ClosureSample<F> {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Draw modules of `U^⊥` (random representations with dimensions at most
/// `max_dim` per vertex, plus the indecomposable injectives) and check that
/// the middle term of every basis extension between two of them stays in
/// the class.
pub fn extension_closure_sample<F: Field>(
    set: &BoundSet<F>,
    seed: u64,
    trials: usize,
    max_dim: usize,
) -> Result<ClosureSample<F>, PerpError> {
    let Some(first) = set.members().first() else {
        return Ok(ClosureSample { extensions_checked: 0, pool_size: 0, counterexample: None });
    };
    let quiver = first.quiver().clone();
    let field = first.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool = Vec::new();
    for i in 0..quiver.vertex_count() {
        let inj = injective(&quiver, &field, i);
        if is_divisible(&inj, set)? {
            pool.push(inj);
        }
    }
    for _ in 0..trials.max(1) * 4 {
        let dims: Vec<usize> = (0..quiver.vertex_count()).map(|_| rng.gen_range(0..=max_dim)).collect();
        let m = QuiverRep::random(quiver.clone(), field.clone(), dims, &mut rng);
        if !m.is_zero() && is_divisible(&m, set)? {
            pool.push(m);
        }
    }
    let mut checked = 0;
    if pool.is_empty() {
        return Ok(ClosureSample { extensions_checked: 0, pool_size: 0, counterexample: None });
    }
    for _ in 0..trials {
        let c = pool.choose(&mut rng).expect("nonempty pool");
        let a = pool.choose(&mut rng).expect("nonempty pool");
        let classes = ext_class_basis(&crate::quiverrep::proj_presentation(c), a).cols();
        for k in 0..classes {
            let (mid, _) = extension_with_inclusion(c, a, k)?;
            checked += 1;
            if !is_divisible(&mid, set)? {
                return Ok(ClosureSample {
                    extensions_checked: checked,
                    pool_size: pool.len(),
                    counterexample: Some((c.clone(), a.clone(), k)),
                });
            }
        }
    }
    Ok(ClosureSample { extensions_checked: checked, pool_size: pool.len(), counterexample: None })
}
