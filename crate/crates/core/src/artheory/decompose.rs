use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ArError;
use crate::exactlin::{Field, FieldMatrix};
use crate::quiverrep::{hom_space, QuiverRep, RepMap};

const ISO_TRIES: usize = 40;

fn total_matrix<F: Field>(phi: &RepMap<F>) -> FieldMatrix<F> {
    let f = phi.source().field().clone();
    phi.vertex_maps().iter().fold(FieldMatrix::zeros(f, 0, 0), |acc, m| acc.block_diag(m))
}

/// Look for an endomorphism whose minimal polynomial has two coprime
/// factors; its Fitting decomposition splits `m`.
fn split_once<F: Field>(m: &QuiverRep<F>, rng: &mut ChaCha8Rng) -> Result<Option<(QuiverRep<F>, QuiverRep<F>)>, ArError> {
    let end = hom_space(m, m)?;
    if end.dim() <= 1 {
        return Ok(None);
    }
    let f = m.field();
    let n = m.total_dim() as u64;
    let mut undecided = false;
    for t in 0..2 * end.dim() + 20 {
        let phi = if t < end.dim() { end.basis[t].clone() } else { end.random_element(rng) };
        let mu = total_matrix(&phi).minimal_polynomial();
        let factor = match f.primary_split(&mu) {
            Ok(Some(g)) => g,
            Ok(None) => continue,
            Err(_) => {
                undecided = true;
                continue;
            }
        };
        let powers: Vec<FieldMatrix<F>> = phi.vertex_maps().iter().map(|a| a.eval_poly(&factor).pow(n)).collect();
        let kernel: Vec<_> = powers.iter().map(FieldMatrix::kernel_basis).collect();
        let image: Vec<_> = powers.iter().map(FieldMatrix::column_space).collect();
        let (a, _) = m.subrep(&kernel)?;
        let (b, _) = m.subrep(&image)?;
        return Ok(Some((a, b)));
    }
    if undecided {
        return Err(ArError::NonSplitField);
    }
    Ok(None)
}

fn split_all<F: Field>(m: &QuiverRep<F>, rng: &mut ChaCha8Rng, out: &mut Vec<QuiverRep<F>>) -> Result<(), ArError> {
    if m.is_zero() {
        return Ok(());
    }
    match split_once(m, rng)? {
        None => out.push(m.clone()),
        Some((a, b)) => {
            split_all(&a, rng, out)?;
            split_all(&b, rng, out)?;
        }
    }
    Ok(())
}

/// Indecomposable summands with multiplicities. Randomized with a fixed
/// seed: a module reported indecomposable had no splitting endomorphism
/// among the sampled ones.
pub fn decompose<F: Field>(m: &QuiverRep<F>, seed: u64) -> Result<Vec<(QuiverRep<F>, usize)>, ArError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pieces = Vec::new();
    split_all(m, &mut rng, &mut pieces)?;
    let mut groups: Vec<(QuiverRep<F>, usize)> = Vec::new();
    'pieces: for p in pieces {
        for (rep, count) in groups.iter_mut() {
            if iso_with(rep, &p, &mut rng)? {
                *count += 1;
                continue 'pieces;
            }
        }
        groups.push((p, 1));
    }
    Ok(groups)
}

pub fn is_indecomposable<F: Field>(m: &QuiverRep<F>, seed: u64) -> Result<bool, ArError> {
    if m.is_zero() {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(split_once(m, &mut rng)?.is_none())
}

fn iso_with<F: Field>(m: &QuiverRep<F>, n: &QuiverRep<F>, rng: &mut ChaCha8Rng) -> Result<bool, ArError> {
    if !m.compatible(n) {
        return Err(crate::quiverrep::QuiverError::QuiverMismatch.into());
    }
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let h = hom_space(m, n)?;
    if h.dim() == 0 || h.dim() != hom_space(m, m)?.dim() || h.dim() != hom_space(n, n)?.dim() {
        return Ok(false);
    }
    for t in 0..ISO_TRIES {
        let g = if t < h.dim() { h.basis[t].clone() } else { h.random_element(rng) };
        if g.is_isomorphism() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Randomized isomorphism test: searches `Hom(M, N)` for an element that is
/// invertible at every vertex.
pub fn is_isomorphic<F: Field>(m: &QuiverRep<F>, n: &QuiverRep<F>, seed: u64) -> Result<bool, ArError> {
    iso_with(m, n, &mut ChaCha8Rng::seed_from_u64(seed))
}
