use std::collections::{HashSet, VecDeque};

use super::ArError;
use crate::exactlin::{Field, FieldMatrix};
use crate::quiverrep::QuiverRep;

/// Limits for exhaustive searches over submodules and morphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest total dimension a searched module may have.
    pub dim_cap: usize,
    /// Largest number of candidates examined.
    pub max_nodes: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { dim_cap: 12, max_nodes: 20_000 }
    }
}

impl SearchBudget {
    pub fn with_dim_cap(dim_cap: usize) -> Self {
        Self { dim_cap, ..Self::default() }
    }

    pub(crate) fn check_dim(&self, total: usize) -> Result<(), ArError> {
        if total > self.dim_cap {
            return Err(ArError::SearchBudgetExceeded(format!("dimension {total} above cap {}", self.dim_cap)));
        }
        Ok(())
    }
}

/// One representative of every line in `F^n` (leading nonzero entry 1),
/// or `None` if there are more than `cap` of them. Over an infinite field
/// this only succeeds for `n ≤ 1`.
pub(crate) fn projective_points<F: Field>(field: &F, n: usize, cap: usize) -> Option<Vec<Vec<F::Elem>>> {
    if n == 0 {
        return Some(Vec::new());
    }
    let Some(elems) = field.elements() else {
        return (n == 1).then(|| vec![vec![field.one()]]);
    };
    let q = elems.len() as u128;
    let mut count: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..n {
        count += power;
        power = power.saturating_mul(q);
        if count > cap as u128 {
            return None;
        }
    }
    let mut out = Vec::with_capacity(count as usize);
    for lead in 0..n {
        let tail = n - lead - 1;
        let combos = (q as usize).pow(tail as u32);
        for mut idx in 0..combos {
            let mut v = vec![field.zero(); n];
            v[lead] = field.one();
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = elems[idx % q as usize].clone();
                idx /= q as usize;
            }
            out.push(v);
        }
    }
    Some(out)
}

/// Canonical form of a family of subspaces: reduced row echelon rows.
pub(crate) fn subspace_key<F: Field>(basis: &[FieldMatrix<F>]) -> Vec<Vec<Vec<F::Elem>>> {
    basis
        .iter()
        .map(|b| {
            let e = b.transpose().echelon();
            (0..e.pivots.len()).map(|r| e.reduced.row(r).to_vec()).collect()
        })
        .collect()
}

fn subspace_sum<F: Field>(a: &[FieldMatrix<F>], b: &[FieldMatrix<F>]) -> Vec<FieldMatrix<F>> {
    a.iter().zip(b).map(|(x, y)| x.hstack(y).column_space()).collect()
}

/// Breadth-first search over the proper nonzero submodules of `m` (as sums
/// of cyclic ones) for one satisfying `pred`.
pub fn find_submodule<F: Field>(
    m: &QuiverRep<F>,
    budget: &SearchBudget,
    mut pred: impl FnMut(&[FieldMatrix<F>]) -> bool,
) -> Result<Option<Vec<FieldMatrix<F>>>, ArError> {
    budget.check_dim(m.total_dim())?;
    let total = m.total_dim();
    let f = m.field();
    let mut cyclic: Vec<Vec<FieldMatrix<F>>> = Vec::new();
    let mut cyclic_keys = HashSet::new();
    for (v, &d) in m.dims().iter().enumerate() {
        let points = projective_points(f, d, budget.max_nodes)
            .ok_or_else(|| ArError::SearchBudgetExceeded(format!("too many vectors at vertex {v}")))?;
        for p in points {
            let mut gens = m.zero_subspaces();
            gens[v] = FieldMatrix::column_vector(f.clone(), p);
            let sub = m.generated_by(&gens);
            if cyclic_keys.insert(subspace_key(&sub)) {
                cyclic.push(sub);
            }
        }
    }
    let dim = |s: &[FieldMatrix<F>]| s.iter().map(FieldMatrix::cols).sum::<usize>();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    for c in &cyclic {
        if seen.insert(subspace_key(c)) && dim(c) < total {
            if pred(c) {
                return Ok(Some(c.clone()));
            }
            queue.push_back(c.clone());
        }
    }
    while let Some(y) = queue.pop_front() {
        for c in &cyclic {
            let s = subspace_sum(&y, c);
            if dim(&s) == total || !seen.insert(subspace_key(&s)) {
                continue;
            }
            if seen.len() > budget.max_nodes {
                return Err(ArError::SearchBudgetExceeded("too many submodules".to_string()));
            }
            if pred(&s) {
                return Ok(Some(s));
            }
            queue.push_back(s);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{PrimeField, Rationals};

    #[test]
    fn counts_lines() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(projective_points(&f, 2, 100).unwrap().len(), 4);
        assert_eq!(projective_points(&f, 3, 100).unwrap().len(), 13);
        assert!(projective_points(&f, 3, 12).is_none());
        assert_eq!(projective_points(&Rationals, 1, 100).unwrap().len(), 1);
        assert!(projective_points(&Rationals, 2, 100).is_none());
    }
}
