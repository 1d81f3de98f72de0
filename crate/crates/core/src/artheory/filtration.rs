use std::collections::HashSet;

use super::decompose::is_isomorphic;
use super::search::{projective_points, subspace_key, SearchBudget};
use super::ArError;
use crate::exactlin::{Field, FieldMatrix};
use crate::quiverrep::{hom_space, projective, QuiverRep};

/// Finitely presented modules with `Hom(U, R) = 0`; over a hereditary
/// algebra these automatically have projective dimension at most 1.
#[derive(Clone, Debug)]
pub struct BoundSet<F: Field> {
    members: Vec<QuiverRep<F>>,
}

impl<F: Field> BoundSet<F> {
    pub fn new(members: Vec<QuiverRep<F>>) -> Result<Self, ArError> {
        for (index, u) in members.iter().enumerate() {
            if !is_bound(u)? {
                return Err(ArError::NotBound { index });
            }
        }
        Ok(Self { members })
    }

    pub fn empty() -> Self {
        Self { members: Vec::new() }
    }

    pub fn members(&self) -> &[QuiverRep<F>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `Hom(U, P_i) = 0` for every indecomposable projective.
pub fn is_bound<F: Field>(u: &QuiverRep<F>) -> Result<bool, ArError> {
    for i in 0..u.quiver().vertex_count() {
        if hom_space(u, &projective(u.quiver(), u.field(), i))?.dim() != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `0 = N_0 ⊂ … ⊂ N_k = N` with `N_{i+1}/N_i` isomorphic to member
/// `factors[i]`. Submodules are vertex-wise column bases.
#[derive(Clone, Debug)]
pub struct Filtration<F: Field> {
    pub chain: Vec<Vec<FieldMatrix<F>>>,
    pub factors: Vec<usize>,
}

impl<F: Field> Filtration<F> {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The subquotient `N_{i+1} / N_i`.
    pub fn factor(&self, n: &QuiverRep<F>, i: usize) -> Result<QuiverRep<F>, ArError> {
        let (upper, _) = n.subrep(&self.chain[i + 1])?;
        let basis: Vec<FieldMatrix<F>> = self.chain[i + 1].iter().map(FieldMatrix::column_space).collect();
        let lower: Vec<FieldMatrix<F>> = basis
            .iter()
            .zip(&self.chain[i])
            .map(|(b, l)| b.solve_matrix(l).expect("chain is ascending"))
            .collect();
        Ok(upper.quotient(&lower)?.rep)
    }

    /// Re-check the chain from scratch: ascending submodules from zero to
    /// everything, each factor isomorphic to its named member.
    pub fn validate(&self, n: &QuiverRep<F>, set: &BoundSet<F>, seed: u64) -> Result<bool, ArError> {
        if self.chain.len() != self.factors.len() + 1 {
            return Ok(false);
        }
        let dim = |s: &[FieldMatrix<F>]| s.iter().map(FieldMatrix::rank).sum::<usize>();
        if dim(&self.chain[0]) != 0 || dim(&self.chain[self.factors.len()]) != n.total_dim() {
            return Ok(false);
        }
        for s in &self.chain {
            if !n.is_invariant(s) {
                return Ok(false);
            }
        }
        for (i, &u) in self.factors.iter().enumerate() {
            let nested = self.chain[i]
                .iter()
                .zip(&self.chain[i + 1])
                .all(|(l, h)| h.solve_matrix(l).is_some());
            if !nested || u >= set.len() || !is_isomorphic(&self.factor(n, i)?, &set.members()[u], seed)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

struct Search<'a, F: Field> {
    set: &'a BoundSet<F>,
    budget: SearchBudget,
    nodes: usize,
}

impl<F: Field> Search<'_, F> {
    fn run(&mut self, n: &QuiverRep<F>) -> Result<Option<Filtration<F>>, ArError> {
        if n.is_zero() {
            return Ok(Some(Filtration { chain: vec![n.zero_subspaces()], factors: Vec::new() }));
        }
        for (idx, u) in self.set.members().iter().enumerate() {
            if u.is_zero() || u.dims().iter().zip(n.dims()).any(|(a, b)| a > b) {
                continue;
            }
            let h = hom_space(u, n)?;
            if h.dim() == 0 {
                continue;
            }
            let points = projective_points(n.field(), h.dim(), self.budget.max_nodes)
                .ok_or_else(|| ArError::SearchBudgetExceeded(format!("Hom space of dimension {}", h.dim())))?;
            let mut tried = HashSet::new();
            for c in points {
                self.nodes += 1;
                if self.nodes > self.budget.max_nodes {
                    return Err(ArError::SearchBudgetExceeded("too many embeddings".to_string()));
                }
                let g = h.element(&c);
                if !g.is_injective() {
                    continue;
                }
                let image = g.image_subspaces();
                if !tried.insert(subspace_key(&image)) {
                    continue;
                }
                let quot = n.quotient(&image)?;
                if let Some(rest) = self.run(&quot.rep)? {
                    let mut chain = vec![n.zero_subspaces()];
                    chain.extend(rest.chain.iter().map(|s| quot.preimage(s)));
                    let mut factors = vec![idx];
                    factors.extend(rest.factors);
                    return Ok(Some(Filtration { chain, factors }));
                }
            }
        }
        Ok(None)
    }
}

/// A finite filtration of `n` with factors in `set`, or `None` when the
/// exhaustive search finds none.
pub fn u_filtration<F: Field>(
    n: &QuiverRep<F>,
    set: &BoundSet<F>,
    budget: &SearchBudget,
) -> Result<Option<Filtration<F>>, ArError> {
    budget.check_dim(n.total_dim())?;
    Search { set, budget: *budget, nodes: 0 }.run(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;
    use crate::quiverrep::Quiver;
    use std::sync::Arc;

    #[test]
    fn simple_projective_is_not_bound() {
        let f = PrimeField::new(5).unwrap();
        let q = Arc::new(Quiver::kronecker());
        let s1 = QuiverRep::simple(q.clone(), f, 0);
        let s2 = QuiverRep::simple(q, f, 1);
        assert!(BoundSet::new(vec![s1.clone()]).is_ok());
        assert!(matches!(BoundSet::new(vec![s1, s2]), Err(ArError::NotBound { index: 1 })));
    }

    #[test]
    fn incompatible_dimensions_give_none() {
        let f = PrimeField::new(5).unwrap();
        let q = Arc::new(Quiver::kronecker());
        let s1 = QuiverRep::simple(q.clone(), f, 0);
        let s2 = QuiverRep::simple(q, f, 1);
        // the set need not be bound for the search itself
        let set = BoundSet { members: vec![s2] };
        assert!(u_filtration(&s1, &set, &SearchBudget::default()).unwrap().is_none());
    }

    #[test]
    fn semisimple_module_filters_by_its_simple() {
        let f = PrimeField::new(5).unwrap();
        let q = Arc::new(Quiver::kronecker());
        let s1 = QuiverRep::simple(q, f, 0);
        let n = s1.direct_sum(&s1).unwrap().direct_sum(&s1).unwrap();
        let set = BoundSet::new(vec![s1]).unwrap();
        let filt = u_filtration(&n, &set, &SearchBudget::default()).unwrap().unwrap();
        assert_eq!(filt.factors, vec![0, 0, 0]);
        assert!(filt.validate(&n, &set, 0).unwrap());
    }
}
