use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::exactlin::{snf, IntMatrix};

/// `ℤ^free_rank ⊕ ℤ/d_1 ⊕ … ⊕ ℤ/d_k` with `2 ≤ d_1 | d_2 | … | d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FgZModule {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FgZModule {
    pub fn zero() -> Self {
        Self { free_rank: 0, invariant_factors: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        Self { free_rank: rank, invariant_factors: Vec::new() }
    }

    /// `ℤ/n`; `n = 0` gives `ℤ`.
    pub fn cyclic(n: i64) -> Self {
        Self::from_cyclics(0, &[BigInt::from(n)])
    }

    /// Canonical form of `ℤ^free ⊕ ⊕ ℤ/c_i` for arbitrary orders `c_i`
    /// (zero orders add to the free rank, units vanish).
    pub fn from_cyclics(free: usize, orders: &[BigInt]) -> Self {
        let n = orders.len();
        let diag = IntMatrix::diagonal(n, n, orders);
        let mut m = classify(&diag);
        m.free_rank += free;
        m
    }

    pub fn from_factors(free: usize, orders: &[i64]) -> Self {
        let orders: Vec<BigInt> = orders.iter().map(|&d| BigInt::from(d)).collect();
        Self::from_cyclics(free, &orders)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_torsion(&self) -> bool {
        self.free_rank == 0
    }

    /// Number of canonical generators; elements have this many coordinates.
    pub fn generator_count(&self) -> usize {
        self.free_rank + self.invariant_factors.len()
    }

    /// Order of the torsion part.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let orders: Vec<BigInt> = self.invariant_factors.iter().chain(&other.invariant_factors).cloned().collect();
        Self::from_cyclics(self.free_rank + other.free_rank, &orders)
    }

    /// Injective presentation `ℤ^k → ℤ^(free + k)`: the torsion relations
    /// on the last `k` generators.
    pub fn presentation(&self) -> IntMatrix {
        let k = self.invariant_factors.len();
        IntMatrix::from_fn(self.free_rank + k, k, |i, j| {
            if i == self.free_rank + j {
                self.invariant_factors[j].clone()
            } else {
                BigInt::zero()
            }
        })
    }

    /// Reduce torsion coordinates into `[0, d_i)`.
    pub fn normalize(&self, x: &[BigInt]) -> Vec<BigInt> {
        x.iter()
            .enumerate()
            .map(|(i, c)| if i < self.free_rank { c.clone() } else { c.mod_floor(&self.invariant_factors[i - self.free_rank]) })
            .collect()
    }

    /// Order of an element, `None` when it is infinite.
    pub fn element_order(&self, x: &[BigInt]) -> Option<BigInt> {
        if x[..self.free_rank].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(x[self.free_rank..].iter().zip(&self.invariant_factors).fold(BigInt::one(), |acc, (c, d)| {
            let c = c.mod_floor(d);
            acc.lcm(&(d / c.gcd(d)))
        }))
    }
}

impl fmt::Display for FgZModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The cokernel of `A: ℤ^cols → ℤ^rows` in canonical form.
pub fn classify(presentation: &IntMatrix) -> FgZModule {
    let s = snf(presentation);
    let diag = s.diagonal();
    let rank = s.rank();
    let invariant_factors = diag.into_iter().filter(|d| !d.is_zero() && !d.abs().is_one()).collect();
    FgZModule { free_rank: presentation.rows() - rank, invariant_factors }
}

fn gcd_terms(m: &FgZModule, n: &FgZModule) -> Vec<BigInt> {
    m.invariant_factors
        .iter()
        .flat_map(|a| n.invariant_factors.iter().map(move |b| a.gcd(b)))
        .collect()
}

fn repeat(orders: &[BigInt], times: usize) -> Vec<BigInt> {
    (0..times).flat_map(|_| orders.iter().cloned()).collect()
}

/// `Hom(M, N) = ℤ^(rs) ⊕ (tors N)^r ⊕ ⊕ ℤ/gcd(m_i, n_j)`.
pub fn hom_dim(m: &FgZModule, n: &FgZModule) -> FgZModule {
    let mut orders = repeat(&n.invariant_factors, m.free_rank);
    orders.extend(gcd_terms(m, n));
    FgZModule::from_cyclics(m.free_rank * n.free_rank, &orders)
}

/// `Ext¹(M, N) = (tors M)^s ⊕ ⊕ ℤ/gcd(m_i, n_j)`.
pub fn ext_dim(m: &FgZModule, n: &FgZModule) -> FgZModule {
    let mut orders = repeat(&m.invariant_factors, n.free_rank);
    orders.extend(gcd_terms(m, n));
    FgZModule::from_cyclics(0, &orders)
}

/// `Tor₁(M, N) = ⊕ ℤ/gcd(m_i, n_j)`.
pub fn tor_dim(m: &FgZModule, n: &FgZModule) -> FgZModule {
    FgZModule::from_cyclics(0, &gcd_terms(m, n))
}
