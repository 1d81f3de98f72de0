//! Univariate polynomials over a [`Field`], with just enough factoring to
//! split a minimal polynomial into coprime parts.

use num::{BigInt, BigRational, BigUint, Integer, One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Field, NonSplit, PrimeField, Rationals};

/// Coefficients low degree first; never has a trailing zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        Self { field, coeffs: Vec::new() }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// The monomial `x`.
    pub fn x(field: F) -> Self {
        let coeffs = vec![field.zero(), field.one()];
        Self { field, coeffs }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Self::new(f.clone(), self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = f.zero();
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&z);
                let b = other.coeffs.get(i).unwrap_or(&z);
                f.add(a, b)
            })
            .collect();
        Self::new(f.clone(), c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        self.add(&other.scale(&f.neg(&f.one())))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field.clone());
        }
        let f = &self.field;
        let mut c = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(&c[i + j], &f.mul(a, b));
            }
        }
        Self::new(f.clone(), c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let f = &self.field;
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc_inv = f.inv(divisor.leading().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(f.clone()), self.clone());
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dd], &lc_inv);
            if !f.is_zero(&c) {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = f.sub(&rem[k + j], &f.mul(&c, b));
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(f.clone(), quot), Self::new(f.clone(), rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod modulus`, with the exponent given as a big integer.
    pub fn pow_mod(&self, e: &BigUint, modulus: &Self) -> Self {
        let mut acc = Self::constant(self.field.clone(), self.field.one()).rem(modulus);
        let base = self.rem(modulus);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(modulus);
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
        }
        acc
    }

    /// Whether `self` is a power `f^k`, `k >= 1`, of the (monic) polynomial `f`.
    pub fn is_power_of(&self, f: &Self) -> bool {
        let mut cur = self.monic();
        if f.degree().unwrap_or(0) == 0 {
            return false;
        }
        loop {
            if cur.is_one() {
                return true;
            }
            let (q, r) = cur.div_rem(f);
            if !r.is_zero() {
                return false;
            }
            cur = q;
        }
    }
}

pub(crate) fn finite_field_primary_split(
    field: &PrimeField,
    mu: &Poly<PrimeField>,
) -> Option<Poly<PrimeField>> {
    let mu = mu.monic();
    let deg = mu.degree().expect("nonzero polynomial");
    if deg <= 1 {
        return None;
    }
    let p = BigUint::from(field.modulus());
    let x = Poly::x(*field);
    let mut h = x.rem(&mu);
    for d in 1..=deg {
        h = h.pow_mod(&p, &mu);
        let g = mu.gcd(&h.sub(&x));
        let gd = g.degree().unwrap_or(0);
        if gd == 0 {
            continue;
        }
        if gd == d {
            return if mu.is_power_of(&g) { None } else { Some(g) };
        }
        // g is a product of at least two distinct irreducibles of degree d
        return Some(equal_degree_factor(field, &g, d));
    }
    unreachable!("a monic polynomial of positive degree has an irreducible factor")
}

/// One irreducible factor of `g`, a product of distinct irreducibles all
/// of degree `d`.
fn equal_degree_factor(field: &PrimeField, g: &Poly<PrimeField>, d: usize) -> Poly<PrimeField> {
    let p = field.modulus();
    if g.degree() == Some(d) {
        return g.clone();
    }
    let small = (p as f64).powi(d as i32) <= 20_000.0;
    if p == 2 || small {
        // enumerate monic polynomials of degree d
        let total = p.pow(d as u32);
        for k in 0..total {
            let mut coeffs = Vec::with_capacity(d + 1);
            let mut rest = k;
            for _ in 0..d {
                coeffs.push(rest % p);
                rest /= p;
            }
            coeffs.push(1);
            let cand = Poly::new(*field, coeffs);
            if g.rem(&cand).is_zero() {
                return cand;
            }
        }
        unreachable!("g has a monic factor of degree d");
    }
    // Cantor-Zassenhaus, odd characteristic
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let n = g.degree().unwrap();
    let one = Poly::constant(*field, 1);
    loop {
        let a = Poly::new(*field, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = a.pow_mod(&exp, g).sub(&one);
        let h = g.gcd(&b);
        let hd = h.degree().unwrap_or(0);
        if hd > 0 && hd < n {
            let smaller = if hd <= n - hd { h } else { g.div_rem(&h).0.monic() };
            return equal_degree_factor(field, &smaller, d);
        }
    }
}

pub(crate) fn rational_primary_split(mu: &Poly<Rationals>) -> Result<Option<Poly<Rationals>>, NonSplit> {
    let mu = mu.monic();
    let deg = mu.degree().expect("nonzero polynomial");
    if deg <= 1 {
        return Ok(None);
    }
    // clear denominators
    let lcm = mu
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = mu
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let root = if ints[0].is_zero() {
        Some(BigRational::zero())
    } else {
        let lead = ints.last().unwrap().abs();
        let constant = ints[0].abs();
        let nums = divisors(&constant).ok_or(NonSplit)?;
        let dens = divisors(&lead).ok_or(NonSplit)?;
        let mut found = None;
        'search: for a in &nums {
            for b in &dens {
                for sign in [1i64, -1] {
                    let r = BigRational::new(BigInt::from(*a) * sign, BigInt::from(*b));
                    if eval_rational(&mu, &r).is_zero() {
                        found = Some(r);
                        break 'search;
                    }
                }
            }
        }
        found
    };
    match root {
        None => Err(NonSplit),
        Some(r) => {
            let lin = Poly::new(Rationals, vec![-r, BigRational::one()]);
            if mu.is_power_of(&lin) {
                Ok(None)
            } else {
                Ok(Some(lin))
            }
        }
    }
}

fn eval_rational(p: &Poly<Rationals>, x: &BigRational) -> BigRational {
    p.coeffs()
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, c: &[u64]) -> Poly<PrimeField> {
        Poly::new(PrimeField::new(p).unwrap(), c.to_vec())
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = fp(5, &[1, 2, 3, 4]);
        let b = fp(5, &[2, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn primary_polynomials_are_not_split() {
        let f = PrimeField::new(5).unwrap();
        // (x - 2)^3
        let lin = fp(5, &[3, 1]);
        let cube = lin.mul(&lin).mul(&lin);
        assert_eq!(finite_field_primary_split(&f, &cube), None);
        // x^2 + 2 is irreducible mod 5 (2 is not a square... -2 = 3 is not a square)
        let irr = fp(5, &[2, 0, 1]);
        assert_eq!(finite_field_primary_split(&f, &irr.mul(&irr)), None);
    }

    #[test]
    fn coprime_factors_are_found() {
        let f = PrimeField::new(5).unwrap();
        let a = fp(5, &[1, 1]);
        let b = fp(5, &[2, 1]);
        let got = finite_field_primary_split(&f, &a.mul(&b)).unwrap();
        assert!(got == a || got == b);
        // two distinct irreducible quadratics: x^2+2 and x^2+3
        let q1 = fp(5, &[2, 0, 1]);
        let q2 = fp(5, &[3, 0, 1]);
        let got = finite_field_primary_split(&f, &q1.mul(&q2)).unwrap();
        assert!(got == q1 || got == q2);
    }

    #[test]
    fn cantor_zassenhaus_on_large_prime() {
        let p = 1_000_003u64;
        let f = PrimeField::new(p).unwrap();
        let a = fp(p, &[5, 0, 1]);
        let b = fp(p, &[7, 0, 1]);
        // both may or may not be irreducible; the split must divide the product
        let prod = a.mul(&b);
        if let Some(g) = finite_field_primary_split(&f, &prod) {
            assert!(prod.rem(&g).is_zero());
            assert!(!prod.is_power_of(&g));
        }
    }

    #[test]
    fn rationals_detect_irreducible_quadratics() {
        let q = Rationals;
        let x2p1 = Poly::new(q, vec![q.from_i64(1), q.from_i64(0), q.from_i64(1)]);
        assert_eq!(rational_primary_split(&x2p1), Err(NonSplit));
        let sq = Poly::new(q, vec![q.from_i64(1), q.from_i64(-2), q.from_i64(1)]);
        assert_eq!(rational_primary_split(&sq), Ok(None));
        let two = Poly::new(q, vec![q.from_i64(2), q.from_i64(-3), q.from_i64(1)]);
        assert!(rational_primary_split(&two).unwrap().is_some());
    }
}
