//! The free group on a small alphabet: reduced words, the group algebra,
//! finite-dimensional modules on which every generator acts invertibly,
//! and the extension of a vector to a module map out of the group algebra.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exactlin::{Field, FieldMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeGroupError {
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("malformed letter {0:?}")]
    Malformed(String),
    #[error("the two generators must differ")]
    SameGenerator,
    #[error("generator {0} does not act invertibly")]
    NotInvertible(String),
    #[error("action matrices must be {0}x{0}")]
    BadShape(usize),
    #[error("vector has the wrong length")]
    BadVector,
    #[error("missing action for generator {0}")]
    MissingAction(String),
}

/// A reduced word: no letter is followed by its inverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<(usize, i8)>,
}

impl FreeWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn letter(symbol: usize, exponent: i8) -> Self {
        Self { letters: vec![(symbol, exponent.signum())] }
    }

    /// Reduce an arbitrary sequence of letters.
    pub fn from_letters(letters: impl IntoIterator<Item = (usize, i8)>) -> Self {
        let mut out: Vec<(usize, i8)> = Vec::new();
        for (s, e) in letters {
            match out.last() {
                Some(&(t, f)) if t == s && f == -e => {
                    out.pop();
                }
                _ => out.push((s, e)),
            }
        }
        Self { letters: out }
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_letters(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|&(s, e)| (s, -e)).collect() }
    }

    pub fn render(&self, alphabet: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(s, e)| if e > 0 { alphabet[s].clone() } else { format!("{}^-1", alphabet[s]) })
            .collect();
        parts.join(" ")
    }
}

/// Parse whitespace-separated letters `x`, `x^-1` (also `x^1`) over the
/// alphabet and reduce. The empty string and `1` give the identity.
pub fn parse_reduce(text: &str, alphabet: &[String]) -> Result<FreeWord, FreeGroupError> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (name, exp) = match tok.split_once('^') {
            None => (tok, 1),
            Some((n, "-1")) => (n, -1),
            Some((n, "1")) => (n, 1),
            Some(_) => return Err(FreeGroupError::Malformed(tok.to_string())),
        };
        let s = alphabet
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| FreeGroupError::UnknownSymbol(name.to_string()))?;
        letters.push((s, exp));
    }
    Ok(FreeWord::from_letters(letters))
}

/// Finitely supported element of the group algebra `kG`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgElem<F: Field> {
    field: F,
    terms: BTreeMap<FreeWord, F::Elem>,
}

impl<F: Field> GroupAlgElem<F> {
    pub fn zero(field: F) -> Self {
        Self { field, terms: BTreeMap::new() }
    }

    pub fn from_word(field: F, w: FreeWord) -> Self {
        Self::from_terms(field.clone(), [(w, field.one())])
    }

    pub fn one(field: F) -> Self {
        Self::from_word(field, FreeWord::identity())
    }

    pub fn from_terms(field: F, terms: impl IntoIterator<Item = (FreeWord, F::Elem)>) -> Self {
        let mut out = Self::zero(field);
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    fn add_term(&mut self, w: FreeWord, c: F::Elem) {
        let f = &self.field;
        let sum = match self.terms.get(&w) {
            Some(old) => f.add(old, &c),
            None => c,
        };
        if f.is_zero(&sum) {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, sum);
        }
    }

    pub fn terms(&self) -> &BTreeMap<FreeWord, F::Elem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Self::from_terms(self.field.clone(), self.terms.iter().map(|(w, a)| (w.clone(), self.field.mul(a, c))))
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.neg(&self.field.one()))
    }

    pub fn render(&self, alphabet: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("{}*{}", self.field.format_elem(c), w.render(alphabet)))
            .collect();
        parts.join(" + ")
    }
}

pub fn ga_mul<F: Field>(a: &GroupAlgElem<F>, b: &GroupAlgElem<F>) -> GroupAlgElem<F> {
    let f = &a.field;
    let mut out = GroupAlgElem::zero(f.clone());
    for (wa, ca) in &a.terms {
        for (wb, cb) in &b.terms {
            out.add_term(wa.mul(wb), f.mul(ca, cb));
        }
    }
    out
}

/// A finite-dimensional right `kG`-module: row vectors, `m·x = m A_x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XDivModule<F: Field> {
    field: F,
    dimension: usize,
    action: Vec<FieldMatrix<F>>,
    inverse: Vec<FieldMatrix<F>>,
}

impl<F: Field> XDivModule<F> {
    /// One matrix per alphabet symbol; each must be invertible.
    pub fn new(field: F, dimension: usize, action: Vec<FieldMatrix<F>>, alphabet: &[String]) -> Result<Self, FreeGroupError> {
        if action.len() != alphabet.len() {
            return Err(FreeGroupError::MissingAction(alphabet.get(action.len()).cloned().unwrap_or_default()));
        }
        let mut inverse = Vec::with_capacity(action.len());
        for (a, name) in action.iter().zip(alphabet) {
            if a.shape() != (dimension, dimension) {
                return Err(FreeGroupError::BadShape(dimension));
            }
            inverse.push(a.inverse().ok_or_else(|| FreeGroupError::NotInvertible(name.clone()))?);
        }
        Ok(Self { field, dimension, action, inverse })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn action(&self, symbol: usize) -> &FieldMatrix<F> {
        &self.action[symbol]
    }

    fn apply(&self, m: &[F::Elem], symbol: usize, exponent: i8) -> Vec<F::Elem> {
        let a = if exponent > 0 { &self.action[symbol] } else { &self.inverse[symbol] };
        a.transpose().mul_vec(m)
    }

    /// `m·g` through the group action.
    pub fn act(&self, m: &[F::Elem], g: &FreeWord) -> Vec<F::Elem> {
        g.letters.iter().fold(m.to_vec(), |acc, &(s, e)| self.apply(&acc, s, e))
    }
}

/// The module map `f: kG → M` with `f(1) = m0`, defined on a reduced word
/// `g = h·x^e` by induction on its length: `f(g) = f(h)·x` when `e = 1`,
/// and for `e = -1` the unique `n` with `n·x = f(h)`.
pub fn envelope_value<F: Field>(m0: &[F::Elem], g: &FreeWord, module: &XDivModule<F>) -> Result<Vec<F::Elem>, FreeGroupError> {
    if m0.len() != module.dimension {
        return Err(FreeGroupError::BadVector);
    }
    let mut value = m0.to_vec();
    for &(s, e) in &g.letters {
        value = if e > 0 {
            module.action[s].transpose().mul_vec(&value)
        } else {
            module.action[s]
                .transpose()
                .solve(&value)
                .ok_or_else(|| FreeGroupError::NotInvertible(s.to_string()))?
        };
    }
    Ok(value)
}

/// Linear extension of `envelope_value` to the group algebra.
pub fn envelope_value_linear<F: Field>(
    m0: &[F::Elem],
    a: &GroupAlgElem<F>,
    module: &XDivModule<F>,
) -> Result<Vec<F::Elem>, FreeGroupError> {
    let f = &module.field;
    let mut out = vec![f.zero(); module.dimension];
    for (w, c) in &a.terms {
        let v = envelope_value(m0, w, module)?;
        for (o, x) in out.iter_mut().zip(v) {
            *o = f.add(o, &f.mul(c, &x));
        }
    }
    Ok(out)
}

/// An element `w` of `kG ⊕ kG` and its image under `(a, b) ↦ a·x + b·y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatnessWitness<F: Field> {
    pub element: (GroupAlgElem<F>, GroupAlgElem<F>),
    pub image: GroupAlgElem<F>,
}

/// `w = (x^-1, 0) − (0, y^-1)`: nonzero, yet mapped to `1 − 1 = 0`.
pub fn flatness_witness<F: Field>(field: &F, x: usize, y: usize) -> Result<FlatnessWitness<F>, FreeGroupError> {
    if x == y {
        return Err(FreeGroupError::SameGenerator);
    }
    let first = GroupAlgElem::from_word(field.clone(), FreeWord::letter(x, -1));
    let second = GroupAlgElem::from_word(field.clone(), FreeWord::letter(y, -1)).neg();
    let gx = GroupAlgElem::from_word(field.clone(), FreeWord::letter(x, 1));
    let gy = GroupAlgElem::from_word(field.clone(), FreeWord::letter(y, 1));
    let image = ga_mul(&first, &gx).add(&ga_mul(&second, &gy));
    Ok(FlatnessWitness { element: (first, second), image })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;

    fn xy() -> Vec<String> {
        vec!["x".to_string(), "y".to_string()]
    }

    #[test]
    fn reduction_examples() {
        let a = xy();
        assert_eq!(parse_reduce("x y y^-1 x", &a).unwrap().render(&a), "x x");
        assert!(parse_reduce("", &a).unwrap().is_identity());
        assert_eq!(parse_reduce("x^-1 x y", &a).unwrap().render(&a), "y");
        assert_eq!(parse_reduce("x z", &a), Err(FreeGroupError::UnknownSymbol("z".to_string())));
        assert_eq!(parse_reduce("x^2", &a), Err(FreeGroupError::Malformed("x^2".to_string())));
    }

    #[test]
    fn group_algebra_products() {
        let f = PrimeField::new(7).unwrap();
        let x = GroupAlgElem::from_word(f, FreeWord::letter(0, 1));
        let xi = GroupAlgElem::from_word(f, FreeWord::letter(0, -1));
        let y = GroupAlgElem::from_word(f, FreeWord::letter(1, 1));
        assert_eq!(ga_mul(&x, &xi), GroupAlgElem::one(f));
        let s = x.add(&y);
        assert_eq!(ga_mul(&s, &GroupAlgElem::one(f)), s);
        let xx = ga_mul(&x, &x);
        assert_eq!(xx.terms().len(), 1);
        assert_eq!(xx.terms().values().next(), Some(&1));
    }

    #[test]
    fn envelope_examples() {
        let f = PrimeField::new(7).unwrap();
        let a = xy();
        let act = vec![FieldMatrix::from_i64_rows(f, 1, 1, &[vec![2]]), FieldMatrix::from_i64_rows(f, 1, 1, &[vec![3]])];
        let m = XDivModule::new(f, 1, act, &a).unwrap();
        let m0 = vec![1u64];
        assert_eq!(envelope_value(&m0, &parse_reduce("x^-1", &a).unwrap(), &m).unwrap(), vec![4]);
        assert_eq!(envelope_value(&m0, &FreeWord::identity(), &m).unwrap(), m0);
        assert_eq!(envelope_value(&m0, &parse_reduce("x y", &a).unwrap(), &m).unwrap(), vec![6]);
    }

    #[test]
    fn singular_action_is_rejected() {
        let f = PrimeField::new(7).unwrap();
        let act = vec![FieldMatrix::zeros(f, 1, 1), FieldMatrix::identity(f, 1)];
        assert_eq!(XDivModule::new(f, 1, act, &xy()), Err(FreeGroupError::NotInvertible("x".to_string())));
    }

    #[test]
    fn witness_examples() {
        let f = PrimeField::new(7).unwrap();
        let w = flatness_witness(&f, 0, 1).unwrap();
        assert!(w.image.is_zero());
        assert!(!w.element.0.is_zero() && !w.element.1.is_zero());
        let v = flatness_witness(&f, 1, 0).unwrap();
        assert_eq!(v.element.0, w.element.1.neg());
        assert_eq!(flatness_witness(&f, 0, 0), Err(FreeGroupError::SameGenerator));
    }
}
