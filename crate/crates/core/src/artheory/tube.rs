use std::str::FromStr;
use std::sync::Arc;

use super::decompose::is_isomorphic;
use super::defect::{is_simple_regular, DefectFunction};
use super::extension::build_extension;
use super::filtration::is_bound;
use super::search::SearchBudget;
use super::translate::{tau, tau_minus};
use super::ArError;
use crate::exactlin::{Field, FieldMatrix};
use crate::quiverrep::{Quiver, QuiverRep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TubeFamily {
    Kronecker,
    A31,
}

impl TubeFamily {
    pub fn quiver(self) -> Quiver {
        match self {
            TubeFamily::Kronecker => Quiver::kronecker(),
            TubeFamily::A31 => Quiver::a31(),
        }
    }
}

impl FromStr for TubeFamily {
    type Err = ArError;

    fn from_str(s: &str) -> Result<Self, ArError> {
        match s.to_ascii_lowercase().as_str() {
            "kronecker" => Ok(TubeFamily::Kronecker),
            "a31" => Ok(TubeFamily::A31),
            _ => Err(ArError::UnsupportedFamily(s.to_string())),
        }
    }
}

/// Simple regular modules of a tame quiver. `exceptional[t]` lists the
/// simples of one tube of rank > 1 so that `τ` maps each entry to the next
/// one, cyclically. Homogeneous simples carry a parameter label.
#[derive(Clone, Debug)]
pub struct TubeCatalog<F: Field> {
    pub family: TubeFamily,
    pub quiver: Arc<Quiver>,
    pub exceptional: Vec<Vec<QuiverRep<F>>>,
    pub homogeneous: Vec<(String, QuiverRep<F>)>,
}

impl<F: Field> TubeCatalog<F> {
    /// Ranks of the listed tubes: exceptional ones first.
    pub fn ranks(&self) -> Vec<usize> {
        self.exceptional.iter().map(Vec::len).chain(self.homogeneous.iter().map(|_| 1)).collect()
    }

    pub fn simples(&self) -> impl Iterator<Item = &QuiverRep<F>> {
        self.exceptional.iter().flatten().chain(self.homogeneous.iter().map(|(_, m)| m))
    }

    /// Each member is a bound simple regular module and `τ` acts on every
    /// tube as the declared cyclic permutation.
    pub fn verify(&self, budget: &SearchBudget, seed: u64) -> Result<bool, ArError> {
        let df = DefectFunction::new(self.quiver.clone())?;
        for m in self.simples() {
            if !is_bound(m)? || !is_simple_regular(m, &df, budget, seed)? {
                return Ok(false);
            }
        }
        for tube in &self.exceptional {
            for (i, m) in tube.iter().enumerate() {
                if !is_isomorphic(&tau(m), &tube[(i + 1) % tube.len()], seed)? {
                    return Ok(false);
                }
            }
        }
        for (_, m) in &self.homogeneous {
            if !is_isomorphic(&tau(m), m, seed)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn parameters<F: Field>(field: &F) -> Vec<F::Elem> {
    match field.elements() {
        Some(all) if all.len() <= 31 => all,
        Some(all) => all.into_iter().take(8).collect(),
        None => ["0", "1", "-1", "2", "1/2"].iter().map(|s| field.parse_elem(s).expect("literal")).collect(),
    }
}

fn scalar<F: Field>(field: &F, c: F::Elem) -> FieldMatrix<F> {
    FieldMatrix::from_elems(field.clone(), 1, 1, vec![c])
}

fn rep<F: Field>(quiver: &Arc<Quiver>, field: &F, dims: Vec<usize>, maps: Vec<FieldMatrix<F>>) -> QuiverRep<F> {
    QuiverRep::new(quiver.clone(), field.clone(), dims, maps).expect("catalog shapes are consistent")
}

pub fn tube_catalog<F: Field>(family: TubeFamily, field: &F) -> TubeCatalog<F> {
    let quiver = Arc::new(family.quiver());
    let f = field;
    let one = || scalar(f, f.one());
    let empty = |r, c| FieldMatrix::zeros(f.clone(), r, c);
    match family {
        TubeFamily::Kronecker => {
            let mut homogeneous: Vec<(String, QuiverRep<F>)> = parameters(f)
                .into_iter()
                .map(|l| (format!("lambda={}", f.format_elem(&l)), rep(&quiver, f, vec![1, 1], vec![one(), scalar(f, l)])))
                .collect();
            homogeneous.push(("lambda=inf".to_string(), rep(&quiver, f, vec![1, 1], vec![empty(1, 1), one()])));
            TubeCatalog { family, quiver, exceptional: Vec::new(), homogeneous }
        }
        TubeFamily::A31 => {
            let s1 = QuiverRep::simple(quiver.clone(), f.clone(), 1);
            let s2 = QuiverRep::simple(quiver.clone(), f.clone(), 2);
            let e = rep(&quiver, f, vec![1, 0, 0, 1], vec![empty(0, 1), empty(0, 0), empty(1, 0), one()]);
            let homogeneous = parameters(f)
                .into_iter()
                .map(|l| {
                    let maps = vec![one(), one(), one(), scalar(f, l.clone())];
                    (format!("d={}", f.format_elem(&l)), rep(&quiver, f, vec![1, 1, 1, 1], maps))
                })
                .collect();
            TubeCatalog { family, quiver, exceptional: vec![vec![s1, s2, e]], homogeneous }
        }
    }
}

/// The modules of the rank-3 tube of `Ã(3,1)` built around the simple
/// regular `S` at vertex 1. `S[2]` has socle `S` and top `τ⁻S`; `τS[2]`
/// has socle `τS` and top `S`.
#[derive(Clone, Debug)]
pub struct TubeModules<F: Field> {
    pub s: QuiverRep<F>,
    pub tau_s: QuiverRep<F>,
    pub tau_minus_s: QuiverRep<F>,
    pub s2: QuiverRep<F>,
    pub tau_s2: QuiverRep<F>,
}

pub fn a31_tube_modules<F: Field>(field: &F) -> Result<TubeModules<F>, ArError> {
    let quiver = Arc::new(Quiver::a31());
    let s = QuiverRep::simple(quiver, field.clone(), 1);
    let tau_s = tau(&s);
    let tau_minus_s = tau_minus(&s);
    let s2 = build_extension(&tau_minus_s, &s, 0)?;
    let tau_s2 = build_extension(&s, &tau_s, 0)?;
    Ok(TubeModules { s, tau_s, tau_minus_s, s2, tau_s2 })
}
