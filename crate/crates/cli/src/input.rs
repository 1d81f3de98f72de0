//! Line-oriented input format.
//!
//! ```text
//! # comment
//! quiver kronecker          # a31 and kronecker need no arrow lines
//! vertices 2
//! arrow a 1 2               # vertices are numbered from 1
//! field F 5                 # or: field Q
//! rep R dim 1 1
//! matrix a [[1]]            # rows = dim(target), columns = dim(source)
//! zmod free 1 factors 2,6
//! alphabet x,y
//! matrix x [[2]]            # after an alphabet: the action of x
//! word x y^-1
//! base 1                    # vector for envelope computations
//! ```
//!
//! A `matrix` line belongs to the latest `rep` or `alphabet`. Arrows
//! without a matrix act by zero.

use std::sync::Arc;

use num::BigInt;
use thiserror::Error;
use tilt_core::dedekind::FgZModule;
use tilt_core::exactlin::{Field, FieldMatrix};
use tilt_core::freegrp::{parse_reduce, FreeWord, XDivModule};
use tilt_core::quiverrep::{Arrow, Quiver, QuiverRep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

fn err(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError { line, reason: reason.into() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixSpec {
    pub line: usize,
    pub name: String,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSpec {
    pub line: usize,
    pub name: String,
    pub dims: Vec<usize>,
    pub matrices: Vec<MatrixSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub line: usize,
    pub alphabet: Vec<String>,
    pub actions: Vec<MatrixSpec>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParsedInput {
    pub quiver: Option<Quiver>,
    pub field: Option<FieldSpec>,
    pub reps: Vec<RepSpec>,
    pub zmods: Vec<FgZModule>,
    pub group: Option<GroupSpec>,
    /// Raw word texts with their lines, reduced once the alphabet is known.
    pub words: Vec<(usize, String)>,
    pub base: Option<(usize, Vec<String>)>,
}

enum Owner {
    None,
    Rep,
    Group,
}

/// Parse `[[1,2],[3,4]]`, `[]` and `[[],[]]`.
pub fn parse_matrix(text: &str) -> Option<Vec<Vec<String>>> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = t.strip_prefix('[')?.strip_suffix(']')?;
    if inner.is_empty() {
        return Some(Vec::new());
    }
    let inner = inner.strip_prefix('[')?.strip_suffix(']')?;
    inner
        .split("],[")
        .map(|row| {
            if row.contains('[') || row.contains(']') {
                return None;
            }
            Some(if row.is_empty() { Vec::new() } else { row.split(',').map(str::to_string).collect() })
        })
        .collect()
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| err(line, format!("expected {what}, found {tok:?}")))
}

pub fn parse_input(text: &str) -> Result<ParsedInput, ParseError> {
    let mut out = ParsedInput::default();
    let mut quiver_name: Option<String> = None;
    let mut vertices: Option<usize> = None;
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut owner = Owner::None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        let toks: Vec<&str> = rest.split_whitespace().collect();
        match key {
            "quiver" => {
                if toks.len() != 1 {
                    return Err(err(line, "quiver takes one name"));
                }
                quiver_name = Some(toks[0].to_string());
            }
            "vertices" => {
                if toks.len() != 1 {
                    return Err(err(line, "vertices takes one count"));
                }
                vertices = Some(parse_usize(toks[0], line, "a vertex count")?);
            }
            "arrow" => {
                if toks.len() != 3 {
                    return Err(err(line, "arrow needs a name, a source and a target"));
                }
                let n = vertices.ok_or_else(|| err(line, "arrow before vertices"))?;
                let s = parse_usize(toks[1], line, "a source vertex")?;
                let t = parse_usize(toks[2], line, "a target vertex")?;
                if s == 0 || t == 0 || s > n || t > n {
                    return Err(err(line, format!("arrow {} refers to a vertex outside 1..{n}", toks[0])));
                }
                if arrows.iter().any(|a| a.name == toks[0]) {
                    return Err(err(line, format!("duplicate arrow {}", toks[0])));
                }
                arrows.push(Arrow { name: toks[0].to_string(), source: s - 1, target: t - 1 });
            }
            "field" => {
                out.field = Some(match toks.as_slice() {
                    ["Q"] => FieldSpec::Rationals,
                    ["F", p] => FieldSpec::Prime(p.parse().map_err(|_| err(line, format!("bad characteristic {p:?}")))?),
                    _ => return Err(err(line, "expected `field F <p>` or `field Q`")),
                });
            }
            "rep" => {
                if toks.len() < 2 || toks[1] != "dim" {
                    return Err(err(line, "expected `rep <name> dim d1 ... dn`"));
                }
                let dims = toks[2..].iter().map(|d| parse_usize(d, line, "a dimension")).collect::<Result<_, _>>()?;
                out.reps.push(RepSpec { line, name: toks[0].to_string(), dims, matrices: Vec::new() });
                owner = Owner::Rep;
            }
            "matrix" => {
                let (name, body) = rest.split_once(char::is_whitespace).ok_or_else(|| err(line, "matrix needs a name and entries"))?;
                let rows = parse_matrix(body).ok_or_else(|| err(line, format!("malformed matrix for {name}")))?;
                let spec = MatrixSpec { line, name: name.to_string(), rows };
                match owner {
                    Owner::Rep => out.reps.last_mut().expect("owner is a rep").matrices.push(spec),
                    Owner::Group => out.group.as_mut().expect("owner is an alphabet").actions.push(spec),
                    Owner::None => return Err(err(line, "matrix outside of a rep or alphabet")),
                }
            }
            "zmod" => {
                let (free, factors) = match toks.as_slice() {
                    ["free", r] => (parse_usize(r, line, "a free rank")?, Vec::new()),
                    ["free", r, "factors", f] => {
                        let fs = f
                            .split(',')
                            .filter(|s| !s.is_empty())
                            .map(|d| d.parse::<BigInt>().map_err(|_| err(line, format!("bad factor {d:?}"))))
                            .collect::<Result<Vec<_>, _>>()?;
                        (parse_usize(r, line, "a free rank")?, fs)
                    }
                    _ => return Err(err(line, "expected `zmod free <r> factors d1,...`")),
                };
                out.zmods.push(FgZModule::from_cyclics(free, &factors));
            }
            "alphabet" => {
                let alphabet: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
                if alphabet.is_empty() {
                    return Err(err(line, "empty alphabet"));
                }
                out.group = Some(GroupSpec { line, alphabet, actions: Vec::new() });
                owner = Owner::Group;
            }
            "word" => out.words.push((line, rest.to_string())),
            "base" => out.base = Some((line, toks.iter().map(|s| s.to_string()).collect())),
            other => return Err(err(line, format!("unknown keyword {other:?}"))),
        }
    }

    if let Some(name) = quiver_name {
        let q = match (name.as_str(), vertices) {
            ("kronecker", None) => Quiver::kronecker(),
            ("a31", None) => Quiver::a31(),
            (_, Some(n)) => Quiver::new(name.clone(), n, arrows).map_err(|e| err(0, e.to_string()))?,
            (_, None) => return Err(err(0, format!("quiver {name} needs a vertices line"))),
        };
        out.quiver = Some(q);
    } else if vertices.is_some() {
        return Err(err(0, "vertices without a quiver line"));
    }
    Ok(out)
}

fn build_matrix<F: Field>(field: &F, spec: &MatrixSpec, shape: (usize, usize)) -> Result<FieldMatrix<F>, ParseError> {
    let (r, c) = shape;
    let found_cols = spec.rows.first().map_or(c, Vec::len);
    if spec.rows.len() != r || spec.rows.iter().any(|row| row.len() != found_cols) || found_cols != c {
        return Err(err(
            spec.line,
            format!("matrix for {} has shape {}x{}, expected {r}x{c}", spec.name, spec.rows.len(), found_cols),
        ));
    }
    let mut data = Vec::with_capacity(r * c);
    for row in &spec.rows {
        for entry in row {
            data.push(field.parse_elem(entry).ok_or_else(|| err(spec.line, format!("bad entry {entry:?}")))?);
        }
    }
    Ok(FieldMatrix::from_elems(field.clone(), r, c, data))
}

impl ParsedInput {
    pub fn build_reps<F: Field>(&self, field: &F) -> Result<Vec<(String, QuiverRep<F>)>, ParseError> {
        if self.reps.is_empty() {
            return Ok(Vec::new());
        }
        let q = Arc::new(self.quiver.clone().ok_or_else(|| err(self.reps[0].line, "rep without a quiver"))?);
        self.reps
            .iter()
            .map(|spec| {
                if spec.dims.len() != q.vertex_count() {
                    return Err(err(spec.line, format!("expected {} dimensions", q.vertex_count())));
                }
                let mut maps: Vec<Option<FieldMatrix<F>>> = vec![None; q.arrows().len()];
                for m in &spec.matrices {
                    let ai = q.arrow_index(&m.name).ok_or_else(|| err(m.line, format!("unknown arrow {}", m.name)))?;
                    let a = q.arrow(ai);
                    maps[ai] = Some(build_matrix(field, m, (spec.dims[a.target], spec.dims[a.source]))?);
                }
                let maps = maps
                    .into_iter()
                    .zip(q.arrows())
                    .map(|(m, a)| m.unwrap_or_else(|| FieldMatrix::zeros(field.clone(), spec.dims[a.target], spec.dims[a.source])))
                    .collect();
                let rep = QuiverRep::new(q.clone(), field.clone(), spec.dims.clone(), maps).map_err(|e| err(spec.line, e.to_string()))?;
                Ok((spec.name.clone(), rep))
            })
            .collect()
    }

    pub fn build_group<F: Field>(&self, field: &F) -> Result<Option<(Vec<String>, XDivModule<F>)>, ParseError> {
        let Some(g) = &self.group else {
            return Ok(None);
        };
        let dim = g.actions.first().map_or(0, |m| m.rows.len());
        let mut action = Vec::new();
        for name in &g.alphabet {
            let spec = g
                .actions
                .iter()
                .find(|m| &m.name == name)
                .ok_or_else(|| err(g.line, format!("no action matrix for {name}")))?;
            action.push(build_matrix(field, spec, (dim, dim))?);
        }
        if let Some(m) = g.actions.iter().find(|m| !g.alphabet.contains(&m.name)) {
            return Err(err(m.line, format!("{} is not in the alphabet", m.name)));
        }
        let module = XDivModule::new(field.clone(), dim, action, &g.alphabet).map_err(|e| err(g.line, e.to_string()))?;
        Ok(Some((g.alphabet.clone(), module)))
    }

    pub fn build_words(&self, alphabet: &[String]) -> Result<Vec<FreeWord>, ParseError> {
        self.words
            .iter()
            .map(|(line, w)| parse_reduce(w, alphabet).map_err(|e| err(*line, e.to_string())))
            .collect()
    }

    pub fn build_base<F: Field>(&self, field: &F, dim: usize) -> Result<Option<Vec<F::Elem>>, ParseError> {
        let Some((line, entries)) = &self.base else {
            return Ok(None);
        };
        if entries.len() != dim {
            return Err(err(*line, format!("base needs {dim} entries")));
        }
        entries
            .iter()
            .map(|e| field.parse_elem(e).ok_or_else(|| err(*line, format!("bad entry {e:?}"))))
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tilt_core::exactlin::PrimeField;

    #[test]
    fn matrices() {
        assert_eq!(parse_matrix("[[1, 2],[3,4]]"), Some(vec![vec!["1".into(), "2".into()], vec!["3".into(), "4".into()]]));
        assert_eq!(parse_matrix("[]"), Some(vec![]));
        assert_eq!(parse_matrix("[[],[]]"), Some(vec![vec![], vec![]]));
        assert_eq!(parse_matrix("[[1]"), None);
    }

    #[test]
    fn kronecker_fixture() {
        let text = "quiver k\nvertices 2\narrow a 1 2\narrow b 1 2\nrep R dim 1 1\nmatrix a [[1]]\nmatrix b [[2]]\n";
        let p = parse_input(text).unwrap();
        let q = p.quiver.as_ref().unwrap();
        assert_eq!((q.vertex_count(), q.arrows().len()), (2, 2));
        let reps = p.build_reps(&PrimeField::new(5).unwrap()).unwrap();
        assert_eq!(reps[0].1.dims(), &[1, 1]);
    }

    #[test]
    fn malformed_arrow_line() {
        let e = parse_input("quiver k\nvertices 2\narrow a 1\n").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn wrong_shape_names_the_arrow() {
        let text = "quiver kronecker\nrep R dim 1 1\nmatrix b [[1,2]]\n";
        let e = parse_input(text).unwrap().build_reps(&PrimeField::new(5).unwrap()).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.reason.contains("for b"), "{}", e.reason);
    }
}
