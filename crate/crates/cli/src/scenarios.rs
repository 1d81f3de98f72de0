use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use num::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;
use tilt_core::artheory::{a31_tube_modules, is_bound, is_isomorphic, tau, tau_minus, transpose, tube_catalog, ArError, BoundSet, TubeFamily};
use tilt_core::dedekind::{
    classify, classify_tilting, ext_dim, ext_via_resolution, hom_dim, hom_via_resolution, tor_dim, tor_via_resolution,
    u_set_of_ore, universal_localization_eq, DedekindError, OreSet, PrimeSet,
};
use tilt_core::exactlin::{Field, FieldMatrix, IntMatrix, PrimeField, Rationals};
use tilt_core::freegrp::{envelope_value, flatness_witness, FreeGroupError, FreeWord, XDivModule};
use tilt_core::perpcat::{class_compare, perp_conditions, transpose_duality_check, ClassComparison, PerpError};
use tilt_core::quiverrep::{euler_form, ext1_dim, hom_space, proj_presentation, Quiver, QuiverError, QuiverRep};

use crate::input::{FieldSpec, ParseError, ParsedInput};
use crate::report::{Check, Report};

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Ar(#[from] ArError),
    #[error(transparent)]
    Perp(#[from] PerpError),
    #[error(transparent)]
    Dedekind(#[from] DedekindError),
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScenarioKind {
    TubeDemo,
    DedekindClassify,
    FreeEnvelope,
    PerpCheck,
    Custom,
}

impl ScenarioKind {
    pub fn name(self) -> &'static str {
        match self {
            ScenarioKind::TubeDemo => "tube-demo",
            ScenarioKind::DedekindClassify => "dedekind-classify",
            ScenarioKind::FreeEnvelope => "free-envelope",
            ScenarioKind::PerpCheck => "perp-check",
            ScenarioKind::Custom => "custom",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    /// `None` means the scenario default.
    pub field: Option<FieldSpec>,
    pub seed: u64,
    pub dim_cap: usize,
    pub family: String,
    pub primes: Vec<u64>,
    /// Generator sets for the Ore cross-check.
    pub ore_sets: Vec<Vec<i64>>,
    pub random_ore_sets: usize,
    pub oracle_pairs: usize,
    /// Random pairs per quiver.
    pub pairs: usize,
    pub envelope_pairs: usize,
    pub input: Option<ParsedInput>,
}

impl Default for Params {
    fn default() -> Self {
        Self {
            field: None,
            seed: 0,
            dim_cap: 12,
            family: "a31".to_string(),
            primes: vec![2, 3, 5],
            ore_sets: Vec::new(),
            random_ore_sets: 20,
            oracle_pairs: 500,
            pairs: 100,
            envelope_pairs: 100,
            input: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scenario {
    pub kind: ScenarioKind,
    pub params: Params,
}

impl Scenario {
    pub fn new(kind: ScenarioKind, params: Params) -> Self {
        Self { kind, params }
    }

    fn field(&self) -> FieldSpec {
        let default = if self.kind == ScenarioKind::FreeEnvelope { FieldSpec::Prime(7) } else { FieldSpec::Prime(5) };
        let from_input = self.params.input.as_ref().and_then(|i| i.field);
        self.params.field.or(from_input).unwrap_or(default)
    }

    pub fn validate(&self) -> Result<(), ScenarioError> {
        let p = &self.params;
        if let FieldSpec::Prime(q) = self.field() {
            PrimeField::new(q).map_err(|_| ScenarioError::Usage(format!("field characteristic {q} is not prime")))?;
        }
        match self.kind {
            ScenarioKind::TubeDemo => {
                TubeFamily::from_str(&p.family)?;
            }
            ScenarioKind::DedekindClassify => {
                if p.primes.len() > 6 {
                    return Err(DedekindError::UniverseTooLarge(p.primes.len()).into());
                }
                PrimeSet::new(p.primes.iter().copied())?;
                for set in &p.ore_sets {
                    OreSet::new(set.clone())?;
                }
            }
            ScenarioKind::Custom => {
                if p.input.is_none() {
                    return Err(ScenarioError::Usage("custom needs an input file".to_string()));
                }
            }
            ScenarioKind::FreeEnvelope | ScenarioKind::PerpCheck => {}
        }
        Ok(())
    }

    fn echo(&self) -> BTreeMap<String, String> {
        let p = &self.params;
        let mut out = BTreeMap::new();
        out.insert("seed".to_string(), p.seed.to_string());
        let field = match self.field() {
            FieldSpec::Prime(q) => format!("F{q}"),
            FieldSpec::Rationals => "Q".to_string(),
        };
        match self.kind {
            ScenarioKind::TubeDemo => {
                out.insert("family".to_string(), p.family.clone());
                out.insert("field".to_string(), field);
            }
            ScenarioKind::DedekindClassify => {
                out.insert("primes".to_string(), join(&p.primes));
                let sets: Vec<String> = p.ore_sets.iter().map(|s| join(s)).collect();
                out.insert("ore_sets".to_string(), if sets.is_empty() { "none".to_string() } else { sets.join(";") });
                out.insert("random_ore_sets".to_string(), p.random_ore_sets.to_string());
                out.insert("oracle_pairs".to_string(), p.oracle_pairs.to_string());
            }
            ScenarioKind::FreeEnvelope => {
                out.insert("field".to_string(), field);
                out.insert("pairs".to_string(), p.envelope_pairs.to_string());
            }
            ScenarioKind::PerpCheck => {
                out.insert("field".to_string(), field);
                out.insert("pairs".to_string(), p.pairs.to_string());
            }
            ScenarioKind::Custom => {
                out.insert("field".to_string(), field);
                out.insert("dim_cap".to_string(), p.dim_cap.to_string());
            }
        }
        out
    }

    pub fn run(&self) -> Result<Report, ScenarioError> {
        self.validate()?;
        let checks = match self.kind {
            ScenarioKind::DedekindClassify => dedekind_checks(&self.params)?,
            _ => match self.field() {
                FieldSpec::Prime(q) => self.run_over(&PrimeField::new(q).expect("validated"))?,
                FieldSpec::Rationals => self.run_over(&Rationals)?,
            },
        };
        Ok(Report::new(self.kind.name(), self.echo(), checks))
    }

    fn run_over<F: Field>(&self, field: &F) -> Result<Vec<Check>, ScenarioError> {
        match self.kind {
            ScenarioKind::TubeDemo => tube_checks(field, &self.params),
            ScenarioKind::FreeEnvelope => envelope_checks(field, &self.params),
            ScenarioKind::PerpCheck => perp_checks(field, &self.params),
            ScenarioKind::Custom => custom_checks(field, &self.params),
            ScenarioKind::DedekindClassify => unreachable!("handled without a field"),
        }
    }
}

pub fn run_tube_demo(family: &str, field: FieldSpec, seed: u64) -> Result<Report, ScenarioError> {
    let params = Params { family: family.to_string(), field: Some(field), seed, ..Params::default() };
    Scenario::new(ScenarioKind::TubeDemo, params).run()
}

pub fn run_dedekind_classify(primes: &[u64], ore_sets: &[Vec<i64>], seed: u64) -> Result<Report, ScenarioError> {
    let params = Params { primes: primes.to_vec(), ore_sets: ore_sets.to_vec(), seed, ..Params::default() };
    Scenario::new(ScenarioKind::DedekindClassify, params).run()
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn dims<F: Field>(m: &QuiverRep<F>) -> String {
    format!("({})", join(m.dims()))
}

fn tube_checks<F: Field>(field: &F, p: &Params) -> Result<Vec<Check>, ScenarioError> {
    let family = TubeFamily::from_str(&p.family)?;
    if family != TubeFamily::A31 {
        return Err(ArError::UnsupportedFamily(format!("{} has no tube of rank at least 3", p.family)).into());
    }
    let t = a31_tube_modules(field)?;
    let mut checks = Vec::new();

    let ext_check = |name: &str, label: &str, m: &QuiverRep<F>, expect_zero: bool| -> Result<Check, ScenarioError> {
        let e = ext1_dim(m, &t.s)?;
        Ok(Check::new(name)
            .input(label, dims(m))
            .input("S", dims(&t.s))
            .value("ext1", e)
            .pass((e == 0) == expect_zero))
    };
    checks.push(ext_check("ext1(S[2],S) = 0", "S[2]", &t.s2, true)?);
    checks.push(ext_check("ext1(tau S[2],S) = 0", "tau S[2]", &t.tau_s2, true)?);
    checks.push(ext_check("ext1(tau^- S,S) != 0", "tau^- S", &t.tau_minus_s, false)?);

    let v = BoundSet::new(vec![t.s2.clone(), t.tau_s2.clone()])?;
    let u = BoundSet::new(vec![t.s.clone(), t.tau_s.clone(), t.tau_minus_s.clone()])?;
    let labels = ["tau S", "tau^- S", "S", "S[2]", "tau S[2]"];
    let corpus = [t.tau_s.clone(), t.tau_minus_s.clone(), t.s.clone(), t.s2.clone(), t.tau_s2.clone()];
    let mut c = Check::new("class_compare(V, U) witness S")
        .input("V", "S[2], tau S[2]")
        .input("U", "S, tau S, tau^- S")
        .input("corpus", labels.join(", "));
    c = match class_compare(&v, &u, &corpus)? {
        ClassComparison::Equal => c.value("witness", "none"),
        ClassComparison::Witness { index, in_first, .. } => c
            .value("witness", labels[index])
            .value("in V-perp", in_first)
            .value("in U-perp", !in_first)
            .pass(index == 2 && in_first),
    };
    checks.push(c);

    let t1 = tau(&t.s);
    let t3 = tau(&tau(&t1));
    let period = is_isomorphic(&t1, &t.tau_s, p.seed)?
        && is_isomorphic(&tau(&t.tau_minus_s), &t.s, p.seed)?
        && is_isomorphic(&t3, &t.s, p.seed)?;
    checks.push(
        Check::new("tau-orbit of S has length 3")
            .value("tau S", dims(&t1))
            .value("tau^- S", dims(&tau_minus(&t.s)))
            .pass(period),
    );
    Ok(checks)
}

fn random_presentation(rng: &mut ChaCha8Rng) -> IntMatrix {
    let g = rng.gen_range(0..=3);
    let k = rng.gen_range(0..=3);
    IntMatrix::from_fn(g, k, |_, _| BigInt::from(rng.gen_range(-6i64..=6)))
}

fn dedekind_checks(p: &Params) -> Result<Vec<Check>, ScenarioError> {
    let universe = PrimeSet::new(p.primes.iter().copied())?;
    let table = classify_tilting(&universe)?;
    let expected = 1usize << universe.len();
    let mut checks = vec![Check::new("tilting classes pairwise distinct")
        .input("universe", &universe)
        .value("subsets", table.subsets.len())
        .value("classes", table.distinct_classes().map_or("not separated".to_string(), |n| n.to_string()))
        .pass(table.distinct_classes() == Some(expected))];
    for w in &table.witnesses {
        let (a, b) = (&table.subsets[w.first], &table.subsets[w.second]);
        checks.push(
            Check::new(format!("witness {a} vs {b}"))
                .value("module", format!("Z/{}", w.prime))
                .value("divisible in", if w.in_first { a } else { b })
                .pass(a.contains(w.prime) != w.in_first && b.contains(w.prime) == w.in_first),
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut sets: Vec<(String, Vec<i64>)> = p.ore_sets.iter().map(|s| ("given".to_string(), s.clone())).collect();
    for i in 0..p.random_ore_sets {
        let n = rng.gen_range(1..=3);
        let gens = (0..n).map(|_| rng.gen_range(1i64..=60) * if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        sets.push((format!("random {i}"), gens));
    }
    for (label, gens) in sets {
        let ore = OreSet::new(gens.clone())?;
        let u = u_set_of_ore(&ore);
        // Z/q dies in the localization exactly when some generator is a multiple of q
        let killed: Vec<u64> = (2u64..=60).filter(|&q| tilt_core::exactlin::is_prime(q) && gens.iter().any(|g| g % q as i64 == 0)).collect();
        let eq = universal_localization_eq(&ore);
        checks.push(
            Check::new(format!("ore cross-check {label}"))
                .input("generators", join(&gens))
                .value("u-set", &u)
                .value("localizations agree", eq)
                .pass(eq && u.primes() == killed.as_slice()),
        );
    }

    let mut mismatches = Vec::new();
    for i in 0..p.oracle_pairs {
        let (a, b) = (random_presentation(&mut rng), random_presentation(&mut rng));
        let (m, n) = (classify(&a), classify(&b));
        let agree = hom_dim(&m, &n) == hom_via_resolution(&a, &b)
            && ext_dim(&m, &n) == ext_via_resolution(&a, &b)
            && tor_dim(&m, &n) == tor_via_resolution(&a, &b);
        if !agree {
            mismatches.push(format!("#{i}: {m} / {n}"));
        }
    }
    checks.push(
        Check::new("closed-form Hom/Ext/Tor match resolutions")
            .input("pairs", p.oracle_pairs)
            .value("mismatches", mismatches.len())
            .value("first mismatch", mismatches.first().map_or("none", String::as_str))
            .pass(mismatches.is_empty()),
    );
    Ok(checks)
}

fn random_word(rng: &mut ChaCha8Rng, symbols: usize, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    FreeWord::from_letters((0..len).map(|_| (rng.gen_range(0..symbols), if rng.gen_bool(0.5) { 1 } else { -1 })))
}

fn render_vec<F: Field>(field: &F, v: &[F::Elem]) -> String {
    format!("[{}]", v.iter().map(|x| field.format_elem(x)).collect::<Vec<_>>().join(","))
}

fn envelope_checks<F: Field>(field: &F, p: &Params) -> Result<Vec<Check>, ScenarioError> {
    let given = match &p.input {
        Some(input) => input.build_group(field)?,
        None => None,
    };
    let (alphabet, module) = match given {
        Some(g) => g,
        None => {
            let alphabet = vec!["x".to_string(), "y".to_string()];
            let action = vec![FieldMatrix::from_i64_rows(field.clone(), 1, 1, &[vec![2]]), FieldMatrix::from_i64_rows(field.clone(), 1, 1, &[vec![3]])];
            let module = XDivModule::new(field.clone(), 1, action, &alphabet)?;
            (alphabet, module)
        }
    };
    let base = match &p.input {
        Some(input) => input.build_base(field, module.dimension())?,
        None => None,
    }
    .unwrap_or_else(|| (0..module.dimension()).map(|i| if i == 0 { field.one() } else { field.zero() }).collect());

    let mut checks = Vec::new();
    let at_one = envelope_value(&base, &FreeWord::identity(), &module)?;
    checks.push(
        Check::new("envelope sends 1 to the base vector")
            .input("base", render_vec(field, &base))
            .value("f(1)", render_vec(field, &at_one))
            .pass(at_one == base),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut failures = 0;
    let mut longest = 0;
    for _ in 0..p.envelope_pairs {
        let g = random_word(&mut rng, alphabet.len(), 11);
        let s = FreeWord::letter(rng.gen_range(0..alphabet.len()), if rng.gen_bool(0.5) { 1 } else { -1 });
        let gs = g.mul(&s);
        longest = longest.max(g.letters().len() + 1);
        if envelope_value(&base, &gs, &module)? != module.act(&envelope_value(&base, &g, &module)?, &s) {
            failures += 1;
        }
    }
    checks.push(
        Check::new("envelope is a module map: f(g s) = f(g) s")
            .input("pairs", p.envelope_pairs)
            .input("max length", longest)
            .value("failures", failures)
            .pass(failures == 0),
    );

    let w = flatness_witness(field, 0, 1.min(alphabet.len() - 1))?;
    let nonzero = !w.element.0.is_zero() || !w.element.1.is_zero();
    checks.push(
        Check::new("flatness witness is nonzero with zero image")
            .value("element", format!("({}, {})", w.element.0.render(&alphabet), w.element.1.render(&alphabet)))
            .value("image", w.image.render(&alphabet))
            .pass(nonzero && w.image.is_zero()),
    );

    if let Some(input) = &p.input {
        for (word, (_, text)) in input.build_words(&alphabet)?.iter().zip(&input.words) {
            let value = envelope_value(&base, word, &module)?;
            checks.push(
                Check::new(format!("word {text}"))
                    .value("reduced", word.render(&alphabet))
                    .value("f(word)", render_vec(field, &value))
                    .pass(true),
            );
        }
    }
    Ok(checks)
}

fn random_bound<F: Field>(q: &Arc<Quiver>, field: &F, rng: &mut ChaCha8Rng) -> Result<QuiverRep<F>, ScenarioError> {
    loop {
        let d: Vec<usize> = (0..q.vertex_count()).map(|_| rng.gen_range(0..=2)).collect();
        let u = QuiverRep::random(q.clone(), field.clone(), d, rng);
        if !u.is_zero() && is_bound(&u)? {
            return Ok(u);
        }
    }
}

struct PairOutcome {
    in_class: bool,
    agree: bool,
    duality: bool,
    double_transpose: bool,
}

/// Even indices draw both modules at random; odd ones take `U` among the
/// simple regulars and `M` as a sum of simple regulars, where membership in
/// the class is common.
fn perp_pair<F: Field>(q: &Arc<Quiver>, simples: &[QuiverRep<F>], seed: u64, index: u64) -> Result<PairOutcome, ScenarioError> {
    let field = simples[0].field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let (u, m) = if index.is_multiple_of(2) {
        let u = random_bound(q, field, &mut rng)?;
        let dm: Vec<usize> = (0..q.vertex_count()).map(|_| rng.gen_range(0..=3)).collect();
        (u, QuiverRep::random(q.clone(), field.clone(), dm, &mut rng))
    } else {
        let u = simples.choose(&mut rng).expect("catalog is nonempty").random_conjugate(&mut rng);
        let parts: Vec<QuiverRep<F>> = (0..rng.gen_range(1..=2)).map(|_| simples.choose(&mut rng).expect("catalog is nonempty").clone()).collect();
        (u, QuiverRep::direct_sum_all(q.clone(), field.clone(), &parts)?.random_conjugate(&mut rng))
    };
    let pres = proj_presentation(&u);
    let r = perp_conditions(&m, &pres)?;
    let qop = Arc::new(q.opposite());
    let dx: Vec<usize> = (0..q.vertex_count()).map(|_| rng.gen_range(0..=2)).collect();
    let x = QuiverRep::random(qop, field.clone(), dx, &mut rng);
    let (tor, hom) = transpose_duality_check(&pres, &x)?;
    let double_transpose = is_isomorphic(&transpose(&transpose(&u)), &u, seed ^ index)?;
    Ok(PairOutcome { in_class: r.cond_homext, agree: r.consistent, duality: tor == hom, double_transpose })
}

fn perp_checks<F: Field>(field: &F, p: &Params) -> Result<Vec<Check>, ScenarioError> {
    let mut checks = Vec::new();
    for (stream, family) in [TubeFamily::Kronecker, TubeFamily::A31].into_iter().enumerate() {
        let catalog = tube_catalog(family, field);
        let q = catalog.quiver.clone();
        let simples: Vec<QuiverRep<F>> = catalog.simples().cloned().collect();
        let base = stream as u64 * 1_000_000;
        // collect keeps the index order whatever the scheduling
        let outcomes = (0..p.pairs as u64)
            .into_par_iter()
            .map(|i| perp_pair(&q, &simples, p.seed, base + i))
            .collect::<Result<Vec<_>, _>>()?;
        let count = |f: fn(&PairOutcome) -> bool| outcomes.iter().filter(|o| f(o)).count();
        let disagreements = outcomes.len() - count(|o| o.agree);
        checks.push(
            Check::new(format!("perpendicular conditions agree on {}", q.name()))
                .input("pairs", outcomes.len())
                .value("in class", count(|o| o.in_class))
                .value("disagreements", disagreements)
                .pass(disagreements == 0),
        );
        let bad = outcomes.len() - count(|o| o.duality);
        checks.push(
            Check::new(format!("dim Tor1(U,X) = dim Hom(Tr U,X) on {}", q.name()))
                .input("pairs", outcomes.len())
                .value("failures", bad)
                .pass(bad == 0),
        );
        let bad = outcomes.len() - count(|o| o.double_transpose);
        checks.push(
            Check::new(format!("Tr Tr U = U on {}", q.name()))
                .input("modules", outcomes.len())
                .value("failures", bad)
                .pass(bad == 0),
        );
    }
    Ok(checks)
}

fn custom_checks<F: Field>(field: &F, p: &Params) -> Result<Vec<Check>, ScenarioError> {
    let input = p.input.as_ref().expect("validated");
    let mut checks = Vec::new();

    let reps = input.build_reps(field)?;
    for (name, m) in &reps {
        let ext_self = ext1_dim(m, m)?;
        checks.push(
            Check::new(format!("rep {name}"))
                .value("dims", dims(m))
                .value("dim End", hom_space(m, m)?.dim())
                .value("dim Ext1(self,self)", ext_self)
                .value("tau", dims(&tau(m)))
                .value("bound", is_bound(m)?)
                .pass(true),
        );
    }
    for (a_name, a) in &reps {
        for (b_name, b) in &reps {
            let hom = hom_space(a, b)?.dim() as i64;
            let ext = ext1_dim(a, b)? as i64;
            let euler = euler_form(a.quiver(), &a.dim_vector(), &b.dim_vector());
            checks.push(
                Check::new(format!("euler form ({a_name},{b_name})"))
                    .value("hom", hom)
                    .value("ext1", ext)
                    .value("euler", euler)
                    .pass(euler == hom - ext),
            );
        }
    }

    for (i, m) in input.zmods.iter().enumerate() {
        for (j, n) in input.zmods.iter().enumerate() {
            let (a, b) = (m.presentation(), n.presentation());
            let hom = hom_dim(m, n);
            let ext = ext_dim(m, n);
            let tor = tor_dim(m, n);
            checks.push(
                Check::new(format!("zmod pair ({},{})", i + 1, j + 1))
                    .input("M", m)
                    .input("N", n)
                    .value("Hom", &hom)
                    .value("Ext1", &ext)
                    .value("Tor1", &tor)
                    .pass(hom == hom_via_resolution(&a, &b) && ext == ext_via_resolution(&a, &b) && tor == tor_via_resolution(&a, &b)),
            );
        }
    }

    if input.group.is_some() || !input.words.is_empty() {
        let alphabet = match &input.group {
            Some(g) => g.alphabet.clone(),
            None => return Err(ScenarioError::Usage("words need an alphabet line".to_string())),
        };
        if input.group.as_ref().is_some_and(|g| !g.actions.is_empty()) {
            checks.extend(envelope_checks(field, p)?);
        } else {
            for (word, (_, text)) in input.build_words(&alphabet)?.iter().zip(&input.words) {
                checks.push(Check::new(format!("word {text}")).value("reduced", word.render(&alphabet)).pass(true));
            }
        }
    }
    if checks.is_empty() {
        return Err(ScenarioError::Usage("input defines nothing to check".to_string()));
    }
    Ok(checks)
}
