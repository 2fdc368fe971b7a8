//! Check orchestration: each [`CheckSpec`] runs one kind of check and yields a
//! serializable [`CheckReport`].

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::capelli::{eig_formula, ElementName, ShiftFamily};

use crate::coeff::{fmt_rat_str, int, rat, Rat, UnivPoly};
use crate::error::{Error, Result};
use crate::lemmas::{run_lemma, LemmaConfig};
use crate::lie::{AlgebraKind, GenId, Realization};
use crate::ncmatrix::{det_k, generator_matrix, hafnian, per_k, pfaffian, IndexSeq, SeqMode};
use crate::oracle::free_product;
use crate::pbw::{weight_from_partition, EnvElement};
use crate::ratmat::RatMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Central,
    Identity,
    Eigenvalue,
    Pfaffian,
    Hafnian,
    Lemma,
    Oracle,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] = [
        CheckKind::Central,
        CheckKind::Identity,
        CheckKind::Eigenvalue,
        CheckKind::Pfaffian,
        CheckKind::Hafnian,
        CheckKind::Lemma,
        CheckKind::Oracle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Central => "central",
            CheckKind::Identity => "identity",
            CheckKind::Eigenvalue => "eigenvalue",
            CheckKind::Pfaffian => "pfaffian",
            CheckKind::Hafnian => "hafnian",
            CheckKind::Lemma => "lemma",
            CheckKind::Oracle => "oracle",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Algebra family selected on the command line. A custom form matrix turns the
/// orthogonal families into o(S) and `sp` into sp(J).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlgebraArg {
    #[serde(rename = "gl")]
    Gl,
    #[serde(rename = "o-id")]
    OId,
    #[serde(rename = "o-split")]
    OSplit,
    #[serde(rename = "sp")]
    Sp,
}

impl AlgebraArg {
    pub const ALL: [AlgebraArg; 4] = [AlgebraArg::Gl, AlgebraArg::OId, AlgebraArg::OSplit, AlgebraArg::Sp];

    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraArg::Gl => "gl",
            AlgebraArg::OId => "o-id",
            AlgebraArg::OSplit => "o-split",
            AlgebraArg::Sp => "sp",
        }
    }

    /// Builds the realization, using `form` in place of the standard one if given.
    pub fn realization(self, n: usize, form: Option<&RatMatrix>) -> Result<Arc<Realization>> {
        match (self, form) {
            (AlgebraArg::Gl, None) => Realization::gl(n),
            (AlgebraArg::OId, None) => Realization::o_identity(n),
            (AlgebraArg::OSplit, None) => Realization::o_split(n),
            (AlgebraArg::Sp, None) => Realization::sp_split(n),
            (AlgebraArg::Gl, Some(_)) => Err(Error::InvalidForm("gl takes no form matrix".into())),
            (AlgebraArg::OId | AlgebraArg::OSplit, Some(s)) => {
                check_form_size(s, n)?;
                Realization::general(AlgebraKind::OGeneral, s.clone())
            }
            (AlgebraArg::Sp, Some(j)) => {
                check_form_size(j, n)?;
                Realization::general(AlgebraKind::SpGeneral, j.clone())
            }
        }
    }

    /// Element used when none is named.
    pub fn default_element(self) -> ElementName {
        match self {
            AlgebraArg::Gl => ElementName::CGlK,
            AlgebraArg::OId => ElementName::CO1K,
            AlgebraArg::OSplit => ElementName::COS0K,
            AlgebraArg::Sp => ElementName::DSp,
        }
    }
}

fn check_form_size(form: &RatMatrix, n: usize) -> Result<()> {
    if form.rows() != n {
        return Err(Error::InvalidForm(format!("form matrix has size {} but N = {n}", form.rows())));
    }
    Ok(())
}

impl fmt::Display for AlgebraArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgebraArg {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AlgebraArg::ALL.into_iter().find(|a| a.as_str() == s).ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// One requested check.
///
/// For `pfaffian` and `hafnian`, `k` is half the minor size. For `lemma`, `n`
/// and `k` narrow the registered sizes when given.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckSpec {
    pub kind: CheckKind,
    pub algebra: AlgebraArg,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub lambda: Option<Vec<Rat>>,
    /// An element name such as `D.sp`, or a single generator such as `E[1,2]`.
    pub element: Option<String>,
    pub lemma: Option<String>,
    pub form: Option<RatMatrix>,
    pub seed: u64,
    /// Substitute this value for `u` before comparing (smoke mode).
    pub u_value: Option<Rat>,
}

impl CheckSpec {
    pub fn new(kind: CheckKind, algebra: AlgebraArg, n: usize, k: usize) -> Self {
        CheckSpec {
            kind,
            algebra,
            n: Some(n),
            k: Some(k),
            lambda: None,
            element: None,
            lemma: None,
            form: None,
            seed: 0,
            u_value: None,
        }
    }

    pub fn with_element(mut self, name: &str) -> Self {
        self.element = Some(name.to_string());
        self
    }

    pub fn with_lambda(mut self, lambda: &[i64]) -> Self {
        self.lambda = Some(lambda.iter().map(|&x| int(x)).collect());
        self
    }

    pub fn lemma(id: &str) -> Self {
        CheckSpec {
            kind: CheckKind::Lemma,
            algebra: AlgebraArg::Gl,
            n: None,
            k: None,
            lambda: None,
            element: None,
            lemma: Some(id.to_string()),
            form: None,
            seed: 0,
            u_value: None,
        }
    }

    fn require_n(&self) -> Result<usize> {
        self.n.ok_or_else(|| Error::InvalidSize(format!("{} check needs N", self.kind)))
    }

    fn require_k(&self) -> Result<usize> {
        self.k.ok_or_else(|| Error::InvalidSize(format!("{} check needs k", self.kind)))
    }

    fn u(&self) -> UnivPoly {
        match &self.u_value {
            Some(x) => UnivPoly::constant(x.clone()),
            None => UnivPoly::u(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Result of one check. A failing report always carries a witness; a skipped
/// one carries the reason in the same field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: CheckKind,
    /// `None` for lemma checks, which fix their own algebras.
    pub algebra: Option<AlgebraArg>,
    #[serde(rename = "N")]
    pub n: Option<usize>,
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lemma: Option<String>,
    pub status: Status,
    pub witness: Option<String>,
    pub elapsed_ms: u64,
    pub terms: u64,
    #[serde(default)]
    pub memo_entries: u64,
    #[serde(default)]
    pub memo_hits: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report is plain data")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        write!(f, "{status} {}", self.check)?;
        if let Some(a) = self.algebra {
            write!(f, " {a}")?;
        }
        if let Some(n) = self.n {
            write!(f, " N={n}")?;
        }
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some(e) = &self.element {
            write!(f, " {e}")?;
        }
        if let Some(l) = &self.lemma {
            write!(f, " {l}")?;
        }
        write!(f, " ({} terms, {} ms)", self.terms, self.elapsed_ms)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

/// Status, witness and term count of a check before the spec echo is attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub witness: Option<String>,
    pub terms: u64,
}

impl Outcome {
    fn pass(terms: usize) -> Self {
        Outcome { status: Status::Pass, witness: None, terms: terms as u64 }
    }

    fn fail(witness: String, terms: usize) -> Self {
        Outcome { status: Status::Fail, witness: Some(witness), terms: terms as u64 }
    }

    fn skipped(reason: String) -> Self {
        Outcome { status: Status::Skipped, witness: Some(reason), terms: 0 }
    }
}

/// Passes iff `e` commutes with every basis generator. Generators are tried in
/// index order `(i, j)`, and the witness is the first nonzero commutator, e.g.
/// `[E[1,1], E[1,2]] = E[1,2]`.
pub fn check_central(e: &EnvElement, label: &str) -> Result<Outcome> {
    let alg = e.realization();
    let mut gens: Vec<GenId> = alg.basis().collect();
    gens.sort_by_key(|&g| alg.pair(g));
    for g in gens {
        let c = e.commutator(&EnvElement::generator(alg, g))?;
        if !c.is_zero() {
            return Ok(Outcome::fail(format!("[{label}, {}] = {}", alg.label(g), render_leading(&c)), e.num_terms()));
        }
    }
    Ok(Outcome::pass(e.num_terms()))
}

/// Passes iff `lhs = rhs`. The witness is the first term of `rhs - lhs`.
pub fn check_identity(lhs: &EnvElement, rhs: &EnvElement) -> Result<Outcome> {
    let diff = rhs.try_sub(lhs)?;
    let terms = lhs.num_terms().max(rhs.num_terms());
    Ok(match diff.first_term() {
        None => Outcome::pass(terms),
        Some(_) => Outcome::fail(render_leading(&diff), terms),
    })
}

fn render_leading(e: &EnvElement) -> String {
    let first = e.first_term().unwrap_or_else(|| "0".into());
    if e.num_terms() > 1 {
        format!("{first} + ... ({} terms)", e.num_terms())
    } else {
        first
    }
}

/// `Det_{2k}(F; tilde-natural_{2k})` against `sum_alpha Pf((F S)_alpha) Pf((S^{-1} F)_alpha)`
/// over strictly increasing alpha of length 2k.
pub fn check_pfaffian_identity(alg: &Arc<Realization>, half: usize) -> Result<Outcome> {
    let form = orthogonal_form(alg)?;
    let (lhs, rhs) = matching_identity_sides(alg, &form, half, false)?;
    check_identity(&lhs, &rhs)
}

/// `Per_{2k}(F; tilde-natural_{2k})` against
/// `sum_alpha (1/alpha!) Hf((F J)_alpha) Hf((J^{-1} F)_alpha)` over weakly increasing alpha.
pub fn check_hafnian_identity(alg: &Arc<Realization>, half: usize) -> Result<Outcome> {
    let form = match alg.kind() {
        AlgebraKind::SpSplit | AlgebraKind::SpGeneral => alg.form().cloned().ok_or(Error::Singular)?,
        other => return Err(Error::Unsupported(format!("Hafnian identity needs sp(J), got {other:?}"))),
    };
    let (lhs, rhs) = matching_identity_sides(alg, &form, half, true)?;
    check_identity(&lhs, &rhs)
}

fn orthogonal_form(alg: &Realization) -> Result<RatMatrix> {
    match alg.kind() {
        AlgebraKind::OIdentity => Ok(RatMatrix::identity(alg.size())),
        AlgebraKind::OSplit | AlgebraKind::OGeneral => alg.form().cloned().ok_or(Error::Singular),
        other => Err(Error::Unsupported(format!("Pfaffian identity needs o(S), got {other:?}"))),
    }
}

fn matching_identity_sides(
    alg: &Arc<Realization>,
    form: &RatMatrix,
    half: usize,
    symplectic: bool,
) -> Result<(EnvElement, EnvElement)> {
    let n = alg.size();
    let size = 2 * half;
    if half == 0 || (!symplectic && size > n) {
        return Err(Error::InvalidSize(format!("2k = {size} is not feasible for N = {n}")));
    }
    let f = generator_matrix(alg);
    let shifts: Vec<UnivPoly> = ShiftFamily::TildeNatural.sequence(size).into_iter().map(UnivPoly::constant).collect();
    let lhs = if symplectic { per_k(&f, size, &shifts)? } else { det_k(&f, size, &shifts)? };
    let left = f.right_mul(form)?;
    let right = f.left_mul(&form.inverse()?)?;
    let mode = if symplectic { SeqMode::Weak } else { SeqMode::Strict };
    let parts: Vec<EnvElement> = IndexSeq::all(n, size, mode)
        .into_par_iter()
        .map(|alpha| -> Result<EnvElement> {
            let a = left.submatrix(alpha.indices())?;
            let b = right.submatrix(alpha.indices())?;
            let term = if symplectic {
                (&hafnian(&a)? * &hafnian(&b)?).scale_rat(&(Rat::one() / alpha.multiplicity_factorial()))
            } else {
                &pfaffian(&a)? * &pfaffian(&b)?
            };
            Ok(term)
        })
        .collect::<Result<_>>()?;
    let mut rhs = EnvElement::zero(alg);
    for p in &parts {
        rhs.add_assign_checked(p)?;
    }
    Ok((lhs, rhs))
}

/// Partitions used when an eigenvalue check names none.
pub fn default_partitions(len: usize) -> Vec<Vec<Rat>> {
    let patterns: [&[i64]; 6] = [&[0], &[1], &[2, 1], &[3, 1, 1], &[2, 2, 2, 2], &[4, 2, 1, 0]];
    let mut out: Vec<Vec<Rat>> = Vec::new();
    for p in patterns {
        let lam: Vec<Rat> = (0..len).map(|i| int(p.get(i).copied().unwrap_or(0))).collect();
        if !out.contains(&lam) {
            out.push(lam);
        }
    }
    out
}

fn resolve_element(spec: &CheckSpec, alg: &Arc<Realization>) -> Result<(String, EnvElement, Option<ElementName>)> {
    let text = spec.element.clone().unwrap_or_else(|| spec.algebra.default_element().to_string());
    if let Ok(name) = text.parse::<ElementName>() {
        if name.algebra() != alg.kind() {
            return Err(Error::Unsupported(format!("{name} lives over {:?}, not {}", name.algebra(), alg.descriptor())));
        }
        let k = if name.takes_k() { spec.require_k()? } else { alg.size() };
        let e = name.build(alg, k, &spec.u())?;
        return Ok((text, e, Some(name)));
    }
    let (i, j) = parse_symbol(&text, alg.letter())?;
    Ok((text, EnvElement::symbol(alg, i, j)?, None))
}

/// Parses `E[1,2]`, `E12` or `F[3,1]` into 1-based indices.
fn parse_symbol(s: &str, letter: char) -> Result<(usize, usize)> {
    let bad = || Error::UnknownName(s.to_string());
    let rest = s.strip_prefix(letter).ok_or_else(bad)?;
    let (a, b) = if let Some(inner) = rest.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        inner.split_once(',').ok_or_else(bad)?
    } else if rest.len() == 2 && rest.is_char_boundary(1) {
        rest.split_at(1)
    } else {
        return Err(bad());
    };
    let i = a.trim().parse().map_err(|_| bad())?;
    let j = b.trim().parse().map_err(|_| bad())?;
    Ok((i, j))
}

fn run_eigenvalue(spec: &CheckSpec, alg: &Arc<Realization>) -> Result<Outcome> {
    let n = alg.size();
    if !alg.is_graded() {
        return Ok(Outcome::skipped(format!("{} has no triangular grading", alg.descriptor())));
    }
    let (label, e, name) = resolve_element(spec, alg)?;
    let name = name.ok_or_else(|| Error::Unsupported(format!("{label} is not a named central element")))?;
    let k = if name.takes_k() { spec.require_k()? } else { n };
    let Some(formula) = name.eig_formula(n, k) else {
        return Ok(Outcome::skipped(format!("no closed-form eigenvalue for {name} at N={n}, k={k}")));
    };
    let len = if alg.kind() == AlgebraKind::Gl { n } else { n / 2 };
    let lambdas = match &spec.lambda {
        Some(l) => vec![l.clone()],
        None => default_partitions(len),
    };
    for lam in &lambdas {
        if lam.len() != len {
            return Err(Error::LengthMismatch { expected: len, got: lam.len() });
        }
        let w = weight_from_partition(alg, lam)?;
        let got = e.eigenvalue(&w)?;
        let mut want = eig_formula(formula, n, k, lam)?;
        if let Some(x) = &spec.u_value {
            want = UnivPoly::constant(want.eval(x));
        }
        if got != want {
            let lam: Vec<String> = lam.iter().map(fmt_rat_str).collect();
            return Ok(Outcome::fail(
                format!("lambda=({}): element gives {got}, formula gives {want}", lam.join(",")),
                e.num_terms(),
            ));
        }
    }
    Ok(Outcome::pass(e.num_terms()))
}

fn run_identity(spec: &CheckSpec, alg: &Arc<Realization>) -> Result<Outcome> {
    let (label, lhs, name) = resolve_element(spec, alg)?;
    let name = name.ok_or_else(|| Error::Unsupported(format!("{label} has no registered partner")))?;
    let k = if name.partner().takes_k() { spec.require_k()? } else { alg.size() };
    let rhs = name.partner().build(alg, k, &spec.u())?;
    check_identity(&lhs, &rhs)
}

/// Random sorted element with `terms` monomials of degree at most `deg`.
fn random_element<R: Rng>(alg: &Arc<Realization>, terms: usize, deg: usize, rng: &mut R) -> Result<EnvElement> {
    let dim = alg.dim() as u16;
    let mut out = Vec::with_capacity(terms);
    for _ in 0..terms {
        let d = rng.gen_range(0..=deg);
        let mut m: Vec<GenId> = (0..d).map(|_| GenId(rng.gen_range(0..dim))).collect();
        m.sort();
        let c = rat(rng.gen_range(-3i64..=3), rng.gen_range(1i64..=2));
        let poly = if rng.gen_bool(0.3) { UnivPoly::u_plus(c) } else { UnivPoly::constant(c) };
        out.push((m, poly));
    }
    EnvElement::from_terms(alg, out)
}

/// Compares the PBW product with the free-algebra rewriting oracle on
/// `count` seeded random pairs of total degree at most 4.
pub fn check_oracle(alg: &Arc<Realization>, count: usize, seed: u64) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut terms = 0;
    for i in 0..count {
        let a = random_element(alg, rng.gen_range(1..=3), 2, &mut rng)?;
        let b = random_element(alg, rng.gen_range(1..=3), 2, &mut rng)?;
        let engine = &a * &b;
        let reference = free_product(&a, &b, &mut rng)?;
        terms += engine.num_terms();
        if engine != reference {
            let diff = reference.try_sub(&engine)?;
            return Ok(Outcome::fail(format!("product #{i}: {}", render_leading(&diff)), terms));
        }
    }
    Ok(Outcome::pass(terms))
}

/// Number of random products in an `oracle` check.
pub const ORACLE_PRODUCTS: usize = 200;

/// Runs one check. Invalid parameters are errors, not failures.
pub fn run_check(spec: &CheckSpec) -> Result<CheckReport> {
    let start = Instant::now();
    let mut report = CheckReport {
        check: spec.kind,
        algebra: (spec.kind != CheckKind::Lemma).then_some(spec.algebra),
        n: spec.n,
        k: spec.k,
        element: None,
        lemma: None,
        status: Status::Pass,
        witness: None,
        elapsed_ms: 0,
        terms: 0,
        memo_entries: 0,
        memo_hits: 0,
    };
    let mut alg_used = None;
    let outcome = match spec.kind {
        CheckKind::Lemma => {
            let id = spec.lemma.clone().ok_or_else(|| Error::UnknownName("missing lemma id".into()))?;
            report.lemma = Some(id.clone());
            let cfg = LemmaConfig { n: spec.n, k: spec.k, seed: spec.seed };
            let r = run_lemma(&id, &cfg)?;
            match r.failure {
                None => Outcome::pass(r.terms),
                Some(w) => Outcome::fail(w, r.terms),
            }
        }
        kind => {
            let alg = spec.algebra.realization(spec.require_n()?, spec.form.as_ref())?;
            alg_used = Some(alg.clone());
            match kind {
                CheckKind::Central => {
                    let (label, e, _) = resolve_element(spec, &alg)?;
                    report.element = Some(label.clone());
                    check_central(&e, &label)?
                }
                CheckKind::Identity => {
                    report.element = Some(spec.element.clone().unwrap_or_else(|| spec.algebra.default_element().to_string()));
                    run_identity(spec, &alg)?
                }
                CheckKind::Eigenvalue => {
                    report.element = Some(spec.element.clone().unwrap_or_else(|| spec.algebra.default_element().to_string()));
                    run_eigenvalue(spec, &alg)?
                }
                CheckKind::Pfaffian => check_pfaffian_identity(&alg, spec.require_k()?)?,
                CheckKind::Hafnian => check_hafnian_identity(&alg, spec.require_k()?)?,
                CheckKind::Oracle => check_oracle(&alg, ORACLE_PRODUCTS, spec.seed)?,
                CheckKind::Lemma => unreachable!(),
            }
        }
    };
    report.status = outcome.status;
    report.witness = outcome.witness;
    report.terms = outcome.terms;
    if let Some(alg) = alg_used {
        let (entries, hits, _) = alg.memo_stats();
        report.memo_entries = entries as u64;
        report.memo_hits = hits;
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Runs independent checks in parallel; results come back in spec order.
pub fn run_checks(specs: &[CheckSpec]) -> Vec<Result<CheckReport>> {
    specs.par_iter().map(run_check).collect()
}

/// Desk-scale suite covering every check kind.
pub fn default_suite(seed: u64) -> Vec<CheckSpec> {
    use AlgebraArg::*;
    use CheckKind::*;
    let mut specs = Vec::new();
    for n in 1..=3 {
        specs.push(CheckSpec::new(Central, Gl, n, n).with_element("C.gl"));
        specs.push(CheckSpec::new(Identity, Gl, n, n).with_element("C.gl"));
        specs.push(CheckSpec::new(Eigenvalue, Gl, n, n).with_element("C.gl"));
        for k in 1..=n {
            specs.push(CheckSpec::new(Identity, Gl, n, k).with_element("C.gl.k"));
            specs.push(CheckSpec::new(Identity, Gl, n, k).with_element("D.gl.k"));
            specs.push(CheckSpec::new(Eigenvalue, Gl, n, k).with_element("C.gl.k"));
        }
    }
    for n in 2..=3 {
        specs.push(CheckSpec::new(Identity, OId, n, n).with_element("C.o1"));
        specs.push(CheckSpec::new(Central, OId, n, n).with_element("C.o1"));
        specs.push(CheckSpec::new(Pfaffian, OId, n, 1));
    }
    for n in 2..=4 {
        specs.push(CheckSpec::new(Identity, OSplit, n, n).with_element("C.oS0"));
        specs.push(CheckSpec::new(Eigenvalue, OSplit, n, n).with_element("C.oS0"));
        specs.push(CheckSpec::new(Pfaffian, OSplit, n, 1));
        for k in 1..=n.min(2) {
            specs.push(CheckSpec::new(Identity, OSplit, n, k).with_element("C.oS0.k"));
        }
    }
    for (n, k) in [(2, 1), (2, 2), (4, 1)] {
        specs.push(CheckSpec::new(Identity, Sp, n, k).with_element("D.sp"));
        specs.push(CheckSpec::new(Central, Sp, n, k).with_element("D.sp"));
        specs.push(CheckSpec::new(Eigenvalue, Sp, n, k).with_element("D.sp"));
    }
    specs.push(CheckSpec::new(Hafnian, Sp, 2, 1));
    for alg in [Gl, OSplit, Sp] {
        let mut s = CheckSpec::new(Oracle, alg, 2, 0);
        s.k = None;
        s.seed = seed;
        specs.push(s);
    }
    for id in crate::lemmas::LEMMA_IDS {
        let mut s = CheckSpec::lemma(id);
        s.seed = seed;
        specs.push(s);
    }
    specs
}
