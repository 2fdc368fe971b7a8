//! Concrete realizations of gl_N, o(S) and sp(J) inside gl_N.
//!
//! Every realization carries an ordered basis of generator symbols, the
//! defining N x N matrix of each basis element, structure constants computed
//! through the gl_N embedding, and (for gl and the split forms) the triangular
//! grading used by the Harish-Chandra projection.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::coeff::{int, rat, Rat};
use crate::error::{Error, Result};
use crate::pbw::ProductMemo;
use crate::ratmat::{EchelonBasis, RatMatrix};

/// Position of a generator in its realization's basis. The basis is stored in
/// the fixed total order, so comparing ids compares generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct GenId(pub u16);

impl GenId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Sparse rational combination of basis generators, sorted by id.
pub type Combo = Vec<(GenId, Rat)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Grade {
    Minus,
    Zero,
    Plus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Gl,
    OIdentity,
    OSplit,
    OGeneral,
    SpSplit,
    SpGeneral,
}

/// Which scalar diagonal shift to apply to a split generator matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Tilde,
    Hat,
}

/// Serializable description of a realization, e.g. `sp-split:N=4` or
/// `o-general:S=1,0;0,1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Descriptor {
    Gl(usize),
    OIdentity(usize),
    OSplit(usize),
    SpSplit(usize),
    OGeneral(RatMatrix),
    SpGeneral(RatMatrix),
}

impl Descriptor {
    pub fn kind(&self) -> AlgebraKind {
        match self {
            Descriptor::Gl(_) => AlgebraKind::Gl,
            Descriptor::OIdentity(_) => AlgebraKind::OIdentity,
            Descriptor::OSplit(_) => AlgebraKind::OSplit,
            Descriptor::SpSplit(_) => AlgebraKind::SpSplit,
            Descriptor::OGeneral(_) => AlgebraKind::OGeneral,
            Descriptor::SpGeneral(_) => AlgebraKind::SpGeneral,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Descriptor::Gl(n) | Descriptor::OIdentity(n) | Descriptor::OSplit(n) | Descriptor::SpSplit(n) => *n,
            Descriptor::OGeneral(b) | Descriptor::SpGeneral(b) => b.rows(),
        }
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Gl(n) => write!(f, "gl:N={n}"),
            Descriptor::OIdentity(n) => write!(f, "o-identity:N={n}"),
            Descriptor::OSplit(n) => write!(f, "o-split:N={n}"),
            Descriptor::SpSplit(n) => write!(f, "sp-split:N={n}"),
            Descriptor::OGeneral(b) => write!(f, "o-general:S={}", b.to_csv()),
            Descriptor::SpGeneral(b) => write!(f, "sp-general:J={}", b.to_csv()),
        }
    }
}

impl FromStr for Descriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid realization descriptor {s:?}"));
        let (kind, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let (key, value) = rest.split_once('=').ok_or_else(bad)?;
        let size = || value.trim().parse::<usize>().map_err(|_| bad());
        match (kind.trim(), key.trim()) {
            ("gl", "N") => Ok(Descriptor::Gl(size()?)),
            ("o-identity" | "o-id", "N") => Ok(Descriptor::OIdentity(size()?)),
            ("o-split", "N") => Ok(Descriptor::OSplit(size()?)),
            ("sp-split" | "sp", "N") => Ok(Descriptor::SpSplit(size()?)),
            ("o-general", "S" | "B") => Ok(Descriptor::OGeneral(RatMatrix::parse_csv(value)?)),
            ("sp-general", "J" | "B") => Ok(Descriptor::SpGeneral(RatMatrix::parse_csv(value)?)),
            _ => Err(bad()),
        }
    }
}

/// The split form `S_0 = (delta_{i, N+1-j})`.
pub fn split_symmetric_form(n: usize) -> RatMatrix {
    RatMatrix::from_fn(n, n, |i, j| if i + j == n - 1 { Rat::one() } else { Rat::zero() })
}

/// The split alternating form `J_0 = (eps(j) delta_{i j'})`.
pub fn split_alternating_form(n: usize) -> RatMatrix {
    let half = n / 2;
    RatMatrix::from_fn(n, n, |i, j| {
        if i + j == n - 1 {
            if j >= half {
                Rat::one()
            } else {
                -Rat::one()
            }
        } else {
            Rat::zero()
        }
    })
}

/// A Lie algebra presented inside gl_N by generator symbols.
pub struct Realization {
    descriptor: Descriptor,
    n: usize,
    labels: Vec<(usize, usize)>,
    matrices: Vec<RatMatrix>,
    grades: Option<Vec<Grade>>,
    brackets: Vec<Vec<Combo>>,
    symbols: Vec<Combo>,
    form: Option<RatMatrix>,
    pub(crate) memo: ProductMemo,
}

impl fmt::Debug for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Realization({}, dim={})", self.descriptor, self.dim())
    }
}

struct Blueprint {
    descriptor: Descriptor,
    n: usize,
    form: Option<RatMatrix>,
    /// Defining matrix of symbol (i, j), 0-based.
    symbol: Box<dyn Fn(usize, usize) -> RatMatrix>,
    /// Candidate basis labels (0-based) in preference order.
    candidates: Vec<(usize, usize)>,
    /// Every candidate must be independent (split and gl bases).
    strict: bool,
    graded: bool,
}

impl Realization {
    pub fn gl(n: usize) -> Result<Arc<Self>> {
        if n == 0 {
            return Err(Error::InvalidSize("gl_N needs N >= 1".into()));
        }
        let candidates = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        let r = Self::assemble(Blueprint {
            descriptor: Descriptor::Gl(n),
            n,
            form: None,
            symbol: Box::new(move |i, j| RatMatrix::unit(n, i, j)),
            candidates,
            strict: true,
            graded: true,
        })?;
        r.check_closed_form()?;
        Ok(r)
    }

    pub fn sp_split(n: usize) -> Result<Arc<Self>> {
        if n == 0 || n % 2 == 1 {
            return Err(Error::InvalidSize(format!("sp-split needs even N >= 2, got {n}")));
        }
        let candidates = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| (i, j) <= (n - 1 - j, n - 1 - i))
            .collect();
        let r = Self::assemble(Blueprint {
            descriptor: Descriptor::SpSplit(n),
            n,
            form: Some(split_alternating_form(n)),
            symbol: Box::new(move |i, j| split_generator(n, i, j, true)),
            candidates,
            strict: true,
            graded: true,
        })?;
        r.check_closed_form()?;
        Ok(r)
    }

    pub fn o_split(n: usize) -> Result<Arc<Self>> {
        if n < 2 {
            return Err(Error::InvalidSize(format!("o-split needs N >= 2, got {n}")));
        }
        let candidates = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| (i, j) < (n - 1 - j, n - 1 - i))
            .collect();
        let r = Self::assemble(Blueprint {
            descriptor: Descriptor::OSplit(n),
            n,
            form: Some(split_symmetric_form(n)),
            symbol: Box::new(move |i, j| split_generator(n, i, j, false)),
            candidates,
            strict: true,
            graded: true,
        })?;
        r.check_closed_form()?;
        Ok(r)
    }

    pub fn o_identity(n: usize) -> Result<Arc<Self>> {
        if n < 2 {
            return Err(Error::InvalidSize(format!("o-identity needs N >= 2, got {n}")));
        }
        let candidates = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Self::assemble(Blueprint {
            descriptor: Descriptor::OIdentity(n),
            n,
            form: Some(RatMatrix::identity(n)),
            symbol: Box::new(move |i, j| &RatMatrix::unit(n, i, j) - &RatMatrix::unit(n, j, i)),
            candidates,
            strict: true,
            graded: false,
        })
    }

    /// o(S) for symmetric `form`, or sp(J) for alternating `form`, with an
    /// echelon-selected basis and no grading.
    pub fn general(kind: AlgebraKind, form: RatMatrix) -> Result<Arc<Self>> {
        let n = form.rows();
        if !form.is_square() || n == 0 {
            return Err(Error::InvalidForm("form matrix must be square and nonempty".into()));
        }
        let descriptor = match kind {
            AlgebraKind::OGeneral | AlgebraKind::OSplit | AlgebraKind::OIdentity => {
                if !form.is_symmetric() {
                    return Err(Error::InvalidForm("o(S) needs a symmetric S".into()));
                }
                Descriptor::OGeneral(form.clone())
            }
            AlgebraKind::SpGeneral | AlgebraKind::SpSplit => {
                if n % 2 == 1 || !form.is_alternating() {
                    return Err(Error::InvalidForm("sp(J) needs an alternating J of even size".into()));
                }
                Descriptor::SpGeneral(form.clone())
            }
            AlgebraKind::Gl => return Err(Error::InvalidForm("gl_N takes no form matrix".into())),
        };
        let inv = form.inverse().map_err(|_| Error::InvalidForm("form matrix is singular".into()))?;
        let (b, binv) = (form.clone(), inv);
        let candidates = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        Self::assemble(Blueprint {
            descriptor,
            n,
            form: Some(form),
            symbol: Box::new(move |i, j| {
                let e = RatMatrix::unit(n, i, j);
                &e - &(&(&binv * &e.transpose()) * &b)
            }),
            candidates,
            strict: false,
            graded: false,
        })
    }

    pub fn from_descriptor(d: &Descriptor) -> Result<Arc<Self>> {
        match d {
            Descriptor::Gl(n) => Self::gl(*n),
            Descriptor::OIdentity(n) => Self::o_identity(*n),
            Descriptor::OSplit(n) => Self::o_split(*n),
            Descriptor::SpSplit(n) => Self::sp_split(*n),
            Descriptor::OGeneral(b) => Self::general(AlgebraKind::OGeneral, b.clone()),
            Descriptor::SpGeneral(b) => Self::general(AlgebraKind::SpGeneral, b.clone()),
        }
    }

    fn assemble(bp: Blueprint) -> Result<Arc<Self>> {
        let n = bp.n;
        let mut span = EchelonBasis::new(n * n);
        let mut chosen = Vec::new();
        for &(i, j) in &bp.candidates {
            let m = (bp.symbol)(i, j);
            if span.insert(m.as_slice()) {
                chosen.push((i + 1, j + 1));
            } else if bp.strict {
                return Err(Error::Internal(format!("generator ({},{}) is not independent", i + 1, j + 1)));
            }
        }
        let grade_of = |(i, j): (usize, usize)| match i.cmp(&j) {
            std::cmp::Ordering::Greater => Grade::Minus,
            std::cmp::Ordering::Equal => Grade::Zero,
            std::cmp::Ordering::Less => Grade::Plus,
        };
        if bp.graded {
            chosen.sort_by_key(|&l| (grade_of(l), l));
        } else {
            chosen.sort();
        }
        if chosen.len() > u16::MAX as usize {
            return Err(Error::InvalidSize("basis too large".into()));
        }
        let matrices: Vec<RatMatrix> = chosen.iter().map(|&(i, j)| (bp.symbol)(i - 1, j - 1)).collect();
        let mut basis = EchelonBasis::new(n * n);
        for m in &matrices {
            basis.insert(m.as_slice());
        }
        let coords = |m: &RatMatrix| -> Result<Combo> {
            let c = basis
                .coordinates(m.as_slice())
                .ok_or_else(|| Error::Internal("matrix outside the realization".into()))?;
            Ok(c.into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(g, x)| (GenId(g as u16), x))
                .collect())
        };
        let mut brackets = Vec::with_capacity(matrices.len());
        for a in &matrices {
            let row = matrices.iter().map(|b| coords(&a.commutator(b))).collect::<Result<Vec<_>>>()?;
            brackets.push(row);
        }
        let mut symbols = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                symbols.push(coords(&(bp.symbol)(i, j))?);
            }
        }
        let grades = bp.graded.then(|| chosen.iter().map(|&l| grade_of(l)).collect());
        Ok(Arc::new(Realization {
            descriptor: bp.descriptor,
            n,
            labels: chosen,
            matrices,
            grades,
            brackets,
            symbols,
            form: bp.form,
            memo: ProductMemo::default(),
        }))
    }

    /// Cross-checks the embedding-derived brackets against the closed-form
    /// commutation relations of gl_N, o(S_0) and sp(J_0).
    fn check_closed_form(&self) -> Result<()> {
        let n = self.n;
        let theta = |i: usize| -> Rat {
            match self.descriptor {
                Descriptor::SpSplit(_) => int(self.epsilon(i)),
                _ => Rat::one(),
            }
        };
        let gl = matches!(self.descriptor, Descriptor::Gl(_));
        let prime = |i: usize| n + 1 - i;
        let d = |a: usize, b: usize| a == b;
        for (a, &(i, j)) in self.labels.iter().enumerate() {
            for (b, &(k, l)) in self.labels.iter().enumerate() {
                let mut terms: Vec<(Rat, usize, usize)> = Vec::new();
                if d(k, j) {
                    terms.push((Rat::one(), i, l));
                }
                if d(i, l) {
                    terms.push((-Rat::one(), k, j));
                }
                if !gl {
                    if d(i, prime(k)) {
                        terms.push((theta(k) * theta(l), prime(l), j));
                    }
                    if d(prime(j), l) {
                        terms.push((theta(i) * theta(j), k, prime(i)));
                    }
                }
                let mut acc: Vec<Rat> = vec![Rat::zero(); self.dim()];
                for (c, p, q) in terms {
                    for (g, x) in self.symbol(p, q) {
                        acc[g.index()] += &c * x;
                    }
                }
                let expected: Combo = acc
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(g, x)| (GenId(g as u16), x))
                    .collect();
                if expected != self.brackets[a][b] {
                    return Err(Error::Internal(format!(
                        "closed-form bracket mismatch for [{}, {}] in {}",
                        self.label(GenId(a as u16)),
                        self.label(GenId(b as u16)),
                        self.descriptor
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }

    pub fn kind(&self) -> AlgebraKind {
        self.descriptor.kind()
    }

    /// Matrix size N.
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = GenId> {
        (0..self.dim() as u16).map(GenId)
    }

    /// 1-based index pair of the symbol a generator stands for.
    pub fn pair(&self, g: GenId) -> (usize, usize) {
        self.labels[g.index()]
    }

    /// Generator whose symbol is `(i, j)` (1-based), if that pair is canonical.
    pub fn gen_for_pair(&self, i: usize, j: usize) -> Option<GenId> {
        self.labels.iter().position(|&l| l == (i, j)).map(|p| GenId(p as u16))
    }

    /// Letter used when rendering generators: `E` for gl, `F` otherwise.
    pub fn letter(&self) -> char {
        if self.kind() == AlgebraKind::Gl {
            'E'
        } else {
            'F'
        }
    }

    pub fn label(&self, g: GenId) -> String {
        let (i, j) = self.pair(g);
        format!("{}[{},{}]", self.letter(), i, j)
    }

    /// Defining N x N matrix of a basis generator.
    pub fn matrix(&self, g: GenId) -> &RatMatrix {
        &self.matrices[g.index()]
    }

    pub fn bracket(&self, a: GenId, b: GenId) -> &Combo {
        &self.brackets[a.index()][b.index()]
    }

    /// Canonical expression of the symbol `E_ij` / `F_ij` (1-based).
    pub fn symbol(&self, i: usize, j: usize) -> &Combo {
        &self.symbols[(i - 1) * self.n + (j - 1)]
    }

    pub fn grade(&self, g: GenId) -> Option<Grade> {
        self.grades.as_ref().map(|gr| gr[g.index()])
    }

    pub fn is_graded(&self) -> bool {
        self.grades.is_some()
    }

    /// Zero-graded (Cartan) generators, in basis order.
    pub fn cartan(&self) -> Vec<GenId> {
        self.basis().filter(|&g| self.grade(g) == Some(Grade::Zero)).collect()
    }

    /// Bilinear form S or J, when the realization has one.
    pub fn form(&self) -> Option<&RatMatrix> {
        self.form.as_ref()
    }

    /// `eps(i)`: -1 for i <= N/2, +1 otherwise (1-based).
    pub fn epsilon(&self, i: usize) -> i64 {
        if i <= self.n / 2 {
            -1
        } else {
            1
        }
    }

    /// `i' = N + 1 - i` (1-based).
    pub fn prime(&self, i: usize) -> usize {
        self.n + 1 - i
    }

    /// Diagonal added to the generator matrix for the tilde / hat variants of
    /// the split forms.
    pub fn diagonal_adjustment(&self, variant: Variant) -> Result<Vec<Rat>> {
        let n = self.n;
        let half = n / 2;
        let odd = n % 2 == 1;
        let zero = Rat::zero;
        let one = Rat::one;
        match (self.kind(), variant) {
            (AlgebraKind::SpSplit, Variant::Tilde) => {
                Ok((0..n).map(|i| if i < half { zero() } else { -one() }).collect())
            }
            (AlgebraKind::SpSplit, Variant::Hat) => {
                Ok((0..n).map(|i| if i < half { one() } else { zero() }).collect())
            }
            (AlgebraKind::OSplit, Variant::Tilde) => Ok((0..n)
                .map(|i| {
                    if i < half {
                        zero()
                    } else if odd && i == half {
                        rat(1, 2)
                    } else {
                        one()
                    }
                })
                .collect()),
            (AlgebraKind::OSplit, Variant::Hat) => Ok((0..n)
                .map(|i| {
                    if i < half {
                        -one()
                    } else if odd && i == half {
                        rat(-1, 2)
                    } else {
                        zero()
                    }
                })
                .collect()),
            _ => Err(Error::Unsupported(format!("{:?} variant needs a split realization, got {}", variant, self.descriptor))),
        }
    }

    /// Same presentation (identical descriptor); elements over such
    /// realizations may be combined.
    pub fn same_as(&self, other: &Realization) -> bool {
        std::ptr::eq(self, other) || self.descriptor == other.descriptor
    }

    /// Number of cached monomial-by-generator products and cache hits/misses.
    pub fn memo_stats(&self) -> (usize, u64, u64) {
        self.memo.stats()
    }
}

/// `E_ij - theta(i) theta(j) E_{j'i'}` with theta = eps (sp) or 1 (o), 0-based.
fn split_generator(n: usize, i: usize, j: usize, symplectic: bool) -> RatMatrix {
    let half = n / 2;
    let eps = |a: usize| if a < half { -1i64 } else { 1 };
    let c = if symplectic { eps(i) * eps(j) } else { 1 };
    let mut m = RatMatrix::unit(n, i, j);
    m[(n - 1 - j, n - 1 - i)] -= int(c);
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn combo(r: &Realization, terms: &[(i64, usize, usize)]) -> Combo {
        let mut v: Combo = terms
            .iter()
            .map(|&(c, i, j)| (r.gen_for_pair(i, j).unwrap(), int(c)))
            .collect();
        v.sort_by_key(|t| t.0);
        v
    }

    fn g(r: &Realization, i: usize, j: usize) -> GenId {
        r.gen_for_pair(i, j).unwrap()
    }

    #[test]
    fn gl_brackets() {
        let r = Realization::gl(2).unwrap();
        assert_eq!(r.bracket(g(&r, 1, 1), g(&r, 1, 2)), &combo(&r, &[(1, 1, 2)]));
        assert_eq!(r.bracket(g(&r, 1, 2), g(&r, 2, 1)), &combo(&r, &[(1, 1, 1), (-1, 2, 2)]));
        assert!(r.bracket(g(&r, 1, 1), g(&r, 2, 2)).is_empty());
        assert!(Realization::gl(0).is_err());
    }

    #[test]
    fn gl_order_is_graded() {
        let r = Realization::gl(2).unwrap();
        let labels: Vec<_> = r.basis().map(|x| r.pair(x)).collect();
        assert_eq!(labels, vec![(2, 1), (1, 1), (2, 2), (1, 2)]);
    }

    #[test]
    fn sp_split_two() {
        let r = Realization::sp_split(2).unwrap();
        let labels: Vec<_> = r.basis().map(|x| r.pair(x)).collect();
        assert_eq!(labels, vec![(2, 1), (1, 1), (1, 2)]);
        assert_eq!(r.bracket(g(&r, 1, 2), g(&r, 2, 1)), &combo(&r, &[(4, 1, 1)]));
        assert_eq!(r.symbol(2, 2), &combo(&r, &[(-1, 1, 1)]));
        assert!(Realization::sp_split(3).is_err());
    }

    #[test]
    fn sp_epsilon_and_prime() {
        let r = Realization::sp_split(4).unwrap();
        let eps: Vec<_> = (1..=4).map(|i| r.epsilon(i)).collect();
        assert_eq!(eps, vec![-1, -1, 1, 1]);
        assert_eq!((1..=4).map(|i| r.prime(i)).collect::<Vec<_>>(), vec![4, 3, 2, 1]);
        assert_eq!(r.dim(), 10);
        assert_eq!(Realization::sp_split(6).unwrap().dim(), 21);
    }

    #[test]
    fn o_split_small() {
        let r2 = Realization::o_split(2).unwrap();
        assert_eq!(r2.dim(), 1);
        assert_eq!(r2.pair(GenId(0)), (1, 1));
        assert!(r2.symbol(1, 2).is_empty());
        let r3 = Realization::o_split(3).unwrap();
        assert_eq!(r3.dim(), 3);
        assert!(r3.symbol(2, 2).is_empty());
        assert_eq!(Realization::o_split(5).unwrap().dim(), 10);
        assert!(Realization::o_split(1).is_err());
    }

    #[test]
    fn o_identity_small() {
        let r = Realization::o_identity(3).unwrap();
        assert_eq!(r.bracket(g(&r, 1, 2), g(&r, 1, 2)), &Combo::new());
        assert_eq!(r.bracket(g(&r, 1, 2), g(&r, 2, 3)), &combo(&r, &[(1, 1, 3)]));
        assert_eq!(Realization::o_identity(4).unwrap().dim(), 6);
        assert!(!r.is_graded());
    }

    #[test]
    fn adjustments() {
        let sp = Realization::sp_split(2).unwrap();
        assert_eq!(sp.diagonal_adjustment(Variant::Tilde).unwrap(), vec![int(0), int(-1)]);
        assert_eq!(sp.diagonal_adjustment(Variant::Hat).unwrap(), vec![int(1), int(0)]);
        let o3 = Realization::o_split(3).unwrap();
        assert_eq!(o3.diagonal_adjustment(Variant::Tilde).unwrap(), vec![int(0), rat(1, 2), int(1)]);
        assert_eq!(o3.diagonal_adjustment(Variant::Hat).unwrap(), vec![int(-1), rat(-1, 2), int(0)]);
        assert!(Realization::gl(2).unwrap().diagonal_adjustment(Variant::Tilde).is_err());
    }

    #[test]
    fn descriptors_round_trip() {
        for s in ["gl:N=3", "o-identity:N=4", "o-split:N=3", "sp-split:N=4", "o-general:S=1,0;0,2", "sp-general:J=0,1;-1,0"] {
            let d: Descriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
        assert_eq!("sp:N=2".parse::<Descriptor>().unwrap(), Descriptor::SpSplit(2));
        assert!("gl:M=2".parse::<Descriptor>().is_err());
    }

    #[test]
    fn general_rejects_bad_forms() {
        let singular = RatMatrix::from_ints(&[&[1, 1], &[1, 1]]);
        assert!(Realization::general(AlgebraKind::OGeneral, singular).is_err());
        let nonsym = RatMatrix::from_ints(&[&[1, 2], &[0, 1]]);
        assert!(Realization::general(AlgebraKind::OGeneral, nonsym).is_err());
        assert!(Realization::general(AlgebraKind::SpGeneral, RatMatrix::identity(2)).is_err());
        let odd = RatMatrix::from_ints(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]);
        assert!(Realization::general(AlgebraKind::SpGeneral, odd).is_err());
    }

    #[test]
    fn general_identity_matches_o_identity_labels() {
        let a = Realization::general(AlgebraKind::OGeneral, RatMatrix::identity(4)).unwrap();
        let b = Realization::o_identity(4).unwrap();
        let la: Vec<_> = a.basis().map(|x| a.pair(x)).collect();
        let lb: Vec<_> = b.basis().map(|x| b.pair(x)).collect();
        assert_eq!(la, lb);
        for x in a.basis() {
            assert_eq!(a.matrix(x), b.matrix(x));
            for y in a.basis() {
                assert_eq!(a.bracket(x, y), b.bracket(x, y));
            }
        }
    }

    /// The general construction with the split forms spans the same subalgebra
    /// of gl_N as the split realizations.
    #[test]
    fn general_split_forms_span_split_realizations() {
        for n in 2..=5 {
            let split = Realization::o_split(n).unwrap();
            let gen = Realization::general(AlgebraKind::OGeneral, split_symmetric_form(n)).unwrap();
            assert_same_span(&split, &gen);
        }
        for n in [2, 4, 6] {
            let split = Realization::sp_split(n).unwrap();
            let gen = Realization::general(AlgebraKind::SpGeneral, split_alternating_form(n)).unwrap();
            assert_same_span(&split, &gen);
        }
    }

    fn assert_same_span(a: &Realization, b: &Realization) {
        assert_eq!(a.dim(), b.dim());
        let n = a.size();
        let mut span = EchelonBasis::new(n * n);
        for x in a.basis() {
            span.insert(a.matrix(x).as_slice());
        }
        for y in b.basis() {
            assert!(span.coordinates(b.matrix(y).as_slice()).is_some());
        }
    }

    #[test]
    fn trace_of_generator_symbols_vanishes() {
        for r in [
            Realization::sp_split(4).unwrap(),
            Realization::o_split(3).unwrap(),
            Realization::o_split(4).unwrap(),
            Realization::general(AlgebraKind::OGeneral, RatMatrix::from_ints(&[&[2, 1], &[1, 3]])).unwrap(),
        ] {
            let mut acc = vec![Rat::zero(); r.dim()];
            for i in 1..=r.size() {
                for (g, c) in r.symbol(i, i) {
                    acc[g.index()] += c;
                }
            }
            assert!(acc.iter().all(Zero::is_zero), "{r:?}");
        }
    }
}
