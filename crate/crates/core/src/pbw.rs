//! Elements of the universal enveloping algebra in PBW normal form.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_traits::{One, Zero};
use parking_lot::RwLock;

use crate::coeff::{fmt_rat_str, Rat, UnivPoly};
use crate::error::{Error, Result};
use crate::lie::{AlgebraKind, Combo, GenId, Grade, Realization};

/// Non-decreasing sequence of generators; the empty sequence is 1.
pub type Monomial = Vec<GenId>;

type Expansion = Arc<Vec<(Monomial, Rat)>>;

/// Cache of normal-ordered products `monomial * generator`, shared by all
/// elements of one realization.
#[derive(Default)]
pub(crate) struct ProductMemo {
    table: RwLock<HashMap<(Monomial, GenId), Expansion>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl ProductMemo {
    pub(crate) fn stats(&self) -> (usize, u64, u64) {
        (
            self.table.read().len(),
            self.hits.load(Ordering::Relaxed),
            self.misses.load(Ordering::Relaxed),
        )
    }
}

/// Normal form of `m * x` for a sorted monomial `m`.
///
/// Writing `m = p * a` with `a` the last factor, `m * x = (p * x) * a + p * [a, x]`
/// whenever `a > x`; both pieces are again reduced recursively.
fn mul_mono_gen(alg: &Realization, m: &[GenId], x: GenId) -> Expansion {
    if m.last().is_none_or(|&a| a <= x) {
        let mut out = m.to_vec();
        out.push(x);
        return Arc::new(vec![(out, Rat::one())]);
    }
    let key = (m.to_vec(), x);
    if let Some(hit) = alg.memo.table.read().get(&key) {
        alg.memo.hits.fetch_add(1, Ordering::Relaxed);
        return hit.clone();
    }
    alg.memo.misses.fetch_add(1, Ordering::Relaxed);
    let (prefix, a) = (&m[..m.len() - 1], m[m.len() - 1]);
    let mut acc: HashMap<Monomial, Rat> = HashMap::new();
    for (mono, c) in mul_mono_gen(alg, prefix, x).iter() {
        for (mono2, c2) in mul_mono_gen(alg, mono, a).iter() {
            *acc.entry(mono2.clone()).or_insert_with(Rat::zero) += c * c2;
        }
    }
    for (g, c) in alg.bracket(a, x) {
        for (mono, c2) in mul_mono_gen(alg, prefix, *g).iter() {
            *acc.entry(mono.clone()).or_insert_with(Rat::zero) += c * c2;
        }
    }
    let result: Expansion = Arc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
    alg.memo.table.write().insert(key, result.clone());
    result
}

/// Normal form of `m * n` for sorted monomials.
fn mul_mono_mono(alg: &Realization, m: &[GenId], n: &[GenId]) -> Vec<(Monomial, Rat)> {
    let mut cur: Vec<(Monomial, Rat)> = vec![(m.to_vec(), Rat::one())];
    for &x in n {
        let mut acc: HashMap<Monomial, Rat> = HashMap::new();
        for (mono, c) in &cur {
            for (mono2, c2) in mul_mono_gen(alg, mono, x).iter() {
                *acc.entry(mono2.clone()).or_insert_with(Rat::zero) += c * c2;
            }
        }
        cur = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    }
    cur
}

/// An element of U(g) as a map from PBW monomials to polynomials in `u`.
#[derive(Clone)]
pub struct EnvElement {
    alg: Arc<Realization>,
    terms: HashMap<Monomial, UnivPoly>,
}

impl EnvElement {
    pub fn zero(alg: &Arc<Realization>) -> Self {
        EnvElement { alg: alg.clone(), terms: HashMap::new() }
    }

    pub fn one(alg: &Arc<Realization>) -> Self {
        Self::scalar(alg, UnivPoly::one())
    }

    pub fn scalar(alg: &Arc<Realization>, c: UnivPoly) -> Self {
        let mut e = Self::zero(alg);
        if !c.is_zero() {
            e.terms.insert(Vec::new(), c);
        }
        e
    }

    pub fn generator(alg: &Arc<Realization>, g: GenId) -> Self {
        let mut e = Self::zero(alg);
        e.terms.insert(vec![g], UnivPoly::one());
        e
    }

    pub fn from_combo(alg: &Arc<Realization>, combo: &Combo) -> Self {
        let mut e = Self::zero(alg);
        for (g, c) in combo {
            e.terms.insert(vec![*g], UnivPoly::constant(c.clone()));
        }
        e
    }

    /// The symbol `E_ij` / `F_ij` (1-based) in canonical form.
    pub fn symbol(alg: &Arc<Realization>, i: usize, j: usize) -> Result<Self> {
        let n = alg.size();
        for idx in [i, j] {
            if idx == 0 || idx > n {
                return Err(Error::IndexOutOfRange { index: idx, size: n });
            }
        }
        Ok(Self::from_combo(alg, alg.symbol(i, j)))
    }

    /// Builds an element from explicit terms; monomials must already be sorted.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, UnivPoly)>>(alg: &Arc<Realization>, terms: I) -> Result<Self> {
        let mut e = Self::zero(alg);
        for (m, c) in terms {
            if m.windows(2).any(|w| w[0] > w[1]) || m.iter().any(|g| g.index() >= alg.dim()) {
                return Err(Error::Internal("monomial is not in PBW order".into()));
            }
            e.add_term(m, &c);
        }
        Ok(e)
    }

    pub fn realization(&self) -> &Arc<Realization> {
        &self.alg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &UnivPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[GenId]) -> UnivPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms sorted by (degree, monomial).
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &UnivPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
        v
    }

    /// The scalar value, if the element has no generator terms.
    pub fn as_scalar(&self) -> Option<UnivPoly> {
        match self.terms.len() {
            0 => Some(UnivPoly::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    pub fn top_degree_part(&self) -> Self {
        let d = self.degree().unwrap_or(0);
        EnvElement {
            alg: self.alg.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.len() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: &UnivPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.alg.same_as(&other.alg) {
            Ok(())
        } else {
            Err(Error::RealizationMismatch(
                self.alg.descriptor().to_string(),
                other.alg.descriptor().to_string(),
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    /// In-place `self += other`.
    pub fn add_assign_checked(&mut self, other: &Self) -> Result<()> {
        self.check_same(other)?;
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
        Ok(())
    }

    pub fn scale(&self, c: &UnivPoly) -> Self {
        let mut out = Self::zero(&self.alg);
        if c.is_zero() {
            return out;
        }
        for (m, p) in &self.terms {
            let q = p * c;
            if !q.is_zero() {
                out.terms.insert(m.clone(), q);
            }
        }
        out
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        self.scale(&UnivPoly::constant(c.clone()))
    }

    /// PBW normal form of `self * other`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut acc: HashMap<Monomial, UnivPoly> = HashMap::new();
        for (ma, pa) in &self.terms {
            for (mb, pb) in &other.terms {
                let p = pa * pb;
                for (m, c) in mul_mono_mono(&self.alg, ma, mb) {
                    let term = p.scale(&c);
                    match acc.entry(m) {
                        std::collections::hash_map::Entry::Occupied(mut o) => *o.get_mut() += &term,
                        std::collections::hash_map::Entry::Vacant(v) => {
                            v.insert(term);
                        }
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(EnvElement { alg: self.alg.clone(), terms: acc })
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// Substitutes `u := q` in every coefficient.
    pub fn substitute_u(&self, q: &UnivPoly) -> Self {
        let mut out = Self::zero(&self.alg);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.compose(q));
        }
        out
    }

    /// Evaluates the parameter `u` at a rational value.
    pub fn eval_u(&self, x: &Rat) -> Self {
        self.substitute_u(&UnivPoly::constant(x.clone()))
    }

    /// Keeps the monomials built only from zero-graded generators.
    pub fn hc_project(&self) -> Result<Self> {
        if !self.alg.is_graded() {
            return Err(Error::Ungraded(self.alg.descriptor().to_string()));
        }
        let alg = &self.alg;
        Ok(EnvElement {
            alg: alg.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.iter().all(|&g| alg.grade(g) == Some(Grade::Zero)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Value of the Harish-Chandra projection at a weight; for central
    /// elements this is the eigenvalue on the highest-weight vector.
    pub fn eigenvalue(&self, w: &Weight) -> Result<UnivPoly> {
        let proj = self.hc_project()?;
        let mut acc = UnivPoly::zero();
        for (m, c) in proj.terms {
            let mut v = Rat::one();
            for g in &m {
                let x = w
                    .values
                    .get(g)
                    .ok_or_else(|| Error::MissingWeight(self.alg.label(*g)))?;
                v *= x;
            }
            acc += &c.scale(&v);
        }
        Ok(acc)
    }

    /// Rendering of the first term (in display order), or `None` for zero.
    pub fn first_term(&self) -> Option<String> {
        self.sorted_terms().first().map(|(m, c)| render_term(&self.alg, m, c))
    }

    /// Commutator with every basis generator; returns the first nonzero one.
    pub fn first_noncommuting(&self) -> Result<Option<(GenId, EnvElement)>> {
        for g in self.alg.basis() {
            let c = self.commutator(&EnvElement::generator(&self.alg, g))?;
            if !c.is_zero() {
                return Ok(Some((g, c)));
            }
        }
        Ok(None)
    }
}

fn render_term(alg: &Realization, m: &[GenId], c: &UnivPoly) -> String {
    if m.is_empty() {
        return c.to_string();
    }
    let mono: Vec<String> = m.iter().map(|&g| alg.label(g)).collect();
    let mono = mono.join("*");
    match c.as_constant() {
        Some(r) if r.is_one() => mono,
        Some(r) if (-&r).is_one() => format!("-{mono}"),
        Some(r) => format!("{}*{mono}", fmt_rat_str(&r)),
        None => format!("({c})*{mono}"),
    }
}

impl PartialEq for EnvElement {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_as(&other.alg) && self.terms == other.terms
    }
}

impl Eq for EnvElement {}

impl fmt::Display for EnvElement {
    /// Terms by (degree, monomial), e.g. `u^2 + u + u*E[1,1] - E[2,1]*E[1,2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let t = render_term(&self.alg, m, c);
            match (idx, t.strip_prefix('-')) {
                (0, _) => f.write_str(&t)?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {t}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for EnvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EnvElement[{}]({})", self.alg.descriptor(), self)
    }
}

macro_rules! env_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr for &EnvElement {
            type Output = EnvElement;
            /// Panics if the operands live over different realizations.
            fn $method(self, rhs: &EnvElement) -> EnvElement {
                self.$try(rhs).expect("realization mismatch")
            }
        }
        impl $tr for EnvElement {
            type Output = EnvElement;
            fn $method(self, rhs: EnvElement) -> EnvElement {
                (&self).$try(&rhs).expect("realization mismatch")
            }
        }
    };
}

env_binop!(Add, add, try_add);
env_binop!(Sub, sub, try_sub);
env_binop!(Mul, mul, try_mul);

impl Neg for &EnvElement {
    type Output = EnvElement;
    fn neg(self) -> EnvElement {
        self.scale(&UnivPoly::from_int(-1))
    }
}

impl Neg for EnvElement {
    type Output = EnvElement;
    fn neg(self) -> EnvElement {
        -&self
    }
}

/// Values of the Cartan generators at a highest weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    values: HashMap<GenId, Rat>,
}

impl Weight {
    pub fn new(values: HashMap<GenId, Rat>) -> Self {
        Weight { values }
    }

    pub fn get(&self, g: GenId) -> Option<&Rat> {
        self.values.get(&g)
    }
}

/// Weight attached to a partition: `E_ii -> lambda_i` for gl, and
/// `F_ii -> lambda_i` for `i <= [N/2]` on the split forms.
pub fn weight_from_partition(alg: &Realization, lambda: &[Rat]) -> Result<Weight> {
    let n = alg.size();
    let expected = match alg.kind() {
        AlgebraKind::Gl => n,
        AlgebraKind::SpSplit | AlgebraKind::OSplit => n / 2,
        _ => return Err(Error::Ungraded(alg.descriptor().to_string())),
    };
    if lambda.len() != expected {
        return Err(Error::LengthMismatch { expected, got: lambda.len() });
    }
    let mut values = HashMap::new();
    for (i, l) in lambda.iter().enumerate() {
        let g = alg
            .gen_for_pair(i + 1, i + 1)
            .ok_or_else(|| Error::Internal(format!("no Cartan generator at ({0},{0})", i + 1)))?;
        values.insert(g, l.clone());
    }
    Ok(Weight { values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::int;

    fn gen(alg: &Arc<Realization>, i: usize, j: usize) -> EnvElement {
        EnvElement::symbol(alg, i, j).unwrap()
    }

    #[test]
    fn gl_reordering() {
        let gl = Realization::gl(2).unwrap();
        let p = &gen(&gl, 1, 2) * &gen(&gl, 2, 1);
        let expected = &(&(&gen(&gl, 2, 1) * &gen(&gl, 1, 2)) + &gen(&gl, 1, 1)) - &gen(&gl, 2, 2);
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "E[1,1] - E[2,2] + E[2,1]*E[1,2]");
    }

    #[test]
    fn sp_reordering() {
        let sp = Realization::sp_split(2).unwrap();
        let p = &gen(&sp, 1, 2) * &gen(&sp, 2, 1);
        assert_eq!(p.to_string(), "4*F[1,1] + F[2,1]*F[1,2]");
    }

    #[test]
    fn identities_and_scaling() {
        let gl = Realization::gl(2).unwrap();
        let e = gen(&gl, 1, 2);
        assert_eq!(&e + &EnvElement::zero(&gl), e);
        assert!((&e - &e).is_zero());
        assert_eq!(&EnvElement::one(&gl) * &e, e);
        assert_eq!(e.scale(&UnivPoly::from_int(2)).to_string(), "2*E[1,2]");
        assert_eq!(e.scale(&UnivPoly::u_plus(int(1))).to_string(), "(u + 1)*E[1,2]");
        let e11 = gen(&gl, 1, 1);
        assert!(e11.commutator(&e11).unwrap().is_zero());
        assert_eq!(e11.commutator(&e).unwrap(), e);
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = EnvElement::one(&Realization::gl(2).unwrap());
        let b = EnvElement::one(&Realization::gl(3).unwrap());
        assert!(matches!(a.try_add(&b), Err(Error::RealizationMismatch(..))));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn projection_and_eigenvalue() {
        let gl = Realization::gl(2).unwrap();
        let u = UnivPoly::u();
        let x = &gen(&gl, 1, 1) * &gen(&gl, 2, 2);
        let c = &(&(&(&x + &gen(&gl, 1, 1).scale(&u)) + &gen(&gl, 2, 2).scale(&UnivPoly::u_plus(int(1))))
            + &EnvElement::scalar(&gl, &u * &UnivPoly::u_plus(int(1))))
            - &(&gen(&gl, 2, 1) * &gen(&gl, 1, 2));
        let hc = c.hc_project().unwrap();
        assert_eq!(hc, &c + &(&gen(&gl, 2, 1) * &gen(&gl, 1, 2)));
        let w = weight_from_partition(&gl, &[int(1), int(0)]).unwrap();
        assert_eq!(c.eigenvalue(&w).unwrap(), UnivPoly::from_terms([(2, int(1)), (1, int(2))]));
        assert!(EnvElement::one(&gl).hc_project().unwrap() == EnvElement::one(&gl));
        let oid = Realization::o_identity(3).unwrap();
        assert!(matches!(EnvElement::one(&oid).hc_project(), Err(Error::Ungraded(_))));
        assert!(weight_from_partition(&gl, &[int(1)]).is_err());
    }

    #[test]
    fn weights_for_split_forms() {
        let sp = Realization::sp_split(2).unwrap();
        let w = weight_from_partition(&sp, &[int(3)]).unwrap();
        assert_eq!(w.get(sp.gen_for_pair(1, 1).unwrap()), Some(&int(3)));
        let o3 = Realization::o_split(3).unwrap();
        let w = weight_from_partition(&o3, &[int(2)]).unwrap();
        assert_eq!(w.get(o3.gen_for_pair(1, 1).unwrap()), Some(&int(2)));
        assert!(weight_from_partition(&o3, &[int(2), int(1)]).is_err());
    }

    #[test]
    fn filtration_top_degree() {
        let gl = Realization::gl(3).unwrap();
        let a = &gen(&gl, 1, 3) * &gen(&gl, 2, 1);
        let b = &gen(&gl, 3, 2) + &gen(&gl, 1, 1);
        let p = &a * &b;
        assert!(p.degree().unwrap() <= 3);
        let top = p.top_degree_part();
        let expected: Monomial = {
            let mut m = vec![
                gl.gen_for_pair(1, 3).unwrap(),
                gl.gen_for_pair(2, 1).unwrap(),
                gl.gen_for_pair(3, 2).unwrap(),
            ];
            m.sort();
            m
        };
        assert_eq!(top.coeff(&expected), UnivPoly::one());
    }
}
