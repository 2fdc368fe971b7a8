//! Exterior and symmetric extensions `Λ(C^{2N}) ⊗ U(g)` and `S(C^{2N}) ⊗ U(g)`
//! with formal variables `e_1..e_N, e*_1..e*_N` commuting with `U(g)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::capelli::choose;
use crate::coeff::{factorial, int, rat, Rat, UnivPoly};
use crate::error::{Error, Result};
use crate::lie::{split_alternating_form, AlgebraKind, Realization};
use crate::ncmatrix::{IndexSeq, SeqMode};
use crate::pbw::EnvElement;
use crate::ratmat::RatMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Anti-commuting variables.
    Exterior,
    /// Commuting variables.
    Symmetric,
}

/// Variable ids: `e_i` is `i - 1`, `e*_i` is `N + i - 1`.
pub type VarId = u16;

/// Canonical monomial in the formal variables: a sorted list of ids, with no
/// repeats in the exterior flavor.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarWord(Vec<VarId>);

impl VarWord {
    pub fn empty() -> Self {
        VarWord(Vec::new())
    }

    /// Canonical form of an arbitrary list of variables, with the sign of the
    /// sorting permutation (exterior) or `None` when an exterior word vanishes.
    pub fn canonical(flavor: Flavor, mut vars: Vec<VarId>) -> Option<(VarWord, i64)> {
        match flavor {
            Flavor::Symmetric => {
                vars.sort_unstable();
                Some((VarWord(vars), 1))
            }
            Flavor::Exterior => {
                let mut sign = 1;
                for i in 1..vars.len() {
                    let mut j = i;
                    while j > 0 && vars[j - 1] > vars[j] {
                        vars.swap(j - 1, j);
                        sign = -sign;
                        j -= 1;
                    }
                }
                if vars.windows(2).any(|p| p[0] == p[1]) {
                    None
                } else {
                    Some((VarWord(vars), sign))
                }
            }
        }
    }

    pub fn vars(&self) -> &[VarId] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Product of the factorials of the multiplicities.
    pub fn multiplicity_factorial(&self) -> Rat {
        let mut acc = Rat::one();
        let mut run = 0;
        for (i, x) in self.0.iter().enumerate() {
            run = if i > 0 && self.0[i - 1] == *x { run + 1 } else { 1 };
            acc *= int(run as i64);
        }
        acc
    }

    fn times(&self, other: &VarWord, flavor: Flavor) -> Option<(VarWord, i64)> {
        match flavor {
            Flavor::Symmetric => {
                let mut out = Vec::with_capacity(self.0.len() + other.0.len());
                let (mut i, mut j) = (0, 0);
                while i < self.0.len() || j < other.0.len() {
                    if j == other.0.len() || (i < self.0.len() && self.0[i] <= other.0[j]) {
                        out.push(self.0[i]);
                        i += 1;
                    } else {
                        out.push(other.0[j]);
                        j += 1;
                    }
                }
                Some((VarWord(out), 1))
            }
            Flavor::Exterior => {
                let mut v = self.0.clone();
                v.extend_from_slice(&other.0);
                VarWord::canonical(flavor, v)
            }
        }
    }

    /// Renders with `e1, e*1, ...`, using `^` for repeated symmetric variables.
    pub fn render(&self, n: usize) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let name = |v: VarId| {
            let v = v as usize;
            if v < n {
                format!("e{}", v + 1)
            } else {
                format!("e*{}", v - n + 1)
            }
        };
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            let p = j - i;
            parts.push(if p == 1 { name(self.0[i]) } else { format!("{}^{p}", name(self.0[i])) });
            i = j;
        }
        parts.join("*")
    }
}

/// Element of the extended algebra: a finite sum of `word ⊗ coefficient`.
#[derive(Clone)]
pub struct ExtElement {
    alg: Arc<Realization>,
    flavor: Flavor,
    terms: BTreeMap<VarWord, EnvElement>,
}

impl ExtElement {
    pub fn zero(alg: &Arc<Realization>, flavor: Flavor) -> Self {
        ExtElement { alg: alg.clone(), flavor, terms: BTreeMap::new() }
    }

    pub fn one(alg: &Arc<Realization>, flavor: Flavor) -> Self {
        Self::from_env(flavor, EnvElement::one(alg))
    }

    /// `1 ⊗ x`.
    pub fn from_env(flavor: Flavor, x: EnvElement) -> Self {
        let mut out = Self::zero(x.realization(), flavor);
        out.insert(VarWord::empty(), x);
        out
    }

    /// `sign(vars) * vars ⊗ x` for an arbitrary variable list.
    pub fn monomial(flavor: Flavor, vars: Vec<VarId>, x: EnvElement) -> Self {
        let mut out = Self::zero(x.realization(), flavor);
        if let Some((w, s)) = VarWord::canonical(flavor, vars) {
            out.insert(w, if s < 0 { -&x } else { x });
        }
        out
    }

    /// The variable `e_i` (1-based).
    pub fn e(alg: &Arc<Realization>, flavor: Flavor, i: usize) -> Self {
        Self::monomial(flavor, vec![(i - 1) as VarId], EnvElement::one(alg))
    }

    /// The variable `e*_i` (1-based).
    pub fn e_star(alg: &Arc<Realization>, flavor: Flavor, i: usize) -> Self {
        Self::monomial(flavor, vec![(alg.size() + i - 1) as VarId], EnvElement::one(alg))
    }

    fn insert(&mut self, w: VarWord, x: EnvElement) {
        if x.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(cur) => {
                cur.add_assign_checked(&x).expect("same realization");
                if cur.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, x);
            }
        }
    }

    pub fn realization(&self) -> &Arc<Realization> {
        &self.alg
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total number of PBW terms across all coefficients.
    pub fn env_terms(&self) -> usize {
        self.terms.values().map(EnvElement::num_terms).sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VarWord, &EnvElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &VarWord) -> EnvElement {
        self.terms.get(w).cloned().unwrap_or_else(|| EnvElement::zero(&self.alg))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if !self.alg.same_as(&other.alg) {
            return Err(Error::RealizationMismatch(
                self.alg.descriptor().to_string(),
                other.alg.descriptor().to_string(),
            ));
        }
        if self.flavor != other.flavor {
            return Err(Error::Flavor(format!("{:?} vs {:?}", self.flavor, other.flavor)));
        }
        Ok(())
    }

    fn require(&self, flavor: Flavor) -> Result<()> {
        if self.flavor == flavor {
            Ok(())
        } else {
            Err(Error::Flavor(format!("operation needs the {flavor:?} flavor")))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, x) in &other.terms {
            out.insert(w.clone(), x.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let flavor = self.flavor;
        let left: Vec<(&VarWord, &EnvElement)> = self.terms.iter().collect();
        let parts: Vec<Vec<(VarWord, EnvElement)>> = left
            .par_iter()
            .map(|(wa, xa)| {
                let mut out = Vec::new();
                for (wb, xb) in &other.terms {
                    if let Some((w, s)) = wa.times(wb, flavor) {
                        let p = *xa * xb;
                        out.push((w, if s < 0 { -&p } else { p }));
                    }
                }
                out
            })
            .collect();
        let mut acc = Self::zero(&self.alg, flavor);
        for part in parts {
            for (w, x) in part {
                acc.insert(w, x);
            }
        }
        Ok(acc)
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        let mut out = Self::zero(&self.alg, self.flavor);
        if !c.is_zero() {
            for (w, x) in &self.terms {
                out.insert(w.clone(), x.scale_rat(c));
            }
        }
        out
    }

    pub fn scale(&self, c: &UnivPoly) -> Self {
        let mut out = Self::zero(&self.alg, self.flavor);
        for (w, x) in &self.terms {
            out.insert(w.clone(), x.scale(c));
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(&self.alg, self.flavor), |acc, _| &acc * self)
    }

    /// Coefficient of the word spelled by `vars`, after canonical sorting.
    pub fn top_coefficient(&self, vars: &[VarId]) -> Result<EnvElement> {
        self.require(Flavor::Exterior)?;
        Ok(match VarWord::canonical(Flavor::Exterior, vars.to_vec()) {
            Some((w, s)) => {
                let c = self.coeff(&w);
                if s < 0 {
                    -&c
                } else {
                    c
                }
            }
            None => EnvElement::zero(&self.alg),
        })
    }

    /// Fischer pairing: distinct words are orthogonal, `<w|w> = w!`.
    pub fn fischer_pair(&self, other: &Self) -> Result<EnvElement> {
        self.check_compatible(other)?;
        self.require(Flavor::Symmetric)?;
        let mut acc = EnvElement::zero(&self.alg);
        for (w, x) in &self.terms {
            if let Some(y) = other.terms.get(w) {
                acc.add_assign_checked(&(x * y).scale_rat(&w.multiplicity_factorial()))?;
            }
        }
        Ok(acc)
    }

    /// `<phi> = sum_k <phi | tau^(k)>`. Only words `e_alpha e*_alpha` pair
    /// with a divided power of `tau`, each contributing `alpha!`.
    pub fn bracket(&self) -> Result<EnvElement> {
        self.require(Flavor::Symmetric)?;
        let n = self.alg.size() as VarId;
        let mut acc = EnvElement::zero(&self.alg);
        for (w, x) in &self.terms {
            let (plain, starred): (Vec<VarId>, Vec<VarId>) = w.0.iter().partition(|&&v| v < n);
            let shifted: Vec<VarId> = starred.iter().map(|v| v - n).collect();
            if plain == shifted {
                acc.add_assign_checked(&x.scale_rat(&VarWord(plain).multiplicity_factorial()))?;
            }
        }
        Ok(acc)
    }

    /// Linear substitution `v_j -> sum_i g_ij v_i` on the 2N variables,
    /// extended multiplicatively; coefficients are untouched.
    pub fn transform(&self, g: &RatMatrix) -> Result<Self> {
        self.require(Flavor::Symmetric)?;
        let dim = 2 * self.alg.size();
        if g.rows() != dim || !g.is_square() {
            return Err(Error::InvalidSize(format!("transform needs a {dim}x{dim} matrix")));
        }
        g.inverse()?;
        let images: Vec<BTreeMap<VarWord, Rat>> = (0..dim)
            .map(|j| {
                (0..dim)
                    .filter(|&i| !g[(i, j)].is_zero())
                    .map(|i| (VarWord(vec![i as VarId]), g[(i, j)].clone()))
                    .collect()
            })
            .collect();
        let mut out = Self::zero(&self.alg, self.flavor);
        for (w, x) in &self.terms {
            let mut poly: BTreeMap<VarWord, Rat> = BTreeMap::from([(VarWord::empty(), Rat::one())]);
            for &v in &w.0 {
                let mut next: BTreeMap<VarWord, Rat> = BTreeMap::new();
                for (pw, pc) in &poly {
                    for (iw, ic) in &images[v as usize] {
                        let (m, _) = pw.times(iw, Flavor::Symmetric).expect("symmetric words never vanish");
                        *next.entry(m).or_insert_with(Rat::zero) += pc * ic;
                    }
                }
                next.retain(|_, c| !c.is_zero());
                poly = next;
            }
            for (pw, pc) in poly {
                out.insert(pw, x.scale_rat(&pc));
            }
        }
        Ok(out)
    }

    /// First term in word order, rendered; `None` for zero.
    pub fn first_term(&self) -> Option<String> {
        self.terms.iter().next().map(|(w, x)| {
            let c = x.first_term().unwrap_or_default();
            format!("{} ⊗ {c}", w.render(self.alg.size()))
        })
    }
}

impl PartialEq for ExtElement {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_as(&other.alg) && self.flavor == other.flavor && self.terms == other.terms
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let n = self.alg.size();
        let parts: Vec<String> = self.terms.iter().map(|(w, x)| format!("{} ⊗ ({x})", w.render(n))).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtElement[{:?}]({self})", self.flavor)
    }
}

impl Add for &ExtElement {
    type Output = ExtElement;
    fn add(self, rhs: &ExtElement) -> ExtElement {
        self.try_add(rhs).expect("incompatible extended elements")
    }
}

impl Sub for &ExtElement {
    type Output = ExtElement;
    fn sub(self, rhs: &ExtElement) -> ExtElement {
        self.try_sub(rhs).expect("incompatible extended elements")
    }
}

impl Mul for &ExtElement {
    type Output = ExtElement;
    fn mul(self, rhs: &ExtElement) -> ExtElement {
        self.try_mul(rhs).expect("incompatible extended elements")
    }
}

impl Neg for &ExtElement {
    type Output = ExtElement;
    fn neg(self) -> ExtElement {
        self.scale_rat(&-Rat::one())
    }
}

/// `Z_ij(u) = Z_ij + u delta_ij` (1-based).
pub fn shifted_symbol(alg: &Arc<Realization>, i: usize, j: usize, u: &UnivPoly) -> EnvElement {
    let z = EnvElement::from_combo(alg, alg.symbol(i, j));
    if i == j {
        &z + &EnvElement::scalar(alg, u.clone())
    } else {
        z
    }
}

fn var(alg: &Realization, starred: bool, i: usize) -> VarId {
    (if starred { alg.size() + i - 1 } else { i - 1 }) as VarId
}

/// `eta_j(u) = sum_i e_i Z_ij(u)`.
pub fn eta(alg: &Arc<Realization>, flavor: Flavor, j: usize, u: &UnivPoly) -> ExtElement {
    let mut out = ExtElement::zero(alg, flavor);
    for i in 1..=alg.size() {
        out.insert(VarWord(vec![var(alg, false, i)]), shifted_symbol(alg, i, j, u));
    }
    out
}

/// `eta_j(u) e*_j`.
pub fn eta_dagger(alg: &Arc<Realization>, flavor: Flavor, j: usize, u: &UnivPoly) -> ExtElement {
    &eta(alg, flavor, j, u) * &ExtElement::e_star(alg, flavor, j)
}

/// `eta^dagger_i(u)` for `i <= N/2` and `eta^dagger_i(u - 1)` otherwise.
pub fn tilde_eta_dagger(alg: &Arc<Realization>, flavor: Flavor, i: usize, u: &UnivPoly) -> ExtElement {
    if i <= alg.size() / 2 {
        eta_dagger(alg, flavor, i, u)
    } else {
        eta_dagger(alg, flavor, i, &(u - &UnivPoly::one()))
    }
}

fn xi_columns(alg: &Arc<Realization>, flavor: Flavor, u: &UnivPoly, cols: std::ops::RangeInclusive<usize>) -> ExtElement {
    let mut out = ExtElement::zero(alg, flavor);
    for j in cols {
        for i in 1..=alg.size() {
            if let Some((w, s)) = VarWord::canonical(flavor, vec![var(alg, false, i), var(alg, true, j)]) {
                let x = shifted_symbol(alg, i, j, u);
                out.insert(w, if s < 0 { -&x } else { x });
            }
        }
    }
    out
}

/// `Xi(u) = sum_{i,j} e_i e*_j Z_ij(u)`.
pub fn xi(alg: &Arc<Realization>, flavor: Flavor, u: &UnivPoly) -> ExtElement {
    xi_columns(alg, flavor, u, 1..=alg.size())
}

/// Columns `j <= N/2` of `Xi(u)`.
pub fn xi_minus(alg: &Arc<Realization>, flavor: Flavor, u: &UnivPoly) -> ExtElement {
    xi_columns(alg, flavor, u, 1..=alg.size() / 2)
}

/// Columns `j > N/2` of `Xi(u)`.
pub fn xi_plus(alg: &Arc<Realization>, flavor: Flavor, u: &UnivPoly) -> ExtElement {
    xi_columns(alg, flavor, u, alg.size() / 2 + 1..=alg.size())
}

/// Scalar quadratic form `sum c * v_a v_b`.
fn quadratic<I: IntoIterator<Item = (VarId, VarId, Rat)>>(alg: &Arc<Realization>, flavor: Flavor, pairs: I) -> ExtElement {
    let mut out = ExtElement::zero(alg, flavor);
    for (a, b, c) in pairs {
        out = &out + &ExtElement::monomial(flavor, vec![a, b], EnvElement::scalar(alg, UnivPoly::constant(c)));
    }
    out
}

fn tau_range(alg: &Arc<Realization>, flavor: Flavor, range: std::ops::RangeInclusive<usize>) -> ExtElement {
    quadratic(alg, flavor, range.map(|i| (var(alg, false, i), var(alg, true, i), Rat::one())))
}

/// `tau = sum_i e_i e*_i`.
pub fn tau(alg: &Arc<Realization>, flavor: Flavor) -> ExtElement {
    tau_range(alg, flavor, 1..=alg.size())
}

/// `tau_- = sum_{i <= N/2} e_i e*_i`.
pub fn tau_minus(alg: &Arc<Realization>, flavor: Flavor) -> ExtElement {
    tau_range(alg, flavor, 1..=alg.size() / 2)
}

/// `tau_+ = sum_{i > N/2} e_i e*_i`.
pub fn tau_plus(alg: &Arc<Realization>, flavor: Flavor) -> ExtElement {
    tau_range(alg, flavor, alg.size() / 2 + 1..=alg.size())
}

/// `omega = sum_i eps(i) e_i e*_i`.
pub fn omega(alg: &Arc<Realization>, flavor: Flavor) -> ExtElement {
    quadratic(alg, flavor, (1..=alg.size()).map(|i| (var(alg, false, i), var(alg, true, i), int(alg.epsilon(i)))))
}

/// `rho = -sum_{i <= N/2} e_i e_{i'}`.
pub fn rho(alg: &Arc<Realization>, flavor: Flavor) -> ExtElement {
    quadratic(alg, flavor, (1..=alg.size() / 2).map(|i| (var(alg, false, i), var(alg, false, alg.prime(i)), -Rat::one())))
}

/// `rho* = sum_{i <= N/2} e*_i e*_{i'}`.
pub fn rho_star(alg: &Arc<Realization>, flavor: Flavor) -> ExtElement {
    quadratic(alg, flavor, (1..=alg.size() / 2).map(|i| (var(alg, true, i), var(alg, true, alg.prime(i)), Rat::one())))
}

/// `Theta = sum_{a,b} eps(b) e_a e_b F_{a b'}`.
pub fn theta(alg: &Arc<Realization>, flavor: Flavor) -> ExtElement {
    let n = alg.size();
    let mut out = ExtElement::zero(alg, flavor);
    for a in 1..=n {
        for b in 1..=n {
            let x = EnvElement::from_combo(alg, alg.symbol(a, alg.prime(b))).scale_rat(&int(alg.epsilon(b)));
            out = &out + &ExtElement::monomial(flavor, vec![var(alg, false, a), var(alg, false, b)], x);
        }
    }
    out
}

/// `Theta* = -sum_{i,j} eps(i) e*_i e*_j F_{i' j}`.
pub fn theta_star(alg: &Arc<Realization>, flavor: Flavor) -> ExtElement {
    let n = alg.size();
    let mut out = ExtElement::zero(alg, flavor);
    for i in 1..=n {
        for j in 1..=n {
            let x = EnvElement::from_combo(alg, alg.symbol(alg.prime(i), j)).scale_rat(&int(-alg.epsilon(i)));
            out = &out + &ExtElement::monomial(flavor, vec![var(alg, true, i), var(alg, true, j)], x);
        }
    }
    out
}

/// Builds any named element from a string such as `eta[2]`, `Xi`, `rho*`.
pub fn named_element(name: &str, alg: &Arc<Realization>, flavor: Flavor, u: &UnivPoly) -> Result<ExtElement> {
    let unknown = || Error::UnknownName(name.to_string());
    let (base, index) = match name.split_once('[') {
        Some((b, rest)) => {
            let idx: usize = rest.strip_suffix(']').and_then(|s| s.parse().ok()).ok_or_else(unknown)?;
            if idx == 0 || idx > alg.size() {
                return Err(Error::IndexOutOfRange { index: idx, size: alg.size() });
            }
            (b, Some(idx))
        }
        None => (name, None),
    };
    let needs_split = matches!(base, "omega" | "rho" | "rho*" | "Theta" | "Theta*" | "eta~dagger");
    if needs_split && alg.kind() != AlgebraKind::SpSplit {
        return Err(Error::Unsupported(format!("{name} is defined over the split symplectic realization")));
    }
    Ok(match (base, index) {
        ("eta", Some(j)) => eta(alg, flavor, j, u),
        ("eta_dagger", Some(j)) => eta_dagger(alg, flavor, j, u),
        ("eta~dagger", Some(j)) => tilde_eta_dagger(alg, flavor, j, u),
        ("Xi", None) => xi(alg, flavor, u),
        ("Xi-", None) => xi_minus(alg, flavor, u),
        ("Xi+", None) => xi_plus(alg, flavor, u),
        ("tau", None) => tau(alg, flavor),
        ("tau-", None) => tau_minus(alg, flavor),
        ("tau+", None) => tau_plus(alg, flavor),
        ("omega", None) => omega(alg, flavor),
        ("rho", None) => rho(alg, flavor),
        ("rho*", None) => rho_star(alg, flavor),
        ("Theta", None) => theta(alg, flavor),
        ("Theta*", None) => theta_star(alg, flavor),
        _ => return Err(unknown()),
    })
}

/// `x(u) x(u+step) ... x(u+(k-1) step)` for a family `x`.
pub fn factorial_power(k: usize, step: i64, u: &UnivPoly, x: impl Fn(&UnivPoly) -> ExtElement, one: ExtElement) -> ExtElement {
    (0..k).fold(one, |acc, i| &acc * &x(&(u + &UnivPoly::from_int(step * i as i64))))
}

/// `Xi(u) Xi(u+1) ... Xi(u+k-1)`.
pub fn xi_rising(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> ExtElement {
    let f = Flavor::Symmetric;
    factorial_power(k, 1, u, |v| xi(alg, f, v), ExtElement::one(alg, f))
}

/// `Xi(u) Xi(u+2) ... Xi(u+2k-2)`.
pub fn xi_double(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> ExtElement {
    let f = Flavor::Symmetric;
    factorial_power(k, 2, u, |v| xi(alg, f, v), ExtElement::one(alg, f))
}

pub fn xi_minus_rising(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> ExtElement {
    let f = Flavor::Symmetric;
    factorial_power(k, 1, u, |v| xi_minus(alg, f, v), ExtElement::one(alg, f))
}

pub fn xi_plus_rising(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> ExtElement {
    let f = Flavor::Symmetric;
    factorial_power(k, 1, u, |v| xi_plus(alg, f, v), ExtElement::one(alg, f))
}

/// `sum_{alpha weak} (k!/alpha!) a_{alpha_1}(u) a_{alpha_2}(u+1) ... a_{alpha_k}(u+k-1)`
/// with indices drawn from `lo..=hi`.
fn ordered_sum(
    alg: &Arc<Realization>,
    k: usize,
    u: &UnivPoly,
    lo: usize,
    hi: usize,
    a: impl Fn(usize, &UnivPoly) -> ExtElement + Sync,
) -> ExtElement {
    let f = Flavor::Symmetric;
    if k == 0 {
        return ExtElement::one(alg, f);
    }
    if hi < lo {
        return ExtElement::zero(alg, f);
    }
    let kf = factorial(k);
    let parts: Vec<ExtElement> = IndexSeq::all(hi + 1 - lo, k, SeqMode::Weak)
        .par_iter()
        .map(|alpha| {
            let mut acc = ExtElement::one(alg, f);
            for (t, &x) in alpha.indices().iter().enumerate() {
                acc = &acc * &a(x + lo - 1, &(u + &UnivPoly::from_int(t as i64)));
            }
            acc.scale_rat(&(&kf / alpha.multiplicity_factorial()))
        })
        .collect();
    parts.iter().fold(ExtElement::zero(alg, f), |acc, p| &acc + p)
}

/// `W_k(u) = sum_{alpha weak} (k!/alpha!) eta~dagger_{alpha_1}(u) ... eta~dagger_{alpha_k}(u+k-1)`.
pub fn w_element(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> ExtElement {
    ordered_sum(alg, k, u, 1, alg.size(), |i, v| tilde_eta_dagger(alg, Flavor::Symmetric, i, v))
}

/// Same ordered sum with `eta^dagger` restricted to `lo..=hi`.
pub fn eta_dagger_ordered_sum(alg: &Arc<Realization>, k: usize, u: &UnivPoly, lo: usize, hi: usize) -> ExtElement {
    ordered_sum(alg, k, u, lo, hi, |i, v| eta_dagger(alg, Flavor::Symmetric, i, v))
}

/// `V_k(u) = sum_l C(k,l) Xi_-^{rising l}(u) Xi_+^{rising (k-l)}(u+l)`.
pub fn v_element(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> ExtElement {
    split_binomial(alg, k, u, 0)
}

/// `sum_l C(k,l) Xi_-^{rising l}(u) Xi_+^{rising (k-l)}(u+l+offset)`.
pub fn split_binomial(alg: &Arc<Realization>, k: usize, u: &UnivPoly, offset: i64) -> ExtElement {
    let mut acc = ExtElement::zero(alg, Flavor::Symmetric);
    for l in 0..=k {
        let shifted = u + &UnivPoly::from_int(l as i64 + offset);
        let term = &xi_minus_rising(alg, l, u) * &xi_plus_rising(alg, k - l, &shifted);
        acc = &acc + &term.scale_rat(&choose(k, l));
    }
    acc
}

/// `W'_k(u) = Xi^{rising (k-1)}(u) Xi(u + k/2 - 1)`, with `W'_0 = 1`.
pub fn w_prime_element(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> ExtElement {
    if k == 0 {
        return ExtElement::one(alg, Flavor::Symmetric);
    }
    let last = u + &UnivPoly::constant(rat(k as i64, 2) - int(1));
    &xi_rising(alg, k - 1, u) * &xi(alg, Flavor::Symmetric, &last)
}

/// `(W_k, V_k, W'_k)` at parameter `u`.
pub fn build_wvw(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> Result<(ExtElement, ExtElement, ExtElement)> {
    if alg.kind() != AlgebraKind::SpSplit {
        return Err(Error::Unsupported(format!("W, V, W' are built over sp-split, got {}", alg.descriptor())));
    }
    Ok((w_element(alg, k, u), v_element(alg, k, u), w_prime_element(alg, k, u)))
}

/// Block matrix `[[a 1, b tJ_0], [c tJ_0^{-1}, d 1]]` acting on `(e, e*)`.
pub fn block_transform(n: usize, a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Result<RatMatrix> {
    let j0t = split_alternating_form(n).transpose();
    let j0t_inv = j0t.inverse()?;
    Ok(RatMatrix::from_fn(2 * n, 2 * n, |r, s| match (r < n, s < n) {
        (true, true) => if r == s { a.clone() } else { Rat::zero() },
        (true, false) => b * &j0t[(r, s - n)],
        (false, true) => c * &j0t_inv[(r - n, s)],
        (false, false) => if r == s { d.clone() } else { Rat::zero() },
    }))
}

/// `sum_{a,b} left_a M_ab right_b` for variable rows `left`, `right` and a
/// matrix of coefficients.
pub fn bilinear(
    alg: &Arc<Realization>,
    flavor: Flavor,
    left_starred: bool,
    m: impl Fn(usize, usize) -> EnvElement,
    right_starred: bool,
) -> ExtElement {
    let n = alg.size();
    let mut out = ExtElement::zero(alg, flavor);
    for a in 1..=n {
        for b in 1..=n {
            let x = m(a, b);
            if !x.is_zero() {
                out = &out + &ExtElement::monomial(flavor, vec![var(alg, left_starred, a), var(alg, right_starred, b)], x);
            }
        }
    }
    out
}
