//! Named Capelli-type elements, their shift sequences and closed-form
//! eigenvalues.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::coeff::{int, rat, Rat, UnivPoly};
use crate::error::{Error, Result};
use crate::lie::{AlgebraKind, Realization, Variant};
use crate::ncmatrix::{
    adjusted_matrix, column_det, column_per, det_k, generator_matrix, per_k, sym_det, submatrix_with_shifts,
    IndexSeq, NCMatrix, SeqMode,
};
use crate::pbw::EnvElement;

/// Scalar shift sequences of length k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShiftFamily {
    /// `(k-1, k-2, ..., 0)`
    Natural,
    /// `(k/2-1, ..., 0, 0, ..., -k/2+1)` for even k, with `1/2, 0, -1/2` at the
    /// centre for odd k.
    TildeNatural,
    /// `(k/2-1, k/2-2, ..., -k/2)`
    DescendingHalf,
    /// `(k/2, k/2-1, ..., -k/2+1)`
    Hat,
}

impl ShiftFamily {
    pub fn sequence(self, k: usize) -> Vec<Rat> {
        let half = rat(k as i64, 2);
        match self {
            ShiftFamily::Natural => (0..k).map(|i| int((k - 1 - i) as i64)).collect(),
            ShiftFamily::DescendingHalf => (0..k).map(|i| &half - int(1 + i as i64)).collect(),
            ShiftFamily::Hat => (0..k).map(|i| &half - int(i as i64)).collect(),
            ShiftFamily::TildeNatural => {
                let m = k / 2;
                let upper: Vec<Rat> = (0..m).map(|i| &half - int(1 + i as i64)).collect();
                let mut out = upper.clone();
                if k % 2 == 1 {
                    out.push(Rat::zero());
                }
                out.extend(upper.iter().rev().map(|x| -x));
                out
            }
        }
    }
}

/// `u + c` for every `c` in the sequence.
fn shifted_params(u: &UnivPoly, seq: &[Rat]) -> Vec<UnivPoly> {
    seq.iter().map(|c| u + &UnivPoly::constant(c.clone())).collect()
}

fn constants(seq: &[Rat]) -> Vec<UnivPoly> {
    seq.iter().cloned().map(UnivPoly::constant).collect()
}

/// `sum_{alpha strict} det(Z_alpha + u 1 + diag(shift))`.
fn det_minor_sum(z: &NCMatrix, k: usize, u: &UnivPoly, shift: &[Rat]) -> Result<EnvElement> {
    if k == 0 {
        return Ok(EnvElement::one(z.realization()));
    }
    let diag = shifted_params(u, shift);
    let seqs = IndexSeq::all(z.size(), k, SeqMode::Strict);
    let parts: Vec<Result<EnvElement>> = seqs
        .par_iter()
        .map(|alpha| Ok(column_det(&z.submatrix(alpha.indices())?.add_diagonal(&diag)?)))
        .collect();
    sum(z.realization(), parts)
}

/// `sum_{alpha weak} (1/alpha!) per(Z_alpha + u 1_alpha - 1_alpha diag(shift))`.
fn per_minor_sum(z: &NCMatrix, k: usize, u: &UnivPoly, shift: &[Rat]) -> Result<EnvElement> {
    if k == 0 {
        return Ok(EnvElement::one(z.realization()));
    }
    let a: Vec<UnivPoly> = shift.iter().map(|c| u - &UnivPoly::constant(c.clone())).collect();
    let seqs = IndexSeq::all(z.size(), k, SeqMode::Weak);
    let parts: Vec<Result<EnvElement>> = seqs
        .par_iter()
        .map(|alpha| {
            let m = submatrix_with_shifts(z, alpha, &a)?;
            Ok(column_per(&m).scale_rat(&(Rat::one() / alpha.multiplicity_factorial())))
        })
        .collect();
    sum(z.realization(), parts)
}

fn sum(alg: &Arc<Realization>, parts: Vec<Result<EnvElement>>) -> Result<EnvElement> {
    let mut acc = EnvElement::zero(alg);
    for p in parts {
        acc.add_assign_checked(&p?)?;
    }
    Ok(acc)
}

fn require(alg: &Realization, kind: AlgebraKind) -> Result<()> {
    if alg.kind() == kind {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("element needs a {kind:?} realization, got {}", alg.descriptor())))
    }
}

/// `det(E + u1 + diag(N-1, ..., 0))`.
pub fn gl_det(alg: &Arc<Realization>, u: &UnivPoly) -> Result<EnvElement> {
    require(alg, AlgebraKind::Gl)?;
    gl_minor_det(alg, alg.size(), u)
}

/// `sum_{alpha strict} det(E_alpha + u1 + diag natural_k)`; zero for k > N.
pub fn gl_minor_det(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> Result<EnvElement> {
    require(alg, AlgebraKind::Gl)?;
    det_minor_sum(&generator_matrix(alg), k, u, &ShiftFamily::Natural.sequence(k))
}

/// `sum_{alpha weak} (1/alpha!) per(E_alpha + u1_alpha - 1_alpha diag natural_k)`.
pub fn gl_minor_per(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> Result<EnvElement> {
    require(alg, AlgebraKind::Gl)?;
    per_minor_sum(&generator_matrix(alg), k, u, &ShiftFamily::Natural.sequence(k))
}

/// `Det_k(E + u1; natural_k)`.
pub fn gl_sym_det(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> Result<EnvElement> {
    require(alg, AlgebraKind::Gl)?;
    let z = generator_matrix(alg).add_diagonal(&vec![u.clone(); alg.size()])?;
    det_k(&z, k, &constants(&ShiftFamily::Natural.sequence(k)))
}

/// `Per_k(E + u1; -natural_k)`.
pub fn gl_sym_per(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> Result<EnvElement> {
    require(alg, AlgebraKind::Gl)?;
    let z = generator_matrix(alg).add_diagonal(&vec![u.clone(); alg.size()])?;
    let neg: Vec<Rat> = ShiftFamily::Natural.sequence(k).iter().map(|x| -x).collect();
    per_k(&z, k, &constants(&neg))
}

/// `sum_{alpha strict} det(F_alpha + u1 + diag natural_k)` over o(1).
pub fn o1_minor_det(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> Result<EnvElement> {
    require(alg, AlgebraKind::OIdentity)?;
    det_minor_sum(&generator_matrix(alg), k, u, &ShiftFamily::Natural.sequence(k))
}

/// `Det_k(F + u1; natural_k)` over o(1).
pub fn o1_sym_det(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> Result<EnvElement> {
    require(alg, AlgebraKind::OIdentity)?;
    let z = generator_matrix(alg).add_diagonal(&vec![u.clone(); alg.size()])?;
    det_k(&z, k, &constants(&ShiftFamily::Natural.sequence(k)))
}

/// `det(F + u1 + diag tilde-natural_N)` over o(S_0).
pub fn o_split_det(alg: &Arc<Realization>, u: &UnivPoly) -> Result<EnvElement> {
    require(alg, AlgebraKind::OSplit)?;
    let n = alg.size();
    let diag = shifted_params(u, &ShiftFamily::TildeNatural.sequence(n));
    Ok(column_det(&generator_matrix(alg).add_diagonal(&diag)?))
}

/// `sum_{alpha strict} det(F~_alpha + u1 + diag(k/2-1, ..., -k/2))` over o(S_0).
pub fn o_split_minor_det(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> Result<EnvElement> {
    require(alg, AlgebraKind::OSplit)?;
    det_minor_sum(&adjusted_matrix(alg, Variant::Tilde)?, k, u, &ShiftFamily::DescendingHalf.sequence(k))
}

/// `sum_{alpha strict} det(F^_alpha + u1 + diag(k/2, ..., -k/2+1))` over o(S_0).
pub fn o_split_minor_det_hat(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> Result<EnvElement> {
    require(alg, AlgebraKind::OSplit)?;
    det_minor_sum(&adjusted_matrix(alg, Variant::Hat)?, k, u, &ShiftFamily::Hat.sequence(k))
}

/// `Det_k(F + u1; tilde-natural_k)` over o(S_0).
pub fn o_split_sym_det(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> Result<EnvElement> {
    require(alg, AlgebraKind::OSplit)?;
    let z = generator_matrix(alg).add_diagonal(&vec![u.clone(); alg.size()])?;
    det_k(&z, k, &constants(&ShiftFamily::TildeNatural.sequence(k)))
}

/// `sum_{alpha weak} (1/alpha!) per(F~_alpha + u1_alpha - 1_alpha diag(k/2-1, ..., -k/2))`.
pub fn sp_minor_per(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> Result<EnvElement> {
    require(alg, AlgebraKind::SpSplit)?;
    per_minor_sum(&adjusted_matrix(alg, Variant::Tilde)?, k, u, &ShiftFamily::DescendingHalf.sequence(k))
}

/// Hat form: `sum (1/alpha!) per(F^_alpha + u1_alpha - 1_alpha diag(k/2, ..., -k/2+1))`.
pub fn sp_minor_per_hat(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> Result<EnvElement> {
    require(alg, AlgebraKind::SpSplit)?;
    per_minor_sum(&adjusted_matrix(alg, Variant::Hat)?, k, u, &ShiftFamily::Hat.sequence(k))
}

/// `Per_k(F + u1; tilde-natural_k)` over sp(J_0).
pub fn sp_sym_per(alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> Result<EnvElement> {
    require(alg, AlgebraKind::SpSplit)?;
    let z = generator_matrix(alg).add_diagonal(&vec![u.clone(); alg.size()])?;
    per_k(&z, k, &constants(&ShiftFamily::TildeNatural.sequence(k)))
}

/// Every constructor reachable by name from the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementName {
    CGl,
    CGlK,
    DGlK,
    CPrimeGl,
    CPrimeGlK,
    DPrimeGlK,
    CO1,
    CO1K,
    CPrimeO1,
    CPrimeO1K,
    COS0,
    COS0K,
    COS0KHat,
    CPrimeOS0,
    CPrimeOS0K,
    DSp,
    DSpHat,
    DPrimeSp,
}

const NAMES: [(ElementName, &str); 18] = [
    (ElementName::CGl, "C.gl"),
    (ElementName::CGlK, "C.gl.k"),
    (ElementName::DGlK, "D.gl.k"),
    (ElementName::CPrimeGl, "C'.gl"),
    (ElementName::CPrimeGlK, "C'.gl.k"),
    (ElementName::DPrimeGlK, "D'.gl.k"),
    (ElementName::CO1, "C.o1"),
    (ElementName::CO1K, "C.o1.k"),
    (ElementName::CPrimeO1, "C'.o1"),
    (ElementName::CPrimeO1K, "C'.o1.k"),
    (ElementName::COS0, "C.oS0"),
    (ElementName::COS0K, "C.oS0.k"),
    (ElementName::COS0KHat, "C.oS0.k.hat"),
    (ElementName::CPrimeOS0, "C'.oS0"),
    (ElementName::CPrimeOS0K, "C'.oS0.k"),
    (ElementName::DSp, "D.sp"),
    (ElementName::DSpHat, "D.sp.hat"),
    (ElementName::DPrimeSp, "D'.sp"),
];

/// Which closed-form eigenvalue an element should have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EigFormula {
    /// `(u + l_1) ... (u + l_N)`, `l_i = lambda_i + N - i`.
    GlDet,
    /// Strict-sum product with shifts `k-1, ..., 0`.
    GlMinor,
    /// Weak-sum product with shifts `-k+1, ..., 0`.
    GlPer,
    /// `(u^2 - l_1^2) ...`, times `u` for odd N, `l_i = lambda_i + N/2 - i`.
    OSplit,
    /// Two-chain sum for the symplectic permanent.
    Sp,
}

impl ElementName {
    pub fn all() -> impl Iterator<Item = ElementName> {
        NAMES.iter().map(|(e, _)| *e)
    }

    pub fn as_str(self) -> &'static str {
        NAMES.iter().find(|(e, _)| *e == self).map(|(_, s)| *s).unwrap_or("?")
    }

    pub fn algebra(self) -> AlgebraKind {
        use ElementName::*;
        match self {
            CGl | CGlK | DGlK | CPrimeGl | CPrimeGlK | DPrimeGlK => AlgebraKind::Gl,
            CO1 | CO1K | CPrimeO1 | CPrimeO1K => AlgebraKind::OIdentity,
            COS0 | COS0K | COS0KHat | CPrimeOS0 | CPrimeOS0K => AlgebraKind::OSplit,
            DSp | DSpHat | DPrimeSp => AlgebraKind::SpSplit,
        }
    }

    /// Whether the element depends on k (otherwise k = N).
    pub fn takes_k(self) -> bool {
        use ElementName::*;
        !matches!(self, CGl | CPrimeGl | CO1 | CPrimeO1 | COS0 | CPrimeOS0)
    }

    /// The element it is asserted to equal.
    pub fn partner(self) -> ElementName {
        use ElementName::*;
        match self {
            CGl => CPrimeGl,
            CGlK => CPrimeGlK,
            DGlK => DPrimeGlK,
            CO1 => CPrimeO1,
            CO1K => CPrimeO1K,
            COS0 => CPrimeOS0,
            COS0K => CPrimeOS0K,
            COS0KHat => COS0K,
            DSp => DPrimeSp,
            DSpHat => DSp,
            CPrimeGl => CGl,
            CPrimeGlK => CGlK,
            DPrimeGlK => DGlK,
            CPrimeO1 => CO1,
            CPrimeO1K => CO1K,
            CPrimeOS0 => COS0,
            CPrimeOS0K => COS0K,
            DPrimeSp => DSp,
        }
    }

    /// Closed-form eigenvalue, if one is known at this `(N, k)`.
    pub fn eig_formula(self, n: usize, k: usize) -> Option<EigFormula> {
        use ElementName::*;
        match self {
            CGl | CPrimeGl => Some(EigFormula::GlDet),
            CGlK | CPrimeGlK => Some(EigFormula::GlMinor),
            DGlK | DPrimeGlK => Some(EigFormula::GlPer),
            COS0 | CPrimeOS0 => Some(EigFormula::OSplit),
            COS0K | COS0KHat | CPrimeOS0K if k == n => Some(EigFormula::OSplit),
            DSp | DSpHat | DPrimeSp => Some(EigFormula::Sp),
            _ => None,
        }
    }

    /// Builds the element over `alg` with symbolic parameter `u`.
    pub fn build(self, alg: &Arc<Realization>, k: usize, u: &UnivPoly) -> Result<EnvElement> {
        use ElementName::*;
        require(alg, self.algebra())?;
        let n = alg.size();
        match self {
            CGl => gl_det(alg, u),
            CGlK => gl_minor_det(alg, k, u),
            DGlK => gl_minor_per(alg, k, u),
            CPrimeGl => {
                let z = generator_matrix(alg).add_diagonal(&vec![u.clone(); n])?;
                sym_det(&z, &constants(&ShiftFamily::Natural.sequence(n)))
            }
            CPrimeGlK => gl_sym_det(alg, k, u),
            DPrimeGlK => gl_sym_per(alg, k, u),
            CO1 => o1_minor_det(alg, n, u),
            CO1K => o1_minor_det(alg, k, u),
            CPrimeO1 => o1_sym_det(alg, n, u),
            CPrimeO1K => o1_sym_det(alg, k, u),
            COS0 => o_split_det(alg, u),
            COS0K => o_split_minor_det(alg, k, u),
            COS0KHat => o_split_minor_det_hat(alg, k, u),
            CPrimeOS0 => o_split_sym_det(alg, n, u),
            CPrimeOS0K => o_split_sym_det(alg, k, u),
            DSp => sp_minor_per(alg, k, u),
            DSpHat => sp_minor_per_hat(alg, k, u),
            DPrimeSp => sp_sym_per(alg, k, u),
        }
    }
}

impl fmt::Display for ElementName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ElementName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NAMES
            .iter()
            .find(|(_, name)| *name == s.trim())
            .map(|(e, _)| *e)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Product of linear factors `u + c`.
fn linear_product<I: IntoIterator<Item = Rat>>(consts: I) -> UnivPoly {
    consts.into_iter().fold(UnivPoly::one(), |acc, c| &acc * &UnivPoly::u_plus(c))
}

/// Closed-form eigenvalue polynomial in `u` for partition `lambda`.
pub fn eig_formula(formula: EigFormula, n: usize, k: usize, lambda: &[Rat]) -> Result<UnivPoly> {
    let expected = match formula {
        EigFormula::GlDet | EigFormula::GlMinor | EigFormula::GlPer => n,
        EigFormula::OSplit | EigFormula::Sp => n / 2,
    };
    if lambda.len() != expected {
        return Err(Error::LengthMismatch { expected, got: lambda.len() });
    }
    let lam = |i: usize| lambda[i - 1].clone();
    let k_i = k as i64;
    Ok(match formula {
        EigFormula::GlDet => linear_product((1..=n).map(|i| lam(i) + int((n - i) as i64))),
        EigFormula::GlMinor => {
            let mut acc = UnivPoly::zero();
            for alpha in IndexSeq::all(n, k, SeqMode::Strict) {
                acc += &linear_product(
                    alpha.indices().iter().enumerate().map(|(t, &a)| lam(a) + int(k_i - 1 - t as i64)),
                );
            }
            acc
        }
        EigFormula::GlPer => {
            let mut acc = UnivPoly::zero();
            for alpha in IndexSeq::all(n, k, SeqMode::Weak) {
                acc += &linear_product(
                    alpha.indices().iter().enumerate().map(|(t, &a)| lam(a) - int(k_i - 1 - t as i64)),
                );
            }
            acc
        }
        EigFormula::OSplit => {
            let half = rat(n as i64, 2);
            let mut acc = if n % 2 == 1 { UnivPoly::u() } else { UnivPoly::one() };
            for i in 1..=n / 2 {
                let l = lam(i) + &half - int(i as i64);
                acc = &acc * &(&UnivPoly::monomial(2, Rat::one()) - &UnivPoly::constant(&l * &l));
            }
            acc
        }
        EigFormula::Sp => {
            let half_n = n / 2;
            let half_k = rat(k_i, 2);
            let mut acc = UnivPoly::zero();
            for l in 0..=k {
                let firsts = IndexSeq::all(half_n, l, SeqMode::Weak);
                let seconds = IndexSeq::all(half_n, k - l, SeqMode::Weak);
                for a in &firsts {
                    let p1 = linear_product(
                        a.indices().iter().enumerate().map(|(j, &x)| lam(x) - &half_k + int(j as i64 + 1)),
                    );
                    for b in &seconds {
                        // Second chain runs weakly increasing over n+1..=N, so its
                        // primes decrease through 1..=n.
                        let primed: Vec<usize> = b.indices().iter().map(|&x| half_n + 1 - x).collect();
                        let p2 = linear_product(
                            primed.iter().enumerate().map(|(m, &x)| -lam(x) - &half_k + int((l + m) as i64)),
                        );
                        acc += &(&p1 * &p2);
                    }
                }
            }
            acc
        }
    })
}

fn binomial(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut acc = Rat::one();
    for i in 0..k {
        acc = acc * int((n - i) as i64) / int((i + 1) as i64);
    }
    acc
}

/// `R^k_l = C(k, 2l) (2l-1)!!`.
pub fn coeff_r(k: usize, l: usize) -> Rat {
    let mut dfact = Rat::one();
    let mut x = 2 * l as i64 - 1;
    while x > 1 {
        dfact *= int(x);
        x -= 2;
    }
    binomial(k, 2 * l) * dfact
}

/// Binomial coefficient as a rational.
pub fn choose(n: usize, k: usize) -> Rat {
    binomial(n, k)
}

/// Rising factorial power `x (x+1) ... (x+k-1)` of a polynomial `x`.
pub fn rising(x: &UnivPoly, k: usize) -> UnivPoly {
    (0..k).fold(UnivPoly::one(), |acc, i| &acc * &(x + &UnivPoly::from_int(i as i64)))
}

/// Double-step factorial power `x (x+2) ... (x+2k-2)`.
pub fn double_rising(x: &UnivPoly, k: usize) -> UnivPoly {
    (0..k).fold(UnivPoly::one(), |acc, i| &acc * &(x + &UnivPoly::from_int(2 * i as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_sequences() {
        let seq = |f: ShiftFamily, k| f.sequence(k);
        assert_eq!(seq(ShiftFamily::Natural, 3), vec![int(2), int(1), int(0)]);
        assert_eq!(seq(ShiftFamily::TildeNatural, 4), vec![int(1), int(0), int(0), int(-1)]);
        assert_eq!(seq(ShiftFamily::TildeNatural, 3), vec![rat(1, 2), int(0), rat(-1, 2)]);
        assert_eq!(seq(ShiftFamily::TildeNatural, 1), vec![int(0)]);
        assert_eq!(seq(ShiftFamily::TildeNatural, 2), vec![int(0), int(0)]);
        assert_eq!(seq(ShiftFamily::DescendingHalf, 2), vec![int(0), int(-1)]);
        assert_eq!(seq(ShiftFamily::Hat, 2), vec![int(1), int(0)]);
        assert_eq!(seq(ShiftFamily::Hat, 1), vec![rat(1, 2)]);
        for k in 0..8 {
            let t = seq(ShiftFamily::TildeNatural, k);
            assert_eq!(t.len(), k);
            let rev: Vec<Rat> = t.iter().rev().map(|x| -x).collect();
            assert_eq!(rev, t);
            assert!(t.iter().fold(Rat::zero(), |a, b| a + b).is_zero());
            let s = seq(ShiftFamily::Natural, k).into_iter().fold(Rat::zero(), |a, b| a + b);
            assert_eq!(s, int((k * k.saturating_sub(1) / 2) as i64));
        }
    }

    #[test]
    fn names_round_trip() {
        for e in ElementName::all() {
            assert_eq!(e.as_str().parse::<ElementName>().unwrap(), e);
            assert_eq!(e.partner().algebra(), e.algebra());
        }
        assert!("X.gl".parse::<ElementName>().is_err());
    }

    #[test]
    fn r_coefficients() {
        assert_eq!(coeff_r(4, 1), int(6));
        assert_eq!(coeff_r(4, 2), int(3));
        assert_eq!(coeff_r(7, 0), int(1));
        assert_eq!(coeff_r(3, 2), int(0));
    }

    #[test]
    fn eig_formula_examples() {
        let gl = eig_formula(EigFormula::GlDet, 2, 2, &[int(1), int(0)]).unwrap();
        assert_eq!(gl, UnivPoly::from_terms([(2, int(1)), (1, int(2))]));
        let sp = eig_formula(EigFormula::Sp, 2, 1, &[int(5)]).unwrap();
        assert_eq!(sp, UnivPoly::monomial(1, int(2)));
        let o3 = eig_formula(EigFormula::OSplit, 3, 3, &[int(1)]).unwrap();
        let l = rat(3, 2);
        assert_eq!(o3, UnivPoly::u() * (UnivPoly::monomial(2, int(1)) - UnivPoly::constant(&l * &l)));
        let o2 = eig_formula(EigFormula::OSplit, 2, 2, &[int(2)]).unwrap();
        assert_eq!(o2, UnivPoly::from_terms([(2, int(1)), (0, int(-4))]));
        assert!(eig_formula(EigFormula::GlDet, 2, 2, &[int(1)]).is_err());
    }

    #[test]
    fn small_elements() {
        let u = UnivPoly::u();
        let gl1 = Realization::gl(1).unwrap();
        let e11 = EnvElement::symbol(&gl1, 1, 1).unwrap();
        assert_eq!(gl_det(&gl1, &u).unwrap(), &e11 + &EnvElement::scalar(&gl1, u.clone()));
        let sp = Realization::sp_split(2).unwrap();
        let two_u = EnvElement::scalar(&sp, UnivPoly::monomial(1, int(2)));
        assert_eq!(sp_minor_per(&sp, 1, &u).unwrap(), two_u);
        assert_eq!(sp_sym_per(&sp, 1, &u).unwrap(), two_u);
        assert_eq!(sp_minor_per_hat(&sp, 1, &u).unwrap(), two_u);
        assert_eq!(sp_minor_per(&sp, 0, &u).unwrap(), EnvElement::one(&sp));
        let gl3 = Realization::gl(3).unwrap();
        assert_eq!(gl_minor_det(&gl3, 0, &u).unwrap(), EnvElement::one(&gl3));
        assert!(gl_minor_det(&gl3, 4, &u).unwrap().is_zero());
        assert!(sp_minor_per(&gl3, 1, &u).is_err());
    }

    #[test]
    fn o_split_two_by_two() {
        let o2 = Realization::o_split(2).unwrap();
        let u = UnivPoly::u();
        let f = EnvElement::symbol(&o2, 1, 1).unwrap();
        let expected = &EnvElement::scalar(&o2, &u * &u) - &(&f * &f);
        assert_eq!(o_split_det(&o2, &u).unwrap(), expected);
    }
}
