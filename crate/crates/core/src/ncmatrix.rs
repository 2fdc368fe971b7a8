//! Matrices with entries in U(g) and their noncommutative determinants,
//! permanents, Pfaffians and Hafnians.

use std::sync::Arc;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::coeff::{factorial, int, Rat, UnivPoly};
use crate::error::{Error, Result};
use crate::lie::{Realization, Variant};
use crate::pbw::EnvElement;
use crate::ratmat::RatMatrix;

/// Square matrix of enveloping-algebra elements over one realization.
#[derive(Clone, Debug)]
pub struct NCMatrix {
    alg: Arc<Realization>,
    size: usize,
    entries: Vec<EnvElement>,
}

impl PartialEq for NCMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_as(&other.alg) && self.size == other.size && self.entries == other.entries
    }
}

impl Eq for NCMatrix {}

impl NCMatrix {
    /// Builds a matrix from 0-based entry function.
    pub fn from_fn(alg: &Arc<Realization>, size: usize, mut f: impl FnMut(usize, usize) -> EnvElement) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        NCMatrix { alg: alg.clone(), size, entries }
    }

    /// Matrix of central scalars.
    pub fn scalars(alg: &Arc<Realization>, rows: &[Vec<UnivPoly>]) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidSize("matrix must be square".into()));
        }
        Ok(Self::from_fn(alg, size, |i, j| EnvElement::scalar(alg, rows[i][j].clone())))
    }

    pub fn realization(&self) -> &Arc<Realization> {
        &self.alg
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry at 0-based position.
    pub fn get(&self, i: usize, j: usize) -> &EnvElement {
        &self.entries[i * self.size + j]
    }

    /// Adds `diag[i]` to the i-th diagonal entry.
    pub fn add_diagonal(&self, diag: &[UnivPoly]) -> Result<Self> {
        if diag.len() != self.size {
            return Err(Error::LengthMismatch { expected: self.size, got: diag.len() });
        }
        let mut out = self.clone();
        for (i, d) in diag.iter().enumerate() {
            let e = &mut out.entries[i * self.size + i];
            *e = &*e + &EnvElement::scalar(&self.alg, d.clone());
        }
        Ok(out)
    }

    /// `Z + u 1`.
    pub fn plus_u(&self) -> Self {
        self.add_diagonal(&vec![UnivPoly::u(); self.size]).expect("diagonal has matching length")
    }

    /// Principal submatrix on the given 1-based indices (repeats allowed).
    pub fn submatrix(&self, alpha: &[usize]) -> Result<Self> {
        for &a in alpha {
            if a == 0 || a > self.size {
                return Err(Error::IndexOutOfRange { index: a, size: self.size });
            }
        }
        Ok(Self::from_fn(&self.alg, alpha.len(), |r, c| self.get(alpha[r] - 1, alpha[c] - 1).clone()))
    }

    /// `g Z` for a rational matrix `g`.
    pub fn left_mul(&self, g: &RatMatrix) -> Result<Self> {
        self.check_rat_size(g)?;
        let n = self.size;
        Ok(Self::from_fn(&self.alg, n, |i, j| {
            let mut acc = EnvElement::zero(&self.alg);
            for k in 0..n {
                if !g[(i, k)].is_zero() {
                    acc = &acc + &self.get(k, j).scale_rat(&g[(i, k)]);
                }
            }
            acc
        }))
    }

    /// `Z g` for a rational matrix `g`.
    pub fn right_mul(&self, g: &RatMatrix) -> Result<Self> {
        self.check_rat_size(g)?;
        let n = self.size;
        Ok(Self::from_fn(&self.alg, n, |i, j| {
            let mut acc = EnvElement::zero(&self.alg);
            for k in 0..n {
                if !g[(k, j)].is_zero() {
                    acc = &acc + &self.get(i, k).scale_rat(&g[(k, j)]);
                }
            }
            acc
        }))
    }

    fn check_rat_size(&self, g: &RatMatrix) -> Result<()> {
        if g.rows() != self.size || g.cols() != self.size {
            return Err(Error::LengthMismatch { expected: self.size, got: g.rows() });
        }
        Ok(())
    }

    fn has_symmetry(&self, symmetric: bool) -> bool {
        let n = self.size;
        (0..n).all(|i| {
            (0..n).all(|j| {
                if symmetric {
                    self.get(i, j) == self.get(j, i)
                } else {
                    *self.get(i, j) == -self.get(j, i)
                }
            })
        })
    }
}

/// `E = (E_ij)` or `F = (F_ij)` with every symbol written in the canonical basis.
pub fn generator_matrix(alg: &Arc<Realization>) -> NCMatrix {
    NCMatrix::from_fn(alg, alg.size(), |i, j| EnvElement::from_combo(alg, alg.symbol(i + 1, j + 1)))
}

/// Generator matrix of a split realization with its tilde or hat diagonal shift.
pub fn adjusted_matrix(alg: &Arc<Realization>, variant: Variant) -> Result<NCMatrix> {
    let diag: Vec<UnivPoly> = alg.diagonal_adjustment(variant)?.into_iter().map(UnivPoly::constant).collect();
    generator_matrix(alg).add_diagonal(&diag)
}

/// `Z_ij + delta_ij a` with 1-based indices.
pub fn shifted_entry(z: &NCMatrix, i: usize, j: usize, a: &UnivPoly) -> Result<EnvElement> {
    for idx in [i, j] {
        if idx == 0 || idx > z.size {
            return Err(Error::IndexOutOfRange { index: idx, size: z.size });
        }
    }
    let e = z.get(i - 1, j - 1).clone();
    Ok(if i == j { &e + &EnvElement::scalar(&z.alg, a.clone()) } else { e })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeqMode {
    Strict,
    Weak,
}

/// Index sequence `alpha` in 1..=N, strictly or weakly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSeq {
    indices: Vec<usize>,
    mode: SeqMode,
}

impl IndexSeq {
    pub fn new(indices: Vec<usize>, mode: SeqMode) -> Result<Self> {
        let ok = indices.windows(2).all(|w| match mode {
            SeqMode::Strict => w[0] < w[1],
            SeqMode::Weak => w[0] <= w[1],
        });
        if !ok || indices.contains(&0) {
            return Err(Error::InvalidSize(format!("{indices:?} is not a {mode:?} index sequence")));
        }
        Ok(IndexSeq { indices, mode })
    }

    /// Every sequence of length `k` over `1..=n`, in lexicographic order.
    pub fn all(n: usize, k: usize, mode: SeqMode) -> Vec<IndexSeq> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(n: usize, k: usize, mode: SeqMode, cur: &mut Vec<usize>, out: &mut Vec<IndexSeq>) {
            if cur.len() == k {
                out.push(IndexSeq { indices: cur.clone(), mode });
                return;
            }
            let start = match (cur.last(), mode) {
                (None, _) => 1,
                (Some(&l), SeqMode::Strict) => l + 1,
                (Some(&l), SeqMode::Weak) => l,
            };
            for i in start..=n {
                cur.push(i);
                rec(n, k, mode, cur, out);
                cur.pop();
            }
        }
        rec(n, k, mode, &mut cur, &mut out);
        out
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn mode(&self) -> SeqMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// `alpha! = m_1! ... m_N!` over the multiplicities.
    pub fn multiplicity_factorial(&self) -> Rat {
        let mut acc = Rat::one();
        let mut run = 0;
        for (i, x) in self.indices.iter().enumerate() {
            run = if i > 0 && self.indices[i - 1] == *x { run + 1 } else { 1 };
            acc *= int(run as i64);
        }
        acc
    }
}

/// k x k matrix with entries `Z_{alpha_r alpha_c} + delta_{alpha_r alpha_c} a_c`.
pub fn submatrix_with_shifts(z: &NCMatrix, alpha: &IndexSeq, a: &[UnivPoly]) -> Result<NCMatrix> {
    if alpha.len() != a.len() {
        return Err(Error::LengthMismatch { expected: alpha.len(), got: a.len() });
    }
    let sub = z.submatrix(alpha.indices())?;
    let idx = alpha.indices();
    Ok(NCMatrix::from_fn(&z.alg, idx.len(), |r, c| {
        let e = sub.get(r, c).clone();
        if idx[r] == idx[c] {
            &e + &EnvElement::scalar(&z.alg, a[c].clone())
        } else {
            e
        }
    }))
}

fn inversions_above(used: u64, x: usize) -> u32 {
    (used >> (x + 1)).count_ones()
}

/// Column determinant or permanent: sum over row choices, factors taken
/// column by column left to right.
fn column_expand(z: &NCMatrix, signed: bool) -> EnvElement {
    let n = z.size;
    if n == 0 {
        return EnvElement::one(&z.alg);
    }
    fn rec(z: &NCMatrix, signed: bool, col: usize, used: u64, prefix: &EnvElement, neg: bool, acc: &mut EnvElement) {
        let n = z.size;
        if col == n {
            let term = if neg { -prefix } else { prefix.clone() };
            acc.add_assign_checked(&term).expect("same realization");
            return;
        }
        for r in 0..n {
            if used & (1 << r) != 0 {
                continue;
            }
            let entry = z.get(r, col);
            if entry.is_zero() {
                continue;
            }
            let flip = signed && inversions_above(used, r) % 2 == 1;
            let next = prefix * entry;
            if next.is_zero() {
                continue;
            }
            rec(z, signed, col + 1, used | (1 << r), &next, neg ^ flip, acc);
        }
    }
    let parts: Vec<EnvElement> = (0..n)
        .into_par_iter()
        .map(|r| {
            let mut acc = EnvElement::zero(&z.alg);
            let entry = z.get(r, 0);
            if !entry.is_zero() {
                rec(z, signed, 1, 1 << r, entry, false, &mut acc);
            }
            acc
        })
        .collect();
    sum_in_order(&z.alg, parts)
}

fn sum_in_order(alg: &Arc<Realization>, parts: Vec<EnvElement>) -> EnvElement {
    let mut acc = EnvElement::zero(alg);
    for p in parts {
        acc.add_assign_checked(&p).expect("same realization");
    }
    acc
}

/// `det Z = sum sgn(s) Z_{s(1)1} Z_{s(2)2} ... Z_{s(N)N}`.
pub fn column_det(z: &NCMatrix) -> EnvElement {
    column_expand(z, true)
}

/// `per Z = sum Z_{s(1)1} Z_{s(2)2} ... Z_{s(N)N}`.
pub fn column_per(z: &NCMatrix) -> EnvElement {
    column_expand(z, false)
}

/// `(1/k!) sum_{s,s'} [sgn s sgn s'] prod_t (Y_{s(t)s'(t)} + D_{s(t)s'(t)} a_t)`
/// where `D` is the 0/1 pattern `shift_mask`.
fn sym_sum(y: &NCMatrix, shift_mask: &[bool], a: &[UnivPoly], signed: bool) -> EnvElement {
    let k = y.size;
    if k == 0 {
        return EnvElement::one(&y.alg);
    }
    let factor = |t: usize, r: usize, c: usize| -> EnvElement {
        let e = y.get(r, c);
        if shift_mask[r * k + c] {
            e + &EnvElement::scalar(&y.alg, a[t].clone())
        } else {
            e.clone()
        }
    };
    struct Ctx<'a> {
        k: usize,
        signed: bool,
        factors: &'a [Vec<EnvElement>],
    }
    fn rec(ctx: &Ctx, t: usize, rows: u64, cols: u64, prefix: &EnvElement, neg: bool, acc: &mut EnvElement) {
        if t == ctx.k {
            let term = if neg { -prefix } else { prefix.clone() };
            acc.add_assign_checked(&term).expect("same realization");
            return;
        }
        for r in 0..ctx.k {
            if rows & (1 << r) != 0 {
                continue;
            }
            for c in 0..ctx.k {
                if cols & (1 << c) != 0 {
                    continue;
                }
                let f = &ctx.factors[t][r * ctx.k + c];
                if f.is_zero() {
                    continue;
                }
                let flip = ctx.signed && (inversions_above(rows, r) + inversions_above(cols, c)) % 2 == 1;
                let next = prefix * f;
                if next.is_zero() {
                    continue;
                }
                rec(ctx, t + 1, rows | (1 << r), cols | (1 << c), &next, neg ^ flip, acc);
            }
        }
    }
    let factors: Vec<Vec<EnvElement>> =
        (0..k).map(|t| (0..k * k).map(|rc| factor(t, rc / k, rc % k)).collect()).collect();
    let ctx = Ctx { k, signed, factors: &factors };
    let parts: Vec<EnvElement> = (0..k * k)
        .into_par_iter()
        .map(|rc| {
            let (r, c) = (rc / k, rc % k);
            let mut acc = EnvElement::zero(&y.alg);
            let f = &factors[0][rc];
            if !f.is_zero() {
                rec(&ctx, 1, 1 << r, 1 << c, f, false, &mut acc);
            }
            acc
        })
        .collect();
    sum_in_order(&y.alg, parts).scale_rat(&(Rat::one() / factorial(k)))
}

fn identity_mask(k: usize) -> Vec<bool> {
    (0..k * k).map(|rc| rc / k == rc % k).collect()
}

fn alpha_mask(alpha: &[usize]) -> Vec<bool> {
    let k = alpha.len();
    (0..k * k).map(|rc| alpha[rc / k] == alpha[rc % k]).collect()
}

fn check_shifts(k: usize, a: &[UnivPoly]) -> Result<()> {
    if a.len() != k {
        return Err(Error::LengthMismatch { expected: k, got: a.len() });
    }
    Ok(())
}

/// Symmetrized determinant `Det(Z; a_1, ..., a_N)`.
pub fn sym_det(z: &NCMatrix, a: &[UnivPoly]) -> Result<EnvElement> {
    check_shifts(z.size, a)?;
    Ok(sym_sum(z, &identity_mask(z.size), a, true))
}

/// Symmetrized permanent `Per(Z; a_1, ..., a_N)`.
pub fn sym_per(z: &NCMatrix, a: &[UnivPoly]) -> Result<EnvElement> {
    check_shifts(z.size, a)?;
    Ok(sym_sum(z, &identity_mask(z.size), a, false))
}

fn minor_sum(z: &NCMatrix, k: usize, a: &[UnivPoly], mode: SeqMode) -> Result<EnvElement> {
    check_shifts(k, a)?;
    if k == 0 {
        return Ok(EnvElement::one(&z.alg));
    }
    let seqs = IndexSeq::all(z.size, k, mode);
    let parts: Vec<Result<EnvElement>> = seqs
        .par_iter()
        .map(|alpha| {
            let sub = z.submatrix(alpha.indices())?;
            let s = sym_sum(&sub, &alpha_mask(alpha.indices()), a, mode == SeqMode::Strict);
            Ok(match mode {
                SeqMode::Strict => s,
                SeqMode::Weak => s.scale_rat(&(Rat::one() / alpha.multiplicity_factorial())),
            })
        })
        .collect();
    Ok(sum_in_order(&z.alg, parts.into_iter().collect::<Result<Vec<_>>>()?))
}

/// `Det_k(Z; a_1, ..., a_k)`: symmetrized determinants of all principal k x k minors.
pub fn det_k(z: &NCMatrix, k: usize, a: &[UnivPoly]) -> Result<EnvElement> {
    minor_sum(z, k, a, SeqMode::Strict)
}

/// `Per_k(Z; a_1, ..., a_k)`: weighted symmetrized permanents over weakly
/// increasing index sequences.
pub fn per_k(z: &NCMatrix, k: usize, a: &[UnivPoly]) -> Result<EnvElement> {
    minor_sum(z, k, a, SeqMode::Weak)
}

/// Matching sum `(1/2^k k!) sum_s [sgn s] Z_{s(1)s(2)} ... Z_{s(2k-1)s(2k)}`.
fn matching_sum(z: &NCMatrix, signed: bool) -> EnvElement {
    let n = z.size;
    fn rec(z: &NCMatrix, signed: bool, used: u64, depth: usize, prefix: &EnvElement, neg: bool, acc: &mut EnvElement) {
        let n = z.size;
        if depth == n {
            let term = if neg { -prefix } else { prefix.clone() };
            acc.add_assign_checked(&term).expect("same realization");
            return;
        }
        for p in 0..n {
            if used & (1 << p) != 0 {
                continue;
            }
            let used_p = used | (1 << p);
            for q in 0..n {
                if used_p & (1 << q) != 0 {
                    continue;
                }
                let e = z.get(p, q);
                if e.is_zero() {
                    continue;
                }
                let inv = inversions_above(used, p) + inversions_above(used_p, q);
                let next = prefix * e;
                rec(z, signed, used_p | (1 << q), depth + 2, &next, neg ^ (signed && inv % 2 == 1), acc);
            }
        }
    }
    let mut acc = EnvElement::zero(&z.alg);
    rec(z, signed, 0, 0, &EnvElement::one(&z.alg), false, &mut acc);
    let k = n / 2;
    let norm = Rat::one() / (factorial(k) * int(1i64 << k));
    acc.scale_rat(&norm)
}

/// Pfaffian of an alternating matrix of even size.
pub fn pfaffian(z: &NCMatrix) -> Result<EnvElement> {
    if z.size % 2 == 1 {
        return Err(Error::InvalidSize(format!("Pfaffian needs even size, got {}", z.size)));
    }
    if !z.has_symmetry(false) {
        return Err(Error::NotSymmetric("alternating"));
    }
    Ok(matching_sum(z, true))
}

/// Hafnian of a symmetric matrix of even size.
pub fn hafnian(z: &NCMatrix) -> Result<EnvElement> {
    if z.size % 2 == 1 {
        return Err(Error::InvalidSize(format!("Hafnian needs even size, got {}", z.size)));
    }
    if !z.has_symmetry(true) {
        return Err(Error::NotSymmetric("symmetric"));
    }
    Ok(matching_sum(z, false))
}

/// `g Z g^{-1}`.
pub fn conjugate(z: &NCMatrix, g: &RatMatrix) -> Result<NCMatrix> {
    let inv = g.inverse()?;
    z.left_mul(g)?.right_mul(&inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    fn scalars(alg: &Arc<Realization>, rows: &[&[i64]]) -> NCMatrix {
        let rows: Vec<Vec<UnivPoly>> = rows.iter().map(|r| r.iter().map(|&x| UnivPoly::from_int(x)).collect()).collect();
        NCMatrix::scalars(alg, &rows).unwrap()
    }

    fn scalar_of(e: &EnvElement) -> UnivPoly {
        e.as_scalar().unwrap()
    }

    #[test]
    fn commutative_reductions() {
        let gl = Realization::gl(1).unwrap();
        let m = scalars(&gl, &[&[1, 2], &[3, 4]]);
        let zero = vec![UnivPoly::zero(); 2];
        assert_eq!(scalar_of(&column_det(&m)), UnivPoly::from_int(-2));
        assert_eq!(scalar_of(&column_per(&m)), UnivPoly::from_int(10));
        assert_eq!(scalar_of(&sym_det(&m, &zero).unwrap()), UnivPoly::from_int(-2));
        assert_eq!(scalar_of(&sym_per(&m, &zero).unwrap()), UnivPoly::from_int(10));
    }

    #[test]
    fn index_sequences() {
        assert_eq!(IndexSeq::all(3, 2, SeqMode::Strict).len(), 3);
        assert_eq!(IndexSeq::all(3, 2, SeqMode::Weak).len(), 6);
        assert_eq!(IndexSeq::all(2, 3, SeqMode::Strict).len(), 0);
        let a = IndexSeq::new(vec![1, 1, 2, 2, 2], SeqMode::Weak).unwrap();
        assert_eq!(a.multiplicity_factorial(), int(12));
        assert!(IndexSeq::new(vec![2, 1], SeqMode::Weak).is_err());
        assert!(IndexSeq::new(vec![1, 1], SeqMode::Strict).is_err());
    }

    #[test]
    fn shifted_submatrix_with_repeats() {
        let gl = Realization::gl(2).unwrap();
        let e = generator_matrix(&gl);
        let alpha = IndexSeq::new(vec![1, 1], SeqMode::Weak).unwrap();
        let a = vec![UnivPoly::from_int(5), UnivPoly::from_int(7)];
        let s = submatrix_with_shifts(&e, &alpha, &a).unwrap();
        let e11 = EnvElement::symbol(&gl, 1, 1).unwrap();
        for r in 0..2 {
            assert_eq!(s.get(r, 0), &(&e11 + &EnvElement::scalar(&gl, a[0].clone())));
            assert_eq!(s.get(r, 1), &(&e11 + &EnvElement::scalar(&gl, a[1].clone())));
        }
        assert!(submatrix_with_shifts(&e, &alpha, &a[..1]).is_err());
    }

    #[test]
    fn pfaffian_and_hafnian_small() {
        let gl = Realization::gl(1).unwrap();
        let alt = scalars(&gl, &[&[0, 3], &[-3, 0]]);
        assert_eq!(scalar_of(&pfaffian(&alt).unwrap()), UnivPoly::from_int(3));
        let sym = scalars(&gl, &[&[1, 2], &[2, 5]]);
        assert_eq!(scalar_of(&hafnian(&sym).unwrap()), UnivPoly::from_int(2));
        assert!(pfaffian(&sym).is_err());
        assert!(hafnian(&alt).is_err());
        assert!(pfaffian(&scalars(&gl, &[&[0]])).is_err());
        let z4 = scalars(&gl, &[&[0, 1, 2, 3], &[-1, 0, 4, 5], &[-2, -4, 0, 6], &[-3, -5, -6, 0]]);
        // Z12 Z34 - Z13 Z24 + Z14 Z23 = 6 - 10 + 12
        assert_eq!(scalar_of(&pfaffian(&z4).unwrap()), UnivPoly::from_int(8));
        let h4 = scalars(&gl, &[&[0, 1, 2, 3], &[1, 0, 4, 5], &[2, 4, 0, 6], &[3, 5, 6, 0]]);
        assert_eq!(scalar_of(&hafnian(&h4).unwrap()), UnivPoly::from_int(6 + 10 + 12));
    }

    #[test]
    fn minor_sums_edge_cases() {
        let gl = Realization::gl(2).unwrap();
        let e = generator_matrix(&gl);
        assert_eq!(det_k(&e, 0, &[]).unwrap(), EnvElement::one(&gl));
        assert_eq!(per_k(&e, 0, &[]).unwrap(), EnvElement::one(&gl));
        assert!(det_k(&e, 3, &[UnivPoly::zero(), UnivPoly::zero(), UnivPoly::zero()]).unwrap().is_zero());
        let trace = &EnvElement::symbol(&gl, 1, 1).unwrap() + &EnvElement::symbol(&gl, 2, 2).unwrap();
        assert_eq!(det_k(&e, 1, &[UnivPoly::zero()]).unwrap(), trace);
        assert_eq!(per_k(&e, 1, &[UnivPoly::zero()]).unwrap(), trace);
        assert!(det_k(&e, 2, &[UnivPoly::zero()]).is_err());
    }

    #[test]
    fn per_two_of_single_entry() {
        let gl = Realization::gl(1).unwrap();
        let e = generator_matrix(&gl);
        let a = [UnivPoly::from_int(2), rat(1, 3).into()];
        let z = EnvElement::symbol(&gl, 1, 1).unwrap();
        let expected = &(&z + &EnvElement::scalar(&gl, a[0].clone())) * &(&z + &EnvElement::scalar(&gl, a[1].clone()));
        assert_eq!(per_k(&e, 2, &a).unwrap(), expected);
    }

    #[test]
    fn sp_shifted_entry_and_adjustment() {
        let sp = Realization::sp_split(2).unwrap();
        let f = generator_matrix(&sp);
        let f11 = EnvElement::symbol(&sp, 1, 1).unwrap();
        let half = UnivPoly::constant(rat(-1, 2));
        assert_eq!(shifted_entry(&f, 2, 2, &half).unwrap(), &-&f11 + &EnvElement::scalar(&sp, half.clone()));
        assert!(shifted_entry(&f, 3, 1, &half).is_err());
        let tilde = adjusted_matrix(&sp, Variant::Tilde).unwrap();
        assert_eq!(tilde.get(1, 1), &(&-&f11 - &EnvElement::one(&sp)));
        let per1 = per_k(&f.plus_u(), 1, &[UnivPoly::zero()]).unwrap();
        assert_eq!(per1, EnvElement::scalar(&sp, UnivPoly::from_int(2) * UnivPoly::u()));
    }

    #[test]
    fn conjugation_by_diagonal() {
        let gl = Realization::gl(2).unwrap();
        let e = generator_matrix(&gl);
        let g = RatMatrix::from_ints(&[&[2, 0], &[0, 1]]);
        let c = conjugate(&e, &g).unwrap();
        assert_eq!(c.get(0, 1), &EnvElement::symbol(&gl, 1, 2).unwrap().scale_rat(&int(2)));
        assert_eq!(conjugate(&e, &RatMatrix::identity(2)).unwrap(), e);
        assert!(conjugate(&e, &RatMatrix::zeros(2, 2)).is_err());
    }
}
