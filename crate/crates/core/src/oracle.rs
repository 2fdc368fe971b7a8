//! Reference computations that avoid the PBW engine's memoized insertion:
//! naive rewriting in the free algebra, and the action of U(g) on
//! finite-dimensional tensor modules of the defining representation.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;

use crate::coeff::{Rat, UnivPoly};
use crate::error::{Error, Result};
use crate::lie::{GenId, Realization};
use crate::pbw::EnvElement;

/// Product `a * b` computed by concatenating words and repeatedly rewriting a
/// randomly chosen out-of-order adjacent pair `x y -> y x + [x, y]`.
pub fn free_product<R: Rng>(a: &EnvElement, b: &EnvElement, rng: &mut R) -> Result<EnvElement> {
    let alg = a.realization();
    if !alg.same_as(b.realization()) {
        return Err(Error::RealizationMismatch(
            alg.descriptor().to_string(),
            b.realization().descriptor().to_string(),
        ));
    }
    let mut words: HashMap<Vec<GenId>, UnivPoly> = HashMap::new();
    for (ma, pa) in a.terms() {
        for (mb, pb) in b.terms() {
            let mut w = ma.clone();
            w.extend_from_slice(mb);
            accumulate(&mut words, w, &(pa * pb));
        }
    }
    reduce(alg, words, rng)
}

/// Normal form of an arbitrary word combination by randomized rewriting.
pub fn reduce_words<R: Rng>(
    alg: &Arc<Realization>,
    words: Vec<(Vec<GenId>, UnivPoly)>,
    rng: &mut R,
) -> Result<EnvElement> {
    let mut map = HashMap::new();
    for (w, c) in words {
        accumulate(&mut map, w, &c);
    }
    reduce(alg, map, rng)
}

fn accumulate(words: &mut HashMap<Vec<GenId>, UnivPoly>, w: Vec<GenId>, c: &UnivPoly) {
    let entry = words.entry(w).or_default();
    *entry += c;
}

fn reduce<R: Rng>(alg: &Arc<Realization>, mut words: HashMap<Vec<GenId>, UnivPoly>, rng: &mut R) -> Result<EnvElement> {
    loop {
        words.retain(|_, c| !c.is_zero());
        let mut unsorted: Vec<&Vec<GenId>> = words.keys().filter(|w| w.windows(2).any(|p| p[0] > p[1])).collect();
        if unsorted.is_empty() {
            break;
        }
        unsorted.sort();
        let w = unsorted[rng.gen_range(0..unsorted.len())].clone();
        let c = words.remove(&w).unwrap_or_default();
        let sites: Vec<usize> = (0..w.len() - 1).filter(|&i| w[i] > w[i + 1]).collect();
        let i = sites[rng.gen_range(0..sites.len())];
        let (x, y) = (w[i], w[i + 1]);
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        accumulate(&mut words, swapped, &c);
        for (z, k) in alg.bracket(x, y) {
            let mut shorter = w[..i].to_vec();
            shorter.push(*z);
            shorter.extend_from_slice(&w[i + 2..]);
            accumulate(&mut words, shorter, &c.scale(k));
        }
    }
    EnvElement::from_terms(alg, words)
}

/// Symmetric or exterior power of the defining representation C^N.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorModule {
    Symmetric(usize),
    Exterior(usize),
}

impl TensorModule {
    /// Highest weight of the module as a partition of length N.
    pub fn highest_weight(self, n: usize) -> Vec<usize> {
        match self {
            TensorModule::Symmetric(p) => (0..n).map(|i| if i == 0 { p } else { 0 }).collect(),
            TensorModule::Exterior(p) => (0..n).map(|i| usize::from(i < p)).collect(),
        }
    }
}

/// Basis vector of S^p or Λ^p: sorted list of 0-based indices.
type Vector = HashMap<Vec<usize>, UnivPoly>;

fn apply_generator(alg: &Realization, module: TensorModule, g: GenId, v: &Vector) -> Vector {
    let m = alg.matrix(g);
    let n = alg.size();
    let mut out: Vector = HashMap::new();
    for (word, c) in v {
        for pos in 0..word.len() {
            let j = word[pos];
            for i in 0..n {
                let mij = &m[(i, j)];
                if mij.is_zero() {
                    continue;
                }
                let mut w = word.clone();
                w[pos] = i;
                let sign = match module {
                    TensorModule::Symmetric(_) => {
                        w.sort_unstable();
                        Rat::from_integer(1.into())
                    }
                    TensorModule::Exterior(_) => match sort_with_sign(&mut w) {
                        Some(s) => Rat::from_integer(s.into()),
                        None => continue,
                    },
                };
                let entry = out.entry(w).or_default();
                *entry += &c.scale(&(mij * sign));
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Sorts an exterior word, returning the permutation sign, or `None` on a repeat.
fn sort_with_sign(w: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        None
    } else {
        Some(sign)
    }
}

/// Applies `e` to the highest-weight vector `e_1^p` or `e_1 ∧ … ∧ e_p`.
/// Returns `Some(c)` when the result is `c` times that vector.
pub fn highest_weight_action(e: &EnvElement, module: TensorModule) -> Option<UnivPoly> {
    let alg = e.realization();
    let start: Vec<usize> = match module {
        TensorModule::Symmetric(p) => vec![0; p],
        TensorModule::Exterior(p) => (0..p).collect(),
    };
    let mut total: Vector = HashMap::new();
    for (mono, c) in e.terms() {
        let mut v: Vector = HashMap::from([(start.clone(), c.clone())]);
        for &g in mono.iter().rev() {
            v = apply_generator(alg, module, g, &v);
            if v.is_empty() {
                break;
            }
        }
        for (w, c) in v {
            let entry = total.entry(w).or_default();
            *entry += &c;
        }
    }
    total.retain(|_, c| !c.is_zero());
    match total.len() {
        0 => Some(UnivPoly::zero()),
        1 => total.remove(&start),
        _ => None,
    }
}
