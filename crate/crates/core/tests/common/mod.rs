#![allow(dead_code)]

use std::sync::Arc;

use capelli_core::capelli::{coeff_r, double_rising, rising};
use capelli_core::coeff::{int, rat};
use capelli_core::ncmatrix::{conjugate, det_k, generator_matrix, per_k, sym_det};
use capelli_core::{AlgebraKind, EnvElement, GenId, Rat, RatMatrix, Realization, UnivPoly};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Standard realizations of size `n` (those that exist).
pub fn standard(n: usize) -> Vec<Arc<Realization>> {
    let mut out = vec![Realization::gl(n).unwrap()];
    if n >= 2 {
        out.push(Realization::o_identity(n).unwrap());
        out.push(Realization::o_split(n).unwrap());
    }
    if n.is_multiple_of(2) && n >= 2 {
        out.push(Realization::sp_split(n).unwrap());
    }
    out
}

/// Standard realizations of every size up to `max_n`, plus seeded general ones.
pub fn all_realizations(max_n: usize, seed: u64) -> Vec<Arc<Realization>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(standard(n));
        if n >= 2 {
            out.extend(general(n, &mut rng));
        }
    }
    out
}

/// A general o(S) with a random nondegenerate symmetric S and, for even n, a
/// general sp(J) with a random nondegenerate alternating J. Entries are small
/// integers so structure constants stay readable.
pub fn general<R: Rng>(n: usize, rng: &mut R) -> Vec<Arc<Realization>> {
    let mut out = Vec::new();
    let small = |rng: &mut R| RatMatrix::from_fn(n, n, |_, _| int(rng.gen_range(-1i64..=1)));
    loop {
        let a = small(rng);
        let s = RatMatrix::from_fn(n, n, |i, j| &a[(i, j)] + &a[(j, i)]);
        if s.inverse().is_ok() {
            out.push(Realization::general(AlgebraKind::OGeneral, s).unwrap());
            break;
        }
    }
    if n.is_multiple_of(2) {
        let j = loop {
            let a = small(rng);
            let j = RatMatrix::from_fn(n, n, |i, j| &a[(i, j)] - &a[(j, i)]);
            if j.inverse().is_ok() {
                break j;
            }
        };
        out.push(Realization::general(AlgebraKind::SpGeneral, j).unwrap());
    }
    out
}

/// Random element with up to `terms` monomials of degree at most `deg`.
pub fn random_element<R: Rng>(alg: &Arc<Realization>, terms: usize, deg: usize, rng: &mut R) -> EnvElement {
    let dim = alg.dim() as u16;
    let mut out = Vec::new();
    for _ in 0..terms {
        let d = rng.gen_range(0..=deg);
        let mut m: Vec<GenId> = (0..d).map(|_| GenId(rng.gen_range(0..dim))).collect();
        m.sort();
        let c = rat(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=3));
        let p = if rng.gen_bool(0.25) { UnivPoly::u_plus(c) } else { UnivPoly::constant(c) };
        out.push((m, p));
    }
    EnvElement::from_terms(alg, out).unwrap()
}

/// Checks `[[a,b],c] + [[b,c],a] + [[c,a],b] = 0` for every basis triple using
/// dense coordinate vectors.
pub fn assert_jacobi(alg: &Realization) {
    let dim = alg.dim();
    let idx: Vec<GenId> = alg.basis().collect();
    let table: Vec<Vec<Vec<(usize, Rat)>>> = idx
        .iter()
        .map(|&a| idx.iter().map(|&b| alg.bracket(a, b).iter().map(|(g, c)| (g.index(), c.clone())).collect()).collect())
        .collect();
    (0..dim).into_par_iter().for_each(|a| {
        let mut acc = vec![Rat::zero(); dim];
        for b in 0..dim {
            for c in 0..dim {
                acc.iter_mut().for_each(|x| x.set_zero());
                for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                    for (g, cg) in &table[x][y] {
                        for (h, ch) in &table[*g][z] {
                            acc[*h] += cg * ch;
                        }
                    }
                }
                assert!(acc.iter().all(Zero::is_zero), "Jacobi fails over {}", alg.descriptor());
            }
        }
    });
}

/// Number of ways to pick `l` disjoint unordered pairs from `k` points, by
/// enumerating partial matchings.
pub fn count_matchings(k: usize, l: usize) -> u64 {
    fn rec(free: u32, l: usize) -> u64 {
        if l == 0 {
            return 1;
        }
        let Some(first) = (0..32).find(|&i| free & (1 << i) != 0) else { return 0 };
        let rest = free & !(1 << first);
        // Either `first` stays unpaired, or it pairs with a later point.
        let mut total = rec(rest, l);
        for j in first + 1..32 {
            if rest & (1 << j) != 0 {
                total += rec(rest & !(1 << j), l - 1);
            }
        }
        total
    }
    rec((1u32 << k) - 1, l)
}

/// `R^k_l` extended by `R^k_0 = 1` and zero for negative arguments.
pub fn r(k: i64, l: i64) -> Rat {
    if k < 0 || l < 0 {
        return if l == 0 { Rat::one() } else { Rat::zero() };
    }
    coeff_r(k as usize, l as usize)
}

fn sign(l: i64) -> Rat {
    if l % 2 == 0 { int(1) } else { int(-1) }
}

pub fn assert_r_closed_form(max_k: usize) {
    for k in 0..=max_k {
        for l in 0..=max_k / 2 + 1 {
            assert_eq!(coeff_r(k, l), int(count_matchings(k, l) as i64), "R^{k}_{l}");
        }
    }
}

pub fn assert_r_recurrence(max_k: i64) {
    for k in 0..max_k {
        for l in 1..=max_k / 2 + 1 {
            assert_eq!(r(k + 1, l), r(k, l) + r(k, l - 1) * int(k - 2 * l + 2), "R^{}_{l}", k + 1);
        }
    }
}

pub fn assert_factorial_power_expansions(max_k: usize) {
    let u = UnivPoly::u();
    for k in 0..=max_k {
        let rhs = (0..=k)
            .map(|l| double_rising(&u, k - l).scale(&(sign(l as i64) * coeff_r(k, l))))
            .fold(UnivPoly::zero(), |a, b| &a + &b);
        assert_eq!(rising(&u, k), rhs, "rising power k={k}");
        let rhs = (0..=k)
            .map(|l| rising(&u, k - l).scale(&r(k as i64 + l as i64 - 1, l as i64)))
            .fold(UnivPoly::zero(), |a, b| &a + &b);
        assert_eq!(double_rising(&u, k), rhs, "double rising power k={k}");
    }
}

pub fn assert_r_orthogonality(max_k: i64) {
    for k in 0..=max_k {
        for m in 0..=k / 2 {
            let sum: Rat = (0..=m).map(|l| sign(l) * r(k, l) * r(k - 2 * l, m - l)).sum();
            let expected = if m == 0 { Rat::one() } else { Rat::zero() };
            assert_eq!(sum, expected, "k={k} m={m}");
        }
    }
}

/// Symbolic parameters `u, u + 1/2, u - 3` truncated to length `k`.
pub fn params(k: usize) -> Vec<UnivPoly> {
    let shifts = [rat(0, 1), rat(1, 2), int(-3)];
    shifts[..k].iter().map(|c| UnivPoly::u_plus(c.clone())).collect()
}

/// `Det_k(g Z g^{-1}; a) = Det_k(Z; a)` and likewise `Per_k`, for `count`
/// random rational g per standard realization of size up to `max_n`.
pub fn assert_conjugation_invariance(seed: u64, max_n: usize, max_k: usize, count: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 1..=max_n {
        for alg in standard(n) {
            let z = generator_matrix(&alg);
            for _ in 0..count {
                let g = RatMatrix::random_invertible(n, &mut rng);
                let zg = conjugate(&z, &g).unwrap();
                for k in 1..=n.min(max_k) {
                    let a = params(k);
                    assert_eq!(det_k(&zg, k, &a).unwrap(), det_k(&z, k, &a).unwrap(), "Det_{k} over {}", alg.descriptor());
                    assert_eq!(per_k(&zg, k, &a).unwrap(), per_k(&z, k, &a).unwrap(), "Per_{k} over {}", alg.descriptor());
                }
                if n <= 3 {
                    let a = params(n);
                    assert_eq!(sym_det(&zg, &a).unwrap(), sym_det(&z, &a).unwrap(), "Det over {}", alg.descriptor());
                }
            }
        }
    }
}
