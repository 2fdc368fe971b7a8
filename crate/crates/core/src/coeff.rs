//! Exact coefficients: arbitrary-precision rationals and sparse univariate
//! polynomials in the formal parameter `u`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rat = BigRational;

/// Builds the rational `num / den`.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer rational `n`.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"3"`, `"-1/2"` or `"  7/4 "` into a rational.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rat {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rat::from_integer(acc)
}

/// Renders `r` as `n` or `n/d`.
pub fn fmt_rat_str(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_rat(r: &Rat, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    f.write_str(&fmt_rat_str(r))
}

/// Sparse polynomial in `u` with rational coefficients.
///
/// Terms are stored by ascending exponent with no zero coefficients, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UnivPoly {
    terms: Vec<(u32, Rat)>,
}

impl UnivPoly {
    pub fn zero() -> Self {
        UnivPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// The formal parameter `u`.
    pub fn u() -> Self {
        Self::monomial(1, Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }

    /// `c * u^exp`.
    pub fn monomial(exp: u32, c: Rat) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            UnivPoly { terms: vec![(exp, c)] }
        }
    }

    /// `u + c`.
    pub fn u_plus(c: Rat) -> Self {
        Self::u() + Self::constant(c)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs in any order,
    /// merging repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (u32, Rat)>>(terms: I) -> Self {
        let mut v: Vec<(u32, Rat)> = terms.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(u32, Rat)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        UnivPoly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|t| t.0)
    }

    /// Returns the constant value if the polynomial has degree <= 0.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.as_slice() {
            [] => Some(Rat::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coeff(&self, exp: u32) -> Rat {
        self.terms
            .binary_search_by_key(&exp, |t| t.0)
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rat::zero())
    }

    /// `(exponent, coefficient)` pairs by ascending exponent.
    pub fn terms(&self) -> &[(u32, Rat)] {
        &self.terms
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UnivPoly {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        let mut prev = match self.terms.last() {
            Some(t) => t.0,
            None => return acc,
        };
        for (e, c) in self.terms.iter().rev() {
            for _ in *e..prev {
                acc *= x;
            }
            acc += c;
            prev = *e;
        }
        for _ in 0..prev {
            acc *= x;
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `u := q`.
    pub fn compose(&self, q: &UnivPoly) -> Self {
        let mut acc = Self::zero();
        let mut prev = match self.terms.last() {
            Some(t) => t.0,
            None => return acc,
        };
        for (e, c) in self.terms.iter().rev() {
            for _ in *e..prev {
                acc = &acc * q;
            }
            acc += &UnivPoly::constant(c.clone());
            prev = *e;
        }
        for _ in 0..prev {
            acc = &acc * q;
        }
        acc
    }
}

impl From<Rat> for UnivPoly {
    fn from(c: Rat) -> Self {
        UnivPoly::constant(c)
    }
}

fn merge(p: &UnivPoly, q: &UnivPoly, negate_q: bool) -> UnivPoly {
    let (a, b) = (&p.terms, &q.terms);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let sign = |c: &Rat| if negate_q { -c } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0, sign(&b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_q { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(e, c)| (*e, sign(c))));
    UnivPoly { terms: out }
}

impl Add for &UnivPoly {
    type Output = UnivPoly;
    fn add(self, rhs: &UnivPoly) -> UnivPoly {
        merge(self, rhs, false)
    }
}

impl Sub for &UnivPoly {
    type Output = UnivPoly;
    fn sub(self, rhs: &UnivPoly) -> UnivPoly {
        merge(self, rhs, true)
    }
}

impl Mul for &UnivPoly {
    type Output = UnivPoly;
    fn mul(self, rhs: &UnivPoly) -> UnivPoly {
        if self.is_zero() || rhs.is_zero() {
            return UnivPoly::zero();
        }
        if rhs.terms.len() == 1 && rhs.terms[0].0 == 0 {
            return self.scale(&rhs.terms[0].1);
        }
        if self.terms.len() == 1 && self.terms[0].0 == 0 {
            return rhs.scale(&self.terms[0].1);
        }
        let deg = self.degree().unwrap() + rhs.degree().unwrap();
        let mut dense: Vec<Rat> = vec![Rat::zero(); deg as usize + 1];
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                dense[(e1 + e2) as usize] += c1 * c2;
            }
        }
        UnivPoly {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as u32, c))
                .collect(),
        }
    }
}

impl Neg for &UnivPoly {
    type Output = UnivPoly;
    fn neg(self) -> UnivPoly {
        UnivPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UnivPoly {
            type Output = UnivPoly;
            fn $m(self, rhs: UnivPoly) -> UnivPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&UnivPoly> for UnivPoly {
            type Output = UnivPoly;
            fn $m(self, rhs: &UnivPoly) -> UnivPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UnivPoly {
    type Output = UnivPoly;
    fn neg(self) -> UnivPoly {
        -&self
    }
}

impl AddAssign<&UnivPoly> for UnivPoly {
    fn add_assign(&mut self, rhs: &UnivPoly) {
        *self = merge(self, rhs, false);
    }
}

impl SubAssign<&UnivPoly> for UnivPoly {
    fn sub_assign(&mut self, rhs: &UnivPoly) {
        *self = merge(self, rhs, true);
    }
}

impl fmt::Display for UnivPoly {
    /// Descending exponents, e.g. `u^2 + 3/2*u - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            match (*e, abs.is_one()) {
                (0, _) => fmt_rat(&abs, f)?,
                (_, true) => {}
                (_, false) => {
                    fmt_rat(&abs, f)?;
                    write!(f, "*")?;
                }
            }
            match *e {
                0 => {}
                1 => write!(f, "u")?,
                _ => write!(f, "u^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UnivPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnivPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn p(terms: &[(u32, i64)]) -> UnivPoly {
        UnivPoly::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn add_examples() {
        assert_eq!(p(&[(1, 1), (0, 1)]) + p(&[(1, 1), (0, -1)]), p(&[(1, 2)]));
        let q = p(&[(3, 4), (0, -2)]);
        assert_eq!(UnivPoly::zero() + &q, q);
        assert!((p(&[(2, 1)]) + p(&[(2, -1)])).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(&[(1, 1), (0, 1)]) * p(&[(1, 1)]), p(&[(2, 1), (1, 1)]));
        let q = p(&[(5, 3), (1, -7)]);
        assert_eq!(UnivPoly::one() * &q, q);
        assert_eq!(p(&[(1, 1), (0, 2)]) * UnivPoly::u(), p(&[(2, 1), (1, 2)]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[(2, 1), (1, 1)]).eval(&int(2)), int(6));
        assert_eq!(UnivPoly::constant(rat(-3, 7)).eval(&rat(11, 5)), rat(-3, 7));
        assert_eq!(p(&[(1, 2)]).eval(&rat(1, 2)), int(1));
        assert_eq!(p(&[(3, 1)]).eval(&int(-2)), int(-8));
        assert_eq!(UnivPoly::zero().eval(&int(5)), int(0));
    }

    #[test]
    fn display_format() {
        let q = UnivPoly::from_terms([(2, int(1)), (1, rat(3, 2)), (0, int(-1))]);
        assert_eq!(q.to_string(), "u^2 + 3/2*u - 1");
        assert_eq!(UnivPoly::zero().to_string(), "0");
        assert_eq!(p(&[(1, -1)]).to_string(), "-u");
        assert_eq!(UnivPoly::constant(rat(-1, 2)).to_string(), "-1/2");
        assert_eq!(p(&[(3, -2), (0, 5)]).to_string(), "-2*u^3 + 5");
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rat(" -6/4 ").unwrap(), rat(-3, 2));
        assert_eq!(parse_rat("12").unwrap(), int(12));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-1_000_000i64..=1_000_000, 1i64..=1_000_000).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_poly() -> impl Strategy<Value = UnivPoly> {
        prop::collection::vec((0u32..=8, arb_rat()), 0..6).prop_map(UnivPoly::from_terms)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn compose_then_eval(a in arb_poly(), b in arb_poly(), x in arb_rat()) {
            prop_assert_eq!(a.compose(&b).eval(&x), a.eval(&b.eval(&x)));
        }

        #[test]
        fn eval_is_homomorphism(a in arb_poly(), b in arb_poly(), x in arb_rat()) {
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }

        #[test]
        fn rationals_stay_canonical(a in arb_rat(), b in arb_rat()) {
            for r in [&a * &b, &a + &b, &a - &b] {
                prop_assert!(r.denom().is_positive());
                prop_assert!(r.numer().gcd(r.denom()).is_one());
                if r.is_zero() {
                    prop_assert!(r.denom().is_one());
                }
            }
        }
    }
}
