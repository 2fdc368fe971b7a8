//! Dense matrices over the rationals: forms `S`, `J`, conjugating matrices,
//! and the defining matrices of Lie algebra generators.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rand::Rng;

use crate::coeff::{fmt_rat_str, int, parse_rat, Rat};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Matrix unit `E_ij` (0-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = Rat::one();
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Parse("ragged matrix rows".into()));
        }
        Ok(RatMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("rectangular literal")
    }

    /// Parses `"0,1;-1,0"` (rows separated by `;` or newlines, entries by `,`).
    pub fn parse_csv(s: &str) -> Result<Self> {
        let rows: Vec<Vec<Rat>> = s
            .split([';', '\n'])
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| r.split(',').map(parse_rat).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        Self::from_rows(rows)
    }

    pub fn to_csv(&self) -> String {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| fmt_rat_str(&self[(i, j)]))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Rat] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_alternating(&self) -> bool {
        self.is_square() && *self == -&self.transpose()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// Commutator `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Gauss-Jordan inverse; `Error::Singular` if not invertible.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::InvalidSize(format!("{}x{} matrix has no inverse", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero()).ok_or(Error::Singular)?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] /= &p;
                inv[(col, j)] /= &p;
            }
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    for j in 0..n {
                        let (x, y) = (&a[(col, j)] * &f, &inv[(col, j)] * &f);
                        a[(r, j)] -= x;
                        inv[(r, j)] -= y;
                    }
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Random invertible matrix with small rational entries.
    pub fn random_invertible<R: Rng>(n: usize, rng: &mut R) -> Self {
        loop {
            let m = Self::from_fn(n, n, |_, _| {
                let num = rng.gen_range(-4i64..=4);
                let den = rng.gen_range(1i64..=3);
                crate::coeff::rat(num, den)
            });
            if m.inverse().is_ok() {
                return m;
            }
        }
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(l, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMatrix[{}]", self.to_csv())
    }
}

/// Incremental row-echelon basis of a subspace of `Q^d`, with coordinates of
/// members expressed against the inserted generators.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    /// Reduced rows: (pivot column, row vector, combination of original generators).
    rows: Vec<(usize, Vec<Rat>, Vec<Rat>)>,
    generators: usize,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis { dim, rows: Vec::new(), generators: 0 }
    }

    pub fn len(&self) -> usize {
        self.generators
    }

    pub fn is_empty(&self) -> bool {
        self.generators == 0
    }

    /// Reduces `v` against the current rows, returning the residue and the
    /// (negated) combination of generators subtracted.
    fn reduce(&self, v: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
        let mut r = v.to_vec();
        let mut combo = vec![Rat::zero(); self.generators];
        for (pivot, row, row_combo) in &self.rows {
            if r[*pivot].is_zero() {
                continue;
            }
            let f = r[*pivot].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            for (c, y) in combo.iter_mut().zip(row_combo) {
                if !y.is_zero() {
                    *c += &f * y;
                }
            }
        }
        (r, combo)
    }

    /// Inserts `v` if it is independent of the current span; returns whether it was.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.dim);
        let (r, combo) = self.reduce(v);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let p = r[pivot].clone();
        // new row = (v - sum combo_g * g) / p, expressed in generators
        let mut row_combo: Vec<Rat> = combo.iter().map(|c| -c / &p).collect();
        row_combo.push(Rat::one() / &p);
        for (_, _, rc) in self.rows.iter_mut() {
            rc.push(Rat::zero());
        }
        let row: Vec<Rat> = r.iter().map(|x| x / &p).collect();
        // keep rows fully reduced on the new pivot
        for (_, other, other_combo) in self.rows.iter_mut() {
            if other[pivot].is_zero() {
                continue;
            }
            let f = other[pivot].clone();
            for (x, y) in other.iter_mut().zip(&row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            for (x, y) in other_combo.iter_mut().zip(&row_combo) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.rows.push((pivot, row, row_combo));
        self.generators += 1;
        true
    }

    /// Coordinates of `v` against the inserted generators, or `None` if `v`
    /// lies outside their span.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let (r, combo) = self.reduce(v);
        if r.iter().all(Zero::is_zero) {
            Some(combo)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    #[test]
    fn inverse_round_trip() {
        let m = RatMatrix::from_ints(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, RatMatrix::identity(3));
        assert_eq!(RatMatrix::from_ints(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn csv_round_trip() {
        let m = RatMatrix::parse_csv("0,1;-1,0").unwrap();
        assert!(m.is_alternating());
        assert_eq!(m.to_csv(), "0,1;-1,0");
        let h = RatMatrix::parse_csv("1/2, -3\n 4, 0").unwrap();
        assert_eq!(h[(0, 0)], rat(1, 2));
        assert!(RatMatrix::parse_csv("1,2;3").is_err());
    }

    #[test]
    fn echelon_coordinates() {
        let mut b = EchelonBasis::new(3);
        assert!(b.insert(&[int(1), int(1), int(0)]));
        assert!(b.insert(&[int(0), int(1), int(1)]));
        assert!(!b.insert(&[int(1), int(2), int(1)]));
        let c = b.coordinates(&[int(2), int(5), int(3)]).unwrap();
        assert_eq!(c, vec![int(2), int(3)]);
        assert!(b.coordinates(&[int(0), int(0), int(1)]).is_none());
    }
}
