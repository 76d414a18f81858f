//! Dense integer matrices, Smith normal form and lattice helpers.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Exact integer entries. Arithmetic reports overflow as `None`.
pub trait Entry: Clone + PartialEq + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_neg(&self) -> bool;
    fn add_c(&self, o: &Self) -> Option<Self>;
    fn mul_c(&self, o: &Self) -> Option<Self>;
    fn neg_c(&self) -> Option<Self>;
    fn abs_lt(&self, o: &Self) -> bool;
    fn div_floor(&self, o: &Self) -> Self;
    fn divides(&self, o: &Self) -> bool;
}

impl Entry for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
    fn add_c(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul_c(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg_c(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn abs_lt(&self, o: &Self) -> bool {
        self.unsigned_abs() < o.unsigned_abs()
    }
    fn div_floor(&self, o: &Self) -> Self {
        let q = self / o;
        if self % o != 0 && ((*self < 0) != (*o < 0)) {
            q - 1
        } else {
            q
        }
    }
    fn divides(&self, o: &Self) -> bool {
        o % self == 0
    }
}

impl Entry for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_neg(&self) -> bool {
        self.is_negative()
    }
    fn add_c(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul_c(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg_c(&self) -> Option<Self> {
        Some(-self)
    }
    fn abs_lt(&self, o: &Self) -> bool {
        self.abs() < o.abs()
    }
    fn div_floor(&self, o: &Self) -> Self {
        let q = self / o;
        if !Zero::is_zero(&(self % o)) && (self.is_negative() != o.is_negative()) {
            q - 1
        } else {
            q
        }
    }
    fn divides(&self, o: &Self) -> bool {
        Zero::is_zero(&(o % self))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

pub type Mat = Matrix<i128>;
pub type BigMat = Matrix<BigInt>;

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.data[r * self.cols + c])?;
            }
        }
        write!(f, "]")
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

fn ck<T>(x: Option<T>) -> T {
    x.expect("integer overflow in exact matrix arithmetic")
}

impl<T: Entry> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row.iter().cloned());
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_cols(n: usize, cols: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(n, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for i in 0..n {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut m = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        m[(i, j)] = ck(m[(i, j)].add_c(&ck(a.mul_c(b))));
                    }
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = T::zero();
                for (k, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        s = ck(s.add_c(&ck(self[(i, k)].mul_c(x))));
                    }
                }
                s
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn hcat(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows);
        let mut m = Self::zeros(self.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..o.cols {
                m[(i, self.cols + j)] = o[(i, j)].clone();
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[a] += k * row[b]
    fn add_row(&mut self, a: usize, b: usize, k: &T) -> Option<()> {
        if k.is_zero() {
            return Some(());
        }
        for j in 0..self.cols {
            let x = &self[(b, j)];
            if !x.is_zero() {
                let y = self[(a, j)].add_c(&k.mul_c(x)?)?;
                self[(a, j)] = y;
            }
        }
        Some(())
    }

    /// col[a] += k * col[b]
    fn add_col(&mut self, a: usize, b: usize, k: &T) -> Option<()> {
        if k.is_zero() {
            return Some(());
        }
        for i in 0..self.rows {
            let x = &self[(i, b)];
            if !x.is_zero() {
                let y = self[(i, a)].add_c(&k.mul_c(x)?)?;
                self[(i, a)] = y;
            }
        }
        Some(())
    }

    fn neg_row(&mut self, a: usize) -> Option<()> {
        for j in 0..self.cols {
            self[(a, j)] = self[(a, j)].neg_c()?;
        }
        Some(())
    }

    fn neg_col(&mut self, a: usize) -> Option<()> {
        for i in 0..self.rows {
            self[(i, a)] = self[(i, a)].neg_c()?;
        }
        Some(())
    }
}

impl Mat {
    pub fn to_big(&self) -> BigMat {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| BigInt::from(x)).collect() }
    }
}

impl BigMat {
    /// `None` when some entry does not fit in i128.
    pub fn to_small(&self) -> Option<Mat> {
        let data = self.data.iter().map(|x| x.to_i128()).collect::<Option<Vec<_>>>()?;
        Some(Matrix { rows: self.rows, cols: self.cols, data })
    }
}

/// Smith normal form: `u * m * v == d` with `d` diagonal, d_1 | d_2 | ..., all d_i >= 0,
/// and `u`, `v` unimodular. Also returns `u^{-1}` and `v^{-1}`.
#[derive(Clone)]
pub struct Smith<T = i128> {
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    pub v_inv: Matrix<T>,
    pub rank: usize,
}

impl<T: fmt::Display> fmt::Debug for Smith<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Smith").field("u", &self.u).field("d", &self.d).field("v", &self.v).field("rank", &self.rank).finish()
    }
}

impl<T: Entry> Smith<T> {
    pub fn diag(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// Smith form over i128. Falls back to big integers when elimination overflows;
/// panics only if the resulting transforms themselves exceed i128.
pub fn snf(m: &Mat) -> Smith {
    if let Some(s) = try_snf(m) {
        return s;
    }
    let b = snf_exact(&m.to_big());
    let small = |x: &BigMat| x.to_small().expect("Smith transform exceeds i128");
    Smith { u: small(&b.u), u_inv: small(&b.u_inv), d: small(&b.d), v: small(&b.v), v_inv: small(&b.v_inv), rank: b.rank }
}

/// Smith form over arbitrary-precision integers.
pub fn snf_exact(m: &BigMat) -> Smith<BigInt> {
    try_snf(m).expect("big integer arithmetic does not overflow")
}

fn try_snf<T: Entry>(m: &Matrix<T>) -> Option<Smith<T>> {
    let (r, c) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = Matrix::identity(r);
    let mut u_inv = Matrix::identity(r);
    let mut v = Matrix::identity(c);
    let mut v_inv = Matrix::identity(c);
    let one = T::one();
    let minus_one = one.neg_c()?;
    let mut t = 0;
    while t < r.min(c) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                let x = &d[(i, j)];
                if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs_lt(&d[(bi, bj)])) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        u_inv.swap_cols(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);
        v_inv.swap_rows(t, bj);
        loop {
            let mut changed = false;
            for i in t + 1..r {
                if !d[(i, t)].is_zero() {
                    let q = d[(i, t)].div_floor(&d[(t, t)]);
                    let nq = q.neg_c()?;
                    d.add_row(i, t, &nq)?;
                    u.add_row(i, t, &nq)?;
                    u_inv.add_col(t, i, &q)?;
                    if !d[(i, t)].is_zero() {
                        d.swap_rows(t, i);
                        u.swap_rows(t, i);
                        u_inv.swap_cols(t, i);
                        changed = true;
                        break;
                    }
                }
            }
            if changed {
                continue;
            }
            for j in t + 1..c {
                if !d[(t, j)].is_zero() {
                    let q = d[(t, j)].div_floor(&d[(t, t)]);
                    let nq = q.neg_c()?;
                    d.add_col(j, t, &nq)?;
                    v.add_col(j, t, &nq)?;
                    v_inv.add_row(t, j, &q)?;
                    if !d[(t, j)].is_zero() {
                        d.swap_cols(t, j);
                        v.swap_cols(t, j);
                        v_inv.swap_rows(t, j);
                        changed = true;
                        break;
                    }
                }
            }
            if changed {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let p = d[(t, t)].clone();
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !p.divides(&d[(i, j)])));
            match bad {
                Some(i) => {
                    d.add_row(t, i, &one)?;
                    u.add_row(t, i, &one)?;
                    u_inv.add_col(i, t, &minus_one)?;
                }
                None => break,
            }
        }
        if d[(t, t)].is_neg() {
            d.neg_row(t)?;
            u.neg_row(t)?;
            u_inv.neg_col(t)?;
        }
        t += 1;
    }
    Some(Smith { u, u_inv, d, v, v_inv, rank: t })
}

/// Basis (as columns) of the kernel lattice of `m`.
pub fn kernel_lattice(m: &Mat) -> Vec<Vec<i128>> {
    let s = snf(m);
    (s.rank..m.cols).map(|j| s.v.col(j)).collect()
}

/// A full-rank basis of a sublattice of Z^n, with exact membership solving.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub n: usize,
    pub basis: Vec<Vec<i128>>,
    smith: Smith,
}

impl Lattice {
    /// Lattice spanned by the given vectors of length `n`.
    pub fn span(n: usize, gens: &[Vec<i128>]) -> Lattice {
        let s = snf(&Mat::from_cols(n, gens));
        let basis: Vec<Vec<i128>> = (0..s.rank)
            .map(|i| {
                let di = s.d[(i, i)];
                s.u_inv.col(i).into_iter().map(|x| ck(x.checked_mul(di))).collect()
            })
            .collect();
        let bm = Mat::from_cols(n, &basis);
        let smith = snf(&bm);
        Lattice { n, basis, smith }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `y` in the basis, or `None` if `y` is not in the lattice.
    pub fn solve(&self, y: &[i128]) -> Option<Vec<i128>> {
        let uy = self.smith.u.mul_vec(y);
        let r = self.smith.rank;
        if uy[r..].iter().any(|&x| x != 0) {
            return None;
        }
        let mut w = vec![0i128; self.basis.len()];
        for i in 0..r {
            let di = self.smith.d[(i, i)];
            if uy[i] % di != 0 {
                return None;
            }
            w[i] = uy[i] / di;
        }
        Some(self.smith.v.mul_vec(&w))
    }

    pub fn contains(&self, y: &[i128]) -> bool {
        self.solve(y).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &Mat) {
        let s = snf(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert_eq!(s.u.mul(&s.u_inv), Mat::identity(m.rows));
        assert_eq!(s.v.mul(&s.v_inv), Mat::identity(m.cols));
        let dg = s.diag();
        for w in dg.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
    }

    #[test]
    fn snf_examples() {
        check(&Mat::from_rows(&[vec![2]]));
        check(&Mat::from_rows(&[vec![0]]));
        let m = Mat::from_rows(&[vec![2, 0], vec![0, 8]]);
        assert_eq!(snf(&m).diag(), vec![2, 8]);
        let m = Mat::from_rows(&[vec![4, 0], vec![0, 6]]);
        assert_eq!(snf(&m).diag(), vec![2, 12]);
        check(&Mat::from_rows(&[vec![3, 5, 7], vec![2, 4, 6], vec![0, 0, 1]]));
    }

    #[test]
    fn lattice_solve() {
        let l = Lattice::span(2, &[vec![2, 0], vec![0, 4], vec![2, 4]]);
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&[2, 4]));
        assert!(!l.contains(&[1, 0]));
        assert!(!l.contains(&[0, 2]));
    }
}
