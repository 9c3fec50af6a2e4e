//! Dense arbitrary-precision integer matrices: Smith normal form with
//! unimodular transformation certificates, kernels, cokernels, and exact
//! linear system solving.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense row-major matrix over ℤ. Zero-dimensional shapes are allowed and
/// meaningful (empty presentations).
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix({}x{})", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: alloc::vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        IntMatrix { rows, cols, entries }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        IntMatrix { rows, cols, entries: entries.iter().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        IntMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * &x[c]).sum())
            .collect()
    }

    /// Vertical concatenation `[self; other]`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        Self::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.get(r, c).clone()
            } else {
                other.get(r - self.rows, c).clone()
            }
        })
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kronecker(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            self.get(r / other.rows, c / other.cols) * other.get(r % other.rows, c % other.cols)
        })
    }

    /// Determinant by fraction-free (Bareiss) elimination; panics unless square.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !m.get(r, k).is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j);
                    m.set(i, j, num / &prev);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1).clone()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row(a) -= q * row(b)
    fn row_sub(&mut self, a: usize, q: &BigInt, b: usize) {
        for c in 0..self.cols {
            let delta = q * self.get(b, c);
            let v = self.get(a, c) - delta;
            self.set(a, c, v);
        }
    }

    /// col(a) -= q * col(b)
    fn col_sub(&mut self, a: usize, q: &BigInt, b: usize) {
        for r in 0..self.rows {
            let delta = q * self.get(r, b);
            let v = self.get(r, a) - delta;
            self.set(r, a, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c).clone();
            self.set(r, c, v);
        }
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + rhs.get(r, c))
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - rhs.get(r, c))
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |r, c| -self.get(r, c).clone())
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        IntMatrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).map(|k| self.get(r, k) * rhs.get(k, c)).sum()
        })
    }
}

/// Smith normal form `u · a · v = d` with `u`, `v` unimodular and `d`
/// diagonal with nonnegative entries forming a divisibility chain.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).take_while(|&i| !self.d.get(i, i).is_zero()).count()
    }

    /// Diagonal entries ≥ 2 (the invariant factors of the cokernel).
    pub fn torsion_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d.get(i, i).clone())
            .filter(|x| !x.is_zero() && !x.is_one())
            .collect()
    }
}

/// Pivot choice: smallest nonzero absolute value, ties broken by lowest
/// (row, col). Deterministic and keeps entry growth modest.
fn find_pivot(m: &IntMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for r in from..m.rows() {
        for c in from..m.cols() {
            let x = m.get(r, c);
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            match &best {
                Some((b, _, _)) if *b <= a => {}
                _ => best = Some((a, r, c)),
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

/// Quotient rounding to nearest, so remainders satisfy |r| ≤ |b|/2.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = num_integer::Integer::div_rem(a, b);
    let two_r: BigInt = &r * 2;
    if two_r.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

#[allow(clippy::while_let_loop)] // labeled continue drives the reduction
pub fn snf(a: &IntMatrix) -> SnfResult {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let n = a.rows().min(a.cols());
    for k in 0..n {
        'pivot: loop {
            let Some((pr, pc)) = find_pivot(&d, k) else {
                break;
            };
            d.swap_rows(k, pr);
            u.swap_rows(k, pr);
            d.swap_cols(k, pc);
            v.swap_cols(k, pc);
            if d.get(k, k).is_negative() {
                d.negate_row(k);
                u.negate_row(k);
            }
            let mut dirty = false;
            for i in k + 1..d.rows() {
                if !d.get(i, k).is_zero() {
                    let q = div_round(d.get(i, k), d.get(k, k));
                    d.row_sub(i, &q, k);
                    u.row_sub(i, &q, k);
                    dirty = dirty || !d.get(i, k).is_zero();
                }
            }
            for j in k + 1..d.cols() {
                if !d.get(k, j).is_zero() {
                    let q = div_round(d.get(k, j), d.get(k, k));
                    d.col_sub(j, &q, k);
                    v.col_sub(j, &q, k);
                    dirty = dirty || !d.get(k, j).is_zero();
                }
            }
            if dirty {
                continue;
            }
            // Pivot now divides its cleared row and column. Enforce the
            // divisibility chain against the remaining submatrix.
            for i in k + 1..d.rows() {
                for j in k + 1..d.cols() {
                    if !(d.get(i, j) % d.get(k, k)).is_zero() {
                        d.row_sub(k, &(-BigInt::one()), i);
                        u.row_sub(k, &(-BigInt::one()), i);
                        continue 'pivot;
                    }
                }
            }
            break;
        }
    }
    SnfResult { d, u, v }
}

/// Isomorphism type of a finitely generated abelian group:
/// ⊕ᵢ ℤ/torsion\[i\] ⊕ ℤ^free_rank with the torsion factors a divisibility
/// chain, each ≥ 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        AbelianInvariants { torsion: Vec::new(), free_rank: 0 }
    }

    pub fn free(rank: usize) -> Self {
        AbelianInvariants { torsion: Vec::new(), free_rank: rank }
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut first = true;
        for t in &self.torsion {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "Z/{t}")?;
            first = false;
        }
        if self.free_rank > 0 {
            if !first {
                write!(f, " + ")?;
            }
            if self.free_rank == 1 {
                write!(f, "Z")?;
            } else {
                write!(f, "Z^{}", self.free_rank)?;
            }
        }
        Ok(())
    }
}

/// Cokernel of the map ℤ^cols → ℤ^rows given by `a` acting on column
/// vectors; generators are the rows. An n×0 matrix has cokernel ℤⁿ.
pub fn cokernel_abelian(a: &IntMatrix) -> AbelianInvariants {
    let s = snf(a);
    AbelianInvariants { torsion: s.torsion_factors(), free_rank: a.rows() - s.rank() }
}

/// Columns form a basis of the kernel lattice {x : a·x = 0} ⊆ ℤ^cols.
/// The basis is saturated: it spans ker(a) exactly, not a finite-index
/// sublattice.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = snf(a);
    let rank = s.rank();
    IntMatrix::from_fn(a.cols(), a.cols() - rank, |r, c| s.v.get(r, rank + c).clone())
}

#[derive(Clone, Debug)]
pub struct LinearSolution {
    /// One solution per column of `b`.
    pub particular: IntMatrix,
    /// Basis of the homogeneous solution lattice.
    pub kernel: IntMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoSolution {
    /// The violated divisibility or consistency condition, e.g. `2 ∤ 3`.
    pub witness: String,
}

impl fmt::Display for NoSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no integer solution: {}", self.witness)
    }
}

/// Exact solution set of a·x = b over ℤ, described via SNF.
pub fn solve_linear(a: &IntMatrix, b: &IntMatrix) -> Result<LinearSolution, NoSolution> {
    assert_eq!(a.rows(), b.rows(), "shape mismatch: a has {} rows, b has {}", a.rows(), b.rows());
    let s = snf(a);
    let rank = s.rank();
    let ub = &s.u * b;
    let mut y = IntMatrix::zeros(a.cols(), b.cols());
    for col in 0..b.cols() {
        for i in 0..a.rows() {
            let rhs = ub.get(i, col);
            if i < rank {
                let di = s.d.get(i, i);
                let (q, r) = num_integer::Integer::div_rem(rhs, di);
                if !r.is_zero() {
                    return Err(NoSolution { witness: format!("{di} ∤ {rhs}") });
                }
                y.set(i, col, q);
            } else if !rhs.is_zero() {
                return Err(NoSolution { witness: format!("0 ≠ {rhs}") });
            }
        }
    }
    Ok(LinearSolution { particular: &s.v * &y, kernel: kernel_basis(a) })
}

/// Coordinates of the class of `x` in coker(a) ≅ ⊕ ℤ/dᵢ ⊕ ℤ^r, in the basis
/// produced by SNF. Torsion coordinates (dᵢ ≥ 2) come first, reduced mod dᵢ,
/// then the free coordinates.
#[allow(clippy::needless_range_loop)]
pub fn class_in_cokernel(a: &IntMatrix, x: &[BigInt]) -> Vec<BigInt> {
    assert_eq!(x.len(), a.rows());
    let s = snf(a);
    let rank = s.rank();
    let y = s.u.mul_vec(x);
    let mut coords = Vec::new();
    for i in 0..rank {
        let di = s.d.get(i, i);
        if !di.is_one() {
            coords.push(num_integer::Integer::mod_floor(&y[i], di));
        }
    }
    coords.extend_from_slice(&y[rank..]);
    coords
}

/// Membership oracle for the lattice spanned by the columns of a fixed
/// matrix; one SNF up front, then each query costs a matrix-vector product.
pub struct ColumnLattice {
    u: IntMatrix,
    diag: Vec<BigInt>,
    rank: usize,
    rows: usize,
}

impl ColumnLattice {
    pub fn new(a: &IntMatrix) -> Self {
        let s = snf(a);
        let rank = s.rank();
        let diag = (0..rank).map(|i| s.d.get(i, i).clone()).collect();
        ColumnLattice { u: s.u, diag, rank, rows: a.rows() }
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        assert_eq!(x.len(), self.rows);
        let y = self.u.mul_vec(x);
        for (i, yi) in y.iter().enumerate() {
            if i < self.rank {
                if !(yi % &self.diag[i]).is_zero() {
                    return false;
                }
            } else if !yi.is_zero() {
                return false;
            }
        }
        true
    }
}
