//! Laurent polynomials over ℚ and 𝔽p and Smith normal form over these
//! principal ideal domains. Units are nonzero scalars times σ-powers;
//! diagonal entries are normalized to lowest degree 0 with lowest
//! coefficient 1.

use crate::arith::is_prime_u128;
use crate::laurent::{GroupRingElement, LaurentError, LaurentMatrix};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// A coefficient in ℚ (p = 0) or 𝔽p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum K {
    Q(BigRational),
    F { p: u64, v: u64 },
}

impl K {
    fn zero(p: u64) -> K {
        if p == 0 {
            K::Q(BigRational::zero())
        } else {
            K::F { p, v: 0 }
        }
    }

    fn one(p: u64) -> K {
        if p == 0 {
            K::Q(BigRational::one())
        } else {
            K::F { p, v: 1 }
        }
    }

    fn from_bigint(p: u64, n: &BigInt) -> K {
        if p == 0 {
            K::Q(BigRational::from_integer(n.clone()))
        } else {
            let m = BigInt::from(p);
            let r = num_integer::Integer::mod_floor(n, &m);
            K::F { p, v: r.to_u64().expect("reduced residue fits") }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            K::Q(q) => q.is_zero(),
            K::F { v, .. } => *v == 0,
        }
    }

    fn add(&self, o: &K) -> K {
        match (self, o) {
            (K::Q(a), K::Q(b)) => K::Q(a + b),
            (K::F { p, v: a }, K::F { p: q, v: b }) => {
                assert_eq!(p, q, "modulus mismatch");
                K::F { p: *p, v: ((*a as u128 + *b as u128) % *p as u128) as u64 }
            }
            _ => panic!("field mismatch"),
        }
    }

    fn sub(&self, o: &K) -> K {
        self.add(&o.neg())
    }

    fn neg(&self) -> K {
        match self {
            K::Q(a) => K::Q(-a),
            K::F { p, v } => K::F { p: *p, v: if *v == 0 { 0 } else { p - v } },
        }
    }

    fn mul(&self, o: &K) -> K {
        match (self, o) {
            (K::Q(a), K::Q(b)) => K::Q(a * b),
            (K::F { p, v: a }, K::F { p: q, v: b }) => {
                assert_eq!(p, q, "modulus mismatch");
                K::F { p: *p, v: ((*a as u128 * *b as u128) % *p as u128) as u64 }
            }
            _ => panic!("field mismatch"),
        }
    }

    fn inv(&self) -> K {
        match self {
            K::Q(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                K::Q(a.recip())
            }
            K::F { p, v } => {
                assert!(*v != 0, "inverse of zero");
                let mut acc: u128 = 1;
                let mut base = *v as u128;
                let mut e = *p as u128 - 2;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % *p as u128;
                    }
                    base = base * base % *p as u128;
                    e >>= 1;
                }
                K::F { p: *p, v: acc as u64 }
            }
        }
    }

    fn to_text(&self) -> String {
        match self {
            K::Q(a) => {
                if a.is_integer() {
                    alloc::format!("{}", a.numer())
                } else {
                    alloc::format!("{}/{}", a.numer(), a.denom())
                }
            }
            K::F { v, .. } => alloc::format!("{v}"),
        }
    }
}

/// Laurent polynomial over ℚ or 𝔽p: dense coefficients from degree `lo`,
/// first and last nonzero (empty = zero polynomial).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldPoly {
    p: u64,
    lo: i64,
    coeffs: Vec<K>,
}

impl FieldPoly {
    pub fn zero(p: u64) -> Self {
        FieldPoly { p, lo: 0, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        FieldPoly { p, lo: 0, coeffs: alloc::vec![K::one(p)] }
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(K::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.lo += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
        self
    }

    pub fn from_coeffs(p: u64, lo: i64, coeffs: Vec<K>) -> Self {
        FieldPoly { p, lo, coeffs }.trim()
    }

    /// Reduce a ℤ[σ,σ⁻¹] element into the field ring, optionally evaluating
    /// σ at a unit first.
    pub fn from_laurent(p: u64, f: &GroupRingElement, eval_sigma: Option<u64>) -> Self {
        match f.coefficient_run() {
            None => Self::zero(p),
            Some((lo, run)) => match eval_sigma {
                None => {
                    let coeffs = run.iter().map(|c| K::from_bigint(p, c)).collect();
                    Self::from_coeffs(p, lo, coeffs)
                }
                Some(u) => {
                    assert!(p > 0, "sigma evaluation at a residue needs a prime modulus");
                    let mut acc = K::zero(p);
                    let us = K::F { p, v: u % p };
                    // σ^lo … σ^hi; negative powers via the inverse unit
                    let ulo = if lo >= 0 {
                        pow_k(&us, lo as u64)
                    } else {
                        pow_k(&us.inv(), (-lo) as u64)
                    };
                    let mut upow = ulo;
                    for c in &run {
                        acc = acc.add(&K::from_bigint(p, c).mul(&upow));
                        upow = upow.mul(&us);
                    }
                    Self::from_coeffs(p, 0, alloc::vec![acc])
                }
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Units of K[σ,σ⁻¹] are the single-term polynomials.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Euclidean size: number of coefficient slots spanned; zero has none.
    fn span(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(o.lo);
        let hi = (self.lo + self.coeffs.len() as i64).max(o.lo + o.coeffs.len() as i64);
        let mut coeffs = alloc::vec![K::zero(self.p); (hi - lo) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + i] = c.clone();
        }
        for (i, c) in o.coeffs.iter().enumerate() {
            let idx = (o.lo - lo) as usize + i;
            coeffs[idx] = coeffs[idx].add(c);
        }
        Self::from_coeffs(self.p, lo, coeffs)
    }

    pub fn neg(&self) -> Self {
        FieldPoly {
            p: self.p,
            lo: self.lo,
            coeffs: self.coeffs.iter().map(K::neg).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let mut coeffs = alloc::vec![K::zero(self.p); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(self.p, self.lo + o.lo, coeffs)
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Self::zero(self.p);
        }
        FieldPoly {
            p: self.p,
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| c.mul(k)).collect(),
        }
    }

    /// Multiply by σ^k.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        FieldPoly { p: self.p, lo: self.lo + k, coeffs: self.coeffs.clone() }
    }

    /// Quotient and remainder with span(r) < span(self divisor). The
    /// divisor must be nonzero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.span() < d.span() {
            return (Self::zero(self.p), self.clone());
        }
        let lead_inv = d.coeffs.last().unwrap().inv();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - d.coeffs.len() + 1;
        let mut q = alloc::vec![K::zero(self.p); qlen];
        for i in (0..qlen).rev() {
            let lead = rem[i + d.coeffs.len() - 1].clone();
            if lead.is_zero() {
                continue;
            }
            let factor = lead.mul(&lead_inv);
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub(&factor.mul(dc));
            }
            q[i] = factor;
        }
        let quot = Self::from_coeffs(self.p, self.lo - d.lo, q);
        let remainder = Self::from_coeffs(self.p, self.lo, rem);
        (quot, remainder)
    }

    /// Canonical associate: lowest degree 0, lowest coefficient 1.
    /// Returns (canonical, unit u) with self = u · canonical.
    pub fn normalize(&self) -> (Self, Self) {
        if self.is_zero() {
            return (self.clone(), Self::one(self.p));
        }
        let c = self.coeffs[0].clone();
        let unit = FieldPoly { p: self.p, lo: self.lo, coeffs: alloc::vec![c.clone()] };
        let inv = c.inv();
        let canon = FieldPoly {
            p: self.p,
            lo: 0,
            coeffs: self.coeffs.iter().map(|x| x.mul(&inv)).collect(),
        };
        (canon, unit)
    }

    pub fn to_text(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                s.push_str(" + ");
            }
            let _ = write!(s, "{}*s^{}", c.to_text(), self.lo + i as i64);
            first = false;
        }
        s
    }
}

fn pow_k(base: &K, mut e: u64) -> K {
    let p = match base {
        K::Q(_) => 0,
        K::F { p, .. } => *p,
    };
    let mut acc = K::one(p);
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b);
        }
        b = b.mul(&b);
        e >>= 1;
    }
    acc
}

impl fmt::Display for FieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Matrix over ℚ[σ,σ⁻¹] (modulus 0) or 𝔽p[σ,σ⁻¹].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldLaurentMatrix {
    modulus: u64,
    rows: usize,
    cols: usize,
    entries: Vec<FieldPoly>,
}

impl FieldLaurentMatrix {
    pub fn zeros(modulus: u64, rows: usize, cols: usize) -> Self {
        FieldLaurentMatrix {
            modulus,
            rows,
            cols,
            entries: alloc::vec![FieldPoly::zero(modulus); rows * cols],
        }
    }

    pub fn identity(modulus: u64, n: usize) -> Self {
        let mut m = Self::zeros(modulus, n, n);
        for i in 0..n {
            m.set(i, i, FieldPoly::one(modulus));
        }
        m
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldPoly) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows);
        let mut out = Self::zeros(self.modulus, self.rows, o.cols);
        for r in 0..self.rows {
            for c in 0..o.cols {
                let mut acc = FieldPoly::zero(self.modulus);
                for k in 0..self.cols {
                    acc = acc.add(&self.get(r, k).mul(o.get(k, c)));
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn det(&self) -> FieldPoly {
        assert_eq!(self.rows, self.cols);
        if self.rows == 0 {
            return FieldPoly::one(self.modulus);
        }
        if self.rows == 1 {
            return self.get(0, 0).clone();
        }
        // cofactor expansion along the first row; fine at desk scale
        let mut acc = FieldPoly::zero(self.modulus);
        for c in 0..self.cols {
            let e = self.get(0, c);
            if e.is_zero() {
                continue;
            }
            let minor = FieldLaurentMatrix::from_fn(self.modulus, self.rows - 1, self.cols - 1, |r, cc| {
                self.get(r + 1, if cc < c { cc } else { cc + 1 }).clone()
            });
            let term = e.mul(&minor.det());
            acc = if c % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    pub fn from_fn(
        modulus: u64,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldPoly,
    ) -> Self {
        let mut m = Self::zeros(modulus, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
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

    fn row_sub(&mut self, a: usize, q: &FieldPoly, b: usize) {
        for c in 0..self.cols {
            let delta = q.mul(self.get(b, c));
            let v = self.get(a, c).sub(&delta);
            self.set(a, c, v);
        }
    }

    fn col_sub(&mut self, a: usize, q: &FieldPoly, b: usize) {
        for r in 0..self.rows {
            let delta = q.mul(self.get(r, b));
            let v = self.get(r, a).sub(&delta);
            self.set(r, a, v);
        }
    }

    fn scale_row(&mut self, r: usize, k: &FieldPoly) {
        for c in 0..self.cols {
            let v = self.get(r, c).mul(k);
            self.set(r, c, v);
        }
    }
}

/// Reduce a ℤ[σ,σ⁻¹] matrix mod p (σ kept). Errors when p is not prime.
pub fn specialize_mod_p(m: &LaurentMatrix, p: u64) -> Result<FieldLaurentMatrix, LaurentError> {
    if !m.group().is_infinite_cyclic() {
        return Err(LaurentError::GroupNotCyclic);
    }
    if !is_prime_u128(p as u128) {
        return Err(LaurentError::NotPrime(p));
    }
    Ok(FieldLaurentMatrix::from_fn(p, m.rows(), m.cols(), |r, c| {
        FieldPoly::from_laurent(p, m.get(r, c), None)
    }))
}

/// Reduce mod p and evaluate σ ↦ u ∈ (ℤ/p)ˣ; entries become constants.
pub fn specialize_mod_p_at(
    m: &LaurentMatrix,
    p: u64,
    u: u64,
) -> Result<FieldLaurentMatrix, LaurentError> {
    if !m.group().is_infinite_cyclic() {
        return Err(LaurentError::GroupNotCyclic);
    }
    if !is_prime_u128(p as u128) {
        return Err(LaurentError::NotPrime(p));
    }
    if u.is_multiple_of(p) {
        return Err(LaurentError::NotAUnitModP { p, u });
    }
    Ok(FieldLaurentMatrix::from_fn(p, m.rows(), m.cols(), |r, c| {
        FieldPoly::from_laurent(p, m.get(r, c), Some(u))
    }))
}

/// Lift a ℤ[σ,σ⁻¹] matrix into ℚ[σ,σ⁻¹].
pub fn into_rational(m: &LaurentMatrix) -> Result<FieldLaurentMatrix, LaurentError> {
    if !m.group().is_infinite_cyclic() {
        return Err(LaurentError::GroupNotCyclic);
    }
    Ok(FieldLaurentMatrix::from_fn(0, m.rows(), m.cols(), |r, c| {
        FieldPoly::from_laurent(0, m.get(r, c), None)
    }))
}

/// SNF over the PID K[σ,σ⁻¹]: u·m·v = d, u and v invertible, d diagonal
/// with a divisibility chain, entries canonical (lowest degree 0, lowest
/// coefficient 1).
#[derive(Clone, Debug)]
pub struct FieldSnfResult {
    pub d: FieldLaurentMatrix,
    pub u: FieldLaurentMatrix,
    pub v: FieldLaurentMatrix,
}

impl FieldSnfResult {
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).take_while(|&i| !self.d.get(i, i).is_zero()).count()
    }

    /// Non-unit diagonal entries.
    pub fn torsion_factors(&self) -> Vec<FieldPoly> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d.get(i, i).clone())
            .filter(|f| !f.is_zero() && !f.is_unit())
            .collect()
    }
}

fn find_pivot(m: &FieldLaurentMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for r in from..m.rows() {
        for c in from..m.cols() {
            let e = m.get(r, c);
            if e.is_zero() {
                continue;
            }
            let s = e.span();
            match best {
                Some((bs, _, _)) if bs <= s => {}
                _ => best = Some((s, r, c)),
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

#[allow(clippy::while_let_loop)] // labeled continue drives the reduction
pub fn snf_over_pid(m: &FieldLaurentMatrix) -> FieldSnfResult {
    let p = m.modulus();
    let mut d = m.clone();
    let mut u = FieldLaurentMatrix::identity(p, m.rows());
    let mut v = FieldLaurentMatrix::identity(p, m.cols());
    let n = m.rows().min(m.cols());
    for k in 0..n {
        'pivot: loop {
            let Some((pr, pc)) = find_pivot(&d, k) else {
                break;
            };
            d.swap_rows(k, pr);
            u.swap_rows(k, pr);
            d.swap_cols(k, pc);
            v.swap_cols(k, pc);
            let mut dirty = false;
            for i in k + 1..d.rows() {
                if !d.get(i, k).is_zero() {
                    let (q, r) = d.get(i, k).div_rem(d.get(k, k));
                    d.row_sub(i, &q, k);
                    u.row_sub(i, &q, k);
                    dirty = dirty || !r.is_zero();
                }
            }
            for j in k + 1..d.cols() {
                if !d.get(k, j).is_zero() {
                    let (q, r) = d.get(k, j).div_rem(d.get(k, k));
                    d.col_sub(j, &q, k);
                    v.col_sub(j, &q, k);
                    dirty = dirty || !r.is_zero();
                }
            }
            if dirty {
                continue;
            }
            for i in k + 1..d.rows() {
                for j in k + 1..d.cols() {
                    let (_, r) = d.get(i, j).div_rem(d.get(k, k));
                    if !r.is_zero() {
                        let minus_one = FieldPoly::one(p).neg();
                        d.row_sub(k, &minus_one, i);
                        u.row_sub(k, &minus_one, i);
                        continue 'pivot;
                    }
                }
            }
            break;
        }
        if !d.get(k, k).is_zero() {
            let (canon, unit) = d.get(k, k).normalize();
            let unit_inv = {
                let (c0, _) = unit.normalize();
                debug_assert!(c0.is_unit() || c0.is_zero());
                // unit = c·σ^k, inverse = c⁻¹·σ^−k
                let c = unit.coeffs[0].inv();
                FieldPoly { p, lo: -unit.lo, coeffs: alloc::vec![c] }
            };
            d.set(k, k, canon);
            u.scale_row(k, &unit_inv);
        }
    }
    FieldSnfResult { d, u, v }
}

/// Rank over the fraction field; injectivity of the presented map is
/// rank = cols.
pub fn rank_over_pid(m: &FieldLaurentMatrix) -> usize {
    snf_over_pid(m).rank()
}
