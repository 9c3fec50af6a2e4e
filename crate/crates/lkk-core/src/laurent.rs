//! Exact arithmetic in group rings ℤ[G] for finitely generated abelian G,
//! with the Laurent polynomial ring ℤ[σ,σ⁻¹] (G = ℤ) as the main case, and
//! dense matrices over these rings.
//!
//! Laurent-specific analysis (gcds, minors, resultants) is only available
//! for G = ℤ, where the ring is a UFD with units ±σᵏ.

use crate::arith::gcd_bigint;
use crate::group::{Group, GroupElement};
use crate::int_mat::IntMatrix;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An element of ℤ[G]: a finite formal sum of group elements with nonzero
/// integer coefficients. For G = ℤ this is a Laurent polynomial in σ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElement {
    group: Group,
    terms: BTreeMap<GroupElement, BigInt>,
}

impl GroupRingElement {
    pub fn zero(group: Group) -> Self {
        GroupRingElement { group, terms: BTreeMap::new() }
    }

    pub fn one(group: Group) -> Self {
        let id = group.identity();
        Self::monomial(group, id)
    }

    pub fn monomial(group: Group, g: GroupElement) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(g, BigInt::one());
        GroupRingElement { group, terms }
    }

    pub fn constant(group: Group, c: BigInt) -> Self {
        let mut el = Self::zero(group);
        if !c.is_zero() {
            let id = el.group.identity();
            el.terms.insert(id, c);
        }
        el
    }

    /// c·σᵏ in ℤ[σ,σ⁻¹].
    pub fn sigma_term(c: i64, k: i64) -> Self {
        let group = Group::infinite_cyclic();
        let mut el = Self::zero(group);
        if c != 0 {
            let g = el.group.element(alloc::vec![k]).expect("rank-1 element");
            el.terms.insert(g, BigInt::from(c));
        }
        el
    }

    /// Laurent polynomial Σ cᵢσ^(k₀+i) from a dense coefficient run.
    pub fn sigma_poly(lowest: i64, coeffs: &[i64]) -> Self {
        let mut el = Self::zero(Group::infinite_cyclic());
        for (i, &c) in coeffs.iter().enumerate() {
            el = &el + &Self::sigma_term(c, lowest + i as i64);
        }
        el
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(g, c)| g.is_identity() && c.is_one())
    }

    /// Single term with coefficient ±1; for G = ℤ these are exactly the
    /// units of the group ring.
    pub fn is_monomial_unit(&self) -> bool {
        self.terms.len() == 1
            && self.terms.values().next().is_some_and(|c| c.abs().is_one())
    }

    pub fn coefficient(&self, g: &GroupElement) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_else(BigInt::zero)
    }

    fn insert(&mut self, g: GroupElement, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Multiply by the group element `g` (a degree shift for G = ℤ).
    pub fn sigma_shift(&self, g: &GroupElement) -> Self {
        let mut out = Self::zero(self.group.clone());
        for (h, c) in &self.terms {
            out.insert(self.group.add(h, g), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.group.clone());
        if c.is_zero() {
            return out;
        }
        for (g, a) in &self.terms {
            out.insert(g.clone(), a * c);
        }
        out
    }

    /// gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = gcd_bigint(&g, c);
        }
        g
    }

    // ---- G = ℤ helpers -------------------------------------------------

    fn assert_laurent(&self) {
        assert!(self.group.is_infinite_cyclic(), "operation needs the group to be Z");
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.assert_laurent();
        self.terms.keys().filter_map(|g| g.as_sigma_power()).min()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.assert_laurent();
        self.terms.keys().filter_map(|g| g.as_sigma_power()).max()
    }

    pub fn sigma_coefficient(&self, k: i64) -> BigInt {
        self.assert_laurent();
        let g = self.group.element(alloc::vec![k]).expect("rank-1 element");
        self.coefficient(&g)
    }

    /// Dense coefficient run (lowest degree, coefficients); `None` for 0.
    pub fn coefficient_run(&self) -> Option<(i64, Vec<BigInt>)> {
        let lo = self.min_degree()?;
        let hi = self.max_degree()?;
        let coeffs = (lo..=hi).map(|k| self.sigma_coefficient(k)).collect();
        Some((lo, coeffs))
    }

    /// Substitute σ ↦ u for u ∈ {+1, −1}.
    pub fn evaluate_at_unit(&self, u: i64) -> Result<BigInt, LaurentError> {
        if !self.group.is_infinite_cyclic() {
            return Err(LaurentError::GroupNotCyclic);
        }
        if u != 1 && u != -1 {
            return Err(LaurentError::BadUnit(u));
        }
        let mut acc = BigInt::zero();
        for (g, c) in &self.terms {
            let k = g.as_sigma_power().expect("cyclic group element");
            if u == 1 || k % 2 == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        Ok(acc)
    }

    /// Canonical form up to units ±σᵏ: lowest exponent shifted to 0 and the
    /// coefficient at degree 0 made positive. Returns the canonical element
    /// together with the shift k and sign that were removed, so that
    /// self = sign · σᵏ · canonical. Zero stays zero with (0, +).
    pub fn normalize_unit(&self) -> (Self, i64, bool) {
        self.assert_laurent();
        let Some(lo) = self.min_degree() else {
            return (self.clone(), 0, false);
        };
        let shift = self.group.element(alloc::vec![-lo]).expect("rank-1 element");
        let mut out = self.sigma_shift(&shift);
        let negated = out.sigma_coefficient(0).is_negative();
        if negated {
            out = -&out;
        }
        (out, lo, negated)
    }

    /// Textual form `c0*s^k0 + c1*s^k1 + ...`, exponents strictly increasing.
    pub fn to_text(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let cyclic = self.group.is_infinite_cyclic();
        let mut s = String::new();
        let mut first = true;
        for (g, c) in &self.terms {
            if !first {
                s.push_str(" + ");
            }
            if cyclic {
                let k = g.as_sigma_power().expect("rank-1 element");
                let _ = write!(s, "{c}*s^{k}");
            } else {
                let _ = write!(s, "{c}*g^{}", g.label());
            }
            first = false;
        }
        s
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        assert_eq!(self.group, rhs.group, "group mismatch");
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.insert(g.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        self + &(-rhs)
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        let mut out = GroupRingElement::zero(self.group.clone());
        for (g, c) in &self.terms {
            out.terms.insert(g.clone(), -c);
        }
        out
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        assert_eq!(self.group, rhs.group, "group mismatch");
        let mut out = GroupRingElement::zero(self.group.clone());
        for (g, c) in &self.terms {
            for (h, d) in &rhs.terms {
                out.insert(self.group.add(g, h), c * d);
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LaurentError {
    GroupNotCyclic,
    BadUnit(i64),
    NotPrime(u64),
    NotAUnitModP { p: u64, u: u64 },
}

impl fmt::Display for LaurentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LaurentError::GroupNotCyclic => write!(f, "operation requires the weight group Z"),
            LaurentError::BadUnit(u) => write!(f, "{u} is not a unit of Z (need +1 or -1)"),
            LaurentError::NotPrime(p) => write!(f, "{p} is not prime"),
            LaurentError::NotAUnitModP { p, u } => write!(f, "{u} is not a unit mod {p}"),
        }
    }
}

/// Dense matrix over ℤ[G], all entries sharing one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    group: Group,
    rows: usize,
    cols: usize,
    entries: Vec<GroupRingElement>,
}

impl LaurentMatrix {
    pub fn zeros(group: Group, rows: usize, cols: usize) -> Self {
        let entries = alloc::vec![GroupRingElement::zero(group.clone()); rows * cols];
        LaurentMatrix { group, rows, cols, entries }
    }

    pub fn identity(group: Group, n: usize) -> Self {
        let mut m = Self::zeros(group.clone(), n, n);
        for i in 0..n {
            m.set(i, i, GroupRingElement::one(group.clone()));
        }
        m
    }

    pub fn from_entries(group: Group, rows: usize, cols: usize, entries: Vec<GroupRingElement>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        for e in &entries {
            assert_eq!(e.group(), &group, "group mismatch");
        }
        LaurentMatrix { group, rows, cols, entries }
    }

    /// Lift an integer matrix to constants in ℤ[G].
    pub fn from_int(group: Group, m: &IntMatrix) -> Self {
        Self::from_fn(group.clone(), m.rows(), m.cols(), |r, c| {
            GroupRingElement::constant(group.clone(), m.get(r, c).clone())
        })
    }

    pub fn from_fn(
        group: Group,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> GroupRingElement,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self::from_entries(group, rows, cols, entries)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GroupRingElement {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GroupRingElement) {
        assert_eq!(v.group(), &self.group, "group mismatch");
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.group.clone(), self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.group, other.group);
        Self::from_fn(self.group.clone(), self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn kronecker(&self, other: &Self) -> Self {
        assert_eq!(self.group, other.group);
        Self::from_fn(
            self.group.clone(),
            self.rows * other.rows,
            self.cols * other.cols,
            |r, c| {
                self.get(r / other.rows, c / other.cols) * other.get(r % other.rows, c % other.cols)
            },
        )
    }

    /// Entrywise σ ↦ u ∈ {±1}: the ring map ℤ[σ,σ⁻¹] → ℤ.
    pub fn evaluate_at_unit(&self, u: i64) -> Result<IntMatrix, LaurentError> {
        let mut out = IntMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).evaluate_at_unit(u)?);
            }
        }
        Ok(out)
    }

    /// Degree span of all entries; `(0, 0)` for a zero matrix.
    pub fn degree_range(&self) -> (i64, i64) {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for e in &self.entries {
            if let (Some(a), Some(b)) = (e.min_degree(), e.max_degree()) {
                lo = lo.min(a);
                hi = hi.max(b);
            }
        }
        if lo > hi {
            (0, 0)
        } else {
            (lo, hi)
        }
    }
}

impl Add for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn add(self, rhs: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        LaurentMatrix::from_fn(self.group.clone(), self.rows, self.cols, |r, c| {
            self.get(r, c) + rhs.get(r, c)
        })
    }
}

impl Sub for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn sub(self, rhs: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        LaurentMatrix::from_fn(self.group.clone(), self.rows, self.cols, |r, c| {
            self.get(r, c) - rhs.get(r, c)
        })
    }
}

impl Mul for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn mul(self, rhs: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        assert_eq!(self.group, rhs.group);
        LaurentMatrix::from_fn(self.group.clone(), self.rows, rhs.cols, |r, c| {
            let mut acc = GroupRingElement::zero(self.group.clone());
            for k in 0..self.cols {
                acc = &acc + &(self.get(r, k) * rhs.get(k, c));
            }
            acc
        })
    }
}

// ---- ℤ[σ,σ⁻¹] divisor arithmetic ---------------------------------------

/// Exact division in ℤ[σ,σ⁻¹]; `None` when `b` does not divide `a`.
pub fn exact_div(a: &GroupRingElement, b: &GroupRingElement) -> Option<GroupRingElement> {
    a.assert_laurent();
    assert!(!b.is_zero(), "division by zero");
    if a.is_zero() {
        return Some(GroupRingElement::zero(a.group().clone()));
    }
    let (lo_a, mut num) = a.coefficient_run().expect("nonzero");
    let (lo_b, den) = b.coefficient_run().expect("nonzero");
    if num.len() < den.len() {
        return None;
    }
    let qlen = num.len() - den.len() + 1;
    let mut q = alloc::vec![BigInt::zero(); qlen];
    // long division from the top; exactness forces each leading division
    for i in (0..qlen).rev() {
        let lead = num[i + den.len() - 1].clone();
        if lead.is_zero() {
            continue;
        }
        let (quo, rem) = num_integer::Integer::div_rem(&lead, den.last().unwrap());
        if !rem.is_zero() {
            return None;
        }
        for (j, d) in den.iter().enumerate() {
            num[i + j] -= &quo * d;
        }
        q[i] = quo;
    }
    if num.iter().any(|c| !c.is_zero()) {
        return None;
    }
    let mut out = GroupRingElement::zero(a.group().clone());
    for (i, c) in q.into_iter().enumerate() {
        if !c.is_zero() {
            let g = a.group().element(alloc::vec![lo_a - lo_b + i as i64]).unwrap();
            out.insert(g, c);
        }
    }
    Some(out)
}

/// gcd in ℤ[σ,σ⁻¹], canonical (lowest degree 0, positive lowest coefficient).
/// gcd(0, 0) = 0.
pub fn laurent_gcd(a: &GroupRingElement, b: &GroupRingElement) -> GroupRingElement {
    if a.is_zero() {
        return b.normalize_unit().0;
    }
    if b.is_zero() {
        return a.normalize_unit().0;
    }
    let content = gcd_bigint(&a.content(), &b.content());
    let pp = primitive_poly_gcd(a, b);
    pp.scale(&content).normalize_unit().0
}

/// gcd of the primitive parts, via the subresultant-free route: Euclid over ℚ
/// with content cleanup at every step.
fn primitive_poly_gcd(a: &GroupRingElement, b: &GroupRingElement) -> GroupRingElement {
    let prim = |x: &GroupRingElement| {
        let c = x.content();
        let (canon, _, _) = x.normalize_unit();
        exact_div(&canon, &GroupRingElement::constant(canon.group().clone(), c))
            .expect("content divides")
    };
    let mut f = prim(a);
    let mut g = prim(b);
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g);
        f = g;
        g = if r.is_zero() { r } else { prim(&r) };
    }
    f.normalize_unit().0
}

/// Pseudo-remainder: lc(g)^k · f mod g over ℤ[σ], both shifted to degree ≥ 0.
fn pseudo_rem(f: &GroupRingElement, g: &GroupRingElement) -> GroupRingElement {
    let (_, mut num) = f.normalize_unit().0.coefficient_run().expect("nonzero");
    let (_, den) = g.normalize_unit().0.coefficient_run().expect("nonzero");
    if num.len() < den.len() {
        return f.normalize_unit().0;
    }
    let lc = den.last().unwrap().clone();
    for i in (0..num.len() - den.len() + 1).rev() {
        let lead = num[i + den.len() - 1].clone();
        if lead.is_zero() {
            continue;
        }
        // scale the whole remainder so the division is integral
        for c in num.iter_mut() {
            *c *= &lc;
        }
        for (j, d) in den.iter().enumerate() {
            num[i + j] -= &lead * d;
        }
    }
    let mut out = GroupRingElement::zero(f.group().clone());
    for (i, c) in num.into_iter().enumerate().take(den.len() - 1) {
        if !c.is_zero() {
            let g = f.group().element(alloc::vec![i as i64]).unwrap();
            out.insert(g, c);
        }
    }
    out
}

/// Resultant of the polynomial parts of two Laurent polynomials (each
/// normalized to lowest degree 0), via the Sylvester determinant. Nonzero
/// iff the pair is coprime over ℚ[σ]; the value then lies in the ideal they
/// generate in ℤ[σ].
pub fn resultant(a: &GroupRingElement, b: &GroupRingElement) -> BigInt {
    let (_, pa) = a.normalize_unit().0.coefficient_run().unwrap_or((0, alloc::vec![]));
    let (_, pb) = b.normalize_unit().0.coefficient_run().unwrap_or((0, alloc::vec![]));
    if pa.is_empty() || pb.is_empty() {
        return BigInt::zero();
    }
    let m = pa.len() - 1;
    let n = pb.len() - 1;
    if m == 0 {
        return num_traits::Pow::pow(pa[0].clone(), n as u32);
    }
    if n == 0 {
        return num_traits::Pow::pow(pb[0].clone(), m as u32);
    }
    let size = m + n;
    let mut syl = IntMatrix::zeros(size, size);
    for r in 0..n {
        for (j, c) in pa.iter().enumerate() {
            syl.set(r, r + (m - j), c.clone());
        }
    }
    for r in 0..m {
        for (j, c) in pb.iter().enumerate() {
            syl.set(n + r, r + (n - j), c.clone());
        }
    }
    syl.det()
}

/// Determinant over ℤ[σ,σ⁻¹] by fraction-free elimination (divisions are
/// exact over an integral domain).
pub fn det_laurent(m: &LaurentMatrix) -> GroupRingElement {
    assert_eq!(m.rows(), m.cols(), "determinant needs a square matrix");
    let n = m.rows();
    let group = m.group().clone();
    if n == 0 {
        return GroupRingElement::one(group);
    }
    let mut a: Vec<Vec<GroupRingElement>> =
        (0..n).map(|r| (0..n).map(|c| m.get(r, c).clone()).collect()).collect();
    let mut sign_neg = false;
    let mut prev = GroupRingElement::one(group.clone());
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return GroupRingElement::zero(group);
            };
            a.swap(k, swap);
            sign_neg = !sign_neg;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = exact_div(&num, &prev).expect("Bareiss division is exact");
            }
            a[i][k] = GroupRingElement::zero(group.clone());
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_neg {
        -&det
    } else {
        det
    }
}

/// All k-subsets of 0..n in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Number of k×k minors of an r×c matrix, saturating.
pub fn minor_count(r: usize, c: usize, k: usize) -> u128 {
    fn binom(n: usize, k: usize) -> u128 {
        if k > n {
            return 0;
        }
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
        }
        acc
    }
    binom(r, k).saturating_mul(binom(c, k))
}

/// gcd of all k×k minors, canonical normalization; 0 when there are no k×k
/// minors or all vanish. Early-exits once the gcd reaches 1.
pub fn gcd_of_k_minors(m: &LaurentMatrix, k: usize) -> GroupRingElement {
    let group = m.group().clone();
    assert!(group.is_infinite_cyclic(), "minor gcds need G = Z");
    if k == 0 {
        return GroupRingElement::one(group);
    }
    if k > m.rows() || k > m.cols() {
        return GroupRingElement::zero(group);
    }
    let mut acc = GroupRingElement::zero(group.clone());
    for rows in subsets(m.rows(), k) {
        for cols in subsets(m.cols(), k) {
            let sub = LaurentMatrix::from_fn(group.clone(), k, k, |r, c| {
                m.get(rows[r], cols[c]).clone()
            });
            let d = det_laurent(&sub);
            acc = laurent_gcd(&acc, &d);
            if acc.is_one() {
                return acc;
            }
        }
    }
    acc
}

/// gcd of all maximal (min-dimension) minors, the first divisorial Fitting
/// invariant of the presentation.
pub fn gcd_of_maximal_minors(m: &LaurentMatrix) -> GroupRingElement {
    gcd_of_k_minors(m, m.rows().min(m.cols()))
}

/// All maximal minors of a matrix with rows ≤ cols, in lexicographic column
/// order. Used to hunt for coprime pairs whose resultant bounds the
/// annihilator.
pub fn maximal_minors(m: &LaurentMatrix) -> Vec<GroupRingElement> {
    let k = m.rows().min(m.cols());
    let group = m.group().clone();
    let mut out = Vec::new();
    for rows in subsets(m.rows(), k) {
        for cols in subsets(m.cols(), k) {
            let sub = LaurentMatrix::from_fn(group.clone(), k, k, |r, c| {
                m.get(rows[r], cols[c]).clone()
            });
            out.push(det_laurent(&sub));
        }
    }
    out
}
