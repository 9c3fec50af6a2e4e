//! Truncation of ℤ[σ,σ⁻¹]-linear maps to finite ℤ-matrices over σ-degree
//! windows. A window [lo, hi] on g generators indexes the lattice
//! ⊕ⱼ ⊕_{k=lo..hi} ℤ·σᵏeⱼ, generator-major.

use crate::int_mat::IntMatrix;
use crate::laurent::{GroupRingElement, LaurentMatrix};
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty degree window");
        Window { lo, hi }
    }

    pub fn symmetric(radius: i64) -> Self {
        Window::new(-radius, radius)
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires lo ≤ hi
    }

    pub fn contains(&self, k: i64) -> bool {
        self.lo <= k && k <= self.hi
    }

    pub fn slot(&self, k: i64) -> usize {
        debug_assert!(self.contains(k));
        (k - self.lo) as usize
    }

    /// Flat index of (generator, degree) with `gens` generators.
    pub fn index(&self, gen: usize, k: i64) -> usize {
        gen * self.len() + self.slot(k)
    }

    pub fn dim(&self, gens: usize) -> usize {
        gens * self.len()
    }

    /// Smallest window containing `self + [dlo, dhi]`.
    pub fn shifted_hull(&self, dlo: i64, dhi: i64) -> Window {
        Window::new(self.lo + dlo.min(0).min(dlo), self.hi + dhi.max(0).max(dhi))
    }
}

/// The ℤ-matrix of multiplication by `r` from the source window on
/// `r.cols()` generators to the destination window on `r.rows()`
/// generators. The destination window must contain the image of the
/// source window.
pub fn window_matrix(r: &LaurentMatrix, src: Window, dst: Window) -> IntMatrix {
    let (dlo, dhi) = r.degree_range();
    assert!(
        dst.lo <= src.lo + dlo.min(0) && dst.hi >= src.hi + dhi.max(0),
        "destination window too small for the image of the source window"
    );
    let mut m = IntMatrix::zeros(dst.dim(r.rows()), src.dim(r.cols()));
    for i in 0..r.rows() {
        for j in 0..r.cols() {
            let entry = r.get(i, j);
            for (g, c) in entry.terms() {
                let d = g.as_sigma_power().expect("window truncation needs G = Z");
                for k in src.lo..=src.hi {
                    let t = k + d;
                    if dst.contains(t) {
                        let row = dst.index(i, t);
                        let col = src.index(j, k);
                        let v = m.get(row, col) + c;
                        m.set(row, col, v);
                    }
                }
            }
        }
    }
    m
}

/// Coordinates of a Laurent vector in a window; `None` if any term falls
/// outside.
pub fn window_vector(v: &[GroupRingElement], w: Window) -> Option<Vec<BigInt>> {
    let mut out = alloc::vec![BigInt::zero(); w.dim(v.len())];
    for (gen, f) in v.iter().enumerate() {
        for (g, c) in f.terms() {
            let k = g.as_sigma_power()?;
            if !w.contains(k) {
                return None;
            }
            out[w.index(gen, k)] = c.clone();
        }
    }
    Some(out)
}
