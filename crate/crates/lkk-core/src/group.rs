//! Finitely generated abelian groups ℤ^r ⊕ ℤ/m₁ ⊕ … ⊕ ℤ/mₖ and their
//! elements, used as weight groups for graph gradings.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A finitely generated abelian group, presented by its free rank and
/// invariant factors m₁ | m₂ | … (each ≥ 2).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Group {
    free_rank: usize,
    torsion: Vec<u64>,
}

/// An element of a [`Group`], stored as an integer vector with torsion
/// coordinates reduced to `[0, mᵢ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    /// Invariant factors must be ≥ 2 and form a divisibility chain.
    BadTorsion(u64),
    TorsionChain(u64, u64),
    /// Element coordinate vector has the wrong length for the group.
    BadElementLength { expected: usize, got: usize },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::BadTorsion(m) => write!(f, "torsion factor {m} is < 2"),
            GroupError::TorsionChain(a, b) => {
                write!(f, "torsion factors {a}, {b} violate the divisibility chain")
            }
            GroupError::BadElementLength { expected, got } => {
                write!(f, "element has {got} coordinates, group needs {expected}")
            }
        }
    }
}

impl Group {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self, GroupError> {
        for &m in &torsion {
            if m < 2 {
                return Err(GroupError::BadTorsion(m));
            }
        }
        for pair in torsion.windows(2) {
            if pair[1] % pair[0] != 0 {
                return Err(GroupError::TorsionChain(pair[0], pair[1]));
            }
        }
        Ok(Group { free_rank, torsion })
    }

    /// The group ℤ = ⟨σ⟩, the default grading group.
    pub fn infinite_cyclic() -> Self {
        Group { free_rank: 1, torsion: Vec::new() }
    }

    pub fn trivial() -> Self {
        Group { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    /// Coordinate count of an element vector.
    pub fn dim(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_infinite_cyclic(&self) -> bool {
        self.free_rank == 1 && self.torsion.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        if self.free_rank > 0 {
            return None;
        }
        let mut n = 1u64;
        for &m in &self.torsion {
            n = n.checked_mul(m)?;
        }
        Some(n)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { coords: alloc::vec![0; self.dim()] }
    }

    /// The distinguished generator (1, 0, …); σ when the group is ℤ.
    pub fn generator(&self) -> GroupElement {
        let mut coords = alloc::vec![0; self.dim()];
        if !coords.is_empty() {
            coords[0] = 1;
        }
        self.reduce(GroupElement { coords })
    }

    pub fn element(&self, coords: Vec<i64>) -> Result<GroupElement, GroupError> {
        if coords.len() != self.dim() {
            return Err(GroupError::BadElementLength { expected: self.dim(), got: coords.len() });
        }
        Ok(self.reduce(GroupElement { coords }))
    }

    fn reduce(&self, mut e: GroupElement) -> GroupElement {
        for (i, &m) in self.torsion.iter().enumerate() {
            let c = &mut e.coords[self.free_rank + i];
            *c = c.rem_euclid(m as i64);
        }
        e
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let coords = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
        self.reduce(GroupElement { coords })
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        let coords = a.coords.iter().map(|x| -x).collect();
        self.reduce(GroupElement { coords })
    }

    /// All elements, lexicographic in coordinates; `None` for infinite groups.
    pub fn elements(&self) -> Option<Vec<GroupElement>> {
        self.order()?;
        let mut out = alloc::vec![self.identity()];
        for (i, &m) in self.torsion.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * m as usize);
            for e in &out {
                for c in 0..m as i64 {
                    let mut coords = e.coords.clone();
                    coords[self.free_rank + i] = c;
                    next.push(GroupElement { coords });
                }
            }
            out = next;
        }
        Some(out)
    }
}

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// The σ-exponent of an element of ℤ.
    pub fn as_sigma_power(&self) -> Option<i64> {
        if self.coords.len() == 1 {
            Some(self.coords[0])
        } else {
            None
        }
    }

    /// Compact label such as `2` or `(1,0)`, used in covering-graph vertex ids.
    pub fn label(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        if self.coords.len() == 1 {
            let _ = write!(s, "{}", self.coords[0]);
        } else {
            s.push('(');
            for (i, c) in self.coords.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                let _ = write!(s, "{c}");
            }
            s.push(')');
        }
        s
    }
}
