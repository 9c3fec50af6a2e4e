//! Finitely presented modules over ℤ, ℤ[G], ℚ[σ±] and 𝔽p[σ±]: base change,
//! tensor products, the 1−σ quotient and kernel, a three-valued vanishing
//! test, and the isomorphism-invariant battery.
//!
//! A module is coker(relations) with relations stored as columns acting on
//! the generator row space.

use crate::arith::prime_factors;
use crate::field_laurent::{
    into_rational, snf_over_pid, specialize_mod_p, specialize_mod_p_at, FieldLaurentMatrix,
};
use crate::group::Group;
use crate::int_mat::{
    cokernel_abelian, kernel_basis, solve_linear, AbelianInvariants, IntMatrix,
};
use crate::laurent::{
    gcd_of_k_minors, maximal_minors, minor_count, GroupRingElement, LaurentMatrix,
};
use crate::window::{window_matrix, Window};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use num_traits::Zero;

/// Relation matrix over one of the supported base rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relations {
    Int(IntMatrix),
    GroupRing(LaurentMatrix),
    Field(FieldLaurentMatrix),
}

impl Relations {
    pub fn rows(&self) -> usize {
        match self {
            Relations::Int(m) => m.rows(),
            Relations::GroupRing(m) => m.rows(),
            Relations::Field(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            Relations::Int(m) => m.cols(),
            Relations::GroupRing(m) => m.cols(),
            Relations::Field(m) => m.cols(),
        }
    }

    /// Base ring tag for reports.
    pub fn base_name(&self) -> String {
        match self {
            Relations::Int(_) => "Z".to_string(),
            Relations::GroupRing(m) => {
                if m.group().is_infinite_cyclic() {
                    "Z[s^±1]".to_string()
                } else {
                    format!(
                        "Z[G], G = Z^{} x {:?}",
                        m.group().free_rank(),
                        m.group().torsion()
                    )
                }
            }
            Relations::Field(m) => {
                if m.modulus() == 0 {
                    "Q[s^±1]".to_string()
                } else {
                    format!("F{}[s^±1]", m.modulus())
                }
            }
        }
    }
}

/// A finitely presented module: coker(relations) on labeled generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpModule {
    pub generators: Vec<String>,
    pub relations: Relations,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FpModuleError {
    ShapeMismatch { generators: usize, relation_rows: usize },
    WrongBase { needed: &'static str, got: String },
    UnstableAtBound { bound: i64, last: AbelianInvariants },
}

impl fmt::Display for FpModuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FpModuleError::ShapeMismatch { generators, relation_rows } => write!(
                f,
                "{generators} generator labels but relation matrix has {relation_rows} rows"
            ),
            FpModuleError::WrongBase { needed, got } => {
                write!(f, "operation needs base {needed}, module is over {got}")
            }
            FpModuleError::UnstableAtBound { bound, last } => write!(
                f,
                "truncation invariants still unstable at degree bound {bound} (last value {last})"
            ),
        }
    }
}

/// Wrap a presentation; no normalization is performed.
pub fn cokernel_module(relations: Relations, labels: Vec<String>) -> Result<FpModule, FpModuleError> {
    if labels.len() != relations.rows() {
        return Err(FpModuleError::ShapeMismatch {
            generators: labels.len(),
            relation_rows: relations.rows(),
        });
    }
    Ok(FpModule { generators: labels, relations })
}

impl FpModule {
    pub fn over_laurent(rel: LaurentMatrix, labels: Vec<String>) -> Result<Self, FpModuleError> {
        cokernel_module(Relations::GroupRing(rel), labels)
    }

    /// Free module of the given rank over ℤ[σ,σ⁻¹].
    pub fn free_laurent(rank: usize) -> Self {
        let labels = (0..rank).map(|i| format!("g{i}")).collect();
        let rel = LaurentMatrix::zeros(Group::infinite_cyclic(), rank, 0);
        FpModule { generators: labels, relations: Relations::GroupRing(rel) }
    }

    pub fn laurent_relations(&self) -> Result<&LaurentMatrix, FpModuleError> {
        match &self.relations {
            Relations::GroupRing(m) if m.group().is_infinite_cyclic() => Ok(m),
            other => Err(FpModuleError::WrongBase {
                needed: "Z[s^±1]",
                got: other.base_name(),
            }),
        }
    }

    pub fn int_relations(&self) -> Result<&IntMatrix, FpModuleError> {
        match &self.relations {
            Relations::Int(m) => Ok(m),
            other => Err(FpModuleError::WrongBase { needed: "Z", got: other.base_name() }),
        }
    }

    /// Invariants of the underlying abelian group of a module over ℤ.
    pub fn abelian_invariants(&self) -> Result<AbelianInvariants, FpModuleError> {
        Ok(cokernel_abelian(self.int_relations()?))
    }
}

/// Base-change maps applicable to a ℤ[σ,σ⁻¹]-presentation. Cokernel
/// commutes with all of them (right exactness of ⊗).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseChange {
    /// σ ↦ u ∈ {+1, −1}, landing over ℤ.
    EvalUnit(i64),
    /// Coefficients mod p, σ kept, landing over 𝔽p[σ±].
    ModP(u64),
    /// Coefficients mod p and σ ↦ u, landing over 𝔽p (constants in 𝔽p[σ±]).
    ModPAt(u64, u64),
    /// Into ℚ[σ±].
    IntoRatLaurent,
}

pub fn base_change(m: &FpModule, map: BaseChange) -> Result<FpModule, FpModuleError> {
    let rel = m.laurent_relations()?;
    let mapped = match map {
        BaseChange::EvalUnit(u) => Relations::Int(
            rel.evaluate_at_unit(u)
                .map_err(|e| FpModuleError::WrongBase { needed: "Z[s^±1]", got: e.to_string() })?,
        ),
        BaseChange::ModP(p) => Relations::Field(
            specialize_mod_p(rel, p)
                .map_err(|e| FpModuleError::WrongBase { needed: "Z[s^±1]", got: e.to_string() })?,
        ),
        BaseChange::ModPAt(p, u) => Relations::Field(
            specialize_mod_p_at(rel, p, u)
                .map_err(|e| FpModuleError::WrongBase { needed: "Z[s^±1]", got: e.to_string() })?,
        ),
        BaseChange::IntoRatLaurent => Relations::Field(
            into_rational(rel)
                .map_err(|e| FpModuleError::WrongBase { needed: "Z[s^±1]", got: e.to_string() })?,
        ),
    };
    Ok(FpModule { generators: m.generators.clone(), relations: mapped })
}

/// Standard finitely presented tensor product: generators gᵢ⊗hⱼ, relations
/// (rel_m ⊗ I) ⊔ (I ⊗ rel_n). Both modules must share the base ring.
pub fn tensor_over_base(m: &FpModule, n: &FpModule) -> Result<FpModule, FpModuleError> {
    let labels: Vec<String> = m
        .generators
        .iter()
        .flat_map(|a| n.generators.iter().map(move |b| format!("{a}⊗{b}")))
        .collect();
    let relations = match (&m.relations, &n.relations) {
        (Relations::Int(a), Relations::Int(b)) => {
            let left = a.kronecker(&IntMatrix::identity(n.generators.len()));
            let right = IntMatrix::identity(m.generators.len()).kronecker(b);
            Relations::Int(left.hstack(&right))
        }
        (Relations::GroupRing(a), Relations::GroupRing(b)) => {
            assert_eq!(a.group(), b.group(), "group mismatch in tensor product");
            let g = a.group().clone();
            let left = a.kronecker(&LaurentMatrix::identity(g.clone(), n.generators.len()));
            let right = LaurentMatrix::identity(g, m.generators.len()).kronecker(b);
            Relations::GroupRing(left.hstack(&right))
        }
        (a, b) => {
            return Err(FpModuleError::WrongBase {
                needed: "matching bases (Z or Z[G])",
                got: format!("{} vs {}", a.base_name(), b.base_name()),
            })
        }
    };
    Ok(FpModule { generators: labels, relations })
}

/// M / (1−σ)M as a module over ℤ: adjoining the relations (1−σ)gᵢ makes σ
/// act trivially, so the presentation is the relation matrix evaluated at
/// σ = 1.
pub fn quotient_by_one_minus_sigma(m: &FpModule) -> Result<FpModule, FpModuleError> {
    let evaluated = base_change(m, BaseChange::EvalUnit(1))?;
    Ok(evaluated)
}

/// Degree reach of the relation matrix, used to size witness windows.
fn relation_reach(rel: &LaurentMatrix) -> i64 {
    let (lo, hi) = rel.degree_range();
    lo.abs().max(hi.abs()).max(1)
}

/// Invariants of ker(1−σ : M → M) for M over ℤ[σ,σ⁻¹], computed by degree
/// truncation: candidates ξ supported in [−n, n] with (1−σ)ξ in the witness
/// window image of the relations, modulo relations landing in the window.
/// Declared stable when three consecutive stages agree; errors out with a
/// diagnostic when the bound is hit first.
pub fn kernel_of_one_minus_sigma(
    m: &FpModule,
    degree_cap: i64,
) -> Result<AbelianInvariants, FpModuleError> {
    let rel = m.laurent_relations()?;
    let gens = m.generators.len();
    if gens == 0 {
        return Ok(AbelianInvariants::trivial());
    }
    let group = Group::infinite_cyclic();
    let one_minus_sigma = {
        let f = GroupRingElement::sigma_poly(0, &[1, -1]);
        LaurentMatrix::from_fn(group.clone(), gens, gens, |r, c| {
            if r == c {
                f.clone()
            } else {
                GroupRingElement::zero(group.clone())
            }
        })
    };
    let reach = relation_reach(rel);
    let mut history: Vec<AbelianInvariants> = Vec::new();
    for n in 0..=degree_cap {
        let xw = Window::symmetric(n);
        // ζ-window for "is ξ a relation" witnesses; η = (1−σ)ζ then fits in
        // the η-window, which keeps the denominator lattice inside the
        // numerator lattice.
        let zw = Window::new(-n - reach, n + reach);
        let hw = Window::new(zw.lo - 1, zw.hi + 1);
        let (rlo, rhi) = rel.degree_range();
        let tw = Window::new((xw.lo - 1).min(hw.lo + rlo.min(0)), (xw.hi + 1).max(hw.hi + rhi.max(0)));

        // numerator: ξ with (1−σ)ξ = R·η
        let a = window_matrix(&one_minus_sigma, xw, tw);
        let b = window_matrix(rel, hw, tw);
        let stacked = a.hstack(&(-&b));
        let ker = kernel_basis(&stacked);
        let xi_dim = xw.dim(gens);
        let num = IntMatrix::from_fn(xi_dim, ker.cols(), |r, c| ker.get(r, c).clone());

        // denominator: relations R·ζ supported inside the ξ-window
        let bz = window_matrix(rel, zw, tw);
        let keep: Vec<usize> = (0..gens)
            .flat_map(|g| (tw.lo..=tw.hi).map(move |k| (g, k)))
            .enumerate()
            .filter_map(|(row, (_, k))| if xw.contains(k) { None } else { Some(row) })
            .collect();
        let outside = IntMatrix::from_fn(keep.len(), bz.cols(), |r, c| bz.get(keep[r], c).clone());
        let z_ker = kernel_basis(&outside);
        let inside_rows: Vec<usize> = (0..gens)
            .flat_map(|g| (tw.lo..=tw.hi).map(move |k| (g, k)))
            .enumerate()
            .filter_map(|(row, (_, k))| if xw.contains(k) { Some(row) } else { None })
            .collect();
        let bz_inside =
            IntMatrix::from_fn(inside_rows.len(), bz.cols(), |r, c| bz.get(inside_rows[r], c).clone());
        let den = &bz_inside * &z_ker;

        let inv = lattice_quotient(&num, &den);
        history.push(inv);
        let h = history.len();
        if h >= 3 && history[h - 1] == history[h - 2] && history[h - 2] == history[h - 3] {
            return Ok(history[h - 1].clone());
        }
    }
    Err(FpModuleError::UnstableAtBound {
        bound: degree_cap,
        last: history.last().cloned().unwrap_or_else(AbelianInvariants::trivial),
    })
}

/// Invariants of L₁/L₂ for lattices given by generator matrices (columns),
/// with L₂ ⊆ L₁.
pub fn lattice_quotient(gen1: &IntMatrix, gen2: &IntMatrix) -> AbelianInvariants {
    assert_eq!(gen1.rows(), gen2.rows());
    let sol = solve_linear(gen1, gen2)
        .expect("denominator lattice must be contained in the numerator lattice");
    // L₁ = im(gen1) ≅ ℤ^cols / ker(gen1); L₂ pulls back to im(Y) + ker(gen1).
    let rel = sol.particular.hstack(&sol.kernel);
    cokernel_abelian(&rel)
}

/// Compared fields of the invariant battery, in comparison order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantBattery {
    pub rank_over_q_laurent: usize,
    pub eval_sigma_1: AbelianInvariants,
    pub eval_sigma_minus_1: AbelianInvariants,
    /// (p, u) ↦ dim over 𝔽p of the module at σ = u mod p.
    pub modp_profiles: BTreeMap<(u64, u64), usize>,
    /// Divisorial Fitting invariants: entry j is the canonical gcd of the
    /// (gens − j)×(gens − j) minors, listed while j < gens and stopping
    /// early once the gcd becomes the unit 1 (all later entries are 1).
    pub fitting_gcds: Vec<GroupRingElement>,
    /// True when a cost cap prevented computing further Fitting gcds;
    /// comparisons then use the common computed prefix.
    pub fitting_truncated: bool,
}

/// Minor-enumeration cost cap for Fitting gcds.
const FITTING_MINOR_CAP: u128 = 100_000;

/// Primes used by the vanishing test when no explicit bound is given.
pub const DEFAULT_PRIME_BOUND: u64 = 13;

fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&p| crate::arith::is_prime_u128(p as u128)).collect()
}

/// The isomorphism-invariant battery of a ℤ[σ,σ⁻¹]-module: base changes to
/// ℤ (σ = ±1), to ℚ[σ±], to 𝔽p at each unit, and Fitting-ideal gcds. The
/// mod-p profile covers primes ≤ `prime_bound` plus all primes dividing the
/// torsion orders of the σ = ±1 evaluations.
pub fn invariant_battery(m: &FpModule, prime_bound: u64) -> Result<InvariantBattery, FpModuleError> {
    let rel = m.laurent_relations()?;
    let gens = m.generators.len();

    let eval1 = cokernel_abelian(&rel.evaluate_at_unit(1).expect("cyclic group"));
    let eval_m1 = cokernel_abelian(&rel.evaluate_at_unit(-1).expect("cyclic group"));

    let rank_over_q_laurent = {
        let q = into_rational(rel).expect("cyclic group");
        gens - snf_over_pid(&q).rank()
    };

    let mut primes = primes_up_to(prime_bound);
    for inv in [&eval1, &eval_m1] {
        for t in &inv.torsion {
            if let Some(extra) = prime_factors(t) {
                for p in extra {
                    if !primes.contains(&p) {
                        primes.push(p);
                    }
                }
            }
        }
    }
    primes.sort_unstable();

    let mut modp_profiles = BTreeMap::new();
    for &p in &primes {
        for u in 1..p {
            let f = specialize_mod_p_at(rel, p, u).expect("prime and unit checked");
            let dim = gens - snf_over_pid(&f).rank();
            modp_profiles.insert((p, u), dim);
        }
    }

    let mut fitting_gcds = Vec::new();
    let mut fitting_truncated = false;
    for j in 0..gens {
        let k = gens - j;
        if minor_count(rel.rows(), rel.cols(), k) > FITTING_MINOR_CAP {
            fitting_truncated = true;
            break;
        }
        let g = gcd_of_k_minors(rel, k);
        let is_unit_one = g.is_one();
        fitting_gcds.push(g);
        if is_unit_one {
            break;
        }
    }

    Ok(InvariantBattery {
        rank_over_q_laurent,
        eval_sigma_1: eval1,
        eval_sigma_minus_1: eval_m1,
        modp_profiles,
        fitting_gcds,
        fitting_truncated,
    })
}

impl InvariantBattery {
    /// First differing field, as (name, left, right); `None` when the
    /// batteries agree on every comparable field.
    pub fn first_difference(&self, other: &Self) -> Option<(String, String, String)> {
        if self.rank_over_q_laurent != other.rank_over_q_laurent {
            return Some((
                "rank over Q(sigma)".to_string(),
                self.rank_over_q_laurent.to_string(),
                other.rank_over_q_laurent.to_string(),
            ));
        }
        if self.eval_sigma_1 != other.eval_sigma_1 {
            return Some((
                "eval sigma=1".to_string(),
                self.eval_sigma_1.to_string(),
                other.eval_sigma_1.to_string(),
            ));
        }
        if self.eval_sigma_minus_1 != other.eval_sigma_minus_1 {
            return Some((
                "eval sigma=-1".to_string(),
                self.eval_sigma_minus_1.to_string(),
                other.eval_sigma_minus_1.to_string(),
            ));
        }
        for (key, dim) in &self.modp_profiles {
            if let Some(od) = other.modp_profiles.get(key) {
                if od != dim {
                    return Some((
                        format!("modp profile (p={}, u={})", key.0, key.1),
                        dim.to_string(),
                        od.to_string(),
                    ));
                }
            }
        }
        let one = GroupRingElement::one(Group::infinite_cyclic());
        let comparable = if self.fitting_truncated || other.fitting_truncated {
            self.fitting_gcds.len().min(other.fitting_gcds.len())
        } else {
            self.fitting_gcds.len().max(other.fitting_gcds.len())
        };
        for j in 0..comparable {
            let a = self.fitting_gcds.get(j).unwrap_or(&one);
            let b = other.fitting_gcds.get(j).unwrap_or(&one);
            if a != b {
                return Some((format!("fitting gcd j={j}"), a.to_text(), b.to_text()));
            }
        }
        None
    }

    /// Any nonzero field, as witness text; `None` when the battery is
    /// entirely zero.
    pub fn nonzero_witness(&self) -> Option<String> {
        if self.rank_over_q_laurent > 0 {
            return Some(format!("rank over Q(sigma) is {}", self.rank_over_q_laurent));
        }
        if !self.eval_sigma_1.is_trivial() {
            return Some(format!("sigma=1 gives {}", self.eval_sigma_1));
        }
        if !self.eval_sigma_minus_1.is_trivial() {
            return Some(format!("sigma=-1 gives {}", self.eval_sigma_minus_1));
        }
        for ((p, u), dim) in &self.modp_profiles {
            if *dim > 0 {
                return Some(format!("(p,u)=({p},{u}) gives F{p}-dimension {dim}"));
            }
        }
        None
    }
}

/// Verdict of the vanishing test. `Unknown` is a first-class outcome;
/// ℤ[σ,σ⁻¹] is not a PID and no complete decision procedure is attempted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroVerdict {
    Yes,
    No { witness: String },
    Unknown { reason: String },
}

/// Is M = 0? "No" when any battery invariant is nonzero; "yes" when the
/// maximal-minor gcd is a unit and an integer annihilator N (a resultant of
/// two coprime maximal minors) is found with M/pM = 0 for every prime p | N;
/// "unknown" otherwise.
pub fn is_zero_module(m: &FpModule) -> ZeroVerdict {
    if m.generators.is_empty() {
        return ZeroVerdict::Yes;
    }
    let Ok(rel) = m.laurent_relations() else {
        return ZeroVerdict::Unknown { reason: "vanishing test needs base Z[s^±1]".to_string() };
    };
    let battery = invariant_battery(m, DEFAULT_PRIME_BOUND).expect("base checked");
    if let Some(witness) = battery.nonzero_witness() {
        return ZeroVerdict::No { witness };
    }
    match battery.fitting_gcds.first() {
        None => return ZeroVerdict::No { witness: "Fitt_0 = 0 (no maximal minors)".to_string() },
        Some(g) if g.is_zero() => {
            return ZeroVerdict::No { witness: "all maximal minors vanish".to_string() }
        }
        Some(g) if !g.is_one() => {
            return ZeroVerdict::No { witness: format!("Fitt_0 ⊆ ({})", g.to_text()) }
        }
        _ => {}
    }
    let gens = m.generators.len();
    if minor_count(rel.rows(), rel.cols(), gens) > FITTING_MINOR_CAP {
        return ZeroVerdict::Unknown { reason: "too many maximal minors to enumerate".to_string() };
    }
    let minors: Vec<GroupRingElement> =
        maximal_minors(rel).into_iter().filter(|f| !f.is_zero()).collect();
    if minors.iter().any(|f| f.is_monomial_unit()) {
        // an invertible gens×gens submatrix of the relations
        return ZeroVerdict::Yes;
    }
    let mut annihilator = None;
    'outer: for i in 0..minors.len() {
        for j in i + 1..minors.len() {
            let res = crate::laurent::resultant(&minors[i], &minors[j]);
            if !res.is_zero() {
                annihilator = Some(res);
                break 'outer;
            }
        }
    }
    let Some(n) = annihilator else {
        return ZeroVerdict::Unknown {
            reason: "no coprime pair among the maximal minors".to_string(),
        };
    };
    let Some(primes) = prime_factors(&n) else {
        return ZeroVerdict::Unknown { reason: format!("could not factor annihilator {n}") };
    };
    for p in primes {
        let f = specialize_mod_p(rel, p).expect("prime");
        let s = snf_over_pid(&f);
        let vanishes = s.rank() == gens && s.torsion_factors().is_empty();
        if !vanishes {
            return ZeroVerdict::No { witness: format!("nonzero mod {p} (sigma kept)") };
        }
    }
    ZeroVerdict::Yes
}
