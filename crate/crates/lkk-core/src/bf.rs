//! Graph-level invariants: the graded Bowen-Franks module coker(I − A_ωᵗ),
//! its dual, the ungraded group, purity and nonvanishing checks, sequence
//! terms with cyclic coefficients, the Van den Bergh consistency check, and
//! bounded positive-cone searches.

use crate::arith::prime_factors;
use crate::field_laurent::{into_rational, snf_over_pid, specialize_mod_p};
use crate::fp_module::{
    invariant_battery, is_zero_module, kernel_of_one_minus_sigma, quotient_by_one_minus_sigma,
    FpModule, FpModuleError, InvariantBattery, Relations, ZeroVerdict,
};
use crate::graph::WeightedGraph;
use crate::int_mat::{kernel_basis, AbelianInvariants, ColumnLattice, IntMatrix};
use crate::laurent::{GroupRingElement, LaurentMatrix};
use crate::window::{window_matrix, window_vector, Window};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_traits::One;

/// The graded Bowen-Franks module of a weighted graph, with the pointed
/// class [1] = Σ_v [v].
#[derive(Clone, Debug)]
pub struct BfGraded {
    pub module: FpModule,
    /// Generator coefficients of the distinguished class; all ones.
    pub point: Vec<GroupRingElement>,
}

/// The dual module coker(Iᵗ − A_ω) on the regular vertices.
#[derive(Clone, Debug)]
pub struct BfDual {
    pub module: FpModule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BfError {
    InvalidGraph(Vec<String>),
    NonCyclicGroup,
    Module(FpModuleError),
    NegativeModulus,
}

impl fmt::Display for BfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BfError::InvalidGraph(v) => write!(f, "invalid graph: {}", v.join("; ")),
            BfError::NonCyclicGroup => write!(f, "operation requires the weight group Z"),
            BfError::Module(e) => write!(f, "{e}"),
            BfError::NegativeModulus => write!(f, "coefficient modulus must be ≥ 0"),
        }
    }
}

impl From<FpModuleError> for BfError {
    fn from(e: FpModuleError) -> Self {
        BfError::Module(e)
    }
}

fn ensure_valid(g: &WeightedGraph) -> Result<(), BfError> {
    let violations = g.validate();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(BfError::InvalidGraph(violations))
    }
}

/// Relation matrix I − A_ωᵗ over ℤ[G]: rows = all vertices, columns = regular
/// vertices; the column of a regular v is e_v − Σ_{e: v→w} ω(e)·e_w.
pub fn bf_relations(g: &WeightedGraph) -> LaurentMatrix {
    let group = g.group().clone();
    let regular = g.regular_vertices();
    let adj = g.weighted_adjacency();
    LaurentMatrix::from_fn(group.clone(), g.vertices().len(), regular.len(), |r, c| {
        // (I − A_ωᵗ)_{r,c} = δ − (A_ω)_{c,r}
        let delta = if g.vertices()[r] == regular[c] {
            GroupRingElement::one(group.clone())
        } else {
            GroupRingElement::zero(group.clone())
        };
        &delta - adj.get(c, r)
    })
}

pub fn bf_graded(g: &WeightedGraph) -> Result<BfGraded, BfError> {
    ensure_valid(g)?;
    let rel = bf_relations(g);
    let module = FpModule {
        generators: g.vertices().to_vec(),
        relations: Relations::GroupRing(rel),
    };
    let point = g
        .vertices()
        .iter()
        .map(|_| GroupRingElement::one(g.group().clone()))
        .collect();
    Ok(BfGraded { module, point })
}

pub fn bf_dual(g: &WeightedGraph) -> Result<BfDual, BfError> {
    ensure_valid(g)?;
    let group = g.group().clone();
    let regular = g.regular_vertices();
    let adj = g.weighted_adjacency();
    let rel = LaurentMatrix::from_fn(group.clone(), regular.len(), g.vertices().len(), |r, c| {
        let delta = if regular[r] == g.vertices()[c] {
            GroupRingElement::one(group.clone())
        } else {
            GroupRingElement::zero(group.clone())
        };
        &delta - adj.get(r, c)
    });
    Ok(BfDual { module: FpModule { generators: regular, relations: Relations::GroupRing(rel) } })
}

/// The ungraded Bowen-Franks group coker(I − A_Eᵗ) over ℤ (weights
/// forgotten).
pub fn bf_ungraded(g: &WeightedGraph) -> Result<AbelianInvariants, BfError> {
    ensure_valid(g)?;
    Ok(crate::int_mat::cokernel_abelian(&ungraded_relations(g)))
}

/// I − A_Eᵗ over ℤ: rows = all vertices, columns = regular vertices.
pub fn ungraded_relations(g: &WeightedGraph) -> IntMatrix {
    let regular = g.regular_vertices();
    let counts = g.adjacency_counts();
    IntMatrix::from_fn(g.vertices().len(), regular.len(), |r, c| {
        let delta = if g.vertices()[r] == regular[c] { BigInt::one() } else { BigInt::from(0) };
        delta - counts.get(c, r)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurityCheck {
    pub label: String,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct PurityReport {
    pub checks: Vec<PurityCheck>,
}

impl PurityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Injectivity of I − A_ωᵗ over ℚ[σ±] and mod each given modulus (via
/// 𝔽p[σ±] SNF on the prime factors). Pure exactness of the presentation
/// predicts every check passes; a failure is a bug flag.
pub fn purity_and_injectivity_check(
    g: &WeightedGraph,
    moduli: &[u64],
) -> Result<PurityReport, BfError> {
    ensure_valid(g)?;
    if !g.group().is_infinite_cyclic() {
        return Err(BfError::NonCyclicGroup);
    }
    let rel = bf_relations(g);
    let cols = rel.cols();
    let mut checks = Vec::new();
    let q_rank = snf_over_pid(&into_rational(&rel).expect("cyclic group")).rank();
    checks.push(PurityCheck {
        label: "injective over Q[s^±1]".to_string(),
        passed: q_rank == cols,
    });
    for &m in moduli {
        let primes = prime_factors(&BigInt::from(m)).unwrap_or_default();
        let mut passed = true;
        for &p in &primes {
            let f = specialize_mod_p(&rel, p).expect("prime factor");
            passed = passed && snf_over_pid(&f).rank() == cols;
        }
        checks.push(PurityCheck {
            label: format!("injective mod {m} (primes {primes:?})"),
            passed,
        });
    }
    Ok(PurityReport { checks })
}

/// Battery of the graded Bowen-Franks module of a graph.
pub fn invariant_battery_of_graph(
    g: &WeightedGraph,
    prime_bound: u64,
) -> Result<InvariantBattery, BfError> {
    Ok(invariant_battery(&bf_graded(g)?.module, prime_bound)?)
}

#[derive(Clone, Debug)]
pub struct NonvanishingReport {
    pub verdict: ZeroVerdict,
    /// True when the module is certified nonzero, as the theory predicts
    /// for every finite graph.
    pub nonzero: bool,
}

pub fn nonvanishing_check(g: &WeightedGraph) -> Result<NonvanishingReport, BfError> {
    let bf = bf_graded(g)?;
    let verdict = is_zero_module(&bf.module);
    let nonzero = matches!(verdict, ZeroVerdict::No { .. });
    Ok(NonvanishingReport { verdict, nonzero })
}

#[derive(Clone, Debug)]
pub struct ClassMapReport {
    pub coeff_bound: u64,
    pub degree_window: i64,
    /// Number of candidate vectors inspected: (bound+1)^|E⁰| − 1.
    pub search_space: u128,
    /// Nonzero nonnegative vectors found in ker(cl); the theory predicts
    /// none exist, so any entry is a bug flag.
    pub hits: Vec<Vec<u64>>,
}

impl ClassMapReport {
    pub fn passed(&self) -> bool {
        self.hits.is_empty()
    }
}

/// Exhaustive search for nonzero x ∈ ℕ^{E⁰} with entries ≤ `coeff_bound`
/// and cl(x) = 0 in BF_gr, membership in the relation image tested on a
/// σ-degree window that grows with the bound.
pub fn class_map_kernel_check(
    g: &WeightedGraph,
    coeff_bound: u64,
) -> Result<ClassMapReport, BfError> {
    ensure_valid(g)?;
    if !g.group().is_infinite_cyclic() {
        return Err(BfError::NonCyclicGroup);
    }
    let rel = bf_relations(g);
    let nv = g.vertices().len();
    let w = coeff_bound as i64 + 2;
    let (rlo, rhi) = rel.degree_range();
    let src = Window::new(-w, w);
    let dst = Window::new(src.lo + rlo.min(0), src.hi + rhi.max(0));
    let lattice = ColumnLattice::new(&window_matrix(&rel, src, dst));

    let mut hits = Vec::new();
    let mut x = alloc::vec![0u64; nv];
    let mut search_space: u128 = 0;
    loop {
        // next vector in lexicographic order
        let mut i = nv;
        loop {
            if i == 0 {
                let report = ClassMapReport {
                    coeff_bound,
                    degree_window: w,
                    search_space,
                    hits,
                };
                return Ok(report);
            }
            i -= 1;
            if x[i] < coeff_bound {
                x[i] += 1;
                for slot in x.iter_mut().skip(i + 1) {
                    *slot = 0;
                }
                break;
            }
        }
        search_space += 1;
        let embedded: Vec<BigInt> = {
            let as_laurent: Vec<GroupRingElement> = x
                .iter()
                .map(|&c| {
                    GroupRingElement::constant(g.group().clone(), BigInt::from(c))
                })
                .collect();
            window_vector(&as_laurent, dst).expect("degree 0 fits any window")
        };
        if lattice.contains(&embedded) {
            hits.push(x.clone());
        }
    }
}

/// Per-prime description of BF_gr ⊗ ℤ/m and the kernel term of the
/// coefficient sequence.
#[derive(Clone, Debug)]
pub struct SequenceTerms {
    pub modulus: u64,
    /// For m = 0: the full battery of BF_gr over ℤ[σ,σ⁻¹].
    pub integral_battery: Option<InvariantBattery>,
    /// For m > 0, one part per prime power p^a ‖ m: the non-unit diagonal
    /// factors and free rank of the presentation over 𝔽p[σ±].
    pub prime_parts: Vec<PrimePart>,
    /// Per prime p | m: dim ker((I − A_ωᵗ) over 𝔽p(σ)); purity predicts 0.
    pub kernel_deficiency: Vec<(u64, usize)>,
}

#[derive(Clone, Debug)]
pub struct PrimePart {
    pub prime: u64,
    pub exponent: u32,
    pub diagonal_factors: Vec<String>,
    pub free_rank: usize,
}

impl SequenceTerms {
    /// The right-hand sequence term vanishes (so Tor₁ = 0).
    pub fn kernel_is_zero(&self) -> bool {
        self.kernel_deficiency.iter().all(|(_, d)| *d == 0)
    }
}

pub fn sequence_terms(g: &WeightedGraph, m: i64) -> Result<SequenceTerms, BfError> {
    ensure_valid(g)?;
    if m < 0 {
        return Err(BfError::NegativeModulus);
    }
    if !g.group().is_infinite_cyclic() {
        return Err(BfError::NonCyclicGroup);
    }
    let bf = bf_graded(g)?;
    let rel = bf.module.laurent_relations()?;
    if m == 0 {
        return Ok(SequenceTerms {
            modulus: 0,
            integral_battery: Some(invariant_battery(&bf.module, 13)?),
            prime_parts: Vec::new(),
            kernel_deficiency: Vec::new(),
        });
    }
    let m = m as u64;
    let primes = prime_factors(&BigInt::from(m)).unwrap_or_default();
    let mut prime_parts = Vec::new();
    let mut kernel_deficiency = Vec::new();
    for &p in &primes {
        let mut a = 0u32;
        let mut q = m;
        while q.is_multiple_of(p) {
            a += 1;
            q /= p;
        }
        let f = specialize_mod_p(rel, p).expect("prime");
        let s = snf_over_pid(&f);
        prime_parts.push(PrimePart {
            prime: p,
            exponent: a,
            diagonal_factors: s.torsion_factors().iter().map(|d| d.to_text()).collect(),
            free_rank: bf.module.generators.len() - s.rank(),
        });
        kernel_deficiency.push((p, rel.cols() - s.rank()));
    }
    Ok(SequenceTerms { modulus: m, integral_battery: None, prime_parts, kernel_deficiency })
}

/// Both sides of the Van den Bergh comparison at n = 0 with ℤ coefficients.
#[derive(Clone, Debug)]
pub struct VdbReport {
    pub quotient_graded: AbelianInvariants,
    pub quotient_ungraded: AbelianInvariants,
    pub kernel_graded: AbelianInvariants,
    pub kernel_ungraded: AbelianInvariants,
}

impl VdbReport {
    pub fn passed(&self) -> bool {
        self.quotient_graded == self.quotient_ungraded
            && self.kernel_graded == self.kernel_ungraded
    }
}

/// Checks the two identities the graded/ungraded sequence forces at n = 0:
/// BF_gr/(1−σ) ≅ BF(E) and ker(1−σ on BF_gr) ≅ ker(I − A_Eᵗ over ℤ).
pub fn vdb_check(g: &WeightedGraph, truncation_cap: i64) -> Result<VdbReport, BfError> {
    ensure_valid(g)?;
    if !g.group().is_infinite_cyclic() {
        return Err(BfError::NonCyclicGroup);
    }
    let bf = bf_graded(g)?;
    let quotient_graded = quotient_by_one_minus_sigma(&bf.module)?.abelian_invariants()?;
    let quotient_ungraded = bf_ungraded(g)?;
    let kernel_graded = kernel_of_one_minus_sigma(&bf.module, truncation_cap)?;
    let kernel_ungraded =
        AbelianInvariants::free(kernel_basis(&ungraded_relations(g)).cols());
    Ok(VdbReport { quotient_graded, quotient_ungraded, kernel_graded, kernel_ungraded })
}

/// Outcome of the bounded positive-cone search. Absence of a certificate is
/// never a disproof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeMembership {
    Found { combination: Vec<(String, i64, u64)> },
    NotFound { degree_bound: i64, coeff_bound: u64, candidates_tried: u64 },
}

const CONE_CANDIDATE_CAP: u64 = 200_000;

/// Search for x ≡ Σ nᵢ σ^{kᵢ}[vᵢ] with 0 ≤ nᵢ ≤ coeff_bound and
/// |kᵢ| ≤ degree_bound, modulo the relation lattice on a compatible window.
pub fn positive_cone_membership(
    g: &WeightedGraph,
    x: &[GroupRingElement],
    degree_bound: i64,
    coeff_bound: u64,
) -> Result<ConeMembership, BfError> {
    ensure_valid(g)?;
    if !g.group().is_infinite_cyclic() {
        return Err(BfError::NonCyclicGroup);
    }
    let nv = g.vertices().len();
    assert_eq!(x.len(), nv, "class vector must have one entry per vertex");
    let rel = bf_relations(g);
    let x_reach = x
        .iter()
        .filter_map(|f| Some(f.min_degree()?.abs().max(f.max_degree()?.abs())))
        .max()
        .unwrap_or(0);
    let w = degree_bound.max(x_reach) + 2;
    let (rlo, rhi) = rel.degree_range();
    let src = Window::new(-w, w);
    let dst = Window::new(src.lo + rlo.min(0) - 1, src.hi + rhi.max(0) + 1);
    let lattice = ColumnLattice::new(&window_matrix(&rel, src, dst));

    let slots: Vec<(usize, i64)> = {
        let mut s: Vec<(usize, i64)> = (0..nv)
            .flat_map(|v| (-degree_bound..=degree_bound).map(move |k| (v, k)))
            .collect();
        // rightmost slot is incremented fastest, so put low |k| and low
        // vertex index at the end: sparse natural combinations come first
        s.sort_by_key(|&(v, k)| (core::cmp::Reverse(k.abs()), k, core::cmp::Reverse(v)));
        s
    };
    // bounded counting over the slot vector, rightmost slot fastest, so
    // sparse low-degree combinations are tried early
    let mut y = alloc::vec![0u64; slots.len()];
    let mut tried = 0u64;
    loop {
        tried += 1;
        if tried > CONE_CANDIDATE_CAP {
            return Ok(ConeMembership::NotFound {
                degree_bound,
                coeff_bound,
                candidates_tried: tried - 1,
            });
        }
        let mut diff: Vec<GroupRingElement> = x.to_vec();
        for (slot, &(v, k)) in slots.iter().enumerate() {
            if y[slot] > 0 {
                let term = GroupRingElement::sigma_term(y[slot] as i64, k);
                diff[v] = &diff[v] - &term;
            }
        }
        if let Some(vec) = window_vector(&diff, dst) {
            if lattice.contains(&vec) && y.iter().any(|&c| c > 0) {
                let combination = slots
                    .iter()
                    .zip(&y)
                    .filter(|(_, &c)| c > 0)
                    .map(|(&(v, k), &c)| (g.vertices()[v].clone(), k, c))
                    .collect();
                return Ok(ConeMembership::Found { combination });
            }
        }
        let mut i = slots.len();
        loop {
            if i == 0 {
                return Ok(ConeMembership::NotFound {
                    degree_bound,
                    coeff_bound,
                    candidates_tried: tried
                });
            }
            i -= 1;
            if y[i] < coeff_bound {
                y[i] += 1;
                for slot in y.iter_mut().skip(i + 1) {
                    *slot = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedGraph;
    use alloc::vec;

    fn r1() -> WeightedGraph {
        WeightedGraph::from_adjacency(&[vec![1]])
    }

    fn r2() -> WeightedGraph {
        WeightedGraph::from_adjacency(&[vec![2]])
    }

    fn c2() -> WeightedGraph {
        WeightedGraph::from_adjacency(&[vec![0, 1], vec![1, 0]])
    }

    fn sink() -> WeightedGraph {
        WeightedGraph::from_adjacency(&[vec![0]])
    }

    #[test]
    fn graded_module_presentations() {
        // R₁ → ℤ[σ±]/(1−σ), point = 1
        let bf = bf_graded(&r1()).unwrap();
        let rel = bf.module.laurent_relations().unwrap();
        assert_eq!(rel.get(0, 0).to_text(), "1*s^0 + -1*s^1");
        assert_eq!(bf.point.len(), 1);
        assert!(bf.point[0].is_one());

        // single sink: free rank 1, no relations
        let bf = bf_graded(&sink()).unwrap();
        assert_eq!(bf.module.relations.cols(), 0);
        assert_eq!(bf.module.generators.len(), 1);

        // R₂ → ℤ[σ±]/(1−2σ)
        let bf = bf_graded(&r2()).unwrap();
        assert_eq!(bf.module.laurent_relations().unwrap().get(0, 0).to_text(), "1*s^0 + -2*s^1");
    }

    #[test]
    fn dual_presentations() {
        let d = bf_dual(&r1()).unwrap();
        assert_eq!(d.module.laurent_relations().unwrap().get(0, 0).to_text(), "1*s^0 + -1*s^1");

        // no regular vertices ⇒ zero module
        let d = bf_dual(&sink()).unwrap();
        assert_eq!(d.module.generators.len(), 0);

        // C₂ dual is the transpose shape
        let d = bf_dual(&c2()).unwrap();
        let rel = d.module.laurent_relations().unwrap();
        assert_eq!((rel.rows(), rel.cols()), (2, 2));
        assert_eq!(rel.get(0, 1).to_text(), "-1*s^1");
    }

    #[test]
    fn ungraded_groups() {
        assert!(bf_ungraded(&r2()).unwrap().is_trivial());
        assert_eq!(bf_ungraded(&r1()).unwrap(), AbelianInvariants::free(1));
        assert_eq!(bf_ungraded(&c2()).unwrap(), AbelianInvariants::free(1));
    }

    #[test]
    fn purity_examples() {
        let rep = purity_and_injectivity_check(&r2(), &[2, 3]).unwrap();
        assert!(rep.all_passed());
        let rep = purity_and_injectivity_check(&r1(), &[5]).unwrap();
        assert!(rep.all_passed());
        // sink-only graph: vacuously injective (no columns)
        let rep = purity_and_injectivity_check(&sink(), &[4, 9]).unwrap();
        assert!(rep.all_passed());
    }

    #[test]
    fn nonvanishing_examples() {
        for g in [r1(), r2(), sink()] {
            let rep = nonvanishing_check(&g).unwrap();
            assert!(rep.nonzero, "BF_gr must be nonzero: {:?}", rep.verdict);
        }
    }

    #[test]
    fn class_map_examples() {
        let rep = class_map_kernel_check(&r2(), 5).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.search_space, 5);

        let arrow = WeightedGraph::from_adjacency(&[vec![0, 1], vec![0, 0]]);
        let rep = class_map_kernel_check(&arrow, 5).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.search_space, 35);

        let rep = class_map_kernel_check(&sink(), 3).unwrap();
        assert!(rep.passed());
    }

    #[test]
    fn sequence_terms_examples() {
        // R₂ with m = 2: 1−2σ ≡ 1 is a unit; both parts vanish
        let t = sequence_terms(&r2(), 2).unwrap();
        assert!(t.kernel_is_zero());
        assert!(t.prime_parts[0].diagonal_factors.is_empty());
        assert_eq!(t.prime_parts[0].free_rank, 0);

        // R₂ with m = 3: coker part 𝔽₃[σ±]/(1+σ)
        let t = sequence_terms(&r2(), 3).unwrap();
        assert!(t.kernel_is_zero());
        assert_eq!(t.prime_parts[0].diagonal_factors, vec!["1*s^0 + 1*s^1".to_string()]);

        // m = 0 is the integral battery
        let t = sequence_terms(&r2(), 0).unwrap();
        assert!(t.integral_battery.is_some());
        assert!(sequence_terms(&r2(), -1).is_err());
    }

    #[test]
    fn vdb_examples() {
        let rep = vdb_check(&r1(), 12).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.quotient_graded, AbelianInvariants::free(1));
        assert_eq!(rep.kernel_graded, AbelianInvariants::free(1));

        let rep = vdb_check(&r2(), 12).unwrap();
        assert!(rep.passed());
        assert!(rep.quotient_graded.is_trivial());
        assert!(rep.kernel_graded.is_trivial());

        let rep = vdb_check(&c2(), 12).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.quotient_graded, AbelianInvariants::free(1));
        assert_eq!(rep.kernel_graded, AbelianInvariants::free(1));
    }

    #[test]
    fn cone_examples() {
        // x = [v] in R₁ is its own certificate
        let g = r1();
        let x = vec![GroupRingElement::one(g.group().clone())];
        match positive_cone_membership(&g, &x, 2, 3).unwrap() {
            ConeMembership::Found { combination } => {
                assert_eq!(combination, vec![("v0".to_string(), 0, 1)]);
            }
            other => panic!("expected certificate, got {other:?}"),
        }

        // [v] ≡ σ[w] in the arrow graph
        let arrow = WeightedGraph::from_adjacency(&[vec![0, 1], vec![0, 0]]);
        let x = vec![
            GroupRingElement::one(arrow.group().clone()),
            GroupRingElement::zero(arrow.group().clone()),
        ];
        match positive_cone_membership(&arrow, &x, 2, 3).unwrap() {
            ConeMembership::Found { combination } => {
                assert!(!combination.is_empty());
            }
            other => panic!("expected certificate, got {other:?}"),
        }

        // −[v] in a sink graph is never in the cone
        let g = sink();
        let x = vec![GroupRingElement::constant(g.group().clone(), BigInt::from(-1))];
        assert!(matches!(
            positive_cone_membership(&g, &x, 2, 3).unwrap(),
            ConeMembership::NotFound { .. }
        ));
    }
}
