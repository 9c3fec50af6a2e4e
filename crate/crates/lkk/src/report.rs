//! Report types emitted on standard output, one per subcommand. All fields
//! serialize in a fixed order; repeated runs are byte-identical.

use lkk_core::bf::{BfGraded, PurityReport, SequenceTerms, VdbReport};
use lkk_core::classify::{IsoCertificate, IsoVerdict, PointedStatus};
use lkk_core::cover::ColimitReport;
use lkk_core::fp_module::{FpModule, InvariantBattery, Relations, ZeroVerdict};
use lkk_core::int_mat::{class_in_cokernel, AbelianInvariants, IntMatrix};
use lkk_core::laurent::LaurentMatrix;
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Serialize)]
pub struct ValidateReport {
    pub violations: Vec<String>,
}

#[derive(Serialize)]
pub struct AbelianReport {
    pub torsion: Vec<String>,
    pub free_rank: usize,
    pub display: String,
}

impl AbelianReport {
    pub fn new(inv: &AbelianInvariants) -> Self {
        AbelianReport {
            torsion: inv.torsion.iter().map(|t| t.to_string()).collect(),
            free_rank: inv.free_rank,
            display: inv.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct ModpProfileEntry {
    pub p: u64,
    pub u: u64,
    pub dim: usize,
}

#[derive(Serialize)]
pub struct BatteryReport {
    pub rank_over_q_laurent: usize,
    pub eval_sigma_1: AbelianReport,
    pub eval_sigma_minus_1: AbelianReport,
    pub modp_profiles: Vec<ModpProfileEntry>,
    pub fitting_gcds: Vec<String>,
    pub fitting_truncated: bool,
}

impl BatteryReport {
    pub fn new(b: &InvariantBattery) -> Self {
        BatteryReport {
            rank_over_q_laurent: b.rank_over_q_laurent,
            eval_sigma_1: AbelianReport::new(&b.eval_sigma_1),
            eval_sigma_minus_1: AbelianReport::new(&b.eval_sigma_minus_1),
            modp_profiles: b
                .modp_profiles
                .iter()
                .map(|(&(p, u), &dim)| ModpProfileEntry { p, u, dim })
                .collect(),
            fitting_gcds: b.fitting_gcds.iter().map(|g| g.to_text()).collect(),
            fitting_truncated: b.fitting_truncated,
        }
    }
}

/// Where the pointed class [1] sits in the σ = ±1 evaluations, as
/// coordinates in the invariant-factor basis.
#[derive(Serialize)]
pub struct PointReport {
    pub point: Vec<String>,
    pub class_at_sigma_1: Vec<String>,
    pub class_at_sigma_minus_1: Vec<String>,
}

impl PointReport {
    pub fn new(bf: &BfGraded) -> Option<PointReport> {
        let rel = bf.module.laurent_relations().ok()?;
        let ones: Vec<BigInt> = vec![BigInt::from(1); bf.module.generators.len()];
        let coords = |m: &IntMatrix| -> Vec<String> {
            class_in_cokernel(m, &ones).iter().map(|c| c.to_string()).collect()
        };
        Some(PointReport {
            point: bf.point.iter().map(|p| p.to_text()).collect(),
            class_at_sigma_1: coords(&rel.evaluate_at_unit(1).ok()?),
            class_at_sigma_minus_1: coords(&rel.evaluate_at_unit(-1).ok()?),
        })
    }
}

fn relations_rows(r: &Relations) -> Vec<Vec<String>> {
    match r {
        Relations::Int(m) => crate::format::matrix_to_rows(m),
        Relations::GroupRing(m) => (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_text()).collect())
            .collect(),
        Relations::Field(m) => (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_text()).collect())
            .collect(),
    }
}

/// `{"base":"Z[s^±1]","generators":[...],"relations":[[...]],"battery":{...}}`
/// Relations are row-major: one row per generator, one column per relation.
#[derive(Serialize)]
pub struct ModuleReport {
    pub base: String,
    pub generators: Vec<String>,
    pub relations: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub battery: Option<BatteryReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pointed: Option<PointReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients_mod: Option<SequenceReport>,
}

impl ModuleReport {
    pub fn new(m: &FpModule, battery: Option<&InvariantBattery>) -> Self {
        ModuleReport {
            base: m.relations.base_name(),
            generators: m.generators.clone(),
            relations: relations_rows(&m.relations),
            battery: battery.map(BatteryReport::new),
            pointed: None,
            coefficients_mod: None,
        }
    }
}

#[derive(Serialize)]
pub struct SequencePrimePart {
    pub prime: u64,
    pub exponent: u32,
    pub diagonal_factors: Vec<String>,
    pub free_rank: usize,
}

#[derive(Serialize)]
pub struct SequenceReport {
    pub modulus: u64,
    pub coker_parts: Vec<SequencePrimePart>,
    pub kernel_deficiency: Vec<(u64, usize)>,
    pub kernel_is_zero: bool,
}

impl SequenceReport {
    pub fn new(t: &SequenceTerms) -> Self {
        SequenceReport {
            modulus: t.modulus,
            coker_parts: t
                .prime_parts
                .iter()
                .map(|p| SequencePrimePart {
                    prime: p.prime,
                    exponent: p.exponent,
                    diagonal_factors: p.diagonal_factors.clone(),
                    free_rank: p.free_rank,
                })
                .collect(),
            kernel_deficiency: t.kernel_deficiency.clone(),
            kernel_is_zero: t.kernel_is_zero(),
        }
    }
}

#[derive(Serialize)]
pub struct InvariantsReport {
    pub battery: BatteryReport,
    pub ungraded_bowen_franks: AbelianReport,
    pub nonvanishing_witness: Option<String>,
    pub pointed: Option<PointReport>,
}

#[derive(Serialize)]
pub struct PurityCheckReport {
    pub label: String,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct VdbJson {
    pub quotient_graded: AbelianReport,
    pub quotient_ungraded: AbelianReport,
    pub kernel_graded: AbelianReport,
    pub kernel_ungraded: AbelianReport,
    pub passed: bool,
}

impl VdbJson {
    pub fn new(r: &VdbReport) -> Self {
        VdbJson {
            quotient_graded: AbelianReport::new(&r.quotient_graded),
            quotient_ungraded: AbelianReport::new(&r.quotient_ungraded),
            kernel_graded: AbelianReport::new(&r.kernel_graded),
            kernel_ungraded: AbelianReport::new(&r.kernel_ungraded),
            passed: r.passed(),
        }
    }
}

#[derive(Serialize)]
pub struct PurityJson {
    pub checks: Vec<PurityCheckReport>,
    pub all_passed: bool,
}

impl PurityJson {
    pub fn new(r: &PurityReport) -> Self {
        PurityJson {
            checks: r
                .checks
                .iter()
                .map(|c| PurityCheckReport { label: c.label.clone(), passed: c.passed })
                .collect(),
            all_passed: r.all_passed(),
        }
    }
}

#[derive(Serialize)]
pub struct ColimitJson {
    pub max_radius: i64,
    pub stage_sink_counts: Vec<usize>,
    pub transition_ranks: Vec<usize>,
    pub stable_transition: Option<Vec<Vec<String>>>,
    pub tower_invariants_ok: bool,
    pub commutation_ok: bool,
    pub kernel_compatible: bool,
    pub surjectivity_degree: i64,
    pub surjectivity_ok: bool,
    pub consistent: bool,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
}

impl ColimitJson {
    pub fn new(r: &ColimitReport) -> Self {
        ColimitJson {
            max_radius: r.max_radius,
            stage_sink_counts: r.stage_sink_counts.clone(),
            transition_ranks: r.transition_ranks.clone(),
            stable_transition: r.stable_transition.as_ref().map(crate::format::matrix_to_rows),
            tower_invariants_ok: r.tower_invariants_ok,
            commutation_ok: r.commutation_ok,
            kernel_compatible: r.kernel_compatible,
            surjectivity_degree: r.surjectivity_degree,
            surjectivity_ok: r.surjectivity_ok,
            consistent: r.consistent(),
            verdict: if r.consistent() {
                format!("consistent up to radius {}", r.max_radius)
            } else {
                "mismatch".to_string()
            },
            mismatch: r.mismatch.clone(),
        }
    }
}

fn laurent_rows(m: &LaurentMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_text()).collect())
        .collect()
}

#[derive(Serialize)]
pub struct CertificateJson {
    pub u: Vec<Vec<String>>,
    pub w: Vec<Vec<String>>,
    pub u_inv_witness: Vec<Vec<String>>,
    pub w_prime: Vec<Vec<String>>,
    pub s: Vec<Vec<String>>,
    pub t: Vec<Vec<String>>,
    pub verified: bool,
}

impl CertificateJson {
    pub fn new(c: &IsoCertificate, x: &LaurentMatrix, y: &LaurentMatrix) -> Self {
        CertificateJson {
            u: laurent_rows(&c.u),
            w: laurent_rows(&c.w),
            u_inv_witness: laurent_rows(&c.u_inv_witness),
            w_prime: laurent_rows(&c.w_prime),
            s: laurent_rows(&c.s),
            t: laurent_rows(&c.t),
            verified: c.verify(x, y),
        }
    }
}

#[derive(Serialize)]
pub struct ClassifyJson {
    pub status: String,
    pub display: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinguished_by: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pointed_status: Option<String>,
    pub degree_bound: i64,
    pub coeff_bound: u64,
}

impl ClassifyJson {
    pub fn new(
        verdict: &IsoVerdict,
        x: &LaurentMatrix,
        y: &LaurentMatrix,
        degree_bound: i64,
        coeff_bound: u64,
    ) -> Self {
        let mut out = ClassifyJson {
            status: verdict.status_name().to_string(),
            display: verdict.to_string(),
            certificate: None,
            distinguished_by: None,
            left_value: None,
            right_value: None,
            pointed_status: None,
            degree_bound,
            coeff_bound,
        };
        match verdict {
            IsoVerdict::Isomorphic { certificate, pointed } => {
                out.certificate = Some(CertificateJson::new(certificate, x, y));
                out.pointed_status = pointed.as_ref().map(|p| match p {
                    PointedStatus::Mapped => "mapped".to_string(),
                    PointedStatus::NoCertificateAtBounds => {
                        "no pointed certificate found at bounds".to_string()
                    }
                });
            }
            IsoVerdict::Distinguished { invariant, left, right } => {
                out.distinguished_by = Some(invariant.clone());
                out.left_value = Some(left.clone());
                out.right_value = Some(right.clone());
            }
            IsoVerdict::Unknown { .. } => {}
        }
        out
    }
}

#[derive(Serialize)]
pub struct SnfJson {
    pub d: Vec<Vec<String>>,
    pub u: Vec<Vec<String>>,
    pub v: Vec<Vec<String>>,
    pub rank: usize,
    pub invariant_factors: Vec<String>,
    /// u·a·v = d re-multiplied from scratch before emitting.
    pub identity_checked: bool,
}

#[derive(Serialize)]
pub struct NonvanishingJson {
    pub nonzero: bool,
    pub verdict: String,
}

impl NonvanishingJson {
    pub fn new(v: &ZeroVerdict, nonzero: bool) -> Self {
        NonvanishingJson {
            nonzero,
            verdict: match v {
                ZeroVerdict::Yes => "zero module".to_string(),
                ZeroVerdict::No { witness } => format!("nonzero: {witness}"),
                ZeroVerdict::Unknown { reason } => format!("unknown: {reason}"),
            },
        }
    }
}
