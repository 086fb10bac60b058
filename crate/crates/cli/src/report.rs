//! Serializable reports. Field order is the JSON key order; all indices are
//! 1-based and all numbers other than counts are exact string rationals.

use std::collections::BTreeMap;

use bernstein_core::bernstein::{self, IdentitySuite};
use bernstein_core::classify::{self, Classification, MainTheoremReport};
use bernstein_core::forms::{self, GeneStructure};
use bernstein_core::lattice::{self, FaceRecord, FaceSummary};
use bernstein_core::normality::{self, NormalityReport, UltranormalityReport, Witness};
use bernstein_core::rational::format_rational;
use bernstein_core::{AlgebraType, IndexSet, InheritanceTensor, RegularityVerdict, Vector};
use serde::Serialize;

use crate::error::CliError;

pub const TOOL: &str = "bernstein-lab";

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub tool: &'static str,
    pub version: &'static str,
    pub input_sha256: String,
}

impl Provenance {
    pub fn new(input_sha256: String) -> Self {
        Provenance {
            tool: TOOL,
            version: env!("CARGO_PKG_VERSION"),
            input_sha256,
        }
    }
}

fn one_based(s: &IndexSet) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}

fn coords(v: &Vector) -> Vec<String> {
    v.coords().iter().map(format_rational).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Validity {
    pub stochastic: bool,
    pub symmetric: bool,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TypeJson {
    pub m: usize,
    pub delta: usize,
}

impl From<AlgebraType> for TypeJson {
    fn from(t: AlgebraType) -> Self {
        TypeJson {
            m: t.m,
            delta: t.delta,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularJson {
    pub invariant_dimension: bool,
    pub peirce_products: bool,
    pub polarized_identity: bool,
    pub agree: bool,
    pub regular: bool,
}

impl From<RegularityVerdict> for RegularJson {
    fn from(v: RegularityVerdict) -> Self {
        RegularJson {
            invariant_dimension: v.invariant_dimension,
            peirce_products: v.peirce_products,
            polarized_identity: v.polarized_identity,
            agree: v.agree(),
            regular: v.regular(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub condition: &'static str,
    pub indices: Vec<usize>,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson {
            condition: w.condition.name(),
            indices: w.indices.iter().map(|i| i + 1).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalityJson {
    pub normal: bool,
    pub nondegenerate: bool,
    pub externally_irreducible: bool,
    pub internally_irreducible: bool,
    pub witnesses: Vec<WitnessJson>,
}

impl From<&NormalityReport> for NormalityJson {
    fn from(r: &NormalityReport) -> Self {
        NormalityJson {
            normal: r.is_normal(),
            nondegenerate: r.nondegenerate,
            externally_irreducible: r.externally_irreducible,
            internally_irreducible: r.internally_irreducible,
            witnesses: r.witnesses.iter().map(WitnessJson::from).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct UltranormalJson {
    pub ultranormal: bool,
    pub failing_faces: Vec<Vec<usize>>,
}

impl From<&UltranormalityReport> for UltranormalJson {
    fn from(r: &UltranormalityReport) -> Self {
        UltranormalJson {
            ultranormal: r.ultranormal,
            failing_faces: r.failing_faces.iter().map(|(f, _)| one_based(f)).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CellJson {
    pub index: usize,
    pub row: usize,
    pub col: usize,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind")]
pub enum ClassificationJson {
    Constant {
        value: Vec<String>,
    },
    Unit {
        n: usize,
    },
    ExtendedMendel {
        m: usize,
        delta: usize,
        pairs: Vec<[usize; 2]>,
        alpha: Vec<String>,
        beta: Vec<String>,
        /// `relabeling[new - 1]` is the input index placed at `new`.
        relabeling: Vec<usize>,
    },
    ExtendedQuadrille {
        nu: usize,
        nu_bar: usize,
        cells: Vec<CellJson>,
    },
    Unclassified {
        diagnostics: Vec<String>,
    },
}

impl From<&Classification> for ClassificationJson {
    fn from(c: &Classification) -> Self {
        match c {
            Classification::Constant { value } => ClassificationJson::Constant {
                value: coords(value),
            },
            Classification::Unit { n } => ClassificationJson::Unit { n: *n },
            Classification::ExtendedMendel { params, relabeling } => {
                ClassificationJson::ExtendedMendel {
                    m: params.m,
                    delta: params.delta(),
                    pairs: params.pairs.iter().map(|&(i, k)| [i + 1, k + 1]).collect(),
                    alpha: params.alpha.iter().map(format_rational).collect(),
                    beta: params.beta.iter().map(format_rational).collect(),
                    relabeling: relabeling.iter().map(|i| i + 1).collect(),
                }
            }
            Classification::ExtendedQuadrille { labeling } => {
                ClassificationJson::ExtendedQuadrille {
                    nu: labeling.nu,
                    nu_bar: labeling.nu_bar,
                    cells: labeling
                        .cells
                        .iter()
                        .enumerate()
                        .map(|(index, &(row, col))| CellJson {
                            index: index + 1,
                            row: row + 1,
                            col: col + 1,
                        })
                        .collect(),
                }
            }
            Classification::Unclassified { diagnostics } => ClassificationJson::Unclassified {
                diagnostics: diagnostics.clone(),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FaceSummaryJson {
    pub invariant: usize,
    pub essential: usize,
    pub constant: usize,
    /// Cell dimension to number of essential faces.
    pub cell_dims: BTreeMap<String, usize>,
}

impl From<&FaceSummary> for FaceSummaryJson {
    fn from(s: &FaceSummary) -> Self {
        FaceSummaryJson {
            invariant: s.invariant,
            essential: s.essential,
            constant: s.constant,
            // zero-padded so that string order is numeric order
            cell_dims: s
                .cell_dims
                .iter()
                .map(|(d, c)| (format!("{d:02}"), *c))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    #[serde(flatten)]
    pub provenance: Provenance,
    pub n: usize,
    pub validity: Validity,
    pub bernstein: bool,
    #[serde(rename = "type")]
    pub algebra_type: Option<TypeJson>,
    #[serde(rename = "dim_J")]
    pub dim_j: usize,
    pub canonical_rays: Vec<Vec<String>>,
    pub r: usize,
    pub gene_structure: &'static str,
    pub regular: Option<RegularJson>,
    pub normality: NormalityJson,
    pub ultranormal: UltranormalJson,
    pub classification: Option<ClassificationJson>,
    pub faces: FaceSummaryJson,
    pub main_theorem_status: &'static str,
}

pub fn analysis(a: &InheritanceTensor, provenance: Provenance) -> Result<AnalysisReport, CliError> {
    let is_b = bernstein::is_bernstein(a);
    let (algebra_type, verdict) = if is_b {
        (
            Some(bernstein::algebra_type(a)?),
            Some(bernstein::regularity_criteria(a)?),
        )
    } else {
        (None, None)
    };
    let cone = forms::canonical_cone_basis(a)?;
    let gene = forms::gene_structure_kind(a)?;
    let normal = normality::is_normal(a);
    let ultra = normality::is_ultranormal(a)?;
    let classification = if is_b {
        Some(ClassificationJson::from(&classify::recognize(a)?))
    } else {
        None
    };
    let faces = lattice::invariant_faces(a)?;
    let theorem =
        MainTheoremReport::from_verdicts(a, is_b, ultra.ultranormal, verdict.map(|v| v.regular()));
    Ok(AnalysisReport {
        provenance,
        n: a.dim(),
        // enforced when the tensor is built
        validity: Validity {
            stochastic: true,
            symmetric: true,
        },
        bernstein: is_b,
        algebra_type: algebra_type.map(TypeJson::from),
        dim_j: cone.dim_j,
        canonical_rays: cone
            .rays
            .iter()
            .map(|f| f.coeffs.iter().map(format_rational).collect())
            .collect(),
        r: cone.r(),
        gene_structure: gene_name(gene),
        regular: verdict.map(RegularJson::from),
        normality: NormalityJson::from(&normal),
        ultranormal: UltranormalJson::from(&ultra),
        classification,
        faces: FaceSummaryJson::from(&lattice::summarize(&faces)),
        main_theorem_status: theorem.status(),
    })
}

fn gene_name(g: GeneStructure) -> &'static str {
    match g {
        GeneStructure::Elementary => "Elementary",
        GeneStructure::NonElementary => "NonElementary",
        GeneStructure::NotRegular => "NotRegular",
    }
}

/// The classification-related subset of an analysis.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    #[serde(flatten)]
    pub provenance: Provenance,
    pub n: usize,
    pub bernstein: bool,
    #[serde(rename = "type")]
    pub algebra_type: Option<TypeJson>,
    pub regular: Option<bool>,
    pub normal: bool,
    pub classification: Option<ClassificationJson>,
}

pub fn classification(
    a: &InheritanceTensor,
    provenance: Provenance,
) -> Result<ClassifyReport, CliError> {
    let is_b = bernstein::is_bernstein(a);
    let (algebra_type, regular, classification) = if is_b {
        (
            Some(TypeJson::from(bernstein::algebra_type(a)?)),
            Some(bernstein::is_regular(a)?),
            Some(ClassificationJson::from(&classify::recognize(a)?)),
        )
    } else {
        (None, None, None)
    };
    Ok(ClassifyReport {
        provenance,
        n: a.dim(),
        bernstein: is_b,
        algebra_type,
        regular,
        normal: normality::is_normal(a).is_normal(),
        classification,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FaceJson {
    pub vertices: Vec<usize>,
    pub essential: bool,
    pub constant: bool,
    pub cell_dim: Option<usize>,
}

impl From<&FaceRecord> for FaceJson {
    fn from(f: &FaceRecord) -> Self {
        FaceJson {
            vertices: one_based(&f.vertices),
            essential: f.essential,
            constant: f.constant,
            cell_dim: f.cell_dim,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FacesReport {
    #[serde(flatten)]
    pub provenance: Provenance,
    pub n: usize,
    pub faces: Vec<FaceJson>,
    pub summary: FaceSummaryJson,
}

pub fn faces(a: &InheritanceTensor, provenance: Provenance) -> Result<FacesReport, CliError> {
    let faces = lattice::invariant_faces(a)?;
    Ok(FacesReport {
        provenance,
        n: a.dim(),
        faces: faces.iter().map(FaceJson::from).collect(),
        summary: FaceSummaryJson::from(&lattice::summarize(&faces)),
    })
}

/// One named family of checks in an identity suite.
#[derive(Debug, Clone, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub evaluations: usize,
    pub failures: usize,
    /// 1-based basis indices or sample numbers of the first failures.
    pub examples: Vec<Vec<usize>>,
}

impl CheckJson {
    pub fn new(name: impl Into<String>) -> Self {
        CheckJson {
            name: name.into(),
            evaluations: 0,
            failures: 0,
            examples: Vec::new(),
        }
    }

    pub fn record(&mut self, ok: bool, example: impl FnOnce() -> Vec<usize>) {
        self.evaluations += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < 5 {
                self.examples.push(example());
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentitiesReport {
    #[serde(flatten)]
    pub provenance: Provenance,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub bernstein: bool,
    pub notices: Vec<String>,
    pub checks: Vec<CheckJson>,
    pub passed: bool,
}

/// Per-identity counts of the exhaustive basis-idempotent suite.
pub fn suite_checks(suite: &IdentitySuite) -> Vec<CheckJson> {
    bernstein::IdempotentIdentity::ALL
        .iter()
        .map(|&id| {
            let failing: Vec<&Vec<usize>> = suite
                .failures
                .iter()
                .filter(|(_, f)| *f == id)
                .map(|(t, _)| t)
                .collect();
            CheckJson {
                name: format!("basis_idempotents/{}", id.name()),
                evaluations: suite.applicable.get(&id).copied().unwrap_or(0),
                failures: failing.len(),
                examples: failing
                    .iter()
                    .take(5)
                    .map(|t| t.iter().map(|i| i + 1).collect())
                    .collect(),
            }
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupJson {
    pub family: &'static str,
    pub m: usize,
    pub delta: usize,
    pub points: usize,
    pub passed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnomalyJson {
    pub point: String,
    pub anomalies: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub grid: BTreeMap<&'static str, String>,
    pub points: usize,
    pub passed: usize,
    pub groups: Vec<GroupJson>,
    pub anomalies: Vec<AnomalyJson>,
}
