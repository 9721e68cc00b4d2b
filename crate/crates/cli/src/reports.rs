//! Report types with stable JSON schemas, and their construction from the
//! library results. Serialization order is fixed by the struct layout, so
//! identical inputs produce byte-identical JSON.

use arr_core::arrangement::IndexSet;
use arr_core::freelie::TruncatedSeries;
use arr_core::holonomy::{DecompositionCheck, KernelReport, LcsCheck, PhiSeries};
use arr_core::hypersolvable::{CompositionSeries, DeformedArrangement, ExtensionKind};
use arr_core::lattice::{IntersectionLattice, ModularChain};
use serde::{Deserialize, Serialize};

fn set_to_vec(s: &IndexSet) -> Vec<usize> {
    s.iter().copied().collect()
}

fn series_to_i64(s: &TruncatedSeries) -> Vec<i64> {
    s.coeffs()
        .iter()
        .map(|c| i64::try_from(c).expect("series coefficient fits in i64 at desk scale"))
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FlatEntry {
    pub rank: usize,
    pub closure: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LatticeReport {
    pub dim: usize,
    pub n: usize,
    pub rank: usize,
    pub flats: Vec<FlatEntry>,
    pub supersolvable: bool,
    pub modular_chain: Option<Vec<Vec<usize>>>,
    pub exponents: Option<Vec<usize>>,
}

impl LatticeReport {
    pub fn build(lat: &IntersectionLattice) -> Self {
        let arr = lat.arrangement();
        let flats = lat
            .all_flats()
            .map(|id| FlatEntry {
                rank: lat.flat(id).rank(),
                closure: set_to_vec(lat.flat(id).closure()),
            })
            .collect();
        let chain = lat.find_modular_chain().expect("full lattice");
        let (modular_chain, exponents) = match &chain {
            Some(c) => (
                Some(c.flats().iter().map(|&id| set_to_vec(lat.flat(id).closure())).collect()),
                Some(lat.exponents_from_chain(c)),
            ),
            None => (None, None),
        };
        LatticeReport {
            dim: arr.dim(),
            n: arr.len(),
            rank: lat.essential_rank(),
            flats,
            supersolvable: chain.is_some(),
            modular_chain,
            exponents,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SupersolvableReport {
    pub dim: usize,
    pub n: usize,
    pub rank: usize,
    pub supersolvable: bool,
    pub modular_chain: Option<Vec<Vec<usize>>>,
    pub exponents: Option<Vec<usize>>,
}

impl SupersolvableReport {
    pub fn build(lat: &IntersectionLattice, chain: &Option<ModularChain>) -> Self {
        let (modular_chain, exponents) = match chain {
            Some(c) => (
                Some(c.flats().iter().map(|&id| set_to_vec(lat.flat(id).closure())).collect()),
                Some(lat.exponents_from_chain(c)),
            ),
            None => (None, None),
        };
        SupersolvableReport {
            dim: lat.arrangement().dim(),
            n: lat.arrangement().len(),
            rank: lat.essential_rank(),
            supersolvable: chain.is_some(),
            modular_chain,
            exponents,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HypersolvableReport {
    pub hypersolvable: bool,
    pub series: Option<Vec<Vec<usize>>>,
    pub extension_kinds: Option<Vec<String>>,
    pub exponents: Option<Vec<usize>>,
    pub ell: Option<usize>,
    pub s: Option<usize>,
}

impl HypersolvableReport {
    pub fn build(series: &Option<CompositionSeries>) -> Self {
        match series {
            Some(series) => {
                let (ell, s) = series.invariants();
                HypersolvableReport {
                    hypersolvable: true,
                    series: Some(series.steps().iter().map(set_to_vec).collect()),
                    extension_kinds: Some(
                        series
                            .extension_kinds()
                            .iter()
                            .map(|k| {
                                match k {
                                    ExtensionKind::Singular => "singular",
                                    ExtensionKind::Nonsingular => "nonsingular",
                                }
                                .to_string()
                            })
                            .collect(),
                    ),
                    exponents: Some(series.exponents().to_vec()),
                    ell: Some(ell),
                    s: Some(s),
                }
            }
            None => HypersolvableReport {
                hypersolvable: false,
                series: None,
                extension_kinds: None,
                exponents: None,
                ell: None,
                s: None,
            },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LcsCheckReport {
    pub lhs: Vec<i64>,
    pub rhs: Vec<i64>,
    pub pass: bool,
}

impl LcsCheckReport {
    pub fn build(check: &LcsCheck) -> Self {
        LcsCheckReport {
            lhs: series_to_i64(&check.lhs),
            rhs: series_to_i64(&check.rhs),
            pass: check.pass,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DecompositionDegreeReport {
    pub degree: usize,
    pub phi: usize,
    pub witt_sum: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DecompositionReport {
    pub exponents: Vec<usize>,
    pub source: String,
    pub per_degree: Vec<DecompositionDegreeReport>,
    pub first_failure: Option<usize>,
    pub pass: bool,
}

impl DecompositionReport {
    pub fn build(check: &DecompositionCheck, exponents: &[usize], source: &str) -> Self {
        DecompositionReport {
            exponents: exponents.to_vec(),
            source: source.to_string(),
            per_degree: check
                .per_degree
                .iter()
                .map(|d| DecompositionDegreeReport {
                    degree: d.degree,
                    phi: d.phi,
                    witt_sum: d.witt_sum,
                })
                .collect(),
            first_failure: check.first_failure,
            pass: check.pass,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct KernelDegreeReport {
    pub degree: usize,
    pub phi_parent: usize,
    pub phi_sub: usize,
    pub subalgebra_dim: usize,
    pub ideal_meet_dim: usize,
    pub kernel_dim: usize,
    pub additivity_ok: bool,
    pub bracket_ok: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct KernelReportJson {
    pub vertical: Vec<usize>,
    pub horizontal: Vec<usize>,
    pub per_degree: Vec<KernelDegreeReport>,
    pub pass: bool,
}

impl KernelReportJson {
    pub fn build(report: &KernelReport, vertical: &IndexSet, horizontal: &IndexSet) -> Self {
        KernelReportJson {
            vertical: set_to_vec(vertical),
            horizontal: set_to_vec(horizontal),
            per_degree: report
                .per_degree
                .iter()
                .map(|d| KernelDegreeReport {
                    degree: d.degree,
                    phi_parent: d.phi_parent,
                    phi_sub: d.phi_sub,
                    subalgebra_dim: d.subalgebra_dim,
                    ideal_meet_dim: d.ideal_meet_dim,
                    kernel_dim: d.kernel_dim,
                    additivity_ok: d.additivity_ok,
                    bracket_ok: d.bracket_ok,
                })
                .collect(),
            pass: report.pass,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HolonomyReport {
    pub n: usize,
    #[serde(rename = "N")]
    pub max_degree: usize,
    pub phi: Vec<usize>,
    pub ideal_dims: Vec<usize>,
    pub lcs_check: Option<LcsCheckReport>,
    pub decomposition_check: Option<DecompositionReport>,
    pub kernel_report: Option<KernelReportJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyReport {
    pub classification: String,
    pub exponents_chain: Option<Vec<usize>>,
    pub exponents_series: Option<Vec<usize>>,
    pub phi: Vec<usize>,
    pub ideal_dims: Vec<usize>,
    pub lcs_check: Option<LcsCheckReport>,
    pub decomposition_check: Option<DecompositionReport>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DeformReport {
    pub seed: u64,
    pub s: usize,
    pub dim: usize,
    pub n: usize,
    pub rank2_preserved: bool,
    pub supersolvable: bool,
    pub rank: usize,
    pub exponents: Vec<usize>,
    pub output: String,
    pub sidecar: String,
}

/// The sidecar written next to a deformed arrangement file.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DeformSidecar {
    pub seed: u64,
    pub offsets: Vec<Vec<i64>>,
}

impl DeformSidecar {
    pub fn build(d: &DeformedArrangement) -> Self {
        DeformSidecar {
            seed: d.seed,
            offsets: d
                .offsets
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| i64::try_from(v).expect("offsets are small integers"))
                        .collect()
                })
                .collect(),
        }
    }
}

pub fn phi_fields(phi: &PhiSeries) -> (Vec<usize>, Vec<usize>) {
    (phi.phi.clone(), phi.ideal_dims.clone())
}
