//! Command implementations. Each command parses its input, runs the library,
//! and produces a typed report plus the process exit code; rendering to text
//! or JSON happens in `textout` / serde.

use std::path::{Path, PathBuf};

use arr_core::arrangement::{parse_arrangement, Arrangement, IndexSet};
use arr_core::holonomy::{
    check_decomposition, check_lcs_formula, kernel_report, phi_series, PhiSeries,
};
use arr_core::hypersolvable::{find_composition_series, vertical_deformation, verify_rank2_preserved};
use arr_core::lattice::{IntersectionLattice, LatticeError};

use crate::fileio;
use crate::reports::*;

/// Exit codes: 0 success/pass, 1 usage or input errors, 2 failed checks or
/// inapplicable inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Input(String),
    /// The computation was aborted or a required classification failed.
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 1,
            CliError::Check(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Input(m) | CliError::Check(m) => m,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub max_degree: usize,
    pub seed: Option<u64>,
    pub max_flats: Option<usize>,
    /// Accepted as a hint; the implementation is single-threaded.
    pub threads: Option<usize>,
    pub output: Option<PathBuf>,
}

impl Default for Options {
    fn default() -> Self {
        Options { max_degree: 5, seed: None, max_flats: Some(100_000), threads: None, output: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Report {
    Lattice(LatticeReport),
    Supersolvable(SupersolvableReport),
    Hypersolvable(HypersolvableReport),
    Holonomy(HolonomyReport),
    Verify(VerifyReport),
    Deform(DeformReport),
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self {
            Report::Verify(v) if !v.pass => 2,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> String {
        let json = match self {
            Report::Lattice(r) => serde_json::to_string_pretty(r),
            Report::Supersolvable(r) => serde_json::to_string_pretty(r),
            Report::Hypersolvable(r) => serde_json::to_string_pretty(r),
            Report::Holonomy(r) => serde_json::to_string_pretty(r),
            Report::Verify(r) => serde_json::to_string_pretty(r),
            Report::Deform(r) => serde_json::to_string_pretty(r),
        };
        let mut s = json.expect("reports serialize");
        s.push('\n');
        s
    }
}

fn load(path: &Path) -> Result<Arrangement, CliError> {
    let text = fileio::read_file(path).map_err(CliError::Input)?;
    parse_arrangement(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn build_full_lattice(arr: &Arrangement, opts: &Options) -> Result<IntersectionLattice, CliError> {
    IntersectionLattice::build(arr, None, opts.max_flats).map_err(|e| match e {
        LatticeError::TooManyFlats { .. } => CliError::Check(e.to_string()),
        other => CliError::Check(other.to_string()),
    })
}

fn check_degree(opts: &Options) -> Result<(), CliError> {
    if opts.max_degree < 1 {
        return Err(CliError::Usage("--max-degree must be at least 1".into()));
    }
    Ok(())
}

pub fn cmd_lattice(path: &Path, opts: &Options) -> Result<Report, CliError> {
    let arr = load(path)?;
    let lat = build_full_lattice(&arr, opts)?;
    Ok(Report::Lattice(LatticeReport::build(&lat)))
}

pub fn cmd_supersolvable(path: &Path, opts: &Options) -> Result<Report, CliError> {
    let arr = load(path)?;
    let lat = build_full_lattice(&arr, opts)?;
    let chain = lat.find_modular_chain().expect("full lattice");
    Ok(Report::Supersolvable(SupersolvableReport::build(&lat, &chain)))
}

pub fn cmd_hypersolvable(path: &Path, _opts: &Options) -> Result<Report, CliError> {
    let arr = load(path)?;
    let series = find_composition_series(&arr);
    Ok(Report::Hypersolvable(HypersolvableReport::build(&series)))
}

/// Exponents from the preferred source: the modular chain when the input is
/// supersolvable, else a composition series when hypersolvable.
fn classify(
    arr: &Arrangement,
    lat: &IntersectionLattice,
) -> (Option<Vec<usize>>, Option<Vec<usize>>) {
    let chain_exps = lat
        .find_modular_chain()
        .expect("full lattice")
        .map(|c| lat.exponents_from_chain(&c));
    let series_exps = find_composition_series(arr).map(|s| s.exponents().to_vec());
    (chain_exps, series_exps)
}

fn checks_for(
    phi: &PhiSeries,
    chain_exps: &Option<Vec<usize>>,
    series_exps: &Option<Vec<usize>>,
) -> (Option<LcsCheckReport>, Option<DecompositionReport>) {
    let (exps, source) = match (chain_exps, series_exps) {
        (Some(e), _) => (e, "supersolvable"),
        (None, Some(e)) => (e, "hypersolvable"),
        (None, None) => return (None, None),
    };
    let lcs = check_lcs_formula(phi, exps);
    let dec = check_decomposition(phi, exps);
    (
        Some(LcsCheckReport::build(&lcs)),
        Some(DecompositionReport::build(&dec, exps, source)),
    )
}

pub fn cmd_holonomy(path: &Path, opts: &Options) -> Result<Report, CliError> {
    check_degree(opts)?;
    let arr = load(path)?;
    let phi = phi_series(&arr, opts.max_degree);
    let lat = build_full_lattice(&arr, opts)?;
    let (chain_exps, series_exps) = classify(&arr, &lat);
    let (lcs_check, decomposition_check) = checks_for(&phi, &chain_exps, &series_exps);
    let kernel = first_modular_split(&lat)
        .map(|(vertical, horizontal)| {
            let report = kernel_report(&arr, &vertical, opts.max_degree)
                .expect("vertical subarrangements are closed");
            KernelReportJson::build(&report, &vertical, &horizontal)
        });
    let (phi_vec, ideal_dims) = phi_fields(&phi);
    Ok(Report::Holonomy(HolonomyReport {
        n: arr.len(),
        max_degree: opts.max_degree,
        phi: phi_vec,
        ideal_dims,
        lcs_check,
        decomposition_check,
        kernel_report: kernel,
    }))
}

/// The lexicographically first modular corank-1 flat, split into vertical
/// and horizontal parts; `None` when no such flat exists or the horizontal
/// part would be empty.
fn first_modular_split(lat: &IntersectionLattice) -> Option<(IndexSet, IndexSet)> {
    let coatoms = lat.modular_coatoms().expect("full lattice");
    for id in coatoms {
        let (vertical, horizontal) =
            lat.split_by_modular_flat(id).expect("coatom is modular of corank 1");
        if !horizontal.is_empty() && !vertical.is_empty() {
            return Some((vertical, horizontal));
        }
    }
    None
}

pub fn cmd_verify(path: &Path, opts: &Options) -> Result<Report, CliError> {
    check_degree(opts)?;
    let arr = load(path)?;
    let phi = phi_series(&arr, opts.max_degree);
    let lat = build_full_lattice(&arr, opts)?;
    let (chain_exps, series_exps) = classify(&arr, &lat);
    let classification = match (&chain_exps, &series_exps) {
        (Some(_), _) => "supersolvable",
        (None, Some(_)) => "hypersolvable",
        (None, None) => "not_applicable",
    };
    let (lcs_check, decomposition_check) = checks_for(&phi, &chain_exps, &series_exps);
    let pass = classification != "not_applicable"
        && lcs_check.as_ref().is_some_and(|c| c.pass)
        && decomposition_check.as_ref().is_some_and(|c| c.pass);
    let (phi_vec, ideal_dims) = phi_fields(&phi);
    Ok(Report::Verify(VerifyReport {
        classification: classification.to_string(),
        exponents_chain: chain_exps,
        exponents_series: series_exps,
        phi: phi_vec,
        ideal_dims,
        lcs_check,
        decomposition_check,
        pass,
    }))
}

pub fn cmd_deform(path: &Path, opts: &Options) -> Result<Report, CliError> {
    let seed = opts
        .seed
        .ok_or_else(|| CliError::Usage("deform requires --seed".into()))?;
    let arr = load(path)?;
    let series = find_composition_series(&arr)
        .ok_or_else(|| CliError::Check("input is not hypersolvable".into()))?;
    let deformed = vertical_deformation(&arr, &series, seed)
        .map_err(|e| CliError::Check(e.to_string()))?;
    let rank2_preserved =
        verify_rank2_preserved(&arr, &deformed.base).expect("same hyperplane count");
    let lat = IntersectionLattice::build(&deformed.base, None, opts.max_flats)
        .map_err(|e| CliError::Check(e.to_string()))?;
    let chain = lat.find_modular_chain().expect("full lattice");
    let exponents = chain.as_ref().map(|c| lat.exponents_from_chain(c)).unwrap_or_default();

    let output = opts.output.clone().unwrap_or_else(|| {
        let mut p = path.as_os_str().to_owned();
        p.push(".deformed");
        PathBuf::from(p)
    });
    let sidecar = {
        let mut p = output.as_os_str().to_owned();
        p.push(".meta.json");
        PathBuf::from(p)
    };
    fileio::write_file(&output, &fileio::arrangement_to_text(&deformed.base))
        .map_err(CliError::Input)?;
    let mut sidecar_json = serde_json::to_string_pretty(&DeformSidecar::build(&deformed))
        .expect("sidecar serializes");
    sidecar_json.push('\n');
    fileio::write_file(&sidecar, &sidecar_json).map_err(CliError::Input)?;

    Ok(Report::Deform(DeformReport {
        seed,
        s: deformed.extra_dims,
        dim: deformed.base.dim(),
        n: deformed.base.len(),
        rank2_preserved,
        supersolvable: chain.is_some(),
        rank: lat.essential_rank(),
        exponents,
        output: output.display().to_string(),
        sidecar: sidecar.display().to_string(),
    }))
}
