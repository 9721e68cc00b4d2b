//! The holonomy Lie algebra of an arrangement, degree by degree: the graded
//! ideal generated by the rank-2 incidence brackets, the quotient dimensions
//! phi_n, and the structural checks (ideal restriction to closed
//! subarrangements, kernel freeness and dimension additivity, the graded
//! almost-direct bracket condition, and the lower-central-series formula).
//!
//! The ideal is computed by the adjoint recursion `I_n = [generators, I_(n-1)]`
//! starting from the degree-2 relations: the ideal is generated by
//! homogeneous degree-2 elements, and bracketing with the degree-1
//! generators reaches every graded piece. The recursion is validated against
//! a brute-force enumeration of all bracket trees in the test suite.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::arrangement::{Arrangement, IndexSet};
use crate::freelie::{
    exponent_polynomial, lcs_product, witt_dimension, HallBasis, LieElement, Rewriter,
    TruncatedSeries,
};
use crate::hypersolvable::{is_closed, SubsetError};
use crate::lattice::{rank2_flats, IntersectionLattice, LatticeError};
use crate::linalg::{spaces_equal, RowSpace, SparseRow};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HolonomyError {
    /// The subarrangement must be a proper subset.
    NotProper,
    /// The subarrangement must be closed.
    NotClosed,
    /// The subarrangement is not the full closure of its intersection.
    NotAFlat,
    /// The intersection of the subarrangement has the wrong rank.
    WrongRank { rank: usize, expected: usize },
    /// The intersection of the subarrangement is not a modular flat.
    NotModular,
    /// The lattice certifying the precondition could not be built.
    Lattice(LatticeError),
}

impl fmt::Display for HolonomyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HolonomyError::NotProper => write!(f, "subarrangement must be a proper subset"),
            HolonomyError::NotClosed => write!(f, "subarrangement must be closed"),
            HolonomyError::NotAFlat => {
                write!(f, "subarrangement must consist of all hyperplanes through its intersection")
            }
            HolonomyError::WrongRank { rank, expected } => {
                write!(f, "subarrangement has rank {rank}, expected {expected}")
            }
            HolonomyError::NotModular => write!(f, "intersection flat must be modular"),
            HolonomyError::Lattice(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for HolonomyError {}

impl From<SubsetError> for HolonomyError {
    fn from(e: SubsetError) -> Self {
        match e {
            SubsetError::NotProper => HolonomyError::NotProper,
            SubsetError::PartnerNotUnique { .. } => {
                unreachable!("closedness checks do not build partner maps")
            }
        }
    }
}

/// The degree-2 relations: for each rank-2 flat `L` and each hyperplane `H`
/// under it, the normal form of `[H, sum of hyperplanes under L]`.
pub fn ideal_generators(arr: &Arrangement, basis: &HallBasis) -> Vec<LieElement> {
    assert_eq!(basis.n_generators(), arr.len(), "basis must match the arrangement");
    assert!(basis.max_degree() >= 2, "generators live in degree 2");
    let mut rewriter = Rewriter::new(basis);
    let mut out = Vec::new();
    for flat in rank2_flats(arr) {
        let mut sum = LieElement::zero(1);
        for &h in flat.closure() {
            sum.add(&LieElement::word(basis, h));
        }
        for &h in flat.closure() {
            let gen = LieElement::word(basis, h);
            out.push(rewriter.bracket(&gen, &sum).expect("degree 2 fits any basis"));
        }
    }
    out
}

/// Row-space bases of the graded pieces of the holonomy ideal, canonical
/// (reduced echelon) per degree.
#[derive(Clone, Debug)]
pub struct GradedIdeal {
    basis: HallBasis,
    generators: Vec<LieElement>,
    /// `spaces[d - 2]` is the degree-`d` piece.
    spaces: Vec<RowSpace>,
}

impl GradedIdeal {
    pub fn basis(&self) -> &HallBasis {
        &self.basis
    }

    pub fn generators(&self) -> &[LieElement] {
        &self.generators
    }

    pub fn max_degree(&self) -> usize {
        self.basis.max_degree()
    }

    pub fn dim(&self, degree: usize) -> usize {
        match degree {
            0 | 1 => 0,
            d => self.spaces[d - 2].dim(),
        }
    }

    /// The reduced echelon basis of the degree-`d` piece (`d >= 2`).
    pub fn space(&self, degree: usize) -> &RowSpace {
        &self.spaces[degree - 2]
    }
}

/// Computes the graded ideal up to `max_degree` by the adjoint recursion.
pub fn graded_ideal(arr: &Arrangement, max_degree: usize) -> GradedIdeal {
    assert!(max_degree >= 1);
    let basis = HallBasis::new(arr.len(), max_degree);
    if max_degree < 2 {
        return GradedIdeal { basis, generators: Vec::new(), spaces: Vec::new() };
    }
    let generators = ideal_generators(arr, &basis);
    let mut rewriter = Rewriter::new(&basis);
    let mut spaces: Vec<RowSpace> = Vec::with_capacity(max_degree - 1);
    let mut deg2 = RowSpace::new(basis.count_in_degree(2));
    for g in &generators {
        deg2.insert(&g.to_row(&basis));
    }
    spaces.push(deg2);
    for d in 3..=max_degree {
        let mut space = RowSpace::new(basis.count_in_degree(d));
        let prev = spaces[d - 3].basis();
        for row in &prev {
            let elem = LieElement::from_row(&basis, d - 1, row);
            for g in 0..basis.n_generators() {
                let mut bracket = LieElement::zero(d);
                for (w, c) in elem.iter() {
                    let term = rewriter.bracket_words(g, w);
                    bracket.add_scaled(&term, c);
                }
                if !bracket.is_zero() {
                    space.insert(&bracket.to_row(&basis));
                }
            }
        }
        spaces.push(space);
    }
    GradedIdeal { basis, generators, spaces }
}

/// Graded dimensions of the holonomy Lie algebra: `phi[j - 1]` is the
/// dimension of the degree-`j` piece, computed as the free Lie algebra
/// dimension minus the ideal dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiSeries {
    pub n_hyperplanes: usize,
    pub max_degree: usize,
    pub phi: Vec<usize>,
    pub ideal_dims: Vec<usize>,
}

impl PhiSeries {
    pub fn phi_at(&self, degree: usize) -> usize {
        self.phi[degree - 1]
    }
}

/// Computes the quotient dimensions up to `max_degree` by exact elimination.
pub fn phi_series(arr: &Arrangement, max_degree: usize) -> PhiSeries {
    let ideal = graded_ideal(arr, max_degree);
    phi_from_ideal(arr, &ideal)
}

fn phi_from_ideal(arr: &Arrangement, ideal: &GradedIdeal) -> PhiSeries {
    let n = arr.len();
    let max_degree = ideal.max_degree();
    let ideal_dims: Vec<usize> = (1..=max_degree).map(|d| ideal.dim(d)).collect();
    let phi = (1..=max_degree).map(|d| witt_dimension(n, d) - ideal.dim(d)).collect();
    PhiSeries { n_hyperplanes: n, max_degree, phi, ideal_dims }
}

/// Outcome of the lower-central-series formula check: the product over
/// degrees of `(1 - t^j)^(phi_j)` against the exponent polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcsCheck {
    pub lhs: TruncatedSeries,
    pub rhs: TruncatedSeries,
    pub pass: bool,
}

pub fn check_lcs_formula(phi: &PhiSeries, exponents: &[usize]) -> LcsCheck {
    let lhs = lcs_product(&phi.phi);
    let rhs = exponent_polynomial(exponents, phi.max_degree);
    let pass = lhs == rhs;
    LcsCheck { lhs, rhs, pass }
}

/// Per-degree comparison of `phi_j` against the sum of Witt dimensions of
/// the exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionCheck {
    pub per_degree: Vec<DecompositionDegree>,
    pub first_failure: Option<usize>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionDegree {
    pub degree: usize,
    pub phi: usize,
    pub witt_sum: usize,
}

pub fn check_decomposition(phi: &PhiSeries, exponents: &[usize]) -> DecompositionCheck {
    let mut per_degree = Vec::with_capacity(phi.max_degree);
    let mut first_failure = None;
    for j in 1..=phi.max_degree {
        let witt_sum = exponents.iter().map(|&d| witt_dimension(d, j)).sum();
        let entry = DecompositionDegree { degree: j, phi: phi.phi_at(j), witt_sum };
        if entry.phi != entry.witt_sum && first_failure.is_none() {
            first_failure = Some(j);
        }
        per_degree.push(entry);
    }
    DecompositionCheck { per_degree, pass: first_failure.is_none(), first_failure }
}

/// Shared machinery for the subarrangement checks: the induced arrangement,
/// its own graded ideal, and the word correspondence between the two bases.
struct SubSplit {
    ideal_sub: GradedIdeal,
    /// Parent word -> word of the sub-basis, when all leaves lie in the sub.
    word_map: Vec<Option<usize>>,
    member_mask: u128,
}

fn build_split(arr: &Arrangement, b: &IndexSet, ideal_a: &GradedIdeal) -> SubSplit {
    let (sub_arr, sub_members) = arr.restriction(b);
    let ideal_sub = graded_ideal(&sub_arr, ideal_a.max_degree());
    let gen_map: BTreeMap<usize, usize> =
        sub_members.iter().enumerate().map(|(pos, &parent)| (parent, pos)).collect();
    let word_map = ideal_a.basis().map_to_subbasis(ideal_sub.basis(), &gen_map);
    let member_mask = b.iter().fold(0u128, |m, &h| m | (1u128 << h));
    SubSplit { ideal_sub, word_map, member_mask }
}

impl SubSplit {
    /// Positions (within the parent degree block) of words supported on the
    /// given leaf mask.
    fn positions_with_leaves_in(&self, basis: &HallBasis, degree: usize, mask: u128) -> Vec<usize> {
        basis
            .range_of_degree(degree)
            .filter(|&w| basis.leaf_mask(w) & !mask == 0)
            .map(|w| basis.position_in_degree(w))
            .collect()
    }

    /// The generator-killing projection of a parent degree-`d` row into
    /// sub-basis coordinates: words with outside leaves go to zero.
    fn project_row(&self, basis: &HallBasis, degree: usize, row: &SparseRow) -> SparseRow {
        SparseRow::from_entries(row.iter().filter_map(|(pos, c)| {
            self.word_map[basis.word_at(degree, pos)]
                .map(|w| (self.ideal_sub.basis().position_in_degree(w), c.clone()))
        }))
    }

    /// Reinterprets a parent row supported on sub-alphabet words as a row of
    /// the sub basis.
    fn transport_row(&self, basis: &HallBasis, degree: usize, row: &SparseRow) -> SparseRow {
        SparseRow::from_entries(row.iter().map(|(pos, c)| {
            let w = self.word_map[basis.word_at(degree, pos)]
                .expect("row must be supported on sub-alphabet words");
            (self.ideal_sub.basis().position_in_degree(w), c.clone())
        }))
    }

    /// Basis rows of the intersection of the parent ideal's degree-`d` piece
    /// with the span of words whose leaves lie in `mask`.
    fn ideal_meet_coordinate_span(
        &self,
        ideal_a: &GradedIdeal,
        degree: usize,
        mask: u128,
    ) -> Vec<SparseRow> {
        let basis = ideal_a.basis();
        let ncols = basis.count_in_degree(degree);
        let inside: Vec<bool> = {
            let mut v = alloc::vec![false; ncols];
            for p in self.positions_with_leaves_in(basis, degree, mask) {
                v[p] = true;
            }
            v
        };
        let outside_first: Vec<usize> = (0..ncols).filter(|&c| !inside[c]).collect();
        let mut space = RowSpace::with_priority(ncols, &outside_first);
        for row in ideal_a.space(degree).basis() {
            space.insert(&row);
        }
        space.basis_supported_in(|c| inside[c])
    }
}

/// Per-degree outcome of the ideal restriction check for a closed
/// subarrangement: the projection of the parent ideal must equal the sub
/// ideal, and so must the intersection of the parent ideal with the
/// subalgebra spanned by sub-alphabet words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionCheck {
    pub per_degree: Vec<RestrictionDegree>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionDegree {
    pub degree: usize,
    pub ideal_dim_parent: usize,
    pub ideal_dim_sub: usize,
    pub projection_matches: bool,
    pub intersection_matches: bool,
}

pub fn check_ideal_restriction(
    arr: &Arrangement,
    b: &IndexSet,
    max_degree: usize,
) -> Result<RestrictionCheck, HolonomyError> {
    if !is_closed(arr, b)? {
        return Err(HolonomyError::NotClosed);
    }
    let ideal_a = graded_ideal(arr, max_degree);
    let split = build_split(arr, b, &ideal_a);
    let basis = ideal_a.basis();
    let mut per_degree = Vec::new();
    for d in 2..=max_degree {
        let sub_ncols = split.ideal_sub.basis().count_in_degree(d);
        let mut projected = RowSpace::new(sub_ncols);
        for row in ideal_a.space(d).basis() {
            let p = split.project_row(basis, d, &row);
            if !p.is_zero() {
                projected.insert(&p);
            }
        }
        let projection_matches = spaces_equal(&projected, split.ideal_sub.space(d));

        let meet_rows = split.ideal_meet_coordinate_span(&ideal_a, d, split.member_mask);
        let mut meet_space = RowSpace::new(sub_ncols);
        for row in &meet_rows {
            meet_space.insert(&split.transport_row(basis, d, row));
        }
        let intersection_matches = spaces_equal(&meet_space, split.ideal_sub.space(d));

        per_degree.push(RestrictionDegree {
            degree: d,
            ideal_dim_parent: ideal_a.dim(d),
            ideal_dim_sub: split.ideal_sub.dim(d),
            projection_matches,
            intersection_matches,
        });
    }
    let pass = per_degree.iter().all(|d| d.projection_matches && d.intersection_matches);
    Ok(RestrictionCheck { per_degree, pass })
}

/// Per-degree kernel data for a closed subarrangement `B` of `A`: the kernel
/// of the induced surjection on holonomy Lie algebras is the subalgebra
/// generated by the outside hyperplanes, with graded dimension
/// `phi_n(A) - phi_n(B)`. The report verifies that dimension against the
/// subalgebra realization and checks the graded almost-direct bracket
/// condition `[kernel, B] inside kernel (mod ideal)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub per_degree: Vec<KernelDegree>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelDegree {
    pub degree: usize,
    pub phi_parent: usize,
    pub phi_sub: usize,
    /// Number of basis words over the outside alphabet.
    pub subalgebra_dim: usize,
    /// Dimension of the intersection with the parent ideal.
    pub ideal_meet_dim: usize,
    /// `subalgebra_dim - ideal_meet_dim`.
    pub kernel_dim: usize,
    pub additivity_ok: bool,
    /// Brackets of kernel words with members of `B` stay inside
    /// kernel-subalgebra + ideal. Trivially true in degree 1.
    pub bracket_ok: bool,
}

pub fn kernel_report(
    arr: &Arrangement,
    b: &IndexSet,
    max_degree: usize,
) -> Result<KernelReport, HolonomyError> {
    if !is_closed(arr, b)? {
        return Err(HolonomyError::NotClosed);
    }
    let ideal_a = graded_ideal(arr, max_degree);
    let split = build_split(arr, b, &ideal_a);
    let basis = ideal_a.basis();
    let phi_a = phi_from_ideal(arr, &ideal_a);
    let (sub_arr, _) = arr.restriction(b);
    let phi_b = phi_from_ideal(&sub_arr, &split.ideal_sub);
    let complement_mask = !split.member_mask
        & ((0..arr.len()).fold(0u128, |m, h| m | (1u128 << h)));

    let mut rewriter = Rewriter::new(basis);
    let mut per_degree = Vec::new();
    for d in 1..=max_degree {
        let k_positions = split.positions_with_leaves_in(basis, d, complement_mask);
        let subalgebra_dim = k_positions.len();
        let ideal_meet_dim = if d >= 2 {
            split.ideal_meet_coordinate_span(&ideal_a, d, complement_mask).len()
        } else {
            0
        };
        let kernel_dim = subalgebra_dim - ideal_meet_dim;
        let additivity_ok = phi_a.phi_at(d) == phi_b.phi_at(d) + kernel_dim;
        let bracket_ok = if d == 1 {
            true
        } else {
            // span of degree-d kernel words plus the ideal
            let mut target = ideal_a.space(d).clone();
            for &p in &k_positions {
                target.insert(&SparseRow::unit(p));
            }
            let lower = split.positions_with_leaves_in(basis, d - 1, complement_mask);
            let mut ok = true;
            'outer: for &p in &lower {
                let w = basis.word_at(d - 1, p);
                for &g in b.iter() {
                    let bracket = rewriter.bracket_words(w, g);
                    if !bracket.is_zero() && !target.contains(&bracket.to_row(basis)) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            ok
        };
        per_degree.push(KernelDegree {
            degree: d,
            phi_parent: phi_a.phi_at(d),
            phi_sub: phi_b.phi_at(d),
            subalgebra_dim,
            ideal_meet_dim,
            kernel_dim,
            additivity_ok,
            bracket_ok,
        });
    }
    let pass = per_degree.iter().all(|d| d.additivity_ok && d.bracket_ok);
    Ok(KernelReport { per_degree, pass })
}

/// Freeness of the horizontal subalgebra: for a subarrangement whose
/// intersection is a modular flat of corank 1 (and which contains every
/// hyperplane through that flat), the span of words over the complementary
/// alphabet meets the ideal trivially.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessCheck {
    pub per_degree: Vec<FreenessDegree>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessDegree {
    pub degree: usize,
    pub ideal_meet_dim: usize,
}

pub fn check_complement_freeness(
    lat: &IntersectionLattice,
    b: &IndexSet,
    max_degree: usize,
) -> Result<FreenessCheck, HolonomyError> {
    let arr = lat.arrangement();
    let closure = arr.closure(b);
    if &closure != b {
        return Err(HolonomyError::NotAFlat);
    }
    let rank = arr.rank_of(b.iter().copied());
    let expected = lat.essential_rank().saturating_sub(1);
    if rank != expected {
        return Err(HolonomyError::WrongRank { rank, expected });
    }
    let flat = lat.find(b).expect("closure of a set is a flat of the full lattice");
    if !lat.is_modular(flat).map_err(HolonomyError::Lattice)? {
        return Err(HolonomyError::NotModular);
    }
    let ideal_a = graded_ideal(arr, max_degree);
    let split = build_split(arr, b, &ideal_a);
    let complement_mask =
        !split.member_mask & ((0..arr.len()).fold(0u128, |m, h| m | (1u128 << h)));
    let mut per_degree = Vec::new();
    for d in 2..=max_degree {
        let meet = split.ideal_meet_coordinate_span(&ideal_a, d, complement_mask).len();
        per_degree.push(FreenessDegree { degree: d, ideal_meet_dim: meet });
    }
    let pass = per_degree.iter().all(|d| d.ideal_meet_dim == 0);
    Ok(FreenessCheck { per_degree, pass })
}

/// Convenience: the number of independent degree-2 relations predicted by
/// the rank-2 flats alone.
pub fn degree2_dim_prediction(arr: &Arrangement) -> usize {
    rank2_flats(arr).iter().map(|f| f.closure().len() - 1).sum()
}
