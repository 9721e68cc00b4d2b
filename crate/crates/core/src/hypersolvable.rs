//! Hypersolvable structure: closed, complete and solvable subarrangement
//! relations, composition series search, and the vertical deformation of a
//! hypersolvable arrangement to a supersolvable one in a larger ambient
//! space.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arrangement::{Arrangement, IndexSet};
use crate::lattice::{rank2_flats, IntersectionLattice};
use crate::linalg::{kernel_basis, SparseRow};
use crate::rng::SplitMix64;
use crate::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubsetError {
    /// The subarrangement is not a proper subset of its ambient set.
    NotProper,
    /// A pair has more than one completeness partner although the
    /// subarrangement is closed; this contradicts the closed-and-complete
    /// uniqueness constraint and indicates an internal inconsistency.
    PartnerNotUnique { a: usize, b: usize, first: usize, second: usize },
}

impl fmt::Display for SubsetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubsetError::NotProper => write!(f, "subarrangement must be a proper subset"),
            SubsetError::PartnerNotUnique { a, b, first, second } => write!(
                f,
                "pair ({a}, {b}) has partners {first} and {second} in a closed subarrangement"
            ),
        }
    }
}

impl core::error::Error for SubsetError {}

fn check_proper(b: &IndexSet, ambient: &IndexSet) -> Result<(), SubsetError> {
    if b.is_subset(ambient) && b.len() < ambient.len() {
        Ok(())
    } else {
        Err(SubsetError::NotProper)
    }
}

/// Is `b` closed in the subarrangement spanned by `ambient`: every pair in
/// `b` together with any outside hyperplane has rank 3? Vacuously true when
/// `b` has fewer than two members.
pub fn is_closed_within(
    arr: &Arrangement,
    b: &IndexSet,
    ambient: &IndexSet,
) -> Result<bool, SubsetError> {
    check_proper(b, ambient)?;
    let inside: Vec<usize> = b.iter().copied().collect();
    for (i, &alpha) in inside.iter().enumerate() {
        for &beta in &inside[i + 1..] {
            for &c in ambient.difference(b) {
                if arr.rank_of([alpha, beta, c]) != 3 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Closedness of `b` in the whole arrangement.
pub fn is_closed(arr: &Arrangement, b: &IndexSet) -> Result<bool, SubsetError> {
    is_closed_within(arr, b, &arr.full_set())
}

/// The partner assignment of a complete pair: for distinct outside
/// hyperplanes `a`, `b`, the member `f(a, b)` through their intersection.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartnerMap {
    partners: BTreeMap<(usize, usize), usize>,
}

impl PartnerMap {
    pub fn get(&self, a: usize, b: usize) -> Option<usize> {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.partners.get(&key).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.partners.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.partners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partners.is_empty()
    }
}

/// Is `b` complete in the subarrangement spanned by `ambient`: every pair of
/// outside hyperplanes has a member of `b` through its intersection? Returns
/// the full partner map on success; vacuously complete (empty map) when
/// fewer than two hyperplanes are outside. When `b` is also closed the
/// partner is checked to be unique.
pub fn is_complete_within(
    arr: &Arrangement,
    b: &IndexSet,
    ambient: &IndexSet,
) -> Result<Option<PartnerMap>, SubsetError> {
    check_proper(b, ambient)?;
    let closed = is_closed_within(arr, b, ambient)?;
    let outside: Vec<usize> = ambient.difference(b).copied().collect();
    let mut map = PartnerMap::default();
    for (i, &a) in outside.iter().enumerate() {
        for &c in &outside[i + 1..] {
            let mut found: Option<usize> = None;
            for &gamma in b.iter() {
                if arr.rank_of([a, c, gamma]) == 2 {
                    match found {
                        None => found = Some(gamma),
                        Some(first) if closed => {
                            return Err(SubsetError::PartnerNotUnique {
                                a,
                                b: c,
                                first,
                                second: gamma,
                            });
                        }
                        Some(_) => {}
                    }
                }
            }
            match found {
                None => return Ok(None),
                Some(gamma) => {
                    map.partners.insert((a, c), gamma);
                }
            }
        }
    }
    Ok(Some(map))
}

/// Completeness of `b` in the whole arrangement.
pub fn is_complete(arr: &Arrangement, b: &IndexSet) -> Result<Option<PartnerMap>, SubsetError> {
    is_complete_within(arr, b, &arr.full_set())
}

/// Is `b` solvable in the subarrangement spanned by `ambient`: closed,
/// complete, and the partners of any three outside hyperplanes either all
/// agree or meet in rank 2?
pub fn is_solvable_within(
    arr: &Arrangement,
    b: &IndexSet,
    ambient: &IndexSet,
) -> Result<bool, SubsetError> {
    if !is_closed_within(arr, b, ambient)? {
        return Ok(false);
    }
    let map = match is_complete_within(arr, b, ambient)? {
        Some(map) => map,
        None => return Ok(false),
    };
    let outside: Vec<usize> = ambient.difference(b).copied().collect();
    for (i, &a) in outside.iter().enumerate() {
        for (j, &c) in outside.iter().enumerate().skip(i + 1) {
            for &d in &outside[j + 1..] {
                let gammas: IndexSet = [
                    map.get(a, c).expect("complete map covers all pairs"),
                    map.get(c, d).expect("complete map covers all pairs"),
                    map.get(a, d).expect("complete map covers all pairs"),
                ]
                .into_iter()
                .collect();
                if gammas.len() > 1 && arr.rank_of(gammas.iter().copied()) != 2 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Solvability of `b` in the whole arrangement.
pub fn is_solvable(arr: &Arrangement, b: &IndexSet) -> Result<bool, SubsetError> {
    is_solvable_within(arr, b, &arr.full_set())
}

/// Whether one extension step raises the essential rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionKind {
    /// Rank stays the same.
    Singular,
    /// Rank grows by one.
    Nonsingular,
}

impl fmt::Display for ExtensionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtensionKind::Singular => write!(f, "singular"),
            ExtensionKind::Nonsingular => write!(f, "nonsingular"),
        }
    }
}

/// A composition series: a chain of solvable extensions from one hyperplane
/// up to the whole arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionSeries {
    steps: Vec<IndexSet>,
    kinds: Vec<ExtensionKind>,
    exponents: Vec<usize>,
    essential_rank: usize,
}

impl CompositionSeries {
    pub fn steps(&self) -> &[IndexSet] {
        &self.steps
    }

    /// Extension kinds, one per inclusion (length `ell - 1`).
    pub fn extension_kinds(&self) -> &[ExtensionKind] {
        &self.kinds
    }

    /// Hyperplane-count increments, one per step (length `ell`).
    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    /// `(ell, s)`: the series length and the number of singular extensions
    /// `s = ell - r`.
    pub fn invariants(&self) -> (usize, usize) {
        (self.steps.len(), self.steps.len() - self.essential_rank)
    }
}

/// Searches for a composition series by depth-first extension, preferring
/// the smallest extension set and then lexicographic order, so the first
/// series found is deterministic. Returns `None` when the arrangement is not
/// hypersolvable (the search is exhaustive).
pub fn find_composition_series(arr: &Arrangement) -> Option<CompositionSeries> {
    let full = arr.full_set();
    let essential_rank = arr.essential_rank();
    if arr.is_empty() {
        return Some(CompositionSeries {
            steps: Vec::new(),
            kinds: Vec::new(),
            exponents: Vec::new(),
            essential_rank,
        });
    }
    let mut failed: BTreeSet<IndexSet> = BTreeSet::new();
    for h in 0..arr.len() {
        let first: IndexSet = [h].into_iter().collect();
        let mut steps = alloc::vec![first.clone()];
        if extend_series(arr, &full, first, &mut steps, &mut failed) {
            return Some(finish_series(arr, steps, essential_rank));
        }
    }
    None
}

fn extend_series(
    arr: &Arrangement,
    full: &IndexSet,
    current: IndexSet,
    steps: &mut Vec<IndexSet>,
    failed: &mut BTreeSet<IndexSet>,
) -> bool {
    if &current == full {
        return true;
    }
    if failed.contains(&current) {
        return false;
    }
    let complement: Vec<usize> = full.difference(&current).copied().collect();
    let mut candidates: Vec<Vec<usize>> = (1u64..1 << complement.len())
        .map(|mask| {
            (0..complement.len()).filter(|i| mask >> i & 1 == 1).map(|i| complement[i]).collect()
        })
        .collect();
    candidates.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    for d in candidates {
        let next: IndexSet = current.iter().copied().chain(d.iter().copied()).collect();
        let solvable = is_solvable_within(arr, &current, &next)
            .expect("current is a proper subset of next");
        if !solvable {
            continue;
        }
        // closed + complete bounds the rank jump by one
        let dr = arr.rank_of(next.iter().copied()) - arr.rank_of(current.iter().copied());
        assert!(dr <= 1, "solvable extension must raise rank by at most one");
        steps.push(next.clone());
        if extend_series(arr, full, next, steps, failed) {
            return true;
        }
        steps.pop();
    }
    failed.insert(current);
    false
}

fn finish_series(arr: &Arrangement, steps: Vec<IndexSet>, essential_rank: usize) -> CompositionSeries {
    let kinds = steps
        .windows(2)
        .map(|w| {
            if arr.rank_of(w[1].iter().copied()) == arr.rank_of(w[0].iter().copied()) {
                ExtensionKind::Singular
            } else {
                ExtensionKind::Nonsingular
            }
        })
        .collect();
    let mut exponents = alloc::vec![steps[0].len()];
    exponents.extend(steps.windows(2).map(|w| w[1].len() - w[0].len()));
    CompositionSeries { steps, kinds, exponents, essential_rank }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeformError {
    /// No verified deformation was found within the retry budget.
    Failed { attempts: usize, last_failure: String },
    /// The two arrangements cannot be compared index by index.
    SizeMismatch { left: usize, right: usize },
}

impl fmt::Display for DeformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeformError::Failed { attempts, last_failure } => {
                write!(f, "no valid deformation after {attempts} attempts: {last_failure}")
            }
            DeformError::SizeMismatch { left, right } => {
                write!(f, "arrangements have {left} and {right} hyperplanes")
            }
        }
    }
}

impl core::error::Error for DeformError {}

/// A vertical deformation: the original forms extended by integer offset
/// coordinates, one fresh coordinate per singular extension.
#[derive(Clone, Debug)]
pub struct DeformedArrangement {
    /// The deformed arrangement in `dim + s` coordinates (equals the input
    /// arrangement when `s = 0`).
    pub base: Arrangement,
    /// Offset vector of each hyperplane, length `s`.
    pub offsets: Vec<Vec<BigInt>>,
    /// Seed that produced the offsets.
    pub seed: u64,
    /// Number of added coordinates.
    pub extra_dims: usize,
}

/// Do two arrangements on the same index set have identical rank-2
/// truncated lattices (equal closure families)?
pub fn verify_rank2_preserved(a: &Arrangement, b: &Arrangement) -> Result<bool, DeformError> {
    if a.len() != b.len() {
        return Err(DeformError::SizeMismatch { left: a.len(), right: b.len() });
    }
    let family = |arr: &Arrangement| -> BTreeSet<IndexSet> {
        rank2_flats(arr).into_iter().map(|f| f.closure().clone()).collect()
    };
    Ok(family(a) == family(b))
}

const MAX_DEFORM_ATTEMPTS: usize = 32;
const OFFSET_COEFF_BOUND: u64 = 64;

/// Constructs a vertical deformation of a hypersolvable arrangement: offsets
/// are drawn (seeded) from the exact solution space of the rank-2 incidence
/// constraints, with support restricted to the coordinates of singular
/// extensions at or before each hyperplane's entry step. Every draw is then
/// verified — rank-2 lattice preservation and supersolvability of rank
/// `ell` — and redrawn on failure, so a returned value is self-certifying.
pub fn vertical_deformation(
    arr: &Arrangement,
    series: &CompositionSeries,
    seed: u64,
) -> Result<DeformedArrangement, DeformError> {
    let (ell, s) = series.invariants();
    let n = arr.len();
    if s == 0 {
        return Ok(DeformedArrangement {
            base: arr.clone(),
            offsets: alloc::vec![Vec::new(); n],
            seed,
            extra_dims: 0,
        });
    }
    // entry_ext[h]: index of the extension that brought h in (0 for the
    // starting hyperplane of the series).
    let mut entry_ext = alloc::vec![0usize; n];
    for (i, w) in series.steps.windows(2).enumerate() {
        for &h in w[1].difference(&w[0]) {
            entry_ext[h] = i + 1;
        }
    }
    let singular_exts: Vec<usize> = series
        .kinds
        .iter()
        .enumerate()
        .filter(|(_, k)| **k == ExtensionKind::Singular)
        .map(|(i, _)| i + 1)
        .collect();
    debug_assert_eq!(singular_exts.len(), s);

    // Linear constraints shared by all offset coordinates: inside every
    // rank-2 flat, offsets must extend the linear relations among the forms,
    // otherwise the flat's closure would change.
    let mut relation_rows: Vec<SparseRow> = Vec::new();
    for flat in rank2_flats(arr) {
        let members: Vec<usize> = flat.closure().iter().copied().collect();
        if members.len() < 3 {
            continue;
        }
        let (a, b) = (members[0], members[1]);
        for &c in &members[2..] {
            let (lambda, mu) = combination_coefficients(arr, a, b, c);
            let mut dense = alloc::vec![Rat::zero(); n];
            dense[a] = lambda;
            dense[b] = mu;
            dense[c] = -Rat::from(BigInt::from(1));
            relation_rows.push(SparseRow::from_rationals(&dense));
        }
    }

    // Per coordinate: add support constraints (hyperplanes entering before
    // the singular extension stay at zero) and solve exactly.
    let mut kernels: Vec<Vec<SparseRow>> = Vec::with_capacity(s);
    for &ext in &singular_exts {
        let mut rows = relation_rows.clone();
        for (h, &entered) in entry_ext.iter().enumerate() {
            if entered < ext {
                rows.push(SparseRow::unit(h));
            }
        }
        kernels.push(kernel_basis(n, &rows));
    }

    let mut rng = SplitMix64::new(seed);
    let mut last_failure = String::from("no attempt made");
    for attempt in 0..MAX_DEFORM_ATTEMPTS {
        let mut offsets = alloc::vec![alloc::vec![BigInt::zero(); s]; n];
        for (k, kernel) in kernels.iter().enumerate() {
            for basis_vec in kernel {
                let coeff = BigInt::from(rng.below(OFFSET_COEFF_BOUND));
                if coeff.is_zero() {
                    continue;
                }
                for (h, v) in basis_vec.iter() {
                    offsets[h][k] += v * &coeff;
                }
            }
        }
        let forms: Vec<Vec<Rat>> = (0..n)
            .map(|h| {
                arr.hyperplane(h)
                    .coeffs()
                    .iter()
                    .cloned()
                    .chain(offsets[h].iter().map(|v| Rat::from(v.clone())))
                    .collect()
            })
            .collect();
        let base = match Arrangement::new(arr.dim() + s, forms) {
            Ok(base) => base,
            Err(e) => {
                last_failure = alloc::format!("attempt {attempt}: degenerate forms: {e}");
                continue;
            }
        };
        if !verify_rank2_preserved(arr, &base)? {
            last_failure = alloc::format!("attempt {attempt}: rank-2 lattice not preserved");
            continue;
        }
        let lat = match IntersectionLattice::build(&base, None, None) {
            Ok(lat) => lat,
            Err(e) => {
                last_failure = alloc::format!("attempt {attempt}: lattice build failed: {e}");
                continue;
            }
        };
        if lat.essential_rank() != ell {
            last_failure = alloc::format!(
                "attempt {attempt}: deformation has rank {}, expected {ell}",
                lat.essential_rank()
            );
            continue;
        }
        if !lat.is_supersolvable().expect("full lattice") {
            last_failure = alloc::format!("attempt {attempt}: deformation is not supersolvable");
            continue;
        }
        return Ok(DeformedArrangement { base, offsets, seed, extra_dims: s });
    }
    Err(DeformError::Failed { attempts: MAX_DEFORM_ATTEMPTS, last_failure })
}

/// Coefficients expressing form `c` inside the rank-2 span of forms `a`, `b`.
fn combination_coefficients(arr: &Arrangement, a: usize, b: usize, c: usize) -> (Rat, Rat) {
    let fa = arr.hyperplane(a).coeffs();
    let fb = arr.hyperplane(b).coeffs();
    let fc = arr.hyperplane(c).coeffs();
    for i in 0..fa.len() {
        for j in 0..fa.len() {
            if i == j {
                continue;
            }
            let det = &fa[i] * &fb[j] - &fa[j] * &fb[i];
            if det.is_zero() {
                continue;
            }
            let lambda = (&fc[i] * &fb[j] - &fc[j] * &fb[i]) / &det;
            let mu = (&fa[i] * &fc[j] - &fa[j] * &fc[i]) / &det;
            debug_assert!(
                (0..fa.len()).all(|k| &fa[k] * &lambda + &fb[k] * &mu == fc[k]),
                "rank-2 flat member must be a combination of the base pair"
            );
            return (lambda, mu);
        }
    }
    unreachable!("distinct hyperplanes have independent forms");
}
