//! Central hyperplane arrangements over ℚ: representation, validation,
//! parsing of the text format, and exact rank computation for subsets.
//!
//! Only central arrangements are accepted: every hyperplane is the kernel of
//! a linear form with no constant term. Hyperplane identity is decided by the
//! canonical form (coefficients scaled so the first nonzero entry is 1), so
//! rescaled forms are rejected as duplicates while input order is preserved
//! for indexing and reporting.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::{RowSpace, SparseRow};
use crate::Rat;

/// Hyperplane index sets, ordered for deterministic iteration.
pub type IndexSet = BTreeSet<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrangementError {
    /// The defining form is the zero vector.
    ZeroForm { line: Option<usize> },
    /// Two hyperplanes have the same canonical form.
    Duplicate { line: Option<usize>, first: usize, second: usize },
    /// A coefficient row has the wrong number of entries.
    RaggedRow { line: Option<usize>, expected: usize, got: usize },
    /// A token is not an integer or `p/q` with positive `q`.
    MalformedRational { line: usize, token: String },
    /// Missing or unreadable `dim <l>` header.
    BadHeader { line: Option<usize> },
    /// A rescaling factor was zero.
    ZeroScale { index: usize },
}

impl fmt::Display for ArrangementError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn at(f: &mut fmt::Formatter<'_>, line: &Option<usize>) -> fmt::Result {
            match line {
                Some(l) => write!(f, " (line {l})"),
                None => Ok(()),
            }
        }
        match self {
            ArrangementError::ZeroForm { line } => {
                write!(f, "zero linear form does not define a hyperplane")?;
                at(f, line)
            }
            ArrangementError::Duplicate { line, first, second } => {
                write!(f, "duplicate hyperplane: #{second} repeats #{first}")?;
                at(f, line)
            }
            ArrangementError::RaggedRow { line, expected, got } => {
                write!(f, "expected {expected} coefficients, got {got}")?;
                at(f, line)
            }
            ArrangementError::MalformedRational { line, token } => {
                write!(f, "malformed rational `{token}` (line {line})")
            }
            ArrangementError::BadHeader { line } => {
                write!(f, "expected header `dim <positive integer>`")?;
                at(f, line)
            }
            ArrangementError::ZeroScale { index } => {
                write!(f, "cannot rescale hyperplane #{index} by zero")
            }
        }
    }
}

impl core::error::Error for ArrangementError {}

/// A hyperplane through the origin, given by its defining linear form.
#[derive(Clone, Debug)]
pub struct Hyperplane {
    coeffs: Vec<Rat>,
    canonical: Vec<Rat>,
    primitive: SparseRow,
    label: Option<String>,
}

impl Hyperplane {
    pub fn new(coeffs: Vec<Rat>) -> Result<Self, ArrangementError> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(ArrangementError::ZeroForm { line: None });
        }
        let first = coeffs.iter().find(|c| !c.is_zero()).unwrap().clone();
        let canonical: Vec<Rat> = coeffs.iter().map(|c| c / &first).collect();
        let primitive = SparseRow::from_rationals(&coeffs);
        Ok(Hyperplane { coeffs, canonical, primitive, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// The coefficients as given on input.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// The canonical form: scaled so the first nonzero entry is 1. Scalar
    /// multiples of the same form agree here, which is how duplicates are
    /// detected.
    pub fn canonical(&self) -> &[Rat] {
        &self.canonical
    }

    /// Primitive integer representative used for exact linear algebra.
    pub fn primitive_row(&self) -> &SparseRow {
        &self.primitive
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }
}

/// A central arrangement: ambient dimension plus an ordered, duplicate-free
/// list of hyperplanes. Immutable after construction; all queries are pure.
#[derive(Clone, Debug)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn new(dim: usize, forms: Vec<Vec<Rat>>) -> Result<Self, ArrangementError> {
        let mut hyperplanes = Vec::with_capacity(forms.len());
        for (i, row) in forms.into_iter().enumerate() {
            if row.len() != dim {
                return Err(ArrangementError::RaggedRow { line: None, expected: dim, got: row.len() });
            }
            let h = Hyperplane::new(row)?;
            if let Some(j) = hyperplanes.iter().position(|p: &Hyperplane| p.canonical == h.canonical) {
                return Err(ArrangementError::Duplicate { line: None, first: j, second: i });
            }
            hyperplanes.push(h);
        }
        Ok(Arrangement { dim, hyperplanes })
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_integers(dim: usize, forms: &[&[i64]]) -> Result<Self, ArrangementError> {
        Arrangement::new(
            dim,
            forms
                .iter()
                .map(|r| r.iter().map(|&x| Rat::from(BigInt::from(x))).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of hyperplanes.
    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane(&self, i: usize) -> &Hyperplane {
        &self.hyperplanes[i]
    }

    /// All indices `0..n` as a set.
    pub fn full_set(&self) -> IndexSet {
        (0..self.len()).collect()
    }

    /// Rank of the subset: the codimension of the intersection of the named
    /// hyperplanes, computed by exact elimination. The empty set has rank 0.
    pub fn rank_of(&self, set: impl IntoIterator<Item = usize>) -> usize {
        let mut sp = RowSpace::new(self.dim);
        for i in set {
            sp.insert(self.hyperplanes[i].primitive_row());
        }
        sp.dim()
    }

    /// Rank of the whole arrangement (codimension of the center).
    pub fn essential_rank(&self) -> usize {
        self.rank_of(0..self.len())
    }

    /// Row space spanned by the forms of `set`.
    pub(crate) fn span_of(&self, set: impl IntoIterator<Item = usize>) -> RowSpace {
        let mut sp = RowSpace::new(self.dim);
        for i in set {
            sp.insert(self.hyperplanes[i].primitive_row());
        }
        sp
    }

    /// Matroid closure of an index set: every hyperplane whose form already
    /// lies in the span of the set.
    pub fn closure(&self, set: &IndexSet) -> IndexSet {
        let span = self.span_of(set.iter().copied());
        (0..self.len())
            .filter(|&h| span.contains(self.hyperplanes[h].primitive_row()))
            .collect()
    }

    /// The subarrangement induced by `members` (sorted order), together with
    /// the map from new indices back to indices in `self`.
    pub fn restriction(&self, members: &IndexSet) -> (Arrangement, Vec<usize>) {
        let map: Vec<usize> = members.iter().copied().collect();
        let hyperplanes = map.iter().map(|&i| self.hyperplanes[i].clone()).collect();
        (Arrangement { dim: self.dim, hyperplanes }, map)
    }

    /// Reorders hyperplanes by `perm` (new index `i` holds old `perm[i]`).
    pub fn permuted(&self, perm: &[usize]) -> Arrangement {
        assert_eq!(perm.len(), self.len(), "permutation length mismatch");
        let hyperplanes = perm.iter().map(|&i| self.hyperplanes[i].clone()).collect();
        Arrangement { dim: self.dim, hyperplanes }
    }

    /// Rescales each defining form by the given nonzero rational.
    pub fn rescaled(&self, scales: &[Rat]) -> Result<Arrangement, ArrangementError> {
        assert_eq!(scales.len(), self.len(), "scale list length mismatch");
        if let Some(i) = scales.iter().position(|s| s.is_zero()) {
            return Err(ArrangementError::ZeroScale { index: i });
        }
        Arrangement::new(
            self.dim,
            self.hyperplanes
                .iter()
                .zip(scales)
                .map(|(h, s)| h.coeffs.iter().map(|c| c * s).collect())
                .collect(),
        )
    }
}

fn parse_rational(token: &str, line: usize) -> Result<Rat, ArrangementError> {
    let malformed = || ArrangementError::MalformedRational { line, token: token.to_string() };
    let parse_int = |s: &str| s.parse::<BigInt>().map_err(|_| malformed());
    match token.split_once('/') {
        None => Ok(Rat::from(parse_int(token)?)),
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if !q.is_positive() {
                return Err(malformed());
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Parses the arrangement text format: `#` comment lines, a `dim <l>` header,
/// then one line of `l` whitespace-separated rationals per hyperplane.
pub fn parse_arrangement(text: &str) -> Result<Arrangement, ArrangementError> {
    let mut dim: Option<usize> = None;
    let mut forms: Vec<(usize, Vec<Rat>)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match dim {
            None => {
                let mut it = line.split_whitespace();
                let (kw, val) = (it.next(), it.next());
                if kw != Some("dim") || it.next().is_some() {
                    return Err(ArrangementError::BadHeader { line: Some(line_no) });
                }
                let l: usize = val
                    .and_then(|v| v.parse().ok())
                    .ok_or(ArrangementError::BadHeader { line: Some(line_no) })?;
                if l == 0 {
                    return Err(ArrangementError::BadHeader { line: Some(line_no) });
                }
                dim = Some(l);
            }
            Some(d) => {
                let row: Vec<Rat> = line
                    .split_whitespace()
                    .map(|t| parse_rational(t, line_no))
                    .collect::<Result<_, _>>()?;
                if row.len() != d {
                    return Err(ArrangementError::RaggedRow {
                        line: Some(line_no),
                        expected: d,
                        got: row.len(),
                    });
                }
                forms.push((line_no, row));
            }
        }
    }
    let dim = dim.ok_or(ArrangementError::BadHeader { line: None })?;
    let mut planes: Vec<Hyperplane> = Vec::with_capacity(forms.len());
    for (k, (line_no, row)) in forms.iter().enumerate() {
        let h = Hyperplane::new(row.clone())
            .map_err(|_| ArrangementError::ZeroForm { line: Some(*line_no) })?;
        if let Some(j) = planes.iter().position(|p| p.canonical == h.canonical) {
            return Err(ArrangementError::Duplicate { line: Some(*line_no), first: j, second: k });
        }
        planes.push(h);
    }
    Ok(Arrangement { dim, hyperplanes: planes })
}


/// The braid arrangement in ℂ^l: hyperplanes `z_i - z_j = 0` for `i < j`,
/// in lexicographic (i, j) order.
pub fn braid_arrangement(l: usize) -> Arrangement {
    let mut forms = Vec::new();
    let mut labels = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            let mut row = alloc::vec![Rat::zero(); l];
            row[i] = Rat::from(BigInt::from(1));
            row[j] = Rat::from(BigInt::from(-1));
            forms.push(row);
            labels.push(alloc::format!("H{}{}", i + 1, j + 1));
        }
    }
    let mut arr = Arrangement::new(l, forms).expect("braid arrangement is valid");
    for (h, lab) in arr.hyperplanes.iter_mut().zip(labels) {
        h.label = Some(lab);
    }
    arr
}

/// The graphic arrangement of a simple graph on `l` vertices: one hyperplane
/// `z_i - z_j = 0` per edge.
pub fn graphic_arrangement(l: usize, edges: &[(usize, usize)]) -> Result<Arrangement, ArrangementError> {
    let forms = edges
        .iter()
        .map(|&(i, j)| {
            assert!(i < l && j < l && i != j, "edge endpoints must be distinct vertices");
            let (i, j) = if i < j { (i, j) } else { (j, i) };
            let mut row = alloc::vec![Rat::zero(); l];
            row[i] = Rat::from(BigInt::from(1));
            row[j] = Rat::from(BigInt::from(-1));
            row
        })
        .collect();
    Arrangement::new(l, forms)
}

/// The Boolean arrangement: the coordinate hyperplanes of ℂ^l.
pub fn boolean_arrangement(l: usize) -> Arrangement {
    let forms = (0..l)
        .map(|i| {
            let mut row = alloc::vec![Rat::zero(); l];
            row[i] = Rat::from(BigInt::from(1));
            row
        })
        .collect();
    Arrangement::new(l, forms).expect("boolean arrangement is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn braid(l: usize) -> Arrangement {
        crate::arrangement::braid_arrangement(l)
    }

    #[test]
    fn parse_braid3() {
        let a = parse_arrangement("dim 3\n1 -1 0\n1 0 -1\n0 1 -1\n").unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.len(), 3);
        assert_eq!(a.essential_rank(), 2);
    }

    #[test]
    fn parse_point_in_one_dim() {
        let a = parse_arrangement("dim 1\n1\n").unwrap();
        assert_eq!((a.dim(), a.len(), a.essential_rank()), (1, 1, 1));
    }

    #[test]
    fn parse_rejects_duplicates_even_rescaled() {
        let e = parse_arrangement("dim 2\n1 0\n1 0\n").unwrap_err();
        assert!(matches!(e, ArrangementError::Duplicate { first: 0, second: 1, .. }));
        let e = parse_arrangement("dim 2\n2 0\n-3 0\n").unwrap_err();
        assert!(matches!(e, ArrangementError::Duplicate { .. }));
    }

    #[test]
    fn parse_rejects_zero_row_ragged_row_and_bad_tokens() {
        assert!(matches!(
            parse_arrangement("dim 2\n0 0\n"),
            Err(ArrangementError::ZeroForm { .. })
        ));
        assert!(matches!(
            parse_arrangement("dim 3\n1 0\n"),
            Err(ArrangementError::RaggedRow { .. })
        ));
        assert!(matches!(
            parse_arrangement("dim 2\n1 x\n"),
            Err(ArrangementError::MalformedRational { .. })
        ));
        assert!(matches!(
            parse_arrangement("dim 2\n1 1/0\n"),
            Err(ArrangementError::MalformedRational { .. })
        ));
        assert!(matches!(
            parse_arrangement("dim 2\n1 1/-2\n"),
            Err(ArrangementError::MalformedRational { .. })
        ));
        assert!(matches!(parse_arrangement("hello\n"), Err(ArrangementError::BadHeader { .. })));
    }

    #[test]
    fn parse_accepts_comments_rationals_and_crlf() {
        let a = parse_arrangement("# a comment\r\ndim 2\r\n1 -1/2\r\n# another\r\n3/2 1\r\n").unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a.hyperplane(0).coeffs()[1], Rat::new(BigInt::from(-1), BigInt::from(2)));
    }

    #[test]
    fn rank_examples() {
        let b3 = braid(3);
        assert_eq!(b3.rank_of([0, 1, 2]), 2);
        assert_eq!(b3.rank_of([]), 0);
        assert_eq!(b3.rank_of([0, 1]), 2);
        let boolean = Arrangement::from_integers(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(boolean.essential_rank(), 3);
    }

    #[test]
    fn rank_is_monotone_and_submodular_on_small_arrangements() {
        for arr in [braid(3), braid(4)] {
            let n = arr.len();
            let subsets: Vec<IndexSet> = (0..1u32 << n)
                .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
                .collect();
            for s in &subsets {
                for t in &subsets {
                    let (u, i): (IndexSet, IndexSet) =
                        (s.union(t).copied().collect(), s.intersection(t).copied().collect());
                    let (rs, rt) = (arr.rank_of(s.iter().copied()), arr.rank_of(t.iter().copied()));
                    if s.is_subset(t) {
                        assert!(rs <= rt);
                    }
                    assert!(
                        arr.rank_of(u.iter().copied()) + arr.rank_of(i.iter().copied()) <= rs + rt
                    );
                    assert!(rs <= s.len().min(arr.dim()));
                }
            }
        }
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let h = Hyperplane::new(alloc::vec![
            Rat::from(BigInt::from(0)),
            Rat::new(BigInt::from(-3), BigInt::from(4)),
            Rat::from(BigInt::from(6)),
        ])
        .unwrap();
        let again = Hyperplane::new(h.canonical().to_vec()).unwrap();
        assert_eq!(h.canonical(), again.canonical());
    }

    #[test]
    fn closure_of_pair_in_braid3_is_everything() {
        let b3 = braid(3);
        let c = b3.closure(&[0, 1].into_iter().collect());
        assert_eq!(c, (0..3).collect());
    }
}
