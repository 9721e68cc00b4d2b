//! Sparse exact linear algebra over the rationals.
//!
//! Rows are stored as primitive integer vectors (content 1, positive leading
//! coefficient); each one represents a rational row up to positive scale,
//! which is all that row spaces care about. Elimination is fraction-free and
//! strips the content after every combination step, so coefficient growth
//! stays tame. A [`RowSpace`] is kept in reduced echelon form at all times,
//! making the stored basis a canonical representative of the subspace.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::Rat;

/// A sparse vector with exact integer entries, sorted by column.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SparseRow {
    entries: Vec<(usize, BigInt)>,
}

impl SparseRow {
    pub fn zero() -> Self {
        SparseRow { entries: Vec::new() }
    }

    /// Builds a row from arbitrary (column, value) pairs; duplicates are
    /// accumulated and zeros dropped.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let mut v: Vec<(usize, BigInt)> = entries.into_iter().collect();
        v.sort_by_key(|e| e.0);
        let mut merged: Vec<(usize, BigInt)> = Vec::with_capacity(v.len());
        for (c, x) in v {
            match merged.last_mut() {
                Some((lc, lx)) if *lc == c => *lx += x,
                _ => merged.push((c, x)),
            }
        }
        merged.retain(|e| !e.1.is_zero());
        SparseRow { entries: merged }
    }

    pub fn unit(col: usize) -> Self {
        SparseRow { entries: alloc::vec![(col, BigInt::from(1))] }
    }

    /// Clears denominators and strips content, yielding the primitive
    /// integer representative of a rational row.
    pub fn from_rationals(values: &[Rat]) -> Self {
        let mut lcm = BigInt::from(1);
        for v in values {
            if !v.is_zero() {
                lcm = lcm.lcm(v.denom());
            }
        }
        let mut row = SparseRow::from_entries(values.iter().enumerate().filter_map(|(i, v)| {
            if v.is_zero() {
                None
            } else {
                Some((i, v.numer() * (&lcm / v.denom())))
            }
        }));
        row.make_primitive();
        row
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    /// First nonzero entry (column, value).
    pub fn lead(&self) -> Option<(usize, &BigInt)> {
        self.entries.first().map(|(c, x)| (*c, x))
    }

    pub fn get(&self, col: usize) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&col, |e| e.0)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.entries.iter().map(|(c, x)| (*c, x))
    }

    pub fn max_col(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    /// `ca * a + cb * b`, merging sorted supports.
    pub fn combine(ca: &BigInt, a: &SparseRow, cb: &BigInt, b: &SparseRow) -> SparseRow {
        let mut out: Vec<(usize, BigInt)> = Vec::with_capacity(a.entries.len() + b.entries.len());
        let (mut i, mut j) = (0, 0);
        while i < a.entries.len() || j < b.entries.len() {
            let pick_a = match (a.entries.get(i), b.entries.get(j)) {
                (Some(x), Some(y)) => {
                    if x.0 == y.0 {
                        let v = ca * &x.1 + cb * &y.1;
                        if !v.is_zero() {
                            out.push((x.0, v));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                    x.0 < y.0
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => break,
            };
            if pick_a {
                let v = ca * &a.entries[i].1;
                if !v.is_zero() {
                    out.push((a.entries[i].0, v));
                }
                i += 1;
            } else {
                let v = cb * &b.entries[j].1;
                if !v.is_zero() {
                    out.push((b.entries[j].0, v));
                }
                j += 1;
            }
        }
        SparseRow { entries: out }
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn make_primitive(&mut self) {
        if self.entries.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, x) in &self.entries {
            g = g.gcd(x);
        }
        if self.entries[0].1.is_negative() {
            g = -g;
        }
        if !g.is_zero() && g != BigInt::from(1) {
            for (_, x) in &mut self.entries {
                *x /= &g;
            }
        }
    }

    pub fn map_columns(&self, f: impl Fn(usize) -> usize) -> SparseRow {
        SparseRow::from_entries(self.entries.iter().map(|(c, x)| (f(*c), x.clone())))
    }
}

/// One fraction-free elimination step: clear `col` of `target` using `pivot`
/// (which must be nonzero at `col`), returning a primitive row.
fn eliminate(target: &SparseRow, pivot: &SparseRow, col: usize) -> SparseRow {
    let tv = target.get(col).expect("target has no entry at pivot column");
    let pv = pivot.get(col).expect("pivot has no entry at its own column");
    let g = tv.gcd(pv);
    let ca = pv / &g;
    let cb = -(tv / &g);
    let mut r = SparseRow::combine(&ca, target, &cb, pivot);
    r.make_primitive();
    r
}

/// A subspace of ℚ^ncols held as a reduced echelon basis of primitive
/// integer rows.
///
/// An optional column priority reorders which columns are eaten first by
/// pivots; this is what powers exact intersections with coordinate
/// subspaces (see [`RowSpace::with_priority`]).
#[derive(Clone, Debug)]
pub struct RowSpace {
    ncols: usize,
    to_internal: Option<Vec<usize>>,
    to_external: Option<Vec<usize>>,
    /// Reduced: sorted by pivot column, each pivot column zero in all other
    /// rows, every row primitive.
    rows: Vec<SparseRow>,
}

impl RowSpace {
    pub fn new(ncols: usize) -> Self {
        RowSpace { ncols, to_internal: None, to_external: None, rows: Vec::new() }
    }

    /// A row space whose elimination prefers pivots in `first` (in the given
    /// order) before all remaining columns. After inserting a basis, the
    /// stored rows supported entirely outside `first` are a basis of the
    /// intersection with the coordinate subspace avoiding `first`.
    pub fn with_priority(ncols: usize, first: &[usize]) -> Self {
        let mut to_internal = alloc::vec![usize::MAX; ncols];
        let mut to_external = Vec::with_capacity(ncols);
        for &c in first {
            assert!(c < ncols && to_internal[c] == usize::MAX, "bad priority column");
            to_internal[c] = to_external.len();
            to_external.push(c);
        }
        for (c, slot) in to_internal.iter_mut().enumerate() {
            if *slot == usize::MAX {
                *slot = to_external.len();
                to_external.push(c);
            }
        }
        RowSpace { ncols, to_internal: Some(to_internal), to_external: Some(to_external), rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn internalize(&self, row: &SparseRow) -> SparseRow {
        match &self.to_internal {
            None => row.clone(),
            Some(m) => row.map_columns(|c| m[c]),
        }
    }

    fn externalize(&self, row: &SparseRow) -> SparseRow {
        match &self.to_external {
            None => row.clone(),
            Some(m) => row.map_columns(|c| m[c]),
        }
    }

    fn reduce_internal(&self, mut r: SparseRow) -> SparseRow {
        for piv in &self.rows {
            let (pc, _) = piv.lead().expect("stored rows are nonzero");
            match r.lead() {
                None => break,
                Some((rl, _)) if rl > pc => continue,
                _ => {}
            }
            if r.get(pc).is_some() {
                r = eliminate(&r, piv, pc);
            }
        }
        r
    }

    /// Adds a row to the space. Returns true when it was independent of the
    /// rows already present.
    pub fn insert(&mut self, row: &SparseRow) -> bool {
        if let Some(mc) = row.max_col() {
            assert!(mc < self.ncols, "row exceeds column count");
        }
        let r = self.reduce_internal(self.internalize(row));
        if r.is_zero() {
            return false;
        }
        let (pc, _) = r.lead().unwrap();
        for existing in &mut self.rows {
            if existing.get(pc).is_some() {
                *existing = eliminate(existing, &r, pc);
            }
        }
        let pos = self
            .rows
            .partition_point(|x| x.lead().map(|(c, _)| c).unwrap_or(usize::MAX) < pc);
        self.rows.insert(pos, r);
        true
    }

    /// Fully reduces `row` against the space (external coordinates,
    /// primitive or zero).
    pub fn reduce(&self, row: &SparseRow) -> SparseRow {
        self.externalize(&self.reduce_internal(self.internalize(row)))
    }

    pub fn contains(&self, row: &SparseRow) -> bool {
        self.reduce_internal(self.internalize(row)).is_zero()
    }

    /// Basis rows in external coordinates, in pivot order. For a space built
    /// without a column priority this is the canonical reduced echelon basis.
    pub fn basis(&self) -> Vec<SparseRow> {
        self.rows.iter().map(|r| self.externalize(r)).collect()
    }

    /// Basis rows whose support lies entirely in columns accepted by `keep`.
    /// Meaningful on priority-ordered spaces, where these rows span the
    /// intersection with the coordinate subspace.
    pub fn basis_supported_in(&self, keep: impl Fn(usize) -> bool) -> Vec<SparseRow> {
        self.basis()
            .into_iter()
            .filter(|r| r.iter().all(|(c, _)| keep(c)))
            .collect()
    }

    /// Pivot columns (external), sorted by internal pivot order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| {
                let c = r.lead().unwrap().0;
                match &self.to_external {
                    None => c,
                    Some(m) => m[c],
                }
            })
            .collect()
    }
}

/// Rank of a list of rows.
pub fn rank_of_rows(ncols: usize, rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut sp = RowSpace::new(ncols);
    for r in rows {
        sp.insert(&r);
    }
    sp.dim()
}

/// Dimension check helper: do two spaces over the same column set agree?
pub fn spaces_equal(a: &RowSpace, b: &RowSpace) -> bool {
    a.ncols() == b.ncols() && a.dim() == b.dim() && b.basis().iter().all(|r| a.contains(r))
}

/// A primitive integer basis of the null space of the rows (as a matrix),
/// one vector per free column, ordered by free column index.
pub fn kernel_basis(ncols: usize, rows: &[SparseRow]) -> Vec<SparseRow> {
    let mut sp = RowSpace::new(ncols);
    for r in rows {
        sp.insert(r);
    }
    let basis = sp.basis();
    let mut pivot_of_col = alloc::vec![usize::MAX; ncols];
    for (i, r) in basis.iter().enumerate() {
        pivot_of_col[r.lead().unwrap().0] = i;
    }
    let mut out = Vec::new();
    for (f, &piv) in pivot_of_col.iter().enumerate() {
        if piv != usize::MAX {
            continue;
        }
        // lcm of pivot values over rows with a nonzero entry in column f
        let mut l = BigInt::from(1);
        for r in &basis {
            if r.get(f).is_some() {
                l = l.lcm(r.lead().unwrap().1);
            }
        }
        let mut entries = alloc::vec![(f, l.clone())];
        for r in &basis {
            if let Some(v) = r.get(f) {
                let (pc, pv) = r.lead().unwrap();
                entries.push((pc, -(v * (&l / pv))));
            }
        }
        let mut k = SparseRow::from_entries(entries);
        k.make_primitive();
        out.push(k);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> SparseRow {
        SparseRow::from_entries(v.iter().enumerate().map(|(i, &x)| (i, BigInt::from(x))))
    }

    #[test]
    fn primitive_normalization() {
        let mut r = row(&[-4, 6, -2]);
        r.make_primitive();
        assert_eq!(r, row(&[2, -3, 1]));
    }

    #[test]
    fn rank_and_membership() {
        let mut sp = RowSpace::new(3);
        assert!(sp.insert(&row(&[1, -1, 0])));
        assert!(sp.insert(&row(&[1, 0, -1])));
        assert!(!sp.insert(&row(&[0, 1, -1])));
        assert_eq!(sp.dim(), 2);
        assert!(sp.contains(&row(&[2, -1, -1])));
        assert!(!sp.contains(&row(&[1, 1, 1])));
    }

    #[test]
    fn reduced_echelon_is_canonical() {
        let mut a = RowSpace::new(3);
        a.insert(&row(&[1, 1, 0]));
        a.insert(&row(&[0, 1, 1]));
        let mut b = RowSpace::new(3);
        b.insert(&row(&[1, 0, -1]));
        b.insert(&row(&[2, 3, 1]));
        assert_eq!(a.basis(), b.basis());
        assert!(spaces_equal(&a, &b));
    }

    #[test]
    fn priority_intersection_with_coordinates() {
        // span{(1,1,0),(0,0,1)} meets the x2-x3 coordinate plane in span{(0,0,1)}
        let mut sp = RowSpace::with_priority(3, &[0]);
        sp.insert(&row(&[1, 1, 0]));
        sp.insert(&row(&[0, 0, 1]));
        let inter = sp.basis_supported_in(|c| c != 0);
        assert_eq!(inter, alloc::vec![row(&[0, 0, 1])]);
    }

    #[test]
    fn kernel_of_matrix() {
        // x + y + z = 0 has a 2-dimensional kernel
        let k = kernel_basis(3, &[row(&[1, 1, 1])]);
        assert_eq!(k.len(), 2);
        for v in &k {
            let mut sp = RowSpace::new(3);
            sp.insert(&row(&[1, 1, 1]));
            // v orthogonal? no: v is a null combination of columns; check A v = 0 directly
            let s: BigInt = v.iter().map(|(_, x)| x.clone()).sum();
            assert!(s.is_zero());
            let _ = sp;
        }
    }
}
