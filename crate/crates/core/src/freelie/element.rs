//! Homogeneous elements in Hall coordinates, and bracket expression trees.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::freelie::hall::HallBasis;
use crate::linalg::SparseRow;
use crate::Rat;

/// A homogeneous element of the free Lie algebra: a sparse rational vector in
/// Hall coordinates, keyed by global word index. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    degree: usize,
    coords: BTreeMap<usize, Rat>,
}

impl LieElement {
    pub fn zero(degree: usize) -> Self {
        LieElement { degree, coords: BTreeMap::new() }
    }

    /// The basis word itself, coefficient 1.
    pub fn word(basis: &HallBasis, word: usize) -> Self {
        let mut coords = BTreeMap::new();
        coords.insert(word, Rat::from(num_bigint::BigInt::from(1)));
        LieElement { degree: basis.degree_of(word), coords }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, word: usize) -> Option<&Rat> {
        self.coords.get(&word)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.coords.iter().map(|(w, c)| (*w, c))
    }

    pub fn support_len(&self) -> usize {
        self.coords.len()
    }

    pub fn add_scaled(&mut self, other: &LieElement, scale: &Rat) {
        debug_assert_eq!(self.degree, other.degree, "degree mismatch in add");
        if scale.is_zero() {
            return;
        }
        for (w, c) in &other.coords {
            let entry = self.coords.entry(*w).or_insert_with(Rat::zero);
            *entry += c * scale;
            if entry.is_zero() {
                self.coords.remove(w);
            }
        }
    }

    pub fn add(&mut self, other: &LieElement) {
        self.add_scaled(other, &Rat::from(num_bigint::BigInt::from(1)));
    }

    pub fn scaled(mut self, scale: &Rat) -> LieElement {
        if scale.is_zero() {
            return LieElement::zero(self.degree);
        }
        for c in self.coords.values_mut() {
            *c *= scale;
        }
        self
    }

    pub fn negated(self) -> LieElement {
        self.scaled(&Rat::from(num_bigint::BigInt::from(-1)))
    }

    /// The element as a primitive integer row over within-degree positions.
    pub fn to_row(&self, basis: &HallBasis) -> SparseRow {
        let mut dense: Vec<Rat> = alloc::vec![Rat::zero(); basis.count_in_degree(self.degree)];
        for (w, c) in &self.coords {
            dense[basis.position_in_degree(*w)] = c.clone();
        }
        SparseRow::from_rationals(&dense)
    }

    /// Rebuilds an element (up to positive scale) from a row of within-degree
    /// positions.
    pub fn from_row(basis: &HallBasis, degree: usize, row: &SparseRow) -> Self {
        let mut coords = BTreeMap::new();
        for (pos, v) in row.iter() {
            coords.insert(basis.word_at(degree, pos), Rat::from(v.clone()));
        }
        LieElement { degree, coords }
    }
}

/// A bracket expression over generators with rational scalars. Evaluation via
/// [`crate::freelie::normal_form`] is linear in scalar combinations and
/// rewrites brackets by antisymmetry and the Jacobi identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Gen(usize),
    Bracket(Box<Expr>, Box<Expr>),
    Scale(Rat, Box<Expr>),
    Sum(Vec<Expr>),
}

impl Expr {
    pub fn gen(i: usize) -> Expr {
        Expr::Gen(i)
    }

    pub fn bracket(a: Expr, b: Expr) -> Expr {
        Expr::Bracket(Box::new(a), Box::new(b))
    }

    pub fn scaled(c: Rat, e: Expr) -> Expr {
        Expr::Scale(c, Box::new(e))
    }

    pub fn sum(parts: Vec<Expr>) -> Expr {
        Expr::Sum(parts)
    }
}
