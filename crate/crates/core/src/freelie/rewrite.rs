//! Normal-form computation: rewriting arbitrary brackets into Hall
//! coordinates by antisymmetry and the Jacobi identity.

use alloc::collections::BTreeMap;

use crate::freelie::element::{Expr, LieElement};
use crate::freelie::hall::{HallBasis, WordNode};
use crate::freelie::FreeLieError;

/// Rewriting context over a fixed basis. Results of word-pair brackets are
/// memoized, which is what makes repeated adjoint action cheap; the basis
/// itself stays immutable and the rewriting is deterministic.
pub struct Rewriter<'a> {
    basis: &'a HallBasis,
    cache: BTreeMap<(usize, usize), LieElement>,
}

impl<'a> Rewriter<'a> {
    pub fn new(basis: &'a HallBasis) -> Self {
        Rewriter { basis, cache: BTreeMap::new() }
    }

    pub fn basis(&self) -> &'a HallBasis {
        self.basis
    }

    /// Normal form of `[u, v]` for two basis words. The total degree must fit
    /// in the basis.
    pub fn bracket_words(&mut self, u: usize, v: usize) -> LieElement {
        let degree = self.basis.degree_of(u) + self.basis.degree_of(v);
        debug_assert!(degree <= self.basis.max_degree(), "bracket beyond truncation");
        if u == v {
            return LieElement::zero(degree);
        }
        if u < v {
            return self.bracket_words(v, u).negated();
        }
        if let Some(w) = self.basis.standard_bracket(u, v) {
            return LieElement::word(self.basis, w);
        }
        if let Some(hit) = self.cache.get(&(u, v)) {
            return hit.clone();
        }
        // u > v and [u, v] is not basic, so u = [a, b] with b > v; rewrite by
        // Jacobi: [[a, b], v] = [[a, v], b] + [a, [b, v]].
        let (a, b) = match self.basis.node(u) {
            WordNode::Bracket(a, b) => (a, b),
            WordNode::Generator(_) => unreachable!("generator pairs are always basic"),
        };
        let av = self.bracket_words(a, v);
        let mut result = self.bracket_elements_words(&av, b, true);
        let bv = self.bracket_words(b, v);
        let second = self.bracket_elements_words(&bv, a, false);
        result.add(&second);
        self.cache.insert((u, v), result.clone());
        result
    }

    /// `[e, w]` when `right` else `[w, e]`, expanded linearly.
    fn bracket_elements_words(&mut self, e: &LieElement, w: usize, right: bool) -> LieElement {
        let degree = e.degree() + self.basis.degree_of(w);
        let mut out = LieElement::zero(degree);
        for (x, c) in e.iter().map(|(x, c)| (x, c.clone())) {
            let term = if right { self.bracket_words(x, w) } else { self.bracket_words(w, x) };
            out.add_scaled(&term, &c);
        }
        out
    }

    /// Bilinear bracket of two homogeneous elements.
    pub fn bracket(&mut self, a: &LieElement, b: &LieElement) -> Result<LieElement, FreeLieError> {
        let degree = a.degree() + b.degree();
        if degree > self.basis.max_degree() {
            return Err(FreeLieError::DegreeExceeded { degree, max: self.basis.max_degree() });
        }
        let mut out = LieElement::zero(degree);
        for (x, cx) in a.iter() {
            for (y, cy) in b.iter() {
                let term = self.bracket_words(x, y);
                out.add_scaled(&term, &(cx * cy));
            }
        }
        Ok(out)
    }

    /// Evaluates a bracket expression into Hall coordinates.
    pub fn eval(&mut self, expr: &Expr) -> Result<LieElement, FreeLieError> {
        match expr {
            Expr::Gen(i) => {
                if *i >= self.basis.n_generators() {
                    return Err(FreeLieError::BadGenerator { index: *i, n: self.basis.n_generators() });
                }
                Ok(LieElement::word(self.basis, *i))
            }
            Expr::Bracket(a, b) => {
                let (ea, eb) = (self.eval(a)?, self.eval(b)?);
                self.bracket(&ea, &eb)
            }
            Expr::Scale(c, e) => Ok(self.eval(e)?.scaled(c)),
            Expr::Sum(parts) => {
                let mut it = parts.iter();
                let first = it.next().ok_or(FreeLieError::EmptySum)?;
                let mut acc = self.eval(first)?;
                for p in it {
                    let e = self.eval(p)?;
                    if e.degree() != acc.degree() {
                        return Err(FreeLieError::Inhomogeneous { left: acc.degree(), right: e.degree() });
                    }
                    acc.add(&e);
                }
                Ok(acc)
            }
        }
    }
}

/// Normal form of a homogeneous bracket expression in the given basis.
pub fn normal_form(basis: &HallBasis, expr: &Expr) -> Result<LieElement, FreeLieError> {
    Rewriter::new(basis).eval(expr)
}
