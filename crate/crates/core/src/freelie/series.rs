//! Witt dimensions and truncated integer power series.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Möbius function of a positive integer, by trial-division factorization.
pub fn moebius(mut k: usize) -> i32 {
    assert!(k >= 1, "moebius is defined on positive integers");
    let mut parity = 1;
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            k /= p;
            if k.is_multiple_of(p) {
                return 0;
            }
            parity = -parity;
        }
        p += 1;
    }
    if k > 1 {
        parity = -parity;
    }
    parity
}

/// Dimension of the degree-`j` graded piece of the free Lie algebra of rank
/// `d`: `(1/j) * sum over k | j of mu(k) d^(j/k)`.
pub fn witt_dimension(d: usize, j: usize) -> usize {
    assert!(j >= 1, "grading starts at degree 1");
    let base = BigInt::from(d);
    let mut acc = BigInt::zero();
    for k in 1..=j {
        if !j.is_multiple_of(k) {
            continue;
        }
        match moebius(k) {
            0 => {}
            1 => acc += base.pow((j / k) as u32),
            _ => acc -= base.pow((j / k) as u32),
        }
    }
    let (q, r) = num_integer::Integer::div_rem(&acc, &BigInt::from(j));
    assert!(r.is_zero(), "necklace sum must be divisible by the degree");
    usize::try_from(&q).expect("witt dimension exceeds usize")
}

/// An integer power series truncated at a fixed degree; all arithmetic is
/// exact and products drop terms beyond the truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The series 1, truncated after degree `trunc`.
    pub fn one(trunc: usize) -> Self {
        let mut coeffs = alloc::vec![BigInt::zero(); trunc + 1];
        coeffs[0] = BigInt::one();
        TruncatedSeries { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least the constant term");
        TruncatedSeries { coeffs }
    }

    /// Truncation degree.
    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let trunc = self.trunc().min(other.trunc());
        let mut coeffs = alloc::vec![BigInt::zero(); trunc + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(trunc + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(trunc + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn pow(&self, mut e: usize) -> TruncatedSeries {
        let mut acc = TruncatedSeries::one(self.trunc());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `1 - c t^j`, truncated after `trunc`.
    pub fn one_minus_monomial(c: impl Into<BigInt>, j: usize, trunc: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::one(trunc);
        if j <= trunc {
            s.coeffs[j] -= c.into();
        }
        s
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The product over degrees `j` of `(1 - t^j)^(phi_j)`, truncated after
/// `t^N` where `N = phis.len()`.
pub fn lcs_product(phis: &[usize]) -> TruncatedSeries {
    let trunc = phis.len();
    let mut acc = TruncatedSeries::one(trunc);
    for (j, &phi) in phis.iter().enumerate().map(|(i, p)| (i + 1, p)) {
        acc = acc.mul(&TruncatedSeries::one_minus_monomial(1, j, trunc).pow(phi));
    }
    acc
}

/// The product over the exponents of `(1 - d_i t)`, truncated after `t^trunc`.
pub fn exponent_polynomial(exponents: &[usize], trunc: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(trunc);
    for &d in exponents {
        acc = acc.mul(&TruncatedSeries::one_minus_monomial(d, 1, trunc));
    }
    acc
}
