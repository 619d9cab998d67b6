//! Exponent vectors in ℕ₀ᵈ, their divisibility order and the LEX term order.
//!
//! LEX is taken with `x₁ ≺ x₂ ≺ ⋯ ≺ x_d`: the last coordinate is the most
//! significant one. The derived [`Ord`] on [`ExponentVector`] is this order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::VarNames;

/// Number of variables shared by every value in one computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ambient {
    dim: usize,
}

impl Ambient {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::domain("ambient dimension must be at least 1"));
        }
        Ok(Ambient { dim })
    }

    pub fn dim(self) -> usize {
        self.dim
    }

    /// Builds a vector, rejecting the wrong length.
    pub fn vector(self, coords: impl Into<Vec<u32>>) -> Result<ExponentVector> {
        let coords = coords.into();
        Error::check_ambient(self.dim, coords.len())?;
        Ok(ExponentVector(coords))
    }

    pub fn zero(self) -> ExponentVector {
        ExponentVector::zero(self.dim)
    }
}

/// A point of ℕ₀ᵈ, i.e. the exponent of a monomial `x₁^{a₁}⋯x_d^{a_d}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn zero(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    /// The `i`-th unit vector (0-based index).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        ExponentVector(v)
    }

    /// `(c, c, …, c)`.
    pub fn constant(dim: usize, c: u32) -> Self {
        ExponentVector(vec![c; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Total degree.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Componentwise `≤`, i.e. divisibility of monomials.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        Error::check_ambient(self.dim(), other.dim())?;
        Ok(self.divides(other))
    }

    /// LEX comparison with the last coordinate most significant.
    pub fn lex_cmp(&self, other: &Self) -> Result<Ordering> {
        Error::check_ambient(self.dim(), other.dim())?;
        Ok(self.cmp(other))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Error::check_ambient(self.dim(), other.dim())?;
        Ok(self.plus(other))
    }

    /// `self - other`, or `None` when some coordinate would go negative.
    pub fn sub_checked(&self, other: &Self) -> Result<Option<Self>> {
        Error::check_ambient(self.dim(), other.dim())?;
        Ok(self.minus(other))
    }

    // Unchecked fast paths; callers have already validated dimensions.

    pub(crate) fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub(crate) fn plus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn minus(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Componentwise maximum (lcm of monomials).
    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub(crate) fn with_coord(&self, i: usize, value: u32) -> Self {
        let mut v = self.0.clone();
        v[i] = value;
        ExponentVector(v)
    }

    pub(crate) fn bump(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v[i] += 1;
        ExponentVector(v)
    }

    pub fn display_with<'a>(&'a self, names: &'a VarNames) -> impl fmt::Display + 'a {
        DisplayMonomial { exp: self, names }
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = VarNames::indexed("x", self.dim());
        let shown = write!(f, "{}", self.display_with(&names));
        shown
    }
}

struct DisplayMonomial<'a> {
    exp: &'a ExponentVector,
    names: &'a VarNames,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp.is_zero() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exp.coords().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.names.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All exponent vectors of total degree `degree`, in increasing LEX order.
pub fn monomials_of_degree(dim: usize, degree: usize) -> Vec<ExponentVector> {
    fn rec(dim: usize, remaining: usize, prefix: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if prefix.len() + 1 == dim {
            prefix.push(remaining as u32);
            out.push(ExponentVector(prefix.clone()));
            prefix.pop();
            return;
        }
        for c in 0..=remaining {
            prefix.push(c as u32);
            rec(dim, remaining - c, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if dim == 0 {
        if degree == 0 {
            out.push(ExponentVector(Vec::new()));
        }
        return out;
    }
    rec(dim, degree, &mut Vec::with_capacity(dim), &mut out);
    out.sort();
    out
}

/// Every `m` with `0 ≤ m ≤ bound` componentwise.
pub fn box_points(bound: &ExponentVector) -> Vec<ExponentVector> {
    let mut out = vec![ExponentVector(Vec::with_capacity(bound.dim()))];
    for &b in bound.coords() {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |c| {
                    let mut v = p.0.clone();
                    v.push(c);
                    ExponentVector(v)
                })
            })
            .collect();
    }
    out
}
