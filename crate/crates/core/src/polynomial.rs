//! Sparse multivariate polynomials with exact coefficients, and the two
//! actions of operator polynomials on target polynomials.
//!
//! Operators and targets share one type. In `diff_action(f, g)` the left
//! operand is read in the `xᵢ` and acts as `∂/∂tᵢ` on the right operand.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exponents::ExponentVector;
use crate::field::Field;
use crate::text::VarNames;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<F> {
    dim: usize,
    terms: BTreeMap<ExponentVector, F>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(ExponentVector::zero(dim), F::one())
    }

    pub fn monomial(exp: ExponentVector, coeff: F) -> Self {
        let dim = exp.dim();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Polynomial { dim, terms }
    }

    /// Collects terms, summing repeated exponents and dropping zeros.
    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (ExponentVector, F)>) -> Result<Self> {
        let mut p = Self::zero(dim);
        for (e, c) in terms {
            Error::check_ambient(dim, e.dim())?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, exp: ExponentVector, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                *c = c.clone() + coeff;
                if c.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Terms in increasing LEX order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &F)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &ExponentVector) -> F {
        self.terms.get(exp).cloned().unwrap_or_else(F::zero)
    }

    /// LEX-largest term.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &F)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    /// `Some(N)` when every term has degree `N`. The zero polynomial is not
    /// considered homogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(ExponentVector::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        Error::check_ambient(self.dim, other.dim)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        Error::check_ambient(self.dim, other.dim)?;
        let mut out = Self::zero(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.plus(b), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    /// Multiplies by the monomial `x^m`.
    pub fn shift(&self, m: &ExponentVector) -> Self {
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, c)| (e.plus(m), c.clone())).collect(),
        }
    }

    /// Drops every term that lies in the monomial ideal generated by `gens`.
    pub fn drop_multiples_of(&self, gens: &[ExponentVector]) -> Self {
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| !gens.iter().any(|g| g.divides(e)))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// `f(∂/∂t₁,…,∂/∂t_d) g`: `x^p ∘ t^q = Π qᵢ!/(qᵢ−pᵢ)! · t^{q−p}` for
    /// `p ≤ q`, zero otherwise, extended bilinearly.
    pub fn diff_action(&self, target: &Self) -> Result<Self> {
        self.act(target, |p, q| {
            p.coords()
                .iter()
                .zip(q.coords())
                .fold(F::one(), |acc, (&pi, &qi)| acc * F::falling_factorial(qi.into(), pi.into()))
        })
    }

    /// The coefficient-free action: `x^p ∘ t^q = t^{q−p}` for `p ≤ q`.
    pub fn contraction_action(&self, target: &Self) -> Result<Self> {
        self.act(target, |_, _| F::one())
    }

    fn act(&self, target: &Self, weight: impl Fn(&ExponentVector, &ExponentVector) -> F) -> Result<Self> {
        Error::check_ambient(self.dim, target.dim)?;
        let mut out = Self::zero(self.dim);
        for (p, cp) in &self.terms {
            for (q, cq) in &target.terms {
                if let Some(rest) = q.minus(p) {
                    out.add_term(rest, weight(p, q) * cp.clone() * cq.clone());
                }
            }
        }
        Ok(out)
    }

    /// `f ∘ Q = 0` under the differential action.
    pub fn annihilates(&self, target: &Self) -> Result<bool> {
        Ok(self.diff_action(target)?.is_zero())
    }

    pub fn display_with<'a>(&'a self, names: &'a VarNames) -> impl fmt::Display + 'a {
        DisplayPoly { poly: self, names }
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = VarNames::indexed("x", self.dim);
        let shown = write!(f, "{}", self.display_with(&names));
        shown
    }
}

struct DisplayPoly<'a, F> {
    poly: &'a Polynomial<F>,
    names: &'a VarNames,
}

impl<F: Field> fmt::Display for DisplayPoly<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.poly.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if e.is_zero() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", e.display_with(self.names))?;
            } else {
                write!(f, "{a}*{}", e.display_with(self.names))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, Rational};
    use num_traits::One;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn poly(dim: usize, terms: &[(&[u32], i64)]) -> Poly {
        Poly::from_terms(dim, terms.iter().map(|(e, c)| (ExponentVector::from(e.to_vec()), q(*c)))).unwrap()
    }

    #[test]
    fn arithmetic() {
        let a = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(a.checked_mul(&b).unwrap(), poly(2, &[(&[2, 0], 1), (&[0, 2], -1)]));
        let p = poly(2, &[(&[1, 2], 1), (&[2, 1], 1), (&[3, 0], 1)]);
        assert_eq!(p.homogeneous_degree(), Some(3));
        assert_eq!(Poly::zero(2).degree(), None);
        assert!(!Poly::zero(2).is_homogeneous());
        assert!(a.checked_add(&Poly::zero(3)).is_err());
        assert!(a.checked_sub(&a).unwrap().is_zero());
    }

    #[test]
    fn diff_action_examples() {
        let x = poly(1, &[(&[1], 1)]);
        assert_eq!(x.diff_action(&x).unwrap(), Poly::one(1));
        let x2 = poly(1, &[(&[2], 1)]);
        assert!(x2.diff_action(&x).unwrap().is_zero());
        let f = poly(2, &[(&[0, 2], 1), (&[1, 1], -1)]);
        let t = poly(2, &[(&[2, 1], 1)]);
        assert_eq!(f.diff_action(&t).unwrap(), poly(2, &[(&[1, 0], -2)]));
        assert!(f.diff_action(&Poly::zero(3)).is_err());
    }

    #[test]
    fn contraction_examples() {
        let x2 = poly(1, &[(&[2], 1)]);
        let t3 = poly(1, &[(&[3], 1)]);
        assert_eq!(x2.contraction_action(&t3).unwrap(), poly(1, &[(&[1], 1)]));
        let a = poly(2, &[(&[2, 0], 1)]);
        let b = poly(2, &[(&[0, 2], 1)]);
        assert!(a.contraction_action(&b).unwrap().is_zero());
        let m = poly(2, &[(&[2, 3], 1)]);
        assert_eq!(m.contraction_action(&m).unwrap(), Poly::one(2));
    }

    #[test]
    fn annihilates_examples() {
        let t = poly(2, &[(&[2, 1], 1)]);
        assert!(poly(2, &[(&[3, 0], 1)]).annihilates(&t).unwrap());
        assert!(!poly(2, &[(&[0, 2], 1), (&[1, 1], -1)]).annihilates(&t).unwrap());
        assert!(Poly::zero(2).annihilates(&t).unwrap());
    }

    #[test]
    fn display_forms() {
        let p = poly(2, &[(&[1, 1], -1), (&[0, 2], 1)]);
        assert_eq!(p.to_string(), "-x1*x2 + x2^2");
        let h = Poly::from_terms(2, [(ExponentVector::from([0, 0]), Rational::new(3.into(), 2.into()))]).unwrap();
        assert_eq!(h.to_string(), "3/2");
        assert_eq!(Poly::zero(2).to_string(), "0");
        let r = poly(2, &[(&[4, 8], 495), (&[9, 3], 220), (&[6, 6], 924)]);
        assert_eq!(
            r.display_with(&VarNames::indexed("t", 2)).to_string(),
            "220*t1^9*t2^3 + 924*t1^6*t2^6 + 495*t1^4*t2^8"
        );
        assert!(Rational::one().is_one());
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((prop::collection::vec(0u32..4, 2), -3i64..4), 0..4).prop_map(|ts| {
            Poly::from_terms(2, ts.into_iter().map(|(e, c)| (ExponentVector::from(e), q(c)))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn module_law(f in small_poly(), g in small_poly(), t in small_poly()) {
            let lhs = f.checked_mul(&g).unwrap().diff_action(&t).unwrap();
            let rhs = f.diff_action(&g.diff_action(&t).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn actions_agree_on_monomial_targets(f in small_poly(), e in prop::collection::vec(0u32..5, 2)) {
            let target = Poly::monomial(ExponentVector::from(e), q(1));
            // each operator term maps to a distinct target term, so only signs of scalars matter
            for (p, c) in f.terms() {
                let m = Poly::monomial(p.clone(), c.clone());
                let d = m.diff_action(&target).unwrap();
                let k = m.contraction_action(&target).unwrap();
                prop_assert_eq!(d.is_zero(), k.is_zero());
                if let (Some((ed, cd)), Some((ek, ck))) = (d.leading_term(), k.leading_term()) {
                    prop_assert_eq!(ed, ek);
                    prop_assert!(num_traits::Signed::is_positive(&(cd.clone() / ck.clone())));
                }
            }
            prop_assert_eq!(
                f.diff_action(&target).unwrap().is_zero(),
                f.contraction_action(&target).unwrap().is_zero()
            );
        }

        #[test]
        fn annihilator_of_monomial_is_monomial(
            e in prop::collection::vec(0u32..4, 2),
            ops in prop::collection::vec((prop::collection::vec(0u32..5, 2), -3i64..4), 1..5),
        ) {
            // Over ℚ distinct operator terms never cancel on a monomial target.
            let target = Poly::monomial(ExponentVector::from(e), q(1));
            let f = Poly::from_terms(2, ops.into_iter().map(|(p, c)| (ExponentVector::from(p), q(c)))).unwrap();
            let termwise = f
                .terms()
                .all(|(p, c)| Poly::monomial(p.clone(), c.clone()).annihilates(&target).unwrap());
            prop_assert_eq!(f.annihilates(&target).unwrap(), termwise);
        }
    }
}
