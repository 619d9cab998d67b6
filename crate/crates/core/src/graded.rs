//! Degree-by-degree linear algebra for homogeneous ideals.
//!
//! A [`GradedSlice`] is the Macaulay matrix of `I_e` reduced with columns in
//! decreasing LEX order, so its pivot columns are exactly the degree-`e` part
//! of the LEX initial ideal and the remaining columns are the standard
//! monomials. For artinian ideals finitely many slices describe everything,
//! which is all this module ever needs.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::exponents::{monomials_of_degree, ExponentVector};
use crate::field::Field;
use crate::linalg::{kernel_of_columns, RowSpace};
use crate::monomial_ideal::MonomialIdeal;
use crate::polynomial::Polynomial;

/// Monomials of one degree in decreasing LEX order, with a reverse index.
#[derive(Debug, Clone)]
pub(crate) struct DegreeBasis {
    monomials: Vec<ExponentVector>,
    index: HashMap<ExponentVector, usize>,
}

impl DegreeBasis {
    pub(crate) fn new(dim: usize, degree: usize) -> Self {
        let mut monomials = monomials_of_degree(dim, degree);
        monomials.reverse();
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        DegreeBasis { monomials, index }
    }

    pub(crate) fn len(&self) -> usize {
        self.monomials.len()
    }

    pub(crate) fn position(&self, m: &ExponentVector) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub(crate) fn monomials(&self) -> &[ExponentVector] {
        &self.monomials
    }

    /// Coordinates of a polynomial supported in this degree.
    pub(crate) fn coords<F: Field>(&self, p: &Polynomial<F>) -> Option<Vec<F>> {
        let mut v = vec![F::zero(); self.len()];
        for (e, c) in p.terms() {
            v[self.position(e)?] = c.clone();
        }
        Some(v)
    }

    pub(crate) fn poly<F: Field>(&self, dim: usize, v: &[F]) -> Polynomial<F> {
        let mut p = Polynomial::zero(dim);
        for (m, c) in self.monomials.iter().zip(v) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

/// The degree-`e` piece of a homogeneous ideal.
#[derive(Debug, Clone)]
pub struct GradedSlice<F> {
    dim: usize,
    degree: usize,
    basis: DegreeBasis,
    space: RowSpace<F>,
    pivot_monomials: Vec<ExponentVector>,
    standard_monomials: Vec<ExponentVector>,
    standard_index: HashMap<ExponentVector, usize>,
}

impl<F: Field> GradedSlice<F> {
    fn new(dim: usize, degree: usize, basis: DegreeBasis, space: RowSpace<F>) -> Self {
        let pivots = space.pivots();
        let pivot_monomials: Vec<_> = pivots.iter().map(|&p| basis.monomials[p].clone()).collect();
        let standard_monomials: Vec<_> = (0..basis.len())
            .filter(|j| !pivots.contains(j))
            .map(|j| basis.monomials[j].clone())
            .collect();
        let standard_index = standard_monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        GradedSlice {
            dim,
            degree,
            basis,
            space,
            pivot_monomials,
            standard_monomials,
            standard_index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// All monomials of this degree, decreasing LEX (the column order).
    pub fn monomial_basis(&self) -> &[ExponentVector] {
        self.basis.monomials()
    }

    pub fn reduced_rows(&self) -> &[Vec<F>] {
        self.space.rows()
    }

    pub fn row_space(&self) -> &RowSpace<F> {
        &self.space
    }

    /// Rows of the reduced matrix as polynomials.
    pub fn row_polynomials(&self) -> Vec<Polynomial<F>> {
        self.space.rows().iter().map(|r| self.basis.poly(self.dim, r)).collect()
    }

    /// Leading monomials of `I_e`, decreasing LEX.
    pub fn pivot_monomials(&self) -> &[ExponentVector] {
        &self.pivot_monomials
    }

    /// Monomials outside the initial ideal, decreasing LEX; a basis of `(R/I)_e`.
    pub fn standard_monomials(&self) -> &[ExponentVector] {
        &self.standard_monomials
    }

    pub fn hilbert_value(&self) -> usize {
        self.standard_monomials.len()
    }

    pub fn is_full(&self) -> bool {
        self.space.is_full()
    }

    /// `I_e` is spanned by monomials.
    pub fn is_monomial(&self) -> bool {
        self.space
            .rows()
            .iter()
            .all(|r| r.iter().filter(|c| !c.is_zero()).count() == 1)
    }

    fn vector(&self, p: &Polynomial<F>) -> Result<Vec<F>> {
        self.basis.coords(p).ok_or_else(|| {
            Error::domain(format!("polynomial {p} is not homogeneous of degree {}", self.degree))
        })
    }

    pub fn contains(&self, p: &Polynomial<F>) -> Result<bool> {
        Error::check_ambient(self.dim, p.dim())?;
        Ok(self.space.contains(&self.vector(p)?))
    }

    /// Normal form modulo `I_e`, supported on standard monomials.
    pub fn normal_form(&self, p: &Polynomial<F>) -> Result<Polynomial<F>> {
        Error::check_ambient(self.dim, p.dim())?;
        let v = self.space.reduce(&self.vector(p)?);
        Ok(self.basis.poly(self.dim, &v))
    }

    /// Coordinates of the normal form of `x^m` in the standard-monomial basis.
    pub(crate) fn standard_coords_of_monomial(&self, m: &ExponentVector) -> Vec<F> {
        let mut v = vec![F::zero(); self.basis.len()];
        v[self.basis.position(m).expect("monomial of slice degree")] = F::one();
        self.standard_coords(&self.space.reduce(&v))
    }

    fn standard_coords(&self, reduced: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.standard_monomials.len()];
        for (j, c) in reduced.iter().enumerate() {
            if !c.is_zero() {
                let s = self.standard_index[&self.basis.monomials[j]];
                out[s] = c.clone();
            }
        }
        out
    }

    /// Slice dump for debugging: basis, reduced rows and the monomial split.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree,
            "monomial_basis": self.basis.monomials(),
            "reduced_rows": self.space.rows().iter()
                .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "pivot_monomials": self.pivot_monomials,
            "standard_monomials": self.standard_monomials,
        })
    }
}

/// Socle of `R/I` in one degree.
#[derive(Debug, Clone, PartialEq)]
pub struct SocleComponent<F> {
    pub degree: usize,
    /// Basis of `((I:𝔪)/I)_e`, written on standard monomials.
    pub basis: Vec<Polynomial<F>>,
}

/// A homogeneous ideal given by homogeneous generators, with lazily built
/// slices.
#[derive(Debug)]
pub struct HomogeneousIdeal<F> {
    dim: usize,
    generators: Vec<Polynomial<F>>,
    degree_cutoff: Option<usize>,
    slices: Mutex<Vec<Arc<GradedSlice<F>>>>,
}

impl<F: Field> Clone for HomogeneousIdeal<F> {
    fn clone(&self) -> Self {
        HomogeneousIdeal {
            dim: self.dim,
            generators: self.generators.clone(),
            degree_cutoff: self.degree_cutoff,
            slices: Mutex::new(self.slices.lock().expect("slice cache").clone()),
        }
    }
}

impl<F: Field> HomogeneousIdeal<F> {
    /// Zero generators are dropped; every other generator must be homogeneous.
    pub fn new(dim: usize, generators: impl IntoIterator<Item = Polynomial<F>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::domain("ambient dimension must be at least 1"));
        }
        let mut gens = Vec::new();
        for g in generators {
            Error::check_ambient(dim, g.dim())?;
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::domain(format!("generator {g} is not homogeneous")));
            }
            gens.push(g);
        }
        Ok(HomogeneousIdeal {
            dim,
            generators: gens,
            degree_cutoff: None,
            slices: Mutex::new(Vec::new()),
        })
    }

    pub fn from_monomial_ideal(ideal: &MonomialIdeal) -> Self {
        Self::new(
            ideal.dim(),
            ideal.gens().iter().map(|g| Polynomial::monomial(g.clone(), F::one())),
        )
        .expect("monomials are homogeneous")
    }

    /// Overrides the artinian safety bound `Σ deg gᵢ + d`.
    pub fn with_degree_cutoff(mut self, cutoff: usize) -> Self {
        self.degree_cutoff = Some(cutoff);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn degree_cutoff(&self) -> usize {
        self.degree_cutoff.unwrap_or_else(|| {
            self.generators
                .iter()
                .map(|g| g.degree().unwrap_or(0))
                .sum::<usize>()
                + self.dim
        })
    }

    /// The degree-`e` slice, built incrementally from degree `e − 1`.
    pub fn slice(&self, e: usize) -> Arc<GradedSlice<F>> {
        let mut cache = self.slices.lock().expect("slice cache");
        while cache.len() <= e {
            let next = self.build_slice(cache.len(), cache.last().map(Arc::as_ref));
            cache.push(Arc::new(next));
        }
        Arc::clone(&cache[e])
    }

    fn build_slice(&self, e: usize, prev: Option<&GradedSlice<F>>) -> GradedSlice<F> {
        let basis = DegreeBasis::new(self.dim, e);
        if prev.is_some_and(|p| p.is_full()) {
            let n = basis.len();
            return GradedSlice::new(self.dim, e, basis, RowSpace::full(n));
        }
        let mut space = RowSpace::new(basis.len());
        if let Some(prev) = prev {
            for row in prev.space.rows() {
                for i in 0..self.dim {
                    let mut v = vec![F::zero(); basis.len()];
                    for (j, c) in row.iter().enumerate() {
                        if !c.is_zero() {
                            let m = prev.basis.monomials[j].bump(i);
                            v[basis.position(&m).expect("shifted monomial")] = c.clone();
                        }
                    }
                    space.insert(v);
                }
            }
        }
        for g in &self.generators {
            if g.degree() == Some(e) {
                space.insert(basis.coords(g).expect("homogeneous generator"));
            }
        }
        GradedSlice::new(self.dim, e, basis, space)
    }

    /// `h(0), h(1), …` up to the last nonzero value.
    pub fn hilbert_function(&self) -> Result<Vec<usize>> {
        let cutoff = self.degree_cutoff();
        let mut out = Vec::new();
        for e in 0..=cutoff {
            let h = self.slice(e).hilbert_value();
            if h == 0 {
                return Ok(out);
            }
            out.push(h);
        }
        Err(Error::NotArtinian { cutoff })
    }

    /// `dim_K R/I`.
    pub fn quotient_dimension(&self) -> Result<usize> {
        Ok(self.hilbert_function()?.iter().sum())
    }

    /// Highest degree with `(R/I)_e ≠ 0`; `None` for the unit ideal.
    pub fn top_degree(&self) -> Result<Option<usize>> {
        Ok(self.hilbert_function()?.len().checked_sub(1))
    }

    /// Number of slices needed to see everything: through the first full one.
    fn span(&self) -> Result<usize> {
        Ok(self.hilbert_function()?.len())
    }

    pub fn contains(&self, p: &Polynomial<F>) -> Result<bool> {
        Error::check_ambient(self.dim, p.dim())?;
        let mut parts: HashMap<usize, Polynomial<F>> = HashMap::new();
        for (e, c) in p.terms() {
            parts
                .entry(e.degree())
                .or_insert_with(|| Polynomial::zero(self.dim))
                .add_term(e.clone(), c.clone());
        }
        for (deg, part) in parts {
            if !self.slice(deg).contains(&part)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Socle `(I:𝔪)/I`, per degree, omitting degrees where it vanishes.
    pub fn socle(&self) -> Result<Vec<SocleComponent<F>>> {
        let span = self.span()?;
        let mut out = Vec::new();
        for e in 0..span {
            let here = self.slice(e);
            let next = self.slice(e + 1);
            let std = here.standard_monomials();
            let target = self.dim * next.hilbert_value();
            let columns: Vec<Vec<F>> = std
                .iter()
                .map(|s| {
                    (0..self.dim)
                        .flat_map(|i| next.standard_coords_of_monomial(&s.bump(i)))
                        .collect()
                })
                .collect();
            let kernel = kernel_of_columns(target, &columns);
            if kernel.rank() == 0 {
                continue;
            }
            let basis = kernel
                .rows()
                .iter()
                .map(|v| {
                    let mut p = Polynomial::zero(self.dim);
                    for (s, c) in std.iter().zip(v) {
                        p.add_term(s.clone(), c.clone());
                    }
                    p
                })
                .collect();
            out.push(SocleComponent { degree: e, basis });
        }
        Ok(out)
    }

    pub fn socle_dimension(&self) -> Result<usize> {
        Ok(self.socle()?.iter().map(|c| c.basis.len()).sum())
    }

    /// The LEX initial ideal, read off the slice pivots.
    pub fn initial_monomials(&self) -> Result<MonomialIdeal> {
        let span = self.span()?;
        let raw = (0..=span)
            .flat_map(|e| self.slice(e).pivot_monomials().to_vec())
            .collect();
        Ok(MonomialIdeal::from_raw(self.dim, raw))
    }

    /// Slice-by-slice equality of two artinian ideals.
    pub fn ideal_equals(&self, other: &Self) -> Result<bool> {
        Error::check_ambient(self.dim, other.dim)?;
        let span = self.span()?.max(other.span()?);
        Ok((0..=span).all(|e| self.slice(e).space == other.slice(e).space))
    }

    /// Whether `I` is generated by monomials.
    pub fn is_monomial_ideal(&self) -> Result<bool> {
        let span = self.span()?;
        Ok((0..=span).all(|e| self.slice(e).is_monomial()))
    }

    /// `((x₁ᵏ,…,x_dᵏ) : p)` for a homogeneous `p`, assembled from the kernels
    /// of multiplication by `p` into `R/(x₁ᵏ,…,x_dᵏ)`.
    pub fn colon_power_ideal(k: u32, p: &Polynomial<F>) -> Result<Self> {
        if k == 0 {
            return Err(Error::domain("k must be at least 1"));
        }
        let dim = p.dim();
        let n = p
            .homogeneous_degree()
            .ok_or_else(|| Error::domain(format!("p = {p} must be nonzero and homogeneous")))?;
        let powers = MonomialIdeal::power_ideal(dim, k);
        let p = p.drop_multiples_of(powers.gens());
        if p.is_zero() {
            return Err(Error::domain(format!(
                "p vanishes modulo (x1^{k}, ..., x{dim}^{k})"
            )));
        }
        let top = dim * (k as usize - 1) - n;
        Self::from_graded_kernels(dim, top + 1, |e, basis| {
            let target = DegreeBasis::new(dim, e + n);
            let columns: Vec<Vec<F>> = basis
                .monomials()
                .iter()
                .map(|m| {
                    let prod = p.shift(m).drop_multiples_of(powers.gens());
                    target.coords(&prod).expect("homogeneous product")
                })
                .collect();
            kernel_of_columns(target.len(), &columns)
        })
    }

    /// `Ann_∂(Q) = {f : f(∂/∂t) Q = 0}` for a homogeneous `Q ≠ 0`, from the
    /// catalecticant kernels `R_e → S_{M−e}`.
    pub fn ann_partial(q: &Polynomial<F>) -> Result<Self> {
        let dim = q.dim();
        let m = q
            .homogeneous_degree()
            .ok_or_else(|| Error::domain(format!("Q = {q} must be nonzero and homogeneous")))?;
        Self::from_graded_kernels(dim, m + 1, |e, basis| {
            if e > m {
                return RowSpace::full(basis.len());
            }
            let target = DegreeBasis::new(dim, m - e);
            let columns: Vec<Vec<F>> = basis
                .monomials()
                .iter()
                .map(|mono| {
                    let op = Polynomial::monomial(mono.clone(), F::one());
                    let image = op.diff_action(q).expect("same ambient");
                    target.coords(&image).expect("homogeneous image")
                })
                .collect();
            kernel_of_columns(target.len(), &columns)
        })
    }

    /// Minimal generators of the inverse system `I⁻¹ ⊆ K[t₁,…,t_d]` under the
    /// differential action: in each degree, the part of `I_e^⊥` not reached
    /// by differentiating `I_{e+1}^⊥`.
    pub fn inverse_system(&self) -> Result<Vec<Polynomial<F>>> {
        let span = self.span()?;
        let dim = self.dim;
        let mut gens = Vec::new();
        let mut above: Option<(DegreeBasis, RowSpace<F>)> = None;
        for e in (0..span).rev() {
            let slice = self.slice(e);
            let basis = &slice.basis;
            let rows = slice.space.rows();
            let columns: Vec<Vec<F>> = basis
                .monomials()
                .iter()
                .enumerate()
                .map(|(j, m)| {
                    let weight = m
                        .coords()
                        .iter()
                        .fold(F::one(), |acc, &a| acc * F::factorial(u64::from(a)));
                    rows.iter().map(|r| r[j].clone() * weight.clone()).collect()
                })
                .collect();
            let perp = kernel_of_columns(rows.len(), &columns);
            let mut reached = RowSpace::new(basis.len());
            if let Some((prev_basis, prev_perp)) = &above {
                for row in prev_perp.rows() {
                    for i in 0..dim {
                        let mut v = vec![F::zero(); basis.len()];
                        for (j, c) in row.iter().enumerate() {
                            let m = &prev_basis.monomials()[j];
                            if !c.is_zero() && m.get(i) > 0 {
                                let lower = m.with_coord(i, m.get(i) - 1);
                                let pos = basis.position(&lower).expect("monomial of lower degree");
                                v[pos] = c.clone() * F::from_u64(u64::from(m.get(i)));
                            }
                        }
                        reached.insert(v);
                    }
                }
            }
            for row in perp.rows() {
                if reached.insert(row.clone()).is_some() {
                    gens.push(basis.poly(dim, row));
                }
            }
            above = Some((basis.clone(), perp));
        }
        Ok(gens)
    }

    /// Builds an ideal from its graded pieces `I_0, …, I_top` (with `I_top`
    /// expected to be everything). Minimal generators are the parts of each
    /// `I_e` not already in `R₁ · I_{e−1}`.
    fn from_graded_kernels(
        dim: usize,
        top: usize,
        kernel_at: impl Fn(usize, &DegreeBasis) -> RowSpace<F>,
    ) -> Result<Self> {
        let mut gens = Vec::new();
        let mut prev: Option<(DegreeBasis, RowSpace<F>)> = None;
        for e in 0..=top {
            let basis = DegreeBasis::new(dim, e);
            let kernel = kernel_at(e, &basis);
            let mut span = RowSpace::new(basis.len());
            if let Some((pb, pk)) = &prev {
                for row in pk.rows() {
                    for i in 0..dim {
                        let mut v = vec![F::zero(); basis.len()];
                        for (j, c) in row.iter().enumerate() {
                            if !c.is_zero() {
                                v[basis.position(&pb.monomials[j].bump(i)).expect("shift")] = c.clone();
                            }
                        }
                        span.insert(v);
                    }
                }
            }
            debug_assert!(span.is_subspace_of(&kernel));
            for row in kernel.rows() {
                if let Some(new) = span.insert(row.clone()) {
                    gens.push(basis.poly(dim, &new));
                }
            }
            prev = Some((basis, kernel));
        }
        Self::new(dim, gens)
    }
}
