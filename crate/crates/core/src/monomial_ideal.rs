//! Monomial ideals of `K[x₁,…,x_d]` as upsets of ℕ₀ᵈ.
//!
//! An ideal is stored as its unique minimal generating antichain, sorted by
//! LEX, so structural equality is ideal equality. Everything here is integer
//! combinatorics; no coefficients are involved.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exponents::ExponentVector;
use crate::text::VarNames;

/// A finite set of pairwise incomparable exponent vectors, LEX-sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Antichain {
    dim: usize,
    elems: Vec<ExponentVector>,
}

impl Antichain {
    /// Validates dimensions and pairwise incomparability.
    pub fn new(dim: usize, elems: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let set: BTreeSet<ExponentVector> = elems.into_iter().collect();
        for e in &set {
            Error::check_ambient(dim, e.dim())?;
        }
        let elems: Vec<_> = set.into_iter().collect();
        for (i, a) in elems.iter().enumerate() {
            for b in &elems[i + 1..] {
                if a.divides(b) || b.divides(a) {
                    return Err(Error::domain(format!(
                        "{a} and {b} are comparable; not an antichain"
                    )));
                }
            }
        }
        Ok(Antichain { dim, elems })
    }

    pub(crate) fn from_sorted_unchecked(dim: usize, elems: Vec<ExponentVector>) -> Self {
        Antichain { dim, elems }
    }

    pub fn empty(dim: usize) -> Self {
        Antichain { dim, elems: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elems(&self) -> &[ExponentVector] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.elems.binary_search(m).is_ok()
    }

    pub fn is_subset(&self, other: &Antichain) -> bool {
        self.elems.iter().all(|e| other.contains(e))
    }

    /// Membership in the downset `D(M)` generated by the antichain.
    pub fn below(&self, m: &ExponentVector) -> bool {
        self.elems.iter().any(|e| m.divides(e))
    }

    pub fn display_with<'a>(&'a self, names: &'a VarNames) -> impl fmt::Display + 'a {
        DisplayList {
            open: "{",
            close: "}",
            empty: "",
            items: &self.elems,
            names,
        }
    }
}

impl fmt::Display for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = VarNames::indexed("x", self.dim);
        let shown = write!(f, "{}", self.display_with(&names));
        shown
    }
}

/// A monomial ideal, given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<ExponentVector>,
}

/// Result of [`MonomialIdeal::closure`].
///
/// When the docle is empty the closure is the whole poset ℕ₀ᵈ, which is the
/// unit ideal; `whole_poset` records that this case was hit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    pub ideal: MonomialIdeal,
    pub whole_poset: bool,
}

fn minimize(mut raw: Vec<ExponentVector>) -> Vec<ExponentVector> {
    // Sorting by degree first means a divisor is always seen before its multiples.
    raw.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    raw.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(raw.len());
    for g in raw {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

impl MonomialIdeal {
    /// Minimal generating set of the ideal generated by `raw`.
    pub fn from_generators(dim: usize, raw: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::domain("ambient dimension must be at least 1"));
        }
        let raw: Vec<_> = raw.into_iter().collect();
        for g in &raw {
            Error::check_ambient(dim, g.dim())?;
        }
        Ok(Self::from_raw(dim, raw))
    }

    pub(crate) fn from_raw(dim: usize, raw: Vec<ExponentVector>) -> Self {
        MonomialIdeal {
            dim,
            gens: minimize(raw),
        }
    }

    pub fn zero(dim: usize) -> Self {
        MonomialIdeal { dim, gens: Vec::new() }
    }

    pub fn unit(dim: usize) -> Self {
        MonomialIdeal {
            dim,
            gens: vec![ExponentVector::zero(dim)],
        }
    }

    /// `(x₁ᵏ, …, x_dᵏ)`.
    pub fn power_ideal(dim: usize, k: u32) -> Self {
        Self::from_raw(
            dim,
            (0..dim)
                .map(|i| ExponentVector::zero(dim).with_coord(i, k))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(ExponentVector::is_zero)
    }

    /// Every variable has a pure power among the generators.
    pub fn is_zero_dimensional(&self) -> bool {
        (0..self.dim).all(|i| {
            self.gens
                .iter()
                .any(|g| g.coords().iter().enumerate().all(|(j, &c)| (j == i) == (c > 0)) || g.is_zero())
        })
    }

    pub fn contains(&self, m: &ExponentVector) -> Result<bool> {
        Error::check_ambient(self.dim, m.dim())?;
        Ok(self.has(m))
    }

    pub(crate) fn has(&self, m: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `I ⊆ J`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        Error::check_ambient(self.dim, other.dim)?;
        Ok(self.gens.iter().all(|g| other.has(g)))
    }

    /// The ideal generated by both generator sets.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        Error::check_ambient(self.dim, other.dim)?;
        Ok(Self::from_raw(
            self.dim,
            self.gens.iter().chain(&other.gens).cloned().collect(),
        ))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        Error::check_ambient(self.dim, other.dim)?;
        let raw = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(Self::from_raw(self.dim, raw))
    }

    /// The monomials outside `I` that every variable pushes into `I`.
    ///
    /// Rejects the unit and the zero ideal.
    pub fn docle(&self) -> Result<Antichain> {
        if self.is_unit() {
            return Err(Error::domain("docle of the unit ideal is undefined"));
        }
        if self.is_zero() {
            return Err(Error::domain("docle of the zero ideal is undefined"));
        }
        Ok(self.docle_raw())
    }

    /// Docle with the conventions of the poset picture: empty for the unit
    /// and the zero ideal alike.
    pub(crate) fn docle_raw(&self) -> Antichain {
        if self.is_unit() || self.is_zero() {
            return Antichain::empty(self.dim);
        }
        // A docle point m has, for every i, a generator g with gᵢ = mᵢ + 1.
        let axes: Vec<Vec<u32>> = (0..self.dim)
            .map(|i| {
                let set: BTreeSet<u32> = self
                    .gens
                    .iter()
                    .filter(|g| g.get(i) >= 1)
                    .map(|g| g.get(i) - 1)
                    .collect();
                set.into_iter().collect()
            })
            .collect();
        let mut candidates = vec![Vec::with_capacity(self.dim)];
        for axis in &axes {
            candidates = candidates
                .into_iter()
                .flat_map(|p: Vec<u32>| {
                    axis.iter().map(move |&c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        let mut out: Vec<ExponentVector> = candidates
            .into_iter()
            .map(ExponentVector::from)
            .filter(|m| !self.has(m) && (0..self.dim).all(|i| self.has(&m.bump(i))))
            .collect();
        out.sort();
        Antichain::from_sorted_unchecked(self.dim, out)
    }

    /// The unique zero-dimensional monomial ideal whose docle is `m`:
    /// `⋂_{s∈M} (x₁^{s₁+1}, …, x_d^{s_d+1})`.
    pub fn inverse_ideal(m: &Antichain) -> Result<MonomialIdeal> {
        if m.is_empty() {
            return Err(Error::domain("inverse ideal of an empty antichain is undefined"));
        }
        let dim = m.dim();
        let irreducible = |s: &ExponentVector| {
            Self::from_raw(
                dim,
                (0..dim)
                    .map(|i| ExponentVector::zero(dim).with_coord(i, s.get(i) + 1))
                    .collect(),
            )
        };
        let mut acc = irreducible(&m.elems()[0]);
        for s in &m.elems()[1..] {
            acc = acc.intersect(&irreducible(s))?;
        }
        Ok(acc)
    }

    /// `(I : xᵢ)` with a 0-based variable index.
    pub fn colon_var(&self, i: usize) -> Result<MonomialIdeal> {
        self.check_index(i)?;
        let raw = self
            .gens
            .iter()
            .map(|g| g.with_coord(i, g.get(i).saturating_sub(1)))
            .collect();
        Ok(Self::from_raw(self.dim, raw))
    }

    /// `(I : xᵢ^∞)` with a 0-based variable index.
    pub fn colon_var_saturate(&self, i: usize) -> Result<MonomialIdeal> {
        self.check_index(i)?;
        let raw = self.gens.iter().map(|g| g.with_coord(i, 0)).collect();
        Ok(Self::from_raw(self.dim, raw))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.dim {
            return Err(Error::domain(format!(
                "variable index {} out of range 1..={}",
                i + 1,
                self.dim
            )));
        }
        Ok(())
    }

    /// `(I : 𝔪^∞) = ⋂ᵢ (I : xᵢ^∞)`.
    pub fn saturate(&self) -> Result<MonomialIdeal> {
        if self.is_unit() {
            return Err(Error::domain("saturation of the unit ideal is undefined"));
        }
        if self.is_zero() {
            return Err(Error::domain("saturation of the zero ideal is undefined"));
        }
        let mut acc = self.colon_var_saturate(0)?;
        for i in 1..self.dim {
            acc = acc.intersect(&self.colon_var_saturate(i)?)?;
        }
        Ok(acc)
    }

    /// The unique `I = J ∩ H` with `J` saturated and `H` zero-dimensional
    /// sharing the docle of `I`. Returns `(J, H)`.
    pub fn decompose(&self) -> Result<(MonomialIdeal, MonomialIdeal)> {
        let docle = self.docle()?;
        if docle.is_empty() {
            return Err(Error::domain(
                "decomposition requires a nonempty docle (I : m) != I",
            ));
        }
        let j = self.saturate()?;
        let h = Self::inverse_ideal(&docle)?;
        debug_assert_eq!(j.intersect(&h)?, *self);
        Ok((j, h))
    }

    /// `I ↦ I(G∖D(∂oc(I)))`; the whole poset when the docle is empty.
    pub fn closure(&self) -> Closure {
        let docle = self.docle_raw();
        if docle.is_empty() {
            return Closure {
                ideal: Self::unit(self.dim),
                whole_poset: true,
            };
        }
        Closure {
            ideal: Self::inverse_ideal(&docle).expect("nonempty docle"),
            whole_poset: false,
        }
    }

    /// `I ⊑ J ⇔ I ⊆ J and ∂oc(I) ⊇ ∂oc(J)`.
    pub fn sq_leq(&self, other: &MonomialIdeal) -> Result<bool> {
        if !self.is_subset(other)? {
            return Ok(false);
        }
        Ok(other.docle_raw().is_subset(&self.docle_raw()))
    }

    pub fn display_with<'a>(&'a self, names: &'a VarNames) -> impl fmt::Display + 'a {
        DisplayList {
            open: "(",
            close: ")",
            empty: "0",
            items: &self.gens,
            names,
        }
    }

    /// `{"gens": [[3,0],[0,2]]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "gens": self.gens })
    }

    pub fn from_json(dim: usize, value: &serde_json::Value) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct Raw {
            gens: Vec<Vec<u32>>,
        }
        let raw: Raw = serde_json::from_value(value.clone())
            .map_err(|e| Error::syntax(0, format!("bad ideal JSON: {e}")))?;
        Self::from_generators(dim, raw.gens.into_iter().map(ExponentVector::from))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = VarNames::indexed("x", self.dim);
        let shown = write!(f, "{}", self.display_with(&names));
        shown
    }
}

struct DisplayList<'a> {
    open: &'static str,
    close: &'static str,
    empty: &'static str,
    items: &'a [ExponentVector],
    names: &'a VarNames,
}

impl fmt::Display for DisplayList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.open)?;
        if self.items.is_empty() {
            f.write_str(self.empty)?;
        }
        for (i, m) in self.items.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", m.display_with(self.names))?;
        }
        f.write_str(self.close)
    }
}
