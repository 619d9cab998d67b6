//! Homogeneous artinian Gorenstein ideals `I = ((x₁ᵏ,…,x_dᵏ) : p)`.
//!
//! A [`GorensteinSpec`] fixes `d`, `k` and `p`; from it come the socle
//! monomial `x^{(k−1)1̃−μ̃}`, the antipodal polynomial whose apolar annihilator
//! is `I`, the dual socle polynomial `(Σ tᵢx̄ᵢ)^M` and the checks relating them.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exponents::{box_points, monomials_of_degree, ExponentVector};
use crate::field::Field;
use crate::graded::HomogeneousIdeal;
use crate::linalg::{kernel_of_columns, RowSpace};
use crate::monomial_ideal::MonomialIdeal;
use crate::polynomial::Polynomial;

#[derive(Debug, Clone)]
pub struct GorensteinSpec<F: Field> {
    k: u32,
    p: Polynomial<F>,
    n: usize,
    m: usize,
    mu: ExponentVector,
    ideal: OnceLock<HomogeneousIdeal<F>>,
}

impl<F: Field> GorensteinSpec<F> {
    /// Terms of `p` outside the box `(k−1)1̃` are dropped since they vanish
    /// modulo the power ideal.
    pub fn new(k: u32, p: &Polynomial<F>) -> Result<Self> {
        if k == 0 {
            return Err(Error::domain("k must be at least 1"));
        }
        let n = p
            .homogeneous_degree()
            .ok_or_else(|| Error::domain(format!("p = {p} must be nonzero and homogeneous")))?;
        let p = p.drop_multiples_of(MonomialIdeal::power_ideal(p.dim(), k).gens());
        let Some((mu, _)) = p.leading_term() else {
            return Err(Error::domain(format!(
                "p vanishes modulo (x1^{k}, ..., x{}^{k})",
                p.dim()
            )));
        };
        let mu = mu.clone();
        let m = p.dim() * (k as usize - 1) - n;
        Ok(GorensteinSpec {
            k,
            p,
            n,
            m,
            mu,
            ideal: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.p.dim()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `p` with the terms that vanish modulo the power ideal removed.
    pub fn p(&self) -> &Polynomial<F> {
        &self.p
    }

    /// `N = deg p`.
    pub fn degree(&self) -> usize {
        self.n
    }

    /// `M = d(k−1) − N`, the top degree of `R/I`.
    pub fn top_degree(&self) -> usize {
        self.m
    }

    /// LEX-largest exponent of `p`.
    pub fn mu(&self) -> &ExponentVector {
        &self.mu
    }

    fn corner(&self) -> ExponentVector {
        ExponentVector::constant(self.dim(), self.k - 1)
    }

    /// `(k−1)1̃ − μ̃`.
    pub fn socle_monomial(&self) -> ExponentVector {
        self.corner().minus(&self.mu).expect("support lies in the box")
    }

    /// `I = ((x₁ᵏ,…,x_dᵏ) : p)`, computed once.
    pub fn ideal(&self) -> &HomogeneousIdeal<F> {
        self.ideal.get_or_init(|| {
            HomogeneousIdeal::colon_power_ideal(self.k, &self.p).expect("validated at construction")
        })
    }

    /// `p^△ = Σ multinomial(M; k−1−i₁, …, k−1−i_d) a_ĩ t^{(k−1)1̃−ĩ}`.
    pub fn antipodal(&self) -> Polynomial<F> {
        let corner = self.corner();
        let mut out = Polynomial::zero(self.dim());
        for (i, a) in self.p.terms() {
            let reflected = corner.minus(i).expect("support lies in the box");
            let weight = F::multinomial(reflected.coords());
            out.add_term(reflected, weight * a.clone());
        }
        out
    }

    /// Coefficient of the socle class in `(Σ tᵢx̄ᵢ)^M`, as a polynomial in `t`,
    /// with the socle class of degree `M` sent to 1.
    pub fn dual_socle_poly_raw(&self) -> Result<Polynomial<F>> {
        let top = self.ideal().slice(self.m);
        let std = top.standard_monomials();
        if std.len() != 1 {
            return Err(Error::domain(format!(
                "(R/I)_{} has dimension {}, expected 1",
                self.m,
                std.len()
            )));
        }
        let mut out = Polynomial::zero(self.dim());
        for alpha in monomials_of_degree(self.dim(), self.m) {
            let c = top.standard_coords_of_monomial(&alpha).swap_remove(0);
            if !c.is_zero() {
                let weight = F::multinomial(alpha.coords());
                out.add_term(alpha, weight * c);
            }
        }
        Ok(out)
    }

    /// [`Self::dual_socle_poly_raw`] rescaled so that its LEX-largest
    /// coefficient agrees with that of [`Self::antipodal`].
    pub fn dual_socle_poly(&self) -> Result<Polynomial<F>> {
        let raw = self.dual_socle_poly_raw()?;
        let anti = self.antipodal();
        let (Some((_, r)), Some((_, a))) = (raw.leading_term(), anti.leading_term()) else {
            return Err(Error::domain("dual socle polynomial vanishes"));
        };
        Ok(raw.scale(&(a.clone() / r.clone())))
    }

    /// `((x₁ᵏ,…,x_dᵏ) : p) = Ann_∂(p^△)`.
    pub fn verify_gorenstein_ann(&self) -> Result<bool> {
        let ann = HomogeneousIdeal::ann_partial(&self.antipodal())?;
        self.ideal().ideal_equals(&ann)
    }

    pub fn monomial_iff_test(&self) -> Result<MonomialIffReport> {
        let q = Polynomial::monomial(self.socle_monomial(), F::one());
        let ann = HomogeneousIdeal::ann_partial(&q)?;
        Ok(MonomialIffReport {
            is_monomial_ideal: self.ideal().is_monomial_ideal()?,
            socle_monomial: self.socle_monomial(),
            ann_of_socle_equals_ideal: self.ideal().ideal_equals(&ann)?,
        })
    }

    /// Socle dimension, the socle monomial and the box `B(I)` being standard,
    /// Hilbert symmetry and nondegeneracy of the multiplication pairing.
    pub fn socle_structure(&self) -> Result<SocleReport> {
        let ideal = self.ideal();
        let h = ideal.hilbert_function()?;
        let socle = self.socle_monomial();
        let is_standard = |m: &ExponentVector| {
            ideal.slice(m.degree()).standard_monomials().contains(m)
        };
        let top = ideal.slice(self.m);
        let pairings_invertible = top.hilbert_value() == 1
            && (0..=self.m).all(|i| {
                let (left, right) = (ideal.slice(i), ideal.slice(self.m - i));
                let (u, v) = (left.standard_monomials(), right.standard_monomials());
                if u.len() != v.len() {
                    return false;
                }
                let rows = u.iter().map(|a| {
                    v.iter()
                        .map(|b| top.standard_coords_of_monomial(&a.plus(b)).swap_remove(0))
                        .collect::<Vec<F>>()
                });
                RowSpace::from_rows(v.len(), rows).rank() == u.len()
            });
        Ok(SocleReport {
            socle_dimension: ideal.socle_dimension()?,
            socle_monomial_standard: is_standard(&socle),
            box_standard: box_points(&socle).iter().all(is_standard),
            hilbert_symmetric: h.len() == self.m + 1 && (0..=self.m).all(|i| h[i] == h[self.m - i]),
            pairings_invertible,
            hilbert: h,
        })
    }

    /// Checks that `I = {g : g(∂/∂t) f(Σ tᵢx̄ᵢ) = 0}` degree by degree, and
    /// that `(Σ tᵢx̄ᵢ)ⁿ` is nonzero exactly for `n ≤ M`.
    pub fn series_annihilator_check(&self, f: &SeriesSpec<F>) -> Result<SeriesReport> {
        let coeffs = f.coeffs();
        if coeffs.len() <= self.m {
            return Err(Error::domain(format!(
                "series needs coefficients a_0..a_{}, got {}",
                self.m,
                coeffs.len()
            )));
        }
        if let Some(n) = coeffs[..=self.m].iter().position(|c| c.is_zero()) {
            return Err(Error::domain(format!("series coefficient a_{n} is zero")));
        }
        let ideal = self.ideal();
        let dim = self.dim();

        // f(Σ tᵢx̄ᵢ) = Σ_α a_{|α|} multinomial(α) t^α x̄^α, stored per α as the
        // normal form of x^α in the standard basis of its degree.
        let mut table: Vec<(ExponentVector, F, Vec<F>)> = Vec::new();
        for (n, a) in coeffs.iter().enumerate().take(self.m + 1) {
            let slice = ideal.slice(n);
            for alpha in monomials_of_degree(dim, n) {
                let nf = slice.standard_coords_of_monomial(&alpha);
                if nf.iter().any(|c| !c.is_zero()) {
                    let weight = a.clone() * F::multinomial(alpha.coords());
                    table.push((alpha, weight, nf));
                }
            }
        }
        let power_nonzero = |n: usize| table.iter().any(|(alpha, _, _)| alpha.degree() == n);
        let nonzero_through_top = (0..=self.m).all(power_nonzero);
        let vanishes_above_top = ideal.slice(self.m + 1).is_full();

        let mut kernels_match = true;
        for e in 0..=self.m + 1 {
            let slice = ideal.slice(e);
            // rows of the operator matrix are keyed by (t-exponent, standard monomial)
            let mut keys: BTreeMap<(ExponentVector, usize, usize), usize> = BTreeMap::new();
            let mut entries: Vec<Vec<(usize, F)>> = Vec::new();
            for beta in slice.monomial_basis() {
                let mut col = Vec::new();
                for (alpha, weight, nf) in &table {
                    let Some(gamma) = alpha.minus(beta) else { continue };
                    let factor = weight.clone()
                        * alpha
                            .coords()
                            .iter()
                            .zip(beta.coords())
                            .fold(F::one(), |acc, (&a, &b)| {
                                acc * F::falling_factorial(u64::from(a), u64::from(b))
                            });
                    for (s, c) in nf.iter().enumerate() {
                        if !c.is_zero() {
                            let next = keys.len();
                            let row = *keys.entry((gamma.clone(), alpha.degree(), s)).or_insert(next);
                            col.push((row, factor.clone() * c.clone()));
                        }
                    }
                }
                entries.push(col);
            }
            let columns: Vec<Vec<F>> = entries
                .into_iter()
                .map(|col| {
                    let mut v = vec![F::zero(); keys.len()];
                    for (r, c) in col {
                        v[r] = v[r].clone() + c;
                    }
                    v
                })
                .collect();
            let kernel = kernel_of_columns(keys.len(), &columns);
            if &kernel != slice.row_space() {
                kernels_match = false;
            }
        }
        Ok(SeriesReport {
            kernels_match,
            nonzero_through_top,
            vanishes_above_top,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIffReport {
    pub is_monomial_ideal: bool,
    pub socle_monomial: ExponentVector,
    pub ann_of_socle_equals_ideal: bool,
}

impl MonomialIffReport {
    pub fn agree(&self) -> bool {
        self.is_monomial_ideal == self.ann_of_socle_equals_ideal
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleReport {
    pub socle_dimension: usize,
    pub socle_monomial_standard: bool,
    pub box_standard: bool,
    pub hilbert_symmetric: bool,
    pub pairings_invertible: bool,
    pub hilbert: Vec<usize>,
}

impl SocleReport {
    pub fn passed(&self) -> bool {
        self.socle_dimension == 1
            && self.socle_monomial_standard
            && self.box_standard
            && self.hilbert_symmetric
            && self.pairings_invertible
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    /// For every degree `e ≤ M+1` the annihilator of `f(Σ tᵢx̄ᵢ)` equals `I_e`.
    pub kernels_match: bool,
    pub nonzero_through_top: bool,
    pub vanishes_above_top: bool,
}

impl SeriesReport {
    pub fn passed(&self) -> bool {
        self.kernels_match && self.nonzero_through_top && self.vanishes_above_top
    }
}

/// Truncated power series `a₀ + a₁z + ⋯`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSpec<F> {
    coeffs: Vec<F>,
}

impl<F: Field> SeriesSpec<F> {
    pub fn from_coeffs(coeffs: Vec<F>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::domain("series needs at least one coefficient"));
        }
        Ok(SeriesSpec { coeffs })
    }

    /// `eᶻ` up to `z^m`.
    pub fn exp(m: usize) -> Self {
        SeriesSpec {
            coeffs: (0..=m as u64).map(|n| F::one() / F::factorial(n)).collect(),
        }
    }

    /// `1/(1−z)` up to `z^m`.
    pub fn geometric(m: usize) -> Self {
        SeriesSpec {
            coeffs: vec![F::one(); m + 1],
        }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_polynomial, VarNames};
    use crate::{Poly, Rational, Series, Spec};

    fn poly(s: &str) -> Poly {
        parse_polynomial(s, 2, &VarNames::default_letters(2)).unwrap()
    }

    fn spec(k: u32, p: &str) -> Spec {
        Spec::new(k, &poly(p)).unwrap()
    }

    fn dual(s: &str) -> Poly {
        parse_polynomial(s, 2, &VarNames::indexed("t", 2)).unwrap()
    }

    #[test]
    fn antipodal_examples() {
        assert_eq!(spec(4, "x*y^2 + x^2*y + x^3").antipodal(), dual("3*t1^2*t2 + 3*t1*t2^2 + t2^3"));
        assert_eq!(spec(3, "y").antipodal(), dual("3*t1^2*t2"));
        assert_eq!(
            spec(10, "y^6 + x^3*y^3 + x^5*y").antipodal(),
            dual("220*t1^9*t2^3 + 924*t1^6*t2^6 + 495*t1^4*t2^8")
        );
    }

    #[test]
    fn spec_data() {
        let s = spec(10, "y^6 + x^3*y^3 + x^5*y");
        assert_eq!(s.mu(), &ExponentVector::from([0, 6]));
        assert_eq!(s.socle_monomial(), ExponentVector::from([9, 3]));
        assert_eq!((s.degree(), s.top_degree()), (6, 12));
        // x^4 vanishes modulo (x^3, y^3)
        let t = spec(3, "x^4 + x^2*y^2");
        assert_eq!(t.p(), &poly("x^2*y^2"));
        assert!(Spec::new(3, &poly("x^3 + y^4")).is_err());
        assert!(Spec::new(3, &poly("x^2 + y")).is_err());
        assert!(Spec::new(0, &poly("x")).is_err());
    }

    #[test]
    fn dual_socle_examples() {
        let s = spec(4, "x*y^2 + x^2*y + x^3");
        assert_eq!(s.dual_socle_poly_raw().unwrap(), dual("3*t1^2*t2 + 3*t1*t2^2 + t2^3"));
        assert_eq!(spec(3, "y").dual_socle_poly_raw().unwrap(), dual("3*t1^2*t2"));
        let s3 = spec(10, "y^6 + x^3*y^3 + x^5*y");
        assert_eq!(s3.dual_socle_poly().unwrap(), s3.antipodal());
    }

    #[test]
    fn gorenstein_and_monomial_iff() {
        for (k, p, monomial) in [(4, "x*y^2 + x^2*y + x^3", false), (3, "y", true), (10, "y^6 + x^3*y^3 + x^5*y", false)] {
            let s = spec(k, p);
            assert!(s.verify_gorenstein_ann().unwrap());
            let r = s.monomial_iff_test().unwrap();
            assert_eq!(r.is_monomial_ideal, monomial);
            assert!(r.agree());
            assert!(s.socle_structure().unwrap().passed());
        }
    }

    #[test]
    fn series_examples() {
        let s = spec(4, "x*y^2 + x^2*y + x^3");
        assert!(s.series_annihilator_check(&Series::exp(3)).unwrap().passed());
        assert!(s.series_annihilator_check(&Series::geometric(3)).unwrap().passed());
        assert!(s.series_annihilator_check(&Series::geometric(2)).is_err());
        let zero = Series::from_coeffs(vec![Rational::from_integer(1.into()), Rational::from_integer(0.into()), Rational::from_integer(1.into()), Rational::from_integer(1.into())]).unwrap();
        assert!(s.series_annihilator_check(&zero).is_err());
    }

    #[test]
    fn corner_sums() {
        // ĩ + j̃ with |ĩ + j̃| = d(k−1): either a coordinate reaches k or the sum is (k−1)1̃
        let (d, k) = (3usize, 3u32);
        let total = d * (k as usize - 1);
        for a in 0..=total {
            for i in monomials_of_degree(d, a) {
                for j in monomials_of_degree(d, total - a) {
                    let s = i.plus(&j);
                    assert!(s.coords().iter().any(|&c| c >= k) || s == ExponentVector::constant(d, k - 1));
                }
            }
        }
    }

    #[test]
    fn socle_classes_of_support() {
        let s = spec(4, "x*y^2 + x^2*y + x^3");
        let ideal = s.ideal();
        let corner = ExponentVector::constant(2, 3);
        let support: Vec<_> = s.p().terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        for (i, _) in &support {
            let m = corner.minus(i).unwrap();
            let mono = Poly::monomial(m.clone(), Rational::from_integer(1.into()));
            assert!(!ideal.contains(&mono).unwrap());
            for v in 0..2 {
                let up = Poly::monomial(m.bump(v), Rational::from_integer(1.into()));
                assert!(ideal.contains(&up).unwrap());
            }
        }
        for (i, a) in &support {
            for (j, b) in &support {
                let pair = Poly::monomial(corner.minus(j).unwrap(), a.clone())
                    .checked_sub(&Poly::monomial(corner.minus(i).unwrap(), b.clone()))
                    .unwrap();
                assert!(ideal.contains(&pair).unwrap());
            }
        }
    }
}
