//! Naive reference computations for cross-checking the main code paths.
//!
//! Everything here enumerates monomials directly and uses its own dense
//! elimination; nothing goes through `linalg` or the graded slice cache.
//! Inputs are size-guarded (at most three variables, degree at most 14).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exponents::ExponentVector;
use crate::monomial_ideal::{Antichain, MonomialIdeal};
use crate::polynomial::Polynomial;
use crate::{Poly, Rational};

pub const MAX_DIM: usize = 3;
pub const MAX_DEGREE: usize = 14;

fn guard(dim: usize, degree: usize) -> Result<()> {
    if dim > MAX_DIM || degree > MAX_DEGREE {
        return Err(Error::domain(format!(
            "oracle limited to d <= {MAX_DIM} and degree <= {MAX_DEGREE} (got d = {dim}, degree {degree})"
        )));
    }
    Ok(())
}

/// All exponent vectors of total degree `e`, in no particular order.
fn monomials(dim: usize, e: usize) -> Vec<Vec<u32>> {
    if dim == 1 {
        return vec![vec![e as u32]];
    }
    let mut out = Vec::new();
    for first in 0..=e {
        for mut rest in monomials(dim - 1, e - first) {
            rest.insert(0, first as u32);
            out.push(rest);
        }
    }
    out
}

fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone() / rows[r][c].clone();
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= f.clone() * y.clone();
                }
            }
        }
        r += 1;
    }
    r
}

/// Null space of `A` (given as rows), as a list of basis vectors.
fn null_space(a: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = a.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x *= inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= f.clone() * y.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[row][free].clone();
            }
            v
        })
        .collect()
}

fn coords(p: &Poly, basis: &[Vec<u32>]) -> Vec<Rational> {
    basis
        .iter()
        .map(|m| p.coeff(&ExponentVector::from(m.clone())))
        .collect()
}

/// `∂^α Q` computed term by term from the power rule.
fn derivative(alpha: &[u32], q: &Poly) -> Poly {
    let mut out: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    'terms: for (e, c) in q.terms() {
        let mut c = c.clone();
        let mut exp = e.coords().to_vec();
        for (i, &a) in alpha.iter().enumerate() {
            for _ in 0..a {
                if exp[i] == 0 {
                    continue 'terms;
                }
                c *= Rational::from_integer(exp[i].into());
                exp[i] -= 1;
            }
        }
        *out.entry(exp).or_insert_with(Rational::zero) += c;
    }
    Polynomial::from_terms(q.dim(), out.into_iter().map(|(e, c)| (ExponentVector::from(e), c)))
        .expect("same ambient")
}

/// Scans every `m ≤ box` and keeps those outside `I` whose upward
/// neighbours all lie in `I`.
pub fn brute_docle(ideal: &MonomialIdeal, bound: &ExponentVector) -> Result<Antichain> {
    Error::check_ambient(ideal.dim(), bound.dim())?;
    if let Some(g) = ideal.gens().iter().find(|g| !g.leq(bound).unwrap_or(false)) {
        return Err(Error::domain(format!("generator {g} escapes the box {bound}")));
    }
    let member = |m: &[u32]| {
        ideal
            .gens()
            .iter()
            .any(|g| g.coords().iter().zip(m).all(|(a, b)| a <= b))
    };
    let dim = ideal.dim();
    let top: usize = bound.coords().iter().map(|&c| c as usize).sum();
    let mut found = Vec::new();
    for e in 0..=top {
        for m in monomials(dim, e) {
            if m.iter().zip(bound.coords()).any(|(a, b)| a > b) || member(&m) {
                continue;
            }
            let all_up = (0..dim).all(|i| {
                let mut up = m.clone();
                up[i] += 1;
                member(&up)
            });
            if all_up {
                found.push(ExponentVector::from(m));
            }
        }
    }
    Antichain::new(dim, found)
}

/// One degree of `Ann_∂(Q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnDegree {
    pub degree: usize,
    pub kernel_dim: usize,
    pub basis: Vec<Poly>,
}

/// Differentiates `Q` by every monomial of each degree `e ≤ max_deg` and
/// takes the kernel of the resulting matrix.
pub fn brute_ann(q: &Poly, max_deg: usize) -> Result<Vec<AnnDegree>> {
    let m = q
        .homogeneous_degree()
        .ok_or_else(|| Error::domain("Q must be nonzero and homogeneous"))?;
    if max_deg < m + 1 {
        return Err(Error::domain(format!("max_deg must be at least deg Q + 1 = {}", m + 1)));
    }
    guard(q.dim(), max_deg)?;
    let dim = q.dim();
    let mut out = Vec::new();
    for e in 0..=max_deg {
        let basis = monomials(dim, e);
        let basis_vecs: Vec<ExponentVector> = basis.iter().cloned().map(ExponentVector::from).collect();
        let target = if e <= m { monomials(dim, m - e) } else { Vec::new() };
        // matrix rows indexed by target monomials, columns by basis monomials
        let cols: Vec<Vec<Rational>> = basis.iter().map(|b| coords(&derivative(b, q), &target)).collect();
        let rows: Vec<Vec<Rational>> = (0..target.len())
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect();
        let kernel = null_space(&rows, basis.len());
        let polys = kernel
            .iter()
            .map(|v| {
                Polynomial::from_terms(dim, basis_vecs.iter().cloned().zip(v.iter().cloned()))
                    .expect("same ambient")
            })
            .collect();
        out.push(AnnDegree {
            degree: e,
            kernel_dim: kernel.len(),
            basis: polys,
        });
    }
    Ok(out)
}

/// Spanning set of `I_e`: every monomial multiple of every generator.
pub fn brute_degree_span(gens: &[Poly], e: usize) -> Vec<Poly> {
    let mut out = Vec::new();
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > e {
            continue;
        }
        for m in monomials(g.dim(), e - dg) {
            out.push(g.shift(&ExponentVector::from(m)));
        }
    }
    out
}

fn rank_of(polys: &[Poly], basis: &[Vec<u32>]) -> usize {
    rank(polys.iter().map(|p| coords(p, basis)).collect())
}

/// Whether two sets of homogeneous degree-`e` polynomials span the same space.
pub fn brute_same_span(dim: usize, e: usize, a: &[Poly], b: &[Poly]) -> bool {
    let basis = monomials(dim, e);
    let ra = rank_of(a, &basis);
    let both: Vec<Poly> = a.iter().chain(b).cloned().collect();
    ra == rank_of(b, &basis) && ra == rank_of(&both, &basis)
}

/// `dim (R/I)_e` for `e = 0, 1, …` until it vanishes.
pub fn brute_hilbert(gens: &[Poly], cutoff: usize) -> Result<Vec<usize>> {
    let dim = gens.first().map_or(0, Polynomial::dim);
    if dim == 0 {
        return Err(Error::domain("need at least one generator"));
    }
    let mut h = Vec::new();
    for e in 0..=cutoff {
        guard(dim, e)?;
        let basis = monomials(dim, e);
        let value = basis.len() - rank_of(&brute_degree_span(gens, e), &basis);
        if value == 0 {
            return Ok(h);
        }
        h.push(value);
    }
    Err(Error::NotArtinian { cutoff })
}

/// `dim_K R/I` by summing [`brute_hilbert`].
pub fn brute_quotient_dim(gens: &[Poly], cutoff: usize) -> Result<usize> {
    Ok(brute_hilbert(gens, cutoff)?.iter().sum())
}

/// Standard monomials of degree `e`: `m` is standard unless `x^m` lies in
/// `I_e` plus the span of the LEX-smaller monomials.
pub fn brute_standard_monomials(gens: &[Poly], dim: usize, e: usize) -> Vec<ExponentVector> {
    let basis = monomials(dim, e);
    let span = brute_degree_span(gens, e);
    let mut sorted: Vec<ExponentVector> = basis.iter().cloned().map(ExponentVector::from).collect();
    sorted.sort();
    let one = |m: &ExponentVector| Polynomial::monomial(m.clone(), Rational::one());
    let mut lower: Vec<Poly> = span.clone();
    let mut out = Vec::new();
    for m in &sorted {
        let before = rank_of(&lower, &basis);
        lower.push(one(m));
        if rank_of(&lower, &basis) > before {
            out.push(m.clone());
        }
    }
    out
}

/// Hilbert function of `((x₁ᵏ,…,x_dᵏ) : p)` from the ranks of
/// multiplication by `p` into `R/(x₁ᵏ,…,x_dᵏ)`.
pub fn brute_colon_hilbert(k: u32, p: &Poly) -> Result<Vec<usize>> {
    let n = p
        .homogeneous_degree()
        .ok_or_else(|| Error::domain("p must be nonzero and homogeneous"))?;
    let dim = p.dim();
    let outside = |m: &[u32]| m.iter().all(|&c| c < k);
    let mut h = Vec::new();
    for e in 0.. {
        guard(dim, e)?;
        let target: Vec<Vec<u32>> = monomials(dim, e + n).into_iter().filter(|m| outside(m)).collect();
        let rows: Vec<Vec<Rational>> = monomials(dim, e)
            .into_iter()
            .map(|m| coords(&p.shift(&ExponentVector::from(m)), &target))
            .collect();
        let value = if target.is_empty() { 0 } else { rank(rows) };
        if value == 0 {
            break;
        }
        h.push(value);
    }
    Ok(h)
}

/// `dim_K R/((x₁ᵏ,…,x_dᵏ) : p)`.
pub fn brute_colon_quotient_dim(k: u32, p: &Poly) -> Result<usize> {
    Ok(brute_colon_hilbert(k, p)?.iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_polynomial, VarNames};

    fn poly(s: &str) -> Poly {
        parse_polynomial(s, 2, &VarNames::default_letters(2)).unwrap()
    }

    fn ideal(gens: &[[u32; 2]]) -> MonomialIdeal {
        MonomialIdeal::from_generators(2, gens.iter().map(|&g| ExponentVector::from(g))).unwrap()
    }

    #[test]
    fn docle_examples() {
        let b4 = ExponentVector::from([4, 4]);
        let b3 = ExponentVector::from([3, 3]);
        assert_eq!(brute_docle(&ideal(&[[3, 0], [0, 2]]), &b4).unwrap().elems(), &[ExponentVector::from([2, 1])]);
        assert_eq!(brute_docle(&ideal(&[[2, 0], [1, 1]]), &b3).unwrap().elems(), &[ExponentVector::from([1, 0])]);
        assert!(brute_docle(&ideal(&[[1, 1]]), &b3).unwrap().is_empty());
        assert!(brute_docle(&ideal(&[[5, 0]]), &b3).is_err());
    }

    #[test]
    fn ann_examples() {
        let q = parse_polynomial::<Rational>("t1^2*t2", 2, &VarNames::indexed("t", 2)).unwrap();
        let ann = brute_ann(&q, 4).unwrap();
        let dims: Vec<_> = ann.iter().map(|a| a.kernel_dim).collect();
        assert_eq!(dims, [0, 0, 1, 3, 5]);
        assert_eq!(ann[2].basis, [poly("y^2")]);
        let one = Poly::one(2);
        let ann = brute_ann(&one, 1).unwrap();
        assert_eq!(ann[1].kernel_dim, 2);
        assert!(brute_ann(&q, 3).is_err());
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(brute_hilbert(&[poly("x^3"), poly("y^2 - x*y")], 10).unwrap(), [1, 2, 2, 1]);
        assert_eq!(brute_quotient_dim(&[Poly::one(2)], 5).unwrap(), 0);
        assert!(brute_quotient_dim(&[poly("x")], 5).is_err());
        assert_eq!(brute_colon_quotient_dim(10, &poly("y^6 + x^3*y^3 + x^5*y")).unwrap(), 49);
        assert_eq!(brute_colon_hilbert(4, &poly("x*y^2 + x^2*y + x^3")).unwrap(), [1, 2, 2, 1]);
    }

    #[test]
    fn standard_monomials_example() {
        let gens = [poly("x^3"), poly("y^2 - x*y")];
        let std = brute_standard_monomials(&gens, 2, 2);
        assert_eq!(std, [ExponentVector::from([2, 0]), ExponentVector::from([1, 1])]);
    }
}
