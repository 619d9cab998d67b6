//! Text syntax for monomials, polynomials, ideals and antichains.
//!
//! ```text
//! ideal     := "(" [poly ("," poly)*] ")"
//! antichain := "{" [monomial ("," monomial)*] "}"
//! poly      := ["+"|"-"] term (("+"|"-") term)*
//! term      := [coeff ["*"]] factor (["*"] factor)* | coeff
//! factor    := var ["^" int]
//! var       := letter int | letter
//! ```
//!
//! A letter followed by digits is an indexed variable (`x2`, `t1`, 1-based);
//! a bare letter is looked up in the declared variable names.

use crate::error::{Error, Result};
use crate::exponents::ExponentVector;
use crate::field::Field;
use crate::graded::HomogeneousIdeal;
use crate::monomial_ideal::{Antichain, MonomialIdeal};
use crate::polynomial::Polynomial;

/// Printable names of the variables, by 0-based index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarNames {
    names: Vec<String>,
}

impl VarNames {
    /// `prefix1, prefix2, …`.
    pub fn indexed(prefix: &str, dim: usize) -> Self {
        VarNames {
            names: (1..=dim).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    /// Single-letter names in declaration order.
    pub fn letters<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut out: Vec<String> = Vec::new();
        for n in names {
            let n = n.as_ref().trim();
            let mut chars = n.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) if c.is_ascii_alphabetic() => {}
                _ => return Err(Error::domain(format!("variable name `{n}` must be a single letter"))),
            }
            if out.iter().any(|o| o == n) {
                return Err(Error::domain(format!("duplicate variable name `{n}`")));
            }
            out.push(n.to_string());
        }
        Ok(VarNames { names: out })
    }

    /// `x, y, z, w` truncated to `dim`; indexed names beyond four variables.
    pub fn default_letters(dim: usize) -> Self {
        if dim <= 4 {
            VarNames {
                names: ["x", "y", "z", "w"][..dim].iter().map(|s| s.to_string()).collect(),
            }
        } else {
            Self::indexed("x", dim)
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    fn lookup(&self, letter: &str) -> Option<usize> {
        self.names.iter().position(|n| n == letter)
    }
}

/// Either kind of ideal the parser can produce.
#[derive(Debug, Clone)]
pub enum ParsedIdeal<F: Field> {
    Monomial(MonomialIdeal),
    Homogeneous(HomogeneousIdeal<F>),
}

impl<F: Field> ParsedIdeal<F> {
    pub fn into_homogeneous(self) -> HomogeneousIdeal<F> {
        match self {
            ParsedIdeal::Monomial(m) => HomogeneousIdeal::from_monomial_ideal(&m),
            ParsedIdeal::Homogeneous(h) => h,
        }
    }

    pub fn into_monomial(self) -> Result<MonomialIdeal> {
        match self {
            ParsedIdeal::Monomial(m) => Ok(m),
            ParsedIdeal::Homogeneous(_) => Err(Error::domain("expected a monomial ideal")),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    dim: usize,
    names: &'a VarNames,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, dim: usize, names: &'a VarNames) -> Self {
        Parser { src, pos: 0, dim, names }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(Error::syntax(self.pos, format!("expected `{want}`, found `{c}`"))),
            None => Err(Error::syntax(self.pos, format!("expected `{want}`, found end of input"))),
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(Error::syntax(self.pos, format!("unexpected trailing `{c}`"))),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn integer<F: Field>(digits: &str) -> F {
        digits.bytes().fold(F::zero(), |acc, b| {
            acc * F::from_u64(10) + F::from_u64(u64::from(b - b'0'))
        })
    }

    fn exponent(&mut self) -> Result<u32> {
        let at = self.pos;
        let d = self
            .digits()
            .ok_or_else(|| Error::syntax(at, "expected an exponent"))?;
        d.parse()
            .map_err(|_| Error::syntax(at, format!("exponent `{d}` is too large")))
    }

    fn coefficient<F: Field>(&mut self) -> Result<Option<F>> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        let mut value = Self::integer::<F>(num);
        if self.peek() == Some('/') {
            self.bump();
            let at = self.pos;
            let den = self
                .digits()
                .ok_or_else(|| Error::syntax(at, "expected a denominator"))?;
            let den = Self::integer::<F>(den);
            if den.is_zero() {
                return Err(Error::syntax(at, "zero denominator"));
            }
            value = value / den;
        }
        Ok(Some(value))
    }

    fn variable(&mut self) -> Result<usize> {
        let start = self.pos;
        self.bump();
        match self.digits() {
            Some(idx) => {
                let i: usize = idx.parse().unwrap_or(0);
                if i == 0 || i > self.dim {
                    return Err(Error::UnknownVariable {
                        name: self.src[start..self.pos].to_string(),
                        offset: start,
                    });
                }
                Ok(i - 1)
            }
            None => {
                let name = &self.src[start..self.pos];
                self.names
                    .lookup(name)
                    .filter(|&i| i < self.dim)
                    .ok_or_else(|| Error::UnknownVariable {
                        name: name.to_string(),
                        offset: start,
                    })
            }
        }
    }

    fn term<F: Field>(&mut self) -> Result<(ExponentVector, F)> {
        self.skip_ws();
        let start = self.pos;
        let coeff = self.coefficient::<F>()?;
        let mut exp = vec![0u32; self.dim];
        let mut factors = 0;
        loop {
            self.skip_ws();
            let star = self.peek() == Some('*');
            if star {
                if coeff.is_none() && factors == 0 {
                    return Err(Error::syntax(self.pos, "unexpected `*`"));
                }
                self.bump();
                self.skip_ws();
            }
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() => {
                    let i = self.variable()?;
                    self.skip_ws();
                    let power = if self.peek() == Some('^') {
                        self.bump();
                        self.skip_ws();
                        self.exponent()?
                    } else {
                        1
                    };
                    exp[i] += power;
                    factors += 1;
                }
                _ if star => return Err(Error::syntax(self.pos, "expected a variable after `*`")),
                _ => break,
            }
        }
        if coeff.is_none() && factors == 0 {
            return Err(Error::syntax(start, "expected a term"));
        }
        Ok((ExponentVector::from(exp), coeff.unwrap_or_else(F::one)))
    }

    fn sign(&mut self) -> Option<bool> {
        self.skip_ws();
        match self.peek() {
            Some('+') => {
                self.bump();
                Some(false)
            }
            Some('-') | Some('\u{2212}') => {
                self.bump();
                Some(true)
            }
            _ => None,
        }
    }

    fn polynomial<F: Field>(&mut self) -> Result<Polynomial<F>> {
        let mut p = Polynomial::zero(self.dim);
        let mut negative = self.sign().unwrap_or(false);
        loop {
            let (e, c) = self.term::<F>()?;
            p.add_term(e, if negative { -c } else { c });
            match self.sign() {
                Some(n) => negative = n,
                None => return Ok(p),
            }
        }
    }

    fn list<T>(&mut self, open: char, close: char, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.expect(open)?;
        self.skip_ws();
        let mut out = Vec::new();
        if self.peek() == Some(close) {
            self.bump();
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.bump();
                }
                Some(c) if c == close => {
                    self.bump();
                    return Ok(out);
                }
                Some(c) => {
                    return Err(Error::syntax(self.pos, format!("expected `,` or `{close}`, found `{c}`")))
                }
                None => {
                    return Err(Error::syntax(self.pos, format!("expected `,` or `{close}`, found end of input")))
                }
            }
        }
    }
}

pub fn parse_polynomial<F: Field>(text: &str, dim: usize, names: &VarNames) -> Result<Polynomial<F>> {
    let mut p = Parser::new(text, dim, names);
    let poly = p.polynomial()?;
    p.finish()?;
    Ok(poly)
}

/// A single monomial such as `x1^2*x2`; `1` is the identity.
pub fn parse_monomial(text: &str, dim: usize, names: &VarNames) -> Result<ExponentVector> {
    let poly: Polynomial<crate::Rational> = parse_polynomial(text, dim, names)?;
    monomial_of(&poly, 0)
}

fn monomial_of<F: Field>(p: &Polynomial<F>, offset: usize) -> Result<ExponentVector> {
    match p.terms().next() {
        Some((e, c)) if p.num_terms() == 1 && c.is_one() => Ok(e.clone()),
        _ => Err(Error::syntax(offset, format!("`{p}` is not a monomial"))),
    }
}

/// Raw generator list of an ideal.
pub fn parse_generators<F: Field>(text: &str, dim: usize, names: &VarNames) -> Result<Vec<Polynomial<F>>> {
    let mut p = Parser::new(text, dim, names);
    let gens = p.list('(', ')', |p| p.polynomial())?;
    p.finish()?;
    Ok(gens)
}

/// Parses `(g1, g2, …)` or the JSON form `{"gens": [[…], …]}`. Monomial
/// ideals are detected when every generator is a single term.
pub fn parse_ideal<F: Field>(text: &str, dim: usize, names: &VarNames) -> Result<ParsedIdeal<F>> {
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| Error::syntax(e.column().saturating_sub(1), format!("bad JSON: {e}")))?;
        return Ok(ParsedIdeal::Monomial(MonomialIdeal::from_json(dim, &value)?));
    }
    let gens: Vec<Polynomial<F>> = parse_generators(text, dim, names)?;
    let gens: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    if gens.iter().all(Polynomial::is_monomial) {
        let exps = gens.iter().map(|g| g.support().next().expect("one term").clone());
        return Ok(ParsedIdeal::Monomial(MonomialIdeal::from_generators(dim, exps)?));
    }
    Ok(ParsedIdeal::Homogeneous(HomogeneousIdeal::new(dim, gens)?))
}

/// Parses `{m1, m2, …}` into an antichain.
pub fn parse_antichain(text: &str, dim: usize, names: &VarNames) -> Result<Antichain> {
    let mut p = Parser::new(text, dim, names);
    let elems = p.list('{', '}', |p| {
        p.skip_ws();
        let at = p.pos;
        let poly: Polynomial<crate::Rational> = p.polynomial()?;
        monomial_of(&poly, at)
    })?;
    p.finish()?;
    Antichain::new(dim, elems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, Rational};
    use proptest::prelude::*;

    fn xy() -> VarNames {
        VarNames::default_letters(2)
    }

    #[test]
    fn parses_example_ideal() {
        match parse_ideal::<Rational>("(x^3, y^2 - x*y)", 2, &xy()).unwrap() {
            ParsedIdeal::Homogeneous(h) => assert_eq!(h.generators().len(), 2),
            ParsedIdeal::Monomial(_) => panic!("expected a non-monomial ideal"),
        }
    }

    #[test]
    fn detects_monomial_ideal() {
        let i = parse_ideal::<Rational>("(x1^3, x2^2)", 2, &xy()).unwrap().into_monomial().unwrap();
        assert_eq!(i.gens(), &[ExponentVector::from([3, 0]), ExponentVector::from([0, 2])]);
        let j = parse_ideal::<Rational>(r#"{"gens": [[3,0],[0,2]]}"#, 2, &xy()).unwrap();
        assert_eq!(j.into_monomial().unwrap(), i);
        assert!(parse_ideal::<Rational>("()", 2, &xy()).unwrap().into_monomial().unwrap().is_zero());
    }

    #[test]
    fn syntax_error_offsets() {
        let err = parse_ideal::<Rational>("(x^3,", 2, &xy()).unwrap_err();
        assert!(matches!(err, Error::Syntax { offset: 5, .. }), "{err:?}");
        let err = parse_polynomial::<Rational>("x^", 2, &xy()).unwrap_err();
        assert!(matches!(err, Error::Syntax { offset: 2, .. }));
        let err = parse_polynomial::<Rational>("x + q", 2, &xy()).unwrap_err();
        assert_eq!(err, Error::UnknownVariable { name: "q".into(), offset: 4 });
        let err = parse_polynomial::<Rational>("x3", 2, &xy()).unwrap_err();
        assert!(matches!(err, Error::UnknownVariable { .. }));
        assert!(parse_polynomial::<Rational>("1/0*x", 2, &xy()).is_err());
        assert!(parse_polynomial::<Rational>("x y )", 2, &xy()).is_err());
        assert!(err.is_parse());
    }

    #[test]
    fn coefficients_and_juxtaposition() {
        let p: Poly = parse_polynomial("3/2*x^2 - 2xy + t2", 2, &xy()).unwrap();
        assert_eq!(p.to_string(), "3/2*x1^2 + x2 - 2*x1*x2");
        let q: Poly = parse_polynomial("−x y", 2, &xy()).unwrap();
        assert_eq!(q.to_string(), "-x1*x2");
        let c: Poly = parse_polynomial("123456789012345678901234567890", 1, &xy()).unwrap();
        assert_eq!(c.to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn antichain_syntax() {
        let a = parse_antichain("{x1^2*x2}", 2, &xy()).unwrap();
        assert_eq!(a.elems(), &[ExponentVector::from([2, 1])]);
        assert!(parse_antichain("{2*x}", 2, &xy()).is_err());
        assert!(parse_antichain("{x, x^2}", 2, &xy()).is_err());
        assert!(parse_antichain("{}", 2, &xy()).unwrap().is_empty());
        assert_eq!(parse_monomial("1", 2, &xy()).unwrap(), ExponentVector::zero(2));
    }

    #[test]
    fn custom_letters() {
        let names = VarNames::letters(&["a", "b", "c"]).unwrap();
        let p: Poly = parse_polynomial("a*c^2", 3, &names).unwrap();
        assert_eq!(p.display_with(&names).to_string(), "a*c^2");
        assert!(VarNames::letters(&["ab"]).is_err());
        assert!(VarNames::letters(&["a", "a"]).is_err());
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((prop::collection::vec(0u32..4, 3), -5i64..6, 1i64..4), 0..5).prop_map(|ts| {
            Poly::from_terms(
                3,
                ts.into_iter()
                    .map(|(e, n, d)| (ExponentVector::from(e), Rational::new(n.into(), d.into()))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(p in small_poly()) {
            let names = VarNames::indexed("x", 3);
            let printed = p.to_string();
            let back: Poly = parse_polynomial(&printed, 3, &names).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_string(), printed);
        }
    }
}
