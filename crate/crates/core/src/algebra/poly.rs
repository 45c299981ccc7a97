use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::univariate::UnivariatePolynomial;
use super::Rational;
use crate::{Error, Extended, Result};

/// Exponent pair `(α, β)`: the power of the first variable (X) and of the
/// second variable (Y, or T for discriminants).
pub type Exponent = (u32, u32);

/// A polynomial in two variables with rational coefficients.
///
/// Stored as a sparse map from exponent pairs to nonzero coefficients, so
/// structural equality is polynomial equality. The variables are called X
/// and Y by default; the discriminant surface reuses the type with the
/// second variable read as T.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<Exponent, Rational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, a: u32, b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Self { terms }
    }

    /// The first variable, X.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    /// The second variable, Y (or T).
    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// Builds a polynomial from `(coefficient, α, β)` triples; repeated
    /// exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, u32, u32)>,
    {
        let mut p = Self::zero();
        for (c, a, b) in terms {
            p.add_term((a, b), c);
        }
        p
    }

    /// Integer-coefficient shorthand for [`from_terms`](Self::from_terms).
    pub fn from_int_terms(terms: &[(i64, u32, u32)]) -> Self {
        Self::from_terms(terms.iter().map(|&(c, a, b)| (Rational::from_integer(c.into()), a, b)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn support(&self) -> impl Iterator<Item = Exponent> + '_ {
        self.terms.keys().copied()
    }

    pub fn coefficient(&self, a: u32, b: u32) -> Rational {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Rational::zero)
    }

    /// True when the polynomial is a (possibly zero) constant.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == (0, 0))
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(0, 0)
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Degree in the second variable; `None` for the zero polynomial.
    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    /// Degree in the first variable; `None` for the zero polynomial.
    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    /// `ord f = min{α + β}` over the support, `∞` for zero.
    pub fn order(&self) -> Extended<u32> {
        self.terms
            .keys()
            .map(|&(a, b)| a + b)
            .min()
            .map_or(Extended::Infinity, Extended::Finite)
    }

    /// Smallest power of X present, `∞` for zero.
    pub fn order_x(&self) -> Extended<u32> {
        self.terms
            .keys()
            .map(|&(a, _)| a)
            .min()
            .map_or(Extended::Infinity, Extended::Finite)
    }

    /// Sum of the terms of minimal total degree.
    pub fn initial_form(&self) -> Result<Self> {
        let Extended::Finite(ord) = self.order() else {
            return Err(Error::ZeroPolynomial);
        };
        Ok(self.filter(|(a, b)| a + b == ord))
    }

    pub(crate) fn filter(&self, keep: impl Fn(Exponent) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(**e))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by `X^a Y^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), v)| ((x + a, y + b), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(&(a, _), _)| a > 0)
                .map(|(&(a, b), c)| (c * Rational::from_integer(a.into()), a - 1, b)),
        )
    }

    pub fn derivative_y(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(&(_, b), _)| b > 0)
                .map(|(&(a, b), c)| (c * Rational::from_integer(b.into()), a, b - 1)),
        )
    }

    /// Exchanges the two variables.
    pub fn swap_variables(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    /// Substitutes polynomials for both variables: `f(x_image, y_image)`.
    pub fn compose(&self, x_image: &Self, y_image: &Self) -> Self {
        let max_a = self.degree_x().unwrap_or(0) as usize;
        let max_b = self.degree_y().unwrap_or(0) as usize;
        let x_pows = powers(x_image, max_a);
        let y_pows = powers(y_image, max_b);
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            let term = (&x_pows[a as usize] * &y_pows[b as usize]).scale(c);
            out = &out + &term;
        }
        out
    }

    /// Coefficient of `Y^b` as a univariate polynomial in X.
    pub fn coefficient_of_y(&self, b: u32) -> UnivariatePolynomial {
        let deg = self
            .terms
            .keys()
            .filter(|&&(_, y)| y == b)
            .map(|&(a, _)| a)
            .max();
        let Some(deg) = deg else {
            return UnivariatePolynomial::zero();
        };
        let mut coeffs = vec![Rational::zero(); deg as usize + 1];
        for (&(a, y), c) in &self.terms {
            if y == b {
                coeffs[a as usize] = c.clone();
            }
        }
        UnivariatePolynomial::new(coeffs)
    }

    /// Formats with the given names for the two variables.
    pub fn display_with<'a>(&'a self, x: &'a str, y: &'a str) -> impl fmt::Display + 'a {
        Named { poly: self, x, y }
    }
}

fn powers(p: &BivariatePolynomial, max: usize) -> Vec<BivariatePolynomial> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(BivariatePolynomial::one());
    for i in 0..max {
        let next = &out[i] * p;
        out.push(next);
    }
    out
}

struct Named<'a> {
    poly: &'a BivariatePolynomial,
    x: &'a str,
    y: &'a str,
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        // highest power of the second variable first, then increasing X
        let mut keys: Vec<_> = self.poly.terms.iter().collect();
        keys.sort_by(|((a1, b1), _), ((a2, b2), _)| b2.cmp(b1).then(a1.cmp(a2)));
        for (i, (&(a, b), c)) in keys.into_iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                factors.push(if mag.is_integer() {
                    mag.numer().to_string()
                } else {
                    format!("{}/{}", mag.numer(), mag.denom())
                });
            }
            for (name, e) in [(self.x, a), (self.y, b)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("X", "Y").fmt(f)
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BivariatePolynomial {
            type Output = BivariatePolynomial;
            fn $m(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BivariatePolynomial> for BivariatePolynomial {
            type Output = BivariatePolynomial;
            fn $m(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        -&self
    }
}

impl std::iter::Product for BivariatePolynomial {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for BivariatePolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}
