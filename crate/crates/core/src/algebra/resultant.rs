//! Resultants with respect to Y.
//!
//! The sign convention is that of the Sylvester matrix with the rows of the
//! first operand on top. When one operand has a constant leading
//! coefficient the determinant is taken instead on the smaller matrix of
//! multiplication by the other operand modulo it; both routes agree exactly.

use num_traits::One;

use super::dense::rational_determinant;
use super::{BivariatePolynomial, Rational};
use crate::{Error, Result};

/// A polynomial in Y whose coefficients are polynomials in (X, T).
///
/// `coefficient(k)` is the coefficient of `Y^k`; the coefficient
/// polynomials read their second variable as T.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct YPolynomial {
    coeffs: Vec<BivariatePolynomial>,
}

impl YPolynomial {
    pub fn new(mut coeffs: Vec<BivariatePolynomial>) -> Self {
        while coeffs.last().is_some_and(BivariatePolynomial::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Reads `f(X, Y)` as a polynomial in Y over `Q[X]`; T does not occur.
    pub fn from_xy(f: &BivariatePolynomial) -> Self {
        let n = f.degree_y().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![BivariatePolynomial::zero(); n];
        for ((a, b), c) in f.terms() {
            coeffs[b as usize].add_term((a, 0), c.clone());
        }
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in Y; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficient(&self, k: usize) -> BivariatePolynomial {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading_coefficient(&self) -> Option<&BivariatePolynomial> {
        self.coeffs.last()
    }

    /// `self - T`.
    pub fn sub_t(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(BivariatePolynomial::zero());
        }
        coeffs[0] = &coeffs[0] - &BivariatePolynomial::monomial(Rational::one(), 0, 1);
        Self::new(coeffs)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rational::from_integer(k.into())))
                .collect(),
        )
    }

    fn constant_leading(&self) -> Option<Rational> {
        self.leading_coefficient()
            .filter(|c| c.is_constant())
            .map(BivariatePolynomial::constant_term)
    }

    /// Remainder modulo a divisor whose leading coefficient is the
    /// nonzero constant `lc`.
    fn rem_by(&self, divisor: &YPolynomial, lc_inv: &Rational) -> Vec<BivariatePolynomial> {
        let n = divisor.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        for top in (n..r.len()).rev() {
            if r[top].is_zero() {
                continue;
            }
            let q = r[top].scale(lc_inv);
            for (i, d) in divisor.coeffs.iter().enumerate() {
                r[top - n + i] = &r[top - n + i] - &(&q * d);
            }
        }
        r.resize(n, BivariatePolynomial::zero());
        r
    }
}

/// Sylvester determinant with the rows of `f` first.
pub fn sylvester_resultant(f: &YPolynomial, g: &YPolynomial) -> Result<BivariatePolynomial> {
    let (m, n) = match (f.degree(), g.degree()) {
        (Some(m), Some(n)) if m > 0 || n > 0 => (m, n),
        (None, Some(n)) | (Some(n), None) if n > 0 => return Ok(BivariatePolynomial::zero()),
        _ => return Err(Error::ConstantOperands),
    };
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (p, deg, copies) in [(f, m, n), (g, n, m)] {
        for shift in 0..copies {
            let mut row = vec![BivariatePolynomial::zero(); size];
            for k in 0..=deg {
                row[shift + deg - k] = p.coefficient(k);
            }
            rows.push(row);
        }
    }
    Ok(rational_determinant(&rows))
}

/// `Res(a, b)` when `a` has a constant leading coefficient.
fn reduction_resultant(a: &YPolynomial, b: &YPolynomial, lc: &Rational) -> BivariatePolynomial {
    let n = a.degree().unwrap_or(0);
    let m = b.degree().unwrap_or(0);
    let scale = num_traits::pow(lc.clone(), m);
    if n == 0 {
        return BivariatePolynomial::constant(scale);
    }
    let lc_inv = lc.recip();
    let mut columns = Vec::with_capacity(n);
    let mut col = b.rem_by(a, &lc_inv);
    for _ in 0..n {
        let mut next = Vec::with_capacity(n + 1);
        next.push(BivariatePolynomial::zero());
        next.extend(col.iter().cloned());
        columns.push(col);
        col = YPolynomial { coeffs: next }.rem_by(a, &lc_inv);
    }
    let rows: Vec<Vec<BivariatePolynomial>> = (0..n)
        .map(|i| columns.iter().map(|c| c[i].clone()).collect())
        .collect();
    rational_determinant(&rows).scale(&scale)
}

/// `Res_Y(f, g)`, with the sign of the Sylvester matrix with `f` rows first.
///
/// If one operand is a nonzero constant `c` in Y the result is `c` raised
/// to the degree of the other. Fails when both are constant in Y.
pub fn resultant(f: &YPolynomial, g: &YPolynomial) -> Result<BivariatePolynomial> {
    let (m, n) = match (f.degree(), g.degree()) {
        (Some(m), Some(n)) if m > 0 || n > 0 => (m, n),
        (None, Some(n)) | (Some(n), None) if n > 0 => return Ok(BivariatePolynomial::zero()),
        _ => return Err(Error::ConstantOperands),
    };
    if m == 0 {
        return Ok(f.coefficient(0).pow(n as u32));
    }
    if n == 0 {
        return Ok(g.coefficient(0).pow(m as u32));
    }
    let f_lc = f.constant_leading();
    let g_lc = g.constant_leading();
    let use_g = match (&f_lc, &g_lc) {
        (Some(_), Some(_)) => n < m,
        (None, Some(_)) => true,
        (Some(_), None) => false,
        (None, None) => return sylvester_resultant(f, g),
    };
    if use_g {
        let r = reduction_resultant(g, f, g_lc.as_ref().unwrap());
        Ok(if (m * n) % 2 == 1 { -r } else { r })
    } else {
        Ok(reduction_resultant(f, g, f_lc.as_ref().unwrap()))
    }
}

/// Resultant in Y of two polynomials in (X, Y); the result is in X alone.
pub fn resultant_y(f: &BivariatePolynomial, g: &BivariatePolynomial) -> Result<BivariatePolynomial> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::ConstantOperands);
    }
    resultant(&YPolynomial::from_xy(f), &YPolynomial::from_xy(g))
}

impl From<&BivariatePolynomial> for YPolynomial {
    fn from(f: &BivariatePolynomial) -> Self {
        Self::from_xy(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(t: &[(i64, u32, u32)]) -> BivariatePolynomial {
        BivariatePolynomial::from_int_terms(t)
    }

    #[test]
    fn linear_against_cubic() {
        let f = bp(&[(1, 0, 1), (-1, 2, 0)]);
        let g = bp(&[(1, 0, 3), (-1, 5, 0)]);
        assert_eq!(resultant_y(&f, &g).unwrap(), bp(&[(1, 6, 0), (-1, 5, 0)]));
    }

    #[test]
    fn cusp_discriminant() {
        let f = YPolynomial::from_xy(&bp(&[(1, 0, 2), (-1, 3, 0)]));
        let ft = f.sub_t();
        let fy = f.derivative();
        let expected = bp(&[(-4, 3, 0), (-4, 0, 1)]);
        assert_eq!(resultant(&ft, &fy).unwrap(), expected);
        assert_eq!(sylvester_resultant(&ft, &fy).unwrap(), expected);
    }

    #[test]
    fn routes_agree_in_both_orientations() {
        let f = YPolynomial::from_xy(&bp(&[(1, 0, 4), (-2, 3, 2), (1, 6, 0), (-1, 5, 1)]));
        let g = YPolynomial::from_xy(&bp(&[(3, 0, 3), (1, 2, 1), (-7, 4, 0)]));
        for (a, b) in [(&f, &g), (&g, &f), (&f, &f.derivative()), (&f.derivative(), &f)] {
            assert_eq!(resultant(a, b).unwrap(), sylvester_resultant(a, b).unwrap());
        }
    }

    #[test]
    fn non_monic_falls_back_to_sylvester() {
        let f = YPolynomial::from_xy(&bp(&[(1, 1, 2), (1, 0, 0)]));
        let g = YPolynomial::from_xy(&bp(&[(1, 0, 1), (-1, 1, 0)]));
        // Res(X Y^2 + 1, Y - X) = f(X, X)
        assert_eq!(resultant(&f, &g).unwrap(), bp(&[(1, 3, 0), (1, 0, 0)]));
    }

    #[test]
    fn constant_operands() {
        let c = bp(&[(3, 0, 0)]);
        let g = bp(&[(1, 0, 2), (1, 1, 0)]);
        assert_eq!(resultant_y(&c, &g).unwrap(), bp(&[(9, 0, 0)]));
        assert_eq!(resultant_y(&g, &c).unwrap(), bp(&[(9, 0, 0)]));
        assert!(matches!(resultant_y(&c, &c), Err(Error::ConstantOperands)));
    }
}
