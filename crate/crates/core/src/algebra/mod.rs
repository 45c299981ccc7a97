//! Exact polynomial arithmetic, resultants, intersection and Milnor numbers.

mod dense;
mod poly;
pub mod resultant;
mod univariate;

use num_traits::{One, Zero};

pub use poly::{BivariatePolynomial, Exponent};
pub use resultant::{resultant as resultant_in_y, resultant_y, sylvester_resultant, YPolynomial};
pub use univariate::UnivariatePolynomial;

use crate::{DistinguishedFailure, Error, Extended, Result};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn order(f: &BivariatePolynomial) -> Extended<u32> {
    f.order()
}

pub fn initial_form(f: &BivariatePolynomial) -> Result<BivariatePolynomial> {
    f.initial_form()
}

/// Checks that `f = Y^n + a_1(X)Y^(n-1) + ... + a_n(X)` with `a_i(0) = 0`
/// and returns `n`.
pub fn check_distinguished(f: &BivariatePolynomial) -> Result<u32> {
    let fail = |r| Err(Error::NotDistinguished(r));
    let n = match f.degree_y() {
        Some(n) if n > 0 => n,
        _ => return fail(DistinguishedFailure::ConstantInY),
    };
    let top = f.coefficient_of_y(n);
    if top.degree() != Some(0) || !top.constant_term().is_one() {
        return fail(DistinguishedFailure::NotMonic);
    }
    if let Some(((_, b), _)) = f.terms().find(|&((a, b), _)| a == 0 && b < n) {
        return fail(DistinguishedFailure::TermAtOrigin { y_power: b });
    }
    Ok(n)
}

/// Number of distinct lines in the tangent cone.
pub fn tangent_count(f: &BivariatePolynomial) -> Result<u32> {
    let Extended::Finite(ord) = f.order() else {
        return Err(Error::ZeroPolynomial);
    };
    if ord == 0 {
        return Err(Error::Unit);
    }
    let form = f.initial_form()?;
    let min_a = form.support().map(|(a, _)| a).min().unwrap_or(0);
    let min_b = form.support().map(|(_, b)| b).min().unwrap_or(0);
    // Dehomogenize at X = 1 once the monomial factor is removed.
    let mut coeffs = vec![Rational::zero(); (ord - min_a - min_b) as usize + 1];
    for ((_, b), c) in form.terms() {
        coeffs[(b - min_b) as usize] = c.clone();
    }
    let rest = UnivariatePolynomial::new(coeffs).distinct_root_count() as u32;
    Ok(u32::from(min_a > 0) + u32::from(min_b > 0) + rest)
}

/// `(f, g)_0 = ord_X Res_Y(f, g)` for Y-distinguished `f`.
pub fn intersection_number(f: &BivariatePolynomial, g: &BivariatePolynomial) -> Result<Extended<u64>> {
    check_distinguished(f)?;
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let r = resultant_y(f, g)?;
    Ok(r.order_x().map(u64::from))
}

fn discriminant_order(f: &BivariatePolynomial) -> Result<(u32, u64)> {
    let n = check_distinguished(f)?;
    let r = resultant_y(f, &f.derivative_y())?;
    match r.order_x() {
        Extended::Finite(k) => Ok((n, u64::from(k))),
        Extended::Infinity => Err(Error::NotSquarefree),
    }
}

/// `μ(f) = (f, ∂f/∂Y)_0 - n + 1` for Y-distinguished squarefree `f` of degree `n`.
pub fn milnor_number(f: &BivariatePolynomial) -> Result<u64> {
    let (n, k) = discriminant_order(f)?;
    Ok(k + 1 - u64::from(n))
}

/// True iff `f` has no repeated factor, i.e. `Res_Y(f, ∂f/∂Y) ≠ 0`.
pub fn squarefree_test(f: &BivariatePolynomial) -> Result<bool> {
    match discriminant_order(f) {
        Ok(_) => Ok(true),
        Err(Error::NotSquarefree) => Ok(false),
        Err(e) => Err(e),
    }
}

/// `f(X, Y + p(X))` for `p(0) = 0`.
pub fn coordinate_shear(f: &BivariatePolynomial, p: &UnivariatePolynomial) -> Result<BivariatePolynomial> {
    if !p.constant_term().is_zero() {
        return Err(Error::ShearConstantTerm);
    }
    let px = BivariatePolynomial::from_terms(
        p.coeffs().iter().enumerate().map(|(a, c)| (c.clone(), a as u32, 0)),
    );
    Ok(f.compose(&BivariatePolynomial::x(), &(&BivariatePolynomial::y() + &px)))
}

/// `f(aX + bY, cX + dY)` for the invertible matrix `[[a, b], [c, d]]`.
pub fn linear_substitution(f: &BivariatePolynomial, m: [[Rational; 2]; 2]) -> Result<BivariatePolynomial> {
    let [[a, b], [c, d]] = m;
    if (&a * &d - &b * &c).is_zero() {
        return Err(Error::SingularSubstitution);
    }
    let lin = |p: Rational, q: Rational| BivariatePolynomial::from_terms([(p, 1, 0), (q, 0, 1)]);
    Ok(f.compose(&lin(a, b), &lin(c, d)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(t: &[(i64, u32, u32)]) -> BivariatePolynomial {
        BivariatePolynomial::from_int_terms(t)
    }

    #[test]
    fn distinguished_checks() {
        assert_eq!(check_distinguished(&bp(&[(1, 0, 2), (-1, 3, 0)])), Ok(2));
        assert_eq!(
            check_distinguished(&bp(&[(1, 3, 0)])),
            Err(Error::NotDistinguished(DistinguishedFailure::ConstantInY))
        );
        assert_eq!(
            check_distinguished(&bp(&[(2, 0, 2), (-1, 3, 0)])),
            Err(Error::NotDistinguished(DistinguishedFailure::NotMonic))
        );
        assert_eq!(
            check_distinguished(&bp(&[(1, 0, 2), (1, 0, 1)])),
            Err(Error::NotDistinguished(DistinguishedFailure::TermAtOrigin { y_power: 1 }))
        );
    }

    #[test]
    fn tangents() {
        assert_eq!(tangent_count(&bp(&[(1, 3, 3), (1, 2, 4), (1, 8, 0), (1, 0, 7)])), Ok(3));
        assert_eq!(tangent_count(&bp(&[(1, 4, 2), (1, 8, 0), (1, 0, 7)])), Ok(2));
        assert_eq!(tangent_count(&bp(&[(1, 0, 2), (-1, 3, 0)])), Ok(1));
        // X^2 - Y^2 has two tangents, X^2 + Y^2 too over C.
        assert_eq!(tangent_count(&bp(&[(1, 2, 0), (-1, 0, 2)])), Ok(2));
        assert_eq!(tangent_count(&bp(&[(1, 2, 0), (1, 0, 2)])), Ok(2));
        assert_eq!(tangent_count(&bp(&[(1, 0, 0)])), Err(Error::Unit));
    }

    #[test]
    fn small_intersections() {
        let cusp = bp(&[(1, 0, 2), (-1, 3, 0)]);
        let g = bp(&[(1, 0, 3), (-1, 5, 0)]);
        assert_eq!(intersection_number(&cusp, &g), Ok(Extended::Finite(9)));
        assert_eq!(intersection_number(&bp(&[(1, 0, 1)]), &bp(&[(1, 1, 0)])), Ok(Extended::Finite(1)));
        assert_eq!(intersection_number(&cusp, &cusp), Ok(Extended::Infinity));
    }

    #[test]
    fn milnor_and_squarefree() {
        assert_eq!(milnor_number(&bp(&[(1, 0, 2), (-1, 3, 0)])), Ok(2));
        let f = bp(&[(1, 0, 7), (1, 2, 4), (1, 3, 3), (1, 8, 0)]);
        assert_eq!(milnor_number(&f), Ok(30));
        let double = bp(&[(1, 0, 2), (-2, 1, 1), (1, 2, 0)]);
        assert_eq!(squarefree_test(&double), Ok(false));
        assert_eq!(milnor_number(&double), Err(Error::NotSquarefree));
    }

    #[test]
    fn shear_examples() {
        let y2 = bp(&[(1, 0, 2)]);
        assert_eq!(
            coordinate_shear(&y2, &UnivariatePolynomial::from_ints(&[0, 1])),
            Ok(bp(&[(1, 0, 2), (2, 1, 1), (1, 2, 0)]))
        );
        let cusp = bp(&[(1, 0, 2), (-1, 3, 0)]);
        assert_eq!(
            coordinate_shear(&cusp, &UnivariatePolynomial::from_ints(&[0, 0, 1])),
            Ok(bp(&[(1, 0, 2), (2, 2, 1), (1, 4, 0), (-1, 3, 0)]))
        );
        assert_eq!(coordinate_shear(&cusp, &UnivariatePolynomial::zero()), Ok(cusp.clone()));
        assert_eq!(
            coordinate_shear(&cusp, &UnivariatePolynomial::from_ints(&[1])),
            Err(Error::ShearConstantTerm)
        );
    }
}
