//! Dense integer polynomials in `Z[X][T]` and fraction-free determinants.
//!
//! Resultant matrices are cleared of denominators and evaluated here; the
//! integer representation avoids a gcd on every coefficient operation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{BivariatePolynomial, Rational};

/// Polynomial in X over Z, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct ZPoly(Vec<BigInt>);

impl ZPoly {
    fn trimmed(mut v: Vec<BigInt>) -> Self {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        ZPoly(v)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add(&self, o: &ZPoly) -> ZPoly {
        let (long, short) = if self.0.len() >= o.0.len() { (self, o) } else { (o, self) };
        let mut v = long.0.clone();
        for (a, b) in v.iter_mut().zip(&short.0) {
            *a += b;
        }
        ZPoly::trimmed(v)
    }

    fn sub(&self, o: &ZPoly) -> ZPoly {
        let n = self.0.len().max(o.0.len());
        let mut v = self.0.clone();
        v.resize(n, BigInt::zero());
        for (a, b) in v.iter_mut().zip(&o.0) {
            *a -= b;
        }
        ZPoly::trimmed(v)
    }

    fn mul(&self, o: &ZPoly) -> ZPoly {
        if self.is_zero() || o.is_zero() {
            return ZPoly::default();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        ZPoly::trimmed(v)
    }

    /// Quotient of an exact division. The caller guarantees `d | self`.
    fn exact_div(&self, d: &ZPoly) -> ZPoly {
        let dd = d.0.len() - 1;
        if self.is_zero() {
            return ZPoly::default();
        }
        let dn = self.0.len() - 1;
        assert!(dn >= dd, "inexact division in Z[X]");
        let lead = &d.0[dd];
        let mut rem = self.0.clone();
        let mut q = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let (c, r) = rem[k + dd].div_rem(lead);
            assert!(r.is_zero(), "inexact division in Z[X]");
            for (i, dc) in d.0.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + i] -= &c * dc;
                }
            }
            q[k] = c;
        }
        debug_assert!(rem.iter().all(Zero::is_zero), "inexact division in Z[X]");
        ZPoly::trimmed(q)
    }
}

/// Polynomial in T whose coefficients are [`ZPoly`]s in X.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct ZPoly2(Vec<ZPoly>);

impl ZPoly2 {
    fn trimmed(mut v: Vec<ZPoly>) -> Self {
        while v.last().is_some_and(ZPoly::is_zero) {
            v.pop();
        }
        ZPoly2(v)
    }

    fn one() -> Self {
        ZPoly2(vec![ZPoly(vec![BigInt::one()])])
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn neg(&self) -> ZPoly2 {
        ZPoly2(self.0.iter().map(|p| ZPoly(p.0.iter().map(|c| -c).collect())).collect())
    }

    fn sub(&self, o: &ZPoly2) -> ZPoly2 {
        let n = self.0.len().max(o.0.len());
        let v = (0..n)
            .map(|i| match (self.0.get(i), o.0.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => ZPoly::default().sub(b),
                (None, None) => ZPoly::default(),
            })
            .collect();
        ZPoly2::trimmed(v)
    }

    fn mul(&self, o: &ZPoly2) -> ZPoly2 {
        if self.is_zero() || o.is_zero() {
            return ZPoly2::default();
        }
        let mut v = vec![ZPoly::default(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = v[i + j].add(&a.mul(b));
                }
            }
        }
        ZPoly2::trimmed(v)
    }

    fn exact_div(&self, d: &ZPoly2) -> ZPoly2 {
        if self.is_zero() {
            return ZPoly2::default();
        }
        let dd = d.0.len() - 1;
        let dn = self.0.len() - 1;
        assert!(dn >= dd, "inexact division in Z[X][T]");
        let lead = &d.0[dd];
        let mut rem = self.0.clone();
        let mut q = vec![ZPoly::default(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let c = rem[k + dd].exact_div(lead);
            for (i, dc) in d.0.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + i] = rem[k + i].sub(&c.mul(dc));
                }
            }
            q[k] = c;
        }
        debug_assert!(rem.iter().all(ZPoly::is_zero), "inexact division in Z[X][T]");
        ZPoly2::trimmed(q)
    }

    /// `scale * p`, which must have integer coefficients.
    pub(crate) fn from_scaled(p: &BivariatePolynomial, scale: &BigInt) -> ZPoly2 {
        let Some(dt) = p.degree_y() else {
            return ZPoly2::default();
        };
        let mut rows = vec![Vec::<BigInt>::new(); dt as usize + 1];
        for ((a, t), c) in p.terms() {
            let scaled = c * Rational::from_integer(scale.clone());
            debug_assert!(scaled.is_integer());
            let row = &mut rows[t as usize];
            if row.len() <= a as usize {
                row.resize(a as usize + 1, BigInt::zero());
            }
            row[a as usize] = scaled.to_integer();
        }
        ZPoly2::trimmed(rows.into_iter().map(ZPoly::trimmed).collect())
    }

    /// `self / divisor` as a rational polynomial.
    pub(crate) fn to_rational(&self, divisor: &BigInt) -> BivariatePolynomial {
        let mut terms = Vec::new();
        for (t, row) in self.0.iter().enumerate() {
            for (a, c) in row.0.iter().enumerate() {
                if !c.is_zero() {
                    terms.push((Rational::new(c.clone(), divisor.clone()), a as u32, t as u32));
                }
            }
        }
        BivariatePolynomial::from_terms(terms)
    }
}

/// Bareiss fraction-free elimination with row pivoting.
pub(crate) fn determinant(mut m: Vec<Vec<ZPoly2>>) -> ZPoly2 {
    let n = m.len();
    if n == 0 {
        return ZPoly2::one();
    }
    let mut negate = false;
    let mut prev = ZPoly2::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return ZPoly2::default();
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let a = row[j].mul(&pivot_row[k]);
                let b = if lead.is_zero() { ZPoly2::default() } else { lead.mul(&pivot_row[j]) };
                row[j] = a.sub(&b).exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Determinant of a matrix of rational polynomials in (X, T).
pub(crate) fn rational_determinant(m: &[Vec<BivariatePolynomial>]) -> BivariatePolynomial {
    let n = m.len();
    let mut lcm = BigInt::one();
    for p in m.iter().flatten() {
        for (_, c) in p.terms() {
            lcm = lcm.lcm(c.denom());
        }
    }
    let dense = m
        .iter()
        .map(|row| row.iter().map(|p| ZPoly2::from_scaled(p, &lcm)).collect())
        .collect();
    let det = determinant(dense);
    det.to_rational(&num_traits::pow(lcm, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(t: &[(i64, u32, u32)]) -> BivariatePolynomial {
        BivariatePolynomial::from_int_terms(t)
    }

    #[test]
    fn determinant_of_integer_matrix() {
        let c = |v: i64| bp(&[(v, 0, 0)]);
        let m = vec![
            vec![c(2), c(-1), c(0)],
            vec![c(-1), c(2), c(-1)],
            vec![c(0), c(-1), c(2)],
        ];
        assert_eq!(rational_determinant(&m), c(4));
    }

    #[test]
    fn determinant_needs_pivoting() {
        let c = |v: i64| bp(&[(v, 0, 0)]);
        let m = vec![vec![c(0), c(1)], vec![c(1), c(0)]];
        assert_eq!(rational_determinant(&m), c(-1));
    }

    #[test]
    fn determinant_with_polynomial_entries() {
        // [[X, T], [1, X]] -> X^2 - T
        let m = vec![
            vec![bp(&[(1, 1, 0)]), bp(&[(1, 0, 1)])],
            vec![bp(&[(1, 0, 0)]), bp(&[(1, 1, 0)])],
        ];
        assert_eq!(rational_determinant(&m), bp(&[(1, 2, 0), (-1, 0, 1)]));
    }

    #[test]
    fn determinant_with_rational_entries() {
        let half = BivariatePolynomial::constant(Rational::new(1.into(), 2.into()));
        let m = vec![vec![half.clone(), bp(&[(1, 1, 0)])], vec![bp(&[(1, 1, 0)]), half]];
        let expected = BivariatePolynomial::from_terms([
            (Rational::new(1.into(), 4.into()), 0, 0),
            (Rational::from_integer((-1).into()), 2, 0),
        ]);
        assert_eq!(rational_determinant(&m), expected);
    }
}
