//! Jacobian Newton polygons from the discriminant `disc_Y(f − T)`.

use std::fmt;

use num_traits::Signed;

use crate::algebra::{check_distinguished, resultant_in_y, BivariatePolynomial, Rational, YPolynomial};
use crate::diagram::{diagram_of, elementary_decomposition, minkowski_sum, NewtonDiagram};
use crate::{Error, Result};

/// A polar invariant `q` with its multiplicity `m_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolarInvariant {
    pub q: Rational,
    pub multiplicity: u64,
}

impl PolarInvariant {
    pub fn new(q: Rational, multiplicity: u64) -> Self {
        Self { q, multiplicity }
    }
}

/// `Q(f, l) = Σ_q {m_q q / m_q}`, read as a diagram and as its faces.
///
/// The empty polygon (a unit jacobian) is the quadrant with no faces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JacobianPolygon {
    polygon: NewtonDiagram,
    entries: Vec<PolarInvariant>,
}

impl JacobianPolygon {
    /// Reads a diagram touching both axes as a polygon.
    pub fn from_diagram(polygon: NewtonDiagram) -> Result<Self> {
        if !polygon.touches_both_axes() {
            return Err(Error::NotConvenient);
        }
        let entries = polygon
            .faces()
            .into_iter()
            .map(|s| PolarInvariant::new(s.inclination, s.len2))
            .collect();
        Ok(Self { polygon, entries })
    }

    pub fn empty() -> Self {
        Self { polygon: NewtonDiagram::quadrant(), entries: Vec::new() }
    }

    /// `Σ {m q / m}`; each `m·q` must be an integer.
    pub fn from_invariants<'a, I>(invariants: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a PolarInvariant>,
    {
        let mut d = NewtonDiagram::quadrant();
        for inv in invariants {
            if inv.multiplicity == 0 {
                continue;
            }
            if !inv.q.is_positive() {
                return Err(Error::NonPositive);
            }
            let k = &inv.q * Rational::from_integer(inv.multiplicity.into());
            if !k.is_integer() {
                return Err(Error::NonIntegralFace { q: inv.q.clone(), m: inv.multiplicity });
            }
            let k: u64 = k.to_integer().try_into().expect("face length overflows u64");
            d = minkowski_sum(&d, &NewtonDiagram::elementary(k, inv.multiplicity));
        }
        Self::from_diagram(d)
    }

    pub fn polygon(&self) -> &NewtonDiagram {
        &self.polygon
    }

    pub fn entries(&self) -> &[PolarInvariant] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for JacobianPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let parts = elementary_decomposition(&self.polygon).map_err(|_| fmt::Error)?;
        for (i, e) in parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// `D(X, T) = Res_Y(f − T, ∂f/∂Y)`.
pub fn discriminant_surface(f: &BivariatePolynomial) -> Result<BivariatePolynomial> {
    let n = check_distinguished(f)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    let fy = YPolynomial::from_xy(f);
    let d = resultant_in_y(&fy.sub_t(), &fy.derivative())?;
    // D(X, 0) = Res_Y(f, ∂f/∂Y) vanishes exactly when f has a repeated factor.
    if d.terms().all(|((_, t), _)| t > 0) {
        return Err(Error::NotSquarefree);
    }
    Ok(d)
}

/// `Q(f, X)` as the Newton diagram of the discriminant.
pub fn jacobian_polygon(f: &BivariatePolynomial) -> Result<JacobianPolygon> {
    JacobianPolygon::from_diagram(diagram_of(&discriminant_surface(f)?)?)
}

pub fn polar_invariants(p: &JacobianPolygon) -> Vec<PolarInvariant> {
    p.entries.clone()
}

/// The largest polar invariant; `None` stands for `−∞` (empty polygon).
pub fn eta_max(p: &JacobianPolygon) -> Option<Rational> {
    p.entries.iter().map(|e| e.q.clone()).max()
}

/// The polygon meets the axes at `(0, n − 1)` and `(μ + n − 1, 0)`.
pub fn endpoint_check(p: &JacobianPolygon, n: u64, mu: u64) -> bool {
    n >= 1 && p.polygon.first() == (0, n - 1) && p.polygon.last() == (mu + n - 1, 0)
}

/// `ord f = deg_Y f`, i.e. `X = 0` is not tangent to `f = 0`.
pub fn transversality_check(f: &BivariatePolynomial) -> Result<bool> {
    let n = check_distinguished(f)?;
    Ok(f.order().finite() == Some(&n))
}

/// Equality up to a global sign, the ambiguity left by resultant conventions.
pub fn equal_up_to_sign(a: &BivariatePolynomial, b: &BivariatePolynomial) -> bool {
    a == b || (!a.is_zero() && *a == -b)
}
