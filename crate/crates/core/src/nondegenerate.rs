//! The jacobian Newton polygon of a nondegenerate singularity read off its
//! Newton diagram.

use num_traits::One;

use crate::algebra::{check_distinguished, squarefree_test, tangent_count, BivariatePolynomial, Rational};
use crate::diagram::{diagram_of, minkowski_sum, nearly_convenient_test, nondegenerate_test, Face, NewtonDiagram};
use crate::jacobian::JacobianPolygon;
use crate::{Error, Extended, Result};

/// A face of `Δ(f)` with its multiplicity `m(S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentClassification {
    pub face: Face,
    /// `|S|_1 = |S|_2`; such a face contributes nothing.
    pub principal: bool,
    pub m: u64,
    pub touches_vertical: bool,
    pub touches_horizontal: bool,
}

pub fn classify_segments(d: &NewtonDiagram) -> Vec<SegmentClassification> {
    d.faces()
        .into_iter()
        .map(|face| {
            let touches_vertical = face.start.0 == 0;
            let touches_horizontal = face.end.1 == 0;
            let (l1, l2) = (face.len1, face.len2);
            let short = l1.min(l2);
            let reduced = (l1 < l2 && touches_vertical) || (l2 < l1 && touches_horizontal);
            SegmentClassification {
                principal: l1 == l2,
                m: if reduced { short - 1 } else { short },
                touches_vertical,
                touches_horizontal,
                face,
            }
        })
        .collect()
}

/// `Q(f) = {ord f (t − 1) / (t − 1)} + Σ_{S non-principal} {max(α(S), β(S)) m(S) / m(S)}`.
///
/// `f` must be a reduced nondegenerate singularity; reducedness is checked
/// through near convenience and, for Y-distinguished input, the discriminant.
pub fn newton_route_polygon(f: &BivariatePolynomial) -> Result<JacobianPolygon> {
    let Extended::Finite(ord) = f.order() else {
        return Err(Error::ZeroPolynomial);
    };
    if ord < 2 {
        return Err(Error::Smooth(ord));
    }
    let d = diagram_of(f)?;
    if !nearly_convenient_test(&d) {
        return Err(Error::NotSquarefree);
    }
    if check_distinguished(f).is_ok() && !squarefree_test(f)? {
        return Err(Error::NotSquarefree);
    }
    if !nondegenerate_test(f)? {
        return Err(Error::Degenerate);
    }
    let t = u64::from(tangent_count(f)?);
    let mut q = NewtonDiagram::elementary(u64::from(ord) * (t - 1), t - 1);
    for s in classify_segments(&d) {
        if s.principal || s.m == 0 {
            continue;
        }
        let reach = std::cmp::max(&s.face.alpha_intercept, &s.face.beta_intercept);
        let k = reach * Rational::from_integer(s.m.into());
        assert!(k.is_integer(), "face {:?} gives a non-lattice summand {k}", s.face);
        let k: u64 = k.to_integer().try_into().expect("summand overflows u64");
        q = minkowski_sum(&q, &NewtonDiagram::elementary(k, s.m));
    }
    JacobianPolygon::from_diagram(q)
}

/// `{μ/(η − 1) + 1, η}`, the weights of a weighted-homogeneous
/// nondegenerate curve, smaller first.
pub fn weights_from_invariants(mu: u64, eta: &Rational) -> Result<(Rational, Rational)> {
    if *eta <= Rational::one() {
        return Err(Error::Inconsistent(format!("eta = {eta} must exceed 1")));
    }
    let other = Rational::from_integer(mu.into()) / (eta - Rational::one()) + Rational::one();
    Ok(if other <= *eta { (other, eta.clone()) } else { (eta.clone(), other) })
}
