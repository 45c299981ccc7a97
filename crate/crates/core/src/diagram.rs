//! Newton diagrams: construction, Minkowski sums, faces and the
//! Kouchnirenko number.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{BivariatePolynomial, Rational, UnivariatePolynomial};
use crate::{Error, Extended, Result};

/// A lattice point `(α, β)`.
pub type Point = (u64, u64);

/// The convex set `conv(∪ v + R²₊)` given by its vertices.
///
/// Vertices are listed from the top left to the bottom right: α strictly
/// increases, β strictly decreases, and the face inclinations
/// `|S|_1/|S|_2` strictly increase.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NewtonDiagram {
    vertices: Vec<Point>,
}

/// A compact edge of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub start: Point,
    pub end: Point,
    /// Horizontal length `|S|_1`.
    pub len1: u64,
    /// Vertical length `|S|_2`.
    pub len2: u64,
    /// `|S|_1 / |S|_2`.
    pub inclination: Rational,
    /// Where the line through the face meets the horizontal axis.
    pub alpha_intercept: Rational,
    /// Where the line through the face meets the vertical axis.
    pub beta_intercept: Rational,
}

/// The diagram `{k/l}` with vertices `(0, l)` and `(k, 0)`.
///
/// `{k/∞}` is the single vertex `(k, 0)` and `{∞/l}` is `(0, l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementaryDiagram {
    pub k: Extended<u64>,
    pub l: Extended<u64>,
}

fn rat(v: u64) -> Rational {
    Rational::from_integer(v.into())
}

fn cross(o: Point, a: Point, b: Point) -> i128 {
    let d = |p: Point, q: Point| (q.0 as i128 - p.0 as i128, q.1 as i128 - p.1 as i128);
    let (ax, ay) = d(o, a);
    let (bx, by) = d(o, b);
    ax * by - ay * bx
}

impl NewtonDiagram {
    /// Validates a vertex list.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidDiagram("no vertices".into()));
        }
        for w in vertices.windows(2) {
            if w[0].0 >= w[1].0 || w[0].1 <= w[1].1 {
                return Err(Error::InvalidDiagram(format!(
                    "vertices {:?} and {:?} are not strictly monotone",
                    w[0], w[1]
                )));
            }
        }
        for w in vertices.windows(3) {
            if cross(w[0], w[1], w[2]) <= 0 {
                return Err(Error::InvalidDiagram(format!("vertex {:?} is not a corner of the hull", w[1])));
            }
        }
        Ok(Self { vertices })
    }

    /// The positive quadrant, neutral for the Minkowski sum.
    pub fn quadrant() -> Self {
        Self { vertices: vec![(0, 0)] }
    }

    pub fn vertex(p: Point) -> Self {
        Self { vertices: vec![p] }
    }

    /// `{k/l}` for finite positive `k` and `l`.
    pub fn elementary(k: u64, l: u64) -> Self {
        ElementaryDiagram::new(Extended::Finite(k), Extended::Finite(l)).to_diagram()
    }

    /// Diagram of a finite point set.
    pub fn from_points<I: IntoIterator<Item = Point>>(points: I) -> Result<Self> {
        let mut pts: Vec<Point> = points.into_iter().collect();
        if pts.is_empty() {
            return Err(Error::InvalidDiagram("empty point set".into()));
        }
        pts.sort_unstable();
        let mut stair: Vec<Point> = Vec::new();
        for p in pts {
            if stair.last().is_none_or(|q| p.1 < q.1) {
                stair.push(p);
            }
        }
        let mut hull: Vec<Point> = Vec::with_capacity(stair.len());
        for p in stair {
            while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        Ok(Self { vertices: hull })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn first(&self) -> Point {
        self.vertices[0]
    }

    pub fn last(&self) -> Point {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn touches_both_axes(&self) -> bool {
        self.first().0 == 0 && self.last().1 == 0
    }

    pub fn faces(&self) -> Vec<Face> {
        self.vertices
            .windows(2)
            .map(|w| {
                let (start, end) = (w[0], w[1]);
                let len1 = end.0 - start.0;
                let len2 = start.1 - end.1;
                let inclination = Rational::new(len1.into(), len2.into());
                let alpha_intercept = rat(start.0) + rat(start.1) * &inclination;
                let beta_intercept = rat(start.1) + rat(start.0) / &inclination;
                Face { start, end, len1, len2, inclination, alpha_intercept, beta_intercept }
            })
            .collect()
    }

    /// Reflection in the diagonal.
    pub fn transpose(&self) -> Self {
        Self { vertices: self.vertices.iter().rev().map(|&(a, b)| (b, a)).collect() }
    }

    pub fn translate(&self, by: Point) -> Self {
        Self { vertices: self.vertices.iter().map(|&(a, b)| (a + by.0, b + by.1)).collect() }
    }
}

impl fmt::Display for NewtonDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

impl ElementaryDiagram {
    /// Panics if both sides are infinite.
    pub fn new(k: Extended<u64>, l: Extended<u64>) -> Self {
        assert!(!(k.is_infinite() && l.is_infinite()), "{{inf/inf}} is not a diagram");
        Self { k, l }
    }

    pub fn to_diagram(&self) -> NewtonDiagram {
        match (&self.k, &self.l) {
            (Extended::Finite(0), _) | (_, Extended::Finite(0)) => NewtonDiagram::quadrant(),
            (Extended::Finite(k), Extended::Finite(l)) => NewtonDiagram { vertices: vec![(0, *l), (*k, 0)] },
            (Extended::Finite(k), Extended::Infinity) => NewtonDiagram::vertex((*k, 0)),
            (Extended::Infinity, Extended::Finite(l)) => NewtonDiagram::vertex((0, *l)),
            (Extended::Infinity, Extended::Infinity) => unreachable!(),
        }
    }
}

impl fmt::Display for ElementaryDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}/{}}}", self.k, self.l)
    }
}

pub fn diagram_of(f: &BivariatePolynomial) -> Result<NewtonDiagram> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    NewtonDiagram::from_points(f.support().map(|(a, b)| (u64::from(a), u64::from(b))))
}

/// Minkowski sum by merging faces in order of inclination.
pub fn minkowski_sum(a: &NewtonDiagram, b: &NewtonDiagram) -> NewtonDiagram {
    let (fa, fb) = (a.first(), b.first());
    let mut steps: Vec<(u64, u64)> = a
        .vertices
        .windows(2)
        .chain(b.vertices.windows(2))
        .map(|w| (w[1].0 - w[0].0, w[0].1 - w[1].1))
        .collect();
    // Sort by len1/len2 ascending, compared by cross-multiplication.
    steps.sort_by(|p, q| (u128::from(p.0) * u128::from(q.1)).cmp(&(u128::from(q.0) * u128::from(p.1))));
    let mut vertices = vec![(fa.0 + fb.0, fa.1 + fb.1)];
    let mut prev: Option<(u64, u64)> = None;
    for s in steps {
        let cur = *vertices.last().unwrap();
        let next = (cur.0 + s.0, cur.1 - s.1);
        match prev {
            Some(p) if u128::from(p.0) * u128::from(s.1) == u128::from(s.0) * u128::from(p.1) => {
                *vertices.last_mut().unwrap() = next;
                prev = Some((p.0 + s.0, p.1 + s.1));
            }
            _ => {
                vertices.push(next);
                prev = Some(s);
            }
        }
    }
    NewtonDiagram { vertices }
}

impl std::iter::Sum for NewtonDiagram {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(NewtonDiagram::quadrant(), |acc, d| minkowski_sum(&acc, &d))
    }
}

impl<'a> std::iter::Sum<&'a NewtonDiagram> for NewtonDiagram {
    fn sum<I: Iterator<Item = &'a NewtonDiagram>>(iter: I) -> Self {
        iter.fold(NewtonDiagram::quadrant(), |acc, d| minkowski_sum(&acc, d))
    }
}

/// The unique decomposition `Δ = Σ_S {|S|_1/|S|_2}`.
pub fn elementary_decomposition(d: &NewtonDiagram) -> Result<Vec<ElementaryDiagram>> {
    if !d.touches_both_axes() {
        return Err(Error::NotConvenient);
    }
    Ok(d.faces()
        .iter()
        .map(|s| ElementaryDiagram::new(Extended::Finite(s.len1), Extended::Finite(s.len2)))
        .collect())
}

pub fn faces(d: &NewtonDiagram) -> Vec<Face> {
    d.faces()
}

/// `μ(Δ) = 2·area(R²₊ ∖ Δ̃) − a − b + 1`, where `Δ̃` is cut out by the
/// lines through the faces and `a`, `b` are its axis intercepts.
pub fn mu_of_diagram(d: &NewtonDiagram) -> Rational {
    let faces = d.faces();
    let (Some(first), Some(last)) = (faces.first(), faces.last()) else {
        return Rational::one();
    };
    let b = first.beta_intercept.clone();
    let a = last.alpha_intercept.clone();
    let v0 = d.first();
    let vm = d.last();
    let mut twice_area = rat(v0.0) * (&b + rat(v0.1));
    for s in &faces {
        twice_area += rat(s.len1) * rat(s.start.1 + s.end.1);
    }
    twice_area += (&a - rat(vm.0)) * rat(vm.1);
    twice_area - a - b + Rational::one()
}

/// Coefficients of `f` on the lattice points of a face, read along its
/// primitive direction from the top-left endpoint.
pub fn face_polynomial(f: &BivariatePolynomial, s: &Face) -> UnivariatePolynomial {
    let g = s.len1.gcd(&s.len2);
    let (dx, dy) = (s.len1 / g, s.len2 / g);
    UnivariatePolynomial::new(
        (0..=g)
            .map(|k| {
                let a = s.start.0 + k * dx;
                let b = s.start.1 - k * dy;
                f.coefficient(a as u32, b as u32)
            })
            .collect(),
    )
}

/// True iff every face polynomial of `f` has no repeated nonzero root.
pub fn nondegenerate_test(f: &BivariatePolynomial) -> Result<bool> {
    let d = diagram_of(f)?;
    Ok(d.faces().iter().all(|s| {
        let p = face_polynomial(f, s);
        // Both endpoints are vertices in the support, so P(0) ≠ 0.
        debug_assert!(!p.constant_term().is_zero());
        p.is_squarefree()
    }))
}

/// Distance at most one from both axes.
pub fn nearly_convenient_test(d: &NewtonDiagram) -> bool {
    d.first().0 <= 1 && d.last().1 <= 1
}

/// Orders of the Newton–Puiseux roots with their multiplicities, one entry
/// per face plus `(∞, β)` when the last vertex sits at height `β > 0`.
pub fn root_order_distribution(d: &NewtonDiagram) -> Result<Vec<(Extended<Rational>, u64)>> {
    if d.first().0 != 0 {
        return Err(Error::NotYRegular);
    }
    let mut out: Vec<_> = d
        .faces()
        .into_iter()
        .map(|s| (Extended::Finite(s.inclination), s.len2))
        .collect();
    if d.last().1 > 0 {
        out.push((Extended::Infinity, d.last().1));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nd(v: &[Point]) -> NewtonDiagram {
        NewtonDiagram::new(v.to_vec()).unwrap()
    }

    fn bp(t: &[(i64, u32, u32)]) -> BivariatePolynomial {
        BivariatePolynomial::from_int_terms(t)
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn validation() {
        assert!(NewtonDiagram::new(vec![]).is_err());
        assert!(NewtonDiagram::new(vec![(0, 2), (1, 2)]).is_err());
        assert!(NewtonDiagram::new(vec![(0, 2), (1, 1), (2, 0)]).is_err());
        assert!(NewtonDiagram::new(vec![(0, 4), (3, 3), (4, 0)]).is_err());
        assert!(NewtonDiagram::new(vec![(0, 5), (1, 4), (9, 0)]).is_ok());
    }

    #[test]
    fn hulls() {
        assert_eq!(diagram_of(&bp(&[(1, 0, 2), (-1, 3, 0)])).unwrap(), nd(&[(0, 2), (3, 0)]));
        let disc = bp(&[(-256, 0, 3), (256, 6, 2), (288, 13, 1), (-27, 20, 0), (-256, 19, 0)]);
        assert_eq!(diagram_of(&disc).unwrap(), nd(&[(0, 3), (6, 2), (19, 0)]));
        let f = bp(&[(1, 3, 3), (1, 2, 4), (1, 8, 0), (1, 0, 7)]);
        assert_eq!(diagram_of(&f).unwrap(), nd(&[(0, 7), (2, 4), (3, 3), (8, 0)]));
        assert_eq!(diagram_of(&BivariatePolynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn sums() {
        let e10 = NewtonDiagram::elementary(10, 1);
        assert_eq!(minkowski_sum(&e10, &e10), nd(&[(0, 2), (20, 0)]));
        let d = nd(&[(0, 5), (1, 4), (9, 0)]);
        assert_eq!(minkowski_sum(&d, &NewtonDiagram::quadrant()), d);
        assert_eq!(
            minkowski_sum(&NewtonDiagram::elementary(6, 1), &NewtonDiagram::elementary(13, 2)),
            nd(&[(0, 3), (6, 2), (19, 0)])
        );
        assert_eq!(
            minkowski_sum(&NewtonDiagram::vertex((2, 0)), &nd(&[(0, 2), (3, 0)])),
            nd(&[(2, 2), (5, 0)])
        );
    }

    #[test]
    fn decompositions() {
        let show = |d: &NewtonDiagram| {
            elementary_decomposition(d).unwrap().iter().map(ToString::to_string).collect::<Vec<_>>()
        };
        assert_eq!(show(&nd(&[(0, 3), (6, 2), (19, 0)])), ["{6/1}", "{13/2}"]);
        assert_eq!(show(&nd(&[(0, 1), (1, 0)])), ["{1/1}"]);
        assert_eq!(show(&nd(&[(0, 5), (20, 3), (53, 0)])), ["{20/2}", "{33/3}"]);
        assert_eq!(elementary_decomposition(&nd(&[(1, 4), (9, 0)])), Err(Error::NotConvenient));
    }

    #[test]
    fn face_data() {
        let f = faces(&nd(&[(0, 2), (3, 0)]));
        assert_eq!(f.len(), 1);
        assert_eq!((f[0].len1, f[0].len2), (3, 2));
        assert_eq!(f[0].inclination, r(3, 2));
        assert_eq!((f[0].alpha_intercept.clone(), f[0].beta_intercept.clone()), (r(3, 1), r(2, 1)));
        let f = faces(&nd(&[(0, 5), (1, 4), (9, 0)]));
        assert_eq!(f.iter().map(|s| s.inclination.clone()).collect::<Vec<_>>(), [r(1, 1), r(2, 1)]);
        assert_eq!((f[1].alpha_intercept.clone(), f[1].beta_intercept.clone()), (r(9, 1), r(9, 2)));
        assert!(faces(&NewtonDiagram::vertex((4, 0))).is_empty());
    }

    #[test]
    fn kouchnirenko_numbers() {
        assert_eq!(mu_of_diagram(&nd(&[(0, 3), (5, 0)])), r(8, 1));
        assert_eq!(mu_of_diagram(&nd(&[(0, 5), (1, 4), (9, 0)])), r(28, 1));
        assert_eq!(mu_of_diagram(&NewtonDiagram::vertex((1, 1))), r(1, 1));
        // XY + ... with faces away from both axes: (1,2),(2,1) extends to (0,3),(3,0).
        assert_eq!(mu_of_diagram(&nd(&[(1, 2), (2, 1)])), r(4, 1));
    }

    #[test]
    fn nondegeneracy() {
        assert_eq!(nondegenerate_test(&bp(&[(1, 0, 2), (-1, 3, 0)])), Ok(true));
        assert_eq!(nondegenerate_test(&bp(&[(1, 0, 2), (-2, 1, 1), (1, 2, 0)])), Ok(false));
        assert_eq!(nondegenerate_test(&bp(&[(1, 0, 5), (1, 1, 4), (1, 9, 0)])), Ok(true));
    }

    #[test]
    fn near_convenience() {
        assert!(nearly_convenient_test(&nd(&[(0, 2), (3, 0)])));
        assert!(nearly_convenient_test(&nd(&[(1, 4), (9, 0)])));
        assert!(!nearly_convenient_test(&nd(&[(2, 4), (9, 0)])));
    }

    #[test]
    fn root_orders() {
        let q = |n, d| Extended::Finite(r(n, d));
        assert_eq!(root_order_distribution(&nd(&[(0, 2), (3, 0)])), Ok(vec![(q(3, 2), 2)]));
        let f: BivariatePolynomial = [
            bp(&[(1, 0, 1), (-1, 2, 0)]),
            bp(&[(1, 0, 2), (-1, 3, 0)]),
            bp(&[(1, 0, 2), (-1, 5, 0)]),
        ]
        .into_iter()
        .product();
        let d = diagram_of(&f).unwrap();
        assert_eq!(
            root_order_distribution(&d),
            Ok(vec![(q(3, 2), 2), (q(2, 1), 1), (q(5, 2), 2)])
        );
        assert_eq!(root_order_distribution(&nd(&[(0, 1), (1, 0)])), Ok(vec![(q(1, 1), 1)]));
        assert_eq!(
            root_order_distribution(&nd(&[(0, 3), (2, 1)])),
            Ok(vec![(q(1, 1), 2), (Extended::Infinity, 1)])
        );
        assert_eq!(root_order_distribution(&nd(&[(1, 1)])), Err(Error::NotYRegular));
    }
}
