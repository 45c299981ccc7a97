//! Semigroups of branches: (Z)-sequences, their diagrams, irreducibility
//! and the Abhyankar–Moh pencil.

use std::fmt;

use num_integer::Integer;

use crate::algebra::{BivariatePolynomial, Rational};
use crate::diagram::{minkowski_sum, NewtonDiagram};
use crate::jacobian::jacobian_polygon;
use crate::{Error, Result};

/// A generator sequence `(b̄_0, …, b̄_h)` satisfying (Z₁) and (Z₂).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZSequence {
    b: Vec<u64>,
    e: Vec<u64>,
    n: Vec<u64>,
}

/// The first condition a candidate sequence fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZViolation {
    Empty,
    NonPositive { k: usize },
    /// `e_h = gcd(b̄_0, …, b̄_h) ≠ 1`.
    FinalGcd { e: u64 },
    /// `e_k = e_(k-1)`.
    GcdNotDecreasing { k: usize, e: u64 },
    /// `e_(k-1) b̄_k ≤ e_(k-2) b̄_(k-1)`.
    NotIncreasing { k: usize, prev: u64, cur: u64 },
}

impl fmt::Display for ZViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZViolation::Empty => f.write_str("empty sequence"),
            ZViolation::NonPositive { k } => write!(f, "b_{k}=0"),
            ZViolation::FinalGcd { e } => write!(f, "e_h={e}"),
            ZViolation::GcdNotDecreasing { k, e } => write!(f, "e_{k}=e_{}={e}", k - 1),
            ZViolation::NotIncreasing { k, prev, cur } => {
                write!(f, "e_{}*b_{k}={cur} does not exceed e_{}*b_{}={prev}", k - 1, k - 2, k - 1)
            }
        }
    }
}

fn gcd_chain(b: &[u64]) -> Vec<u64> {
    let mut e = Vec::with_capacity(b.len());
    let mut g = 0u64;
    for &v in b {
        g = g.gcd(&v);
        e.push(g);
    }
    e
}

/// First failed (Z) condition, if any.
pub fn z_violation(b: &[u64]) -> Option<ZViolation> {
    if b.is_empty() {
        return Some(ZViolation::Empty);
    }
    if let Some(k) = b.iter().position(|&v| v == 0) {
        return Some(ZViolation::NonPositive { k });
    }
    let e = gcd_chain(b);
    let last = *e.last().unwrap();
    if last != 1 {
        return Some(ZViolation::FinalGcd { e: last });
    }
    for k in 1..b.len() {
        if e[k] == e[k - 1] {
            return Some(ZViolation::GcdNotDecreasing { k, e: e[k] });
        }
    }
    for k in 2..b.len() {
        let prev = e[k - 2] * b[k - 1];
        let cur = e[k - 1] * b[k];
        if cur <= prev {
            return Some(ZViolation::NotIncreasing { k, prev, cur });
        }
    }
    None
}

/// True iff `b` is a (Z)-sequence.
pub fn z_test(b: &[u64]) -> Result<bool> {
    match z_violation(b) {
        None => Ok(true),
        Some(ZViolation::Empty) => Err(Error::InvalidSequence("empty sequence".into())),
        Some(ZViolation::NonPositive { k }) => Err(Error::InvalidSequence(format!("b_{k} is not positive"))),
        Some(_) => Ok(false),
    }
}

impl ZSequence {
    pub fn new(b: Vec<u64>) -> Result<Self> {
        if let Some(v) = z_violation(&b) {
            return Err(Error::InvalidSequence(v.to_string()));
        }
        let e = gcd_chain(&b);
        let n = (1..b.len()).map(|k| e[k - 1] / e[k]).collect();
        Ok(Self { b, e, n })
    }

    pub fn generators(&self) -> &[u64] {
        &self.b
    }

    /// `e_0, …, e_h`.
    pub fn e(&self) -> &[u64] {
        &self.e
    }

    /// `n_1, …, n_h`.
    pub fn n(&self) -> &[u64] {
        &self.n
    }

    /// `h`, the number of generators after `b̄_0`.
    pub fn h(&self) -> usize {
        self.b.len() - 1
    }
}

impl fmt::Display for ZSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.b.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `N(b̄) = Σ_{k=1}^h {(n_k − 1)b̄_k / (n_k − 1)n_1⋯n_(k−1)}`.
pub fn associated_diagram(b: &ZSequence) -> Result<NewtonDiagram> {
    if b.h() == 0 {
        return Err(Error::SmoothBranch);
    }
    let mut d = NewtonDiagram::quadrant();
    let mut prefix = 1u64;
    for k in 1..=b.h() {
        let nk = b.n[k - 1];
        d = minkowski_sum(&d, &NewtonDiagram::elementary((nk - 1) * b.b[k], (nk - 1) * prefix));
        prefix *= nk;
    }
    Ok(d)
}

/// Why a diagram is not `N(b̄)` for any (Z)-sequence with `b̄_0 = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotRepresentable {
    /// `|S_k|_2` is not a multiple of `n_1⋯n_(k−1)`.
    HeightNotDivisible { face: usize, len2: u64, product: u64 },
    /// `|S_k|_1` is not a multiple of `n_k − 1`.
    WidthNotDivisible { face: usize, len1: u64, n_k: u64 },
    /// `n_1⋯n_h ≠ n`.
    ProductMismatch { product: u64, n: u64 },
    /// The recovered sequence fails (Z).
    Violation { sequence: Vec<u64>, violation: ZViolation },
}

impl fmt::Display for NotRepresentable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotRepresentable::HeightNotDivisible { face, len2, product } => {
                write!(f, "face {face}: height {len2} is not a multiple of {product}")
            }
            NotRepresentable::WidthNotDivisible { face, len1, n_k } => {
                write!(f, "face {face}: width {len1} is not a multiple of n_k-1={}", n_k - 1)
            }
            NotRepresentable::ProductMismatch { product, n } => {
                write!(f, "n_1*...*n_h={product} differs from b_0={n}")
            }
            NotRepresentable::Violation { violation, .. } => violation.fmt(f),
        }
    }
}

/// Outcome of [`recover_sequence`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recovery {
    Sequence(ZSequence),
    NotRepresentable(NotRepresentable),
}

/// Inverts [`associated_diagram`] for `b̄_0 = n`.
pub fn recover_sequence(d: &NewtonDiagram, n: u64) -> Result<Recovery> {
    if !d.touches_both_axes() {
        return Err(Error::NotConvenient);
    }
    if n < 2 {
        return Err(Error::DegreeTooSmall(n as u32));
    }
    let fail = |r| Ok(Recovery::NotRepresentable(r));
    let mut b = vec![n];
    let mut product = 1u64;
    for (face, s) in d.faces().iter().enumerate() {
        if s.len2 % product != 0 {
            return fail(NotRepresentable::HeightNotDivisible { face, len2: s.len2, product });
        }
        let n_k = s.len2 / product + 1;
        if s.len1 % (n_k - 1) != 0 {
            return fail(NotRepresentable::WidthNotDivisible { face, len1: s.len1, n_k });
        }
        b.push(s.len1 / (n_k - 1));
        product *= n_k;
    }
    if product != n {
        return fail(NotRepresentable::ProductMismatch { product, n });
    }
    match z_violation(&b) {
        Some(violation) => fail(NotRepresentable::Violation { sequence: b, violation }),
        None => Ok(Recovery::Sequence(ZSequence::new(b)?)),
    }
}

/// Result of [`irreducibility_test`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Irreducible(ZSequence),
    Reducible(NotRepresentable),
}

/// A Y-distinguished squarefree `f` is irreducible iff its jacobian
/// polygon is `N(b̄)` for a (Z)-sequence with `b̄_0 = deg_Y f`.
pub fn irreducibility_test(f: &BivariatePolynomial) -> Result<Verdict> {
    let n = u64::from(crate::algebra::check_distinguished(f)?);
    let p = jacobian_polygon(f)?;
    Ok(match recover_sequence(p.polygon(), n)? {
        Recovery::Sequence(b) => Verdict::Irreducible(b),
        Recovery::NotRepresentable(r) => Verdict::Reducible(r),
    })
}

/// `μ = Σ (n_k − 1) b̄_k − b̄_0 + 1`.
pub fn milnor_from_sequence(b: &ZSequence) -> u64 {
    let s: u64 = (1..=b.h()).map(|k| (b.n[k - 1] - 1) * b.b[k]).sum();
    s + 1 - b.b[0]
}

/// True iff `s ∈ N b̄_0 + … + N b̄_h`.
pub fn semigroup_membership(b: &ZSequence, s: u64) -> bool {
    in_semigroup(&b.b, s)
}

pub(crate) fn in_semigroup(gens: &[u64], s: u64) -> bool {
    let s = s as usize;
    let mut reach = vec![false; s + 1];
    reach[0] = true;
    for v in 1..=s {
        reach[v] = gens.iter().any(|&g| g as usize <= v && reach[v - g as usize]);
    }
    reach[s]
}

/// Minimal generators of `⟨b̄⟩` in increasing order; for a branch seen
/// through a tangent line this is its sequence relative to a transverse one.
pub fn transverse_generators(b: &ZSequence) -> Vec<u64> {
    let mut sorted = b.b.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let mut kept: Vec<u64> = Vec::new();
    for g in sorted {
        if !in_semigroup(&kept, g) {
            kept.push(g);
        }
    }
    kept
}

/// The Abhyankar–Moh data of the pencil `f − t X^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilVerdict {
    /// `e_(h−1) b̄_h < b̄_0²`.
    pub am: bool,
    /// `η_0 = e_(h−1) b̄_h / b̄_0`.
    pub eta: Rational,
    pub equisingular_all_t: bool,
    pub all_irreducible: bool,
}

pub fn abhyankar_moh_pencil(b: &ZSequence) -> Result<PencilVerdict> {
    let h = b.h();
    if h == 0 {
        return Err(Error::SmoothBranch);
    }
    let top = b.e[h - 1] * b.b[h];
    let b0 = b.b[0];
    let am = top < b0 * b0;
    Ok(PencilVerdict {
        am,
        eta: Rational::new(top.into(), b0.into()),
        equisingular_all_t: am,
        all_irreducible: am,
    })
}
