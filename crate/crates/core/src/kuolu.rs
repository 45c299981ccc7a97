//! Contact trees of Puiseux roots and their polar invariants.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};

use crate::algebra::Rational;
use crate::jacobian::{JacobianPolygon, PolarInvariant};
use crate::{Error, Extended, Result};

/// A Puiseux series `Σ c_e X^e` known exactly through `truncation`.
///
/// Exponents are positive with denominators dividing the ramification `p`.
/// Terms beyond the truncation order are unknown; `Infinity` means the
/// listed terms are the whole series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxTruncation {
    ramification: u64,
    terms: BTreeMap<Rational, Rational>,
    truncation: Extended<Rational>,
}

impl PuiseuxTruncation {
    pub fn new<I>(ramification: u64, terms: I, truncation: Extended<Rational>) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let bad = |m: String| Err(Error::InvalidTruncation(m));
        if ramification == 0 {
            return bad("ramification must be positive".into());
        }
        let p = num_bigint::BigInt::from(ramification);
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            if !e.is_positive() {
                return bad(format!("exponent {e} is not positive"));
            }
            if !(&p % e.denom()).is_zero() {
                return bad(format!("exponent {e} has denominator not dividing {ramification}"));
            }
            if let Extended::Finite(t) = &truncation {
                if &e > t {
                    return bad(format!("exponent {e} lies beyond the truncation order {t}"));
                }
            }
            if c.is_zero() {
                continue;
            }
            if map.insert(e.clone(), c).is_some() {
                return bad(format!("exponent {e} listed twice"));
            }
        }
        Ok(Self { ramification, terms: map, truncation })
    }

    /// A series given in full.
    pub fn exact<I>(ramification: u64, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        Self::new(ramification, terms, Extended::Infinity)
    }

    pub fn ramification(&self) -> u64 {
        self.ramification
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.terms.iter()
    }

    pub fn truncation(&self) -> &Extended<Rational> {
        &self.truncation
    }

    fn coefficient(&self, e: &Rational) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }
}

/// `O(φ, ψ)` as far as the truncations determine it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContactOrder {
    Finite(Rational),
    Infinite,
    /// The series agree through this order and nothing beyond is known.
    Unresolved(Rational),
}

pub fn contact_order(a: &PuiseuxTruncation, b: &PuiseuxTruncation) -> ContactOrder {
    let known = std::cmp::min(&a.truncation, &b.truncation);
    let exponents: BTreeSet<&Rational> = a.terms.keys().chain(b.terms.keys()).collect();
    let first_difference = exponents.into_iter().find(|e| a.coefficient(e) != b.coefficient(e));
    match (first_difference, known) {
        (Some(e), Extended::Finite(m)) if e > m => ContactOrder::Unresolved(m.clone()),
        (Some(e), _) => ContactOrder::Finite(e.clone()),
        (None, Extended::Finite(m)) => ContactOrder::Unresolved(m.clone()),
        (None, Extended::Infinity) => ContactOrder::Infinite,
    }
}

/// A symmetric ultrametric matrix of contact orders with `∞` on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactMatrix {
    entries: Vec<Vec<Extended<Rational>>>,
}

impl ContactMatrix {
    /// Validates shape, symmetry, the diagonal, positivity and the
    /// ultrametric inequality. Off-diagonal `∞` means two equal roots.
    pub fn new(entries: Vec<Vec<Extended<Rational>>>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidContactMatrix(m));
        let r = entries.len();
        if r == 0 {
            return bad("no roots".into());
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != r {
                return bad(format!("row {i} has length {}, expected {r}", row.len()));
            }
            if !row[i].is_infinite() {
                return bad(format!("diagonal entry {i} is not inf"));
            }
            for (j, v) in row.iter().enumerate() {
                if *v != entries[j][i] {
                    return bad(format!("entries ({i},{j}) and ({j},{i}) differ"));
                }
                if i != j {
                    match v {
                        Extended::Infinity => return Err(Error::DuplicateRoot { i, j }),
                        Extended::Finite(q) if !q.is_positive() => {
                            return bad(format!("entry ({i},{j}) is not positive"));
                        }
                        _ => {}
                    }
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    if entries[i][j] < std::cmp::min(&entries[i][k], &entries[j][k]).clone() {
                        return Err(Error::NotUltrametric { i, j, k });
                    }
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Extended<Rational> {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Extended<Rational>>] {
        &self.entries
    }
}

pub fn contact_matrix(roots: &[PuiseuxTruncation]) -> Result<ContactMatrix> {
    let r = roots.len();
    let mut entries = vec![vec![Extended::Infinity; r]; r];
    for i in 0..r {
        for j in i + 1..r {
            let v = match contact_order(&roots[i], &roots[j]) {
                ContactOrder::Finite(q) => Extended::Finite(q),
                ContactOrder::Infinite => return Err(Error::DuplicateRoot { i, j }),
                ContactOrder::Unresolved(beyond) => return Err(Error::UnresolvedContact { i, j, beyond }),
            };
            entries[i][j] = v.clone();
            entries[j][i] = v;
        }
    }
    ContactMatrix::new(entries)
}

/// A ball `B(φ, ρ)` of the tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    /// Sorted root indices.
    pub members: Vec<usize>,
    /// `h(B)`, the least contact between members; `∞` for singletons.
    pub height: Extended<Rational>,
    /// Indices of the maximal proper sub-balls.
    pub successors: Vec<usize>,
}

impl Ball {
    /// `t(B)`.
    pub fn successor_count(&self) -> usize {
        self.successors.len()
    }
}

/// The inclusion tree of all balls. Index 0 is the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactTree {
    matrix: ContactMatrix,
    balls: Vec<Ball>,
}

impl ContactTree {
    pub fn balls(&self) -> &[Ball] {
        &self.balls
    }

    pub fn root(&self) -> &Ball {
        &self.balls[0]
    }

    pub fn matrix(&self) -> &ContactMatrix {
        &self.matrix
    }
}

pub fn build_tree(m: &ContactMatrix) -> ContactTree {
    let r = m.size();
    let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..r {
        for rho in &m.entries[i] {
            sets.insert((0..r).filter(|&j| m.entries[i][j] >= *rho).collect());
        }
    }
    let mut balls: Vec<Ball> = sets
        .into_iter()
        .map(|members| {
            let height = members
                .iter()
                .flat_map(|&a| members.iter().filter(move |&&b| b != a).map(move |&b| m.entries[a][b].clone()))
                .min()
                .unwrap_or(Extended::Infinity);
            Ball { members, height, successors: Vec::new() }
        })
        .collect();
    balls.sort_by(|a, b| (a.members[0], &a.height).cmp(&(b.members[0], &b.height)));
    let subset = |a: &[usize], b: &[usize]| a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok());
    for i in 0..balls.len() {
        let proper: Vec<usize> = (0..balls.len())
            .filter(|&j| subset(&balls[j].members, &balls[i].members))
            .collect();
        let maximal = proper
            .iter()
            .copied()
            .filter(|&j| !proper.iter().any(|&k| k != j && subset(&balls[j].members, &balls[k].members)))
            .collect();
        balls[i].successors = maximal;
    }
    ContactTree { matrix: m.clone(), balls }
}

/// `q(B) = Σ_α min(O(α, B), h(B))` with `O(α, B)` the largest contact of
/// `α` with a member of `B`.
pub fn ball_invariant(t: &ContactTree, ball: usize) -> Result<Rational> {
    let b = t.balls.get(ball).ok_or(Error::IndexOutOfRange(ball))?;
    let Extended::Finite(h) = &b.height else {
        return Err(Error::SingletonBall);
    };
    let m = &t.matrix;
    let mut q = Rational::zero();
    for alpha in 0..m.size() {
        let o = b.members.iter().map(|&j| &m.entries[alpha][j]).max().unwrap();
        q += match o {
            Extended::Finite(v) if v < h => v.clone(),
            _ => h.clone(),
        };
    }
    Ok(q)
}

/// Polar invariants `q(B)` over the non-singleton balls with
/// multiplicities `Σ (t(B) − 1)`.
pub fn tree_invariants(t: &ContactTree) -> Result<Vec<PolarInvariant>> {
    let mut acc: BTreeMap<Rational, u64> = BTreeMap::new();
    for (i, b) in t.balls.iter().enumerate() {
        if b.members.len() < 2 {
            continue;
        }
        *acc.entry(ball_invariant(t, i)?).or_default() += b.successor_count() as u64 - 1;
    }
    Ok(acc.into_iter().map(|(q, m)| PolarInvariant::new(q, m)).collect())
}

pub fn tree_polygon(t: &ContactTree) -> Result<JacobianPolygon> {
    JacobianPolygon::from_invariants(&tree_invariants(t)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn series(p: u64, terms: &[((i64, i64), i64)]) -> PuiseuxTruncation {
        PuiseuxTruncation::exact(p, terms.iter().map(|&((n, d), c)| (r(n, d), r(c, 1)))).unwrap()
    }

    fn quintic_roots() -> Vec<PuiseuxTruncation> {
        vec![
            series(1, &[((2, 1), 1)]),
            series(2, &[((3, 2), 1)]),
            series(2, &[((3, 2), -1)]),
            series(2, &[((5, 2), 1)]),
            series(2, &[((5, 2), -1)]),
        ]
    }

    fn fin(n: i64, d: i64) -> Extended<Rational> {
        Extended::Finite(r(n, d))
    }

    #[test]
    fn truncation_validation() {
        assert!(PuiseuxTruncation::exact(2, [(r(1, 3), r(1, 1))]).is_err());
        assert!(PuiseuxTruncation::exact(1, [(r(0, 1), r(1, 1))]).is_err());
        assert!(PuiseuxTruncation::new(1, [(r(3, 1), r(1, 1))], fin(2, 1)).is_err());
        assert!(PuiseuxTruncation::exact(0, []).is_err());
    }

    #[test]
    fn contacts() {
        let z = quintic_roots();
        assert_eq!(contact_order(&z[1], &z[2]), ContactOrder::Finite(r(3, 2)));
        assert_eq!(contact_order(&z[0], &z[3]), ContactOrder::Finite(r(2, 1)));
        assert_eq!(contact_order(&z[0], &z[0]), ContactOrder::Infinite);
        let a = PuiseuxTruncation::new(1, [(r(1, 1), r(1, 1))], fin(3, 1)).unwrap();
        let b = PuiseuxTruncation::new(1, [(r(1, 1), r(1, 1)), (r(4, 1), r(1, 1))], fin(5, 1)).unwrap();
        assert_eq!(contact_order(&a, &b), ContactOrder::Unresolved(r(3, 1)));
        let c = PuiseuxTruncation::new(1, [(r(1, 1), r(1, 1)), (r(3, 1), r(2, 1))], fin(5, 1)).unwrap();
        assert_eq!(contact_order(&a, &c), ContactOrder::Finite(r(3, 1)));
    }

    #[test]
    fn matrices() {
        let m = contact_matrix(&quintic_roots()).unwrap();
        let values: BTreeSet<_> = (0..5)
            .flat_map(|i| (0..5).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m.get(i, j).clone())
            .collect();
        assert_eq!(values, [fin(3, 2), fin(2, 1), fin(5, 2)].into_iter().collect());
        let single = contact_matrix(&quintic_roots()[..1]).unwrap();
        assert_eq!(single.rows(), [vec![Extended::Infinity]]);
        let inf = Extended::Infinity;
        let bad = vec![
            vec![inf.clone(), fin(1, 1), fin(3, 1)],
            vec![fin(1, 1), inf.clone(), fin(2, 1)],
            vec![fin(3, 1), fin(2, 1), inf],
        ];
        assert!(matches!(ContactMatrix::new(bad), Err(Error::NotUltrametric { .. })));
        let a = PuiseuxTruncation::new(1, [(r(1, 1), r(1, 1))], fin(3, 1)).unwrap();
        assert_eq!(
            contact_matrix(&[a.clone(), a]),
            Err(Error::UnresolvedContact { i: 0, j: 1, beyond: r(3, 1) })
        );
    }

    #[test]
    fn quintic_tree() {
        let t = build_tree(&contact_matrix(&quintic_roots()).unwrap());
        let inner: Vec<(&[usize], usize)> = t
            .balls()
            .iter()
            .filter(|b| b.members.len() > 1)
            .map(|b| (b.members.as_slice(), b.successor_count()))
            .collect();
        assert_eq!(inner, [(&[0, 1, 2, 3, 4][..], 3), (&[0, 3, 4][..], 2), (&[3, 4][..], 2)]);
        assert_eq!(t.root().members.len(), 5);
        let q: Vec<Rational> = (0..t.balls().len())
            .filter(|&i| t.balls()[i].members.len() > 1)
            .map(|i| ball_invariant(&t, i).unwrap())
            .collect();
        assert_eq!(q, [r(15, 2), r(9, 1), r(10, 1)]);
        assert_eq!(tree_polygon(&t).unwrap().to_string(), "{15/2} + {9/1} + {10/1}");
        let leaf = t.balls().iter().position(|b| b.members.len() == 1).unwrap();
        assert_eq!(ball_invariant(&t, leaf), Err(Error::SingletonBall));
    }

    #[test]
    fn small_trees() {
        let cusp = [series(2, &[((3, 2), 1)]), series(2, &[((3, 2), -1)])];
        assert_eq!(tree_polygon(&build_tree(&contact_matrix(&cusp).unwrap())).unwrap().to_string(), "{3/1}");
        let node = [series(1, &[]), series(1, &[((1, 1), 1)])];
        let t = build_tree(&contact_matrix(&node).unwrap());
        assert_eq!(t.root().height, fin(1, 1));
        assert_eq!(t.root().successor_count(), 2);
        assert_eq!(tree_polygon(&t).unwrap().to_string(), "{2/1}");
        let inf = Extended::Infinity;
        let c = fin(4, 3);
        let uniform = ContactMatrix::new(vec![
            vec![inf.clone(), c.clone(), c.clone()],
            vec![c.clone(), inf.clone(), c.clone()],
            vec![c.clone(), c, inf],
        ])
        .unwrap();
        let t = build_tree(&uniform);
        assert_eq!(t.root().successor_count(), 3);
        assert_eq!(t.balls().len(), 4);
    }
}
