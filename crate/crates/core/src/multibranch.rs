//! Polar invariants of reducible curves from intersection data alone.

use std::collections::BTreeSet;

use num_traits::Signed;

use crate::algebra::Rational;
use crate::branch::{milnor_from_sequence, transverse_generators, ZSequence};
use crate::diagram::{minkowski_sum, NewtonDiagram};
use crate::{Error, Extended, Result};

/// One branch `f_i` seen from the line `l = X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    d: u64,
    sequence: Option<ZSequence>,
}

impl Branch {
    /// `d = (l, f_i)_0` and the generators relative to `l`, starting with
    /// `d`. A one-element list `[d]` marks an empty relative polar set.
    pub fn new(d: u64, generators: Vec<u64>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidFamily(m));
        if d == 0 {
            return bad("d must be positive".into());
        }
        if generators.first() != Some(&d) {
            return bad(format!("sequence {generators:?} must start with d={d}"));
        }
        if generators.len() == 1 {
            return Ok(Self { d, sequence: None });
        }
        Ok(Self { d, sequence: Some(ZSequence::new(generators)?) })
    }

    /// A smooth branch transverse to `l`.
    pub fn smooth() -> Self {
        Self { d: 1, sequence: None }
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// `None` for the h = 0 marker.
    pub fn sequence(&self) -> Option<&ZSequence> {
        self.sequence.as_ref()
    }

    pub fn generators(&self) -> Vec<u64> {
        self.sequence.as_ref().map_or_else(|| vec![self.d], |s| s.generators().to_vec())
    }

    /// `Q(f_i, l) = {e_(k−1) b̄_k / b̄_0}`.
    pub fn polar_set(&self) -> Vec<Rational> {
        let Some(s) = &self.sequence else {
            return Vec::new();
        };
        let b = s.generators();
        (1..b.len())
            .map(|k| Rational::new((s.e()[k - 1] * b[k]).into(), b[0].into()))
            .collect()
    }

    /// `η(f_i, l)`, `None` for `−∞`.
    pub fn eta(&self) -> Option<Rational> {
        self.polar_set().into_iter().max()
    }

    pub fn milnor_number(&self) -> u64 {
        self.sequence.as_ref().map_or(0, milnor_from_sequence)
    }

    /// Minimal generators of the semigroup, `[1]` for a smooth branch.
    pub fn semigroup(&self) -> Vec<u64> {
        self.sequence.as_ref().map_or_else(|| vec![1], transverse_generators)
    }
}

/// Branches with their pairwise intersection numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchFamily {
    branches: Vec<Branch>,
    m: Vec<Vec<Extended<u64>>>,
}

impl BranchFamily {
    /// `m` is symmetric with `∞` on the diagonal and finite positive
    /// entries elsewhere.
    pub fn new(branches: Vec<Branch>, m: Vec<Vec<Extended<u64>>>) -> Result<Self> {
        let bad = |s: String| Err(Error::InvalidFamily(s));
        let r = branches.len();
        if r == 0 {
            return bad("no branches".into());
        }
        if m.len() != r || m.iter().any(|row| row.len() != r) {
            return bad(format!("intersection matrix must be {r}x{r}"));
        }
        for i in 0..r {
            if !m[i][i].is_infinite() {
                return bad(format!("diagonal entry {i} must be inf"));
            }
            for j in 0..r {
                if m[i][j] != m[j][i] {
                    return bad(format!("entries ({i},{j}) and ({j},{i}) differ"));
                }
                if i != j {
                    match m[i][j] {
                        Extended::Infinity => return bad(format!("branches {i} and {j} coincide")),
                        Extended::Finite(0) => return bad(format!("entry ({i},{j}) must be at least 1")),
                        _ => {}
                    }
                }
            }
        }
        Ok(Self { branches, m })
    }

    /// Builds the matrix from the strict upper triangle listed row by row.
    pub fn from_upper(branches: Vec<Branch>, upper: &[u64]) -> Result<Self> {
        let r = branches.len();
        if upper.len() != r * (r.saturating_sub(1)) / 2 {
            return Err(Error::InvalidFamily("wrong number of intersection numbers".into()));
        }
        let mut m = vec![vec![Extended::Infinity; r]; r];
        let mut it = upper.iter();
        for i in 0..r {
            for j in i + 1..r {
                let v = Extended::Finite(*it.next().unwrap());
                m[i][j] = v.clone();
                m[j][i] = v;
            }
        }
        Self::new(branches, m)
    }

    pub fn len(&self) -> usize {
        self.branches.len()
    }

    pub fn is_empty(&self) -> bool {
        self.branches.is_empty()
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn matrix(&self) -> &[Vec<Extended<u64>>] {
        &self.m
    }

    /// `(f_i, f_j)_0` for `i ≠ j`.
    pub fn intersection(&self, i: usize, j: usize) -> u64 {
        *self.m[i][j].finite().expect("diagonal intersection is infinite")
    }

    /// Reorders the branches by `perm`: branch `k` of the result is
    /// branch `perm[k]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let branches = perm.iter().map(|&p| self.branches[p].clone()).collect();
        let m = perm.iter().map(|&p| perm.iter().map(|&q| self.m[p][q].clone()).collect()).collect();
        Self { branches, m }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(i))
        }
    }
}

/// `H_i = Σ_j {(f_i, f_j)_0 / (l, f_j)_0}`; the `j = i` summand is the
/// vertex `(0, d_i)`.
pub fn h_diagram(fam: &BranchFamily, i: usize) -> Result<NewtonDiagram> {
    fam.check_index(i)?;
    let mut d = NewtonDiagram::vertex((0, fam.branches[i].d));
    for j in (0..fam.len()).filter(|&j| j != i) {
        d = minkowski_sum(&d, &NewtonDiagram::elementary(fam.intersection(i, j), fam.branches[j].d));
    }
    Ok(d)
}

/// `q_i(τ) = (1/d_i) Σ_j min((f_i, f_j)_0, τ d_j)`.
pub fn q_function(fam: &BranchFamily, i: usize, tau: &Rational) -> Result<Rational> {
    fam.check_index(i)?;
    if !tau.is_positive() {
        return Err(Error::NonPositive);
    }
    let int = |v: u64| Rational::from_integer(v.into());
    let di = int(fam.branches[i].d);
    let mut s = tau * &di;
    for j in (0..fam.len()).filter(|&j| j != i) {
        let a = int(fam.intersection(i, j));
        let b = tau * int(fam.branches[j].d);
        s += std::cmp::min(a, b);
    }
    Ok(s / di)
}

fn contact_quotients(fam: &BranchFamily, i: usize) -> impl Iterator<Item = Rational> + '_ {
    (0..fam.len())
        .filter(move |&j| j != i)
        .map(move |j| Rational::new(fam.intersection(i, j).into(), fam.branches[j].d.into()))
}

/// `Q(f, l) = ∪_i q_i(Q(f_i, l) ∪ {M_ij / d_j : j ≠ i})`.
pub fn polar_set(fam: &BranchFamily) -> Result<BTreeSet<Rational>> {
    if fam.len() < 2 {
        return Err(Error::TooFewBranches);
    }
    let mut out = BTreeSet::new();
    for i in 0..fam.len() {
        let taus: BTreeSet<Rational> = fam.branches[i].polar_set().into_iter().chain(contact_quotients(fam, i)).collect();
        for tau in &taus {
            out.insert(q_function(fam, i, tau)?);
        }
    }
    Ok(out)
}

/// `η(f, l) = max_i { max(η(f_i, l), max_{j≠i} M_ij/d_j) + (1/d_i) Σ_{j≠i} M_ij }`.
pub fn eta_formula(fam: &BranchFamily) -> Result<Rational> {
    if fam.len() < 2 {
        return Err(Error::TooFewBranches);
    }
    let value = |i: usize| {
        let inner = contact_quotients(fam, i).chain(fam.branches[i].eta()).max().unwrap();
        let s: u64 = (0..fam.len()).filter(|&j| j != i).map(|j| fam.intersection(i, j)).sum();
        inner + Rational::new(s.into(), fam.branches[i].d.into())
    };
    Ok((0..fam.len()).map(value).max().unwrap())
}

/// Equisingularity of the pencil `f − t l^N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PencilOutcome {
    /// Equisingular for `t ≠ 0`: `N ∉ Q(f, l)`.
    pub off_origin: bool,
    /// Equisingular for all `t`: `η(f, l) < N`.
    pub everywhere: bool,
}

pub fn pencil_test(q_set: &BTreeSet<Rational>, eta: &Rational, n: u64) -> Result<PencilOutcome> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let n = Rational::from_integer(n.into());
    Ok(PencilOutcome { off_origin: !q_set.contains(&n), everywhere: *eta < n })
}

/// `μ(f) = Σ μ(f_i) + 2 Σ_{i<j} (f_i, f_j)_0 − (r − 1)`.
pub fn milnor_additivity(fam: &BranchFamily, per_branch_mu: &[u64]) -> Result<u64> {
    if per_branch_mu.len() != fam.len() {
        return Err(Error::Inconsistent(format!(
            "{} Milnor numbers for {} branches",
            per_branch_mu.len(),
            fam.len()
        )));
    }
    for (i, (b, &mu)) in fam.branches.iter().zip(per_branch_mu).enumerate() {
        if b.milnor_number() != mu {
            return Err(Error::Inconsistent(format!(
                "branch {i} has Milnor number {} by its sequence, not {mu}",
                b.milnor_number()
            )));
        }
    }
    let r = fam.len();
    let pairs: u64 = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).map(|(i, j)| fam.intersection(i, j)).sum();
    Ok(per_branch_mu.iter().sum::<u64>() + 2 * pairs + 1 - r as u64)
}

type Label = (Vec<u64>, u64);

fn find_bijection(a: &BranchFamily, b: &BranchFamily, la: &[Label], lb: &[Label]) -> bool {
    let r = a.len();
    if r != b.len() {
        return false;
    }
    let row_signature = |f: &BranchFamily, labels: &[Label], i: usize| {
        let mut row: Vec<(u64, &Label)> =
            (0..r).filter(|&j| j != i).map(|j| (f.intersection(i, j), &labels[j])).collect();
        row.sort();
        (labels[i].clone(), row.into_iter().map(|(v, l)| (v, l.clone())).collect::<Vec<_>>())
    };
    let sa: Vec<_> = (0..r).map(|i| row_signature(a, la, i)).collect();
    let sb: Vec<_> = (0..r).map(|i| row_signature(b, lb, i)).collect();
    let (mut ka, mut kb) = (sa.clone(), sb.clone());
    ka.sort();
    kb.sort();
    if ka != kb {
        return false;
    }
    fn extend(
        k: usize,
        assign: &mut Vec<usize>,
        used: &mut [bool],
        a: &BranchFamily,
        b: &BranchFamily,
        ok: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        if k == used.len() {
            return true;
        }
        for cand in 0..used.len() {
            if used[cand] || !ok(k, cand) {
                continue;
            }
            if (0..k).any(|p| a.m[k][p] != b.m[cand][assign[p]]) {
                continue;
            }
            used[cand] = true;
            assign.push(cand);
            if extend(k + 1, assign, used, a, b, ok) {
                return true;
            }
            assign.pop();
            used[cand] = false;
        }
        false
    }
    let ok = |i: usize, j: usize| sa[i] == sb[j];
    let mut assign = Vec::with_capacity(r);
    let mut used = vec![false; r];
    extend(0, &mut assign, &mut used, a, b, &ok)
}

/// Equisingularity of the curves: a bijection of branches preserving
/// semigroups and intersection numbers.
pub fn equisingular_compare(a: &BranchFamily, b: &BranchFamily) -> bool {
    let label = |f: &BranchFamily| f.branches.iter().map(|br| (br.semigroup(), 0)).collect::<Vec<_>>();
    find_bijection(a, b, &label(a), &label(b))
}

/// As [`equisingular_compare`], also matching `(l, f_i)_0` branchwise.
pub fn pair_equisingular_compare(a: &BranchFamily, b: &BranchFamily) -> bool {
    let label = |f: &BranchFamily| f.branches.iter().map(|br| (br.semigroup(), br.d)).collect::<Vec<_>>();
    find_bijection(a, b, &label(a), &label(b))
}

/// `H_i(a) = H_i(b)` for every index `i`.
pub fn h_collection_compare(a: &BranchFamily, b: &BranchFamily) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::Inconsistent(format!("families have {} and {} branches", a.len(), b.len())));
    }
    for i in 0..a.len() {
        if h_diagram(a, i)? != h_diagram(b, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn quintic_family() -> BranchFamily {
        let branches = vec![
            Branch::new(1, vec![1]).unwrap(),
            Branch::new(2, vec![2, 3]).unwrap(),
            Branch::new(2, vec![2, 5]).unwrap(),
        ];
        BranchFamily::from_upper(branches, &[3, 4, 6]).unwrap()
    }

    fn two_smooth(m: u64) -> BranchFamily {
        BranchFamily::from_upper(vec![Branch::smooth(), Branch::smooth()], &[m]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Branch::new(2, vec![3, 2]).is_err());
        assert!(Branch::new(4, vec![4, 6, 14]).is_err());
        let inf = Extended::Infinity;
        let bad = vec![vec![inf.clone(), Extended::Finite(2)], vec![Extended::Finite(3), inf.clone()]];
        assert!(BranchFamily::new(vec![Branch::smooth(), Branch::smooth()], bad).is_err());
        let shared = vec![vec![inf.clone(), inf.clone()], vec![inf.clone(), inf]];
        assert!(BranchFamily::new(vec![Branch::smooth(), Branch::smooth()], shared).is_err());
    }

    #[test]
    fn h_diagrams() {
        assert_eq!(h_diagram(&two_smooth(2), 0).unwrap().vertices(), [(0, 2), (2, 1)]);
        assert_eq!(h_diagram(&quintic_family(), 0).unwrap().vertices(), [(0, 5), (3, 3), (7, 1)]);
        let single = BranchFamily::from_upper(vec![Branch::new(3, vec![3, 4]).unwrap()], &[]).unwrap();
        assert_eq!(h_diagram(&single, 0).unwrap().vertices(), [(0, 3)]);
        assert_eq!(h_diagram(&single, 1), Err(Error::IndexOutOfRange(1)));
    }

    #[test]
    fn q_values() {
        let fam = quintic_family();
        assert_eq!(q_function(&fam, 0, &r(3, 2)), Ok(r(15, 2)));
        assert_eq!(q_function(&fam, 0, &r(2, 1)), Ok(r(9, 1)));
        assert_eq!(q_function(&fam, 1, &r(3, 1)), Ok(r(15, 2)));
        assert_eq!(q_function(&fam, 2, &r(5, 1)), Ok(r(10, 1)));
        assert_eq!(q_function(&two_smooth(2), 0, &r(10, 1)), Ok(r(12, 1)));
        assert_eq!(q_function(&fam, 0, &r(0, 1)), Err(Error::NonPositive));
    }

    #[test]
    fn polar_sets_and_eta() {
        let set = |v: &[Rational]| v.iter().cloned().collect::<BTreeSet<_>>();
        assert_eq!(polar_set(&quintic_family()), Ok(set(&[r(15, 2), r(9, 1), r(10, 1)])));
        assert_eq!(polar_set(&two_smooth(2)), Ok(set(&[r(4, 1)])));
        assert_eq!(polar_set(&two_smooth(1)), Ok(set(&[r(2, 1)])));
        assert_eq!(eta_formula(&quintic_family()), Ok(r(10, 1)));
        assert_eq!(eta_formula(&two_smooth(2)), Ok(r(4, 1)));
        assert_eq!(eta_formula(&two_smooth(1)), Ok(r(2, 1)));
        let single = BranchFamily::from_upper(vec![Branch::smooth()], &[]).unwrap();
        assert_eq!(polar_set(&single), Err(Error::TooFewBranches));
        assert_eq!(eta_formula(&single), Err(Error::TooFewBranches));
    }

    #[test]
    fn pencils() {
        let q: BTreeSet<_> = [r(15, 2), r(9, 1), r(10, 1)].into_iter().collect();
        let eta = r(10, 1);
        let t = |n| pencil_test(&q, &eta, n).map(|o| (o.off_origin, o.everywhere));
        assert_eq!(t(9), Ok((false, false)));
        assert_eq!(t(11), Ok((true, true)));
        assert_eq!(t(8), Ok((true, false)));
        assert_eq!(t(0), Err(Error::NonPositive));
    }

    #[test]
    fn additivity() {
        assert_eq!(milnor_additivity(&quintic_family(), &[0, 2, 4]), Ok(30));
        assert_eq!(milnor_additivity(&two_smooth(1), &[0, 0]), Ok(1));
        assert_eq!(milnor_additivity(&two_smooth(2), &[0, 0]), Ok(3));
        assert!(matches!(milnor_additivity(&quintic_family(), &[0, 2, 5]), Err(Error::Inconsistent(_))));
        assert!(matches!(milnor_additivity(&quintic_family(), &[0, 2]), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn comparisons() {
        let fam = quintic_family();
        assert!(equisingular_compare(&fam, &fam.permuted(&[2, 0, 1])));
        assert!(pair_equisingular_compare(&fam, &fam.permuted(&[1, 2, 0])));
        let changed = BranchFamily::from_upper(fam.branches().to_vec(), &[3, 4, 7]).unwrap();
        assert!(!equisingular_compare(&fam, &changed));
        assert!(!equisingular_compare(&two_smooth(2), &two_smooth(3)));
        assert_eq!(h_collection_compare(&fam, &fam), Ok(true));
        assert_eq!(h_collection_compare(&two_smooth(2), &two_smooth(3)), Ok(false));
        // A tangent smooth branch has the same semigroup as a transverse one,
        // but the pair comparison sees the different d.
        let tangent = BranchFamily::from_upper(vec![Branch::new(2, vec![2, 1]).unwrap(), Branch::smooth()], &[1]).unwrap();
        assert!(equisingular_compare(&tangent, &two_smooth(1)));
        assert!(!pair_equisingular_compare(&tangent, &two_smooth(1)));
    }
}
