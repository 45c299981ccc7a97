//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use polar_core::algebra::{check_distinguished, intersection_number, squarefree_test};
use polar_core::diagram::nondegenerate_test;
use polar_core::{BivariatePolynomial, Extended, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn bp(t: &[(i64, u32, u32)]) -> BivariatePolynomial {
    BivariatePolynomial::from_int_terms(t)
}

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn product(fs: &[BivariatePolynomial]) -> BivariatePolynomial {
    fs.iter().fold(BivariatePolynomial::one(), |acc, f| &acc * f)
}

/// `Y − Σ c_k X^k`.
pub fn smooth_branch(series: &[(i64, u32)]) -> BivariatePolynomial {
    let mut t = vec![(1, 0, 1)];
    t.extend(series.iter().map(|&(c, k)| (-c, k, 0)));
    bp(&t)
}

/// Milnor number as `(∂f/∂X, ∂f/∂Y)_0`, independent of the discriminant
/// formula: `∂f/∂Y / n` is itself Y-distinguished of degree `n − 1`.
pub fn mu_from_polars(f: &BivariatePolynomial) -> u64 {
    let n = check_distinguished(f).expect("distinguished");
    let fy = f.derivative_y().scale(&r(1, n.into()));
    match intersection_number(&fy, &f.derivative_x()).expect("polar intersection") {
        Extended::Finite(k) => k,
        Extended::Infinity => panic!("non-isolated singularity"),
    }
}

/// Conductor of `⟨gens⟩` by direct enumeration; for a branch it equals μ.
pub fn conductor(gens: &[u64]) -> u64 {
    let bound = (gens.iter().max().unwrap() * gens.iter().max().unwrap() * 4) as usize + 8;
    let mut hit = vec![false; bound];
    hit[0] = true;
    for s in 1..bound {
        hit[s] = gens.iter().any(|&g| g as usize <= s && hit[s - g as usize]);
    }
    let last_gap = (0..bound).rev().find(|&s| !hit[s]);
    last_gap.map_or(0, |g| g as u64 + 1)
}

/// `ord_t g(t^p, y(t))` for the parametrization `x = t^p`, `y = Σ c t^e`.
pub fn order_along(g: &BivariatePolynomial, p: u32, y: &[(i64, u32)]) -> Extended<u32> {
    let x = bp(&[(1, p, 0)]);
    let y = bp(&y.iter().map(|&(c, e)| (c, e, 0)).collect::<Vec<_>>());
    g.compose(&x, &y).order_x()
}

/// A random Y-distinguished squarefree nondegenerate singular polynomial.
/// Every member is convenient; `transverse` keeps all terms on or above
/// the line `α + β = n`.
pub fn random_member(rng: &mut ChaCha8Rng, transverse: bool) -> BivariatePolynomial {
    loop {
        let n: u32 = rng.random_range(2..=7);
        let coeff = |rng: &mut ChaCha8Rng| {
            let c: i64 = rng.random_range(1..=5);
            if rng.random_bool(0.5) { c } else { -c }
        };
        let low = if transverse { n } else { 2 };
        let mut terms = vec![(1i64, 0u32, n), (coeff(rng), rng.random_range(low..=11), 0)];
        for _ in 0..rng.random_range(0..=4) {
            let b = rng.random_range(0..n);
            let a_min = if transverse { (n - b).max(1) } else { 2u32.saturating_sub(b).max(1) };
            terms.push((coeff(rng), rng.random_range(a_min..=11), b));
        }
        let f = bp(&terms);
        if check_distinguished(&f).is_err() || f.order().finite().is_none_or(|&o| o < 2) {
            continue;
        }
        if squarefree_test(&f) == Ok(true) && nondegenerate_test(&f) == Ok(true) {
            return f;
        }
    }
}

/// The seeded corpus: `transverse` members first, then `general` ones.
pub fn corpus(seed: u64, transverse: usize, general: usize) -> Vec<BivariatePolynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<_> = (0..transverse).map(|_| random_member(&mut rng, true)).collect();
    out.extend((0..general).map(|_| random_member(&mut rng, false)));
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
