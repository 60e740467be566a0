//! Straightening of Schubert symbols, the Schubert-basis decomposition of the
//! class of the scheme of r-planes, and its Plucker degree by two routes: the
//! Vandermonde alternant and the Pieri chain-count oracle.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::combinatorics::{schubert_degree, MultiDegree, Partition};
use crate::error::{Error, Result};
use crate::invariants::FanoProblem;
use crate::poly::{build_q, MultiPoly};

/// Outcome of straightening an exponent vector onto the Schubert basis:
/// either the symbol vanishes, or it equals `sign * sigma_lambda`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StraightenResult {
    Zero,
    Term { sign: i8, lambda: Partition },
}

/// Straighten `sigma_alpha`: with `kappa = (r, ..., 1, 0)`, if `alpha + kappa`
/// has a repeated entry the symbol is zero; otherwise sort it strictly
/// decreasingly by a permutation `tau` and return `(eps(tau), sorted - kappa)`.
pub fn straighten(alpha: &[u32]) -> StraightenResult {
    let m = alpha.len();
    assert!(m >= 1, "need at least one entry");
    let r = (m - 1) as i64;
    let mut shifted: Vec<i64> = alpha
        .iter()
        .enumerate()
        .map(|(i, &a)| i64::from(a) + r - i as i64)
        .collect();

    // Parity of the permutation sorting `shifted` into decreasing order is
    // the parity of its inversion count with respect to that order.
    let mut inversions = 0usize;
    for i in 0..m {
        for j in i + 1..m {
            if shifted[i] == shifted[j] {
                return StraightenResult::Zero;
            }
            if shifted[i] < shifted[j] {
                inversions += 1;
            }
        }
    }
    shifted.sort_unstable_by(|a, b| b.cmp(a));

    let mut parts = Vec::with_capacity(m);
    for (i, &v) in shifted.iter().enumerate() {
        let part = v - (r - i as i64);
        if part < 0 {
            // Unreachable for nonnegative alpha, kept so the map is total.
            return StraightenResult::Zero;
        }
        parts.push(part as u32);
    }
    StraightenResult::Term {
        sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
        lambda: Partition::new(parts).expect("sorted strictly decreasing shift gives a partition"),
    }
}

/// The decomposition `[F] = sum f_lambda sigma_lambda` of the class of the
/// scheme of r-planes on the Schubert basis. All stored coefficients are
/// positive; partitions not fitting the ambient rectangle are dropped unless
/// the class was computed in abstract (rectangle-free) mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoClass {
    r: u32,
    ambient: Option<u32>,
    coefficients: BTreeMap<Partition, BigInt>,
}

impl FanoClass {
    pub fn r(&self) -> u32 {
        self.r
    }

    /// The ambient `n`, or `None` for an abstract class.
    pub fn ambient(&self) -> Option<u32> {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.coefficients
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Terms in increasing partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coefficients.iter()
    }

    /// Terms ordered as customarily printed: lexicographically decreasing.
    pub fn iter_display(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coefficients.iter().rev()
    }
}

/// The class of the scheme of r-planes in `G(r, P^n)`: straighten every
/// monomial of `Q_{r,d}` and drop partitions sticking out of the
/// `(r+1) x (n-r)` rectangle, whose Schubert classes vanish there.
///
/// This is the top Chern class of the defining bundle even when `delta < 0`;
/// in that case it is no longer the class of a scheme of expected dimension
/// (callers may want to surface a note).
pub fn fano_class(problem: &FanoProblem) -> FanoClass {
    // All straightening lookups stay componentwise <= n, so capping at n
    // loses nothing inside the rectangle.
    let caps = vec![problem.n(); problem.r() as usize + 1];
    let q = build_q(problem.r(), problem.d(), Some(caps));
    accumulate_class(&q, problem.r(), Some(problem.n()))
}

/// The abstract (rectangle-free) class, the form in which decompositions are
/// usually published: valid verbatim in `G(r, P^n)` for every n large enough
/// that no partition sticks out.
pub fn fano_class_abstract(r: u32, d: &MultiDegree) -> FanoClass {
    let q = build_q(r, d, None);
    accumulate_class(&q, r, None)
}

fn accumulate_class(q: &MultiPoly, r: u32, ambient: Option<u32>) -> FanoClass {
    let mut coefficients: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (expt, coeff) in q.terms() {
        match straighten(expt) {
            StraightenResult::Zero => {}
            StraightenResult::Term { sign, lambda } => {
                if let Some(n) = ambient {
                    if lambda.parts()[0] > n - r {
                        continue;
                    }
                }
                let entry = coefficients.entry(lambda).or_insert_with(BigInt::zero);
                if sign > 0 {
                    *entry += coeff;
                } else {
                    *entry -= coeff;
                }
            }
        }
    }
    coefficients.retain(|_, c| !c.is_zero());
    debug_assert!(
        coefficients.values().all(|c| c.is_positive()),
        "class of an effective cycle has nonnegative coefficients"
    );
    FanoClass {
        r,
        ambient,
        coefficients,
    }
}

fn checked_delta(problem: &FanoProblem) -> Result<u64> {
    let delta = problem.delta();
    if delta.is_negative() {
        return Err(Error::NegativeExpectedDimension { delta });
    }
    u64::try_from(&delta).map_err(|_| Error::ExpectedDimensionTooLarge { delta })
}

/// Plucker degree of the scheme of r-planes: the coefficient of
/// `x_0^n x_1^{n-1} ... x_r^{n-r}` in `Q_{r,d} * e^delta * Vandermonde`,
/// computed with every variable capped at n.
pub fn fano_degree(problem: &FanoProblem) -> Result<BigInt> {
    let delta = checked_delta(problem)?;
    let n = problem.n();
    let r = problem.r();
    let caps = vec![n; r as usize + 1];
    let q = build_q(r, problem.d(), Some(caps));
    let p = q.mul_e_power(delta);
    let target: Vec<u32> = (0..=r).map(|i| n - i).collect();
    Ok(p.alternant_coefficient(&target))
}

/// The same degree through the Schubert decomposition and iterated Pieri
/// multiplication: `sum_lambda f_lambda * integral(sigma_lambda sigma_1^delta)`.
pub fn fano_degree_via_pieri(problem: &FanoProblem) -> Result<BigInt> {
    checked_delta(problem)?;
    let class = fano_class(problem);
    let mut total = BigInt::zero();
    for (lambda, coeff) in class.iter() {
        total += coeff * schubert_degree(lambda, problem.n())?;
    }
    Ok(total)
}
