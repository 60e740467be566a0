//! Sparse multivariate polynomials over arbitrary-precision integers, with
//! optional per-variable exponent caps, specialized to building the degree
//! polynomial `Q_{r,d} * e^delta` and reading coefficients off against the
//! Vandermonde.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use smallvec::SmallVec;

use crate::combinatorics::{multi_indices, signed_permutations, MultiDegree};

/// Packed exponent vector, one entry per variable. Inline up to 8 variables.
pub type ExponentVector = SmallVec<[u32; 8]>;

/// A sparse polynomial in `num_vars` variables with `BigInt` coefficients.
///
/// Stored coefficients are never zero. When per-variable caps are set, every
/// stored exponent respects them componentwise, and products silently discard
/// monomials that would exceed a cap. Terms are kept in a `BTreeMap` so term
/// order, and hence every downstream accumulation, is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    num_vars: usize,
    caps: Option<Vec<u32>>,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl MultiPoly {
    /// The constant polynomial 1, uncapped.
    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, None)
    }

    /// The constant polynomial 1 with per-variable exponent caps.
    pub fn one_capped(num_vars: usize, caps: Vec<u32>) -> Self {
        assert_eq!(caps.len(), num_vars, "one cap per variable");
        Self::constant(num_vars, Some(caps))
    }

    fn constant(num_vars: usize, caps: Option<Vec<u32>>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(ExponentVector::from_elem(0, num_vars), BigInt::from(1));
        MultiPoly {
            num_vars,
            caps,
            terms,
        }
    }

    /// The zero polynomial.
    pub fn zero(num_vars: usize) -> Self {
        MultiPoly {
            num_vars,
            caps: None,
            terms: BTreeMap::new(),
        }
    }

    /// Build a polynomial from explicit terms; zero coefficients are dropped.
    pub fn from_terms<I>(num_vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut map = BTreeMap::new();
        for (expt, coeff) in terms {
            assert_eq!(expt.len(), num_vars, "exponent length mismatch");
            if !coeff.is_zero() {
                *map.entry(ExponentVector::from_slice(&expt))
                    .or_insert_with(BigInt::zero) += coeff;
            }
        }
        map.retain(|_, c| !c.is_zero());
        MultiPoly {
            num_vars,
            caps: None,
            terms: map,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn caps(&self) -> Option<&[u32]> {
        self.caps.as_deref()
    }

    /// Number of stored monomials.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate terms in exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient of the given monomial (zero if absent).
    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms
            .get(&ExponentVector::from_slice(exponents))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Multiply by the linear form `sum coeffs[i] * x_i`, discarding any term
    /// whose exponent would exceed a cap. The result carries the same caps.
    pub fn mul_linear(&self, coeffs: &[i64]) -> MultiPoly {
        assert_eq!(coeffs.len(), self.num_vars, "coefficient length mismatch");
        let mut terms: BTreeMap<ExponentVector, BigInt> = BTreeMap::new();
        for (expt, coeff) in &self.terms {
            for (var, &a) in coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let e = expt[var] + 1;
                if let Some(caps) = &self.caps {
                    if e > caps[var] {
                        continue;
                    }
                }
                let mut key = expt.clone();
                key[var] = e;
                *terms.entry(key).or_insert_with(BigInt::zero) += coeff * a;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly {
            num_vars: self.num_vars,
            caps: self.caps.clone(),
            terms,
        }
    }

    /// Multiply by `e(x)^delta = (x_0 + ... + x_r)^delta`, one capped linear
    /// multiplication at a time.
    pub fn mul_e_power(&self, delta: u64) -> MultiPoly {
        let ones = vec![1i64; self.num_vars];
        let mut acc = self.clone();
        for _ in 0..delta {
            acc = acc.mul_linear(&ones);
        }
        acc
    }

    /// Coefficient of `x^target` in `self * Vandermonde`, computed as the
    /// signed sum over permutations of staircase lookups
    /// `sum_s eps(s) * coeff(target - kappa o s)` with `kappa = (r, ..., 1, 0)`.
    /// Lookups with a negative exponent contribute 0. The Vandermonde itself
    /// is never expanded.
    pub fn alternant_coefficient(&self, target: &[u32]) -> BigInt {
        assert_eq!(target.len(), self.num_vars, "target length mismatch");
        let r = self.num_vars - 1;
        let mut total = BigInt::zero();
        for (perm, sign) in signed_permutations(self.num_vars) {
            let mut key = ExponentVector::with_capacity(self.num_vars);
            let mut valid = true;
            for (i, &p) in perm.iter().enumerate() {
                let kappa = (r - p) as i64;
                let e = i64::from(target[i]) - kappa;
                if e < 0 {
                    valid = false;
                    break;
                }
                key.push(e as u32);
            }
            if !valid {
                continue;
            }
            if let Some(c) = self.terms.get(&key) {
                if sign > 0 {
                    total += c;
                } else {
                    total -= c;
                }
            }
        }
        total
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (expt, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{coeff}")?;
            for (var, &e) in expt.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{var}")?,
                    _ => write!(f, "*x{var}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// The polynomial `Q_{r,d}(x) = prod_i prod_{a in I_{d_i}} (a_0 x_0 + ... + a_r x_r)`,
/// the top Chern class lift whose Schur expansion is the class of the scheme
/// of r-planes. Factors are multiplied grouped by `d_i`, multi-indices in
/// lexicographic order, so construction is deterministic.
pub fn build_q(r: u32, d: &MultiDegree, caps: Option<Vec<u32>>) -> MultiPoly {
    let num_vars = r as usize + 1;
    let mut acc = match caps {
        Some(c) => MultiPoly::one_capped(num_vars, c),
        None => MultiPoly::one(num_vars),
    };
    for &di in d.degrees() {
        for index in multi_indices(r, di) {
            let coeffs: Vec<i64> = index.iter().map(|&a| i64::from(a)).collect();
            acc = acc.mul_linear(&coeffs);
        }
    }
    acc
}
