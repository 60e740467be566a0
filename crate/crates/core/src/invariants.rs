//! Closed-form numeric invariants and theorem-backed predicates of a Fano
//! scheme problem: expected dimension, emptiness/smoothness/connectedness
//! classification, canonical twist, Hodge numbers in the Lefschetz range,
//! normal-bundle splitting type, and the bound-based boolean predicates.
//!
//! Every predicate here is one-directional: `holds = true` means the bound
//! guaranteeing the property is satisfied, while `holds = false` only means
//! the bound is silent (the property may still hold; the variety of lines on
//! a cubic in P^5 is simply connected over C even though the bound starts
//! at n = 6).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{binom_sum, partitions_in_rectangle, MultiDegree};
use crate::error::{Error, Result};

/// The problem triple: r-planes on a complete intersection of multidegree `d`
/// inside `P^n`. Always satisfies `0 <= r < n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoProblem {
    n: u32,
    d: MultiDegree,
    r: u32,
}

impl FanoProblem {
    pub fn new(n: u32, d: MultiDegree, r: u32) -> Result<Self> {
        if r >= n {
            return Err(Error::InvalidProblem { n, r });
        }
        Ok(FanoProblem { n, d, r })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> &MultiDegree {
        &self.d
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// `sum_i C(d_i + r, r)`: the rank of the bundle cutting out the scheme,
    /// i.e. its codimension in the Grassmannian when of expected dimension.
    pub fn codimension(&self) -> BigInt {
        binom_sum(&self.d, i64::from(self.r), i64::from(self.r))
    }

    /// Expected dimension `delta = (r+1)(n-r) - sum_i C(d_i + r, r)`.
    pub fn delta(&self) -> BigInt {
        let n = i64::from(self.n);
        let r = i64::from(self.r);
        BigInt::from((r + 1) * (n - r)) - self.codimension()
    }

    /// `delta_minus = min(delta, n - 2r - s)`, the threshold controlling
    /// emptiness, smoothness and connectedness.
    pub fn delta_minus(&self) -> BigInt {
        let edge = i64::from(self.n) - 2 * i64::from(self.r) - self.d.count() as i64;
        self.delta().min(BigInt::from(edge))
    }

    /// Relative expected dimension for the subscheme of r-planes containing a
    /// fixed r0-plane; `r0 = -1` recovers [`FanoProblem::delta`].
    pub fn delta_rel(&self, r0: i64) -> Result<BigInt> {
        self.check_r0(r0)?;
        let n = i64::from(self.n);
        let r = i64::from(self.r);
        Ok(BigInt::from((r - r0) * (n - r)) + binom_sum(&self.d, r0, r0) - self.codimension())
    }

    /// Relative `delta_minus`; `r0 = -1` recovers [`FanoProblem::delta_minus`].
    ///
    /// For `(r+1)`-planes through a fixed `r`-plane the two branches of the
    /// min coincide at `n - r - 1 - sum_i C(d_i + r, r + 1)` (Pascal's rule);
    /// the minus sign in front of the binomial matters: it makes positivity
    /// here exactly the bound `n >= sum_i C(d_i + r, r + 1) + r + 1` that the
    /// splitting and uniruledness statements assume.
    pub fn delta_minus_rel(&self, r0: i64) -> Result<BigInt> {
        let delta = self.delta_rel(r0)?;
        let n = i64::from(self.n);
        let r = i64::from(self.r);
        let edge = BigInt::from(n - 2 * r + r0 + 1) - binom_sum(&self.d, r0, r0 + 1);
        Ok(delta.min(edge))
    }

    fn check_r0(&self, r0: i64) -> Result<()> {
        if r0 < -1 || r0 >= i64::from(self.r) {
            return Err(Error::ReferencePlaneOutOfRange { r0, r: self.r });
        }
        Ok(())
    }
}

impl fmt::Display for FanoProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}(X), X of multidegree {} in P^{}", self.r, self.d, self.n)
    }
}

/// What happens for a general complete intersection of the given multidegree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// `delta_minus < 0`: the scheme is empty for general X.
    GenericallyEmpty,
    /// `delta_minus = 0`: nonempty, smooth of dimension `delta` for general X.
    NonemptySmoothOfExpectedDim,
    /// `delta_minus > 0`: additionally connected (for every X).
    NonemptySmoothConnected,
    /// The quadric special case `d = (2)`, `n = 2r + 1`: smooth with exactly
    /// two connected components.
    QuadricTwoComponents,
}

impl Classification {
    /// Stable machine name, used verbatim in JSON output.
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::GenericallyEmpty => "GenericallyEmpty",
            Classification::NonemptySmoothOfExpectedDim => "NonemptySmoothOfExpectedDim",
            Classification::NonemptySmoothConnected => "NonemptySmoothConnected",
            Classification::QuadricTwoComponents => "QuadricTwoComponents",
        }
    }

    /// Human-readable description.
    pub fn describe(&self) -> &'static str {
        match self {
            Classification::GenericallyEmpty => "empty for general X",
            Classification::NonemptySmoothOfExpectedDim => {
                "nonempty, smooth of the expected dimension for general X"
            }
            Classification::NonemptySmoothConnected => {
                "nonempty, smooth of the expected dimension for general X, and connected"
            }
            Classification::QuadricTwoComponents => {
                "smooth with exactly two connected components (middle-dimensional planes on a quadric)"
            }
        }
    }
}

/// Classify by the sign of `delta_minus`, with the quadric middle-dimension
/// case taking precedence.
pub fn classify(p: &FanoProblem) -> Classification {
    if p.d().is_single_quadric() && p.n() == 2 * p.r() + 1 {
        return Classification::QuadricTwoComponents;
    }
    let dm = p.delta_minus();
    if dm.is_negative() {
        Classification::GenericallyEmpty
    } else if dm.is_zero() {
        Classification::NonemptySmoothOfExpectedDim
    } else {
        Classification::NonemptySmoothConnected
    }
}

/// Twist `t` with `omega = O(t)`: `sum_i C(d_i + r, r + 1) - n - 1`.
pub fn canonical_twist(p: &FanoProblem) -> BigInt {
    binom_sum(p.d(), i64::from(p.r()), i64::from(p.r()) + 1) - i64::from(p.n()) - 1
}

/// Minus the canonical twist; positive exactly when the scheme is Fano.
pub fn fano_index(p: &FanoProblem) -> BigInt {
    -canonical_twist(p)
}

pub fn is_fano(p: &FanoProblem) -> bool {
    fano_index(p) >= BigInt::one()
}

/// A Betti/Hodge number answer, graded by how far the Lefschetz-type
/// restriction theorem reaches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HodgeNumber {
    /// `i < delta_minus`: restriction from the Grassmannian is bijective, the
    /// value is exact (`h^{p,q} = 0` for `p != q`).
    Exact(BigInt),
    /// `i = delta_minus`: restriction is only injective, the Grassmannian
    /// value is a lower bound.
    LowerBound(BigInt),
    /// Beyond the range of the theorem.
    Unknown,
}

/// The i-th Betti number of the scheme, as far as the Lefschetz range allows:
/// 0 in odd degrees, the number of partitions of `i/2` in an
/// `(r+1) x (n-r)` rectangle in even degrees.
pub fn hodge_number(p: &FanoProblem, i: u64) -> HodgeNumber {
    let dm = p.delta_minus();
    let i_big = BigInt::from(i);
    if i_big > dm {
        return HodgeNumber::Unknown;
    }
    let value = if i % 2 == 1 {
        BigInt::zero()
    } else {
        partitions_in_rectangle(i / 2, u64::from(p.r()) + 1, u64::from(p.n() - p.r()))
    };
    if i_big < dm {
        HodgeNumber::Exact(value)
    } else {
        HodgeNumber::LowerBound(value)
    }
}

/// Splitting type of the normal bundle of a maximal linear family restricted
/// to a general line: `O^a + O(1)^b` with `(a, b)` returned here. Requires
/// `n >= sum_i C(d_i + r, r + 1) + r + 1`.
pub fn splitting_type(p: &FanoProblem) -> Result<(BigInt, BigInt)> {
    let r = i64::from(p.r());
    let n = i64::from(p.n());
    let c_next = binom_sum(p.d(), r, r + 1);
    let required = &c_next + r + 1;
    if BigInt::from(n) < required {
        return Err(Error::SplittingHypothesisViolated {
            n: p.n(),
            required,
        });
    }
    let count_o = BigInt::from(r * (n - r - 1)) + &c_next - p.codimension();
    let count_o1 = BigInt::from(n - r - 1) - c_next;
    Ok((count_o, count_o1))
}

/// One bound-based predicate: `holds` states whether the sufficient bound is
/// satisfied, and `bound` is the threshold that was compared against
/// (a lower bound on `n` for every predicate except `picard_rank_one`, whose
/// bound applies to `delta_minus`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Predicate {
    pub holds: bool,
    pub bound: BigInt,
}

impl Predicate {
    fn n_at_least(p: &FanoProblem, bound: BigInt) -> Self {
        Predicate {
            holds: BigInt::from(p.n()) >= bound,
            bound,
        }
    }
}

/// The full suite of one-directional predicates, each with the bound it was
/// tested against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateSuite {
    /// Algebraically simply connected: `(r+1)(n-r-1) >= 2 sum_i C(d_i+r, r)`.
    pub simply_connected: Predicate,
    /// Picard group isomorphic to Z (generated by O(1)): `n >= 2 sum_i C(d_i+r, r) + 2`.
    pub picard_z_homotopy: Predicate,
    /// Picard rank 1: `delta_minus >= 3`.
    pub picard_rank_one: Predicate,
    /// Projectively normal in the Plucker embedding: `n >= r + sum_i C(d_i+r, r)`.
    pub projectively_normal: Predicate,
    /// X itself covered by r-planes.
    pub covered_by_r_planes: Predicate,
    /// The scheme is uniruled in lines: `n >= sum_i C(d_i+r, r+1) + r + 1`.
    pub uniruled_in_lines: Predicate,
    /// Separably uniruled in lines (same bound).
    pub separably_uniruled: Predicate,
    /// Rationally chain connected: `n >= sum_i C(d_i+r, r+1)`.
    pub rationally_chain_connected: Predicate,
    /// Any two points joined by a connected chain of lines of total degree
    /// `delta`: `n >= sum_i C(d_i+r, r+1) + r + 1`.
    pub chain_degree: Predicate,
    /// 1-cycles modulo algebraic equivalence have rank 1 (same bound).
    pub b1_rank_one: Predicate,
    /// 1-cycles modulo rational equivalence have rank 1:
    /// `n >= sum_i C(d_i+r+1, r+2)`.
    pub a1_rank_one: Predicate,
    /// Every equation of the scheme in the Plucker embedding has degree at
    /// least `min_i d_i` (meaningful when `projectively_normal` holds).
    pub min_equation_degree: u32,
}

impl PredicateSuite {
    /// Stable (name, predicate) listing, in rendering order.
    pub fn entries(&self) -> [(&'static str, &Predicate); 11] {
        [
            ("simply_connected", &self.simply_connected),
            ("picard_Z_homotopy", &self.picard_z_homotopy),
            ("picard_rank_one", &self.picard_rank_one),
            ("projectively_normal", &self.projectively_normal),
            ("covered_by_r_planes", &self.covered_by_r_planes),
            ("uniruled_in_lines", &self.uniruled_in_lines),
            ("separably_uniruled", &self.separably_uniruled),
            ("rationally_chain_connected", &self.rationally_chain_connected),
            ("chain_degree", &self.chain_degree),
            ("B1_rank_one", &self.b1_rank_one),
            ("A1_rank_one", &self.a1_rank_one),
        ]
    }
}

/// Evaluate the whole predicate suite by exact integer arithmetic (fractional
/// bounds are cross-multiplied, never rounded through floats).
pub fn predicate_suite(p: &FanoProblem) -> PredicateSuite {
    let n = i64::from(p.n());
    let r = i64::from(p.r());
    let s = p.d().count() as i64;
    let c = p.codimension();
    let c_next = binom_sum(p.d(), r, r + 1);

    // n >= 2C/(r+1) + r + 1, tested as (r+1)(n-r-1) >= 2C; the reported
    // bound is the smallest integer n satisfying it.
    let twice_c: BigInt = &c + &c;
    let simply_connected = Predicate {
        holds: BigInt::from((r + 1) * (n - r - 1)) >= twice_c,
        bound: (&c + &c).div_ceil(&BigInt::from(r + 1)) + r + 1,
    };

    let picard_z_homotopy = Predicate::n_at_least(p, &c + &c + 2);

    let picard_rank_one = Predicate {
        holds: p.delta_minus() >= BigInt::from(3),
        bound: BigInt::from(3),
    };

    let projectively_normal = Predicate::n_at_least(p, &c + r);

    // d = (2) is covered by r-planes iff n >= 2r + 1; otherwise the exact
    // form is r n >= C + r^2 - s.
    let covered_by_r_planes = if p.d().is_single_quadric() {
        Predicate::n_at_least(p, BigInt::from(2 * r + 1))
    } else {
        let rhs = &c + r * r - s;
        Predicate {
            holds: BigInt::from(r * n) >= rhs,
            bound: if r == 0 {
                BigInt::zero()
            } else {
                rhs.div_ceil(&BigInt::from(r)).max(BigInt::zero())
            },
        }
    };

    let lines_bound: BigInt = &c_next + r + 1;
    let uniruled_in_lines = Predicate::n_at_least(p, lines_bound.clone());
    let separably_uniruled = Predicate::n_at_least(p, lines_bound.clone());
    let rationally_chain_connected = Predicate::n_at_least(p, c_next.clone());
    let chain_degree = Predicate::n_at_least(p, lines_bound.clone());
    let b1_rank_one = Predicate::n_at_least(p, lines_bound);
    let a1_rank_one = Predicate::n_at_least(p, binom_sum(p.d(), r + 1, r + 2));

    PredicateSuite {
        simply_connected,
        picard_z_homotopy,
        picard_rank_one,
        projectively_normal,
        covered_by_r_planes,
        uniruled_in_lines,
        separably_uniruled,
        rationally_chain_connected,
        chain_degree,
        b1_rank_one,
        a1_rank_one,
        min_equation_degree: p.d().min_degree(),
    }
}

/// Everything closed-form about one problem, bundled for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub delta: BigInt,
    pub delta_minus: BigInt,
    pub classification: Classification,
    pub canonical_twist: BigInt,
    pub fano_index: BigInt,
    pub is_fano: bool,
    pub predicates: PredicateSuite,
}

impl InvariantReport {
    pub fn for_problem(p: &FanoProblem) -> Self {
        InvariantReport {
            delta: p.delta(),
            delta_minus: p.delta_minus(),
            classification: classify(p),
            canonical_twist: canonical_twist(p),
            fano_index: fano_index(p),
            is_fano: is_fano(p),
            predicates: predicate_suite(p),
        }
    }
}
