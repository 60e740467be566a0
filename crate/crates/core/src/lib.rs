//! Exact invariants of the schemes of r-planes contained in complete
//! intersections of multidegree `d` in `P^n`: expected dimension and the
//! emptiness/smoothness/connectedness classification, Plucker degrees,
//! Schubert-class decompositions, Hodge numbers in the Lefschetz range,
//! normal-bundle splitting types, and explicit unirationality bounds.
//!
//! Everything is computed by exact integer and polynomial arithmetic over
//! arbitrary-precision integers; there is no floating point anywhere.

pub mod combinatorics;
pub mod error;
pub mod invariants;
pub mod poly;
pub mod schubert;
pub mod unirationality;

pub use combinatorics::{MultiDegree, Partition};
pub use error::{Error, Result};
pub use invariants::{
    classify, Classification, FanoProblem, HodgeNumber, InvariantReport, Predicate, PredicateSuite,
};
pub use poly::{build_q, ExponentVector, MultiPoly};
pub use schubert::{
    fano_class, fano_class_abstract, fano_degree, fano_degree_via_pieri, straighten, FanoClass,
    StraightenResult,
};
pub use unirationality::{fano_unirationality_bound, ps_pair, FanoBound, Overrides, PsBound};
