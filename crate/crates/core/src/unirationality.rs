//! Recursive unirationality bounds: the base pairs `(n(d), r(d))` for
//! complete intersections of multidegree `d`, and the explicit bound above
//! which a generic scheme of r-planes is unirational, with support for
//! user-supplied improved base values.
//!
//! Multidegrees inside the recursion are held as multisets
//! `(degree, multiplicity)` with arbitrary-precision multiplicities: the
//! expanded sequence `D` repeats each `d_i` a binomial number of times, which
//! can be far too long to materialize.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinatorics::{binom, binom_big, MultiDegree};
use crate::error::{Error, Result};

/// Degrees with multiplicities, sorted by degree, every multiplicity >= 1.
type DegreeMultiset = Vec<(u32, BigInt)>;

fn multiset_of(degrees: &[u32]) -> DegreeMultiset {
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    let mut out: DegreeMultiset = Vec::new();
    for d in sorted {
        match out.last_mut() {
            Some((v, count)) if *v == d => *count += 1,
            _ => out.push((d, BigInt::one())),
        }
    }
    out
}

/// Total number of entries, when small enough to matter.
fn multiset_len(ms: &DegreeMultiset) -> Option<usize> {
    let total: BigInt = ms.iter().map(|(_, c)| c).sum();
    total.to_usize()
}

fn expand(ms: &DegreeMultiset) -> Option<Vec<u32>> {
    let len = multiset_len(ms)?;
    if len > 1 << 16 {
        return None;
    }
    let mut out = Vec::with_capacity(len);
    for (v, count) in ms {
        for _ in 0..count.to_usize()? {
            out.push(*v);
        }
    }
    Some(out)
}

/// Improved base values `r(d)`, keyed by the sorted multidegree.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Overrides {
    entries: HashMap<Vec<u32>, BigInt>,
}

impl Overrides {
    pub fn new() -> Self {
        Overrides::default()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Register an improved value of `r(d)`. A later insert for the same
    /// multidegree wins.
    pub fn insert(&mut self, degrees: &[u32], r: BigInt) {
        let mut key = degrees.to_vec();
        key.sort_unstable();
        self.entries.insert(key, r);
    }

    fn lookup(&self, ms: &DegreeMultiset) -> Option<&BigInt> {
        if self.entries.is_empty() {
            return None;
        }
        let expanded = expand(ms)?;
        self.entries.get(&expanded)
    }

    /// Parse the overrides file format: one entry per line,
    /// `d=<comma separated degrees> r=<integer>`, `#` starts a comment,
    /// whitespace is ignored everywhere.
    pub fn parse(text: &str) -> Result<Self> {
        let mut overrides = Overrides::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let code = raw.split('#').next().unwrap_or("");
            let compact: String = code.chars().filter(|c| !c.is_whitespace()).collect();
            if compact.is_empty() {
                continue;
            }
            let rest = compact.strip_prefix("d=").ok_or_else(|| Error::OverridesSyntax {
                line,
                message: format!("expected `d=<degrees> r=<integer>`, got `{}`", code.trim()),
            })?;
            let (degrees_part, r_part) =
                rest.split_once("r=").ok_or_else(|| Error::OverridesSyntax {
                    line,
                    message: "missing `r=<integer>`".to_string(),
                })?;
            let degrees_part = degrees_part.trim_end_matches(',');
            let mut degrees = Vec::new();
            for token in degrees_part.split(',') {
                let d: u32 = token.parse().map_err(|_| Error::OverridesSyntax {
                    line,
                    message: format!("bad degree token `{token}`"),
                })?;
                if d == 0 {
                    return Err(Error::OverridesSyntax {
                        line,
                        message: "degrees must be at least 1".to_string(),
                    });
                }
                degrees.push(d);
            }
            if degrees.is_empty() {
                return Err(Error::OverridesSyntax {
                    line,
                    message: "empty degree list".to_string(),
                });
            }
            let r: BigInt = r_part.parse().map_err(|_| Error::OverridesSyntax {
                line,
                message: format!("bad r value `{r_part}`"),
            })?;
            if r.is_negative() {
                return Err(Error::OverridesSyntax {
                    line,
                    message: "r must be nonnegative".to_string(),
                });
            }
            overrides.insert(&degrees, r);
        }
        Ok(overrides)
    }
}

/// The recursive pair for one multidegree: a complete intersection of
/// multidegree `d` in `P^N` with `N >= n_of_d` through a suitable
/// `r_of_d`-plane is unirational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsBound {
    pub input: MultiDegree,
    pub r_of_d: BigInt,
    pub n_of_d: BigInt,
}

struct PsSolver<'a> {
    overrides: &'a Overrides,
    memo: HashMap<DegreeMultiset, (BigInt, BigInt)>,
    used: Vec<(Vec<u32>, BigInt)>,
}

impl<'a> PsSolver<'a> {
    fn new(overrides: &'a Overrides) -> Self {
        PsSolver {
            overrides,
            memo: HashMap::new(),
            used: Vec::new(),
        }
    }

    /// Returns `(r(d), n(d))` for the multiset `d`.
    ///
    /// Base case `n(1) = r(1) = 0`; degree-1 entries are stripped, adding 1
    /// to `n` each; otherwise `r(d) = n(d - 1)` and
    /// `n(d) = r(d) + sum_i C(d_i + r(d) - 1, r(d))`. Overrides replace the
    /// recursive `r(d)` in the all-degrees-at-least-2 branch and `n(d)` is
    /// recomputed from the substituted value.
    fn eval(&mut self, ms: &DegreeMultiset) -> (BigInt, BigInt) {
        assert!(!ms.is_empty(), "multidegree is never empty");
        if let Some(v) = self.memo.get(ms) {
            return v.clone();
        }

        let result = if ms[0].0 == 1 {
            let ones = ms[0].1.clone();
            if ms.len() == 1 {
                // d = (1, ..., 1): strip down to the base case d = (1).
                (BigInt::zero(), ones - 1)
            } else {
                let rest: DegreeMultiset = ms[1..].to_vec();
                let (r, n) = self.eval(&rest);
                (r, n + ones)
            }
        } else {
            let r = if let Some(better) = self.overrides.lookup(ms) {
                let expanded = expand(ms).expect("lookup only matches expandable multisets");
                self.used.push((expanded, better.clone()));
                better.clone()
            } else {
                let lowered: DegreeMultiset =
                    ms.iter().map(|(v, c)| (v - 1, c.clone())).collect();
                self.eval(&lowered).1
            };
            let mut n = r.clone();
            for (v, count) in ms {
                // C(v + r - 1, r) = C(v + r - 1, v - 1): small lower index.
                let upper = &r + (i64::from(*v) - 1);
                n += count * binom_big(&upper, u64::from(*v) - 1);
            }
            (r, n)
        };

        self.memo.insert(ms.clone(), result.clone());
        result
    }
}

/// The pair `(r(d), n(d))`, memoized on sorted multidegrees. The recursion is
/// order-insensitive, so permuting `d` never changes the result.
pub fn ps_pair(d: &MultiDegree, overrides: &Overrides) -> PsBound {
    let ms = multiset_of(d.degrees());
    let mut solver = PsSolver::new(overrides);
    let (r_of_d, n_of_d) = solver.eval(&ms);
    PsBound {
        input: d.clone(),
        r_of_d,
        n_of_d,
    }
}

/// The explicit unirationality bound for schemes of r-planes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoBound {
    pub input: MultiDegree,
    pub r: u32,
    /// The auxiliary multidegree `D`: each `d_i` repeated `C(d_i + r, r)`
    /// times, stored as `(degree, multiplicity)`.
    pub repeated: Vec<(u32, BigInt)>,
    pub r_of_big_d: BigInt,
    pub r1: BigInt,
    /// For `n >= bound`, the scheme of r-planes on a generic complete
    /// intersection of multidegree `d` in `P^n` is unirational.
    pub bound: BigInt,
    /// Any (multidegree, r) substitutions consulted during the recursion.
    pub overrides_used: Vec<(Vec<u32>, BigInt)>,
}

/// Compute the bound: build `D`, take `r(D)` from the recursion (or an
/// override), set `r1 = (r(D) + 1)(r + 1) - 1` and
/// `bound = r1 + sum_i C(d_i + r1 - 1, r1)`.
///
/// Degree-1 entries are rejected: a linear equation just cuts `P^n` down to
/// `P^(n-1)`, so the caller should drop the entry and lower n instead.
pub fn fano_unirationality_bound(
    d: &MultiDegree,
    r: u32,
    overrides: &Overrides,
) -> Result<FanoBound> {
    if d.degrees().iter().any(|&di| di < 2) {
        return Err(Error::DegreeOneEntry);
    }

    let mut repeated: DegreeMultiset = Vec::new();
    for (v, count) in multiset_of(d.degrees()) {
        let reps = count * binom(i64::from(v) + i64::from(r), i64::from(r));
        match repeated.last_mut() {
            Some((w, c)) if *w == v => *c += reps,
            _ => repeated.push((v, reps)),
        }
    }

    let mut solver = PsSolver::new(overrides);
    let (r_of_big_d, _) = solver.eval(&repeated);

    let r1: BigInt = (&r_of_big_d + 1) * (i64::from(r) + 1) - 1;
    let mut bound = r1.clone();
    for &di in d.degrees() {
        let upper = &r1 + (i64::from(di) - 1);
        bound += binom_big(&upper, u64::from(di) - 1);
    }

    Ok(FanoBound {
        input: d.clone(),
        r,
        repeated,
        r_of_big_d,
        r1,
        bound,
        overrides_used: solver.used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(degrees: &[u32]) -> MultiDegree {
        MultiDegree::new(degrees.to_vec()).unwrap()
    }

    fn pair(degrees: &[u32]) -> (BigInt, BigInt) {
        let b = ps_pair(&md(degrees), &Overrides::new());
        (b.r_of_d, b.n_of_d)
    }

    #[test]
    fn base_and_stripping_cases() {
        assert_eq!(pair(&[1]), (BigInt::zero(), BigInt::zero()));
        assert_eq!(pair(&[1, 1, 1, 1]), (BigInt::zero(), BigInt::from(3)));
        assert_eq!(pair(&[1, 2]), (pair(&[2]).0, pair(&[2]).1 + 1));
    }

    #[test]
    fn quadruple_quadrics_and_cubics() {
        assert_eq!(pair(&[2, 2, 2, 2]), (BigInt::from(3), BigInt::from(19)));
        assert_eq!(pair(&[3, 3, 3, 3]), (BigInt::from(19), BigInt::from(859)));
    }

    #[test]
    fn closed_forms_hold() {
        for s in 1..=5u32 {
            let twos = vec![2u32; s as usize];
            assert_eq!(pair(&twos).0, BigInt::from(s - 1), "2^s with s={s}");

            let threes = vec![3u32; s as usize];
            let s = i64::from(s);
            assert_eq!(pair(&threes).0, BigInt::from(s * s + s - 1), "3^s");

            let fours = vec![4u32; s as usize];
            let expected = s * s + s - 1 + s * s * (s + 1) * (s * s + s + 1) / 2;
            assert_eq!(pair(&fours).0, BigInt::from(expected), "4^s");
        }
    }

    #[test]
    fn ps_pair_is_order_insensitive() {
        assert_eq!(pair(&[2, 3, 4]), pair(&[4, 2, 3]));
        assert_eq!(pair(&[3, 2, 3]), pair(&[3, 3, 2]));
    }

    #[test]
    fn appending_an_entry_never_decreases_n() {
        for base in [vec![2u32], vec![3], vec![2, 2], vec![3, 4]] {
            let n0 = pair(&base).1;
            for extra in 1..=4u32 {
                let mut bigger = base.clone();
                bigger.push(extra);
                assert!(pair(&bigger).1 >= n0, "base={base:?} extra={extra}");
            }
        }
    }

    #[test]
    fn cubic_lines_bound() {
        let b = fano_unirationality_bound(&md(&[3]), 1, &Overrides::new()).unwrap();
        assert_eq!(b.repeated, vec![(3, BigInt::from(4))]);
        assert_eq!(b.r_of_big_d, BigInt::from(19));
        assert_eq!(b.r1, BigInt::from(39));
        assert_eq!(b.bound, BigInt::from(859));
        assert!(b.overrides_used.is_empty());
    }

    #[test]
    fn cubic_lines_bound_with_override() {
        let mut overrides = Overrides::new();
        overrides.insert(&[3, 3, 3, 3], BigInt::from(13));
        let b = fano_unirationality_bound(&md(&[3]), 1, &overrides).unwrap();
        assert_eq!(b.r_of_big_d, BigInt::from(13));
        assert_eq!(b.r1, BigInt::from(27));
        assert_eq!(b.bound, BigInt::from(433));
        assert_eq!(
            b.overrides_used,
            vec![(vec![3, 3, 3, 3], BigInt::from(13))]
        );
    }

    #[test]
    fn quadric_bound_closed_form() {
        // n((2,...,2), r) = s(s+1) C(r+2, 2) (r+1) - 1.
        for s in 1..=4i64 {
            for r in 0..=4i64 {
                let d = md(&vec![2u32; s as usize]);
                let b = fano_unirationality_bound(&d, r as u32, &Overrides::new()).unwrap();
                let expected = s * (s + 1) * ((r + 2) * (r + 1) / 2) * (r + 1) - 1;
                assert_eq!(b.bound, BigInt::from(expected), "s={s} r={r}");
            }
        }
    }

    #[test]
    fn degree_one_entries_rejected() {
        assert!(matches!(
            fano_unirationality_bound(&md(&[1, 3]), 1, &Overrides::new()),
            Err(Error::DegreeOneEntry)
        ));
    }

    #[test]
    fn overrides_parse_grammar() {
        let text = "\
# improved base values
d = 3, 3, 3, 3   r = 13
d=2,2 r=1   # trailing comment
";
        let o = Overrides::parse(text).unwrap();
        let ms = multiset_of(&[3, 3, 3, 3]);
        assert_eq!(o.lookup(&ms), Some(&BigInt::from(13)));
        let ms = multiset_of(&[2, 2]);
        assert_eq!(o.lookup(&ms), Some(&BigInt::one()));
        assert_eq!(o.lookup(&multiset_of(&[3])), None);
    }

    #[test]
    fn overrides_parse_errors_name_line_and_token() {
        let err = Overrides::parse("d=3,x r=2").unwrap_err();
        assert!(matches!(err, Error::OverridesSyntax { line: 1, .. }));
        assert!(err.to_string().contains('x'));

        let err = Overrides::parse("\n\nr=13").unwrap_err();
        assert!(matches!(err, Error::OverridesSyntax { line: 3, .. }));

        assert!(Overrides::parse("d=3 r=-2").is_err());
        assert!(Overrides::parse("d=3").is_err());
        assert!(Overrides::parse("d=0 r=1").is_err());
    }

    #[test]
    fn memoized_values_are_consistent_across_calls() {
        let d = md(&[4, 4, 4]);
        let first = ps_pair(&d, &Overrides::new());
        let second = ps_pair(&d, &Overrides::new());
        assert_eq!(first, second);
        assert!(first.n_of_d >= first.r_of_d);
        assert!(first.r_of_d >= BigInt::zero());
    }
}
