//! Exact integer combinatorics: binomial coefficients with the degenerate
//! conventions the relative invariants need, multi-index enumeration,
//! partition counts in a bounded rectangle, signed permutations, and the
//! Pieri chain count used as an independent degree oracle.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A multidegree `d = (d_1, ..., d_s)`: the degrees of the equations cutting
/// out a complete intersection. Entries are at least 1 and are kept in the
/// order given; two multidegrees compare equal up to reordering.
#[derive(Debug, Clone, Eq)]
pub struct MultiDegree {
    degrees: Vec<u32>,
}

impl MultiDegree {
    pub fn new(degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptyMultiDegree);
        }
        if degrees.contains(&0) {
            return Err(Error::ZeroDegreeEntry);
        }
        Ok(MultiDegree { degrees })
    }

    /// Convenience constructor for a single hypersurface degree.
    pub fn single(d: u32) -> Result<Self> {
        Self::new(vec![d])
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Number of equations `s`.
    pub fn count(&self) -> usize {
        self.degrees.len()
    }

    /// Entries in increasing order; the canonical form used as a lookup key.
    pub fn sorted(&self) -> Vec<u32> {
        let mut v = self.degrees.clone();
        v.sort_unstable();
        v
    }

    /// The smallest entry `d_-`, the minimal degree of an equation of the scheme.
    pub fn min_degree(&self) -> u32 {
        *self.degrees.iter().min().expect("nonempty")
    }

    /// True exactly for the multidegree `(2)`: a single quadric, which the
    /// classification treats specially.
    pub fn is_single_quadric(&self) -> bool {
        self.degrees == [2]
    }
}

impl PartialEq for MultiDegree {
    fn eq(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// A weakly decreasing sequence of nonnegative integers of fixed length.
/// Trailing zeros are kept: partitions indexing Schubert classes of
/// `G(r, P^n)` always have `r + 1` parts here.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// The staircase `(r, r-1, ..., 1, 0)` with `r + 1` parts.
    pub fn staircase(r: u32) -> Self {
        Partition {
            parts: (0..=r).rev().collect(),
        }
    }

    /// The full `rows x cols` rectangle.
    pub fn rectangle(rows: usize, cols: u32) -> Self {
        Partition {
            parts: vec![cols; rows],
        }
    }

    /// The zero partition with the given number of parts.
    pub fn zeros(len: usize) -> Self {
        Partition {
            parts: vec![0; len],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The weight `|lambda|`, i.e. the number of boxes.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Whether the diagram fits in a `rows x cols` rectangle.
    pub fn fits_in_rectangle(&self, rows: usize, cols: u32) -> bool {
        self.parts.len() <= rows && self.parts.first().is_none_or(|&p| p <= cols)
    }

    /// Parts with trailing zeros removed, for rendering.
    pub fn trimmed(&self) -> &[u32] {
        let end = self
            .parts
            .iter()
            .rposition(|&p| p != 0)
            .map_or(0, |i| i + 1);
        &self.parts[..end]
    }
}

/// Binomial coefficient `C(m, k)` with the conventions needed by the
/// degenerate reference-plane case `r0 = -1`:
/// `C(m, k) = 0` for `k < 0` or `k > m >= 0`, and `C(m, 0) = 1` for every `m`.
///
/// Panics for `m < 0` with `k >= 1`, which is left undefined here.
pub fn binom(m: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if k == 0 {
        return BigInt::one();
    }
    assert!(m >= 0, "C({m}, {k}) with m < 0 and k >= 1 is not defined");
    if k > m {
        return BigInt::zero();
    }
    let k = k.min(m - k);
    let mut acc = BigInt::one();
    for j in 1..=k {
        acc = acc * BigInt::from(m - k + j) / BigInt::from(j);
    }
    acc
}

/// `C(m, k)` for an arbitrary-precision `m >= 0` and a small `k`, via the
/// falling-factorial product. Agrees with [`binom`] on the common range.
pub fn binom_big(m: &BigInt, k: u64) -> BigInt {
    assert!(
        !m.is_negative(),
        "C({m}, {k}) with m < 0 and k >= 1 is not defined"
    );
    let mut acc = BigInt::one();
    let k_big = BigInt::from(k);
    for j in 1..=k {
        // Exact at every step: any j consecutive integers contain a multiple of j.
        acc = acc * (m - &k_big + j) / BigInt::from(j);
        if acc.is_zero() {
            return acc;
        }
    }
    acc
}

/// `sum_i C(d_i + shift, lower)`, the binomial of a multidegree taken
/// entrywise. With `(shift, lower) = (r, r)` this is the codimension of the
/// scheme of r-planes in the Grassmannian.
pub fn binom_sum(d: &MultiDegree, shift: i64, lower: i64) -> BigInt {
    d.degrees()
        .iter()
        .map(|&di| binom(i64::from(di) + shift, lower))
        .sum()
}

/// All `(a_0, ..., a_r)` with nonnegative entries summing to `deg`, in
/// lexicographic order. There are `C(deg + r, r)` of them.
pub fn multi_indices(r: u32, deg: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(r as usize + 1);
    fill_indices(r, deg, &mut prefix, &mut out);
    out
}

fn fill_indices(r: u32, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if r == 0 {
        prefix.push(deg);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for a in 0..=deg {
        prefix.push(a);
        fill_indices(r - 1, deg - a, prefix, out);
        prefix.pop();
    }
}

/// Number of partitions of `p` with at most `rows` parts, each at most `cols`:
/// the coefficient of `q^p` in the Gaussian binomial `[rows + cols, rows]_q`.
pub fn partitions_in_rectangle(p: u64, rows: u64, cols: u64) -> BigInt {
    if p > rows.saturating_mul(cols) {
        return BigInt::zero();
    }
    let mut memo = HashMap::new();
    count_in_rectangle(p, rows, cols, &mut memo)
}

fn count_in_rectangle(
    p: u64,
    rows: u64,
    cols: u64,
    memo: &mut HashMap<(u64, u64, u64), BigInt>,
) -> BigInt {
    if p == 0 {
        return BigInt::one();
    }
    if rows == 0 || cols == 0 || p > rows * cols {
        return BigInt::zero();
    }
    if let Some(v) = memo.get(&(p, rows, cols)) {
        return v.clone();
    }
    // Either no part equals cols, or remove one part of size cols.
    let mut total = count_in_rectangle(p, rows, cols - 1, memo);
    if p >= cols {
        total += count_in_rectangle(p - cols, rows - 1, cols, memo);
    }
    memo.insert((p, rows, cols), total.clone());
    total
}

/// Number of chains from `lambda` to the full `(r+1) x (n-r)` rectangle that
/// add one box at a time through valid partitions: the Pieri-rule value of
/// `integral of sigma_lambda . sigma_1^delta` over `G(r, P^n)`.
pub fn schubert_degree(lambda: &Partition, n: u32) -> Result<BigInt> {
    let rows = lambda.len();
    assert!(rows >= 1, "partition must have at least one part");
    let r = (rows - 1) as u32;
    if n <= r || !lambda.fits_in_rectangle(rows, n - r) {
        return Err(Error::PartitionOutsideRectangle {
            parts: lambda.parts().to_vec(),
            rows,
            cols: n.saturating_sub(r),
        });
    }
    let cols = n - r;
    let mut memo = HashMap::new();
    Ok(count_chains(lambda.parts().to_vec(), cols, &mut memo))
}

fn count_chains(parts: Vec<u32>, cols: u32, memo: &mut HashMap<Vec<u32>, BigInt>) -> BigInt {
    if parts.iter().all(|&p| p == cols) {
        return BigInt::one();
    }
    if let Some(v) = memo.get(&parts) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for i in 0..parts.len() {
        if parts[i] < cols && (i == 0 || parts[i - 1] > parts[i]) {
            let mut next = parts.clone();
            next[i] += 1;
            total += count_chains(next, cols, memo);
        }
    }
    memo.insert(parts, total.clone());
    total
}

/// Iterator over all permutations of `0..m` together with their signs,
/// produced by Heap's algorithm (one transposition per step).
pub fn signed_permutations(m: usize) -> SignedPermutations {
    SignedPermutations {
        items: (0..m).collect(),
        counters: vec![0; m],
        level: 0,
        sign: 1,
        started: false,
    }
}

pub struct SignedPermutations {
    items: Vec<usize>,
    counters: Vec<usize>,
    level: usize,
    sign: i8,
    started: bool,
}

impl Iterator for SignedPermutations {
    type Item = (Vec<usize>, i8);

    fn next(&mut self) -> Option<Self::Item> {
        if !self.started {
            self.started = true;
            return Some((self.items.clone(), self.sign));
        }
        while self.level < self.items.len() {
            if self.counters[self.level] < self.level {
                if self.level.is_multiple_of(2) {
                    self.items.swap(0, self.level);
                } else {
                    self.items.swap(self.counters[self.level], self.level);
                }
                self.sign = -self.sign;
                self.counters[self.level] += 1;
                self.level = 0;
                return Some((self.items.clone(), self.sign));
            }
            self.counters[self.level] = 0;
            self.level += 1;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(degrees: &[u32]) -> MultiDegree {
        MultiDegree::new(degrees.to_vec()).unwrap()
    }

    #[test]
    fn binom_small_values() {
        assert_eq!(binom(4, 1), BigInt::from(4));
        assert_eq!(binom(41, 39), BigInt::from(820));
        assert_eq!(binom(3, -1), BigInt::zero());
        assert_eq!(binom(3, 5), BigInt::zero());
        assert_eq!(binom(-2, 0), BigInt::one());
        assert_eq!(binom(0, 0), BigInt::one());
    }

    #[test]
    #[should_panic(expected = "not defined")]
    fn binom_negative_upper_rejected() {
        binom(-1, 2);
    }

    #[test]
    fn binom_big_matches_binom() {
        for m in 0..=40i64 {
            for k in 0..=12u64 {
                assert_eq!(binom_big(&BigInt::from(m), k), binom(m, k as i64));
            }
        }
    }

    #[test]
    fn binom_sum_values() {
        assert_eq!(binom_sum(&md(&[3]), 1, 1), BigInt::from(4));
        assert_eq!(binom_sum(&md(&[2, 2]), -1, 0), BigInt::from(2));
        assert_eq!(binom_sum(&md(&[3]), 1, 2), BigInt::from(6));
    }

    #[test]
    fn multidegree_order_insensitive_eq() {
        assert_eq!(md(&[2, 3]), md(&[3, 2]));
        assert_ne!(md(&[2, 3]), md(&[2, 2]));
        assert_eq!(md(&[3, 2]).to_string(), "(3,2)");
    }

    #[test]
    fn multidegree_rejects_bad_input() {
        assert_eq!(MultiDegree::new(vec![]), Err(Error::EmptyMultiDegree));
        assert_eq!(MultiDegree::new(vec![3, 0]), Err(Error::ZeroDegreeEntry));
    }

    #[test]
    fn multi_indices_examples() {
        assert_eq!(
            multi_indices(1, 3),
            vec![vec![0, 3], vec![1, 2], vec![2, 1], vec![3, 0]]
        );
        assert_eq!(
            multi_indices(2, 1),
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]
        );
        assert_eq!(multi_indices(2, 5).len(), 21);
    }

    #[test]
    fn multi_indices_count_matches_binomial() {
        for r in 0..=5u32 {
            for deg in 0..=9u32 {
                let expected = binom(i64::from(deg + r), i64::from(r));
                assert_eq!(BigInt::from(multi_indices(r, deg).len()), expected);
            }
        }
    }

    #[test]
    fn rectangle_partition_counts() {
        assert_eq!(partitions_in_rectangle(0, 3, 4), BigInt::one());
        assert_eq!(partitions_in_rectangle(0, 0, 0), BigInt::one());
        assert_eq!(partitions_in_rectangle(2, 2, 4), BigInt::from(2));
        assert_eq!(partitions_in_rectangle(3, 1, 2), BigInt::zero());
    }

    #[test]
    fn rectangle_counts_sum_to_total_betti_number() {
        for rows in 0..=6u64 {
            for cols in 0..=6u64 {
                let total: BigInt = (0..=rows * cols)
                    .map(|p| partitions_in_rectangle(p, rows, cols))
                    .sum();
                assert_eq!(
                    total,
                    binom((rows + cols) as i64, rows as i64),
                    "rows={rows} cols={cols}"
                );
            }
        }
    }

    #[test]
    fn schubert_degree_examples() {
        let full = Partition::rectangle(2, 3);
        assert_eq!(schubert_degree(&full, 4).unwrap(), BigInt::one());
        let zero = Partition::zeros(2);
        assert_eq!(schubert_degree(&zero, 3).unwrap(), BigInt::from(2));
        let p = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(schubert_degree(&p, 3).unwrap(), BigInt::one());
    }

    #[test]
    fn schubert_degree_rejects_overflowing_partition() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert!(matches!(
            schubert_degree(&p, 3),
            Err(Error::PartitionOutsideRectangle { .. })
        ));
    }

    #[test]
    fn staircase_and_trim() {
        assert_eq!(Partition::staircase(3).parts(), &[3, 2, 1, 0]);
        let p = Partition::new(vec![3, 1, 0]).unwrap();
        assert_eq!(p.trimmed(), &[3, 1]);
        assert_eq!(Partition::zeros(2).trimmed(), &[] as &[u32]);
    }

    #[test]
    fn partition_rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn signed_permutations_enumerate_all() {
        let perms: Vec<_> = signed_permutations(3).collect();
        assert_eq!(perms.len(), 6);
        let plus: Vec<_> = perms.iter().filter(|(_, s)| *s == 1).collect();
        assert_eq!(plus.len(), 3);
        // Every permutation appears exactly once, with the parity of its
        // inversion count.
        let mut seen = std::collections::HashSet::new();
        for (perm, sign) in &perms {
            assert!(seen.insert(perm.clone()));
            let mut inv = 0;
            for i in 0..perm.len() {
                for j in i + 1..perm.len() {
                    if perm[i] > perm[j] {
                        inv += 1;
                    }
                }
            }
            assert_eq!(*sign, if inv % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn signed_permutations_degenerate_sizes() {
        assert_eq!(signed_permutations(0).count(), 1);
        assert_eq!(signed_permutations(1).count(), 1);
        assert_eq!(signed_permutations(5).count(), 120);
    }
}
