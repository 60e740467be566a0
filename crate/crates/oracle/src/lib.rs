//! Slow, independent reference implementations used only by test suites:
//! an uncapped dense expansion of the degree polynomial, hook-length tableau
//! counts, and permutation-enumeration straightening. Each carries a hard
//! input guard so it can never be mistaken for a production path.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use fano_core::combinatorics::binom_sum;
use fano_core::{MultiDegree, MultiPoly, Partition, StraightenResult};

/// Fully expand `Q_{r,d} * e^delta` with no caps, by naive term-by-term
/// multiplication over dense coefficient vectors.
///
/// Guarded to `r <= 1` and total degree `sum_i C(d_i + r, r) + delta <= 24`;
/// panics outside that range.
pub fn dense_expand(r: u32, d: &MultiDegree, delta: u64) -> MultiPoly {
    assert!(r <= 1, "dense oracle only handles r <= 1, got r = {r}");
    let rank = binom_sum(d, i64::from(r), i64::from(r));
    assert!(
        rank.clone() + delta <= BigInt::from(24),
        "dense oracle guard exceeded: rank {rank} + delta {delta} > 24"
    );

    if r == 0 {
        // Q_{0,d_i} is the single linear factor d_i * x_0, and e = x_0.
        let mut coeff = BigInt::one();
        for &di in d.degrees() {
            coeff *= di;
        }
        let degree = d.count() as u64 + delta;
        return MultiPoly::from_terms(1, vec![(vec![degree as u32], coeff)]);
    }

    // Two variables: a homogeneous polynomial of degree k is the dense vector
    // of coefficients of x0^i x1^(k-i).
    let mut coeffs = vec![BigInt::one()];
    for &di in d.degrees() {
        for a in 0..=di {
            coeffs = mul_binary_linear(&coeffs, i64::from(a), i64::from(di - a));
        }
    }
    for _ in 0..delta {
        coeffs = mul_binary_linear(&coeffs, 1, 1);
    }

    let top = (coeffs.len() - 1) as u32;
    MultiPoly::from_terms(
        2,
        coeffs
            .into_iter()
            .enumerate()
            .map(|(i, c)| (vec![i as u32, top - i as u32], c)),
    )
}

fn mul_binary_linear(coeffs: &[BigInt], a: i64, b: i64) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); coeffs.len() + 1];
    for (i, c) in coeffs.iter().enumerate() {
        out[i + 1] += c * a;
        out[i] += c * b;
    }
    out
}

/// Number of standard Young tableaux of the `rows x cols` rectangle, by the
/// hook-length formula. Guarded to `rows, cols <= 7`.
pub fn hook_syt_count(rows: u32, cols: u32) -> BigInt {
    assert!(
        rows <= 7 && cols <= 7,
        "hook oracle guard exceeded: {rows} x {cols}"
    );
    let boxes = u64::from(rows) * u64::from(cols);
    let mut numerator = BigInt::one();
    for k in 1..=boxes {
        numerator *= k;
    }
    let mut hooks = BigInt::one();
    for i in 0..rows {
        for j in 0..cols {
            hooks *= u64::from((rows - i) + (cols - j) - 1);
        }
    }
    numerator / hooks
}

/// Straightening by explicit enumeration of all `(r+1)!` permutations rather
/// than sorting: find the permutation arranging `alpha + kappa` strictly
/// decreasingly, if any, and return its sign and the shifted-back partition.
pub fn straighten_bruteforce(alpha: &[u32]) -> StraightenResult {
    let m = alpha.len();
    assert!(m >= 1, "need at least one entry");
    let r = (m - 1) as i64;
    let shifted: Vec<i64> = alpha
        .iter()
        .enumerate()
        .map(|(i, &a)| i64::from(a) + r - i as i64)
        .collect();

    let mut order: Vec<usize> = (0..m).collect();
    let mut all = Vec::new();
    permutations_rec(&mut order, 0, &mut all);

    for perm in all {
        let arranged: Vec<i64> = perm.iter().map(|&i| shifted[i]).collect();
        if arranged.windows(2).all(|w| w[0] > w[1]) {
            let mut inversions = 0usize;
            for i in 0..m {
                for j in i + 1..m {
                    if perm[i] > perm[j] {
                        inversions += 1;
                    }
                }
            }
            let mut parts = Vec::with_capacity(m);
            for (i, &v) in arranged.iter().enumerate() {
                let part = v - (r - i as i64);
                if part < 0 {
                    return StraightenResult::Zero;
                }
                parts.push(part as u32);
            }
            return StraightenResult::Term {
                sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
                lambda: Partition::new(parts).expect("strictly decreasing shift"),
            };
        }
    }
    StraightenResult::Zero
}

fn permutations_rec(order: &mut Vec<usize>, from: usize, out: &mut Vec<Vec<usize>>) {
    if from == order.len() {
        out.push(order.clone());
        return;
    }
    for i in from..order.len() {
        order.swap(from, i);
        permutations_rec(order, from + 1, out);
        order.swap(from, i);
    }
}
