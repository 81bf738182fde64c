//! Closed forms and combinatorial brute-force oracles for the worked
//! example families, used as regression targets against the generic engine.

pub mod gf;

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

/// Probability of naming an n-bit function after t evaluation queries:
/// the binomial mass of Hamming weight at most t over 2^n.
pub fn van_dam(n: u32, t: u64) -> Result<BigRational> {
    if t > n as u64 {
        return Err(Error::Parameter(format!("t = {t} exceeds n = {n}")));
    }
    let num: BigInt = (0..=t).map(|i| binomial(n as u64, i)).sum();
    Ok(BigRational::new(num, BigInt::from(2u64).pow(n)))
}

/// Probability of naming the sum of k hidden values from a group of order
/// m after t evaluation queries. The printed closed form reads as a max,
/// which exceeds one once the floor passes the group order; probabilities
/// cap at one, so this evaluates min(floor(k/(k-t)), m)/m, and the engine
/// cross-checks pin that reading.
pub fn group_summation(m: u64, k: u64, t: u64) -> Result<BigRational> {
    if m == 0 || k == 0 {
        return Err(Error::Parameter("need m >= 1 and k >= 1".into()));
    }
    if t >= k {
        return Ok(BigRational::one());
    }
    let floor = k / (k - t);
    Ok(BigRational::new(BigInt::from(floor.min(m)), BigInt::from(m)))
}

/// Single-query success probability for identifying a Heisenberg group
/// element through the column action: 1 - 1/p + 2/p^(n+1) - 1/p^(2n+1).
pub fn heisenberg_single_query(p: u64, n: u32) -> Result<BigRational> {
    if p < 2 {
        return Err(Error::Parameter("p must be at least 2".into()));
    }
    let one = BigRational::one();
    let term = |den: u64| BigRational::new(BigInt::one(), BigInt::from(den));
    Ok(one - term(p) + term(p.pow(n + 1)) * BigRational::from_integer(2.into())
        - term(p.pow(2 * n + 1)))
}

/// Queries to identify a hidden permutation exactly.
pub fn sn_gamma(n: u32) -> u64 {
    n as u64 - 1
}

/// Queries to identify a hidden even permutation exactly.
pub fn an_gamma(n: u32) -> u64 {
    let ceil_sqrt = (1u64..).find(|&r| r * r >= n as u64).unwrap();
    n as u64 - ceil_sqrt
}

/// Queries to name the sign of a hidden permutation exactly.
pub fn sign_complexity(n: u32) -> u64 {
    (n / 2) as u64
}

/// Counts of permutations of n by exact longest-increasing-subsequence
/// length (index L-1 holds the count for length L). Brute force over n!.
pub fn lis_length_counts(n: u32) -> Result<Vec<u64>> {
    if n == 0 || n > 9 {
        return Err(Error::CapExceeded(format!(
            "lis enumeration supports 1 <= n <= 9, got {n}"
        )));
    }
    let mut counts = vec![0u64; n as usize];
    let mut perm: Vec<u64> = (0..n as u64).collect();
    loop {
        counts[lis_length(&perm) - 1] += 1;
        if !crate::group::next_permutation(&mut perm) {
            break;
        }
    }
    Ok(counts)
}

/// Number of permutations of n whose longest increasing subsequence has
/// length at least `l`.
pub fn lis_count(n: u32, l: u32) -> Result<u64> {
    if l == 0 {
        let fact: u64 = (1..=n as u64).product();
        return Ok(fact);
    }
    let counts = lis_length_counts(n)?;
    if l as usize > counts.len() {
        return Ok(0);
    }
    Ok(counts[l as usize - 1..].iter().sum())
}

/// Patience-style longest strictly increasing subsequence length.
fn lis_length(seq: &[u64]) -> usize {
    let mut tails: Vec<u64> = Vec::new();
    for &x in seq {
        match tails.binary_search(&x) {
            Ok(pos) | Err(pos) => {
                if pos == tails.len() {
                    tails.push(x);
                } else {
                    tails[pos] = x;
                }
            }
        }
    }
    tails.len()
}

/// The evaluation curve {(y, yx, yx^2, ..., yx^d)} in F_q^(d+1), including
/// the origin through y = 0.
fn interpolation_curve(q: u32, d: u32) -> Result<Vec<Vec<u32>>> {
    let f = gf::GaloisField::new(q)?;
    let mut points = HashSet::new();
    for x in 0..q {
        for y in 0..q {
            let mut pt = Vec::with_capacity(d as usize + 1);
            for e in 0..=d {
                pt.push(f.mul(y, f.pow(x, e)));
            }
            points.insert(pt);
        }
    }
    let mut out: Vec<Vec<u32>> = points.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Size of the t-fold sumset of the evaluation curve inside F_q^(d+1):
/// the number of phase rows reachable with t queries.
pub fn curve_sumset_size(q: u32, d: u32, t: u32) -> Result<u64> {
    if q > 9 || d > 3 || t > 4 {
        return Err(Error::CapExceeded(format!(
            "curve sumsets support q <= 9, d <= 3, t <= 4; got ({q},{d},{t})"
        )));
    }
    if t == 0 {
        return Ok(1);
    }
    let f = gf::GaloisField::new(q)?;
    let curve = interpolation_curve(q, d)?;
    let mut reach: HashSet<Vec<u32>> = curve.iter().cloned().collect();
    for _ in 1..t {
        let mut next = HashSet::with_capacity(reach.len());
        for a in &reach {
            for b in &curve {
                let sum: Vec<u32> = a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect();
                next.insert(sum);
            }
        }
        reach = next;
    }
    Ok(reach.len() as u64)
}

/// The sumset itself, as sorted digit tuples (used to build the matching
/// engine instance).
pub fn curve_sumset(q: u32, d: u32, t: u32) -> Result<Vec<Vec<u32>>> {
    if q > 9 || d > 3 || t > 4 {
        return Err(Error::CapExceeded(format!(
            "curve sumsets support q <= 9, d <= 3, t <= 4; got ({q},{d},{t})"
        )));
    }
    let f = gf::GaloisField::new(q)?;
    let curve = interpolation_curve(q, d)?;
    let mut reach: HashSet<Vec<u32>> = curve.iter().cloned().collect();
    for _ in 1..t.max(1) {
        let mut next = HashSet::with_capacity(reach.len());
        for a in &reach {
            for b in &curve {
                let sum: Vec<u32> = a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect();
                next.insert(sum);
            }
        }
        reach = next;
    }
    let mut out: Vec<Vec<u32>> = reach.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Identification probability for a hidden polynomial of degree at most d
/// over F_q after t evaluation queries: |Z_t| / q^(d+1).
pub fn poly_interp_success(q: u32, d: u32, t: u32) -> Result<BigRational> {
    let size = curve_sumset_size(q, d, t)?;
    Ok(BigRational::new(
        BigInt::from(size),
        BigInt::from(q as u64).pow(d + 1),
    ))
}
