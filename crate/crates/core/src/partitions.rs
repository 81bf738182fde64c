//! Integer partitions and symmetric-group character values.
//!
//! Partitions label both the conjugacy classes (cycle types) and the
//! irreducible characters of the symmetric group. Character values are
//! integers, computed by the border-strip recursion on beta sets with
//! memoization; dimensions are cross-checkable against the hook-length
//! product.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&p| p == 0) {
            return Err(Error::Parameter(format!(
                "not weakly decreasing positive parts: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn first_part(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let mut cols = Vec::new();
        let mut row = 0usize;
        loop {
            let count = self.0.iter().filter(|&&p| p as usize > row).count() as u32;
            if count == 0 {
                break;
            }
            cols.push(count);
            row += 1;
        }
        Partition(cols)
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Product of n!/hooks: the dimension of the corresponding irreducible.
    pub fn dimension(&self) -> u64 {
        let n = self.weight() as u64;
        let hooks = self.hook_lengths();
        let mut dim: u128 = 1;
        let mut numerators: Vec<u128> = (1..=n as u128).collect();
        let mut denominators: Vec<u128> = hooks.into_iter().map(|h| h as u128).collect();
        // cancel factor by factor to stay in range
        for d in denominators.iter_mut() {
            for v in numerators.iter_mut() {
                if *d == 1 {
                    break;
                }
                let g = gcd_u128(*v, *d);
                *v /= g;
                *d /= g;
            }
        }
        for v in numerators {
            dim *= v;
        }
        for d in denominators {
            debug_assert_eq!(d, 1, "hook product must divide n!");
            dim /= d;
        }
        dim as u64
    }

    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut hooks = Vec::new();
        for (i, &row_len) in self.0.iter().enumerate() {
            for j in 0..row_len as usize {
                let arm = row_len as usize - j - 1;
                let leg = conj.0[j] as usize - i - 1;
                hooks.push((arm + leg + 1) as u32);
            }
        }
        hooks
    }

    /// All partitions reachable by adding one box and then removing one box
    /// (the support of the tensor product with the natural character).
    pub fn add_then_remove_box(&self) -> Vec<Partition> {
        let mut out = BTreeSet::new();
        for grown in self.with_box_added() {
            for shrunk in grown.with_box_removed() {
                out.insert(shrunk);
            }
        }
        out.into_iter().collect()
    }

    fn with_box_added(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let rows = self.0.len();
        for i in 0..=rows {
            // adding to row i is legal when the row above is strictly longer
            // (or i == 0); i == rows appends a new row of length 1
            let legal = i == 0 || i == rows || self.0[i - 1] > self.0[i];
            if !legal {
                continue;
            }
            let mut parts = self.0.clone();
            if i == rows {
                parts.push(1);
            } else {
                parts[i] += 1;
            }
            out.push(Partition(parts));
        }
        out
    }

    fn with_box_removed(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let rows = self.0.len();
        for i in 0..rows {
            let legal = i + 1 == rows || self.0[i] > self.0[i + 1];
            if !legal {
                continue;
            }
            let mut parts = self.0.clone();
            parts[i] -= 1;
            if parts[i] == 0 {
                parts.remove(i);
            }
            out.push(Partition(parts));
        }
        out
    }
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_u128(b, a % b)
    }
}

/// All partitions of `n` in a deterministic order: ascending lexicographic
/// on the descending part vectors, so `[1^n]` comes first and `[n]` last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for p in 1..=remaining.min(max_part) {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    // parts are generated weakly decreasing because max_part shrinks
    rec(n, n, &mut current, &mut out);
    out.sort();
    out
}

/// n! / (prod_j j^{m_j} m_j!): the size of the conjugacy class with cycle
/// type `mu` in the symmetric group on `mu.weight()` points.
pub fn cycle_type_class_size(mu: &Partition) -> u64 {
    let n = mu.weight() as u128;
    let mut factorial: u128 = 1;
    for k in 2..=n {
        factorial *= k;
    }
    let mut z: u128 = 1;
    let mut mult: HashMap<u32, u32> = HashMap::new();
    for &p in mu.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    for (&part, &m) in &mult {
        for _ in 0..m {
            z *= part as u128;
        }
        for k in 2..=m as u128 {
            z *= k;
        }
    }
    (factorial / z) as u64
}

/// Sign of a permutation of the given cycle type.
pub fn cycle_type_sign(mu: &Partition) -> i64 {
    let transpositions: u32 = mu.parts().iter().map(|&p| p - 1).sum();
    if transpositions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Memoized border-strip evaluation of symmetric-group character values.
#[derive(Default)]
pub struct CharacterValues {
    memo: HashMap<(Vec<u32>, Vec<u32>), i64>,
}

impl CharacterValues {
    pub fn new() -> Self {
        Self::default()
    }

    /// Value of the character labelled `lambda` on the class with cycle
    /// type `mu`; both must have the same weight.
    pub fn value(&mut self, lambda: &Partition, mu: &Partition) -> i64 {
        assert_eq!(lambda.weight(), mu.weight(), "weight mismatch");
        self.eval(lambda.parts().to_vec(), mu.parts().to_vec())
    }

    fn eval(&mut self, lambda: Vec<u32>, mu: Vec<u32>) -> i64 {
        if lambda.is_empty() {
            return 1;
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let strip = mu[0] as i64;
        let rest: Vec<u32> = mu[1..].to_vec();
        // beta set: distinct descending values lambda_i + (len - 1 - i)
        let len = lambda.len();
        let beta: Vec<i64> = lambda
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 + (len - 1 - i) as i64)
            .collect();
        let mut total = 0i64;
        for (idx, &b) in beta.iter().enumerate() {
            let target = b - strip;
            if target < 0 || beta.contains(&target) {
                continue;
            }
            let height = beta.iter().filter(|&&c| c > target && c < b).count();
            let sign = if height % 2 == 0 { 1 } else { -1 };
            let mut new_beta = beta.clone();
            new_beta[idx] = target;
            new_beta.sort_unstable_by(|a, b| b.cmp(a));
            let new_lambda: Vec<u32> = new_beta
                .iter()
                .enumerate()
                .map(|(i, &b)| (b - (len - 1 - i) as i64) as u32)
                .filter(|&p| p > 0)
                .collect();
            total += sign * self.eval(new_lambda, rest.clone());
        }
        self.memo.insert(key, total);
        total
    }
}
