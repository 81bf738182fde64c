//! Partition-data paths for the symmetric and alternating groups.
//!
//! For the natural action of the symmetric group, tensor-power supports
//! can be iterated directly on partition labels with the add-then-remove-a-
//! box branching rule, with no character table in sight. This scales past
//! the table cap and also powers the alternating-group computations, which
//! deliberately have no standalone table: restrictions of the rows labelled
//! `lambda` and its conjugate coincide, self-conjugate rows split in half,
//! and those two facts determine every probability needed here.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};

/// Precomputed partition data for one symmetric group degree.
pub struct SnPartitionPath {
    pub n: u32,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    dims: Vec<u64>,
    conj: Vec<usize>,
    /// supports[t-1] = indices appearing in the t-th tensor power of the
    /// natural character, computed by branching.
    supports: Vec<Vec<bool>>,
}

impl SnPartitionPath {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::Parameter(format!("partition path needs n >= 2, got {n}")));
        }
        let parts = partitions_of(n);
        let index: HashMap<Partition, usize> =
            parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let dims: Vec<u64> = parts.iter().map(|p| p.dimension()).collect();
        let conj: Vec<usize> = parts.iter().map(|p| index[&p.conjugate()]).collect();
        let mut path = SnPartitionPath { n, parts, index, dims, conj, supports: Vec::new() };
        path.extend_supports(1);
        Ok(path)
    }

    fn factorial(&self) -> BigInt {
        (1..=self.n as u64).product::<u64>().into()
    }

    /// Grow the branching iteration out to at least `t` powers. The natural
    /// character supports the trivial and hook rows at t = 1; each further
    /// power maps every member through the add-then-remove-a-box rule.
    fn extend_supports(&mut self, t: u64) {
        if self.supports.is_empty() {
            let mut first = vec![false; self.parts.len()];
            first[self.index[&Partition::new(vec![self.n]).unwrap()]] = true;
            if self.n >= 2 {
                let hook = Partition::new(vec![self.n - 1, 1]).unwrap();
                first[self.index[&hook]] = true;
            }
            self.supports.push(first);
        }
        while (self.supports.len() as u64) < t {
            let last = self.supports.last().unwrap();
            let mut next = vec![false; self.parts.len()];
            for (i, &present) in last.iter().enumerate() {
                if !present {
                    continue;
                }
                for mu in self.parts[i].add_then_remove_box() {
                    next[self.index[&mu]] = true;
                }
            }
            self.supports.push(next);
        }
    }

    pub fn support_at(&mut self, t: u64) -> &[bool] {
        assert!(t >= 1);
        self.extend_supports(t);
        &self.supports[(t - 1) as usize]
    }

    /// Labels in the t-th power support.
    pub fn support_labels(&mut self, t: u64) -> Vec<Partition> {
        self.extend_supports(t);
        let sup = &self.supports[(t - 1) as usize];
        self.parts
            .iter()
            .zip(sup)
            .filter(|(_, &b)| b)
            .map(|(p, _)| p.clone())
            .collect()
    }

    /// Membership is exactly "first part at least n - t"; asserted in tests
    /// and usable as a fast predicate.
    pub fn first_part_threshold(&self, t: u64) -> u32 {
        self.n.saturating_sub(t as u32)
    }

    /// Optimal t-query identification probability for a hidden permutation:
    /// the dimension-squared mass of the power support over n!.
    pub fn sn_success(&mut self, t: u64) -> BigRational {
        self.extend_supports(t);
        let sup = &self.supports[(t - 1) as usize];
        let num: BigInt = self
            .dims
            .iter()
            .zip(sup)
            .filter(|(_, &b)| b)
            .map(|(&d, _)| BigInt::from(d) * d)
            .sum();
        BigRational::new(num, self.factorial())
    }

    /// Dimension-squared mass itself (an integer), for counting identities.
    pub fn sn_dimension_sum(&mut self, t: u64) -> u64 {
        self.extend_supports(t);
        let sup = &self.supports[(t - 1) as usize];
        self.dims
            .iter()
            .zip(sup)
            .filter(|(_, &b)| b)
            .map(|(&d, _)| d * d)
            .sum()
    }

    /// Queries needed to identify a permutation with certainty: first t
    /// whose power support is everything.
    pub fn sn_gamma(&mut self) -> u64 {
        let mut t = 1;
        loop {
            self.extend_supports(t);
            if self.supports[(t - 1) as usize].iter().all(|&b| b) {
                return t;
            }
            t += 1;
        }
    }

    /// Optimal t-query identification probability for a hidden element of
    /// the alternating group, from symmetric-group partition data: a
    /// conjugate pair {lambda, lambda*} restricts to a single irreducible
    /// (counted once, with the full dimension squared), while a
    /// self-conjugate lambda splits into two halves (the same mass as the
    /// parent row contributes).
    pub fn an_success(&mut self, t: u64) -> BigRational {
        self.extend_supports(t);
        let sup = &self.supports[(t - 1) as usize];
        let mut num = BigInt::from(0);
        for i in 0..self.parts.len() {
            let j = self.conj[i];
            if j < i {
                continue; // count each pair once
            }
            let d2 = BigInt::from(self.dims[i]) * self.dims[i];
            if i == j {
                if sup[i] {
                    num += d2;
                }
            } else if sup[i] || sup[j] {
                num += 2 * d2;
            }
        }
        // accumulated mass is 2 * |A_n| * q_t, so divide by n!
        BigRational::new(num, self.factorial())
    }

    /// First t at which the alternating-group probability reaches one.
    pub fn an_gamma(&mut self) -> u64 {
        let mut t = 1;
        loop {
            if self.an_success(t).is_one() {
                return t;
            }
            t += 1;
        }
    }

    /// Optimal t-query probability of naming the sign of a hidden
    /// permutation: one when some power-support row comes with its
    /// conjugate (or is self-conjugate), and coin-flipping odds otherwise.
    /// Returns the witnessing label when the answer is one.
    pub fn sign_success(&mut self, t: u64) -> (BigRational, Option<Partition>) {
        self.extend_supports(t);
        let sup = &self.supports[(t - 1) as usize];
        for i in 0..self.parts.len() {
            if sup[i] && sup[self.conj[i]] {
                return (BigRational::one(), Some(self.parts[i].clone()));
            }
        }
        (BigRational::new(1.into(), 2.into()), None)
    }

    pub fn sign_gamma(&mut self) -> u64 {
        let mut t = 1;
        loop {
            if self.sign_success(t).0.is_one() {
                return t;
            }
            t += 1;
        }
    }
}
