//! Concrete finite groups.
//!
//! Every supported family encodes an element as a flat `Vec<u64>` whose
//! meaning depends on the family: permutations store their image arrays,
//! dihedral elements a (rotation, flip) pair, abelian products and function
//! groups their digit tuples, Heisenberg elements the triple
//! `[x_1..x_n, y_1..y_n, z]`, and explicit-table groups a single index.
//! Enumeration order is deterministic per family with the identity first.

mod action;
mod classes;
mod fusion;

pub use action::{natural_action, translation_action, GroupAction};
pub use classes::{conjugacy_classes, symmetric_class_data, symmetric_degree, ClassInfo, ClassLookup, ConjClassData};
pub use fusion::{build_fusion, ClassFusion};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::caps;
use crate::error::{Error, Result};

/// Group family plus parameters; serializable as
/// `{"family": "...", "params": {...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "snake_case")]
pub enum GroupSpec {
    Symmetric { n: u32 },
    Alternating { n: u32 },
    Dihedral { n: u32 },
    AbelianProduct { orders: Vec<u64> },
    Heisenberg { p: u64, n: u32 },
    FunctionGroup { k: u32, orders: Vec<u64> },
    /// Row-major multiplication table over element indices; index 0 must be
    /// the identity.
    ExplicitTable { table: Vec<Vec<u32>> },
}

/// A group element in the family-specific flat encoding.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub Vec<u64>);

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

/// A validated group: the spec plus its order.
#[derive(Clone, Debug)]
pub struct Group {
    spec: GroupSpec,
    order: u64,
}

impl Group {
    pub fn new(spec: GroupSpec) -> Result<Self> {
        let order = match &spec {
            GroupSpec::Symmetric { n } => {
                if *n < 2 {
                    return Err(Error::Parameter(format!("symmetric group needs n >= 2, got {n}")));
                }
                if *n > 20 {
                    return Err(Error::CapExceeded(format!("symmetric group degree {n}")));
                }
                factorial(*n)
            }
            GroupSpec::Alternating { n } => {
                if *n < 2 {
                    return Err(Error::Parameter(format!("alternating group needs n >= 2, got {n}")));
                }
                if *n > 20 {
                    return Err(Error::CapExceeded(format!("alternating group degree {n}")));
                }
                factorial(*n) / 2
            }
            GroupSpec::Dihedral { n } => {
                if *n < 3 {
                    return Err(Error::Parameter(format!("dihedral group needs n >= 3, got {n}")));
                }
                2 * *n as u64
            }
            GroupSpec::AbelianProduct { orders } => {
                if orders.iter().any(|&m| m == 0) {
                    return Err(Error::Parameter("cyclic order 0".into()));
                }
                orders.iter().product()
            }
            GroupSpec::Heisenberg { p, n } => {
                if !is_prime(*p) {
                    return Err(Error::Parameter(format!("Heisenberg parameter p = {p} is not prime")));
                }
                if *n < 1 {
                    return Err(Error::Parameter("Heisenberg parameter n must be >= 1".into()));
                }
                p.checked_pow(2 * n + 1)
                    .ok_or_else(|| Error::CapExceeded(format!("p^(2n+1) with p={p}, n={n}")))?
            }
            GroupSpec::FunctionGroup { k, orders } => {
                if *k < 1 {
                    return Err(Error::Parameter("function group needs k >= 1".into()));
                }
                if orders.iter().any(|&m| m == 0) {
                    return Err(Error::Parameter("cyclic order 0".into()));
                }
                let base: u64 = orders.iter().product();
                base.checked_pow(*k)
                    .ok_or_else(|| Error::CapExceeded(format!("|A|^k with |A|={base}, k={k}")))?
            }
            GroupSpec::ExplicitTable { table } => {
                validate_table_spec(table)?;
                table.len() as u64
            }
        };
        Ok(Group { spec, order })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_abelian_family(&self) -> bool {
        matches!(
            self.spec,
            GroupSpec::AbelianProduct { .. } | GroupSpec::FunctionGroup { .. }
        )
    }

    /// Cyclic orders when the group is an abelian product in disguise.
    pub fn abelian_orders(&self) -> Option<Vec<u64>> {
        match &self.spec {
            GroupSpec::AbelianProduct { orders } => Some(orders.clone()),
            GroupSpec::FunctionGroup { k, orders } => {
                let mut all = Vec::with_capacity(*k as usize * orders.len());
                for _ in 0..*k {
                    all.extend_from_slice(orders);
                }
                Some(all)
            }
            _ => None,
        }
    }

    pub fn identity(&self) -> Elem {
        match &self.spec {
            GroupSpec::Symmetric { n } | GroupSpec::Alternating { n } => {
                Elem((0..*n as u64).collect())
            }
            GroupSpec::Dihedral { .. } => Elem(vec![0, 0]),
            GroupSpec::AbelianProduct { orders } => Elem(vec![0; orders.len()]),
            GroupSpec::Heisenberg { n, .. } => Elem(vec![0; 2 * *n as usize + 1]),
            GroupSpec::FunctionGroup { k, orders } => Elem(vec![0; *k as usize * orders.len()]),
            GroupSpec::ExplicitTable { .. } => Elem(vec![0]),
        }
    }

    pub fn compose(&self, a: &Elem, b: &Elem) -> Elem {
        match &self.spec {
            GroupSpec::Symmetric { .. } | GroupSpec::Alternating { .. } => {
                // (a b)(i) = a(b(i))
                Elem(b.0.iter().map(|&i| a.0[i as usize]).collect())
            }
            GroupSpec::Dihedral { n } => {
                let n = *n as u64;
                let (k1, f1) = (a.0[0], a.0[1]);
                let (k2, f2) = (b.0[0], b.0[1]);
                let k = if f1 == 0 { (k1 + k2) % n } else { (k1 + n - k2 % n) % n };
                Elem(vec![k, (f1 + f2) % 2])
            }
            GroupSpec::AbelianProduct { orders } => Elem(
                a.0.iter()
                    .zip(&b.0)
                    .zip(orders)
                    .map(|((&x, &y), &m)| (x + y) % m)
                    .collect(),
            ),
            GroupSpec::Heisenberg { p, n } => {
                let n = *n as usize;
                let mut out = vec![0u64; 2 * n + 1];
                for i in 0..n {
                    out[i] = (a.0[i] + b.0[i]) % p;
                    out[n + i] = (a.0[n + i] + b.0[n + i]) % p;
                }
                // z'' = z + z' + x . y'
                let mut dot = 0u64;
                for i in 0..n {
                    dot = (dot + a.0[i] * b.0[n + i]) % p;
                }
                out[2 * n] = (a.0[2 * n] + b.0[2 * n] + dot) % p;
                Elem(out)
            }
            GroupSpec::FunctionGroup { k, orders } => {
                let r = orders.len();
                let mut out = Vec::with_capacity(*k as usize * r);
                for i in 0..*k as usize {
                    for j in 0..r {
                        out.push((a.0[i * r + j] + b.0[i * r + j]) % orders[j]);
                    }
                }
                Elem(out)
            }
            GroupSpec::ExplicitTable { table } => {
                Elem(vec![table[a.0[0] as usize][b.0[0] as usize] as u64])
            }
        }
    }

    pub fn inverse(&self, a: &Elem) -> Elem {
        match &self.spec {
            GroupSpec::Symmetric { n } | GroupSpec::Alternating { n } => {
                let mut inv = vec![0u64; *n as usize];
                for (i, &img) in a.0.iter().enumerate() {
                    inv[img as usize] = i as u64;
                }
                Elem(inv)
            }
            GroupSpec::Dihedral { n } => {
                let n = *n as u64;
                let (k, f) = (a.0[0], a.0[1]);
                if f == 0 {
                    Elem(vec![(n - k % n) % n, 0])
                } else {
                    Elem(vec![k, 1])
                }
            }
            GroupSpec::AbelianProduct { orders } => Elem(
                a.0.iter()
                    .zip(orders)
                    .map(|(&x, &m)| (m - x % m) % m)
                    .collect(),
            ),
            GroupSpec::Heisenberg { p, n } => {
                // (x,y,z)^-1 = (-x, -y, -z + x.y)
                let n = *n as usize;
                let mut out = vec![0u64; 2 * n + 1];
                let mut dot = 0u64;
                for i in 0..n {
                    out[i] = (p - a.0[i] % p) % p;
                    out[n + i] = (p - a.0[n + i] % p) % p;
                    dot = (dot + a.0[i] * a.0[n + i]) % p;
                }
                out[2 * n] = ((p - a.0[2 * n] % p) + dot) % p;
                Elem(out)
            }
            GroupSpec::FunctionGroup { k, orders } => {
                let r = orders.len();
                Elem(
                    (0..*k as usize * r)
                        .map(|idx| {
                            let m = orders[idx % r];
                            (m - a.0[idx] % m) % m
                        })
                        .collect(),
                )
            }
            GroupSpec::ExplicitTable { table } => {
                let i = a.0[0] as usize;
                let j = table[i]
                    .iter()
                    .position(|&v| v == 0)
                    .expect("validated table has inverses");
                Elem(vec![j as u64])
            }
        }
    }

    pub fn element_order(&self, a: &Elem) -> u64 {
        let id = self.identity();
        let mut cur = a.clone();
        let mut ord = 1u64;
        while cur != id {
            cur = self.compose(&cur, a);
            ord += 1;
        }
        ord
    }

    /// All elements, identity first, in the deterministic family order.
    pub fn enumerate(&self) -> Result<Vec<Elem>> {
        if self.order > caps::enumeration_cap() {
            return Err(Error::CapExceeded(format!(
                "group order {} exceeds enumeration cap {}",
                self.order,
                caps::enumeration_cap()
            )));
        }
        let elems = match &self.spec {
            GroupSpec::Symmetric { n } => permutations_lex(*n),
            GroupSpec::Alternating { n } => permutations_lex(*n)
                .into_iter()
                .filter(|e| permutation_is_even(&e.0))
                .collect(),
            GroupSpec::Dihedral { n } => {
                let mut out = Vec::with_capacity(2 * *n as usize);
                for f in 0..2u64 {
                    for k in 0..*n as u64 {
                        out.push(Elem(vec![k, f]));
                    }
                }
                out
            }
            GroupSpec::AbelianProduct { orders } => mixed_radix(orders),
            GroupSpec::Heisenberg { p, n } => {
                let digits = vec![*p; 2 * *n as usize + 1];
                mixed_radix(&digits)
            }
            GroupSpec::FunctionGroup { k, orders } => {
                let mut digits = Vec::with_capacity(*k as usize * orders.len());
                for _ in 0..*k {
                    digits.extend_from_slice(orders);
                }
                mixed_radix(&digits)
            }
            GroupSpec::ExplicitTable { table } => {
                (0..table.len() as u64).map(|i| Elem(vec![i])).collect()
            }
        };
        debug_assert_eq!(elems.len() as u64, self.order);
        debug_assert_eq!(elems[0], self.identity());
        Ok(elems)
    }
}

/// Lexicographic enumeration of all permutations of 0..n as image arrays.
fn permutations_lex(n: u32) -> Vec<Elem> {
    let mut cur: Vec<u64> = (0..n as u64).collect();
    let mut out = vec![Elem(cur.clone())];
    while next_permutation(&mut cur) {
        out.push(Elem(cur.clone()));
    }
    out
}

pub(crate) fn next_permutation(v: &mut [u64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn permutation_is_even(images: &[u64]) -> bool {
    let mut seen = vec![false; images.len()];
    let mut transpositions = 0usize;
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = images[cur] as usize;
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

/// Cycle type of a permutation, as a partition of its degree.
pub fn permutation_cycle_type(images: &[u64]) -> crate::partitions::Partition {
    let mut seen = vec![false; images.len()];
    let mut lens = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = images[cur] as usize;
            len += 1;
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    crate::partitions::Partition::new(lens).expect("cycle lengths form a partition")
}

/// Canonical permutation with the given cycle type: cycles laid out
/// consecutively, e.g. type [3,2] on 5 points is (0 1 2)(3 4).
pub fn permutation_from_cycle_type(mu: &crate::partitions::Partition) -> Elem {
    let n = mu.weight() as usize;
    let mut images = vec![0u64; n];
    let mut start = 0usize;
    for &len in mu.parts() {
        let len = len as usize;
        for i in 0..len {
            images[start + i] = (start + (i + 1) % len) as u64;
        }
        start += len;
    }
    Elem(images)
}

fn mixed_radix(digits: &[u64]) -> Vec<Elem> {
    let total: u64 = digits.iter().product();
    let mut out = Vec::with_capacity(total as usize);
    let mut cur = vec![0u64; digits.len()];
    loop {
        out.push(Elem(cur.clone()));
        // increment with the last digit fastest
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] < digits[pos] {
                break;
            }
            cur[pos] = 0;
        }
    }
}

fn validate_table_spec(table: &[Vec<u32>]) -> Result<()> {
    let n = table.len();
    if n == 0 {
        return Err(Error::Parameter("empty multiplication table".into()));
    }
    for row in table {
        if row.len() != n || row.iter().any(|&v| v as usize >= n) {
            return Err(Error::Parameter("multiplication table is not square over valid indices".into()));
        }
    }
    // identity at index 0
    for i in 0..n {
        if table[0][i] as usize != i || table[i][0] as usize != i {
            return Err(Error::Parameter("index 0 is not an identity".into()));
        }
    }
    // Latin square (cancellation)
    for i in 0..n {
        let mut row_seen = vec![false; n];
        let mut col_seen = vec![false; n];
        for j in 0..n {
            let r = table[i][j] as usize;
            let c = table[j][i] as usize;
            if row_seen[r] || col_seen[c] {
                return Err(Error::Parameter("multiplication table is not a Latin square".into()));
            }
            row_seen[r] = true;
            col_seen[c] = true;
        }
        if !table[i].iter().any(|&v| v == 0) {
            return Err(Error::Parameter(format!("element {i} has no inverse")));
        }
    }
    // associativity: exhaustive for small tables, sampled beyond
    let full = (n as u64).pow(3) <= 1_000_000;
    let check = |a: usize, b: usize, c: usize| -> Result<()> {
        let ab_c = table[table[a][b] as usize][c];
        let a_bc = table[a][table[b][c] as usize];
        if ab_c != a_bc {
            return Err(Error::Parameter(format!(
                "multiplication table not associative at ({a},{b},{c})"
            )));
        }
        Ok(())
    };
    if full {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    check(a, b, c)?;
                }
            }
        }
    } else {
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..10_000 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let a = (state % n as u64) as usize;
            let b = ((state >> 20) % n as u64) as usize;
            let c = ((state >> 40) % n as u64) as usize;
            check(a, b, c)?;
        }
    }
    Ok(())
}

/// lcm helper used by class data.
pub(crate) fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}
