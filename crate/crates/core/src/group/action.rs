//! Permutation actions of the supported families.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::{Elem, Group, GroupSpec};

#[derive(Clone, Debug)]
enum ActionKind {
    /// Symmetric or alternating group on its points.
    Points,
    /// Dihedral group on the polygon vertices.
    Vertices,
    /// Heisenberg group on column vectors over Z_p, mixed-radix encoded
    /// with digit j at place value p^j.
    Columns { p: u64, n: u32 },
    /// Function group on pairs (slot, group element): point = i*|A| + b.
    Evaluation { k: u32, orders: Vec<u64> },
    /// Left translation on the group itself (the regular action).
    Translation { index: HashMap<Elem, u64>, elems: Vec<Elem> },
}

/// A group acting on points `0..domain_size`.
#[derive(Clone, Debug)]
pub struct GroupAction {
    group: Group,
    domain_size: u64,
    kind: ActionKind,
}

impl GroupAction {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn domain_size(&self) -> u64 {
        self.domain_size
    }

    pub fn apply(&self, g: &Elem, point: u64) -> u64 {
        debug_assert!(point < self.domain_size);
        match &self.kind {
            ActionKind::Points => g.0[point as usize],
            ActionKind::Vertices => {
                let n = self.domain_size;
                let (k, f) = (g.0[0], g.0[1]);
                if f == 0 {
                    (k + point) % n
                } else {
                    (k + n - point % n) % n
                }
            }
            ActionKind::Columns { p, n } => {
                let n = *n as usize;
                let mut digits = vec![0u64; n + 2];
                let mut rest = point;
                for d in digits.iter_mut() {
                    *d = rest % p;
                    rest /= p;
                }
                // v0 += x.w + z*v_last; w_i += y_i*v_last
                let v_last = digits[n + 1];
                let mut top = digits[0] + g.0[2 * n] * v_last;
                for i in 0..n {
                    top += g.0[i] * digits[1 + i];
                    digits[1 + i] = (digits[1 + i] + g.0[n + i] * v_last) % p;
                }
                digits[0] = top % p;
                let mut out = 0u64;
                for (j, d) in digits.iter().enumerate() {
                    out += d * p.pow(j as u32);
                }
                out
            }
            ActionKind::Evaluation { k, orders } => {
                let r = orders.len();
                let block: u64 = orders.iter().product();
                let slot = point / block;
                debug_assert!(slot < *k as u64);
                let mut b = point % block;
                // decode the abelian element, last digit fastest
                let mut digits = vec![0u64; r];
                for j in (0..r).rev() {
                    digits[j] = b % orders[j];
                    b /= orders[j];
                }
                for j in 0..r {
                    digits[j] = (digits[j] + g.0[slot as usize * r + j]) % orders[j];
                }
                let mut enc = 0u64;
                for j in 0..r {
                    enc = enc * orders[j] + digits[j];
                }
                slot * block + enc
            }
            ActionKind::Translation { index, elems } => {
                let target = self.group.compose(g, &elems[point as usize]);
                index[&target]
            }
        }
    }

    /// Number of fixed points; the permutation-character value at `g`.
    pub fn fixed_points(&self, g: &Elem) -> u64 {
        (0..self.domain_size)
            .filter(|&pt| self.apply(g, pt) == pt)
            .count() as u64
    }

    /// Verify the action laws: the identity acts trivially and the action
    /// respects composition. Exhaustive when |G|*|Omega| is small, sampled
    /// deterministically otherwise.
    pub fn check(&self) -> Result<()> {
        let elems = self.group.enumerate()?;
        let id = self.group.identity();
        for pt in 0..self.domain_size {
            if self.apply(&id, pt) != pt {
                return Err(Error::UnsupportedAction("identity does not act trivially".into()));
            }
        }
        let exhaustive = self.group.order() * self.domain_size <= 1_000_000;
        let verify = |g: &Elem, h: &Elem, pt: u64| -> Result<()> {
            let lhs = self.apply(&self.group.compose(g, h), pt);
            let rhs = self.apply(g, self.apply(h, pt));
            if lhs != rhs {
                return Err(Error::UnsupportedAction(format!(
                    "action does not respect composition at {g:?},{h:?},{pt}"
                )));
            }
            Ok(())
        };
        if exhaustive {
            for g in &elems {
                for h in &elems {
                    for pt in 0..self.domain_size {
                        verify(g, h, pt)?;
                    }
                }
            }
        } else {
            let mut state = 0xdeadbeefu64;
            let n = elems.len() as u64;
            for _ in 0..10_000 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let g = &elems[(state % n) as usize];
                let h = &elems[((state >> 16) % n) as usize];
                let pt = (state >> 32) % self.domain_size;
                verify(g, h, pt)?;
            }
        }
        Ok(())
    }

    /// Elements acting trivially on every point.
    pub fn kernel_is_trivial(&self) -> Result<bool> {
        let elems = self.group.enumerate()?;
        let id = self.group.identity();
        for g in &elems {
            if *g == id {
                continue;
            }
            if (0..self.domain_size).all(|pt| self.apply(g, pt) == pt) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The standard action of the family: points for symmetric/alternating
/// groups, vertices for dihedral groups, column vectors for Heisenberg
/// groups, evaluation pairs for function groups.
pub fn natural_action(group: &Group) -> Result<GroupAction> {
    let kind = match group.spec() {
        GroupSpec::Symmetric { .. } | GroupSpec::Alternating { .. } => ActionKind::Points,
        GroupSpec::Dihedral { .. } => ActionKind::Vertices,
        GroupSpec::Heisenberg { p, n } => ActionKind::Columns { p: *p, n: *n },
        GroupSpec::FunctionGroup { k, orders } => {
            ActionKind::Evaluation { k: *k, orders: orders.clone() }
        }
        other => {
            return Err(Error::UnsupportedAction(format!(
                "no natural action declared for {other:?}"
            )))
        }
    };
    let domain_size = match group.spec() {
        GroupSpec::Symmetric { n } | GroupSpec::Alternating { n } => *n as u64,
        GroupSpec::Dihedral { n } => *n as u64,
        GroupSpec::Heisenberg { p, n } => p.pow(*n + 2),
        GroupSpec::FunctionGroup { k, orders } => {
            *k as u64 * orders.iter().product::<u64>()
        }
        _ => unreachable!(),
    };
    Ok(GroupAction { group: group.clone(), domain_size, kind })
}

/// The regular action of the group on itself by left translation.
pub fn translation_action(group: &Group) -> Result<GroupAction> {
    let elems = group.enumerate()?;
    let index: HashMap<Elem, u64> = elems
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i as u64))
        .collect();
    Ok(GroupAction {
        group: group.clone(),
        domain_size: elems.len() as u64,
        kind: ActionKind::Translation { index, elems },
    })
}
