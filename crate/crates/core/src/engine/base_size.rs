//! Classical base size of a permutation action: the least number of points
//! whose pointwise stabilizer is trivial. This is the classical query count
//! for identifying a hidden group element through the action.

use crate::error::{Error, Result};
use crate::group::{Elem, GroupAction};

/// Exact base size. Greedy stabilizer descent gives an upper bound, then an
/// exhaustive subset search certifies minimality. Pointwise stabilizers do
/// not depend on point order, so subsets in increasing order suffice.
pub fn classical_base_size(action: &GroupAction) -> Result<u64> {
    if !action.kernel_is_trivial()? {
        return Err(Error::UnsupportedAction(
            "action is not faithful; no base exists".into(),
        ));
    }
    let elems = action.group().enumerate()?;
    let identity = action.group().identity();
    let nontrivial: Vec<&Elem> = elems.iter().filter(|e| **e != identity).collect();
    let omega = action.domain_size();

    // greedy: always fix the point killing the most of the stabilizer
    let mut stab: Vec<&Elem> = nontrivial.clone();
    let mut greedy_len = 0u64;
    while !stab.is_empty() {
        let best = (0..omega)
            .min_by_key(|&pt| stab.iter().filter(|g| action.apply(g, pt) == pt).count())
            .expect("nonempty domain");
        stab.retain(|g| action.apply(g, best) == best);
        greedy_len += 1;
    }

    // certify: find the least subset size that still works
    for size in 1..greedy_len {
        if search(action, &nontrivial, 0, size) {
            return Ok(size);
        }
    }
    Ok(greedy_len)
}

fn search(action: &GroupAction, stab: &[&Elem], start: u64, slots: u64) -> bool {
    if stab.is_empty() {
        return true;
    }
    if slots == 0 {
        return false;
    }
    let omega = action.domain_size();
    for pt in start..omega {
        let filtered: Vec<&Elem> = stab
            .iter()
            .copied()
            .filter(|g| action.apply(g, pt) == pt)
            .collect();
        if filtered.len() == stab.len() {
            continue; // the point fixes nothing new
        }
        if search(action, &filtered, pt + 1, slots - 1) {
            return true;
        }
    }
    false
}
