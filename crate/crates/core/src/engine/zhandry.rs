//! Independent abelian route for coset identification.
//!
//! When the parent group is abelian, every induced representation from a
//! subgroup character splits into distinct parent characters, and two
//! parent characters land in the same induced representation exactly when
//! they restrict identically to the subgroup. The optimal probability is
//! then the largest number of support members sharing one restriction,
//! divided by the subgroup index. This route never touches reciprocity
//! inner products, so it cross-checks the generic engine.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::repcalc::{CosetSetup, IrrepSet};

/// Group the parent irreducibles into classes with equal restriction to
/// the subgroup; returns the class id per irreducible and the class sizes.
pub fn restriction_classes(setup: &CosetSetup) -> Result<(Vec<usize>, Vec<u64>)> {
    if setup.g_table.irreps.iter().any(|c| c.degree != 1) {
        return Err(Error::Parameter(
            "restriction-equality route needs an abelian parent group".into(),
        ));
    }
    let conductor = crate::group::lcm_u64(setup.g_table.conductor, setup.h_table.conductor);
    let mut class_of = vec![usize::MAX; setup.g_table.irrep_count()];
    let mut sizes: Vec<u64> = Vec::new();
    let mut by_key: HashMap<Vec<Vec<num_rational::BigRational>>, usize> = HashMap::new();
    for (i, chi) in setup.g_table.irreps.iter().enumerate() {
        let key: Vec<Vec<num_rational::BigRational>> = setup
            .fusion
            .fusion
            .iter()
            .map(|&gc| chi.values[gc].embedded_coeffs(conductor))
            .collect::<Result<_>>()?;
        let id = *by_key.entry(key).or_insert_with(|| {
            sizes.push(0);
            sizes.len() - 1
        });
        class_of[i] = id;
        sizes[id] += 1;
    }
    Ok((class_of, sizes))
}

/// Optimal t-query probability by the restriction-equality count: the
/// equivalence classes partition the power support, and the probability is
/// the largest class-within-the-support over the index.
pub fn zhandry_success(setup: &CosetSetup, support: &IrrepSet) -> Result<(BigRational, usize)> {
    let (class_of, sizes) = restriction_classes(setup)?;
    let mut in_support = vec![0u64; sizes.len()];
    for i in support.iter() {
        in_support[class_of[i]] += 1;
    }
    let mut best = 0u64;
    let mut witness = 0usize;
    for i in support.iter() {
        let s = in_support[class_of[i]];
        if s > best {
            best = s;
            witness = i;
        }
    }
    Ok((
        BigRational::new(BigInt::from(best), BigInt::from(setup.index())),
        witness,
    ))
}
