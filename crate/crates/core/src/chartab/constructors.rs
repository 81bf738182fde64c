//! Character-table constructors for the supported families.

use std::collections::HashMap;

use num_rational::BigRational;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{
    conjugacy_classes, permutation_cycle_type, symmetric_class_data, Group, GroupSpec,
};
use crate::partitions::{partitions_of, CharacterValues};

use super::{AbelianLabels, Character, CharacterTable, Label};

/// Symmetric group on `n` points: one row per partition of `n`, classes
/// labelled by cycle type, all values integers from the border-strip
/// recursion. Class data is synthesized from cycle types, so no group
/// enumeration happens even at the cap.
pub fn char_table_symmetric(n: u32) -> Result<CharacterTable> {
    if !(2..=10).contains(&n) {
        return Err(Error::CapExceeded(format!(
            "symmetric character table supports 2 <= n <= 10, got {n}"
        )));
    }
    let group = Group::new(GroupSpec::Symmetric { n })?;
    let classes = symmetric_class_data(n);
    let labels = partitions_of(n);
    let types: Vec<_> = classes
        .classes
        .iter()
        .map(|info| permutation_cycle_type(&info.rep.0))
        .collect();
    let mut mn = CharacterValues::new();
    let mut irreps = Vec::with_capacity(labels.len());
    for lambda in labels {
        let values: Vec<Cyclotomic> = types
            .iter()
            .map(|mu| Cyclotomic::from_integer(mn.value(&lambda, mu)))
            .collect();
        irreps.push(Character {
            degree: lambda.dimension(),
            label: Label::Partition(lambda),
            values,
        });
    }
    Ok(CharacterTable::assemble(group, classes, irreps, None, true))
}

/// Any abelian product (including function groups, whose elements are
/// tuples too): rows chi_a(x) = zeta_m^(sum_i a_i x_i m/m_i) with m the
/// exponent, indexed by tuples a in enumeration order.
pub fn char_table_abelian(group: &Group) -> Result<CharacterTable> {
    let orders = group
        .abelian_orders()
        .ok_or_else(|| Error::Parameter("not an abelian product family".into()))?;
    let classes = conjugacy_classes(group)?;
    let m = orders.iter().fold(1u64, |acc, &o| crate::group::lcm_u64(acc, o));
    let elems: Vec<Vec<u64>> = classes.classes.iter().map(|c| c.rep.0.clone()).collect();
    let mut irreps = Vec::with_capacity(elems.len());
    let mut index = HashMap::with_capacity(elems.len());
    for (row, a) in elems.iter().enumerate() {
        let values: Vec<Cyclotomic> = elems
            .iter()
            .map(|x| {
                let mut exp = 0u64;
                for ((&ai, &xi), &mi) in a.iter().zip(x).zip(&orders) {
                    exp = (exp + ai * xi % m * (m / mi)) % m;
                }
                Cyclotomic::root_of_unity(m, exp)
            })
            .collect();
        index.insert(a.clone(), row);
        irreps.push(Character { label: Label::Tuple(a.clone()), degree: 1, values });
    }
    let labels = AbelianLabels { orders, index };
    Ok(CharacterTable::assemble(group.clone(), classes, irreps, Some(labels), true))
}

/// Heisenberg group over Z_p: p^(2n) linear rows with phases on (x, y),
/// plus p-1 rows of degree p^n supported on the center.
pub fn char_table_heisenberg(p: u64, n: u32) -> Result<CharacterTable> {
    let group = Group::new(GroupSpec::Heisenberg { p, n })?;
    let classes = conjugacy_classes(&group)?;
    let nu = n as usize;
    let reps: Vec<Vec<u64>> = classes.classes.iter().map(|c| c.rep.0.clone()).collect();
    let mut irreps = Vec::new();
    // linear rows, alpha then beta in mixed-radix order
    let tuples = all_tuples(p, 2 * nu);
    for ab in &tuples {
        let (alpha, beta) = ab.split_at(nu);
        let values: Vec<Cyclotomic> = reps
            .iter()
            .map(|e| {
                let mut exp = 0u64;
                for i in 0..nu {
                    exp = (exp + alpha[i] * e[i] + beta[i] * e[nu + i]) % p;
                }
                Cyclotomic::root_of_unity(p, exp)
            })
            .collect();
        irreps.push(Character {
            label: Label::HeisenbergLinear { alpha: alpha.to_vec(), beta: beta.to_vec() },
            degree: 1,
            values,
        });
    }
    // central rows theta_c: p^n * omega^(c z) on the center, zero elsewhere
    let pn = p.pow(n);
    for c in 1..p {
        let values: Vec<Cyclotomic> = reps
            .iter()
            .map(|e| {
                let central = e[..2 * nu].iter().all(|&v| v == 0);
                if central {
                    Cyclotomic::root_of_unity(p, c * e[2 * nu] % p)
                        .scale(&BigRational::from_integer(pn.into()))
                } else {
                    Cyclotomic::zero()
                }
            })
            .collect();
        irreps.push(Character { label: Label::HeisenbergCentral { c }, degree: pn, values });
    }
    Ok(CharacterTable::assemble(group, classes, irreps, None, true))
}

/// Dihedral group of order 2n: two or four linear rows (n odd or even) and
/// floor((n-1)/2) two-dimensional rows.
pub fn char_table_dihedral(n: u32) -> Result<CharacterTable> {
    let group = Group::new(GroupSpec::Dihedral { n })?;
    let classes = conjugacy_classes(&group)?;
    let reps: Vec<(u64, u64)> = classes
        .classes
        .iter()
        .map(|c| (c.rep.0[0], c.rep.0[1]))
        .collect();
    let m = n as u64;
    let mut irreps = Vec::new();
    let linear: Vec<(u8, Box<dyn Fn(u64, u64) -> i64>)> = if n % 2 == 1 {
        vec![
            (0, Box::new(|_, _| 1)),
            (1, Box::new(|_, f| if f == 0 { 1 } else { -1 })),
        ]
    } else {
        vec![
            (0, Box::new(|_, _| 1)),
            (1, Box::new(|_, f| if f == 0 { 1 } else { -1 })),
            (2, Box::new(|k, _| if k % 2 == 0 { 1 } else { -1 })),
            (3, Box::new(|k, f| if (k + f) % 2 == 0 { 1 } else { -1 })),
        ]
    };
    for (id, f) in linear {
        let values = reps
            .iter()
            .map(|&(k, fl)| Cyclotomic::from_integer(f(k, fl)))
            .collect();
        irreps.push(Character { label: Label::DihedralLinear(id), degree: 1, values });
    }
    let two_dim_count = if n % 2 == 1 { (n - 1) / 2 } else { n / 2 - 1 };
    for j in 1..=two_dim_count as u64 {
        let values = reps
            .iter()
            .map(|&(k, fl)| {
                if fl == 0 {
                    Cyclotomic::root_of_unity(m, j * k % m)
                        .add(&Cyclotomic::root_of_unity(m, (m - j * k % m) % m))
                } else {
                    Cyclotomic::zero()
                }
            })
            .collect();
        irreps.push(Character { label: Label::DihedralPlane(j as u32), degree: 2, values });
    }
    Ok(CharacterTable::assemble(group, classes, irreps, None, true))
}

/// Dispatch on the family; explicit-table groups must come with a loaded
/// document instead.
pub fn char_table_for(group: &Group) -> Result<CharacterTable> {
    match group.spec() {
        GroupSpec::Symmetric { n } => char_table_symmetric(*n),
        GroupSpec::AbelianProduct { .. } | GroupSpec::FunctionGroup { .. } => {
            char_table_abelian(group)
        }
        GroupSpec::Heisenberg { p, n } => char_table_heisenberg(*p, *n),
        GroupSpec::Dihedral { n } => char_table_dihedral(*n),
        GroupSpec::Alternating { .. } => Err(Error::Parameter(
            "alternating groups have no standalone table here; they are handled \
             through symmetric-group partition data"
                .into(),
        )),
        GroupSpec::ExplicitTable { .. } => Err(Error::Parameter(
            "explicit-table groups need a user-supplied character table document".into(),
        )),
    }
}

fn all_tuples(base: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::with_capacity(base.pow(len as u32) as usize);
    let mut cur = vec![0u64; len];
    loop {
        out.push(cur.clone());
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] < base {
                break;
            }
            cur[pos] = 0;
        }
    }
}
