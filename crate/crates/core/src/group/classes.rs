//! Conjugacy class computation.

use std::collections::HashMap;

use crate::error::Result;
use crate::partitions::Partition;

use super::{lcm_u64, permutation_cycle_type, Elem, Group, GroupSpec};

#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub rep: Elem,
    pub size: u64,
    pub element_order: u64,
}

/// How a conjugacy class is looked up for an arbitrary element.
#[derive(Clone, Debug)]
pub enum ClassLookup {
    /// Element-to-class map from an explicit orbit computation.
    Dense(HashMap<Elem, usize>),
    /// Symmetric-group classes indexed by cycle type, usable without
    /// enumerating the group.
    CycleType(HashMap<Partition, usize>),
    /// No element-level data (tables loaded without representatives).
    Unavailable,
}

/// The class partition of a group: representatives, sizes, element orders,
/// the identity class at index 0, and the group exponent.
#[derive(Clone, Debug)]
pub struct ConjClassData {
    pub classes: Vec<ClassInfo>,
    pub exponent: u64,
    lookup: ClassLookup,
}

impl ConjClassData {
    pub fn new(classes: Vec<ClassInfo>, exponent: u64, lookup: ClassLookup) -> Self {
        ConjClassData { classes, exponent, lookup }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, e: &Elem) -> Option<usize> {
        match &self.lookup {
            ClassLookup::Dense(map) => map.get(e).copied(),
            ClassLookup::CycleType(map) => map.get(&permutation_cycle_type(&e.0)).copied(),
            ClassLookup::Unavailable => None,
        }
    }

    pub fn total_size(&self) -> u64 {
        self.classes.iter().map(|c| c.size).sum()
    }
}

/// Partition the group into conjugacy classes.
///
/// Abelian families short-circuit to singleton classes in enumeration
/// order; everything else runs an orbit computation with a visited set, so
/// the representative of each class is its least element in enumeration
/// order and the identity class lands at index 0.
pub fn conjugacy_classes(group: &Group) -> Result<ConjClassData> {
    let elems = group.enumerate()?;
    if group.is_abelian_family() {
        let mut map = HashMap::with_capacity(elems.len());
        let mut classes = Vec::with_capacity(elems.len());
        let mut exponent = 1u64;
        for (i, e) in elems.iter().enumerate() {
            map.insert(e.clone(), i);
            let order = group.element_order(e);
            exponent = lcm_u64(exponent, order);
            classes.push(ClassInfo { rep: e.clone(), size: 1, element_order: order });
        }
        return Ok(ConjClassData::new(classes, exponent, ClassLookup::Dense(map)));
    }

    let index: HashMap<&Elem, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut class_of = vec![usize::MAX; elems.len()];
    let mut classes = Vec::new();
    let mut exponent = 1u64;
    for (i, e) in elems.iter().enumerate() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let class_idx = classes.len();
        let mut size = 0u64;
        for g in &elems {
            let conj = group.compose(&group.compose(g, e), &group.inverse(g));
            let j = index[&conj];
            if class_of[j] == usize::MAX {
                class_of[j] = class_idx;
                size += 1;
            }
        }
        let order = group.element_order(e);
        exponent = lcm_u64(exponent, order);
        classes.push(ClassInfo { rep: e.clone(), size, element_order: order });
    }
    let map: HashMap<Elem, usize> = elems
        .into_iter()
        .zip(class_of.iter().copied())
        .collect();
    Ok(ConjClassData::new(classes, exponent, ClassLookup::Dense(map)))
}

/// Class data for the symmetric group assembled from cycle types, without
/// enumerating the group. Classes are ordered like
/// [`crate::partitions::partitions_of`], so the identity type `[1^n]` is
/// index 0.
pub fn symmetric_class_data(n: u32) -> ConjClassData {
    use crate::partitions::{cycle_type_class_size, partitions_of};
    let types = partitions_of(n);
    let mut map = HashMap::with_capacity(types.len());
    let mut classes = Vec::with_capacity(types.len());
    let mut exponent = 1u64;
    for (i, mu) in types.iter().enumerate() {
        map.insert(mu.clone(), i);
        let order = mu
            .parts()
            .iter()
            .fold(1u64, |acc, &p| lcm_u64(acc, p as u64));
        exponent = lcm_u64(exponent, order);
        classes.push(ClassInfo {
            rep: super::permutation_from_cycle_type(mu),
            size: cycle_type_class_size(mu),
            element_order: order,
        });
    }
    ConjClassData::new(classes, exponent, ClassLookup::CycleType(map))
}

/// Degree of a symmetric-group spec, if it is one.
pub fn symmetric_degree(group: &Group) -> Option<u32> {
    match group.spec() {
        GroupSpec::Symmetric { n } => Some(*n),
        _ => None,
    }
}
