//! Irreducible character tables.
//!
//! A [`CharacterTable`] couples a group and its conjugacy-class data with
//! one row per irreducible character, each value an exact cyclotomic.
//! Tables are built per family ([`constructors`]), loaded from a versioned
//! JSON document ([`io`]), and validated exactly ([`validate_table`]).

pub mod constructors;
pub mod io;

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{ConjClassData, Group};
use crate::partitions::Partition;

/// Family-specific row label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Label {
    /// Symmetric group row, labelled by a partition.
    Partition(Partition),
    /// Abelian product row, labelled by an exponent tuple.
    Tuple(Vec<u64>),
    /// Heisenberg linear character with phase exponents (alpha, beta).
    HeisenbergLinear { alpha: Vec<u64>, beta: Vec<u64> },
    /// Heisenberg character of degree p^n, labelled by the central phase c.
    HeisenbergCentral { c: u64 },
    /// Dihedral linear character (0 trivial, 1 flip sign, 2 and 3 only for
    /// even n).
    DihedralLinear(u8),
    /// Dihedral two-dimensional character with rotation frequency j.
    DihedralPlane(u32),
    /// Label carried by a loaded table.
    Named(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Partition(p) => {
                let parts: Vec<String> = p.parts().iter().map(|v| v.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
            Label::Tuple(t) => {
                let parts: Vec<String> = t.iter().map(|v| v.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
            Label::HeisenbergLinear { alpha, beta } => {
                let a: Vec<String> = alpha.iter().map(|v| v.to_string()).collect();
                let b: Vec<String> = beta.iter().map(|v| v.to_string()).collect();
                write!(f, "chi({}|{})", a.join(","), b.join(","))
            }
            Label::HeisenbergCentral { c } => write!(f, "theta({c})"),
            Label::DihedralLinear(i) => write!(f, "lin{i}"),
            Label::DihedralPlane(j) => write!(f, "rot{j}"),
            Label::Named(s) => write!(f, "{s}"),
        }
    }
}

/// One irreducible character: its label, degree, and value per class.
#[derive(Clone, Debug)]
pub struct Character {
    pub label: Label,
    pub degree: u64,
    pub values: Vec<Cyclotomic>,
}

/// Tuple-label lookup for abelian tables; makes tensor products of rows a
/// digit addition instead of an inner-product decomposition.
#[derive(Clone, Debug)]
pub struct AbelianLabels {
    pub orders: Vec<u64>,
    pub index: HashMap<Vec<u64>, usize>,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group: Group,
    pub classes: ConjClassData,
    pub irreps: Vec<Character>,
    /// lcm of all value conductors; the field the table lives in.
    pub conductor: u64,
    /// Whether class representatives are genuine group elements (false only
    /// for tables loaded without representative data).
    pub has_element_data: bool,
    pub abelian_labels: Option<AbelianLabels>,
}

impl CharacterTable {
    pub(crate) fn assemble(
        group: Group,
        classes: ConjClassData,
        irreps: Vec<Character>,
        abelian_labels: Option<AbelianLabels>,
        has_element_data: bool,
    ) -> Self {
        let conductor = irreps
            .iter()
            .flat_map(|c| c.values.iter())
            .fold(1u64, |acc, v| crate::group::lcm_u64(acc, v.conductor()));
        CharacterTable {
            group,
            classes,
            irreps,
            conductor,
            has_element_data,
            abelian_labels,
        }
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn irrep_count(&self) -> usize {
        self.irreps.len()
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.irreps[i].degree
    }

    /// Row index by rendered label.
    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.irreps.iter().position(|c| c.label.to_string() == label)
    }

    /// Index of the trivial character (all values 1).
    pub fn trivial_index(&self) -> usize {
        self.irreps
            .iter()
            .position(|c| c.values.iter().all(|v| *v == Cyclotomic::one()))
            .expect("every table contains the trivial character")
    }

    /// Value of irrep `i` on the class of element `e`.
    pub fn value_at_element(&self, i: usize, e: &crate::group::Elem) -> Result<&Cyclotomic> {
        let class = self
            .classes
            .class_of(e)
            .ok_or_else(|| Error::TableMismatch("element not found in class data".into()))?;
        Ok(&self.irreps[i].values[class])
    }

    /// Exact inner product of two rows of class-function values.
    pub fn inner_product_values(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        inner_product_raw(&self.classes, self.order(), a, b)
    }

    /// Tensor product of two irreducible rows as a row index, when the
    /// label structure makes products of irreducibles irreducible.
    pub fn tensor_irreps_fast(&self, i: usize, j: usize) -> Option<usize> {
        let labels = self.abelian_labels.as_ref()?;
        let (Label::Tuple(a), Label::Tuple(b)) = (&self.irreps[i].label, &self.irreps[j].label)
        else {
            return None;
        };
        let sum: Vec<u64> = a
            .iter()
            .zip(b)
            .zip(&labels.orders)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect();
        labels.index.get(&sum).copied()
    }
}

/// (1/|G|) * sum over classes of size * a * conj(b), accumulated densely
/// in the smallest common field with one final canonicalization. Runs on
/// machine integers when every coordinate fits, with an exact big-number
/// fallback.
pub fn inner_product_raw(
    classes: &ConjClassData,
    order: u64,
    a: &[Cyclotomic],
    b: &[Cyclotomic],
) -> Cyclotomic {
    let m = a
        .iter()
        .chain(b.iter())
        .fold(1u64, |acc, v| crate::group::lcm_u64(acc, v.conductor()));
    let ops = crate::cyclotomic::FieldOps::new(m);
    if let Some(value) = integer_inner_product(&ops, classes, order, a, b) {
        return value;
    }
    let mut acc = vec![BigRational::zero(); crate::cyclotomic::phi(m) as usize];
    for (info, (av, bv)) in classes.classes.iter().zip(a.iter().zip(b)) {
        if av.is_zero() || bv.is_zero() {
            continue;
        }
        let ad = ops.to_dense(av).expect("conductor divides lcm");
        let bd = ops.conj_dense(&ops.to_dense(bv).expect("conductor divides lcm"));
        let weight = BigRational::from_integer(info.size.into());
        ops.mul_add_into(&ad, &bd, &weight, &mut acc);
    }
    let scale = BigRational::new(1.into(), order.into());
    for c in acc.iter_mut() {
        *c *= &scale;
    }
    ops.make(acc)
}

fn integer_inner_product(
    ops: &crate::cyclotomic::FieldOps,
    classes: &ConjClassData,
    order: u64,
    a: &[Cyclotomic],
    b: &[Cyclotomic],
) -> Option<Cyclotomic> {
    let mut acc = vec![0i128; crate::cyclotomic::phi(ops.conductor()) as usize];
    for (info, (av, bv)) in classes.classes.iter().zip(a.iter().zip(b)) {
        if av.is_zero() || bv.is_zero() {
            continue;
        }
        let ad = ops.to_dense_int(av)?;
        let bd = ops.conj_dense_int(&ops.to_dense_int(bv)?)?;
        ops.mul_add_into_int(&ad, &bd, info.size as i128, &mut acc)?;
    }
    Some(ops.make_int(acc, order))
}

/// Run every exact table identity; returns the list of violated identities
/// (empty means the table is valid).
pub fn validate_table(table: &CharacterTable) -> Vec<String> {
    let mut violations = Vec::new();
    let g_order = table.order();
    let k = table.class_count();

    if table.irrep_count() != k {
        violations.push(format!(
            "irreducible count {} != class count {}",
            table.irrep_count(),
            k
        ));
    }
    if table.classes.total_size() != g_order {
        violations.push(format!(
            "class equation: sum of class sizes {} != |G| = {}",
            table.classes.total_size(),
            g_order
        ));
    }
    if table.classes.classes.is_empty() || table.classes.classes[0].size != 1 {
        violations.push("identity class is not a singleton at index 0".into());
    }

    // degrees: positive integers matching the identity-class value
    let mut degree_sq_sum = BigRational::zero();
    for (i, chi) in table.irreps.iter().enumerate() {
        if chi.values.len() != k {
            violations.push(format!("row {i} has {} values, expected {k}", chi.values.len()));
            continue;
        }
        match chi.values[0].as_rational() {
            Some(q) if q.is_integer() && q.is_positive() => {
                let deg = q.to_integer();
                if deg != chi.degree.into() {
                    violations.push(format!("row {i}: stored degree differs from value at identity"));
                }
                let deg_sq = BigRational::from_integer(deg.clone() * deg);
                if deg_sq > BigRational::from_integer(g_order.into()) {
                    violations.push(format!("row {i}: degree^2 exceeds |G|"));
                }
                degree_sq_sum += deg_sq;
            }
            _ => violations.push(format!("row {i}: degree is not a positive integer")),
        }
    }
    if degree_sq_sum != BigRational::from_integer(g_order.into()) {
        violations.push(format!(
            "degree-sum identity: sum of squares = {degree_sq_sum} != |G| = {g_order}"
        ));
    }

    // row orthogonality, exact
    for i in 0..table.irrep_count() {
        for j in i..table.irrep_count() {
            let ip = table.inner_product_values(&table.irreps[i].values, &table.irreps[j].values);
            let expect = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
            if ip != expect {
                violations.push(format!("row orthogonality fails at rows ({i},{j}): got {ip}"));
            }
        }
    }

    // column orthogonality, exact
    for c in 0..k {
        for d in c..k {
            let mut acc = Cyclotomic::zero();
            for chi in &table.irreps {
                acc = acc.add(&chi.values[c].mul(&chi.values[d].conj()));
            }
            let expect = if c == d {
                Cyclotomic::from_rational(BigRational::new(
                    g_order.into(),
                    table.classes.classes[c].size.into(),
                ))
            } else {
                Cyclotomic::zero()
            };
            if acc != expect {
                violations.push(format!("column orthogonality fails at classes ({c},{d})"));
            }
        }
    }

    violations
}

/// Validate and wrap into a result.
pub fn ensure_valid(table: CharacterTable) -> Result<CharacterTable> {
    let violations = validate_table(&table);
    if violations.is_empty() {
        Ok(table)
    } else {
        Err(Error::TableInvalid(violations.join("; ")))
    }
}

/// Canonical fingerprint of a table up to row and column permutation:
/// sorted rows of sorted (class size, value string) pairs.
pub fn canonical_fingerprint(table: &CharacterTable) -> Result<Vec<Vec<(u64, String)>>> {
    let m = table.conductor;
    let mut rows = Vec::new();
    for chi in &table.irreps {
        let mut row: Vec<(u64, String)> = chi
            .values
            .iter()
            .zip(&table.classes.classes)
            .map(|(v, info)| Ok((info.size, v.to_string_in(m)?)))
            .collect::<Result<_>>()?;
        row.sort();
        rows.push(row);
    }
    rows.sort();
    Ok(rows)
}
