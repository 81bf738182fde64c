//! Versioned JSON interchange format for character tables.
//!
//! ```json
//! {
//!   "version": 1,
//!   "group": {"family": "symmetric", "params": {"n": 3}},
//!   "conductor": 1,
//!   "classes": [{"size": 1, "order": 1, "rep": [0, 1, 2]}, ...],
//!   "characters": [{"label": "[3]", "values": ["1", "1", "1"]}, ...]
//! }
//! ```
//!
//! Value strings use `z` for a primitive `conductor`-th root of unity.
//! The per-class `rep` field is optional on input; without it the table
//! still validates and supports class-function calculus, but operations
//! needing element-level data are unavailable.

use serde::{Deserialize, Serialize};

use crate::caps;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{ClassInfo, ClassLookup, ConjClassData, Elem, Group, GroupSpec};

use super::{ensure_valid, Character, CharacterTable, Label};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct TableDoc {
    version: u32,
    group: GroupSpec,
    conductor: u64,
    classes: Vec<ClassDoc>,
    characters: Vec<CharDoc>,
}

#[derive(Serialize, Deserialize)]
struct ClassDoc {
    size: u64,
    order: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    rep: Option<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct CharDoc {
    label: String,
    values: Vec<String>,
}

/// Serialize a table to the schema above.
pub fn save_char_table(table: &CharacterTable) -> Result<String> {
    let doc = TableDoc {
        version: SCHEMA_VERSION,
        group: table.group.spec().clone(),
        conductor: table.conductor,
        classes: table
            .classes
            .classes
            .iter()
            .map(|info| ClassDoc {
                size: info.size,
                order: info.element_order,
                rep: if table.has_element_data {
                    Some(info.rep.0.clone())
                } else {
                    None
                },
            })
            .collect(),
        characters: table
            .irreps
            .iter()
            .map(|chi| {
                Ok(CharDoc {
                    label: chi.label.to_string(),
                    values: chi
                        .values
                        .iter()
                        .map(|v| v.to_string_in(table.conductor))
                        .collect::<Result<_>>()?,
                })
            })
            .collect::<Result<_>>()?,
    };
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Parse(e.to_string()))
}

/// Parse and fully validate a table document.
pub fn load_char_table(json: &str) -> Result<CharacterTable> {
    let doc: TableDoc = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.version != SCHEMA_VERSION {
        return Err(Error::Parse(format!(
            "unsupported schema version {} (expected {SCHEMA_VERSION})",
            doc.version
        )));
    }
    let group = Group::new(doc.group)?;
    if doc.classes.is_empty() {
        return Err(Error::Parse("empty class list".into()));
    }

    let reps: Option<Vec<Elem>> = doc
        .classes
        .iter()
        .map(|c| c.rep.clone().map(Elem))
        .collect();
    let (classes, has_element_data) = match reps {
        Some(reps) if group.order() <= caps::exhaustive_check_cap() => {
            (rebuild_class_data(&group, &doc.classes, reps)?, true)
        }
        _ => {
            let infos = doc
                .classes
                .iter()
                .map(|c| ClassInfo {
                    rep: Elem(c.rep.clone().unwrap_or_default()),
                    size: c.size,
                    element_order: c.order,
                })
                .collect();
            let exponent = doc
                .classes
                .iter()
                .fold(1u64, |acc, c| crate::group::lcm_u64(acc, c.order));
            (
                ConjClassData::new(infos, exponent, ClassLookup::Unavailable),
                false,
            )
        }
    };

    let mut irreps = Vec::with_capacity(doc.characters.len());
    let mut seen_labels = std::collections::HashSet::new();
    for chi in &doc.characters {
        if !seen_labels.insert(chi.label.clone()) {
            return Err(Error::Parse(format!("duplicate character label '{}'", chi.label)));
        }
        if chi.values.len() != doc.classes.len() {
            return Err(Error::Parse(format!(
                "character '{}' has {} values for {} classes",
                chi.label,
                chi.values.len(),
                doc.classes.len()
            )));
        }
        let values: Vec<Cyclotomic> = chi
            .values
            .iter()
            .map(|s| Cyclotomic::parse(s, doc.conductor))
            .collect::<Result<_>>()?;
        let degree = values[0]
            .as_rational()
            .filter(|q| q.is_integer() && *q > num_rational::BigRational::from_integer(0.into()))
            .and_then(|q| {
                use num_traits::ToPrimitive;
                q.to_integer().to_u64()
            })
            .ok_or_else(|| {
                Error::TableInvalid(format!(
                    "character '{}': value at the identity is not a positive integer",
                    chi.label
                ))
            })?;
        irreps.push(Character { label: Label::Named(chi.label.clone()), degree, values });
    }

    ensure_valid(CharacterTable::assemble(
        group,
        classes,
        irreps,
        None,
        has_element_data,
    ))
}

/// Rebuild element-level class data from declared representatives by orbit
/// computation, cross-checking declared sizes and orders.
fn rebuild_class_data(
    group: &Group,
    declared: &[ClassDoc],
    reps: Vec<Elem>,
) -> Result<ConjClassData> {
    let elems = group.enumerate()?;
    let mut map = std::collections::HashMap::with_capacity(elems.len());
    let mut infos = Vec::with_capacity(reps.len());
    let mut exponent = 1u64;
    for (idx, (rep, doc)) in reps.into_iter().zip(declared).enumerate() {
        let mut size = 0u64;
        for g in &elems {
            let conj = group.compose(&group.compose(g, &rep), &group.inverse(g));
            match map.insert(conj, idx) {
                None => size += 1,
                Some(prev) if prev == idx => {}
                Some(prev) => {
                    return Err(Error::TableInvalid(format!(
                        "declared classes {prev} and {idx} overlap"
                    )))
                }
            }
        }
        if size != doc.size {
            return Err(Error::TableInvalid(format!(
                "class {idx}: declared size {} but orbit has size {size}",
                doc.size
            )));
        }
        let order = group.element_order(&rep);
        if order != doc.order {
            return Err(Error::TableInvalid(format!(
                "class {idx}: declared element order {} but representative has order {order}",
                doc.order
            )));
        }
        exponent = crate::group::lcm_u64(exponent, order);
        infos.push(ClassInfo { rep, size, element_order: order });
    }
    if map.len() != elems.len() {
        return Err(Error::TableInvalid(
            "declared classes do not partition the group".into(),
        ));
    }
    Ok(ConjClassData::new(infos, exponent, ClassLookup::Dense(map)))
}
