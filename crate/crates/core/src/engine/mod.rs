//! Success probabilities and query complexities for group oracle problems.
//!
//! Identification of a hidden group element ("sod" mode) succeeds at `t`
//! queries with probability `(sum of deg^2 over I(V^t)) / |G|`. Identifying
//! only the coset of a subgroup H succeeds with probability
//! `max over Y in Irr(H) of dim (Y^)_{V^t} / dim Y^`, where `Y^` is the
//! representation induced from Y and `(A)_B` keeps the isotypic components
//! of A shared with B. Exact complexity is the least t whose criterion
//! holds; the support iteration's cycle detection certifies when no t
//! works at all.
//!
//! Everything here is exact rational arithmetic on character data. Two
//! special paths avoid tables entirely: symmetric-group problems can run
//! on partition data ([`sn_path`]), which also covers alternating groups
//! and the sign-of-a-permutation problem.

pub mod base_size;
pub mod sn_path;
pub mod zhandry;

use std::collections::HashMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::chartab::constructors::char_table_for;
use crate::chartab::CharacterTable;
use crate::cyclotomic::{format_rational, parse_rational, Cyclotomic};
use crate::error::{Error, Result};
use crate::group::{build_fusion, natural_action, translation_action, Elem, Group, GroupSpec};
use crate::repcalc::{
    character_diagnostics, perm_character, power_support, restrict, ClassFunction, CosetSetup,
    IrrepSet, PowerContext, PowerTrace, TraceStatus,
};

pub use base_size::classical_base_size;
pub use sn_path::SnPartitionPath;

// ---------------------------------------------------------------------------
// problem specification
// ---------------------------------------------------------------------------

/// Where the representation V comes from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepSource {
    /// The family's standard permutation action.
    Natural,
    /// The regular action of the group on itself.
    Regular,
    /// Explicit class-function values, as cyclotomic strings over the
    /// table conductor.
    Character { values: Vec<String> },
    /// Sum of irreducible rows named by label, multiplicity one each.
    IrrepSum { labels: Vec<String> },
}

/// Subgroup designators: the named shortcuts used by the worked examples,
/// or an explicit embedding.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubgroupChoice {
    /// H = {e}: coset identification degenerates to full identification.
    Trivial,
    /// The normal four-group inside the symmetric group on 4 points.
    Klein4,
    /// The center of a Heisenberg group.
    Center,
    /// Functions summing to zero inside a function group.
    ZeroSum,
    /// The alternating subgroup of a symmetric group; naming the coset is
    /// naming the sign.
    Alternating,
    /// Any family subgroup with a full element-to-element embedding map.
    Explicit { group: GroupSpec, embedding: Vec<EmbedPair> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmbedPair {
    pub h: Vec<u64>,
    pub g: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Sod,
    Coset { subgroup: SubgroupChoice },
}

fn default_rep() -> RepSource {
    RepSource::Natural
}

fn default_threshold() -> String {
    "2/3".to_string()
}

/// A full problem statement, serializable as JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub group: GroupSpec,
    #[serde(default = "default_rep")]
    pub rep: RepSource,
    pub mode: Mode,
    /// Bounded-error threshold, a rational in (1/2, 1].
    #[serde(default = "default_threshold")]
    pub threshold: String,
}

impl ProblemSpec {
    pub fn sod(group: GroupSpec) -> Self {
        ProblemSpec {
            group,
            rep: RepSource::Natural,
            mode: Mode::Sod,
            threshold: default_threshold(),
        }
    }

    pub fn coset(group: GroupSpec, subgroup: SubgroupChoice) -> Self {
        ProblemSpec {
            group,
            rep: RepSource::Natural,
            mode: Mode::Coset { subgroup },
            threshold: default_threshold(),
        }
    }

    pub fn threshold_value(&self) -> Result<BigRational> {
        let t = parse_rational(&self.threshold)?;
        let half = BigRational::new(1.into(), 2.into());
        if t <= half || t > BigRational::one() {
            return Err(Error::Parameter(format!(
                "threshold {} outside (1/2, 1]",
                self.threshold
            )));
        }
        Ok(t)
    }
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

/// Exact query complexity: attained at a finite t, provably unattainable
/// (with the support cycle as certificate), or undecided at the cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Complexity {
    Finite { t: u64 },
    Infinite { cycle_start: u64, cycle_period: u64 },
    CapHit,
}

impl Complexity {
    pub fn finite(&self) -> Option<u64> {
        match self {
            Complexity::Finite { t } => Some(*t),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub t: u64,
    /// Exact success probability "num/den".
    pub probability: String,
    /// Maximizing subgroup-irreducible labels (coset mode only).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
    pub support_size: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QueryReport {
    pub problem: ProblemSpec,
    /// Which computation route produced the numbers: "character-table",
    /// "alternating-partition", or "sign-pair".
    pub path: String,
    pub rows: Vec<ReportRow>,
    pub gamma: Complexity,
    pub gamma_bdd: Complexity,
    pub threshold: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_size: Option<u64>,
    /// For faithful V: every irreducible shows up in some tensor power
    /// below this bound (the number of distinct character values);
    /// diagnostic only, cycle detection is what certifies unreachability.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power_cover_bound: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

// ---------------------------------------------------------------------------
// generic engine over a character table
// ---------------------------------------------------------------------------

/// Dimension-squared mass of a support set over the group order: the
/// identification probability once the support is known.
pub fn sod_success_at(table: &CharacterTable, set: &IrrepSet) -> BigRational {
    let num: num_bigint::BigInt = set
        .iter()
        .map(|i| {
            let d = num_bigint::BigInt::from(table.degree(i));
            d.clone() * d
        })
        .sum();
    BigRational::new(num, table.order().into())
}

/// Coset-mode evaluator: memoizes the decomposition of each restricted
/// parent row over the subgroup rows, everything through exact reciprocity.
pub struct CosetEngine {
    pub setup: CosetSetup,
    decomp: Vec<Option<Arc<Vec<u64>>>>,
    dense: Option<DenseReciprocity>,
}

/// Machine-integer staging for the reciprocity inner products: subgroup
/// rows conjugated and embedded once, so each multiplicity is a weighted
/// dot product. Absent when any coordinate falls outside machine range,
/// in which case the exact generic path runs instead.
struct DenseReciprocity {
    ops: crate::cyclotomic::FieldOps,
    sizes: Vec<i128>,
    h_rows_conj: Vec<Vec<Vec<i128>>>,
}

impl DenseReciprocity {
    fn build(setup: &CosetSetup) -> Option<Self> {
        let m = crate::group::lcm_u64(setup.g_table.conductor, setup.h_table.conductor);
        let ops = crate::cyclotomic::FieldOps::new(m);
        let sizes: Vec<i128> = setup
            .h_table
            .classes
            .classes
            .iter()
            .map(|c| c.size as i128)
            .collect();
        let h_rows_conj: Option<Vec<Vec<Vec<i128>>>> = setup
            .h_table
            .irreps
            .iter()
            .map(|chi| {
                chi.values
                    .iter()
                    .map(|v| ops.conj_dense_int(&ops.to_dense_int(v)?))
                    .collect()
            })
            .collect();
        Some(DenseReciprocity { ops, sizes, h_rows_conj: h_rows_conj? })
    }

    /// Multiplicities of every subgroup row in a restricted row; `None`
    /// falls back to the generic path.
    fn decompose(
        &self,
        restricted: &crate::repcalc::ClassFunction,
        h_table: &CharacterTable,
        degree: u64,
    ) -> Option<Vec<u64>> {
        use num_traits::ToPrimitive;
        let dense: Option<Vec<Vec<i128>>> = restricted
            .values
            .iter()
            .map(|v| self.ops.to_dense_int(v))
            .collect();
        let dense = dense?;
        let mut exp_acc = vec![0i128; self.ops.exponent_space_len()];
        let mut row = vec![0u64; h_table.irrep_count()];
        let mut remaining = degree;
        for (y, h_row) in self.h_rows_conj.iter().enumerate() {
            if remaining == 0 {
                break;
            }
            exp_acc.fill(0);
            for ((a, b), &w) in dense.iter().zip(h_row).zip(&self.sizes) {
                self.ops.conv_exp_int(a, b, w, &mut exp_acc)?;
            }
            let folded = self.ops.fold_exp_int(&exp_acc)?;
            let value = self.ops.make_int(folded, h_table.order());
            let q = value.as_rational()?;
            if !q.is_integer() || q < num_rational::BigRational::zero() {
                return None;
            }
            let mult = q.to_integer().to_u64()?;
            row[y] = mult;
            remaining = remaining.saturating_sub(mult * h_table.degree(y));
        }
        Some(row)
    }
}

impl CosetEngine {
    pub fn new(setup: CosetSetup) -> Self {
        let n = setup.g_table.irrep_count();
        let dense = DenseReciprocity::build(&setup);
        CosetEngine { setup, decomp: vec![None; n], dense }
    }

    pub fn g_table(&self) -> &Arc<CharacterTable> {
        &self.setup.g_table
    }

    pub fn h_table(&self) -> &Arc<CharacterTable> {
        &self.setup.h_table
    }

    /// Multiplicities of every subgroup row inside the restriction of
    /// parent row `i`, with an early exit once the dimension is used up.
    pub fn restriction_multiplicities(&mut self, i: usize) -> Result<Arc<Vec<u64>>> {
        if let Some(row) = &self.decomp[i] {
            return Ok(row.clone());
        }
        let restricted = restrict(
            &ClassFunction::irrep(self.setup.g_table.clone(), i),
            &self.setup,
        )?;
        let degree = self.setup.g_table.degree(i);
        let row = match self
            .dense
            .as_ref()
            .and_then(|d| d.decompose(&restricted, &self.setup.h_table, degree))
        {
            Some(row) => row,
            None => {
                let h_count = self.setup.h_table.irrep_count();
                let mut row = vec![0u64; h_count];
                let mut remaining = degree;
                for (y, slot) in row.iter_mut().enumerate() {
                    if remaining == 0 {
                        break;
                    }
                    let m = crate::repcalc::inner_product(
                        &restricted,
                        &ClassFunction::irrep(self.setup.h_table.clone(), y),
                    )?;
                    let mult = rational_to_u64(&m)?;
                    *slot = mult;
                    remaining = remaining.saturating_sub(mult * self.setup.h_table.degree(y));
                }
                row
            }
        };
        let arc = Arc::new(row);
        self.decomp[i] = Some(arc.clone());
        Ok(arc)
    }

    /// Irreducibles of G appearing in the representation induced from the
    /// subgroup row `y` (positive restriction multiplicity, by reciprocity).
    pub fn induced_support(&mut self, y: usize) -> Result<IrrepSet> {
        let mut set = IrrepSet::empty(self.setup.g_table.irrep_count());
        for i in 0..self.setup.g_table.irrep_count() {
            if self.restriction_multiplicities(i)?[y] > 0 {
                set.insert(i);
            }
        }
        Ok(set)
    }

    /// Optimal success probability given the power support, with every
    /// maximizing subgroup row (ties kept in row-label order).
    pub fn success(&mut self, set: &IrrepSet) -> Result<(BigRational, Vec<usize>)> {
        let h_count = self.setup.h_table.irrep_count();
        let index = self.setup.index();
        let mut best = BigRational::zero();
        let mut argmax = Vec::new();
        for y in 0..h_count {
            let mut num = num_bigint::BigInt::from(0u64);
            for i in set.iter() {
                let mult = self.restriction_multiplicities(i)?[y];
                if mult > 0 {
                    num += num_bigint::BigInt::from(mult) * self.setup.g_table.degree(i);
                }
            }
            let den = num_bigint::BigInt::from(index) * self.setup.h_table.degree(y);
            let p = BigRational::new(num, den);
            if p > best {
                best = p.clone();
                argmax = vec![y];
            } else if p == best && !p.is_zero() {
                argmax.push(y);
            }
        }
        Ok((best, argmax))
    }

    /// Zero-error criterion: some subgroup row induces inside the support.
    pub fn zero_error_at(&mut self, set: &IrrepSet) -> Result<bool> {
        for y in 0..self.setup.h_table.irrep_count() {
            if self.induced_support(y)?.is_subset_of(set) {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn rational_to_u64(q: &BigRational) -> Result<u64> {
    use num_traits::{Signed, ToPrimitive};
    if !q.is_integer() || q.is_negative() {
        return Err(Error::NotACharacter(format!(
            "multiplicity {q} is not a nonnegative integer"
        )));
    }
    q.to_integer()
        .to_u64()
        .ok_or_else(|| Error::NotACharacter("multiplicity out of range".into()))
}

// ---------------------------------------------------------------------------
// realizing a problem spec
// ---------------------------------------------------------------------------

/// A spec turned into concrete objects: the table, the character V, the
/// optional coset machinery, and the optional permutation action.
pub struct Realized {
    pub g_table: Arc<CharacterTable>,
    pub v: ClassFunction,
    pub coset: Option<CosetEngine>,
    pub action: Option<crate::group::GroupAction>,
    pub warnings: Vec<String>,
}

/// Build the representation character from its source.
pub fn build_rep(
    g_table: &Arc<CharacterTable>,
    group: &Group,
    rep: &RepSource,
) -> Result<(ClassFunction, Option<crate::group::GroupAction>)> {
    match rep {
        RepSource::Natural => {
            let action = natural_action(group)?;
            let v = perm_character(&action, g_table)?;
            Ok((v, Some(action)))
        }
        RepSource::Regular => {
            let action = translation_action(group)?;
            let v = perm_character(&action, g_table)?;
            Ok((v, Some(action)))
        }
        RepSource::Character { values } => {
            let parsed: Vec<Cyclotomic> = values
                .iter()
                .map(|s| Cyclotomic::parse(s, g_table.conductor))
                .collect::<Result<_>>()?;
            Ok((ClassFunction::new(g_table.clone(), parsed)?, None))
        }
        RepSource::IrrepSum { labels } => {
            let indices: Vec<usize> = labels
                .iter()
                .map(|l| {
                    g_table
                        .index_of_label(l)
                        .ok_or_else(|| Error::Parameter(format!("unknown irrep label '{l}'")))
                })
                .collect::<Result<_>>()?;
            Ok((ClassFunction::sum_of_irreps(g_table.clone(), &indices), None))
        }
    }
}

/// Construct the subgroup table and fusion for a subgroup choice.
pub fn build_subgroup(g_table: &Arc<CharacterTable>, choice: &SubgroupChoice) -> Result<CosetSetup> {
    let g_group = g_table.group.clone();
    let (h_group, embed): (Group, Box<dyn Fn(&Elem) -> Elem>) = match choice {
        SubgroupChoice::Trivial => {
            let h = Group::new(GroupSpec::AbelianProduct { orders: vec![] })?;
            let id = g_group.identity();
            (h, Box::new(move |_| id.clone()))
        }
        SubgroupChoice::Klein4 => {
            if !matches!(g_group.spec(), GroupSpec::Symmetric { n: 4 }) {
                return Err(Error::Parameter(
                    "klein4 subgroup shortcut needs the symmetric group on 4 points".into(),
                ));
            }
            let h = Group::new(GroupSpec::AbelianProduct { orders: vec![2, 2] })?;
            (h, Box::new(klein4_embedding))
        }
        SubgroupChoice::Center => {
            let GroupSpec::Heisenberg { p, n } = *g_group.spec() else {
                return Err(Error::Parameter(
                    "center subgroup shortcut needs a Heisenberg group".into(),
                ));
            };
            let h = Group::new(GroupSpec::AbelianProduct { orders: vec![p] })?;
            let len = 2 * n as usize + 1;
            (
                h,
                Box::new(move |z: &Elem| {
                    let mut triple = vec![0u64; len];
                    triple[len - 1] = z.0[0];
                    Elem(triple)
                }),
            )
        }
        SubgroupChoice::ZeroSum => {
            let GroupSpec::FunctionGroup { k, orders } = g_group.spec().clone() else {
                return Err(Error::Parameter(
                    "zero_sum subgroup shortcut needs a function group".into(),
                ));
            };
            if k < 2 {
                return Err(Error::Parameter("zero_sum needs k >= 2 slots".into()));
            }
            let mut h_orders = Vec::with_capacity((k as usize - 1) * orders.len());
            for _ in 0..k - 1 {
                h_orders.extend_from_slice(&orders);
            }
            let h = Group::new(GroupSpec::AbelianProduct { orders: h_orders })?;
            let r = orders.len();
            (
                h,
                Box::new(move |a: &Elem| {
                    let mut f = Vec::with_capacity(k as usize * r);
                    f.extend_from_slice(&a.0);
                    for j in 0..r {
                        let mut sum = 0u64;
                        for i in 0..(k as usize - 1) {
                            sum = (sum + a.0[i * r + j]) % orders[j];
                        }
                        f.push((orders[j] - sum) % orders[j]);
                    }
                    Elem(f)
                }),
            )
        }
        SubgroupChoice::Alternating => {
            return Err(Error::Parameter(
                "the alternating subgroup runs on the partition path, not a table".into(),
            ));
        }
        SubgroupChoice::Explicit { group, embedding } => {
            let h = Group::new(group.clone())?;
            if embedding.len() as u64 != h.order() {
                return Err(Error::Embedding(format!(
                    "embedding lists {} elements for a subgroup of order {}",
                    embedding.len(),
                    h.order()
                )));
            }
            let map: HashMap<Elem, Elem> = embedding
                .iter()
                .map(|p| (Elem(p.h.clone()), Elem(p.g.clone())))
                .collect();
            (
                h,
                Box::new(move |e: &Elem| map.get(e).cloned().unwrap_or_else(|| Elem(vec![]))),
            )
        }
    };
    let h_table = Arc::new(char_table_for(&h_group)?);
    let h_classes = h_table.classes.clone();
    let fusion = build_fusion(&g_group, &g_table.classes, &h_group, &h_classes, |e| embed(e))?;
    CosetSetup::new(g_table.clone(), h_table, fusion)
}

/// The Klein four-group {e, (01)(23), (02)(13), (03)(12)} as images of the
/// two-generator tuple group.
pub fn klein4_embedding(h: &Elem) -> Elem {
    let g1 = [1u64, 0, 3, 2];
    let g2 = [2u64, 3, 0, 1];
    let mut img: Vec<u64> = (0..4).collect();
    if h.0[0] == 1 {
        img = img.iter().map(|&i| g1[i as usize]).collect();
    }
    if h.0[1] == 1 {
        img = img.iter().map(|&i| g2[i as usize]).collect();
    }
    Elem(img)
}

/// Realize a generic (table-path) problem.
pub fn realize(spec: &ProblemSpec) -> Result<Realized> {
    let group = Group::new(spec.group.clone())?;
    let g_table = Arc::new(char_table_for(&group)?);
    let (v, action) = build_rep(&g_table, &group, &spec.rep)?;
    let mut warnings = Vec::new();
    let coset = match &spec.mode {
        Mode::Sod => None,
        Mode::Coset { subgroup } => Some(CosetEngine::new(build_subgroup(&g_table, subgroup)?)),
    };
    if let GroupSpec::Alternating { n } = spec.group {
        if n < 4 {
            warnings.push(format!("alternating degree {n} is below the analysed range"));
        }
    }
    Ok(Realized { g_table, v, coset, action, warnings })
}

// ---------------------------------------------------------------------------
// solving
// ---------------------------------------------------------------------------

fn scan_trace(
    trace: &PowerTrace,
    mut criterion: impl FnMut(&IrrepSet) -> Result<bool>,
) -> Result<Complexity> {
    for (idx, set) in trace.supports.iter().enumerate() {
        if criterion(set)? {
            return Ok(Complexity::Finite { t: idx as u64 + 1 });
        }
    }
    Ok(match trace.status {
        TraceStatus::ReachedFull { .. } => {
            debug_assert!(false, "criterion must hold at the full support");
            Complexity::CapHit
        }
        TraceStatus::Cycle { start, period } => {
            Complexity::Infinite { cycle_start: start, cycle_period: period }
        }
        TraceStatus::CapHit => Complexity::CapHit,
    })
}

/// Solve a problem end to end: per-t probabilities for `1..=t_max`, the
/// exact and bounded-error complexities, and the classical base size when
/// the representation came from an action.
pub fn solve(spec: &ProblemSpec, t_max: u64) -> Result<QueryReport> {
    let threshold = spec.threshold_value()?;
    // special paths without character tables
    match (&spec.group, &spec.mode, &spec.rep) {
        (
            GroupSpec::Symmetric { n },
            Mode::Coset { subgroup: SubgroupChoice::Alternating },
            RepSource::Natural,
        ) => return solve_sign(spec, *n, t_max, &threshold),
        (GroupSpec::Alternating { n }, Mode::Sod, RepSource::Natural) => {
            return solve_alternating(spec, *n, t_max, &threshold)
        }
        (GroupSpec::Alternating { .. }, _, _) => {
            return Err(Error::Parameter(
                "alternating groups are only supported with the natural action, in \
                 identification mode or as the sign subgroup of a symmetric group"
                    .into(),
            ))
        }
        _ => {}
    }
    solve_generic(spec, t_max, &threshold)
}

fn solve_generic(spec: &ProblemSpec, t_max: u64, threshold: &BigRational) -> Result<QueryReport> {
    let mut realized = realize(spec)?;
    let (distinct_values, faithful) = character_diagnostics(&realized.v);
    let mut power = PowerContext::new(realized.v.clone())?;
    let trace = power.trace(t_max)?;

    let mut rows = Vec::new();
    for t in 1..=t_max {
        let Some(set) = trace.support_at(t) else {
            realized
                .warnings
                .push(format!("support iteration capped before t = {t}"));
            break;
        };
        let (probability, witnesses) = match &mut realized.coset {
            None => (sod_success_at(&realized.g_table, set), Vec::new()),
            Some(engine) => {
                let (p, argmax) = engine.success(set)?;
                let labels = argmax
                    .iter()
                    .map(|&y| engine.h_table().irreps[y].label.to_string())
                    .collect();
                (p, labels)
            }
        };
        rows.push(ReportRow {
            t,
            probability: format_rational(&probability),
            witnesses,
            support_size: set.count() as u64,
        });
    }

    let gamma = match &mut realized.coset {
        None => scan_trace(&trace, |set| Ok(set.is_full()))?,
        Some(engine) => scan_trace(&trace, |set| engine.zero_error_at(set))?,
    };
    let gamma_bdd = match &mut realized.coset {
        None => scan_trace(&trace, |set| {
            Ok(sod_success_at(&realized.g_table, set) >= *threshold)
        })?,
        Some(engine) => scan_trace(&trace, |set| Ok(engine.success(set)?.0 >= *threshold))?,
    };

    let base_size = match &realized.action {
        Some(action) => Some(classical_base_size(action)?),
        None => None,
    };

    Ok(QueryReport {
        problem: spec.clone(),
        path: "character-table".into(),
        rows,
        gamma,
        gamma_bdd,
        threshold: spec.threshold.clone(),
        base_size,
        power_cover_bound: if faithful {
            Some(distinct_values as u64 - 1)
        } else {
            None
        },
        warnings: realized.warnings,
    })
}

fn solve_sign(
    spec: &ProblemSpec,
    n: u32,
    t_max: u64,
    threshold: &BigRational,
) -> Result<QueryReport> {
    let mut path = SnPartitionPath::new(n)?;
    let mut rows = Vec::new();
    for t in 1..=t_max {
        let (p, witness) = path.sign_success(t);
        let witnesses = witness
            .map(|w| {
                let conj = w.conjugate();
                let mut labels = vec![crate::chartab::Label::Partition(w).to_string()];
                let conj_label = crate::chartab::Label::Partition(conj).to_string();
                if labels[0] != conj_label {
                    labels.push(conj_label);
                }
                labels
            })
            .unwrap_or_default();
        rows.push(ReportRow {
            t,
            probability: format_rational(&p),
            witnesses,
            support_size: path.support_labels(t).len() as u64,
        });
    }
    let gamma = Complexity::Finite { t: path.sign_gamma() };
    let gamma_bdd = {
        let mut t = 1;
        loop {
            if path.sign_success(t).0 >= *threshold {
                break Complexity::Finite { t };
            }
            t += 1;
        }
    };
    let group = Group::new(spec.group.clone())?;
    let base_size = Some(classical_base_size(&natural_action(&group)?)?);
    Ok(QueryReport {
        problem: spec.clone(),
        path: "sign-pair".into(),
        rows,
        gamma,
        gamma_bdd,
        threshold: spec.threshold.clone(),
        base_size,
        power_cover_bound: None,
        warnings: Vec::new(),
    })
}

fn solve_alternating(
    spec: &ProblemSpec,
    n: u32,
    t_max: u64,
    threshold: &BigRational,
) -> Result<QueryReport> {
    let mut path = SnPartitionPath::new(n)?;
    let mut warnings = Vec::new();
    if n < 4 {
        warnings.push(format!(
            "alternating degree {n} is below the analysed range; the pairing rule still \
             applies and is cross-checked against the abelian route"
        ));
    }
    let mut rows = Vec::new();
    for t in 1..=t_max {
        let p = path.an_success(t);
        rows.push(ReportRow {
            t,
            probability: format_rational(&p),
            witnesses: Vec::new(),
            support_size: path.support_labels(t).len() as u64,
        });
    }
    let gamma = Complexity::Finite { t: path.an_gamma() };
    let gamma_bdd = {
        let mut t = 1;
        loop {
            if path.an_success(t) >= *threshold {
                break Complexity::Finite { t };
            }
            t += 1;
        }
    };
    let group = Group::new(spec.group.clone())?;
    let base_size = Some(classical_base_size(&natural_action(&group)?)?);
    Ok(QueryReport {
        problem: spec.clone(),
        path: "alternating-partition".into(),
        rows,
        gamma,
        gamma_bdd,
        threshold: spec.threshold.clone(),
        base_size,
        power_cover_bound: None,
        warnings,
    })
}

// ---------------------------------------------------------------------------
// per-operation wrappers
// ---------------------------------------------------------------------------

/// Identification success probability at exactly t queries.
pub fn sod_success(spec: &ProblemSpec, t: u64) -> Result<BigRational> {
    let realized = realize(spec)?;
    let set = power_support(&realized.v, t)?;
    Ok(sod_success_at(&realized.g_table, &set))
}

/// Coset success probability at exactly t queries, with maximizing labels.
pub fn coset_success(spec: &ProblemSpec, t: u64) -> Result<(BigRational, Vec<String>)> {
    let mut realized = realize(spec)?;
    let engine = realized
        .coset
        .as_mut()
        .ok_or_else(|| Error::Parameter("not a coset problem".into()))?;
    let set = power_support(&realized.v, t)?;
    let (p, argmax) = engine.success(&set)?;
    let labels = argmax
        .iter()
        .map(|&y| engine.h_table().irreps[y].label.to_string())
        .collect();
    Ok((p, labels))
}

/// Alternating-group identification probability from partition data.
pub fn an_sod_success(n: u32, t: u64) -> Result<BigRational> {
    Ok(SnPartitionPath::new(n)?.an_success(t))
}
