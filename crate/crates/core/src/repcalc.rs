//! Class-function calculus over a fixed character table.
//!
//! The central object is the support set I(V): the irreducibles appearing
//! in a character V with positive multiplicity. Query probabilities only
//! ever depend on supports of tensor powers, so the workhorse here is
//! [`PowerContext`], which iterates the support map
//! `I -> union over psi in I of I(psi (x) V)` with memoization and cycle
//! detection. The map is deterministic on subsets, so a repeated subset
//! proves the whole trajectory is eventually periodic; reaching the full
//! set is absorbing.

use std::collections::HashMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Signed;

use crate::chartab::CharacterTable;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{ClassFusion, GroupAction};

/// A class function on the classes of a fixed table.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    pub table: Arc<CharacterTable>,
    pub values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(table: Arc<CharacterTable>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != table.class_count() {
            return Err(Error::TableMismatch(format!(
                "{} values for {} classes",
                values.len(),
                table.class_count()
            )));
        }
        Ok(ClassFunction { table, values })
    }

    pub fn irrep(table: Arc<CharacterTable>, i: usize) -> Self {
        let values = table.irreps[i].values.clone();
        ClassFunction { table, values }
    }

    /// Sum of irreducible rows with multiplicity one each.
    pub fn sum_of_irreps(table: Arc<CharacterTable>, indices: &[usize]) -> Self {
        let mut values = vec![Cyclotomic::zero(); table.class_count()];
        for &i in indices {
            for (v, w) in values.iter_mut().zip(&table.irreps[i].values) {
                *v = v.add(w);
            }
        }
        ClassFunction { table, values }
    }

    pub fn degree(&self) -> Result<BigRational> {
        self.values[0]
            .as_rational()
            .ok_or_else(|| Error::NotRational("value at identity".into()))
    }
}

fn same_table(a: &CharacterTable, b: &CharacterTable) -> bool {
    a.group.spec() == b.group.spec() && a.class_count() == b.class_count()
}

/// Permutation character of an action: the value on a class is the number
/// of fixed points of its representative.
pub fn perm_character(action: &GroupAction, table: &Arc<CharacterTable>) -> Result<ClassFunction> {
    if action.group().spec() != table.group.spec() {
        return Err(Error::TableMismatch(
            "action group does not match table group".into(),
        ));
    }
    if !table.has_element_data {
        return Err(Error::TableMismatch(
            "table has no class representatives".into(),
        ));
    }
    let values = table
        .classes
        .classes
        .iter()
        .map(|info| Cyclotomic::from_integer(action.fixed_points(&info.rep) as i64))
        .collect();
    ClassFunction::new(table.clone(), values)
}

/// Exact inner product (1/|G|) sum size * a * conj(b); rational for the
/// class functions arising here, an error otherwise.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<BigRational> {
    if !same_table(&a.table, &b.table) {
        return Err(Error::TableMismatch("inner product across tables".into()));
    }
    let ip = a.table.inner_product_values(&a.values, &b.values);
    ip.as_rational()
        .ok_or_else(|| Error::NotRational(format!("inner product value {ip}")))
}

/// Pointwise product: the character of the tensor product.
pub fn tensor(a: &ClassFunction, b: &ClassFunction) -> Result<ClassFunction> {
    if !same_table(&a.table, &b.table) {
        return Err(Error::TableMismatch("tensor across tables".into()));
    }
    let values = a
        .values
        .iter()
        .zip(&b.values)
        .map(|(x, y)| x.mul(y))
        .collect();
    ClassFunction::new(a.table.clone(), values)
}

/// A subgroup pairing: the parent table, the subgroup table, and the class
/// fusion between them.
#[derive(Clone)]
pub struct CosetSetup {
    pub g_table: Arc<CharacterTable>,
    pub h_table: Arc<CharacterTable>,
    pub fusion: ClassFusion,
}

impl CosetSetup {
    pub fn new(
        g_table: Arc<CharacterTable>,
        h_table: Arc<CharacterTable>,
        fusion: ClassFusion,
    ) -> Result<Self> {
        if fusion.h_classes.len() != h_table.class_count() {
            return Err(Error::TableMismatch(
                "fusion class data does not match subgroup table".into(),
            ));
        }
        if fusion
            .fusion
            .iter()
            .any(|&gc| gc >= g_table.class_count())
        {
            return Err(Error::TableMismatch(
                "fusion targets classes outside the parent table".into(),
            ));
        }
        Ok(CosetSetup { g_table, h_table, fusion })
    }

    pub fn index(&self) -> u64 {
        self.fusion.index
    }
}

/// Restrict a class function on G to H along the fusion map.
pub fn restrict(chi: &ClassFunction, setup: &CosetSetup) -> Result<ClassFunction> {
    if !same_table(&chi.table, &setup.g_table) {
        return Err(Error::TableMismatch("restriction from a different table".into()));
    }
    let values = setup
        .fusion
        .fusion
        .iter()
        .map(|&gc| chi.values[gc].clone())
        .collect();
    ClassFunction::new(setup.h_table.clone(), values)
}

/// Multiplicity of the G-irreducible `chi` inside the representation
/// induced from the H-irreducible `y`, computed through reciprocity as the
/// multiplicity of `y` in the restriction of `chi`.
pub fn induced_multiplicity(y: usize, chi: usize, setup: &CosetSetup) -> Result<u64> {
    let restricted = restrict(&ClassFunction::irrep(setup.g_table.clone(), chi), setup)?;
    let m = inner_product(
        &restricted,
        &ClassFunction::irrep(setup.h_table.clone(), y),
    )?;
    rational_to_multiplicity(&m)
}

fn rational_to_multiplicity(q: &BigRational) -> Result<u64> {
    use num_traits::ToPrimitive;
    if !q.is_integer() || q.is_negative() {
        return Err(Error::NotACharacter(format!(
            "multiplicity {q} is not a nonnegative integer"
        )));
    }
    q.to_integer()
        .to_u64()
        .ok_or_else(|| Error::NotACharacter("multiplicity out of range".into()))
}

/// A subset of the irreducibles of a fixed table, as a bitset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IrrepSet {
    len: usize,
    bits: Vec<u64>,
}

impl IrrepSet {
    pub fn empty(len: usize) -> Self {
        IrrepSet { len, bits: vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn union_with(&mut self, other: &IrrepSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn is_subset_of(&self, other: &IrrepSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    pub fn complement(&self) -> IrrepSet {
        let mut out = Self::full(self.len);
        for i in self.iter() {
            out.bits[i / 64] &= !(1 << (i % 64));
        }
        out
    }
}

/// Support of a genuine character: irreducibles with positive multiplicity.
pub fn support(chi: &ClassFunction) -> Result<IrrepSet> {
    let mut set = IrrepSet::empty(chi.table.irrep_count());
    for i in 0..chi.table.irrep_count() {
        let m = inner_product(chi, &ClassFunction::irrep(chi.table.clone(), i))?;
        let mult = rational_to_multiplicity(&m)?;
        if mult > 0 {
            set.insert(i);
        }
    }
    Ok(set)
}

/// How a tensor-power support trace ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceStatus {
    /// All irreducibles were reached at the given query count; full sets
    /// are absorbing.
    ReachedFull { t: u64 },
    /// The subset at `start` reappeared `period` steps later without ever
    /// being full; the trajectory repeats forever.
    Cycle { start: u64, period: u64 },
    /// The iteration cap was hit before either of the above.
    CapHit,
}

/// The sequence I(V), I(V^2), ... with its termination status.
#[derive(Clone, Debug)]
pub struct PowerTrace {
    /// supports[i] = I(V^(i+1)).
    pub supports: Vec<IrrepSet>,
    pub status: TraceStatus,
}

impl PowerTrace {
    /// Support of the t-th tensor power (t >= 1), extrapolating past the
    /// stored prefix through the absorbing or periodic tail.
    pub fn support_at(&self, t: u64) -> Option<&IrrepSet> {
        assert!(t >= 1);
        let idx = (t - 1) as usize;
        if idx < self.supports.len() {
            return Some(&self.supports[idx]);
        }
        match self.status {
            TraceStatus::ReachedFull { .. } => self.supports.last(),
            TraceStatus::Cycle { start, period } => {
                let wrapped = start + (t - start) % period;
                Some(&self.supports[(wrapped - 1) as usize])
            }
            TraceStatus::CapHit => None,
        }
    }
}

/// Memoized support-map iteration for a fixed character V.
pub struct PowerContext {
    pub table: Arc<CharacterTable>,
    pub v: ClassFunction,
    v_support: IrrepSet,
    step_memo: HashMap<usize, IrrepSet>,
}

impl PowerContext {
    pub fn new(v: ClassFunction) -> Result<Self> {
        let v_support = support(&v)?;
        Ok(PowerContext { table: v.table.clone(), v, v_support, step_memo: HashMap::new() })
    }

    pub fn v_support(&self) -> &IrrepSet {
        &self.v_support
    }

    /// I(chi_i (x) V). For abelian tables the product of irreducibles is a
    /// single row, found by label addition; otherwise the support is an
    /// exact inner-product decomposition.
    fn step_of(&mut self, i: usize) -> Result<IrrepSet> {
        if let Some(s) = self.step_memo.get(&i) {
            return Ok(s.clone());
        }
        let set = if self.table.abelian_labels.is_some() {
            let mut set = IrrepSet::empty(self.table.irrep_count());
            for a in self.v_support.iter() {
                let target = self
                    .table
                    .tensor_irreps_fast(i, a)
                    .ok_or_else(|| Error::TableMismatch("abelian label lookup failed".into()))?;
                set.insert(target);
            }
            set
        } else {
            let prod = tensor(&ClassFunction::irrep(self.table.clone(), i), &self.v)?;
            support(&prod)?
        };
        self.step_memo.insert(i, set.clone());
        Ok(set)
    }

    fn advance(&mut self, cur: &IrrepSet) -> Result<IrrepSet> {
        let mut next = IrrepSet::empty(cur.len());
        for i in cur.iter() {
            let step = self.step_of(i)?;
            next.union_with(&step);
        }
        Ok(next)
    }

    /// Iterate the support map until the full set, a repeated subset, or
    /// the cap; always records at least `t_min` powers when possible.
    pub fn trace(&mut self, t_min: u64) -> Result<PowerTrace> {
        let cap = crate::caps::power_iteration_cap(self.table.irrep_count()).max(t_min);
        let mut supports = vec![self.v_support.clone()];
        let mut seen: HashMap<IrrepSet, u64> = HashMap::new();
        seen.insert(self.v_support.clone(), 1);
        loop {
            let t = supports.len() as u64;
            let last = supports.last().unwrap();
            if last.is_full() && t >= t_min {
                return Ok(PowerTrace { supports, status: TraceStatus::ReachedFull { t } });
            }
            if t >= cap {
                return Ok(PowerTrace { supports, status: TraceStatus::CapHit });
            }
            let next = self.advance(supports.last().unwrap())?;
            let t_next = t + 1;
            if let Some(&start) = seen.get(&next) {
                if t_next >= t_min || next.is_full() {
                    let status = if next.is_full() {
                        TraceStatus::ReachedFull { t: start }
                    } else {
                        TraceStatus::Cycle { start, period: t_next - start }
                    };
                    supports.push(next);
                    return Ok(PowerTrace { supports, status });
                }
            } else {
                seen.insert(next.clone(), t_next);
            }
            supports.push(next);
        }
    }
}

/// I(V^t) in one call.
pub fn power_support(v: &ClassFunction, t: u64) -> Result<IrrepSet> {
    let mut ctx = PowerContext::new(v.clone())?;
    let trace = ctx.trace(t)?;
    trace
        .support_at(t)
        .cloned()
        .ok_or_else(|| Error::CapExceeded(format!("power iteration cap before t = {t}")))
}

/// Number of distinct values of a class function (the bound parameter in
/// the classical everything-appears-in-some-power statement), and whether
/// the character is faithful (kernel classes = identity class only).
pub fn character_diagnostics(chi: &ClassFunction) -> (usize, bool) {
    let mut distinct: Vec<&Cyclotomic> = Vec::new();
    for v in &chi.values {
        if !distinct.iter().any(|d| **d == *v) {
            distinct.push(v);
        }
    }
    let faithful = chi
        .values
        .iter()
        .enumerate()
        .all(|(c, v)| c == 0 || *v != chi.values[0]);
    (distinct.len(), faithful)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::constructors::{
        char_table_abelian, char_table_heisenberg, char_table_symmetric,
    };
    use crate::group::{natural_action, translation_action, Group, GroupSpec};
    use num_traits::{One, ToPrimitive};

    fn arc(t: CharacterTable) -> Arc<CharacterTable> {
        Arc::new(t)
    }

    fn natural_perm_char(table: &Arc<CharacterTable>) -> ClassFunction {
        let action = natural_action(&table.group).unwrap();
        perm_character(&action, table).unwrap()
    }

    #[test]
    fn s3_permutation_character() {
        let t = arc(char_table_symmetric(3).unwrap());
        let chi = natural_perm_char(&t);
        // classes [1,1,1] < [2,1] < [3]: fixed points 3, 1, 0
        let vals: Vec<i64> = chi
            .values
            .iter()
            .map(|v| v.as_rational().unwrap().to_integer().to_i64().unwrap())
            .collect();
        assert_eq!(vals, vec![3, 1, 0]);
        // transitive action shares exactly one copy of the trivial row
        let triv = ClassFunction::irrep(t.clone(), t.trivial_index());
        assert_eq!(inner_product(&chi, &triv).unwrap(), BigRational::one());
    }

    #[test]
    fn heisenberg_multiplicities() {
        for (p, n) in [(2u64, 1u32), (3, 1)] {
            let t = arc(char_table_heisenberg(p, n).unwrap());
            let chi = natural_perm_char(&t);
            let triv = ClassFunction::irrep(t.clone(), t.trivial_index());
            // (chi_V, trivial) = p^n + 2(p-1)
            assert_eq!(
                inner_product(&chi, &triv).unwrap(),
                BigRational::from_integer((p.pow(n) + 2 * (p - 1)).into())
            );
            // (chi_V, theta_c) = p - 1 for every c
            for c in 1..p {
                let theta = t.index_of_label(&format!("theta({c})")).unwrap();
                assert_eq!(
                    inner_product(&chi, &ClassFunction::irrep(t.clone(), theta)).unwrap(),
                    BigRational::from_integer((p - 1).into())
                );
            }
        }
    }

    #[test]
    fn heisenberg_support_excludes_doubly_nonzero_linears() {
        let t = arc(char_table_heisenberg(3, 1).unwrap());
        let chi = natural_perm_char(&t);
        let sup = support(&chi).unwrap();
        for (i, row) in t.irreps.iter().enumerate() {
            let expect = match &row.label {
                crate::chartab::Label::HeisenbergLinear { alpha, beta } => {
                    let a0 = alpha.iter().all(|&v| v == 0);
                    let b0 = beta.iter().all(|&v| v == 0);
                    !(!a0 && !b0)
                }
                _ => true,
            };
            assert_eq!(sup.contains(i), expect, "row {i}");
        }
    }

    #[test]
    fn tensor_identities() {
        let t = arc(char_table_symmetric(4).unwrap());
        let sign = t.index_of_label("[1,1,1,1]").unwrap();
        let sign_cf = ClassFunction::irrep(t.clone(), sign);
        let triv_cf = ClassFunction::irrep(t.clone(), t.trivial_index());
        let chi = ClassFunction::irrep(t.clone(), t.index_of_label("[2,1,1]").unwrap());
        assert_eq!(tensor(&chi, &triv_cf).unwrap().values, chi.values);
        assert_eq!(tensor(&sign_cf, &sign_cf).unwrap().values, triv_cf.values);
    }

    #[test]
    fn heisenberg_linear_tensor_rule() {
        let t = arc(char_table_heisenberg(3, 1).unwrap());
        let a = t.index_of_label("chi(1|0)").unwrap();
        let b = t.index_of_label("chi(0|2)").unwrap();
        let ab = t.index_of_label("chi(1|2)").unwrap();
        let prod = tensor(
            &ClassFunction::irrep(t.clone(), a),
            &ClassFunction::irrep(t.clone(), b),
        )
        .unwrap();
        assert_eq!(prod.values, t.irreps[ab].values);
    }

    #[test]
    fn regular_character_supports_everything() {
        let g = Group::new(GroupSpec::Dihedral { n: 4 }).unwrap();
        let t = arc(crate::chartab::constructors::char_table_dihedral(4).unwrap());
        let action = translation_action(&g).unwrap();
        let chi = perm_character(&action, &t).unwrap();
        assert!(support(&chi).unwrap().is_full());
    }

    #[test]
    fn s4_natural_support() {
        let t = arc(char_table_symmetric(4).unwrap());
        let chi = natural_perm_char(&t);
        let sup = support(&chi).unwrap();
        let labels: Vec<String> = sup.iter().map(|i| t.irreps[i].label.to_string()).collect();
        assert_eq!(labels, vec!["[3,1]", "[4]"]);
    }

    #[test]
    fn power_support_matches_literal_powers() {
        // direct cross-check: iterated support map vs the pointwise power
        let tables: Vec<Arc<CharacterTable>> = vec![
            arc(char_table_symmetric(4).unwrap()),
            arc(char_table_heisenberg(2, 1).unwrap()),
            arc(crate::chartab::constructors::char_table_dihedral(5).unwrap()),
            arc(char_table_abelian(
                &Group::new(GroupSpec::FunctionGroup { k: 3, orders: vec![2] }).unwrap(),
            )
            .unwrap()),
        ];
        for t in tables {
            let chi = natural_perm_char(&t);
            let mut literal = chi.clone();
            for tt in 1..=4u64 {
                if tt > 1 {
                    literal = tensor(&literal, &chi).unwrap();
                }
                assert_eq!(
                    power_support(&chi, tt).unwrap(),
                    support(&literal).unwrap(),
                    "t = {tt} on {:?}",
                    t.group.spec()
                );
            }
        }
    }

    #[test]
    fn trivial_character_cycles_at_period_one() {
        let t = arc(char_table_abelian(
            &Group::new(GroupSpec::AbelianProduct { orders: vec![2] }).unwrap(),
        )
        .unwrap());
        let triv = ClassFunction::irrep(t.clone(), t.trivial_index());
        let mut ctx = PowerContext::new(triv).unwrap();
        let trace = ctx.trace(1).unwrap();
        assert_eq!(trace.status, TraceStatus::Cycle { start: 1, period: 1 });
        assert_eq!(trace.support_at(10).unwrap().count(), 1);
    }

    #[test]
    fn sign_of_z2_cycles_with_period_two() {
        let t = arc(char_table_abelian(
            &Group::new(GroupSpec::AbelianProduct { orders: vec![2] }).unwrap(),
        )
        .unwrap());
        let sign = ClassFunction::irrep(t.clone(), 1);
        let mut ctx = PowerContext::new(sign).unwrap();
        let trace = ctx.trace(1).unwrap();
        assert_eq!(trace.status, TraceStatus::Cycle { start: 1, period: 2 });
        assert!(trace.support_at(3).unwrap().contains(1));
        assert!(trace.support_at(4).unwrap().contains(0));
    }

    #[test]
    fn monotone_growth_when_trivial_present() {
        let t = arc(char_table_symmetric(5).unwrap());
        let chi = natural_perm_char(&t);
        let mut ctx = PowerContext::new(chi).unwrap();
        let trace = ctx.trace(4).unwrap();
        for w in trace.supports.windows(2) {
            assert!(w[0].is_subset_of(&w[1]));
        }
        assert_eq!(trace.status, TraceStatus::ReachedFull { t: 4 });
    }

    #[test]
    fn restriction_and_reciprocity_klein4() {
        use crate::group::{build_fusion, conjugacy_classes, Elem};
        let g_table = arc(char_table_symmetric(4).unwrap());
        let h_group = Group::new(GroupSpec::AbelianProduct { orders: vec![2, 2] }).unwrap();
        let h_table = arc(char_table_abelian(&h_group).unwrap());
        let g_group = g_table.group.clone();
        let gc = conjugacy_classes(&g_group).unwrap();
        let embed = |h: &Elem| -> Elem {
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
        };
        // fusion computed against the synthetic cycle-type classes of the
        // parent table, cross-checked against orbit classes
        let fusion = build_fusion(
            &g_group,
            &g_table.classes,
            &h_group,
            &h_table.classes,
            embed,
        )
        .unwrap();
        let _ = gc;
        let setup = CosetSetup::new(g_table.clone(), h_table.clone(), fusion).unwrap();

        // restriction of [2,1,1] is the sum of the three nontrivial rows
        let chi = g_table.index_of_label("[2,1,1]").unwrap();
        let restricted = restrict(&ClassFunction::irrep(g_table.clone(), chi), &setup).unwrap();
        let expect = ClassFunction::sum_of_irreps(
            h_table.clone(),
            &[
                h_table.index_of_label("(0,1)").unwrap(),
                h_table.index_of_label("(1,0)").unwrap(),
                h_table.index_of_label("(1,1)").unwrap(),
            ],
        );
        assert_eq!(restricted.values, expect.values);

        // induction of the trivial row: [4] + 2[2,2] + [1^4]
        let y0 = h_table.trivial_index();
        let mults: Vec<(String, u64)> = (0..g_table.irrep_count())
            .map(|i| {
                (
                    g_table.irreps[i].label.to_string(),
                    induced_multiplicity(y0, i, &setup).unwrap(),
                )
            })
            .collect();
        let expect: Vec<(&str, u64)> = vec![
            ("[1,1,1,1]", 1),
            ("[2,1,1]", 0),
            ("[2,2]", 2),
            ("[3,1]", 0),
            ("[4]", 1),
        ];
        for ((label, m), (el, em)) in mults.iter().zip(expect) {
            assert_eq!((label.as_str(), *m), (el, em));
        }

        // dimension bookkeeping: sum over rows of mult * degree = index * dim Y
        for y in 0..h_table.irrep_count() {
            let total: u64 = (0..g_table.irrep_count())
                .map(|i| induced_multiplicity(y, i, &setup).unwrap() * g_table.degree(i))
                .sum();
            assert_eq!(total, setup.index() * h_table.degree(y));
        }
    }

    #[test]
    fn degree_preserved_under_restriction() {
        use crate::group::{build_fusion, Elem};
        let g_table = arc(char_table_heisenberg(3, 1).unwrap());
        let h_group = Group::new(GroupSpec::AbelianProduct { orders: vec![3] }).unwrap();
        let h_table = arc(char_table_abelian(&h_group).unwrap());
        let fusion = build_fusion(
            &g_table.group.clone(),
            &g_table.classes,
            &h_group,
            &h_table.classes,
            |z: &Elem| Elem(vec![0, 0, z.0[0]]),
        )
        .unwrap();
        let setup = CosetSetup::new(g_table.clone(), h_table, fusion).unwrap();
        for i in 0..g_table.irrep_count() {
            let r = restrict(&ClassFunction::irrep(g_table.clone(), i), &setup).unwrap();
            assert_eq!(r.values[0], g_table.irreps[i].values[0]);
        }
    }

    #[test]
    fn support_rejects_non_characters() {
        let t = arc(char_table_symmetric(3).unwrap());
        // trivial minus standard has a negative multiplicity
        let triv = ClassFunction::irrep(t.clone(), t.trivial_index());
        let std_row = ClassFunction::irrep(t.clone(), t.index_of_label("[2,1]").unwrap());
        let diff = ClassFunction::new(
            t.clone(),
            triv.values
                .iter()
                .zip(&std_row.values)
                .map(|(a, b)| a.sub(b))
                .collect(),
        )
        .unwrap();
        assert!(matches!(support(&diff), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn diagnostics() {
        let t = arc(char_table_symmetric(4).unwrap());
        let chi = natural_perm_char(&t);
        let (distinct, faithful) = character_diagnostics(&chi);
        assert!(faithful);
        assert!(distinct >= 3);
        let triv = ClassFunction::irrep(t.clone(), t.trivial_index());
        let (d2, f2) = character_diagnostics(&triv);
        assert_eq!(d2, 1);
        assert!(!f2);
    }

    #[test]
    fn zero_and_one_bitset_behaviour() {
        let mut s = IrrepSet::empty(70);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(69);
        assert_eq!(s.count(), 2);
        assert!(s.contains(69) && !s.contains(68));
        assert_eq!(s.complement().count(), 68);
        assert!(!s.is_full());
        assert!(s.is_subset_of(&IrrepSet::full(70)));
        assert!(Cyclotomic::zero().is_zero());
        assert!(Cyclotomic::one().is_rational());
    }
}
