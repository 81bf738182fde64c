//! Property suites: exact algebraic laws on random inputs.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use cosetid::chartab::constructors::{char_table_for, char_table_symmetric};
use cosetid::cyclotomic::Cyclotomic;
use cosetid::engine::{ProblemSpec, RepSource};
use cosetid::group::{Group, GroupSpec};
use cosetid::partitions::partitions_of;
use cosetid::repcalc::{
    perm_character, power_support, support, tensor, ClassFunction, PowerContext,
};

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Random small cyclotomic: a handful of terms over a small conductor.
fn cyclotomic_strategy(max_conductor: u64) -> impl Strategy<Value = Cyclotomic> {
    (1..=max_conductor).prop_flat_map(|m| {
        proptest::collection::vec(((0..m), (-9i64..=9), (1i64..=4)), 0..4).prop_map(
            move |terms| {
                Cyclotomic::from_terms(
                    m,
                    terms
                        .into_iter()
                        .map(|(e, num, den)| (e, rational(num, den))),
                )
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn addition_laws(
        a in cyclotomic_strategy(24),
        b in cyclotomic_strategy(24),
        c in cyclotomic_strategy(24),
    ) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.add(&Cyclotomic::zero()), a.clone());
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn multiplication_laws(
        a in cyclotomic_strategy(16),
        b in cyclotomic_strategy(16),
        c in cyclotomic_strategy(16),
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&Cyclotomic::one()), a.clone());
    }

    #[test]
    fn conjugation_laws(a in cyclotomic_strategy(24), b in cyclotomic_strategy(24)) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        // a * conj(a) has zero imaginary part
        let n = a.norm_sq();
        prop_assert_eq!(n.conj(), n);
    }

    #[test]
    fn embedding_is_a_homomorphism(
        a in cyclotomic_strategy(12),
        b in cyclotomic_strategy(12),
        k in 1u64..=4,
    ) {
        // embed both into a common larger field through arithmetic with a
        // conductor-mk root and compare the two routes
        let m = a.conductor().max(b.conductor()).max(1);
        let big = m * k;
        let unit = Cyclotomic::root_of_unity(big, 0); // one, at conductor big
        let lift = |v: &Cyclotomic| v.add(&unit).sub(&unit);
        prop_assert_eq!(lift(&a.add(&b)), lift(&a).add(&lift(&b)));
        prop_assert_eq!(lift(&a.mul(&b)), lift(&a).mul(&lift(&b)));
    }

    #[test]
    fn rendering_round_trips(a in cyclotomic_strategy(20)) {
        let m = a.conductor().max(1);
        let s = a.to_string_in(m).unwrap();
        prop_assert_eq!(Cyclotomic::parse(&s, m).unwrap(), a);
    }

    #[test]
    fn partition_conjugation_involution(n in 1u32..=9) {
        for p in partitions_of(n) {
            prop_assert_eq!(p.conjugate().conjugate(), p.clone());
            prop_assert!(p.dimension() >= 1);
        }
    }
}

#[test]
fn branching_rule_matches_box_moves() {
    // the support of (natural character) x (row lambda) is exactly the
    // add-then-remove-a-box neighborhood, for every degree up to seven
    for n in 2..=7u32 {
        let table = Arc::new(char_table_symmetric(n).unwrap());
        let g = table.group.clone();
        let v = perm_character(&cosetid::group::natural_action(&g).unwrap(), &table).unwrap();
        for (i, chi) in table.irreps.iter().enumerate() {
            let cosetid::chartab::Label::Partition(lambda) = &chi.label else {
                panic!()
            };
            let product = tensor(&ClassFunction::irrep(table.clone(), i), &v).unwrap();
            let sup = support(&product).unwrap();
            let labels: Vec<String> = sup
                .iter()
                .map(|j| table.irreps[j].label.to_string())
                .collect();
            let expect: Vec<String> = lambda
                .add_then_remove_box()
                .into_iter()
                .map(|mu| cosetid::chartab::Label::Partition(mu).to_string())
                .collect();
            assert_eq!(labels, expect, "degree {n}, row {lambda:?}");
        }
    }
}

#[test]
fn supports_grow_when_trivial_is_present() {
    let cases: Vec<(GroupSpec, RepSource)> = vec![
        (GroupSpec::Symmetric { n: 5 }, RepSource::Natural),
        (GroupSpec::Heisenberg { p: 3, n: 1 }, RepSource::Natural),
        (GroupSpec::Dihedral { n: 6 }, RepSource::Natural),
        (GroupSpec::FunctionGroup { k: 3, orders: vec![2] }, RepSource::Natural),
        (GroupSpec::AbelianProduct { orders: vec![2, 2] }, RepSource::Regular),
    ];
    for (group, rep) in cases {
        let spec = ProblemSpec { group: group.clone(), rep, mode: cosetid::engine::Mode::Sod, threshold: "2/3".into() };
        let realized = cosetid::engine::realize(&spec).unwrap();
        let mut ctx = PowerContext::new(realized.v.clone()).unwrap();
        let trace = ctx.trace(5).unwrap();
        for w in trace.supports.windows(2) {
            assert!(w[0].is_subset_of(&w[1]), "{group:?}");
        }
        // probabilities are monotone and land in [0, 1]
        let report = cosetid::engine::solve(&spec, 5).unwrap();
        let mut last = BigRational::new(0.into(), 1.into());
        for row in &report.rows {
            let p = cosetid::cyclotomic::parse_rational(&row.probability).unwrap();
            assert!(p >= last && p <= BigRational::new(1.into(), 1.into()), "{group:?}");
            last = p;
        }
    }
}

#[test]
fn probability_one_exactly_at_gamma() {
    let specs = vec![
        ProblemSpec::sod(GroupSpec::Symmetric { n: 4 }),
        ProblemSpec::sod(GroupSpec::Heisenberg { p: 2, n: 1 }),
        ProblemSpec::coset(GroupSpec::Symmetric { n: 4 }, cosetid::engine::SubgroupChoice::Klein4),
    ];
    for spec in specs {
        let report = cosetid::engine::solve(&spec, 5).unwrap();
        let gamma = report.gamma.finite().unwrap();
        for row in &report.rows {
            let p = cosetid::cyclotomic::parse_rational(&row.probability).unwrap();
            use num_traits::One;
            assert_eq!(p.is_one(), row.t >= gamma, "{:?} at t = {}", spec.group, row.t);
        }
    }
}

#[test]
fn power_support_against_literal_products_on_families() {
    // iterated support map vs literal pointwise powers on groups under 200
    let groups = vec![
        GroupSpec::Symmetric { n: 4 },
        GroupSpec::Dihedral { n: 7 },
        GroupSpec::Heisenberg { p: 2, n: 1 },
        GroupSpec::FunctionGroup { k: 2, orders: vec![3] },
        GroupSpec::AbelianProduct { orders: vec![2, 2, 2] },
    ];
    for spec in groups {
        let g = Group::new(spec.clone()).unwrap();
        let table = Arc::new(char_table_for(&g).unwrap());
        let v = match cosetid::group::natural_action(&g) {
            Ok(action) => perm_character(&action, &table).unwrap(),
            Err(_) => perm_character(
                &cosetid::group::translation_action(&g).unwrap(),
                &table,
            )
            .unwrap(),
        };
        let mut literal = v.clone();
        for t in 1..=4u64 {
            if t > 1 {
                literal = tensor(&literal, &v).unwrap();
            }
            assert_eq!(
                power_support(&v, t).unwrap(),
                support(&literal).unwrap(),
                "{spec:?} at t = {t}"
            );
        }
    }
}
