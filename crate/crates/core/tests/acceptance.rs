//! Acceptance suite: one test per shipping criterion, each printing a
//! single pass line. Exact comparisons are rational equality; simulation
//! comparisons use 1e-8. Run with `cargo test --test acceptance`.

use std::time::Instant;

use num_rational::BigRational;
use num_traits::One;

use cosetid::cyclotomic::parse_rational;
use cosetid::engine::{
    an_sod_success, classical_base_size, solve, zhandry, Complexity, Mode, ProblemSpec, RepSource,
    SnPartitionPath, SubgroupChoice,
};
use cosetid::group::{natural_action, Group, GroupSpec};
use cosetid::repcalc::power_support;
use cosetid::{families, verify};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn row_p(report: &cosetid::engine::QueryReport, t: u64) -> BigRational {
    parse_rational(&report.rows[(t - 1) as usize].probability).unwrap()
}

#[test]
fn criterion_01_klein4_coset() {
    let start = Instant::now();
    let spec = ProblemSpec::coset(GroupSpec::Symmetric { n: 4 }, SubgroupChoice::Klein4);
    let report = solve(&spec, 2).unwrap();
    assert_eq!(row_p(&report, 1), rat(1, 2));
    assert_eq!(row_p(&report, 2), rat(1, 1));
    let outcome = verify::verify_instance("klein4", &spec, 1).unwrap();
    assert!(outcome.pass, "simulation delta {:.2e}", outcome.delta);
    assert!((outcome.simulated - 0.5).abs() <= 1e-8);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}, limit 1 s");
    println!("criterion 01 (klein4 coset 1/2 then 1, simulated): PASS in {elapsed:?}");
}

#[test]
fn criterion_02_heisenberg_identification() {
    let start = Instant::now();
    for (p, n, expect) in [(2u64, 1u32, rat(7, 8)), (3, 1, rat(23, 27))] {
        let spec = ProblemSpec::sod(GroupSpec::Heisenberg { p, n });
        let report = solve(&spec, 2).unwrap();
        assert_eq!(row_p(&report, 1), expect, "G({p},{n}) single query");
        assert_eq!(
            row_p(&report, 1),
            families::heisenberg_single_query(p, n).unwrap()
        );
        assert_eq!(report.gamma, Complexity::Finite { t: 2 }, "G({p},{n}) gamma");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}, limit 5 s");
    println!("criterion 02 (heisenberg identification closed form, gamma 2): PASS in {elapsed:?}");
}

#[test]
fn criterion_03_heisenberg_center_coset() {
    let start = Instant::now();
    for (p, n) in [(2u64, 1u32), (3, 1)] {
        let spec = ProblemSpec::coset(GroupSpec::Heisenberg { p, n }, SubgroupChoice::Center);
        let report = solve(&spec, 1).unwrap();
        assert!(row_p(&report, 1).is_one(), "G({p},{n}) center at one query");
    }
    let spec = ProblemSpec::coset(GroupSpec::Heisenberg { p: 2, n: 1 }, SubgroupChoice::Center);
    let outcome = verify::verify_instance("heis-center", &spec, 1).unwrap();
    assert!(outcome.pass && (outcome.simulated - 1.0).abs() <= 1e-8);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}, limit 10 s");
    println!("criterion 03 (heisenberg center coset, single query certainty): PASS in {elapsed:?}");
}

#[test]
fn criterion_04_symmetric_identification_both_paths() {
    let start = Instant::now();
    for n in 3..=7u32 {
        let mut path = SnPartitionPath::new(n).unwrap();
        assert_eq!(path.sn_gamma(), n as u64 - 1, "partition path at degree {n}");
    }
    for n in 3..=5u32 {
        let report = solve(&ProblemSpec::sod(GroupSpec::Symmetric { n }), n as u64 - 1).unwrap();
        assert_eq!(
            report.gamma,
            Complexity::Finite { t: n as u64 - 1 },
            "table path at degree {n}"
        );
        let mut path = SnPartitionPath::new(n).unwrap();
        for t in 1..n as u64 {
            assert_eq!(row_p(&report, t), path.sn_success(t), "degree {n}, t = {t}");
        }
    }
    let elapsed = start.elapsed();
    println!("criterion 04 (symmetric gamma n-1 on both paths): PASS in {elapsed:?}");
}

#[test]
fn criterion_05_subsequence_count_identity() {
    let start = Instant::now();
    for n in 2..=8u32 {
        let mut path = SnPartitionPath::new(n).unwrap();
        for t in 1..=(n as u64 + 1) {
            let threshold = n.saturating_sub(t as u32);
            assert_eq!(
                path.sn_dimension_sum(t),
                families::lis_count(n, threshold).unwrap(),
                "degree {n}, t = {t}"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}, limit 60 s");
    println!("criterion 05 (dimension mass equals subsequence count, n <= 8): PASS in {elapsed:?}");
}

#[test]
fn criterion_06_alternating_identification() {
    let start = Instant::now();
    for n in 4..=8u32 {
        let mut path = SnPartitionPath::new(n).unwrap();
        assert_eq!(path.an_gamma(), families::an_gamma(n), "degree {n}");
        for t in 1..=(n as u64) {
            let p = path.sn_success(t);
            let q = path.an_success(t);
            assert!(p <= q, "degree {n}, t = {t}: p > q");
            assert!(q <= rat(2, 1) * &p, "degree {n}, t = {t}: q > 2p");
        }
        // the per-operation wrapper agrees with the path object
        assert_eq!(an_sod_success(n, 2).unwrap(), path.an_success(2));
    }
    let elapsed = start.elapsed();
    println!("criterion 06 (alternating gamma n - ceil(sqrt n), sandwich): PASS in {elapsed:?}");
}

#[test]
fn criterion_07_sign_complexity() {
    let start = Instant::now();
    for n in 3..=8u32 {
        let spec = ProblemSpec::coset(GroupSpec::Symmetric { n }, SubgroupChoice::Alternating);
        let expect = families::sign_complexity(n);
        let report = solve(&spec, expect).unwrap();
        assert_eq!(report.gamma, Complexity::Finite { t: expect }, "degree {n}");
        for t in 1..expect {
            assert_eq!(row_p(&report, t), rat(1, 2), "degree {n}, t = {t}");
        }
        assert!(row_p(&report, expect).is_one());
    }
    let elapsed = start.elapsed();
    println!("criterion 07 (sign complexity floor(n/2), coin flip below): PASS in {elapsed:?}");
}

#[test]
fn criterion_08_abelian_cross_checks() {
    let start = Instant::now();
    // evaluation-oracle identification vs the binomial closed form
    for n in 1..=6u32 {
        let spec = ProblemSpec::sod(GroupSpec::FunctionGroup { k: n, orders: vec![2] });
        let report = solve(&spec, n as u64).unwrap();
        for t in 1..=n as u64 {
            assert_eq!(
                row_p(&report, t),
                families::van_dam(n, t).unwrap(),
                "bits n = {n}, t = {t}"
            );
        }
        zhandry_agrees(&spec, n as u64);
    }
    // group summation vs the capped floor form
    for m in 2..=5u64 {
        for k in 2..=4u64 {
            let spec = ProblemSpec::coset(
                GroupSpec::FunctionGroup { k: k as u32, orders: vec![m] },
                SubgroupChoice::ZeroSum,
            );
            let report = solve(&spec, k).unwrap();
            for t in 1..=k {
                assert_eq!(
                    row_p(&report, t),
                    families::group_summation(m, k, t).unwrap(),
                    "m = {m}, k = {k}, t = {t}"
                );
            }
            zhandry_agrees(&spec, k);
        }
    }
    // polynomial curve sumsets vs identification on the phase group
    for (q, d) in [(2u32, 1u32), (3, 1), (2, 2)] {
        let labels: Vec<String> = families::curve_sumset(q, d, 1)
            .unwrap()
            .iter()
            .map(|pt| {
                let strs: Vec<String> = pt.iter().map(|v| v.to_string()).collect();
                format!("({})", strs.join(","))
            })
            .collect();
        let spec = ProblemSpec {
            group: GroupSpec::AbelianProduct { orders: vec![q as u64; d as usize + 1] },
            rep: RepSource::IrrepSum { labels },
            mode: Mode::Sod,
            threshold: "2/3".into(),
        };
        for t in 1..=3u64 {
            assert_eq!(
                cosetid::engine::sod_success(&spec, t).unwrap(),
                families::poly_interp_success(q, d, t as u32).unwrap(),
                "q = {q}, d = {d}, t = {t}"
            );
        }
        zhandry_agrees(&spec, 3);
    }
    let elapsed = start.elapsed();
    println!("criterion 08 (abelian closed forms and counting route agree): PASS in {elapsed:?}");
}

/// The restriction-equality count must match the reciprocity engine on
/// every abelian instance, query count by query count.
fn zhandry_agrees(spec: &ProblemSpec, t_max: u64) {
    let coset_spec = match &spec.mode {
        Mode::Sod => ProblemSpec {
            mode: Mode::Coset { subgroup: SubgroupChoice::Trivial },
            ..spec.clone()
        },
        Mode::Coset { .. } => spec.clone(),
    };
    let mut realized = cosetid::engine::realize(&coset_spec).unwrap();
    let engine = realized.coset.as_mut().unwrap();
    for t in 1..=t_max {
        let set = power_support(&realized.v, t).unwrap();
        let (generic, _) = engine.success(&set).unwrap();
        let (counted, _) = zhandry::zhandry_success(&engine.setup, &set).unwrap();
        assert_eq!(generic, counted, "{:?} at t = {t}", spec.group);
    }
}

#[test]
fn criterion_09_classical_base_sizes() {
    let start = Instant::now();
    let base = |spec: GroupSpec| {
        let g = Group::new(spec).unwrap();
        classical_base_size(&natural_action(&g).unwrap()).unwrap()
    };
    for n in 3..=8u32 {
        assert_eq!(base(GroupSpec::Symmetric { n }), n as u64 - 1, "symmetric {n}");
    }
    for n in 4..=8u32 {
        assert_eq!(base(GroupSpec::Alternating { n }), n as u64 - 2, "alternating {n}");
    }
    for n in 3..=8u32 {
        assert_eq!(base(GroupSpec::Dihedral { n }), 2, "dihedral {n}");
    }
    for (p, n) in [(2u64, 1u32), (3, 1), (2, 2)] {
        assert_eq!(base(GroupSpec::Heisenberg { p, n }), n as u64 + 1, "heisenberg {p},{n}");
    }
    let elapsed = start.elapsed();
    println!("criterion 09 (classical base sizes across families): PASS in {elapsed:?}");
}

#[test]
fn criterion_10_property_suites() {
    let start = Instant::now();
    // exact table identities on every constructed family table
    let mut tables = Vec::new();
    for n in 2..=6 {
        tables.push(cosetid::chartab::constructors::char_table_symmetric(n).unwrap());
    }
    for n in 3..=8 {
        tables.push(cosetid::chartab::constructors::char_table_dihedral(n).unwrap());
    }
    for (p, n) in [(2u64, 1u32), (3, 1), (2, 2)] {
        tables.push(cosetid::chartab::constructors::char_table_heisenberg(p, n).unwrap());
    }
    for orders in [vec![2], vec![3], vec![2, 2], vec![2, 3, 4]] {
        let g = Group::new(GroupSpec::AbelianProduct { orders }).unwrap();
        tables.push(cosetid::chartab::constructors::char_table_abelian(&g).unwrap());
    }
    for table in &tables {
        let violations = cosetid::chartab::validate_table(table);
        assert!(violations.is_empty(), "{:?}: {violations:?}", table.group.spec());
    }

    // reciprocity against the explicit induced-character formula
    reciprocity_consistency(
        ProblemSpec::coset(GroupSpec::Symmetric { n: 4 }, SubgroupChoice::Klein4),
    );
    for (p, n) in [(2u64, 1u32), (3, 1)] {
        reciprocity_consistency(ProblemSpec::coset(
            GroupSpec::Heisenberg { p, n },
            SubgroupChoice::Center,
        ));
    }

    // dense-matrix battery within 1e-8 on every small worked example
    for outcome in verify::verify_all().unwrap() {
        assert!(
            outcome.pass,
            "{}: formula {} vs simulated {} (delta {:.2e})",
            outcome.name, outcome.formula, outcome.simulated, outcome.delta
        );
    }
    let elapsed = start.elapsed();
    println!("criterion 10 (table identities, reciprocity, simulation battery): PASS in {elapsed:?}");
}

/// The reciprocity multiplicity must equal the inner product of the
/// explicitly induced character, computed by the fused-class value formula
/// (an independent oracle for induction).
fn reciprocity_consistency(spec: ProblemSpec) {
    use cosetid::cyclotomic::Cyclotomic;
    use cosetid::repcalc::{inner_product, ClassFunction};
    let mut realized = cosetid::engine::realize(&spec).unwrap();
    let engine = realized.coset.as_mut().unwrap();
    let g_table = engine.g_table().clone();
    let h_table = engine.h_table().clone();
    let fusion = engine.setup.fusion.clone();
    let index = engine.setup.index();
    for y in 0..h_table.irrep_count() {
        // chi_induced(K) = |G:H| * (sum over H-classes fusing to K of |C| Y(C)) / |K|
        let mut values = vec![Cyclotomic::zero(); g_table.class_count()];
        for (h_class, &g_class) in fusion.fusion.iter().enumerate() {
            let h_size = h_table.classes.classes[h_class].size;
            let term = h_table.irreps[y].values[h_class]
                .scale(&BigRational::from_integer(h_size.into()));
            values[g_class] = values[g_class].add(&term);
        }
        for (c, v) in values.iter_mut().enumerate() {
            let g_size = g_table.classes.classes[c].size;
            *v = v.scale(&BigRational::new(index.into(), g_size.into()));
        }
        let induced_char = ClassFunction::new(g_table.clone(), values).unwrap();
        for i in 0..g_table.irrep_count() {
            let via_char = inner_product(
                &induced_char,
                &ClassFunction::irrep(g_table.clone(), i),
            )
            .unwrap();
            let via_reciprocity = engine.restriction_multiplicities(i).unwrap()[y];
            assert_eq!(
                via_char,
                BigRational::from_integer(via_reciprocity.into()),
                "row {i}, subgroup row {y} in {:?}",
                spec.group
            );
        }
    }
}
