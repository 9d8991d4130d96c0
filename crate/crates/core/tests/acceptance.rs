//! One test per acceptance criterion. Each prints a single PASS/FAIL line.

use std::time::Duration;

fn run(id: u32, limit_secs: u64) {
    let report = eog::verify::claim(id).expect("registered claim").run();
    println!("{report}");
    assert!(report.passed, "{report}");
    assert!(report.elapsed <= Duration::from_secs(limit_secs), "{report}: over {limit_secs}s");
}

#[test]
fn criterion_01_p4_132_and_213_exact_values() {
    run(1, 60);
}

#[test]
fn criterion_02_p4_123_values_and_disjoint_k4() {
    run(2, 60);
}

#[test]
fn criterion_03_canonical_counts_k3_and_k2() {
    run(3, 60);
}

#[test]
fn criterion_04_non_principal_family() {
    run(4, 60);
}

#[test]
fn criterion_05_p6_14325_chi_three() {
    run(5, 60);
}

#[test]
fn criterion_06_k9_certifies_diamond_bound() {
    run(6, 10);
}

#[test]
fn criterion_07_explower_orders_certify() {
    run(7, 10);
}

#[test]
fn criterion_08_diamonds_in_canonical_cliques() {
    run(8, 60);
}

#[test]
fn criterion_09_k4_labelings_all_infinite() {
    run(9, 60);
}

#[test]
fn criterion_10_chi_plus_small_cases() {
    run(10, 60);
}

#[test]
fn criterion_11_doubling_constructions_avoid() {
    run(11, 60);
}

#[test]
fn criterion_12_rightright_avoidance_and_counts() {
    run(12, 60);
}

#[test]
fn criterion_13_canonical_cliques_avoid_paths_and_cycles() {
    run(13, 60);
}

#[test]
fn criterion_14_ds_bridge_properties() {
    run(14, 60);
}

#[test]
fn criterion_15_matrix_functor() {
    run(15, 60);
}

#[test]
fn criterion_16_oracle_equivalences() {
    run(16, 60);
}
