use schubert_git::catalog::verify_catalog;
use schubert_git::{RootSystem, TypeLabel};

fn sweep(label: TypeLabel, ranks: std::ops::RangeInclusive<usize>) {
    for rank in ranks {
        let sys = RootSystem::new(label, rank).unwrap();
        let report = verify_catalog(&sys).unwrap();
        for c in &report.cases {
            assert!(
                c.passed(),
                "{label}{rank} r={} s={}: {:?}",
                c.r,
                c.s,
                c.discrepancies
            );
        }
    }
}

#[test]
fn type_a_up_to_rank_8() {
    sweep(TypeLabel::A, 1..=8);
}

#[test]
fn type_b() {
    sweep(TypeLabel::B, 2..=7);
}

#[test]
fn type_c() {
    sweep(TypeLabel::C, 2..=7);
}

#[test]
fn type_d() {
    sweep(TypeLabel::D, 4..=7);
}

#[test]
fn exceptional() {
    sweep(TypeLabel::E6, 6..=6);
    sweep(TypeLabel::E7, 7..=7);
}
