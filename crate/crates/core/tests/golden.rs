use std::fs;
use std::path::PathBuf;

use virasoro_hc::arith::MultiPoly;
use virasoro_hc::classify::{
    compare_computed_with_printed, compute_delta, computed_shape,
    reference::{documented_delta3_difference, DATA_VERSION},
    s0_quotient,
};

fn golden(name: &str) -> String {
    let path: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "tests",
        "data",
        DATA_VERSION,
        name,
    ]
    .iter()
    .collect();
    fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
        .trim_end()
        .to_string()
}

#[test]
fn determinant_matches_golden() {
    assert_eq!(
        compute_delta().delta.canonical_string(),
        golden("delta.txt")
    );
}

#[test]
fn shape_coefficients_match_golden() {
    let s = computed_shape();
    assert_eq!(s.c1.canonical_string(), golden("delta1.txt"));
    assert_eq!(s.c2.canonical_string(), golden("delta2.txt"));
    assert_eq!(s.c3.canonical_string(), golden("delta3.txt"));
}

#[test]
fn s0_quotient_matches_golden() {
    assert_eq!(
        s0_quotient().unwrap().canonical_string(),
        golden("s0_quotient.txt")
    );
}

#[test]
fn printed_delta_differences_match_recorded_erratum() {
    let cmp = compare_computed_with_printed();
    assert_eq!(cmp.sign, -1);
    assert_eq!(cmp.differences[0], "0");
    assert_eq!(cmp.differences[1], "0");
    assert_eq!(cmp.differences[2], golden("delta3_erratum.txt"));
    assert_eq!(
        documented_delta3_difference().canonical_string(),
        golden("delta3_erratum.txt")
    );
}

#[test]
fn golden_files_round_trip_through_parser() {
    for name in [
        "delta.txt",
        "delta1.txt",
        "delta2.txt",
        "delta3.txt",
        "s0_quotient.txt",
    ] {
        let text = golden(name);
        let poly: MultiPoly = text.parse().unwrap();
        assert_eq!(poly.canonical_string(), text, "{name}");
    }
}
