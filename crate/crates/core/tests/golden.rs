//! Committed tables for n <= 3, |lambda| <= 4: the current build must
//! reproduce them byte for byte, and their contents are checked against the
//! eigenvalue oracle.

use std::path::PathBuf;

use kostka_forge::algebra::json::zpoly_from_json;
use kostka_forge::cli::{build_table, Table};
use kostka_forge::macdonald::eigen_oracle_e;
use kostka_forge::weights::Composition;
use kostka_forge::{QtLaurent, QtPoly, QtRational};

fn golden_path(n: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/table_n{n}.json"))
}

fn golden(n: usize) -> (String, Table) {
    let text = std::fs::read_to_string(golden_path(n)).expect("golden file");
    let table = serde_json::from_str(&text).expect("golden JSON");
    (text, table)
}

#[test]
fn tables_match_golden_files() {
    for n in 1..=3 {
        let (text, _) = golden(n);
        let mut fresh = serde_json::to_string_pretty(&build_table(n, 4).unwrap()).unwrap();
        fresh.push('\n');
        assert!(fresh == text, "table for n = {n} differs from {}", golden_path(n).display());
    }
}

#[test]
fn golden_e_agrees_with_eigen_oracle() {
    for n in 1..=3 {
        let (_, table) = golden(n);
        assert_eq!(
            table.entries.len(),
            (0..=4).map(|d| kostka_forge::weights::compositions(n, d).len()).sum::<usize>()
        );
        for entry in &table.entries {
            let lambda = Composition::new(entry.lambda.clone());
            let e = zpoly_from_json(&entry.e).unwrap();
            assert_eq!(e, eigen_oracle_e(&lambda).unwrap(), "{lambda:?}");
            let cal_e = zpoly_from_json(&entry.cal_e).unwrap();
            assert!(cal_e.terms().all(|(_, c)| c.is_integral()), "{lambda:?}");
            assert!(entry.cal_e_tmon_aug.integral.iter().all(|&b| b), "{lambda:?}");
            assert_eq!(entry.cal_j_hl_q.is_some(), lambda.is_partition());
        }
    }
}

#[test]
fn golden_spot_check() {
    let (_, table) = golden(2);
    let entry = table.entries.iter().find(|e| e.lambda == [1, 0]).unwrap();
    let one_minus = |a, b| QtPoly::one_minus(a, b);
    let mut expected = QtLaurent::zero(2);
    expected.add_term(vec![1, 0], QtRational::from_i64(1));
    expected.add_term(vec![0, 1], QtRational::new(one_minus(0, 1), one_minus(1, 1)).unwrap());
    assert_eq!(zpoly_from_json(&entry.e).unwrap(), expected);
}
