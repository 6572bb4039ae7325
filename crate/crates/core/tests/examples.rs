macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(growth_sequence, "growth_sequence.rs");
example!(khovanskii_polynomial, "khovanskii_polynomial.rs");
example!(dickson_basis, "dickson_basis.rs");
example!(linear_forms, "linear_forms.rs");
example!(cayley_semigroup, "cayley_semigroup.rs");
example!(certify_report, "certify_report.rs");

use sumset_growth::Verdict;

#[test]
fn growth_sequence_example_runs() {
    let values = growth_sequence::run_example().expect("growth sequence example should run");
    assert_eq!(values, vec![3, 6, 9, 12, 15, 18, 21, 24]);
}

#[test]
fn khovanskii_polynomial_example_runs() {
    assert_eq!(khovanskii_polynomial::run_example().unwrap(), Verdict::Certified);
}

#[test]
fn dickson_basis_example_runs() {
    assert_eq!(dickson_basis::run_example().unwrap(), 1);
}

#[test]
fn linear_forms_example_runs() {
    assert_eq!(linear_forms::run_example().unwrap(), Verdict::Certified);
}

#[test]
fn cayley_semigroup_example_runs() {
    assert_eq!(cayley_semigroup::run_example().unwrap(), Verdict::Certified);
}

#[test]
fn certify_report_example_runs() {
    let json = certify_report::run_example().unwrap();
    assert!(json.contains("\"verdict\": \"certified\""));
}
