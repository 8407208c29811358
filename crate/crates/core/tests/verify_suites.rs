use immaculate::compositions::compositions_of;
use immaculate::qsym::{QBasis, QSymElem};
use immaculate::skewhook::super_fundamental;
use immaculate::verify::{self, run, Suite};

#[test]
fn every_suite_passes_at_five() {
    let checks = run(Suite::All, 5);
    assert!(checks.len() > 30);
    for c in &checks {
        assert!(c.passed(), "{c}");
    }
}

#[test]
fn hook_standardization_descents() {
    let c = verify::hook_descents(5, 2, 2);
    assert!(c.passed() && c.witnesses > 100, "{c}");
}

#[test]
fn row_strict_family_spans() {
    let c = verify::row_strict_spans(6);
    assert!(c.passed(), "{c}");
}

#[test]
fn super_fundamental_single_alphabet() {
    for n in 0..=4 {
        for a in compositions_of(n) {
            let x_only = super_fundamental(&a, 3, 0);
            let f = QSymElem::basis_element(QBasis::F, a.clone()).realize(3);
            let terms: Vec<_> = x_only
                .terms()
                .map(|(x, _, c)| (x.to_vec(), c.clone()))
                .collect();
            let want: Vec<_> = f
                .terms()
                .iter()
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect();
            assert_eq!(terms, want, "k = 0, α = {a}");

            let y_only = super_fundamental(&a, 0, 3);
            let f = QSymElem::basis_element(QBasis::F, a.complement()).realize(3);
            let terms: Vec<_> = y_only
                .terms()
                .map(|(_, y, c)| (y.to_vec(), c.clone()))
                .collect();
            let want: Vec<_> = f
                .terms()
                .iter()
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect();
            assert_eq!(terms, want, "l = 0, α = {a}");
        }
    }
}

#[test]
fn failures_are_reported() {
    let mut c = verify::Check::new("x", "y");
    c.record(true, || unreachable!());
    c.record(false, || "bad".into());
    assert!(!c.passed());
    assert_eq!(c.failures, ["bad"]);
    assert!(!verify::Check::new("empty", "none").passed());
}
