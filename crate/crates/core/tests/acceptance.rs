use std::process::ExitCode;
use std::time::Instant;

use immaculate::comp;
use immaculate::compositions::compositions_of;
use immaculate::qsym::{matrix, MatrixName, QBasis, QSymElem};
use immaculate::tableaux::{
    count_with_content, enumerate, HookTableau, Letter, PosetPath, Shape, Tableau, TableauKind,
};
use immaculate::verify::{self, Check};
use immaculate::{Composition, SubsetOfPrefix};
use num_bigint::BigInt;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_checks(checks: Vec<Check>) -> Outcome {
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| c.to_string())
        .collect();
    let witnesses: usize = checks.iter().map(|c| c.witnesses).sum();
    if failed.is_empty() {
        Outcome {
            passed: true,
            detail: format!("{} identities, {witnesses} witnesses", checks.len()),
        }
    } else {
        Outcome {
            passed: false,
            detail: failed.join("\n"),
        }
    }
}

fn from_failures(witnesses: usize, failures: Vec<String>) -> Outcome {
    if failures.is_empty() {
        Outcome {
            passed: true,
            detail: format!("{witnesses} witnesses"),
        }
    } else {
        Outcome {
            passed: false,
            detail: failures.join("; "),
        }
    }
}

fn psi_duality() -> Outcome {
    from_checks(vec![verify::psi_duality(7), verify::omega_reversal(7)])
}

/// Sum of content monomials over all tableaux with entries at most `n`.
fn brute_generating_function(
    alpha: &Composition,
    kind: TableauKind,
    n: usize,
) -> immaculate::poly::Poly {
    let mut p = immaculate::poly::Poly::zero(n);
    for t in enumerate(&Shape::straight(alpha.clone()), kind, n as u32) {
        let mut exps = vec![0u32; n];
        for &v in t.rows().iter().flatten() {
            exps[v as usize - 1] += 1;
        }
        p.add_term(exps, BigInt::from(1));
    }
    p
}

fn definition_consistency() -> Outcome {
    let mut witnesses = 0;
    let mut failures = Vec::new();
    for n in 1..=5 {
        for a in compositions_of(n) {
            for (basis, kind) in [
                (QBasis::DI, TableauKind::Immaculate),
                (QBasis::RSDI, TableauKind::RowStrict),
            ] {
                witnesses += 1;
                let realized = QSymElem::basis_element(basis, a.clone()).realize(n);
                if realized != brute_generating_function(&a, kind, n) {
                    failures.push(format!("{basis} α = {a}"));
                }
            }
        }
    }
    from_failures(witnesses, failures)
}

fn matrix_identities() -> Outcome {
    let mut checks = vec![
        verify::k_star_from_l_star(6),
        verify::l_star_from_l(6),
        verify::k_star_by_pairing(6),
    ];
    let mut counted = Check::new(
        "K*_{α,β} = #row-strict tableaux of shape α, content β",
        "α, β ⊨ n ≤ 6",
    );
    for n in 1..=6 {
        let ks = matrix(MatrixName::KStar, n);
        for a in &ks.index {
            for b in &ks.index {
                let count = count_with_content(
                    &Shape::straight(a.clone()),
                    TableauKind::RowStrict,
                    b.parts(),
                );
                counted.record(ks.get(a, b) == BigInt::from(count), || {
                    format!("α = {a}, β = {b}")
                });
            }
        }
    }
    checks.push(counted);
    from_checks(checks)
}

fn creation_operators() -> Outcome {
    from_checks(vec![
        verify::creation_vs_jacobi_trudi(7, 4),
        verify::creation_rs_vs_jacobi_trudi(7, 4),
        verify::column_and_row(7),
    ])
}

fn pieri_rules() -> Outcome {
    from_checks(vec![
        verify::pieri_h_immaculate(5, 3),
        verify::pieri_e_immaculate(5, 3),
        verify::pieri_h_row_strict(5, 3),
        verify::pieri_e_row_strict(5, 3),
    ])
}

fn ribbon_and_h_e() -> Outcome {
    from_checks(vec![
        verify::ribbon_expansions(6),
        verify::h_e_expansions(6),
    ])
}

fn schur_expansions() -> Outcome {
    from_checks(vec![
        verify::schur_expansions(6),
        verify::skew_schur_expansions(5),
    ])
}

fn skew_routes() -> Outcome {
    from_checks(vec![verify::skew_routes(5), verify::coproduct_routes(5)])
}

fn hook_theorems() -> Outcome {
    from_checks(vec![
        verify::hook_factorization(5, 3, 3),
        verify::hook_fundamental(5, 3, 3),
        verify::hook_schur_routes(5, 3, 3),
    ])
}

fn set(n: usize, e: &[usize]) -> SubsetOfPrefix {
    SubsetOfPrefix::new(n, e.to_vec()).unwrap()
}

fn letters(rows: &[&[&str]]) -> Vec<Vec<Letter>> {
    rows.iter()
        .map(|r| r.iter().map(|s| s.parse().unwrap()).collect())
        .collect()
}

fn worked_examples() -> Outcome {
    let mut c = Check::new("worked examples", "fixed");
    let mut check = |ok: bool, what: &str| c.record(ok, || what.to_string());

    let a = comp![3, 1, 4, 2, 5, 1];
    check(
        a.to_set() == set(16, &[3, 4, 8, 10, 15]),
        "set(3,1,4,2,5,1)",
    );
    check(
        set(16, &[2, 3, 5, 9, 10, 14]).to_composition() == comp![2, 1, 2, 4, 1, 4, 2],
        "comp({2,3,5,9,10,14})",
    );
    let a = comp![3, 1, 2, 4];
    check(a.reverse() == comp![4, 2, 1, 3], "rev(3,1,2,4)");
    check(
        a.reverse().to_set() == set(10, &[4, 6, 7]),
        "set(rev(3,1,2,4))",
    );
    check(
        a.reverse().to_set().complement() == set(10, &[1, 2, 3, 5, 8, 9]),
        "set(rev)^c",
    );
    check(a.transpose() == comp![1, 1, 1, 2, 3, 1, 1], "(3,1,2,4)^t");

    let t = Tableau::straight(vec![
        vec![1, 1, 2],
        vec![2, 2],
        vec![3, 4, 4, 5],
        vec![5],
        vec![6, 7],
    ])
    .unwrap();
    let s = Tableau::straight(vec![
        vec![1, 2, 5],
        vec![3, 4],
        vec![6, 7, 8, 10],
        vec![9],
        vec![11, 12],
    ])
    .unwrap();
    check(
        t.reading_word(TableauKind::Immaculate) == [6, 7, 5, 3, 4, 4, 5, 2, 2, 1, 1, 2],
        "immaculate reading word",
    );
    check(
        t.standardize(TableauKind::Immaculate).unwrap() == s,
        "immaculate standardization",
    );
    check(
        s.descents(TableauKind::Immaculate).unwrap() == set(12, &[2, 5, 8, 10]),
        "Des = {2,5,8,10}",
    );

    let t = Tableau::straight(vec![vec![1, 2, 6], vec![2, 5], vec![3, 4, 5, 6], vec![4]]).unwrap();
    let s = Tableau::straight(vec![vec![1, 2, 9], vec![3, 7], vec![4, 5, 8, 10], vec![6]]).unwrap();
    check(
        t.reading_word(TableauKind::RowStrict) == [6, 2, 1, 5, 2, 6, 5, 4, 3, 4],
        "row-strict reading word",
    );
    check(
        t.standardize(TableauKind::RowStrict).unwrap() == s,
        "row-strict standardization",
    );
    check(
        s.descents(TableauKind::RowStrict).unwrap() == set(10, &[1, 4, 6, 8]),
        "Des_R = {1,4,6,8}",
    );

    let t = Tableau::straight(vec![vec![1, 6], vec![2, 3, 5], vec![4, 7]]).unwrap();
    let p = PosetPath::new(comp![2, 3, 2], vec![3, 1, 2, 3, 2, 2, 1]).unwrap();
    let (d, asc) = p.descents();
    check(
        d == set(7, &[1, 3, 6]) && asc == set(7, &[2, 4, 5]),
        "D(P), A(P)",
    );
    check(
        t.descents(TableauKind::Immaculate).unwrap() == d,
        "Des(T) = D(P)",
    );
    check(
        t.descents(TableauKind::RowStrict).unwrap() == asc,
        "Des_R(T) = A(P)",
    );
    check(
        p.to_tableau() == t && PosetPath::from_tableau(&t).unwrap() == p,
        "path/tableau correspondence",
    );

    let shape = Shape::skew(comp![3, 2, 3], comp![1, 1, 2]).unwrap();
    let t = Tableau::new(shape, vec![vec![3, 4], vec![2], vec![1]]).unwrap();
    let p = PosetPath::new(comp![3, 2, 3], vec![1, 1, 2, 3]).unwrap();
    check(p.end() == &comp![1, 1, 2], "skew path endpoint");
    check(
        p.to_tableau() == t && PosetPath::from_tableau(&t).unwrap() == p,
        "skew path/tableau correspondence",
    );
    let (d, asc) = p.descents();
    check(
        d.elements.is_empty() && asc == set(4, &[1, 2, 3]),
        "skew D(P), A(P)",
    );
    check(
        t.descents(TableauKind::RowStrict).unwrap() == set(4, &[1, 2, 3]),
        "skew Des_R",
    );

    let h = HookTableau::new(letters(&[
        &["1", "1", "3"],
        &["2"],
        &["3", "1'"],
        &["1'", "3'", "4'", "5'"],
        &["1'", "2'", "4'"],
    ]))
    .unwrap();
    check(
        h.content(3, 5) == (vec![2, 1, 2], vec![3, 1, 1, 2, 1]),
        "hook content monomial",
    );
    let std = Tableau::straight(vec![
        vec![1, 2, 5],
        vec![3],
        vec![4, 6],
        vec![7, 10, 11, 13],
        vec![8, 9, 12],
    ])
    .unwrap();
    check(h.standardize() == std, "hook standardization");
    check(
        std.descents(TableauKind::Immaculate).unwrap() == set(13, &[2, 3, 5, 6, 7, 11]),
        "hook Des",
    );
    from_checks(vec![c])
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("psi-duality and omega/reversal", psi_duality),
        ("definition consistency", definition_consistency),
        ("matrix identities", matrix_identities),
        ("creation operators vs Jacobi-Trudi", creation_operators),
        ("Pieri rules", pieri_rules),
        ("ribbon and h/e expansions", ribbon_and_h_e),
        ("Schur expansions", schur_expansions),
        ("skew route agreement", skew_routes),
        ("hook theorems", hook_theorems),
        ("worked examples", worked_examples),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let status = if out.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status} {name} ({}, {:.1}s)",
            i + 1,
            out.detail,
            start.elapsed().as_secs_f64()
        );
        all &= out.passed;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
