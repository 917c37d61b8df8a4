//! The nine acceptance criteria. Each prints one PASS/FAIL line; the test
//! fails if any criterion does.

use bqkz_core::verify::{
    asymptotics, cocycle_compatibility, hecke_relations, macdonald, numeric, poincare_and_value, polynomial_solutions,
    series, solver, yang_baxter, Check, NumericConfig,
};
use std::time::{Duration, Instant};

struct Outcome {
    passed: bool,
    line: String,
}

fn criterion(no: u32, title: &str, budget: Option<Duration>, run: impl FnOnce() -> Vec<Check>) -> Outcome {
    let start = Instant::now();
    let checks = run();
    let took = start.elapsed();
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| format!("{} [{}]", c.name, c.detail)).collect();
    let in_time = budget.is_none_or(|b| took <= b);
    let passed = failed.is_empty() && in_time;
    let mut line = format!("criterion {no} {title}: {} ({} checks, {:.2} s", if passed { "PASS" } else { "FAIL" }, checks.len(), took.as_secs_f64());
    if let Some(b) = budget {
        line.push_str(&format!(", budget {} s", b.as_secs()));
    }
    line.push(')');
    if !failed.is_empty() {
        line.push_str(&format!("; failing: {}", failed.join("; ")));
    }
    if !in_time {
        line.push_str("; over time budget");
    }
    println!("{line}");
    Outcome { passed, line }
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

#[test]
fn acceptance() {
    let outcomes = vec![
        criterion(1, "Hecke relations, N = 2, 3, 4", secs(5), || (2..=4).flat_map(hecke_relations).collect()),
        criterion(2, "Yang-Baxter with symbolic z, z', N = 3, 4", secs(30), || vec![yang_baxter(3), yang_baxter(4)]),
        criterion(3, "cocycle compatibility at 100 random points, N = 2, 3", secs(120), || {
            vec![cocycle_compatibility(2, 100, 11), cocycle_compatibility(3, 100, 12)]
        }),
        criterion(4, "asymptotic leading terms for eps_j and varpi_i, N = 2, 3", None, || vec![asymptotics(2), asymptotics(3)]),
        criterion(5, "polynomial solutions Q_λ, |λ| ≤ 4, N = 2, 3", secs(300), || {
            (2..=3).flat_map(|n| polynomial_solutions(n, 4)).collect()
        }),
        criterion(6, "Macdonald polynomials, |λ| ≤ 4, N = 2, 3", None, || {
            let mut v: Vec<Check> = (2..=3).flat_map(|n| macdonald(n, 4)).collect();
            v.extend(poincare_and_value(4));
            v
        }),
        criterion(7, "Harish-Chandra series, D = 4 (N = 2), D = 3 (N = 3)", secs(600), || {
            let mut v = series(2, 4);
            v.extend(series(3, 3));
            v
        }),
        criterion(8, "numeric relations of Φ_κ, N = 2, q = 0.3, k = 0.7, D = 8", None, || numeric(&NumericConfig::standard())),
        criterion(9, "recurrence solver consistency and toy system", None, || {
            let mut v = solver(2, 4);
            v.extend(solver(3, 3));
            v
        }),
    ];
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.line.as_str()).collect();
    assert!(failed.is_empty(), "failed criteria:\n{}", failed.join("\n"));
}
