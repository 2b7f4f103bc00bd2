//! Acceptance run: one PASS/FAIL line per criterion, N = 10^6 terms.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use quasi_shuffle::cli::{run_suite, SuiteConfig};
use quasi_shuffle::zeval::{TailMode, DEFAULT_TERMS};

const CRITERIA: [&str; 16] = [
    "letter-level product identities, 200 random samples, *, ⋄",
    "Ψ_f Ψ_g = Ψ_(f∘g), 100 random samples",
    "Σ = exp T log T, TΣT = Σ^-1, involutions, Σ^r Σ^s = Σ^(r+s)",
    "interpolated recursion equals Σ^-r(Σ^r u * Σ^r v)",
    "Hopf: multiplicativity, antipode axioms, closed form vs recursion",
    "symmetric sums (n <= 5), repeated powers (n <= 6), r = 0, 1",
    "Airy κ-polynomials",
    "repeated closed forms ζ({2}_n), ζ({4}_n), t({2}_n), t({4}_n)",
    "sum theorem weight 6 and interpolated sum theorem",
    "duality through weight 6",
    "cyclic-sum theorem through weight 4",
    "two-one instances",
    "totally odd sum theorem",
    "ζ^(1/2)(2,2) by three routes",
    "alternating values and symmetric sums",
    "ζ_G over analytic zero streams and Bessel closed form",
];

fn main() -> ExitCode {
    let cfg = SuiteConfig { terms: DEFAULT_TERMS, tail: TailMode::Asymptotic, ..SuiteConfig::default() };
    let start = Instant::now();
    let report = match run_suite("all", &cfg) {
        Ok(r) => r,
        Err(e) => {
            println!("FAIL suite runner: {e}");
            return ExitCode::FAILURE;
        }
    };
    let by: BTreeMap<u8, (usize, usize)> = report.by_criterion();
    let mut all_ok = true;
    for (i, label) in CRITERIA.iter().enumerate() {
        let k = i as u8 + 1;
        let (passed, total) = by.get(&k).copied().unwrap_or((0, 0));
        let ok = total > 0 && passed == total;
        all_ok &= ok;
        println!("{} {k:>2}. {label} ({passed}/{total})", if ok { "PASS" } else { "FAIL" });
    }
    for case in report.failures() {
        println!("  failed: {}", case.name);
    }
    let secs = start.elapsed().as_secs_f64();
    println!("full suite: {secs:.1}s (target < 60s)");
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
