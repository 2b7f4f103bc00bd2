//! Alternating (level-2 colored) values and signed-index symmetric sums.

use quasi_shuffle::mzv::{Index, SignedInt};
use quasi_shuffle::psimaps::sigma_r;
use quasi_shuffle::symsum::zeta_symsum_rhs_symbolic;
use quasi_shuffle::zeval::{EvalConfig, Evaluator, ValueKind};

fn main() -> quasi_shuffle::Result<()> {
    let mut ev = Evaluator::new(EvalConfig::new(100_000, ValueKind::Euler(2))?);
    for w in [&[-1i64][..], &[-1, -1], &[-2], &[3, -1]] {
        let idx = Index::signed(w)?;
        println!("ζ{idx} = {}", ev.strict(&idx)?);
    }
    let idx = Index::signed(&[-1, 2, -3])?;
    println!("\nΣ^r(1̄,2,3̄) = {}", sigma_r(&idx.to_lincomb()));

    let keys: Vec<SignedInt> = [-1i64, 2, -3].iter().map(|&k| SignedInt::new(k)).collect::<quasi_shuffle::Result<_>>()?;
    for (k, c) in zeta_symsum_rhs_symbolic(&keys)? {
        let parts: Vec<String> = k.iter().map(|x| x.to_string()).collect();
        println!("  ({c}) · ζ product over [{}]", parts.join(", "));
    }
    Ok(())
}
