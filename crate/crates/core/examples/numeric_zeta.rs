//! Numerical multiple zeta, star and t-values from the nested-sum kernel.

use quasi_shuffle::mzv::Index;
use quasi_shuffle::scalars::Rat;
use quasi_shuffle::zeval::{EvalConfig, Evaluator, TailMode, ValueKind};

fn main() -> quasi_shuffle::Result<()> {
    let cfg = EvalConfig::new(100_000, ValueKind::Zeta)?;
    let mut ev = Evaluator::new(cfg.clone());
    for w in [&[2u32][..], &[2, 1], &[3, 1, 1], &[2, 2]] {
        let idx = Index::mzv(w)?;
        println!("ζ{idx} = {}", ev.strict(&idx)?);
    }
    let idx = Index::mzv(&[2, 1])?;
    println!("ζ*(2,1) = {}", ev.star(&idx)?);
    println!("ζ^(1/2)(2,2) = {}", ev.interp(&Index::mzv(&[2, 2])?, &Rat::new(1, 2)?)?);

    // plain truncation for comparison
    let mut plain = Evaluator::new(cfg.with_tail(TailMode::None));
    println!("ζ(2,1) truncated = {}", plain.strict(&idx)?);

    let mut t = Evaluator::new(EvalConfig::new(100_000, ValueKind::TValue)?);
    println!("t(2) = {}", t.strict(&Index::mzv(&[2])?)?);
    Ok(())
}
