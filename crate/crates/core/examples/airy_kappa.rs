//! Airy zeta values as polynomials in κ = -Ai'(0)/Ai(0).

use quasi_shuffle::zeval::{airy_repeated_poly, airy_zeta_poly, KAPPA};

fn main() -> quasi_shuffle::Result<()> {
    for k in 2..=6 {
        let p = airy_zeta_poly(k)?;
        println!("ζ_Ai({k}) = {p}  ≈ {:.10}", p.eval_f64(KAPPA));
    }
    for n in 1..=6 {
        println!("ζ_Ai({{2}}_{n}) = {}", airy_repeated_poly(2, n)?);
    }
    Ok(())
}
