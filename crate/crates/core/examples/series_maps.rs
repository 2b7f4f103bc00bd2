//! Ψ_f maps from formal series, Σ^r, and the composition law.

use quasi_shuffle::psimaps::{exp_map, log_map, psi, series_compose, sigma, sigma_r, t_map, SeriesPrefix};
use quasi_shuffle::qsalg::{Alphabet, LinComb, Word};

fn main() -> quasi_shuffle::Result<()> {
    let m = Alphabet::Mzv;
    let w = LinComb::word(&m, Word::z(&[1, 2, 1]))?;
    println!("Σ(z1z2z1)   = {}", sigma(&w));
    println!("Σ^r(z1z2z1) = {}", sigma_r(&w));
    println!("T(z1z2z1)   = {}", t_map(&w));

    let lhs = sigma(&w);
    let rhs = exp_map(&t_map(&log_map(&t_map(&w))));
    println!("Σ = exp T log T on z1z2z1: {}", lhs == rhs);

    let f = SeriesPrefix::exp_neg_minus_one(4);
    let g = SeriesPrefix::log_one_minus(4);
    let fg = series_compose(&f, &g);
    println!("(e^-t - 1) ∘ log(1-t) has coefficients {:?}", fg.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    let composed = psi(&fg, &w)?;
    let nested = psi(&f, &psi(&g, &w)?)?;
    println!("Ψ_f Ψ_g = Ψ_(f∘g): {}", composed == nested);
    Ok(())
}
