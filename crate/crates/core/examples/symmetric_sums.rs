//! Symmetric sums over set partitions, symbolically and for zeta values.

use quasi_shuffle::mzv::SignedInt;
use quasi_shuffle::qsalg::Alphabet;
use quasi_shuffle::scalars::Rat;
use quasi_shuffle::symsum::{c_r_coeff, repeated_power_sides, repeated_zeta_partition_formula, set_partitions, symmetric_sum_sides, zeta_symsum_report};

fn main() -> quasi_shuffle::Result<()> {
    for b in set_partitions(3)? {
        println!("c_r({b}) = {}", c_r_coeff(&b));
    }
    let f = Alphabet::free(&["a", "b", "c"])?;
    let letters = (0..3).map(|i| f.generator(i)).collect::<quasi_shuffle::Result<Vec<_>>>()?;
    let (lhs, rhs) = symmetric_sum_sides(&f, &letters)?;
    println!("\nsymmetric sum of [a][b][c] holds: {}", lhs == rhs);

    let m = Alphabet::Mzv;
    let (lhs, rhs) = repeated_power_sides(&m, &m.z(2)?, 4)?;
    println!("z2^4 partition formula holds: {}", lhs == rhs);
    let half = Rat::new(1, 2)?;
    let v = repeated_zeta_partition_formula(SignedInt::new(2)?, 2, &half, 100_000)?;
    println!("ζ^(1/2)(2,2) from odd partitions = {v:.12}  (π⁴/72 = {:.12})\n", std::f64::consts::PI.powi(4) / 72.0);

    let keys = [SignedInt::new(2)?, SignedInt::new(3)?];
    println!("{}", zeta_symsum_report(&keys, &Rat::zero(), 100_000)?);
    Ok(())
}
