//! Duality, cyclic sums and sum-theorem index sets.

use quasi_shuffle::mzv::{cyclic_sum, interp_sum_rhs, sum_theorem_indices, tau, to_xy, Index};
use quasi_shuffle::qsalg::{Alphabet, Word};

fn main() -> quasi_shuffle::Result<()> {
    let w = Word::z(&[3, 1, 2]);
    let d = tau(&w)?;
    println!("{} = {} ↦ τ ↦ {}", Index::from_word(&Alphabet::Mzv, &w)?, to_xy(&w)?, Index::from_word(&Alphabet::Mzv, &d)?);
    println!("C(z2z1) = {}", cyclic_sum(&Word::z(&[2, 1]))?);

    let ix = sum_theorem_indices(6, 3)?;
    let names: Vec<String> = ix.iter().map(|i| i.to_string()).collect();
    println!("weight 6, depth 3: {}", names.join(" "));
    println!("Σ ζ^r over them = ({})·ζ(6)", interp_sum_rhs(6, 3)?);
    Ok(())
}
