//! Shuffle, quasi-shuffle, star and interpolated products of small words.

use quasi_shuffle::qsalg::{product, Alphabet, LinComb, Product, Word};
use quasi_shuffle::scalars::Rat;

fn main() -> quasi_shuffle::Result<()> {
    let m = Alphabet::Mzv;
    let u = LinComb::word(&m, Word::z(&[1]))?;
    let v = LinComb::word(&m, Word::z(&[2, 1]))?;
    for kind in [
        Product::Shuffle,
        Product::QuasiShuffle,
        Product::Star,
        Product::interpolated(),
        Product::interpolated_at(Rat::new(1, 2)?),
    ] {
        println!("{:>14}: z1 • z2z1 = {}", kind.name(), product(&kind, &u, &v)?);
    }

    // colored letters add weights and colors
    let e = Alphabet::Euler(2);
    let a = LinComb::word(&e, Word::letter(e.colored(1, 1)?))?;
    println!("\nz{{1,1}} * z{{1,1}} = {}", product(&Product::QuasiShuffle, &a, &a)?);

    // multiset letters take unions
    let f = Alphabet::free(&["g1", "g2"])?;
    let g1 = LinComb::word(&f, Word::letter(f.generator(0)?))?;
    let g2 = LinComb::word(&f, Word::letter(f.generator(1)?))?;
    println!("[g1] ⋄ [g2] = {}", product(&Product::interpolated(), &g1, &g2)?);
    Ok(())
}
