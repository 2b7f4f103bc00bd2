//! Deconcatenation coproduct and the closed-form antipode Σ^(1-2r)TR.

use quasi_shuffle::hopf::{antipode_by_recursion, antipode_for, coproduct, hopf_axiom_check, Side};
use quasi_shuffle::qsalg::{Alphabet, LinComb, Product, Word};

fn main() -> quasi_shuffle::Result<()> {
    let m = Alphabet::Mzv;
    let w = Word::z(&[1, 2, 3]);
    let x = LinComb::word(&m, w.clone())?;
    println!("Δ(z1z2z3) = {}", coproduct(&x));
    for kind in [Product::QuasiShuffle, Product::Star, Product::interpolated()] {
        let closed = antipode_for(&x, &kind);
        let recursive = antipode_by_recursion(&w, &kind, &m)?;
        let axioms = hopf_axiom_check(&w, &kind, &m, Side::Left)? && hopf_axiom_check(&w, &kind, &m, Side::Right)?;
        println!("S_{}(z1z2z3) = {closed}", kind.name());
        println!("    matches recursion: {}, axioms hold: {axioms}", closed == recursive);
    }
    Ok(())
}
