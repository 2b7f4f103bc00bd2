//! The three letter-word identities satisfied by every quasi-shuffle
//! product and by its interpolated deformation. `a◇v` diamonds `a` into
//! the first letter of `v`.

use crate::error::{Error, Result};

use super::{diamond_extend, product, Alphabet, Letter, LinComb, Product, Word};

/// Left and right sides of one identity.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentitySides {
    pub name: &'static str,
    pub lhs: LinComb,
    pub rhs: LinComb,
}

impl IdentitySides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// For letters `a, b` and nonempty words `v, w`:
///
/// * `a◇(v•b) + ba◇v = (a◇v)•b + a◇bv`
/// * `(a◇v)•(b◇w) = a◇(v•(b◇w)) + b◇((a◇v)•w) - (a◇b)◇(v•w)`
/// * `a(v•(b◇w)) + a◇(v•bw) + b((a◇v)•w) + b◇(av•w)
///    = av•(b◇w) + (a◇v)•bw + 2(a◇b)(v•w)`
pub fn lemma_identities(
    alphabet: &Alphabet,
    kind: &Product,
    a: &Letter,
    b: &Letter,
    v: &Word,
    w: &Word,
) -> Result<[IdentitySides; 3]> {
    if v.is_empty() || w.is_empty() {
        return Err(Error::EmptyWord);
    }
    alphabet.validate(a)?;
    alphabet.validate(b)?;
    let word = |x: Word| LinComb::word(alphabet, x);
    let mul = |x: &LinComb, y: &LinComb| product(kind, x, y);
    let pre = |l: &Letter, x: &LinComb| LinComb::word(alphabet, Word::letter(l.clone()))?.concat(x);
    let ab = alphabet.diamond(a, b)?;
    let v_ = word(v.clone())?;
    let w_ = word(w.clone())?;
    let bl = word(Word::letter(b.clone()))?;
    let av = word(v.prepend(a.clone()))?;
    let bv = word(v.prepend(b.clone()))?;
    let bw = word(w.prepend(b.clone()))?;
    let a_v = diamond_extend(a, &v_)?;
    let b_w = diamond_extend(b, &w_)?;
    let vw = mul(&v_, &w_)?;

    let one_lhs = diamond_extend(a, &mul(&v_, &bl)?)?.checked_add(&pre(b, &a_v)?)?;
    let one_rhs = mul(&a_v, &bl)?.checked_add(&diamond_extend(a, &bv)?)?;

    let io_lhs = mul(&a_v, &b_w)?;
    let io_rhs = diamond_extend(a, &mul(&v_, &b_w)?)?
        .checked_add(&diamond_extend(b, &mul(&a_v, &w_)?)?)?
        .checked_sub(&diamond_extend(&ab, &vw)?)?;

    let st_lhs = pre(a, &mul(&v_, &b_w)?)?
        .checked_add(&diamond_extend(a, &mul(&v_, &bw)?)?)?
        .checked_add(&pre(b, &mul(&a_v, &w_)?)?)?
        .checked_add(&diamond_extend(b, &mul(&av, &w_)?)?)?;
    let st_rhs = mul(&av, &b_w)?
        .checked_add(&mul(&a_v, &bw)?)?
        .checked_add(&pre(&ab, &vw)?.scale_rat(&crate::scalars::Rat::from_int(2)))?;

    Ok([
        IdentitySides { name: "one", lhs: one_lhs, rhs: one_rhs },
        IdentitySides { name: "io", lhs: io_lhs, rhs: io_rhs },
        IdentitySides { name: "st", lhs: st_lhs, rhs: st_rhs },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let al = Alphabet::Mzv;
        let cases = [([1u32, 2], vec![1u32], vec![2u32]), ([2, 1], vec![1, 3], vec![1]), ([1, 1], vec![2, 1], vec![1, 2])];
        for kind in [Product::QuasiShuffle, Product::interpolated(), Product::Star] {
            for (ab, v, w) in &cases {
                let a = al.z(ab[0]).unwrap();
                let b = al.z(ab[1]).unwrap();
                for s in lemma_identities(&al, &kind, &a, &b, &Word::z(v), &Word::z(w)).unwrap() {
                    assert!(s.holds(), "{} {} {:?} {:?}: {} vs {}", kind.name(), s.name, v, w, s.lhs, s.rhs);
                }
            }
        }
    }
}
