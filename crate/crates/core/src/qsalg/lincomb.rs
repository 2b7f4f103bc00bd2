use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::scalars::{Poly, Rat, Var};

/// Finite formal sum of words with coefficients in `Q[r]`.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// elements. Iteration follows the lexicographic order on words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb {
    alphabet: Alphabet,
    terms: BTreeMap<Word, Poly>,
}

impl LinComb {
    pub fn zero(alphabet: &Alphabet) -> Self {
        LinComb {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The unit, i.e. the empty word with coefficient 1.
    pub fn one(alphabet: &Alphabet) -> Self {
        Self::from_word_unchecked(alphabet, Word::empty())
    }

    pub fn word(alphabet: &Alphabet, word: Word) -> Result<Self> {
        alphabet.validate_word(&word)?;
        Ok(Self::from_word_unchecked(alphabet, word))
    }

    pub(crate) fn from_word_unchecked(alphabet: &Alphabet, word: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(word, Poly::one(Var::R));
        LinComb {
            alphabet: alphabet.clone(),
            terms,
        }
    }

    pub fn monomial(alphabet: &Alphabet, word: Word, coeff: Poly) -> Result<Self> {
        alphabet.validate_word(&word)?;
        let mut lc = LinComb::zero(alphabet);
        lc.add_term(word, &coeff);
        Ok(lc)
    }

    pub fn from_terms<I>(alphabet: &Alphabet, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Poly)>,
    {
        let mut lc = LinComb::zero(alphabet);
        for (w, c) in terms {
            alphabet.validate_word(&w)?;
            lc.add_term(w, &c);
        }
        Ok(lc)
    }

    /// Builds a combination from words and small integer coefficients.
    pub fn from_int_terms(alphabet: &Alphabet, terms: &[(Word, i64)]) -> Result<Self> {
        Self::from_terms(
            alphabet,
            terms
                .iter()
                .map(|(w, c)| (w.clone(), Poly::constant(Var::R, Rat::from_int(*c)))),
        )
    }

    pub(crate) fn from_map_unchecked(alphabet: &Alphabet, terms: BTreeMap<Word, Poly>) -> Self {
        let mut terms = terms;
        terms.retain(|_, c| !c.is_zero());
        LinComb {
            alphabet: alphabet.clone(),
            terms,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Poly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> Poly {
        self.terms
            .get(word)
            .cloned()
            .unwrap_or_else(|| Poly::zero(Var::R))
    }

    /// Number of words with nonzero coefficient.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, word: Word, coeff: &Poly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_alphabet(&self, other: &LinComb) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(
                self.alphabet.to_string(),
                other.alphabet.to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &LinComb) -> Result<LinComb> {
        self.same_alphabet(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LinComb) -> Result<LinComb> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, c: &Poly) -> LinComb {
        if c.is_zero() {
            return LinComb::zero(&self.alphabet);
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, a)| (w.clone(), a * c))
            .collect();
        LinComb::from_map_unchecked(&self.alphabet, terms)
    }

    pub fn scale_rat(&self, c: &Rat) -> LinComb {
        self.scale(&Poly::constant(Var::R, c.clone()))
    }

    /// Concatenation product, extended bilinearly.
    pub fn concat(&self, other: &LinComb) -> Result<LinComb> {
        self.same_alphabet(other)?;
        let mut out = LinComb::zero(&self.alphabet);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), &(a * b));
            }
        }
        Ok(out)
    }

    /// Extends a word-level map linearly.
    pub fn map_linear<F>(&self, mut f: F) -> Result<LinComb>
    where
        F: FnMut(&Word) -> Result<LinComb>,
    {
        let mut out = LinComb::zero(&self.alphabet);
        for (w, c) in &self.terms {
            let image = f(w)?;
            self.same_alphabet(&image)?;
            for (v, d) in image.terms {
                out.add_term(v, &(&d * c));
            }
        }
        Ok(out)
    }

    /// Applies a word-to-word map linearly.
    pub fn map_words<F>(&self, mut f: F) -> LinComb
    where
        F: FnMut(&Word) -> Word,
    {
        let mut out = LinComb::zero(&self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(f(w), c);
        }
        out
    }

    /// Specializes the interpolation parameter to a rational value.
    pub fn specialize(&self, r: &Rat) -> LinComb {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), Poly::constant(Var::R, c.eval(r))))
            .collect();
        LinComb::from_map_unchecked(&self.alphabet, terms)
    }

    /// Substitutes a polynomial in `r` for `r` in every coefficient.
    pub fn substitute(&self, p: &Poly) -> Result<LinComb> {
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            terms.insert(w.clone(), c.compose(p)?);
        }
        Ok(LinComb::from_map_unchecked(&self.alphabet, terms))
    }

    /// True when every coefficient is a rational constant.
    pub fn is_r_free(&self) -> bool {
        self.terms.values().all(Poly::is_constant)
    }
}

impl Add for &LinComb {
    type Output = LinComb;
    fn add(self, rhs: &LinComb) -> LinComb {
        self.checked_add(rhs).expect("alphabet mismatch")
    }
}

impl Sub for &LinComb {
    type Output = LinComb;
    fn sub(self, rhs: &LinComb) -> LinComb {
        self.checked_sub(rhs).expect("alphabet mismatch")
    }
}

impl Neg for &LinComb {
    type Output = LinComb;
    fn neg(self) -> LinComb {
        LinComb {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for LinComb {
    /// Text form such as `z1z2 + z2z1 + (1 - 2r)*z3`; the empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let word = self.alphabet.fmt_word(w);
            if c.is_constant() {
                let v = c.constant_term();
                let neg = v.is_negative();
                let mag = v.abs();
                match (i, neg) {
                    (0, true) => write!(f, "-")?,
                    (0, false) => {}
                    (_, true) => write!(f, " - ")?,
                    (_, false) => write!(f, " + ")?,
                }
                if w.is_empty() {
                    write!(f, "{mag}")?;
                } else if mag.is_one() {
                    write!(f, "{word}")?;
                } else {
                    write!(f, "{mag}*{word}")?;
                }
            } else {
                if i > 0 {
                    write!(f, " + ")?;
                }
                if w.is_empty() {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "({c})*{word}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinComb[{}]({})", self.alphabet, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsalg::Letter;

    #[test]
    fn zero_coefficients_vanish() {
        let a = Alphabet::Mzv;
        let x = LinComb::word(&a, Word::z(&[1, 2])).unwrap();
        let z = &x - &x;
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn display_forms() {
        let a = Alphabet::Mzv;
        let x = LinComb::from_terms(
            &a,
            vec![
                (Word::z(&[3]), Poly::from_ints(Var::R, &[1, -2])),
                (Word::z(&[1, 2]), Poly::one(Var::R)),
                (Word::z(&[2, 1]), Poly::from_ints(Var::R, &[-3])),
                (Word::empty(), Poly::from_ints(Var::R, &[2])),
            ],
        )
        .unwrap();
        assert_eq!(x.to_string(), "2 + z1z2 - 3*z2z1 + (1 - 2r)*z3");
    }

    #[test]
    fn rejects_foreign_words() {
        let a = Alphabet::Mzv;
        let w = Word::new(vec![Letter::Colored { weight: 1, color: 1 }]);
        assert!(LinComb::word(&a, w).is_err());
        let e = LinComb::one(&Alphabet::euler(2).unwrap());
        assert!(LinComb::one(&a).checked_add(&e).is_err());
    }

    #[test]
    fn concat_is_bilinear() {
        let a = Alphabet::Mzv;
        let x = LinComb::from_int_terms(&a, &[(Word::z(&[1]), 1), (Word::z(&[2]), 2)]).unwrap();
        let y = LinComb::word(&a, Word::z(&[3])).unwrap();
        let xy = x.concat(&y).unwrap();
        let expect =
            LinComb::from_int_terms(&a, &[(Word::z(&[1, 3]), 1), (Word::z(&[2, 3]), 2)]).unwrap();
        assert_eq!(xy, expect);
    }

    #[test]
    fn specialize_and_substitute() {
        let a = Alphabet::Mzv;
        let x = LinComb::monomial(&a, Word::z(&[3]), Poly::from_ints(Var::R, &[1, -2])).unwrap();
        assert!(x.specialize(&Rat::new(1, 2).unwrap()).is_zero());
        let y = x.substitute(&Poly::from_ints(Var::R, &[1, -1])).unwrap();
        assert_eq!(y.coeff(&Word::z(&[3])), Poly::from_ints(Var::R, &[-1, 2]));
    }
}
