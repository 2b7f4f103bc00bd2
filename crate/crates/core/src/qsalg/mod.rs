//! Alphabets with a commutative, associative diamond product on letters,
//! words over them, linear combinations of words, and the word products.
//!
//! Three alphabets are supported:
//!
//! * [`Alphabet::Mzv`]: letters `z_i` (`i >= 1`) with `z_i ◇ z_j = z_{i+j}`;
//! * [`Alphabet::Euler`]: letters `z_{m,j}` with weights adding and colors
//!   adding modulo the level;
//! * [`Alphabet::Free`]: letters are nonempty multisets of named generators and
//!   the diamond is multiset union, i.e. the free commutative case.

mod lemma;
mod lincomb;
mod product;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

pub use lemma::{lemma_identities, IdentitySides};
pub use lincomb::LinComb;
pub use product::{
    diamond_extend, interp_product, interp_product_at, product, qsh_product, shuffle_product,
    star_product, Product,
};

use crate::error::{Error, Result};

/// The letter set together with its diamond product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Alphabet {
    Mzv,
    /// Colored letters of the given level `N >= 1`.
    Euler(u32),
    /// Generator names, nonempty and duplicate-free.
    Free(Arc<[String]>),
}

/// A single letter. Which variant is valid depends on the [`Alphabet`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Z(u32),
    Colored { weight: u32, color: u32 },
    /// Sorted generator indices.
    Multiset(Vec<u32>),
}

impl Letter {
    /// Weight of an MZV or colored letter, or the multiset size.
    pub fn weight(&self) -> u32 {
        match self {
            Letter::Z(w) => *w,
            Letter::Colored { weight, .. } => *weight,
            Letter::Multiset(g) => g.len() as u32,
        }
    }

    pub fn color(&self) -> u32 {
        match self {
            Letter::Colored { color, .. } => *color,
            _ => 0,
        }
    }
}

impl Alphabet {
    pub fn euler(level: u32) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidArgument("Euler level must be >= 1".into()));
        }
        Ok(Alphabet::Euler(level))
    }

    pub fn free<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidArgument(
                "free alphabet needs at least one generator".into(),
            ));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.contains(|c: char| c.is_whitespace() || "[],".contains(c)) {
                return Err(Error::InvalidArgument(format!("bad generator name '{n}'")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidArgument(format!("duplicate generator '{n}'")));
            }
        }
        Ok(Alphabet::Free(names.into()))
    }

    pub fn z(&self, weight: u32) -> Result<Letter> {
        let l = Letter::Z(weight);
        self.validate(&l)?;
        Ok(l)
    }

    /// Colored letter, with the color reduced modulo the level.
    pub fn colored(&self, weight: u32, color: i64) -> Result<Letter> {
        match self {
            Alphabet::Euler(n) => {
                let l = Letter::Colored {
                    weight,
                    color: color.rem_euclid(*n as i64) as u32,
                };
                self.validate(&l)?;
                Ok(l)
            }
            _ => Err(self.foreign(&format!("z{{{weight},{color}}}"))),
        }
    }

    /// Multiset letter from generator indices (any order).
    pub fn multiset(&self, mut gens: Vec<u32>) -> Result<Letter> {
        gens.sort_unstable();
        let l = Letter::Multiset(gens);
        self.validate(&l)?;
        Ok(l)
    }

    pub fn generator(&self, index: u32) -> Result<Letter> {
        self.multiset(vec![index])
    }

    pub fn generator_names(&self) -> &[String] {
        match self {
            Alphabet::Free(names) => names,
            _ => &[],
        }
    }

    fn foreign(&self, letter: &str) -> Error {
        Error::ForeignLetter {
            letter: letter.to_string(),
            alphabet: self.to_string(),
        }
    }

    pub fn contains(&self, letter: &Letter) -> bool {
        match (self, letter) {
            (Alphabet::Mzv, Letter::Z(w)) => *w >= 1,
            (Alphabet::Euler(n), Letter::Colored { weight, color }) => *weight >= 1 && color < n,
            (Alphabet::Free(names), Letter::Multiset(g)) => {
                !g.is_empty()
                    && g.windows(2).all(|p| p[0] <= p[1])
                    && g.iter().all(|&i| (i as usize) < names.len())
            }
            _ => false,
        }
    }

    pub fn validate(&self, letter: &Letter) -> Result<()> {
        if self.contains(letter) {
            Ok(())
        } else {
            Err(self.foreign(&format!("{letter:?}")))
        }
    }

    pub fn validate_word(&self, word: &Word) -> Result<()> {
        word.letters().iter().try_for_each(|l| self.validate(l))
    }

    /// The diamond product of two letters of this alphabet.
    pub fn diamond(&self, a: &Letter, b: &Letter) -> Result<Letter> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self.diamond_unchecked(a, b))
    }

    /// Diamond product for letters already known to belong to `self`.
    pub(crate) fn diamond_unchecked(&self, a: &Letter, b: &Letter) -> Letter {
        match (a, b) {
            (Letter::Z(i), Letter::Z(j)) => Letter::Z(i + j),
            (
                Letter::Colored { weight: m, color: j },
                Letter::Colored { weight: n, color: k },
            ) => {
                let level = match self {
                    Alphabet::Euler(level) => *level,
                    _ => unreachable!("colored letters outside an Euler alphabet"),
                };
                Letter::Colored {
                    weight: m + n,
                    color: (j + k) % level,
                }
            }
            (Letter::Multiset(g), Letter::Multiset(h)) => {
                let mut merged = Vec::with_capacity(g.len() + h.len());
                let (mut i, mut j) = (0, 0);
                while i < g.len() && j < h.len() {
                    if g[i] <= h[j] {
                        merged.push(g[i]);
                        i += 1;
                    } else {
                        merged.push(h[j]);
                        j += 1;
                    }
                }
                merged.extend_from_slice(&g[i..]);
                merged.extend_from_slice(&h[j..]);
                Letter::Multiset(merged)
            }
            _ => unreachable!("letters from different alphabets"),
        }
    }

    /// Diamond of a nonempty sequence of letters.
    pub(crate) fn diamond_all(&self, letters: &[Letter]) -> Letter {
        let (first, rest) = letters.split_first().expect("diamond of no letters");
        rest.iter()
            .fold(first.clone(), |acc, l| self.diamond_unchecked(&acc, l))
    }

    /// Text form of a letter: `z3`, `z{3,1}`, `[g1 g2]`.
    pub fn fmt_letter(&self, letter: &Letter) -> String {
        match letter {
            Letter::Z(i) => format!("z{i}"),
            Letter::Colored { weight, color } => format!("z{{{weight},{color}}}"),
            Letter::Multiset(g) => {
                let names = self.generator_names();
                let parts: Vec<String> = g
                    .iter()
                    .map(|&i| {
                        names
                            .get(i as usize)
                            .cloned()
                            .unwrap_or_else(|| format!("#{i}"))
                    })
                    .collect();
                format!("[{}]", parts.join(" "))
            }
        }
    }

    pub fn fmt_word(&self, word: &Word) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        word.letters().iter().map(|l| self.fmt_letter(l)).collect()
    }

    /// Compact index-style token of a letter, as accepted by the CLI word
    /// syntax: `3`, `3:1`, `[g1 g2]`.
    pub fn letter_token(&self, letter: &Letter) -> String {
        match letter {
            Letter::Z(i) => i.to_string(),
            Letter::Colored { weight, color } => format!("{weight}:{color}"),
            Letter::Multiset(_) => self.fmt_letter(letter),
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alphabet::Mzv => write!(f, "mzv"),
            Alphabet::Euler(n) => write!(f, "euler:{n}"),
            Alphabet::Free(names) => write!(f, "free:{}", names.join(",")),
        }
    }
}

impl FromStr for Alphabet {
    type Err = Error;

    /// Parses `mzv`, `euler:N` or `free:g1,g2,...`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |msg: String| Error::Parse { pos: 0, msg };
        if s == "mzv" {
            return Ok(Alphabet::Mzv);
        }
        if let Some(level) = s.strip_prefix("euler:") {
            let n: u32 = level
                .parse()
                .map_err(|_| bad(format!("invalid Euler level '{level}'")))?;
            return Alphabet::euler(n);
        }
        if let Some(gens) = s.strip_prefix("free:") {
            let names: Vec<&str> = gens.split(',').map(str::trim).collect();
            return Alphabet::free(&names);
        }
        Err(bad(format!("unknown alphabet '{s}'")))
    }
}

/// A finite sequence of letters; the empty word is the unit `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    /// MZV word `z_{i_1} ... z_{i_k}` from weights.
    pub fn z(weights: &[u32]) -> Self {
        Word(weights.iter().map(|&w| Letter::Z(w)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    /// Word length, the number of letters.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<&Letter> {
        self.0.first()
    }

    /// Sum of letter weights.
    pub fn weight(&self) -> u32 {
        self.0.iter().map(Letter::weight).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn prepend(&self, l: Letter) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(l);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().cloned().collect())
    }

    pub fn split_at(&self, i: usize) -> (Word, Word) {
        (Word(self.0[..i].to_vec()), Word(self.0[i..].to_vec()))
    }

    /// Concatenation power.
    pub fn power(&self, n: usize) -> Word {
        Word(self.0.iter().cloned().cycle().take(self.0.len() * n).collect())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond_examples() {
        let mzv = Alphabet::Mzv;
        assert_eq!(mzv.diamond(&Letter::Z(2), &Letter::Z(3)).unwrap(), Letter::Z(5));

        let e2 = Alphabet::euler(2).unwrap();
        let a = e2.colored(1, 1).unwrap();
        assert_eq!(e2.diamond(&a, &a).unwrap(), e2.colored(2, 0).unwrap());

        let free = Alphabet::free(&["g1", "g2"]).unwrap();
        let g1 = free.generator(0).unwrap();
        let g2 = free.generator(1).unwrap();
        assert_eq!(free.diamond(&g1, &g2).unwrap(), free.multiset(vec![0, 1]).unwrap());
        assert_eq!(free.fmt_letter(&free.diamond(&g2, &g1).unwrap()), "[g1 g2]");
    }

    #[test]
    fn diamond_rejects_foreign_letters() {
        let mzv = Alphabet::Mzv;
        let c = Letter::Colored { weight: 1, color: 0 };
        assert!(matches!(
            mzv.diamond(&Letter::Z(1), &c),
            Err(Error::ForeignLetter { .. })
        ));
        assert!(mzv.z(0).is_err());
        let e3 = Alphabet::euler(3).unwrap();
        assert!(e3.validate(&Letter::Colored { weight: 2, color: 3 }).is_err());
    }

    #[test]
    fn colors_reduce_mod_level() {
        let e3 = Alphabet::euler(3).unwrap();
        assert_eq!(e3.colored(2, 5).unwrap(), Letter::Colored { weight: 2, color: 2 });
        assert_eq!(e3.colored(2, -1).unwrap(), Letter::Colored { weight: 2, color: 2 });
        assert!(Alphabet::euler(0).is_err());
    }

    #[test]
    fn free_alphabet_invariants() {
        assert!(Alphabet::free::<&str>(&[]).is_err());
        assert!(Alphabet::free(&["a", "a"]).is_err());
        let f = Alphabet::free(&["a", "b"]).unwrap();
        assert!(f.multiset(vec![]).is_err());
        assert!(f.multiset(vec![2]).is_err());
        assert_eq!(f.multiset(vec![1, 0, 1]).unwrap(), Letter::Multiset(vec![0, 1, 1]));
    }

    #[test]
    fn alphabet_text_round_trip() {
        for s in ["mzv", "euler:2", "euler:5", "free:g1,g2,g3"] {
            let a: Alphabet = s.parse().unwrap();
            assert_eq!(a.to_string(), s);
        }
        assert!("euler:0".parse::<Alphabet>().is_err());
        assert!("qsym".parse::<Alphabet>().is_err());
    }

    #[test]
    fn word_basics() {
        let w = Word::z(&[1, 2, 3]);
        assert_eq!(w.len(), 3);
        assert_eq!(w.weight(), 6);
        assert_eq!(w.reversed(), Word::z(&[3, 2, 1]));
        assert_eq!(Word::empty().len(), 0);
        assert_eq!(Alphabet::Mzv.fmt_word(&Word::empty()), "1");
        assert_eq!(Alphabet::Mzv.fmt_word(&w), "z1z2z3");
        assert!(Word::empty() < Word::z(&[1]));
        assert!(Word::z(&[1, 5]) < Word::z(&[2]));
    }
}
