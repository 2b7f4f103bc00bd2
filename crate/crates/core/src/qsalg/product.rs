//! The shuffle, quasi-shuffle, star and interpolated products.
//!
//! All four are instances of one recursion on words. For letters `a, b` and
//! words `v, w`,
//!
//! ```text
//! av • bw = a(v • bw) + b(av • w) + α (a◇b)(v • w) + β (a◇b)◇(v • w)
//! ```
//!
//! where `x◇(...)` diamonds `x` into the first letter of every word, and the
//! last term is absent when `v = w = 1`. The coefficients are
//!
//! | product        | α       | β        |
//! |----------------|---------|----------|
//! | shuffle        | 0       | 0        |
//! | quasi-shuffle  | 1       | 0        |
//! | star           | -1      | 0        |
//! | interpolated   | 1 - 2r  | r² - r   |

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use super::{Alphabet, Letter, LinComb, Word};
use crate::error::{Error, Result};
use crate::scalars::{Poly, Rat, Var};

/// Selects one of the commutative word products.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Product {
    Shuffle,
    QuasiShuffle,
    Star,
    /// Interpolated product at a parameter given as a polynomial in `r`:
    /// `Poly::r()` is the symbolic product, a constant specializes it.
    Interpolated(Poly),
}

impl Product {
    /// The interpolated product with symbolic `r`.
    pub fn interpolated() -> Self {
        Product::Interpolated(Poly::r())
    }

    pub fn interpolated_at(r: Rat) -> Self {
        Product::Interpolated(Poly::constant(Var::R, r))
    }

    /// The parameter polynomial `p` such that this product is `⋄_p`.
    pub fn parameter(&self) -> Option<Poly> {
        match self {
            Product::Shuffle => None,
            Product::QuasiShuffle => Some(Poly::zero(Var::R)),
            Product::Star => Some(Poly::one(Var::R)),
            Product::Interpolated(p) => Some(p.clone()),
        }
    }

    fn coefficients(&self) -> (Poly, Poly) {
        match self {
            Product::Shuffle => (Poly::zero(Var::R), Poly::zero(Var::R)),
            Product::QuasiShuffle | Product::Star | Product::Interpolated(_) => {
                let p = self.parameter().expect("stuffle-type product");
                let one = Poly::one(Var::R);
                let alpha = &one - &(&p + &p);
                let beta = &(&p * &p) - &p;
                (alpha, beta)
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            Product::Shuffle => "sh".into(),
            Product::QuasiShuffle => "qsh".into(),
            Product::Star => "star".into(),
            Product::Interpolated(p) if *p == Poly::r() => "interp".into(),
            Product::Interpolated(p) => format!("interp[r={p}]"),
        }
    }
}

type Terms = BTreeMap<Word, Poly>;

fn accumulate(out: &mut Terms, word: Word, coeff: Poly) {
    if coeff.is_zero() {
        return;
    }
    match out.entry(word) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn scaled(c: &Poly, by: Option<&Poly>) -> Poly {
    match by {
        None => c.clone(),
        Some(k) => c * k,
    }
}

/// Memoized product of two fixed words, indexed by suffix start positions.
struct WordProduct<'a> {
    alphabet: &'a Alphabet,
    u: &'a [Letter],
    v: &'a [Letter],
    /// `None` means the coefficient is 1.
    alpha: Option<Option<&'a Poly>>,
    beta: Option<&'a Poly>,
    memo: HashMap<(usize, usize), Rc<Terms>>,
}

impl<'a> WordProduct<'a> {
    fn new(alphabet: &'a Alphabet, u: &'a [Letter], v: &'a [Letter], alpha: &'a Poly, beta: &'a Poly) -> Self {
        let alpha = if alpha.is_zero() {
            None
        } else if alpha.is_one() {
            Some(None)
        } else {
            Some(Some(alpha))
        };
        let beta = (!beta.is_zero()).then_some(beta);
        WordProduct {
            alphabet,
            u,
            v,
            alpha,
            beta,
            memo: HashMap::new(),
        }
    }

    fn get(&mut self, i: usize, j: usize) -> Rc<Terms> {
        if let Some(t) = self.memo.get(&(i, j)) {
            return Rc::clone(t);
        }
        let t = Rc::new(self.compute(i, j));
        self.memo.insert((i, j), Rc::clone(&t));
        t
    }

    fn compute(&mut self, i: usize, j: usize) -> Terms {
        let one = Poly::one(Var::R);
        let mut out = Terms::new();
        if i == self.u.len() {
            out.insert(Word::new(self.v[j..].to_vec()), one);
            return out;
        }
        if j == self.v.len() {
            out.insert(Word::new(self.u[i..].to_vec()), one);
            return out;
        }
        let a = &self.u[i];
        let b = &self.v[j];
        for (w, c) in self.get(i + 1, j).iter() {
            accumulate(&mut out, w.prepend(a.clone()), c.clone());
        }
        for (w, c) in self.get(i, j + 1).iter() {
            accumulate(&mut out, w.prepend(b.clone()), c.clone());
        }
        if self.alpha.is_none() && self.beta.is_none() {
            return out;
        }
        let ab = self.alphabet.diamond_unchecked(a, b);
        let rest = self.get(i + 1, j + 1);
        if let Some(alpha) = self.alpha {
            for (w, c) in rest.iter() {
                accumulate(&mut out, w.prepend(ab.clone()), scaled(c, alpha));
            }
        }
        let both_last = i + 1 == self.u.len() && j + 1 == self.v.len();
        if let (Some(beta), false) = (self.beta, both_last) {
            for (w, c) in rest.iter() {
                let mut letters = w.letters().to_vec();
                letters[0] = self.alphabet.diamond_unchecked(&ab, &letters[0]);
                accumulate(&mut out, Word::new(letters), c * beta);
            }
        }
        out
    }
}

fn check_pair(u: &LinComb, v: &LinComb) -> Result<()> {
    if u.alphabet() != v.alphabet() {
        return Err(Error::AlphabetMismatch(
            u.alphabet().to_string(),
            v.alphabet().to_string(),
        ));
    }
    Ok(())
}

/// Bilinear product of two linear combinations.
pub fn product(kind: &Product, u: &LinComb, v: &LinComb) -> Result<LinComb> {
    check_pair(u, v)?;
    let alphabet = u.alphabet();
    let (alpha, beta) = kind.coefficients();
    let mut out = Terms::new();
    for (wu, cu) in u.terms() {
        for (wv, cv) in v.terms() {
            let cuv = cu * cv;
            let mut engine = WordProduct::new(alphabet, wu.letters(), wv.letters(), &alpha, &beta);
            let terms = engine.get(0, 0);
            for (w, c) in terms.iter() {
                accumulate(&mut out, w.clone(), c * &cuv);
            }
        }
    }
    Ok(LinComb::from_map_unchecked(alphabet, out))
}

/// Quasi-shuffle product `*`.
pub fn qsh_product(u: &LinComb, v: &LinComb) -> Result<LinComb> {
    product(&Product::QuasiShuffle, u, v)
}

/// Shuffle product, the quasi-shuffle with the diamond term dropped.
pub fn shuffle_product(u: &LinComb, v: &LinComb) -> Result<LinComb> {
    product(&Product::Shuffle, u, v)
}

/// Star product, the interpolated product at `r = 1`.
pub fn star_product(u: &LinComb, v: &LinComb) -> Result<LinComb> {
    product(&Product::Star, u, v)
}

/// Interpolated product with symbolic `r`.
pub fn interp_product(u: &LinComb, v: &LinComb) -> Result<LinComb> {
    product(&Product::interpolated(), u, v)
}

/// Interpolated product at parameter `p` (a polynomial in `r`).
pub fn interp_product_at(u: &LinComb, v: &LinComb, p: &Poly) -> Result<LinComb> {
    product(&Product::Interpolated(p.clone()), u, v)
}

/// Replaces the leading letter `c` of every word by `a ◇ c`, linearly.
pub fn diamond_extend(a: &Letter, ws: &LinComb) -> Result<LinComb> {
    let alphabet = ws.alphabet();
    alphabet.validate(a)?;
    let mut out = Terms::new();
    for (w, c) in ws.terms() {
        let first = w.first().ok_or(Error::EmptyWord)?;
        let mut letters = w.letters().to_vec();
        letters[0] = alphabet.diamond_unchecked(a, first);
        accumulate(&mut out, Word::new(letters), c.clone());
    }
    Ok(LinComb::from_map_unchecked(alphabet, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mzv(w: &[u32]) -> LinComb {
        LinComb::word(&Alphabet::Mzv, Word::z(w)).unwrap()
    }

    fn ints(terms: &[(&[u32], i64)]) -> LinComb {
        let t: Vec<(Word, i64)> = terms.iter().map(|(w, c)| (Word::z(w), *c)).collect();
        LinComb::from_int_terms(&Alphabet::Mzv, &t).unwrap()
    }

    /// Quasi-shuffles of words of lengths m, n as pairs of increasing maps
    /// into {0..k} whose images cover {0..k}; independent of the recursion.
    fn brute_stuffle(alphabet: &Alphabet, u: &Word, v: &Word, with_diamond: bool) -> LinComb {
        let (m, n) = (u.len(), v.len());
        let mut out = LinComb::zero(alphabet);
        let lo = if with_diamond { m.max(n) } else { m + n };
        for k in lo..=m + n {
            for fmask in 0u32..(1 << k) {
                if fmask.count_ones() as usize != m {
                    continue;
                }
                for gmask in 0u32..(1 << k) {
                    if gmask.count_ones() as usize != n || (fmask | gmask) != (1 << k) - 1 {
                        continue;
                    }
                    let (mut iu, mut iv) = (0, 0);
                    let mut letters = Vec::new();
                    for pos in 0..k {
                        let fu = fmask >> pos & 1 == 1;
                        let gv = gmask >> pos & 1 == 1;
                        let l = match (fu, gv) {
                            (true, true) => {
                                let l = alphabet
                                    .diamond(&u.letters()[iu], &v.letters()[iv])
                                    .unwrap();
                                iu += 1;
                                iv += 1;
                                l
                            }
                            (true, false) => {
                                iu += 1;
                                u.letters()[iu - 1].clone()
                            }
                            (false, true) => {
                                iv += 1;
                                v.letters()[iv - 1].clone()
                            }
                            (false, false) => unreachable!(),
                        };
                        letters.push(l);
                    }
                    out = &out + &LinComb::word(alphabet, Word::new(letters)).unwrap();
                }
            }
        }
        out
    }

    #[test]
    fn qsh_examples() {
        assert_eq!(
            qsh_product(&mzv(&[1]), &mzv(&[2])).unwrap(),
            ints(&[(&[1, 2], 1), (&[2, 1], 1), (&[3], 1)])
        );
        let w = mzv(&[3, 1]);
        assert_eq!(qsh_product(&LinComb::one(&Alphabet::Mzv), &w).unwrap(), w);
        assert_eq!(
            qsh_product(&mzv(&[1]), &mzv(&[1, 1])).unwrap(),
            ints(&[(&[1, 1, 1], 3), (&[1, 2], 1), (&[2, 1], 1)])
        );
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(
            shuffle_product(&mzv(&[1]), &mzv(&[2])).unwrap(),
            ints(&[(&[1, 2], 1), (&[2, 1], 1)])
        );
        assert_eq!(
            shuffle_product(&mzv(&[1]), &mzv(&[1])).unwrap(),
            ints(&[(&[1, 1], 2)])
        );
        assert_eq!(
            shuffle_product(&mzv(&[1, 2]), &mzv(&[3])).unwrap(),
            ints(&[(&[1, 2, 3], 1), (&[1, 3, 2], 1), (&[3, 1, 2], 1)])
        );
    }

    #[test]
    fn star_examples() {
        assert_eq!(
            star_product(&mzv(&[1]), &mzv(&[1])).unwrap(),
            ints(&[(&[1, 1], 2), (&[2], -1)])
        );
        let w = mzv(&[2, 2]);
        assert_eq!(star_product(&LinComb::one(&Alphabet::Mzv), &w).unwrap(), w);
        assert_eq!(
            star_product(&mzv(&[1]), &mzv(&[2])).unwrap(),
            ints(&[(&[1, 2], 1), (&[2, 1], 1), (&[3], -1)])
        );
    }

    #[test]
    fn interp_letter_case() {
        let p = interp_product(&mzv(&[1]), &mzv(&[2])).unwrap();
        assert_eq!(p.coeff(&Word::z(&[1, 2])), Poly::one(Var::R));
        assert_eq!(p.coeff(&Word::z(&[2, 1])), Poly::one(Var::R));
        assert_eq!(p.coeff(&Word::z(&[3])), Poly::from_ints(Var::R, &[1, -2]));
        assert_eq!(p.num_terms(), 3);
    }

    #[test]
    fn interp_z1_times_z1z1() {
        let p = interp_product(&mzv(&[1]), &mzv(&[1, 1])).unwrap();
        let expect = LinComb::from_terms(
            &Alphabet::Mzv,
            vec![
                (Word::z(&[1, 1, 1]), Poly::from_ints(Var::R, &[3])),
                (Word::z(&[1, 2]), Poly::from_ints(Var::R, &[1, -2])),
                (Word::z(&[2, 1]), Poly::from_ints(Var::R, &[1, -2])),
                (Word::z(&[3]), Poly::from_ints(Var::R, &[0, -1, 1])),
            ],
        )
        .unwrap();
        assert_eq!(p, expect);
    }

    #[test]
    fn half_recursion_coefficient() {
        // at r = 1/2 the (a◇b)(v•w) term vanishes and the diamond-extended one is -1/4
        let half = Product::interpolated_at(Rat::new(1, 2).unwrap());
        let (alpha, beta) = half.coefficients();
        assert!(alpha.is_zero());
        assert_eq!(beta, Poly::constant(Var::R, Rat::new(-1, 4).unwrap()));
        let p = product(&half, &mzv(&[1]), &mzv(&[1, 1])).unwrap();
        assert_eq!(p.coeff(&Word::z(&[3])), Poly::constant(Var::R, Rat::new(-1, 4).unwrap()));
    }

    #[test]
    fn diamond_extend_examples() {
        let z1 = Letter::Z(1);
        assert_eq!(diamond_extend(&z1, &mzv(&[2, 3])).unwrap(), mzv(&[3, 3]));
        assert_eq!(diamond_extend(&z1, &mzv(&[1])).unwrap(), mzv(&[2]));
        let x = ints(&[(&[1, 1], 1), (&[2], 1)]);
        assert_eq!(
            diamond_extend(&z1, &x).unwrap(),
            ints(&[(&[2, 1], 1), (&[3], 1)])
        );
        assert!(matches!(
            diamond_extend(&z1, &LinComb::one(&Alphabet::Mzv)),
            Err(Error::EmptyWord)
        ));
    }

    #[test]
    fn alphabet_mismatch() {
        let e = LinComb::one(&Alphabet::euler(2).unwrap());
        assert!(matches!(
            qsh_product(&mzv(&[1]), &e),
            Err(Error::AlphabetMismatch(..))
        ));
    }

    #[test]
    fn specializations_of_interp() {
        let u = ints(&[(&[1, 2], 1), (&[3], 2)]);
        let v = ints(&[(&[2, 1, 1], 1)]);
        let sym = interp_product(&u, &v).unwrap();
        assert_eq!(sym.specialize(&Rat::zero()), qsh_product(&u, &v).unwrap());
        assert_eq!(sym.specialize(&Rat::one()), star_product(&u, &v).unwrap());
    }

    fn letter_strategy(alphabet: Alphabet) -> BoxedStrategy<Letter> {
        match alphabet {
            Alphabet::Mzv => (1u32..4).prop_map(Letter::Z).boxed(),
            Alphabet::Euler(n) => (1u32..3, 0..n)
                .prop_map(|(weight, color)| Letter::Colored { weight, color })
                .boxed(),
            Alphabet::Free(names) => prop::collection::vec(0..names.len() as u32, 1..3)
                .prop_map(|mut g| {
                    g.sort_unstable();
                    Letter::Multiset(g)
                })
                .boxed(),
        }
    }

    fn alphabets() -> Vec<Alphabet> {
        vec![
            Alphabet::Mzv,
            Alphabet::euler(2).unwrap(),
            Alphabet::free(&["a", "b", "c"]).unwrap(),
        ]
    }

    fn word_strategy(alphabet: Alphabet, max: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(letter_strategy(alphabet), 0..=max).prop_map(Word::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn qsh_matches_brute_force(
            (alphabet, u, v) in (0usize..3).prop_flat_map(|ai| {
                let a = alphabets()[ai].clone();
                (Just(a.clone()), word_strategy(a.clone(), 3), word_strategy(a, 3))
            })
        ) {
            let lu = LinComb::word(&alphabet, u.clone()).unwrap();
            let lv = LinComb::word(&alphabet, v.clone()).unwrap();
            prop_assert_eq!(qsh_product(&lu, &lv).unwrap(), brute_stuffle(&alphabet, &u, &v, true));
            prop_assert_eq!(shuffle_product(&lu, &lv).unwrap(), brute_stuffle(&alphabet, &u, &v, false));
        }

        #[test]
        fn products_commute(
            ai in 0usize..3,
            u in prop::collection::vec(1u32..4, 0..=4),
            v in prop::collection::vec(1u32..4, 0..=4),
        ) {
            let alphabet = alphabets()[ai].clone();
            let to_word = |w: &[u32]| -> Word {
                Word::new(w.iter().map(|&i| match &alphabet {
                    Alphabet::Mzv => Letter::Z(i),
                    Alphabet::Euler(n) => Letter::Colored { weight: i, color: i % n },
                    Alphabet::Free(_) => Letter::Multiset(vec![i - 1]),
                }).collect())
            };
            let lu = LinComb::word(&alphabet, to_word(&u)).unwrap();
            let lv = LinComb::word(&alphabet, to_word(&v)).unwrap();
            for kind in [Product::Shuffle, Product::QuasiShuffle, Product::Star, Product::interpolated()] {
                prop_assert_eq!(product(&kind, &lu, &lv).unwrap(), product(&kind, &lv, &lu).unwrap());
            }
        }

        #[test]
        fn products_associate(
            u in prop::collection::vec(1u32..3, 0..=3),
            v in prop::collection::vec(1u32..3, 0..=3),
            w in prop::collection::vec(1u32..3, 0..=2),
        ) {
            let (lu, lv, lw) = (mzv(&u), mzv(&v), mzv(&w));
            for kind in [Product::Shuffle, Product::QuasiShuffle, Product::Star, Product::interpolated()] {
                let left = product(&kind, &product(&kind, &lu, &lv).unwrap(), &lw).unwrap();
                let right = product(&kind, &lu, &product(&kind, &lv, &lw).unwrap()).unwrap();
                prop_assert_eq!(left, right);
            }
        }
    }
}
