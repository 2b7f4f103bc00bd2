//! Compositions, contractions `I[w]` and the linear maps `Ψ_f` induced by
//! power series `f ∈ t·Q[r][[t]]`.
//!
//! `Ψ_f(w) = Σ_I c_{i_1}⋯c_{i_m} I[w]`, summed over compositions `I` of
//! `ℓ(w)`. Named instances: `Σ^p = Ψ_{t/(1-pt)}`, `T = Ψ_{-t}`,
//! `exp = Ψ_{e^t-1}`, `log = Ψ_{log(1+t)}`. `R` reverses words.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::qsalg::{product, Alphabet, LinComb, Product, Word};
use crate::scalars::{Poly, Rat, Var};

/// Ordered list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidArgument(
                "composition parts must be positive and nonempty".into(),
            ));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts `ℓ(I)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All `2^{n-1}` compositions of `n` in lexicographic order.
pub fn compositions(n: usize) -> Result<Vec<Composition>> {
    if n < 1 {
        return Err(Error::InvalidArgument("compositions need n >= 1".into()));
    }
    fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for k in 1..=n {
            prefix.push(k);
            rec(n - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(1 << (n - 1));
    rec(n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `I[w]`: diamonds the consecutive blocks of `w` given by the parts of `I`.
pub fn contract(alphabet: &Alphabet, comp: &Composition, w: &Word) -> Result<Word> {
    if comp.total() != w.len() {
        return Err(Error::CompositionMismatch {
            parts: comp.total(),
            len: w.len(),
        });
    }
    alphabet.validate_word(w)?;
    let mut letters = Vec::with_capacity(comp.len());
    let mut start = 0;
    for &k in comp.parts() {
        letters.push(alphabet.diamond_all(&w.letters()[start..start + k]));
        start += k;
    }
    Ok(Word::new(letters))
}

/// The coefficients `c_1, …, c_D` of a series `f = c_1 t + c_2 t² + ⋯`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPrefix {
    coeffs: Vec<Poly>,
}

impl SeriesPrefix {
    /// Series from `c_1..c_D`; needs `D >= 1`.
    pub fn new(coeffs: Vec<Poly>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("series depth must be >= 1".into()));
        }
        if let Some(c) = coeffs.iter().find(|c| c.var() != Var::R) {
            return Err(Error::MixedIndeterminates(Var::R.symbol(), c.var().symbol()));
        }
        Ok(SeriesPrefix { coeffs })
    }

    pub fn from_rats(coeffs: &[Rat]) -> Result<Self> {
        Self::new(
            coeffs
                .iter()
                .map(|c| Poly::constant(Var::R, c.clone()))
                .collect(),
        )
    }

    /// `c_i = f(i)` for `i = 1..=depth`.
    pub fn from_fn(depth: usize, f: impl Fn(usize) -> Poly) -> Result<Self> {
        Self::new((1..=depth).map(f).collect())
    }

    fn rational(depth: usize, f: impl Fn(usize) -> Rat) -> Self {
        Self::from_fn(depth.max(1), |i| Poly::constant(Var::R, f(i))).expect("depth >= 1")
    }

    /// `f = t`.
    pub fn identity(depth: usize) -> Self {
        Self::rational(depth, |i| if i == 1 { Rat::one() } else { Rat::zero() })
    }

    /// `f = -t`, inducing `T`.
    pub fn neg(depth: usize) -> Self {
        Self::rational(depth, |i| if i == 1 { -Rat::one() } else { Rat::zero() })
    }

    /// `f = t/(1 - p t)`, so `c_i = p^{i-1}`.
    pub fn geometric(p: &Poly, depth: usize) -> Self {
        let mut coeffs = Vec::with_capacity(depth.max(1));
        let mut c = Poly::one(Var::R);
        for _ in 0..depth.max(1) {
            coeffs.push(c.clone());
            c = &c * p;
        }
        SeriesPrefix { coeffs }
    }

    /// `f = t/(1 - t)`, inducing `Σ`.
    pub fn sigma(depth: usize) -> Self {
        Self::rational(depth, |_| Rat::one())
    }

    /// `f = t/(1 + t)`, inducing `Σ^{-1}`.
    pub fn sigma_inv(depth: usize) -> Self {
        Self::rational(depth, |i| if i % 2 == 1 { Rat::one() } else { -Rat::one() })
    }

    /// `f = t/(1 - r t)` with symbolic `r`.
    pub fn sigma_r(depth: usize) -> Self {
        Self::geometric(&Poly::r(), depth)
    }

    /// `f = e^t - 1`.
    pub fn exp(depth: usize) -> Self {
        Self::rational(depth, |i| Rat::inv_factorial(i as u32))
    }

    /// `f = log(1 + t)`.
    pub fn log(depth: usize) -> Self {
        Self::rational(depth, |i| {
            let c = Rat::new(1, i as i64).expect("i >= 1");
            if i % 2 == 1 {
                c
            } else {
                -c
            }
        })
    }

    /// `f = log(1 - t)`.
    pub fn log_one_minus(depth: usize) -> Self {
        Self::rational(depth, |i| -Rat::new(1, i as i64).expect("i >= 1"))
    }

    /// `f = e^{-t} - 1`.
    pub fn exp_neg_minus_one(depth: usize) -> Self {
        Self::rational(depth, |i| {
            let c = Rat::inv_factorial(i as u32);
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        })
    }

    pub fn depth(&self) -> usize {
        self.coeffs.len()
    }

    /// `c_i` for `1 <= i <= D`.
    pub fn coeff(&self, i: usize) -> &Poly {
        &self.coeffs[i - 1]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn truncate(&self, depth: usize) -> SeriesPrefix {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(depth.max(1));
        SeriesPrefix { coeffs }
    }

    /// Specializes `r` in every coefficient.
    pub fn specialize(&self, r: &Rat) -> SeriesPrefix {
        SeriesPrefix {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| Poly::constant(Var::R, c.eval(r)))
                .collect(),
        }
    }
}

/// Multiplies two series given by coefficient lists indexed from degree 0,
/// truncating above degree `depth`.
fn series_mul(a: &[Poly], b: &[Poly], depth: usize) -> Vec<Poly> {
    let mut out = vec![Poly::zero(Var::R); depth + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j > depth {
                break;
            }
            out[i + j] += &(x * y);
        }
    }
    out
}

/// Coefficients of `f ∘ g` through the smaller of the two depths.
pub fn series_compose(f: &SeriesPrefix, g: &SeriesPrefix) -> SeriesPrefix {
    let depth = f.depth().min(g.depth());
    let mut g_full = vec![Poly::zero(Var::R)];
    g_full.extend(g.coeffs.iter().take(depth).cloned());
    let mut out = vec![Poly::zero(Var::R); depth + 1];
    let mut power = g_full.clone();
    for k in 1..=depth {
        let c = f.coeff(k);
        for (d, p) in power.iter().enumerate() {
            if !p.is_zero() {
                out[d] += &(c * p);
            }
        }
        power = series_mul(&power, &g_full, depth);
    }
    SeriesPrefix {
        coeffs: out.into_iter().skip(1).collect(),
    }
}

/// `Ψ_f` on one word, by a right-to-left recursion over block starts.
fn psi_word(f: &SeriesPrefix, alphabet: &Alphabet, w: &Word) -> Result<BTreeMap<Word, Poly>> {
    let n = w.len();
    if n > f.depth() {
        return Err(Error::InsufficientDepth {
            need: n,
            have: f.depth(),
        });
    }
    let letters = w.letters();
    let mut tails: Vec<BTreeMap<Word, Poly>> = vec![BTreeMap::new(); n + 1];
    tails[n].insert(Word::empty(), Poly::one(Var::R));
    for i in (0..n).rev() {
        let mut acc = BTreeMap::new();
        for k in 1..=n - i {
            let c = f.coeff(k);
            if c.is_zero() {
                continue;
            }
            let head = alphabet.diamond_all(&letters[i..i + k]);
            for (tail, d) in &tails[i + k] {
                let coeff = c * d;
                if coeff.is_zero() {
                    continue;
                }
                let word = tail.prepend(head.clone());
                let entry = acc.entry(word).or_insert_with(|| Poly::zero(Var::R));
                *entry += &coeff;
            }
        }
        acc.retain(|_, c: &mut Poly| !c.is_zero());
        tails[i] = acc;
    }
    Ok(std::mem::take(&mut tails[0]))
}

/// `Ψ_f(x)`, extended linearly; needs `depth(f) >= ℓ(w)` for every word.
pub fn psi(f: &SeriesPrefix, x: &LinComb) -> Result<LinComb> {
    let alphabet = x.alphabet().clone();
    x.map_linear(|w| {
        let terms = psi_word(f, &alphabet, w)?;
        LinComb::from_terms(&alphabet, terms)
    })
}

fn auto_depth(x: &LinComb) -> usize {
    x.max_word_len().max(1)
}

/// `Σ^p(x)` for a parameter polynomial `p` in `r`.
pub fn sigma_at(x: &LinComb, p: &Poly) -> LinComb {
    psi(&SeriesPrefix::geometric(p, auto_depth(x)), x).expect("depth fits")
}

/// `Σ^r(x)` with symbolic `r`.
pub fn sigma_r(x: &LinComb) -> LinComb {
    sigma_at(x, &Poly::r())
}

/// `Σ = Σ^1`.
pub fn sigma(x: &LinComb) -> LinComb {
    sigma_at(x, &Poly::one(Var::R))
}

/// `Σ^{-1}`, which is `Σ^p` at `p = -1`.
pub fn sigma_inv(x: &LinComb) -> LinComb {
    sigma_at(x, &-Poly::one(Var::R))
}

/// `T(w) = (-1)^{ℓ(w)} w`.
pub fn t_map(x: &LinComb) -> LinComb {
    let alphabet = x.alphabet().clone();
    let terms: Vec<(Word, Poly)> = x
        .terms()
        .map(|(w, c)| (w.clone(), if w.len() % 2 == 1 { -c } else { c.clone() }))
        .collect();
    LinComb::from_terms(&alphabet, terms).expect("same alphabet")
}

/// `R`: reverses every word.
pub fn r_map(x: &LinComb) -> LinComb {
    x.map_words(Word::reversed)
}

pub fn exp_map(x: &LinComb) -> LinComb {
    psi(&SeriesPrefix::exp(auto_depth(x)), x).expect("depth fits")
}

pub fn log_map(x: &LinComb) -> LinComb {
    psi(&SeriesPrefix::log(auto_depth(x)), x).expect("depth fits")
}

/// A formal series `Σ_{n=0}^{N} λ^n x_n` with coefficients in the word algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedGF {
    alphabet: Alphabet,
    coeffs: Vec<LinComb>,
}

impl TruncatedGF {
    pub fn new(alphabet: &Alphabet, coeffs: Vec<LinComb>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("series needs at least λ^0".into()));
        }
        if let Some(c) = coeffs.iter().find(|c| c.alphabet() != alphabet) {
            return Err(Error::AlphabetMismatch(
                alphabet.to_string(),
                c.alphabet().to_string(),
            ));
        }
        Ok(TruncatedGF {
            alphabet: alphabet.clone(),
            coeffs,
        })
    }

    /// `1/(1 - s λ w) = Σ_n s^n λ^n w^n` with concatenation powers.
    pub fn geometric(w: &LinComb, s: &Poly, order: usize) -> Self {
        let alphabet = w.alphabet().clone();
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = LinComb::one(&alphabet);
        let sw = w.scale(s);
        for _ in 0..=order {
            coeffs.push(term.clone());
            term = term.concat(&sw).expect("same alphabet");
        }
        TruncatedGF { alphabet, coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn coeff(&self, n: usize) -> &LinComb {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[LinComb] {
        &self.coeffs
    }

    /// Applies a linear map coefficientwise.
    pub fn map(&self, mut f: impl FnMut(&LinComb) -> Result<LinComb>) -> Result<TruncatedGF> {
        let coeffs = self.coeffs.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        TruncatedGF::new(&self.alphabet, coeffs)
    }

    /// Cauchy product in `λ` using the given word product.
    pub fn mul(&self, other: &TruncatedGF, kind: &Product) -> Result<TruncatedGF> {
        let order = self.order().min(other.order());
        let mut coeffs = vec![LinComb::zero(&self.alphabet); order + 1];
        for i in 0..=order {
            for j in 0..=order - i {
                let p = product(kind, &self.coeffs[i], &other.coeffs[j])?;
                coeffs[i + j] = coeffs[i + j].checked_add(&p)?;
            }
        }
        TruncatedGF::new(&self.alphabet, coeffs)
    }
}

fn require_letters(w: &LinComb) -> Result<()> {
    if w.terms().all(|(word, _)| word.len() == 1) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(
            "generating-series identity needs a linear combination of letters".into(),
        ))
    }
}

/// `Ψ_f(1/(1 - λw))` through `λ^N`.
pub fn geom_lhs(f: &SeriesPrefix, w: &LinComb, order: usize) -> Result<TruncatedGF> {
    let need = order * w.max_word_len();
    if f.depth() < need {
        return Err(Error::InsufficientDepth {
            need,
            have: f.depth(),
        });
    }
    TruncatedGF::geometric(w, &Poly::one(Var::R), order).map(|x| psi(f, x))
}

/// Diamond power `w^{◇k}` of a linear combination of letters.
fn diamond_power(w: &LinComb, k: usize) -> LinComb {
    let alphabet = w.alphabet().clone();
    let mut acc: BTreeMap<Word, Poly> = BTreeMap::new();
    acc.insert(Word::empty(), Poly::one(Var::R));
    for _ in 0..k {
        let mut next: BTreeMap<Word, Poly> = BTreeMap::new();
        for (u, c) in &acc {
            for (v, d) in w.terms() {
                let letter = match u.first() {
                    None => v.letters()[0].clone(),
                    Some(a) => alphabet.diamond_unchecked(a, &v.letters()[0]),
                };
                let e = next
                    .entry(Word::letter(letter))
                    .or_insert_with(|| Poly::zero(Var::R));
                *e += &(c * d);
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    LinComb::from_terms(&alphabet, acc).expect("letters of the alphabet")
}

/// `1/(1 - f_◇(λw))` through `λ^N`, for `w` a linear combination of letters.
pub fn geom_rhs(f: &SeriesPrefix, w: &LinComb, order: usize) -> Result<TruncatedGF> {
    require_letters(w)?;
    if f.depth() < order {
        return Err(Error::InsufficientDepth {
            need: order,
            have: f.depth(),
        });
    }
    let alphabet = w.alphabet().clone();
    // F_i = c_i w^{◇i}, the λ^i coefficient of f_◇(λw)
    let big_f: Vec<LinComb> = (1..=order)
        .map(|i| diamond_power(w, i).scale(f.coeff(i)))
        .collect();
    // G_n = Σ_{i=1}^{n} F_i G_{n-i}, G_0 = 1
    let mut g: Vec<LinComb> = vec![LinComb::one(&alphabet)];
    for n in 1..=order {
        let mut acc = LinComb::zero(&alphabet);
        for i in 1..=n {
            acc = acc.checked_add(&big_f[i - 1].concat(&g[n - i])?)?;
        }
        g.push(acc);
    }
    TruncatedGF::new(&alphabet, g)
}

/// Both sides of `Σ^r(1/(1-λz)) * 1/(1+rλz) = 1/(1-(1-r)λz)`, symbolic `r`.
pub fn geometric_interp_sides(z: &LinComb, order: usize) -> Result<(TruncatedGF, TruncatedGF)> {
    require_letters(z)?;
    let one = Poly::one(Var::R);
    let r = Poly::r();
    let lhs = TruncatedGF::geometric(z, &one, order)
        .map(|x| Ok(sigma_r(x)))?
        .mul(&TruncatedGF::geometric(z, &-&r, order), &Product::QuasiShuffle)?;
    let rhs = TruncatedGF::geometric(z, &(&one - &r), order);
    Ok((lhs, rhs))
}

/// The left side with the second factor printed as `1/(1-rλz)`; differs
/// from [`geometric_interp_sides`] from `λ^1` on.
pub fn geometric_interp_printed_lhs(z: &LinComb, order: usize) -> Result<TruncatedGF> {
    require_letters(z)?;
    TruncatedGF::geometric(z, &Poly::one(Var::R), order)
        .map(|x| Ok(sigma_r(x)))?
        .mul(&TruncatedGF::geometric(z, &Poly::r(), order), &Product::QuasiShuffle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsalg::{interp_product, interp_product_at, qsh_product, shuffle_product, Letter};
    use proptest::prelude::*;

    fn mzv(w: &[u32]) -> LinComb {
        LinComb::word(&Alphabet::Mzv, Word::z(w)).unwrap()
    }

    fn poly(c: &[i64]) -> Poly {
        Poly::from_ints(Var::R, c)
    }

    fn lc(terms: Vec<(&[u32], Poly)>) -> LinComb {
        LinComb::from_terms(
            &Alphabet::Mzv,
            terms.into_iter().map(|(w, c)| (Word::z(w), c)),
        )
        .unwrap()
    }

    #[test]
    fn composition_enumeration() {
        let c1: Vec<String> = compositions(1).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(c1, ["(1)"]);
        let c3: Vec<String> = compositions(3).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(c3, ["(1,1,1)", "(1,2)", "(2,1)", "(3)"]);
        assert_eq!(compositions(6).unwrap().len(), 32);
        assert!(compositions(0).is_err());
    }

    #[test]
    fn contraction() {
        let a = Alphabet::Mzv;
        let c = Composition::new(vec![2, 1]).unwrap();
        assert_eq!(contract(&a, &c, &Word::z(&[1, 1, 1])).unwrap(), Word::z(&[2, 1]));
        let id = Composition::new(vec![1, 1, 1]).unwrap();
        assert_eq!(contract(&a, &id, &Word::z(&[3, 1, 2])).unwrap(), Word::z(&[3, 1, 2]));
        let full = Composition::new(vec![3]).unwrap();
        assert_eq!(contract(&a, &full, &Word::z(&[1, 2, 3])).unwrap(), Word::z(&[6]));
        assert!(matches!(
            contract(&a, &full, &Word::z(&[1, 2])),
            Err(Error::CompositionMismatch { .. })
        ));
    }

    #[test]
    fn psi_examples() {
        let w = mzv(&[3, 1, 2]);
        assert_eq!(psi(&SeriesPrefix::identity(3), &w).unwrap(), w);
        let t2 = SeriesPrefix::from_rats(&[Rat::zero(), Rat::one()]).unwrap();
        assert_eq!(psi(&t2, &mzv(&[1, 1])).unwrap(), mzv(&[2]));
        assert_eq!(psi(&SeriesPrefix::neg(2), &mzv(&[1, 2])).unwrap(), mzv(&[1, 2]));
        assert_eq!(psi(&SeriesPrefix::neg(2), &mzv(&[1])).unwrap(), -&mzv(&[1]));
        assert_eq!(psi(&SeriesPrefix::identity(1), &LinComb::one(&Alphabet::Mzv)).unwrap(),
            LinComb::one(&Alphabet::Mzv));
        assert!(matches!(
            psi(&SeriesPrefix::identity(2), &w),
            Err(Error::InsufficientDepth { need: 3, have: 2 })
        ));
    }

    #[test]
    fn psi_matches_composition_sum() {
        let a = Alphabet::euler(3).unwrap();
        let w = Word::new(vec![
            a.colored(1, 1).unwrap(),
            a.colored(2, 2).unwrap(),
            a.colored(1, 0).unwrap(),
            a.colored(3, 1).unwrap(),
        ]);
        let f = SeriesPrefix::new(vec![poly(&[2]), poly(&[0, 1]), poly(&[1, 1]), poly(&[-3])]).unwrap();
        let mut expect = LinComb::zero(&a);
        for comp in compositions(4).unwrap() {
            let mut c = Poly::one(Var::R);
            for &p in comp.parts() {
                c = &c * f.coeff(p);
            }
            let word = contract(&a, &comp, &w).unwrap();
            expect = &expect + &LinComb::monomial(&a, word, c).unwrap();
        }
        assert_eq!(psi(&f, &LinComb::word(&a, w).unwrap()).unwrap(), expect);
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(
            sigma_r(&mzv(&[1, 1])),
            lc(vec![(&[1, 1], poly(&[1])), (&[2], poly(&[0, 1]))])
        );
        assert_eq!(
            sigma_r(&mzv(&[3, 1, 1])),
            lc(vec![
                (&[3, 1, 1], poly(&[1])),
                (&[4, 1], poly(&[0, 1])),
                (&[3, 2], poly(&[0, 1])),
                (&[5], poly(&[0, 0, 1])),
            ])
        );
        assert_eq!(sigma(&mzv(&[1, 1])), lc(vec![(&[1, 1], poly(&[1])), (&[2], poly(&[1]))]));
    }

    #[test]
    fn t_and_r() {
        assert_eq!(t_map(&mzv(&[1])), -&mzv(&[1]));
        assert_eq!(r_map(&mzv(&[1, 2, 3])), mzv(&[3, 2, 1]));
        assert_eq!(t_map(&r_map(&mzv(&[1, 2]))), mzv(&[2, 1]));
    }

    #[test]
    fn exp_log() {
        let half = Poly::constant(Var::R, Rat::new(1, 2).unwrap());
        assert_eq!(exp_map(&mzv(&[1, 1])), lc(vec![(&[1, 1], poly(&[1])), (&[2], half)]));
        for w in [&[1u32, 2, 1, 3, 1][..], &[2, 2], &[1, 1, 1, 1, 1]] {
            assert_eq!(log_map(&exp_map(&mzv(w))), mzv(w));
            assert_eq!(exp_map(&log_map(&mzv(w))), mzv(w));
        }
        let z1 = mzv(&[1]);
        assert_eq!(
            exp_map(&shuffle_product(&z1, &z1).unwrap()),
            qsh_product(&exp_map(&z1), &exp_map(&z1)).unwrap()
        );
    }

    #[test]
    fn compose_examples() {
        let id = series_compose(&SeriesPrefix::sigma(6), &SeriesPrefix::sigma_inv(6));
        assert_eq!(id, SeriesPrefix::identity(6));
        let c = series_compose(&SeriesPrefix::exp_neg_minus_one(6), &SeriesPrefix::log_one_minus(6));
        assert_eq!(c, SeriesPrefix::sigma(6));
        let t = series_compose(&SeriesPrefix::identity(4), &SeriesPrefix::identity(4));
        assert_eq!(t, SeriesPrefix::identity(4));
        let e = series_compose(&SeriesPrefix::exp(7), &SeriesPrefix::log(7));
        assert_eq!(e, SeriesPrefix::identity(7));
    }

    #[test]
    fn geometric_identity_letters() {
        let z1 = mzv(&[1]);
        let z2 = mzv(&[2]);
        let mixed = &z1 + &z2.scale(&poly(&[0, 1]));
        for w in [&z1, &z2, &mixed] {
            for f in [SeriesPrefix::sigma(3), SeriesPrefix::exp(3), SeriesPrefix::log(3), SeriesPrefix::sigma_r(3)] {
                assert_eq!(geom_lhs(&f, w, 3).unwrap(), geom_rhs(&f, w, 3).unwrap());
            }
            let f = SeriesPrefix::identity(3);
            assert_eq!(geom_rhs(&f, w, 3).unwrap(), TruncatedGF::geometric(w, &Poly::one(Var::R), 3));
        }
        assert!(geom_rhs(&SeriesPrefix::sigma(3), &mzv(&[1, 1]), 2).is_err());
    }

    #[test]
    fn log_diamond_second_coefficient() {
        // λ² coefficient of 1/(1 - log_◇(1 + λz)) for z = z3: z3z3 - z6/2
        let z = mzv(&[3]);
        let rhs = geom_rhs(&SeriesPrefix::log(2), &z, 2).unwrap();
        let half = Poly::constant(Var::R, Rat::new(-1, 2).unwrap());
        assert_eq!(*rhs.coeff(2), lc(vec![(&[3, 3], poly(&[1])), (&[6], half)]));
    }

    #[test]
    fn interpolated_geometric_ratio() {
        let z2 = mzv(&[2]);
        let (lhs, rhs) = geometric_interp_sides(&z2, 3).unwrap();
        assert_eq!(lhs, rhs);
        let printed = geometric_interp_printed_lhs(&z2, 3).unwrap();
        assert_ne!(printed.coeff(1), rhs.coeff(1));
        assert_eq!(*printed.coeff(1), z2.scale(&poly(&[1, 1])));
    }

    #[test]
    fn interp_definition_small() {
        // z1 ⋄ z1z1 through the definition Σ^{-r}(Σ^r u * Σ^r v)
        let (u, v) = (mzv(&[1]), mzv(&[1, 1]));
        let def = sigma_at(
            &qsh_product(&sigma_r(&u), &sigma_r(&v)).unwrap(),
            &-Poly::r(),
        );
        assert_eq!(interp_product(&u, &v).unwrap(), def);
    }

    fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(1u32..4, 0..=max_len).prop_map(|w| Word::z(&w))
    }

    fn series_strategy(depth: usize) -> impl Strategy<Value = SeriesPrefix> {
        prop::collection::vec((-3i64..4, 1i64..4), depth).prop_map(|cs| {
            SeriesPrefix::from_rats(
                &cs.into_iter().map(|(n, d)| Rat::new(n, d).unwrap()).collect::<Vec<_>>(),
            )
            .unwrap()
        })
    }

    fn l(w: &Word) -> LinComb {
        LinComb::word(&Alphabet::Mzv, w.clone()).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn psi_composition(f in series_strategy(5), g in series_strategy(5), w in word_strategy(5)) {
            let x = l(&w);
            let lhs = psi(&f, &psi(&g, &x).unwrap()).unwrap();
            let rhs = psi(&series_compose(&f, &g), &x).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn sigma_identities(w in word_strategy(4)) {
            let x = l(&w);
            prop_assert_eq!(t_map(&sigma(&t_map(&x))), sigma_inv(&x));
            prop_assert_eq!(sigma(&t_map(&sigma(&t_map(&x)))), x.clone());
            prop_assert_eq!(t_map(&sigma(&t_map(&sigma(&x)))), x.clone());
            prop_assert_eq!(exp_map(&t_map(&log_map(&t_map(&x)))), sigma(&x));
            prop_assert_eq!(r_map(&sigma_r(&x)), sigma_r(&r_map(&x)));
            let samples = [Rat::from_int(1), Rat::from_int(-1), Rat::new(1, 2).unwrap(), Rat::new(-1, 2).unwrap(), Rat::from_int(2)];
            for r in &samples {
                for s in &samples {
                    let pr = Poly::constant(Var::R, r.clone());
                    let ps = Poly::constant(Var::R, s.clone());
                    let rs = Poly::constant(Var::R, r + s);
                    prop_assert_eq!(sigma_at(&sigma_at(&x, &ps), &pr), sigma_at(&x, &rs));
                }
            }
        }

        #[test]
        fn sigma_recursive_property(a in 1u32..4, w in word_strategy(3)) {
            let x = l(&w);
            let aw = l(&w.prepend(Letter::Z(a)));
            let z = l(&Word::z(&[a]));
            let mut rhs = z.concat(&sigma(&x)).unwrap();
            if !w.is_empty() {
                rhs = &rhs + &crate::qsalg::diamond_extend(&Letter::Z(a), &sigma(&x)).unwrap();
            }
            prop_assert_eq!(sigma(&aw), rhs);
        }

        #[test]
        fn exp_is_isomorphism(u in word_strategy(3), v in word_strategy(3)) {
            let (x, y) = (l(&u), l(&v));
            prop_assert_eq!(
                exp_map(&shuffle_product(&x, &y).unwrap()),
                qsh_product(&exp_map(&x), &exp_map(&y)).unwrap()
            );
        }

        #[test]
        fn interp_definition(u in word_strategy(3), v in word_strategy(2)) {
            let (x, y) = (l(&u), l(&v));
            let def = sigma_at(&qsh_product(&sigma_r(&x), &sigma_r(&y)).unwrap(), &-Poly::r());
            prop_assert_eq!(interp_product(&x, &y).unwrap(), def);
        }

        #[test]
        fn t_conjugates_parameters(u in word_strategy(3), v in word_strategy(3)) {
            let (x, y) = (l(&u), l(&v));
            let lhs = t_map(&interp_product(&x, &y).unwrap());
            let one_minus_r = Poly::from_ints(Var::R, &[1, -1]);
            let rhs = interp_product_at(&t_map(&x), &t_map(&y), &one_minus_r).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
