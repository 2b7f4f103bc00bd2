//! Deconcatenation coproduct, counit and antipode, with executable checks of
//! the bialgebra and Hopf axioms.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::psimaps::{r_map, sigma_at, t_map};
use crate::qsalg::{product, Alphabet, LinComb, Product, Word};
use crate::scalars::{Poly, Var};

/// Finite sum of `u ⊗ v` with coefficients in `Q[r]`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorComb {
    alphabet: Alphabet,
    terms: BTreeMap<(Word, Word), Poly>,
}

impl TensorComb {
    pub fn zero(alphabet: &Alphabet) -> Self {
        TensorComb {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Word, &Poly)> {
        self.terms.iter().map(|((u, v), c)| (u, v, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, left: &Word, right: &Word) -> Poly {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(|| Poly::zero(Var::R))
    }

    fn add_term(&mut self, left: Word, right: Word, c: &Poly) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `Σ c · f(u) ⊗ g(v)` for linear maps `f, g`.
    pub fn map_both(
        &self,
        mut f: impl FnMut(&LinComb) -> Result<LinComb>,
        mut g: impl FnMut(&LinComb) -> Result<LinComb>,
    ) -> Result<TensorComb> {
        let mut out = TensorComb::zero(&self.alphabet);
        for ((u, v), c) in &self.terms {
            let fu = f(&LinComb::word(&self.alphabet, u.clone())?)?;
            let gv = g(&LinComb::word(&self.alphabet, v.clone())?)?;
            for (a, ca) in fu.terms() {
                for (b, cb) in gv.terms() {
                    out.add_term(a.clone(), b.clone(), &(&(c * ca) * cb));
                }
            }
        }
        Ok(out)
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = (a•c) ⊗ (b•d)`.
    pub fn mul(&self, other: &TensorComb, kind: &Product) -> Result<TensorComb> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(
                self.alphabet.to_string(),
                other.alphabet.to_string(),
            ));
        }
        let a = &self.alphabet;
        let mut out = TensorComb::zero(a);
        for ((u1, v1), c1) in &self.terms {
            for ((u2, v2), c2) in &other.terms {
                let left = product(kind, &LinComb::word(a, u1.clone())?, &LinComb::word(a, u2.clone())?)?;
                let right = product(kind, &LinComb::word(a, v1.clone())?, &LinComb::word(a, v2.clone())?)?;
                let c = c1 * c2;
                for (x, cx) in left.terms() {
                    for (y, cy) in right.terms() {
                        out.add_term(x.clone(), y.clone(), &(&(&c * cx) * cy));
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TensorComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((u, v), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let pair = format!(
                "{}⊗{}",
                self.alphabet.fmt_word(u),
                self.alphabet.fmt_word(v)
            );
            if c.is_one() {
                write!(f, "{pair}")?;
            } else {
                write!(f, "({c})*{pair}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TensorComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorComb[{}]({})", self.alphabet, self)
    }
}

/// Deconcatenation `Δ(a_1⋯a_n) = Σ_j a_1⋯a_j ⊗ a_{j+1}⋯a_n`.
pub fn coproduct(x: &LinComb) -> TensorComb {
    let mut out = TensorComb::zero(x.alphabet());
    for (w, c) in x.terms() {
        for j in 0..=w.len() {
            let (u, v) = w.split_at(j);
            out.add_term(u, v, c);
        }
    }
    out
}

/// Coefficient of the empty word.
pub fn counit(x: &LinComb) -> Poly {
    x.coeff(&Word::empty())
}

/// The closed-form antipode `Σ^{1-2p} T R` of `⋄_p`; `p = 0` is the
/// quasi-shuffle, `p = 1` the star product.
pub fn antipode(x: &LinComb, p: &Poly) -> LinComb {
    let one = Poly::one(Var::R);
    let exponent = &one - &(p + p);
    sigma_at(&t_map(&r_map(x)), &exponent)
}

/// Antipode of the given product in closed form.
pub fn antipode_for(x: &LinComb, kind: &Product) -> LinComb {
    match kind.parameter() {
        Some(p) => antipode(x, &p),
        None => t_map(&r_map(x)),
    }
}

/// Antipode from the convolution recursion `S(w) = -Σ_{j<n} S(a_1⋯a_j)•a_{j+1}⋯a_n`,
/// independent of the closed form.
pub fn antipode_by_recursion(w: &Word, kind: &Product, alphabet: &Alphabet) -> Result<LinComb> {
    alphabet.validate_word(w)?;
    let mut memo: HashMap<usize, LinComb> = HashMap::new();
    memo.insert(0, LinComb::one(alphabet));
    for n in 1..=w.len() {
        let prefix = Word::new(w.letters()[..n].to_vec());
        let mut acc = LinComb::zero(alphabet);
        for j in 0..n {
            let (_, suffix) = prefix.split_at(j);
            let s = &memo[&j];
            acc = acc.checked_add(&product(kind, s, &LinComb::word(alphabet, suffix)?)?)?;
        }
        memo.insert(n, -&acc);
    }
    Ok(memo.remove(&w.len()).expect("filled"))
}

/// Which side of the convolution identity to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `Σ S(w_(1)) • w_(2)`
    Left,
    /// `Σ w_(1) • S(w_(2))`
    Right,
}

/// True iff the closed-form antipode satisfies `m(S⊗id)Δ(w) = ε(w)1`
/// (or the right-hand analogue) exactly.
pub fn hopf_axiom_check(w: &Word, kind: &Product, alphabet: &Alphabet, side: Side) -> Result<bool> {
    let x = LinComb::word(alphabet, w.clone())?;
    let mut acc = LinComb::zero(alphabet);
    for (u, v, c) in coproduct(&x).terms() {
        let lu = LinComb::word(alphabet, u.clone())?;
        let lv = LinComb::word(alphabet, v.clone())?;
        let term = match side {
            Side::Left => product(kind, &antipode_for(&lu, kind), &lv)?,
            Side::Right => product(kind, &lu, &antipode_for(&lv, kind))?,
        };
        acc = acc.checked_add(&term.scale(c))?;
    }
    let expect = LinComb::one(alphabet).scale(&counit(&x));
    Ok(acc == expect)
}

/// True iff `Δ(u•v) = Δ(u)•Δ(v)`.
pub fn coproduct_multiplicativity_check(
    u: &Word,
    v: &Word,
    kind: &Product,
    alphabet: &Alphabet,
) -> Result<bool> {
    let lu = LinComb::word(alphabet, u.clone())?;
    let lv = LinComb::word(alphabet, v.clone())?;
    let lhs = coproduct(&product(kind, &lu, &lv)?);
    let rhs = coproduct(&lu).mul(&coproduct(&lv), kind)?;
    Ok(lhs == rhs)
}

/// True iff `(Δ⊗id)Δ = (id⊗Δ)Δ` on `x`. Both sides are compared as sums
/// over triples.
pub fn coassociativity_check(x: &LinComb) -> bool {
    let mut left: BTreeMap<(Word, Word, Word), Poly> = BTreeMap::new();
    let mut right: BTreeMap<(Word, Word, Word), Poly> = BTreeMap::new();
    let add = |m: &mut BTreeMap<(Word, Word, Word), Poly>, k, c: &Poly| {
        let e = m.entry(k).or_insert_with(|| Poly::zero(Var::R));
        *e += c;
    };
    let a = x.alphabet();
    for (u, v, c) in coproduct(x).terms() {
        for (u1, u2, d) in coproduct(&LinComb::from_word_unchecked(a, u.clone())).terms() {
            add(&mut left, (u1.clone(), u2.clone(), v.clone()), &(c * d));
        }
        for (v1, v2, d) in coproduct(&LinComb::from_word_unchecked(a, v.clone())).terms() {
            add(&mut right, (u.clone(), v1.clone(), v2.clone()), &(c * d));
        }
    }
    left.retain(|_, c| !c.is_zero());
    right.retain(|_, c| !c.is_zero());
    left == right
}

/// True iff `Σ^r` intertwines both structures on `u, v`:
/// `Σ^r(u ⋄ v) = Σ^r u * Σ^r v` and `(Σ^r⊗Σ^r)Δu = ΔΣ^r u`.
pub fn sigma_r_hopf_iso_check(u: &Word, v: &Word, alphabet: &Alphabet) -> Result<bool> {
    let r = Poly::r();
    let lu = LinComb::word(alphabet, u.clone())?;
    let lv = LinComb::word(alphabet, v.clone())?;
    let prod_ok = sigma_at(&product(&Product::interpolated(), &lu, &lv)?, &r)
        == product(&Product::QuasiShuffle, &sigma_at(&lu, &r), &sigma_at(&lv, &r))?;
    let sr = |x: &LinComb| Ok(sigma_at(x, &r));
    let coprod_ok = coproduct(&lu).map_both(sr, sr)? == coproduct(&sigma_at(&lu, &r));
    Ok(prod_ok && coprod_ok)
}
