//! Index combinatorics for multiple zeta values: the x–y encoding, duality,
//! the cyclic sum, two-one words and sum-theorem enumerations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qsalg::{Alphabet, Letter, LinComb, Word};
use crate::scalars::{binomial, Poly, Rat, Var};

/// A (colored) multiple zeta index `(i_1, …, i_k)`.
///
/// Level 1 is the plain MZV case; level `N >= 2` carries colors mod `N`
/// and corresponds to the Euler alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index {
    level: u32,
    entries: Vec<(u32, u32)>,
}

impl Index {
    /// Uncolored index; weights must be positive.
    pub fn mzv(weights: &[u32]) -> Result<Self> {
        Self::colored(1, weights.iter().map(|&w| (w, 0)).collect())
    }

    /// Colored index at `level`; colors are reduced mod `level`.
    pub fn colored(level: u32, entries: Vec<(u32, u32)>) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidArgument("level must be >= 1".into()));
        }
        if entries.is_empty() {
            return Err(Error::InvalidArgument("index must be nonempty".into()));
        }
        if entries.iter().any(|&(w, _)| w == 0) {
            return Err(Error::InvalidArgument("index weights must be >= 1".into()));
        }
        let entries = entries.into_iter().map(|(w, c)| (w, c % level)).collect();
        Ok(Index { level, entries })
    }

    /// Level-2 index from signed entries, negative meaning color 1.
    pub fn signed(entries: &[i64]) -> Result<Self> {
        let e = entries
            .iter()
            .map(|&s| SignedInt::new(s).map(|s| (s.magnitude(), s.is_barred() as u32)))
            .collect::<Result<Vec<_>>>()?;
        Self::colored(2, e)
    }

    /// Reads the index of a nonempty word over the MZV or an Euler alphabet.
    pub fn from_word(alphabet: &Alphabet, w: &Word) -> Result<Self> {
        alphabet.validate_word(w)?;
        let level = match alphabet {
            Alphabet::Mzv => 1,
            Alphabet::Euler(n) => *n,
            Alphabet::Free(_) => {
                return Err(Error::InvalidArgument(
                    "free multiset words carry no zeta index".into(),
                ))
            }
        };
        Self::colored(level, w.letters().iter().map(|l| (l.weight(), l.color())).collect())
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    pub fn weights(&self) -> Vec<u32> {
        self.entries.iter().map(|e| e.0).collect()
    }

    pub fn weight(&self) -> u32 {
        self.entries.iter().map(|e| e.0).sum()
    }

    pub fn depth(&self) -> usize {
        self.entries.len()
    }

    /// First entry is not `(1, color 0)`.
    pub fn is_admissible(&self) -> bool {
        self.entries[0] != (1, 0)
    }

    pub fn alphabet(&self) -> Alphabet {
        if self.level == 1 {
            Alphabet::Mzv
        } else {
            Alphabet::Euler(self.level)
        }
    }

    pub fn to_word(&self) -> Word {
        Word::new(
            self.entries
                .iter()
                .map(|&(weight, color)| {
                    if self.level == 1 {
                        Letter::Z(weight)
                    } else {
                        Letter::Colored { weight, color }
                    }
                })
                .collect(),
        )
    }

    pub fn to_lincomb(&self) -> LinComb {
        LinComb::word(&self.alphabet(), self.to_word()).expect("letters match alphabet")
    }
}

impl fmt::Display for Index {
    /// `(3,1,2)`; level 2 uses `-m` for color 1, other levels `m:j`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|&(w, c)| match (self.level, c) {
                (_, 0) => w.to_string(),
                (2, _) => format!("-{w}"),
                _ => format!("{w}:{c}"),
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// One symbol of the two-letter encoding `z_i = x^{i-1} y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum XY {
    X,
    Y,
}

/// A word over `{x, y}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct XYWord(pub Vec<XY>);

impl XYWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push_z(&mut self, i: u32) {
        self.0.extend(std::iter::repeat_n(XY::X, i as usize - 1));
        self.0.push(XY::Y);
    }
}

impl fmt::Display for XYWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                XY::X => "x",
                XY::Y => "y",
            })?;
        }
        Ok(())
    }
}

impl FromStr for XYWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(pos, ch)| match ch {
                'x' => Ok(XY::X),
                'y' => Ok(XY::Y),
                _ => Err(Error::Parse {
                    pos,
                    msg: format!("expected x or y, found '{ch}'"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(XYWord)
    }
}

fn require_mzv(w: &Word) -> Result<()> {
    Alphabet::Mzv.validate_word(w)
}

/// `z_i ↦ x^{i-1} y`.
pub fn to_xy(w: &Word) -> Result<XYWord> {
    require_mzv(w)?;
    let mut out = XYWord::default();
    for l in w.letters() {
        out.push_z(l.weight());
    }
    Ok(out)
}

/// Inverse of [`to_xy`]; the input must be empty or end in `y`.
pub fn from_xy(u: &XYWord) -> Result<Word> {
    if u.0.last() == Some(&XY::X) {
        return Err(Error::InvalidArgument(format!(
            "x-y word '{u}' does not end in y"
        )));
    }
    let mut letters = Vec::new();
    let mut run = 0;
    for s in &u.0 {
        match s {
            XY::X => run += 1,
            XY::Y => {
                letters.push(Letter::Z(run + 1));
                run = 0;
            }
        }
    }
    Ok(Word::new(letters))
}

fn admissible_word(w: &Word) -> Result<()> {
    require_mzv(w)?;
    match w.first() {
        Some(Letter::Z(i)) if *i > 1 => Ok(()),
        _ => Err(Error::Inadmissible(Alphabet::Mzv.fmt_word(w))),
    }
}

/// Duality: reverse the x–y word and swap `x ↔ y`.
pub fn tau(w: &Word) -> Result<Word> {
    admissible_word(w)?;
    let u = to_xy(w)?;
    let swapped = u
        .0
        .iter()
        .rev()
        .map(|s| match s {
            XY::X => XY::Y,
            XY::Y => XY::X,
        })
        .collect();
    from_xy(&XYWord(swapped))
}

/// `C(z_{i_1}⋯z_{i_k}) = Σ_j z_{i_j+1} z_{i_{j+1}} ⋯ z_{i_{j-1}}`, cyclically,
/// counted with multiplicity.
pub fn cyclic_sum(w: &Word) -> Result<LinComb> {
    require_mzv(w)?;
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let weights: Vec<u32> = w.letters().iter().map(Letter::weight).collect();
    let k = weights.len();
    let mut out = LinComb::zero(&Alphabet::Mzv);
    for j in 0..k {
        let mut rotated: Vec<u32> = (0..k).map(|t| weights[(j + t) % k]).collect();
        rotated[0] += 1;
        out = &out + &LinComb::word(&Alphabet::Mzv, Word::z(&rotated))?;
    }
    Ok(out)
}

/// The words `(xy)^{j_1}y⋯(xy)^{j_l}y` and `x^{2j_1}y⋯x^{2j_l}y` of the
/// two-one formula `ζ*(left) = 2^l ζ^{1/2}(right)`.
pub fn two_one_pair(j: &[u32]) -> Result<(Word, Word)> {
    match j.first() {
        Some(&j1) if j1 > 0 => {}
        _ => {
            return Err(Error::InvalidArgument(
                "two-one sequence needs j_1 >= 1".into(),
            ))
        }
    }
    let mut left = Vec::new();
    let mut right = Vec::new();
    for &ji in j {
        left.extend(std::iter::repeat_n(2, ji as usize));
        left.push(1);
        right.push(2 * ji + 1);
    }
    Ok((Word::z(&left), Word::z(&right)))
}

fn check_sum_args(n: u32, l: u32) -> Result<()> {
    if n < 2 || l < 1 || l >= n {
        return Err(Error::InvalidArgument(format!(
            "need n >= 2 and 1 <= l <= n-1, got n={n}, l={l}"
        )));
    }
    Ok(())
}

/// Depth-`l` compositions of `n` restricted by `keep`, in reverse
/// lexicographic order.
fn restricted_compositions(n: u32, l: u32, keep: &dyn Fn(usize, u32) -> bool) -> Vec<Vec<u32>> {
    fn rec(
        remaining: u32,
        slots: u32,
        prefix: &mut Vec<u32>,
        keep: &dyn Fn(usize, u32) -> bool,
        out: &mut Vec<Vec<u32>>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if remaining < slots {
            return;
        }
        for part in (1..=remaining - (slots - 1)).rev() {
            if keep(prefix.len(), part) {
                prefix.push(part);
                rec(remaining - part, slots - 1, prefix, keep, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, l, &mut Vec::new(), keep, &mut out);
    out
}

/// All admissible MZV indices of weight `n` and depth `l`.
pub fn sum_theorem_indices(n: u32, l: u32) -> Result<Vec<Index>> {
    check_sum_args(n, l)?;
    restricted_compositions(n, l, &|pos, part| pos > 0 || part > 1)
        .into_iter()
        .map(|c| Index::mzv(&c))
        .collect()
}

/// `Σ_{k=0}^{l-1} r^k binom(n-l-1+k, k)`, the factor multiplying `ζ(n)` in
/// the interpolated sum theorem.
pub fn interp_sum_rhs(n: u32, l: u32) -> Result<Poly> {
    check_sum_args(n, l)?;
    let coeffs = (0..l)
        .map(|k| Rat::from_bigint(binomial((n - l - 1 + k) as u64, k as u64)))
        .collect();
    Ok(Poly::from_coeffs(Var::R, coeffs))
}

fn check_odd_args(n: u32, l: u32) -> Result<()> {
    if n <= 2 || l == 0 || l >= n || !(n + l).is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "need n > 2, 0 < l < n and n ≡ l mod 2, got n={n}, l={l}"
        )));
    }
    Ok(())
}

/// Depth-`l` indices of weight `n` with all entries odd and first entry > 1.
pub fn totally_odd_indices(n: u32, l: u32) -> Result<Vec<Index>> {
    check_odd_args(n, l)?;
    restricted_compositions(n, l, &|pos, part| part % 2 == 1 && (pos > 0 || part > 1))
        .into_iter()
        .map(|c| Index::mzv(&c))
        .collect()
}

/// `(n-1)/(n-l) · binom((n+l)/2-2, l-1) / 2^{l-1}`, the coefficient of `ζ(n)`.
pub fn totally_odd_rhs(n: u32, l: u32) -> Result<Rat> {
    check_odd_args(n, l)?;
    let h = (n + l) / 2;
    let b = Rat::from_bigint(binomial((h - 2) as u64, (l - 1) as u64));
    let lead = Rat::new((n - 1) as i64, (n - l) as i64)?;
    Ok(&(&lead * &b) * &Rat::new(1, 1i64 << (l - 1))?)
}

/// The second printed form `(n-1)/((n+l)/2-1) · binom((n+l)/2-1, l-1) / 2^l`.
pub fn totally_odd_rhs_alt(n: u32, l: u32) -> Result<Rat> {
    check_odd_args(n, l)?;
    let h = (n + l) / 2;
    let b = Rat::from_bigint(binomial((h - 1) as u64, (l - 1) as u64));
    let lead = Rat::new((n - 1) as i64, (h - 1) as i64)?;
    Ok(&(&lead * &b) * &Rat::new(1, 1i64 << l)?)
}

/// Barred-integer notation for level-2 entries: `-m` stands for `m̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedInt(i64);

impl SignedInt {
    pub fn new(v: i64) -> Result<Self> {
        if v == 0 {
            return Err(Error::InvalidArgument("signed entries must be nonzero".into()));
        }
        Ok(SignedInt(v))
    }

    pub fn value(self) -> i64 {
        self.0
    }

    pub fn magnitude(self) -> u32 {
        self.0.unsigned_abs() as u32
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }
}

/// `a + b̄ = ā + b = (a+b)‾` and `ā + b̄ = a + b`.
pub fn signed_index_add(a: SignedInt, b: SignedInt) -> SignedInt {
    let m = (a.magnitude() + b.magnitude()) as i64;
    SignedInt(if a.is_barred() != b.is_barred() { -m } else { m })
}

impl fmt::Display for SignedInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
