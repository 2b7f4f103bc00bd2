//! Symmetric sums over permutations of letters, expressed through set
//! partitions and interpolated products.
//!
//! For letters `u_1..u_n`,
//! `Σ_σ u_{σ(1)}⋯u_{σ(n)} = Σ_B c_r(B) u_{B_1} ⋄ ⋯ ⋄ u_{B_l}` where
//! `u_{B}` diamonds the letters of a block and
//! `c_r(B) = (-1)^{n-l} Π (|B_m|-1)! p_{|B_m|}(r)`,
//! `p_a(r) = (1-r)^a - (-r)^a`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::mzv::{signed_index_add, Index, SignedInt};
use crate::psimaps::sigma_at;
use crate::qsalg::{interp_product, Alphabet, Letter, LinComb, Word};
use crate::scalars::{factorial, Poly, Rat, Var};
use crate::zeval::{EvalConfig, Evaluator, ValueKind};

/// Largest `n` accepted by [`set_partitions`].
pub const MAX_SET_PARTITION: usize = 10;

/// A partition of `{1..n}`; blocks are sorted and ordered by their
/// smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidArgument("empty block".into()));
            }
            b.sort_unstable();
            for &e in b.iter() {
                if e == 0 || e > n || seen[e] {
                    return Err(Error::InvalidArgument(format!("bad element {e} in set partition")));
                }
                seen[e] = true;
            }
        }
        if seen.iter().skip(1).any(|s| !s) {
            return Err(Error::InvalidArgument("blocks do not cover 1..n".into()));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block sizes as an integer partition.
    pub fn shape(&self) -> IntPartition {
        IntPartition::new(self.blocks.iter().map(Vec::len).collect()).expect("nonempty blocks")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let inner: Vec<String> = b.iter().map(usize::to_string).collect();
            write!(f, "{{{}}}", inner.join(","))?;
        }
        write!(f, "}}")
    }
}

/// All set partitions of `{1..n}`, `1 <= n <= 10`, in restricted-growth
/// order (the partition into singletons comes last).
pub fn set_partitions(n: usize) -> Result<Vec<SetPartition>> {
    if n == 0 || n > MAX_SET_PARTITION {
        return Err(Error::InvalidArgument(format!(
            "set partitions need 1 <= n <= {MAX_SET_PARTITION}, got {n}"
        )));
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        let n = rgs.len();
        if i == n {
            let mut blocks = vec![Vec::new(); max + 1];
            for (e, &b) in rgs.iter().enumerate() {
                blocks[b].push(e + 1);
            }
            out.push(SetPartition { n, blocks });
            return;
        }
        for b in 0..=max + 1 {
            rgs[i] = b;
            rec(i + 1, max.max(b), rgs, out);
        }
    }
    rec(1, 0, &mut rgs, &mut out);
    Ok(out)
}

/// An integer partition `λ_1 >= ⋯ >= λ_l >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPartition {
    parts: Vec<usize>,
}

impl IntPartition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(IntPartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `ε_λ = (-1)^{n - ℓ(λ)}`
    pub fn epsilon(&self) -> i64 {
        if (self.n() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `z_λ = Π_i m_i! i^{m_i}`
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::from(1);
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let m = self.multiplicity(p);
            z *= factorial(m as u32) * BigInt::from(p).pow(m as u32);
            i += m;
        }
        z
    }

    pub fn all_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", p.join(","))
    }
}

/// Partitions of `n >= 1` in reverse lexicographic order, `(n)` first.
pub fn int_partitions(n: usize) -> Result<Vec<IntPartition>> {
    if n == 0 {
        return Err(Error::InvalidArgument("integer partitions need n >= 1".into()));
    }
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
        if rest == 0 {
            out.push(IntPartition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `p_a(r) = (1-r)^a - (-r)^a`
pub fn p_a(a: usize) -> Result<Poly> {
    if a == 0 {
        return Err(Error::InvalidArgument("p_a needs a >= 1".into()));
    }
    let one_minus = Poly::from_ints(Var::R, &[1, -1]);
    let minus_r = Poly::from_ints(Var::R, &[0, -1]);
    Ok(&one_minus.pow(a as u32) - &minus_r.pow(a as u32))
}

fn c_for_sizes(n: usize, sizes: &[usize]) -> Poly {
    let sign = if (n - sizes.len()).is_multiple_of(2) { 1 } else { -1 };
    let mut c = Poly::constant(Var::R, Rat::from_int(sign));
    for &s in sizes {
        let f = Rat::from_bigint(factorial(s as u32 - 1));
        c = (&c * &p_a(s).expect("positive size")).scale(&f);
    }
    c
}

/// `c_r(B) = (-1)^{n-l} Π_m (|B_m|-1)! p_{|B_m|}(r)`
pub fn c_r_coeff(b: &SetPartition) -> Poly {
    let sizes: Vec<usize> = b.blocks.iter().map(Vec::len).collect();
    c_for_sizes(b.n, &sizes)
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Largest `n` for [`symmetric_sum_sides`].
pub const MAX_SYMMETRIC: usize = 7;
/// Largest `n` for [`repeated_power_sides`].
pub const MAX_REPEATED: usize = 8;

fn interp_chain(alphabet: &Alphabet, letters: &[Letter]) -> Result<LinComb> {
    let mut acc = LinComb::one(alphabet);
    for l in letters {
        acc = interp_product(&acc, &LinComb::word(alphabet, Word::letter(l.clone()))?)?;
    }
    Ok(acc)
}

/// Both sides of the symmetric sum theorem for the interpolated product
/// with symbolic `r`.
pub fn symmetric_sum_sides(alphabet: &Alphabet, letters: &[Letter]) -> Result<(LinComb, LinComb)> {
    let n = letters.len();
    if n == 0 || n > MAX_SYMMETRIC {
        return Err(Error::InvalidArgument(format!(
            "symmetric sums need 1 <= n <= {MAX_SYMMETRIC} letters, got {n}"
        )));
    }
    for l in letters {
        alphabet.validate(l)?;
    }
    let mut lhs = LinComb::zero(alphabet);
    let one = Poly::one(Var::R);
    for perm in permutations(n) {
        let w = Word::new(perm.iter().map(|&i| letters[i].clone()).collect());
        lhs.add_term(w, &one);
    }
    let mut rhs = LinComb::zero(alphabet);
    for b in set_partitions(n)? {
        let block_letters: Vec<Letter> = b
            .blocks
            .iter()
            .map(|blk| {
                let ls: Vec<Letter> = blk.iter().map(|&e| letters[e - 1].clone()).collect();
                alphabet.diamond_all(&ls)
            })
            .collect();
        let term = interp_chain(alphabet, &block_letters)?.scale(&c_r_coeff(&b));
        rhs = rhs.checked_add(&term)?;
    }
    Ok((lhs, rhs))
}

/// Both sides of `u^n = Σ_{λ⊢n} (ε_λ/z_λ) Π p_{λ_j}(r) u^{◇λ_1} ⋄ ⋯ ⋄ u^{◇λ_l}`.
pub fn repeated_power_sides(alphabet: &Alphabet, u: &Letter, n: usize) -> Result<(LinComb, LinComb)> {
    if n == 0 || n > MAX_REPEATED {
        return Err(Error::InvalidArgument(format!(
            "repeated powers need 1 <= n <= {MAX_REPEATED}, got {n}"
        )));
    }
    alphabet.validate(u)?;
    let lhs = LinComb::word(alphabet, Word::letter(u.clone()).power(n))?;
    let mut rhs = LinComb::zero(alphabet);
    for lam in int_partitions(n)? {
        let mut c = Poly::constant(
            Var::R,
            Rat::from_int(lam.epsilon()).checked_div(&Rat::from_bigint(lam.z()))?,
        );
        for &p in lam.parts() {
            c = &c * &p_a(p)?;
        }
        let powers: Vec<Letter> = lam
            .parts()
            .iter()
            .map(|&p| alphabet.diamond_all(&vec![u.clone(); p]))
            .collect();
        rhs = rhs.checked_add(&interp_chain(alphabet, &powers)?.scale(&c))?;
    }
    Ok((lhs, rhs))
}

/// Formal right side of the zeta image: each multiset of block sums
/// (sorted) with its coefficient in `r`.
pub fn zeta_symsum_rhs_symbolic(keys: &[SignedInt]) -> Result<BTreeMap<Vec<SignedInt>, Poly>> {
    let mut out: BTreeMap<Vec<SignedInt>, Poly> = BTreeMap::new();
    for b in set_partitions(keys.len())? {
        let mut sums: Vec<SignedInt> = b
            .blocks
            .iter()
            .map(|blk| {
                blk.iter()
                    .map(|&e| keys[e - 1])
                    .reduce(signed_index_add)
                    .expect("nonempty block")
            })
            .collect();
        sums.sort();
        let e = out.entry(sums).or_insert_with(|| Poly::zero(Var::R));
        *e += &c_r_coeff(&b);
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Numeric comparison of `Σ_σ ζ^r(k_σ)` with `Σ_B c_r(B) Π ζ(Σ_{h∈B_j} k_h)`.
#[derive(Debug, Clone)]
pub struct SymsumReport {
    pub keys: Vec<SignedInt>,
    pub r: Rat,
    pub lhs: f64,
    pub rhs: f64,
    pub difference: f64,
    /// Combined tail estimate of both sides.
    pub tail: f64,
}

impl SymsumReport {
    pub fn agrees(&self, tol: f64) -> bool {
        self.difference <= tol
    }
}

pub(crate) fn key_label(keys: &[SignedInt]) -> String {
    let k: Vec<String> = keys
        .iter()
        .map(|k| if k.is_barred() { format!("{}̄", k.magnitude()) } else { k.magnitude().to_string() })
        .collect();
    k.join(",")
}

impl fmt::Display for SymsumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "keys ({}) at r = {}", key_label(&self.keys), self.r)?;
        writeln!(f, "  lhs  {:.12}", self.lhs)?;
        writeln!(f, "  rhs  {:.12}", self.rhs)?;
        write!(f, "  diff {:.3e}  (tail {:.1e})", self.difference, self.tail)
    }
}

/// Evaluates both sides. Positive keys must be `>= 2`; barred keys switch
/// to alternating values.
pub fn zeta_symsum_report(keys: &[SignedInt], r: &Rat, terms: usize) -> Result<SymsumReport> {
    if keys.is_empty() || keys.len() > MAX_SYMMETRIC {
        return Err(Error::InvalidArgument(format!(
            "symmetric sums need 1..={MAX_SYMMETRIC} keys"
        )));
    }
    if let Some(k) = keys.iter().find(|k| !k.is_barred() && k.magnitude() < 2) {
        return Err(Error::Inadmissible(format!("key {k} would start a divergent sum")));
    }
    let alternating = keys.iter().any(|k| k.is_barred());
    let (alphabet, kind) = if alternating {
        (Alphabet::Euler(2), ValueKind::Euler(2))
    } else {
        (Alphabet::Mzv, ValueKind::Zeta)
    };
    let letter = |k: SignedInt| -> Result<Letter> {
        if alternating {
            alphabet.colored(k.magnitude(), k.is_barred() as i64)
        } else {
            alphabet.z(k.magnitude())
        }
    };
    let mut ev = Evaluator::new(EvalConfig::new(terms, kind)?);
    let mut lhs_words = LinComb::zero(&alphabet);
    let one = Poly::one(Var::R);
    for perm in permutations(keys.len()) {
        let w = Word::new(perm.iter().map(|&i| letter(keys[i])).collect::<Result<_>>()?);
        lhs_words.add_term(w, &one);
    }
    let rp = Poly::constant(Var::R, r.clone());
    let lhs = ev.lincomb(&sigma_at(&lhs_words, &rp))?;
    let mut rhs = 0.0;
    let mut rhs_tail = 0.0;
    for (sums, c) in zeta_symsum_rhs_symbolic(keys)? {
        let c = c.eval(r).to_f64();
        let mut prod = 1.0;
        let mut rel = 0.0;
        for s in sums {
            let idx = if alternating {
                Index::signed(&[s.value()])?
            } else {
                Index::mzv(&[s.magnitude()])?
            };
            let v = ev.strict(&idx)?;
            let x = v.re().expect("numeric");
            prod *= x;
            rel += v.tail / x.abs().max(f64::MIN_POSITIVE);
        }
        rhs += c * prod;
        rhs_tail += (c * prod).abs() * rel;
    }
    let lhs_v = lhs.re().expect("numeric");
    Ok(SymsumReport {
        keys: keys.to_vec(),
        r: r.clone(),
        lhs: lhs_v,
        rhs,
        difference: (lhs_v - rhs).abs(),
        tail: lhs.tail + rhs_tail,
    })
}

/// `ζ^r({i}_n)` from the partition formula `Σ_{λ⊢n} (ε_λ/z_λ) Π p_{λ_j}(r) ζ(iλ_j)`.
pub fn repeated_zeta_partition_formula(key: SignedInt, n: usize, r: &Rat, terms: usize) -> Result<f64> {
    if !key.is_barred() && key.magnitude() < 2 {
        return Err(Error::Inadmissible(format!("key {key}")));
    }
    let kind = if key.is_barred() { ValueKind::Euler(2) } else { ValueKind::Zeta };
    let mut ev = Evaluator::new(EvalConfig::new(terms, kind)?);
    let mut total = 0.0;
    for lam in int_partitions(n)? {
        let mut c = Rat::from_int(lam.epsilon()).checked_div(&Rat::from_bigint(lam.z()))?;
        let mut prod = 1.0;
        for &p in lam.parts() {
            c = &c * &p_a(p)?.eval(r);
            let s = std::iter::repeat_n(key, p).reduce(signed_index_add).expect("p >= 1");
            let idx = if key.is_barred() { Index::signed(&[s.value()])? } else { Index::mzv(&[s.magnitude()])? };
            prod *= ev.strict(&idx)?.re().expect("numeric");
        }
        total += c.to_f64() * prod;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mzv::SignedInt;

    fn si(v: &[i64]) -> Vec<SignedInt> {
        v.iter().map(|&x| SignedInt::new(x).unwrap()).collect()
    }

    #[test]
    fn bell_numbers_and_order() {
        let counts: Vec<usize> = (1..=8).map(|n| set_partitions(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 15, 52, 203, 877, 4140]);
        let p3: Vec<String> = set_partitions(3).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(p3, ["{{1,2,3}}", "{{1,2},{3}}", "{{1,3},{2}}", "{{1},{2,3}}", "{{1},{2},{3}}"]);
        assert!(set_partitions(0).is_err());
        assert!(set_partitions(11).is_err());
        let counts: Vec<usize> = (1..=8).map(|n| int_partitions(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn epsilon_and_z() {
        let lam = IntPartition::new(vec![1, 2, 1]).unwrap();
        assert_eq!(lam.parts(), &[2, 1, 1]);
        assert_eq!(lam.epsilon(), -1);
        assert_eq!(lam.z(), BigInt::from(4));
        // Σ_{λ⊢n} n!/z_λ = n!
        for n in 1..=7usize {
            let total: BigInt = int_partitions(n)
                .unwrap()
                .iter()
                .map(|l| factorial(n as u32) / l.z())
                .sum();
            assert_eq!(total, factorial(n as u32));
        }
    }

    #[test]
    fn p_a_values() {
        assert!(p_a(1).unwrap().is_one());
        assert_eq!(p_a(2).unwrap(), Poly::from_ints(Var::R, &[1, -2]));
        let half = Rat::new(1, 2).unwrap();
        assert_eq!(p_a(3).unwrap().eval(&half), Rat::new(1, 4).unwrap());
        assert!(p_a(2).unwrap().eval(&half).is_zero());
        for a in 1..=8 {
            let p = p_a(a).unwrap();
            assert!(p.eval(&Rat::zero()).is_one());
            let sign = if a % 2 == 1 { 1 } else { -1 };
            assert_eq!(p.eval(&Rat::one()), Rat::from_int(sign));
        }
        // (1-2r) p_{k-1} - (r²-r) p_{k-2} = p_k
        let a = Poly::from_ints(Var::R, &[1, -2]);
        let b = Poly::from_ints(Var::R, &[0, -1, 1]);
        for k in 3..=8 {
            assert_eq!(&(&a * &p_a(k - 1).unwrap()) - &(&b * &p_a(k - 2).unwrap()), p_a(k).unwrap());
        }
    }

    #[test]
    fn c_r_examples() {
        let b = SetPartition::new(2, vec![vec![1], vec![2]]).unwrap();
        assert!(c_r_coeff(&b).is_one());
        let b = SetPartition::new(2, vec![vec![1, 2]]).unwrap();
        assert_eq!(c_r_coeff(&b), Poly::from_ints(Var::R, &[-1, 2]));
        let b = SetPartition::new(3, vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(c_r_coeff(&b).eval(&Rat::zero()), Rat::from_int(2));
        assert!(SetPartition::new(3, vec![vec![1, 2]]).is_err());
    }

    #[test]
    fn symmetric_sum_free_letters() {
        let alph = Alphabet::free(&["a", "b", "c", "d", "e"]).unwrap();
        let gens: Vec<Letter> = (0..5).map(|i| alph.generator(i).unwrap()).collect();
        for n in 1..=5 {
            let (l, r) = symmetric_sum_sides(&alph, &gens[..n]).unwrap();
            assert_eq!(l, r, "n = {n}");
        }
    }

    #[test]
    fn symmetric_sum_repeated_mzv_weights() {
        let a = Alphabet::Mzv;
        let ls: Vec<Letter> = [2, 2, 3].iter().map(|&w| a.z(w).unwrap()).collect();
        let (l, r) = symmetric_sum_sides(&a, &ls).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn partition_formula_for_powers() {
        for alph in [Alphabet::Mzv, Alphabet::free(&["g"]).unwrap()] {
            let u = match alph {
                Alphabet::Mzv => alph.z(2).unwrap(),
                _ => alph.generator(0).unwrap(),
            };
            for n in 1..=5 {
                let (l, r) = repeated_power_sides(&alph, &u, n).unwrap();
                assert_eq!(l, r, "n = {n}");
            }
        }
    }

    #[test]
    fn symsum_numeric_two_keys() {
        let rep = zeta_symsum_report(&si(&[2, 3]), &Rat::zero(), 100_000).unwrap();
        assert!(rep.agrees(1e-10), "{rep}");
        let rep = zeta_symsum_report(&si(&[-1, 2, -3]), &Rat::new(1, 3).unwrap(), 100_000).unwrap();
        assert!(rep.agrees(1e-10), "{rep}");
        assert!(zeta_symsum_report(&si(&[1, 2]), &Rat::zero(), 1000).is_err());
    }

    #[test]
    fn alternating_symbolic_coefficients() {
        let rhs = zeta_symsum_rhs_symbolic(&si(&[-1, 2, -3])).unwrap();
        let m = |v: &[i64]| si(v);
        let minus = Poly::from_ints(Var::R, &[-1, 2]);
        assert_eq!(rhs[&m(&[-3, -1, 2])], Poly::one(Var::R));
        assert_eq!(rhs[&m(&[-3, -3])], minus);
        assert_eq!(rhs[&m(&[-5, -1])], minus);
        assert_eq!(rhs[&m(&[2, 4])], minus);
        assert_eq!(rhs[&m(&[6])], Poly::from_ints(Var::R, &[2, -6, 6]));
        assert_eq!(rhs.len(), 5);
    }

    #[test]
    fn repeated_power_is_collapsed_symmetric_sum() {
        let a = Alphabet::Mzv;
        let u = a.z(3).unwrap();
        for n in 1..=4 {
            let (_, sym) = symmetric_sum_sides(&a, &vec![u.clone(); n]).unwrap();
            let (_, rep) = repeated_power_sides(&a, &u, n).unwrap();
            let nf = Rat::from_bigint(factorial(n as u32));
            assert_eq!(sym.scale_rat(&nf.recip().unwrap()), rep);
        }
    }

    #[test]
    fn specializations_of_c_r() {
        for b in set_partitions(5).unwrap() {
            let c = c_r_coeff(&b);
            let mut plain = Rat::from_int(if (5 - b.len()) % 2 == 0 { 1 } else { -1 });
            for blk in b.blocks() {
                plain = &plain * &Rat::from_bigint(factorial(blk.len() as u32 - 1));
            }
            assert_eq!(c.eval(&Rat::zero()), plain);
            assert_eq!(c.eval(&Rat::one()), plain.abs());
        }
    }
}
