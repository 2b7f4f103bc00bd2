//! Numeric and symbolic evaluation of zeta-type values.
//!
//! Strict nested sums run through one kernel for ζ, multiple t-values,
//! colored (Euler) values and ζ_G over a user-supplied zero stream.
//! Interpolated values use `ζ^r = ζ ∘ Σ^r`. Airy zeta values are exact
//! polynomials in κ.

mod airy;
mod closed;
mod kernel;

use std::collections::HashMap;
use std::fmt;
use std::io::BufRead;
use std::path::Path;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mzv::Index;
use crate::psimaps::sigma_at;
use crate::qsalg::{Alphabet, LinComb, Word};
use crate::scalars::{Poly, Rat, Var};
use kernel::Phase;

pub use airy::{airy_repeated_poly, airy_zeta_poly, KAPPA};
pub use closed::{interp_repeated_ratio, repeated_closed_form, repeated_exact, RepeatedFamily};

/// Default truncation when neither the caller nor `QSH_DEFAULT_TERMS` sets one.
pub const DEFAULT_TERMS: usize = 1_000_000;

/// Which nested sum a word is sent to.
#[derive(Debug, Clone)]
pub enum ValueKind {
    Zeta,
    /// Multiple t-values: all summation variables odd.
    TValue,
    /// Colored values at level `N`, phases `ε^{n j}` with `ε = e^{2πi/N}`.
    Euler(u32),
    /// `ζ_G` with base terms `1/a_n`.
    ZeroStream(Arc<ZeroStream>),
}

impl ValueKind {
    fn name(&self) -> String {
        match self {
            ValueKind::Zeta => "zeta".into(),
            ValueKind::TValue => "t".into(),
            ValueKind::Euler(n) => format!("euler:{n}"),
            ValueKind::ZeroStream(_) => "zeros".into(),
        }
    }
}

/// How the part of the sum beyond the truncation point is handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailMode {
    /// Add the asymptotic tail; the estimate is the expansion error.
    Asymptotic,
    /// Plain truncation; the estimate is the crude bound
    /// `(1 + ln N)^{k-1} / N^{i_1 - 1}` (`1/N` for a leading weight 1).
    None,
}

impl std::str::FromStr for TailMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "asymptotic" => Ok(TailMode::Asymptotic),
            "none" => Ok(TailMode::None),
            _ => Err(Error::InvalidArgument(format!("unknown tail mode '{s}'"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct EvalConfig {
    terms: usize,
    kind: ValueKind,
    tail: TailMode,
}

impl EvalConfig {
    /// Needs `terms >= 10`.
    pub fn new(terms: usize, kind: ValueKind) -> Result<Self> {
        if terms < 10 {
            return Err(Error::InvalidArgument(format!(
                "truncation must be at least 10, got {terms}"
            )));
        }
        Ok(EvalConfig {
            terms,
            kind,
            tail: TailMode::Asymptotic,
        })
    }

    /// `QSH_DEFAULT_TERMS` if set and valid, else [`DEFAULT_TERMS`].
    pub fn default_terms() -> usize {
        std::env::var("QSH_DEFAULT_TERMS")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&n| n >= 10)
            .unwrap_or(DEFAULT_TERMS)
    }

    pub fn zeta() -> Self {
        Self::new(Self::default_terms(), ValueKind::Zeta).expect("default is valid")
    }

    pub fn with_kind(mut self, kind: ValueKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn with_tail(mut self, tail: TailMode) -> Self {
        self.tail = tail;
        self
    }

    pub fn with_terms(mut self, terms: usize) -> Result<Self> {
        self.terms = Self::new(terms, self.kind.clone())?.terms;
        Ok(self)
    }

    pub fn terms(&self) -> usize {
        self.terms
    }

    pub fn kind(&self) -> &ValueKind {
        &self.kind
    }

    pub fn tail(&self) -> TailMode {
        self.tail
    }
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self::zeta()
    }
}

/// A sequence of nonzero reals `a_1, a_2, …` with strictly increasing `|a_n|`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroStream {
    zeros: Vec<f64>,
}

impl ZeroStream {
    pub fn new(zeros: Vec<f64>) -> Result<Self> {
        for (i, &a) in zeros.iter().enumerate() {
            if a == 0.0 || !a.is_finite() {
                return Err(Error::InvalidZeroStream(format!(
                    "entry {} is {a}",
                    i + 1
                )));
            }
            if i > 0 && a.abs() <= zeros[i - 1].abs() {
                return Err(Error::InvalidZeroStream(format!(
                    "|a_n| must increase strictly, entries {} and {}",
                    i,
                    i + 1
                )));
            }
        }
        Ok(ZeroStream { zeros })
    }

    /// `a_n = f(n)` for `n = 1..=len`.
    pub fn from_fn(len: usize, f: impl Fn(usize) -> f64) -> Result<Self> {
        Self::new((1..=len).map(f).collect())
    }

    /// One decimal per line; `#` starts a comment; blank lines are skipped.
    pub fn from_reader(reader: impl BufRead) -> Result<Self> {
        let mut zeros = Vec::new();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            let content = line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let v: f64 = content.parse().map_err(|_| {
                Error::InvalidZeroStream(format!("line {}: cannot parse '{content}'", lineno + 1))
            })?;
            zeros.push(v);
        }
        Self::new(zeros)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        Self::from_reader(std::io::BufReader::new(f))
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }
}

/// A numeric or symbolic value.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Real(f64),
    Complex(Complex64),
    /// Exact polynomial in κ.
    Kappa(Poly),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Real(x) => write!(f, "{x:.12}"),
            Value::Complex(z) => write!(f, "{:.12} {} {:.12}i", z.re, if z.im < 0.0 { "-" } else { "+" }, z.im.abs()),
            Value::Kappa(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalResult {
    pub value: Value,
    /// Truncation point, absent for closed forms and symbolic values.
    pub terms: Option<usize>,
    /// Nonnegative error estimate.
    pub tail: f64,
}

impl EvalResult {
    fn numeric(z: Complex64, real: bool, terms: Option<usize>, tail: f64) -> Self {
        let value = if real { Value::Real(z.re) } else { Value::Complex(z) };
        EvalResult { value, terms, tail }
    }

    pub fn exact_real(x: f64) -> Self {
        EvalResult {
            value: Value::Real(x),
            terms: None,
            tail: 0.0,
        }
    }

    /// Real part for numeric values.
    pub fn re(&self) -> Option<f64> {
        match &self.value {
            Value::Real(x) => Some(*x),
            Value::Complex(z) => Some(z.re),
            Value::Kappa(_) => None,
        }
    }

    pub fn complex(&self) -> Option<Complex64> {
        match &self.value {
            Value::Real(x) => Some(Complex64::new(*x, 0.0)),
            Value::Complex(z) => Some(*z),
            Value::Kappa(_) => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match &self.value {
            Value::Kappa(p) => serde_json::json!({ "poly": p }),
            Value::Real(x) => serde_json::json!({ "value": x, "tail": self.tail, "N": self.terms }),
            Value::Complex(z) => serde_json::json!({
                "value": { "re": z.re, "im": z.im },
                "tail": self.tail,
                "N": self.terms,
            }),
        }
    }
}

fn is_real_kind(kind: &ValueKind) -> bool {
    !matches!(kind, ValueKind::Euler(n) if *n > 2)
}

/// Checks the index against the kind and returns the phase of each entry.
fn phases_for(idx: &Index, kind: &ValueKind) -> Result<Vec<Phase>> {
    let bad = || Error::Inadmissible(idx.to_string());
    match kind {
        ValueKind::Zeta | ValueKind::TValue | ValueKind::ZeroStream(_) => {
            if idx.level() != 1 {
                return Err(Error::InvalidArgument(format!(
                    "colored index {idx} needs the euler kind"
                )));
            }
            if idx.entries()[0].0 < 2 {
                return Err(bad());
            }
            let p = if matches!(kind, ValueKind::TValue) { Phase::odd() } else { Phase::one() };
            Ok(vec![p; idx.depth()])
        }
        ValueKind::Euler(level) => {
            if idx.level() != 1 && idx.level() != *level {
                return Err(Error::InvalidArgument(format!(
                    "index {idx} has level {}, evaluator has level {level}",
                    idx.level()
                )));
            }
            if !idx.is_admissible() {
                return Err(bad());
            }
            Ok(idx
                .entries()
                .iter()
                .map(|&(_, c)| Phase::root_of_unity(*level, c))
                .collect())
        }
    }
}

fn crude_tail(idx: &Index, n: usize) -> f64 {
    let s1 = idx.entries()[0].0 as i32;
    let nf = n as f64;
    let logs = (1.0 + nf.ln()).powi(idx.depth() as i32 - 1);
    if s1 == 1 {
        logs / nf
    } else {
        logs / nf.powi(s1 - 1)
    }
}

/// `Σ_{n_1>⋯>n_k≥1} Π φ_i(n_i) / n_i^{s_i}` truncated at `N` terms, plus the
/// asymptotic tail unless disabled.
pub fn strict_sum_eval(idx: &Index, cfg: &EvalConfig) -> Result<EvalResult> {
    let phases = phases_for(idx, &cfg.kind)?;
    let exps = idx.weights();
    let real = is_real_kind(&cfg.kind);
    if let ValueKind::ZeroStream(zs) = &cfg.kind {
        if zs.len() < cfg.terms {
            return Err(Error::ZeroStreamTooShort {
                need: cfg.terms,
                have: zs.len(),
            });
        }
        let p = kernel::finite_parts(&exps, &phases, Some(zs.zeros()), cfg.terms);
        let a_n = zs.zeros()[cfg.terms - 1].abs();
        let nf = cfg.terms as f64;
        let s1 = exps[0] as i32;
        // Σ_{n>N} |a_n|^{-s_1} with |a_n| growing at least like n|a_N|/N
        let tail = nf / ((s1 - 1) as f64 * a_n.powi(s1)) * (1.0 + nf.ln()).powi(exps.len() as i32 - 1);
        return Ok(EvalResult::numeric(p[0], true, Some(cfg.terms), tail));
    }
    let l = kernel::period(&phases);
    let n = cfg.terms - cfg.terms % l;
    let p = kernel::finite_parts(&exps, &phases, None, n);
    match cfg.tail {
        TailMode::None => Ok(EvalResult::numeric(p[0], real, Some(n), crude_tail(idx, n))),
        TailMode::Asymptotic => {
            let (t, err) = kernel::tails(&exps, &phases, n)?;
            let mut value = Complex64::new(0.0, 0.0);
            let mut est = 0.0;
            let mut magnitude = 0.0;
            for j in 0..t.len() {
                value += t[j] * p[j];
                est += err[j] * p[j].norm();
                magnitude += t[j].norm() * p[j].norm();
            }
            // rounding left over after compensated summation
            let rounding = 16.0 * t.len() as f64 * f64::EPSILON * magnitude;
            Ok(EvalResult::numeric(value, real, Some(n), est + rounding))
        }
    }
}

/// `ζ_G(idx)` for the zero stream `zeros`, truncated at `terms`.
pub fn zerostream_eval(idx: &Index, zeros: Arc<ZeroStream>, terms: usize) -> Result<EvalResult> {
    let cfg = EvalConfig::new(terms, ValueKind::ZeroStream(zeros))?;
    strict_sum_eval(idx, &cfg)
}

/// Evaluates words and linear combinations under one configuration,
/// caching every word value.
#[derive(Debug)]
pub struct Evaluator {
    cfg: EvalConfig,
    cache: HashMap<Word, (Complex64, f64)>,
}

impl Evaluator {
    pub fn new(cfg: EvalConfig) -> Self {
        Evaluator {
            cfg,
            cache: HashMap::new(),
        }
    }

    pub fn config(&self) -> &EvalConfig {
        &self.cfg
    }

    fn alphabet(&self) -> Alphabet {
        match self.cfg.kind {
            ValueKind::Euler(n) if n > 1 => Alphabet::Euler(n),
            _ => Alphabet::Mzv,
        }
    }

    fn word_value(&mut self, w: &Word) -> Result<(Complex64, f64)> {
        if w.is_empty() {
            return Ok((Complex64::new(1.0, 0.0), 0.0));
        }
        if let Some(v) = self.cache.get(w) {
            return Ok(*v);
        }
        let idx = Index::from_word(&self.alphabet(), w)?;
        let r = strict_sum_eval(&idx, &self.cfg)?;
        let v = (r.complex().expect("numeric"), r.tail);
        self.cache.insert(w.clone(), v);
        Ok(v)
    }

    /// Strict value of one index.
    pub fn strict(&mut self, idx: &Index) -> Result<EvalResult> {
        let (v, tail) = self.word_value(&idx.to_word())?;
        Ok(self.result(v, tail))
    }

    fn result(&self, v: Complex64, tail: f64) -> EvalResult {
        EvalResult::numeric(v, is_real_kind(&self.cfg.kind), Some(self.cfg.terms), tail)
    }

    /// Linear extension over rational-coefficient combinations.
    pub fn lincomb(&mut self, x: &LinComb) -> Result<EvalResult> {
        let mut value = Complex64::new(0.0, 0.0);
        let mut tail = 0.0;
        for (w, c) in x.terms() {
            if !c.is_constant() {
                return Err(Error::InvalidArgument(
                    "numeric evaluation needs r specialized".into(),
                ));
            }
            let c = c.constant_term().to_f64();
            let (v, t) = self.word_value(w)?;
            value += v * c;
            tail += t * c.abs();
        }
        Ok(self.result(value, tail))
    }

    /// `ζ^r(idx) = ζ(Σ^r idx)` at rational `r`.
    pub fn interp(&mut self, idx: &Index, r: &Rat) -> Result<EvalResult> {
        let x = sigma_at(&idx.to_lincomb(), &Poly::constant(Var::R, r.clone()));
        self.lincomb(&x)
    }

    /// The star value `ζ^1`.
    pub fn star(&mut self, idx: &Index) -> Result<EvalResult> {
        self.interp(idx, &Rat::one())
    }
}

/// `ζ^r(idx)` by expanding `Σ^r` into strict sums.
pub fn interp_eval(idx: &Index, r: &Rat, cfg: &EvalConfig) -> Result<EvalResult> {
    Evaluator::new(cfg.clone()).interp(idx, r)
}

impl fmt::Display for EvalResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        if let Some(n) = self.terms {
            write!(f, "  (N = {n}, tail ≤ {:.1e})", self.tail)?;
        }
        Ok(())
    }
}

impl ValueKind {
    pub fn label(&self) -> String {
        self.name()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    const ZETA3: f64 = 1.202_056_903_159_594_3;
    const ZETA5: f64 = 1.036_927_755_143_37;

    fn cfg(terms: usize) -> EvalConfig {
        EvalConfig::new(terms, ValueKind::Zeta).unwrap()
    }

    fn z(w: &[u32]) -> Index {
        Index::mzv(w).unwrap()
    }

    #[test]
    fn basel_and_t2() {
        let c = cfg(DEFAULT_TERMS);
        let v = strict_sum_eval(&z(&[2]), &c).unwrap();
        assert!((v.re().unwrap() - PI * PI / 6.0).abs() < 1e-12);
        let t = strict_sum_eval(&z(&[2]), &c.clone().with_kind(ValueKind::TValue)).unwrap();
        assert!((t.re().unwrap() - PI * PI / 8.0).abs() < 1e-12);
        let plain = strict_sum_eval(&z(&[2]), &c.clone().with_tail(TailMode::None)).unwrap();
        assert!((plain.re().unwrap() - PI * PI / 6.0).abs() < 1e-5);
        assert!((plain.re().unwrap() - PI * PI / 6.0).abs() < plain.tail);
    }

    #[test]
    fn alternating_log2() {
        let c = cfg(1000).with_kind(ValueKind::Euler(2));
        let v = strict_sum_eval(&Index::signed(&[-1]).unwrap(), &c).unwrap();
        assert!((v.re().unwrap() + LN_2).abs() < 1e-12);
        let c = c.with_tail(TailMode::None).with_terms(DEFAULT_TERMS).unwrap();
        let v = strict_sum_eval(&Index::signed(&[-1]).unwrap(), &c).unwrap();
        assert!((v.re().unwrap() + LN_2).abs() < 1e-5);
    }

    #[test]
    fn level_three_is_complex() {
        // Σ ω^n / n² with ω = e^{2πi/3}: real part is -ζ(2)/... check |Li_2(ω)| via conjugate symmetry
        let c = cfg(10_000).with_kind(ValueKind::Euler(3));
        let a = strict_sum_eval(&Index::colored(3, vec![(2, 1)]).unwrap(), &c).unwrap();
        let b = strict_sum_eval(&Index::colored(3, vec![(2, 2)]).unwrap(), &c).unwrap();
        let (a, b) = (a.complex().unwrap(), b.complex().unwrap());
        assert!((a - b.conj()).norm() < 1e-12);
        // Re Li_2(ω) = π²/6 · (3^{-1} · 1 - ... ) : Σ_{3|n} - (1/2)Σ_{3∤n} of 1/n²
        let expect = (PI * PI / 6.0) * (1.0 / 9.0 - 0.5 * (1.0 - 1.0 / 9.0));
        assert!((a.re - expect).abs() < 1e-12);
    }

    #[test]
    fn euler_identity_and_star() {
        let c = cfg(DEFAULT_TERMS);
        let v = strict_sum_eval(&z(&[2, 1]), &c).unwrap();
        assert!((v.re().unwrap() - ZETA3).abs() < 1e-12);
        let s = interp_eval(&z(&[2, 1]), &Rat::one(), &c).unwrap();
        assert!((s.re().unwrap() - 2.0 * ZETA3).abs() < 1e-12);
        let h = interp_eval(&z(&[2, 2]), &Rat::new(1, 2).unwrap(), &c).unwrap();
        assert!((h.re().unwrap() - PI.powi(4) / 72.0).abs() < 1e-12);
        let zero = interp_eval(&z(&[3, 1, 2]), &Rat::zero(), &c).unwrap();
        assert_eq!(zero.re(), strict_sum_eval(&z(&[3, 1, 2]), &c).unwrap().re());
    }

    #[test]
    fn depth_three_trailing_ones() {
        // ζ(3,1,1) = 2ζ(5) - ζ(2)ζ(3)
        let c = cfg(10_000);
        let v = strict_sum_eval(&z(&[3, 1, 1]), &c).unwrap();
        let expect = 2.0 * ZETA5 - PI * PI / 6.0 * ZETA3;
        assert!((v.re().unwrap() - expect).abs() < 1e-12, "{}", v.re().unwrap());
    }

    #[test]
    fn truncation_is_monotone_within_estimate() {
        for w in [&[2u32][..], &[2, 1], &[3, 1, 2], &[2, 1, 1, 1]] {
            for n in [10_000usize, 100_000] {
                let a = strict_sum_eval(&z(w), &cfg(n)).unwrap();
                let b = strict_sum_eval(&z(w), &cfg(10 * n)).unwrap();
                assert!((a.re().unwrap() - b.re().unwrap()).abs() <= a.tail, "{w:?} at {n}");
                let a = strict_sum_eval(&z(w), &cfg(n).with_tail(TailMode::None)).unwrap();
                let b = strict_sum_eval(&z(w), &cfg(10 * n).with_tail(TailMode::None)).unwrap();
                assert!((a.re().unwrap() - b.re().unwrap()).abs() <= a.tail, "{w:?} at {n}");
            }
        }
    }

    #[test]
    fn inadmissible_rejected() {
        let c = cfg(100);
        assert!(matches!(strict_sum_eval(&z(&[1, 2]), &c), Err(Error::Inadmissible(_))));
        let e = c.clone().with_kind(ValueKind::Euler(2));
        assert!(strict_sum_eval(&Index::signed(&[1, -2]).unwrap(), &e).is_err());
        assert!(strict_sum_eval(&Index::signed(&[-1, 2]).unwrap(), &e).is_ok());
        assert!(EvalConfig::new(9, ValueKind::Zeta).is_err());
    }

    #[test]
    fn zero_streams() {
        let n = 100_000;
        let zs = Arc::new(ZeroStream::from_fn(n, |k| k as f64 * PI).unwrap());
        let v = zerostream_eval(&z(&[2]), zs.clone(), n).unwrap();
        assert!((v.re().unwrap() - 1.0 / 6.0).abs() < 1e-5);
        let half = Arc::new(ZeroStream::from_fn(n, |k| (k as f64 - 0.5) * PI).unwrap());
        let v = zerostream_eval(&z(&[2]), half, n).unwrap();
        assert!((v.re().unwrap() - 0.5).abs() < 1e-5);
        assert!(matches!(
            zerostream_eval(&z(&[2]), zs, n + 1),
            Err(Error::ZeroStreamTooShort { .. })
        ));
        assert!(ZeroStream::new(vec![1.0, 2.0, 2.0]).is_err());
        assert!(ZeroStream::new(vec![1.0, 0.0]).is_err());
        let text = "# zeros\n3.0\n\n-4.5  # negative is fine\n6\n";
        let parsed = ZeroStream::from_reader(text.as_bytes()).unwrap();
        assert_eq!(parsed.zeros(), &[3.0, -4.5, 6.0]);
        assert!(ZeroStream::from_reader("1\nabc\n".as_bytes()).is_err());
    }

    #[test]
    fn stuffle_homomorphism_numeric() {
        use crate::qsalg::qsh_product;
        let mut ev = Evaluator::new(cfg(100_000));
        let u = z(&[2, 1]).to_lincomb();
        let v = z(&[3]).to_lincomb();
        let prod = ev.lincomb(&qsh_product(&u, &v).unwrap()).unwrap();
        let a = ev.lincomb(&u).unwrap().re().unwrap();
        let b = ev.lincomb(&v).unwrap().re().unwrap();
        assert!((prod.re().unwrap() - a * b).abs() < 1e-10);
    }

    #[test]
    fn duality_through_weight_six() {
        use crate::mzv::tau;
        use crate::psimaps::compositions;
        let mut ev = Evaluator::new(cfg(20_000));
        for n in 2..=6 {
            for c in compositions(n).unwrap() {
                let parts: Vec<u32> = c.parts().iter().map(|&p| p as u32).collect();
                if parts[0] < 2 {
                    continue;
                }
                let w = z(&parts).to_word();
                let a = ev.strict(&z(&parts)).unwrap();
                let dual = Index::from_word(&Alphabet::Mzv, &tau(&w).unwrap()).unwrap();
                let b = ev.strict(&dual).unwrap();
                assert!((a.re().unwrap() - b.re().unwrap()).abs() < 1e-12, "{parts:?}");
            }
        }
    }

    #[test]
    fn stuffle_for_t_and_alternating() {
        use crate::qsalg::qsh_product;
        let mut ev = Evaluator::new(cfg(20_000).with_kind(ValueKind::TValue));
        let u = z(&[2]).to_lincomb();
        let v = z(&[3, 1]).to_lincomb();
        let prod = ev.lincomb(&qsh_product(&u, &v).unwrap()).unwrap().re().unwrap();
        let ab = ev.lincomb(&u).unwrap().re().unwrap() * ev.lincomb(&v).unwrap().re().unwrap();
        assert!((prod - ab).abs() < 1e-12);

        let mut ev = Evaluator::new(cfg(20_000).with_kind(ValueKind::Euler(2)));
        let u = Index::signed(&[-1]).unwrap().to_lincomb();
        let v = Index::signed(&[2, -1]).unwrap().to_lincomb();
        let prod = ev.lincomb(&qsh_product(&u, &v).unwrap()).unwrap().re().unwrap();
        let ab = ev.lincomb(&u).unwrap().re().unwrap() * ev.lincomb(&v).unwrap().re().unwrap();
        assert!((prod - ab).abs() < 1e-12);
        // ζ(1̄,1̄) = (log²2 - ζ(2)) / 2
        let v = ev.strict(&Index::signed(&[-1, -1]).unwrap()).unwrap().re().unwrap();
        assert!((v - (LN_2 * LN_2 - PI * PI / 6.0) / 2.0).abs() < 1e-12);
    }
}
