//! Nested-sum kernel.
//!
//! For weights `g_i(n) = φ_i(n) n^{-s_i}` the nested sum
//! `Σ_{n_1>⋯>n_k≥1} Π g_i(n_i)` splits at `N` into
//! `Σ_j T_j · P_{j+1}`, where `P_{j+1}` only involves `n ≤ N` (an O(kN)
//! dynamic program) and `T_j` only involves `n > N`.
//!
//! `T_j` is computed from asymptotic expansions. The phases are periodic
//! mod `L`; writing `n = Lm + ρ`, every inner tail is a series in `1/m`
//! per residue `ρ`. Sums over `m' > m` use the Euler–Maclaurin expansion
//! of `Σ_{n>m} n^{-q}`, and the terms with `m' = m, ρ' > ρ` are kept
//! exactly.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalars::{binomial, Rat};

/// Highest power of `1/m` kept in tail expansions.
const ORDER: usize = 28;
/// Lower order used for the truncation-error estimate.
const ORDER_CHECK: usize = 22;

/// Periodic phase pattern of one summation variable.
#[derive(Debug, Clone)]
pub(crate) struct Phase {
    /// `φ(ρ)` for `ρ = 0..L`.
    pub values: Vec<Complex64>,
}

impl Phase {
    pub fn one() -> Self {
        Phase {
            values: vec![Complex64::new(1.0, 0.0)],
        }
    }

    /// `ε^{ρ c}` with `ε = e^{2πi/L}`.
    pub fn root_of_unity(level: u32, color: u32) -> Self {
        let values = (0..level)
            .map(|rho| {
                let k = (rho as u64 * color as u64) % level as u64;
                if k == 0 {
                    return Complex64::new(1.0, 0.0);
                }
                if 2 * k == level as u64 {
                    return Complex64::new(-1.0, 0.0);
                }
                Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / level as f64)
            })
            .collect();
        Phase { values }
    }

    /// Indicator of odd `n`.
    pub fn odd() -> Self {
        Phase {
            values: vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        }
    }

    fn period(&self) -> usize {
        self.values.len()
    }

    fn at(&self, n: usize) -> Complex64 {
        self.values[n % self.values.len()]
    }
}

/// The finite part `P_j = Σ_{N≥n_j>⋯>n_k≥1} Π_{i≥j} g_i(n_i)` for every `j`,
/// with `P_{k+1} = 1` appended.
pub(crate) fn finite_parts(
    exps: &[u32],
    phases: &[Phase],
    bases: Option<&[f64]>,
    n_max: usize,
) -> Vec<Complex64> {
    let k = exps.len();
    let zero = Complex64::new(0.0, 0.0);
    let mut acc = vec![zero; k + 1];
    // Neumaier compensation terms
    let mut comp = vec![zero; k + 1];
    acc[k] = Complex64::new(1.0, 0.0);
    for n in 1..=n_max {
        let x = match bases {
            Some(a) => 1.0 / a[n - 1],
            None => 1.0 / n as f64,
        };
        // outer to inner, so acc[i + 1] still holds its value at n - 1
        for i in 0..k {
            let ph = phases[i].at(n);
            if ph == zero {
                continue;
            }
            let g = ph * x.powi(exps[i] as i32);
            let inner = acc[i + 1] + comp[i + 1];
            let (sum, err) = two_sum(acc[i], g * inner);
            acc[i] = sum;
            comp[i] += err;
        }
    }
    acc.iter().zip(&comp).map(|(a, c)| a + c).collect()
}

fn two_sum(a: Complex64, b: Complex64) -> (Complex64, Complex64) {
    let part = |a: f64, b: f64| {
        let s = a + b;
        let e = if a.abs() >= b.abs() { (a - s) + b } else { (b - s) + a };
        (s, e)
    };
    let (re, ere) = part(a.re, b.re);
    let (im, eim) = part(a.im, b.im);
    (Complex64::new(re, im), Complex64::new(ere, eim))
}

fn bernoulli_even() -> &'static [f64] {
    static B: OnceLock<Vec<f64>> = OnceLock::new();
    B.get_or_init(|| {
        // B_0..B_ORDER from Σ_{j<n+1} binom(n+1, j) B_j = 0
        let mut b: Vec<Rat> = vec![Rat::one()];
        for n in 1..=ORDER + 2 {
            let mut s = Rat::zero();
            for (j, bj) in b.iter().enumerate() {
                s += &(&Rat::from_bigint(binomial(n as u64 + 1, j as u64)) * bj);
            }
            let denom = Rat::from_int(n as i64 + 1);
            b.push(-(&s / &denom));
        }
        b.iter().map(Rat::to_f64).collect()
    })
}

type Series = Vec<Complex64>;

fn zero_series(order: usize) -> Series {
    vec![Complex64::new(0.0, 0.0); order + 1]
}

fn series_mul(a: &Series, b: &Series, order: usize) -> Series {
    let mut out = zero_series(order);
    for (i, x) in a.iter().enumerate() {
        if x.norm_sqr() == 0.0 {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(Lm + ρ)^{-s}` as a series in `1/m`.
fn base_series(l: usize, rho: usize, s: u32, order: usize) -> Series {
    let mut out = zero_series(order);
    let lf = l as f64;
    let ratio = rho as f64 / lf;
    let mut c = lf.powi(-(s as i32));
    for k in 0..=order {
        let p = s as usize + k;
        if p > order {
            break;
        }
        out[p] = Complex64::new(c, 0.0);
        if rho == 0 {
            break;
        }
        // binom(-s, k+1) / binom(-s, k) = (-s - k)/(k + 1)
        c *= ratio * (-(s as f64) - k as f64) / (k as f64 + 1.0);
    }
    out
}

/// `Σ_{n>m} n^{-q}` as a series in `1/m`, `q >= 2`.
fn hurwitz_series(q: usize, order: usize) -> Series {
    let b = bernoulli_even();
    let mut out = zero_series(order);
    let qf = q as f64;
    if q - 1 <= order {
        out[q - 1] += 1.0 / (qf - 1.0);
    }
    if q <= order {
        out[q] -= 0.5;
    }
    let mut i = 1;
    loop {
        let p = q + 2 * i - 1;
        if p > order {
            break;
        }
        // rising factorial (q)_{2i-1} / (2i)!
        let mut c = 1.0;
        for t in 0..(2 * i - 1) {
            c *= (qf + t as f64) / (t as f64 + 1.0);
        }
        c /= 2.0 * i as f64;
        out[p] += b[2 * i] * c;
        i += 1;
    }
    out
}

/// Tails `T_j = Σ_{n_1>⋯>n_j>N} Π_{i≤j} g_i(n_i)` for `j = 0..=k`, at
/// expansion order `order`. `N` must be a multiple of the common period.
fn tails_at_order(exps: &[u32], phases: &[Phase], n: usize, order: usize) -> Result<Vec<Complex64>> {
    let l = phases.iter().map(Phase::period).fold(1, lcm);
    debug_assert_eq!(n % l, 0);
    let m = (n / l) as f64;
    let eval = |s: &Series| -> Complex64 {
        let inv = 1.0 / m;
        let mut acc = Complex64::new(0.0, 0.0);
        for c in s.iter().rev() {
            acc = acc * inv + c;
        }
        acc
    };
    let mut out = vec![Complex64::new(1.0, 0.0)];
    let mut prev: Vec<Series> = (0..l)
        .map(|_| {
            let mut s = zero_series(order);
            s[0] = Complex64::new(1.0, 0.0);
            s
        })
        .collect();
    for (i, (&s, phase)) in exps.iter().zip(phases).enumerate() {
        let prods: Vec<Series> = (0..l)
            .map(|rho| {
                let ph = phase.at(rho);
                let mut p = series_mul(&base_series(l, rho, s, order), &prev[rho], order);
                for c in p.iter_mut() {
                    *c *= ph;
                }
                p
            })
            .collect();
        let mut total = zero_series(order);
        for p in &prods {
            for (t, c) in total.iter_mut().zip(p) {
                *t += c;
            }
        }
        let scale = total.iter().map(|c| c.norm()).fold(0.0, f64::max).max(1.0);
        if total[1].norm() > 1e-12 * scale {
            return Err(Error::Inadmissible(format!(
                "nested sum diverges at entry {}",
                i + 1
            )));
        }
        let mut off_diag = zero_series(order);
        for (q, c) in total.iter().enumerate().skip(2) {
            if c.norm_sqr() == 0.0 {
                continue;
            }
            for (o, h) in off_diag.iter_mut().zip(hurwitz_series(q, order)) {
                *o += c * h;
            }
        }
        let mut next = Vec::with_capacity(l);
        for rho in 0..l {
            let mut w = off_diag.clone();
            for p in prods.iter().skip(rho + 1) {
                for (x, c) in w.iter_mut().zip(p) {
                    *x += c;
                }
            }
            next.push(w);
        }
        out.push(eval(&next[0]));
        prev = next;
    }
    Ok(out)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Common period of the phases.
pub(crate) fn period(phases: &[Phase]) -> usize {
    phases.iter().map(Phase::period).fold(1, lcm)
}

/// Tails with an estimate of the expansion error.
pub(crate) fn tails(exps: &[u32], phases: &[Phase], n: usize) -> Result<(Vec<Complex64>, Vec<f64>)> {
    let hi = tails_at_order(exps, phases, n, ORDER)?;
    let lo = tails_at_order(exps, phases, n, ORDER_CHECK)?;
    let err = hi.iter().zip(&lo).map(|(a, b)| (a - b).norm()).collect();
    Ok((hi, err))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_even();
        assert!((b[2] - 1.0 / 6.0).abs() < 1e-15);
        assert!((b[4] + 1.0 / 30.0).abs() < 1e-15);
        assert!((b[12] + 691.0 / 2730.0).abs() < 1e-12);
    }

    #[test]
    fn hurwitz_tail_against_zeta3() {
        let zeta3 = 1.202_056_903_159_594_3;
        let head: f64 = (1..=50).map(|n| (n as f64).powi(-3)).sum();
        let s = hurwitz_series(3, ORDER);
        let m = 50.0f64;
        let v: f64 = s.iter().enumerate().map(|(p, c)| c.re * m.powi(-(p as i32))).sum();
        assert!((v - (zeta3 - head)).abs() < 1e-14, "{v}");
    }

    #[test]
    fn alternating_tail_against_log2() {
        // Σ_{n>100} (-1)^n / n = -log 2 - Σ_{n≤100} (-1)^n / n
        let (t, _) = tails(&[1], &[Phase::root_of_unity(2, 1)], 100).unwrap();
        let head: f64 = (1..=100)
            .map(|n| if n % 2 == 0 { 1.0 } else { -1.0 } / n as f64)
            .sum();
        let expect = -std::f64::consts::LN_2 - head;
        assert!((t[1].re - expect).abs() < 1e-14, "{} vs {expect}", t[1].re);
        assert!(t[1].im.abs() < 1e-15);
    }

    #[test]
    fn depth_two_tail_matches_euler_identity() {
        // ζ(2,1) = ζ(3): head by brute force, tail from the expansions
        let n = 200;
        let exps = [2, 1];
        let phases = [Phase::one(), Phase::one()];
        let p = finite_parts(&exps, &phases, None, n);
        let (t, _) = tails(&exps, &phases, n).unwrap();
        let v: f64 = (0..=2).map(|j| (t[j] * p[j]).re).sum();
        assert!((v - 1.202_056_903_159_594_3).abs() < 1e-13, "{v}");
    }

    #[test]
    fn divergent_outer_sum_rejected() {
        assert!(tails(&[1], &[Phase::one()], 100).is_err());
        assert!(tails(&[1, 2], &[Phase::odd(), Phase::odd()], 100).is_err());
    }
}
