//! Airy zeta values `ζ_Ai(k) = Σ a_n^{-k}` over the zeros of `Ai` as exact
//! polynomials in `κ = |Ai'(0)/Ai(0)|`.
//!
//! With `f = Ai'/Ai` we have `f' = z - f²` and `f(0) = -κ`, so every
//! derivative of `log Ai` is a polynomial in `(z, f)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalars::{factorial, Poly, Rat, Var};

/// Numeric κ, for display only.
pub const KAPPA: f64 = 0.729_011_132_947_301_6;

/// Polynomial in `z` and `f`, keyed by `(deg_z, deg_f)`.
type Bivariate = BTreeMap<(u32, u32), Rat>;

fn add_to(p: &mut Bivariate, key: (u32, u32), c: Rat) {
    let e = p.entry(key).or_insert_with(Rat::zero);
    *e += &c;
    if e.is_zero() {
        p.remove(&key);
    }
}

/// `d/dz` using `f' = z - f²`.
fn derivative(p: &Bivariate) -> Bivariate {
    let mut out = Bivariate::new();
    for (&(a, b), c) in p {
        if a > 0 {
            add_to(&mut out, (a - 1, b), c * &Rat::from_int(a as i64));
        }
        if b > 0 {
            let cb = c * &Rat::from_int(b as i64);
            add_to(&mut out, (a + 1, b - 1), cb.clone());
            add_to(&mut out, (a, b + 1), -cb);
        }
    }
    out
}

/// `ζ_Ai(k) = -g_k(0) / (k-1)!` where `g_k = d^k log Ai`.
pub fn airy_zeta_poly(k: u32) -> Result<Poly> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("Airy zeta needs k >= 2, got {k}")));
    }
    let mut g = Bivariate::new();
    g.insert((0, 1), Rat::one());
    for _ in 1..k {
        g = derivative(&g);
    }
    let mut coeffs = vec![Rat::zero(); k as usize + 1];
    let scale = -Rat::from_bigint(factorial(k - 1)).recip().expect("nonzero");
    for (&(a, b), c) in &g {
        if a == 0 {
            // f(0)^b = (-κ)^b
            let sign = if b % 2 == 1 { -Rat::one() } else { Rat::one() };
            coeffs[b as usize] += &(&(c * &sign) * &scale);
        }
    }
    Ok(Poly::from_coeffs(Var::Kappa, coeffs))
}

/// `ζ_Ai({m}_n)` from the power sums `ζ_Ai(mj)` by Newton's identities.
pub fn airy_repeated_poly(m: u32, n: u32) -> Result<Poly> {
    if m == 0 || m % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "repeated Airy values need an even argument, got {m}"
        )));
    }
    let p: Vec<Poly> = (1..=n).map(|j| airy_zeta_poly(m * j)).collect::<Result<_>>()?;
    let mut e = vec![Poly::one(Var::Kappa)];
    for k in 1..=n as usize {
        let mut acc = Poly::zero(Var::Kappa);
        for i in 1..=k {
            let term = &e[k - i] * &p[i - 1];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        e.push(acc.scale(&Rat::new(1, k as i64)?));
    }
    Ok(e.pop().expect("nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kp(c: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(Var::Kappa, c.iter().map(|&(a, b)| Rat::new(a, b).unwrap()).collect())
    }

    #[test]
    fn low_orders() {
        assert_eq!(airy_zeta_poly(2).unwrap(), kp(&[(0, 1), (0, 1), (1, 1)]));
        assert_eq!(
            airy_zeta_poly(4).unwrap(),
            kp(&[(0, 1), (-1, 3), (0, 1), (0, 1), (1, 1)])
        );
        // ζ_Ai(3) = κ³ - 1/2 by hand: g_3 = 1 - 2f(z - f²)
        assert_eq!(airy_zeta_poly(3).unwrap(), kp(&[(-1, 2), (0, 1), (0, 1), (1, 1)]));
        assert!(airy_zeta_poly(1).is_err());
    }

    #[test]
    fn degree_and_leading_coefficient() {
        for k in 2..=10 {
            let p = airy_zeta_poly(k).unwrap();
            assert_eq!(p.degree(), Some(k as usize));
            assert!(p.leading_coeff().is_one());
        }
    }

    #[test]
    fn repeated_twos_match_series() {
        let expect = [
            kp(&[(1, 1)]),
            kp(&[(0, 1), (0, 1), (1, 1)]),
            kp(&[(0, 1), (1, 6)]),
            kp(&[(1, 60)]),
            kp(&[(0, 1), (0, 1), (1, 336)]),
            kp(&[(0, 1), (1, 6480)]),
        ];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(&airy_repeated_poly(2, n as u32).unwrap(), e, "n = {n}");
        }
        assert!(airy_repeated_poly(3, 2).is_err());
    }

    #[test]
    fn kappa_pattern_mod_three() {
        for n in 1..=8u32 {
            let p = airy_repeated_poly(2, n).unwrap();
            let support: Vec<usize> = (0..p.coeffs().len()).filter(|&d| !p.coeff(d).is_zero()).collect();
            let want = match n % 3 {
                0 => 0,
                1 => 2,
                _ => 1,
            };
            assert_eq!(support, vec![want], "n = {n}: {p}");
        }
    }
}
