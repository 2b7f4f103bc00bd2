//! Closed forms for repeated arguments `{m}_n` and the interpolated
//! generating function `Z((1-r)λ) / Z(-rλ)`.

use crate::error::{Error, Result};
use crate::scalars::{factorial, Rat};

use super::EvalResult;

/// A family of repeated-argument values with a known closed form.
#[derive(Debug, Clone, PartialEq)]
pub enum RepeatedFamily {
    /// `ζ({2}_n)`
    Zeta2,
    /// `ζ({4}_n)`
    Zeta4,
    /// `t({2}_n)`
    T2,
    /// `t({4}_n)`
    T4,
    /// `ζ_{J_ν}({2}_n)`
    Bessel2(Rat),
    /// `ζ_{J_ν}({4}_n)`
    Bessel4(Rat),
}

impl RepeatedFamily {
    /// The repeated argument `m`.
    pub fn argument(&self) -> u32 {
        match self {
            RepeatedFamily::Zeta2 | RepeatedFamily::T2 | RepeatedFamily::Bessel2(_) => 2,
            _ => 4,
        }
    }

    /// Power of π carried by each repetition.
    pub fn pi_power(&self) -> u32 {
        match self {
            RepeatedFamily::Bessel2(_) | RepeatedFamily::Bessel4(_) => 0,
            other => other.argument(),
        }
    }

    fn nu(&self) -> Result<Option<&Rat>> {
        match self {
            RepeatedFamily::Bessel2(nu) | RepeatedFamily::Bessel4(nu) => {
                if nu <= &Rat::from_int(-1) {
                    return Err(Error::InvalidArgument(format!("Bessel order {nu} must exceed -1")));
                }
                Ok(Some(nu))
            }
            _ => Ok(None),
        }
    }
}

impl std::fmt::Display for RepeatedFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RepeatedFamily::Zeta2 => write!(f, "zeta2"),
            RepeatedFamily::Zeta4 => write!(f, "zeta4"),
            RepeatedFamily::T2 => write!(f, "t2"),
            RepeatedFamily::T4 => write!(f, "t4"),
            RepeatedFamily::Bessel2(nu) => write!(f, "bessel2[nu={nu}]"),
            RepeatedFamily::Bessel4(nu) => write!(f, "bessel4[nu={nu}]"),
        }
    }
}

/// `Π_{i=1}^{n} (ν + i)`
fn rising(nu: &Rat, n: u32) -> Rat {
    (1..=n).fold(Rat::one(), |acc, i| &acc * &(nu + &Rat::from_int(i as i64)))
}

fn two_pow(e: u32) -> Rat {
    Rat::from_int(2).pow(e as i32)
}

/// The value as `q · π^e` with exact rational `q`.
pub fn repeated_exact(fam: &RepeatedFamily, n: u32) -> Result<(Rat, u32)> {
    let nu = fam.nu()?;
    let inv_fact = |k: u32| Rat::from_bigint(factorial(k)).recip().expect("nonzero");
    let q = match fam {
        RepeatedFamily::Zeta2 => inv_fact(2 * n + 1),
        RepeatedFamily::Zeta4 => &two_pow(2 * n + 1) * &inv_fact(4 * n + 2),
        RepeatedFamily::T2 => &inv_fact(2 * n) / &two_pow(2 * n),
        RepeatedFamily::T4 => &inv_fact(4 * n) / &two_pow(2 * n),
        RepeatedFamily::Bessel2(_) => {
            let nu = nu.expect("bessel");
            let d = &(&two_pow(2 * n) * &Rat::from_bigint(factorial(n))) * &rising(nu, n);
            d.recip()?
        }
        RepeatedFamily::Bessel4(_) => {
            let nu = nu.expect("bessel");
            let d = &(&(&two_pow(4 * n) * &Rat::from_bigint(factorial(n))) * &rising(nu, 2 * n))
                * &rising(nu, n);
            d.recip()?
        }
    };
    Ok((q, fam.pi_power() * n))
}

/// Float value of the closed form.
pub fn repeated_closed_form(fam: &RepeatedFamily, n: u32) -> Result<EvalResult> {
    let (q, e) = repeated_exact(fam, n)?;
    Ok(EvalResult::exact_real(q.to_f64() * std::f64::consts::PI.powi(e as i32)))
}

/// Coefficients of `λ^0..λ^M` in `Z((1-r)λ) / Z(-rλ)`, where `Z` is the
/// generating function of the family. The division runs over exact
/// rationals in `μ = π^m λ`; the π powers are restored at the end.
pub fn interp_repeated_ratio(fam: &RepeatedFamily, r: &Rat, order: usize) -> Result<Vec<f64>> {
    let mut q = Vec::with_capacity(order + 1);
    for n in 0..=order {
        q.push(repeated_exact(fam, n as u32)?.0);
    }
    let s = &Rat::one() - r;
    let t = -r;
    let num: Vec<Rat> = q.iter().enumerate().map(|(n, c)| c * &s.pow(n as i32)).collect();
    let den: Vec<Rat> = q.iter().enumerate().map(|(n, c)| c * &t.pow(n as i32)).collect();
    // den[0] = 1
    let mut out: Vec<Rat> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut c = num[n].clone();
        for k in 1..=n {
            c -= &(&den[k] * &out[n - k]);
        }
        out.push(c);
    }
    let pi = std::f64::consts::PI;
    let e = fam.pi_power() as i32;
    Ok(out
        .iter()
        .enumerate()
        .map(|(n, c)| c.to_f64() * pi.powi(e * n as i32))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn printed_instances() {
        let v = repeated_closed_form(&RepeatedFamily::Zeta2, 2).unwrap().re().unwrap();
        assert!((v - PI.powi(4) / 120.0).abs() < 1e-14);
        let v = repeated_closed_form(&RepeatedFamily::Zeta2, 0).unwrap().re().unwrap();
        assert_eq!(v, 1.0);
        let half = Rat::new(1, 2).unwrap();
        let (q, e) = repeated_exact(&RepeatedFamily::Bessel2(half), 1).unwrap();
        assert_eq!((q, e), (Rat::new(1, 6).unwrap(), 0));
        assert!(repeated_exact(&RepeatedFamily::Bessel2(Rat::from_int(-1)), 1).is_err());
    }

    #[test]
    fn bessel_specializations_match() {
        // π^{|w|} ζ_{J_{1/2}} = ζ and (π/2)^{|w|} ζ_{J_{-1/2}} = t
        let half = Rat::new(1, 2).unwrap();
        for n in 0..6u32 {
            let scale = |m: u32| Rat::from_int(2).pow((m * n) as i32);
            let (z2, _) = repeated_exact(&RepeatedFamily::Zeta2, n).unwrap();
            let (b2, _) = repeated_exact(&RepeatedFamily::Bessel2(half.clone()), n).unwrap();
            assert_eq!(z2, b2);
            let (z4, _) = repeated_exact(&RepeatedFamily::Zeta4, n).unwrap();
            let (b4, _) = repeated_exact(&RepeatedFamily::Bessel4(half.clone()), n).unwrap();
            assert_eq!(z4, b4);
            let (t2, _) = repeated_exact(&RepeatedFamily::T2, n).unwrap();
            let (c2, _) = repeated_exact(&RepeatedFamily::Bessel2(-&half), n).unwrap();
            assert_eq!(&t2 * &scale(2), c2);
            let (t4, _) = repeated_exact(&RepeatedFamily::T4, n).unwrap();
            let (c4, _) = repeated_exact(&RepeatedFamily::Bessel4(-&half), n).unwrap();
            assert_eq!(&t4 * &scale(4), c4);
        }
    }

    #[test]
    fn ratio_coefficients() {
        let half = Rat::new(1, 2).unwrap();
        let c = interp_repeated_ratio(&RepeatedFamily::Zeta2, &half, 3).unwrap();
        assert_eq!(c[0], 1.0);
        assert!((c[1] - PI * PI / 6.0).abs() < 1e-14);
        assert!((c[2] - PI.powi(4) / 72.0).abs() < 1e-13);
        let z = interp_repeated_ratio(&RepeatedFamily::Zeta4, &Rat::zero(), 4).unwrap();
        for (n, v) in z.iter().enumerate() {
            let w = repeated_closed_form(&RepeatedFamily::Zeta4, n as u32).unwrap().re().unwrap();
            assert!((v - w).abs() <= 1e-15 * w.abs());
        }
    }

    #[test]
    fn star_values_of_twos() {
        // ζ*({2}_n) = 2(1 - 2^{1-2n}) ζ(2n)
        let c = interp_repeated_ratio(&RepeatedFamily::Zeta2, &Rat::one(), 2).unwrap();
        assert!((c[1] - PI * PI / 6.0).abs() < 1e-14);
        assert!((c[2] - 2.0 * (1.0 - 0.125) * PI.powi(4) / 90.0).abs() < 1e-13);
    }
}
