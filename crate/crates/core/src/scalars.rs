//! Exact coefficient arithmetic: rationals and univariate polynomials over them.
//!
//! [`Rat`] is always kept in lowest terms with a positive denominator.
//! [`Poly`] carries an indeterminate tag so that interpolation-parameter
//! polynomials (in `r`) and Airy polynomials (in `kappa`) can never be mixed
//! by accident. The `std::ops` impls on [`Poly`] panic on a tag mismatch;
//! the `checked_*` methods report it as [`Error::MixedIndeterminates`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(numer.into(), denom.into())))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Rat) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(&self.0 / &other.0))
    }

    pub fn pow(&self, exp: i32) -> Self {
        Rat(num_traits::Pow::pow(&self.0, exp))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            // huge numerator and denominator: divide in log space
            let n = self.0.numer().to_f64().unwrap_or(f64::INFINITY);
            let d = self.0.denom().to_f64().unwrap_or(f64::INFINITY);
            n / d
        })
    }

    /// 1/n! as a rational.
    pub fn inv_factorial(n: u32) -> Self {
        Rat(BigRational::new(BigInt::one(), factorial(n)))
    }
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse {
            pos: 0,
            msg: format!("invalid rational '{s}'"),
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Rat(BigRational::new(n, d)))
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Rat::from_bigint(n))
            }
        }
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! rat_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($tr::$method(&self.0, &rhs.0))
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($tr::$method(self.0, rhs.0))
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($tr::$method(self.0, &rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);

/// Panics on a zero divisor; use [`Rat::checked_div`] to get an error instead.
impl Div<&Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div<Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        self.checked_div(&rhs).expect("division by zero")
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

/// Binary operation selector for [`rat_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rat_arith(a: &Rat, b: &Rat, op: RatOp) -> Result<Rat> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => a.checked_div(b)?,
    })
}

/// Indeterminate tag of a [`Poly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    /// The interpolation parameter.
    R,
    /// The Airy constant |Ai'(0)/Ai(0)|.
    Kappa,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::R => "r",
            Var::Kappa => "kappa",
        }
    }
}

impl FromStr for Var {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "r" => Ok(Var::R),
            "kappa" => Ok(Var::Kappa),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown indeterminate '{s}'"),
            }),
        }
    }
}

/// Univariate polynomial with rational coefficients, lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    var: Var,
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero(var: Var) -> Self {
        Poly { var, coeffs: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        Poly::constant(var, Rat::one())
    }

    pub fn constant(var: Var, c: Rat) -> Self {
        Poly::from_coeffs(var, vec![c])
    }

    /// The indeterminate itself.
    pub fn x(var: Var) -> Self {
        Poly::from_coeffs(var, vec![Rat::zero(), Rat::one()])
    }

    /// The interpolation parameter `r`.
    pub fn r() -> Self {
        Poly::x(Var::R)
    }

    pub fn from_coeffs(var: Var, mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Poly::from_coeffs(var, coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> Rat {
        self.coeffs.get(deg).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// Constant term, i.e. the value at 0.
    pub fn constant_term(&self) -> Rat {
        self.coeff(0)
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::MixedIndeterminates(self.var.symbol(), other.var.symbol()))
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(Poly::from_coeffs(self.var, coeffs))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.var));
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Ok(Poly::from_coeffs(self.var, coeffs))
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.var);
        }
        Poly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one(self.var);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    /// Substitute another polynomial (same tag) for the indeterminate.
    pub fn compose(&self, inner: &Poly) -> Result<Poly> {
        self.check(inner)?;
        let mut acc = Poly::zero(self.var);
        for c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(inner)?.checked_add(&Poly::constant(self.var, c.clone()))?;
        }
        Ok(acc)
    }
}

/// Binary operation selector for [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(p: &Poly, q: &Poly, op: PolyOp) -> Result<Poly> {
    match op {
        PolyOp::Add => p.checked_add(q),
        PolyOp::Sub => p.checked_sub(q),
        PolyOp::Mul => p.checked_mul(q),
    }
}

pub fn poly_eval(p: &Poly, x: &Rat) -> Rat {
    p.eval(x)
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("mixed polynomial indeterminates")
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("mixed polynomial indeterminates")
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("mixed polynomial indeterminates")
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        assert_eq!(self.var, rhs.var, "mixed polynomial indeterminates");
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rat::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Rat::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    /// Human-readable form, e.g. `1 - 2r + 4r^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sym = self.var.symbol();
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "{sym}")?;
                    if deg > 1 {
                        write!(f, "^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.var.symbol(), self)
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.var, &self.coeffs).cmp(&(other.var, &other.coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    var: Var,
    coeffs: Vec<Rat>,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            var: self.var,
            coeffs: self.coeffs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        Ok(Poly::from_coeffs(repr.var, repr.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn rat_examples() {
        assert_eq!(rat_arith(&q("1/2"), &q("1/3"), RatOp::Add).unwrap(), q("5/6"));
        let half = q("2/4");
        assert_eq!(half, q("1/2"));
        let z = rat_arith(&half, &q("0/1"), RatOp::Mul).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.denom(), &BigInt::one());
        assert_eq!(rat_arith(&q("1"), &q("3"), RatOp::Div).unwrap(), q("1/3"));
        assert!(matches!(
            rat_arith(&q("1"), &q("0"), RatOp::Div),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn rat_canonical_text() {
        assert_eq!(q("-6/4").to_string(), "-3/2");
        assert_eq!(q("6/-4").to_string(), "-3/2");
        assert_eq!(q("10/5").to_string(), "2");
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn poly_examples() {
        let one_minus_2r = Poly::from_ints(Var::R, &[1, -2]);
        assert_eq!(
            poly_arith(&one_minus_2r, &one_minus_2r, PolyOp::Mul).unwrap(),
            Poly::from_ints(Var::R, &[1, -4, 4])
        );
        assert_eq!(
            poly_arith(&Poly::r(), &Poly::zero(Var::R), PolyOp::Add).unwrap(),
            Poly::r()
        );
        let one_minus_r = Poly::from_ints(Var::R, &[1, -1]);
        let minus_r = Poly::from_ints(Var::R, &[0, -1]);
        assert_eq!(
            poly_arith(&one_minus_r, &minus_r, PolyOp::Sub).unwrap(),
            Poly::one(Var::R)
        );
    }

    #[test]
    fn mixed_indeterminates_rejected() {
        let a = Poly::x(Var::R);
        let b = Poly::x(Var::Kappa);
        assert!(matches!(
            poly_arith(&a, &b, PolyOp::Add),
            Err(Error::MixedIndeterminates(..))
        ));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn eval_examples() {
        let p = Poly::from_ints(Var::R, &[1, -2]);
        assert!(poly_eval(&p, &q("1/2")).is_zero());
        assert!(poly_eval(&p, &q("0")).is_one());
        // (1-r)^3 - (-r)^3
        let one_minus_r = Poly::from_ints(Var::R, &[1, -1]);
        let minus_r = Poly::from_ints(Var::R, &[0, -1]);
        let p3 = &one_minus_r.pow(3) - &minus_r.pow(3);
        assert_eq!(poly_eval(&p3, &q("1/2")), q("1/4"));
    }

    #[test]
    fn canonical_trailing_zeros() {
        let p = Poly::from_coeffs(Var::R, vec![q("1"), q("0"), q("0")]);
        assert_eq!(p.degree(), Some(0));
        let z = &Poly::r() - &Poly::r();
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn display_and_json() {
        let p = Poly::from_ints(Var::R, &[1, -2]);
        assert_eq!(p.to_string(), "1 - 2r");
        assert_eq!(Poly::from_ints(Var::Kappa, &[0, -1, 0, 0, 1]).to_string(), "-kappa + kappa^4");
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"{"var":"r","coeffs":["1","-2"]}"#);
        let back: Poly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn compose_substitution() {
        // p(r) = 1 - 2r, p(1 - r) = -1 + 2r
        let p = Poly::from_ints(Var::R, &[1, -2]);
        let s = Poly::from_ints(Var::R, &[1, -1]);
        assert_eq!(p.compose(&s).unwrap(), Poly::from_ints(Var::R, &[-1, 2]));
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-20i64..20, 1i64..8).prop_map(|(n, d)| Rat::new(n, d).unwrap())
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(small_rat(), 0..5).prop_map(|c| Poly::from_coeffs(Var::R, c))
    }

    proptest! {
        #[test]
        fn rat_ring_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &Rat::zero(), a.clone());
            prop_assert_eq!(&a * &Rat::one(), a.clone());
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn poly_ring_axioms(p in small_poly(), q in small_poly(), s in small_poly()) {
            prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
            prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&p * &Poly::one(Var::R), p.clone());
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn eval_is_homomorphism(p in small_poly(), q in small_poly(), x in small_rat()) {
            prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
            prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
        }
    }
}
