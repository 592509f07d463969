//! Exact scalars over ℚ and ℚ(i).
//!
//! A [`GaussianRational`] is `re + im·i` with arbitrary-precision rational
//! parts. Rational scalars are Gaussian rationals with `im = 0`; the
//! [`Field`] tag records which of the two fields a computation lives in.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Always-reduced rational with positive denominator.
pub type Rational = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Q,
    Qi,
}

impl Field {
    pub fn contains(self, z: &Scalar) -> bool {
        match self {
            Field::Q => z.is_real(),
            Field::Qi => true,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Q => "Q",
            Field::Qi => "Qi",
        })
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" => Ok(Field::Q),
            "Qi" => Ok(Field::Qi),
            other => Err(Error::Parse(format!("unknown field '{other}' (expected Q or Qi)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

pub type Scalar = GaussianRational;

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(Rational::from_integer(BigInt::from(n)))
    }

    /// `p/q` as a real scalar. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::real(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn gaussian(re: (i64, i64), im: (i64, i64)) -> Self {
        Self::new(
            Rational::new(BigInt::from(re.0), BigInt::from(re.1)),
            Rational::new(BigInt::from(im.0), BigInt::from(im.1)),
        )
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sq(&self) -> Rational {
        if self.im.is_zero() {
            &self.re * &self.re
        } else {
            &self.re * &self.re + &self.im * &self.im
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.im.is_zero() {
            return Ok(Self::real(self.re.recip()));
        }
        let n = self.norm_sq();
        Ok(Self { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    pub fn scale_real(&self, k: &Rational) -> Self {
        Self { re: &self.re * k, im: &self.im * k }
    }

    /// Text form used by the instance format: `p/q` for rationals in ℚ,
    /// `a/b+c/di` with both parts in ℚ(i).
    pub fn encode(&self, field: Field) -> String {
        match field {
            Field::Q if self.is_real() => fmt_rational(&self.re),
            _ => fmt_gaussian(&self.re, &self.im),
        }
    }

    /// Parses `p/q`, `p`, `a/b+c/di` or `a/b-c/di` into a scalar of `field`.
    pub fn decode(s: &str, field: Field) -> Result<Self> {
        let z: Self = s.parse()?;
        if !field.contains(&z) {
            return Err(Error::Parse(format!("'{s}' is not an element of {field}")));
        }
        Ok(z)
    }
}

fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn fmt_gaussian(re: &Rational, im: &Rational) -> String {
    let sign = if im.is_negative() { '-' } else { '+' };
    let mag = im.abs();
    format!("{}{}{}/{}i", fmt_rational(re), sign, mag.numer(), mag.denom())
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational '{s}'"));
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in '{s}'")));
    }
    Ok(Rational::new(p, q))
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Self::real(parse_rational(t)?));
        };
        let split = body
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .ok_or_else(|| Error::Parse(format!("invalid gaussian rational '{s}'")))?;
        let re = parse_rational(&body[..split])?;
        let mag = parse_rational(&body[split + 1..])?;
        if mag.is_negative() {
            return Err(Error::Parse(format!("doubled sign in '{s}'")));
        }
        let im = if body.as_bytes()[split] == b'-' { -mag } else { mag };
        Ok(Self { re, im })
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            f.write_str(&fmt_rational(&self.re))
        } else {
            f.write_str(&fmt_gaussian(&self.re, &self.im))
        }
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: Self) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: Self) -> GaussianRational {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: Self) -> GaussianRational {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussianRational::real(&self.re * &o.re);
        }
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: Self) -> GaussianRational {
                (&self).$m(&o)
            }
        }
        impl $tr<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: &GaussianRational) -> GaussianRational {
                (&self).$m(o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, o: &GaussianRational) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p: i64, d: i64) -> Scalar {
        Scalar::ratio(p, d)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
        assert_eq!(q(2, 3).checked_div(&q(2, 3)).unwrap(), Scalar::one());
        assert_eq!(q(1, 1).checked_div(&Scalar::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn conjugation() {
        assert_eq!(q(3, 4).conj(), q(3, 4));
        assert_eq!(Scalar::gaussian((1, 1), (2, 1)).conj(), Scalar::gaussian((1, 1), (-2, 1)));
        let z = Scalar::gaussian((1, 1), (-5, 1));
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn zero_tests() {
        assert!(q(0, 1).is_zero());
        assert!(!q(1, 1_000_000_000).is_zero());
        assert!(Scalar::gaussian((0, 1), (0, 1)).is_zero());
    }

    #[test]
    fn text_codec() {
        assert_eq!(q(5, 6).encode(Field::Q), "5/6");
        assert_eq!(Scalar::one().encode(Field::Q), "1/1");
        assert_eq!(Scalar::zero().encode(Field::Q), "0/1");
        assert_eq!(Scalar::gaussian((1, 1), (-2, 1)).encode(Field::Qi), "1/1-2/1i");
        assert_eq!(q(-1, 2).encode(Field::Qi), "-1/2+0/1i");
        assert_eq!(Scalar::decode("-1/2-3/4i", Field::Qi).unwrap(), Scalar::gaussian((-1, 2), (-3, 4)));
        assert_eq!(Scalar::decode("-7", Field::Q).unwrap(), Scalar::from_int(-7));
        assert_eq!(Scalar::decode("4/6", Field::Q).unwrap(), q(2, 3));
        assert!(Scalar::decode("1/1+1/1i", Field::Q).is_err());
        assert!(Scalar::decode("1/0", Field::Q).is_err());
        assert!(Scalar::decode("abc", Field::Qi).is_err());
        assert!(Scalar::decode("1/2+-1/2i", Field::Qi).is_err());
    }

    fn scalar() -> impl Strategy<Value = Scalar> {
        (-20i64..20, 1i64..9, -20i64..20, 1i64..9)
            .prop_map(|(a, b, c, d)| Scalar::gaussian((a, b), (c, d)))
    }

    proptest! {
        #[test]
        fn field_laws(a in scalar(), b in scalar(), c in scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a + &(-&a)).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.recip().unwrap()).is_one());
            }
        }

        #[test]
        fn modulus(a in scalar()) {
            let n = a.norm_sq();
            prop_assert_eq!(Scalar::real(n.clone()), &a * &a.conj());
            prop_assert!(!n.is_negative());
            prop_assert_eq!(n.is_zero(), a.is_zero());
        }

        #[test]
        fn codec_roundtrip(a in scalar()) {
            prop_assert_eq!(Scalar::decode(&a.encode(Field::Qi), Field::Qi).unwrap(), a.clone());
            prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
        }
    }
}
