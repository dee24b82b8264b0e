//! Exact Gaussian rationals `re + im·i` with arbitrary-precision parts.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { re: BigRational::from_integer(n.into()), im: BigRational::zero() }
    }

    /// `num/den`; panics if `den == 0`.
    pub fn from_frac(num: i64, den: i64) -> Self {
        Scalar { re: BigRational::new(num.into(), den.into()), im: BigRational::zero() }
    }

    pub fn i() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|²`, a rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(Scalar { re: &self.re / &n, im: -&self.im / &n })
    }

    /// Parses one of the fraction strings used in JSON (`"-3/2"`, `"4"`).
    pub fn parse_rational(s: &str) -> Result<BigRational> {
        parse_rational(s)
    }

    /// `re` and `im` as fraction strings.
    pub fn to_parts(&self) -> (String, String) {
        (self.re.to_string(), self.im.to_string())
    }

    pub fn from_parts(re: &str, im: &str) -> Result<Self> {
        Ok(Scalar { re: parse_rational(re)?, im: parse_rational(im)? })
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let t = s.trim().replace('\u{2212}', "-");
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t.as_str(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_int(1)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(re: BigRational) -> Self {
        Scalar { re, im: BigRational::zero() }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        Scalar {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.recip().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl fmt::Display for Scalar {
    /// `3`, `-1/2`, `i`, `-2i`, `(1/2+3i)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |im: &BigRational| {
            if im.is_one() {
                "i".to_string()
            } else if (-im).is_one() {
                "-i".to_string()
            } else {
                format!("{im}i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}", imag(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "({}{}{})", self.re, sign, imag(&self.im.abs()))
            }
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts what `Display` writes, plus an optional layer of parentheses
    /// and forms like `3/2i`, `1/2 - i`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad scalar {s:?}"));
        let mut t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        t = t.replace('\u{2212}', "-");
        while t.starts_with('(') && t.ends_with(')') {
            t = t[1..t.len() - 1].to_string();
        }
        if t.is_empty() {
            return Err(bad());
        }
        // Split into signed parts at '+'/'-' not at the start.
        let mut parts = Vec::new();
        let mut start = 0;
        for (i, c) in t.char_indices() {
            if i > 0 && (c == '+' || c == '-') {
                parts.push(&t[start..i]);
                start = i;
            }
        }
        parts.push(&t[start..]);
        let mut out = Scalar::zero();
        for part in parts {
            let (neg, body) = match part.as_bytes().first() {
                Some(b'+') => (false, &part[1..]),
                Some(b'-') => (true, &part[1..]),
                _ => (false, part),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let term = if let Some(coef) = body.strip_suffix('i') {
                let c = if coef.is_empty() { BigRational::one() } else { parse_rational(coef).map_err(|_| bad())? };
                Scalar { re: BigRational::zero(), im: c }
            } else {
                Scalar::from(parse_rational(body).map_err(|_| bad())?)
            };
            out += &if neg { -term } else { term };
        }
        Ok(out)
    }
}
