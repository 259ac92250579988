use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use super::{Rational, ScalarError};

/// Gaussian rational `re + i·im`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub const ZERO: GaussianRational = GaussianRational {
        re: Rational::ZERO,
        im: Rational::ZERO,
    };
    pub const ONE: GaussianRational = GaussianRational {
        re: Rational::ONE,
        im: Rational::ZERO,
    };
    pub const I: GaussianRational = GaussianRational {
        re: Rational::ZERO,
        im: Rational::ONE,
    };

    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::ZERO }
    }

    pub fn imag(im: Rational) -> Self {
        GaussianRational { re: Rational::ZERO, im }
    }

    /// Shorthand for the rational `n/d` as a real Gaussian rational.
    pub fn ratio(n: i128, d: i128) -> Self {
        Self::real(Rational::new(n, d))
    }

    pub fn int(n: i128) -> Self {
        Self::real(Rational::from_int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn norm_sqr(&self) -> Rational {
        self.re * self.re + self.im * self.im
    }

    pub fn recip(&self) -> Option<Self> {
        let n = self.norm_sqr();
        let inv = n.recip()?;
        Some(GaussianRational {
            re: self.re * inv,
            im: -self.im * inv,
        })
    }

    pub fn scale(&self, r: Rational) -> Self {
        GaussianRational {
            re: self.re * r,
            im: self.im * r,
        }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Self::real(self.re * rhs.re);
        }
        GaussianRational {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for GaussianRational {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl From<i32> for GaussianRational {
    fn from(n: i32) -> Self {
        Self::int(n as i128)
    }
}

fn fmt_imag(im: Rational) -> String {
    if im.is_one() {
        "i".to_string()
    } else if im == -Rational::ONE {
        "-i".to_string()
    } else {
        format!("{im}i")
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical rendering: `0`, `-1/2`, `i`, `-3/2i`, `(1+2i)`, `(1/2-i)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}", fmt_imag(self.im));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "({}{}{})", self.re, sign, fmt_imag(self.im.abs()))
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_imag(s: &str) -> Result<Rational, ScalarError> {
    let body = s.strip_suffix('i').ok_or_else(|| ScalarError::Parse(s.to_string()))?;
    match body {
        "" | "+" => Ok(Rational::ONE),
        "-" => Ok(-Rational::ONE),
        _ => body.parse(),
    }
}

impl FromStr for GaussianRational {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            // split at the sign that separates real and imaginary parts
            let split = inner
                .char_indices()
                .skip(1)
                .filter(|&(_, c)| c == '+' || c == '-')
                .map(|(k, _)| k)
                .last()
                .ok_or_else(|| ScalarError::Parse(s.to_string()))?;
            let re: Rational = inner[..split].parse()?;
            let im = parse_imag(&inner[split..])?;
            return Ok(GaussianRational { re, im });
        }
        if s.ends_with('i') {
            return Ok(GaussianRational::imag(parse_imag(s)?));
        }
        Ok(GaussianRational::real(s.parse()?))
    }
}
