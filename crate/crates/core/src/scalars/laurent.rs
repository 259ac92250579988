use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{GaussianRational, Rational, ScalarError};

/// Monomial `R^r · M^m` with rational `r` and integer `m`.
///
/// Ordered lexicographically by `(r, m)`, which is compatible with
/// multiplication (a group order on the exponent lattice).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct Monomial {
    pub r: Rational,
    pub m: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        r: Rational::ZERO,
        m: 0,
    };

    pub fn new(r: Rational, m: i32) -> Self {
        Monomial { r, m }
    }

    /// Mass dimension: `[M] = 1`, `[R] = -1`.
    pub fn mass_dimension(&self) -> Rational {
        Rational::from(self.m) - self.r
    }

    pub fn is_one(&self) -> bool {
        self.r.is_zero() && self.m == 0
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            r: self.r + other.r,
            m: self.m.checked_add(other.m).expect("M exponent overflow"),
        }
    }

    fn inv(self) -> Monomial {
        Monomial { r: -self.r, m: -self.m }
    }
}

fn fmt_exponent(e: Rational) -> String {
    if e.is_integer() && !e.is_negative() {
        e.to_string()
    } else {
        format!("({e})")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.m != 0 {
            parts.push(format!("M^{}", fmt_exponent(Rational::from(self.m))));
        }
        if !self.r.is_zero() {
            parts.push(format!("R^{}", fmt_exponent(self.r)));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Finite sum of Gaussian-rational multiples of monomials `R^r M^m`.
///
/// Terms are kept sorted by monomial with no zero coefficients, so structural
/// equality is exact equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentScalar {
    terms: Vec<(Monomial, GaussianRational)>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        LaurentScalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::ONE)
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::I)
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(c, Rational::ZERO, 0)
    }

    pub fn rational(r: Rational) -> Self {
        Self::constant(r.into())
    }

    pub fn int(n: i128) -> Self {
        Self::constant(GaussianRational::int(n))
    }

    pub fn ratio(n: i128, d: i128) -> Self {
        Self::constant(GaussianRational::ratio(n, d))
    }

    pub fn monomial(c: GaussianRational, r: Rational, m: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentScalar {
            terms: vec![(Monomial::new(r, m), c)],
        }
    }

    /// `R^e`
    pub fn r_pow(e: Rational) -> Self {
        Self::monomial(GaussianRational::ONE, e, 0)
    }

    /// `M^e`
    pub fn m_pow(e: i32) -> Self {
        Self::monomial(GaussianRational::ONE, Rational::ZERO, e)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, GaussianRational)>>(it: I) -> Self {
        let mut acc: BTreeMap<Monomial, GaussianRational> = BTreeMap::new();
        for (mono, c) in it {
            *acc.entry(mono).or_default() += c;
        }
        LaurentScalar {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(Monomial, GaussianRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == GaussianRational::ONE
    }

    /// The value as a plain number, if it carries no `R` or `M` dependence.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.as_slice() {
            [] => Some(GaussianRational::ZERO),
            [(mono, c)] if mono.is_one() => Some(*c),
            _ => None,
        }
    }

    pub fn is_r_free(&self) -> bool {
        self.terms.iter().all(|(mono, _)| mono.r.is_zero())
    }

    pub fn scale(&self, c: GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentScalar {
            terms: self.terms.iter().map(|(mono, a)| (*mono, *a * c)).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        LaurentScalar {
            terms: self.terms.iter().map(|(mono, a)| (*mono, a.conj())).collect(),
        }
    }

    /// Inverse of a single-term value.
    pub fn invert_monomial(&self) -> Result<Self, ScalarError> {
        match self.terms.as_slice() {
            [(mono, c)] => Ok(LaurentScalar {
                terms: vec![(mono.inv(), c.recip().expect("stored coefficients are nonzero"))],
            }),
            _ => Err(ScalarError::InvertNonMonomial(self.to_string())),
        }
    }

    /// `R → ∞` limit: negative powers of `R` vanish, `R`-free terms survive and
    /// any positive power is reported as divergent.
    pub fn limit_r_infinity(&self) -> Result<Self, ScalarError> {
        if let Some((mono, c)) = self.terms.iter().rev().find(|(mono, _)| mono.r.is_positive()) {
            return Err(ScalarError::Divergent {
                witness: LaurentScalar::monomial(*c, mono.r, mono.m).to_string(),
            });
        }
        Ok(LaurentScalar {
            terms: self
                .terms
                .iter()
                .filter(|(mono, _)| mono.r.is_zero())
                .cloned()
                .collect(),
        })
    }

    /// Mass dimension if every term has the same one.
    pub fn mass_dimension(&self) -> Option<Rational> {
        let mut dims = self.terms.iter().map(|(mono, _)| mono.mass_dimension());
        let first = dims.next()?;
        dims.all(|d| d == first).then_some(first)
    }

    fn leading(&self) -> Option<&(Monomial, GaussianRational)> {
        self.terms.last()
    }

    fn exponent_box(&self) -> Option<(Rational, Rational, i32, i32)> {
        let rs = self.terms.iter().map(|(mono, _)| mono.r);
        let ms = self.terms.iter().map(|(mono, _)| mono.m);
        Some((rs.clone().min()?, rs.max()?, ms.clone().min()?, ms.max()?))
    }

    /// Exact quotient `self / divisor`, or `None` if the divisor does not
    /// divide `self` in the Laurent ring.
    pub fn div_exact(&self, divisor: &LaurentScalar) -> Option<LaurentScalar> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.is_monomial() {
            return Some(self * &divisor.invert_monomial().ok()?);
        }
        // Degrees are additive in each variable separately, so any quotient
        // has its exponents inside this box.
        let (nr_lo, nr_hi, nm_lo, nm_hi) = self.exponent_box()?;
        let (dr_lo, dr_hi, dm_lo, dm_hi) = divisor.exponent_box()?;
        let (r_lo, r_hi, m_lo, m_hi) = (nr_lo - dr_lo, nr_hi - dr_hi, nm_lo - dm_lo, nm_hi - dm_hi);
        let (lead_mono, lead_c) = *divisor.leading()?;
        let lead_inv = lead_c.recip()?;
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some(&(mono, c)) = rem.leading() {
            let q_mono = mono.mul(lead_mono.inv());
            if q_mono.r < r_lo || q_mono.r > r_hi || q_mono.m < m_lo || q_mono.m > m_hi {
                return None;
            }
            let q = LaurentScalar::monomial(c * lead_inv, q_mono.r, q_mono.m);
            rem = &rem - &(&q * divisor);
            quotient.push((q_mono, c * lead_inv));
        }
        Some(LaurentScalar::from_terms(quotient))
    }

    /// Largest power of `R` present.
    pub fn max_r_exponent(&self) -> Option<Rational> {
        self.terms.iter().map(|(mono, _)| mono.r).max()
    }
}

impl Add for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), rhs.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                    std::cmp::Ordering::Less => out.push(*a.next().unwrap()),
                    std::cmp::Ordering::Greater => out.push(*b.next().unwrap()),
                    std::cmp::Ordering::Equal => {
                        let s = x.1 + y.1;
                        if !s.is_zero() {
                            out.push((x.0, s));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => out.push(*a.next().unwrap()),
                (None, Some(_)) => out.push(*b.next().unwrap()),
                (None, None) => break,
            }
        }
        LaurentScalar { terms: out }
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar {
            terms: self.terms.iter().map(|(mono, c)| (*mono, -*c)).collect(),
        }
    }
}

impl Sub for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        self + &(-rhs)
    }
}

impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        if self.is_zero() || rhs.is_zero() {
            return LaurentScalar::zero();
        }
        if self.terms.len() == 1 && rhs.terms.len() == 1 {
            let (ma, ca) = self.terms[0];
            let (mb, cb) = rhs.terms[0];
            return LaurentScalar {
                terms: vec![(ma.mul(mb), ca * cb)],
            };
        }
        LaurentScalar::from_terms(
            self.terms
                .iter()
                .flat_map(|(ma, ca)| rhs.terms.iter().map(move |(mb, cb)| (ma.mul(*mb), *ca * *cb))),
        )
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentScalar {
            type Output = LaurentScalar;
            fn $f(self, rhs: LaurentScalar) -> LaurentScalar {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&LaurentScalar> for LaurentScalar {
            type Output = LaurentScalar;
            fn $f(self, rhs: &LaurentScalar) -> LaurentScalar {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}

impl From<GaussianRational> for LaurentScalar {
    fn from(c: GaussianRational) -> Self {
        LaurentScalar::constant(c)
    }
}

impl From<Rational> for LaurentScalar {
    fn from(r: Rational) -> Self {
        LaurentScalar::rational(r)
    }
}

impl fmt::Display for LaurentScalar {
    /// Terms sorted by `(expR, expM)`, joined by ` + `; each term is
    /// `coeff[*M^m][*R^r]`, e.g. `(1+2i)*M^2*R^(-3/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(mono, c)| {
                if mono.is_one() {
                    c.to_string()
                } else {
                    format!("{c}*{mono}")
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_exponent(s: &str) -> Result<Rational, ScalarError> {
    let s = s.trim();
    let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
    inner.parse()
}

fn parse_term(term: &str) -> Result<(Monomial, GaussianRational), ScalarError> {
    let mut factors = term.split('*').map(str::trim).peekable();
    let first = *factors.peek().ok_or_else(|| ScalarError::Parse(term.to_string()))?;
    let coeff = if first.starts_with('M') || first.starts_with('R') {
        GaussianRational::ONE
    } else {
        factors.next();
        first.parse()?
    };
    let mut mono = Monomial::ONE;
    for factor in factors {
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (b.trim(), parse_exponent(e)?),
            None => (factor, Rational::ONE),
        };
        match base {
            "M" => {
                let m = exp
                    .to_i32()
                    .ok_or_else(|| ScalarError::NonIntegerMExponent(exp.to_string()))?;
                mono = mono.mul(Monomial::new(Rational::ZERO, m));
            }
            "R" => mono = mono.mul(Monomial::new(exp, 0)),
            _ => return Err(ScalarError::Parse(format!("unknown factor `{factor}`"))),
        }
    }
    Ok((mono, coeff))
}

impl FromStr for LaurentScalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(LaurentScalar::zero());
        }
        let terms = s.split(" + ").map(parse_term).collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentScalar::from_terms(terms))
    }
}
