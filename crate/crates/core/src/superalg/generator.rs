use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalars::Rational;

/// Generator families. Pre- and post-contraction generators that play the same
/// role share a family; calligraphic (AdS / real-form) generators have their
/// own where the two coexist in one algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    P,
    Mlorentz,
    Z,
    Q,
    Sigma,
    S,
    Bint,
    BC,
    Bcentral,
    T0,
    T5,
    BD,
    Bminus,
    Bplus,
    Bmixed,
    J,
    Jbar,
    JbarConj,
    McalAdS,
    Pcal,
    QcalAdS,
    Scal,
    Tplus,
    TplusConj,
}

impl Family {
    pub const ALL: [Family; 24] = [
        Family::P,
        Family::Mlorentz,
        Family::Z,
        Family::Q,
        Family::Sigma,
        Family::S,
        Family::Bint,
        Family::BC,
        Family::Bcentral,
        Family::T0,
        Family::T5,
        Family::BD,
        Family::Bminus,
        Family::Bplus,
        Family::Bmixed,
        Family::J,
        Family::Jbar,
        Family::JbarConj,
        Family::McalAdS,
        Family::Pcal,
        Family::QcalAdS,
        Family::Scal,
        Family::Tplus,
        Family::TplusConj,
    ];

    pub fn parity(self) -> Parity {
        match self {
            Family::Q | Family::Sigma | Family::S | Family::Scal | Family::QcalAdS => Parity::Odd,
            _ => Parity::Even,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Family::P => "P",
            Family::Mlorentz => "M",
            Family::Z => "Z",
            Family::Q => "Q",
            Family::Sigma => "Sigma",
            Family::S => "S",
            Family::Bint => "Bcal",
            Family::BC => "BC",
            Family::Bcentral => "B",
            Family::T0 => "T0",
            Family::T5 => "T5",
            Family::BD => "BD",
            Family::Bminus => "Bminus",
            Family::Bplus => "Bplus",
            Family::Bmixed => "Bmixed",
            Family::J => "J",
            Family::Jbar => "Jbar",
            Family::JbarConj => "JbarConj",
            Family::McalAdS => "Mcal",
            Family::Pcal => "Pcal",
            Family::QcalAdS => "Qcal",
            Family::Scal => "Scal",
            Family::Tplus => "Tplus",
            Family::TplusConj => "TplusConj",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.symbol() == s)
    }

    /// Family of the hermitian conjugate, where the two carry distinct names.
    pub fn conjugate(self) -> Option<Family> {
        match self {
            Family::Jbar => Some(Family::JbarConj),
            Family::JbarConj => Some(Family::Jbar),
            Family::Tplus => Some(Family::TplusConj),
            Family::TplusConj => Some(Family::Tplus),
            _ => None,
        }
    }

    /// Families that belong to the Maxwell sector of a contracted algebra.
    pub fn is_maxwell_bosonic(self) -> bool {
        matches!(self, Family::P | Family::Mlorentz | Family::Z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(−1)^{|x||y|}` as ±1.
    pub fn sign(self, other: Parity) -> i128 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }

    pub fn combine(self, other: Parity) -> Parity {
        if self.is_odd() != other.is_odd() {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// Distinguishes copies of a generator produced by conjugation and realification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Plain,
    Conj,
    Re,
    Im,
}

impl Tag {
    fn suffix(self) -> &'static str {
        match self {
            Tag::Plain => "",
            Tag::Conj => "'",
            Tag::Re => ".re",
            Tag::Im => ".im",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub family: Family,
    pub indices: Vec<u8>,
    pub tag: Tag,
    pub parity: Parity,
    pub massdim: Option<Rational>,
}

impl Generator {
    pub fn new(family: Family, indices: &[u8]) -> Self {
        Generator {
            family,
            indices: indices.to_vec(),
            tag: Tag::Plain,
            parity: family.parity(),
            massdim: None,
        }
    }

    pub fn with_massdim(mut self, d: Rational) -> Self {
        self.massdim = Some(d);
        self
    }

    pub fn with_tag(mut self, tag: Tag) -> Self {
        self.tag = tag;
        self
    }

    pub fn is_odd(&self) -> bool {
        self.parity.is_odd()
    }

    /// Unique human-readable name, e.g. `P[0]`, `Q[1,3]`, `Jbar.re[2]`.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.symbol(), self.tag.suffix())?;
        if !self.indices.is_empty() {
            let idx: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
            write!(f, "[{}]", idx.join(","))?;
        }
        Ok(())
    }
}
