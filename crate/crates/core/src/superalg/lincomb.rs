use std::fmt;

use crate::scalars::{GaussianRational, LaurentScalar};

/// Sparse linear combination `Σ c_k g_k` of basis generators, sorted by index
/// with no zero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LinComb {
    terms: Vec<(usize, LaurentScalar)>,
}

impl LinComb {
    pub fn zero() -> Self {
        LinComb { terms: Vec::new() }
    }

    pub fn basis(k: usize) -> Self {
        LinComb {
            terms: vec![(k, LaurentScalar::one())],
        }
    }

    pub fn term(k: usize, c: LaurentScalar) -> Self {
        let mut lc = LinComb::zero();
        lc.add_term(k, c);
        lc
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, LaurentScalar)>>(it: I) -> Self {
        let mut lc = LinComb::zero();
        for (k, c) in it {
            lc.add_term(k, c);
        }
        lc
    }

    pub fn terms(&self) -> &[(usize, LaurentScalar)] {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, LaurentScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: usize) -> LaurentScalar {
        match self.terms.binary_search_by_key(&k, |(i, _)| *i) {
            Ok(p) => self.terms[p].1.clone(),
            Err(_) => LaurentScalar::zero(),
        }
    }

    pub fn max_index(&self) -> Option<usize> {
        self.terms.last().map(|(k, _)| *k)
    }

    pub fn add_term(&mut self, k: usize, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by_key(&k, |(i, _)| *i) {
            Ok(p) => {
                let s = &self.terms[p].1 + &c;
                if s.is_zero() {
                    self.terms.remove(p);
                } else {
                    self.terms[p].1 = s;
                }
            }
            Err(p) => self.terms.insert(p, (k, c)),
        }
    }

    /// `self += c · other`, merging in one pass.
    pub fn add_scaled(&mut self, other: &LinComb, c: &LaurentScalar) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ka, _)), Some((kb, _))) if ka < kb => out.push(a.next().unwrap().clone()),
                (Some((ka, _)), Some((kb, _))) if ka > kb => {
                    let (k, v) = b.next().unwrap();
                    out.push((*k, v * c));
                }
                (Some(_), Some(_)) => {
                    let (k, va) = a.next().unwrap();
                    let (_, vb) = b.next().unwrap();
                    let s = va + &(vb * c);
                    if !s.is_zero() {
                        out.push((*k, s));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (k, v) = b.next().unwrap();
                    out.push((*k, v * c));
                }
                (None, None) => break,
            }
        }
        self.terms = out;
    }

    pub fn add(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentScalar::one());
        out
    }

    pub fn sub(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentScalar::int(-1));
        out
    }

    pub fn scale(&self, c: &LaurentScalar) -> LinComb {
        if c.is_zero() {
            return LinComb::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v * c))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn scale_const(&self, c: GaussianRational) -> LinComb {
        self.scale(&LaurentScalar::constant(c))
    }

    pub fn neg(&self) -> LinComb {
        self.scale(&LaurentScalar::int(-1))
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs<F: FnMut(&LaurentScalar) -> LaurentScalar>(&self, mut f: F) -> LinComb {
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, f(v)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    /// Relabels generator indices; the map need not preserve order.
    pub fn reindex<F: Fn(usize) -> usize>(&self, f: F) -> LinComb {
        LinComb::from_terms(self.terms.iter().map(|(k, v)| (f(*k), v.clone())))
    }

    /// Renders with generator names supplied by `name`.
    pub fn render<F: Fn(usize) -> String>(&self, name: F) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(k, c)| {
                if c.is_one() {
                    name(*k)
                } else if c.is_monomial() {
                    format!("{c}*{}", name(*k))
                } else {
                    format!("({c})*{}", name(*k))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(|k| format!("g{k}")))
    }
}
