use std::collections::{BTreeMap, HashMap};

use super::{AlgebraError, Generator, LinComb, Parity};
use crate::scalars::{LaurentScalar, Rational};

/// Finite-dimensional Lie superalgebra with structure constants over
/// [`LaurentScalar`].
///
/// The full `n × n` bracket table is kept densely; graded antisymmetry
/// `[y,x] = −(−1)^{|x||y|}[x,y]` is enforced when the table is filled.
#[derive(Clone, Debug)]
pub struct SuperAlgebra {
    name: String,
    generators: Vec<Generator>,
    table: Vec<LinComb>,
    complex: bool,
    params: BTreeMap<String, String>,
    labels: HashMap<String, usize>,
}

impl PartialEq for SuperAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.table == other.table && self.complex == other.complex
    }
}

impl SuperAlgebra {
    /// Assembles an algebra from canonical entries `(i, j) ↦ [g_i, g_j]`.
    /// Entries with `i > j` are rejected as inconsistent if they disagree with
    /// the antisymmetric partner.
    pub fn from_entries(
        name: impl Into<String>,
        generators: Vec<Generator>,
        entries: impl IntoIterator<Item = ((usize, usize), LinComb)>,
        complex: bool,
    ) -> Result<Self, AlgebraError> {
        let mut b = AlgebraBuilder::new(name);
        b.complex(complex);
        for g in generators {
            b.add_generator(g);
        }
        for ((i, j), lc) in entries {
            b.set(i, j, lc);
        }
        b.finish()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Generator {
        &self.generators[i]
    }

    pub fn label(&self, i: usize) -> String {
        self.generators[i].label()
    }

    pub fn is_complex(&self) -> bool {
        self.complex
    }

    pub fn params(&self) -> &BTreeMap<String, String> {
        &self.params
    }

    pub fn set_param(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.params.insert(key.into(), value.into());
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.get(label).copied()
    }

    /// Index of a generator given by label, as an error-carrying lookup.
    pub fn lookup(&self, label: &str) -> Result<usize, AlgebraError> {
        self.index_of(label)
            .ok_or_else(|| AlgebraError::UnknownGenerator(label.to_string()))
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.generators[i].parity
    }

    pub fn massdim(&self, i: usize) -> Option<Rational> {
        self.generators[i].massdim
    }

    pub fn set_massdims(&mut self, dims: &[Option<Rational>]) {
        for (g, d) in self.generators.iter_mut().zip(dims) {
            g.massdim = *d;
        }
    }

    /// `[g_i, g_j]` for basis generators.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &LinComb {
        &self.table[i * self.dim() + j]
    }

    /// `[g_i, y]`.
    pub fn bracket_left(&self, i: usize, y: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (j, c) in y.iter() {
            out.add_scaled(self.bracket_basis(i, *j), c);
        }
        out
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &LinComb, y: &LinComb) -> Result<LinComb, AlgebraError> {
        for lc in [x, y] {
            if let Some(k) = lc.max_index() {
                if k >= self.dim() {
                    return Err(AlgebraError::UnknownGenerator(format!("#{k}")));
                }
            }
        }
        let mut out = LinComb::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                out.add_scaled(self.bracket_basis(*i, *j), &(a * b));
            }
        }
        Ok(out)
    }

    /// Nonzero canonical brackets `(i, j, [g_i, g_j])` with `i ≤ j`.
    pub fn brackets(&self) -> impl Iterator<Item = (usize, usize, &LinComb)> + '_ {
        let n = self.dim();
        (0..n)
            .flat_map(move |i| (i..n).map(move |j| (i, j, self.bracket_basis(i, j))))
            .filter(|(_, _, lc)| !lc.is_zero())
    }

    pub fn render(&self, lc: &LinComb) -> String {
        lc.render(|k| self.label(k))
    }

    /// Returns a copy with one structure constant replaced, keeping graded
    /// antisymmetry. Intended for mutation tests.
    pub fn with_bracket(&self, i: usize, j: usize, value: LinComb) -> Result<SuperAlgebra, AlgebraError> {
        let mut b = AlgebraBuilder::from_algebra(self);
        b.overwrite(i, j, value);
        b.finish()
    }

    /// Generators `k` whose brackets with everything vanish.
    pub fn is_central(&self, k: usize) -> bool {
        (0..self.dim()).all(|j| self.bracket_basis(k, j).is_zero())
    }

    /// True if generator `k` appears on the right-hand side of some bracket.
    pub fn appears_in_image(&self, k: usize) -> bool {
        self.brackets().any(|(_, _, lc)| !lc.coeff(k).is_zero())
    }
}

/// Incremental constructor used by the builders. `set` may be called with
/// both orderings of a pair; disagreement is reported by `finish`.
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    name: String,
    generators: Vec<Generator>,
    labels: HashMap<String, usize>,
    entries: BTreeMap<(usize, usize), LinComb>,
    complex: bool,
    params: BTreeMap<String, String>,
    conflicts: Vec<String>,
}

impl AlgebraBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        AlgebraBuilder {
            name: name.into(),
            generators: Vec::new(),
            labels: HashMap::new(),
            entries: BTreeMap::new(),
            complex: false,
            params: BTreeMap::new(),
            conflicts: Vec::new(),
        }
    }

    pub fn from_algebra(alg: &SuperAlgebra) -> Self {
        let mut b = AlgebraBuilder::new(alg.name.clone());
        b.complex = alg.complex;
        b.params = alg.params.clone();
        for g in &alg.generators {
            b.add_generator(g.clone());
        }
        for (i, j, lc) in alg.brackets() {
            b.entries.insert((i, j), lc.clone());
        }
        b
    }

    pub fn complex(&mut self, flag: bool) -> &mut Self {
        self.complex = flag;
        self
    }

    pub fn param(&mut self, key: impl Into<String>, value: impl Into<String>) -> &mut Self {
        self.params.insert(key.into(), value.into());
        self
    }

    pub fn add_generator(&mut self, g: Generator) -> usize {
        let k = self.generators.len();
        let label = g.label();
        if self.labels.insert(label.clone(), k).is_some() {
            self.conflicts.push(format!("duplicate generator {label}"));
        }
        self.generators.push(g);
        k
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.get(label).copied()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    fn canonical(&self, i: usize, j: usize, lc: LinComb) -> ((usize, usize), LinComb) {
        if i <= j {
            return ((i, j), lc);
        }
        let (pi, pj) = (self.generators[i].parity, self.generators[j].parity);
        // [x,y] = −(−1)^{|x||y|}[y,x]
        let s = -pi.sign(pj);
        ((j, i), lc.scale(&LaurentScalar::int(s)))
    }

    fn check_range(&mut self, i: usize, j: usize, lc: &LinComb) -> bool {
        let n = self.generators.len();
        if i >= n || j >= n || lc.max_index().is_some_and(|k| k >= n) {
            self.conflicts.push(format!("index out of range in [#{i}, #{j}]"));
            return false;
        }
        true
    }

    /// Records `[g_i, g_j] = lc`; a later contradicting `set` is a conflict.
    pub fn set(&mut self, i: usize, j: usize, lc: LinComb) {
        if !self.check_range(i, j, &lc) {
            return;
        }
        let (key, lc) = self.canonical(i, j, lc);
        match self.entries.get(&key) {
            Some(prev) if *prev != lc => {
                let msg = format!(
                    "[{}, {}]: {:?} vs {:?}",
                    self.generators[key.0].label(),
                    self.generators[key.1].label(),
                    prev,
                    lc
                );
                self.conflicts.push(msg);
            }
            Some(_) => {}
            None => {
                self.entries.insert(key, lc);
            }
        }
    }

    /// Adds `lc` to `[g_i, g_j]`.
    pub fn add(&mut self, i: usize, j: usize, lc: LinComb) {
        if !self.check_range(i, j, &lc) {
            return;
        }
        let (key, lc) = self.canonical(i, j, lc);
        self.entries
            .entry(key)
            .or_default()
            .add_scaled(&lc, &LaurentScalar::one());
    }

    /// Replaces `[g_i, g_j]` unconditionally.
    pub fn overwrite(&mut self, i: usize, j: usize, lc: LinComb) {
        if !self.check_range(i, j, &lc) {
            return;
        }
        let (key, lc) = self.canonical(i, j, lc);
        self.entries.insert(key, lc);
    }

    pub fn finish(self) -> Result<SuperAlgebra, AlgebraError> {
        let mut conflicts = self.conflicts;
        let n = self.generators.len();
        let mut table = vec![LinComb::zero(); n * n];
        for ((i, j), lc) in self.entries {
            if lc.is_zero() {
                continue;
            }
            let (pi, pj) = (self.generators[i].parity, self.generators[j].parity);
            if i == j && !pi.is_odd() {
                conflicts.push(format!(
                    "nonzero [{0}, {0}] for even generator",
                    self.generators[i].label()
                ));
                continue;
            }
            let want = pi.combine(pj);
            if let Some((k, _)) = lc.iter().find(|(k, _)| self.generators[*k].parity != want) {
                conflicts.push(format!(
                    "[{}, {}] contains {} of the wrong parity",
                    self.generators[i].label(),
                    self.generators[j].label(),
                    self.generators[*k].label()
                ));
                continue;
            }
            table[j * n + i] = lc.scale(&LaurentScalar::int(-pi.sign(pj)));
            table[i * n + j] = lc;
        }
        if !conflicts.is_empty() {
            return Err(AlgebraError::InconsistentBracket(conflicts));
        }
        Ok(SuperAlgebra {
            name: self.name,
            generators: self.generators,
            table,
            complex: self.complex,
            params: self.params,
            labels: self.labels,
        })
    }
}
