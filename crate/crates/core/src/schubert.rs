//! Schubert polynomials and truncated Stanley symmetric functions as sums of
//! reading monomials over column-strict semi-standard tower tableaux, plus the
//! compatible-pair and balanced-labeling formulas used as independent checks.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

use crate::balanced::RotheLabeling;
use crate::error::{Error, Result};
use crate::perm::{Permutation, Word};
use crate::rothify::flag_tableau;
use crate::tableau::TowerTableau;
use crate::tower::TowerDiagram;

/// `x₁^{a₁}x₂^{a₂}…`, stored sparsely with no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: BTreeMap<usize, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut m = Monomial::one();
        for (var, e) in exps {
            m.multiply_var(var, e);
        }
        m
    }

    /// Product of the given variables, with repetition.
    pub fn from_variables(vars: impl IntoIterator<Item = usize>) -> Self {
        Monomial::from_exponents(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn exponents(&self) -> &BTreeMap<usize, u32> {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps.get(&var).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    fn multiply_var(&mut self, var: usize, e: u32) {
        assert!(var >= 1, "variables are indexed from 1");
        if e > 0 {
            *self.exps.entry(var).or_insert(0) += e;
        }
    }

    /// The monomial with variables `a` and `b` exchanged.
    pub fn swap_variables(&self, a: usize, b: usize) -> Monomial {
        let swap = |v: usize| {
            if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            }
        };
        Monomial::from_exponents(self.exps.iter().map(|(&v, &e)| (swap(v), e)))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the exponent of `x₁`,
    /// then of `x₂`, and so on.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let top = self
                .exps
                .keys()
                .chain(other.exps.keys())
                .max()
                .copied()
                .unwrap_or(0);
            (1..=top)
                .map(|v| self.exponent(v).cmp(&other.exponent(v)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in &self.exps {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match e {
                1 => write!(f, "x{v}")?,
                _ => write!(f, "x{v}^{e}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial with positive integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, u64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::from_monomial(Monomial::one())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, 1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.terms.iter().rev().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the coefficients, i.e. the value at `x₁ = x₂ = … = 1`.
    pub fn coefficient_sum(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Panics if the coefficient overflows `u64`.
    pub fn add_term(&mut self, m: Monomial, coeff: u64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(m).or_insert(0);
        *slot = slot
            .checked_add(coeff)
            .expect("polynomial coefficient overflow");
    }

    /// Sets every variable outside `keep` to zero.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in self.terms() {
            if m.exps.keys().all(|&v| keep(v)) {
                p.add_term(m.clone(), c);
            }
        }
        p
    }

    pub fn swap_variables(&self, a: usize, b: usize) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in self.terms() {
            p.add_term(m.swap_variables(a, b), c);
        }
        p
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in rhs.terms() {
            self.add_term(m.clone(), c);
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl FromIterator<Monomial> for Polynomial {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for m in iter {
            p.add_term(m, 1);
        }
        p
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (c, m.exps.is_empty()) {
                (1, _) => write!(f, "{m}")?,
                (_, true) => write!(f, "{c}")?,
                _ => write!(f, "{c}*{m}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: u64,
    exps: BTreeMap<usize, u32>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms()
            .map(|(m, coeff)| TermRepr {
                coeff,
                exps: m.exps.clone(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        let mut p = Polynomial::zero();
        for t in terms {
            if t.exps.contains_key(&0) {
                return Err(serde::de::Error::custom("variables are indexed from 1"));
            }
            p.add_term(Monomial::from_exponents(t.exps), t.coeff);
        }
        Ok(p)
    }
}

/// `x^T`: the exponent of `x_v` counts the cells labelled `v`.
pub fn reading_monomial(tableau: &TowerTableau) -> Monomial {
    Monomial::from_variables(tableau.cells().map(|(_, v)| v))
}

/// Cellwise comparison of two labelings of the same shape.
pub fn tableau_leq(lower: &TowerTableau, upper: &TowerTableau) -> Result<bool> {
    if lower.shape() != upper.shape() {
        return Err(Error::ShapeMismatch("tableaux of different shapes".into()));
    }
    Ok(lower
        .cells()
        .zip(upper.cells())
        .all(|((_, a), (_, b))| a <= b))
}

/// Per-cell cap on labels during enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LabelBound {
    /// Every label at most `m`.
    Uniform(usize),
    /// Each label at most the label of the same cell in the given tableau.
    Cellwise(TowerTableau),
}

impl LabelBound {
    fn column_caps(&self, shape: &TowerDiagram, col: usize) -> Vec<usize> {
        match self {
            LabelBound::Uniform(m) => vec![*m; shape.height(col)],
            LabelBound::Cellwise(t) => t.columns().get(col - 1).cloned().unwrap_or_default(),
        }
    }
}

/// Calls `visit` on every column-strict semi-standard tableau of `shape`
/// respecting `bound`.
///
/// Semi-standard tableaux are weakly increasing up each column, since every
/// peeling step removes a top cell carrying the current maximum. With distinct
/// labels per column, columns are therefore generated as strictly increasing
/// sequences and only the semi-standard test remains for complete candidates.
pub fn for_each_sstt(
    shape: &TowerDiagram,
    bound: &LabelBound,
    mut visit: impl FnMut(&TowerTableau),
) {
    if let LabelBound::Cellwise(t) = bound {
        assert_eq!(
            &t.shape(),
            shape,
            "cellwise bound must have the enumerated shape"
        );
    }
    let options: Vec<Vec<Vec<usize>>> = (1..=shape.width())
        .map(|col| increasing_columns(&bound.column_caps(shape, col)))
        .collect();
    let mut chosen: Vec<usize> = vec![0; options.len()];
    if options.iter().any(Vec::is_empty) {
        return;
    }
    loop {
        let columns = chosen
            .iter()
            .zip(&options)
            .map(|(&k, o)| o[k].clone())
            .collect();
        let candidate = TowerTableau::new(columns).expect("labels are positive");
        if candidate.is_semistandard() {
            visit(&candidate);
        }
        // odometer over the per-column choices
        let mut pos = 0;
        loop {
            if pos == chosen.len() {
                return;
            }
            chosen[pos] += 1;
            if chosen[pos] < options[pos].len() {
                break;
            }
            chosen[pos] = 0;
            pos += 1;
        }
    }
}

/// Strictly increasing sequences `v₀ < v₁ < …` with `1 ≤ v_k ≤ caps[k]`.
fn increasing_columns(caps: &[usize]) -> Vec<Vec<usize>> {
    fn extend(caps: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let k = prefix.len();
        if k == caps.len() {
            out.push(prefix.clone());
            return;
        }
        let low = prefix.last().map_or(1, |&v| v + 1);
        for v in low..=caps[k] {
            prefix.push(v);
            extend(caps, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(caps, &mut Vec::with_capacity(caps.len()), &mut out);
    out
}

pub fn enumerate_sstt(shape: &TowerDiagram, bound: &LabelBound) -> Vec<TowerTableau> {
    let mut out = Vec::new();
    for_each_sstt(shape, bound, |t| out.push(t.clone()));
    out
}

fn sum_of_reading_monomials(shape: &TowerDiagram, bound: &LabelBound) -> Polynomial {
    let mut p = Polynomial::zero();
    for_each_sstt(shape, bound, |t| p.add_term(reading_monomial(t), 1));
    p
}

/// The Schubert polynomial, summed over flagged tableaux of the tower diagram.
pub fn schubert(w: &Permutation) -> Polynomial {
    let shape = TowerDiagram::of_permutation(w);
    let flag = flag_tableau(&shape);
    sum_of_reading_monomials(&shape, &LabelBound::Cellwise(flag))
}

/// The Stanley symmetric function with `x_{m+1} = x_{m+2} = … = 0`.
pub fn stanley_truncated(w: &Permutation, m: usize) -> Polynomial {
    let shape = TowerDiagram::of_permutation(w);
    sum_of_reading_monomials(&shape, &LabelBound::Uniform(m))
}

/// A reduced word with a weakly increasing index sequence bounded by it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatiblePair {
    pub word: Word,
    pub indices: Vec<usize>,
}

impl CompatiblePair {
    pub fn is_compatible(&self) -> bool {
        let a = self.word.letters();
        let i = &self.indices;
        a.len() == i.len()
            && self.word.is_reduced()
            && i.iter().all(|&x| x >= 1)
            && (0..a.len()).all(|r| i[r] <= a[r])
            && (1..a.len()).all(|r| i[r - 1] <= i[r] && (a[r - 1] >= a[r] || i[r - 1] < i[r]))
    }
}

/// Every compatible pair whose word is a reduced word of `w`.
pub fn compatible_pairs(w: &Permutation) -> Vec<CompatiblePair> {
    fn extend(a: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let r = prefix.len();
        if r == a.len() {
            out.push(prefix.clone());
            return;
        }
        let low = match prefix.last() {
            None => 1,
            Some(&prev) if a[r - 1] < a[r] => prev + 1,
            Some(&prev) => prev,
        };
        for v in low..=a[r] {
            prefix.push(v);
            extend(a, prefix, out);
            prefix.pop();
        }
    }
    let mut pairs = Vec::new();
    for word in w.reduced_words() {
        let mut sequences = Vec::new();
        extend(word.letters(), &mut Vec::new(), &mut sequences);
        pairs.extend(sequences.into_iter().map(|indices| CompatiblePair {
            word: word.clone(),
            indices,
        }));
    }
    pairs
}

/// `Σ x_{i₁}…x_{i_k}` over compatible pairs.
pub fn schubert_by_compatible_pairs(w: &Permutation) -> Polynomial {
    compatible_pairs(w)
        .into_iter()
        .map(|p| Monomial::from_variables(p.indices))
        .collect()
}

/// `Σ x^L` over column-strict balanced labelings of the Rothe diagram with
/// labels at most `m`, by trying every assignment.
pub fn stanley_by_balanced_labelings(w: &Permutation, m: usize) -> Polynomial {
    let cells: Vec<(usize, usize)> = w.rothe_diagram().cells.into_iter().collect();
    let mut labels = vec![1; cells.len()];
    let mut p = Polynomial::zero();
    if m == 0 && !cells.is_empty() {
        return p;
    }
    loop {
        let l: RotheLabeling = cells.iter().copied().zip(labels.iter().copied()).collect();
        if l.is_column_strict() && l.is_balanced() {
            p.add_term(Monomial::from_variables(labels.iter().copied()), 1);
        }
        let mut pos = 0;
        loop {
            if pos == labels.len() {
                return p;
            }
            labels[pos] += 1;
            if labels[pos] <= m {
                break;
            }
            labels[pos] = 1;
            pos += 1;
        }
    }
}
