//! Finite permutations, words in the simple transpositions, and Rothe diagrams.
//!
//! Permutations use one-line notation and are 1-based. A permutation is kept
//! at its minimal size: trailing fixed points are dropped, so `1243` and `12435`
//! never compare unequal to `1243` padded with fixed points.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    oneline: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation.
    pub fn new(mut oneline: Vec<usize>) -> Result<Self> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{oneline:?} is not a bijection on 1..{n}"
                )));
            }
            seen[v] = true;
        }
        while oneline.last() == Some(&oneline.len()) {
            oneline.pop();
        }
        Ok(Permutation { oneline })
    }

    pub fn identity() -> Self {
        Permutation {
            oneline: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.is_empty()
    }

    /// Minimal `n` with the permutation in `S_n`.
    pub fn n(&self) -> usize {
        self.oneline.len()
    }

    pub fn oneline(&self) -> &[usize] {
        &self.oneline
    }

    /// Value at the 1-based position `i`; positions past `n` are fixed.
    pub fn value(&self, i: usize) -> usize {
        self.oneline.get(i - 1).copied().unwrap_or(i)
    }

    /// One-line notation padded with fixed points up to `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (1..=n.max(self.n())).map(|i| self.value(i)).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.oneline.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { oneline: inv }
    }

    /// Pairs of positions `(i, j)` with `i < j` and `ω_i > ω_j`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let w = &self.oneline;
        let mut out = Vec::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn length(&self) -> usize {
        self.inversions().len()
    }

    /// Right descents `{i | ω_i > ω_{i+1}}`.
    pub fn descents(&self) -> BTreeSet<usize> {
        (1..self.n())
            .filter(|&i| self.value(i) > self.value(i + 1))
            .collect()
    }

    /// Right multiplication by `s_i`: swaps the entries at positions `i` and `i + 1`.
    pub fn times_simple(&self, i: usize) -> Self {
        assert!(i >= 1, "simple transpositions are indexed from 1");
        let mut w = self.padded(i + 1);
        w.swap(i - 1, i);
        Permutation::new(w).expect("swapping two entries keeps a bijection")
    }

    pub fn rothe_diagram(&self) -> RotheDiagram {
        let cells = self
            .inversions()
            .into_iter()
            .map(|(i, j)| (i, self.value(j)))
            .collect();
        RotheDiagram { cells }
    }

    /// Cells `(i, ω_{i+1})` for each descent `i`.
    pub fn border_cells(&self) -> BTreeSet<(usize, usize)> {
        self.descents()
            .into_iter()
            .map(|i| (i, self.value(i + 1)))
            .collect()
    }

    /// One reduced word, found by repeatedly peeling the smallest descent.
    pub fn reduced_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(&i) = w.descents().iter().next() {
            letters.push(i);
            w = w.times_simple(i);
        }
        letters.reverse();
        Word(letters)
    }

    /// Every reduced word of the permutation, in lexicographic order.
    pub fn reduced_words(&self) -> Vec<Word> {
        let mut memo: HashMap<Permutation, Vec<Vec<usize>>> = HashMap::new();
        let mut words: Vec<Word> = reduced_words_memo(self, &mut memo)
            .into_iter()
            .map(Word)
            .collect();
        words.sort();
        words
    }

    /// All permutations of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut current: Vec<usize> = (1..=n).collect();
        let mut out = Vec::new();
        loop {
            out.push(Permutation::new(current.clone()).expect("valid by construction"));
            // next permutation in lexicographic order
            let Some(k) = (1..current.len())
                .rev()
                .find(|&k| current[k - 1] < current[k])
            else {
                break;
            };
            let l = (k..current.len())
                .rev()
                .find(|&l| current[l] > current[k - 1])
                .expect("a larger entry exists to the right");
            current.swap(k - 1, l);
            current[k..].reverse();
        }
        out
    }
}

fn reduced_words_memo(
    w: &Permutation,
    memo: &mut HashMap<Permutation, Vec<Vec<usize>>>,
) -> Vec<Vec<usize>> {
    if let Some(words) = memo.get(w) {
        return words.clone();
    }
    let words = if w.is_identity() {
        vec![Vec::new()]
    } else {
        let mut words = Vec::new();
        for i in w.descents() {
            for mut prefix in reduced_words_memo(&w.times_simple(i), memo) {
                prefix.push(i);
                words.push(prefix);
            }
        }
        words
    };
    memo.insert(w.clone(), words.clone());
    words
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.oneline
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        write_letters(f, &self.oneline)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = parse_letters(s)
            .ok_or_else(|| Error::InvalidPermutation(format!("cannot parse {s:?}")))?;
        Permutation::new(values)
    }
}

/// A word `α₁α₂…α_l`; the letter `a` stands for the simple transposition `s_a`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The product `s_{α₁}s_{α₂}…s_{α_l}`, each factor swapping two positions of
    /// the one-line word accumulated so far.
    pub fn apply(&self) -> Permutation {
        let n = self.0.iter().max().map_or(0, |&m| m + 1);
        let mut w: Vec<usize> = (1..=n).collect();
        for &a in &self.0 {
            w.swap(a - 1, a);
        }
        Permutation::new(w).expect("product of transpositions is a permutation")
    }

    pub fn is_reduced(&self) -> bool {
        self.apply().length() == self.len()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The word with its first letter dropped.
    pub fn tail(&self) -> Word {
        Word(self.0.iter().skip(1).copied().collect())
    }
}

impl TryFrom<Vec<usize>> for Word {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Word::new(v)
    }
}

impl From<Word> for Vec<usize> {
    fn from(w: Word) -> Self {
        w.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        write_letters(f, &self.0)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "()" {
            return Ok(Word::default());
        }
        let letters = parse_letters(s).ok_or(Error::ZeroLetter)?;
        Word::new(letters)
    }
}

/// Digits run together when every entry is a single digit, commas otherwise.
fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[usize]) -> fmt::Result {
    let sep = if letters.iter().all(|&a| a <= 9) {
        ""
    } else {
        ","
    };
    let mut first = true;
    for a in letters {
        if !first {
            f.write_str(sep)?;
        }
        write!(f, "{a}")?;
        first = false;
    }
    Ok(())
}

/// Accepts `54534562`, `5,4,5,10`, `5 4 5 10` and `[5,4,5,10]`.
pub(crate) fn parse_letters(s: &str) -> Option<Vec<usize>> {
    let s = s.trim();
    let s = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or(s)
        .trim();
    if s.is_empty() {
        return Some(Vec::new());
    }
    if s.chars().all(|c| c.is_ascii_digit()) {
        return Some(s.bytes().map(|b| (b - b'0') as usize).collect());
    }
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().ok())
        .collect()
}

/// A set of `(row, col)` cells in the `n × n` grid, row 1 at the top.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<(usize, usize)>", into = "Vec<(usize, usize)>")]
pub struct RotheDiagram {
    pub cells: BTreeSet<(usize, usize)>,
}

impl RotheDiagram {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: (usize, usize)) -> bool {
        self.cells.contains(&cell)
    }

    /// Cells of the diagram in the vertex's column at or below it, together with
    /// the cells in its row at or right of it.
    pub fn hook(&self, vertex: (usize, usize)) -> Result<BTreeSet<(usize, usize)>> {
        if !self.contains(vertex) {
            return Err(Error::NotInRotheDiagram(vertex.0, vertex.1));
        }
        let (i, j) = vertex;
        Ok(self
            .cells
            .iter()
            .copied()
            .filter(|&(r, s)| (s == j && r >= i) || (r == i && s >= j))
            .collect())
    }

    /// Number of cells in each column, indexed from column 1.
    pub fn column_counts(&self) -> Vec<usize> {
        let width = self.cells.iter().map(|&(_, c)| c).max().unwrap_or(0);
        let mut counts = vec![0; width];
        for &(_, c) in &self.cells {
            counts[c - 1] += 1;
        }
        counts
    }
}

impl From<Vec<(usize, usize)>> for RotheDiagram {
    fn from(cells: Vec<(usize, usize)>) -> Self {
        RotheDiagram {
            cells: cells.into_iter().collect(),
        }
    }
}

impl From<RotheDiagram> for Vec<(usize, usize)> {
    fn from(d: RotheDiagram) -> Self {
        d.cells.into_iter().collect()
    }
}

impl FromIterator<(usize, usize)> for RotheDiagram {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        RotheDiagram {
            cells: iter.into_iter().collect(),
        }
    }
}
