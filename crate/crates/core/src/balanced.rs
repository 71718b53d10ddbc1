//! Labelings of Rothe diagrams: balanced, column-strict and injective
//! labelings, the canonical labeling of a reduced word, and the word it
//! encodes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{RotheDiagram, Word};

/// Labels on the `(row, col)` cells of a Rothe diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<RotheLabelRepr>", into = "Vec<RotheLabelRepr>")]
pub struct RotheLabeling {
    labels: BTreeMap<(usize, usize), usize>,
}

impl RotheLabeling {
    pub fn new(labels: BTreeMap<(usize, usize), usize>) -> Result<Self> {
        if labels.values().any(|&v| v == 0) {
            return Err(Error::ZeroLabel);
        }
        if labels.keys().any(|&(r, c)| r == 0 || c == 0) {
            return Err(Error::ShapeMismatch("Rothe cells are 1-based".into()));
        }
        Ok(RotheLabeling { labels })
    }

    pub fn labels(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.labels
    }

    pub fn label(&self, cell: (usize, usize)) -> Option<usize> {
        self.labels.get(&cell).copied()
    }

    pub fn diagram(&self) -> RotheDiagram {
        self.labels.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The hook of `vertex` laid out as a path: column cells from the bottom
    /// up to the vertex, then the row cells left to right. Also returns the
    /// index of the vertex on the path.
    fn hook_path(&self, vertex: (usize, usize)) -> (Vec<usize>, usize) {
        let (i, j) = vertex;
        let mut path: Vec<usize> = self
            .labels
            .range((i + 1, 0)..)
            .filter(|&(&(_, c), _)| c == j)
            .map(|(_, &v)| v)
            .collect();
        path.reverse();
        let at = path.len();
        path.extend(self.labels.range((i, j)..(i + 1, 0)).map(|(_, &v)| v));
        (path, at)
    }

    /// First vertex, in row-major order, whose label moves when its hook is
    /// sorted weakly decreasing along the path.
    pub fn first_unbalanced_hook(&self) -> Option<(usize, usize)> {
        self.labels.keys().copied().find(|&vertex| {
            let (mut path, at) = self.hook_path(vertex);
            let own = path[at];
            path.sort_unstable_by(|a, b| b.cmp(a));
            path[at] != own
        })
    }

    pub fn is_balanced(&self) -> bool {
        self.first_unbalanced_hook().is_none()
    }

    pub fn is_column_strict(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.labels.iter().all(|(&(_, c), &v)| seen.insert((c, v)))
    }

    /// Each of `1..=l` appears exactly once, `l` the number of cells.
    pub fn is_injective(&self) -> bool {
        let l = self.len();
        let mut seen = vec![false; l + 1];
        self.labels.values().all(|&v| {
            let fresh = v <= l && !seen[v];
            if fresh {
                seen[v] = true;
            }
            fresh
        })
    }

    /// Labels the cell of the inversion created by the `r`-th letter with `r`.
    pub fn canonical(word: &Word) -> Result<RotheLabeling> {
        if !word.is_reduced() {
            return Err(Error::NotReduced);
        }
        let n = word.letters().iter().max().map_or(0, |&m| m + 1);
        let mut partial: Vec<usize> = (1..=n).collect();
        let mut swaps = Vec::with_capacity(word.len());
        for &a in word.letters() {
            let (small, big) = (partial[a - 1], partial[a]);
            debug_assert!(small < big, "a reduced word only creates inversions");
            swaps.push((small, big));
            partial.swap(a - 1, a);
        }
        let mut position = vec![0; n + 1];
        for (i, &v) in partial.iter().enumerate() {
            position[v] = i + 1;
        }
        let labels = swaps
            .into_iter()
            .enumerate()
            .map(|(r, (small, big))| ((position[big], small), r + 1))
            .collect();
        RotheLabeling::new(labels)
    }

    /// Reads a reduced word off an injective labeling: the letter for label
    /// `i` is its row plus the number of larger labels in its row, minus the
    /// number of larger labels above it in its column.
    pub fn recover_word(&self) -> Result<Word> {
        if !self.is_injective() {
            return Err(Error::NotInjective);
        }
        if let Some((row, col)) = self.first_unbalanced_hook() {
            return Err(Error::NotBalanced(row, col));
        }
        let mut by_label = vec![(0, 0); self.len() + 1];
        for (&cell, &v) in &self.labels {
            by_label[v] = cell;
        }
        let letters = (1..=self.len())
            .map(|i| {
                let (row, col) = by_label[i];
                let right = self
                    .labels
                    .iter()
                    .filter(|&(&(r, _), &v)| r == row && v > i)
                    .count();
                let above = self
                    .labels
                    .iter()
                    .filter(|&(&(r, c), &v)| c == col && r < row && v > i)
                    .count();
                row + right - above
            })
            .collect();
        Word::new(letters)
    }
}

#[derive(Serialize, Deserialize)]
struct RotheLabelRepr {
    row: usize,
    col: usize,
    label: usize,
}

impl TryFrom<Vec<RotheLabelRepr>> for RotheLabeling {
    type Error = Error;

    fn try_from(v: Vec<RotheLabelRepr>) -> Result<Self> {
        let mut labels = BTreeMap::new();
        for l in v {
            if labels.insert((l.row, l.col), l.label).is_some() {
                return Err(Error::ShapeMismatch(format!(
                    "cell ({},{}) labelled twice",
                    l.row, l.col
                )));
            }
        }
        RotheLabeling::new(labels)
    }
}

impl From<RotheLabeling> for Vec<RotheLabelRepr> {
    fn from(l: RotheLabeling) -> Self {
        l.labels
            .into_iter()
            .map(|((row, col), label)| RotheLabelRepr { row, col, label })
            .collect()
    }
}

impl FromIterator<((usize, usize), usize)> for RotheLabeling {
    /// Panics on a zero label or a zero coordinate.
    fn from_iter<I: IntoIterator<Item = ((usize, usize), usize)>>(iter: I) -> Self {
        RotheLabeling::new(iter.into_iter().collect()).expect("valid Rothe labeling")
    }
}
