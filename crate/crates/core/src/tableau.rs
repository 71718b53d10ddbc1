//! Labelled tower diagrams.
//!
//! A tableau is stored column by column, each column listing its labels from
//! the bottom cell upwards. Standard tableaux record a sliding order and are in
//! bijection with reduced words; semi-standard tableaux allow repeated labels
//! and are peeled from the top by removing a maximal-label corner of minimal
//! flight number at each step.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Permutation, Word};
use crate::tower::{Cell, SlideResult, TowerDiagram};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct TowerTableau {
    columns: Vec<Vec<usize>>,
}

/// Sliding stopped at the 1-based `position` of the word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Terminated {
    pub position: usize,
}

impl fmt::Display for Terminated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sliding terminated at letter {}", self.position)
    }
}

impl std::error::Error for Terminated {}

impl TowerTableau {
    /// Builds a tableau from its columns, each listed bottom to top.
    pub fn new(mut columns: Vec<Vec<usize>>) -> Result<Self> {
        if columns.iter().flatten().any(|&v| v == 0) {
            return Err(Error::ZeroLabel);
        }
        while columns.last().is_some_and(Vec::is_empty) {
            columns.pop();
        }
        Ok(TowerTableau { columns })
    }

    pub fn empty() -> Self {
        TowerTableau::default()
    }

    /// Builds a tableau of the given shape from a total cell labelling.
    pub fn from_labels(shape: &TowerDiagram, labels: &BTreeMap<Cell, usize>) -> Result<Self> {
        if labels.len() != shape.len() || labels.keys().any(|&c| !shape.contains(c)) {
            return Err(Error::ShapeMismatch(
                "labels must cover exactly the cells of the shape".into(),
            ));
        }
        let columns = shape
            .heights()
            .iter()
            .enumerate()
            .map(|(i, &h)| (0..h).map(|j| labels[&Cell::new(i + 1, j)]).collect())
            .collect();
        TowerTableau::new(columns)
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn shape(&self) -> TowerDiagram {
        TowerDiagram::new(self.columns.iter().map(Vec::len).collect())
    }

    pub fn len(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn label(&self, cell: Cell) -> Option<usize> {
        self.columns
            .get(cell.col.checked_sub(1)?)?
            .get(cell.ht)
            .copied()
    }

    /// `(cell, label)` pairs column by column, bottom to top.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.columns.iter().enumerate().flat_map(|(i, col)| {
            col.iter()
                .enumerate()
                .map(move |(j, &v)| (Cell::new(i + 1, j), v))
        })
    }

    pub fn max_label(&self) -> Option<usize> {
        self.columns.iter().flatten().copied().max()
    }

    /// Cell carrying `label`, the first one in column order if repeated.
    pub fn find(&self, label: usize) -> Option<Cell> {
        self.cells().find(|&(_, v)| v == label).map(|(c, _)| c)
    }

    pub(crate) fn without_top(&self, col: usize) -> TowerTableau {
        let mut columns = self.columns.clone();
        columns[col - 1].pop();
        TowerTableau::new(columns).expect("labels stay positive")
    }

    fn with_top(&mut self, cell: Cell, label: usize) {
        if self.columns.len() < cell.col {
            self.columns.resize(cell.col, Vec::new());
        }
        debug_assert_eq!(self.columns[cell.col - 1].len(), cell.ht);
        self.columns[cell.col - 1].push(label);
    }

    pub fn map_labels(&self, f: impl Fn(usize) -> usize) -> Result<TowerTableau> {
        TowerTableau::new(
            self.columns
                .iter()
                .map(|col| col.iter().map(|&v| f(v)).collect())
                .collect(),
        )
    }

    /// Slides the letters of `word` into the empty diagram, labelling the k-th
    /// placed cell with k.
    pub fn slide_word(word: &Word) -> std::result::Result<TowerTableau, Terminated> {
        let mut tableau = TowerTableau::empty();
        let mut shape = TowerDiagram::empty();
        for (k, &a) in word.letters().iter().enumerate() {
            match shape.slide(a) {
                SlideResult::Placed(cell) => {
                    tableau.with_top(cell, k + 1);
                    shape = shape.with_cell(cell);
                }
                SlideResult::Terminated => return Err(Terminated { position: k + 1 }),
            }
        }
        Ok(tableau)
    }

    /// Labelling with 1 at the rightmost bottom cell, continuing bottom to top
    /// and then right to left.
    pub fn natural(shape: &TowerDiagram) -> TowerTableau {
        let mut next = 1;
        let mut columns = vec![Vec::new(); shape.width()];
        for (i, &h) in shape.heights().iter().enumerate().rev() {
            columns[i] = (next..next + h).collect();
            next += h;
        }
        TowerTableau { columns }
    }

    /// Flight numbers of the cells labelled `n, n-1, …, 1` in the successive
    /// initial segments, or `None` if some cell is not a corner there.
    fn flights_from_top(&self) -> Option<Vec<usize>> {
        let n = self.len();
        let mut positions = vec![None; n + 1];
        for (cell, v) in self.cells() {
            if v > n || positions[v].is_some() {
                return None;
            }
            positions[v] = Some(cell);
        }
        let mut shape = self.shape();
        let mut flights = Vec::with_capacity(n);
        for k in (1..=n).rev() {
            let cell = positions[k]?;
            let f = shape.corner_flight(cell)?;
            flights.push(f);
            shape = shape.without_top(cell.col);
        }
        Some(flights)
    }

    pub fn is_standard(&self) -> bool {
        self.flights_from_top().is_some()
    }

    /// The word whose sliding records this tableau.
    pub fn reading_word(&self) -> Result<Word> {
        let mut flights = self.flights_from_top().ok_or(Error::NotStandard)?;
        flights.reverse();
        Word::new(flights)
    }

    /// Cells in the order the semi-standard peeling removes them, or `None`
    /// if at some step no corner carries the current maximal label.
    fn peeling_order(&self) -> Option<Vec<Cell>> {
        let mut current = self.clone();
        let mut shape = self.shape();
        let mut order = Vec::with_capacity(self.len());
        while let Some(max) = current.max_label() {
            let candidates: Vec<(usize, Cell)> = shape
                .corners()
                .into_iter()
                .filter(|&(c, _)| current.label(c) == Some(max))
                .map(|(c, f)| (f, c))
                .collect();
            let &(f, cell) = candidates.iter().min()?;
            assert!(
                candidates.iter().filter(|&&(g, _)| g == f).count() == 1,
                "two corners share flight number {f}"
            );
            order.push(cell);
            current = current.without_top(cell.col);
            shape = shape.without_top(cell.col);
        }
        Some(order)
    }

    pub fn is_semistandard(&self) -> bool {
        self.peeling_order().is_some()
    }

    /// The standard tableau giving label `l, l-1, …` to the cells in peeling order.
    pub fn standardize(&self) -> Result<TowerTableau> {
        let order = self.peeling_order().ok_or(Error::NotSemistandard)?;
        let l = order.len();
        let labels: BTreeMap<Cell, usize> = order
            .into_iter()
            .enumerate()
            .map(|(k, c)| (c, l - k))
            .collect();
        TowerTableau::from_labels(&self.shape(), &labels)
    }

    /// Drops the initial letter of the reading word directly on the tableau:
    /// the cell labelled 1 leaves its tower, that tower trades places with its
    /// right neighbour, and every label drops by one.
    pub fn remove_initial(&self) -> Result<TowerTableau> {
        if !self.is_standard() {
            return Err(if self.is_empty() {
                Error::EmptyTableau
            } else {
                Error::NotStandard
            });
        }
        if self.is_empty() {
            return Err(Error::EmptyTableau);
        }
        let first = self.find(1).expect("standard tableaux contain label 1");
        let i = first.col - 1;
        let mut columns = self.columns.clone();
        if columns.len() < i + 2 {
            columns.resize(i + 2, Vec::new());
        }
        columns[i].remove(first.ht);
        columns.swap(i, i + 1);
        let result = TowerTableau::new(columns)?.map_labels(|v| v - 1)?;
        debug_assert_eq!(
            Some(&result),
            self.reading_word()
                .ok()
                .and_then(|w| TowerTableau::slide_word(&w.tail()).ok())
                .as_ref()
        );
        Ok(result)
    }
}

impl TowerDiagram {
    /// The shape every reduced word of `w` slides to.
    pub fn of_permutation(w: &Permutation) -> TowerDiagram {
        TowerTableau::slide_word(&w.reduced_word())
            .expect("reduced words always slide")
            .shape()
    }
}

#[derive(Serialize, Deserialize)]
struct LabelRepr {
    col: usize,
    ht: usize,
    label: usize,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    heights: Vec<usize>,
    labels: Vec<LabelRepr>,
}

impl TryFrom<TableauRepr> for TowerTableau {
    type Error = Error;

    fn try_from(repr: TableauRepr) -> Result<Self> {
        let shape = TowerDiagram::new(repr.heights);
        let mut labels = BTreeMap::new();
        for l in repr.labels {
            if labels.insert(Cell::new(l.col, l.ht), l.label).is_some() {
                return Err(Error::ShapeMismatch(format!(
                    "cell ({},{}) labelled twice",
                    l.col, l.ht
                )));
            }
        }
        TowerTableau::from_labels(&shape, &labels)
    }
}

impl From<TowerTableau> for TableauRepr {
    fn from(t: TowerTableau) -> Self {
        TableauRepr {
            heights: t.shape().heights().to_vec(),
            labels: t
                .cells()
                .map(|(c, label)| LabelRepr {
                    col: c.col,
                    ht: c.ht,
                    label,
                })
                .collect(),
        }
    }
}
