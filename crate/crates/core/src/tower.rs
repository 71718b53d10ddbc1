//! Tower diagrams together with the sliding and flight algorithms.
//!
//! A cell is named by its south-east corner `(col, ht)`: `col ≥ 1` is the
//! tower it sits in and `ht ≥ 0` its height inside that tower. The main
//! diagonal of the cell lies on the line `x + y = col + ht`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub col: usize,
    pub ht: usize,
}

impl Cell {
    pub const fn new(col: usize, ht: usize) -> Self {
        Cell { col, ht }
    }

    /// The `d` with the main diagonal on `x + y = d`.
    pub const fn diagonal(self) -> usize {
        self.col + self.ht
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.ht)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlideResult {
    Placed(Cell),
    Terminated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlightResult {
    /// Cells of the path from the leftmost one to the queried cell.
    Path {
        cells: Vec<Cell>,
        flight_number: usize,
    },
    NoFlight,
}

impl FlightResult {
    pub fn flight_number(&self) -> Option<usize> {
        match self {
            FlightResult::Path { flight_number, .. } => Some(*flight_number),
            FlightResult::NoFlight => None,
        }
    }
}

/// Heights of the towers `𝒯₁, 𝒯₂, …`; trailing empty towers are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct TowerDiagram {
    heights: Vec<usize>,
}

impl TowerDiagram {
    pub fn new(mut heights: Vec<usize>) -> Self {
        while heights.last() == Some(&0) {
            heights.pop();
        }
        TowerDiagram { heights }
    }

    pub fn empty() -> Self {
        TowerDiagram::default()
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// Number of towers up to the last non-empty one.
    pub fn width(&self) -> usize {
        self.heights.len()
    }

    /// Height of tower `col`; zero outside the stored range.
    pub fn height(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.heights.get(col - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.heights.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.ht < self.height(cell.col)
    }

    /// Cells column by column, bottom to top.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.heights
            .iter()
            .enumerate()
            .flat_map(|(i, &h)| (0..h).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn top_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.heights
            .iter()
            .enumerate()
            .filter(|(_, &h)| h > 0)
            .map(|(i, &h)| Cell::new(i + 1, h - 1))
    }

    /// Whether tower `col` has a cell on the diagonal `x + y = d`.
    fn meets_diagonal(&self, col: usize, d: usize) -> bool {
        col <= d && self.height(col) > d - col
    }

    pub fn with_cell(&self, cell: Cell) -> TowerDiagram {
        debug_assert_eq!(
            self.height(cell.col),
            cell.ht,
            "cell must sit on top of its tower"
        );
        let mut heights = self.heights.clone();
        if heights.len() < cell.col {
            heights.resize(cell.col, 0);
        }
        heights[cell.col - 1] += 1;
        TowerDiagram::new(heights)
    }

    pub(crate) fn without_top(&self, col: usize) -> TowerDiagram {
        let mut heights = self.heights.clone();
        heights[col - 1] -= 1;
        TowerDiagram::new(heights)
    }

    /// Slides the letter `alpha` into the diagram.
    ///
    /// The scan keeps a left boundary `start`: zigzag moves discard every tower
    /// up to the one just climbed over and continue with `alpha + 1`.
    pub fn slide(&self, alpha: usize) -> SlideResult {
        assert!(alpha >= 1, "letters are positive");
        let mut a = alpha;
        let mut start = 1;
        loop {
            // leftmost tower at or after `start` with a cell on x + y = a - 1
            let hit = (start..a).find(|&i| self.meets_diagonal(i, a - 1));
            let (col, base) = match hit {
                Some(i) => (i, a - i),
                None => (a, 0),
            };
            let h = self.height(col);
            if h == base {
                return SlideResult::Placed(Cell::new(col, base));
            }
            if h == base + 1 {
                return SlideResult::Terminated;
            }
            start = col + 1;
            a += 1;
        }
    }

    /// Flight path of `cell`, moving north-west along its main diagonal.
    pub fn flight(&self, cell: Cell) -> Result<FlightResult> {
        if !self.contains(cell) {
            return Err(Error::NotInDiagram(cell));
        }
        let mut path = vec![cell];
        let mut current = cell;
        'descend: loop {
            let d = current.diagonal();
            for k in (1..current.col).rev() {
                let h = self.height(k);
                // k < current.col <= d, so d - k >= 1
                if h > d - k {
                    let through = Cell::new(k, d - k);
                    let below = Cell::new(k, d - k - 1);
                    path.push(through);
                    path.push(below);
                    current = below;
                    continue 'descend;
                }
                if h == d - k {
                    return Ok(FlightResult::NoFlight);
                }
            }
            break;
        }
        path.reverse();
        Ok(FlightResult::Path {
            cells: path,
            flight_number: current.diagonal(),
        })
    }

    /// Top cells with a flight path, paired with their flight numbers.
    pub fn corners(&self) -> Vec<(Cell, usize)> {
        self.top_cells()
            .filter_map(|c| {
                let f = self.flight(c).ok()?.flight_number()?;
                Some((c, f))
            })
            .collect()
    }

    /// Flight number of `cell` if it is a corner.
    pub fn corner_flight(&self, cell: Cell) -> Option<usize> {
        if cell.ht + 1 != self.height(cell.col) {
            return None;
        }
        self.flight(cell).ok()?.flight_number()
    }

    pub fn remove_corner(&self, cell: Cell) -> Result<TowerDiagram> {
        if !self.contains(cell) {
            return Err(Error::NotInDiagram(cell));
        }
        if self.corner_flight(cell).is_none() {
            return Err(Error::NotACorner(cell));
        }
        Ok(self.without_top(cell.col))
    }

    /// The nearest cell strictly to the right on the next diagonal, provided no
    /// tower in between has a cell on the diagonal of `cell`.
    pub fn right_neighbour(&self, cell: Cell) -> Option<Cell> {
        let d = cell.diagonal();
        for k in cell.col + 1..=self.width().min(d + 1) {
            if self.meets_diagonal(k, d + 1) {
                return Some(Cell::new(k, d + 1 - k));
            }
            if self.meets_diagonal(k, d) {
                return None;
            }
        }
        None
    }

    /// `East(c, 𝒯)`: the cell followed by its chain of right neighbours.
    pub fn east(&self, cell: Cell) -> Vec<Cell> {
        let mut chain = vec![cell];
        let mut current = cell;
        while let Some(next) = self.right_neighbour(current) {
            chain.push(next);
            current = next;
        }
        chain
    }

    /// `North(c, 𝒯)`: the cell and everything above it in its tower.
    pub fn north(&self, cell: Cell) -> Vec<Cell> {
        (cell.ht..self.height(cell.col))
            .map(|j| Cell::new(cell.col, j))
            .collect()
    }
}

impl From<Vec<usize>> for TowerDiagram {
    fn from(heights: Vec<usize>) -> Self {
        TowerDiagram::new(heights)
    }
}

impl From<TowerDiagram> for Vec<usize> {
    fn from(t: TowerDiagram) -> Self {
        t.heights
    }
}
