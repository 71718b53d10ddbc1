//! Passage between tower tableaux and labelled Rothe diagrams.
//!
//! The virtual tableau of a complete tower tableau lives in the third quadrant
//! as the reflection across `x + y = 0` of the tableau of the reversed word.
//! It is stored unreflected: reflection sends a cell in column `i'` to depth
//! `i'` below the axis, so the Rothe row of a pair is the column of its
//! virtual cell and the Rothe column is the column of its main cell.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::balanced::RotheLabeling;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableau::TowerTableau;
use crate::tower::{Cell, TowerDiagram};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteTowerTableau {
    pub main: TowerTableau,
    #[serde(rename = "virtual")]
    pub virtual_tableau: TowerTableau,
}

impl CompleteTowerTableau {
    /// Pairs a standard tableau with the tableau of its reversed reading word.
    pub fn new(main: &TowerTableau) -> Result<Self> {
        let word = main.reading_word()?;
        let virtual_tableau = TowerTableau::slide_word(&word.reversed())
            .expect("the reverse of a reduced word is reduced");
        Ok(CompleteTowerTableau {
            main: main.clone(),
            virtual_tableau,
        })
    }

    /// The labelled Rothe diagram obtained by matching the main cell labelled
    /// `k` with the virtual cell labelled `l + 1 - k`.
    pub fn rothify(&self) -> RotheLabeling {
        let l = self.main.len();
        let mut virtual_cols = vec![0; l + 1];
        for (cell, v) in self.virtual_tableau.cells() {
            virtual_cols[v] = cell.col;
        }
        self.main
            .cells()
            .map(|(cell, k)| ((virtual_cols[l + 1 - k], cell.col), k))
            .collect()
    }
}

/// Rothification of a standard tableau.
pub fn rothify(tableau: &TowerTableau) -> Result<RotheLabeling> {
    Ok(CompleteTowerTableau::new(tableau)?.rothify())
}

/// Rothification of a semi-standard tableau: cells are placed by rothifying
/// the standardization, labels are taken from the tableau itself.
pub fn rothify_semistandard(tableau: &TowerTableau) -> Result<RotheLabeling> {
    let standard = tableau.standardize()?;
    let positions = rothify(&standard)?;
    let mut original = vec![0; tableau.len() + 1];
    for ((cell, s), (_, t)) in standard.cells().zip(tableau.cells()) {
        debug_assert_eq!(Some(t), tableau.label(cell));
        original[s] = t;
    }
    Ok(positions
        .labels()
        .iter()
        .map(|(&cell, &s)| (cell, original[s]))
        .collect())
}

/// Pushes the labels of each Rothe column up into the matching tower of
/// `𝒯(ω)`, sorted increasing from the bottom.
pub fn push_up(labeling: &RotheLabeling, w: &Permutation) -> Result<TowerTableau> {
    if labeling.diagram() != w.rothe_diagram() {
        return Err(Error::ShapeMismatch(format!(
            "labeling is not on the Rothe diagram of {w}"
        )));
    }
    let shape = TowerDiagram::of_permutation(w);
    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); shape.width()];
    for (&(_, col), &v) in labeling.labels() {
        if col > columns.len() {
            return Err(Error::ShapeMismatch(format!(
                "no tower above Rothe column {col}"
            )));
        }
        columns[col - 1].push(v);
    }
    for (i, column) in columns.iter_mut().enumerate() {
        if column.len() != shape.height(i + 1) {
            return Err(Error::ShapeMismatch(format!(
                "Rothe column {} has {} cells, tower has {}",
                i + 1,
                column.len(),
                shape.height(i + 1)
            )));
        }
        column.sort_unstable();
    }
    TowerTableau::new(columns)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerHook {
    pub vertex: Cell,
    pub members: BTreeSet<Cell>,
}

/// `H_c = North(c, 𝒯) ∪ East(c, 𝒯)`.
pub fn tower_hook(shape: &TowerDiagram, vertex: Cell) -> Result<TowerHook> {
    if !shape.contains(vertex) {
        return Err(Error::NotInDiagram(vertex));
    }
    let members = shape
        .north(vertex)
        .into_iter()
        .chain(shape.east(vertex))
        .collect();
    Ok(TowerHook { vertex, members })
}

/// The flag tableau: repeatedly take the bottom unlabelled cell of the
/// leftmost tower that still has one, give it its flight number, and give the
/// same number to the rest of its East chain.
pub fn flag_tableau(shape: &TowerDiagram) -> TowerTableau {
    let mut labels: BTreeMap<Cell, usize> = BTreeMap::new();
    while labels.len() < shape.len() {
        let start = shape
            .cells()
            .find(|c| !labels.contains_key(c))
            .expect("an unlabelled cell remains");
        let f = shape
            .flight(start)
            .expect("start is a cell of the shape")
            .flight_number()
            .expect("bottom unlabelled cells of the leftmost open tower have a flight path");
        for cell in shape.east(start) {
            let previous = labels.insert(cell, f);
            debug_assert!(
                previous.is_none(),
                "East chains never revisit a labelled cell"
            );
        }
    }
    TowerTableau::from_labels(shape, &labels).expect("every cell was labelled")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Word;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn slid(s: &str) -> TowerTableau {
        TowerTableau::slide_word(&word(s)).unwrap()
    }

    fn tab(cols: &[&[usize]]) -> TowerTableau {
        TowerTableau::new(cols.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    fn labeling(cells: &[((usize, usize), usize)]) -> RotheLabeling {
        cells.iter().copied().collect()
    }

    #[test]
    fn complete_examples() {
        let c = CompleteTowerTableau::new(&slid("3")).unwrap();
        assert_eq!(c.virtual_tableau, tab(&[&[], &[], &[1]]));
        let c = CompleteTowerTableau::new(&slid("314354")).unwrap();
        assert_eq!(c.virtual_tableau, tab(&[&[5], &[], &[3, 4], &[1, 2], &[6]]));
        assert_eq!(c.main.len(), c.virtual_tableau.len());
    }

    #[test]
    fn rothify_examples() {
        assert_eq!(rothify(&slid("3")).unwrap(), labeling(&[((3, 3), 1)]));
        assert_eq!(
            rothify(&slid("314354")).unwrap(),
            labeling(&[
                ((1, 1), 2),
                ((3, 3), 3),
                ((3, 4), 4),
                ((4, 3), 5),
                ((4, 4), 6),
                ((5, 3), 1),
            ])
        );
        let w = word("42341234");
        assert_eq!(
            rothify(&slid("42341234")).unwrap(),
            RotheLabeling::canonical(&w).unwrap()
        );
        assert_eq!(rothify(&tab(&[&[1], &[2]])), Err(Error::NotStandard));
    }

    #[test]
    fn push_up_examples() {
        let w: Permutation = "35421".parse().unwrap();
        let canonical = RotheLabeling::canonical(&word("42341234")).unwrap();
        assert_eq!(push_up(&canonical, &w).unwrap(), slid("42341234"));
        assert_eq!(
            push_up(&RotheLabeling::default(), &Permutation::identity()).unwrap(),
            TowerTableau::empty()
        );
        assert!(matches!(
            push_up(&canonical, &"321".parse().unwrap()),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn rothify_semistandard_example() {
        let t = tab(&[&[], &[8], &[7, 8, 9, 10], &[3, 10], &[2], &[], &[3, 4, 10]]);
        let r = rothify_semistandard(&t).unwrap();
        assert!(r.is_balanced());
        let w = t.standardize().unwrap().reading_word().unwrap().apply();
        assert_eq!(r.diagram(), w.rothe_diagram());
        assert_eq!(push_up(&r, &w).unwrap(), t);
        let standard = slid("314354");
        assert_eq!(
            rothify_semistandard(&standard).unwrap(),
            rothify(&standard).unwrap()
        );
    }

    #[test]
    fn flag_examples() {
        assert_eq!(flag_tableau(&TowerDiagram::new(vec![1])), tab(&[&[1]]));
        assert_eq!(
            flag_tableau(&TowerDiagram::new(vec![0, 1, 4, 2, 1, 0, 3])),
            tab(&[&[], &[2], &[2, 4, 5, 6], &[2, 4], &[2], &[], &[6, 8, 9]])
        );
    }

    #[test]
    fn tower_hook_examples() {
        let single = TowerDiagram::new(vec![0, 1]);
        let h = tower_hook(&single, Cell::new(2, 0)).unwrap();
        assert_eq!(h.members, [Cell::new(2, 0)].into());
        let t = TowerDiagram::new(vec![0, 1, 4, 2, 1]);
        let h = tower_hook(&t, Cell::new(3, 0)).unwrap();
        let expected: BTreeSet<Cell> = [(3, 0), (3, 1), (3, 2), (3, 3), (4, 0), (5, 0)]
            .into_iter()
            .map(|(i, j)| Cell::new(i, j))
            .collect();
        assert_eq!(h.members, expected);
        assert!(tower_hook(&t, Cell::new(1, 0)).is_err());
    }
}
