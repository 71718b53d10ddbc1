#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use tower_tableaux::{Permutation, RotheLabeling, TowerDiagram, TowerTableau};

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `count` distinct permutations of `S_n` drawn with a fixed seed.
pub fn random_perms(n: usize, count: usize, seed: u64) -> Vec<Permutation> {
    let mut all = Permutation::all(n);
    all.shuffle(&mut rng(seed));
    all.truncate(count);
    all
}

/// Calls `visit` with every assignment of labels `1..=max` to `k` slots.
pub fn for_each_assignment(k: usize, max: usize, mut visit: impl FnMut(&[usize])) {
    let mut labels = vec![1; k];
    if max == 0 && k > 0 {
        return;
    }
    loop {
        visit(&labels);
        let mut pos = 0;
        loop {
            if pos == k {
                return;
            }
            labels[pos] += 1;
            if labels[pos] <= max {
                break;
            }
            labels[pos] = 1;
            pos += 1;
        }
    }
}

/// Every labelling of `shape` with labels in `1..=max`, no constraints.
pub fn all_tableaux(shape: &TowerDiagram, max: usize) -> Vec<TowerTableau> {
    let cells: Vec<_> = shape.cells().collect();
    let mut out = Vec::new();
    for_each_assignment(cells.len(), max, |labels| {
        let map: BTreeMap<_, _> = cells.iter().copied().zip(labels.iter().copied()).collect();
        out.push(TowerTableau::from_labels(shape, &map).unwrap());
    });
    out
}

/// Every labelling of the Rothe diagram of `w` with labels in `1..=max`.
pub fn all_rothe_labelings(w: &Permutation, max: usize) -> Vec<RotheLabeling> {
    let cells: Vec<_> = w.rothe_diagram().cells.into_iter().collect();
    let mut out = Vec::new();
    for_each_assignment(cells.len(), max, |labels| {
        out.push(cells.iter().copied().zip(labels.iter().copied()).collect());
    });
    out
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Balanced check by brute force: try every arrangement of the hook's labels
/// along the path (column bottom-up to the vertex, then the row rightwards),
/// keep the weakly decreasing ones and read the value at the vertex.
pub fn balanced_by_brute_force(l: &RotheLabeling) -> bool {
    l.labels().iter().all(|(&(i, j), &own)| {
        let mut column: Vec<(usize, usize)> = l
            .labels()
            .keys()
            .copied()
            .filter(|&(r, c)| c == j && r > i)
            .collect();
        column.sort_by_key(|c| std::cmp::Reverse(c.0));
        let row: Vec<(usize, usize)> = l
            .labels()
            .keys()
            .copied()
            .filter(|&(r, c)| r == i && c > j)
            .collect();
        let at = column.len();
        let path: Vec<usize> = column
            .iter()
            .chain(std::iter::once(&(i, j)))
            .chain(row.iter())
            .map(|&c| l.label(c).unwrap())
            .collect();
        permutations_of(&path)
            .into_iter()
            .filter(|p| p.windows(2).all(|w| w[0] >= w[1]))
            .all(|p| p[at] == own)
    })
}

/// All tower diagrams with at most `max_cells` cells and at most `width` towers.
pub fn all_shapes(max_cells: usize, width: usize) -> Vec<TowerDiagram> {
    fn extend(prefix: &mut Vec<usize>, left: usize, width: usize, out: &mut Vec<TowerDiagram>) {
        if prefix.len() == width {
            out.push(TowerDiagram::new(prefix.clone()));
            return;
        }
        for h in 0..=left {
            prefix.push(h);
            extend(prefix, left - h, width, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_cells, width, &mut out);
    out.sort();
    out.dedup();
    out
}
