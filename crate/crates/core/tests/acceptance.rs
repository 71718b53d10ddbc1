//! Acceptance run: one PASS/FAIL line per criterion, with its time limit.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use tower_tableaux::*;

fn word(s: &str) -> Word {
    s.parse().unwrap()
}

fn tab(cols: &[&[usize]]) -> TowerTableau {
    TowerTableau::new(cols.iter().map(|c| c.to_vec()).collect()).unwrap()
}

fn labeling(cells: &[((usize, usize), usize)]) -> RotheLabeling {
    cells.iter().copied().collect()
}

fn worked_examples() {
    let t = TowerTableau::slide_word(&word("54534562")).unwrap();
    assert_eq!(t.shape(), TowerDiagram::new(vec![0, 1, 4, 2, 1]));
    assert_eq!(t, tab(&[&[], &[8], &[4, 5, 6, 7], &[2, 3], &[1]]));

    let d = perm("35421").rothe_diagram();
    let expected: BTreeSet<(usize, usize)> = [
        (1, 1),
        (1, 2),
        (2, 1),
        (2, 2),
        (2, 4),
        (3, 1),
        (3, 2),
        (4, 1),
    ]
    .into();
    assert_eq!(d.cells, expected);

    let balanced = labeling(&[
        ((1, 1), 2),
        ((1, 2), 1),
        ((2, 1), 4),
        ((2, 2), 3),
        ((2, 4), 4),
        ((3, 1), 5),
        ((3, 2), 2),
        ((4, 1), 6),
    ]);
    assert!(balanced.is_balanced());
    assert!(balanced.is_column_strict());
    assert!(!balanced.is_injective());

    assert_eq!(
        RotheLabeling::canonical(&word("42341234")).unwrap(),
        labeling(&[
            ((1, 1), 5),
            ((1, 2), 2),
            ((2, 1), 6),
            ((2, 2), 3),
            ((2, 4), 1),
            ((3, 1), 7),
            ((3, 2), 4),
            ((4, 1), 8),
        ])
    );

    let rho = TowerTableau::slide_word(&word("314354")).unwrap();
    assert_eq!(
        rothify(&rho).unwrap(),
        labeling(&[
            ((1, 1), 2),
            ((3, 3), 3),
            ((3, 4), 4),
            ((4, 3), 5),
            ((4, 4), 6),
            ((5, 3), 1)
        ])
    );

    assert_eq!(
        flag_tableau(&TowerDiagram::new(vec![0, 1, 4, 2, 1, 0, 3])),
        tab(&[&[], &[2], &[2, 4, 5, 6], &[2, 4], &[2], &[], &[6, 8, 9]])
    );

    let ss = tab(&[&[], &[8], &[7, 8, 9, 10], &[3, 10], &[2], &[], &[3, 4, 10]]);
    assert!(ss.is_semistandard());
    assert_eq!(
        ss.standardize().unwrap().reading_word().unwrap(),
        word("57483425964")
    );
    let mut labels: Vec<usize> = ss.cells().map(|(_, v)| v).collect();
    labels.sort();
    assert_eq!(labels, [2, 3, 3, 4, 7, 8, 8, 9, 10, 10, 10]);

    let tau = TowerTableau::slide_word(&word("134534")).unwrap();
    assert_eq!(tau, tab(&[&[1], &[], &[2, 3, 4], &[5, 6]]));
    assert_eq!(
        tau.remove_initial().unwrap(),
        tab(&[&[], &[], &[1, 2, 3], &[4, 5]])
    );
    let sigma = TowerTableau::slide_word(&word("453451")).unwrap();
    assert_eq!(sigma, tab(&[&[6], &[], &[3, 4, 5], &[1, 2]]));
    assert_eq!(
        sigma.remove_initial().unwrap(),
        tab(&[&[5], &[], &[2, 3, 4], &[], &[1]])
    );
}

fn schubert_equivalence() {
    let perms = Permutation::all(4);
    assert_eq!(perms.len(), 24);
    for w in perms.iter().chain(&random_perms(5, 10, 0x5eed)) {
        assert_eq!(schubert(w), schubert_by_compatible_pairs(w), "{w}");
    }
}

fn stanley_equivalence() {
    for w in Permutation::all(4) {
        for m in 1..=4 {
            let f = stanley_truncated(&w, m);
            assert_eq!(f, stanley_by_balanced_labelings(&w, m), "{w}, m={m}");
            for a in 1..m {
                for b in a + 1..=m {
                    assert_eq!(f.swap_variables(a, b), f, "{w}, m={m}");
                }
            }
        }
    }
}

fn reduced_word_suite() {
    for w in Permutation::all(4) {
        for alpha in w.reduced_words() {
            let t = TowerTableau::slide_word(&alpha).unwrap();
            assert_eq!(t.reading_word().unwrap(), alpha);
            let r = rothify(&t).unwrap();
            assert_eq!(r.diagram(), w.rothe_diagram(), "{alpha}");
            let canonical = RotheLabeling::canonical(&alpha).unwrap();
            assert_eq!(r, canonical, "{alpha}");
            assert_eq!(canonical.recover_word().unwrap(), alpha);
            assert_eq!(push_up(&r, &w).unwrap(), t, "{alpha}");
            if !alpha.is_empty() {
                let tail = TowerTableau::slide_word(&alpha.tail()).unwrap();
                assert_eq!(t.remove_initial().unwrap(), tail, "{alpha}");
            }
        }
    }
}

fn bijection_suite() {
    for w in Permutation::all(3) {
        let shape = TowerDiagram::of_permutation(&w);
        let tableaux: BTreeSet<TowerTableau> = all_tableaux(&shape, 4)
            .into_iter()
            .filter(TowerTableau::is_semistandard)
            .collect();
        let balanced: BTreeSet<RotheLabeling> = all_rothe_labelings(&w, 4)
            .into_iter()
            .filter(RotheLabeling::is_balanced)
            .collect();
        assert_eq!(tableaux.len(), balanced.len(), "{w}");
        for t in &tableaux {
            let r = rothify_semistandard(t).unwrap();
            assert!(balanced.contains(&r), "{w}");
            assert_eq!(&push_up(&r, &w).unwrap(), t);
        }
        for l in &balanced {
            let t = push_up(l, &w).unwrap();
            assert!(tableaux.contains(&t), "{w}");
            assert_eq!(&rothify_semistandard(&t).unwrap(), l);
        }
    }
}

fn structural_invariants() {
    for w in Permutation::all(5) {
        let flights: BTreeSet<usize> = TowerDiagram::of_permutation(&w)
            .corners()
            .into_iter()
            .map(|(_, f)| f)
            .collect();
        assert_eq!(flights, w.descents(), "{w}");
    }
    for w in Permutation::all(4) {
        for alpha in w.reduced_words().into_iter().filter(|a| !a.is_empty()) {
            let t = TowerTableau::slide_word(&alpha).unwrap();
            let i = t.find(1).unwrap().col;
            assert!(t.shape().height(i) > t.shape().height(i + 1), "{alpha}");
        }
        let shape = TowerDiagram::of_permutation(&w);
        let natural = TowerTableau::natural(&shape);
        let canonical = rothify(&natural).unwrap();
        let rothe_of: BTreeMap<usize, (usize, usize)> =
            canonical.labels().iter().map(|(&c, &k)| (k, c)).collect();
        let d = canonical.diagram();
        for (cell, k) in natural.cells() {
            let image: BTreeSet<(usize, usize)> = tower_hook(&shape, cell)
                .unwrap()
                .members
                .iter()
                .map(|&c| rothe_of[&natural.label(c).unwrap()])
                .collect();
            assert_eq!(image, d.hook(rothe_of[&k]).unwrap(), "{w} at {cell}");
        }
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn()); 6] = [
        ("worked examples", 1, worked_examples),
        (
            "Schubert polynomials against compatible pairs",
            30,
            schubert_equivalence,
        ),
        (
            "Stanley truncations against balanced labelings",
            60,
            stanley_equivalence,
        ),
        ("reduced word suite on S4", 30, reduced_word_suite),
        (
            "semi-standard tableaux and balanced labelings biject",
            60,
            bijection_suite,
        ),
        ("structural invariants", 60, structural_invariants),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let within = elapsed < Duration::from_secs(limit);
        let verdict = match (&outcome, within) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over {limit} s)"),
            (Err(e), _) => {
                let msg = e
                    .downcast_ref::<String>()
                    .map(String::as_str)
                    .or_else(|| e.downcast_ref::<&str>().copied())
                    .unwrap_or("panic");
                format!("FAIL ({})", msg.lines().next().unwrap_or(""))
            }
        };
        if verdict != "PASS" {
            failed += 1;
        }
        println!(
            "criterion {}: {verdict} {name} [{:.3} s, limit {limit} s]",
            n + 1,
            elapsed.as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
