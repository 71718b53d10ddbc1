mod common;

use std::collections::BTreeSet;

use common::*;
use tower_tableaux::*;

#[test]
fn schubert_matches_compatible_pairs_on_s4() {
    for w in Permutation::all(4) {
        assert_eq!(schubert(&w), schubert_by_compatible_pairs(&w), "{w}");
    }
}

#[test]
fn schubert_matches_compatible_pairs_on_random_s5() {
    for w in random_perms(5, 12, 2024) {
        assert_eq!(schubert(&w), schubert_by_compatible_pairs(&w), "{w}");
    }
}

#[test]
fn schubert_coefficient_sums_on_s3() {
    // 𝔖_ω(1,…,1) counts compatible pairs
    for w in Permutation::all(3) {
        let p = schubert(&w);
        assert_eq!(
            p.coefficient_sum(),
            compatible_pairs(&w).len() as u64,
            "{w}"
        );
    }
    assert_eq!(schubert(&perm("132")).to_string(), "x1 + x2");
    assert_eq!(schubert(&perm("231")).to_string(), "x1*x2");
    assert_eq!(schubert(&perm("312")).to_string(), "x1^2");
}

#[test]
fn stanley_matches_balanced_labelings() {
    for w in Permutation::all(4) {
        for m in 1..=4 {
            assert_eq!(
                stanley_truncated(&w, m),
                stanley_by_balanced_labelings(&w, m),
                "{w}, m={m}"
            );
        }
    }
}

#[test]
fn stanley_is_symmetric() {
    for w in Permutation::all(4) {
        for m in 2..=4 {
            let f = stanley_truncated(&w, m);
            for a in 1..m {
                for b in a + 1..=m {
                    assert_eq!(f.swap_variables(a, b), f, "{w}, m={m}, ({a} {b})");
                }
            }
        }
    }
}

#[test]
fn flagged_tableaux_sit_below_the_flag() {
    for w in Permutation::all(4) {
        let shape = TowerDiagram::of_permutation(&w);
        let flag = flag_tableau(&shape);
        let tableaux = enumerate_sstt(&shape, &LabelBound::Cellwise(flag.clone()));
        let mut sum = Polynomial::zero();
        for t in &tableaux {
            assert!(t.is_semistandard());
            assert!(tableau_leq(t, &flag).unwrap());
            sum.add_term(reading_monomial(t), 1);
        }
        assert_eq!(sum, schubert(&w), "{w}");
    }
}

#[test]
fn pruned_enumeration_matches_unpruned() {
    // strictly increasing columns lose nothing among semi-standard tableaux
    for shape in all_shapes(4, 4) {
        let pruned: BTreeSet<TowerTableau> = enumerate_sstt(&shape, &LabelBound::Uniform(3))
            .into_iter()
            .collect();
        let unpruned: BTreeSet<TowerTableau> = all_tableaux(&shape, 3)
            .into_iter()
            .filter(|t| {
                t.is_semistandard()
                    && t.columns()
                        .iter()
                        .all(|c| c.windows(2).all(|p| p[0] < p[1]))
            })
            .collect();
        assert_eq!(pruned, unpruned, "{shape:?}");
    }
}

#[test]
fn specialization_to_one_variable() {
    let mut hits = 0;
    for w in Permutation::all(4)
        .into_iter()
        .chain(random_perms(5, 10, 5))
    {
        let shape = TowerDiagram::of_permutation(&w);
        let x1_only = schubert(&w).restrict(|v| v == 1);
        assert_eq!(
            x1_only,
            schubert_by_compatible_pairs(&w).restrict(|v| v == 1),
            "{w}"
        );
        let ones =
            TowerTableau::new(shape.heights().iter().map(|&h| vec![1; h]).collect()).unwrap();
        let admits = shape.heights().iter().all(|&h| h <= 1)
            && ones.is_semistandard()
            && tableau_leq(&ones, &flag_tableau(&shape)).unwrap();
        let single = Polynomial::from_monomial(Monomial::from_exponents([(1, w.length() as u32)]));
        assert_eq!(x1_only == single, admits, "{w}");
        hits += admits as usize;
    }
    assert!(hits > 1);
}

#[test]
fn polynomial_display_and_json() {
    let p = schubert(&perm("1432"));
    let text = p.to_string();
    assert!(!text.is_empty());
    let json = serde_json::to_string(&p).unwrap();
    let back: Polynomial = serde_json::from_str(&json).unwrap();
    assert_eq!(back, p);
    assert_eq!(Polynomial::zero().to_string(), "0");
}
