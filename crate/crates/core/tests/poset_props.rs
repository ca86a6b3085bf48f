mod common;

use common::{avoiders, paths};
use dyckperm::poset::{leq_oracle, leq_with, upper_covers, Matching};
use dyckperm::{leq, lprime, nu, DyckPath, Pattern};

#[test]
fn direct_criterion_matches_closure() {
    for n in 0..=6 {
        let all = paths(n);
        for p in &all {
            for q in &all {
                assert_eq!(
                    leq(p, q).unwrap(),
                    leq_oracle(p, q).unwrap(),
                    "{} vs {}",
                    p,
                    q
                );
            }
        }
    }
}

#[test]
fn strict_matching_disagrees_with_closure() {
    let mut disagreements = Vec::new();
    for n in 0..=6 {
        let all = paths(n);
        let mut count = 0;
        for p in &all {
            for q in &all {
                if leq_with(p, q, Matching::Strict).unwrap() != leq_oracle(p, q).unwrap() {
                    count += 1;
                }
            }
        }
        disagreements.push(count);
    }
    assert_eq!(disagreements, vec![0, 0, 0, 1, 8, 50, 299]);
}

#[test]
fn partial_order_axioms() {
    for n in 0..=6 {
        let all = paths(n);
        let m: Vec<Vec<bool>> = all
            .iter()
            .map(|p| all.iter().map(|q| leq(p, q).unwrap()).collect())
            .collect();
        for a in 0..all.len() {
            assert!(m[a][a]);
            for b in 0..all.len() {
                if a != b {
                    assert!(!(m[a][b] && m[b][a]), "{} {}", all[a], all[b]);
                }
                if m[a][b] {
                    assert!(m[b].iter().zip(&m[a]).all(|(&bc, &ac)| !bc || ac));
                }
            }
        }
    }
}

#[test]
fn pyramid_is_the_top_irreducible_path() {
    for n in 1..=7 {
        let top = DyckPath::pyramid(n);
        for p in paths(n).into_iter().filter(DyckPath::is_irreducible) {
            assert!(leq(&p, &top).unwrap());
            if p != top {
                assert!(!leq(&top, &p).unwrap());
                assert!(!upper_covers(&p).is_empty());
            }
        }
        assert!(upper_covers(&top).is_empty());
    }
}

#[test]
fn upper_covers_are_exactly_the_closest_larger_paths() {
    for n in 1..=5 {
        let all = paths(n);
        for p in &all {
            let covers = upper_covers(p);
            for q in &all {
                let above = q != p && leq(p, q).unwrap();
                let between = all
                    .iter()
                    .any(|r| r != p && r != q && leq(p, r).unwrap() && leq(r, q).unwrap());
                assert_eq!(covers.contains(q), above && !between, "{} -> {}", p, q);
            }
        }
    }
}

#[test]
fn images_of_1234_avoiders_dominate_lprime() {
    for n in 1..=6 {
        for a in avoiders(n, Pattern::P1234) {
            let pair = nu(&a);
            assert!(leq(&lprime(&pair.second), &pair.first).unwrap());
            assert!(leq(&lprime(&pair.first), &pair.second).unwrap());
        }
    }
}
