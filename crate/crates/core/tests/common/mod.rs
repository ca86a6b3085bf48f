// shared by several test targets; not every helper is used by each
#![allow(dead_code)]

use dyckperm::{Corpus, DyckPath, Pattern, Permutation};

pub fn perms(n: usize) -> Vec<Permutation> {
    Corpus::default().permutations(n).unwrap().collect()
}

pub fn avoiders(n: usize, pattern: Pattern) -> Vec<Permutation> {
    Corpus::default().avoiding(n, pattern).unwrap().collect()
}

pub fn paths(n: usize) -> Vec<DyckPath> {
    Corpus::default().dyck_paths(n).unwrap().collect()
}

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}
