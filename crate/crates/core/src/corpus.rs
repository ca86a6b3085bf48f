//! Exhaustive generation of permutations, pattern avoiders and Dyck paths.
//!
//! Every generator yields its objects once each in lexicographic order and
//! is an independent value; calling the constructor again restarts it.

use std::fmt;
use std::str::FromStr;

use crate::dyckpath::{DyckPath, Step};
use crate::error::{Error, Result};
use crate::permutation::Permutation;

pub const DEFAULT_MAX_N: usize = 10;

/// The increasing patterns the fast path supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    P123,
    P1234,
}

#[allow(clippy::len_without_is_empty)]
impl Pattern {
    pub fn len(self) -> usize {
        match self {
            Pattern::P123 => 3,
            Pattern::P1234 => 4,
        }
    }

    pub fn as_permutation(self) -> Permutation {
        Permutation::identity(self.len())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "123" => Ok(Pattern::P123),
            "1234" => Ok(Pattern::P1234),
            other => Err(Error::UnknownPattern(other.to_string())),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::P123 => "123",
            Pattern::P1234 => "1234",
        })
    }
}

/// Size-capped entry point to the generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Corpus {
    cap: usize,
}

impl Default for Corpus {
    fn default() -> Self {
        Corpus { cap: DEFAULT_MAX_N }
    }
}

impl Corpus {
    pub fn with_cap(cap: usize) -> Self {
        Corpus { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            return Err(Error::SizeCap { n, cap: self.cap });
        }
        Ok(())
    }

    pub fn permutations(&self, n: usize) -> Result<Avoiders> {
        self.check(n)?;
        Ok(Avoiders::new(n, None))
    }

    pub fn avoiding(&self, n: usize, pattern: Pattern) -> Result<Avoiders> {
        self.check(n)?;
        Ok(Avoiders::new(n, Some(pattern.len())))
    }

    pub fn dyck_paths(&self, n: usize) -> Result<DyckPaths> {
        self.check(n)?;
        Ok(DyckPaths::new(n))
    }

    pub fn count_avoiding(&self, n: usize, pattern: Pattern) -> Result<u64> {
        Ok(self.avoiding(n, pattern)?.count() as u64)
    }

    pub fn count_dyck(&self, n: usize) -> Result<u64> {
        Ok(self.dyck_paths(n)?.count() as u64)
    }
}

/// `C_n = binom(2n, n) / (n + 1)`, computed as `C_{k+1} = C_k · 2(2k+1)/(k+2)`.
pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

/// Permutations of `{1..n}` whose longest increasing subsequence is shorter
/// than `bound`, by backtracking that prunes every prefix already containing
/// an increasing run of that length. `bound = None` yields all of `S_n`.
#[derive(Debug, Clone)]
pub struct Avoiders {
    n: usize,
    bound: usize,
    prefix: Vec<usize>,
    used: Vec<bool>,
    // next candidate value at each depth
    next: Vec<usize>,
    // patience-sorting pile tops for the current prefix, plus undo records
    tails: Vec<usize>,
    undo: Vec<(usize, Option<usize>)>,
    emitted_full: bool,
    done: bool,
}

impl Avoiders {
    fn new(n: usize, bound: Option<usize>) -> Self {
        Avoiders {
            n,
            bound: bound.unwrap_or(usize::MAX),
            prefix: Vec::with_capacity(n),
            used: vec![false; n + 1],
            next: vec![1; n + 1],
            tails: Vec::with_capacity(n),
            undo: Vec::with_capacity(n),
            emitted_full: false,
            done: false,
        }
    }

    fn try_push(&mut self, v: usize) -> bool {
        let slot = self.tails.partition_point(|&t| t < v);
        if slot == self.tails.len() {
            if slot + 1 >= self.bound {
                return false;
            }
            self.tails.push(v);
            self.undo.push((slot, None));
        } else {
            self.undo.push((slot, Some(self.tails[slot])));
            self.tails[slot] = v;
        }
        self.prefix.push(v);
        self.used[v] = true;
        true
    }

    fn pop(&mut self) {
        let v = self.prefix.pop().expect("pop on empty prefix");
        self.used[v] = false;
        match self.undo.pop().expect("undo stack in sync with prefix") {
            (_, None) => {
                self.tails.pop();
            }
            (slot, Some(old)) => self.tails[slot] = old,
        }
    }
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return Some(Permutation::identity(0));
        }
        if self.emitted_full {
            self.emitted_full = false;
            self.pop();
        }
        loop {
            let depth = self.prefix.len();
            let mut v = self.next[depth];
            let mut pushed = false;
            while v <= self.n {
                if !self.used[v] && self.try_push(v) {
                    pushed = true;
                    break;
                }
                v += 1;
            }
            if pushed {
                self.next[depth] = v + 1;
                if depth + 1 == self.n {
                    self.emitted_full = true;
                    return Some(Permutation::from_vec_unchecked(self.prefix.clone()));
                }
                self.next[depth + 1] = 1;
            } else {
                if depth == 0 {
                    self.done = true;
                    return None;
                }
                self.pop();
            }
        }
    }
}

/// Dyck paths of semilength `n` in lexicographic order with `U < D`.
#[derive(Debug, Clone)]
pub struct DyckPaths {
    n: usize,
    current: Option<Vec<Step>>,
}

impl DyckPaths {
    fn new(n: usize) -> Self {
        DyckPaths { n, current: None }
    }
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let next = match self.current.take() {
            None => Some(DyckPath::pyramid(self.n).steps().to_vec()),
            Some(steps) => successor(&steps),
        };
        self.current = next.clone();
        if next.is_none() {
            // park on an exhausted state
            self.current = Some(Vec::new());
            self.n = 0;
            return None;
        }
        next.map(DyckPath::from_steps_unchecked)
    }
}

/// Lexicographic successor: find the rightmost `U` that can become `D`
/// while keeping a valid prefix, then complete with the smallest suffix.
fn successor(steps: &[Step]) -> Option<Vec<Step>> {
    let len = steps.len();
    let n = len / 2;
    let mut ups_before = vec![0usize; len + 1];
    for (i, s) in steps.iter().enumerate() {
        ups_before[i + 1] = ups_before[i] + usize::from(*s == Step::Up);
    }
    for i in (0..len).rev() {
        if steps[i] != Step::Up {
            continue;
        }
        let ups = ups_before[i];
        let downs = i - ups;
        // flipping step i to D needs downs + 1 <= ups
        if downs + 1 > ups {
            continue;
        }
        let ups_left = n - ups;
        let downs_after = downs + 1;
        let mut out = steps[..i].to_vec();
        out.push(Step::Down);
        out.extend(std::iter::repeat_n(Step::Up, ups_left));
        out.extend(std::iter::repeat_n(Step::Down, n - downs_after));
        return Some(out);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        let expected = [1u128, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(n), c);
        }
    }

    #[test]
    fn small_generators() {
        let corpus = Corpus::default();
        let empty: Vec<_> = corpus.permutations(0).unwrap().collect();
        assert_eq!(empty, vec![Permutation::identity(0)]);
        assert_eq!(corpus.count_avoiding(3, Pattern::P123).unwrap(), 5);
        assert_eq!(corpus.count_avoiding(4, Pattern::P1234).unwrap(), 23);
        assert_eq!(corpus.count_dyck(3).unwrap(), 5);
        assert_eq!(
            corpus.dyck_paths(0).unwrap().collect::<Vec<_>>(),
            vec![DyckPath::empty()]
        );

        let s3: Vec<String> = corpus
            .permutations(3)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(s3, ["1 2 3", "1 3 2", "2 1 3", "2 3 1", "3 1 2", "3 2 1"]);
        let d3: Vec<String> = corpus
            .dyck_paths(3)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(d3, ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]);
    }

    #[test]
    fn generators_restart_and_stay_exhausted() {
        let corpus = Corpus::default();
        let mut it = corpus.dyck_paths(2).unwrap();
        assert_eq!(it.by_ref().count(), 2);
        assert_eq!(it.next(), None);
        assert_eq!(corpus.dyck_paths(2).unwrap().count(), 2);
        let mut perms = corpus.permutations(2).unwrap();
        assert_eq!(perms.by_ref().count(), 2);
        assert_eq!(perms.next(), None);
    }

    #[test]
    fn size_cap() {
        assert_eq!(
            Corpus::default().permutations(11).err(),
            Some(Error::SizeCap { n: 11, cap: 10 })
        );
        assert!(Corpus::with_cap(11).permutations(11).is_ok());
        assert!(Corpus::with_cap(3).dyck_paths(4).is_err());
    }

    #[test]
    fn pattern_parsing() {
        assert_eq!("123".parse::<Pattern>(), Ok(Pattern::P123));
        assert_eq!("1234".parse::<Pattern>(), Ok(Pattern::P1234));
        assert!("132".parse::<Pattern>().is_err());
        assert_eq!(Pattern::P1234.to_string(), "1234");
    }
}
