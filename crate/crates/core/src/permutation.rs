//! Permutations in one-line notation and the statistics the bijection is
//! built from: left-to-right minima, right-to-left maxima, pattern
//! containment and the decomposition into right-connected components.
//!
//! All positions and values are 1-indexed.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Validates that `values` is a permutation of `1..=values.len()`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 {
                return Err(Error::ZeroValue(v));
            }
            if v > n {
                return Err(Error::ValueOutOfRange { value: v, len: n });
            }
            if seen[v] {
                return Err(Error::DuplicateValue { value: v });
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    /// `n n-1 ... 1`
    pub fn decreasing(n: usize) -> Self {
        Permutation {
            values: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The value at 1-indexed position `pos`.
    pub fn at(&self, pos: usize) -> usize {
        self.values[pos - 1]
    }

    pub fn ltr_minima(&self) -> MinProfile {
        let mut profile = MinProfile::default();
        let mut current = usize::MAX;
        for (i, &x) in self.values.iter().enumerate() {
            if x < current {
                current = x;
                profile.values.push(x);
                profile.positions.push(i + 1);
            }
        }
        profile
    }

    pub fn rtl_maxima(&self) -> MaxProfile {
        let mut profile = MaxProfile::default();
        let mut current = 0;
        for (i, &x) in self.values.iter().enumerate().rev() {
            if x > current {
                current = x;
                profile.values.push(x);
                profile.positions.push(i + 1);
            }
        }
        profile
    }

    /// `σ^rc(i) = n + 1 - σ(n + 1 - i)`
    pub fn reverse_complement(&self) -> Permutation {
        let n = self.len();
        Permutation {
            values: self.values.iter().rev().map(|&x| n + 1 - x).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut values = vec![0; self.len()];
        for (i, &x) in self.values.iter().enumerate() {
            values[x - 1] = i + 1;
        }
        Permutation { values }
    }

    /// Generic containment test by backtracking over subsequences.
    ///
    /// Exponential in the pattern length; meant for small inputs and as an
    /// oracle for [`Permutation::avoids_123`] / [`Permutation::avoids_1234`].
    /// The empty pattern is contained in every permutation.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let mut chosen = Vec::with_capacity(pattern.len());
        embed(&self.values, &pattern.values, 0, &mut chosen)
    }

    /// Length of a longest increasing subsequence, by patience sorting.
    pub fn lis_length(&self) -> usize {
        lis_length(&self.values)
    }

    pub fn avoids_123(&self) -> bool {
        self.lis_length() < 3
    }

    pub fn avoids_1234(&self) -> bool {
        self.lis_length() < 4
    }

    /// Splits at every proper suffix that is a permutation of `{1, ..., t}`.
    ///
    /// Components are returned left to right, each standardized to a
    /// permutation of `{1, ..., len}`. Component `i` occupies the value block
    /// just above the total length of the components after it.
    pub fn right_connected_components(&self) -> Vec<Permutation> {
        let n = self.len();
        // a cut before the suffix of length len + 1 whenever that suffix is {1..len+1}
        let mut cuts = Vec::new();
        let mut suffix_max = 0;
        for (len, &x) in self.values.iter().rev().enumerate() {
            suffix_max = suffix_max.max(x);
            if suffix_max == len + 1 && len + 1 < n {
                cuts.push(n - (len + 1));
            }
        }
        cuts.reverse();

        let mut out = Vec::with_capacity(cuts.len() + 1);
        let mut start = 0;
        for end in cuts.into_iter().chain(std::iter::once(n)) {
            if end == start {
                continue;
            }
            let offset = n - end;
            out.push(Permutation {
                values: self.values[start..end]
                    .iter()
                    .map(|&x| x - offset)
                    .collect(),
            });
            start = end;
        }
        out
    }

    pub fn is_right_connected(&self) -> bool {
        self.right_connected_components().len() <= 1
    }

    /// Skew sum of components in the sense of [`right_connected_components`]:
    /// earlier components take the larger values.
    ///
    /// [`right_connected_components`]: Permutation::right_connected_components
    pub fn skew_sum<'a, I>(parts: I) -> Permutation
    where
        I: IntoIterator<Item = &'a Permutation>,
        I::IntoIter: DoubleEndedIterator,
    {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut offset = 0;
        for part in parts.into_iter().rev() {
            blocks.push(part.values.iter().map(|&x| x + offset).collect());
            offset += part.len();
        }
        blocks.reverse();
        Permutation {
            values: blocks.concat(),
        }
    }

    /// Profile equivalence: same values and positions of LTR minima and of
    /// RTL maxima.
    pub fn equivalent(&self, other: &Permutation) -> Result<bool> {
        check_len(self, other)?;
        Ok(self.ltr_minima() == other.ltr_minima() && self.rtl_maxima() == other.rtl_maxima())
    }

    /// The unique 1234-avoiding permutation equivalent to `self`: minima and
    /// maxima stay put, every other value is placed in decreasing order.
    pub fn canonical_representative(&self) -> Permutation {
        assemble(self.len(), &self.ltr_minima(), &self.rtl_maxima())
            .expect("profiles taken from a permutation are consistent")
    }

    /// `σ ≤_λ τ` by the intrinsic minima criterion.
    ///
    /// Removed values `m_{i_1} > ... > m_{i_r}` are indexed in the
    /// decreasing listing of `vmin(σ)`; removed positions
    /// `p_{j_1} < ... < p_{j_r}` in the increasing listing of `pmin(σ)`. The
    /// criterion asks for `i_k < j_k` for every `k`.
    pub fn leq_lambda(&self, other: &Permutation) -> Result<bool> {
        check_len(self, other)?;
        let (s, t) = (self.ltr_minima(), other.ltr_minima());
        Ok(removal_criterion(
            &s.values,
            &s.positions,
            &t.values,
            &t.positions,
        ))
    }

    /// `σ ≤_μ τ` by the intrinsic maxima criterion: values indexed in the
    /// increasing listing of `vmax(σ)`, positions in the decreasing listing
    /// of `pmax(σ)`, and `i_k < j_k` for every `k`.
    pub fn leq_mu(&self, other: &Permutation) -> Result<bool> {
        check_len(self, other)?;
        let (s, t) = (self.rtl_maxima(), other.rtl_maxima());
        Ok(removal_criterion(
            &s.values,
            &s.positions,
            &t.values,
            &t.positions,
        ))
    }
}

fn check_len(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

fn embed(text: &[usize], pattern: &[usize], from: usize, chosen: &mut Vec<usize>) -> bool {
    let t = chosen.len();
    if t == pattern.len() {
        return true;
    }
    if text.len() - from < pattern.len() - t {
        return false;
    }
    for i in from..text.len() {
        let x = text[i];
        let fits = chosen
            .iter()
            .zip(pattern)
            .all(|(&y, &q)| (y < x) == (q < pattern[t]));
        if fits {
            chosen.push(x);
            if embed(text, pattern, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub(crate) fn lis_length(values: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for &x in values {
        let slot = tails.partition_point(|&t| t < x);
        if slot == tails.len() {
            tails.push(x);
        } else {
            tails[slot] = x;
        }
    }
    tails.len()
}

fn removal_criterion(
    sigma_values: &[usize],
    sigma_positions: &[usize],
    tau_values: &[usize],
    tau_positions: &[usize],
) -> bool {
    let tv: BTreeSet<_> = tau_values.iter().collect();
    let tp: BTreeSet<_> = tau_positions.iter().collect();
    if !tv.is_subset(&sigma_values.iter().collect())
        || !tp.is_subset(&sigma_positions.iter().collect())
    {
        return false;
    }
    let removed_values: Vec<usize> = (1..=sigma_values.len())
        .filter(|&i| !tv.contains(&sigma_values[i - 1]))
        .collect();
    let removed_positions: Vec<usize> = (1..=sigma_positions.len())
        .filter(|&j| !tp.contains(&sigma_positions[j - 1]))
        .collect();
    removed_values.len() == removed_positions.len()
        && removed_values
            .iter()
            .zip(&removed_positions)
            .all(|(i, j)| i < j)
}

/// Builds the permutation with the given minima and maxima in place and all
/// remaining values in decreasing order at the remaining positions.
///
/// Returns `None` when the profiles collide (a position or value claimed
/// twice with different partners, or indices out of range).
pub(crate) fn assemble(n: usize, min: &MinProfile, max: &MaxProfile) -> Option<Permutation> {
    let mut slots = vec![0usize; n];
    let mut used = vec![false; n + 1];
    let pairs = min.pairs().chain(max.pairs());
    for (value, pos) in pairs {
        if value == 0 || value > n || pos == 0 || pos > n {
            return None;
        }
        let slot = &mut slots[pos - 1];
        if *slot != 0 && *slot != value {
            return None;
        }
        if *slot == 0 && used[value] {
            return None;
        }
        *slot = value;
        used[value] = true;
    }
    let mut rest = (1..=n).rev().filter(|&v| !used[v]);
    for slot in slots.iter_mut().filter(|s| **s == 0) {
        *slot = rest.next()?;
    }
    Some(Permutation::from_vec_unchecked(slots))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{}", v)?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::ParseInt(tok.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }
}

/// Values and positions of the left-to-right minima, paired positionally:
/// values strictly decreasing, positions strictly increasing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MinProfile {
    pub values: Vec<usize>,
    pub positions: Vec<usize>,
}

/// Values and positions of the right-to-left maxima, paired positionally:
/// values strictly increasing, positions strictly decreasing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MaxProfile {
    pub values: Vec<usize>,
    pub positions: Vec<usize>,
}

impl MinProfile {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `(value, position)` pairs.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.values
            .iter()
            .copied()
            .zip(self.positions.iter().copied())
    }
}

impl MaxProfile {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.values
            .iter()
            .copied()
            .zip(self.positions.iter().copied())
    }
}
